//! The 17 display segments and their packed-word representation.
//!
//! Segments are numbered in a fixed canonical order; bit `k` of a packed
//! word is segment `k`:
//!
//! ```text
//! a1=0 a2=1 b=2 c=3 d1=4 d2=5 e=6 f=7 g1=8 g2=9 h=10 i=11 j=12 k=13 l=14 m=15 p=16
//! ```
//!
//! Only the integer value of a word is meaningful. No byte layout is implied.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of segments on the display.
pub const SEGMENT_COUNT: usize = 17;

/// Mask of all valid bits in a packed word.
pub const WORD_MASK: u32 = (1 << SEGMENT_COUNT) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Segment {
    A1 = 0,
    A2,
    B,
    C,
    D1,
    D2,
    E,
    F,
    G1,
    G2,
    H,
    I,
    J,
    K,
    L,
    M,
    /// The extra segment in the lower half, left of the centre column.
    P,
}

impl Segment {
    /// All segments in canonical order.
    pub const ALL: [Segment; SEGMENT_COUNT] = [
        Segment::A1,
        Segment::A2,
        Segment::B,
        Segment::C,
        Segment::D1,
        Segment::D2,
        Segment::E,
        Segment::F,
        Segment::G1,
        Segment::G2,
        Segment::H,
        Segment::I,
        Segment::J,
        Segment::K,
        Segment::L,
        Segment::M,
        Segment::P,
    ];

    const NAMES: [&'static str; SEGMENT_COUNT] = [
        "a1", "a2", "b", "c", "d1", "d2", "e", "f", "g1", "g2", "h", "i", "j", "k", "l", "m", "p",
    ];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub const fn bit(self) -> u32 {
        1 << self as u32
    }

    pub fn from_index(index: usize) -> Option<Segment> {
        Self::ALL.get(index).copied()
    }

    pub fn name(self) -> &'static str {
        Self::NAMES[self.index()]
    }

    /// Case-insensitive name lookup; surrounding whitespace is ignored.
    pub fn parse(text: &str) -> Result<Segment> {
        let token = text.trim();
        Self::NAMES
            .iter()
            .position(|n| n.eq_ignore_ascii_case(token))
            .map(|i| Self::ALL[i])
            .ok_or_else(|| Error::UnknownSegment(token.to_string()))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Segment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Segment::parse(s)
    }
}

/// A set of lit segments, packed into a 17-bit word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegmentSet(u32);

impl SegmentSet {
    pub const EMPTY: SegmentSet = SegmentSet(0);
    pub const FULL: SegmentSet = SegmentSet(WORD_MASK);

    /// Builds a set from a packed word, rejecting bits above bit 16.
    pub fn from_word(word: u32) -> Result<SegmentSet> {
        if word & !WORD_MASK != 0 {
            return Err(Error::WordOutOfRange(word));
        }
        Ok(SegmentSet(word))
    }

    pub fn pack<I: IntoIterator<Item = Segment>>(segments: I) -> SegmentSet {
        segments.into_iter().collect()
    }

    #[inline]
    pub const fn word(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains(self, segment: Segment) -> bool {
        self.0 & segment.bit() != 0
    }

    pub fn insert(&mut self, segment: Segment) {
        self.0 |= segment.bit();
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Lit segments in canonical order.
    pub fn iter(self) -> impl Iterator<Item = Segment> {
        Segment::ALL.into_iter().filter(move |s| self.contains(*s))
    }

    pub fn unpack(self) -> Vec<Segment> {
        self.iter().collect()
    }

    /// Parses a comma-separated name list such as `a1,a2,b,c`. Order and
    /// repetition do not matter; an empty or blank string is the empty set.
    pub fn parse_list(text: &str) -> Result<SegmentSet> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(SegmentSet::EMPTY);
        }
        text.split(',').map(Segment::parse).collect()
    }

    /// `0x` followed by five uppercase hex digits.
    pub fn to_hex(self) -> String {
        format!("0x{:05X}", self.0)
    }

    /// Seventeen binary digits, bit 16 first.
    pub fn to_bin(self) -> String {
        format!("{:017b}", self.0)
    }
}

impl FromIterator<Segment> for SegmentSet {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        SegmentSet(iter.into_iter().fold(0, |w, s| w | s.bit()))
    }
}

impl<'a> FromIterator<&'a Segment> for SegmentSet {
    fn from_iter<I: IntoIterator<Item = &'a Segment>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl TryFrom<u32> for SegmentSet {
    type Error = Error;

    fn try_from(word: u32) -> Result<Self> {
        SegmentSet::from_word(word)
    }
}

/// Comma-separated names in canonical order, e.g. `b,c`.
impl fmt::Display for SegmentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, s) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            f.write_str(s.name())?;
        }
        Ok(())
    }
}

impl FromStr for SegmentSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SegmentSet::parse_list(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_indices() {
        assert_eq!(Segment::A1.index(), 0);
        assert_eq!(Segment::P.index(), 16);
        assert_eq!(Segment::G2.index(), 9);
        for (i, s) in Segment::ALL.iter().enumerate() {
            assert_eq!(s.index(), i);
            assert_eq!(Segment::from_index(i), Some(*s));
        }
        assert_eq!(Segment::from_index(17), None);
    }

    #[test]
    fn parse_names() {
        assert_eq!(Segment::parse("d1").unwrap(), Segment::D1);
        assert_eq!(Segment::parse("P").unwrap(), Segment::P);
        assert_eq!(Segment::parse("  g2 ").unwrap(), Segment::G2);
        match Segment::parse("q") {
            Err(Error::UnknownSegment(t)) => assert_eq!(t, "q"),
            other => panic!("unexpected {other:?}"),
        }
        for s in Segment::ALL {
            assert_eq!(s.name().parse::<Segment>().unwrap(), s);
        }
    }

    #[test]
    fn pack_examples() {
        assert_eq!(SegmentSet::pack([]).word(), 0x00000);
        assert_eq!(SegmentSet::pack(Segment::ALL).word(), 0x1FFFF);
        assert_eq!(SegmentSet::pack([Segment::B, Segment::C]).word(), 0x0000C);
    }

    #[test]
    fn unpack_examples() {
        assert!(SegmentSet::from_word(0).unwrap().unpack().is_empty());
        assert_eq!(
            SegmentSet::from_word(0x0000C).unwrap().unpack(),
            vec![Segment::B, Segment::C]
        );
        assert_eq!(
            SegmentSet::from_word(0x20000),
            Err(Error::WordOutOfRange(0x20000))
        );
    }

    #[test]
    fn list_text() {
        let set: SegmentSet = "c, B,c".parse().unwrap();
        assert_eq!(set.to_string(), "b,c");
        assert_eq!(set.to_hex(), "0x0000C");
        assert_eq!(set.to_bin(), "00000000000001100");
        assert_eq!("".parse::<SegmentSet>().unwrap(), SegmentSet::EMPTY);
        assert!("a1,z".parse::<SegmentSet>().is_err());
    }

    #[test]
    fn pack_unpack_exhaustive() {
        for w in 0..=WORD_MASK {
            let set = SegmentSet::from_word(w).unwrap();
            assert_eq!(SegmentSet::pack(set.unpack()), set);
        }
    }

    proptest! {
        #[test]
        fn cardinality_preserved(picks in proptest::collection::vec(0usize..17, 0..40)) {
            let segs: std::collections::BTreeSet<Segment> =
                picks.iter().map(|&i| Segment::ALL[i]).collect();
            let set = SegmentSet::pack(segs.iter().copied());
            prop_assert_eq!(set.len(), segs.len());
            prop_assert_eq!(set.unpack(), segs.into_iter().collect::<Vec<_>>());
        }
    }
}
