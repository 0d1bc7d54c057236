use crate::segment::{SegmentSet, SEGMENT_COUNT};
use crate::tables::{Registry, ScriptTable, EXTENSION_VALUES};

/// Bits of script select and digit code on the full decoder.
pub const SCRIPT_BITS: u32 = 5;
pub const DIGIT_BITS: u32 = 4;
pub const FULL_WIDTH: u32 = SCRIPT_BITS + DIGIT_BITS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ternary {
    Zero,
    One,
    DontCare,
}

/// Digit code carried on the four value lines: 0..9 as themselves, then the
/// extension values 10, 100, 1000 on codes 10, 11, 12.
pub fn digit_code(value: u32) -> Option<u32> {
    match value {
        0..=9 => Some(value),
        _ => EXTENSION_VALUES
            .iter()
            .position(|&v| v == value)
            .map(|i| 10 + i as u32),
    }
}

pub fn code_value(code: u32) -> Option<u32> {
    match code {
        0..=9 => Some(code),
        10..=12 => Some(EXTENSION_VALUES[(code - 10) as usize]),
        _ => None,
    }
}

/// A multi-output boolean function with don't-cares.
///
/// Input names are listed most significant first; input point `x` assigns
/// `inputs[i]` the value of bit `width - 1 - i` of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    inputs: Vec<String>,
    outputs: Vec<Vec<Ternary>>,
}

impl TruthTable {
    /// Panics if any output column does not have `2^inputs.len()` entries.
    pub fn new(inputs: Vec<String>, outputs: Vec<Vec<Ternary>>) -> TruthTable {
        let points = 1usize << inputs.len();
        assert!(inputs.len() <= 16, "too many inputs");
        for col in &outputs {
            assert_eq!(col.len(), points, "output column length must be 2^width");
        }
        TruthTable { inputs, outputs }
    }

    /// Single-output table from onset and don't-care point lists; all other
    /// points are offset.
    pub fn single(width: u32, onset: &[u32], dc: &[u32]) -> TruthTable {
        let mut col = vec![Ternary::Zero; 1 << width];
        for &p in dc {
            col[p as usize] = Ternary::DontCare;
        }
        for &p in onset {
            col[p as usize] = Ternary::One;
        }
        let inputs = (0..width).rev().map(|b| format!("x{b}")).collect();
        TruthTable::new(inputs, vec![col])
    }

    pub fn width(&self) -> u32 {
        self.inputs.len() as u32
    }

    pub fn points(&self) -> u32 {
        1 << self.width()
    }

    pub fn inputs(&self) -> &[String] {
        &self.inputs
    }

    pub fn output_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn get(&self, output: usize, point: u32) -> Ternary {
        self.outputs[output][point as usize]
    }

    fn select(&self, output: usize, want: Ternary) -> Vec<u32> {
        self.outputs[output]
            .iter()
            .enumerate()
            .filter(|(_, &t)| t == want)
            .map(|(p, _)| p as u32)
            .collect()
    }

    pub fn onset(&self, output: usize) -> Vec<u32> {
        self.select(output, Ternary::One)
    }

    pub fn offset(&self, output: usize) -> Vec<u32> {
        self.select(output, Ternary::Zero)
    }

    pub fn dc_set(&self, output: usize) -> Vec<u32> {
        self.select(output, Ternary::DontCare)
    }

    /// Points that are specified for at least one output.
    pub fn care_points(&self) -> Vec<u32> {
        (0..self.points())
            .filter(|&p| {
                self.outputs
                    .iter()
                    .any(|c| c[p as usize] != Ternary::DontCare)
            })
            .collect()
    }

    /// Same table with every don't-care turned into offset.
    pub fn without_dont_cares(&self) -> TruthTable {
        let outputs = self
            .outputs
            .iter()
            .map(|col| {
                col.iter()
                    .map(|&t| {
                        if t == Ternary::DontCare {
                            Ternary::Zero
                        } else {
                            t
                        }
                    })
                    .collect()
            })
            .collect();
        TruthTable::new(self.inputs.clone(), outputs)
    }

    /// 3-byte little-endian words, one per input point; don't-care bits
    /// read as 0.
    pub fn to_lut(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.points() as usize * 3);
        for p in 0..self.points() {
            let word = (0..self.outputs.len())
                .filter(|&k| self.get(k, p) == Ternary::One)
                .fold(0u32, |w, k| w | 1 << k);
            out.extend_from_slice(&word.to_le_bytes()[..3]);
        }
        out
    }
}

fn segment_outputs(width: u32, rows: impl Iterator<Item = (u32, SegmentSet)>) -> Vec<Vec<Ternary>> {
    let mut outputs = vec![vec![Ternary::DontCare; 1 << width]; SEGMENT_COUNT];
    for (point, set) in rows {
        for (k, col) in outputs.iter_mut().enumerate() {
            col[point as usize] = if set.word() >> k & 1 == 1 {
                Ternary::One
            } else {
                Ternary::Zero
            };
        }
    }
    outputs
}

fn names(prefix: char, bits: u32) -> impl Iterator<Item = String> {
    (0..bits).rev().map(move |b| format!("{prefix}{b}"))
}

/// The full decoder: inputs s4..s0 (script id) and v3..v0 (digit code),
/// one output per segment.
pub fn build_truth_table(registry: &Registry) -> TruthTable {
    let rows = registry.rows().filter_map(|(id, value, set)| {
        digit_code(value).map(|code| ((u32::from(id) << DIGIT_BITS) | code, set))
    });
    let inputs = names('s', SCRIPT_BITS)
        .chain(names('v', DIGIT_BITS))
        .collect();
    TruthTable::new(inputs, segment_outputs(FULL_WIDTH, rows))
}

/// A decoder for one script: only the digit code lines remain.
pub fn build_script_truth_table(table: &ScriptTable) -> TruthTable {
    let rows = table
        .glyphs
        .iter()
        .filter_map(|(&value, &set)| digit_code(value).map(|code| (code, set)));
    TruthTable::new(
        names('v', DIGIT_BITS).collect(),
        segment_outputs(DIGIT_BITS, rows),
    )
}

/// The full decoder's lookup table: 512 entries of 3 bytes.
pub fn emit_lut(registry: &Registry) -> Vec<u8> {
    build_truth_table(registry).to_lut()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segment::Segment;

    #[test]
    fn full_table_shape() {
        let r = Registry::canonical();
        let t = build_truth_table(r);
        assert_eq!(t.width(), 9);
        assert_eq!(t.output_count(), 17);
        assert_eq!(t.care_points().len(), 173);
        let english = u32::from(r.lookup_script("english").unwrap().id);
        let p = english << 4 | 1;
        assert_eq!(t.get(Segment::B.index(), p), Ternary::One);
        assert_eq!(t.get(Segment::A1.index(), p), Ternary::Zero);
        for v in 0..16 {
            for k in 0..17 {
                assert_eq!(t.get(k, 25 << 4 | v), Ternary::DontCare);
            }
        }
        let tamil = u32::from(r.lookup_script("tamil").unwrap().id);
        for code in 10..13 {
            assert_ne!(t.get(0, tamil << 4 | code), Ternary::DontCare);
            assert_eq!(t.get(0, english << 4 | code), Ternary::DontCare);
        }
        for k in 0..17 {
            let (on, off, dc) = (t.onset(k), t.offset(k), t.dc_set(k));
            assert_eq!(on.len() + off.len() + dc.len(), 512);
            assert_eq!(on.len() + off.len(), 173);
        }
        assert_eq!(t.inputs()[0], "s4");
        assert_eq!(t.inputs()[8], "v0");
    }

    #[test]
    fn digit_codes() {
        assert_eq!(digit_code(7), Some(7));
        assert_eq!(digit_code(10), Some(10));
        assert_eq!(digit_code(100), Some(11));
        assert_eq!(digit_code(1000), Some(12));
        assert_eq!(digit_code(11), None);
        for code in 0..13 {
            assert_eq!(digit_code(code_value(code).unwrap()), Some(code));
        }
        assert_eq!(code_value(13), None);
    }

    #[test]
    fn lut_examples() {
        let r = Registry::canonical();
        let lut = emit_lut(r);
        assert_eq!(lut.len(), 1536);
        let english = usize::from(r.lookup_script("english").unwrap().id);
        let at = |p: usize| &lut[p * 3..p * 3 + 3];
        assert_eq!(at(english << 4 | 1), &[0x0C, 0x00, 0x00]);
        assert_eq!(at(31 << 4 | 3), &[0, 0, 0]);
        for (id, v, set) in r.rows() {
            let p = (usize::from(id) << 4) | digit_code(v).unwrap() as usize;
            let e = at(p);
            assert_eq!(u32::from_le_bytes([e[0], e[1], e[2], 0]), set.word());
            assert_eq!(e[2] & 0xFE, 0);
        }
    }
}
