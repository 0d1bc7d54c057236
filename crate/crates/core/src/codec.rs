//! Numbers and text to segment words, and segment sets back to digits.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::segment::SegmentSet;
use crate::tables::{Registry, ScriptTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EncodedDigit {
    pub value: u32,
    pub set: SegmentSet,
    pub script_id: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecodeCandidate {
    pub script_id: u8,
    pub value: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Script(u8),
}

/// Maps each value to its glyph, keeping positions. Tamil's 10/100/1000 are
/// accepted only as standalone values; no positional expansion is done.
pub fn encode_number(script: &ScriptTable, digits: &[u32]) -> Result<Vec<EncodedDigit>> {
    digits
        .iter()
        .enumerate()
        .map(|(position, &value)| {
            let set = script.glyph(value).map_err(|_| Error::UnsupportedValueAt {
                script: script.key.clone(),
                position,
                value,
            })?;
            Ok(EncodedDigit {
                value,
                set,
                script_id: script.id,
            })
        })
        .collect()
}

/// Accepts ASCII digits and the script's own native digits. Digits of any
/// other script are rejected.
pub fn encode_text(script: &ScriptTable, text: &str) -> Result<Vec<EncodedDigit>> {
    let values = text
        .chars()
        .enumerate()
        .map(|(index, ch)| {
            script.char_value(ch).ok_or(Error::UnmappableChar {
                script: script.key.clone(),
                index,
                ch,
                codepoint: ch as u32,
            })
        })
        .collect::<Result<Vec<u32>>>()?;
    encode_number(script, &values)
}

/// Exact-match reverse lookup, ordered by (script id, value).
pub fn decode_set(registry: &Registry, set: SegmentSet, scope: Scope) -> Vec<DecodeCandidate> {
    registry
        .rows()
        .filter(|&(id, _, s)| s == set && scope.includes(id))
        .map(|(script_id, value, _)| DecodeCandidate { script_id, value })
        .collect()
}

impl Scope {
    fn includes(self, id: u8) -> bool {
        match self {
            Scope::All => true,
            Scope::Script(s) => s == id,
        }
    }
}

/// Every pattern matched by two or more rows, ordered by packed word.
pub fn collision_report(registry: &Registry) -> Vec<(SegmentSet, Vec<DecodeCandidate>)> {
    let mut groups: BTreeMap<SegmentSet, Vec<DecodeCandidate>> = BTreeMap::new();
    for (script_id, value, set) in registry.rows() {
        groups
            .entry(set)
            .or_default()
            .push(DecodeCandidate { script_id, value });
    }
    groups.into_iter().filter(|(_, c)| c.len() > 1).collect()
}
