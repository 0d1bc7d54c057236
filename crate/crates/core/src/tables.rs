//! Script glyph tables and the SEGTAB/1 text format.
//!
//! A [`Registry`] holds one [`ScriptTable`] per script. Several languages may
//! share a table (Bengali and Assamese, or the six Devanagari languages), so
//! lookups go through an alias index that resolves table keys and language
//! names case-insensitively.
//!
//! SEGTAB/1 layout:
//!
//! ```text
//! SEGTAB/1
//! # comment
//! script 0 bengali "Bengali" langs=Bengali,Assamese zero=U+09E6
//! glyph 0 a1,a2,b,c,d1,d2,e,f
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::segment::SegmentSet;

/// The embedded canonical transcription of all 17 script tables.
pub const CANONICAL_SEGTAB: &str = include_str!("../data/canonical.segtab");

pub const MAGIC: &str = "SEGTAB/1";

/// Non-positional values carried by tables with extension rows (Tamil).
pub const EXTENSION_VALUES: [u32; 3] = [10, 100, 1000];

/// Script ids are carried on five select lines.
pub const MAX_SCRIPTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptTable {
    pub id: u8,
    pub key: String,
    pub display_name: String,
    pub languages: Vec<String>,
    pub glyphs: BTreeMap<u32, SegmentSet>,
    /// The script's native digit zero, when its digits form a contiguous block.
    pub zero: Option<char>,
}

impl ScriptTable {
    pub fn glyph(&self, value: u32) -> Result<SegmentSet> {
        self.glyphs
            .get(&value)
            .copied()
            .ok_or_else(|| Error::UnsupportedValue {
                script: self.key.clone(),
                value,
            })
    }

    /// Supported values in ascending order.
    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.glyphs.keys().copied()
    }

    pub fn has_extension(&self) -> bool {
        EXTENSION_VALUES.iter().any(|v| self.glyphs.contains_key(v))
    }

    /// Maps an ASCII digit or one of this script's native digits to its value.
    ///
    /// For tables with extension rows the three codepoints following the
    /// native nine map to 10, 100 and 1000 (U+0BF0..U+0BF2 for Tamil).
    pub fn char_value(&self, ch: char) -> Option<u32> {
        if let Some(d) = ch.to_digit(10).filter(|_| ch.is_ascii_digit()) {
            return Some(d);
        }
        let zero = self.zero? as u32;
        let offset = (ch as u32).checked_sub(zero)?;
        match offset {
            0..=9 => Some(offset),
            10..=12 if self.has_extension() => Some(EXTENSION_VALUES[(offset - 10) as usize]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Registry {
    tables: Vec<ScriptTable>,
    aliases: BTreeMap<String, usize>,
}

impl Registry {
    /// Builds a registry without validating it. Tables are ordered by id; on
    /// alias conflicts the lower id wins (and [`validate`] reports an error).
    pub fn from_tables(mut tables: Vec<ScriptTable>) -> Registry {
        tables.sort_by_key(|t| t.id);
        let mut aliases = BTreeMap::new();
        for (idx, t) in tables.iter().enumerate() {
            for name in std::iter::once(&t.key).chain(&t.languages) {
                aliases.entry(name.to_lowercase()).or_insert(idx);
            }
        }
        Registry { tables, aliases }
    }

    /// The embedded canonical registry, parsed once.
    pub fn canonical() -> &'static Registry {
        static CANONICAL: OnceLock<Registry> = OnceLock::new();
        CANONICAL.get_or_init(|| {
            load_tables(CANONICAL_SEGTAB).expect("embedded canonical tables are valid")
        })
    }

    pub fn tables(&self) -> &[ScriptTable] {
        &self.tables
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn by_id(&self, id: u8) -> Option<&ScriptTable> {
        self.tables.iter().find(|t| t.id == id)
    }

    /// Lowercased alias -> table id, for every key and language name.
    pub fn aliases(&self) -> impl Iterator<Item = (&str, u8)> + '_ {
        self.aliases
            .iter()
            .map(|(name, &idx)| (name.as_str(), self.tables[idx].id))
    }

    /// Resolves a table key or a language name, ignoring case.
    pub fn lookup_script(&self, name: &str) -> Result<&ScriptTable> {
        self.aliases
            .get(&name.trim().to_lowercase())
            .map(|&idx| &self.tables[idx])
            .ok_or_else(|| Error::UnknownScript {
                name: name.to_string(),
                valid: self.aliases.keys().cloned().collect(),
            })
    }

    /// All (script id, value, set) rows in (id, value) order.
    pub fn rows(&self) -> impl Iterator<Item = (u8, u32, SegmentSet)> + '_ {
        self.tables
            .iter()
            .flat_map(|t| t.glyphs.iter().map(move |(&v, &s)| (t.id, v, s)))
    }

    pub fn glyph_count(&self) -> usize {
        self.tables.iter().map(|t| t.glyphs.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// Two or more values of one table share a pattern.
    DuplicateInTable {
        script_id: u8,
        set: SegmentSet,
        values: Vec<u32>,
    },
    /// A pattern appears in more than one table.
    CrossTable {
        set: SegmentSet,
        rows: Vec<(u8, u32)>,
    },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::DuplicateInTable {
                script_id,
                set,
                values,
            } => {
                write!(f, "script {script_id}: values ")?;
                for (n, v) in values.iter().enumerate() {
                    if n > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, " share pattern {{{set}}}")
            }
            Warning::CrossTable { set, rows } => {
                write!(f, "pattern {{{set}}} ({}) shared by", set.to_hex())?;
                for (id, v) in rows {
                    write!(f, " {id}:{v}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub errors: Vec<String>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Structural checks plus duplicate-pattern findings. Findings are ordered
/// deterministically: errors by table id, in-table duplicates by (id, word),
/// cross-table collisions by word.
pub fn validate(registry: &Registry) -> ValidationReport {
    let mut report = ValidationReport::default();
    let tables = registry.tables();
    let errors = &mut report.errors;

    if tables.is_empty() {
        errors.push("registry has no script tables".into());
    }
    if tables.len() > MAX_SCRIPTS {
        errors.push(format!(
            "registry has {} tables; at most {MAX_SCRIPTS} fit the script select lines",
            tables.len()
        ));
    }
    for (pos, t) in tables.iter().enumerate() {
        if usize::from(t.id) != pos {
            errors.push(format!(
                "script ids must run 0..{} without gaps; found id {} at position {pos}",
                tables.len(),
                t.id
            ));
            break;
        }
    }

    let mut owners: BTreeMap<String, u8> = BTreeMap::new();
    for t in tables {
        if !is_valid_key(&t.key) {
            errors.push(format!("script {}: invalid key {:?}", t.id, t.key));
        }
        if t.languages.is_empty() {
            errors.push(format!("script {}: no languages listed", t.key));
        }
        let names: BTreeSet<String> = std::iter::once(&t.key)
            .chain(&t.languages)
            .map(|n| n.to_lowercase())
            .collect();
        for name in names {
            if let Some(&other) = owners.get(&name) {
                errors.push(format!(
                    "name {name:?} is claimed by scripts {other} and {}",
                    t.id
                ));
            } else {
                owners.insert(name, t.id);
            }
        }

        let missing: Vec<String> = (0..10)
            .filter(|v| !t.glyphs.contains_key(v))
            .map(|v| v.to_string())
            .collect();
        if !missing.is_empty() {
            errors.push(format!(
                "script {}: incomplete digit coverage (missing {})",
                t.key,
                missing.join(", ")
            ));
        }
        let ext = EXTENSION_VALUES
            .iter()
            .filter(|v| t.glyphs.contains_key(v))
            .count();
        if ext != 0 && ext != EXTENSION_VALUES.len() {
            errors.push(format!(
                "script {}: incomplete extension rows (10, 100 and 1000 must appear together)",
                t.key
            ));
        }
        for (&v, set) in &t.glyphs {
            if v >= 10 && !EXTENSION_VALUES.contains(&v) {
                errors.push(format!("script {}: unsupported digit value {v}", t.key));
            }
            if set.is_empty() {
                errors.push(format!(
                    "script {}: value {v} has an empty segment set",
                    t.key
                ));
            }
        }
    }

    for t in tables {
        let mut by_set: BTreeMap<SegmentSet, Vec<u32>> = BTreeMap::new();
        for (&v, &s) in &t.glyphs {
            by_set.entry(s).or_default().push(v);
        }
        for (set, values) in by_set {
            if values.len() > 1 {
                report.warnings.push(Warning::DuplicateInTable {
                    script_id: t.id,
                    set,
                    values,
                });
            }
        }
    }

    let mut by_set: BTreeMap<SegmentSet, Vec<(u8, u32)>> = BTreeMap::new();
    for (id, v, s) in registry.rows() {
        by_set.entry(s).or_default().push((id, v));
    }
    for (set, rows) in by_set {
        let distinct: BTreeSet<u8> = rows.iter().map(|r| r.0).collect();
        if distinct.len() > 1 {
            report.warnings.push(Warning::CrossTable { set, rows });
        }
    }

    report
}

fn is_valid_key(key: &str) -> bool {
    !key.is_empty()
        && key
            .chars()
            .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-' || c == '_')
}

/// Parses SEGTAB/1 text without validating coverage.
pub fn parse_tables(source: &str) -> Result<Registry> {
    let source = source.strip_prefix('\u{feff}').unwrap_or(source);
    let mut lines = source.lines().enumerate().map(|(i, l)| (i + 1, l));
    let perr = |line: usize, message: String| Error::Parse { line, message };

    match lines.next() {
        Some((_, l)) if l.trim() == MAGIC => {}
        Some((n, l)) => return Err(perr(n, format!("expected {MAGIC:?}, found {:?}", l.trim()))),
        None => return Err(perr(1, format!("empty input; expected {MAGIC:?}"))),
    }

    let mut tables: Vec<ScriptTable> = Vec::new();
    for (n, raw) in lines {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match kw {
            "script" => {
                let table = parse_header(rest.trim()).map_err(|m| perr(n, m))?;
                if tables.iter().any(|t| t.id == table.id) {
                    return Err(perr(n, format!("duplicate script id {}", table.id)));
                }
                tables.push(table);
            }
            "glyph" => {
                let table = tables
                    .last_mut()
                    .ok_or_else(|| perr(n, "glyph row before any script header".into()))?;
                let (value, list) = rest
                    .trim()
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| perr(n, "glyph row needs a value and a segment list".into()))?;
                let value: u32 = value
                    .parse()
                    .map_err(|_| perr(n, format!("invalid glyph value {value:?}")))?;
                let set: SegmentSet = list.parse().map_err(|e| perr(n, format!("{e}")))?;
                if table.glyphs.insert(value, set).is_some() {
                    return Err(perr(
                        n,
                        format!("duplicate glyph value {value} in script {}", table.key),
                    ));
                }
            }
            other => return Err(perr(n, format!("unknown directive {other:?}"))),
        }
    }
    Ok(Registry::from_tables(tables))
}

fn parse_header(rest: &str) -> std::result::Result<ScriptTable, String> {
    let mut it = rest.splitn(3, char::is_whitespace);
    let id = it.next().unwrap_or("");
    let id: u8 = id
        .parse()
        .map_err(|_| format!("invalid script id {id:?}"))?;
    let key = it.next().ok_or("missing script key")?.to_string();
    let rest = it.next().unwrap_or("").trim_start();

    let rest = rest
        .strip_prefix('"')
        .ok_or("display name must be double-quoted")?;
    let (display_name, attrs) = rest.split_once('"').ok_or("unterminated display name")?;

    let mut languages = None;
    let mut zero = None;
    for attr in attrs.split_whitespace() {
        match attr.split_once('=') {
            Some(("langs", v)) => {
                languages = Some(
                    v.split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(String::from)
                        .collect(),
                )
            }
            Some(("zero", v)) => zero = Some(parse_zero(v)?),
            _ => return Err(format!("unexpected attribute {attr:?}")),
        }
    }
    Ok(ScriptTable {
        id,
        key,
        display_name: display_name.to_string(),
        languages: languages.ok_or("missing langs= attribute")?,
        glyphs: BTreeMap::new(),
        zero: zero.ok_or("missing zero= attribute")?,
    })
}

fn parse_zero(v: &str) -> std::result::Result<Option<char>, String> {
    if v == "none" {
        return Ok(None);
    }
    let hex = v
        .strip_prefix("U+")
        .ok_or_else(|| format!("zero must be U+XXXX or none, found {v:?}"))?;
    u32::from_str_radix(hex, 16)
        .ok()
        .and_then(char::from_u32)
        .map(Some)
        .ok_or_else(|| format!("invalid codepoint {v:?}"))
}

/// Parses and validates SEGTAB/1 text.
pub fn load_tables(source: &str) -> Result<Registry> {
    let registry = parse_tables(source)?;
    let report = validate(&registry);
    if !report.is_ok() {
        return Err(Error::Invalid(report.errors));
    }
    Ok(registry)
}

/// Serializes a registry to SEGTAB/1 in normal form: tables in id order,
/// glyph rows in value order, segment names in canonical order.
pub fn emit_tables(registry: &Registry) -> String {
    let mut out = String::from(MAGIC);
    out.push('\n');
    for t in registry.tables() {
        let zero = t
            .zero
            .map(|c| format!("U+{:04X}", c as u32))
            .unwrap_or_else(|| "none".into());
        out.push_str(&format!(
            "\nscript {} {} \"{}\" langs={} zero={}\n",
            t.id,
            t.key,
            t.display_name,
            t.languages.join(","),
            zero
        ));
        for (v, s) in &t.glyphs {
            out.push_str(&format!("glyph {v} {s}\n"));
        }
    }
    out
}
