use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown segment name {0:?}")]
    UnknownSegment(String),

    #[error("segment word {0:#x} is out of range (must be below 0x20000)")]
    WordOutOfRange(u32),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("table validation failed: {}", .0.join("; "))]
    Invalid(Vec<String>),

    #[error("unknown script {name:?}; valid names: {}", .valid.join(", "))]
    UnknownScript { name: String, valid: Vec<String> },

    #[error("script {script} has no glyph for value {value}")]
    UnsupportedValue { script: String, value: u32 },

    #[error("position {position}: script {script} has no glyph for value {value}")]
    UnsupportedValueAt {
        script: String,
        position: usize,
        value: u32,
    },

    #[error(
        "character {ch:?} (U+{codepoint:04X}) at index {index} is not a digit of script {script}"
    )]
    UnmappableChar {
        script: String,
        index: usize,
        ch: char,
        codepoint: u32,
    },

    #[error("nothing to render")]
    EmptyInput,

    #[error("invalid display configuration: {0}")]
    Config(String),

    #[error("position {position} out of range for a {positions}-position display")]
    PositionOutOfRange { position: usize, positions: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
