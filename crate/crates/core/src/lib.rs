//! A 17-segment numeral display toolkit covering the digits of the 22 Indian
//! scheduled languages and English.
//!
//! The display is the classic 16-segment layout plus one extra stroke, `p`,
//! in the lower left. This crate carries the digit tables for all 17 script
//! groups and builds on them:
//!
//! * [`segment`]: the 17 segments and 17-bit packed words
//! * [`tables`]: the script registry and the SEGTAB/1 file format
//! * [`codec`]: digits and text to segment words, and reverse lookup
//! * [`render`]: SVG and terminal drawing
//! * [`synth`]: decoder truth table, two-level minimization, SOP/Verilog/LUT output
//! * [`sim`]: multiplexed driver trace simulation
//!
//! ```
//! use seg17::{codec, Registry};
//!
//! let registry = Registry::canonical();
//! let hindi = registry.lookup_script("Hindi").unwrap();
//! let digits = codec::encode_text(hindi, "४२").unwrap();
//! assert_eq!(digits[0].set.to_string(), "d1,h,j,l,m");
//! ```

pub mod codec;
pub mod error;
pub mod render;
pub mod segment;
pub mod sim;
pub mod synth;
pub mod tables;

pub use codec::{DecodeCandidate, EncodedDigit, Scope};
pub use error::{Error, Result};
pub use render::{GeometrySpec, RenderStyle};
pub use segment::{Segment, SegmentSet, SEGMENT_COUNT, WORD_MASK};
pub use sim::{DisplayConfig, FrameTrace, Tick};
pub use synth::{Cover, Implicant, TruthTable};
pub use tables::{Registry, ScriptTable, ValidationReport, Warning};
