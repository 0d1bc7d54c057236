//! Decoder synthesis: truth table, minimized covers, and SOP/HDL/LUT output.
//!
//! The full decoder has nine inputs, `s4..s0` selecting the script table and
//! `v3..v0` carrying the digit code, and one output per segment. Unused
//! script ids and digit codes are don't-cares, which the minimizer exploits.

mod emit;
mod minimize;
mod truth_table;

pub use emit::{emit_hdl, emit_sop};
pub use minimize::{
    minimize, minimize_all, prime_implicants, verify_cover, Cover, Equivalence, Implicant,
    PETRICK_MAX_MINTERMS, PETRICK_MAX_PRIMES,
};
pub use truth_table::{
    build_script_truth_table, build_truth_table, code_value, digit_code, emit_lut, Ternary,
    TruthTable, DIGIT_BITS, FULL_WIDTH, SCRIPT_BITS,
};
