//! Text output for minimized covers: plain sum-of-products and Verilog.

use std::fmt::Write as _;

use super::minimize::{Cover, Implicant};
use super::truth_table::TruthTable;
use crate::segment::Segment;

fn literals(imp: Implicant, inputs: &[String]) -> Vec<(&str, bool)> {
    let width = inputs.len();
    inputs
        .iter()
        .enumerate()
        .filter_map(|(i, name)| {
            let bit = 1u32 << (width - 1 - i);
            (imp.mask & bit == 0).then_some((name.as_str(), imp.value & bit != 0))
        })
        .collect()
}

fn segment_name(output: usize) -> String {
    Segment::from_index(output)
        .map(|s| s.name().to_string())
        .unwrap_or_else(|| format!("y{output}"))
}

/// One line per output: `b = s4's3v0 + v1`, with `'` marking negation.
/// Constant outputs are written `= 0` or `= 1`.
pub fn emit_sop(table: &TruthTable, covers: &[Cover]) -> String {
    let inputs = table.inputs();
    let mut out = String::new();
    for cover in covers {
        let rhs = if cover.implicants.is_empty() {
            "0".to_string()
        } else {
            let products: Vec<String> = cover
                .implicants
                .iter()
                .map(|&imp| {
                    let lits = literals(imp, inputs);
                    if lits.is_empty() {
                        return "1".to_string();
                    }
                    lits.iter()
                        .map(|(n, pos)| if *pos { n.to_string() } else { format!("{n}'") })
                        .collect()
                })
                .collect();
            if products.iter().any(|p| p == "1") {
                "1".to_string()
            } else {
                products.join(" + ")
            }
        };
        let _ = writeln!(out, "{} = {rhs}", segment_name(cover.output));
    }
    out
}

/// A combinational Verilog module with one scalar port per input and output
/// and one `assign` per output mirroring [`emit_sop`].
pub fn emit_hdl(table: &TruthTable, covers: &[Cover], module: &str) -> String {
    let inputs = table.inputs();
    let outputs: Vec<String> = covers.iter().map(|c| segment_name(c.output)).collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "// Generated by seg17. Inputs are listed most significant first."
    );
    let _ = writeln!(out, "module {module} (");
    let _ = writeln!(out, "    input  wire {},", inputs.join(", "));
    let _ = writeln!(out, "    output wire {}", outputs.join(", "));
    let _ = writeln!(out, ");");
    for (cover, name) in covers.iter().zip(&outputs) {
        let rhs = if cover.implicants.is_empty() {
            "1'b0".to_string()
        } else if cover
            .implicants
            .iter()
            .any(|&i| literals(i, inputs).is_empty())
        {
            "1'b1".to_string()
        } else {
            let products: Vec<String> = cover
                .implicants
                .iter()
                .map(|&imp| {
                    let terms: Vec<String> = literals(imp, inputs)
                        .into_iter()
                        .map(|(n, pos)| if pos { n.to_string() } else { format!("~{n}") })
                        .collect();
                    format!("({})", terms.join(" & "))
                })
                .collect();
            products.join(" | ")
        };
        let _ = writeln!(out, "    assign {name} = {rhs};");
    }
    out.push_str("endmodule\n");
    out
}
