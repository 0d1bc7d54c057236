//! SVG and terminal rendering of segment sets.
//!
//! Geometry lives in a normalized cell one unit wide and two units tall with
//! y growing downward. Every segment is a straight stroke between two points.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::segment::{Segment, SegmentSet, SEGMENT_COUNT};

pub type Point = (f64, f64);

#[derive(Debug, Clone, PartialEq)]
pub struct GeometrySpec {
    /// Stroke endpoints indexed by segment index.
    pub shapes: [[Point; 2]; SEGMENT_COUNT],
    /// Stroke width as a fraction of the cell width.
    pub stroke_width: f64,
    /// Space between adjacent digits as a fraction of the cell width.
    pub gap: f64,
}

impl GeometrySpec {
    pub fn shape(&self, segment: Segment) -> [Point; 2] {
        self.shapes[segment.index()]
    }
}

const SHAPES: [[Point; 2]; SEGMENT_COUNT] = [
    [(0.0, 0.0), (0.5, 0.0)], // a1
    [(0.5, 0.0), (1.0, 0.0)], // a2
    [(1.0, 0.0), (1.0, 1.0)], // b
    [(1.0, 1.0), (1.0, 2.0)], // c
    [(0.0, 2.0), (0.5, 2.0)], // d1
    [(0.5, 2.0), (1.0, 2.0)], // d2
    [(0.0, 1.0), (0.0, 2.0)], // e
    [(0.0, 0.0), (0.0, 1.0)], // f
    [(0.0, 1.0), (0.5, 1.0)], // g1
    [(0.5, 1.0), (1.0, 1.0)], // g2
    [(0.0, 0.0), (0.5, 1.0)], // h
    [(0.5, 0.0), (0.5, 1.0)], // i
    [(1.0, 0.0), (0.5, 1.0)], // j
    [(0.5, 1.0), (0.0, 2.0)], // k
    [(0.5, 1.0), (0.5, 2.0)], // l
    [(0.5, 1.0), (1.0, 2.0)], // m
    // p sits midway between the middle and bottom bars, left half only.
    [(0.0, 1.5), (0.5, 1.5)],
];

/// The built-in 17-segment layout.
pub fn geometry() -> GeometrySpec {
    GeometrySpec {
        shapes: SHAPES,
        stroke_width: 0.08,
        gap: 0.25,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub on_color: String,
    /// Colour of unlit segments; drawn only when `show_off` is set.
    pub off_color: String,
    pub background: String,
    /// Pixels per cell width.
    pub scale: f64,
    pub show_off: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            on_color: "#ff3b1f".into(),
            off_color: "#3a1a14".into(),
            background: "#111111".into(),
            scale: 40.0,
            show_off: false,
        }
    }
}

/// Renders a row of digits as an SVG 1.1 document.
///
/// Every drawn segment is one `<polyline>` with class `on` or `off`, so the
/// lit-segment count can be recovered from the text.
pub fn render_svg(sets: &[SegmentSet], style: &RenderStyle) -> Result<String> {
    if sets.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(style.scale.is_finite() && style.scale > 0.0) {
        return Err(Error::Config(format!(
            "scale must be positive, got {}",
            style.scale
        )));
    }
    let geo = geometry();
    let s = style.scale;
    let margin = geo.gap * s;
    let pitch = (1.0 + geo.gap) * s;
    let n = sets.len() as f64;
    let width = 2.0 * margin + n * s + (n - 1.0) * geo.gap * s;
    let height = 2.0 * margin + 2.0 * s;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
        num(width),
        num(height),
        style.background
    );
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke-linecap=\"round\" stroke-width=\"{}\">",
        num(geo.stroke_width * s)
    );
    for (pos, set) in sets.iter().enumerate() {
        let ox = margin + pos as f64 * pitch;
        let _ = writeln!(out, "<g id=\"digit{pos}\">");
        for seg in Segment::ALL {
            let lit = set.contains(seg);
            if !lit && !style.show_off {
                continue;
            }
            let [(x1, y1), (x2, y2)] = geo.shape(seg);
            let _ = writeln!(
                out,
                "<polyline class=\"{}\" data-seg=\"{}\" points=\"{},{} {},{}\" stroke=\"{}\"/>",
                if lit { "on" } else { "off" },
                seg.name(),
                num(ox + x1 * s),
                num(margin + y1 * s),
                num(ox + x2 * s),
                num(margin + y2 * s),
                if lit {
                    &style.on_color
                } else {
                    &style.off_color
                }
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

/// Fixed-precision number formatting with trailing zeros removed.
fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

pub const TERM_COLS: usize = 9;
pub const TERM_ROWS: usize = 9;

/// Character cells for one segment in a 9x9 digit cell.
fn term_cells(seg: Segment) -> Vec<(usize, usize, char)> {
    use Segment::*;
    let hline = |row, c0: usize, ch| (c0..c0 + 3).map(move |c| (row, c, ch)).collect::<Vec<_>>();
    let vline = |col, r0: usize| (r0..r0 + 3).map(move |r| (r, col, '|')).collect::<Vec<_>>();
    match seg {
        A1 => hline(0, 1, '_'),
        A2 => hline(0, 5, '_'),
        B => vline(8, 1),
        C => vline(8, 5),
        D1 => hline(8, 1, '_'),
        D2 => hline(8, 5, '_'),
        E => vline(0, 5),
        F => vline(0, 1),
        G1 => hline(4, 1, '-'),
        G2 => hline(4, 5, '-'),
        H => vec![(1, 1, '\\'), (2, 2, '\\'), (3, 3, '\\')],
        I => vline(4, 1),
        J => vec![(1, 7, '/'), (2, 6, '/'), (3, 5, '/')],
        K => vec![(5, 3, '/'), (6, 2, '/'), (7, 1, '/')],
        L => vline(4, 5),
        M => vec![(5, 5, '\\'), (6, 6, '\\'), (7, 7, '\\')],
        P => hline(6, 1, '-'),
    }
}

/// Renders digits as a text grid, 9 columns by 9 rows per digit with one
/// blank column between digits. Empty input gives empty text.
pub fn render_terminal(sets: &[SegmentSet]) -> String {
    if sets.is_empty() {
        return String::new();
    }
    let width = sets.len() * (TERM_COLS + 1) - 1;
    let mut grid = vec![vec![' '; width]; TERM_ROWS];
    for (pos, set) in sets.iter().enumerate() {
        let ox = pos * (TERM_COLS + 1);
        // p is drawn last so it stays visible where it crosses k.
        for seg in set.iter() {
            for (r, c, ch) in term_cells(seg) {
                grid[r][ox + c] = ch;
            }
        }
    }
    let mut out = String::with_capacity((width + 1) * TERM_ROWS);
    for row in grid {
        out.extend(row);
        out.push('\n');
    }
    out
}
