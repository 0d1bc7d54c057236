//! Time-multiplexed display driver simulation.
//!
//! One tick is one position's on-window. Tick `t` drives position
//! `t mod positions`, so every frame scans all positions once in ascending
//! order. No blanking interval is modelled between positions.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::segment::SegmentSet;

pub const MAX_POSITIONS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplayConfig {
    pub positions: usize,
    /// Full frames per second.
    pub refresh_hz: u32,
    /// Per-position content; positions past the end are blank.
    pub content: Vec<SegmentSet>,
}

impl DisplayConfig {
    pub fn new(positions: usize, refresh_hz: u32, content: Vec<SegmentSet>) -> Result<Self> {
        let cfg = DisplayConfig {
            positions,
            refresh_hz,
            content,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.positions == 0 || self.positions > MAX_POSITIONS {
            return Err(Error::Config(format!(
                "positions must be 1..={MAX_POSITIONS}, got {}",
                self.positions
            )));
        }
        if self.refresh_hz == 0 {
            return Err(Error::Config("refresh rate must be positive".into()));
        }
        if self.content.len() > self.positions {
            return Err(Error::Config(format!(
                "{} digits do not fit on {} positions",
                self.content.len(),
                self.positions
            )));
        }
        Ok(())
    }

    /// Ticks per second: refresh rate times positions.
    pub fn tick_rate(&self) -> u64 {
        u64::from(self.refresh_hz) * self.positions as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tick {
    pub tick: u64,
    /// Start of the tick in whole microseconds, rounded down.
    pub us: u64,
    pub position: usize,
    pub word: SegmentSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameTrace {
    pub positions: usize,
    pub ticks: Vec<Tick>,
}

pub fn run_simulation(cfg: &DisplayConfig, ticks: u64) -> Result<FrameTrace> {
    cfg.validate()?;
    let rate = cfg.tick_rate();
    let trace = (0..ticks)
        .map(|t| {
            let position = (t % cfg.positions as u64) as usize;
            Tick {
                tick: t,
                us: t * 1_000_000 / rate,
                position,
                word: cfg.content.get(position).copied().unwrap_or_default(),
            }
        })
        .collect();
    Ok(FrameTrace {
        positions: cfg.positions,
        ticks: trace,
    })
}

/// Fraction of ticks that drive `position`; 0.0 for an empty trace.
pub fn duty_cycle(trace: &FrameTrace, position: usize) -> Result<f64> {
    if position >= trace.positions {
        return Err(Error::PositionOutOfRange {
            position,
            positions: trace.positions,
        });
    }
    if trace.ticks.is_empty() {
        return Ok(0.0);
    }
    let active = trace
        .ticks
        .iter()
        .filter(|t| t.position == position)
        .count();
    Ok(active as f64 / trace.ticks.len() as f64)
}

pub fn trace_to_csv(trace: &FrameTrace) -> String {
    let mut out = String::from("tick,us,position,word_hex\n");
    for t in &trace.ticks {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            t.tick,
            t.us,
            t.position,
            t.word.to_hex()
        );
    }
    out
}
