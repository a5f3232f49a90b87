//! Step-by-step records of an elimination run and the JSON trace document.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ring::{OpTally, Ring};
use crate::tableau::{render_board, Tableau};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Forward,
    Hart,
    Jordan,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Forward => "forward",
            Phase::Hart => "hart",
            Phase::Jordan => "jordan",
        }
    }
}

/// One tableau state. Positions are one-based. The initial snapshot of a run
/// has no pivot and no divisor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoardSnapshot {
    pub step: usize,
    pub phase: Phase,
    pub pivot: Option<[usize; 2]>,
    pub divisor: Option<String>,
    pub swap: Option<[usize; 2]>,
    pub tableau: Vec<Vec<String>>,
    pub max_bits: u64,
    /// Operations spent producing this tableau from the previous one.
    pub ops: OpTally,
}

impl BoardSnapshot {
    pub fn initial<T: Ring>(t: &Tableau<T>, phase: Phase) -> Self {
        BoardSnapshot {
            step: t.step(),
            phase,
            pivot: None,
            divisor: None,
            swap: None,
            tableau: t.render_strings(),
            max_bits: t.max_size_bits(),
            ops: OpTally::default(),
        }
    }

    pub fn after_step<T: Ring>(
        t: &Tableau<T>,
        phase: Phase,
        pivot: usize,
        divisor: String,
        swap: Option<(usize, usize)>,
        ops: OpTally,
    ) -> Self {
        BoardSnapshot {
            step: t.step(),
            phase,
            pivot: Some([pivot + 1, pivot + 1]),
            divisor: Some(divisor),
            swap: swap.map(|(a, b)| [a + 1, b + 1]),
            tableau: t.render_strings(),
            max_bits: t.max_size_bits(),
            ops,
        }
    }

    fn header(&self) -> String {
        let mut h = format!("step {} {}", self.step, self.phase.as_str());
        match self.pivot {
            Some([r, c]) => write!(h, " pivot ({r},{c})").unwrap(),
            None => h.push_str(" initial"),
        }
        if let Some(d) = &self.divisor {
            write!(h, " divisor {d}").unwrap();
        }
        if let Some([a, b]) = self.swap {
            write!(h, " swap {a}<->{b}").unwrap();
        }
        write!(h, " max_bits {} ops {}", self.max_bits, self.ops).unwrap();
        h
    }
}

/// Ordered snapshots of one run, possibly spanning several phases.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Trace {
    snapshots: Vec<BoardSnapshot>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, s: BoardSnapshot) {
        self.snapshots.push(s);
    }

    pub fn extend(&mut self, other: Trace) {
        self.snapshots.extend(other.snapshots);
    }

    pub fn snapshots(&self) -> &[BoardSnapshot] {
        &self.snapshots
    }

    pub fn len(&self) -> usize {
        self.snapshots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshots.is_empty()
    }

    /// Recorded row exchanges, one-based.
    pub fn swaps(&self) -> impl Iterator<Item = [usize; 2]> + '_ {
        self.snapshots.iter().filter_map(|s| s.swap)
    }

    /// `-1` for an odd number of row exchanges, else `1`.
    pub fn parity(&self) -> i64 {
        if self.swaps().count() % 2 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn total_ops(&self) -> OpTally {
        self.snapshots
            .iter()
            .fold(OpTally::default(), |acc, s| acc + s.ops)
    }

    pub fn peak_bits(&self) -> u64 {
        self.snapshots.iter().map(|s| s.max_bits).max().unwrap_or(0)
    }

    /// Plain-text rendering: a header line per snapshot followed by its board
    /// and a blank line.
    pub fn render_board(&self) -> String {
        let mut out = String::new();
        for s in &self.snapshots {
            out.push_str(&s.header());
            out.push('\n');
            out.push_str(&render_board(&s.tableau));
            out.push_str("\n\n");
        }
        out
    }
}

/// Final status attached to a JSON trace document.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RunResult {
    pub exit: i32,
    pub solution: Option<Vec<String>>,
    pub denominator: Option<String>,
}

/// One JSON document per run: every snapshot plus the result.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceDocument {
    pub phase_events: Vec<BoardSnapshot>,
    pub result: RunResult,
}

impl TraceDocument {
    pub fn new(trace: Trace, result: RunResult) -> Self {
        TraceDocument {
            phase_events: trace.snapshots,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace document serializes")
    }
}
