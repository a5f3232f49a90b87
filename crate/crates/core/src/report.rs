//! Strategy bench: operation counts and entry growth across the three
//! divisor choices and both pipelines, aggregated over seeded trials.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::{random_nonsingular_system, trial_rng};
use crate::diagonalize::run_pipeline;
use crate::eliminate::{PivotPolicy, PivotStrategy};
use crate::error::Result;
use crate::ring::OpTally;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pipeline {
    /// Forward elimination plus back substitution.
    Ge,
    /// Gauss-Jordan plus diagonal division.
    Gj,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Ge => "ge",
            Pipeline::Gj => "gj",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Measure {
    pub strategy: PivotStrategy,
    pub pipeline: Pipeline,
    pub ops: OpTally,
    /// Largest entry over every recorded tableau of the run.
    pub peak_bits: u64,
    /// Largest entry of the last tableau (the echelon form for `ge`).
    pub final_bits: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: u64,
    pub resamples: u64,
    pub measures: Vec<Measure>,
}

impl TrialRecord {
    pub fn measure(&self, strategy: PivotStrategy, pipeline: Pipeline) -> &Measure {
        self.measures
            .iter()
            .find(|m| m.strategy == strategy && m.pipeline == pipeline)
            .expect("every strategy and pipeline is measured")
    }
}

/// Runs all six strategy/pipeline combinations on trial `index` of `seed`.
pub fn run_trial(n: usize, seed: u64, index: u64, range: i64) -> Result<TrialRecord> {
    let mut rng = trial_rng(seed, index);
    let sample = random_nonsingular_system(&mut rng, n, range);
    let mut measures = Vec::with_capacity(6);
    for strategy in PivotStrategy::ALL {
        for pipeline in [Pipeline::Ge, Pipeline::Gj] {
            let run = run_pipeline(
                &sample.tableau,
                strategy,
                pipeline == Pipeline::Gj,
                PivotPolicy::Swap,
            )?;
            let snapshots = run.trace.snapshots();
            measures.push(Measure {
                strategy,
                pipeline,
                ops: run.ops,
                peak_bits: run.trace.peak_bits(),
                final_bits: snapshots.last().map_or(0, |s| s.max_bits),
            });
        }
    }
    Ok(TrialRecord {
        index,
        resamples: sample.resamples,
        measures,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BenchRow {
    pub strategy: PivotStrategy,
    pub pipeline: Pipeline,
    pub mul: u64,
    pub div: u64,
    pub addsub: u64,
    pub max_bits: u64,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct OpComparison {
    pub strategy: PivotStrategy,
    pub ge_mult: u64,
    pub gj_mult: u64,
    pub ratio: f64,
    pub gj_exceeds_ge_every_trial: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct GrowthComparison {
    /// Echelon max bits per trial, Nine Chapters then Chio.
    pub per_trial: Vec<(u64, u64)>,
    pub nine_exceeds_chio: usize,
    pub mean_ratio: f64,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct BenchReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub range: i64,
    pub resamples: u64,
    pub rows: Vec<BenchRow>,
    pub comparisons: Vec<OpComparison>,
    pub growth: GrowthComparison,
}

impl BenchReport {
    /// Aggregates trials in the order given; callers pass them sorted by index.
    pub fn aggregate(n: usize, seed: u64, range: i64, trials: &[TrialRecord]) -> Self {
        let mut rows = Vec::new();
        let mut comparisons = Vec::new();
        for strategy in PivotStrategy::ALL {
            for pipeline in [Pipeline::Ge, Pipeline::Gj] {
                let ms = trials.iter().map(|t| t.measure(strategy, pipeline));
                let (ops, bits) = ms.fold((OpTally::default(), 0), |(o, b), m| {
                    (o + m.ops, b.max(m.peak_bits))
                });
                rows.push(BenchRow {
                    strategy,
                    pipeline,
                    mul: ops.mul,
                    div: ops.div,
                    addsub: ops.addsub,
                    max_bits: bits,
                });
            }
            let sum = |p| {
                trials
                    .iter()
                    .map(|t| t.measure(strategy, p).ops.multiplicative())
                    .sum::<u64>()
            };
            let (ge_mult, gj_mult) = (sum(Pipeline::Ge), sum(Pipeline::Gj));
            comparisons.push(OpComparison {
                strategy,
                ge_mult,
                gj_mult,
                ratio: round4(gj_mult as f64 / ge_mult.max(1) as f64),
                gj_exceeds_ge_every_trial: trials.iter().all(|t| {
                    t.measure(strategy, Pipeline::Gj).ops.multiplicative()
                        > t.measure(strategy, Pipeline::Ge).ops.multiplicative()
                }),
            });
        }
        let per_trial: Vec<(u64, u64)> = trials
            .iter()
            .map(|t| {
                (
                    t.measure(PivotStrategy::NineChapters, Pipeline::Ge)
                        .final_bits,
                    t.measure(PivotStrategy::Chio, Pipeline::Ge).final_bits,
                )
            })
            .collect();
        let mean_ratio = if per_trial.is_empty() {
            0.0
        } else {
            per_trial
                .iter()
                .map(|&(a, b)| a as f64 / b.max(1) as f64)
                .sum::<f64>()
                / per_trial.len() as f64
        };
        BenchReport {
            n,
            trials: trials.len(),
            seed,
            range,
            resamples: trials.iter().map(|t| t.resamples).sum(),
            rows,
            comparisons,
            growth: GrowthComparison {
                nine_exceeds_chio: per_trial.iter().filter(|(a, b)| a > b).count(),
                per_trial,
                mean_ratio: round4(mean_ratio),
            },
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "bench n={} trials={} seed={} range={} resamples={}",
            self.n, self.trials, self.seed, self.range, self.resamples
        )
        .unwrap();
        writeln!(
            out,
            "{:<8} {:<8} {:>12} {:>12} {:>12} {:>8}",
            "strategy", "pipeline", "mul", "div", "addsub", "max_bits"
        )
        .unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:<8} {:<8} {:>12} {:>12} {:>12} {:>8}",
                r.strategy.name(),
                r.pipeline.name(),
                r.mul,
                r.div,
                r.addsub,
                r.max_bits
            )
            .unwrap();
        }
        writeln!(out, "\nmultiplicative ops (mul+div), gj vs ge").unwrap();
        for c in &self.comparisons {
            writeln!(
                out,
                "{:<8} ge={:<12} gj={:<12} ratio={:.4} gj>ge every trial: {}",
                c.strategy.name(),
                c.ge_mult,
                c.gj_mult,
                c.ratio,
                if c.gj_exceeds_ge_every_trial {
                    "yes"
                } else {
                    "no"
                }
            )
            .unwrap();
        }
        writeln!(
            out,
            "\nechelon max bits, nine vs chio: nine > chio in {}/{} trials, mean ratio {:.4}",
            self.growth.nine_exceeds_chio, self.trials, self.growth.mean_ratio
        )
        .unwrap();
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bench report serializes")
    }
}

fn round4(x: f64) -> f64 {
    (x * 10_000.0).round() / 10_000.0
}
