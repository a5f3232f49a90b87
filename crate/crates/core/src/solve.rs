//! End-to-end solving of an integer system: forward elimination plus one of
//! the finishing phases, with a trace that survives failures.

use serde::{Deserialize, Serialize};

use crate::diagonalize::{
    back_substitute, gauss_jordan_into, hart_backward_into, hart_solution, solution_from_diagonal,
    Moderation, Solution,
};
use crate::eliminate::{forward_eliminate_into, PivotPolicy, PivotStrategy};
use crate::error::{Error, Result};
use crate::ring::{Integer, OpTally, ToRational};
use crate::tableau::Tableau;
use crate::trace::Trace;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Finish {
    #[default]
    BackSubst,
    Hart,
    Jordan,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SolveOptions {
    pub strategy: PivotStrategy,
    pub policy: PivotPolicy,
    pub finish: Finish,
    pub moderation: Moderation,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            strategy: PivotStrategy::Chio,
            policy: PivotPolicy::Strict,
            finish: Finish::BackSubst,
            moderation: Moderation::Off,
        }
    }
}

/// Outcome of [`solve_system`]. The trace is kept even when solving fails.
#[derive(Clone, Debug)]
pub struct SolveRun {
    pub trace: Trace,
    pub result: Result<Solution>,
}

pub fn solve_system(t: &Tableau<Integer>, opts: &SolveOptions) -> SolveRun {
    let mut trace = Trace::new();
    let result = solve_into(t, opts, &mut trace);
    SolveRun { trace, result }
}

fn solve_into(t: &Tableau<Integer>, opts: &SolveOptions, trace: &mut Trace) -> Result<Solution> {
    let (n, m) = (t.rows(), t.cols());
    if m > n + 1 {
        return Err(Error::UnderDetermined { rows: n, cols: m });
    }
    if m < n + 1 {
        return Err(Error::OverDetermined { rows: n, cols: m });
    }
    let field = opts.strategy == PivotStrategy::FieldGauss;
    match opts.finish {
        Finish::BackSubst if field => {
            let q = t.map(ToRational::to_rational);
            let echelon = forward_eliminate_into(&q, opts.strategy, opts.policy, trace)?;
            back_substitute(&echelon, &mut OpTally::new())
        }
        Finish::BackSubst => {
            let echelon = forward_eliminate_into(t, opts.strategy, opts.policy, trace)?;
            back_substitute(&echelon, &mut OpTally::new())
        }
        Finish::Hart if field => Err(Error::IncompatibleFinish),
        Finish::Hart => {
            let echelon = forward_eliminate_into(t, opts.strategy, opts.policy, trace)?;
            let diag = hart_backward_into(&echelon, opts.moderation, trace)?;
            hart_solution(&diag)
        }
        Finish::Jordan if field => {
            let q = t.map(ToRational::to_rational);
            let diag = gauss_jordan_into(&q, opts.strategy, opts.policy, trace)?;
            solution_from_diagonal(&diag, &mut OpTally::new())
        }
        Finish::Jordan => {
            let diag = gauss_jordan_into(t, opts.strategy, opts.policy, trace)?;
            solution_from_diagonal(&diag, &mut OpTally::new())
        }
    }
}
