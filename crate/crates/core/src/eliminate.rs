//! Forward reduction to row echelon form.
//!
//! Every strategy uses the same update for the entries right of and below the
//! pivot `p = a[k][k]`:
//!
//! ```text
//! a'[i][j] = (p * a[i][j] - a[k][j] * a[i][k]) / divisor     (i > k, j > k)
//! ```
//!
//! and writes zero into column `k` below the pivot. The strategies differ only
//! in the divisor: 1 for [`PivotStrategy::NineChapters`], the previous pivot
//! for [`PivotStrategy::Chio`] (1 at the first step), and the current pivot for
//! [`PivotStrategy::FieldGauss`]. Entries outside the updated block are copied
//! forward unchanged.
//!
//! Under `NineChapters` and `FieldGauss` a row whose entry in the pivot column
//! is already zero is left alone, as a hand computation would. `Chio` updates
//! every row below the pivot; that is what keeps each pivot equal to a leading
//! principal minor.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{OpTally, Ring};
use crate::tableau::Tableau;
use crate::trace::{BoardSnapshot, Phase, Trace};

/// The choice of divisor at each step.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PivotStrategy {
    /// No division at all.
    #[serde(rename = "nine")]
    NineChapters,
    /// Divide by the previous pivot; entries stay in the ring.
    Chio,
    /// Divide by the current pivot; needs a field.
    #[serde(rename = "field")]
    FieldGauss,
}

impl PivotStrategy {
    pub const ALL: [PivotStrategy; 3] = [
        PivotStrategy::NineChapters,
        PivotStrategy::Chio,
        PivotStrategy::FieldGauss,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PivotStrategy::NineChapters => "nine",
            PivotStrategy::Chio => "chio",
            PivotStrategy::FieldGauss => "field",
        }
    }

    /// Rows with a zero in the pivot column are skipped by every strategy
    /// except Chio.
    pub(crate) fn skips_zero_rows(self) -> bool {
        self != PivotStrategy::Chio
    }

    pub(crate) fn check_ring<T: Ring>(self) -> Result<()> {
        if self == PivotStrategy::FieldGauss && !T::IS_FIELD {
            return Err(Error::NotAField);
        }
        Ok(())
    }

    /// Divisor for the step whose pivot sits in column `k`; `None` means 1
    /// and no division is performed.
    /// `entries` is the row-major buffer after any row exchange.
    pub(crate) fn divisor<T: Ring>(self, entries: &[T], cols: usize, k: usize) -> Option<T> {
        match self {
            PivotStrategy::NineChapters => None,
            PivotStrategy::Chio if k == 0 => None,
            PivotStrategy::Chio => Some(entries[(k - 1) * cols + k - 1].clone()),
            PivotStrategy::FieldGauss => Some(entries[k * cols + k].clone()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PivotPolicy {
    /// Never exchange rows.
    Strict,
    /// Exchange with the first row below that has a nonzero pivot-column entry.
    Swap,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PivotChoice {
    pub row: usize,
    pub swapped: bool,
}

/// Picks the pivot row for column `k` (zero-based) among rows `k..n`.
pub fn pivot_select<T: Ring>(t: &Tableau<T>, k: usize, policy: PivotPolicy) -> Result<PivotChoice> {
    if !t.get(k, k).is_zero() {
        return Ok(PivotChoice {
            row: k,
            swapped: false,
        });
    }
    let candidate = (k + 1..t.rows()).find(|&r| !t.get(r, k).is_zero());
    match (candidate, policy) {
        (None, _) => Err(Error::RankDeficient { column: k }),
        (Some(r), PivotPolicy::Strict) => Err(Error::ZeroPivot {
            column: k,
            candidate: r,
        }),
        (Some(r), PivotPolicy::Swap) => Ok(PivotChoice {
            row: r,
            swapped: true,
        }),
    }
}

/// Result of a single elimination step.
#[derive(Clone, Debug)]
pub struct StepOutcome<T> {
    pub tableau: Tableau<T>,
    /// Rows exchanged before the update, zero-based.
    pub swap: Option<(usize, usize)>,
    /// `None` when the step divided by 1.
    pub divisor: Option<T>,
}

impl<T: Ring> StepOutcome<T> {
    pub(crate) fn divisor_label(&self) -> String {
        self.divisor
            .as_ref()
            .map_or_else(|| "1".to_string(), ToString::to_string)
    }
}

/// Exchanges rows `a` and `b` of a row-major buffer.
pub(crate) fn swap_rows<T>(entries: &mut [T], cols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let (head, tail) = entries.split_at_mut(hi * cols);
    head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
}

/// Applies the pivot-row update to row `i` for columns `from..m`, writing zero
/// into the pivot column.
#[allow(clippy::too_many_arguments)]
pub(crate) fn combine_row<T: Ring>(
    src: &[T],
    out: &mut [T],
    cols: usize,
    k: usize,
    i: usize,
    from: usize,
    divisor: Option<&T>,
    ops: &mut OpTally,
) -> Result<()> {
    let pivot = &src[k * cols + k];
    let factor = &src[i * cols + k];
    for j in from..cols {
        if j == k {
            out[i * cols + j] = T::zero();
            continue;
        }
        let scaled = ops.mul(pivot, &src[i * cols + j]);
        let cross = ops.mul(&src[k * cols + j], factor);
        let diff = ops.sub(&scaled, &cross);
        out[i * cols + j] = match divisor {
            Some(d) => ops.div(&diff, d)?,
            None => diff,
        };
    }
    Ok(())
}

/// One forward step with the pivot in column `k` (zero-based, `k < n - 1`).
pub fn forward_step<T: Ring>(
    t: &Tableau<T>,
    k: usize,
    strategy: PivotStrategy,
    policy: PivotPolicy,
    ops: &mut OpTally,
) -> Result<StepOutcome<T>> {
    strategy.check_ring::<T>()?;
    if k + 1 >= t.rows() {
        return Err(Error::DimensionMismatch(format!(
            "forward step {} needs more than {} rows",
            k + 1,
            t.rows()
        )));
    }
    let choice = pivot_select(t, k, policy)?;
    let cols = t.cols();
    let mut src = t.entries().to_vec();
    let swap = choice.swapped.then(|| {
        swap_rows(&mut src, cols, k, choice.row);
        (k, choice.row)
    });

    let mut out = src.clone();
    let divisor = strategy.divisor(&src, cols, k);
    for i in k + 1..t.rows() {
        if strategy.skips_zero_rows() && src[i * cols + k].is_zero() {
            continue;
        }
        combine_row(&src, &mut out, cols, k, i, k, divisor.as_ref(), ops)?;
    }
    Ok(StepOutcome {
        tableau: t.successor(out),
        swap,
        divisor,
    })
}

/// Runs `n - 1` forward steps, appending one snapshot per tableau (including
/// the initial one) to `trace`. On error the trace holds everything up to the
/// failing step.
pub fn forward_eliminate_into<T: Ring>(
    t: &Tableau<T>,
    strategy: PivotStrategy,
    policy: PivotPolicy,
    trace: &mut Trace,
) -> Result<Tableau<T>> {
    strategy.check_ring::<T>()?;
    trace.push(BoardSnapshot::initial(t, Phase::Forward));
    let mut current = t.clone();
    for k in 0..t.rows().saturating_sub(1) {
        let mut ops = OpTally::new();
        let step = forward_step(&current, k, strategy, policy, &mut ops)?;
        trace.push(BoardSnapshot::after_step(
            &step.tableau,
            Phase::Forward,
            k,
            step.divisor_label(),
            step.swap,
            ops,
        ));
        current = step.tableau;
    }
    Ok(current)
}

/// Reduces `t` to row echelon form.
pub fn forward_eliminate<T: Ring>(
    t: &Tableau<T>,
    strategy: PivotStrategy,
    policy: PivotPolicy,
) -> Result<(Tableau<T>, Trace)> {
    let mut trace = Trace::new();
    let echelon = forward_eliminate_into(t, strategy, policy, &mut trace)?;
    Ok((echelon, trace))
}
