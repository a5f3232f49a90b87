//! Finishing phases: rational back substitution, the integer-preserving
//! backward diagonalization, and Gauss-Jordan elimination.

use serde::{Deserialize, Serialize};

use crate::corpus;
use crate::eliminate::{
    combine_row, forward_eliminate, pivot_select, swap_rows, PivotPolicy, PivotStrategy,
};
use crate::error::{Error, Result};
use crate::ring::{gcd, Integer, OpTally, Rational, Ring, ToRational};
use crate::tableau::Tableau;
use crate::trace::{BoardSnapshot, Phase, Trace};

/// Exact solution of a square system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    pub values: Vec<Rational>,
    /// Numerators over one common denominator, when the finishing phase
    /// produced them.
    pub shared: Option<SharedDenominator>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SharedDenominator {
    pub numerators: Vec<Integer>,
    pub denominator: Integer,
}

impl Solution {
    pub fn from_values(values: Vec<Rational>) -> Self {
        Solution {
            values,
            shared: None,
        }
    }

    pub fn from_shared(numerators: Vec<Integer>, denominator: Integer) -> Result<Self> {
        let values = numerators
            .iter()
            .map(|num| Rational::new(num.clone(), denominator.clone()))
            .collect::<Result<_>>()?;
        Ok(Solution {
            values,
            shared: Some(SharedDenominator {
                numerators,
                denominator,
            }),
        })
    }
}

/// Checks for an upper-triangular `n x (n+1)` tableau with a nonzero diagonal.
fn check_echelon_system<T: Ring>(t: &Tableau<T>) -> Result<()> {
    let (n, m) = (t.rows(), t.cols());
    if m > n + 1 {
        return Err(Error::UnderDetermined { rows: n, cols: m });
    }
    if m < n + 1 {
        return Err(Error::OverDetermined { rows: n, cols: m });
    }
    if !t.is_upper_triangular() {
        return Err(Error::DimensionMismatch(
            "tableau is not in row echelon form".into(),
        ));
    }
    if let Some(row) = (0..n).find(|&i| t.get(i, i).is_zero()) {
        return Err(Error::SingularDiagonal { row });
    }
    Ok(())
}

/// Solves an echelon system from the last unknown to the first.
pub fn back_substitute<T: ToRational>(t: &Tableau<T>, ops: &mut OpTally) -> Result<Solution> {
    check_echelon_system(t)?;
    let n = t.rows();
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = t.get(i, n).to_rational();
        for (j, xj) in x.iter().enumerate().skip(i + 1) {
            if t.get(i, j).is_zero() {
                continue;
            }
            let term = ops.mul(&t.get(i, j).to_rational(), xj);
            acc = ops.sub(&acc, &term);
        }
        x[i] = ops.div(&acc, &t.get(i, i).to_rational())?;
    }
    Ok(Solution::from_values(x))
}

/// Reads the unknowns off a tableau whose leading block is diagonal, dividing
/// each right-hand side by its diagonal entry.
pub fn solution_from_diagonal<T: ToRational>(
    t: &Tableau<T>,
    ops: &mut OpTally,
) -> Result<Solution> {
    let n = t.rows();
    if t.cols() != n + 1 {
        return Err(if t.cols() > n + 1 {
            Error::UnderDetermined {
                rows: n,
                cols: t.cols(),
            }
        } else {
            Error::OverDetermined {
                rows: n,
                cols: t.cols(),
            }
        });
    }
    if !t.is_diagonal() {
        return Err(Error::DimensionMismatch("tableau is not diagonal".into()));
    }
    let values = (0..n)
        .map(|i| {
            let d = t.get(i, i).to_rational();
            if d.is_zero() {
                return Err(Error::SingularDiagonal { row: i });
            }
            ops.div(&t.get(i, n).to_rational(), &d)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Solution::from_values(values))
}

/// Whether the backward phase divides rows by their own diagonal entry or
/// by the gcd of their entries.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub enum Moderation {
    /// Divide by the row's diagonal; the last pivot ends up on every diagonal.
    #[default]
    Off,
    /// After each backward step divide every row by the gcd of its entries.
    /// Rows stay proportional to the unmoderated result.
    RowContent,
}

/// Clears the columns above the diagonal from right to left without leaving
/// the integers.
///
/// For column `c` from `n` down to 2, each row `i < c` becomes
/// `(d_c * row_i - a[i][c] * row_c) / d_i`, where `d_c` and `d_i` are the
/// current diagonal entries of rows `c` and `i`. After the first step every
/// updated row carries the last pivot on its diagonal, so the result is
/// `a[n][n]` replicated down the diagonal with the unknowns given by
/// `rhs_i / a[n][n]`.
///
/// A row with a zero in column `c` is left for a later column while it still
/// has nonzero entries between its diagonal and `c`; at column `i + 1` every
/// row is updated.
///
/// A division that leaves a remainder is reported as
/// [`Error::InexactDivision`] carrying the row and column.
pub fn hart_backward(
    t: &Tableau<Integer>,
    moderation: Moderation,
) -> Result<(Tableau<Integer>, Trace)> {
    let mut trace = Trace::new();
    let out = hart_backward_into(t, moderation, &mut trace)?;
    Ok((out, trace))
}

/// [`hart_backward`] appending its snapshots to an existing trace.
pub fn hart_backward_into(
    t: &Tableau<Integer>,
    moderation: Moderation,
    trace: &mut Trace,
) -> Result<Tableau<Integer>> {
    check_echelon_system(t)?;
    let (n, cols) = (t.rows(), t.cols());
    let mut current = t.clone();
    for c in (1..n).rev() {
        let src = current.entries();
        let mut out = src.to_vec();
        let mut ops = OpTally::new();
        let mut divisors: Vec<String> = Vec::new();
        let d_c = &src[c * cols + c];
        for i in 0..c {
            let a_ic = &src[i * cols + c];
            let pending = (i + 1..c).any(|j| !src[i * cols + j].is_zero());
            if a_ic.is_zero() && pending {
                continue;
            }
            let d_i = &src[i * cols + i];
            for j in i..cols {
                if j == c {
                    out[i * cols + j] = Integer::zero();
                    continue;
                }
                let a_cj = &src[c * cols + j];
                let mut v = ops.mul(d_c, &src[i * cols + j]);
                if !a_cj.is_zero() {
                    let cross = ops.mul(a_ic, a_cj);
                    v = ops.sub(&v, &cross);
                }
                if moderation == Moderation::Off {
                    v = ops.div(&v, d_i).map_err(|e| at_position(e, i, c))?;
                }
                out[i * cols + j] = v;
            }
            divisors.push(d_i.to_string());
        }
        if moderation == Moderation::RowContent {
            moderate_rows(&mut out, cols, &mut ops)?;
        }
        let next = current.successor(out);
        let label = match moderation {
            Moderation::Off => divisor_label(divisors),
            Moderation::RowContent => "content".to_string(),
        };
        trace.push(BoardSnapshot::after_step(
            &next,
            Phase::Hart,
            c,
            label,
            None,
            ops,
        ));
        current = next;
    }
    Ok(current)
}

fn at_position(e: Error, row: usize, col: usize) -> Error {
    match e {
        Error::InexactDivision {
            dividend, divisor, ..
        } => Error::InexactDivision {
            dividend,
            divisor,
            at: Some((row, col)),
        },
        other => other,
    }
}

/// One label per step: the shared divisor, or the per-row divisors in row
/// order when they differ.
fn divisor_label(mut divisors: Vec<String>) -> String {
    let all_equal = divisors.windows(2).all(|w| w[0] == w[1]);
    if all_equal {
        divisors.truncate(1);
    }
    if divisors.is_empty() {
        "1".to_string()
    } else {
        divisors.join(",")
    }
}

fn moderate_rows(entries: &mut [Integer], cols: usize, ops: &mut OpTally) -> Result<()> {
    for row in entries.chunks_mut(cols) {
        let content = row.iter().fold(Integer::zero(), |g, v| gcd(&g, v));
        if content.is_zero() || content.is_one() {
            continue;
        }
        for v in row.iter_mut() {
            *v = ops.div(v, &content)?;
        }
    }
    Ok(())
}

/// The diagonal solution of a completed [`hart_backward`] run.
pub fn hart_solution(t: &Tableau<Integer>) -> Result<Solution> {
    let n = t.rows();
    let d = t.get(n - 1, n - 1);
    if (0..n).all(|i| t.get(i, i) == d) {
        Solution::from_shared((0..n).map(|i| t.get(i, n).clone()).collect(), d.clone())
    } else {
        solution_from_diagonal(t, &mut OpTally::new())
    }
}

/// Gauss-Jordan elimination: the forward update applied to every row except
/// the pivot row, for each of the `n` pivots, leaving the leading block
/// diagonal.
///
/// Rows above the pivot are rescaled as a whole, diagonal included, so each
/// stays a multiple of its original equation. With Chio's divisor every
/// diagonal entry ends up equal to the determinant of the leading block.
pub fn gauss_jordan<T: Ring>(
    t: &Tableau<T>,
    strategy: PivotStrategy,
    policy: PivotPolicy,
) -> Result<(Tableau<T>, Trace)> {
    let mut trace = Trace::new();
    let out = gauss_jordan_into(t, strategy, policy, &mut trace)?;
    Ok((out, trace))
}

pub fn gauss_jordan_into<T: Ring>(
    t: &Tableau<T>,
    strategy: PivotStrategy,
    policy: PivotPolicy,
    trace: &mut Trace,
) -> Result<Tableau<T>> {
    strategy.check_ring::<T>()?;
    trace.push(BoardSnapshot::initial(t, Phase::Jordan));
    let (n, cols) = (t.rows(), t.cols());
    let mut current = t.clone();
    for k in 0..n {
        let mut ops = OpTally::new();
        let choice = pivot_select(&current, k, policy)?;
        let mut src = current.entries().to_vec();
        let swap = choice.swapped.then(|| {
            swap_rows(&mut src, cols, k, choice.row);
            (k, choice.row)
        });
        let divisor = strategy.divisor(&src, cols, k);
        let mut out = src.clone();
        for i in (0..n).filter(|&i| i != k) {
            if strategy.skips_zero_rows() && src[i * cols + k].is_zero() {
                continue;
            }
            combine_row(&src, &mut out, cols, k, i, k, divisor.as_ref(), &mut ops)?;
            if i < k && strategy != PivotStrategy::FieldGauss {
                // Row k is zero left of column k, so only the diagonal of a
                // row above changes in those columns.
                let scaled = ops.mul(&src[k * cols + k], &src[i * cols + i]);
                out[i * cols + i] = match &divisor {
                    Some(d) => ops.div(&scaled, d)?,
                    None => scaled,
                };
            }
        }
        let next = current.successor(out);
        let label = divisor
            .as_ref()
            .map_or_else(|| "1".to_string(), ToString::to_string);
        trace.push(BoardSnapshot::after_step(
            &next,
            Phase::Jordan,
            k,
            label,
            swap,
            ops,
        ));
        current = next;
    }
    Ok(current)
}

/// Exact operation counts for the two routes to a solution of the same system.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OpCountReport {
    pub n: usize,
    pub strategy: PivotStrategy,
    pub seed: u64,
    /// Forward elimination plus back substitution.
    pub ge: OpTally,
    /// Gauss-Jordan plus the final diagonal divisions.
    pub gj: OpTally,
    pub resamples: u64,
}

impl OpCountReport {
    /// Gauss-Jordan over elimination-plus-back-substitution, multiplicative
    /// operations only.
    pub fn ratio(&self) -> f64 {
        self.gj.multiplicative() as f64 / self.ge.multiplicative() as f64
    }
}

/// Operation counts of both pipelines for a solved system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PipelineRun {
    pub solution: Solution,
    pub ops: OpTally,
    pub trace: Trace,
}

/// Forward elimination followed by back substitution.
pub fn run_ge<T: ToRational>(
    t: &Tableau<T>,
    strategy: PivotStrategy,
    policy: PivotPolicy,
) -> Result<PipelineRun> {
    let (echelon, trace) = forward_eliminate(t, strategy, policy)?;
    let mut ops = trace.total_ops();
    let solution = back_substitute(&echelon, &mut ops)?;
    Ok(PipelineRun {
        solution,
        ops,
        trace,
    })
}

/// Gauss-Jordan followed by the diagonal divisions.
pub fn run_gj<T: ToRational>(
    t: &Tableau<T>,
    strategy: PivotStrategy,
    policy: PivotPolicy,
) -> Result<PipelineRun> {
    let (diag, trace) = gauss_jordan(t, strategy, policy)?;
    let mut ops = trace.total_ops();
    let solution = solution_from_diagonal(&diag, &mut ops)?;
    Ok(PipelineRun {
        solution,
        ops,
        trace,
    })
}

/// Either pipeline on an integer system, converting to rationals for the
/// field strategy.
pub fn run_pipeline(
    t: &Tableau<Integer>,
    strategy: PivotStrategy,
    jordan: bool,
    policy: PivotPolicy,
) -> Result<PipelineRun> {
    match (strategy, jordan) {
        (PivotStrategy::FieldGauss, false) => {
            run_ge(&t.map(ToRational::to_rational), strategy, policy)
        }
        (PivotStrategy::FieldGauss, true) => {
            run_gj(&t.map(ToRational::to_rational), strategy, policy)
        }
        (_, false) => run_ge(t, strategy, policy),
        (_, true) => run_gj(t, strategy, policy),
    }
}

/// Runs both pipelines on one seeded random nonsingular `n x (n+1)` system
/// with entries in `[-9, 9]`.
pub fn op_count_compare(n: usize, strategy: PivotStrategy, seed: u64) -> Result<OpCountReport> {
    if n < 2 {
        return Err(Error::DimensionMismatch(format!(
            "op count comparison needs n >= 2, got {n}"
        )));
    }
    let mut rng = corpus::trial_rng(seed, 0);
    let sample = corpus::random_nonsingular_system(&mut rng, n, corpus::DEFAULT_RANGE);
    let ge = run_pipeline(&sample.tableau, strategy, false, PivotPolicy::Swap)?;
    let gj = run_pipeline(&sample.tableau, strategy, true, PivotPolicy::Swap)?;
    debug_assert_eq!(ge.solution.values, gj.solution.values);
    Ok(OpCountReport {
        n,
        strategy,
        seed,
        ge: ge.ops,
        gj: gj.ops,
        resamples: sample.resamples,
    })
}
