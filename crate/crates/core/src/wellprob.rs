//! Cyclic band systems with a uniform right-hand side.
//!
//! For coefficients `a_1..a_n` the matrix has `a_i` on the diagonal, ones on
//! the superdiagonal and a one in the bottom-left corner; every equation has
//! the same right-hand side `b`:
//!
//! ```text
//! a1  1  0  0 | b
//!  0 a2  1  0 | b
//!  0  0 a3  1 | b
//!  1  0  0 a4 | b
//! ```
//!
//! When `b` is not given it is posited as `det(A)`, which makes every unknown
//! an integer.

use crate::detkit::{det_oracle, det_via_chio, OracleMethod, SquareMatrix, COFACTOR_LIMIT};
use crate::diagonalize::{hart_backward_into, hart_solution, Moderation, Solution};
use crate::eliminate::{forward_eliminate_into, PivotPolicy, PivotStrategy};
use crate::error::{Error, Result};
use crate::ring::{Integer, Ring};
use crate::tableau::Tableau;
use crate::trace::Trace;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WellRhs {
    /// `b = det(A)`.
    Posited,
    Given(Integer),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WellSystem {
    coeffs: Vec<Integer>,
    b: WellRhs,
}

pub fn build_well_system(coeffs: Vec<Integer>) -> Result<WellSystem> {
    if coeffs.len() < 2 {
        return Err(Error::TooSmall(coeffs.len()));
    }
    Ok(WellSystem {
        coeffs,
        b: WellRhs::Posited,
    })
}

impl WellSystem {
    pub fn with_b(mut self, b: Integer) -> Self {
        self.b = WellRhs::Given(b);
        self
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &WellRhs {
        &self.b
    }

    pub fn matrix(&self) -> SquareMatrix {
        let n = self.n();
        let rows = (0..n)
            .map(|i| {
                let mut row = vec![Integer::zero(); n];
                row[i] = self.coeffs[i].clone();
                // Superdiagonal, wrapping to the corner on the last row.
                row[(i + 1) % n] = Integer::one();
                row
            })
            .collect();
        SquareMatrix::from_rows(rows).expect("n x n by construction")
    }

    /// The posited value `det(A)`, or the given `b`.
    pub fn resolved_b(&self) -> Result<Integer> {
        match &self.b {
            WellRhs::Posited => posited_b(self),
            WellRhs::Given(b) => Ok(b.clone()),
        }
    }

    pub fn tableau(&self) -> Result<Tableau<Integer>> {
        let b = self.resolved_b()?;
        let rows = self
            .matrix()
            .to_rows()
            .into_iter()
            .map(|mut r| {
                r.push(b.clone());
                r
            })
            .collect();
        Tableau::from_rows(rows)
    }
}

/// `det(A)`: by cofactor expansion within its size guard, by Chio with row
/// exchanges beyond it.
pub fn posited_b(ws: &WellSystem) -> Result<Integer> {
    let a = ws.matrix();
    if a.n() <= COFACTOR_LIMIT {
        det_oracle(&a, OracleMethod::Cofactor)
    } else {
        det_via_chio(&a, PivotPolicy::Swap)
    }
}

/// `prod(a_i) + (-1)^(n+1)`: only the identity and the full cycle contribute
/// to the permutation expansion.
pub fn closed_form_det(coeffs: &[Integer]) -> Integer {
    let product = coeffs.iter().fold(Integer::one(), |acc, a| acc.mul(a));
    let cycle = if coeffs.len().is_multiple_of(2) {
        Integer::from(-1)
    } else {
        Integer::one()
    };
    product.add(&cycle)
}

#[derive(Clone, Debug)]
pub struct WellReport {
    pub b: Integer,
    pub det: Integer,
    /// Last diagonal entry of the forward echelon form.
    pub forward_pivot: Integer,
    /// Whether that pivot equals `det(A)`, checked when `b` was posited.
    pub pivot_is_det: Option<bool>,
    pub solution: Solution,
    pub trace: Trace,
}

/// Solves by Nine Chapters forward elimination and the integer-preserving
/// backward phase.
pub fn solve_well(ws: &WellSystem, policy: PivotPolicy) -> Result<WellReport> {
    let n = ws.n();
    let det = posited_b(ws)?;
    let b = ws.resolved_b()?;
    let t = ws.tableau()?;
    let mut trace = Trace::new();
    let echelon = forward_eliminate_into(&t, PivotStrategy::NineChapters, policy, &mut trace)?;
    let forward_pivot = echelon.get(n - 1, n - 1).clone();
    if forward_pivot.is_zero() {
        return Err(Error::RankDeficient { column: n - 1 });
    }
    let signed_pivot = if trace.parity() < 0 {
        -forward_pivot.clone()
    } else {
        forward_pivot.clone()
    };
    let pivot_is_det = matches!(ws.b, WellRhs::Posited).then(|| signed_pivot == det);
    let diag = hart_backward_into(&echelon, Moderation::Off, &mut trace)?;
    let solution = hart_solution(&diag)?;
    Ok(WellReport {
        b,
        det,
        forward_pivot,
        pivot_is_det,
        solution,
        trace,
    })
}

/// Always fails: `b` is posited, never treated as a free unknown.
pub fn solve_well_parametric(_ws: &WellSystem) -> Result<Solution> {
    Err(Error::UnsupportedIndeterminate)
}
