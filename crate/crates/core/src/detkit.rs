//! Determinants: by Chio condensation, and by two brute-force oracles that
//! share no code with the elimination modules.

use serde::{Deserialize, Serialize};

use crate::eliminate::{forward_eliminate, PivotPolicy, PivotStrategy};
use crate::error::{Error, Result};
use crate::ring::{Integer, Ring};
use crate::tableau::Tableau;

pub const COFACTOR_LIMIT: usize = 8;
pub const PERMUTATION_LIMIT: usize = 6;

/// Square integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Integer>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Integer>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "expected a square matrix with {n} columns per row"
            )));
        }
        Ok(SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| Integer::from(v)).collect())
                .collect(),
        )
    }

    /// The leading `n x n` block of a tableau.
    pub fn leading_block(t: &Tableau<Integer>) -> Self {
        let n = t.rows();
        SquareMatrix {
            n,
            entries: (0..n).flat_map(|i| t.row(i)[..n].to_vec()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.entries[i * self.n + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<Integer>> {
        self.entries
            .chunks(self.n)
            .map(<[Integer]>::to_vec)
            .collect()
    }

    pub fn to_tableau(&self) -> Tableau<Integer> {
        Tableau::from_rows(self.to_rows()).expect("square rows form a tableau")
    }

    /// Top-left `k x k` block.
    pub fn leading(&self, k: usize) -> SquareMatrix {
        SquareMatrix {
            n: k,
            entries: (0..k)
                .flat_map(|i| self.entries[i * self.n..i * self.n + k].to_vec())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &SquareMatrix) -> SquareMatrix {
        let n = self.n;
        let entries = (0..n)
            .flat_map(|i| {
                (0..n).map(move |j| {
                    (0..n).fold(Integer::zero(), |acc, k| {
                        acc.add(&self.get(i, k).mul(rhs.get(k, j)))
                    })
                })
            })
            .collect();
        SquareMatrix { n, entries }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMethod {
    /// Recursive Laplace expansion along the first row.
    Cofactor,
    /// Signed sum over all `n!` permutations.
    Permutation,
}

/// Determinant as the final Chio pivot, negated once per row exchange.
///
/// Under [`PivotPolicy::Strict`] a zero pivot with a nonzero entry below it
/// means some leading principal minor vanished and is reported as
/// [`Error::SingularLeadingMinor`]. A column that is zero from the diagonal
/// down makes the matrix singular under either policy, so 0 is returned.
pub fn det_via_chio(a: &SquareMatrix, policy: PivotPolicy) -> Result<Integer> {
    match forward_eliminate(&a.to_tableau(), PivotStrategy::Chio, policy) {
        Ok((echelon, trace)) => {
            let last = echelon.get(a.n - 1, a.n - 1).clone();
            Ok(if trace.parity() < 0 { -last } else { last })
        }
        Err(Error::RankDeficient { .. }) => Ok(Integer::zero()),
        Err(Error::ZeroPivot { column, .. }) => {
            Err(Error::SingularLeadingMinor { order: column + 1 })
        }
        Err(e) => Err(e),
    }
}

pub fn det_oracle(a: &SquareMatrix, method: OracleMethod) -> Result<Integer> {
    match method {
        OracleMethod::Cofactor => {
            if a.n > COFACTOR_LIMIT {
                return Err(Error::SizeLimit {
                    method: "cofactor",
                    n: a.n,
                    limit: COFACTOR_LIMIT,
                });
            }
            let cols: Vec<usize> = (0..a.n).collect();
            Ok(cofactor(a, 0, &cols))
        }
        OracleMethod::Permutation => {
            if a.n > PERMUTATION_LIMIT {
                return Err(Error::SizeLimit {
                    method: "permutation",
                    n: a.n,
                    limit: PERMUTATION_LIMIT,
                });
            }
            Ok(permutation_sum(a))
        }
    }
}

/// Expansion of the minor on rows `row..n` and the given columns.
fn cofactor(a: &SquareMatrix, row: usize, cols: &[usize]) -> Integer {
    if cols.len() == 1 {
        return a.get(row, cols[0]).clone();
    }
    let mut acc = Integer::zero();
    let mut rest = Vec::with_capacity(cols.len() - 1);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = a.get(row, c);
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&x| x != c));
        let term = entry.mul(&cofactor(a, row + 1, &rest));
        acc = if pos % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Heap's algorithm; each transposition flips the sign.
fn permutation_sum(a: &SquareMatrix) -> Integer {
    let n = a.n;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut positive = true;
    let product = |perm: &[usize]| {
        perm.iter()
            .enumerate()
            .fold(Integer::one(), |acc, (i, &j)| acc.mul(a.get(i, j)))
    };
    let mut acc = product(&perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(j, i);
            positive = !positive;
            let term = product(&perm);
            acc = if positive {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    acc
}

/// Determinant of the top-left `k x k` block, by cofactor expansion.
pub fn leading_principal_minor(a: &SquareMatrix, k: usize) -> Result<Integer> {
    if k == 0 || k > a.n {
        return Err(Error::DimensionMismatch(format!(
            "minor order {k} outside 1..={}",
            a.n
        )));
    }
    det_oracle(&a.leading(k), OracleMethod::Cofactor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m<R: AsRef<[i64]>>(rows: &[R]) -> SquareMatrix {
        SquareMatrix::from_i64(rows).unwrap()
    }

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn chio_examples() {
        assert_eq!(
            det_via_chio(&m(&[[2, 1], [1, 3]]), PivotPolicy::Strict).unwrap(),
            int(5)
        );
        assert_eq!(
            det_via_chio(&m(&[[2, 1, 1], [1, 3, 1], [1, 1, 4]]), PivotPolicy::Strict).unwrap(),
            int(17)
        );
        assert_eq!(
            det_via_chio(&m(&[[0, 1], [1, 0]]), PivotPolicy::Swap).unwrap(),
            int(-1)
        );
        assert_eq!(
            det_via_chio(&m(&[[0, 1], [1, 0]]), PivotPolicy::Strict),
            Err(Error::SingularLeadingMinor { order: 1 })
        );
        assert_eq!(
            det_via_chio(&m(&[[0, 1], [0, 2]]), PivotPolicy::Swap).unwrap(),
            int(0)
        );
        assert_eq!(
            det_via_chio(&m(&[[7]]), PivotPolicy::Strict).unwrap(),
            int(7)
        );
    }

    #[test]
    fn oracle_examples() {
        for method in [OracleMethod::Cofactor, OracleMethod::Permutation] {
            assert_eq!(det_oracle(&m(&[[7]]), method).unwrap(), int(7));
            assert_eq!(det_oracle(&m(&[[2, 1], [1, 3]]), method).unwrap(), int(5));
            assert_eq!(
                det_oracle(&m(&[[2, 1, 1], [1, 3, 1], [1, 1, 4]]), method).unwrap(),
                int(17)
            );
            // Odd 4-cycle.
            let cycle = m(&[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]);
            assert_eq!(det_oracle(&cycle, method).unwrap(), int(-1));
        }
    }

    #[test]
    fn size_guards() {
        let big = SquareMatrix::from_rows(vec![vec![int(1); 9]; 9]).unwrap();
        assert_eq!(
            det_oracle(&big, OracleMethod::Cofactor),
            Err(Error::SizeLimit {
                method: "cofactor",
                n: 9,
                limit: 8
            })
        );
        let seven = SquareMatrix::from_rows(vec![vec![int(1); 7]; 7]).unwrap();
        assert!(matches!(
            det_oracle(&seven, OracleMethod::Permutation),
            Err(Error::SizeLimit {
                method: "permutation",
                ..
            })
        ));
    }

    #[test]
    fn minors() {
        let a = m(&[[2, 1, 1], [1, 3, 1], [1, 1, 4]]);
        assert_eq!(leading_principal_minor(&a, 1).unwrap(), int(2));
        assert_eq!(leading_principal_minor(&a, 2).unwrap(), int(5));
        assert_eq!(
            leading_principal_minor(&a, 3).unwrap(),
            det_oracle(&a, OracleMethod::Cofactor).unwrap()
        );
        assert!(leading_principal_minor(&a, 0).is_err());
        assert!(leading_principal_minor(&a, 4).is_err());
    }

    #[test]
    fn non_square_rejected() {
        assert!(SquareMatrix::from_i64(&[vec![1, 2]]).is_err());
        assert!(SquareMatrix::from_rows(vec![]).is_err());
    }
}
