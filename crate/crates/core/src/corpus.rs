//! Seeded random tableaux.
//!
//! Trial `r` of a run with seed `s` draws from ChaCha8 seeded with `s` on
//! stream `r`, so every trial is reproducible on its own and independent of
//! the order in which trials are executed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detkit::{self, SquareMatrix, COFACTOR_LIMIT};
use crate::eliminate::{forward_eliminate, PivotPolicy, PivotStrategy};
use crate::ring::{Integer, Ring};
use crate::tableau::Tableau;

pub const DEFAULT_RANGE: i64 = 9;

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A draw plus the number of rejected draws before it.
#[derive(Clone, Debug)]
pub struct Sample {
    pub tableau: Tableau<Integer>,
    pub resamples: u64,
}

/// `rows x cols` tableau with entries uniform in `[-range, range]`; rows that
/// come out entirely zero are redrawn.
pub fn random_tableau<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    range: i64,
) -> Tableau<Integer> {
    let grid = (0..rows)
        .map(|_| loop {
            let row: Vec<Integer> = (0..cols)
                .map(|_| Integer::from(rng.random_range(-range..=range)))
                .collect();
            if row.iter().any(|v| !v.is_zero()) {
                break row;
            }
        })
        .collect();
    Tableau::from_rows(grid).expect("rows >= 1 and cols >= rows")
}

/// `n x (n+1)` system whose coefficient block has nonzero determinant.
pub fn random_nonsingular_system<R: Rng>(rng: &mut R, n: usize, range: i64) -> Sample {
    draw_until(rng, n, n + 1, range, |t| {
        !detkit::det_via_chio(&SquareMatrix::leading_block(t), PivotPolicy::Swap)
            .expect("swap policy always completes")
            .is_zero()
    })
}

/// `n x m` tableau whose leading principal minors of orders `1..=n` are all
/// nonzero, so Chio runs without row exchanges. Minors are checked by cofactor
/// expansion up to its size guard.
pub fn random_with_nonzero_minors<R: Rng>(rng: &mut R, n: usize, m: usize, range: i64) -> Sample {
    draw_until(rng, n, m, range, |t| {
        if n <= COFACTOR_LIMIT {
            let a = SquareMatrix::leading_block(t);
            (1..=n).all(|k| !detkit::leading_principal_minor(&a, k).unwrap().is_zero())
        } else {
            forward_eliminate(t, PivotStrategy::Chio, PivotPolicy::Strict)
                .is_ok_and(|(e, _)| !e.get(n - 1, n - 1).is_zero())
        }
    })
}

fn draw_until<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    range: i64,
    accept: impl Fn(&Tableau<Integer>) -> bool,
) -> Sample {
    let mut resamples = 0;
    loop {
        let t = random_tableau(rng, rows, cols, range);
        if accept(&t) {
            return Sample {
                tableau: t,
                resamples,
            };
        }
        resamples += 1;
    }
}
