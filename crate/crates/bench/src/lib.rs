//! Seeded inputs shared by the criterion benches.

use fangcheng::corpus::{random_nonsingular_system, trial_rng, DEFAULT_RANGE};
use fangcheng::{Integer, Tableau};

pub const SEED: u64 = 7;

/// A nonsingular `n x (n+1)` system, the same for every run.
pub fn system(n: usize) -> Tableau<Integer> {
    random_nonsingular_system(&mut trial_rng(SEED, n as u64), n, DEFAULT_RANGE).tableau
}

pub const SIZES: [usize; 4] = [4, 8, 12, 16];
