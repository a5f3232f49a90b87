//! Exact elimination on integer tableaux.
//!
//! The forward phase shares one update rule across three divisor choices
//! ([`PivotStrategy`]); systems can be finished by back substitution, by an
//! integer-preserving backward phase, or by Gauss-Jordan. Every step can be
//! recorded as a [`BoardSnapshot`].

pub mod corpus;
pub mod detkit;
pub mod diagonalize;
pub mod eliminate;
pub mod error;
pub mod report;
pub mod ring;
pub mod solve;
pub mod tableau;
pub mod trace;
pub mod wellprob;

pub use detkit::{det_oracle, det_via_chio, leading_principal_minor, OracleMethod, SquareMatrix};
pub use diagonalize::{
    back_substitute, gauss_jordan, hart_backward, hart_solution, op_count_compare, Moderation,
    OpCountReport, Solution,
};
pub use eliminate::{forward_eliminate, forward_step, pivot_select, PivotPolicy, PivotStrategy};
pub use error::{Error, Result};
pub use ring::{Integer, MultiPoly, OpTally, Rational, Ring, ToRational};
pub use solve::{solve_system, Finish, SolveOptions, SolveRun};
pub use tableau::{generic_tableau, int_tableau, parse_tableau, RenderFormat, Tableau};
pub use trace::{BoardSnapshot, Phase, RunResult, Trace, TraceDocument};
pub use wellprob::{build_well_system, solve_well, WellSystem};
