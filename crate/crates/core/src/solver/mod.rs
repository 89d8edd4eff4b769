//! Solvability and exact counts for linearized equations over subfields,
//! subfield sumsets, and systems of prescribed traces.
//!
//! Counts are `q^e` and are always reported as a [`PowerCount`]; the
//! exponent is the interesting quantity and `q^e` overflows quickly.

mod equation;
mod sumset;
mod trace;

use serde::Serialize;

pub use equation::{
    big_g, big_h, count_solutions, count_solutions_at, enumerate_solutions, solution_space, solve_one,
    CountResult, EquationSpec, SolutionSpace,
};
pub use sumset::{lambda_ie, sumset_size, zero_sum_count};
pub use trace::{trace_consistent, trace_count, trace_solve, traces_match, TraceTarget};

/// The number `base^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PowerCount {
    pub base: u32,
    pub exponent: u64,
}

impl PowerCount {
    pub fn new(base: u32, exponent: u64) -> Self {
        Self { base, exponent }
    }

    /// The expanded value, if it fits.
    pub fn value(&self) -> Option<u128> {
        u32::try_from(self.exponent)
            .ok()
            .and_then(|e| u128::from(self.base).checked_pow(e))
    }
}

impl std::fmt::Display for PowerCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}^{}", self.base, self.exponent)
    }
}
