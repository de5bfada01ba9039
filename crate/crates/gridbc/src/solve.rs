//! Wall-clock budgets for the exact solver.

use std::time::{Duration, Instant};

use gridbc_core::{solve_exact_with, Grid, SolveOptions, SolveOutcome};

pub fn solve_with_budget(grid: &Grid, budget: Option<Duration>) -> SolveOutcome {
    let start = Instant::now();
    let mut stop = || budget.is_some_and(|b| start.elapsed() >= b);
    solve_exact_with(grid, SolveOptions::default(), &mut stop)
}
