//! Exact minimum biclique cover by branch-and-bound set cover over the
//! maximal bicliques of a grid.

use alloc::vec::Vec;

use crate::biclique::{enumerate_maximal_bicliques, Biclique};
use crate::construct::optimal_cover;
use crate::cover::{maximalize, Cover};
use crate::edgeset::EdgeSet;
use crate::grid::Grid;
use crate::theory::special_edge_set;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Start from the constructed cover's size, so the search only has to
    /// rule out anything smaller.
    pub seed_incumbent: bool,
    /// Use the peeled-edge-set bound in addition to `⌈|U|/4⌉`.
    pub certificate_bound: bool,
    /// Nodes between calls to the stop callback.
    pub check_interval: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { seed_incumbent: true, certificate_bound: true, check_interval: 1024 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Optimal { size: usize, witness: Cover, nodes: u64 },
    /// The stop callback fired before optimality was proven.
    Incomplete { lower: usize, upper: Option<usize>, best: Option<Cover>, nodes: u64 },
}

impl SolveOutcome {
    pub fn optimum(&self) -> Option<usize> {
        match self {
            SolveOutcome::Optimal { size, .. } => Some(*size),
            SolveOutcome::Incomplete { .. } => None,
        }
    }
}

/// Admissible lower bound on the number of bicliques needed to cover
/// `uncovered`: `max(⌈|U ∩ S|/2⌉, ⌈|U|/4⌉)` for the peeled edge set `S`.
pub fn lower_bound_hint(grid: &Grid, uncovered: &EdgeSet) -> usize {
    hint(&special_bitmap(grid), uncovered, true)
}

fn special_bitmap(grid: &Grid) -> EdgeSet {
    let mut s = EdgeSet::empty(grid.edge_count());
    for e in special_edge_set(grid.dims()).edges {
        s.insert(grid.edge_index(e).expect("grid edge"));
    }
    s
}

fn hint(special: &EdgeSet, uncovered: &EdgeSet, certificate: bool) -> usize {
    let quarter = uncovered.count().div_ceil(4);
    if certificate {
        quarter.max(uncovered.intersection_count(special).div_ceil(2))
    } else {
        quarter
    }
}

pub fn solve_exact(grid: &Grid) -> SolveOutcome {
    solve_exact_with(grid, SolveOptions::default(), &mut || false)
}

/// Branch on the uncovered edge lying in the fewest candidates, trying its
/// non-dominated candidates in canonical order.
pub fn solve_exact_with(grid: &Grid, opts: SolveOptions, should_stop: &mut dyn FnMut() -> bool) -> SolveOutcome {
    let candidates = enumerate_maximal_bicliques(grid);
    let sets: Vec<EdgeSet> = candidates.iter().map(|b| b.edge_set(grid).expect("maximal bicliques fit")).collect();
    let mut containing: Vec<Vec<usize>> = alloc::vec![Vec::new(); grid.edge_count()];
    for (ci, s) in sets.iter().enumerate() {
        for e in s.iter() {
            containing[e].push(ci);
        }
    }

    let mut incumbent: Option<Cover> = None;
    let mut best = usize::MAX;
    if opts.seed_incumbent && grid.edge_count() > 0 {
        if let Ok(c) = optimal_cover(grid.p(), grid.q()) {
            let c = maximalize(grid, &c);
            best = c.len();
            incumbent = Some(c);
        }
    }

    let mut search = Search {
        sets: &sets,
        containing: &containing,
        special: special_bitmap(grid),
        certificate: opts.certificate_bound,
        best,
        best_choice: None,
        chosen: Vec::new(),
        nodes: 0,
        interval: opts.check_interval.max(1),
        stop: should_stop,
        aborted: false,
    };
    let all = EdgeSet::full(grid.edge_count());
    let root_lower = hint(&search.special, &all, search.certificate);
    search.run(&all);

    let found = search.best_choice.take().map(|idx| {
        let elements: Vec<Biclique> = idx.iter().map(|&i| candidates[i]).collect();
        Cover::new(grid.dims(), elements).expect("distinct candidates")
    });
    let best_cover = found.or(incumbent);
    if search.aborted {
        SolveOutcome::Incomplete {
            lower: root_lower,
            upper: best_cover.as_ref().map(Cover::len),
            best: best_cover,
            nodes: search.nodes,
        }
    } else {
        let witness = best_cover.unwrap_or_else(|| Cover::empty(grid.dims()));
        SolveOutcome::Optimal { size: witness.len(), witness, nodes: search.nodes }
    }
}

struct Search<'a> {
    sets: &'a [EdgeSet],
    containing: &'a [Vec<usize>],
    special: EdgeSet,
    certificate: bool,
    best: usize,
    best_choice: Option<Vec<usize>>,
    chosen: Vec<usize>,
    nodes: u64,
    interval: u64,
    stop: &'a mut dyn FnMut() -> bool,
    aborted: bool,
}

impl Search<'_> {
    fn run(&mut self, uncovered: &EdgeSet) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(self.interval) && (self.stop)() {
            self.aborted = true;
            return;
        }
        if uncovered.is_empty() {
            if self.chosen.len() < self.best {
                self.best = self.chosen.len();
                self.best_choice = Some(self.chosen.clone());
            }
            return;
        }
        if self.chosen.len() + hint(&self.special, uncovered, self.certificate) >= self.best {
            return;
        }
        let edge = uncovered
            .iter()
            .min_by_key(|&e| self.containing[e].len())
            .expect("non-empty residual");
        let options = &self.containing[edge];
        let residual: Vec<EdgeSet> = options.iter().map(|&c| self.sets[c].intersection(uncovered)).collect();
        for (i, &cand) in options.iter().enumerate() {
            let dominated = (0..options.len()).any(|j| {
                j != i
                    && residual[i].is_subset(&residual[j])
                    && (residual[i] != residual[j] || j < i)
            });
            if dominated {
                continue;
            }
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[cand]);
            self.chosen.push(cand);
            self.run(&next);
            self.chosen.pop();
            if self.aborted {
                return;
            }
        }
    }
}
