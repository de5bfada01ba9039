#![allow(dead_code)]

use gridbc_core::{enumerate_maximal_bicliques, Biclique, Cover, EdgeSet, Grid};
use rand::seq::SliceRandom;
use rand::Rng;

/// Cover `uncovered` by repeatedly picking an open edge at random and a
/// random maximal biclique through it.
fn complete<R: Rng>(grid: &Grid, chosen: &mut Vec<Biclique>, rng: &mut R) {
    let cands = enumerate_maximal_bicliques(grid);
    let sets: Vec<EdgeSet> = cands.iter().map(|b| b.edge_set(grid).unwrap()).collect();
    let mut uncovered = EdgeSet::full(grid.edge_count());
    for b in chosen.iter() {
        uncovered.difference_with(&b.edge_set(grid).unwrap());
    }
    while !uncovered.is_empty() {
        let open: Vec<usize> = uncovered.iter().collect();
        let e = *open.choose(rng).unwrap();
        let through: Vec<usize> = (0..cands.len()).filter(|&i| sets[i].contains(e)).collect();
        let pick = *through.choose(rng).unwrap();
        uncovered.difference_with(&sets[pick]);
        chosen.push(cands[pick]);
    }
}

/// Valid cover of maximal bicliques built at random, plus a few extras.
pub fn random_maximal_cover<R: Rng>(grid: &Grid, rng: &mut R) -> Cover {
    let mut chosen = Vec::new();
    complete(grid, &mut chosen, rng);
    let cands = enumerate_maximal_bicliques(grid);
    for _ in 0..rng.gen_range(0..4) {
        chosen.push(*cands.choose(rng).unwrap());
    }
    Cover::dedup(grid.dims(), chosen)
}

/// Take a valid cover, delete a few elements, patch the holes with random
/// maximal bicliques and throw in some extra boundary stars.
pub fn perturb<R: Rng>(grid: &Grid, cover: &Cover, rng: &mut R) -> Cover {
    let mut chosen: Vec<Biclique> = cover.elements().to_vec();
    for _ in 0..rng.gen_range(1..=4) {
        if chosen.is_empty() {
            break;
        }
        let i = rng.gen_range(0..chosen.len());
        chosen.swap_remove(i);
    }
    complete(grid, &mut chosen, rng);
    let stars: Vec<Biclique> = enumerate_maximal_bicliques(grid)
        .into_iter()
        .filter(|b| b.is_star() && b.is_boundary_element(grid))
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        if let Some(s) = stars.choose(rng) {
            chosen.push(*s);
        }
    }
    Cover::dedup(grid.dims(), chosen)
}
