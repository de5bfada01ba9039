#![allow(dead_code)]

use gridbc_core::{enumerate_maximal_bicliques, Biclique, Cover, EdgeSet, Grid};
use rand::seq::SliceRandom;
use rand::Rng;

/// Valid cover by maximal bicliques: repeatedly pick an uncovered edge at
/// random and a random maximal biclique through it, then throw in a few
/// extra elements.
pub fn random_maximal_cover<R: Rng>(grid: &Grid, rng: &mut R) -> Cover {
    let cands = enumerate_maximal_bicliques(grid);
    let sets: Vec<EdgeSet> = cands.iter().map(|b| b.edge_set(grid).unwrap()).collect();
    let mut uncovered = EdgeSet::full(grid.edge_count());
    let mut chosen: Vec<Biclique> = Vec::new();
    while !uncovered.is_empty() {
        let open: Vec<usize> = uncovered.iter().collect();
        let e = *open.choose(rng).unwrap();
        let through: Vec<usize> = (0..cands.len()).filter(|&i| sets[i].contains(e)).collect();
        let pick = *through.choose(rng).unwrap();
        uncovered.difference_with(&sets[pick]);
        chosen.push(cands[pick]);
    }
    for _ in 0..rng.gen_range(0..4) {
        chosen.push(*cands.choose(rng).unwrap());
    }
    Cover::dedup(grid.dims(), chosen)
}
