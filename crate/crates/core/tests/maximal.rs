use std::collections::BTreeSet;

use gridbc_core::{enumerate_maximal_bicliques, special_edge_set, Biclique, Edge, Grid, Vertex};

/// Every biclique of the grid, by brute force: stars on any non-empty set of
/// neighbours, and every unit square.
fn all_bicliques(g: &Grid) -> Vec<Biclique> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let nb: Vec<Vertex> = g.neighbors(v).collect();
        for mask in 1u32..(1 << nb.len()) {
            let leaves: Vec<Vertex> = (0..nb.len()).filter(|i| mask >> i & 1 == 1).map(|i| nb[i]).collect();
            out.push(Biclique::star(v, &leaves).unwrap());
        }
    }
    for col in 1..g.q() {
        for row in 1..g.p() {
            out.push(Biclique::cycle(Vertex::new(col, row)));
        }
    }
    out
}

fn edge_set(g: &Grid, b: &Biclique) -> BTreeSet<Edge> {
    b.edges(g.dims()).unwrap().into_iter().collect()
}

#[test]
fn enumeration_matches_brute_force_maximality() {
    for p in 1..=4 {
        for q in 1..=4 {
            let g = Grid::new(p, q).unwrap();
            let all = all_bicliques(&g);
            let sets: Vec<BTreeSet<Edge>> = all.iter().map(|b| edge_set(&g, b)).collect();
            let mut brute: Vec<Biclique> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| !sets.iter().any(|s| s.len() > sets[*i].len() && sets[*i].is_subset(s)))
                .map(|(_, b)| *b)
                .collect();
            // Two different stars can share an edge set only when both are the
            // single edge of a 1x2 grid.
            brute.sort();
            brute.dedup_by(|a, b| edge_set(&g, a) == edge_set(&g, b));
            let got = enumerate_maximal_bicliques(&g);
            assert_eq!(got, brute, "{p}x{q}");
            assert!(got.iter().all(|b| b.is_maximal(&g)));
        }
    }
}

#[test]
fn maximal_count_formula() {
    for p in 1..=12u32 {
        for q in 1..=12u32 {
            let g = Grid::new(p, q).unwrap();
            let expected = if p == 1 || q == 1 {
                let n = p.max(q) as usize;
                match n {
                    1 => 0,
                    2 => 1,
                    _ => n - 2,
                }
            } else {
                let squares = ((p - 1) * (q - 1)) as usize;
                let high_degree = g.vertices().filter(|v| g.degree(*v) >= 3).count();
                squares + high_degree
            };
            assert_eq!(enumerate_maximal_bicliques(&g).len(), expected, "{p}x{q}");
        }
    }
}

#[test]
fn special_set_sizes() {
    for p in 1..=30u32 {
        for q in p..=30 {
            let s = special_edge_set(Grid::new(p, q).unwrap().dims());
            let expected = if p % 2 == 1 { p * q - 1 } else { p * q - 2 };
            assert_eq!(s.len() as u32, expected, "{p}x{q}");
        }
    }
}

#[test]
fn maximal_bicliques_meet_special_set_at_most_twice() {
    for p in 1..=20u32 {
        for q in p..=20 {
            let g = Grid::new(p, q).unwrap();
            let s: BTreeSet<Edge> = special_edge_set(g.dims()).edges.into_iter().collect();
            for b in enumerate_maximal_bicliques(&g) {
                let hits = b.edges(g.dims()).unwrap().iter().filter(|e| s.contains(e)).count();
                assert!(hits <= 2, "{p}x{q}: {b} meets S {hits} times");
            }
        }
    }
}
