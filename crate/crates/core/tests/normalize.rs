mod common;

use gridbc_core::{
    enumerate_maximal_bicliques, is_normalized, normalize_cover, verify_cover, Biclique, EdgeSet, Grid, Symmetry,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest normalized cover without repeats: every unit square plus every
/// interior star.
fn ceiling(p: u32, q: u32) -> usize {
    ((p - 1) * (q - 1) + (p - 2) * (q - 2)) as usize
}

#[test]
fn ceiling_is_largest_normalized_set() {
    // Interior elements never conflict, so the largest normalized set is the
    // interior elements plus a maximum conflict-free set of boundary ones.
    for (p, q) in [(2, 2), (2, 3), (2, 6), (3, 3), (3, 4), (3, 5), (4, 4), (4, 5)] {
        let g = Grid::new(p, q).unwrap();
        let all = enumerate_maximal_bicliques(&g);
        let (boundary, interior): (Vec<Biclique>, Vec<Biclique>) =
            all.into_iter().partition(|b| b.is_boundary_element(&g));
        let sets: Vec<EdgeSet> = boundary.iter().map(|b| b.edge_set(&g).unwrap()).collect();
        let n = boundary.len();
        let conflict: Vec<u32> = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && (boundary[i].is_star() || boundary[j].is_star()) && sets[i].intersects(&sets[j]))
                    .fold(0, |m, j| m | 1 << j)
            })
            .collect();
        let best = (0u32..1 << n)
            .filter(|mask| (0..n).all(|i| mask >> i & 1 == 0 || conflict[i] & mask == 0))
            .map(u32::count_ones)
            .max()
            .unwrap();
        assert_eq!(best as usize + interior.len(), ceiling(p, q), "{p}x{q}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normalization_contract(p in 2u32..9, q in 2u32..13, seed in any::<u64>()) {
        let g = Grid::new(p, q).unwrap();
        let c = common::random_maximal_cover(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        let boundary_stars = c.elements().iter().filter(|b| b.is_star() && b.is_boundary_element(&g)).count();
        let n = normalize_cover(&g, &c).unwrap();
        prop_assert!(n.steps.len() <= boundary_stars);
        prop_assert_eq!(n.cover.len() + n.dropped, c.len());
        prop_assert_eq!(n.cover.len(), c.len().min(ceiling(p, q)));
        prop_assert!(verify_cover(&g, &n.cover).valid);
        prop_assert!(n.cover.all_maximal(&g));
        prop_assert!(is_normalized(&g, &n.cover).unwrap());
        // Idempotent.
        let again = normalize_cover(&g, &n.cover).unwrap();
        prop_assert!(again.steps.is_empty());
        prop_assert_eq!(again.cover, n.cover);
    }
}

#[test]
fn boundary_stars_pairwise_disjoint_after_normalizing() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let g = Grid::new(5, 7).unwrap();
        let c = common::random_maximal_cover(&g, &mut rng);
        let n = normalize_cover(&g, &c).unwrap().cover;
        let stars: Vec<&Biclique> = n.elements().iter().filter(|b| b.is_star() && b.is_boundary_element(&g)).collect();
        for (i, a) in stars.iter().enumerate() {
            for b in &stars[i + 1..] {
                let ea = a.edges(g.dims()).unwrap();
                assert!(b.edges(g.dims()).unwrap().iter().all(|e| !ea.contains(e)), "{a} and {b} overlap");
            }
        }
    }
}

#[test]
fn normalized_covers_stay_normalized_under_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let g = Grid::new(4, 6).unwrap();
        let n = normalize_cover(&g, &common::random_maximal_cover(&g, &mut rng)).unwrap().cover;
        for s in Symmetry::all() {
            let mapped = n.map(s);
            let mg = Grid::from_dims(mapped.dims());
            assert!(is_normalized(&mg, &mapped).unwrap());
        }
    }
}
