mod common;

use gridbc_core::{bc_value, maximalize, optimal_cover, representable, verify_cover, Grid};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn waste_equals_multiplicity_count(p in 2u32..9, q in 2u32..13, seed in any::<u64>()) {
        let g = Grid::new(p, q).unwrap();
        let c = common::random_maximal_cover(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        let r = verify_cover(&g, &c);
        prop_assert!(r.valid && r.all_maximal);
        prop_assert_eq!(r.waste, r.multiplicity_waste());
        // Independent count of edge incidences.
        let incidences: usize = c.elements().iter().map(|b| b.size()).sum();
        let extra: usize = r.multiplicities.iter().map(|(&i, &t)| (i as usize - 1) * t).sum();
        prop_assert_eq!(incidences, g.edge_count() + extra);
    }

    #[test]
    fn bc_is_symmetric(p in 1u32..200, q in 1u32..200) {
        prop_assert_eq!(bc_value(p, q), bc_value(q, p));
    }
}

#[test]
fn representable_optima_waste_p_plus_q_minus_4() {
    for p in (2..=16u32).step_by(2) {
        for q in p..=60 {
            if representable(p, q).unwrap().is_none() {
                continue;
            }
            let g = Grid::new(p, q).unwrap();
            let c = maximalize(&g, &optimal_cover(p, q).unwrap());
            let r = verify_cover(&g, &c);
            assert_eq!(r.waste, p as i64 + q as i64 - 4, "{p}x{q}");
            assert_eq!(r.waste, r.multiplicity_waste(), "{p}x{q}");
            assert_eq!(c.len() as u64, bc_value(p, q));
        }
    }
}
