//! Closed-form biclique covering numbers of grids and the ring-peeling edge
//! set that certifies the matching lower bound.

use alloc::vec::Vec;

use crate::error::TheoryError;
use crate::grid::{Edge, Grid, GridDims, Vertex};

/// `q − 1 = k(p − 1) + 2ℓ` with `0 ≤ ℓ < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub k: u32,
    pub ell: u32,
}

impl Decomposition {
    /// Whether this pair decomposes `q − 1` for `p` rows.
    pub fn is_valid_for(self, p: u32, q: u32) -> bool {
        p >= 2
            && q >= 1
            && self.ell < self.k
            && (q as u64 - 1) == self.k as u64 * (p as u64 - 1) + 2 * self.ell as u64
    }
}

/// The max-`k` decomposition of `(p, q)`, if one exists.
///
/// Requires `p` even and `p ≤ q`.
pub fn representable(p: u32, q: u32) -> Result<Option<Decomposition>, TheoryError> {
    if p == 0 || p % 2 == 1 {
        return Err(TheoryError::OddRows(p));
    }
    if p > q {
        return Err(TheoryError::NotOriented { p, q });
    }
    let (step, total) = (p - 1, q - 1);
    let decomposition = (1..=total / step).rev().find_map(|k| {
        let rest = total - k * step;
        (rest % 2 == 0 && rest / 2 < k).then_some(Decomposition { k, ell: rest / 2 })
    });
    Ok(decomposition)
}

/// Which case of the formula applies to a grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `p` even and representable: `pq/2 − 1`.
    Representable(Decomposition),
    /// Everything else: `⌊pq/2⌋`.
    Floor,
}

/// Branch of the closed form for `(p, q)` after orienting `p ≤ q`.
pub fn branch(p: u32, q: u32) -> Branch {
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    if p >= 2 && p % 2 == 0 {
        if let Ok(Some(d)) = representable(p, q) {
            return Branch::Representable(d);
        }
    }
    Branch::Floor
}

/// The biclique covering number of `G_{p,q}`. Inputs are transposed as
/// needed.
pub fn bc_value(p: u32, q: u32) -> u64 {
    let pq = p as u64 * q as u64;
    match branch(p, q) {
        Branch::Representable(_) => pq / 2 - 1,
        Branch::Floor => pq / 2,
    }
}

/// Edge set built by peeling rings: the outer cycle of every ring with at
/// least three rows, then all horizontal edges of the last 1- or 2-row strip.
///
/// Every biclique of the grid meets it in at most two edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialEdgeSet {
    pub dims: GridDims,
    pub edges: Vec<Edge>,
}

impl SpecialEdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Build the peeled edge set for `p × q`. "Horizontal" refers to the long
/// side: for `p > q` the set is built on the transpose and mapped back.
pub fn special_edge_set(dims: GridDims) -> SpecialEdgeSet {
    let (oriented, flipped) = dims.oriented();
    let (p, q) = (oriented.p(), oriented.q());
    let mut edges = Vec::new();
    let mut ring = 0;
    loop {
        let rows = p as i64 - 2 * ring as i64;
        let cols = q as i64 - 2 * ring as i64;
        if rows <= 0 || cols <= 0 {
            break;
        }
        let (rows, cols) = (rows as u32, cols as u32);
        let shift = |v: Vertex| Vertex::new(v.col + ring, v.row + ring);
        let inner = Grid::new(rows, cols).expect("positive ring");
        if rows <= 2 {
            edges.extend(
                inner
                    .edges()
                    .filter(|e| e.is_horizontal())
                    .map(|e| Edge::new(shift(e.lo()), shift(e.hi())).expect("shifted edge")),
            );
            break;
        }
        let out = inner.outer_cycle().expect("ring has at least 3 rows and columns");
        edges.extend(out.into_iter().map(|e| Edge::new(shift(e.lo()), shift(e.hi())).expect("shifted edge")));
        ring += 1;
    }
    if flipped {
        for e in edges.iter_mut() {
            let [a, b] = e.endpoints();
            *e = Edge::new(Vertex::new(a.row, a.col), Vertex::new(b.row, b.col)).expect("transposed edge");
        }
    }
    edges.sort();
    SpecialEdgeSet { dims, edges }
}

/// `⌈|S| / 2⌉` for the peeled edge set `S`.
pub fn lower_bound(dims: GridDims) -> u64 {
    (special_edge_set(dims).len() as u64).div_ceil(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(p: u32, q: u32) -> GridDims {
        GridDims::new(p, q).unwrap()
    }

    #[test]
    fn representable_examples() {
        assert_eq!(representable(8, 17), Ok(Some(Decomposition { k: 2, ell: 1 })));
        assert_eq!(representable(6, 8), Ok(None));
        assert_eq!(representable(2, 5), Ok(Some(Decomposition { k: 4, ell: 0 })));
        assert_eq!(representable(3, 5), Err(TheoryError::OddRows(3)));
        assert_eq!(representable(6, 4), Err(TheoryError::NotOriented { p: 6, q: 4 }));
    }

    #[test]
    fn representable_brute_force() {
        for p in (2..=12).step_by(2) {
            for q in p..=80 {
                let mut all = Vec::new();
                for k in 1..=q {
                    for ell in 0..k {
                        if (Decomposition { k, ell }).is_valid_for(p, q) {
                            all.push(Decomposition { k, ell });
                        }
                    }
                }
                let best = all.iter().copied().max_by_key(|d| d.k);
                assert_eq!(representable(p, q).unwrap(), best, "{p}x{q}");
            }
        }
    }

    #[test]
    fn bc_examples() {
        assert_eq!(bc_value(6, 6), 17);
        assert_eq!(bc_value(8, 17), 67);
        assert_eq!(bc_value(6, 25), 74);
        assert_eq!(bc_value(1, 1), 0);
        assert_eq!(bc_value(3, 3), 4);
        assert_eq!(bc_value(17, 8), 67);
    }

    #[test]
    fn two_row_grids() {
        for q in 2..200 {
            assert_eq!(bc_value(2, q), q as u64 - 1);
        }
    }

    #[test]
    fn special_set_examples() {
        let s = special_edge_set(dims(2, 3));
        assert_eq!(s.len(), 4);
        assert!(s.edges.iter().all(|e| e.is_horizontal()));
        assert_eq!(special_edge_set(dims(3, 3)).len(), 8);
        assert_eq!(special_edge_set(dims(5, 7)).len(), 34);
        assert_eq!(lower_bound(dims(6, 6)), 17);
        assert_eq!(lower_bound(dims(3, 3)), 4);
        assert_eq!(lower_bound(dims(1, 1)), 0);
    }

    #[test]
    fn special_set_is_a_set_of_grid_edges() {
        let d = dims(7, 4);
        let g = Grid::from_dims(d);
        let s = special_edge_set(d);
        let mut idx: Vec<_> = s.edges.iter().map(|e| g.edge_index(*e).unwrap()).collect();
        idx.dedup();
        assert_eq!(idx.len(), 4 * 7 - 2);
    }
}
