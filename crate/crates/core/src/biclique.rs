//! Bicliques of a grid. Every complete bipartite subgraph of a grid is a star
//! `K_{1,k}` (k ≤ 4) or a unit-square 4-cycle `K_{2,2}`.

use alloc::vec::Vec;
use core::fmt;

use crate::edgeset::EdgeSet;
use crate::grid::{Dir, Edge, Grid, GridDims, Vertex};

/// The set of arms of a star, as a direction bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arms(u8);

impl Arms {
    pub const NONE: Arms = Arms(0);
    pub const ALL: Arms = Arms(0b1111);

    pub fn from_dirs(dirs: impl IntoIterator<Item = Dir>) -> Arms {
        Arms(dirs.into_iter().fold(0, |m, d| m | d.bit()))
    }

    pub fn contains(self, d: Dir) -> bool {
        self.0 & d.bit() != 0
    }

    pub fn with(self, d: Dir) -> Arms {
        Arms(self.0 | d.bit())
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Arms) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn dirs(self) -> impl Iterator<Item = Dir> {
        Dir::ALL.into_iter().filter(move |d| self.contains(*d))
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

impl fmt::Debug for Arms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.dirs()).finish()
    }
}

/// A biclique of a grid graph.
///
/// Ordering is canonical: stars (by center, then arms) before 4-cycles (by
/// anchor).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Biclique {
    Star { center: Vertex, arms: Arms },
    /// The unit square whose lower-left vertex is `anchor`.
    FourCycle { anchor: Vertex },
}

impl Biclique {
    /// Star from explicit leaves. `None` if a leaf is not adjacent to the
    /// center, leaves repeat, or there are none.
    pub fn star(center: Vertex, leaves: &[Vertex]) -> Option<Biclique> {
        let mut arms = Arms::NONE;
        for &leaf in leaves {
            let d = center.dir_to(leaf)?;
            if arms.contains(d) {
                return None;
            }
            arms = arms.with(d);
        }
        (!arms.is_empty()).then_some(Biclique::Star { center, arms })
    }

    /// Star at `center` taking every grid neighbor as a leaf.
    pub fn full_star(grid: &Grid, center: Vertex) -> Biclique {
        let arms = Arms::from_dirs(Dir::ALL.into_iter().filter(|d| center.step(*d, grid.dims()).is_some()));
        Biclique::Star { center, arms }
    }

    pub fn cycle(anchor: Vertex) -> Biclique {
        Biclique::FourCycle { anchor }
    }

    pub fn is_star(&self) -> bool {
        matches!(self, Biclique::Star { .. })
    }

    pub fn is_cycle(&self) -> bool {
        matches!(self, Biclique::FourCycle { .. })
    }

    /// A star with exactly three leaves.
    pub fn is_k13(&self) -> bool {
        matches!(self, Biclique::Star { arms, .. } if arms.len() == 3)
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        match self {
            Biclique::Star { arms, .. } => arms.len(),
            Biclique::FourCycle { .. } => 4,
        }
    }

    /// Star leaves in lexicographic order; empty for 4-cycles.
    pub fn leaves(&self) -> Vec<Vertex> {
        match *self {
            Biclique::Star { center, arms } => {
                let mut out: Vec<Vertex> = arms
                    .dirs()
                    .filter_map(|d| {
                        let (dc, dr) = d.delta();
                        let col = center.col.checked_add_signed(dc)?;
                        let row = center.row.checked_add_signed(dr)?;
                        Some(Vertex::new(col, row))
                    })
                    .collect();
                out.sort();
                out
            }
            Biclique::FourCycle { .. } => Vec::new(),
        }
    }

    /// Vertices of a 4-cycle, counter-clockwise from the anchor.
    pub fn square_corners(anchor: Vertex) -> [Vertex; 4] {
        let Vertex { col, row } = anchor;
        [
            anchor,
            Vertex::new(col + 1, row),
            Vertex::new(col + 1, row + 1),
            Vertex::new(col, row + 1),
        ]
    }

    /// Whether the biclique is a subgraph of the grid.
    pub fn fits(&self, dims: GridDims) -> bool {
        match *self {
            Biclique::Star { center, arms } => {
                !arms.is_empty()
                    && dims.contains(center)
                    && arms.dirs().all(|d| center.step(d, dims).is_some())
            }
            Biclique::FourCycle { anchor } => {
                anchor.col >= 1 && anchor.row >= 1 && anchor.col < dims.q() && anchor.row < dims.p()
            }
        }
    }

    /// Edge set, or `None` if the biclique does not fit in the grid.
    pub fn edges(&self, dims: GridDims) -> Option<Vec<Edge>> {
        if !self.fits(dims) {
            return None;
        }
        Some(match *self {
            Biclique::Star { center, arms } => arms
                .dirs()
                .map(|d| Edge::new(center, center.step(d, dims).expect("fits")).expect("adjacent"))
                .collect(),
            Biclique::FourCycle { anchor } => {
                let c = Self::square_corners(anchor);
                (0..4).map(|i| Edge::new(c[i], c[(i + 1) % 4]).expect("adjacent")).collect()
            }
        })
    }

    /// Edge set as a bitmap over the grid's canonical numbering.
    pub fn edge_set(&self, grid: &Grid) -> Option<EdgeSet> {
        let mut set = EdgeSet::empty(grid.edge_count());
        for e in self.edges(grid.dims())? {
            set.insert(grid.edge_index(e).expect("edge of a fitting biclique"));
        }
        Some(set)
    }

    pub fn contains_edge(&self, dims: GridDims, e: Edge) -> bool {
        self.edges(dims).is_some_and(|es| es.contains(&e))
    }

    /// Edge-maximality among bicliques of `grid`.
    ///
    /// 4-cycles are always maximal. A star is maximal when it uses every
    /// neighbor of its center and cannot be extended to a 4-cycle, i.e. the
    /// center has degree at least 3; in 1-wide grids the path stars `K_{1,2}`
    /// and the lone edge of `G_{1,2}` are maximal too.
    pub fn is_maximal(&self, grid: &Grid) -> bool {
        if !self.fits(grid.dims()) {
            return false;
        }
        match *self {
            Biclique::FourCycle { .. } => true,
            Biclique::Star { center, arms } => {
                let Biclique::Star { arms: all, .. } = Self::full_star(grid, center) else {
                    unreachable!()
                };
                if arms != all {
                    return false;
                }
                let deg = arms.len();
                if grid.p() >= 2 && grid.q() >= 2 {
                    deg >= 3
                } else {
                    deg == 2 || grid.edge_count() == 1
                }
            }
        }
    }

    /// Whether the biclique contains an edge of the outer cycle.
    pub fn is_boundary_element(&self, grid: &Grid) -> bool {
        self.edges(grid.dims())
            .is_some_and(|es| es.iter().any(|e| grid.is_outer_edge(*e)))
    }
}

impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Biclique::Star { center, arms } => write!(f, "K1,{}@{}", arms.len(), center),
            Biclique::FourCycle { anchor } => write!(f, "C4@{}", anchor),
        }
    }
}

/// All edge-maximal bicliques of `grid` in canonical order.
///
/// For `p, q ≥ 2` these are the `(p−1)(q−1)` unit squares, one `K_{1,3}` per
/// degree-3 vertex and one `K_{1,4}` per interior vertex. In a 1-wide grid
/// they are the `K_{1,2}` stars at interior path vertices, or the single edge
/// of a 2-vertex path.
pub fn enumerate_maximal_bicliques(grid: &Grid) -> Vec<Biclique> {
    let mut out = Vec::new();
    let dims = grid.dims();
    if grid.edge_count() == 0 {
        return out;
    }
    if grid.edge_count() == 1 {
        let a = Vertex::new(1, 1);
        out.push(Biclique::full_star(grid, a));
        return out;
    }
    for v in grid.vertices() {
        let s = Biclique::full_star(grid, v);
        if s.is_maximal(grid) {
            out.push(s);
        }
    }
    for col in 1..dims.q() {
        for row in 1..dims.p() {
            out.push(Biclique::cycle(Vertex::new(col, row)));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(p: u32, q: u32) -> Grid {
        Grid::new(p, q).unwrap()
    }

    #[test]
    fn star_edge_counts() {
        let g = grid(3, 3);
        let s = Biclique::star(
            Vertex::new(2, 1),
            &[Vertex::new(1, 1), Vertex::new(3, 1), Vertex::new(2, 2)],
        )
        .unwrap();
        assert_eq!(s.edges(g.dims()).unwrap().len(), 3);
        let c = Biclique::cycle(Vertex::new(1, 1));
        let mut es = c.edges(g.dims()).unwrap();
        es.sort();
        assert_eq!(
            es,
            [
                Edge::new(Vertex::new(1, 1), Vertex::new(1, 2)).unwrap(),
                Edge::new(Vertex::new(1, 1), Vertex::new(2, 1)).unwrap(),
                Edge::new(Vertex::new(1, 2), Vertex::new(2, 2)).unwrap(),
                Edge::new(Vertex::new(2, 1), Vertex::new(2, 2)).unwrap(),
            ]
        );
        let k14 = Biclique::full_star(&g, Vertex::new(2, 2));
        assert_eq!(k14.edges(g.dims()).unwrap().len(), 4);
    }

    #[test]
    fn star_rejects_bad_leaves() {
        let c = Vertex::new(2, 2);
        assert!(Biclique::star(c, &[Vertex::new(3, 3)]).is_none());
        assert!(Biclique::star(c, &[Vertex::new(1, 2), Vertex::new(1, 2)]).is_none());
        assert!(Biclique::star(c, &[]).is_none());
    }

    #[test]
    fn fits_checks_grid() {
        let d = GridDims::new(3, 4).unwrap();
        assert!(Biclique::cycle(Vertex::new(3, 2)).fits(d));
        assert!(!Biclique::cycle(Vertex::new(4, 2)).fits(d));
        assert!(!Biclique::cycle(Vertex::new(3, 3)).fits(d));
        let s = Biclique::star(Vertex::new(1, 1), &[Vertex::new(0, 1)]);
        assert!(s.is_some_and(|s| !s.fits(d)));
    }

    #[test]
    fn maximal_counts_small() {
        assert_eq!(enumerate_maximal_bicliques(&grid(2, 2)), [Biclique::cycle(Vertex::new(1, 1))]);
        let m = enumerate_maximal_bicliques(&grid(3, 3));
        assert_eq!(m.len(), 9);
        assert_eq!(m.iter().filter(|b| b.is_cycle()).count(), 4);
        assert_eq!(m.iter().filter(|b| b.is_k13()).count(), 4);
        assert_eq!(m.iter().filter(|b| b.size() == 4 && b.is_star()).count(), 1);
        let path = enumerate_maximal_bicliques(&grid(1, 3));
        assert_eq!(path, [Biclique::full_star(&grid(1, 3), Vertex::new(2, 1))]);
        assert_eq!(enumerate_maximal_bicliques(&grid(1, 2)).len(), 1);
        assert!(enumerate_maximal_bicliques(&grid(1, 1)).is_empty());
    }

    #[test]
    fn corner_star_is_not_maximal() {
        let g = grid(3, 4);
        assert!(!Biclique::full_star(&g, Vertex::new(1, 1)).is_maximal(&g));
        assert!(Biclique::full_star(&g, Vertex::new(2, 1)).is_maximal(&g));
    }
}
