//! Dihedral symmetries of a grid acting on vertices, edges and bicliques.

use crate::biclique::{Arms, Biclique};
use crate::grid::{Dir, Edge, GridDims, Vertex};

/// Reflect columns and/or rows within the source grid, then optionally swap
/// the axes. The eight combinations form the dihedral group of the square
/// (for `p = q`); for `p ≠ q` those with `transpose` map onto the transposed
/// grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub flip_cols: bool,
    pub flip_rows: bool,
    pub transpose: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { flip_cols: false, flip_rows: false, transpose: false };
    pub const MIRROR_COLS: Symmetry = Symmetry { flip_cols: true, flip_rows: false, transpose: false };
    pub const TRANSPOSE: Symmetry = Symmetry { flip_cols: false, flip_rows: false, transpose: true };

    pub fn all() -> impl Iterator<Item = Symmetry> {
        (0u8..8).map(|m| Symmetry { flip_cols: m & 1 != 0, flip_rows: m & 2 != 0, transpose: m & 4 != 0 })
    }

    pub fn map_dims(self, dims: GridDims) -> GridDims {
        if self.transpose {
            dims.transpose()
        } else {
            dims
        }
    }

    pub fn map_vertex(self, dims: GridDims, v: Vertex) -> Vertex {
        let col = if self.flip_cols { dims.q() + 1 - v.col } else { v.col };
        let row = if self.flip_rows { dims.p() + 1 - v.row } else { v.row };
        if self.transpose {
            Vertex::new(row, col)
        } else {
            Vertex::new(col, row)
        }
    }

    pub fn map_dir(self, d: Dir) -> Dir {
        let d = match d {
            Dir::Left | Dir::Right if self.flip_cols => d.opposite(),
            Dir::Down | Dir::Up if self.flip_rows => d.opposite(),
            _ => d,
        };
        if self.transpose {
            match d {
                Dir::Left => Dir::Down,
                Dir::Right => Dir::Up,
                Dir::Down => Dir::Left,
                Dir::Up => Dir::Right,
            }
        } else {
            d
        }
    }

    pub fn map_edge(self, dims: GridDims, e: Edge) -> Edge {
        let [a, b] = e.endpoints();
        Edge::new(self.map_vertex(dims, a), self.map_vertex(dims, b)).expect("symmetries preserve adjacency")
    }

    pub fn map_biclique(self, dims: GridDims, b: Biclique) -> Biclique {
        match b {
            Biclique::Star { center, arms } => Biclique::Star {
                center: self.map_vertex(dims, center),
                arms: Arms::from_dirs(arms.dirs().map(|d| self.map_dir(d))),
            },
            Biclique::FourCycle { anchor } => {
                let anchor = Biclique::square_corners(anchor)
                    .into_iter()
                    .map(|v| self.map_vertex(dims, v))
                    .min()
                    .expect("four corners");
                Biclique::FourCycle { anchor }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use alloc::vec::Vec;

    #[test]
    fn symmetries_preserve_edge_sets() {
        let dims = GridDims::new(3, 5).unwrap();
        let g = Grid::from_dims(dims);
        for s in Symmetry::all() {
            let img = Grid::from_dims(s.map_dims(dims));
            for b in crate::biclique::enumerate_maximal_bicliques(&g) {
                let mapped = s.map_biclique(dims, b);
                let mut want: Vec<Edge> = b.edges(dims).unwrap().into_iter().map(|e| s.map_edge(dims, e)).collect();
                let mut got = mapped.edges(img.dims()).unwrap();
                want.sort();
                got.sort();
                assert_eq!(want, got, "{s:?} {b}");
            }
        }
    }
}
