//! Explicit covers whose size matches the closed form.

use alloc::vec::Vec;

use crate::biclique::Biclique;
use crate::cover::Cover;
use crate::error::ConstructError;
use crate::grid::{Grid, GridDims, Vertex};
use crate::symmetry::Symmetry;
use crate::theory::{self, Decomposition};

/// Which diagonal of a square block carries the 4-cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Diagonal {
    /// From `(1,1)` to `(p,p)`.
    Main,
    /// From `(1,p)` to `(p,1)`.
    Anti,
}

impl Diagonal {
    pub fn flipped(self) -> Diagonal {
        match self {
            Diagonal::Main => Diagonal::Anti,
            Diagonal::Anti => Diagonal::Main,
        }
    }
}

/// Full stars centered on one color class: the class of size `⌊pq/2⌋`, and
/// on a tie the class not containing `(1,1)`. Every edge is covered exactly
/// once. Corner stars are `K_{1,2}`.
pub fn checkerboard_cover(p: u32, q: u32) -> Result<Cover, ConstructError> {
    let grid = Grid::new(p, q)?;
    if grid.edge_count() == 0 {
        return Err(ConstructError::Edgeless);
    }
    // (1,1) has color 0, and when pq is odd every corner does, so color 1 is
    // always the right class.
    let stars = grid
        .vertices()
        .filter(|v| v.color() == 1)
        .map(|v| Biclique::full_star(&grid, v))
        .collect();
    Ok(Cover::dedup(grid.dims(), stars))
}

/// Cover of the even square grid `G_{p,p}` with `p²/2 − 1` elements: the
/// `p − 1` unit squares along one diagonal plus full stars on every vertex of
/// one color class that is not on the squares' middle diagonal.
pub fn square_diagonal_cover(p: u32, diagonal: Diagonal) -> Result<Cover, ConstructError> {
    if p < 2 || p % 2 == 1 {
        return Err(ConstructError::OddSide(p));
    }
    let grid = Grid::new(p, p)?;
    let elements = block_elements(&grid, p, 0, diagonal);
    Ok(Cover::dedup(grid.dims(), elements))
}

/// Elements of one `p × p` block whose leftmost column is `offset + 1`,
/// as full stars of `grid`.
fn block_elements(grid: &Grid, p: u32, offset: u32, diagonal: Diagonal) -> Vec<Biclique> {
    let mut out = Vec::with_capacity((p * p / 2) as usize);
    for i in 1..p {
        let anchor = match diagonal {
            Diagonal::Main => Vertex::new(i, i),
            Diagonal::Anti => Vertex::new(i, p - i),
        };
        out.push(Biclique::cycle(Vertex::new(anchor.col + offset, anchor.row)));
    }
    for col in 1..=p {
        for row in 1..=p {
            let on_class = match diagonal {
                Diagonal::Main => col.abs_diff(row) % 2 == 0 && col != row,
                Diagonal::Anti => (col + row) % 2 == 1 && col + row != p + 1,
            };
            if on_class {
                out.push(Biclique::full_star(grid, Vertex::new(col + offset, row)));
            }
        }
    }
    out
}

/// Lay `k` square blocks left to right with `ℓ` width-3 gadgets in the
/// leftmost junctions.
///
/// Neighbouring blocks use alternating diagonals, starting with
/// [`Diagonal::Main`]. Blocks that touch share their boundary column and the
/// `p/2 − 1` stars on it. A gadget's middle column gets `p/2 + 1` stars on
/// the rows the adjacent blocks' boundary stars leave uncovered.
pub fn stitched_cover(p: u32, q: u32, d: Decomposition) -> Result<Cover, ConstructError> {
    if p < 2 || p % 2 == 1 {
        return Err(ConstructError::OddSide(p));
    }
    if p > q || !d.is_valid_for(p, q) {
        return Err(ConstructError::InvalidDecomposition { p, q, k: d.k, ell: d.ell });
    }
    let grid = Grid::new(p, q)?;
    let mut elements = Vec::new();
    let mut offset = 0;
    let mut diagonal = Diagonal::Main;
    for block in 0..d.k {
        let placed = block_elements(&grid, p, offset, diagonal);
        let right = offset + p;
        let boundary_rows: Vec<u32> = placed
            .iter()
            .filter_map(|b| match b {
                Biclique::Star { center, .. } if center.col == right => Some(center.row),
                _ => None,
            })
            .collect();
        elements.extend(placed);
        offset += p - 1;
        if block < d.ell {
            let middle = right + 1;
            elements.extend(
                (1..=p)
                    .filter(|r| !boundary_rows.contains(r))
                    .map(|r| Biclique::full_star(&grid, Vertex::new(middle, r))),
            );
            offset += 2;
        }
        diagonal = diagonal.flipped();
    }
    debug_assert_eq!(offset + 1, q);
    Ok(Cover::dedup(grid.dims(), elements))
}

/// A cover of size `bc(G_{p,q})`: the stitched construction when the grid is
/// representable (built with `p ≤ q` and transposed back), the checkerboard
/// otherwise.
pub fn optimal_cover(p: u32, q: u32) -> Result<Cover, ConstructError> {
    let dims = GridDims::new(p, q)?;
    if dims.edge_count() == 0 {
        return Err(ConstructError::Edgeless);
    }
    let (oriented, flipped) = dims.oriented();
    match theory::branch(p, q) {
        theory::Branch::Representable(d) => {
            let cover = stitched_cover(oriented.p(), oriented.q(), d)?;
            Ok(if flipped { cover.map(Symmetry::TRANSPOSE) } else { cover })
        }
        theory::Branch::Floor => checkerboard_cover(p, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkerboard_sizes() {
        assert_eq!(checkerboard_cover(1, 2).unwrap().len(), 1);
        let c = checkerboard_cover(7, 9).unwrap();
        assert_eq!(c.len(), 31);
        let g = Grid::new(7, 9).unwrap();
        assert!(c.elements().iter().all(|b| match b {
            Biclique::Star { center, .. } => !g.is_corner(*center),
            _ => false,
        }));
        assert_eq!(checkerboard_cover(1, 1), Err(ConstructError::Edgeless));
    }

    #[test]
    fn diagonal_block_shapes() {
        let c = square_diagonal_cover(6, Diagonal::Main).unwrap();
        assert_eq!(c.len(), 17);
        let cycles: Vec<_> = c.elements().iter().filter(|b| b.is_cycle()).collect();
        assert_eq!(cycles.len(), 5);
        assert!(cycles.iter().all(|b| matches!(b, Biclique::FourCycle { anchor } if anchor.col == anchor.row)));
        assert_eq!(square_diagonal_cover(2, Diagonal::Main).unwrap().elements(), [Biclique::cycle(Vertex::new(1, 1))]);
        assert_eq!(square_diagonal_cover(4, Diagonal::Anti).unwrap().len(), 7);
        assert_eq!(square_diagonal_cover(5, Diagonal::Main), Err(ConstructError::OddSide(5)));
    }

    #[test]
    fn anti_is_mirror_of_main() {
        for p in (2..=12).step_by(2) {
            let main = square_diagonal_cover(p, Diagonal::Main).unwrap();
            let anti = square_diagonal_cover(p, Diagonal::Anti).unwrap();
            assert_eq!(main.map(Symmetry::MIRROR_COLS), anti, "p = {p}");
        }
    }

    #[test]
    fn stitched_sizes() {
        assert_eq!(stitched_cover(8, 17, Decomposition { k: 2, ell: 1 }).unwrap().len(), 67);
        assert_eq!(stitched_cover(6, 25, Decomposition { k: 4, ell: 2 }).unwrap().len(), 74);
        assert_eq!(
            stitched_cover(6, 6, Decomposition { k: 1, ell: 0 }).unwrap(),
            square_diagonal_cover(6, Diagonal::Main).unwrap()
        );
        assert_eq!(stitched_cover(2, 5, Decomposition { k: 4, ell: 0 }).unwrap().len(), 4);
        assert!(matches!(
            stitched_cover(6, 8, Decomposition { k: 1, ell: 1 }),
            Err(ConstructError::InvalidDecomposition { .. })
        ));
    }

    #[test]
    fn optimal_dispatch() {
        assert_eq!(optimal_cover(6, 6).unwrap().len(), 17);
        assert_eq!(optimal_cover(5, 9).unwrap().len(), 22);
        assert_eq!(optimal_cover(6, 8).unwrap().len(), 24);
        assert_eq!(optimal_cover(17, 8).unwrap().len(), 67);
        assert_eq!(optimal_cover(17, 8).unwrap().dims(), GridDims::new(17, 8).unwrap());
    }
}
