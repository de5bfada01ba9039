//! Covers: canonical, duplicate-free lists of bicliques of a grid.

use alloc::vec::Vec;

use crate::biclique::Biclique;
use crate::error::CoverError;
use crate::grid::{Dir, Grid, GridDims, Vertex};
use crate::symmetry::Symmetry;

/// A set of bicliques claimed to cover a grid's edges, kept in canonical
/// order. Elements are not required to fit the grid or be maximal; the
/// verifier reports such problems.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cover {
    dims: GridDims,
    elements: Vec<Biclique>,
}

impl Cover {
    /// Sorts `elements`; rejects duplicates.
    pub fn new(dims: GridDims, mut elements: Vec<Biclique>) -> Result<Cover, CoverError> {
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(CoverError::Duplicate(w[0]));
        }
        Ok(Cover { dims, elements })
    }

    /// Sorts `elements`, merging duplicates.
    pub fn dedup(dims: GridDims, mut elements: Vec<Biclique>) -> Cover {
        elements.sort();
        elements.dedup();
        Cover { dims, elements }
    }

    pub fn empty(dims: GridDims) -> Cover {
        Cover { dims, elements: Vec::new() }
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn elements(&self) -> &[Biclique] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Biclique> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, b: &Biclique) -> bool {
        self.elements.binary_search(b).is_ok()
    }

    pub fn star_count(&self) -> usize {
        self.elements.iter().filter(|b| b.is_star()).count()
    }

    pub fn cycle_count(&self) -> usize {
        self.elements.iter().filter(|b| b.is_cycle()).count()
    }

    pub fn all_maximal(&self, grid: &Grid) -> bool {
        self.elements.iter().all(|b| b.is_maximal(grid))
    }

    /// Image of the cover under a grid symmetry.
    pub fn map(&self, s: Symmetry) -> Cover {
        let elements = self.elements.iter().map(|b| s.map_biclique(self.dims, *b)).collect();
        Cover::dedup(s.map_dims(self.dims), elements)
    }
}

/// Replace every element by a maximal biclique containing it.
///
/// A 4-cycle superset is preferred over a star; among 4-cycles the smallest
/// anchor wins. Elements that do not fit the grid are kept unchanged.
/// Duplicates created by the replacement are merged, so the result is never
/// larger than the input.
pub fn maximalize(grid: &Grid, cover: &Cover) -> Cover {
    let elements = cover.elements().iter().map(|b| maximal_superset(grid, b).unwrap_or(*b)).collect();
    Cover::dedup(cover.dims(), elements)
}

fn maximal_superset(grid: &Grid, b: &Biclique) -> Option<Biclique> {
    let dims = grid.dims();
    if !b.fits(dims) {
        return None;
    }
    if b.is_maximal(grid) {
        return Some(*b);
    }
    let Biclique::Star { center, arms } = *b else {
        return Some(*b);
    };
    let own = b.edges(dims)?;
    let covers = |cand: &Biclique| cand.edges(dims).is_some_and(|es| own.iter().all(|e| es.contains(e)));

    // Squares containing the center have anchors at the center or one step
    // left and/or down of it.
    let mut squares: Vec<Biclique> = [(0, 0), (-1, 0), (0, -1), (-1, -1)]
        .into_iter()
        .filter_map(|(dc, dr)| {
            let col = center.col.checked_add_signed(dc)?;
            let row = center.row.checked_add_signed(dr)?;
            Some(Biclique::cycle(Vertex::new(col, row)))
        })
        .filter(|c| c.fits(dims) && covers(c))
        .collect();
    squares.sort();
    if let Some(sq) = squares.first() {
        return Some(*sq);
    }

    let mut stars: Vec<Biclique> = core::iter::once(center)
        .chain(arms.dirs().filter_map(|d: Dir| center.step(d, dims)))
        .map(|v| Biclique::full_star(grid, v))
        .filter(|s| s.is_maximal(grid) && covers(s))
        .collect();
    stars.sort();
    stars.first().copied()
}
