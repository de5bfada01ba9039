use thiserror::Error;

use crate::biclique::Biclique;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid dimensions must be positive, got {p}x{q}")]
    EmptyDimension { p: u32, q: u32 },
    #[error("grid {p}x{q} is too large")]
    TooLarge { p: u32, q: u32 },
    #[error("no outer cycle: {p}x{q} grid is a path")]
    NoOuterCycle { p: u32, q: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("representability needs an even number of rows, got p = {0}")]
    OddRows(u32),
    #[error("expected p <= q, got p = {p}, q = {q}")]
    NotOriented { p: u32, q: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("the 1x1 grid has no edges to cover")]
    Edgeless,
    #[error("construction needs an even side length, got {0}")]
    OddSide(u32),
    #[error("(k = {k}, l = {ell}) is not a valid decomposition for {p}x{q}")]
    InvalidDecomposition { p: u32, q: u32, k: u32, ell: u32 },
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("duplicate cover element {0}")]
    Duplicate(Biclique),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("normalization needs 4-cycles; {p}x{q} has none")]
    NoFourCycles { p: u32, q: u32 },
    #[error("cover element {0} is not maximal")]
    NotMaximal(Biclique),
    #[error("cover element {0} does not fit in the grid")]
    OutsideGrid(Biclique),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
    #[error("cover is not normalized: boundary stars overlap or touch a boundary 4-cycle")]
    NotNormalized,
    #[error("outer-cycle edge {0} is not covered")]
    UncoveredBoundary(crate::grid::Edge),
    #[error("link does not lie on a single side of the grid")]
    BadLink,
}
