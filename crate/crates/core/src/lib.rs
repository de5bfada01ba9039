//! Biclique covers of grid graphs.
//!
//! The biclique covering number of the `p × q` grid is `pq/2 − 1` when `p`
//! is even and `q − 1 = k(p − 1) + 2ℓ` for some `0 ≤ ℓ < k` (taking
//! `p ≤ q`), and `⌊pq/2⌋` otherwise. This crate computes that value, builds
//! covers attaining it, verifies and normalizes arbitrary covers, analyzes
//! their boundary structure, and solves small instances exactly as an
//! independent check.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod biclique;
pub mod construct;
pub mod cover;
pub mod diagnostics;
pub mod edgeset;
pub mod error;
pub mod grid;
pub mod solver;
pub mod symmetry;
pub mod theory;
pub mod verify;

pub use biclique::{enumerate_maximal_bicliques, Arms, Biclique};
pub use construct::{checkerboard_cover, optimal_cover, square_diagonal_cover, stitched_cover, Diagonal};
pub use cover::{maximalize, Cover};
pub use diagnostics::{
    boundary_analysis, classify_staircases, staircase_of, thick_edges, waste_identity_check, BoundaryAnalysis,
    Fence, Link, Staircase, StaircaseClassification, WasteIdentity,
};
pub use edgeset::EdgeSet;
pub use error::{AnalysisError, ConstructError, CoverError, GridError, NormalizeError, TheoryError};
pub use grid::{Dir, Edge, Grid, GridDims, Side, Vertex};
pub use solver::{lower_bound_hint, solve_exact, solve_exact_with, SolveOptions, SolveOutcome};
pub use symmetry::Symmetry;
pub use theory::{bc_value, lower_bound, representable, special_edge_set, Decomposition};
pub use verify::{is_normalized, normalize_cover, verify_cover, CoverReport};
