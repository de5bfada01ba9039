//! File formats, drawings and the command-line front end for
//! [`gridbc_core`].

pub mod format;
pub mod report;
pub mod solve;
pub mod svg;
pub mod table;

pub use gridbc_core;

use gridbc_core::theory::{branch, Branch};
use gridbc_core::{bc_value, GridDims};

/// The `bc` command's line: the value, then which case of the formula gave
/// it. `p` and `q` are swapped first if needed so that `p ≤ q`.
pub fn bc_line(dims: GridDims) -> String {
    let value = bc_value(dims.p(), dims.q());
    if dims.edge_count() == 0 {
        return value.to_string();
    }
    let (o, _) = dims.oriented();
    match branch(dims.p(), dims.q()) {
        Branch::Representable(d) => format!(
            "{value} (p even, q−1 = {}·{} + 2·{}, k={} ℓ={})",
            d.k,
            o.p() - 1,
            d.ell,
            d.k,
            d.ell
        ),
        Branch::Floor => format!("{value} (floor branch)"),
    }
}
