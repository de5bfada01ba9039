//! CSV table of covering numbers.

use std::fmt::Write;

use gridbc_core::theory::{branch, Branch};
use gridbc_core::bc_value;

/// One row per `p` in `1..=pmax` listing `bc(p, q)` for `q` from `p` to
/// `qmax`. Values on the `pq/2 − 1` branch carry a `*` suffix. Rows with no
/// columns are left out.
pub fn bc_table(pmax: u32, qmax: u32) -> String {
    let mut out = String::new();
    for p in 1..=pmax {
        if p > qmax {
            break;
        }
        let cells: Vec<String> = (p..=qmax)
            .map(|q| {
                let mark = if matches!(branch(p, q), Branch::Representable(_)) { "*" } else { "" };
                format!("{}{mark}", bc_value(p, q))
            })
            .collect();
        writeln!(out, "{}", cells.join(",")).unwrap();
    }
    out
}
