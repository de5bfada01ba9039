//! JSON cover files.
//!
//! ```json
//! {"p": 2, "q": 3, "bicliques": [
//!   {"kind": "cycle", "anchor": [1, 1]},
//!   {"kind": "star", "center": [3, 1], "leaves": [[2, 1], [3, 2]]}
//! ]}
//! ```
//!
//! Coordinates are `[col, row]`, 1-based, row 1 at the bottom. Elements are
//! written in canonical order, so writing a parsed canonical file reproduces
//! it byte for byte.

use std::fs;
use std::path::Path;

use gridbc_core::{Biclique, Cover, CoverError, GridDims, GridError, Vertex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed cover file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("star at {center} has invalid leaves")]
    BadStar { center: Vertex },
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFile {
    pub p: u32,
    pub q: u32,
    pub bicliques: Vec<BicliqueRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum BicliqueRecord {
    Star { center: [u32; 2], leaves: Vec<[u32; 2]> },
    Cycle { anchor: [u32; 2] },
}

fn pair(v: Vertex) -> [u32; 2] {
    [v.col, v.row]
}

fn vertex([col, row]: [u32; 2]) -> Vertex {
    Vertex::new(col, row)
}

impl BicliqueRecord {
    pub fn from_biclique(b: &Biclique) -> Self {
        match b {
            Biclique::Star { center, .. } => BicliqueRecord::Star {
                center: pair(*center),
                leaves: b.leaves().into_iter().map(pair).collect(),
            },
            Biclique::FourCycle { anchor } => BicliqueRecord::Cycle { anchor: pair(*anchor) },
        }
    }

    pub fn to_biclique(&self) -> Result<Biclique, FormatError> {
        match self {
            BicliqueRecord::Star { center, leaves } => {
                let leaves: Vec<Vertex> = leaves.iter().copied().map(vertex).collect();
                Biclique::star(vertex(*center), &leaves).ok_or(FormatError::BadStar { center: vertex(*center) })
            }
            BicliqueRecord::Cycle { anchor } => Ok(Biclique::cycle(vertex(*anchor))),
        }
    }
}

impl CoverFile {
    pub fn from_cover(cover: &Cover) -> Self {
        CoverFile {
            p: cover.dims().p(),
            q: cover.dims().q(),
            bicliques: cover.elements().iter().map(BicliqueRecord::from_biclique).collect(),
        }
    }

    /// Elements may lie outside the grid; the verifier reports those.
    /// Repeated elements are rejected.
    pub fn to_cover(&self) -> Result<Cover, FormatError> {
        let dims = GridDims::new(self.p, self.q)?;
        let elements = self.bicliques.iter().map(BicliqueRecord::to_biclique).collect::<Result<_, _>>()?;
        Ok(Cover::new(dims, elements)?)
    }
}

pub fn cover_to_json(cover: &Cover) -> String {
    let mut s = serde_json::to_string_pretty(&CoverFile::from_cover(cover)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn cover_from_json(text: &str) -> Result<Cover, FormatError> {
    serde_json::from_str::<CoverFile>(text)?.to_cover()
}

pub fn read_cover(path: &Path) -> Result<Cover, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    cover_from_json(&text)
}

pub fn write_cover(path: &Path, cover: &Cover) -> Result<(), FormatError> {
    fs::write(path, cover_to_json(cover)).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}
