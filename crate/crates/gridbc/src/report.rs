//! JSON-serializable views of verification and analysis results.

use std::collections::BTreeMap;

use gridbc_core::diagnostics::{
    boundary_analysis, classify_staircases, waste_identity_check, BoundaryAnalysis, StaircaseClassification,
};
use gridbc_core::verify::Normalized;
use gridbc_core::{maximalize, normalize_cover, AnalysisError, Biclique, Cover, CoverReport, Edge, Grid, Side};
use serde::Serialize;

use crate::format::CoverFile;

type EdgeJson = [[u32; 2]; 2];

fn edge_json(e: &Edge) -> EdgeJson {
    let [a, b] = e.endpoints();
    [[a.col, a.row], [b.col, b.row]]
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Bottom => "bottom",
        Side::Right => "right",
        Side::Top => "top",
        Side::Left => "left",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyJson {
    pub valid: bool,
    pub size: usize,
    pub edge_count: usize,
    pub waste: i64,
    pub tau: usize,
    /// Edges covered exactly `i` times, keyed by `i`.
    pub multiplicities: BTreeMap<u32, usize>,
    pub all_maximal: bool,
    pub uncovered: Vec<EdgeJson>,
    pub invalid_elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized: Option<NormalizedJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<AnalysisJson>,
}

impl VerifyJson {
    pub fn new(r: &CoverReport) -> Self {
        VerifyJson {
            valid: r.valid,
            size: r.size,
            edge_count: r.edge_count,
            waste: r.waste,
            tau: r.tau,
            multiplicities: r.multiplicities.clone(),
            all_maximal: r.all_maximal,
            uncovered: r.uncovered.iter().map(edge_json).collect(),
            invalid_elements: r.invalid_elements.iter().map(|b| b.to_string()).collect(),
            normalized: None,
            analysis: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalizedJson {
    pub steps: usize,
    pub padded: usize,
    pub dropped: usize,
    pub cover: CoverFile,
}

impl NormalizedJson {
    pub fn new(n: &Normalized) -> Self {
        NormalizedJson { steps: n.steps.len(), padded: n.padded, dropped: n.dropped, cover: CoverFile::from_cover(&n.cover) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FenceJson {
    pub size: usize,
    pub anchors: Vec<[u32; 2]>,
    pub corners: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StaircaseJson {
    pub side: &'static str,
    pub start: u32,
    pub end: u32,
    pub length: u32,
    pub depth: u32,
    pub reaches_opposite_side: bool,
    pub thick_edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityJson {
    pub waste: i64,
    pub beta: usize,
    pub tau: usize,
    pub twice_beta_plus_tau: i64,
    pub twice_formula: i64,
    pub identity_holds: bool,
    pub inequality_holds: bool,
    pub beta_matches_fences: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisJson {
    pub boundary_stars: usize,
    pub boundary_cycles: usize,
    pub fences: Vec<FenceJson>,
    /// Fence size `i` to `b_i`.
    pub b: BTreeMap<usize, usize>,
    pub beta: usize,
    pub c: usize,
    pub n_max: usize,
    pub corner_run_edges: usize,
    pub staircases: Vec<StaircaseJson>,
    /// `[staircase, tip fence]` index pairs.
    pub pyramids: Vec<[usize; 2]>,
    pub doubles: Vec<[usize; 2]>,
    pub unclassified: Vec<usize>,
    pub n: usize,
    pub m: usize,
    pub waste_matches: bool,
    pub identity: Result<IdentityJson, String>,
}

/// Everything `verify --analyze` needs: the maximalized, normalized cover
/// and the analysis of it.
pub struct Analysis {
    pub normalized: Normalized,
    pub boundary: BoundaryAnalysis,
    pub staircases: StaircaseClassification,
}

/// Maximalize, normalize and analyze a cover.
pub fn analyze(grid: &Grid, cover: &Cover) -> Result<Analysis, AnalysisError> {
    let normalized = normalize_cover(grid, &maximalize(grid, cover))?;
    let boundary = boundary_analysis(grid, &normalized.cover)?;
    let staircases = classify_staircases(grid, &normalized.cover, &boundary)?;
    Ok(Analysis { normalized, boundary, staircases })
}

impl AnalysisJson {
    pub fn new(grid: &Grid, a: &Analysis) -> Self {
        let b = &a.boundary;
        let s = &a.staircases;
        let identity = waste_identity_check(grid, &a.normalized.cover)
            .map(|w| IdentityJson {
                waste: w.waste,
                beta: w.beta,
                tau: w.tau,
                twice_beta_plus_tau: w.twice_beta_tau,
                twice_formula: w.twice_formula,
                identity_holds: w.identity_holds(),
                inequality_holds: w.inequality_holds(),
                beta_matches_fences: w.beta_matches_fences,
            })
            .map_err(|e| e.to_string());
        AnalysisJson {
            boundary_stars: b.boundary_stars.len(),
            boundary_cycles: b.boundary_cycles.len(),
            fences: b
                .fences
                .iter()
                .map(|f| FenceJson {
                    size: f.size(),
                    anchors: f
                        .cycles
                        .iter()
                        .filter_map(|c| match c {
                            Biclique::FourCycle { anchor } => Some([anchor.col, anchor.row]),
                            _ => None,
                        })
                        .collect(),
                    corners: f.corners.iter().map(|v| [v.col, v.row]).collect(),
                })
                .collect(),
            b: b.b.clone(),
            beta: b.beta,
            c: b.c,
            n_max: b.n_max,
            corner_run_edges: b.corner_runs.len(),
            staircases: s
                .staircases
                .iter()
                .zip(&s.thick_per_staircase)
                .map(|(st, thick)| StaircaseJson {
                    side: side_name(st.link.side),
                    start: st.link.start,
                    end: st.link.end,
                    length: st.length(),
                    depth: st.depth(),
                    reaches_opposite_side: st.reaches_opposite_side,
                    thick_edges: thick.iter().map(edge_json).collect(),
                })
                .collect(),
            pyramids: s.pyramids.iter().map(|p| [p.staircase, p.tip]).collect(),
            doubles: s.doubles.iter().map(|d| [d.first, d.second]).collect(),
            unclassified: s.unclassified.clone(),
            n: s.n(),
            m: s.m(),
            waste_matches: s.waste_matches(),
            identity,
        }
    }
}
