//! Boundary structure of covers: fences, links, staircases and the waste
//! accounting that constrains minimum covers.
//!
//! A *boundary element* is a cover element containing an outer-cycle edge.
//! `H` is the union of the boundary 4-cycles; its connected components are
//! *fences*. A *link* is a corner-free component of the outer cycle minus
//! `E(H)` with at least one edge. Each link generates a *staircase*: the
//! region below it (after rotating its side to the top) bounded by two walls
//! that go down twice and then alternate inward and down.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::biclique::Biclique;
use crate::cover::Cover;
use crate::edgeset::EdgeSet;
use crate::error::{AnalysisError, NormalizeError};
use crate::grid::{Edge, Grid, Side, SideFrame, Vertex};
use crate::verify::{edge_multiplicities, is_normalized};

/// Edges covered by at least two elements, in canonical order.
pub fn thick_edges(grid: &Grid, cover: &Cover) -> Vec<Edge> {
    edge_multiplicities(grid, cover)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c >= 2)
        .map(|(i, _)| grid.edge_at(i).expect("index in range"))
        .collect()
}

/// A connected component of the boundary 4-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fence {
    pub cycles: Vec<Biclique>,
    /// Edges of `H` in this component, canonical order.
    pub edges: Vec<Edge>,
    /// Grid corners on this fence.
    pub corners: Vec<Vertex>,
}

impl Fence {
    pub fn size(&self) -> usize {
        self.cycles.len()
    }

    /// Edges shared by two of the fence's 4-cycles.
    pub fn shared_edges(&self, grid: &Grid) -> Vec<Edge> {
        let mut seen = BTreeMap::new();
        for c in &self.cycles {
            for e in c.edges(grid.dims()).expect("boundary cycles fit") {
                *seen.entry(e).or_insert(0u32) += 1;
            }
        }
        seen.into_iter().filter(|(_, n)| *n >= 2).map(|(e, _)| e).collect()
    }
}

/// A corner-free run of outer-cycle edges not in `H`, stored by its side and
/// the along-side coordinates of its ends (`start < end`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub side: Side,
    pub start: u32,
    pub end: u32,
}

impl Link {
    pub fn len(&self) -> u32 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }

    pub fn edges(&self, grid: &Grid) -> Vec<Edge> {
        let f = SideFrame::new(grid.dims(), self.side);
        (self.start..self.end)
            .map(|a| Edge::new(f.vertex(a, 0), f.vertex(a + 1, 0)).expect("adjacent along a side"))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryAnalysis {
    pub boundary_stars: Vec<Biclique>,
    pub boundary_cycles: Vec<Biclique>,
    /// Edge set of `H`.
    pub h_edges: Vec<Edge>,
    pub fences: Vec<Fence>,
    pub links: Vec<Link>,
    /// Outer-cycle edges outside `H` that belong to no link because their
    /// component passes through a corner.
    pub corner_runs: Vec<Edge>,
    /// `i → b_i`, the number of fences of size `i`.
    pub b: BTreeMap<usize, usize>,
    /// Edges covered twice by boundary 4-cycles.
    pub beta: usize,
    /// Corners lying on fences.
    pub c: usize,
    /// Largest possible fence size, `2p + 2q − 8`.
    pub n_max: usize,
}

impl BoundaryAnalysis {
    pub fn b(&self, i: usize) -> usize {
        self.b.get(&i).copied().unwrap_or(0)
    }

    /// `Σ (i − 1) b_i`, which equals `β` when every fence is a path of
    /// squares.
    pub fn fence_overlap_sum(&self) -> usize {
        self.b.iter().map(|(&i, &n)| (i - 1) * n).sum()
    }

    pub fn max_fence_size(&self) -> usize {
        self.fences.iter().map(Fence::size).max().unwrap_or(0)
    }
}

fn check_maximal(grid: &Grid, cover: &Cover) -> Result<(), AnalysisError> {
    if grid.p() < 2 || grid.q() < 2 {
        return Err(NormalizeError::NoFourCycles { p: grid.p(), q: grid.q() }.into());
    }
    for b in cover.elements() {
        if !b.fits(grid.dims()) {
            return Err(NormalizeError::OutsideGrid(*b).into());
        }
        if !b.is_maximal(grid) {
            return Err(NormalizeError::NotMaximal(*b).into());
        }
    }
    Ok(())
}

/// Fences, links and counts for a cover of maximal elements.
///
/// Fences and links are ordered by the smallest canonical index of an
/// outer-cycle edge they contain.
pub fn boundary_analysis(grid: &Grid, cover: &Cover) -> Result<BoundaryAnalysis, AnalysisError> {
    check_maximal(grid, cover)?;
    let dims = grid.dims();
    let (boundary_cycles, boundary_stars): (Vec<Biclique>, Vec<Biclique>) = cover
        .elements()
        .iter()
        .filter(|b| b.is_boundary_element(grid))
        .partition(|b| b.is_cycle());

    // Union-find over boundary cycles, joined when they share a vertex.
    let mut parent: Vec<usize> = (0..boundary_cycles.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        let mut j = i;
        while parent[j] != r {
            let next = parent[j];
            parent[j] = r;
            j = next;
        }
        r
    }
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, c) in boundary_cycles.iter().enumerate() {
        let Biclique::FourCycle { anchor } = c else { unreachable!() };
        for v in Biclique::square_corners(*anchor) {
            if let Some(&j) = owner.get(&v) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            } else {
                owner.insert(v, i);
            }
        }
    }

    let mut h = EdgeSet::empty(grid.edge_count());
    let mut cycle_count = alloc::vec![0u32; grid.edge_count()];
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in boundary_cycles.iter().enumerate() {
        for e in c.edges(dims).expect("fits") {
            let ei = grid.edge_index(e).expect("grid edge");
            h.insert(ei);
            cycle_count[ei] += 1;
        }
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let beta = cycle_count.iter().filter(|&&n| n == 2).count();

    let mut fences: Vec<(usize, Fence)> = groups
        .into_values()
        .map(|members| {
            let cycles: Vec<Biclique> = members.iter().map(|&i| boundary_cycles[i]).collect();
            let mut edges: Vec<Edge> = cycles.iter().flat_map(|c| c.edges(dims).expect("fits")).collect();
            edges.sort();
            edges.dedup();
            let mut corners: Vec<Vertex> = edges
                .iter()
                .flat_map(|e| e.endpoints())
                .filter(|v| grid.is_corner(*v))
                .collect();
            corners.sort();
            corners.dedup();
            let key = edges
                .iter()
                .filter(|e| grid.is_outer_edge(**e))
                .map(|e| grid.edge_index(*e).expect("grid edge"))
                .min()
                .unwrap_or(usize::MAX);
            (key, Fence { cycles, edges, corners })
        })
        .collect();
    fences.sort_by_key(|(k, f)| (*k, f.cycles.first().copied()));
    let fences: Vec<Fence> = fences.into_iter().map(|(_, f)| f).collect();

    let (links, corner_runs) = find_links(grid, &h);

    let mut b = BTreeMap::new();
    for f in &fences {
        *b.entry(f.size()).or_insert(0) += 1;
    }
    let c = fences.iter().map(|f| f.corners.len()).sum();
    let h_edges = h.iter().map(|i| grid.edge_at(i).expect("index")).collect();

    Ok(BoundaryAnalysis {
        boundary_stars,
        boundary_cycles,
        h_edges,
        fences,
        links,
        corner_runs,
        b,
        beta,
        c,
        n_max: 2 * (grid.p() + grid.q()) as usize - 8,
    })
}

fn find_links(grid: &Grid, h: &EdgeSet) -> (Vec<Link>, Vec<Edge>) {
    let out = grid.outer_cycle().expect("p, q >= 2");
    let in_h = |e: &Edge| h.contains(grid.edge_index(*e).expect("grid edge"));
    let Some(first_h) = out.iter().position(in_h) else {
        // No fences: the whole cycle is one component through every corner.
        return (Vec::new(), out);
    };
    let n = out.len();
    let mut runs: Vec<Vec<Edge>> = Vec::new();
    let mut current: Vec<Edge> = Vec::new();
    for step in 1..=n {
        let e = out[(first_h + step) % n];
        if in_h(&e) {
            if !current.is_empty() {
                runs.push(core::mem::take(&mut current));
            }
        } else {
            current.push(e);
        }
    }
    let mut links = Vec::new();
    let mut corner_runs = Vec::new();
    for run in runs {
        if run.iter().flat_map(|e| e.endpoints()).any(|v| grid.is_corner(v)) {
            corner_runs.extend(run);
            continue;
        }
        let probe = run[0].lo();
        let side = grid.side_of(probe).expect("corner-free run vertex");
        let f = SideFrame::new(grid.dims(), side);
        let along: Vec<u32> = run.iter().flat_map(|e| e.endpoints()).map(|v| f.coords(v).0).collect();
        let key = run.iter().map(|e| grid.edge_index(*e).expect("grid edge")).min().expect("non-empty");
        links.push((
            key,
            Link {
                side,
                start: *along.iter().min().expect("non-empty"),
                end: *along.iter().max().expect("non-empty"),
            },
        ));
    }
    links.sort_by_key(|(k, _)| *k);
    corner_runs.sort();
    (links.into_iter().map(|(_, l)| l).collect(), corner_runs)
}

/// The region generated by a link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub link: Link,
    /// Along-side column range `(lo, hi)` of the region at each depth.
    pub rows: Vec<(u32, u32)>,
    pub left_wall: Vec<Vertex>,
    pub right_wall: Vec<Vertex>,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    /// The walls were cut off by the opposite side before meeting.
    pub reaches_opposite_side: bool,
}

impl Staircase {
    /// Length of the generating link.
    pub fn length(&self) -> u32 {
        self.link.len()
    }

    /// Number of rows below the link.
    pub fn depth(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }
}

/// Build the staircase of `link`.
///
/// In side coordinates the region spans `[start + max(0, d−2), end − max(0,
/// d−2)]` at depth `d`, for as long as that range has an edge, cut off at the
/// opposite side of the grid.
pub fn staircase_of(grid: &Grid, link: &Link) -> Result<Staircase, AnalysisError> {
    if grid.p() < 2 || grid.q() < 2 {
        return Err(AnalysisError::BadLink);
    }
    let f = SideFrame::new(grid.dims(), link.side);
    if link.start >= link.end || link.start < 2 || link.end >= f.length() {
        return Err(AnalysisError::BadLink);
    }
    let len = link.len();
    let natural_depth = 2 + (len - 1) / 2;
    let last = natural_depth.min(f.extent() - 1);
    let rows: Vec<(u32, u32)> = (0..=last)
        .map(|d| {
            let inset = d.saturating_sub(2);
            (link.start + inset, link.end - inset)
        })
        .collect();

    let mut left_wall = Vec::new();
    let mut right_wall = Vec::new();
    for (d, &(lo, hi)) in rows.iter().enumerate() {
        let d = d as u32;
        left_wall.push(f.vertex(lo, d));
        right_wall.push(f.vertex(hi, d));
        if let Some(&(nlo, nhi)) = rows.get(d as usize + 1) {
            if nlo != lo {
                left_wall.push(f.vertex(nlo, d));
            }
            if nhi != hi {
                right_wall.push(f.vertex(nhi, d));
            }
        }
    }

    let mut vertices: Vec<Vertex> = rows
        .iter()
        .enumerate()
        .flat_map(|(d, &(lo, hi))| (lo..=hi).map(move |a| f.vertex(a, d as u32)))
        .collect();
    vertices.sort();
    let inside: BTreeSet<Vertex> = vertices.iter().copied().collect();
    let mut edges: Vec<Edge> = vertices
        .iter()
        .flat_map(|&v| grid.neighbors(v).filter(|w| inside.contains(w)).map(move |w| Edge::new(v, w).expect("adjacent")))
        .collect();
    edges.sort();
    edges.dedup();

    Ok(Staircase {
        link: link.clone(),
        rows,
        left_wall,
        right_wall,
        vertices,
        edges,
        reaches_opposite_side: natural_depth > f.extent() - 1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pyramid {
    pub staircase: usize,
    /// Index of the size-2 tip fence.
    pub tip: usize,
    pub thick: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleStaircase {
    pub first: usize,
    pub second: usize,
    pub thick: Edge,
    /// Both lengths even, `2a` and `2b`, with `a + b` equal to the extent
    /// across the grid minus 2, or the extent itself.
    pub lengths_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseClassification {
    pub staircases: Vec<Staircase>,
    /// Thick edges inside each staircase.
    pub thick_per_staircase: Vec<Vec<Edge>>,
    pub pyramids: Vec<Pyramid>,
    pub doubles: Vec<DoubleStaircase>,
    pub unclassified: Vec<usize>,
    pub tau: usize,
    pub waste: i64,
}

impl StaircaseClassification {
    pub fn n(&self) -> usize {
        self.pyramids.len()
    }

    pub fn m(&self) -> usize {
        self.doubles.len()
    }

    pub fn every_staircase_has_thick_edge(&self) -> bool {
        self.thick_per_staircase.iter().all(|t| !t.is_empty())
    }

    /// `w = τ + n + m`.
    pub fn waste_matches(&self) -> bool {
        self.waste == (self.tau + self.n() + self.m()) as i64
    }
}

/// Split the staircases of a normalized cover into pyramids and double
/// staircases.
///
/// A staircase of length `2·extent − 4` whose only thick edge is the shared
/// edge of a size-2 fence inside it is a pyramid with that fence as tip.
/// Remaining staircases with exactly one thick edge are paired greedily when
/// they share it. Anything left over is unclassified; for minimum covers
/// nothing should be.
pub fn classify_staircases(
    grid: &Grid,
    cover: &Cover,
    analysis: &BoundaryAnalysis,
) -> Result<StaircaseClassification, AnalysisError> {
    if !is_normalized(grid, cover)? {
        return Err(AnalysisError::NotNormalized);
    }
    let thick = thick_edges(grid, cover);
    let staircases: Vec<Staircase> =
        analysis.links.iter().map(|l| staircase_of(grid, l)).collect::<Result<_, _>>()?;
    let thick_per_staircase: Vec<Vec<Edge>> = staircases
        .iter()
        .map(|s| thick.iter().filter(|e| s.contains_edge(e)).copied().collect())
        .collect();

    let mut used_tip = alloc::vec![false; analysis.fences.len()];
    let mut done = alloc::vec![false; staircases.len()];
    let mut pyramids = Vec::new();
    for (si, s) in staircases.iter().enumerate() {
        let extent = SideFrame::new(grid.dims(), s.link.side).extent();
        if s.length() + 4 != 2 * extent || thick_per_staircase[si].len() != 1 {
            continue;
        }
        let only = thick_per_staircase[si][0];
        let tip = analysis.fences.iter().enumerate().position(|(fi, f)| {
            !used_tip[fi]
                && f.size() == 2
                && f.edges.iter().all(|e| s.contains_edge(e))
                && f.shared_edges(grid) == [only]
        });
        if let Some(fi) = tip {
            used_tip[fi] = true;
            done[si] = true;
            pyramids.push(Pyramid { staircase: si, tip: fi, thick: only });
        }
    }

    let mut doubles = Vec::new();
    for i in 0..staircases.len() {
        if done[i] || thick_per_staircase[i].len() != 1 {
            continue;
        }
        let e = thick_per_staircase[i][0];
        let partner = (i + 1..staircases.len()).find(|&j| !done[j] && thick_per_staircase[j] == [e]);
        if let Some(j) = partner {
            done[i] = true;
            done[j] = true;
            let extent = SideFrame::new(grid.dims(), staircases[i].link.side).extent();
            let (la, lb) = (staircases[i].length(), staircases[j].length());
            let lengths_consistent =
                la % 2 == 0 && lb % 2 == 0 && (la / 2 + lb / 2 + 2 == extent || la / 2 + lb / 2 == extent);
            doubles.push(DoubleStaircase { first: i, second: j, thick: e, lengths_consistent });
        }
    }
    let unclassified = (0..staircases.len()).filter(|&i| !done[i]).collect();

    Ok(StaircaseClassification {
        staircases,
        thick_per_staircase,
        pyramids,
        doubles,
        unclassified,
        tau: cover.elements().iter().filter(|b| b.is_k13()).count(),
        waste: 4 * cover.len() as i64 - grid.edge_count() as i64,
    })
}

/// Both sides of the boundary waste accounting, doubled to stay integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WasteIdentity {
    pub waste: i64,
    pub beta: usize,
    pub tau: usize,
    /// `2(β + τ)`.
    pub twice_beta_tau: i64,
    /// `2(p + q − 2) − c − b₁ + Σ_{i ≥ 3} (i − 2) b_i`.
    pub twice_formula: i64,
    /// `β = Σ (i − 1) b_i`.
    pub beta_matches_fences: bool,
}

impl WasteIdentity {
    pub fn identity_holds(&self) -> bool {
        self.twice_beta_tau == self.twice_formula
    }

    /// `w ≥ β + τ`.
    pub fn inequality_holds(&self) -> bool {
        2 * self.waste >= self.twice_beta_tau
    }
}

/// Evaluate the waste lower bound `w ≥ β + τ` and its closed form in terms
/// of fence counts on a normalized cover with every outer edge covered.
pub fn waste_identity_check(grid: &Grid, cover: &Cover) -> Result<WasteIdentity, AnalysisError> {
    check_maximal(grid, cover)?;
    if !is_normalized(grid, cover)? {
        return Err(AnalysisError::NotNormalized);
    }
    let counts = edge_multiplicities(grid, cover);
    for e in grid.outer_cycle().expect("p, q >= 2") {
        if counts[grid.edge_index(e).expect("grid edge")] == 0 {
            return Err(AnalysisError::UncoveredBoundary(e));
        }
    }
    let a = boundary_analysis(grid, cover)?;
    let tau = cover.elements().iter().filter(|b| b.is_k13()).count();
    let tail: i64 = a.b.iter().filter(|(&i, _)| i >= 3).map(|(&i, &n)| (i as i64 - 2) * n as i64).sum();
    let twice_formula = 2 * (grid.p() as i64 + grid.q() as i64 - 2) - a.c as i64 - a.b(1) as i64 + tail;
    Ok(WasteIdentity {
        waste: 4 * cover.len() as i64 - grid.edge_count() as i64,
        beta: a.beta,
        tau,
        twice_beta_tau: 2 * (a.beta + tau) as i64,
        twice_formula,
        beta_matches_fences: a.beta == a.fence_overlap_sum(),
    })
}
