//! Cover validation, multiplicity accounting and boundary normalization.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::biclique::{enumerate_maximal_bicliques, Biclique};
use crate::cover::Cover;
use crate::error::NormalizeError;
use crate::grid::{Dir, Edge, Grid, Vertex};

/// Result of checking a cover against a grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub valid: bool,
    pub size: usize,
    pub edge_count: usize,
    pub uncovered: Vec<Edge>,
    /// Elements that are not subgraphs of the grid.
    pub invalid_elements: Vec<Biclique>,
    /// `i → t_i`: number of edges covered exactly `i ≥ 1` times.
    pub multiplicities: BTreeMap<u32, usize>,
    /// Number of `K_{1,3}` elements.
    pub tau: usize,
    /// `4|C| − |E|`.
    pub waste: i64,
    pub all_maximal: bool,
}

impl CoverReport {
    pub fn t(&self, i: u32) -> usize {
        self.multiplicities.get(&i).copied().unwrap_or(0)
    }

    /// `τ + Σ (i − 1) t_i`, which is `τ + t₂ + 2t₃ + 3t₄` for grids. Equals
    /// [`CoverReport::waste`] for valid covers of maximal elements when
    /// `p, q ≥ 2`; path grids have `K_{1,2}` elements that break the count.
    pub fn multiplicity_waste(&self) -> i64 {
        self.tau as i64 + self.multiplicities.iter().map(|(&i, &t)| (i as i64 - 1) * t as i64).sum::<i64>()
    }
}

/// Per-edge coverage counts indexed by canonical edge number. Elements that
/// do not fit the grid contribute nothing.
pub fn edge_multiplicities(grid: &Grid, cover: &Cover) -> Vec<u32> {
    let mut counts = vec![0u32; grid.edge_count()];
    for b in cover.elements() {
        if let Some(es) = b.edges(grid.dims()) {
            for e in es {
                counts[grid.edge_index(e).expect("fitting element")] += 1;
            }
        }
    }
    counts
}

pub fn verify_cover(grid: &Grid, cover: &Cover) -> CoverReport {
    let counts = edge_multiplicities(grid, cover);
    let uncovered: Vec<Edge> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 0)
        .map(|(i, _)| grid.edge_at(i).expect("index in range"))
        .collect();
    let mut multiplicities = BTreeMap::new();
    for &c in counts.iter().filter(|&&c| c > 0) {
        *multiplicities.entry(c).or_insert(0) += 1;
    }
    let invalid_elements: Vec<Biclique> =
        cover.elements().iter().filter(|b| !b.fits(grid.dims())).copied().collect();
    CoverReport {
        valid: uncovered.is_empty() && invalid_elements.is_empty() && cover.dims() == grid.dims(),
        size: cover.len(),
        edge_count: grid.edge_count(),
        uncovered,
        invalid_elements,
        multiplicities,
        tau: cover.elements().iter().filter(|b| b.is_k13()).count(),
        waste: 4 * cover.len() as i64 - grid.edge_count() as i64,
        all_maximal: cover.all_maximal(grid),
    }
}

fn check_normalizable(grid: &Grid, cover: &Cover) -> Result<(), NormalizeError> {
    if grid.p() < 2 || grid.q() < 2 {
        return Err(NormalizeError::NoFourCycles { p: grid.p(), q: grid.q() });
    }
    for b in cover.elements() {
        if !b.fits(grid.dims()) {
            return Err(NormalizeError::OutsideGrid(*b));
        }
        if !b.is_maximal(grid) {
            return Err(NormalizeError::NotMaximal(*b));
        }
    }
    Ok(())
}

/// For each edge, the boundary stars and boundary 4-cycles containing it.
struct BoundaryIncidence {
    stars: Vec<Vec<Biclique>>,
    cycles: Vec<Vec<Biclique>>,
}

impl BoundaryIncidence {
    fn new(grid: &Grid, elements: &[Biclique]) -> Self {
        let mut stars = vec![Vec::new(); grid.edge_count()];
        let mut cycles = vec![Vec::new(); grid.edge_count()];
        for b in elements.iter().filter(|b| b.is_boundary_element(grid)) {
            for e in b.edges(grid.dims()).expect("checked fits") {
                let i = grid.edge_index(e).expect("grid edge");
                if b.is_star() {
                    stars[i].push(*b);
                } else {
                    cycles[i].push(*b);
                }
            }
        }
        BoundaryIncidence { stars, cycles }
    }
}

/// Whether (i) boundary stars are pairwise edge-disjoint and (ii) no edge
/// lies in both a boundary 4-cycle and a boundary star.
pub fn is_normalized(grid: &Grid, cover: &Cover) -> Result<bool, NormalizeError> {
    check_normalizable(grid, cover)?;
    let inc = BoundaryIncidence::new(grid, cover.elements());
    Ok(inc
        .stars
        .iter()
        .zip(&inc.cycles)
        .all(|(s, c)| s.len() <= 1 && (s.is_empty() || c.is_empty())))
}

/// Which replacement rule a rewrite step used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Two boundary stars sharing an edge.
    StarPair,
    /// A boundary star sharing an edge with a boundary 4-cycle.
    StarCycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub rule: Rule,
    pub at: Edge,
    pub removed: Vec<Biclique>,
    pub added: Vec<Biclique>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub cover: Cover,
    pub steps: Vec<Rewrite>,
    /// Replacements that already existed in the cover and were swapped for
    /// an unused element to keep the size.
    pub padded: usize,
    /// Replacements that already existed and had no substitute; each shrinks
    /// the cover by one.
    pub dropped: usize,
}

/// Rewrite a cover of maximal elements until it is normalized.
///
/// Edges are scanned in canonical order and the first applicable rule is
/// applied before rescanning:
///
/// * two boundary stars at `u < v` sharing an edge along `v`'s side: keep
///   `u`'s star, replace `v`'s by the inward square holding `v`'s other two
///   edges. If the shared edge crosses a 2-wide grid, both stars become the
///   two squares on that edge.
/// * a boundary star at `v` sharing an edge with a boundary square: replace
///   the star by the inward square on the other side of `v`.
///
/// Each step removes at least one boundary star, so the number of steps is
/// at most the initial star count. Coverage only grows.
///
/// A replacement that is already in the cover is swapped for an unused
/// interior element, or failing that an unused boundary 4-cycle. A
/// normalized cover without repeats has at most `(p−1)(q−1) + (p−2)(q−2)`
/// elements, so larger inputs lose elements (`dropped`) and end at exactly
/// that size.
pub fn normalize_cover(grid: &Grid, cover: &Cover) -> Result<Normalized, NormalizeError> {
    check_normalizable(grid, cover)?;
    let mut elements: Vec<Biclique> = cover.elements().to_vec();
    let mut steps = Vec::new();
    let (mut padded, mut dropped) = (0, 0);
    // Interior elements first, 4-cycles before stars, then boundary 4-cycles.
    // Padding never adds a boundary star, so the step bound still holds; a
    // boundary 4-cycle may trigger further rewrites.
    let spares: Vec<Biclique> = {
        let mut all = enumerate_maximal_bicliques(grid);
        all.retain(|b| b.is_cycle() || !b.is_boundary_element(grid));
        all.sort_by_key(|b| (b.is_boundary_element(grid), b.is_star(), *b));
        all
    };

    while let Some((rule, at, removed, added)) = next_rewrite(grid, &elements) {
        elements.retain(|b| !removed.contains(b));
        let mut applied = Vec::new();
        for b in added {
            if elements.contains(&b) || applied.contains(&b) {
                match spares.iter().find(|s| !elements.contains(s) && !applied.contains(s)) {
                    Some(s) => {
                        applied.push(*s);
                        padded += 1;
                    }
                    None => dropped += 1,
                }
            } else {
                applied.push(b);
            }
        }
        elements.extend(applied.iter().copied());
        steps.push(Rewrite { rule, at, removed, added: applied });
    }
    let cover = Cover::new(grid.dims(), elements).expect("rewrites never duplicate elements");
    Ok(Normalized { cover, steps, padded, dropped })
}

type Step = (Rule, Edge, Vec<Biclique>, Vec<Biclique>);

fn next_rewrite(grid: &Grid, elements: &[Biclique]) -> Option<Step> {
    let mut sorted = elements.to_vec();
    sorted.sort();
    let inc = BoundaryIncidence::new(grid, &sorted);
    for i in 0..grid.edge_count() {
        let e = grid.edge_at(i).expect("index in range");
        let stars = &inc.stars[i];
        if stars.len() >= 2 {
            let (u, v) = (stars[0], stars[1]);
            let (cu, cv) = (center(u), center(v));
            let d = cu.dir_to(cv).expect("stars sharing an edge have adjacent centers");
            let side = grid.side_of(cv).expect("boundary star centers are non-corner boundary vertices");
            if d.is_horizontal() == side.inward().is_horizontal() {
                // Shared edge crosses a 2-wide grid.
                let added = squares_on_edge(e);
                return Some((Rule::StarPair, e, vec![u, v], added));
            }
            let sq = inward_square(grid, cv, d);
            return Some((Rule::StarPair, e, vec![v], vec![sq]));
        }
        if let (Some(&star), Some(&cycle)) = (stars.first(), inc.cycles[i].first()) {
            let v = center(star);
            let side = grid.side_of(v).expect("boundary star center");
            let Biclique::FourCycle { anchor } = cycle else { unreachable!() };
            let along = Dir::ALL
                .into_iter()
                .filter(|d| d.is_horizontal() != side.inward().is_horizontal())
                .find(|d| {
                    v.step(*d, grid.dims())
                        .is_some_and(|w| Biclique::square_corners(anchor).contains(&w))
                })
                .expect("square through a side vertex contains a side neighbor");
            let sq = inward_square(grid, v, along.opposite());
            return Some((Rule::StarCycle, e, vec![star], vec![sq]));
        }
    }
    None
}

fn center(b: Biclique) -> Vertex {
    match b {
        Biclique::Star { center, .. } => center,
        Biclique::FourCycle { .. } => unreachable!("boundary star lists hold stars"),
    }
}

/// The unit square spanned by side vertex `v`, its side neighbor in direction
/// `along`, and their inward neighbors.
fn inward_square(grid: &Grid, v: Vertex, along: Dir) -> Biclique {
    let dims = grid.dims();
    let inward = grid.side_of(v).expect("side vertex").inward();
    let w = v.step(along, dims).expect("non-corner side vertex has both side neighbors");
    let corners = [v, w, v.step(inward, dims).expect("p, q >= 2"), w.step(inward, dims).expect("p, q >= 2")];
    Biclique::cycle(*corners.iter().min().expect("four corners"))
}

fn squares_on_edge(e: Edge) -> Vec<Biclique> {
    let lo = e.lo();
    if e.is_horizontal() {
        vec![Biclique::cycle(Vertex::new(lo.col, lo.row - 1)), Biclique::cycle(lo)]
    } else {
        vec![Biclique::cycle(Vertex::new(lo.col - 1, lo.row)), Biclique::cycle(lo)]
    }
}
