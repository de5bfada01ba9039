//! Grid graphs `G_{p,q}`: vertex set `[q] × [p]` with 1-based `(col, row)`
//! coordinates and Manhattan-distance-1 adjacency.
//!
//! Edges carry a fixed numbering that the rest of the crate (and the JSON
//! cover format) relies on: horizontal edges first, row-major, then vertical
//! edges, row-major.

use alloc::vec::Vec;
use core::fmt;

use crate::error::GridError;

/// Dimensions of a grid: `p` rows and `q` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridDims {
    p: u32,
    q: u32,
}

impl GridDims {
    pub fn new(p: u32, q: u32) -> Result<Self, GridError> {
        if p == 0 || q == 0 {
            return Err(GridError::EmptyDimension { p, q });
        }
        // Edge indices must fit comfortably in usize on 32-bit targets too.
        if (p as u64) * (q as u64) > (u32::MAX as u64) / 2 {
            return Err(GridError::TooLarge { p, q });
        }
        Ok(GridDims { p, q })
    }

    /// Number of rows.
    pub fn p(self) -> u32 {
        self.p
    }

    /// Number of columns.
    pub fn q(self) -> u32 {
        self.q
    }

    pub fn transpose(self) -> GridDims {
        GridDims { p: self.q, q: self.p }
    }

    /// The same grid with `p ≤ q`, and whether a transpose was needed.
    pub fn oriented(self) -> (GridDims, bool) {
        if self.p <= self.q {
            (self, false)
        } else {
            (self.transpose(), true)
        }
    }

    pub fn vertex_count(self) -> usize {
        self.p as usize * self.q as usize
    }

    pub fn horizontal_edge_count(self) -> usize {
        self.p as usize * (self.q as usize - 1)
    }

    pub fn vertical_edge_count(self) -> usize {
        (self.p as usize - 1) * self.q as usize
    }

    /// `2pq − p − q`.
    pub fn edge_count(self) -> usize {
        self.horizontal_edge_count() + self.vertical_edge_count()
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=self.q).contains(&v.col) && (1..=self.p).contains(&v.row)
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.p, self.q)
    }
}

/// A lattice vertex `(col, row)`, both 1-based. Ordered lexicographically by
/// column, then row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub col: u32,
    pub row: u32,
}

impl Vertex {
    pub const fn new(col: u32, row: u32) -> Self {
        Vertex { col, row }
    }

    /// Bipartition class: `(col + row) mod 2`.
    pub fn color(self) -> u32 {
        (self.col + self.row) % 2
    }

    /// The neighbor one step in `dir`, if it lies inside `dims`.
    pub fn step(self, dir: Dir, dims: GridDims) -> Option<Vertex> {
        let (dc, dr) = dir.delta();
        let col = self.col as i64 + dc as i64;
        let row = self.row as i64 + dr as i64;
        if col < 1 || row < 1 {
            return None;
        }
        let v = Vertex::new(col as u32, row as u32);
        dims.contains(v).then_some(v)
    }

    /// Direction from `self` to an adjacent vertex `other`.
    pub fn dir_to(self, other: Vertex) -> Option<Dir> {
        Dir::ALL.into_iter().find(|d| {
            let (dc, dr) = d.delta();
            self.col as i64 + dc as i64 == other.col as i64
                && self.row as i64 + dr as i64 == other.row as i64
        })
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// One of the four lattice directions. Row 1 is at the bottom, so `Up`
/// increases the row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    Left,
    Right,
    Down,
    Up,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::Left, Dir::Right, Dir::Down, Dir::Up];

    pub fn delta(self) -> (i32, i32) {
        match self {
            Dir::Left => (-1, 0),
            Dir::Right => (1, 0),
            Dir::Down => (0, -1),
            Dir::Up => (0, 1),
        }
    }

    pub fn opposite(self) -> Dir {
        match self {
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
            Dir::Down => Dir::Up,
            Dir::Up => Dir::Down,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Dir::Left | Dir::Right)
    }

    pub(crate) fn bit(self) -> u8 {
        match self {
            Dir::Left => 1,
            Dir::Right => 2,
            Dir::Down => 4,
            Dir::Up => 8,
        }
    }
}

/// An undirected grid edge stored with its lexicographically smaller endpoint
/// first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// `None` unless `a` and `b` are at Manhattan distance 1.
    pub fn new(a: Vertex, b: Vertex) -> Option<Edge> {
        a.dir_to(b)?;
        Some(if a < b { Edge { lo: a, hi: b } } else { Edge { lo: b, hi: a } })
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> [Vertex; 2] {
        [self.lo, self.hi]
    }

    pub fn is_horizontal(self) -> bool {
        self.lo.row == self.hi.row
    }

    pub fn touches(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// One of the four sides of the outer cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Bottom,
    Right,
    Top,
    Left,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Bottom, Side::Right, Side::Top, Side::Left];

    /// Direction pointing into the grid from this side.
    pub fn inward(self) -> Dir {
        match self {
            Side::Bottom => Dir::Up,
            Side::Top => Dir::Down,
            Side::Left => Dir::Right,
            Side::Right => Dir::Left,
        }
    }
}

/// A side-relative coordinate frame: `along` runs parallel to the side
/// (increasing column or row), `depth` counts steps inward from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SideFrame {
    pub side: Side,
    dims: GridDims,
}

impl SideFrame {
    pub fn new(dims: GridDims, side: Side) -> Self {
        SideFrame { side, dims }
    }

    /// Number of vertices along the side.
    pub fn length(self) -> u32 {
        match self.side {
            Side::Bottom | Side::Top => self.dims.q,
            Side::Left | Side::Right => self.dims.p,
        }
    }

    /// Number of vertices from this side to the opposite one.
    pub fn extent(self) -> u32 {
        match self.side {
            Side::Bottom | Side::Top => self.dims.p,
            Side::Left | Side::Right => self.dims.q,
        }
    }

    pub fn vertex(self, along: u32, depth: u32) -> Vertex {
        let d = self.dims;
        match self.side {
            Side::Bottom => Vertex::new(along, 1 + depth),
            Side::Top => Vertex::new(along, d.p - depth),
            Side::Left => Vertex::new(1 + depth, along),
            Side::Right => Vertex::new(d.q - depth, along),
        }
    }

    /// Inverse of [`SideFrame::vertex`].
    pub fn coords(self, v: Vertex) -> (u32, u32) {
        let d = self.dims;
        match self.side {
            Side::Bottom => (v.col, v.row - 1),
            Side::Top => (v.col, d.p - v.row),
            Side::Left => (v.row, v.col - 1),
            Side::Right => (v.row, d.q - v.col),
        }
    }
}

/// The grid graph `G_{p,q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    dims: GridDims,
}

impl Grid {
    pub fn new(p: u32, q: u32) -> Result<Self, GridError> {
        Ok(Grid { dims: GridDims::new(p, q)? })
    }

    pub fn from_dims(dims: GridDims) -> Self {
        Grid { dims }
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn p(&self) -> u32 {
        self.dims.p
    }

    pub fn q(&self) -> u32 {
        self.dims.q
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.dims.edge_count()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.dims.contains(v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        let (p, q) = (self.dims.p, self.dims.q);
        (1..=q).flat_map(move |col| (1..=p).map(move |row| Vertex::new(col, row)))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        Dir::ALL.into_iter().filter_map(move |d| v.step(d, self.dims))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }

    pub fn is_boundary(&self, v: Vertex) -> bool {
        v.col == 1 || v.row == 1 || v.col == self.dims.q || v.row == self.dims.p
    }

    /// `(1,1)`, `(1,p)`, `(q,1)`, `(q,p)` with duplicates removed for
    /// degenerate grids.
    pub fn corners(&self) -> Vec<Vertex> {
        let (p, q) = (self.dims.p, self.dims.q);
        let mut out = alloc::vec![
            Vertex::new(1, 1),
            Vertex::new(1, p),
            Vertex::new(q, 1),
            Vertex::new(q, p)
        ];
        out.sort();
        out.dedup();
        out
    }

    pub fn is_corner(&self, v: Vertex) -> bool {
        (v.col == 1 || v.col == self.dims.q) && (v.row == 1 || v.row == self.dims.p)
    }

    /// The side a non-corner boundary vertex lies on. `None` for interior
    /// vertices, corners, and vertices of 1-wide grids.
    pub fn side_of(&self, v: Vertex) -> Option<Side> {
        let (p, q) = (self.dims.p, self.dims.q);
        if p < 2 || q < 2 || self.is_corner(v) {
            return None;
        }
        if v.row == 1 {
            Some(Side::Bottom)
        } else if v.row == p {
            Some(Side::Top)
        } else if v.col == 1 {
            Some(Side::Left)
        } else if v.col == q {
            Some(Side::Right)
        } else {
            None
        }
    }

    /// Canonical index of `e`: horizontal edges row-major, then vertical
    /// edges row-major.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        if !self.contains(e.hi) {
            return None;
        }
        let (p, q) = (self.dims.p as usize, self.dims.q as usize);
        let (c, r) = (e.lo.col as usize, e.lo.row as usize);
        if e.is_horizontal() {
            Some((r - 1) * (q - 1) + (c - 1))
        } else {
            Some(p * (q - 1) + (r - 1) * q + (c - 1))
        }
    }

    /// Inverse of [`Grid::edge_index`].
    pub fn edge_at(&self, index: usize) -> Option<Edge> {
        let (p, q) = (self.dims.p as usize, self.dims.q as usize);
        let h = p * (q - 1);
        let (lo, hi) = if index < h {
            let (r, c) = (index / (q - 1), index % (q - 1));
            let lo = Vertex::new(c as u32 + 1, r as u32 + 1);
            (lo, Vertex::new(lo.col + 1, lo.row))
        } else if index < self.edge_count() {
            let i = index - h;
            let (r, c) = (i / q, i % q);
            let lo = Vertex::new(c as u32 + 1, r as u32 + 1);
            (lo, Vertex::new(lo.col, lo.row + 1))
        } else {
            return None;
        };
        Some(Edge { lo, hi })
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edge_count()).map(move |i| self.edge_at(i).expect("index in range"))
    }

    pub fn edge(&self, a: Vertex, b: Vertex) -> Option<Edge> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        Edge::new(a, b)
    }

    /// Whether `e` lies on the outer cycle. Always false for 1-wide grids.
    pub fn is_outer_edge(&self, e: Edge) -> bool {
        let (p, q) = (self.dims.p, self.dims.q);
        if p < 2 || q < 2 {
            return false;
        }
        if e.is_horizontal() {
            e.lo.row == 1 || e.lo.row == p
        } else {
            e.lo.col == 1 || e.lo.col == q
        }
    }

    /// The outer cycle, walked counter-clockwise from `(1,1)`:
    /// along the bottom, up the right side, back along the top and down the
    /// left side. Has `2p + 2q − 4` edges.
    pub fn outer_cycle(&self) -> Result<Vec<Edge>, GridError> {
        let (p, q) = (self.dims.p, self.dims.q);
        if p < 2 || q < 2 {
            return Err(GridError::NoOuterCycle { p, q });
        }
        let mut walk = Vec::with_capacity(2 * (p + q) as usize - 3);
        walk.extend((1..=q).map(|c| Vertex::new(c, 1)));
        walk.extend((2..=p).map(|r| Vertex::new(q, r)));
        walk.extend((1..q).rev().map(|c| Vertex::new(c, p)));
        walk.extend((1..p).rev().map(|r| Vertex::new(1, r)));
        Ok(walk
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]).expect("consecutive walk vertices are adjacent"))
            .collect())
    }

    /// Number of edges on the outer cycle.
    pub fn outer_cycle_len(&self) -> Option<usize> {
        let (p, q) = (self.dims.p as usize, self.dims.q as usize);
        (p >= 2 && q >= 2).then(|| 2 * p + 2 * q - 4)
    }
}
