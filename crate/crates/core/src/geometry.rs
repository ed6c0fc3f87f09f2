//! Cells, collections of cells and their combinatorics.
//!
//! Points are ordered by `(i, j)` lexicographically: `(i,j) > (k,l)` iff
//! `i > k`, or `i = k` and `j > l`. This is the order used to rank ring
//! variables and to pick the lower left corner of a hole, and every sequence
//! returned by this module is sorted with it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest absolute value accepted for a vertex coordinate.
pub const COORDINATE_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPoint {
    /// Column.
    pub i: i64,
    /// Row.
    pub j: i64,
}

impl GridPoint {
    pub const fn new(i: i64, j: i64) -> Self {
        GridPoint { i, j }
    }

    pub const fn offset(self, di: i64, dj: i64) -> Self {
        GridPoint {
            i: self.i + di,
            j: self.j + dj,
        }
    }

    fn in_bounds(self) -> bool {
        self.i.abs() <= COORDINATE_BOUND && self.j.abs() <= COORDINATE_BOUND
    }
}

impl From<(i64, i64)> for GridPoint {
    fn from((i, j): (i64, i64)) -> Self {
        GridPoint { i, j }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A unit square, identified by its lower left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell(GridPoint);

impl Cell {
    pub const fn new(lower_left: GridPoint) -> Self {
        Cell(lower_left)
    }

    pub const fn at(i: i64, j: i64) -> Self {
        Cell(GridPoint::new(i, j))
    }

    /// Builds a cell from its diagonal corners, rejecting anything that is
    /// not a unit square.
    pub fn from_corners(lower_left: GridPoint, upper_right: GridPoint) -> Result<Self> {
        if !lower_left.in_bounds() {
            return Err(Error::CoordinateOutOfBounds(lower_left));
        }
        if upper_right != lower_left.offset(1, 1) {
            return Err(Error::NotUnitCell(lower_left, upper_right));
        }
        Ok(Cell(lower_left))
    }

    pub const fn lower_left(self) -> GridPoint {
        self.0
    }

    pub const fn upper_right(self) -> GridPoint {
        self.0.offset(1, 1)
    }

    pub const fn upper_left(self) -> GridPoint {
        self.0.offset(0, 1)
    }

    pub const fn lower_right(self) -> GridPoint {
        self.0.offset(1, 0)
    }

    pub const fn vertices(self) -> [GridPoint; 4] {
        [
            self.lower_left(),
            self.lower_right(),
            self.upper_left(),
            self.upper_right(),
        ]
    }

    pub const fn translate(self, di: i64, dj: i64) -> Self {
        Cell(self.0.offset(di, dj))
    }

    fn edge_neighbours(self) -> [Cell; 4] {
        [
            self.translate(1, 0),
            self.translate(-1, 0),
            self.translate(0, 1),
            self.translate(0, -1),
        ]
    }

    fn vertex_neighbours(self) -> [Cell; 8] {
        [
            self.translate(1, 0),
            self.translate(-1, 0),
            self.translate(0, 1),
            self.translate(0, -1),
            self.translate(1, 1),
            self.translate(1, -1),
            self.translate(-1, 1),
            self.translate(-1, -1),
        ]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The interval `[a, b]` of `Z^2` with `a <= b` componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub a: GridPoint,
    pub b: GridPoint,
}

impl Interval {
    /// Returns `None` unless `a <= b` componentwise.
    pub fn new(a: GridPoint, b: GridPoint) -> Option<Self> {
        (a.i <= b.i && a.j <= b.j).then_some(Interval { a, b })
    }

    pub fn is_proper(&self) -> bool {
        self.a.i < self.b.i && self.a.j < self.b.j
    }

    /// Diagonal corners `(a, b)`.
    pub fn diagonal(&self) -> (GridPoint, GridPoint) {
        (self.a, self.b)
    }

    /// Anti-diagonal corners `(c, d)` with `c` upper left and `d` lower right.
    pub fn anti_diagonal(&self) -> (GridPoint, GridPoint) {
        (
            GridPoint::new(self.a.i, self.b.j),
            GridPoint::new(self.b.i, self.a.j),
        )
    }

    pub fn corners(&self) -> [GridPoint; 4] {
        let (c, d) = self.anti_diagonal();
        [self.a, self.b, c, d]
    }

    /// Cells of the cell interval attached to `self`.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.a.i..self.b.i).flat_map(move |i| (self.a.j..self.b.j).map(move |j| Cell::at(i, j)))
    }

    pub fn translate(&self, di: i64, dj: i64) -> Self {
        Interval {
            a: self.a.offset(di, dj),
            b: self.b.offset(di, dj),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
}

/// A run of collinear unit edges of a collection.
///
/// Horizontal intervals have `fixed` = row and span columns `lo..=hi`;
/// vertical ones have `fixed` = column and span rows `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeInterval {
    pub direction: Direction,
    pub fixed: i64,
    pub lo: i64,
    pub hi: i64,
}

impl EdgeInterval {
    pub fn contains(&self, p: GridPoint) -> bool {
        let (fixed, varying) = match self.direction {
            Direction::Horizontal => (p.j, p.i),
            Direction::Vertical => (p.i, p.j),
        };
        fixed == self.fixed && self.lo <= varying && varying <= self.hi
    }

    pub fn endpoints(&self) -> (GridPoint, GridPoint) {
        match self.direction {
            Direction::Horizontal => (
                GridPoint::new(self.lo, self.fixed),
                GridPoint::new(self.hi, self.fixed),
            ),
            Direction::Vertical => (
                GridPoint::new(self.fixed, self.lo),
                GridPoint::new(self.fixed, self.hi),
            ),
        }
    }

    /// Number of unit edges.
    pub fn len(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi <= self.lo
    }
}

impl fmt::Display for EdgeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.endpoints();
        write!(f, "[{}, {}]", p, q)
    }
}

/// A bounded connected component of the complement of a collection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hole {
    /// Sorted ascending.
    pub cells: Vec<Cell>,
    /// Minimum vertex of the hole.
    pub corner: GridPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Classification {
    pub is_polyomino: bool,
    pub weakly_connected: bool,
    pub row_convex: bool,
    pub column_convex: bool,
    pub convex: bool,
    pub simple: bool,
    pub hole_count: usize,
    /// Number of edge-connected components.
    pub component_count: usize,
}

/// A finite nonempty set of cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellCollection {
    cells: BTreeSet<Cell>,
}

impl CellCollection {
    /// Rejects empty input, duplicated cells and coordinates beyond
    /// [`COORDINATE_BOUND`].
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for cell in cells {
            Self::check_bounds(cell)?;
            if !set.insert(cell) {
                return Err(Error::DuplicateCell(cell));
            }
        }
        Self::from_set(set)
    }

    /// Like [`CellCollection::new`] but silently drops repeated cells.
    pub fn new_dedup<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for cell in cells {
            Self::check_bounds(cell)?;
            set.insert(cell);
        }
        Self::from_set(set)
    }

    /// Convenience constructor from lower left corners.
    pub fn from_corners<I: IntoIterator<Item = (i64, i64)>>(corners: I) -> Result<Self> {
        Self::new(corners.into_iter().map(|(i, j)| Cell::at(i, j)))
    }

    fn check_bounds(cell: Cell) -> Result<()> {
        let ll = cell.lower_left();
        if !ll.in_bounds() {
            return Err(Error::CoordinateOutOfBounds(ll));
        }
        let ur = cell.upper_right();
        if !ur.in_bounds() {
            return Err(Error::CoordinateOutOfBounds(ur));
        }
        Ok(())
    }

    fn from_set(cells: BTreeSet<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyCollection);
        }
        Ok(CellCollection { cells })
    }

    /// Cells in ascending order of their lower left corners.
    pub fn cells(&self) -> impl ExactSizeIterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Number of cells.
    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    /// Smallest interval containing every cell.
    pub fn bounding_interval(&self) -> Interval {
        let mut lo = self.first().lower_left();
        let mut hi = self.first().upper_right();
        for c in &self.cells {
            let (a, b) = (c.lower_left(), c.upper_right());
            lo = GridPoint::new(lo.i.min(a.i), lo.j.min(a.j));
            hi = GridPoint::new(hi.i.max(b.i), hi.j.max(b.j));
        }
        Interval { a: lo, b: hi }
    }

    fn first(&self) -> Cell {
        *self.cells.iter().next().expect("collections are nonempty")
    }

    pub fn translate(&self, di: i64, dj: i64) -> Result<Self> {
        Self::new(self.cells.iter().map(|c| c.translate(di, dj)))
    }

    /// `V(P)`, sorted descending: the canonical ranking of ring variables.
    pub fn vertex_set(&self) -> Vec<GridPoint> {
        let set: BTreeSet<GridPoint> = self.cells.iter().flat_map(|c| c.vertices()).collect();
        set.into_iter().rev().collect()
    }

    pub fn is_vertex(&self, p: GridPoint) -> bool {
        [(0, 0), (-1, 0), (0, -1), (-1, -1)]
            .iter()
            .any(|&(di, dj)| self.contains(Cell::new(p.offset(di, dj))))
    }

    /// Number of cells stacked upward starting at `cell`.
    fn run_up(&self, cell: Cell) -> i64 {
        let mut n = 0;
        while self.contains(cell.translate(0, n)) {
            n += 1;
        }
        n
    }

    /// All proper intervals whose cells all lie in the collection, sorted by
    /// `(a, b)` ascending.
    pub fn inner_intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for &cell in &self.cells {
            let a = cell.lower_left();
            let mut max_height = i64::MAX;
            for width in 1.. {
                let run = self.run_up(cell.translate(width - 1, 0));
                if run == 0 {
                    break;
                }
                max_height = max_height.min(run);
                for height in 1..=max_height {
                    out.push(Interval {
                        a,
                        b: a.offset(width, height),
                    });
                }
            }
        }
        out.sort();
        out
    }

    /// Maximal edge intervals of one direction, sorted by `(fixed, lo)`.
    pub fn maximal_edge_intervals(&self, direction: Direction) -> Vec<EdgeInterval> {
        // unit edges keyed by (fixed coordinate, start of the varying one)
        let mut edges = BTreeSet::new();
        for c in &self.cells {
            let GridPoint { i, j } = c.lower_left();
            match direction {
                Direction::Horizontal => {
                    edges.insert((j, i));
                    edges.insert((j + 1, i));
                }
                Direction::Vertical => {
                    edges.insert((i, j));
                    edges.insert((i + 1, j));
                }
            }
        }
        let mut out: Vec<EdgeInterval> = Vec::new();
        for (fixed, start) in edges {
            match out.last_mut() {
                Some(last) if last.fixed == fixed && last.hi == start => last.hi = start + 1,
                _ => out.push(EdgeInterval {
                    direction,
                    fixed,
                    lo: start,
                    hi: start + 1,
                }),
            }
        }
        out
    }

    /// Holes (bounded components of the cell complement under edge
    /// adjacency), sorted by corner.
    pub fn detect_holes(&self) -> Vec<Hole> {
        // A complement cell in a row or column without any cell of P escapes
        // to infinity, so only occupied rows x occupied columns need a fill.
        let rows: BTreeSet<i64> = self.cells.iter().map(|c| c.lower_left().j).collect();
        let cols: BTreeSet<i64> = self.cells.iter().map(|c| c.lower_left().i).collect();
        let inside = |c: Cell| rows.contains(&c.lower_left().j) && cols.contains(&c.lower_left().i);

        let mut seen = BTreeSet::new();
        let mut holes = Vec::new();
        for &j in &rows {
            for &i in &cols {
                let seed = Cell::at(i, j);
                if self.contains(seed) || seen.contains(&seed) {
                    continue;
                }
                seen.insert(seed);
                let mut stack = vec![seed];
                let mut component = Vec::new();
                let mut escapes = false;
                while let Some(c) = stack.pop() {
                    component.push(c);
                    for n in c.edge_neighbours() {
                        if self.contains(n) {
                            continue;
                        }
                        if !inside(n) {
                            escapes = true;
                            continue;
                        }
                        if seen.insert(n) {
                            stack.push(n);
                        }
                    }
                }
                if !escapes {
                    component.sort();
                    let corner = component[0].lower_left();
                    holes.push(Hole {
                        cells: component,
                        corner,
                    });
                }
            }
        }
        holes.sort_by_key(|h| h.corner);
        holes
    }

    fn components(&self, weak: bool) -> usize {
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for &start in &self.cells {
            if !seen.insert(start) {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                let neighbours: &[Cell] = if weak {
                    &c.vertex_neighbours()
                } else {
                    &c.edge_neighbours()
                };
                for &n in neighbours {
                    if self.contains(n) && seen.insert(n) {
                        stack.push(n);
                    }
                }
            }
        }
        count
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.components(true) == 1
    }

    /// Every run of cells along one line has no gaps.
    fn lines_convex(&self, by_row: bool) -> bool {
        let mut lines: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for c in &self.cells {
            let p = c.lower_left();
            let (key, pos) = if by_row { (p.j, p.i) } else { (p.i, p.j) };
            lines.entry(key).or_default().push(pos);
        }
        lines.values().all(|v| {
            let (min, max) = (v.iter().min().unwrap(), v.iter().max().unwrap());
            (max - min + 1) as usize == v.len()
        })
    }

    pub fn classify(&self) -> Classification {
        let component_count = self.components(false);
        let weakly_connected = self.is_weakly_connected();
        let row_convex = self.lines_convex(true);
        let column_convex = self.lines_convex(false);
        let hole_count = self.detect_holes().len();
        Classification {
            is_polyomino: component_count == 1,
            weakly_connected,
            row_convex,
            column_convex,
            convex: row_convex && column_convex,
            simple: hole_count == 0,
            hole_count,
            component_count,
        }
    }
}
