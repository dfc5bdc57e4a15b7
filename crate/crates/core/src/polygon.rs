//! Validated orthogonal polygons with integer vertices.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PolygonError;

/// Largest coordinate magnitude accepted by [`OrthoPolygon::new`]. Keeps every
/// product used by the exact predicates comfortably inside `i128`.
pub const COORD_LIMIT: i64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A directed boundary edge, from vertex `id` to vertex `id + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub start: Point,
    pub end: Point,
}

impl Edge {
    pub fn is_horizontal(&self) -> bool {
        self.start.y == self.end.y
    }

    pub fn is_vertical(&self) -> bool {
        self.start.x == self.end.x
    }

    pub fn x_range(&self) -> (i64, i64) {
        (self.start.x.min(self.end.x), self.start.x.max(self.end.x))
    }

    pub fn y_range(&self) -> (i64, i64) {
        (self.start.y.min(self.end.y), self.start.y.max(self.end.y))
    }

    pub fn length(&self) -> i64 {
        (self.end.x - self.start.x).abs() + (self.end.y - self.start.y).abs()
    }
}

/// A simple orthogonal polygon, stored counter-clockwise.
///
/// Consecutive edges alternate between horizontal and vertical, no edge has
/// zero length and the boundary does not touch itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthoPolygon {
    vertices: Vec<Point>,
}

impl OrthoPolygon {
    /// Validates a raw vertex ring. A repeated closing vertex is dropped and a
    /// clockwise ring is reversed.
    pub fn new<P: Into<Point> + Copy>(raw: &[P]) -> Result<Self, PolygonError> {
        let mut vertices: Vec<Point> = raw.iter().map(|&p| p.into()).collect();
        if vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        validate_ring(&vertices)?;
        if signed_area2(&vertices) < 0 {
            vertices.reverse();
        }
        Ok(OrthoPolygon { vertices })
    }

    /// Wraps a ring produced by one of the crate's own constructors. The ring
    /// must already be valid and counter-clockwise.
    pub(crate) fn from_trusted(vertices: Vec<Point>) -> Self {
        debug_assert!(validate_ring(&vertices).is_ok(), "untrusted ring");
        debug_assert!(signed_area2(&vertices) > 0, "ring is not counter-clockwise");
        OrthoPolygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, id: usize) -> Edge {
        let n = self.vertices.len();
        Edge {
            id,
            start: self.vertices[id],
            end: self.vertices[(id + 1) % n],
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    /// Enclosed area. Always an integer for integer orthogonal polygons.
    pub fn area(&self) -> i128 {
        signed_area2(&self.vertices) / 2
    }

    /// `(min, max)` corners of the bounding box.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for p in &self.vertices {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    /// Indices of vertices with a 3π/2 interior angle.
    pub fn reflex_vertices(&self) -> Vec<usize> {
        let n = self.vertices.len();
        (0..n)
            .filter(|&i| {
                let prev = self.vertices[(i + n - 1) % n];
                let cur = self.vertices[i];
                let next = self.vertices[(i + 1) % n];
                cross(prev, cur, next) < 0
            })
            .collect()
    }

    /// Every vertical line meets the polygon in at most one segment.
    pub fn is_x_monotone(&self) -> bool {
        direction_changes(self.edges().filter(Edge::is_horizontal).map(|e| e.end.x > e.start.x)) <= 2
    }

    /// Every horizontal line meets the polygon in at most one segment.
    pub fn is_y_monotone(&self) -> bool {
        direction_changes(self.edges().filter(Edge::is_vertical).map(|e| e.end.y > e.start.y)) <= 2
    }

    pub fn is_orthoconvex(&self) -> bool {
        self.is_x_monotone() && self.is_y_monotone()
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        let vertices = self.vertices.iter().map(|p| Point::new(p.x + dx, p.y + dy)).collect();
        OrthoPolygon::from_trusted(vertices)
    }

    /// Reflection across the vertical axis `x = 0`.
    pub fn mirrored_x(&self) -> Self {
        let mut vertices: Vec<Point> = self.vertices.iter().map(|p| Point::new(-p.x, p.y)).collect();
        vertices.reverse();
        OrthoPolygon::from_trusted(vertices)
    }

    /// Reflection across the horizontal axis `y = 0`.
    pub fn mirrored_y(&self) -> Self {
        let mut vertices: Vec<Point> = self.vertices.iter().map(|p| Point::new(p.x, -p.y)).collect();
        vertices.reverse();
        OrthoPolygon::from_trusted(vertices)
    }

    /// Same ring, rotated so the lexicographically smallest vertex comes first.
    pub fn canonical(&self) -> Self {
        let start = (0..self.vertices.len()).min_by_key(|&i| self.vertices[i]).unwrap_or(0);
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(start);
        OrthoPolygon { vertices }
    }
}

pub(crate) fn cross(a: Point, b: Point, c: Point) -> i128 {
    let abx = (b.x - a.x) as i128;
    let aby = (b.y - a.y) as i128;
    let bcx = (c.x - b.x) as i128;
    let bcy = (c.y - b.y) as i128;
    abx * bcy - aby * bcx
}

pub(crate) fn signed_area2(vertices: &[Point]) -> i128 {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128
        })
        .sum()
}

/// Number of sign flips in a cyclic sequence of booleans.
fn direction_changes(dirs: impl Iterator<Item = bool>) -> usize {
    let dirs: Vec<bool> = dirs.collect();
    if dirs.is_empty() {
        return 0;
    }
    (0..dirs.len()).filter(|&i| dirs[i] != dirs[(i + 1) % dirs.len()]).count()
}

fn validate_ring(v: &[Point]) -> Result<(), PolygonError> {
    let n = v.len();
    if n < 4 {
        return Err(PolygonError::TooFewVertices { count: n });
    }
    if n % 2 == 1 {
        return Err(PolygonError::OddVertexCount { count: n });
    }
    if let Some(index) = v.iter().position(|p| p.x.abs() > COORD_LIMIT || p.y.abs() > COORD_LIMIT) {
        return Err(PolygonError::CoordinateOutOfRange { index });
    }
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        if a == b {
            return Err(PolygonError::ZeroLengthEdge { index: i });
        }
        if a.x != b.x && a.y != b.y {
            return Err(PolygonError::NonOrthogonalEdge { index: i });
        }
    }
    for i in 0..n {
        let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
        if (a.y == b.y) == (b.y == c.y) {
            return Err(PolygonError::CollinearConsecutiveEdges { index: (i + 1) % n });
        }
    }
    check_simple(v)
}

#[derive(Clone, Copy)]
struct AxisSeg {
    fixed: i64,
    lo: i64,
    hi: i64,
    id: usize,
}

/// Sweep-line simplicity test for an alternating axis-parallel ring.
/// Runs in O(n log n); adjacent edges may only meet at their shared vertex.
fn check_simple(v: &[Point]) -> Result<(), PolygonError> {
    let n = v.len();
    let mut horizontals = Vec::with_capacity(n / 2);
    let mut verticals = Vec::with_capacity(n / 2);
    for i in 0..n {
        let (a, b) = (v[i], v[(i + 1) % n]);
        if a.y == b.y {
            horizontals.push(AxisSeg { fixed: a.y, lo: a.x.min(b.x), hi: a.x.max(b.x), id: i });
        } else {
            verticals.push(AxisSeg { fixed: a.x, lo: a.y.min(b.y), hi: a.y.max(b.y), id: i });
        }
    }

    // Parallel edges on a shared line must be disjoint.
    for segs in [&mut horizontals, &mut verticals] {
        segs.sort_by_key(|s| (s.fixed, s.lo));
        for w in segs.windows(2) {
            if w[0].fixed == w[1].fixed && w[1].lo <= w[0].hi {
                return Err(PolygonError::SelfIntersection { index: w[0].id.min(w[1].id), other: w[0].id.max(w[1].id) });
            }
        }
    }

    let adjacent = |a: usize, b: usize| (a + 1) % n == b || (b + 1) % n == a;
    let mut starts: Vec<AxisSeg> = horizontals.clone();
    starts.sort_by_key(|s| s.lo);
    let mut ends: Vec<AxisSeg> = horizontals;
    ends.sort_by_key(|s| s.hi);
    verticals.sort_by_key(|s| s.fixed);

    let mut active: BTreeMap<(i64, usize), ()> = BTreeMap::new();
    let (mut si, mut ei) = (0, 0);
    for vert in &verticals {
        let x = vert.fixed;
        while si < starts.len() && starts[si].lo <= x {
            active.insert((starts[si].fixed, starts[si].id), ());
            si += 1;
        }
        while ei < ends.len() && ends[ei].hi < x {
            active.remove(&(ends[ei].fixed, ends[ei].id));
            ei += 1;
        }
        for (&(_, hid), _) in active.range((vert.lo, 0)..=(vert.hi, usize::MAX)) {
            if !adjacent(hid, vert.id) {
                return Err(PolygonError::SelfIntersection { index: hid.min(vert.id), other: hid.max(vert.id) });
            }
        }
    }
    Ok(())
}
