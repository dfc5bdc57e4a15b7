//! Building polygons back from rectangles.

use std::collections::{BTreeMap, HashMap};

use crate::error::PolygonError;
use crate::polygon::{OrthoPolygon, Point};

/// Closed axis-aligned rectangle `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub x0: i64,
    pub x1: i64,
    pub y0: i64,
    pub y1: i64,
}

impl Rect {
    pub const fn new(x0: i64, x1: i64, y0: i64, y1: i64) -> Self {
        Rect { x0, x1, y0, y1 }
    }

    pub fn area(&self) -> i128 {
        (self.x1 - self.x0) as i128 * (self.y1 - self.y0) as i128
    }

    pub fn contains(&self, p: Point) -> bool {
        self.x0 <= p.x && p.x <= self.x1 && self.y0 <= p.y && p.y <= self.y1
    }
}

/// Polygon of an x-monotone run of rectangles given left to right, where each
/// rectangle starts at the previous one's right edge. Linear time.
pub fn polygon_from_profile(rects: &[Rect]) -> Result<OrthoPolygon, PolygonError> {
    let Some(first) = rects.first() else {
        return Err(PolygonError::TooFewVertices { count: 0 });
    };
    let last = rects[rects.len() - 1];
    let mut ring = Vec::with_capacity(2 * rects.len() + 2);
    ring.push(Point::new(first.x0, first.y0));
    for w in rects.windows(2) {
        if w[0].y0 != w[1].y0 {
            ring.push(Point::new(w[0].x1, w[0].y0));
            ring.push(Point::new(w[0].x1, w[1].y0));
        }
    }
    ring.push(Point::new(last.x1, last.y0));
    ring.push(Point::new(last.x1, last.y1));
    for w in rects.windows(2).rev() {
        if w[0].y1 != w[1].y1 {
            ring.push(Point::new(w[0].x1, w[1].y1));
            ring.push(Point::new(w[0].x1, w[0].y1));
        }
    }
    ring.push(Point::new(first.x0, first.y1));
    OrthoPolygon::new(&ring)
}

/// Boundary of a union of interior-disjoint rectangles whose union is a
/// simple polygon. Shared edge pieces cancel; the rest is chained into one
/// counter-clockwise ring.
pub fn polygon_from_rects(rects: &[Rect]) -> Result<OrthoPolygon, PolygonError> {
    // line coordinate -> list of (lo, hi, +1 forward / -1 backward)
    let mut horizontal: BTreeMap<i64, Vec<(i64, i64, i32)>> = BTreeMap::new();
    let mut vertical: BTreeMap<i64, Vec<(i64, i64, i32)>> = BTreeMap::new();
    for r in rects {
        horizontal.entry(r.y0).or_default().push((r.x0, r.x1, 1));
        horizontal.entry(r.y1).or_default().push((r.x0, r.x1, -1));
        vertical.entry(r.x1).or_default().push((r.y0, r.y1, 1));
        vertical.entry(r.x0).or_default().push((r.y0, r.y1, -1));
    }

    let mut next: HashMap<Point, Point> = HashMap::new();
    let mut add = |a: Point, b: Point| next.insert(a, b).is_none();
    let mut ok = true;
    for (&y, pieces) in &horizontal {
        for (lo, hi, sign) in net_pieces(pieces) {
            ok &= if sign > 0 {
                add(Point::new(lo, y), Point::new(hi, y))
            } else {
                add(Point::new(hi, y), Point::new(lo, y))
            };
        }
    }
    for (&x, pieces) in &vertical {
        for (lo, hi, sign) in net_pieces(pieces) {
            ok &= if sign > 0 {
                add(Point::new(x, lo), Point::new(x, hi))
            } else {
                add(Point::new(x, hi), Point::new(x, lo))
            };
        }
    }
    let total = next.len();
    let Some(&start) = next.keys().min() else {
        return Err(PolygonError::TooFewVertices { count: 0 });
    };
    let mut ring = Vec::with_capacity(total);
    let mut cur = start;
    loop {
        ring.push(cur);
        match next.get(&cur) {
            Some(&n) if n != start && ring.len() < total => cur = n,
            _ => break,
        }
    }
    if !ok || ring.len() != total {
        // Several rings or a pinch vertex: not a simple polygon.
        return Err(PolygonError::SelfIntersection { index: 0, other: ring.len() });
    }
    OrthoPolygon::new(&ring)
}

/// Maximal pieces of a line whose net orientation is ±1, merged when collinear.
fn net_pieces(pieces: &[(i64, i64, i32)]) -> Vec<(i64, i64, i32)> {
    let mut events: BTreeMap<i64, i32> = BTreeMap::new();
    for &(lo, hi, s) in pieces {
        *events.entry(lo).or_default() += s;
        *events.entry(hi).or_default() -= s;
    }
    let mut out: Vec<(i64, i64, i32)> = Vec::new();
    let mut level = 0;
    let mut prev: Option<i64> = None;
    for (&x, &d) in &events {
        if let Some(px) = prev {
            if level != 0 {
                match out.last_mut() {
                    Some(last) if last.1 == px && last.2 == level => last.1 = x,
                    _ => out.push((px, x, level)),
                }
            }
        }
        level += d;
        prev = Some(x);
    }
    out
}
