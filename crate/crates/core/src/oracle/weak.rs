use std::collections::BTreeSet;

use super::Exact;
use crate::error::OracleError;
use crate::polygon::{OrthoPolygon, Point};

/// Whether some axis-parallel segment inside the polygon joins a point of
/// `s1` to a point of `s2`. Both inputs must be axis-parallel segments in the
/// closed polygon.
pub fn weakly_visible_axis(p: &OrthoPolygon, s1: (Point, Point), s2: (Point, Point)) -> Result<bool, OracleError> {
    let ex = Exact::new(p, 2);
    let dbl = |q: Point| (2 * q.x, 2 * q.y);
    for s in [s1, s2] {
        if !ex.segment_inside(dbl(s.0), dbl(s.1)) {
            return Err(OracleError::SegmentOutsidePolygon);
        }
    }
    let xs: Vec<i64> = p.vertices().iter().map(|v| v.x).collect();
    let ys: Vec<i64> = p.vertices().iter().map(|v| v.y).collect();
    Ok(probe(&ex, s1, s2, &xs, false) || probe(&ex, s1, s2, &ys, true))
}

/// Vertical probes, or horizontal ones with `swap`. Internally a point is
/// (probe coordinate, coordinate along the probe).
fn probe(ex: &Exact<'_>, s1: (Point, Point), s2: (Point, Point), critical: &[i64], swap: bool) -> bool {
    let axes = |q: Point| if swap { (q.y, q.x) } else { (q.x, q.y) };
    let span = |s: (Point, Point)| {
        let (a, b) = (axes(s.0), axes(s.1));
        ((a.0.min(b.0), a.0.max(b.0)), (a, b))
    };
    let ((lo1, hi1), seg1) = span(s1);
    let ((lo2, hi2), seg2) = span(s2);
    let (lo, hi) = (lo1.max(lo2), hi1.min(hi2));
    if lo > hi {
        return false;
    }
    // Containment of the probe can only change at a vertex coordinate, so
    // testing those and the midpoints between them is exhaustive. Work in
    // doubled coordinates to reach the midpoints.
    let mut cands: BTreeSet<i64> = critical.iter().map(|&c| 2 * c).filter(|&c| 2 * lo <= c && c <= 2 * hi).collect();
    cands.insert(2 * lo);
    cands.insert(2 * hi);
    let sorted: Vec<i64> = cands.iter().copied().collect();
    for w in sorted.windows(2) {
        cands.insert((w[0] + w[1]) / 2);
    }
    let unswap = |c: i64, t: i64| if swap { (t, c) } else { (c, t) };
    cands.into_iter().any(|c| {
        let (a_lo, a_hi) = along(seg1, c);
        let (b_lo, b_hi) = along(seg2, c);
        if a_lo <= b_hi && b_lo <= a_hi {
            return true;
        }
        let (from, to) = if a_hi < b_lo { (a_hi, b_lo) } else { (b_hi, a_lo) };
        ex.segment_inside(unswap(c, from), unswap(c, to))
    })
}

/// Interval, in doubled units, covered by a segment on the probe line `c`.
fn along(seg: ((i64, i64), (i64, i64)), c: i64) -> (i64, i64) {
    let (a, b) = seg;
    if a.0 == b.0 {
        (2 * a.1.min(b.1), 2 * a.1.max(b.1))
    } else {
        debug_assert!(2 * a.0.min(b.0) <= c && c <= 2 * a.0.max(b.0));
        (2 * a.1, 2 * a.1)
    }
}
