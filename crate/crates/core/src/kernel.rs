//! Kernel of an orthoconvex polygon.

use serde::{Deserialize, Serialize};

use crate::error::SolveError;
use crate::polygon::{OrthoPolygon, Point};

/// Closed, possibly degenerate, axis-aligned rectangle of points that see the
/// whole polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KernelRect {
    pub x_low: i64,
    pub x_high: i64,
    pub y_low: i64,
    pub y_high: i64,
}

impl KernelRect {
    pub fn contains(&self, p: Point) -> bool {
        self.x_low <= p.x && p.x <= self.x_high && self.y_low <= p.y && p.y <= self.y_high
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x_low, self.y_low),
            Point::new(self.x_high, self.y_low),
            Point::new(self.x_high, self.y_high),
            Point::new(self.x_low, self.y_high),
        ]
    }

    /// Horizontal witness: the full-width segment at the lowest kernel level.
    pub fn horizontal_witness(&self, p: &OrthoPolygon) -> (Point, Point) {
        let (lo, hi) = p.bounding_box();
        (Point::new(lo.x, self.y_low), Point::new(hi.x, self.y_low))
    }

    /// Vertical witness: the full-height segment at the leftmost kernel x.
    pub fn vertical_witness(&self, p: &OrthoPolygon) -> (Point, Point) {
        let (lo, hi) = p.bounding_box();
        (Point::new(self.x_low, lo.y), Point::new(self.x_low, hi.y))
    }
}

/// Intersects the inner half-planes of both edges at every reflex corner with
/// the bounding box.
pub fn orthoconvex_kernel(p: &OrthoPolygon) -> Result<KernelRect, SolveError> {
    if !p.is_orthoconvex() {
        return Err(SolveError::NotOrthoconvex);
    }
    let (lo, hi) = p.bounding_box();
    let mut k = KernelRect { x_low: lo.x, x_high: hi.x, y_low: lo.y, y_high: hi.y };
    let n = p.len();
    for v in p.reflex_vertices() {
        for e in [p.edge((v + n - 1) % n), p.edge(v)] {
            // Counter-clockwise ring: the interior lies left of each edge.
            if e.is_horizontal() {
                if e.end.x > e.start.x {
                    k.y_low = k.y_low.max(e.start.y);
                } else {
                    k.y_high = k.y_high.min(e.start.y);
                }
            } else if e.end.y > e.start.y {
                k.x_high = k.x_high.min(e.start.x);
            } else {
                k.x_low = k.x_low.max(e.start.x);
            }
        }
    }
    if k.x_low > k.x_high || k.y_low > k.y_high {
        return Err(SolveError::EmptyKernel);
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn convex_kernel_is_whole_rectangle() {
        let k = orthoconvex_kernel(&fixtures::rectangle()).unwrap();
        assert_eq!(k, KernelRect { x_low: 0, x_high: 4, y_low: 0, y_high: 2 });
    }

    #[test]
    fn l_shape_kernel() {
        let k = orthoconvex_kernel(&fixtures::l_shape()).unwrap();
        assert_eq!(k, KernelRect { x_low: 0, x_high: 2, y_low: 0, y_high: 2 });
    }

    #[test]
    fn plus_sign_kernel_is_centre() {
        let k = orthoconvex_kernel(&fixtures::plus_sign()).unwrap();
        assert_eq!(k, KernelRect { x_low: 1, x_high: 2, y_low: 1, y_high: 2 });
    }

    #[test]
    fn non_orthoconvex_is_rejected() {
        assert_eq!(orthoconvex_kernel(&fixtures::sideways_u()), Err(SolveError::NotOrthoconvex));
        assert_eq!(orthoconvex_kernel(&fixtures::upright_u()), Err(SolveError::NotOrthoconvex));
    }

    #[test]
    fn staggered_staircase_has_no_kernel() {
        // Orthoconvex, but the leftmost and rightmost edges share no y.
        let p = OrthoPolygon::new(&[(0, 4), (2, 4), (2, 0), (6, 0), (6, 1), (3, 1), (3, 5), (0, 5)]).unwrap();
        assert!(p.is_orthoconvex());
        assert_eq!(orthoconvex_kernel(&p), Err(SolveError::EmptyKernel));
    }
}
