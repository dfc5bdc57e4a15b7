use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{certified_rects, sample_grid, Exact, Step, P2};
use crate::construct::Rect;
use crate::error::OracleError;
use crate::polygon::{OrthoPolygon, Point};
use crate::route::Route;

/// Sampled coverage verdict. Coordinates are numerators over `denominator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub sample_resolution: Step,
    pub denominator: i64,
    pub samples_total: usize,
    pub samples_covered: usize,
    pub uncovered: Vec<[i64; 2]>,
}

impl CoverageReport {
    pub fn is_full(&self) -> bool {
        self.samples_covered == self.samples_total
    }

    pub fn ratio(&self) -> f64 {
        if self.samples_total == 0 {
            1.0
        } else {
            self.samples_covered as f64 / self.samples_total as f64
        }
    }
}

/// Route vertices plus points every `step` along each segment, as numerators
/// over `step.den`.
pub(crate) fn route_samples(points: &[Point], step: Step) -> Vec<P2> {
    let d = step.den;
    let mut out: Vec<P2> = points.iter().map(|p| (p.x * d, p.y * d)).collect();
    for w in points.windows(2) {
        let (a, b) = ((w[0].x * d, w[0].y * d), (w[1].x * d, w[1].y * d));
        let dir = ((b.0 - a.0).signum(), (b.1 - a.1).signum());
        let len = (b.0 - a.0).abs() + (b.1 - a.1).abs();
        let mut t = step.num;
        while t < len {
            out.push((a.0 + dir.0 * t, a.1 + dir.1 * t));
            t += step.num;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn contains(r: &Rect, q: P2) -> bool {
    r.x0 <= q.0 && q.0 <= r.x1 && r.y0 <= q.1 && q.1 <= r.y1
}

/// Samples the closed polygon on the lattice of `step` and checks that every
/// sample sees some sample of the route. An uncovered sample is a real gap;
/// full coverage is evidence at that resolution, not a proof.
pub fn coverage_check(p: &OrthoPolygon, route: &Route, step: Step) -> Result<CoverageReport, OracleError> {
    if !step.is_positive() {
        return Err(OracleError::StepNonPositive);
    }
    let samples = sample_grid(p, step);
    let watch = route_samples(&route.points, step);
    let rects = certified_rects(p, step.den);
    let lit: Vec<&Rect> = rects.iter().filter(|r| watch.iter().any(|&w| contains(r, w))).collect();
    let ex = Exact::new(p, step.den);

    let mut uncovered: Vec<[i64; 2]> = samples
        .par_iter()
        .filter(|&&s| {
            if lit.iter().any(|r| contains(r, s)) {
                return false;
            }
            !sees_any(&ex, s, &watch)
        })
        .map(|&(x, y)| [x, y])
        .collect();
    uncovered.sort_unstable();
    Ok(CoverageReport {
        sample_resolution: step,
        denominator: step.den,
        samples_total: samples.len(),
        samples_covered: samples.len() - uncovered.len(),
        uncovered,
    })
}

/// Tries watch points outward from the sample's x, nearest first.
fn sees_any(ex: &Exact<'_>, s: P2, watch: &[P2]) -> bool {
    let mid = watch.partition_point(|w| w.0 < s.0);
    let (mut l, mut r) = (mid, mid);
    while l > 0 || r < watch.len() {
        let take_left = r == watch.len() || (l > 0 && s.0 - watch[l - 1].0 <= watch[r].0 - s.0);
        let w = if take_left {
            l -= 1;
            watch[l]
        } else {
            r += 1;
            watch[r - 1]
        };
        if ex.segment_inside(s, w) {
            return true;
        }
    }
    false
}
