//! Ground truth for routes: exact containment and visibility, sampled
//! coverage, and a small exhaustive search for the fewest bends.
//!
//! Nothing here trusts the route pipeline. The only shared piece is the slab
//! decomposition, and every slab is re-certified with the exact segment test
//! before it is used as a shortcut.

mod brute;
mod coverage;
mod weak;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construct::Rect;
use crate::decomposition::vertical_decomposition;
use crate::polygon::{OrthoPolygon, Point};

pub use brute::{brute_force_min_bends, brute_force_route, MinBends, BRUTE_FORCE_SLAB_LIMIT};
pub use coverage::{coverage_check, CoverageReport};
pub use weak::weakly_visible_axis;

/// Point with rational coordinates `x / den`, `y / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RatPoint {
    pub x: i64,
    pub y: i64,
    pub den: i64,
}

impl RatPoint {
    pub fn new(x: i64, y: i64, den: i64) -> Self {
        assert!(den > 0, "denominator must be positive");
        RatPoint { x, y, den }
    }

    fn at(self, den: i64) -> (i64, i64) {
        debug_assert_eq!(den % self.den, 0);
        let f = den / self.den;
        (self.x * f, self.y * f)
    }
}

impl From<Point> for RatPoint {
    fn from(p: Point) -> Self {
        RatPoint { x: p.x, y: p.y, den: 1 }
    }
}

impl From<(i64, i64)> for RatPoint {
    fn from((x, y): (i64, i64)) -> Self {
        RatPoint { x, y, den: 1 }
    }
}

/// Positive rational sampling step `num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Step {
    pub num: i64,
    pub den: i64,
}

impl Step {
    pub const HALF: Step = Step { num: 1, den: 2 };

    pub fn new(num: i64, den: i64) -> Self {
        Step { num, den }
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0 && self.den > 0
    }
}

impl Default for Step {
    fn default() -> Self {
        Step::HALF
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Step {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid step `{s}`, expected an integer or a fraction like 1/2");
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Ok(Step { num, den })
    }
}

impl From<Step> for String {
    fn from(s: Step) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Step {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

type P2 = (i64, i64);

fn cross(a: P2, b: P2, c: P2) -> i128 {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

fn within(a: i64, b: i64, v: i64) -> bool {
    a.min(b) <= v && v <= a.max(b)
}

/// The polygon scaled by an integer factor, queried with integer points.
#[derive(Clone, Copy)]
pub(crate) struct Exact<'a> {
    v: &'a [Point],
    s: i64,
}

impl<'a> Exact<'a> {
    pub(crate) fn new(p: &'a OrthoPolygon, scale: i64) -> Self {
        Exact { v: p.vertices(), s: scale }
    }

    fn edges(&self) -> impl Iterator<Item = (P2, P2)> + '_ {
        let n = self.v.len();
        let s = self.s;
        (0..n).map(move |i| {
            let (a, b) = (self.v[i], self.v[(i + 1) % n]);
            ((a.x * s, a.y * s), (b.x * s, b.y * s))
        })
    }

    /// Closed containment: boundary points count as inside.
    pub(crate) fn point_in_closed(&self, q: P2) -> bool {
        let mut inside = false;
        for (c, d) in self.edges() {
            if c.1 == d.1 {
                if q.1 == c.1 && within(c.0, d.0, q.0) {
                    return true;
                }
            } else {
                if q.0 == c.0 && within(c.1, d.1, q.1) {
                    return true;
                }
                let (lo, hi) = (c.1.min(d.1), c.1.max(d.1));
                if c.0 > q.0 && lo <= q.1 && q.1 < hi {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Whether the closed segment `ab` lies in the closed polygon.
    pub(crate) fn segment_inside(&self, a: P2, b: P2) -> bool {
        if !self.point_in_closed(a) || !self.point_in_closed(b) {
            return false;
        }
        if a == b {
            return true;
        }
        let by_x = (b.0 - a.0).abs() >= (b.1 - a.1).abs();
        let key = |p: &P2| if by_x { p.0 } else { p.1 };
        let mut touches = vec![a, b];
        for (c, d) in self.edges() {
            let (o1, o2) = (cross(a, b, c), cross(a, b, d));
            let (o3, o4) = (cross(c, d, a), cross(c, d, b));
            if o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0 {
                return false;
            }
            for (o, e) in [(o1, c), (o2, d)] {
                if o == 0 && within(a.0, b.0, e.0) && within(a.1, b.1, e.1) {
                    touches.push(e);
                }
            }
        }
        touches.sort_unstable_by_key(key);
        touches.dedup();
        // Between consecutive touch points the segment meets no edge, so one
        // midpoint decides the whole open piece.
        let twice = Exact { v: self.v, s: 2 * self.s };
        touches.windows(2).all(|w| twice.point_in_closed((w[0].0 + w[1].0, w[0].1 + w[1].1)))
    }
}

fn common_den(a: RatPoint, b: RatPoint) -> i64 {
    let g = gcd(a.den, b.den);
    a.den / g * b.den
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Closed containment of a rational point.
pub fn point_in_polygon(p: &OrthoPolygon, q: RatPoint) -> bool {
    Exact::new(p, q.den).point_in_closed((q.x, q.y))
}

/// Whether the closed segment `ab` lies in the closed polygon. Exact.
pub fn segment_inside(p: &OrthoPolygon, a: impl Into<RatPoint>, b: impl Into<RatPoint>) -> bool {
    let (a, b) = (a.into(), b.into());
    let den = common_den(a, b);
    Exact::new(p, den).segment_inside(a.at(den), b.at(den))
}

/// Straight-line visibility in the closed polygon; grazing the boundary is
/// allowed.
pub fn sees(p: &OrthoPolygon, a: impl Into<RatPoint>, b: impl Into<RatPoint>) -> bool {
    segment_inside(p, a, b)
}

/// Slab rectangles whose four sides pass the exact segment test, scaled by
/// `den`. Two points of one certified rectangle see each other.
pub(crate) fn certified_rects(p: &OrthoPolygon, den: i64) -> Vec<Rect> {
    let ex = Exact::new(p, 1);
    vertical_decomposition(p)
        .slabs()
        .iter()
        .map(|s| s.rect())
        .filter(|r| {
            let c = [(r.x0, r.y0), (r.x1, r.y0), (r.x1, r.y1), (r.x0, r.y1)];
            (0..4).all(|i| ex.segment_inside(c[i], c[(i + 1) % 4]))
        })
        .map(|r| Rect::new(r.x0 * den, r.x1 * den, r.y0 * den, r.y1 * den))
        .collect()
}

/// Grid points `k * step` inside the closed polygon, as numerators over
/// `step.den`, sorted.
pub(crate) fn sample_grid(p: &OrthoPolygon, step: Step) -> Vec<P2> {
    let (lo, hi) = p.bounding_box();
    let ex = Exact::new(p, step.den);
    let first = |v: i64| (v * step.den).div_euclid(step.num) * step.num;
    let mut out = Vec::new();
    let mut x = first(lo.x);
    while x <= hi.x * step.den {
        let mut y = first(lo.y);
        while y <= hi.y * step.den {
            if ex.point_in_closed((x, y)) {
                out.push((x, y));
            }
            y += step.num;
        }
        x += step.num;
    }
    out
}
