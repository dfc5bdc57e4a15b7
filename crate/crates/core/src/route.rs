//! Align selection, stitching, trimming and metrics for monotone polygons.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::balanced::{balanced_groups, decompose_balanced, BalancedGroup};
use crate::decomposition::{vertical_decomposition, Decomposition, PolygonClass, Slab};
use crate::error::SolveError;
use crate::polygon::{OrthoPolygon, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrimMode {
    /// Removes slabs up to and including the first extremum slab from each end.
    Paper,
    /// Removes slabs strictly before the first extremum slab from each end.
    #[default]
    Safe,
    Off,
}

impl TrimMode {
    pub fn as_str(self) -> &'static str {
        match self {
            TrimMode::Paper => "paper",
            TrimMode::Safe => "safe",
            TrimMode::Off => "off",
        }
    }
}

impl fmt::Display for TrimMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TrimMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(TrimMode::Paper),
            "safe" => Ok(TrimMode::Safe),
            "off" => Ok(TrimMode::Off),
            other => Err(format!("unknown trim mode `{other}`, expected paper, safe or off")),
        }
    }
}

/// Horizontal route segment of one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Align {
    /// 0-based group position.
    pub group: usize,
    pub y: i64,
    pub x_start: i64,
    pub x_end: i64,
}

/// Vertical route segment joining consecutive aligns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Connector {
    pub x: i64,
    pub y_from: i64,
    pub y_to: i64,
}

/// Orthogonal polyline given by its vertices. A single vertex is a point route.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Route {
    pub points: Vec<Point>,
    pub trim: TrimMode,
}

impl Route {
    pub fn point(p: Point, trim: TrimMode) -> Self {
        Route { points: vec![p], trim }
    }

    pub fn is_point(&self) -> bool {
        self.points.len() == 1
    }

    /// Consecutive vertex pairs; empty for a point route.
    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RouteMetrics {
    /// Sum of segment lengths along the traversal.
    pub length: i64,
    /// Length of the route as a point set; smaller than `length` when the
    /// traversal backtracks.
    pub point_set_length: i64,
    pub bends: usize,
    pub segment_count: usize,
}

/// One y per group: bottom of a corridor that sits above both neighbours,
/// top otherwise, with one-sided rules at the two ends.
pub fn select_align_levels(groups: &[BalancedGroup]) -> Vec<i64> {
    let k = groups.len();
    let upper = |i: usize| groups[i].upper_bound;
    (0..k)
        .map(|i| {
            let g = &groups[i];
            let take_top = if k == 1 {
                false
            } else if i == 0 {
                upper(0) < upper(1)
            } else if i == k - 1 {
                upper(i) < upper(i - 1)
            } else {
                !(upper(i - 1) < upper(i) && upper(i) > upper(i + 1))
            };
            if take_top {
                g.upper_bound
            } else {
                g.lower_bound
            }
        })
        .collect()
}

pub fn aligns_and_connectors(
    groups: &[BalancedGroup],
    levels: &[i64],
) -> Result<(Vec<Align>, Vec<Connector>), SolveError> {
    if groups.len() != levels.len() {
        return Err(SolveError::LevelCountMismatch { groups: groups.len(), levels: levels.len() });
    }
    for (i, (g, &y)) in groups.iter().zip(levels).enumerate() {
        if !g.contains_level(y) {
            return Err(SolveError::LevelOutOfCorridor { group: i, level: y });
        }
    }
    let aligns = groups
        .iter()
        .zip(levels)
        .enumerate()
        .map(|(i, (g, &y))| Align { group: i, y, x_start: g.x_left, x_end: g.x_right })
        .collect();
    let connectors = groups
        .windows(2)
        .zip(levels.windows(2))
        .map(|(g, y)| Connector { x: g[0].x_right, y_from: y[0], y_to: y[1] })
        .collect();
    Ok((aligns, connectors))
}

/// Joins the aligns at the given levels with vertical connectors on the
/// shared group boundaries.
pub fn stitch_route(groups: &[BalancedGroup], levels: &[i64]) -> Result<Route, SolveError> {
    let (aligns, _) = aligns_and_connectors(groups, levels)?;
    let mut points = Vec::with_capacity(2 * aligns.len());
    for a in &aligns {
        points.push(Point::new(a.x_start, a.y));
        points.push(Point::new(a.x_end, a.y));
    }
    Ok(Route { points: normalize(points), trim: TrimMode::Off })
}

/// Total vertical length of the connectors between consecutive levels.
pub fn connector_length(levels: &[i64]) -> i64 {
    levels.windows(2).map(|w| (w[1] - w[0]).abs()).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Extremum {
    Max,
    Min,
}

/// Flags slabs whose upper edge is a local maximum or whose lower edge is a
/// local minimum. Slabs sharing one polygon edge are compared as one unit,
/// against the neighbouring units only; the ends compare one-sidedly.
#[cfg(test)]
pub(crate) fn extremum_slabs(slabs: &[Slab]) -> Vec<bool> {
    let mut flags = vec![false; slabs.len()];
    mark_runs(slabs, |s| (s.upper_edge, s.upper), Extremum::Max, &mut flags);
    mark_runs(slabs, |s| (s.lower_edge, s.lower), Extremum::Min, &mut flags);
    flags
}

#[cfg(test)]
fn mark_runs(slabs: &[Slab], key: impl Fn(&Slab) -> (usize, i64), kind: Extremum, flags: &mut [bool]) {
    // (start, end exclusive, y)
    let mut runs: Vec<(usize, usize, i64)> = Vec::new();
    for (i, s) in slabs.iter().enumerate() {
        let (edge, y) = key(s);
        match runs.last_mut() {
            Some(r) if key(&slabs[r.0]).0 == edge => r.1 = i + 1,
            _ => runs.push((i, i + 1, y)),
        }
    }
    let beats = |a: i64, b: i64| match kind {
        Extremum::Max => a >= b,
        Extremum::Min => a <= b,
    };
    for (j, &(lo, hi, y)) in runs.iter().enumerate() {
        let left_ok = j == 0 || beats(y, runs[j - 1].2);
        let right_ok = j + 1 == runs.len() || beats(y, runs[j + 1].2);
        if left_ok && right_ok {
            flags[lo..hi].iter_mut().for_each(|f| *f = true);
        }
    }
}

/// Position of the first extremum run met when walking `order`, reported by
/// the first slab of that run along the walk. Stops at the first hit.
fn first_extremum(
    slabs: &[Slab],
    order: impl Iterator<Item = usize>,
    key: impl Fn(&Slab) -> (usize, i64),
    kind: Extremum,
) -> Option<usize> {
    let beats = |a: i64, b: i64| match kind {
        Extremum::Max => a >= b,
        Extremum::Min => a <= b,
    };
    let mut prev: Option<i64> = None;
    // (first position along the walk, edge, y)
    let mut cur: Option<(usize, usize, i64)> = None;
    for i in order {
        let (edge, y) = key(&slabs[i]);
        match cur {
            Some((_, e, _)) if e == edge => {}
            Some((start, _, cy)) => {
                if prev.is_none_or(|p| beats(cy, p)) && beats(cy, y) {
                    return Some(start);
                }
                prev = Some(cy);
                cur = Some((i, edge, y));
            }
            None => cur = Some((i, edge, y)),
        }
    }
    let (start, _, cy) = cur?;
    prev.is_none_or(|p| beats(cy, p)).then_some(start)
}

fn upper_key(s: &Slab) -> (usize, i64) {
    (s.upper_edge, s.upper)
}

fn lower_key(s: &Slab) -> (usize, i64) {
    (s.lower_edge, s.lower)
}

/// Left end of the surviving x-interval after trimming from the left. Safe
/// mode never cuts past the first group.
pub(crate) fn left_cut(slabs: &[Slab], groups: &[BalancedGroup], mode: TrimMode) -> i64 {
    if mode == TrimMode::Off {
        return slabs[0].x_left;
    }
    let m = slabs.len();
    let i = [
        first_extremum(slabs, 0..m, upper_key, Extremum::Max),
        first_extremum(slabs, 0..m, lower_key, Extremum::Min),
    ]
    .into_iter()
    .flatten()
    .min()
    .unwrap_or(0);
    match mode {
        TrimMode::Paper => slabs[i].x_right,
        _ => slabs[i].x_left.min(groups[0].x_right),
    }
}

/// Right end of the surviving x-interval after trimming from the right. Safe
/// mode never cuts past the last group.
pub(crate) fn right_cut(slabs: &[Slab], groups: &[BalancedGroup], mode: TrimMode) -> i64 {
    let m = slabs.len();
    if mode == TrimMode::Off {
        return slabs[m - 1].x_right;
    }
    let i = [
        first_extremum(slabs, (0..m).rev(), upper_key, Extremum::Max),
        first_extremum(slabs, (0..m).rev(), lower_key, Extremum::Min),
    ]
    .into_iter()
    .flatten()
    .max()
    .unwrap_or(m - 1);
    match mode {
        TrimMode::Paper => slabs[i].x_left,
        _ => slabs[i].x_right.max(groups[groups.len() - 1].x_left),
    }
}

/// `[x_L, x_R]` kept by the trim. With `x_L >= x_R` the route collapses.
pub fn trim_interval(slabs: &[Slab], mode: TrimMode) -> (i64, i64) {
    let groups = balanced_groups(slabs);
    (left_cut(slabs, &groups, mode), right_cut(slabs, &groups, mode))
}

/// Clips a route stitched over `d` to the trim interval.
pub fn trim_route(route: &Route, d: &Decomposition, mode: TrimMode) -> Route {
    trim_grouped(route, d.slabs(), &balanced_groups(d.slabs()), mode)
}

fn trim_grouped(route: &Route, slabs: &[Slab], groups: &[BalancedGroup], mode: TrimMode) -> Route {
    if mode == TrimMode::Off || slabs.is_empty() {
        return Route { points: route.points.clone(), trim: mode };
    }
    let (lo, hi) = (left_cut(slabs, groups, mode), right_cut(slabs, groups, mode));
    Route { points: clip_x(&route.points, lo, hi), trim: mode }
}

/// Keeps the part of a polyline with `lo <= x <= hi`, given a polyline whose x
/// never decreases along the traversal. An empty or inverted window collapses
/// the route to its first point at `x = hi`.
pub(crate) fn clip_x(points: &[Point], lo: i64, hi: i64) -> Vec<Point> {
    if lo >= hi {
        return vec![point_at_x(points, hi)];
    }
    let mut out = Vec::with_capacity(points.len());
    if points.len() == 1 {
        let p = points[0];
        return vec![Point::new(p.x.clamp(lo, hi), p.y)];
    }
    for w in points.windows(2) {
        let (p, q) = (w[0], w[1]);
        if p.y == q.y {
            let (a, b) = (p.x.min(q.x).max(lo), p.x.max(q.x).min(hi));
            if a <= b {
                if p.x <= q.x {
                    out.extend([Point::new(a, p.y), Point::new(b, p.y)]);
                } else {
                    out.extend([Point::new(b, p.y), Point::new(a, p.y)]);
                }
            }
        } else if lo <= p.x && p.x <= hi {
            out.extend([p, q]);
        }
    }
    if out.is_empty() {
        out.push(point_at_x(points, hi));
    }
    normalize(out)
}

/// First point of the traversal lying on the vertical line at `x`, or the
/// nearest route end if the route does not reach it.
pub(crate) fn point_at_x(points: &[Point], x: i64) -> Point {
    for w in points.windows(2) {
        let (a, b) = (w[0].x.min(w[1].x), w[0].x.max(w[1].x));
        if a <= x && x <= b {
            return Point::new(x, w[0].y);
        }
    }
    let first = points[0];
    let last = points[points.len() - 1];
    if (x - first.x).abs() <= (x - last.x).abs() {
        first
    } else {
        last
    }
}

/// Drops repeated vertices and merges consecutive collinear segments running
/// the same way. A reversal keeps its vertex.
pub fn normalize(points: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if out.last() == Some(&p) {
            continue;
        }
        if out.len() >= 2 {
            let a = out[out.len() - 2];
            let b = out[out.len() - 1];
            let d1 = ((b.x - a.x).signum(), (b.y - a.y).signum());
            let d2 = ((p.x - b.x).signum(), (p.y - b.y).signum());
            if d1 == d2 {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

pub fn route_metrics(route: &Route) -> RouteMetrics {
    let pts = normalize(route.points.clone());
    let length = pts.windows(2).map(|w| (w[1].x - w[0].x).abs() + (w[1].y - w[0].y).abs()).sum();
    RouteMetrics {
        length,
        point_set_length: point_set_length(&pts),
        bends: pts.len().saturating_sub(2),
        segment_count: pts.len().saturating_sub(1),
    }
}

fn point_set_length(pts: &[Point]) -> i64 {
    // (is_vertical, line coordinate) -> intervals along the line
    let mut lines: BTreeMap<(bool, i64), Vec<(i64, i64)>> = BTreeMap::new();
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a.y == b.y {
            lines.entry((false, a.y)).or_default().push((a.x.min(b.x), a.x.max(b.x)));
        } else {
            lines.entry((true, a.x)).or_default().push((a.y.min(b.y), a.y.max(b.y)));
        }
    }
    let mut total = 0;
    for mut iv in lines.into_values() {
        iv.sort_unstable();
        let (mut lo, mut hi) = iv[0];
        for &(a, b) in &iv[1..] {
            if a > hi {
                total += hi - lo;
                lo = a;
            }
            hi = hi.max(b);
        }
        total += hi - lo;
    }
    total
}

/// Intermediate products of the monotone pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneSolution {
    pub decomposition: Decomposition,
    pub groups: Vec<BalancedGroup>,
    pub levels: Vec<i64>,
    pub untrimmed: Route,
    pub route: Route,
}

pub fn solve_monotone_detailed(p: &OrthoPolygon, trim: TrimMode) -> Result<MonotoneSolution, SolveError> {
    let decomposition = vertical_decomposition(p);
    if decomposition.class() != PolygonClass::Monotone {
        return Err(SolveError::NotMonotone);
    }
    solve_decomposed(decomposition, trim)
}

pub(crate) fn solve_decomposed(decomposition: Decomposition, trim: TrimMode) -> Result<MonotoneSolution, SolveError> {
    let groups = decompose_balanced(&decomposition)?;
    let levels = select_align_levels(&groups);
    let untrimmed = stitch_route(&groups, &levels)?;
    let route = trim_grouped(&untrimmed, decomposition.slabs(), &groups, trim);
    Ok(MonotoneSolution { decomposition, groups, levels, untrimmed, route })
}

/// Decompose, select levels, stitch, trim.
pub fn solve_monotone(p: &OrthoPolygon, trim: TrimMode) -> Result<Route, SolveError> {
    solve_monotone_detailed(p, trim).map(|s| s.route)
}
