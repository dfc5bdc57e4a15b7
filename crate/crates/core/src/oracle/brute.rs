//! Fewest bends of an orthogonal route on the vertex grid that covers every
//! half-step sample.
//!
//! Bends sit on intersections of vertex x and y lines. The two end segments
//! run as far as the polygon allows, since a longer segment sees at least as
//! much. Coverage of a segment is the union of what its half-step points see,
//! the same rule `coverage_check` applies to a route.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{certified_rects, sample_grid, Exact, Step, P2};
use crate::decomposition::vertical_decomposition;
use crate::error::OracleError;
use crate::polygon::{OrthoPolygon, Point};
use crate::route::{normalize, Route, TrimMode};

pub const BRUTE_FORCE_SLAB_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinBends {
    Exact(usize),
    /// No covering grid route within the bend cap.
    Unbounded,
}

type Bits = Vec<u64>;

fn or_into(dst: &mut Bits, src: &Bits) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d |= s);
}

fn union(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// One grid line: its inside half-step points in order, with the chord each
/// belongs to.
struct Line {
    points: Vec<P2>,
    chord: Vec<usize>,
}

struct Grid {
    lines: Vec<Line>,
    /// Visibility bitset of every inside point on a grid line.
    vis: HashMap<P2, Bits>,
    /// node -> (line index, position on line) for its vertical and horizontal line
    nodes: Vec<[(usize, usize); 2]>,
    /// line index -> node ids on it, with their positions
    on_line: Vec<Vec<(usize, usize)>>,
    full: Bits,
    seg_memo: HashMap<(usize, usize, usize), Bits>,
}

impl Grid {
    fn seg(&mut self, line: usize, i: usize, j: usize) -> Bits {
        let (i, j) = (i.min(j), i.max(j));
        if let Some(b) = self.seg_memo.get(&(line, i, j)) {
            return b.clone();
        }
        let mut acc = vec![0; self.full.len()];
        for q in &self.lines[line].points[i..=j] {
            or_into(&mut acc, &self.vis[q]);
        }
        self.seg_memo.insert((line, i, j), acc.clone());
        acc
    }

    /// From position `i` to the end of its chord, forwards or backwards.
    /// Returns the far end and the coverage.
    fn ray(&mut self, line: usize, i: usize, forward: bool) -> (P2, Bits) {
        let l = &self.lines[line];
        let c = l.chord[i];
        let mut j = i;
        if forward {
            while j + 1 < l.points.len() && l.chord[j + 1] == c {
                j += 1;
            }
        } else {
            while j > 0 && l.chord[j - 1] == c {
                j -= 1;
            }
        }
        (self.lines[line].points[j], self.seg(line, i, j))
    }

    fn node_point(&self, node: usize) -> P2 {
        let (line, i) = self.nodes[node][0];
        self.lines[line].points[i]
    }
}

/// Minimum bend count over grid routes covering every half-step sample, up to
/// `max_bends`.
pub fn brute_force_min_bends(p: &OrthoPolygon, max_bends: usize) -> Result<MinBends, OracleError> {
    Ok(match brute_force_route(p, max_bends)? {
        Some(r) => MinBends::Exact(r.points.len().saturating_sub(2)),
        None => MinBends::Unbounded,
    })
}

/// A covering grid route with the fewest bends, if one exists within
/// `max_bends`.
pub fn brute_force_route(p: &OrthoPolygon, max_bends: usize) -> Result<Option<Route>, OracleError> {
    let slabs = vertical_decomposition(p).len();
    if slabs > BRUTE_FORCE_SLAB_LIMIT {
        return Err(OracleError::TooLarge { slabs, limit: BRUTE_FORCE_SLAB_LIMIT });
    }
    let mut grid = build_grid(p);
    for b in 0..=max_bends {
        if let Some(path) = search(&mut grid, b) {
            // Chord ends and grid nodes lie on integer coordinates.
            let points = path.into_iter().map(|(x, y)| Point::new(x / 2, y / 2)).collect();
            return Ok(Some(Route { points: normalize(points), trim: TrimMode::Off }));
        }
    }
    Ok(None)
}

fn build_grid(p: &OrthoPolygon) -> Grid {
    let ex = Exact::new(p, 2);
    let samples = sample_grid(p, Step::HALF);
    let words = samples.len().div_ceil(64);
    let mut full = vec![0u64; words];
    for i in 0..samples.len() {
        full[i / 64] |= 1 << (i % 64);
    }

    let mut xs: Vec<i64> = p.vertices().iter().map(|v| v.x).collect();
    let mut ys: Vec<i64> = p.vertices().iter().map(|v| v.y).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let (lo, hi) = p.bounding_box();

    // Vertical lines first, then horizontal ones.
    let mut lines = Vec::with_capacity(xs.len() + ys.len());
    for &x in &xs {
        lines.push(line_points(&ex, (2 * lo.y..=2 * hi.y).map(|y| (2 * x, y))));
    }
    for &y in &ys {
        lines.push(line_points(&ex, (2 * lo.x..=2 * hi.x).map(|x| (x, 2 * y))));
    }

    let mut all: Vec<P2> = lines.iter().flat_map(|l| l.points.iter().copied()).collect();
    all.sort_unstable();
    all.dedup();
    let rects = certified_rects(p, 2);
    let vis: HashMap<P2, Bits> = all
        .par_iter()
        .map(|&c| {
            let mine: Vec<_> = rects.iter().filter(|r| r.x0 <= c.0 && c.0 <= r.x1 && r.y0 <= c.1 && c.1 <= r.y1).collect();
            let mut bits = vec![0u64; words];
            for (i, &s) in samples.iter().enumerate() {
                let shared = mine.iter().any(|r| r.x0 <= s.0 && s.0 <= r.x1 && r.y0 <= s.1 && s.1 <= r.y1);
                if shared || ex.segment_inside(c, s) {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            (c, bits)
        })
        .collect();

    let pos = |line: &Line, q: P2| line.points.binary_search(&q).ok();
    let mut nodes = Vec::new();
    let mut on_line = vec![Vec::new(); lines.len()];
    for (vi, &x) in xs.iter().enumerate() {
        for (hi_, &y) in ys.iter().enumerate() {
            let hl = xs.len() + hi_;
            let q = (2 * x, 2 * y);
            if let (Some(a), Some(b)) = (pos(&lines[vi], q), pos(&lines[hl], q)) {
                let id = nodes.len();
                nodes.push([(vi, a), (hl, b)]);
                on_line[vi].push((id, a));
                on_line[hl].push((id, b));
            }
        }
    }
    Grid { lines, vis, nodes, on_line, full, seg_memo: HashMap::new() }
}

fn line_points(ex: &Exact<'_>, cands: impl Iterator<Item = P2>) -> Line {
    let mut points = Vec::new();
    let mut chord = Vec::new();
    let mut id = 0;
    let mut prev_inside = false;
    for q in cands {
        let inside = ex.point_in_closed(q);
        if inside {
            // Boundary crossings on a vertex line fall on integer
            // coordinates, so a gap always drops at least one half-step point.
            if !prev_inside && !points.is_empty() {
                id += 1;
            }
            points.push(q);
            chord.push(id);
        }
        prev_inside = inside;
    }
    Line { points, chord }
}

fn search(g: &mut Grid, bends: usize) -> Option<Vec<P2>> {
    if bends == 0 {
        for line in 0..g.lines.len() {
            let starts: Vec<usize> = {
                let l = &g.lines[line];
                (0..l.points.len()).filter(|&i| i == 0 || l.chord[i] != l.chord[i - 1]).collect()
            };
            for start in starts {
                let (end, cov) = g.ray(line, start, true);
                if cov == g.full {
                    return Some(vec![g.lines[line].points[start], end]);
                }
            }
        }
        return None;
    }
    let mut memo: HashMap<(usize, usize), Vec<(usize, Bits)>> = HashMap::new();
    let mut path = Vec::with_capacity(bends + 2);
    for node in 0..g.nodes.len() {
        for o in 0..2 {
            let (line, i) = g.nodes[node][o];
            for forward in [false, true] {
                let (end, cov) = g.ray(line, i, forward);
                path.clear();
                path.extend([end, g.node_point(node)]);
                if extend(g, &mut memo, &mut path, node, 1 - o, bends - 1, cov) {
                    return Some(path);
                }
            }
        }
    }
    None
}

/// Continues from `node` along its line of orientation `o` (0 vertical,
/// 1 horizontal) with `rem` bends still to place. On success `path` holds the
/// whole route.
fn extend(
    g: &mut Grid,
    memo: &mut HashMap<(usize, usize), Vec<(usize, Bits)>>,
    path: &mut Vec<P2>,
    node: usize,
    o: usize,
    rem: usize,
    cov: Bits,
) -> bool {
    let (line, i) = g.nodes[node][o];
    if rem == 0 {
        for forward in [false, true] {
            let (end, tail) = g.ray(line, i, forward);
            if subset(&g.full, &union(&cov, &tail)) {
                path.push(end);
                return true;
            }
        }
        return false;
    }
    // A state already explored with at least as many bends left and a
    // superset of this coverage failed; so will this one.
    let seen = memo.entry((node, o)).or_default();
    if seen.iter().any(|(r, c)| *r >= rem && subset(&cov, c)) {
        return false;
    }
    let chord = g.lines[line].chord[i];
    let next: Vec<(usize, usize)> = g.on_line[line]
        .iter()
        .copied()
        .filter(|&(m, j)| m != node && g.lines[line].chord[j] == chord)
        .collect();
    for (m, j) in next {
        let c = union(&cov, &g.seg(line, i, j));
        path.push(g.node_point(m));
        if extend(g, memo, path, m, 1 - o, rem - 1, c) {
            return true;
        }
        path.pop();
    }
    memo.entry((node, o)).or_default().push((rem, cov));
    false
}
