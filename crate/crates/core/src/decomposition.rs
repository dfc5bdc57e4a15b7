//! Vertical decomposition into slabs and its dual graph.
//!
//! Every reflex vertex has its incident vertical edge extended into the
//! interior until it reaches the boundary. Extensions from vertically aligned
//! reflex vertices coalesce into a single cut, so in general position the
//! polygon splits into exactly `(n - 2) / 2` slabs and otherwise into fewer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::construct::Rect;
use crate::polygon::OrthoPolygon;

/// One rectangle of the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slab {
    /// 1-based position in left-to-right order.
    pub index: usize,
    pub x_left: i64,
    pub x_right: i64,
    /// Lower y, on polygon edge `lower_edge`.
    pub lower: i64,
    /// Upper y, on polygon edge `upper_edge`.
    pub upper: i64,
    pub upper_edge: usize,
    pub lower_edge: usize,
}

impl Slab {
    pub fn rect(&self) -> Rect {
        Rect::new(self.x_left, self.x_right, self.lower, self.upper)
    }

    pub fn area(&self) -> i128 {
        self.rect().area()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolygonClass {
    Monotone,
    PathPolygon,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    slabs: Vec<Slab>,
    /// `adj[adj_start[i]..adj_start[i + 1]]` holds the 0-based positions of
    /// the slabs sharing a positive-length vertical boundary with slab `i`,
    /// sorted.
    adj_start: Vec<usize>,
    adj: Vec<usize>,
    class: PolygonClass,
}

impl Decomposition {
    fn from_parts(slabs: Vec<Slab>, adj_start: Vec<usize>, adj: Vec<usize>) -> Self {
        let mut d = Decomposition { slabs, adj_start, adj, class: PolygonClass::Other };
        d.class = classify_graph(&d);
        d
    }

    pub fn slabs(&self) -> &[Slab] {
        &self.slabs
    }

    pub fn len(&self) -> usize {
        self.slabs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slabs.is_empty()
    }

    /// Neighbors of the slab at 0-based position `pos`.
    pub fn neighbors(&self, pos: usize) -> &[usize] {
        &self.adj[self.adj_start[pos]..self.adj_start[pos + 1]]
    }

    pub fn class(&self) -> PolygonClass {
        self.class
    }

    /// Which side of slab `pos` the adjacent slab `other` is attached to.
    pub fn side_of(&self, pos: usize, other: usize) -> Side {
        let (a, b) = (&self.slabs[pos], &self.slabs[other]);
        if b.x_right == a.x_left {
            Side::Left
        } else {
            debug_assert_eq!(b.x_left, a.x_right);
            Side::Right
        }
    }

    pub fn total_area(&self) -> i128 {
        self.slabs.iter().map(Slab::area).sum()
    }
}

pub fn classify(d: &Decomposition) -> PolygonClass {
    d.class
}

pub fn vertical_decomposition(p: &OrthoPolygon) -> Decomposition {
    if p.is_x_monotone() {
        monotone_decomposition(p)
    } else {
        sweep_decomposition(p)
    }
}

fn classify_graph(d: &Decomposition) -> PolygonClass {
    let slabs = d.slabs();
    let m = slabs.len();
    if m <= 1 {
        return PolygonClass::Monotone;
    }
    let in_order = (0..m).all(|i| {
        let chain = match d.neighbors(i) {
            [a] => (i == 0 && *a == 1) || (i + 1 == m && *a + 1 == i),
            [a, b] => *a + 1 == i && *b == i + 1,
            _ => false,
        };
        chain && (i + 1 == m || slabs[i].x_right == slabs[i + 1].x_left)
    });
    if in_order {
        return PolygonClass::Monotone;
    }
    if dual_path_order(d).is_some() {
        PolygonClass::PathPolygon
    } else {
        PolygonClass::Other
    }
}

/// Slab positions in path order, starting from the end with the smaller
/// position, when the dual graph is a path.
pub fn dual_path_order(d: &Decomposition) -> Option<Vec<usize>> {
    let m = d.len();
    if m == 0 {
        return None;
    }
    if m == 1 {
        return Some(vec![0]);
    }
    let degree = |i: usize| d.neighbors(i).len();
    if (0..m).any(|i| degree(i) == 0 || degree(i) > 2) {
        return None;
    }
    let start = (0..m).position(|i| degree(i) == 1)?;
    let mut order = Vec::with_capacity(m);
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        order.push(cur);
        match d.neighbors(cur).iter().find(|&&n| n != prev) {
            Some(&n) if order.len() < m => {
                prev = cur;
                cur = n;
            }
            _ => break,
        }
    }
    (order.len() == m && degree(cur) == 1).then_some(order)
}

/// Linear-time decomposition of an x-monotone polygon: merge the lower and
/// upper chains by x. Every interior vertical edge of such a polygon has a
/// reflex endpoint, so every distinct vertical-edge x is a cut.
fn monotone_decomposition(p: &OrthoPolygon) -> Decomposition {
    let n = p.len();
    // Lower chain edges run left to right (+x), upper chain edges right to left.
    let v = p.vertices();
    let next = |i: usize| if i + 1 == n { 0 } else { i + 1 };
    let back2 = |i: usize| if i >= 2 { i - 2 } else { i + n - 2 };
    let rightward = |i: usize| v[i].y == v[next(i)].y && v[next(i)].x > v[i].x;
    let leftward = |i: usize| v[i].y == v[next(i)].y && v[next(i)].x < v[i].x;
    let start = (0..n).filter(|&i| rightward(i)).min_by_key(|&i| v[i].x).expect("polygon has a rightward edge");
    // Walk the lower chain forward and the upper chain backward from the
    // bottom-left corner; horizontal edges sit two apart on the ring.
    let (mut li, mut ui) = (start, back2(start));
    let mut slabs = Vec::with_capacity(n / 2);
    let mut x = v[start].x;
    while rightward(li) && leftward(ui) {
        let lo_end = v[next(li)].x;
        let up_end = v[ui].x;
        let x_right = lo_end.min(up_end);
        slabs.push(Slab {
            index: slabs.len() + 1,
            x_left: x,
            x_right,
            lower: v[li].y,
            upper: v[ui].y,
            upper_edge: ui,
            lower_edge: li,
        });
        if lo_end == x_right {
            li = next(next(li));
        }
        if up_end == x_right {
            ui = back2(ui);
        }
        x = x_right;
    }
    let m = slabs.len();
    let mut adj_start = Vec::with_capacity(m + 1);
    let mut adj = Vec::with_capacity(2 * m);
    for i in 0..m {
        adj_start.push(adj.len());
        adj.extend([i.checked_sub(1), (i + 1 < m).then_some(i + 1)].into_iter().flatten());
    }
    adj_start.push(adj.len());
    Decomposition::from_parts(slabs, adj_start, adj)
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    top: i64,
    bottom_edge: usize,
    top_edge: usize,
    x_start: i64,
    tmp: usize,
}

/// General O(n log n) sweep from left to right. Cells are the open
/// rectangles between an active bottom edge and the active edge above it;
/// a cell closes whenever a vertex at the sweep x lies on its closed
/// vertical extent.
fn sweep_decomposition(p: &OrthoPolygon) -> Decomposition {
    let n = p.len();
    // Horizontal edges: y, x-range, id, bottom (interior above).
    let mut by_x: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, v) in p.vertices().iter().enumerate() {
        by_x.entry(v.x).or_default().push(i);
    }

    let mut active_edges: BTreeMap<i64, usize> = BTreeMap::new();
    let mut cells: BTreeMap<i64, Cell> = BTreeMap::new();
    let mut slabs_tmp: Vec<Option<Slab>> = Vec::new();
    let mut adj_pairs: Vec<(usize, usize)> = Vec::new();

    for (&x, verts) in &by_x {
        let mut ys: Vec<i64> = verts.iter().map(|&i| p.vertices()[i].y).collect();
        ys.sort_unstable();
        ys.dedup();

        // Close every cell whose closed vertical extent holds a vertex at x.
        let mut closed: Vec<(i64, Cell)> = Vec::new();
        for &y in &ys {
            let hit = cells.range(..=y).next_back().map(|(&b, &c)| (b, c));
            if let Some((b, c)) = hit {
                if c.top >= y && closed.last().is_none_or(|&(cb, _)| cb != b) {
                    closed.push((b, c));
                }
            }
        }
        for &(b, c) in &closed {
            cells.remove(&b);
            slabs_tmp[c.tmp] = Some(Slab {
                index: 0,
                x_left: c.x_start,
                x_right: x,
                lower: b,
                upper: c.top,
                upper_edge: c.top_edge,
                lower_edge: c.bottom_edge,
            });
        }

        // Horizontal edges incident to vertices at x start or end here.
        let mut ranges: Vec<(i64, i64)> = closed.iter().map(|&(b, c)| (b, c.top)).collect();
        for &i in verts {
            for e in [p.edge(i), p.edge((i + n - 1) % n)] {
                if e.is_horizontal() {
                    let (lo, hi) = e.x_range();
                    if hi == x {
                        active_edges.remove(&e.start.y);
                    } else if lo == x {
                        active_edges.insert(e.start.y, e.id);
                    }
                } else if e.start.x == x {
                    ranges.push(e.y_range());
                }
            }
        }
        ranges.sort_unstable();
        let mut merged: Vec<(i64, i64)> = Vec::new();
        for (lo, hi) in ranges {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }

        let mut opened: Vec<(i64, Cell)> = Vec::new();
        for (lo, hi) in merged {
            for (&y, &eid) in active_edges.range(lo..=hi) {
                let e = p.edge(eid);
                let is_bottom = e.end.x > e.start.x;
                if !is_bottom || cells.contains_key(&y) {
                    continue;
                }
                let (&top, &top_edge) = active_edges
                    .range(y + 1..)
                    .next()
                    .expect("bottom edge has an edge above it");
                let cell = Cell { top, bottom_edge: eid, top_edge, x_start: x, tmp: slabs_tmp.len() };
                slabs_tmp.push(None);
                opened.push((y, cell));
            }
        }
        opened.sort_by_key(|&(b, _)| b);
        for &(b, c) in &opened {
            cells.insert(b, c);
        }

        // Left (closed) and right (opened) cells sharing a positive-length
        // piece of the line x are adjacent.
        let (mut i, mut j) = (0, 0);
        while i < closed.len() && j < opened.len() {
            let (lb, lc) = closed[i];
            let (rb, rc) = opened[j];
            if lb.max(rb) < lc.top.min(rc.top) {
                adj_pairs.push((lc.tmp, rc.tmp));
            }
            if lc.top < rc.top {
                i += 1;
            } else {
                j += 1;
            }
        }
    }
    debug_assert!(cells.is_empty(), "sweep left open cells");

    let mut order: Vec<usize> = (0..slabs_tmp.len()).collect();
    let slab_of = |t: usize| slabs_tmp[t].expect("every cell is closed");
    order.sort_by_key(|&t| {
        let s = slab_of(t);
        (s.x_left, s.lower)
    });
    let mut position = vec![0; slabs_tmp.len()];
    let mut slabs = Vec::with_capacity(order.len());
    for (pos, &t) in order.iter().enumerate() {
        position[t] = pos;
        let mut s = slab_of(t);
        s.index = pos + 1;
        slabs.push(s);
    }
    let mut adjacency = vec![Vec::new(); slabs.len()];
    for (a, b) in adj_pairs {
        let (pa, pb) = (position[a], position[b]);
        adjacency[pa].push(pb);
        adjacency[pb].push(pa);
    }
    let mut adj_start = Vec::with_capacity(slabs.len() + 1);
    let mut adj = Vec::new();
    for mut a in adjacency {
        a.sort_unstable();
        a.dedup();
        adj_start.push(adj.len());
        adj.extend(a);
    }
    adj_start.push(adj.len());
    Decomposition::from_parts(slabs, adj_start, adj)
}

#[cfg(test)]
pub(crate) fn sweep_for_tests(p: &OrthoPolygon) -> Decomposition {
    sweep_decomposition(p)
}
