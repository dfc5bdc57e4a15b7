//! Seeded random polygons.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`, so a seed
//! produces the same polygon on every platform. Each generator samples slab
//! boundaries and then walks the floor `l` and ceiling `u` of consecutive
//! slabs, changing one of the two at every boundary.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::construct::{polygon_from_profile, polygon_from_rects, Rect};
use crate::error::GenError;
use crate::polygon::{OrthoPolygon, COORD_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    /// x-monotone.
    Monotone,
    /// x- and y-monotone with a non-empty kernel.
    Orthoconvex,
    /// x-monotone with one corridor crossing every slab.
    Balanced,
    /// Serpentine of monotone arms joined by reflex rectangles.
    Path,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [GenKind::Monotone, GenKind::Orthoconvex, GenKind::Balanced, GenKind::Path];

    pub fn as_str(self) -> &'static str {
        match self {
            GenKind::Monotone => "monotone",
            GenKind::Orthoconvex => "orthoconvex",
            GenKind::Balanced => "balanced",
            GenKind::Path => "path",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown polygon kind `{s}`, expected monotone, orthoconvex, balanced or path"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenParams {
    pub seed: u64,
    /// Vertex count of the result; even and at least 4.
    pub n_target: usize,
    /// Coordinates fall in `[0, coord_range]`.
    pub coord_range: i64,
    pub kind: GenKind,
    /// Every vertical edge at its own x. When false, monotone polygons may
    /// stack two vertical edges on one x.
    pub general_position: bool,
}

impl GenParams {
    pub fn new(kind: GenKind, n_target: usize, seed: u64) -> Self {
        GenParams { seed, n_target, coord_range: (2 * n_target as i64).max(16), kind, general_position: true }
    }

    pub fn with_range(mut self, coord_range: i64) -> Self {
        self.coord_range = coord_range;
        self
    }

    pub fn with_general_position(mut self, general_position: bool) -> Self {
        self.general_position = general_position;
        self
    }
}

pub fn generate(params: &GenParams) -> Result<OrthoPolygon, GenError> {
    let n = params.n_target;
    let range = params.coord_range;
    let infeasible = |msg: String| Err(GenError::InfeasibleParams(msg));
    if n < 4 || n % 2 == 1 {
        return infeasible(format!("vertex count {n} must be even and at least 4"));
    }
    if range < n as i64 {
        return infeasible(format!("coordinate range {range} is smaller than vertex count {n}"));
    }
    if range > COORD_LIMIT {
        return infeasible(format!("coordinate range {range} exceeds 2^31"));
    }
    if params.kind == GenKind::Path && n < 10 {
        return infeasible(format!("path polygons need at least 10 vertices, got {n}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let built = match params.kind {
        GenKind::Monotone => monotone(&mut rng, n, range, params.general_position),
        GenKind::Orthoconvex => orthoconvex(&mut rng, n, range),
        GenKind::Balanced => balanced(&mut rng, n, range),
        GenKind::Path => path(&mut rng, n, range),
    };
    built.map_err(|e| GenError::InfeasibleParams(format!("generator produced an invalid polygon: {e}")))
}

/// `k` distinct sorted values from `[lo, hi]`.
fn distinct(rng: &mut ChaCha8Rng, lo: i64, hi: i64, k: usize) -> Vec<i64> {
    let span = (hi - lo + 1) as usize;
    let mut v: Vec<i64> = sample(rng, span, k).into_iter().map(|i| lo + i as i64).collect();
    v.sort_unstable();
    v
}

/// Uniform value of `[lo, hi]` other than `skip`. The range must hold another value.
fn pick_except(rng: &mut ChaCha8Rng, lo: i64, hi: i64, skip: i64) -> i64 {
    let skip_inside = lo <= skip && skip <= hi;
    let v = rng.gen_range(lo..=hi - skip_inside as i64);
    if skip_inside && v >= skip {
        v + 1
    } else {
        v
    }
}

fn options(lo: i64, hi: i64, skip: i64) -> i64 {
    (hi - lo + 1 - (lo <= skip && skip <= hi) as i64).max(0)
}

/// Moves exactly one of `u` or `l`, keeping `lo <= l < u <= hi`.
fn single_change(rng: &mut ChaCha8Rng, u: i64, l: i64, lo: i64, hi: i64) -> (i64, i64) {
    let can_u = options(l + 1, hi, u) > 0;
    let can_l = options(lo, u - 1, l) > 0;
    if can_u && (!can_l || rng.gen_bool(0.5)) {
        (pick_except(rng, l + 1, hi, u), l)
    } else {
        (u, pick_except(rng, lo, u - 1, l))
    }
}

fn profile(xs: &[i64], levels: &[(i64, i64)]) -> Result<OrthoPolygon, crate::error::PolygonError> {
    let rects: Vec<Rect> = levels
        .iter()
        .enumerate()
        .map(|(i, &(l, u))| Rect::new(xs[i], xs[i + 1], l, u))
        .collect();
    polygon_from_profile(&rects)
}

fn monotone(rng: &mut ChaCha8Rng, n: usize, range: i64, general: bool) -> Result<OrthoPolygon, crate::error::PolygonError> {
    // A single change adds two vertices, a double change four.
    let mut budget = (n - 4) / 2;
    let l0 = rng.gen_range(0..range);
    let mut levels = vec![(l0, rng.gen_range(l0 + 1..=range))];
    while budget > 0 {
        let (l, u) = *levels.last().unwrap();
        let double = if !general && budget >= 2 && rng.gen_bool(0.3) { double_change(rng, u, l, range) } else { None };
        let next = match double {
            Some(v) => {
                budget -= 2;
                v
            }
            None => {
                budget -= 1;
                let (u2, l2) = single_change(rng, u, l, 0, range);
                (l2, u2)
            }
        };
        levels.push(next);
    }
    let xs = distinct(rng, 0, range, levels.len() + 1);
    profile(&xs, &levels)
}

/// New `(l, u)` with both values moved and the old and new intervals still
/// overlapping, if there is room.
fn double_change(rng: &mut ChaCha8Rng, u: i64, l: i64, range: i64) -> Option<(i64, i64)> {
    if options(0, u - 1, l) == 0 {
        return None;
    }
    let l2 = pick_except(rng, 0, u - 1, l);
    let lo_u = l.max(l2) + 1;
    (options(lo_u, range, u) > 0).then(|| (l2, pick_except(rng, lo_u, range, u)))
}

fn orthoconvex(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Result<OrthoPolygon, crate::error::PolygonError> {
    let m = (n - 2) / 2;
    let c = rng.gen_range(0..m);
    // true: the ceiling moves at this boundary, false: the floor.
    let moves: Vec<bool> = (0..m - 1).map(|_| rng.gen_bool(0.5)).collect();
    let (left, right) = moves.split_at(c);
    let count = |s: &[bool], v: bool| s.iter().filter(|&&b| b == v).count() as i64;
    let need_u = count(left, true).max(count(right, true));
    let need_l = count(left, false).max(count(right, false));

    // Corridor [c_lo, c_hi] below every ceiling and above every floor.
    let c_lo = rng.gen_range(need_l..=range - need_u - 1);
    let c_hi = rng.gen_range(c_lo + 1..=range - need_u);
    let u_top = rng.gen_range(c_hi + need_u..=range);
    let l_bot = rng.gen_range(0..=c_lo - need_l);

    // Levels rise towards slab c on the ceiling and fall towards it on the floor.
    let side = |rng: &mut ChaCha8Rng, moves: &[bool]| -> Vec<(i64, i64)> {
        let ku = count(moves, true) as usize;
        let kl = count(moves, false) as usize;
        let mut us = distinct(rng, c_hi, u_top - 1, ku);
        let ls = distinct(rng, l_bot + 1, c_lo, kl);
        // Walk outward from the centre: ceilings drop, floors rise.
        us.reverse();
        let (mut u, mut l) = (u_top, l_bot);
        let (mut iu, mut il) = (0, 0);
        let mut out = Vec::with_capacity(moves.len());
        for &mv in moves {
            if mv {
                u = us[iu];
                iu += 1;
            } else {
                l = ls[il];
                il += 1;
            }
            out.push((l, u));
        }
        out
    };
    // Left moves are listed left to right, so walk them from the centre out.
    let left_rev: Vec<bool> = left.iter().rev().copied().collect();
    let mut left_levels = side(rng, &left_rev);
    left_levels.reverse();
    let right_levels = side(rng, right);
    let mut levels = left_levels;
    levels.push((l_bot, u_top));
    levels.extend(right_levels);
    let xs = distinct(rng, 0, range, m + 1);
    profile(&xs, &levels)
}

fn balanced(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Result<OrthoPolygon, crate::error::PolygonError> {
    let m = (n - 2) / 2;
    let c_lo = rng.gen_range(1..=range - 3);
    let c_hi = rng.gen_range(c_lo + 1..=range - 1);
    let mut levels = vec![(rng.gen_range(0..=c_lo), rng.gen_range(c_hi..=range))];
    for _ in 1..m {
        let (l, u) = *levels.last().unwrap();
        let moved_u = options(c_hi, range, u) > 0 && (options(0, c_lo, l) == 0 || rng.gen_bool(0.5));
        levels.push(if moved_u { (l, pick_except(rng, c_hi, range, u)) } else { (pick_except(rng, 0, c_lo, l), u) });
    }
    let xs = distinct(rng, 0, range, m + 1);
    profile(&xs, &levels)
}

fn path(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Result<OrthoPolygon, crate::error::PolygonError> {
    let turns = rng.gen_range(1..=(n - 6) / 4);
    let arms = turns + 1;
    let steps = (n - 4 - 4 * turns) / 2;

    // Bar j joins arms j and j + 1, on the right for even j.
    let right_bars = turns.div_ceil(2);
    let left_bars = turns / 2;
    let last_free_left = turns % 2 == 1;
    let n_left = 2 * left_bars + 1 + last_free_left as usize;
    let n_right = 2 * right_bars + (!last_free_left) as usize;
    let xs = distinct(rng, 0, range, n_left + steps + n_right);
    let mut left_zone = xs[..n_left].to_vec();
    let middle = &xs[n_left..n_left + steps];
    let mut right_zone = xs[n_left + steps..].to_vec();
    left_zone.shuffle(rng);
    right_zone.shuffle(rng);

    // Bars take consecutive pairs of their zone, free ends the leftovers.
    let pair = |zone: &[i64], i: usize| {
        let (a, b) = (zone[2 * i], zone[2 * i + 1]);
        (a.min(b), a.max(b))
    };
    let bar_x: Vec<(i64, i64)> = (0..turns)
        .map(|j| if j % 2 == 0 { pair(&right_zone, j / 2) } else { pair(&left_zone, j / 2) })
        .collect();
    let free_left: Vec<i64> = left_zone[2 * left_bars..].to_vec();
    let free_right: Vec<i64> = right_zone[2 * right_bars..].to_vec();

    // Arm x-extent: the inner side of the bar on each end, or a free end.
    let is_right_bar = |j: usize| j.is_multiple_of(2);
    let arm_span = |a: usize| -> (i64, i64) {
        let bars = [a.checked_sub(1), (a < turns).then_some(a)];
        let left = bars.iter().flatten().find(|&&j| !is_right_bar(j)).map(|&j| bar_x[j].1);
        let right = bars.iter().flatten().find(|&&j| is_right_bar(j)).map(|&j| bar_x[j].0);
        let free_l = if a == 0 { free_left[0] } else { *free_left.last().unwrap() };
        (left.unwrap_or(free_l), right.unwrap_or_else(|| free_right[0]))
    };

    // Steps shared out among the arms.
    let mut owner: Vec<usize> = (0..steps).map(|_| rng.gen_range(0..arms)).collect();
    owner.sort_unstable();
    let mut arm_steps: Vec<Vec<i64>> = vec![Vec::new(); arms];
    let mut mids: Vec<i64> = middle.to_vec();
    mids.shuffle(rng);
    for (k, &a) in owner.iter().enumerate() {
        arm_steps[a].push(mids[k]);
    }

    // Disjoint y bands, bottom to top, with gaps between them.
    let min_band = arm_steps.iter().map(|s| 3.max(s.len() as i64 + 2)).collect::<Vec<_>>();
    let spare = range - min_band.iter().sum::<i64>() - turns as i64;
    let mut extra = vec![0i64; 2 * arms - 1];
    for _ in 0..spare.min(4 * n as i64) {
        let i = rng.gen_range(0..extra.len());
        extra[i] += 1;
    }
    let mut bands = Vec::with_capacity(arms);
    let mut y = 0;
    for a in 0..arms {
        let h = min_band[a] + extra[2 * a];
        bands.push((y, y + h));
        y += h + 1 + if a + 1 < arms { extra[2 * a + 1] } else { 0 };
    }

    let mut rects = Vec::new();
    // Per arm: (floor, ceiling) of the slab at its left and right ends.
    let mut ends: Vec<((i64, i64), (i64, i64))> = Vec::with_capacity(arms);
    for a in 0..arms {
        let (lo, hi) = bands[a];
        let (x0, x1) = arm_span(a);
        let mut cuts = arm_steps[a].clone();
        cuts.sort_unstable();
        let mut bounds = vec![x0];
        bounds.extend(cuts);
        bounds.push(x1);
        let l0 = rng.gen_range(lo..hi);
        let mut level = (l0, rng.gen_range(l0 + 1..=hi));
        let first = level;
        for w in bounds.windows(2).enumerate() {
            let (i, w) = w;
            if i > 0 {
                let (u, l) = single_change(rng, level.1, level.0, lo, hi);
                level = (l, u);
            }
            rects.push(Rect::new(w[0], w[1], level.0, level.1));
        }
        ends.push((first, level));
    }
    for (j, &(bx0, bx1)) in bar_x.iter().enumerate() {
        // Right bars touch the arms' right ends, left bars their left ends.
        let (below, above) = if j % 2 == 0 { (ends[j].1, ends[j + 1].1) } else { (ends[j].0, ends[j + 1].0) };
        rects.push(Rect::new(bx0, bx1, below.0, above.1));
    }
    polygon_from_rects(&rects)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balanced::decompose_balanced;
    use crate::decomposition::{vertical_decomposition, PolygonClass};
    use crate::path::find_reflex_rectangles;

    fn gen(kind: GenKind, n: usize, seed: u64) -> OrthoPolygon {
        generate(&GenParams::new(kind, n, seed)).unwrap()
    }

    #[test]
    fn four_vertices_is_a_rectangle() {
        for kind in [GenKind::Monotone, GenKind::Orthoconvex, GenKind::Balanced] {
            let p = gen(kind, 4, 1);
            assert_eq!(p.len(), 4);
            assert!(p.reflex_vertices().is_empty());
        }
    }

    #[test]
    fn monotone_twenty() {
        let p = gen(GenKind::Monotone, 20, 7);
        assert_eq!(p.len(), 20);
        assert_eq!(p.reflex_vertices().len(), 8);
        assert_eq!(vertical_decomposition(&p).len(), 9);
        assert_eq!(p, gen(GenKind::Monotone, 20, 7));
    }

    #[test]
    fn seeds_differ() {
        assert_ne!(gen(GenKind::Monotone, 20, 7), gen(GenKind::Monotone, 20, 8));
    }

    #[test]
    fn infeasible_params() {
        let bad = [
            GenParams::new(GenKind::Path, 8, 1),
            GenParams::new(GenKind::Monotone, 7, 1),
            GenParams::new(GenKind::Monotone, 2, 1),
            GenParams::new(GenKind::Monotone, 20, 1).with_range(10),
        ];
        for p in bad {
            assert!(matches!(generate(&p), Err(GenError::InfeasibleParams(_))), "{p:?}");
        }
    }

    #[test]
    fn kinds_classify() {
        for seed in 0..40 {
            for n in [10, 16, 30] {
                let m = gen(GenKind::Monotone, n, seed);
                assert_eq!(vertical_decomposition(&m).class(), PolygonClass::Monotone);

                let o = gen(GenKind::Orthoconvex, n, seed);
                assert!(o.is_orthoconvex());
                assert!(crate::kernel::orthoconvex_kernel(&o).is_ok());

                let b = gen(GenKind::Balanced, n, seed);
                let d = vertical_decomposition(&b);
                assert_eq!(decompose_balanced(&d).unwrap().len(), 1);

                let p = gen(GenKind::Path, n, seed);
                assert_eq!(p.len(), n);
                let d = vertical_decomposition(&p);
                assert_eq!(d.class(), PolygonClass::PathPolygon, "seed {seed} n {n}");
                assert!(!find_reflex_rectangles(&d).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn stacked_edges_when_not_general() {
        let stacked = (0..50).any(|seed| {
            let p = generate(&GenParams::new(GenKind::Monotone, 30, seed).with_general_position(false)).unwrap();
            assert_eq!(p.len(), 30);
            vertical_decomposition(&p).len() < 14
        });
        assert!(stacked);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in GenKind::ALL {
            assert_eq!(k.as_str().parse::<GenKind>(), Ok(k));
        }
    }
}
