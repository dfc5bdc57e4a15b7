//! Path polygons: slabs whose two dual neighbours hang off the same side are
//! reflex rectangles. Removing them leaves x-monotone pieces, which are solved
//! on their own and joined by vertical connectors.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balanced::balanced_groups;
use crate::construct::polygon_from_profile;
use crate::decomposition::{dual_path_order, vertical_decomposition, Decomposition, PolygonClass, Side, Slab};
use crate::error::{PolygonError, SolveError};
use crate::polygon::{OrthoPolygon, Point};
use crate::route::{
    clip_x, left_cut, normalize, right_cut, select_align_levels, solve_decomposed, stitch_route,
    MonotoneSolution, Route, TrimMode,
};

/// One element of a piece plan. Slab ids are the 1-based `Slab::index`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanElement {
    /// Run of non-reflex slabs, listed left to right.
    MonotonePiece { slabs: Vec<usize> },
    ReflexRect { slab: usize },
}

/// Elements in dual-path order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiecePlan {
    pub elements: Vec<PlanElement>,
}

impl PiecePlan {
    pub fn pieces(&self) -> impl Iterator<Item = &[usize]> {
        self.elements.iter().filter_map(|e| match e {
            PlanElement::MonotonePiece { slabs } => Some(slabs.as_slice()),
            PlanElement::ReflexRect { .. } => None,
        })
    }

    pub fn reflex_rects(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().filter_map(|e| match e {
            PlanElement::ReflexRect { slab } => Some(*slab),
            PlanElement::MonotonePiece { .. } => None,
        })
    }
}

fn path_order(d: &Decomposition) -> Result<Vec<usize>, SolveError> {
    match d.class() {
        PolygonClass::Monotone => Ok((0..d.len()).collect()),
        PolygonClass::PathPolygon => dual_path_order(d).ok_or(SolveError::DualGraphNotPath),
        PolygonClass::Other => Err(SolveError::DualGraphNotPath),
    }
}

fn is_reflex(d: &Decomposition, pos: usize) -> bool {
    match d.neighbors(pos) {
        [a, b] => d.side_of(pos, *a) == d.side_of(pos, *b),
        _ => false,
    }
}

/// Slab ids of the reflex rectangles, in dual-path order.
pub fn find_reflex_rectangles(d: &Decomposition) -> Result<Vec<usize>, SolveError> {
    let order = path_order(d)?;
    Ok(order.into_iter().filter(|&p| is_reflex(d, p)).map(|p| d.slabs()[p].index).collect())
}

pub fn split_pieces(d: &Decomposition) -> Result<PiecePlan, SolveError> {
    let order = path_order(d)?;
    let mut elements = Vec::new();
    let mut run: Vec<usize> = Vec::new();
    let flush = |run: &mut Vec<usize>, elements: &mut Vec<PlanElement>| {
        if !run.is_empty() {
            let mut slabs: Vec<usize> = run.drain(..).map(|p| d.slabs()[p].index).collect();
            slabs.sort_unstable();
            elements.push(PlanElement::MonotonePiece { slabs });
        }
    };
    for pos in order {
        if is_reflex(d, pos) {
            flush(&mut run, &mut elements);
            elements.push(PlanElement::ReflexRect { slab: d.slabs()[pos].index });
        } else {
            run.push(pos);
        }
    }
    flush(&mut run, &mut elements);
    Ok(PiecePlan { elements })
}

fn piece_slabs(d: &Decomposition, ids: &[usize]) -> Vec<Slab> {
    ids.iter()
        .enumerate()
        .map(|(i, &id)| Slab { index: i + 1, ..d.slabs()[id - 1] })
        .collect()
}

/// A monotone piece as a polygon of its own.
pub fn piece_polygon(d: &Decomposition, ids: &[usize]) -> Result<OrthoPolygon, PolygonError> {
    let rects: Vec<_> = ids.iter().map(|&id| d.slabs()[id - 1].rect()).collect();
    polygon_from_profile(&rects)
}

/// Route through one piece, left to right, with the free ends trimmed.
fn piece_route(slabs: &[Slab], trim_left: bool, trim_right: bool, mode: TrimMode) -> Result<Vec<Point>, SolveError> {
    let groups = balanced_groups(slabs);
    let levels = select_align_levels(&groups);
    let route = stitch_route(&groups, &levels)?;
    let lo = if trim_left { left_cut(slabs, &groups, mode) } else { slabs[0].x_left };
    let hi = if trim_right { right_cut(slabs, &groups, mode) } else { slabs[slabs.len() - 1].x_right };
    Ok(clip_x(&route.points, lo, hi))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSolution {
    pub decomposition: Decomposition,
    pub plan: PiecePlan,
    pub route: Route,
}

pub fn solve_path_polygon_detailed(p: &OrthoPolygon, trim: TrimMode) -> Result<PathSolution, SolveError> {
    let decomposition = vertical_decomposition(p);
    solve_path_decomposed(decomposition, trim)
}

fn solve_path_decomposed(decomposition: Decomposition, trim: TrimMode) -> Result<PathSolution, SolveError> {
    let d = &decomposition;
    let plan = split_pieces(d)?;
    let last = plan.elements.len() - 1;

    let tasks: Vec<(usize, &[usize])> = plan
        .elements
        .iter()
        .enumerate()
        .filter_map(|(j, e)| match e {
            PlanElement::MonotonePiece { slabs } => Some((j, slabs.as_slice())),
            PlanElement::ReflexRect { .. } => None,
        })
        .collect();
    let routes: Vec<Vec<Point>> = tasks
        .par_iter()
        .map(|&(j, ids)| {
            let slabs = piece_slabs(d, ids);
            // Sides facing the previous and next elements, if any.
            let entry = (j > 0).then(|| attachment_side(d, ids, &plan.elements[j - 1]));
            let exit = (j < last).then(|| attachment_side(d, ids, &plan.elements[j + 1]));
            let free_left = entry != Some(Side::Left) && exit != Some(Side::Left);
            let free_right = entry != Some(Side::Right) && exit != Some(Side::Right);
            let mut pts = piece_route(&slabs, free_left, free_right, trim)?;
            if entry == Some(Side::Right) || exit == Some(Side::Left) {
                pts.reverse();
            }
            Ok(pts)
        })
        .collect::<Result<_, SolveError>>()?;

    let mut points = Vec::new();
    for pts in routes {
        // Consecutive pieces meet on one vertical line, so appending the next
        // piece's first point draws the junction connector.
        points.extend(pts);
    }
    Ok(PathSolution { plan, route: Route { points: normalize(points), trim }, decomposition })
}

/// Side of the piece that faces the neighbouring element.
fn attachment_side(d: &Decomposition, ids: &[usize], neighbour: &PlanElement) -> Side {
    let other = match neighbour {
        PlanElement::ReflexRect { slab } => vec![*slab],
        PlanElement::MonotonePiece { slabs } => slabs.clone(),
    };
    for &id in ids {
        for &n in d.neighbors(id - 1) {
            if other.contains(&(n + 1)) {
                return d.side_of(id - 1, n);
            }
        }
    }
    unreachable!("consecutive plan elements are dual-adjacent")
}

pub fn solve_path_polygon(p: &OrthoPolygon, trim: TrimMode) -> Result<Route, SolveError> {
    solve(p, trim).map(|s| s.route().clone())
}

/// Output of [`solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Monotone(MonotoneSolution),
    Path(PathSolution),
}

impl Solution {
    pub fn route(&self) -> &Route {
        match self {
            Solution::Monotone(s) => &s.route,
            Solution::Path(s) => &s.route,
        }
    }

    pub fn decomposition(&self) -> &Decomposition {
        match self {
            Solution::Monotone(s) => &s.decomposition,
            Solution::Path(s) => &s.decomposition,
        }
    }

    pub fn plan(&self) -> Option<&PiecePlan> {
        match self {
            Solution::Monotone(_) => None,
            Solution::Path(s) => Some(&s.plan),
        }
    }
}

/// Decomposes once and dispatches on the polygon class.
pub fn solve(p: &OrthoPolygon, trim: TrimMode) -> Result<Solution, SolveError> {
    let d = vertical_decomposition(p);
    match d.class() {
        PolygonClass::Monotone => solve_decomposed(d, trim).map(Solution::Monotone),
        PolygonClass::PathPolygon => solve_path_decomposed(d, trim).map(Solution::Path),
        PolygonClass::Other => Err(SolveError::DualGraphNotPath),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::route::{route_metrics, solve_monotone};

    fn plan_of(p: &OrthoPolygon) -> PiecePlan {
        split_pieces(&vertical_decomposition(p)).unwrap()
    }

    #[test]
    fn monotone_has_no_reflex_rects() {
        for p in [fixtures::l_shape(), fixtures::plus_sign(), fixtures::upright_u(), fixtures::three_corridors()] {
            let d = vertical_decomposition(&p);
            assert!(find_reflex_rectangles(&d).unwrap().is_empty());
            let plan = split_pieces(&d).unwrap();
            assert_eq!(plan.elements, vec![PlanElement::MonotonePiece { slabs: (1..=d.len()).collect() }]);
        }
    }

    #[test]
    fn sideways_u_plan() {
        let p = fixtures::sideways_u();
        let d = vertical_decomposition(&p);
        assert_eq!(find_reflex_rectangles(&d).unwrap(), vec![3]);
        assert_eq!(
            plan_of(&p).elements,
            vec![
                PlanElement::MonotonePiece { slabs: vec![1] },
                PlanElement::ReflexRect { slab: 3 },
                PlanElement::MonotonePiece { slabs: vec![2] },
            ]
        );
    }

    #[test]
    fn tight_spiral_plan() {
        let plan = plan_of(&fixtures::tight_spiral());
        let kinds: Vec<bool> = plan.elements.iter().map(|e| matches!(e, PlanElement::ReflexRect { .. })).collect();
        assert_eq!(kinds, vec![false, true, true, false]);
    }

    #[test]
    fn comb_is_rejected() {
        let d = vertical_decomposition(&fixtures::comb());
        assert_eq!(find_reflex_rectangles(&d), Err(SolveError::DualGraphNotPath));
        assert_eq!(solve_path_polygon(&fixtures::comb(), TrimMode::Safe), Err(SolveError::DualGraphNotPath));
    }

    #[test]
    fn monotone_input_is_delegated() {
        let p = fixtures::three_corridors();
        for mode in [TrimMode::Paper, TrimMode::Safe, TrimMode::Off] {
            assert_eq!(solve_path_polygon(&p, mode).unwrap(), solve_monotone(&p, mode).unwrap());
        }
    }

    #[test]
    fn sideways_u_route() {
        // Arms [0,6]x[0,2] and [0,6]x[4,6], bar [6,8]x[0,6].
        let r = solve_path_polygon(&fixtures::sideways_u(), TrimMode::Off).unwrap();
        let expected: Vec<Point> = [(0, 0), (6, 0), (6, 4), (0, 4)].into_iter().map(Point::from).collect();
        assert_eq!(r.points, expected);
        assert_eq!(route_metrics(&r).bends, 2);
    }

    #[test]
    fn tight_spiral_route_runs_through_shared_line() {
        let r = solve_path_polygon(&fixtures::tight_spiral(), TrimMode::Safe).unwrap();
        assert!(r.segments().any(|(a, b)| a.x == 4 && b.x == 4));
    }

    #[test]
    fn pieces_are_monotone_polygons() {
        for p in [fixtures::sideways_u(), fixtures::tight_spiral()] {
            let d = vertical_decomposition(&p);
            for ids in split_pieces(&d).unwrap().pieces() {
                let piece = piece_polygon(&d, ids).unwrap();
                assert_eq!(vertical_decomposition(&piece).class(), PolygonClass::Monotone);
            }
        }
    }
}
