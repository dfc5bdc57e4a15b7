//! Small hand-built polygons used across tests, docs and the CLI examples.

use crate::construct::{polygon_from_profile, Rect};
use crate::polygon::OrthoPolygon;

fn build(raw: &[(i64, i64)]) -> OrthoPolygon {
    OrthoPolygon::new(raw).expect("fixture is a valid orthogonal polygon")
}

/// `[0,4] × [0,2]`.
pub fn rectangle() -> OrthoPolygon {
    build(&[(0, 0), (4, 0), (4, 2), (0, 2)])
}

/// Six vertices, reflex corner at (2, 2).
pub fn l_shape() -> OrthoPolygon {
    build(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 3), (0, 3)])
}

/// Unit-width cross inside `[0,3] × [0,3]`.
pub fn plus_sign() -> OrthoPolygon {
    build(&[
        (1, 0),
        (2, 0),
        (2, 1),
        (3, 1),
        (3, 2),
        (2, 2),
        (2, 3),
        (1, 3),
        (1, 2),
        (0, 2),
        (0, 1),
        (1, 1),
    ])
}

/// Two arms at the left joined by a bar on the right: `⊐`.
pub fn sideways_u() -> OrthoPolygon {
    build(&[(0, 0), (8, 0), (8, 6), (0, 6), (0, 4), (6, 4), (6, 2), (0, 2)])
}

/// Two arms rising from a base: `⊔`. This one is x-monotone.
pub fn upright_u() -> OrthoPolygon {
    build(&[(0, 0), (6, 0), (6, 6), (4, 6), (4, 2), (2, 2), (2, 6), (0, 6)])
}

/// Two consecutive turns whose reflex rectangles share the line x = 4.
pub fn tight_spiral() -> OrthoPolygon {
    build(&[
        (0, 0),
        (6, 0),
        (6, 6),
        (4, 6),
        (4, 8),
        (8, 8),
        (8, 10),
        (2, 10),
        (2, 4),
        (4, 4),
        (4, 2),
        (0, 2),
    ])
}

/// Three arms hanging off one bar; the dual graph branches.
pub fn comb() -> OrthoPolygon {
    build(&[
        (0, 0),
        (8, 0),
        (8, 10),
        (0, 10),
        (0, 8),
        (6, 8),
        (6, 6),
        (0, 6),
        (0, 4),
        (6, 4),
        (6, 2),
        (0, 2),
    ])
}

fn profile(slabs: &[(i64, i64, i64, i64)]) -> OrthoPolygon {
    let rects: Vec<Rect> = slabs.iter().map(|&(x0, x1, y0, y1)| Rect::new(x0, x1, y0, y1)).collect();
    polygon_from_profile(&rects).expect("fixture profile is valid")
}

/// Slabs with u = (2, 3, 4, 5), l = (0, 1, 1, 3): groups {1..3} and {4}.
pub fn two_corridors() -> OrthoPolygon {
    profile(&[(0, 1, 0, 2), (1, 2, 1, 3), (2, 3, 1, 4), (3, 4, 3, 5)])
}

/// Five slabs in three groups with corridors [1,2], [4,7], [1,3]; the middle
/// group is a corridor local maximum.
pub fn three_corridors() -> OrthoPolygon {
    profile(&[(0, 2, 0, 2), (2, 4, 1, 5), (4, 6, 4, 7), (6, 8, 2, 7), (8, 10, 1, 3)])
}

/// Two groups, corridors [52, 65] and [27, 30]. The rightmost extremum lies
/// in the first group, and the second is a thin pocket whose top is hidden
/// from the first align by the corner (78, 30).
pub fn end_group_pocket() -> OrthoPolygon {
    profile(&[
        (7, 9, 18, 90),
        (9, 24, 18, 66),
        (24, 41, 52, 65),
        (41, 63, 16, 65),
        (63, 66, 2, 65),
        (66, 78, 27, 65),
        (78, 93, 27, 30),
    ])
}
