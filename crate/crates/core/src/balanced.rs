//! Greedy partition of a monotone slab sequence into balanced groups.

use serde::{Deserialize, Serialize};

use crate::decomposition::{Decomposition, PolygonClass, Slab};
use crate::error::SolveError;

/// Maximal run of slabs crossed by one horizontal corridor `[m, M]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BalancedGroup {
    /// 1-based index of the first slab.
    pub first: usize,
    /// 1-based index of the last slab, inclusive.
    pub last: usize,
    /// `M`: smallest upper y over the group.
    pub upper_bound: i64,
    /// `m`: largest lower y over the group.
    pub lower_bound: i64,
    pub x_left: i64,
    pub x_right: i64,
}

impl BalancedGroup {
    pub fn len(&self) -> usize {
        self.last + 1 - self.first
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_level(&self, y: i64) -> bool {
        self.lower_bound <= y && y <= self.upper_bound
    }
}

/// `(m, M)`.
pub fn group_corridor(g: &BalancedGroup) -> (i64, i64) {
    (g.lower_bound, g.upper_bound)
}

/// Runs the light-beam scan over slabs given left to right. A new group starts
/// at slab `i` when `u_i` drops below the running max of `l`, or `l_i` rises
/// above the running min of `u`.
pub fn balanced_groups(slabs: &[Slab]) -> Vec<BalancedGroup> {
    let mut groups = Vec::new();
    let Some(first) = slabs.first() else {
        return groups;
    };
    let mut cur = open(first);
    for s in &slabs[1..] {
        if s.upper < cur.lower_bound || s.lower > cur.upper_bound {
            groups.push(cur);
            cur = open(s);
        } else {
            cur.last = s.index;
            cur.x_right = s.x_right;
            cur.upper_bound = cur.upper_bound.min(s.upper);
            cur.lower_bound = cur.lower_bound.max(s.lower);
        }
    }
    groups.push(cur);
    groups
}

fn open(s: &Slab) -> BalancedGroup {
    BalancedGroup {
        first: s.index,
        last: s.index,
        upper_bound: s.upper,
        lower_bound: s.lower,
        x_left: s.x_left,
        x_right: s.x_right,
    }
}

pub fn decompose_balanced(d: &Decomposition) -> Result<Vec<BalancedGroup>, SolveError> {
    if d.class() != PolygonClass::Monotone {
        return Err(SolveError::NotMonotone);
    }
    Ok(balanced_groups(d.slabs()))
}
