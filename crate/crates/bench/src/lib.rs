//! Inputs shared by the benchmarks.

use orthowatch_core::{generate, GenKind, GenParams, OrthoPolygon};

/// Seeded polygon of the given kind and vertex count.
pub fn polygon(kind: GenKind, n: usize, seed: u64) -> OrthoPolygon {
    generate(&GenParams::new(kind, n, seed)).expect("benchmark parameters are feasible")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_are_exact() {
        assert_eq!(polygon(GenKind::Monotone, 1000, 1).len(), 1000);
        assert_eq!(polygon(GenKind::Path, 1000, 1).len(), 1000);
    }
}
