use thiserror::Error;

/// Reasons a vertex list is rejected as an orthogonal polygon.
///
/// Indices refer to the input list after a repeated closing vertex has been
/// dropped. Edge `i` runs from vertex `i` to vertex `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("polygon needs at least 4 vertices, got {count}")]
    TooFewVertices { count: usize },
    #[error("orthogonal polygons have an even vertex count, got {count}")]
    OddVertexCount { count: usize },
    #[error("vertex {index} has a coordinate outside ±2^31")]
    CoordinateOutOfRange { index: usize },
    #[error("edge {index} has zero length")]
    ZeroLengthEdge { index: usize },
    #[error("edge {index} is not axis-parallel")]
    NonOrthogonalEdge { index: usize },
    #[error("edges meeting at vertex {index} are collinear")]
    CollinearConsecutiveEdges { index: usize },
    #[error("edge {index} intersects edge {other}")]
    SelfIntersection { index: usize, other: usize },
}

/// Failures of the route pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("polygon is not x-monotone")]
    NotMonotone,
    #[error("dual graph of the vertical decomposition is not a path")]
    DualGraphNotPath,
    #[error("level {level} of group {group} lies outside its corridor")]
    LevelOutOfCorridor { group: usize, level: i64 },
    #[error("level count {levels} does not match group count {groups}")]
    LevelCountMismatch { groups: usize, levels: usize },
    #[error("polygon is not orthoconvex")]
    NotOrthoconvex,
    #[error("orthoconvex polygon has an empty kernel")]
    EmptyKernel,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("sampling step must be positive")]
    StepNonPositive,
    #[error("segment is not contained in the polygon")]
    SegmentOutsidePolygon,
    #[error("brute-force search is limited to {limit} slabs, polygon has {slabs}")]
    TooLarge { slabs: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
}
