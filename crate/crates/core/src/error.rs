use thiserror::Error;

/// Errors reported by the polytope and toric analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no primitive direction: the zero vector has no primitive part")]
    ZeroVector,

    #[error("degenerate polytope: {0}")]
    DegeneratePolytope(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point {index} is not an extreme point of the hull")]
    RedundantPoint { index: usize },

    #[error("need at least {needed} vertices in dimension {dim}, got {got}")]
    TooFewVertices { dim: usize, needed: usize, got: usize },

    #[error("analysis requires ambient dimension >= 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("origin is not interior to the polytope")]
    OriginNotInterior,

    #[error("Maslov index not defined on H2(X, L): polytope is not Q-Gorenstein (vertex {vertex})")]
    NotQGorenstein { vertex: usize },

    #[error("boundary class is zero: nonconstant membranes have nonzero boundary")]
    ZeroBoundaryClass,

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("T-singularity check only defined for surfaces (2-dimensional cones)")]
    NotSurfaceCone,

    #[error("distinctness violated: dual normal forms of {0} and {1} coincide")]
    DistinctnessViolated(String, String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
