use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty figure")]
    EmptyFigure,

    #[error("not full-dimensional")]
    NotFullDimensional,

    #[error("negative scale factor {0}")]
    NegativeScale(f64),

    #[error("not translation-invariant: measure resultant has norm {0:.3e}")]
    NotTranslationInvariant(f64),

    #[error("great-hypersphere supported")]
    GreatHypersphereSupported,

    #[error("nonpositive weight {0}")]
    NonpositiveWeight(f64),

    #[error("infeasible radius: r = {r} < a = {a}")]
    InfeasibleRadius { a: f64, r: f64 },

    #[error("non-convex bulge: alpha = {alpha} below circumradius {circumradius}")]
    NonConvexBulge { alpha: f64, circumradius: f64 },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("bisection bracket failure: {0}")]
    Bracket(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("asymmetric profile: support asymmetry {0:.3e}")]
    AsymmetricProfile(f64),

    #[error("invalid support vector: residual {0:.3e}")]
    InvalidSupportVector(f64),

    #[error("degenerate viewport")]
    DegenerateViewport,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
