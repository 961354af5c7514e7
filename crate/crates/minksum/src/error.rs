//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by body construction, closed-form evaluation, solving, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Semi-axes or exponents outside the valid (convex, finite) range.
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// Linear map too close to singular to invert reliably.
    #[error("linear map is numerically singular (det = {det:.3e})")]
    SingularTransform { det: f64 },

    /// A matrix that must be symmetric positive definite is not.
    #[error("matrix is not symmetric positive definite")]
    NotSpd,

    /// A gradient-direction argument was the zero vector.
    #[error("gradient vector is zero")]
    ZeroGradient,

    /// Gradient components violate the realizability constraint of the body.
    #[error("gradient is not realizable on this body (gamma = {gamma:.3e})")]
    InconsistentGradient { gamma: f64 },

    /// Grid specification incompatible with the body dimension or empty.
    #[error("invalid grid: {0}")]
    GridMismatch(String),

    /// Convex hull input had fewer than three non-collinear points.
    #[error("hull input is degenerate (fewer than three non-collinear points)")]
    DegenerateHull,

    /// Polygon vertices are not in strictly convex counter-clockwise order.
    #[error("polygon is not strictly convex: {0}")]
    NonConvexPolygon(String),

    /// Proximity query with coincident centers has no ray direction.
    #[error("query centers coincide")]
    DegenerateQuery,

    /// A residual function returned a non-finite value at the given point.
    #[error("residual evaluation failed at {at:?}")]
    ResidualEvaluation { at: Vec<f64> },

    /// A boundary-cloud point could not be evaluated; carries the offending parameter.
    #[error("boundary point {index} (phi {phi:?}) failed: {source}")]
    CloudPoint {
        index: usize,
        phi: Vec<f64>,
        #[source]
        source: Box<Error>,
    },

    /// An operation defined only for contact-mode clouds received a sum-mode cloud.
    #[error("operation requires a contact-mode cloud")]
    ContactModeRequired,

    /// Body description field missing or malformed; names the field.
    #[error("body field `{field}`: {message}")]
    BodyFormat { field: String, message: String },

    /// Scene description malformed.
    #[error("scene: {0}")]
    SceneFormat(String),

    /// Dimension of an input does not match what the operation supports.
    #[error("unsupported dimension {got} (expected {expected})")]
    Dimension { expected: usize, got: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
