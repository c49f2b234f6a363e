//! Error type shared across the kernel.

use thiserror::Error;

/// Everything that can go wrong constructing or verifying spherical tilings.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Geometric input is degenerate (coincident or antipodal points, zero vectors).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A polygon angle lies outside its admissible interval.
    #[error("angle {angle} rad out of range for n={n}: requires {min} < angle <= {max}")]
    AngleOutOfRange { n: u32, angle: f64, min: f64, max: f64 },

    /// A polygon side length lies outside its admissible interval.
    #[error("side {side} rad out of range for n={n}: requires 0 < side <= {max}")]
    SideOutOfRange { n: u32, side: f64, max: f64 },

    /// An edge supplied for placement does not match the tile's side length.
    #[error("edge length mismatch: measured {measured} rad, tile side requires {required} rad")]
    LengthMismatch { measured: f64, required: f64 },

    /// A polygon boundary is self-intersecting or otherwise not simple.
    #[error("invalid polygon boundary: {0}")]
    InvalidPolygon(String),

    /// A function was evaluated outside its open domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A catalog family name, variant, or parameter is not admissible.
    #[error("invalid family or parameter: {0}")]
    InvalidFamily(String),

    /// A multi-step construction failed an internal audit.
    #[error("construction failed: {0}")]
    Construction(String),

    /// A compose/decompose target is not applicable.
    #[error("invalid transform target: {0}")]
    InvalidTarget(String),

    /// Input file is malformed.
    #[error("format error: {0}")]
    Format(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
