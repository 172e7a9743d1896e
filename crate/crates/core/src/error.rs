//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the construction and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input that must be finite was NaN or infinite.
    #[error("non-finite input: {name} = {value}")]
    NonFinite { name: &'static str, value: f64 },

    /// A parameter violated a structural precondition (c > 0, n >= 2, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A parameter combination the closed forms do not cover.
    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// The rational Riccati solution has a pole where the phase hits an odd
    /// multiple of pi; the fundamental-set representation bridges these points.
    #[error("Riccati pole at s = {s}: phase {phase} is within {tolerance:e} rad of an odd multiple of pi")]
    RiccatiPole { s: f64, phase: f64, tolerance: f64 },

    /// The quadruple's discriminant f1*f4 - f2*f3 vanished (relative to the
    /// squared scale of the entries), so the tangent map is undefined.
    #[error("degenerate quadruple: |discriminant| = {discriminant:e} <= threshold {threshold:e}")]
    DegenerateQuadruple { discriminant: f64, threshold: f64 },

    /// k = 0 collapses the helix onto its axis; no curve-level closed form.
    #[error("degenerate helix: k = 0 has no curve-level closed form")]
    DegenerateHelix,

    /// Adaptive quadrature stopped refining before reaching the requested
    /// absolute tolerance; the achieved estimate is reported.
    #[error("quadrature tolerance not reached: requested {requested:e}, achieved {achieved:e}")]
    QuadratureTolerance { requested: f64, achieved: f64 },

    /// Curvature vanishes at shifted arclength zero, so the torsion ratio is
    /// undefined there.
    #[error("torsion undefined at shifted arclength 0 (curvature vanishes)")]
    UndefinedTorsion,

    /// The point sets do not pin down a unique rotation (collinear or empty).
    #[error("degenerate alignment: {0}")]
    DegenerateAlignment(String),

    /// Sampled-curve input violated the stencil preconditions.
    #[error("invalid samples: {0}")]
    InvalidSamples(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks one scalar for finiteness.
pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { name, value })
    }
}
