//! Clothoid helices on the complexified sphere: construction, sampling, and
//! verification.
//!
//! The pipeline has three layers:
//!
//! * a Riccati reduction of the Frenet-Serret system for curves whose
//!   curvature and torsion grow linearly in arclength ([`riccati`]),
//! * a quadruple-of-solutions map that turns one Riccati solution into a
//!   complex unit tangent ([`scheffers`]) and, by integration, into curve
//!   coordinates built from Fresnel integrals ([`curve`]),
//! * independent numerical checks — direct quadrature of the tangent field
//!   and Frenet-frame integration — that validate the closed forms
//!   ([`frenet`]).
//!
//! Everything downstream is deterministic double-precision arithmetic; the
//! closed forms agree with the numerical routes to ~1e-10 or better, and each
//! module's tests pin that down.

pub mod curve;
pub mod error;
pub mod fresnel;
mod quadrature;
pub mod riccati;
pub mod tangent_map;

pub use curve::{
    delta_sequence, foci, position_closed_form, position_quadrature, position_rezeroed,
    sample_curve, split_parts, Bisectrix, ComplexTriple, Curve, CurveSample, Foci,
};
pub use error::{Error, Result};
pub use fresnel::{fresnel, fresnel_scaled, FresnelPair};
pub use riccati::{
    clothoid_phase, clothoid_solution, clothoid_solution_derivative, riccati_integrate,
    riccati_rhs, CurvatureTorsionProfile, HelixParams, RiccatiConstants, RiccatiTrajectory,
};
pub use tangent_map::{
    fundamental_set, tangent_closed_form, tangent_derivatives, tangent_from_quadruple, Case,
    FundamentalQuadruple, TangentJet, TangentTriple,
};
