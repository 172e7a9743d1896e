//! Curve coordinates, their real/imaginary split, foci, and the shift
//! sequence.
//!
//! Integrating a complex unit tangent componentwise gives a complex curve
//! whose real part is a clothoid helix (linear curvature and torsion in
//! arclength) and whose imaginary part is a planar clothoid spiral. For
//! cases one and two the integrals are Fresnel integrals with a quadratic
//! phase, so positions come in closed form; cases three and four go through
//! adaptive quadrature of the tangent map instead.
//!
//! Closed forms, case one, unshifted (r = √(k²+1), a = r/(2c²)):
//!
//! ```text
//! x(s) = k·Fc(s) + i(k²/r)·Fs(s)
//! y(s) = −k·Fs(s) + i(k²/r)·Fc(s)
//! z(s) = s/r
//! ```
//!
//! where (Fc, Fs) are the scaled Fresnel integrals ∫₀ˢ cos(aσ²), ∫₀ˢ sin(aσ²).
//! Case two is the mirror (x, −y, −z), computed through the same code path so
//! the relation is machine-exact.
//!
//! Shifted families (k = 1, s̃ = s + δ, a = 1/(√2c²), φ = δ²a) rotate the
//! Fresnel pair of the shifted argument by φ before assembling coordinates;
//! those closed forms vanish at s̃ = 0 rather than s = 0, and
//! [`position_rezeroed`] subtracts the s = 0 offset when a curve through the
//! origin is wanted.
//!
//! The real (x, y) projection spirals into two limit points as s → ±∞ — the
//! foci. Their positions follow from the Fresnel limits ±1/2; for shifted
//! families the approach direction rotates with φ, and the special shifts
//! δ_n = 2^{1/4}c√((2n+1)π/2) put the foci back on a bisectrix of the plane.

use nalgebra::Vector3;
use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::fresnel::fresnel_scaled;
use crate::quadrature::integrate_triple;
use crate::riccati::HelixParams;
use crate::tangent_map::{fundamental_set, tangent_from_quadruple, Case};

/// A complex position (or any complex 3-vector with length units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexTriple {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl ComplexTriple {
    pub const ZERO: Self = Self {
        x: Complex64::ZERO,
        y: Complex64::ZERO,
        z: Complex64::ZERO,
    };

    /// Componentwise (x, −y, −z), relating cases one and two.
    pub fn mirrored(&self) -> Self {
        Self {
            x: self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Self {
            x: self.x - other.x,
            y: self.y - other.y,
            z: self.z - other.z,
        }
    }
}

/// Componentwise real and imaginary parts: the helix and the spiral.
pub fn split_parts(t: &ComplexTriple) -> (Vector3<f64>, Vector3<f64>) {
    (
        Vector3::new(t.x.re, t.y.re, t.z.re),
        Vector3::new(t.x.im, t.y.im, t.z.im),
    )
}

/// One sampled point of a complex curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub s: f64,
    pub position: ComplexTriple,
}

/// A complex curve sampled on a strictly increasing arclength grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub params: HelixParams,
    pub case: Case,
    pub samples: Vec<CurveSample>,
}

/// The two limit points of the real (x, y) projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Foci {
    /// (x, y) limit as s → +∞.
    pub plus: [f64; 2],
    /// (x, y) limit as s → −∞; always −plus.
    pub minus: [f64; 2],
    pub bisectrix: Bisectrix,
}

/// Which diagonal of the (x, y) plane the foci lie on, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bisectrix {
    /// y = x.
    First,
    /// y = −x.
    Second,
    Neither,
}

fn require_helix(p: HelixParams) -> Result<()> {
    if p.k() == 0.0 {
        return Err(Error::DegenerateHelix);
    }
    Ok(())
}

/// Closed-form position for cases one and two.
///
/// Unshifted curves pass through the origin at s = 0; shifted ones vanish at
/// s̃ = 0 instead (see [`position_rezeroed`]). The third component is real:
/// the imaginary part of the curve is planar.
pub fn position_closed_form(case: Case, s: f64, p: HelixParams) -> Result<ComplexTriple> {
    ensure_finite("s", s)?;
    require_helix(p)?;
    if !case.has_closed_form() {
        return Err(Error::Unsupported(format!(
            "no closed-form position for case {}; use quadrature",
            case.id()
        )));
    }
    let triple = if p.delta() == 0.0 {
        unshifted_position(s, p)?
    } else {
        shifted_position(s, p)?
    };
    Ok(match case {
        Case::One => triple,
        _ => triple.mirrored(),
    })
}

fn unshifted_position(s: f64, p: HelixParams) -> Result<ComplexTriple> {
    let k = p.k();
    let r = k.hypot(1.0);
    let a = r / (2.0 * p.c() * p.c());
    let (fc, fs) = fresnel_scaled(s, a)?;
    let transverse = k * k / r;
    Ok(ComplexTriple {
        x: Complex64::new(k * fc, transverse * fs),
        y: Complex64::new(-k * fs, transverse * fc),
        z: Complex64::new(s / r, 0.0),
    })
}

fn shifted_position(s: f64, p: HelixParams) -> Result<ComplexTriple> {
    // k = 1 (enforced at construction); r = √2.
    let shifted = p.shifted_arclength(s);
    let a = std::f64::consts::SQRT_2 / (2.0 * p.c() * p.c());
    let phi = p.delta() * p.delta() * a;
    let (fc, fs) = fresnel_scaled(shifted, a)?;
    let (sin_phi, cos_phi) = phi.sin_cos();
    // Fresnel pair of the shifted argument, rotated by the constant phase φ.
    let f1 = cos_phi * fc + sin_phi * fs;
    let f2 = -sin_phi * fc + cos_phi * fs;
    let transverse = 1.0 / std::f64::consts::SQRT_2;
    Ok(ComplexTriple {
        x: Complex64::new(f1, transverse * f2),
        y: Complex64::new(-f2, transverse * f1),
        z: Complex64::new(s * transverse, 0.0),
    })
}

/// Closed-form position shifted so the curve passes through the origin at
/// s = 0, regardless of δ. Identical to [`position_closed_form`] for δ = 0.
pub fn position_rezeroed(case: Case, s: f64, p: HelixParams) -> Result<ComplexTriple> {
    let at_s = position_closed_form(case, s, p)?;
    let at_zero = position_closed_form(case, 0.0, p)?;
    Ok(at_s.sub(&at_zero))
}

/// Absolute per-component tolerance for [`position_quadrature`].
pub const QUADRATURE_TOLERANCE: f64 = 1e-10;

/// Position by adaptive quadrature of the tangent map from 0 to s.
///
/// Works for all four cases and never touches the closed forms, so it serves
/// as an independent oracle for them. Note the integral starts at 0: for
/// shifted families this matches [`position_rezeroed`], not the raw closed
/// form.
pub fn position_quadrature(case: Case, s: f64, p: HelixParams) -> Result<ComplexTriple> {
    ensure_finite("s", s)?;
    require_helix(p)?;
    // Surface unsupported case/δ combinations before integrating.
    fundamental_set(case, 0.0, p)?;
    let tangent = |sigma: f64| {
        let q = fundamental_set(case, sigma, p)
            .expect("validated case and finite sigma");
        let t = tangent_from_quadruple(&q)
            .expect("helix quadruples are non-degenerate for k != 0");
        [t.x, t.y, t.z]
    };
    let (value, achieved) = integrate_triple(&tangent, 0.0, s, QUADRATURE_TOLERANCE);
    if achieved > QUADRATURE_TOLERANCE {
        return Err(Error::QuadratureTolerance {
            requested: QUADRATURE_TOLERANCE,
            achieved,
        });
    }
    Ok(ComplexTriple {
        x: value[0],
        y: value[1],
        z: value[2],
    })
}

/// Samples a curve on a uniform inclusive grid of n points.
///
/// Cases one and two use the closed forms; cases three and four fall back to
/// quadrature (and are limited to δ = 0).
pub fn sample_curve(
    case: Case,
    p: HelixParams,
    s_min: f64,
    s_max: f64,
    n: usize,
) -> Result<Curve> {
    ensure_finite("s_min", s_min)?;
    ensure_finite("s_max", s_max)?;
    if s_min >= s_max {
        return Err(Error::InvalidParameter(format!(
            "need s_min < s_max, got [{s_min}, {s_max}]"
        )));
    }
    if n < 2 {
        return Err(Error::InvalidSamples(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    require_helix(p)?;
    let span = s_max - s_min;
    let mut samples = Vec::with_capacity(n);
    for i in 0..n {
        let s = s_min + span * (i as f64 / (n - 1) as f64);
        let position = if case.has_closed_form() {
            position_closed_form(case, s, p)?
        } else {
            position_quadrature(case, s, p)?
        };
        samples.push(CurveSample { s, position });
    }
    if samples.windows(2).any(|w| w[0].s >= w[1].s) {
        return Err(Error::InvalidSamples(format!(
            "grid of {n} points on [{s_min}, {s_max}] collapsed in floating point"
        )));
    }
    Ok(Curve {
        params: p,
        case,
        samples,
    })
}

/// Relative tolerance deciding whether the foci lie on a bisectrix.
const BISECTRIX_TOLERANCE: f64 = 1e-12;

/// The s → ±∞ limit points of the real (x, y) projection.
///
/// Unshifted: the foci sit on the second bisectrix (case one) or the first
/// (case two), at distance |c·k|√(π/2)/(k²+1)^{1/4}·… from the origin along
/// the diagonal. Shifted families rotate off the diagonals except at the
/// special shifts produced by [`delta_sequence`].
pub fn foci(case: Case, p: HelixParams) -> Result<Foci> {
    require_helix(p)?;
    if !case.has_closed_form() {
        return Err(Error::Unsupported(format!(
            "foci are defined for cases one and two only, got case {}",
            case.id()
        )));
    }
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let (x, y) = if p.delta() == 0.0 {
        let k = p.k();
        let a = p.c() * k * sqrt_pi / (2.0 * k.hypot(1.0).sqrt());
        (a, -a)
    } else {
        // k = 1: prefactor c√π/2^{5/4}, direction rotated by φ.
        let prefactor = p.c() * sqrt_pi / (2.0_f64.sqrt().sqrt() * 2.0);
        let phi = p.delta() * p.delta() * std::f64::consts::SQRT_2 / (2.0 * p.c() * p.c());
        let (sin_phi, cos_phi) = phi.sin_cos();
        (
            prefactor * (cos_phi + sin_phi),
            prefactor * (sin_phi - cos_phi),
        )
    };
    let (x, y) = match case {
        Case::One => (x, y),
        _ => (x, -y),
    };
    Ok(Foci {
        plus: [x, y],
        minus: [-x, -y],
        bisectrix: classify_bisectrix(x, y),
    })
}

fn classify_bisectrix(x: f64, y: f64) -> Bisectrix {
    let scale = x.abs().max(y.abs()).max(1.0);
    if (x.abs() - y.abs()).abs() > BISECTRIX_TOLERANCE * scale {
        return Bisectrix::Neither;
    }
    if x * y > 0.0 {
        Bisectrix::First
    } else {
        Bisectrix::Second
    }
}

/// The shifts δ_n = 2^{1/4}·c·√((2n+1)π/2), n = 0..=n_max, at which the
/// shifted foci return to a bisectrix (the positive branch; the sequence is
/// symmetric under δ → −δ).
pub fn delta_sequence(n_max: usize, c: f64) -> Result<Vec<f64>> {
    ensure_finite("c", c)?;
    if c <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "dilation parameter c must be positive, got {c}"
        )));
    }
    let fourth_root_of_two = std::f64::consts::SQRT_2.sqrt();
    Ok((0..=n_max)
        .map(|n| {
            let half_odd_pi = (2 * n + 1) as f64 * std::f64::consts::PI / 2.0;
            fourth_root_of_two * c * half_odd_pi.sqrt()
        })
        .collect())
}
