//! From Riccati solutions to complex unit tangents.
//!
//! A Riccati solution is a ratio w = (Cf₁ + f₂)/(Cf₃ + f₄) of four
//! "fundamental" functions, determined up to the integration constant C and a
//! common rescaling. The classical tangent map sends such a quadruple to the
//! three components of a complex unit tangent vector:
//!
//! ```text
//! α₁ = (f₁² − f₂² − f₃² + f₄²) / (2d),
//! α₂ = i(f₁² + f₂² − f₃² − f₄²) / (2d),
//! α₃ = (f₃f₄ − f₁f₂) / d,                 d = f₁f₄ − f₂f₃,
//! ```
//!
//! which satisfies the bilinear normalization α₁² + α₂² + α₃² = 1 (a complex
//! sum of squares, not a Hermitian norm) identically in the fᵢ — the map
//! lands on the complexified unit sphere for *any* non-degenerate quadruple.
//!
//! For the clothoid helix family the four functions are drawn from
//! {w₁E, w₂, E, 1} with E = e^{iθ(s)}, and the four distinct placements are
//! the four [`Case`]s. Cases one and two admit closed-form tangents (and,
//! downstream, closed-form curves); cases three and four are evaluated
//! numerically through the same map. Note the quadruples use the
//! positive-phase exponential, so the recovered ratio (f₁ + f₂)/(f₃ + f₄) is
//! the *conjugate* of the closed-form solution in the Riccati module.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};
use crate::riccati::{clothoid_phase, clothoid_phase_rates, HelixParams, RiccatiConstants};

/// The four placements of {w₁E, w₂, E, 1} into a fundamental quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    One,
    Two,
    Three,
    Four,
}

impl Case {
    /// Maps the conventional numeric labels 1..4 to cases.
    pub fn from_id(id: u32) -> Result<Self> {
        match id {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            4 => Ok(Self::Four),
            _ => Err(Error::InvalidParameter(format!(
                "case id must be 1..4, got {id}"
            ))),
        }
    }

    pub fn id(self) -> u32 {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Three => 3,
            Self::Four => 4,
        }
    }

    /// Whether closed-form tangents and curves exist for this case.
    pub fn has_closed_form(self) -> bool {
        matches!(self, Self::One | Self::Two)
    }
}

/// Four fundamental-function values at one arclength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalQuadruple {
    pub f1: Complex64,
    pub f2: Complex64,
    pub f3: Complex64,
    pub f4: Complex64,
}

impl FundamentalQuadruple {
    /// d = f₁f₄ − f₂f₃, the determinant that must stay away from zero.
    pub fn discriminant(&self) -> Complex64 {
        self.f1 * self.f4 - self.f2 * self.f3
    }

    /// The Riccati solution this quadruple represents at integration
    /// constant C = 1: (f₁ + f₂)/(f₃ + f₄).
    pub fn ratio(&self) -> Complex64 {
        (self.f1 + self.f2) / (self.f3 + self.f4)
    }
}

/// Complex tangent components along the three coordinate axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentTriple {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl TangentTriple {
    /// The bilinear square x² + y² + z² (equals 1 on the image of the map).
    pub fn bilinear_square(&self) -> Complex64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Componentwise (x, −y, −z), the relation between cases one and two.
    pub fn mirrored(&self) -> Self {
        Self {
            x: self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

/// Relative factor defining quadruple degeneracy: |d| must exceed this times
/// the largest |fᵢ|², making the test invariant under common rescaling.
const DEGENERACY_FACTOR: f64 = 1e-12;

/// Applies the tangent map to a quadruple.
///
/// Fails when the discriminant is degenerate relative to the quadruple's
/// scale; on success the bilinear normalization holds to ~1e-12.
pub fn tangent_from_quadruple(q: &FundamentalQuadruple) -> Result<TangentTriple> {
    let d = q.discriminant();
    let scale = q
        .f1
        .norm_sqr()
        .max(q.f2.norm_sqr())
        .max(q.f3.norm_sqr())
        .max(q.f4.norm_sqr());
    let threshold = DEGENERACY_FACTOR * scale;
    if d.norm() <= threshold {
        return Err(Error::DegenerateQuadruple {
            discriminant: d.norm(),
            threshold,
        });
    }
    let (s1, s2, s3, s4) = (q.f1 * q.f1, q.f2 * q.f2, q.f3 * q.f3, q.f4 * q.f4);
    let two_d = 2.0 * d;
    Ok(TangentTriple {
        x: (s1 - s2 - s3 + s4) / two_d,
        y: Complex64::I * (s1 + s2 - s3 - s4) / two_d,
        z: (q.f3 * q.f4 - q.f1 * q.f2) / d,
    })
}

/// Builds the fundamental quadruple for a case at arclength s.
///
/// The ingredients are E = e^{iθ(s)}, the fixed points w₁, w₂, and the
/// constants 1 — placed per case as
///
/// ```text
/// one:   (w₁E, w₂, E, 1)      two:  (w₂, w₁E, 1, E)
/// three: (w₁E, w₂, 1, E)      four: (w₂, w₁E, E, 1)
/// ```
///
/// Shifted families (δ ≠ 0) are only defined for cases one and two.
pub fn fundamental_set(case: Case, s: f64, p: HelixParams) -> Result<FundamentalQuadruple> {
    ensure_finite("s", s)?;
    if p.delta() != 0.0 && !case.has_closed_form() {
        return Err(Error::Unsupported(format!(
            "shifted families are only defined for cases one and two, got case {}",
            case.id()
        )));
    }
    let roots = RiccatiConstants::for_ratio(p.k());
    let e = Complex64::from_polar(1.0, clothoid_phase(s, p));
    let one = Complex64::ONE;
    let (w1, w2) = (roots.plus_root, roots.minus_root);
    let (f1, f2, f3, f4) = match case {
        Case::One => (w1 * e, w2 * one, e, one),
        Case::Two => (w2 * one, w1 * e, one, e),
        Case::Three => (w1 * e, w2 * one, one, e),
        Case::Four => (w2 * one, w1 * e, e, one),
    };
    Ok(FundamentalQuadruple { f1, f2, f3, f4 })
}

/// Closed-form tangent for cases one and two.
///
/// Case one, with θ = θ(s) and r = √(k²+1):
///
/// ```text
/// α₁ = k[cos θ + i(k/r) sin θ],
/// α₂ = k[−sin θ + i(k/r) cos θ],
/// α₃ = 1/r,
/// ```
///
/// and case two is the mirror (α₁, −α₂, −α₃) — including the shifted
/// families, whose third component flips sign like the unshifted one.
pub fn tangent_closed_form(case: Case, s: f64, p: HelixParams) -> Result<TangentTriple> {
    ensure_finite("s", s)?;
    if !case.has_closed_form() {
        return Err(Error::Unsupported(format!(
            "no closed-form tangent for case {}; use the quadruple map",
            case.id()
        )));
    }
    let triple = case_one_tangent(clothoid_phase(s, p), p.k());
    Ok(match case {
        Case::One => triple,
        _ => triple.mirrored(),
    })
}

fn case_one_tangent(theta: f64, k: f64) -> TangentTriple {
    let r = k.hypot(1.0);
    let (sin, cos) = theta.sin_cos();
    TangentTriple {
        x: k * Complex64::new(cos, (k / r) * sin),
        y: k * Complex64::new(-sin, (k / r) * cos),
        z: Complex64::new(1.0 / r, 0.0),
    }
}

/// Value, first, and second arclength derivative of a closed-form tangent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentJet {
    pub value: TangentTriple,
    pub first: TangentTriple,
    pub second: TangentTriple,
}

/// Analytic derivative jet of [`tangent_closed_form`].
///
/// The case-one components rotate with the phase: dα₁/dθ = α₂ and
/// dα₂/dθ = −α₁ while α₃ is constant, so with θ′ = dθ/ds, θ″ = d²θ/ds²
///
/// ```text
/// α′ = θ′(α₂, −α₁, 0),      α″ = θ″(α₂, −α₁, 0) − θ′²(α₁, α₂, 0),
/// ```
///
/// and case two mirrors every order componentwise.
pub fn tangent_derivatives(case: Case, s: f64, p: HelixParams) -> Result<TangentJet> {
    ensure_finite("s", s)?;
    if !case.has_closed_form() {
        return Err(Error::Unsupported(format!(
            "no closed-form tangent jet for case {}",
            case.id()
        )));
    }
    let theta = clothoid_phase(s, p);
    let (rate, accel) = clothoid_phase_rates(s, p);
    let a = case_one_tangent(theta, p.k());
    let zero = Complex64::ZERO;
    let first = TangentTriple {
        x: rate * a.y,
        y: -rate * a.x,
        z: zero,
    };
    let second = TangentTriple {
        x: accel * a.y - rate * rate * a.x,
        y: -accel * a.x - rate * rate * a.y,
        z: zero,
    };
    let jet = TangentJet {
        value: a,
        first,
        second,
    };
    Ok(match case {
        Case::One => jet,
        _ => TangentJet {
            value: jet.value.mirrored(),
            first: jet.first.mirrored(),
            second: jet.second.mirrored(),
        },
    })
}
