//! The Riccati reduction of the Frenet-Serret system.
//!
//! For a curve with curvature κ(s) and torsion τ(s), the frame equations
//! collapse to a single complex Riccati equation
//!
//! ```text
//! dw/ds = −iκ(s)w + i(τ(s)/2)(w² − 1).
//! ```
//!
//! When κ and τ grow linearly with the same slope ratio k — the clothoid
//! helix family κ = k·s̃/c², τ = s̃/c² with s̃ = s + δ — the equation has the
//! closed-form solution
//!
//! ```text
//! w(s) = (w₁ e^{−iθ(s)} + w₂) / (e^{−iθ(s)} + 1),
//! θ(s) = (√(k²+1)/2) s̃²/c² + const,
//! ```
//!
//! with the real fixed points w₁ = k + √(k²+1), w₂ = k − √(k²+1). The phase
//! here is normalized so θ(0) = 0. (The positive-phase exponential solves the
//! conjugate equation instead; the fundamental quadruples in the tangent-map
//! module use that convention, so a quadruple ratio reproduces the conjugate
//! of this solution.)
//!
//! The solution has movable poles wherever θ crosses an odd multiple of π;
//! [`clothoid_solution`] reports these instead of returning garbage. A
//! classical fourth-order integrator ([`riccati_integrate`]) provides an
//! independent check of the closed form for arbitrary profiles.

use num_complex::Complex64;

use crate::error::{ensure_finite, Error, Result};

/// Parameters (k, c, δ) of a clothoid helix family: curvature κ = k·s̃/c²,
/// torsion τ = s̃/c², shifted arclength s̃ = s + δ.
///
/// Validation happens here once, so downstream evaluators take the parameters
/// as given: c must be positive, everything finite, and a nonzero shift δ is
/// only defined for k = 1 (the shifted closed forms exist only there). k = 0
/// is accepted — the Riccati machinery handles it — but curve-level
/// constructions reject it as degenerate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HelixParams {
    k: f64,
    c: f64,
    delta: f64,
}

impl HelixParams {
    pub fn new(k: f64, c: f64, delta: f64) -> Result<Self> {
        ensure_finite("k", k)?;
        ensure_finite("c", c)?;
        ensure_finite("delta", delta)?;
        if c <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "dilation parameter c must be positive, got {c}"
            )));
        }
        if delta != 0.0 && k != 1.0 {
            return Err(Error::Unsupported(format!(
                "shifted families (delta = {delta}) are only defined for k = 1, got k = {k}"
            )));
        }
        Ok(Self { k, c, delta })
    }

    /// Unshifted family with slope ratio k and dilation c.
    pub fn unshifted(k: f64, c: f64) -> Result<Self> {
        Self::new(k, c, 0.0)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// s̃ = s + δ.
    pub fn shifted_arclength(&self, s: f64) -> f64 {
        s + self.delta
    }

    /// κ(s) = k·s̃/c².
    pub fn kappa(&self, s: f64) -> f64 {
        self.k * self.shifted_arclength(s) / (self.c * self.c)
    }

    /// τ(s) = s̃/c².
    pub fn tau(&self, s: f64) -> f64 {
        self.shifted_arclength(s) / (self.c * self.c)
    }
}

/// The two real fixed points of the clothoid Riccati flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiccatiConstants {
    /// k + √(k²+1).
    pub plus_root: f64,
    /// k − √(k²+1).
    pub minus_root: f64,
}

impl RiccatiConstants {
    /// Computes both roots from the slope ratio k.
    ///
    /// The smaller-magnitude root is obtained as −1/(larger root) rather than
    /// by the subtraction k − √(k²+1), which cancels catastrophically for
    /// large |k|; the product relation plus·minus = −1 is then near-exact.
    pub fn for_ratio(k: f64) -> Self {
        let r = k.hypot(1.0);
        if k >= 0.0 {
            let plus = k + r;
            Self {
                plus_root: plus,
                minus_root: -1.0 / plus,
            }
        } else {
            let minus = k - r;
            Self {
                plus_root: -1.0 / minus,
                minus_root: minus,
            }
        }
    }
}

/// Right-hand side of the Riccati equation: −iκw + i(τ/2)(w² − 1).
pub fn riccati_rhs(w: Complex64, kappa: f64, tau: f64) -> Complex64 {
    let i = Complex64::I;
    -i * kappa * w + i * (tau / 2.0) * (w * w - 1.0)
}

/// Accumulated phase θ(s) of the closed-form solution, normalized to
/// θ(0) = 0.
///
/// Unshifted: θ = (√(k²+1)/2)·s²/c². Shifted (k = 1):
/// θ = s²/(√2 c²) + √2 δ s/c², which is the unshifted k = 1 phase of s̃
/// minus its constant value at s = 0.
pub fn clothoid_phase(s: f64, p: HelixParams) -> f64 {
    let c2 = p.c * p.c;
    if p.delta == 0.0 {
        0.5 * p.k.hypot(1.0) * s * s / c2
    } else {
        // k = 1 enforced at construction; √(k²+1)/2 = 1/√2.
        s * s / (std::f64::consts::SQRT_2 * c2) + std::f64::consts::SQRT_2 * p.delta * s / c2
    }
}

/// dθ/ds = √(k²+1)·s̃/c² and d²θ/ds² = √(k²+1)/c².
pub(crate) fn clothoid_phase_rates(s: f64, p: HelixParams) -> (f64, f64) {
    let r = p.k.hypot(1.0);
    let c2 = p.c * p.c;
    (r * p.shifted_arclength(s) / c2, r / c2)
}

/// Default angular pole tolerance for [`clothoid_solution`].
pub const POLE_TOLERANCE: f64 = 1e-10;

/// Closed-form clothoid Riccati solution
/// w(s) = (w₁e^{−iθ} + w₂)/(e^{−iθ} + 1).
///
/// Fails with a pole error when θ(s) lies within [`POLE_TOLERANCE`] radians
/// of an odd multiple of π, where the denominator vanishes. Callers that need
/// pole-free evaluation should work with the fundamental quadruples in the
/// tangent-map module, which bridge the poles.
pub fn clothoid_solution(s: f64, p: HelixParams) -> Result<Complex64> {
    clothoid_solution_with_tolerance(s, p, POLE_TOLERANCE)
}

/// [`clothoid_solution`] with an explicit angular pole tolerance (radians).
pub fn clothoid_solution_with_tolerance(
    s: f64,
    p: HelixParams,
    tolerance: f64,
) -> Result<Complex64> {
    ensure_finite("s", s)?;
    let theta = clothoid_phase(s, p);
    check_pole(s, theta, tolerance)?;
    let roots = RiccatiConstants::for_ratio(p.k);
    let e = Complex64::from_polar(1.0, -theta);
    Ok((roots.plus_root * e + roots.minus_root) / (e + 1.0))
}

/// Analytic derivative dw/ds of [`clothoid_solution`]:
/// w′ = −iθ′ · e^{−iθ} · (w₁ − w₂) / (e^{−iθ} + 1)².
pub fn clothoid_solution_derivative(s: f64, p: HelixParams) -> Result<Complex64> {
    ensure_finite("s", s)?;
    let theta = clothoid_phase(s, p);
    check_pole(s, theta, POLE_TOLERANCE)?;
    let (rate, _) = clothoid_phase_rates(s, p);
    let roots = RiccatiConstants::for_ratio(p.k);
    let e = Complex64::from_polar(1.0, -theta);
    let denom = (e + 1.0) * (e + 1.0);
    Ok(-Complex64::I * rate * e * (roots.plus_root - roots.minus_root) / denom)
}

fn check_pole(s: f64, theta: f64, tolerance: f64) -> Result<()> {
    use std::f64::consts::PI;
    let wrapped = theta.rem_euclid(2.0 * PI);
    if (wrapped - PI).abs() <= tolerance {
        return Err(Error::RiccatiPole {
            s,
            phase: theta,
            tolerance,
        });
    }
    Ok(())
}

/// A curvature/torsion pair as functions of arclength, the input both
/// numerical integrators share.
pub struct CurvatureTorsionProfile {
    pub kappa: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub tau: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl CurvatureTorsionProfile {
    pub fn new(
        kappa: impl Fn(f64) -> f64 + Send + Sync + 'static,
        tau: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            kappa: Box::new(kappa),
            tau: Box::new(tau),
        }
    }

    /// The linear profile of a clothoid helix family.
    pub fn clothoid(p: HelixParams) -> Self {
        Self::new(move |s| p.kappa(s), move |s| p.tau(s))
    }

    /// Constant curvature and torsion (circle, circular helix, or line).
    pub fn constant(kappa: f64, tau: f64) -> Self {
        Self::new(move |_| kappa, move |_| tau)
    }
}

/// Default magnitude at which [`riccati_integrate`] declares a blow-up.
pub const BLOW_UP_THRESHOLD: f64 = 1e8;

/// Where and how large a Riccati trajectory was when it exceeded the blow-up
/// threshold. Not a failure: the solutions have movable poles, and hitting
/// one is informative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlowUp {
    /// First step endpoint at which the magnitude exceeded the threshold.
    pub s: f64,
    /// The offending magnitude |w|.
    pub magnitude: f64,
}

/// A numerically integrated Riccati trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct RiccatiTrajectory {
    /// (s, w) pairs ordered by integration direction, starting at (s0, w0).
    /// Every recorded w is below the blow-up threshold.
    pub samples: Vec<(f64, Complex64)>,
    /// Set when integration stopped early because |w| exceeded the threshold.
    pub blow_up: Option<BlowUp>,
}

impl RiccatiTrajectory {
    /// The last recorded (s, w) pair.
    pub fn end(&self) -> (f64, Complex64) {
        *self.samples.last().expect("trajectory contains at least the initial point")
    }
}

/// Classical fourth-order integration of the Riccati equation from (s0, w0)
/// to s1, recording every step. See [`riccati_integrate_with_threshold`].
pub fn riccati_integrate(
    profile: &CurvatureTorsionProfile,
    w0: Complex64,
    s0: f64,
    s1: f64,
    step: f64,
) -> RiccatiTrajectory {
    riccati_integrate_with_threshold(profile, w0, s0, s1, step, BLOW_UP_THRESHOLD)
}

/// [`riccati_integrate`] with an explicit blow-up threshold.
///
/// `step` is a positive step size; integration runs toward s1 from either
/// side, with the final step shortened to land on s1 exactly. Local accuracy
/// is O(step⁵) per step away from poles. If |w| exceeds the threshold the
/// trajectory ends at the last valid point and `blow_up` records the
/// crossing.
pub fn riccati_integrate_with_threshold(
    profile: &CurvatureTorsionProfile,
    w0: Complex64,
    s0: f64,
    s1: f64,
    step: f64,
    threshold: f64,
) -> RiccatiTrajectory {
    assert!(step > 0.0 && step.is_finite(), "step must be positive and finite");
    let span = s1 - s0;
    let n_steps = (span.abs() / step).ceil().max(1.0) as usize;
    let h = span / n_steps as f64;

    let mut samples = Vec::with_capacity(n_steps + 1);
    samples.push((s0, w0));
    let mut w = w0;
    for i in 0..n_steps {
        let s = s0 + i as f64 * h;
        let k1 = rhs_at(profile, s, w);
        let k2 = rhs_at(profile, s + 0.5 * h, w + 0.5 * h * k1);
        let k3 = rhs_at(profile, s + 0.5 * h, w + 0.5 * h * k2);
        let k4 = rhs_at(profile, s + h, w + h * k3);
        w += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        let s_next = if i + 1 == n_steps { s1 } else { s0 + (i + 1) as f64 * h };
        if !w.re.is_finite() || !w.im.is_finite() || w.norm() > threshold {
            return RiccatiTrajectory {
                samples,
                blow_up: Some(BlowUp {
                    s: s_next,
                    magnitude: w.norm(),
                }),
            };
        }
        samples.push((s_next, w));
    }
    RiccatiTrajectory {
        samples,
        blow_up: None,
    }
}

fn rhs_at(profile: &CurvatureTorsionProfile, s: f64, w: Complex64) -> Complex64 {
    riccati_rhs(w, (profile.kappa)(s), (profile.tau)(s))
}
