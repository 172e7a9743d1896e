//! Independent verification machinery built on the Frenet-Serret system.
//!
//! Two kinds of cross-checks live here:
//!
//! * **Complex-bilinear checks** ([`complex_frenet_check`]): differentiating
//!   the closed-form tangents analytically and forming the unit-speed Frenet
//!   quantities under the bilinear (non-conjugating) dot product recovers the
//!   curvature and torsion the construction was supposed to realize —
//!   κ² = (k·s̃/c²)² exactly, and torsion of magnitude |s̃|/c² (its global
//!   sign comes out negative; see the sign note below).
//! * **Real integration and recovery** ([`frenet_integrate`],
//!   [`curvature_torsion_from_samples`], [`rigid_align`]): integrating the
//!   frame equations T′ = κN, N′ = −κT + τB, B′ = −τN for a prescribed
//!   profile produces a reference curve; finite-difference recovery of κ, τ
//!   from any sampled curve plus rigid alignment then lets tests confirm
//!   that the real part of a complex helix is itself a clothoid helix.
//!
//! Sign note: the bilinear triple-product torsion of these curves is
//! −s̃/c² for both closed-form cases. The checks therefore assert magnitude
//! plus global sign-consistency rather than assuming a convention.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::riccati::{CurvatureTorsionProfile, HelixParams};
use crate::tangent_map::{tangent_derivatives, Case, TangentTriple};

/// Position plus orthonormal frame of a unit-speed curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetState {
    pub position: Vector3<f64>,
    pub tangent: Vector3<f64>,
    pub normal: Vector3<f64>,
    pub binormal: Vector3<f64>,
}

impl FrenetState {
    /// Standard frame at the origin: T = x̂, N = ŷ, B = ẑ.
    pub fn canonical() -> Self {
        Self {
            position: Vector3::zeros(),
            tangent: Vector3::x(),
            normal: Vector3::y(),
            binormal: Vector3::z(),
        }
    }

    /// Largest deviation of the frame's Gram matrix from the identity,
    /// together with the orientation defect |det − 1|. Zero for a perfect
    /// right-handed orthonormal frame.
    pub fn frame_defect(&self) -> f64 {
        let basis = [self.tangent, self.normal, self.binormal];
        let mut worst = 0.0_f64;
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((u.dot(v) - target).abs());
            }
        }
        let det = Matrix3::from_columns(&basis).determinant();
        worst.max((det - 1.0).abs())
    }

    fn re_orthonormalize(&mut self) {
        // Modified Gram-Schmidt in T → N → B order.
        self.tangent /= self.tangent.norm();
        self.normal -= self.normal.dot(&self.tangent) * self.tangent;
        self.normal /= self.normal.norm();
        self.binormal -= self.binormal.dot(&self.tangent) * self.tangent;
        self.binormal -= self.binormal.dot(&self.normal) * self.normal;
        self.binormal /= self.binormal.norm();
    }
}

/// Classical fourth-order integration of the Frenet-Serret system, with the
/// frame re-orthonormalized (modified Gram-Schmidt, T → N → B) after every
/// step so orthonormality cannot drift.
///
/// `step` is a positive step size; the final step is shortened to land on s1
/// exactly, and integration runs from either side of s0.
pub fn frenet_integrate(
    profile: &CurvatureTorsionProfile,
    init: FrenetState,
    s0: f64,
    s1: f64,
    step: f64,
) -> Vec<(f64, FrenetState)> {
    assert!(step > 0.0 && step.is_finite(), "step must be positive and finite");
    let span = s1 - s0;
    let n_steps = (span.abs() / step).ceil().max(1.0) as usize;
    let h = span / n_steps as f64;

    let mut trajectory = Vec::with_capacity(n_steps + 1);
    trajectory.push((s0, init));
    let mut state = init;
    for i in 0..n_steps {
        let s = s0 + i as f64 * h;
        let k1 = derivative(profile, s, &state);
        let k2 = derivative(profile, s + 0.5 * h, &advanced(&state, &k1, 0.5 * h));
        let k3 = derivative(profile, s + 0.5 * h, &advanced(&state, &k2, 0.5 * h));
        let k4 = derivative(profile, s + h, &advanced(&state, &k3, h));
        state = FrenetState {
            position: state.position
                + (h / 6.0) * (k1.position + 2.0 * k2.position + 2.0 * k3.position + k4.position),
            tangent: state.tangent
                + (h / 6.0) * (k1.tangent + 2.0 * k2.tangent + 2.0 * k3.tangent + k4.tangent),
            normal: state.normal
                + (h / 6.0) * (k1.normal + 2.0 * k2.normal + 2.0 * k3.normal + k4.normal),
            binormal: state.binormal
                + (h / 6.0) * (k1.binormal + 2.0 * k2.binormal + 2.0 * k3.binormal + k4.binormal),
        };
        state.re_orthonormalize();
        let s_next = if i + 1 == n_steps { s1 } else { s0 + (i + 1) as f64 * h };
        trajectory.push((s_next, state));
    }
    trajectory
}

/// Frenet-Serret right-hand side, reusing FrenetState as the tangent space.
fn derivative(profile: &CurvatureTorsionProfile, s: f64, state: &FrenetState) -> FrenetState {
    let kappa = (profile.kappa)(s);
    let tau = (profile.tau)(s);
    FrenetState {
        position: state.tangent,
        tangent: kappa * state.normal,
        normal: -kappa * state.tangent + tau * state.binormal,
        binormal: -tau * state.normal,
    }
}

fn advanced(state: &FrenetState, rate: &FrenetState, h: f64) -> FrenetState {
    FrenetState {
        position: state.position + h * rate.position,
        tangent: state.tangent + h * rate.tangent,
        normal: state.normal + h * rate.normal,
        binormal: state.binormal + h * rate.binormal,
    }
}

fn bilinear_dot(a: &TangentTriple, b: &TangentTriple) -> Complex64 {
    a.x * b.x + a.y * b.y + a.z * b.z
}

fn bilinear_det(a: &TangentTriple, b: &TangentTriple, c: &TangentTriple) -> Complex64 {
    a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x)
        + a.z * (b.x * c.y - b.y * c.x)
}

/// Complex Frenet quantities of a closed-form curve at arclength s, from
/// analytic derivatives of its tangent:
///
/// ```text
/// kappa_sq = 𝒞″·𝒞″,      tau_signed = det(𝒞′, 𝒞″, 𝒞‴) / (𝒞″·𝒞″),
/// ```
///
/// both under the bilinear dot product (complexified unit-speed Frenet
/// formulas). For the clothoid helices these come out real: kappa_sq equals
/// (k·s̃/c²)² and tau_signed equals −s̃/c² for both cases.
///
/// At s̃ = 0 the curvature vanishes and the torsion quotient is undefined.
pub fn complex_frenet_check(
    case: Case,
    s: f64,
    p: HelixParams,
) -> Result<(Complex64, Complex64)> {
    if p.shifted_arclength(s) == 0.0 {
        return Err(Error::UndefinedTorsion);
    }
    let jet = tangent_derivatives(case, s, p)?;
    let kappa_sq = bilinear_dot(&jet.first, &jet.first);
    let tau = bilinear_det(&jet.value, &jet.first, &jet.second) / kappa_sq;
    Ok((kappa_sq, tau))
}

/// Recovered curvature/torsion at one interior sample of a curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaTauEstimate {
    /// Cumulative arclength from the first sample (trapezoidal).
    pub sigma: f64,
    pub kappa: f64,
    pub tau: f64,
    /// False where |r′×r″| is too small for the torsion quotient to mean
    /// anything (the curve is locally straight); tau is 0 there.
    pub tau_reliable: bool,
}

/// |r′×r″| below this multiple of |r′|³ marks torsion unreliable.
const TORSION_RELIABILITY_FACTOR: f64 = 1e-9;
/// Allowed relative wobble in the sample spacing.
const SPACING_TOLERANCE: f64 = 1e-9;

/// Estimates κ and τ along a sampled curve by central finite differences of
/// the parametric formulas
///
/// ```text
/// κ = |r′×r″| / |r′|³,      τ = (r′×r″)·r‴ / |r′×r″|²,
/// ```
///
/// on a uniform parameter grid (≥ 7 samples). Estimates are produced for the
/// interior indices 2..n−2 with O(h²) discretization error; each carries the
/// cumulative arclength σ of its sample, integrated trapezoidally from the
/// first sample.
pub fn curvature_torsion_from_samples(
    samples: &[(f64, Vector3<f64>)],
) -> Result<Vec<KappaTauEstimate>> {
    if samples.len() < 7 {
        return Err(Error::InvalidSamples(format!(
            "need at least 7 samples for the third-derivative stencil, got {}",
            samples.len()
        )));
    }
    for (t, r) in samples {
        if !t.is_finite() || !r.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidSamples("non-finite sample".into()));
        }
    }
    let h = samples[1].0 - samples[0].0;
    if h <= 0.0 {
        return Err(Error::InvalidSamples(
            "parameter must be strictly increasing".into(),
        ));
    }
    for w in samples.windows(2) {
        let local = w[1].0 - w[0].0;
        if (local - h).abs() > SPACING_TOLERANCE * h.abs().max(1.0) {
            return Err(Error::InvalidSamples(format!(
                "non-uniform spacing: {local} vs {h}"
            )));
        }
    }

    let n = samples.len();
    let r = |i: usize| samples[i].1;

    // Speeds at every sample (one-sided at the ends) for the arclength
    // accumulation.
    let mut speeds = Vec::with_capacity(n);
    speeds.push((r(1) - r(0)).norm() / h);
    for i in 1..n - 1 {
        speeds.push((r(i + 1) - r(i - 1)).norm() / (2.0 * h));
    }
    speeds.push((r(n - 1) - r(n - 2)).norm() / h);
    let mut sigma = vec![0.0_f64; n];
    for i in 1..n {
        sigma[i] = sigma[i - 1] + 0.5 * h * (speeds[i - 1] + speeds[i]);
    }

    let mut estimates = Vec::with_capacity(n - 4);
    for i in 2..n - 2 {
        let d1 = (r(i + 1) - r(i - 1)) / (2.0 * h);
        let d2 = (r(i + 1) - 2.0 * r(i) + r(i - 1)) / (h * h);
        let d3 = (r(i + 2) - 2.0 * r(i + 1) + 2.0 * r(i - 1) - r(i - 2)) / (2.0 * h * h * h);
        let cross = d1.cross(&d2);
        let speed = d1.norm();
        let kappa = cross.norm() / speed.powi(3);
        let reliable = cross.norm() > TORSION_RELIABILITY_FACTOR * speed.powi(3);
        let tau = if reliable {
            cross.dot(&d3) / cross.norm_squared()
        } else {
            0.0
        };
        estimates.push(KappaTauEstimate {
            sigma: sigma[i],
            kappa,
            tau,
            tau_reliable: reliable,
        });
    }
    Ok(estimates)
}

/// A least-squares rigid motion mapping one point set onto another.
#[derive(Debug, Clone, PartialEq)]
pub struct Alignment {
    /// Proper rotation (det = +1).
    pub rotation: Matrix3<f64>,
    pub translation: Vector3<f64>,
    /// Root-mean-square residual after applying the motion.
    pub rms: f64,
}

/// Second singular value below this multiple of the first marks the point
/// sets as direction-degenerate (collinear), leaving the rotation ambiguous.
const ALIGNMENT_DEGENERACY_FACTOR: f64 = 1e-12;

/// Finds the proper rotation R and translation t minimizing
/// Σ|R·aᵢ + t − bᵢ|² over corresponding samples (the orthogonal Procrustes
/// problem, solved via SVD of the cross-covariance).
pub fn rigid_align(a: &[Vector3<f64>], b: &[Vector3<f64>]) -> Result<Alignment> {
    if a.len() != b.len() {
        return Err(Error::InvalidSamples(format!(
            "point counts differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 3 {
        return Err(Error::InvalidSamples(format!(
            "need at least 3 corresponding points, got {}",
            a.len()
        )));
    }
    let n = a.len() as f64;
    let centroid_a: Vector3<f64> = a.iter().sum::<Vector3<f64>>() / n;
    let centroid_b: Vector3<f64> = b.iter().sum::<Vector3<f64>>() / n;
    let mut cross_cov = Matrix3::zeros();
    for (pa, pb) in a.iter().zip(b) {
        cross_cov += (pa - centroid_a) * (pb - centroid_b).transpose();
    }
    let svd = cross_cov.svd(true, true);
    let singular = svd.singular_values;
    if singular[1] <= ALIGNMENT_DEGENERACY_FACTOR * singular[0] {
        return Err(Error::DegenerateAlignment(format!(
            "points are collinear (singular values {:e}, {:e})",
            singular[0], singular[1]
        )));
    }
    let u = svd.u.expect("requested");
    let v_t = svd.v_t.expect("requested");
    // cross_cov = U Σ Vᵀ; the optimal rotation is V·diag(1,1,sign)·Uᵀ with the
    // sign chosen to keep it proper.
    let v = v_t.transpose();
    let sign = (v.determinant() * u.determinant()).signum();
    let correction = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, sign));
    let rotation = v * correction * u.transpose();
    let translation = centroid_b - rotation * centroid_a;
    let mut sum_sq = 0.0;
    for (pa, pb) in a.iter().zip(b) {
        sum_sq += (rotation * pa + translation - pb).norm_squared();
    }
    Ok(Alignment {
        rotation,
        translation,
        rms: (sum_sq / n).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{position_closed_form, split_parts};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    const DELTA_0: f64 = 1.49045008942909025;

    fn params(k: f64, c: f64, delta: f64) -> HelixParams {
        HelixParams::new(k, c, delta).unwrap()
    }

    #[test]
    fn zero_profile_gives_a_straight_line() {
        let profile = CurvatureTorsionProfile::constant(0.0, 0.0);
        let trajectory = frenet_integrate(&profile, FrenetState::canonical(), 0.0, 5.0, 0.01);
        let (s_end, end) = trajectory.last().unwrap();
        assert_eq!(*s_end, 5.0);
        assert!((end.position - Vector3::new(5.0, 0.0, 0.0)).norm() < 1e-12);
        assert!((end.tangent - Vector3::x()).norm() < 1e-14);
        assert!((end.binormal - Vector3::z()).norm() < 1e-14);
    }

    #[test]
    fn unit_circle_closes() {
        let profile = CurvatureTorsionProfile::constant(1.0, 0.0);
        let trajectory =
            frenet_integrate(&profile, FrenetState::canonical(), 0.0, 2.0 * PI, 1e-4);
        let (_, end) = trajectory.last().unwrap();
        assert!(
            end.position.norm() < 1e-8,
            "closure defect {:e}",
            end.position.norm()
        );
    }

    #[test]
    fn integrator_is_fourth_order() {
        let profile = CurvatureTorsionProfile::constant(1.0, 0.0);
        let closure = |step: f64| {
            let trajectory =
                frenet_integrate(&profile, FrenetState::canonical(), 0.0, 2.0 * PI, step);
            trajectory.last().unwrap().1.position.norm()
        };
        let ratio = closure(2e-3) / closure(1e-3);
        assert!(
            (12.0..=20.0).contains(&ratio),
            "step halving gave error ratio {ratio}"
        );
    }

    #[test]
    fn frame_stays_orthonormal_over_many_steps() {
        let profile = CurvatureTorsionProfile::new(|s| s, |s| s);
        let trajectory = frenet_integrate(&profile, FrenetState::canonical(), 0.0, 10.0, 1e-4);
        assert!(trajectory.len() > 100_000);
        let worst = trajectory
            .iter()
            .map(|(_, state)| state.frame_defect())
            .fold(0.0_f64, f64::max);
        assert!(worst <= 1e-10, "worst frame defect {worst:e}");
    }

    #[test]
    fn integration_and_recovery_round_trip() {
        // kappa(s) = tau(s) = s: integrate, then recover the profile from the
        // positions alone. The integrated curve is unit-speed, so sigma = s.
        let profile = CurvatureTorsionProfile::new(|s| s, |s| s);
        let trajectory = frenet_integrate(&profile, FrenetState::canonical(), 0.0, 3.0, 1e-3);
        let samples: Vec<(f64, Vector3<f64>)> =
            trajectory.iter().map(|(s, st)| (*s, st.position)).collect();
        let estimates = curvature_torsion_from_samples(&samples).unwrap();
        for e in &estimates {
            assert!((e.kappa - e.sigma).abs() < 1e-5, "kappa at {}", e.sigma);
            // The torsion quotient loses accuracy where the curve is nearly
            // straight; past the first stretch it is solid.
            if e.sigma >= 0.5 {
                assert!(e.tau_reliable);
                assert!((e.tau - e.sigma).abs() < 1e-5, "tau at {}", e.sigma);
            }
        }
    }

    #[test]
    fn complex_check_recovers_prescribed_curvature() {
        // k = 1, c = 1 at s = 1: kappa_sq = 1.
        let (kappa_sq, _) = complex_frenet_check(Case::One, 1.0, params(1.0, 1.0, 0.0)).unwrap();
        assert!((kappa_sq - Complex64::ONE).norm() < 1e-12);
        // k = 2: kappa_sq = 4s² at random s, relative 1e-10.
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let p = params(2.0, 1.0, 0.0);
        for _ in 0..50 {
            let s: f64 = rng.gen_range(-5.0..5.0);
            if s.abs() < 1e-3 {
                continue;
            }
            for case in [Case::One, Case::Two] {
                let (kappa_sq, _) = complex_frenet_check(case, s, p).unwrap();
                let expected = 4.0 * s * s;
                assert!(
                    (kappa_sq - expected).norm() <= 1e-10 * expected,
                    "case {} at s = {s}",
                    case.id()
                );
            }
        }
    }

    #[test]
    fn complex_check_torsion_has_magnitude_and_consistent_sign() {
        for p in [params(1.0, 1.0, 0.0), params(2.0, 0.7, 0.0), params(1.0, 1.0, DELTA_0)] {
            for case in [Case::One, Case::Two] {
                for i in 0..40 {
                    let s = -4.0 + 8.0 * i as f64 / 39.0;
                    let shifted = p.shifted_arclength(s);
                    if shifted.abs() < 1e-3 {
                        continue;
                    }
                    let (_, tau) = complex_frenet_check(case, s, p).unwrap();
                    let expected = -shifted / (p.c() * p.c());
                    assert!(
                        (tau - expected).norm() < 1e-10 * expected.abs().max(1.0),
                        "case {} at s = {s}: {tau} vs {expected}",
                        case.id()
                    );
                }
            }
        }
    }

    #[test]
    fn complex_check_degenerates_at_shifted_origin() {
        assert!(matches!(
            complex_frenet_check(Case::One, 0.0, params(1.0, 1.0, 0.0)),
            Err(Error::UndefinedTorsion)
        ));
        assert!(matches!(
            complex_frenet_check(Case::One, -DELTA_0, params(1.0, 1.0, DELTA_0)),
            Err(Error::UndefinedTorsion)
        ));
    }

    #[test]
    fn recovery_matches_circle_and_circular_helix() {
        // Circle of radius 2 in the xy-plane.
        let n = 4001;
        let circle: Vec<(f64, Vector3<f64>)> = (0..n)
            .map(|i| {
                let t = PI * i as f64 / (n - 1) as f64;
                (t, Vector3::new(2.0 * t.cos(), 2.0 * t.sin(), 0.0))
            })
            .collect();
        for e in curvature_torsion_from_samples(&circle).unwrap() {
            assert!((e.kappa - 0.5).abs() < 1e-6);
            assert!(e.tau.abs() < 1e-6);
        }
        // Circular helix (2 cos t, 2 sin t, t/2): kappa = 2/4.25, tau = 0.5/4.25.
        let n = 16001;
        let helix: Vec<(f64, Vector3<f64>)> = (0..n)
            .map(|i| {
                let t = 4.0 * PI * i as f64 / (n - 1) as f64;
                (t, Vector3::new(2.0 * t.cos(), 2.0 * t.sin(), 0.5 * t))
            })
            .collect();
        for e in curvature_torsion_from_samples(&helix).unwrap() {
            assert!((e.kappa - 2.0 / 4.25).abs() < 1e-6);
            assert!(e.tau_reliable);
            assert!((e.tau - 0.5 / 4.25).abs() < 1e-6);
        }
    }

    #[test]
    fn recovery_flags_straight_segments() {
        let line: Vec<(f64, Vector3<f64>)> = (0..50)
            .map(|i| {
                let t = i as f64 * 0.1;
                (t, Vector3::new(t, 2.0 * t, 3.0 * t))
            })
            .collect();
        for e in curvature_torsion_from_samples(&line).unwrap() {
            assert!(e.kappa < 1e-9);
            assert!(!e.tau_reliable);
            assert_eq!(e.tau, 0.0);
        }
    }

    #[test]
    fn recovery_validates_input() {
        let short: Vec<(f64, Vector3<f64>)> =
            (0..5).map(|i| (i as f64, Vector3::zeros())).collect();
        assert!(matches!(
            curvature_torsion_from_samples(&short),
            Err(Error::InvalidSamples(_))
        ));
        let mut uneven: Vec<(f64, Vector3<f64>)> =
            (0..10).map(|i| (i as f64, Vector3::new(i as f64, 0.0, 0.0))).collect();
        uneven[5].0 += 0.1;
        assert!(matches!(
            curvature_torsion_from_samples(&uneven),
            Err(Error::InvalidSamples(_))
        ));
    }

    #[test]
    fn real_part_of_the_complex_helix_is_a_clothoid_helix() {
        // Sample the real part on s in [0.2, 3], recover kappa(sigma) and
        // tau(sigma), and fit lines: both pass through the origin of the
        // curve's own arclength (measured from s = 0) with tiny residuals,
        // and their slope ratio is the constant -k·sqrt(k²+1).
        let k = 1.0_f64;
        let p = params(k, 1.0, 0.0);
        let n = 5601;
        let (s_lo, s_hi) = (0.2, 3.0);
        let samples: Vec<(f64, Vector3<f64>)> = (0..n)
            .map(|i| {
                let s = s_lo + (s_hi - s_lo) * i as f64 / (n - 1) as f64;
                let t = position_closed_form(Case::One, s, p).unwrap();
                (s, split_parts(&t).0)
            })
            .collect();
        let speed = (k * k + 1.0 / (k * k + 1.0)).sqrt();
        // sigma is accumulated from the first sample; shift to s = 0.
        let sigma_offset = speed * s_lo;
        let estimates = curvature_torsion_from_samples(&samples).unwrap();
        let points_kappa: Vec<(f64, f64)> = estimates
            .iter()
            .map(|e| (e.sigma + sigma_offset, e.kappa))
            .collect();
        let points_tau: Vec<(f64, f64)> = estimates
            .iter()
            .map(|e| (e.sigma + sigma_offset, e.tau))
            .collect();
        let (slope_k, intercept_k, r2_k) = linear_fit(&points_kappa);
        let (slope_t, intercept_t, r2_t) = linear_fit(&points_tau);
        // Unit-normalized intercepts: divide by the data's own scale.
        let scale_k = points_kappa.iter().map(|(_, v)| v.abs()).fold(0.0, f64::max);
        let scale_t = points_tau.iter().map(|(_, v)| v.abs()).fold(0.0, f64::max);
        assert!((intercept_k / scale_k).abs() < 1e-6, "kappa intercept");
        assert!((intercept_t / scale_t).abs() < 1e-6, "tau intercept");
        assert!(r2_k > 1.0 - 1e-6, "kappa fit R² = {r2_k}");
        assert!(r2_t > 1.0 - 1e-6, "tau fit R² = {r2_t}");
        // Analytic slopes: kappa' = k·r/(c²v³), tau' = −1/(c²v³).
        let r = k.hypot(1.0);
        let v3 = speed.powi(3);
        assert!((slope_k - k * r / v3).abs() < 1e-4, "kappa slope {slope_k}");
        assert!((slope_t + 1.0 / v3).abs() < 1e-4, "tau slope {slope_t}");
        assert!((slope_k / slope_t + k * r).abs() < 1e-3, "slope ratio");
    }

    fn linear_fit(points: &[(f64, f64)]) -> (f64, f64, f64) {
        let n = points.len() as f64;
        let mean_x = points.iter().map(|(x, _)| x).sum::<f64>() / n;
        let mean_y = points.iter().map(|(_, y)| y).sum::<f64>() / n;
        let mut sxx = 0.0;
        let mut sxy = 0.0;
        let mut syy = 0.0;
        for (x, y) in points {
            sxx += (x - mean_x) * (x - mean_x);
            sxy += (x - mean_x) * (y - mean_y);
            syy += (y - mean_y) * (y - mean_y);
        }
        let slope = sxy / sxx;
        let intercept = mean_y - slope * mean_x;
        let r2 = (sxy * sxy) / (sxx * syy);
        (slope, intercept, r2)
    }

    #[test]
    fn alignment_of_identical_sets_is_the_identity() {
        let points: Vec<Vector3<f64>> = (0..20)
            .map(|i| {
                let t = i as f64 * 0.3;
                Vector3::new(t.cos(), t.sin(), 0.2 * t)
            })
            .collect();
        let alignment = rigid_align(&points, &points).unwrap();
        assert!((alignment.rotation - Matrix3::identity()).norm() < 1e-12);
        assert!(alignment.translation.norm() < 1e-12);
        assert!(alignment.rms < 1e-14);
    }

    #[test]
    fn alignment_recovers_a_known_motion() {
        let rotation = nalgebra::Rotation3::from_axis_angle(
            &nalgebra::Unit::new_normalize(Vector3::new(1.0, 2.0, -0.5)),
            0.83,
        );
        let translation = Vector3::new(0.4, -1.1, 2.2);
        let a: Vec<Vector3<f64>> = (0..25)
            .map(|i| {
                let t = i as f64 * 0.25;
                Vector3::new(t.cos(), 2.0 * t.sin(), 0.3 * t * t)
            })
            .collect();
        let b: Vec<Vector3<f64>> = a.iter().map(|p| rotation * p + translation).collect();
        let alignment = rigid_align(&a, &b).unwrap();
        assert!((alignment.rotation - rotation.matrix()).norm() < 1e-10);
        assert!((alignment.translation - translation).norm() < 1e-10);
        assert!(alignment.rms < 1e-12);
        assert!((alignment.rotation.determinant() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn alignment_rejects_degenerate_input() {
        let line: Vec<Vector3<f64>> = (0..10)
            .map(|i| Vector3::new(i as f64, 2.0 * i as f64, -i as f64))
            .collect();
        assert!(matches!(
            rigid_align(&line, &line),
            Err(Error::DegenerateAlignment(_))
        ));
        let a: Vec<Vector3<f64>> = (0..5).map(|i| Vector3::new(i as f64, 0.0, 0.0)).collect();
        let b: Vec<Vector3<f64>> = (0..4).map(|i| Vector3::new(i as f64, 0.0, 0.0)).collect();
        assert!(matches!(
            rigid_align(&a, &b),
            Err(Error::InvalidSamples(_))
        ));
    }

    #[test]
    fn integrated_profile_matches_the_real_part_up_to_rigid_motion() {
        // Frenet-integrate the clothoid-helix profile the real part should
        // carry (in its own arclength) and align against the actual real
        // part reparametrized to unit speed.
        let k = 1.0_f64;
        let c = 1.0_f64;
        let p = params(k, c, 0.0);
        let speed = (k * k + 1.0 / (k * k + 1.0)).sqrt();
        let r = k.hypot(1.0);
        let v3 = speed.powi(3);
        let kappa_slope = k * r / (c * c * v3);
        let tau_slope = -1.0 / (c * c * v3);
        let profile =
            CurvatureTorsionProfile::new(move |sig| kappa_slope * sig, move |sig| tau_slope * sig);
        let sigma_end = 3.0 * speed;
        let trajectory =
            frenet_integrate(&profile, FrenetState::canonical(), 0.0, sigma_end, 1e-3);
        let integrated: Vec<Vector3<f64>> = trajectory
            .iter()
            .step_by(10)
            .map(|(_, st)| st.position)
            .collect();
        let real_part: Vec<Vector3<f64>> = trajectory
            .iter()
            .step_by(10)
            .map(|(sigma, _)| {
                let s = sigma / speed;
                split_parts(&position_closed_form(Case::One, s, p).unwrap()).0
            })
            .collect();
        let alignment = rigid_align(&integrated, &real_part).unwrap();
        assert!(alignment.rms <= 1e-4, "rms = {:e}", alignment.rms);
    }
}
