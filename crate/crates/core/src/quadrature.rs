//! Gauss-Legendre rules and a small adaptive integrator for complex-vector
//! integrands.
//!
//! Nodes and weights are computed at first use by Newton iteration on the
//! Legendre polynomials (no tabulated constants), then cached. The adaptive
//! driver bisects panels until a 15-point rule on the whole panel and on its
//! two halves agree to the local tolerance budget.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// Newton iteration on P_n from the cosine initial guess converges to machine
/// precision in a handful of steps for the orders used here.
pub(crate) fn legendre_rule(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2);
    let mut rule = vec![(0.0, 0.0); n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_{n-1}(x) by the three-term recurrence.
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() <= 1e-15 * x.abs().max(1e-3) {
                // One clean-up step keeps the weight formula consistent.
                let (mut q0, mut q1) = (1.0, x);
                for j in 2..=n {
                    let jf = j as f64;
                    let q2 = ((2.0 * jf - 1.0) * x * q1 - (jf - 1.0) * q0) / jf;
                    q0 = q1;
                    q1 = q2;
                }
                dp = n as f64 * (x * q1 - q0) / (x * x - 1.0);
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule[i] = (-x, w);
        rule[n - 1 - i] = (x, w);
    }
    // Odd n leaves the middle node at the origin with the closed-form weight.
    if n % 2 == 1 {
        let mid = n / 2;
        let (mut p0, mut p1) = (1.0, 0.0);
        for j in 2..=n {
            let jf = j as f64;
            let p2 = (-(jf - 1.0) * p0) / jf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n as f64 * (-p0) / (-1.0);
        rule[mid] = (0.0, 2.0 / (dp * dp));
    }
    rule
}

fn rule15() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| legendre_rule(15))
}

pub(crate) fn rule24() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| legendre_rule(24))
}

/// 15-point Gauss-Legendre estimate of a complex-triple integrand on [a, b].
fn panel15<F>(f: &F, a: f64, b: f64) -> [Complex64; 3]
where
    F: Fn(f64) -> [Complex64; 3],
{
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = [Complex64::ZERO; 3];
    for &(x, w) in rule15() {
        let v = f(mid + half * x);
        for (slot, comp) in acc.iter_mut().zip(v) {
            *slot += w * comp;
        }
    }
    for slot in &mut acc {
        *slot *= half;
    }
    acc
}

fn max_component_diff(a: &[Complex64; 3], b: &[Complex64; 3]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Adaptive bisection integration of a complex-triple integrand.
///
/// Returns the integral estimate together with the accumulated error estimate
/// (sum of accepted panel discrepancies). The caller decides whether the
/// achieved estimate meets its tolerance.
pub(crate) fn integrate_triple<F>(f: &F, a: f64, b: f64, tol: f64) -> ([Complex64; 3], f64)
where
    F: Fn(f64) -> [Complex64; 3],
{
    const MAX_DEPTH: u32 = 40;
    let mut total = [Complex64::ZERO; 3];
    let mut achieved = 0.0;
    let mut stack = vec![(a, b, tol, 0u32)];
    while let Some((lo, hi, budget, depth)) = stack.pop() {
        let whole = panel15(f, lo, hi);
        let mid = 0.5 * (lo + hi);
        let left = panel15(f, lo, mid);
        let right = panel15(f, mid, hi);
        let fine = [left[0] + right[0], left[1] + right[1], left[2] + right[2]];
        let diff = max_component_diff(&whole, &fine);
        if diff <= budget || depth >= MAX_DEPTH {
            for (slot, comp) in total.iter_mut().zip(fine) {
                *slot += comp;
            }
            achieved += diff;
        } else {
            stack.push((lo, mid, 0.5 * budget, depth + 1));
            stack.push((mid, hi, 0.5 * budget, depth + 1));
        }
    }
    (total, achieved)
}
