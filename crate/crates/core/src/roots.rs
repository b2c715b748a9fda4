//! Simultaneous (Aberth-Ehrlich) root finder, used to check the annulus
//! against actual zeros.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly_bounds::{ek_annulus, eval_poly, Annulus, CoefficientSequence};

pub const MAX_ITERATIONS: usize = 200;
const RELAX_AFTER: usize = 150;
const STEP_TOL: f64 = 1e-14;
const RELAX_FACTOR: f64 = 100.0;
const POLISH_STEPS: usize = 3;
/// Largest scaled residual a converged root may have.
pub const RESIDUAL_TOL: f64 = 1e-10;
// Keeps the starting points off the real axis.
const START_PHASE: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    #[serde(with = "complex_list")]
    pub roots: Vec<Complex64>,
    /// `|P(z)| / sum |a_k| |z|^k` per root.
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
    /// Set when the step threshold had to be relaxed to stop.
    #[serde(skip)]
    pub relaxed: bool,
}

mod complex_list {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Pair {
        re: f64,
        im: f64,
    }

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<Pair> = v.iter().map(|z| Pair { re: z.re, im: z.im }).collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs = Vec::<Pair>::deserialize(d)?;
        Ok(pairs
            .into_iter()
            .map(|p| Complex64::new(p.re, p.im))
            .collect())
    }
}

fn eval_with_derivative(a: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    a.iter()
        .rev()
        .fold((zero, zero), |(p, dp), &c| (p * z + c, dp * z + p))
}

fn scaled_residual(c: &CoefficientSequence, z: Complex64) -> f64 {
    let m = z.norm();
    let scale = c.as_slice().iter().rev().fold(0.0, |acc, &a| acc * m + a);
    eval_poly(c, z).norm() / scale
}

fn start_radius(c: &CoefficientSequence) -> f64 {
    match ek_annulus(c) {
        Ok(a) if a.inner > 0.0 && a.outer.is_finite() => (a.inner * a.outer).sqrt(),
        _ => {
            let lead = c[c.degree()];
            1.0 + c.as_slice().iter().map(|a| a / lead).fold(0.0, f64::max)
        }
    }
}

/// All `n` roots, with multiplicity.
///
/// Non-convergence is not an error: the best iterate is returned with
/// `converged = false`.
pub fn find_roots(c: &CoefficientSequence) -> Result<RootSet> {
    let n = c.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let a = c.as_slice();
    let rho = start_radius(c);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| {
            let phi = std::f64::consts::TAU * j as f64 / n as f64 + START_PHASE;
            Complex64::from_polar(rho, phi)
        })
        .collect();

    let mut iterations = 0;
    let mut stepped_to_tol = false;
    let mut relaxed = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut worst = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(a, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                worst = worst.max(step.norm() / z[i].norm().max(f64::MIN_POSITIVE));
            }
        }
        let threshold = if iterations > RELAX_AFTER {
            STEP_TOL * RELAX_FACTOR
        } else {
            STEP_TOL
        };
        if worst < threshold {
            stepped_to_tol = true;
            relaxed = iterations > RELAX_AFTER;
            break;
        }
    }

    for zi in z.iter_mut() {
        for _ in 0..POLISH_STEPS {
            let (p, dp) = eval_with_derivative(a, *zi);
            let next = *zi - p / dp;
            if next.is_finite() && eval_poly(c, next).norm() < p.norm() {
                *zi = next;
            } else {
                break;
            }
        }
    }

    let residuals: Vec<f64> = z.iter().map(|&zi| scaled_residual(c, zi)).collect();
    let converged = stepped_to_tol && residuals.iter().all(|r| *r < RESIDUAL_TOL);
    Ok(RootSet {
        roots: z,
        residuals,
        converged,
        iterations,
        relaxed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnulusViolation {
    pub index: usize,
    pub modulus: f64,
    /// Distance outside the tolerated band.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub violations: Vec<AnnulusViolation>,
    pub passed: bool,
}

/// Closed-annulus membership with tolerance. A degenerate annulus is a
/// circle, and roots must sit on it.
pub fn check_annulus_membership(roots: &RootSet, a: &Annulus, tol: f64) -> MembershipReport {
    let violations: Vec<AnnulusViolation> = roots
        .roots
        .iter()
        .enumerate()
        .filter_map(|(index, z)| {
            let modulus = z.norm();
            let margin = if a.degenerate {
                (modulus - a.inner).abs() - tol * a.inner
            } else {
                let lo = a.inner - tol * a.outer;
                let hi = a.outer * (1.0 + tol);
                (lo - modulus).max(modulus - hi)
            };
            (margin > 0.0 || margin.is_nan()).then_some(AnnulusViolation {
                index,
                modulus,
                margin,
            })
        })
        .collect();
    MembershipReport {
        passed: roots.converged && violations.is_empty(),
        violations,
    }
}
