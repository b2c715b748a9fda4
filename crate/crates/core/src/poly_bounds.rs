//! Positive-coefficient polynomials and their Enestrom-Kakeya annulus.
//!
//! A [`CoefficientSequence`] stores `a_0, a_1, ..., a_n` with the constant
//! term first. Every zero of `a_n z^n + ... + a_1 z + a_0` lies in the
//! annulus `min a_{k-1}/a_k <= |z| <= max a_{k-1}/a_k`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{sin_cos_multiple, TAU_ANGLE};

/// Strictly positive, finite coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct CoefficientSequence(Vec<f64>);

impl CoefficientSequence {
    /// Validates positivity with a strict `> 0` check; zero is rejected.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        if let Some((index, &value)) = coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !(c.is_finite() && **c > 0.0))
        {
            return Err(Error::NonPositiveCoefficient { index, value });
        }
        Ok(Self(coeffs))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// The same coefficients in reverse order (roots become reciprocals).
    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn all_equal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<f64>> for CoefficientSequence {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CoefficientSequence> for Vec<f64> {
    fn from(c: CoefficientSequence) -> Self {
        c.0
    }
}

impl std::ops::Index<usize> for CoefficientSequence {
    type Output = f64;

    fn index(&self, k: usize) -> &f64 {
        &self.0[k]
    }
}

/// Open bounds on the modulus of every zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    pub inner: f64,
    pub outer: f64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonotonicityClass {
    StrictlyIncreasing,
    NonDecreasing,
    AllEqual,
    NonIncreasing,
    StrictlyDecreasing,
    Mixed,
}

impl MonotonicityClass {
    /// Satisfies the hypothesis of the external (Kakeya) chain.
    pub fn is_non_decreasing(self) -> bool {
        matches!(
            self,
            Self::StrictlyIncreasing | Self::NonDecreasing | Self::AllEqual
        )
    }

    /// Satisfies the hypothesis of the internal (Tomic) chain.
    pub fn is_non_increasing(self) -> bool {
        matches!(
            self,
            Self::StrictlyDecreasing | Self::NonIncreasing | Self::AllEqual
        )
    }
}

/// Enestrom-Kakeya annulus from the `n` consecutive ratios `a_{k-1}/a_k`.
pub fn ek_annulus(c: &CoefficientSequence) -> Result<Annulus> {
    if c.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let ratios: Vec<f64> = c.as_slice().windows(2).map(|w| w[0] / w[1]).collect();
    let inner = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let outer = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(Annulus {
        inner,
        outer,
        degenerate: inner == outer,
    })
}

/// Horner evaluation of `sum a_k z^k`.
pub fn eval_poly(c: &CoefficientSequence, z: Complex64) -> Complex64 {
    c.as_slice()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

pub fn classify_monotonicity(c: &CoefficientSequence) -> MonotonicityClass {
    let s = c.as_slice();
    let pairs = || s.windows(2).map(|w| (w[0], w[1]));
    if pairs().all(|(a, b)| a == b) {
        MonotonicityClass::AllEqual
    } else if pairs().all(|(a, b)| a < b) {
        MonotonicityClass::StrictlyIncreasing
    } else if pairs().all(|(a, b)| a > b) {
        MonotonicityClass::StrictlyDecreasing
    } else if pairs().all(|(a, b)| a <= b) {
        MonotonicityClass::NonDecreasing
    } else if pairs().all(|(a, b)| a >= b) {
        MonotonicityClass::NonIncreasing
    } else {
        MonotonicityClass::Mixed
    }
}

/// `1 + z + ... + z^n = (1 - z^{n+1}) / (1 - z)` with `z = e^{i theta}`.
pub fn geometric_sum_closed_form(n: usize, theta: f64) -> Result<Complex64> {
    let z = Complex64::from_polar(1.0, theta);
    let denom = Complex64::new(1.0, 0.0) - z;
    if denom.norm() < TAU_ANGLE {
        return Err(Error::AngleAtSingularity { theta });
    }
    let (s, c) = sin_cos_multiple(theta, n as f64 + 1.0);
    let top = Complex64::new(c, s);
    Ok((Complex64::new(1.0, 0.0) - top) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn seq(v: &[f64]) -> CoefficientSequence {
        CoefficientSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn annulus_examples() {
        let a = ek_annulus(&seq(&[1.0, 2.0, 3.0])).unwrap();
        assert_eq!(a.inner, 0.5);
        assert_abs_diff_eq!(a.outer, 2.0 / 3.0, epsilon = 1e-15);
        assert!(!a.degenerate);

        let a = ek_annulus(&seq(&[1.0, 1.0, 1.0, 1.0])).unwrap();
        assert_eq!((a.inner, a.outer, a.degenerate), (1.0, 1.0, true));

        let a = ek_annulus(&seq(&[5.0, 1.0])).unwrap();
        assert_eq!((a.inner, a.outer, a.degenerate), (5.0, 5.0, true));
    }

    #[test]
    fn annulus_rejects_constant() {
        assert_eq!(ek_annulus(&seq(&[2.0])), Err(Error::DegreeZero));
    }

    #[test]
    fn rejects_zero_negative_and_nan() {
        assert_eq!(
            CoefficientSequence::new(vec![1.0, 0.0]),
            Err(Error::NonPositiveCoefficient {
                index: 1,
                value: 0.0
            })
        );
        assert!(CoefficientSequence::new(vec![-1.0]).is_err());
        assert!(CoefficientSequence::new(vec![1.0, f64::NAN]).is_err());
        assert!(CoefficientSequence::new(vec![f64::INFINITY]).is_err());
        assert_eq!(CoefficientSequence::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn json_validates_on_decode() {
        let c: CoefficientSequence = serde_json::from_str("[1, 2.5, 3]").unwrap();
        assert_eq!(c.as_slice(), &[1.0, 2.5, 3.0]);
        assert!(serde_json::from_str::<CoefficientSequence>("[1, 0]").is_err());
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1.0,2.5,3.0]");
    }

    #[test]
    fn horner() {
        let c = seq(&[1.0, 2.0, 3.0]);
        assert_eq!(
            eval_poly(&c, Complex64::new(0.0, 0.0)),
            Complex64::new(1.0, 0.0)
        );
        assert_eq!(
            eval_poly(&seq(&[1.0, 1.0, 1.0]), Complex64::new(1.0, 0.0)),
            Complex64::new(3.0, 0.0)
        );
        assert_eq!(eval_poly(&c, Complex64::i()), Complex64::new(-2.0, 2.0));
    }

    #[test]
    fn monotonicity_tags() {
        use MonotonicityClass::*;
        assert_eq!(
            classify_monotonicity(&seq(&[1.0, 2.0, 3.0])),
            StrictlyIncreasing
        );
        assert_eq!(
            classify_monotonicity(&seq(&[3.0, 2.5, 1.5])),
            StrictlyDecreasing
        );
        assert_eq!(classify_monotonicity(&seq(&[1.0, 2.0, 2.0])), NonDecreasing);
        assert_eq!(classify_monotonicity(&seq(&[2.0, 2.0, 1.0])), NonIncreasing);
        assert_eq!(classify_monotonicity(&seq(&[1.0, 3.0, 2.0])), Mixed);
        assert_eq!(classify_monotonicity(&seq(&[4.0])), AllEqual);
        assert_eq!(classify_monotonicity(&seq(&[4.0, 4.0])), AllEqual);
        assert!(AllEqual.is_non_decreasing() && AllEqual.is_non_increasing());
        assert!(!Mixed.is_non_decreasing() && !Mixed.is_non_increasing());
    }

    #[test]
    fn geometric_sum_roots_of_unity() {
        for (n, theta) in [(2, 2.0 * PI / 3.0), (1, PI), (3, PI / 2.0)] {
            let s = geometric_sum_closed_form(n, theta).unwrap();
            assert!(s.norm() < 1e-15, "n={n} theta={theta} -> {s}");
        }
        assert!(matches!(
            geometric_sum_closed_form(3, 0.0),
            Err(Error::AngleAtSingularity { .. })
        ));
        assert!(geometric_sum_closed_form(3, 2.0 * PI).is_err());
    }

    #[test]
    fn geometric_sum_matches_direct_sum() {
        let theta = 0.7;
        let direct: Complex64 = (0..=5)
            .map(|m| Complex64::from_polar(1.0, m as f64 * theta))
            .sum();
        let closed = geometric_sum_closed_form(5, theta).unwrap();
        assert!((direct - closed).norm() < 1e-14);
    }
}
