//! Tomic's internally interlacing chain for non-increasing coefficients.
//!
//! Built from its own closed forms (chord midpoint plus a rotated half
//! chord), independently of [`crate::kakeya`], so that the reversal duality
//! between the two chains is a real cross-check.

use num_complex::Complex64;

use crate::chain::{
    half_angle, unit, verify_with, ChainConstruction, NonvanishingWitness, Orientation,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::geometry::{Angle, Circle, Point2};
use crate::poly_bounds::{classify_monotonicity, CoefficientSequence};

/// `Q_0 .. Q_n` as points `(u_k, v_k)`.
pub fn partial_sums_q(q: &CoefficientSequence, theta: Angle) -> Vec<Point2> {
    let mut acc = Complex64::new(0.0, 0.0);
    q.as_slice()
        .iter()
        .enumerate()
        .map(|(m, &qm)| {
            let (c, s) = unit(theta, m);
            acc += Complex64::new(qm * c, qm * s);
            Point2::new(acc.re, acc.im)
        })
        .collect()
}

/// Circle through `prev` and `next` whose chord subtends `theta` at the
/// center.
fn chord_circle(prev: Point2, next: Point2, qk: f64, theta: Angle) -> Circle {
    let (cot, csc) = half_angle(theta);
    let f = 0.5 * (prev.x + next.x) - 0.5 * (next.y - prev.y) * cot;
    let g = 0.5 * (prev.y + next.y) + 0.5 * (next.x - prev.x) * cot;
    Circle::new(Point2::new(f, g), 0.5 * qk * csc)
}

pub fn tomic_circle(q: &CoefficientSequence, theta: Angle, k: usize) -> Result<Circle> {
    if theta.is_axis() {
        return Err(Error::DegenerateAngle {
            theta: theta.theta(),
        });
    }
    if k > q.degree() {
        return Err(Error::IndexOutOfRange {
            k,
            degree: q.degree(),
        });
    }
    let sums = partial_sums_q(q, theta);
    let prev = if k == 0 { Point2::ORIGIN } else { sums[k - 1] };
    Ok(chord_circle(prev, sums[k], q[k], theta))
}

pub fn build_chain_internal(q: &CoefficientSequence, theta: Angle) -> Result<ChainConstruction> {
    if !classify_monotonicity(q).is_non_increasing() {
        return Err(Error::NotMonotone {
            expected: "non-increasing",
        });
    }
    let sums = partial_sums_q(q, theta);
    let probes = (1..q.len())
        .map(|k| {
            let (c, s) = unit(theta, k);
            let base = sums[k - 1];
            Point2::new(base.x + q[k - 1] * c, base.y + q[k - 1] * s)
        })
        .collect();
    let coincident = q.as_slice().windows(2).map(|w| w[0] == w[1]).collect();
    let degenerate_axis = theta.is_axis();
    let circles = if degenerate_axis {
        Vec::new()
    } else {
        std::iter::once(Point2::ORIGIN)
            .chain(sums.iter().copied())
            .zip(&sums)
            .zip(q.as_slice())
            .map(|((prev, &next), &qk)| chord_circle(prev, next, qk, theta))
            .collect()
    };
    Ok(ChainConstruction {
        orientation: Orientation::Internal,
        theta,
        sums,
        probes,
        circles,
        coincident,
        degenerate_axis,
    })
}

/// Maps `q` at `theta` onto the reversed sequence at `-theta`:
/// `e^{-i n theta} Q_n(theta) = R_n^{rev}(-theta)`.
pub fn reversal_transform(
    q: &CoefficientSequence,
    theta: Angle,
) -> (CoefficientSequence, Angle, Complex64) {
    let phase = Complex64::from_polar(1.0, -(q.degree() as f64) * theta.canonical());
    (q.reversed(), theta.negated(), phase)
}

pub fn verify_chain_internal(chain: &ChainConstruction, tol: f64) -> Result<VerificationReport> {
    verify_with(chain, Orientation::Internal, tol)
}

/// `|Q_n|` for non-increasing `q`, checked against `1e-12 * sum q_k`.
pub fn nonvanishing_witness_internal(
    q: &CoefficientSequence,
    theta: Angle,
) -> Result<NonvanishingWitness> {
    if !classify_monotonicity(q).is_non_increasing() {
        return Err(Error::NotMonotone {
            expected: "non-increasing",
        });
    }
    crate::kakeya::witness(q, theta, partial_sums_q(q, theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kakeya;
    use crate::poly_bounds::MonotonicityClass;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn seq(v: &[f64]) -> CoefficientSequence {
        CoefficientSequence::new(v.to_vec()).unwrap()
    }

    fn assert_circle(c: Circle, x: f64, y: f64, r: f64) {
        assert_abs_diff_eq!(c.center.x, x, epsilon = 1e-9);
        assert_abs_diff_eq!(c.center.y, y, epsilon = 1e-9);
        assert_abs_diff_eq!(c.radius, r, epsilon = 1e-9);
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(
            partial_sums_q(&seq(&[3.0]), Angle::new(2.0)),
            vec![Point2::new(3.0, 0.0)]
        );
        let s = partial_sums_q(&seq(&[3.0, 2.5]), Angle::new(5.0 * PI / 12.0));
        assert_abs_diff_eq!(s[1].x, 3.64704761276, epsilon = 1e-10);
        assert_abs_diff_eq!(s[1].y, 2.41481456572, epsilon = 1e-10);
        let s = partial_sums_q(&seq(&[3.0, 2.5, 1.5]), Angle::new(PI / 2.0));
        assert_abs_diff_eq!(s[2].x, 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(s[2].y, 2.5, epsilon = 1e-15);
    }

    #[test]
    fn circle_examples() {
        let q = seq(&[3.0, 2.5, 1.5]);
        let t = Angle::new(5.0 * PI / 12.0);
        assert_circle(
            tomic_circle(&q, t, 0).unwrap(),
            1.5,
            1.95483805926,
            2.46401944756,
        );
        assert_circle(
            tomic_circle(&q, t, 1).unwrap(),
            1.75,
            1.62903171605,
            2.05334953963,
        );
        assert_circle(
            tomic_circle(&q, t, 2).unwrap(),
            2.5088190451,
            1.94334485592,
            1.23200972378,
        );
        assert!(tomic_circle(&q, Angle::new(0.0), 0).is_err());
    }

    #[test]
    fn chain_examples() {
        let t = Angle::new(5.0 * PI / 12.0);
        let chain = build_chain_internal(&seq(&[3.0, 2.5, 1.5]), t).unwrap();
        let radii: Vec<f64> = chain.circles.iter().map(|c| c.radius).collect();
        assert!(radii.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(chain.orientation, Orientation::Internal);

        let chain = build_chain_internal(&seq(&[3.0, 2.5, 2.5]), t).unwrap();
        assert_eq!(chain.coincident, vec![false, true]);

        let chain = build_chain_internal(&seq(&[1.0, 1.0]), Angle::new(PI / 2.0)).unwrap();
        assert_eq!(chain.circles[0].radius, chain.circles[1].radius);
        assert_abs_diff_eq!(chain.sums[1].x, chain.probes[0].x, epsilon = 1e-15);
        assert_abs_diff_eq!(chain.sums[1].y, chain.probes[0].y, epsilon = 1e-15);

        assert!(build_chain_internal(&seq(&[1.0, 2.0]), t).is_err());
    }

    #[test]
    fn verify_examples() {
        let q = seq(&[3.0, 2.5, 1.5]);
        let t = Angle::new(5.0 * PI / 12.0);
        let chain = build_chain_internal(&q, t).unwrap();
        let report = verify_chain_internal(&chain, 1e-9).unwrap();
        assert!(report.passed, "{report:?}");
        let gap = 0.25 / (5.0 * PI / 24.0).sin();
        let d = crate::geometry::distance(chain.circles[0].center, chain.circles[1].center);
        assert_abs_diff_eq!(d, gap, epsilon = 1e-12);

        let chain = build_chain_internal(&q, Angle::new(PI / 2.0)).unwrap();
        assert!(verify_chain_internal(&chain, 1e-9).unwrap().passed);

        assert!(matches!(
            kakeya::verify_chain(&chain, 1e-9),
            Err(Error::WrongOrientation { .. })
        ));
    }

    #[test]
    fn reversal_examples() {
        let q = seq(&[3.0, 2.5, 1.5]);
        let t = Angle::new(5.0 * PI / 12.0);
        let (rev, neg, phase) = reversal_transform(&q, t);
        assert_eq!(rev.as_slice(), &[1.5, 2.5, 3.0]);
        assert_eq!(
            classify_monotonicity(&rev),
            MonotonicityClass::StrictlyIncreasing
        );

        let qn = *partial_sums_q(&q, t).last().unwrap();
        let rn = *kakeya::partial_sums(&rev, neg).last().unwrap();
        let rotated = phase * Complex64::new(qn.x, qn.y);
        assert_abs_diff_eq!(rotated.re, rn.x, epsilon = 1e-12);
        assert_abs_diff_eq!(rotated.im, rn.y, epsilon = 1e-12);

        let same = seq(&[2.0, 2.0, 2.0]);
        assert_eq!(reversal_transform(&same, t).0, same);
    }
}
