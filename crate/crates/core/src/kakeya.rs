//! Kakeya's externally interlacing chain for non-decreasing coefficients.
//!
//! For `p_0 <= p_1 <= ... <= p_n` the partial sums
//! `R_k = p_0 + p_1 e^{i theta} + ... + p_k e^{i k theta}` lie on circles
//! `C_0, C_1, ..., C_n` where `C_k` passes through `R_{k-1}` and `R_k` with
//! central angle `theta`. Consecutive circles touch only at `R_{k-1}` and each
//! one contains its predecessor, so the origin (which lies on `C_0`) can never
//! be reached by `R_n`.

use crate::chain::{
    half_angle, unit, verify_with, ChainConstruction, NonvanishingWitness, Orientation,
    VerificationReport, NONVANISHING_REL,
};
use crate::error::{Error, Result};
use crate::geometry::{Angle, Circle, Point2};
use crate::poly_bounds::{classify_monotonicity, CoefficientSequence};

/// `R_0 .. R_n` by running accumulation.
pub fn partial_sums(p: &CoefficientSequence, theta: Angle) -> Vec<Point2> {
    let mut x = 0.0;
    let mut y = 0.0;
    p.as_slice()
        .iter()
        .enumerate()
        .map(|(m, &pm)| {
            let (c, s) = unit(theta, m);
            x += pm * c;
            y += pm * s;
            Point2::new(x, y)
        })
        .collect()
}

/// `S_k = R_{k-1} + p_{k-1} e^{i k theta}` for `k = 1..n`.
pub fn probe_points(p: &CoefficientSequence, theta: Angle) -> Vec<Point2> {
    let sums = partial_sums(p, theta);
    probes_from(p, theta, &sums)
}

fn probes_from(p: &CoefficientSequence, theta: Angle, sums: &[Point2]) -> Vec<Point2> {
    (1..p.len())
        .map(|k| {
            let (c, s) = unit(theta, k);
            let base = sums[k - 1];
            Point2::new(base.x + p[k - 1] * c, base.y + p[k - 1] * s)
        })
        .collect()
}

/// Circle `C_k` from the closed form anchored at `R_{k-1}` (the origin for
/// `k = 0`).
fn circle_at(pk: f64, k: usize, theta: Angle, anchor: Point2) -> Circle {
    let (cot, csc) = half_angle(theta);
    let (c, s) = unit(theta, k);
    let half = 0.5 * pk;
    Circle::new(
        Point2::new(
            anchor.x + half * c - half * s * cot,
            anchor.y + half * s + half * c * cot,
        ),
        half * csc,
    )
}

pub fn kakeya_circle(p: &CoefficientSequence, theta: Angle, k: usize) -> Result<Circle> {
    if theta.is_axis() {
        return Err(Error::DegenerateAngle {
            theta: theta.theta(),
        });
    }
    if k > p.degree() {
        return Err(Error::IndexOutOfRange {
            k,
            degree: p.degree(),
        });
    }
    let anchor = if k == 0 {
        Point2::ORIGIN
    } else {
        partial_sums(p, theta)[k - 1]
    };
    Ok(circle_at(p[k], k, theta, anchor))
}

pub fn build_chain(p: &CoefficientSequence, theta: Angle) -> Result<ChainConstruction> {
    if !classify_monotonicity(p).is_non_decreasing() {
        return Err(Error::NotMonotone {
            expected: "non-decreasing",
        });
    }
    let sums = partial_sums(p, theta);
    let probes = probes_from(p, theta, &sums);
    let coincident = p.as_slice().windows(2).map(|w| w[0] == w[1]).collect();
    let degenerate_axis = theta.is_axis();
    let circles = if degenerate_axis {
        Vec::new()
    } else {
        (0..p.len())
            .map(|k| {
                let anchor = if k == 0 { Point2::ORIGIN } else { sums[k - 1] };
                circle_at(p[k], k, theta, anchor)
            })
            .collect()
    };
    Ok(ChainConstruction {
        orientation: Orientation::External,
        theta,
        sums,
        probes,
        circles,
        coincident,
        degenerate_axis,
    })
}

pub fn verify_chain(chain: &ChainConstruction, tol: f64) -> Result<VerificationReport> {
    verify_with(chain, Orientation::External, tol)
}

/// `|R_n|`, checked against the floor `1e-12 * sum p_k`.
pub fn nonvanishing_witness(p: &CoefficientSequence, theta: Angle) -> Result<NonvanishingWitness> {
    if !classify_monotonicity(p).is_non_decreasing() {
        return Err(Error::NotMonotone {
            expected: "non-decreasing",
        });
    }
    witness(p, theta, partial_sums(p, theta))
}

pub(crate) fn witness(
    p: &CoefficientSequence,
    theta: Angle,
    sums: Vec<Point2>,
) -> Result<NonvanishingWitness> {
    let endpoint = *sums.last().expect("sequences are never empty");
    let magnitude = endpoint.norm();
    let floor = NONVANISHING_REL * p.sum();
    if magnitude > floor {
        Ok(NonvanishingWitness {
            endpoint,
            magnitude,
            floor,
        })
    } else if p.all_equal() {
        Err(Error::RootOfUnityCase {
            theta: theta.theta(),
        })
    } else {
        Err(Error::Vanishing { magnitude })
    }
}
