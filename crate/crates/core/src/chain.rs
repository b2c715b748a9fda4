//! Types shared by the external and internal interlacing-circle chains,
//! and the residual checks that certify them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{collinearity_det, distance, Angle, Circle, Point2};

/// Relative floor below which a partial sum counts as zero.
pub const NONVANISHING_REL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Each circle contains its predecessor (Kakeya).
    External,
    /// Each circle is contained in its predecessor (Tomic).
    Internal,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::External => "external",
            Self::Internal => "internal",
        }
    }
}

/// Partial sums, probe points and circles of one chain.
///
/// Field order is part of the JSON format and must not change.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainConstruction {
    pub orientation: Orientation,
    pub theta: Angle,
    pub sums: Vec<Point2>,
    pub probes: Vec<Point2>,
    pub circles: Vec<Circle>,
    pub coincident: Vec<bool>,
    pub degenerate_axis: bool,
}

impl ChainConstruction {
    pub fn degree(&self) -> usize {
        self.sums.len().saturating_sub(1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("chain serialization is infallible")
    }

    /// Decodes a chain and checks its structural invariants. Geometric
    /// consistency is left to the verifiers.
    pub fn from_json(s: &str) -> Result<Self> {
        let chain: Self =
            serde_json::from_str(s).map_err(|e| Error::MalformedChain(e.to_string()))?;
        chain.validate()?;
        Ok(chain)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::MalformedChain(m.to_string()));
        if !self.theta.theta().is_finite() {
            return bad("theta must be finite");
        }
        if self.sums.is_empty() {
            return bad("at least one partial sum is required");
        }
        let n = self.sums.len() - 1;
        if self.probes.len() != n {
            return bad("probes must have one entry fewer than sums");
        }
        if self.coincident.len() != n {
            return bad("coincident must have one entry fewer than sums");
        }
        if self.degenerate_axis != self.theta.is_axis() {
            return bad("degenerate_axis disagrees with theta");
        }
        let expected_circles = if self.degenerate_axis { 0 } else { n + 1 };
        if self.circles.len() != expected_circles {
            return bad("wrong number of circles");
        }
        if !self.sums.iter().chain(&self.probes).all(|p| p.is_finite()) {
            return bad("non-finite point");
        }
        if !self
            .circles
            .iter()
            .all(|c| c.center.is_finite() && c.radius.is_finite() && c.radius > 0.0)
        {
            return bad("circles need finite centers and positive radii");
        }
        let first = self.sums[0];
        if !(first.y == 0.0 && first.x > 0.0) {
            return bad("first partial sum must lie on the positive real axis");
        }
        Ok(())
    }

    /// Coefficients recovered from the step lengths between partial sums.
    pub fn step_lengths(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.sums.len());
        out.push(distance(Point2::ORIGIN, self.sums[0]));
        out.extend(self.sums.windows(2).map(|w| distance(w[0], w[1])));
        out
    }

    pub fn endpoint(&self) -> Point2 {
        *self.sums.last().expect("validated chains have a sum")
    }

    pub fn max_radius(&self) -> f64 {
        self.circles.iter().map(|c| c.radius).fold(0.0, f64::max)
    }
}

/// Residuals of every identity a chain must satisfy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// `| |C_k - C_{k-1}| - |r_k - r_{k-1}| |`
    pub tangency_residuals: Vec<f64>,
    /// Distance-to-circumference of `R_{k-1}` on circle `k` and circle `k-1`.
    pub membership_residuals: Vec<f64>,
    /// Distance-to-circumference of `S_k` on circle `k-1`.
    pub probe_residuals: Vec<f64>,
    /// `|det(R_{k-1}, C_{k-1}, C_k)|`
    pub collinearity_residuals: Vec<f64>,
    /// How far the inner circle of each pair pokes out of the outer one.
    pub nesting_residuals: Vec<f64>,
    pub nonvanishing_magnitude: f64,
    pub scale: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn worst(v: &[f64]) -> f64 {
        v.iter().copied().fold(0.0, f64::max)
    }

    pub fn worst_tangency(&self) -> f64 {
        Self::worst(&self.tangency_residuals)
    }

    pub fn worst_membership(&self) -> f64 {
        Self::worst(&self.membership_residuals)
    }

    pub fn worst_probe(&self) -> f64 {
        Self::worst(&self.probe_residuals)
    }

    pub fn worst_collinearity(&self) -> f64 {
        Self::worst(&self.collinearity_residuals)
    }

    pub fn worst_nesting(&self) -> f64 {
        Self::worst(&self.nesting_residuals)
    }
}

/// Shared residual computation. `expected` is the orientation the caller's
/// verifier accepts.
pub(crate) fn verify_with(
    chain: &ChainConstruction,
    expected: Orientation,
    tol: f64,
) -> Result<VerificationReport> {
    if chain.orientation != expected {
        return Err(Error::WrongOrientation {
            expected: expected.as_str(),
            found: chain.orientation.as_str(),
        });
    }
    chain.validate()?;
    if chain.degenerate_axis {
        return Err(Error::DegenerateChain);
    }

    let n = chain.degree();
    let circles = &chain.circles;
    let mut tangency = Vec::with_capacity(n);
    let mut membership = Vec::with_capacity(2 * n);
    let mut probe = Vec::with_capacity(n);
    let mut collinearity = Vec::with_capacity(n);
    let mut nesting = Vec::with_capacity(n);

    for k in 1..=n {
        let (prev, cur) = (circles[k - 1], circles[k]);
        let touch = chain.sums[k - 1];
        membership.push(cur.offset(touch).abs());
        membership.push(prev.offset(touch).abs());
        probe.push(prev.offset(chain.probes[k - 1]).abs());

        let (outer, inner) = match chain.orientation {
            Orientation::External => (cur, prev),
            Orientation::Internal => (prev, cur),
        };
        let gap = distance(prev.center, cur.center);
        nesting.push((gap + inner.radius - outer.radius).max(0.0));

        if chain.coincident[k - 1] {
            tangency.push(0.0);
            collinearity.push(0.0);
        } else {
            tangency.push((gap - (cur.radius - prev.radius).abs()).abs());
            collinearity.push(collinearity_det(touch, prev.center, cur.center).abs());
        }
    }

    let scale = chain.max_radius();
    let floor = NONVANISHING_REL * chain.step_lengths().iter().sum::<f64>();
    let nonvanishing_magnitude = chain.endpoint().norm();
    let lin = tol * scale;
    let quad = tol * scale * scale;
    let under = |v: &[f64], bound: f64| v.iter().all(|r| *r < bound);
    let passed = under(&tangency, lin)
        && under(&membership, lin)
        && under(&probe, lin)
        && under(&nesting, lin)
        && under(&collinearity, quad)
        && nonvanishing_magnitude > floor;

    Ok(VerificationReport {
        tangency_residuals: tangency,
        membership_residuals: membership,
        probe_residuals: probe,
        collinearity_residuals: collinearity,
        nesting_residuals: nesting,
        nonvanishing_magnitude,
        scale,
        tolerance: tol,
        passed,
    })
}

/// Endpoint of a partial-sum chain together with the floor it must clear.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonvanishingWitness {
    pub endpoint: Point2,
    pub magnitude: f64,
    pub floor: f64,
}

impl NonvanishingWitness {
    pub fn margin(&self) -> f64 {
        self.magnitude - self.floor
    }
}

/// `(cos m theta, sin m theta)` with the axis cases snapped to exact values.
pub(crate) fn unit(theta: Angle, m: usize) -> (f64, f64) {
    use crate::geometry::AngleClass;
    match theta.class() {
        AngleClass::Zero => (1.0, 0.0),
        AngleClass::Pi => (if m.is_multiple_of(2) { 1.0 } else { -1.0 }, 0.0),
        _ => {
            let (s, c) = crate::geometry::sin_cos_multiple(theta.canonical(), m as f64);
            (c, s)
        }
    }
}

/// `cot(theta/2)` and `csc(theta/2)` on the canonical angle, so both stay
/// positive-radius in the lower half plane too.
pub(crate) fn half_angle(theta: Angle) -> (f64, f64) {
    let (s, c) = (0.5 * theta.canonical()).sin_cos();
    (c / s, 1.0 / s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_chain() -> ChainConstruction {
        ChainConstruction {
            orientation: Orientation::External,
            theta: Angle::new(1.0),
            sums: vec![Point2::new(1.0, 0.0)],
            probes: vec![],
            circles: vec![Circle::new(Point2::new(0.5, 0.9), 1.0)],
            coincident: vec![],
            degenerate_axis: false,
        }
    }

    #[test]
    fn json_field_order() {
        let s = tiny_chain().to_json();
        assert!(s.starts_with(r#"{"orientation":"external","theta":1.0,"sums":[{"x":1.0,"y":0.0}],"probes":[],"circles":[{"center":{"x":0.5,"y":0.9},"radius":1.0}],"coincident":[],"degenerate_axis":false}"#));
        assert_eq!(ChainConstruction::from_json(&s).unwrap(), tiny_chain());
    }

    #[test]
    fn decode_rejects_inconsistent() {
        let mut c = tiny_chain();
        c.probes.push(Point2::ORIGIN);
        assert!(matches!(
            ChainConstruction::from_json(&c.to_json()),
            Err(Error::MalformedChain(_))
        ));

        let mut c = tiny_chain();
        c.circles[0].radius = -1.0;
        assert!(ChainConstruction::from_json(&c.to_json()).is_err());

        let mut c = tiny_chain();
        c.degenerate_axis = true;
        assert!(ChainConstruction::from_json(&c.to_json()).is_err());

        assert!(ChainConstruction::from_json("{}").is_err());
        assert!(ChainConstruction::from_json("not json").is_err());
    }

    #[test]
    fn wrong_orientation_is_an_error() {
        let c = tiny_chain();
        assert_eq!(
            verify_with(&c, Orientation::Internal, 1e-9),
            Err(Error::WrongOrientation {
                expected: "internal",
                found: "external"
            })
        );
    }
}
