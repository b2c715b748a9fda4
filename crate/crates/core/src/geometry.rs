//! Planar primitives shared by both chain constructions.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance for geometric predicates.
pub const TAU_GEOM: f64 = 1e-12;
/// Absolute tolerance for recognising angles `0` and `pi`.
pub const TAU_ANGLE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub const fn new(center: Point2, radius: f64) -> Self {
        Self { center, radius }
    }

    /// Signed gap between `p` and the circumference.
    pub fn offset(&self, p: Point2) -> f64 {
        distance(self.center, p) - self.radius
    }
}

/// An angle in radians together with its representative in `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "f64", into = "f64")]
pub struct Angle {
    theta: f64,
    canonical: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleClass {
    Zero,
    Pi,
    UpperHalf,
    LowerHalf,
}

impl Angle {
    pub fn new(theta: f64) -> Self {
        let mut canonical = theta.rem_euclid(TAU);
        // rem_euclid rounds tiny negative inputs up to exactly 2pi
        if canonical >= TAU {
            canonical = 0.0;
        }
        Self { theta, canonical }
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    pub fn canonical(self) -> f64 {
        self.canonical
    }

    pub fn class(self) -> AngleClass {
        classify_angle(self)
    }

    /// True for `0` and `pi`, where the circles collapse to segments.
    pub fn is_axis(self) -> bool {
        matches!(self.class(), AngleClass::Zero | AngleClass::Pi)
    }

    pub fn negated(self) -> Self {
        Self::new(-self.theta)
    }
}

impl From<f64> for Angle {
    fn from(theta: f64) -> Self {
        Self::new(theta)
    }
}

impl From<Angle> for f64 {
    fn from(a: Angle) -> f64 {
        a.theta
    }
}

/// `(sin m*theta, cos m*theta)` with the rounding error of the product
/// `m * theta` recovered by FMA and folded back in to first order.
pub fn sin_cos_multiple(theta: f64, m: f64) -> (f64, f64) {
    let hi = m * theta;
    let lo = m.mul_add(theta, -hi);
    let (s, c) = hi.sin_cos();
    (s + c * lo, c - s * lo)
}

pub fn distance(p: Point2, q: Point2) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

/// Determinant of the rows `(x, y, 1)` for `a`, `b`, `c`. Positive when the
/// triple turns counter-clockwise.
pub fn collinearity_det(a: Point2, b: Point2, c: Point2) -> f64 {
    let u = b.sub(a);
    let v = c.sub(a);
    u.x * v.y - u.y * v.x
}

pub fn circumcircle(a: Point2, b: Point2, c: Point2) -> Result<Circle> {
    let scale = a.max_abs().max(b.max_abs()).max(c.max_abs());
    let det = collinearity_det(a, b, c);
    // NaN falls through to the error as well
    if det.is_nan() || det.abs() <= TAU_GEOM * scale * scale {
        return Err(Error::CollinearPoints);
    }
    let u = b.sub(a);
    let v = c.sub(a);
    let uu = u.x * u.x + u.y * u.y;
    let vv = v.x * v.x + v.y * v.y;
    let d = 2.0 * det;
    let off = Point2::new((v.y * uu - u.y * vv) / d, (u.x * vv - v.x * uu) / d);
    Ok(Circle::new(
        Point2::new(a.x + off.x, a.y + off.y),
        off.norm(),
    ))
}

pub fn classify_angle(a: Angle) -> AngleClass {
    let t = a.canonical;
    if t < TAU_ANGLE || TAU - t < TAU_ANGLE {
        AngleClass::Zero
    } else if (t - PI).abs() < TAU_ANGLE {
        AngleClass::Pi
    } else if t < PI {
        AngleClass::UpperHalf
    } else {
        AngleClass::LowerHalf
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    const SQRT3: f64 = 1.732_050_807_568_877_2;

    #[test]
    fn distances() {
        assert_eq!(distance(Point2::new(0.0, 0.0), Point2::new(3.0, 4.0)), 5.0);
        assert_eq!(distance(Point2::new(1.0, 1.0), Point2::new(1.0, 1.0)), 0.0);
        let d = distance(Point2::new(0.5, SQRT3 / 2.0), Point2::new(0.0, SQRT3));
        assert_abs_diff_eq!(d, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn determinants() {
        let p = Point2::new;
        assert_eq!(collinearity_det(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)), 0.0);
        assert_eq!(collinearity_det(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)), 1.0);
        let d = collinearity_det(p(1.0, 0.0), p(0.5, SQRT3 / 2.0), p(0.0, SQRT3));
        assert!(d.abs() < 1e-12);
    }

    // Perpendicular bisectors as a 2x2 system solved by Cramer's rule.
    fn bisector_center(a: Point2, b: Point2, c: Point2) -> Point2 {
        let (a1, b1) = (2.0 * (b.x - a.x), 2.0 * (b.y - a.y));
        let c1 = b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y;
        let (a2, b2) = (2.0 * (c.x - a.x), 2.0 * (c.y - a.y));
        let c2 = c.x * c.x + c.y * c.y - a.x * a.x - a.y * a.y;
        let det = a1 * b2 - a2 * b1;
        Point2::new((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
    }

    #[test]
    fn circumcircle_examples() {
        let p = Point2::new;
        let (a, b, c) = (p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0));
        let oracle = bisector_center(a, b, c);
        assert_eq!(oracle, p(1.0, 0.0));
        let circ = circumcircle(a, b, c).unwrap();
        assert_abs_diff_eq!(circ.center.x, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(circ.center.y, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(circ.radius, 1.0, epsilon = 1e-14);

        let circ = circumcircle(p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.5)).unwrap();
        assert_abs_diff_eq!(circ.center.x, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(circ.center.y, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(circ.radius, 0.5, epsilon = 1e-14);

        // O, R_0 and S_1 for p_0 = 1, theta = pi/3
        let circ = circumcircle(p(0.0, 0.0), p(1.0, 0.0), p(1.5, SQRT3 / 2.0)).unwrap();
        assert_abs_diff_eq!(circ.center.x, 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(circ.center.y, SQRT3 / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(circ.radius, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn circumcircle_collinear() {
        let p = Point2::new;
        assert_eq!(
            circumcircle(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)),
            Err(Error::CollinearPoints)
        );
        assert_eq!(
            circumcircle(p(1.0, 1.0), p(1.0, 1.0), p(1.0, 1.0)),
            Err(Error::CollinearPoints)
        );
    }

    #[test]
    fn angle_classes() {
        assert_eq!(Angle::new(PI / 3.0).class(), AngleClass::UpperHalf);
        assert_eq!(Angle::new(1.5 * PI).class(), AngleClass::LowerHalf);
        assert_eq!(Angle::new(TAU).class(), AngleClass::Zero);
        assert_eq!(Angle::new(-PI).class(), AngleClass::Pi);
        assert_eq!(Angle::new(3.0 * PI).class(), AngleClass::Pi);
        assert_eq!(Angle::new(-1e-17).canonical(), 0.0);
        assert_eq!(Angle::new(-PI / 3.0).class(), AngleClass::LowerHalf);
        assert!(Angle::new(0.0).is_axis());
    }

    fn coord() -> impl Strategy<Value = f64> {
        -100.0..100.0f64
    }

    fn point() -> impl Strategy<Value = Point2> {
        (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
    }

    proptest! {
        #[test]
        fn circumcircle_permutation_invariant(a in point(), b in point(), c in point()) {
            let scale = a.max_abs().max(b.max_abs()).max(c.max_abs());
            prop_assume!(collinearity_det(a, b, c).abs() > 1e-3 * scale * scale);
            let base = circumcircle(a, b, c).unwrap();
            for (p, q, r) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                let other = circumcircle(p, q, r).unwrap();
                let s = scale.max(base.radius);
                prop_assert!(distance(base.center, other.center) <= 1e-10 * s);
                prop_assert!((base.radius - other.radius).abs() <= 1e-10 * base.radius);
            }
            for p in [a, b, c] {
                prop_assert!(base.offset(p).abs() <= 1e-10 * base.radius);
            }
        }

        #[test]
        fn det_antisymmetric(a in point(), b in point(), c in point()) {
            let d = collinearity_det(a, b, c);
            let s = a.max_abs().max(b.max_abs()).max(c.max_abs()).max(1.0);
            prop_assert!((d + collinearity_det(b, a, c)).abs() <= 1e-12 * s * s);
            prop_assert!((d + collinearity_det(a, c, b)).abs() <= 1e-12 * s * s);
        }

        #[test]
        fn triangle_inequality(a in point(), b in point(), c in point()) {
            prop_assert!(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
            prop_assert_eq!(distance(a, b), distance(b, a));
        }
    }
}
