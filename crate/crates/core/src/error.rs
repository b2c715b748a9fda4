use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient list is empty")]
    Empty,
    #[error("coefficient {index} is not a finite positive number: {value}")]
    NonPositiveCoefficient { index: usize, value: f64 },
    #[error("degree-zero polynomial has no coefficient ratios")]
    DegreeZero,
    #[error("angle {theta} is too close to a multiple of 2*pi")]
    AngleAtSingularity { theta: f64 },
    #[error("angle {theta} is a multiple of pi; circles degenerate to line segments")]
    DegenerateAngle { theta: f64 },
    #[error("three points are collinear; no circumcircle")]
    CollinearPoints,
    #[error("coefficients are not {expected}")]
    NotMonotone { expected: &'static str },
    #[error("root-of-unity case: equal coefficients make the sum vanish at theta = {theta}")]
    RootOfUnityCase { theta: f64 },
    #[error("partial sum vanished numerically (|sum| = {magnitude:e})")]
    Vanishing { magnitude: f64 },
    #[error("chain lies on the real axis; use the sign rules instead of circle verification")]
    DegenerateChain,
    #[error("chain orientation is {found}, expected {expected}")]
    WrongOrientation {
        expected: &'static str,
        found: &'static str,
    },
    #[error("circle index {k} exceeds degree {degree}")]
    IndexOutOfRange { k: usize, degree: usize },
    #[error("chain has no points to render")]
    EmptyChain,
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root iteration did not converge after {iterations} iterations")]
    NotConverged { iterations: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
