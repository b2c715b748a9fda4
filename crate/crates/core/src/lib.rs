//! Enestrom-Kakeya zero bounds for positive-coefficient polynomials, and the
//! interlacing circle chains that show `p_0 + p_1 e^{i theta} + ... +
//! p_n e^{i n theta}` cannot vanish for monotone coefficients.
//!
//! * [`poly_bounds`]: coefficient sequences and the annulus
//! * [`geometry`]: points, circles, angles
//! * [`kakeya`]: external chain (non-decreasing coefficients)
//! * [`tomic`]: internal chain (non-increasing coefficients)
//! * [`roots`]: Aberth-Ehrlich root finder used to check the annulus
//! * [`figure`]: SVG output
//! * [`parse`]: text decoders for coefficients and angles

pub mod chain;
pub mod error;
pub mod figure;
pub mod geometry;
pub mod kakeya;
pub mod parse;
pub mod poly_bounds;
pub mod roots;
pub mod tomic;

pub use chain::{ChainConstruction, NonvanishingWitness, Orientation, VerificationReport};
pub use error::{Error, Result};
pub use geometry::{Angle, AngleClass, Circle, Point2};
pub use poly_bounds::{Annulus, CoefficientSequence, MonotonicityClass};
pub use roots::RootSet;
