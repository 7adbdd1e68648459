//! Bézier curves and tensor-product patches built on Bernstein bases with
//! shifted knots.
//!
//! The knot shift `(alpha, beta)` with `0 <= alpha <= beta` moves the
//! degree-`n` basis from `[0, 1]` to `[alpha/(n+beta), (n+alpha)/(n+beta)]`;
//! `alpha = beta = 0` gives the classical Bernstein basis back.
//!
//! Every type is generic over [`Scalar`], so the same code runs in `f32`,
//! `f64` or exact rational arithmetic. The aliases below cover the common
//! instantiations.
//!
//! ```
//! use shifted_bezier::{Curve64, Knots64, Point};
//!
//! let knots = Knots64::new(4.0, 6.0).unwrap();
//! let curve = Curve64::new(
//!     knots,
//!     vec![Point::from([0.0, 0.0]), Point::from([1.0, 2.0]), Point::from([3.0, 0.0])],
//! )
//! .unwrap();
//! let lo = *curve.domain().lo();
//! assert_eq!(curve.eval(&lo).unwrap(), Point::from([0.0, 0.0]));
//! ```

pub mod basis;
pub mod curve;
pub mod error;
pub mod matrix;
pub mod point;
pub mod scalar;
pub mod surface;

pub use basis::{
    basis_derivative, basis_row, basis_row_by_recurrence, basis_value, elevation_coefficients,
    BasisIndex, Domain, ShiftedKnots, MAX_DEGREE,
};
pub use curve::{step_product, Curve, DeCasteljauTriangle, ElevationMatrix, End, StepMatrix};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use point::Point;
pub use scalar::{binomial, Scalar};
pub use surface::{ElevationWeights, GridRow, SurfacePatch};

pub type Knots64 = ShiftedKnots<f64>;
pub type Point64 = Point<f64>;
pub type Curve64 = Curve<f64>;
pub type Patch64 = SurfacePatch<f64>;

pub type Knots32 = ShiftedKnots<f32>;
pub type Curve32 = Curve<f32>;
pub type Patch32 = SurfacePatch<f32>;

#[cfg(feature = "rational")]
pub use num_rational::BigRational;

#[cfg(feature = "rational")]
pub type RationalKnots = ShiftedKnots<BigRational>;
#[cfg(feature = "rational")]
pub type RationalPoint = Point<BigRational>;
#[cfg(feature = "rational")]
pub type RationalCurve = Curve<BigRational>;
#[cfg(feature = "rational")]
pub type RationalPatch = SurfacePatch<BigRational>;
