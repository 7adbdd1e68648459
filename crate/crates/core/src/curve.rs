//! Bézier curves over the shifted-knot basis.
//!
//! A degree-`n` curve `P(t) = sum_k P_k G(n,k)(t)` is evaluated on its
//! degree-`n` domain. Three evaluation routes are provided and agree to
//! rounding: the direct basis sum, the de Casteljau pyramid, and the product
//! of bidiagonal step matrices.

use crate::basis::{check_degree, row_on, Domain, ShiftedKnots, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::point::{common_dimension, weighted_sum, Point};
use crate::scalar::Scalar;

/// Curve end selector for [`Curve::endpoint_derivative`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Lo,
    Hi,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Curve<T> {
    knots: ShiftedKnots<T>,
    domain: Domain<T>,
    control: Vec<Point<T>>,
}

impl<T: Scalar> Curve<T> {
    /// Degree is `control.len() - 1`; all points must share one dimension.
    pub fn new(knots: ShiftedKnots<T>, control: Vec<Point<T>>) -> Result<Self> {
        if control.len() < 2 {
            return Err(Error::TooFewControlPoints(control.len()));
        }
        common_dimension(&control)?;
        let domain = knots.domain(control.len() - 1)?;
        Ok(Self {
            knots,
            domain,
            control,
        })
    }

    pub fn degree(&self) -> usize {
        self.control.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.control[0].dim()
    }

    pub fn knots(&self) -> &ShiftedKnots<T> {
        &self.knots
    }

    pub fn domain(&self) -> &Domain<T> {
        &self.domain
    }

    pub fn control(&self) -> &[Point<T>] {
        &self.control
    }

    /// Same as [`Curve::eval_direct`].
    pub fn eval(&self, t: &T) -> Result<Point<T>> {
        self.eval_direct(t)
    }

    /// Evaluates after clamping `t` into the domain.
    pub fn eval_clamped(&self, t: &T) -> Point<T> {
        let t = self.domain.clamp(t);
        weighted_sum(&row_on(&self.domain, &t), &self.control)
    }

    /// Evaluates at normalized parameter `s` in `[0, 1]`.
    pub fn eval_normalized(&self, s: &T) -> Result<Point<T>> {
        self.eval_direct(&self.domain.denormalize(s))
    }

    /// Basis-weighted sum of the control points.
    pub fn eval_direct(&self, t: &T) -> Result<Point<T>> {
        let t = self.domain.locate(t)?;
        Ok(weighted_sum(&row_on(&self.domain, &t), &self.control))
    }

    /// Recursive de Casteljau evaluation:
    /// `P(r,i) = ((n+beta)/n)(hi - t) P(r-1,i) + ((n+beta)/n)(t - lo) P(r-1,i+1)`.
    pub fn eval_decasteljau(&self, t: &T) -> Result<Point<T>> {
        let t = self.domain.locate(t)?;
        let (w_hi, w_lo) = self.domain.weights(&t);
        let mut level = self.control.clone();
        for r in 1..=self.degree() {
            for i in 0..=self.degree() - r {
                level[i] = Point::combine(&w_hi, &level[i], &w_lo, &level[i + 1]);
            }
        }
        level.truncate(1);
        Ok(level.pop().expect("nonempty pyramid"))
    }

    /// Every intermediate point of the de Casteljau pyramid at `t`.
    pub fn decasteljau_triangle(&self, t: &T) -> Result<DeCasteljauTriangle<T>> {
        let t = self.domain.locate(t)?;
        let (w_hi, w_lo) = self.domain.weights(&t);
        let mut levels = vec![self.control.clone()];
        for _ in 0..self.degree() {
            let prev = levels.last().expect("level 0 present");
            let next = prev
                .windows(2)
                .map(|pair| Point::combine(&w_hi, &pair[0], &w_lo, &pair[1]))
                .collect();
            levels.push(next);
        }
        Ok(DeCasteljauTriangle { levels })
    }

    /// Matrix form of de Casteljau: `P^n = M_n(t) ... M_2(t) M_1(t) P^0`,
    /// applying each step matrix in turn.
    pub fn eval_matrix_form(&self, t: &T) -> Result<Point<T>> {
        let t = self.domain.locate(t)?;
        let mut level = self.control.clone();
        for r in 1..=self.degree() {
            level = StepMatrix::on_domain(&self.domain, r, &t)?.apply(&level);
        }
        Ok(level.pop().expect("single apex point"))
    }

    /// Degree `n+1` control polygon describing the same curve shape:
    /// `P*_j = (j/(n+1)) P_{j-1} + ((n+1-j)/(n+1)) P_j`.
    ///
    /// The elevated curve lives on the degree-`n+1` domain; it agrees with
    /// the original at equal normalized parameters.
    pub fn elevate(&self) -> Result<Curve<T>> {
        let control = ElevationMatrix::new(self.degree())?.apply(&self.control);
        Curve::new(self.knots.clone(), control)
    }

    /// `levels` successive elevations, `T_{n+l} ... T_{n+1} P`.
    pub fn elevate_many(&self, levels: usize) -> Result<Curve<T>> {
        if self.degree() + levels > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(self.degree() + levels));
        }
        let mut curve = self.clone();
        for _ in 0..levels {
            curve = curve.elevate()?;
        }
        Ok(curve)
    }

    /// Derivative at a domain endpoint: `(n+beta)(P_1 - P_0)` at `lo`,
    /// `(n+beta)(P_n - P_{n-1})` at `hi`.
    pub fn endpoint_derivative(&self, end: End) -> Point<T> {
        let n = self.degree();
        let factor = T::from_count(n) + self.knots.beta().clone();
        let edge = match end {
            End::Lo => self.control[1].sub(&self.control[0]),
            End::Hi => self.control[n].sub(&self.control[n - 1]),
        };
        edge.scaled(&factor)
    }

    /// Derivative anywhere in the domain, from the termwise derivative of
    /// the basis sum.
    pub fn derivative(&self, t: &T) -> Result<Point<T>> {
        let t = self.domain.locate(t)?;
        let n = self.degree();
        // P'(t) = (n+beta) sum_k (P_{k+1} - P_k) B(n-1,k) with the degree-n
        // domain constants.
        let factor = T::from_count(n) + self.knots.beta().clone();
        let edges: Vec<Point<T>> = self.control.windows(2).map(|w| w[1].sub(&w[0])).collect();
        let weights: Vec<T> = (0..n)
            .map(|k| self.domain.scaled_bernstein(n - 1, k, &t))
            .collect();
        Ok(weighted_sum(&weights, &edges).scaled(&factor))
    }

    /// `count` uniform samples `(t, P(t))` over the whole domain.
    pub fn sample(&self, count: usize) -> Result<Vec<(T, Point<T>)>> {
        self.domain
            .samples(count)?
            .into_iter()
            .map(|t| self.eval_direct(&t).map(|p| (t, p)))
            .collect()
    }

    /// Applies `f` to every control point.
    pub fn map_control(&self, f: impl Fn(&Point<T>) -> Point<T>) -> Result<Curve<T>> {
        Curve::new(self.knots.clone(), self.control.iter().map(f).collect())
    }
}

/// Intermediate points `P(r,i)` of one de Casteljau run; level `r` holds
/// `n - r + 1` points.
#[derive(Debug, Clone, PartialEq)]
pub struct DeCasteljauTriangle<T> {
    levels: Vec<Vec<Point<T>>>,
}

impl<T: Scalar> DeCasteljauTriangle<T> {
    pub fn levels(&self) -> &[Vec<Point<T>>] {
        &self.levels
    }

    pub fn level(&self, r: usize) -> &[Point<T>] {
        &self.levels[r]
    }

    pub fn apex(&self) -> &Point<T> {
        &self.levels[self.levels.len() - 1][0]
    }
}

/// `(n+2) x (n+1)` degree-elevation matrix `T_{n+1}`.
///
/// Row `j` holds `j/(n+1)` in column `j-1` and `(n+1-j)/(n+1)` in column `j`;
/// rows `0` and `n+1` are unit rows.
#[derive(Debug, Clone, PartialEq)]
pub struct ElevationMatrix<T>(Matrix<T>);

impl<T: Scalar> ElevationMatrix<T> {
    pub fn new(n: usize) -> Result<Self> {
        check_degree(n)?;
        let mut m = Matrix::zeros(n + 2, n + 1);
        for j in 0..=n + 1 {
            if j > 0 {
                m.set(j, j - 1, T::ratio(j, n + 1));
            }
            if j <= n {
                m.set(j, j, T::ratio(n + 1 - j, n + 1));
            }
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn apply(&self, control: &[Point<T>]) -> Vec<Point<T>> {
        self.0.apply(control)
    }
}

/// `(n-r+1) x (n-r+2)` bidiagonal de Casteljau step matrix `M_r(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepMatrix<T>(Matrix<T>);

impl<T: Scalar> StepMatrix<T> {
    /// Step `r` (1-based) for the degree-`n` basis of `knots` at `t`.
    pub fn new(knots: &ShiftedKnots<T>, n: usize, r: usize, t: &T) -> Result<Self> {
        let domain = knots.domain(n)?;
        let t = domain.locate(t)?;
        Self::on_domain(&domain, r, &t)
    }

    pub(crate) fn on_domain(domain: &Domain<T>, r: usize, t: &T) -> Result<Self> {
        let n = domain.degree();
        if r == 0 || r > n {
            return Err(Error::StepOutOfRange { r, n });
        }
        let (w_hi, w_lo) = domain.weights(t);
        let rows = n - r + 1;
        let mut m = Matrix::zeros(rows, rows + 1);
        for i in 0..rows {
            m.set(i, i, w_hi.clone());
            m.set(i, i + 1, w_lo.clone());
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn apply(&self, level: &[Point<T>]) -> Vec<Point<T>> {
        self.0.apply(level)
    }
}

/// Product `M_r(t) ... M_1(t)`, an `(n-r+1) x (n+1)` matrix mapping the
/// control polygon to level `r` of the pyramid.
pub fn step_product<T: Scalar>(knots: &ShiftedKnots<T>, n: usize, r: usize, t: &T) -> Result<Matrix<T>> {
    let domain = knots.domain(n)?;
    let t = domain.locate(t)?;
    let mut acc = StepMatrix::on_domain(&domain, 1, &t)?.0;
    for step in 2..=r {
        acc = StepMatrix::on_domain(&domain, step, &t)?.0.mul(&acc);
    }
    Ok(acc)
}
