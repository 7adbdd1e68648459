use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A control point or evaluated point in `d`-dimensional space.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn origin(dim: usize) -> Self {
        Self {
            coords: vec![T::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(Scalar::is_finite_value)
    }

    /// `self += weight * other`.
    pub fn add_scaled(&mut self, weight: &T, other: &Point<T>) {
        for (c, o) in self.coords.iter_mut().zip(&other.coords) {
            *c = c.clone() + weight.clone() * o.clone();
        }
    }

    /// `wa * a + wb * b`.
    pub fn combine(wa: &T, a: &Point<T>, wb: &T, b: &Point<T>) -> Point<T> {
        Point {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| wa.clone() * x.clone() + wb.clone() * y.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Point<T>) -> Point<T> {
        Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(x, y)| x.clone() - y.clone())
                .collect(),
        }
    }

    pub fn scaled(&self, factor: &T) -> Point<T> {
        Point {
            coords: self.coords.iter().map(|x| factor.clone() * x.clone()).collect(),
        }
    }

    pub fn dot(&self, other: &Point<T>) -> T {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(&self, other: &Point<T>) -> T {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(x, y)| (x.clone() - y.clone()).abs())
            .fold(T::zero(), |m, d| if d > m { d } else { m })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Point<U> {
        Point {
            coords: self.coords.iter().map(f).collect(),
        }
    }
}

impl Point<f64> {
    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(&self, other: &Point<f64>) -> f64 {
        self.sub(other).norm()
    }
}

impl<T> Index<usize> for Point<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}

impl<T: Scalar> From<Vec<T>> for Point<T> {
    fn from(coords: Vec<T>) -> Self {
        Self::new(coords)
    }
}

impl<T: Scalar, const D: usize> From<[T; D]> for Point<T> {
    fn from(coords: [T; D]) -> Self {
        Self::new(coords.into())
    }
}

/// Common dimension of a nonempty list of finite points.
pub(crate) fn common_dimension<'a, T: Scalar + 'a>(
    points: impl IntoIterator<Item = &'a Point<T>>,
) -> Result<usize> {
    let mut dim = None;
    for (index, p) in points.into_iter().enumerate() {
        let expected = *dim.get_or_insert(p.dim());
        if expected == 0 {
            return Err(Error::EmptyPoint);
        }
        if p.dim() != expected {
            return Err(Error::DimensionMismatch {
                index,
                expected,
                found: p.dim(),
            });
        }
        if !p.is_finite() {
            return Err(Error::NonFinite(index));
        }
    }
    dim.ok_or(Error::TooFewControlPoints(0))
}

/// `sum_k weights[k] * points[k]`.
pub(crate) fn weighted_sum<T: Scalar>(weights: &[T], points: &[Point<T>]) -> Point<T> {
    let mut acc = Point::origin(points[0].dim());
    for (w, p) in weights.iter().zip(points) {
        acc.add_scaled(w, p);
    }
    acc
}
