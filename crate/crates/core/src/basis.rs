//! Bernstein basis functions with shifted knots.
//!
//! For knot shifts `0 <= alpha <= beta` the degree-`n` basis lives on
//! `[alpha/(n+beta), (n+alpha)/(n+beta)]` and reads
//!
//! ```text
//! G(n,k)(t) = C(n,k) * ((n+beta)/n)^n * (t - lo)^k * (hi - t)^(n-k)
//! ```
//!
//! Since `hi - lo = n/(n+beta)`, this is the classical Bernstein basis
//! composed with the affine map of the domain onto `[0, 1]`; with
//! `alpha = beta = 0` it is the classical basis itself.

use crate::error::{Error, Result};
use crate::scalar::{binomial_as, powi, Scalar};

/// Largest degree the kernel accepts. Binomials up to this degree are exact
/// in `u128`.
pub const MAX_DEGREE: usize = 64;

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroDegree)
    } else if n > MAX_DEGREE {
        Err(Error::DegreeTooLarge(n))
    } else {
        Ok(())
    }
}

/// The `(alpha, beta)` knot-shift pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedKnots<T> {
    alpha: T,
    beta: T,
}

impl<T: Scalar> ShiftedKnots<T> {
    /// Validates `0 <= alpha <= beta`.
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        let ok = alpha.is_finite_value()
            && beta.is_finite_value()
            && alpha >= T::zero()
            && beta >= T::zero()
            && alpha <= beta;
        if !ok {
            return Err(Error::InvalidShift {
                alpha: alpha.approx_f64(),
                beta: beta.approx_f64(),
            });
        }
        Ok(Self { alpha, beta })
    }

    /// `alpha = beta = 0`: the classical Bernstein basis on `[0, 1]`.
    pub fn classical() -> Self {
        Self {
            alpha: T::zero(),
            beta: T::zero(),
        }
    }

    pub fn alpha(&self) -> &T {
        &self.alpha
    }

    pub fn beta(&self) -> &T {
        &self.beta
    }

    pub fn is_classical(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    /// Parameter interval of the degree-`n` basis.
    pub fn domain(&self, n: usize) -> Result<Domain<T>> {
        check_degree(n)?;
        let nn = T::from_count(n);
        let denom = nn.clone() + self.beta.clone();
        Ok(Domain {
            lo: self.alpha.clone() / denom.clone(),
            hi: (nn.clone() + self.alpha.clone()) / denom.clone(),
            scale: denom / nn,
            degree: n,
        })
    }
}

impl<T: Scalar> Default for ShiftedKnots<T> {
    fn default() -> Self {
        Self::classical()
    }
}

/// Closed parameter interval of one degree, together with the normalising
/// factor `(n+beta)/n = 1/(hi-lo)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Domain<T> {
    lo: T,
    hi: T,
    scale: T,
    degree: usize,
}

impl<T: Scalar> Domain<T> {
    pub fn lo(&self) -> &T {
        &self.lo
    }

    pub fn hi(&self) -> &T {
        &self.hi
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `(n+beta)/n`.
    pub fn scale(&self) -> &T {
        &self.scale
    }

    /// `n/(n+beta)`, always positive.
    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        (self.lo.clone() + self.hi.clone()) / T::from_count(2)
    }

    pub fn contains(&self, t: &T) -> bool {
        *t >= self.lo && *t <= self.hi
    }

    /// Accepts `t` if it lies in the domain, up to the scalar type's rounding
    /// slack, and returns it snapped into the closed interval.
    pub fn locate(&self, t: &T) -> Result<T> {
        let slack = T::domain_slack(if self.hi.abs() > self.lo.abs() {
            &self.hi
        } else {
            &self.lo
        });
        let inside = t.is_finite_value()
            && *t >= self.lo.clone() - slack.clone()
            && *t <= self.hi.clone() + slack;
        if !inside {
            return Err(Error::OutOfDomain {
                t: t.approx_f64(),
                lo: self.lo.approx_f64(),
                hi: self.hi.approx_f64(),
            });
        }
        Ok(self.clamp(t))
    }

    pub fn clamp(&self, t: &T) -> T {
        if *t < self.lo {
            self.lo.clone()
        } else if *t > self.hi {
            self.hi.clone()
        } else {
            t.clone()
        }
    }

    /// Affine map of the domain onto `[0, 1]`.
    pub fn normalize(&self, t: &T) -> T {
        (t.clone() - self.lo.clone()) * self.scale.clone()
    }

    /// Inverse of [`Domain::normalize`]; `s = 0` and `s = 1` hit the
    /// endpoints exactly.
    pub fn denormalize(&self, s: &T) -> T {
        if s.is_zero() {
            self.lo.clone()
        } else if s.is_one() {
            self.hi.clone()
        } else {
            self.lo.clone() + self.width() * s.clone()
        }
    }

    /// Complementary de Casteljau weights at `t`:
    /// `((n+beta)/n)(hi - t)` for the left point and `((n+beta)/n)(t - lo)`
    /// for the right one. They sum to one, and are exactly `(1, 0)` and
    /// `(0, 1)` at the endpoints.
    pub fn weights(&self, t: &T) -> (T, T) {
        if *t == self.lo {
            return (T::one(), T::zero());
        }
        if *t == self.hi {
            return (T::zero(), T::one());
        }
        (
            self.scale.clone() * (self.hi.clone() - t.clone()),
            self.scale.clone() * (t.clone() - self.lo.clone()),
        )
    }

    /// `count` uniformly spaced parameters including both endpoints.
    pub fn samples(&self, count: usize) -> Result<Vec<T>> {
        if count < 2 {
            return Err(Error::TooFewSamples(count));
        }
        let last = count - 1;
        Ok((0..count)
            .map(|i| {
                if i == last {
                    self.hi.clone()
                } else {
                    self.denormalize(&T::ratio(i, last))
                }
            })
            .collect())
    }

    /// Degree-`degree` Bernstein function built from *this* domain's
    /// constants: `C(degree,k) * scale^degree * (t-lo)^k * (hi-t)^(degree-k)`.
    ///
    /// With `degree == self.degree()` this is the shifted-knot basis. Other
    /// degrees appear in the elevation and reduction identities, which only
    /// hold when every term shares one set of domain constants. No domain
    /// check is made.
    pub fn scaled_bernstein(&self, degree: usize, k: usize, t: &T) -> T {
        if k > degree {
            return T::zero();
        }
        let (w_hi, w_lo) = self.weights(t);
        binomial_as::<T>(degree, k) * powi(&w_lo, k) * powi(&w_hi, degree - k)
    }
}

/// A `(degree, index)` pair with `1 <= n <= MAX_DEGREE` and `k <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    n: usize,
    k: usize,
}

impl BasisIndex {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_degree(n)?;
        if k > n {
            return Err(Error::IndexOutOfRange { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> usize {
        self.k
    }
}

/// `G(n,k)(t)`.
pub fn basis_value<T: Scalar>(knots: &ShiftedKnots<T>, idx: BasisIndex, t: &T) -> Result<T> {
    let domain = knots.domain(idx.n)?;
    let t = domain.locate(t)?;
    Ok(domain.scaled_bernstein(idx.n, idx.k, &t))
}

/// All `n+1` basis values at `t`, by direct evaluation of each term.
pub fn basis_row<T: Scalar>(knots: &ShiftedKnots<T>, n: usize, t: &T) -> Result<Vec<T>> {
    let domain = knots.domain(n)?;
    let t = domain.locate(t)?;
    Ok(row_on(&domain, &t))
}

pub(crate) fn row_on<T: Scalar>(domain: &Domain<T>, t: &T) -> Vec<T> {
    (0..=domain.degree)
        .map(|k| domain.scaled_bernstein(domain.degree, k, t))
        .collect()
}

/// All `n+1` basis values at `t`, built up by the degree-reduction
/// recurrence
///
/// ```text
/// G(n,k) = ((n+beta)/n)(t - lo) G(n-1,k-1) + ((n+beta)/n)(hi - t) G(n-1,k)
/// ```
///
/// where every lower-degree term carries the degree-`n` constants `lo`, `hi`
/// (the Pascal split of `C(n,k)`). All weights are nonnegative in the domain.
pub fn basis_row_by_recurrence<T: Scalar>(
    knots: &ShiftedKnots<T>,
    n: usize,
    t: &T,
) -> Result<Vec<T>> {
    let domain = knots.domain(n)?;
    let t = domain.locate(t)?;
    let (w_hi, w_lo) = domain.weights(&t);
    let mut row = Vec::with_capacity(n + 1);
    row.push(T::one());
    for d in 1..=n {
        row.push(T::zero());
        for k in (0..=d).rev() {
            let keep = w_hi.clone() * row[k].clone();
            row[k] = if k > 0 {
                keep + w_lo.clone() * row[k - 1].clone()
            } else {
                keep
            };
        }
    }
    Ok(row)
}

/// Weights `(c_keep, c_shift) = ((n+1-k)/(n+1), (k+1)/(n+1))` expressing
/// `G(n,k)` in terms of `G(n+1,k)` and `G(n+1,k+1)`.
///
/// The identity holds when the degree-`n+1` functions use the degree-`n`
/// domain constants, see [`Domain::scaled_bernstein`].
pub fn elevation_coefficients<T: Scalar>(n: usize, k: usize) -> Result<(T, T)> {
    BasisIndex::new(n, k)?;
    Ok((T::ratio(n + 1 - k, n + 1), T::ratio(k + 1, n + 1)))
}

/// `d/dt G(n,k)(t)`, one-sided at the domain endpoints.
pub fn basis_derivative<T: Scalar>(knots: &ShiftedKnots<T>, idx: BasisIndex, t: &T) -> Result<T> {
    let domain = knots.domain(idx.n)?;
    let t = domain.locate(t)?;
    let (n, k) = (idx.n, idx.k);
    let (w_hi, w_lo) = domain.weights(&t);
    // scale^n (t-lo)^(k-1) (hi-t)^(n-k) == scale * w_lo^(k-1) * w_hi^(n-k)
    let rising = if k > 0 {
        T::from_count(k) * powi(&w_lo, k - 1) * powi(&w_hi, n - k)
    } else {
        T::zero()
    };
    let falling = if k < n {
        T::from_count(n - k) * powi(&w_lo, k) * powi(&w_hi, n - k - 1)
    } else {
        T::zero()
    };
    Ok(binomial_as::<T>(n, k) * domain.scale.clone() * (rising - falling))
}
