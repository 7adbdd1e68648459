//! Exact rational reference evaluation of shifted-knot Bernstein bases,
//! curves and tensor-product patches.
//!
//! Deliberately naive: every value is computed straight from the defining
//! formula `C(n,k) ((n+beta)/n)^n (t - lo)^k (hi - t)^(n-k)` in
//! arbitrary-precision rationals, with no shared code with the floating
//! point kernel it checks.

pub mod fixtures;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("knot shift must satisfy 0 <= alpha <= beta")]
    InvalidShift,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("index {k} exceeds degree {n}")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("parameter {0} outside the domain")]
    OutOfDomain(String),
    #[error("control points must be nonempty and share one dimension")]
    BadControl,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse(s: &str) -> Result<Q> {
    let bad = || OracleError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(p, q))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Reduced `"p"` or `"p/q"` form.
pub fn format(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Nearest `f64`, via a long division precise enough that the only error
/// left is the final rounding.
pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let scaled = (q * Q::from_integer(BigInt::from(1u64) << 200)).round();
        scaled.to_integer().to_f64().unwrap_or(f64::NAN) * 2f64.powi(-200)
    })
}

fn check_shift(alpha: &Q, beta: &Q) -> Result<()> {
    if alpha.is_negative() || beta.is_negative() || alpha > beta {
        return Err(OracleError::InvalidShift);
    }
    Ok(())
}

/// `[alpha/(n+beta), (n+alpha)/(n+beta)]`.
pub fn domain_exact(alpha: &Q, beta: &Q, n: usize) -> Result<(Q, Q)> {
    check_shift(alpha, beta)?;
    if n == 0 {
        return Err(OracleError::ZeroDegree);
    }
    let nq = int(n as i64);
    let denom = &nq + beta;
    Ok((alpha / &denom, (&nq + alpha) / &denom))
}

fn binomial_exact(n: usize, k: usize) -> BigInt {
    // n! / (k! (n-k)!) from the factorial definition
    let fact = |m: usize| (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    fact(n) / (fact(k) * fact(n - k))
}

fn pow(base: &Q, exp: usize) -> Q {
    (0..exp).fold(Q::one(), |acc, _| acc * base)
}

/// `G(n,k)(t)` exactly. `t` must lie in the closed domain.
pub fn basis_value_exact(alpha: &Q, beta: &Q, n: usize, k: usize, t: &Q) -> Result<Q> {
    let (lo, hi) = domain_exact(alpha, beta, n)?;
    if k > n {
        return Err(OracleError::IndexOutOfRange { n, k });
    }
    if t < &lo || t > &hi {
        return Err(OracleError::OutOfDomain(format(t)));
    }
    let nq = int(n as i64);
    let factor = (&nq + beta) / &nq;
    Ok(Q::from_integer(binomial_exact(n, k))
        * pow(&factor, n)
        * pow(&(t - &lo), k)
        * pow(&(&hi - t), n - k))
}

pub fn basis_row_exact(alpha: &Q, beta: &Q, n: usize, t: &Q) -> Result<Vec<Q>> {
    (0..=n).map(|k| basis_value_exact(alpha, beta, n, k, t)).collect()
}

fn check_points(points: &[Vec<Q>]) -> Result<usize> {
    let dim = points.first().map(Vec::len).ok_or(OracleError::BadControl)?;
    if dim == 0 || points.iter().any(|p| p.len() != dim) {
        return Err(OracleError::BadControl);
    }
    Ok(dim)
}

/// `sum_k P_k G(n,k)(t)` with `n = control.len() - 1`.
pub fn eval_curve_exact(alpha: &Q, beta: &Q, control: &[Vec<Q>], t: &Q) -> Result<Vec<Q>> {
    let dim = check_points(control)?;
    let n = control.len().checked_sub(1).ok_or(OracleError::BadControl)?;
    let row = basis_row_exact(alpha, beta, n, t)?;
    let mut out = vec![Q::zero(); dim];
    for (p, g) in control.iter().zip(&row) {
        for (o, c) in out.iter_mut().zip(p) {
            *o += c * g;
        }
    }
    Ok(out)
}

/// `sum_i sum_j P(i,j) G(m,i)(u) G(n,j)(v)`, `net[i][j]`.
pub fn eval_patch_exact(alpha: &Q, beta: &Q, net: &[Vec<Vec<Q>>], u: &Q, v: &Q) -> Result<Vec<Q>> {
    let cols = net.first().map(Vec::len).ok_or(OracleError::BadControl)?;
    if net.iter().any(|r| r.len() != cols) {
        return Err(OracleError::BadControl);
    }
    let flat: Vec<Vec<Q>> = net.iter().flatten().cloned().collect();
    let dim = check_points(&flat)?;
    let m = net.len() - 1;
    let n = cols.checked_sub(1).ok_or(OracleError::BadControl)?;
    let gu = basis_row_exact(alpha, beta, m, u)?;
    let gv = basis_row_exact(alpha, beta, n, v)?;
    let mut out = vec![Q::zero(); dim];
    for (row, wu) in net.iter().zip(&gu) {
        for (p, wv) in row.iter().zip(&gv) {
            let w = wu * wv;
            for (o, c) in out.iter_mut().zip(p) {
                *o += c * &w;
            }
        }
    }
    Ok(out)
}
