//! Tensor-product patches `P(u,v) = sum_i sum_j P(i,j) G(m,i)(u) G(n,j)(v)`.
//!
//! Both directions share one `(alpha, beta)` pair, but each uses the domain
//! of its own degree: `u` ranges over the degree-`m` interval and `v` over
//! the degree-`n` interval.

use crate::basis::{row_on, Domain, ShiftedKnots};
use crate::curve::{Curve, StepMatrix};
use crate::error::{Error, Result};
use crate::point::{common_dimension, weighted_sum, Point};
use crate::scalar::Scalar;

/// One row of [`SurfacePatch::sample_grid`]: `(u, v, P(u, v))` at fixed `u`.
pub type GridRow<T> = Vec<(T, T, Point<T>)>;

#[derive(Debug, Clone, PartialEq)]
pub struct SurfacePatch<T> {
    knots: ShiftedKnots<T>,
    u_domain: Domain<T>,
    v_domain: Domain<T>,
    /// `net[i][j]`, `i` along `u` (degree `m`), `j` along `v` (degree `n`).
    net: Vec<Vec<Point<T>>>,
}

impl<T: Scalar> SurfacePatch<T> {
    pub fn new(knots: ShiftedKnots<T>, net: Vec<Vec<Point<T>>>) -> Result<Self> {
        if net.len() < 2 {
            return Err(Error::TooFewControlPoints(net.len()));
        }
        let cols = net[0].len();
        if cols < 2 {
            return Err(Error::TooFewControlPoints(cols));
        }
        for (row, r) in net.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedNet {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        common_dimension(net.iter().flatten())?;
        let u_domain = knots.domain(net.len() - 1)?;
        let v_domain = knots.domain(cols - 1)?;
        Ok(Self {
            knots,
            u_domain,
            v_domain,
            net,
        })
    }

    /// `(m, n)`.
    pub fn degrees(&self) -> (usize, usize) {
        (self.net.len() - 1, self.net[0].len() - 1)
    }

    pub fn dim(&self) -> usize {
        self.net[0][0].dim()
    }

    pub fn knots(&self) -> &ShiftedKnots<T> {
        &self.knots
    }

    pub fn u_domain(&self) -> &Domain<T> {
        &self.u_domain
    }

    pub fn v_domain(&self) -> &Domain<T> {
        &self.v_domain
    }

    pub fn net(&self) -> &[Vec<Point<T>>] {
        &self.net
    }

    pub fn control(&self, i: usize, j: usize) -> &Point<T> {
        &self.net[i][j]
    }

    /// Direct double sum.
    pub fn eval(&self, u: &T, v: &T) -> Result<Point<T>> {
        let u = self.u_domain.locate(u)?;
        let v = self.v_domain.locate(v)?;
        Ok(self.eval_located(&u, &v))
    }

    pub fn eval_clamped(&self, u: &T, v: &T) -> Point<T> {
        self.eval_located(&self.u_domain.clamp(u), &self.v_domain.clamp(v))
    }

    /// Evaluates at normalized parameters `(s, r)` in `[0, 1]^2`.
    pub fn eval_normalized(&self, s: &T, r: &T) -> Result<Point<T>> {
        self.eval(&self.u_domain.denormalize(s), &self.v_domain.denormalize(r))
    }

    fn eval_located(&self, u: &T, v: &T) -> Point<T> {
        let gu = row_on(&self.u_domain, u);
        let gv = row_on(&self.v_domain, v);
        let mut acc = Point::origin(self.dim());
        for (row, wu) in self.net.iter().zip(&gu) {
            for (p, wv) in row.iter().zip(&gv) {
                acc.add_scaled(&(wu.clone() * wv.clone()), p);
            }
        }
        acc
    }

    /// Isoparametric curve `v = v_star`: degree `m` in `u` with control
    /// points `Q_i = sum_j P(i,j) G(n,j)(v_star)`.
    pub fn isoparam_u(&self, v_star: &T) -> Result<Curve<T>> {
        let v = self.v_domain.locate(v_star)?;
        let gv = row_on(&self.v_domain, &v);
        let control = self.net.iter().map(|row| weighted_sum(&gv, row)).collect();
        Curve::new(self.knots.clone(), control)
    }

    /// Isoparametric curve `u = u_star`: degree `n` in `v` with control
    /// points `R_j = sum_i P(i,j) G(m,i)(u_star)`.
    pub fn isoparam_v(&self, u_star: &T) -> Result<Curve<T>> {
        let u = self.u_domain.locate(u_star)?;
        let gu = row_on(&self.u_domain, &u);
        let (_, n) = self.degrees();
        let control = (0..=n)
            .map(|j| {
                let column: Vec<Point<T>> = self.net.iter().map(|row| row[j].clone()).collect();
                weighted_sum(&gu, &column)
            })
            .collect();
        Curve::new(self.knots.clone(), control)
    }

    /// Degree `(m+1, n+1)` net via the bilinear stencil
    ///
    /// ```text
    /// P*(i,j) = a_i b_j P(i-1,j-1) + a_i (1-b_j) P(i-1,j)
    ///         + (1-a_i) b_j P(i,j-1) + (1-a_i)(1-b_j) P(i,j)
    /// ```
    ///
    /// with `a_i = i/(m+1)`, `b_j = j/(n+1)`; indices outside the old net
    /// carry zero weight. Like curve elevation, the result agrees with the
    /// original at equal normalized parameters.
    pub fn elevate(&self) -> Result<SurfacePatch<T>> {
        let (m, n) = self.degrees();
        let dim = self.dim();
        let net = (0..=m + 1)
            .map(|i| {
                (0..=n + 1)
                    .map(|j| {
                        let w = ElevationWeights::<T>::new(m, n, i, j);
                        let (a, b) = (w.alpha_i.clone(), w.beta_j.clone());
                        let (ca, cb) = (T::one() - a.clone(), T::one() - b.clone());
                        let mut acc = Point::origin(dim);
                        let mut term = |ii: Option<usize>, jj: Option<usize>, weight: T| {
                            if let (Some(ii), Some(jj)) = (ii, jj) {
                                if ii <= m && jj <= n && !weight.is_zero() {
                                    acc.add_scaled(&weight, &self.net[ii][jj]);
                                }
                            }
                        };
                        term(i.checked_sub(1), j.checked_sub(1), a.clone() * b.clone());
                        term(i.checked_sub(1), Some(j), a * cb.clone());
                        term(Some(i), j.checked_sub(1), ca.clone() * b);
                        term(Some(i), Some(j), ca * cb);
                        acc
                    })
                    .collect()
            })
            .collect();
        SurfacePatch::new(self.knots.clone(), net)
    }

    /// Two-directional de Casteljau: `min(m, n)` bilinear steps, each
    /// combining a 2x2 block with `u`-weights from the degree-`m` domain and
    /// `v`-weights from the degree-`n` domain, then the remaining
    /// one-directional polygon is finished with the curve step matrices of
    /// the longer direction.
    pub fn eval_decasteljau(&self, u: &T, v: &T) -> Result<Point<T>> {
        let u = self.u_domain.locate(u)?;
        let v = self.v_domain.locate(v)?;
        let (m, n) = self.degrees();
        let (uh, ul) = self.u_domain.weights(&u);
        let (vh, vl) = self.v_domain.weights(&v);
        let w00 = uh.clone() * vh.clone();
        let w01 = uh * vl.clone();
        let w10 = ul.clone() * vh;
        let w11 = ul * vl;

        let mut grid = self.net.clone();
        let k = m.min(n);
        for _ in 0..k {
            let rows = grid.len() - 1;
            let cols = grid[0].len() - 1;
            grid = (0..rows)
                .map(|i| {
                    (0..cols)
                        .map(|j| {
                            let mut p = grid[i][j].scaled(&w00);
                            p.add_scaled(&w01, &grid[i][j + 1]);
                            p.add_scaled(&w10, &grid[i + 1][j]);
                            p.add_scaled(&w11, &grid[i + 1][j + 1]);
                            p
                        })
                        .collect()
                })
                .collect();
        }

        let mut level: Vec<Point<T>>;
        if m > k {
            level = grid.into_iter().map(|mut row| row.swap_remove(0)).collect();
            for r in k + 1..=m {
                level = StepMatrix::on_domain(&self.u_domain, r, &u)?.apply(&level);
            }
        } else {
            level = grid.swap_remove(0);
            for r in k + 1..=n {
                level = StepMatrix::on_domain(&self.v_domain, r, &v)?.apply(&level);
            }
        }
        Ok(level.swap_remove(0))
    }

    /// `rows x cols` grid of `(u, v, P(u,v))`, uniform in both domains.
    pub fn sample_grid(&self, rows: usize, cols: usize) -> Result<Vec<GridRow<T>>> {
        let us = self.u_domain.samples(rows)?;
        let vs = self.v_domain.samples(cols)?;
        Ok(us
            .iter()
            .map(|u| {
                vs.iter()
                    .map(|v| (u.clone(), v.clone(), self.eval_located(u, v)))
                    .collect()
            })
            .collect())
    }

    pub fn map_control(&self, f: impl Fn(&Point<T>) -> Point<T>) -> Result<SurfacePatch<T>> {
        let net = self.net.iter().map(|row| row.iter().map(&f).collect()).collect();
        SurfacePatch::new(self.knots.clone(), net)
    }
}

/// Stencil weights `a_i = i/(m+1)` and `b_j = j/(n+1)` for patch elevation.
#[derive(Debug, Clone, PartialEq)]
pub struct ElevationWeights<T> {
    pub alpha_i: T,
    pub beta_j: T,
}

impl<T: Scalar> ElevationWeights<T> {
    pub fn new(m: usize, n: usize, i: usize, j: usize) -> Self {
        debug_assert!(i <= m + 1 && j <= n + 1);
        Self {
            alpha_i: T::ratio(i, m + 1),
            beta_j: T::ratio(j, n + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bilinear(knots: ShiftedKnots<f64>) -> SurfacePatch<f64> {
        SurfacePatch::new(
            knots,
            vec![
                vec![Point::from([0.0, 0.0, 0.0]), Point::from([0.0, 1.0, 1.0])],
                vec![Point::from([1.0, 0.0, 2.0]), Point::from([1.0, 1.0, -1.0])],
            ],
        )
        .unwrap()
    }

    fn grid_patch(m: usize, n: usize, knots: ShiftedKnots<f64>) -> SurfacePatch<f64> {
        let net = (0..=m)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        let (x, y) = (i as f64, j as f64);
                        Point::from([x, y, (x * 1.3 - y * 0.7).sin() + x * y / 4.0])
                    })
                    .collect()
            })
            .collect();
        SurfacePatch::new(knots, net).unwrap()
    }

    #[test]
    fn construction_errors() {
        let k = ShiftedKnots::<f64>::classical();
        let p = |x: f64| Point::from([x, 0.0, 0.0]);
        assert_eq!(
            SurfacePatch::new(k.clone(), vec![vec![p(0.0), p(1.0)]]),
            Err(Error::TooFewControlPoints(1))
        );
        assert!(matches!(
            SurfacePatch::new(k.clone(), vec![vec![p(0.0), p(1.0)], vec![p(2.0)]]),
            Err(Error::RaggedNet { row: 1, .. })
        ));
        let mixed = vec![vec![p(0.0), p(1.0)], vec![p(2.0), Point::from([1.0, 1.0])]];
        assert!(matches!(
            SurfacePatch::new(k, mixed),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn corners_and_bilinear_center() {
        let p = bilinear(ShiftedKnots::classical());
        let c = p.eval(&0.5, &0.5).unwrap();
        assert_eq!(c, Point::from([0.5, 0.5, 0.5]));
        assert_eq!(p.eval_decasteljau(&0.5, &0.5).unwrap(), c);

        let p = grid_patch(3, 2, ShiftedKnots::new(2.0, 3.0).unwrap());
        let (ud, vd) = (p.u_domain().clone(), p.v_domain().clone());
        assert_eq!(p.eval(ud.lo(), vd.lo()).unwrap(), *p.control(0, 0));
        assert_eq!(p.eval(ud.lo(), vd.hi()).unwrap(), *p.control(0, 2));
        assert_eq!(p.eval(ud.hi(), vd.lo()).unwrap(), *p.control(3, 0));
        assert_eq!(p.eval(ud.hi(), vd.hi()).unwrap(), *p.control(3, 2));
    }

    #[test]
    fn per_direction_domains() {
        let p = grid_patch(3, 2, ShiftedKnots::new(2.0, 3.0).unwrap());
        assert_eq!(*p.u_domain().lo(), 2.0 / 6.0);
        assert_eq!(*p.v_domain().lo(), 2.0 / 5.0);
        assert!(p.eval(&0.34, &0.39).is_err());
        assert!(p.eval(&0.2, &0.5).is_err());
    }

    #[test]
    fn isoparametric_boundaries() {
        let p = grid_patch(2, 3, ShiftedKnots::new(1.0, 2.0).unwrap());
        let c = p.isoparam_u(p.v_domain().lo()).unwrap();
        assert_eq!(c.degree(), 2);
        for i in 0..=2 {
            assert_eq!(c.control()[i], *p.control(i, 0));
        }
        let c = p.isoparam_v(p.u_domain().hi()).unwrap();
        assert_eq!(c.degree(), 3);
        for j in 0..=3 {
            assert_eq!(c.control()[j], *p.control(2, j));
        }
        assert!(p.isoparam_u(&10.0).is_err());
        assert!(p.isoparam_v(&-1.0).is_err());
    }

    #[test]
    fn bilinear_isoparam_is_edge_midpoint_line() {
        let p = bilinear(ShiftedKnots::classical());
        let c = p.isoparam_u(&0.5).unwrap();
        assert_eq!(c.control()[0], Point::from([0.0, 0.5, 0.5]));
        assert_eq!(c.control()[1], Point::from([1.0, 0.5, 0.5]));
        let c = p.isoparam_v(&0.5).unwrap();
        assert_eq!(c.control()[0], Point::from([0.5, 0.0, 1.0]));
        assert_eq!(c.control()[1], Point::from([0.5, 1.0, 0.0]));
    }

    #[test]
    fn elevation_preserves_corners_and_shape() {
        let p = grid_patch(2, 3, ShiftedKnots::new(1.5, 4.0).unwrap());
        let e = p.elevate().unwrap();
        assert_eq!(e.degrees(), (3, 4));
        assert_eq!(e.control(0, 0), p.control(0, 0));
        assert_eq!(e.control(3, 4), p.control(2, 3));
        assert_eq!(e.control(0, 4), p.control(0, 3));
        assert_eq!(e.control(3, 0), p.control(2, 0));
        for a in 0..=6 {
            for b in 0..=6 {
                let (s, r) = (a as f64 / 6.0, b as f64 / 6.0);
                let x = p.eval_normalized(&s, &r).unwrap();
                let y = e.eval_normalized(&s, &r).unwrap();
                assert!(x.max_abs_diff(&y) < 1e-12);
            }
        }
    }

    #[test]
    fn elevation_is_separable() {
        let p = bilinear(ShiftedKnots::classical());
        let e = p.elevate().unwrap();
        // elevate each u-row, then each resulting column
        let rows: Vec<Curve<f64>> = p
            .net()
            .iter()
            .map(|r| Curve::new(ShiftedKnots::classical(), r.clone()).unwrap().elevate().unwrap())
            .collect();
        for j in 0..=2 {
            let column: Vec<Point<f64>> = rows.iter().map(|c| c.control()[j].clone()).collect();
            let col = Curve::new(ShiftedKnots::classical(), column).unwrap().elevate().unwrap();
            for i in 0..=2 {
                assert!(col.control()[i].max_abs_diff(e.control(i, j)) < 1e-15);
            }
        }
    }

    #[test]
    fn decasteljau_rectangular() {
        let knots = ShiftedKnots::new(2.0, 3.0).unwrap();
        for (m, n) in [(2, 1), (1, 2), (3, 3), (1, 4), (5, 2)] {
            let p = grid_patch(m, n, knots.clone());
            let (ud, vd) = (p.u_domain().clone(), p.v_domain().clone());
            for s in [0.0, 0.3, 0.77, 1.0] {
                for r in [0.0, 0.5, 0.9, 1.0] {
                    let (u, v) = (ud.denormalize(&s), vd.denormalize(&r));
                    let a = p.eval(&u, &v).unwrap();
                    let b = p.eval_decasteljau(&u, &v).unwrap();
                    assert!(a.max_abs_diff(&b) < 1e-10, "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn sample_grid_corners() {
        let p = grid_patch(2, 2, ShiftedKnots::new(1.0, 1.0).unwrap());
        let g = p.sample_grid(5, 4).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0].len(), 4);
        assert_eq!(g[0][0].2, *p.control(0, 0));
        assert_eq!(g[4][3].2, *p.control(2, 2));
    }

    #[test]
    fn elevation_weights() {
        let w = ElevationWeights::<f64>::new(2, 3, 1, 4);
        assert_eq!(w.alpha_i, 1.0 / 3.0);
        assert_eq!(w.beta_j, 1.0);
    }
}
