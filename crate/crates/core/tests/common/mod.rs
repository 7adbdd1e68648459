#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shifted_bezier::{Curve64, Knots64, Patch64, Point64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `0 <= alpha <= beta <= max_beta`, with some draws forced classical or
/// onto `alpha == beta`.
pub fn knots(rng: &mut ChaCha8Rng, max_beta: f64) -> Knots64 {
    match rng.gen_range(0..8) {
        0 => Knots64::classical(),
        1 => {
            let b = rng.gen_range(0.0..=max_beta);
            Knots64::new(b, b).unwrap()
        }
        _ => {
            let b: f64 = rng.gen_range(0.0..=max_beta);
            let a = rng.gen_range(0.0..=b);
            Knots64::new(a, b).unwrap()
        }
    }
}

pub fn point(rng: &mut ChaCha8Rng, dim: usize) -> Point64 {
    Point64::new((0..dim).map(|_| rng.gen_range(-10.0..10.0)).collect())
}

pub fn curve(rng: &mut ChaCha8Rng, knots: Knots64, n: usize, dim: usize) -> Curve64 {
    Curve64::new(knots, (0..=n).map(|_| point(rng, dim)).collect()).unwrap()
}

pub fn patch(rng: &mut ChaCha8Rng, knots: Knots64, m: usize, n: usize, dim: usize) -> Patch64 {
    let net = (0..=m)
        .map(|_| (0..=n).map(|_| point(rng, dim)).collect())
        .collect();
    Patch64::new(knots, net).unwrap()
}

/// Uniform draw from the closed interval `[lo, hi]`, endpoints included
/// occasionally.
pub fn param(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    match rng.gen_range(0..10) {
        0 => lo,
        1 => hi,
        _ => rng.gen_range(lo..=hi),
    }
}

/// Textbook Bernstein polynomial on `[0, 1]`, written independently of the
/// library.
pub fn bernstein(n: usize, k: usize, s: f64) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        c = c * (n - i) as f64 / (i + 1) as f64;
    }
    c * s.powi(k as i32) * (1.0 - s).powi((n - k) as i32)
}

/// Classical de Casteljau on `[0, 1]`.
pub fn classical_decasteljau(control: &[Vec<f64>], s: f64) -> Vec<f64> {
    let mut level: Vec<Vec<f64>> = control.to_vec();
    while level.len() > 1 {
        level = level
            .windows(2)
            .map(|w| w[0].iter().zip(&w[1]).map(|(a, b)| (1.0 - s) * a + s * b).collect())
            .collect();
    }
    level.pop().unwrap()
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
