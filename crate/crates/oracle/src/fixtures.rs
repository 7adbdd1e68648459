//! Deterministic fixture tables with exact expected values.
//!
//! Inputs are stored as rational strings (`"p/q"`), results as reduced
//! numerator/denominator string pairs.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{
    basis_value_exact, domain_exact, eval_curve_exact, eval_patch_exact, format, frac, int, parse,
    Result, Q,
};

pub const DEFAULT_SEED: u64 = 0x05EE_DB0B;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exact {
    pub num: String,
    pub den: String,
}

impl Exact {
    pub fn from_q(q: &Q) -> Self {
        Self {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }

    pub fn to_q(&self) -> Result<Q> {
        parse(&format!("{}/{}", self.num, self.den))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisFixture {
    pub alpha: String,
    pub beta: String,
    pub n: usize,
    pub k: usize,
    pub t: String,
    pub value: Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveFixture {
    pub alpha: String,
    pub beta: String,
    pub control: Vec<Vec<String>>,
    pub t: String,
    pub point: Vec<Exact>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatchFixture {
    pub alpha: String,
    pub beta: String,
    pub net: Vec<Vec<Vec<String>>>,
    pub u: String,
    pub v: String,
    pub point: Vec<Exact>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureSet {
    pub seed: u64,
    pub basis: Vec<BasisFixture>,
    pub curve: Vec<CurveFixture>,
    pub patch: Vec<PatchFixture>,
}

impl FixtureSet {
    pub fn len(&self) -> usize {
        self.basis.len() + self.curve.len() + self.patch.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fixtures serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

fn random_shift(rng: &mut ChaCha8Rng) -> (Q, Q) {
    if rng.gen_bool(0.1) {
        return (Q::zero(), Q::zero());
    }
    let q = rng.gen_range(1..=4);
    let beta = frac(rng.gen_range(0..=20 * q), q);
    let d = rng.gen_range(1..=5);
    let alpha = &beta * frac(rng.gen_range(0..=d), d);
    (alpha, beta)
}

/// A parameter inside the degree-`n` domain; endpoints included now and then.
fn random_param(rng: &mut ChaCha8Rng, alpha: &Q, beta: &Q, n: usize) -> Q {
    let (lo, hi) = domain_exact(alpha, beta, n).expect("valid shift");
    let d = rng.gen_range(2..=11);
    let s = frac(rng.gen_range(0..=d), d);
    &lo + (&hi - &lo) * s
}

fn random_coord(rng: &mut ChaCha8Rng) -> Q {
    let q = rng.gen_range(1..=8);
    frac(rng.gen_range(-10 * q..=10 * q), q)
}

fn random_point(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Q> {
    (0..dim).map(|_| random_coord(rng)).collect()
}

fn strings(p: &[Q]) -> Vec<String> {
    p.iter().map(format).collect()
}

fn exacts(p: &[Q]) -> Vec<Exact> {
    p.iter().map(Exact::from_q).collect()
}

fn basis_fixture(alpha: Q, beta: Q, n: usize, k: usize, t: Q) -> BasisFixture {
    let value = basis_value_exact(&alpha, &beta, n, k, &t).expect("fixture inputs are valid");
    BasisFixture {
        alpha: format(&alpha),
        beta: format(&beta),
        n,
        k,
        t: format(&t),
        value: Exact::from_q(&value),
    }
}

/// 110 basis, 60 curve and 50 patch fixtures.
pub fn generate(seed: u64) -> FixtureSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut basis = vec![
        basis_fixture(int(4), int(6), 3, 1, frac(3, 5)),
        basis_fixture(int(4), int(6), 3, 0, frac(4, 9)),
        basis_fixture(int(4), int(6), 3, 3, frac(7, 9)),
        basis_fixture(int(0), int(0), 2, 1, frac(1, 2)),
        basis_fixture(int(2), int(2), 2, 2, Q::one()),
    ];
    while basis.len() < 110 {
        let (alpha, beta) = random_shift(&mut rng);
        let n = rng.gen_range(1..=8);
        let k = rng.gen_range(0..=n);
        let t = random_param(&mut rng, &alpha, &beta, n);
        basis.push(basis_fixture(alpha, beta, n, k, t));
    }

    let curve = (0..60)
        .map(|_| {
            let (alpha, beta) = random_shift(&mut rng);
            let n = rng.gen_range(1..=8);
            let dim = rng.gen_range(2..=3);
            let control: Vec<Vec<Q>> = (0..=n).map(|_| random_point(&mut rng, dim)).collect();
            let t = random_param(&mut rng, &alpha, &beta, n);
            let point = eval_curve_exact(&alpha, &beta, &control, &t).expect("valid curve");
            CurveFixture {
                alpha: format(&alpha),
                beta: format(&beta),
                control: control.iter().map(|p| strings(p)).collect(),
                t: format(&t),
                point: exacts(&point),
            }
        })
        .collect();

    let patch = (0..50)
        .map(|_| {
            let (alpha, beta) = random_shift(&mut rng);
            let m = rng.gen_range(1..=5);
            let n = rng.gen_range(1..=5);
            let net: Vec<Vec<Vec<Q>>> = (0..=m)
                .map(|_| (0..=n).map(|_| random_point(&mut rng, 3)).collect())
                .collect();
            let u = random_param(&mut rng, &alpha, &beta, m);
            let v = random_param(&mut rng, &alpha, &beta, n);
            let point = eval_patch_exact(&alpha, &beta, &net, &u, &v).expect("valid patch");
            PatchFixture {
                alpha: format(&alpha),
                beta: format(&beta),
                net: net
                    .iter()
                    .map(|row| row.iter().map(|p| strings(p)).collect())
                    .collect(),
                u: format(&u),
                v: format(&v),
                point: exacts(&point),
            }
        })
        .collect();

    FixtureSet {
        seed,
        basis,
        curve,
        patch,
    }
}
