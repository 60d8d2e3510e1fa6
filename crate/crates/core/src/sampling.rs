//! Seeded random inputs for property sweeps.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::int::Integer;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::series::Series;

/// Environment variable consulted when no seed is given on the command line.
pub const SEED_ENV: &str = "MOTIVIC_POWER_SEED";
pub const DEFAULT_SEED: u64 = 20040901;

pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

/// Shape of random polynomials: exponents of absolute total degree at most
/// `max_degree` (negative entries only in Laurent rings), coefficients in
/// `coef_min..=coef_max`.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_degree: u32,
    pub coef_min: i64,
    pub coef_max: i64,
}

impl Shape {
    pub const fn new(max_degree: u32, coef_min: i64, coef_max: i64) -> Self {
        Shape { max_degree, coef_min, coef_max }
    }

    pub const fn effective(max_degree: u32, coef_max: i64) -> Self {
        Shape { max_degree, coef_min: 0, coef_max }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    /// Every monomial in the exponent box gets an independent coefficient.
    pub fn polynomial(&mut self, ring: &Ring, shape: Shape) -> Polynomial {
        let r = ring.arity();
        let d = shape.max_degree as i32;
        let lo = if ring.is_laurent() { -d } else { 0 };
        let mut terms = Vec::new();
        let mut exps = vec![lo; r];
        loop {
            if exps.iter().map(|e| e.abs()).sum::<i32>() <= d {
                let c = self.range(shape.coef_min, shape.coef_max);
                if c != 0 {
                    terms.push((exps.clone(), Integer::from(c)));
                }
            }
            let mut pos = 0;
            loop {
                if pos == r {
                    return Polynomial::from_terms(ring, terms).expect("exponents fit the ring");
                }
                exps[pos] += 1;
                if exps[pos] <= d {
                    break;
                }
                exps[pos] = lo;
                pos += 1;
            }
        }
    }

    /// `1 + a_1 t + ... + a_N t^N` with random `a_i`.
    pub fn unital_series(&mut self, ring: &Ring, order: usize, shape: Shape) -> Series {
        let mut coeffs = vec![Polynomial::one(ring)];
        coeffs.extend((0..order).map(|_| self.polynomial(ring, shape)));
        Series::new(ring, coeffs).expect("same ring")
    }

    /// Unital series with only a few nonzero coefficients, which keeps
    /// expansions of high truncation order cheap.
    pub fn sparse_unital_series(&mut self, ring: &Ring, order: usize, nonzero: usize, shape: Shape) -> Series {
        let mut coeffs = vec![Polynomial::zero(ring); order + 1];
        coeffs[0] = Polynomial::one(ring);
        for _ in 0..nonzero.min(order) {
            let i = 1 + self.below(order);
            coeffs[i] = self.polynomial(ring, shape);
        }
        Series::new(ring, coeffs).expect("same ring")
    }
}
