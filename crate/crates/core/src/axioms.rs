//! Randomized check of the seven defining properties of a power structure.

use crate::error::Result;
use crate::poly::Polynomial;
use crate::power::pow;
use crate::ring::Ring;
use crate::sampling::{Sampler, Shape};
use crate::series::Series;

pub const PROPERTY_NAMES: [&str; 7] = [
    "1: A^0 = 1",
    "2: A^1 = A",
    "3: (AB)^m = A^m B^m",
    "4: A^(m+n) = A^m A^n",
    "5: A^(mn) = (A^n)^m",
    "6: (1+t)^m = 1 + mt + ...",
    "7: A(t^k)^m = A^m(t^k)",
];

#[derive(Clone, Debug)]
pub struct AxiomConfig {
    pub seed: u64,
    pub trials: usize,
    pub order: usize,
    pub ring: Ring,
    pub shape: Shape,
}

#[derive(Clone, Debug, Default)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub properties: Vec<PropertyResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }
}

pub fn run_axiom_suite(cfg: &AxiomConfig) -> Result<AxiomReport> {
    let mut sampler = Sampler::new(cfg.seed);
    let mut props: Vec<PropertyResult> =
        PROPERTY_NAMES.iter().map(|&name| PropertyResult { name, ..Default::default() }).collect();
    let ring = &cfg.ring;
    let n = cfg.order;
    let mut one_plus_t = vec![Polynomial::zero(ring); n + 1];
    one_plus_t[0] = Polynomial::one(ring);
    if n >= 1 {
        one_plus_t[1] = Polynomial::one(ring);
    }
    let one_plus_t = Series::new(ring, one_plus_t)?;

    for trial in 0..cfg.trials {
        let a = sampler.unital_series(ring, n, cfg.shape);
        let b = sampler.unital_series(ring, n, cfg.shape);
        let m = sampler.polynomial(ring, cfg.shape);
        let m2 = sampler.polynomial(ring, cfg.shape);
        let k = 2 + sampler.below(2);
        let ctx = || format!("trial {trial}: A = {a}, B = {b}, m = {m}, n = {m2}, k = {k}");

        let a_m = pow(&a, &m)?;
        let checks: [Box<dyn Fn() -> Result<bool>>; 7] = [
            Box::new(|| Ok(pow(&a, &Polynomial::zero(ring))? == Series::one(ring, n))),
            Box::new(|| Ok(pow(&a, &Polynomial::one(ring))? == a)),
            Box::new(|| Ok(pow(&a.mul(&b)?, &m)? == a_m.mul(&pow(&b, &m)?)?)),
            Box::new(|| Ok(pow(&a, &(&m + &m2))? == a_m.mul(&pow(&a, &m2)?)?)),
            Box::new(|| Ok(pow(&a, &(&m * &m2))? == pow(&pow(&a, &m2)?, &m)?)),
            Box::new(|| {
                let s = pow(&one_plus_t, &m)?;
                Ok(s.coeff(0).is_one() && (n == 0 || *s.coeff(1) == m))
            }),
            Box::new(|| Ok(pow(&a.rescale_variable(k)?, &m)? == a_m.rescale_variable(k)?)),
        ];
        for (prop, check) in props.iter_mut().zip(checks.iter()) {
            prop.checked += 1;
            if !check()? {
                prop.failures += 1;
                prop.first_failure.get_or_insert_with(ctx);
            }
        }
    }
    Ok(AxiomReport { properties: props })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    #[test]
    fn small_sweep_passes() {
        let cfg = AxiomConfig {
            seed: 3,
            trials: 5,
            order: 5,
            ring: RingDescriptor::new(&["L"], true).unwrap(),
            shape: Shape::new(1, -2, 2),
        };
        let report = run_axiom_suite(&cfg).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.properties.iter().all(|p| p.checked == 5));
    }
}
