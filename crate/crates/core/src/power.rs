//! The power structure `(A(t), m) -> A(t)^m` on unital series.
//!
//! A power structure is fixed by its kernel `a -> (1-t)^{-a}`. Every unital
//! series factors uniquely as `prod_i (1-t^i)^{-b_i}`, and then
//! `A(t)^m = prod_i (1-t^i)^{-b_i m}`.
//!
//! The built-in [`MonomialKernel`] sends `sum_k p_k x^k` to
//! `prod_k (1 - x^k t)^{-p_k}`. It serves the integers, `Z[L, L^-1]` and
//! `Z[u, v]` alike.

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::poly::Polynomial;
use crate::ring::{ensure_same, Ring};
use crate::series::Series;
use crate::subst::MonomialMap;

/// A rule computing `(1-t)^{-a}` to a given order.
///
/// `factor` and `assemble` default to the generic peeling and product
/// routes; a kernel with a faster closed form may override them, and must
/// agree with the defaults exactly.
pub trait Kernel: Send + Sync {
    fn name(&self) -> &str;

    fn base_series(&self, a: &Polynomial, order: usize) -> Series;

    fn factor(&self, series: &Series) -> Result<EulerProduct> {
        factor_by_peeling(self, series)
    }

    fn assemble(&self, product: &EulerProduct) -> Series {
        assemble_by_product(self, product)
    }
}

/// `prod_i (1 - t^i)^{-b_i}` truncated at order `N = exponents.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerProduct {
    ring: Ring,
    exponents: Vec<Polynomial>,
}

impl EulerProduct {
    /// `exponents[i]` is `b_{i+1}`.
    pub fn new(ring: &Ring, exponents: Vec<Polynomial>) -> Result<Self> {
        for b in &exponents {
            ensure_same(ring, b.ring())?;
        }
        Ok(EulerProduct { ring: ring.clone(), exponents })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[Polynomial] {
        &self.exponents
    }

    /// `b_i` for `1 <= i <= N`.
    pub fn exponent(&self, i: usize) -> &Polynomial {
        &self.exponents[i - 1]
    }

    pub fn into_exponents(self) -> Vec<Polynomial> {
        self.exponents
    }

    /// Multiplies every exponent by `m`.
    pub fn scaled(&self, m: &Polynomial) -> Result<EulerProduct> {
        ensure_same(&self.ring, m.ring())?;
        let exponents = self.exponents.iter().map(|b| b.mul_unchecked(m)).collect();
        Ok(EulerProduct { ring: self.ring.clone(), exponents })
    }
}

/// Out-of-place `a * g(t^stride)`, both truncated at `a`'s order.
fn mul_stretched(a: &Series, g: &Series, stride: usize) -> Series {
    let n = a.order();
    let ring = a.ring();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = Polynomial::zero(ring);
        for (j, gj) in g.coeffs().iter().enumerate() {
            let Some(shift) = j.checked_mul(stride).filter(|&s| s <= k) else { break };
            let ak = a.coeff(k - shift);
            if gj.is_zero() || ak.is_zero() {
                continue;
            }
            acc = &acc + &ak.mul_unchecked(gj);
        }
        out.push(acc);
    }
    Series::from_parts(ring, out)
}

/// Factors by peeling: for `i = 1..N` take `b_i` as the `t^i` coefficient of
/// the residual, then divide the residual by `(1-t^i)^{-b_i}`.
///
/// Relies on `(1-t)^{-b} = 1 + b t + O(t^2)` for the kernel.
pub fn factor_by_peeling<K: Kernel + ?Sized>(kernel: &K, series: &Series) -> Result<EulerProduct> {
    series.ensure_unital()?;
    let n = series.order();
    let ring = series.ring();
    let mut residual = series.clone();
    let mut exponents = Vec::with_capacity(n);
    for i in 1..=n {
        let b = residual.coeff(i).clone();
        if !b.is_zero() {
            let inv = kernel.base_series(&b, n / i).inverse()?;
            residual = mul_stretched(&residual, &inv, i);
        }
        exponents.push(b);
    }
    debug_assert!(residual == Series::one(ring, n));
    EulerProduct::new(ring, exponents)
}

/// Multiplies out `prod_{i=1..N} base_series(b_i)(t^i)`.
pub fn assemble_by_product<K: Kernel + ?Sized>(kernel: &K, product: &EulerProduct) -> Series {
    let n = product.order();
    let mut acc = Series::one(product.ring(), n);
    for (idx, b) in product.exponents().iter().enumerate() {
        let i = idx + 1;
        if b.is_zero() {
            continue;
        }
        let g = kernel.base_series(b, n / i);
        acc = mul_stretched(&acc, &g, i);
    }
    acc
}

/// `(1-t)^{-sum p_k x^k} = prod_k (1 - x^k t)^{-p_k}`.
///
/// Computed through power sums rather than factor by factor: writing
/// `c_n = sum_{d | n} d * psi_{n/d}(b_d)` with `psi_j` the substitution
/// `x -> x^j`, the product `prod_d (1-t^d)^{-b_d}` has coefficients
/// `n A_n = sum_{j=1..n} c_j A_{n-j}`. The divisions are exact.
#[derive(Clone, Copy, Debug, Default)]
pub struct MonomialKernel;

impl MonomialKernel {
    fn power_sums(product: &EulerProduct) -> Vec<Polynomial> {
        let n = product.order();
        let ring = product.ring();
        let mut c = vec![Polynomial::zero(ring); n + 1];
        for d in 1..=n {
            let b = product.exponent(d);
            if b.is_zero() {
                continue;
            }
            let scale = Integer::from(d as u64);
            for j in 1..=n / d {
                let term = b.adams(j as u32).scale(&scale);
                c[d * j] = &c[d * j] + &term;
            }
        }
        c
    }
}

impl Kernel for MonomialKernel {
    fn name(&self) -> &str {
        "monomial"
    }

    fn base_series(&self, a: &Polynomial, order: usize) -> Series {
        let ring = a.ring();
        let mut exponents = vec![Polynomial::zero(ring); order];
        if order > 0 {
            exponents[0] = a.clone();
        }
        self.assemble(&EulerProduct { ring: ring.clone(), exponents })
    }

    fn assemble(&self, product: &EulerProduct) -> Series {
        let n = product.order();
        let ring = product.ring();
        let c = Self::power_sums(product);
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(Polynomial::one(ring));
        for k in 1..=n {
            let pairs: Vec<_> = (1..=k).map(|j| (&c[j], &coeffs[k - j])).collect();
            let acc = Polynomial::sum_of_products(ring, None, &pairs);
            let q = acc.div_exact(&Integer::from(k as u64)).expect("power-sum recurrence divides exactly");
            coeffs.push(q);
        }
        Series::from_parts(ring, coeffs)
    }

    fn factor(&self, series: &Series) -> Result<EulerProduct> {
        series.ensure_unital()?;
        let n = series.order();
        let ring = series.ring();
        let a = series.coeffs();
        // Power sums of the logarithmic derivative: c_k = k A_k - sum_{j<k} c_j A_{k-j}.
        let mut c = vec![Polynomial::zero(ring); n + 1];
        for k in 1..=n {
            let base = a[k].scale(&Integer::from(-(k as i64)));
            let pairs: Vec<_> = (1..k).map(|j| (&c[j], &a[k - j])).collect();
            c[k] = -&Polynomial::sum_of_products(ring, Some(&base), &pairs);
        }
        // Invert c_k = sum_{d | k} d * psi_{k/d}(b_d) for b_k.
        let mut b: Vec<Polynomial> = Vec::with_capacity(n);
        for (k, ck) in c.iter().enumerate().skip(1) {
            let mut acc = ck.clone();
            for d in 1..k {
                if k % d != 0 || b[d - 1].is_zero() {
                    continue;
                }
                let term = b[d - 1].adams((k / d) as u32).scale(&Integer::from(d as u64));
                acc = &acc - &term;
            }
            b.push(acc.div_exact(&Integer::from(k as u64)).expect("Euler exponents are integral"));
        }
        Ok(EulerProduct { ring: ring.clone(), exponents: b })
    }
}

/// A power structure determined by its kernel.
#[derive(Clone, Debug, Default)]
pub struct PowerStructure<K: Kernel = MonomialKernel> {
    kernel: K,
}

impl PowerStructure<MonomialKernel> {
    pub fn monomial() -> Self {
        PowerStructure { kernel: MonomialKernel }
    }
}

impl<K: Kernel> PowerStructure<K> {
    /// Accepts a user kernel after checking it on `samples` at `order`:
    /// `(1-t)^{-0} = 1`, `(1-t)^{-1} = 1 + t + t^2 + ...`,
    /// `(1-t)^{-a} = 1 + a t + ...`, and additivity on all sample pairs.
    pub fn with_kernel(kernel: K, samples: &[Polynomial], order: usize) -> Result<Self> {
        let reject = |what: String| Err(Error::KernelRejected(format!("{}: {what}", kernel.name())));
        for a in samples {
            let ring = a.ring();
            if kernel.base_series(&Polynomial::zero(ring), order) != Series::one(ring, order) {
                return reject("(1-t)^0 is not 1".into());
            }
            if kernel.base_series(&Polynomial::one(ring), order) != Series::geometric(ring, order) {
                return reject("(1-t)^-1 is not the geometric series".into());
            }
            let s = kernel.base_series(a, order);
            if !s.is_unital() || (order >= 1 && s.coeff(1) != a) {
                return reject(format!("(1-t)^-({a}) does not start 1 + ({a})t"));
            }
            for b in samples {
                ensure_same(ring, b.ring())?;
                let lhs = kernel.base_series(&(a + b), order);
                let rhs = s.mul(&kernel.base_series(b, order))?;
                if lhs != rhs {
                    return reject(format!("not additive on a = {a}, b = {b}"));
                }
            }
        }
        Ok(PowerStructure { kernel })
    }

    pub fn kernel(&self) -> &K {
        &self.kernel
    }

    pub fn base_series(&self, a: &Polynomial, order: usize) -> Series {
        self.kernel.base_series(a, order)
    }

    pub fn factor(&self, series: &Series) -> Result<EulerProduct> {
        self.kernel.factor(series)
    }

    pub fn assemble(&self, product: &EulerProduct) -> Series {
        self.kernel.assemble(product)
    }

    /// `A(t)^m`.
    pub fn pow(&self, series: &Series, m: &Polynomial) -> Result<Series> {
        ensure_same(series.ring(), m.ring())?;
        let product = self.factor(series)?;
        Ok(self.assemble(&product.scaled(m)?))
    }

    /// `Exp(P_1 t + P_2 t^2 + ...) = prod_k (1-t^k)^{-P_k}`.
    pub fn exp(&self, ring: &Ring, terms: &[Polynomial]) -> Result<Series> {
        Ok(self.assemble(&EulerProduct::new(ring, terms.to_vec())?))
    }

    /// Inverse of [`PowerStructure::exp`].
    pub fn log(&self, series: &Series) -> Result<Vec<Polynomial>> {
        Ok(self.factor(series)?.into_exponents())
    }
}

pub fn base_series(a: &Polynomial, order: usize) -> Series {
    MonomialKernel.base_series(a, order)
}

pub fn factor(series: &Series) -> Result<EulerProduct> {
    MonomialKernel.factor(series)
}

pub fn assemble(product: &EulerProduct) -> Series {
    MonomialKernel.assemble(product)
}

pub fn pow(series: &Series, m: &Polynomial) -> Result<Series> {
    PowerStructure::monomial().pow(series, m)
}

pub fn exp_map(ring: &Ring, terms: &[Polynomial]) -> Result<Series> {
    PowerStructure::monomial().exp(ring, terms)
}

pub fn log_map(series: &Series) -> Result<Vec<Polynomial>> {
    PowerStructure::monomial().log(series)
}

/// Whether `phi(A^m) = phi(A)^{phi(m)}` holds exactly.
///
/// Only monomial substitutions (including evaluation at ones) are
/// accepted; [`MonomialMap`] refuses anything else at construction.
pub fn transport_check(phi: &MonomialMap, series: &Series, m: &Polynomial) -> Result<bool> {
    let lhs = phi.apply_series(&pow(series, m)?)?;
    let rhs = pow(&phi.apply_series(series)?, &phi.apply(m)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn z() -> Ring {
        RingDescriptor::integers()
    }

    fn zs(c: &[i64]) -> Series {
        Series::from_integers(&z(), c.iter().copied()).unwrap()
    }

    fn zp(c: i64) -> Polynomial {
        Polynomial::constant(&z(), c)
    }

    fn strings(s: &Series) -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn base_series_examples() {
        assert_eq!(base_series(&zp(1), 4), zs(&[1, 1, 1, 1, 1]));
        assert_eq!(base_series(&zp(0), 4), zs(&[1, 0, 0, 0, 0]));
        assert_eq!(base_series(&zp(-1), 3), zs(&[1, -1, 0, 0]));
        // (1+t+t^2+t^3)^2 truncated by hand: 1, 2, 3, 4.
        assert_eq!(base_series(&zp(2), 3), zs(&[1, 2, 3, 4]));
        let r = RingDescriptor::hodge();
        let uv = Polynomial::monomial(&r, vec![1, 1], 1).unwrap();
        assert_eq!(strings(&base_series(&uv, 2)), ["1", "u*v", "u^2*v^2"]);
    }

    #[test]
    fn base_series_is_binomial_over_z() {
        for m in -6i64..=6 {
            let s = base_series(&zp(m), 10);
            for n in 0..=10u64 {
                // (1-t)^{-m} = sum binom(m+n-1, n) t^n, generalized binomial for m < 0.
                let expected = if m >= 0 {
                    if m == 0 {
                        (n == 0) as i64
                    } else {
                        Integer::binomial(m as u64 + n - 1, n).to_i64().unwrap()
                    }
                } else {
                    let k = (-m) as u64;
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    sign * Integer::binomial(k, n).to_i64().unwrap()
                };
                assert_eq!(s.coeff(n as usize), &zp(expected), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn factor_examples() {
        let e = factor(&Series::geometric(&z(), 5)).unwrap();
        assert_eq!(e.exponents(), &[zp(1), zp(0), zp(0), zp(0), zp(0)]);
        // (1-t)^{-1} (1-t^2) = 1 + t.
        let e = factor(&zs(&[1, 1, 0, 0, 0])).unwrap();
        assert_eq!(e.exponents(), &[zp(1), zp(-1), zp(0), zp(0)]);
        let e = factor(&Series::one(&z(), 3)).unwrap();
        assert!(e.exponents().iter().all(Polynomial::is_zero));
        assert!(matches!(factor(&zs(&[2, 1])), Err(Error::NotUnital(_))));
    }

    #[test]
    fn assemble_examples() {
        let e = EulerProduct::new(&z(), vec![zp(1), zp(0), zp(0)]).unwrap();
        assert_eq!(assemble(&e), Series::geometric(&z(), 3));
        let e = EulerProduct::new(&z(), vec![zp(1), zp(-1), zp(0), zp(0)]).unwrap();
        assert_eq!(assemble(&e), zs(&[1, 1, 0, 0, 0]));
        let e = EulerProduct::new(&z(), vec![zp(0); 3]).unwrap();
        assert_eq!(assemble(&e), Series::one(&z(), 3));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(pow(&zs(&[1, 1, 0, 0]), &zp(3)).unwrap(), zs(&[1, 3, 3, 1]));
        assert_eq!(pow(&zs(&[1, 2, 0, 0]), &zp(3)).unwrap(), zs(&[1, 6, 12, 8]));
        assert_eq!(pow(&zs(&[1, 5, -2, 7]), &zp(0)).unwrap(), Series::one(&z(), 3));
        // (1-t)^{-u} (1-t^2)^{u} = (1 + u t + u^2 t^2)(1 - u t^2).
        let r = RingDescriptor::new(&["u"], false).unwrap();
        let u = Polynomial::variable(&r, "u").unwrap();
        let a = Series::new(&r, vec![Polynomial::one(&r), Polynomial::one(&r), Polynomial::zero(&r)]).unwrap();
        assert_eq!(strings(&pow(&a, &u).unwrap()), ["1", "u", "u^2-u"]);
    }

    #[test]
    fn pow_rejects_mismatched_exponent() {
        let m = Polynomial::one(&RingDescriptor::motivic());
        assert!(matches!(pow(&zs(&[1, 1]), &m), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn exp_log_examples() {
        let g = exp_map(&z(), &[zp(1), zp(0), zp(0), zp(0)]).unwrap();
        assert_eq!(g, Series::geometric(&z(), 4));
        assert_eq!(exp_map(&z(), &[zp(0), zp(0)]).unwrap(), Series::one(&z(), 2));
        assert_eq!(log_map(&Series::geometric(&z(), 3)).unwrap(), [zp(1), zp(0), zp(0)]);
        assert_eq!(log_map(&zs(&[1, 1, 0])).unwrap(), [zp(1), zp(-1)]);
        let r = RingDescriptor::hodge();
        let uv = Polynomial::monomial(&r, vec![1, 1], 1).unwrap();
        let e = exp_map(&r, &[uv, Polynomial::zero(&r), Polynomial::zero(&r)]).unwrap();
        assert_eq!(strings(&e), ["1", "u*v", "u^2*v^2", "u^3*v^3"]);
    }

    #[test]
    fn peeling_matches_power_sums_on_mixed_input() {
        let r = RingDescriptor::new(&["u", "v"], true).unwrap();
        let p = |t: &[(i32, i32, i64)]| {
            Polynomial::from_terms(&r, t.iter().map(|&(a, b, c)| (vec![a, b], Integer::from(c)))).unwrap()
        };
        let s = Series::new(
            &r,
            vec![p(&[(0, 0, 1)]), p(&[(1, 0, 2), (0, -1, -1)]), p(&[(1, 1, 3)]), p(&[]), p(&[(0, 2, -2), (0, 0, 1)])],
        )
        .unwrap();
        let fast = MonomialKernel.factor(&s).unwrap();
        let slow = factor_by_peeling(&MonomialKernel, &s).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(MonomialKernel.assemble(&fast), s);
        assert_eq!(assemble_by_product(&MonomialKernel, &fast), s);
    }

    #[derive(Debug)]
    struct Doubling;

    impl Kernel for Doubling {
        fn name(&self) -> &str {
            "doubling"
        }
        fn base_series(&self, a: &Polynomial, order: usize) -> Series {
            MonomialKernel.base_series(&(a + a), order)
        }
    }

    #[test]
    fn user_kernel_is_checked() {
        let samples = [zp(1), zp(2)];
        let err = PowerStructure::with_kernel(Doubling, &samples, 4).unwrap_err();
        assert!(matches!(err, Error::KernelRejected(_)));
        let ok = PowerStructure::with_kernel(MonomialKernel, &samples, 4).unwrap();
        assert_eq!(ok.pow(&zs(&[1, 1, 0, 0]), &zp(3)).unwrap(), zs(&[1, 3, 3, 1]));
    }

    #[test]
    fn transport_examples() {
        let r = RingDescriptor::hodge();
        let u = Polynomial::variable(&r, "u").unwrap();
        let v = Polynomial::variable(&r, "v").unwrap();
        let a = Series::new(&r, vec![Polynomial::one(&r), &u - &v, &(&u * &v) + &Polynomial::constant(&r, 2)]).unwrap();
        let m = &(&u * &u) - &Polynomial::constant(&r, 3);
        assert!(transport_check(&MonomialMap::eval_at_ones(&r), &a, &m).unwrap());
        assert!(transport_check(&MonomialMap::identity(&r), &a, &m).unwrap());
    }
}
