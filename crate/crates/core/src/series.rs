//! Power series in `t` truncated at a fixed order, with polynomial coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::poly::Polynomial;
use crate::ring::{ensure_same, Ring};

/// `c_0 + c_1 t + ... + c_N t^N (mod t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    ring: Ring,
    coeffs: Vec<Polynomial>,
}

impl Series {
    /// `coeffs` must be nonempty; its length fixes the order.
    pub fn new(ring: &Ring, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidRing("a series needs at least the constant coefficient".into()));
        }
        for c in &coeffs {
            ensure_same(ring, c.ring())?;
        }
        Ok(Series { ring: ring.clone(), coeffs })
    }

    /// The series `1` at the given order.
    pub fn one(ring: &Ring, order: usize) -> Self {
        let mut coeffs = vec![Polynomial::zero(ring); order + 1];
        coeffs[0] = Polynomial::one(ring);
        Series { ring: ring.clone(), coeffs }
    }

    pub fn zero(ring: &Ring, order: usize) -> Self {
        Series { ring: ring.clone(), coeffs: vec![Polynomial::zero(ring); order + 1] }
    }

    /// `1 + t + t^2 + ... + t^N`.
    pub fn geometric(ring: &Ring, order: usize) -> Self {
        Series { ring: ring.clone(), coeffs: vec![Polynomial::one(ring); order + 1] }
    }

    /// Builds from integer coefficients.
    pub fn from_integers<I: IntoIterator<Item = i64>>(ring: &Ring, coeffs: I) -> Result<Self> {
        Self::new(ring, coeffs.into_iter().map(|c| Polynomial::constant(ring, c)).collect())
    }

    pub(crate) fn from_parts(ring: &Ring, coeffs: Vec<Polynomial>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Series { ring: ring.clone(), coeffs }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<Polynomial> {
        self.coeffs
    }

    pub fn is_unital(&self) -> bool {
        self.coeffs[0].is_one()
    }

    pub(crate) fn ensure_unital(&self) -> Result<()> {
        if self.is_unital() {
            Ok(())
        } else {
            Err(Error::NotUnital(self.coeffs[0].to_string()))
        }
    }

    fn ensure_compatible(&self, other: &Series) -> Result<()> {
        ensure_same(&self.ring, &other.ring)?;
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    /// Drops every coefficient above `order`. Raising the order is an error.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        if order > self.order() {
            return Err(Error::OrderExtension { known: self.order(), requested: order });
        }
        Ok(Series { ring: self.ring.clone(), coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.ensure_compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Series::from_parts(&self.ring, coeffs))
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.ensure_compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Series::from_parts(&self.ring, coeffs))
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.ensure_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Series) -> Series {
        let n = self.order();
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = Polynomial::zero(&self.ring);
            for i in 0..=k {
                let (a, b) = (&self.coeffs[i], &other.coeffs[k - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &a.mul_unchecked(b);
            }
            out.push(acc);
        }
        Series::from_parts(&self.ring, out)
    }

    /// Multiplicative inverse of a unital series.
    pub fn inverse(&self) -> Result<Series> {
        self.ensure_unital()?;
        let n = self.order();
        let mut inv: Vec<Polynomial> = Vec::with_capacity(n + 1);
        inv.push(Polynomial::one(&self.ring));
        for k in 1..=n {
            let mut acc = Polynomial::zero(&self.ring);
            for i in 1..=k {
                let a = &self.coeffs[i];
                if a.is_zero() || inv[k - i].is_zero() {
                    continue;
                }
                acc = &acc + &a.mul_unchecked(&inv[k - i]);
            }
            inv.push(-&acc);
        }
        Ok(Series::from_parts(&self.ring, inv))
    }

    /// Substitutes `t -> t^k`, keeping the same order.
    pub fn rescale_variable(&self, k: usize) -> Result<Series> {
        if k == 0 {
            return Err(Error::ZeroRescale);
        }
        let n = self.order();
        let mut coeffs = vec![Polynomial::zero(&self.ring); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(k) {
                Some(j) if j <= n => coeffs[j] = c.clone(),
                _ => break,
            }
        }
        Ok(Series::from_parts(&self.ring, coeffs))
    }

    /// Applies `f` to every coefficient; all images must share one ring.
    pub fn map_coeffs<F>(&self, target: &Ring, f: F) -> Result<Series>
    where
        F: FnMut(&Polynomial) -> Result<Polynomial>,
    {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        Series::new(target, coeffs)
    }

    /// `m`-fold product for `m >= 0`.
    pub fn pow_u32(&self, m: u32) -> Series {
        let mut acc = Series::one(&self.ring, self.order());
        for _ in 0..m {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn scale(&self, c: &Integer) -> Series {
        Series::from_parts(&self.ring, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// All coefficients are effective polynomials.
    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_effective)
    }
}

/// One-line form `c_0 + (c_1)*t + ...`, skipping zero coefficients.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let body = if c.num_terms() > 1 { format!("({c})") } else { c.to_string() };
            match n {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{body}*t")?,
                _ if c.is_one() => write!(f, "t^{n}")?,
                _ => write!(f, "{body}*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn z() -> Ring {
        RingDescriptor::integers()
    }

    #[test]
    fn one_plus_t_times_one_minus_t() {
        let a = Series::from_integers(&z(), [1, 1, 0]).unwrap();
        let b = Series::from_integers(&z(), [1, -1, 0]).unwrap();
        assert_eq!(a.mul(&b).unwrap(), Series::from_integers(&z(), [1, 0, -1]).unwrap());
    }

    #[test]
    fn geometric_telescopes() {
        let g = Series::geometric(&z(), 5);
        let b = Series::from_integers(&z(), [1, -1, 0, 0, 0, 0]).unwrap();
        assert_eq!(g.mul(&b).unwrap(), Series::one(&z(), 5));
    }

    #[test]
    fn square_of_one_plus_uvt() {
        let r = RingDescriptor::hodge();
        let uv = Polynomial::monomial(&r, vec![1, 1], 1).unwrap();
        let a = Series::new(&r, vec![Polynomial::one(&r), uv.clone(), Polynomial::zero(&r)]).unwrap();
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.coeff(1), &uv.scale(&Integer::from(2)));
        assert_eq!(sq.coeff(2).to_string(), "u^2*v^2");
    }

    #[test]
    fn inverse_examples() {
        let a = Series::from_integers(&z(), [1, -1, 0, 0]).unwrap();
        assert_eq!(a.inverse().unwrap(), Series::geometric(&z(), 3));
        assert_eq!(Series::one(&z(), 4).inverse().unwrap(), Series::one(&z(), 4));
        let r = RingDescriptor::motivic();
        let l = Polynomial::variable(&r, "L").unwrap();
        let b = Series::new(&r, vec![Polynomial::one(&r), l, Polynomial::zero(&r)]).unwrap();
        assert_eq!(b.inverse().unwrap().coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["1", "-L", "L^2"]);
    }

    #[test]
    fn inverse_needs_unital() {
        let a = Series::from_integers(&z(), [2, 1]).unwrap();
        assert!(matches!(a.inverse(), Err(Error::NotUnital(_))));
    }

    #[test]
    fn rescale_examples() {
        let a = Series::from_integers(&z(), [1, 1, 0, 0, 0]).unwrap();
        assert_eq!(a.rescale_variable(2).unwrap(), Series::from_integers(&z(), [1, 0, 1, 0, 0]).unwrap());
        let b = Series::from_integers(&z(), [1, 1, 1, 0, 0]).unwrap();
        assert_eq!(b.rescale_variable(3).unwrap(), Series::from_integers(&z(), [1, 0, 0, 1, 0]).unwrap());
        assert_eq!(Series::one(&z(), 3).rescale_variable(7).unwrap(), Series::one(&z(), 3));
        assert_eq!(a.rescale_variable(0), Err(Error::ZeroRescale));
    }

    #[test]
    fn mismatches() {
        let a = Series::one(&z(), 2);
        let b = Series::one(&z(), 3);
        assert_eq!(a.mul(&b), Err(Error::OrderMismatch { left: 2, right: 3 }));
        let c = Series::one(&RingDescriptor::motivic(), 2);
        assert!(matches!(a.mul(&c), Err(Error::RingMismatch { .. })));
        assert_eq!(a.truncate(5), Err(Error::OrderExtension { known: 2, requested: 5 }));
    }

    #[test]
    fn display() {
        let r = RingDescriptor::motivic();
        let l = Polynomial::variable(&r, "L").unwrap();
        let s = Series::new(&r, vec![Polynomial::one(&r), l.clone(), &l + &Polynomial::one(&r)]).unwrap();
        assert_eq!(s.to_string(), "1 + L*t + (L+1)*t^2 + O(t^3)");
    }
}
