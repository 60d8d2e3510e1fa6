//! Arbitrary-precision integers with an inline fast path.
//!
//! Almost every coefficient met while expanding truncated Euler products fits
//! in a machine word, so values are kept as `i64` until an operation overflows
//! and only then promoted to a heap-allocated [`BigInt`]. The representation is
//! canonical: a `Large` value never fits in `i64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Large(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer::Small(0);
    pub const ONE: Integer = Integer::Small(1);

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Large(b),
        }
    }

    pub(crate) fn from_i128(v: i128) -> Self {
        match i64::try_from(v) {
            Ok(v) => Integer::Small(v),
            Err(_) => Integer::Large(BigInt::from(v)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Large(b) => b.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Large(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Integer::Small(v) => *v < 0,
            Integer::Large(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Integer {
        match self {
            Integer::Small(v) => match v.checked_abs() {
                Some(a) => Integer::Small(a),
                None => Integer::Large(BigInt::from(*v).abs()),
            },
            Integer::Large(b) => Integer::from_big(b.abs()),
        }
    }

    /// Exact division; `None` if `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &Integer) -> Option<Integer> {
        if divisor.is_zero() {
            return None;
        }
        match (self, divisor) {
            (Integer::Small(a), Integer::Small(b)) => {
                let (a, b) = (*a as i128, *b as i128);
                (a % b == 0).then(|| Integer::from_i128(a / b))
            }
            _ => {
                let (q, r) = self.to_bigint().div_rem(&divisor.to_bigint());
                r.is_zero().then(|| Integer::from_big(q))
            }
        }
    }

    pub fn pow(&self, mut exp: u32) -> Integer {
        let mut base = self.clone();
        let mut acc = Integer::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn binomial(n: u64, k: u64) -> Integer {
        if k > n {
            return Integer::ZERO;
        }
        let k = k.min(n - k);
        let mut acc = BigInt::one();
        for i in 0..k {
            acc *= n - i;
            acc /= i + 1;
        }
        Integer::from_big(acc)
    }
}

impl Default for Integer {
    fn default() -> Self {
        Integer::ZERO
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<u32> for Integer {
    fn from(v: u32) -> Self {
        Integer::Small(v as i64)
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        Integer::from_i128(v as i128)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl From<&Integer> for BigInt {
    fn from(v: &Integer) -> Self {
        v.to_bigint()
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn add(self, rhs: &'a Integer) -> Integer {
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_add(*b) {
                Some(s) => Integer::Small(s),
                None => Integer::from_i128(*a as i128 + *b as i128),
            },
            _ => Integer::from_big(self.to_bigint() + rhs.to_bigint()),
        }
    }
}

impl<'a> Sub<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn sub(self, rhs: &'a Integer) -> Integer {
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => match a.checked_sub(*b) {
                Some(s) => Integer::Small(s),
                None => Integer::from_i128(*a as i128 - *b as i128),
            },
            _ => Integer::from_big(self.to_bigint() - rhs.to_bigint()),
        }
    }
}

impl<'a> Mul<&'a Integer> for &'a Integer {
    type Output = Integer;
    fn mul(self, rhs: &'a Integer) -> Integer {
        match (self, rhs) {
            (Integer::Small(a), Integer::Small(b)) => Integer::from_i128(*a as i128 * *b as i128),
            _ => Integer::from_big(self.to_bigint() * rhs.to_bigint()),
        }
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match self {
            Integer::Small(a) => match a.checked_neg() {
                Some(n) => Integer::Small(n),
                None => Integer::Large(-BigInt::from(*a)),
            },
            Integer::Large(b) => Integer::from_big(-b),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

impl AddAssign<&Integer> for Integer {
    fn add_assign(&mut self, rhs: &Integer) {
        if let (Integer::Small(a), Integer::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Integer::Small(s);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Large(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Integer {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigInt::from_str(s).map(Integer::from_big)
    }
}

/// Accumulator for sums of products, with an `i128` fast path.
#[derive(Clone, Debug, Default)]
pub(crate) enum Accumulator {
    #[default]
    Empty,
    Small(i128),
    Large(BigInt),
}

impl Accumulator {
    #[inline]
    pub(crate) fn add_product(&mut self, a: &Integer, b: &Integer) {
        if let (Integer::Small(x), Integer::Small(y)) = (a, b) {
            let p = *x as i128 * *y as i128;
            match self {
                Accumulator::Empty => {
                    *self = Accumulator::Small(p);
                    return;
                }
                Accumulator::Small(s) => {
                    if let Some(v) = s.checked_add(p) {
                        *s = v;
                        return;
                    }
                }
                Accumulator::Large(s) => {
                    *s += p;
                    return;
                }
            }
        }
        let p = a.to_bigint() * b.to_bigint();
        self.add_big(p);
    }

    #[inline]
    pub(crate) fn add(&mut self, a: &Integer) {
        if let Integer::Small(x) = a {
            match self {
                Accumulator::Empty => {
                    *self = Accumulator::Small(*x as i128);
                    return;
                }
                Accumulator::Small(s) => {
                    if let Some(v) = s.checked_add(*x as i128) {
                        *s = v;
                        return;
                    }
                }
                Accumulator::Large(s) => {
                    *s += *x;
                    return;
                }
            }
        }
        self.add_big(a.to_bigint());
    }

    fn add_big(&mut self, p: BigInt) {
        *self = match std::mem::take(self) {
            Accumulator::Empty => Accumulator::Large(p),
            Accumulator::Small(s) => Accumulator::Large(BigInt::from(s) + p),
            Accumulator::Large(s) => Accumulator::Large(s + p),
        };
    }

    pub(crate) fn finish(self) -> Integer {
        match self {
            Accumulator::Empty => Integer::ZERO,
            Accumulator::Small(v) => Integer::from_i128(v),
            Accumulator::Large(b) => Integer::from_big(b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &Integer) -> BigInt {
        v.to_bigint()
    }

    #[test]
    fn overflow_promotes() {
        let a = Integer::from(i64::MAX);
        let s = &a + &Integer::ONE;
        assert!(matches!(s, Integer::Large(_)));
        assert_eq!(big(&s), BigInt::from(i64::MAX) + 1);
        let back = &s - &Integer::ONE;
        assert!(matches!(back, Integer::Small(_)));
        assert_eq!(-&Integer::from(i64::MIN), Integer::Large(-BigInt::from(i64::MIN)));
    }

    #[test]
    fn binomials() {
        assert_eq!(Integer::binomial(5, 2), Integer::from(10));
        assert_eq!(Integer::binomial(3, 4), Integer::ZERO);
        assert_eq!(Integer::binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn exact_division() {
        assert_eq!(Integer::from(12).div_exact(&Integer::from(-4)), Some(Integer::from(-3)));
        assert_eq!(Integer::from(13).div_exact(&Integer::from(4)), None);
        assert_eq!(Integer::from(1).div_exact(&Integer::ZERO), None);
        assert_eq!(Integer::from(i64::MIN).div_exact(&Integer::from(-1)), Some(-Integer::from(i64::MIN)));
    }

    proptest! {
        #[test]
        fn matches_bigint(a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            let (x, y, z) = (Integer::from(a), Integer::from(b), Integer::from(c));
            let (bx, by, bz) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
            let e = &(&x * &y) + &z;
            prop_assert_eq!(big(&e), &bx * &by + &bz);
            let e2 = &(&e * &e) - &x;
            prop_assert_eq!(big(&e2), (&bx * &by + &bz) * (&bx * &by + &bz) - &bx);
            let mut acc = Accumulator::default();
            acc.add_product(&x, &y);
            acc.add_product(&e, &z);
            acc.add(&x);
            prop_assert_eq!(big(&acc.finish()), &bx * &by + (&bx * &by + &bz) * &bz + &bx);
            prop_assert_eq!(x.cmp(&e), bx.cmp(&(&bx * &by + &bz)));
        }
    }
}
