//! Sparse multivariate Laurent polynomials with exact integer coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::int::{Accumulator, Integer};
use crate::ring::{ensure_same, Ring, RingDescriptor};

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    pub fn new(exponents: Vec<i32>) -> Self {
        Monomial(exponents.into_boxed_slice())
    }

    pub fn unit(arity: usize) -> Self {
        Monomial(vec![0; arity].into_boxed_slice())
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    fn scaled(&self, k: i32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }
}

/// Graded lexicographic: total degree first, then lexicographic in variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of a [`RingDescriptor`]: terms sorted ascending in graded-lex
/// order, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Integer)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        crate::ring::same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: impl Into<Integer>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::unit(ring.arity()), c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn variable(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_owned()))?;
        let mut e = vec![0; ring.arity()];
        e[i] = 1;
        Ok(Polynomial { ring: ring.clone(), terms: vec![(Monomial::new(e), Integer::ONE)] })
    }

    pub fn monomial(ring: &Ring, exponents: Vec<i32>, coef: impl Into<Integer>) -> Result<Self> {
        Self::from_terms(ring, [(exponents, coef.into())])
    }

    /// Builds a polynomial from arbitrary terms, combining repeated exponents.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, Integer)>,
    {
        let mut map: HashMap<Monomial, Integer> = HashMap::new();
        for (exps, c) in terms {
            check_exponents(ring, &exps)?;
            *map.entry(Monomial::new(exps)).or_default() += &c;
        }
        Ok(Self::from_map(ring, map))
    }

    fn from_map(ring: &Ring, map: HashMap<Monomial, Integer>) -> Self {
        let mut terms: Vec<(Monomial, Integer)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &Integer)> + ExactSizeIterator {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_unit() && self.terms[0].1.is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Integer> {
        match self.terms.as_slice() {
            [] => Some(Integer::ZERO),
            [(m, c)] if m.is_unit() => Some(c.clone()),
            _ => None,
        }
    }

    /// `Some(exponents)` if this is a single monomial with coefficient 1.
    pub fn as_unit_monomial(&self) -> Option<&[i32]> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() => Some(m.exponents()),
            _ => None,
        }
    }

    /// Coefficient of the given exponent vector.
    pub fn coefficient(&self, exponents: &[i32]) -> Integer {
        let key = Monomial::new(exponents.to_vec());
        self.terms.binary_search_by(|(m, _)| m.cmp(&key)).map(|i| self.terms[i].1.clone()).unwrap_or(Integer::ZERO)
    }

    /// Every coefficient is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        ensure_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        ensure_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        ensure_same(&self.ring, &other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &Integer| if subtract { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() == 1 && self.terms[0].0.is_unit() {
            return other.scale(&self.terms[0].1);
        }
        if other.terms.len() == 1 && other.terms[0].0.is_unit() {
            return self.scale(&other.terms[0].1);
        }
        Polynomial::sum_of_products(&self.ring, None, &[(self, other)])
    }

    /// `base + sum a_i * b_i`, accumulated in one pass.
    pub(crate) fn sum_of_products(
        ring: &Ring,
        base: Option<&Polynomial>,
        pairs: &[(&Polynomial, &Polynomial)],
    ) -> Polynomial {
        let pairs: Vec<_> = pairs.iter().filter(|(a, b)| !a.is_zero() && !b.is_zero()).collect();
        let base = base.filter(|b| !b.is_zero());
        let r = ring.arity();
        let mut lo = vec![i32::MAX; r];
        let mut hi = vec![i32::MIN; r];
        let mut widen = |l: &[i32], h: &[i32]| {
            for v in 0..r {
                lo[v] = lo[v].min(l[v]);
                hi[v] = hi[v].max(h[v]);
            }
        };
        let mut products = 0usize;
        for (a, b) in &pairs {
            let (la, ha) = a.exponent_box();
            let (lb, hb) = b.exponent_box();
            let l: Vec<i32> = la.iter().zip(&lb).map(|(x, y)| x + y).collect();
            let h: Vec<i32> = ha.iter().zip(&hb).map(|(x, y)| x + y).collect();
            widen(&l, &h);
            products += a.terms.len() * b.terms.len();
        }
        if let Some(b) = base {
            let (l, h) = b.exponent_box();
            widen(&l, &h);
            products += b.terms.len();
        }
        if products == 0 {
            return Polynomial::zero(ring);
        }
        let mut strides = vec![0usize; r];
        let mut size: usize = 1;
        for v in (0..r).rev() {
            strides[v] = size;
            size = size.saturating_mul((hi[v] - lo[v] + 1) as usize);
        }
        let mut terms = Vec::new();
        if size <= (1 << 22) && size <= 16 * products + 64 {
            // Dense accumulation over the common bounding box.
            let flat = |m: &Monomial, shift: &[i32]| -> isize {
                m.0.iter().zip(shift).zip(&strides).map(|((e, l), s)| (e - l) as isize * *s as isize).sum()
            };
            // Offsetting only the left factor by `lo` makes the index sum address the product.
            let zero = vec![0; r];
            let offsets: Vec<(Vec<isize>, Vec<isize>)> = pairs
                .iter()
                .map(|(a, b)| {
                    (
                        a.terms.iter().map(|(m, _)| flat(m, &lo)).collect(),
                        b.terms.iter().map(|(m, _)| flat(m, &zero)).collect(),
                    )
                })
                .collect();
            let base_offsets: Vec<usize> =
                base.map(|b| b.terms.iter().map(|(m, _)| flat(m, &lo) as usize).collect()).unwrap_or_default();
            let mut values: Vec<(usize, Integer)> = Vec::new();
            if Polynomial::small_bound(base, &pairs).is_some_and(|b| b < 1u128 << 126) {
                // Every partial sum fits in an i128.
                let mut acc = vec![0i128; size];
                if let Some(b) = base {
                    for (i, (_, c)) in base_offsets.iter().zip(&b.terms) {
                        acc[*i] += c.to_i64().unwrap() as i128;
                    }
                }
                for ((a, b), (ia, ib)) in pairs.iter().zip(&offsets) {
                    let cb: Vec<i128> = b.terms.iter().map(|(_, c)| c.to_i64().unwrap() as i128).collect();
                    for (x, (_, ca)) in ia.iter().zip(&a.terms) {
                        let ca = ca.to_i64().unwrap() as i128;
                        for (y, cb) in ib.iter().zip(&cb) {
                            acc[(x + y) as usize] += ca * cb;
                        }
                    }
                }
                values.extend(
                    acc.into_iter().enumerate().filter(|(_, v)| *v != 0).map(|(i, v)| (i, Integer::from_i128(v))),
                );
            } else {
                let mut acc = vec![Accumulator::default(); size];
                if let Some(b) = base {
                    for (i, (_, c)) in base_offsets.iter().zip(&b.terms) {
                        acc[*i].add(c);
                    }
                }
                for ((a, b), (ia, ib)) in pairs.iter().zip(&offsets) {
                    for (x, (_, ca)) in ia.iter().zip(&a.terms) {
                        for (y, (_, cb)) in ib.iter().zip(&b.terms) {
                            acc[(x + y) as usize].add_product(ca, cb);
                        }
                    }
                }
                values.extend(acc.into_iter().enumerate().map(|(i, a)| (i, a.finish())).filter(|(_, c)| !c.is_zero()));
            }
            for (idx, c) in values {
                let mut rem = idx;
                let exps: Vec<i32> = (0..r)
                    .map(|v| {
                        let q = rem / strides[v];
                        rem %= strides[v];
                        q as i32 + lo[v]
                    })
                    .collect();
                terms.push((Monomial::new(exps), c));
            }
        } else {
            let mut map: HashMap<Monomial, Accumulator> = HashMap::with_capacity(products);
            if let Some(b) = base {
                for (m, c) in &b.terms {
                    map.entry(m.clone()).or_default().add(c);
                }
            }
            for (a, b) in &pairs {
                for (ma, ca) in &a.terms {
                    for (mb, cb) in &b.terms {
                        map.entry(ma.mul(mb)).or_default().add_product(ca, cb);
                    }
                }
            }
            terms = map.into_iter().map(|(m, a)| (m, a.finish())).filter(|(_, c)| !c.is_zero()).collect();
        }
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Upper bound on every partial sum when all coefficients are machine-sized.
    fn small_bound(base: Option<&Polynomial>, pairs: &[&(&Polynomial, &Polynomial)]) -> Option<u128> {
        let l1 = |p: &Polynomial| -> Option<u128> {
            p.terms.iter().try_fold(0u128, |s, (_, c)| s.checked_add(c.to_i64()?.unsigned_abs() as u128))
        };
        let mut total = base.map_or(Some(0), l1)?;
        for (a, b) in pairs {
            total = total.checked_add(l1(a)?.checked_mul(l1(b)?)?)?;
        }
        Some(total)
    }

    fn exponent_box(&self) -> (Vec<i32>, Vec<i32>) {
        let r = self.ring.arity();
        let mut lo = vec![i32::MAX; r];
        let mut hi = vec![i32::MIN; r];
        for (m, _) in &self.terms {
            for v in 0..r {
                lo[v] = lo[v].min(m.0[v]);
                hi[v] = hi[v].max(m.0[v]);
            }
        }
        (lo, hi)
    }

    pub fn scale(&self, c: &Integer) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides every coefficient by `d`; `None` unless all divisions are exact.
    pub fn div_exact(&self, d: &Integer) -> Option<Polynomial> {
        let terms =
            self.terms.iter().map(|(m, x)| x.div_exact(d).map(|q| (m.clone(), q))).collect::<Option<Vec<_>>>()?;
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Substitutes every variable `x` by `x^k` (the `k`-th Adams operation).
    pub fn adams(&self, k: u32) -> Polynomial {
        if k == 1 {
            return self.clone();
        }
        let k = k as i32;
        // Scaling exponents by k > 0 preserves the graded-lex order.
        let terms = self.terms.iter().map(|(m, c)| (m.scaled(k), c.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Sum of all coefficients: every variable set to 1.
    pub fn eval_at_ones(&self) -> Integer {
        let mut acc = Accumulator::default();
        for (_, c) in &self.terms {
            acc.add(c);
        }
        acc.finish()
    }

    /// Reinterprets this polynomial in a ring with the same variable names.
    pub fn embed(&self, ring: &Ring) -> Result<Polynomial> {
        if crate::ring::same_ring(&self.ring, ring) {
            return Ok(self.clone());
        }
        if ring.variables() != self.ring.variables() {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: ring.to_string() });
        }
        for (m, _) in &self.terms {
            check_exponents(ring, m.exponents())?;
        }
        Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() })
    }
}

pub(crate) fn check_exponents(ring: &RingDescriptor, exps: &[i32]) -> Result<()> {
    if exps.len() != ring.arity() {
        return Err(Error::ExponentArity { expected: ring.arity(), got: exps.len() });
    }
    if !ring.is_laurent() {
        if let Some(i) = exps.iter().position(|&e| e < 0) {
            return Err(Error::NegativeExponent { var: ring.variables()[i].clone() });
        }
    }
    Ok(())
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on ring mismatch; use [`Polynomial::try_add`] for a checked sum.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials in different rings")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials in different rings")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials in different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

/// Canonical text form: descending graded-lex, `*` products, `^` powers.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut s = String::new();
            let vars: Vec<String> =
                m.0.iter()
                    .zip(self.ring.variables())
                    .filter(|(e, _)| **e != 0)
                    .map(|(e, name)| if *e == 1 { name.clone() } else { format!("{name}^{e}") })
                    .collect();
            if vars.is_empty() {
                s.push_str(&c.to_string());
            } else {
                if c.is_one() {
                } else if *c == Integer::from(-1) {
                    s.push('-');
                } else {
                    s.push_str(&format!("{c}*"));
                }
                s.push_str(&vars.join("*"));
            }
            if i > 0 && !s.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&s)?;
        }
        Ok(())
    }
}
