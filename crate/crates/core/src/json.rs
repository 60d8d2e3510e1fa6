//! JSON interchange forms. Coefficients travel as decimal strings.
//!
//! ```json
//! {"ring": {"vars": ["u", "v"], "laurent": false},
//!  "terms": [{"exp": [1, 1], "coef": "1"}, {"exp": [0, 0], "coef": "1"}]}
//! ```
//!
//! A series is `{"order": N, "coeffs": [poly, ...]}` and an Euler product
//! `{"order": N, "exponents": [poly, ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::poly::Polynomial;
use crate::power::EulerProduct;
use crate::ring::{Ring, RingDescriptor};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub vars: Vec<String>,
    pub laurent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub ring: RingJson,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<PolynomialJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerProductJson {
    pub order: usize,
    pub exponents: Vec<PolynomialJson>,
}

impl From<&RingDescriptor> for RingJson {
    fn from(r: &RingDescriptor) -> Self {
        RingJson { vars: r.variables().to_vec(), laurent: r.is_laurent() }
    }
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            ring: p.ring().as_ref().into(),
            terms: p.terms().rev().map(|(e, c)| TermJson { exp: e.to_vec(), coef: c.to_string() }).collect(),
        }
    }
}

impl From<&Series> for SeriesJson {
    fn from(s: &Series) -> Self {
        SeriesJson { order: s.order(), coeffs: s.coeffs().iter().map(Into::into).collect() }
    }
}

impl From<&EulerProduct> for EulerProductJson {
    fn from(e: &EulerProduct) -> Self {
        EulerProductJson { order: e.order(), exponents: e.exponents().iter().map(Into::into).collect() }
    }
}

/// Reuses one ring handle across all polynomials of a document.
#[derive(Default)]
struct RingCache(Vec<Ring>);

impl RingCache {
    fn get(&mut self, r: &RingJson) -> Result<Ring> {
        if let Some(ring) = self.0.iter().find(|x| x.variables() == r.vars.as_slice() && x.is_laurent() == r.laurent) {
            return Ok(ring.clone());
        }
        let ring = RingDescriptor::new(&r.vars, r.laurent)?;
        self.0.push(ring.clone());
        Ok(ring)
    }

    fn poly(&mut self, p: &PolynomialJson) -> Result<Polynomial> {
        let ring = self.get(&p.ring)?;
        let terms = p
            .terms
            .iter()
            .map(|t| {
                let c: Integer =
                    t.coef.trim().parse().map_err(|_| Error::Json(format!("bad coefficient {:?}", t.coef)))?;
                Ok((t.exp.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(&ring, terms)
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = Error;
    fn try_from(p: &PolynomialJson) -> Result<Self> {
        RingCache::default().poly(p)
    }
}

impl TryFrom<&SeriesJson> for Series {
    type Error = Error;
    fn try_from(s: &SeriesJson) -> Result<Self> {
        if s.coeffs.len() != s.order + 1 {
            return Err(Error::Json(format!(
                "order {} needs {} coefficients, found {}",
                s.order,
                s.order + 1,
                s.coeffs.len()
            )));
        }
        let mut cache = RingCache::default();
        let coeffs = s.coeffs.iter().map(|p| cache.poly(p)).collect::<Result<Vec<_>>>()?;
        let ring = coeffs[0].ring().clone();
        Series::new(&ring, coeffs)
    }
}

impl TryFrom<&EulerProductJson> for EulerProduct {
    type Error = Error;
    fn try_from(e: &EulerProductJson) -> Result<Self> {
        if e.exponents.len() != e.order {
            return Err(Error::Json(format!(
                "order {} needs {} exponents, found {}",
                e.order,
                e.order,
                e.exponents.len()
            )));
        }
        let mut cache = RingCache::default();
        let exps = e.exponents.iter().map(|p| cache.poly(p)).collect::<Result<Vec<_>>>()?;
        let ring = exps.first().map(|p| p.ring().clone()).unwrap_or_else(RingDescriptor::integers);
        EulerProduct::new(&ring, exps)
    }
}

pub fn polynomial_to_json(p: &Polynomial) -> String {
    serde_json::to_string(&PolynomialJson::from(p)).expect("serializable")
}

pub fn polynomial_from_json(s: &str) -> Result<Polynomial> {
    Polynomial::try_from(&serde_json::from_str::<PolynomialJson>(s)?)
}

pub fn series_to_json(s: &Series) -> String {
    serde_json::to_string(&SeriesJson::from(s)).expect("serializable")
}

pub fn series_from_json(s: &str) -> Result<Series> {
    Series::try_from(&serde_json::from_str::<SeriesJson>(s)?)
}

pub fn euler_product_to_json(e: &EulerProduct) -> String {
    serde_json::to_string(&EulerProductJson::from(e)).expect("serializable")
}

pub fn euler_product_from_json(s: &str) -> Result<EulerProduct> {
    EulerProduct::try_from(&serde_json::from_str::<EulerProductJson>(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_shape() {
        let r = RingDescriptor::hodge();
        let p = Polynomial::from_terms(&r, [(vec![1, 1], Integer::ONE), (vec![0, 0], Integer::ONE)]).unwrap();
        assert_eq!(
            polynomial_to_json(&p),
            r#"{"ring":{"vars":["u","v"],"laurent":false},"terms":[{"exp":[1,1],"coef":"1"},{"exp":[0,0],"coef":"1"}]}"#
        );
        assert_eq!(polynomial_from_json(&polynomial_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn huge_coefficients_survive() {
        let r = RingDescriptor::integers();
        let big: Integer = "123456789012345678901234567890".parse().unwrap();
        let p = Polynomial::constant(&r, big);
        assert_eq!(polynomial_from_json(&polynomial_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_malformed() {
        assert!(series_from_json(r#"{"order": 2, "coeffs": []}"#).is_err());
        let bad = r#"{"ring":{"vars":["u"],"laurent":false},"terms":[{"exp":[-1],"coef":"1"}]}"#;
        assert_eq!(polynomial_from_json(bad), Err(Error::NegativeExponent { var: "u".into() }));
        let bad = r#"{"ring":{"vars":["u"],"laurent":false},"terms":[{"exp":[1],"coef":"x"}]}"#;
        assert!(matches!(polynomial_from_json(bad), Err(Error::Json(_))));
    }

    #[test]
    fn mixed_rings_in_series_rejected() {
        let s = r#"{"order":1,"coeffs":[
            {"ring":{"vars":["u"],"laurent":false},"terms":[{"exp":[0],"coef":"1"}]},
            {"ring":{"vars":["v"],"laurent":false},"terms":[]}]}"#;
        assert!(matches!(series_from_json(s), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn euler_product_round_trip() {
        let r = RingDescriptor::motivic();
        let e =
            EulerProduct::new(&r, vec![Polynomial::one(&r), Polynomial::monomial(&r, vec![-2], -3).unwrap()]).unwrap();
        assert_eq!(euler_product_from_json(&euler_product_to_json(&e)).unwrap(), e);
    }
}
