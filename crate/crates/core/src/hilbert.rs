//! Generating series of Hilbert schemes of points.
//!
//! For a smooth variety `X` of dimension `d`, the series
//! `H_X(t) = 1 + sum_n [Hilb^n X] t^n` is the power `H_{A^d,0}(t)^{[X]}` of the
//! punctual series at the origin of affine `d`-space. Specializations follow
//! by transporting along ring maps that respect the power structure: the
//! Euler characteristic (`L -> 1`) and the Hodge-Deligne polynomial
//! (`L -> uv`).

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::SeriesJson;
use crate::oracles::{punctual_surface_class_oracle, MAX_PUNCTUAL_N};
use crate::poly::Polynomial;
use crate::power::{base_series, exp_map, pow};
use crate::ring::{ensure_same, Ring, RingDescriptor};
use crate::series::Series;
use crate::subst::MonomialMap;

const BUNDLED_SURFACE_DATA: &str = include_str!("../data/local_d2.json");

/// Provenance string written into generated surface data.
pub const SURFACE_SOURCE: &str = "generated: partition sum over lambda |- n of L^(n - number of parts of lambda)";

/// Punctual Hilbert series `H_{A^d,0}(t)` over `Z[L, L^-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHilbertData {
    pub dimension: u32,
    pub series: Series,
    pub source: String,
}

#[derive(Serialize, Deserialize)]
struct LocalHilbertJson {
    dimension: u32,
    source: String,
    series: SeriesJson,
}

impl LocalHilbertData {
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: LocalHilbertJson = serde_json::from_str(s)?;
        let series = Series::try_from(&raw.series)?;
        let data = LocalHilbertData { dimension: raw.dimension, series, source: raw.source };
        data.normalized()
    }

    pub fn to_json(&self) -> String {
        let raw = LocalHilbertJson {
            dimension: self.dimension,
            source: self.source.clone(),
            series: SeriesJson::from(&self.series),
        };
        serde_json::to_string_pretty(&raw).expect("serializable") + "\n"
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Moves the series into `Z[L, L^-1]` and checks the invariants every
    /// punctual series satisfies.
    fn normalized(mut self) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidLocalData(m));
        if self.dimension == 0 {
            return bad("dimension must be positive".into());
        }
        if self.series.ring().variables() != ["L"] {
            return bad(format!("series must be in the variable L, found ring {}", self.series.ring()));
        }
        let ring = RingDescriptor::motivic();
        self.series = self.series.map_coeffs(&ring, |c| c.embed(&ring))?;
        let s = &self.series;
        if !s.is_unital() {
            return bad(format!("coefficient of t^0 is {}, expected 1", s.coeff(0)));
        }
        if s.order() >= 1 && !s.coeff(1).is_one() {
            return bad(format!("coefficient of t^1 is {}, expected 1", s.coeff(1)));
        }
        if let Some(n) = (0..=s.order()).find(|&n| !s.coeff(n).is_effective()) {
            return bad(format!("coefficient of t^{n} is not effective: {}", s.coeff(n)));
        }
        match self.dimension {
            1 => {
                if let Some(n) = (0..=s.order()).find(|&n| !s.coeff(n).is_one()) {
                    return bad(format!("d = 1 needs every coefficient 1; t^{n} has {}", s.coeff(n)));
                }
            }
            2 => {
                for n in 2..=s.order().min(MAX_PUNCTUAL_N as usize) {
                    let expected = punctual_surface_class_oracle(n as u32)?;
                    if *s.coeff(n) != expected {
                        return bad(format!("t^{n} has {}, partition sum gives {expected}", s.coeff(n)));
                    }
                }
            }
            _ => {}
        }
        Ok(self)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        Ok(LocalHilbertData {
            dimension: self.dimension,
            series: self.series.truncate(order)?,
            source: self.source.clone(),
        })
    }
}

/// Punctual surface data computed from the partition-sum oracle.
pub fn generate_surface_data(order: usize) -> Result<LocalHilbertData> {
    let ring = RingDescriptor::motivic();
    let coeffs = (0..=order).map(|n| punctual_surface_class_oracle(n as u32)).collect::<Result<Vec<_>>>()?;
    Ok(LocalHilbertData { dimension: 2, series: Series::new(&ring, coeffs)?, source: SURFACE_SOURCE.into() })
}

/// The bundled `d = 2` data file, parsed and checked once.
pub fn bundled_surface_data() -> Result<LocalHilbertData> {
    static CACHE: OnceLock<Result<LocalHilbertData>> = OnceLock::new();
    CACHE.get_or_init(|| LocalHilbertData::from_json(BUNDLED_SURFACE_DATA)).clone()
}

/// `prod_{k>=1} (1 - L^{k-1+shift} t^k)^{-1}` to the given order.
fn surface_product(shift: i32, order: usize) -> Series {
    let ring = RingDescriptor::motivic();
    let exps: Vec<Polynomial> = (1..=order)
        .map(|k| Polynomial::monomial(&ring, vec![k as i32 - 1 + shift], 1).expect("Laurent ring"))
        .collect();
    exp_map(&ring, &exps).expect("same ring")
}

/// Local series for dimension `d` at `order`.
///
/// `d = 1` is `1 + t + t^2 + ...`: a smooth curve germ has exactly one
/// subscheme of each length. `d = 2` comes from the bundled data, extended
/// past its order by `prod_{k>=1} (1 - L^{k-1} t^k)^{-1}`. Higher dimensions
/// need `user` data.
pub fn local_series(dimension: u32, order: usize, user: Option<&LocalHilbertData>) -> Result<LocalHilbertData> {
    if let Some(data) = user {
        if data.dimension != dimension {
            return Err(Error::DimensionMismatch { class: dimension, local: data.dimension });
        }
        return data.clone().normalized()?.truncate(order);
    }
    let ring = RingDescriptor::motivic();
    match dimension {
        0 => Err(Error::InvalidLocalData("dimension must be positive".into())),
        1 => Ok(LocalHilbertData {
            dimension: 1,
            series: Series::geometric(&ring, order),
            source: "curve germ: one subscheme of each length".into(),
        }),
        2 => {
            let bundled = bundled_surface_data()?;
            if order <= bundled.order() {
                bundled.truncate(order)
            } else {
                Ok(LocalHilbertData {
                    dimension: 2,
                    series: surface_product(0, order),
                    source: "product over k >= 1 of (1 - L^(k-1) t^k)^(-1)".into(),
                })
            }
        }
        d => Err(Error::MissingLocalData(d)),
    }
}

/// Class of a smooth variety with its dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyClass {
    pub class: Polynomial,
    pub dimension: u32,
}

impl VarietyClass {
    pub fn new(class: Polynomial, dimension: u32) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidLocalData("dimension must be positive".into()));
        }
        Ok(VarietyClass { class, dimension })
    }
}

fn local_in(ring: &Ring, local: &LocalHilbertData, class: &VarietyClass, order: usize) -> Result<Series> {
    if class.dimension != local.dimension {
        return Err(Error::DimensionMismatch { class: class.dimension, local: local.dimension });
    }
    local.series.truncate(order)?.map_coeffs(ring, |c| c.embed(ring))
}

/// `H_X(t) = H_{A^d,0}(t)^{[X]}` with `[X]` a polynomial in `L`.
pub fn global_series(x: &VarietyClass, local: &LocalHilbertData, order: usize) -> Result<Series> {
    let ring = x.class.ring();
    let s = local_in(ring, local, x, order)?;
    pow(&s, &x.class)
}

/// Coefficientwise evaluation at `L = 1` (or `u = v = 1`).
pub fn euler_specialization(series: &Series) -> Result<Series> {
    MonomialMap::eval_at_ones(series.ring()).apply_series(series)
}

/// `chi(H_X(t)) = chi(H_{A^d,0}(t))^{chi(X)}`.
pub fn euler_series(chi: &Polynomial, local: &LocalHilbertData, order: usize) -> Result<Series> {
    ensure_same(chi.ring(), &RingDescriptor::integers())?;
    pow(&euler_specialization(&local.series.truncate(order)?)?, chi)
}

/// `e(H_X(t)) = e(H_{A^d,0}(t))^{e_X}`, with `e_X` in a two-variable ring
/// and the local series moved there by `L -> uv`.
pub fn hodge_deligne_series(e_x: &VarietyClass, local: &LocalHilbertData, order: usize) -> Result<Series> {
    let ring = e_x.class.ring();
    if ring.arity() != 2 {
        return Err(Error::InvalidRing(format!(
            "Hodge-Deligne polynomials live in a ring with two variables, not {ring}"
        )));
    }
    if e_x.dimension != local.dimension {
        return Err(Error::DimensionMismatch { class: e_x.dimension, local: local.dimension });
    }
    let to_uv = l_to_uv(ring)?;
    let s = to_uv.apply_series(&local.series.truncate(order)?)?;
    pow(&s, &e_x.class)
}

/// `L -> x*y` into a two-variable ring.
pub fn l_to_uv(target: &Ring) -> Result<MonomialMap> {
    let uv = Polynomial::monomial(target, vec![1, 1], 1)?;
    MonomialMap::new(&RingDescriptor::motivic(), target, &[uv])
}

/// `zeta_X(t) = sum_n [Sym^n X] t^n = (1-t)^{-[X]}`.
pub fn kapranov_zeta(class: &Polynomial, order: usize) -> Series {
    base_series(class, order)
}

/// Hilbert series of affine `d`-space from closed forms: symmetric powers of
/// the line for `d = 1`, `prod_k (1 - L^{k+1} t^k)^{-1}` for `d = 2`.
pub fn affine_hilbert_series(dimension: u32, order: usize) -> Result<Series> {
    match dimension {
        1 => Ok(kapranov_zeta(&Polynomial::variable(&RingDescriptor::motivic(), "L")?, order)),
        2 => Ok(surface_product(2, order)),
        d => Err(Error::MissingLocalData(d)),
    }
}

#[derive(Clone, Debug, Default)]
pub struct ConsistencyReport {
    pub checks: Vec<(String, bool)>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Checks `H_{A^d} = H_{A^d,0}^{L^d}` and
/// `H_{A^d}^{L^{-d}[X]} = H_{A^d,0}^{[X]}` for a set of sample classes.
pub fn affine_consistency_check(dimension: u32, order: usize, samples: &[Polynomial]) -> Result<ConsistencyReport> {
    let ring = RingDescriptor::motivic();
    let local = local_series(dimension, order, None)?;
    let ld = Polynomial::monomial(&ring, vec![dimension as i32], 1)?;
    let l_minus_d = Polynomial::monomial(&ring, vec![-(dimension as i32)], 1)?;
    let mut report = ConsistencyReport::default();
    let affine = pow(&local.series, &ld)?;
    report.checks.push((
        format!("H_A{dimension} = H_A{dimension},0^(L^{dimension})"),
        affine == affine_hilbert_series(dimension, order)?,
    ));
    for x in samples {
        let x = x.embed(&ring)?;
        let lhs = pow(&affine, &l_minus_d.mul_unchecked(&x))?;
        let rhs = pow(&local.series, &x)?;
        report.checks.push((format!("[X] = {x}"), lhs == rhs));
    }
    Ok(report)
}

/// Sample classes used by the affine consistency check.
pub fn default_consistency_samples(dimension: u32) -> Vec<Polynomial> {
    let ring = RingDescriptor::motivic();
    let p = |t: &[(i32, i64)]| {
        Polynomial::from_terms(&ring, t.iter().map(|&(e, c)| (vec![e], c.into())).collect::<Vec<_>>())
            .expect("Laurent ring")
    };
    vec![
        p(&[]),
        p(&[(1, 1), (0, 1)]),
        p(&[(dimension as i32, 1)]),
        p(&[(2, 1), (1, 1), (0, 1)]),
        p(&[(3, 2), (1, -1), (0, 1)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expression;

    fn l(src: &str) -> Polynomial {
        parse_expression(src, &RingDescriptor::motivic()).unwrap()
    }

    fn strings(s: &Series) -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn local_series_examples() {
        assert_eq!(strings(&local_series(1, 3, None).unwrap().series), ["1", "1", "1", "1"]);
        assert_eq!(strings(&local_series(2, 3, None).unwrap().series), ["1", "1", "L+1", "L^2+L+1"]);
        let p: Vec<i64> = (0..=8)
            .map(|n| local_series(2, 8, None).unwrap().series.coeff(n).eval_at_ones().to_i64().unwrap())
            .collect();
        assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(local_series(3, 3, None), Err(Error::MissingLocalData(3)));
    }

    #[test]
    fn bundled_surface_data_has_not_drifted() {
        let bundled = bundled_surface_data().unwrap();
        assert_eq!(bundled.order(), MAX_PUNCTUAL_N as usize);
        assert_eq!(bundled, generate_surface_data(bundled.order()).unwrap());
        assert_eq!(bundled.series, surface_product(0, bundled.order()));
    }

    #[test]
    fn surface_data_beyond_bundled_order() {
        let s = local_series(2, 44, None).unwrap();
        assert_eq!(s.series.truncate(40).unwrap(), bundled_surface_data().unwrap().series);
        assert!(s.series.is_effective());
    }

    #[test]
    fn user_data_is_checked() {
        let ring = RingDescriptor::motivic();
        let good = LocalHilbertData {
            dimension: 3,
            series: Series::new(&ring, vec![l("1"), l("1"), l("L+1"), l("2*L^2+L+1")]).unwrap(),
            source: "test".into(),
        };
        assert_eq!(local_series(3, 2, Some(&good)).unwrap().series, good.series.truncate(2).unwrap());
        assert!(matches!(local_series(3, 5, Some(&good)), Err(Error::OrderExtension { .. })));
        assert!(matches!(local_series(2, 2, Some(&good)), Err(Error::DimensionMismatch { .. })));
        let mut bad = good.clone();
        bad.series = Series::new(&ring, vec![l("1"), l("2")]).unwrap();
        assert!(matches!(local_series(3, 1, Some(&bad)), Err(Error::InvalidLocalData(_))));
        bad.series = Series::new(&ring, vec![l("1"), l("1"), l("L-1")]).unwrap();
        assert!(matches!(local_series(3, 2, Some(&bad)), Err(Error::InvalidLocalData(_))));
        let mut wrong_d2 = good.clone();
        wrong_d2.dimension = 2;
        assert!(matches!(local_series(2, 3, Some(&wrong_d2)), Err(Error::InvalidLocalData(_))));
    }

    #[test]
    fn local_json_round_trip() {
        let d = local_series(2, 5, None).unwrap();
        assert_eq!(LocalHilbertData::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn global_series_examples() {
        // Curve: [P^1] = 1 + L, Hilb^n = Sym^n P^1 = P^n.
        let x = VarietyClass::new(l("1+L"), 1).unwrap();
        let h = global_series(&x, &local_series(1, 4, None).unwrap(), 4).unwrap();
        assert_eq!(strings(&h), ["1", "L+1", "L^2+L+1", "L^3+L^2+L+1", "L^4+L^3+L^2+L+1"]);
        let a2 = VarietyClass::new(l("L^2"), 2).unwrap();
        let h = global_series(&a2, &local_series(2, 2, None).unwrap(), 2).unwrap();
        assert_eq!(strings(&h), ["1", "L^2", "L^4+L^3"]);
        let empty = VarietyClass::new(l("0"), 2).unwrap();
        assert_eq!(
            global_series(&empty, &local_series(2, 3, None).unwrap(), 3).unwrap(),
            Series::one(&RingDescriptor::motivic(), 3)
        );
        assert!(matches!(
            global_series(&a2, &local_series(1, 2, None).unwrap(), 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn consistency_examples() {
        for d in [1, 2] {
            let samples = default_consistency_samples(d);
            let report = affine_consistency_check(d, 6, &samples).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.checks.len(), samples.len() + 1);
        }
    }

    #[test]
    fn euler_examples() {
        let x = VarietyClass::new(l("1"), 2).unwrap();
        let h = euler_specialization(&global_series(&x, &local_series(2, 6, None).unwrap(), 6).unwrap()).unwrap();
        assert_eq!(strings(&h), ["1", "1", "2", "3", "5", "7", "11"]);
        let one = Series::one(&RingDescriptor::motivic(), 3);
        assert_eq!(euler_specialization(&one).unwrap(), Series::one(&RingDescriptor::integers(), 3));
        let chi = Polynomial::constant(&RingDescriptor::integers(), 1);
        assert_eq!(euler_series(&chi, &local_series(2, 6, None).unwrap(), 6).unwrap(), h);
    }

    #[test]
    fn hodge_examples() {
        let r = RingDescriptor::hodge();
        let e = VarietyClass::new(parse_expression("1+u*v", &r).unwrap(), 1).unwrap();
        let h = hodge_deligne_series(&e, &local_series(1, 2, None).unwrap(), 2).unwrap();
        assert_eq!(h.coeff(2).to_string(), "u^2*v^2+u*v+1");
        let e = VarietyClass::new(parse_expression("u^2*v^2", &r).unwrap(), 2).unwrap();
        let h = hodge_deligne_series(&e, &local_series(2, 3, None).unwrap(), 3).unwrap();
        assert_eq!(h.coeff(1).to_string(), "u^2*v^2");
        let bad = VarietyClass::new(l("L"), 2).unwrap();
        assert!(hodge_deligne_series(&bad, &local_series(2, 3, None).unwrap(), 3).is_err());
    }

    #[test]
    fn zeta_examples() {
        let r = RingDescriptor::hodge();
        let z = kapranov_zeta(&parse_expression("1+u*v", &r).unwrap(), 2);
        assert_eq!(z.coeff(2).to_string(), "u^2*v^2+u*v+1");
        assert!(kapranov_zeta(&Polynomial::zero(&r), 4) == Series::one(&r, 4));
    }
}
