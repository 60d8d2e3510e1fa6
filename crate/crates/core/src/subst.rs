//! Ring maps that send each variable to a monomial.
//!
//! These are exactly the substitutions that commute with the monomial kernel
//! `(1-t)^{-a}`: a monomial `x^k` goes to a monomial, so each factor
//! `(1 - x^k t)^{-p}` goes to a factor of the same shape. Evaluation at all
//! ones (the Euler characteristic) is the special case where every image is 1.

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::poly::Polynomial;
use crate::ring::{ensure_same, Ring, RingDescriptor};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    source: Ring,
    target: Ring,
    /// `images[i]` is the exponent vector (in `target`) of the image of variable `i`.
    images: Vec<Vec<i32>>,
}

impl MonomialMap {
    /// `images` lists one target polynomial per source variable. A Laurent
    /// source may map into a polynomial target; applying the map to a
    /// negative power then fails.
    pub fn new(source: &Ring, target: &Ring, images: &[Polynomial]) -> Result<Self> {
        if images.len() != source.arity() {
            return Err(Error::IncompatibleSubstitution(format!(
                "{} images given for {} variables",
                images.len(),
                source.arity()
            )));
        }
        let mut exps = Vec::with_capacity(images.len());
        for (img, name) in images.iter().zip(source.variables()) {
            ensure_same(img.ring(), target)?;
            let e = img.as_unit_monomial().ok_or_else(|| {
                Error::IncompatibleSubstitution(format!("{name} -> {img}: {}", Error::NotAMonomial(img.to_string())))
            })?;
            exps.push(e.to_vec());
        }
        Ok(MonomialMap { source: source.clone(), target: target.clone(), images: exps })
    }

    /// Every variable to 1, landing in the integers.
    pub fn eval_at_ones(source: &Ring) -> Self {
        MonomialMap {
            source: source.clone(),
            target: RingDescriptor::integers(),
            images: vec![Vec::new(); source.arity()],
        }
    }

    /// The identity of `ring`.
    pub fn identity(ring: &Ring) -> Self {
        let r = ring.arity();
        let images = (0..r).map(|i| (0..r).map(|j| (i == j) as i32).collect()).collect();
        MonomialMap { source: ring.clone(), target: ring.clone(), images }
    }

    /// Parses assignments like `["L", "u*v"]` by variable name; unlisted
    /// variables are rejected.
    pub fn from_assignments(source: &Ring, target: &Ring, assignments: &[(String, Polynomial)]) -> Result<Self> {
        let mut images: Vec<Option<Polynomial>> = vec![None; source.arity()];
        for (name, img) in assignments {
            let i = source.index_of(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            images[i] = Some(img.clone());
        }
        let images = images
            .into_iter()
            .zip(source.variables())
            .map(|(img, name)| img.ok_or_else(|| Error::IncompatibleSubstitution(format!("no image given for {name}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, &images)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn is_eval_at_ones(&self) -> bool {
        self.target.arity() == 0
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        ensure_same(p.ring(), &self.source)?;
        let r = self.target.arity();
        let terms = p.terms().map(|(e, c)| {
            let mut img = vec![0i32; r];
            for (k, img_k) in e.iter().zip(&self.images) {
                for (slot, x) in img.iter_mut().zip(img_k) {
                    *slot += k * x;
                }
            }
            (img, c.clone())
        });
        Polynomial::from_terms(&self.target, terms.collect::<Vec<(Vec<i32>, Integer)>>())
    }

    pub fn apply_series(&self, s: &Series) -> Result<Series> {
        s.map_coeffs(&self.target, |c| self.apply(c))
    }
}
