//! Brute-force counterparts of the power structure, used only for checking.
//!
//! Nothing here calls into [`crate::power`]: counts come from explicit
//! enumeration of finite configurations, or from the configuration-space
//! formula evaluated with falling factorials.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::poly::Polynomial;
use crate::ring::RingDescriptor;

/// Finite graded set `A` (with `sizes[i]` points of weight `i + 1`) and a
/// finite set `M` of `m` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub sizes: Vec<u32>,
    pub m: u32,
}

pub const MAX_POINTS: u32 = 8;
pub const MAX_GRADED_POINTS: u32 = 12;
/// Upper bound on `(|A| + 1)^m`, the number of maps visited by enumeration.
pub const MAX_ENUMERATION: u64 = 1 << 26;
pub const MAX_PARTITION_N: u32 = 60;
pub const MAX_PUNCTUAL_N: u32 = 40;

impl WeightProfile {
    pub fn new(sizes: Vec<u32>, m: u32) -> Self {
        WeightProfile { sizes, m }
    }

    fn total(&self) -> u32 {
        self.sizes.iter().sum()
    }

    fn check_scale(&self) -> Result<()> {
        if self.m > MAX_POINTS {
            return Err(Error::ScaleBound(format!("|M| = {} > {MAX_POINTS}", self.m)));
        }
        if self.total() > MAX_GRADED_POINTS {
            return Err(Error::ScaleBound(format!("|A| = {} > {MAX_GRADED_POINTS}", self.total())));
        }
        let work = (self.total() as u64 + 1).saturating_pow(self.m);
        if work > MAX_ENUMERATION {
            return Err(Error::ScaleBound(format!("(|A|+1)^|M| = {work} > {MAX_ENUMERATION}")));
        }
        Ok(())
    }
}

/// Counts pairs `(K, phi)` with `K` a subset of `M` and `phi: K -> A`, by
/// total weight `sum_{k in K} w(phi(k))`, up to weight `order`.
///
/// Each point of `M` is either left out of `K` or sent to one of the points of
/// `A`; the enumeration walks all `(|A| + 1)^m` such choices.
pub fn finite_power_enumerate(profile: &WeightProfile, order: usize) -> Result<Vec<u64>> {
    profile.check_scale()?;
    // Weight of each point of A; choice 0 means "not in K".
    let mut weights = vec![0usize];
    for (i, &a) in profile.sizes.iter().enumerate() {
        weights.extend(std::iter::repeat_n(i + 1, a as usize));
    }
    let base = weights.len();
    let m = profile.m as usize;
    let mut counts = vec![0u64; order + 1];
    let mut choice = vec![0usize; m];
    loop {
        let w: usize = choice.iter().map(|&c| weights[c]).sum();
        if w <= order {
            counts[w] += 1;
        }
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == m {
                return Ok(counts);
            }
            choice[pos] += 1;
            if choice[pos] < base {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn falling_factorial(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (m - i))
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// Multiplicity vectors `(k_1, ..., k_W)` with `sum i k_i = n`.
fn multiplicity_vectors(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if part == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=rest / part {
            cur[part - 1] = k;
            go(rest - k * part, part - 1, cur, out);
        }
        cur[part - 1] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; max_part];
    go(n, max_part, &mut cur, &mut out);
    out
}

/// The configuration-space coefficient formula evaluated on finite sets:
/// `sum_{sum i k_i = n} m! / ((m - sum k_i)! prod k_i!) * prod a_i^{k_i}`.
pub fn coefficient_formula_count(profile: &WeightProfile, order: usize) -> Result<Vec<u64>> {
    profile.check_scale()?;
    let w = profile.sizes.len();
    let m = profile.m as u64;
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut total = BigUint::zero();
        if n == 0 {
            total = BigUint::one();
        } else if w > 0 {
            for ks in multiplicity_vectors(n, w) {
                let points: u64 = ks.iter().map(|&k| k as u64).sum();
                let ordered = falling_factorial(m, points);
                if ordered.is_zero() {
                    continue;
                }
                let sym: BigUint = ks.iter().map(|&k| factorial(k as u64)).product();
                let values: BigUint =
                    ks.iter().zip(&profile.sizes).map(|(&k, &a)| BigUint::from(a).pow(k as u32)).product();
                total += ordered / sym * values;
            }
        }
        out.push(u64::try_from(total).map_err(|_| Error::ScaleBound("count exceeds 64 bits".into()))?);
    }
    Ok(out)
}

/// All partitions of `n`, each weakly decreasing.
pub fn partitions_enumerate(n: u32) -> Result<Vec<Vec<u32>>> {
    if n > MAX_PARTITION_N {
        return Err(Error::ScaleBound(format!("n = {n} > {MAX_PARTITION_N}")));
    }
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Class of the punctual Hilbert scheme of `n` points on a smooth surface,
/// `sum_{lambda |- n} L^{n - len(lambda)}`, in `Z[L, L^-1]`.
pub fn punctual_surface_class_oracle(n: u32) -> Result<Polynomial> {
    if n > MAX_PUNCTUAL_N {
        return Err(Error::ScaleBound(format!("n = {n} > {MAX_PUNCTUAL_N}")));
    }
    let ring = RingDescriptor::motivic();
    let terms =
        partitions_enumerate(n)?.into_iter().map(|lambda| (vec![(n as usize - lambda.len()) as i32], Integer::ONE));
    Polynomial::from_terms(&ring, terms.collect::<Vec<_>>())
}

/// Coefficients of `prod_{k>=1} (1 - t^k)^{-chi}` for `chi >= 0`, by
/// convolving `chi` copies of the enumerated partition counts.
pub fn partition_power_counts(chi: u32, order: usize) -> Result<Vec<BigUint>> {
    let p: Vec<BigUint> =
        (0..=order).map(|n| partitions_enumerate(n as u32).map(|v| BigUint::from(v.len()))).collect::<Result<_>>()?;
    let mut acc = vec![BigUint::zero(); order + 1];
    acc[0] = BigUint::one();
    for _ in 0..chi {
        let mut next = vec![BigUint::zero(); order + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in p.iter().enumerate().take(order + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        assert_eq!(finite_power_enumerate(&WeightProfile::new(vec![2], 3), 3).unwrap(), [1, 6, 12, 8]);
        assert_eq!(finite_power_enumerate(&WeightProfile::new(vec![3, 1], 0), 3).unwrap(), [1, 0, 0, 0]);
        assert_eq!(finite_power_enumerate(&WeightProfile::new(vec![1, 1], 2), 2).unwrap()[2], 3);
    }

    #[test]
    fn formula_examples() {
        let p = WeightProfile::new(vec![2], 3);
        let c = coefficient_formula_count(&p, 4).unwrap();
        assert_eq!(c[1], 6);
        assert_eq!(c[4], 0);
        assert_eq!(coefficient_formula_count(&WeightProfile::new(vec![1, 1], 2), 2).unwrap()[2], 3);
    }

    #[test]
    fn scale_bounds() {
        assert!(matches!(finite_power_enumerate(&WeightProfile::new(vec![1], 9), 2), Err(Error::ScaleBound(_))));
        assert!(matches!(coefficient_formula_count(&WeightProfile::new(vec![13], 1), 2), Err(Error::ScaleBound(_))));
        assert!(matches!(partitions_enumerate(61), Err(Error::ScaleBound(_))));
        assert!(matches!(punctual_surface_class_oracle(41), Err(Error::ScaleBound(_))));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_enumerate(0).unwrap(), vec![Vec::<u32>::new()]);
        assert_eq!(partitions_enumerate(4).unwrap().len(), 5);
        assert_eq!(partitions_enumerate(10).unwrap().len(), 42);
        for lambda in partitions_enumerate(12).unwrap() {
            assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
            assert_eq!(lambda.iter().sum::<u32>(), 12);
        }
    }

    #[test]
    fn punctual_classes() {
        assert_eq!(punctual_surface_class_oracle(1).unwrap().to_string(), "1");
        assert_eq!(punctual_surface_class_oracle(2).unwrap().to_string(), "L+1");
        assert_eq!(punctual_surface_class_oracle(3).unwrap().to_string(), "L^2+L+1");
        assert_eq!(punctual_surface_class_oracle(7).unwrap().eval_at_ones(), Integer::from(15));
    }

    #[test]
    fn partition_powers() {
        let c: Vec<u64> = partition_power_counts(1, 6).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, [1, 1, 2, 3, 5, 7, 11]);
        // prod (1-t^k)^{-2}: 1, 2, 5, 10, 20.
        let c: Vec<u64> = partition_power_counts(2, 4).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, [1, 2, 5, 10, 20]);
        let c: Vec<u64> = partition_power_counts(0, 3).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, [1, 0, 0, 0]);
    }
}
