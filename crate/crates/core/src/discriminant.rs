//! Weighted degrees of discriminant loci and `T^1` weight bookkeeping.
//!
//! The delta-character of a curve with `G_m`-action is minus the weighted
//! degree of the discriminant in its deformation space. Degrees here are
//! stored as positive magnitudes; the sign is absorbed when characters are
//! assembled, so table entries come out positive.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::singularities::{AttachmentConfig, SingularityModel};

/// Miniversal family `x^n + a_{n-1} x^{n-1} + ... + a_0` with `x` of weight
/// magnitude `w_x`, so `a_i` has weight `(i - n) w_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedPolynomialFamily {
    pub degree: u32,
    pub w_x: u32,
}

impl WeightedPolynomialFamily {
    pub fn coefficient_weights(&self) -> Vec<i64> {
        (0..self.degree)
            .map(|i| (i as i64 - self.degree as i64) * self.w_x as i64)
            .collect()
    }

    pub fn discriminant_degree(&self) -> u64 {
        disc_weighted_degree(self.degree, self.w_x)
    }
}

/// `w_x * n * (n - 1)`: `n` roots of weight `-w_x`, squared product over
/// the `n(n-1)/2` differences.
pub fn disc_weighted_degree(n: u32, w_x: u32) -> u64 {
    w_x as u64 * n as u64 * (n as u64 - 1)
}

/// Discriminant degree of an isolated quasi-homogeneous plane singularity:
/// Milnor number times the weighted degree of the defining equation.
///
/// Agrees with [`disc_weighted_degree`] on the one-variable `A` families and
/// with the catalogued `D_{2k+2}` value; used for the families whose
/// discriminant is not written down explicitly.
pub fn quasi_homogeneous_disc_weight(milnor: u64, equation_degree: u64) -> u64 {
    milnor * equation_degree
}

/// `x^{pb} = y^{qb}` with `x` of weight `q`, `y` of weight `p`.
pub fn toric_disc_weight(p: u64, q: u64, b: u64) -> BigInt {
    let (p, q, b) = (BigInt::from(p), BigInt::from(q), BigInt::from(b));
    let milnor = (&p * &b - 1) * (&q * &b - 1);
    milnor * p * q * b
}

/// `chi_{delta_0}` contribution: discriminant weight minus the node
/// weights of the attached branches.
pub fn chi_delta0_from_model(model: &SingularityModel, attach: &AttachmentConfig) -> Result<BigInt> {
    let disc = model.singular_delta_weight().ok_or_else(|| {
        Error::MissingClosedForm(format!("discriminant weight of {}", model.family()))
    })?;
    let attached: BigInt = attach
        .resolve(model.branch_count())?
        .iter()
        .map(|&i| &model.branches()[i - 1].node_weight)
        .sum();
    Ok(disc - attached)
}

/// Weight decomposition of `det T^1(C)` for a rational tail carrying an
/// `A_{2k}` cusp at `0` and a node at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T1Decomposition {
    pub sing_weight_sum: i64,
    pub crimping_weights: Vec<i64>,
    pub node_weights: Vec<i64>,
    /// `T^1(C_0, q)` carries the trivial action.
    pub base_contribution: i64,
}

impl T1Decomposition {
    pub fn a_even(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::OutOfRange(format!(
                "crimping weights need k >= 2, got {k}"
            )));
        }
        let k = k as i64;
        // a_i -> lambda^{2i - 4k - 2} a_i for i = 0..2k-1
        let sing_weight_sum = (0..2 * k).map(|i| 2 * i - 4 * k - 2).sum();
        let crimping_weights = (1..=2 * k - 3).step_by(2).collect();
        Ok(T1Decomposition {
            sing_weight_sum,
            crimping_weights,
            node_weights: vec![1],
            base_contribution: 0,
        })
    }

    pub fn chi_k(&self) -> i64 {
        self.sing_weight_sum
            + self.crimping_weights.iter().sum::<i64>()
            + self.node_weights.iter().sum::<i64>()
            + self.base_contribution
    }
}

/// `chi_K` of an attached `A_{2k}` cusp from the `T^1` weights.
pub fn chi_k_direct_a_even(k: u32) -> Result<BigInt> {
    Ok(BigInt::from(T1Decomposition::a_even(k)?.chi_k()))
}

/// Sparse polynomial in `a_0, ..., a_{n-1}` with integer coefficients.
pub type MultiPoly = BTreeMap<Vec<u32>, BigInt>;

/// Entry of the Sylvester matrix: `coeff * a_var` (or a constant).
#[derive(Clone, Copy)]
struct Entry {
    coeff: i128,
    var: Option<usize>,
}

fn sylvester(n: usize) -> Vec<Vec<Option<Entry>>> {
    // f = sum_{i<n} a_i x^i + x^n, f' = sum_{i=1}^{n} i a_i x^{i-1} with a_n = 1.
    let f: Vec<Entry> = (0..=n)
        .map(|i| Entry {
            coeff: 1,
            var: (i < n).then_some(i),
        })
        .collect();
    let df: Vec<Entry> = (1..=n)
        .map(|i| Entry {
            coeff: i as i128,
            var: (i < n).then_some(i),
        })
        .collect();
    let size = 2 * n - 1;
    let mut m = vec![vec![None; size]; size];
    // n-1 shifted copies of f, n shifted copies of f'.
    for r in 0..n - 1 {
        for (j, e) in f.iter().enumerate() {
            m[r][r + j] = Some(*e);
        }
    }
    for r in 0..n {
        for (j, e) in df.iter().enumerate() {
            m[n - 1 + r][r + j] = Some(*e);
        }
    }
    m
}

// Exponent vectors are packed eight bits per variable; no exponent of the
// resultant exceeds 2n - 1 = 15.
const EXP_BITS: usize = 8;

fn unpack(key: u64, n: usize) -> Vec<u32> {
    (0..n).map(|v| ((key >> (EXP_BITS * v)) & 0xff) as u32).collect()
}

/// Resultant `Res(f, f')` of the generic monic degree-`n` polynomial,
/// expanded symbolically. Equal to the discriminant up to sign.
///
/// The determinant is expanded row by row over subsets of used columns, so
/// no polynomial division is needed.
pub fn generic_monic_resultant(n: u32) -> Result<MultiPoly> {
    if !(2..=8).contains(&n) {
        return Err(Error::OutOfRange(format!("oracle degree must be in [2, 8], got {n}")));
    }
    let n = n as usize;
    let m = sylvester(n);
    let size = m.len();
    let overflow = || Error::OutOfRange("resultant coefficient overflow".into());
    let mut layer: HashMap<u32, HashMap<u64, i128>> = HashMap::new();
    layer.insert(0, HashMap::from([(0u64, 1i128)]));
    for row in &m {
        let mut next: HashMap<u32, HashMap<u64, i128>> = HashMap::new();
        for (&mask, poly) in &layer {
            for (col, entry) in row.iter().enumerate() {
                let Some(entry) = entry else { continue };
                if mask & (1 << col) != 0 {
                    continue;
                }
                let inversions = (mask >> (col + 1)).count_ones();
                let scale = if inversions % 2 == 0 { entry.coeff } else { -entry.coeff };
                let shift = entry.var.map_or(0, |v| 1u64 << (EXP_BITS * v));
                let target = next.entry(mask | (1 << col)).or_default();
                for (&key, &c) in poly {
                    let term = c.checked_mul(scale).ok_or_else(overflow)?;
                    let slot = target.entry(key + shift).or_insert(0);
                    *slot = slot.checked_add(term).ok_or_else(overflow)?;
                }
            }
        }
        for poly in next.values_mut() {
            poly.retain(|_, c| *c != 0);
        }
        layer = next;
    }
    let full = layer.remove(&((1u32 << size) - 1)).unwrap_or_default();
    Ok(full
        .into_iter()
        .map(|(key, c)| (unpack(key, n), BigInt::from(c)))
        .collect())
}

/// Weighted degree of the symbolic discriminant, checked monomial by
/// monomial, returned as a positive magnitude.
pub fn disc_oracle(n: u32, w_x: u32) -> Result<u64> {
    weighted_degree_of(&generic_monic_resultant(n)?, n, w_x)
}

/// As [`disc_oracle`], reusing an already expanded resultant of degree `n`.
pub fn weighted_degree_of(poly: &MultiPoly, n: u32, w_x: u32) -> Result<u64> {
    let family = WeightedPolynomialFamily { degree: n, w_x };
    let weights = family.coefficient_weights();
    let mut degree: Option<i64> = None;
    for exps in poly.keys() {
        let d: i64 = exps
            .iter()
            .zip(&weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum();
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(Error::NotWeightedHomogeneous(d0, d)),
            _ => {}
        }
    }
    let d = degree.ok_or(Error::NotWeightedHomogeneous(0, 0))?;
    Ok((-d) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let k = 2;
        assert_eq!(disc_weighted_degree(2 * k + 2, 1), ((2 * k + 1) * (2 * k + 2)) as u64);
        assert_eq!(disc_weighted_degree(3, 2), 12);
        assert_eq!(disc_weighted_degree(2, 1), 2);
    }

    #[test]
    fn quadratic_and_cubic_resultants() {
        // Res(x^2 + a1 x + a0, 2x + a1) = -(a1^2 - 4 a0)
        let p = generic_monic_resultant(2).unwrap();
        let expect = MultiPoly::from([
            (vec![0, 2], BigInt::from(-1)),
            (vec![1, 0], BigInt::from(4)),
        ]);
        assert_eq!(p, expect);
        // The cubic resultant is 27 a0^2 + ... ; check the two pure powers.
        let p = generic_monic_resultant(3).unwrap();
        assert_eq!(p.get(&vec![2, 0, 0]), Some(&BigInt::from(27)));
        assert_eq!(p.get(&vec![0, 3, 0]), Some(&BigInt::from(4)));
        assert_eq!(p.len(), 5);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(disc_oracle(3, 1).unwrap(), 6);
        assert_eq!(disc_oracle(4, 1).unwrap(), 12);
        assert_eq!(disc_oracle(2, 2).unwrap(), 4);
        assert!(matches!(disc_oracle(9, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(disc_oracle(1, 1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn quasi_homogeneous_rule_matches_one_variable_families() {
        for k in 1..=25u64 {
            // A_{2k+1}: x weight 1, y weight k+1, degree 2k+2, Milnor 2k+1
            assert_eq!(
                quasi_homogeneous_disc_weight(2 * k + 1, 2 * k + 2),
                disc_weighted_degree(2 * k as u32 + 2, 1)
            );
            // A_{2k}: x weight 2, y weight 2k+1, degree 4k+2, Milnor 2k
            assert_eq!(
                quasi_homogeneous_disc_weight(2 * k, 4 * k + 2),
                disc_weighted_degree(2 * k as u32 + 1, 2)
            );
            // D_{2k+2}: x weight 1, y weight k, degree 2k+1, Milnor 2k+2
            assert_eq!(
                quasi_homogeneous_disc_weight(2 * k + 2, 2 * k + 1),
                (2 * k + 1) * (2 * k + 2)
            );
        }
    }

    #[test]
    fn chi_k_a_even() {
        assert_eq!(chi_k_direct_a_even(2).unwrap(), BigInt::from(-26));
        assert_eq!(chi_k_direct_a_even(3).unwrap(), BigInt::from(-49));
        assert_eq!(chi_k_direct_a_even(5).unwrap(), BigInt::from(-113));
        assert!(matches!(chi_k_direct_a_even(1), Err(Error::OutOfRange(_))));
        let t = T1Decomposition::a_even(4).unwrap();
        assert_eq!(t.sing_weight_sum, -(4 * 16 + 6 * 4));
        assert_eq!(t.crimping_weights, vec![1, 3, 5]);
    }
}
