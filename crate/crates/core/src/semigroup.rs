//! Numerical semigroups and their gap sequences.
//!
//! A monomial unibranch singularity is determined by the semigroup of
//! exponents in its local ring; the missing positive integers (the gaps)
//! drive every character formula for such singularities. Two-generated
//! semigroups `<p, q>` come from the toric curves `x^p = y^q`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    /// Minimal generating data when known; empty for semigroups built from
    /// an explicit gap list.
    generators: Vec<u64>,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// Builds a semigroup from an explicit, strictly increasing gap list.
    ///
    /// The complement of the list must be closed under addition.
    pub fn from_gaps(gaps: Vec<u64>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::InvalidGaps("empty gap set (smooth point)".into()));
        }
        if gaps[0] == 0 {
            return Err(Error::InvalidGaps("0 cannot be a gap".into()));
        }
        if gaps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGaps("gaps must be strictly increasing".into()));
        }
        let frob = *gaps.last().unwrap();
        let is_gap = membership(&gaps, frob);
        for a in 1..=frob {
            if is_gap[a as usize] {
                continue;
            }
            for b in a..=frob - a {
                if !is_gap[b as usize] && is_gap[(a + b) as usize] {
                    return Err(Error::InvalidGaps(format!(
                        "{a} and {b} are elements but {} is a gap",
                        a + b
                    )));
                }
            }
        }
        Ok(NumericalSemigroup {
            generators: Vec::new(),
            gaps,
        })
    }

    /// Semigroup generated by an arbitrary finite set with gcd 1, found by
    /// a representability scan. Only meant for small generators.
    pub fn from_generators(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::OutOfRange("generators must be positive".into()));
        }
        let g = generators.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InvalidGaps(format!("generators have gcd {g}")));
        }
        let min = *generators.iter().min().unwrap();
        let max = *generators.iter().max().unwrap();
        // The Frobenius number of any generating set is below min * max.
        let bound = min * max;
        let rep = representable(generators, bound);
        let gaps: Vec<u64> = (1..=bound).filter(|&n| !rep[n as usize]).collect();
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        Ok(NumericalSemigroup {
            generators: gens,
            gaps,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps, which is the genus of the singularity.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Largest gap; zero when there are none.
    pub fn frobenius(&self) -> u64 {
        self.gaps.last().copied().unwrap_or(0)
    }

    pub fn gap_sum(&self) -> BigInt {
        self.gaps.iter().map(|&b| BigInt::from(b)).sum()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_err()
    }
}

fn membership(gaps: &[u64], upto: u64) -> Vec<bool> {
    let mut is_gap = vec![false; upto as usize + 1];
    for &b in gaps {
        is_gap[b as usize] = true;
    }
    is_gap
}

/// `rep[n]` is true iff `n` is a non-negative integer combination of `gens`.
fn representable(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut rep = vec![false; bound as usize + 1];
    rep[0] = true;
    for n in 1..=bound as usize {
        rep[n] = gens
            .iter()
            .any(|&g| (g as usize) <= n && rep[n - g as usize]);
    }
    rep
}

fn check_pair(p: u64, q: u64) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::OutOfRange(format!(
            "generators must be at least 2, got ({p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    Ok(())
}

/// Gaps of `<p, q>` by scanning representability over `[1, pq]`.
pub fn gaps_two_generated(p: u64, q: u64) -> Result<NumericalSemigroup> {
    check_pair(p, q)?;
    let bound = p * q;
    let rep = representable(&[p, q], bound);
    let gaps: Vec<u64> = (1..=bound).filter(|&n| !rep[n as usize]).collect();
    let s = NumericalSemigroup {
        generators: if p < q { vec![p, q] } else { vec![q, p] },
        gaps,
    };
    debug_assert_eq!(s.frobenius(), p * q - p - q);
    debug_assert_eq!(s.genus(), (p - 1) * (q - 1) / 2);
    Ok(s)
}

/// `(p-1)(q-1)(2pq-p-q-1)/12`.
pub fn sum_of_gaps_closed_form(p: u64, q: u64) -> Result<BigInt> {
    check_pair(p, q)?;
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    let one = BigInt::from(1);
    let num = (&p - &one) * (&q - &one) * (BigInt::from(2) * &p * &q - &p - &q - &one);
    let (quot, rem) = num.div_rem(&BigInt::from(12));
    debug_assert!(rem == BigInt::from(0));
    Ok(quot)
}

/// Gorenstein test: `n` is a gap iff `2k-1-n` is not, for `0 <= n <= 2k-1`.
pub fn is_symmetric(s: &NumericalSemigroup) -> bool {
    let k = s.genus();
    if k == 0 {
        return false;
    }
    let top = 2 * k - 1;
    if s.frobenius() != top {
        return false;
    }
    (0..=top).all(|n| s.contains(n) != s.contains(top - n))
}

/// Apéry set of `<p, q>` with respect to `q`: entry `r` is the least element
/// congruent to `r` mod `q`.
pub fn apery_set(p: u64, q: u64) -> Result<Vec<u64>> {
    check_pair(p, q)?;
    let mut out = vec![0; q as usize];
    // p*j for j < q runs over every residue class exactly once, and each is
    // the least element of its class.
    for j in 0..q {
        out[((p * j) % q) as usize] = p * j;
    }
    Ok(out)
}

/// Recovers the gap list from an Apéry set: below each Apéry element `a`
/// the values `a - q, a - 2q, ...` that stay positive are gaps.
pub fn gaps_from_apery(apery: &[u64], q: u64) -> Vec<u64> {
    let mut gaps: Vec<u64> = apery
        .iter()
        .flat_map(|&a| (1..=a / q).map(move |j| a - q * j))
        .filter(|&n| n > 0)
        .collect();
    gaps.sort_unstable();
    gaps
}
