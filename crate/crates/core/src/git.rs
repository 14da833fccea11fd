//! Hilbert-Mumford indices of Hilbert and Chow points of pluricanonically
//! embedded curves with a one-parameter group of automorphisms.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::singularities::chi_ribbon;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HMQuery {
    #[serde(serialize_with = "crate::serde_big::big")]
    pub chi_lambda: BigInt,
    #[serde(serialize_with = "crate::serde_big::big")]
    pub chi_delta: BigInt,
    pub g: u64,
    pub n: u64,
    /// Hilbert-point level; `None` for Chow points.
    pub m: Option<u64>,
}

impl HMQuery {
    /// Dimension `N` of the projective space receiving the embedding.
    pub fn ambient_dimension(&self) -> u64 {
        ambient_dimension(self.g, self.n)
    }
}

pub fn ambient_dimension(g: u64, n: u64) -> u64 {
    if n == 1 {
        g
    } else {
        (2 * n - 1) * (g - 1)
    }
}

fn check_gn(g: u64, n: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::OutOfRange(format!("genus must be >= 2, got {g}")));
    }
    if n < 1 {
        return Err(Error::OutOfRange("n must be >= 1".into()));
    }
    Ok(())
}

fn r(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n)
}

pub fn hm_index_hilbert(q: &HMQuery) -> Result<Rational> {
    check_gn(q.g, q.n)?;
    let m = q.m.ok_or_else(|| Error::OutOfRange("Hilbert index needs m".into()))?;
    if m < 2 {
        return Err(Error::OutOfRange(format!("m must be >= 2, got {m}")));
    }
    let (lam, del) = (r(q.chi_lambda.clone()), r(q.chi_delta.clone()));
    let (g, n, m) = (r(q.g), r(q.n), r(m));
    let one = Rational::one();
    let half = Rational::new(1, 2)?;
    if q.n == 1 {
        let inner = (Rational::from(4) * &g + Rational::from(2)) * &m - &g + &one;
        let bracket = inner * &lam - &half * &g * &m * &del;
        Ok(&lam + (&m - &one) * bracket)
    } else {
        let n2 = &n * &n;
        let coeff = Rational::from(6) * &m * &n2 - Rational::from(2) * &m * &n - Rational::from(2) * &n + &one;
        let bracket = coeff * &lam - &half * &m * &n2 * &del;
        Ok((&m - &one) * (&g - &one) * bracket)
    }
}

pub fn hm_index_chow(chi_lambda: &BigInt, chi_delta: &BigInt, g: u64, n: u64) -> Result<Rational> {
    check_gn(g, n)?;
    let (lam, del) = (r(chi_lambda.clone()), r(chi_delta.clone()));
    let (gg, nn) = (r(g), r(n));
    let half = Rational::new(1, 2)?;
    if n == 1 {
        Ok((Rational::from(4) * &gg + Rational::from(2)) * lam - half * gg * del)
    } else {
        let bracket = (Rational::from(6) * &nn - Rational::from(2)) * lam - &half * &nn * del;
        Ok((gg - Rational::one()) * nn * bracket)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StabilityStatus {
    Unstable,
    /// Index zero for this one-parameter subgroup; says nothing about others.
    StrictlySemistableWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    pub index: Rational,
    /// `n = 1` and `g + m - gm = 0`, where the index vanishes for every `l`.
    pub degenerate_corner: bool,
}

pub fn ribbon_stability(g: u64, ell: u64, n: u64, m: u64) -> Result<StabilityVerdict> {
    let c = chi_ribbon(g, ell)?;
    let index = hm_index_hilbert(&HMQuery {
        chi_lambda: c.chi_lambda().clone(),
        chi_delta: c.chi_delta().clone(),
        g,
        n,
        m: Some(m),
    })?;
    let status = if index.is_zero() {
        StabilityStatus::StrictlySemistableWitness
    } else {
        StabilityStatus::Unstable
    };
    Ok(StabilityVerdict {
        status,
        index,
        degenerate_corner: n == 1 && g + m == g * m,
    })
}

/// `g (g + m - gm) (l - (g-1)/2)`.
pub fn ribbon_hilbert_closed_form(g: u64, ell: u64, m: u64) -> Rational {
    let (g, ell, m) = (r(g), r(ell), r(m));
    let c = &ell - (&g - Rational::one()) / Rational::from(2);
    &g * (&g + &m - &g * &m) * c
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn hq(l: i64, d: i64, g: u64, n: u64, m: u64) -> HMQuery {
        HMQuery {
            chi_lambda: l.into(),
            chi_delta: d.into(),
            g,
            n,
            m: Some(m),
        }
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hm_index_hilbert(&hq(1, 11, 2, 2, 2)).unwrap(), q(-7, 1));
        assert_eq!(hm_index_hilbert(&hq(0, 0, 7, 3, 5)).unwrap(), q(0, 1));
        assert!(hm_index_hilbert(&hq(1, 1, 2, 1, 1)).is_err());
        assert!(hm_index_hilbert(&hq(1, 1, 1, 1, 2)).is_err());
        let mut chow = hq(1, 1, 3, 1, 2);
        chow.m = None;
        assert!(hm_index_hilbert(&chow).is_err());
    }

    #[test]
    fn chow_examples() {
        assert_eq!(hm_index_chow(&14.into(), &119.into(), 4, 1).unwrap(), q(14, 1));
        assert_eq!(hm_index_chow(&0.into(), &0.into(), 5, 1).unwrap(), q(0, 1));
        for g in 3..=40u64 {
            for ell in 1..=g - 2 {
                let c = chi_ribbon(g, ell).unwrap();
                assert!(hm_index_chow(c.chi_lambda(), c.chi_delta(), g, 1).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn ambient_dimensions() {
        assert_eq!(ambient_dimension(5, 1), 5);
        assert_eq!(ambient_dimension(5, 2), 12);
        assert_eq!(hq(0, 0, 4, 3, 2).ambient_dimension(), 15);
    }

    #[test]
    fn ribbon_verdicts() {
        let v = ribbon_stability(5, 2, 1, 3).unwrap();
        assert_eq!((v.status, v.index.clone()), (StabilityStatus::StrictlySemistableWitness, q(0, 1)));
        let v = ribbon_stability(5, 1, 1, 3).unwrap();
        assert_eq!((v.status, v.index.clone()), (StabilityStatus::Unstable, q(35, 1)));
        assert_eq!(ribbon_stability(4, 1, 2, 2).unwrap().status, StabilityStatus::Unstable);
        assert!(ribbon_stability(4, 3, 1, 2).is_err());
    }

    proptest! {
        #[test]
        fn ribbon_closed_form(g in 3u64..=40, seed in 0u64..1000, m in 2u64..=10) {
            let ell = 1 + seed % (g - 2);
            let v = ribbon_stability(g, ell, 1, m).unwrap();
            prop_assert_eq!(&v.index, &ribbon_hilbert_closed_form(g, ell, m));
            prop_assert_eq!(v.index.is_zero(), 2 * ell + 1 == g || v.degenerate_corner);
        }

        #[test]
        fn higher_n_nonzero_off_center(g in 3u64..=30, seed in 0u64..1000, n in 2u64..6, m in 2u64..8) {
            let ell = 1 + seed % (g - 2);
            let v = ribbon_stability(g, ell, n, m).unwrap();
            prop_assert_eq!(v.index.is_zero(), 2 * ell + 1 == g);
        }

        #[test]
        fn linearity(a in -50i64..50, b in -50i64..50, l1 in -99i64..99, d1 in -99i64..99,
                     l2 in -99i64..99, d2 in -99i64..99, g in 2u64..20, n in 1u64..5, m in 2u64..6) {
            let comb = hq(a * l1 + b * l2, a * d1 + b * d2, g, n, m);
            let lhs = hm_index_hilbert(&comb).unwrap();
            let rhs = Rational::from(a) * hm_index_hilbert(&hq(l1, d1, g, n, m)).unwrap()
                + Rational::from(b) * hm_index_hilbert(&hq(l2, d2, g, n, m)).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lc = hm_index_chow(&comb.chi_lambda, &comb.chi_delta, g, n).unwrap();
            let rc = Rational::from(a) * hm_index_chow(&l1.into(), &d1.into(), g, n).unwrap()
                + Rational::from(b) * hm_index_chow(&l2.into(), &d2.into(), g, n).unwrap();
            prop_assert_eq!(lc, rc);
        }
    }
}
