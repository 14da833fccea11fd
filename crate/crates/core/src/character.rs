//! Torus characters of the tautological line bundles and the alpha-value
//! and slope derived from them.
//!
//! A [`Character`] records the weights by which a one-parameter subgroup
//! `G_m -> Aut(C)` acts on the fibres of `lambda = lambda_1`, `lambda_2` and
//! `delta` at `[C]`. The three are tied by `lambda_2 = 13 lambda - delta`, so
//! only two are stored independently; `chi_K = 13 chi_lambda - 2 chi_delta`
//! is always derived.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Character {
    #[serde(serialize_with = "crate::serde_big::big")]
    chi_lambda: BigInt,
    #[serde(serialize_with = "crate::serde_big::big")]
    chi_lambda2: BigInt,
    #[serde(serialize_with = "crate::serde_big::big")]
    chi_delta: BigInt,
    /// Per-boundary-index breakdown `i -> chi_{delta_i}`.
    #[serde(serialize_with = "crate::serde_big::opt_big_map")]
    delta_parts: Option<BTreeMap<u32, BigInt>>,
}

impl Character {
    pub fn from_lambda_delta(chi_lambda: impl Into<BigInt>, chi_delta: impl Into<BigInt>) -> Self {
        let chi_lambda = chi_lambda.into();
        let chi_delta = chi_delta.into();
        let chi_lambda2 = BigInt::from(13) * &chi_lambda - &chi_delta;
        Character {
            chi_lambda,
            chi_lambda2,
            chi_delta,
            delta_parts: None,
        }
    }

    pub fn from_lambdas(chi_lambda: impl Into<BigInt>, chi_lambda2: impl Into<BigInt>) -> Self {
        let chi_lambda = chi_lambda.into();
        let chi_lambda2 = chi_lambda2.into();
        let chi_delta = BigInt::from(13) * &chi_lambda - &chi_lambda2;
        Character {
            chi_lambda,
            chi_lambda2,
            chi_delta,
            delta_parts: None,
        }
    }

    /// Attaches a `delta_i` breakdown; the parts must sum to `chi_delta`.
    pub fn with_delta_parts(mut self, parts: BTreeMap<u32, BigInt>) -> Result<Self> {
        let total: BigInt = parts.values().sum();
        if total != self.chi_delta {
            return Err(Error::InvalidCharacter(format!(
                "delta parts sum to {total}, chi_delta is {}",
                self.chi_delta
            )));
        }
        self.delta_parts = Some(parts);
        Ok(self)
    }

    pub fn chi_lambda(&self) -> &BigInt {
        &self.chi_lambda
    }

    pub fn chi_lambda2(&self) -> &BigInt {
        &self.chi_lambda2
    }

    pub fn chi_delta(&self) -> &BigInt {
        &self.chi_delta
    }

    pub fn delta_parts(&self) -> Option<&BTreeMap<u32, BigInt>> {
        self.delta_parts.as_ref()
    }

    pub fn chi_k(&self) -> BigInt {
        BigInt::from(13) * &self.chi_lambda - BigInt::from(2) * &self.chi_delta
    }

    pub fn is_trivial(&self) -> bool {
        self.chi_lambda.is_zero() && self.chi_lambda2.is_zero()
    }

    /// Flips the global sign so that `chi_lambda >= 0` (and `chi_delta >= 0`
    /// when `chi_lambda` vanishes). Characters are only defined up to sign.
    pub fn normalized(self) -> Self {
        let flip = self.chi_lambda.is_negative()
            || (self.chi_lambda.is_zero() && self.chi_delta.is_negative());
        if flip {
            -self
        } else {
            self
        }
    }

    pub fn alpha(&self) -> Result<AlphaResult> {
        alpha_value(self)
    }

    pub fn slope(&self) -> Result<Rational> {
        slope(self)
    }
}

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character {
            chi_lambda: -self.chi_lambda,
            chi_lambda2: -self.chi_lambda2,
            chi_delta: -self.chi_delta,
            delta_parts: self
                .delta_parts
                .map(|p| p.into_iter().map(|(i, v)| (i, -v)).collect()),
        }
    }
}

// Sums and differences drop the delta breakdown: boundary indices of the
// summands need not refer to the same curve.
impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        Character::from_lambda_delta(
            &self.chi_lambda + &rhs.chi_lambda,
            &self.chi_delta + &rhs.chi_delta,
        )
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        Character::from_lambda_delta(
            &self.chi_lambda - &rhs.chi_lambda,
            &self.chi_delta - &rhs.chi_delta,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaResult {
    Value(Rational),
    /// `chi_1 = chi_2 = 0`: the subgroup acts trivially and no alpha is forced.
    TrivialCharacter,
}

impl AlphaResult {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            AlphaResult::Value(v) => Some(v),
            AlphaResult::TrivialCharacter => None,
        }
    }
}

/// `alpha = (13 chi_1 - 2 chi_2) / (13 chi_1 - chi_2)`.
pub fn alpha_value(c: &Character) -> Result<AlphaResult> {
    if c.is_trivial() {
        return Ok(AlphaResult::TrivialCharacter);
    }
    let thirteen = BigInt::from(13);
    let num = &thirteen * &c.chi_lambda - BigInt::from(2) * &c.chi_lambda2;
    let den = &thirteen * &c.chi_lambda - &c.chi_lambda2;
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    Ok(AlphaResult::Value(Rational::new(num, den)?))
}

/// `chi_delta / chi_lambda`.
pub fn slope(c: &Character) -> Result<Rational> {
    if c.chi_lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    Rational::new(c.chi_delta.clone(), c.chi_lambda.clone())
}

/// `2 - 13 chi_lambda / chi_delta`.
pub fn alpha_from_lambda_delta(chi_lambda: &BigInt, chi_delta: &BigInt) -> Result<Rational> {
    if chi_delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let ratio = Rational::new(BigInt::from(13) * chi_lambda, chi_delta.clone())?;
    Ok(Rational::from(2) - ratio)
}

/// Inverse of `slope = 13 / (2 - alpha)`.
pub fn alpha_from_slope(slope: &Rational) -> Result<Rational> {
    Ok(Rational::from(2) - Rational::from(13).checked_div(slope)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn alpha_examples() {
        let a2 = Character::from_lambdas(1, 2);
        assert_eq!(alpha_value(&a2).unwrap(), AlphaResult::Value(q(9, 11)));
        let e8 = Character::from_lambdas(14, 63);
        assert_eq!(alpha_value(&e8).unwrap(), AlphaResult::Value(q(8, 17)));
        let trivial = Character::from_lambdas(0, 0);
        assert_eq!(alpha_value(&trivial).unwrap(), AlphaResult::TrivialCharacter);
    }

    #[test]
    fn degenerate_alpha() {
        let c = Character::from_lambda_delta(1, 0);
        assert_eq!(alpha_value(&c), Err(Error::DegenerateDenominator));
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope(&Character::from_lambda_delta(8, 71)).unwrap(), q(71, 8));
        assert_eq!(slope(&Character::from_lambda_delta(1, 11)).unwrap(), q(11, 1));
        // genus 4 ribbon, l = 1
        assert_eq!(slope(&Character::from_lambda_delta(-2, -18)).unwrap(), q(9, 1));
        assert_eq!(slope(&Character::from_lambda_delta(0, 5)), Err(Error::ZeroLambda));
    }

    #[test]
    fn alpha_from_lambda_delta_examples() {
        let f = |l: i64, d: i64| alpha_from_lambda_delta(&l.into(), &d.into()).unwrap();
        assert_eq!(f(4, 39), q(2, 3));
        assert_eq!(f(1, 13), q(1, 1));
        assert_eq!(f(7, 57), q(23, 57));
        assert_eq!(
            alpha_from_lambda_delta(&1.into(), &0.into()),
            Err(Error::ZeroDelta)
        );
    }

    #[test]
    fn chi_k_and_parts() {
        let c = Character::from_lambda_delta(4, 39);
        assert_eq!(c.chi_k(), BigInt::from(-26));
        let parts = BTreeMap::from([(0, BigInt::from(30)), (2, BigInt::from(-1)), (3, BigInt::from(-1))]);
        let c = Character::from_lambda_delta(3, 28).with_delta_parts(parts.clone()).unwrap();
        assert_eq!(c.delta_parts(), Some(&parts));
        assert!(Character::from_lambda_delta(3, 29).with_delta_parts(parts).is_err());
    }

    proptest! {
        #[test]
        fn relations_hold(l in -1000i64..1000, d in -1000i64..1000) {
            let c = Character::from_lambda_delta(l, d);
            prop_assert_eq!(c.chi_delta(), &(BigInt::from(13) * c.chi_lambda() - c.chi_lambda2()));
            prop_assert_eq!(c.chi_k(), BigInt::from(13 * l - 2 * d));
        }

        #[test]
        fn two_alpha_routes_agree(l in -1000i64..1000, d in -1000i64..1000) {
            prop_assume!(d != 0);
            let c = Character::from_lambda_delta(l, d);
            let a = alpha_value(&c).unwrap();
            let b = alpha_from_lambda_delta(c.chi_lambda(), c.chi_delta()).unwrap();
            prop_assert_eq!(a.value(), Some(&b));
        }

        #[test]
        fn alpha_invariant_under_negation(l in -1000i64..1000, d in -1000i64..1000) {
            prop_assume!(d != 0);
            let c = Character::from_lambda_delta(l, d);
            prop_assert_eq!(alpha_value(&c).unwrap(), alpha_value(&-c.clone()).unwrap());
            prop_assert!(c.normalized().chi_lambda() >= &BigInt::zero());
        }

        #[test]
        fn slope_alpha_relation(l in 1i64..1000, d in -1000i64..1000) {
            prop_assume!(d != 0);
            let c = Character::from_lambda_delta(l, d);
            let s = slope(&c).unwrap();
            let a = alpha_value(&c).unwrap();
            prop_assert_eq!(alpha_from_slope(&s).unwrap(), a.value().unwrap().clone());
        }
    }
}
