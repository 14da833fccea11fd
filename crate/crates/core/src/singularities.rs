//! Model catalog and character engine for the singularity families.
//!
//! Every model stores a discriminant weight and one node weight per branch.
//! The delta-character of a curve obtained by gluing the branches in a subset
//! `S` to the rest of the curve is the discriminant weight minus the node
//! weights of `S`; lambda does not depend on `S`. Dangling variants are
//! therefore derived, never tabulated.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::character::Character;
use crate::discriminant::{chi_delta0_from_model, disc_weighted_degree, toric_disc_weight};
use crate::error::{Error, Result};
use crate::intersection::family_toric;
use crate::rational::Rational;
use crate::semigroup::{gaps_two_generated, is_symmetric, sum_of_gaps_closed_form, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Family {
    /// `y^2 = x^{2k+1}`
    AEven { k: u64 },
    /// `y^2 = x^{2k+2}`
    AOdd { k: u64 },
    /// `x(y^2 - x^{2k-1})`
    DOdd { k: u64 },
    /// `x(y^2 - x^{2k})`
    DEven { k: u64 },
    E6,
    E7,
    E8,
    /// `x^{pb} = y^{qb}`, `b` branches.
    Toric { p: u64, q: u64, b: u64 },
    Unibranch { semigroup: NumericalSemigroup },
    EllipticMFold { m: u64 },
    Ribbon { g: u64, ell: u64 },
    ChainOddOdd { i: u64, j: u64 },
    ChainOddEven { i: u64, j: u64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::AEven { k } => write!(f, "A_even(k={k})"),
            Family::AOdd { k } => write!(f, "A_odd(k={k})"),
            Family::DOdd { k } => write!(f, "D_odd(k={k})"),
            Family::DEven { k } => write!(f, "D_even(k={k})"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
            Family::Toric { p, q, b } => write!(f, "Toric(p={p},q={q},b={b})"),
            Family::Unibranch { semigroup } => {
                let gaps: Vec<String> = semigroup.gaps().iter().map(u64::to_string).collect();
                write!(f, "Unibranch(gaps={})", gaps.join(","))
            }
            Family::EllipticMFold { m } => write!(f, "EllipticMFold(m={m})"),
            Family::Ribbon { g, ell } => write!(f, "Ribbon(g={g},l={ell})"),
            Family::ChainOddOdd { i, j } => write!(f, "ChainOddOdd(i={i},j={j})"),
            Family::ChainOddEven { i, j } => write!(f, "ChainOddEven(i={i},j={j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub label: String,
    /// Weight of the node parameter when this branch is glued on.
    #[serde(serialize_with = "crate::serde_big::big")]
    pub node_weight: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityModel {
    family: Family,
    branches: Vec<Branch>,
    #[serde(serialize_with = "crate::serde_big::opt_big")]
    singular_delta_weight: Option<BigInt>,
}

fn branch(label: &str, w: impl Into<BigInt>) -> Branch {
    Branch {
        label: label.to_string(),
        node_weight: w.into(),
    }
}

fn unit_branches(n: u64) -> Vec<Branch> {
    (1..=n).map(|i| branch(&i.to_string(), 1)).collect()
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(msg()))
    }
}

impl SingularityModel {
    pub fn new(family: Family) -> Result<Self> {
        let (branches, delta): (Vec<Branch>, Option<BigInt>) = match &family {
            Family::AEven { k } => {
                need(*k >= 1, || format!("A_even needs k >= 1, got {k}"))?;
                let n = u32::try_from(2 * k + 1).map_err(|_| Error::OutOfRange("k too large".into()))?;
                (unit_branches(1), Some(big(disc_weighted_degree(n, 2))))
            }
            Family::AOdd { k } => {
                need(*k >= 1, || format!("A_odd needs k >= 1, got {k}"))?;
                let k = big(*k);
                let d = (2 * &k + 1) * (2 * &k + 2);
                (unit_branches(2), Some(d))
            }
            Family::DOdd { k } => {
                need(*k >= 1, || format!("D_odd needs k >= 1, got {k}"))?;
                // x weight 2, y weight 2k-1; Milnor number 2k+1, degree 4k
                let kk = big(*k);
                let d = (2 * &kk + 1) * (4 * &kk);
                (
                    vec![branch("1", 2 * &kk - 1), branch("2", 1)],
                    Some(d),
                )
            }
            Family::DEven { k } => {
                need(*k >= 1, || format!("D_even needs k >= 1, got {k}"))?;
                let kk = big(*k);
                let d = (2 * &kk + 1) * (2 * &kk + 2);
                (
                    vec![branch("1", kk), branch("2", 1), branch("3", 1)],
                    Some(d),
                )
            }
            Family::E6 => (unit_branches(1), Some(toric_disc_weight(4, 3, 1))),
            Family::E7 => {
                // y(y^2 - x^3): x weight 2, y weight 3, degree 9, Milnor number 7
                (vec![branch("1", 2), branch("2", 1)], Some(big(63)))
            }
            Family::E8 => (unit_branches(1), Some(toric_disc_weight(5, 3, 1))),
            Family::Toric { p, q, b } => {
                check_toric(*p, *q, *b)?;
                (unit_branches(*b), Some(toric_disc_weight(*p, *q, *b)))
            }
            Family::Unibranch { semigroup } => {
                if !is_symmetric(semigroup) {
                    return Err(Error::AsymmetricGaps);
                }
                let k = big(semigroup.genus());
                let sq = (2 * &k - 1) * (2 * &k - 1);
                let d = 12 * semigroup.gap_sum() - sq + 1;
                (unit_branches(1), Some(d))
            }
            Family::EllipticMFold { m } => {
                need(*m >= 3, || format!("elliptic m-fold point needs m >= 3, got {m}"))?;
                (unit_branches(*m), None)
            }
            Family::Ribbon { g, ell } => {
                check_ribbon(*g, *ell)?;
                (Vec::new(), None)
            }
            Family::ChainOddOdd { i, j } | Family::ChainOddEven { i, j } => {
                need(*i >= 1 && j > i, || format!("chains need j > i >= 1, got i={i}, j={j}"))?;
                (Vec::new(), None)
            }
        };
        Ok(SingularityModel {
            family,
            branches,
            singular_delta_weight: delta,
        })
    }

    pub fn a_even(k: u64) -> Result<Self> {
        Self::new(Family::AEven { k })
    }
    pub fn a_odd(k: u64) -> Result<Self> {
        Self::new(Family::AOdd { k })
    }
    pub fn d_odd(k: u64) -> Result<Self> {
        Self::new(Family::DOdd { k })
    }
    pub fn d_even(k: u64) -> Result<Self> {
        Self::new(Family::DEven { k })
    }
    pub fn e6() -> Self {
        Self::new(Family::E6).expect("E6 is always valid")
    }
    pub fn e7() -> Self {
        Self::new(Family::E7).expect("E7 is always valid")
    }
    pub fn e8() -> Self {
        Self::new(Family::E8).expect("E8 is always valid")
    }
    pub fn toric(p: u64, q: u64, b: u64) -> Result<Self> {
        Self::new(Family::Toric { p, q, b })
    }
    pub fn unibranch(semigroup: NumericalSemigroup) -> Result<Self> {
        Self::new(Family::Unibranch { semigroup })
    }
    pub fn elliptic_m_fold(m: u64) -> Result<Self> {
        Self::new(Family::EllipticMFold { m })
    }
    pub fn ribbon(g: u64, ell: u64) -> Result<Self> {
        Self::new(Family::Ribbon { g, ell })
    }
    pub fn chain_odd_odd(i: u64, j: u64) -> Result<Self> {
        Self::new(Family::ChainOddOdd { i, j })
    }
    pub fn chain_odd_even(i: u64, j: u64) -> Result<Self> {
        Self::new(Family::ChainOddEven { i, j })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    pub fn singular_delta_weight(&self) -> Option<&BigInt> {
        self.singular_delta_weight.as_ref()
    }

    /// Gap set of the singularity when it is unibranch and monomial.
    pub fn semigroup(&self) -> Option<NumericalSemigroup> {
        match &self.family {
            Family::AEven { k } => gaps_two_generated(2, 2 * k + 1).ok(),
            Family::E6 => gaps_two_generated(3, 4).ok(),
            Family::E8 => gaps_two_generated(3, 5).ok(),
            Family::Toric { p, q, b: 1 } => gaps_two_generated(*p, *q).ok(),
            Family::Unibranch { semigroup } => Some(semigroup.clone()),
            _ => None,
        }
    }
}

fn check_toric(p: u64, q: u64, b: u64) -> Result<()> {
    need(p >= 1 && q >= 1 && b >= 1, || format!("toric exponents must be positive, got ({p}, {q}, {b})"))?;
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    if b == 1 {
        need(p >= 2 && q >= 2, || format!("x^{p} = y^{q} is smooth"))?;
    }
    Ok(())
}

fn check_ribbon(g: u64, ell: u64) -> Result<()> {
    need(g >= 3, || format!("ribbons need g >= 3, got {g}"))?;
    need(ell >= 1 && ell + 2 <= g, || format!("l must lie in [1, {}], got {ell}", g - 2))
}

/// Which branches are glued to the rest of the curve.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct AttachmentConfig {
    /// `None` attaches every branch.
    attached: Option<BTreeSet<usize>>,
    /// Branch index -> genus `h` of the component it is glued to, for
    /// separating attachments.
    separating: Option<BTreeMap<usize, u32>>,
}

impl AttachmentConfig {
    pub fn full() -> Self {
        AttachmentConfig::default()
    }

    pub fn isolated() -> Self {
        AttachmentConfig {
            attached: Some(BTreeSet::new()),
            separating: None,
        }
    }

    pub fn subset(branches: impl IntoIterator<Item = usize>) -> Self {
        AttachmentConfig {
            attached: Some(branches.into_iter().collect()),
            separating: None,
        }
    }

    pub fn with_separating(mut self, data: BTreeMap<usize, u32>) -> Self {
        self.separating = Some(data);
        self
    }

    pub fn separating_data(&self) -> Option<&BTreeMap<usize, u32>> {
        self.separating.as_ref()
    }

    /// Attached indices (1-based) for a model with `n` branches.
    pub fn resolve(&self, n: usize) -> Result<Vec<usize>> {
        let set: Vec<usize> = match &self.attached {
            None => (1..=n).collect(),
            Some(s) => s.iter().copied().collect(),
        };
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidSubset(format!(
                "branch {bad} does not exist (model has {n} branches)"
            )));
        }
        if let Some(sep) = &self.separating {
            for (&i, &h) in sep {
                if !set.contains(&i) {
                    return Err(Error::InvalidSubset(format!(
                        "separating data names branch {i}, which is not attached"
                    )));
                }
                if h == 0 {
                    return Err(Error::InvalidSubset("separating genus must be >= 1".into()));
                }
            }
        }
        Ok(set)
    }

    pub fn is_full(&self, n: usize) -> bool {
        match &self.attached {
            None => true,
            Some(s) => s.len() == n && s.iter().all(|&i| (1..=n).contains(&i)),
        }
    }

    pub fn describe(&self, n: usize) -> String {
        let set = self.resolve(n).unwrap_or_default();
        let items: Vec<String> = set.iter().map(usize::to_string).collect();
        format!("{{{}}}", items.join(","))
    }
}

/// `chi_1 = sum b_i`, `chi_2 = (2k-1)^2 + sum b_i - 1` for the isolated
/// curve, one more when the branch is attached.
pub fn chi_unibranch(s: &NumericalSemigroup, attached: bool) -> Result<Character> {
    if !is_symmetric(s) {
        return Err(Error::AsymmetricGaps);
    }
    let k = big(s.genus());
    let sum = s.gap_sum();
    let mut chi2 = (2 * &k - 1) * (2 * &k - 1) + &sum;
    if !attached {
        chi2 -= 1;
    }
    Ok(Character::from_lambdas(sum, chi2))
}

fn ribbon_c_twice(g: u64, ell: u64) -> BigInt {
    // 2c = 2l - (g - 1)
    BigInt::from(2 * ell) - BigInt::from(g - 1)
}

/// Characters of the ribbon `C_l`, by summing the weights of the bases of
/// `H^0(omega)` and `H^0(omega^2)`. Values are not sign-normalized.
pub fn chi_ribbon(g: u64, ell: u64) -> Result<Character> {
    check_ribbon(g, ell)?;
    let (gi, li) = (g as i128, ell as i128);
    let chi1: i128 = (0..gi).map(|k| k - gi + li + 1).sum();
    let chi2 = ribbon_lambda2_enumerated(g, ell);
    let two_c = ribbon_c_twice(g, ell);
    // g * c and (8g+4) * c as exact rationals; both are integers.
    let lambda_closed = BigInt::from(g) * &two_c / 2;
    let delta_closed = BigInt::from(8 * g + 4) * &two_c / 2;
    let lambda2_closed = BigInt::from(5 * g - 4) * &two_c / 2;
    debug_assert_eq!(BigInt::from(chi1), lambda_closed);
    debug_assert_eq!(chi2, lambda2_closed);
    let c = Character::from_lambdas(chi1, chi2);
    if c.chi_delta() != &delta_closed {
        return Err(Error::InvalidCharacter(format!(
            "ribbon ({g}, {ell}): chi_delta {} but closed form {delta_closed}",
            c.chi_delta()
        )));
    }
    Ok(c)
}

fn ribbon_lambda2_enumerated(g: u64, ell: u64) -> BigInt {
    let (gi, li) = (g as i128, ell as i128);
    let first: i128 = (0..=2 * gi - 2).map(|t| 2 * li - t).sum();
    let second: i128 = (1..=gi - 2).map(|t| li - t).sum();
    BigInt::from(first + second)
}

/// `(1, m+1, 12-m)`, the elliptic `m`-fold point with every branch attached.
pub fn chi_elliptic_mfold(m: u64) -> Result<Character> {
    need(m >= 3, || format!("elliptic m-fold point needs m >= 3, got {m}"))?;
    Ok(Character::from_lambdas(1, big(m) + 1))
}

/// `chi_lambda` of a catalogued model; independent of the attachment.
pub fn chi_lambda(model: &SingularityModel) -> Result<BigInt> {
    Ok(match model.family() {
        Family::AEven { k } => big(*k) * big(*k),
        Family::AOdd { k } | Family::DEven { k } => big(*k) * big(k + 1) / 2,
        Family::DOdd { k } => big(*k) * big(*k),
        Family::E6 => big(8),
        Family::E7 => big(7),
        Family::E8 => big(14),
        Family::Toric { p, q, b: 1 } => sum_of_gaps_closed_form(*p, *q)?,
        Family::Toric { p, q, b } => {
            let fi = family_toric(*p, *q, *b)?;
            fi.lambda.to_integer().ok_or_else(|| {
                Error::InvalidCharacter(format!("lambda.Z = {} is not integral", fi.lambda))
            })?
        }
        Family::Unibranch { semigroup } => semigroup.gap_sum(),
        Family::EllipticMFold { .. } => BigInt::one(),
        Family::Ribbon { g, ell } => chi_ribbon(*g, *ell)?.chi_lambda().clone(),
        Family::ChainOddOdd { .. } | Family::ChainOddEven { .. } => {
            chi_family(model, &AttachmentConfig::full())?.chi_lambda().clone()
        }
    })
}

/// Character of a model glued along the branches in `attach`.
pub fn chi_family(model: &SingularityModel, attach: &AttachmentConfig) -> Result<Character> {
    let n = model.branch_count();
    let attached = attach.resolve(n)?;
    match model.family() {
        Family::Ribbon { g, ell } => return chi_ribbon(*g, *ell),
        Family::ChainOddOdd { i, j } => return chi_chain(ChainVariant::OddOdd, *i, *j),
        Family::ChainOddEven { i, j } => return chi_chain(ChainVariant::OddEven, *i, *j),
        Family::EllipticMFold { m } => {
            if !attach.is_full(n) || attach.separating_data().is_some() {
                return Err(Error::MissingClosedForm(format!(
                    "{} with attachment {}",
                    model.family(),
                    attach.describe(n)
                )));
            }
            return chi_elliptic_mfold(*m);
        }
        _ => {}
    }
    let lambda = chi_lambda(model)?;
    let delta = chi_delta0_from_model(model, attach)?;
    let c = Character::from_lambda_delta(lambda, delta);
    match attach.separating_data() {
        None => Ok(c),
        Some(sep) => {
            let w = |i: usize| model.branches()[i - 1].node_weight.clone();
            let disc = model.singular_delta_weight().cloned().unwrap_or_default();
            let mut parts: BTreeMap<u32, BigInt> = BTreeMap::new();
            let nonsep: BigInt = attached.iter().filter(|i| !sep.contains_key(i)).map(|&i| w(i)).sum();
            parts.insert(0, disc - nonsep);
            for (&i, &h) in sep {
                *parts.entry(h).or_insert_with(BigInt::zero) -= w(i);
            }
            c.with_delta_parts(parts)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainVariant {
    /// `A_{2i+1/2j+1}`
    OddOdd,
    /// `A_{2i+1/2j}`
    OddEven,
}

/// A dangling chain: the outer singularity isolated, minus the inner
/// `A_{2i+1}` glued along one branch. The inner link is seen by the torus
/// with the opposite orientation, hence the subtraction.
pub fn chi_chain(variant: ChainVariant, i: u64, j: u64) -> Result<Character> {
    need(i >= 1 && j > i, || format!("chains need j > i >= 1, got i={i}, j={j}"))?;
    let outer = match variant {
        ChainVariant::OddOdd => SingularityModel::a_odd(j)?,
        ChainVariant::OddEven => SingularityModel::a_even(j)?,
    };
    let inner = SingularityModel::a_odd(i)?;
    let outer = chi_family(&outer, &AttachmentConfig::isolated())?;
    let inner = chi_family(&inner, &AttachmentConfig::subset([1]))?;
    Ok(&outer - &inner)
}

/// `chi_2` of the fully attached model from an explicit basis of
/// quadratic differentials.
pub fn chi_lambda2_direct(model: &SingularityModel) -> Result<BigInt> {
    match model.family() {
        Family::AEven { k } => {
            let k = *k as i128;
            let a: i128 = (0..k).map(|i| 2 * k + 2 * i).sum();
            let b: i128 = (0..=2 * k - 2).sum();
            Ok(BigInt::from(a + b))
        }
        Family::DEven { k } => {
            let k = *k as i128;
            let a: i128 = (0..=2 * k).sum();
            let b: i128 = (0..=k).sum();
            Ok(BigInt::from(a + b))
        }
        Family::Unibranch { semigroup } => {
            // Gluing the branch raises chi_2 by its node weight.
            Ok(chi_lambda2_isolated_unibranch(semigroup)? + BigInt::one())
        }
        Family::Ribbon { g, ell } => Ok(ribbon_lambda2_enumerated(*g, *ell)),
        other => Err(Error::MissingClosedForm(format!("quadratic differential basis of {other}"))),
    }
}

/// `chi_2` of the isolated genus-`k` curve with one monomial unibranch
/// point: the sections `t^a dt^2 / t^{4k}` with `a` in the semigroup and
/// `a <= 4k - 4` have weights `4k - 2 - a`.
///
/// Needs `k >= 2`; in genus one there are no such sections.
pub fn chi_lambda2_isolated_unibranch(s: &NumericalSemigroup) -> Result<BigInt> {
    if !is_symmetric(s) {
        return Err(Error::AsymmetricGaps);
    }
    let k = s.genus();
    need(k >= 2, || format!("the differential basis needs genus >= 2, got {k}"))?;
    let top = 4 * k - 4;
    Ok((0..=top)
        .filter(|&a| s.contains(a))
        .map(|a| BigInt::from(4 * k - 2 - a))
        .sum())
}

/// `12(2g+n-1)n / (n^2 + (4g-3)n + 2 - 2g)`, the slope of `n`-ribbons.
pub fn n_ribbon_delta_ratio(g: u64, n: u64) -> Result<Rational> {
    need(n >= 2, || format!("n must be >= 2, got {n}"))?;
    need(g >= 1, || format!("g must be >= 1, got {g}"))?;
    if !(2 * g).is_multiple_of(n - 1) {
        return Err(Error::DivisibilityViolation {
            n_minus_1: n - 1,
            two_g: 2 * g,
        });
    }
    let (g, n) = (BigInt::from(g), BigInt::from(n));
    let num = 12 * (2 * &g + &n - 1) * &n;
    let den = &n * &n + (4 * &g - 3) * &n + 2 - 2 * &g;
    Rational::new(num, den)
}

/// Both sides of the comparison between the `n`-ribbon ratio and the
/// toric singularity `y^n = x^q`, `q = 2g/(n-1) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NRibbonComparison {
    pub g: u64,
    pub n: u64,
    pub ratio: Rational,
    pub q: u64,
    /// Slopes of the unibranch curve with the branch glued on and isolated;
    /// absent when `gcd(n, q) > 1`.
    pub attached_slope: Option<Rational>,
    pub isolated_slope: Option<Rational>,
}

impl NRibbonComparison {
    /// `Some(true)` when the ratio equals the isolated toric slope.
    pub fn matches_isolated(&self) -> Option<bool> {
        self.isolated_slope.as_ref().map(|s| s == &self.ratio)
    }
}

pub fn compare_n_ribbon_to_toric(g: u64, n: u64) -> Result<NRibbonComparison> {
    let ratio = n_ribbon_delta_ratio(g, n)?;
    let q = 2 * g / (n - 1) + 1;
    let (attached_slope, isolated_slope) = if n.gcd(&q) == 1 {
        let s = gaps_two_generated(n, q)?;
        (
            Some(chi_unibranch(&s, true)?.slope()?),
            Some(chi_unibranch(&s, false)?.slope()?),
        )
    } else {
        (None, None)
    };
    Ok(NRibbonComparison {
        g,
        n,
        ratio,
        q,
        attached_slope,
        isolated_slope,
    })
}

/// Parameters for building a model from a family tag, as used by the
/// command line and the table fixtures.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModelParams {
    pub k: Option<u64>,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub b: Option<u64>,
    pub g: Option<u64>,
    pub l: Option<u64>,
    pub m: Option<u64>,
    pub i: Option<u64>,
    pub j: Option<u64>,
    pub gaps: Option<Vec<u64>>,
}

pub const FAMILY_TAGS: &[&str] = &[
    "A_even",
    "A_odd",
    "D_odd",
    "D_even",
    "E6",
    "E7",
    "E8",
    "toric",
    "unibranch",
    "elliptic",
    "ribbon",
    "chain_odd_odd",
    "chain_odd_even",
];

fn param(v: Option<u64>, name: &str, tag: &str) -> Result<u64> {
    v.ok_or_else(|| Error::OutOfRange(format!("family {tag} needs parameter {name}")))
}

pub fn model_from_tag(tag: &str, params: &ModelParams) -> Result<SingularityModel> {
    let k = || param(params.k, "k", tag);
    match tag {
        "A_even" => SingularityModel::a_even(k()?),
        "A_odd" => SingularityModel::a_odd(k()?),
        "D_odd" => SingularityModel::d_odd(k()?),
        "D_even" => SingularityModel::d_even(k()?),
        "E6" => Ok(SingularityModel::e6()),
        "E7" => Ok(SingularityModel::e7()),
        "E8" => Ok(SingularityModel::e8()),
        "toric" => SingularityModel::toric(
            param(params.p, "p", tag)?,
            param(params.q, "q", tag)?,
            params.b.unwrap_or(1),
        ),
        "unibranch" => {
            let s = match (&params.gaps, params.p, params.q) {
                (Some(g), _, _) => NumericalSemigroup::from_gaps(g.clone())?,
                (None, Some(p), Some(q)) => gaps_two_generated(p, q)?,
                _ => return Err(Error::OutOfRange("unibranch needs gaps or p and q".into())),
            };
            SingularityModel::unibranch(s)
        }
        "elliptic" => SingularityModel::elliptic_m_fold(param(params.m, "m", tag)?),
        "ribbon" => SingularityModel::ribbon(param(params.g, "g", tag)?, param(params.l, "l", tag)?),
        "chain_odd_odd" => {
            SingularityModel::chain_odd_odd(param(params.i, "i", tag)?, param(params.j, "j", tag)?)
        }
        "chain_odd_even" => {
            SingularityModel::chain_odd_even(param(params.i, "i", tag)?, param(params.j, "j", tag)?)
        }
        other => Err(Error::OutOfRange(format!(
            "unknown family {other:?}; expected one of {}",
            FAMILY_TAGS.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::AlphaResult;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn triple(c: &Character) -> (i64, i64, i64) {
        let f = |b: &BigInt| i64::try_from(b).unwrap();
        (f(c.chi_lambda()), f(c.chi_lambda2()), f(c.chi_delta()))
    }

    fn alpha(c: &Character) -> Rational {
        c.alpha().unwrap().value().unwrap().clone()
    }

    #[test]
    fn unibranch_examples() {
        let e6 = gaps_two_generated(3, 4).unwrap();
        assert_eq!(triple(&chi_unibranch(&e6, true).unwrap()), (8, 33, 71));
        let a2 = NumericalSemigroup::from_gaps(vec![1]).unwrap();
        assert_eq!(triple(&chi_unibranch(&a2, true).unwrap()), (1, 2, 11));
        let e8 = gaps_two_generated(3, 5).unwrap();
        assert_eq!(chi_unibranch(&e8, false).unwrap().chi_lambda2(), &BigInt::from(62));
        let asym = NumericalSemigroup::from_gaps(vec![1, 2]).unwrap();
        assert_eq!(chi_unibranch(&asym, true), Err(Error::AsymmetricGaps));
        assert_eq!(
            SingularityModel::unibranch(asym).unwrap_err(),
            Error::AsymmetricGaps
        );
    }

    #[test]
    fn ribbon_examples() {
        assert!(chi_ribbon(3, 1).unwrap().is_trivial());
        let c = chi_ribbon(4, 1).unwrap();
        assert_eq!(triple(&c), (-2, -8, -18));
        assert_eq!(c.slope().unwrap(), q(9, 1));
        let c = chi_ribbon(5, 3).unwrap();
        assert_eq!((triple(&c).0, triple(&c).2), (5, 44));
        assert_eq!(c.slope().unwrap(), q(44, 5));
        assert!(matches!(chi_ribbon(5, 4), Err(Error::OutOfRange(_))));
        assert!(matches!(chi_ribbon(5, 0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn n_ribbon_examples() {
        assert_eq!(n_ribbon_delta_ratio(5, 2).unwrap(), q(44, 5));
        assert_eq!(n_ribbon_delta_ratio(4, 3).unwrap(), q(36 * 5, 21));
        assert_eq!(n_ribbon_delta_ratio(3, 4).unwrap(), q(9, 1));
        assert_eq!(
            n_ribbon_delta_ratio(3, 5),
            Err(Error::DivisibilityViolation { n_minus_1: 4, two_g: 6 })
        );
        let cmp = compare_n_ribbon_to_toric(3, 4).unwrap();
        assert_eq!(cmp.q, 3);
        assert_eq!(cmp.attached_slope, Some(q(71, 8)));
        assert_eq!(cmp.isolated_slope, Some(q(9, 1)));
        assert_eq!(cmp.matches_isolated(), Some(true));
    }

    #[test]
    fn elliptic_examples() {
        assert_eq!(alpha(&chi_elliptic_mfold(3).unwrap()), q(5, 9));
        assert_eq!(alpha(&chi_elliptic_mfold(4).unwrap()), q(3, 8));
        assert_eq!(alpha(&chi_elliptic_mfold(11).unwrap()), q(-11, 1));
        assert!(chi_elliptic_mfold(2).is_err());
        let m = SingularityModel::elliptic_m_fold(3).unwrap();
        let d4 = SingularityModel::d_even(1).unwrap();
        assert_eq!(
            chi_family(&m, &AttachmentConfig::full()).unwrap(),
            chi_family(&d4, &AttachmentConfig::full()).unwrap()
        );
        assert!(matches!(
            chi_family(&m, &AttachmentConfig::subset([1])),
            Err(Error::MissingClosedForm(_))
        ));
    }

    #[test]
    fn family_examples() {
        let a5 = SingularityModel::a_odd(2).unwrap();
        let c = chi_family(&a5, &AttachmentConfig::subset([1, 2])).unwrap();
        assert_eq!(triple(&c), (3, 11, 28));
        assert_eq!(alpha(&c), q(17, 28));
        let c = chi_family(&a5, &AttachmentConfig::subset([1])).unwrap();
        assert_eq!(triple(&c).2, 29);
        assert_eq!(alpha(&c), q(19, 29));
        let d6 = SingularityModel::d_even(2).unwrap();
        let c = chi_family(&d6, &AttachmentConfig::full()).unwrap();
        assert_eq!((triple(&c).0, triple(&c).2), (3, 26));
        assert_eq!(alpha(&c), q(1, 2));
        let c = chi_family(&SingularityModel::e7(), &AttachmentConfig::subset([1])).unwrap();
        assert_eq!(triple(&c), (7, 30, 61));
        assert_eq!(alpha(&c), q(31, 61));
        assert!(matches!(
            chi_family(&a5, &AttachmentConfig::subset([3])),
            Err(Error::InvalidSubset(_))
        ));
    }

    #[test]
    fn separating_parts() {
        let k = 3u64;
        let m = SingularityModel::a_odd(k).unwrap();
        let attach = AttachmentConfig::full().with_separating(BTreeMap::from([(1, 2), (2, 5)]));
        let c = chi_family(&m, &attach).unwrap();
        let parts = c.delta_parts().unwrap();
        assert_eq!(parts[&0], BigInt::from((2 * k + 1) * (2 * k + 2)));
        assert_eq!(parts[&2], BigInt::from(-1));
        assert_eq!(parts[&5], BigInt::from(-1));
        assert_eq!(c.chi_delta(), &BigInt::from(4 * k * k + 6 * k));
    }

    #[test]
    fn chain_examples() {
        let c = chi_chain(ChainVariant::OddEven, 1, 2).unwrap();
        assert_eq!((triple(&c).0, triple(&c).2), (3, 29));
        assert_eq!(alpha(&c), q(19, 29));
        let c = chi_chain(ChainVariant::OddOdd, 1, 2).unwrap();
        assert_eq!((triple(&c).0, triple(&c).2), (2, 19));
        assert_eq!(alpha(&c), q(12, 19));
        let c = chi_chain(ChainVariant::OddOdd, 2, 3).unwrap();
        assert_eq!((triple(&c).0, triple(&c).2), (3, 27));
        assert_eq!(alpha(&c), q(5, 9));
        assert!(chi_chain(ChainVariant::OddOdd, 2, 2).is_err());
        assert!(chi_chain(ChainVariant::OddOdd, 0, 2).is_err());
    }

    #[test]
    fn direct_lambda2_examples() {
        assert_eq!(chi_lambda2_direct(&SingularityModel::a_even(3).unwrap()).unwrap(), BigInt::from(34));
        assert_eq!(chi_lambda2_direct(&SingularityModel::d_even(1).unwrap()).unwrap(), BigInt::from(4));
        assert_eq!(chi_lambda2_direct(&SingularityModel::a_even(1).unwrap()).unwrap(), BigInt::from(2));
        assert!(matches!(
            chi_lambda2_direct(&SingularityModel::e7()),
            Err(Error::MissingClosedForm(_))
        ));
        // genus one has no differential basis of this shape
        let cusp = NumericalSemigroup::from_gaps(vec![1]).unwrap();
        assert!(chi_lambda2_isolated_unibranch(&cusp).is_err());
    }

    #[test]
    fn fixed_models() {
        let full = AttachmentConfig::full();
        let iso = AttachmentConfig::isolated();
        assert_eq!(triple(&chi_family(&SingularityModel::e6(), &full).unwrap()), (8, 33, 71));
        assert_eq!(triple(&chi_family(&SingularityModel::e7(), &full).unwrap()), (7, 31, 60));
        assert_eq!(triple(&chi_family(&SingularityModel::e8(), &full).unwrap()), (14, 63, 119));
        assert_eq!(triple(&chi_family(&SingularityModel::e6(), &iso).unwrap()), (8, 32, 72));
        assert_eq!(triple(&chi_family(&SingularityModel::e8(), &iso).unwrap()), (14, 62, 120));
        let t = |p, q, b| chi_family(&SingularityModel::toric(p, q, b).unwrap(), &full).unwrap();
        assert_eq!(triple(&t(2, 1, 3)), (7, 34, 57));
        assert_eq!(triple(&t(7, 3, 1)), (31, 152, 251));
        assert_eq!(triple(&t(8, 3, 1)), (42, 211, 335));
        assert_eq!(SingularityModel::toric(2, 4, 1), Err(Error::NotCoprime(2, 4)));
    }

    #[test]
    fn trivial_ribbon_alpha() {
        let c = chi_family(&SingularityModel::ribbon(5, 2).unwrap(), &AttachmentConfig::full()).unwrap();
        assert_eq!(c.alpha().unwrap(), AlphaResult::TrivialCharacter);
    }

    #[test]
    fn tags_round_trip() {
        let p = ModelParams {
            k: Some(2),
            ..Default::default()
        };
        for tag in ["A_even", "A_odd", "D_odd", "D_even"] {
            assert!(model_from_tag(tag, &p).is_ok(), "{tag}");
        }
        assert!(model_from_tag("A_even", &ModelParams::default()).is_err());
        assert!(model_from_tag("Z_9", &p).is_err());
    }

    fn all_subsets(n: usize) -> Vec<Vec<usize>> {
        (0u32..(1 << n))
            .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
            .collect()
    }

    fn branchy_model() -> impl Strategy<Value = SingularityModel> {
        prop_oneof![
            (1u64..40).prop_map(|k| SingularityModel::a_even(k).unwrap()),
            (1u64..40).prop_map(|k| SingularityModel::a_odd(k).unwrap()),
            (1u64..40).prop_map(|k| SingularityModel::d_odd(k).unwrap()),
            (1u64..40).prop_map(|k| SingularityModel::d_even(k).unwrap()),
            Just(SingularityModel::e6()),
            Just(SingularityModel::e7()),
            Just(SingularityModel::e8()),
            (1u64..6, 1u64..6, 2u64..5)
                .prop_filter("coprime", |(p, q, _)| p.gcd(q) == 1)
                .prop_map(|(p, q, b)| SingularityModel::toric(p, q, b).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn attachment_monotonicity(model in branchy_model()) {
            let n = model.branch_count();
            let subsets = all_subsets(n);
            let weight = |s: &[usize]| -> BigInt {
                s.iter().map(|&i| model.branches()[i - 1].node_weight.clone()).sum()
            };
            let full = chi_family(&model, &AttachmentConfig::full()).unwrap();
            prop_assert_eq!(
                full.chi_delta() + weight(&(1..=n).collect::<Vec<_>>()),
                model.singular_delta_weight().unwrap().clone()
            );
            for s in &subsets {
                for t in &subsets {
                    if !s.iter().all(|i| t.contains(i)) {
                        continue;
                    }
                    let cs = chi_family(&model, &AttachmentConfig::subset(s.clone())).unwrap();
                    let ct = chi_family(&model, &AttachmentConfig::subset(t.clone())).unwrap();
                    prop_assert_eq!(cs.chi_lambda(), ct.chi_lambda());
                    prop_assert_eq!(cs.chi_delta().clone(), ct.chi_delta() + weight(t) - weight(s));
                }
            }
        }

        #[test]
        fn dual_route_lambda2(k in 1u64..=25) {
            for model in [SingularityModel::a_even(k).unwrap(), SingularityModel::d_even(k).unwrap()] {
                let c = chi_family(&model, &AttachmentConfig::full()).unwrap();
                prop_assert_eq!(chi_lambda2_direct(&model).unwrap(), c.chi_lambda2().clone());
            }
        }

        #[test]
        fn unibranch_dual_route(p in 2u64..12, q in 2u64..12) {
            prop_assume!(p.gcd(&q) == 1 && (p - 1) * (q - 1) >= 4);
            let s = gaps_two_generated(p, q).unwrap();
            let model = SingularityModel::unibranch(s.clone()).unwrap();
            let c = chi_family(&model, &AttachmentConfig::full()).unwrap();
            prop_assert_eq!(chi_lambda2_direct(&model).unwrap(), c.chi_lambda2().clone());
            prop_assert_eq!(c, chi_unibranch(&s, true).unwrap());
        }

        #[test]
        fn ribbon_identity(g in 3u64..=40, seed in 0u64..1000) {
            let ell = 1 + seed % (g - 2);
            let c = chi_ribbon(g, ell).unwrap();
            let two_c = ribbon_c_twice(g, ell);
            prop_assert_eq!(ribbon_lambda2_enumerated(g, ell) * 2, BigInt::from(5 * g - 4) * &two_c);
            let zeros = [c.chi_lambda(), c.chi_lambda2(), c.chi_delta()]
                .iter()
                .filter(|v| v.is_zero())
                .count();
            prop_assert!(zeros == 0 || zeros == 3);
            prop_assert_eq!(zeros == 3, 2 * ell + 1 == g);
        }

        #[test]
        fn a_even_is_unibranch(k in 1u64..=25) {
            let gaps: Vec<u64> = (1..=k).map(|i| 2 * i - 1).collect();
            let s = NumericalSemigroup::from_gaps(gaps).unwrap();
            let c = chi_family(&SingularityModel::a_even(k).unwrap(), &AttachmentConfig::full()).unwrap();
            prop_assert_eq!(c, chi_unibranch(&s, true).unwrap());
        }

        #[test]
        fn n_ribbon_matches_isolated_toric(g in 1u64..60, n in 2u64..12) {
            prop_assume!((2 * g) % (n - 1) == 0);
            let cmp = compare_n_ribbon_to_toric(g, n).unwrap();
            if let Some(m) = cmp.matches_isolated() {
                prop_assert!(m, "{:?}", cmp);
            }
        }
    }
}
