//! Intersection numbers of explicit one-parameter families of stable pointed
//! curves, negativity thresholds for `K + alpha delta`, and the comparison
//! with characters: `chi_L = (L . B) / deg B`, after the marked sections are
//! glued to the rest of the curve.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::character::{alpha_from_lambda_delta, Character};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::singularities::{chi_family, AttachmentConfig, Family, SingularityModel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyIntersection {
    pub name: String,
    pub lambda: Rational,
    pub delta0: Rational,
    pub psi: Vec<Rational>,
    pub delta_higher: BTreeMap<u32, Rational>,
    pub deg_b: u32,
    /// `kappa . B` when known.
    pub kappa: Option<Rational>,
    /// Genus of the general fibre, when the family records it.
    pub genus: Option<Rational>,
}

impl FamilyIntersection {
    fn new(name: String, lambda: BigInt, delta0: BigInt, psi: Vec<BigInt>, deg_b: u32) -> Self {
        FamilyIntersection {
            name,
            lambda: lambda.into(),
            delta0: delta0.into(),
            psi: psi.into_iter().map(Rational::from).collect(),
            delta_higher: BTreeMap::new(),
            deg_b,
            kappa: None,
            genus: None,
        }
    }

    pub fn psi_total(&self) -> Rational {
        self.psi.iter().sum()
    }

    /// `delta_0 + sum delta_i - sum psi_i`: the boundary degree once a
    /// constant curve is glued at every marked section.
    pub fn effective_delta(&self) -> Rational {
        let higher: Rational = self.delta_higher.values().sum();
        &self.delta0 + higher - self.psi_total()
    }

    /// The family with every marked section forgotten.
    pub fn unpointed(mut self) -> Self {
        self.psi.clear();
        self.name.push_str(" (unpointed)");
        self
    }

    /// `12 lambda = kappa + delta`, checked when `kappa` is known.
    pub fn mumford_check(&self) -> Option<bool> {
        self.kappa
            .as_ref()
            .map(|kappa| Rational::from(12) * &self.lambda - self.effective_delta() == *kappa)
    }
}

fn need_k(k: u64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::OutOfRange("families need k >= 1".into()));
    }
    Ok(BigInt::from(k))
}

/// Hyperelliptic bridges of genus `k` glued at two conjugate points.
pub fn family_bk(k: u64) -> Result<FamilyIntersection> {
    let k = need_k(k)?;
    let lambda = (&k * &k + &k) / 2;
    let delta0 = (2 * &k + 1) * (2 * &k + 2);
    Ok(FamilyIntersection::new(
        format!("B_{k}"),
        lambda,
        delta0,
        vec![BigInt::from(1), BigInt::from(1)],
        1,
    ))
}

/// `B_k` with one section forgotten: hyperelliptic tails.
pub fn family_hk(k: u64) -> Result<FamilyIntersection> {
    let mut f = family_bk(k)?;
    f.psi.truncate(1);
    f.name = format!("H_{k}");
    Ok(f)
}

/// Hyperelliptic triboroughs; built over a double cover of the base.
pub fn family_trik(k: u64) -> Result<FamilyIntersection> {
    let k = need_k(k)?;
    let lambda = &k * &k + &k;
    let delta0 = 2 * (2 * &k + 1) * (2 * &k + 2);
    Ok(FamilyIntersection::new(
        format!("Tri_{k}"),
        lambda,
        delta0,
        vec![BigInt::from(2), BigInt::from(2), 2 * &k],
        2,
    ))
}

pub fn family_bhk(k: u64) -> Result<FamilyIntersection> {
    let k = need_k(k)?;
    let lambda = &k * &k + &k;
    let delta0 = 2 * (2 * &k + 1) * (2 * &k + 2);
    Ok(FamilyIntersection::new(
        format!("BH_{k}"),
        lambda,
        delta0,
        vec![BigInt::from(2), 2 * &k],
        2,
    ))
}

/// The family `Z` degenerating to `x^{pb} = y^{qb}`, with `b` sections of
/// total `psi`-degree `b`.
pub fn family_toric(p: u64, q: u64, b: u64) -> Result<FamilyIntersection> {
    if p == 0 || q == 0 || b == 0 {
        return Err(Error::OutOfRange(format!(
            "toric exponents must be positive, got ({p}, {q}, {b})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    if p * b < 2 && q * b < 2 {
        return Err(Error::OutOfRange(format!("x^{p} = y^{q} is smooth")));
    }
    let (pp, qq, bb) = (BigInt::from(p), BigInt::from(q), BigInt::from(b));
    let pqb = &pp * &qq * &bb;
    let e = &pqb - &pp - &qq;
    let s = &pqb * &bb - &pp * &bb - &qq * &bb + 1;
    let lambda = Rational::new(&bb * (&e * &e + &pp * &qq * &s - 1), 12)?;
    let delta0: BigInt = &pqb * &s;
    let kappa: BigInt = &bb * &e * &e;
    let genus = Rational::new(&pqb * &bb - &pp * &bb - &qq * &bb - &bb + 2, 2)?;
    Ok(FamilyIntersection {
        name: format!("Z({p},{q},{b})"),
        lambda,
        delta0: delta0.into(),
        psi: vec![bb.into()],
        delta_higher: BTreeMap::new(),
        deg_b: 1,
        kappa: Some(kappa.into()),
        genus: Some(genus),
    })
}

/// `(delta - psi) . Z / lambda . Z` and `delta . Z / lambda . Z` for `b = 1`.
pub fn toric_slopes(p: u64, q: u64) -> Result<(Rational, Rational)> {
    if p < 2 || q < 2 {
        return Err(Error::OutOfRange(format!("need p, q >= 2, got ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    let pq = &p * &q;
    let r = (&p - 1) * (&q - 1);
    let t = 2 * &pq - &p - &q - 1;
    let pointed = Rational::new(12 * (&pq * &r - 1), &r * &t)?;
    let unpointed = Rational::new(12 * &pq, t)?;
    Ok((pointed, unpointed))
}

/// Slope `36(g+1)/(5g+1)` of the curve `y^3 = x^{g+1}` family.
pub fn trigonal_slope(g: u64) -> Result<Rational> {
    if g % 3 == 2 {
        return Err(Error::WrongResidue(g));
    }
    if g < 3 {
        return Err(Error::OutOfRange(format!("need g >= 3, got {g}")));
    }
    Rational::new(36 * (g + 1), 5 * g + 1)
}

/// `alpha* = 2 - 13 (lambda . B) / (delta . B)` with the effective delta.
pub fn negativity_threshold(fi: &FamilyIntersection) -> Result<Rational> {
    let delta = fi.effective_delta();
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    Ok(Rational::from(2) - Rational::from(13) * &fi.lambda / delta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub model: SingularityModel,
    pub attachment: String,
    pub family_name: String,
    pub lhs: Character,
    /// `None` when the intersection side is not integral.
    pub rhs: Option<Character>,
    pub agrees: bool,
}

fn toric_family_for(model: &SingularityModel) -> Option<Result<FamilyIntersection>> {
    if let Family::Toric { p, q, b } = model.family() {
        return Some(family_toric(*p, *q, *b));
    }
    let s = model.semigroup()?;
    let (p, q) = two_generators(&s)?;
    Some(family_toric(p, q, 1))
}

/// `(p, q)` when the gap set is that of `<p, q>`.
fn two_generators(s: &crate::semigroup::NumericalSemigroup) -> Option<(u64, u64)> {
    let p = (1..).find(|&n| s.contains(n))?;
    let q = (p + 1..).find(|&n| s.contains(n) && n % p != 0)?;
    let t = crate::semigroup::gaps_two_generated(p, q).ok()?;
    (t.gaps() == s.gaps()).then_some((p, q))
}

/// The family whose gluing realizes `(model, attach)`.
pub fn associated_family(
    model: &SingularityModel,
    attach: &AttachmentConfig,
) -> Result<FamilyIntersection> {
    let n = model.branch_count();
    let set = attach.resolve(n)?;
    let none = || {
        Error::NoAssociatedFamily(format!("{} with attachment {}", model.family(), attach.describe(n)))
    };
    match model.family() {
        Family::AOdd { k } => match set.as_slice() {
            [1, 2] => family_bk(*k),
            [_] => family_hk(*k),
            [] => Ok(family_bk(*k)?.unpointed()),
            _ => Err(none()),
        },
        Family::DEven { k } => match set.as_slice() {
            [1, 2, 3] => family_trik(*k),
            [1, 2] | [1, 3] => family_bhk(*k),
            _ => Err(none()),
        },
        _ => {
            let fam = toric_family_for(model).ok_or_else(none)??;
            if attach.is_full(n) {
                Ok(fam)
            } else if set.is_empty() {
                Ok(fam.unpointed())
            } else {
                Err(none())
            }
        }
    }
}

/// Compares `chi_family(model, attach)` with the intersection numbers of the
/// associated family.
pub fn crosscheck(model: &SingularityModel, attach: &AttachmentConfig) -> Result<CrossCheckReport> {
    let fam = associated_family(model, attach)?;
    let lhs = chi_family(model, attach)?.normalized();
    let deg = Rational::from(fam.deg_b);
    let lam = &fam.lambda / &deg;
    let del = fam.effective_delta() / &deg;
    let rhs = match (lam.to_integer(), del.to_integer()) {
        (Some(l), Some(d)) => Some(Character::from_lambda_delta(l, d).normalized()),
        _ => None,
    };
    let agrees = rhs.as_ref().is_some_and(|r| {
        r.chi_lambda() == lhs.chi_lambda()
            && r.chi_lambda2() == lhs.chi_lambda2()
            && r.chi_delta() == lhs.chi_delta()
    });
    Ok(CrossCheckReport {
        model: model.clone(),
        attachment: attach.describe(model.branch_count()),
        family_name: fam.name,
        lhs,
        rhs,
        agrees,
    })
}

/// `alpha*` of a family read through the character route.
pub fn threshold_from_character(c: &Character) -> Result<Rational> {
    alpha_from_lambda_delta(c.chi_lambda(), c.chi_delta())
}
