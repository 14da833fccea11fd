//! The character tables, computed from the catalog, and their golden
//! comparison against the formula fixtures in `fixtures/`.

use serde::{Deserialize, Serialize};

use crate::character::{AlphaResult, Character};
use crate::error::{Error, Result};
use crate::expr::{eval, Env};
use crate::rational::Rational;
use crate::report::{Check, Status};
use crate::singularities::{chi_family, model_from_tag, AttachmentConfig, ModelParams};

const CHARACTERS: &str = include_str!("../fixtures/characters.toml");
const DANGLING: &str = include_str!("../fixtures/dangling.toml");
const PREDICTIONS: &str = include_str!("../fixtures/predictions.toml");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: String,
    /// Parameter values of this instance, e.g. `k=3`.
    pub instance: String,
    pub columns: Vec<(String, Option<Rational>)>,
    pub note: Option<String>,
}

impl TableRow {
    pub fn column(&self, name: &str) -> Option<&Rational> {
        self.columns
            .iter()
            .find(|(n, _)| n == name)
            .and_then(|(_, v)| v.as_ref())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
enum SweepKind {
    #[default]
    None,
    K,
    Instances,
    Ribbon,
    Chain,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterRow {
    label: String,
    family: String,
    #[serde(default)]
    sweep: SweepKind,
    #[serde(default)]
    params: ModelParams,
    #[serde(default)]
    instances: Vec<ModelParams>,
    attach: Option<Vec<usize>>,
    lambda: String,
    lambda2: Option<String>,
    delta: String,
    alpha: Option<String>,
    slope: Option<String>,
}

#[derive(Debug, Deserialize)]
struct CharacterFixture {
    row: Vec<CharacterRow>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct PredictionModel {
    label: String,
    family: String,
    #[serde(default)]
    params: ModelParams,
    attach: Option<Vec<usize>>,
    #[serde(default)]
    discrepancy: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct PredictionRow {
    alpha: String,
    models: Vec<PredictionModel>,
}

#[derive(Debug, Deserialize)]
struct PredictionFixture {
    row: Vec<PredictionRow>,
}

fn parse_fixture<T: for<'de> Deserialize<'de>>(src: &str, name: &str) -> Result<T> {
    toml::from_str(src).map_err(|e| Error::Fixture(format!("{name}: {e}")))
}

fn attachment(a: &Option<Vec<usize>>) -> AttachmentConfig {
    match a {
        None => AttachmentConfig::full(),
        Some(v) => AttachmentConfig::subset(v.iter().copied()),
    }
}

/// Parameter sets of one fixture row.
fn instances(row: &CharacterRow, k_max: u64) -> Vec<ModelParams> {
    match row.sweep {
        SweepKind::None => vec![row.params.clone()],
        SweepKind::Instances => row.instances.clone(),
        SweepKind::K => (1..=k_max)
            .map(|k| ModelParams {
                k: Some(k),
                ..row.params.clone()
            })
            .collect(),
        SweepKind::Ribbon => (3..=k_max + 2)
            .flat_map(|g| {
                (1..=g - 2).map(move |l| ModelParams {
                    g: Some(g),
                    l: Some(l),
                    ..Default::default()
                })
            })
            .collect(),
        SweepKind::Chain => (1..=k_max)
            .flat_map(|j| {
                (1..j).map(move |i| ModelParams {
                    i: Some(i),
                    j: Some(j),
                    ..Default::default()
                })
            })
            .collect(),
    }
}

fn describe(p: &ModelParams) -> String {
    let mut parts = Vec::new();
    let named = [
        ('k', p.k),
        ('p', p.p),
        ('q', p.q),
        ('b', p.b),
        ('g', p.g),
        ('l', p.l),
        ('m', p.m),
        ('i', p.i),
        ('j', p.j),
    ];
    for (c, v) in named {
        if let Some(v) = v {
            parts.push(format!("{c}={v}"));
        }
    }
    if let Some(g) = &p.gaps {
        let g: Vec<String> = g.iter().map(u64::to_string).collect();
        parts.push(format!("gaps={}", g.join(",")));
    }
    parts.join(" ")
}

/// Variables visible to fixture formulas. For gap sets, `k` is the genus
/// and `s` the sum of the gaps.
fn environment(p: &ModelParams) -> Env {
    let mut env = Env::new();
    let named = [
        ('k', p.k),
        ('p', p.p),
        ('q', p.q),
        ('b', p.b),
        ('g', p.g),
        ('l', p.l),
        ('m', p.m),
        ('i', p.i),
        ('j', p.j),
    ];
    for (c, v) in named {
        if let Some(v) = v {
            env.insert(c, Rational::from(v));
        }
    }
    if let Some(g) = &p.gaps {
        env.insert('k', Rational::from(g.len()));
        env.insert('s', Rational::from(g.iter().sum::<u64>()));
    }
    env
}

fn character_columns(c: &Character, full: bool) -> Vec<(String, Option<Rational>)> {
    let mut cols = vec![("lambda".to_string(), Some(Rational::from(c.chi_lambda())))];
    if full {
        cols.push(("lambda2".into(), Some(Rational::from(c.chi_lambda2()))));
    }
    cols.push(("delta".into(), Some(Rational::from(c.chi_delta()))));
    if full {
        let alpha = match c.alpha() {
            Ok(AlphaResult::Value(v)) => Some(v),
            _ => None,
        };
        cols.push(("alpha".into(), alpha));
        cols.push(("slope".into(), c.slope().ok()));
    }
    cols
}

fn compute_rows(fixture: &CharacterFixture, k_max: u64) -> Result<Vec<(CharacterRow, ModelParams, TableRow)>> {
    if k_max == 0 {
        return Err(Error::OutOfRange("k_max must be >= 1".into()));
    }
    let mut out = Vec::new();
    for row in &fixture.row {
        let full = row.lambda2.is_some();
        for params in instances(row, k_max) {
            let model = model_from_tag(&row.family, &params)?;
            let c = chi_family(&model, &attachment(&row.attach))?;
            let note = c.is_trivial().then(|| "trivial character".to_string());
            let table_row = TableRow {
                label: row.label.clone(),
                instance: describe(&params),
                columns: character_columns(&c, full),
                note,
            };
            out.push((row.clone(), params, table_row));
        }
    }
    Ok(out)
}

fn character_fixture(src: &str, name: &str) -> Result<CharacterFixture> {
    parse_fixture(src, name)
}

/// Table of characters with every branch attached, symbolic rows at
/// `k = 1..=k_max` and ribbons of genus `3..=k_max+2`.
pub fn emit_table_characters(k_max: u64) -> Result<Vec<TableRow>> {
    let f = character_fixture(CHARACTERS, "characters")?;
    Ok(compute_rows(&f, k_max)?.into_iter().map(|(_, _, r)| r).collect())
}

/// Dangling singularities and dangling chains (`1 <= i < j <= k_max`).
pub fn emit_table_dangling(k_max: u64) -> Result<Vec<TableRow>> {
    let f = character_fixture(DANGLING, "dangling")?;
    Ok(compute_rows(&f, k_max)?.into_iter().map(|(_, _, r)| r).collect())
}

fn prediction_rows() -> Result<Vec<(PredictionRow, PredictionModel, Rational, TableRow)>> {
    let f: PredictionFixture = parse_fixture(PREDICTIONS, "predictions")?;
    let mut out = Vec::new();
    for row in &f.row {
        let expected: Rational = row.alpha.parse()?;
        for m in &row.models {
            let model = model_from_tag(&m.family, &m.params)?;
            let c = chi_family(&model, &attachment(&m.attach))?;
            let alpha = c.alpha()?.value().cloned();
            let note = match &alpha {
                Some(a) if a != &expected => Some(format!(
                    "listed at {expected}; its character gives {a}"
                )),
                _ => None,
            };
            let tr = TableRow {
                label: m.label.clone(),
                instance: expected.to_string(),
                columns: vec![
                    ("alpha".into(), alpha),
                    ("lambda".into(), Some(Rational::from(c.chi_lambda()))),
                    ("delta".into(), Some(Rational::from(c.chi_delta()))),
                ],
                note,
            };
            out.push((row.clone(), m.clone(), expected.clone(), tr));
        }
    }
    Ok(out)
}

/// The descending list of predicted alpha-values, each recomputed from its
/// model. `instance` holds the listed value.
pub fn emit_predictions() -> Result<Vec<TableRow>> {
    Ok(prediction_rows()?.into_iter().map(|(_, _, _, r)| r).collect())
}

fn opt(v: Option<&Rational>) -> String {
    v.map_or_else(|| "undefined".to_string(), Rational::to_string)
}

fn golden(rows: Vec<(CharacterRow, ModelParams, TableRow)>) -> Vec<Check> {
    let mut checks = Vec::new();
    for (fx, params, tr) in rows {
        let env = environment(&params);
        let what = |col: &str| format!("{} {} {col}", tr.label, tr.instance);
        let exprs = [
            ("lambda", Some(&fx.lambda)),
            ("lambda2", fx.lambda2.as_ref()),
            ("delta", Some(&fx.delta)),
            ("alpha", fx.alpha.as_ref()),
            ("slope", fx.slope.as_ref()),
        ];
        let trivial = tr.note.is_some();
        for (col, e) in exprs {
            let Some(e) = e else { continue };
            if trivial && (col == "alpha" || col == "slope") {
                // alpha and slope are not defined for a trivial character
                checks.push(Check::compare(what(col), "undefined", opt(tr.column(col))));
                continue;
            }
            match eval(e, &env) {
                Ok(v) => checks.push(Check::compare(what(col), v, opt(tr.column(col)))),
                Err(err) => checks.push(Check::new(what(col), e.clone(), err.to_string(), Status::Fail)),
            }
        }
    }
    checks
}

fn fixture_failure(name: &str, e: Error) -> Vec<Check> {
    vec![Check::new(format!("{name} fixture"), "loads", e.to_string(), Status::Fail)]
}

/// One check per table cell: recomputed value against the fixture formula.
pub fn verify_table_characters(k_max: u64) -> Vec<Check> {
    match character_fixture(CHARACTERS, "characters").and_then(|f| compute_rows(&f, k_max)) {
        Ok(rows) => golden(rows),
        Err(e) => fixture_failure("characters", e),
    }
}

pub fn verify_table_dangling(k_max: u64) -> Vec<Check> {
    match character_fixture(DANGLING, "dangling").and_then(|f| compute_rows(&f, k_max)) {
        Ok(rows) => golden(rows),
        Err(e) => fixture_failure("dangling", e),
    }
}

/// Listed alpha-values against recomputation; rows flagged in the fixture
/// as discrepancies come out as warnings carrying both values.
pub fn verify_predictions() -> Vec<Check> {
    let rows = match prediction_rows() {
        Ok(r) => r,
        Err(e) => return fixture_failure("predictions", e),
    };
    rows.into_iter()
        .map(|(_, m, expected, tr)| {
            let actual = opt(tr.column("alpha"));
            let desc = format!("alpha of {}", tr.label);
            if m.discrepancy && actual != expected.to_string() {
                Check::new(
                    format!("{desc} (listed {expected}, character gives {actual})"),
                    expected.to_string(),
                    actual,
                    Status::Warn,
                )
            } else {
                Check::compare(desc, expected, actual)
            }
        })
        .collect()
}
