mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use curvechar::discriminant::{disc_oracle, disc_weighted_degree};
use curvechar::git::{hm_index_chow, hm_index_hilbert, ribbon_stability, HMQuery};
use curvechar::intersection::{
    crosscheck, family_bhk, family_bk, family_hk, family_toric, family_trik, negativity_threshold,
    FamilyIntersection,
};
use curvechar::semigroup::{gaps_two_generated, is_symmetric, sum_of_gaps_closed_form};
use curvechar::singularities::{chi_family, model_from_tag, ModelParams};
use curvechar::suite::{run_crosscheck_suite, SuiteConfig};
use curvechar::tables::{emit_predictions, emit_table_characters, emit_table_dangling, TableRow};
use curvechar::{AttachmentConfig, Error, SingularityModel};
use num_bigint::BigInt;

use render::{Body, Format, Output};

#[derive(Parser)]
#[command(name = "curvechar", version, about = "Torus characters, alpha-values, slopes and GIT indices of singular curves")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Largest k for symbolic table rows and the suite.
    #[arg(long, global = true, default_value_t = 25)]
    k_max: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Characters,
    Dangling,
    Predictions,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    #[value(name = "Bk")]
    Bk,
    #[value(name = "Hk")]
    Hk,
    #[value(name = "Trik")]
    Trik,
    #[value(name = "BHk")]
    BHk,
    #[value(name = "toric")]
    Toric,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the character tables.
    Table {
        #[arg(value_enum)]
        which: Table,
    },
    /// Invariants of the semigroup <p, q>.
    Semigroup {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Character of a singularity model.
    Char {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        /// Comma-separated gap list.
        #[arg(long, value_delimiter = ',')]
        gaps: Option<Vec<u64>>,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long)]
        j: Option<u64>,
        /// Attached branches, e.g. `1,2`; `{}` or an empty string isolates.
        #[arg(long)]
        attach: Option<String>,
    },
    /// Weighted degree of the discriminant of x^n + a_{n-1}x^{n-1} + ... + a_0.
    Disc {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        wx: u32,
        /// Also expand the resultant symbolically and read off its degree.
        #[arg(long)]
        oracle: bool,
    },
    /// Intersection numbers of a one-parameter family.
    Family {
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 1)]
        b: u64,
        #[arg(long)]
        threshold: bool,
        #[arg(long)]
        crosscheck: bool,
    },
    /// Hilbert-Mumford index from a pair of characters.
    GitIndex {
        #[arg(long, allow_hyphen_values = true)]
        chi_lambda: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        chi_delta: BigInt,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, conflicts_with = "chow", required_unless_present = "chow")]
        m: Option<u64>,
        #[arg(long)]
        chow: bool,
    },
    /// Stability verdict for a ribbon with its one-parameter subgroup.
    RibbonStability {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Run every consistency check.
    Check,
}

enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn record(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn opt<T: ToString>(v: Option<T>) -> Value {
    v.map_or(Value::Null, |v| s(v))
}

fn table_record(r: &TableRow) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("label".into(), s(&r.label));
    m.insert("instance".into(), s(&r.instance));
    for (name, v) in &r.columns {
        m.insert(name.clone(), opt(v.as_ref()));
    }
    if let Some(n) = &r.note {
        m.insert("note".into(), s(n));
    }
    m
}

fn parse_attach(spec: Option<&str>) -> Result<AttachmentConfig, Error> {
    let Some(spec) = spec else {
        return Ok(AttachmentConfig::full());
    };
    let inner = spec.trim().trim_start_matches('{').trim_end_matches('}');
    let mut out = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        out.push(
            part.parse::<usize>()
                .map_err(|_| Error::InvalidSubset(format!("not a branch index: {part:?}")))?,
        );
    }
    Ok(AttachmentConfig::subset(out))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn family_for(name: FamilyName, k: Option<u64>, p: Option<u64>, q: Option<u64>, b: u64) -> Result<(FamilyIntersection, SingularityModel, AttachmentConfig), Error> {
    let need = |v: Option<u64>, n: &str| v.ok_or_else(|| Error::OutOfRange(format!("family needs --{n}")));
    Ok(match name {
        FamilyName::Bk => (family_bk(need(k, "k")?)?, SingularityModel::a_odd(need(k, "k")?)?, AttachmentConfig::full()),
        FamilyName::Hk => (family_hk(need(k, "k")?)?, SingularityModel::a_odd(need(k, "k")?)?, AttachmentConfig::subset([1])),
        FamilyName::Trik => (family_trik(need(k, "k")?)?, SingularityModel::d_even(need(k, "k")?)?, AttachmentConfig::full()),
        FamilyName::BHk => (family_bhk(need(k, "k")?)?, SingularityModel::d_even(need(k, "k")?)?, AttachmentConfig::subset([1, 2])),
        FamilyName::Toric => {
            let (p, q) = (need(p, "p")?, need(q, "q")?);
            (family_toric(p, q, b)?, SingularityModel::toric(p, q, b)?, AttachmentConfig::full())
        }
    })
}

fn run(cli: &Cli) -> Result<(Output, bool), Failure> {
    let mut ok = true;
    let (command, params, body) = match &cli.command {
        Command::Table { which } => {
            let (name, rows) = match which {
                Table::Characters => ("characters", emit_table_characters(cli.k_max)?),
                Table::Dangling => ("dangling", emit_table_dangling(cli.k_max)?),
                Table::Predictions => ("predictions", emit_predictions()?),
            };
            let params = record(vec![("table", s(name)), ("k_max", json!(cli.k_max))]);
            ("table", params, Body::Rows(rows.iter().map(table_record).collect()))
        }
        Command::Semigroup { p, q } => {
            let sg = gaps_two_generated(*p, *q)?;
            let gaps: Vec<String> = sg.gaps().iter().map(u64::to_string).collect();
            let row = record(vec![
                ("generators", s(format!("{p},{q}"))),
                ("gaps", s(gaps.join(","))),
                ("frobenius", s(sg.frobenius())),
                ("genus", s(sg.genus())),
                ("gap_sum_enumerated", s(sg.gap_sum())),
                ("gap_sum_closed_form", s(sum_of_gaps_closed_form(*p, *q)?)),
                ("symmetric", json!(is_symmetric(&sg))),
            ]);
            ("semigroup", record(vec![("p", json!(p)), ("q", json!(q))]), Body::Rows(vec![row]))
        }
        Command::Char { family, k, p, q, b, gaps, g, l, m, i, j, attach } => {
            let mp = ModelParams {
                k: *k,
                p: *p,
                q: *q,
                b: *b,
                g: *g,
                l: *l,
                m: *m,
                i: *i,
                j: *j,
                gaps: gaps.clone(),
            };
            let model = model_from_tag(family, &mp)?;
            let att = parse_attach(attach.as_deref())?;
            let c = chi_family(&model, &att)?;
            let alpha = c.alpha()?;
            let row = record(vec![
                ("model", s(model.family())),
                ("attach", s(att.describe(model.branch_count()))),
                ("chi_lambda", s(c.chi_lambda())),
                ("chi_lambda2", s(c.chi_lambda2())),
                ("chi_delta", s(c.chi_delta())),
                ("delta_parts", to_value(&c)["delta_parts"].clone()),
                ("chi_K", s(c.chi_k())),
                ("alpha", opt(alpha.value())),
                ("slope", opt(c.slope().ok())),
            ]);
            let mut params = record(vec![("family", s(family))]);
            if let Value::Object(extra) = to_value(&mp) {
                params.extend(extra.into_iter().filter(|(_, v)| !v.is_null()));
            }
            params.insert("attach".into(), opt(attach.as_ref()));
            ("char", params, Body::Rows(vec![row]))
        }
        Command::Disc { n, wx, oracle } => {
            let closed = disc_weighted_degree(*n, *wx);
            let mut row = record(vec![("closed_form", s(closed))]);
            if *oracle {
                let o = disc_oracle(*n, *wx)?;
                row.insert("oracle".into(), s(o));
                row.insert("agrees".into(), json!(o == closed));
                ok = o == closed;
            }
            let params = record(vec![("n", json!(n)), ("wx", json!(wx)), ("oracle", json!(oracle))]);
            ("disc", params, Body::Rows(vec![row]))
        }
        Command::Family { name, k, p, q, b, threshold, crosscheck: cc } => {
            let (fam, model, att) = family_for(*name, *k, *p, *q, *b)?;
            let mut row = match to_value(&fam) {
                Value::Object(m) => m,
                _ => Map::new(),
            };
            row.insert("effective_delta".into(), s(fam.effective_delta()));
            if *threshold {
                row.insert("threshold".into(), s(negativity_threshold(&fam)?));
            }
            if *cc {
                let report = crosscheck(&model, &att)?;
                ok = report.agrees;
                row.insert("crosscheck".into(), to_value(&report));
            }
            let params = record(vec![
                ("name", s(name.to_possible_value().expect("named").get_name())),
                ("k", json!(k)),
                ("p", json!(p)),
                ("q", json!(q)),
                ("b", json!(b)),
            ]);
            ("family", params, Body::Rows(vec![row]))
        }
        Command::GitIndex { chi_lambda, chi_delta, g, n, m, chow } => {
            let index = if *chow {
                hm_index_chow(chi_lambda, chi_delta, *g, *n)?
            } else {
                hm_index_hilbert(&HMQuery {
                    chi_lambda: chi_lambda.clone(),
                    chi_delta: chi_delta.clone(),
                    g: *g,
                    n: *n,
                    m: *m,
                })?
            };
            let row = record(vec![
                ("point", s(if *chow { "chow" } else { "hilbert" })),
                ("ambient_dimension", s(curvechar::git::ambient_dimension(*g, *n))),
                ("index", s(index)),
            ]);
            let params = record(vec![
                ("chi_lambda", s(chi_lambda)),
                ("chi_delta", s(chi_delta)),
                ("g", json!(g)),
                ("n", json!(n)),
                ("m", json!(m)),
                ("chow", json!(chow)),
            ]);
            ("git-index", params, Body::Rows(vec![row]))
        }
        Command::RibbonStability { g, l, n, m } => {
            let v = ribbon_stability(*g, *l, *n, *m)?;
            let row = record(vec![
                ("status", to_value(&v.status)),
                ("index", s(&v.index)),
                ("degenerate_corner", json!(v.degenerate_corner)),
            ]);
            let params = record(vec![("g", json!(g)), ("l", json!(l)), ("n", json!(n)), ("m", json!(m))]);
            ("ribbon-stability", params, Body::Rows(vec![row]))
        }
        Command::Check => {
            let cfg = SuiteConfig {
                k_max: cli.k_max,
                ..SuiteConfig::default()
            };
            let report = run_crosscheck_suite(&cfg);
            ok = report.all_pass();
            ("check", to_value(&cfg).as_object().cloned().unwrap_or_default(), Body::Report(to_value(&report)))
        }
    };
    Ok((
        Output {
            command: command.to_string(),
            params,
            body,
        },
        ok,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(out, ok)| {
        let mut stdout = io::stdout().lock();
        render::write(&out, cli.format, &mut stdout).map_err(Failure::Io)?;
        stdout.flush().map_err(Failure::Io)?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
