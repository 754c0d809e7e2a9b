//! `drinfeld`: characteristic polynomials, classification and censuses of
//! rank-2 Drinfeld modules from the command line.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use drinfeld::census::{self, CensusOptions};
use drinfeld::classify::{self, ClassificationRecord, EndRingRecord};
use drinfeld::drinfeld::{prime_power, ModuleRecord};
use drinfeld::frobenius::{self, CharPoly, CharPolyRecord};
use drinfeld::poly::monic_irreducibles;
use drinfeld::{DrinfeldModule, Execution, Extension, Field, Poly};

#[derive(Parser, Debug)]
#[command(name = "drinfeld", version, about = "Rank-2 Drinfeld modules over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    output: Format,

    /// Write the report to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,

    /// Exit with status 3 when a report lists discrepancies.
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial of the Frobenius of a module.
    Charpoly(ModuleArgs),
    /// Full classification of a module.
    Classify(ModuleArgs),
    /// Isogeny-class census for (q, P, m).
    Census(CensusArgs),
    /// Endomorphism-order data for a characteristic polynomial.
    Endring(EndringArgs),
    /// Euler-Poincare characteristic counts for (q, P, m).
    Chi(CharacteristicArgs),
    /// Exhaustive realisation sweep over all modules with characteristic P.
    Realize(CharacteristicArgs),
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Characteristic p of F_q.
    #[arg(long)]
    p: Option<u32>,
    /// Degree s of F_q over F_p.
    #[arg(long)]
    s: Option<usize>,
    /// Field size q = p^s (alternative to --p/--s).
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Args, Debug)]
struct ModuleArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Degree n of L over F_q.
    #[arg(long)]
    n: Option<usize>,
    /// gamma(T) as an element of L, e.g. "2,1".
    #[arg(long = "gamma-T")]
    gamma_t: Option<String>,
    /// Coefficient of t in Phi_T.
    #[arg(long)]
    g: Option<String>,
    /// Coefficient of t^2 in Phi_T (nonzero).
    #[arg(long)]
    delta: Option<String>,
    /// Draw missing module parameters at random from this seed.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct CharacteristicArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// The A-characteristic P, e.g. "T^2+1" or "1,0,1".
    #[arg(long = "P", conflicts_with = "d")]
    p_poly: Option<String>,
    /// Use the least monic irreducible of this degree as P.
    #[arg(long)]
    d: Option<usize>,
    /// m = [L : A/P].
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[command(flatten)]
    characteristic: CharacteristicArgs,
    /// Skip the exhaustive realisation sweep.
    #[arg(long)]
    no_realize: bool,
}

#[derive(Args, Debug)]
struct EndringArgs {
    #[command(flatten)]
    characteristic: CharacteristicArgs,
    /// Trace c of the Frobenius.
    #[arg(long)]
    c: Option<String>,
    /// The unit mu in X^2 - cX + mu P^m.
    #[arg(long)]
    mu: Option<String>,
}

/// Failure of a run: usage errors exit with 2, domain errors with 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<drinfeld::Error> for Failure {
    fn from(e: drinfeld::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Run<T> = Result<T, Failure>;

fn required<T>(value: Option<T>, flag: &str) -> Run<T> {
    value.ok_or_else(|| Failure::Usage(format!("missing required flag {flag}")))
}

impl FieldArgs {
    fn field(&self) -> Run<Field> {
        let (p, s) = match (self.q, self.p) {
            (Some(_), Some(_)) => return Err(Failure::Usage("give either --q or --p, not both".into())),
            (Some(q), None) => {
                if self.s.is_some() {
                    return Err(Failure::Usage("--s cannot be combined with --q".into()));
                }
                prime_power(q).ok_or_else(|| Failure::Domain(format!("q = {q} is not a prime power")))?
            }
            (None, Some(p)) => (p, self.s.unwrap_or(1)),
            (None, None) => return Err(Failure::Usage("missing required flag --p or --q".into())),
        };
        Ok(Field::new(p, s, None)?)
    }
}

impl CharacteristicArgs {
    fn resolve(&self) -> Run<(Poly, usize)> {
        let field = self.field.field()?;
        let m = required(self.m, "--m")?;
        let p = match (&self.p_poly, self.d) {
            (Some(text), _) => Poly::parse(&field, text)?,
            (None, Some(d)) => monic_irreducibles(&field, d)
                .next()
                .ok_or_else(|| Failure::Domain(format!("no monic irreducible of degree {d}")))?,
            (None, None) => return Err(Failure::Usage("missing required flag --P or --d".into())),
        };
        Ok((p, m))
    }
}

impl ModuleArgs {
    fn module(&self) -> Run<DrinfeldModule> {
        let base = self.field.field()?;
        let n = required(self.n, "--n")?;
        if self.seed.is_none() {
            required(self.gamma_t.as_ref(), "--gamma-T")?;
            required(self.g.as_ref(), "--g")?;
            required(self.delta.as_ref(), "--delta")?;
        }
        let ext = Extension::new(&base, n, None)?;
        let l = ext.field();
        let size = l.order();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0));
        let mut pick = |given: &Option<String>, low: u64| -> Run<_> {
            match given {
                Some(text) => Ok(l.parse_element(text)?),
                None => Ok(l.element(rng.gen_range(low..size))),
            }
        };
        let gamma_t = pick(&self.gamma_t, 0)?;
        let g = pick(&self.g, 0)?;
        let delta = pick(&self.delta, 1)?;
        Ok(DrinfeldModule::new(&ext, gamma_t, g, delta)?)
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    module: ModuleRecord,
    #[serde(flatten)]
    report: ClassificationRecord,
}

#[derive(Serialize)]
struct PairRecord {
    c: String,
    mu: String,
}

#[derive(Serialize)]
struct ChiClassRecord {
    chi: String,
    pairs: Vec<PairRecord>,
}

#[derive(Serialize)]
struct ChiOutput {
    q: u64,
    d: usize,
    m: usize,
    #[serde(rename = "P")]
    p: String,
    admissible_total: usize,
    chi_distinct_enumerative: usize,
    chi_formula: Option<i64>,
    chi_formula_exact: Option<String>,
    classes: Vec<ChiClassRecord>,
    discrepancies: Vec<String>,
}

#[derive(Serialize)]
struct RealizeOutput {
    q: u64,
    d: usize,
    m: usize,
    #[serde(rename = "P")]
    p: String,
    #[serde(rename = "gamma_T")]
    gamma_t: String,
    modules: u64,
    realized_distinct: usize,
    realized: Vec<CharPolyRecord>,
    offenders: Vec<CharPolyRecord>,
    realized_ordinary: usize,
    admissible_ordinary: usize,
    ordinary_coverage: Option<String>,
    missing_ordinary: Vec<PairRecord>,
}

#[derive(Serialize)]
struct EndringOutput {
    charpoly: CharPolyRecord,
    verdict: drinfeld::Verdict,
    #[serde(flatten)]
    end_ring: EndRingRecord,
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialise")
}

/// Runs a subcommand and returns the report with its discrepancy flag.
fn execute(cli: &Cli) -> Run<(Value, bool, Option<Vec<census::CensusReport>>)> {
    let exec = Execution::default();
    match &cli.command {
        Command::Charpoly(args) => {
            let phi = args.module()?;
            let cp = frobenius::char_poly(&phi)?;
            Ok((to_value(&cp.to_record()), false, None))
        }
        Command::Classify(args) => {
            let phi = args.module()?;
            let report = classify::classify(&phi)?;
            let out = ClassifyOutput {
                module: phi.to_record(),
                report: report.to_record(),
            };
            Ok((to_value(&out), false, None))
        }
        Command::Census(args) => {
            let (p, m) = args.characteristic.resolve()?;
            let options = CensusOptions {
                realize_bound: (!args.no_realize).then(census::realize_bound_from_env),
                exec,
            };
            let report = census::census(&p, m, options)?;
            let flagged = report.has_discrepancies();
            Ok((to_value(&report), flagged, Some(vec![report])))
        }
        Command::Endring(args) => {
            let (p, m) = args.characteristic.resolve()?;
            let field = p.field().clone();
            let c = Poly::parse(&field, &required(args.c.clone(), "--c")?)?;
            let mu = field.parse_element(&required(args.mu.clone(), "--mu")?)?;
            let verdict = classify::weil_admissible(&c, &mu, &p, m)?;
            let cp = CharPoly { c, mu, p, m };
            let end_ring = classify::endring(&cp)?;
            let out = EndringOutput {
                charpoly: cp.to_record(),
                verdict,
                end_ring: end_ring.to_record(),
            };
            Ok((to_value(&out), false, None))
        }
        Command::Chi(args) => {
            let (p, m) = args.resolve()?;
            let enumeration = census::enumerate(&p, m, exec)?;
            let (q, d) = (enumeration.q(), enumeration.d());
            let groups = census::chi_classes(&enumeration)?;
            let formula = census::chi_formula(q, d, m);
            let mut discrepancies = Vec::new();
            if let Some(f) = &formula {
                if !(f.is_integer() && *f.numer() == groups.len() as i128) {
                    discrepancies.push(format!(
                        "chi formula gives {f}, enumeration gives {}",
                        groups.len()
                    ));
                }
            }
            let classes = groups
                .values()
                .map(|pairs| {
                    let (c, mu) = &pairs[0];
                    let chi = CharPoly {
                        c: c.clone(),
                        mu: mu.clone(),
                        p: p.clone(),
                        m,
                    }
                    .ep_char()
                    .expect("admissible pairs have nonzero P(1)");
                    ChiClassRecord {
                        chi: chi.to_machine_string(),
                        pairs: pairs
                            .iter()
                            .map(|(c, mu)| PairRecord {
                                c: c.to_machine_string(),
                                mu: mu.to_string(),
                            })
                            .collect(),
                    }
                })
                .collect();
            let out = ChiOutput {
                q,
                d,
                m,
                p: p.to_machine_string(),
                admissible_total: enumeration.total(),
                chi_distinct_enumerative: groups.len(),
                chi_formula: formula.filter(|f| f.is_integer()).and_then(|f| i64::try_from(*f.numer()).ok()),
                chi_formula_exact: formula.map(|f| f.to_string()),
                classes,
                discrepancies,
            };
            let flagged = !out.discrepancies.is_empty();
            Ok((to_value(&out), flagged, None))
        }
        Command::Realize(args) => {
            let (p, m) = args.resolve()?;
            let enumeration = census::enumerate(&p, m, exec)?;
            let r = census::realize(&enumeration, census::realize_bound_from_env(), exec)?;
            let out = RealizeOutput {
                q: enumeration.q(),
                d: enumeration.d(),
                m,
                p: p.to_machine_string(),
                gamma_t: r.gamma_t.to_string(),
                modules: r.modules,
                realized_distinct: r.realized.len(),
                realized: r.realized.iter().map(CharPoly::to_record).collect(),
                offenders: r.offenders.iter().map(CharPoly::to_record).collect(),
                realized_ordinary: r.realized_ordinary,
                admissible_ordinary: r.admissible_ordinary,
                ordinary_coverage: r.ordinary_coverage().map(|v| v.to_string()),
                missing_ordinary: r
                    .missing_ordinary
                    .iter()
                    .map(|(c, mu)| PairRecord {
                        c: c.to_machine_string(),
                        mu: mu.to_string(),
                    })
                    .collect(),
            };
            Ok((to_value(&out), !r.is_consistent(), None))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, flagged, census_reports) = match execute(&cli) {
        Ok(result) => result,
        Err(Failure::Usage(msg)) => Cli::command().error(ErrorKind::MissingRequiredArgument, msg).exit(),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let text = match output::render(&value, census_reports.as_deref(), cli.output) {
        Ok(text) => text,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    if cli.strict && flagged {
        eprintln!("discrepancies found (--strict)");
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
