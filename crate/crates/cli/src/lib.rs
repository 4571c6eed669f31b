//! Argument handling and report formatting for the `frobdeg` binary.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use frobdeg::certify::counter_example;
use frobdeg::oracle::{brute_g, brute_solve};
use frobdeg::parse::{parse_field, parse_poly, parse_poly_list};
use frobdeg::rng::seeded;
use frobdeg::solver::{
    charp_unbounded, frobenius_degree, frobenius_dim2, lower_bound, solve_for, type_denumerant,
    upper_bound, DEFAULT_CAPACITY, DEFAULT_PERMUTE_CAP,
};
use frobdeg::typespace::{count_types, degrees_of};
use frobdeg::{Config, Degree, Error, Field, FrobeniusReport, Poly, SolutionWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "frobdeg",
    version,
    about = "Frobenius degree of coprime monic polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Comma-separated monic polynomials in t.
    polys: String,
    /// Q, F<p> or F<p>^<k>.
    #[arg(long, default_value = "Q")]
    field: String,
    /// Defining polynomial in u for an extension field.
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, env = "FROBDEG_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_PERMUTE_CAP)]
    permute_cap: u64,
    /// Largest brute-force enumeration allowed.
    #[arg(long, default_value_t = DEFAULT_CAPACITY)]
    capacity: u64,
    #[arg(long)]
    json: bool,
    /// Re-check every witness and counter-example before printing.
    #[arg(long)]
    verify: bool,
    /// Reject constant inputs instead of reporting g = -inf.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Frobenius degree.
    Degree {
        #[command(flatten)]
        common: Common,
        /// Also construct a counter-example of degree g.
        #[arg(long)]
        certify: bool,
    },
    /// Upper and lower bounds on the Frobenius degree.
    Bounds {
        #[command(flatten)]
        common: Common,
    },
    /// Cone representation of a target polynomial.
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        target: String,
    },
    /// Frobenius degree together with a counter-example.
    Counterexample {
        #[command(flatten)]
        common: Common,
    },
    /// Degree patterns of all cone representations of a target.
    Denumerant {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        target: String,
    },
    /// Exhaustive search over a finite field.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Highest degree to scan; defaults to the upper bound.
        #[arg(long)]
        dmax: Option<usize>,
        /// Search for a representation of this target instead.
        #[arg(long)]
        target: Option<String>,
    },
    /// Representation with every cofactor of degree at least m in small characteristic.
    Charp {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
}

/// JSON report. Every key is always present; inapplicable ones are null.
#[derive(Serialize, Debug, Default)]
pub struct Report {
    pub command: String,
    pub field: String,
    pub g: Option<Value>,
    pub lower_bound: Option<usize>,
    pub upper_bound: Option<usize>,
    pub method: Option<String>,
    pub probed_degrees: Option<Vec<usize>>,
    pub counterexample: Option<String>,
    pub solvable: Option<bool>,
    pub witness: Option<Vec<String>>,
    pub types: Option<Vec<Vec<Value>>>,
    pub count: Option<usize>,
    pub dim2: Option<Dim2Json>,
}

#[derive(Serialize, Debug)]
pub struct Dim2Json {
    pub c: i64,
    pub chi_ab: usize,
    pub chi_ba: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Lib(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapacityExceeded { .. } => EXIT_CAPACITY,
        Error::VerificationFailed(_) | Error::RankTooHigh => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

fn degree_json(d: Degree) -> Value {
    match d {
        Degree::NegInf => Value::String("-inf".into()),
        Degree::Finite(n) => Value::from(n),
    }
}

struct Inputs {
    field: Field,
    polys: Vec<Poly>,
}

fn load(common: &Common) -> Result<Inputs, Failure> {
    let field = parse_field(&common.field, common.modulus.as_deref())?;
    let polys = parse_poly_list(&common.polys, &field)?;
    if common.strict {
        if let Some(i) = polys.iter().position(Poly::is_constant) {
            return Err(Error::ConstantInput(i).into());
        }
    }
    Ok(Inputs { field, polys })
}

fn config(common: &Common) -> Config {
    Config {
        permute_cap: common.permute_cap,
        capacity: common.capacity,
    }
}

fn fill_degree(report: &mut Report, r: &FrobeniusReport) {
    report.g = Some(degree_json(r.g));
    report.lower_bound = r.lower_bound;
    report.upper_bound = r.upper_bound;
    report.method = Some(r.method.as_str().into());
    report.probed_degrees = Some(r.probed_degrees.clone());
    report.counterexample = r.counterexample.as_ref().map(Poly::to_string);
}

fn check_witness(w: &SolutionWitness, target: &Poly, polys: &[Poly]) -> Result<(), Failure> {
    if w.verify(target, polys) {
        Ok(())
    } else {
        Err(Failure::Verify(
            "witness does not reproduce the target".into(),
        ))
    }
}

fn check_counter(c: &Poly, g: Degree, polys: &[Poly]) -> Result<(), Failure> {
    if !c.is_monic() || c.degree() != g {
        return Err(Failure::Verify(format!("{c} is not monic of degree {g}")));
    }
    if solve_for(c, polys)?.is_some() {
        return Err(Failure::Verify(format!("{c} is representable")));
    }
    Ok(())
}

/// Frobenius degree, using the closed form for two polynomials when it applies.
fn degree_report(inputs: &Inputs, cfg: &Config) -> Result<FrobeniusReport, Failure> {
    let p = inputs.field.characteristic();
    let polys = &inputs.polys;
    if polys.len() == 2 && p != 2 && !polys.iter().any(Poly::is_constant) {
        // Monicity, field and coprimality errors surface here as well.
        frobdeg::solver::upper_bound(polys, cfg.permute_cap)?;
        return Ok(frobenius_dim2(&polys[0], &polys[1])?);
    }
    Ok(frobenius_degree(polys, cfg)?)
}

/// Counter-example at degree `g` if none is attached yet.
fn attach_counter(report: &mut FrobeniusReport, inputs: &Inputs, seed: u64) -> Result<(), Failure> {
    if report.counterexample.is_some() {
        return Ok(());
    }
    if let Degree::Finite(g) = report.g {
        let count = count_types(g, &degrees_of(&inputs.polys));
        if inputs.field.exceeds(count) {
            let mut rng = seeded(seed);
            report.counterexample = Some(counter_example(&inputs.polys, g, &mut rng)?);
        }
    }
    Ok(())
}

fn execute(cmd: &Command) -> Result<Report, Failure> {
    let (name, common) = match cmd {
        Command::Degree { common, .. } => ("degree", common),
        Command::Bounds { common } => ("bounds", common),
        Command::Solve { common, .. } => ("solve", common),
        Command::Counterexample { common } => ("counterexample", common),
        Command::Denumerant { common, .. } => ("denumerant", common),
        Command::Oracle { common, .. } => ("oracle", common),
        Command::Charp { common, .. } => ("charp", common),
    };
    let inputs = load(common)?;
    let cfg = config(common);
    let polys = &inputs.polys;
    let mut report = Report {
        command: name.into(),
        field: inputs.field.to_string(),
        ..Report::default()
    };
    match cmd {
        Command::Degree { .. } | Command::Counterexample { .. } => {
            let mut r = degree_report(&inputs, &cfg)?;
            if matches!(cmd, Command::Counterexample { .. }) || certify_requested(cmd) {
                attach_counter(&mut r, &inputs, common.seed)?;
            }
            if common.verify {
                if let Some(c) = &r.counterexample {
                    check_counter(c, r.g, polys)?;
                }
            }
            fill_degree(&mut report, &r);
        }
        Command::Bounds { .. } => {
            let degrees = degrees_of(polys);
            report.upper_bound = Some(upper_bound(polys, cfg.permute_cap)?);
            let low = lower_bound(&degrees);
            report.lower_bound = inputs
                .field
                .exceeds(count_types(low, &degrees))
                .then_some(low);
        }
        Command::Solve { target, .. } => {
            let f = parse_poly(target, &inputs.field)?;
            let w = solve_for(&f, polys)?;
            if let Some(w) = &w {
                if common.verify {
                    check_witness(w, &f, polys)?;
                }
            }
            report.solvable = Some(w.is_some());
            report.witness = w.map(|w| w.x.iter().map(Poly::to_string).collect());
        }
        Command::Denumerant { target, .. } => {
            let f = parse_poly(target, &inputs.field)?;
            let den = type_denumerant(&f, polys)?;
            report.types = Some(
                den.types
                    .iter()
                    .map(|t| t.entries().iter().map(|&e| degree_json(e)).collect())
                    .collect(),
            );
            report.count = Some(den.count);
            report.dim2 = den.dim2.map(|x| Dim2Json {
                c: x.c,
                chi_ab: x.chi_ab,
                chi_ba: x.chi_ba,
            });
        }
        Command::Oracle { dmax, target, .. } => match target {
            Some(target) => {
                let f = parse_poly(target, &inputs.field)?;
                let w = brute_solve(&f, polys, cfg.capacity)?;
                if let Some(w) = &w {
                    if common.verify {
                        check_witness(w, &f, polys)?;
                    }
                }
                report.solvable = Some(w.is_some());
                report.witness = w.map(|w| w.x.iter().map(Poly::to_string).collect());
            }
            None => {
                let d_max = match dmax {
                    Some(d) => *d,
                    None => upper_bound(polys, cfg.permute_cap)?,
                };
                let r = brute_g(polys, d_max, cfg.capacity)?;
                if common.verify {
                    if let Some(c) = &r.counterexample {
                        if brute_solve(c, polys, cfg.capacity)?.is_some() {
                            return Err(Failure::Verify(format!("{c} is representable")));
                        }
                    }
                }
                fill_degree(&mut report, &r);
            }
        },
        Command::Charp { target, m, .. } => {
            let f = parse_poly(target, &inputs.field)?;
            let w = charp_unbounded(polys, &f, *m)?;
            if common.verify {
                check_witness(&w, &f, polys)?;
            }
            report.solvable = Some(true);
            report.witness = Some(w.x.iter().map(Poly::to_string).collect());
        }
    }
    Ok(report)
}

fn certify_requested(cmd: &Command) -> bool {
    matches!(cmd, Command::Degree { certify: true, .. })
}

fn render_text(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("serializable report");
    let mut out = String::new();
    for (key, v) in value.as_object().expect("object") {
        let text = match v {
            Value::Null => continue,
            Value::String(s) => s.clone(),
            Value::Array(items) => items
                .iter()
                .map(|i| match i {
                    Value::String(s) => s.clone(),
                    Value::Array(inner) => format!(
                        "({})",
                        inner
                            .iter()
                            .map(|x| x.as_str().map_or_else(|| x.to_string(), str::to_string))
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                    other => other.to_string(),
                })
                .collect::<Vec<_>>()
                .join("; "),
            other => other.to_string(),
        };
        let _ = writeln!(out, "{key}: {text}");
    }
    out
}

/// Run with full argument vector (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let json = match &cli.command {
        Command::Degree { common, .. }
        | Command::Bounds { common }
        | Command::Solve { common, .. }
        | Command::Counterexample { common }
        | Command::Denumerant { common, .. }
        | Command::Oracle { common, .. }
        | Command::Charp { common, .. } => common.json,
    };
    match execute(&cli.command) {
        Ok(report) => {
            let stdout = if json {
                serde_json::to_string_pretty(&report).expect("serializable report") + "\n"
            } else {
                render_text(&report)
            };
            Outcome {
                code: EXIT_OK,
                stdout,
                stderr: String::new(),
            }
        }
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Lib(e) => (exit_code(&e), e.to_string()),
                Failure::Verify(m) => (EXIT_VERIFY, format!("verification failed: {m}")),
            };
            let stdout = if json {
                serde_json::to_string_pretty(
                    &serde_json::json!({ "error": msg, "exit_code": code }),
                )
                .expect("serializable error")
                    + "\n"
            } else {
                String::new()
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {msg}\n"),
            }
        }
    }
}
