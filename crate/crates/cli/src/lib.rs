//! Command-line driver for `weylstd`: parses operator expressions and a
//! filtration config, runs the requested computation, and renders text or
//! JSON.

pub mod config;
pub mod json;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;
use weylstd::basis::{std_basis_pipeline, BuchbergerOptions};
use weylstd::division::divide;
use weylstd::homogenize::homogenize;
use weylstd::oracle::fuzz::{algebra_fuzz, SizeParams};
use weylstd::oracle::{compare_with_pipeline, staircase_oracle, DEFAULT_MAX_MATRIX};
use weylstd::parse::{parse_ast, parse_homog, parse_operator, ParseError};
use weylstd::{Exponent, Field, Fp, HomogOperator, Rational, WeylOperator};

use config::{FieldChoice, OutputFormat, RunConfig};
use json::{exponent_json, homog_to_json, weyl_to_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGREE_CAP: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{source_name}:{err}")]
    Parse {
        source_name: String,
        err: ParseError,
    },
    #[error("input error: {0}")]
    Input(String),
    #[error("{0}")]
    DegreeCap(weylstd::Error),
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Parse { .. } | CliError::Input(_) => EXIT_INPUT,
            CliError::DegreeCap(_) => EXIT_DEGREE_CAP,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config_error",
            CliError::Parse { .. } => "parse_error",
            CliError::Input(_) => "input_error",
            CliError::DegreeCap(_) => "degree_cap_reached",
            CliError::Invariant(_) => "invariant_violation",
        }
    }
}

impl From<weylstd::Error> for CliError {
    fn from(e: weylstd::Error) -> Self {
        match e {
            weylstd::Error::DegreeCapReached { .. } => CliError::DegreeCap(e),
            weylstd::Error::InvariantViolation(m) => CliError::Invariant(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "weylstd",
    version,
    about = "Standard bases in the Weyl algebra for admissible filtrations"
)]
pub struct Cli {
    /// Filtration/field config (TOML). Without it: order filtration, n inferred.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
    /// Abort completion when an S-pair exceeds this graded degree.
    #[arg(long, global = true)]
    pub degree_cap: Option<u64>,
    /// Seed for `verify`'s randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal-order each operator.
    Normalize { inputs: Vec<String> },
    /// Product of the operators, left to right.
    Mul { inputs: Vec<String> },
    /// δ-exponent and leading coefficient of each operator.
    Exp { inputs: Vec<String> },
    /// Principal symbol of each operator.
    Symbol { inputs: Vec<String> },
    /// Homogenization of each operator.
    Homogenize { inputs: Vec<String> },
    /// Divide the first element of A_n[t] by the rest (`t` allowed).
    Divide {
        /// Read the inputs as elements of A_n and homogenize them first.
        #[arg(long)]
        homogenize: bool,
        inputs: Vec<String>,
    },
    /// Full standard-basis report for the ideal generated by the inputs.
    StdBasis { inputs: Vec<String> },
    /// Generators of the graded ideal (the symbols of a standard basis).
    GrGens { inputs: Vec<String> },
    /// Minimal generators of the exponent staircase.
    Staircase { inputs: Vec<String> },
    /// Randomized self-checks, plus an oracle comparison when inputs are given.
    Verify {
        #[arg(long, default_value_t = 6)]
        degree_bound: u64,
        #[arg(long, default_value_t = 50)]
        iterations: usize,
        inputs: Vec<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Normalize { .. } => "normalize",
            Command::Mul { .. } => "mul",
            Command::Exp { .. } => "exp",
            Command::Symbol { .. } => "symbol",
            Command::Homogenize { .. } => "homogenize",
            Command::Divide { .. } => "divide",
            Command::StdBasis { .. } => "std-basis",
            Command::GrGens { .. } => "gr-gens",
            Command::Staircase { .. } => "staircase",
            Command::Verify { .. } => "verify",
        }
    }

    fn inputs(&self) -> &[String] {
        match self {
            Command::Normalize { inputs }
            | Command::Mul { inputs }
            | Command::Exp { inputs }
            | Command::Symbol { inputs }
            | Command::Homogenize { inputs }
            | Command::Divide { inputs, .. }
            | Command::StdBasis { inputs }
            | Command::GrGens { inputs }
            | Command::Staircase { inputs }
            | Command::Verify { inputs, .. } => inputs,
        }
    }

    fn allows_t(&self) -> bool {
        matches!(
            self,
            Command::Divide {
                homogenize: false,
                ..
            }
        )
    }
}

/// An expression with the place it came from, for diagnostics.
#[derive(Clone, Debug)]
pub struct Source {
    pub name: String,
    pub text: String,
}

/// Expands positional inputs: files are read one expression per line with
/// `#` comments, `-` reads stdin the same way, anything else is an
/// expression.
pub fn collect_sources(inputs: &[String]) -> Result<Vec<Source>, CliError> {
    let mut out = Vec::new();
    for input in inputs {
        if input == "-" {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
            out.extend(lines_of("<stdin>", &text));
        } else if Path::new(input).is_file() {
            let text = std::fs::read_to_string(input)
                .map_err(|e| CliError::Input(format!("{input}: {e}")))?;
            out.extend(lines_of(input, &text));
        } else {
            out.push(Source {
                name: "<arg>".into(),
                text: input.clone(),
            });
        }
    }
    Ok(out)
}

fn lines_of(name: &str, text: &str) -> Vec<Source> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| Source {
                name: format!("{name}:line {}", i + 1),
                text: body.to_owned(),
            })
        })
        .collect()
}

/// Emitted document and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Doc {
    text: String,
    json: Value,
    code: i32,
}

impl Doc {
    fn ok(text: String, json: Value) -> Self {
        Doc {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let format_hint = cli.output;
    match run_inner(&cli) {
        Ok((doc, format)) => Outcome {
            code: doc.code,
            stdout: render(&doc, format),
            stderr: String::new(),
        },
        Err(err) => {
            let json_mode = format_hint == Some(OutputFormat::Json)
                || (format_hint.is_none() && config_says_json(&cli));
            if json_mode {
                let doc = json!({
                    "error": { "code": err.code(), "exit_code": err.exit_code(), "message": err.to_string() }
                });
                Outcome {
                    code: err.exit_code(),
                    stdout: format!("{doc:#}\n"),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: err.exit_code(),
                    stdout: String::new(),
                    stderr: format!("error[{}]: {err}\n", err.code()),
                }
            }
        }
    }
}

fn config_says_json(cli: &Cli) -> bool {
    cli.config
        .as_deref()
        .and_then(|p| RunConfig::load(p).ok())
        .is_some_and(|c| c.output == OutputFormat::Json)
}

fn render(doc: &Doc, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => doc.text.clone(),
        OutputFormat::Json => format!("{:#}\n", doc.json),
    }
}

fn run_inner(cli: &Cli) -> Result<(Doc, OutputFormat), CliError> {
    let sources = collect_sources(cli.command.inputs())?;
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default_for(infer_n(&sources, cli.command.allows_t())?),
    };
    if let Some(format) = cli.output {
        cfg.output = format;
    }
    if cli.degree_cap.is_some() {
        cfg.degree_cap = cli.degree_cap;
    }
    let doc = match cfg.field {
        FieldChoice::Rational => execute::<Rational>(cli, &cfg, &(), &sources)?,
        FieldChoice::Fp(p) => execute::<Fp>(cli, &cfg, &p, &sources)?,
    };
    Ok((doc, cfg.output))
}

fn infer_n(sources: &[Source], allow_t: bool) -> Result<usize, CliError> {
    let mut n = 1;
    for s in sources {
        let ast = parse_ast(&s.text, usize::MAX, allow_t).map_err(|err| CliError::Parse {
            source_name: s.name.clone(),
            err,
        })?;
        n = n.max(ast.max_index());
    }
    Ok(n)
}

fn parse_all<K: Field>(
    sources: &[Source],
    n: usize,
    field: &K::Context,
) -> Result<Vec<WeylOperator<K>>, CliError> {
    sources
        .iter()
        .map(|s| {
            parse_operator(&s.text, n, field).map_err(|err| CliError::Parse {
                source_name: s.name.clone(),
                err,
            })
        })
        .collect()
}

fn require_inputs(sources: &[Source], cmd: &str, at_least: usize) -> Result<(), CliError> {
    if sources.len() < at_least {
        return Err(CliError::Input(format!(
            "`{cmd}` needs at least {at_least} operator(s)"
        )));
    }
    Ok(())
}

fn execute<K: Field>(
    cli: &Cli,
    cfg: &RunConfig,
    field: &K::Context,
    sources: &[Source],
) -> Result<Doc, CliError> {
    let ctx = cfg.context();
    let n = cfg.n;
    let name = cli.command.name();
    let weyl_list = |ops: &[WeylOperator<K>]| -> (String, Value) {
        let text: String = ops
            .iter()
            .map(|p| format!("{}\n", ctx.format_weyl(p)))
            .collect();
        let json: Vec<_> = ops.iter().map(|p| weyl_to_json(&ctx, p)).collect();
        (text, json!(json))
    };

    match &cli.command {
        Command::Normalize { .. } => {
            let ops = parse_all::<K>(sources, n, field)?;
            let (text, ops_json) = weyl_list(&ops);
            Ok(Doc::ok(
                text,
                json!({ "command": name, "operators": ops_json }),
            ))
        }
        Command::Mul { .. } => {
            require_inputs(sources, name, 1)?;
            let ops = parse_all::<K>(sources, n, field)?;
            let product = ops[1..].iter().fold(ops[0].clone(), |acc, p| acc.mul(p));
            Ok(Doc::ok(
                format!("{}\n", ctx.format_weyl(&product)),
                json!({ "command": name, "product": weyl_to_json(&ctx, &product) }),
            ))
        }
        Command::Exp { .. } => {
            let ops = parse_all::<K>(sources, n, field)?;
            let mut text = String::new();
            let mut out = Vec::new();
            for p in &ops {
                let lead = ctx.exp_delta(p)?;
                let delta = ctx.lambda().delta(p).expect("nonzero");
                text.push_str(&format!(
                    "{}  coeff {}  delta {}\n",
                    lead.exponent, lead.coeff, delta
                ));
                out.push(json!({
                    "exponent": exponent_json(&lead.exponent),
                    "coeff": lead.coeff.to_exact_string(),
                    "delta": delta.to_string(),
                }));
            }
            Ok(Doc::ok(text, json!({ "command": name, "exponents": out })))
        }
        Command::Symbol { .. } => {
            let ops = parse_all::<K>(sources, n, field)?;
            let symbols = ops
                .iter()
                .map(|p| ctx.symbol(p))
                .collect::<Result<Vec<_>, _>>()?;
            let (text, ops_json) = weyl_list(&symbols);
            Ok(Doc::ok(
                text,
                json!({ "command": name, "symbols": ops_json }),
            ))
        }
        Command::Homogenize { .. } => {
            let ops = parse_all::<K>(sources, n, field)?;
            let hs = ops.iter().map(homogenize).collect::<Result<Vec<_>, _>>()?;
            let text: String = hs
                .iter()
                .map(|h| format!("{}\n", ctx.format_homog(h)))
                .collect();
            let out: Vec<_> = hs.iter().map(|h| homog_to_json(&ctx, h)).collect();
            Ok(Doc::ok(text, json!({ "command": name, "operators": out })))
        }
        Command::Divide {
            homogenize: hom, ..
        } => {
            require_inputs(sources, name, 1)?;
            let ops: Vec<HomogOperator<K>> = if *hom {
                parse_all::<K>(sources, n, field)?
                    .iter()
                    .map(homogenize)
                    .collect::<Result<_, _>>()?
            } else {
                sources
                    .iter()
                    .map(|s| {
                        parse_homog(&s.text, n, field).map_err(|err| CliError::Parse {
                            source_name: s.name.clone(),
                            err,
                        })
                    })
                    .collect::<Result<_, _>>()?
            };
            let res = divide(&ctx, &ops[0], &ops[1..])?;
            let mut text = String::new();
            for (i, q) in res.quotients.iter().enumerate() {
                text.push_str(&format!("Q{} = {}\n", i + 1, ctx.format_homog(q)));
            }
            text.push_str(&format!("R = {}\n", ctx.format_homog(&res.remainder)));
            let quotients: Vec<_> = res
                .quotients
                .iter()
                .map(|q| homog_to_json(&ctx, q))
                .collect();
            Ok(Doc::ok(
                text,
                json!({
                    "command": name,
                    "quotients": quotients,
                    "remainder": homog_to_json(&ctx, &res.remainder),
                }),
            ))
        }
        Command::StdBasis { .. } | Command::GrGens { .. } | Command::Staircase { .. } => {
            let gens = parse_all::<K>(sources, n, field)?;
            let opts = BuchbergerOptions {
                degree_cap: cfg.degree_cap,
                track_cofactors: false,
            };
            let report = std_basis_pipeline(&ctx, &gens, &opts)?;
            Ok(match &cli.command {
                Command::GrGens { .. } => {
                    let (text, ops_json) = weyl_list(&report.symbols);
                    Doc::ok(text, json!({ "command": name, "symbols": ops_json }))
                }
                Command::Staircase { .. } => {
                    let mut text: String =
                        report.staircase.iter().map(|e| format!("{e}\n")).collect();
                    if n == 1 {
                        text.push_str(&staircase_grid(&report.staircase));
                    }
                    let st: Vec<_> = report.staircase.iter().map(exponent_json).collect();
                    Doc::ok(text, json!({ "command": name, "staircase": st }))
                }
                _ => {
                    let homog: Vec<_> = report
                        .homog_basis
                        .iter()
                        .map(|h| homog_to_json(&ctx, h))
                        .collect();
                    let delta: Vec<_> = report
                        .delta_basis
                        .iter()
                        .map(|p| weyl_to_json(&ctx, p))
                        .collect();
                    let symbols: Vec<_> = report
                        .symbols
                        .iter()
                        .map(|p| weyl_to_json(&ctx, p))
                        .collect();
                    let st: Vec<_> = report.staircase.iter().map(exponent_json).collect();
                    let s = &report.stats;
                    let mut text = String::from("homogeneous basis:\n");
                    for h in &report.homog_basis {
                        text.push_str(&format!("  {}\n", ctx.format_homog(h)));
                    }
                    text.push_str("delta basis:\n");
                    for p in &report.delta_basis {
                        text.push_str(&format!("  {}\n", ctx.format_weyl(p)));
                    }
                    text.push_str("symbols:\n");
                    for p in &report.symbols {
                        text.push_str(&format!("  {}\n", ctx.format_weyl(p)));
                    }
                    text.push_str("staircase:\n");
                    for e in &report.staircase {
                        text.push_str(&format!("  {e}\n"));
                    }
                    text.push_str(&format!(
                        "stats: {} pairs, {} reductions to zero, max degree {}\n",
                        s.pairs_processed, s.reductions_to_zero, s.max_degree
                    ));
                    Doc::ok(
                        text,
                        json!({
                            "command": name,
                            "homog_basis": homog,
                            "delta_basis": delta,
                            "symbols": symbols,
                            "staircase": st,
                            "stats": {
                                "pairs_processed": s.pairs_processed,
                                "reductions_to_zero": s.reductions_to_zero,
                                "max_degree": s.max_degree,
                            },
                        }),
                    )
                }
            })
        }
        Command::Verify {
            degree_bound,
            iterations,
            ..
        } => {
            let seed = cli.seed.unwrap_or(0);
            let size = SizeParams {
                iterations: *iterations,
                ..SizeParams::default()
            };
            let fuzz = algebra_fuzz(seed, &size);
            let mut text = format!("algebra fuzz (seed {seed}):\n{fuzz}\n");
            let mut failed = fuzz.failure_count() > 0;
            let mut oracle_json = Value::Null;
            if !sources.is_empty() {
                let gens = parse_all::<K>(sources, n, field)?;
                let opts = BuchbergerOptions {
                    degree_cap: cfg.degree_cap,
                    track_cofactors: false,
                };
                let report = std_basis_pipeline(&ctx, &gens, &opts)?;
                let witness = staircase_oracle(&ctx, &gens, *degree_bound, DEFAULT_MAX_MATRIX)?;
                let cmp = compare_with_pipeline(&ctx, &gens, &report, &witness)?;
                failed |= !cmp.agrees();
                text.push_str(&format!(
                    "oracle (degree <= {degree_bound}, rank {}): lifted {} sound {} generators {} window {} (naive window {})\n",
                    witness.matrix_rank,
                    verdict(cmp.lifted_equal),
                    verdict(cmp.projected_sound),
                    verdict(cmp.generators_found),
                    verdict(cmp.window_equal),
                    verdict(cmp.naive_window_equal),
                ));
                oracle_json = json!({
                    "degree_bound": degree_bound,
                    "matrix_rank": witness.matrix_rank,
                    "lifted_equal": cmp.lifted_equal,
                    "projected_sound": cmp.projected_sound,
                    "generators_found": cmp.generators_found,
                    "window_equal": cmp.window_equal,
                    "naive_window_equal": cmp.naive_window_equal,
                });
            }
            let failures: Vec<_> = fuzz
                .failures
                .iter()
                .map(|f| json!({ "check": f.check, "detail": f.detail }))
                .collect();
            Ok(Doc {
                text,
                json: json!({
                    "command": name,
                    "seed": seed,
                    "fuzz_runs": fuzz.runs,
                    "fuzz_failures": failures,
                    "oracle": oracle_json,
                    "ok": !failed,
                }),
                code: if failed { EXIT_INVARIANT } else { EXIT_OK },
            })
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

/// Plain-text picture of a staircase in `N²` (`#` = in `Exp`).
fn staircase_grid(staircase: &[Exponent]) -> String {
    let size = staircase
        .iter()
        .map(|e| e.alpha[0].max(e.beta[0]) + 2)
        .max()
        .unwrap_or(2)
        .min(12);
    let mut out = String::new();
    for b in (0..size).rev() {
        out.push_str(&format!("{b:>3} |"));
        for a in 0..size {
            let e = Exponent::new(vec![a], vec![b]);
            out.push(if weylstd::basis::in_staircase(staircase, &e) {
                '#'
            } else {
                '.'
            });
        }
        out.push('\n');
    }
    out.push_str(&format!("    +{}\n", "-".repeat(size as usize)));
    out.push_str("     x ->, D ^\n");
    out
}
