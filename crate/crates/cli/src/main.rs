//! `grm`: parameters, spectra, constructions and verification suites for
//! generalized Reed-Muller codes.
//!
//! Exit codes: 0 on success (flagged checks included), 1 when a verification
//! check fails or a computation errors, 2 on usage and range errors.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grm_core::constructions::{
    arrangement_poly, config_s, config_t, maximal_codeword, norm_form, standard_directions,
    Arrangement, MaximalSpec, NormFormSpec,
};
use grm_core::grm::{count_zeros_affine, grm_params};
use grm_core::oracle::{
    dimension_rank_oracle, enum_spectrum, parse_grid, run_suite, GridPoint, OracleConfig, Status,
    Variant, BUDGET_ENV, SUITES,
};
use grm_core::pgrm::{count_zeros_proj, pgrm_params, proj_length};
use grm_core::{
    Error, ExtensionMap, FieldElement, FieldSpec, HomogeneousPoly, PolyJson, ReducedPoly,
};

#[derive(Parser, Debug)]
#[command(name = "grm", version, about = "Generalized Reed-Muller code toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form code parameters as JSON.
    Params {
        #[arg(value_enum)]
        variant: VariantArg,
        #[command(flatten)]
        code: CodeArgs,
        /// Add brute-force rank and weights.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Exhaustive weight distribution.
    Spectrum {
        #[arg(value_enum)]
        variant: VariantArg,
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Build an extremal codeword and count its zeros.
    Construct(ConstructArgs),
    /// Weight of a polynomial given as JSON (a file path or `-` for stdin).
    WeightOf {
        #[arg(long)]
        projective: bool,
        input: PathBuf,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify {
        #[arg(long)]
        suite: String,
        /// `default`, or `;`-separated points `[a:|p:]q,n,d`.
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Affine,
    Projective,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Affine => Variant::Affine,
            VariantArg::Projective => Variant::Projective,
        }
    }
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    d: u64,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Enumeration threads; output does not depend on it.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Maximum point evaluations for enumeration.
    #[arg(long, env = BUDGET_ENV, value_parser = clap::value_parser!(u128))]
    budget: Option<u128>,
}

impl RunArgs {
    fn config(&self) -> Result<OracleConfig, Failure> {
        let mut cfg = OracleConfig::default();
        if let Some(w) = self.workers {
            cfg.workers = w as usize;
        }
        if let Some(b) = self.budget {
            if b == 0 {
                return Err(Failure::Usage("budget must be positive".into()));
            }
            cfg.budget = b;
        }
        Ok(cfg)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Maximal,
    Arrangement,
    ConfigS,
    ConfigT,
    NormForm,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    q: u64,
    #[arg(long, default_value_t = 2)]
    n: u64,
    /// Degree (maximal, config-s, config-t).
    #[arg(long)]
    d: Option<u64>,
    /// Parallel-class sizes for `arrangement`, e.g. `2,1`.
    #[arg(long, value_delimiter = ',')]
    blocks: Vec<usize>,
    /// Extension degree for `norm-form`; g = X1 + w X2 with w the field generator.
    #[arg(long, default_value_t = 2)]
    s: u32,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_)
            | Error::NotPrimePower(_)
            | Error::FieldTooLarge { .. }
            | Error::InvalidElement { .. }
            | Error::DimensionMismatch { .. }
            | Error::DegreeTooSmall { .. }
            | Error::IndexOutOfRange { .. }
            | Error::OutOfRange(_)
            | Error::InvalidConstruction(_)
            | Error::BudgetExceeded { .. }
            | Error::UnknownSuite(_)
            | Error::MalformedPoly(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match dispatch(cli.command, &mut out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn print_json(out: &mut impl Write, v: &impl serde::Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, v).map_err(|e| Failure::Check(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(cmd: Command, out: &mut impl Write) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Params {
            variant,
            code,
            oracle,
            run,
        } => cmd_params(variant.into(), &code, oracle, &run, out),
        Command::Spectrum {
            variant,
            code,
            csv,
            json: _,
            run,
        } => cmd_spectrum(variant.into(), &code, csv, &run, out),
        Command::Construct(args) => cmd_construct(&args, out),
        Command::WeightOf { projective, input } => cmd_weight_of(projective, &input, out),
        Command::Verify {
            suite,
            grid,
            json: _,
            csv,
            run,
        } => cmd_verify(&suite, &grid, csv, &run, out),
    }
}

fn grid_point(variant: Variant, code: &CodeArgs) -> GridPoint {
    GridPoint {
        q: code.q,
        n: code.n,
        d: code.d,
        variant,
    }
}

fn cmd_params(
    variant: Variant,
    code: &CodeArgs,
    oracle: bool,
    run: &RunArgs,
    out: &mut impl Write,
) -> Result<ExitCode, Failure> {
    let (q, n, d) = (code.q, code.n, code.d);
    let mut v = match variant {
        Variant::Affine => serde_json::to_value(grm_params(q, n, d)?),
        Variant::Projective => serde_json::to_value(pgrm_params(q, n, d)?),
    }
    .map_err(|e| Failure::Check(e.to_string()))?;
    if oracle {
        let cfg = run.config()?;
        let gp = grid_point(variant, code);
        let rank = dimension_rank_oracle(&gp, &cfg)?;
        let dist = enum_spectrum(&gp, &cfg)?;
        let weights = dist.positive_weights();
        v["oracle"] = json!({
            "rank": rank,
            "w1": weights.first(),
            "w2": weights.get(1),
        });
    }
    print_json(out, &v)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectrum(
    variant: Variant,
    code: &CodeArgs,
    csv: bool,
    run: &RunArgs,
    out: &mut impl Write,
) -> Result<ExitCode, Failure> {
    let cfg = run.config()?;
    let dist = enum_spectrum(&grid_point(variant, code), &cfg)?;
    if csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(["weight", "count"])
            .map_err(|e| Failure::Check(e.to_string()))?;
        for (weight, count) in &dist.counts {
            w.write_record([weight.to_string(), count.to_string()])
                .map_err(|e| Failure::Check(e.to_string()))?;
        }
        w.flush()?;
    } else {
        let rows: Vec<Value> = dist
            .counts
            .iter()
            .map(|(w, c)| json!({ "weight": w, "count": c.to_string() }))
            .collect();
        print_json(
            out,
            &json!({ "q": code.q, "n": code.n, "d": code.d, "spectrum": rows }),
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn need_d(args: &ConstructArgs) -> Result<u64, Failure> {
    args.d
        .ok_or_else(|| Failure::Usage(format!("--d is required for {:?}", args.family)))
}

fn cmd_construct(args: &ConstructArgs, out: &mut impl Write) -> Result<ExitCode, Failure> {
    let n = args.n as usize;
    let (field, poly, predicted): (FieldSpec, ReducedPoly, u64) = match args.family {
        Family::Maximal => {
            let field = FieldSpec::of_order(args.q)?;
            let d = need_d(args)?;
            let spec = MaximalSpec::standard(&field, n, d)?;
            let f = maximal_codeword(&field, n, d, &spec)?;
            let predicted = grm_params(args.q, args.n, d)?;
            (field, f, predicted.length - predicted.min_distance)
        }
        Family::Arrangement => {
            if args.blocks.is_empty() {
                return Err(Failure::Usage(
                    "--blocks is required for arrangement".into(),
                ));
            }
            let field = FieldSpec::of_order(args.q)?;
            let arr = Arrangement::standard(&field, n, &args.blocks)?;
            (field, arrangement_poly(&arr), arr.predicted_zeros())
        }
        Family::ConfigS | Family::ConfigT => {
            let field = FieldSpec::of_order(args.q)?;
            let d = need_d(args)?;
            let arr = match args.family {
                Family::ConfigS => config_s(&field, n, d, &standard_directions(n, 2))?,
                _ => config_t(&field, n, d, &standard_directions(n, 3))?,
            };
            (field, arrangement_poly(&arr), arr.predicted_zeros())
        }
        Family::NormForm => {
            let ext = ExtensionMap::new(args.q, args.s)?;
            if n < 2 {
                return Err(Failure::Usage("norm-form needs --n >= 2".into()));
            }
            let mut x1 = vec![0; n];
            x1[0] = 1;
            let mut x2 = vec![0; n];
            x2[1] = 1;
            let g =
                ReducedPoly::reduce(ext.ext(), n, [(x1, FieldElement::ONE), (x2, ext.ext().x())])?;
            let spec = NormFormSpec::new(ext.clone(), g)?;
            let f = norm_form(&spec)?;
            // g is linear, so its zeros over the base field form an affine
            // subspace of codimension 2 (X1 = X2 = 0)
            let predicted = args
                .q
                .checked_pow(args.n as u32 - 2)
                .ok_or_else(|| Failure::Usage("length overflow".into()))?;
            (ext.base().clone(), f, predicted)
        }
    };
    let zeros = count_zeros_affine(&poly);
    let length = field.q() as u64;
    let length = (0..args.n)
        .try_fold(1u64, |acc, _| acc.checked_mul(length))
        .context("length overflow")?;
    let v = json!({
        "field": field,
        "poly": poly.to_json(),
        "predicted_zeros": predicted,
        "zeros": zeros,
        "weight": length - zeros,
    });
    print_json(out, &v)?;
    Ok(ExitCode::SUCCESS)
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn cmd_weight_of(
    projective: bool,
    input: &PathBuf,
    out: &mut impl Write,
) -> Result<ExitCode, Failure> {
    let text = read_input(input)?;
    let mut value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("malformed polynomial JSON: {e}")))?;
    // accept the output of `construct` as well as a bare polynomial
    if let Some(p) = value.get("poly") {
        value = p.clone();
    }
    let pj: PolyJson = serde_json::from_value(value)
        .map_err(|e| Failure::Usage(format!("malformed polynomial JSON: {e}")))?;
    let v = if projective {
        let f = HomogeneousPoly::from_json(&pj)?;
        let len = proj_length(pj.q as u64, f.nvars() as u64 - 1)?;
        let zeros = count_zeros_proj(&f)?;
        json!({ "length": len, "zeros": zeros, "weight": len - zeros })
    } else {
        let f = ReducedPoly::from_json(&pj)?;
        let len = (f.field().q() as u64)
            .checked_pow(f.nvars() as u32)
            .ok_or_else(|| Failure::Usage("length overflow".into()))?;
        let zeros = count_zeros_affine(&f);
        json!({ "length": len, "zeros": zeros, "weight": len - zeros })
    };
    print_json(out, &v)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    suite: &str,
    grid: &str,
    csv: bool,
    run: &RunArgs,
    out: &mut impl Write,
) -> Result<ExitCode, Failure> {
    let cfg = run.config()?;
    let grid = parse_grid(grid)?;
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Failure::Usage(format!(
            "unknown suite `{suite}`; expected one of {} or all",
            SUITES.join(", ")
        )));
    };
    let mut failed = false;
    let mut reports = Vec::new();
    for name in names {
        let r = run_suite(name, grid.clone(), &cfg)?;
        failed |= r.has_failures();
        reports.push(r);
    }
    if csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        let err = |e: csv::Error| Failure::Check(e.to_string());
        w.write_record([
            "suite", "check", "variant", "q", "n", "d", "status", "flag", "details",
        ])
        .map_err(err)?;
        for r in &reports {
            for c in &r.checks {
                let (variant, q, n, d) = match &c.point {
                    Some(p) => (
                        serde_json::to_value(p.variant)
                            .ok()
                            .and_then(|v| v.as_str().map(String::from))
                            .unwrap_or_default(),
                        p.q.to_string(),
                        p.n.to_string(),
                        p.d.to_string(),
                    ),
                    None => Default::default(),
                };
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Flagged => "flagged",
                };
                let details =
                    serde_json::to_string(&c.details).map_err(|e| Failure::Check(e.to_string()))?;
                w.write_record([
                    r.suite.as_str(),
                    c.check.as_str(),
                    &variant,
                    &q,
                    &n,
                    &d,
                    status,
                    c.flag.as_deref().unwrap_or(""),
                    &details,
                ])
                .map_err(err)?;
            }
        }
        w.flush()?;
    } else if reports.len() == 1 {
        print_json(out, &reports[0])?;
    } else {
        print_json(out, &reports)?;
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
