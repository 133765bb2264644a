//! `hankel`: exact Hankel determinants, factorizations, inverses, and
//! orthogonal polynomials for the Hilbert-type and harmonic-number moment
//! families, plus the verification suites that cross-check every closed
//! form against a fraction-free elimination oracle.
//!
//! Exit codes: 0 all requested checks pass, 1 a verification or
//! computation failed (disagreeing routes, singular matrix), 2 usage
//! error, 3 internal invariant violation.

mod output;
mod suites;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use hankel_core::closed_forms::{
    generalized_det_closed, hilbert_det_closed, inverse_generalized_matrix, inverse_hilbert_matrix,
    shifted_legendre,
};
use hankel_core::elimination::{det_oracle, invert_oracle};
use hankel_core::harmonic::{conjecture_scan, harmonic_hankel_det, r_direct, r_recurrence};
use hankel_core::stieltjes::{
    factorize, hankel_det, hankel_matrix, kernel_inverse, orthogonal_poly,
};
use hankel_core::{HankelError, MomentFamily, MomentKind, Rational};
use output::{approx_cell, rat_cell, render_matrix, to_json_pretty, Format, Table};
use serde_json::{json, Map, Value};
use std::ops::RangeInclusive;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hankel",
    version,
    about = "Exact Hankel determinants, factorizations, and inverses \
             for Hilbert-type and harmonic moment sequences"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Add an approximate decimal column (labeled approx; exact values stay exact).
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hankel determinants by one or more routes.
    Det(DetArgs),
    /// Exact inverse of the Hankel matrix.
    Inverse(InverseArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// The harmonic r-sequence by direct sum and by recurrence.
    Rseq(RseqArgs),
    /// Coefficients of a monic orthogonal polynomial.
    Orthopoly(OrthopolyArgs),
    /// Integrality scan for the inverse-matrix conjecture.
    Conjecture(ConjectureArgs),
    /// Dump the A D A^T factorization.
    Factorize(FactorizeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hilbert,
    Generalized,
    Harmonic,
}

#[derive(Args)]
struct KindArgs {
    /// Moment family.
    #[arg(long, value_enum)]
    family: Family,

    /// Parameter t, an exact rational like "2", "1/3", or "-1/2".
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    t: Rational,

    /// Parameter s (the hilbert family fixes s = 1).
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    s: Rational,
}

impl KindArgs {
    fn kind(&self) -> Result<MomentKind, CliError> {
        let family = match self.family {
            Family::Hilbert => MomentFamily::Hilbert,
            Family::Generalized => MomentFamily::Generalized,
            Family::Harmonic => MomentFamily::Harmonic,
        };
        MomentKind::new(family, self.t.clone(), self.s.clone())
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Args)]
#[command(group = ArgGroup::new("route")
    .required(true)
    .multiple(true)
    .args(["closed", "factor", "oracle", "all"]))]
struct DetArgs {
    #[command(flatten)]
    kind: KindArgs,

    /// Order range "a..b" (inclusive) or a single order "n".
    #[arg(long)]
    n: String,

    /// Closed-form route.
    #[arg(long)]
    closed: bool,

    /// Product of the factorization diagonal (needs a three-term recurrence).
    #[arg(long)]
    factor: bool,

    /// Fraction-free elimination oracle.
    #[arg(long)]
    oracle: bool,

    /// Every route available for the family, plus an agree column.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
#[command(group = ArgGroup::new("route")
    .required(true)
    .args(["closed", "kernel", "oracle"]))]
struct InverseArgs {
    #[command(flatten)]
    kind: KindArgs,

    /// Matrix order n; the matrix is (n+1) x (n+1).
    #[arg(long)]
    n: usize,

    /// Closed-form entries (hilbert or generalized, t = 1 only).
    #[arg(long)]
    closed: bool,

    /// Kernel sum over the orthogonal polynomials.
    #[arg(long)]
    kernel: bool,

    /// Gauss-Jordan elimination oracle.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
#[command(group = ArgGroup::new("what").required(true).args(["suite", "all"]))]
struct VerifyArgs {
    /// Run a single suite by name.
    #[arg(long)]
    suite: Option<String>,

    /// Run every suite.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct RseqArgs {
    /// Parameter t.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    t: Rational,

    /// Parameter s.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    s: Rational,

    /// Largest index to print.
    #[arg(long)]
    nmax: usize,
}

#[derive(Args)]
struct OrthopolyArgs {
    #[command(flatten)]
    kind: KindArgs,

    /// Polynomial degree.
    #[arg(long)]
    n: usize,

    /// Emit the integer-coefficient scaled polynomial (hilbert only).
    #[arg(long)]
    scaled: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Largest order scanned; the scan starts at n = 1.
    #[arg(long)]
    nmax: usize,
}

#[derive(Args)]
struct FactorizeArgs {
    #[command(flatten)]
    kind: KindArgs,

    /// Matrix order n.
    #[arg(long)]
    n: usize,
}

enum CliError {
    /// Bad arguments or an unsupported route/family combination: exit 2.
    Usage(String),
    /// A requested check failed; the report is already on stdout: exit 1.
    Check(String),
    /// A structured computational error (singular matrix, vanishing
    /// leading determinant): exit 1.
    Compute(HankelError),
}

/// Parameter validation surfaces as a usage error; genuine computational
/// failure keeps its structure.
impl From<HankelError> for CliError {
    fn from(e: HankelError) -> Self {
        match e {
            HankelError::InvalidParameter(_) | HankelError::UnsupportedFamily { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Compute(other),
        }
    }
}

fn error_kind(e: &HankelError) -> &'static str {
    match e {
        HankelError::NotSquare { .. } => "not-square",
        HankelError::Singular { .. } => "singular",
        HankelError::VanishingDeterminant { .. } => "vanishing-determinant",
        HankelError::UnsupportedFamily { .. } => "unsupported-family",
        HankelError::InvalidParameter(_) => "invalid-parameter",
        HankelError::IndexOutOfRange { .. } => "index-out-of-range",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(CliError::Check(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(CliError::Compute(e))) => {
            if cli.format == Format::Json {
                let body = json!({"error": {"kind": error_kind(&e), "message": e.to_string()}});
                print!("{}", to_json_pretty(&body));
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(_) => {
            eprintln!("error: internal invariant violated");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Det(args) => cmd_det(cli, args),
        Command::Inverse(args) => cmd_inverse(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Rseq(args) => cmd_rseq(cli, args),
        Command::Orthopoly(args) => cmd_orthopoly(cli, args),
        Command::Conjecture(args) => cmd_conjecture(cli, args),
        Command::Factorize(args) => cmd_factorize(cli, args),
    }
}

/// "a..b" inclusive, or a single "n".
fn parse_range(spec: &str) -> Result<RangeInclusive<usize>, CliError> {
    let parse_end = |part: &str| {
        part.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "invalid order {part:?} in {spec:?}; ranges are inclusive \"a..b\""
            ))
        })
    };
    if let Some((a, b)) = spec.split_once("..") {
        let (a, b) = (parse_end(a)?, parse_end(b)?);
        if a > b {
            return Err(CliError::Usage(format!("empty range {spec:?}")));
        }
        Ok(a..=b)
    } else {
        let n = parse_end(spec)?;
        Ok(n..=n)
    }
}

fn cmd_det(cli: &Cli, args: &DetArgs) -> Result<(), CliError> {
    let kind = args.kind.kind()?;
    let range = parse_range(&args.n)?;
    let has_factor_route = kind.family() != MomentFamily::Harmonic;
    if args.factor && !has_factor_route {
        return Err(CliError::Usage(
            "the factor route needs a three-term recurrence; the harmonic family has none \
             (use --closed, --oracle, or --all)"
                .to_owned(),
        ));
    }
    let use_closed = args.closed || args.all;
    let use_factor = (args.factor || args.all) && has_factor_route;
    let use_oracle = args.oracle || args.all;

    let mut columns = vec!["n"];
    if use_closed {
        columns.push("closed");
    }
    if use_factor {
        columns.push("factor");
    }
    if use_oracle {
        columns.push("oracle");
    }
    if cli.decimal {
        columns.push("approx");
    }
    if args.all {
        columns.push("agree");
    }

    let mut table = Table::new(columns);
    let mut all_agree = true;
    for n in range {
        let mut values: Vec<Rational> = Vec::new();
        let mut row: Vec<Value> = vec![json!(n)];
        if use_closed {
            let v = match kind.family() {
                MomentFamily::Hilbert => hilbert_det_closed(n, kind.t()),
                MomentFamily::Generalized => generalized_det_closed(n, kind.t(), kind.s()),
                MomentFamily::Harmonic => harmonic_hankel_det(n, kind.t(), kind.s()),
            };
            row.push(rat_cell(&v));
            values.push(v);
        }
        if use_factor {
            let v = hankel_det(&kind, n)?;
            row.push(rat_cell(&v));
            values.push(v);
        }
        if use_oracle {
            let v = det_oracle(&hankel_matrix(&kind, n))?;
            row.push(rat_cell(&v));
            values.push(v);
        }
        if cli.decimal {
            row.push(approx_cell(&values[0]));
        }
        if args.all {
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            all_agree &= agree;
            row.push(json!(agree));
        }
        table.push(row);
    }
    print!("{}", table.render(cli.format));
    if args.all && !all_agree {
        return Err(CliError::Check(
            "determinant routes disagree; see the agree column".to_owned(),
        ));
    }
    Ok(())
}

fn cmd_inverse(cli: &Cli, args: &InverseArgs) -> Result<(), CliError> {
    let kind = args.kind.kind()?;
    let n = args.n;
    let (route, matrix) = if args.closed {
        if kind.t() != &Rational::one() {
            return Err(CliError::Usage(
                "the closed inverse is stated at t = 1".to_owned(),
            ));
        }
        let m = match kind.family() {
            MomentFamily::Hilbert => inverse_hilbert_matrix(n),
            MomentFamily::Generalized => inverse_generalized_matrix(n, kind.s()),
            MomentFamily::Harmonic => {
                return Err(CliError::Usage(
                    "no closed inverse for the harmonic family (use --oracle)".to_owned(),
                ))
            }
        };
        ("closed", m)
    } else if args.kernel {
        ("kernel", kernel_inverse(&kind, n)?)
    } else {
        ("oracle", invert_oracle(&hankel_matrix(&kind, n))?)
    };
    let meta = [
        ("family", json!(kind.family().name())),
        ("t", rat_cell(kind.t())),
        ("s", rat_cell(kind.s())),
        ("n", json!(n)),
        ("route", json!(route)),
    ];
    print!("{}", render_matrix(&meta, &matrix, cli.format, cli.decimal));
    Ok(())
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<(), CliError> {
    let outcomes = if args.all {
        suites::run_all()
    } else {
        let name = args.suite.as_deref().expect("clap group");
        vec![suites::run_suite(name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown suite {name:?}; available: {}",
                suites::SUITE_NAMES.join(", ")
            ))
        })?]
    };

    let failed = outcomes.iter().filter(|o| !o.pass).count();
    let findings: Vec<&String> = outcomes.iter().flat_map(|o| &o.findings).collect();
    match cli.format {
        Format::Text => {
            for o in &outcomes {
                let status = if o.pass { "pass" } else { "FAIL" };
                println!(
                    "{:<14} {status}  {:>4} cases  {}",
                    o.name, o.cases, o.detail
                );
                if let Some(cx) = &o.counterexample {
                    println!("{:14} counterexample: {cx}", "");
                }
            }
            if !findings.is_empty() {
                println!("transcription findings:");
                for line in &findings {
                    println!("  {line}");
                }
            }
            if failed == 0 {
                println!("result: all {} suites pass", outcomes.len());
            } else {
                println!("result: {failed} of {} suites fail", outcomes.len());
            }
        }
        Format::Csv => {
            let mut table = Table::new(vec!["suite", "pass", "cases", "detail", "counterexample"]);
            for o in &outcomes {
                table.push(vec![
                    json!(o.name),
                    json!(o.pass),
                    json!(o.cases),
                    json!(o.detail),
                    o.counterexample.as_ref().map_or(Value::Null, |c| json!(c)),
                ]);
            }
            print!("{}", table.render(Format::Csv));
        }
        Format::Json => {
            let suites: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "suite": o.name,
                        "pass": o.pass,
                        "cases": o.cases,
                        "detail": o.detail,
                        "counterexample": o.counterexample,
                    })
                })
                .collect();
            let body = json!({
                "suites": suites,
                "findings": findings,
                "pass": failed == 0,
            });
            print!("{}", to_json_pretty(&body));
        }
    }
    if failed > 0 {
        return Err(CliError::Check(format!("{failed} suite(s) failed")));
    }
    Ok(())
}

fn cmd_rseq(cli: &Cli, args: &RseqArgs) -> Result<(), CliError> {
    // Same parameter domain as the harmonic family itself.
    MomentKind::harmonic(args.t.clone(), args.s.clone()).map_err(CliError::from)?;
    let by_recurrence = r_recurrence(args.nmax, &args.t, &args.s);
    let mut columns = vec!["n", "direct", "recurrence"];
    if cli.decimal {
        columns.push("approx");
    }
    columns.push("agree");
    let mut table = Table::new(columns);
    let mut all_agree = true;
    for (n, rec) in by_recurrence.iter().enumerate() {
        let direct = r_direct(n, &args.t, &args.s);
        let agree = &direct == rec;
        all_agree &= agree;
        let mut row = vec![json!(n), rat_cell(&direct), rat_cell(rec)];
        if cli.decimal {
            row.push(approx_cell(&direct));
        }
        row.push(json!(agree));
        table.push(row);
    }
    print!("{}", table.render(cli.format));
    if !all_agree {
        return Err(CliError::Check(
            "direct sum and recurrence disagree; see the agree column".to_owned(),
        ));
    }
    Ok(())
}

fn cmd_orthopoly(cli: &Cli, args: &OrthopolyArgs) -> Result<(), CliError> {
    let kind = args.kind.kind()?;
    if args.scaled && kind.family() != MomentFamily::Hilbert {
        return Err(CliError::Usage(
            "the scaled polynomial is defined for the hilbert family only".to_owned(),
        ));
    }
    let poly = if args.scaled {
        shifted_legendre(args.n, kind.t())
    } else {
        orthogonal_poly(&kind, args.n)?
    };
    let coeffs = poly.coeffs();
    match cli.format {
        Format::Text => {
            let body = coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            println!("[{body}]");
            if cli.decimal {
                let approx = coeffs
                    .iter()
                    .map(|c| format!("{:.6}", c.to_f64()))
                    .collect::<Vec<_>>()
                    .join(", ");
                println!("approx: [{approx}]");
            }
        }
        Format::Csv => {
            let mut columns = vec!["k", "coeff"];
            if cli.decimal {
                columns.push("approx");
            }
            let mut table = Table::new(columns);
            for (k, c) in coeffs.iter().enumerate() {
                let mut row = vec![json!(k), rat_cell(c)];
                if cli.decimal {
                    row.push(approx_cell(c));
                }
                table.push(row);
            }
            print!("{}", table.render(Format::Csv));
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("family".to_owned(), json!(kind.family().name()));
            obj.insert("t".to_owned(), rat_cell(kind.t()));
            obj.insert("s".to_owned(), rat_cell(kind.s()));
            obj.insert("n".to_owned(), json!(args.n));
            obj.insert("scaled".to_owned(), json!(args.scaled));
            obj.insert(
                "coeffs".to_owned(),
                Value::Array(coeffs.iter().map(rat_cell).collect()),
            );
            if cli.decimal {
                obj.insert(
                    "approx".to_owned(),
                    Value::Array(coeffs.iter().map(approx_cell).collect()),
                );
            }
            print!("{}", to_json_pretty(&Value::Object(obj)));
        }
    }
    Ok(())
}

fn cmd_conjecture(cli: &Cli, args: &ConjectureArgs) -> Result<(), CliError> {
    let reports = conjecture_scan(args.nmax)?;
    let mut columns = vec!["n", "U_n", "holds", "witness"];
    if cli.decimal {
        columns.push("approx");
    }
    let mut table = Table::new(columns);
    let mut all_hold = true;
    for report in &reports {
        all_hold &= report.holds;
        let witness = report.witness.as_ref().map_or(Value::Null, |w| {
            json!(format!("i={} j={} entry={}", w.i, w.j, w.entry))
        });
        let mut row = vec![
            json!(report.n),
            json!(report.u_n.to_string()),
            json!(report.holds),
            witness,
        ];
        if cli.decimal {
            row.push(approx_cell(&Rational::from_integer(report.u_n.clone())));
        }
        table.push(row);
    }
    print!("{}", table.render(cli.format));
    if !all_hold {
        return Err(CliError::Check(
            "the integrality conjecture fails in the scanned range".to_owned(),
        ));
    }
    Ok(())
}

fn cmd_factorize(cli: &Cli, args: &FactorizeArgs) -> Result<(), CliError> {
    let kind = args.kind.kind()?;
    let f = factorize(&kind, args.n)?;
    match cli.format {
        Format::Text => {
            println!(
                "family={} t={} s={} n={}",
                kind.family().name(),
                kind.t(),
                kind.s(),
                args.n
            );
            println!("A =");
            print!("{}", f.a());
            let diag = f
                .d_diag()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            println!("D = [{diag}]");
        }
        Format::Csv => {
            return Err(CliError::Usage(
                "factorize has no csv form; use --format json or text".to_owned(),
            ));
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("family".to_owned(), json!(kind.family().name()));
            obj.insert("t".to_owned(), rat_cell(kind.t()));
            obj.insert("s".to_owned(), rat_cell(kind.s()));
            obj.insert("n".to_owned(), json!(args.n));
            let fact = serde_json::to_value(&f).expect("factorization serialization cannot fail");
            if let Value::Object(entries) = fact {
                obj.extend(entries);
            }
            print!("{}", to_json_pretty(&Value::Object(obj)));
        }
    }
    Ok(())
}
