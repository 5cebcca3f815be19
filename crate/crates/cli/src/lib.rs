//! `pentapow` command-line front end.
//!
//! Exit codes: `0` success, `1` verification failure (or an I/O failure while
//! writing results), `2` usage error, `3` domain error.

pub mod bench;
pub mod literal;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use pentapow::oracle::{compare, determinant_corollary_check, naive_power};
use pentapow::spectrum::{eigenvalues_even, eigenvalues_odd};
use pentapow::sweep::{oracle_grid, sample_bands};
use pentapow::{MatrixSpec, Parity, PowerRequest, VerificationReport};
use thiserror::Error;

use crate::output::{EigenDocument, EigenEntry, OutputDocument, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] pentapow::Error),
    #[error("{0}")]
    DomainMsg(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::DomainMsg(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_VERIFY_FAILED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    #[value(name = "closed_form")]
    ClosedForm,
    #[value(name = "spectral")]
    Spectral,
    #[value(name = "oracle")]
    Oracle,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::ClosedForm => "closed_form",
            Route::Spectral => "spectral",
            Route::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn complex_arg(s: &str) -> Result<Complex64, String> {
    literal::parse_complex(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "pentapow",
    version,
    about = "Integer powers of pentadiagonal Toeplitz matrices with bands at offsets +/-2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute A^r and print it.
    Power(PowerArgs),
    /// List eigenvalues with multiplicities.
    Eig(EigArgs),
    /// Compare the closed form and spectral routes against the dense oracle.
    Verify(VerifyArgs),
    /// Check det(A_{4t}) = (i F_2(x))^{2t} with a = x, b = i.
    Det(DetArgs),
    /// Time the routes and emit a CSV table.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct BandArgs {
    /// Value on the +2 diagonal.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    a: Complex64,
    /// Value on the -2 diagonal.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    b: Complex64,
}

#[derive(Debug, Args)]
struct PowerArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: u64,
    #[command(flatten)]
    bands: BandArgs,
    #[arg(long, value_enum, default_value = "closed_form")]
    route: Route,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EigArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    bands: BandArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "sweep")]
    n: Option<usize>,
    #[arg(long, required_unless_present = "sweep")]
    r: Option<u64>,
    /// Defaults to a value drawn from --seed.
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    a: Option<Complex64>,
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    b: Option<Complex64>,
    /// Seed for sampled band values; first of five seeds with --sweep.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the full grid n = 3..=12, r = 1..=10 over five seeds.
    #[arg(long, conflicts_with_all = ["n", "r", "a", "b"])]
    sweep: bool,
    #[arg(long = "rel-tol", alias = "rel_tol", default_value_t = 1e-8)]
    rel_tol: f64,
}

#[derive(Debug, Args)]
struct DetArgs {
    #[arg(long)]
    t: usize,
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true)]
    x: Complex64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long = "n", value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long = "r", value_delimiter = ',', required = true)]
    r_list: Vec<u64>,
    #[arg(long = "route", value_enum, value_delimiter = ',', default_value = "closed_form")]
    route_list: Vec<Route>,
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true, default_value = "0.5")]
    a: Complex64,
    #[arg(long, value_parser = complex_arg, allow_hyphen_values = true, default_value = "0.5")]
    b: Complex64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the selected command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            let _ = writeln!(stderr, "{line}");
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Power(args) => cmd_power(args, stdout),
        Command::Eig(args) => cmd_eig(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
        Command::Det(args) => cmd_det(args, stdout),
        Command::Bench(args) => cmd_bench(args, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn cmd_power(args: PowerArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let spec = MatrixSpec::new(args.n, args.bands.a, args.bands.b)?;
    let req = PowerRequest::new(spec, args.r);
    let start = Instant::now();
    let m = bench::compute(args.route, &req)?;
    let elapsed_ns = start.elapsed().as_nanos();
    if !m.is_finite() {
        return Err(pentapow::Error::Overflow { n: args.n, r: args.r }.into());
    }
    let text = match args.format {
        Format::Json => output::to_json(&OutputDocument::new(
            args.n,
            args.r,
            args.bands.a,
            args.bands.b,
            &m,
            args.route.name(),
            elapsed_ns,
        )),
        Format::Csv => output::matrix_csv(&m),
        Format::Pretty => output::matrix_pretty(&m),
    };
    emit(&text, args.out.as_ref(), stdout)?;
    Ok(EXIT_OK)
}

pub fn eigen_document(spec: &MatrixSpec) -> EigenDocument {
    let (values, multiplicity) = match spec.parity() {
        Parity::Even => (eigenvalues_even(spec).expect("even"), 2),
        Parity::Odd => (eigenvalues_odd(spec).expect("odd"), 1),
    };
    let eigenvalues = values
        .into_iter()
        .enumerate()
        .map(|(k, z)| {
            let z = output::ComplexJson::from(z);
            EigenEntry { index: k + 1, re: z.re, im: z.im, multiplicity }
        })
        .collect();
    EigenDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        n: spec.n(),
        a: spec.a().into(),
        b: spec.b().into(),
        parity: spec.parity().as_str().to_string(),
        eigenvalues,
    }
}

fn cmd_eig(args: EigArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let spec = MatrixSpec::new(args.n, args.bands.a, args.bands.b)?;
    let doc = eigen_document(&spec);
    let text = match args.format {
        Format::Json => output::to_json(&doc),
        Format::Csv => output::eigen_csv(&doc),
        Format::Pretty => output::eigen_pretty(&doc),
    };
    emit(&text, args.out.as_ref(), stdout)?;
    Ok(EXIT_OK)
}

fn report_line(status_prefix: &str, spec: &MatrixSpec, r: u64, route: Route, rep: &VerificationReport) -> String {
    format!(
        "{} n={} r={} a={} b={} route={} max_abs={:e} max_rel={:e} worst=({},{}) tol={:e}",
        status_prefix,
        spec.n(),
        r,
        literal::format_complex(spec.a()),
        literal::format_complex(spec.b()),
        route.name(),
        rep.max_abs_deviation,
        rep.max_rel_deviation,
        rep.worst_index.0 + 1,
        rep.worst_index.1 + 1,
        rep.tolerance_used,
    )
}

fn verify_case(spec: &MatrixSpec, r: u64, rel_tol: f64, lines: &mut String) -> Result<bool, CliError> {
    let req = PowerRequest::new(spec.clone(), r);
    let reference = naive_power(spec, r);
    let mut all = true;
    for route in [Route::ClosedForm, Route::Spectral] {
        let rep = match bench::compute(route, &req) {
            Ok(m) => compare(&m, &reference, rel_tol)?,
            Err(pentapow::Error::Overflow { .. }) => VerificationReport {
                max_abs_deviation: f64::INFINITY,
                max_rel_deviation: f64::INFINITY,
                worst_index: (0, 0),
                passed: false,
                tolerance_used: rel_tol,
            },
            Err(e) => return Err(e.into()),
        };
        all &= rep.passed;
        lines.push_str(&report_line(if rep.passed { "PASS" } else { "FAIL" }, spec, r, route, &rep));
        lines.push('\n');
    }
    Ok(all)
}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if args.rel_tol.is_nan() || args.rel_tol <= 0.0 {
        return Err(pentapow::Error::BadTolerance(args.rel_tol).into());
    }
    let mut lines = String::new();
    let mut passed = 0usize;
    let mut total = 0usize;
    if args.sweep {
        for case in oracle_grid(args.seed) {
            total += 1;
            if verify_case(&case.spec, case.r, args.rel_tol, &mut lines)? {
                passed += 1;
            }
        }
    } else {
        let (sa, sb) = sample_bands(args.seed);
        let n = args.n.expect("clap enforces --n");
        let r = args.r.expect("clap enforces --r");
        let spec = MatrixSpec::new(n, args.a.unwrap_or(sa), args.b.unwrap_or(sb))?;
        total = 1;
        if verify_case(&spec, r, args.rel_tol, &mut lines)? {
            passed = 1;
        }
    }
    let ok = passed == total;
    lines.push_str(&format!("{} {passed}/{total} cases passed\n", if ok { "PASS" } else { "FAIL" }));
    emit(&lines, None, stdout)?;
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_det(args: DetArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if args.t == 0 {
        return Err(CliError::DomainMsg("t must be at least 1".into()));
    }
    if args.x.re == 0.0 && args.x.im == 0.0 {
        return Err(pentapow::Error::ZeroBand("x").into());
    }
    let check = determinant_corollary_check(args.t, args.x)?;
    let text = format!(
        "n = {}\nlu_determinant = {}\nformula = {}\nmax_abs_deviation = {:e}\nmax_rel_deviation = {:e}\n{}\n",
        check.n,
        literal::format_complex(check.lu_determinant),
        literal::format_complex(check.formula_value),
        check.report.max_abs_deviation,
        check.report.max_rel_deviation,
        if check.report.passed { "PASS" } else { "FAIL" },
    );
    emit(&text, None, stdout)?;
    Ok(if check.report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_bench(args: BenchArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if args.repeats < 3 {
        return Err(CliError::DomainMsg(format!("--repeats must be at least 3, got {}", args.repeats)));
    }
    if let Some(&n) = args.n_list.iter().find(|&&n| n < 3) {
        return Err(pentapow::Error::OrderTooSmall(n).into());
    }
    let rows = bench::run(&args.n_list, &args.r_list, &args.route_list, args.repeats, args.a, args.b)?;
    let text = match args.format {
        Format::Json => output::to_json(&rows),
        Format::Csv | Format::Pretty => bench::to_csv(&rows),
    };
    emit(&text, args.out.as_ref(), stdout)?;
    Ok(EXIT_OK)
}
