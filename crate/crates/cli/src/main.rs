//! `siegel`: compute, inspect and verify Fourier expansions of degree 2
//! Siegel modular forms.
//!
//! Exit codes: 0 on success, 1 when a computation fails or a check does not
//! hold, 2 on invalid flags.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use siegel_core::arith::{is_prime, to_display_string};
use siegel_core::eigen::{
    default_witnesses, eigenvalue_direct, eigenvalue_thm12, eigenvalue_thm13, suites, Eigenvalue, ParamValue,
    VerificationReport,
};
use siegel_core::fourier::{cusp_form_10, cusp_form_12, eisenstein, read_expansion, write_expansion};
use siegel_core::hecke::{andrianov_coeff, apply_hecke, HeckeIndex, DEFAULT_MAX_DELTA};
use siegel_core::{Error, HalfIntegralForm, SiegelExpansion};

#[derive(Parser)]
#[command(name = "siegel", version, about = "Exact Fourier expansions and Hecke operators for degree 2 Siegel modular forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormKind {
    Eisenstein,
    Cusp10,
    Cusp12,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Thm12,
    Thm13,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Mult,
    Corollaries,
    Cosets,
    Constructions,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an expansion and write it to a file.
    Expand {
        #[arg(long, value_enum)]
        form: FormKind,
        /// Weight of the Eisenstein series (even, at least 4).
        #[arg(long)]
        weight: Option<u32>,
        #[arg(long)]
        max_trace: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print one coefficient, looked up through reduction.
    Coeff {
        file: PathBuf,
        /// Index as r,b,s for the matrix [[r, b/2], [b/2, s]].
        #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
        index: HalfIntegralFormArg,
    },
    /// Apply T(p^delta): print one coefficient or write the whole image.
    #[command(group(ArgGroup::new("target").required(true).args(["index", "out"])))]
    Hecke {
        file: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        delta: u32,
        #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
        index: Option<HalfIntegralFormArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hecke eigenvalue of index p^delta.
    Eigenvalue {
        file: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        delta: u32,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        /// Witnesses for the direct method; defaults to every computable class.
        #[arg(long = "witness", value_parser = parse_index, allow_hyphen_values = true)]
        witnesses: Vec<HalfIntegralFormArg>,
    },
    /// Run verification suites and write a JSON report.
    Verify {
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random corollary instances per file.
        #[arg(long, default_value_t = 120)]
        count: usize,
        #[arg(long, default_value = "verify-report.json")]
        report: PathBuf,
    },
}

/// `(r, b, s)` as parsed from the command line, validated later so that the
/// error is reported as a computation error.
#[derive(Clone, Copy, Debug)]
struct HalfIntegralFormArg(i64, i64, i64);

fn parse_index(s: &str) -> Result<HalfIntegralFormArg, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [r, b, s] = parts.as_slice() else {
        return Err(format!("expected r,b,s, got {s:?}"));
    };
    let num = |t: &str| t.parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok(HalfIntegralFormArg(num(r)?, num(b)?, num(s)?))
}

impl HalfIntegralFormArg {
    fn form(self) -> Result<HalfIntegralForm, Error> {
        HalfIntegralForm::new(self.0, self.1, self.2)
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type CliResult = Result<ExitCode, Failure>;

fn check_weight(k: u32) -> Result<(), Failure> {
    if k < 4 || k % 2 == 1 {
        return Err(Failure::Usage(format!("weight must be even ≥ 4, got {k}")));
    }
    Ok(())
}

fn check_index(p: u64, delta: u32) -> Result<HeckeIndex, Failure> {
    if !is_prime(p) {
        return Err(Failure::Usage(format!("p must be prime, got {p}")));
    }
    if delta == 0 || delta > DEFAULT_MAX_DELTA {
        return Err(Failure::Usage(format!("delta must be in 1..={DEFAULT_MAX_DELTA}, got {delta}")));
    }
    HeckeIndex::new(p, delta).map_err(Failure::from)
}

fn load(path: &Path) -> Result<SiegelExpansion, Failure> {
    read_expansion(path).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))
}

fn expand(form: FormKind, weight: Option<u32>, max_trace: u64, out: &Path) -> CliResult {
    let f = match form {
        FormKind::Eisenstein => {
            let k = weight.ok_or_else(|| Failure::Usage("--weight is required for --form eisenstein".into()))?;
            check_weight(k)?;
            eisenstein(k, max_trace)?
        }
        FormKind::Cusp10 | FormKind::Cusp12 => {
            let k = if matches!(form, FormKind::Cusp10) { 10 } else { 12 };
            if let Some(w) = weight.filter(|&w| w != k) {
                return Err(Failure::Usage(format!("the cusp form of this kind has weight {k}, not {w}")));
            }
            if max_trace < 2 {
                return Err(Failure::Usage("cusp forms need --max-trace ≥ 2".into()));
            }
            if k == 10 {
                cusp_form_10(max_trace)?
            } else {
                cusp_form_12(max_trace)?
            }
        }
    };
    write_expansion(out, &f)?;
    println!(
        "weight {}, max_trace {}, {} classes -> {}",
        f.weight(),
        f.max_trace(),
        f.classes().len(),
        out.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn coeff(file: &Path, index: HalfIntegralFormArg) -> CliResult {
    let n = index.form()?;
    let f = load(file)?;
    println!("{}", to_display_string(&f.get(&n)?));
    Ok(ExitCode::SUCCESS)
}

fn hecke(file: &Path, p: u64, delta: u32, index: Option<HalfIntegralFormArg>, out: Option<&Path>) -> CliResult {
    let idx = check_index(p, delta)?;
    let f = load(file)?;
    if let Some(index) = index {
        let n = index.form()?;
        println!("{}", to_display_string(&andrianov_coeff(&f, &idx, &n)?));
    }
    if let Some(out) = out {
        let g = apply_hecke(&f, &idx);
        write_expansion(out, &g)?;
        println!(
            "T({idx}) applied: weight {}, max_trace {} (from {}), {} classes -> {}",
            g.weight(),
            g.max_trace(),
            f.max_trace(),
            g.classes().len(),
            out.display()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run_method(f: &SiegelExpansion, idx: &HeckeIndex, method: Method, witnesses: &[HalfIntegralForm]) -> Result<Eigenvalue, Error> {
    match method {
        Method::Direct => {
            let defaults;
            let ws = if witnesses.is_empty() {
                defaults = default_witnesses(f, idx);
                &defaults[..]
            } else {
                witnesses
            };
            eigenvalue_direct(f, idx.p(), idx.delta(), ws)
        }
        Method::Thm12 => eigenvalue_thm12(f, idx.p(), idx.delta()),
        Method::Thm13 => {
            if f.get(&HalfIntegralForm::ZERO)?.is_zero() {
                return Err(Error::Precondition("a(0) = 0".into()));
            }
            eigenvalue_thm13(f.weight(), idx.p(), idx.delta())
        }
        Method::All => unreachable!("expanded by the caller"),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Direct => "direct",
        Method::Thm12 => "thm12",
        Method::Thm13 => "thm13",
        Method::All => "all",
    }
}

fn show(e: &Eigenvalue) -> String {
    let mut s = to_display_string(&e.value);
    if !e.is_integral() {
        s.push_str(" (non-integral)");
    }
    s
}

fn eigenvalue(file: &Path, p: u64, delta: u32, method: Method, witnesses: &[HalfIntegralFormArg]) -> CliResult {
    let idx = check_index(p, delta)?;
    if matches!(method, Method::Thm12 | Method::Thm13) && delta > 2 {
        return Err(Failure::Usage(format!("--method {} needs --delta 1 or 2", method_name(method))));
    }
    let witnesses = witnesses.iter().map(|w| w.form()).collect::<Result<Vec<_>, _>>()?;
    let f = load(file)?;
    if method != Method::All {
        println!("{}", show(&run_method(&f, &idx, method, &witnesses)?));
        return Ok(ExitCode::SUCCESS);
    }
    let mut values = Vec::new();
    for m in [Method::Direct, Method::Thm12, Method::Thm13] {
        if m != Method::Direct && delta > 2 {
            println!("{:<7} n/a (delta > 2)", method_name(m));
            continue;
        }
        match run_method(&f, &idx, m, &witnesses) {
            Ok(e) => {
                println!("{:<7} {}", method_name(m), show(&e));
                values.push(e.value);
            }
            Err(e) => println!("{:<7} n/a ({e})", method_name(m)),
        }
    }
    if values.is_empty() {
        return Err(Failure::Compute("no method applies".into()));
    }
    if values.windows(2).all(|w| w[0] == w[1]) {
        println!("consistent");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("inconsistent");
        Ok(ExitCode::FAILURE)
    }
}

fn tag(file: &Path, reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    let name = file.display().to_string();
    reports
        .into_iter()
        .map(|mut r| {
            r.params.insert(0, ("file".into(), ParamValue::Text(name.clone())));
            r
        })
        .collect()
}

fn verify(files: &[PathBuf], suite: Suite, seed: u64, count: usize, report: &Path) -> CliResult {
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if files.is_empty() && matches!(suite, Suite::Mult | Suite::Corollaries) {
        return Err(Failure::Usage("this suite needs at least one expansion file".into()));
    }
    let forms = files
        .iter()
        .map(|p| load(p).map(|f| (p, f)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut reports = Vec::new();
    // A suite that cannot finish (e.g. a file that is not an eigenform) is
    // a failure of that suite, not of the whole run.
    let mut aborted = Vec::new();
    let mut collect = |label: String, outcome: Result<Vec<VerificationReport>, Error>| match outcome {
        Ok(rs) => reports.extend(rs),
        Err(e) => aborted.push(format!("FAIL {label}: {e}")),
    };
    if wants(Suite::Cosets) {
        collect("cosets".into(), Ok(suites::cosets()));
    }
    if wants(Suite::Constructions) {
        collect("constructions".into(), suites::constructions());
    }
    for (path, f) in &forms {
        if wants(Suite::Mult) {
            collect(format!("mult [file={}]", path.display()), suites::mult(f).map(|r| tag(path, r)));
        }
        if wants(Suite::Corollaries) {
            let outcome = suites::corollaries(f, seed, count).map(|r| tag(path, r));
            collect(format!("corollaries [file={}]", path.display()), outcome);
        }
    }

    let mut table = String::new();
    for r in &reports {
        writeln!(table, "{r}").expect("writing to a String");
    }
    for line in &aborted {
        writeln!(table, "{line}").expect("writing to a String");
    }
    print!("{table}");
    let failed = reports.iter().filter(|r| !r.pass).count() + aborted.len();
    let json = serde_json::to_string_pretty(&reports).expect("reports serialize");
    fs::write(report, json + "\n").map_err(|e| Failure::Compute(format!("{}: {e}", report.display())))?;
    println!(
        "{} of {} checks passed; report written to {}",
        reports.len() + aborted.len() - failed,
        reports.len() + aborted.len(),
        report.display()
    );
    Ok(if failed == 0 && !reports.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Expand {
            form,
            weight,
            max_trace,
            out,
        } => expand(form, weight, max_trace, &out),
        Command::Coeff { file, index } => coeff(&file, index),
        Command::Hecke {
            file,
            p,
            delta,
            index,
            out,
        } => hecke(&file, p, delta, index, out.as_deref()),
        Command::Eigenvalue {
            file,
            p,
            delta,
            method,
            witnesses,
        } => eigenvalue(&file, p, delta, method, &witnesses),
        Command::Verify {
            files,
            suite,
            seed,
            count,
            report,
        } => verify(&files, suite, seed, count, &report),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
