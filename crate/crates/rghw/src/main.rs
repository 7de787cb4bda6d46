use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rghw::export::{codewords, codewords_text, field_for_size, gauss_table, FieldDump};
use rghw::parallel::Runner;
use rghw::report::{Format, TableDocument};
use rghw::verify::{self, Suite, VerifyConfig};
use rghw::{exit_code, DEFAULT_CAP};
use rghw_core::codes::{build_code, CodeSpec};
use rghw_core::rghw::{check_range, Route, SpecSummary};
use rghw_core::Error;

/// Relative generalized Hamming weights of cyclic codes with two nonzeros.
#[derive(Parser, Debug)]
#[command(name = "rghw", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute M_j for a range of j along the selected routes.
    Table(TableArgs),
    /// Like `table`, with per-route timings.
    Bench(TableArgs),
    /// Run the cross-validation suites.
    Verify(VerifyArgs),
    /// List Gauss sums G(chi^lambda; beta) of one field.
    Gauss(GaussArgs),
    /// Dump the tables of one field as JSON.
    Field(FieldArgs),
    /// List the codewords of C (or of the subcode).
    Codewords(CodewordArgs),
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, default_value_t = 2)]
    k1: u32,
    #[arg(long, default_value_t = 3)]
    k2: u32,
    #[arg(long, default_value_t = 1)]
    e1: u64,
    #[arg(long, default_value_t = 1)]
    e2: u64,
}

impl CodeArgs {
    fn build(&self) -> Result<CodeSpec, Error> {
        build_code(self.q, self.k1, self.k2, self.e1, self.e2)
    }
}

#[derive(Args, Debug, Clone)]
struct Output {
    #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum RouteArg {
    All,
    Bruteforce,
    Theorem1,
    Closed,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// A single j, a range `a-b`, or all of 1..k1 when omitted.
    #[arg(long)]
    j: Option<String>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    routes: Vec<RouteArg>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,
    /// Largest number of subspaces a single enumeration may visit.
    #[arg(long, env = "RGHW_CAP")]
    cap: Option<u128>,
    /// Report wall-clock milliseconds (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random subspaces drawn per instance in sampled checks.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Run only these suites (repeat or comma-separate).
    #[arg(long, value_delimiter = ',')]
    suite: Vec<Suite>,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, env = "RGHW_CAP")]
    cap: Option<u128>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct GaussArgs {
    #[arg(long)]
    q: u64,
    /// Only this character exponent; all of 0..q-1 otherwise.
    #[arg(long)]
    lambda: Option<u64>,
    /// Value encoding of beta.
    #[arg(long, default_value_t = 1)]
    beta: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct FieldArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum WordFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct CodewordArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Only the codewords of the subcode (b1 = 0).
    #[arg(long)]
    subcode: bool,
    #[arg(long, value_enum, default_value_t = WordFormat::Text)]
    format: WordFormat,
    #[arg(long, env = "RGHW_CAP")]
    cap: Option<u128>,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Core(Error),
    Usage(String),
    Disagreement,
    VerifyFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_j(spec: &CodeSpec, j: &Option<String>) -> Result<Vec<usize>, Failure> {
    let k1 = spec.k1() as usize;
    let bad = |s: &str| Failure::Usage(format!("invalid --j `{s}`"));
    let (lo, hi) = match j.as_deref() {
        None | Some("all") => (1, k1),
        Some(s) => match s.split_once('-') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad(s))?, b.trim().parse().map_err(|_| bad(s))?),
            None => {
                let x = s.trim().parse().map_err(|_| bad(s))?;
                (x, x)
            }
        },
    };
    if lo > hi {
        return Err(bad(j.as_deref().unwrap_or_default()));
    }
    check_range(spec, lo)?;
    check_range(spec, hi)?;
    Ok((lo..=hi).collect())
}

fn routes_of(args: &[RouteArg]) -> Vec<Route> {
    let mut out = Vec::new();
    for r in args {
        let add: &[Route] = match r {
            RouteArg::All => &Route::ALL,
            RouteArg::Bruteforce => &[Route::BruteForce],
            RouteArg::Theorem1 => &[Route::Theorem1],
            RouteArg::Closed => &[Route::ClosedForm],
        };
        for &x in add {
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

fn runner(workers: Option<usize>, cap: Option<u128>) -> Result<Runner, Failure> {
    let cap = cap.unwrap_or(DEFAULT_CAP);
    if cap == 0 {
        return Err(Failure::Usage("--cap must be positive".into()));
    }
    Runner::new(workers, cap).map_err(|e| Failure::Usage(e.to_string()))
}

fn cmd_table(args: &TableArgs, timing: bool) -> Result<(), Failure> {
    let spec = args.code.build()?;
    let js = parse_j(&spec, &args.j)?;
    let routes = routes_of(&args.routes);
    let runner = runner(args.workers, args.cap)?;
    let reports = js.iter().map(|&j| runner.report(&spec, j, &routes)).collect::<Result<Vec<_>, _>>()?;
    let doc = TableDocument::new(SpecSummary::of(&spec), &reports, &routes, timing);
    emit(&doc.render(args.output.format.into()), &args.output.out)?;
    if doc.all_agree() {
        Ok(())
    } else {
        Err(Failure::Disagreement)
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let runner = runner(args.workers, args.cap)?;
    let suites = if args.suite.is_empty() { Suite::ALL.to_vec() } else { args.suite.clone() };
    let cfg = VerifyConfig { seed: args.seed, samples: args.samples, suites, ..VerifyConfig::default() };
    let doc = verify::run(&cfg, &runner);
    let text = match args.output.format {
        FormatArg::Json => doc.to_json(),
        FormatArg::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for s in &doc.suites {
                w.serialize((s.suite.name(), s.checks, s.failures, s.max_residual, s.passed()))
                    .map_err(|e| Failure::Usage(e.to_string()))?;
            }
            let body = String::from_utf8(w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            format!("suite,checks,failures,max_residual,passed\n{body}")
        }
        FormatArg::Pretty => doc.to_pretty(),
    };
    emit(&text, &args.output.out)?;
    if doc.passed {
        Ok(())
    } else {
        Err(Failure::VerifyFailed)
    }
}

fn cmd_gauss(args: &GaussArgs) -> Result<(), Failure> {
    let rows = gauss_table(args.q, args.lambda, args.beta)?;
    let text = match args.output.format {
        FormatArg::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        FormatArg::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?)
                .map_err(|e| Failure::Usage(e.to_string()))?
        }
        FormatArg::Pretty => {
            let mut s = format!("{:>6} {:>6} {:>14} {:>14} {:>12}\n", "lambda", "beta", "re", "im", "modulus");
            for r in &rows {
                s.push_str(&format!("{:>6} {:>6} {:>14.9} {:>14.9} {:>12.9}\n", r.lambda, r.beta, r.re, r.im, r.modulus));
            }
            s
        }
    };
    emit(&text, &args.output.out)
}

fn cmd_field(args: &FieldArgs) -> Result<(), Failure> {
    let f = field_for_size(args.q)?;
    let text = serde_json::to_string(&FieldDump::of(&f)).expect("serializable") + "\n";
    emit(&text, &args.out)
}

fn cmd_codewords(args: &CodewordArgs) -> Result<(), Failure> {
    let spec = args.code.build()?;
    let rows = codewords(&spec, args.subcode, args.cap.unwrap_or(DEFAULT_CAP))?;
    let text = match args.format {
        WordFormat::Text => codewords_text(&rows),
        WordFormat::Json => serde_json::to_string(&rows).expect("serializable") + "\n",
    };
    emit(&text, &args.out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table(a) => cmd_table(a, a.timing),
        Command::Bench(a) => cmd_table(a, true),
        Command::Verify(a) => cmd_verify(a),
        Command::Gauss(a) => cmd_gauss(a),
        Command::Field(a) => cmd_field(a),
        Command::Codewords(a) => cmd_codewords(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Core(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Disagreement) => {
            eprintln!("error[RouteDisagreement]: routes returned different values");
            ExitCode::from(1)
        }
        Err(Failure::VerifyFailed) => ExitCode::from(1),
    }
}
