use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qbinpos::harness::{
    crosscheck_theorems, reproduce_corollary10, reproduce_lemma6, reproduce_remark25, reproduce_stanton,
    stanton_matches, sweep_conjecture1, sweep_fake_gaussian, verify_fake_gaussian, verify_quotient, CheckOptions,
    SamplingRanges, SweepOptions, SweepReport, Template, Verdict,
};
use qbinpos::SweepError;
use qbinpos_cli::exit;
use qbinpos_cli::input::{self, SpecInput};
use qbinpos_cli::report::{ReportBody, ReportDocument};

/// Relative checkpoint paths are resolved against this directory when set.
const CHECKPOINT_DIR_ENV: &str = "QBINPOS_CHECKPOINT_DIR";

#[derive(Parser)]
#[command(
    name = "qbinpos",
    version,
    about = "Exact positivity checks for quotients of q-binomial coefficients and fake Gaussian products",
    after_help = "Exit status: 0 ok, 1 violation or mismatch, 2 usage error, 3 checkpoint or I/O failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one quotient [n choose k]_q / [n choose l]_q, one fake Gaussian product, or a batch file.
    Check(CheckArgs),
    /// Run a parameter sweep.
    Sweep {
        #[command(subcommand)]
        kind: SweepKind,
    },
    /// Run a named reproduction with known expected values.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Human,
    Json,
    Jsonl,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("what").required(true).args(["n", "fake_gaussian", "batch"])))]
struct CheckArgs {
    /// n, k and l with k, l <= n.
    #[arg(num_args = 3, value_names = ["N", "K", "L"])]
    n: Option<Vec<u64>>,
    /// m and a comma-separated sequence a_1,...,a_n.
    #[arg(long, num_args = 2, value_names = ["M", "SEQ"], conflicts_with_all = ["n", "batch"])]
    fake_gaussian: Option<Vec<String>>,
    /// File with one spec per line (`n k l` or `m a1,a2,...`).
    #[arg(long, conflicts_with = "n")]
    batch: Option<PathBuf>,
    /// Print every coefficient.
    #[arg(long)]
    expand: bool,
    /// Report reciprocity, unimodality, order and degree.
    #[arg(long)]
    properties: bool,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args, Clone)]
struct SweepCommon {
    /// Worker threads; 0 uses every logical CPU. Reports do not depend on it.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Checkpoint file, rewritten after every chunk.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from --checkpoint if it exists.
    #[arg(long, requires = "checkpoint")]
    resume: bool,
    #[arg(long, value_enum, default_value_t = SweepFormat::Human)]
    format: SweepFormat,
    /// Omit wall time so reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
    /// Use the full-scale defaults (hours to days) instead of desk-scale ones.
    #[arg(long)]
    long_run: bool,
    /// Stop after this many chunks (simulates an interruption).
    #[arg(long, hide = true)]
    stop_after_chunks: Option<usize>,
    /// Units per chunk.
    #[arg(long, hide = true, default_value_t = qbinpos::harness::sweep::DEFAULT_CHUNK_SIZE)]
    chunk_size: usize,
}

#[derive(Subcommand)]
enum SweepKind {
    /// All 1 <= l < k <= n/2 for n <= N (default 150; 400 with --long-run).
    Conjecture1 {
        #[arg(long)]
        n_max: Option<u64>,
        #[command(flatten)]
        common: SweepCommon,
    },
    /// Random fake Gaussian products from a palindromic template.
    FakeGaussian {
        /// One of a, aa, aba, abba, abcba (each padded by 0^s on both sides).
        #[arg(long, value_parser = parse_template)]
        template: Template,
        #[arg(long)]
        seed: u64,
        /// Default 10000; 100000 with --long-run.
        #[arg(long)]
        samples: Option<u64>,
        /// m ranges over [max(s,1), s + span]; default 200, 1000 with --long-run.
        #[arg(long)]
        m_span: Option<u64>,
        #[arg(long, default_value_t = 10)]
        s_max: u64,
        #[arg(long, default_value_t = 10)]
        value_max: u64,
        #[command(flatten)]
        common: SweepCommon,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Reproduction {
    Remark25,
    Stanton,
    Corollary10,
    Lemma6,
    Crosscheck,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(value_enum)]
    name: Reproduction,
    /// Worker threads; 0 uses every logical CPU.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Larger ranges: stanton to m = 200.
    #[arg(long)]
    long_run: bool,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Omit wall time from sweep-backed reproductions.
    #[arg(long)]
    no_timing: bool,
}

fn parse_template(s: &str) -> Result<Template, String> {
    Template::parse(s).ok_or_else(|| {
        let names: Vec<_> = Template::ALL.iter().map(|t| t.name()).collect();
        format!("unknown template {s:?}; expected one of {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::InvalidParameters(msg) => Failure::Usage(msg),
            other => Failure::Io(other.to_string()),
        }
    }
}

fn command_echo() -> Vec<String> {
    std::env::args().skip(1).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check(args) => run_check(args),
        Command::Sweep { kind } => run_sweep(kind),
        Command::Reproduce(args) => run_reproduce(args),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            exit::USAGE
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            exit::IO
        }
    };
    ExitCode::from(code as u8)
}

fn emit(doc: &ReportDocument, json: bool, expand: bool) {
    if json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_human(expand));
    }
}

fn run_check(args: CheckArgs) -> Result<i32, Failure> {
    let specs = if let Some(v) = &args.n {
        vec![SpecInput::Quotient(
            input::quotient(v[0], v[1], v[2]).map_err(Failure::Usage)?,
        )]
    } else if let Some(v) = &args.fake_gaussian {
        let m = v[0]
            .parse()
            .map_err(|_| Failure::Usage(format!("m must be a positive integer, got {:?}", v[0])))?;
        vec![SpecInput::FakeGaussian(
            input::fake_gaussian(m, &v[1]).map_err(Failure::Usage)?,
        )]
    } else {
        let path = args.batch.as_ref().expect("clap requires one input");
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        input::parse_batch(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    let opts = CheckOptions {
        keep_expansion: true,
        properties: args.properties,
        timed: true,
    };
    let mut results: Vec<_> = specs
        .iter()
        .map(|s| match s {
            SpecInput::Quotient(q) => verify_quotient(*q, opts),
            SpecInput::FakeGaussian(f) => verify_fake_gaussian(f, opts),
        })
        .collect();
    // Coefficients go into JSON only on request.
    if !args.expand && args.format == Format::Json {
        results.iter_mut().for_each(|r| r.expansion = None);
    }
    let violation = results.iter().any(|r| r.verdict == Verdict::Violation);
    let body = if args.batch.is_some() {
        ReportBody::Batch(results)
    } else {
        ReportBody::Check(results.pop().expect("one spec"))
    };
    emit(
        &ReportDocument::new(command_echo(), body),
        args.format == Format::Json,
        args.expand,
    );
    Ok(if violation { exit::VIOLATION } else { exit::OK })
}

fn checkpoint_path(p: &Path) -> PathBuf {
    match std::env::var_os(CHECKPOINT_DIR_ENV) {
        Some(dir) if p.is_relative() => Path::new(&dir).join(p),
        _ => p.to_path_buf(),
    }
}

fn sweep_options(common: &SweepCommon) -> SweepOptions {
    SweepOptions {
        workers: common.jobs,
        checkpoint: common.checkpoint.as_deref().map(checkpoint_path),
        resume: common.resume,
        max_chunks: common.stop_after_chunks,
        chunk_size: common.chunk_size,
        check_structure: true,
    }
}

fn emit_sweep(report: SweepReport, format: SweepFormat, no_timing: bool) -> i32 {
    let report = if no_timing { report.without_timing() } else { report };
    let clean = report.is_clean();
    let doc = ReportDocument::new(command_echo(), ReportBody::Sweep(report));
    match format {
        SweepFormat::Human => print!("{}", doc.to_human(false)),
        SweepFormat::Json => println!("{}", doc.to_json()),
        SweepFormat::Jsonl => print!("{}", doc.to_jsonl()),
    }
    if clean {
        exit::OK
    } else {
        exit::VIOLATION
    }
}

fn run_sweep(kind: SweepKind) -> Result<i32, Failure> {
    match kind {
        SweepKind::Conjecture1 { n_max, common } => {
            let n_max = n_max.unwrap_or(if common.long_run { 400 } else { 150 });
            let report = sweep_conjecture1(n_max, &sweep_options(&common))?;
            Ok(emit_sweep(report, common.format, common.no_timing))
        }
        SweepKind::FakeGaussian {
            template,
            seed,
            samples,
            m_span,
            s_max,
            value_max,
            common,
        } => {
            let ranges = SamplingRanges {
                s_max,
                value_max,
                m_span: m_span.unwrap_or(if common.long_run { 1000 } else { 200 }),
            };
            let samples = samples.unwrap_or(if common.long_run { 100_000 } else { 10_000 });
            let report = sweep_fake_gaussian(template, ranges, seed, samples, &sweep_options(&common))?;
            Ok(emit_sweep(report, common.format, common.no_timing))
        }
    }
}

fn run_reproduce(args: ReproduceArgs) -> Result<i32, Failure> {
    let opts = SweepOptions {
        workers: args.jobs,
        ..Default::default()
    };
    let (body, ok) = match args.name {
        Reproduction::Remark25 => {
            let rows = reproduce_remark25();
            let ok = rows.iter().all(|r| r.matches);
            (ReportBody::Remark25(rows), ok)
        }
        Reproduction::Stanton => {
            let rows = reproduce_stanton(if args.long_run { 200 } else { 50 }, args.jobs);
            let ok = stanton_matches(&rows);
            (ReportBody::Stanton(rows), ok)
        }
        Reproduction::Lemma6 => {
            let rows = reproduce_lemma6(12, 6, args.jobs);
            let ok = rows.iter().all(|r| r.ok);
            (ReportBody::Lemma6(rows), ok)
        }
        Reproduction::Corollary10 | Reproduction::Crosscheck => {
            let report = if args.name == Reproduction::Corollary10 {
                reproduce_corollary10(30, &opts)?
            } else {
                crosscheck_theorems(100, &opts)?
            };
            let report = if args.no_timing {
                report.without_timing()
            } else {
                report
            };
            let ok = report.is_clean() && report.complete;
            (ReportBody::Sweep(report), ok)
        }
    };
    emit(
        &ReportDocument::new(command_echo(), body),
        args.format == Format::Json,
        false,
    );
    Ok(if ok { exit::OK } else { exit::VIOLATION })
}
