//! Command-line surface: instance generation, solvers, conjecture verifiers,
//! inequality tooling, campaigns, and independent certificate checking.
//!
//! Exit codes: 0 = everything verified; 1 = usage or input error;
//! 2 = a conjecture violation was found (certificate written);
//! 3 = a construction contradicted a proven lemma (artifact written).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ballswap::cert::Certificate;
use ballswap::checker::check_certificate;
use ballswap::coloring::ExceptionalGraph;
use ballswap::error::Error as CoreError;
use ballswap::inequality::{
    exhaustive_check, rational_matrix, sides_report, violation_certificate, InequalityInstance,
    Rat, SearchConfig,
};
use ballswap::involution::{solve_4parts, solve_balls};
use ballswap::matching::{hall_coefficient_bounded, BipGraph};
use ballswap::model::{
    bracket_pair, enumerate_bnk, instance_from_matrix, LabeledBigraph, WeightMatrix,
};
use ballswap::oracle::{
    brute_force_involution, conjecture_campaign, verify_higgins, verify_weak_balls, CampaignConfig,
    HigginsVerdict,
};
use ballswap::ratio::{rat_from_str, rat_to_string};
use ballswap::tensor::symmetric_product;
use ballswap::{canonical_json, exec, sample};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_LEMMA: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ballswap",
    version,
    about = "Swap involutions, balanced colorings, and conjecture verification for biregular bipartite multigraphs"
)]
struct Cli {
    /// Worker threads for parallel scans (also BALLSWAP_WORKERS).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random biregular instance.
    Gen(GenArgs),
    /// Construct a swap involution for an instance file.
    SolveBalls(SolveBallsArgs),
    /// Construct an edge bijection for a pair of instance files.
    #[command(name = "solve-4parts")]
    Solve4parts(Solve4PartsArgs),
    /// Verify a conjecture over an (n, k) class.
    Verify(VerifyArgs),
    /// Evaluate or search the matrix inequality.
    Inequality(InequalityArgs),
    /// Exact Hall coefficient of a bipartite multiplicity matrix.
    H(HallArgs),
    /// Symmetric cell product of a matrix.
    Tensor(TensorArgs),
    /// Run a configured verification campaign.
    Campaign(CampaignArgs),
    /// Independently validate a certificate file.
    Check(CheckArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveBallsArgs {
    /// Instance JSON file.
    #[arg(long)]
    instance: PathBuf,
    /// Certificate output (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the exceptional graph of the pipeline coloring as DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct Solve4PartsArgs {
    #[arg(long)]
    first: PathBuf,
    #[arg(long)]
    second: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Conjecture {
    Balls,
    WeakBalls,
    Higgins,
    Inequality,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    conjecture: Conjecture,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Sweep the whole class instead of random trials.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Enumeration budget for exhaustive sweeps.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where a counterexample certificate is written.
    #[arg(long, default_value = "violation-certificate.json")]
    cert_out: PathBuf,
}

#[derive(Args)]
struct InequalityArgs {
    /// Matrix JSON ({"rows","cols","data"}; entries integers or "p/q").
    #[arg(long, conflicts_with = "search")]
    matrix: Option<PathBuf>,
    /// Zero-cell subset JSON ([[x, y], ...]); all odd subsets when omitted.
    #[arg(long, requires = "matrix")]
    cells: Option<PathBuf>,
    /// Random counterexample search mode.
    #[arg(long)]
    search: bool,
    #[arg(long, default_value_t = 6)]
    rows: usize,
    #[arg(long, default_value_t = 6)]
    cols: usize,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Probability of a zero entry in search mode.
    #[arg(long, default_value_t = 0.4)]
    density: f64,
    /// Largest odd subset size scanned.
    #[arg(long, default_value_t = 7)]
    max_t: usize,
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "violation-certificate.json")]
    cert_out: PathBuf,
}

#[derive(Args)]
struct HallArgs {
    /// Multiplicity matrix JSON.
    #[arg(long)]
    graph: PathBuf,
    /// Exhaustive subset bound on the left part.
    #[arg(long, default_value_t = 20)]
    bound: usize,
}

#[derive(Args)]
struct TensorArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CampaignArgs {
    /// Campaign configuration JSON.
    #[arg(long)]
    config: PathBuf,
    /// JSONL records output (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[arg(long, default_value = "violation-certificate.json")]
    cert_out: PathBuf,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    certificate: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers.or_else(|| {
        std::env::var("BALLSWAP_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    exec::configure_workers(workers);
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            // A lemma violation is its own exit class; the artifact has
            // already been written by the failing branch.
            if let Some(CoreError::LemmaViolation(art)) = err.downcast_ref::<CoreError>() {
                eprintln!("lemma violation [{}]: {}", art.lemma, art.detail);
                let path = Path::new("lemma-artifact.json");
                if write_atomic(path, &serde_json::to_string_pretty(art).unwrap()).is_ok() {
                    eprintln!("artifact written to {}", path.display());
                }
                return ExitCode::from(EXIT_LEMMA);
            }
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::SolveBalls(args) => cmd_solve_balls(args),
        Command::Solve4parts(args) => cmd_solve_4parts(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Inequality(args) => cmd_inequality(args),
        Command::H(args) => cmd_hall(args),
        Command::Tensor(args) => cmd_tensor(args),
        Command::Campaign(args) => cmd_campaign(args),
        Command::Check(args) => cmd_check(args),
    }
}

// --- I/O helpers -------------------------------------------------------------

fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn emit(out: &Option<PathBuf>, contents: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_instance(path: &Path) -> anyhow::Result<LabeledBigraph> {
    let g: LabeledBigraph = read_json(path)?;
    g.validate()
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok(g)
}

fn read_matrix(path: &Path) -> anyhow::Result<WeightMatrix> {
    let m: WeightMatrix = read_json(path)?;
    m.validate()
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok(m)
}

/// Matrix JSON with entries that are integers or `"p/q"` strings.
fn read_rational_matrix(path: &Path) -> anyhow::Result<Vec<Vec<Rat>>> {
    #[derive(serde::Deserialize)]
    struct Raw {
        rows: usize,
        cols: usize,
        data: Vec<Vec<serde_json::Value>>,
    }
    let raw: Raw = read_json(path)?;
    if raw.data.len() != raw.rows || raw.data.iter().any(|r| r.len() != raw.cols) {
        return Err(anyhow!(
            "{}: dims disagree with the entry grid",
            path.display()
        ));
    }
    raw.data
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v {
                    serde_json::Value::Number(x) => {
                        let i = x.as_i64().ok_or_else(|| anyhow!("non-integer entry {x}"))?;
                        Ok(Rat::from_integer(i))
                    }
                    serde_json::Value::String(s) => {
                        rat_from_str(s).map_err(|e| anyhow!("bad entry {s:?}: {e}"))
                    }
                    other => Err(anyhow!("unsupported entry {other}")),
                })
                .collect()
        })
        .collect()
}

// --- subcommands --------------------------------------------------------

fn cmd_gen(args: GenArgs) -> anyhow::Result<u8> {
    if args.n == 0 || args.k == 0 {
        return Err(anyhow!("parts must be nonempty"));
    }
    let mut rng = sample::rng(args.seed);
    let g = sample::random_biregular_instance(&mut rng, args.n, args.k);
    emit(&args.out, &canonical_json(&g))?;
    Ok(EXIT_OK)
}

fn exceptional_of_pipeline(g: &LabeledBigraph, cert: &Certificate) -> Option<ExceptionalGraph> {
    let Certificate::BallsInvolution { pipeline, .. } = cert else {
        return None;
    };
    let coloring = pipeline.coloring.as_ref()?;
    let m = pipeline.base_weight?;
    let uw = bracket_pair(
        &g.left_labels(),
        &coloring.colors,
        g.left_size,
        coloring.palette,
    );
    let mut incidence = WeightMatrix::zeros(g.left_size, coloring.palette);
    let mut sign = 0i64;
    for i in 0..g.left_size {
        for f in 0..coloring.palette {
            let w = uw.get(i, f);
            if w != m {
                incidence.set(i, f, 1);
                sign = (w as i64 - m as i64).signum();
            }
        }
    }
    Some(ExceptionalGraph {
        incidence,
        base_weight: m,
        sign,
    })
}

fn cmd_solve_balls(args: SolveBallsArgs) -> anyhow::Result<u8> {
    let g = read_instance(&args.instance)?;
    let (_, cert) = solve_balls(&g)?;
    if let Some(dot_path) = &args.dot {
        if let Some(exceptional) = exceptional_of_pipeline(&g, &cert) {
            write_atomic(dot_path, &exceptional.to_dot())?;
        }
    }
    emit(&args.out, &canonical_json(&cert))?;
    Ok(EXIT_OK)
}

fn cmd_solve_4parts(args: Solve4PartsArgs) -> anyhow::Result<u8> {
    let g1 = read_instance(&args.first)?;
    let g2 = read_instance(&args.second)?;
    let (_, cert) = solve_4parts(&g1, &g2)?;
    emit(&args.out, &canonical_json(&cert))?;
    Ok(EXIT_OK)
}

#[derive(serde::Serialize)]
struct VerifyReport {
    conjecture: String,
    n: usize,
    k: usize,
    mode: String,
    total: u64,
    passed: u64,
    vacuous: u64,
    failed: Vec<usize>,
}

impl VerifyReport {
    fn to_csv(&self) -> String {
        let mut out = String::from("conjecture,n,k,mode,total,passed,vacuous,failed\n");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            self.conjecture,
            self.n,
            self.k,
            self.mode,
            self.total,
            self.passed,
            self.vacuous,
            self.failed
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(";"),
        ));
        out
    }
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    if args.n == 0 || args.k == 0 {
        return Err(anyhow!("parts must be nonempty"));
    }
    let mut failed: Vec<usize> = Vec::new();
    let mut violation: Option<Certificate> = None;
    let mut total = 0u64;
    let mut vacuous = 0u64;
    let mode = if args.exhaustive {
        "exhaustive"
    } else {
        "random"
    };

    let conjecture_name = match args.conjecture {
        Conjecture::Balls => "balls",
        Conjecture::WeakBalls => "weak-balls",
        Conjecture::Higgins => "higgins",
        Conjecture::Inequality => "inequality",
    };

    match args.conjecture {
        Conjecture::Balls => {
            if args.exhaustive {
                let members =
                    enumerate_bnk(args.n, args.k, Some(args.budget)).map_err(|e| anyhow!("{e}"))?;
                for (idx, b) in members.iter().enumerate() {
                    total += 1;
                    let instance = instance_from_matrix(b);
                    match brute_force_involution(&instance, 16) {
                        Ok(Some(_)) => {}
                        Ok(None) => {
                            failed.push(idx);
                            violation.get_or_insert(Certificate::BallsInvolution {
                                instance,
                                involution: Vec::new(),
                                pipeline: ballswap::cert::BallsPipeline {
                                    route: "brute-force-exhausted".into(),
                                    base_weight: None,
                                    shift: None,
                                    coloring: None,
                                    alpha: None,
                                },
                            });
                        }
                        Err(e) => return Err(anyhow!("{e}")),
                    }
                }
            } else {
                let mut rng = sample::rng(args.seed);
                for idx in 0..args.trials {
                    total += 1;
                    let g = sample::random_biregular_instance(&mut rng, args.n, args.k);
                    let (_, cert) = solve_balls(&g)?;
                    if check_certificate(&cert).is_err() {
                        failed.push(idx as usize);
                    }
                }
            }
        }
        Conjecture::WeakBalls => {
            let members =
                enumerate_bnk(args.n, args.k, Some(args.budget)).map_err(|e| anyhow!("{e}"))?;
            let sweep: Vec<WeightMatrix> = if args.exhaustive {
                members
            } else {
                let mut rng = sample::rng(args.seed);
                (0..args.trials)
                    .map(|_| sample::random_bnk(&mut rng, args.n, args.k, 40 * args.n * args.k))
                    .collect()
            };
            for (idx, b) in sweep.iter().enumerate() {
                total += 1;
                let (ok, cert) = verify_weak_balls(b);
                if !ok {
                    failed.push(idx);
                    violation.get_or_insert(cert);
                }
            }
        }
        Conjecture::Higgins => {
            let nk = args.n * args.k;
            if args.exhaustive {
                if nk > 20 {
                    return Err(anyhow!("exhaustive binary sweep needs n*k <= 20, got {nk}"));
                }
                for code in 0u64..(1 << nk) {
                    total += 1;
                    let mut m = WeightMatrix::zeros(args.n, args.k);
                    for bit in 0..nk {
                        if code & (1 << bit) != 0 {
                            m.set(bit / args.k, bit % args.k, 1);
                        }
                    }
                    match verify_higgins(&m).map_err(|e| anyhow!("{e}"))? {
                        HigginsVerdict::Vacuous => vacuous += 1,
                        HigginsVerdict::Holds(_) => {}
                        HigginsVerdict::Counterexample(cert) => {
                            failed.push(code as usize);
                            violation.get_or_insert(cert);
                        }
                    }
                }
            } else {
                let mut rng = sample::rng(args.seed);
                for idx in 0..args.trials {
                    total += 1;
                    let m = sample::random_binary_matrix(&mut rng, args.n, args.k);
                    match verify_higgins(&m).map_err(|e| anyhow!("{e}"))? {
                        HigginsVerdict::Vacuous => vacuous += 1,
                        HigginsVerdict::Holds(_) => {}
                        HigginsVerdict::Counterexample(cert) => {
                            failed.push(idx as usize);
                            violation.get_or_insert(cert);
                        }
                    }
                }
            }
        }
        Conjecture::Inequality => {
            let sweep: Vec<WeightMatrix> = if args.exhaustive {
                enumerate_bnk(args.n, args.k, Some(args.budget)).map_err(|e| anyhow!("{e}"))?
            } else {
                let mut rng = sample::rng(args.seed);
                (0..args.trials)
                    .map(|_| sample::random_sparse_matrix(&mut rng, args.n, args.k, 0.4))
                    .collect()
            };
            for (idx, m) in sweep.iter().enumerate() {
                total += 1;
                let rat = rational_matrix(m);
                let report =
                    exhaustive_check(&rat, None, args.budget).map_err(|e| anyhow!("{e}"))?;
                if report.violated {
                    failed.push(idx);
                    let inst = InequalityInstance::new(rat, report.worst_cells.clone())
                        .expect("report cells are zero cells");
                    violation.get_or_insert(
                        violation_certificate(&inst).expect("violated report certifies"),
                    );
                }
            }
        }
    }

    let report = VerifyReport {
        conjecture: conjecture_name.into(),
        n: args.n,
        k: args.k,
        mode: mode.into(),
        total,
        passed: total - failed.len() as u64,
        vacuous,
        failed: failed.clone(),
    };
    let rendered = match args.format {
        ReportFormat::Json => canonical_json(&report),
        ReportFormat::Csv => report.to_csv(),
    };
    emit(&args.out, &rendered)?;

    if let Some(cert) = violation {
        write_atomic(&args.cert_out, &canonical_json(&cert))?;
        eprintln!(
            "counterexample certificate written to {}",
            args.cert_out.display()
        );
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn cmd_inequality(args: InequalityArgs) -> anyhow::Result<u8> {
    if args.search {
        let config = SearchConfig {
            rows: args.rows,
            cols: args.cols,
            zero_density: args.density,
            trials: args.trials,
            seed: args.seed,
            max_t: args.max_t,
            per_trial_budget: args.budget,
        };
        let report = ballswap::inequality::random_counterexample_search(&config);
        let violated = report.violations > 0;
        emit(&args.out, &canonical_json(&report))?;
        if violated {
            if let (Some(matrix), cells) = (&report.witness_matrix, &report.witness_cells) {
                let m = WeightMatrix::from_rows(matrix.clone()).map_err(|e| anyhow!("{e}"))?;
                let inst = InequalityInstance::from_integer_matrix(&m, cells.clone())
                    .map_err(|e| anyhow!("{e}"))?;
                if let Some(cert) = violation_certificate(&inst) {
                    write_atomic(&args.cert_out, &canonical_json(&cert))?;
                    eprintln!(
                        "counterexample certificate written to {}",
                        args.cert_out.display()
                    );
                }
            }
            return Ok(EXIT_VIOLATION);
        }
        return Ok(EXIT_OK);
    }

    let matrix_path = args
        .matrix
        .as_ref()
        .ok_or_else(|| anyhow!("provide --matrix FILE or --search"))?;
    let matrix = read_rational_matrix(matrix_path)?;
    match &args.cells {
        Some(cells_path) => {
            let cells: Vec<(usize, usize)> = read_json(cells_path)?;
            let inst = InequalityInstance::new(matrix, cells).map_err(|e| anyhow!("{e}"))?;
            let report = sides_report(&inst);
            emit(&args.out, &canonical_json(&report))?;
            if report.violated {
                let cert = violation_certificate(&inst).expect("violated sides certify");
                write_atomic(&args.cert_out, &canonical_json(&cert))?;
                return Ok(EXIT_VIOLATION);
            }
            Ok(EXIT_OK)
        }
        None => {
            let report = exhaustive_check(&matrix, Some(args.max_t), args.budget)
                .map_err(|e| anyhow!("{e}"))?;
            let violated = report.violated;
            let worst = report.worst_cells.clone();
            emit(&args.out, &canonical_json(&report))?;
            if violated {
                let inst = InequalityInstance::new(matrix, worst).map_err(|e| anyhow!("{e}"))?;
                let cert = violation_certificate(&inst).expect("violated report certifies");
                write_atomic(&args.cert_out, &canonical_json(&cert))?;
                return Ok(EXIT_VIOLATION);
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_hall(args: HallArgs) -> anyhow::Result<u8> {
    let m = read_matrix(&args.graph)?;
    let g = BipGraph::new(m);
    let h = hall_coefficient_bounded(&g, args.bound).map_err(|e| anyhow!("{e}"))?;
    #[derive(serde::Serialize)]
    struct HallReport {
        value: String,
        witness: Vec<usize>,
    }
    println!(
        "{}",
        canonical_json(&HallReport {
            value: rat_to_string(h.value),
            witness: h.witness
        })
    );
    Ok(EXIT_OK)
}

fn cmd_tensor(args: TensorArgs) -> anyhow::Result<u8> {
    let m = read_matrix(&args.matrix)?;
    let product = symmetric_product(&m);
    emit(&args.out, &canonical_json(&product))?;
    Ok(EXIT_OK)
}

fn cmd_campaign(args: CampaignArgs) -> anyhow::Result<u8> {
    let config: CampaignConfig = read_json(&args.config)?;
    let report = conjecture_campaign(&config).map_err(|e| anyhow!("{e}"))?;
    let rendered = match args.format {
        ReportFormat::Json => report.to_jsonl(),
        ReportFormat::Csv => {
            let mut out = String::from(
                "n,k,index,weak_balls,higgins,brute_force_found,solver_ok,inequality_ok,consistent\n",
            );
            for r in &report.records {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    r.n,
                    r.k,
                    r.index,
                    r.weak_balls,
                    r.higgins.as_deref().unwrap_or("-"),
                    r.brute_force_found.map_or("-".into(), |b| b.to_string()),
                    r.solver_ok.map_or("-".into(), |b| b.to_string()),
                    r.inequality_ok,
                    r.consistent,
                ));
            }
            out
        }
    };
    emit(&args.out, &rendered)?;
    eprintln!(
        "campaign: {} instances, {} violations, {} budget flags",
        report.total, report.violations, report.budget_flags
    );
    if report.violations > 0 {
        let first = report
            .records
            .iter()
            .find_map(|r| r.violation.as_ref())
            .expect("violation count matches records");
        write_atomic(&args.cert_out, &canonical_json(first))?;
        eprintln!(
            "counterexample certificate written to {}",
            args.cert_out.display()
        );
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn cmd_check(args: CheckArgs) -> anyhow::Result<u8> {
    let cert: Certificate = read_json(&args.certificate)?;
    #[derive(serde::Serialize)]
    struct CheckReport {
        kind: String,
        valid: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        reason: Option<String>,
    }
    match check_certificate(&cert) {
        Ok(()) => {
            println!(
                "{}",
                canonical_json(&CheckReport {
                    kind: cert.kind().into(),
                    valid: true,
                    reason: None
                })
            );
            Ok(EXIT_OK)
        }
        Err(reason) => {
            println!(
                "{}",
                canonical_json(&CheckReport {
                    kind: cert.kind().into(),
                    valid: false,
                    reason: Some(reason),
                })
            );
            Ok(EXIT_USAGE)
        }
    }
}
