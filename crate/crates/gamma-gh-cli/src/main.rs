//! `gammagh`: simulate gamma-GH Levy paths, evaluate the distribution-level
//! primitives, and run the Monte Carlo verification experiments.
//!
//! Exit codes are a stable contract for scripting:
//! 0 success (all experiment checks passed), 1 I/O failure, 2 usage or
//! domain error, 3 an experiment assertion flag failed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gamma_gh::distributions::{
    charfn_gamma_gh, gig_norm_constant, pdf_gamma_gh, pdf_gig_gh, pdf_ig_gh, GammaGhParams,
    GigParams, IgParams,
};
use gamma_gh::experiments::{
    default_u_grid, run_charfn_check, run_fdd_check, run_idecomp_check, run_qv_experiment,
    run_variation_experiment, Check, MomentReport, MonteCarloConfig, PartitionSpec,
};
use gamma_gh::paths::{
    simulate_brownian, simulate_path, simulate_path_with_shared_noise, IncrementSet,
    Path as ProcessPath,
};
use gamma_gh::quad::DEFAULT_REL_TOL;
use gamma_gh::rng::RngStream;
use gamma_gh::variation::{quadratic_variation, total_variation, Partition, TheoryConstants};

#[derive(Parser)]
#[command(
    name = "gammagh",
    about = "Gamma generalized-hyperbolic Levy process workbench",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate one path and write its t,value CSV
    Simulate(SimulateArgs),
    /// Write the five construction figures (a in {0.5, 1, 3, 10} plus Brownian)
    Figures(FiguresArgs),
    /// Run a Monte Carlo verification experiment and write its JSON report
    #[command(subcommand)]
    Experiment(ExperimentCmd),
    /// Evaluate densities, the characteristic function, or the constants
    #[command(subcommand)]
    Eval(EvalCmd),
}

/// Process parameters shared by the subcommands.
#[derive(Args, Clone, Copy)]
struct ProcessArgs {
    /// Shape of the mixing gamma law per unit time
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    a: f64,
    /// Rate of the mixing gamma law
    #[arg(long = "b", alias = "beta", default_value_t = 1.0, allow_negative_numbers = true)]
    b: f64,
    /// Drift per unit time
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    mu: f64,
    /// Scale of the normal component
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    sigma: f64,
    /// Horizon T
    #[arg(long = "T", default_value_t = 1.0, allow_negative_numbers = true)]
    horizon: f64,
}

impl ProcessArgs {
    fn params(&self) -> Result<GammaGhParams, gamma_gh::Error> {
        GammaGhParams::new(self.a, self.b, self.mu, self.sigma)
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    process: ProcessArgs,
    /// Number of grid cells
    #[arg(long, default_value_t = 500)]
    n: usize,
    /// Master seed; fully determines the path
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Simulate the Brownian comparison process instead
    #[arg(long)]
    brownian: bool,
    /// Output CSV path
    #[arg(long, default_value = "path.csv")]
    out: PathBuf,
}

#[derive(Args)]
struct FiguresArgs {
    #[command(flatten)]
    process: ProcessArgs,
    /// Number of grid cells
    #[arg(long, default_value_t = 500)]
    n: usize,
    /// Master seed shared by all five figures
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Reuse one normal-noise stream across the gamma-GH figures
    /// (common random numbers), so the figures differ only through `a`
    #[arg(long)]
    paired: bool,
    /// Output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ReportArgs {
    /// Master seed
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Report path (default report.json or report.csv by format)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format; csv is available for variation and qv
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Total variation V_k against its closed-form moment formulas
    Variation {
        #[command(flatten)]
        process: ProcessArgs,
        #[command(flatten)]
        report: ReportArgs,
        /// Uniform partition cell count
        #[arg(long, default_value_t = 4096)]
        cells: usize,
        #[arg(long, default_value_t = 10_000)]
        reps: usize,
    },
    /// Quadratic variation V_Q over a mesh ladder with a Brownian control
    Qv {
        #[command(flatten)]
        process: ProcessArgs,
        #[command(flatten)]
        report: ReportArgs,
        /// Comma-separated increasing cell counts
        #[arg(long, default_value = "256,1024,4096,16384")]
        cells: String,
        #[arg(long, default_value_t = 10_000)]
        reps: usize,
    },
    /// Empirical characteristic function against the closed form
    Charfn {
        #[command(flatten)]
        process: ProcessArgs,
        #[command(flatten)]
        report: ReportArgs,
        /// Number of exact samples
        #[arg(long, default_value_t = 100_000)]
        n: usize,
    },
    /// Infinite divisibility: sums of parts against direct draws
    Idecomp {
        #[command(flatten)]
        process: ProcessArgs,
        #[command(flatten)]
        report: ReportArgs,
        /// Number of parts in each sum
        #[arg(long, default_value_t = 10)]
        parts: u32,
        #[arg(long, default_value_t = 100_000)]
        reps: usize,
    },
    /// Finite-dimensional-distribution convergence of the construction
    Fdd {
        #[command(flatten)]
        process: ProcessArgs,
        #[command(flatten)]
        report: ReportArgs,
        /// Construction grid size
        #[arg(long, default_value_t = 500)]
        n: usize,
        #[arg(long, default_value_t = 0.3, allow_negative_numbers = true)]
        t1: f64,
        #[arg(long, default_value_t = 0.7, allow_negative_numbers = true)]
        t2: f64,
        #[arg(long, default_value_t = 100_000)]
        reps: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DistKind {
    Gamma,
    Ig,
    Gig,
}

#[derive(Subcommand)]
enum EvalCmd {
    /// Density of a GH law at a point
    Pdf {
        #[arg(long, value_enum, default_value_t = DistKind::Gamma)]
        dist: DistKind,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long = "b", alias = "beta", default_value_t = 1.0, allow_negative_numbers = true)]
        b: f64,
        /// Third gig parameter (gig only)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        sigma: f64,
        /// Evaluation point
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        u: f64,
    },
    /// Characteristic function of the gamma-GH margin
    Charfn {
        #[command(flatten)]
        process: ProcessArgs,
        /// Argument u
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        u: f64,
    },
    /// The bound constants I1, I2, E1, E2 and C(a, b, c)
    Constant {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long = "b", alias = "beta", default_value_t = 1.0, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        c: f64,
    },
}

enum CliError {
    Io(std::io::Error),
    Lib(gamma_gh::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<gamma_gh::Error> for CliError {
    fn from(e: gamma_gh::Error) -> Self {
        CliError::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                gamma_gh::Error::QuadratureFailure { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Simulate(args) => cmd_simulate(args),
        Command::Figures(args) => cmd_figures(args),
        Command::Experiment(cmd) => cmd_experiment(cmd),
        Command::Eval(cmd) => cmd_eval(cmd),
    }
}

/// 15-significant-digit decimal rendering without trailing zeros.
fn fmt15(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("round-trip");
    rounded.to_string()
}

fn write_path_csv(path: &ProcessPath, out: &Path) -> Result<(), CliError> {
    let mut buf = Vec::new();
    path.write_csv(&mut buf)?;
    fs::write(out, buf)?;
    Ok(())
}

fn cmd_simulate(args: SimulateArgs) -> Result<u8, CliError> {
    let mut rng = RngStream::new(args.seed, 0);
    let path = if args.brownian {
        simulate_brownian(args.process.horizon, args.n, &mut rng)
    } else {
        simulate_path(&args.process.params()?, args.process.horizon, args.n, &mut rng)
    };
    write_path_csv(&path, &args.out)?;

    let grid = Partition::uniform(args.process.horizon, args.n)?;
    let incr = IncrementSet::new(grid, path.increments().to_vec())?;
    println!("terminal {}", fmt15(path.terminal()));
    println!("total_variation {}", fmt15(total_variation(&incr)));
    println!("quadratic_variation {}", fmt15(quadratic_variation(&incr)));
    Ok(0)
}

const FIGURE_SHAPES: [(f64, &str); 4] =
    [(0.5, "fig_a0p5.csv"), (1.0, "fig_a1.csv"), (3.0, "fig_a3.csv"), (10.0, "fig_a10.csv")];

fn cmd_figures(args: FiguresArgs) -> Result<u8, CliError> {
    fs::create_dir_all(&args.out)?;
    let horizon = args.process.horizon;
    for (i, (a, name)) in FIGURE_SHAPES.iter().enumerate() {
        let p = GammaGhParams::new(*a, args.process.b, args.process.mu, args.process.sigma)?;
        let path = if args.paired {
            // One shared noise stream; a private mixing stream per figure.
            let mut noise = RngStream::new(args.seed, 0);
            let mut mixing = RngStream::new(args.seed, 1 + i as u64);
            simulate_path_with_shared_noise(&p, horizon, args.n, &mut noise, &mut mixing)
        } else {
            let mut rng = RngStream::new(args.seed, i as u64);
            simulate_path(&p, horizon, args.n, &mut rng)
        };
        write_path_csv(&path, &args.out.join(name))?;
    }
    // Paired mode hands the Brownian figure the same noise stream, so it is
    // the same normal sequence without the gamma clock.
    let mut rng =
        if args.paired { RngStream::new(args.seed, 0) } else { RngStream::new(args.seed, 4) };
    let brownian = simulate_brownian(horizon, args.n, &mut rng);
    write_path_csv(&brownian, &args.out.join("fig_brownian.csv"))?;
    println!("wrote 5 figures to {}", args.out.display());
    Ok(0)
}

fn print_checks(checks: &[Check]) {
    for c in checks {
        println!(
            "[{}] {}: observed {} target {} tolerance {} ({})",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            fmt15(c.observed),
            fmt15(c.target),
            fmt15(c.tolerance),
            c.tolerance_source
        );
    }
}

fn write_report(
    report: &ReportArgs,
    json: String,
    csv: Option<String>,
) -> Result<PathBuf, CliError> {
    let (default_name, body) = match (report.format, csv) {
        (Format::Json, _) => ("report.json", json),
        (Format::Csv, Some(csv)) => ("report.csv", csv),
        (Format::Csv, None) => {
            return Err(CliError::Lib(gamma_gh::Error::Domain(
                "csv format is only available for the variation and qv experiments".into(),
            )))
        }
    };
    let out = report.out.clone().unwrap_or_else(|| PathBuf::from(default_name));
    let mut file = fs::File::create(&out)?;
    file.write_all(body.as_bytes())?;
    if !body.ends_with('\n') {
        file.write_all(b"\n")?;
    }
    Ok(out)
}

fn finish(report: &ReportArgs, json: String, csv: Option<String>, pass: bool) -> Result<u8, CliError> {
    let out = write_report(report, json, csv)?;
    println!("report written to {}", out.display());
    println!("result: {}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { 0 } else { 3 })
}

fn cmd_experiment(cmd: ExperimentCmd) -> Result<u8, CliError> {
    match cmd {
        ExperimentCmd::Variation { process, report, cells, reps } => {
            let cfg = MonteCarloConfig {
                replications: reps,
                master_seed: report.seed,
                params: process.params()?,
                horizon: process.horizon,
                partition: PartitionSpec::Uniform { cells },
                u_grid: default_u_grid(),
            };
            let r = run_variation_experiment(&cfg)?;
            print_checks(&r.checks);
            let csv = format!("{}\n{}", MomentReport::csv_header(), r.csv_row());
            let pass = r.pass;
            finish(&report, serde_json::to_string_pretty(&r).expect("serializable"), Some(csv), pass)
        }
        ExperimentCmd::Qv { process, report, cells, reps } => {
            let ladder = parse_cells(&cells)?;
            let cfg = MonteCarloConfig {
                replications: reps,
                master_seed: report.seed,
                params: process.params()?,
                horizon: process.horizon,
                partition: PartitionSpec::Uniform { cells: *ladder.last().unwrap() },
                u_grid: default_u_grid(),
            };
            let r = run_qv_experiment(&cfg, &ladder)?;
            for m in r.gamma_gh.iter().chain(&r.brownian) {
                print_checks(&m.checks);
            }
            print_checks(&[r.plateau.clone(), r.brownian_shrink.clone()]);
            let pass = r.pass;
            let csv = r.to_csv();
            finish(&report, serde_json::to_string_pretty(&r).expect("serializable"), Some(csv), pass)
        }
        ExperimentCmd::Charfn { process, report, n } => {
            let cfg = MonteCarloConfig {
                replications: n,
                master_seed: report.seed,
                params: process.params()?,
                horizon: process.horizon,
                partition: PartitionSpec::Uniform { cells: 1 },
                u_grid: default_u_grid(),
            };
            let r = run_charfn_check(&cfg)?;
            print_checks(&r.checks);
            let pass = r.pass;
            finish(&report, serde_json::to_string_pretty(&r).expect("serializable"), None, pass)
        }
        ExperimentCmd::Idecomp { process, report, parts, reps } => {
            let r = run_idecomp_check(&process.params()?, parts, reps, report.seed)?;
            print_checks(&r.checks);
            let pass = r.pass;
            finish(&report, serde_json::to_string_pretty(&r).expect("serializable"), None, pass)
        }
        ExperimentCmd::Fdd { process, report, n, t1, t2, reps } => {
            let r = run_fdd_check(&process.params()?, process.horizon, n, (t1, t2), reps, report.seed)?;
            print_checks(&r.checks);
            let pass = r.pass;
            finish(&report, serde_json::to_string_pretty(&r).expect("serializable"), None, pass)
        }
    }
}

fn parse_cells(spec: &str) -> Result<Vec<usize>, CliError> {
    let ladder: Result<Vec<usize>, _> = spec.split(',').map(|s| s.trim().parse::<usize>()).collect();
    ladder.map_err(|e| {
        CliError::Lib(gamma_gh::Error::Domain(format!("bad --cells list '{spec}': {e}")))
    })
}

fn cmd_eval(cmd: EvalCmd) -> Result<u8, CliError> {
    match cmd {
        EvalCmd::Pdf { dist, a, b, c, mu, sigma, u } => {
            let value = match dist {
                DistKind::Gamma => {
                    let p = GammaGhParams::new(a, b, mu, sigma)?;
                    pdf_gamma_gh(&p, u)?
                }
                DistKind::Ig => pdf_ig_gh(IgParams::new(a, b)?, mu, sigma, u)?,
                DistKind::Gig => {
                    pdf_gig_gh(GigParams::new(a, b, c)?, mu, sigma, u, DEFAULT_REL_TOL)?
                }
            };
            println!("{}", fmt15(value));
            if value.is_infinite() {
                eprintln!("note: the density is singular at u = mu when a <= 1/2 (integrable)");
            }
            Ok(0)
        }
        EvalCmd::Charfn { process, u } => {
            let z = charfn_gamma_gh(&process.params()?, process.horizon, u);
            println!("{} {}", fmt15(z.re), fmt15(z.im));
            Ok(0)
        }
        EvalCmd::Constant { a, b, c } => {
            let constants = TheoryConstants::compute()?;
            println!("I1 {}", fmt15(constants.i1));
            println!("I2 {}", fmt15(constants.i2));
            println!("E1 {}", fmt15(constants.e1));
            println!("E2 {}", fmt15(constants.e2));
            let value = gig_norm_constant(GigParams::new(a, b, c)?, DEFAULT_REL_TOL)?;
            println!("C({a},{b},{c}) {}", fmt15(value));
            Ok(0)
        }
    }
}
