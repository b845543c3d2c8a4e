//! Command-line front end: `advec run`, `advec matrix`, `advec verify`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use advec::error::AdvecError;
use advec::runner::{run, run_matrix, RunConfig};
use advec::state::DerivativeInit;

#[derive(Parser)]
#[command(
    name = "advec",
    version,
    about = "1-D semi-Lagrangian advection laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute one configured run and write profile/series/metrics files.
    Run(RunArgs),
    /// Execute a scheme x level matrix and write a comparison CSV.
    Matrix(MatrixArgs),
    /// Run the acceptance suite and print one line per criterion.
    Verify {
        /// Seed for the randomized property checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Flat key=value config file; command-line flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Problem: example1 | example2 | example3_burgers | example4 | custom.
    #[arg(long)]
    problem: Option<String>,
    /// Number of steps.
    #[arg(long)]
    steps: Option<usize>,
    /// Courant number (constant-velocity problems).
    #[arg(long)]
    cfl: Option<f64>,
    /// Explicit time step.
    #[arg(long)]
    dt: Option<f64>,
    /// Grid size override.
    #[arg(long)]
    grid_n: Option<usize>,
    /// Derivative seeding for level-0 runs: zero | centered.
    #[arg(long)]
    d_init: Option<String>,
    /// Output root (default: $ADVEC_OUT or ./advec-out).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Profile CSV used as the initial condition of a custom problem.
    #[arg(long)]
    initial: Option<PathBuf>,
    /// Constant velocity of a custom problem.
    #[arg(long)]
    u0: Option<f64>,
    /// Seed recorded into randomized suites.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Scheme: cubic | rational | modified_rational | hcr | csl2_direct.
    #[arg(long)]
    scheme: Option<String>,
    /// Replacement level: 0 | 1 | 2.
    #[arg(long)]
    level: Option<u8>,
    /// Comma-separated steps at which to write profile snapshots.
    #[arg(long)]
    snapshots: Option<String>,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated scheme list.
    #[arg(long, default_value = "hcr,cubic,rational,modified_rational")]
    schemes: String,
    /// Comma-separated replacement levels.
    #[arg(long, default_value = "1")]
    levels: String,
}

fn apply_common(config: &mut RunConfig, common: &CommonArgs) -> Result<(), AdvecError> {
    if let Some(problem) = &common.problem {
        config.problem = problem.parse()?;
    }
    if let Some(steps) = common.steps {
        config.steps = Some(steps);
    }
    if let Some(cfl) = common.cfl {
        config.cfl = Some(cfl);
    }
    if let Some(dt) = common.dt {
        config.dt = Some(dt);
    }
    if let Some(n) = common.grid_n {
        config.grid_n = Some(n);
    }
    if let Some(d_init) = &common.d_init {
        config.d_init = match d_init.as_str() {
            "zero" => DerivativeInit::Zero,
            "centered" => DerivativeInit::Centered,
            other => return Err(AdvecError::Config(format!("invalid d_init '{other}'"))),
        };
    }
    if let Some(out) = &common.out {
        config.out_dir = Some(out.clone());
    }
    if let Some(initial) = &common.initial {
        config.initial = Some(initial.clone());
    }
    if let Some(u0) = common.u0 {
        config.u0 = u0;
    }
    if let Some(seed) = common.seed {
        config.seed = seed;
    }
    Ok(())
}

fn base_config(common: &CommonArgs) -> Result<RunConfig, AdvecError> {
    let mut config = match &common.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    apply_common(&mut config, common)?;
    Ok(config)
}

fn cmd_run(args: &RunArgs) -> Result<(), AdvecError> {
    let mut config = base_config(&args.common)?;
    if let Some(scheme) = &args.scheme {
        config.scheme.kind = scheme.parse()?;
    }
    if let Some(level) = args.level {
        config.scheme.replacement_level = level;
    }
    if let Some(snapshots) = &args.snapshots {
        config.snapshots = snapshots
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| AdvecError::Config(format!("invalid snapshot step '{s}'")))
            })
            .collect::<Result<_, _>>()?;
    }
    let record = run(&config)?;
    let dir = config
        .out_dir
        .clone()
        .or_else(|| std::env::var_os(advec::runner::OUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("advec-out"))
        .join(config.label());
    println!(
        "run {} finished: {} steps recorded",
        config.label(),
        record.mass_series.len() - 1
    );
    println!("artifacts in {}", dir.display());
    Ok(())
}

fn cmd_matrix(args: &MatrixArgs) -> Result<(), AdvecError> {
    let base = base_config(&args.common)?;
    let mut configs = Vec::new();
    for level in args.levels.split(',').filter(|s| !s.trim().is_empty()) {
        let level: u8 = level
            .trim()
            .parse()
            .map_err(|_| AdvecError::Config(format!("invalid level '{level}'")))?;
        for scheme in args.schemes.split(',').filter(|s| !s.trim().is_empty()) {
            let mut config = base.clone();
            config.scheme.kind = scheme.trim().parse()?;
            config.scheme.replacement_level = level;
            configs.push(config);
        }
    }
    let rows = run_matrix(&configs)?;
    println!("{:<34} {:<8} status", "run", "level");
    for row in &rows {
        println!("{:<34} {:<8} {}", row.label, row.level, row.status);
    }
    Ok(())
}

fn cmd_verify(seed: u64) -> ExitCode {
    let results = advec::verify::run_all(seed);
    let mut all_passed = true;
    for r in &results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {}: {}", r.name, r.detail);
        all_passed &= r.passed;
    }
    if all_passed {
        println!("all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Matrix(args) => cmd_matrix(args),
        Command::Verify { seed } => return cmd_verify(*seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
