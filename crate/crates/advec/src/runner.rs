//! Run orchestration and file output.
//!
//! A [`RunConfig`] resolves to a problem plus a scheme, executes the
//! stepping loop, collects a [`RunRecord`], and writes three artifacts
//! per run: `profile.csv` (final state, plus one file per requested
//! snapshot), `series.csv` (per-step mass and extrema), and
//! `metrics.json` (named scalar results under fixed keys). Floats are
//! written as shortest round-trip decimals, so re-ingesting a profile
//! reproduces the in-memory state bit for bit and repeated serial runs
//! are byte-identical.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;

use crate::diagnostics::{
    corner_max, edge_window, error_norms, shock_position, Metrics, RunRecord,
};
use crate::error::{AdvecError, Result};
use crate::grid::Grid1D;
use crate::problems::{burgers_step, ProblemKind, ProblemSpec, Profile, Timing};
use crate::scheme::{
    step_conservative, step_double_replacement, step_nonconservative, SchemeKind, SchemeSpec,
    VelocityField,
};
use crate::state::{
    init_double_primitive, init_primitive, ConservedState, DerivativeInit, NodalState,
};

/// Environment variable naming the output root.
pub const OUT_ENV: &str = "ADVEC_OUT";
const DEFAULT_OUT: &str = "advec-out";

/// One run request: problem and scheme selectors plus overrides.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub problem: ProblemKind,
    pub scheme: SchemeSpec,
    pub grid_n: Option<usize>,
    pub cfl: Option<f64>,
    pub dt: Option<f64>,
    pub steps: Option<usize>,
    /// Steps at which a full profile snapshot is written.
    pub snapshots: Vec<usize>,
    pub d_init: DerivativeInit,
    pub out_dir: Option<PathBuf>,
    /// Profile CSV to use as a custom initial condition.
    pub initial: Option<PathBuf>,
    /// Constant velocity for custom problems.
    pub u0: f64,
    /// Seed for the randomized property suites run by `verify`.
    pub seed: u64,
    /// Skip file output entirely (in-memory runs).
    pub no_output: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            problem: ProblemKind::Example1,
            scheme: SchemeSpec {
                kind: SchemeKind::Hcr,
                replacement_level: 1,
            },
            grid_n: None,
            cfl: None,
            dt: None,
            steps: None,
            snapshots: Vec::new(),
            d_init: DerivativeInit::Zero,
            out_dir: None,
            initial: None,
            u0: 1.0,
            seed: 0,
            no_output: false,
        }
    }
}

impl RunConfig {
    /// Parse a flat `key=value` config file. Blank lines and `#` comments
    /// are ignored; later keys override earlier ones.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let mut config = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                AdvecError::Config(format!(
                    "{}:{}: expected key=value",
                    path.display(),
                    lineno + 1
                ))
            })?;
            config.set(key.trim(), value.trim())?;
        }
        Ok(config)
    }

    /// Apply one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| AdvecError::Config(format!("invalid {what}: '{value}'"));
        match key {
            "problem" => self.problem = value.parse()?,
            "scheme" => self.scheme.kind = value.parse()?,
            "level" => {
                self.scheme.replacement_level = value.parse().map_err(|_| bad("level"))?;
            }
            "grid_n" | "n" => self.grid_n = Some(value.parse().map_err(|_| bad("grid size"))?),
            "cfl" => self.cfl = Some(value.parse().map_err(|_| bad("CFL number"))?),
            "dt" => self.dt = Some(value.parse().map_err(|_| bad("time step"))?),
            "steps" => self.steps = Some(value.parse().map_err(|_| bad("step count"))?),
            "snapshots" => {
                self.snapshots = value
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse().map_err(|_| bad("snapshot list")))
                    .collect::<Result<_>>()?;
            }
            "d_init" => {
                self.d_init = match value {
                    "zero" => DerivativeInit::Zero,
                    "centered" => DerivativeInit::Centered,
                    _ => return Err(bad("derivative init (zero|centered)")),
                }
            }
            "out" => self.out_dir = Some(PathBuf::from(value)),
            "initial" => self.initial = Some(PathBuf::from(value)),
            "u0" => self.u0 = value.parse().map_err(|_| bad("velocity"))?,
            "seed" => self.seed = value.parse().map_err(|_| bad("seed"))?,
            other => return Err(AdvecError::Config(format!("unknown config key '{other}'"))),
        }
        Ok(())
    }

    /// Resolve the problem with all overrides applied.
    pub fn problem_spec(&self) -> Result<ProblemSpec> {
        let mut spec = match self.problem {
            ProblemKind::Example1 => ProblemSpec::example1(),
            ProblemKind::Example2 => ProblemSpec::example2(),
            ProblemKind::Example3Burgers => ProblemSpec::burgers(),
            ProblemKind::Example4 => ProblemSpec::example4(),
            ProblemKind::Custom => {
                let path = self.initial.as_ref().ok_or_else(|| {
                    AdvecError::Config("custom problem needs initial=<profile.csv>".into())
                })?;
                let (grid, f, _) = read_profile_csv(path)?;
                ProblemSpec {
                    kind: ProblemKind::Custom,
                    grid,
                    timing: Timing::Cfl(0.2),
                    steps: 0,
                    profile: Profile::Tabulated(f),
                    velocity: VelocityField::Constant(self.u0),
                }
            }
        };
        if let Some(n) = self.grid_n {
            spec.grid = Grid1D::new(n, spec.grid.h, spec.grid.bc, spec.grid.x0)?;
        }
        if let Some(dt) = self.dt {
            spec.timing = Timing::Dt(dt);
        } else if let Some(cfl) = self.cfl {
            spec.timing = Timing::Cfl(cfl);
        }
        if let Some(steps) = self.steps {
            spec.steps = steps;
        }
        if let Some(&worst) = self.snapshots.iter().max() {
            if worst > spec.steps {
                return Err(AdvecError::Config(format!(
                    "snapshot step {worst} beyond the last step {}",
                    spec.steps
                )));
            }
        }
        Ok(spec)
    }

    /// Check the scheme/problem pairing before any stepping.
    fn validate_pairing(&self, spec: &ProblemSpec) -> Result<()> {
        self.scheme.validate()?;
        let level = self.scheme.replacement_level;
        match self.problem {
            ProblemKind::Example4 => {
                if level != 2 {
                    return Err(AdvecError::Config(
                        "example4 is the double-replacement experiment; use level=2".into(),
                    ));
                }
            }
            ProblemKind::Example3Burgers => {
                if level == 2 {
                    return Err(AdvecError::Config(
                        "replacement level 2 supports constant velocity only".into(),
                    ));
                }
            }
            _ => {
                if level == 2 {
                    return Err(AdvecError::Config(
                        "replacement level 2 runs on the open-grid problem (example4)".into(),
                    ));
                }
            }
        }
        if level == 0 && self.scheme.kind == SchemeKind::Csl2Direct {
            return Err(AdvecError::Config(
                "csl2_direct is defined only at replacement level 1".into(),
            ));
        }
        let _ = spec;
        Ok(())
    }

    fn out_root(&self) -> PathBuf {
        self.out_dir
            .clone()
            .or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT))
    }

    /// Directory label of this run.
    pub fn label(&self) -> String {
        format!(
            "{}_{}_l{}",
            self.problem, self.scheme.kind, self.scheme.replacement_level
        )
    }
}

/// State advanced by the stepping loop; which variant depends on the
/// replacement level.
enum RunState {
    Nodal(NodalState),
    Conserved(ConservedState),
}

impl RunState {
    fn values(&self) -> &[f64] {
        match self {
            RunState::Nodal(s) => &s.f,
            RunState::Conserved(s) => &s.f,
        }
    }

    fn averages(&self) -> Option<&[f64]> {
        match self {
            RunState::Nodal(_) => None,
            RunState::Conserved(s) => Some(&s.rho),
        }
    }

    fn total_mass(&self, grid: &Grid1D) -> f64 {
        match self {
            RunState::Nodal(s) => s.total_mass(grid),
            RunState::Conserved(s) => s.total_mass(grid),
        }
    }
}

/// Execute one configured run, writing artifacts unless `no_output` is
/// set. A CFL abort mid-run still flushes `series.csv` and a
/// `metrics.json` carrying an error marker, then returns the error.
pub fn run(config: &RunConfig) -> Result<RunRecord> {
    let spec = config.problem_spec()?;
    config.validate_pairing(&spec)?;
    let dt = spec.dt()?;
    let grid = spec.grid.clone();
    let f0 = spec.initial();
    if f0.len() != grid.n {
        return Err(AdvecError::Config(format!(
            "initial profile length {} does not match grid size {}",
            f0.len(),
            grid.n
        )));
    }

    let level = config.scheme.replacement_level;
    let mut state = match level {
        0 => RunState::Nodal(NodalState::from_profile(&f0, &grid, config.d_init)?),
        1 => RunState::Conserved(init_primitive(&f0, &grid)?),
        2 => RunState::Conserved(init_double_primitive(&f0, &grid)?),
        _ => unreachable!("validated"),
    };

    let mut record = RunRecord::default();
    let out = if config.no_output {
        None
    } else {
        Some(prepare_out_dir(config)?)
    };

    let observe = |record: &mut RunRecord, step: usize, state: &RunState| {
        record.mass_series.push(state.total_mass(&grid));
        let f = state.values();
        let min = f.iter().fold(f64::INFINITY, |m, &v| m.min(v));
        let max = f.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v));
        record.extrema_series.push((min, max));
        if config.snapshots.contains(&step) {
            record.snapshots.insert(step, f.to_vec());
        }
    };
    observe(&mut record, 0, &state);

    let mut failure: Option<AdvecError> = None;
    for step in 1..=spec.steps {
        let next = advance(&state, &spec, config, dt, &grid);
        match next {
            Ok(next) => {
                state = next;
                observe(&mut record, step, &state);
            }
            Err(err) => {
                failure = Some(err);
                break;
            }
        }
    }

    if failure.is_none() {
        record.metrics = compute_metrics(&spec, &record, &state, dt)?;
    }
    if let Some(dir) = &out {
        write_series_csv(&dir.join("series.csv"), &record, dt)?;
        write_profile_csv(
            &dir.join("profile.csv"),
            &grid,
            state.values(),
            state.averages(),
            exact_column(&spec)?.as_deref(),
        )?;
        for (&step, profile) in &record.snapshots {
            let name = format!("profile_step{step:06}.csv");
            write_profile_csv(&dir.join(name), &grid, profile, None, None)?;
        }
        write_metrics_json(
            &dir.join("metrics.json"),
            config,
            &spec,
            &record,
            failure.as_ref(),
        )?;
    }
    match failure {
        Some(err) => Err(err),
        None => Ok(record),
    }
}

fn advance(
    state: &RunState,
    spec: &ProblemSpec,
    config: &RunConfig,
    dt: f64,
    grid: &Grid1D,
) -> Result<RunState> {
    Ok(match (state, config.scheme.replacement_level) {
        (RunState::Nodal(s), 0) => RunState::Nodal(step_nonconservative(
            s,
            &spec.velocity,
            dt,
            grid,
            &config.scheme,
        )?),
        (RunState::Conserved(s), 1) => RunState::Conserved(match spec.velocity {
            VelocityField::SelfAdvect => burgers_step(s, dt, grid, &config.scheme)?,
            VelocityField::Constant(_) => {
                step_conservative(s, &spec.velocity, dt, grid, &config.scheme)?
            }
        }),
        (RunState::Conserved(s), 2) => RunState::Conserved(step_double_replacement(
            s,
            &spec.velocity,
            dt,
            grid,
            &config.scheme,
        )?),
        _ => unreachable!("state variant matches level"),
    })
}

/// The exact final profile, for problems that have one.
fn exact_column(spec: &ProblemSpec) -> Result<Option<Vec<f64>>> {
    match spec.velocity {
        VelocityField::Constant(_) if !matches!(spec.profile, Profile::Tabulated(_)) => {
            Ok(Some(spec.exact_after(spec.steps)?))
        }
        _ => Ok(None),
    }
}

fn compute_metrics(
    spec: &ProblemSpec,
    record: &RunRecord,
    state: &RunState,
    dt: f64,
) -> Result<Metrics> {
    let mut metrics = Metrics::default();
    let f = state.values();
    metrics.mass_drift = record.mass_drift(&spec.grid);

    if let Some(exact) = exact_column(spec)? {
        let (l1, linf) = error_norms(f, &exact);
        metrics.l1_error = Some(l1);
        metrics.linf_error = Some(linf);
    }

    match spec.kind {
        ProblemKind::Example1 => {
            let displacement = spec.steps as f64 * dt / spec.grid.h;
            if (displacement - displacement.round()).abs() < 1e-9 {
                metrics.edge_window = Some(edge_window(f, displacement)?);
            }
        }
        ProblemKind::Example2 | ProblemKind::Example4 => {
            let displacement = (spec.steps as f64 * dt / spec.grid.h).round() as usize;
            // Advected image of the triangle support.
            let lo = (20 + displacement).min(spec.grid.n - 1);
            let hi = (41 + displacement).min(spec.grid.n);
            metrics.corner_max = Some(corner_max(f, lo..hi));
        }
        ProblemKind::Example3Burgers => {
            metrics.shock_position = shock_position(f, &spec.grid).ok();
        }
        ProblemKind::Custom => {}
    }
    Ok(metrics)
}

fn prepare_out_dir(config: &RunConfig) -> Result<PathBuf> {
    let dir = config.out_root().join(config.label());
    fs::create_dir_all(&dir)?;
    Ok(dir)
}

fn fmt_float(v: f64) -> String {
    format!("{v}")
}

/// Write a profile CSV: `index,x,f,rho,exact`, blank where a column does
/// not apply.
pub fn write_profile_csv(
    path: &Path,
    grid: &Grid1D,
    f: &[f64],
    rho: Option<&[f64]>,
    exact: Option<&[f64]>,
) -> Result<()> {
    let mut text = String::from("index,x,f,rho,exact\n");
    for i in 0..grid.n {
        let rho_s = rho.map_or(String::new(), |r| fmt_float(r[i]));
        let exact_s = exact.map_or(String::new(), |e| fmt_float(e[i]));
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            i,
            fmt_float(grid.x(i)),
            fmt_float(f[i]),
            rho_s,
            exact_s
        ));
    }
    fs::write(path, text)?;
    Ok(())
}

/// Read a profile CSV back. Returns the reconstructed grid (periodic,
/// spacing from the first two coordinates), the values, and the cell
/// averages when the column is filled.
pub fn read_profile_csv(path: &Path) -> Result<(Grid1D, Vec<f64>, Option<Vec<f64>>)> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| AdvecError::Config("empty profile CSV".into()))?;
    if !header.starts_with("index,x,f") {
        return Err(AdvecError::Config(format!(
            "unexpected profile header '{header}'"
        )));
    }
    let mut xs = Vec::new();
    let mut f = Vec::new();
    let mut rho = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() < 3 {
            return Err(AdvecError::Config(format!(
                "{}:{}: expected at least 3 columns",
                path.display(),
                lineno + 2
            )));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse::<f64>().map_err(|_| {
                AdvecError::Config(format!(
                    "{}:{}: bad float '{s}'",
                    path.display(),
                    lineno + 2
                ))
            })
        };
        xs.push(parse(fields[1])?);
        f.push(parse(fields[2])?);
        if fields.len() > 3 && !fields[3].is_empty() {
            rho.push(parse(fields[3])?);
        }
    }
    if f.len() < 3 {
        return Err(AdvecError::Config(
            "profile CSV has fewer than 3 rows".into(),
        ));
    }
    let h = xs[1] - xs[0];
    let grid = Grid1D::new(f.len(), h, crate::grid::Boundary::Periodic, xs[0])?;
    let rho = if rho.len() == f.len() {
        Some(rho)
    } else {
        None
    };
    Ok((grid, f, rho))
}

fn write_series_csv(path: &Path, record: &RunRecord, dt: f64) -> Result<()> {
    let mut text = String::from("step,time,mass,min_f,max_f\n");
    for (step, (mass, (min, max))) in record
        .mass_series
        .iter()
        .zip(record.extrema_series.iter())
        .enumerate()
    {
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            step,
            fmt_float(step as f64 * dt),
            fmt_float(*mass),
            fmt_float(*min),
            fmt_float(*max)
        ));
    }
    fs::write(path, text)?;
    Ok(())
}

fn write_metrics_json(
    path: &Path,
    config: &RunConfig,
    spec: &ProblemSpec,
    record: &RunRecord,
    failure: Option<&AdvecError>,
) -> Result<()> {
    let m = &record.metrics;
    let value = json!({
        "problem": spec.kind.name(),
        "scheme": config.scheme.kind.name(),
        "level": config.scheme.replacement_level,
        "steps": spec.steps,
        "table1_window": m.edge_window.as_ref().map(|w| w.to_vec()),
        "corner_max": m.corner_max,
        "l1_error": m.l1_error,
        "linf_error": m.linf_error,
        "shock_position": m.shock_position,
        "mass_drift": m.mass_drift,
        "error": failure.map(|e| e.to_string()),
    });
    fs::write(
        path,
        format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("static schema")
        ),
    )?;
    Ok(())
}

/// Outcome of one matrix row.
#[derive(Debug, Clone)]
pub struct MatrixRow {
    pub label: String,
    pub scheme: SchemeKind,
    pub level: u8,
    pub steps: usize,
    pub status: String,
    pub metrics: Metrics,
}

/// Run every config, continuing past individual failures, and write a
/// combined comparison CSV keyed by scheme and level.
pub fn run_matrix(configs: &[RunConfig]) -> Result<Vec<MatrixRow>> {
    if configs.is_empty() {
        return Err(AdvecError::Config("matrix needs at least one run".into()));
    }
    let mut rows = Vec::new();
    for config in configs {
        let steps = config.problem_spec().map(|s| s.steps).unwrap_or(0);
        let row = match run(config) {
            Ok(record) => MatrixRow {
                label: config.label(),
                scheme: config.scheme.kind,
                level: config.scheme.replacement_level,
                steps,
                status: "ok".into(),
                metrics: record.metrics,
            },
            Err(err) => MatrixRow {
                label: config.label(),
                scheme: config.scheme.kind,
                level: config.scheme.replacement_level,
                steps,
                status: format!("error: {err}"),
                metrics: Metrics::default(),
            },
        };
        rows.push(row);
    }
    let root = configs[0].out_root();
    if !configs[0].no_output {
        fs::create_dir_all(&root)?;
        write_matrix_csv(&root.join("comparison.csv"), &rows)?;
    }
    Ok(rows)
}

fn write_matrix_csv(path: &Path, rows: &[MatrixRow]) -> Result<()> {
    let mut text = String::from(
        "label,scheme,level,conservative,steps,status,mass_drift,l1_error,linf_error,corner_max,shock_position",
    );
    for j in 0..crate::diagnostics::EDGE_WINDOW_LEN {
        text.push_str(&format!(",w{j:02}"));
    }
    text.push('\n');
    for row in rows {
        let m = &row.metrics;
        let opt = |v: Option<f64>| v.map_or(String::new(), fmt_float);
        text.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.label,
            row.scheme,
            row.level,
            row.level >= 1,
            row.steps,
            row.status,
            opt(m.mass_drift),
            opt(m.l1_error),
            opt(m.linf_error),
            opt(m.corner_max),
            opt(m.shock_position),
        ));
        for j in 0..crate::diagnostics::EDGE_WINDOW_LEN {
            let cell = m.edge_window.map_or(String::new(), |w| fmt_float(w[j]));
            text.push_str(&format!(",{cell}"));
        }
        text.push('\n');
    }
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet(problem: ProblemKind, kind: SchemeKind, level: u8, steps: usize) -> RunConfig {
        RunConfig {
            problem,
            scheme: SchemeSpec {
                kind,
                replacement_level: level,
            },
            steps: Some(steps),
            no_output: true,
            ..RunConfig::default()
        }
    }

    #[test]
    fn zero_step_run_keeps_initial_profile() {
        let mut config = quiet(ProblemKind::Example1, SchemeKind::Cubic, 1, 0);
        config.snapshots = vec![0];
        let record = run(&config).unwrap();
        let initial = ProblemSpec::example1().initial();
        assert_eq!(record.snapshots[&0], initial);
        assert_eq!(record.mass_series.len(), 1);
        assert_eq!(record.snapshots.len(), 1);
    }

    #[test]
    fn snapshots_only_at_requested_steps() {
        let mut config = quiet(ProblemKind::Example1, SchemeKind::Hcr, 1, 10);
        config.snapshots = vec![3, 7];
        let record = run(&config).unwrap();
        assert_eq!(
            record.snapshots.keys().copied().collect::<Vec<_>>(),
            vec![3, 7]
        );
    }

    #[test]
    fn double_replacement_problem_runs_through_the_runner() {
        let config = quiet(ProblemKind::Example4, SchemeKind::Cubic, 2, 50);
        let record = run(&config).unwrap();
        assert_eq!(record.mass_series.len(), 51);
        assert!(record.metrics.corner_max.is_some());
    }

    #[test]
    fn invalid_pairings_fail_before_stepping() {
        // csl2_direct is a level-1 scheme.
        let config = quiet(ProblemKind::Example1, SchemeKind::Csl2Direct, 0, 10);
        assert!(matches!(run(&config), Err(AdvecError::Config(_))));
        // level 2 needs the open-grid problem.
        let config = quiet(ProblemKind::Example1, SchemeKind::Hcr, 2, 10);
        assert!(matches!(run(&config), Err(AdvecError::Config(_))));
        // the double-replacement problem needs level 2.
        let config = quiet(ProblemKind::Example4, SchemeKind::Hcr, 1, 10);
        assert!(matches!(run(&config), Err(AdvecError::Config(_))));
    }

    #[test]
    fn snapshot_beyond_last_step_is_a_config_error() {
        let mut config = quiet(ProblemKind::Example1, SchemeKind::Hcr, 1, 10);
        config.snapshots = vec![20];
        assert!(matches!(run(&config), Err(AdvecError::Config(_))));
    }

    #[test]
    fn serial_reruns_are_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = quiet(ProblemKind::Example1, SchemeKind::Hcr, 1, 50);
        config.no_output = false;
        config.out_dir = Some(dir.path().to_path_buf());
        run(&config).unwrap();
        let run_dir = dir.path().join(config.label());
        let profile = fs::read(run_dir.join("profile.csv")).unwrap();
        let series = fs::read(run_dir.join("series.csv")).unwrap();
        let metrics = fs::read(run_dir.join("metrics.json")).unwrap();

        run(&config).unwrap();
        assert_eq!(profile, fs::read(run_dir.join("profile.csv")).unwrap());
        assert_eq!(series, fs::read(run_dir.join("series.csv")).unwrap());
        assert_eq!(metrics, fs::read(run_dir.join("metrics.json")).unwrap());
    }

    #[test]
    fn custom_roundtrip_is_exact() {
        // A written profile re-ingested as a custom initial condition
        // must reproduce the in-memory state bit for bit.
        let dir = tempfile::tempdir().unwrap();
        let mut config = quiet(ProblemKind::Example1, SchemeKind::Hcr, 1, 37);
        config.no_output = false;
        config.out_dir = Some(dir.path().to_path_buf());
        run(&config).unwrap();
        let profile_path = dir.path().join(config.label()).join("profile.csv");
        let (grid, f, rho) = read_profile_csv(&profile_path).unwrap();
        assert_eq!(grid.n, 100);
        assert!(rho.is_some());

        let mut continued = quiet(ProblemKind::Custom, SchemeKind::Hcr, 1, 0);
        continued.initial = Some(profile_path.clone());
        continued.cfl = Some(0.2);
        continued.snapshots = vec![0];
        let record = run(&continued).unwrap();
        assert_eq!(record.snapshots[&0], f);
    }

    #[test]
    fn cfl_abort_writes_error_marker() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = quiet(ProblemKind::Example1, SchemeKind::Hcr, 1, 10);
        config.no_output = false;
        config.out_dir = Some(dir.path().to_path_buf());
        config.dt = Some(2.0); // courant number 2
        let err = run(&config).unwrap_err();
        assert!(matches!(err, AdvecError::CflViolation { .. }));
        let metrics =
            fs::read_to_string(dir.path().join(config.label()).join("metrics.json")).unwrap();
        assert!(metrics.contains("CFL violation"), "{metrics}");
        assert!(dir.path().join(config.label()).join("series.csv").exists());
    }

    #[test]
    fn matrix_continues_past_failures() {
        let ok = quiet(ProblemKind::Example1, SchemeKind::Hcr, 1, 5);
        let mut bad = quiet(ProblemKind::Example1, SchemeKind::Hcr, 1, 5);
        bad.dt = Some(5.0);
        let rows = run_matrix(&[ok, bad]).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].status, "ok");
        assert!(rows[1].status.starts_with("error"));
    }
}
