//! Canonical problem setups, exact linear solutions, the Burgers'
//! stepper, and the first-order upwind reference.
//!
//! Four benchmark problems are built in: twin square waves under
//! constant velocity, a composite ramp/plateau/square profile, inviscid
//! Burgers' flow started from a shifted cosine, and the double-integral
//! rerun of the composite profile on an open grid.

use crate::error::{AdvecError, Result};
use crate::grid::{Boundary, Grid1D};
use crate::scheme::{self, SchemeSpec, VelocityField};
use crate::state::ConservedState;

/// Built-in problem selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Example1,
    Example2,
    Example3Burgers,
    Example4,
    Custom,
}

impl ProblemKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemKind::Example1 => "example1",
            ProblemKind::Example2 => "example2",
            ProblemKind::Example3Burgers => "example3_burgers",
            ProblemKind::Example4 => "example4",
            ProblemKind::Custom => "custom",
        }
    }
}

impl std::str::FromStr for ProblemKind {
    type Err = AdvecError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(ProblemKind::Example1),
            "example2" => Ok(ProblemKind::Example2),
            "example3_burgers" | "burgers" => Ok(ProblemKind::Example3Burgers),
            "example4" => Ok(ProblemKind::Example4),
            "custom" => Ok(ProblemKind::Custom),
            other => Err(AdvecError::Config(format!("unknown problem '{other}'"))),
        }
    }
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Time step selection: a Courant number (resolved against the constant
/// velocity) or an explicit step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Timing {
    Cfl(f64),
    Dt(f64),
}

/// Initial profile `G(x)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    /// Square pulses of width 9h: −1 on [13, 21], +1 on [40, 48].
    TwinSquarePulses,
    /// Ramp up to a sharp corner at 31, down-slope, half plateau, unit
    /// square wave; zero elsewhere.
    RampPlateauSquare,
    /// `mean + amp · cos(2π x / period)`.
    ShiftedCosine { mean: f64, amp: f64, period: f64 },
    /// Point values with no closed form.
    Tabulated(Vec<f64>),
}

impl Profile {
    /// Evaluate the closed form at a coordinate (already wrapped into the
    /// domain). Tabulated profiles have no closed form.
    pub fn eval(&self, x: f64) -> Option<f64> {
        match self {
            Profile::TwinSquarePulses => Some(if (13.0..=21.0).contains(&x) {
                -1.0
            } else if (40.0..=48.0).contains(&x) {
                1.0
            } else {
                0.0
            }),
            Profile::RampPlateauSquare => Some(if (20.0..31.0).contains(&x) {
                (x - 20.0) / 11.0
            } else if (31.0..41.0).contains(&x) {
                1.0 - (x - 31.0) / 20.0
            } else if (41.0..60.0).contains(&x) {
                0.5
            } else if (60.0..80.0).contains(&x) {
                1.0
            } else {
                0.0
            }),
            Profile::ShiftedCosine { mean, amp, period } => {
                Some(mean + amp * (2.0 * std::f64::consts::PI * x / period).cos())
            }
            Profile::Tabulated(_) => None,
        }
    }
}

/// A fully specified run setup.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub grid: Grid1D,
    pub timing: Timing,
    pub steps: usize,
    pub profile: Profile,
    pub velocity: VelocityField,
}

impl ProblemSpec {
    /// Twin square waves advected at `u = 1`: N = 100, periodic,
    /// CFL = 0.2, 200 steps.
    pub fn example1() -> Self {
        Self {
            kind: ProblemKind::Example1,
            grid: Grid1D::periodic(100, 1.0).expect("static grid"),
            timing: Timing::Cfl(0.2),
            steps: 200,
            profile: Profile::TwinSquarePulses,
            velocity: VelocityField::Constant(1.0),
        }
    }

    /// Composite ramp/triangle/plateau/square profile at `u = 1`:
    /// N = 200, periodic, CFL = 0.2, 440 steps.
    pub fn example2() -> Self {
        Self {
            kind: ProblemKind::Example2,
            grid: Grid1D::periodic(200, 1.0).expect("static grid"),
            timing: Timing::Cfl(0.2),
            steps: 440,
            profile: Profile::RampPlateauSquare,
            velocity: VelocityField::Constant(1.0),
        }
    }

    /// Inviscid Burgers' flow from `0.5 + 0.4 cos(2π x / 100)`:
    /// N = 100, periodic, Δt = 0.1, run to t = 100.
    pub fn burgers() -> Self {
        Self {
            kind: ProblemKind::Example3Burgers,
            grid: Grid1D::periodic(100, 1.0).expect("static grid"),
            timing: Timing::Dt(0.1),
            steps: 1000,
            profile: Profile::ShiftedCosine {
                mean: 0.5,
                amp: 0.4,
                period: 100.0,
            },
            velocity: VelocityField::SelfAdvect,
        }
    }

    /// The composite profile rerun for the double-replacement
    /// experiment: open grid (a running primitive needs an anchored
    /// origin), otherwise the same parameters as `example2`. The profile
    /// keeps quiescent margins of at least 20 cells on both sides for
    /// the whole run.
    pub fn example4() -> Self {
        Self {
            kind: ProblemKind::Example4,
            grid: Grid1D::open(200, 1.0).expect("static grid"),
            timing: Timing::Cfl(0.2),
            steps: 440,
            profile: Profile::RampPlateauSquare,
            velocity: VelocityField::Constant(1.0),
        }
    }

    /// Resolve the time step.
    pub fn dt(&self) -> Result<f64> {
        match self.timing {
            Timing::Dt(dt) => Ok(dt),
            Timing::Cfl(cfl) => {
                if !(0.0 < cfl && cfl <= 1.0) {
                    return Err(AdvecError::Config(format!(
                        "CFL number {cfl} outside (0, 1]"
                    )));
                }
                match self.velocity {
                    VelocityField::Constant(u0) if u0 != 0.0 => Ok(cfl * self.grid.h / u0.abs()),
                    VelocityField::Constant(_) => Err(AdvecError::Config(
                        "CFL timing needs a nonzero velocity".into(),
                    )),
                    VelocityField::SelfAdvect => Err(AdvecError::Config(
                        "CFL timing is ambiguous for self-advection; give an explicit dt".into(),
                    )),
                }
            }
        }
    }

    /// Sample the initial profile on the grid.
    pub fn initial(&self) -> Vec<f64> {
        match &self.profile {
            Profile::Tabulated(values) => values.clone(),
            closed => (0..self.grid.n)
                .map(|i| closed.eval(self.grid.x(i)).expect("closed-form profile"))
                .collect(),
        }
    }

    /// Exact solution of the constant-velocity problem after `steps`
    /// steps: the initial profile translated by `steps · u Δt`, evaluated
    /// through the closed form with periodic wrap. Tabulated profiles
    /// translate only by whole cells.
    pub fn exact_after(&self, steps: usize) -> Result<Vec<f64>> {
        let u0 = match self.velocity {
            VelocityField::Constant(u0) => u0,
            VelocityField::SelfAdvect => {
                return Err(AdvecError::Config(
                    "no exact translate for self-advection".into(),
                ))
            }
        };
        let shift = steps as f64 * u0 * self.dt()?;
        match &self.profile {
            Profile::Tabulated(values) => {
                let cells = shift / self.grid.h;
                if (cells - cells.round()).abs() > 1e-9 {
                    return Err(AdvecError::Config(format!(
                        "tabulated profile translates only by whole cells, got {cells}"
                    )));
                }
                let cells = cells.round() as isize;
                Ok((0..self.grid.n)
                    .map(|i| {
                        let src = (i as isize - cells).rem_euclid(self.grid.n as isize) as usize;
                        values[src]
                    })
                    .collect())
            }
            closed => Ok((0..self.grid.n)
                .map(|i| {
                    let x = self.grid.wrap_coord(self.grid.x(i) - shift);
                    closed.eval(x).expect("closed-form profile")
                })
                .collect()),
        }
    }
}

/// One conservative Burgers' step. The advected quantity is its own
/// velocity; the flux branch runs on half of it, which is the transport
/// speed of the running primitive in conservation form. The point-value
/// branch keeps the full velocity and the Jacobian factor.
pub fn burgers_step(
    state: &ConservedState,
    dt: f64,
    grid: &Grid1D,
    spec: &SchemeSpec,
) -> Result<ConservedState> {
    spec.validate()?;
    if spec.replacement_level != 1 {
        return Err(AdvecError::Config(format!(
            "the Burgers stepper runs at replacement level 1, got {}",
            spec.replacement_level
        )));
    }
    let f = state.f.clone();
    scheme::step_conservative_with_velocities(
        state,
        grid,
        spec.kind,
        dt,
        &VelocityField::SelfAdvect,
        |i| 0.5 * f[i],
        |i| f[i],
    )
}

/// One step of the first-order upwind scheme on the conservation form
/// `u_t + (u²/2)_x = 0` with the one-sided flux. Valid only for fields
/// that stay positive; used as ground truth for shock positions.
pub fn upwind_oracle_step(u: &[f64], dt: f64, grid: &Grid1D) -> Result<Vec<f64>> {
    if let Some((i, &v)) = u.iter().enumerate().find(|(_, &v)| v <= 0.0) {
        return Err(AdvecError::Config(format!(
            "one-sided upwind flux needs u > 0 everywhere, u[{i}] = {v}"
        )));
    }
    let n = grid.n;
    let g = |u: f64| 0.5 * u * u;
    Ok((0..n)
        .map(|i| {
            let prev = (i + n - 1) % n;
            u[i] - dt / grid.h * (g(u[i]) - g(u[prev]))
        })
        .collect())
}

/// One step of the Godunov-flux upwind scheme, valid for signed fields.
/// Used only to extend the reference to sign-changing velocity runs.
pub fn godunov_oracle_step(u: &[f64], dt: f64, grid: &Grid1D) -> Vec<f64> {
    let n = grid.n;
    let g = |u: f64| 0.5 * u * u;
    // Interface flux between left state a and right state b for the
    // convex flux u²/2.
    let interface = |a: f64, b: f64| g(a.max(0.0)).max(g(b.min(0.0)));
    let flux_left: Vec<f64> = (0..n)
        .map(|i| interface(u[(i + n - 1) % n], u[i]))
        .collect();
    (0..n)
        .map(|i| {
            let f_right = flux_left[(i + 1) % n];
            u[i] - dt / grid.h * (f_right - flux_left[i])
        })
        .collect()
}

/// Refined upwind reference for a Burgers' run: samples the closed-form
/// profile on a grid refined `refine`-fold, runs `steps · refine` upwind
/// steps of `dt / refine`, and returns the fine grid and profile.
/// `signed` switches to the Godunov flux.
pub fn upwind_reference(
    problem: &ProblemSpec,
    refine: usize,
    signed: bool,
) -> Result<(Grid1D, Vec<f64>)> {
    if refine == 0 {
        return Err(AdvecError::Config(
            "refinement factor must be positive".into(),
        ));
    }
    let fine = Grid1D::new(
        problem.grid.n * refine,
        problem.grid.h / refine as f64,
        problem.grid.bc,
        problem.grid.x0,
    )?;
    let dt = problem.dt()? / refine as f64;
    let mut u: Vec<f64> = (0..fine.n)
        .map(|i| {
            problem
                .profile
                .eval(fine.x(i))
                .expect("closed-form profile")
        })
        .collect();
    for _ in 0..problem.steps * refine {
        u = if signed {
            godunov_oracle_step(&u, dt, &fine)
        } else {
            upwind_oracle_step(&u, dt, &fine)?
        };
    }
    Ok((fine, u))
}

/// Run a sign-changing Burgers' problem through the constant-shift
/// decomposition: add `c` to make the field one-signed, alternate `m`
/// conservative self-advection steps with one whole-cell index shift
/// (the linear correction integrates to exactly one cell per group),
/// and return the shifted field. The caller subtracts `c` to recover
/// the original variable.
pub fn velocity_shift_run(
    state: &ConservedState,
    c: f64,
    m: usize,
    total_steps: usize,
    dt: f64,
    grid: &Grid1D,
    spec: &SchemeSpec,
) -> Result<ConservedState> {
    if grid.bc != Boundary::Periodic {
        return Err(AdvecError::Config(
            "the shift decomposition needs a periodic grid".into(),
        ));
    }
    if m == 0 || (m as f64 * (c * dt).abs() - grid.h).abs() > 1e-12 * grid.h {
        return Err(AdvecError::Config(format!(
            "shift constant incompatible with the grid: m |c dt| = {} but h = {}",
            m as f64 * (c * dt).abs(),
            grid.h
        )));
    }
    if !total_steps.is_multiple_of(m) {
        return Err(AdvecError::Config(format!(
            "step count {total_steps} is not a multiple of the shift group {m}"
        )));
    }
    let n = grid.n;
    let mut shifted = ConservedState::new(
        state.f.iter().map(|v| v + c).collect(),
        state.rho.iter().map(|v| v + c).collect(),
    )?;
    let step_shift = if c > 0.0 { 1_isize } else { -1 };
    for step in 1..=total_steps {
        shifted = burgers_step(&shifted, dt, grid, spec)?;
        if step % m == 0 {
            // The correction term moves the profile by exactly one cell
            // against the shift direction per group of m steps.
            let relabel = |src: &[f64]| -> Vec<f64> {
                (0..n)
                    .map(|i| src[(i as isize + step_shift).rem_euclid(n as isize) as usize])
                    .collect()
            };
            shifted = ConservedState::new(relabel(&shifted.f), relabel(&shifted.rho))?;
        }
    }
    Ok(shifted)
}
