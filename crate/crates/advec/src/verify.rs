//! Acceptance checks: every release-gating criterion as a library
//! function, shared by the `acceptance` test target and `advec verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagnostics::{
    edge_window, error_norms, monotone_edge_check, periodic_distance, shock_position,
    EdgeDirection, EDGE_WINDOW_LEN,
};
use crate::grid::Grid1D;
use crate::interpolant::{
    cell_outflux, csl2_coefficients, csl2_value, cubic_coefficients, hcr_deriv, hcr_eval,
    hcr_params, hcr_params_with_alpha, CellData,
};
use crate::problems::{burgers_step, upwind_reference, ProblemSpec};
use crate::scheme::{
    step_conservative, step_csl2_direct, step_double_replacement, step_nonconservative, SchemeKind,
    SchemeSpec, VelocityField,
};
use crate::state::{
    init_double_primitive, init_primitive, ConservedState, DerivativeInit, NodalState,
};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            name,
            passed,
            detail,
        }
    }
}

/// Reference values around the advected leading edge of the negative
/// pulse after 200 steps at Courant number 0.2, one column per scheme.
/// The values are pinned to six decimals.
pub const REFERENCE_WINDOW_HCR: [f64; EDGE_WINDOW_LEN] = [
    0.0, 0.0, 0.0, -0.000001, -0.000044, -0.001716, -0.052075, -0.305191, -0.681895, -0.954887,
    -0.999656, -0.999996, -0.999997,
];
pub const REFERENCE_WINDOW_CUBIC: [f64; EDGE_WINDOW_LEN] = [
    -0.000014, -0.000986, -0.001887, 0.004413, 0.024674, 0.032729, -0.052964, -0.304522, -0.665011,
    -0.955764, -1.058063, -1.029841, -0.999959,
];
pub const REFERENCE_WINDOW_RATIONAL: [f64; EDGE_WINDOW_LEN] = [
    0.0, -0.000004, -0.000037, -0.000345, -0.002738, -0.018069, -0.09232, -0.32068, -0.67146,
    -0.90682, -0.982846, -0.997188, -0.998634,
];
pub const REFERENCE_WINDOW_MODIFIED_RATIONAL: [f64; EDGE_WINDOW_LEN] = [
    0.0, 0.0, 0.000019, 0.000223, 0.000387, -0.000109, -0.04052, -0.277075, -0.647653, -0.951461,
    -1.059713, -1.031324, -1.000665,
];

/// Tolerance on the reference window; well above the six-decimal
/// rounding of the tabulation, absorbing unstated domain details.
const WINDOW_TOL: f64 = 1e-3;
/// Stretch tolerance reported (not enforced) per column.
const WINDOW_STRETCH: f64 = 5e-6;

/// Run the square-wave problem conservatively and return the final
/// point values.
fn example1_conserved(kind: SchemeKind, steps: usize) -> ConservedState {
    let problem = ProblemSpec::example1();
    let dt = problem.dt().expect("static dt");
    let spec = SchemeSpec {
        kind,
        replacement_level: 1,
    };
    let mut state = init_primitive(&problem.initial(), &problem.grid).expect("init");
    for _ in 0..steps {
        state = step_conservative(&state, &problem.velocity, dt, &problem.grid, &spec)
            .expect("CFL 0.2 run");
    }
    state
}

fn example1_window(kind: SchemeKind) -> [f64; EDGE_WINDOW_LEN] {
    let state = example1_conserved(kind, 200);
    edge_window(&state.f, 40.0).expect("whole-cell displacement")
}

/// Criterion 1: conservative runs of all four kernels reproduce the
/// reference edge window within 1e-3 per value.
pub fn criterion_edge_window_reference() -> CriterionResult {
    let columns = [
        (SchemeKind::Hcr, REFERENCE_WINDOW_HCR),
        (SchemeKind::Cubic, REFERENCE_WINDOW_CUBIC),
        (SchemeKind::Rational, REFERENCE_WINDOW_RATIONAL),
        (
            SchemeKind::ModifiedRational,
            REFERENCE_WINDOW_MODIFIED_RATIONAL,
        ),
    ];
    let mut passed = true;
    let mut details = Vec::new();
    for (kind, reference) in columns {
        let window = example1_window(kind);
        let worst = window
            .iter()
            .zip(reference.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        passed &= worst <= WINDOW_TOL;
        let stretch = if worst <= WINDOW_STRETCH {
            ", meets stretch 5e-6"
        } else {
            ""
        };
        details.push(format!("{kind}: max |dev| = {worst:.3e}{stretch}"));
    }
    CriterionResult::new(
        "edge window matches reference values",
        passed,
        details.join("; "),
    )
}

/// Criterion 2: maxima at the advected triangle corner.
pub fn criterion_corner_maxima() -> CriterionResult {
    let problem = ProblemSpec::example2();
    let dt = problem.dt().expect("static dt");
    let f0 = problem.initial();
    let corner_region = 20 + 88..41 + 88;

    let conservative = |kind: SchemeKind| {
        let spec = SchemeSpec {
            kind,
            replacement_level: 1,
        };
        let mut state = init_primitive(&f0, &problem.grid).expect("init");
        for _ in 0..problem.steps {
            state = step_conservative(&state, &problem.velocity, dt, &problem.grid, &spec)
                .expect("CFL 0.2 run");
        }
        crate::diagnostics::corner_max(&state.f, corner_region.clone())
    };
    let nonconservative = |kind: SchemeKind| {
        let spec = SchemeSpec {
            kind,
            replacement_level: 0,
        };
        let mut state =
            NodalState::from_profile(&f0, &problem.grid, DerivativeInit::Zero).expect("init");
        for _ in 0..problem.steps {
            state = step_nonconservative(&state, &problem.velocity, dt, &problem.grid, &spec)
                .expect("CFL 0.2 run");
        }
        crate::diagnostics::corner_max(&state.f, corner_region.clone())
    };

    let cases = [
        (
            "conservative hcr",
            conservative(SchemeKind::Hcr),
            0.935,
            0.002,
        ),
        (
            "conservative rational",
            conservative(SchemeKind::Rational),
            0.916,
            0.002,
        ),
        ("hcr", nonconservative(SchemeKind::Hcr), 0.937, 0.005),
        (
            "rational",
            nonconservative(SchemeKind::Rational),
            0.923,
            0.005,
        ),
    ];
    let mut passed = true;
    let mut details = Vec::new();
    for (label, got, want, tol) in cases {
        let ok = (got - want).abs() <= tol;
        passed &= ok;
        details.push(format!("{label}: {got:.4} (want {want} ± {tol})"));
    }
    CriterionResult::new("corner maxima", passed, details.join("; "))
}

/// Criterion 3: the hybrid and rational kernels keep the audited edge
/// monotone and bounded; the cubic and switched kernels do not.
pub fn criterion_edge_monotonicity() -> CriterionResult {
    let keep = [SchemeKind::Hcr, SchemeKind::Rational];
    let spoil = [SchemeKind::Cubic, SchemeKind::ModifiedRational];
    let mut passed = true;
    let mut details = Vec::new();
    for kind in keep {
        let ok = monotone_edge_check(&example1_window(kind), EdgeDirection::Decreasing);
        passed &= ok;
        details.push(format!("{kind}: monotone = {ok} (want true)"));
    }
    for kind in spoil {
        let ok = monotone_edge_check(&example1_window(kind), EdgeDirection::Decreasing);
        passed &= !ok;
        details.push(format!("{kind}: monotone = {ok} (want false)"));
    }
    CriterionResult::new("edge monotonicity dichotomy", passed, details.join("; "))
}

/// Criterion 4: every conservative periodic run keeps its total mass:
/// relative drift at most 1e-10, absolute 1e-12 · N h when the initial
/// total vanishes.
pub fn criterion_mass_conservation() -> CriterionResult {
    let mut passed = true;
    let mut worst = (0.0_f64, String::new());
    let mut check = |label: String, drift: f64, tol: f64| {
        if drift > worst.0 {
            worst = (drift, label.clone());
        }
        if drift > tol {
            passed = false;
        }
    };

    for kind in SchemeKind::ALL {
        // Square waves to 2000 steps: zero initial total, absolute bound.
        let problem = ProblemSpec::example1();
        let dt = problem.dt().expect("static dt");
        let spec = SchemeSpec {
            kind,
            replacement_level: 1,
        };
        let mut state = init_primitive(&problem.initial(), &problem.grid).expect("init");
        let m0 = state.total_mass(&problem.grid);
        for _ in 0..2000 {
            state = step_conservative(&state, &problem.velocity, dt, &problem.grid, &spec)
                .expect("run");
        }
        let drift = (state.total_mass(&problem.grid) - m0).abs();
        check(
            format!("square waves/{kind}"),
            drift,
            1e-12 * problem.grid.domain_len(),
        );

        // Composite wave to 2000 steps: relative bound.
        let problem = ProblemSpec::example2();
        let dt = problem.dt().expect("static dt");
        let mut state = init_primitive(&problem.initial(), &problem.grid).expect("init");
        let m0 = state.total_mass(&problem.grid);
        for _ in 0..2000 {
            state = step_conservative(&state, &problem.velocity, dt, &problem.grid, &spec)
                .expect("run");
        }
        let drift = (state.total_mass(&problem.grid) - m0).abs() / m0.abs();
        check(format!("composite wave/{kind}"), drift, 1e-10);

        // Burgers' flow to t = 100: relative bound.
        let problem = ProblemSpec::burgers();
        let dt = problem.dt().expect("static dt");
        let mut state = init_primitive(&problem.initial(), &problem.grid).expect("init");
        let m0 = state.total_mass(&problem.grid);
        for _ in 0..problem.steps {
            state = burgers_step(&state, dt, &problem.grid, &spec).expect("run");
        }
        let drift = (state.total_mass(&problem.grid) - m0).abs() / m0.abs();
        check(format!("burgers/{kind}"), drift, 1e-10);
    }
    CriterionResult::new(
        "mass conservation",
        passed,
        format!("worst drift {} at {}", worst.0, worst.1),
    )
}

/// Criterion 5: the conservative cubic and the cell-integrated quadratic
/// agree entrywise to 1e-13 over 100 random states times 10 steps.
pub fn criterion_path_equivalence(seed: u64) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = Grid1D::periodic(32, 1.0).expect("static grid");
    let spec = SchemeSpec {
        kind: SchemeKind::Cubic,
        replacement_level: 1,
    };
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let f: Vec<f64> = (0..32).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let rho: Vec<f64> = (0..32).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let u = rng.gen_range(-1.9..1.9);
        let dt = 0.5;
        let vel = VelocityField::Constant(u);
        let mut a = ConservedState::new(f.clone(), rho.clone()).expect("state");
        let mut b = a.clone();
        for _ in 0..10 {
            a = step_conservative(&a, &vel, dt, &grid, &spec).expect("run");
            b = step_csl2_direct(&b, &vel, dt, &grid).expect("run");
        }
        for i in 0..32 {
            worst = worst
                .max((a.f[i] - b.f[i]).abs())
                .max((a.rho[i] - b.rho[i]).abs());
        }
    }
    CriterionResult::new(
        "conservative cubic equals cell-integrated quadratic",
        worst <= 1e-13,
        format!("max entrywise deviation {worst:.3e} (tol 1e-13)"),
    )
}

fn burgers_extrema_series(kind: SchemeKind) -> Vec<(f64, f64)> {
    let problem = ProblemSpec::burgers();
    let dt = problem.dt().expect("static dt");
    let spec = SchemeSpec {
        kind,
        replacement_level: 1,
    };
    let mut state = init_primitive(&problem.initial(), &problem.grid).expect("init");
    let mut series = Vec::with_capacity(problem.steps + 1);
    let extrema = |f: &[f64]| {
        (
            f.iter().fold(f64::INFINITY, |m, &v| m.min(v)),
            f.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v)),
        )
    };
    series.push(extrema(&state.f));
    for _ in 0..problem.steps {
        state = burgers_step(&state, dt, &problem.grid, &spec).expect("run");
        series.push(extrema(&state.f));
    }
    series
}

/// Criterion 6: Burgers' extrema stay inside the initial range for the
/// hybrid kernel at every step, while the quadratic route overshoots
/// past 0.905 at some step.
pub fn criterion_burgers_oscillation() -> CriterionResult {
    let hcr = burgers_extrema_series(SchemeKind::Hcr);
    let hcr_ok = hcr
        .iter()
        .all(|&(min, max)| min >= 0.1 - 1e-6 && max <= 0.9 + 1e-6);
    let hcr_worst = hcr
        .iter()
        .fold(0.0_f64, |w, &(min, max)| w.max(max - 0.9).max(0.1 - min));

    let csl2 = burgers_extrema_series(SchemeKind::Csl2Direct);
    let csl2_peak = csl2
        .iter()
        .fold(f64::NEG_INFINITY, |w, &(_, max)| w.max(max));
    let csl2_overshoots = csl2_peak > 0.905;

    CriterionResult::new(
        "Burgers extrema dichotomy",
        hcr_ok && csl2_overshoots,
        format!(
            "hcr worst excursion {hcr_worst:.3e} (tol 1e-6); csl2 peak {csl2_peak:.4} (want > 0.905)"
        ),
    )
}

/// Criterion 7: shock position at t = 100 against the 5x-refined upwind
/// reference: conservative hybrid and quadratic land within 2h,
/// the non-conservative hybrid misses by more than 3h.
pub fn criterion_burgers_shock_position() -> CriterionResult {
    let problem = ProblemSpec::burgers();
    let dt = problem.dt().expect("static dt");
    let domain = problem.grid.domain_len();
    let (fine_grid, fine_u) = upwind_reference(&problem, 5, false).expect("reference run");
    let x_ref = shock_position(&fine_u, &fine_grid).expect("reference shock");

    let conservative = |kind: SchemeKind| {
        let spec = SchemeSpec {
            kind,
            replacement_level: 1,
        };
        let mut state = init_primitive(&problem.initial(), &problem.grid).expect("init");
        for _ in 0..problem.steps {
            state = burgers_step(&state, dt, &problem.grid, &spec).expect("run");
        }
        shock_position(&state.f, &problem.grid).expect("shock")
    };
    let x_hcr = conservative(SchemeKind::Hcr);
    let x_csl2 = conservative(SchemeKind::Csl2Direct);

    let spec0 = SchemeSpec {
        kind: SchemeKind::Hcr,
        replacement_level: 0,
    };
    let mut nodal =
        NodalState::from_profile(&problem.initial(), &problem.grid, DerivativeInit::Centered)
            .expect("init");
    for _ in 0..problem.steps {
        nodal = step_nonconservative(
            &nodal,
            &VelocityField::SelfAdvect,
            dt,
            &problem.grid,
            &spec0,
        )
        .expect("run");
    }
    let x_level0 = shock_position(&nodal.f, &problem.grid).expect("shock");

    let d_hcr = periodic_distance(x_hcr, x_ref, domain);
    let d_csl2 = periodic_distance(x_csl2, x_ref, domain);
    let d_level0 = periodic_distance(x_level0, x_ref, domain);
    let h = problem.grid.h;
    let passed = d_hcr <= 2.0 * h && d_csl2 <= 2.0 * h && d_level0 > 3.0 * h;
    CriterionResult::new(
        "Burgers shock position",
        passed,
        format!(
            "reference {x_ref:.3}; hcr off {d_hcr:.3} (tol 2h), csl2 off {d_csl2:.3} (tol 2h), \
             non-conservative hcr off {d_level0:.3} (want > 3h)"
        ),
    )
}

fn random_cell(rng: &mut ChaCha8Rng) -> CellData {
    CellData::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-3.0..3.0),
        rng.gen_range(-3.0..3.0),
        if rng.gen_bool(0.5) { 1.0 } else { -1.0 } * rng.gen_range(0.2..2.0),
    )
    .expect("finite cell")
}

/// Cell whose endpoint data has one-signed curvature. `convex_up` makes
/// the derivative grow along the physical x direction (positive second
/// derivative), which in the cell's own orientation means the slope
/// products P and Q are both positive regardless of the sign of
/// `h_signed`.
fn curved_cell(rng: &mut ChaCha8Rng, convex_up: bool) -> CellData {
    let h_signed: f64 = if rng.gen_bool(0.5) { 1.0 } else { -1.0 } * rng.gen_range(0.25..2.0);
    let orient = h_signed.signum() * if convex_up { 1.0 } else { -1.0 };
    let f_lo = rng.gen_range(-1.0..1.0);
    let s = rng.gen_range(-2.0..2.0);
    let f_up = f_lo + s * h_signed;
    let gap_lo = rng.gen_range(1e-3..2.0);
    let gap_up = rng.gen_range(1e-3..2.0);
    let (d_lo, d_up) = (s - gap_lo * orient, s + gap_up * orient);
    CellData::new(f_lo, f_up, d_lo, d_up, h_signed).expect("finite cell")
}

/// Criterion 8: interpolant property suite: endpoint interpolation,
/// both weight-limit reductions, curvature-sign preservation on 10^4
/// random cells of each orientation, and the outflux/quadrature match.
pub fn criterion_interpolant_properties(seed: u64) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut details = Vec::new();
    let mut passed = true;

    // Endpoint interpolation, relative 1e-12.
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let cell = random_cell(&mut rng);
        let params = hcr_params(&cell).expect("params");
        let scale_f = cell.f_lo.abs().max(cell.f_up.abs()).max(1.0);
        let scale_d = cell.d_lo.abs().max(cell.d_up.abs()).max(1.0);
        worst = worst
            .max((hcr_eval(&params, 0.0) - cell.f_lo).abs() / scale_f)
            .max((hcr_eval(&params, 1.0) - cell.f_up).abs() / scale_f)
            .max((hcr_deriv(&params, 0.0) - cell.d_lo).abs() / scale_d)
            .max((hcr_deriv(&params, 1.0) - cell.d_up).abs() / scale_d);
    }
    passed &= worst <= 1e-12;
    details.push(format!("endpoints {worst:.2e}"));

    // Weight-limit reductions at 101 points, absolute 1e-13 on cells of
    // order-one data. The rational comparison skips near-pole points,
    // where both routes compute the same huge value and an absolute
    // bound is meaningless.
    let mut worst = 0.0_f64;
    for _ in 0..300 {
        let cell = CellData::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            if rng.gen_bool(0.5) { 1.0 } else { -1.0 } * rng.gen_range(0.5..1.0),
        )
        .expect("finite cell");
        let zero = hcr_params_with_alpha(&cell, 0.0).expect("params");
        let one = hcr_params_with_alpha(&cell, 1.0).expect("params");
        let (c2, c3) = cubic_coefficients(&cell).expect("coefficients");
        for j in 0..=100 {
            let k = j as f64 / 100.0;
            let xi = cell.h_signed * k;
            let cubic = cell.f_lo + cell.d_lo * xi + c2 * xi * xi + c3 * xi * xi * xi;
            let cubic_d = cell.d_lo + 2.0 * c2 * xi + 3.0 * c3 * xi * xi;
            worst = worst
                .max((hcr_eval(&zero, k) - cubic).abs())
                .max((hcr_deriv(&zero, k) - cubic_d).abs());
            let b = one.denom(k);
            if b.abs() > 0.05 * (one.p.abs() + one.q.abs()) {
                let rational =
                    cell.f_lo + cell.d_lo * cell.h_signed * k + one.p * one.p * k * k / b;
                worst = worst.max((hcr_eval(&one, k) - rational).abs());
            }
        }
    }
    passed &= worst <= 1e-13;
    details.push(format!("weight limits {worst:.2e}"));

    // Curvature preservation: centered second differences in k stay
    // one-signed across the cell interior. Curvature in x carries the
    // sign of curvature in k (the chain-rule factor 1/h² is positive
    // either way).
    let probe = 1e-4;
    let mut violations = 0usize;
    for &convex_up in &[true, false] {
        for _ in 0..10_000 {
            let cell = curved_cell(&mut rng, convex_up);
            let params = hcr_params(&cell).expect("params");
            for j in 1..100 {
                let k = j as f64 / 100.0;
                let second = hcr_eval(&params, k - probe) - 2.0 * hcr_eval(&params, k)
                    + hcr_eval(&params, k + probe);
                let ok = if convex_up {
                    second > 0.0
                } else {
                    second < 0.0
                };
                if !ok {
                    violations += 1;
                    break;
                }
            }
        }
    }
    passed &= violations == 0;
    details.push(format!("curvature violations {violations}"));

    // Outflux against composite Simpson quadrature (exact for
    // quadratics), 1e-12.
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let f_lo = rng.gen_range(-2.0..2.0);
        let f_up = rng.gen_range(-2.0..2.0);
        let rho = rng.gen_range(-2.0..2.0);
        let h = if rng.gen_bool(0.5) { 1.0 } else { -1.0 } * rng.gen_range(0.25..2.0);
        let c = csl2_coefficients(f_lo, f_up, rho, h).expect("coefficients");
        let xi = h * rng.gen_range(0.0..1.0);
        let panels = 400;
        let mut quad = 0.0;
        for p in 0..panels {
            let a = xi * p as f64 / panels as f64;
            let b = xi * (p + 1) as f64 / panels as f64;
            quad += (b - a) / 6.0
                * (csl2_value(&c, a) + 4.0 * csl2_value(&c, 0.5 * (a + b)) + csl2_value(&c, b));
        }
        worst = worst.max((cell_outflux(&c, xi) - quad).abs());
    }
    passed &= worst <= 1e-12;
    details.push(format!("outflux vs quadrature {worst:.2e}"));

    CriterionResult::new("interpolant property suite", passed, details.join("; "))
}

/// Criterion 9: the double-replacement cubic stays close to its
/// single-replacement result (L∞ ≤ 0.05) while the double-replacement
/// hybrid rings above the square wave's top by more than 0.01.
pub fn criterion_double_replacement() -> CriterionResult {
    let level2 = |kind: SchemeKind| {
        let problem = ProblemSpec::example4();
        let dt = problem.dt().expect("static dt");
        let spec = SchemeSpec {
            kind,
            replacement_level: 2,
        };
        let mut state = init_double_primitive(&problem.initial(), &problem.grid).expect("init");
        for _ in 0..problem.steps {
            state = step_double_replacement(&state, &problem.velocity, dt, &problem.grid, &spec)
                .expect("run");
        }
        state.f
    };

    let problem = ProblemSpec::example2();
    let dt = problem.dt().expect("static dt");
    let spec = SchemeSpec {
        kind: SchemeKind::Cubic,
        replacement_level: 1,
    };
    let mut level1 = init_primitive(&problem.initial(), &problem.grid).expect("init");
    for _ in 0..problem.steps {
        level1 =
            step_conservative(&level1, &problem.velocity, dt, &problem.grid, &spec).expect("run");
    }

    let cubic2 = level2(SchemeKind::Cubic);
    let (_, linf) = error_norms(&cubic2, &level1.f);

    let hcr2 = level2(SchemeKind::Hcr);
    let overshoot = hcr2.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v)) - 1.0;

    let passed = linf <= 0.05 && overshoot > 0.01;
    CriterionResult::new(
        "double replacement behavior",
        passed,
        format!("cubic L∞ vs one replacement {linf:.4} (tol 0.05); hybrid overshoot {overshoot:.4} (want > 0.01)"),
    )
}

/// Run every criterion in order.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    vec![
        criterion_edge_window_reference(),
        criterion_corner_maxima(),
        criterion_edge_monotonicity(),
        criterion_mass_conservation(),
        criterion_path_equivalence(seed),
        criterion_burgers_oscillation(),
        criterion_burgers_shock_position(),
        criterion_interpolant_properties(seed),
        criterion_double_replacement(),
    ]
}
