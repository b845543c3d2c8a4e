//! Per-cell interpolation kernels.
//!
//! All kernels operate on the data of a single upwind cell: the values and
//! first derivatives at its two endpoints. The near endpoint (`lo`) is the
//! grid point being updated; the far endpoint (`up`) is its upwind
//! neighbour. `h_signed` is the signed step from `lo` to `up`: positive
//! when the flow comes from the right (`u < 0`), negative when it comes
//! from the left (`u > 0`). Evaluation uses the normalized offset
//! `k ∈ [0, 1]` measured from `lo` towards `up`.
//!
//! Three interpolants live here:
//!
//! * the Hermite cubic `f_lo + d_lo ξ + C2 ξ² + C3 ξ³`,
//! * the hybrid cubic-rational `F = α R + (1 − α) C`, with the mixing
//!   weight `α` picked per cell as the smallest value that keeps the
//!   interpolant's second derivative one-signed whenever the endpoint
//!   data is convex or concave,
//! * the constrained quadratic used by the cell-integrated scheme, which
//!   matches both endpoint values and the cell average.
//!
//! The hybrid form is driven by the slope products
//! `P = (S − d_lo) h` and `Q = (d_up − S) h`, where `S` is the chord
//! slope. Both reductions are exact: `α = 0` reproduces the cubic and
//! `α = 1` the pure rational function.

use crate::error::{AdvecError, Result};

/// Relative floor under which `P` or `Q` counts as vanished; the hybrid
/// weight then takes its pure-rational limit `α = 1`.
const DEGENERATE_PQ_FLOOR: f64 = 1e-14;

/// Relative floor for the rational denominator `B(k) = Q + (P − Q) k`.
/// Below it the evaluation falls back to the cubic branch. `B` can only
/// vanish inside the cell when `P` and `Q` have opposite signs, where the
/// weight is zero anyway, so the fallback is exact in exact arithmetic.
const RATIONAL_DENOM_FLOOR: f64 = 1e-14;

/// Endpoint data of one upwind cell.
#[derive(Debug, Clone, Copy)]
pub struct CellData {
    /// Value at the near endpoint (the point being updated).
    pub f_lo: f64,
    /// Value at the far (upwind) endpoint.
    pub f_up: f64,
    /// Derivative at the near endpoint.
    pub d_lo: f64,
    /// Derivative at the far endpoint.
    pub d_up: f64,
    /// Signed step from the near to the far endpoint; never zero.
    pub h_signed: f64,
}

impl CellData {
    pub fn new(f_lo: f64, f_up: f64, d_lo: f64, d_up: f64, h_signed: f64) -> Result<Self> {
        let cell = Self {
            f_lo,
            f_up,
            d_lo,
            d_up,
            h_signed,
        };
        cell.validate()?;
        Ok(cell)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [self.f_lo, self.f_up, self.d_lo, self.d_up, self.h_signed];
        if fields.iter().any(|v| !v.is_finite()) {
            return Err(AdvecError::NonFinite(format!("cell data {self:?}")));
        }
        if self.h_signed == 0.0 {
            return Err(AdvecError::NonFinite("cell width is zero".into()));
        }
        Ok(())
    }

    /// Chord slope `(f_up − f_lo) / h_signed`.
    pub fn slope(&self) -> f64 {
        (self.f_up - self.f_lo) / self.h_signed
    }
}

/// Coefficients of the Hermite cubic interpolating both endpoint values
/// and derivatives: `C2` has units value/length², `C3` value/length³.
pub fn cubic_coefficients(cell: &CellData) -> Result<(f64, f64)> {
    cell.validate()?;
    let h = cell.h_signed;
    let s = cell.slope();
    let c2 = -(cell.d_up + 2.0 * cell.d_lo - 3.0 * s) / h;
    let c3 = (cell.d_up + cell.d_lo - 2.0 * s) / (h * h);
    Ok((c2, c3))
}

/// Per-cell parameters of the hybrid cubic-rational interpolant.
#[derive(Debug, Clone, Copy)]
pub struct HcrParams {
    /// Slope-deficit product `(S − d_lo) h`.
    pub p: f64,
    /// Slope-excess product `(d_up − S) h`.
    pub q: f64,
    /// Ratio bound `max[2, max(Q/P, P/Q)]`; `+∞` when `P` or `Q` vanishes.
    pub m: f64,
    /// Mixing weight in `[0, 1]`; `0` exactly when `m == 2`.
    pub alpha: f64,
    f_lo: f64,
    d_lo: f64,
    h_signed: f64,
}

impl HcrParams {
    pub fn f_lo(&self) -> f64 {
        self.f_lo
    }

    pub fn d_lo(&self) -> f64 {
        self.d_lo
    }

    pub fn h_signed(&self) -> f64 {
        self.h_signed
    }

    /// Rational denominator `B(k) = Q + (P − Q) k`.
    pub fn denom(&self, k: f64) -> f64 {
        self.q + (self.p - self.q) * k
    }

    /// Effective weight and the two quadratic-term contributions at `k`.
    /// Falls back to the cubic branch when the denominator is degenerate.
    fn terms(&self, k: f64) -> (f64, f64, f64, f64) {
        let b = self.denom(k);
        let floor = RATIONAL_DENOM_FLOOR * (self.p.abs() + self.q.abs());
        let alpha = if b.abs() <= floor { 0.0 } else { self.alpha };
        let g1 = if alpha == 0.0 {
            0.0
        } else {
            alpha * self.p * self.p / b
        };
        let g2 = (1.0 - alpha) * (2.0 * self.p - b);
        (b, alpha, g1, g2)
    }
}

/// Hybrid parameters with the convexity-preserving weight.
///
/// When `P` or `Q` vanishes (within a relative floor) the ratio bound is
/// infinite and the weight saturates at 1; no division by zero occurs.
/// Opposite-sign `P, Q` (non-monotone cell data) give `m = 2` and a pure
/// cubic, which is the literal reading of the ratio formula.
pub fn hcr_params(cell: &CellData) -> Result<HcrParams> {
    cell.validate()?;
    let s = cell.slope();
    let p = (s - cell.d_lo) * cell.h_signed;
    let q = (cell.d_up - s) * cell.h_signed;
    let floor = DEGENERATE_PQ_FLOOR * (p.abs() + q.abs());
    let (m, alpha) = if p.abs() <= floor || q.abs() <= floor {
        (f64::INFINITY, 1.0)
    } else {
        let m = 2.0_f64.max((q / p).max(p / q));
        let mm = m * (m - 2.0);
        (m, mm / (mm + 1.0))
    };
    Ok(HcrParams {
        p,
        q,
        m,
        alpha,
        f_lo: cell.f_lo,
        d_lo: cell.d_lo,
        h_signed: cell.h_signed,
    })
}

/// Hybrid parameters with an imposed weight: `0` is the Hermite cubic,
/// `1` the pure rational interpolant. The ratio bound `m` is left NaN,
/// since no ratio was consulted.
pub fn hcr_params_with_alpha(cell: &CellData, alpha: f64) -> Result<HcrParams> {
    cell.validate()?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(AdvecError::Config(format!(
            "interpolant weight {alpha} outside [0, 1]"
        )));
    }
    let s = cell.slope();
    let p = (s - cell.d_lo) * cell.h_signed;
    let q = (cell.d_up - s) * cell.h_signed;
    Ok(HcrParams {
        p,
        q,
        m: f64::NAN,
        alpha,
        f_lo: cell.f_lo,
        d_lo: cell.d_lo,
        h_signed: cell.h_signed,
    })
}

/// Interpolant value at the normalized offset `k ∈ [0, 1]`:
/// `F(k) = f_lo + d_lo h k + (G1 + G2) k²` with
/// `G1 = α P²/B(k)` and `G2 = (1 − α)(2P − B(k))`.
pub fn hcr_eval(params: &HcrParams, k: f64) -> f64 {
    debug_assert!(
        (-1e-12..=1.0 + 1e-12).contains(&k),
        "offset {k} outside [0, 1]"
    );
    let (_, _, g1, g2) = params.terms(k);
    params.f_lo + params.d_lo * params.h_signed * k + (g1 + g2) * k * k
}

/// Spatial derivative of the interpolant at the normalized offset `k`:
/// `F'(k) = d_lo + [G1 (Q + B)/B + 2 G2 + (1 − α)(Q − B)] k / h`.
pub fn hcr_deriv(params: &HcrParams, k: f64) -> f64 {
    debug_assert!(
        (-1e-12..=1.0 + 1e-12).contains(&k),
        "offset {k} outside [0, 1]"
    );
    let (b, alpha, g1, g2) = params.terms(k);
    let rational_part = if g1 == 0.0 {
        0.0
    } else {
        g1 * (params.q + b) / b
    };
    let bracket = rational_part + 2.0 * g2 + (1.0 - alpha) * (params.q - b);
    params.d_lo + bracket * k / params.h_signed
}

/// Selector of the modified rational scheme: `true` (pick the rational
/// interpolant) only where the derivative changes sign across the cell.
pub fn gamma_switch(d_lo: f64, d_up: f64) -> bool {
    d_lo * d_up < 0.0
}

/// Coefficients of the constrained quadratic
/// `Q(ξ) = f_lo + 2 q1 ξ + 3 q2 ξ²` that interpolates both endpoint
/// values and integrates to the cell mass `ρ h`.
#[derive(Debug, Clone, Copy)]
pub struct Csl2Coeffs {
    pub f_lo: f64,
    /// Units value/length.
    pub q1: f64,
    /// Units value/length².
    pub q2: f64,
}

/// Build the quadratic from the endpoint values and the cell average.
pub fn csl2_coefficients(f_lo: f64, f_up: f64, rho: f64, h_signed: f64) -> Result<Csl2Coeffs> {
    if ![f_lo, f_up, rho, h_signed].iter().all(|v| v.is_finite()) || h_signed == 0.0 {
        return Err(AdvecError::NonFinite(format!(
            "quadratic inputs f_lo = {f_lo}, f_up = {f_up}, rho = {rho}, h = {h_signed}"
        )));
    }
    let q1 = -(f_up + 2.0 * f_lo - 3.0 * rho) / h_signed;
    let q2 = (f_up + f_lo - 2.0 * rho) / (h_signed * h_signed);
    Ok(Csl2Coeffs { f_lo, q1, q2 })
}

/// Value of the constrained quadratic at signed offset `ξ` from the near
/// endpoint.
pub fn csl2_value(c: &Csl2Coeffs, xi: f64) -> f64 {
    c.f_lo + 2.0 * c.q1 * xi + 3.0 * c.q2 * xi * xi
}

/// Exact integral of the quadratic from the near endpoint to `ξ`:
/// the mass leaving the cell through that endpoint when `ξ` is the
/// departure offset. `f_lo ξ + q1 ξ² + q2 ξ³`.
pub fn cell_outflux(c: &Csl2Coeffs, xi: f64) -> f64 {
    (c.f_lo + (c.q1 + c.q2 * xi) * xi) * xi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(f_lo: f64, f_up: f64, d_lo: f64, d_up: f64, h: f64) -> CellData {
        CellData::new(f_lo, f_up, d_lo, d_up, h).unwrap()
    }

    /// Solve the four endpoint interpolation conditions for a cubic
    /// `c0 + c1 ξ + c2 ξ² + c3 ξ³` by Gaussian elimination. Independent
    /// route used to pin the kernel coefficients.
    #[allow(clippy::needless_range_loop)]
    fn cubic_by_linear_solve(c: &CellData) -> [f64; 4] {
        let h = c.h_signed;
        let mut m = [
            [1.0, 0.0, 0.0, 0.0, c.f_lo],
            [0.0, 1.0, 0.0, 0.0, c.d_lo],
            [1.0, h, h * h, h * h * h, c.f_up],
            [0.0, 1.0, 2.0 * h, 3.0 * h * h, c.d_up],
        ];
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
                .unwrap();
            m.swap(col, pivot);
            for row in 0..4 {
                if row != col {
                    let factor = m[row][col] / m[col][col];
                    for k in col..5 {
                        m[row][k] -= factor * m[col][k];
                    }
                }
            }
        }
        [
            m[0][4] / m[0][0],
            m[1][4] / m[1][1],
            m[2][4] / m[2][2],
            m[3][4] / m[3][3],
        ]
    }

    /// Pure rational interpolant `(a + b ξ + c ξ²)/(1 + d ξ)` constructed
    /// directly from the four endpoint conditions. Independent route for
    /// the hybrid's `α = 1` limit.
    fn rational_by_direct_fit(cell: &CellData, xi: f64) -> f64 {
        let h = cell.h_signed;
        let s = cell.slope();
        let d = -(cell.d_lo + cell.d_up - 2.0 * s) / (h * (cell.d_up - s));
        let a = cell.f_lo;
        let b = cell.d_lo + d * cell.f_lo;
        let c = (cell.f_up * (1.0 + d * h) - a - b * h) / (h * h);
        (a + b * xi + c * xi * xi) / (1.0 + d * xi)
    }

    #[test]
    fn cubic_constant_data_has_zero_curvature() {
        let (c2, c3) = cubic_coefficients(&cell(3.5, 3.5, 0.0, 0.0, 1.0)).unwrap();
        assert_eq!(c2, 0.0);
        assert_eq!(c3, 0.0);
    }

    #[test]
    fn cubic_linear_data_has_zero_curvature() {
        let (c2, c3) = cubic_coefficients(&cell(0.0, 2.0, 2.0, 2.0, 1.0)).unwrap();
        assert!(c2.abs() < 1e-15);
        assert!(c3.abs() < 1e-15);
    }

    #[test]
    fn cubic_matches_linear_solve() {
        // Frozen from the independent linear-algebra route: (3, -2).
        let c = cell(0.0, 1.0, 0.0, 0.0, 1.0);
        let (c2, c3) = cubic_coefficients(&c).unwrap();
        assert!((c2 - 3.0).abs() < 1e-14);
        assert!((c3 - (-2.0)).abs() < 1e-14);

        let solved = cubic_by_linear_solve(&c);
        assert!((solved[2] - c2).abs() < 1e-13);
        assert!((solved[3] - c3).abs() < 1e-13);

        // Also on a generic cell with negative orientation.
        let c = cell(0.4, -1.3, 2.0, -0.7, -0.5);
        let (c2, c3) = cubic_coefficients(&c).unwrap();
        let solved = cubic_by_linear_solve(&c);
        assert!((solved[2] - c2).abs() < 1e-12);
        assert!((solved[3] - c3).abs() < 1e-12);
    }

    #[test]
    fn cubic_rejects_non_finite() {
        assert!(CellData::new(f64::NAN, 1.0, 0.0, 0.0, 1.0).is_err());
        assert!(CellData::new(0.0, 1.0, 0.0, 0.0, 0.0).is_err());
        let bad = CellData {
            f_lo: 0.0,
            f_up: f64::INFINITY,
            d_lo: 0.0,
            d_up: 0.0,
            h_signed: 1.0,
        };
        assert!(cubic_coefficients(&bad).is_err());
    }

    #[test]
    fn hybrid_params_match_ratio_formula() {
        let p = hcr_params(&cell(0.0, 1.0, 0.0, 4.0, 1.0)).unwrap();
        assert!((p.p - 1.0).abs() < 1e-15);
        assert!((p.q - 3.0).abs() < 1e-15);
        assert!((p.m - 3.0).abs() < 1e-15);
        assert!((p.alpha - 0.75).abs() < 1e-15);

        let p = hcr_params(&cell(0.0, 1.0, 0.0, 2.0, 1.0)).unwrap();
        assert!((p.m - 2.0).abs() < 1e-15);
        assert_eq!(p.alpha, 0.0);

        // Opposite-sign products: the floor 2 dominates, weight zero.
        let p = hcr_params(&cell(0.0, 1.0, 0.0, 0.0, 1.0)).unwrap();
        assert!((p.p - 1.0).abs() < 1e-15);
        assert!((p.q - (-1.0)).abs() < 1e-15);
        assert!((p.m - 2.0).abs() < 1e-15);
        assert_eq!(p.alpha, 0.0);
    }

    #[test]
    fn hybrid_degenerate_products_take_rational_limit() {
        // P = 0: the ratio bound is infinite and the weight saturates.
        let p = hcr_params(&cell(0.0, 1.0, 1.0, 3.0, 1.0)).unwrap();
        assert!(p.m.is_infinite());
        assert_eq!(p.alpha, 1.0);
        // Evaluation must stay finite across the whole cell.
        for j in 0..=100 {
            let k = j as f64 / 100.0;
            assert!(hcr_eval(&p, k).is_finite());
            assert!(hcr_deriv(&p, k).is_finite());
        }
        // Exactly linear data: P = Q = 0, evaluation reduces to the line.
        let p = hcr_params(&cell(1.0, 2.0, 1.0, 1.0, 1.0)).unwrap();
        assert_eq!(p.alpha, 1.0);
        assert!((hcr_eval(&p, 0.5) - 1.5).abs() < 1e-15);
        assert!((hcr_deriv(&p, 0.5) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hybrid_interpolates_endpoints() {
        let c = cell(0.3, -1.2, 0.8, -2.5, 1.0);
        let p = hcr_params(&c).unwrap();
        assert!((hcr_eval(&p, 0.0) - c.f_lo).abs() < 1e-14);
        assert!((hcr_eval(&p, 1.0) - c.f_up).abs() < 1e-14);
        assert!((hcr_deriv(&p, 0.0) - c.d_lo).abs() < 1e-14);
        assert!((hcr_deriv(&p, 1.0) - c.d_up).abs() < 1e-13);
    }

    #[test]
    fn hybrid_value_matches_mixed_closed_forms() {
        // Frozen from the independent oracle alpha*R(0.5) + (1-alpha)*C(0.5)
        // with R fit directly as (a + b xi + c xi^2)/(1 + d xi) and C from
        // the linear solve: 0.75 * 0.125 + 0.25 * 0 = 0.09375.
        let c = cell(0.0, 1.0, 0.0, 4.0, 1.0);
        let p = hcr_params(&c).unwrap();
        let value = hcr_eval(&p, 0.5);
        assert!((value - 0.09375).abs() < 1e-15);

        let r = rational_by_direct_fit(&c, 0.5);
        let coeffs = cubic_by_linear_solve(&c);
        let xi = 0.5;
        let cubic = coeffs[0] + coeffs[1] * xi + coeffs[2] * xi * xi + coeffs[3] * xi * xi * xi;
        let oracle = p.alpha * r + (1.0 - p.alpha) * cubic;
        assert!((value - oracle).abs() < 1e-14);
    }

    #[test]
    fn alpha_zero_reduces_to_cubic() {
        let cells = [
            cell(0.0, 1.0, -0.4, 2.2, 1.0),
            cell(1.0, -0.5, 0.3, 0.9, -1.0),
            cell(-2.0, 4.0, 1.5, -3.0, 0.7),
        ];
        for c in &cells {
            let p = hcr_params_with_alpha(c, 0.0).unwrap();
            let (c2, c3) = cubic_coefficients(c).unwrap();
            for j in 0..=100 {
                let k = j as f64 / 100.0;
                let xi = c.h_signed * k;
                let cubic = c.f_lo + c.d_lo * xi + c2 * xi * xi + c3 * xi * xi * xi;
                let cubic_d = c.d_lo + 2.0 * c2 * xi + 3.0 * c3 * xi * xi;
                assert!((hcr_eval(&p, k) - cubic).abs() < 1e-13);
                assert!((hcr_deriv(&p, k) - cubic_d).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn alpha_one_reduces_to_rational() {
        let c = cell(0.2, 1.7, -0.3, 3.0, 1.0);
        let p = hcr_params_with_alpha(&c, 1.0).unwrap();
        for j in 0..=100 {
            let k = j as f64 / 100.0;
            let b = p.denom(k);
            let closed = c.f_lo + c.d_lo * c.h_signed * k + p.p * p.p * k * k / b;
            assert!((hcr_eval(&p, k) - closed).abs() < 1e-13);
            let direct = rational_by_direct_fit(&c, c.h_signed * k);
            assert!((hcr_eval(&p, k) - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn gamma_switch_cases() {
        assert!(gamma_switch(-1.0, 2.0));
        assert!(!gamma_switch(1.0, 2.0));
        assert!(!gamma_switch(0.0, 5.0));
    }

    #[test]
    fn quadratic_trivial_profiles() {
        let c = csl2_coefficients(2.0, 2.0, 2.0, 1.0).unwrap();
        assert_eq!(c.q1, 0.0);
        assert_eq!(c.q2, 0.0);

        let c = csl2_coefficients(0.0, 1.0, 0.5, 1.0).unwrap();
        assert!((c.q1 - 0.5).abs() < 1e-15);
        assert!(c.q2.abs() < 1e-15);
    }

    /// Composite Simpson quadrature; exact for quadratics up to roundoff,
    /// kept as an independent check of the closed-form integral.
    fn simpson(c: &Csl2Coeffs, a: f64, b: f64, panels: usize) -> f64 {
        let h = (b - a) / panels as f64;
        let mut acc = 0.0;
        for j in 0..panels {
            let x0 = a + j as f64 * h;
            let x1 = x0 + h;
            let xm = 0.5 * (x0 + x1);
            acc += (h / 6.0) * (csl2_value(c, x0) + 4.0 * csl2_value(c, xm) + csl2_value(c, x1));
        }
        acc
    }

    #[test]
    fn quadratic_satisfies_both_constraints() {
        let (f_lo, f_up, rho, h) = (0.0, 1.0, 0.25, 1.0);
        let c = csl2_coefficients(f_lo, f_up, rho, h).unwrap();
        assert!((csl2_value(&c, h) - f_up).abs() < 1e-12);
        let integral = simpson(&c, 0.0, h, 10_000);
        assert!((integral - rho * h).abs() < 1e-12);
    }

    #[test]
    fn outflux_matches_quadrature() {
        let c = csl2_coefficients(0.7, -0.9, 0.1, 1.0).unwrap();
        let xi = 0.2;
        let flux = cell_outflux(&c, xi);
        assert!((flux - simpson(&c, 0.0, xi, 2_000)).abs() < 1e-12);
        assert_eq!(cell_outflux(&c, 0.0), 0.0);

        // Constant profile drains linearly.
        let c = csl2_coefficients(3.0, 3.0, 3.0, 1.0).unwrap();
        assert!((cell_outflux(&c, 0.4) - 1.2).abs() < 1e-15);
    }

    #[test]
    fn full_cell_outflux_drains_cell_mass() {
        let (f_lo, f_up, rho, h) = (0.3, -1.1, 0.45, 1.0);
        let c = csl2_coefficients(f_lo, f_up, rho, h).unwrap();
        assert!((cell_outflux(&c, h) - rho * h).abs() < 1e-12);

        // Mirror orientation.
        let c = csl2_coefficients(f_lo, f_up, rho, -1.0).unwrap();
        assert!((cell_outflux(&c, -1.0) - -rho).abs() < 1e-12);
    }
}
