//! State carried by the time steppers.

use crate::error::{AdvecError, Result};
use crate::grid::{Boundary, Grid1D};

/// How point derivatives are seeded for non-conservative runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DerivativeInit {
    /// All derivatives start at zero.
    #[default]
    Zero,
    /// Centered differences of the initial profile.
    Centered,
}

/// Non-conservative state: point values and point derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct NodalState {
    pub f: Vec<f64>,
    pub d: Vec<f64>,
}

impl NodalState {
    pub fn new(f: Vec<f64>, d: Vec<f64>) -> Result<Self> {
        if f.len() != d.len() {
            return Err(AdvecError::Config(format!(
                "value/derivative arrays differ in length: {} vs {}",
                f.len(),
                d.len()
            )));
        }
        if f.iter().chain(d.iter()).any(|v| !v.is_finite()) {
            return Err(AdvecError::NonFinite("nodal state".into()));
        }
        Ok(Self { f, d })
    }

    /// Seed a state from a profile, with the chosen derivative init.
    pub fn from_profile(f0: &[f64], grid: &Grid1D, init: DerivativeInit) -> Result<Self> {
        let n = f0.len();
        let d = match init {
            DerivativeInit::Zero => vec![0.0; n],
            DerivativeInit::Centered => (0..n)
                .map(|i| {
                    let prev = grid.neighbor(i, -1).unwrap_or(i);
                    let next = grid.neighbor(i, 1).unwrap_or(i);
                    let span = (next as isize - prev as isize).rem_euclid(grid.n as isize);
                    let span = if span == 0 { 2 } else { span };
                    (f0[next] - f0[prev]) / (span as f64 * grid.h)
                })
                .collect(),
        };
        Self::new(f0.to_vec(), d)
    }

    /// Trapezoid total `Σ (f_i + f_{i+1})/2 · h` over the cells.
    pub fn total_mass(&self, grid: &Grid1D) -> f64 {
        total_trapezoid(&self.f, grid)
    }
}

/// Conservative state: point values, cell averages, and (at the second
/// replacement level only) cell averages of the running primitive.
///
/// `rho[i]` is the average of `f` over cell `[x_i, x_{i+1}]`, wrapping at
/// the periodic seam. `e_rho[i]` is the average of the running primitive
/// `D(x) = ∫ f` over the same cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ConservedState {
    pub f: Vec<f64>,
    pub rho: Vec<f64>,
    pub e_rho: Option<Vec<f64>>,
}

impl ConservedState {
    pub fn new(f: Vec<f64>, rho: Vec<f64>) -> Result<Self> {
        if f.len() != rho.len() {
            return Err(AdvecError::Config(format!(
                "value/average arrays differ in length: {} vs {}",
                f.len(),
                rho.len()
            )));
        }
        if f.iter().chain(rho.iter()).any(|v| !v.is_finite()) {
            return Err(AdvecError::NonFinite("conserved state".into()));
        }
        Ok(Self {
            f,
            rho,
            e_rho: None,
        })
    }

    /// Total mass `Σ ρ_i h`.
    pub fn total_mass(&self, grid: &Grid1D) -> f64 {
        self.rho.iter().sum::<f64>() * grid.h
    }

    /// Point values of the running primitive `D_i = h Σ_{j<i} ρ_j`
    /// anchored at `D_0 = 0`.
    pub fn primitive_points(&self, grid: &Grid1D) -> Vec<f64> {
        let mut d = vec![0.0; grid.n];
        for i in 1..grid.n {
            d[i] = d[i - 1] + self.rho[i - 1] * grid.h;
        }
        d
    }

    /// Initialization consistency of the two integral levels: largest
    /// deviation between the primitive reconstructed from `rho` prefix
    /// sums and the one recovered from `e_rho` by inverting the trapezoid
    /// relation `e_i = (D_i + D_{i+1})/2`. Zero right after `init_double_primitive`.
    pub fn level2_init_consistency(&self, grid: &Grid1D) -> Result<f64> {
        let e = self
            .e_rho
            .as_ref()
            .ok_or_else(|| AdvecError::Config("state carries no second-level averages".into()))?;
        let d_from_rho = self.primitive_points(grid);
        let mut d_from_e = vec![0.0; grid.n];
        let mut worst: f64 = 0.0;
        let scale = d_from_rho.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        for i in 1..grid.n {
            d_from_e[i] = 2.0 * e[i - 1] - d_from_e[i - 1];
            worst = worst.max((d_from_e[i] - d_from_rho[i]).abs() / scale);
        }
        Ok(worst)
    }
}

/// Cell averages from the trapezoid rule, `ρ_i = (f_i + f_{i+1})/2`,
/// wrapping at the periodic seam; the open-grid wrap cell copies its
/// left endpoint.
pub fn init_primitive(f0: &[f64], grid: &Grid1D) -> Result<ConservedState> {
    if f0.len() != grid.n {
        return Err(AdvecError::Config(format!(
            "profile length {} does not match grid size {}",
            f0.len(),
            grid.n
        )));
    }
    let rho = (0..grid.n)
        .map(|i| match grid.neighbor(i, 1) {
            Some(j) => 0.5 * (f0[i] + f0[j]),
            None => f0[i],
        })
        .collect();
    ConservedState::new(f0.to_vec(), rho)
}

/// Conservative state for the second replacement level: on top of
/// `init_primitive`, seeds the cell averages of the running primitive by
/// applying the same trapezoid rule one level up.
pub fn init_double_primitive(f0: &[f64], grid: &Grid1D) -> Result<ConservedState> {
    if grid.bc != Boundary::Open {
        return Err(AdvecError::Config(
            "second replacement level needs an open grid: the running primitive is ill-defined on a ring"
                .into(),
        ));
    }
    let mut state = init_primitive(f0, grid)?;
    let d = state.primitive_points(grid);
    let e_rho = (0..grid.n)
        .map(|i| match grid.neighbor(i, 1) {
            Some(j) => 0.5 * (d[i] + d[j]),
            None => d[i],
        })
        .collect();
    state.e_rho = Some(e_rho);
    Ok(state)
}

fn total_trapezoid(f: &[f64], grid: &Grid1D) -> f64 {
    (0..grid.n)
        .map(|i| match grid.neighbor(i, 1) {
            Some(j) => 0.5 * (f[i] + f[j]) * grid.h,
            None => 0.0,
        })
        .sum()
}
