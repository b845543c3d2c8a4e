//! Uniform 1-D grid with periodic or open boundaries.

use crate::error::{AdvecError, Result};

/// Boundary treatment of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// The grid is a ring: index arithmetic wraps modulo `n`.
    Periodic,
    /// Finite grid; no information enters or leaves through the ends.
    Open,
}

/// Uniform grid of `n` points at `x0 + i h`.
///
/// Cell `i` spans `[x_i, x_{i+1}]`. On a periodic grid there are as many
/// cells as points (cell `n - 1` wraps around the seam); on an open grid
/// the wrap cell is kept in the arrays for shape uniformity but never
/// carries information.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    pub n: usize,
    pub h: f64,
    pub bc: Boundary,
    pub x0: f64,
}

impl Grid1D {
    pub fn new(n: usize, h: f64, bc: Boundary, x0: f64) -> Result<Self> {
        if n < 3 {
            return Err(AdvecError::Config(format!(
                "grid needs at least 3 points, got {n}"
            )));
        }
        if h <= 0.0 || !h.is_finite() || !x0.is_finite() {
            return Err(AdvecError::Config(format!(
                "invalid grid geometry: h = {h}, x0 = {x0}"
            )));
        }
        Ok(Self { n, h, bc, x0 })
    }

    /// Periodic grid starting at the origin.
    pub fn periodic(n: usize, h: f64) -> Result<Self> {
        Self::new(n, h, Boundary::Periodic, 0.0)
    }

    /// Open grid starting at the origin.
    pub fn open(n: usize, h: f64) -> Result<Self> {
        Self::new(n, h, Boundary::Open, 0.0)
    }

    /// Coordinate of point `i`.
    pub fn x(&self, i: usize) -> f64 {
        self.x0 + i as f64 * self.h
    }

    /// Total domain length `n h`.
    pub fn domain_len(&self) -> f64 {
        self.n as f64 * self.h
    }

    /// Index `offset` points away from `i`, wrapped on periodic grids.
    /// Returns `None` when an open grid runs out of points.
    pub fn neighbor(&self, i: usize, offset: isize) -> Option<usize> {
        let j = i as isize + offset;
        match self.bc {
            Boundary::Periodic => Some(j.rem_euclid(self.n as isize) as usize),
            Boundary::Open => {
                if (0..self.n as isize).contains(&j) {
                    Some(j as usize)
                } else {
                    None
                }
            }
        }
    }

    /// Wrap a coordinate into `[x0, x0 + n h)`. Open grids return it unchanged.
    pub fn wrap_coord(&self, x: f64) -> f64 {
        match self.bc {
            Boundary::Periodic => {
                let len = self.domain_len();
                let mut y = (x - self.x0).rem_euclid(len);
                if y >= len {
                    y = 0.0;
                }
                self.x0 + y
            }
            Boundary::Open => x,
        }
    }
}
