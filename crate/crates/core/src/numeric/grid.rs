//! Uniform spatial grids, sampled spinor fields, and composite quadrature.

use num::complex::Complex64;

use crate::analytic::PotentialParams;
use crate::error::{Error, Result};

/// Points of the default grid used when the caller does not supply one.
pub const DEFAULT_GRID_POINTS: usize = 4001;

/// Uniform closed grid on [x_min, x_max]. At least 3 points.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min < x_max) || !x_min.is_finite() || !x_max.is_finite() || n_points < 3 {
            return Err(Error::InvalidGrid {
                x_min,
                x_max,
                n_points,
            });
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    /// i-th node, x_min + i * h. Panics if i is out of range.
    pub fn point(&self, i: usize) -> f64 {
        assert!(i < self.n_points, "grid index {i} out of {}", self.n_points);
        self.x_min + i as f64 * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    /// Index of the node closest to x.
    pub fn nearest_index(&self, x: f64) -> usize {
        let raw = ((x - self.x_min) / self.spacing()).round();
        (raw.max(0.0) as usize).min(self.n_points - 1)
    }

    /// Whether [lo, hi] fits inside the grid, with a relative slack so that
    /// bounds computed in floating point do not fail by one ulp.
    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        let slack_lo = 1e-9 * (1.0 + lo.abs());
        let slack_hi = 1e-9 * (1.0 + hi.abs());
        self.x_min <= lo + slack_lo && self.x_max >= hi - slack_hi
    }
}

/// The conventional grid for a given potential: centered on -x0, extending
/// ten oscillator lengths either side, sampled on 4001 nodes.
pub fn default_grid(params: &PotentialParams) -> Grid {
    let center = -params.origin_shift();
    let half = 10.0 / params.slope().sqrt();
    Grid::new(center - half, center + half, DEFAULT_GRID_POINTS)
        .expect("default grid construction cannot fail for valid params")
}

/// Two-component field sampled on a grid. Components are complex so the
/// same container holds analytic modes (imaginary lower component) and any
/// perturbed variant a test wants to build.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    grid: Grid,
    phi: Vec<Complex64>,
    chi: Vec<Complex64>,
}

impl SpinorField {
    pub fn new(grid: Grid, phi: Vec<Complex64>, chi: Vec<Complex64>) -> Result<Self> {
        if phi.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                actual: phi.len(),
            });
        }
        if chi.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                actual: chi.len(),
            });
        }
        Ok(Self { grid, phi, chi })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn phi(&self) -> &[Complex64] {
        &self.phi
    }

    pub fn chi(&self) -> &[Complex64] {
        &self.chi
    }
}

/// Composite quadrature of real samples on a uniform grid with spacing h:
/// Simpson's rule when the sample count is odd, trapezoid when it is even.
pub fn integrate_samples(values: &[f64], h: f64) -> Result<f64> {
    let n = values.len();
    if n < 3 {
        return Err(Error::TooFewSamples { n_points: n });
    }
    if n % 2 == 1 {
        let mut sum = values[0] + values[n - 1];
        for (i, &v) in values.iter().enumerate().take(n - 1).skip(1) {
            sum += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
        }
        Ok(sum * h / 3.0)
    } else {
        let mut sum = 0.5 * (values[0] + values[n - 1]);
        for &v in &values[1..n - 1] {
            sum += v;
        }
        Ok(sum * h)
    }
}

/// Integral of |phi|^2 + |chi|^2 over the field's grid (the squared L2 norm
/// of the two-component field).
pub fn quadrature_norm(field: &SpinorField) -> Result<f64> {
    let integrand: Vec<f64> = field
        .phi
        .iter()
        .zip(&field.chi)
        .map(|(p, c)| p.norm_sqr() + c.norm_sqr())
        .collect();
    integrate_samples(&integrand, field.grid.spacing())
}
