//! Closed-form bound states.
//!
//! The two-component field obeys a pair of coupled first-order equations in
//! x; eliminating the lower component gives an oscillator-type equation in
//! the shifted, rescaled coordinate r = sqrt(b) (x + x0) with x0 = m / b.
//! Normalizable solutions exist exactly when beta / b = 2 n + 1 for a
//! non-negative integer n, where beta = E^2 + b. That gives the spectrum
//!
//! ```text
//! E_n = +/- sqrt(2 n b),
//! ```
//!
//! independent of the mass m: the mass only translates the mode profiles.
//! The n = 0 level sits exactly at zero energy and its lower component
//! vanishes identically.

mod mode;
mod series;

pub use mode::{EnergySign, Mode, QuadratureSpec, RealSpinorField};
pub use series::{hermite_coeffs, CoefficientSeries, Parity};

use crate::error::{Error, Result};

/// Mass and slope of the confining term m + b x, with the derived profile
/// shift x0 = m / b. The slope must be positive; the mass may be any finite
/// number (a negative mass only moves the profiles the other way).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    m: f64,
    b: f64,
    x0: f64,
}

impl PotentialParams {
    pub fn new(m: f64, b: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::NonPositiveSlope { b });
        }
        if !m.is_finite() {
            return Err(Error::NonFiniteMass { m });
        }
        Ok(Self { m, b, x0: m / b })
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn slope(&self) -> f64 {
        self.b
    }

    /// x0 = m / b: where the linear term m + b x crosses zero, and hence the
    /// center of every mode profile.
    pub fn origin_shift(&self) -> f64 {
        self.x0
    }

    /// The linear term itself, m + b x.
    pub fn linear_term(&self, x: f64) -> f64 {
        self.m + self.b * x
    }

    /// Dimensionless oscillator coordinate r = sqrt(b) (x + x0).
    pub fn oscillator_coordinate(&self, x: f64) -> f64 {
        self.b.sqrt() * (x + self.x0)
    }

    /// Inverse of `oscillator_coordinate`.
    pub fn position_at(&self, r: f64) -> f64 {
        r / self.b.sqrt() - self.x0
    }
}

/// beta / b for level n, where beta = E^2 + b. The quantization condition is
/// that this ratio equals an odd integer 2 n + 1.
pub fn quantization_ratio(n: usize) -> f64 {
    (2 * n + 1) as f64
}

/// E_n = sign * sqrt(2 n b). Exact zero for n = 0 on either branch.
pub fn energy_level(n: usize, b: f64, sign: EnergySign) -> Result<f64> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::NonPositiveSlope { b });
    }
    Ok(sign.factor() * (2.0 * n as f64 * b).sqrt())
}

/// Gap E_{n+1} - E_n on the positive branch. Strictly positive and strictly
/// decreasing in n: the levels crowd together going up.
pub fn level_spacing(n: usize, b: f64) -> Result<f64> {
    Ok(energy_level(n + 1, b, EnergySign::Plus)? - energy_level(n, b, EnergySign::Plus)?)
}
