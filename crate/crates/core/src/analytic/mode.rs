//! One bound level: energy, polynomial factor, and component profiles.
//!
//! Upper component: phi(x) = N exp(-r^2/2) F(r) with r = sqrt(b) (x + x0).
//! Lower component: chi(x) = i (sqrt(b) / E) N exp(-r^2/2) F'(r) for n >= 1;
//! identically zero for n = 0, where E = 0 and the coupled equations force
//! the lower component out of the normalizable sector.
//!
//! chi is purely imaginary when phi is real. The overall phase is fixed by
//! making the leading coefficient of F positive; the scale N is fixed by
//! normalizing the integral of phi^2 + |chi|^2 to one, which splits exactly
//! half-and-half between the components for n >= 1.

use num::complex::Complex64;

use super::series::{hermite_coeffs, CoefficientSeries};
use super::{energy_level, PotentialParams};
use crate::error::{Error, Result};
use crate::numeric::{integrate_samples, Grid, SpinorField};

/// Which square root of E^2 = 2 n b a mode sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergySign {
    Plus,
    Minus,
}

impl EnergySign {
    pub fn factor(&self) -> f64 {
        match self {
            EnergySign::Plus => 1.0,
            EnergySign::Minus => -1.0,
        }
    }
}

/// Domain and resolution for normalization integrals, expressed in the
/// dimensionless coordinate r so one spec suits every slope. The domain must
/// reach |r| = 10; mode profiles at the levels this crate targets are far
/// below roundoff there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    r_half: f64,
    n_points: usize,
}

impl QuadratureSpec {
    pub fn new(r_half: f64, n_points: usize) -> Result<Self> {
        if !(r_half >= 10.0) || !r_half.is_finite() {
            return Err(Error::QuadratureTooNarrow { r_half });
        }
        if n_points < 3 {
            return Err(Error::TooFewSamples { n_points });
        }
        Ok(Self { r_half, n_points })
    }

    /// Half-width max(12, sqrt(2n+1) + 6) — six oscillator lengths past the
    /// classical turning point — at spacing about 0.005, odd point count so
    /// Simpson's rule applies.
    pub fn default_for(n: usize) -> Self {
        let r_half = 12.0_f64.max(((2 * n + 1) as f64).sqrt() + 6.0);
        let half_steps = (r_half / 0.005).ceil() as usize;
        Self {
            r_half,
            n_points: 2 * half_steps + 1,
        }
    }

    pub fn r_half(&self) -> f64 {
        self.r_half
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }
}

/// A single bound mode. Construction picks the branch and orientation;
/// `normalize` fixes the scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Mode {
    params: PotentialParams,
    n: usize,
    sign: EnergySign,
    energy: f64,
    series: CoefficientSeries,
    norm_constant: f64,
}

impl Mode {
    /// Unnormalized mode (norm constant 1) with the leading coefficient of
    /// its polynomial factor oriented positive.
    pub fn new(params: PotentialParams, n: usize, sign: EnergySign) -> Self {
        let energy =
            energy_level(n, params.slope(), sign).expect("params carry a validated slope");
        let raw = hermite_coeffs(n);
        let series = if raw.leading_sign() < 0.0 {
            raw.negated()
        } else {
            raw
        };
        Self {
            params,
            n,
            sign,
            energy,
            series,
            norm_constant: 1.0,
        }
    }

    /// `new` followed by `normalize` on the default quadrature for n.
    pub fn normalized(params: PotentialParams, n: usize, sign: EnergySign) -> Result<Self> {
        Mode::new(params, n, sign).normalize(&QuadratureSpec::default_for(n))
    }

    pub fn params(&self) -> &PotentialParams {
        &self.params
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn sign(&self) -> EnergySign {
        self.sign
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn series(&self) -> &CoefficientSeries {
        &self.series
    }

    pub fn norm_constant(&self) -> f64 {
        self.norm_constant
    }

    /// Upper component phi(x). Real.
    pub fn phi(&self, x: f64) -> f64 {
        let r = self.params.oscillator_coordinate(x);
        self.norm_constant * (-0.5 * r * r).exp() * self.series.eval(r)
    }

    /// d(phi)/dx, from the closed form: sqrt(b) N e^{-r^2/2} (F' - r F).
    pub fn phi_derivative(&self, x: f64) -> f64 {
        let r = self.params.oscillator_coordinate(x);
        let envelope = (-0.5 * r * r).exp();
        self.params.slope().sqrt()
            * self.norm_constant
            * envelope
            * (self.series.eval_derivative(r) - r * self.series.eval(r))
    }

    /// Imaginary part of the lower component; the lower component is
    /// i times this. Zero for n = 0.
    pub fn chi_imag(&self, x: f64) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        let r = self.params.oscillator_coordinate(x);
        (self.params.slope().sqrt() / self.energy)
            * self.norm_constant
            * (-0.5 * r * r).exp()
            * self.series.eval_derivative(r)
    }

    /// Lower component chi(x). Purely imaginary; exactly zero for n = 0.
    pub fn chi(&self, x: f64) -> Complex64 {
        Complex64::new(0.0, self.chi_imag(x))
    }

    /// d(chi)/dx from the closed form: i (b / E) N e^{-r^2/2} (F'' - r F').
    pub fn chi_derivative(&self, x: f64) -> Complex64 {
        if self.n == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let r = self.params.oscillator_coordinate(x);
        let envelope = (-0.5 * r * r).exp();
        let im = (self.params.slope() / self.energy)
            * self.norm_constant
            * envelope
            * (self.series.eval_second_derivative(r) - r * self.series.eval_derivative(r));
        Complex64::new(0.0, im)
    }

    /// Integral of phi^2 + |chi|^2 over the quadrature domain, at the current
    /// normalization. Sampled at the x positions that map onto the uniform
    /// r-grid of `spec`.
    pub fn norm_integral(&self, spec: &QuadratureSpec) -> Result<f64> {
        let x_lo = self.params.position_at(-spec.r_half);
        let x_hi = self.params.position_at(spec.r_half);
        let grid = Grid::new(x_lo, x_hi, spec.n_points)?;
        let integrand: Vec<f64> = (0..grid.len())
            .map(|i| {
                let x = grid.point(i);
                let p = self.phi(x);
                let c = self.chi_imag(x);
                p * p + c * c
            })
            .collect();
        integrate_samples(&integrand, grid.spacing())
    }

    /// Rescales the norm constant so the norm integral becomes one.
    pub fn normalize(mut self, spec: &QuadratureSpec) -> Result<Self> {
        let norm_sq = self.norm_integral(spec)?;
        if !(norm_sq > 0.0) || !norm_sq.is_finite() {
            return Err(Error::DegenerateNorm { norm_sq });
        }
        self.norm_constant /= norm_sq.sqrt();
        Ok(self)
    }

    /// Samples both components on a grid.
    pub fn sample(&self, grid: &Grid) -> SpinorField {
        let phi: Vec<Complex64> = (0..grid.len())
            .map(|i| Complex64::new(self.phi(grid.point(i)), 0.0))
            .collect();
        let chi: Vec<Complex64> = (0..grid.len()).map(|i| self.chi(grid.point(i))).collect();
        SpinorField::new(grid.clone(), phi, chi).expect("sample lengths match by construction")
    }

    /// The real field Re[exp(-i E t) (phi, chi)^T] sampled at time t:
    /// upper = phi cos(E t), lower = Im(chi) sin(E t). For n = 0 the field is
    /// static. This is the object the time-domain equation of motion acts on.
    pub fn real_field(&self, t: f64, grid: &Grid) -> RealSpinorField {
        let phase = Complex64::from_polar(1.0, -self.energy * t);
        let mut upper = Vec::with_capacity(grid.len());
        let mut lower = Vec::with_capacity(grid.len());
        for i in 0..grid.len() {
            let x = grid.point(i);
            upper.push((phase * Complex64::new(self.phi(x), 0.0)).re);
            lower.push((phase * self.chi(x)).re);
        }
        RealSpinorField {
            grid: grid.clone(),
            upper,
            lower,
        }
    }
}

/// Real two-component field on a grid, one time slice.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSpinorField {
    grid: Grid,
    upper: Vec<f64>,
    lower: Vec<f64>,
}

impl RealSpinorField {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }
}
