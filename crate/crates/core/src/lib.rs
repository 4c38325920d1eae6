//! Bound states of a fermion on a line whose scalar mass term rises
//! linearly with position, computed three independent ways and
//! cross-validated.
//!
//! The model is a two-component real (Majorana) fermion in one space
//! dimension with mass term m + b x, b > 0. Squaring the first-order
//! system turns each stationary level into a shifted harmonic-oscillator
//! problem, so everything about it is exactly solvable:
//!
//! * the energy levels are E_n = +/- sqrt(2 n b), mass-independent, with a
//!   single self-paired zero mode at E = 0;
//! * the profiles are Gaussian-times-polynomial, with the polynomial built
//!   here as exact rational coefficients ([`analytic`]);
//! * the mass only translates every profile rigidly by x0 = m/b.
//!
//! The [`numeric`] module recomputes the same spectrum by two methods that
//! share no code with the closed form: a finite-difference discretization
//! solved by Sturm bisection, and an adaptive-free two-sided shooting
//! integration. [`validate`] packages the comparisons as named checks, and
//! [`algebra`] pins down the gamma-matrix conventions (purely imaginary
//! gammas, so `i * gamma` is real and the field can be taken real).
//!
//! Units: c = hbar = 1 throughout; b has dimension energy^2, m and all
//! energies have dimension energy, x has dimension 1/energy.

pub mod algebra;
pub mod analytic;
pub mod error;
pub mod format;
pub mod numeric;
pub mod validate;

pub use algebra::{build_gamma_majorana, check_clifford, check_majorana_reality, GammaSet, Matrix2c};
pub use analytic::{
    energy_level, hermite_coeffs, level_spacing, CoefficientSeries, EnergySign, Mode, Parity,
    PotentialParams, QuadratureSpec, RealSpinorField,
};
pub use error::{Error, Result};
pub use numeric::{
    build_fd_hamiltonian, default_grid, eigen_lowest_k, find_eigen_shooting, integrate_samples,
    quadrature_norm, residual_coupled, residual_time_domain, shoot_once, spectrum_fd, EigenResult,
    Grid, ShootingResult, SpinorField, TridiagonalSym,
};
pub use validate::{run_all, CheckStatus, ValidationConfig, ValidationReport};
