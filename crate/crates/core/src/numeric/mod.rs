//! Independent numerical recomputation of the spectrum and mode profiles:
//! finite-difference diagonalization (Sturm bisection on the tridiagonal
//! discretization) and two-sided shooting on the reduced equation. Nothing
//! in this module reads closed-form results; agreement between the two
//! routes and the closed form is established in the validation layer.

mod grid;
mod residual;
mod shooting;
mod tridiag;

pub use grid::{
    default_grid, integrate_samples, quadrature_norm, Grid, SpinorField, DEFAULT_GRID_POINTS,
};
pub use residual::{residual_coupled, residual_time_domain};
pub use shooting::{
    find_eigen_shooting, find_eigen_shooting_on, shoot_once, standard_shooting_grid,
    ShootingResult, SHOOTING_SPACING,
};
pub use tridiag::{
    build_fd_hamiltonian, eigen_lowest_k, fd_eigenvalues, spectrum_fd, EigenResult,
    TridiagonalSym, MIN_SUPPORT_RADIUS,
};
