//! Finite-difference eigensolver: symmetric tridiagonal matrices, Sturm
//! sequence counting, and bisection extraction of the lowest eigenvalues.
//!
//! Discretizing -phi'' + b^2 (x + x0)^2 phi = lambda phi with central
//! differences and Dirichlet boundaries gives a symmetric tridiagonal matrix
//! over the interior nodes. The eigenvalues approximate lambda = E^2 + b, so
//! the spectrum comes out through E = sqrt(lambda - b).

use rayon::prelude::*;

use crate::analytic::PotentialParams;
use crate::error::{Error, Result};
use crate::numeric::grid::Grid;

/// Half-width, in units of the oscillator length 1/sqrt(b), that a grid must
/// cover around the profile center -x0 before the Dirichlet truncation error
/// (a Gaussian tail below e^{-32}) is negligible against every tolerance
/// used here.
pub const MIN_SUPPORT_RADIUS: f64 = 8.0;

const MAX_BISECT_ITERS: usize = 200;

/// Real symmetric tridiagonal matrix: `diag` of length n, `offdiag` of
/// length n - 1.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSym {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalSym {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::BadTridiagonalShape {
                diag_len: diag.len(),
                offdiag_len: offdiag.len(),
            });
        }
        Ok(Self { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Leading k-by-k principal submatrix. Panics if k is 0 or exceeds the
    /// dimension.
    pub fn principal_submatrix(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.dim());
        Self {
            diag: self.diag[..k].to_vec(),
            offdiag: self.offdiag[..k - 1].to_vec(),
        }
    }

    /// Interval guaranteed to contain every eigenvalue (Gershgorin discs).
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut radius = 0.0;
            if i > 0 {
                radius += self.offdiag[i - 1].abs();
            }
            if i < n - 1 {
                radius += self.offdiag[i].abs();
            }
            lo = lo.min(self.diag[i] - radius);
            hi = hi.max(self.diag[i] + radius);
        }
        (lo, hi)
    }

    /// Number of eigenvalues below `lambda`, from the signs of the LDL^T
    /// pivots of (A - lambda I). Pivots that land exactly on zero are pushed
    /// to a tiny negative value, which keeps the count monotone in lambda;
    /// an exact hit moves the count by at most one, and bisection only ever
    /// compares counts across an interval.
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let (glo, ghi) = self.gershgorin_bounds();
        let scale = glo.abs().max(ghi.abs()).max(1.0);
        let guard = (f64::EPSILON * f64::EPSILON * scale).max(f64::MIN_POSITIVE);
        let mut count = 0;
        let mut pivot = self.diag[0] - lambda;
        if pivot.abs() < guard {
            pivot = -guard;
        }
        if pivot < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            let e = self.offdiag[i - 1];
            pivot = (self.diag[i] - lambda) - e * e / pivot;
            if pivot.abs() < guard {
                pivot = -guard;
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }
}

/// Output of an eigenvalue extraction: the values in ascending order, the
/// grid they were computed on when one exists (raw matrix solves carry
/// none), per-value bisection counts, and the largest final half-bracket,
/// which bounds the distance of each reported value from the matrix
/// eigenvalue it converged to.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    values: Vec<f64>,
    grid: Option<Grid>,
    iterations: Vec<usize>,
    residual_bound: f64,
}

impl EigenResult {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn grid(&self) -> Option<&Grid> {
        self.grid.as_ref()
    }

    pub fn iterations(&self) -> &[usize] {
        &self.iterations
    }

    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }
}

/// The k smallest eigenvalues of `a` by Sturm-count bisection, each bracket
/// narrowed until its width drops below `tol`.
///
/// The per-index searches are independent; they run concurrently and are
/// collected in index order, so the result is bit-identical to a serial run.
pub fn eigen_lowest_k(a: &TridiagonalSym, k: usize, tol: f64) -> Result<EigenResult> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::NonPositiveTolerance { tol });
    }
    if k == 0 || k > a.dim() {
        return Err(Error::EigenCountOutOfRange { k, dim: a.dim() });
    }
    let (glo, ghi) = a.gershgorin_bounds();
    // Open the bracket slightly past the Gershgorin interval so the count
    // invariant count(lo) = 0, count(hi) = dim holds strictly.
    let pad = 1.0 + 1e-10 * glo.abs().max(ghi.abs());
    let lo0 = glo - pad;
    let hi0 = ghi + pad;

    let solved: Vec<(f64, usize, f64)> = (0..k)
        .into_par_iter()
        .map(|j| {
            let mut lo = lo0;
            let mut hi = hi0;
            let mut iters = 0;
            while hi - lo >= tol && iters < MAX_BISECT_ITERS {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break; // bracket is at floating-point resolution
                }
                if a.sturm_count(mid) <= j {
                    lo = mid;
                } else {
                    hi = mid;
                }
                iters += 1;
            }
            (0.5 * (lo + hi), iters, 0.5 * (hi - lo))
        })
        .collect();

    let values = solved.iter().map(|s| s.0).collect();
    let iterations = solved.iter().map(|s| s.1).collect();
    let residual_bound = solved.iter().map(|s| s.2).fold(0.0, f64::max);
    Ok(EigenResult {
        values,
        grid: None,
        iterations,
        residual_bound,
    })
}

/// Central-difference discretization of -d^2/dx^2 + b^2 (x + x0)^2 on the
/// interior nodes of `grid`, with Dirichlet boundaries:
/// diag_i = 2/h^2 + b^2 (x_i + x0)^2, offdiag = -1/h^2.
///
/// The grid must cover the mode support window around -x0 (see
/// `MIN_SUPPORT_RADIUS`); otherwise the truncated boundary would contaminate
/// the low eigenvalues and the call is rejected.
pub fn build_fd_hamiltonian(params: &PotentialParams, grid: &Grid) -> Result<TridiagonalSym> {
    let b = params.slope();
    let x0 = params.origin_shift();
    let half = MIN_SUPPORT_RADIUS / b.sqrt();
    let (need_lo, need_hi) = (-x0 - half, -x0 + half);
    if !grid.covers(need_lo, need_hi) {
        return Err(Error::GridTooNarrow {
            x_min: grid.x_min(),
            x_max: grid.x_max(),
            need_lo,
            need_hi,
        });
    }
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let interior = grid.len() - 2;
    let mut diag = Vec::with_capacity(interior);
    for i in 1..grid.len() - 1 {
        let v = b * (grid.point(i) + x0);
        diag.push(2.0 * inv_h2 + v * v);
    }
    let offdiag = vec![-inv_h2; interior - 1];
    TridiagonalSym::new(diag, offdiag)
}

/// Grid-aware eigenvalue extraction: builds the discrete Hamiltonian and
/// returns the k lowest lambda values with the grid attached.
pub fn fd_eigenvalues(
    params: &PotentialParams,
    grid: &Grid,
    k: usize,
    tol: f64,
) -> Result<EigenResult> {
    let matrix = build_fd_hamiltonian(params, grid)?;
    let mut result = eigen_lowest_k(&matrix, k, tol)?;
    result.grid = Some(grid.clone());
    Ok(result)
}

/// Converts discrete lambda values to energies via E_n = sqrt(lambda_n - b).
///
/// Only the ground state may be clamped at zero: its exact energy is zero,
/// so discretization error can legitimately push lambda_0 a hair below b.
/// A negative shift at n >= 1 means the grid failed to resolve the level.
pub(crate) fn energies_from_lambdas(b: f64, lambdas: &[f64]) -> Result<Vec<f64>> {
    lambdas
        .iter()
        .enumerate()
        .map(|(n, &lambda)| {
            let shifted = lambda - b;
            if n == 0 {
                Ok(shifted.max(0.0).sqrt())
            } else if shifted < 0.0 {
                Err(Error::ResolutionFailure {
                    n,
                    lambda,
                    floor: b,
                })
            } else {
                Ok(shifted.sqrt())
            }
        })
        .collect()
}

/// Finite-difference estimates of E_n for n = 0..k-1 on the given grid.
pub fn spectrum_fd(params: &PotentialParams, grid: &Grid, k: usize) -> Result<Vec<f64>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    let matrix = build_fd_hamiltonian(params, grid)?;
    let (_, ghi) = matrix.gershgorin_bounds();
    // Far below the O(h^2) discretization error for any usable grid.
    let tol = 1e-12 * (1.0 + ghi.abs());
    let eig = eigen_lowest_k(&matrix, k, tol)?;
    energies_from_lambdas(params.slope(), eig.values())
}
