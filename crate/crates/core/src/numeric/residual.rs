//! Defect measures: how well a sampled field satisfies the coupled
//! first-order system, and how well the real time-dependent field satisfies
//! the equation of motion in operator form.
//!
//! Neither function knows how the field was produced; they difference the
//! samples they are given. That makes them usable both as a correctness
//! check for the closed-form modes and as a tripwire for wrong inputs.

use num::complex::Complex64;

use crate::algebra::build_gamma_majorana;
use crate::analytic::{Mode, PotentialParams};
use crate::error::{Error, Result};
use crate::numeric::grid::{Grid, SpinorField};

/// Max-norm residual of the coupled stationary system
///
/// ```text
/// E phi = i (d/dx - m - b x) chi
/// E chi = i (d/dx + m + b x) phi
/// ```
///
/// over interior points, using 4th-order central differences (error O(h^4),
/// so the residual of an exact solution is dominated by the stencil, not by
/// the solution).
pub fn residual_coupled(field: &SpinorField, energy: f64, params: &PotentialParams) -> Result<f64> {
    let grid = field.grid();
    let n = grid.len();
    if n < 5 {
        return Err(Error::StencilTooWide { n_points: n });
    }
    let h = grid.spacing();
    let phi = field.phi();
    let chi = field.chi();
    let i_unit = Complex64::new(0.0, 1.0);
    let deriv = |f: &[Complex64], i: usize| {
        (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h)
    };
    let mut worst = 0.0_f64;
    for i in 2..n - 2 {
        let ell = params.linear_term(grid.point(i));
        let d_chi = deriv(chi, i);
        let d_phi = deriv(phi, i);
        let r1 = energy * phi[i] - i_unit * (d_chi - ell * chi[i]);
        let r2 = energy * chi[i] - i_unit * (d_phi + ell * phi[i]);
        worst = worst.max(r1.norm()).max(r2.norm());
    }
    Ok(worst)
}

/// Max-norm residual of the real-field equation of motion
///
/// ```text
/// A dPsi/dt + B dPsi/dx - (m + b x) Psi = 0,
/// ```
///
/// where A = i gamma^0 and B = i gamma^1 are real matrices in this
/// representation. The field is sampled at times j dt for j = 0..t_steps and
/// differenced with 2nd-order central stencils in both t and x, so the
/// residual of an exact solution converges as O(dt^2 + h^2).
pub fn residual_time_domain(
    mode: &Mode,
    t_steps: usize,
    dt: f64,
    grid: &Grid,
) -> Result<f64> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::NonPositiveTimeStep { dt });
    }
    if t_steps < 3 {
        return Err(Error::TooFewTimeSteps { steps: t_steps });
    }

    let gammas = build_gamma_majorana();
    let i_unit = Complex64::new(0.0, 1.0);
    let a_mat = i_unit * gammas.gamma0;
    let b_mat = i_unit * gammas.gamma1;
    debug_assert_eq!(a_mat.max_im(), 0.0);
    debug_assert_eq!(b_mat.max_im(), 0.0);
    let a = a_mat.re_parts();
    let b = b_mat.re_parts();

    let slices: Vec<_> = (0..t_steps)
        .map(|j| mode.real_field(j as f64 * dt, grid))
        .collect();
    let params = mode.params();
    let n = grid.len();
    let h = grid.spacing();

    let mut worst = 0.0_f64;
    for j in 1..t_steps - 1 {
        let (prev, cur, next) = (&slices[j - 1], &slices[j], &slices[j + 1]);
        for i in 1..n - 1 {
            let psi = [cur.upper()[i], cur.lower()[i]];
            let d_t = [
                (next.upper()[i] - prev.upper()[i]) / (2.0 * dt),
                (next.lower()[i] - prev.lower()[i]) / (2.0 * dt),
            ];
            let d_x = [
                (cur.upper()[i + 1] - cur.upper()[i - 1]) / (2.0 * h),
                (cur.lower()[i + 1] - cur.lower()[i - 1]) / (2.0 * h),
            ];
            let ell = params.linear_term(grid.point(i));
            for c in 0..2 {
                let r = a[c][0] * d_t[0] + a[c][1] * d_t[1] + b[c][0] * d_x[0] + b[c][1] * d_x[1]
                    - ell * psi[c];
                worst = worst.max(r.abs());
            }
        }
    }
    Ok(worst)
}
