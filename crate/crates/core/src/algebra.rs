//! Gamma matrices for a two-component fermion in 1+1 dimensions.
//!
//! Conventions used throughout the crate:
//!
//! * metric signature (-, +), so eta = diag(-1, +1);
//! * Clifford relation {gamma^mu, gamma^nu} = -2 eta^{mu nu} I;
//! * Majorana representation gamma^0 = sigma^2, gamma^1 = i sigma^3.
//!
//! Both matrices are purely imaginary, so i gamma^mu is real and the field
//! equation admits real solutions. `check_clifford` and
//! `check_majorana_reality` verify these properties entrywise and report the
//! exact deviations instead of a bare boolean.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;

use crate::error::{Error, Result};

/// Dense 2x2 complex matrix. Small enough to be `Copy`; all arithmetic is
/// by value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2c {
    entries: [[Complex64; 2]; 2],
}

impl Matrix2c {
    pub fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    /// Builds from real and imaginary parts laid out as `[[a00, a01], [a10, a11]]`.
    pub fn from_parts(re: [[f64; 2]; 2], im: [[f64; 2]; 2]) -> Self {
        let e = |i: usize, j: usize| Complex64::new(re[i][j], im[i][j]);
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn zero() -> Self {
        Self::from_parts([[0.0; 2]; 2], [[0.0; 2]; 2])
    }

    pub fn identity() -> Self {
        Self::from_parts([[1.0, 0.0], [0.0, 1.0]], [[0.0; 2]; 2])
    }

    /// Entry (i, j). Panics if an index exceeds 1.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i][j]
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let e = |i: usize, j: usize| self.entries[i][j].conj();
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let e = |i: usize, j: usize| self.entries[j][i].conj();
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise distance to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// Largest absolute real part. Zero iff the matrix is purely imaginary.
    pub fn max_re(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.re.abs())
            .fold(0.0, f64::max)
    }

    /// Largest absolute imaginary part. Zero iff the matrix is real.
    pub fn max_im(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    /// Real part of every entry, as a plain array. Callers that expect an
    /// exactly real matrix should check `max_im` first.
    pub fn re_parts(&self) -> [[f64; 2]; 2] {
        let e = |i: usize, j: usize| self.entries[i][j].re;
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }
}

impl Add for Matrix2c {
    type Output = Matrix2c;
    fn add(self, rhs: Matrix2c) -> Matrix2c {
        let e = |i: usize, j: usize| self.entries[i][j] + rhs.entries[i][j];
        Matrix2c::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Sub for Matrix2c {
    type Output = Matrix2c;
    fn sub(self, rhs: Matrix2c) -> Matrix2c {
        let e = |i: usize, j: usize| self.entries[i][j] - rhs.entries[i][j];
        Matrix2c::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Neg for Matrix2c {
    type Output = Matrix2c;
    fn neg(self) -> Matrix2c {
        let e = |i: usize, j: usize| -self.entries[i][j];
        Matrix2c::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul for Matrix2c {
    type Output = Matrix2c;
    fn mul(self, rhs: Matrix2c) -> Matrix2c {
        let e = |i: usize, j: usize| {
            self.entries[i][0] * rhs.entries[0][j] + self.entries[i][1] * rhs.entries[1][j]
        };
        Matrix2c::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul<Complex64> for Matrix2c {
    type Output = Matrix2c;
    fn mul(self, s: Complex64) -> Matrix2c {
        let e = |i: usize, j: usize| self.entries[i][j] * s;
        Matrix2c::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul<Matrix2c> for Complex64 {
    type Output = Matrix2c;
    fn mul(self, m: Matrix2c) -> Matrix2c {
        m * self
    }
}

impl fmt::Display for Matrix2c {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

pub fn sigma1() -> Matrix2c {
    Matrix2c::from_parts([[0.0, 1.0], [1.0, 0.0]], [[0.0; 2]; 2])
}

pub fn sigma2() -> Matrix2c {
    Matrix2c::from_parts([[0.0; 2]; 2], [[0.0, -1.0], [1.0, 0.0]])
}

pub fn sigma3() -> Matrix2c {
    Matrix2c::from_parts([[1.0, 0.0], [0.0, -1.0]], [[0.0; 2]; 2])
}

/// A candidate pair (gamma^0, gamma^1) together with the metric it is
/// supposed to satisfy. The metric is fixed to diag(-1, +1); it is stored so
/// reports can quote the target right-hand side rather than assume it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSet {
    pub gamma0: Matrix2c,
    pub gamma1: Matrix2c,
    metric_diag: [f64; 2],
}

impl GammaSet {
    pub fn new(gamma0: Matrix2c, gamma1: Matrix2c) -> Self {
        Self {
            gamma0,
            gamma1,
            metric_diag: [-1.0, 1.0],
        }
    }

    pub fn gamma(&self, mu: usize) -> Matrix2c {
        match mu {
            0 => self.gamma0,
            1 => self.gamma1,
            _ => panic!("gamma index {mu} out of range for 1+1 dimensions"),
        }
    }

    /// eta^{mu nu}, diagonal (-1, +1).
    pub fn metric(&self, mu: usize, nu: usize) -> f64 {
        if mu == nu {
            self.metric_diag[mu]
        } else {
            0.0
        }
    }
}

/// The purely imaginary representation used by the rest of the crate:
/// gamma^0 = sigma^2, gamma^1 = i sigma^3.
pub fn build_gamma_majorana() -> GammaSet {
    let i = Complex64::new(0.0, 1.0);
    GammaSet::new(sigma2(), i * sigma3())
}

pub fn anticommutator(a: Matrix2c, b: Matrix2c) -> Matrix2c {
    a * b + b * a
}

/// Entrywise deviations from {gamma^mu, gamma^nu} = -2 eta^{mu nu} I for all
/// four index pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordReport {
    /// deviations[mu][nu] = max entry of |{gamma^mu, gamma^nu} + 2 eta^{mu nu} I|.
    pub deviations: [[f64; 2]; 2],
    pub tol: f64,
}

impl CliffordReport {
    /// NaN deviations never pass.
    pub fn passed(&self) -> bool {
        self.deviations.iter().flatten().all(|d| *d <= self.tol)
    }

    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().flatten().fold(0.0, |a, d| a.max(*d))
    }

    pub fn failing_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for mu in 0..2 {
            for nu in 0..2 {
                if !(self.deviations[mu][nu] <= self.tol) {
                    pairs.push((mu, nu));
                }
            }
        }
        pairs
    }
}

/// Checks the Clifford relation for every index pair of `set`.
///
/// The comparison is exact arithmetic on the stored entries; `tol` only
/// decides what counts as a pass in the report.
pub fn check_clifford(set: &GammaSet, tol: f64) -> Result<CliffordReport> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::NonPositiveTolerance { tol });
    }
    let mut deviations = [[0.0; 2]; 2];
    for mu in 0..2 {
        for nu in 0..2 {
            let lhs = anticommutator(set.gamma(mu), set.gamma(nu));
            let rhs = Matrix2c::identity() * Complex64::new(-2.0 * set.metric(mu, nu), 0.0);
            deviations[mu][nu] = lhs.max_abs_diff(&rhs);
        }
    }
    Ok(CliffordReport { deviations, tol })
}

/// Deviations from the two reality properties of a Majorana representation:
/// each gamma^mu purely imaginary, i.e. (gamma^mu)* = -gamma^mu, and the
/// standard hermiticity relation (gamma^mu)^dagger = gamma^0 gamma^mu gamma^0.
#[derive(Debug, Clone, PartialEq)]
pub struct RealityReport {
    /// Per mu: max entry of |(gamma^mu)* + gamma^mu|.
    pub conjugation_deviation: [f64; 2],
    /// Per mu: max entry of |(gamma^mu)^dagger - gamma^0 gamma^mu gamma^0|.
    pub hermiticity_deviation: [f64; 2],
    pub tol: f64,
}

impl RealityReport {
    pub fn passed(&self) -> bool {
        self.conjugation_deviation
            .iter()
            .chain(self.hermiticity_deviation.iter())
            .all(|d| *d <= self.tol)
    }

    pub fn max_deviation(&self) -> f64 {
        self.conjugation_deviation
            .iter()
            .chain(self.hermiticity_deviation.iter())
            .fold(0.0, |a, d| a.max(*d))
    }
}

pub fn check_majorana_reality(set: &GammaSet, tol: f64) -> Result<RealityReport> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::NonPositiveTolerance { tol });
    }
    let mut conjugation_deviation = [0.0; 2];
    let mut hermiticity_deviation = [0.0; 2];
    for mu in 0..2 {
        let g = set.gamma(mu);
        conjugation_deviation[mu] = g.conj().max_abs_diff(&(-g));
        let sandwich = set.gamma0 * g * set.gamma0;
        hermiticity_deviation[mu] = g.adjoint().max_abs_diff(&sandwich);
    }
    Ok(RealityReport {
        conjugation_deviation,
        hermiticity_deviation,
        tol,
    })
}
