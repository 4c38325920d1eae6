//! Exact polynomial factor of the mode profiles.
//!
//! Writing the upper component as phi = N exp(-r^2 / 2) F(r), the oscillator
//! equation turns into F'' - 2 r F' + 2 n F = 0, whose power-series
//! coefficients obey
//!
//! ```text
//! a_{k+2} = 2 (k - n) / ((k + 2)(k + 1)) * a_k.
//! ```
//!
//! Seeding a_0 = 1 (n even) or a_1 = 1 (n odd) and running the recurrence in
//! exact rational arithmetic shows the series terminates at degree n with no
//! rounding caveat: the k = n step multiplies by exactly zero. The resulting
//! polynomial is proportional to the degree-n Hermite polynomial.

use num::{BigRational, One, Signed, ToPrimitive, Zero};

/// Whether a polynomial carries only even or only odd powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Terminating solution of the series recurrence for one level n.
///
/// Invariants: exact coefficients of length n + 1; every index of the wrong
/// parity is exactly zero; the coefficient at index n is nonzero. The f64
/// mirror is rounded once from the rationals and used for all evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries {
    n: usize,
    exact: Vec<BigRational>,
    approx: Vec<f64>,
    parity: Parity,
}

/// The recurrence factor linking a_k to a_{k+2}, as an exact rational.
pub fn recurrence_ratio(n: usize, k: usize) -> BigRational {
    let numer = 2 * (k as i64 - n as i64);
    let denom = ((k + 2) * (k + 1)) as i64;
    BigRational::new(numer.into(), denom.into())
}

/// Runs the recurrence for level n with unit seed a_{n mod 2} = 1.
pub fn hermite_coeffs(n: usize) -> CoefficientSeries {
    let mut exact = vec![BigRational::zero(); n + 1];
    let seed = n % 2;
    exact[seed] = BigRational::one();
    let mut k = seed;
    while k + 2 <= n {
        let next = recurrence_ratio(n, k) * &exact[k];
        exact[k + 2] = next;
        k += 2;
    }
    CoefficientSeries::from_exact(n, exact)
}

impl CoefficientSeries {
    fn from_exact(n: usize, exact: Vec<BigRational>) -> Self {
        debug_assert_eq!(exact.len(), n + 1);
        let approx = exact
            .iter()
            .map(|c| c.to_f64().expect("coefficient out of f64 range"))
            .collect();
        Self {
            n,
            exact,
            approx,
            parity: Parity::of_degree(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Exact coefficient a_k; zero beyond the degree.
    pub fn exact_coeff(&self, k: usize) -> BigRational {
        self.exact.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Rounded coefficient a_k; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.approx.get(k).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.approx
    }

    /// Sign of the leading coefficient: +1.0 or -1.0 (a_n is never zero).
    pub fn leading_sign(&self) -> f64 {
        if self.exact[self.n].is_negative() {
            -1.0
        } else {
            1.0
        }
    }

    /// The series with every coefficient negated. Parity and termination are
    /// unaffected; used to fix an overall phase.
    pub fn negated(&self) -> Self {
        let exact = self.exact.iter().map(|c| -c.clone()).collect();
        Self::from_exact(self.n, exact)
    }

    /// What the recurrence would produce at index n + 2. For a terminating
    /// series this is exactly zero, because the k = n step carries the factor
    /// 2 (n - n) = 0.
    pub fn coefficient_past_degree(&self) -> BigRational {
        recurrence_ratio(self.n, self.n) * &self.exact[self.n]
    }

    /// True when the recurrence yields an exact rational zero past the
    /// degree, i.e. the polynomial really stops at r^n.
    pub fn terminates_exactly(&self) -> bool {
        self.coefficient_past_degree().is_zero()
    }

    /// F(r) by Horner's rule on the f64 mirror.
    pub fn eval(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.approx.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    /// F'(r).
    pub fn eval_derivative(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        for k in (1..=self.n).rev() {
            acc = acc * r + k as f64 * self.approx[k];
        }
        acc
    }

    /// F''(r).
    pub fn eval_second_derivative(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        for k in (2..=self.n).rev() {
            acc = acc * r + (k * (k - 1)) as f64 * self.approx[k];
        }
        acc
    }
}
