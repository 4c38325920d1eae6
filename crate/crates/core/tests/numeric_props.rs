//! Cross-cutting properties of the numerical solvers: structural facts
//! about Sturm bisection on random matrices, convergence of the
//! finite-difference route, and agreement between solvers that share no
//! code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use maj_confine::analytic::{energy_level, EnergySign, PotentialParams};
use maj_confine::numeric::{
    default_grid, eigen_lowest_k, find_eigen_shooting, spectrum_fd, Grid, TridiagonalSym,
};

fn params(m: f64, b: f64) -> PotentialParams {
    PotentialParams::new(m, b).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, dim: usize) -> TridiagonalSym {
    let diag: Vec<f64> = (0..dim).map(|_| rng.gen_range(-4.0..4.0)).collect();
    let offdiag: Vec<f64> = (0..dim.saturating_sub(1))
        .map(|_| rng.gen_range(0.1..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 })
        .collect();
    TridiagonalSym::new(diag, offdiag).unwrap()
}

#[test]
fn eigenvalues_are_sorted_and_inside_gershgorin_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..60 {
        let dim = rng.gen_range(2..=12);
        let matrix = random_matrix(&mut rng, dim);
        let (lo, hi) = matrix.gershgorin_bounds();
        let result = eigen_lowest_k(&matrix, dim, 1e-10).unwrap();
        let values = result.values();
        for pair in values.windows(2) {
            assert!(pair[0] <= pair[1], "eigenvalues must come out ascending");
        }
        for &v in values {
            assert!(lo - 1e-9 <= v && v <= hi + 1e-9, "{v} outside [{lo}, {hi}]");
        }
    }
}

#[test]
fn leading_principal_submatrix_eigenvalues_interlace() {
    // Cauchy interlacing: eigenvalues of the (dim-1) leading principal
    // submatrix separate those of the full matrix.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..40 {
        let dim = rng.gen_range(3..=10);
        let matrix = random_matrix(&mut rng, dim);
        let sub = matrix.principal_submatrix(dim - 1);
        let full = eigen_lowest_k(&matrix, dim, 1e-11).unwrap();
        let inner = eigen_lowest_k(&sub, dim - 1, 1e-11).unwrap();
        for (i, mu) in inner.values().iter().enumerate() {
            let lo = full.values()[i] - 1e-9;
            let hi = full.values()[i + 1] + 1e-9;
            assert!(
                lo <= *mu && *mu <= hi,
                "interlacing violated: mu_{i} = {mu} not in [{lo}, {hi}]"
            );
        }
    }
}

#[test]
fn asking_for_fewer_eigenvalues_returns_a_prefix() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..20 {
        let dim = rng.gen_range(3..=9);
        let matrix = random_matrix(&mut rng, dim);
        let full = eigen_lowest_k(&matrix, dim, 1e-11).unwrap();
        let k = rng.gen_range(1..dim);
        let partial = eigen_lowest_k(&matrix, k, 1e-11).unwrap();
        for (a, b) in partial.values().iter().zip(full.values()) {
            // Same bisection on the same bounds: identical bits.
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }
}

#[test]
fn sturm_count_is_monotone_in_the_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..30 {
        let dim = rng.gen_range(2..=10);
        let matrix = random_matrix(&mut rng, dim);
        let (lo, hi) = matrix.gershgorin_bounds();
        let mut prev = 0;
        for step in 0..=24 {
            let shift = lo - 0.5 + (hi - lo + 1.0) * step as f64 / 24.0;
            let count = matrix.sturm_count(shift);
            assert!(count >= prev, "count dropped from {prev} to {count}");
            prev = count;
        }
        assert_eq!(prev, dim, "all eigenvalues lie below the upper bound");
    }
}

#[test]
fn fd_error_shrinks_at_second_order() {
    // Richardson-style check on the first excited level at m = 0, b = 1:
    // quadrupling the point count must shrink the error by ~4 each time.
    let p = params(0.0, 1.0);
    let exact = energy_level(1, 1.0, EnergySign::Plus).unwrap();
    let error_at = |points: usize| {
        let grid = Grid::new(-18.0, 18.0, points).unwrap();
        (spectrum_fd(&p, &grid, 2).unwrap()[1] - exact).abs()
    };
    let coarse = error_at(901);
    let mid = error_at(1801);
    let fine = error_at(3601);
    for (a, b) in [(coarse, mid), (mid, fine)] {
        let ratio = a / b;
        assert!(
            (3.3..=4.7).contains(&ratio),
            "expected second-order decay, got ratio {ratio:.2}"
        );
    }
}

#[test]
fn fd_and_shooting_agree_without_sharing_code() {
    // Same spectrum through two unrelated discretizations. The comparison
    // is on beta = E^2 + b, scaled by b, where both methods are natively
    // accurate.
    for &(m, b) in &[(0.0, 1.0), (2.0, 0.5), (-1.0, 2.0)] {
        let p = params(m, b);
        let fd = spectrum_fd(&p, &default_grid(&p), 7).unwrap();
        for n in 0..=6_usize {
            let shoot = find_eigen_shooting(&p, n, 1e-10).unwrap();
            let fd_beta_over_b = (fd[n] * fd[n] + b) / b;
            let dev = (fd_beta_over_b - shoot.beta_over_b()).abs();
            assert!(
                dev <= 2e-3,
                "m = {m}, b = {b}, n = {n}: fd {fd_beta_over_b} vs shooting {}",
                shoot.beta_over_b()
            );
        }
    }
}

#[test]
fn shooting_brackets_always_contain_the_returned_value() {
    let p = params(0.0, 1.0);
    for n in 0..=8_usize {
        let found = find_eigen_shooting(&p, n, 1e-6).unwrap();
        let (lo, hi) = found.bracket();
        assert!(lo <= found.beta_over_b() && found.beta_over_b() <= hi);
        assert!(hi - lo <= 1e-6);
        assert_eq!(found.node_count(), n, "interior node count identifies the level");
    }
}

#[test]
fn default_grid_supports_the_fd_solver_for_wide_parameter_ranges() {
    for &(m, b) in &[(0.0, 1.0), (5.0, 0.5), (-3.0, 2.0), (10.0, 4.0), (0.0, 0.1)] {
        let p = params(m, b);
        let grid = default_grid(&p);
        // Must not error: the default grid satisfies the support rule.
        let spectrum = spectrum_fd(&p, &grid, 4).unwrap();
        assert_eq!(spectrum.len(), 4);
        for n in 1..4 {
            let exact = energy_level(n, b, EnergySign::Plus).unwrap();
            assert!(
                (spectrum[n] - exact).abs() <= 5e-4 * (1.0 + b),
                "m = {m}, b = {b}, n = {n}"
            );
        }
    }
}
