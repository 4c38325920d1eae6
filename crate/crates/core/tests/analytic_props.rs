//! Property tests for the closed-form machinery: structural identities that
//! must hold for every level and every admissible parameter set.

use proptest::prelude::*;

use maj_confine::analytic::{
    energy_level, hermite_coeffs, EnergySign, Mode, Parity, PotentialParams,
};

fn params(m: f64, b: f64) -> PotentialParams {
    PotentialParams::new(m, b).unwrap()
}

/// Admissible slopes: positive, spanning three orders of magnitude.
fn slope() -> impl Strategy<Value = f64> {
    0.05_f64..20.0
}

/// Masses across sign and size, including zero.
fn mass() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), -6.0_f64..6.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn series_has_definite_parity_bit_for_bit(n in 0_usize..=16, r in -6.0_f64..6.0) {
        let series = hermite_coeffs(n);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // Floating-point rounding is sign-symmetric, so parity must hold
        // exactly, not just approximately.
        prop_assert_eq!(series.eval(-r).to_bits(), (sign * series.eval(r)).to_bits());
        let expected_parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
        prop_assert_eq!(series.parity(), expected_parity);
    }

    #[test]
    fn series_terminates_for_every_level(n in 0_usize..=60) {
        prop_assert!(hermite_coeffs(n).terminates_exactly());
    }

    #[test]
    fn energy_branches_mirror_and_scale(n in 0_usize..=30, b in slope()) {
        let plus = energy_level(n, b, EnergySign::Plus).unwrap();
        let minus = energy_level(n, b, EnergySign::Minus).unwrap();
        prop_assert_eq!((plus + minus).to_bits(), 0.0_f64.to_bits());
        // E_n(b) = sqrt(b) * E_n(1) up to rounding.
        let unit = energy_level(n, b / b, EnergySign::Plus).unwrap();
        prop_assert!((plus - b.sqrt() * unit).abs() <= 1e-12 * (1.0 + plus));
    }

    #[test]
    fn spectrum_never_sees_the_mass(n in 0_usize..=20, m in mass(), b in slope()) {
        let with_mass = Mode::new(params(m, b), n, EnergySign::Plus).energy();
        let without = Mode::new(params(0.0, b), n, EnergySign::Plus).energy();
        prop_assert_eq!(with_mass.to_bits(), without.to_bits());
    }

    #[test]
    fn zero_mode_is_nodeless_positive_and_static(m in mass(), b in slope()) {
        let p = params(m, b);
        let mode = Mode::normalized(p, 0, EnergySign::Plus).unwrap();
        prop_assert_eq!(mode.energy().to_bits(), 0.0_f64.to_bits());
        for k in -20..=20 {
            let x = p.position_at(k as f64 * 0.3);
            prop_assert!(mode.phi(x) > 0.0, "phi_0 must stay positive");
            prop_assert_eq!(mode.chi_imag(x), 0.0);
        }
    }

    #[test]
    fn normalization_is_idempotent(n in 0_usize..=8, b in 0.2_f64..5.0) {
        let mode = Mode::normalized(params(0.0, b), n, EnergySign::Plus).unwrap();
        let spec = maj_confine::QuadratureSpec::default_for(n);
        let integral = mode.norm_integral(&spec).unwrap();
        prop_assert!((integral - 1.0).abs() <= 1e-11, "norm integral {integral}");
    }

    #[test]
    fn mass_translates_profiles_rigidly(n in 0_usize..=6, m in -4.0_f64..4.0, b in 0.25_f64..4.0) {
        let shifted = Mode::normalized(params(m, b), n, EnergySign::Plus).unwrap();
        let centered = Mode::normalized(params(0.0, b), n, EnergySign::Plus).unwrap();
        let x0 = m / b;
        for k in -12..=12 {
            let x = -x0 + k as f64 * 0.25 / b.sqrt();
            let dev = (shifted.phi(x) - centered.phi(x + x0)).abs()
                .max((shifted.chi_imag(x) - centered.chi_imag(x + x0)).abs());
            prop_assert!(dev <= 1e-9, "translation broke at n = {}, x = {}: {}", n, x, dev);
        }
    }

    #[test]
    fn lower_component_is_the_previous_upper_component(n in 1_usize..=8, b in 0.25_f64..4.0) {
        // Separately normalized, |chi_n| and |phi_(n-1)| are the same
        // function: the two components live one level apart.
        let p = params(0.0, b);
        let upper = Mode::normalized(p, n, EnergySign::Plus).unwrap();
        let partner = Mode::normalized(p, n - 1, EnergySign::Plus).unwrap();
        // chi keeps only 1/2 of the total norm for n >= 1, phi of the
        // partner likewise for n - 1 >= 1; rescale both to unit L2 norm.
        let chi_scale = if n >= 1 { 2.0_f64.sqrt() } else { 1.0 };
        let phi_scale = if n - 1 >= 1 { 2.0_f64.sqrt() } else { 1.0 };
        for k in -15..=15 {
            let x = p.position_at(k as f64 * 0.4);
            let lhs = chi_scale * upper.chi_imag(x).abs();
            let rhs = phi_scale * partner.phi(x).abs();
            prop_assert!((lhs - rhs).abs() <= 1e-9, "n = {}, x = {}: {} vs {}", n, x, lhs, rhs);
        }
    }

    #[test]
    fn minus_branch_flips_only_the_lower_component(n in 1_usize..=8, b in 0.25_f64..4.0) {
        let p = params(0.0, b);
        let plus = Mode::normalized(p, n, EnergySign::Plus).unwrap();
        let minus = Mode::normalized(p, n, EnergySign::Minus).unwrap();
        for k in -10..=10 {
            let x = p.position_at(k as f64 * 0.5);
            prop_assert_eq!(plus.phi(x).to_bits(), minus.phi(x).to_bits());
            prop_assert_eq!(plus.chi_imag(x).to_bits(), (-minus.chi_imag(x)).to_bits());
        }
    }
}
