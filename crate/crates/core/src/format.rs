//! Deterministic plain-text number formatting for report files.
//!
//! All numeric output is rendered through [`g12`], which prints twelve
//! significant digits in the shorter of fixed or scientific notation
//! (the same presentation rule as C's `%.12g`). Formatting a given bit
//! pattern always yields the same bytes, which is what makes report files
//! reproducible across runs and platforms.

/// Formats `value` with 12 significant digits, trimming trailing zeros.
///
/// Values with decimal exponent in [-4, 12) are printed in fixed notation,
/// everything else in scientific notation; zero prints as `0` (the sign of
/// a negative zero is dropped so equal values format identically).
pub fn g12(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    // `{:.11e}` rounds the mantissa to 12 significant digits and exposes
    // the decimal exponent, which decides the presentation.
    let sci = format!("{value:.11e}");
    let (mantissa, exponent) = sci
        .split_once('e')
        .expect("float scientific form always contains an exponent");
    let exponent: i32 = exponent
        .parse()
        .expect("float exponent is a valid integer");
    if (-4..12).contains(&exponent) {
        let decimals = (11 - exponent).max(0) as usize;
        trim_fraction(&format!("{value:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_fraction(mantissa))
    }
}

/// Drops trailing fractional zeros (and a then-dangling decimal point).
fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::g12;

    #[test]
    fn twelve_significant_digits_in_fixed_range() {
        assert_eq!(g12(std::f64::consts::SQRT_2), "1.41421356237");
        assert_eq!(g12(-std::f64::consts::SQRT_2), "-1.41421356237");
        assert_eq!(g12(0.585_786_437_626_904_9), "0.585786437627");
        assert_eq!(g12(20_000.0), "20000");
        assert_eq!(g12(2.5), "2.5");
    }

    #[test]
    fn zero_and_signed_zero_collapse() {
        assert_eq!(g12(0.0), "0");
        assert_eq!(g12(-0.0), "0");
    }

    #[test]
    fn scientific_notation_outside_the_fixed_window() {
        assert_eq!(g12(1e-5), "1e-5");
        assert_eq!(g12(2.5e-7), "2.5e-7");
        assert_eq!(g12(1e12), "1e12");
        assert_eq!(g12(f64::MIN_POSITIVE), "2.22507385851e-308");
    }

    #[test]
    fn boundary_rounding_carries_cleanly() {
        // Rounds up across a power of ten: the rounded mantissa pushes the
        // exponent to 12, which lands in the scientific branch.
        assert_eq!(g12(0.999_999_999_999_6), "1");
        assert_eq!(g12(9.999_999_999_996e11), "1e12");
    }

    #[test]
    fn non_finite_values_do_not_panic() {
        assert_eq!(g12(f64::INFINITY), "inf");
        assert_eq!(g12(f64::NEG_INFINITY), "-inf");
        assert_eq!(g12(f64::NAN), "NaN");
    }

    #[test]
    fn formatting_is_a_pure_function_of_the_bits() {
        let v = 1.0 / 3.0;
        assert_eq!(g12(v), g12(f64::from_bits(v.to_bits())));
        assert_eq!(g12(v), "0.333333333333");
    }
}
