//! Decimal rendering of the two volume constants.
//!
//! Volumes are exact objects (a rational multiple of pi^2 in dimension 4, an
//! integer multiple of the regular ideal tetrahedron volume in dimension 3).
//! Floating point appears only at display time: values are rendered from
//! integer-scaled high-precision constants, truncated to 17 significant
//! digits, so output is identical across platforms.

use num_rational::Ratio;

/// pi^2 * 10^27, truncated.
const PI_SQUARED_E27: u128 = 9_869_604_401_089_358_618_834_490_999;

/// Volume of the regular ideal hyperbolic tetrahedron times 10^27, truncated.
/// The leading digits agree with [`crate::link3::TET_VOLUME`].
const TET_VOLUME_E27: u128 = 1_014_941_606_409_653_625_021_202_554;

const SCALE_DIGITS: usize = 27;
const SIGNIFICANT_DIGITS: usize = 17;

/// Renders `value_e27 / 10^27` with 17 significant digits (truncated),
/// trailing fractional zeros stripped.
fn render_e27(value_e27: u128) -> String {
    let digits = value_e27.to_string();
    let (int_part, frac_part): (String, String) = if digits.len() > SCALE_DIGITS {
        let split = digits.len() - SCALE_DIGITS;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        // value < 1; pad the fraction with leading zeros
        ("0".to_string(), format!("{:0>width$}", digits, width = SCALE_DIGITS))
    };

    // Significant digits start at the first nonzero digit.
    let mut all: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).collect();
    let point = int_part.len(); // digits before the decimal point
    let first_sig = all.iter().position(|&b| b != b'0').unwrap_or(all.len());
    let keep_until = (first_sig + SIGNIFICANT_DIGITS).min(all.len());
    for b in all.iter_mut().skip(keep_until) {
        *b = b'0';
    }

    let int_str = String::from_utf8(all[..point].to_vec()).unwrap();
    let mut frac_str = String::from_utf8(all[point..].to_vec()).unwrap();
    while frac_str.ends_with('0') {
        frac_str.pop();
    }
    if frac_str.is_empty() {
        int_str
    } else {
        format!("{int_str}.{frac_str}")
    }
}

/// Decimal rendering of `q * pi^2` for a non-negative rational `q`.
pub fn pi_squared_times(q: Ratio<i64>) -> String {
    assert!(*q.numer() >= 0 && *q.denom() > 0);
    let scaled = PI_SQUARED_E27 * (*q.numer() as u128) / (*q.denom() as u128);
    render_e27(scaled)
}

/// Decimal rendering of `m` times the regular ideal tetrahedron volume.
pub fn tet_volume_times(m: usize) -> String {
    render_e27(TET_VOLUME_E27 * m as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_volume_renderings() {
        assert_eq!(tet_volume_times(1), "1.0149416064096536");
        assert_eq!(tet_volume_times(2), "2.0298832128193072");
        assert_eq!(tet_volume_times(24), "24.358598553831687");
    }

    #[test]
    fn pi_squared_renderings() {
        assert_eq!(pi_squared_times(Ratio::new(1, 1)), "9.8696044010893586");
        assert_eq!(pi_squared_times(Ratio::new(4, 3)), "13.159472534785811");
        assert_eq!(pi_squared_times(Ratio::new(2, 9)), "2.1932454224643019");
    }

    #[test]
    fn rendered_strings_roundtrip_to_the_f64_values() {
        let printed: f64 = tet_volume_times(2).parse().unwrap();
        assert_eq!(printed, 2.0 * crate::link3::TET_VOLUME);
    }
}
