//! Number formatting for machine-readable output.

use crate::exponents::CriticalExponent;

/// Formats with 17 significant digits, enough to round-trip any f64.
pub fn g17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Like [`g17`], with the `inf` sentinel spelled out.
pub fn g17_exp(x: &CriticalExponent) -> String {
    match x {
        CriticalExponent::Finite(v) => g17(*v),
        CriticalExponent::Infinite => "inf".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_round_trips() {
        for &x in &[0.1, -3.4510e-7, 6.922024586816338, 1.0 / 3.0, 1e300] {
            let s = g17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn sentinel_prints_inf() {
        assert_eq!(g17_exp(&CriticalExponent::Infinite), "inf");
    }
}
