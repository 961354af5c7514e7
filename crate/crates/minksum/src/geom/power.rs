//! Signed and absolute fractional powers.
//!
//! Superquadric formulas combine two power semantics: terms that come from
//! even integer powers generalize to `|x|^p`, while odd terms generalize to
//! the sign-preserving `sign(x) |x|^p`. Mixing them up flips surface octants,
//! so both live here with explicit names.

/// Signed power `sign(x) |x|^p`.
///
/// Defined for positive exponents only; `spow(0, p) = 0` for every valid `p`.
///
/// # Panics
///
/// Panics if `p` is not strictly positive.
pub fn spow(x: f64, p: f64) -> f64 {
    assert!(p > 0.0, "spow exponent must be strictly positive, got {p}");
    if x == 0.0 {
        0.0
    } else if x < 0.0 {
        -(-x).powf(p)
    } else {
        x.powf(p)
    }
}

/// Absolute power `|x|^p`, the even-power generalization.
#[inline]
pub(crate) fn apow(x: f64, p: f64) -> f64 {
    x.abs().powf(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spow_known_values() {
        assert_eq!(spow(-0.5, 2.0), -0.25);
        assert_eq!(spow(0.0, 0.7), 0.0);
        assert_eq!(spow(-0.0, 0.7), 0.0);
        assert!((spow(8.0, 1.0 / 3.0) - 2.0).abs() < 1e-12);
        assert!((spow(-8.0, 1.0 / 3.0) + 2.0).abs() < 1e-12);
    }

    #[test]
    fn spow_is_odd() {
        for &x in &[0.3, 1.7, 42.0] {
            for &p in &[0.2, 1.0, 2.5] {
                assert_eq!(spow(-x, p), -spow(x, p));
            }
        }
    }

    #[test]
    #[should_panic(expected = "strictly positive")]
    fn spow_rejects_zero_exponent() {
        spow(1.0, 0.0);
    }

    #[test]
    fn apow_drops_sign() {
        assert_eq!(apow(-2.0, 2.0), 4.0);
        assert_eq!(apow(2.0, 2.0), 4.0);
    }
}
