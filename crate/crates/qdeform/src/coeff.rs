//! Exact coefficient arithmetic.
//!
//! Series and polynomial coefficients are arbitrary-precision rationals.
//! [`num_rational::BigRational`] already maintains the invariants this crate
//! relies on: fractions stay reduced and the denominator stays positive, so
//! equality is structural and hashing/ordering are consistent.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational coefficient, always reduced, denominator
/// always positive.
pub type Coefficient = BigRational;

/// Builds an integer coefficient.
pub fn coeff_int(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Builds the coefficient `n / d`.
///
/// Panics if `d == 0`.
pub fn coeff_ratio(n: i64, d: i64) -> Coefficient {
    assert!(d != 0, "coefficient denominator must be nonzero");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// True when the coefficient is an integer (denominator 1).
pub fn is_integral(c: &Coefficient) -> bool {
    c.denom().is_one()
}

/// Extracts the integer value of an integral coefficient.
pub fn to_bigint(c: &Coefficient) -> Option<BigInt> {
    if is_integral(c) {
        Some(c.numer().clone())
    } else {
        None
    }
}

/// Renders a coefficient as `n` or `n/d`, the format accepted back by the
/// CLI and used in every serialized output.
pub fn render(c: &Coefficient) -> String {
    if is_integral(c) {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `n` or `n/d` (arbitrary precision, optional leading `-`).
pub fn parse(text: &str) -> Option<Coefficient> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => {
            let n: BigInt = text.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

/// Total order on magnitude then sign, used for deterministic pivot choice.
pub fn magnitude_key(c: &Coefficient) -> (Coefficient, bool) {
    (c.abs(), c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign_invariants_hold() {
        let c = coeff_ratio(4, -6);
        assert_eq!(c.numer(), &BigInt::from(-2));
        assert_eq!(c.denom(), &BigInt::from(3));
        assert!(!is_integral(&c));
        assert!(is_integral(&coeff_ratio(6, 3)));
    }

    #[test]
    fn render_parse_round_trip() {
        for text in ["0", "7", "-7", "5/2", "-5/2", "123456789012345678901/7"] {
            let c = parse(text).unwrap();
            assert_eq!(render(&c), text);
        }
        assert_eq!(render(&parse("4/6").unwrap()), "2/3");
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }
}
