//! A catalog of continued fractions with known closed forms.
//!
//! Each constructor returns the exact fraction; the test suite pins each one
//! against the series it must equal. Naming: `tailN` means the series of
//! coefficients from exponent `N` on, rebased at exponent 0 (the result of
//! [`TruncatedSeries::shifted_tail`]); `_c`, `_j`, `_h` mark C-fraction
//! (unit denominators), J-type (constant-length denominators), and
//! staircase/H shapes; a trailing digit counts the period.
//!
//! [`TruncatedSeries::shifted_tail`]: crate::series::TruncatedSeries::shifted_tail

use crate::coeff::{coeff_int, coeff_ratio, Coefficient};
use crate::poly::QPolynomial;
use crate::qreal::metallic_bracket;

use super::{CFLayer, GeneralizedCFrac};

fn unit(c: i64, e: u32) -> CFLayer {
    CFLayer::unit(coeff_int(c), e)
}

fn unit_frac(n: i64, d: i64, e: u32) -> CFLayer {
    CFLayer::unit(coeff_ratio(n, d), e)
}

fn layer(den: &[i64], c: i64, e: u32) -> CFLayer {
    CFLayer::new(QPolynomial::from_ints(den), coeff_int(c), e)
}

fn one() -> Coefficient {
    coeff_int(1)
}

/// 2-periodic C-fraction equal to the golden deformation:
/// `1 / (1 - q^2 / (1 + q / (1 - q^2 / ...)))`.
pub fn golden_c() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![unit(-1, 2), unit(1, 1)], 0)
}

/// 3-periodic C-fraction equal to the exponent-2 tail of the golden
/// deformation: `1 / (1 + q / (1 + q / (1 + q^3 / ...)))`.
pub fn golden_tail2_c() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![unit(1, 1), unit(1, 1), unit(1, 3)], 0)
}

/// 2-periodic J-type fraction equal to the exponent-2 tail of the golden
/// deformation: `1 / (1 + q - q^2 / (1 + q + q^3 / ...))`.
pub fn golden_tail2_j() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(
        one(),
        0,
        vec![layer(&[1, 1], -1, 2), layer(&[1, 1], 1, 3)],
        0,
    )
}

/// 1-periodic staircase equal to the exponent-2 tail of the golden
/// deformation: `1 / (1 + q - q^2 + q^3 / (1 + q - q^2 + q^3 / ...))`.
pub fn golden_tail2_staircase() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![layer(&[1, 1, -1], 1, 3)], 0)
}

/// 3-periodic fraction equal to the exponent-2 tail of the golden
/// deformation, mixing the J and staircase denominators.
pub fn golden_tail2_h3() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(
        one(),
        0,
        vec![
            layer(&[1, 1], -1, 2),
            layer(&[1, 1], 1, 3),
            layer(&[1, 1, -1], 1, 3),
        ],
        0,
    )
}

/// Eventually periodic fraction equal to the golden deformation itself:
/// one unit layer, then the 3-periodic block of [`golden_tail2_h3`] rotated.
pub fn golden_h() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(
        one(),
        0,
        vec![
            unit(-1, 2),
            layer(&[1, 1], 1, 3),
            layer(&[1, 1, -1], 1, 3),
            layer(&[1, 1], -1, 2),
        ],
        1,
    )
}

/// 2-periodic staircase (depth 2, offsets alternating 0 and 2) equal to the
/// exponent-3 tail of the golden deformation; note the head unit is -1.
pub fn golden_tail3_h2() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(
        coeff_int(-1),
        0,
        vec![layer(&[1, 2], -1, 4), layer(&[1, 1, -1, 2], -1, 4)],
        0,
    )
}

/// The 8-periodic depth-2 staircase equal to the exponent-1 tail of the
/// silver deformation.
pub fn silver_tail1_h8() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, silver_period_units(), 0)
}

fn silver_period_units() -> Vec<CFLayer> {
    vec![
        unit(-1, 3),
        layer(&[1, 0, 2], 1, 5),
        layer(&[1, 0, 2, -1], 1, 5),
        layer(&[1, 0, 2], -1, 3),
        unit(1, 2),
        unit(1, 2),
        layer(&[1, 1], 1, 2),
        unit(1, 2),
    ]
}

/// Eventually periodic fraction equal to the silver deformation itself:
/// three preperiod layers, then the 8-periodic silver block.
pub fn silver_h() -> GeneralizedCFrac {
    let mut layers = vec![
        layer(&[1, -1], 1, 2),
        layer(&[1, 1], 1, 2),
        unit(1, 2),
    ];
    layers.extend(silver_period_units());
    GeneralizedCFrac::periodic(one(), 0, layers, 3)
}

/// 1-periodic staircase equal to the exponent-4 tail of the silver
/// deformation: `1 / (1 + 2q^2 - q^3 + q^5 / (...))`.
pub fn silver_tail4_staircase() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![CFLayer::new(metallic_bracket(2), one(), 5)], 0)
}

/// 3-periodic fraction equal to the exponent-1 tail of the bronze
/// deformation.
pub fn bronze_tail1_h3() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(
        one(),
        0,
        vec![layer(&[1, -1], 1, 2), layer(&[1, 1], 1, 3), unit(1, 2)],
        0,
    )
}

/// 2-periodic J-type fraction equal to 1 minus the exponent-2 tail of the
/// silver deformation: `1 / (1 + q^2 / (1 + q^2 - q^3 / (1 + q^2 / ...)))`.
pub fn one_minus_silver_tail2_j() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(
        one(),
        0,
        vec![unit(1, 2), layer(&[1, 0, 1], -1, 3)],
        0,
    )
}

/// 13-periodic C-fraction (with rational layer coefficients) equal to
/// `q^3` times the exponent-2 tail of the silver deformation.
pub fn scaled_silver_tail2_c() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(
        one(),
        5,
        vec![
            unit(2, 2),
            unit_frac(1, 2, 1),
            unit_frac(-1, 2, 1),
            unit(2, 1),
            unit(-2, 1),
            unit_frac(1, 2, 1),
            unit_frac(1, 2, 1),
            unit(-2, 1),
            unit(2, 1),
            unit_frac(-1, 2, 1),
            unit_frac(1, 2, 1),
            unit(2, 2),
            unit(1, 5),
        ],
        0,
    )
}

/// Finite C-fraction of the q-integer `[3]_q`.
pub fn q_int3_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        0,
        vec![unit(-1, 1), unit(1, 2), unit(1, 1)],
        QPolynomial::one(),
    )
}

/// Finite C-fraction of the q-integer `[4]_q`.
pub fn q_int4_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        0,
        vec![unit(-1, 1), unit(1, 3), unit(1, 1), unit(-1, 1), unit(1, 1)],
        QPolynomial::one(),
    )
}

/// Finite C-fraction of the q-integer `[5]_q`.
pub fn q_int5_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        0,
        vec![
            unit(-1, 1),
            unit(1, 4),
            unit(1, 1),
            unit(-1, 1),
            unit(1, 2),
            unit(1, 1),
        ],
        QPolynomial::one(),
    )
}

/// Finite C-fraction of `[1/3]_q = q^2 / [3]_q`.
pub fn q_recip3_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        2,
        vec![unit(1, 1), unit(-1, 1), unit(1, 1)],
        QPolynomial::one(),
    )
}

/// Finite C-fraction of `[1/4]_q = q^3 / [4]_q`.
pub fn q_recip4_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        3,
        vec![unit(1, 1), unit(-1, 1), unit(1, 2), unit(1, 1)],
        QPolynomial::one(),
    )
}

/// Finite C-fraction of `[1/5]_q = q^4 / [5]_q`.
pub fn q_recip5_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        4,
        vec![
            unit(1, 1),
            unit(-1, 1),
            unit(1, 3),
            unit(1, 1),
            unit(-1, 1),
            unit(1, 1),
        ],
        QPolynomial::one(),
    )
}

/// Finite C-fraction of `[2/5]_q`, with rational layer coefficients.
pub fn q_two_fifths_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        2,
        vec![unit(2, 2), unit_frac(1, 2, 1), unit_frac(1, 2, 1)],
        QPolynomial::one(),
    )
}

/// Finite C-fraction of `[3/5]_q`.
pub fn q_three_fifths_c() -> GeneralizedCFrac {
    GeneralizedCFrac::finite(
        one(),
        1,
        vec![unit(1, 1), unit(1, 1), unit(1, 2)],
        QPolynomial::one(),
    )
}

/// 1-periodic C-fraction of the Catalan number series:
/// `1 / (1 - q / (1 - q / ...))`.
pub fn catalan_c() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![unit(-1, 1)], 0)
}

/// 1-periodic J-type fraction of the shifted Catalan series
/// `(catalan - 1) / q`: `1 / (1 - 2q - q^2 / (1 - 2q - q^2 / ...))`.
pub fn catalan_tail1_j() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![layer(&[1, -2], -1, 2)], 0)
}

/// 3-periodic C-fraction of the Motzkin number series.
pub fn motzkin_c() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![unit(-1, 1), unit(-1, 1), unit(-1, 2)], 0)
}

/// 1-periodic J-type fraction of the Motzkin number series:
/// `1 / (1 - q - q^2 / (1 - q - q^2 / ...))`.
pub fn motzkin_j() -> GeneralizedCFrac {
    GeneralizedCFrac::periodic(one(), 0, vec![layer(&[1, -1], -1, 2)], 0)
}

/// 1-periodic staircase for the fractional tail of the n-th metallic
/// deformation: `[y_n]_q = [n]_q + q^(2n) / (<n>_q + q^(2n+1) / (...))`.
pub fn metallic_y_tail(n: u64) -> GeneralizedCFrac {
    assert!(n >= 1);
    GeneralizedCFrac::periodic(
        one(),
        2 * n as i64,
        vec![CFLayer::new(metallic_bracket(n), one(), 2 * n as u32 + 1)],
        0,
    )
}
