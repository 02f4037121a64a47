//! Shared fixtures for the integration suites: frozen coefficient and
//! determinant data for the named series, and the randomized property
//! suites run by both `properties` and the acceptance gate.

#![allow(dead_code)]

use qdeform::coeff::{coeff_int, Coefficient};

pub fn ints(values: &[i64]) -> Vec<Coefficient> {
    values.iter().map(|&v| coeff_int(v)).collect()
}

/// Frozen expected values. Series heads hold the full displayed coefficient
/// runs; wall rows are given as one (anti)period or as the displayed prefix.
pub mod data {
    /// Golden deformation coefficients, exponents 0..=20.
    pub const GOLDEN_SERIES: [i64; 21] = [
        1, 0, 1, -1, 2, -4, 8, -17, 37, -82, 185, -423, 978, -2283, 5373, -12735, 30372, -72832,
        175502, -424748, 1032004,
    ];

    /// Silver deformation coefficients, exponents 0..=21.
    pub const SILVER_SERIES: [i64; 22] = [
        1, 1, 0, 0, 1, 0, -2, 1, 4, -5, -7, 18, 7, -55, 18, 146, -155, -322, 692, 476, -2446, 307,
    ];

    /// Bronze deformation coefficients, exponents 0..=22.
    pub const BRONZE_SERIES: [i64; 23] = [
        1, 1, 1, 0, 0, 0, 1, 0, -1, -2, 2, 4, 1, -11, -7, 15, 34, -17, -83, -38, 189, 215, -260,
    ];

    /// Golden wall rows at shifts 0..=3 are 4-antiperiodic; one full period
    /// of 8 values each.
    pub const GOLDEN_CYCLES: [[i64; 8]; 4] = [
        [1, 1, 1, 0, -1, -1, -1, 0],
        [1, 0, -1, 1, -1, 0, 1, -1],
        [1, 1, 1, 0, -1, -1, -1, 0],
        [1, -1, 0, 0, -1, 1, 0, 0],
    ];

    /// The golden wall leaves the band at shift 4; displayed prefix.
    pub const GOLDEN_ROW4_PREFIX: [i64; 16] = [1, 2, 0, -2, -3, -4, 0, 4, 5, 6, 0, -6, -7, -8, 0, 8];

    /// Silver wall rows at shifts 0..=4 are 12-periodic; one period each.
    pub const SILVER_PERIODS: [[i64; 12]; 5] = [
        [1, 1, -1, -1, 1, 0, -1, 0, 0, 1, 0, -1],
        [1, 1, 0, -1, 0, 0, -1, 0, 1, 1, -1, -1],
        [1, 0, 0, -1, 0, 1, -1, -1, 1, 1, -1, 0],
        [1, 0, -1, -1, 1, 1, -1, -1, 0, 1, 0, 0],
        [1, 1, -2, -1, 2, -1, -2, 1, 1, 0, 0, 0],
    ];

    /// Bronze wall rows at shifts 0..=5 are 24-antiperiodic; one period each.
    pub const BRONZE_PERIODS: [[i64; 24]; 6] = [
        [1, 1, 0, -1, -1, 1, 1, 0, -1, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, -1, -1, 0, 1, 1],
        [1, 1, -1, 0, 1, -1, 0, 0, -1, 0, 0, 0, -1, 0, 0, -1, 1, 0, -1, 1, 1, -1, 0, 1],
        [1, 1, 0, 0, -1, 0, 0, 0, -1, 0, 0, 1, 1, 0, -1, -1, 1, 1, 0, -1, -1, 1, 1, 0],
        [1, 0, 0, 0, 1, 0, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1, 1, 1, -1, 0, 1, -1, 0, 0],
        [1, 0, 0, -1, -1, 0, 1, 1, -1, -1, 0, 1, 1, -1, -1, 0, 1, 1, 0, 0, -1, 0, 0, 0],
        [1, 0, -1, 2, 1, -1, 1, 0, -1, 0, 0, -1, 0, 1, -1, 1, 2, -1, 0, 1, 0, 0, 0, 0],
    ];

    /// Platinum wall rows at shifts 0..=5 (40-periodic); displayed prefixes.
    pub const PLATINUM_PREFIXES: [[i64; 13]; 6] = [
        [1, 1, 0, 0, 1, 1, -1, 0, 1, 0, -1, -1, 1],
        [1, 1, 0, -1, 0, 1, -1, -1, 0, 0, -1, -1, 0],
        [1, 1, -1, 0, 0, 1, -1, 0, 0, 0, -1, 0, 0],
        [1, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0],
        [1, 0, 0, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0],
        [1, 0, 0, 0, 1, 1, 0, 0, 1, 1, -1, 0, 1],
    ];

    /// Motzkin wall row at shift 1; one period of 6 values.
    pub const MOTZKIN_ROW1_CYCLE: [i64; 6] = [1, 1, 0, -1, -1, 0];

    /// Motzkin wall row at shift 2; displayed prefix.
    pub const MOTZKIN_ROW2_PREFIX: [i64; 9] = [1, 2, 2, 3, 4, 4, 5, 6, 6];
}

/// Randomized property suites with fixed seeds. Each returns `Err` with a
/// description of the first failing instance.
pub mod suites {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use qdeform::cfrac::{c_expand, super_delta_expand};
    use qdeform::coeff::{coeff_int, Coefficient};
    use qdeform::qreal::{
        gap_check, hirzebruch_jung_expansion, hirzebruch_jung_matrix, q_metallic, q_rational,
        q_rational_series, regular_expansion, regular_matrix, MoebiusMatrix,
        QPolynomialFraction,
    };
    use qdeform::series::TruncatedSeries;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// A random series with integer coefficients in -4..=4, the requested
    /// valuation, and certified order `order`.
    fn random_series(rng: &mut ChaCha8Rng, valuation: i64, order: i64) -> TruncatedSeries {
        let len = (order - valuation).max(0) as usize;
        let coeffs: Vec<Coefficient> = (0..len).map(|_| coeff_int(rng.gen_range(-4..=4))).collect();
        TruncatedSeries::new(valuation, coeffs, order)
    }

    fn agree(a: &TruncatedSeries, b: &TruncatedSeries, context: &str) -> Result<(), String> {
        let upto = a.order().min(b.order());
        match a.first_mismatch(b, upto) {
            Ok(None) => Ok(()),
            Ok(Some(e)) => Err(format!("{context}: first mismatch at exponent {e}")),
            Err(e) => Err(format!("{context}: {e}")),
        }
    }

    /// Commutativity, associativity, distributivity, and the unit and
    /// inverse laws on random Laurent series triples.
    pub fn ring_axioms(triples: usize) -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1001);
        for trial in 0..triples {
            let (va, vb, oc) = (
                rng.gen_range(-2..=2),
                rng.gen_range(-2..=2),
                rng.gen_range(6..=12),
            );
            let a = random_series(&mut rng, va, va + 10);
            let b = random_series(&mut rng, vb, 9);
            let c = random_series(&mut rng, 0, oc);
            let ctx = |law: &str| format!("trial {trial}, {law}");
            agree(&a.add(&b), &b.add(&a), &ctx("a+b = b+a"))?;
            agree(&a.mul(&b), &b.mul(&a), &ctx("ab = ba"))?;
            agree(&a.add(&b).add(&c), &a.add(&b.add(&c)), &ctx("(a+b)+c = a+(b+c)"))?;
            agree(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)), &ctx("(ab)c = a(bc)"))?;
            agree(
                &a.mul(&b.add(&c)),
                &a.mul(&b).add(&a.mul(&c)),
                &ctx("a(b+c) = ab+ac"),
            )?;
            agree(
                &a.add(&a.neg()),
                &TruncatedSeries::zero_to_order(a.order()),
                &ctx("a-a = 0"),
            )?;
            agree(&a.mul(&TruncatedSeries::one(a.order())), &a, &ctx("1a = a"))?;
        }
        Ok(())
    }

    /// Expanding a random series into a C-fraction or a super-delta
    /// staircase and evaluating the result reproduces the series up to the
    /// certified order.
    pub fn expansion_round_trips(series_count: usize) -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1002);
        for trial in 0..series_count {
            let mut f = random_series(&mut rng, 1, 20);
            f = f.add(&TruncatedSeries::one(20));

            let x = c_expand(&f, 64).map_err(|e| format!("trial {trial}, c-fraction: {e}"))?;
            let value = x
                .cfrac
                .evaluate(x.certified_order)
                .map_err(|e| format!("trial {trial}, c-fraction evaluation: {e}"))?;
            agree(&value, &f.truncate(x.certified_order), &format!("trial {trial}, c-fraction"))?;

            for delta in 1..=3 {
                let x = super_delta_expand(&f, delta, 64)
                    .map_err(|e| format!("trial {trial}, delta {delta}: {e}"))?;
                let value = x
                    .cfrac
                    .evaluate(x.certified_order)
                    .map_err(|e| format!("trial {trial}, delta {delta} evaluation: {e}"))?;
                agree(
                    &value,
                    &f.truncate(x.certified_order),
                    &format!("trial {trial}, delta {delta} staircase"),
                )?;
            }
        }
        Ok(())
    }

    fn fractions_equal(a: &QPolynomialFraction, b: &QPolynomialFraction) -> bool {
        a.num().mul(b.den()) == b.num().mul(a.den())
    }

    /// The deformation intertwines the modular group action: applying a
    /// generator to the number and deforming agrees with applying the
    /// deformed generator matrix to the deformation.
    pub fn psl_equivariance(rationals: usize) -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1003);
        let mut checked = 0usize;
        while checked < rationals {
            let x = ratio(rng.gen_range(-24..=24), rng.gen_range(1..=12));
            if x.is_zero() {
                continue;
            }
            checked += 1;
            let fx = q_rational(&x).map_err(|e| format!("x = {x}: {e}"))?;

            let shift = rng.gen_range(-3..=3i64);
            let translated = q_rational(&(&x + BigRational::from(BigInt::from(shift))))
                .map_err(|e| format!("x = {x} + {shift}: {e}"))?;
            let action = MoebiusMatrix::translation_power(shift)
                .apply_to_fraction(&fx)
                .map_err(|e| format!("T^{shift} on [{x}]: {e}"))?;
            if !fractions_equal(&translated, &action) {
                return Err(format!("translation by {shift} is not equivariant at x = {x}"));
            }

            let rotated = q_rational(&(-x.recip())).map_err(|e| format!("-1/{x}: {e}"))?;
            let action = MoebiusMatrix::rotation()
                .apply_to_fraction(&fx)
                .map_err(|e| format!("S on [{x}]: {e}"))?;
            if !fractions_equal(&rotated, &action) {
                return Err(format!("rotation is not equivariant at x = {x}"));
            }
        }
        Ok(())
    }

    /// The Hirzebruch-Jung route (matrix product applied to 0) and the
    /// regular route (applied to infinity) deform every rational to the same
    /// function, which specializes to the rational at q = 1.
    pub fn dual_route_agreement(rationals: usize) -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1004);
        for _ in 0..rationals {
            let x = ratio(rng.gen_range(-40..=40), rng.gen_range(1..=20));
            let hj = hirzebruch_jung_matrix(&hirzebruch_jung_expansion(&x).terms)
                .apply_to_zero()
                .map_err(|e| format!("x = {x}, staircase route: {e}"))?;
            let regular = regular_matrix(&regular_expansion(&x).terms)
                .apply_to_infinity()
                .map_err(|e| format!("x = {x}, regular route: {e}"))?;
            if !fractions_equal(&hj, &regular) {
                return Err(format!("the two deformation routes disagree at x = {x}"));
            }
            let at_one = hj.eval_one().map_err(|e| format!("x = {x} at q = 1: {e}"))?;
            if at_one != x {
                return Err(format!("[{x}]_q at q = 1 is {at_one}"));
            }
            // The deformed series must match the fraction's expansion.
            let series = q_rational_series(&x, 12).map_err(|e| format!("x = {x}: {e}"))?;
            agree(
                &series,
                &hj.to_series(12).map_err(|e| format!("x = {x}: {e}"))?,
                &format!("series of [{x}]_q"),
            )?;
        }
        Ok(())
    }

    /// Between the q-integer head and exponent 2n, the n-th metallic
    /// deformation has a run of n zero coefficients, then coefficient 1.
    pub fn metallic_gaps(max_index: u64) -> Result<(), String> {
        for n in 1..=max_index {
            let order = 2 * n as i64 + 2;
            let f = q_metallic(n, order).map_err(|e| format!("metallic {n}: {e}"))?;
            if !gap_check(&f, n as i64, n as i64).map_err(|e| format!("metallic {n}: {e}"))? {
                return Err(format!("metallic {n} violates the gap pattern"));
            }
            for e in 0..=2 * n as i64 {
                let got = f.coeff(e).map_err(|e2| format!("metallic {n}: {e2}"))?;
                let want = if e < n as i64 || e == 2 * n as i64 {
                    Coefficient::one()
                } else {
                    Coefficient::zero()
                };
                if got != want {
                    return Err(format!(
                        "metallic {n}: coefficient at q^{e} is {got}, expected {want}"
                    ));
                }
            }
        }
        Ok(())
    }
}
