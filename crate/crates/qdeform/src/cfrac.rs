//! Generalized continued fractions over `q`-series.
//!
//! The shapes handled here share one storage form: a head monomial over a
//! chain of layers, each layer a denominator polynomial (constant term 1)
//! plus a signed numerator monomial that opens the next level:
//!
//! ```text
//! value = head / (D_1 + N_1 / (D_2 + N_2 / (...)))
//! ```
//!
//! Classical families are special cases: C-fractions have every `D_i = 1`
//! and every `N_i = b_i q^(p_i)` with `p_i >= 1`; J-type fractions have
//! constant-depth denominators; the delta-staircase normal form
//! (super-delta-fraction) constrains `deg D_i` and the numerator exponents
//! through a ladder of offsets `k_i >= 0` with
//! `x_(i+1) = k_i + k_(i+1) + delta`.
//!
//! A fraction is either finite (a rational function, with an explicit
//! innermost `terminal` denominator) or eventually periodic (layers repeat
//! from a given index on). Expansion routines return the fraction together
//! with the order to which the input series certifies it; they never guess
//! unknown layers.

use num_traits::{One, Zero};

use crate::coeff::Coefficient;
use crate::poly::QPolynomial;
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// One level of a generalized continued fraction: the denominator installed
/// at this depth and the signed numerator monomial `num_coeff * q^(num_exp)`
/// that sits over the next depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFLayer {
    pub den: QPolynomial,
    pub num_coeff: Coefficient,
    pub num_exp: u32,
}

impl CFLayer {
    pub fn new(den: QPolynomial, num_coeff: Coefficient, num_exp: u32) -> Self {
        assert!(
            den.constant_term() == Coefficient::one(),
            "layer denominators must have constant term 1"
        );
        assert!(!num_coeff.is_zero(), "layer numerators must be nonzero");
        CFLayer {
            den,
            num_coeff,
            num_exp,
        }
    }

    /// C-fraction layer: denominator 1, numerator `c * q^e`.
    pub fn unit(num_coeff: Coefficient, num_exp: u32) -> Self {
        CFLayer::new(QPolynomial::one(), num_coeff, num_exp)
    }
}

/// A generalized continued fraction, finite or eventually periodic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedCFrac {
    head_coeff: Coefficient,
    head_exp: i64,
    layers: Vec<CFLayer>,
    /// Innermost denominator of a finite fraction (unused when periodic).
    terminal: QPolynomial,
    /// `Some(p)`: layers from index `p` on repeat forever with period
    /// `layers.len() - p`. `None`: the fraction ends at `terminal`.
    periodic_from: Option<usize>,
}

impl GeneralizedCFrac {
    /// A finite fraction `head / (D_1 + N_1 / (... + N_m / terminal))`.
    pub fn finite(
        head_coeff: Coefficient,
        head_exp: i64,
        layers: Vec<CFLayer>,
        terminal: QPolynomial,
    ) -> Self {
        assert!(!head_coeff.is_zero());
        assert!(
            terminal.constant_term() == Coefficient::one(),
            "terminal denominators must have constant term 1"
        );
        GeneralizedCFrac {
            head_coeff,
            head_exp,
            layers,
            terminal,
            periodic_from: None,
        }
    }

    /// An eventually periodic fraction whose layers repeat from index
    /// `periodic_from` on.
    pub fn periodic(
        head_coeff: Coefficient,
        head_exp: i64,
        layers: Vec<CFLayer>,
        periodic_from: usize,
    ) -> Self {
        assert!(!head_coeff.is_zero());
        assert!(
            periodic_from < layers.len(),
            "periodic part must contain at least one layer"
        );
        GeneralizedCFrac {
            head_coeff,
            head_exp,
            layers,
            terminal: QPolynomial::one(),
            periodic_from: None,
        }
        .with_period(periodic_from)
    }

    fn with_period(mut self, periodic_from: usize) -> Self {
        self.periodic_from = Some(periodic_from);
        self
    }

    pub fn head(&self) -> (&Coefficient, i64) {
        (&self.head_coeff, self.head_exp)
    }

    /// The stored layers (one period plus preperiod when periodic).
    pub fn layers(&self) -> &[CFLayer] {
        &self.layers
    }

    pub fn terminal(&self) -> &QPolynomial {
        &self.terminal
    }

    /// `Some(start_index)` of the repeating block, `None` for finite.
    pub fn periodic_from(&self) -> Option<usize> {
        self.periodic_from
    }

    pub fn is_finite(&self) -> bool {
        self.periodic_from.is_none()
    }

    /// Layer at unrolled depth `depth` (cycling through the periodic block).
    pub fn layer(&self, depth: usize) -> &CFLayer {
        if depth < self.layers.len() {
            return &self.layers[depth];
        }
        match self.periodic_from {
            Some(p) => {
                let period = self.layers.len() - p;
                &self.layers[p + (depth - p) % period]
            }
            None => panic!("finite fraction has no layer at depth {}", depth),
        }
    }

    /// Number of layers that evaluation actually folds for a target order.
    fn depth_for_order(&self, order: i64) -> Result<usize> {
        match self.periodic_from {
            None => {
                for (i, l) in self.layers.iter().enumerate() {
                    if l.num_exp == 0 {
                        return Err(Error::NonContractingLayer { index: i });
                    }
                }
                Ok(self.layers.len())
            }
            Some(_) => {
                let mut acc = self.head_exp;
                let mut d = 0usize;
                while acc < order {
                    let l = self.layer(d);
                    if l.num_exp == 0 {
                        return Err(Error::NonContractingLayer { index: d });
                    }
                    acc += l.num_exp as i64;
                    d += 1;
                }
                Ok(d)
            }
        }
    }

    /// Evaluates the fraction as a series certified below `order`.
    ///
    /// Periodic fractions are folded deep enough that the dropped tail sits
    /// entirely at or beyond `order` (each layer's numerator exponent adds
    /// to the valuation of the cut's contribution); finite fractions are
    /// folded exactly.
    pub fn evaluate(&self, order: i64) -> Result<TruncatedSeries> {
        let depth = self.depth_for_order(order)?;
        let work = order - self.head_exp.min(0);
        let mut chain = if self.is_finite() {
            TruncatedSeries::from_poly(&self.terminal, work)
        } else {
            TruncatedSeries::from_poly(&self.layer(depth).den, work)
        };
        for j in (0..depth).rev() {
            let l = self.layer(j);
            let mono = TruncatedSeries::monomial(
                l.num_coeff.clone(),
                l.num_exp as i64,
                work + 2 * l.num_exp as i64 + 1,
            );
            let term = mono.div(&chain)?;
            chain = TruncatedSeries::from_poly(&l.den, work).add(&term);
        }
        let head = TruncatedSeries::monomial(
            self.head_coeff.clone(),
            self.head_exp,
            work + 2 * self.head_exp.abs() + 1,
        );
        let value = head.div(&chain)?;
        debug_assert!(value.order() >= order);
        Ok(value.truncate(order))
    }

    /// Renders the first few levels as nested text, eliding the rest.
    pub fn render(&self, max_depth: usize) -> String {
        let mut out = String::new();
        let head = QPolynomial::monomial(self.head_coeff.clone(), self.head_exp.max(0) as usize);
        if self.head_exp >= 0 {
            out.push_str(&format!("{}", head));
        } else {
            out.push_str(&format!("{}q^{}", self.head_coeff, self.head_exp));
        }
        let total = match self.periodic_from {
            None => self.layers.len(),
            Some(_) => max_depth,
        };
        let shown = total.min(max_depth);
        for j in 0..shown {
            let l = self.layer(j);
            let num = QPolynomial::monomial(l.num_coeff.clone(), l.num_exp as usize);
            out.push_str(&format!(" / ({} + {}", l.den, num));
        }
        if shown < total || self.periodic_from.is_some() {
            out.push_str(" / (...");
            out.push(')');
        } else {
            out.push_str(&format!(" / ({})", self.terminal));
        }
        for _ in 0..shown {
            out.push(')');
        }
        out
    }
}

/// Result of a C-fraction expansion: the fraction, the order to which the
/// input certifies it, and whether the expansion closed off (a finite
/// fraction, exactly the rational-function case) within the layer budget.
#[derive(Debug, Clone)]
pub struct CExpansion {
    pub cfrac: GeneralizedCFrac,
    pub certified_order: i64,
    pub complete: bool,
}

/// Expands a series into its C-fraction: head monomial over unit
/// denominators, `f = b_0 q^(e_0) / (1 + b_1 q^(p_1) / (1 + ...))`.
///
/// The expansion is the greedy one and is unique. Layers stop when a
/// remainder is exactly zero across its certified window (a finite fraction,
/// recorded as complete), at `max_layers`, or when the window closes before
/// showing any informative exponent. Remainders have valuation at least 1 by
/// construction, so a window of order 1 certifies nothing: in that case the
/// expansion stops with `complete` false and `certified_order` reporting how
/// far the layers read so far reproduce the input.
pub fn c_expand(f: &TruncatedSeries, max_layers: usize) -> Result<CExpansion> {
    let (b0, e0) = f.leading().ok_or(Error::InvertZeroSeries)?;
    let head = TruncatedSeries::monomial(b0.clone(), e0, f.order() + 2 * e0.abs() + 1);
    let mut t = head.div(f)?.sub(&TruncatedSeries::one(f.order() - e0));
    let mut layers = Vec::new();
    let mut exp_sum = 0i64;
    loop {
        let disposition = if t.is_zero_to_order() {
            Some(t.order() >= 2)
        } else if layers.len() == max_layers {
            Some(false)
        } else {
            None
        };
        if let Some(complete) = disposition {
            let certified = if complete {
                f.order()
            } else {
                f.order().min(e0 + exp_sum + 1)
            };
            let cfrac = GeneralizedCFrac::finite(b0, e0, layers, QPolynomial::one());
            return Ok(CExpansion {
                cfrac,
                certified_order: certified,
                complete,
            });
        }
        let (b, p) = t.leading().expect("nonzero to order implies a leading term");
        debug_assert!(p >= 1, "remainders of a unit-constant division have valuation >= 1");
        layers.push(CFLayer::unit(b.clone(), p as u32));
        exp_sum += p;
        let mono = TruncatedSeries::monomial(b, p, t.order() + 2 * p + 1);
        t = mono.div(&t)?.sub(&TruncatedSeries::one(t.order() - p));
    }
}

/// The ladder data of a delta-staircase normal form: the offsets `k_i >= 0`
/// and leading units `v_i != 0`, level by level (`k[0]`, `v[0]` describe the
/// head). `terminated` records that the fraction is finite with exactly
/// `k.len()` levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProfile {
    pub delta: u32,
    pub k: Vec<u32>,
    pub v: Vec<Coefficient>,
    pub terminated: bool,
}

/// Result of a delta-staircase expansion.
#[derive(Debug, Clone)]
pub struct SuperDeltaExpansion {
    pub cfrac: GeneralizedCFrac,
    pub profile: DeltaProfile,
    pub certified_order: i64,
    pub complete: bool,
}

/// Expands a power series into its delta-staircase normal form for
/// `delta >= 1`:
///
/// ```text
/// f = v_0 q^(k_0) / (1 + q U_1 - v_1 q^(k_0 + k_1 + delta) / (1 + q U_2 - ...))
/// ```
///
/// with every `v_i` nonzero, every `k_i >= 0`, and
/// `deg U_(i+1) <= k_i + delta - 2`. The form is unique: each `U` is read
/// off a unit-constant quotient and each `(v, k)` off the first surviving
/// coefficient. Stored layers fold the sign into the numerator
/// (`num = -v_(i+1) q^(x_(i+1))`).
///
/// Layers stop when a level's remainder is exactly zero across its certified
/// window (a finite fraction with terminal denominator `D`, recorded as
/// complete), at `max_layers`, or when the window closes before showing any
/// exponent past the forced-zero range below `k_i + delta`. In the last case
/// the expansion stops with `complete` false and `certified_order` reporting
/// how far the layers read so far reproduce the input.
pub fn super_delta_expand(
    f: &TruncatedSeries,
    delta: u32,
    max_layers: usize,
) -> Result<SuperDeltaExpansion> {
    assert!(delta >= 1, "staircase depth must be at least 1");
    let (v0, k0) = f.leading().ok_or(Error::InvertZeroSeries)?;
    assert!(k0 >= 0, "staircase normal forms require a power series");
    let head = TruncatedSeries::monomial(v0.clone(), k0, f.order() + 2 * k0 + 1);
    // w has constant term 1 and carries the not-yet-expanded information.
    let mut w = head.div(f)?;
    let mut k_seq = vec![k0 as u32];
    let mut v_seq = vec![v0.clone()];
    let mut layers: Vec<CFLayer> = Vec::new();
    let mut exp_sum = 0i64;
    loop {
        let k_i = *k_seq.last().unwrap() as i64;
        let need = k_i + delta as i64;
        // U_(i+1) = (coefficients 1 .. k_i + delta - 1 of w), D = 1 + q U.
        // Exponents of h below `need` vanish by construction, so finiteness
        // and the next leading term both require the window to reach past
        // `need`; a shorter window ends the expansion without a verdict.
        let step = if w.order() >= need {
            let d_poly = w.poly_prefix(need)?;
            let h = TruncatedSeries::from_poly(&d_poly, w.order()).sub(&w);
            if h.is_zero_to_order() {
                if h.order() > need {
                    let cfrac = GeneralizedCFrac::finite(v0, k0, layers, d_poly);
                    let profile = DeltaProfile {
                        delta,
                        k: k_seq,
                        v: v_seq,
                        terminated: true,
                    };
                    return Ok(SuperDeltaExpansion {
                        cfrac,
                        profile,
                        certified_order: f.order(),
                        complete: true,
                    });
                }
                None
            } else {
                Some((d_poly, h))
            }
        } else {
            None
        };
        let (d_poly, h) = match step {
            Some(pair) if layers.len() < max_layers => pair,
            _ => {
                let cfrac = GeneralizedCFrac::finite(v0, k0, layers, QPolynomial::one());
                let profile = DeltaProfile {
                    delta,
                    k: k_seq,
                    v: v_seq,
                    terminated: false,
                };
                return Ok(SuperDeltaExpansion {
                    cfrac,
                    profile,
                    certified_order: f.order().min(k0 + exp_sum + 1),
                    complete: false,
                });
            }
        };
        let (v_next, x) = h.leading().expect("nonzero to order implies a leading term");
        debug_assert!(x >= need, "the staircase gap bound holds by construction");
        let k_next = x - k_i - delta as i64;
        layers.push(CFLayer::new(d_poly, -v_next.clone(), x as u32));
        k_seq.push(k_next as u32);
        v_seq.push(v_next.clone());
        exp_sum += x;
        let mono = TruncatedSeries::monomial(v_next, x, h.order() + 2 * x + 1);
        w = mono.div(&h)?;
    }
}

/// Reads the ladder data off an existing fraction, verifying it is in
/// delta-staircase normal form: every unrolled level must have `k_i >= 0`,
/// a unit-constant denominator of degree at most `k_(i-1) + delta - 1`, and
/// a nonzero numerator. Unrolls `levels` levels (or to the end of a finite
/// fraction).
pub fn check_super_delta_form(
    cfrac: &GeneralizedCFrac,
    delta: u32,
    levels: usize,
) -> Result<DeltaProfile> {
    assert!(delta >= 1);
    let (v0, k0) = cfrac.head();
    if k0 < 0 {
        return Err(Error::InvalidContinuedFraction {
            reason: "staircase normal forms require a nonnegative head exponent".into(),
        });
    }
    let mut k_seq = vec![k0 as u32];
    let mut v_seq = vec![v0.clone()];
    let bad = |j: usize, reason: String| Error::InvalidContinuedFraction {
        reason: format!("layer {}: {}", j, reason),
    };
    let unrolled = match cfrac.periodic_from() {
        None => cfrac.layers().len(),
        Some(_) => levels.saturating_sub(1),
    };
    for j in 0..unrolled {
        let l = cfrac.layer(j);
        let k_prev = *k_seq.last().unwrap() as i64;
        let bound = k_prev + delta as i64 - 1;
        if l.den.degree().map(|d| d as i64).unwrap_or(-1) > bound {
            return Err(bad(j, format!("denominator degree exceeds {}", bound)));
        }
        let x = l.num_exp as i64;
        let k_next = x - k_prev - delta as i64;
        if k_next < 0 {
            return Err(bad(
                j,
                format!("numerator exponent {} is below the staircase minimum", x),
            ));
        }
        k_seq.push(k_next as u32);
        v_seq.push(-l.num_coeff.clone());
        if k_seq.len() >= levels && cfrac.periodic_from().is_some() {
            break;
        }
    }
    if cfrac.is_finite() {
        let k_last = *k_seq.last().unwrap() as i64;
        let bound = k_last + delta as i64 - 1;
        if cfrac.terminal().degree().map(|d| d as i64).unwrap_or(-1) > bound {
            return Err(Error::InvalidContinuedFraction {
                reason: format!("terminal denominator degree exceeds {}", bound),
            });
        }
    }
    Ok(DeltaProfile {
        delta,
        k: k_seq,
        v: v_seq,
        terminated: cfrac.is_finite(),
    })
}

/// The depth-3 staircase fraction of the tail of the n-th metallic
/// deformation: head `q^(n-1)`, every denominator the bracket polynomial,
/// every deeper numerator `q^(2n+1)`, repeating with period 1.
///
/// Its value sigma satisfies
/// `q^(n+2) sigma^2 + <n>_q sigma = q^(n-1)` and recovers the metallic
/// deformation through `[y_n]_q = [n]_q + q^(n+1) sigma`.
pub fn metallic_staircase3(n: u64) -> GeneralizedCFrac {
    assert!(n >= 1);
    let bracket = crate::qreal::metallic_bracket(n);
    GeneralizedCFrac::periodic(
        Coefficient::one(),
        n as i64 - 1,
        vec![CFLayer::new(bracket, Coefficient::one(), 2 * n as u32 + 1)],
        0,
    )
}

/// Outcome of checking a fraction against a series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub matched: bool,
    pub first_mismatch: Option<i64>,
    pub checked_order: i64,
}

/// Evaluates `cfrac` and compares it with `f` below `order`; both sides
/// must be certified that far.
pub fn verify_identity(
    cfrac: &GeneralizedCFrac,
    f: &TruncatedSeries,
    order: i64,
) -> Result<IdentityReport> {
    let value = cfrac.evaluate(order)?;
    let first_mismatch = value.first_mismatch(f, order)?;
    Ok(IdentityReport {
        matched: first_mismatch.is_none(),
        first_mismatch,
        checked_order: order,
    })
}

pub mod catalog;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{coeff_int, coeff_ratio};
    use crate::qreal;
    use crate::series::solve_quadratic_functional;

    fn catalan(order: i64) -> TruncatedSeries {
        solve_quadratic_functional(
            &QPolynomial::from_ints(&[0, 1]),
            &QPolynomial::from_ints(&[-1]),
            &QPolynomial::from_ints(&[-1]),
            order,
        )
        .unwrap()
    }

    #[test]
    fn catalan_c_fraction_has_unit_negative_layers() {
        let f = catalan(24);
        let exp = c_expand(&f, 40).unwrap();
        assert!(!exp.complete);
        assert_eq!(exp.certified_order, 24);
        let (h, e) = exp.cfrac.head();
        assert_eq!((h.clone(), e), (coeff_int(1), 0));
        // Every layer of the Catalan fraction is -q over 1.
        for l in exp.cfrac.layers() {
            assert_eq!(l.den, QPolynomial::one());
            assert_eq!(l.num_coeff, coeff_int(-1));
            assert_eq!(l.num_exp, 1);
        }
        assert_eq!(exp.cfrac.layers().len(), 23);
    }

    #[test]
    fn c_expansion_round_trips_through_evaluation() {
        let f = catalan(18);
        let exp = c_expand(&f, 60).unwrap();
        let back = GeneralizedCFrac::periodic(
            coeff_int(1),
            0,
            vec![CFLayer::unit(coeff_int(-1), 1)],
            0,
        )
        .evaluate(18)
        .unwrap();
        assert!(back.equal_to_order(&f, 18).unwrap());
        // The truncated expansion itself matches to its certified order.
        let val = exp.cfrac.evaluate(exp.certified_order).unwrap();
        assert!(val.equal_to_order(&f, exp.certified_order).unwrap());
    }

    #[test]
    fn c_expansion_of_a_rational_function_terminates() {
        // [3]_q = 1 + q + q^2 has a finite C-fraction.
        let f = TruncatedSeries::from_poly(&QPolynomial::q_int(3), 30);
        let exp = c_expand(&f, 50).unwrap();
        assert!(exp.complete);
        assert_eq!(exp.certified_order, 30);
        let val = exp.cfrac.evaluate(30).unwrap();
        assert!(val.equal_to_order(&f, 30).unwrap());
    }

    #[test]
    fn expansion_stops_when_the_certified_window_closes() {
        // Order 3 supports two layers of the Catalan expansion; the third
        // remainder's window is dark, so the expansion stops short of the
        // layer budget without pretending the fraction ended.
        let f = catalan(3);
        let exp = c_expand(&f, 50).unwrap();
        assert!(!exp.complete);
        assert_eq!(exp.cfrac.layers().len(), 2);
        assert_eq!(exp.certified_order, 3);
        let val = exp.cfrac.evaluate(exp.certified_order).unwrap();
        assert!(val.equal_to_order(&f, exp.certified_order).unwrap());
        // The zero series has no leading term to expand.
        assert!(matches!(
            c_expand(&TruncatedSeries::zero_to_order(5), 5),
            Err(Error::InvertZeroSeries)
        ));
    }

    #[test]
    fn evaluation_rejects_non_contracting_layers() {
        let cf = GeneralizedCFrac::periodic(
            coeff_int(1),
            0,
            vec![CFLayer::new(QPolynomial::one(), coeff_int(1), 0)],
            0,
        );
        assert!(matches!(
            cf.evaluate(5),
            Err(Error::NonContractingLayer { index: 0 })
        ));
    }

    #[test]
    fn staircase_delta_one_of_catalan_matches_c_fraction() {
        // When every staircase offset is zero (which happens exactly when
        // every C-fraction exponent is 1, as for Catalan), the delta = 1
        // staircase is the C-fraction: all denominators collapse to 1.
        let f = catalan(20);
        let st = super_delta_expand(&f, 1, 12).unwrap();
        let c = c_expand(&f, 12).unwrap();
        assert_eq!(st.cfrac.layers().len(), c.cfrac.layers().len());
        for (a, b) in st.cfrac.layers().iter().zip(c.cfrac.layers()) {
            assert_eq!(a, b);
        }
        assert!(st.profile.k.iter().all(|&k| k == 0));
        assert_eq!(st.certified_order, c.certified_order);
    }

    #[test]
    fn staircase_round_trip_certifies_input_order() {
        let g = qreal::q_metallic(2, 25).unwrap();
        for delta in 1..=3u32 {
            let st = super_delta_expand(&g, delta, 60).unwrap();
            // The layers read before any stop must reproduce a useful
            // prefix, and the certification must be honest.
            assert!(st.certified_order >= 12, "delta = {}", delta);
            let val = st.cfrac.evaluate(st.certified_order).unwrap();
            assert!(
                val.equal_to_order(&g, st.certified_order).unwrap(),
                "delta = {}",
                delta
            );
        }
    }

    #[test]
    fn staircase_of_finite_fraction_terminates_with_terminal_denominator() {
        // [2/5]_q is a rational function; its delta = 2 staircase is finite.
        let f = qreal::q_rational_series(&num_rational::BigRational::new(2.into(), 5.into()), 30)
            .unwrap();
        let st = super_delta_expand(&f, 2, 50).unwrap();
        assert!(st.complete);
        assert!(st.profile.terminated);
        let val = st.cfrac.evaluate(30).unwrap();
        assert!(val.equal_to_order(&f, 30).unwrap());
    }

    #[test]
    fn metallic_staircase_evaluates_to_the_metallic_tail() {
        for n in 1..=4u64 {
            let order = 22;
            let y = qreal::q_metallic(n, order + n as i64 + 1).unwrap();
            // sigma = ([y]_q - [n]_q) / q^(n+1).
            let sigma = y
                .sub(&TruncatedSeries::from_poly(
                    &QPolynomial::q_int(n),
                    order + n as i64 + 1,
                ))
                .shift_div(n as i64 + 1);
            let cf = metallic_staircase3(n);
            let report = verify_identity(&cf, &sigma, order).unwrap();
            assert!(report.matched, "staircase mismatch for metallic {}", n);
            // And the staircase is a valid delta = 3 normal form with
            // constant offsets n - 1.
            let profile = check_super_delta_form(&cf, 3, 6).unwrap();
            assert!(profile.k.iter().all(|&k| k == n as u32 - 1));
        }
    }

    #[test]
    fn staircase_normal_form_checker_rejects_bad_ladders() {
        // Numerator exponent too small for delta = 3 at head offset 0.
        let cf = GeneralizedCFrac::periodic(
            coeff_int(1),
            0,
            vec![CFLayer::unit(coeff_int(1), 2)],
            0,
        );
        assert!(check_super_delta_form(&cf, 3, 4).is_err());
        // Denominator degree above the staircase bound for delta = 1.
        let cf = GeneralizedCFrac::periodic(
            coeff_int(1),
            0,
            vec![CFLayer::new(
                QPolynomial::from_ints(&[1, 0, 0, 5]),
                coeff_int(1),
                4,
            )],
            0,
        );
        assert!(check_super_delta_form(&cf, 1, 4).is_err());
    }

    #[test]
    fn rational_coefficients_appear_in_expansions() {
        // (1 + q)^2: the first remainder is -2q + 3q^2 - ..., and dividing
        // through by -2q leaves the second layer with coefficient 3/2.
        let f = TruncatedSeries::from_poly(&QPolynomial::from_ints(&[1, 2, 1]), 16);
        let exp = c_expand(&f, 30).unwrap();
        let layers = exp.cfrac.layers();
        assert_eq!(layers[0].num_coeff, coeff_int(-2));
        assert_eq!(layers[1].num_coeff, coeff_ratio(3, 2));
        assert!(layers.iter().any(|l| !l.num_coeff.is_integer()));
        let val = exp.cfrac.evaluate(exp.certified_order).unwrap();
        assert!(val.equal_to_order(&f, exp.certified_order).unwrap());
    }

    #[test]
    fn expansion_of_a_quadratic_polynomial_terminates() {
        // 1 + 2q + 2q^2 = 1/(1 - 2q/(1 + q/(1 - q/(1 + 2q)))): four layers,
        // then the remainder is exactly zero.
        let f = TruncatedSeries::from_poly(&QPolynomial::from_ints(&[1, 2, 2]), 16);
        let exp = c_expand(&f, 30).unwrap();
        assert!(exp.complete);
        let nums: Vec<_> = exp.cfrac.layers().iter().map(|l| l.num_coeff.clone()).collect();
        assert_eq!(
            nums,
            vec![coeff_int(-2), coeff_int(1), coeff_int(-1), coeff_int(2)]
        );
        assert!(exp.cfrac.layers().iter().all(|l| l.num_exp == 1));
        let val = exp.cfrac.evaluate(16).unwrap();
        assert!(val.equal_to_order(&f, 16).unwrap());
    }
}
