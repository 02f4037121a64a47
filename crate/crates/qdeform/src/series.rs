//! Truncated formal power (Laurent) series in `q` with explicit order
//! tracking.
//!
//! A [`TruncatedSeries`] knows every coefficient at exponents strictly below
//! its `order` and nothing beyond. Every operation propagates the order
//! honestly: results never claim coefficients the inputs cannot certify, and
//! comparisons that would need unknown coefficients fail with
//! [`Error::InsufficientOrder`] instead of guessing.
//!
//! Representation: `coeffs[i]` is the coefficient of `q^(valuation + i)`,
//! the first and last stored coefficients are nonzero, and
//! `valuation + coeffs.len() <= order`. A series that is zero everywhere
//! below its order stores no coefficients and sets `valuation == order`
//! (the "zero to order" sentinel).

use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{self, Coefficient};
use crate::poly::QPolynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    valuation: i64,
    coeffs: Vec<Coefficient>,
    order: i64,
}

impl TruncatedSeries {
    /// Builds a series from coefficients starting at exponent `valuation`,
    /// certified below `order`. Leading/trailing zeros are trimmed and
    /// coefficients at exponents `>= order` are discarded.
    pub fn new(valuation: i64, coeffs: Vec<Coefficient>, order: i64) -> Self {
        let mut s = TruncatedSeries {
            valuation,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        // Coefficients at or beyond the order are unknown territory: drop
        // them (a valuation past the order collapses to the zero sentinel).
        let keep = (self.order - self.valuation).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.first().is_some_and(|c| c.is_zero()) {
            self.coeffs.remove(0);
            self.valuation += 1;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.valuation = self.order;
        }
    }

    /// The series known to be zero at every exponent below `order`.
    pub fn zero_to_order(order: i64) -> Self {
        TruncatedSeries {
            valuation: order,
            coeffs: Vec::new(),
            order,
        }
    }

    /// The constant series 1, certified below `order`.
    pub fn one(order: i64) -> Self {
        TruncatedSeries::new(0, vec![Coefficient::one()], order)
    }

    /// The monomial `c * q^e`, certified below `order`.
    pub fn monomial(c: Coefficient, e: i64, order: i64) -> Self {
        TruncatedSeries::new(e, vec![c], order)
    }

    /// Embeds a polynomial, keeping only the part below `order`.
    pub fn from_poly(p: &QPolynomial, order: i64) -> Self {
        TruncatedSeries::new(0, p.coeffs().to_vec(), order.max(0))
    }

    /// Exclusive certification bound: coefficients at exponents `< order`
    /// are known.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// True when no nonzero coefficient exists below the order.
    pub fn is_zero_to_order(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the first nonzero coefficient, or `None` when zero to
    /// order.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero_to_order() {
            None
        } else {
            Some(self.valuation)
        }
    }

    /// Valuation for order bookkeeping: the true valuation when one is
    /// visible, otherwise the order (any nonzero coefficient must sit at or
    /// beyond it).
    fn val_bound(&self) -> i64 {
        self.valuation
    }

    /// Leading coefficient and its exponent, or `None` when zero to order.
    pub fn leading(&self) -> Option<(Coefficient, i64)> {
        self.coeffs.first().map(|c| (c.clone(), self.valuation))
    }

    /// Coefficient of `q^e`; fails when `e` is at or beyond the order.
    pub fn coeff(&self, e: i64) -> Result<Coefficient> {
        if e >= self.order {
            return Err(Error::InsufficientOrder {
                needed: e + 1,
                have: self.order,
            });
        }
        Ok(self.coeff_known(e))
    }

    fn coeff_known(&self, e: i64) -> Coefficient {
        if e < self.valuation {
            return Coefficient::zero();
        }
        let i = (e - self.valuation) as usize;
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    /// Coefficients at exponents `from..upto` as a dense vector; fails when
    /// `upto` exceeds the order.
    pub fn coeff_range(&self, from: i64, upto: i64) -> Result<Vec<Coefficient>> {
        if upto > self.order {
            return Err(Error::InsufficientOrder {
                needed: upto,
                have: self.order,
            });
        }
        Ok((from..upto).map(|e| self.coeff_known(e)).collect())
    }

    /// True when every known coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(coeff::is_integral)
    }

    /// Reduces the certification bound to `new_order` (which must not exceed
    /// the current order: a truncation cannot create knowledge).
    pub fn truncate(&self, new_order: i64) -> Self {
        assert!(
            new_order <= self.order,
            "cannot raise order from {} to {} by truncation",
            self.order,
            new_order
        );
        TruncatedSeries::new(
            self.valuation.min(new_order),
            if self.is_zero_to_order() {
                Vec::new()
            } else {
                self.coeffs.clone()
            },
            new_order,
        )
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }

    /// Sum; the result is certified below the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let lo = self.val_bound().min(other.val_bound()).min(order);
        let coeffs = (lo..order)
            .map(|e| self.coeff_known(e) + other.coeff_known(e))
            .collect();
        TruncatedSeries::new(lo, coeffs, order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product. The order follows the sharp rule
    /// `min(a.order + b.valuation, b.order + a.valuation)`: the unknown tail
    /// of one factor enters the product shifted up by the other factor's
    /// valuation.
    pub fn mul(&self, other: &Self) -> Self {
        let order = (self.order + other.val_bound()).min(other.order + self.val_bound());
        if self.is_zero_to_order() || other.is_zero_to_order() {
            return TruncatedSeries::zero_to_order(order);
        }
        let lo = self.valuation + other.valuation;
        let n = (order - lo).max(0) as usize;
        let mut out = vec![Coefficient::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        TruncatedSeries::new(lo, out, order)
    }

    /// Product with an exact polynomial (which is known to all orders, so
    /// only this series' uncertainty propagates).
    pub fn mul_poly(&self, p: &QPolynomial) -> Self {
        if p.is_zero() {
            return TruncatedSeries::zero_to_order(self.order);
        }
        let p_val = p
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a first nonzero coefficient")
            as i64;
        let order = self.order + p_val;
        if self.is_zero_to_order() {
            return TruncatedSeries::zero_to_order(order);
        }
        let lo = self.valuation + p_val;
        let n = (order - lo).max(0) as usize;
        let mut out = vec![Coefficient::zero(); n];
        for (j, b) in p.coeffs().iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                let t = i as i64 + j as i64 + self.valuation - lo;
                if t >= n as i64 {
                    break;
                }
                out[t as usize] += a * b;
            }
        }
        TruncatedSeries::new(lo, out, order)
    }

    /// Scales by a constant.
    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return TruncatedSeries::zero_to_order(self.order);
        }
        TruncatedSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Exact division by `q^k` (negative `k` multiplies). Shifts valuation
    /// and order alike; no coefficient changes.
    pub fn shift_div(&self, k: i64) -> Self {
        TruncatedSeries {
            valuation: self.valuation - k,
            coeffs: self.coeffs.clone(),
            order: self.order - k,
        }
    }

    /// The series of coefficients at exponents `>= l`, divided by `q^l`
    /// (coefficient sequence shifted left by `l`).
    pub fn shifted_tail(&self, l: i64) -> Self {
        let order = self.order - l;
        if self.is_zero_to_order() || self.valuation + (self.coeffs.len() as i64) <= l {
            return TruncatedSeries::zero_to_order(order);
        }
        let lo = self.valuation.max(l);
        let coeffs = ((lo - self.valuation) as usize..self.coeffs.len())
            .map(|i| self.coeffs[i].clone())
            .collect();
        TruncatedSeries::new(lo - l, coeffs, order)
    }

    /// The polynomial formed by the coefficients at exponents `< upto`
    /// (requires `upto <= order` and no negative exponents in range).
    pub fn poly_prefix(&self, upto: i64) -> Result<QPolynomial> {
        if upto > self.order {
            return Err(Error::InsufficientOrder {
                needed: upto,
                have: self.order,
            });
        }
        if let Some(v) = self.valuation() {
            assert!(
                v >= 0 || upto <= v,
                "cannot take a polynomial prefix of a Laurent series with negative valuation"
            );
        }
        let coeffs = (0..upto.max(0)).map(|e| self.coeff_known(e)).collect();
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// Multiplicative inverse. The leading term `a_v q^v` must be visible;
    /// the inverse has valuation `-v` and order `order - 2v`.
    pub fn invert(&self) -> Result<Self> {
        let (lead, v) = self.leading().ok_or(Error::InvertZeroSeries)?;
        // Work with the unit part w = self / (lead * q^v), compute 1/w by
        // the standard recurrence, then shift back.
        let unit_order = (self.order - v).max(1);
        let n = unit_order as usize;
        let mut w = vec![Coefficient::zero(); n];
        for (i, item) in w.iter_mut().enumerate().take(n.min(self.coeffs.len())) {
            *item = &self.coeffs[i] / &lead;
        }
        let mut r = vec![Coefficient::zero(); n];
        r[0] = Coefficient::one();
        for m in 1..n {
            let mut acc = Coefficient::zero();
            for k in 1..=m {
                if !w[k].is_zero() && !r[m - k].is_zero() {
                    acc += &w[k] * &r[m - k];
                }
            }
            r[m] = -acc;
        }
        let inv_lead = Coefficient::one() / lead;
        let coeffs = r.into_iter().map(|c| c * &inv_lead).collect();
        Ok(TruncatedSeries::new(-v, coeffs, self.order - 2 * v))
    }

    /// `self / other`, with the order rules of [`Self::mul`] and
    /// [`Self::invert`] combined.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Compares coefficients at every exponent below `upto`; both operands
    /// must be certified that far.
    pub fn equal_to_order(&self, other: &Self, upto: i64) -> Result<bool> {
        Ok(self.first_mismatch(other, upto)?.is_none())
    }

    /// First exponent below `upto` where the two series differ.
    pub fn first_mismatch(&self, other: &Self, upto: i64) -> Result<Option<i64>> {
        for s in [self, other] {
            if s.order < upto {
                return Err(Error::InsufficientOrder {
                    needed: upto,
                    have: s.order,
                });
            }
        }
        let lo = self.val_bound().min(other.val_bound()).min(upto);
        for e in lo..upto {
            if self.coeff_known(e) != other.coeff_known(e) {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

/// Solves `A f^2 + B f = C` for the unique formal power series `f`, where
/// `A`, `B`, `C` are polynomials, `B` has nonzero constant term, and `A` has
/// zero constant term.
///
/// Those preconditions force uniqueness: if two power series both solved the
/// equation, their difference would be annihilated by `A (f1 + f2) + B`,
/// whose constant term `B(0)` is nonzero. Coefficients come out of the
/// triangular recurrence
/// `B_0 f_m = C_m - sum_{i>=1} A_i (f^2)_{m-i} - sum_{j>=1} B_j f_{m-j}`,
/// where `(f^2)_{m-i}` only involves `f_0 .. f_{m-1}`.
pub fn solve_quadratic_functional(
    a: &QPolynomial,
    b: &QPolynomial,
    c: &QPolynomial,
    order: i64,
) -> Result<TruncatedSeries> {
    if !a.constant_term().is_zero() {
        return Err(Error::IllPosedQuadratic {
            reason: "the quadratic coefficient A must have zero constant term".into(),
        });
    }
    let b0 = b.constant_term();
    if b0.is_zero() {
        return Err(Error::IllPosedQuadratic {
            reason: "the linear coefficient B must have nonzero constant term".into(),
        });
    }
    let order = order.max(0);
    let n = order as usize;
    let mut f = vec![Coefficient::zero(); n];
    // Square of f, filled incrementally: sq[t] is valid once f[0..=t] are.
    let mut sq = vec![Coefficient::zero(); n];
    for m in 0..n {
        let mut rhs = c.coeff(m);
        let deg_b = b.degree().unwrap_or(0);
        for j in 1..=deg_b.min(m) {
            let bj = b.coeff(j);
            if !bj.is_zero() && !f[m - j].is_zero() {
                rhs -= bj * &f[m - j];
            }
        }
        if let Some(deg_a) = a.degree() {
            for i in 1..=deg_a.min(m) {
                let ai = a.coeff(i);
                if !ai.is_zero() && !sq[m - i].is_zero() {
                    rhs -= ai * &sq[m - i];
                }
            }
        }
        f[m] = rhs / &b0;
        // Extend the square with every product that involves f[m] at
        // exponents we may still need (index < n).
        if !f[m].is_zero() {
            for k in 0..=m {
                let t = m + k;
                if t >= n {
                    break;
                }
                let add = &f[m] * &f[k];
                sq[t] += if k == m { add } else { &add + &add };
            }
        }
    }
    Ok(TruncatedSeries::new(0, f, order))
}

impl fmt::Display for TruncatedSeries {
    /// Renders like `1 - q^2 + 2q^3 + O(q^5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.valuation + i as i64;
            let (sign, mag) = if c < &Coefficient::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if wrote {
                write!(f, " {} ", sign)?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            wrote = true;
            let mag_txt = coeff::render(&mag);
            let mag_txt = if mag_txt.contains('/') {
                format!("({})", mag_txt)
            } else {
                mag_txt
            };
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{}", mag_txt)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}q", mag_txt)?,
                (_, true) => write!(f, "q^{}", e)?,
                (_, false) => write!(f, "{}q^{}", mag_txt, e)?,
            }
        }
        if wrote {
            write!(f, " + O(q^{})", self.order)
        } else {
            write!(f, "O(q^{})", self.order)
        }
    }
}
