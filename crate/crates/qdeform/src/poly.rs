//! Dense polynomials in the formal variable `q` with exact rational
//! coefficients.
//!
//! Stored lowest degree first with no trailing zero coefficients, so equality
//! is structural and `degree` reads off the length. The zero polynomial has
//! an empty coefficient vector and degree `None`.

use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{self, Coefficient};

/// Polynomial in `q` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<Coefficient>,
}

impl QPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPolynomial::constant(coeff_one())
    }

    /// A constant polynomial.
    pub fn constant(c: Coefficient) -> Self {
        QPolynomial { coeffs: vec![c] }.normalized()
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: Coefficient, k: usize) -> Self {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![Coefficient::zero(); k + 1];
        coeffs[k] = c;
        QPolynomial { coeffs }
    }

    /// Builds from coefficients listed lowest degree first.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Self {
        QPolynomial { coeffs }.normalized()
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPolynomial::from_coeffs(coeffs.iter().map(|&n| coeff::coeff_int(n)).collect())
    }

    /// The q-integer `[n]_q = 1 + q + ... + q^(n-1)` for `n >= 0`
    /// (`[0]_q = 0`). Negative q-integers are rational functions, not
    /// polynomials; see the q-rational constructors for those.
    pub fn q_int(n: u64) -> Self {
        QPolynomial {
            coeffs: vec![coeff_one(); n as usize],
        }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Coefficient {
        self.coeffs.get(k).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Coefficients lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        QPolynomial { coeffs: out }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![Coefficient::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial { coeffs: out }.normalized()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return QPolynomial::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![Coefficient::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Evaluates at a rational point by Horner's rule.
    pub fn eval(&self, x: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at `q = 1` (the sum of the coefficients).
    pub fn eval_one(&self) -> Coefficient {
        let mut acc = Coefficient::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(coeff::is_integral)
    }
}

fn coeff_one() -> Coefficient {
    Coefficient::one()
}

impl fmt::Display for QPolynomial {
    /// Renders in the ascending form used throughout the CLI, for example
    /// `1 + q - 2q^3` or `(1/2)q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &Coefficient::zero() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mag_txt = coeff::render(&mag);
            let mag_txt = if mag_txt.contains('/') {
                format!("({})", mag_txt)
            } else {
                mag_txt
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{}", mag_txt)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}q", mag_txt)?,
                (_, true) => write!(f, "q^{}", k)?,
                (_, false) => write!(f, "{}q^{}", mag_txt, k)?,
            }
        }
        Ok(())
    }
}
