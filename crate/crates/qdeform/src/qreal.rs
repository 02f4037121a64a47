//! q-deformations of integers, rationals, and quadratic irrationals.
//!
//! The q-deformation `[x]_q` of a number `x` is built from a continued
//! fraction expansion of `x` by replacing each step with a Moebius
//! transformation whose matrix has polynomial entries in `q`. Two classical
//! expansions give the same deformation and both are implemented:
//!
//! - the Hirzebruch-Jung ("ceiling") expansion `x = c1 - 1/(c2 - 1/(...))`
//!   with every term from the second on at least 2, driven by the generator
//!   matrices `T = [[q, 1], [0, 1]]` and `S = [[0, -1], [q, 0]]`;
//! - the regular ("floor") expansion `x = a1 + 1/(a2 + 1/(...))` with every
//!   term from the second on at least 1, driven by alternating odd/even
//!   level matrices (the two levels deform by `q` and by `1/q`).
//!
//! For a rational input both routes are computed and cross-checked; for a
//! quadratic irrational (an eventually periodic regular expansion) the
//! periodic tail is the fixed point of its level-matrix product, a quadratic
//! functional equation solved exactly in power series.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::{self, Coefficient};
use crate::poly::QPolynomial;
use crate::series::{solve_quadratic_functional, TruncatedSeries};
use crate::{Error, Result};

/// A 2x2 matrix of polynomials in `q` acting on series and on polynomial
/// fractions by Moebius transformation `z -> (a z + b) / (c z + d)`.
///
/// Every matrix built from the generators in this module has determinant
/// `+-(unit) * q^k`, which keeps the transformations invertible over the
/// Laurent series field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusMatrix {
    pub a: QPolynomial,
    pub b: QPolynomial,
    pub c: QPolynomial,
    pub d: QPolynomial,
}

impl MoebiusMatrix {
    pub fn identity() -> Self {
        MoebiusMatrix {
            a: QPolynomial::one(),
            b: QPolynomial::zero(),
            c: QPolynomial::zero(),
            d: QPolynomial::one(),
        }
    }

    /// The deformed rotation `S = [[0, -1], [q, 0]]`, acting as
    /// `z -> -1/(q z)`.
    pub fn rotation() -> Self {
        MoebiusMatrix {
            a: QPolynomial::zero(),
            b: QPolynomial::one().neg(),
            c: QPolynomial::from_ints(&[0, 1]),
            d: QPolynomial::zero(),
        }
    }

    /// The deformed translation power `T^k` acting as
    /// `z -> q^k z + [k]_q`. For `k >= 0` this is `[[q^k, [k]_q], [0, 1]]`;
    /// for `k < 0` the matrix is cleared of negative powers (scaled by
    /// `q^(-k)`, which does not change the Moebius action).
    pub fn translation_power(k: i64) -> Self {
        if k >= 0 {
            MoebiusMatrix {
                a: QPolynomial::monomial(Coefficient::one(), k as usize),
                b: QPolynomial::q_int(k as u64),
                c: QPolynomial::zero(),
                d: QPolynomial::one(),
            }
        } else {
            let m = (-k) as usize;
            MoebiusMatrix {
                a: QPolynomial::one(),
                b: QPolynomial::q_int(m as u64).neg(),
                c: QPolynomial::zero(),
                d: QPolynomial::monomial(Coefficient::one(), m),
            }
        }
    }

    /// Level matrix for an odd-position regular continued fraction term
    /// (the `q`-deformed level): `[[[a]_q, q^a], [1, 0]]` for `a >= 1`,
    /// extended to `a <= 0` by clearing denominators.
    pub fn odd_level(a: i64) -> Self {
        if a >= 0 {
            MoebiusMatrix {
                a: QPolynomial::q_int(a as u64),
                b: QPolynomial::monomial(Coefficient::one(), a as usize),
                c: QPolynomial::one(),
                d: QPolynomial::zero(),
            }
        } else {
            let m = (-a) as usize;
            MoebiusMatrix {
                a: QPolynomial::q_int(m as u64).neg(),
                b: QPolynomial::one(),
                c: QPolynomial::monomial(Coefficient::one(), m),
                d: QPolynomial::zero(),
            }
        }
    }

    /// Level matrix for an even-position regular continued fraction term
    /// (the `1/q`-deformed level, cleared of negative powers):
    /// `[[q [a]_q, 1], [q^a, 0]]`, valid for `a >= 1`.
    pub fn even_level(a: i64) -> Self {
        assert!(a >= 1, "even-position continued fraction terms must be >= 1");
        MoebiusMatrix {
            a: QPolynomial::q_int(a as u64).shift_up(1),
            b: QPolynomial::one(),
            c: QPolynomial::monomial(Coefficient::one(), a as usize),
            d: QPolynomial::zero(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        MoebiusMatrix {
            a: self.a.mul(&other.a).add(&self.b.mul(&other.c)),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.d)),
            c: self.c.mul(&other.a).add(&self.d.mul(&other.c)),
            d: self.c.mul(&other.b).add(&self.d.mul(&other.d)),
        }
    }

    pub fn det(&self) -> QPolynomial {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    /// The determinant as `(coefficient, exponent)` when it is a single
    /// monomial, `None` otherwise. Products of the generators always pass.
    pub fn det_monomial(&self) -> Option<(Coefficient, usize)> {
        let det = self.det();
        let nonzero: Vec<usize> = det
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect();
        match nonzero.as_slice() {
            [k] => Some((det.coeff(*k), *k)),
            _ => None,
        }
    }

    /// Projective equality: equal up to a scalar (rational function) factor.
    pub fn proj_eq(&self, other: &Self) -> bool {
        let mine = [&self.a, &self.b, &self.c, &self.d];
        let theirs = [&other.a, &other.b, &other.c, &other.d];
        // Zero patterns must match, and all cross products of nonzero
        // entries must agree.
        for i in 0..4 {
            if mine[i].is_zero() != theirs[i].is_zero() {
                return false;
            }
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                if mine[i].mul(theirs[j]) != mine[j].mul(theirs[i]) {
                    return false;
                }
            }
        }
        true
    }

    /// Image of the point 0: the fraction `b/d`.
    pub fn apply_to_zero(&self) -> Result<QPolynomialFraction> {
        QPolynomialFraction::new(self.b.clone(), self.d.clone())
    }

    /// Image of the point at infinity: the fraction `a/c`.
    pub fn apply_to_infinity(&self) -> Result<QPolynomialFraction> {
        QPolynomialFraction::new(self.a.clone(), self.c.clone())
    }

    /// Moebius action on a polynomial fraction.
    pub fn apply_to_fraction(&self, x: &QPolynomialFraction) -> Result<QPolynomialFraction> {
        QPolynomialFraction::new(
            self.a.mul(&x.num).add(&self.b.mul(&x.den)),
            self.c.mul(&x.num).add(&self.d.mul(&x.den)),
        )
    }

    /// Moebius action on a truncated series:
    /// `(a f + b) / (c f + d)`, with order tracked by the series engine.
    pub fn apply_to_series(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let num = f.mul_poly(&self.a).add(&TruncatedSeries::from_poly(&self.b, f.order()));
        let den = f.mul_poly(&self.c).add(&TruncatedSeries::from_poly(&self.d, f.order()));
        num.div(&den)
    }
}

/// A ratio of polynomials in `q`: the exact value of a q-deformed rational.
///
/// Stored content-reduced: coefficients cleared to integers, divided by
/// their common integer content, with the denominator's leading coefficient
/// positive. (The polynomial gcd is deliberately not extracted; equality
/// compares by cross multiplication, which is insensitive to common
/// factors.)
#[derive(Debug, Clone)]
pub struct QPolynomialFraction {
    num: QPolynomial,
    den: QPolynomial,
}

impl QPolynomialFraction {
    pub fn new(num: QPolynomial, den: QPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero {
                context: "building a polynomial fraction".into(),
            });
        }
        let mut f = QPolynomialFraction { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        QPolynomialFraction {
            num: p,
            den: QPolynomial::one(),
        }
    }

    pub fn num(&self) -> &QPolynomial {
        &self.num
    }

    pub fn den(&self) -> &QPolynomial {
        &self.den
    }

    fn normalize(&mut self) {
        use num_integer::Integer;
        // Clear rational coefficients: multiply both parts by the lcm of
        // every coefficient denominator.
        let mut lcm = BigInt::one();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            lcm = lcm.lcm(c.denom());
        }
        let scale = Coefficient::from_integer(lcm);
        let num = self.num.scale(&scale);
        let den = self.den.scale(&scale);
        // Divide by the common integer content.
        let mut content = BigInt::zero();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            content = content.gcd(c.numer());
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        // Positive leading coefficient on the denominator.
        if den.coeffs().last().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        let inv = Coefficient::new(BigInt::one(), content);
        self.num = num.scale(&inv);
        self.den = den.scale(&inv);
    }

    /// Value at `q = 1`; fails if the denominator vanishes there.
    pub fn eval_one(&self) -> Result<BigRational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(Error::DivisionByZero {
                context: "evaluating a polynomial fraction at q = 1".into(),
            });
        }
        Ok(self.num.eval_one() / d)
    }

    /// Laurent series expansion certified below `order`.
    pub fn to_series(&self, order: i64) -> Result<TruncatedSeries> {
        let den_val = self
            .den
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("fraction denominators are nonzero") as i64;
        let work = order + 2 * den_val + 1;
        let num = TruncatedSeries::from_poly(&self.num, work);
        let den = TruncatedSeries::from_poly(&self.den, work);
        let series = num.div(&den)?;
        Ok(series.truncate(order.min(series.order())))
    }
}

impl PartialEq for QPolynomialFraction {
    /// Equality of rational functions (cross multiplication).
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for QPolynomialFraction {}

impl std::fmt::Display for QPolynomialFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == QPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Which continued fraction convention a term list uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CFKind {
    /// Ceiling expansion `c1 - 1/(c2 - 1/(...))`, terms from the second on
    /// at least 2.
    HirzebruchJung,
    /// Floor expansion `a1 + 1/(a2 + 1/(...))`, terms from the second on at
    /// least 1.
    Regular,
}

/// A finite continued fraction term list with its convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFExpansion {
    pub kind: CFKind,
    pub terms: Vec<i64>,
}

impl CFExpansion {
    pub fn new(kind: CFKind, terms: Vec<i64>) -> Result<Self> {
        let cf = CFExpansion { kind, terms };
        cf.validate()?;
        Ok(cf)
    }

    fn validate(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::InvalidContinuedFraction {
                reason: "empty term list".into(),
            });
        }
        let floor = match self.kind {
            CFKind::HirzebruchJung => 2,
            CFKind::Regular => 1,
        };
        for (i, &t) in self.terms.iter().enumerate().skip(1) {
            if t < floor {
                return Err(Error::InvalidContinuedFraction {
                    reason: format!(
                        "term {} at position {} is below the minimum {} for this convention",
                        t,
                        i + 1,
                        floor
                    ),
                });
            }
        }
        Ok(())
    }

    /// Exact rational value of the finite fraction.
    pub fn value(&self) -> BigRational {
        let mut terms = self.terms.iter().rev();
        let first = *terms.next().expect("validated nonempty");
        let mut x = BigRational::from_integer(BigInt::from(first));
        for &t in terms {
            // x_{i} = t (+/-) 1/x_{i+1}; a zero intermediate cannot occur
            // for validated term lists (tails are > 1 in magnitude).
            let t = BigRational::from_integer(BigInt::from(t));
            x = match self.kind {
                CFKind::HirzebruchJung => t - x.recip(),
                CFKind::Regular => t + x.recip(),
            };
        }
        x
    }
}

impl std::fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body = self
            .terms
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",");
        match self.kind {
            CFKind::HirzebruchJung => write!(f, "[[{}]]", body),
            CFKind::Regular => write!(f, "[{}]", body),
        }
    }
}

/// Ceiling-algorithm expansion of a rational. Unique: every term from the
/// second on is at least 2, and the algorithm terminates because the
/// denominator strictly decreases.
pub fn hirzebruch_jung_expansion(x: &BigRational) -> CFExpansion {
    let mut terms = Vec::new();
    let mut x = x.clone();
    loop {
        let c = x.ceil();
        terms.push(ratio_to_i64(&c));
        if x == c {
            break;
        }
        x = (c - x).recip();
    }
    CFExpansion::new(CFKind::HirzebruchJung, terms).expect("ceiling algorithm output is valid")
}

/// Floor-algorithm expansion of a rational, in the canonical form whose
/// last term is at least 2 (which the greedy algorithm produces by itself:
/// a trailing remainder strictly between 0 and 1 inverts to something
/// greater than 1).
pub fn regular_expansion(x: &BigRational) -> CFExpansion {
    let mut terms = Vec::new();
    let mut x = x.clone();
    loop {
        let a = x.floor();
        terms.push(ratio_to_i64(&a));
        if x == a {
            break;
        }
        x = (x - a).recip();
    }
    debug_assert!(terms.len() == 1 || *terms.last().unwrap() >= 2);
    CFExpansion::new(CFKind::Regular, terms).expect("floor algorithm output is valid")
}

fn ratio_to_i64(x: &BigRational) -> i64 {
    assert!(x.is_integer());
    let n = x.to_integer();
    i64::try_from(&n).expect("continued fraction term exceeds i64")
}

/// Moebius matrix of a Hirzebruch-Jung term list:
/// `T^{c1} S T^{c2} S ... T^{cn}`. The deformed value is the image of 0.
pub fn hirzebruch_jung_matrix(terms: &[i64]) -> MoebiusMatrix {
    let mut m = MoebiusMatrix::translation_power(terms[0]);
    for &c in &terms[1..] {
        m = m
            .mul(&MoebiusMatrix::rotation())
            .mul(&MoebiusMatrix::translation_power(c));
    }
    m
}

/// Moebius matrix of a regular term list: alternating odd/even level
/// matrices. The deformed value is the image of the point at infinity.
pub fn regular_matrix(terms: &[i64]) -> MoebiusMatrix {
    let mut m = MoebiusMatrix::identity();
    for (i, &a) in terms.iter().enumerate() {
        let level = if i % 2 == 0 {
            MoebiusMatrix::odd_level(a)
        } else {
            MoebiusMatrix::even_level(a)
        };
        m = m.mul(&level);
    }
    m
}

/// The q-deformed integer `[n]_q` as an exact fraction:
/// `1 + q + ... + q^(n-1)` for `n >= 0` and `-q^(-m) [m]_q` (cleared to
/// `-[m]_q / q^m`) for `n = -m < 0`.
pub fn q_integer(n: i64) -> QPolynomialFraction {
    if n >= 0 {
        QPolynomialFraction::from_poly(QPolynomial::q_int(n as u64))
    } else {
        let m = (-n) as u64;
        QPolynomialFraction::new(
            QPolynomial::q_int(m).neg(),
            QPolynomial::monomial(Coefficient::one(), m as usize),
        )
        .expect("monomial denominator is nonzero")
    }
}

/// The q-deformed rational `[x]_q` as an exact fraction of polynomials.
///
/// Computed along both continued fraction routes (ceiling and floor
/// expansions) and cross-checked; a disagreement would be a bug, reported as
/// [`Error::RouteMismatch`]. Also checks the `q = 1` specialization.
pub fn q_rational(x: &BigRational) -> Result<QPolynomialFraction> {
    let hj = hirzebruch_jung_expansion(x);
    let m = hirzebruch_jung_matrix(&hj.terms);
    let via_hj = m.apply_to_zero()?;

    let reg = regular_expansion(x);
    let m = regular_matrix(&reg.terms);
    let via_regular = m.apply_to_infinity()?;

    if via_hj != via_regular {
        return Err(Error::RouteMismatch {
            value: x.to_string(),
            detail: format!(
                "ceiling route gives {}, floor route gives {}",
                via_hj, via_regular
            ),
        });
    }
    let at_one = via_hj.eval_one()?;
    if &at_one != x {
        return Err(Error::RouteMismatch {
            value: x.to_string(),
            detail: format!("q = 1 specialization gives {}", at_one),
        });
    }
    Ok(via_hj)
}

/// Series expansion of `[x]_q`, certified below `order`.
pub fn q_rational_series(x: &BigRational, order: i64) -> Result<TruncatedSeries> {
    q_rational(x)?.to_series(order)
}

/// The bracket polynomial `<n>_q = q [n]_q + (1 + q^n)(1 - q)` that appears
/// as the repeating denominator in the depth-3 staircase fraction of the
/// n-th metallic number.
pub fn metallic_bracket(n: u64) -> QPolynomial {
    assert!(n >= 1);
    let one_plus_qn = QPolynomial::one().add(&QPolynomial::monomial(Coefficient::one(), n as usize));
    QPolynomial::q_int(n)
        .shift_up(1)
        .add(&one_plus_qn.mul(&QPolynomial::from_ints(&[1, -1])))
}

/// The q-deformation of the n-th metallic number
/// `y_n = (n + sqrt(n^2 + 4)) / 2` (golden for n = 1, silver for n = 2,
/// bronze for n = 3, ...), as a power series with integer coefficients.
///
/// `[y_n]_q` is the unique power-series solution of
/// `q f^2 + ((1 + q^n)(1 - q) - q [n]_q) f = 1`.
pub fn q_metallic(n: u64, order: i64) -> Result<TruncatedSeries> {
    assert!(n >= 1, "metallic numbers are indexed from 1");
    let one_plus_qn = QPolynomial::one().add(&QPolynomial::monomial(Coefficient::one(), n as usize));
    let b = one_plus_qn
        .mul(&QPolynomial::from_ints(&[1, -1]))
        .sub(&QPolynomial::q_int(n).shift_up(1));
    solve_quadratic_functional(&QPolynomial::from_ints(&[0, 1]), &b, &QPolynomial::one(), order)
}

/// Checks the head-and-gap shape of a deformed quadratic irrational whose
/// regular expansion starts `[k; ...]`: coefficients of `[k]_q` (ones up to
/// exponent `k-1`), then `n` zero coefficients, then coefficient 1 at
/// exponent `k + n`.
pub fn gap_check(f: &TruncatedSeries, k: i64, n: i64) -> Result<bool> {
    assert!(k >= 0 && n >= 1);
    for e in 0..k {
        if f.coeff(e)? != Coefficient::one() {
            return Ok(false);
        }
    }
    for e in k..k + n {
        if !f.coeff(e)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(f.coeff(k + n)? == Coefficient::one())
}

/// The q-deformation of the quadratic irrational with eventually periodic
/// regular expansion `[pre_1; pre_2, ..., (per_1, ..., per_m)]`, as a
/// truncated Laurent series certified below `order`.
///
/// The periodic tail is normalized so it starts at an odd position with an
/// even number of terms (rotating the first period term into the preperiod
/// and doubling an odd-length period). That places the tail where its
/// level-matrix fixed point is a genuine power series with constant term 1,
/// so the quadratic functional equation has exactly one power-series root
/// and no branch choice is ever made numerically.
pub fn q_quadratic_irrational(
    preperiod: &[i64],
    period: &[i64],
    order: i64,
) -> Result<TruncatedSeries> {
    validate_eventually_periodic(preperiod, period)?;
    let mut pre = preperiod.to_vec();
    let mut per = period.to_vec();
    if pre.len() % 2 == 1 {
        pre.push(per[0]);
        per.rotate_left(1);
    }
    if per.len() % 2 == 1 {
        let copy = per.clone();
        per.extend(copy);
    }

    // Tail value f solves M f = f for the period's level-matrix product M
    // (which starts at an odd position because the preperiod length is even):
    // c f^2 + (d - a) f = b.
    let m_per = regular_matrix(&per);
    let a_poly = m_per.c.clone();
    let b_poly = m_per.d.sub(&m_per.a);
    let c_poly = m_per.b.clone();

    let mut work = order + 4;
    loop {
        let tail = solve_quadratic_functional(&a_poly, &b_poly, &c_poly, work)?;
        let value = if pre.is_empty() {
            tail
        } else {
            regular_matrix(&pre).apply_to_series(&tail)?
        };
        if value.order() >= order {
            return Ok(value.truncate(order));
        }
        work += (order - value.order()) + 4;
    }
}

fn validate_eventually_periodic(preperiod: &[i64], period: &[i64]) -> Result<()> {
    if period.is_empty() {
        return Err(Error::InvalidContinuedFraction {
            reason: "periodic part must be nonempty".into(),
        });
    }
    for (i, &t) in preperiod.iter().enumerate() {
        if i > 0 && t < 1 {
            return Err(Error::InvalidContinuedFraction {
                reason: format!("preperiod term {} at position {} must be >= 1", t, i + 1),
            });
        }
    }
    // Period terms repeat at arbitrarily deep positions, so all must be
    // >= 1; the same bound applies to period[0] even when the expansion is
    // purely periodic.
    for &t in period {
        if t < 1 {
            return Err(Error::InvalidContinuedFraction {
                reason: format!("period term {} must be >= 1", t),
            });
        }
    }
    Ok(())
}

/// A number the CLI and verification harness can name: a rational, an
/// eventually periodic regular continued fraction, a metallic number, or
/// one of the two classical combinatorial series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumberSpec {
    Rational(BigRational),
    QuadraticIrrational { preperiod: Vec<i64>, period: Vec<i64> },
    Metallic(u64),
    Catalan,
    Motzkin,
}

impl NumberSpec {
    /// The series this spec denotes, certified below `order`.
    pub fn to_series(&self, order: i64) -> Result<TruncatedSeries> {
        match self {
            NumberSpec::Rational(x) => q_rational_series(x, order),
            NumberSpec::QuadraticIrrational { preperiod, period } => {
                q_quadratic_irrational(preperiod, period, order)
            }
            NumberSpec::Metallic(n) => q_metallic(*n, order),
            NumberSpec::Catalan => solve_quadratic_functional(
                &QPolynomial::from_ints(&[0, 1]),
                &QPolynomial::from_ints(&[-1]),
                &QPolynomial::from_ints(&[-1]),
                order,
            ),
            NumberSpec::Motzkin => solve_quadratic_functional(
                &QPolynomial::from_ints(&[0, 0, 1]),
                &QPolynomial::from_ints(&[-1, 1]),
                &QPolynomial::from_ints(&[-1]),
                order,
            ),
        }
    }
}

/// Parses the number syntax shared by the CLI and the test suite:
///
/// - `7`, `-3`, `5/3`: a rational;
/// - `[1;2,2]` or `[1,2,2]`: a finite regular continued fraction (rational);
/// - `[1;(2)]`, `[(1)]`, `[2,1,(3,1)]`: eventually periodic (quadratic
///   irrational), parentheses around the periodic block;
/// - `metallic:N` (aliases `golden`, `silver`, `bronze`, `platinum`);
/// - `catalan`, `motzkin`.
pub fn parse_number_spec(text: &str) -> Result<NumberSpec> {
    let text = text.trim();
    let err = |message: String| Error::Parse { message };
    match text {
        "golden" => return Ok(NumberSpec::Metallic(1)),
        "silver" => return Ok(NumberSpec::Metallic(2)),
        "bronze" => return Ok(NumberSpec::Metallic(3)),
        "platinum" => return Ok(NumberSpec::Metallic(4)),
        "catalan" => return Ok(NumberSpec::Catalan),
        "motzkin" => return Ok(NumberSpec::Motzkin),
        _ => {}
    }
    if let Some(n) = text.strip_prefix("metallic:") {
        let n: u64 = n
            .parse()
            .map_err(|_| err(format!("bad metallic index {:?}", n)))?;
        if n == 0 {
            return Err(err("metallic index must be >= 1".into()));
        }
        return Ok(NumberSpec::Metallic(n));
    }
    if let Some(body) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let body = body.replace(';', ",");
        let (pre_txt, per_txt) = match body.find('(') {
            Some(open) => {
                let close = body
                    .find(')')
                    .ok_or_else(|| err("unterminated periodic block".into()))?;
                if close != body.len() - 1 || close < open {
                    return Err(err("periodic block must close the expansion".into()));
                }
                (body[..open].to_string(), body[open + 1..close].to_string())
            }
            None => (body.clone(), String::new()),
        };
        let parse_terms = |s: &str| -> Result<Vec<i64>> {
            s.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| err(format!("bad continued fraction term {:?}", t)))
                })
                .collect()
        };
        let preperiod = parse_terms(&pre_txt)?;
        let period = parse_terms(&per_txt)?;
        if period.is_empty() {
            if preperiod.is_empty() {
                return Err(err("empty continued fraction".into()));
            }
            let cf = CFExpansion::new(CFKind::Regular, preperiod)?;
            return Ok(NumberSpec::Rational(cf.value()));
        }
        validate_eventually_periodic(&preperiod, &period)?;
        return Ok(NumberSpec::QuadraticIrrational { preperiod, period });
    }
    match coeff::parse(text) {
        Some(x) => Ok(NumberSpec::Rational(x)),
        None => Err(err(format!("unrecognized number spec {:?}", text))),
    }
}
