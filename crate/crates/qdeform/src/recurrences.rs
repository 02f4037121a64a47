//! Quadratic recurrences, periodicity, and cross-row identities on
//! determinant rows, plus the wall-verification harness for the metallic
//! series built from them.
//!
//! A "row" here is a shifted Hankel determinant sequence `n -> D(l, n)` for
//! one fixed shift `l`, as produced by [`crate::hankel::hankel_wall`]. The
//! checks in this module never divide: every relation is verified in the
//! product form, so zero entries need no special-casing.

use num_traits::{One, Signed, Zero};

use crate::coeff::{coeff_int, is_integral, Coefficient};
use crate::hankel::{hankel_wall, HankelWall, WallEngine};
use crate::qreal::q_metallic;
use crate::{Error, Result};

/// Which quadratic recurrence a row is tested against.
///
/// The Gale-Robinson relation of order `k` is
///
/// ```text
/// x[n+2k+2] * x[n] = x[n+2k+1] * x[n+1] - x[n+k+1]^2
/// ```
///
/// with window `2k+2` and squared middle index `n+k+1`. Somos-4 is the `k=1`
/// instance and Somos-6 the `k=2` instance; they get their own variants so
/// reports can carry the conventional name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceSpec {
    Somos4,
    Somos6,
    GaleRobinson { k: u32 },
}

impl RecurrenceSpec {
    /// The Gale-Robinson order parameter `k` of the relation.
    pub fn order(self) -> u32 {
        match self {
            RecurrenceSpec::Somos4 => 1,
            RecurrenceSpec::Somos6 => 2,
            RecurrenceSpec::GaleRobinson { k } => k,
        }
    }

    /// Window length `2k+2` of the relation; an equation at base index `n`
    /// touches entries `n ..= n + window`.
    pub fn window(self) -> usize {
        2 * self.order() as usize + 2
    }

    /// Stable lowercase name used by serializers.
    pub fn kind_name(self) -> &'static str {
        match self {
            RecurrenceSpec::Somos4 => "somos4",
            RecurrenceSpec::Somos6 => "somos6",
            RecurrenceSpec::GaleRobinson { .. } => "gale_robinson",
        }
    }
}

/// Outcome of testing one row against one recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub spec: RecurrenceSpec,
    /// Number of base indices `n` the relation was evaluated at.
    pub tested: usize,
    pub holds: bool,
    /// Base index of the first violated equation, if any.
    pub first_failure: Option<usize>,
    /// Minimal (anti)periodicity of the row over its whole length, when one
    /// is detectable from the available entries.
    pub periodicity: Option<(usize, i8)>,
}

/// Tests `row` against the recurrence at every base index the row covers.
///
/// The relation is evaluated as stated, products only, so rows containing
/// zeros are handled exactly. Stops at the first violation. Needs at least
/// one full window plus one entry, that is `2k+3` entries.
pub fn check_recurrence(row: &[Coefficient], spec: RecurrenceSpec) -> Result<RecurrenceReport> {
    let k = spec.order() as usize;
    let window = spec.window();
    if row.len() < window + 1 {
        return Err(Error::RowTooShort {
            needed: window + 1,
            have: row.len(),
        });
    }
    let mut holds = true;
    let mut first_failure = None;
    let mut tested = 0;
    for n in 0..=row.len() - window - 1 {
        tested += 1;
        let lhs = &row[n + window] * &row[n];
        let rhs = &row[n + window - 1] * &row[n + 1] - &row[n + k + 1] * &row[n + k + 1];
        if lhs != rhs {
            holds = false;
            first_failure = Some(n);
            break;
        }
    }
    let periodicity = detect_periodicity(row, row.len() / 2);
    Ok(RecurrenceReport {
        spec,
        tested,
        holds,
        first_failure,
        periodicity,
    })
}

/// Finds the smallest `p <= p_max` and sign `s` with `row[n+p] = s * row[n]`
/// for every `n` the row covers.
///
/// An antiperiod is reported in preference to the doubled plain period: for
/// each candidate `p` the sign `-1` is tried first, so a `p`-antiperiodic
/// row reports `(p, -1)`, not `(2p, +1)`. Candidates are limited to
/// `row.len() / 2` so that every reported period is witnessed by at least
/// `p` comparisons; `None` means nothing was found in range.
pub fn detect_periodicity(row: &[Coefficient], p_max: usize) -> Option<(usize, i8)> {
    let p_cap = p_max.min(row.len() / 2);
    for p in 1..=p_cap {
        for sign in [-1i8, 1] {
            let matches = (0..row.len() - p).all(|n| {
                let expected = if sign < 0 { -&row[n] } else { row[n].clone() };
                row[n + p] == expected
            });
            if matches {
                return Some((p, sign));
            }
        }
    }
    None
}

/// One cross-row law: `D(lhs_shift, n) = sign(n) * D(rhs_shift, n + offset)`
/// where `sign(n) = (-1)^(a*n + b)` with `a = alternating`, `b = flip`.
#[derive(Debug, Clone, Copy)]
struct Relation {
    lhs_shift: u32,
    rhs_shift: u32,
    offset: i64,
    alternating: bool,
    flip: bool,
}

impl Relation {
    fn sign_at(&self, n: u32) -> i64 {
        let mut odd = self.flip;
        if self.alternating && n % 2 == 1 {
            odd = !odd;
        }
        if odd {
            -1
        } else {
            1
        }
    }
}

/// The named systems of cross-row identities a wall can be tested against.
///
/// The four metallic families fix `k = 1..4`; `MetallicShift` is the single
/// tail-shift law `D(k, n) = (-1)^(n + (k+1)(k-2)/2) D(k+1, n-k-1)` for any
/// `k`, and `LadderShift` is the full system
/// `D(l, n) = (-1)^(n + k(k+2l+1)/2) D(l-1, n+k+1)` for `l = 1 ..= k+1`
/// relating all `k+2` rows of the wall of the metallic series `y_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterconnectionFamily {
    /// `D(0,n) = (-1)^n D(1, n-2) = D(2, n)`.
    Golden,
    /// `D(l+1, n) = (-1)^(n-1) D(l, n+3)` for `l = 0, 1, 2`.
    Silver,
    /// `D(0,n) = (-1)^(n-1) D(1, n-4) = -D(2, n-8) = (-1)^n D(3, n-12)
    ///  = D(4, n-16)`.
    Bronze,
    /// `D(l, n) = (-1)^(n-1) D(l+1, n-5)` for `l = 0 ..= 4`.
    Platinum,
    MetallicShift { k: u32 },
    LadderShift { k: u32 },
}

/// Sign parity of `(-1)^(num/2)`, demanding that `num` is even.
///
/// The two parametric families state their sign exponents as halves of
/// integer products. Those products are always even (one factor is even for
/// either parity of `k`), but rather than silently rounding we check and
/// report a non-integral exponent as an error.
fn half_exponent_flip(num: u64, context: &str) -> Result<bool> {
    if num % 2 != 0 {
        return Err(Error::NotIntegral {
            context: format!("halving the sign exponent {num} for {context}"),
        });
    }
    Ok((num / 2) % 2 == 1)
}

impl InterconnectionFamily {
    fn relations(self) -> Result<Vec<Relation>> {
        let rel = |lhs_shift, rhs_shift, offset, alternating, flip| Relation {
            lhs_shift,
            rhs_shift,
            offset,
            alternating,
            flip,
        };
        Ok(match self {
            InterconnectionFamily::Golden => vec![
                rel(0, 1, -2, true, false),
                rel(0, 2, 0, false, false),
            ],
            InterconnectionFamily::Silver => (0..3)
                .map(|l| rel(l + 1, l, 3, true, true))
                .collect(),
            InterconnectionFamily::Bronze => vec![
                rel(0, 1, -4, true, true),
                rel(0, 2, -8, false, true),
                rel(0, 3, -12, true, false),
                rel(0, 4, -16, false, false),
            ],
            InterconnectionFamily::Platinum => (0..5)
                .map(|l| rel(l, l + 1, -5, true, true))
                .collect(),
            InterconnectionFamily::MetallicShift { k } => {
                let flip = half_exponent_flip(
                    (k as u64 + 1) * (k as u64).abs_diff(2),
                    "the tail-shift law",
                )?;
                // (k+1)(k-2)/2 with k < 2 stays sign-correct under
                // |k-2| because the halved product is taken mod 2.
                vec![rel(k, k + 1, -(k as i64) - 1, true, flip)]
            }
            InterconnectionFamily::LadderShift { k } => {
                let mut rels = Vec::new();
                for l in 1..=k + 1 {
                    let flip = half_exponent_flip(
                        k as u64 * (k as u64 + 2 * l as u64 + 1),
                        "the ladder-shift law",
                    )?;
                    rels.push(rel(l, l - 1, k as i64 + 1, true, flip));
                }
                rels
            }
        })
    }
}

/// Outcome of testing a wall against one family of cross-row identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterconnectionReport {
    pub family: InterconnectionFamily,
    pub holds: bool,
    /// `(lhs shift, n)` of the first violated cell, if any.
    pub first_failure: Option<(u32, u32)>,
    /// Number of cells compared; relations are only evaluated where both
    /// sides fall inside the wall.
    pub cells: usize,
}

/// Tests every relation of `family` on every cell of `wall` where both
/// sides are available.
///
/// A relation whose rows are missing from the wall is a coverage error; a
/// relation whose offset pushes every cell outside `0..=n_max` simply
/// contributes no cells.
pub fn check_interconnection(
    wall: &HankelWall,
    family: InterconnectionFamily,
) -> Result<InterconnectionReport> {
    let relations = family.relations()?;
    let shift_max = wall.shift_min + wall.rows.len() as u32 - 1;
    for r in &relations {
        for shift in [r.lhs_shift, r.rhs_shift] {
            if shift < wall.shift_min || shift > shift_max {
                return Err(Error::WallCoverage {
                    shift,
                    min: wall.shift_min,
                    max: shift_max,
                });
            }
        }
    }
    let mut cells = 0;
    for r in &relations {
        for n in 0..=wall.n_max {
            let m = n as i64 + r.offset;
            if m < 0 || m > wall.n_max as i64 {
                continue;
            }
            cells += 1;
            let rhs = wall.entry(r.rhs_shift, m as u32) * coeff_int(r.sign_at(n));
            if *wall.entry(r.lhs_shift, n) != rhs {
                return Ok(InterconnectionReport {
                    family,
                    holds: false,
                    first_failure: Some((r.lhs_shift, n)),
                    cells,
                });
            }
        }
    }
    Ok(InterconnectionReport {
        family,
        holds: true,
        first_failure: None,
        cells,
    })
}

/// Outcome of checking one claimed (anti)period on one row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityCheck {
    /// The claimed period.
    pub p: u32,
    /// The claimed sign: `-1` for an antiperiod, `+1` for a plain period.
    pub sign: i8,
    pub holds: bool,
    pub first_failure: Option<u32>,
    /// Number of index pairs compared.
    pub cells: usize,
    /// Minimal (anti)period actually detected in the row, when the row is
    /// long enough to witness one (it needs `2p` entries).
    pub detected: Option<(usize, i8)>,
}

fn check_claimed_period(row: &[Coefficient], p: u32, sign: i8) -> PeriodicityCheck {
    let mut holds = true;
    let mut first_failure = None;
    let mut cells = 0;
    for n in 0..row.len().saturating_sub(p as usize) {
        cells += 1;
        let expected = if sign < 0 { -&row[n] } else { row[n].clone() };
        if row[n + p as usize] != expected {
            holds = false;
            first_failure = Some(n as u32);
            break;
        }
    }
    PeriodicityCheck {
        p,
        sign,
        holds,
        first_failure,
        cells,
        detected: detect_periodicity(row, row.len() / 2),
    }
}

/// All checks for one row of a metallic wall.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub shift: u32,
    /// The first `min(2k(k+1), n_max) + 1` entries, one full claimed period
    /// when the range allows it.
    pub values_prefix: Vec<Coefficient>,
    /// Every entry is `-1`, `0`, or `1`.
    pub in_range_pm1: bool,
    pub range_first_failure: Option<u32>,
    /// The claimed `2k(k+1)`-(anti)period, sign `(-1)^k`.
    pub periodicity: PeriodicityCheck,
    /// The Gale-Robinson recurrence of order `k` on the whole row.
    pub recurrence: RecurrenceReport,
    /// The ladder-shift law against the previous row; `None` on the first
    /// row, which has no predecessor.
    pub interconnection_holds: Option<bool>,
    pub interconnection_first_failure: Option<u32>,
}

impl ConjectureRow {
    /// Whether every check on this row passed.
    pub fn passes(&self) -> bool {
        self.in_range_pm1
            && self.periodicity.holds
            && self.recurrence.holds
            && self.interconnection_holds != Some(false)
    }
}

/// Verification matrix for the wall of one metallic series.
#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureReport {
    pub k: u32,
    pub n_max: u32,
    pub rows: Vec<ConjectureRow>,
    /// Every check on every computed row passed. Vacuously true for rows
    /// that were skipped over budget; see `budget_exceeded`.
    pub all_pass: bool,
    /// The wall-clock budget ran out and `rows` is truncated. Reported, not
    /// an error: partial results are still valid results.
    pub budget_exceeded: bool,
    pub elapsed_seconds: f64,
}

/// Computes the metallic series `y_k` and checks the claimed structure of
/// its determinant wall: rows for shifts `0 ..= k+1` and sizes `0 ..= n_max`
/// consist of `-1, 0, 1`; each is `2k(k+1)`-periodic for even `k` and
/// antiperiodic for odd `k`; each satisfies the Gale-Robinson recurrence of
/// order `k`; and consecutive rows are related by the ladder-shift law.
///
/// `budget_seconds` bounds wall-clock time, checked between rows; running
/// out truncates the report instead of failing. The required series order
/// is `(k+1) + 2*n_max` plus slack for the ladder engine's certificates.
pub fn verify_conjecture(
    k: u32,
    n_max: u32,
    budget_seconds: Option<f64>,
    engine: WallEngine,
) -> Result<ConjectureReport> {
    assert!(k >= 1, "the metallic family starts at k = 1");
    let start = std::time::Instant::now();
    let order = (k as i64 + 1) + 2 * n_max as i64 + 8;
    let y = q_metallic(k as u64, order)?;
    let period = 2 * k * (k + 1);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let ladder = InterconnectionFamily::LadderShift { k }.relations()?;

    let mut rows: Vec<Vec<Coefficient>> = Vec::new();
    let mut budget_exceeded = false;
    for shift in 0..=k + 1 {
        if let Some(limit) = budget_seconds {
            if start.elapsed().as_secs_f64() > limit {
                budget_exceeded = true;
                break;
            }
        }
        let wall = hankel_wall(&y, shift..=shift, n_max, engine)?;
        rows.push(wall.rows.into_iter().next().expect("one requested row"));
    }

    let prefix_len = (period.min(n_max) + 1) as usize;
    let mut reports = Vec::new();
    for (l, row) in rows.iter().enumerate() {
        let shift = l as u32;
        let mut range_first_failure = None;
        for (n, value) in row.iter().enumerate() {
            if !(is_integral(value) && value.numer().abs() <= One::one()) {
                range_first_failure = Some(n as u32);
                break;
            }
        }
        let (interconnection_holds, interconnection_first_failure) = if l == 0 {
            (None, None)
        } else {
            let r = &ladder[l - 1];
            debug_assert_eq!(r.lhs_shift, shift);
            let mut failure = None;
            for n in 0..row.len() {
                let m = n + k as usize + 1;
                if m >= rows[l - 1].len() {
                    break;
                }
                let rhs = &rows[l - 1][m] * coeff_int(r.sign_at(n as u32));
                if row[n] != rhs {
                    failure = Some(n as u32);
                    break;
                }
            }
            (Some(failure.is_none()), failure)
        };
        // A row too short to contain one full recurrence window cannot
        // falsify anything; it gets a vacuous report whose `tested: 0`
        // makes the insufficient range visible rather than an error.
        let spec = RecurrenceSpec::GaleRobinson { k };
        let recurrence = if row.len() > spec.window() {
            check_recurrence(row, spec)?
        } else {
            RecurrenceReport {
                spec,
                tested: 0,
                holds: true,
                first_failure: None,
                periodicity: detect_periodicity(row, row.len() / 2),
            }
        };
        reports.push(ConjectureRow {
            shift,
            values_prefix: row[..prefix_len.min(row.len())].to_vec(),
            in_range_pm1: range_first_failure.is_none(),
            range_first_failure,
            periodicity: check_claimed_period(row, period, sign),
            recurrence,
            interconnection_holds,
            interconnection_first_failure,
        });
    }

    let all_pass = reports.iter().all(ConjectureRow::passes);
    Ok(ConjectureReport {
        k,
        n_max,
        rows: reports,
        all_pass,
        budget_exceeded,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Outcome of comparing a computed row against a reference prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixComparison {
    pub matches: bool,
    /// Number of leading entries compared: the shorter of the two lengths.
    pub compared: usize,
    pub first_mismatch: Option<usize>,
}

/// Compares `row` entry-by-entry against a reference prefix `expected`.
///
/// Intended for rows beyond the `-1, 0, 1` range of a wall, where equality
/// with a recorded prefix is the whole claim. An empty reference matches.
pub fn check_beyond_wall(row: &[Coefficient], expected: &[Coefficient]) -> PrefixComparison {
    let compared = row.len().min(expected.len());
    let first_mismatch = (0..compared).find(|&n| row[n] != expected[n]);
    PrefixComparison {
        matches: first_mismatch.is_none(),
        compared,
        first_mismatch,
    }
}

/// One product of row entries, reduced against the known values: a constant,
/// a multiple of one unknown, the square of one unknown, or a product of two
/// distinct unknowns (which the solver cannot use).
enum ProductTerm {
    Known(Coefficient),
    Linear { index: usize, cofactor: Coefficient },
    Square { index: usize },
    Opaque,
}

fn product_term(vals: &[Option<Coefficient>], a: usize, b: usize) -> ProductTerm {
    match (&vals[a], &vals[b]) {
        (Some(x), Some(y)) => ProductTerm::Known(x * y),
        // A zero factor makes the product zero whatever the other entry is.
        (Some(x), None) if x.is_zero() => ProductTerm::Known(Coefficient::zero()),
        (None, Some(y)) if y.is_zero() => ProductTerm::Known(Coefficient::zero()),
        (Some(x), None) => ProductTerm::Linear {
            index: b,
            cofactor: x.clone(),
        },
        (None, Some(y)) => ProductTerm::Linear {
            index: a,
            cofactor: y.clone(),
        },
        (None, None) if a == b => ProductTerm::Square { index: a },
        (None, None) => ProductTerm::Opaque,
    }
}

/// Fills the unknown entries of a row from its known ones using a quadratic
/// recurrence and an assumed (anti)periodicity, by constraint propagation.
///
/// `known` seeds the first entries (`None` for gaps); the result has
/// `length` entries. Each pass applies two kinds of equation to a fixpoint:
///
/// * periodicity `x[n+p] = s * x[n]`, copied in either direction;
/// * the recurrence, after reducing each of its three products against the
///   known entries. An equation that reduces to one unknown appearing
///   linearly (its cofactor known and nonzero) is solved exactly; one that
///   reduces to `x^2 = 0` forces `x = 0`; `x^2 = c` with `c` nonzero is left
///   alone since the sign of `x` is not determined.
///
/// An equation with every entry known is verified; a violated one reports
/// its base index. If the fixpoint still has gaps the row is genuinely
/// under-determined by these constraints and their indices are reported.
pub fn solve_initial_segment(
    known: &[Option<Coefficient>],
    length: usize,
    spec: RecurrenceSpec,
    periodicity: Option<(usize, i8)>,
) -> Result<Vec<Coefficient>> {
    assert!(known.len() <= length, "seed longer than the requested row");
    let k = spec.order() as usize;
    let window = spec.window();
    let mut vals: Vec<Option<Coefficient>> = known.to_vec();
    vals.resize(length, None);

    let assign = |slot: &mut Option<Coefficient>, value: Coefficient, index: usize| {
        match slot {
            Some(existing) if *existing != value => Err(Error::InconsistentConstraint { index }),
            Some(_) => Ok(false),
            None => {
                *slot = Some(value);
                Ok(true)
            }
        }
    };

    loop {
        let mut progress = false;
        if let Some((p, sign)) = periodicity {
            let s = coeff_int(sign as i64);
            for n in 0..length.saturating_sub(p) {
                // sign^2 = 1, so the relation copies both ways.
                if let Some(a) = vals[n].clone() {
                    progress |= assign(&mut vals[n + p], &a * &s, n)?;
                }
                if let Some(b) = vals[n + p].clone() {
                    progress |= assign(&mut vals[n], &b * &s, n)?;
                }
            }
        }
        for n in 0..length.saturating_sub(window) {
            // x[e4] x[e0] - x[e3] x[e1] + x[mid]^2 = 0, each product reduced
            // against the known entries before counting unknowns.
            let (e0, e1, mid, e3, e4) = (n, n + 1, n + k + 1, n + window - 1, n + window);
            let terms = [
                (product_term(&vals, e4, e0), 1),
                (product_term(&vals, e3, e1), -1),
                (product_term(&vals, mid, mid), 1),
            ];
            let mut constant = Coefficient::zero();
            let mut linear: Option<(usize, Coefficient)> = None;
            let mut linear_count = 0;
            let mut square = None;
            let mut opaque = false;
            for (term, sgn) in terms {
                match term {
                    ProductTerm::Known(v) => constant += v * coeff_int(sgn),
                    ProductTerm::Linear { index, cofactor } => {
                        linear = Some((index, cofactor * coeff_int(sgn)));
                        linear_count += 1;
                    }
                    // The squared term always enters with sign +1.
                    ProductTerm::Square { index } => square = Some(index),
                    ProductTerm::Opaque => opaque = true,
                }
            }
            if opaque {
                continue;
            }
            match (linear_count, square) {
                (0, None) => {
                    if !constant.is_zero() {
                        return Err(Error::InconsistentConstraint { index: n });
                    }
                }
                (1, None) => {
                    let (index, cofactor) = linear.expect("counted one linear term");
                    let value = -constant / cofactor;
                    progress |= assign(&mut vals[index], value, n)?;
                }
                (0, Some(index)) => {
                    // x^2 = -constant: only the vanishing case is decisive.
                    if constant.is_zero() {
                        progress |= assign(&mut vals[index], Coefficient::zero(), n)?;
                    } else if constant.is_positive() {
                        // x^2 < 0 has no solution at all.
                        return Err(Error::InconsistentConstraint { index: n });
                    }
                }
                _ => {}
            }
        }
        if !progress {
            break;
        }
    }

    let unresolved: Vec<usize> = (0..length).filter(|&i| vals[i].is_none()).collect();
    if !unresolved.is_empty() {
        return Err(Error::UnderDetermined { unresolved });
    }
    Ok(vals.into_iter().map(|v| v.expect("checked")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(values: &[i64]) -> Vec<Coefficient> {
        values.iter().map(|&v| coeff_int(v)).collect()
    }

    fn metallic_wall(k: u64, top_shift: u32, n_max: u32) -> HankelWall {
        let order = top_shift as i64 + 2 * n_max as i64 + 4;
        let y = q_metallic(k, order).unwrap();
        hankel_wall(&y, 0..=top_shift, n_max, WallEngine::Naive).unwrap()
    }

    const SILVER_PERIODS: [[i64; 12]; 4] = [
        [1, 1, -1, -1, 1, 0, -1, 0, 0, 1, 0, -1],
        [1, 1, 0, -1, 0, 0, -1, 0, 1, 1, -1, -1],
        [1, 0, 0, -1, 0, 1, -1, -1, 1, 1, -1, 0],
        [1, 0, -1, -1, 1, 1, -1, -1, 0, 1, 0, 0],
    ];

    #[test]
    fn somos4_holds_on_golden_rows() {
        let wall = metallic_wall(1, 2, 16);
        for shift in 0..=2 {
            let report = check_recurrence(wall.row(shift), RecurrenceSpec::Somos4).unwrap();
            assert!(report.holds, "shift {shift}");
            assert_eq!(report.first_failure, None);
            assert_eq!(report.tested, 13);
        }
        let report = check_recurrence(wall.row(0), RecurrenceSpec::Somos4).unwrap();
        assert_eq!(report.periodicity, Some((4, -1)));
    }

    #[test]
    fn a_monotone_row_fails_somos4_at_the_start() {
        // 5*1 on the left, 4*2 - 3^2 = -1 on the right.
        let row = ints(&[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let report = check_recurrence(&row, RecurrenceSpec::Somos4).unwrap();
        assert!(!report.holds);
        assert_eq!(report.first_failure, Some(0));
        assert_eq!(report.tested, 1);
    }

    #[test]
    fn short_rows_are_reported_not_panicked() {
        let row = ints(&[1, 1, 1, 0]);
        match check_recurrence(&row, RecurrenceSpec::Somos4) {
            Err(Error::RowTooShort { needed: 5, have: 4 }) => {}
            other => panic!("expected a too-short report, got {other:?}"),
        }
    }

    #[test]
    fn periodicity_detection_prefers_the_antiperiod() {
        let wall = metallic_wall(1, 0, 15);
        assert_eq!(detect_periodicity(wall.row(0), 8), Some((4, -1)));

        let mut silver = ints(&SILVER_PERIODS[0]);
        silver.extend(ints(&SILVER_PERIODS[0]));
        assert_eq!(detect_periodicity(&silver, 12), Some((12, 1)));

        let ones = ints(&[1; 10]);
        assert_eq!(detect_periodicity(&ones, 5), Some((1, 1)));
        let alternating = ints(&[1, -1, 1, -1, 1, -1]);
        assert_eq!(detect_periodicity(&alternating, 3), Some((1, -1)));

        // The cap keeps every report witnessed: a 12-period cannot be
        // claimed from 16 entries.
        let prefix = &silver[..16];
        assert_eq!(detect_periodicity(prefix, 12), None);
    }

    #[test]
    fn gale_robinson_specializes_to_the_somos_recurrences() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..100 {
            let row: Vec<Coefficient> = (0..13)
                .map(|_| coeff_int(rng.gen_range(-2..=2)))
                .collect();
            for (named, k) in [(RecurrenceSpec::Somos4, 1), (RecurrenceSpec::Somos6, 2)] {
                let a = check_recurrence(&row, named).unwrap();
                let b = check_recurrence(&row, RecurrenceSpec::GaleRobinson { k }).unwrap();
                assert_eq!(a.holds, b.holds);
                assert_eq!(a.first_failure, b.first_failure);
                assert_eq!(a.tested, b.tested);
            }
        }
    }

    #[test]
    fn golden_interconnections_hold() {
        let wall = metallic_wall(1, 2, 16);
        let report = check_interconnection(&wall, InterconnectionFamily::Golden).unwrap();
        assert!(report.holds);
        assert_eq!(report.first_failure, None);
        // 15 cells from the shifted relation, 17 from the equality.
        assert_eq!(report.cells, 32);
    }

    #[test]
    fn silver_interconnections_hold() {
        let wall = metallic_wall(2, 3, 16);
        let report = check_interconnection(&wall, InterconnectionFamily::Silver).unwrap();
        assert!(report.holds, "first failure {:?}", report.first_failure);
    }

    #[test]
    fn bronze_and_platinum_interconnections_hold() {
        let bronze = metallic_wall(3, 4, 20);
        let report = check_interconnection(&bronze, InterconnectionFamily::Bronze).unwrap();
        assert!(report.holds, "first failure {:?}", report.first_failure);
        assert!(report.cells > 0);

        let platinum = metallic_wall(4, 5, 14);
        let report = check_interconnection(&platinum, InterconnectionFamily::Platinum).unwrap();
        assert!(report.holds, "first failure {:?}", report.first_failure);
    }

    #[test]
    fn the_tail_shift_law_holds_for_small_k() {
        for k in 1..=4u32 {
            let wall = metallic_wall(k as u64, k + 1, 12);
            let report =
                check_interconnection(&wall, InterconnectionFamily::MetallicShift { k }).unwrap();
            assert!(report.holds, "k = {k}: {:?}", report.first_failure);
            assert!(report.cells > 0);
        }
    }

    #[test]
    fn the_ladder_shift_law_subsumes_the_silver_family() {
        let wall = metallic_wall(2, 3, 14);
        let family = check_interconnection(&wall, InterconnectionFamily::Silver).unwrap();
        let ladder =
            check_interconnection(&wall, InterconnectionFamily::LadderShift { k: 2 }).unwrap();
        assert!(family.holds && ladder.holds);
    }

    #[test]
    fn missing_shifts_are_a_coverage_error() {
        let wall = metallic_wall(1, 1, 10);
        match check_interconnection(&wall, InterconnectionFamily::Golden) {
            Err(Error::WallCoverage { shift: 2, min: 0, max: 1 }) => {}
            other => panic!("expected a coverage error, got {other:?}"),
        }
    }

    #[test]
    fn verify_conjecture_passes_for_the_golden_wall() {
        let report = verify_conjecture(1, 12, None, WallEngine::Naive).unwrap();
        assert!(report.all_pass);
        assert!(!report.budget_exceeded);
        assert_eq!(report.rows.len(), 3);
        let first = &report.rows[0];
        assert_eq!(first.values_prefix, ints(&[1, 1, 1, 0, -1]));
        assert_eq!(first.periodicity.p, 4);
        assert_eq!(first.periodicity.sign, -1);
        assert_eq!(first.periodicity.detected, Some((4, -1)));
        assert_eq!(first.interconnection_holds, None);
        assert_eq!(report.rows[1].interconnection_holds, Some(true));
    }

    #[test]
    fn verify_conjecture_checks_claims_beyond_detection_range() {
        // 14 entries witness the claimed 12-periodicity at 2 cells but are
        // too short for minimal-period detection.
        let report = verify_conjecture(2, 13, None, WallEngine::Naive).unwrap();
        assert!(report.all_pass);
        for row in &report.rows {
            assert_eq!(row.periodicity.p, 12);
            assert_eq!(row.periodicity.sign, 1);
            assert!(row.periodicity.holds);
            assert!(row.periodicity.cells >= 2);
            assert_eq!(row.periodicity.detected, None);
        }
    }

    #[test]
    fn an_exhausted_budget_truncates_the_report() {
        let report = verify_conjecture(1, 10, Some(0.0), WallEngine::Naive).unwrap();
        assert!(report.budget_exceeded);
        assert!(report.rows.is_empty());
        assert!(report.all_pass, "no computed row failed");
    }

    #[test]
    fn a_range_too_short_to_falsify_passes_vacuously() {
        // Four entries per row cannot hold one Somos-6 window, so the
        // recurrence check has nothing to test; the report still succeeds
        // and exposes the empty range through `tested == 0`.
        let report = verify_conjecture(2, 3, None, WallEngine::Naive).unwrap();
        assert!(report.all_pass);
        assert!(!report.budget_exceeded);
        assert_eq!(report.rows.len(), 4);
        for row in &report.rows {
            assert!(row.recurrence.holds);
            assert_eq!(row.recurrence.tested, 0);
        }
    }

    #[test]
    fn golden_initial_values_determine_the_period() {
        // The equation at base 3 is uninformative (its cofactor is the zero
        // entry); the one at base 4 works because periodicity has already
        // supplied entry 8.
        let seed: Vec<Option<Coefficient>> =
            [1, 1, 1, 0].iter().map(|&v| Some(coeff_int(v))).collect();
        let solved =
            solve_initial_segment(&seed, 16, RecurrenceSpec::Somos4, Some((8, 1))).unwrap();
        let wall = metallic_wall(1, 0, 15);
        assert_eq!(solved, wall.row(0));
    }

    #[test]
    fn silver_outer_rows_recover_from_six_entries() {
        for idx in [0, 3] {
            let period = &SILVER_PERIODS[idx];
            let seed: Vec<Option<Coefficient>> =
                period[..6].iter().map(|&v| Some(coeff_int(v))).collect();
            let solved =
                solve_initial_segment(&seed, 24, RecurrenceSpec::Somos6, Some((12, 1))).unwrap();
            let mut expected = ints(period);
            expected.extend(ints(period));
            assert_eq!(solved, expected, "row {idx}");
        }
    }

    #[test]
    fn silver_middle_rows_are_two_valued_and_reported_as_such() {
        // For rows 1 and 2 the constraints genuinely admit two completions:
        // entries 8 and 10 of the period can be their displayed values or
        // both zero. The solver must stop at exactly that pair rather than
        // guess, and both completions must really satisfy everything the
        // solver was given.
        for idx in [1, 2] {
            let period = &SILVER_PERIODS[idx];
            let seed: Vec<Option<Coefficient>> =
                period[..6].iter().map(|&v| Some(coeff_int(v))).collect();
            match solve_initial_segment(&seed, 24, RecurrenceSpec::Somos6, Some((12, 1))) {
                Err(Error::UnderDetermined { unresolved }) => {
                    assert_eq!(unresolved, vec![8, 10, 20, 22], "row {idx}");
                }
                other => panic!("expected under-determination for row {idx}, got {other:?}"),
            }
            let displayed = (period[8], period[10]);
            for pair in [displayed, (0, 0)] {
                let mut candidate = *period;
                candidate[8] = pair.0;
                candidate[10] = pair.1;
                let mut row = ints(&candidate);
                row.extend(ints(&candidate));
                let report = check_recurrence(&row, RecurrenceSpec::Somos6).unwrap();
                assert!(report.holds, "row {idx} completion {pair:?}");
                assert!(check_claimed_period(&row, 12, 1).holds);
            }
        }
    }

    #[test]
    fn contradictory_seeds_are_rejected() {
        let seed: Vec<Option<Coefficient>> =
            [1, 1, 1, 0, 1].iter().map(|&v| Some(coeff_int(v))).collect();
        match solve_initial_segment(&seed, 16, RecurrenceSpec::Somos4, Some((8, 1))) {
            Err(Error::InconsistentConstraint { .. }) => {}
            other => panic!("expected an inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn sparse_seeds_are_under_determined() {
        let seed = vec![Some(coeff_int(1))];
        match solve_initial_segment(&seed, 16, RecurrenceSpec::Somos4, Some((8, 1))) {
            Err(Error::UnderDetermined { unresolved }) => {
                assert!(!unresolved.is_empty());
                assert!(!unresolved.contains(&0));
                assert!(!unresolved.contains(&8));
            }
            other => panic!("expected under-determination, got {other:?}"),
        }
    }

    #[test]
    fn beyond_wall_prefixes_compare_exactly() {
        let wall = metallic_wall(1, 4, 15);
        let expected = ints(&[1, 2, 0, -2, -3, -4, 0, 4, 5, 6, 0, -6, -7, -8, 0, 8]);
        let report = check_beyond_wall(wall.row(4), &expected);
        assert!(report.matches);
        assert_eq!(report.compared, 16);

        let mut perturbed = expected.clone();
        perturbed[7] = coeff_int(-4);
        let report = check_beyond_wall(wall.row(4), &perturbed);
        assert!(!report.matches);
        assert_eq!(report.first_mismatch, Some(7));

        assert!(check_beyond_wall(wall.row(4), &[]).matches);
    }
}
