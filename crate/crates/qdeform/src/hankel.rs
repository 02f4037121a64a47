//! Hankel determinants of power series, shifted-determinant walls, and
//! reconstruction of a series from its wall.
//!
//! The shifted Hankel determinant of a series `f = sum c_k q^k` is
//!
//! ```text
//! D(l, n) = det ( c_(l+i+j) )  for 0 <= i, j < n,
//! ```
//!
//! with `D(l, 0) = 1`. A *wall* collects the rows `n -> D(l, n)` for a range
//! of shifts `l`. Determinants are computed exactly, either directly
//! (fraction-free elimination) or, for large sizes, through the ladder
//! formula attached to the depth-2 staircase expansion of the shifted tail,
//! cross-checked against direct evaluation on a sample of entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::ops::RangeInclusive;

use crate::cfrac::{super_delta_expand, DeltaProfile};
use crate::coeff::Coefficient;
use crate::poly::QPolynomial;
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Exact determinant of a square integer matrix by single-step fraction-free
/// elimination. Each update is
///
/// ```text
/// a[i][j] <- (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / p
/// ```
///
/// where `p` is the previous pivot; every division is exact because the
/// intermediate entries are minors of the input. Pivots are chosen over the
/// whole remaining submatrix (the entry of smallest magnitude, ties broken
/// by row then column), which both certifies zero determinants by rank
/// deficiency and keeps the minors small. Consumes the matrix.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negated = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if a[i][j].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => a[i][j].magnitude() < a[bi][bj].magnitude(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            // The remaining submatrix is zero: rank < n.
            return BigInt::zero();
        };
        if pi != k {
            a.swap(k, pi);
            negated = !negated;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            negated = !negated;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero(), "fraction-free update must divide");
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if negated {
        -det
    } else {
        det
    }
}

/// Exact determinant of a square rational matrix. Each row is scaled to
/// integers by the least common multiple of its denominators (scaling a row
/// scales the determinant by the same factor), then the integer engine runs.
pub fn det_rational(rows: &[Vec<Coefficient>]) -> Coefficient {
    let n = rows.len();
    if n == 0 {
        return Coefficient::one();
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        assert_eq!(row.len(), n, "matrix must be square");
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        m.push(
            row.iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        );
        scale *= l;
    }
    Coefficient::new(bareiss_det(m), scale)
}

/// The `n x n` matrix of coefficients `c_(shift+i+j)` of `f`. Fails with
/// [`Error::InsufficientOrder`] when the top-right corner would read a
/// coefficient the truncation order does not certify.
pub fn hankel_matrix(
    f: &TruncatedSeries,
    shift: u32,
    n: usize,
) -> Result<Vec<Vec<Coefficient>>> {
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(f.coeff(shift as i64 + (i + j) as i64)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `D(shift, n)` computed directly from the coefficient matrix. This is the
/// reference path: no structure of `f` is assumed beyond its coefficients.
pub fn hankel_naive(f: &TruncatedSeries, shift: u32, n: u32) -> Result<Coefficient> {
    let m = hankel_matrix(f, shift, n as usize)?;
    Ok(det_rational(&m))
}

/// The ladder positions, signs, and leading units governing the determinants
/// of a depth-2 staircase, derived from its offset profile:
///
/// ```text
/// s_n = k_0 + ... + k_(n-1) + n,
/// eps_n = sum of k_i (k_i + 1) / 2 over i < n.
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderParameters {
    /// `s[m] = s_(m+1)`: the positions carrying nonzero determinants.
    pub s: Vec<u64>,
    /// `eps[m] = eps_(m+1)`: the exponent of the sign at that position.
    pub eps: Vec<u64>,
    /// The leading units `v_0, v_1, ...` straight from the profile.
    pub v: Vec<Coefficient>,
}

/// Reads the ladder positions and signs off a depth-2 staircase profile.
pub fn ladder_parameters(profile: &DeltaProfile) -> LadderParameters {
    assert_eq!(profile.delta, 2, "the ladder formula is specific to depth 2");
    let mut s = Vec::with_capacity(profile.k.len());
    let mut eps = Vec::with_capacity(profile.k.len());
    let mut s_acc = 0u64;
    let mut e_acc = 0u64;
    for &k in &profile.k {
        let k = k as u64;
        s_acc += k + 1;
        e_acc += k * (k + 1) / 2;
        s.push(s_acc);
        eps.push(e_acc);
    }
    LadderParameters {
        s,
        eps,
        v: profile.v.clone(),
    }
}

/// Hankel determinants `D(0, n)` for `n = 0..=n_max` of a series whose
/// depth-2 staircase has the given profile: position `s_n` carries
/// `(-1)^(eps_n) v_0^(s_n) v_1^(s_n - s_1) ... v_(n-1)^(s_n - s_(n-1))` and
/// every other position carries zero.
///
/// The profile must reach position `n_max` (or be terminated, in which case
/// a finite fraction is a rational function and all later determinants
/// vanish); otherwise [`Error::LadderTooShort`] reports how far it got.
pub fn ladder_determinants(profile: &DeltaProfile, n_max: u32) -> Result<Vec<Coefficient>> {
    assert_eq!(profile.delta, 2, "the ladder formula is specific to depth 2");
    assert_eq!(profile.k.len(), profile.v.len());
    let mut out = vec![Coefficient::zero(); n_max as usize + 1];
    out[0] = Coefficient::one();
    // Incremental form: s_(n+1) - s_i grows by k_n + 1 for every i <= n, so
    // D(s_(n+1)) = D(s_n) * (-1)^(k_n (k_n+1)/2) * (v_0 ... v_n)^(k_n + 1).
    let mut det = Coefficient::one();
    let mut vprod = Coefficient::one();
    let mut s = 0u64;
    for (&k, v) in profile.k.iter().zip(&profile.v) {
        let k = k as u64;
        vprod *= v;
        let mut step = vprod.pow((k + 1) as i32);
        if (k * (k + 1) / 2) % 2 == 1 {
            step = -step;
        }
        det *= step;
        s += k + 1;
        if s > n_max as u64 {
            return Ok(out);
        }
        out[s as usize] = det.clone();
    }
    if profile.terminated || s >= n_max as u64 {
        Ok(out)
    } else {
        Err(Error::LadderTooShort {
            reached: s as u32,
            needed: n_max,
        })
    }
}

/// The sign `(-1)^(k(k+1)/2)` relating determinant rows across one
/// staircase level of offset `k`.
pub fn layer_shift_sign(k: u32) -> i64 {
    let k = k as u64;
    if (k * (k + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Builds `f = q^k / (1 + q u - q^(k+2) g)` from an inner series `g` and a
/// polynomial `u` with `deg(u) <= k`. The rows of `f` and `g` then satisfy
/// `D_n(f) = layer_shift_sign(k) * D_(n-k-1)(g)`; see [`layer_shift_row`].
pub fn layered_series(k: u32, u: &QPolynomial, g: &TruncatedSeries) -> Result<TruncatedSeries> {
    assert!(
        u.degree().map(|d| d as u32 <= k).unwrap_or(true),
        "the shift lemma requires deg(u) <= k"
    );
    let den_order = g.order() + k as i64 + 2;
    let mut den = TruncatedSeries::from_poly(&QPolynomial::one().add(&u.shift_up(1)), den_order);
    den = den.sub(&g.clone().mul_poly(&QPolynomial::monomial(Coefficient::one(), k as usize + 2)));
    let num = TruncatedSeries::monomial(Coefficient::one(), k as i64, den_order + 2 * k as i64 + 1);
    num.div(&den)
}

/// Transports a determinant row through one staircase level:
/// `D_n(f) = sign * D_(n-k-1)(g)` for `n > k`, `D_0(f) = 1`, and
/// `D_n(f) = 0` for `1 <= n <= k`.
pub fn layer_shift_row(g_row: &[Coefficient], k: u32, n_max: u32) -> Vec<Coefficient> {
    let sign = layer_shift_sign(k);
    let mut out = vec![Coefficient::zero(); n_max as usize + 1];
    out[0] = Coefficient::one();
    for n in 1..=n_max as usize {
        if n > k as usize {
            let src = n - k as usize - 1;
            if let Some(value) = g_row.get(src) {
                out[n] = if sign < 0 { -value.clone() } else { value.clone() };
            }
        }
    }
    out
}

/// A block of shifted-determinant rows: `rows[r][n] = D(shift_min + r, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelWall {
    pub shift_min: u32,
    pub n_max: u32,
    pub rows: Vec<Vec<Coefficient>>,
}

impl HankelWall {
    /// The row of shift `l`. Panics if the wall does not contain it.
    pub fn row(&self, shift: u32) -> &[Coefficient] {
        assert!(shift >= self.shift_min, "shift below the wall range");
        &self.rows[(shift - self.shift_min) as usize]
    }

    /// The entry `D(shift, n)`. Panics if the wall does not contain it.
    pub fn entry(&self, shift: u32, n: u32) -> &Coefficient {
        &self.row(shift)[n as usize]
    }
}

/// How a wall is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallEngine {
    /// Every entry from its coefficient matrix. Cost grows quickly with
    /// `n_max` but assumes nothing.
    Naive,
    /// Rows from the ladder formula of each shifted tail's depth-2
    /// staircase, with `spot_checks` entries per row re-verified against the
    /// direct determinant. Disagreement is reported as
    /// [`Error::RouteMismatch`].
    Ladder { spot_checks: u32 },
    /// `Naive` up to `n_max = 30`, `Ladder { spot_checks: 5 }` beyond.
    Auto,
}

/// Direct determinants stay affordable up to this size; beyond it `Auto`
/// switches to the ladder engine.
const AUTO_NAIVE_LIMIT: u32 = 30;

/// Spot checks compare ladder rows against direct determinants, whose cost
/// grows quickly; sampled indices are capped at this size.
const SPOT_CHECK_SIZE_CAP: u32 = 36;

/// Computes the wall of `f` over the given shifts, `n = 0..=n_max`.
pub fn hankel_wall(
    f: &TruncatedSeries,
    shifts: RangeInclusive<u32>,
    n_max: u32,
    engine: WallEngine,
) -> Result<HankelWall> {
    let engine = match engine {
        WallEngine::Auto => {
            if n_max <= AUTO_NAIVE_LIMIT {
                WallEngine::Naive
            } else {
                WallEngine::Ladder { spot_checks: 5 }
            }
        }
        other => other,
    };
    let shift_min = *shifts.start();
    let mut rows = Vec::new();
    for shift in shifts {
        let row = match engine {
            WallEngine::Naive => {
                let mut row = Vec::with_capacity(n_max as usize + 1);
                for n in 0..=n_max {
                    row.push(hankel_naive(f, shift, n)?);
                }
                row
            }
            WallEngine::Ladder { spot_checks } => {
                let row = ladder_row(f, shift, n_max)?;
                verify_row_sample(f, shift, n_max, &row, spot_checks)?;
                row
            }
            WallEngine::Auto => unreachable!("resolved above"),
        };
        rows.push(row);
    }
    Ok(HankelWall {
        shift_min,
        n_max,
        rows,
    })
}

/// One wall row through the depth-2 staircase of the shifted tail.
fn ladder_row(f: &TruncatedSeries, shift: u32, n_max: u32) -> Result<Vec<Coefficient>> {
    let tail = f.shifted_tail(shift as i64);
    if tail.is_zero_to_order() {
        // A tail that vanishes to its whole certified window: determinants
        // are zero as far as the window reaches.
        let needed = 2 * n_max as i64 - 1;
        if tail.order() < needed {
            return Err(Error::InsufficientOrder {
                needed: shift as i64 + needed,
                have: f.order(),
            });
        }
        let mut row = vec![Coefficient::zero(); n_max as usize + 1];
        row[0] = Coefficient::one();
        return Ok(row);
    }
    let exp = super_delta_expand(&tail, 2, n_max as usize + 2)?;
    ladder_determinants(&exp.profile, n_max)
}

/// Re-verifies a sample of a ladder row against direct determinants.
fn verify_row_sample(
    f: &TruncatedSeries,
    shift: u32,
    n_max: u32,
    row: &[Coefficient],
    spot_checks: u32,
) -> Result<()> {
    if n_max == 0 || spot_checks == 0 {
        return Ok(());
    }
    let cap = n_max.min(SPOT_CHECK_SIZE_CAP);
    let count = spot_checks.min(cap);
    let mut checked = 0u32;
    for j in 1..=count {
        let n = (j * cap) / count;
        if n == 0 || n == checked {
            continue;
        }
        checked = n;
        let direct = hankel_naive(f, shift, n)?;
        if direct != row[n as usize] {
            return Err(Error::RouteMismatch {
                value: format!("determinant wall row at shift {}", shift),
                detail: format!(
                    "ladder formula gives {} at n = {}, direct evaluation gives {}",
                    row[n as usize], n, direct
                ),
            });
        }
    }
    Ok(())
}

/// The coefficient matrix `c_(shift+i+j)` built from an explicit prefix of
/// coefficients; indices beyond the prefix read as zero.
fn hankel_from_prefix(coeffs: &[Coefficient], shift: u32, n: u32) -> Vec<Vec<Coefficient>> {
    (0..n as usize)
        .map(|i| {
            (0..n as usize)
                .map(|j| {
                    coeffs
                        .get(shift as usize + i + j)
                        .cloned()
                        .unwrap_or_else(Coefficient::zero)
                })
                .collect()
        })
        .collect()
}

/// Reconstructs the first `coeff_count` coefficients of a power series from
/// its wall rows at shifts 0..=3.
///
/// Coefficient `c_k` sits in the lower-right corner of exactly two wall
/// entries: `D(0, k/2 + 1)` and `D(2, k/2)` for even `k`, `D(1, (k+1)/2)`
/// and `D(3, (k-1)/2)` for odd `k`. Expanding along that corner,
///
/// ```text
/// D(l, n) = D(l, n-1) * c_k + (determinant with the corner zeroed),
/// ```
///
/// so each entry whose principal cofactor `D(l, n-1)` is nonzero determines
/// `c_k`. If both cofactors vanish the wall does not determine the series
/// and [`Error::UnsolvableStep`] reports the stuck coefficient; if the
/// second entry disagrees with the reconstructed value,
/// [`Error::InconsistentWalls`] reports it.
pub fn reconstruct_from_walls(wall: &HankelWall, coeff_count: usize) -> Result<Vec<Coefficient>> {
    assert_eq!(wall.shift_min, 0, "reconstruction reads shifts 0..=3");
    assert!(wall.rows.len() >= 4, "reconstruction reads shifts 0..=3");
    let mut coeffs: Vec<Coefficient> = Vec::with_capacity(coeff_count);
    for k in 0..coeff_count {
        let targets: [(u32, u32); 2] = if k % 2 == 0 {
            [(0, k as u32 / 2 + 1), (2, k as u32 / 2)]
        } else {
            [(1, (k as u32 + 1) / 2), (3, (k as u32 - 1) / 2)]
        };
        for &(l, n) in &targets {
            assert!(
                (n as usize) < wall.rows[l as usize].len(),
                "wall rows too short to determine coefficient {}",
                k
            );
        }
        let solver = targets
            .iter()
            .copied()
            .find(|&(l, n)| n >= 1 && !wall.entry(l, n - 1).is_zero());
        let Some((l, n)) = solver else {
            return Err(Error::UnsolvableStep { index: k });
        };
        // The corner entry c_k is the only index not yet in `coeffs`, and
        // hankel_from_prefix reads missing indices as zero.
        let zeroed = det_rational(&hankel_from_prefix(&coeffs, l, n));
        let minor = wall.entry(l, n - 1);
        coeffs.push((wall.entry(l, n) - zeroed) / minor);
        for (l2, n2) in targets {
            if (l2, n2) == (l, n) || n2 == 0 {
                continue;
            }
            let full = det_rational(&hankel_from_prefix(&coeffs, l2, n2));
            if full != *wall.entry(l2, n2) {
                return Err(Error::InconsistentWalls { shift: l2, n: n2 });
            }
        }
    }
    Ok(coeffs)
}
