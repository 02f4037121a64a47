//! Exact arithmetic for q-deformations of rationals and quadratic irrationals.
//!
//! The q-deformation of a rational number `p/s` is a rational function of the
//! formal variable `q`; the q-deformation of a quadratic irrational is a formal
//! power series in `q` with integer coefficients. Both specialize to the
//! original number at `q = 1`. This crate builds those objects exactly
//! (arbitrary-precision rational coefficients, no floating point anywhere),
//! expands power series into several kinds of generalized continued fractions,
//! computes shifted Hankel determinants of coefficient sequences, and checks
//! the periodicity, Somos, and Gale-Robinson patterns those determinants
//! exhibit.
//!
//! Module map:
//! - [`coeff`]: the exact coefficient type (arbitrary-precision rationals).
//! - [`poly`]: dense polynomials in `q`.
//! - [`series`]: truncated power series with explicit order tracking, plus a
//!   solver for quadratic functional equations.
//! - [`qreal`]: q-integers, q-rationals (two independent continued-fraction
//!   routes, cross-checked), q-deformed metallic numbers and general quadratic
//!   irrationals.
//! - [`cfrac`]: generalized continued fractions (C-, J-, H-, and
//!   super-delta-fractions): evaluation, expansion with certified order, and a
//!   catalog of named closed forms used by the test suite.
//! - [`hankel`]: exact determinants (fraction-free elimination), shifted
//!   Hankel walls, the ladder formula for determinants of a
//!   super-delta-fraction, and reconstruction of a series from four wall rows.
//! - [`recurrences`]: Somos-4/6 and Gale-Robinson checks, (anti)periodicity
//!   detection, interconnection laws between wall rows, the desk-scale
//!   conjecture verifier, and an initial-segment constraint solver.
//! - [`serialize`]: deterministic text formats (plain, JSON, CSV, b-file).

pub mod cfrac;
pub mod coeff;
pub mod hankel;
pub mod poly;
pub mod qreal;
pub mod recurrences;
pub mod serialize;
pub mod series;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
