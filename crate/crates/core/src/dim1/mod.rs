//! Drozd–Roĭter lengths for one-dimensional rings whose normalization is
//! explicit: numerical semigroup rings and reduced line arrangements.
//!
//! For a minimal reduction `x` the conditions read `e ≤ 3` and
//! `λ(m̄²/xm) ≤ 1`, where `m̄²` is the integral closure of `m²`.

mod arrangement;
mod semigroup;

use alloc::vec::Vec;

pub use arrangement::{arrangement_dr, LineArrangement};
pub use semigroup::{semigroup_closure, semigroup_dr, semigroup_lambda_in_window, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrozdRoiterReport {
    pub e: u64,
    pub lambda: u64,
    pub dr1: bool,
    pub dr2: bool,
    pub finite_type: bool,
    /// Valuations spanning `m̄²/xm`, when the ring is a semigroup ring.
    pub witnesses: Vec<u64>,
}

impl DrozdRoiterReport {
    pub fn new(e: u64, lambda: u64, witnesses: Vec<u64>) -> Self {
        let dr1 = e <= 3;
        let dr2 = lambda <= 1;
        DrozdRoiterReport {
            e,
            lambda,
            dr1,
            dr2,
            finite_type: dr1 && dr2,
            witnesses,
        }
    }
}

/// Report for a reduced, Cohen–Macaulay, standard graded ring of dimension
/// one with h-vector `h`.
///
/// Such a ring is the cone over finitely many points, so its normalization is
/// a product of polynomial rings in one degree-one variable. A linear form
/// vanishing to order two on every branch is zero, hence `m̄² = m²` and
/// `λ(m²/xm) = Σ_{i≥2} hᵢ` for a linear nonzerodivisor `x`.
pub fn graded_reduced_dr(hvector: &[i64]) -> DrozdRoiterReport {
    let e = hvector.iter().sum::<i64>() as u64;
    let lambda = hvector.iter().skip(2).sum::<i64>() as u64;
    DrozdRoiterReport::new(e, lambda, Vec::new())
}
