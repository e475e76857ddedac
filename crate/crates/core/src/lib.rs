//! Graded invariants and Cohen–Macaulay representation type of standard graded
//! rings presented as `k[x₁..xₙ]/I`, computed over exact rationals.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; file handling, report formats and the command line
//! live in the `cmtype` crate.
//!
//! Layout, bottom-up:
//!
//! - [`poly`]: monomials, polynomials, monomial orders, the presentation parser.
//! - [`groebner`]: Buchberger's algorithm, normal forms, presentation minimalization.
//! - [`invariants`]: Hilbert series, h-vector, multiplicity, Cohen–Macaulay type.
//! - [`singularity`]: Jacobian-criterion singular locus.
//! - [`dim1`]: Drozd–Roĭter lengths for semigroup rings and line arrangements.
//! - [`families`]: scrolls, Veronese cones, quadrics, binary forms, catalog matching.
//! - [`classifier`]: the decision procedure producing a [`classifier::Verdict`].

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classifier;
pub mod dim1;
mod error;
pub mod families;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod singularity;

pub use error::{BudgetKind, Error, Result};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Resource caps shared by every computation that can run away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pairs reduced in one Buchberger run.
    pub max_pairs: usize,
    /// Maximum total degree of any Gröbner basis element.
    pub max_degree: u32,
    /// Maximum number of Jacobian minors expanded for a singular locus.
    pub max_minors: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 50_000,
            max_degree: 40,
            max_minors: 20_000,
        }
    }
}

/// Options threaded through the invariant and classification pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub limits: Limits,
    /// Seed for the linear system of parameters search.
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            limits: Limits::default(),
            seed: 1,
        }
    }
}
