//! proptest generators for polynomials and ideals.

#![allow(dead_code)]

use cmtype_core::groebner::RingPresentation;
use cmtype_core::poly::{Monomial, Polynomial, VariableSet};
use cmtype_core::Rational;
use proptest::prelude::*;

use crate::oracle::monomials;

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound).prop_map(|c| Rational::from_integer(c.into()))
}

/// A homogeneous polynomial of degree `d`: a few random terms with small
/// integer coefficients, possibly zero.
pub fn homogeneous(n: usize, d: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let basis = monomials(n, d);
    let len = basis.len();
    prop::collection::vec((0..len, -3i64..=3), 1..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            n,
            terms
                .into_iter()
                .map(|(i, c)| (Monomial::from_exponents(basis[i].clone()), Rational::from_integer(c.into()))),
        )
    })
}

/// Any polynomial of degree at most `d`.
pub fn polynomial(n: usize, d: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0..=d).prop_flat_map(move |k| homogeneous(n, k, 2)), 0..4)
        .prop_map(move |parts| parts.iter().fold(Polynomial::zero(n), |acc, p| &acc + p))
}

/// A homogeneous ideal with 1 to `max_gens` nonzero generators of degree 1..=3.
pub fn ideal(n: usize, max_gens: usize) -> impl Strategy<Value = RingPresentation> {
    prop::collection::vec((1u32..=3).prop_flat_map(move |d| homogeneous(n, d, 3)), 1..=max_gens)
        .prop_filter("nonzero generators", |gens| gens.iter().all(|g| !g.is_zero()))
        .prop_map(move |gens| RingPresentation::from_generators(VariableSet::indexed("x", n, false), gens).unwrap())
}

/// An invertible `n × n` integer matrix, as linear forms `xᵢ ↦ Σ aᵢⱼ xⱼ`.
pub fn linear_change(n: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), n)
        .prop_filter("invertible", move |m| {
            let rows = m
                .iter()
                .map(|r| r.iter().map(|&c| Rational::from_integer(c.into())).collect())
                .collect();
            crate::oracle::rank(rows) == n
        })
        .prop_map(move |m| {
            m.iter()
                .map(|r| Polynomial::linear_form(&r.iter().map(|&c| Rational::from_integer(c.into())).collect::<Vec<_>>()))
                .collect()
        })
}
