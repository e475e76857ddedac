use alloc::vec::Vec;

use super::series::HilbertSeries;
use crate::groebner::{buchberger_with_limits, GroebnerBasis, IdealPresentation};
use crate::poly::{Monomial, MonomialOrder};
use crate::{Error, Limits, Result};

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `k[x₁..xₙ]/I`
/// for a monomial ideal `I`, lowest degree first, trailing zeros trimmed.
///
/// Pivot recursion: for a variable `v` shared by two generators and
/// `p = v^e` with `e` its least positive exponent,
/// `N(I) = N(I + (p)) + t^e·N(I : p)`. Pairwise coprime generators give
/// `∏(1 - t^deg)`. The unit ideal gives the empty (zero) numerator.
pub fn hilbert_numerator(ideal: &IdealPresentation) -> Result<Vec<i64>> {
    let mut gens = Vec::with_capacity(ideal.generators().len());
    for (index, g) in ideal.generators().iter().enumerate() {
        if !g.is_monomial() {
            return Err(Error::NonMonomialGenerator { index });
        }
        gens.push(g.terms()[0].0.clone());
    }
    Ok(trim(numerator(minimal(gens), ideal.nvars())))
}

/// Hilbert series of `k[x]/I` through the initial ideal of a degrevlex basis.
pub fn hilbert_series(ideal: &IdealPresentation, limits: &Limits) -> Result<HilbertSeries> {
    series_and_basis(ideal, limits).map(|(s, _)| s)
}

pub(crate) fn series_and_basis(ideal: &IdealPresentation, limits: &Limits) -> Result<(HilbertSeries, GroebnerBasis)> {
    ideal.require_homogeneous()?;
    let gb = buchberger_with_limits(ideal, MonomialOrder::DegRevLex, limits)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let num = trim(numerator(minimal(gb.leading_monomials()), ideal.nvars()));
    Ok((HilbertSeries::from_numerator(num, ideal.nvars()), gb))
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn minimal(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn numerator(gens: Vec<Monomial>, n: usize) -> Vec<i64> {
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let mut count = alloc::vec![0usize; n];
    for g in &gens {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let Some(v) = (0..n).filter(|&v| count[v] >= 2).max_by_key(|&v| (count[v], core::cmp::Reverse(v))) else {
        let mut acc = alloc::vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (i, c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    };
    let e = gens
        .iter()
        .map(|g| g.exponent(v))
        .filter(|&k| k > 0)
        .min()
        .unwrap();
    let mut pe = alloc::vec![0u32; n];
    pe[v] = e;
    let p = Monomial::from_exponents(pe);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !p.divides(g)).cloned().collect();
    plus.push(p.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&p)).unwrap()).collect();

    let mut acc = numerator(minimal(plus), n);
    add_shifted(&mut acc, &numerator(minimal(colon), n), e as usize);
    acc
}
