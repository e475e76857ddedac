//! Brute-force reference computations, written without the crate's Gröbner,
//! Hilbert series or Drozd–Roĭter code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cmtype_core::poly::{Monomial, Polynomial};
use cmtype_core::Rational;
use num_traits::Zero;

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, bottom) = rows.split_at_mut(r + 1);
        let pivot = &top[r];
        for row in bottom.iter_mut().filter(|row| !row[c].is_zero()) {
            let f = &row[c] / &pivot[c];
            for (x, p) in row.iter_mut().zip(pivot) {
                *x -= &f * p;
            }
        }
        r += 1;
    }
    r
}

/// `dim_k (k[x]/I)_d` from the span of `m·g` over all generators `g`.
pub fn hilbert_function(nvars: usize, gens: &[Polynomial], d: u32) -> usize {
    let basis = monomials(nvars, d);
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.degree() else { continue };
        if gd > d {
            continue;
        }
        for m in monomials(nvars, d - gd) {
            let p = g.mul_term(&Monomial::from_exponents(m), &Rational::from_integer(1.into()));
            rows.push(
                basis
                    .iter()
                    .map(|b| p.coefficient(&Monomial::from_exponents(b.clone())))
                    .collect(),
            );
        }
    }
    basis.len() - rank(rows)
}

/// Members of the numerical semigroup generated by `gens`, up to `bound`.
pub fn semigroup_members(gens: &[u64], bound: u64) -> BTreeSet<u64> {
    let mut seen = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(s) = frontier.pop() {
        for &g in gens {
            let t = s + g;
            if t <= bound && seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen
}

/// `λ(m̄²/xm)` for `k[[tˢ : s ∈ S]]` with `x = t^{a₁}`, counted on exponents:
/// `m̄²` is every `tˢ` with `s ≥ 2a₁`, `xm` is `t^{a₁+s}` for nonzero `s ∈ S`.
/// The difference is empty past `bound`, so the count is exact.
pub fn semigroup_lambda(gens: &[u64]) -> u64 {
    let a = *gens.iter().min().unwrap();
    let bound = 2 * a * gens.iter().max().unwrap() + 2 * a;
    let s = semigroup_members(gens, bound);
    s.iter()
        .filter(|&&v| v >= 2 * a && !(v - a > 0 && s.contains(&(v - a))))
        .count() as u64
}

/// Gaps of `S` in `[a₁, 2a₁)`: the dimension of `(R + mS)/(R + m²S)` with
/// `S = k[[t]]`.
pub fn semigroup_gap_count(gens: &[u64]) -> u64 {
    let a = *gens.iter().min().unwrap();
    let s = semigroup_members(gens, 2 * a);
    (a..2 * a).filter(|v| !s.contains(v)).count() as u64
}

/// `λ(m̄²/xm)` for the cone over points `[uᵢ : vᵢ]` of the projective line,
/// on truncated branch vectors.
///
/// Branch `i` is parametrized by `t ↦ (uᵢ t, vᵢ t)`; a form of degree `j`
/// becomes `f(uᵢ, vᵢ) tʲ`. An element of degree `j` lies in `m̄²` when it has
/// order at least two on every branch. `xm` is spanned by the products of the
/// reduction with forms of positive degree.
pub fn arrangement_lambda(directions: &[(Rational, Rational)], reduction: (Rational, Rational), max_degree: u32) -> u64 {
    let eval = |a: u32, j: u32| -> Vec<Rational> {
        directions
            .iter()
            .map(|(u, v)| num_traits::pow(u.clone(), a as usize) * num_traits::pow(v.clone(), (j - a) as usize))
            .collect()
    };
    let red: Vec<Rational> = directions
        .iter()
        .map(|(u, v)| &reduction.0 * u + &reduction.1 * v)
        .collect();
    let mut lambda = 0i64;
    for j in 1..=max_degree {
        let image: Vec<Vec<Rational>> = (0..=j).map(|a| eval(a, j)).collect();
        // Order of t^j·w on a branch is j, or infinite where w vanishes.
        let closure: Vec<Vec<Rational>> = if j >= 2 {
            image.clone()
        } else {
            // A degree-one element needs w = 0 on every branch; in a reduced
            // ring that is the zero element.
            Vec::new()
        };
        let xm: Vec<Vec<Rational>> = if j >= 2 {
            (0..j)
                .map(|a| eval(a, j - 1).iter().zip(&red).map(|(w, r)| w * r).collect())
                .collect()
        } else {
            Vec::new()
        };
        lambda += rank(closure) as i64 - rank(xm) as i64;
    }
    lambda as u64
}

/// Socle dimension of `k[x]/J` for a monomial ideal `J` of finite colength:
/// standard monomials killed by every variable.
pub fn monomial_socle(nvars: usize, gens: &[Vec<u32>]) -> usize {
    let in_ideal = |m: &[u32]| gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b));
    let top: u32 = gens.iter().flatten().copied().max().unwrap_or(0) * nvars as u32 + 1;
    let mut count = 0;
    for d in 0..=top {
        for m in monomials(nvars, d) {
            if in_ideal(&m) {
                continue;
            }
            let killed = (0..nvars).all(|i| {
                let mut up = m.clone();
                up[i] += 1;
                in_ideal(&up)
            });
            if killed {
                count += 1;
            }
        }
    }
    count
}
