use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::groebner::{buchberger_with_limits, RingPresentation};
use crate::invariants::{hilbert_series, is_linear_nonzerodivisor};
use crate::linalg::solve;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::{Error, Limits, Rational, Result};

/// Degree-two rewriting `u² = x·ℓ₁`, `uv = x·ℓ₂`, `v² = x·ℓ₃` in a ring
/// with `m² = x·m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionData {
    pub x_index: usize,
    pub u_index: usize,
    pub v_index: usize,
    /// Names of the degree-one basis, the ring variables in order.
    pub basis: Vec<String>,
    /// Rows: coefficients of `ℓ₁, ℓ₂, ℓ₃` over `basis`.
    pub a: Vec<Vec<Rational>>,
    /// `(j, (a₁ⱼ, a₂ⱼ, a₃ⱼ))` for every column other than `x, u, v`.
    pub f_coeffs: Vec<(usize, [Rational; 3])>,
    /// Each rewritten identity reduces to zero in the ring.
    pub residuals_zero: bool,
}

/// Solves for the rewrite rows by exact linear algebra in degree two.
///
/// The presentation must have no linear generators, so its variables form a
/// basis of the degree-one part; the ring must be one-dimensional with
/// h-vector `(1, n)`, and `x` a nonzerodivisor.
pub fn rewrite_in_xm(pres: &RingPresentation, x_index: usize, u_index: usize, v_index: usize, limits: &Limits) -> Result<ObstructionData> {
    let n = pres.nvars();
    for i in [x_index, u_index, v_index] {
        if i >= n {
            return Err(Error::InvalidIndex(i));
        }
    }
    if pres.has_linear_generators() {
        return Err(Error::NotMinimalized);
    }
    let series = hilbert_series(pres.ideal(), limits)?;
    if series.dim != 1 || series.hvector.len() > 2 {
        return Err(Error::NotMinimalMultiplicity);
    }
    let x = Polynomial::var(n, x_index);
    if !is_linear_nonzerodivisor(pres, &x, limits)? {
        return Err(Error::NotNonzeroDivisor { index: x_index });
    }
    let gb = buchberger_with_limits(pres.ideal(), MonomialOrder::DegRevLex, limits)?;
    let images: Vec<Polynomial> = (0..n).map(|j| gb.normal_form(&(&x * &Polynomial::var(n, j)))).collect();
    let mut coords: BTreeMap<Monomial, usize> = BTreeMap::new();
    let u = Polynomial::var(n, u_index);
    let v = Polynomial::var(n, v_index);
    let targets = [&u * &u, &u * &v, &v * &v].map(|t| gb.normal_form(&t));
    for p in images.iter().chain(targets.iter()) {
        for (m, _) in p.terms() {
            let k = coords.len();
            coords.entry(m.clone()).or_insert(k);
        }
    }
    let vector = |p: &Polynomial| {
        let mut out = alloc::vec![Rational::zero(); coords.len()];
        for (m, c) in p.terms() {
            out[coords[m]] = c.clone();
        }
        out
    };
    let cols: Vec<Vec<Rational>> = images.iter().map(vector).collect();
    let matrix: Vec<Vec<Rational>> = (0..coords.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let mut a = Vec::with_capacity(3);
    let mut residuals_zero = true;
    for (t, raw) in targets.iter().zip([&u * &u, &u * &v, &v * &v]) {
        let row = if coords.is_empty() {
            Some(alloc::vec![Rational::zero(); n])
        } else {
            solve(&matrix, &vector(t))
        };
        let row = row.ok_or(Error::InconsistentRewrite)?;
        let l = Polynomial::linear_form(&row);
        residuals_zero &= gb.normal_form(&(&raw - &(&x * &l))).is_zero();
        a.push(row);
    }
    if !residuals_zero {
        return Err(Error::InconsistentRewrite);
    }
    let f_coeffs = (0..n)
        .filter(|j| ![x_index, u_index, v_index].contains(j))
        .map(|j| (j, [a[0][j].clone(), a[1][j].clone(), a[2][j].clone()]))
        .collect();
    Ok(ObstructionData {
        x_index,
        u_index,
        v_index,
        basis: pres.variables().names().to_vec(),
        a,
        f_coeffs,
        residuals_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_presentation;

    fn ring(text: &str) -> RingPresentation {
        parse_presentation(text).unwrap().presentation
    }

    fn ints(rows: &[Vec<Rational>]) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        rows.iter().map(|r| r.iter().map(|c| c.to_integer().to_i64().unwrap()).collect()).collect()
    }

    #[test]
    fn four_coordinate_lines() {
        let r = ring("ring: x,u,v,w ; ideal: u*v, u*w, v*w, u^2 - x*u, v^2 - x*v, w^2 - x*w");
        let o = rewrite_in_xm(&r, 0, 1, 2, &Limits::default()).unwrap();
        assert_eq!(ints(&o.a), [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]]);
        assert!(o.residuals_zero);
        assert_eq!(o.f_coeffs.len(), 1);
    }

    #[test]
    fn zero_products() {
        // k[x,u,v,w]/(u,v,w)²: every product of u, v, w vanishes
        let r = ring("ring: x,u,v,w ; ideal: u^2, u*v, u*w, v^2, v*w, w^2");
        let o = rewrite_in_xm(&r, 0, 1, 2, &Limits::default()).unwrap();
        assert!(o.a.iter().flatten().all(Zero::is_zero));
    }

    #[test]
    fn zero_divisor_rejected() {
        let r = ring("ring: x,y,z ; ideal: x*y, y*z, z^2");
        assert_eq!(
            rewrite_in_xm(&r, 0, 1, 2, &Limits::default()),
            Err(Error::NotNonzeroDivisor { index: 0 })
        );
    }
}
