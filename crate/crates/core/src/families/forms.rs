//! Linear-equivalence invariants of single forms.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::rank;
use crate::poly::univariate::UniPoly;
use crate::poly::Polynomial;
use crate::{Error, Rational, Result};

/// Rank of the symmetric matrix of a quadratic form.
pub fn quadric_rank(f: &Polynomial) -> Result<usize> {
    if f.is_zero() || f.degree() != Some(2) || !f.is_homogeneous() {
        return Err(Error::NotQuadric);
    }
    let n = f.nvars();
    let half = Rational::new(1.into(), 2.into());
    let mut m = alloc::vec![alloc::vec![Rational::zero(); n]; n];
    for (mono, c) in f.terms() {
        let s: Vec<usize> = mono.support().collect();
        match s.as_slice() {
            [i] => m[*i][*i] = c.clone(),
            [i, j] => {
                m[*i][*j] = c * &half;
                m[*j][*i] = c * &half;
            }
            _ => unreachable!("quadratic monomial"),
        }
    }
    Ok(rank(&m))
}

/// Root multiplicities of a binary form over the algebraic closure,
/// descending.
///
/// The power of the second variable accounts for the root `[1:0]`; the rest is
/// dehomogenized and split by Yun's squarefree decomposition, contributing
/// `deg gᵢ` copies of `i`.
pub fn binary_form_profile(f: &Polynomial) -> Result<Vec<u32>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != 2 || !f.is_homogeneous() || f.degree() == Some(0) {
        return Err(Error::NotBinaryForm);
    }
    let d = f.degree().unwrap();
    let at_infinity = f.terms().iter().map(|(m, _)| m.exponent(1)).min().unwrap();
    let mut coeffs = alloc::vec![Rational::zero(); (d - at_infinity) as usize + 1];
    for (m, c) in f.terms() {
        coeffs[m.exponent(0) as usize] = c.clone();
    }
    let mut profile: Vec<u32> = Vec::new();
    for (i, g) in UniPoly::new(coeffs).squarefree_decomposition() {
        profile.extend(core::iter::repeat_n(i, g.degree().unwrap()));
    }
    if at_infinity > 0 {
        profile.push(at_infinity);
    }
    profile.sort_unstable_by(|a, b| b.cmp(a));
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VariableSet};

    fn poly(s: &str, vars: &[&str]) -> Polynomial {
        parse_polynomial(s, &VariableSet::new(vars).unwrap()).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(quadric_rank(&poly("x^2+y^2+z^2", &["x", "y", "z"])), Ok(3));
        assert_eq!(quadric_rank(&poly("x*y", &["x", "y"])), Ok(2));
        assert_eq!(quadric_rank(&poly("(x+y)^2", &["x", "y"])), Ok(1));
        assert_eq!(quadric_rank(&poly("x^3", &["x", "y"])), Err(Error::NotQuadric));
    }

    #[test]
    fn profiles() {
        let p = |s| binary_form_profile(&poly(s, &["x", "y"])).unwrap();
        assert_eq!(p("x^3*y - x*y^3"), [1, 1, 1, 1]);
        assert_eq!(p("x*y^2"), [2, 1]);
        assert_eq!(p("y^2"), [2]);
        assert_eq!(p("x^2 + y^2"), [1, 1]);
        assert_eq!(p("(x - 2*y)^3*(x + y)"), [3, 1]);
        assert_eq!(binary_form_profile(&poly("0", &["x", "y"])), Err(Error::ZeroPolynomial));
    }
}
