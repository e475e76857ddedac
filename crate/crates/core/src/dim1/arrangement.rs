use alloc::vec::Vec;

use num_traits::Zero;

use super::DrozdRoiterReport;
use crate::linalg::rank;
use crate::poly::{monomials_of_degree, Polynomial, VariableSet};
use crate::{Error, Rational, Result};

/// Distinct lines through the origin of the plane, with a linear form to
/// serve as minimal reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    variables: VariableSet,
    lines: Vec<Polynomial>,
    reduction: Polynomial,
    /// A point on each line: `(b, -a)` for `a·x + b·y`.
    directions: Vec<[Rational; 2]>,
}

fn linear_pair(p: &Polynomial) -> Option<[Rational; 2]> {
    if p.nvars() != 2 || p.degree() != Some(1) || !p.is_homogeneous() {
        return None;
    }
    let c = p.linear_coefficients();
    Some([c[0].clone(), c[1].clone()])
}

impl LineArrangement {
    pub fn new(variables: VariableSet, lines: Vec<Polynomial>, reduction: Polynomial) -> Result<Self> {
        if variables.len() != 2 {
            return Err(Error::InvalidArgument("line arrangements live in two variables".into()));
        }
        let mut directions = Vec::with_capacity(lines.len());
        for (index, l) in lines.iter().enumerate() {
            let [a, b] = linear_pair(l).ok_or(Error::NotLinearForm { index })?;
            directions.push([b, -a]);
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (p, q) = (&directions[i], &directions[j]);
                if (&p[0] * &q[1] - &p[1] * &q[0]).is_zero() {
                    return Err(Error::ProportionalLines { first: i, second: j });
                }
            }
        }
        let r = linear_pair(&reduction).ok_or(Error::NotLinearForm { index: lines.len() })?;
        for (line, d) in directions.iter().enumerate() {
            if (&r[0] * &d[0] + &r[1] * &d[1]).is_zero() {
                return Err(Error::ReductionVanishes { line });
            }
        }
        Ok(LineArrangement {
            variables,
            lines,
            reduction,
            directions,
        })
    }

    pub fn variables(&self) -> &VariableSet {
        &self.variables
    }

    pub fn lines(&self) -> &[Polynomial] {
        &self.lines
    }

    pub fn reduction(&self) -> &Polynomial {
        &self.reduction
    }

    /// The defining binary form, the product of the lines.
    pub fn form(&self) -> Polynomial {
        self.lines.iter().fold(Polynomial::one(2), |acc, l| &acc * l)
    }

    /// Value of a degree-`j` form on each branch at `t = 1`: the coefficient
    /// of `tʲ` in its restriction.
    fn on_branches(&self, p: &Polynomial) -> Vec<Rational> {
        self.directions
            .iter()
            .map(|[u, v]| {
                p.terms().iter().fold(Rational::zero(), |acc, (m, c)| {
                    acc + c * num_traits::pow(u.clone(), m.exponent(0) as usize) * num_traits::pow(v.clone(), m.exponent(1) as usize)
                })
            })
            .collect()
    }

    /// Rank of the image of `R_j` in `S_j = kʳ`, optionally premultiplied by the reduction.
    fn image_rank(&self, j: u32, times_reduction: bool) -> usize {
        let rows: Vec<Vec<Rational>> = monomials_of_degree(2, j)
            .into_iter()
            .map(|m| {
                let p = Polynomial::term(m, Rational::from_integer(1.into()));
                let p = if times_reduction { &p * &self.reduction } else { p };
                self.on_branches(&p)
            })
            .collect();
        rank(&rows)
    }
}

/// `e = r` and `λ = Σ_{j≥2} (dim R_j − dim x̃R_{j−1})` inside `S = k[t]ʳ`.
///
/// Every form of degree at least two has order at least two on each branch,
/// and a nonzero linear form cannot, so `m̄²` is `R_{≥2}`. Summation stops
/// once two consecutive degrees past `r` contribute nothing.
pub fn arrangement_dr(arr: &LineArrangement) -> DrozdRoiterReport {
    let r = arr.lines.len() as u32;
    let mut lambda = 0u64;
    let mut quiet = 0;
    let mut j = 2u32;
    while !(quiet >= 2 && j > r + 1) {
        let c = arr.image_rank(j, false) - arr.image_rank(j - 1, true);
        lambda += c as u64;
        quiet = if c == 0 { quiet + 1 } else { 0 };
        j += 1;
    }
    DrozdRoiterReport::new(r as u64, lambda, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn arr(lines: &[&str], red: &str) -> Result<LineArrangement> {
        let vars = VariableSet::new(&["x", "y"]).unwrap();
        let ls = lines.iter().map(|l| parse_polynomial(l, &vars).unwrap()).collect();
        let red = parse_polynomial(red, &vars).unwrap();
        LineArrangement::new(vars, ls, red)
    }

    #[test]
    fn four_lines() {
        let r = arrangement_dr(&arr(&["y", "x", "x - y", "x + y"], "x + 2*y").unwrap());
        assert_eq!((r.e, r.lambda, r.finite_type), (4, 2, false));
    }

    #[test]
    fn two_and_three_lines() {
        let r = arrangement_dr(&arr(&["x", "y"], "x + y").unwrap());
        assert_eq!((r.e, r.lambda, r.finite_type), (2, 0, true));
        let r = arrangement_dr(&arr(&["x", "y", "x + y"], "x + 2*y").unwrap());
        assert_eq!((r.e, r.lambda, r.finite_type), (3, 1, true));
    }

    #[test]
    fn validation() {
        assert_eq!(arr(&["x", "2*x"], "y").unwrap_err(), Error::ProportionalLines { first: 0, second: 1 });
        assert_eq!(arr(&["x", "y"], "x").unwrap_err(), Error::ReductionVanishes { line: 0 });
        assert_eq!(arr(&["x", "y^2"], "x + y").unwrap_err(), Error::NotLinearForm { index: 1 });
    }
}
