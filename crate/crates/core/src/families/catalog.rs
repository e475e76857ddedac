//! Presentations of the named families.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::groebner::RingPresentation;
use crate::poly::{Polynomial, VariableSet};
use crate::{Error, Rational, Result};

/// Block sizes `0 ≤ a₀ ≤ … ≤ a_k` of a rational normal scroll.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScrollType(Vec<u32>);

impl ScrollType {
    /// Sorts the entries; at least one must be positive.
    pub fn new(mut a: Vec<u32>) -> Result<Self> {
        a.sort_unstable();
        if a.last().is_none_or(|&m| m == 0) {
            return Err(Error::InvalidScrollType);
        }
        Ok(ScrollType(a))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `k + 2` for `k + 1` blocks.
    pub fn dim(&self) -> usize {
        self.0.len() + 1
    }

    pub fn nvars(&self) -> usize {
        self.0.iter().map(|&a| a as usize + 1).sum()
    }

    /// `Σ aᵢ`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All types with exactly `n` variables and degree at least two,
    /// lexicographically ascending.
    pub fn with_nvars(n: usize) -> Vec<ScrollType> {
        fn rec(left: usize, min_part: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for part in min_part..=left {
                cur.push(part as u32 - 1);
                rec(left - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 1, &mut Vec::new(), &mut out);
        out.sort();
        out.into_iter()
            .map(ScrollType)
            .filter(|t| t.degree() >= 2)
            .collect()
    }
}

impl core::fmt::Display for ScrollType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

const BLOCK_LETTERS: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// Nonzero 2×2 minors of a two-row matrix of variable indices, column pairs
/// in lexicographic order.
fn two_row_minors(n: usize, top: &[usize], bottom: &[usize]) -> Vec<Polynomial> {
    let v = |i: usize| Polynomial::var(n, i);
    let mut out = Vec::new();
    for p in 0..top.len() {
        for q in p + 1..top.len() {
            let m = &(&v(top[p]) * &v(bottom[q])) - &(&v(top[q]) * &v(bottom[p]));
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// 2×2 minors of the concatenated Hankel blocks. Block `i` uses variables
/// `x0..x{aᵢ}`, `y0..`, `z0..` and so on.
pub fn scroll_ideal(t: &ScrollType) -> RingPresentation {
    let mut names: Vec<String> = Vec::new();
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    for (i, &a) in t.0.iter().enumerate() {
        let start = names.len();
        for j in 0..=a {
            names.push(match BLOCK_LETTERS.get(i) {
                Some(l) => format!("{l}{j}"),
                None => format!("b{i}_{j}"),
            });
        }
        for j in 0..a as usize {
            top.push(start + j);
            bottom.push(start + j + 1);
        }
    }
    let n = names.len();
    let vars = VariableSet::new(&names).expect("distinct generated names");
    RingPresentation::from_generators(vars, two_row_minors(n, &top, &bottom)).expect("same ring")
}

/// 2×2 minors of the symmetric 3×3 matrix on `x0..x5`, plus free variables
/// `x6..xn`; `n + 1` variables in all.
pub fn veronese_cone_ideal(n: usize) -> Result<RingPresentation> {
    if n < 5 {
        return Err(Error::VeroneseTooSmall(n));
    }
    let nv = n + 1;
    let sym = [[0, 1, 2], [1, 3, 4], [2, 4, 5]];
    let v = |i: usize| Polynomial::var(nv, i);
    let mut gens: Vec<Polynomial> = Vec::new();
    for (r1, r2) in [(0, 1), (0, 2), (1, 2)] {
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            let m = &(&v(sym[r1][c1]) * &v(sym[r2][c2])) - &(&v(sym[r1][c2]) * &v(sym[r2][c1]));
            let m = m.monic(crate::poly::MonomialOrder::DegRevLex);
            if !m.is_zero() && !gens.contains(&m) {
                gens.push(m);
            }
        }
    }
    let vars = VariableSet::indexed("x", nv, false);
    Ok(RingPresentation::from_generators(vars, gens).expect("same ring"))
}

/// `k[x,y,z]/(xy, yz, z²)`.
pub fn gw12() -> RingPresentation {
    let v = |i| Polynomial::var(3, i);
    let gens = alloc::vec![&v(0) * &v(1), &v(1) * &v(2), &v(2) * &v(2)];
    RingPresentation::from_generators(VariableSet::new(&["x", "y", "z"]).unwrap(), gens).unwrap()
}

/// 2×2 minors of `[[x, y, z], [y, z, x]]`.
pub fn graded12() -> RingPresentation {
    RingPresentation::from_generators(VariableSet::new(&["x", "y", "z"]).unwrap(), two_row_minors(3, &[0, 1, 2], &[1, 2, 0]))
        .unwrap()
}

/// `x1² + … + x_r²` in `x1..xn`.
pub fn quadric(rank: usize, n: usize) -> Result<RingPresentation> {
    if n == 0 || rank > n {
        return Err(Error::InvalidArgument(format!("quadric of rank {rank} in {n} variables")));
    }
    let vars = VariableSet::indexed("x", n, true);
    let f = (0..rank).fold(Polynomial::zero(n), |acc, i| &acc + &Polynomial::var(n, i).pow(2));
    RingPresentation::from_generators(vars, alloc::vec![f])
}

/// Lines used for binary forms: `y, x, x + y, x - y, x + 2y, x - 2y, …`.
fn line(k: usize) -> Polynomial {
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    match k {
        0 => y,
        1 => x,
        _ => {
            let c = ((k - 2) / 2 + 1) as i64;
            let c = if (k - 2).is_multiple_of(2) { c } else { -c };
            &x + &y.scale(&Rational::from_integer(c.into()))
        }
    }
}

/// A binary form in `x, y` whose root multiplicities are `profile`: the
/// largest multiplicity goes on `y`, the next on `x`, then `x + y`, `x - y`, ….
pub fn binary_form(profile: &[u32]) -> Result<RingPresentation> {
    let mut p: Vec<u32> = profile.iter().copied().filter(|&m| m > 0).collect();
    if p.is_empty() {
        return Err(Error::InvalidArgument("empty binary form profile".into()));
    }
    p.sort_unstable_by(|a, b| b.cmp(a));
    let f = p
        .iter()
        .enumerate()
        .fold(Polynomial::constant(2, one()), |acc, (k, &m)| &acc * &line(k).pow(m));
    RingPresentation::from_generators(VariableSet::new(&["x", "y"]).unwrap(), alloc::vec![f])
}
