use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, VariableSet};
use crate::Rational;

/// A polynomial with exact rational coefficients.
///
/// Terms are kept sorted descending in degrevlex with no zero coefficients,
/// so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            alloc::vec![(m, c)]
        };
        Polynomial { nvars, terms }
    }

    /// Builds a canonical polynomial, merging repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let slot = map.entry(m).or_insert_with(Rational::zero);
            *slot += c;
        }
        Polynomial {
            nvars,
            terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms, descending in degrevlex.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        // degrevlex refines degree, so the first term has maximal degree
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        match order {
            MonomialOrder::DegRevLex => self.terms.first().map(|(m, c)| (m, c)),
            MonomialOrder::Lex => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    /// Scaled so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().filter(|(m, _)| m.exponent(i) > 0).map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                let k = e[i];
                e[i] -= 1;
                (Monomial::from_exponents(e), c * Rational::from_integer(k.into()))
            }),
        )
    }

    /// Replaces variable `i` by `images[i]`; all images share one variable count.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| alloc::vec![Polynomial::one(p.nvars)])
            .collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Renames variable `i` to `perm[i]` in a ring with `nvars` variables.
    pub fn rename_variables(&self, perm: &[usize], nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = alloc::vec![0u32; nvars];
                for (i, &k) in m.exponents().iter().enumerate() {
                    e[perm[i]] += k;
                }
                (Monomial::from_exponents(e), c.clone())
            }),
        )
    }

    /// Which variables occur in some term.
    pub fn variables_used(&self) -> Vec<bool> {
        let mut used = alloc::vec![false; self.nvars];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used
    }

    /// Coefficient vector of the degree-one part.
    pub fn linear_coefficients(&self) -> Vec<Rational> {
        (0..self.nvars)
            .map(|i| self.coefficient(&Monomial::var(self.nvars, i)))
            .collect()
    }

    pub fn linear_form(coeffs: &[Rational]) -> Polynomial {
        let n = coeffs.len();
        Polynomial::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, vars }
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomials over different rings");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let conv = |c: &Rational| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), conv(&b[j].1)));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = &a[i].1 + conv(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(c))));
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different rings");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                let slot = map.entry(m.mul(n)).or_insert_with(Rational::zero);
                *slot += a * b;
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    vars: &'a VariableSet,
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write_rational(f, &a)?;
                continue;
            }
            if !a.is_one() {
                write_rational(f, &a)?;
                f.write_str("*")?;
            }
            let mut first = true;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn difference_of_squares() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let p = &(&x + &y) * &(&x - &y);
        let expected = &(&x * &x) - &(&y * &y);
        assert_eq!(p, expected);
        assert_eq!(&p * &Polynomial::one(2), p);
    }

    #[test]
    fn exponent_addition() {
        let v = |i| Polynomial::var(3, i);
        let xy = &v(0) * &v(1);
        let yz = &v(1) * &v(2);
        let p = &xy * &yz;
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].0.exponents(), &[1, 2, 1]);
    }

    #[test]
    fn cancellation_leaves_zero() {
        let x = Polynomial::var(1, 0);
        assert!((&x - &x).is_zero());
        assert_eq!(x.scale(&q(0)), Polynomial::zero(1));
    }

    #[test]
    fn derivative_and_substitution() {
        let vars = VariableSet::new(&["x", "y"]).unwrap();
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let f = &(&x.pow(3) * &y) - &(&x * &y.pow(3));
        assert_eq!(f.derivative(0).display(&vars).to_string(), "3*x^2*y - y^3");
        // x -> x + y, y -> y
        let g = f.substitute(&[&x + &y, y.clone()]);
        let expected = &(&(&x + &y).pow(3) * &y) - &(&(&x + &y) * &y.pow(3));
        assert_eq!(g, expected);
    }

    #[test]
    fn rendering() {
        let vars = VariableSet::new(&["x", "y", "z"]).unwrap();
        let p = Polynomial::from_terms(
            3,
            [
                (Monomial::from_exponents(alloc::vec![0, 2, 0]), q(-1)),
                (Monomial::from_exponents(alloc::vec![1, 0, 1]), Rational::new(3.into(), 4.into())),
                (Monomial::one(3), q(-2)),
            ],
        );
        assert_eq!(p.display(&vars).to_string(), "-y^2 + 3/4*x*z - 2");
        assert!(!p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn lex_leading_term_differs() {
        // degrevlex: y^3 > x z ; lex: x z > y^3
        let p = Polynomial::from_terms(
            3,
            [
                (Monomial::from_exponents(alloc::vec![0, 3, 0]), q(1)),
                (Monomial::from_exponents(alloc::vec![1, 0, 1]), q(1)),
            ],
        );
        assert_eq!(p.leading_term(MonomialOrder::DegRevLex).unwrap().0.exponents(), &[0, 3, 0]);
        assert_eq!(p.leading_term(MonomialOrder::Lex).unwrap().0.exponents(), &[1, 0, 1]);
    }
}
