use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::IdealPresentation;
use crate::poly::{Monomial, MonomialOrder, Polynomial, VariableSet};
use crate::{BudgetKind, Error, Limits, Rational, Result};

/// Terms sorted ascending under the working order: the leading term is last.
type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &Polynomial, order: MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().to_vec();
    match order {
        MonomialOrder::DegRevLex => t.reverse(),
        MonomialOrder::Lex => t.sort_by(|a, b| order.cmp(&a.0, &b.0)),
    }
    t
}

fn from_terms(nvars: usize, t: Terms) -> Polynomial {
    Polynomial::from_terms(nvars, t)
}

/// `p - c·q·g`, all ascending under `order`.
fn sub_mul(p: &[(Monomial, Rational)], c: &Rational, q: &Monomial, g: &[(Monomial, Rational)], order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let shifted = |k: usize| (g[k].0.mul(q), &g[k].1 * c);
    let mut pending = if j < g.len() { Some(shifted(j)) } else { None };
    while i < p.len() {
        let Some((m, a)) = pending.as_ref() else { break };
        match order.cmp(&p[i].0, m) {
            Ordering::Less => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((m.clone(), -a));
                j += 1;
                pending = if j < g.len() { Some(shifted(j)) } else { None };
            }
            Ordering::Equal => {
                let v = &p[i].1 - a;
                if !v.is_zero() {
                    out.push((p[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                pending = if j < g.len() { Some(shifted(j)) } else { None };
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    if let Some((m, a)) = pending {
        out.push((m, -a));
        j += 1;
        while j < g.len() {
            let (m, a) = shifted(j);
            out.push((m, -a));
            j += 1;
        }
    }
    out
}

/// Full reduction of `p` by monic `basis`; returns ascending terms.
fn reduce(mut p: Terms, basis: &[Terms], order: MonomialOrder) -> Terms {
    let mut rest: Terms = Vec::new();
    while let Some((m, c)) = p.last() {
        let hit = basis
            .iter()
            .find(|g| g.last().is_some_and(|(lm, _)| lm.divides(m)));
        match hit {
            Some(g) => {
                let q = m.div(&g.last().unwrap().0).unwrap();
                let c = c.clone();
                p = sub_mul(&p, &c, &q, g, order);
            }
            None => rest.push(p.pop().unwrap()),
        }
    }
    rest.reverse();
    rest
}

fn make_monic(mut t: Terms) -> Terms {
    if let Some((_, lc)) = t.last() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
    t
}

/// A Gröbner basis for one ideal and monomial order.
///
/// When `reduced`, elements are monic, no leading monomial divides any term
/// of another element, and the list is sorted descending by leading monomial;
/// it is then the unique reduced basis of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    variables: VariableSet,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    working: Vec<Terms>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variables(&self) -> &VariableSet {
        &self.variables
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.working
            .iter()
            .map(|t| t.last().unwrap().0.clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.working
            .iter()
            .any(|t| t.last().is_some_and(|(m, _)| m.is_one()))
    }

    /// Remainder of `p` on division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars(), "polynomial over a different ring");
        from_terms(p.nvars(), reduce(to_terms(p, self.order), &self.working, self.order))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// The monomial ideal of leading monomials.
    pub fn initial_ideal(&self) -> IdealPresentation {
        let gens = self
            .leading_monomials()
            .into_iter()
            .map(|m| Polynomial::term(m, Rational::one()))
            .collect();
        IdealPresentation::new(self.variables.clone(), gens).expect("same ring")
    }

    fn from_working(variables: VariableSet, order: MonomialOrder, mut working: Vec<Terms>, reduced: bool) -> Self {
        let n = variables.len();
        working.sort_by(|a, b| order.cmp(&b.last().unwrap().0, &a.last().unwrap().0));
        let elements = working.iter().map(|t| from_terms(n, t.clone())).collect();
        GroebnerBasis {
            variables,
            order,
            elements,
            working,
            reduced,
        }
    }
}

pub fn normal_form(p: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    basis.normal_form(p)
}

pub fn initial_ideal(gb: &GroebnerBasis) -> IdealPresentation {
    gb.initial_ideal()
}

/// Reduced Gröbner basis under the default limits.
pub fn buchberger(ideal: &IdealPresentation, order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_limits(ideal, order, &Limits::default())
}

struct Run<'a> {
    order: MonomialOrder,
    limits: &'a Limits,
    basis: Vec<Terms>,
    /// Pending pairs keyed by (lcm degree, i, j) for the normal strategy.
    queue: BTreeSet<(u32, usize, usize)>,
    pending: BTreeSet<(usize, usize)>,
    reductions: usize,
}

impl Run<'_> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.basis[i].last().unwrap().0
    }

    fn insert(&mut self, h: Terms) -> Result<()> {
        let h = make_monic(h);
        let d = h.last().unwrap().0.degree();
        if d > self.limits.max_degree {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::Degree,
                limit: self.limits.max_degree as usize,
            });
        }
        let k = self.basis.len();
        self.basis.push(h);
        for i in 0..k {
            let l = self.lm(i).lcm(self.lm(k));
            self.queue.insert((l.degree(), i, k));
            self.pending.insert((i, k));
        }
        Ok(())
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Product and chain criteria.
    fn skippable(&self, i: usize, j: usize) -> bool {
        let (li, lj) = (self.lm(i), self.lm(j));
        if li.is_coprime(lj) {
            return true;
        }
        let l = li.lcm(lj);
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.lm(k).divides(&l)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    fn s_polynomial(&self, i: usize, j: usize) -> Terms {
        let (li, lj) = (self.lm(i), self.lm(j));
        let l = li.lcm(lj);
        let qi = l.div(li).unwrap();
        let qj = l.div(lj).unwrap();
        // both monic: S = qi·gi − qj·gj
        let gi: Terms = self.basis[i].iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect();
        sub_mul(&gi, &Rational::one(), &qj, &self.basis[j], self.order)
    }
}

/// Buchberger's algorithm with the normal selection strategy, product and
/// chain criteria, and a final reduction step.
///
/// Pairs are taken in order of lcm degree, then pair index, which makes the
/// run reproducible. Exceeding `limits` is an error, never a truncation.
pub fn buchberger_with_limits(ideal: &IdealPresentation, order: MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let mut run = Run {
        order,
        limits,
        basis: Vec::new(),
        queue: BTreeSet::new(),
        pending: BTreeSet::new(),
        reductions: 0,
    };
    let mut gens: Vec<&Polynomial> = ideal.generators().iter().collect();
    gens.sort_by_key(|g| g.degree());
    for g in gens {
        let h = reduce(to_terms(g, order), &run.basis, order);
        if !h.is_empty() {
            run.insert(h)?;
        }
    }
    while let Some(&(d, i, j)) = run.queue.iter().next() {
        run.queue.remove(&(d, i, j));
        if run.skippable(i, j) {
            run.pending.remove(&(i, j));
            continue;
        }
        run.reductions += 1;
        if run.reductions > limits.max_pairs {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::Pairs,
                limit: limits.max_pairs,
            });
        }
        let s = run.s_polynomial(i, j);
        run.pending.remove(&(i, j));
        let h = reduce(s, &run.basis, order);
        if !h.is_empty() {
            run.insert(h)?;
        }
    }
    Ok(GroebnerBasis::from_working(
        ideal.variables().clone(),
        order,
        interreduce(run.basis, order),
        true,
    ))
}

/// Minimal basis followed by tail reduction.
fn interreduce(basis: Vec<Terms>, order: MonomialOrder) -> Vec<Terms> {
    let lms: Vec<Monomial> = basis.iter().map(|t| t.last().unwrap().0.clone()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| {
                j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)
            })
        })
        .collect();
    let minimal: Vec<Terms> = keep.iter().map(|&i| basis[i].clone()).collect();
    (0..minimal.len())
        .map(|i| {
            let others: Vec<Terms> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, t)| t.clone())
                .collect();
            let mut t = minimal[i].clone();
            let lead = t.pop().unwrap();
            let mut tail = reduce(t, &others, order);
            tail.push(lead);
            make_monic(tail)
        })
        .collect()
}
