//! Singular locus of a graded quotient by the Jacobian criterion.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::groebner::{minimalize_presentation_with_limits, IdealPresentation, RingPresentation};
use crate::invariants::hilbert_series;
use crate::poly::{MonomialOrder, Polynomial};
use crate::{BudgetKind, Error, Options, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityReport {
    /// `embdim - dim` of the minimalized presentation.
    pub codim: usize,
    /// The ideal plus all `codim × codim` Jacobian minors, in the minimalized ring.
    pub jacobian_ideal: IdealPresentation,
    /// Number of distinct nonzero minors adjoined.
    pub minors: usize,
    /// Krull dimension of the singular locus of the affine cone; `-1` when empty.
    pub singular_dim: i64,
    pub isolated: bool,
    /// The criterion is only valid for equidimensional rings, which is not checked.
    pub equidimensional_assumed: bool,
}

pub fn singular_locus(pres: &RingPresentation, opts: &Options) -> Result<SingularityReport> {
    let min = if pres.is_minimalized() {
        pres.clone()
    } else {
        minimalize_presentation_with_limits(pres, &opts.limits)?
    };
    let n = min.nvars();
    let dim = hilbert_series(min.ideal(), &opts.limits)?.dim;
    let codim = n - dim;
    let gens = min.generators();
    if gens.len() > 64 || n > 64 {
        return Err(Error::InvalidArgument("Jacobian larger than 64 × 64".into()));
    }
    let total = binomial(gens.len(), codim).saturating_mul(binomial(n, codim));
    if total > opts.limits.max_minors as u128 {
        return Err(Error::BudgetExceeded {
            kind: BudgetKind::Minors,
            limit: opts.limits.max_minors,
        });
    }
    let jac: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|g| (0..n).map(|j| g.derivative(j)).collect())
        .collect();
    let mut expander = Minors {
        jac: &jac,
        nvars: n,
        memo: BTreeMap::new(),
    };
    let mut found: Vec<Polynomial> = Vec::new();
    for rows in subsets(gens.len(), codim) {
        for cols in subsets(n, codim) {
            let d = expander.det(rows, cols);
            if !d.is_zero() {
                let d = d.monic(MonomialOrder::DegRevLex);
                if !found.contains(&d) {
                    found.push(d);
                }
            }
        }
    }
    let minors = found.len();
    let jacobian_ideal = min.ideal().extended(found);
    let singular_dim = match hilbert_series(&jacobian_ideal, &opts.limits) {
        Ok(s) => s.dim as i64,
        Err(Error::UnitIdeal) => -1,
        Err(e) => return Err(e),
    };
    Ok(SingularityReport {
        codim,
        jacobian_ideal,
        minors,
        singular_dim,
        isolated: singular_dim <= 0,
        equidimensional_assumed: true,
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Bitmasks of all `k`-subsets of `0..n`, in increasing numeric order.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, mask: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, mask | (1 << i), out);
        }
    }
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// Laplace expansion along the first row, memoized on (rows, cols).
struct Minors<'a> {
    jac: &'a [Vec<Polynomial>],
    nvars: usize,
    memo: BTreeMap<(u64, u64), Polynomial>,
}

impl Minors<'_> {
    fn det(&mut self, rows: u64, cols: u64) -> Polynomial {
        if rows == 0 {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let mut acc = Polynomial::zero(self.nvars);
        let mut sign_neg = false;
        let mut rest = cols;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let entry = &self.jac[r][c];
            if !entry.is_zero() {
                let sub = self.det(rows & !(1 << r), cols & !(1 << c));
                if !sub.is_zero() {
                    let t = entry * &sub;
                    acc = if sign_neg { &acc - &t } else { &acc + &t };
                }
            }
            sign_neg = !sign_neg;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}
