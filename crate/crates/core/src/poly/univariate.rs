//! Dense univariate polynomials over the rationals, low degree first.
//!
//! Only what the binary-form profile needs: division, gcd, derivative and
//! Yun's squarefree decomposition.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn one() -> Self {
        UniPoly(alloc::vec![Rational::from_integer(1.into())])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                UniPoly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.0.get(i).cloned().unwrap_or_else(Rational::zero);
                    a - b
                })
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.0[dd].recip();
        let mut rem = self.0.clone();
        let mut quot = alloc::vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] * &lc_inv;
            let shift = top - dd;
            for (i, d) in divisor.0.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient (remainder asserted zero in debug builds).
    pub fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero());
        q
    }

    /// Yun's algorithm: returns `(i, gᵢ)` with `self = c·∏ gᵢ^i`, each `gᵢ`
    /// squarefree, pairwise coprime and of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, UniPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let c = df.div_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let b_next = b.div_exact(&a);
            let c_next = d.div_exact(&a);
            d = c_next.sub(&b_next.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a));
            }
            b = b_next;
            i += 1;
        }
        out
    }
}
