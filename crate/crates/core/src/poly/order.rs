use core::cmp::Ordering;

use super::Monomial;
use crate::{Error, Result};

/// Term orders on monomials. Variables are ranked by declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    /// Pure lexicographic; only meant for debugging.
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    pub(crate) fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.cmp_degrevlex(b),
            MonomialOrder::Lex => a.cmp_lex(b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn documented_comparisons() {
        let x = Monomial::var(3, 0);
        let y = Monomial::var(3, 1);
        let y3 = Monomial::from_exponents(vec![0, 3, 0]);
        let xz2 = Monomial::from_exponents(vec![1, 0, 2]);
        let drl = MonomialOrder::DegRevLex;
        assert_eq!(drl.compare(&x, &y), Ok(Ordering::Greater));
        assert_eq!(drl.compare(&y3, &xz2), Ok(Ordering::Greater));
        let y2 = Monomial::from_exponents(vec![0, 2, 0]);
        assert_eq!(MonomialOrder::Lex.compare(&x, &y2), Ok(Ordering::Greater));
        assert_eq!(drl.compare(&x, &x), Ok(Ordering::Equal));
    }

    #[test]
    fn length_mismatch() {
        let a = Monomial::one(2);
        let b = Monomial::one(3);
        assert_eq!(
            MonomialOrder::Lex.compare(&a, &b),
            Err(Error::LengthMismatch { expected: 2, found: 3 })
        );
    }
}
