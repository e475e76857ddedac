use alloc::vec::Vec;



use super::{buchberger_with_limits, IdealPresentation, RingPresentation};
use crate::linalg::rref;
use crate::poly::{MonomialOrder, Polynomial};
use crate::{Limits, Rational, Result};

pub fn minimalize_presentation(pres: &RingPresentation) -> Result<RingPresentation> {
    minimalize_presentation_with_limits(pres, &Limits::default())
}

/// Substitution that solves a set of linear forms for their pivot variables.
#[derive(Debug, Clone)]
pub(crate) struct Elimination {
    /// Surviving variable indices, ascending.
    pub kept: Vec<usize>,
    /// Image of every original variable in the surviving ones.
    pub images: Vec<Polynomial>,
    pub rank: usize,
}

impl Elimination {
    /// Row reduces `forms` (coefficient rows over `n` variables) with pivots
    /// on the earliest variables and maps each pivot to minus the rest of its row.
    pub fn new(n: usize, mut forms: Vec<Vec<Rational>>) -> Self {
        let pivots = rref(&mut forms);
        let kept: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let m = kept.len();
        let images = (0..n)
            .map(|i| match pivots.iter().position(|&p| p == i) {
                Some(r) => {
                    let coeffs: Vec<Rational> = kept.iter().map(|&j| -forms[r][j].clone()).collect();
                    Polynomial::linear_form(&coeffs)
                }
                None => Polynomial::var(m, kept.iter().position(|&k| k == i).unwrap()),
            })
            .collect();
        Elimination {
            kept,
            images,
            rank: pivots.len(),
        }
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        if self.rank == 0 {
            p.clone()
        } else {
            p.substitute(&self.images)
        }
    }
}

/// Removes linear generators by substitution, then prunes the rest to a
/// minimal homogeneous generating set.
///
/// Linear forms are row reduced with pivots on the earliest variables; each
/// pivot variable is replaced by minus the rest of its row and dropped.
/// Pruning walks generators by increasing degree and keeps one only if it is
/// not in the ideal of those already kept.
pub fn minimalize_presentation_with_limits(pres: &RingPresentation, limits: &Limits) -> Result<RingPresentation> {
    pres.ideal().require_homogeneous()?;
    let n = pres.nvars();
    let linear: Vec<Vec<Rational>> = pres
        .generators()
        .iter()
        .filter(|g| g.degree() == Some(1))
        .map(Polynomial::linear_coefficients)
        .collect();
    let elim = Elimination::new(n, linear);
    let vars = pres.variables().retain_indices(&elim.kept);
    let mut gens: Vec<Polynomial> = pres
        .generators()
        .iter()
        .filter(|g| g.degree() != Some(1))
        .map(|g| elim.apply(g))
        .filter(|g| !g.is_zero())
        .collect();
    gens.sort_by_key(|g| g.degree());

    let mut kept: Vec<Polynomial> = Vec::new();
    for g in gens {
        let ideal = IdealPresentation::new(vars.clone(), kept.clone())?;
        let redundant = !kept.is_empty() && buchberger_with_limits(&ideal, MonomialOrder::DegRevLex, limits)?.contains(&g);
        if !redundant {
            kept.push(g.monic(MonomialOrder::DegRevLex));
        }
    }
    Ok(RingPresentation::new_minimalized(IdealPresentation::new(vars, kept)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_presentation, render_presentation};

    fn min(text: &str) -> RingPresentation {
        minimalize_presentation(&parse_presentation(text).unwrap().presentation).unwrap()
    }

    #[test]
    fn substitutes_linear_generators() {
        let r = min("ring: x,y,z ; ideal: x + y, y^2");
        assert_eq!(render_presentation(&r), "ring: y, z\nideal: y^2\n");
        assert!(r.is_minimalized());
    }

    #[test]
    fn already_minimal() {
        let r = min("ring: x,y ; ideal: x*y");
        assert_eq!(render_presentation(&r), "ring: x, y\nideal: x*y\n");
    }

    #[test]
    fn drops_redundant_generator() {
        let r = min("ring: x,y ; ideal: x*y, x^2*y");
        assert_eq!(render_presentation(&r), "ring: x, y\nideal: x*y\n");
    }

    #[test]
    fn idempotent() {
        let once = min("ring: x,y,z,w ; ideal: x - w, x*y - z^2, w*y - z^2, y^3");
        let twice = minimalize_presentation(&once).unwrap();
        assert_eq!(once.generators(), twice.generators());
        assert_eq!(once.nvars(), 3);
        assert_eq!(once.generators().len(), 2);
    }
}
