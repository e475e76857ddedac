use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hilbert::series_and_basis;
use crate::groebner::{Elimination, GroebnerBasis, IdealPresentation, RingPresentation};
use crate::linalg::rank;
use crate::poly::{monomials_of_degree, Monomial, Polynomial};
use crate::{Error, Options, Rational, Result};

/// Attempts made before giving up on finding a linear system of parameters.
pub const LSOP_ATTEMPTS: usize = 20;

/// Quotient of a ring by a verified linear system of parameters.
#[derive(Debug, Clone)]
pub struct ArtinianReduction {
    /// The parameters, as linear forms in the ring's variables.
    pub lsop: Vec<Polynomial>,
    /// Number of standard monomials in each degree.
    pub standard_monomials: Vec<usize>,
    pub length: usize,
    /// 1-based index of the accepted attempt.
    pub attempts: usize,
    quotient: GroebnerBasis,
}

impl ArtinianReduction {
    /// Dimension of the socle `(0 : m)`, degree by degree: the kernel of
    /// `f ↦ (x₁f, …, xₘf)` from each graded piece to the next.
    pub fn socle_dimension(&self) -> usize {
        let gb = &self.quotient;
        let m = gb.nvars();
        let lead = gb.leading_monomials();
        let standard = |d: usize| -> Vec<Monomial> {
            monomials_of_degree(m, d as u32)
                .into_iter()
                .filter(|b| !lead.iter().any(|l| l.divides(b)))
                .collect()
        };
        let mut total = 0;
        let mut here = standard(0);
        for d in 0..self.standard_monomials.len() {
            let next = standard(d + 1);
            let index: BTreeMap<&Monomial, usize> = next.iter().enumerate().map(|(i, b)| (b, i)).collect();
            let rows: Vec<Vec<Rational>> = here
                .iter()
                .map(|b| {
                    let mut row = alloc::vec![Rational::from_integer(0.into()); m * next.len()];
                    for i in 0..m {
                        let xb = Polynomial::term(b.mul(&Monomial::var(m, i)), Rational::from_integer(1.into()));
                        for (t, c) in gb.normal_form(&xb).terms() {
                            row[i * next.len() + index[t]] = c.clone();
                        }
                    }
                    row
                })
                .collect();
            total += here.len() - rank(&rows);
            here = next;
        }
        total
    }
}

/// Coefficient bound for attempt `a` (0-based): `3 + 2a`.
fn bound(attempt: usize) -> i64 {
    3 + 2 * attempt as i64
}

/// Finds `dim R` linear forms whose successive quotients each drop the
/// dimension by one, then reports the artinian quotient.
///
/// Coefficients are integers drawn uniformly from `[-b, b]` by a ChaCha8
/// generator seeded with `opts.seed`, where `b = 3 + 2a` on attempt `a`
/// (`a = 0..20`). A candidate whose forms are dependent or fail a drop is
/// discarded whole.
pub fn artinian_reduction(pres: &RingPresentation, opts: &Options) -> Result<ArtinianReduction> {
    let ideal = pres.ideal();
    let (series, _) = series_and_basis(ideal, &opts.limits)?;
    let d = series.dim;
    let n = pres.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut last: Vec<Vec<Rational>> = Vec::new();
    for attempt in 0..LSOP_ATTEMPTS {
        let b = bound(attempt);
        let forms: Vec<Vec<Rational>> = (0..d)
            .map(|_| (0..n).map(|_| Rational::from_integer(rng.gen_range(-b..=b).into())).collect())
            .collect();
        if let Some((quotient, counts)) = verify(ideal, &forms, d, opts)? {
            return Ok(ArtinianReduction {
                lsop: forms.iter().map(|f| Polynomial::linear_form(f)).collect(),
                length: counts.iter().sum(),
                standard_monomials: counts,
                attempts: attempt + 1,
                quotient,
            });
        }
        last = forms;
    }
    Err(Error::LsopExhausted {
        attempts: LSOP_ATTEMPTS,
        last_candidate: render(&last, pres),
    })
}

fn render(forms: &[Vec<Rational>], pres: &RingPresentation) -> Vec<String> {
    forms
        .iter()
        .map(|f| Polynomial::linear_form(f).display(pres.variables()).to_string())
        .collect()
}

type Verified = Option<(GroebnerBasis, Vec<usize>)>;

fn verify(ideal: &IdealPresentation, forms: &[Vec<Rational>], d: usize, opts: &Options) -> Result<Verified> {
    let n = ideal.nvars();
    for k in 1..=d {
        let elim = Elimination::new(n, forms[..k].to_vec());
        if elim.rank != k {
            return Ok(None);
        }
        let (series, gb) = series_and_basis(&reduce(ideal, &elim)?, &opts.limits)?;
        if series.dim != d - k {
            return Ok(None);
        }
        if k == d {
            let counts = series.hvector.iter().map(|&c| c as usize).collect();
            return Ok(Some((gb, counts)));
        }
    }
    // dimension zero already
    let (series, gb) = series_and_basis(ideal, &opts.limits)?;
    Ok(Some((gb, series.hvector.iter().map(|&c| c as usize).collect())))
}

pub(crate) fn reduce(ideal: &IdealPresentation, elim: &Elimination) -> Result<IdealPresentation> {
    let vars = ideal.variables().retain_indices(&elim.kept);
    let gens = ideal.generators().iter().map(|g| elim.apply(g)).collect();
    IdealPresentation::new(vars, gens)
}
