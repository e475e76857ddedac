//! Hilbert series, h-vector, multiplicity, Cohen–Macaulay type and the
//! hypersurface and minimal-multiplicity predicates of a graded quotient.

mod artinian;
mod hilbert;
mod series;

use alloc::vec::Vec;

pub use artinian::{artinian_reduction, ArtinianReduction, LSOP_ATTEMPTS};
pub use hilbert::{hilbert_numerator, hilbert_series};
pub use series::HilbertSeries;

use crate::groebner::{minimalize_presentation_with_limits, RingPresentation};
use crate::poly::Polynomial;
use crate::{Limits, Options, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingInvariants {
    pub dim: usize,
    /// Variables left after minimalization.
    pub embdim: usize,
    pub numerator: Vec<i64>,
    pub hvector: Vec<i64>,
    pub multiplicity: i64,
    pub artinian_length: usize,
    pub is_cm: bool,
    /// Socle dimension of the artinian reduction; only for CM rings.
    pub cm_type: Option<usize>,
    pub is_gorenstein: Option<bool>,
    /// CM with h-vector `(1, n)`.
    pub is_min_mult: bool,
    /// At most one minimal generator.
    pub is_hypersurface: bool,
    /// No minimal generators at all.
    pub is_regular: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmReport {
    pub is_cm: bool,
    pub cm_type: Option<usize>,
    pub is_gorenstein: Option<bool>,
    pub length: usize,
    pub multiplicity: i64,
}

fn minimal(pres: &RingPresentation, limits: &Limits) -> Result<RingPresentation> {
    if pres.is_minimalized() {
        Ok(pres.clone())
    } else {
        minimalize_presentation_with_limits(pres, limits)
    }
}

pub fn cm_and_type(pres: &RingPresentation, opts: &Options) -> Result<CmReport> {
    let series = hilbert_series(pres.ideal(), &opts.limits)?;
    let red = artinian_reduction(pres, opts)?;
    let e = series.multiplicity();
    let is_cm = red.length as i64 == e;
    let cm_type = is_cm.then(|| red.socle_dimension());
    Ok(CmReport {
        is_cm,
        cm_type,
        is_gorenstein: cm_type.map(|t| t == 1),
        length: red.length,
        multiplicity: e,
    })
}

pub fn is_hypersurface(pres: &RingPresentation, limits: &Limits) -> Result<bool> {
    Ok(minimal(pres, limits)?.generators().len() <= 1)
}

/// Whether multiplication by the linear form `form` is injective on the ring:
/// `N(I + (ℓ)) = (1 - t)·N(I)`.
pub fn is_linear_nonzerodivisor(pres: &RingPresentation, form: &Polynomial, limits: &Limits) -> Result<bool> {
    let base = hilbert_series(pres.ideal(), limits)?;
    let cut = hilbert_series(&pres.ideal().extended([form.clone()]), limits)?;
    let mut expected = alloc::vec![0i64; base.numerator.len() + 1];
    for (i, c) in base.numerator.iter().enumerate() {
        expected[i] += c;
        expected[i + 1] -= c;
    }
    while expected.last() == Some(&0) {
        expected.pop();
    }
    Ok(cut.numerator == expected)
}

pub fn ring_invariants(pres: &RingPresentation, opts: &Options) -> Result<RingInvariants> {
    let min = minimal(pres, &opts.limits)?;
    let series = hilbert_series(min.ideal(), &opts.limits)?;
    let cm = cm_and_type(&min, opts)?;
    let ngens = min.generators().len();
    Ok(RingInvariants {
        dim: series.dim,
        embdim: min.nvars(),
        is_min_mult: cm.is_cm && series.hvector.len() <= 2,
        multiplicity: series.multiplicity(),
        numerator: series.numerator,
        hvector: series.hvector,
        artinian_length: cm.length,
        is_cm: cm.is_cm,
        cm_type: cm.cm_type,
        is_gorenstein: cm.is_gorenstein,
        is_hypersurface: ngens <= 1,
        is_regular: ngens == 0,
    })
}
