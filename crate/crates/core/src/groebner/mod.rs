//! Gröbner bases, normal forms and presentations of graded quotients.

mod buchberger;
mod minimalize;
mod presentation;

pub use buchberger::{buchberger, buchberger_with_limits, initial_ideal, normal_form, GroebnerBasis};
pub(crate) use minimalize::Elimination;
pub use minimalize::{minimalize_presentation, minimalize_presentation_with_limits};
pub use presentation::{IdealPresentation, RingPresentation};
