//! Exact multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
pub mod univariate;
mod variables;

pub use monomial::Monomial;
pub(crate) use monomial::monomials_of_degree;
pub use order::MonomialOrder;
pub use parse::{
    parse_lines, parse_polynomial, parse_presentation, render_presentation, LinesFile, Parsed,
};
pub use polynomial::{Polynomial, PolynomialDisplay};
pub use variables::VariableSet;
