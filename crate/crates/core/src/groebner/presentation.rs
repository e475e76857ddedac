use alloc::vec::Vec;

use crate::poly::{Polynomial, VariableSet};
use crate::{Error, Result};

/// Generators of an ideal in `k[variables]`. Zero generators are dropped on
/// construction; homogeneity is recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    variables: VariableSet,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl IdealPresentation {
    pub fn new(variables: VariableSet, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != variables.len() {
                return Err(Error::LengthMismatch {
                    expected: variables.len(),
                    found: g.nvars(),
                });
            }
        }
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(IdealPresentation {
            variables,
            generators,
            homogeneous,
        })
    }

    pub fn zero(variables: VariableSet) -> Self {
        IdealPresentation {
            variables,
            generators: Vec::new(),
            homogeneous: true,
        }
    }

    pub fn variables(&self) -> &VariableSet {
        &self.variables
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        match self.generators.iter().position(|g| !g.is_homogeneous()) {
            None => Ok(()),
            Some(index) => Err(Error::Inhomogeneous { index }),
        }
    }

    /// Same ring, more generators.
    pub fn extended(&self, extra: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut generators = self.generators.clone();
        generators.extend(extra.into_iter().filter(|g| !g.is_zero()));
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        IdealPresentation {
            variables: self.variables.clone(),
            generators,
            homogeneous,
        }
    }
}

/// `R = k[x₁..xₙ]/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    ideal: IdealPresentation,
    minimalized: bool,
}

impl RingPresentation {
    pub fn new(ideal: IdealPresentation) -> Self {
        RingPresentation {
            ideal,
            minimalized: false,
        }
    }

    pub(crate) fn new_minimalized(ideal: IdealPresentation) -> Self {
        RingPresentation {
            ideal,
            minimalized: true,
        }
    }

    pub fn from_generators(variables: VariableSet, generators: Vec<Polynomial>) -> Result<Self> {
        Ok(RingPresentation::new(IdealPresentation::new(variables, generators)?))
    }

    pub fn polynomial_ring(variables: VariableSet) -> Self {
        RingPresentation::new(IdealPresentation::zero(variables))
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn variables(&self) -> &VariableSet {
        self.ideal.variables()
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn is_minimalized(&self) -> bool {
        self.minimalized
    }

    /// `R[t]` for a fresh variable `t` appended last.
    pub fn with_free_variable(&self, name: &str) -> Result<Self> {
        let vars = self.variables().with_appended(name)?;
        let n = vars.len();
        let ident: Vec<usize> = (0..n - 1).collect();
        let gens = self
            .generators()
            .iter()
            .map(|g| g.rename_variables(&ident, n))
            .collect();
        RingPresentation::from_generators(vars, gens)
    }

    /// Has no degree-one generators, so the variables span `R₁` freely.
    pub fn has_linear_generators(&self) -> bool {
        self.generators().iter().any(|g| g.degree() == Some(1))
    }
}
