use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// Ordered variable names. Position is significance in the monomial order:
/// the first variable is the largest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::NoVariables);
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(Error::InvalidVariableName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(VariableSet { names: out })
    }

    /// `prefix0, prefix1, ...` or `prefix1, ...` when `one_based`.
    pub fn indexed(prefix: &str, count: usize, one_based: bool) -> Self {
        let start = usize::from(one_based);
        VariableSet {
            names: (start..start + count)
                .map(|i| alloc::format!("{prefix}{i}"))
                .collect(),
        }
    }

    /// Subset kept after eliminating variables; may be empty.
    pub(crate) fn retain_indices(&self, keep: &[usize]) -> Self {
        VariableSet {
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A fresh name not already present, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|i| alloc::format!("{base}{i}"))
            .find(|c| self.index_of(c).is_none())
            .unwrap()
    }

    pub fn with_appended(&self, name: &str) -> Result<Self> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        VariableSet::new(&names)
    }
}
