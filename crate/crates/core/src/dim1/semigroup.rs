use alloc::vec::Vec;

use num_integer::Integer;

use super::DrozdRoiterReport;
use crate::{Error, Result};

/// `⟨a₁ < … < a_k⟩ ⊆ ℕ` with finite complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    members: Vec<bool>,
    frobenius: i64,
}

impl NumericalSemigroup {
    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Largest gap; `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Membership table over `0..2·(frobenius + max generator) + 1`.
    pub fn table(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            false
        } else if s > self.frobenius {
            true
        } else {
            self.members[s as usize]
        }
    }

    /// Gaps, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        (0..=self.frobenius.max(0) as u64)
            .filter(|&s| !self.contains(s as i64))
            .collect()
    }
}

fn sieve(gens: &[u64], len: usize) -> Vec<bool> {
    let mut t = alloc::vec![false; len];
    t[0] = true;
    for s in 1..len {
        t[s] = gens.iter().any(|&a| a as usize <= s && t[s - a as usize]);
    }
    t
}

/// Closure of `gens` under addition; zeros are ignored.
pub fn semigroup_closure(gens: &[u64]) -> Result<NumericalSemigroup> {
    let mut g: Vec<u64> = gens.iter().copied().filter(|&a| a > 0).collect();
    g.sort_unstable();
    g.dedup();
    if g.is_empty() {
        return Err(Error::EmptySemigroup);
    }
    let d = g.iter().fold(0u64, |acc, &a| acc.gcd(&a));
    if d != 1 {
        return Err(Error::SemigroupGcd(d));
    }
    let (a1, ak) = (g[0], *g.last().unwrap());
    // the Frobenius number is below (a₁ - 1)(a_k - 1)
    let bound = ((a1 - 1) * (ak - 1) + ak + 1) as usize;
    let wide = sieve(&g, bound);
    let frobenius = wide.iter().rposition(|&m| !m).map_or(-1, |i| i as i64);
    let minimal: Vec<u64> = g
        .iter()
        .copied()
        .filter(|&a| {
            let smaller: Vec<u64> = g.iter().copied().filter(|&b| b < a).collect();
            !sieve(&smaller, a as usize + 1)[a as usize]
        })
        .collect();
    let len = (2 * (frobenius + ak as i64) + 1) as usize;
    Ok(NumericalSemigroup {
        members: sieve(&minimal, len),
        generators: minimal,
        frobenius,
    })
}

/// Members `s ≥ 2a₁` with `s - a₁` not a member, for `s ≤ limit`.
pub fn semigroup_lambda_in_window(sg: &NumericalSemigroup, limit: u64) -> Vec<u64> {
    let a = sg.multiplicity();
    (2 * a..=limit)
        .filter(|&s| sg.contains(s as i64) && !sg.contains((s - a) as i64))
        .collect()
}

/// `e = a₁` and `λ = #{s ∈ S : s ≥ 2a₁, s - a₁ ∉ S}`. Beyond
/// `frobenius + a₁` every `s - a₁` is a member, so the window stops there.
pub fn semigroup_dr(sg: &NumericalSemigroup) -> DrozdRoiterReport {
    let a = sg.multiplicity();
    let limit = (sg.frobenius() + a as i64).max(0) as u64;
    let w = semigroup_lambda_in_window(sg, limit);
    DrozdRoiterReport::new(a, w.len() as u64, w)
}
