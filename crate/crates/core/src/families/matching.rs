use alloc::vec::Vec;

use super::catalog::{graded12, gw12, scroll_ideal, veronese_cone_ideal, ScrollType};
use super::forms::{binary_form_profile, quadric_rank};
use super::{Certificate, FamilyKind, FamilyTag};
use crate::groebner::{buchberger_with_limits, minimalize_presentation_with_limits, GroebnerBasis, RingPresentation};
use crate::invariants::hilbert_series;
use crate::poly::{MonomialOrder, Polynomial};
use crate::{BudgetKind, Error, Limits, Result};

/// Largest variable count for which permutations are searched.
pub const MAX_MATCH_VARIABLES: usize = 9;

/// Search nodes allowed per candidate family.
const MAX_NODES: usize = 2_000_000;

/// Catalog families with `n` variables, in search order.
fn candidates(n: usize) -> Vec<FamilyKind> {
    let mut out = Vec::new();
    if n == 3 {
        out.push(FamilyKind::Gw12);
        out.push(FamilyKind::Graded12);
    }
    out.extend(ScrollType::with_nvars(n).into_iter().map(FamilyKind::Scroll));
    if n >= 6 {
        out.push(FamilyKind::VeroneseCone(n - 1));
    }
    out
}

/// Dimension and h-vector each catalog family is known to have.
fn expected_shape(kind: &FamilyKind) -> Option<(usize, Vec<i64>)> {
    match kind {
        FamilyKind::Gw12 | FamilyKind::Graded12 => Some((1, alloc::vec![1, 2])),
        FamilyKind::Scroll(t) => Some((t.dim(), alloc::vec![1, t.degree() as i64 - 1])),
        FamilyKind::VeroneseCone(n) => Some((n - 2, alloc::vec![1, 3])),
        _ => None,
    }
}

/// Presentation of a permutation-matched family.
pub fn catalog_presentation(kind: &FamilyKind) -> Option<RingPresentation> {
    match kind {
        FamilyKind::Gw12 => Some(gw12()),
        FamilyKind::Graded12 => Some(graded12()),
        FamilyKind::Scroll(t) => Some(scroll_ideal(t)),
        FamilyKind::VeroneseCone(n) => veronese_cone_ideal(*n).ok(),
        _ => None,
    }
}

fn minimal(pres: &RingPresentation, limits: &Limits) -> Result<RingPresentation> {
    if pres.is_minimalized() {
        Ok(pres.clone())
    } else {
        minimalize_presentation_with_limits(pres, limits)
    }
}

/// Numerators of `I + (xᵢ)`, one per variable; unchanged by renaming.
fn variable_profile(pres: &RingPresentation, limits: &Limits) -> Result<Vec<Vec<i64>>> {
    let n = pres.nvars();
    (0..n)
        .map(|i| {
            let cut = pres.ideal().extended([Polynomial::var(n, i)]);
            Ok(hilbert_series(&cut, limits)?.numerator)
        })
        .collect()
}

fn rename(g: &Polynomial, sigma: &[usize]) -> Polynomial {
    g.rename_variables(sigma, sigma.len())
}

/// Identifies a minimalized presentation with a catalog family.
///
/// Single generators are identified by their invariants: the profile for
/// binary forms, the rank for quadrics. Otherwise each catalog family with
/// the same variable count and Hilbert series is tried, searching variable
/// bijections in lexicographic order. A bijection is extended only between
/// variables whose hyperplane sections have equal Hilbert series, and every
/// catalog generator whose variables are all placed must already lie in the
/// input ideal. Equal Hilbert series plus containment gives equality; the
/// reduced bases are compared once more before returning.
pub fn match_named_family(pres: &RingPresentation, limits: &Limits) -> Result<FamilyTag> {
    let min = minimal(pres, limits)?;
    let n = min.nvars();
    let gens = min.generators();
    if gens.is_empty() {
        return Ok(FamilyTag::invariant(FamilyKind::PolynomialRing { nvars: n }));
    }
    if gens.len() == 1 {
        let f = &gens[0];
        if n == 2 {
            let profile = binary_form_profile(f)?;
            return Ok(FamilyTag::invariant(FamilyKind::BinaryForm { profile }));
        }
        if f.degree() == Some(2) {
            let rank = quadric_rank(f)?;
            return Ok(FamilyTag::invariant(FamilyKind::Quadric { rank, nvars: n }));
        }
    }
    if n > MAX_MATCH_VARIABLES {
        return Ok(FamilyTag::none(true));
    }
    let series = hilbert_series(min.ideal(), limits)?;
    let gb = buchberger_with_limits(min.ideal(), MonomialOrder::DegRevLex, limits)?;
    let mut input_profile: Option<Vec<Vec<i64>>> = None;
    for kind in candidates(n) {
        if expected_shape(&kind) != Some((series.dim, series.hvector.clone())) {
            continue;
        }
        let cat = catalog_presentation(&kind).expect("catalog family");
        if hilbert_series(cat.ideal(), limits)?.numerator != series.numerator {
            continue;
        }
        if input_profile.is_none() {
            input_profile = Some(variable_profile(&min, limits)?);
        }
        let cat_profile = variable_profile(&cat, limits)?;
        let mut search = Search {
            gb: &gb,
            gens: cat.generators(),
            allowed: (0..n)
                .map(|i| (0..n).filter(|&j| input_profile.as_ref().unwrap()[j] == cat_profile[i]).collect())
                .collect(),
            sigma: alloc::vec![0; n],
            used: alloc::vec![false; n],
            nodes: 0,
        };
        if let Some(sigma) = search.run(0)? {
            let tag = FamilyTag {
                kind,
                certificate: Some(Certificate::Permutation(sigma)),
            };
            if replay_on_basis(&tag, &gb, limits)? {
                return Ok(tag);
            }
        }
    }
    Ok(FamilyTag::none(false))
}

struct Search<'a> {
    gb: &'a GroebnerBasis,
    gens: &'a [Polynomial],
    allowed: Vec<Vec<usize>>,
    sigma: Vec<usize>,
    used: Vec<bool>,
    nodes: usize,
}

impl Search<'_> {
    fn last_variable(g: &Polynomial) -> usize {
        g.variables_used().iter().rposition(|&u| u).unwrap_or(0)
    }

    fn run(&mut self, i: usize) -> Result<Option<Vec<usize>>> {
        let n = self.sigma.len();
        if i == n {
            return Ok(Some(self.sigma.clone()));
        }
        for k in 0..self.allowed[i].len() {
            let j = self.allowed[i][k];
            if self.used[j] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > MAX_NODES {
                return Err(Error::BudgetExceeded {
                    kind: BudgetKind::Permutations,
                    limit: MAX_NODES,
                });
            }
            self.sigma[i] = j;
            let consistent = self
                .gens
                .iter()
                .filter(|g| Self::last_variable(g) == i)
                .all(|g| self.gb.contains(&rename(g, &self.sigma)));
            if consistent {
                self.used[j] = true;
                let found = self.run(i + 1)?;
                self.used[j] = false;
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
}

fn replay_on_basis(tag: &FamilyTag, gb: &GroebnerBasis, limits: &Limits) -> Result<bool> {
    let Some(Certificate::Permutation(sigma)) = &tag.certificate else {
        return Ok(false);
    };
    let Some(cat) = catalog_presentation(&tag.kind) else {
        return Ok(false);
    };
    if sigma.len() != gb.nvars() || cat.nvars() != gb.nvars() {
        return Ok(false);
    }
    let image: Vec<Polynomial> = cat.generators().iter().map(|g| rename(g, sigma)).collect();
    let ideal = crate::groebner::IdealPresentation::new(gb.variables().clone(), image)?;
    let replayed = buchberger_with_limits(&ideal, MonomialOrder::DegRevLex, limits)?;
    Ok(replayed.elements() == gb.elements())
}

/// Re-derives a tag from scratch: permutation certificates must reproduce the
/// input's reduced basis exactly, invariant certificates must recompute to
/// the same rank or profile.
pub fn replay_certificate(tag: &FamilyTag, pres: &RingPresentation, limits: &Limits) -> Result<bool> {
    let min = minimal(pres, limits)?;
    match &tag.certificate {
        None => Ok(false),
        Some(Certificate::Permutation(_)) => {
            let gb = buchberger_with_limits(min.ideal(), MonomialOrder::DegRevLex, limits)?;
            replay_on_basis(tag, &gb, limits)
        }
        Some(Certificate::Invariant) => {
            let gens = min.generators();
            Ok(match &tag.kind {
                FamilyKind::PolynomialRing { nvars } => gens.is_empty() && *nvars == min.nvars(),
                FamilyKind::BinaryForm { profile } => {
                    gens.len() == 1 && min.nvars() == 2 && binary_form_profile(&gens[0])? == *profile
                }
                FamilyKind::Quadric { rank, nvars } => {
                    gens.len() == 1 && *nvars == min.nvars() && quadric_rank(&gens[0])? == *rank
                }
                _ => false,
            })
        }
    }
}
