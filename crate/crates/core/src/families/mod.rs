//! Named ring families: scrolls, Veronese cones, quadrics, binary forms and
//! the two one-dimensional rings with h-vector `(1, 2)`.

mod catalog;
mod forms;
mod matching;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use catalog::{binary_form, graded12, gw12, quadric, scroll_ideal, veronese_cone_ideal, ScrollType};
pub use forms::{binary_form_profile, quadric_rank};
pub use matching::{catalog_presentation, match_named_family, replay_certificate, MAX_MATCH_VARIABLES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    PolynomialRing { nvars: usize },
    Quadric { rank: usize, nvars: usize },
    /// Root multiplicities, descending.
    BinaryForm { profile: Vec<u32> },
    Scroll(ScrollType),
    /// Ring on `x0..xn`; `n = 5` is the symmetric 3×3 case.
    VeroneseCone(usize),
    Gw12,
    Graded12,
    None { not_attempted: bool },
}

impl FamilyKind {
    /// Stable identifier, e.g. `scroll(1,2)` or `quadric(3,4)`.
    pub fn name(&self) -> String {
        let join = |v: &[u32]| v.iter().map(|a| format!("{a}")).collect::<Vec<_>>().join(",");
        match self {
            FamilyKind::PolynomialRing { nvars } => format!("polynomial_ring({nvars})"),
            FamilyKind::Quadric { rank, nvars } => format!("quadric({rank},{nvars})"),
            FamilyKind::BinaryForm { profile } => format!("binary_form({})", join(profile)),
            FamilyKind::Scroll(t) => format!("scroll({})", join(t.entries())),
            FamilyKind::VeroneseCone(n) => format!("veronese_cone({n})"),
            FamilyKind::Gw12 => "gw12".into(),
            FamilyKind::Graded12 => "graded12".into(),
            FamilyKind::None { not_attempted: false } => "none".into(),
            FamilyKind::None { not_attempted: true } => "none(not_attempted)".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Catalog variable `i` is input variable `σ[i]`.
    Permutation(Vec<usize>),
    /// Identified by a complete linear-equivalence invariant.
    Invariant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTag {
    pub kind: FamilyKind,
    pub certificate: Option<Certificate>,
}

impl FamilyTag {
    fn invariant(kind: FamilyKind) -> Self {
        FamilyTag {
            kind,
            certificate: Some(Certificate::Invariant),
        }
    }

    fn none(not_attempted: bool) -> Self {
        FamilyTag {
            kind: FamilyKind::None { not_attempted },
            certificate: None,
        }
    }

    pub fn is_none(&self) -> bool {
        matches!(self.kind, FamilyKind::None { .. })
    }
}
