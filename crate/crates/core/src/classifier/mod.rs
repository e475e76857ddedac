//! Decision procedure from computed invariants to a graded Cohen–Macaulay
//! representation type verdict, with the rule and citation behind each step.

mod citations;
mod obstruction;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

pub use citations::{citation, Citation, CITATIONS};
pub use obstruction::{rewrite_in_xm, ObstructionData};

use crate::dim1::{graded_reduced_dr, DrozdRoiterReport};
use crate::families::{match_named_family, quadric_rank, FamilyKind, FamilyTag};
use crate::groebner::{minimalize_presentation_with_limits, RingPresentation};
use crate::invariants::{is_linear_nonzerodivisor, ring_invariants, RingInvariants};
use crate::poly::Polynomial;
use crate::singularity::{singular_locus, SingularityReport};
use crate::{Error, Options, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Finite,
    CountableInfinite,
    Uncountable,
    OpenUnknown,
    OutOfScope,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Finite => "finite",
            Verdict::CountableInfinite => "countable_infinite",
            Verdict::Uncountable => "uncountable",
            Verdict::OpenUnknown => "open_unknown",
            Verdict::OutOfScope => "out_of_scope",
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Hypotheses the user vouches for; never computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Assumption {
    Reduced,
    Domain,
}

impl Assumption {
    pub fn as_str(self) -> &'static str {
        match self {
            Assumption::Reduced => "reduced",
            Assumption::Domain => "domain",
        }
    }
}

impl core::str::FromStr for Assumption {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reduced" => Ok(Assumption::Reduced),
            "domain" => Ok(Assumption::Domain),
            other => Err(Error::InvalidArgument(format!("unknown assumption `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Justification {
    pub rule: &'static str,
    pub citation: &'static str,
    pub quote: &'static str,
    /// What was computed to trigger the rule.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    /// The input with linear generators eliminated and redundant ones dropped.
    pub minimal_presentation: Option<RingPresentation>,
    pub invariants: Option<RingInvariants>,
    pub singularity: Option<SingularityReport>,
    pub family: Option<FamilyTag>,
    pub drozd_roiter: Option<DrozdRoiterReport>,
    pub obstruction: Option<ObstructionData>,
    pub justification: Vec<Justification>,
    /// e.g. `reduced_asserted`, `reduced_detected`, `equidimensional_assumed`.
    pub assumptions_used: Vec<&'static str>,
    /// Why no decision was reached, for `open_unknown` and `out_of_scope`.
    pub reason: Option<String>,
    /// A resource limit stopped the computation.
    pub budget_exceeded: bool,
}

impl ClassificationReport {
    fn new() -> Self {
        ClassificationReport {
            verdict: Verdict::OutOfScope,
            minimal_presentation: None,
            invariants: None,
            singularity: None,
            family: None,
            drozd_roiter: None,
            obstruction: None,
            justification: Vec::new(),
            assumptions_used: Vec::new(),
            reason: None,
            budget_exceeded: false,
        }
    }

    fn cite(&mut self, rule: &'static str, detail: impl Into<String>) {
        let c = citation(rule);
        self.justification.push(Justification {
            rule,
            citation: c.label,
            quote: c.quote,
            detail: detail.into(),
        });
    }

    fn decide(&mut self, verdict: Verdict, rule: &'static str, detail: impl Into<String>) {
        self.verdict = verdict;
        self.cite(rule, detail);
    }

    fn open(&mut self, rule: &'static str, detail: impl Into<String>, reason: &str) {
        self.decide(Verdict::OpenUnknown, rule, detail);
        self.reason = Some(reason.into());
    }
}

fn hvector_text(h: &[i64]) -> String {
    let parts: Vec<String> = h.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Classifies `k[x]/I`. Input errors are returned; exhausted budgets and
/// failed parameter searches give an `out_of_scope` report instead.
pub fn classify(pres: &RingPresentation, assumptions: &[Assumption], opts: &Options) -> Result<ClassificationReport> {
    pres.ideal().require_homogeneous()?;
    let mut report = ClassificationReport::new();
    match run(pres, assumptions, opts, &mut report) {
        Ok(()) => Ok(report),
        Err(e) if e.is_budget() || matches!(e, Error::LsopExhausted { .. }) => {
            report.verdict = Verdict::OutOfScope;
            report.budget_exceeded = true;
            report.reason = Some(e.to_string());
            report.justification.clear();
            Ok(report)
        }
        Err(e) => Err(e),
    }
}

fn run(pres: &RingPresentation, assumptions: &[Assumption], opts: &Options, report: &mut ClassificationReport) -> Result<()> {
    let min = minimalize_presentation_with_limits(pres, &opts.limits)?;
    report.minimal_presentation = Some(min.clone());
    let inv = ring_invariants(&min, opts)?;
    report.invariants = Some(inv.clone());
    if inv.is_regular {
        report.decide(Verdict::Finite, "regular", format!("polynomial ring in {} variables", inv.embdim));
        return Ok(());
    }
    if !inv.is_cm {
        report.reason = Some("not_cohen_macaulay".into());
        return Ok(());
    }
    match inv.dim {
        0 => {
            if inv.is_hypersurface {
                report.decide(Verdict::Finite, "D0.hypersurface", "one minimal generator");
            } else {
                report.decide(
                    Verdict::Uncountable,
                    "D0.not_hypersurface",
                    format!("{} minimal generators", min.generators().len()),
                );
            }
            Ok(())
        }
        1 => dimension_one(&min, &inv, assumptions, opts, report),
        _ if inv.is_gorenstein == Some(true) => gorenstein(&min, &inv, report),
        _ => non_gorenstein(&min, &inv, opts, report),
    }
}

fn dimension_one(
    min: &RingPresentation,
    inv: &RingInvariants,
    assumptions: &[Assumption],
    opts: &Options,
    report: &mut ClassificationReport,
) -> Result<()> {
    let h = &inv.hvector;
    if inv.is_hypersurface {
        let tag = match_named_family(min, &opts.limits)?;
        let FamilyKind::BinaryForm { profile } = &tag.kind else {
            unreachable!("a one-dimensional hypersurface is a binary form");
        };
        let profile = profile.clone();
        report.family = Some(tag);
        if profile.iter().all(|&m| m == 1) {
            report.assumptions_used.push("reduced_detected");
        }
        let detail = format!("binary form with root multiplicities {}", hvector_text(&profile.iter().map(|&m| m as i64).collect::<Vec<_>>()));
        match profile.as_slice() {
            [1, 1] | [1, 1, 1] => report.decide(Verdict::Finite, "D1.simple_curve", detail),
            [2] => report.decide(Verdict::CountableInfinite, "D1.a_infinity", detail),
            [2, 1] => report.decide(Verdict::CountableInfinite, "D1.d_infinity", detail),
            _ => report.decide(Verdict::Uncountable, "D1.other_curve", detail),
        }
        return Ok(());
    }
    if h.len() == 2 && h[1] >= 3 {
        report.decide(Verdict::Uncountable, "D1.h1n", format!("h-vector {}", hvector_text(h)));
        report.obstruction = obstruction_for(min, opts)?;
        return Ok(());
    }
    if h.as_slice() != [1, 2] {
        report.decide(Verdict::Uncountable, "D1.hvector", format!("h-vector {}", hvector_text(h)));
        return Ok(());
    }
    let tag = match_named_family(min, &opts.limits)?;
    let kind = tag.kind.clone();
    report.family = Some(tag);
    match kind {
        FamilyKind::Gw12 => report.decide(Verdict::CountableInfinite, "D1.gw12", "matches k[x,y,z]/(xy,yz,z^2)"),
        FamilyKind::Graded12 => report.decide(Verdict::Finite, "D1.graded12", "matches the 2x2 minors of [[x,y,z],[y,z,x]]"),
        _ => {
            let asserted: Vec<&'static str> = assumptions
                .iter()
                .map(|a| match a {
                    Assumption::Reduced => "reduced_asserted",
                    Assumption::Domain => "domain_asserted",
                })
                .collect();
            if asserted.is_empty() {
                report.open("D1.open", "h-vector (1,2), no catalog match", "dr_unsupported");
                return Ok(());
            }
            report.assumptions_used.extend(asserted);
            let dr = graded_reduced_dr(h);
            let detail = format!("e = {}, lambda = {}", dr.e, dr.lambda);
            if dr.finite_type {
                report.decide(Verdict::Finite, "D1.reduced_dr", detail);
                report.cite("D1.reduced", "reduced with h-vector (1,2)");
            } else {
                report.decide(Verdict::Uncountable, "D1.reduced_dr", detail);
            }
            report.drozd_roiter = Some(dr);
        }
    }
    Ok(())
}

/// Rewrite data for the first variable that is a nonzerodivisor, with the
/// next two variables as `u` and `v`.
fn obstruction_for(min: &RingPresentation, opts: &Options) -> Result<Option<ObstructionData>> {
    let n = min.nvars();
    for x in 0..n {
        if !is_linear_nonzerodivisor(min, &Polynomial::var(n, x), &opts.limits)? {
            continue;
        }
        let mut others = (0..n).filter(|&j| j != x);
        let (Some(u), Some(v)) = (others.next(), others.next()) else {
            return Ok(None);
        };
        return match rewrite_in_xm(min, x, u, v, &opts.limits) {
            Ok(o) => Ok(Some(o)),
            Err(e) if e.is_budget() => Err(e),
            Err(_) => Ok(None),
        };
    }
    Ok(None)
}

fn gorenstein(min: &RingPresentation, inv: &RingInvariants, report: &mut ClassificationReport) -> Result<()> {
    if !inv.is_hypersurface {
        report.open("DG.conjecture", "Gorenstein, not a hypersurface", "gorenstein_non_hypersurface");
        return Ok(());
    }
    let f = &min.generators()[0];
    let n = min.nvars();
    if f.degree() != Some(2) {
        report.decide(
            Verdict::Uncountable,
            "DG.higher_degree",
            format!("hypersurface of degree {}", f.degree().unwrap_or(0)),
        );
        return Ok(());
    }
    let r = quadric_rank(f)?;
    report.family = Some(FamilyTag {
        kind: FamilyKind::Quadric { rank: r, nvars: n },
        certificate: Some(crate::families::Certificate::Invariant),
    });
    let detail = format!("quadric of rank {r} in {n} variables");
    if r == n {
        report.decide(Verdict::Finite, "DG.a1", detail);
    } else if r + 1 == n {
        report.decide(Verdict::CountableInfinite, "DG.a_infinity", detail);
    } else {
        report.decide(Verdict::Uncountable, "DG.low_rank", detail);
    }
    Ok(())
}

fn non_gorenstein(min: &RingPresentation, inv: &RingInvariants, opts: &Options, report: &mut ClassificationReport) -> Result<()> {
    let sing = singular_locus(min, opts)?;
    let isolated = sing.isolated;
    let sdim = sing.singular_dim;
    report.singularity = Some(sing);
    if !inv.is_min_mult {
        let detail = format!("h-vector {}, not of minimal multiplicity", hvector_text(&inv.hvector));
        if inv.dim >= 3 {
            report.decide(Verdict::Uncountable, "D2.dim3_not_min_mult", detail);
        } else {
            report.assumptions_used.push("equidimensional_assumed");
            if isolated {
                report.decide(Verdict::Uncountable, "D2.dim2_isolated", format!("{detail}; isolated singularity"));
            } else {
                report.open(
                    "D2.dim2_non_isolated",
                    format!("{detail}; singular locus of dimension {sdim}"),
                    "non_isolated_singularity",
                );
            }
        }
        return Ok(());
    }
    let tag = match_named_family(min, &opts.limits)?;
    let kind = tag.kind.clone();
    report.family = Some(tag);
    let detail = format!("matches {}", kind.name());
    match kind {
        FamilyKind::Scroll(t) if t.entries().len() == 1 => report.decide(Verdict::Finite, "D2.scroll_m", detail),
        FamilyKind::Scroll(t) if t.entries() == [1, 2] => report.decide(Verdict::Finite, "D2.dim3_finite", detail),
        FamilyKind::VeroneseCone(5) => report.decide(Verdict::Finite, "D2.dim3_finite", detail),
        FamilyKind::VeroneseCone(6) => report.open("D2.veronese6", detail, "open_in_literature"),
        FamilyKind::VeroneseCone(_) => report.decide(Verdict::Uncountable, "D2.veronese_large", detail),
        FamilyKind::Scroll(_) => report.decide(Verdict::Uncountable, "D2.scroll_other", detail),
        _ => report.open("D2.unmatched", "minimal multiplicity, no catalog match", "family_unmatched"),
    }
    Ok(())
}
