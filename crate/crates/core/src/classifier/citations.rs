//! Anchors for verdict justifications: a rule id, a short location label and
//! a short verbatim anchor phrase (TeX markup normalized to plain text).

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Citation {
    pub rule: &'static str,
    pub label: &'static str,
    pub quote: &'static str,
}

const fn c(rule: &'static str, label: &'static str, quote: &'static str) -> Citation {
    Citation { rule, label, quote }
}

pub const CITATIONS: &[Citation] = &[
    c("regular", "§6 Arbitrary Dimension", "The following rings are shown to be graded countable type"),
    c("D0.hypersurface", "Prop 2.1", "R is a hypersurface ring"),
    c("D0.not_hypersurface", "Prop 2.1 proof", "uncountably many distinct homogeneous ideals"),
    c("D1.simple_curve", "Cor 3.4 (1)-(3)", "items (1)-(3) have graded finite Cohen-Macaulay type"),
    c("D1.a_infinity", "Cor 3.4 (5)", "the rings (4) and (5) are of graded countable Cohen-Macaulay type"),
    c("D1.d_infinity", "Cor 3.4 (4)", "the rings (4) and (5) are of graded countable Cohen-Macaulay type"),
    c("D1.other_curve", "§1.1", "countable Cohen-Macaulay type if and only if"),
    c("D1.h1n", "Thm 3.3", "is not of graded countable Cohen-Macaulay type"),
    c("D1.hvector", "Cor 3.5", "the possible h-vectors are"),
    c("D1.gw12", "§3.2 eqn:gw-1,2", "having h-vector (1,2)"),
    c("D1.graded12", "Cor 3.6 (4)", "R is of graded finite type and isomorphic"),
    c("D1.reduced_dr", "Prop 3.2", "The Drozd-Roĭter conditions are equivalent to the following"),
    c("D1.reduced", "Cor 3.6", "R is of graded finite type and isomorphic"),
    c("D1.open", "§3.2", "classify the rings whose h-vector is (1,2)"),
    c("D2.dim3_not_min_mult", "§4.2", "must be a domain and have minimal multiplicity"),
    c("D2.dim2_isolated", "§4.1 via Prop 4.2", "must be a domain and have minimal multiplicity"),
    c("D2.dim2_non_isolated", "Prop 4.2 remarks", "remove the isolated singularity condition"),
    c("D2.scroll_m", "Prop 4.2", "R is of graded finite type and is isomorphic to"),
    c("D2.dim3_finite", "Prop 4.5", "is isomorphic one of the following rings"),
    c("D2.veronese6", "§4.1", "it is unclear if the ring is graded countable type or not"),
    c("D2.veronese_large", "§4.1", "the dimension of the singular locus is larger than 1"),
    c("D2.scroll_other", "Prop 4.5 proof", "has |k| many indecomposable graded"),
    c("D2.unmatched", "§4.1", "standard graded Cohen-Macaulay domains of minimal multiplicity have the following classification"),
    c("DG.a1", "§5 list (A1)", "the h-vector is (1,1)"),
    c("DG.a_infinity", "§5 list (A∞)", "the h-vector is (1,1)"),
    c("DG.low_rank", "§1.1", "countable Cohen-Macaulay type if and only if"),
    c("DG.higher_degree", "§1.1", "countable Cohen-Macaulay type if and only if"),
    c("DG.conjecture", "Conjecture 5.1", "A Gorenstein ring of countable Cohen-Macaulay type is a hypersurface."),
];

/// Entry for a rule id; every rule the classifier fires is listed.
pub fn citation(rule: &str) -> &'static Citation {
    CITATIONS
        .iter()
        .find(|c| c.rule == rule)
        .unwrap_or_else(|| panic!("no citation for rule {rule}"))
}
