//! JSON views of core results.

use cmtype_core::classifier::{ClassificationReport, Justification, ObstructionData};
use cmtype_core::dim1::{DrozdRoiterReport, NumericalSemigroup};
use cmtype_core::families::{catalog_presentation, Certificate, FamilyTag};
use cmtype_core::invariants::RingInvariants;
use cmtype_core::poly::VariableSet;
use cmtype_core::singularity::SingularityReport;
use cmtype_core::groebner::RingPresentation;
use serde_json::{json, Map, Value};

pub fn invariants(inv: &RingInvariants) -> Value {
    json!({
        "dim": inv.dim,
        "embdim": inv.embdim,
        "hilbert_numerator": inv.numerator,
        "hvector": inv.hvector,
        "multiplicity": inv.multiplicity,
        "artinian_length": inv.artinian_length,
        "is_cm": inv.is_cm,
        "cm_type": inv.cm_type,
        "is_gorenstein": inv.is_gorenstein,
        "is_min_mult": inv.is_min_mult,
        "is_hypersurface": inv.is_hypersurface,
        "is_regular": inv.is_regular,
    })
}

pub fn singularity(s: &SingularityReport) -> Value {
    json!({
        "codim": s.codim,
        "minors": s.minors,
        "singular_dim": s.singular_dim,
        "isolated": s.isolated,
        "equidimensional_assumed": s.equidimensional_assumed,
    })
}

pub fn family(tag: &FamilyTag, vars: &VariableSet) -> Value {
    let (certificate, assignment) = match &tag.certificate {
        None => (Value::Null, Value::Null),
        Some(Certificate::Invariant) => (json!("invariant"), Value::Null),
        Some(Certificate::Permutation(p)) => {
            let catalog = catalog_presentation(&tag.kind).map(|c| c.variables().clone());
            let map: Map<String, Value> = p
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let from = catalog.as_ref().map_or_else(|| i.to_string(), |c| c.name(i).to_string());
                    (from, json!(vars.name(j)))
                })
                .collect();
            (json!("permutation"), Value::Object(map))
        }
    };
    json!({
        "name": tag.kind.name(),
        "certificate": certificate,
        "variable_map": assignment,
    })
}

pub fn drozd_roiter(dr: &DrozdRoiterReport) -> Value {
    json!({
        "e": dr.e,
        "lambda": dr.lambda,
        "dr1": dr.dr1,
        "dr2": dr.dr2,
        "finite_type": dr.finite_type,
        "witnesses": dr.witnesses,
    })
}

pub fn semigroup(sg: &NumericalSemigroup) -> Value {
    json!({
        "generators": sg.generators(),
        "frobenius": sg.frobenius(),
        "gaps": sg.gaps(),
    })
}

pub fn obstruction(o: &ObstructionData) -> Value {
    let rows: Vec<Vec<String>> = o.a.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let f: Vec<Value> = o
        .f_coeffs
        .iter()
        .map(|(j, c)| json!({"column": o.basis[*j], "coefficients": c.iter().map(ToString::to_string).collect::<Vec<_>>()}))
        .collect();
    json!({
        "x": o.basis[o.x_index],
        "u": o.basis[o.u_index],
        "v": o.basis[o.v_index],
        "basis": o.basis,
        "a": rows,
        "f_coeffs": f,
        "residuals_zero": o.residuals_zero,
    })
}

pub fn justification(j: &Justification) -> Value {
    json!({
        "rule": j.rule,
        "citation": j.citation,
        "quote": j.quote,
        "detail": j.detail,
    })
}

pub fn verdict(r: &ClassificationReport) -> Value {
    json!({
        "verdict": r.verdict.as_str(),
        "reason": r.reason,
        "assumptions_used": r.assumptions_used,
        "budget_exceeded": r.budget_exceeded,
    })
}

pub fn presentation(pres: &RingPresentation) -> Value {
    let vars = pres.variables();
    let gens: Vec<String> = pres.generators().iter().map(|g| g.display(vars).to_string()).collect();
    json!({
        "ring": vars.names(),
        "ideal": gens,
    })
}
