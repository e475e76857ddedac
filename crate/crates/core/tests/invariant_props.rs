mod oracle;
mod strategies;

use cmtype_core::families::{binary_form, gw12, graded12, quadric, scroll_ideal, veronese_cone_ideal, ScrollType};
use cmtype_core::groebner::RingPresentation;
use cmtype_core::invariants::{artinian_reduction, cm_and_type, hilbert_series, ring_invariants};
use cmtype_core::poly::{parse_presentation, Monomial, Polynomial, VariableSet};
use cmtype_core::singularity::singular_locus;
use cmtype_core::{Limits, Options, Rational};
use proptest::prelude::*;
use strategies::{ideal, linear_change};

fn ring(text: &str) -> RingPresentation {
    parse_presentation(text).unwrap().presentation
}

/// Small CM and non-CM rings with known shape.
fn corpus() -> Vec<RingPresentation> {
    vec![
        gw12(),
        graded12(),
        ring("ring: x, y ; ideal: x*y"),
        ring("ring: x, y ; ideal: x*y^2"),
        ring("ring: x, u, v, w ; ideal: u*v, u*w, v*w, u^2 - x*u, v^2 - x*v, w^2 - x*w"),
        ring("ring: x, y, z, w ; ideal: x^2 + y^2 + z^2"),
        scroll_ideal(&ScrollType::new(vec![3]).unwrap()),
        scroll_ideal(&ScrollType::new(vec![1, 2]).unwrap()),
        veronese_cone_ideal(5).unwrap(),
        ring("ring: x, y ; ideal: x^2, x*y"),
        ring("ring: x, y, z ; ideal: x*y, x*z"),
    ]
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn trimmed(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[test]
fn cm_criterion_matches_known_rings() {
    let opts = Options::default();
    for pres in corpus() {
        let inv = ring_invariants(&pres, &opts).unwrap();
        let sum: i64 = inv.hvector.iter().sum();
        assert_eq!(sum, inv.multiplicity);
        if inv.is_cm {
            assert_eq!(inv.artinian_length as i64, sum);
        } else {
            assert!(inv.artinian_length as i64 > sum);
        }
    }
    let non_cm = ring("ring: x, y ; ideal: x^2, x*y");
    assert!(!ring_invariants(&non_cm, &opts).unwrap().is_cm);
}

#[test]
fn socle_of_monomial_artinian_rings() {
    let cases: &[(usize, &[&[u32]])] = &[
        (2, &[&[2, 0], &[1, 1], &[0, 3]]),
        (2, &[&[3, 0], &[0, 3]]),
        (3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0]]),
        (3, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 3]]),
        (3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]),
    ];
    for (n, gens) in cases {
        let polys: Vec<Polynomial> = gens
            .iter()
            .map(|e| Polynomial::term(Monomial::from_exponents(e.to_vec()), Rational::from_integer(1.into())))
            .collect();
        let pres = RingPresentation::from_generators(VariableSet::indexed("x", *n, false), polys).unwrap();
        let exps: Vec<Vec<u32>> = gens.iter().map(|e| e.to_vec()).collect();
        let red = artinian_reduction(&pres, &Options::default()).unwrap();
        assert_eq!(red.socle_dimension(), oracle::monomial_socle(*n, &exps), "{gens:?}");
        assert_eq!(cm_and_type(&pres, &Options::default()).unwrap().cm_type, Some(oracle::monomial_socle(*n, &exps)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h_vector_deflation_is_exact(pres in ideal(4, 3)) {
        let s = hilbert_series(pres.ideal(), &Limits::default()).unwrap();
        let sum: i64 = s.hvector.iter().sum();
        prop_assert!(sum > 0);
        let mut factor = vec![1i64];
        for _ in 0..(s.nvars - s.dim) {
            factor = poly_mul(&factor, &[1, -1]);
        }
        prop_assert_eq!(poly_mul(&s.hvector, &factor), trimmed(s.numerator.clone()));
    }

    #[test]
    fn free_variable_adds_one_to_dimension(pres in ideal(3, 3)) {
        let opts = Options::default();
        let base = ring_invariants(&pres, &opts).unwrap();
        let ext = ring_invariants(&pres.with_free_variable("t").unwrap(), &opts).unwrap();
        prop_assert_eq!(ext.dim, base.dim + 1);
        prop_assert_eq!(&ext.hvector, &base.hvector);
        prop_assert_eq!(ext.multiplicity, base.multiplicity);
        prop_assert_eq!(ext.is_cm, base.is_cm);
        prop_assert_eq!(ext.cm_type, base.cm_type);
    }

    #[test]
    fn cm_type_does_not_depend_on_seed(pres in ideal(3, 3)) {
        let reports: Vec<_> = (1..=5u64)
            .map(|seed| cm_and_type(&pres, &Options { seed, ..Options::default() }).unwrap())
            .collect();
        // The length itself depends on the parameters unless R is CM.
        for r in &reports[1..] {
            prop_assert_eq!(
                (r.is_cm, r.cm_type, r.is_gorenstein, r.multiplicity),
                (reports[0].is_cm, reports[0].cm_type, reports[0].is_gorenstein, reports[0].multiplicity)
            );
        }
        for r in &reports {
            prop_assert_eq!(r.is_cm, r.length as i64 == r.multiplicity);
            prop_assert!(r.length as i64 >= r.multiplicity);
        }
    }

    #[test]
    fn quadric_singular_locus_is_the_kernel(n in 1usize..=5, r in 1usize..=5, change in linear_change(5)) {
        prop_assume!(r <= n);
        let q = quadric(r, n).unwrap();
        let images: Vec<Polynomial> = change[..n]
            .iter()
            .map(|l| {
                let coeffs: Vec<Rational> = l.linear_coefficients()[..n].to_vec();
                Polynomial::linear_form(&coeffs)
            })
            .collect();
        prop_assume!(oracle::rank(images.iter().map(|p| p.linear_coefficients()).collect()) == n);
        let moved = RingPresentation::from_generators(
            q.variables().clone(),
            vec![q.generators()[0].substitute(&images)],
        )
        .unwrap();
        let s = singular_locus(&moved, &Options::default()).unwrap();
        prop_assert_eq!(s.singular_dim, (n - r) as i64);
        prop_assert_eq!(s.isolated, r == n);
    }
}

#[test]
fn binary_form_invariants() {
    let opts = Options::default();
    for profile in [vec![1, 1], vec![2, 1], vec![3], vec![2, 2, 1]] {
        let inv = ring_invariants(&binary_form(&profile).unwrap(), &opts).unwrap();
        let d: u32 = profile.iter().sum();
        assert_eq!((inv.dim, inv.multiplicity), (1, d as i64));
        assert_eq!(inv.hvector, vec![1; d as usize]);
        assert_eq!(inv.is_gorenstein, Some(true));
    }
}
