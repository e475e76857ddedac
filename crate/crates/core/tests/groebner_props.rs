mod oracle;
mod strategies;

use cmtype_core::groebner::{buchberger, normal_form, GroebnerBasis};
use cmtype_core::invariants::hilbert_series;
use cmtype_core::poly::{parse_presentation, render_presentation, Monomial, MonomialOrder, Polynomial};
use cmtype_core::{Limits, Rational};
use proptest::prelude::*;
use strategies::{homogeneous, ideal, polynomial};

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (mf, cf) = f.leading_term(order).unwrap();
    let (mg, cg) = g.leading_term(order).unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf).unwrap(), &cf.recip());
    let b = g.mul_term(&l.div(mg).unwrap(), &cg.recip());
    &a - &b
}

fn check_basis(gb: &GroebnerBasis, gens: &[Polynomial]) {
    let order = gb.order();
    let els = gb.elements();
    for (i, f) in els.iter().enumerate() {
        for g in &els[i + 1..] {
            assert!(normal_form(&s_polynomial(f, g, order), gb).is_zero());
        }
    }
    for g in gens {
        assert!(gb.contains(g), "generator not in its own ideal");
    }
    assert!(gb.is_reduced());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in polynomial(3, 3), b in polynomial(3, 3), c in polynomial(3, 2)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(3), a.clone());
        prop_assert!((&a * &Polynomial::zero(3)).is_zero());
    }

    #[test]
    fn orders_are_total_and_multiplicative(
        a in prop::collection::vec(0u32..4, 3),
        b in prop::collection::vec(0u32..4, 3),
        c in prop::collection::vec(0u32..4, 3),
    ) {
        let (a, b, c) = (Monomial::from_exponents(a), Monomial::from_exponents(b), Monomial::from_exponents(c));
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let ab = order.compare(&a, &b).unwrap();
            prop_assert_eq!(ab.reverse(), order.compare(&b, &a).unwrap());
            prop_assert_eq!(ab.is_eq(), a == b);
            prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)).unwrap(), ab);
            prop_assert!(order.compare(&a, &Monomial::one(3)).unwrap().is_ge());
            if ab.is_le() && order.compare(&b, &c).unwrap().is_le() {
                prop_assert!(order.compare(&a, &c).unwrap().is_le());
            }
        }
    }

    #[test]
    fn render_then_parse_is_identity(pres in ideal(3, 3)) {
        let text = render_presentation(&pres);
        let back = parse_presentation(&text).unwrap().presentation;
        prop_assert_eq!(back.generators(), pres.generators());
        prop_assert_eq!(render_presentation(&back), text);
    }

    #[test]
    fn normal_form_is_a_remainder(pres in ideal(3, 3), f in homogeneous(3, 3, 4)) {
        let gb = buchberger(pres.ideal(), MonomialOrder::DegRevLex).unwrap();
        let r = normal_form(&f, &gb);
        prop_assert!(gb.contains(&(&f - &r)));
        let lead = gb.leading_monomials();
        for (m, _) in r.terms() {
            prop_assert!(!lead.iter().any(|l| l.divides(m)));
        }
        prop_assert_eq!(normal_form(&r, &gb), r);
    }
}

proptest! {
    // The 200-ideal suite: Buchberger's output is a reduced basis whose
    // S-polynomials all reduce to zero, and the Hilbert function read off
    // the series agrees with dense linear algebra up to degree 6.
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn groebner_suite(pres in ideal(3, 3), lex in any::<bool>()) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        let gb = buchberger(pres.ideal(), order).unwrap();
        check_basis(&gb, pres.generators());
        if gb.is_unit() {
            return Ok(());
        }
        let series = hilbert_series(pres.ideal(), &Limits::default()).unwrap();
        for d in 0..=6u32 {
            prop_assert_eq!(
                series.value(d as usize),
                oracle::hilbert_function(3, pres.generators(), d) as i64,
                "degree {}", d
            );
        }
    }
}

#[test]
fn unit_ideal_basis_is_one() {
    let pres = parse_presentation("ring: x, y ; ideal: x - 1").unwrap().presentation;
    let gb = buchberger(pres.ideal(), MonomialOrder::DegRevLex).unwrap();
    assert!(!gb.is_unit());
    let both = parse_presentation("ring: x ; ideal: x, x + 1").unwrap().presentation;
    let gb = buchberger(both.ideal(), MonomialOrder::DegRevLex).unwrap();
    assert!(gb.is_unit());
    assert!(gb.contains(&Polynomial::constant(1, Rational::from_integer(7.into()))));
}
