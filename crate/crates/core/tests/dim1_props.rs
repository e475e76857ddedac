mod oracle;

use cmtype_core::dim1::{arrangement_dr, semigroup_closure, semigroup_dr, semigroup_lambda_in_window, LineArrangement};
use cmtype_core::poly::{parse_polynomial, Polynomial, VariableSet};
use cmtype_core::Rational;
use num_traits::Zero;
use proptest::prelude::*;

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn xy() -> VariableSet {
    VariableSet::new(&["x", "y"]).unwrap()
}

fn line(a: i64, b: i64) -> Polynomial {
    Polynomial::linear_form(&[q(a), q(b)])
}

/// Points of the projective line cut out by each linear form `ax + by`.
fn directions(lines: &[Polynomial]) -> Vec<(Rational, Rational)> {
    lines
        .iter()
        .map(|l| {
            let c = l.linear_coefficients();
            (-c[1].clone(), c[0].clone())
        })
        .collect()
}

fn oracle_lambda(lines: &[Polynomial], reduction: &Polynomial) -> u64 {
    let c = reduction.linear_coefficients();
    oracle::arrangement_lambda(&directions(lines), (c[0].clone(), c[1].clone()), lines.len() as u32 + 3)
}

#[test]
fn three_seven() {
    let dr = semigroup_dr(&semigroup_closure(&[3, 7]).unwrap());
    assert_eq!((dr.e, dr.lambda, dr.finite_type), (3, 2, false));
    assert_eq!(oracle::semigroup_lambda(&[3, 7]), 2);
    assert_eq!(oracle::semigroup_gap_count(&[3, 7]), 2);
}

#[test]
fn controls() {
    let dr = semigroup_dr(&semigroup_closure(&[2, 3]).unwrap());
    assert_eq!((dr.lambda, dr.finite_type), (0, true));
    assert_eq!(oracle::semigroup_lambda(&[2, 3]), 0);
    let dr = semigroup_dr(&semigroup_closure(&[4, 5, 6, 7]).unwrap());
    assert_eq!((dr.e, dr.finite_type), (4, false));
    assert_eq!(dr.lambda, oracle::semigroup_lambda(&[4, 5, 6, 7]));
}

#[test]
fn four_lines_against_the_branch_oracle() {
    let vars = xy();
    let lines: Vec<Polynomial> = ["y", "x", "x - y", "x + y"].iter().map(|s| parse_polynomial(s, &vars).unwrap()).collect();
    let red = parse_polynomial("x + 2*y", &vars).unwrap();
    let expected = oracle_lambda(&lines, &red);
    assert_eq!(expected, 2);
    let dr = arrangement_dr(&LineArrangement::new(vars, lines, red).unwrap());
    assert_eq!((dr.e, dr.lambda, dr.finite_type), (4, expected, false));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn semigroup_lambda_matches_brute_force(gens in prop::collection::vec(2u64..=12, 1..=4)) {
        let g = gens.iter().fold(0, |a, &b| num_integer::gcd(a, b));
        prop_assume!(g == 1);
        let sg = semigroup_closure(&gens).unwrap();
        let dr = semigroup_dr(&sg);
        prop_assert_eq!(dr.e, *gens.iter().min().unwrap());
        prop_assert_eq!(dr.lambda, oracle::semigroup_lambda(&gens));
        prop_assert_eq!(dr.lambda, oracle::semigroup_gap_count(&gens));
        for s in 0..200i64 {
            prop_assert_eq!(sg.contains(s), oracle::semigroup_members(&gens, 200).contains(&(s as u64)));
        }
    }

    #[test]
    fn lambda_window_is_stable(gens in prop::collection::vec(2u64..=12, 1..=4), extra in 1u64..50) {
        let g = gens.iter().fold(0, |a, &b| num_integer::gcd(a, b));
        prop_assume!(g == 1);
        let sg = semigroup_closure(&gens).unwrap();
        let dr = semigroup_dr(&sg);
        let limit = (sg.frobenius() + sg.multiplicity() as i64).max(0) as u64;
        prop_assert_eq!(semigroup_lambda_in_window(&sg, limit + extra), dr.witnesses);
    }

    #[test]
    fn arrangement_lambda_matches_oracle_and_ignores_order(
        coeffs in prop::collection::vec((-4i64..=4, -4i64..=4), 2..=5),
        red in (-3i64..=3, -3i64..=3),
        rot in 0usize..5,
    ) {
        let lines: Vec<Polynomial> = coeffs.iter().map(|&(a, b)| line(a, b)).collect();
        let arr = LineArrangement::new(xy(), lines.clone(), line(red.0, red.1));
        let Ok(arr) = arr else { return Ok(()); };
        let dr = arrangement_dr(&arr);
        prop_assert_eq!(dr.e, lines.len() as u64);
        prop_assert_eq!(dr.lambda, oracle_lambda(&lines, &line(red.0, red.1)));
        let mut rotated = lines.clone();
        rotated.rotate_left(rot % lines.len());
        rotated.reverse();
        let again = arrangement_dr(&LineArrangement::new(xy(), rotated, line(red.0, red.1)).unwrap());
        prop_assert_eq!(again, dr);
    }
}

#[test]
fn directions_are_zeros_of_their_lines() {
    for l in [line(1, 0), line(0, 1), line(2, -3)] {
        let (u, v) = directions(std::slice::from_ref(&l))[0].clone();
        let c = l.linear_coefficients();
        assert!((&c[0] * &u + &c[1] * &v).is_zero());
    }
}
