mod common;

use common::*;
use proptest::prelude::*;
use qsl2::catalog::{del_class, del_h, omega2, omega2p, twisted_central, Sign};
use qsl2::cyclic::connes_b;
use qsl2::solver::{
    boundary_matrix, independent_mod_boundaries, inner_witness, solve_boundary, solve_boundary_in, Complex, Independence,
    PivotRule, SolveStatus, TruncationBox,
};
use qsl2::{Aut, Cochain, Elem, Field, Word};

fn small() -> TruncationBox {
    TruncationBox::new(1, 1, 1).with_degree(1)
}

#[test]
fn one_tensor_b_column_is_zero() {
    let m = boundary_matrix(1, &sigma(-2, 0), &small());
    let col = m.col_tuples.iter().position(|t| *t == vec![Word::ONE, Word::new(0, 1, 0)]).unwrap();
    assert!(m.column(col).is_empty());
    assert_eq!(m.cols, 12 * 12);
    assert!(m.entries().all(|(_, x)| !x.is_zero()));
}

#[test]
fn bc_a_d_column_has_three_terms() {
    let bx = TruncationBox::new(1, 1, 1).with_degree(2).with_len(4);
    let m = boundary_matrix(2, &sigma(-2, 0), &bx);
    let t = vec![Word::new(0, 1, 1), Word::new(1, 0, 0), Word::new(-1, 0, 0)];
    let col = m.col_tuples.iter().position(|c| *c == t).unwrap();
    let [a, b, c, d] = gens();
    let bc = oracle_mul(&b, &c);
    let want = chain(sigma(-2, 0), &[oracle_mul(&a, &bc).scale(&q(-2)), d.clone()])
        .sub(&chain(sigma(-2, 0), &[bc.clone(), Elem::one().add(&bc.scale(&q(1)))]))
        .add(&chain(sigma(-2, 0), &[oracle_mul(&d, &bc).scale(&q(2)), a]));
    let got = m.column(col);
    assert_eq!(got.len(), want.len());
    for (tup, x) in want.terms() {
        assert_eq!(got[tup], x);
    }
}

#[test]
fn empty_box_gives_empty_matrix() {
    let m = boundary_matrix(3, &sigma(-2, 0), &TruncationBox::new(0, 0, 0).with_degree(0));
    assert_eq!((m.rows, m.cols, m.nnz()), (0, 0, 0));
}

#[test]
fn b_tensor_c_is_homologous_to_minus_c_tensor_b() {
    let tw = sigma(-3, 1);
    let [_, b, c, _] = gens();
    let target = chain(tw.clone(), &[b.clone(), c.clone()]).add(&chain(tw.clone(), &[c, b]).scale(&q(-1)));
    // b ⊗ c + μ^{-1} c ⊗ b = 1 ⊗ bc up to a boundary, and 1 ⊗ bc bounds when λ ≠ q^{-2}
    let r = solve_boundary(&target, &TruncationBox::default());
    assert_eq!(r.status, SolveStatus::WitnessFound);
    assert_eq!(r.witness.unwrap().boundary().unwrap(), target);
}

#[test]
fn b_tensor_c_relation_fails_at_q_minus_two() {
    // λ = q^{-2}: [b ⊗ c] pairs nontrivially, so no witness anywhere
    let tw = sigma(-2, 0);
    let [_, b, c, _] = gens();
    let target = chain(tw.clone(), &[b.clone(), c.clone()]).add(&chain(tw, &[c, b]));
    let r = solve_boundary(&target, &TruncationBox::new(1, 2, 2));
    assert_eq!(r.status, SolveStatus::NoWitnessInBox);
}

#[test]
fn zero_target_has_zero_witness() {
    let r = solve_boundary(&C::zero(1, sigma(-2, 0)), &TruncationBox::default());
    assert!(r.found());
    assert!(r.witness.unwrap().is_zero());
}

#[test]
fn b_of_b_squared() {
    let tw = sigma(-2, 0);
    let b2 = chain(tw.clone(), &[w(0, 2, 0)]);
    let bb = chain(tw.clone(), &[w(0, 1, 0), w(0, 1, 0)]);
    let target = connes_b(&b2).unwrap().sub(&bb.scale(&int(2)));
    let expected = chain(tw, &[Elem::one(), w(0, 1, 0), w(0, 1, 0)]).neg();
    assert_eq!(expected.boundary().unwrap(), target);
    for complex in [Complex::Unnormalised, Complex::Normalised] {
        let r = solve_boundary_in(&target, &TruncationBox::default(), complex, PivotRule::LeastWeight);
        assert!(r.found());
        let wb = r.witness.unwrap().boundary().unwrap();
        match complex {
            Complex::Unnormalised => assert_eq!(wb, target),
            Complex::Normalised => assert_eq!(wb.normalize(), target.normalize()),
        }
    }
}

#[test]
fn duplicated_cycle_is_dependent() {
    let tw = sigma(-2, 0);
    let z = chain(tw, &[w(0, 1, 0), w(0, 0, 1)]);
    match independent_mod_boundaries(&[z.clone(), z], &TruncationBox::default(), Complex::Unnormalised).unwrap() {
        Independence::Dependent { coefficients, witness } => {
            assert_eq!(coefficients[0], -coefficients[1].clone());
            assert!(!coefficients[0].is_zero());
            assert!(witness.is_zero());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn omega2_pair_is_independent() {
    let zs = [omega2(0, 0).unwrap(), omega2p(0, 0).unwrap()];
    let v = independent_mod_boundaries(&zs, &TruncationBox::new(2, 3, 3), Complex::Normalised).unwrap();
    assert!(matches!(v, Independence::Independent { .. }), "{v:?}");
}

#[test]
fn b_tensor_c_pair_is_dependent() {
    let tw = sigma(-3, 1);
    let [_, b, c, _] = gens();
    let zs = [chain(tw.clone(), &[b.clone(), c.clone()]), chain(tw, &[c, b]).scale(&q(-1))];
    match independent_mod_boundaries(&zs, &TruncationBox::default(), Complex::Unnormalised).unwrap() {
        Independence::Dependent { coefficients, witness } => {
            let lhs = zs[0].scale(&coefficients[0]).add(&zs[1].scale(&coefficients[1]));
            assert_eq!(witness.boundary().unwrap(), lhs);
            assert_eq!(coefficients[0], coefficients[1]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn independence_rejects_mixed_input() {
    let a = chain(sigma(-2, 0), &[w(0, 1, 0), w(0, 0, 1)]);
    let b = chain(sigma(-3, 0), &[w(0, 1, 0), w(0, 0, 1)]);
    assert!(independent_mod_boundaries(&[a.clone(), b], &TruncationBox::default(), Complex::Unnormalised).is_err());
    let c = chain(sigma(-2, 0), &[w(0, 1, 0)]);
    assert!(independent_mod_boundaries(&[a, c], &TruncationBox::default(), Complex::Unnormalised).is_err());
    assert!(independent_mod_boundaries(&[], &TruncationBox::default(), Complex::Unnormalised).is_err());
}

#[test]
fn inner_witness_examples() {
    let bx = TruncationBox::default();
    let f = Cochain::aut_diff(Aut::sigma(int(1), int(2)));
    let r = inner_witness(&f, &bx).unwrap();
    assert!(r.found());
    assert_eq!(r.witness.unwrap().body().to_elem(), Elem::one());

    let g = twisted_central(0, 1).cup(&del_class(Sign::Plus, 2));
    assert!(inner_witness(&g, &bx).unwrap().found());
    let g = twisted_central(1, 0).cup(&del_class(Sign::Minus, -2));
    assert!(inner_witness(&g, &bx).unwrap().found());

    let h = del_h(Sign::Plus);
    assert_eq!(inner_witness(&h, &TruncationBox::new(3, 3, 3)).unwrap().status, SolveStatus::NoWitnessInBox);
    assert!(inner_witness(&h.cup(&h), &bx).is_err());
}

#[test]
fn report_remembers_its_box() {
    let bx = TruncationBox::new(1, 2, 2).with_len(5);
    let r = solve_boundary(&C::zero(1, sigma(-2, 0)), &bx);
    assert_eq!(r.bx, bx);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    // every boundary of a small chain is found, with either pivot rule
    #[test]
    fn boundaries_are_found(seed in any::<u64>(), tw in 0usize..8) {
        let mut r = rng(seed);
        let tw = axiom_twists()[tw].clone();
        let x = random_chain(&mut r, 2, tw, 2);
        let y = x.boundary().unwrap();
        let bx = TruncationBox::new(1, 1, 1).with_len(x.max_len());
        for rule in [PivotRule::First, PivotRule::LeastWeight] {
            let rep = solve_boundary_in(&y, &bx, Complex::Unnormalised, rule);
            prop_assert!(rep.found());
            prop_assert_eq!(rep.witness.unwrap().boundary().unwrap(), y.clone());
        }
    }

    // verdicts do not depend on pivoting
    #[test]
    fn pivot_rules_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let y = random_chain(&mut r, 1, sigma(-2, 0), 2);
        let bx = TruncationBox::new(1, 1, 1);
        let a = solve_boundary_in(&y, &bx, Complex::Normalised, PivotRule::First);
        let b = solve_boundary_in(&y, &bx, Complex::Normalised, PivotRule::LeastWeight);
        prop_assert_eq!(a.status, b.status);
    }
}
