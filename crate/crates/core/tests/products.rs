mod common;

use common::*;
use proptest::prelude::*;
use qsl2::catalog::{basic_derivations, d_a, del_class, del_e, del_h, phi, top_cup, trace_one, twisted_central, Sign};
use qsl2::products::{cap, cup, pair};
use qsl2::{Aut, Cochain, Elem, Error, Functional, Gen, Word};

#[test]
fn degree_zero_cup_is_the_opposite_product() {
    let b = twisted_central(1, 0);
    let c = twisted_central(0, 1);
    let bc = cup(&b, &c);
    assert_eq!(bc.degree(), 0);
    assert_eq!(bc.eval(&[]).unwrap(), w(0, 1, 1));
    assert_eq!(bc.twist(), &sigma(-2, 0));
}

#[test]
fn central_then_derivation() {
    let [a, _, _, _] = gens();
    let f = twisted_central(1, 0).cup(&del_h(Sign::Plus));
    assert_eq!(f.eval(&[a]).unwrap(), w(1, 1, 0).scale(&-q(-1)));
}

#[test]
fn del_e_cup_d() {
    let [a, b, c, d] = gens();
    let f = del_class(Sign::Plus, 2);
    let db = oracle_mul(&d, &b).scale(&q(1));
    let dd = oracle_mul(&d, &d).scale(&q(1));
    let got: Vec<Elem> = [a, b, c, d].iter().map(|x| f.eval(&[x.clone()]).unwrap()).collect();
    assert_eq!(got, vec![db, Elem::zero(), dd, Elem::zero()]);
    let g = del_class(Sign::Minus, 2);
    let [a, _, _, _] = gens();
    let aa = oracle_mul(&a, &a).scale(&q(-1));
    let ab = oracle_mul(&a, &Elem::gen(Gen::B)).scale(&q(-1));
    assert_eq!(g.generator_values().unwrap(), [Elem::zero(), Elem::zero(), aa, ab]);
}

#[test]
fn cup_twists_compose() {
    let ds = basic_derivations::<qsl2::Scalar>();
    for f in &ds {
        for g in &ds {
            let h = cup(f, g);
            assert_eq!(h.degree(), 2);
            assert_eq!(h.twist(), &g.twist().compose(f.twist()));
        }
    }
    let z = twisted_central(2, 1);
    let h = cup(&ds[1], &z);
    assert_eq!(h.twist(), &z.twist().compose(ds[1].twist()));
}

#[test]
fn derivation_commutes_past_central_elements() {
    // ∂ ⌣ z = τ⁻¹(z) ⌣ ∂, with τ the twist of ∂
    let words = Gen::ALL.map(Gen::word);
    for d in basic_derivations::<qsl2::Scalar>() {
        for (j, k) in [(1, 0), (0, 1), (1, 1), (2, 1)] {
            let z = twisted_central(j, k);
            let zval = z.as_central().unwrap().clone();
            let moved = Cochain::central(d.twist().inverse().apply(&zval), z.twist().clone());
            let l = d.cup(&z);
            let r = moved.cup(&d);
            assert_eq!(l.twist(), r.twist());
            for x in words {
                assert_eq!(l.eval_words(&[x]), r.eval_words(&[x]), "{d} [{j},{k}] at {x}");
            }
        }
    }
}

#[test]
fn cap_examples() {
    let [a, b, c, d] = gens();
    let tw = sigma(-2, 0);
    let x = chain(tw.clone(), &[Elem::one(), b.clone(), c.clone()]).sub(&chain(tw.clone(), &[Elem::one(), c.clone(), b.clone()]));
    let got = cap(&x, &del_h(Sign::Plus)).unwrap();
    assert_eq!(got, chain(tw.clone(), &[b.clone(), c.clone()]).add(&chain(tw.clone(), &[c.clone(), b.clone()])));

    let first = cap(&d_a(), &top_cup()).unwrap();
    let bc = oracle_mul(&b, &c);
    assert_eq!(first.degree(), 0);
    assert_eq!(first.body().to_elem(), bc.scale(&(q(-1) - q(1))).add(&Elem::one()));
    assert_eq!(first.twist(), &sigma(0, -2));

    let y = chain(tw.clone(), &[a.clone(), d.clone()]);
    let got = cap(&y, &twisted_central(1, 0)).unwrap();
    assert_eq!(got.body(), chain(tw, &[w(1, 1, 0).scale(&q(-1)), d]).body());
    assert_eq!(got.twist(), &sigma(-3, 0));
}

#[test]
fn cap_rejects_high_degree_cochains() {
    let ch = chain(sigma(0, 0), &[Elem::one(), Elem::gen(Gen::B)]);
    assert!(matches!(cap(&ch, &top_cup()), Err(Error::Degree(_))));
}

#[test]
fn pairing_examples() {
    let da: C = d_a();
    let f = Functional::new(trace_one(), top_cup());
    assert_eq!(pair(&f, &da).unwrap(), int(1));
    assert_eq!(pair(&phi(), &da).unwrap(), int(1));
    let unit = Functional::new(trace_one(), Cochain::central(Elem::one(), Aut::identity()));
    let one = chain(sigma(0, -2), &[Elem::one()]);
    assert_eq!(pair(&unit, &one).unwrap(), int(1));
    // the wrong twist is reported, not silently paired
    let wrong = chain(sigma(-2, 0), &[Elem::one()]);
    assert!(matches!(pair(&unit, &wrong), Err(Error::TwistMismatch { .. })));
    assert!(matches!(pair(&unit, &da), Err(Error::Degree(_))));
}

#[test]
fn pairing_is_trace_of_cap() {
    let da: C = d_a();
    let capped = cap(&da, &top_cup()).unwrap();
    let tr = trace_one();
    let direct = tr.eval(&capped.body().to_elem());
    assert_eq!(direct, pair(&phi(), &da).unwrap());
}

fn cochain_pool() -> Vec<Cochain> {
    let mut v: Vec<Cochain> = basic_derivations().to_vec();
    v.push(del_class(Sign::Plus, 2));
    v.push(del_class(Sign::Minus, -2));
    v.push(twisted_central(1, 0));
    v.push(twisted_central(0, 2));
    v.push(Cochain::aut_diff(Aut::sigma(int(1), int(2))));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cap_is_a_right_action(seed in any::<u64>(), i in 0usize..11, j in 0usize..11, deg in 0usize..=3) {
        let pool = cochain_pool();
        let (f, g) = (&pool[i], &pool[j]);
        let n = deg.max(f.degree() + g.degree());
        let mut r = rng(seed);
        let ch = random_chain(&mut r, n, sigma(-2, 1), 3);
        let lhs = cap(&cap(&ch, f).unwrap(), g).unwrap();
        let rhs = cap(&ch, &cup(f, g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn boundary_commutes_with_cap_by_cocycles(seed in any::<u64>(), i in 0usize..11, j in 0usize..11, extra in 1usize..=2) {
        let pool = cochain_pool();
        let f = if (i + j) % 2 == 0 { pool[i].clone() } else { cup(&pool[i], &pool[j]) };
        let m = f.degree();
        let mut r = rng(seed);
        let ch = random_chain(&mut r, m + extra, sigma(-3, 0), 3);
        let lhs = cap(&ch, &f).unwrap().boundary().unwrap();
        let mut rhs = cap(&ch.boundary().unwrap(), &f).unwrap();
        if m % 2 == 1 {
            rhs = rhs.neg();
        }
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn hochschild_coboundary_of_a_derivation_vanishes_on_words() {
    let f = del_e::<qsl2::Scalar>(Sign::Minus).coboundary();
    for x in [Word::new(1, 1, 0), Word::new(-2, 0, 1), Word::new(0, 2, 2)] {
        for y in [Word::new(0, 1, 0), Word::new(3, 0, 0), Word::new(-1, 1, 1)] {
            assert!(f.eval_words(&[x, y]).is_zero());
        }
    }
}
