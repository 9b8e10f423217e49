mod common;

use common::*;
use proptest::prelude::*;
use qsl2::algebra::{relations, twisted_commutator};
use qsl2::{Aut, Elem, Field, Gen, Scalar, Word};

#[test]
fn closed_form_product_matches_rewriting() {
    for i in -3..=3 {
        for j in 0..=2 {
            for k in 0..=2 {
                for l in -3..=3 {
                    for m in 0..=2 {
                        let x = w(i, j, k);
                        let y = w(l, m, 2 - m);
                        assert_eq!(x.mul(&y), oracle_mul(&x, &y), "{x} * {y}");
                    }
                }
            }
        }
    }
}

#[test]
fn a_squared_d() {
    let [a, _, _, d] = gens();
    let got = a.mul(&a).mul(&d);
    assert_eq!(got, oracle_mul(&a.mul(&a), &d));
    assert_eq!(got, w(1, 0, 0).add(&w(1, 1, 1).scale(&q(1))));
}

#[test]
fn defining_relations() {
    for (name, r) in relations::<Scalar>() {
        assert!(r.is_zero(), "{name} leaves {r}");
    }
}

fn commutator_closed_form(wd: Word, g: Gen, l: &Scalar, m: &Scalar) -> Elem {
    let (i, j, k) = (wd.i, wd.j, wd.k);
    let jk = (j + k) as i64;
    let li = l.inverse().unwrap();
    let mi = m.inverse().unwrap();
    let ii = i as i64;
    match g {
        Gen::A => {
            let mut r = w(i + 1, j, k).scale(&(q(-jk) - l));
            if i < 0 {
                r.add_assign(&w(i + 1, j + 1, k + 1).scale(&(q(-jk - 1) - l.clone() * q(-1 - 2 * ii))));
            }
            r
        }
        Gen::B => w(i, j + 1, k).scale(&(int(1) - m.clone() * q(-ii))),
        Gen::C => w(i, j, k + 1).scale(&(int(1) - mi * q(-ii))),
        Gen::D => {
            let mut r = w(i - 1, j, k).scale(&(q(jk) - &li));
            if i > 0 {
                r.add_assign(&w(i - 1, j + 1, k + 1).scale(&(q(jk + 1) - li * q(1 - 2 * ii))));
            }
            r
        }
    }
}

#[test]
fn twisted_commutators_closed_forms() {
    let params = [q(0), q(1), q(-2), q(3)];
    for l in &params {
        for m in &params {
            let s = Aut::sigma(l.clone(), m.clone());
            for i in -4..=4 {
                for j in 0..=4 {
                    for k in 0..=4 {
                        let wd = Word::new(i, j, k);
                        for g in Gen::ALL {
                            let got = twisted_commutator(&Elem::word(wd), g, &s);
                            assert_eq!(got, commutator_closed_form(wd, g, l, m), "{wd} {g:?} {s}");
                        }
                    }
                }
            }
        }
    }
}

fn arb_elem() -> impl Strategy<Value = Elem> {
    let term = ((-3i32..=3, 0u32..=3, 0u32..=3), -3i64..=3, -2i64..=2);
    prop::collection::vec(term, 1..=3).prop_map(|ts| {
        Elem::from_terms(ts.into_iter().map(|((i, j, k), c, e)| (Word::new(i, j, k), int(c) * q(e))))
    })
}

fn arb_aut() -> impl Strategy<Value = Aut> {
    (any::<bool>(), -2i64..=2, -2i64..=2, 1i64..=3).prop_map(|(t, a, b, k)| {
        let l = q(a) * int(k);
        let m = q(b);
        if t { Aut::tau(l, m) } else { Aut::sigma(l, m) }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn associativity(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn automorphisms_are_multiplicative(s in arb_aut(), x in arb_elem(), y in arb_elem()) {
        prop_assert_eq!(s.apply(&x.mul(&y)), s.apply(&x).mul(&s.apply(&y)));
    }

    #[test]
    fn sigma_composition(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3, x in arb_elem()) {
        let s1 = Aut::sigma(q(a), q(b));
        let s2 = Aut::sigma(q(c), int(2) * q(d));
        let both = Aut::sigma(q(a + c), int(2) * q(b + d));
        prop_assert_eq!(s1.compose(&s2).clone(), both.clone());
        prop_assert_eq!(s1.apply(&s2.apply(&x)), both.apply(&x));
    }

    #[test]
    fn counit_is_multiplicative(x in arb_elem(), y in arb_elem()) {
        prop_assert_eq!(x.mul(&y).counit(), x.counit() * y.counit());
    }
}
