mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use qsl2::catalog::{basic_derivations, del_f, del_h, Sign};
use qsl2::hopf::wedge2;
use qsl2::{Aut, Chain, Cochain, Elem, Error, Gen, Word};

fn gen_words() -> [Word; 4] {
    Gen::ALL.map(Gen::word)
}

#[test]
fn boundary_of_one_tensor_b() {
    let [_, b, _, _] = gens();
    let ch = chain(sigma(-2, 0), &[Elem::one(), b]);
    assert!(ch.boundary().unwrap().is_zero());
}

#[test]
fn boundary_of_bc_a_d() {
    let [a, b, c, d] = gens();
    let bc = oracle_mul(&b, &c);
    let ch = chain(sigma(-2, 0), &[bc.clone(), a.clone(), d.clone()]);
    let abc = oracle_mul(&a, &bc);
    let dbc = oracle_mul(&d, &bc);
    let want = chain(sigma(-2, 0), &[abc.scale(&q(-2)), d.clone()])
        .sub(&chain(sigma(-2, 0), &[bc.clone(), Elem::one().add(&bc.scale(&q(1)))]))
        .add(&chain(sigma(-2, 0), &[dbc.scale(&q(2)), a]));
    assert_eq!(ch.boundary().unwrap(), want);
}

#[test]
fn boundary_of_ca_wedge_db_normalised() {
    let [a, b, c, d] = gens();
    let ch = Chain::new(sigma(-2, 0), T::from_elem(&oracle_mul(&c, &a)).tensor(&wedge2(&d, &b)));
    let got = ch.boundary().unwrap().normalize();
    let bc2 = oracle_mul(&b, &oracle_mul(&c, &c));
    let want = chain(sigma(-2, 0), &[bc2.scale(&(q(3) - q(1))), b]);
    assert_eq!(got, want);
}

#[test]
fn degree_zero_boundary_is_an_error() {
    let ch = chain(sigma(0, 0), &[Elem::one()]);
    assert!(matches!(ch.boundary(), Err(Error::Degree(_))));
    assert!(ch.boundary_prime().is_err());
}

#[test]
fn faces_and_degeneracies() {
    let [a, b, c, d] = gens();
    let tw = sigma(-3, 1);
    let x = chain(tw.clone(), &[a.clone(), d.clone()]);
    assert_eq!(x.boundary_prime().unwrap(), chain(tw.clone(), &[oracle_mul(&a, &d)]));
    assert_eq!(x.degeneracy(0).unwrap(), chain(tw.clone(), &[a.clone(), Elem::one(), d.clone()]));
    let y = chain(tw.clone(), &[a.clone(), b.clone(), c.clone()]);
    assert_eq!(y.face(1).unwrap(), chain(tw.clone(), &[a.clone(), oracle_mul(&b, &c)]));
    assert!(matches!(y.face(3), Err(Error::IndexOutOfRange { index: 3, degree: 2 })));
    assert!(y.degeneracy(3).is_err());
    // the last face is twisted: σ_{λ,μ}(c) = μ^{-1} c
    assert_eq!(y.face(2).unwrap(), chain(tw, &[oracle_mul(&c, &a).scale(&q(-1)), b]));
}

#[test]
fn normalisation_examples() {
    let [a, b, c, d] = gens();
    let bc = oracle_mul(&b, &c);
    let tw = sigma(-2, 0);
    assert!(chain(tw.clone(), &[bc.clone(), Elem::one(), d.clone()]).normalize().is_zero());
    let x = chain(tw.clone(), &[Elem::one(), b.clone(), c.clone()]);
    assert_eq!(x.normalize(), x);
    let keep = chain(tw.clone(), &[bc.clone(), a.clone(), d.clone()]).sub(&chain(tw.clone(), &[bc.clone(), d, a]));
    let junk = chain(tw, &[b, Elem::one(), Elem::one()]);
    assert_eq!(keep.add(&junk).normalize(), keep);
}

#[test]
fn derivation_evaluations() {
    let [a, b, c, _] = gens();
    let h = del_h::<qsl2::Scalar>(Sign::Plus);
    assert!(h.eval(&[oracle_mul(&b, &c)]).unwrap().is_zero());
    let hf = h.cup(&del_f(Sign::Plus));
    assert_eq!(hf.eval(&[a.clone(), b.clone()]).unwrap(), w(2, 0, 0).scale(&-q(1)));
    let s = Cochain::aut_diff(Aut::sigma(int(1), int(2)));
    assert_eq!(s.eval(&[b.clone()]).unwrap(), b);
    assert!(matches!(h.eval(&[a, c]), Err(Error::Arity { expected: 1, got: 2 })));
}

#[test]
fn derivations_reject_inconsistent_values() {
    let [a, b, c, d] = gens();
    // a ↦ a, everything else 0 violates ad − q bc = 1
    let bad = Cochain::derivation([a, Elem::zero(), Elem::zero(), Elem::zero()], Aut::identity());
    assert!(bad.is_err());
    let ok = Cochain::derivation([a_neg(), b, c.neg(), d], Aut::identity());
    assert!(ok.is_ok());
}

fn a_neg() -> Elem {
    Elem::gen(Gen::A).neg()
}

#[test]
fn derivations_and_aut_differences_are_cocycles() {
    let mut ds: Vec<Cochain> = basic_derivations().to_vec();
    ds.push(Cochain::aut_diff(Aut::sigma(int(1), int(2))));
    ds.push(Cochain::aut_diff(sigma(-3, 1)));
    let ws = [Word::ONE, Word::new(1, 0, 0), Word::new(-1, 1, 0), Word::new(0, 1, 1), Word::new(2, 0, 1)];
    for f in &ds {
        let bf = f.coboundary();
        for x in ws {
            for y in ws {
                assert!(bf.eval_words(&[x, y]).is_zero(), "b({f}) at {x},{y}");
            }
        }
    }
}

#[test]
fn cup_commutator_is_a_coboundary_on_generator_pairs() {
    let ds: Vec<Cochain> = basic_derivations().to_vec();
    for d1 in &ds {
        for d2 in &ds {
            let lhs = d1.cup(d2).add(&d2.conjugate(d1.twist()).cup(d1)).unwrap();
            let rhs = d2.compose(d1).unwrap().coboundary().scale(-int(1));
            assert_eq!(lhs.twist(), rhs.twist());
            for x in gen_words() {
                for y in gen_words() {
                    assert_eq!(lhs.eval_words(&[x, y]), rhs.eval_words(&[x, y]), "{d1} {d2} at {x},{y}");
                }
            }
        }
    }
}

#[test]
fn product_in_last_slot_on_generators() {
    for tw in axiom_twists() {
        for x in gen_words() {
            for y in gen_words() {
                for z in gen_words() {
                    let [x, y, z] = [x, y, z].map(Elem::word);
                    let lhs = chain(tw.clone(), &[x.clone(), oracle_mul(&y, &z)]);
                    let t = chain(tw.clone(), &[x.clone(), y.clone(), z.clone()]).boundary().unwrap();
                    let rhs = chain(tw.clone(), &[oracle_mul(&x, &y), z.clone()])
                        .add(&chain(tw.clone(), &[oracle_mul(&tw.apply(&z), &x), y]))
                        .sub(&t);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

fn simplicial_identities(ch: &C) {
    let n = ch.degree();
    if n >= 2 {
        for j in 0..=n {
            for i in 0..j {
                let l = ch.face(j).unwrap().face(i).unwrap();
                let r = ch.face(i).unwrap().face(j - 1).unwrap();
                assert_eq!(l, r, "b_{i} b_{j}");
            }
        }
    }
    for j in 0..=n {
        for i in 0..=j {
            let l = ch.degeneracy(j).unwrap().degeneracy(i).unwrap();
            let r = ch.degeneracy(i).unwrap().degeneracy(j + 1).unwrap();
            assert_eq!(l, r, "s_{i} s_{j}");
        }
    }
    for j in 0..=n {
        let s = ch.degeneracy(j).unwrap();
        for i in 0..=n + 1 {
            let l = s.face(i).unwrap();
            if i == j || i == j + 1 {
                assert_eq!(&l, ch, "b_{i} s_{j}");
            } else if i < j {
                assert_eq!(l, ch.face(i).unwrap().degeneracy(j - 1).unwrap(), "b_{i} s_{j}");
            } else {
                assert_eq!(l, ch.face(i - 1).unwrap().degeneracy(j).unwrap(), "b_{i} s_{j}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boundary_squares_to_zero(seed in any::<u64>(), deg in 2usize..=4, tw in 0usize..8) {
        let mut r = rng(seed);
        let ch = random_chain(&mut r, deg, axiom_twists()[tw].clone(), 3);
        prop_assert!(ch.boundary().unwrap().boundary().unwrap().is_zero());
        prop_assert!(ch.boundary_prime().unwrap().boundary_prime().unwrap().is_zero());
    }

    #[test]
    fn simplicial_identities_hold(seed in any::<u64>(), deg in 1usize..=3, tw in 0usize..8) {
        let mut r = rng(seed);
        simplicial_identities(&random_chain(&mut r, deg, axiom_twists()[tw].clone(), 2));
    }

    #[test]
    fn normalisation_is_a_chain_map(seed in any::<u64>(), deg in 1usize..=3, tw in 0usize..8) {
        let mut r = rng(seed);
        let mut ch = random_chain(&mut r, deg, axiom_twists()[tw].clone(), 3);
        ch = ch.add(&ch.degeneracy(r.gen_range(0..deg)).unwrap().face(0).unwrap());
        let n = ch.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        prop_assert_eq!(ch.boundary().unwrap().normalize(), n.boundary().unwrap().normalize());
    }

    #[test]
    fn product_in_last_slot_on_random_elements(seed in any::<u64>(), tw in 0usize..8) {
        let mut r = rng(seed);
        let tw = axiom_twists()[tw].clone();
        let [x, y, z] = [0, 1, 2].map(|_| random_elem(&mut r, 2, 2, 1, 1));
        let lhs = chain(tw.clone(), &[x.clone(), y.mul(&z)]);
        let rhs = chain(tw.clone(), &[x.mul(&y), z.clone()])
            .add(&chain(tw.clone(), &[tw.apply(&z).mul(&x), y.clone()]))
            .sub(&chain(tw.clone(), &[x, y, z]).boundary().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chain_arithmetic_is_linear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let tw = sigma(-2, 0);
        let x = random_chain(&mut r, 2, tw.clone(), 3);
        let y = random_chain(&mut r, 2, tw.clone(), 3);
        let k = random_coeff(&mut r);
        let lhs = x.add(&y).scale(&k).boundary().unwrap();
        let rhs = x.boundary().unwrap().scale(&k).add(&y.boundary().unwrap().scale(&k));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(x.sub(&x).is_zero());
    }
}
