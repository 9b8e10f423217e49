mod common;

use common::*;
use proptest::prelude::*;
use qsl2::catalog::{d_a, omega3};
use qsl2::text::{chain_from_json, chain_to_json, eval_str, parse, parse_aut, parse_chain, parse_elem, parse_scalar, Value};
use qsl2::{Aut, Elem, Error, Field, Scalar};

#[test]
fn parser_examples() {
    let [a, b, c, d] = gens();
    assert_eq!(parse_elem("b*a").unwrap(), oracle_mul(&b, &a));
    assert_eq!(parse_elem("a*d - q*b*c").unwrap(), Elem::one());
    assert_eq!(parse_elem("(a + d)^2").unwrap(), oracle_mul(&a.add(&d), &a.add(&d)));
    assert_eq!(parse_scalar("(1 - q)/(1 + q^-1)").unwrap(), (int(1) - q(1)) * (int(1) + q(-1)).inverse().unwrap());
    let t = parse_chain("b@c - c@b", Some(&sigma(-2, 0))).unwrap();
    assert_eq!(t, chain(sigma(-2, 0), &[b.clone(), c.clone()]).sub(&chain(sigma(-2, 0), &[c, b])));
    assert_eq!(parse_chain("omega3(0,0)", None).unwrap(), omega3(0, 0).unwrap());
    assert_eq!(parse_chain("dA", None).unwrap(), d_a());
    assert!(matches!(parse_chain("dA", Some(&sigma(0, 0))), Err(Error::TwistMismatch { .. })));
    assert_eq!(parse_aut("sigma(q^-2, 1) * tau(1, q)").unwrap(), sigma(-2, 0).compose(&Aut::tau(int(1), q(1))));
}

#[test]
fn printing_is_canonical_text() {
    assert_eq!(parse_elem("b*a").unwrap().to_string(), "q^-1 * a*b");
    assert_eq!(parse_scalar("q + q").unwrap().to_string(), "2*q");
    assert_eq!(parse_scalar("v^3").unwrap().to_string(), "v^3");
}

#[test]
fn expression_printing_round_trips() {
    for s in ["q^-2*a*b*c + d@a*2", "-(b@c) - c@b", "trace[b*c; q^-2, 1] * (delH+ * delE-)", "q^(1/2) / (1 - q)"] {
        let e = parse(s).unwrap();
        let printed = e.to_string();
        let again = parse(&printed).unwrap();
        assert_eq!(again.to_string(), printed);
    }
}

#[test]
fn chain_json_schema() {
    let ch = omega3(1, 0).unwrap();
    let j = chain_to_json(&ch);
    assert_eq!(j["degree"], 3);
    assert_eq!(j["twist"], "sigma(q^-3, 1)");
    assert_eq!(chain_from_json(&j).unwrap(), ch);
    let text = serde_json::to_string(&j).unwrap();
    assert_eq!(chain_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), ch);
    let mut broken = j.clone();
    broken["terms"][0]["tuple"] = serde_json::json!(["a"]);
    assert!(chain_from_json(&broken).is_err());
}

#[test]
fn usage_errors() {
    assert!(eval_str("sigma(0, 1)").is_err());
    assert!(eval_str("a / 0").is_err());
    assert!(eval_str("delH+ @ a").is_err());
    assert!(eval_str("omega3(-1, 0)").is_err());
    assert!(matches!(eval_str("b^(1/2)"), Err(Error::Parse { .. })));
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (any::<u64>(), 0usize..3).prop_map(|(seed, k)| {
        let mut r = rng(seed);
        let mut s = random_coeff(&mut r);
        for _ in 0..k {
            let d = random_coeff(&mut r);
            if !d.is_zero() {
                s = s * d.inverse().unwrap();
            }
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_round_trip(s in arb_scalar(), e in -3i64..=3) {
        let s = s * Scalar::v_pow(e);
        prop_assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn elements_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_elem(&mut r, 4, 3, 3, 3);
        prop_assert_eq!(parse_elem(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn chains_round_trip(seed in any::<u64>(), deg in 0usize..=3, tw in 0usize..8) {
        let mut r = rng(seed);
        let tw = axiom_twists()[tw].clone();
        let ch = random_chain(&mut r, deg, tw.clone(), 3);
        if !ch.is_zero() {
            prop_assert_eq!(parse_chain(&ch.to_string(), Some(&tw)).unwrap(), ch.clone());
        }
        prop_assert_eq!(chain_from_json(&chain_to_json(&ch)).unwrap(), ch);
    }

    #[test]
    fn automorphisms_round_trip(s in arb_scalar(), t in arb_scalar(), tau in any::<bool>()) {
        prop_assume!(!s.is_zero() && !t.is_zero());
        let a = if tau { Aut::tau(s, t) } else { Aut::sigma(s, t) };
        let Value::Aut(b) = eval_str(&a.to_string()).unwrap() else { panic!() };
        prop_assert_eq!(a, b);
    }
}
