mod common;

use common::*;
use qsl2::catalog::{d_a, omega3};
use qsl2::solver::TruncationBox;
use qsl2::verify::*;
use qsl2::{Error, Field, Scalar};

fn run(ids: &[&str], seed: u64) -> Vec<CheckResult> {
    let ids: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    run_suite(&ids, &TruncationBox::new(1, 1, 1), seed).unwrap()
}

#[test]
fn cap_list_reports_twenty_passes() {
    let r = run(&["cap_list_20"], DEFAULT_SEED);
    assert_eq!(r.len(), 20);
    assert!(r.iter().all(|c| c.passed()), "{}", render_text(&r, false));
    assert_eq!(r[0].check_id, "cap_list_20/01");
    assert_eq!(r[0].points, ["Q(v)", "v=2", "v=5/2"]);
    let text = render_text(&r, false);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS cap_list_20/")).count(), 20);
}

#[test]
fn unknown_check_is_an_error() {
    let err = run_suite(&["bogus".to_string()], &TruncationBox::default(), 1).unwrap_err();
    assert!(matches!(err, Error::UnknownCheck(ref s) if s == "bogus"));
}

#[test]
fn reports_are_deterministic_without_timings() {
    let ids = ["associativity", "complex_axioms", "relations"];
    let (x, y) = (run(&ids, 7), run(&ids, 7));
    assert_eq!(render_json(&x, false), render_json(&y, false));
    assert_eq!(render_text(&x, false), render_text(&y, false));
    assert!(render_json(&x, false)[0].get("runtime_ms").is_none());
    assert!(render_json(&x, true)[0].get("runtime_ms").is_some());
    // selection order does not matter
    let z = run(&["relations", "complex_axioms", "associativity"], 7);
    assert_eq!(render_json(&x, false), render_json(&z, false));
    assert!(run(&ids, 8).iter().all(|c| c.passed()));
}

#[test]
fn every_criterion_has_checks() {
    for n in 1..=12 {
        assert!(!checks_for_criterion(n).is_empty(), "criterion {n}");
    }
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
}

#[test]
fn pairings_with_da() {
    let r = run(&["xi_pairs_dA", "phi_pairs_dA", "eta_sign"], DEFAULT_SEED);
    assert!(r.iter().all(|c| c.passed()), "{}", render_text(&r, false));
    assert_eq!(select_eta_sign().unwrap(), eta_sign());
}

#[test]
fn xi_unit_slot_failure_names_the_tuple() {
    let r = run(&["xi_unit_slot"], DEFAULT_SEED);
    assert!(!r[0].passed());
    let d = r[0].detail.discrepancy.as_ref().expect("discrepancy");
    assert_eq!(d.subject, "xi(1, d, b, a*c)");
    assert_eq!(d.expected, "0");
}

#[test]
fn e2_page_odd() {
    let rep = e2_table(3).unwrap();
    assert_eq!(rep.parity, Parity::Odd);
    for p in 1..=3 {
        assert_eq!(rep.get(p, p), ["1"]);
        assert_eq!(rep.get(p, p + 1), ["b@c"]);
        assert!(rep.get(p, p + 2).is_empty());
    }
    let mut first = rep.get(0, 1).to_vec();
    first.sort();
    assert_eq!(first, ["b*c@b", "b@c", "c^2@b"]);
    assert_eq!((rep.hp_even.as_str(), rep.hp_odd.as_str()), ("1", "b@c"));
}

#[test]
fn e2_page_even() {
    let rep = e2_table(2).unwrap();
    assert_eq!(rep.parity, Parity::Even);
    assert_eq!(rep.get(0, 3), ["omega3(0,0)"]);
    assert_eq!(rep.get(2, 4), ["omega2(0,0)"]);
    assert_eq!(rep.get(2, 5), ["omega3(0,0)"]);
    assert!(rep.get(1, 1).is_empty());
    assert_eq!(rep.hp_odd, "dA");
    assert!(rep.certificates.iter().any(|c| c.claim == "dA cap [delH-] = -omega2(0,0)"));
    assert!(serde_json::to_value(&rep).unwrap()["entries"].is_array());
    assert!(matches!(e2_table(1), Err(Error::Domain(_))));
}

#[test]
fn detection_of_the_fundamental_class() {
    match detect_class::<Scalar>(&d_a()).unwrap() {
        Detection::Detected { probe, value, .. } => {
            assert_eq!(probe, "[H+ E+ F+]");
            assert!(value.is_one());
        }
        other => panic!("{other:?}"),
    }
    let z = omega3::<Scalar>(2, 1).unwrap();
    assert!(matches!(detect_class(&z).unwrap(), Detection::Undetected { probes: 216 }));
    let [a, b, ..] = gens();
    let not_cycle = chain(sigma(-2, 0), &[b, a]);
    assert!(detect_class(&not_cycle).is_err());
}
