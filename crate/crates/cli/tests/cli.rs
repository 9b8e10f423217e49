use std::process::{Command, Output};

fn qsl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsl2")).args(args).env_remove("QSL2_BOX").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normal_form_of_ba() {
    let o = qsl2(&["nf", "b*a"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "q^-1 * a*b");
}

#[test]
fn phi_and_xi_pair_to_one_with_da() {
    for f in ["phi", "xi"] {
        let o = qsl2(&["pair", f, "dA"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), "1");
    }
}

#[test]
fn cap_list_has_twenty_passes() {
    let o = qsl2(&["verify", "--suite", "cap_list_20"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS ")).count(), 20);
}

#[test]
fn failing_check_exits_one() {
    let o = qsl2(&["verify", "--suite", "xi_unit_slot"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL xi_unit_slot"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["bogus"][..], &["nf", "a@"], &["verify", "--suite", "nope"], &["catalog", "a*b"], &["e2", "--N", "1"]] {
        let o = qsl2(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn boundary_json_round_trips() {
    let o = qsl2(&["--format", "json", "boundary", "--twist", "sigma(q^-2,1)", "a@b@c"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ch = qsl2::text::chain_from_json(&v).unwrap();
    let tw = qsl2::text::parse_aut("sigma(q^-2,1)").unwrap();
    let expected = qsl2::text::parse_chain("a@b@c", Some(&tw)).unwrap().boundary().unwrap();
    assert_eq!(ch, expected);
}

#[test]
fn solve_reports_the_witness() {
    let o = qsl2(&["--format", "json", "solve", "--twist", "sigma(1,1)", "--box", "1,1,1", "a*b@c - a@b*c + c*a@b"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "witness_found", "{v}");
    assert_eq!(o.status.code(), Some(0));
    let w = qsl2::text::chain_from_json(&v["witness"]).unwrap();
    let target = qsl2::text::parse_chain("a*b@c - a@b*c + c*a@b", Some(&qsl2::Aut::identity())).unwrap();
    assert_eq!(w.boundary().unwrap().normalize(), target.normalize());
}

#[test]
fn box_defaults_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qsl2"))
        .args(["--format", "json", "solve", "--twist", "sigma(1,1)", "b@c"])
        .env("QSL2_BOX", "1,0,1")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["box"]["max_j"], 0);
}

#[test]
fn e2_page_lists_the_stable_classes() {
    let o = qsl2(&["e2", "--N", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("HP_odd: dA"), "{out}");
    assert!(out.contains("E2[0,3]: omega3(0,0)"), "{out}");
}

#[test]
fn automorphism_and_catalog() {
    assert_eq!(stdout(&qsl2(&["aut", "sigma(q,2)", "a*b"])).trim(), "2*q * a*b");
    let o = qsl2(&["catalog", "omega3(0,0)"]);
    assert!(stdout(&o).starts_with("omega3(0,0) = "));
}
