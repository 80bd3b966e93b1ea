use pencil_core::harness::*;
use pencil_core::pencil::PencilMap;
use pencil_core::properness::RegularValue;

fn run(p: &str, q: &str) -> MapReport {
    let f = PencilMap::parse(p, q).unwrap();
    run_map(&format!("({p}, {q})"), &f, None, &HarnessConfig::default())
}

fn check<'a>(r: &'a MapReport, name: &str) -> &'a Outcome {
    &r.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name}")).outcome
}

#[test]
fn automorphism_entry() {
    let r = run("x", "y + x^2");
    assert!(!r.failed(), "{:#?}", r.checks);
    assert_eq!(r.dossier.deg_geo, Some(1));
    assert_eq!(r.dossier.invertible, Some(true));
    assert!(r.dossier.keller);
    assert_eq!(r.dossier.a_f_empty, Some(true));
    assert!(r.theorem2.applicable);
    assert_eq!((r.theorem2.a, r.theorem2.b, r.theorem2.c), (Some(true), true, Some(true)));
    assert!(r.theorem2.equivalent.is_pass());
    let t = r.resolution.as_ref().unwrap();
    assert_eq!(t.h_infinity + t.h_b_total, 2);
    assert_eq!(r.situation, Some(Situation::II));
    for name in ["eq1", "eq2", "eq3", "eq4", "eq5", "eq8"] {
        assert!(check(&r, name).is_pass(), "{name}: {:?}", check(&r, name));
    }
}

#[test]
fn counterexample_entry() {
    let r = run("x", "x^2 + y^3");
    assert!(!r.failed());
    assert_eq!(r.dossier.deg_geo, Some(3));
    assert_eq!(r.dossier.regular_value, Some(RegularValue::SingularFiber));
    assert_eq!(r.dossier.invertible, Some(false));
    assert!(!r.dossier.keller);
    assert!(!r.theorem2.applicable);
    assert!(r.theorem2.missing.contains(&"rationality".to_string()));
    assert_eq!(r.dossier.predicate_table.a, Some(false));
    assert!(!r.dossier.predicate_table.b);
    assert_eq!(r.dossier.predicate_table.c, Some(false));
    assert!(check(&r, "eq4").is_skipped());
    assert!(check(&r, "eq1").is_pass());
}

#[test]
fn reducible_member_entry() {
    let r = run("x*y", "x + y");
    assert!(!r.failed(), "{:#?}", r.checks);
    assert_eq!(r.pencil.as_ref().unwrap().total_reducibility, 1);
    let t = r.resolution.as_ref().unwrap();
    assert_eq!(t.h_infinity + t.h_b_total, 3);
    assert!(check(&r, "eq4").is_pass());
    assert!(!r.theorem2.applicable);
    assert!(r.theorem2.missing.contains(&"irreducibility".to_string()));
}

#[test]
fn nonproper_entry() {
    let r = run("x", "y*(x*y - 1)");
    assert!(!r.failed(), "{:#?}", r.checks);
    let eqs: Vec<_> = r.dossier.a_f_components.iter().map(|c| c.equation.as_str()).collect();
    assert_eq!(eqs, ["u"]);
    assert!(r.dossier.a_f_components[0].is_line_through_origin);
    assert!(check(&r, "a_f_cross_oracle").is_pass());
    assert!(check(&r, "theorem4").is_pass());
    let t4 = r.theorem4.as_ref().unwrap();
    assert!(t4.contrapositive_holds && !t4.keller);
}

#[test]
fn constant_member_counts_minus_one() {
    // x*y - (x*y + 1) = -1: an empty member with r = 0
    let r = run("x*y", "x*y + 1");
    assert!(!r.dossier.finite_fibres);
    assert_eq!(r.pencil.as_ref().unwrap().total_reducibility, 0);
    assert!(check(&r, "eq4").is_pass());
    assert!(check(&r, "eq5").is_pass());
}

#[test]
fn degenerate_pencil_is_a_stage_error() {
    let r = run("x", "2*x");
    assert!(r.errors.iter().any(|e| e.kind == "degenerate_pencil"), "{:?}", r.errors);
    assert!(r.checks.iter().all(|c| !c.outcome.is_pass() || c.name != "eq4"));
    assert!(!r.theorem2.applicable);
}

#[test]
fn cap_errors_name_the_polynomial() {
    let r = run("x^9 - 2", "y");
    let caps: Vec<_> = r.cap_errors().collect();
    assert!(!caps.is_empty());
    assert!(caps.iter().any(|e| e.message.contains("t^9 - 2")), "{caps:?}");
    let e = Expected {
        error: Some("degree_cap_exceeded".into()),
        ..Expected::default()
    };
    let f = PencilMap::parse("x^9 - 2", "y").unwrap();
    let r = run_map("stress", &f, Some(&e), &HarnessConfig::default());
    assert_eq!(r.cap_errors().count(), 0);
    assert!(r.errors.iter().all(|e| !e.cap || e.expected));
}

#[test]
fn expected_values_are_compared() {
    let f = PencilMap::parse("x", "y^2").unwrap();
    let good = Expected {
        deg_geo: Some(2),
        keller: Some(false),
        ..Expected::default()
    };
    let r = run_map("sq", &f, Some(&good), &HarnessConfig::default());
    assert!(check(&r, "expected").is_pass());
    let bad = Expected {
        deg_geo: Some(3),
        ..Expected::default()
    };
    let r = run_map("sq", &f, Some(&bad), &HarnessConfig::default());
    assert!(check(&r, "expected").is_fail());
    assert!(r.failed());
}

#[test]
fn theorem2_suite() {
    let empty = theorem2_harness(&[]);
    assert!(empty.verdict.is_skipped());

    let autos: Vec<_> = [("x", "y"), ("x", "y + x^2"), ("y", "x"), ("x + y^3", "y")]
        .iter()
        .map(|(p, q)| run(p, q))
        .collect();
    let s = theorem2_harness(&autos);
    assert_eq!(s.applicable.len(), 4);
    assert!(s.verdict.is_pass(), "{:?}", s.verdict);

    let none: Vec<_> = [("x", "y^2"), ("x", "x^2 + y^3")].iter().map(|(p, q)| run(p, q)).collect();
    for r in &none {
        let t = &r.dossier.predicate_table;
        assert_eq!((t.a, t.b, t.c), (Some(false), false, Some(false)));
    }
    let s = theorem2_harness(&none[1..]);
    assert!(s.verdict.is_skipped());

    let totals = suite_totals(&autos);
    assert_eq!((totals.maps, totals.failed, totals.cap_errors), (4, 0, 0));
}

#[test]
fn same_seed_same_report() {
    let f = PencilMap::parse("x*y", "x + y").unwrap();
    let cfg = HarnessConfig::default();
    let a = format!("{:?}", run_map("m", &f, None, &cfg).checks);
    let b = format!("{:?}", run_map("m", &f, None, &cfg).checks);
    assert_eq!(a, b);
}
