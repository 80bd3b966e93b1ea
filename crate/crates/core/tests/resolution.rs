use std::collections::{BTreeMap, BTreeSet};

use pencil_core::pencil::{scan_pencil, PencilMap};
use pencil_core::resolution::*;
use pencil_core::Error;

fn map(p: &str, q: &str) -> PencilMap {
    PencilMap::parse(p, q).unwrap()
}

fn tree(p: &str, q: &str) -> ResolutionTree {
    resolve_pencil(&map(p, q)).unwrap()
}

const MAPS: &[(&str, &str)] = &[
    ("x", "y"),
    ("x", "y + x^2"),
    ("x*y", "x + y"),
    ("x", "y*(x*y - 1)"),
    ("x", "x^2 + y^3"),
    ("x^2 + y^2 - 1", "x + y^2"),
    ("x + y^3", "y"),
    ("x*y - 1", "x"),
];

#[test]
fn identity_resolves_in_one_step() {
    let t = tree("x", "y");
    assert_eq!((t.h_infinity, t.h_b_total, t.h_g), (1, 1, 2));
    assert_eq!(t.m, 2);
    assert!(t.m_lambda.is_empty());
    let linf = &t.components[0];
    assert_eq!(linf.type_label, TypeLabel::IIa);
    assert_eq!((&linf.p_value, &linf.q_value), (&Value::Infinity, &Value::Infinity));
    let e = &t.components[1];
    assert_eq!(e.over, Over::BasePoint(0));
    assert_eq!(e.type_label, TypeLabel::I);
    assert_eq!((&e.p_value, &e.q_value), (&Value::Zero, &Value::Zero));
}

#[test]
fn horizontal_counts() {
    let t = tree("x", "y + x^2");
    assert_eq!((t.h_infinity, t.h_b_total), (1, 1));
    let t = tree("x*y", "x + y");
    assert_eq!((t.h_infinity, t.h_b_total), (2, 1));
    assert_eq!(t.m, 5);
    // xy = 0 contains the exceptional curve over the origin, x + y = 0 the line at infinity
    let ml: BTreeMap<String, usize> = t.m_lambda.iter().map(|l| (l.lambda.key.clone(), l.m)).collect();
    assert_eq!(ml, BTreeMap::from([("(0:1)".into(), 1), ("(1:0)".into(), 1)]));
}

#[test]
fn base_points_of_small_maps() {
    let (a, inf) = base_points(&map("x*y", "x + y")).unwrap();
    assert_eq!(a.len(), 1);
    assert!(a[0].0.coords.iter().all(|c| c.is_zero()));
    // padded sections xy and (x + y) z meet z = 0 at (1:0:0) and (0:1:0)
    assert_eq!(inf.len(), 2);
    let (a, inf) = base_points(&map("x", "y")).unwrap();
    assert_eq!((a.len(), inf.len()), (1, 0));
    // x z^2 and x^2 z + y^3 on z = 0: y = 0, a single point
    let (_, inf) = base_points(&map("x", "x^2 + y^3")).unwrap();
    assert_eq!(inf.len(), 1);
    assert_eq!(inf[0].0.chart, "X");
    let (a, _) = base_points(&map("x^2 + y^2 - 1", "x + y^2")).unwrap();
    // x^2 - x - 1 = 0 with y^2 = -x: one orbit of four points
    assert_eq!(a.len(), 1);
    assert_eq!(a[0].1, 4);
}

#[test]
fn common_factor_is_rejected() {
    let err = resolve_pencil(&map("x*(y - 1)", "x*y")).unwrap_err();
    assert_eq!(err, Error::InfiniteBaseLocus);
}

#[test]
fn dicritical_line_of_the_standard_nonproper_map() {
    let t = tree("x", "y*(x*y - 1)");
    assert_eq!((t.h_infinity, t.h_b_total), (2, 1));
    assert!(t.has_type(TypeLabel::IIa));
    assert!(t.has_type(TypeLabel::IIb));
    let dic: Vec<_> = t.dicritical().filter(|c| c.image.is_some()).collect();
    assert_eq!(dic.len(), 1);
    let img = dic[0].image.as_ref().unwrap();
    assert_eq!(img.components, vec!["u".to_string()]);
    assert!(img.through_origin_line);
    assert_eq!(img.degrees, [0, 1]);
}

#[test]
fn suzuki_balances_on_rational_pencils() {
    for (p, q) in [("x", "y"), ("x", "y + x^2"), ("x*y", "x + y"), ("x", "y*(x*y - 1)"), ("x^2 + y^2 - 1", "x + y^2"), ("x*y - 1", "x")] {
        let f = map(p, q);
        let t = resolve_pencil(&f).unwrap();
        let prof = scan_pencil(&f, 20, 1).unwrap();
        let s = euler_bookkeeping(&t, &prof).unwrap();
        assert!(s.pass, "{p}, {q}: {s:?}");
    }
}

#[test]
fn suzuki_refuses_elliptic_pencil() {
    let f = map("x", "x^2 + y^3");
    let t = resolve_pencil(&f).unwrap();
    let prof = scan_pencil(&f, 20, 1).unwrap();
    assert!(matches!(euler_bookkeeping(&t, &prof), Err(Error::HypothesisNotCertified(_))));
}

#[test]
fn tree_invariants_on_corpus() {
    for &(p, q) in MAPS {
        let t = tree(p, q);
        assert!(t.h_infinity >= 1, "{p}, {q}");
        assert!(t.base_points.iter().all(|b| b.h >= 1), "{p}, {q}");
        assert_eq!(t.h_g, t.h_infinity + t.base_points.iter().map(|b| b.h * b.copies).sum::<usize>());
        assert_eq!(t.m_lambda_total() + t.h_g, t.m, "{p}, {q}");
        for c in &t.components {
            assert_eq!(c.type_label == TypeLabel::NotHorizontal, !c.is_horizontal());
            match c.type_label {
                TypeLabel::I => {
                    assert!(matches!(c.over, Over::BasePoint(_)));
                    assert_eq!((&c.p_value, &c.q_value), (&Value::Zero, &Value::Zero));
                }
                TypeLabel::IIa => assert_eq!((&c.p_value, &c.q_value), (&Value::Infinity, &Value::Infinity)),
                TypeLabel::IIb => {
                    assert_eq!(c.over, Over::Infinity);
                    assert_eq!((&c.p_value, &c.q_value), (&Value::Zero, &Value::Zero));
                }
                _ => {}
            }
            if c.dicritical {
                assert_eq!(c.over, Over::Infinity);
            }
        }
        assert!(t.has_type(TypeLabel::IIa), "{p}, {q}");
        for c in t.dicritical() {
            let line = c.image.as_ref().map_or(true, |i| i.through_origin_line);
            assert!(c.is_horizontal() || line, "{p}, {q}: {c:?}");
        }
    }
}

/// Connected pieces of the dual graph: one over infinity, one per base point.
#[test]
fn boundary_splits_by_location() {
    for &(p, q) in MAPS {
        let t = tree(p, q);
        let n = t.components.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for &(a, b) in &t.edges {
            assert_eq!(t.components[a].over, t.components[b].over, "{p}, {q}");
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut pieces: BTreeMap<usize, BTreeSet<Over>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            pieces.entry(r).or_default().insert(t.components[i].over);
        }
        let overs: BTreeSet<Over> = t.components.iter().map(|c| c.over).collect();
        assert_eq!(pieces.len(), overs.len(), "{p}, {q}: {:?}", t.edges);
    }
}

#[test]
fn ledger_reconstructs_raw_pullbacks() {
    for &(p, q) in MAPS {
        for (raw, rebuilt) in ledger_pairs(&map(p, q)).unwrap() {
            assert_eq!(raw[0], rebuilt[0], "{p}, {q}");
            assert_eq!(raw[1], rebuilt[1], "{p}, {q}");
        }
    }
}

#[test]
fn counts_do_not_depend_on_center_order() {
    for &(p, q) in &[("x*y", "x + y"), ("x", "y*(x*y - 1)"), ("x^2 + y^2 - 1", "x + y^2")] {
        let f = map(p, q);
        let a = resolve_pencil(&f).unwrap();
        let opts = ResolveOptions {
            order: CenterOrder::DepthFirst,
            ..Default::default()
        };
        let b = resolve_with(&f, &opts).unwrap();
        assert_eq!((a.h_infinity, a.h_b_total, a.m), (b.h_infinity, b.h_b_total, b.m), "{p}, {q}");
        assert_eq!(a.nonproper_components(), b.nonproper_components());
    }
}

#[test]
fn resolution_is_deterministic() {
    for &(p, q) in MAPS {
        assert_eq!(tree(p, q), tree(p, q));
    }
}

#[test]
fn budget_and_cap_are_errors() {
    let opts = ResolveOptions {
        budget: 2,
        ..Default::default()
    };
    let err = resolve_with(&map("x", "x^2 + y^3"), &opts).unwrap_err();
    assert_eq!(err, Error::BlowupBudgetExceeded { budget: 2 });
    match resolve_pencil(&map("x^9 - 2", "y")).unwrap_err() {
        Error::DegreeCapExceeded { cap, min_polys } => {
            assert_eq!(cap, 8);
            assert_eq!(min_polys, vec!["t^9 - 2".to_string()]);
        }
        e => panic!("{e:?}"),
    }
}

fn golden(name: &str, got: &str) {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(got, want, "{name}");
}

#[test]
fn dual_graph_goldens() {
    golden("identity.dot", &dual_graph_dot(&tree("x", "y")));
    golden("triangular.dot", &dual_graph_dot(&tree("x", "y + x^2")));
    let t = tree("x*y", "x + y");
    assert!(t.components.iter().filter(|c| c.is_horizontal()).count() >= 3);
    golden("xy_sum.dot", &dual_graph_dot(&t));
}
