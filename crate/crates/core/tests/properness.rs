use pencil_core::exact::algebraic::AlgebraicNumber;
use pencil_core::exact::rational::{q, qf};
use pencil_core::exact::{parse_poly, Q};
use pencil_core::pencil::PencilMap;
use pencil_core::properness::*;
use pencil_core::resolution::resolve_pencil;
use pencil_core::sample::DEFAULT_SEED;
use pencil_core::Error;

fn map(p: &str, q: &str) -> PencilMap {
    PencilMap::parse(p, q).unwrap()
}

fn rat(a: &AlgebraicNumber) -> Q {
    a.to_rational().expect("rational")
}

#[test]
fn contracted_curves() {
    let ff = finite_fibres_check(&map("x", "x*y")).unwrap();
    assert!(!ff.finite);
    match ff.certificate {
        FibreCertificate::ContractedCurve { curve, value } => {
            assert_eq!(curve, "x");
            assert_eq!([rat(&value[0]), rat(&value[1])], [q(0), q(0)]);
        }
        c => panic!("{c:?}"),
    }
    for (p, qq) in [("x", "x^2 + y^3"), ("x", "y*(x*y - 1)"), ("x*y", "x + y"), ("x", "y^2")] {
        assert!(finite_fibres_check(&map(p, qq)).unwrap().finite, "{p}, {qq}");
    }
    // x*y = 1 goes to (1, 0)
    let ff = finite_fibres_check(&map("x*y", "(x*y - 1)*(x + y)")).unwrap();
    match ff.certificate {
        FibreCertificate::ContractedCurve { curve, value } => {
            assert_eq!(curve, "x*y - 1");
            assert_eq!([rat(&value[0]), rat(&value[1])], [q(1), q(0)]);
        }
        c => panic!("{c:?}"),
    }
    // dependent coordinates
    let ff = finite_fibres_check(&map("x + y", "(x + y)^2 + 1")).unwrap();
    assert!(matches!(ff.certificate, FibreCertificate::DependentCoordinates { .. }));
}

#[test]
fn contracted_curve_with_irrational_value() {
    // each line x = +-sqrt2 goes to a single irrational value
    let f = map("x", "x^2*y - 2*y + x^3");
    let ff = finite_fibres_check(&f).unwrap();
    assert!(!ff.finite);
    if let FibreCertificate::ContractedCurve { curve, value } = ff.certificate {
        assert_eq!(curve, "x^2 - 2");
        assert_eq!(value[0].min_poly(), &pencil_core::exact::UPoly::from_i64(&[-2, 0, 1]));
        // Q = x^3 on the curve, so the second value is 2 * first
        let two_x = value[0].add(&value[0], 8).unwrap();
        assert_eq!(value[1], two_x);
    } else {
        panic!()
    }
}

#[test]
fn geometric_degrees() {
    for (p, qq, d) in [
        ("x", "y", 1),
        ("x", "x^2 + y^3", 3),
        ("x*y", "x + y", 2),
        ("x", "y*(x*y - 1)", 2),
        ("x", "y + x^2", 1),
        ("x", "y^2", 2),
        ("y", "x", 1),
        ("x + y^3", "y", 1),
    ] {
        assert_eq!(geometric_degree(&map(p, qq), DEFAULT_SEED).unwrap(), d, "{p}, {qq}");
    }
}

#[test]
fn nonproper_sets() {
    for (p, qq) in [("x", "x^2 + y^3"), ("x", "y"), ("x", "y + x^2"), ("x*y", "x + y"), ("x + y^3", "y")] {
        let af = nonproper_set(&map(p, qq), DEFAULT_SEED).unwrap();
        assert!(af.empty, "{p}, {qq}: {af:?}");
    }
    let af = nonproper_set(&map("x", "y*(x*y - 1)"), DEFAULT_SEED).unwrap();
    assert_eq!(af.components.len(), 1);
    let c = &af.components[0];
    assert_eq!(c.equation, "u");
    assert!(c.is_line_through_origin);
    assert_eq!(
        c.witness,
        EscapeWitness::Family {
            x: "(t + v)/t^2".into(),
            y: "t".into(),
            limit: ["0".into(), "v".into()],
        }
    );
    let af = nonproper_set(&map("x*y - 1", "x"), DEFAULT_SEED).unwrap();
    assert_eq!(af.components.iter().map(|c| c.equation.as_str()).collect::<Vec<_>>(), ["v"]);
    assert!(af.components[0].is_line_through_origin);
}

#[test]
fn witness_families_escape() {
    // oracle: substitute the family by hand, (x, y) = ((t + v)/t^2, t)
    let f = map("x", "y*(x*y - 1)");
    for (t, v) in [(q(7), q(3)), (qf(-5, 2), q(11))] {
        let x = (t.clone() + v.clone()) / (t.clone() * t.clone());
        let pt = [x.clone(), t.clone()];
        assert_eq!(f.q().eval(&pt), v);
        assert_eq!(f.p().eval(&pt), x);
    }
}

#[test]
fn fiber_drop_witness_when_no_linear_family() {
    // (x, y(xy - 1)) after the source automorphism y -> y + x^2
    let f = map("x", "(y + x^2)*(x*y + x^3 - 1)");
    let af = nonproper_set(&f, DEFAULT_SEED).unwrap();
    assert_eq!(af.components.len(), 1);
    assert_eq!(af.components[0].equation, "u");
    match &af.components[0].witness {
        EscapeWitness::FiberDrop { point, count, deg_geo, .. } => {
            assert_eq!(rat(&point[0]), q(0));
            assert_eq!((*count, *deg_geo), (1, 2));
        }
        w => panic!("{w:?}"),
    }
}

#[test]
fn multiplicities() {
    let f = map("x", "x^2 + y^3");
    assert_eq!(local_multiplicity_at(&f, &[q(0), q(0)], DEFAULT_SEED).unwrap(), 3);
    assert_eq!(local_multiplicity_at(&f, &[q(1), q(1)], DEFAULT_SEED).unwrap(), 1);
    let f = map("x", "y^2");
    assert_eq!(local_multiplicity_at(&f, &[q(0), q(0)], DEFAULT_SEED).unwrap(), 2);
    assert_eq!(local_multiplicity_at(&f, &[q(2), q(-1)], DEFAULT_SEED).unwrap(), 1);
    let f = map("x", "y");
    assert_eq!(local_multiplicity_at(&f, &[qf(3, 7), q(5)], DEFAULT_SEED).unwrap(), 1);
    // two transversal cusps: 2 * 2
    let f = map("x^2 - y^3", "y^2 - x^3");
    assert_eq!(local_multiplicity_at(&f, &[q(0), q(0)], DEFAULT_SEED).unwrap(), 4);
}

#[test]
fn fiber_sums() {
    let f = map("x", "y*(x*y - 1)");
    let af = nonproper_set(&f, DEFAULT_SEED).unwrap();
    let s = check_fiber_sum(&f, &[q(1), q(0)], 2, &af, DEFAULT_SEED, 8).unwrap();
    assert_eq!((s.sum, s.on_nonproper_set, s.consistent), (2, false, true));
    assert_eq!(s.points.len(), 2);
    let s = check_fiber_sum(&f, &[q(0), q(1)], 2, &af, DEFAULT_SEED, 8).unwrap();
    assert_eq!((s.sum, s.on_nonproper_set, s.consistent), (1, true, true));
    assert_eq!(rat(&s.points[0].point.coords[1]), q(-1));
    let f = map("x", "x^2 + y^3");
    let af = nonproper_set(&f, DEFAULT_SEED).unwrap();
    let s = check_fiber_sum(&f, &[q(0), q(0)], 3, &af, DEFAULT_SEED, 8).unwrap();
    assert_eq!((s.sum, s.points.len(), s.consistent), (3, 1, true));
    // an orbit of three conjugate solutions
    let s = check_fiber_sum(&f, &[q(0), q(2)], 3, &af, DEFAULT_SEED, 8).unwrap();
    assert_eq!((s.sum, s.points.len(), s.points[0].orbit), (3, 1, 3));
}

#[test]
fn predicate_examples() {
    let p = predicates(&map("x", "y + x^2"), 1, 8).unwrap();
    assert_eq!(p, Predicates { keller: true, regular_value: RegularValue::Regular, invertible: true });
    let p = predicates(&map("x", "x^2 + y^3"), 3, 8).unwrap();
    assert_eq!(p, Predicates { keller: false, regular_value: RegularValue::SingularFiber, invertible: false });
    let p = predicates(&map("x", "y^2"), 2, 8).unwrap();
    assert_eq!(p, Predicates { keller: false, regular_value: RegularValue::SingularFiber, invertible: false });
    assert_eq!(regular_value_at_origin(&map("x*y - 1", "x"), 8).unwrap(), RegularValue::NotAttained);
}

#[test]
fn theorem4_on_the_standard_nonproper_map() {
    let f = map("x", "y*(x*y - 1)");
    let mut af = nonproper_set(&f, DEFAULT_SEED).unwrap();
    let tree = resolve_pencil(&f).unwrap();
    attach_parametrizations(&mut af, &tree);
    assert_eq!(af.components[0].parametrization_degrees, Some([0, 1]));
    let r = theorem4_ratio_check(&f, &af, &tree);
    assert_eq!(r.verdicts.len(), 1);
    assert!(r.verdicts[0].forbids_keller && r.verdicts[0].matched);
    assert!(!r.keller && r.contrapositive_holds);
    assert_eq!(parse_poly("2*x*y - 1", &["x", "y"]).unwrap().into_poly(), f.jacobian());

    let f = map("x", "x^2 + y^3");
    let af = nonproper_set(&f, DEFAULT_SEED).unwrap();
    let r = theorem4_ratio_check(&f, &af, &resolve_pencil(&f).unwrap());
    assert!(r.verdicts.is_empty() && r.contrapositive_holds);
}

#[test]
fn errors() {
    assert_eq!(geometric_degree(&map("x", "3"), DEFAULT_SEED).unwrap_err(), Error::NotFiniteFibres);
}

mod props {
    use super::*;
    use pencil_core::exact::Poly;
    use proptest::prelude::*;

    const FINITE: [(&str, &str, usize); 5] = [
        ("x", "y^2", 2),
        ("x", "x^2 + y^3", 3),
        ("x", "y*(x*y - 1)", 2),
        ("x*y", "x + y", 2),
        ("x + y^3", "y", 1),
    ];

    /// `F(a x + b y, c x + d y + e)`
    fn precompose(f: &PencilMap, k: [i64; 5]) -> PencilMap {
        let [a, b, c, d, e] = k.map(q);
        let (x, y) = (Poly::<Q>::var(2, 0), Poly::<Q>::var(2, 1));
        let u = x.scale(&a).add(&y.scale(&b));
        let v = x.scale(&c).add(&y.scale(&d)).add(&Poly::constant(2, e));
        let images = [u, v];
        PencilMap::new(f.p().compose(&images, 2), f.q().compose(&images, 2)).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn deg_geo_survives_source_changes(i in 0usize..5, k in prop::array::uniform5(-3i64..=3), seed in any::<u64>()) {
            prop_assume!(k[0] * k[3] - k[1] * k[2] != 0);
            let (p, qq, d) = FINITE[i];
            let g = precompose(&map(p, qq), k);
            prop_assert_eq!(geometric_degree(&g, seed).unwrap(), d);
            prop_assert!(finite_fibres_check(&g).unwrap().finite);
        }

        #[test]
        fn fibres_off_a_f_have_full_count(i in 0usize..5, u in -6i64..=6, v in -6i64..=6, den in 1i64..4) {
            let (p, qq, d) = FINITE[i];
            let f = map(p, qq);
            let af = nonproper_set(&f, DEFAULT_SEED).unwrap();
            let w = [qf(u, den), qf(v, 1)];
            prop_assume!(!af.contains(&w));
            let s = check_fiber_sum(&f, &w, d, &af, DEFAULT_SEED, 8).unwrap();
            prop_assert_eq!(s.sum, d);
            prop_assert!(s.consistent);
        }
    }
}
