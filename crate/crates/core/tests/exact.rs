use pencil_core::exact::algebraic::AlgebraicNumber;
use pencil_core::exact::factor::factor;
use pencil_core::exact::gcd::{gcd, resultant, squarefree_part};
use pencil_core::exact::multipoly::normalize;
use pencil_core::exact::newton::LatticePolygon;
use pencil_core::exact::rational::q;
use pencil_core::exact::{parse_poly, Monomial, Poly, UPoly, Q};
use pencil_core::Error;
use proptest::prelude::*;

fn p(s: &str) -> Poly<Q> {
    parse_poly(s, &["x", "y"]).unwrap().into_poly()
}

fn same_up_to_unit(a: &Poly<Q>, b: &Poly<Q>) -> bool {
    normalize(a) == normalize(b)
}

#[test]
fn arithmetic_examples() {
    let d = p("x + y").mul(&p("x - y"));
    assert_eq!(d, p("x^2 - y^2"));
    assert_eq!(d.exact_div(&p("x + y")).unwrap(), p("x - y"));
    let z = p("x^2 + y^3").sub(&p("x^2 + y^3"));
    assert!(z.is_zero() && z.is_empty());
    assert_eq!(p("x^2").exact_div(&p("x + 1")), Err(Error::DivisionInexact));
}

#[test]
fn gcd_examples() {
    assert!(same_up_to_unit(&gcd(&p("(x + y)^2"), &p("(x + y)*(x - y)")), &p("x + y")));
    assert!(gcd(&p("x^2 + y^2"), &p("x + y")).is_constant());
    // oracle: x^2 + y^2 = (x + y)(x - y) + 2y^2, and Res_y != 0
    assert!(!resultant(&p("x^2 + y^2"), &p("x + y"), 1).unwrap().is_zero());
    assert!(same_up_to_unit(&gcd(&Poly::zero(2), &p("x")), &p("x")));
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&p("y^2 + x^2"), &p("y - x"), 1).unwrap(), p("2*x^2"));
    assert!(resultant(&p("y^2 - x"), &p("y^2 - x"), 1).unwrap().is_zero());
    assert_eq!(resultant(&Poly::<Q>::zero(2), &Poly::zero(2), 1), Err(Error::UndefinedResultant));
    // F = (x, y(xy - 1)) at (u, v) = (3, 5): x - 3 is free of y, so the
    // resultant is (x - 3)^deg_y(Q - v) = (x - 3)^2
    let r = resultant(&p("x - 3"), &p("y*(x*y - 1) - 5"), 1).unwrap();
    assert_eq!(r, p("(x - 3)^2"));
    assert_eq!(r.degree_in(0), 2);
}

#[test]
fn squarefree_examples() {
    assert!(same_up_to_unit(
        &squarefree_part(&p("(x + y)^2*(x - y)")).unwrap(),
        &p("(x + y)*(x - y)")
    ));
    assert!(same_up_to_unit(&squarefree_part(&p("x^2 + y^3")).unwrap(), &p("x^2 + y^3")));
    assert!(same_up_to_unit(&squarefree_part(&p("y^2")).unwrap(), &p("y")));
    assert_eq!(squarefree_part(&Poly::<Q>::zero(2)), Err(Error::ZeroInput));
}

#[test]
fn univariate_factorization_examples() {
    let (_, f) = factor(&UPoly::from_i64(&[-4, 0, 0, 0, 1]));
    let mut got: Vec<_> = f.iter().map(|(g, e)| (g.coeffs().to_vec(), *e)).collect();
    got.sort();
    let mut want = vec![(UPoly::from_i64(&[-2, 0, 1]).coeffs().to_vec(), 1), (UPoly::from_i64(&[2, 0, 1]).coeffs().to_vec(), 1)];
    want.sort();
    assert_eq!(got, want);
    // oracle: (x^2 - 2)(x^2 + 2) = x^4 - 4
    assert_eq!(UPoly::<Q>::from_i64(&[-2, 0, 1]).mul(&UPoly::from_i64(&[2, 0, 1])), UPoly::from_i64(&[-4, 0, 0, 0, 1]));
    let (_, f) = factor(&UPoly::from_i64(&[0, 0, 0, 1]));
    assert_eq!(f, vec![(UPoly::from_i64(&[0, 1]), 3)]);
    let (_, f) = factor(&UPoly::from_i64(&[1, 0, 1]));
    assert_eq!(f, vec![(UPoly::from_i64(&[1, 0, 1]), 1)]);
}

#[test]
fn algebraic_examples() {
    let roots2 = AlgebraicNumber::roots_of(&UPoly::from_i64(&[-2, 0, 1]), 8).unwrap();
    let s = roots2.iter().find(|r| r.enclosure(20).re_lo > q(0)).unwrap();
    assert!(s.add(&s.neg(), 8).unwrap().is_zero());
    assert_eq!(s.mul(s, 8).unwrap().to_rational(), Some(q(2)));
    let roots3 = AlgebraicNumber::roots_of(&UPoly::from_i64(&[-3, 0, 1]), 8).unwrap();
    let t = roots3.iter().find(|r| r.enclosure(20).re_lo > q(0)).unwrap();
    let sum = s.add(t, 8).unwrap();
    // oracle: Res_s(s^2 - 2, (t - s)^2 - 3) expanded by hand
    assert_eq!(sum.min_poly(), &UPoly::from_i64(&[1, 0, -10, 0, 1]));
    let e = sum.enclosure(30);
    assert!(e.re_lo > pencil_core::exact::rational::qf(3146, 1000));
    assert!(e.re_hi < pencil_core::exact::rational::qf(3147, 1000));
    assert!(AlgebraicNumber::rational(q(0)).inv().unwrap_err() == Error::InversionOfZero);
}

#[test]
fn newton_polygon_examples() {
    let hull = |s: &str| LatticePolygon::of_poly(&p(s)).unwrap();
    assert_eq!(hull("x^2 + 5*x + y^3"), LatticePolygon::hull(&[(2, 0), (1, 0), (0, 3)]));
    let seg = hull("x + y");
    assert!(!seg.is_two_dimensional());
    assert_eq!(seg, LatticePolygon::hull(&[(1, 0), (0, 1)]));
    assert_eq!(hull("x*y + x + y"), LatticePolygon::hull(&[(1, 1), (1, 0), (0, 1)]));
    assert_eq!(hull("x^2 + x + y^3").interior_points(), 1);
    assert_eq!(LatticePolygon::of_poly(&Poly::<Q>::zero(2)), Err(Error::ZeroInput));
}

fn poly_strategy(max_deg: u32) -> impl Strategy<Value = Poly<Q>> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -6i64..=6), 0..6).prop_map(|terms| {
        let mut out = Poly::zero(2);
        for (i, j, c) in terms {
            out.add_term(Monomial::from_slice(&[i, j]), q(c));
        }
        out
    })
}

fn upoly_strategy() -> impl Strategy<Value = UPoly<Q>> {
    prop::collection::vec(-9i64..=9, 2..7)
        .prop_map(|c| UPoly::from_i64(&c))
        .prop_filter("nonconstant", |u| u.deg() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(3)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in poly_strategy(2),
        b in poly_strategy(2),
        g in poly_strategy(1),
        shared in any::<bool>(),
    ) {
        let (a, b) = if shared && g.involves(1) { (a.mul(&g), b.mul(&g)) } else { (a, b) };
        prop_assume!(a.involves(1) && b.involves(1));
        let r = resultant(&a, &b, 1).unwrap();
        prop_assert_eq!(r.is_zero(), gcd(&a, &b).degree_in(1) > 0);
    }

    #[test]
    fn factorization_reconstructs(a in upoly_strategy(), e in 1u32..3) {
        let a = a.pow(e);
        let (unit, fs) = factor(&a);
        let mut prod = UPoly::constant(unit);
        for (f, k) in &fs {
            prop_assert!(pencil_core::exact::factor::is_irreducible(f));
            prod = prod.mul(&f.pow(*k));
        }
        prop_assert_eq!(prod, a);
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree(a in poly_strategy(2), b in poly_strategy(2)) {
        let f = a.mul(&a).mul(&b);
        prop_assume!(!f.is_constant());
        let s = squarefree_part(&f).unwrap();
        prop_assert!(f.exact_div(&s).is_ok());
        prop_assert_eq!(squarefree_part(&s).unwrap().total_degree(), s.total_degree());
    }

    #[test]
    fn algebraic_ops_match_intervals(n in 2i64..12, m in 2i64..12, k in -5i64..=5, pick in 0usize..2) {
        let sqrt = |n: i64| AlgebraicNumber::roots_of(&UPoly::from_i64(&[-n, 0, 1]), 8).unwrap();
        let a = sqrt(n)[pick % sqrt(n).len()].clone();
        let b = sqrt(m)[0].clone();
        let c = AlgebraicNumber::rational(q(k));
        let bits = 40;
        for (r, approx) in [
            (a.add(&b, 8).unwrap(), a.enclosure(bits).add(&b.enclosure(bits))),
            (a.mul(&b, 8).unwrap(), a.enclosure(bits).mul(&b.enclosure(bits))),
            (a.add(&c, 8).unwrap(), a.enclosure(bits).add(&c.enclosure(bits))),
            (a.inv().unwrap(), a.enclosure(bits).inv().unwrap()),
        ] {
            prop_assert!(r.enclosure(bits).intersects(&approx));
            prop_assert!(r.degree() <= 4);
        }
    }
}
