use super::*;
use crate::exact::parse::parse_poly;

fn kp(s: &str) -> KPoly {
    poly_to_nf(parse_poly(s, &["s", "t"]).unwrap().poly())
}

fn first_chart(p: &str, q: &str) -> (Chart, u32) {
    let f = PencilMap::parse(p, q).unwrap();
    let opts = ResolveOptions::default();
    let e = Engine::new(&f, &opts).unwrap();
    let subs = blowup_substitutions(&[NfElem::zero(), NfElem::zero()]);
    e.charts[0].pull_back(&subs[0], "E".into(), 1)
}

#[test]
fn one_blowup_of_identity() {
    let (c, k) = first_chart("x", "y");
    assert_eq!(k, 1);
    assert_eq!((c.a, c.b), (kp("1"), kp("t")));
}

#[test]
fn one_blowup_of_triangular_map() {
    let (c, k) = first_chart("x", "y + x^2");
    assert_eq!(k, 1);
    assert_eq!((c.a, c.b), (kp("1"), kp("t + s")));
}

#[test]
fn cusp_stays_indeterminate_in_second_chart() {
    let f = PencilMap::parse("x", "x^2 + y^3").unwrap();
    let opts = ResolveOptions::default();
    let e = Engine::new(&f, &opts).unwrap();
    let subs = blowup_substitutions(&[NfElem::zero(), NfElem::zero()]);
    let (c1, _) = e.charts[0].pull_back(&subs[0], "E".into(), 1);
    // (s, s^2 + s^3 t^3) -> (1 : s + s^2 t^3), constant (1:0) on s = 0
    assert_eq!((c1.a, c1.b), (kp("1"), kp("s + s^2*t^3")));
    // (s t, s^2 t^2 + s^3) -> (t : s t^2 + s^2), still 0/0 at the origin
    let (c2, _) = e.charts[0].pull_back(&subs[1], "E".into(), 1);
    assert_eq!((c2.a, c2.b), (kp("t"), kp("s*t^2 + s^2")));
}
