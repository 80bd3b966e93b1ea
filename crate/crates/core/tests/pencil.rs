use pencil_core::exact::rational::q;
use pencil_core::exact::{gcd, parse_poly, Poly, Q};
use pencil_core::pencil::*;
use pencil_core::sample::Sampler;
use pencil_core::Error;
use proptest::prelude::*;

fn p(s: &str) -> Poly<Q> {
    parse_poly(s, &XY).unwrap().into_poly()
}

fn map(a: &str, b: &str) -> PencilMap {
    PencilMap::parse(a, b).unwrap()
}

#[test]
fn members() {
    let f = map("x", "x^2 + y^3");
    assert_eq!(pencil_member(&f, &q(2), &q(-1)).unwrap(), p("2*x - x^2 - y^3"));
    assert_eq!(pencil_member(&f, &q(0), &q(0)), Err(Error::InvalidProjectivePoint));
    assert_eq!(f.member(&Lambda::infinity()), p("x^2 + y^3"));
    assert_eq!(f.member(&Lambda::affine(q(0))), p("x"));
    assert_eq!(f.jacobian(), p("3*y^2"));
    assert!(map("x", "2*x").is_degenerate());
    assert_eq!(map("x*y", "x*y + 1").constant_member(), Some(Lambda::affine(q(-1))));
    assert_eq!(map("x", "y").constant_member(), None);
}

#[test]
fn factor_counts() {
    assert_eq!(absolute_factor_count(&p("x^2 - y^2")).unwrap(), 2);
    assert_eq!(absolute_factor_count(&p("x^2 + y^2")).unwrap(), 2);
    assert_eq!(absolute_factor_count(&p("x^2 + y^3")).unwrap(), 1);
    assert_eq!(absolute_factor_count(&p("x*y*(x + y + 1)")).unwrap(), 3);
    // y^2 - 2 splits over Q(sqrt 2) into two horizontal lines
    assert_eq!(absolute_factor_count(&p("y^2 - 2")).unwrap(), 2);
    assert_eq!(absolute_factor_count(&p("7")), Err(Error::ConstantPolynomial));
}

#[test]
fn scan_examples() {
    let prof = scan_pencil(&map("x", "x^2 + y^3"), DEFAULT_SAMPLES, 1).unwrap();
    assert_eq!(prof.generic_r, 1);
    assert!(prof.special_candidates.is_empty());
    assert_eq!(prof.total_reducibility, 0);
    assert_eq!(prof.generic_rationality, Rationality::NotRational { genus: 1 });
    assert!(!prof.generic_rational());

    let prof = scan_pencil(&map("x*y", "x + y"), DEFAULT_SAMPLES, 1).unwrap();
    assert_eq!(prof.generic_r, 1);
    assert_eq!(prof.special_r(&Lambda::infinity()), None);
    // xy alone is the only reducible member
    assert_eq!(prof.special_candidates.len(), 1);
    assert_eq!(prof.special_r(&Lambda::affine(q(0))), Some(2));
    assert_eq!(Lambda::affine(q(0)), Lambda::new(q(1), q(0)).unwrap());
    assert_eq!(prof.total_reducibility, 1);

    let prof = scan_pencil(&map("x*y", "x*y + 1"), DEFAULT_SAMPLES, 1).unwrap();
    assert_eq!(prof.special_r(&Lambda::affine(q(-1))), Some(0));

    assert!(scan_pencil(&map("x", "y"), 5, 1).is_err());
}

#[test]
fn reducible_locus_examples() {
    let loc = reducible_locus_candidates(&map("x^2 - y^2", "x + y^3"), 3).unwrap();
    assert_eq!(loc.generic_r, 1);
    assert!(loc.complete);
    let rational: Vec<_> = loc.confirmed.iter().filter_map(|s| s.param.rational().cloned()).collect();
    assert!(rational.contains(&Lambda::new(q(1), q(0)).unwrap()));

    // x^2 + t y^2: every member is a pair of lines
    let loc = reducible_locus_candidates(&map("x^2", "y^2"), 3).unwrap();
    assert_eq!(loc.generic_r, 2);
    assert!(loc.confirmed.iter().all(|s| s.r != 2));
}

#[test]
fn rationality_examples() {
    // (x, y) = (t^3, -t^2)
    let f = p("x^2 + y^3");
    let t = Poly::<Q>::var(2, 0);
    let image = f.compose(&[t.pow(3), t.pow(2).neg()], 2);
    assert!(image.is_zero());
    assert!(rationality_verdict(&f).unwrap().is_rational());

    // smooth in the torus with one interior lattice point, (1, 1)
    let g = p("x^2 + x + y^3");
    let hull = pencil_core::exact::newton::LatticePolygon::of_poly(&g).unwrap();
    assert_eq!(hull.interior_points(), 1);
    assert_eq!(rationality_verdict(&g).unwrap(), Rationality::NotRational { genus: 1 });

    assert!(rationality_verdict(&p("x^2 + y^2 - 1")).unwrap().is_rational());
    assert!(rationality_verdict(&p("y - x^5")).unwrap().is_rational());
    assert_eq!(rationality_verdict(&p("x*y")), Err(Error::NotIrreducible));
}

/// An absolutely irreducible factor and its count over C (always 1).
fn irreducible(rng: &mut Sampler) -> Poly<Q> {
    let c = |rng: &mut Sampler| rng.nonzero_int(7);
    let s = match rng.int(0, 3) {
        0 => format!("{}*x + {}*y + {}", c(rng), c(rng), rng.int(-7, 7)),
        1 => format!("y + {}*x^2 + {}*x + {}", c(rng), rng.int(-7, 7), rng.int(-7, 7)),
        2 => format!("x + {}*y^3 + {}*y^2", c(rng), rng.int(-7, 7)),
        _ => format!("x^2 + {}*y^2 + {}", rng.int(1, 5), c(rng)),
    };
    p(&s)
}

fn coprime(a: &Poly<Q>, b: &Poly<Q>) -> bool {
    gcd::gcd(a, b).is_constant()
}

/// `f(a x + b y + e, c x + d y + g)` with `ad - bc != 0`.
fn linear_change(f: &Poly<Q>, k: [i64; 6]) -> Poly<Q> {
    let [a, b, c, d, e, g] = k.map(q);
    let (x, y) = (Poly::<Q>::var(2, 0), Poly::<Q>::var(2, 1));
    let one = Poly::<Q>::one(2);
    let u = x.scale(&a).add(&y.scale(&b)).add(&one.scale(&e));
    let v = x.scale(&c).add(&y.scale(&d)).add(&one.scale(&g));
    f.compose(&[u, v], 2)
}

fn small_map() -> impl Strategy<Value = PencilMap> {
    let mono = prop::sample::select(vec!["x", "y", "x^2", "x*y", "y^2", "x^3", "y^3", "x*y^2", "1"]);
    let side = prop::collection::vec((mono, -3i64..=3), 1..4).prop_map(|ts| {
        ts.iter()
            .map(|(m, c)| format!("{c}*{m}"))
            .collect::<Vec<_>>()
            .join(" + ")
    });
    (side.clone(), side)
        .prop_filter_map("degenerate", |(a, b)| {
            let f = PencilMap::parse(&a, &b).ok()?;
            let nonconstant = !f.p().is_constant() && !f.q().is_constant();
            (nonconstant && !f.is_degenerate()).then_some(f)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_add_over_coprime_products(seed in any::<u64>(), k in 1usize..4) {
        let mut rng = Sampler::new(seed);
        let mut fs: Vec<Poly<Q>> = Vec::new();
        while fs.len() < k {
            let f = irreducible(&mut rng);
            if fs.iter().all(|g| coprime(g, &f)) {
                fs.push(f);
            }
        }
        let prod = fs.iter().skip(1).fold(fs[0].clone(), |a, b| a.mul(b));
        let total: usize = fs.iter().map(|f| absolute_factor_count(f).unwrap()).sum();
        prop_assert_eq!(absolute_factor_count(&prod).unwrap(), total);
        prop_assert_eq!(total, k);
    }

    #[test]
    fn counts_are_invariant_under_affine_changes(
        seed in any::<u64>(),
        k in prop::array::uniform6(-3i64..=3),
    ) {
        prop_assume!(k[0] * k[3] - k[1] * k[2] != 0);
        let mut rng = Sampler::new(seed);
        let f = irreducible(&mut rng);
        let g = irreducible(&mut rng);
        prop_assume!(coprime(&f, &g));
        let h = f.mul(&g);
        prop_assert_eq!(
            absolute_factor_count(&linear_change(&h, k)).unwrap(),
            absolute_factor_count(&h).unwrap()
        );
    }

    #[test]
    fn count_bounds_the_rational_factors(seed in any::<u64>(), k in 1usize..4) {
        let mut rng = Sampler::new(seed);
        let mut fs: Vec<Poly<Q>> = Vec::new();
        while fs.len() < k {
            let mut f = irreducible(&mut rng);
            if rng.int(0, 1) == 1 {
                // x^2 + k y^2 is one factor over Q and two over C
                f = p(&format!("x^2 + {}*y^2", rng.int(1, 5)));
            }
            if fs.iter().all(|g| coprime(g, &f)) {
                fs.push(f);
            }
        }
        let prod = fs.iter().skip(1).fold(fs[0].clone(), |a, b| a.mul(b));
        prop_assert!(absolute_factor_count(&prod).unwrap() >= k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn scan_is_seed_independent(f in small_map(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = scan_pencil(&f, 20, s1);
        let b = scan_pencil(&f, 20, s2);
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(a.generic_r, b.generic_r);
            if a.locus_complete && b.locus_complete {
                prop_assert_eq!(a.special_candidates, b.special_candidates);
                prop_assert_eq!(a.total_reducibility, b.total_reducibility);
            }
        }
    }
}
