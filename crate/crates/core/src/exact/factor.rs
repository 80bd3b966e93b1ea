//! Univariate factorization over the rationals: squarefree decomposition,
//! modular factorization, quadratic Hensel lifting and exhaustive
//! recombination of lifted factors.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use super::modular::{primes_from, ModPoly, Zp};
use super::rational::{lcm_of_denominators, Q};
use super::upoly::UPoly;

type ZPoly = Vec<BigInt>;

/// Factorization `a = unit * prod f_i^e_i` with each `f_i` primitive,
/// integral, irreducible over Q and with positive leading coefficient.
/// Factors are sorted by (degree, coefficients).
pub fn factor(a: &UPoly<Q>) -> (Q, Vec<(UPoly<Q>, u32)>) {
    assert!(!a.is_zero(), "factor of zero polynomial");
    let mut out: Vec<(UPoly<Q>, u32)> = Vec::new();
    for (part, e) in a.squarefree_decomposition() {
        if part.is_constant() {
            continue;
        }
        for f in factor_squarefree(&part) {
            out.push((f, e));
        }
    }
    out.sort_by(|x, y| poly_key_cmp(&x.0, &y.0));
    let mut prod = UPoly::one();
    for (f, e) in &out {
        prod = prod.mul(&f.pow(*e));
    }
    let unit = a.lc() / prod.lc();
    (unit, out)
}

/// Irreducible factors only, without multiplicities.
pub fn irreducible_factors(a: &UPoly<Q>) -> Vec<UPoly<Q>> {
    factor(a).1.into_iter().map(|(f, _)| f).collect()
}

pub fn is_irreducible(a: &UPoly<Q>) -> bool {
    let (_, fs) = factor(a);
    fs.len() == 1 && fs[0].1 == 1
}

pub fn poly_key_cmp(a: &UPoly<Q>, b: &UPoly<Q>) -> core::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

fn to_z(a: &UPoly<Q>) -> ZPoly {
    let p = a.primitive();
    p.coeffs().iter().map(|c| c.numer().clone()).collect()
}

fn from_z(a: &[BigInt]) -> UPoly<Q> {
    UPoly::from_coeffs(a.iter().map(|c| Q::from_integer(c.clone())).collect()).primitive()
}

/// Primitive integral form with positive leading coefficient.
pub fn normalize(a: &UPoly<Q>) -> UPoly<Q> {
    if a.is_zero() {
        return a.clone();
    }
    let l = lcm_of_denominators(a.coeffs());
    let p = a.scale(&Q::from_integer(l)).primitive();
    if p.lc() < Q::zero() {
        p.neg()
    } else {
        p
    }
}

fn mod_p(a: &ZPoly, p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    let mut r: ModPoly = a
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Polynomial arithmetic modulo an integer `m`.
struct ZMod {
    m: BigInt,
}

impl ZMod {
    fn red(&self, a: &[BigInt]) -> ZPoly {
        let mut r: ZPoly = a.iter().map(|c| c.mod_floor(&self.m)).collect();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        r
    }
    fn add(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        let r: ZPoly = (0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect();
        self.red(&r)
    }
    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        let r: ZPoly = (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect();
        self.red(&r)
    }
    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                r[i + j] += x * y;
            }
        }
        self.red(&r)
    }
    /// Division by a monic polynomial.
    fn divrem_monic(&self, a: &[BigInt], b: &[BigInt]) -> (ZPoly, ZPoly) {
        let db = b.len() - 1;
        debug_assert!(b[db].is_one());
        if a.len() <= db {
            return (Vec::new(), self.red(a));
        }
        let mut r: ZPoly = a.to_vec();
        let mut q = vec![BigInt::zero(); a.len() - db];
        for i in (0..q.len()).rev() {
            let c = r[i + db].mod_floor(&self.m);
            if !c.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[i + j] -= &c * bj;
                }
            }
            q[i] = c;
        }
        r.truncate(db);
        (self.red(&q), self.red(&r))
    }
}

fn lift_z(a: &ModPoly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g h mod m`, `s g + t h = 1 mod m`
/// (h monic) to the same relations modulo `m^2`.
fn hensel_step(
    f: &[BigInt],
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m2: &ZMod,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = m2.sub(f, &m2.mul(g, h));
    let (q, r) = m2.divrem_monic(&m2.mul(s, &e), h);
    let g2 = m2.add(g, &m2.add(&m2.mul(t, &e), &m2.mul(&q, g)));
    let h2 = m2.add(h, &r);
    let b = m2.sub(&m2.add(&m2.mul(s, &g2), &m2.mul(t, &h2)), &[BigInt::one()]);
    let (c, d) = m2.divrem_monic(&m2.mul(s, &b), &h2);
    let s2 = m2.sub(s, &d);
    let t2 = m2.sub(t, &m2.add(&m2.mul(t, &b), &m2.mul(&c, &g2)));
    (g2, h2, s2, t2)
}

/// Lift monic modular factors of `f` (with `f = lc * prod factors mod p`)
/// until the modulus reaches at least `target`. Returns the modulus and
/// monic lifted factors.
fn multi_lift(f: &ZPoly, factors: &[ModPoly], p: u64, target: &BigInt) -> (BigInt, Vec<ZPoly>) {
    let zp = Zp::new(p);
    let mut modulus = BigInt::from(p);
    while &modulus < target {
        modulus = &modulus * &modulus;
    }
    let lifted = lift_tree(f, factors, &zp, &modulus);
    (modulus, lifted)
}

fn lift_tree(f: &ZPoly, factors: &[ModPoly], zp: &Zp, target: &BigInt) -> Vec<ZPoly> {
    let zm = ZMod { m: target.clone() };
    if factors.len() == 1 {
        let lc = f.last().unwrap().clone();
        let inv = mod_inverse(&lc, target);
        return vec![zm.red(&f.iter().map(|c| c * &inv).collect::<Vec<_>>())];
    }
    let k = factors.len() / 2;
    let (left, right) = factors.split_at(k);
    let fp = mod_p(f, zp.p);
    let lcp = *fp.last().unwrap();
    let g0 = left
        .iter()
        .fold(vec![lcp], |a, b| zp.mul_poly(&a, b));
    let h0 = right.iter().fold(vec![1u64], |a, b| zp.mul_poly(&a, b));
    let (one, s0, t0) = zp.xgcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (lift_z(&g0), lift_z(&h0), lift_z(&s0), lift_z(&t0));
    let mut m = BigInt::from(zp.p);
    while &m < target {
        m = &m * &m;
        let m2 = ZMod { m: m.clone() };
        let r = hensel_step(f, &g, &h, &s, &t, &m2);
        g = r.0;
        h = r.1;
        s = r.2;
        t = r.3;
    }
    let g = zm.red(&g);
    let h = zm.red(&h);
    let mut out = lift_tree(&g, left, zp, target);
    out.extend(lift_tree(&h, right, zp, target));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Coefficient bound for factors of `f` (Mignotte-style, generous).
fn factor_coeff_bound(f: &ZPoly) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + 1;
    (BigInt::one() << n) * norm
}

fn factor_squarefree(a: &UPoly<Q>) -> Vec<UPoly<Q>> {
    let f = to_z(a);
    let n = f.len() - 1;
    if n <= 1 {
        return vec![normalize(a)];
    }
    if f[0].is_zero() {
        // x divides; strip it so modular choices are cleaner.
        let rest = from_z(&f[1..]);
        let mut r = vec![UPoly::x()];
        r.extend(factor_squarefree(&rest));
        return r;
    }
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    // Pick, among a few admissible primes, one giving the fewest factors.
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for p in primes_from(101) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let zp = Zp::new(p);
        let fp = mod_p(&f, p);
        if !zp.is_squarefree(&fp) {
            continue;
        }
        let fs = zp.factor_squarefree(&zp.monic(&fp), &mut rng);
        if fs.len() == 1 {
            return vec![normalize(a)];
        }
        if best.as_ref().is_none_or(|b| fs.len() < b.1.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, modfactors) = best.expect("some prime is admissible");
    let bound = factor_coeff_bound(&f) * lc.abs() * 2 + 1;
    let (m, mut lifted) = multi_lift(&f, &modfactors, p, &bound);
    recombine(f, &mut lifted, &m)
}

fn recombine(mut f: ZPoly, lifted: &mut Vec<ZPoly>, m: &BigInt) -> Vec<UPoly<Q>> {
    let zm = ZMod { m: m.clone() };
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lc = f.last().unwrap().clone();
            let mut cand: ZPoly = vec![lc.clone()];
            for &i in &idx {
                cand = zm.mul(&cand, &lifted[i]);
            }
            let cand: ZPoly = cand.iter().map(|c| sym_mod(c, m)).collect();
            let cq = from_z(&cand);
            let fq = from_z(&f);
            if let Some(quot) = fq.exact_div(&cq) {
                found.push(normalize(&cq));
                f = to_z(&quot);
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < r - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    let rest = from_z(&f);
    if !rest.is_constant() {
        found.push(normalize(&rest));
    }
    found
}

/// Integer roots helper: rational roots of `a` (exact, deduplicated).
pub fn rational_roots(a: &UPoly<Q>) -> Vec<Q> {
    let mut out: Vec<Q> = factor(a)
        .1
        .into_iter()
        .filter(|(f, _)| f.deg() == 1)
        .map(|(f, _)| -f.coeff(0) / f.coeff(1))
        .collect();
    out.sort();
    out
}
