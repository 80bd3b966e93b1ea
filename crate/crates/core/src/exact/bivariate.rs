//! Factorization of bivariate rational polynomials: specialize one
//! variable at a good integer point, factor the univariate image, lift the
//! monic factors adically, and recombine by trial division.

use alloc::vec;
use alloc::vec::Vec;

use super::factor;
use super::field::Field;
use super::gcd;
use super::multipoly::normalize;
use super::poly::{Monomial, Poly};
use super::rational::Q;
use super::upoly::UPoly;

/// Irreducible factors over Q with multiplicities, each integer-primitive
/// with positive leading coefficient, sorted canonically. Constant input
/// gives an empty list.
pub fn factor_bivariate(f: &Poly<Q>) -> Vec<(Poly<Q>, u32)> {
    assert_eq!(f.nvars(), 2);
    assert!(!f.is_zero());
    let mut out = Vec::new();
    for (part, e) in gcd::squarefree_decomposition(f).expect("nonzero") {
        for g in factor_squarefree(&part) {
            out.push((g, e));
        }
    }
    out.sort_by(|a, b| poly_cmp(&a.0, &b.0));
    out
}

pub fn irreducible_factors(f: &Poly<Q>) -> Vec<Poly<Q>> {
    factor_bivariate(f).into_iter().map(|(g, _)| g).collect()
}

/// Canonical order: total degree, then terms from the top.
pub fn poly_cmp(a: &Poly<Q>, b: &Poly<Q>) -> core::cmp::Ordering {
    a.total_degree().cmp(&b.total_degree()).then_with(|| {
        let ta: Vec<_> = a.terms().rev().collect();
        let tb: Vec<_> = b.terms().rev().collect();
        ta.cmp(&tb)
    })
}

fn univariate_factors(f: &Poly<Q>, var: usize) -> Vec<Poly<Q>> {
    let u = f.to_upoly(var).expect("univariate");
    factor::irreducible_factors(&u)
        .iter()
        .map(|g| normalize(&Poly::from_upoly(g, var, 2)))
        .collect()
}

fn factor_squarefree(f: &Poly<Q>) -> Vec<Poly<Q>> {
    let (i0, i1) = (f.involves(0), f.involves(1));
    match (i0, i1) {
        (false, false) => return Vec::new(),
        (true, false) => return univariate_factors(f, 0),
        (false, true) => return univariate_factors(f, 1),
        _ => {}
    }
    // Main variable x with the larger degree keeps the lifting short.
    let (x, t) = if f.degree_in(0) >= f.degree_in(1) { (0, 1) } else { (1, 0) };
    let c = gcd::content(f, x);
    let mut out = if c.is_constant() { Vec::new() } else { univariate_factors(&c, t) };
    let pp = f.exact_div(&c).expect("content divides");
    if pp.involves(t) {
        out.extend(factor_primitive(&pp, x, t));
    } else if pp.involves(x) {
        out.extend(univariate_factors(&pp, x));
    }
    out
}

fn eval_points() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 })
}

/// Series in `t` with coefficients in `Q[x]`, truncated to `len` terms.
type Series = Vec<UPoly<Q>>;

fn to_series(f: &Poly<Q>, x: usize, t: usize, len: usize) -> Series {
    let mut s = vec![UPoly::zero(); len];
    for (m, c) in f.terms() {
        let j = m.0[t] as usize;
        if j < len {
            s[j] = s[j].add(&UPoly::monomial(c.clone(), m.0[x] as usize));
        }
    }
    s
}

fn from_series(s: &Series, x: usize, t: usize) -> Poly<Q> {
    let mut p = Poly::zero(2);
    for (j, u) in s.iter().enumerate() {
        for (i, c) in u.coeffs().iter().enumerate() {
            let mut e = [0u32; 2];
            e[x] = i as u32;
            e[t] = j as u32;
            p.add_term(Monomial::from_slice(&e), c.clone());
        }
    }
    p
}

fn series_mul(a: &Series, b: &Series, len: usize) -> Series {
    let mut r = vec![UPoly::zero(); len];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if !bj.is_zero() {
                r[i + j] = r[i + j].add(&ai.mul(bj));
            }
        }
    }
    r
}

/// Inverse of a scalar power series with nonzero constant term.
fn scalar_series_inv(l: &[Q], len: usize) -> Vec<Q> {
    let mut inv = vec![Q::zero(); len];
    inv[0] = l[0].inv();
    for k in 1..len {
        let mut s = Q::zero();
        for j in 1..=k.min(l.len() - 1) {
            s += &l[j] * &inv[k - j];
        }
        inv[k] = -s * &inv[0];
    }
    inv
}

fn factor_primitive(f: &Poly<Q>, x: usize, t: usize) -> Vec<Poly<Q>> {
    let n = f.degree_in(x) as usize;
    let lc = f.lc_in(x).to_upoly(t).expect("lc in t only");
    // choose the evaluation point giving the fewest univariate factors
    let mut best: Option<(i64, Vec<UPoly<Q>>)> = None;
    let mut good = 0;
    for t0 in eval_points().take(64) {
        let q0 = Q::from_integer(t0.into());
        if lc.eval(&q0).is_zero() {
            continue;
        }
        let img = f.eval_var(t, &q0).to_upoly(x).expect("univariate");
        if img.deg() != n || !img.is_squarefree() {
            continue;
        }
        let fs: Vec<UPoly<Q>> = factor::irreducible_factors(&img).iter().map(UPoly::monic).collect();
        if fs.len() == 1 {
            return vec![normalize(f)];
        }
        if best.as_ref().is_none_or(|b| fs.len() < b.1.len()) {
            best = Some((t0, fs));
        }
        good += 1;
        if good >= 3 {
            break;
        }
    }
    let (t0, facs) = best.expect("a good evaluation point exists");
    let shift = Poly::var(2, t).add(&Poly::constant(2, Q::from_integer(t0.into())));
    let back = Poly::var(2, t).sub(&Poly::constant(2, Q::from_integer(t0.into())));
    let g = f.substitute(t, &shift);
    let prec = 2 * g.degree_in(t) as usize + 1;
    let lifted = hensel_lift(&g, x, t, &facs, prec);
    recombine(g, x, t, lifted, prec)
        .into_iter()
        .map(|h| normalize(&h.substitute(t, &back)))
        .collect()
}

/// Lift monic factors of `g(x, 0) / lc` to monic factors of
/// `g / lc_x(g)` modulo `t^prec`.
fn hensel_lift(g: &Poly<Q>, x: usize, t: usize, facs: &[UPoly<Q>], prec: usize) -> Vec<Series> {
    let lcs = g.lc_in(x).to_upoly(t).expect("lc in t only");
    let linv = scalar_series_inv(lcs.coeffs(), prec);
    let gs = to_series(g, x, t, prec);
    let target: Series = (0..prec)
        .map(|k| {
            (0..=k).fold(UPoly::zero(), |acc: UPoly<Q>, j| acc.add(&gs[j].scale(&linv[k - j])))
        })
        .collect();
    let r = facs.len();
    // partial fraction coefficients: sum a_i prod_{j != i} f_j = 1
    let cof: Vec<UPoly<Q>> = (0..r)
        .map(|i| {
            let others = facs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(UPoly::one(), |a, (_, f)| a.mul(f));
            let (gg, s, _) = UPoly::xgcd(&others, &facs[i]);
            debug_assert_eq!(gg.deg(), 0);
            s.scale(&gg.coeff(0).inv()).rem(&facs[i])
        })
        .collect();
    let mut parts: Vec<Series> = facs
        .iter()
        .map(|f| {
            let mut s = vec![UPoly::zero(); prec];
            s[0] = f.clone();
            s
        })
        .collect();
    for k in 1..prec {
        let prod = parts
            .iter()
            .skip(1)
            .fold(parts[0].clone(), |a, b| series_mul(&a, b, k + 1));
        let e = target[k].sub(&prod[k]);
        if e.is_zero() {
            continue;
        }
        for i in 0..r {
            parts[i][k] = e.mul(&cof[i]).rem(&facs[i]);
        }
    }
    parts
}

fn recombine(mut g: Poly<Q>, x: usize, t: usize, mut parts: Vec<Series>, prec: usize) -> Vec<Poly<Q>> {
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= parts.len() {
        let r = parts.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lcs = to_series(&g.lc_in(x), x, t, prec);
            let mut cand = lcs;
            for &i in &idx {
                cand = series_mul(&cand, &parts[i], prec);
            }
            let cp = from_series(&cand, x, t);
            let cp = gcd::primitive_part(&cp, x);
            if let Ok(q) = g.exact_div(&cp) {
                found.push(cp);
                g = q;
                for &i in idx.iter().rev() {
                    parts.remove(i);
                }
                continue 'outer;
            }
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
    if !g.is_constant() {
        found.push(g);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;

    fn p(s: &str) -> Poly<Q> {
        parse_poly(s, &["u", "v"]).unwrap().into_poly()
    }

    fn check(f: &Poly<Q>, expect: usize) {
        let fs = factor_bivariate(f);
        assert_eq!(fs.iter().map(|(_, e)| *e as usize).sum::<usize>(), expect, "{fs:?}");
        let prod = fs.iter().fold(Poly::one(2), |a, (g, e)| a.mul(&g.pow(*e)));
        assert_eq!(normalize(&prod), normalize(f));
    }

    #[test]
    fn products_split() {
        check(&p("(u^2 + v^3 + 1)*(u*v - 2)*(u + v)"), 3);
        check(&p("u^2 - 2*v^2"), 1);
        check(&p("(u^2 + v^2)*(u - 1)^2*v"), 4);
        check(&p("(u^3 - v^2 + u*v)*(u^3 - v^2 - u*v)"), 2);
        check(&p("u^4 - v^4"), 3);
    }

    #[test]
    fn irreducibles_stay_whole() {
        check(&p("u^2 + v^3"), 1);
        check(&p("u*v^2 - v - 7"), 1);
        check(&p("u"), 1);
    }
}
