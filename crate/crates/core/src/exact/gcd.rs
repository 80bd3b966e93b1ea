//! Pseudo-remainders, subresultant resultants and recursive gcds for
//! sparse multivariate polynomials over an exact field.

use alloc::vec::Vec;

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Pseudo-remainder of `a` by `b` with respect to `var`:
/// `lc(b)^(deg a - deg b + 1) * a mod b`.
pub fn prem<F: Field>(a: &Poly<F>, b: &Poly<F>, var: usize) -> Poly<F> {
    let db = b.degree_in(var);
    let da = a.degree_in(var);
    if a.is_zero() || da < db {
        return a.clone();
    }
    let bc = b.to_univariate(var);
    let lb = bc[db as usize].clone();
    let rest = Poly::from_univariate(var, b.nvars(), &bc[..db as usize]);
    let mut r = a.clone();
    let mut k = da - db + 1;
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let rc = r.to_univariate(var);
        let lr = rc[dr as usize].clone();
        let lower = Poly::from_univariate(var, r.nvars(), &rc[..dr as usize]);
        let shift = Poly::var(r.nvars(), var).pow(dr - db);
        r = lower.mul(&lb).sub(&rest.mul(&lr).mul(&shift));
        k -= 1;
    }
    if k > 0 {
        r = r.mul(&lb.pow(k));
    }
    r
}

/// Resultant eliminating `var`, by the subresultant algorithm.
pub fn resultant<F: Field>(a: &Poly<F>, b: &Poly<F>, var: usize) -> Result<Poly<F>> {
    let n = a.nvars();
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Poly::zero(n));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = false;
    if a.degree_in(var) < b.degree_in(var) {
        if a.degree_in(var) % 2 == 1 && b.degree_in(var) % 2 == 1 {
            sign = true;
        }
        core::mem::swap(&mut a, &mut b);
    }
    if b.degree_in(var) == 0 {
        let r = b.pow(a.degree_in(var));
        return Ok(if sign { r.neg() } else { r });
    }
    let mut g = Poly::one(n);
    let mut h = Poly::one(n);
    loop {
        let da = a.degree_in(var);
        let db = b.degree_in(var);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = prem(&a, &b, var);
        a = b;
        b = r.exact_div(&g.mul(&h.pow(delta)))?;
        g = a.lc_in(var);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).exact_div(&h.pow(delta - 1))?
        };
        if b.is_zero() {
            return Ok(Poly::zero(n));
        }
        if b.degree_in(var) == 0 {
            let da = a.degree_in(var);
            let r = b.pow(da).exact_div(&h.pow(da - 1))?;
            return Ok(if sign { r.neg() } else { r });
        }
    }
}

/// Highest-index variable occurring in either polynomial.
fn main_var<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Option<usize> {
    (0..a.nvars()).rev().find(|&v| a.involves(v) || b.involves(v))
}

/// Content with respect to `var`: the gcd of the coefficients.
pub fn content<F: Field>(a: &Poly<F>, var: usize) -> Poly<F> {
    let mut c = Poly::zero(a.nvars());
    for co in a.to_univariate(var) {
        if co.is_zero() {
            continue;
        }
        c = gcd(&c, &co);
        if c.is_constant() {
            break;
        }
    }
    c
}

/// Primitive part with respect to `var`.
pub fn primitive_part<F: Field>(a: &Poly<F>, var: usize) -> Poly<F> {
    if a.is_zero() {
        return a.clone();
    }
    let c = content(a, var);
    a.exact_div(&c).expect("content divides")
}

/// Monic (grlex leading coefficient one) greatest common divisor.
/// `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let n = a.nvars();
    let v = match main_var(a, b) {
        Some(v) => v,
        None => return Poly::one(n),
    };
    if !a.involves(v) {
        return gcd(a, &content(b, v));
    }
    if !b.involves(v) {
        return gcd(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd(&ca, &cb);
    let mut pa = a.exact_div(&ca).expect("content divides");
    let mut pb = b.exact_div(&cb).expect("content divides");
    if pa.degree_in(v) < pb.degree_in(v) {
        core::mem::swap(&mut pa, &mut pb);
    }
    let mut g = Poly::one(n);
    let mut h = Poly::one(n);
    let last = loop {
        let delta = pa.degree_in(v) - pb.degree_in(v);
        let r = prem(&pa, &pb, v);
        if r.is_zero() {
            break primitive_part(&pb, v);
        }
        if r.degree_in(v) == 0 {
            break Poly::one(n);
        }
        pa = pb;
        pb = r.exact_div(&g.mul(&h.pow(delta))).expect("subresultant divides");
        g = pa.lc_in(v);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).exact_div(&h.pow(delta - 1)).expect("subresultant divides")
        };
    };
    c.mul(&last).monic()
}

pub fn gcd_many<F: Field>(ps: &[Poly<F>]) -> Poly<F> {
    let n = ps.first().map(|p| p.nvars()).unwrap_or(0);
    ps.iter().fold(Poly::zero(n), |acc, p| gcd(&acc, p))
}

/// Product of the distinct irreducible factors (monic).
pub fn squarefree_part<F: Field>(a: &Poly<F>) -> Result<Poly<F>> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut parts: Vec<Poly<F>> = Vec::with_capacity(a.nvars() + 1);
    parts.push(a.clone());
    for v in 0..a.nvars() {
        parts.push(a.derivative(v));
    }
    let g = gcd_many(&parts);
    Ok(a.exact_div(&g)?.monic())
}

/// Squarefree decomposition with respect to every variable jointly:
/// returns `(f_i, i)` with `a = c * prod f_i^i`, `f_i` squarefree and coprime.
pub fn squarefree_decomposition<F: Field>(a: &Poly<F>) -> Result<Vec<(Poly<F>, u32)>> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::new();
    let mut rest = a.monic();
    let mut k = 1;
    while !rest.is_constant() {
        let s = squarefree_part(&rest)?;
        // s = product of all factors still present; peel one power each round.
        let next = rest.exact_div(&s)?;
        let s_next = if next.is_constant() { Poly::one(a.nvars()) } else { squarefree_part(&next)? };
        let exact = s.exact_div(&s_next)?;
        if !exact.is_constant() {
            out.push((exact.monic(), k));
        }
        rest = next;
        k += 1;
    }
    Ok(out)
}
