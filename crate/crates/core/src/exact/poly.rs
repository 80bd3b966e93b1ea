//! Sparse multivariate polynomials keyed by exponent vectors in graded
//! lexicographic order. Variables are positional; names live in
//! [`MultiPoly`](super::multipoly::MultiPoly).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use smallvec::SmallVec;

use super::field::Field;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Exponent vector. Ordered by total degree, then lexicographically with
/// the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = e;
        m
    }

    pub fn from_slice(e: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Monomial(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Self) -> Self {
        Monomial(o.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(nvars, i, 1), F::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.0.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total() == 0)
    }

    pub fn constant_term(&self) -> F {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn lc(&self) -> F {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(F::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
    pub fn order_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).min().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.involves(v)).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let mut r = Self::zero(self.nvars);
        for (m, c) in &small.terms {
            for (k, a) in &big.terms {
                r.add_term(m.mul(k), c.mul(a));
            }
        }
        r
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient by sparse division; fails with `DivisionInexact`.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (dm, dc) = match d.leading() {
            Some((m, c)) => (m.clone(), c.inv()),
            None => return Err(Error::ZeroInput),
        };
        if d.len() == 1 {
            let mut q = Self::zero(self.nvars);
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return Err(Error::DivisionInexact);
                }
                q.terms.insert(dm.quotient_of(m), c.mul(&dc));
            }
            return Ok(q);
        }
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((m, c)) = r.leading() {
            if !dm.divides(m) {
                return Err(Error::DivisionInexact);
            }
            let qm = dm.quotient_of(m);
            let qc = c.mul(&dc);
            for (k, a) in &d.terms {
                r.add_term(k.mul(&qm), a.mul(&qc).neg());
            }
            q.add_term(qm, qc);
        }
        Ok(q)
    }

    pub fn divides(&self, a: &Self) -> bool {
        self.exact_div_opt(a).is_some()
    }

    fn exact_div_opt(&self, a: &Self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        a.exact_div(self).ok()
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut k = m.clone();
            k.0[var] = e - 1;
            r.add_term(k, c.mul(&F::from_i64(e as i64)));
        }
        r
    }

    /// Substitute a field value for one variable; the variable stays in the
    /// vector with exponent zero.
    pub fn eval_var(&self, var: usize, x: &F) -> Self {
        let mut r = Self::zero(self.nvars);
        let maxe = self.degree_in(var);
        let mut pows = Vec::with_capacity(maxe as usize + 1);
        let mut p = F::one();
        for _ in 0..=maxe {
            pows.push(p.clone());
            p = p.mul(x);
        }
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut k = m.clone();
            k.0[var] = 0;
            r.add_term(k, c.mul(&pows[e]));
        }
        r
    }

    /// Evaluate at a full point.
    pub fn eval(&self, pt: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in pt.iter().zip(m.0.iter()) {
                if e > 0 {
                    t = t.mul(&x.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replace variable `var` by the polynomial `g` (same variable count).
    pub fn substitute(&self, var: usize, g: &Self) -> Self {
        let coeffs = self.to_univariate(var);
        let mut acc = Self::zero(self.nvars);
        for c in coeffs.iter().rev() {
            acc = acc.mul(g).add(c);
        }
        acc
    }

    /// Simultaneous substitution of every variable; `images` are polynomials
    /// in `target_nvars` variables.
    pub fn compose(&self, images: &[Self], target_nvars: usize) -> Self {
        debug_assert_eq!(images.len(), self.nvars);
        let mut cache: Vec<Vec<Self>> = vec![Vec::new(); self.nvars];
        let mut acc = Self::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target_nvars, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut cache[v];
                if pw.is_empty() {
                    pw.push(Self::one(target_nvars));
                }
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().mul(&images[v]);
                    pw.push(next);
                }
                t = t.mul(&pw[e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Coefficients with respect to `var` (index = exponent); each
    /// coefficient keeps the full variable vector with `var` set to zero.
    pub fn to_univariate(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(self.nvars); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut k = m.clone();
            k.0[var] = 0;
            out[e].terms.insert(k, c.clone());
        }
        out
    }

    pub fn from_univariate(var: usize, nvars: usize, coeffs: &[Self]) -> Self {
        let mut r = Self::zero(nvars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut k = m.clone();
                k.0[var] += e as u32;
                r.add_term(k, a.clone());
            }
        }
        r
    }

    /// Leading coefficient with respect to `var`.
    pub fn lc_in(&self, var: usize) -> Self {
        self.to_univariate(var).pop().unwrap_or_else(|| Self::zero(self.nvars))
    }

    /// Dense univariate view, if only `var` occurs.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly<F>> {
        if self.terms.keys().any(|m| m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0)) {
            return None;
        }
        let d = self.degree_in(var) as usize;
        let mut v = vec![F::zero(); d + 1];
        for (m, c) in &self.terms {
            v[m.0[var] as usize] = c.clone();
        }
        Some(UPoly::from_coeffs(v))
    }

    pub fn from_upoly(p: &UPoly<F>, var: usize, nvars: usize) -> Self {
        let mut r = Self::zero(nvars);
        for (i, c) in p.coeffs().iter().enumerate() {
            r.add_term(Monomial::var(nvars, var, i as u32), c.clone());
        }
        r
    }

    /// Reindex variables: old variable `i` becomes `map[i]` in a polynomial
    /// with `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Self {
        let mut r = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut k = Monomial::one(nvars);
            for (i, &e) in m.0.iter().enumerate() {
                k.0[map[i]] += e;
            }
            r.add_term(k, c.clone());
        }
        r
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let mut r = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c));
        }
        r
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    /// Split off the largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut m: Option<Monomial> = None;
        for k in self.terms.keys() {
            m = Some(match m {
                None => k.clone(),
                Some(a) => Monomial(a.0.iter().zip(k.0.iter()).map(|(x, y)| *x.min(y)).collect()),
            });
        }
        m.unwrap_or_else(|| Monomial::one(self.nvars))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (m.quotient_of(k), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms restricted to a variable subset's exponents being fixed.
    pub fn retain_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{q, Q};

    fn x() -> Poly<Q> {
        Poly::var(2, 0)
    }
    fn y() -> Poly<Q> {
        Poly::var(2, 1)
    }

    #[test]
    fn difference_of_squares() {
        let a = x().add(&y());
        let b = x().sub(&y());
        let p = a.mul(&b);
        assert_eq!(p, x().pow(2).sub(&y().pow(2)));
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(p.exact_div(&x()), Err(Error::DivisionInexact));
        let c = x().pow(2).add(&y().pow(3));
        assert!(c.sub(&c).is_zero());
        assert!(c.sub(&c).is_empty());
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_slice(&[2, 0]);
        let b = Monomial::from_slice(&[0, 3]);
        let c = Monomial::from_slice(&[1, 1]);
        assert!(b > a);
        assert!(a > c);
        let p = x().pow(2).add(&y().pow(3));
        assert_eq!(p.leading().unwrap().0, &b);
    }

    #[test]
    fn substitution_and_views() {
        let p = x().pow(2).mul(&y()).add(&y().scale(&q(3)));
        let u = p.to_univariate(1);
        assert_eq!(u.len(), 2);
        assert_eq!(u[1], x().pow(2).add(&Poly::constant(2, q(3))));
        assert_eq!(Poly::from_univariate(1, 2, &u), p);
        let s = p.substitute(1, &x());
        assert_eq!(s, x().pow(3).add(&x().scale(&q(3))));
        assert_eq!(p.eval(&[q(2), q(5)]), q(35));
        assert_eq!(p.derivative(0), x().mul(&y()).scale(&q(2)));
        let c = p.compose(&[y(), x()], 2);
        assert_eq!(c, y().pow(2).mul(&x()).add(&x().scale(&q(3))));
    }
}
