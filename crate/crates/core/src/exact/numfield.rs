//! Simple algebraic extensions `Q(alpha)` with a fixed complex embedding.

use alloc::sync::Arc;

use super::factor;
use super::field::Field;
use super::gcd;
use super::poly::{Monomial, Poly};
use super::rational::Q;
use super::roots::{self, CBox};
use super::upoly::UPoly;

/// `Q[a] / (min_poly)`, embedded in the complex numbers by sending `a` to
/// the unique root of `min_poly` inside `root`.
#[derive(Debug, PartialEq)]
pub struct NumberField {
    min_poly: UPoly<Q>,
    root: CBox,
}

impl NumberField {
    /// `min_poly` must be irreducible; it is made monic here.
    pub fn new(min_poly: UPoly<Q>, root: CBox) -> Arc<Self> {
        debug_assert!(min_poly.deg() >= 1);
        Arc::new(NumberField {
            min_poly: min_poly.monic(),
            root,
        })
    }

    pub fn min_poly(&self) -> &UPoly<Q> {
        &self.min_poly
    }

    pub fn root_box(&self) -> &CBox {
        &self.root
    }

    pub fn degree(&self) -> usize {
        self.min_poly.deg()
    }

    pub fn gen(self: &Arc<Self>) -> NfElem {
        self.elem(UPoly::x())
    }

    pub fn elem(self: &Arc<Self>, rep: UPoly<Q>) -> NfElem {
        let rep = if rep.deg() >= self.degree() {
            rep.rem(&self.min_poly)
        } else {
            rep
        };
        NfElem {
            field: if self.degree() > 1 { Some(self.clone()) } else { None },
            rep: if self.degree() > 1 { rep } else { UPoly::constant(rep.eval(&self.root_value_if_rational())) },
        }
    }

    fn root_value_if_rational(&self) -> Q {
        if self.degree() == 1 {
            -self.min_poly.coeff(0)
        } else {
            Q::zero()
        }
    }

    /// Box around the generator of width at most `2^-bits`.
    pub fn root_enclosure(&self, bits: u32) -> CBox {
        if self.degree() == 1 {
            return CBox::point(self.root_value_if_rational(), Q::zero());
        }
        let target = Q::new(1.into(), num_bigint::BigInt::from(1) << bits);
        if self.root.width() <= target {
            return self.root.clone();
        }
        roots::refine(&self.min_poly, &self.root, bits)
    }

    /// Interval enclosure of an element under the embedding.
    pub fn enclose(&self, e: &NfElem, bits: u32) -> CBox {
        let r = self.root_enclosure(bits);
        CBox::eval(&e.rep, &r)
    }
}

/// Element of a number field, stored as a polynomial in the generator of
/// degree below the field degree. Rational constants carry no field so that
/// `zero()` and `one()` need no context.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Option<Arc<NumberField>>,
    rep: UPoly<Q>,
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        self.rep == o.rep
    }
}

impl NfElem {
    pub fn rational(c: Q) -> Self {
        NfElem {
            field: None,
            rep: UPoly::constant(c),
        }
    }

    pub fn rep(&self) -> &UPoly<Q> {
        &self.rep
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    fn join(&self, o: &Self) -> Option<Arc<NumberField>> {
        match (&self.field, &o.field) {
            (Some(a), Some(b)) => {
                debug_assert!(Arc::ptr_eq(a, b) || a == b, "mixed number fields");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn make(field: Option<Arc<NumberField>>, rep: UPoly<Q>) -> Self {
        let field = if rep.deg() == 0 { None } else { field };
        NfElem { field, rep }
    }

    /// Minimal polynomial over Q (monic), found among the irreducible
    /// factors of the characteristic polynomial by exact evaluation.
    pub fn min_poly(&self) -> UPoly<Q> {
        let f = match &self.field {
            None => return UPoly::from_coeffs(alloc::vec![-self.rep.coeff(0), Q::from_integer(1.into())]),
            Some(f) => f,
        };
        let cp = char_poly(f.min_poly(), &self.rep);
        for g in factor::irreducible_factors(&cp) {
            if eval_q_poly(&g, self).is_zero() {
                return g.monic();
            }
        }
        unreachable!("element is a root of its characteristic polynomial")
    }
}

/// `Res_a(m(a), t - r(a))`, a polynomial in `t`.
fn char_poly(m: &UPoly<Q>, r: &UPoly<Q>) -> UPoly<Q> {
    let a = Poly::<Q>::from_upoly(m, 0, 2);
    let mut b = Poly::<Q>::var(2, 1);
    b = b.sub(&Poly::from_upoly(r, 0, 2));
    let res = gcd::resultant(&a, &b, 0).expect("nonzero inputs");
    res.to_upoly(1).expect("univariate in t")
}

/// Evaluate a rational polynomial at a number-field element.
pub fn eval_q_poly(p: &UPoly<Q>, e: &NfElem) -> NfElem {
    let mut acc = NfElem::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(e).add(&NfElem::from_q(c));
    }
    acc
}

impl Field for NfElem {
    fn zero() -> Self {
        NfElem::rational(Q::zero())
    }
    fn one() -> Self {
        NfElem::rational(Q::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn is_one(&self) -> bool {
        self.rep.deg() == 0 && self.rep.coeff(0) == Q::from_integer(1.into())
    }
    fn add(&self, o: &Self) -> Self {
        Self::make(self.join(o), self.rep.add(&o.rep))
    }
    fn sub(&self, o: &Self) -> Self {
        Self::make(self.join(o), self.rep.sub(&o.rep))
    }
    fn mul(&self, o: &Self) -> Self {
        let f = self.join(o);
        let mut r = self.rep.mul(&o.rep);
        if let Some(k) = &f {
            if r.deg() >= k.degree() {
                r = r.rem(&k.min_poly);
            }
        }
        Self::make(f, r)
    }
    fn neg(&self) -> Self {
        NfElem {
            field: self.field.clone(),
            rep: self.rep.neg(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.field {
            None => NfElem::rational(self.rep.coeff(0).recip()),
            Some(k) => {
                let (g, s, _) = UPoly::xgcd(&self.rep, &k.min_poly);
                debug_assert_eq!(g.deg(), 0);
                let s = s.scale(&g.coeff(0).recip());
                Self::make(Some(k.clone()), s)
            }
        }
    }
    fn from_q(x: &Q) -> Self {
        NfElem::rational(x.clone())
    }
    fn to_q(&self) -> Option<Q> {
        if self.rep.deg() == 0 {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }
}

/// Rational polynomial viewed over a number field.
pub fn upoly_to_nf(p: &UPoly<Q>) -> UPoly<NfElem> {
    p.map(NfElem::from_q)
}

pub fn poly_to_nf(p: &Poly<Q>) -> Poly<NfElem> {
    p.map_coeffs(NfElem::from_q)
}

/// `K[x]` polynomial as a rational polynomial in `(a, x)` (variable 0 is
/// the generator).
pub fn lift_to_bivariate(p: &UPoly<NfElem>) -> Poly<Q> {
    let mut out = Poly::zero(2);
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, r) in c.rep.coeffs().iter().enumerate() {
            out.add_term(Monomial::from_slice(&[j as u32, i as u32]), r.clone());
        }
    }
    out
}

/// Norm `N_{K/Q}` of a polynomial over `K`.
pub fn norm(k: &NumberField, p: &UPoly<NfElem>) -> UPoly<Q> {
    let m = Poly::from_upoly(k.min_poly(), 0, 2);
    let g = lift_to_bivariate(p);
    if !g.involves(0) {
        return g.to_upoly(1).expect("rational").pow(k.degree() as u32);
    }
    gcd::resultant(&m, &g, 0)
        .expect("nonzero")
        .to_upoly(1)
        .expect("univariate")
}

/// Bivariate rational polynomial in variables `(a, rest...)` reduced into
/// coefficients over `K` where `a` is the generator. Used for reading
/// polynomials back from combined representations.
pub fn collapse_generator(k: &Arc<NumberField>, p: &Poly<Q>, gen_var: usize) -> Poly<NfElem> {
    let n = p.nvars();
    let mut out: Poly<NfElem> = Poly::zero(n);
    for (m, c) in p.terms() {
        let e = m.0[gen_var];
        let mut mm = m.clone();
        mm.0[gen_var] = 0;
        let v = k.elem(UPoly::monomial(c.clone(), e as usize));
        out.add_term(mm, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{q, qf};

    fn sqrt2() -> Arc<NumberField> {
        let m = UPoly::from_i64(&[-2, 0, 1]);
        let b = roots::isolate(&m, 8).pop().unwrap();
        NumberField::new(m, b)
    }

    #[test]
    fn arithmetic_in_q_sqrt2() {
        let k = sqrt2();
        let a = k.gen();
        assert_eq!(a.mul(&a), NfElem::from_q(&q(2)));
        let b = a.add(&NfElem::from_q(&q(1)));
        let bi = b.inv();
        assert!(b.mul(&bi).is_one());
        // 1/(1 + sqrt 2) = sqrt 2 - 1
        assert_eq!(bi, a.sub(&NfElem::one()));
        assert_eq!(b.min_poly(), UPoly::from_i64(&[-1, -2, 1]));
        let e = k.enclose(&a, 30);
        assert!(e.re_lo > qf(14142, 10000) && e.re_hi < qf(14143, 10000));
    }

    #[test]
    fn norm_of_linear() {
        let k = sqrt2();
        // N(x - sqrt 2) = x^2 - 2
        let p = UPoly::from_coeffs(alloc::vec![k.gen().neg(), NfElem::one()]);
        assert_eq!(norm(&k, &p), UPoly::from_i64(&[-2, 0, 1]));
    }
}
