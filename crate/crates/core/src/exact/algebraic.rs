//! Algebraic numbers as (minimal polynomial, isolating box) pairs.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::factor;
use super::gcd;
use super::multipoly::fmt_upoly;
use super::numfield::{NfElem, NumberField};
use super::poly::{Monomial, Poly};
use super::rational::Q;
use super::roots::{self, CBox};
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    min_poly: UPoly<Q>,
    root: CBox,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, o: &Self) -> bool {
        if self.min_poly != o.min_poly {
            return false;
        }
        if self.degree() == 1 {
            return true;
        }
        let bits = 24;
        let boxes = roots::isolate(&self.min_poly, bits);
        let idx = |b: &CBox| boxes.iter().position(|c| c.intersects(&roots::refine(&self.min_poly, b, bits)));
        idx(&self.root) == idx(&o.root)
    }
}

impl serde::Serialize for AlgebraicNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AlgebraicNumber", 2)?;
        st.serialize_field("min_poly", &fmt_upoly(&self.min_poly, "t"))?;
        st.serialize_field("box", &self.root)?;
        st.end()
    }
}

impl AlgebraicNumber {
    pub fn rational(c: Q) -> Self {
        AlgebraicNumber {
            min_poly: UPoly::from_coeffs(vec![-c.clone(), Q::one()]),
            root: CBox::point(c, Q::zero()),
        }
    }

    /// Validates irreducibility, the cap and that `root` isolates exactly
    /// one root.
    pub fn new(min_poly: UPoly<Q>, root: CBox, cap: usize) -> Result<Self> {
        if min_poly.deg() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !factor::is_irreducible(&min_poly) {
            return Err(Error::NotIrreducible);
        }
        let min_poly = min_poly.monic();
        if min_poly.deg() > cap {
            return Err(Error::DegreeCapExceeded {
                cap,
                min_polys: vec![fmt_upoly(&min_poly, "t")],
            });
        }
        if roots::count_roots_in(&min_poly, &root) != Some(1) {
            return Err(Error::Internal("box does not isolate a single root".into()));
        }
        Ok(AlgebraicNumber { min_poly, root })
    }

    /// All complex roots of a nonzero polynomial, without multiplicity.
    pub fn roots_of(p: &UPoly<Q>, cap: usize) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        let mut over = Vec::new();
        for f in factor::irreducible_factors(p) {
            let f = f.monic();
            if f.deg() > cap {
                over.push(fmt_upoly(&f, "t"));
                continue;
            }
            for b in roots::isolate(&f, 8) {
                out.push(AlgebraicNumber {
                    min_poly: f.clone(),
                    root: b,
                });
            }
        }
        if !over.is_empty() {
            return Err(Error::DegreeCapExceeded { cap, min_polys: over });
        }
        Ok(out)
    }

    pub fn min_poly(&self) -> &UPoly<Q> {
        &self.min_poly
    }

    pub fn isolating_box(&self) -> &CBox {
        &self.root
    }

    pub fn degree(&self) -> usize {
        self.min_poly.deg()
    }

    pub fn to_rational(&self) -> Option<Q> {
        (self.degree() == 1).then(|| -self.min_poly.coeff(0))
    }

    pub fn is_zero(&self) -> bool {
        self.to_rational().is_some_and(|c| c.is_zero())
    }

    /// Box of width at most `2^-bits` around the number.
    pub fn enclosure(&self, bits: u32) -> CBox {
        if let Some(c) = self.to_rational() {
            return CBox::point(c, Q::zero());
        }
        let target = Q::new(BigInt::one(), BigInt::one() << bits);
        if self.root.width() <= target {
            return self.root.clone();
        }
        roots::refine(&self.min_poly, &self.root, bits)
    }

    pub fn refined(&self, bits: u32) -> Self {
        AlgebraicNumber {
            min_poly: self.min_poly.clone(),
            root: self.enclosure(bits),
        }
    }

    /// The number an element of a number field denotes under the field's
    /// embedding.
    pub fn from_nf(k: &NumberField, e: &NfElem) -> Self {
        let mp = e.min_poly();
        identify(&[mp], |bits| k.enclose(e, bits), usize::MAX).expect("no cap")
    }

    pub fn neg(&self) -> Self {
        let n = self.degree();
        let c: Vec<Q> = self
            .min_poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if (n - i) % 2 == 1 { -c } else { c.clone() })
            .collect();
        AlgebraicNumber {
            min_poly: UPoly::from_coeffs(c),
            root: self.root.neg(),
        }
    }

    pub fn add(&self, o: &Self, cap: usize) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.to_rational(), o.to_rational()) {
            return Ok(Self::rational(a + b));
        }
        // Res_s(a(s), b(t - s))
        let a = Poly::from_upoly(&self.min_poly, 0, 2);
        let shift = Poly::var(2, 1).sub(&Poly::var(2, 0));
        let b = Poly::from_upoly(&o.min_poly, 0, 2).substitute(0, &shift);
        let r = gcd::resultant(&a, &b, 0)?.to_upoly(1).expect("univariate");
        let cands = factor::irreducible_factors(&r);
        identify(&cands, |bits| self.enclosure(bits).add(&o.enclosure(bits)), cap)
    }

    pub fn sub(&self, o: &Self, cap: usize) -> Result<Self> {
        self.add(&o.neg(), cap)
    }

    pub fn mul(&self, o: &Self, cap: usize) -> Result<Self> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::rational(Q::zero()));
        }
        if let (Some(a), Some(b)) = (self.to_rational(), o.to_rational()) {
            return Ok(Self::rational(a * b));
        }
        // Res_s(a(s), s^deg(b) b(t/s))
        let a = Poly::from_upoly(&self.min_poly, 0, 2);
        let db = o.degree() as u32;
        let mut b = Poly::zero(2);
        for (i, c) in o.min_poly.coeffs().iter().enumerate() {
            b.add_term(Monomial::from_slice(&[db - i as u32, i as u32]), c.clone());
        }
        let r = gcd::resultant(&a, &b, 0)?.to_upoly(1).expect("univariate");
        let cands = factor::irreducible_factors(&r);
        identify(&cands, |bits| self.enclosure(bits).mul(&o.enclosure(bits)), cap)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InversionOfZero);
        }
        let rev = self.min_poly.reverse().monic();
        identify(
            &[rev],
            |bits| {
                let mut b = bits;
                loop {
                    if let Some(i) = self.enclosure(b).inv() {
                        return i;
                    }
                    b += 8;
                }
            },
            usize::MAX,
        )
    }
}

/// Select the unique root among the candidate irreducible polynomials that
/// is consistent with a shrinking family of enclosures.
fn identify(cands: &[UPoly<Q>], approx: impl Fn(u32) -> CBox, cap: usize) -> Result<AlgebraicNumber> {
    let mut bits = 16;
    loop {
        let enc = approx(bits);
        let mut hits: Vec<(usize, CBox)> = Vec::new();
        for (i, f) in cands.iter().enumerate() {
            for b in roots::isolate(f, bits) {
                if b.intersects(&enc) {
                    hits.push((i, b));
                }
            }
        }
        if hits.len() == 1 {
            let (i, b) = hits.pop().unwrap();
            let f = cands[i].monic();
            if f.deg() > cap {
                return Err(Error::DegreeCapExceeded {
                    cap,
                    min_polys: vec![fmt_upoly(&f, "t")],
                });
            }
            return Ok(AlgebraicNumber { min_poly: f, root: b });
        }
        assert!(!hits.is_empty() || bits < 4096, "enclosure lost the root");
        bits *= 2;
    }
}
