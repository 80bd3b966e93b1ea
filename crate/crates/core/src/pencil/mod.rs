//! Pencils `aP + bQ = 0` of a plane map: component counts of members,
//! the reducible locus, and rationality of the generic member.

mod gao;
mod locus;
mod rationality;
mod scan;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::multipoly::fmt_poly;
use crate::exact::rational::fmt_q;
use crate::exact::{parse_poly, MultiPoly, Poly, Q};

pub use gao::{absolute_factor_count, gao_matrix, gao_nullity};
pub use locus::{reducible_locus_candidates, PencilParam, ReducibleLocus, SpecialMember};
pub use rationality::{rationality_verdict, Rationality};
pub use scan::{scan_pencil, Genus, PencilProfile, DEFAULT_SAMPLES};

pub const XY: [&str; 2] = ["x", "y"];

/// A point `(a : b)` of the projective line, scaled so that the first
/// nonzero coordinate is one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda {
    a: Q,
    b: Q,
}

impl Lambda {
    pub fn new(a: Q, b: Q) -> Result<Self> {
        if !a.is_zero() {
            Ok(Lambda {
                b: b / &a,
                a: Q::one(),
            })
        } else if !b.is_zero() {
            Ok(Lambda {
                a: Q::zero(),
                b: Q::one(),
            })
        } else {
            Err(Error::InvalidProjectivePoint)
        }
    }

    /// `(1 : t)`.
    pub fn affine(t: Q) -> Self {
        Lambda { a: Q::one(), b: t }
    }

    pub fn infinity() -> Self {
        Lambda {
            a: Q::zero(),
            b: Q::one(),
        }
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", fmt_q(&self.a), fmt_q(&self.b))
    }
}

impl Serialize for Lambda {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `F = (P, Q)` in the variables `(x, y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilMap {
    p: Poly<Q>,
    q: Poly<Q>,
}

impl PencilMap {
    pub fn new(p: Poly<Q>, q: Poly<Q>) -> Result<Self> {
        if p.nvars() != 2 || q.nvars() != 2 {
            return Err(Error::IncompatibleVariables("maps are in (x, y)".into()));
        }
        if p.is_constant() && q.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(PencilMap { p, q })
    }

    pub fn from_multi(p: &MultiPoly, q: &MultiPoly) -> Result<Self> {
        let vars: Vec<String> = XY.iter().map(|s| String::from(*s)).collect();
        let p = p.extend_to(&vars)?.into_poly();
        let q = q.extend_to(&vars)?.into_poly();
        Self::new(p, q)
    }

    pub fn parse(p: &str, q: &str) -> Result<Self> {
        Self::new(parse_poly(p, &XY)?.into_poly(), parse_poly(q, &XY)?.into_poly())
    }

    pub fn p(&self) -> &Poly<Q> {
        &self.p
    }

    pub fn q(&self) -> &Poly<Q> {
        &self.q
    }

    pub fn deg_p(&self) -> u32 {
        self.p.total_degree()
    }

    pub fn deg_q(&self) -> u32 {
        self.q.total_degree()
    }

    /// `F - v0`.
    pub fn translated(&self, u0: &Q, v0: &Q) -> Result<Self> {
        Self::new(
            self.p.sub(&Poly::constant(2, u0.clone())),
            self.q.sub(&Poly::constant(2, v0.clone())),
        )
    }

    /// `det DF`.
    pub fn jacobian(&self) -> Poly<Q> {
        let px = self.p.derivative(0);
        let py = self.p.derivative(1);
        let qx = self.q.derivative(0);
        let qy = self.q.derivative(1);
        px.mul(&qy).sub(&py.mul(&qx))
    }

    /// True when `P` and `Q` are linearly dependent over Q.
    pub fn is_degenerate(&self) -> bool {
        if self.p.is_zero() || self.q.is_zero() {
            return true;
        }
        let (m, c) = self.p.leading().expect("nonzero");
        let r = self.q.coeff(m) / c;
        self.q.sub(&self.p.scale(&r)).is_zero()
    }

    /// The member that is a nonzero constant, when there is one. It has no
    /// points in the plane.
    pub fn constant_member(&self) -> Option<Lambda> {
        if self.is_degenerate() {
            return None;
        }
        let strip = |p: &Poly<Q>| p.sub(&Poly::constant(2, p.constant_term()));
        let (p, q) = (strip(&self.p), strip(&self.q));
        if q.is_zero() {
            return Some(Lambda::infinity());
        }
        if p.is_zero() {
            return Some(Lambda::affine(Q::zero()));
        }
        let (m, c) = p.leading().expect("nonzero");
        let k = q.coeff(m) / c;
        // q = k p  =>  k P - Q is constant
        if k.is_zero() || !q.sub(&p.scale(&k)).is_zero() {
            return None;
        }
        Some(Lambda::affine(-k.recip()))
    }

    pub fn member(&self, l: &Lambda) -> Poly<Q> {
        self.p.scale(&l.a).add(&self.q.scale(&l.b))
    }

    pub fn display(&self) -> (String, String) {
        (fmt_poly(&self.p, &XY), fmt_poly(&self.q, &XY))
    }
}

/// `aP + bQ`.
pub fn pencil_member(f: &PencilMap, a: &Q, b: &Q) -> Result<Poly<Q>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidProjectivePoint);
    }
    Ok(f.p.scale(a).add(&f.q.scale(b)))
}
