//! Common zeros of two bivariate rational polynomials, one entry per
//! Galois orbit.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::algebraic::AlgebraicNumber;
use super::field::Field;
use super::gcd;
use super::multipoly::fmt_upoly;
use super::nf_factor::{root_orbits, Extension};
use super::numfield::{poly_to_nf, NfElem, NumberField};
use super::poly::Poly;
use super::rational::{fmt_q, Q};
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ZeroOrbit {
    pub ext: Extension,
    /// One representative, with coordinates in `ext.field`.
    pub point: [NfElem; 2],
    pub orbit: usize,
}

impl ZeroOrbit {
    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.ext.field.as_ref()
    }

    pub fn coords(&self) -> [AlgebraicNumber; 2] {
        let num = |e: &NfElem| match (e.to_q(), self.field()) {
            (Some(r), _) => AlgebraicNumber::rational(r),
            (None, Some(k)) => AlgebraicNumber::from_nf(k, e),
            (None, None) => unreachable!("irrational element without a field"),
        };
        [num(&self.point[0]), num(&self.point[1])]
    }
}

/// Ordering key: minimal polynomials and box midpoints of the coordinates.
pub fn point_key(c: &[AlgebraicNumber; 2]) -> String {
    let part = |a: &AlgebraicNumber| {
        let (re, im) = a.isolating_box().center();
        format!("{}@{},{}", fmt_upoly(a.min_poly(), "t"), fmt_q(&re), fmt_q(&im))
    };
    format!("{}|{}", part(&c[0]), part(&c[1]))
}

/// All common zeros of `p` and `q` in C^2, sorted by [`point_key`].
/// Fails with `InfiniteBaseLocus` when they share a factor.
pub fn common_zeros(p: &Poly<Q>, q: &Poly<Q>, cap: usize) -> Result<Vec<ZeroOrbit>> {
    if p.is_zero() || q.is_zero() || !gcd::gcd(p, q).is_constant() {
        return Err(Error::InfiniteBaseLocus);
    }
    let (p, q) = (poly_to_nf(p), poly_to_nf(q));
    let r = gcd::resultant(&p, &q, 1)?.to_upoly(0).expect("eliminated");
    if r.is_zero() {
        return Err(Error::InfiniteBaseLocus);
    }
    let mut found = Vec::new();
    if r.deg() == 0 {
        return Ok(found);
    }
    for (e1, d1, _) in root_orbits(None, &r, cap)? {
        let xi = e1.root.clone();
        let py = p.eval_var(0, &xi).to_upoly(1).expect("univariate");
        let qy = q.eval_var(0, &xi).to_upoly(1).expect("univariate");
        let g = UPoly::gcd(&py, &qy);
        if g.deg() == 0 {
            continue;
        }
        for (e2, d2, _) in root_orbits(e1.field.as_ref(), &g, cap)? {
            let point = [e2.embed(&xi), e2.root.clone()];
            found.push(ZeroOrbit {
                ext: e2,
                point,
                orbit: d1 * d2,
            });
        }
    }
    found.sort_by_cached_key(|z| point_key(&z.coords()));
    Ok(found)
}
