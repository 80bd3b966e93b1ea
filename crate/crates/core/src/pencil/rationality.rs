//! Rationality of an irreducible plane curve from its Newton polygon.

use alloc::format;
use alloc::string::String;

use serde::Serialize;

use super::gao::absolute_factor_count;
use crate::error::{Error, Result};
use crate::exact::newton::{edge_polynomial, LatticePolygon};
use crate::exact::nf_factor::{root_orbits, DEFAULT_DEGREE_CAP};
use crate::exact::numfield::{poly_to_nf, upoly_to_nf, NfElem};
use crate::exact::field::Field;
use crate::exact::poly::Poly;
use crate::exact::{factor, gcd, UPoly, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Rationality {
    Rational { certificate: String },
    NotRational { genus: u32 },
    Unknown { reason: String },
}

impl Rationality {
    pub fn genus(&self) -> Option<u32> {
        match self {
            Rationality::Rational { .. } => Some(0),
            Rationality::NotRational { genus } => Some(*genus),
            Rationality::Unknown { .. } => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Rationality::Rational { .. })
    }
}

fn rational(c: &str) -> Rationality {
    Rationality::Rational {
        certificate: c.into(),
    }
}

/// Verdict for an absolutely irreducible curve `f = 0`; a multiple member
/// is judged by its reduced support.
pub fn rationality_verdict(f: &Poly<Q>) -> Result<Rationality> {
    if absolute_factor_count(f)? != 1 {
        return Err(Error::NotIrreducible);
    }
    let f = gcd::squarefree_part(f)?;
    if f.degree_in(1) <= 1 {
        return Ok(rational("linear in y"));
    }
    if f.degree_in(0) <= 1 {
        return Ok(rational("linear in x"));
    }
    if f.total_degree() <= 2 {
        return Ok(rational("conic"));
    }
    let poly = LatticePolygon::of_poly(&f)?;
    if !poly.is_two_dimensional() {
        // f is a binomial in one monomial x^p y^q; its irreducible zero set
        // is a torus translate parametrized by monomials.
        return Ok(rational("binomial support"));
    }
    for (a, b) in poly.edges() {
        if !edge_polynomial(&f, a, b).is_squarefree() {
            return Ok(Rationality::Unknown {
                reason: format!("degenerate edge {a:?}-{b:?}"),
            });
        }
    }
    match singular_in_torus(&f) {
        Ok(false) => {}
        Ok(true) => {
            return Ok(Rationality::Unknown {
                reason: "singular point in the torus".into(),
            })
        }
        Err(e) if e.is_cap() => {
            return Ok(Rationality::Unknown {
                reason: format!("torus smoothness undecided: {e}"),
            })
        }
        Err(e) => return Err(e),
    }
    let g = poly.interior_points() as u32;
    Ok(if g == 0 {
        rational("nondegenerate, no interior lattice points")
    } else {
        Rationality::NotRational { genus: g }
    })
}

/// Whether `f = f_x = f_y = 0` has a solution with `x y != 0`.
fn singular_in_torus(f: &Poly<Q>) -> Result<bool> {
    let fx = f.derivative(0);
    let fy = f.derivative(1);
    let r1 = gcd::resultant(f, &fx, 1)?.to_upoly(0).expect("eliminated");
    let r2 = gcd::resultant(f, &fy, 1)?.to_upoly(0).expect("eliminated");
    let mut g = UPoly::gcd(&r1, &r2);
    if g.is_zero() {
        return Err(Error::Internal("f shares a factor with a derivative".into()));
    }
    while g.deg() > 0 && g.coeff(0).is_zero() {
        g = g.exact_div(&UPoly::x()).expect("x divides");
    }
    if g.deg() == 0 {
        return Ok(false);
    }
    for h in factor::irreducible_factors(&g) {
        let orbits = root_orbits(None, &upoly_to_nf(&h), DEFAULT_DEGREE_CAP)?;
        for (ext, _, _) in orbits {
            let at = |p: &Poly<Q>| -> UPoly<NfElem> {
                let pk = poly_to_nf(p).eval_var(0, &ext.root);
                pk.to_upoly(1).expect("univariate in y")
            };
            let mut d = UPoly::gcd(&UPoly::gcd(&at(f), &at(&fx)), &at(&fy));
            while d.deg() > 0 && d.coeff(0).is_zero() {
                d = d.exact_div(&UPoly::x()).expect("y divides");
            }
            if d.deg() > 0 {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
