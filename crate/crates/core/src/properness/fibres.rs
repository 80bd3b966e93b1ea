//! Finite fibres. A curve inside a fibre lies in `{det DF = 0}`, and `P`
//! is constant on each component of an irreducible `h` exactly when `h`
//! divides `h_y P_x - h_x P_y`. Conjugate components carry conjugate
//! values, so testing the rational factors of the Jacobian suffices.

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::Result;
use crate::exact::algebraic::AlgebraicNumber;
use crate::exact::bivariate::irreducible_factors;
use crate::exact::field::Field;
use crate::exact::multipoly::fmt_poly;
use crate::exact::nf_factor::root_orbits;
use crate::exact::numfield::{poly_to_nf, NfElem};
use crate::exact::rational::q;
use crate::exact::{Poly, Q};
use crate::pencil::{PencilMap, XY};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FibreCertificate {
    /// No factor of the Jacobian is contracted by `F`.
    NoContractedCurve { jacobian_factors: Vec<String> },
    /// `F` maps the curve to the single value.
    ContractedCurve { curve: String, value: [AlgebraicNumber; 2] },
    /// `det DF = 0`: `P` and `Q` are algebraically dependent and every
    /// fibre is a curve, for instance the one through the origin.
    DependentCoordinates { value: [AlgebraicNumber; 2] },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiniteFibres {
    pub finite: bool,
    pub certificate: FibreCertificate,
}

fn tangent_derivative(h: &Poly<Q>, g: &Poly<Q>) -> Poly<Q> {
    h.derivative(1).mul(&g.derivative(0)).sub(&h.derivative(0).mul(&g.derivative(1)))
}

fn contracted(h: &Poly<Q>, f: &PencilMap) -> bool {
    h.divides(&tangent_derivative(h, f.p())) && h.divides(&tangent_derivative(h, f.q()))
}

/// Value of `F` at some point of the curve `h = 0`.
fn value_on(h: &Poly<Q>, f: &PencilMap) -> Result<[AlgebraicNumber; 2]> {
    let (x0, y) = if h.involves(1) {
        let lc = h.lc_in(1);
        let x0 = (0i64..)
            .flat_map(|k| [k, -k])
            .map(q)
            .find(|c| !lc.eval(&[c.clone(), q(0)]).is_zero())
            .expect("nonzero leading coefficient");
        let hy = h.eval_var(0, &x0).to_upoly(1).expect("univariate");
        (NfElem::from_q(&x0), hy)
    } else {
        (NfElem::zero(), h.to_upoly(0).expect("univariate"))
    };
    let (ext, _, _) = root_orbits(None, &crate::exact::numfield::upoly_to_nf(&y), usize::MAX)?
        .into_iter()
        .next()
        .expect("non-constant");
    let pt = if h.involves(1) {
        [x0, ext.root.clone()]
    } else {
        [ext.root.clone(), NfElem::zero()]
    };
    let num = |g: &Poly<Q>| {
        let e = poly_to_nf(g).eval(&pt);
        match (e.to_q(), ext.field.as_ref()) {
            (Some(r), _) => AlgebraicNumber::rational(r),
            (None, Some(k)) => AlgebraicNumber::from_nf(k, &e),
            (None, None) => unreachable!("irrational value without a field"),
        }
    };
    Ok([num(f.p()), num(f.q())])
}

pub fn finite_fibres_check(f: &PencilMap) -> Result<FiniteFibres> {
    let j = f.jacobian();
    if j.is_zero() {
        let o = [q(0), q(0)];
        return Ok(FiniteFibres {
            finite: false,
            certificate: FibreCertificate::DependentCoordinates {
                value: [AlgebraicNumber::rational(f.p().eval(&o)), AlgebraicNumber::rational(f.q().eval(&o))],
            },
        });
    }
    let factors = irreducible_factors(&j);
    for h in &factors {
        if contracted(h, f) {
            return Ok(FiniteFibres {
                finite: false,
                certificate: FibreCertificate::ContractedCurve {
                    curve: fmt_poly(h, &XY),
                    value: value_on(h, f)?,
                },
            });
        }
    }
    Ok(FiniteFibres {
        finite: true,
        certificate: FibreCertificate::NoContractedCurve {
            jacobian_factors: factors.iter().map(|h| fmt_poly(h, &XY)).collect(),
        },
    })
}
