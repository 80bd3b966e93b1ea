//! Restrictions of `g`, `p`, `q` to a new boundary component, and the
//! images of dicritical components.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::Serialize;

use super::chart::{on_line, ord0, Chart, KPoly};
use super::{DivisorComponent, Origin, Over};
use crate::error::Result;
use crate::exact::algebraic::AlgebraicNumber;
use crate::exact::bivariate::{irreducible_factors, poly_cmp};
use crate::exact::field::Field;
use crate::exact::multipoly::{fmt_poly, fmt_upoly, normalize};
use crate::exact::numfield::{NfElem, NumberField};
use crate::exact::poly::{Monomial, Poly};
use crate::exact::{gcd, UPoly, Q};
use crate::pencil::Lambda;

/// Value of `g` on a constant component: a rational member of the pencil,
/// or an orbit of conjugate members `P + t Q` with `t` a root of `min_poly`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaValue {
    pub key: String,
    pub lambda: Option<Lambda>,
    pub min_poly: Option<String>,
    pub orbit: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GRestriction {
    NonConstant,
    Constant { lambda: LambdaValue },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Value {
    Zero,
    Infinity,
    Finite { value: AlgebraicNumber },
    NonConstant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TypeLabel {
    #[serde(rename = "not_horizontal")]
    NotHorizontal,
    I,
    IIa,
    IIb,
    IIc,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ImageCurve {
    pub components: Vec<String>,
    #[serde(skip)]
    pub polys: Vec<Poly<Q>>,
    /// Degrees of `p` and `q` restricted to the component (0 if constant).
    pub degrees: [u32; 2],
    pub through_origin_line: bool,
}

/// `(num, den)` with common roots removed.
fn reduced(n: &UPoly<NfElem>, d: &UPoly<NfElem>) -> (UPoly<NfElem>, UPoly<NfElem>) {
    if n.is_zero() {
        return (UPoly::zero(), UPoly::one());
    }
    if d.is_zero() {
        return (UPoly::one(), UPoly::zero());
    }
    let g = UPoly::gcd(n, d);
    (n.exact_div(&g).expect("gcd"), d.exact_div(&g).expect("gcd"))
}

fn algebraic(field: Option<&Arc<NumberField>>, e: &NfElem) -> AlgebraicNumber {
    match (e.to_q(), field) {
        (Some(c), _) => AlgebraicNumber::rational(c),
        (None, Some(k)) => AlgebraicNumber::from_nf(k, e),
        (None, None) => unreachable!("irrational element without a field"),
    }
}

fn value(field: Option<&Arc<NumberField>>, num: &KPoly, den: &KPoly) -> (Value, Option<(UPoly<NfElem>, UPoly<NfElem>)>) {
    let (on, od) = (ord0(num), ord0(den));
    if on > od {
        return (Value::Zero, Some((UPoly::zero(), UPoly::one())));
    }
    if on < od {
        return (Value::Infinity, None);
    }
    let (n, d) = reduced(&on_line(num), &on_line(den));
    if n.deg() == 0 && d.deg() == 0 {
        let c = n.coeff(0).div(&d.coeff(0));
        let v = if c.is_zero() { Value::Zero } else { Value::Finite { value: algebraic(field, &c) } };
        return (v, Some((n, d)));
    }
    (Value::NonConstant, Some((n, d)))
}

fn lambda_value(field: Option<&Arc<NumberField>>, alpha: &NfElem, beta: &NfElem) -> LambdaValue {
    // g = (alpha : beta) lies on the member beta P - alpha Q
    if beta.is_zero() {
        let l = Lambda::infinity();
        return LambdaValue {
            key: format!("{l}"),
            lambda: Some(l),
            min_poly: None,
            orbit: 1,
        };
    }
    let t = alpha.neg().div(beta);
    match t.to_q() {
        Some(t) => {
            let l = Lambda::affine(t);
            LambdaValue {
                key: format!("{l}"),
                lambda: Some(l),
                min_poly: None,
                orbit: 1,
            }
        }
        None => {
            let mp = algebraic(field, &t).min_poly().clone();
            let s = fmt_upoly(&mp, "t");
            LambdaValue {
                key: format!("P + t*Q, {s}"),
                lambda: None,
                min_poly: Some(s),
                orbit: mp.deg(),
            }
        }
    }
}

/// Rational polynomial vanishing on all conjugates of a curve over `k`.
fn norm_to_q(field: Option<&Arc<NumberField>>, p: &KPoly) -> Poly<Q> {
    let Some(k) = field else {
        return p.map_coeffs(|c| c.to_q().expect("rational"));
    };
    let mut lifted: Poly<Q> = Poly::zero(3);
    for (m, c) in p.terms() {
        for (j, r) in c.rep().coeffs().iter().enumerate() {
            let e = m.exps();
            lifted.add_term(Monomial::from_slice(&[j as u32, e[0], e[1]]), r.clone());
        }
    }
    if !lifted.involves(0) {
        return p.map_coeffs(|c| c.to_q().expect("rational"));
    }
    let mp = Poly::from_upoly(k.min_poly(), 0, 3);
    let r = gcd::resultant(&mp, &lifted, 0).expect("nonzero");
    r.remap(&[0, 0, 1], 2)
}

fn restriction_degree(r: &Option<(UPoly<NfElem>, UPoly<NfElem>)>) -> u32 {
    match r {
        Some((n, d)) if n.deg() > 0 || d.deg() > 0 => n.deg().max(d.deg()) as u32,
        _ => 0,
    }
}

fn image_curve(
    field: Option<&Arc<NumberField>>,
    p: &(UPoly<NfElem>, UPoly<NfElem>),
    q: &(UPoly<NfElem>, UPoly<NfElem>),
) -> Result<ImageCurve> {
    let degrees = [restriction_degree(&Some(p.clone())), restriction_degree(&Some(q.clone()))];
    let u: KPoly = Poly::var(2, 0);
    let v: KPoly = Poly::var(2, 1);
    let const_of = |r: &(UPoly<NfElem>, UPoly<NfElem>)| r.0.coeff(0).div(&r.1.coeff(0));
    let eq: KPoly = if degrees[0] == 0 {
        u.sub(&Poly::constant(2, const_of(p)))
    } else if degrees[1] == 0 {
        v.sub(&Poly::constant(2, const_of(q)))
    } else {
        // Res_t(pn(t) - u pd(t), qn(t) - v qd(t)) in variables (t, u, v)
        let lift = |r: &UPoly<NfElem>, var: Option<usize>| {
            let base = Poly::from_upoly(r, 0, 3);
            match var {
                Some(i) => base.mul(&Poly::var(3, i)),
                None => base,
            }
        };
        let a = lift(&p.0, None).sub(&lift(&p.1, Some(1)));
        let b = lift(&q.0, None).sub(&lift(&q.1, Some(2)));
        let r = gcd::resultant(&a, &b, 0)?;
        r.remap(&[0, 0, 1], 2)
    };
    let rat = norm_to_q(field, &eq);
    let sq = gcd::squarefree_part(&rat)?;
    let mut polys: Vec<Poly<Q>> = irreducible_factors(&sq).iter().map(normalize).collect();
    polys.sort_by(poly_cmp);
    polys.dedup();
    let through_origin_line = polys.len() == 1 && polys[0].total_degree() == 1 && polys[0].constant_term().is_zero();
    Ok(ImageCurve {
        components: polys.iter().map(|p| fmt_poly(p, &["u", "v"])).collect(),
        polys,
        degrees,
        through_origin_line,
    })
}

/// Classify the component `{w0 = 0}` of `chart`.
pub fn classify(id: usize, chart: &Chart, origin: Origin, phase: u8) -> Result<DivisorComponent> {
    let field = chart.field.as_ref();
    let (a0, b0) = reduced(&on_line(&chart.a), &on_line(&chart.b));
    let g_restriction = if a0.deg() == 0 && b0.deg() == 0 {
        GRestriction::Constant {
            lambda: lambda_value(field, &a0.coeff(0), &b0.coeff(0)),
        }
    } else {
        GRestriction::NonConstant
    };
    let (p_value, pr) = value(field, &chart.pn, &chart.pd);
    let (q_value, qr) = value(field, &chart.qn, &chart.qd);
    let type_label = match (&g_restriction, chart.over, &p_value, &q_value) {
        (GRestriction::Constant { .. }, ..) => TypeLabel::NotHorizontal,
        (_, Over::BasePoint(_), ..) => TypeLabel::I,
        (_, _, Value::Infinity, Value::Infinity) => TypeLabel::IIa,
        (_, _, Value::Zero, Value::Zero) => TypeLabel::IIb,
        _ => TypeLabel::IIc,
    };
    // (p, q) non-constant with image meeting the affine plane
    let dicritical = chart.over == Over::Infinity
        && (p_value == Value::NonConstant || q_value == Value::NonConstant)
        && p_value != Value::Infinity
        && q_value != Value::Infinity;
    let image = match (dicritical, &pr, &qr) {
        (true, Some(p), Some(q)) => Some(image_curve(field, p, q)?),
        _ => None,
    };
    Ok(DivisorComponent {
        id,
        origin,
        over: chart.over,
        g_restriction,
        p_value,
        q_value,
        type_label,
        dicritical,
        copies: chart.copies,
        phase,
        image,
    })
}
