//! Local charts of the blown-up plane. In every chart the boundary line
//! being examined is `{w0 = 0}` with `w1` as coordinate along it.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::exact::field::Field;
use crate::exact::nf_factor::Extension;
use crate::exact::numfield::{NfElem, NumberField};
use crate::exact::poly::{Monomial, Poly};
use crate::exact::UPoly;

pub type KPoly = Poly<NfElem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Over {
    Infinity,
    BasePoint(usize),
}

/// Exceptional (or infinity) factor divided out of the pencil sections,
/// with its total transform in the current chart.
#[derive(Clone, Debug)]
pub struct LedgerEntry {
    pub comp: usize,
    pub total: KPoly,
    pub ka: u32,
    pub kb: u32,
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub id: String,
    pub generation: usize,
    pub field: Option<Arc<NumberField>>,
    /// Number of Galois-conjugate copies of this chart's geometry.
    pub copies: usize,
    pub over: Over,
    /// Pencil sections with common boundary factors removed.
    pub a: KPoly,
    pub b: KPoly,
    /// `P = pn / pd`, `Q = qn / qd` in local coordinates.
    pub pn: KPoly,
    pub pd: KPoly,
    pub qn: KPoly,
    pub qd: KPoly,
    /// Boundary components visible in the chart and their local equations.
    pub comps: Vec<(usize, KPoly)>,
    pub ledger: Vec<LedgerEntry>,
    /// Index of the projective chart this one descends from.
    pub root: usize,
    /// Root-chart coordinates as functions of the local ones.
    pub images: [KPoly; 2],
}

pub fn ord0(p: &KPoly) -> u32 {
    if p.is_zero() {
        u32::MAX
    } else {
        p.order_in(0)
    }
}

pub fn div0(p: &KPoly, k: u32) -> KPoly {
    if k == 0 {
        p.clone()
    } else {
        p.div_monomial(&Monomial::from_slice(&[k, 0]))
    }
}

/// Divide both polynomials by the largest common power of `w0`.
pub fn strip_common(a: &KPoly, b: &KPoly) -> (KPoly, KPoly, u32) {
    let k = ord0(a).min(ord0(b));
    (div0(a, k), div0(b, k), k)
}

/// Restriction of a polynomial to the line `w0 = 0`.
pub fn on_line(p: &KPoly) -> UPoly<NfElem> {
    p.eval_var(0, &NfElem::zero()).to_upoly(1).expect("univariate on the line")
}

pub fn at_origin(p: &KPoly) -> NfElem {
    p.eval(&[NfElem::zero(), NfElem::zero()])
}

pub fn embed_poly(p: &KPoly, ext: &Extension) -> KPoly {
    p.map_coeffs(|c| ext.embed(c))
}

fn lin(c: &NfElem, coef: KPoly) -> KPoly {
    Poly::constant(2, c.clone()).add(&coef)
}

/// Substitutions for the two charts of the blow-up at `c`:
/// `(u, v) = (c0 + s, c1 + s t)` and `(u, v) = (c0 + s w, c1 + s)`.
pub fn blowup_substitutions(c: &[NfElem; 2]) -> [[KPoly; 2]; 2] {
    let s: KPoly = Poly::var(2, 0);
    let t: KPoly = Poly::var(2, 1);
    let st = s.mul(&t);
    [
        [lin(&c[0], s.clone()), lin(&c[1], st.clone())],
        [lin(&c[0], st), lin(&c[1], s)],
    ]
}

impl Chart {
    pub fn embed(&self, ext: &Extension, copies: usize) -> Chart {
        let e = |p: &KPoly| embed_poly(p, ext);
        Chart {
            id: self.id.clone(),
            generation: self.generation,
            field: ext.field.clone(),
            copies: self.copies * copies,
            over: self.over,
            a: e(&self.a),
            b: e(&self.b),
            pn: e(&self.pn),
            pd: e(&self.pd),
            qn: e(&self.qn),
            qd: e(&self.qd),
            comps: self.comps.iter().map(|(i, p)| (*i, e(p))).collect(),
            ledger: self
                .ledger
                .iter()
                .map(|l| LedgerEntry {
                    comp: l.comp,
                    total: e(&l.total),
                    ka: l.ka,
                    kb: l.kb,
                })
                .collect(),
            root: self.root,
            images: [e(&self.images[0]), e(&self.images[1])],
        }
    }

    /// Pull back along `sub` and remove the new exceptional factor `w0^k`.
    /// Returns the chart and the pencil multiplicity `k` at the center.
    pub fn pull_back(&self, sub: &[KPoly; 2], id: String, comp: usize) -> (Chart, u32) {
        let pull = |p: &KPoly| p.compose(sub, 2);
        let (a, b, k) = strip_common(&pull(&self.a), &pull(&self.b));
        let (pn, pd, _) = strip_common(&pull(&self.pn), &pull(&self.pd));
        let (qn, qd, _) = strip_common(&pull(&self.qn), &pull(&self.qd));
        let mut comps: Vec<(usize, KPoly)> = self
            .comps
            .iter()
            .filter_map(|(i, e)| {
                let p = pull(e);
                let p = div0(&p, ord0(&p));
                (!p.is_constant()).then_some((*i, p))
            })
            .collect();
        let w0: KPoly = Poly::var(2, 0);
        comps.push((comp, w0.clone()));
        let mut ledger: Vec<LedgerEntry> = self
            .ledger
            .iter()
            .map(|l| LedgerEntry {
                comp: l.comp,
                total: pull(&l.total),
                ka: l.ka,
                kb: l.kb,
            })
            .collect();
        ledger.push(LedgerEntry {
            comp,
            total: w0,
            ka: k,
            kb: k,
        });
        let chart = Chart {
            id,
            generation: self.generation + 1,
            field: self.field.clone(),
            copies: self.copies,
            over: self.over,
            a,
            b,
            pn,
            pd,
            qn,
            qd,
            comps,
            ledger,
            root: self.root,
            images: [pull(&self.images[0]), pull(&self.images[1])],
        };
        (chart, k)
    }
}
