//! Resolution of the indeterminacy of `G = (P : Q)` on the projective
//! plane by point blow-ups, followed by the blow-ups that make the
//! extensions `p`, `q` regular along the boundary over infinity.
//!
//! Conjugate centers are handled once: each chart carries the number of
//! Galois-conjugate copies it stands for, and counts are weighted by it.

mod chart;
mod classify;
mod dot;
mod suzuki;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::algebraic::AlgebraicNumber;
use crate::exact::field::Field;
use crate::exact::nf_factor::{root_orbits, Extension, DEFAULT_DEGREE_CAP};
use crate::exact::solve::{common_zeros, point_key};
use crate::exact::numfield::{poly_to_nf, NfElem, NumberField};
use crate::exact::poly::{Monomial, Poly};
use crate::exact::{gcd, UPoly, Q};
use crate::pencil::PencilMap;

use chart::{at_origin, blowup_substitutions, on_line, Chart, KPoly, LedgerEntry};
pub use chart::Over;
pub use classify::{GRestriction, ImageCurve, LambdaValue, TypeLabel, Value};
pub use dot::dual_graph_dot;
pub use suzuki::{euler_bookkeeping, SuzukiCheck, SuzukiTerm};

pub const DEFAULT_BLOWUP_BUDGET: usize = 64;

/// A point in a named chart with coordinates in one number field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraicPoint {
    pub chart: String,
    pub coords: [AlgebraicNumber; 2],
    /// Degree of the field holding both coordinates.
    pub field_degree: usize,
}

impl AlgebraicPoint {
    pub fn from_nf(chart: &str, field: Option<&Arc<NumberField>>, c: &[NfElem; 2]) -> Self {
        let num = |e: &NfElem| match (field, e.to_q()) {
            (_, Some(r)) => AlgebraicNumber::rational(r),
            (Some(k), None) => AlgebraicNumber::from_nf(k, e),
            (None, None) => unreachable!("irrational element without a field"),
        };
        AlgebraicPoint {
            chart: chart.into(),
            coords: [num(&c[0]), num(&c[1])],
            field_degree: field.map_or(1, |k| k.degree()),
        }
    }

    fn key(&self) -> String {
        point_key(&self.coords)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    LineAtInfinity,
    ExceptionalOver { center: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DivisorComponent {
    pub id: usize,
    pub origin: Origin,
    #[serde(serialize_with = "ser_over")]
    pub over: Over,
    pub g_restriction: GRestriction,
    pub p_value: Value,
    pub q_value: Value,
    pub type_label: TypeLabel,
    pub dicritical: bool,
    /// Number of conjugate components this record stands for.
    pub copies: usize,
    /// 1 for blow-ups resolving `G`, 2 for those making `(p, q)` regular.
    pub phase: u8,
    /// Closure of `f(l)` in the affine plane for dicritical components.
    pub image: Option<ImageCurve>,
}

impl DivisorComponent {
    pub fn is_horizontal(&self) -> bool {
        self.g_restriction == GRestriction::NonConstant
    }
}

fn ser_over<S: serde::Serializer>(o: &Over, s: S) -> core::result::Result<S::Ok, S::Error> {
    match o {
        Over::Infinity => s.serialize_str("infinity"),
        Over::BasePoint(i) => s.collect_str(&format_args!("base_point_{i}")),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Center {
    pub index: usize,
    pub chart: String,
    pub generation: usize,
    pub phase: u8,
    pub point: AlgebraicPoint,
    pub copies: usize,
    pub exceptional: usize,
    /// `min(mult_c A, mult_c B)` of the pencil sections at the center.
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasePoint {
    pub point: AlgebraicPoint,
    pub copies: usize,
    /// Horizontal components over one point of the orbit.
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaCount {
    pub lambda: LambdaValue,
    /// Constant components with this value of `g` (per conjugate value).
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolutionTree {
    pub base_points: Vec<BasePoint>,
    pub base_points_at_infinity: Vec<(AlgebraicPoint, usize)>,
    pub centers: Vec<Center>,
    pub components: Vec<DivisorComponent>,
    pub edges: Vec<(usize, usize)>,
    pub h_infinity: usize,
    pub h_b_total: usize,
    pub h_g: usize,
    /// Components of the boundary of the resolution of `G` (phase 1).
    pub m: usize,
    pub m_lambda: Vec<LambdaCount>,
    /// Including the components added to make `p`, `q` regular.
    pub m_total: usize,
    pub blowups: usize,
}

impl ResolutionTree {
    pub fn dicritical(&self) -> impl Iterator<Item = &DivisorComponent> {
        self.components.iter().filter(|c| c.dicritical)
    }

    /// Irreducible rational components of the union of the images of the
    /// dicritical components, normalized and sorted.
    pub fn nonproper_components(&self) -> Vec<Poly<Q>> {
        let mut out: Vec<Poly<Q>> = Vec::new();
        for c in self.dicritical() {
            if let Some(img) = &c.image {
                for p in &img.polys {
                    if !out.contains(p) {
                        out.push(p.clone());
                    }
                }
            }
        }
        out.sort_by(crate::exact::bivariate::poly_cmp);
        out
    }

    pub fn has_type(&self, t: TypeLabel) -> bool {
        self.components.iter().any(|c| c.type_label == t)
    }

    pub fn m_lambda_total(&self) -> usize {
        self.m_lambda.iter().map(|l| l.m * l.lambda.orbit).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterOrder {
    /// By phase, generation, chart id, minimal polynomial, box midpoint.
    Canonical,
    /// Most recently found center first.
    DepthFirst,
}

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub budget: usize,
    pub cap: usize,
    pub order: CenterOrder,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            budget: DEFAULT_BLOWUP_BUDGET,
            cap: DEFAULT_DEGREE_CAP,
            order: CenterOrder::Canonical,
        }
    }
}

struct Pending {
    chart: usize,
    ext: Extension,
    point: [NfElem; 2],
    orbit: usize,
    phase: u8,
    over: Over,
    desc: AlgebraicPoint,
}

type QueueKey = (u8, usize, String, String, usize);

struct Engine<'a> {
    opts: &'a ResolveOptions,
    charts: Vec<Chart>,
    root_sections: Vec<[KPoly; 2]>,
    components: Vec<DivisorComponent>,
    edges: BTreeSet<(usize, usize)>,
    centers: Vec<Center>,
    base_points: Vec<BasePoint>,
    at_infinity: Vec<(AlgebraicPoint, usize)>,
    queue: BTreeMap<QueueKey, Pending>,
    seq: usize,
}

/// `P^h` restricted to a chart of the projective plane: `which = 1` is
/// `x = 1` with coordinates `(z, y)`, `which = 2` is `y = 1` with `(z, x)`.
fn dehomogenize(p: &Poly<Q>, deg: u32, which: usize) -> Poly<Q> {
    let mut out = Poly::zero(2);
    for (m, c) in p.terms() {
        let (i, j) = (m.exps()[0], m.exps()[1]);
        let e = deg - i - j;
        let k = if which == 1 { j } else { i };
        out.add_term(Monomial::from_slice(&[e, k]), c.clone());
    }
    out
}

fn zpow(k: u32) -> KPoly {
    Poly::term(2, Monomial::from_slice(&[k, 0]), NfElem::one())
}

fn trivial_ext(field: Option<&Arc<NumberField>>) -> Extension {
    Extension {
        field: field.cloned(),
        old_gen: field.map(|k| k.gen()),
        root: NfElem::zero(),
    }
}

impl<'a> Engine<'a> {
    fn new(f: &PencilMap, opts: &'a ResolveOptions) -> Result<Self> {
        if f.is_degenerate() {
            return Err(Error::DegeneratePencil);
        }
        if !gcd::gcd(f.p(), f.q()).is_constant() {
            return Err(Error::InfiniteBaseLocus);
        }
        let (dp, dq) = (f.deg_p(), f.deg_q());
        let d = dp.max(dq);
        let nf = |p: &Poly<Q>| poly_to_nf(p);
        let one: KPoly = Poly::one(2);
        let id: [KPoly; 2] = [Poly::var(2, 0), Poly::var(2, 1)];
        let affine = Chart {
            id: "A".into(),
            generation: 0,
            field: None,
            copies: 1,
            over: Over::BasePoint(usize::MAX),
            a: nf(f.p()),
            b: nf(f.q()),
            pn: nf(f.p()),
            pd: one.clone(),
            qn: nf(f.q()),
            qd: one,
            comps: Vec::new(),
            ledger: Vec::new(),
            root: 0,
            images: id.clone(),
        };
        let mut charts = vec![affine];
        for (which, name) in [(1, "X"), (2, "Y")] {
            let ph = nf(&dehomogenize(f.p(), dp, which));
            let qh = nf(&dehomogenize(f.q(), dq, which));
            charts.push(Chart {
                id: name.into(),
                generation: 0,
                field: None,
                copies: 1,
                over: Over::Infinity,
                a: ph.mul(&zpow(d - dp)),
                b: qh.mul(&zpow(d - dq)),
                pn: ph,
                pd: zpow(dp),
                qn: qh,
                qd: zpow(dq),
                comps: vec![(0, Poly::var(2, 0))],
                ledger: Vec::new(),
                root: which,
                images: id.clone(),
            });
        }
        let root_sections = charts.iter().map(|c| [c.a.clone(), c.b.clone()]).collect();
        Ok(Engine {
            opts,
            charts,
            root_sections,
            components: Vec::new(),
            edges: BTreeSet::new(),
            centers: Vec::new(),
            base_points: Vec::new(),
            at_infinity: Vec::new(),
            queue: BTreeMap::new(),
            seq: 0,
        })
    }

    fn push(&mut self, p: Pending) {
        let gen = self.charts[p.chart].generation;
        let key = match self.opts.order {
            CenterOrder::Canonical => (p.phase, gen, self.charts[p.chart].id.clone(), p.desc.key(), self.seq),
            CenterOrder::DepthFirst => (p.phase, usize::MAX - self.seq, String::new(), String::new(), 0),
        };
        self.seq += 1;
        self.queue.insert(key, p);
    }

    fn affine_base_points(&mut self, f: &PencilMap) -> Result<()> {
        for z in common_zeros(f.p(), f.q(), self.opts.cap)? {
            let desc = AlgebraicPoint::from_nf("A", z.field(), &z.point);
            let idx = self.base_points.len();
            self.base_points.push(BasePoint {
                point: desc.clone(),
                copies: z.orbit,
                h: 0,
            });
            self.push(Pending {
                chart: 0,
                ext: z.ext,
                point: z.point,
                orbit: z.orbit,
                phase: 1,
                over: Over::BasePoint(idx),
                desc,
            });
        }
        Ok(())
    }

    /// Indeterminacy points of `G` (phase 1) and, over infinity, of `p` or
    /// `q` (phase 2) on the line `{w0 = 0}` of a chart, or only at its
    /// origin.
    fn scan(&mut self, idx: usize, full: bool) -> Result<Vec<AlgebraicPoint>> {
        let ch = &self.charts[idx];
        let over_inf = ch.over == Over::Infinity;
        let mut found: Vec<(u8, Extension, [NfElem; 2], usize)> = Vec::new();
        if full {
            let gg = UPoly::gcd(&on_line(&ch.a), &on_line(&ch.b));
            if gg.deg() > 0 {
                for (ext, d, _) in root_orbits(ch.field.as_ref(), &gg, self.opts.cap)? {
                    found.push((1, ext.clone(), [NfElem::zero(), ext.root.clone()], d));
                }
            }
            if over_inf {
                let gp = UPoly::gcd(&on_line(&ch.pn), &on_line(&ch.pd));
                let gq = UPoly::gcd(&on_line(&ch.qn), &on_line(&ch.qd));
                let l = gp.mul(&gq).exact_div(&UPoly::gcd(&gp, &gq)).expect("lcm");
                let mut fb = l.squarefree_part();
                if gg.deg() > 0 {
                    let c = UPoly::gcd(&fb, &gg);
                    fb = fb.exact_div(&c).expect("divides");
                }
                if fb.deg() > 0 {
                    for (ext, d, _) in root_orbits(ch.field.as_ref(), &fb, self.opts.cap)? {
                        found.push((2, ext.clone(), [NfElem::zero(), ext.root.clone()], d));
                    }
                }
            }
        } else {
            let z = [NfElem::zero(), NfElem::zero()];
            let ext = trivial_ext(ch.field.as_ref());
            if at_origin(&ch.a).is_zero() && at_origin(&ch.b).is_zero() {
                found.push((1, ext, z, 1));
            } else if over_inf
                && ((at_origin(&ch.pn).is_zero() && at_origin(&ch.pd).is_zero())
                    || (at_origin(&ch.qn).is_zero() && at_origin(&ch.qd).is_zero()))
            {
                found.push((2, ext, z, 1));
            }
        }
        let chart_id = ch.id.clone();
        let over = ch.over;
        let mut descs = Vec::new();
        for (phase, ext, point, orbit) in found {
            let desc = AlgebraicPoint::from_nf(&chart_id, ext.field.as_ref(), &point);
            if phase == 1 && idx != 0 && self.charts[idx].generation == 0 {
                descs.push(desc.clone());
            }
            self.push(Pending {
                chart: idx,
                ext,
                point,
                orbit,
                phase,
                over,
                desc,
            });
        }
        Ok(descs)
    }

    fn blow_up(&mut self, p: Pending) -> Result<()> {
        if self.centers.len() >= self.opts.budget {
            return Err(Error::BlowupBudgetExceeded {
                budget: self.opts.budget,
            });
        }
        let mut base = self.charts[p.chart].embed(&p.ext, p.orbit);
        base.over = p.over;
        let indeterminate = base.a.eval(&p.point).is_zero() && base.b.eval(&p.point).is_zero();
        if p.phase == 1 && !indeterminate {
            return Err(Error::NotIndeterminate);
        }
        let comp = self.components.len();
        let cidx = self.centers.len();
        let through: Vec<usize> = base
            .comps
            .iter()
            .filter(|(_, e)| e.eval(&p.point).is_zero())
            .map(|(i, _)| *i)
            .collect();
        let subs = blowup_substitutions(&p.point);
        let (c1, k) = base.pull_back(&subs[0], format!("E{cidx:03}a"), comp);
        let (c2, _) = base.pull_back(&subs[1], format!("E{cidx:03}b"), comp);
        let component = classify::classify(comp, &c1, Origin::ExceptionalOver { center: cidx }, p.phase)?;
        self.components.push(component);
        self.centers.push(Center {
            index: cidx,
            chart: base.id.clone(),
            generation: base.generation,
            phase: p.phase,
            point: p.desc,
            copies: base.copies,
            exceptional: comp,
            multiplicity: k,
        });
        // adjacency: the new curve meets everything through the center;
        // two old curves through it stay adjacent only if they still meet
        for (n, &i) in through.iter().enumerate() {
            for &j in &through[n + 1..] {
                let key = (i.min(j), i.max(j));
                if self.edges.contains(&key) && !still_meet(&c1, &c2, i, j) {
                    self.edges.remove(&key);
                }
            }
            self.edges.insert((i, comp));
        }
        self.charts.push(c1);
        self.charts.push(c2);
        let n = self.charts.len();
        self.scan(n - 2, true)?;
        self.scan(n - 1, false)?;
        Ok(())
    }

    fn run(&mut self, f: &PencilMap) -> Result<()> {
        let linf = classify::classify(0, &self.charts[1], Origin::LineAtInfinity, 1)?;
        self.components.push(linf);
        self.affine_base_points(f)?;
        let mut inf = self.scan(1, true)?;
        inf.extend(self.scan(2, false)?);
        self.at_infinity = inf
            .into_iter()
            .map(|d| {
                let copies = d.field_degree;
                (d, copies)
            })
            .collect();
        while let Some((_, p)) = self.queue.pop_first() {
            self.blow_up(p)?;
        }
        Ok(())
    }

    fn finish(mut self) -> ResolutionTree {
        let mut h_infinity = 0;
        let mut h_b_total = 0;
        for c in &self.components {
            if !c.is_horizontal() {
                continue;
            }
            match c.over {
                Over::Infinity => h_infinity += c.copies,
                Over::BasePoint(i) => {
                    h_b_total += c.copies;
                    let bp = &mut self.base_points[i];
                    bp.h += c.copies / bp.copies;
                }
            }
        }
        let m = self.components.iter().filter(|c| c.phase == 1).map(|c| c.copies).sum();
        let m_total = self.components.iter().map(|c| c.copies).sum();
        let mut groups: BTreeMap<String, LambdaCount> = BTreeMap::new();
        for c in self.components.iter().filter(|c| c.phase == 1) {
            if let GRestriction::Constant { lambda } = &c.g_restriction {
                let e = groups.entry(lambda.key.clone()).or_insert_with(|| LambdaCount {
                    lambda: lambda.clone(),
                    m: 0,
                });
                e.m += c.copies / lambda.orbit;
            }
        }
        ResolutionTree {
            base_points: self.base_points,
            base_points_at_infinity: self.at_infinity,
            blowups: self.centers.len(),
            centers: self.centers,
            components: self.components,
            edges: self.edges.into_iter().collect(),
            h_infinity,
            h_b_total,
            h_g: h_infinity + h_b_total,
            m,
            m_lambda: groups.into_values().collect(),
            m_total,
        }
    }
}

fn still_meet(c1: &Chart, c2: &Chart, i: usize, j: usize) -> bool {
    let eq = |c: &Chart, k: usize| c.comps.iter().find(|(x, _)| *x == k).map(|(_, e)| e.clone());
    if let (Some(a), Some(b)) = (eq(c1, i), eq(c1, j)) {
        if UPoly::gcd(&on_line(&a), &on_line(&b)).deg() > 0 {
            return true;
        }
    }
    if let (Some(a), Some(b)) = (eq(c2, i), eq(c2, j)) {
        if at_origin(&a).is_zero() && at_origin(&b).is_zero() {
            return true;
        }
    }
    false
}

pub fn resolve_pencil(f: &PencilMap) -> Result<ResolutionTree> {
    resolve_with(f, &ResolveOptions::default())
}

pub fn resolve_with(f: &PencilMap, opts: &ResolveOptions) -> Result<ResolutionTree> {
    let mut e = Engine::new(f, opts)?;
    e.run(f)?;
    Ok(e.finish())
}

/// Base points of the pencil: affine ones, and those on the line at
/// infinity, each with its number of conjugates.
pub fn base_points(f: &PencilMap) -> Result<(Vec<(AlgebraicPoint, usize)>, Vec<(AlgebraicPoint, usize)>)> {
    let opts = ResolveOptions::default();
    let mut e = Engine::new(f, &opts)?;
    e.affine_base_points(f)?;
    let mut inf = e.scan(1, true)?;
    inf.extend(e.scan(2, false)?);
    let affine = e.base_points.iter().map(|b| (b.point.clone(), b.copies)).collect();
    let inf = inf.into_iter().map(|d| (d.clone(), d.field_degree)).collect();
    Ok((affine, inf))
}

/// Blow-up data exposed for checking the exceptional-factor ledger: for
/// every chart, the raw pullback of the root sections and the stored
/// sections times the recorded exceptional factors.
pub fn ledger_pairs(f: &PencilMap) -> Result<Vec<([KPoly; 2], [KPoly; 2])>> {
    let opts = ResolveOptions::default();
    let mut e = Engine::new(f, &opts)?;
    e.run(f)?;
    let mut out = Vec::new();
    for c in &e.charts {
        let root = &e.root_sections[c.root];
        let raw = [root[0].compose(&c.images, 2), root[1].compose(&c.images, 2)];
        let mut re = [c.a.clone(), c.b.clone()];
        for LedgerEntry { total, ka, kb, .. } in &c.ledger {
            re[0] = re[0].mul(&total.pow(*ka));
            re[1] = re[1].mul(&total.pow(*kb));
        }
        out.push((raw, re));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
