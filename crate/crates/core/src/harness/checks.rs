//! Identity checks. Each yields pass, fail, or a skip with the reason the
//! hypotheses could not be certified.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use super::{Expected, HarnessConfig, MapDossier, Situation, StageError};
use crate::exact::bivariate::poly_cmp;
use crate::exact::multipoly::{fmt_poly, normalize};
use crate::exact::rational::{fmt_q, q};
use crate::exact::{Poly, Q};
use crate::pencil::{PencilMap, PencilProfile};
use crate::properness::{check_fiber_sum, rational_point_on, FiberSum, NonProperSet, Theorem4Report};
use crate::resolution::{euler_bookkeeping, Over, ResolutionTree, TypeLabel};
use crate::sample::Sampler;
use crate::Error;

const TAG_EQ1: u64 = 0x6571_31;
const UV: [&str; 2] = ["u", "v"];

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Pass { detail: String },
    Fail { detail: String },
    Skipped { reason: String },
}

impl Outcome {
    pub fn pass(detail: String) -> Self {
        Outcome::Pass { detail }
    }

    pub fn fail(detail: String) -> Self {
        Outcome::Fail { detail }
    }

    pub fn skipped(reason: String) -> Self {
        Outcome::Skipped { reason }
    }

    fn check(ok: bool, detail: String) -> Self {
        if ok {
            Self::pass(detail)
        } else {
            Self::fail(detail)
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Outcome::Skipped { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Check {
    pub fn new(name: &str, outcome: Outcome) -> Self {
        Check {
            name: name.into(),
            outcome,
        }
    }
}

pub(super) struct Context<'a> {
    pub f: &'a PencilMap,
    pub finite_fibres: bool,
    pub cfg: &'a HarnessConfig,
    pub profile: Option<&'a PencilProfile>,
    pub tree: Option<&'a ResolutionTree>,
    pub af: Option<&'a NonProperSet>,
    pub deg_geo: Option<usize>,
    pub errors: &'a [StageError],
}

impl Context<'_> {
    fn missing(&self, stage: &str) -> Outcome {
        match self.errors.iter().find(|e| e.stage == stage) {
            Some(e) => Outcome::skipped(format!("{stage} failed: {}", e.kind)),
            None => Outcome::skipped(format!("{stage} unavailable")),
        }
    }

    fn tree(&self) -> Result<&ResolutionTree, Outcome> {
        self.tree.ok_or_else(|| self.missing("resolution"))
    }

    fn profile(&self) -> Result<&PencilProfile, Outcome> {
        self.profile.ok_or_else(|| self.missing("pencil"))
    }

    fn af(&self) -> Result<&NonProperSet, Outcome> {
        match self.af {
            Some(a) => Ok(a),
            None if self.deg_geo.is_none() && self.errors.iter().all(|e| e.stage != "elimination") => {
                Err(Outcome::skipped("fibres are not finite".into()))
            }
            None => Err(self.missing("nonproper_set")),
        }
    }
}

macro_rules! need {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(o) => return o,
        }
    };
}

fn fmt_v(v: &[Q; 2]) -> String {
    format!("({}, {})", fmt_q(&v[0]), fmt_q(&v[1]))
}

/// Fibre sums equal the geometric degree off `A_F` and fall short on it.
pub(super) fn eq1(ctx: &Context) -> (Outcome, Vec<FiberSum>) {
    let mut sums = Vec::new();
    let af = match ctx.af() {
        Ok(a) => a,
        Err(o) => return (o, sums),
    };
    let Some(d) = ctx.deg_geo else {
        return (ctx.missing("geometric_degree"), sums);
    };
    if !af.unresolved.is_empty() {
        return (Outcome::skipped("A_F has unresolved components".into()), sums);
    }
    let mut rng = Sampler::derived(ctx.cfg.seed, TAG_EQ1);
    let mut values = Vec::new();
    while values.len() < ctx.cfg.fibre_samples {
        let v = [rng.rational(9, 4), rng.rational(9, 4)];
        if !af.contains(&v) && !values.contains(&v) {
            values.push(v);
        }
    }
    for c in &af.components {
        match rational_point_on(&c.poly, &mut rng) {
            Some(v) => values.push(v),
            None => {
                return (
                    Outcome::skipped(format!("no rational point found on {}", c.equation)),
                    sums,
                )
            }
        }
    }
    let mut bad = Vec::new();
    for v in &values {
        match check_fiber_sum(ctx.f, v, d, af, ctx.cfg.seed, ctx.cfg.cap) {
            Ok(s) => {
                if !s.consistent {
                    bad.push(format!("{}: sum {} vs deg_geo {d}", fmt_v(v), s.sum));
                }
                sums.push(s);
            }
            Err(e) if e.is_cap() => return (Outcome::skipped(format!("cap exceeded: {e}")), sums),
            Err(e) => return (Outcome::fail(format!("{}: {e}", fmt_v(v))), sums),
        }
    }
    let on = sums.iter().filter(|s| s.on_nonproper_set).count();
    let out = if bad.is_empty() {
        Outcome::pass(format!("{} values off A_F, {on} on A_F", sums.len() - on))
    } else {
        Outcome::fail(bad.join("; "))
    };
    (out, sums)
}

fn horizontal(t: &ResolutionTree, over: impl Fn(&Over) -> bool) -> usize {
    t.components
        .iter()
        .filter(|c| c.is_horizontal() && over(&c.over))
        .map(|c| c.copies)
        .sum()
}

pub(super) fn eq2(ctx: &Context) -> Outcome {
    let t = need!(ctx.tree());
    let ok = t.h_infinity > 0 && t.base_points.iter().all(|b| b.h > 0);
    let hb: Vec<String> = t.base_points.iter().map(|b| format!("{}", b.h)).collect();
    Outcome::check(ok, format!("h_inf = {}, h_b = [{}]", t.h_infinity, hb.join(", ")))
}

/// `h_G` recounted from the horizontal components of the divisor.
pub(super) fn eq3(ctx: &Context) -> Outcome {
    let t = need!(ctx.tree());
    let all = horizontal(t, |_| true);
    let inf = horizontal(t, |o| *o == Over::Infinity);
    let per_b: usize = t.base_points.iter().map(|b| b.h * b.copies).sum();
    let ok = all == t.h_g && inf == t.h_infinity && per_b == t.h_b_total && t.h_g == t.h_infinity + t.h_b_total;
    Outcome::check(ok, format!("h_G = {all} = {inf} + {per_b}"))
}

pub(super) fn eq4(ctx: &Context) -> Outcome {
    let p = need!(ctx.profile());
    let t = need!(ctx.tree());
    if !p.generic_rational() {
        return Outcome::skipped("generic member not certified irreducible and rational".into());
    }
    let lhs = p.total_reducibility;
    let rhs = t.h_infinity as i64 + t.h_b_total as i64 - 2;
    if p.locus_complete {
        Outcome::check(lhs == rhs, format!("{lhs} = {} + {} - 2", t.h_infinity, t.h_b_total))
    } else {
        Outcome::check(
            lhs <= rhs,
            format!("{lhs} <= {} + {} - 2 (reducible locus incomplete)", t.h_infinity, t.h_b_total),
        )
    }
}

pub(super) fn eq5(ctx: &Context) -> Outcome {
    let p = need!(ctx.profile());
    let t = need!(ctx.tree());
    match euler_bookkeeping(t, p) {
        Ok(s) => Outcome::check(s.pass, format!("{} = m - 2 = {}", s.lhs, s.rhs)),
        Err(Error::HypothesisNotCertified(r)) => Outcome::skipped(r),
        Err(e) => Outcome::fail(format!("{e}")),
    }
}

pub(super) fn eq8(ctx: &Context) -> Outcome {
    let p = need!(ctx.profile());
    let t = need!(ctx.tree());
    if !p.all_members_irreducible() {
        return Outcome::skipped("members not certified irreducible".into());
    }
    if !p.generic_rational() {
        return Outcome::skipped("generic member not certified rational".into());
    }
    Outcome::check(t.h_g == 2, format!("h_G = {}", t.h_g))
}

fn finite(ctx: &Context) -> Result<(), Outcome> {
    if ctx.finite_fibres {
        Ok(())
    } else {
        Err(Outcome::skipped("fibres are not finite".into()))
    }
}

pub(super) fn lemma2a(ctx: &Context) -> Outcome {
    need!(finite(ctx));
    let t = need!(ctx.tree());
    Outcome::check(t.has_type(TypeLabel::IIa), "Type IIa present".into())
}

pub(super) fn lemma2b(ctx: &Context) -> Outcome {
    need!(finite(ctx));
    let af = need!(ctx.af());
    let t = need!(ctx.tree());
    if af.empty {
        return Outcome::pass("vacuous: A_F empty".into());
    }
    let origin = af.contains(&[q(0), q(0)]);
    let b = t.has_type(TypeLabel::IIb);
    let c = t.has_type(TypeLabel::IIc);
    let ok = (b || c) && (!origin || b);
    Outcome::check(ok, format!("(0,0) in A_F: {origin}, IIb: {b}, IIc: {c}"))
}

pub(super) fn lemma2c(ctx: &Context) -> Outcome {
    need!(finite(ctx));
    let t = need!(ctx.tree());
    let bad: Vec<String> = t
        .dicritical()
        .filter(|c| !c.is_horizontal() && !c.image.as_ref().is_some_and(|i| i.through_origin_line))
        .map(|c| format!("component {}", c.id))
        .collect();
    let n = t.dicritical().count();
    Outcome::check(bad.is_empty(), if bad.is_empty() { format!("{n} dicritical") } else { bad.join(", ") })
}

fn sorted(mut v: Vec<Poly<Q>>) -> Vec<Poly<Q>> {
    v = v.iter().map(normalize).collect();
    v.sort_by(poly_cmp);
    v.dedup();
    v
}

fn fmt_set(v: &[Poly<Q>]) -> String {
    let s: Vec<String> = v.iter().map(|p| fmt_poly(p, &UV)).collect();
    format!("{{{}}}", s.join(", "))
}

/// Dicritical images against the elimination route, component by component.
pub(super) fn cross_oracle(ctx: &Context) -> Outcome {
    let af = need!(ctx.af());
    let t = need!(ctx.tree());
    if !af.unresolved.is_empty() {
        return Outcome::skipped("A_F has unresolved components".into());
    }
    let a = sorted(af.polys());
    let b = sorted(t.nonproper_components());
    if a == b {
        Outcome::pass(fmt_set(&a))
    } else {
        Outcome::fail(format!("elimination {} vs resolution {}", fmt_set(&a), fmt_set(&b)))
    }
}

pub(super) fn proper_iff_no_dicritical(ctx: &Context) -> Outcome {
    let af = need!(ctx.af());
    let t = need!(ctx.tree());
    let n = t.dicritical().count();
    Outcome::check(af.empty == (n == 0), format!("A_F empty: {}, dicritical: {n}", af.empty))
}

pub(super) fn theorem4(r: Option<&Theorem4Report>) -> Outcome {
    let Some(r) = r else {
        return Outcome::skipped("A_F or resolution unavailable".into());
    };
    if r.verdicts.is_empty() {
        return Outcome::pass("vacuous: A_F empty".into());
    }
    let forbidding: Vec<&str> = r.verdicts.iter().filter(|v| v.forbids_keller).map(|v| v.component.as_str()).collect();
    let unmatched: Vec<&str> = r.verdicts.iter().filter(|v| !v.matched).map(|v| v.component.as_str()).collect();
    let mut detail = format!("keller = {}, forbidding components: [{}]", r.keller, forbidding.join(", "));
    if !unmatched.is_empty() {
        detail.push_str(&format!(", unmatched: [{}]", unmatched.join(", ")));
    }
    Outcome::check(r.contrapositive_holds, detail)
}

pub(super) fn situation(t: &ResolutionTree) -> Situation {
    match (t.h_infinity, t.base_points.as_slice()) {
        (2, []) => Situation::I,
        (1, [b]) if b.copies == 1 && b.h == 1 => Situation::II,
        _ => Situation::Neither,
    }
}

pub(super) fn expected(e: &Expected, d: &MapDossier, ctx: &Context) -> Outcome {
    let mut bad = Vec::new();
    let mut cmp = |name: &str, want: Option<String>, got: Option<String>| {
        if let Some(w) = want {
            if Some(&w) != got.as_ref() {
                bad.push(format!("{name}: expected {w}, got {}", got.as_deref().unwrap_or("none")));
            }
        }
    };
    let s = |x: &dyn core::fmt::Debug| format!("{x:?}");
    cmp("finite_fibres", e.finite_fibres.map(|x| s(&x)), Some(s(&d.finite_fibres)));
    cmp("deg_geo", e.deg_geo.map(|x| s(&x)), d.deg_geo.map(|x| s(&x)));
    cmp(
        "a_f",
        e.a_f.as_ref().map(|x| s(x)),
        d.a_f_empty.map(|_| s(&d.a_f_components.iter().map(|c| c.equation.clone()).collect::<Vec<_>>())),
    );
    cmp("keller", e.keller.map(|x| s(&x)), Some(s(&d.keller)));
    cmp("invertible", e.invertible.map(|x| s(&x)), d.invertible.map(|x| s(&x)));
    cmp("regular_value", e.regular_value.map(|x| s(&x)), d.regular_value.map(|x| s(&x)));
    cmp("h_infinity", e.h_infinity.map(|x| s(&x)), ctx.tree.map(|t| s(&t.h_infinity)));
    cmp("h_b", e.h_b.map(|x| s(&x)), ctx.tree.map(|t| s(&t.h_b_total)));
    cmp(
        "total_reducibility",
        e.total_reducibility.map(|x| s(&x)),
        ctx.profile.map(|p| s(&p.total_reducibility)),
    );
    cmp("generic_r", e.generic_r.map(|x| s(&x)), ctx.profile.map(|p| s(&p.generic_r)));
    cmp(
        "theorem2_applicable",
        e.theorem2_applicable.map(|x| s(&x)),
        Some(s(&d.theorem2_applicable)),
    );
    if let Some(kind) = &e.error {
        if !ctx.errors.iter().any(|err| &err.kind == kind) {
            bad.push(format!("error: expected {kind}, none raised"));
        }
    }
    Outcome::check(bad.is_empty(), if bad.is_empty() { "all expectations met".into() } else { bad.join("; ") })
}
