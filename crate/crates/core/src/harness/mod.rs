//! Per-map dossiers and the identity checks run over a corpus.

mod checks;
mod suite;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::multipoly::fmt_poly;
use crate::exact::nf_factor::DEFAULT_DEGREE_CAP;
use crate::pencil::{scan_pencil, PencilMap, PencilProfile, DEFAULT_SAMPLES, XY};
use crate::properness::{
    attach_parametrizations, finite_fibres_check, geometric_degree_with, nonproper_set_with, predicates, AfComponent,
    Elimination, FiberSum, FibreCertificate, RegularValue, Theorem4Report, Unresolved,
};
use crate::resolution::{dual_graph_dot, resolve_with, ResolutionTree, ResolveOptions, TypeLabel, DEFAULT_BLOWUP_BUDGET};
use crate::sample::DEFAULT_SEED;

pub use checks::{Check, Outcome};
pub use suite::{suite_totals, theorem2_harness, SuiteTotals, Theorem2Suite};

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub seed: u64,
    pub samples: usize,
    pub cap: usize,
    pub budget: usize,
    /// Values off `A_F` tested against the fibre-sum identity.
    pub fibre_samples: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            cap: DEFAULT_DEGREE_CAP,
            budget: DEFAULT_BLOWUP_BUDGET,
            fibre_samples: 10,
        }
    }
}

/// Golden values a corpus entry may pin down.
#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub finite_fibres: Option<bool>,
    pub deg_geo: Option<usize>,
    pub a_f: Option<Vec<String>>,
    pub keller: Option<bool>,
    pub invertible: Option<bool>,
    pub regular_value: Option<RegularValue>,
    pub h_infinity: Option<usize>,
    pub h_b: Option<usize>,
    pub total_reducibility: Option<i64>,
    pub generic_r: Option<usize>,
    pub theorem2_applicable: Option<bool>,
    /// Machine tag of an error some stage must raise.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PredicateTable {
    /// `(0, 0)` is a regular value.
    pub a: Option<bool>,
    /// `det DF` is a nonzero constant.
    pub b: bool,
    /// `F` is invertible.
    pub c: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MapDossier {
    pub finite_fibres: bool,
    pub fibre_certificate: FibreCertificate,
    pub deg_geo: Option<usize>,
    pub a_f_components: Vec<AfComponent>,
    pub a_f_rejected: Vec<String>,
    pub a_f_unresolved: Vec<Unresolved>,
    pub a_f_empty: Option<bool>,
    pub jacobian: String,
    pub keller: bool,
    pub regular_value: Option<RegularValue>,
    pub invertible: Option<bool>,
    pub theorem2_applicable: bool,
    pub predicate_table: PredicateTable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasePointSummary {
    pub point: [String; 2],
    pub copies: usize,
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResolutionSummary {
    pub base_points: Vec<BasePointSummary>,
    pub h_infinity: usize,
    pub h_b_total: usize,
    pub h_g: usize,
    pub m: usize,
    pub m_total: usize,
    pub blowups: usize,
    pub types: Vec<(TypeLabel, usize)>,
    pub dicritical: usize,
    pub dicritical_images: Vec<String>,
    pub dot: String,
}

impl ResolutionSummary {
    pub fn new(t: &ResolutionTree) -> Self {
        let fmt_pt = |p: &crate::resolution::AlgebraicPoint| {
            p.coords.clone().map(|c| match c.to_rational() {
                Some(r) => crate::exact::rational::fmt_q(&r),
                None => format!("root of {}", crate::exact::multipoly::fmt_upoly(c.min_poly(), "t")),
            })
        };
        let types = [TypeLabel::I, TypeLabel::IIa, TypeLabel::IIb, TypeLabel::IIc, TypeLabel::NotHorizontal]
            .into_iter()
            .map(|l| (l, t.components.iter().filter(|c| c.type_label == l).map(|c| c.copies).sum()))
            .filter(|(_, n)| *n > 0)
            .collect();
        ResolutionSummary {
            base_points: t
                .base_points
                .iter()
                .map(|b| BasePointSummary {
                    point: fmt_pt(&b.point),
                    copies: b.copies,
                    h: b.h,
                })
                .collect(),
            h_infinity: t.h_infinity,
            h_b_total: t.h_b_total,
            h_g: t.h_g,
            m: t.m,
            m_total: t.m_total,
            blowups: t.blowups,
            types,
            dicritical: t.dicritical().map(|c| c.copies).sum(),
            dicritical_images: t.nonproper_components().iter().map(|p| fmt_poly(p, &["u", "v"])).collect(),
            dot: dual_graph_dot(t),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Situation {
    /// `h_inf = 2` and no affine base point.
    I,
    /// `h_inf = 1` and a single base point with `h_b = 1`.
    II,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem2Entry {
    pub applicable: bool,
    /// Hypotheses that are not certified.
    pub missing: Vec<String>,
    pub a: Option<bool>,
    pub b: bool,
    pub c: Option<bool>,
    pub equivalent: Outcome,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StageError {
    pub stage: String,
    pub kind: String,
    pub message: String,
    pub cap: bool,
    /// Announced by the entry's expectations.
    pub expected: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapReport {
    pub name: String,
    pub p: String,
    pub q: String,
    pub dossier: MapDossier,
    pub pencil: Option<PencilProfile>,
    pub resolution: Option<ResolutionSummary>,
    pub situation: Option<Situation>,
    pub fiber_sums: Vec<FiberSum>,
    pub theorem4: Option<Theorem4Report>,
    pub checks: Vec<Check>,
    pub theorem2: Theorem2Entry,
    pub errors: Vec<StageError>,
    #[serde(skip)]
    pub tree: Option<ResolutionTree>,
}

impl MapReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.outcome, Outcome::Fail { .. }))
            || matches!(self.theorem2.equivalent, Outcome::Fail { .. })
    }

    /// Cap or budget errors not announced by the entry's expectations.
    pub fn cap_errors(&self) -> impl Iterator<Item = &StageError> {
        self.errors.iter().filter(|e| e.cap && !e.expected)
    }
}

struct Stages {
    errors: Vec<StageError>,
}

impl Stages {
    fn run<T>(&mut self, stage: &str, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.errors.push(StageError {
                    stage: stage.into(),
                    kind: e.kind().into(),
                    message: format!("{e}"),
                    cap: e.is_cap(),
                    expected: false,
                });
                None
            }
        }
    }
}

/// Run every stage on one map, capturing stage errors into the report.
pub fn run_map(name: &str, f: &PencilMap, expected: Option<&Expected>, cfg: &HarnessConfig) -> MapReport {
    let mut st = Stages { errors: Vec::new() };
    let ff = finite_fibres_check(f).expect("finite fibre check does not fail");
    let profile = st.run("pencil", scan_pencil(f, cfg.samples, cfg.seed));
    let opts = ResolveOptions {
        budget: cfg.budget,
        cap: cfg.cap,
        ..ResolveOptions::default()
    };
    let tree = st.run("resolution", resolve_with(f, &opts));

    let mut deg_geo = None;
    let mut af = None;
    if ff.finite {
        if let Some(el) = st.run("elimination", Elimination::new(f)) {
            deg_geo = st.run("geometric_degree", geometric_degree_with(&el, cfg.seed));
            af = st.run("nonproper_set", nonproper_set_with(f, &el, cfg.seed));
        }
    }
    if let (Some(a), Some(t)) = (af.as_mut(), tree.as_ref()) {
        attach_parametrizations(a, t);
    }
    let preds = match deg_geo {
        Some(d) => st.run("predicates", predicates(f, d, cfg.cap)),
        None => None,
    };
    let keller = crate::properness::is_keller(f);
    // a map without finite fibres is not injective
    let invertible = if ff.finite { preds.as_ref().map(|p| p.invertible) } else { Some(false) };
    let regular_value = if preds.is_some() {
        preds.as_ref().map(|p| p.regular_value)
    } else {
        st.run("regular_value", crate::properness::regular_value_at_origin(f, cfg.cap))
    };

    let mut missing = Vec::new();
    if !ff.finite {
        missing.push("finite_fibres".into());
    }
    match &profile {
        Some(p) => {
            if !p.all_members_irreducible() {
                missing.push("irreducibility".into());
            }
            if !p.generic_rational() {
                missing.push("rationality".into());
            }
        }
        None => missing.push("pencil_profile".into()),
    }
    let applicable = missing.is_empty();
    let a = regular_value.map(|r| r == RegularValue::Regular);

    let (pn, qn) = f.display();
    let dossier = MapDossier {
        finite_fibres: ff.finite,
        fibre_certificate: ff.certificate,
        deg_geo,
        a_f_components: af.as_ref().map(|a| a.components.clone()).unwrap_or_default(),
        a_f_rejected: af.as_ref().map(|a| a.rejected.clone()).unwrap_or_default(),
        a_f_unresolved: af.as_ref().map(|a| a.unresolved.clone()).unwrap_or_default(),
        a_f_empty: af.as_ref().map(|a| a.empty),
        jacobian: fmt_poly(&f.jacobian(), &XY),
        keller,
        regular_value,
        invertible,
        theorem2_applicable: applicable,
        predicate_table: PredicateTable {
            a,
            b: keller,
            c: invertible,
        },
    };

    let ctx = checks::Context {
        f,
        finite_fibres: ff.finite,
        cfg,
        profile: profile.as_ref(),
        tree: tree.as_ref(),
        af: af.as_ref(),
        deg_geo,
        errors: &st.errors,
    };
    let (eq1, fiber_sums) = checks::eq1(&ctx);
    let theorem4 = match (&af, &tree) {
        (Some(a), Some(t)) => Some(crate::properness::theorem4_ratio_check(f, a, t)),
        _ => None,
    };
    let mut checks = alloc::vec![
        Check::new("eq1", eq1),
        Check::new("eq2", checks::eq2(&ctx)),
        Check::new("eq3", checks::eq3(&ctx)),
        Check::new("eq4", checks::eq4(&ctx)),
        Check::new("eq5", checks::eq5(&ctx)),
        Check::new("eq8", checks::eq8(&ctx)),
        Check::new("lemma2a", checks::lemma2a(&ctx)),
        Check::new("lemma2b", checks::lemma2b(&ctx)),
        Check::new("lemma2c", checks::lemma2c(&ctx)),
        Check::new("a_f_cross_oracle", checks::cross_oracle(&ctx)),
        Check::new("proper_iff_no_dicritical", checks::proper_iff_no_dicritical(&ctx)),
        Check::new("theorem4", checks::theorem4(theorem4.as_ref())),
    ];
    if let Some(e) = expected {
        checks.push(Check::new("expected", checks::expected(e, &dossier, &ctx)));
        if let Some(kind) = &e.error {
            for err in st.errors.iter_mut().filter(|err| &err.kind == kind) {
                err.expected = true;
            }
        }
    }
    let situation = tree.as_ref().map(checks::situation);

    let equivalent = if !applicable {
        Outcome::skipped(format!("hypotheses not certified: {}", missing.join(", ")))
    } else {
        match (a, invertible) {
            (Some(a), Some(c)) if a == keller && keller == c => Outcome::pass(format!("a = b = c = {a}")),
            (Some(a), Some(c)) => Outcome::fail(format!("a = {a}, b = {keller}, c = {c}")),
            _ => Outcome::skipped("predicates unavailable".into()),
        }
    };

    MapReport {
        name: name.into(),
        p: pn,
        q: qn,
        dossier,
        pencil: profile,
        resolution: tree.as_ref().map(ResolutionSummary::new),
        situation,
        fiber_sums,
        theorem4,
        checks,
        theorem2: Theorem2Entry {
            applicable,
            missing,
            a,
            b: keller,
            c: invertible,
            equivalent,
        },
        errors: st.errors,
        tree,
    }
}

/// Error report for an entry whose polynomials do not parse.
pub fn parse_failure(e: &Error) -> StageError {
    StageError {
        stage: "parse".into(),
        kind: e.kind().into(),
        message: format!("{e}"),
        cap: false,
        expected: false,
    }
}
