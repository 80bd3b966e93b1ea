//! Finite fibres, geometric degree, the non-proper value set `A_F`, local
//! multiplicities and the predicates of the Jacobian problem.
//!
//! Most computations run on a sheared copy `F(x + c y, y)` chosen so that
//! `Q` has constant leading coefficient in `y`. Then for every value
//! `(u0, v0)` the polynomial `Res_y(P - u0, Q - v0)` has degree equal to
//! the number of affine solutions of `F = (u0, v0)`, counted with
//! multiplicity.

mod fibres;
mod jelonek;
mod multiplicity;
mod theorem4;

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::field::Field;
use crate::exact::numfield::poly_to_nf;
use crate::exact::rational::{fmt_q, q};
use crate::exact::solve::common_zeros;
use crate::exact::{gcd, Poly, Q};
use crate::pencil::PencilMap;
use crate::resolution::AlgebraicPoint;
use crate::sample::Sampler;

pub use fibres::{finite_fibres_check, FibreCertificate, FiniteFibres};
pub use jelonek::{nonproper_set, nonproper_set_with, rational_point_on, AfComponent, EscapeWitness, NonProperSet, Unresolved};
pub use multiplicity::{local_multiplicity, local_multiplicity_at};
pub use theorem4::{attach_parametrizations, theorem4_ratio_check, Theorem4Report, Theorem4Verdict};

pub const GEO_SAMPLES: usize = 5;
const TAG_GEO: u64 = 0x6765_6f;

/// `p(x + c y, y)`.
pub fn shear(p: &Poly<Q>, c: &Q) -> Poly<Q> {
    let x: Poly<Q> = Poly::var(2, 0);
    let y: Poly<Q> = Poly::var(2, 1);
    p.compose(&[x.add(&y.scale(c)), y], 2)
}

fn top_at(p: &Poly<Q>, c: &Q) -> Q {
    p.homogeneous_part(p.total_degree()).eval(&[c.clone(), q(1)])
}

/// Smallest shear in 0, 1, -1, 2, ... making the `y`-leading coefficients
/// of both `P` and `Q` constant.
pub fn good_shear(f: &PencilMap) -> Q {
    (0i64..)
        .flat_map(|k| [k, -k])
        .map(q)
        .find(|c| !top_at(f.p(), c).is_zero() && !top_at(f.q(), c).is_zero())
        .expect("finitely many bad shears")
}

/// The generic elimination `R(x, u, v) = Res_y(P - u, Q - v)` of the
/// sheared map and its degree-drop locus `lc_x R` in `(u, v)`.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub shear: Q,
    pub p: Poly<Q>,
    pub q: Poly<Q>,
    pub r: Poly<Q>,
    pub drop_locus: Poly<Q>,
}

impl Elimination {
    pub fn new(f: &PencilMap) -> Result<Self> {
        if f.p().is_constant() || f.q().is_constant() {
            return Err(Error::NotFiniteFibres);
        }
        let c = good_shear(f);
        let (p, qq) = (shear(f.p(), &c), shear(f.q(), &c));
        let lift = |g: &Poly<Q>, var: usize| g.remap(&[0, 1], 4).sub(&Poly::var(4, var));
        let r = gcd::resultant(&lift(&p, 2), &lift(&qq, 3), 1)?.remap(&[0, 0, 1, 2], 3);
        if r.is_zero() {
            return Err(Error::NotFiniteFibres);
        }
        let drop_locus = r.lc_in(0).remap(&[0, 0, 1], 2);
        Ok(Elimination {
            shear: c,
            p,
            q: qq,
            r,
            drop_locus,
        })
    }

    pub fn generic_degree(&self) -> usize {
        self.r.degree_in(0) as usize
    }

    /// Number of solutions of `F = (u0, v0)` with multiplicity.
    pub fn fibre_count(&self, v: &[Q; 2]) -> Result<usize> {
        let s = self.r.eval_var(1, &v[0]).eval_var(2, &v[1]);
        if s.is_zero() {
            return Err(Error::NotFiniteFibres);
        }
        Ok(s.degree_in(0) as usize)
    }
}

/// Number of solutions of `F = v` for generic `v`, read off
/// [`GEO_SAMPLES`] random specializations. Samples on the degree-drop
/// locus are replaced; the rest must agree.
pub fn geometric_degree(f: &PencilMap, seed: u64) -> Result<usize> {
    let el = Elimination::new(f)?;
    geometric_degree_with(&el, seed)
}

pub fn geometric_degree_with(el: &Elimination, seed: u64) -> Result<usize> {
    let mut rng = Sampler::derived(seed, TAG_GEO);
    let mut degs = Vec::new();
    let mut draws = 0;
    while degs.len() < GEO_SAMPLES {
        draws += 1;
        if draws > 8 * GEO_SAMPLES {
            return Err(Error::InstabilityDetected("too many samples on the degree-drop locus".into()));
        }
        let v = [rng.rational(30, 7), rng.rational(30, 7)];
        if el.drop_locus.eval(&v).is_zero() {
            continue;
        }
        // specialize before eliminating: independent of the generic resultant
        let p = el.p.sub(&Poly::constant(2, v[0].clone()));
        let qq = el.q.sub(&Poly::constant(2, v[1].clone()));
        let r = gcd::resultant(&p, &qq, 1)?;
        if r.is_zero() {
            return Err(Error::NotFiniteFibres);
        }
        degs.push((r.degree_in(0) as usize, v));
    }
    let d = degs[0].0;
    if degs.iter().any(|(e, _)| *e != d) || d != el.generic_degree() {
        let desc: Vec<_> = degs
            .iter()
            .map(|(e, v)| format!("{e} at ({}, {})", fmt_q(&v[0]), fmt_q(&v[1])))
            .collect();
        return Err(Error::InstabilityDetected(desc.join(", ")));
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberPoint {
    pub point: AlgebraicPoint,
    pub orbit: usize,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberSum {
    #[serde(with = "crate::exact::rational::serde_q_pair")]
    pub value: [Q; 2],
    pub points: Vec<FiberPoint>,
    pub sum: usize,
    pub deg_geo: usize,
    pub on_nonproper_set: bool,
    /// `sum == deg_geo` exactly when the value is off `A_F`.
    pub consistent: bool,
}

/// Solve `F = v`, add up local multiplicities and compare with the
/// geometric degree and membership of `v` in `A_F`.
pub fn check_fiber_sum(
    f: &PencilMap,
    v: &[Q; 2],
    deg_geo: usize,
    af: &NonProperSet,
    seed: u64,
    cap: usize,
) -> Result<FiberSum> {
    let g = f.translated(&v[0], &v[1])?;
    let mut points = Vec::new();
    let mut sum = 0;
    for z in common_zeros(g.p(), g.q(), cap)? {
        let m = local_multiplicity(f, &z, seed)?;
        sum += m as usize * z.orbit;
        points.push(FiberPoint {
            point: AlgebraicPoint::from_nf("A", z.field(), &z.point),
            orbit: z.orbit,
            multiplicity: m,
        });
    }
    let on_nonproper_set = af.contains(v);
    Ok(FiberSum {
        value: v.clone(),
        points,
        sum,
        deg_geo,
        on_nonproper_set,
        consistent: (sum == deg_geo) != on_nonproper_set,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegularValue {
    Regular,
    NotAttained,
    SingularFiber,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Predicates {
    pub keller: bool,
    pub regular_value: RegularValue,
    pub invertible: bool,
}

/// Status of `(0, 0)` as a value of `F`.
pub fn regular_value_at_origin(f: &PencilMap, cap: usize) -> Result<RegularValue> {
    let zs = common_zeros(f.p(), f.q(), cap)?;
    if zs.is_empty() {
        return Ok(RegularValue::NotAttained);
    }
    let j = poly_to_nf(&f.jacobian());
    let singular = zs.iter().any(|z| j.eval(&z.point).is_zero());
    Ok(if singular { RegularValue::SingularFiber } else { RegularValue::Regular })
}

pub fn is_keller(f: &PencilMap) -> bool {
    let j = f.jacobian();
    j.is_constant() && !j.is_zero()
}

/// The three conditions of the equivalence, for a map with finite fibres
/// of geometric degree `deg_geo`.
pub fn predicates(f: &PencilMap, deg_geo: usize, cap: usize) -> Result<Predicates> {
    Ok(Predicates {
        keller: is_keller(f),
        regular_value: regular_value_at_origin(f, cap)?,
        invertible: deg_geo == 1,
    })
}
