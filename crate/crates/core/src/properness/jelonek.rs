//! The non-proper value set. With the shear of [`Elimination`], a value
//! loses solutions exactly when `lc_x R` vanishes there, so the
//! irreducible factors of that coefficient are the components of `A_F`.
//! The unsheared leading coefficients give further candidates; those not
//! among the components are reported as rejected.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use super::Elimination;
use crate::error::{Error, Result};
use crate::exact::algebraic::AlgebraicNumber;
use crate::exact::bivariate::{irreducible_factors, poly_cmp};
use crate::exact::factor;
use crate::exact::field::Field;
use crate::exact::multipoly::{fmt_poly, normalize};
use crate::exact::nf_factor::{root_orbits, DEFAULT_DEGREE_CAP};
use crate::exact::numfield::{poly_to_nf, upoly_to_nf, NfElem};
use crate::exact::rational::{fmt_q, q};
use crate::exact::{gcd, Poly, Q};
use crate::pencil::PencilMap;
use crate::sample::Sampler;

const UV: [&str; 2] = ["u", "v"];
const TAG_LINE: u64 = 0x6c69_6e65;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EscapeWitness {
    /// A curve `(x(t), y(t))` with one coordinate of `F` held at a free
    /// value; as `t -> oo` the point leaves every compact set while `F`
    /// tends to `limit`, a point of the component for every free value.
    Family { x: String, y: String, limit: [String; 2] },
    /// At a point of the component on the given line, `F` has fewer
    /// solutions (with multiplicity) than its geometric degree.
    FiberDrop {
        line: String,
        point: [AlgebraicNumber; 2],
        count: usize,
        deg_geo: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AfComponent {
    #[serde(skip)]
    pub poly: Poly<Q>,
    pub equation: String,
    pub is_line_through_origin: bool,
    /// Degrees of `p`, `q` on a matching dicritical component.
    pub parametrization_degrees: Option<[u32; 2]>,
    pub witness: EscapeWitness,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Unresolved {
    pub equation: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NonProperSet {
    pub components: Vec<AfComponent>,
    /// Candidates along which no solution escapes.
    pub rejected: Vec<String>,
    pub unresolved: Vec<Unresolved>,
    pub empty: bool,
}

impl NonProperSet {
    pub fn contains(&self, v: &[Q; 2]) -> bool {
        self.components.iter().any(|c| c.poly.eval(v).is_zero())
    }

    pub fn polys(&self) -> Vec<Poly<Q>> {
        self.components.iter().map(|c| c.poly.clone()).collect()
    }
}

fn factors_uv(p: &Poly<Q>) -> Vec<Poly<Q>> {
    if p.is_constant() {
        return Vec::new();
    }
    irreducible_factors(p).iter().map(normalize).collect()
}

/// `lc_x Res_y(P - u, Q - v)` in `(u, v)` for the map as given.
fn unsheared_lc(p: &Poly<Q>, qq: &Poly<Q>, elim: usize) -> Result<Poly<Q>> {
    let keep = 1 - elim;
    let lift = |g: &Poly<Q>, var: usize| g.remap(&[0, 1], 4).sub(&Poly::var(4, var));
    let r = gcd::resultant(&lift(p, 2), &lift(qq, 3), elim)?;
    if r.is_zero() {
        return Err(Error::NotFiniteFibres);
    }
    Ok(r.lc_in(keep).remap(&[0, 0, 0, 1], 2))
}

pub fn nonproper_set(f: &PencilMap, seed: u64) -> Result<NonProperSet> {
    let el = Elimination::new(f)?;
    nonproper_set_with(f, &el, seed)
}

pub fn nonproper_set_with(f: &PencilMap, el: &Elimination, seed: u64) -> Result<NonProperSet> {
    let truth = factors_uv(&el.drop_locus);
    let mut cands = truth.clone();
    for elim in [1, 0] {
        cands.extend(factors_uv(&unsheared_lc(f.p(), f.q(), elim)?));
    }
    cands.sort_by(poly_cmp);
    cands.dedup();
    let deg_geo = el.generic_degree();
    let mut rng = Sampler::derived(seed, TAG_LINE);
    let mut out = NonProperSet {
        components: Vec::new(),
        rejected: Vec::new(),
        unresolved: Vec::new(),
        empty: true,
    };
    for h in cands {
        let equation = fmt_poly(&h, &UV);
        if !truth.contains(&h) {
            out.rejected.push(equation);
            continue;
        }
        let witness = match family_witness(f, &h) {
            Some(w) => Ok(w),
            None => fiber_drop_witness(el, &h, deg_geo, &mut rng),
        };
        match witness {
            Ok(witness) => out.components.push(AfComponent {
                is_line_through_origin: h.total_degree() == 1 && h.constant_term().is_zero(),
                poly: h,
                equation,
                parametrization_degrees: None,
                witness,
            }),
            Err(e) => out.unresolved.push(Unresolved {
                equation,
                reason: format!("{e}"),
            }),
        }
    }
    out.empty = out.components.is_empty() && out.unresolved.is_empty();
    Ok(out)
}

/// A rational function in `(t, s)`.
#[derive(Clone, Debug)]
struct Frac {
    num: Poly<Q>,
    den: Poly<Q>,
}

impl Frac {
    fn fmt(&self, names: &[&str]) -> String {
        let c = self.den.lc();
        let num = self.num.scale(&c.inv());
        let den = self.den.scale(&c.inv());
        if den.is_constant() {
            return fmt_poly(&num.scale(&den.constant_term().inv()), names);
        }
        let wrap = |p: &Poly<Q>| {
            if p.len() > 1 {
                format!("({})", fmt_poly(p, names))
            } else {
                fmt_poly(p, names)
            }
        };
        format!("{}/{}", wrap(&num), wrap(&den))
    }
}

/// `g(a/d, b/e)` as a fraction, for `g` in two variables.
fn compose_frac(g: &Poly<Q>, a: &Frac, b: &Frac) -> Frac {
    let (da, db) = (g.degree_in(0), g.degree_in(1));
    let mut num = Poly::zero(2);
    for (m, c) in g.terms() {
        let (i, j) = (m.exps()[0], m.exps()[1]);
        let t = a
            .num
            .pow(i)
            .mul(&a.den.pow(da - i))
            .mul(&b.num.pow(j))
            .mul(&b.den.pow(db - j));
        num = num.add(&t.scale(c));
    }
    Frac {
        num,
        den: a.den.pow(da).mul(&b.den.pow(db)),
    }
}

/// Limit as `t -> oo` of a fraction in `(t, s)`, for generic `s`.
fn limit_at_infinity(r: &Frac) -> Option<Frac> {
    let (dn, dd) = (r.num.degree_in(0), r.den.degree_in(0));
    if r.num.is_zero() || dn < dd {
        return Some(Frac {
            num: Poly::zero(2),
            den: Poly::one(2),
        });
    }
    (dn == dd).then(|| Frac {
        num: r.num.lc_in(0),
        den: r.den.lc_in(0),
    })
}

/// Hold `F_k = s` and solve for the coordinate `lin` when it occurs
/// linearly; the other coordinate is the parameter `t`.
fn family_witness(f: &PencilMap, h: &Poly<Q>) -> Option<EscapeWitness> {
    let coords = [f.p(), f.q()];
    for k in [1usize, 0] {
        for lin in [0usize, 1] {
            let g = coords[k];
            if g.degree_in(lin) != 1 {
                continue;
            }
            // g = a x_lin + b; in (t, s) with t the other coordinate
            let parts = g.to_univariate(lin);
            let mut map = [0usize; 2];
            map[lin] = 1;
            let rename = |p: &Poly<Q>| p.remap(&map, 2);
            let a = rename(&parts[1]);
            let b = rename(&parts[0]).sub(&Poly::var(2, 1));
            if a.is_zero() {
                continue;
            }
            let sol = Frac { num: b.neg(), den: a };
            let t = Frac {
                num: Poly::var(2, 0),
                den: Poly::one(2),
            };
            let (xf, yf) = if lin == 0 { (sol, t) } else { (t, sol) };
            let image = compose_frac(coords[1 - k], &xf, &yf);
            let Some(lim) = limit_at_infinity(&image) else {
                continue;
            };
            let s = Frac {
                num: Poly::var(2, 1),
                den: Poly::one(2),
            };
            let point = if k == 1 { [lim, s] } else { [s, lim] };
            if !compose_frac(h, &point[0], &point[1]).num.is_zero() {
                continue;
            }
            let names = ["t", UV[k]];
            return Some(EscapeWitness::Family {
                x: xf.fmt(&names),
                y: yf.fmt(&names),
                limit: [point[0].fmt(&names), point[1].fmt(&names)],
            });
        }
    }
    None
}

fn fiber_drop_witness(el: &Elimination, h: &Poly<Q>, deg_geo: usize, rng: &mut Sampler) -> Result<EscapeWitness> {
    // cut with v = v0 when h involves u, else with u = u0
    let free = if h.involves(0) { 1 } else { 0 };
    let solve = 1 - free;
    for _ in 0..8 {
        let c = rng.rational(20, 3);
        let hl = h.eval_var(free, &c).to_upoly(solve).expect("univariate");
        if hl.deg() != h.degree_in(solve) as usize || !hl.is_squarefree() {
            continue;
        }
        let (ext, _, _) = root_orbits(None, &upoly_to_nf(&hl), DEFAULT_DEGREE_CAP)?
            .into_iter()
            .next()
            .expect("non-constant");
        let mut pt = [NfElem::zero(), NfElem::zero()];
        pt[free] = NfElem::from_q(&c);
        pt[solve] = ext.root.clone();
        let s = poly_to_nf(&el.r).eval_var(1, &pt[0]).eval_var(2, &pt[1]);
        if s.is_zero() {
            return Err(Error::NotFiniteFibres);
        }
        let count = s.degree_in(0) as usize;
        if count >= deg_geo {
            continue;
        }
        let num = |e: &NfElem| match (e.to_q(), ext.field.as_ref()) {
            (Some(r), _) => AlgebraicNumber::rational(r),
            (None, Some(k)) => AlgebraicNumber::from_nf(k, e),
            (None, None) => unreachable!("irrational element without a field"),
        };
        return Ok(EscapeWitness::FiberDrop {
            line: format!("{} = {}", UV[free], fmt_q(&c)),
            point: [num(&pt[0]), num(&pt[1])],
            count,
            deg_geo,
        });
    }
    Err(Error::WitnessConstructionFailed)
}

/// A rational point of the curve `h = 0`, when one is found by solving a
/// linear variable or by small integer sections.
pub fn rational_point_on(h: &Poly<Q>, rng: &mut Sampler) -> Option<[Q; 2]> {
    for lin in [0usize, 1] {
        if h.degree_in(lin) != 1 {
            continue;
        }
        let free = 1 - lin;
        let parts = h.to_univariate(lin);
        for _ in 0..16 {
            let c = Q::from_integer(rng.int(-9, 9).into());
            let mut at = [q(0), q(0)];
            at[free] = c.clone();
            let a = parts[1].eval(&at);
            if a.is_zero() {
                continue;
            }
            at[lin] = -parts[0].eval(&at) / a;
            return Some(at);
        }
    }
    for k in 0..16i64 {
        for free in [0usize, 1] {
            let c = q(k / 2 * if k % 2 == 0 { 1 } else { -1 });
            let hl = h.eval_var(free, &c).to_upoly(1 - free).expect("univariate");
            if hl.is_zero() || hl.deg() == 0 {
                continue;
            }
            if let Some(r) = factor::rational_roots(&hl).into_iter().next() {
                let mut at = [q(0), q(0)];
                at[free] = c;
                at[1 - free] = r;
                return Some(at);
            }
        }
    }
    None
}
