//! Exact search for the reducible members of a pencil. The Gao matrix of
//! `P + tQ` is linear in `t`; a member with more components than the
//! generic one has a larger kernel, so its parameter is a common root of
//! the maximal minors that are nonzero at a random point.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use serde::Serialize;

use super::gao::{absolute_factor_count, gao_matrix};
use super::{Lambda, PencilMap};
use crate::error::{Error, Result};
use crate::exact::field::Field;
use crate::exact::multipoly::fmt_upoly;
use crate::exact::numfield::{poly_to_nf, NfElem, NumberField};
use crate::exact::nf_factor::DEFAULT_DEGREE_CAP;
use crate::exact::poly::Poly;
use crate::exact::rational::q;
use crate::exact::{factor, linalg, roots, UPoly, Q};
use crate::sample::Sampler;

/// Parameter of a special member: a rational point, or the Galois orbit of
/// `(1 : t)` over the roots `t` of an irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PencilParam {
    Rational {
        lambda: Lambda,
    },
    Conjugates {
        min_poly: String,
        #[serde(skip)]
        t_poly: UPoly<Q>,
    },
}

impl PencilParam {
    pub fn rational(&self) -> Option<&Lambda> {
        match self {
            PencilParam::Rational { lambda } => Some(lambda),
            PencilParam::Conjugates { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecialMember {
    #[serde(flatten)]
    pub param: PencilParam,
    /// Number of parameter values in the orbit.
    pub orbit: usize,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReducibleLocus {
    pub generic_r: usize,
    pub confirmed: Vec<SpecialMember>,
    /// Candidate orbits whose field degree exceeded the cap.
    pub unresolved: Vec<String>,
    pub candidates: usize,
    /// True when every candidate was decided and the minor argument applies.
    pub complete: bool,
}

fn member_count(p: &Poly<Q>) -> Result<usize> {
    match absolute_factor_count(p) {
        Err(Error::ConstantPolynomial) => Ok(0),
        r => r,
    }
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Q], ys: &[Q]) -> UPoly<Q> {
    let n = xs.len();
    let mut dd: Vec<Q> = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - k]);
        }
    }
    let mut p = UPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UPoly::from_coeffs(alloc::vec![-xs[i].clone(), q(1)]);
        p = p.mul(&lin).add(&UPoly::constant(dd[i].clone()));
    }
    p
}

fn at(a: &[Vec<Q>], b: &[Vec<Q>], t: &Q) -> Vec<Vec<Q>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y * t).collect())
        .collect()
}

/// `det(A + tB)` restricted to rows `ri`, columns `ci`, as a polynomial.
fn minor_poly(a: &[Vec<Q>], b: &[Vec<Q>], ri: &[usize], ci: &[usize]) -> UPoly<Q> {
    let sa = linalg::minor(a, ri, ci);
    let sb = linalg::minor(b, ri, ci);
    let xs: Vec<Q> = (0..=ri.len() as i64).map(q).collect();
    let ys: Vec<Q> = xs.iter().map(|t| linalg::det(&at(&sa, &sb, t))).collect();
    interpolate(&xs, &ys)
}

/// The parameters `λ` with `r_λ` above the generic count, found among the
/// roots of a gcd of maximal minors and confirmed exactly.
pub fn reducible_locus_candidates(f: &PencilMap, seed: u64) -> Result<ReducibleLocus> {
    if f.is_degenerate() {
        return Err(Error::DegeneratePencil);
    }
    let (mut p, mut qq) = (f.p().clone(), f.q().clone());
    let deg = |i| p.degree_in(i).max(qq.degree_in(i));
    if deg(0) == 0 {
        p = p.remap(&[1, 0], 2);
        qq = qq.remap(&[1, 0], 2);
    }
    let (m, n) = (p.degree_in(0).max(qq.degree_in(0)), p.degree_in(1).max(qq.degree_in(1)));
    let mut rng = Sampler::derived(seed, 0x10c5);
    let t0 = loop {
        let t = rng.rational(50, 20);
        if !p.add(&qq.scale(&t)).is_constant() {
            break t;
        }
    };
    let generic_r = member_count(&p.add(&qq.scale(&t0)))?;
    let mut confirmed = Vec::new();
    let inf = member_count(&qq)?;
    if inf > generic_r {
        confirmed.push(SpecialMember {
            param: PencilParam::Rational {
                lambda: Lambda::infinity(),
            },
            orbit: 1,
            r: inf,
        });
    }
    if m == 0 || n == 0 {
        // members are univariate; no kernel argument
        return Ok(ReducibleLocus {
            generic_r,
            confirmed,
            unresolved: Vec::new(),
            candidates: 1,
            complete: false,
        });
    }
    let (mut a, ncols) = gao_matrix(&p, m, n);
    let (mut b, _) = gao_matrix(&qq, m, n);
    let keep: Vec<bool> = a
        .iter()
        .zip(&b)
        .map(|(ra, rb)| ra.iter().chain(rb).any(|v| !v.is_zero()))
        .collect();
    let mut it = keep.iter();
    a.retain(|_| *it.next().unwrap());
    let mut it = keep.iter();
    b.retain(|_| *it.next().unwrap());

    let e1 = linalg::echelon(&at(&a, &b, &t0));
    let generic_nullity = ncols - e1.rank;
    // a second spanning minor from the rows taken in reverse order
    let t1 = rng.rational(50, 20);
    let rev_a: Vec<Vec<Q>> = a.iter().rev().cloned().collect();
    let rev_b: Vec<Vec<Q>> = b.iter().rev().cloned().collect();
    let e2 = linalg::echelon(&at(&rev_a, &rev_b, &t1));
    let d1 = minor_poly(&a, &b, &e1.pivot_rows, &e1.pivot_cols);
    let mut g = d1;
    if e2.rank == e1.rank {
        let d2 = minor_poly(&rev_a, &rev_b, &e2.pivot_rows, &e2.pivot_cols);
        g = UPoly::gcd(&g, &d2);
    }
    let mut unresolved = Vec::new();
    let mut candidates = 1;
    if g.deg() > 0 {
        for h in factor::irreducible_factors(&g) {
            candidates += 1;
            let h = h.monic();
            if h.deg() == 1 {
                let t = -h.coeff(0);
                let r = member_count(&p.add(&qq.scale(&t)))?;
                if r > generic_r {
                    confirmed.push(SpecialMember {
                        param: PencilParam::Rational {
                            lambda: Lambda::affine(t),
                        },
                        orbit: 1,
                        r,
                    });
                }
                continue;
            }
            if h.deg() > DEFAULT_DEGREE_CAP {
                unresolved.push(fmt_upoly(&h, "t"));
                continue;
            }
            let k: Arc<NumberField> = NumberField::new(h.clone(), roots::isolate(&h, 8).remove(0));
            let theta: NfElem = k.gen();
            let member = poly_to_nf(&p).add(&poly_to_nf(&qq).scale(&theta));
            let r = match absolute_factor_count(&member) {
                Err(Error::ConstantPolynomial) => 0,
                r => r?,
            };
            if r > generic_r {
                confirmed.push(SpecialMember {
                    param: PencilParam::Conjugates {
                        min_poly: fmt_upoly(&h, "t"),
                        t_poly: h.clone(),
                    },
                    orbit: h.deg(),
                    r,
                });
            }
        }
    }
    let complete = unresolved.is_empty() && generic_nullity == generic_r;
    Ok(ReducibleLocus {
        generic_r,
        confirmed,
        unresolved,
        candidates,
        complete,
    })
}
