//! Factorization over number fields (Trager's norm method) and adjoining
//! roots by primitive elements.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::factor;
use super::field::Field;
use super::multipoly::fmt_upoly;
use super::numfield::{eval_q_poly, norm, upoly_to_nf, NfElem, NumberField};
use super::rational::Q;
use super::roots;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Default cap on the degree of any number field built.
pub const DEFAULT_DEGREE_CAP: usize = 8;

fn shift_candidates() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 })
}

/// `f(x + c)`.
fn translate(f: &UPoly<NfElem>, c: &NfElem) -> UPoly<NfElem> {
    f.compose(&UPoly::from_coeffs(vec![c.clone(), NfElem::one()]))
}

/// Monic irreducible factors over `k` (or over Q when `k` is `None`) with
/// multiplicities.
pub fn factor_over(
    k: Option<&Arc<NumberField>>,
    f: &UPoly<NfElem>,
) -> Vec<(UPoly<NfElem>, u32)> {
    assert!(!f.is_zero());
    let mut out = Vec::new();
    for (part, e) in f.squarefree_decomposition() {
        if part.is_constant() {
            continue;
        }
        for g in factor_squarefree_over(k, &part) {
            out.push((g, e));
        }
    }
    out
}

fn factor_squarefree_over(k: Option<&Arc<NumberField>>, f: &UPoly<NfElem>) -> Vec<UPoly<NfElem>> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let k = match k {
        Some(k) if k.degree() > 1 => k,
        _ => {
            let fq = f.map(|c| c.to_q().expect("rational coefficients"));
            return factor::irreducible_factors(&fq)
                .iter()
                .map(|g| upoly_to_nf(g).monic())
                .collect();
        }
    };
    let alpha = k.gen();
    for s in shift_candidates() {
        let sa = alpha.mul(&NfElem::from_i64(s));
        let g = translate(f, &sa.neg());
        let n = norm(k, &g);
        if !n.is_squarefree() {
            continue;
        }
        let facs = factor::irreducible_factors(&n);
        if facs.len() == 1 {
            return vec![f.monic()];
        }
        let mut out: Vec<UPoly<NfElem>> = facs
            .iter()
            .map(|ni| {
                let h = UPoly::gcd(&upoly_to_nf(ni), &g);
                translate(&h, &sa).monic()
            })
            .collect();
        out.sort_by(|a, b| a.deg().cmp(&b.deg()));
        return out;
    }
    unreachable!()
}

/// A field `L = K(beta)` with `beta` a root of an irreducible `h` over `K`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub field: Option<Arc<NumberField>>,
    /// Image of the generator of `K` in `L` (`None` when `K = Q`).
    pub old_gen: Option<NfElem>,
    pub root: NfElem,
}

impl Extension {
    /// Map an element of `K` into `L`.
    pub fn embed(&self, e: &NfElem) -> NfElem {
        match (&self.old_gen, e.to_q()) {
            (_, Some(c)) => NfElem::from_q(&c),
            (Some(g), None) => eval_q_poly(e.rep(), g),
            (None, None) => panic!("element outside the base field"),
        }
    }
}

fn cap_error(cap: usize, polys: &[UPoly<Q>]) -> Error {
    Error::DegreeCapExceeded {
        cap,
        min_polys: polys.iter().map(|p| fmt_upoly(p, "t")).collect::<Vec<String>>(),
    }
}

/// Adjoin a root of `h` (irreducible over `k`) to `k`, keeping the complex
/// embedding of `k` fixed. Fails when the resulting degree exceeds `cap`.
pub fn extend(k: Option<&Arc<NumberField>>, h: &UPoly<NfElem>, cap: usize) -> Result<Extension> {
    let h = h.monic();
    if h.deg() == 1 {
        return Ok(Extension {
            field: k.cloned(),
            old_gen: k.map(|k| k.gen()),
            root: h.coeff(0).neg(),
        });
    }
    let k = match k {
        Some(k) if k.degree() > 1 => k,
        _ => {
            let hq = h.map(|c| c.to_q().expect("rational coefficients"));
            if hq.deg() > cap {
                return Err(cap_error(cap, &[hq.monic()]));
            }
            let b = roots::isolate(&hq, 8).remove(0);
            let l = NumberField::new(hq, b);
            return Ok(Extension {
                root: l.gen(),
                field: Some(l),
                old_gen: None,
            });
        }
    };
    let alpha = k.gen();
    for s in shift_candidates() {
        let sa = alpha.mul(&NfElem::from_i64(s));
        // gamma = beta + s*alpha is a root of N(t) = Norm(h(t - s*alpha)).
        let g = translate(&h, &sa.neg());
        let n = norm(k, &g);
        if !n.is_squarefree() {
            continue;
        }
        let n = n.monic();
        if n.deg() > cap {
            return Err(cap_error(cap, &[n]));
        }
        return Ok(build_extension(k, &h, &n, s));
    }
    unreachable!()
}

fn build_extension(k: &Arc<NumberField>, h: &UPoly<NfElem>, n: &UPoly<Q>, s: i64) -> Extension {
    let m = k.min_poly();
    let roots_n = roots::isolate(n, 16);
    // Recover alpha inside a provisional copy of L, then pick the root of
    // N for which alpha lands on K's embedding.
    let provisional = NumberField::new(n.clone(), roots_n[0].clone());
    let alpha_rep = alpha_in(&provisional, m, h, s);
    let mut bits = 16u32;
    let choice = loop {
        let nb = roots::isolate(n, bits);
        let mb = roots::isolate(m, bits);
        let target: Vec<usize> = mb
            .iter()
            .enumerate()
            .filter(|(_, b)| b.intersects(k.root_box()))
            .map(|(i, _)| i)
            .collect();
        if target.len() == 1 {
            let mut decided = true;
            let mut pick = None;
            for nbox in &nb {
                let img = roots::CBox::eval(&alpha_rep, nbox);
                let hits: Vec<usize> = mb
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.intersects(&img))
                    .map(|(i, _)| i)
                    .collect();
                if hits.len() != 1 {
                    decided = false;
                    break;
                }
                if hits[0] == target[0] && pick.is_none() {
                    pick = Some(nbox.clone());
                }
            }
            if decided {
                break pick.expect("some conjugate matches the embedding");
            }
        }
        bits *= 2;
    };
    let l = NumberField::new(n.clone(), choice);
    let old_gen = l.elem(alpha_rep);
    let root = l.gen().sub(&old_gen.mul(&NfElem::from_i64(s)));
    Extension {
        field: Some(l),
        old_gen: Some(old_gen),
        root,
    }
}

/// Representation of `alpha` in `L = Q[t]/N(t)`: the root of
/// `gcd(m(a), h(t - s a))` over `L`, which is linear.
fn alpha_in(l: &Arc<NumberField>, m: &UPoly<Q>, h: &UPoly<NfElem>, s: i64) -> UPoly<Q> {
    let gamma = l.gen();
    // h(gamma - s*a) as a polynomial in a over L, coefficients of h read
    // as polynomials in a.
    let lin = UPoly::from_coeffs(vec![gamma, NfElem::from_i64(-s)]);
    let mut acc: UPoly<NfElem> = UPoly::zero();
    for c in h.coeffs().iter().rev() {
        let ca = upoly_to_nf(c.rep());
        acc = acc.mul(&lin).add(&ca);
    }
    let g = UPoly::gcd(&upoly_to_nf(m), &acc);
    assert_eq!(g.deg(), 1, "primitive element recovery must be linear");
    g.coeff(0).neg().rep().clone()
}

/// Roots of `f` over the algebraic closure, grouped into Galois orbits
/// over `k`: each entry is an extension holding one root, the orbit size,
/// and the multiplicity.
pub fn root_orbits(
    k: Option<&Arc<NumberField>>,
    f: &UPoly<NfElem>,
    cap: usize,
) -> Result<Vec<(Extension, usize, u32)>> {
    let mut out = Vec::new();
    let mut over_cap = Vec::new();
    for (g, e) in factor_over(k, f) {
        match extend(k, &g, cap) {
            Ok(x) => out.push((x, g.deg(), e)),
            Err(Error::DegreeCapExceeded { min_polys, .. }) => over_cap.extend(min_polys),
            Err(err) => return Err(err),
        }
    }
    if !over_cap.is_empty() {
        return Err(Error::DegreeCapExceeded {
            cap,
            min_polys: over_cap,
        });
    }
    Ok(out)
}
