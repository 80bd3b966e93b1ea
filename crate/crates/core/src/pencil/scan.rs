//! Sampling the pencil: `r_λ` at pseudo-random parameters plus the two
//! coordinate points, the exact reducible locus, and the generic genus.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use super::gao::absolute_factor_count;
use super::locus::{reducible_locus_candidates, PencilParam, SpecialMember};
use super::rationality::{rationality_verdict, Rationality};
use super::{Lambda, PencilMap};
use crate::error::{Error, Result};
use crate::exact::newton::LatticePolygon;
use crate::exact::poly::Poly;
use crate::exact::Q;
use crate::sample::Sampler;

pub const DEFAULT_SAMPLES: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Genus {
    Genus { g: u32 },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sample {
    pub lambda: Lambda,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PencilProfile {
    pub sampled: Vec<Sample>,
    /// Confirmed members with more components than the generic one, and the
    /// constant member (`r = 0`) if any.
    pub special_candidates: Vec<SpecialMember>,
    pub unresolved: Vec<String>,
    pub generic_r: usize,
    /// Samples attaining `generic_r`, out of all samples.
    pub generic_share: (usize, usize),
    pub generic_genus: Genus,
    pub generic_rationality: Rationality,
    /// Verdicts for the irreducible members at `(1:0)` and `(0:1)`.
    pub coordinate_members: Vec<(Lambda, Rationality)>,
    pub total_reducibility: i64,
    pub locus_complete: bool,
}

impl PencilProfile {
    /// Every member irreducible, as certified by the locus search.
    pub fn all_members_irreducible(&self) -> bool {
        self.generic_r == 1 && self.special_candidates.is_empty() && self.locus_complete
    }

    pub fn generic_rational(&self) -> bool {
        self.generic_r == 1 && self.generic_rationality.is_rational()
    }

    /// Generic member rational and no individually checked member refuted.
    /// With `strict`, members whose verdict is unknown also block.
    pub fn members_rational(&self, strict: bool) -> bool {
        self.generic_rational()
            && self.coordinate_members.iter().all(|(_, v)| match v {
                Rationality::Rational { .. } => true,
                Rationality::NotRational { .. } => false,
                Rationality::Unknown { .. } => !strict,
            })
    }

    pub fn special_r(&self, l: &Lambda) -> Option<usize> {
        self.special_candidates
            .iter()
            .find(|s| s.param.rational() == Some(l))
            .map(|s| s.r)
    }
}

fn count(p: &Poly<Q>) -> Result<Option<usize>> {
    match absolute_factor_count(p) {
        Ok(r) => Ok(Some(r)),
        Err(Error::ConstantPolynomial) => Ok(None),
        Err(e) => Err(e),
    }
}

fn support_hull(p: &Poly<Q>, q: &Poly<Q>) -> LatticePolygon {
    let pts: Vec<(i64, i64)> = p
        .terms()
        .chain(q.terms())
        .map(|(m, _)| (m.exps()[0] as i64, m.exps()[1] as i64))
        .collect();
    LatticePolygon::hull(&pts)
}

pub fn scan_pencil(f: &PencilMap, n_samples: usize, seed: u64) -> Result<PencilProfile> {
    if n_samples < 20 {
        return Err(Error::Internal("a pencil scan needs at least 20 samples".into()));
    }
    if f.is_degenerate() {
        return Err(Error::DegeneratePencil);
    }
    let mut rng = Sampler::derived(seed, 0x5ca1);
    let mut seen = BTreeSet::new();
    let mut random = Vec::new();
    while random.len() < n_samples {
        let t = rng.rational(50, 20);
        if t == Q::from_integer(0.into()) || !seen.insert(t.clone()) {
            continue;
        }
        let l = Lambda::affine(t);
        if let Some(r) = count(&f.member(&l))? {
            random.push(Sample { lambda: l, r });
        }
    }
    let mut sampled = random.clone();
    let mut coordinate = Vec::new();
    for l in [Lambda::affine(Q::from_integer(0.into())), Lambda::infinity()] {
        let m = f.member(&l);
        if let Some(r) = count(&m)? {
            sampled.push(Sample { lambda: l.clone(), r });
            coordinate.push((l, m, r));
        }
    }
    let generic_r = sampled.iter().map(|s| s.r).min().expect("samples");
    let share = sampled.iter().filter(|s| s.r == generic_r).count();

    let (mut specials, unresolved, mut complete) = if generic_r == 1 {
        let loc = reducible_locus_candidates(f, seed)?;
        let ok = loc.complete && loc.generic_r == generic_r;
        (loc.confirmed, loc.unresolved, ok)
    } else {
        (Vec::new(), Vec::new(), false)
    };
    // any sampled jump must already be in the locus
    for s in &sampled {
        if s.r > generic_r && !specials.iter().any(|c| c.param.rational() == Some(&s.lambda)) {
            complete = false;
            specials.push(SpecialMember {
                param: PencilParam::Rational {
                    lambda: s.lambda.clone(),
                },
                orbit: 1,
                r: s.r,
            });
        }
    }
    if let Some(l) = f.constant_member() {
        specials.push(SpecialMember {
            param: PencilParam::Rational { lambda: l },
            orbit: 1,
            r: 0,
        });
    }
    specials.sort_by(|a, b| special_key(a).cmp(&special_key(b)));
    let total_reducibility = specials
        .iter()
        .map(|s| s.orbit as i64 * (s.r as i64 - generic_r as i64))
        .sum();

    let (generic_genus, generic_rationality) = if generic_r == 1 {
        generic_verdict(f, &random)?
    } else {
        (
            Genus::Unknown,
            Rationality::Unknown {
                reason: "generic member reducible".into(),
            },
        )
    };
    let mut coordinate_members = Vec::new();
    for (l, m, r) in coordinate {
        if r == 1 {
            coordinate_members.push((l, rationality_verdict(&m)?));
        }
    }
    Ok(PencilProfile {
        sampled,
        special_candidates: specials,
        unresolved,
        generic_r,
        generic_share: (share, n_samples + coordinate_members_len(f)),
        generic_genus,
        generic_rationality,
        coordinate_members,
        total_reducibility,
        locus_complete: complete,
    })
}

fn coordinate_members_len(f: &PencilMap) -> usize {
    [f.p(), f.q()].iter().filter(|p| !p.is_constant()).count()
}

fn special_key(s: &SpecialMember) -> (u8, String) {
    match &s.param {
        PencilParam::Rational { lambda } => (0, alloc::format!("{lambda}")),
        PencilParam::Conjugates { min_poly, .. } => (1, min_poly.clone()),
    }
}

/// Verdict on a sampled member whose Newton polygon and bidegree are those
/// of the whole pencil, so that it stands for the generic member.
fn generic_verdict(f: &PencilMap, random: &[Sample]) -> Result<(Genus, Rationality)> {
    let hull = support_hull(f.p(), f.q());
    let dx = f.p().degree_in(0).max(f.q().degree_in(0));
    let dy = f.p().degree_in(1).max(f.q().degree_in(1));
    for s in random.iter().filter(|s| s.r == 1) {
        let m = f.member(&s.lambda);
        if m.degree_in(0) != dx || m.degree_in(1) != dy || LatticePolygon::of_poly(&m)? != hull {
            continue;
        }
        let v = rationality_verdict(&m)?;
        let g = match v.genus() {
            Some(g) => Genus::Genus { g },
            None => Genus::Unknown,
        };
        return Ok((g, v));
    }
    Ok((
        Genus::Unknown,
        Rationality::Unknown {
            reason: "no sampled member with the generic Newton polygon".into(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::DEFAULT_SEED;

    fn scan(p: &str, q: &str) -> PencilProfile {
        scan_pencil(&PencilMap::parse(p, q).unwrap(), DEFAULT_SAMPLES, DEFAULT_SEED).unwrap()
    }

    #[test]
    fn counterexample_pencil() {
        let s = scan("x", "x^2 + y^3");
        assert_eq!(s.sampled.len(), 52);
        assert!(s.sampled.iter().all(|s| s.r == 1));
        assert_eq!(s.generic_r, 1);
        assert!(s.special_candidates.is_empty());
        assert_eq!(s.generic_genus, Genus::Genus { g: 1 });
        assert!(s.all_members_irreducible());
        assert!(!s.generic_rational());
    }

    #[test]
    fn hyperbola_pencil() {
        let s = scan("x*y", "x + y");
        assert_eq!(s.generic_r, 1);
        assert_eq!(s.total_reducibility, 1);
        assert_eq!(s.special_r(&Lambda::affine(Q::from_integer(0.into()))), Some(2));
        assert!(s.generic_rational());
    }

    #[test]
    fn lines() {
        let s = scan("x", "y");
        assert_eq!(s.generic_r, 1);
        assert_eq!(s.total_reducibility, 0);
        assert!(s.members_rational(true));
    }

    #[test]
    fn degenerate_pencil() {
        let f = PencilMap::parse("x + y", "2*x + 2*y").unwrap();
        assert_eq!(scan_pencil(&f, 50, 1), Err(Error::DegeneratePencil));
    }
}
