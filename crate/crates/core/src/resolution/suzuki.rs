//! Euler characteristic bookkeeping for a pencil of rational curves:
//! `sum_λ (χ(C_λ) - 2) = χ(X) - 4` with `χ(C_λ) = r_λ + m_λ + 1` and
//! `χ(X) = m + 2`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use super::ResolutionTree;
use crate::error::{Error, Result};
use crate::pencil::{PencilParam, PencilProfile};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuzukiTerm {
    pub lambda: String,
    pub orbit: usize,
    pub r: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuzukiCheck {
    pub terms: Vec<SuzukiTerm>,
    /// `sum orbit * (r + m - 1)` over the special members.
    pub lhs: i64,
    /// `m - 2`.
    pub rhs: i64,
    pub pass: bool,
}

pub fn euler_bookkeeping(tree: &ResolutionTree, profile: &PencilProfile) -> Result<SuzukiCheck> {
    if !profile.generic_rational() {
        return Err(Error::HypothesisNotCertified(format!(
            "generic member not certified rational: {:?}",
            profile.generic_rationality
        )));
    }
    if !profile.locus_complete {
        return Err(Error::HypothesisNotCertified("reducible locus incomplete".into()));
    }
    let mut terms: BTreeMap<String, SuzukiTerm> = BTreeMap::new();
    for s in &profile.special_candidates {
        let key = match &s.param {
            PencilParam::Rational { lambda } => format!("{lambda}"),
            PencilParam::Conjugates { min_poly, .. } => format!("P + t*Q, {min_poly}"),
        };
        terms.insert(
            key.clone(),
            SuzukiTerm {
                lambda: key,
                orbit: s.orbit,
                r: s.r,
                m: 0,
            },
        );
    }
    for l in &tree.m_lambda {
        terms
            .entry(l.lambda.key.clone())
            .or_insert_with(|| SuzukiTerm {
                lambda: l.lambda.key.clone(),
                orbit: l.lambda.orbit,
                r: profile.generic_r,
                m: 0,
            })
            .m = l.m;
    }
    let terms: Vec<SuzukiTerm> = terms.into_values().collect();
    let lhs = terms
        .iter()
        .map(|t| t.orbit as i64 * (t.r as i64 + t.m as i64 - 1))
        .sum();
    let rhs = tree.m as i64 - 2;
    Ok(SuzukiCheck {
        terms,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}
