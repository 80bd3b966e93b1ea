//! Degree constraint on the non-proper set of a Keller map: its
//! components are images of polynomial curves whose coordinate degrees
//! are in the ratio `deg P : deg Q`, and none is a line through the
//! origin. A violation therefore rules out a constant Jacobian.

use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use super::{is_keller, NonProperSet};
use crate::exact::multipoly::normalize;
use crate::pencil::PencilMap;
use crate::resolution::ResolutionTree;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem4Verdict {
    pub component: String,
    pub matched: bool,
    pub degrees: Option<[u32; 2]>,
    pub ratio_holds: Option<bool>,
    pub line_through_origin: bool,
    pub forbids_keller: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem4Report {
    pub verdicts: Vec<Theorem4Verdict>,
    pub keller: bool,
    /// A forbidding component implies `keller == false`.
    pub contrapositive_holds: bool,
}

fn dicritical_degrees(tree: &ResolutionTree, h: &crate::exact::Poly<crate::exact::Q>) -> Option<[u32; 2]> {
    let h = normalize(h);
    tree.components
        .iter()
        .filter(|c| c.dicritical)
        .filter_map(|c| c.image.as_ref())
        .find(|im| im.polys.iter().any(|p| normalize(p) == h))
        .map(|im| im.degrees)
}

/// Record on every component the degrees of `p`, `q` along a dicritical
/// component of the resolution whose image it is.
pub fn attach_parametrizations(af: &mut NonProperSet, tree: &ResolutionTree) {
    for c in &mut af.components {
        c.parametrization_degrees = dicritical_degrees(tree, &c.poly);
    }
}

pub fn theorem4_ratio_check(f: &PencilMap, af: &NonProperSet, tree: &ResolutionTree) -> Theorem4Report {
    let (dp, dq) = (f.deg_p(), f.deg_q());
    let verdicts: Vec<Theorem4Verdict> = af
        .components
        .iter()
        .map(|c| {
            let degrees = dicritical_degrees(tree, &c.poly);
            let ratio_holds = degrees.map(|[a, b]| a * dq == b * dp);
            let forbids_keller = c.is_line_through_origin || ratio_holds == Some(false);
            Theorem4Verdict {
                component: c.equation.clone(),
                matched: degrees.is_some(),
                degrees,
                ratio_holds,
                line_through_origin: c.is_line_through_origin,
                forbids_keller,
            }
        })
        .collect();
    let keller = is_keller(f);
    let contrapositive_holds = !(keller && verdicts.iter().any(|v| v.forbids_keller));
    Theorem4Report {
        verdicts,
        keller,
        contrapositive_holds,
    }
}
