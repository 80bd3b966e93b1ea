//! Intersection multiplicity of `P - P(w)` and `Q - Q(w)` at `w`: move `w`
//! to the origin, shear so that `Q` is monic in `y` and no other point of
//! the fibre lies on `x = 0`, and read the order of `Res_y` at `x = 0`.

use super::top_at;
use crate::error::{Error, Result};
use crate::exact::field::Field;
use crate::exact::numfield::{poly_to_nf, NfElem};
use crate::exact::solve::ZeroOrbit;
use crate::exact::{gcd, Poly, Q};
use crate::pencil::PencilMap;
use crate::sample::Sampler;

const TAG_SHEAR: u64 = 0x7368_6561_72;
const ATTEMPTS: usize = 4;

fn order_after_shear(f: &PencilMap, w: &[NfElem; 2], c: &Q) -> Result<u32> {
    let x: Poly<NfElem> = Poly::var(2, 0);
    let y: Poly<NfElem> = Poly::var(2, 1);
    let c = NfElem::from_q(c);
    let images = [
        x.add(&y.scale(&c)).add(&Poly::constant(2, w[0].clone())),
        y.add(&Poly::constant(2, w[1].clone())),
    ];
    let local = |g: &Poly<Q>| {
        let g = poly_to_nf(g);
        let at = g.eval(w);
        g.compose(&images, 2).sub(&Poly::constant(2, at))
    };
    let r = gcd::resultant(&local(f.p()), &local(f.q()), 1)?;
    if r.is_zero() {
        return Err(Error::NotFiniteFibres);
    }
    Ok(r.order_in(0))
}

/// Multiplicity of `F` at the representative point of a fibre orbit.
pub fn local_multiplicity(f: &PencilMap, z: &ZeroOrbit, seed: u64) -> Result<u32> {
    multiplicity_in(f, &z.point, seed)
}

/// Multiplicity of `F` at a rational point.
pub fn local_multiplicity_at(f: &PencilMap, w: &[Q; 2], seed: u64) -> Result<u32> {
    multiplicity_in(f, &[NfElem::from_q(&w[0]), NfElem::from_q(&w[1])], seed)
}

fn multiplicity_in(f: &PencilMap, w: &[NfElem; 2], seed: u64) -> Result<u32> {
    let mut rng = Sampler::derived(seed, TAG_SHEAR);
    let mut draw = || loop {
        let c = rng.rational(40, 9);
        if !top_at(f.q(), &c).is_zero() {
            return c;
        }
    };
    for _ in 0..ATTEMPTS {
        let (c1, c2) = (draw(), draw());
        let (a, b) = (order_after_shear(f, w, &c1)?, order_after_shear(f, w, &c2)?);
        if a == b {
            return Ok(a);
        }
    }
    Err(Error::ShearDisagreement)
}

