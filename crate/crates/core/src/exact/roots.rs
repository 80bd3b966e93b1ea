//! Complex root isolation for squarefree rational polynomials.
//!
//! Approximations come from Aberth iteration in fixed-point complex
//! arithmetic. They are then certified exactly: with Weierstrass
//! corrections `W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`, the disks
//! `|z - z_i| <= n |W_i|` cover all roots and a connected union of `k` of
//! them holds exactly `k` roots. Pairwise disjoint enclosing boxes
//! therefore isolate one root each.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{sqrt_upper, Q};
use super::upoly::UPoly;

/// Closed axis-parallel rectangle with rational corners.
#[derive(Clone, PartialEq, Eq, Debug, Hash, serde::Serialize)]
pub struct CBox {
    #[serde(with = "super::rational::serde_q")]
    pub re_lo: Q,
    #[serde(with = "super::rational::serde_q")]
    pub re_hi: Q,
    #[serde(with = "super::rational::serde_q")]
    pub im_lo: Q,
    #[serde(with = "super::rational::serde_q")]
    pub im_hi: Q,
}

impl CBox {
    pub fn point(re: Q, im: Q) -> Self {
        CBox {
            re_lo: re.clone(),
            re_hi: re,
            im_lo: im.clone(),
            im_hi: im,
        }
    }

    pub fn around(re: &Q, im: &Q, r: &Q) -> Self {
        CBox {
            re_lo: re - r,
            re_hi: re + r,
            im_lo: im - r,
            im_hi: im + r,
        }
    }

    pub fn center(&self) -> (Q, Q) {
        let two = Q::from_integer(BigInt::from(2));
        (
            (&self.re_lo + &self.re_hi) / &two,
            (&self.im_lo + &self.im_hi) / &two,
        )
    }

    pub fn width(&self) -> Q {
        let a = &self.re_hi - &self.re_lo;
        let b = &self.im_hi - &self.im_lo;
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re_lo <= o.re_hi
            && o.re_lo <= self.re_hi
            && self.im_lo <= o.im_hi
            && o.im_lo <= self.im_hi
    }

    pub fn contains_box(&self, o: &Self) -> bool {
        self.re_lo <= o.re_lo && o.re_hi <= self.re_hi && self.im_lo <= o.im_lo && o.im_hi <= self.im_hi
    }

    pub fn contains(&self, re: &Q, im: &Q) -> bool {
        &self.re_lo <= re && re <= &self.re_hi && &self.im_lo <= im && im <= &self.im_hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Q::zero(), &Q::zero())
    }

    pub fn meets_real_axis(&self) -> bool {
        self.im_lo <= Q::zero() && Q::zero() <= self.im_hi
    }

    pub fn add(&self, o: &Self) -> Self {
        CBox {
            re_lo: &self.re_lo + &o.re_lo,
            re_hi: &self.re_hi + &o.re_hi,
            im_lo: &self.im_lo + &o.im_lo,
            im_hi: &self.im_hi + &o.im_hi,
        }
    }

    pub fn neg(&self) -> Self {
        CBox {
            re_lo: -&self.re_hi,
            re_hi: -&self.re_lo,
            im_lo: -&self.im_hi,
            im_hi: -&self.im_lo,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a_lo, a_hi) = imul(&self.re_lo, &self.re_hi, &o.re_lo, &o.re_hi);
        let (b_lo, b_hi) = imul(&self.im_lo, &self.im_hi, &o.im_lo, &o.im_hi);
        let (c_lo, c_hi) = imul(&self.re_lo, &self.re_hi, &o.im_lo, &o.im_hi);
        let (d_lo, d_hi) = imul(&self.im_lo, &self.im_hi, &o.re_lo, &o.re_hi);
        CBox {
            re_lo: a_lo - b_hi,
            re_hi: a_hi - b_lo,
            im_lo: c_lo + d_lo,
            im_hi: c_hi + d_hi,
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.mul(&CBox::point(c.clone(), Q::zero()))
    }

    /// Enclosure of `1/z`; `None` when the box may contain zero.
    pub fn inv(&self) -> Option<Self> {
        let (r2_lo, r2_hi) = isq(&self.re_lo, &self.re_hi);
        let (i2_lo, i2_hi) = isq(&self.im_lo, &self.im_hi);
        let m_lo = r2_lo + i2_lo;
        if !m_lo.is_positive() {
            return None;
        }
        // 1/z = conj(z)/|z|^2 with |z|^2 in [m_lo, m_hi]
        let m_hi = r2_hi + i2_hi;
        let (lo, hi) = (m_hi.recip(), m_lo.recip());
        let (re_lo, re_hi) = imul(&self.re_lo, &self.re_hi, &lo, &hi);
        let (im_lo, im_hi) = imul(&-&self.im_hi, &-&self.im_lo, &lo, &hi);
        Some(CBox {
            re_lo,
            re_hi,
            im_lo,
            im_hi,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = CBox::point(Q::one(), Q::zero());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Interval evaluation of a rational polynomial by Horner's rule.
    pub fn eval(p: &UPoly<Q>, z: &Self) -> Self {
        let mut acc = CBox::point(Q::zero(), Q::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(z).add(&CBox::point(c.clone(), Q::zero()));
        }
        acc
    }
}

fn imul(a: &Q, b: &Q, c: &Q, d: &Q) -> (Q, Q) {
    let ps = [a * c, a * d, b * c, b * d];
    let mut lo = ps[0].clone();
    let mut hi = ps[0].clone();
    for p in &ps[1..] {
        if p < &lo {
            lo = p.clone();
        }
        if p > &hi {
            hi = p.clone();
        }
    }
    (lo, hi)
}

fn isq(a: &Q, b: &Q) -> (Q, Q) {
    let (a2, b2) = (a * a, b * b);
    let hi = if a2 > b2 { a2.clone() } else { b2.clone() };
    let lo = if !a.is_positive() && !b.is_negative() {
        Q::zero()
    } else if a2 < b2 {
        a2
    } else {
        b2
    };
    (lo, hi)
}

/// Fixed-point complex number with implicit scale `2^bits`.
#[derive(Clone, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn zero() -> Self {
        Fx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }
    fn add(&self, o: &Self) -> Self {
        Fx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Fx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Self, bits: u32) -> Self {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> bits,
            im: (&self.re * &o.im + &self.im * &o.re) >> bits,
        }
    }
    fn div(&self, o: &Self, bits: u32) -> Option<Self> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let nr = &self.re * &o.re + &self.im * &o.im;
        let ni = &self.im * &o.re - &self.re * &o.im;
        Some(Fx {
            re: (nr << bits) / &den,
            im: (ni << bits) / &den,
        })
    }
    fn rescale(&self, from: u32, to: u32) -> Self {
        Fx {
            re: &self.re << (to - from),
            im: &self.im << (to - from),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn to_q(&self, bits: u32) -> (Q, Q) {
        let d = BigInt::one() << bits;
        (
            Q::new(self.re.clone(), d.clone()),
            Q::new(self.im.clone(), d),
        )
    }
    /// max(|re|, |im|) as a raw mantissa.
    fn norm_inf(&self) -> BigInt {
        let a = self.re.abs();
        let b = self.im.abs();
        if a > b {
            a
        } else {
            b
        }
    }
}

fn q_to_fx(c: &Q, bits: u32) -> BigInt {
    (c.numer() << bits) / c.denom()
}

/// Isolating boxes for all complex roots of a squarefree polynomial, each
/// of width at most `2^-min_bits`. Boxes are returned sorted by centre
/// (real part, then imaginary part).
pub fn isolate(p: &UPoly<Q>, min_bits: u32) -> Vec<CBox> {
    let n = p.deg();
    assert!(n >= 1, "isolate needs a non-constant polynomial");
    if n == 1 {
        let r = -p.coeff(0) / p.coeff(1);
        return vec![CBox::point(r, Q::zero())];
    }
    let mut bits: u32 = 64.max(min_bits + 8);
    let mut coeffs: Vec<Fx> = p
        .coeffs()
        .iter()
        .map(|c| Fx {
            re: q_to_fx(c, bits),
            im: BigInt::zero(),
        })
        .collect();
    let mut z = initial_points(p, bits);
    loop {
        aberth(&coeffs, &mut z, bits);
        if let Some(boxes) = certify(p, &z, bits, min_bits) {
            return boxes;
        }
        let nb = bits * 2;
        z = z.iter().map(|w| w.rescale(bits, nb)).collect();
        bits = nb;
        coeffs = p
            .coeffs()
            .iter()
            .map(|c| Fx {
                re: q_to_fx(c, bits),
                im: BigInt::zero(),
            })
            .collect();
        assert!(bits <= 1 << 16, "root isolation failed to converge");
    }
}

fn initial_points(p: &UPoly<Q>, bits: u32) -> Vec<Fx> {
    let n = p.deg();
    // Cauchy bound 1 + max |a_i / a_n|.
    let lc = p.lc();
    let mut rad = Q::zero();
    for c in &p.coeffs()[..n] {
        let r = (c / &lc).abs();
        if r > rad {
            rad = r;
        }
    }
    rad += Q::one();
    let rad = q_to_fx(&rad, bits);
    // Powers of a rational point on the unit circle, offset from the axes.
    let u = Fx {
        re: q_to_fx(&Q::new(3.into(), 5.into()), bits),
        im: q_to_fx(&Q::new(4.into(), 5.into()), bits),
    };
    let mut w = Fx {
        re: rad.clone() * 2 / 3,
        im: rad / 7,
    };
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(w.clone());
        w = w.mul(&u, bits);
        // shrink slightly so points do not sit on one circle
        w = Fx {
            re: &w.re * 31 / 32,
            im: &w.im * 31 / 32,
        };
    }
    out
}

fn horner(coeffs: &[Fx], z: &Fx, bits: u32) -> (Fx, Fx) {
    let mut v = Fx::zero();
    let mut d = Fx::zero();
    for c in coeffs.iter().rev() {
        d = d.mul(z, bits).add(&v);
        v = v.mul(z, bits).add(c);
    }
    (v, d)
}

fn aberth(coeffs: &[Fx], z: &mut [Fx], bits: u32) {
    let n = z.len();
    let tol = BigInt::one() << (bits / 4).max(4);
    let nudge = Fx {
        re: BigInt::one() << (bits / 2),
        im: BigInt::one() << (bits / 3),
    };
    for _ in 0..(40 + 4 * n) {
        let mut max_step = BigInt::zero();
        for i in 0..n {
            let (v, d) = horner(coeffs, &z[i], bits);
            if v.is_zero() {
                continue;
            }
            let ratio = match v.div(&d, bits) {
                Some(r) => r,
                None => {
                    z[i] = z[i].add(&nudge);
                    max_step = &max_step + &nudge.re;
                    continue;
                }
            };
            let mut s = Fx::zero();
            let one = Fx {
                re: BigInt::one() << bits,
                im: BigInt::zero(),
            };
            let mut clash = false;
            for j in 0..n {
                if j == i {
                    continue;
                }
                match one.div(&z[i].sub(&z[j]), bits) {
                    Some(t) => s = s.add(&t),
                    None => clash = true,
                }
            }
            if clash {
                z[i] = z[i].add(&nudge);
                max_step = &max_step + &nudge.re;
                continue;
            }
            let den = one.sub(&ratio.mul(&s, bits));
            let w = ratio.div(&den, bits).unwrap_or(ratio);
            let step = w.norm_inf();
            if step > max_step {
                max_step = step;
            }
            z[i] = z[i].sub(&w);
        }
        if max_step < tol {
            break;
        }
    }
}

/// Exact certification of the approximations; `None` if the boxes overlap
/// or are wider than requested.
fn certify(p: &UPoly<Q>, z: &[Fx], bits: u32, min_bits: u32) -> Option<Vec<CBox>> {
    let n = z.len();
    let pts: Vec<(Q, Q)> = z.iter().map(|w| w.to_q(bits)).collect();
    let lc = p.lc();
    let nq = Q::from_integer(BigInt::from(n));
    let min_r = Q::new(BigInt::one(), BigInt::one() << bits);
    let max_r = Q::new(BigInt::one(), BigInt::one() << (min_bits + 1));
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let (vr, vi) = eval_exact(p, &pts[i]);
        let (mut dr, mut di) = (lc.clone(), Q::zero());
        for j in 0..n {
            if j == i {
                continue;
            }
            let (ar, ai) = (&pts[i].0 - &pts[j].0, &pts[i].1 - &pts[j].1);
            let nr = &dr * &ar - &di * &ai;
            let ni = &dr * &ai + &di * &ar;
            dr = nr;
            di = ni;
        }
        let den = &dr * &dr + &di * &di;
        if den.is_zero() {
            return None;
        }
        let w2 = (&vr * &vr + &vi * &vi) / den;
        let mut r = sqrt_upper(&(&nq * &nq * w2), bits + 8);
        if r < min_r {
            r = min_r.clone();
        }
        if r > max_r {
            return None;
        }
        radii.push(r);
    }
    let boxes: Vec<CBox> = (0..n)
        .map(|i| CBox::around(&pts[i].0, &pts[i].1, &radii[i]))
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
    }
    let mut boxes = boxes;
    boxes.sort_by(box_order);
    Some(boxes)
}

pub fn box_order(a: &CBox, b: &CBox) -> Ordering {
    let (ar, ai) = a.center();
    let (br, bi) = b.center();
    ar.cmp(&br).then(ai.cmp(&bi))
}

fn eval_exact(p: &UPoly<Q>, z: &(Q, Q)) -> (Q, Q) {
    let (mut vr, mut vi) = (Q::zero(), Q::zero());
    for c in p.coeffs().iter().rev() {
        let nr = &vr * &z.0 - &vi * &z.1 + c;
        let ni = &vr * &z.1 + &vi * &z.0;
        vr = nr;
        vi = ni;
    }
    (vr, vi)
}

/// Shrink `old`, which isolates one root of `p`, to a box of width at most
/// `2^-bits` around the same root.
pub fn refine(p: &UPoly<Q>, old: &CBox, mut bits: u32) -> CBox {
    if p.deg() == 1 {
        return isolate(p, bits).remove(0);
    }
    loop {
        let boxes = isolate(p, bits);
        let hits: Vec<&CBox> = boxes.iter().filter(|b| b.intersects(old)).collect();
        if hits.len() == 1 {
            return hits[0].clone();
        }
        bits += 16;
    }
}

/// Number of roots of squarefree `p` in the closed box, when decidable at
/// the precision cap.
pub fn count_roots_in(p: &UPoly<Q>, region: &CBox) -> Option<usize> {
    let mut bits = 32;
    while bits <= 1024 {
        let boxes = isolate(p, bits);
        let mut count = 0;
        let mut undecided = false;
        for b in &boxes {
            if region.contains_box(b) {
                count += 1;
            } else if b.intersects(region) {
                undecided = true;
            }
        }
        if !undecided {
            return Some(count);
        }
        bits *= 2;
    }
    None
}
