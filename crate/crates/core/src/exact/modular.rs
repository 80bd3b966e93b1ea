//! Dense polynomials over a small prime field `Z/p`, `p < 2^31`, and the
//! Cantor–Zassenhaus factorization used as the first stage of rational
//! factorization.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

pub type ModPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Zp {
    pub p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Zp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut a: ModPoly) -> ModPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(a: &ModPoly) -> usize {
        a.len().saturating_sub(1)
    }

    pub fn add_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(r)
    }

    pub fn sub_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        let r = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(r)
    }

    pub fn mul_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % self.p;
            }
        }
        self.trim(r)
    }

    pub fn scale(&self, a: &ModPoly, c: u64) -> ModPoly {
        self.trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &ModPoly) -> ModPoly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn divrem(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let mut r = a.clone();
        let db = b.len() - 1;
        let li = self.inv(b[db]);
        let mut q = vec![0u64; a.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mul(r[i + db], li);
            q[i] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[i + j] = self.sub(r[i + j], self.mul(c, bj));
                }
            }
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.divrem(a, b).1
    }

    pub fn gcd(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let l = self.inv(*r0.last().expect("xgcd of zeros"));
        (self.scale(&r0, l), self.scale(&s0, l), self.scale(&t0, l))
    }

    pub fn derivative(&self, a: &ModPoly) -> ModPoly {
        let r = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        self.trim(r)
    }

    pub fn powmod(&self, a: &ModPoly, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut r = vec![1u64];
        let mut base = self.rem(a, m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                r = self.rem(&self.mul_poly(&r, &base), m);
            }
            if i + 1 < bits {
                base = self.rem(&self.mul_poly(&base, &base), m);
            }
        }
        self.rem(&r, m)
    }

    pub fn is_squarefree(&self, a: &ModPoly) -> bool {
        Self::deg(&self.gcd(a, &self.derivative(a))) == 0
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn ddf(&self, f: &ModPoly) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while Self::deg(&f) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.sub_poly(&h, &x), &f);
            if Self::deg(&g) > 0 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        if Self::deg(&f) > 0 {
            let dd = Self::deg(&f);
            out.push((self.monic(&f), dd));
        }
        out
    }

    /// Equal-degree splitting into monic irreducibles of degree `d`.
    pub fn edf(&self, f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
        let n = Self::deg(f);
        if n == d {
            return vec![self.monic(f)];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: ModPoly = self.trim((0..n).map(|_| rng.next_u64() % self.p).collect());
            if Self::deg(&a) == 0 {
                continue;
            }
            let g = self.gcd(&a, f);
            let g = if Self::deg(&g) > 0 {
                g
            } else {
                let b = self.sub_poly(&self.powmod(&a, &e, f), &vec![1]);
                self.gcd(&b, f)
            };
            let dg = Self::deg(&g);
            if dg > 0 && dg < n {
                let h = self.divrem(f, &g).0;
                let mut r = self.edf(&g, d, rng);
                r.extend(self.edf(&self.monic(&h), d, rng));
                return r;
            }
        }
    }

    /// Complete factorization of a monic squarefree polynomial.
    pub fn factor_squarefree(&self, f: &ModPoly, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
        let mut out = Vec::new();
        for (g, d) in self.ddf(f) {
            out.extend(self.edf(&g, d, rng));
        }
        out.sort();
        out
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n % i == 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Primes at or above `start`, ascending.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}
