//! Deterministic pseudo-random rationals from a seeded stream.

use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::exact::Q;

pub const DEFAULT_SEED: u64 = 20_240_601;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Seed derived from a base seed and a purpose tag, so that independent
    /// consumers do not share a stream.
    pub fn derived(seed: u64, tag: u64) -> Self {
        Self::new(seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.rng.next_u64() % span) as i64
    }

    /// `n/d` with `|n| <= num_bound`, `1 <= d <= den_bound`.
    pub fn rational(&mut self, num_bound: i64, den_bound: i64) -> Q {
        let n = self.int(-num_bound, num_bound);
        let d = self.int(1, den_bound);
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }
}
