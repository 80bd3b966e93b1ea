use core::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Q;

/// Exact field arithmetic. Implemented by the rationals and by elements of
/// an explicit number field; all polynomial algorithms are generic over it.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero; callers test first.
    fn inv(&self) -> Self;
    fn from_q(x: &Q) -> Self;
    /// The value as a rational, when it is one.
    fn to_q(&self) -> Option<Q>;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn from_i64(n: i64) -> Self {
        Self::from_q(&super::rational::q(n))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn to_q(&self) -> Option<Q> {
        Some(self.clone())
    }
}
