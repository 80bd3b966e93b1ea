//! Helpers around arbitrary-precision rationals.

use alloc::format;
use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` text, or just `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Largest multiple of `2^-bits` not exceeding `x`.
pub fn floor_to_bits(x: &Q, bits: u32) -> Q {
    let scale = BigInt::one() << bits;
    let scaled = x.numer() * &scale;
    let fl = scaled.div_floor(x.denom());
    Q::new(fl, scale)
}

/// A rational `r >= 0` with `r^2 >= x` and `r` within roughly `2^-bits` of `sqrt(x)`.
pub fn sqrt_upper(x: &Q, bits: u32) -> Q {
    if !x.is_positive() {
        return Q::zero();
    }
    let scale = BigInt::one() << (2 * bits);
    let scaled = (x.numer() * &scale).div_ceil(x.denom());
    let mut r = scaled.sqrt();
    if &r * &r < scaled {
        r += 1;
    }
    Q::new(r, BigInt::one() << bits)
}

pub fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Q>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

pub fn gcd_of_numerators<'a>(it: impl IntoIterator<Item = &'a Q>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_q {
    use super::{fmt_q, parse_q, Q};
    use alloc::string::String;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).ok_or_else(|| D::Error::custom("bad rational"))
    }
}

/// Serde adapter for a point with rational coordinates.
pub mod serde_q_pair {
    use super::{fmt_q, Q};
    use serde::ser::{SerializeTuple, Serializer};

    pub fn serialize<S: Serializer>(x: &[Q; 2], s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&fmt_q(&x[0]))?;
        t.serialize_element(&fmt_q(&x[1]))?;
        t.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        assert_eq!(fmt_q(&qf(6, -4)), "-3/2");
        assert_eq!(parse_q("-3/2"), Some(qf(-3, 2)));
        assert_eq!(fmt_q(&q(7)), "7");
        assert_eq!(parse_q("1/0"), None);
    }

    #[test]
    fn sqrt_bound_is_upper() {
        for n in [2, 3, 10, 99, 12345] {
            let x = qf(n, 7);
            let r = sqrt_upper(&x, 20);
            assert!(&r * &r >= x);
            let lo = &r - qf(1, 1 << 19);
            assert!(&lo * &lo < x);
        }
        assert_eq!(sqrt_upper(&q(4), 10), q(2));
    }

    #[test]
    fn floor_bits() {
        assert_eq!(floor_to_bits(&qf(1, 3), 2), qf(1, 4));
        assert_eq!(floor_to_bits(&qf(-1, 3), 2), qf(-1, 2));
    }
}
