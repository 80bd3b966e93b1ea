//! Exact arithmetic: rationals, polynomials, factorization, algebraic numbers.

pub mod algebraic;
pub mod bivariate;
pub mod factor;
pub mod field;
pub mod gcd;
pub mod linalg;
pub mod modular;
pub mod multipoly;
pub mod newton;
pub mod nf_factor;
pub mod numfield;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod solve;
pub mod upoly;

pub use field::Field;
pub use poly::{Monomial, Poly};
pub use rational::Q;
pub use upoly::UPoly;
pub use multipoly::MultiPoly;
pub use parse::parse_poly;
