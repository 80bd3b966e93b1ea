//! Named-variable rational polynomials: the public currency of the crate.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use super::gcd;
use super::poly::{Monomial, Poly};
use super::rational::{fmt_q, lcm_of_denominators, Q};
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    poly: Poly<Q>,
}

impl MultiPoly {
    pub fn new(vars: Vec<String>, poly: Poly<Q>) -> Self {
        assert_eq!(vars.len(), poly.nvars());
        MultiPoly { vars, poly }
    }

    pub fn from_names(vars: &[&str], poly: Poly<Q>) -> Self {
        Self::new(vars.iter().map(|s| s.to_string()).collect(), poly)
    }

    pub fn zero(vars: &[&str]) -> Self {
        Self::from_names(vars, Poly::zero(vars.len()))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn poly(&self) -> &Poly<Q> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<Q> {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Express `self` over a superset of its variables.
    pub fn extend_to(&self, vars: &[String]) -> Result<Self> {
        let mut map = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            match vars.iter().position(|w| w == v) {
                Some(i) => map.push(i),
                None => return Err(Error::IncompatibleVariables(v.clone())),
            }
        }
        Ok(MultiPoly {
            vars: vars.to_vec(),
            poly: self.poly.remap(&map, vars.len()),
        })
    }

    /// Both operands over the union of their variables (order: `self`'s
    /// variables first, then new ones from `o` in their order).
    fn align(&self, o: &Self) -> (Self, Self) {
        if self.vars == o.vars {
            return (self.clone(), o.clone());
        }
        let mut vars = self.vars.clone();
        for v in &o.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (
            self.extend_to(&vars).expect("superset"),
            o.extend_to(&vars).expect("superset"),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        MultiPoly {
            poly: a.poly.add(&b.poly),
            vars: a.vars,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        MultiPoly {
            poly: a.poly.sub(&b.poly),
            vars: a.vars,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        MultiPoly {
            poly: a.poly.mul(&b.poly),
            vars: a.vars,
        }
    }

    pub fn exact_div(&self, o: &Self) -> Result<Self> {
        let (a, b) = self.align(o);
        Ok(MultiPoly {
            poly: a.poly.exact_div(&b.poly)?,
            vars: a.vars,
        })
    }

    /// Primitive gcd with integer coefficients and positive leading
    /// coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (a, b) = self.align(o);
        MultiPoly {
            poly: normalize(&gcd::gcd(&a.poly, &b.poly)),
            vars: a.vars,
        }
    }

    pub fn resultant(&self, o: &Self, var: &str) -> Result<Self> {
        let (a, b) = self.align(o);
        let i = a
            .var_index(var)
            .ok_or_else(|| Error::IncompatibleVariables(var.to_string()))?;
        Ok(MultiPoly {
            poly: gcd::resultant(&a.poly, &b.poly, i)?,
            vars: a.vars,
        })
    }

    pub fn squarefree_part(&self) -> Result<Self> {
        Ok(MultiPoly {
            poly: normalize(&gcd::squarefree_part(&self.poly)?),
            vars: self.vars.clone(),
        })
    }

    pub fn normalized(&self) -> Self {
        MultiPoly {
            poly: normalize(&self.poly),
            vars: self.vars.clone(),
        }
    }
}

/// Integer-primitive form with positive leading coefficient.
pub fn normalize(p: &Poly<Q>) -> Poly<Q> {
    if p.is_zero() {
        return p.clone();
    }
    let l = lcm_of_denominators(p.terms().map(|(_, c)| c));
    let scaled = p.scale(&Q::from_integer(l));
    let g = super::rational::gcd_of_numerators(scaled.terms().map(|(_, c)| c));
    let mut r = scaled.scale(&Q::new(One::one(), g));
    if r.lc().is_negative() {
        r = r.neg();
    }
    r
}

/// Text form such as `x^2 + 3/2*x*y - y^3`, highest terms first.
pub fn fmt_poly(p: &Poly<Q>, names: &[&str]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = fmt_monomial(m, names);
        if mono.is_empty() {
            out.push_str(&fmt_q(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&fmt_q(&a));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn fmt_monomial(m: &Monomial, names: &[&str]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].to_string()),
            _ => parts.push(alloc::format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

pub fn fmt_upoly(p: &UPoly<Q>, var: &str) -> String {
    fmt_poly(&Poly::from_upoly(p, 0, 1), &[var])
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        f.write_str(&fmt_poly(&self.poly, &names))
    }
}
