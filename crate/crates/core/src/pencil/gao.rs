//! Number of absolutely irreducible factors of a bivariate polynomial from
//! the kernel of Gao's linear system
//! `f g_y - g f_y - f h_x + h f_x = 0`, `deg g <= (m-1, n)`, `deg h <= (m, n-1)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::field::Field;
use crate::exact::poly::{Monomial, Poly};
use crate::exact::{gcd, linalg};

/// Coefficient matrix of the system for `f` (with `deg f <= (m, n)`) under
/// the given degree bounds. Row `a * 2n + b` holds the coefficient of
/// `x^a y^b`, so matrices of different polynomials line up and the map is
/// linear in `f`.
pub fn gao_matrix<F: Field>(f: &Poly<F>, m: u32, n: u32) -> (Vec<Vec<F>>, usize) {
    assert!(m >= 1 && n >= 1);
    let fx = f.derivative(0);
    let fy = f.derivative(1);
    let mut cols: Vec<Poly<F>> = Vec::new();
    for i in 0..m {
        for j in 0..=n {
            // g = x^i y^j: f g_y - g f_y
            let mono = Monomial::from_slice(&[i, j]);
            let mut c = fy.mul_term(&mono, &F::one()).neg();
            if j > 0 {
                c = c.add(&f.mul_term(&Monomial::from_slice(&[i, j - 1]), &F::from_i64(j as i64)));
            }
            cols.push(c);
        }
    }
    for i in 0..=m {
        for j in 0..n {
            // h = x^i y^j: -f h_x + h f_x
            let mono = Monomial::from_slice(&[i, j]);
            let mut c = fx.mul_term(&mono, &F::one());
            if i > 0 {
                c = c.sub(&f.mul_term(&Monomial::from_slice(&[i - 1, j]), &F::from_i64(i as i64)));
            }
            cols.push(c);
        }
    }
    // every monomial of the left-hand side has bidegree below (2m, 2n)
    let ncols = cols.len();
    let width = 2 * n as usize;
    let mut rows = vec![vec![F::zero(); ncols]; 4 * (m * n) as usize];
    for (j, c) in cols.iter().enumerate() {
        for (mono, v) in c.terms() {
            let e = mono.exps();
            rows[e[0] as usize * width + e[1] as usize][j] = v.clone();
        }
    }
    (rows, ncols)
}

/// Kernel dimension of the system for `f` at its own bidegree.
pub fn gao_nullity<F: Field>(f: &Poly<F>) -> usize {
    let (m, n) = (f.degree_in(0), f.degree_in(1));
    let (mut rows, ncols) = gao_matrix(f, m, n);
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    linalg::nullity(&rows, ncols)
}

/// Number of irreducible factors over the algebraic closure of the
/// squarefree part of `f`.
pub fn absolute_factor_count<F: Field>(f: &Poly<F>) -> Result<usize> {
    assert_eq!(f.nvars(), 2);
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let f = gcd::squarefree_part(f)?;
    // Factors free of x are lines y = c, one per distinct root of the
    // content; Gao's count needs gcd(f, f_x) = 1, which holds for the
    // primitive part of a squarefree polynomial.
    let c = gcd::content(&f, 0);
    let lines = c.degree_in(1) as usize;
    let f1 = f.exact_div(&c)?;
    if f1.is_constant() {
        return Ok(lines);
    }
    if !f1.involves(1) {
        return Ok(lines + f1.degree_in(0) as usize);
    }
    Ok(lines + gao_nullity(&f1))
}
