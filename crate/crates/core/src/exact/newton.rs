//! Newton polygons of bivariate polynomials and their lattice counts.

use alloc::vec::Vec;

use num_integer::Integer;
use serde::Serialize;

use super::field::Field;
use super::poly::Poly;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Convex lattice polygon, vertices counterclockwise starting from the
/// lowest-then-leftmost point. Degenerate hulls have one or two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePolygon {
    pub vertices: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl LatticePolygon {
    pub fn hull(points: &[(i64, i64)]) -> Self {
        let mut pts: Vec<(i64, i64)> = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() <= 2 {
            pts.sort_by_key(|p| (p.1, p.0));
            return LatticePolygon { vertices: pts };
        }
        // Andrew's monotone chain; popping on non-left turns drops
        // collinear points and yields counterclockwise order.
        let mut hull: Vec<(i64, i64)> = Vec::new();
        for pass in 0..2 {
            let start = hull.len();
            let iter: Vec<(i64, i64)> = if pass == 0 { pts.clone() } else { pts.iter().rev().copied().collect() };
            for p in iter {
                while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                    hull.pop();
                }
                hull.push(p);
            }
            hull.pop();
        }
        let first = (0..hull.len()).min_by_key(|&i| (hull[i].1, hull[i].0)).unwrap();
        hull.rotate_left(first);
        LatticePolygon { vertices: hull }
    }

    pub fn of_poly<F: Field>(p: &Poly<F>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroInput);
        }
        let pts: Vec<(i64, i64)> = p
            .terms()
            .map(|(m, _)| (m.0[0] as i64, m.0[1] as i64))
            .collect();
        Ok(Self::hull(&pts))
    }

    pub fn is_two_dimensional(&self) -> bool {
        self.vertices.len() >= 3
    }

    /// Twice the enclosed area.
    pub fn double_area(&self) -> i64 {
        let v = &self.vertices;
        if v.len() < 3 {
            return 0;
        }
        let mut s = 0;
        for i in 0..v.len() {
            let (a, b) = (v[i], v[(i + 1) % v.len()]);
            s += a.0 * b.1 - a.1 * b.0;
        }
        s.abs()
    }

    pub fn edges(&self) -> Vec<((i64, i64), (i64, i64))> {
        let v = &self.vertices;
        match v.len() {
            0 | 1 => Vec::new(),
            2 => alloc::vec![(v[0], v[1])],
            n => (0..n).map(|i| (v[i], v[(i + 1) % n])).collect(),
        }
    }

    pub fn boundary_points(&self) -> i64 {
        let v = &self.vertices;
        match v.len() {
            0 => 0,
            1 => 1,
            2 => lattice_len(v[0], v[1]) + 1,
            _ => self.edges().iter().map(|&(a, b)| lattice_len(a, b)).sum(),
        }
    }

    /// Interior lattice points by Pick's theorem (zero for degenerate hulls).
    pub fn interior_points(&self) -> i64 {
        if !self.is_two_dimensional() {
            return 0;
        }
        (self.double_area() - self.boundary_points() + 2) / 2
    }
}

fn lattice_len(a: (i64, i64), b: (i64, i64)) -> i64 {
    (b.0 - a.0).abs().gcd(&(b.1 - a.1).abs())
}

/// The restriction of `p` to an edge, as a univariate polynomial in the
/// lattice step along the edge (coefficient `k` belongs to `a + k*step`).
pub fn edge_polynomial<F: Field>(p: &Poly<F>, a: (i64, i64), b: (i64, i64)) -> UPoly<F> {
    let g = lattice_len(a, b);
    let step = ((b.0 - a.0) / g, (b.1 - a.1) / g);
    let coeffs = (0..=g)
        .map(|k| {
            let e = [(a.0 + k * step.0) as u32, (a.1 + k * step.1) as u32];
            p.coeff(&super::poly::Monomial::from_slice(&e))
        })
        .collect();
    UPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse::parse_poly;
    use alloc::vec;

    fn poly(s: &str) -> LatticePolygon {
        LatticePolygon::of_poly(parse_poly(s, &["x", "y"]).unwrap().poly()).unwrap()
    }

    #[test]
    fn support_hulls() {
        assert_eq!(poly("x^2 + 5*x + y^3").vertices, vec![(1, 0), (2, 0), (0, 3)]);
        assert_eq!(poly("x + y").vertices, vec![(1, 0), (0, 1)]);
        assert_eq!(poly("x*y + x + y").vertices, vec![(1, 0), (1, 1), (0, 1)]);
    }

    #[test]
    fn interior_counts() {
        // triangle (1,0),(2,0),(0,3): area 3/2, boundary 1+1+3 -> I = 1
        assert_eq!(poly("x^2 + x + y^3").interior_points(), 1);
        assert_eq!(poly("x^2 + y^3").interior_points(), 0);
        assert_eq!(poly("1 + x^3 + y^3").interior_points(), 1);
        assert_eq!(poly("1 + x^4 + y^4").interior_points(), 3);
        assert_eq!(poly("x").interior_points(), 0);
    }

    #[test]
    fn edge_restriction() {
        let p = parse_poly("x^2 - 2*x*y + y^2 + 1", &["x", "y"]).unwrap();
        let e = edge_polynomial(p.poly(), (2, 0), (0, 2));
        assert_eq!(e, UPoly::from_i64(&[1, -2, 1]));
        assert!(!e.is_squarefree());
    }
}
