//! Alexander polynomial from the Wirtinger presentation.
//!
//! Arcs are maximal over-paths. Each crossing contributes one row of the
//! abelianized Fox matrix; deleting a row and a column and taking the
//! determinant over Z[t] (fraction-free elimination) gives the polynomial up to
//! a unit `±t^k`. Nothing here touches the skein engine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::laurent::{LaurentPoly, Rational};
use crate::linkdiag::LinkDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no symmetric representative: {0}")]
    NotSymmetric(String),
}

/// Dense polynomial over Z, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct ZPoly(Vec<BigInt>);

impl ZPoly {
    fn from(v: &[i64]) -> Self {
        let mut p = ZPoly(v.iter().map(|&x| BigInt::from(x)).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] += c;
        }
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ZPoly::default();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    /// Exact division; panics on a remainder (Bareiss guarantees none).
    fn div_exact(&self, d: &Self) -> Self {
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0[dd].clone();
        if r.len() < d.0.len() {
            assert!(r.iter().all(|c| c.is_zero()), "inexact division");
            return ZPoly::default();
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let (c, rem) = r[i + dd].div_rem(&lead);
            assert!(rem.is_zero(), "inexact division");
            if c.is_zero() {
                continue;
            }
            for (j, x) in d.0.iter().enumerate() {
                r[i + j] -= &c * x;
            }
            q[i] = c;
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact division");
        let mut p = ZPoly(q);
        p.trim();
        p
    }
}

fn det_bareiss(mut m: Vec<Vec<ZPoly>>) -> ZPoly {
    let n = m.len();
    if n == 0 {
        return ZPoly::from(&[1]);
    }
    let mut sign = 1;
    let mut prev = ZPoly::from(&[1]);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return ZPoly::default(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).add(&m[i][k].mul(&m[k][j]).neg());
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

/// Alexander polynomial up to units: lowest exponent 0, positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexClass {
    pub poly: LaurentPoly,
    pub ell: usize,
}

impl AlexClass {
    fn from_zpoly(p: ZPoly, ell: usize) -> Self {
        let mut c = p.0;
        let lo = c.iter().position(|x| !x.is_zero()).unwrap_or(c.len());
        c.drain(..lo);
        if c.last().is_some_and(|x| x.is_negative()) {
            c = c.into_iter().map(|x| -x).collect();
        }
        let poly = LaurentPoly::from_terms(
            &["t"],
            c.into_iter().enumerate().map(|(i, x)| (vec![2 * i as i64], Rational::from_integer(x))),
        );
        AlexClass { poly, ell }
    }
}

/// Wirtinger-matrix Alexander class. Split diagrams (an extra crossingless
/// circle, or a component that is never an under strand) give 0.
pub fn alex_matrix_poly(d: &LinkDiagram) -> AlexClass {
    let ell = d.stats().components;
    let cs = d.crossings();
    if cs.is_empty() {
        let v = if d.unknot_count() == 1 { 1 } else { 0 };
        return AlexClass::from_zpoly(ZPoly::from(&[v]), ell);
    }
    if d.unknot_count() > 0 {
        return AlexClass::from_zpoly(ZPoly::default(), ell);
    }
    // arcs: union the two over labels at every crossing
    let m = 2 * cs.len() + 1;
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for c in cs {
        let (b, dd) = (find(&mut parent, c.labels[1] as usize), find(&mut parent, c.labels[3] as usize));
        parent[b.max(dd)] = b.min(dd);
    }
    let mut arc_of = vec![usize::MAX; m];
    let mut arcs = 0;
    for l in 1..m {
        let r = find(&mut parent, l);
        if arc_of[r] == usize::MAX {
            arc_of[r] = arcs;
            arcs += 1;
        }
        arc_of[l] = arc_of[r];
    }
    if arcs != cs.len() {
        // some component never passes under: it lifts off the rest
        return AlexClass::from_zpoly(ZPoly::default(), ell);
    }
    let n = cs.len();
    let mut mat = vec![vec![ZPoly::default(); n]; n];
    for (r, c) in cs.iter().enumerate() {
        let over = arc_of[c.labels[1] as usize];
        let a_in = arc_of[c.labels[0] as usize];
        let a_out = arc_of[c.labels[2] as usize];
        let (x_in, x_out) = if c.sign > 0 { (ZPoly::from(&[0, 1]), ZPoly::from(&[-1])) } else { (ZPoly::from(&[-1]), ZPoly::from(&[0, 1])) };
        mat[r][over] = mat[r][over].add(&ZPoly::from(&[1, -1]));
        mat[r][a_in] = mat[r][a_in].add(&x_in);
        mat[r][a_out] = mat[r][a_out].add(&x_out);
    }
    let minor: Vec<Vec<ZPoly>> = mat[..n - 1].iter().map(|row| row[..n - 1].to_vec()).collect();
    AlexClass::from_zpoly(det_bareiss(minor), ell)
}

/// Symmetric representative of a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricAlex {
    pub poly: LaurentPoly,
    /// True when the overall sign is pinned down (knots, via Delta(1) = 1).
    pub sign_fixed: bool,
}

impl SymmetricAlex {
    /// Equality with `p`, up to sign when the sign is not fixed.
    pub fn matches(&self, p: &LaurentPoly) -> bool {
        self.poly == *p || (!self.sign_fixed && self.poly == -p.clone())
    }
}

pub fn normalize_symmetric(c: &AlexClass) -> Result<SymmetricAlex, OracleError> {
    if c.poly.is_zero() {
        return Ok(SymmetricAlex { poly: LaurentPoly::zero(&["t"]), sign_fixed: true });
    }
    let deg = c.poly.max_exp("t").unwrap_or(0);
    // deg is the doubled top exponent; centre the support on 0
    let shifted = c.poly.clone() * LaurentPoly::var_half("t", -deg / 2);
    let sym_sign = if c.ell % 2 == 1 { 1 } else { -1 };
    let inv = shifted.invert_var("t").map_err(|e| OracleError::NotSymmetric(e.to_string()))?;
    if inv != shifted.scale(&Rational::from_integer(BigInt::from(sym_sign))) {
        return Err(OracleError::NotSymmetric(c.poly.to_string()));
    }
    if c.ell == 1 {
        let at1: Rational = shifted.terms().map(|(_, x)| x.clone()).sum();
        if at1.is_one() {
            return Ok(SymmetricAlex { poly: shifted, sign_fixed: true });
        }
        if (-at1).is_one() {
            return Ok(SymmetricAlex { poly: -shifted, sign_fixed: true });
        }
        return Err(OracleError::NotSymmetric(format!("{} has |Delta(1)| != 1", c.poly)));
    }
    Ok(SymmetricAlex { poly: shifted, sign_fixed: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::{parse_braid, parse_pd};

    fn t(s: &str) -> LaurentPoly {
        LaurentPoly::parse_with_vars(s, &["t"]).unwrap()
    }

    #[test]
    fn trefoil_class() {
        let d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        let c = alex_matrix_poly(&d);
        assert_eq!(c.poly, t("1 - t + t^2"));
        let s = normalize_symmetric(&c).unwrap();
        assert_eq!(s.poly, t("t - 1 + t^-1"));
        assert!(s.sign_fixed);
    }

    #[test]
    fn trivial_and_split() {
        assert_eq!(alex_matrix_poly(&LinkDiagram::unknot()).poly, t("1"));
        assert!(alex_matrix_poly(&LinkDiagram::unlink(2)).poly.is_zero());
        let d = parse_braid(&[1, 1, 1], 2).unwrap().with_extra_unknots(1);
        assert!(alex_matrix_poly(&d).poly.is_zero());
        assert_eq!(normalize_symmetric(&alex_matrix_poly(&LinkDiagram::unknot())).unwrap().poly, t("1"));
    }

    #[test]
    fn hopf_class() {
        let c = alex_matrix_poly(&parse_braid(&[1, 1], 2).unwrap());
        assert_eq!(c.poly, t("t - 1"));
        let s = normalize_symmetric(&c).unwrap();
        assert!(!s.sign_fixed);
        assert!(s.matches(&t("t^(1/2) - t^(-1/2)")));
        assert!(s.matches(&t("t^(-1/2) - t^(1/2)")));
    }

    #[test]
    fn rejects_asymmetric() {
        let c = AlexClass { poly: t("1 + 2*t"), ell: 1 };
        assert!(normalize_symmetric(&c).is_err());
        let c = AlexClass { poly: t("2 - 3*t + 2*t^2"), ell: 1 };
        assert_eq!(normalize_symmetric(&c).unwrap().poly, t("2*t - 3 + 2*t^-1"));
    }
}
