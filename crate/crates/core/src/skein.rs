//! HOMFLY-PT by skein recursion, and the specializations derived from it.
//!
//! Skein relation `a P(L+) - a^-1 P(L-) = z P(L0)` with `z = q - q^-1` and
//! unreduced unknot value `(a - a^-1)/z`. The recursion walks each component
//! from its basepoint and resolves the first crossing met from below; when no
//! such crossing exists the diagram is descending, hence an unlink.

use std::collections::HashMap;

use thiserror::Error;

use crate::laurent::{quantum_int, z_binomial, LaurentError, LaurentPoly};
use crate::linkdiag::LinkDiagram;

pub const DEFAULT_MAX_CROSSINGS: usize = 14;
pub const MAX_CROSSINGS_ENV: &str = "ROOTCHI_MAX_CROSSINGS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("diagram has {crossings} crossings, above the bound {bound}")]
    TooManyCrossings { crossings: usize, bound: usize },
    #[error(transparent)]
    Algebra(#[from] LaurentError),
}

pub type Result<T> = std::result::Result<T, SkeinError>;

/// Crossing bound from the environment, or the default.
pub fn max_crossings() -> usize {
    std::env::var(MAX_CROSSINGS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CROSSINGS)
}

pub const AZ: [&str; 2] = ["a", "z"];

fn az(text: &str) -> LaurentPoly {
    LaurentPoly::parse_with_vars(text, &AZ).unwrap()
}

/// `a - a^-1` over (a, z).
pub fn a_binomial() -> LaurentPoly {
    az("a - a^-1")
}

/// Unreduced unknot value `(a - a^-1) z^-1`.
pub fn unknot_value() -> LaurentPoly {
    az("a*z^-1 - a^-1*z^-1")
}

/// One skein computation with a private memo table.
pub struct HomflyEngine {
    memo: HashMap<LinkDiagram, LaurentPoly>,
    bound: usize,
    mu: LaurentPoly,
}

impl Default for HomflyEngine {
    fn default() -> Self {
        Self::with_bound(max_crossings())
    }
}

impl HomflyEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_bound(bound: usize) -> Self {
        Self { memo: HashMap::new(), bound, mu: unknot_value() }
    }

    pub fn unreduced(&mut self, d: &LinkDiagram) -> Result<LaurentPoly> {
        if d.crossing_count() > self.bound {
            return Err(SkeinError::TooManyCrossings { crossings: d.crossing_count(), bound: self.bound });
        }
        Ok(self.rec(&d.simplify()))
    }

    fn rec(&mut self, d: &LinkDiagram) -> LaurentPoly {
        if let Some(p) = self.memo.get(d) {
            return p.clone();
        }
        let p = match d.first_ascending() {
            None => self.mu.pow(d.stats().components as i64).unwrap(),
            Some(i) => {
                let sign = d.crossings()[i].sign;
                let (switched, smoothed) = d.skein_resolve(i);
                let ps = self.rec(&switched);
                let p0 = self.rec(&smoothed);
                if sign > 0 {
                    // P(L+) = a^-2 P(L-) + a^-1 z P(L0)
                    az("a^-2") * ps + az("a^-1*z") * p0
                } else {
                    // P(L-) = a^2 P(L+) - a z P(L0)
                    az("a^2") * ps - az("a*z") * p0
                }
            }
        };
        self.memo.insert(d.clone(), p.clone());
        p
    }
}

pub fn homfly_unreduced(d: &LinkDiagram) -> Result<LaurentPoly> {
    HomflyEngine::new().unreduced(d)
}

/// `P * z / (a - a^-1)`.
pub fn reduced_from_unreduced(p: &LaurentPoly) -> Result<LaurentPoly> {
    Ok((p * &az("z")).exact_div(&a_binomial())?)
}

/// `-Pbar / z`.
pub fn middle_from_reduced(pbar: &LaurentPoly) -> LaurentPoly {
    -(pbar * &az("z^-1"))
}

/// `z * Q(1, z)` at `z = t^(1/2) - t^(-1/2)`, where `P = (a - a^-1) Q`.
pub fn alexander_from_unreduced(p: &LaurentPoly) -> Result<LaurentPoly> {
    let q = p.exact_div(&a_binomial())?;
    let conway = (q * az("z")).substitute("a", &LaurentPoly::int(1))?;
    conway_to_alexander(&conway)
}

/// Substitute `z = t^(1/2) - t^(-1/2)` into a polynomial in z.
pub fn conway_to_alexander(conway: &LaurentPoly) -> Result<LaurentPoly> {
    let conway = conway.trimmed();
    if conway.is_constant() {
        return Ok(LaurentPoly::constant(conway.constant_value().unwrap(), &["t"]));
    }
    let img: LaurentPoly = "t^(1/2) - t^(-1/2)".parse().unwrap();
    Ok(conway.substitute_pair("z", &img)?.to_poly()?.with_vars(&["t"])?)
}

/// sl(n) specialization `a = q^n, z = q - q^-1` of the unreduced polynomial,
/// divided by `[n]_q` when `reduced`.
pub fn sln_from_unreduced(p: &LaurentPoly, n: u32, reduced: bool) -> Result<LaurentPoly> {
    assert!(n >= 1);
    let with_a = p.substitute("a", &LaurentPoly::var_pow("q", n as i64))?;
    let pn = with_a.substitute_pair("z", &z_binomial("q"))?.to_poly()?.with_vars(&["q"])?;
    if reduced {
        Ok(pn.exact_div(&quantum_int("q", n))?.with_vars(&["q"])?)
    } else {
        Ok(pn)
    }
}

/// A reduced (a, z) polynomial rewritten over (a, q), as a fraction whose
/// denominator is a power of `q - q^-1`.
pub fn az_to_aq(p: &LaurentPoly) -> Result<crate::laurent::RatPair> {
    let p = p.with_vars(&AZ)?;
    let mut pair = p.substitute_pair("z", &z_binomial("q"))?;
    pair.num = pair.num.with_vars(&["a", "q"])?;
    Ok(pair)
}

/// Everything derived from one skein computation.
#[derive(Debug, Clone)]
pub struct HomflyInvariant {
    pub unreduced_az: LaurentPoly,
    pub ell: usize,
}

impl HomflyInvariant {
    pub fn compute(d: &LinkDiagram) -> Result<Self> {
        Ok(Self { unreduced_az: homfly_unreduced(d)?, ell: d.stats().components })
    }

    pub fn reduced(&self) -> Result<LaurentPoly> {
        reduced_from_unreduced(&self.unreduced_az)
    }

    pub fn middle(&self) -> Result<LaurentPoly> {
        Ok(middle_from_reduced(&self.reduced()?))
    }

    pub fn alexander(&self) -> Result<LaurentPoly> {
        alexander_from_unreduced(&self.unreduced_az)
    }

    pub fn sln(&self, n: u32, reduced: bool) -> Result<LaurentPoly> {
        sln_from_unreduced(&self.unreduced_az, n, reduced)
    }
}

pub fn homfly_reduced(d: &LinkDiagram) -> Result<LaurentPoly> {
    HomflyInvariant::compute(d)?.reduced()
}

pub fn homfly_middle(d: &LinkDiagram) -> Result<LaurentPoly> {
    HomflyInvariant::compute(d)?.middle()
}

pub fn alexander(d: &LinkDiagram) -> Result<LaurentPoly> {
    HomflyInvariant::compute(d)?.alexander()
}

pub fn sln_poly(d: &LinkDiagram, n: u32, reduced: bool) -> Result<LaurentPoly> {
    HomflyInvariant::compute(d)?.sln(n, reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::{parse_braid, parse_pd};

    const TREFOIL: &str = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

    fn q(s: &str) -> LaurentPoly {
        LaurentPoly::parse_with_vars(s, &["q"]).unwrap()
    }

    #[test]
    fn unknot_and_unlink() {
        let u = LinkDiagram::unknot();
        assert_eq!(homfly_unreduced(&u).unwrap(), unknot_value());
        assert_eq!(homfly_unreduced(&LinkDiagram::unlink(2)).unwrap(), unknot_value().pow(2).unwrap());
        assert_eq!(homfly_reduced(&u).unwrap(), LaurentPoly::int(1));
        assert_eq!(homfly_middle(&u).unwrap(), az("-z^-1"));
        assert_eq!(alexander(&u).unwrap(), LaurentPoly::int(1));
    }

    #[test]
    fn trefoil_values() {
        // writhe +3 under the clockwise reading
        let t = parse_pd(TREFOIL).unwrap();
        let pbar = homfly_reduced(&t).unwrap();
        assert_eq!(pbar, az("-a^-4 + a^-2*z^2 + 2*a^-2"));
        assert_eq!(az_to_aq(&pbar).unwrap().to_poly().unwrap(), LaurentPoly::parse_with_vars("-a^-4 + a^-2*q^2 + a^-2*q^-2", &["a", "q"]).unwrap());
        assert_eq!(alexander(&t).unwrap(), "t - 1 + t^-1".parse().unwrap());
        assert_eq!(sln_poly(&t, 2, true).unwrap(), q("q^-2 + q^-6 - q^-8"));
        // the mirror carries the positive a-powers
        let m = t.mirror();
        assert_eq!(homfly_reduced(&m).unwrap(), az("-a^4 + a^2*z^2 + 2*a^2"));
        assert_eq!(sln_poly(&m, 2, true).unwrap(), q("q^2 + q^6 - q^8"));
        assert_eq!(homfly_middle(&m).unwrap(), az("a^4*z^-1 - a^2*z - 2*a^2*z^-1"));
    }

    #[test]
    fn braid_and_pd_agree() {
        let a = homfly_unreduced(&parse_pd(TREFOIL).unwrap()).unwrap();
        let b = homfly_unreduced(&parse_braid(&[1, 1, 1], 2).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hopf_values() {
        let h = parse_braid(&[1, 1], 2).unwrap();
        assert_eq!(homfly_reduced(&h).unwrap(), az("a^-1*z + a^-1*z^-1 - a^-3*z^-1"));
        assert_eq!(alexander(&h).unwrap(), "t^(1/2) - t^(-1/2)".parse().unwrap());
        assert_eq!(sln_poly(&h, 2, true).unwrap(), q("q^-1 + q^-5"));
    }

    #[test]
    fn n1_is_one() {
        for d in [parse_pd(TREFOIL).unwrap(), parse_braid(&[1, 1], 2).unwrap(), LinkDiagram::unlink(3)] {
            assert_eq!(sln_poly(&d, 1, true).unwrap(), LaurentPoly::int(1));
            assert_eq!(sln_poly(&d, 1, false).unwrap(), LaurentPoly::int(1));
        }
    }

    #[test]
    fn unknot_sl4() {
        assert_eq!(sln_poly(&LinkDiagram::unknot(), 4, false).unwrap(), q("q^3 + q + q^-1 + q^-3"));
    }

    #[test]
    fn split_union() {
        let t = parse_pd(TREFOIL).unwrap();
        let p = homfly_unreduced(&t).unwrap();
        let pu = homfly_unreduced(&t.with_extra_unknots(1)).unwrap();
        assert_eq!(pu, p * unknot_value());
        assert!(alexander(&t.with_extra_unknots(1)).unwrap().is_zero());
    }

    #[test]
    fn crossing_bound() {
        let t = parse_pd(TREFOIL).unwrap();
        let r = HomflyEngine::with_bound(2).unreduced(&t);
        assert_eq!(r, Err(SkeinError::TooManyCrossings { crossings: 3, bound: 2 }));
    }
}
