//! Per-link, per-n checks of every polynomial identity relating HOMFLY-PT,
//! its sl(n) and Alexander specializations, and the root-of-unity Euler
//! characteristics.
//!
//! `LinkData` keeps P, Pbar, P^- and Delta as separate values so that a
//! corrupted field is caught by the checks comparing it with the others.

use std::ops::RangeInclusive;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::alexoracle::{alex_matrix_poly, normalize_symmetric};
use crate::corpus::CorpusEntry;
use crate::cyclo::{eval_at, eval_at_root, eval_half_at_root, CycloNum};
use crate::frcomplex::{chi_of_dims, unknot_hfkn};
use crate::gradings::{collapse_to_frac, Collapse, DimTable, HFK_LABELS};
use crate::laurent::{rat, LaurentPoly, RatPair};
use crate::linkdiag::{LinkDiagram, SkeinSite};
use crate::skein::{self, a_binomial, HomflyEngine, SkeinError, AZ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Only used for the sign of the oracle Alexander polynomial of links.
    Warn,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    /// Decimal rendering of both sides, for display only.
    #[serde(skip)]
    pub approx: Option<(String, String)>,
}

impl Check {
    fn new(name: &str, ok: bool, lhs: String, rhs: String) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check { name: name.into(), status, lhs, rhs, approx: None }
    }

    fn error(name: &str, e: impl std::fmt::Display) -> Self {
        Check { name: name.into(), status: Status::Fail, lhs: format!("error: {e}"), rhs: String::new(), approx: None }
    }

    fn cyclo(name: &str, lhs: &CycloNum, rhs: &CycloNum) -> Self {
        let mut c = Self::new(name, lhs == rhs, lhs.compact(), rhs.compact());
        c.approx = Some((lhs.approx_string(), rhs.approx_string()));
        c
    }

    fn poly(name: &str, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Self {
        Self::new(name, lhs == rhs, lhs.to_string(), rhs.to_string())
    }

    fn pair(name: &str, lhs: &RatPair, rhs: &RatPair) -> Self {
        Self::new(name, lhs == rhs, lhs.to_string(), rhs.to_string())
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn attempt<T, E: std::fmt::Display>(name: &str, r: Result<T, E>, f: impl FnOnce(T) -> Check) -> Check {
    match r {
        Ok(v) => f(v),
        Err(e) => Check::error(name, e),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub link: String,
    pub ell: usize,
    /// `None` for checks that do not depend on n.
    pub n: Option<u32>,
    pub checks: Vec<Check>,
    pub ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Everything the checks read, computed once per link.
#[derive(Debug, Clone)]
pub struct LinkData {
    pub name: String,
    pub diagram: LinkDiagram,
    pub ell: usize,
    /// Unreduced P over (a, z).
    pub p: LaurentPoly,
    pub pbar: LaurentPoly,
    pub pminus: LaurentPoly,
    pub delta: LaurentPoly,
    pub expected_homfly: Option<LaurentPoly>,
    pub expected_alexander: Option<LaurentPoly>,
}

/// Which stored value to corrupt in a negative control.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    P,
    Pbar,
    Pminus,
    Delta,
}

impl LinkData {
    pub fn compute(name: &str, diagram: &LinkDiagram) -> Result<Self, SkeinError> {
        let p = HomflyEngine::new().unreduced(diagram)?;
        let pbar = skein::reduced_from_unreduced(&p)?;
        let pminus = skein::middle_from_reduced(&pbar);
        let delta = skein::alexander_from_unreduced(&p)?.with_vars(&["t"])?;
        Ok(LinkData {
            name: name.into(),
            diagram: diagram.clone(),
            ell: diagram.stats().components,
            p: p.with_vars(&AZ)?,
            pbar: pbar.with_vars(&AZ)?,
            pminus: pminus.with_vars(&AZ)?,
            delta,
            expected_homfly: None,
            expected_alexander: None,
        })
    }

    pub fn from_entry(e: &CorpusEntry) -> Result<Self, SkeinError> {
        let mut d = Self::compute(&e.name, &e.diagram)?;
        d.expected_homfly = e.homfly.clone();
        d.expected_alexander = e.alexander.clone();
        Ok(d)
    }

    /// Add `delta` to the coefficient of the `term`-th term (mod the number
    /// of terms) of one field; a zero field gets a constant instead.
    pub fn corrupt(&self, field: Field, term: usize, delta: i64) -> Self {
        let mut out = self.clone();
        let slot = match field {
            Field::P => &mut out.p,
            Field::Pbar => &mut out.pbar,
            Field::Pminus => &mut out.pminus,
            Field::Delta => &mut out.delta,
        };
        let terms = slot.sorted_terms();
        let bump = if terms.is_empty() {
            LaurentPoly::constant(rat(delta), slot.vars())
        } else {
            let (e, _) = terms[term % terms.len()];
            LaurentPoly::monomial(rat(delta), slot.vars(), e)
        };
        *slot = slot.clone() + bump;
        out
    }
}

fn t_poly(s: &str) -> LaurentPoly {
    LaurentPoly::parse_with_vars(s, &["t"]).unwrap()
}

/// `p(a0, z)` with `z := zimg`, as a fraction over t.
fn at_a(p: &LaurentPoly, a0: i64, zimg: &LaurentPoly) -> Result<RatPair, crate::laurent::LaurentError> {
    let in_z = p.with_vars(&AZ)?.substitute("a", &LaurentPoly::int(a0))?;
    RatPair::from_poly(in_z).substitute("z", zimg)
}

/// Check `a P(L+) - a^-1 P(L-) = z P(L0)` and report the residual on failure.
pub fn skein_triple_check(name: &str, p_plus: &LaurentPoly, p_minus: &LaurentPoly, p_zero: &LaurentPoly) -> Check {
    let az = |s: &str| LaurentPoly::parse_with_vars(s, &AZ).unwrap();
    let lhs = az("a") * p_plus.clone() - az("a^-1") * p_minus.clone();
    let rhs = az("z") * p_zero.clone();
    let residual = lhs.clone() - rhs.clone();
    if residual.is_zero() {
        Check::poly(name, &lhs, &rhs)
    } else {
        Check::new(name, false, lhs.to_string(), format!("{rhs}  [residual {residual}]"))
    }
}

pub fn verify_skein_triple(site: &SkeinSite, engine: &mut HomflyEngine) -> Check {
    let d = &site.diagram;
    let i = site.crossing_index;
    let name = format!("skein.crossing{i}");
    let (sw, sm) = (d.switch(i), d.smooth(i));
    let (plus, minus) = if d.crossings()[i].sign > 0 { (d.clone(), sw) } else { (sw, d.clone()) };
    let vals = (|| Ok::<_, SkeinError>((engine.unreduced(&plus)?, engine.unreduced(&minus)?, engine.unreduced(&sm)?)))();
    attempt(&name, vals, |(a, b, c)| skein_triple_check(&name, &a, &b, &c))
}

pub fn verify_polynomial_identities(ld: &LinkData) -> Vec<Check> {
    let q = t_poly("t^(1/2) - t^(-1/2)");
    let mq = -q.clone();
    let delta = RatPair::from_poly(ld.delta.clone());
    let zero = RatPair::from_poly(LaurentPoly::zero(&["t"]));
    let over = |den: &LaurentPoly| RatPair::new(ld.delta.clone(), den.clone());
    let mut out = Vec::new();
    let mut id = |name: &str, p: &LaurentPoly, a0: i64, z: &LaurentPoly, rhs: &RatPair| {
        out.push(attempt(name, at_a(p, a0, z), |lhs| Check::pair(name, &lhs, rhs)));
    };
    // q = t^(1/2): z = t^(1/2) - t^(-1/2); q = -t^(1/2): z = -(t^(1/2) - t^(-1/2))
    id("id.pbar(1,t^1/2)=Delta", &ld.pbar, 1, &q, &delta);
    id("id.pminus(1,t^1/2)=Delta/(t^-1/2-t^1/2)", &ld.pminus, 1, &q, &over(&mq));
    id("id.p(1,t^1/2)=0", &ld.p, 1, &q, &zero);
    id("id.pbar(-1,-t^1/2)=Delta", &ld.pbar, -1, &mq, &delta);
    id("id.pminus(-1,-t^1/2)=Delta/(t^1/2-t^-1/2)", &ld.pminus, -1, &mq, &over(&q));
    id("id.p(-1,-t^1/2)=0", &ld.p, -1, &mq, &zero);
    for (name, p, odd) in [("pbar", &ld.pbar, false), ("pminus", &ld.pminus, true), ("p", &ld.p, false)] {
        let sym = format!("sym.{name}(a,q)={}{name}(-a,-q)", if odd { "-" } else { "" });
        out.push(attempt(&sym, p.sign_flip(&AZ), |flipped| {
            let expect = if odd { -p.clone() } else { p.clone() };
            Check::poly(&sym, &flipped, &expect)
        }));
        let par = format!("parity.{name}");
        out.push(attempt(&par, p.term_parities(&AZ), |ps| {
            let bad = ps.iter().filter(|&&even| even == odd).count();
            Check::new(&par, bad == 0, format!("{bad} terms of the wrong parity"), format!("all {}", if odd { "odd" } else { "even" }))
        }));
    }
    out
}

/// Reduced and unreduced sl(n) at `q = e^(pi i/n)` against Delta.
pub fn verify_thm_sln(ld: &LinkData, n: u32) -> Vec<Check> {
    let pbar_n = skein::sln_from_unreduced(&ld.pbar, n, false);
    let p_n = skein::sln_from_unreduced(&ld.p, n, false);
    let at = |p: Result<LaurentPoly, SkeinError>| -> Result<CycloNum, String> {
        let p = p.map_err(|e| e.to_string())?;
        eval_at_root(&p, n, 1).map_err(|e| e.to_string())
    };
    if n == 1 {
        let one = CycloNum::one(2);
        return vec![
            attempt("sln.reduced(n=1)=1", at(pbar_n), |v| Check::cyclo("sln.reduced(n=1)=1", &v, &one)),
            attempt("sln.unreduced(n=1)=1", at(p_n), |v| Check::cyclo("sln.unreduced(n=1)=1", &v, &one)),
        ];
    }
    let rhs = eval_half_at_root(&ld.delta, n, n as i64 + 1);
    vec![
        attempt("sln.reduced=Delta(t^1/2=-zeta)", at(pbar_n).and_then(|l| Ok((l, rhs.map_err(|e| e.to_string())?))), |(l, r)| {
            Check::cyclo("sln.reduced=Delta(t^1/2=-zeta)", &l, &r)
        }),
        attempt("sln.unreduced=0", at(p_n), |v| Check::cyclo("sln.unreduced=0", &v, &CycloNum::zero(2 * n))),
    ]
}

/// A bigraded (gr_T, gr_M) table whose Euler characteristic is `p`: each
/// coefficient `c` at `t^A` becomes `|c|` generators at Maslov 0 or 1.
pub fn table_realizing(p: &LaurentPoly) -> DimTable {
    let mut t = DimTable::new(&HFK_LABELS, &[true, false]).unwrap();
    for (e, c) in p.terms() {
        let c = c.to_integer();
        let m = if c < 0.into() { 2 } else { 0 };
        let dim: usize = c.magnitude().try_into().expect("small coefficient");
        t.add2(&[e[0], m], dim).unwrap();
    }
    t
}

/// Euler characteristics of the HFK_n variants predicted from Delta.
pub fn verify_thm_hfk(ld: &LinkData, n: u32) -> Vec<Check> {
    let ell = ld.ell as i64;
    if n == 1 {
        let one = CycloNum::one(2);
        let chi1 = unknot_hfkn(1).euler_char();
        let mut out = vec![Check::cyclo("hfk.n1.chi=1", &chi1, &one)];
        if ell == 1 {
            out.push(attempt("hfk.n1.Delta(1)=1", eval_half_at_root(&ld.delta, 1, 0), |v| Check::cyclo("hfk.n1.Delta(1)=1", &v, &one)));
        }
        return out;
    }
    let nn = n as i64;
    let vals = (|| {
        let un = CycloNum::root(n, 1 - ell).mul(&eval_half_at_root(&ld.delta, n, nn - 1).map_err(|e| e.to_string())?);
        let pr = eval_half_at_root(&ld.delta, n, nn + 1).map_err(|e| e.to_string())?;
        let factor = t_poly("t^(-1/2) - t^(1/2)").pow(ell - 1).map_err(|e| e.to_string())?;
        let hat = (factor * ld.delta.clone()).with_vars(&["t"]).map_err(|e| e.to_string())?;
        Ok::<_, String>((un, pr, hat))
    })();
    let (un, pr, hat) = match vals {
        Ok(v) => v,
        Err(e) => return vec![Check::error("hfk", e)],
    };
    let mut out = vec![Check::cyclo("hfk.primed=shift*unprimed", &pr, &CycloNum::root(n, (1 - ell) * (nn - 1)).mul(&un))];
    // the predicted hat-HFK table, collapsed with gr_n, against the Koszul factor
    let koszul = CycloNum::one(2 * n).sub(&CycloNum::root(n, 2)).pow(ell - 1).unwrap();
    out.push(attempt("hfk.koszul_chain", collapse_to_frac(&table_realizing(&hat), n, Collapse::Hfk, 0), |dims| {
        Check::cyclo("hfk.koszul_chain", &chi_of_dims(n, &dims), &koszul.mul(&un))
    }));
    // unreduced HFK_n is reduced HFK_n of L with a split unknot
    let split = skein::alexander_from_unreduced(&(ld.p.clone() * skein::unknot_value()));
    out.push(attempt("hfk.unreduced=0", split.map_err(|e| e.to_string()).and_then(|d| eval_half_at_root(&d, n, nn - 1).map_err(|e| e.to_string())), |v| {
        Check::cyclo("hfk.unreduced=0", &v, &CycloNum::zero(2 * n))
    }));
    out
}

/// Pbar(-1, e^(pi i/n)) three ways: via sl(n), via Delta, and directly from
/// `z Q(-1, z)` with `P = (a - a^-1) Q`.
pub fn verify_square(ld: &LinkData, n: u32) -> Vec<Check> {
    assert!(n >= 2);
    let zeta = CycloNum::root(n, 1);
    let routes = (|| {
        let a = skein::sln_from_unreduced(&ld.pbar, n, false).map_err(|e| e.to_string())?;
        let a = eval_at_root(&a, n, 1).map_err(|e| e.to_string())?;
        let b = eval_half_at_root(&ld.delta, n, n as i64 + 1).map_err(|e| e.to_string())?;
        let qz = ld.p.exact_div(&a_binomial()).map_err(|e| e.to_string())?;
        let zq = (qz * LaurentPoly::parse_with_vars("z", &AZ).unwrap())
            .substitute("a", &LaurentPoly::int(-1))
            .and_then(|p| p.with_vars(&["z"]))
            .map_err(|e| e.to_string())?;
        let x = zeta.sub(&zeta.inv().map_err(|e| e.to_string())?);
        let c = eval_at(&zq, &x).map_err(|e| e.to_string())?;
        Ok::<_, String>((a, b, c))
    })();
    match routes {
        Ok((a, b, c)) => vec![Check::cyclo("square.A=B", &a, &b), Check::cyclo("square.A=C", &a, &c)],
        Err(e) => vec![Check::error("square", e)],
    }
}

/// Skein Delta against the Wirtinger-matrix Delta; a sign difference for
/// links is a warning.
pub fn verify_oracle(ld: &LinkData) -> Check {
    let name = "oracle.alexander";
    attempt(name, normalize_symmetric(&alex_matrix_poly(&ld.diagram)), |s| {
        let mut c = Check::poly(name, &ld.delta, &s.poly);
        if c.status == Status::Fail && !s.sign_fixed && s.matches(&ld.delta) {
            c.status = Status::Warn;
        }
        c
    })
}

pub fn verify_expected(ld: &LinkData) -> Vec<Check> {
    let mut out = Vec::new();
    if let Some(h) = &ld.expected_homfly {
        out.push(Check::poly("expected.homfly", &ld.pbar, h));
    }
    if let Some(d) = &ld.expected_alexander {
        out.push(Check::poly("expected.alexander", &ld.delta, d));
    }
    out
}

/// All n-independent checks, with skein triples at every crossing.
pub fn verify_static(ld: &LinkData) -> Vec<Check> {
    let mut out = verify_expected(ld);
    out.push(verify_oracle(ld));
    out.extend(verify_polynomial_identities(ld));
    let mut engine = HomflyEngine::new();
    for i in 0..ld.diagram.crossing_count() {
        out.push(verify_skein_triple(&SkeinSite { diagram: ld.diagram.clone(), crossing_index: i }, &mut engine));
    }
    out
}

pub fn verify_at(ld: &LinkData, n: u32) -> Vec<Check> {
    let mut out = verify_thm_sln(ld, n);
    out.extend(verify_thm_hfk(ld, n));
    if n >= 2 {
        out.extend(verify_square(ld, n));
    }
    out
}

fn timed(link: &str, ell: usize, n: Option<u32>, f: impl FnOnce() -> Vec<Check>) -> VerifyReport {
    let start = Instant::now();
    let checks = f();
    VerifyReport { link: link.into(), ell, n, checks, ms: start.elapsed().as_millis() as u64 }
}

pub fn verify_link(ld: &LinkData, ns: RangeInclusive<u32>) -> Vec<VerifyReport> {
    let mut out = vec![timed(&ld.name, ld.ell, None, || verify_static(ld))];
    for n in ns {
        out.push(timed(&ld.name, ld.ell, Some(n), || verify_at(ld, n)));
    }
    out
}

/// Reports for one corpus entry; a skein failure becomes a failing report.
pub fn verify_entry(e: &CorpusEntry, ns: RangeInclusive<u32>) -> Vec<VerifyReport> {
    let start = Instant::now();
    match LinkData::from_entry(e) {
        Ok(ld) => {
            let skein_ms = start.elapsed().as_millis() as u64;
            let mut r = verify_link(&ld, ns);
            r[0].ms += skein_ms;
            r
        }
        Err(err) => vec![VerifyReport {
            link: e.name.clone(),
            ell: e.diagram.stats().components,
            n: None,
            checks: vec![Check::error("skein", err)],
            ms: start.elapsed().as_millis() as u64,
        }],
    }
}
