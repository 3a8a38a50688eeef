//! Dimension tables, graded Euler characteristics, grading dictionaries and
//! collapses to a single (1/n)Z grading.
//!
//! Table keys are stored doubled in every slot, so half-integers are exact.
//! Slots not declared half-integral must hold even (doubled) values.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frcomplex::DimMap;
use crate::laurent::{rat, LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("table: {0}")]
    Table(String),
    #[error("no grading named `{0}`")]
    UnknownLabel(String),
    #[error("sign slot `{label}` is not an integer in entry {deg:?}")]
    HalfSign { label: String, deg: Vec<String> },
    #[error("k - j is odd in entry {0:?}")]
    OddHomological(Vec<String>),
    #[error("labels {found:?} do not fit the {conv} convention (expected {expected:?})")]
    Convention { conv: &'static str, found: Vec<String>, expected: Vec<&'static str> },
    #[error("collapse leaves (1/n)Z at entry {0:?}")]
    NotFractional(Vec<String>),
    #[error(transparent)]
    Algebra(#[from] LaurentError),
}

pub type Result<T> = std::result::Result<T, GradingError>;

pub const HFK_LABELS: [&str; 2] = ["gr_T", "gr_M"];
pub const SLN_LABELS: [&str; 2] = ["gr_Qn", "gr_H"];
pub const HOMFLY_LABELS: [&str; 3] = ["i", "j", "k"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimTable {
    labels: Vec<String>,
    half: Vec<bool>,
    entries: BTreeMap<Vec<i64>, usize>,
}

fn show(v2: i64) -> String {
    if v2 % 2 == 0 {
        (v2 / 2).to_string()
    } else {
        format!("{v2}/2")
    }
}

fn parse_half(s: &str) -> Option<i64> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, "2")) => p.trim().parse().ok(),
        Some(_) => None,
        None => s.parse::<i64>().ok().map(|v| 2 * v),
    }
}

impl DimTable {
    pub fn new<S: AsRef<str>>(labels: &[S], half: &[bool]) -> Result<Self> {
        if !(2..=3).contains(&labels.len()) || half.len() != labels.len() {
            return Err(GradingError::Table("arity must be 2 or 3 with one half flag per label".into()));
        }
        Ok(Self { labels: labels.iter().map(|s| s.as_ref().to_string()).collect(), half: half.to_vec(), entries: BTreeMap::new() })
    }

    /// Add `dim` at a doubled degree tuple.
    pub fn add2(&mut self, deg2: &[i64], dim: usize) -> Result<()> {
        if deg2.len() != self.labels.len() {
            return Err(GradingError::Table(format!("degree {deg2:?} has the wrong arity")));
        }
        for (k, &v) in deg2.iter().enumerate() {
            if !self.half[k] && v % 2 != 0 {
                return Err(GradingError::Table(format!("`{}` is integral but got {}", self.labels[k], show(v))));
            }
        }
        if dim > 0 {
            *self.entries.entry(deg2.to_vec()).or_default() += dim;
        }
        Ok(())
    }

    /// Add `dim` at an integer degree tuple.
    pub fn add(&mut self, deg: &[i64], dim: usize) -> Result<()> {
        self.add2(&deg.iter().map(|v| 2 * v).collect::<Vec<_>>(), dim)
    }

    pub fn from_entries<S: AsRef<str>>(labels: &[S], half: &[bool], entries: &[(&[i64], usize)]) -> Result<Self> {
        let mut t = Self::new(labels, half)?;
        for (d, k) in entries {
            t.add(d, *k)?;
        }
        Ok(t)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn half(&self) -> &[bool] {
        &self.half
    }

    /// Entries keyed by doubled degrees.
    pub fn entries2(&self) -> &BTreeMap<Vec<i64>, usize> {
        &self.entries
    }

    pub fn total_dim(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn slot(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| GradingError::UnknownLabel(label.into()))
    }

    fn shown(deg2: &[i64]) -> Vec<String> {
        deg2.iter().map(|&v| show(v)).collect()
    }

    fn expect(&self, conv: &'static str, expected: &[&'static str]) -> Result<()> {
        if self.labels.iter().map(String::as_str).ne(expected.iter().copied()) {
            return Err(GradingError::Convention { conv, found: self.labels.clone(), expected: expected.to_vec() });
        }
        Ok(())
    }
}

/// `sum (-1)^J t^I dim` with `I` the `var_label` slot and `J` the `sign_label` slot.
pub fn chi_bigraded(t: &DimTable, sign_label: &str, var_label: &str) -> Result<LaurentPoly> {
    let s = t.slot(sign_label)?;
    let v = t.slot(var_label)?;
    let mut out = LaurentPoly::zero(&["t"]);
    for (deg, &dim) in &t.entries {
        if deg[s] % 2 != 0 {
            return Err(GradingError::HalfSign { label: sign_label.into(), deg: DimTable::shown(deg) });
        }
        let sign = if (deg[s] / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        out = out + LaurentPoly::monomial(rat(sign * dim as i64), &["t"], &[deg[v]]);
    }
    Ok(out)
}

/// Sign slot for a trigraded Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriSign {
    /// `(-1)^((k - j)/2)` on an (i, j, k) table.
    Homfly,
    /// `(-1)^K` for the slot with this index.
    Slot(usize),
}

/// `sum sign * q^i a^j dim` over (a, q), reading slots 0 and 1 as i and j.
pub fn chi_trigraded(t: &DimTable, sign: TriSign) -> Result<LaurentPoly> {
    if t.labels.len() != 3 {
        return Err(GradingError::Table("trigraded table needs arity 3".into()));
    }
    let vars = ["a", "q"];
    let mut out = LaurentPoly::zero(&vars);
    for (deg, &dim) in &t.entries {
        let e = match sign {
            TriSign::Homfly => {
                let d = deg[2] - deg[1];
                if d % 4 != 0 {
                    return Err(GradingError::OddHomological(DimTable::shown(deg)));
                }
                d / 4
            }
            TriSign::Slot(k) => {
                let v = *deg.get(k).ok_or_else(|| GradingError::Table(format!("no slot {k}")))?;
                if v % 2 != 0 {
                    return Err(GradingError::HalfSign { label: t.labels[k].clone(), deg: DimTable::shown(deg) });
                }
                v / 2
            }
        };
        let c = if e.rem_euclid(2) == 0 { 1 } else { -1 } * dim as i64;
        out = out + LaurentPoly::monomial(rat(c), &vars, &[deg[1], deg[0]]);
    }
    Ok(out)
}

/// The HOMFLY-PT dictionaries: `gr_T = i/2, gr_M = i + j/2 + k/2` and
/// `gr_Qn = i + n j, gr_H = (k - j)/2`.
pub fn homfly_grading_dict(t: &DimTable, n: u32) -> Result<(DimTable, DimTable)> {
    t.expect("homfly", &HOMFLY_LABELS)?;
    let n = n as i64;
    let mut hfk = DimTable::new(&HFK_LABELS, &[true, true])?;
    let mut sln = DimTable::new(&SLN_LABELS, &[true, true])?;
    for (deg, &dim) in &t.entries {
        let (i2, j2, k2) = (deg[0], deg[1], deg[2]);
        if i2 % 2 != 0 || j2 % 2 != 0 || k2 % 2 != 0 {
            return Err(GradingError::Table(format!("entry {:?} is not integral", DimTable::shown(deg))));
        }
        hfk.add2(&[i2 / 2, i2 + (j2 + k2) / 2], dim)?;
        sln.add2(&[i2 + n * j2, (k2 - j2) / 2], dim)?;
    }
    Ok((hfk, sln))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Collapse {
    /// `gr_n = -n gr_M + 2(n-1) gr_T` on (gr_T, gr_M).
    Hfk,
    /// The negative of `Hfk`.
    HfkPrimed,
    /// `gr_n = gr_Qn + n gr_H` on (gr_Qn, gr_H).
    Sln,
}

impl Collapse {
    pub fn name(self) -> &'static str {
        match self {
            Collapse::Hfk => "hfk",
            Collapse::HfkPrimed => "hfk_primed",
            Collapse::Sln => "sln",
        }
    }
}

/// Collapse to `gr_n` (the returned keys are `gr_n`, i.e. n times the
/// (1/n)Z degree), then shift upward by `extra_shift / n`.
pub fn collapse_to_frac(t: &DimTable, n: u32, conv: Collapse, extra_shift: i64) -> Result<DimMap> {
    match conv {
        Collapse::Hfk | Collapse::HfkPrimed => t.expect(conv.name(), &HFK_LABELS)?,
        Collapse::Sln => t.expect(conv.name(), &SLN_LABELS)?,
    }
    let n = n as i64;
    let mut out = DimMap::new();
    for (deg, &dim) in &t.entries {
        let g2 = match conv {
            Collapse::Hfk => -n * deg[1] + 2 * (n - 1) * deg[0],
            Collapse::HfkPrimed => n * deg[1] - 2 * (n - 1) * deg[0],
            Collapse::Sln => deg[0] + n * deg[1],
        };
        if g2 % 2 != 0 {
            return Err(GradingError::NotFractional(DimTable::shown(deg)));
        }
        *out.entry(g2 / 2 + extra_shift).or_default() += dim;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfkVariant {
    Reduced,
    Minus,
    Unreduced,
}

/// Upward grading shifts of a grading-shifted HFK variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftSpec {
    /// Alexander shift, doubled.
    pub alexander2: i64,
    pub maslov: i64,
    /// Shift of `gr_n/n` for the primed n-variants, in units of 1/n.
    pub frac: Option<i64>,
}

pub fn hfk_shift_spec(variant: HfkVariant, ell: usize, n: Option<u32>) -> ShiftSpec {
    assert!(ell >= 1);
    let ell = ell as i64;
    let (alexander2, maslov) = match variant {
        HfkVariant::Reduced | HfkVariant::Unreduced => (ell - 1, 0),
        HfkVariant::Minus => (ell, 1),
    };
    ShiftSpec { alexander2, maslov, frac: n.map(|n| (1 - ell) * (n as i64 - 1)) }
}

/// HFK_n of the unknot, Q[U]/(U^n): `U^k` at `(gr_T, gr_M) = (-1/2 - k, -2k)`,
/// so `1` has `gr_n = 1 - n` and `U` raises `gr_n` by 2.
pub fn unknot_hfkn_table(n: u32) -> DimTable {
    let mut t = DimTable::new(&HFK_LABELS, &[true, false]).unwrap();
    for k in 0..n as i64 {
        t.add2(&[-1 - 2 * k, -4 * k], 1).unwrap();
    }
    t
}

/// Both sides of `(t^(-1/2) - t^(1/2))^(l-1) = (-1)^(l-1) t^((l-1)/2) (1 - t^-1)^(l-1)`.
pub fn bigraded_hfk_factor(ell: usize) -> (LaurentPoly, LaurentPoly) {
    let e = ell as i64 - 1;
    let t = |s: &str| LaurentPoly::parse_with_vars(s, &["t"]).unwrap();
    let lhs = t("t^(-1/2) - t^(1/2)").pow(e).unwrap();
    let sign = if e % 2 == 0 { 1 } else { -1 };
    let rhs = LaurentPoly::var_half("t", e).scale(&rat(sign)) * t("1 - t^-1").pow(e).unwrap();
    (lhs.with_vars(&["t"]).unwrap(), rhs.with_vars(&["t"]).unwrap())
}

/// `sum (-1)^gr_M t^gr_T` of a table carried through the dictionary, compared
/// with `chi_trigraded(T)` at `a = -1, q = -t^(1/2)`.
pub fn dictionary_chi_pair(t: &DimTable, n: u32) -> Result<(LaurentPoly, LaurentPoly)> {
    let (hfk, _) = homfly_grading_dict(t, n)?;
    let lhs = chi_bigraded(&hfk, "gr_M", "gr_T")?;
    let tri = chi_trigraded(t, TriSign::Homfly)?;
    let rhs = tri.substitute_all(&[
        ("a", &LaurentPoly::int(-1)),
        ("q", &LaurentPoly::var_half("t", 1).scale(&rat(-1))),
    ])?;
    Ok((lhs.with_vars(&["t"])?, rhs.with_vars(&["t"])?))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryJson {
    /// Integers, or strings `"p/2"` in half-integral slots.
    pub deg: Vec<serde_json::Value>,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableJson {
    pub labels: Vec<String>,
    pub half: Vec<bool>,
    pub entries: Vec<EntryJson>,
}

impl DimTable {
    pub fn to_json(&self) -> TableJson {
        let entries = self
            .entries
            .iter()
            .map(|(deg, &dim)| EntryJson {
                deg: deg
                    .iter()
                    .map(|&v| if v % 2 == 0 { serde_json::json!(v / 2) } else { serde_json::json!(show(v)) })
                    .collect(),
                dim,
            })
            .collect();
        TableJson { labels: self.labels.clone(), half: self.half.clone(), entries }
    }

    pub fn from_json(j: &TableJson) -> Result<Self> {
        let mut t = Self::new(&j.labels, &j.half)?;
        for e in &j.entries {
            let deg2 = e
                .deg
                .iter()
                .map(|v| match v {
                    serde_json::Value::Number(x) => x.as_i64().map(|x| 2 * x),
                    serde_json::Value::String(s) => parse_half(s),
                    _ => None,
                })
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| GradingError::Table(format!("bad degree {:?}", e.deg)))?;
            t.add2(&deg2, e.dim)?;
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{eval_half_at_root, CycloNum};
    use crate::frcomplex::{chi_of_dims, unknot_hfkn};

    fn t(s: &str) -> LaurentPoly {
        LaurentPoly::parse_with_vars(s, &["t"]).unwrap()
    }

    fn hfk_table(e: &[(&[i64], usize)]) -> DimTable {
        DimTable::from_entries(&HFK_LABELS, &[true, false], e).unwrap()
    }

    #[test]
    fn bigraded_examples() {
        assert_eq!(chi_bigraded(&hfk_table(&[(&[0, 0], 1)]), "gr_M", "gr_T").unwrap(), t("1"));
        let tre = hfk_table(&[(&[1, 0], 1), (&[0, -1], 1), (&[-1, -2], 1)]);
        assert_eq!(chi_bigraded(&tre, "gr_M", "gr_T").unwrap(), t("t - 1 + t^-1"));
        assert!(chi_bigraded(&hfk_table(&[]), "gr_M", "gr_T").unwrap().is_zero());
        assert!(matches!(chi_bigraded(&tre, "gr_X", "gr_T"), Err(GradingError::UnknownLabel(_))));
    }

    #[test]
    fn trigraded_examples() {
        let one = DimTable::from_entries(&HOMFLY_LABELS, &[false; 3], &[(&[0, 0, 0], 1)]).unwrap();
        assert_eq!(chi_trigraded(&one, TriSign::Homfly).unwrap(), LaurentPoly::int(1));
        let odd = DimTable::from_entries(&HOMFLY_LABELS, &[false; 3], &[(&[0, 1, 0], 1)]).unwrap();
        assert!(matches!(chi_trigraded(&odd, TriSign::Homfly), Err(GradingError::OddHomological(_))));
        assert_eq!(
            chi_trigraded(&odd, TriSign::Slot(1)).unwrap(),
            LaurentPoly::parse_with_vars("-a", &["a", "q"]).unwrap()
        );
    }

    #[test]
    fn dictionary_examples() {
        let a = DimTable::from_entries(&HOMFLY_LABELS, &[false; 3], &[(&[2, 0, 0], 1)]).unwrap();
        let (h, s) = homfly_grading_dict(&a, 3).unwrap();
        assert_eq!(h.entries2().keys().next().unwrap(), &vec![2, 4]);
        assert_eq!(s.entries2().keys().next().unwrap(), &vec![4, 0]);
        let b = DimTable::from_entries(&HOMFLY_LABELS, &[false; 3], &[(&[0, 2, 2], 1)]).unwrap();
        let (h, s) = homfly_grading_dict(&b, 2).unwrap();
        assert_eq!(h.entries2().keys().next().unwrap(), &vec![0, 4]);
        assert_eq!(s.entries2().keys().next().unwrap(), &vec![8, 0]);
        let (l, r) = dictionary_chi_pair(&b, 2).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn collapse_examples() {
        let u = hfk_table(&[(&[0, 0], 1)]);
        for n in 1..6 {
            assert_eq!(collapse_to_frac(&u, n, Collapse::Hfk, 0).unwrap(), DimMap::from([(0, 1)]));
            let c = collapse_to_frac(&unknot_hfkn_table(n), n, Collapse::Hfk, 0).unwrap();
            assert_eq!(c, unknot_hfkn(n).chain_dims());
        }
        let s = DimTable::from_entries(&SLN_LABELS, &[false, false], &[(&[1, 0], 1)]).unwrap();
        let c = collapse_to_frac(&s, 2, Collapse::Sln, 0).unwrap();
        assert_eq!(c, DimMap::from([(1, 1)]));
        assert_eq!(chi_of_dims(2, &c), CycloNum::root(2, 1));
        assert!(matches!(collapse_to_frac(&s, 2, Collapse::Hfk, 0), Err(GradingError::Convention { .. })));
    }

    #[test]
    fn collapse_matches_substitution() {
        let tre = hfk_table(&[(&[1, 0], 1), (&[0, -1], 1), (&[-1, -2], 1)]);
        let chi = chi_bigraded(&tre, "gr_M", "gr_T").unwrap();
        for n in 1..7 {
            let c = collapse_to_frac(&tre, n, Collapse::Hfk, 0).unwrap();
            assert_eq!(chi_of_dims(n, &c), eval_half_at_root(&chi, n, n as i64 - 1).unwrap());
            let p = collapse_to_frac(&tre, n, Collapse::HfkPrimed, 0).unwrap();
            assert_eq!(chi_of_dims(n, &p), eval_half_at_root(&chi, n, n as i64 + 1).unwrap());
            let s = collapse_to_frac(&tre, n, Collapse::Hfk, 3).unwrap();
            assert_eq!(chi_of_dims(n, &s), chi_of_dims(n, &c).mul(&CycloNum::root(n, 3)));
        }
    }

    #[test]
    fn shift_specs() {
        assert_eq!(hfk_shift_spec(HfkVariant::Reduced, 1, None).alexander2, 0);
        let r = hfk_shift_spec(HfkVariant::Reduced, 2, Some(2));
        assert_eq!(r.frac, Some(-1));
        assert_eq!(CycloNum::root(2, -1), CycloNum::zeta_pow(4, 3));
        let m = hfk_shift_spec(HfkVariant::Minus, 1, None);
        assert_eq!((m.alexander2, m.maslov), (1, 1));
        assert_eq!(hfk_shift_spec(HfkVariant::Unreduced, 3, Some(4)).alexander2, 2);
    }

    #[test]
    fn factor_identity() {
        for ell in 1..=6 {
            let (l, r) = bigraded_hfk_factor(ell);
            assert_eq!(l, r);
        }
    }

    #[test]
    fn json_round_trip() {
        let tre = hfk_table(&[(&[1, 0], 1), (&[0, -1], 2)]);
        let mut half = tre.clone();
        half.add2(&[-1, 2], 4).unwrap();
        let text = serde_json::to_string(&half.to_json()).unwrap();
        assert!(text.contains("\"-1/2\""));
        let back: TableJson = serde_json::from_str(&text).unwrap();
        assert_eq!(DimTable::from_json(&back).unwrap(), half);
        let bad = r#"{"labels":["gr_T","gr_M"],"half":[true,false],"entries":[{"deg":[0,"1/2"],"dim":1}]}"#;
        assert!(DimTable::from_json(&serde_json::from_str(bad).unwrap()).is_err());
    }
}
