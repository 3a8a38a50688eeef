//! Sparse Laurent polynomials with rational coefficients.
//!
//! Exponents are stored doubled so that `t^(1/2)` is the integer exponent 1.
//! Every polynomial carries its ordered list of variable names; terms are kept
//! in a `BTreeMap` with zero coefficients removed, so equal polynomials have
//! identical term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable mismatch: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("division by zero polynomial")]
    DivByZero,
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("cannot raise non-monomial to power {0} (doubled exponent)")]
    NonMonomialPower(i64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, LaurentError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exponent vector with every entry doubled.
pub type Exps = Vec<i64>;

#[derive(Clone, Debug, Default)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exps, Rational>,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Self {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(c: Rational, vars: &[S]) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        if !c.is_zero() {
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant::<&str>(rat(c), &[])
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// `coeff * prod vars[i]^(exps[i]/2)`.
    pub fn monomial<S: AsRef<str>>(coeff: Rational, vars: &[S], doubled: &[i64]) -> Self {
        assert_eq!(vars.len(), doubled.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(doubled.to_vec(), coeff);
        }
        p
    }

    /// The single variable `name` raised to the integer power `k`.
    pub fn var_pow(name: &str, k: i64) -> Self {
        Self::monomial(rat(1), &[name], &[2 * k])
    }

    pub fn var(name: &str) -> Self {
        Self::var_pow(name, 1)
    }

    /// `name^(h/2)`.
    pub fn var_half(name: &str, h: i64) -> Self {
        Self::monomial(rat(1), &[name], &[h])
    }

    pub fn from_terms<S: AsRef<str>>(vars: &[S], terms: impl IntoIterator<Item = (Exps, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, doubled: &[i64]) -> Rational {
        self.terms.get(doubled).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Smallest doubled exponent of `name` over all terms.
    pub fn min_exp(&self, name: &str) -> Option<i64> {
        let i = self.var_index(name)?;
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn max_exp(&self, name: &str) -> Option<i64> {
        let i = self.var_index(name)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    /// True if every exponent of every variable is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| x % 2 == 0))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn add_term(&mut self, e: Exps, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Re-express over `vars`, which must contain every variable actually used.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let target: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match target.iter().position(|t| t == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(LaurentError::VarMismatch(self.vars.clone(), target));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, j) in map.iter().enumerate() {
                if let Some(j) = j {
                    ne[*j] = e[i];
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Drop variables that no term uses.
    pub fn trimmed(&self) -> Self {
        let used: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] != 0))
            .map(|(_, v)| v.clone())
            .collect();
        self.with_vars(&used).expect("used vars kept")
    }

    fn aligned(p: &Self, q: &Self) -> Result<(Self, Self)> {
        if p.vars == q.vars {
            return Ok((p.clone(), q.clone()));
        }
        if q.is_constant() {
            return Ok((p.clone(), q.with_vars(&p.vars)?));
        }
        if p.is_constant() {
            return Ok((p.with_vars(&q.vars)?, q.clone()));
        }
        Err(LaurentError::VarMismatch(p.vars.clone(), q.vars.clone()))
    }

    /// Like `aligned` but embeds both into the union of their variable lists.
    fn aligned_union(p: &Self, q: &Self) -> (Self, Self) {
        let mut vars = p.vars.clone();
        for v in &q.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (p.with_vars(&vars).unwrap(), q.with_vars(&vars).unwrap())
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        let (p, q) = Self::aligned(self, other)?;
        Ok(match op {
            ArithOp::Add => p.add_aligned(&q, false),
            ArithOp::Sub => p.add_aligned(&q, true),
            ArithOp::Mul => p.mul_aligned(&q),
        })
    }

    fn add_aligned(mut self, q: &Self, negate: bool) -> Self {
        for (e, c) in &q.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            self.add_term(e.clone(), c);
        }
        self
    }

    fn mul_aligned(&self, q: &Self) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &q.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            let mut acc = Self::constant(rat(1), &self.vars);
            let mut base = self.clone();
            let mut k = k as u64;
            while k > 0 {
                if k & 1 == 1 {
                    acc = acc.mul_aligned(&base);
                }
                base = base.mul_aligned(&base);
                k >>= 1;
            }
            return Ok(acc);
        }
        if !self.is_monomial() {
            return Err(LaurentError::NonMonomialPower(2 * k));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv = Rational::one() / c;
        let m = Self::monomial(inv, &self.vars, &e.iter().map(|x| -x).collect::<Vec<_>>());
        m.pow(-k)
    }

    /// Raise to the power `h/2`. Half-integral powers only exist for
    /// monomials with coefficient 1 and even doubled exponents.
    fn pow_half(&self, h: i64) -> Result<Self> {
        if h % 2 == 0 {
            return self.pow(h / 2);
        }
        if !self.is_monomial() {
            return Err(LaurentError::NonMonomialPower(h));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !c.is_one() || e.iter().any(|x| x % 2 != 0) {
            return Err(LaurentError::NonMonomialPower(h));
        }
        let root = Self::monomial(rat(1), &self.vars, &e.iter().map(|x| x / 2).collect::<Vec<_>>());
        root.pow(h)
    }

    /// Substitute `var := image`. The result lives over the variables of
    /// `self` minus `var`, followed by any new variables of `image`.
    pub fn substitute(&self, var: &str, image: &Self) -> Result<Self> {
        let idx = self
            .var_index(var)
            .ok_or_else(|| LaurentError::UnknownVar(var.to_string()))?;
        let mut vars: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        for v in &image.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        let image = image.with_vars(&vars)?;
        let mut cache: BTreeMap<i64, Self> = BTreeMap::new();
        let mut out = Self::zero(&vars);
        for (e, c) in &self.terms {
            let h = e[idx];
            if let std::collections::btree_map::Entry::Vacant(v) = cache.entry(h) {
                v.insert(image.pow_half(h)?);
            }
            let rest: Exps = {
                let mut r = vec![0; vars.len()];
                let mut j = 0;
                for (i, x) in e.iter().enumerate() {
                    if i == idx {
                        continue;
                    }
                    r[j] = *x;
                    j += 1;
                }
                r
            };
            let mono = Self::monomial(c.clone(), &vars, &rest);
            out = out.add_aligned(&mono.mul_aligned(&cache[&h]), false);
        }
        Ok(out)
    }

    /// Substitute several variables one after another.
    pub fn substitute_all(&self, subs: &[(&str, &Self)]) -> Result<Self> {
        let mut p = self.clone();
        for (v, img) in subs {
            p = p.substitute(v, img)?;
        }
        Ok(p)
    }

    /// Substitution allowing negative powers of a non-monomial image: the
    /// result is `num / image^k`.
    pub fn substitute_pair(&self, var: &str, image: &Self) -> Result<RatPair> {
        let min = self.min_exp(var).unwrap_or(0).min(0);
        if min % 2 != 0 && !image.is_monomial() {
            return Err(LaurentError::NonMonomialPower(min));
        }
        let k = -min / 2;
        let shifted = self.clone() * Self::var_pow(var, k).with_vars(&self.vars)?;
        let num = shifted.substitute(var, image)?;
        let den = image.pow(k)?;
        Ok(RatPair::new(num, den))
    }

    /// Exact quotient `self / d`; fails if any remainder is left.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(LaurentError::DivByZero);
        }
        let (p, d) = Self::aligned(self, d).or_else(|_| Ok::<_, LaurentError>(Self::aligned_union(self, d)))?;
        let n = p.vars.len();
        let mut q = Self::zero(&p.vars);
        if p.is_zero() {
            return Ok(q);
        }
        let lo: Vec<i64> = (0..n)
            .map(|i| p.terms.keys().map(|e| e[i]).min().unwrap() - d.terms.keys().map(|e| e[i]).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..n)
            .map(|i| p.terms.keys().map(|e| e[i]).max().unwrap() - d.terms.keys().map(|e| e[i]).max().unwrap())
            .collect();
        let (dl, dc) = d.leading_term().unwrap();
        let (dl, dc) = (dl.clone(), dc.clone());
        let mut r = p;
        while let Some((rl, rc)) = r.leading_term() {
            let e: Exps = rl.iter().zip(&dl).map(|(a, b)| a - b).collect();
            if e.iter().enumerate().any(|(i, x)| *x < lo[i] || *x > hi[i]) {
                return Err(LaurentError::NonzeroRemainder);
            }
            let m = Self::monomial(rc / &dc, &r.vars, &e);
            r = r.add_aligned(&m.mul_aligned(&d), true);
            q.add_term(e, m.terms.into_values().next().unwrap());
        }
        Ok(q)
    }

    /// Leading term in graded-lex order on doubled exponents.
    pub fn leading_term(&self) -> Option<(&Exps, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Terms sorted by decreasing graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Exps, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    /// Negate the exponents of `var` (t -> t^-1).
    pub fn invert_var(&self, var: &str) -> Result<Self> {
        let i = self
            .var_index(var)
            .ok_or_else(|| LaurentError::UnknownVar(var.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i] = -e[i];
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Multiply every term by `(-1)^(sum of the listed exponents)`; the listed
    /// variables must carry integer exponents.
    pub fn sign_flip(&self, vars: &[&str]) -> Result<Self> {
        let idx: Vec<usize> = vars
            .iter()
            .map(|v| self.var_index(v).ok_or_else(|| LaurentError::UnknownVar(v.to_string())))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let s: i64 = idx.iter().map(|&i| e[i] / 2).sum();
            let c = if s.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    /// For every term, the parity of the sum of the (integer) exponents of `vars`.
    pub fn term_parities(&self, vars: &[&str]) -> Result<Vec<bool>> {
        let idx: Vec<usize> = vars
            .iter()
            .map(|v| self.var_index(v).ok_or_else(|| LaurentError::UnknownVar(v.to_string())))
            .collect::<Result<_>>()?;
        Ok(self
            .terms
            .keys()
            .map(|e| idx.iter().map(|&i| e[i] / 2).sum::<i64>().rem_euclid(2) == 0)
            .collect())
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Parse with an explicit variable order.
    pub fn parse_with_vars<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Self> {
        let p: Self = text.parse()?;
        p.with_vars(vars)
    }
}

fn grlex(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    sa.cmp(&sb).then_with(|| a.cmp(b))
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (p, q) = Self::aligned_union(self, other);
        p.terms == q.terms
    }
}

impl Eq for LaurentPoly {}

macro_rules! impl_op {
    ($tr:ident, $m:ident, $op:expr) => {
        impl std::ops::$tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.arith(rhs, $op).expect("laurent arithmetic")
            }
        }
        impl std::ops::$tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl std::ops::$tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

impl_op!(Add, add, ArithOp::Add);
impl_op!(Sub, sub, ArithOp::Sub);
impl_op!(Mul, mul, ArithOp::Mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&rat(-1))
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        (&self).neg()
    }
}

/// A fraction `num / den` of Laurent polynomials. Equality is tested by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatPair {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RatPair {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one())
    }

    /// Clear the denominator; fails if the fraction is not a Laurent polynomial.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            self.num.arith(&other.num, ArithOp::Mul)?,
            self.den.arith(&other.den, ArithOp::Mul)?,
        ))
    }

    pub fn substitute(&self, var: &str, image: &LaurentPoly) -> Result<Self> {
        let sub = |p: &LaurentPoly| -> Result<RatPair> {
            if p.var_index(var).is_some() {
                p.substitute_pair(var, image)
            } else {
                Ok(RatPair::from_poly(p.clone()))
            }
        };
        let n = sub(&self.num)?;
        let d = sub(&self.den)?;
        Ok(Self::new(n.num.arith(&d.den, ArithOp::Mul)?, n.den.arith(&d.num, ArithOp::Mul)?))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl PartialEq for RatPair {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = LaurentPoly::aligned_union(&self.num, &other.den);
        let (c, d) = LaurentPoly::aligned_union(&other.num, &self.den);
        a.mul_aligned(&b) == c.mul_aligned(&d)
    }
}

impl fmt::Display for RatPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

fn fmt_exp(var: &str, e: i64) -> String {
    if e % 2 == 0 {
        match e / 2 {
            1 => var.to_string(),
            k => format!("{var}^{k}"),
        }
    } else {
        format!("{var}^({e}/2)")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, x)| **x != 0)
                .map(|(v, x)| fmt_exp(v, *x))
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(LaurentError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.int()?;
        let v: i64 = v.try_into().map_err(|_| LaurentError::Parse { pos: self.pos, msg: "exponent too large".into() })?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent after `^`: `k`, `-k`, `(k)`, `(p/2)`. Returned doubled.
    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            let p = self.signed_int()?;
            let out = if self.eat(b'/') {
                let q = self.int()?;
                if q == BigInt::from(2) {
                    p
                } else if q == BigInt::from(1) {
                    2 * p
                } else {
                    return self.err("only halves are allowed as fractional exponents");
                }
            } else {
                2 * p
            };
            if !self.eat(b')') {
                return self.err("expected `)`");
            }
            Ok(out)
        } else {
            Ok(2 * self.signed_int()?)
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() {
            let c = self.s[self.pos];
            let ok = c.is_ascii_alphabetic() || c == b'_' || (self.pos > start && c.is_ascii_digit());
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            Some(String::from_utf8(self.s[start..self.pos].to_vec()).unwrap())
        }
    }

    /// One term without its leading sign: factors joined by `*`.
    fn term(&mut self) -> Result<(Rational, Vec<(String, i64)>)> {
        let mut coeff = Rational::one();
        let mut vars = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.int()?;
                    let mut r = Rational::from_integer(n);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let d = self.int()?;
                        if d.is_zero() {
                            return self.err("zero denominator");
                        }
                        r /= Rational::from_integer(d);
                    }
                    coeff *= r;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let name = self.ident().unwrap();
                    let e = if self.eat(b'^') { self.exponent()? } else { 2 };
                    vars.push((name, e));
                }
                _ => return self.err("expected coefficient or variable"),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((coeff, vars))
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Terms `c*v^(p/2)` joined by `+`/`-`. The variable list is the sorted
    /// set of names that occur.
    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser { s: text.as_bytes(), pos: 0 };
        let mut raw: Vec<(Rational, Vec<(String, i64)>)> = Vec::new();
        let mut first = true;
        loop {
            let neg = if p.eat(b'-') {
                true
            } else if p.eat(b'+') || first {
                false
            } else {
                return p.err("expected `+` or `-`");
            };
            first = false;
            let (c, v) = p.term()?;
            raw.push((if neg { -c } else { c }, v));
            if p.peek().is_none() {
                break;
            }
        }
        let mut names: Vec<String> = raw.iter().flat_map(|(_, v)| v.iter().map(|(n, _)| n.clone())).collect();
        names.sort();
        names.dedup();
        let mut out = LaurentPoly::zero(&names);
        for (c, v) in raw {
            let mut e = vec![0; names.len()];
            for (n, x) in v {
                let i = names.iter().position(|m| *m == n).unwrap();
                e[i] += x;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `q - q^-1`.
pub fn z_binomial(q: &str) -> LaurentPoly {
    LaurentPoly::var(q) - LaurentPoly::var_pow(q, -1)
}

/// Quantum integer `[n]_q = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn quantum_int(q: &str, n: u32) -> LaurentPoly {
    let n = n as i64;
    let mut out = LaurentPoly::zero(&[q]);
    for k in 0..n {
        out = out + LaurentPoly::var_pow(q, n - 1 - 2 * k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arith_examples() {
        assert_eq!(p("t - 1") + p("1 + t^-1"), p("t + t^-1"));
        assert_eq!(p("q - q^-1") * p("q + q^-1"), p("q^2 - q^-2"));
        let z = p("a - a^-1") * LaurentPoly::zero(&["a"]);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn mismatch_is_error() {
        let r = p("a + 1").arith(&p("t"), ArithOp::Add);
        assert!(matches!(r, Err(LaurentError::VarMismatch(..))));
        // constants combine with anything
        assert_eq!(p("a + 1") + p("2"), p("a + 3"));
    }

    #[test]
    fn substitute_a_to_q2() {
        let pbar = LaurentPoly::parse_with_vars("-a^4 + a^2*q^2 + a^2*q^-2", &["a", "q"]).unwrap();
        let r = pbar.substitute("a", &LaurentPoly::var_pow("q", 2)).unwrap();
        assert_eq!(r, p("-q^8 + q^6 + q^2"));
    }

    #[test]
    fn substitute_sign_flip_on_monomial() {
        let m = LaurentPoly::parse_with_vars("5*a^3*q^-2", &["a", "q"]).unwrap();
        let r = m
            .substitute("a", &p("-a"))
            .unwrap()
            .substitute("q", &p("-q"))
            .unwrap()
            .with_vars(&["a", "q"])
            .unwrap();
        assert_eq!(r, m.scale(&rat(-1)));
        assert_eq!(m.sign_flip(&["a", "q"]).unwrap(), r);
    }

    #[test]
    fn invert_trefoil_delta() {
        let d = p("t - 1 + t^-1");
        assert_eq!(d.substitute("t", &p("t^-1")).unwrap(), d);
        assert_eq!(d.invert_var("t").unwrap(), d);
        let h = p("t^(1/2) - t^(-1/2)");
        assert_eq!(h.invert_var("t").unwrap(), -h.clone());
    }

    #[test]
    fn half_power_substitution() {
        // q -> -t^(1/2) on q^3
        let r = p("q^3").substitute("q", &p("-t^(1/2)")).unwrap();
        assert_eq!(r, p("-t^(3/2)"));
        // t^(1/2) with t -> s^2
        let r = p("t^(1/2)").substitute("t", &p("s^2")).unwrap();
        assert_eq!(r, p("s"));
        // half power of a binomial is rejected
        assert!(p("t^(1/2)").substitute("t", &p("1 + s")).is_err());
    }

    #[test]
    fn negative_binomial_power_needs_pair() {
        let x = LaurentPoly::parse_with_vars("a*z^-1 + z", &["a", "z"]).unwrap();
        assert!(matches!(x.substitute("z", &z_binomial("q")), Err(LaurentError::NonMonomialPower(_))));
        let pair = x.substitute_pair("z", &z_binomial("q")).unwrap();
        assert_eq!(pair.den, z_binomial("q"));
        // multiply back
        let aq = |s: &str| LaurentPoly::parse_with_vars(s, &["a", "q"]).unwrap();
        assert_eq!(pair.num, aq("a") + aq("q^2 - 2 + q^-2"));
    }

    #[test]
    fn exact_div_examples() {
        let num = LaurentPoly::parse_with_vars("a*z^-1 - a^-1*z^-1", &["a", "z"]).unwrap();
        let q = num.exact_div(&p("a - a^-1")).unwrap();
        assert_eq!(q, p("z^-1"));
        assert_eq!(p("q^2 - q^-2").exact_div(&p("q - q^-1")).unwrap(), p("q + q^-1"));
        assert_eq!(p("q^3 + 1").exact_div(&p("q - q^-1")), Err(LaurentError::NonzeroRemainder));
        assert_eq!(p("q").exact_div(&LaurentPoly::zero(&["q"])), Err(LaurentError::DivByZero));
    }

    #[test]
    fn quantum_integers() {
        for n in 1..8 {
            let qn = quantum_int("q", n);
            let lhs = qn.clone() * z_binomial("q");
            let rhs = LaurentPoly::var_pow("q", n as i64) - LaurentPoly::var_pow("q", -(n as i64));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(quantum_int("q", 4).to_string(), "q^3 + q + q^-1 + q^-3");
    }

    #[test]
    fn text_round_trip_examples() {
        assert_eq!(p("t - 1 + t^-1").to_string(), "t - 1 + t^-1");
        let h = p("t^(1/2) - t^(-1/2)");
        assert_eq!(h.coeff(&[1]), rat(1));
        assert_eq!(h.coeff(&[-1]), rat(-1));
        assert_eq!(h.to_string(), "t^(1/2) - t^(-1/2)");
        let z = p("0");
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert_eq!(p("3/2*a^2*z - 1/3").to_string(), "3/2*a^2*z - 1/3");
    }

    #[test]
    fn parse_errors() {
        assert!("t +".parse::<LaurentPoly>().is_err());
        assert!("t^(1/3)".parse::<LaurentPoly>().is_err());
        assert!("2 t".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn ratpair_equality() {
        let a = RatPair::new(p("q^2 - q^-2"), p("q - q^-1"));
        let b = RatPair::from_poly(p("q + q^-1"));
        assert_eq!(a, b);
        assert_eq!(a.to_poly().unwrap(), p("q + q^-1"));
    }
}
