//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! A `CycloNum` of order `m` is a rational polynomial in `zeta = e^(2 pi i/m)`
//! reduced modulo the cyclotomic polynomial `Phi_m`. Roots of unity of the
//! form `e^(pi i k/n)` live in order `2n`. Values of different orders are
//! compared and combined inside the field of the least common multiple.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::laurent::{rat, LaurentPoly, RatPair, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("division by zero in cyclotomic field")]
    DivByZero,
    #[error("polynomial must be univariate to evaluate, got variables {0:?}")]
    NotUnivariate(Vec<String>),
    #[error("half-integral exponent with an integral-power substitution")]
    HalfExponent,
    #[error("bad cyclotomic literal: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CycloError>;

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Phi_m`, lowest degree first.
pub fn cyclotomic_poly(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m >= 1);
    if let Some(p) = phi_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Phi_d for every proper divisor d.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let f = cyclotomic_poly(d);
            num = div_monic_exact(&num, &f);
        }
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(m, p.clone());
    p
}

fn div_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut r = num.to_vec();
    let mut q = vec![BigInt::zero(); r.len() - dn];
    for i in (0..q.len()).rev() {
        let c = r[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            r[i + j] -= &c * d;
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|x| x.is_zero()));
    q
}

pub fn euler_phi(m: u32) -> usize {
    cyclotomic_poly(m).len() - 1
}

#[derive(Clone, Debug)]
pub struct CycloNum {
    order: u32,
    /// Reduced mod `Phi_order`, trailing zeros trimmed.
    coeffs: Vec<Rational>,
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn reduce(order: u32, mut v: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_poly(order);
    let d = phi.len() - 1;
    if v.len() > d {
        for i in (d..v.len()).rev() {
            let c = std::mem::take(&mut v[i]);
            if c.is_zero() {
                continue;
            }
            for (j, p) in phi.iter().enumerate().take(d) {
                v[i - d + j] -= &c * Rational::from_integer(p.clone());
            }
        }
        v.truncate(d);
    }
    trim(&mut v);
    v
}

impl CycloNum {
    pub fn zero(order: u32) -> Self {
        Self { order, coeffs: Vec::new() }
    }

    pub fn from_rational(c: Rational, order: u32) -> Self {
        let mut v = vec![c];
        trim(&mut v);
        Self { order, coeffs: v }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(Rational::one(), order)
    }

    pub fn int(c: i64, order: u32) -> Self {
        Self::from_rational(rat(c), order)
    }

    /// `zeta_order^k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self { order, coeffs: reduce(order, v) }
    }

    /// `zeta_{2n}^k = e^(pi i k / n)`.
    pub fn root(n: u32, k: i64) -> Self {
        Self::zeta_pow(2 * n, k)
    }

    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        Self { order, coeffs: reduce(order, coeffs) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients on the power basis, padded to `phi(order)`.
    pub fn coeffs(&self) -> Vec<Rational> {
        let mut v = self.coeffs.clone();
        v.resize(euler_phi(self.order), Rational::zero());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Re-express in the field of order `target`, a multiple of `self.order`.
    pub fn embed(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.order), "cannot embed order {} into {}", self.order, target);
        if target == self.order {
            return self.clone();
        }
        let s = (target / self.order) as usize;
        let mut v = vec![Rational::zero(); self.coeffs.len().saturating_sub(1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * s] = c.clone();
        }
        Self::from_coeffs(target, v)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.order.lcm(&b.order);
        (a.embed(m), b.embed(m))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut v = vec![Rational::zero(); n];
        for (i, c) in a.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            v[i] += c;
        }
        trim(&mut v);
        Self { order: a.order, coeffs: v }
    }

    pub fn neg(&self) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        if a.is_zero() || b.is_zero() {
            return Self::zero(a.order);
        }
        let mut v = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        Self::from_coeffs(a.order, v)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut v: Vec<Rational> = self.coeffs.iter().map(|x| x * c).collect();
        trim(&mut v);
        Self { order: self.order, coeffs: v }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CycloError::DivByZero);
        }
        let phi: Vec<Rational> = cyclotomic_poly(self.order).iter().map(|c| Rational::from_integer(c.clone())).collect();
        // invariant: s_i * self == r_i (mod phi)
        let (mut r0, mut r1) = (phi, self.coeffs.clone());
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since phi is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = Rational::one() / &r0[0];
        Ok(Self::from_coeffs(self.order, s0.into_iter().map(|x| x * &c).collect()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order);
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Complex conjugate (zeta -> zeta^-1).
    pub fn conj(&self) -> Self {
        let mut acc = Self::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&Self::zeta_pow(self.order, -(i as i64)).scale(c));
        }
        acc
    }

    /// Floating point value, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let x = c.to_f64().unwrap_or(f64::NAN);
            let th = 2.0 * std::f64::consts::PI * i as f64 / self.order as f64;
            re += x * th.cos();
            im += x * th.sin();
        }
        (re, im)
    }

    pub fn approx_string(&self) -> String {
        let (re, im) = self.approx();
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let (re, im) = (clean(re), clean(im));
        if im == 0.0 {
            format!("{re:.6}")
        } else if im < 0.0 {
            format!("{re:.6} - {:.6}i", -im)
        } else {
            format!("{re:.6} + {im:.6}i")
        }
    }

    /// Rational value as plain text when rational, otherwise the `cyclo(..)` form.
    pub fn compact(&self) -> String {
        match self.to_rational() {
            Some(r) => r.to_string(),
            None => self.to_string(),
        }
    }
}

fn poly_trim(mut v: Vec<Rational>) -> Vec<Rational> {
    trim(&mut v);
    v
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut v = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        v[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        v[i] -= c;
    }
    poly_trim(v)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    poly_trim(v)
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], poly_trim(r));
    }
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, x) in b.iter().enumerate() {
            r[i + j] -= &c * x;
        }
        q[i] = c;
    }
    r.truncate(db);
    (poly_trim(q), poly_trim(r))
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        write!(f, "cyclo({})[{}]", self.order, cs.join(", "))
    }
}

impl FromStr for CycloNum {
    type Err = CycloError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CycloError::Parse(s.to_string());
        let s2 = s.trim();
        let rest = s2.strip_prefix("cyclo(").ok_or_else(bad)?;
        let (ord, rest) = rest.split_once(')').ok_or_else(bad)?;
        let order: u32 = ord.trim().parse().map_err(|_| bad())?;
        if order == 0 {
            return Err(bad());
        }
        let body = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let mut coeffs = Vec::new();
        for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            coeffs.push(parse_rational(part).ok_or_else(bad)?);
        }
        Ok(Self::from_coeffs(order, coeffs))
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn univariate(p: &LaurentPoly) -> Result<LaurentPoly> {
    let t = p.trimmed();
    if t.vars().len() > 1 {
        return Err(CycloError::NotUnivariate(t.vars().to_vec()));
    }
    Ok(t)
}

/// Evaluate a univariate polynomial sending `v^(h/2)` to `zeta_order^(k h)`
/// for every doubled exponent `h`.
pub fn eval_half_power(p: &LaurentPoly, order: u32, k: i64) -> Result<CycloNum> {
    let p = univariate(p)?;
    let mut acc = CycloNum::zero(order);
    for (e, c) in p.terms() {
        let h = e.first().copied().unwrap_or(0);
        acc = acc.add(&CycloNum::zeta_pow(order, k * h).scale(c));
    }
    Ok(acc)
}

/// `v -> e^(pi i k/n)`. Half-integral exponents are read with the principal
/// branch `v^(1/2) -> e^(pi i k/(2n))`.
pub fn eval_at_root(p: &LaurentPoly, n: u32, k: i64) -> Result<CycloNum> {
    if p.has_integer_exponents() {
        let p = univariate(p)?;
        let mut acc = CycloNum::zero(2 * n);
        for (e, c) in p.terms() {
            let h = e.first().copied().unwrap_or(0) / 2;
            acc = acc.add(&CycloNum::root(n, k * h).scale(c));
        }
        Ok(acc)
    } else {
        eval_half_power(p, 4 * n, k)
    }
}

/// `v^(1/2) -> e^(pi i k/n)`.
pub fn eval_half_at_root(p: &LaurentPoly, n: u32, k: i64) -> Result<CycloNum> {
    eval_half_power(p, 2 * n, k)
}

/// Evaluate a univariate polynomial with integer exponents at an arbitrary
/// field element. Negative powers need `x != 0`.
pub fn eval_at(p: &LaurentPoly, x: &CycloNum) -> Result<CycloNum> {
    if !p.has_integer_exponents() {
        return Err(CycloError::HalfExponent);
    }
    let p = univariate(p)?;
    let mut acc = CycloNum::zero(x.order());
    for (e, c) in p.terms() {
        let h = e.first().copied().unwrap_or(0) / 2;
        acc = acc.add(&x.pow(h)?.scale(c));
    }
    Ok(acc)
}

/// Evaluate a fraction. A vanishing denominator is an error; exact-divide first.
pub fn eval_pair_half(p: &RatPair, n: u32, k: i64) -> Result<CycloNum> {
    let num = eval_half_at_root(&p.num, n, k)?;
    let den = eval_half_at_root(&p.den, n, k)?;
    if den.is_zero() {
        return Err(CycloError::DivByZero);
    }
    num.div(&den)
}

/// Abs value of the largest coefficient numerator; used to bound test growth.
pub fn height(x: &CycloNum) -> BigInt {
    x.coeffs.iter().map(|c| c.numer().abs()).max().unwrap_or_default()
}
