//! Exact coefficient field.
//!
//! Scalars live in `Q(zeta)[c, s]` where `zeta` is a primitive `4p`-th root of
//! unity (so `q = zeta^4`, `i = zeta^p` and `q^(1/2) = q^((p+1)/2)` are all
//! exact), `c` is the real `p`-th root of the representation parameter `r`
//! (`c^p = r`) and `s` is a formal `sqrt(pi)` symbol.
//!
//! Canonical text form: terms ordered by `sqrtpi` power, then `chat` power,
//! then `zeta` power, each written `coef*zeta^e*chat^k*sqrtpi^j` (unit factors
//! omitted) and joined with `" + "`. Zero is `"0"`.

mod cyclo;
mod qnum;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
pub(crate) use cyclo::Cyclo;
pub use qnum::{q_factorial, q_number};

/// Immutable description of the coefficient field for a given `p` and `r`.
#[derive(Debug)]
pub struct FieldContext {
    p: u32,
    r: BigRational,
    modulus: Vec<BigInt>,
    zeta_pows: Vec<Cyclo>,
    /// Exact rational `p`-th root of `r` when one exists; `c` then collapses.
    rational_root: Option<BigRational>,
}

impl FieldContext {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> &BigRational {
        &self.r
    }

    /// `Phi_{4p}` coefficients, constant term first.
    pub fn cyclotomic_modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Order of `zeta`.
    pub fn zeta_order(&self) -> u32 {
        4 * self.p
    }

    pub fn rational_root(&self) -> Option<&BigRational> {
        self.rational_root.as_ref()
    }

    pub(crate) fn zeta_pow_cyclo(&self, e: i64) -> &Cyclo {
        let n = self.zeta_order() as i64;
        &self.zeta_pows[e.rem_euclid(n) as usize]
    }
}

/// Builds a verified context.
pub fn make_context(p: i64, r: BigRational) -> Result<Arc<FieldContext>> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::InvalidOrder(p));
    }
    if r.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let p = p as u32;
    let modulus = cyclo::cyclotomic_polynomial(4 * p);
    let degree = modulus.len() - 1;
    let mut zeta_pows = Vec::with_capacity(4 * p as usize);
    let zeta = Cyclo::unit(degree, 1);
    let mut acc = Cyclo::unit(degree, 0);
    for _ in 0..4 * p {
        zeta_pows.push(acc.clone());
        acc = acc.mul(&zeta, &modulus);
    }
    let rational_root = rational_odd_root(&r, p);
    let ctx = Arc::new(FieldContext { p, r, modulus, zeta_pows, rational_root });

    let one = FieldScalar::one(&ctx);
    let q = FieldScalar::q_pow(&ctx, 1);
    let i = FieldScalar::i(&ctx);
    let half = FieldScalar::q_half(&ctx);
    assert!(q.pow(p as u64) == one, "q^p = 1");
    assert!(&i * &i == -&one, "i^2 = -1");
    assert!(&half * &half == q, "(q^(1/2))^2 = q");
    assert!(FieldScalar::chat(&ctx).pow(p as u64) == FieldScalar::from_rational(&ctx, ctx.r.clone()));
    Ok(ctx)
}

/// Convenience constructor for integer `r`.
pub fn context(p: i64, r: i64) -> Result<Arc<FieldContext>> {
    make_context(p, BigRational::from_integer(BigInt::from(r)))
}

fn rational_odd_root(r: &BigRational, p: u32) -> Option<BigRational> {
    let root = |n: &BigInt| -> Option<BigInt> {
        let neg = n.is_negative();
        let m = n.abs();
        let cand = m.nth_root(p);
        if cand.pow(p) == m {
            Some(if neg { -cand } else { cand })
        } else {
            None
        }
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

/// Exact, always-reduced field element.
#[derive(Clone)]
pub struct FieldScalar {
    ctx: Arc<FieldContext>,
    /// `(chat power < p, sqrtpi power) -> zeta polynomial`; no zero entries.
    parts: BTreeMap<(u32, u32), Cyclo>,
}

fn same_ctx(a: &Arc<FieldContext>, b: &Arc<FieldContext>) -> bool {
    Arc::ptr_eq(a, b) || (a.p == b.p && a.r == b.r)
}

impl FieldScalar {
    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        FieldScalar { ctx: ctx.clone(), parts: BTreeMap::new() }
    }

    pub fn one(ctx: &Arc<FieldContext>) -> Self {
        Self::from_int(ctx, 1)
    }

    pub fn from_int(ctx: &Arc<FieldContext>, n: i64) -> Self {
        Self::from_rational(ctx, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(ctx: &Arc<FieldContext>, n: i64, d: i64) -> Self {
        Self::from_rational(ctx, BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(ctx: &Arc<FieldContext>, v: BigRational) -> Self {
        let c = Cyclo::from_rational(ctx.degree(), &v);
        Self::from_part(ctx, (0, 0), c)
    }

    fn from_part(ctx: &Arc<FieldContext>, key: (u32, u32), c: Cyclo) -> Self {
        let mut parts = BTreeMap::new();
        if !c.is_zero() {
            parts.insert(key, c);
        }
        FieldScalar { ctx: ctx.clone(), parts }
    }

    /// `zeta^e` for any integer `e`.
    pub fn zeta_pow(ctx: &Arc<FieldContext>, e: i64) -> Self {
        Self::from_part(ctx, (0, 0), ctx.zeta_pow_cyclo(e).clone())
    }

    /// `q^k = zeta^(4k)`.
    pub fn q_pow(ctx: &Arc<FieldContext>, k: i64) -> Self {
        Self::zeta_pow(ctx, 4 * k)
    }

    pub fn i(ctx: &Arc<FieldContext>) -> Self {
        Self::zeta_pow(ctx, ctx.p as i64)
    }

    /// The fixed square root `q^((p+1)/2)`.
    pub fn q_half(ctx: &Arc<FieldContext>) -> Self {
        Self::q_pow(ctx, (ctx.p as i64 + 1) / 2)
    }

    /// The real `p`-th root of `r`.
    pub fn chat(ctx: &Arc<FieldContext>) -> Self {
        match &ctx.rational_root {
            Some(root) => Self::from_rational(ctx, root.clone()),
            None => Self::from_part(ctx, (1, 0), Cyclo::unit(ctx.degree(), 0)),
        }
    }

    pub fn sqrt_pi(ctx: &Arc<FieldContext>) -> Self {
        Self::from_part(ctx, (0, 1), Cyclo::unit(ctx.degree(), 0))
    }

    pub fn pi(ctx: &Arc<FieldContext>) -> Self {
        Self::from_part(ctx, (0, 2), Cyclo::unit(ctx.degree(), 0))
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// Value when the element is a plain rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.parts.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (key, c) = self.parts.iter().next().unwrap();
                if *key == (0, 0) {
                    c.as_rational()
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// True when no `sqrt(pi)` factor appears.
    pub fn is_pi_free(&self) -> bool {
        self.parts.keys().all(|&(_, s)| s == 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let mut parts = self.parts.clone();
        for (key, c) in &other.parts {
            match parts.remove(key) {
                Some(mine) => {
                    let sum = mine.add(c);
                    if !sum.is_zero() {
                        parts.insert(*key, sum);
                    }
                }
                None => {
                    parts.insert(*key, c.clone());
                }
            }
        }
        Ok(FieldScalar { ctx: self.ctx.clone(), parts })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let p = self.ctx.p;
        let mut parts: BTreeMap<(u32, u32), Cyclo> = BTreeMap::new();
        for (&(ca, sa), a) in &self.parts {
            for (&(cb, sb), b) in &other.parts {
                let mut prod = a.mul(b, &self.ctx.modulus);
                let mut c = ca + cb;
                if c >= p {
                    c -= p;
                    prod = prod.scale(&self.ctx.r);
                }
                let key = (c, sa + sb);
                let merged = match parts.remove(&key) {
                    Some(prev) => prev.add(&prod),
                    None => prod,
                };
                if !merged.is_zero() {
                    parts.insert(key, merged);
                }
            }
        }
        Ok(FieldScalar { ctx: self.ctx.clone(), parts })
    }

    /// Division by a divisor of the form `(zeta polynomial) * chat^k`.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(self * &other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_pi_free() {
            return Err(Error::UnsupportedDivisor("divisor contains sqrt(pi)".into()));
        }
        if self.parts.len() != 1 {
            return Err(Error::UnsupportedDivisor(
                "divisor mixes several powers of the real root c".into(),
            ));
        }
        let (&(k, _), c) = self.parts.iter().next().unwrap();
        let inv = invert_cyclo(c, &self.ctx)?;
        let base = Self::from_part(&self.ctx, (0, 0), inv);
        if k == 0 {
            return Ok(base);
        }
        // c^-k = c^(p-k) / r
        let r_inv = BigRational::one() / self.ctx.r.clone();
        let chat_part = Self::from_part(&self.ctx, (self.ctx.p - k, 0), Cyclo::unit(self.ctx.degree(), 0));
        Ok(&(&base * &chat_part) * &Self::from_rational(&self.ctx, r_inv))
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut result = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// Integer power, negative exponents through [`FieldScalar::inverse`].
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow(n as u64))
        } else {
            Ok(self.inverse()?.pow(n.unsigned_abs()))
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.ctx);
        }
        let parts = self.parts.iter().map(|(k, c)| (*k, c.scale(factor))).collect();
        FieldScalar { ctx: self.ctx.clone(), parts }
    }

    /// Complex conjugation: `zeta -> zeta^-1`, `c` and `sqrt(pi)` fixed.
    pub fn conjugate(&self) -> Self {
        let degree = self.ctx.degree();
        let mut parts = BTreeMap::new();
        for (key, c) in &self.parts {
            let mut acc = Cyclo::zero(degree);
            for k in 0..degree {
                if c.num[k].is_zero() {
                    continue;
                }
                let image = self.ctx.zeta_pow_cyclo(-(k as i64));
                acc = acc.add(&image.scale(&c.coeff(k)));
            }
            if !acc.is_zero() {
                parts.insert(*key, acc);
            }
        }
        FieldScalar { ctx: self.ctx.clone(), parts }
    }

    /// Numerical value under `zeta = exp(2 pi i / 4p)`, `c = r^(1/p)` real.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.ctx.zeta_order() as f64;
        let r = self.ctx.r.to_f64().unwrap_or(f64::NAN);
        let chat = r.signum() * r.abs().powf(1.0 / self.ctx.p as f64);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        let mut total = Complex64::new(0.0, 0.0);
        for (&(k, s), c) in &self.parts {
            let mut poly = Complex64::new(0.0, 0.0);
            for (e, coeff) in c.num.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let value = coeff.to_f64().unwrap_or(f64::NAN) / c.den.to_f64().unwrap_or(f64::NAN);
                poly += Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / n) * value;
            }
            total += poly * chat.powi(k as i32) * sqrt_pi.powi(s as i32);
        }
        total
    }

    /// Canonical text form (see module docs).
    pub fn canonical(&self) -> String {
        if self.parts.is_empty() {
            return "0".into();
        }
        let mut keys: Vec<_> = self.parts.keys().copied().collect();
        keys.sort_by_key(|&(c, s)| (s, c));
        let mut terms = Vec::new();
        for key in keys {
            let cy = &self.parts[&key];
            for e in 0..cy.num.len() {
                if cy.num[e].is_zero() {
                    continue;
                }
                let mut t = cy.coeff(e).to_string();
                if e > 0 {
                    t.push_str(&format!("*zeta^{e}"));
                }
                if key.0 > 0 {
                    t.push_str(&format!("*chat^{}", key.0));
                }
                if key.1 > 0 {
                    t.push_str(&format!("*sqrtpi^{}", key.1));
                }
                terms.push(t);
            }
        }
        terms.join(" + ")
    }

    /// When the element is `rational * zeta^e * chat^k * sqrtpi^j`, returns
    /// `(rational, e, k, j)` with `e` in `0..4p`.
    pub fn as_monomial(&self) -> Option<(BigRational, u32, u32, u32)> {
        if self.parts.len() != 1 {
            return None;
        }
        let (&(k, j), cy) = self.parts.iter().next().unwrap();
        for e in 0..self.ctx.zeta_order() {
            let basis = self.ctx.zeta_pow_cyclo(e as i64);
            let lead = (0..cy.num.len()).find(|&t| !basis.num[t].is_zero())?;
            if cy.num[lead].is_zero() {
                continue;
            }
            let ratio = cy.coeff(lead) / basis.coeff(lead);
            if basis.scale(&ratio) == *cy {
                return Some((ratio, e, k, j));
            }
        }
        None
    }

    /// Random element with small integer coefficients on powers of zeta.
    pub fn random<R: Rng>(ctx: &Arc<FieldContext>, rng: &mut R, max_terms: usize) -> Self {
        let mut out = Self::zero(ctx);
        let terms = rng.gen_range(1..=max_terms.max(1));
        for _ in 0..terms {
            let e = rng.gen_range(0..ctx.zeta_order()) as i64;
            let mut c = rng.gen_range(-3..=3);
            if c == 0 {
                c = 1;
            }
            out = &out + &(&Self::zeta_pow(ctx, e) * &Self::from_int(ctx, c));
        }
        if out.is_zero() {
            Self::one(ctx)
        } else {
            out
        }
    }
}

fn invert_cyclo(c: &Cyclo, ctx: &FieldContext) -> Result<Cyclo> {
    let d = ctx.degree();
    // Columns: c * zeta^j, solve M x = e_0 over Q.
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); d + 1]; d];
    let mut col = c.clone();
    let zeta = Cyclo::unit(d, 1);
    for j in 0..d {
        for row in 0..d {
            m[row][j] = col.coeff(row);
        }
        col = col.mul(&zeta, &ctx.modulus);
    }
    m[0][d] = BigRational::one();
    for piv in 0..d {
        let sel = (piv..d).find(|&r| !m[r][piv].is_zero()).ok_or(Error::DivisionByZero)?;
        m.swap(piv, sel);
        let inv = BigRational::one() / m[piv][piv].clone();
        for x in m[piv].iter_mut() {
            *x *= &inv;
        }
        for row in 0..d {
            if row != piv && !m[row][piv].is_zero() {
                let f = m[row][piv].clone();
                for k in piv..=d {
                    let t = &m[piv][k] * &f;
                    m[row][k] -= t;
                }
            }
        }
    }
    let mut out = Cyclo::zero(d);
    let mut den = BigInt::one();
    for row in &m {
        den = num_integer::Integer::lcm(&den, row[d].denom());
    }
    for (k, row) in m.iter().enumerate() {
        out.num[k] = (&row[d] * BigRational::from_integer(den.clone())).to_integer();
    }
    out.den = den;
    out.normalize();
    Ok(out)
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.parts == other.parts
    }
}

impl Eq for FieldScalar {}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldScalar({})", self.canonical())
    }
}

/// Readable form in terms of `q`, `i`, `chat` and `sqrtpi` where the element
/// is a single monomial; falls back to the canonical form.
impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some((ratio, e, k, j)) = self.as_monomial() else {
            return write!(f, "({})", self.canonical());
        };
        let p = self.ctx.p;
        // zeta^e = i^a q^b with e = p a + 4 b (mod 4p)
        let (a, b) = (0..4)
            .flat_map(|a| (0..p).map(move |b| (a, b)))
            .find(|&(a, b)| (p * a + 4 * b) % (4 * p) == e)
            .expect("CRT decomposition");
        let mut ratio = ratio;
        if a >= 2 {
            ratio = -ratio;
        }
        let mut factors = Vec::new();
        if a % 2 == 1 {
            factors.push("i".to_string());
        }
        match b {
            0 => {}
            1 => factors.push("q".into()),
            _ => factors.push(format!("q^{b}")),
        }
        if k > 0 {
            factors.push(if k == 1 { "chat".into() } else { format!("chat^{k}") });
        }
        if j > 0 {
            factors.push(if j == 1 { "sqrtpi".into() } else { format!("sqrtpi^{j}") });
        }
        let body = factors.join("*");
        if body.is_empty() {
            return write!(f, "{ratio}");
        }
        if ratio.is_one() {
            write!(f, "{body}")
        } else if ratio == -BigRational::one() {
            write!(f, "-{body}")
        } else {
            write!(f, "{ratio}*{body}")
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &FieldScalar) -> FieldScalar {
                self.$checked(rhs).expect("scalar contexts must match")
            }
        }
        impl std::ops::$trait<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$checked(&rhs).expect("scalar contexts must match")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        let parts = self.parts.iter().map(|(k, c)| (*k, c.neg())).collect();
        FieldScalar { ctx: self.ctx.clone(), parts }
    }
}

impl std::ops::Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

impl std::ops::AddAssign<&FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &FieldScalar) {
        *self = &*self + rhs;
    }
}

/// Parses `"3"`, `"-1/2"` into a rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad rational `{text}`")))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_p3() {
        let ctx = context(3, 1).unwrap();
        assert_eq!(ctx.degree(), 4);
        let m: Vec<i64> = ctx.cyclotomic_modulus().iter().map(|b| b.to_i64().unwrap()).collect();
        assert_eq!(m, vec![1, 0, -1, 0, 1]);
        assert_eq!(FieldScalar::q_pow(&ctx, 1), FieldScalar::zeta_pow(&ctx, 4));
        assert_eq!(FieldScalar::i(&ctx), FieldScalar::zeta_pow(&ctx, 3));
        assert_eq!(FieldScalar::q_half(&ctx), FieldScalar::q_pow(&ctx, 2));
        let h = FieldScalar::q_half(&ctx);
        assert_eq!(&h * &h, FieldScalar::q_pow(&ctx, 1));
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(context(4, 1).unwrap_err(), Error::InvalidOrder(4));
        assert_eq!(context(1, 1).unwrap_err(), Error::InvalidOrder(1));
        assert_eq!(context(3, 0).unwrap_err(), Error::ZeroParameter);
        assert!(context(9, 2).is_ok());
    }

    #[test]
    fn arithmetic_p3() {
        let ctx = context(3, 2).unwrap();
        let q = FieldScalar::q_pow(&ctx, 1);
        let q2 = FieldScalar::q_pow(&ctx, 2);
        assert_eq!(&q + &q2, FieldScalar::from_int(&ctx, -1));
        assert!((&q * &q2).is_one());
        let c = FieldScalar::chat(&ctx);
        assert_eq!(&c * &c.pow(2), FieldScalar::from_int(&ctx, 2));
        let third = FieldScalar::from_ratio(&ctx, 1, 3);
        assert_eq!((&q * &third).checked_div(&q).unwrap(), third);
    }

    #[test]
    fn division_errors() {
        let ctx = context(3, 2).unwrap();
        let zero = FieldScalar::zero(&ctx);
        let one = FieldScalar::one(&ctx);
        assert_eq!(one.checked_div(&zero).unwrap_err(), Error::DivisionByZero);
        let mixed = &one + &FieldScalar::chat(&ctx);
        assert!(matches!(one.checked_div(&mixed), Err(Error::UnsupportedDivisor(_))));
        assert!(matches!(one.checked_div(&FieldScalar::sqrt_pi(&ctx)), Err(Error::UnsupportedDivisor(_))));
        let other = context(5, 2).unwrap();
        assert_eq!(one.checked_add(&FieldScalar::one(&other)).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn chat_inverse() {
        let ctx = context(5, 3).unwrap();
        let c = FieldScalar::chat(&ctx);
        let inv = c.pow(2).inverse().unwrap();
        assert!((&inv * &c.pow(2)).is_one());
    }

    #[test]
    fn perfect_power_collapses_root() {
        let ctx = context(3, 8).unwrap();
        assert_eq!(FieldScalar::chat(&ctx), FieldScalar::from_int(&ctx, 2));
        let ctx = context(3, -1).unwrap();
        assert_eq!(FieldScalar::chat(&ctx), FieldScalar::from_int(&ctx, -1));
    }

    #[test]
    fn conjugation() {
        let ctx = context(3, 2).unwrap();
        let i = FieldScalar::i(&ctx);
        assert_eq!(i.conjugate(), -&i);
        assert_eq!(FieldScalar::q_pow(&ctx, 1).conjugate(), FieldScalar::q_pow(&ctx, 2));
        let c = FieldScalar::chat(&ctx);
        assert_eq!(c.conjugate(), c);
    }

    #[test]
    fn display_forms() {
        let ctx = context(3, 1).unwrap();
        assert_eq!(FieldScalar::q_pow(&ctx, 1).to_string(), "q");
        assert_eq!((-FieldScalar::i(&ctx)).to_string(), "-i");
        let v = &FieldScalar::i(&ctx) * &FieldScalar::q_pow(&ctx, 2);
        assert_eq!(v.to_string(), "i*q^2");
        assert_eq!(FieldScalar::from_ratio(&ctx, -1, 3).to_string(), "-1/3");
        assert_eq!(FieldScalar::zero(&ctx).canonical(), "0");
    }

    #[test]
    fn complex_embedding() {
        let ctx = context(5, 2).unwrap();
        let q = FieldScalar::q_pow(&ctx, 1).to_complex();
        assert!((q - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0)).norm() < 1e-14);
        let c = FieldScalar::chat(&ctx).to_complex();
        assert!((c.re - 2f64.powf(0.2)).abs() < 1e-14);
    }
}
