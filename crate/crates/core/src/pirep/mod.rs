//! The representation `pi_r` of the fractional supersymmetry algebra on
//! `e^(mu x) t^j` with `t^p = 1`:
//!
//! `p(+/-) -> (-chat) e^(+/-x/p) t^(+/-1)`, `P(+/-) -> -r e^(+/-x)`,
//! `H -> -h i d/dx`, `k -> a(t) |-> a(qt)`.
//!
//! With `h = +1` this is the representation as usually printed and satisfies
//! `[p(+/-), H] = (+/-)(i/p) p(+/-)`. The pairing fixes `h = -1`, for which the
//! same formulas with `H -> +i d/dx` represent the algebra; the two algebras
//! are isomorphic through `H -> -H`.

pub mod adjoint;
pub mod linalg;
pub mod suite;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::MonomialAlgebra;
use crate::linear::LinComb;
use crate::scalars::{parse_rational, FieldContext, FieldScalar};
use crate::ufalg::{UAlgebra, UElement, UGen, UMonomial};

pub use suite::{commutant_dimension, gram_matrix, gram_signature, pi_axiom_suite, SignatureResult};

/// `e^(mu x) t^j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisVector {
    pub mu: BigRational,
    pub j: u32,
}

impl BasisVector {
    pub fn new(mu: BigRational, j: i64, p: u32) -> Self {
        BasisVector { mu, j: j.rem_euclid(p as i64) as u32 }
    }

    pub fn origin() -> Self {
        BasisVector { mu: BigRational::zero(), j: 0 }
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.j)
    }
}

impl Serialize for BasisVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BasisVector", 2)?;
        st.serialize_field("mu", &self.mu.to_string())?;
        st.serialize_field("j", &self.j)?;
        st.end()
    }
}

pub type PiVector = LinComb<BasisVector>;

/// Ordered finite set of basis vectors.
#[derive(Clone, Debug)]
pub struct Window {
    vectors: Vec<BasisVector>,
    index: HashMap<BasisVector, usize>,
}

impl Window {
    pub fn new(vectors: Vec<BasisVector>) -> Self {
        let mut unique = Vec::new();
        let mut index = HashMap::new();
        for v in vectors {
            if !index.contains_key(&v) {
                index.insert(v.clone(), unique.len());
                unique.push(v);
            }
        }
        Window { vectors: unique, index }
    }

    /// `mu0, mu0 + step, ..., <= mu1` crossed with every `j < p`.
    pub fn grid(mu0: &BigRational, mu1: &BigRational, step: &BigRational, p: u32) -> Result<Self> {
        Ok(Self::new(
            weights(mu0, mu1, step)?.into_iter().flat_map(|mu| (0..p).map(move |j| BasisVector { mu: mu.clone(), j })).collect(),
        ))
    }

    /// The `p+` orbit `(mu0 + a/p, j0 + a)` for `a < len`.
    pub fn chain(mu0: &BigRational, j0: i64, len: usize, p: u32) -> Self {
        let step = BigRational::new(BigInt::one(), BigInt::from(p));
        Self::new(
            (0..len)
                .map(|a| BasisVector::new(mu0 + &step * BigRational::from_integer(BigInt::from(a)), j0 + a as i64, p))
                .collect(),
        )
    }

    /// Parses `mu0:mu1:step,jall`, `mu0:mu1:step,j=<int>` or
    /// `mu0:mu1:step,chain=<j0>`, the last following the `p+` orbit.
    pub fn parse(text: &str, p: u32) -> Result<Self> {
        let bad = || Error::Parse(format!("window `{text}`: expected mu0:mu1:step,jall"));
        let (range, js) = text.split_once(',').ok_or_else(bad)?;
        let parts: Vec<&str> = range.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mu0 = parse_rational(parts[0])?;
        let mu1 = parse_rational(parts[1])?;
        let step = parse_rational(parts[2])?;
        let mus = weights(&mu0, &mu1, &step)?;
        let js = js.trim();
        let vectors = if js == "jall" {
            mus.into_iter().flat_map(|mu| (0..p).map(move |j| BasisVector { mu: mu.clone(), j })).collect()
        } else if let Some(j) = js.strip_prefix("j=") {
            let j: i64 = j.parse().map_err(|_| bad())?;
            mus.into_iter().map(|mu| BasisVector::new(mu, j, p)).collect()
        } else if let Some(j0) = js.strip_prefix("chain=") {
            let j0: i64 = j0.parse().map_err(|_| bad())?;
            let scale = BigRational::from_integer(BigInt::from(p));
            let mut out = Vec::new();
            for mu in mus {
                let offset = (&mu - &mu0) * &scale;
                if !offset.is_integer() {
                    return Err(Error::Parse(format!("window `{text}`: chain steps must be multiples of 1/{p}")));
                }
                let a: i64 = offset.to_integer().try_into().map_err(|_| bad())?;
                out.push(BasisVector::new(mu, j0 + a, p));
            }
            out
        } else {
            return Err(bad());
        };
        Ok(Self::new(vectors))
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[BasisVector] {
        &self.vectors
    }

    pub fn position(&self, v: &BasisVector) -> Option<usize> {
        self.index.get(v).copied()
    }
}

fn weights(mu0: &BigRational, mu1: &BigRational, step: &BigRational) -> Result<Vec<BigRational>> {
    if !step.is_positive() {
        return Err(Error::Parse("window step must be positive".into()));
    }
    let mut out = Vec::new();
    let mut mu = mu0.clone();
    while &mu <= mu1 {
        out.push(mu.clone());
        mu += step;
        if out.len() > 100_000 {
            return Err(Error::Parse("window too large".into()));
        }
    }
    Ok(out)
}

/// Matrix of an operator on a window; column `c` is the image of the `c`-th
/// window vector. Columns whose image leaves the window are undefined and
/// hold zeros. Products compose as operators: `(A * B) v = A (B v)`.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub window: Vec<BasisVector>,
    pub entries: Vec<Vec<FieldScalar>>,
    pub defined: Vec<bool>,
}

impl OperatorMatrix {
    pub fn identity(ctx: &Arc<FieldContext>, window: &Window) -> Self {
        let n = window.len();
        let entries = (0..n)
            .map(|r| (0..n).map(|c| if r == c { FieldScalar::one(ctx) } else { FieldScalar::zero(ctx) }).collect())
            .collect();
        OperatorMatrix { window: window.vectors.clone(), entries, defined: vec![true; n] }
    }

    pub fn dim(&self) -> usize {
        self.window.len()
    }

    pub fn is_total(&self) -> bool {
        self.defined.iter().all(|&d| d)
    }

    pub fn defined_columns(&self) -> usize {
        self.defined.iter().filter(|&&d| d).count()
    }

    fn zero_like(&self) -> Vec<Vec<FieldScalar>> {
        let zero = self.entries.first().and_then(|r| r.first()).map(|s| FieldScalar::zero(s.context()));
        match zero {
            Some(z) => vec![vec![z; self.dim()]; self.dim()],
            None => Vec::new(),
        }
    }

    /// Operator composition on the columns where it is defined.
    pub fn compose(&self, rhs: &OperatorMatrix) -> OperatorMatrix {
        let n = self.dim();
        let mut entries = self.zero_like();
        let mut defined = vec![false; n];
        for c in 0..n {
            if !rhs.defined[c] {
                continue;
            }
            let support: Vec<usize> = (0..n).filter(|&k| !rhs.entries[k][c].is_zero()).collect();
            if support.iter().any(|&k| !self.defined[k]) {
                continue;
            }
            defined[c] = true;
            for r in 0..n {
                for &k in &support {
                    let a = &self.entries[r][k];
                    if !a.is_zero() {
                        entries[r][c] = &entries[r][c] + &(a * &rhs.entries[k][c]);
                    }
                }
            }
        }
        OperatorMatrix { window: self.window.clone(), entries, defined }
    }

    pub fn pow(&self, ctx: &Arc<FieldContext>, n: u32) -> OperatorMatrix {
        let window = Window::new(self.window.clone());
        (0..n).fold(OperatorMatrix::identity(ctx, &window), |acc, _| self.compose(&acc))
    }

    /// `self + factor * rhs`, defined where both are.
    pub fn add_scaled(&self, rhs: &OperatorMatrix, factor: &FieldScalar) -> OperatorMatrix {
        let n = self.dim();
        let mut entries = self.entries.clone();
        let mut defined = vec![false; n];
        for c in 0..n {
            defined[c] = self.defined[c] && rhs.defined[c];
            for r in 0..n {
                if !defined[c] {
                    entries[r][c] = FieldScalar::zero(factor.context());
                } else if !rhs.entries[r][c].is_zero() {
                    entries[r][c] = &entries[r][c] + &(factor * &rhs.entries[r][c]);
                }
            }
        }
        OperatorMatrix { window: self.window.clone(), entries, defined }
    }

    pub fn commutator(&self, rhs: &OperatorMatrix) -> OperatorMatrix {
        let one = self.entries.first().and_then(|r| r.first()).map(|s| FieldScalar::one(s.context()));
        match one {
            Some(one) => self.compose(rhs).add_scaled(&rhs.compose(self), &-one),
            None => self.clone(),
        }
    }

    /// Compares on the columns where both sides are defined. Returns the number
    /// of compared columns and the first differing one.
    pub fn agrees_with(&self, rhs: &OperatorMatrix) -> (usize, Option<usize>) {
        let mut checked = 0;
        for c in 0..self.dim() {
            if !(self.defined[c] && rhs.defined[c]) {
                continue;
            }
            checked += 1;
            if (0..self.dim()).any(|r| self.entries[r][c] != rhs.entries[r][c]) {
                return (checked, Some(c));
            }
        }
        (checked, None)
    }

    /// Column `c` written as a combination of window vectors.
    pub fn column_text(&self, c: usize) -> String {
        if !self.defined[c] {
            return "undefined".into();
        }
        let terms: Vec<String> = (0..self.dim())
            .filter(|&r| !self.entries[r][c].is_zero())
            .map(|r| format!("{} {}", self.entries[r][c], self.window[r]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Entries as canonical scalar strings, `null` on undefined columns.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.dim())
            .map(|r| {
                serde_json::Value::Array(
                    (0..self.dim())
                        .map(|c| {
                            if self.defined[c] {
                                serde_json::Value::String(self.entries[r][c].canonical())
                            } else {
                                serde_json::Value::Null
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({
            "window": self.window,
            "entries": rows,
        })
    }
}

/// The representation with its H-orientation.
#[derive(Clone, Debug)]
pub struct PiRep {
    ctx: Arc<FieldContext>,
    h_sign: i8,
}

impl PiRep {
    pub fn new(ctx: &Arc<FieldContext>, h_sign: i8) -> Self {
        assert!(h_sign == 1 || h_sign == -1, "h_sign must be +1 or -1");
        PiRep { ctx: ctx.clone(), h_sign }
    }

    /// `H -> -i d/dx`.
    pub fn printed(ctx: &Arc<FieldContext>) -> Self {
        Self::new(ctx, 1)
    }

    /// The orientation matching the relations of `u`.
    pub fn for_algebra(u: &UAlgebra) -> Self {
        Self::new(u.ctx(), u.h_sign())
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn h_sign(&self) -> i8 {
        self.h_sign
    }

    fn p(&self) -> u32 {
        self.ctx.p()
    }

    fn shift(&self, v: &BasisVector, dmu: BigRational, dj: i64) -> BasisVector {
        BasisVector::new(&v.mu + dmu, v.j as i64 + dj, self.p())
    }

    fn minus_chat(&self) -> FieldScalar {
        -FieldScalar::chat(&self.ctx)
    }

    fn minus_r(&self) -> FieldScalar {
        FieldScalar::from_rational(&self.ctx, -self.ctx.r().clone())
    }

    /// `-h i mu`.
    fn h_eigenvalue(&self, mu: &BigRational) -> FieldScalar {
        FieldScalar::i(&self.ctx).scale(&(mu * BigRational::from_integer(BigInt::from(-self.h_sign as i64))))
    }

    pub fn apply_gen(&self, g: UGen, v: &BasisVector) -> (FieldScalar, BasisVector) {
        let p = self.p() as i64;
        let frac = BigRational::new(BigInt::one(), BigInt::from(p));
        match g {
            UGen::PPlus => (self.minus_chat(), self.shift(v, frac, 1)),
            UGen::PMinus => (self.minus_chat(), self.shift(v, -frac, -1)),
            UGen::TransPlus => (self.minus_r(), self.shift(v, BigRational::one(), 0)),
            UGen::TransMinus => (self.minus_r(), self.shift(v, -BigRational::one(), 0)),
            UGen::H => (self.h_eigenvalue(&v.mu), v.clone()),
            UGen::Kappa => (FieldScalar::q_pow(&self.ctx, v.j as i64), v.clone()),
            UGen::KappaInv => (FieldScalar::q_pow(&self.ctx, -(v.j as i64)), v.clone()),
        }
    }

    /// `pi(p+^n p-^m k^k P+^a P-^b H^l) v`, the rightmost factor acting first.
    pub fn apply_mon(&self, x: &UMonomial, v: &BasisVector) -> (FieldScalar, BasisVector) {
        let p = self.p() as i64;
        let mut coeff = self.h_eigenvalue(&v.mu).pow(x.l as u64);
        coeff = &coeff * &self.minus_r().pow((x.a + x.b) as u64);
        coeff = &coeff * &FieldScalar::q_pow(&self.ctx, x.k as i64 * v.j as i64);
        coeff = &coeff * &self.minus_chat().pow((x.n + x.m) as u64);
        let dn = x.n as i64 - x.m as i64;
        let dmu = BigRational::new(BigInt::from(dn), BigInt::from(p)) + BigRational::from_integer(BigInt::from(x.a as i64 - x.b as i64));
        (coeff, self.shift(v, dmu, dn))
    }

    pub fn apply(&self, x: &UElement, v: &BasisVector) -> PiVector {
        let mut out = PiVector::zero(&self.ctx);
        for (mon, c) in x.iter() {
            let (coeff, w) = self.apply_mon(mon, v);
            out.add_term(w, c * &coeff);
        }
        out
    }

    pub fn apply_vector(&self, x: &UElement, v: &PiVector) -> PiVector {
        v.map_linear(|b| self.apply(x, b))
    }

    /// Matrix on the window, with undefined columns where the image escapes.
    pub fn partial_matrix(&self, x: &UElement, window: &Window) -> OperatorMatrix {
        let n = window.len();
        let zero = FieldScalar::zero(&self.ctx);
        let mut entries = vec![vec![zero; n]; n];
        let mut defined = vec![true; n];
        for (c, v) in window.vectors().iter().enumerate() {
            let image = self.apply(x, v);
            let rows: Option<Vec<(usize, FieldScalar)>> =
                image.iter().map(|(w, coeff)| window.position(w).map(|r| (r, coeff.clone()))).collect();
            match rows {
                Some(rows) => {
                    for (r, coeff) in rows {
                        entries[r][c] = coeff;
                    }
                }
                None => defined[c] = false,
            }
        }
        OperatorMatrix { window: window.vectors().to_vec(), entries, defined }
    }

    /// Matrix on a window closed under `x`; escapes are reported by name.
    pub fn matrix(&self, x: &UElement, window: &Window) -> Result<OperatorMatrix> {
        let mut escapees = Vec::new();
        for v in window.vectors() {
            for (w, _) in self.apply(x, v).iter() {
                if window.position(w).is_none() && !escapees.contains(w) {
                    escapees.push(w.clone());
                }
            }
        }
        if !escapees.is_empty() {
            let names: Vec<String> = escapees.iter().map(|w| w.to_string()).collect();
            return Err(Error::WindowEscape(names.join(", ")));
        }
        Ok(self.partial_matrix(x, window))
    }

    /// Compression onto the window: escaping components are dropped.
    pub fn compressed_matrix(&self, x: &UElement, window: &Window) -> OperatorMatrix {
        let n = window.len();
        let zero = FieldScalar::zero(&self.ctx);
        let mut entries = vec![vec![zero; n]; n];
        for (c, v) in window.vectors().iter().enumerate() {
            for (w, coeff) in self.apply(x, v).iter() {
                if let Some(r) = window.position(w) {
                    entries[r][c] = coeff.clone();
                }
            }
        }
        OperatorMatrix { window: window.vectors().to_vec(), entries, defined: vec![true; n] }
    }
}

/// `pi_r(g) v` in the printed orientation.
pub fn pi_apply(g: UGen, v: &BasisVector, ctx: &Arc<FieldContext>) -> (FieldScalar, BasisVector) {
    PiRep::printed(ctx).apply_gen(g, v)
}

/// One term of the universal corepresentation sum: the dual coefficient
/// `a = e+^n e-^m zeta(k + n + m, d) z+^t z-^s L^l` and the vector
/// `pi(phi) v / <phi, a>` for `phi = p+^n p-^m k^k P+^t P-^s H^l`.
#[derive(Clone, Debug)]
pub struct TrTerm {
    pub phi: UMonomial,
    pub coefficient: crate::afalg::AElement,
    pub scale: FieldScalar,
    pub vector: BasisVector,
    pub denominator: FieldScalar,
}

pub fn t_r_term(d: &crate::duality::Duality, indices: [u32; 6], v: &BasisVector) -> Result<TrTerm> {
    use crate::afalg::AMonomial;
    use crate::hopf::MonomialAlgebra;
    let p = d.p();
    let [n, m, k, t, s, l] = indices;
    if n >= p || m >= p || k >= p {
        return Err(Error::OutOfRange(format!("n, m, k must be below {p}, got ({n}, {m}, {k})")));
    }
    let phi = UMonomial::new(n, m, k, t, s, l);
    let a = d.a();
    let rest = AMonomial::new(0, 0, 0, t, s, l, BigRational::zero());
    let coefficient = a.mul(
        &a.mul(&a.mon(AMonomial::grassmann(n, m, 0)), &a.zeta_projector((k + n + m) as i64)),
        &a.mon(rest),
    );
    let denominator = d.pair(&d.u().mon(phi), &coefficient);
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator(format!("{indices:?}")));
    }
    let rep = PiRep::for_algebra(d.u());
    let (value, vector) = rep.apply_mon(&phi, v);
    let scale = value.checked_div(&denominator)?;
    Ok(TrTerm { phi, coefficient, scale, vector, denominator })
}

/// Partial sum of the corepresentation applied to `v`: all `n, m, k < p` and
/// `t + s + l <= order`, collected on `(A-monomial, vector)` pairs.
pub fn t_r_partial_sum(
    d: &crate::duality::Duality,
    v: &BasisVector,
    order: u32,
) -> Result<LinComb<(crate::afalg::AMonomial, BasisVector)>> {
    let p = d.p();
    let mut out = LinComb::zero(d.ctx());
    for n in 0..p {
        for m in 0..p {
            for k in 0..p {
                for t in 0..=order {
                    for s in 0..=(order - t) {
                        for l in 0..=(order - t - s) {
                            let term = t_r_term(d, [n, m, k, t, s, l], v)?;
                            for (mon, c) in term.coefficient.iter() {
                                out.add_term((mon.clone(), term.vector.clone()), c * &term.scale);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn printed_generator_actions() {
        let ctx = context(3, 2).unwrap();
        let (c, w) = pi_apply(UGen::Kappa, &BasisVector::new(rat(0, 1), 1, 3), &ctx);
        assert_eq!(c, FieldScalar::q_pow(&ctx, 1));
        assert_eq!(w, BasisVector::new(rat(0, 1), 1, 3));
        let (c, _) = pi_apply(UGen::H, &BasisVector::new(rat(1, 3), 0, 3), &ctx);
        assert_eq!(c, FieldScalar::i(&ctx).scale(&rat(-1, 3)));
        let (c, w) = pi_apply(UGen::PMinus, &BasisVector::origin(), &ctx);
        assert_eq!(c, -FieldScalar::chat(&ctx));
        assert_eq!(w, BasisVector::new(rat(-1, 3), 2, 3));
    }

    #[test]
    fn root_power_matches_translation() {
        for p in [3i64, 5, 7] {
            let ctx = context(p, 3).unwrap();
            let rep = PiRep::printed(&ctx);
            let mut v = BasisVector::origin();
            let mut coeff = FieldScalar::one(&ctx);
            for _ in 0..p {
                let (c, w) = rep.apply_gen(UGen::PPlus, &v);
                coeff = &coeff * &c;
                v = w;
            }
            let (c, w) = rep.apply_gen(UGen::TransPlus, &BasisVector::origin());
            assert_eq!((coeff, v), (c, w));
        }
    }

    #[test]
    fn window_parsing() {
        let w = Window::parse("0:1:1/3,jall", 3).unwrap();
        assert_eq!(w.len(), 12);
        let w = Window::parse("-1/3:1/3:1/3,chain=0", 3).unwrap();
        assert_eq!(w.vectors()[0], BasisVector::new(rat(-1, 3), 0, 3));
        assert_eq!(w.vectors()[2], BasisVector::new(rat(1, 3), 2, 3));
        assert!(Window::parse("0:1,jall", 3).is_err());
        assert!(Window::parse("0:1:0,jall", 3).is_err());
    }

    #[test]
    fn kappa_matrix_is_diagonal() {
        let ctx = context(5, 1).unwrap();
        let u = UAlgebra::new(&ctx, -1);
        let rep = PiRep::for_algebra(&u);
        let window = Window::grid(&rat(0, 1), &rat(0, 1), &rat(1, 1), 5).unwrap();
        let m = rep.matrix(&u.gen(UGen::Kappa), &window).unwrap();
        for j in 0..5 {
            assert_eq!(m.entries[j][j], FieldScalar::q_pow(&ctx, j as i64));
        }
        assert_eq!(rep.matrix(&crate::hopf::MonomialAlgebra::one(&u), &window).unwrap().entries, OperatorMatrix::identity(&ctx, &window).entries);
    }

    #[test]
    fn escape_is_named() {
        let ctx = context(3, 1).unwrap();
        let u = UAlgebra::new(&ctx, -1);
        let rep = PiRep::for_algebra(&u);
        let window = Window::grid(&rat(0, 1), &rat(0, 1), &rat(1, 1), 3).unwrap();
        match rep.matrix(&u.gen(UGen::PPlus), &window) {
            Err(Error::WindowEscape(msg)) => assert!(msg.contains("(1/3, 1)")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn casimir_is_scalar() {
        let ctx = context(3, 2).unwrap();
        let u = UAlgebra::new(&ctx, -1);
        let rep = PiRep::for_algebra(&u);
        let window = Window::grid(&rat(-1, 1), &rat(1, 1), &rat(1, 3), 3).unwrap();
        let m = rep.matrix(&u.casimir(), &window).unwrap();
        let chat2 = FieldScalar::chat(&ctx).pow(2);
        for c in 0..window.len() {
            assert_eq!(m.entries[c][c], chat2);
        }
    }

    #[test]
    fn corepresentation_terms() {
        let ctx = context(3, 2).unwrap();
        let d = crate::duality::Duality::new(&ctx).unwrap();
        let a = d.a();
        let t = t_r_term(&d, [0, 0, 0, 0, 0, 0], &BasisVector::origin()).unwrap();
        assert_eq!(t.coefficient, a.zeta_projector(0));
        assert!(t.scale.is_one());
        for j in 0..3 {
            let v = BasisVector::new(rat(0, 1), j, 3);
            let t = t_r_term(&d, [0, 0, 1, 0, 0, 0], &v).unwrap();
            assert_eq!(t.coefficient, a.zeta_projector(1));
            assert_eq!((t.scale, t.vector), (FieldScalar::q_pow(&ctx, j), v));
        }
        let t = t_r_term(&d, [1, 0, 0, 0, 0, 0], &BasisVector::origin()).unwrap();
        let eta = a.mul(&a.mon(crate::afalg::AMonomial::grassmann(1, 0, 0)), &a.zeta_projector(1));
        assert_eq!(t.coefficient, eta);
        let pairing = &FieldScalar::i(&ctx) * &d.sqrt_q_pow(1);
        assert_eq!(t.denominator, pairing);
        assert_eq!(t.scale, (-FieldScalar::chat(&ctx)).checked_div(&pairing).unwrap());
        assert_eq!(t.vector, BasisVector::new(rat(1, 3), 1, 3));
        assert!(matches!(t_r_term(&d, [3, 0, 0, 0, 0, 0], &BasisVector::origin()), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn kappa_sector_is_group_like() {
        for p in [3i64, 5] {
            let ctx = context(p, 1).unwrap();
            let d = crate::duality::Duality::new(&ctx).unwrap();
            for j in 0..p {
                let v = BasisVector::new(rat(0, 1), j, p as u32);
                let mut sum = LinComb::zero(&ctx);
                for k in 0..p as u32 {
                    let term = t_r_term(&d, [0, 0, k, 0, 0, 0], &v).unwrap();
                    assert_eq!(term.vector, v);
                    sum.add_scaled(&term.coefficient, &term.scale);
                }
                let delta = d.a().mon(crate::afalg::AMonomial::grassmann(0, 0, j as u32));
                assert_eq!(sum, delta);
            }
        }
    }
}
