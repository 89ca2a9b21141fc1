//! The dual algebra generated by the Grassmann-like `e+, e-`, the phase `d`
//! and the central coordinates `z+, z-, L` together with formal exponentials
//! `exp(muL)`.
//!
//! Relations: `e- e+ = q^2 e+ e-`, `e(+/-) d = q^2 d e(+/-)`, `e(+/-)^p = 0`, `d^p = 1`.
//! Normal order is `e+ < e- < d < z+ < z- < L < exp(muL)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hopf::{element_checks, pair_checks, HopfStructure, Memo, MonomialAlgebra, Tensor};
use crate::linear::LinComb;
use crate::report::NumericReport;
use crate::scalars::{q_factorial, FieldContext, FieldScalar};

/// `e+^n e-^m d^k z+^t z-^s L^l exp(mu L)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AMonomial {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub t: u32,
    pub s: u32,
    pub l: u32,
    pub mu: BigRational,
}

impl AMonomial {
    pub fn one() -> Self {
        AMonomial::new(0, 0, 0, 0, 0, 0, BigRational::zero())
    }

    pub fn new(n: u32, m: u32, k: u32, t: u32, s: u32, l: u32, mu: BigRational) -> Self {
        AMonomial { n, m, k, t, s, l, mu }
    }

    pub fn grassmann(n: u32, m: u32, k: u32) -> Self {
        AMonomial { n, m, k, ..AMonomial::one() }
    }

    pub fn exp(mu: BigRational) -> Self {
        AMonomial { mu, ..AMonomial::one() }
    }
}

fn fmt_mu(mu: &BigRational) -> String {
    if mu.is_one() {
        "exp(L)".into()
    } else if (-mu).is_one() {
        "exp(-L)".into()
    } else {
        format!("exp({mu}L)")
    }
}

impl fmt::Display for AMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks = Vec::new();
        for (name, e) in [("e+", self.n), ("e-", self.m), ("d", self.k), ("z+", self.t), ("z-", self.s), ("L", self.l)] {
            match e {
                0 => {}
                1 => toks.push(name.to_string()),
                _ => toks.push(format!("{name}^{e}")),
            }
        }
        if !self.mu.is_zero() {
            toks.push(fmt_mu(&self.mu));
        }
        if toks.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", toks.join(" "))
        }
    }
}

pub type AElement = LinComb<AMonomial>;
pub type ATensor = Tensor<AMonomial>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AGen {
    EtaPlus,
    EtaMinus,
    Delta,
    DeltaInv,
    ZPlus,
    ZMinus,
    Lambda,
    Exp(BigRational),
}

impl AGen {
    pub fn token(&self) -> String {
        match self {
            AGen::EtaPlus => "e+".into(),
            AGen::EtaMinus => "e-".into(),
            AGen::Delta => "d".into(),
            AGen::DeltaInv => "d^-1".into(),
            AGen::ZPlus => "z+".into(),
            AGen::ZMinus => "z-".into(),
            AGen::Lambda => "L".into(),
            AGen::Exp(mu) => fmt_mu(mu),
        }
    }

    /// The generating set used by the suites, with `exp(+/-L/p)`.
    pub fn standard(p: u32) -> Vec<AGen> {
        let third = BigRational::new(BigInt::from(1), BigInt::from(p));
        vec![
            AGen::EtaPlus,
            AGen::EtaMinus,
            AGen::Delta,
            AGen::DeltaInv,
            AGen::ZPlus,
            AGen::ZMinus,
            AGen::Lambda,
            AGen::Exp(third.clone()),
            AGen::Exp(-third),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AFactor {
    pub gen: AGen,
    pub exp: i64,
}

/// Parses tokens `e+ e- d d^-1 z+ z- L exp(<rational>L)` with optional `^<int>`.
pub fn parse_a_word(text: &str) -> Result<Vec<AFactor>> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let (body, exp) = match tok.rsplit_once('^') {
            Some((b, e)) if !b.is_empty() => {
                let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                (b, e)
            }
            _ => (tok, 1),
        };
        let gen = match body {
            "e+" => AGen::EtaPlus,
            "e-" => AGen::EtaMinus,
            "d" => AGen::Delta,
            "z+" => AGen::ZPlus,
            "z-" => AGen::ZMinus,
            "L" => AGen::Lambda,
            _ => {
                let inner = body
                    .strip_prefix("exp(")
                    .and_then(|r| r.strip_suffix("L)"))
                    .ok_or_else(|| Error::Parse(format!("unknown token `{tok}`")))?;
                let inner = inner.trim_end_matches('*');
                let mu = match inner {
                    "" | "+" => BigRational::one(),
                    "-" => -BigRational::one(),
                    s => crate::scalars::parse_rational(s)?,
                };
                AGen::Exp(mu)
            }
        };
        out.push(AFactor { gen, exp });
    }
    Ok(out)
}

/// How the antipode is read off the generator table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeReading {
    /// `S(e+/-) = -d^(-/+1) exp(-/+L/p) e+/-`, `S(z+/-) = -exp(-/+L) z+/-`.
    Corrected,
    /// `S(e+/-) = -d^(-/+1) e+/-`, `S(z+/-) = -z+/-` taken literally.
    Literal,
}

pub struct AAlgebra {
    ctx: Arc<FieldContext>,
    antipode: AntipodeReading,
    coproduct_memo: Memo<AMonomial, ATensor>,
}

impl AAlgebra {
    pub fn new(ctx: &Arc<FieldContext>) -> Self {
        Self::with_antipode(ctx, AntipodeReading::Corrected)
    }

    pub fn with_antipode(ctx: &Arc<FieldContext>, antipode: AntipodeReading) -> Self {
        AAlgebra { ctx: ctx.clone(), antipode, coproduct_memo: Memo::new() }
    }

    pub fn antipode_reading(&self) -> AntipodeReading {
        self.antipode
    }

    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    fn frac(&self, num: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(self.p()))
    }

    pub fn gen_mon(&self, g: &AGen) -> AMonomial {
        let one = AMonomial::one();
        match g {
            AGen::EtaPlus => AMonomial { n: 1, ..one },
            AGen::EtaMinus => AMonomial { m: 1, ..one },
            AGen::Delta => AMonomial { k: 1, ..one },
            AGen::DeltaInv => AMonomial { k: self.p() - 1, ..one },
            AGen::ZPlus => AMonomial { t: 1, ..one },
            AGen::ZMinus => AMonomial { s: 1, ..one },
            AGen::Lambda => AMonomial { l: 1, ..one },
            AGen::Exp(mu) => AMonomial::exp(mu.clone()),
        }
    }

    pub fn gen(&self, g: &AGen) -> AElement {
        AElement::basis(&self.ctx, self.gen_mon(g))
    }

    pub fn mon(&self, m: AMonomial) -> AElement {
        AElement::basis(&self.ctx, m)
    }

    pub fn exp_l(&self, mu: BigRational) -> AElement {
        self.mon(AMonomial::exp(mu))
    }

    pub fn normalize(&self, word: &[AFactor], coeff: FieldScalar) -> Result<AElement> {
        let mut acc = AElement::term(&self.ctx, AMonomial::one(), coeff);
        for f in word {
            acc = self.mul(&acc, &self.factor(f)?);
        }
        Ok(acc)
    }

    pub fn parse(&self, text: &str) -> Result<AElement> {
        self.normalize(&parse_a_word(text)?, FieldScalar::one(&self.ctx))
    }

    fn factor(&self, f: &AFactor) -> Result<AElement> {
        let p = self.p() as i64;
        match &f.gen {
            AGen::Delta | AGen::DeltaInv => {
                let e = if f.gen == AGen::Delta { f.exp } else { -f.exp };
                Ok(self.mon(AMonomial::grassmann(0, 0, e.rem_euclid(p) as u32)))
            }
            AGen::Exp(mu) => Ok(self.exp_l(mu * BigRational::from_integer(BigInt::from(f.exp)))),
            g => {
                if f.exp < 0 {
                    return Err(Error::NegativeExponent(g.token()));
                }
                Ok(self.pow(&self.gen(g), f.exp as u32))
            }
        }
    }

    /// The orthogonal idempotent `zeta(k, d) = (1/p) sum_n q^(-nk) d^n`.
    pub fn zeta_projector(&self, k: i64) -> AElement {
        let p = self.p() as i64;
        let mut out = AElement::zero(&self.ctx);
        let inv_p = FieldScalar::from_ratio(&self.ctx, 1, p);
        for n in 0..p {
            out.add_term(AMonomial::grassmann(0, 0, n as u32), &FieldScalar::q_pow(&self.ctx, -n * k) * &inv_p);
        }
        out
    }

    /// Rewrites the `d`-powers in the projector basis: in the result the field
    /// `k` is the projector index. Uses `d^n = sum_m q^(nm) zeta(m, d)`.
    pub fn to_zeta_basis(&self, x: &AElement) -> AElement {
        let p = self.p() as i64;
        let mut out = AElement::zero(&self.ctx);
        for (mon, c) in x.iter() {
            for j in 0..p {
                let phase = FieldScalar::q_pow(&self.ctx, mon.k as i64 * j);
                out.add_term(AMonomial { k: j as u32, ..mon.clone() }, c * &phase);
            }
        }
        out
    }

    /// Inverse of [`AAlgebra::to_zeta_basis`].
    pub fn from_zeta_basis(&self, x: &AElement) -> AElement {
        let mut out = AElement::zero(&self.ctx);
        for (mon, c) in x.iter() {
            let proj = self.zeta_projector(mon.k as i64);
            let rest = self.mon(AMonomial { k: 0, ..mon.clone() });
            out.add_scaled(&self.mul(&rest, &proj), c);
        }
        out
    }

    pub fn to_json(&self, x: &AElement) -> serde_json::Value {
        serde_json::Value::Array(
            x.iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "monomial": [m.n, m.m, m.k, m.t, m.s, m.l],
                        "mu": m.mu.to_string(),
                        "coeff": c.canonical(),
                    })
                })
                .collect(),
        )
    }

    fn sigma_coefficient(&self, n: u32, sign: i64) -> FieldScalar {
        let p = self.p();
        let parity = if ((p + 1) / 2) % 2 == 0 { 1 } else { -1 };
        let den = &q_factorial(p - n, &self.ctx) * &q_factorial(n, &self.ctx);
        let num = FieldScalar::q_pow(&self.ctx, sign * (n as i64) * (n as i64)).scale(&BigRational::from_integer(BigInt::from(parity)));
        num.checked_div(&den).expect("q-factorials below p are invertible")
    }

    fn gen_coproduct(&self, g: &AGen) -> ATensor {
        let ctx = &self.ctx;
        let p = self.p();
        let one = AMonomial::one();
        let unit = FieldScalar::one(ctx);
        let gm = self.gen_mon(g);
        let mut t = ATensor::zero(ctx);
        match g {
            AGen::EtaPlus | AGen::EtaMinus => {
                let sign = if *g == AGen::EtaPlus { 1 } else { -1 };
                let left = AMonomial { k: (sign as i64).rem_euclid(p as i64) as u32, mu: self.frac(sign), ..one.clone() };
                t.add_term(vec![gm.clone(), one], unit.clone());
                t.add_term(vec![left, gm], unit);
            }
            AGen::Delta | AGen::DeltaInv | AGen::Exp(_) => t.add_term(vec![gm.clone(), gm], unit),
            AGen::Lambda => {
                t.add_term(vec![gm.clone(), one.clone()], unit.clone());
                t.add_term(vec![one, gm], unit);
            }
            AGen::ZPlus | AGen::ZMinus => {
                let sign: i64 = if *g == AGen::ZPlus { 1 } else { -1 };
                t.add_term(vec![gm.clone(), one.clone()], unit.clone());
                t.add_term(vec![AMonomial::exp(BigRational::from_integer(BigInt::from(sign))), gm], unit);
                for n in 1..p {
                    let (left_eta, right_eta) = if sign == 1 {
                        (AMonomial { n: p - n, ..one.clone() }, AMonomial { n, ..one.clone() })
                    } else {
                        (AMonomial { m: p - n, ..one.clone() }, AMonomial { m: n, ..one.clone() })
                    };
                    let left = AMonomial {
                        k: (sign * n as i64).rem_euclid(p as i64) as u32,
                        mu: self.frac(sign * n as i64),
                        ..left_eta
                    };
                    t.add_term(vec![left, right_eta], self.sigma_coefficient(n, sign));
                }
            }
        }
        t
    }

    fn gen_antipode(&self, g: &AGen) -> AElement {
        let ctx = &self.ctx;
        let p = self.p();
        let minus = -FieldScalar::one(ctx);
        let corrected = self.antipode == AntipodeReading::Corrected;
        match g {
            AGen::EtaPlus | AGen::EtaMinus => {
                let sign: i64 = if *g == AGen::EtaPlus { 1 } else { -1 };
                let mut m = self.gen_mon(g);
                m.k = (-sign).rem_euclid(p as i64) as u32;
                if corrected {
                    m.mu = self.frac(-sign);
                }
                // d^k e = q^(-2k) e d^k
                let phase = FieldScalar::q_pow(ctx, -2 * m.k as i64);
                AElement::term(ctx, m, &minus * &phase)
            }
            AGen::Delta => self.gen(&AGen::DeltaInv),
            AGen::DeltaInv => self.gen(&AGen::Delta),
            AGen::Lambda => self.gen(g).scaled(&minus),
            AGen::Exp(mu) => self.exp_l(-mu.clone()),
            AGen::ZPlus | AGen::ZMinus => {
                let mut m = self.gen_mon(g);
                if corrected {
                    m.mu = BigRational::from_integer(BigInt::from(if *g == AGen::ZPlus { -1 } else { 1 }));
                }
                AElement::term(ctx, m, minus)
            }
        }
    }

    fn factors(&self, m: &AMonomial) -> Vec<(AGen, u32)> {
        let mut v = vec![
            (AGen::EtaPlus, m.n),
            (AGen::EtaMinus, m.m),
            (AGen::Delta, m.k),
            (AGen::ZPlus, m.t),
            (AGen::ZMinus, m.s),
            (AGen::Lambda, m.l),
        ];
        if !m.mu.is_zero() {
            v.push((AGen::Exp(m.mu.clone()), 1));
        }
        v
    }
}

impl MonomialAlgebra for AAlgebra {
    type Mon = AMonomial;

    fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    fn unit_mon(&self) -> AMonomial {
        AMonomial::one()
    }

    fn mon_label(&self, m: &AMonomial) -> String {
        m.to_string()
    }

    fn mul_mon(&self, x: &AMonomial, y: &AMonomial) -> AElement {
        let p = self.p();
        if x.n + y.n >= p || x.m + y.m >= p {
            return AElement::zero(&self.ctx);
        }
        let e = 2 * (x.m as i64) * (y.n as i64) - 2 * (x.k as i64) * ((y.n + y.m) as i64);
        let mon = AMonomial {
            n: x.n + y.n,
            m: x.m + y.m,
            k: (x.k + y.k) % p,
            t: x.t + y.t,
            s: x.s + y.s,
            l: x.l + y.l,
            mu: &x.mu + &y.mu,
        };
        AElement::term(&self.ctx, mon, FieldScalar::q_pow(&self.ctx, e))
    }
}

impl HopfStructure for AAlgebra {
    fn coproduct_mon(&self, m: &AMonomial) -> ATensor {
        self.coproduct_memo.get_or(m, || {
            let mut acc = self.tensor_one(2);
            for (g, e) in self.factors(m) {
                if e > 0 {
                    acc = self.tensor_mul(&acc, &self.tensor_pow(&self.gen_coproduct(&g), e, 2));
                }
            }
            acc
        })
    }

    fn counit_mon(&self, m: &AMonomial) -> FieldScalar {
        if m.n == 0 && m.m == 0 && m.t == 0 && m.s == 0 && m.l == 0 {
            FieldScalar::one(&self.ctx)
        } else {
            FieldScalar::zero(&self.ctx)
        }
    }

    fn antipode_mon(&self, m: &AMonomial) -> AElement {
        let mut acc = self.one();
        for (g, e) in self.factors(m).into_iter().rev() {
            if e > 0 {
                acc = self.mul(&acc, &self.pow(&self.gen_antipode(&g), e));
            }
        }
        acc
    }

    fn star_mon(&self, m: &AMonomial) -> AElement {
        let mut acc = self.one();
        for (g, e) in self.factors(m).into_iter().rev() {
            if e > 0 {
                acc = self.mul(&acc, &self.pow(&self.gen(&g), e));
            }
        }
        acc
    }
}

pub fn random_a_element<R: rand::Rng>(a: &AAlgebra, rng: &mut R, degree_bound: usize) -> AElement {
    let gens = AGen::standard(a.p());
    let mut out = AElement::zero(a.ctx());
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(1..=degree_bound);
        let word: Vec<AFactor> = (0..len).map(|_| AFactor { gen: gens[rng.gen_range(0..gens.len())].clone(), exp: 1 }).collect();
        let c = FieldScalar::random(a.ctx(), rng, 2);
        out = &out + &a.normalize(&word, c).expect("generated words are valid");
    }
    out
}

/// Exact Hopf axiom suite on generators and seeded random elements.
pub fn a_axiom_suite(a: &AAlgebra, degree_bound: usize, samples: usize, seed: u64) -> Result<NumericReport> {
    use rand::SeedableRng;
    if degree_bound < 1 {
        return Err(Error::OutOfRange("degree_bound must be at least 1".into()));
    }
    let ctx = a.ctx().clone();
    let mut report = NumericReport::new("a_axiom_suite")
        .with_config("p", ctx.p())
        .with_config("degree_bound", degree_bound)
        .with_config("samples", samples)
        .with_config("seed", seed);
    report.convention("counit_lambda", "0");
    report.convention(
        "antipode",
        match a.antipode {
            AntipodeReading::Corrected => "S(e+/-) = -d^(-/+1) exp(-/+L/p) e+/-, S(z+/-) = -exp(-/+L) z+/-",
            AntipodeReading::Literal => "S(e+/-) = -d^(-/+1) e+/-, S(z+/-) = -z+/-",
        },
    );
    let gens: Vec<(String, AElement)> = AGen::standard(a.p()).iter().map(|g| (g.token(), a.gen(g))).collect();
    for (name, x) in &gens {
        element_checks(a, &mut report, name, x);
    }
    for (na, x) in &gens {
        for (nb, y) in &gens {
            pair_checks(a, &mut report, &format!("{na},{nb}"), x, y);
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let randoms: Vec<AElement> = (0..samples).map(|_| random_a_element(a, &mut rng, degree_bound)).collect();
    for (j, x) in randoms.iter().enumerate() {
        element_checks(a, &mut report, &format!("random{j}"), x);
        let jn = (j + 1) % randoms.len();
        pair_checks(a, &mut report, &format!("random{j},random{jn}"), x, &randoms[jn]);
    }
    relation_checks(a, &mut report);
    Ok(report)
}

fn relation_checks(a: &AAlgebra, report: &mut NumericReport) {
    let ctx = a.ctx();
    let p = a.p();
    let q2 = FieldScalar::q_pow(ctx, 2);
    let (dp, dm) = (a.coproduct(&a.gen(&AGen::EtaPlus)), a.coproduct(&a.gen(&AGen::EtaMinus)));
    let dd = a.coproduct(&a.gen(&AGen::Delta));
    for (name, dx) in [("e+", &dp), ("e-", &dm)] {
        let nil = a.tensor_pow(dx, p, 2);
        report.exact(format!("relation_nilpotent_{name}"), nil.is_zero(), || (a.display_tensor(&nil), "0".into()));
        let l = a.tensor_mul(dx, &dd);
        let r = a.tensor_mul(&dd, dx).scaled(&q2);
        report.exact(format!("relation_delta_{name}"), l == r, || (a.display_tensor(&l), a.display_tensor(&r)));
    }
    let l = a.tensor_mul(&dm, &dp);
    let r = a.tensor_mul(&dp, &dm).scaled(&q2);
    report.exact("relation_eta_exchange", l == r, || (a.display_tensor(&l), a.display_tensor(&r)));
    let sp = a.antipode(&a.gen(&AGen::EtaPlus));
    let sm = a.antipode(&a.gen(&AGen::EtaMinus));
    let l = a.mul(&sp, &sm);
    let r = a.mul(&sm, &sp).scaled(&q2);
    report.exact("antipode_eta_exchange", l == r, || (a.display(&l), a.display(&r)));
    let sd = a.antipode(&a.gen(&AGen::Delta));
    let l = a.mul(&sd, &sp);
    let r = a.mul(&sp, &sd).scaled(&q2);
    report.exact("antipode_delta_exchange", l == r, || (a.display(&l), a.display(&r)));
    let total: AElement = (0..p as i64).fold(AElement::zero(ctx), |acc, k| &acc + &a.zeta_projector(k));
    report.exact("zeta_completeness", total == a.one(), || (a.display(&total), "1".into()));
    for k in 0..p as i64 {
        let zk = a.zeta_projector(k);
        for j in 0..p as i64 {
            let prod = a.mul(&zk, &a.zeta_projector(j));
            let want = if j == k { zk.clone() } else { AElement::zero(ctx) };
            report.exact(format!("zeta_orthogonal[{k},{j}]"), prod == want, || (a.display(&prod), a.display(&want)));
        }
        let dz = a.mul(&a.gen(&AGen::Delta), &zk);
        let want = zk.scaled(&FieldScalar::q_pow(ctx, k));
        report.exact(format!("zeta_eigen[{k}]"), dz == want, || (a.display(&dz), a.display(&want)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    fn alg(p: i64) -> AAlgebra {
        AAlgebra::new(&context(p, 1).unwrap())
    }

    #[test]
    fn eta_exchange() {
        let a = alg(3);
        let x = a.parse("e- e+").unwrap();
        assert_eq!(x, a.mon(AMonomial::grassmann(1, 1, 0)).scaled(&FieldScalar::q_pow(a.ctx(), 2)));
        let y = a.parse("d e+").unwrap();
        assert_eq!(y, a.mon(AMonomial::grassmann(1, 0, 1)).scaled(&FieldScalar::q_pow(a.ctx(), -2)));
        assert!(a.parse("e+ e+ e+").unwrap().is_zero());
    }

    #[test]
    fn xi_square_phase() {
        let a = alg(5);
        let xi = a.mon(AMonomial::grassmann(1, 1, 0));
        let sq = a.mul(&xi, &xi);
        assert_eq!(sq, a.mon(AMonomial::grassmann(2, 2, 0)).scaled(&FieldScalar::q_pow(a.ctx(), 2)));
    }

    #[test]
    fn exponentials_add() {
        let a = alg(3);
        assert_eq!(a.parse("exp(1/3L) exp(-1/3L)").unwrap(), a.one());
        assert_eq!(a.parse("exp(L)^2").unwrap(), a.exp_l(BigRational::from_integer(BigInt::from(2))));
        assert_eq!(a.parse("d^-1 d").unwrap(), a.one());
        assert!(matches!(a.parse("z+^-1"), Err(Error::NegativeExponent(_))));
        assert!(matches!(a.parse("w"), Err(Error::Parse(_))));
    }

    #[test]
    fn projectors() {
        let a = alg(3);
        let z0 = a.zeta_projector(0);
        assert_eq!(a.mul(&z0, &a.gen(&AGen::Delta)), z0);
        let z1 = a.zeta_projector(1);
        assert_eq!(a.mul(&a.gen(&AGen::Delta), &z1), z1.scaled(&FieldScalar::q_pow(a.ctx(), 1)));
        let x = a.parse("e+ d^2 z- exp(1/3L)").unwrap();
        assert_eq!(a.from_zeta_basis(&a.to_zeta_basis(&x)), x);
    }

    #[test]
    fn star_reverses() {
        let a = alg(3);
        let x = a.mon(AMonomial::grassmann(1, 1, 0));
        assert_eq!(a.star(&x), x.scaled(&FieldScalar::q_pow(a.ctx(), 2)));
    }

    #[test]
    fn antipode_on_generators() {
        let a = alg(3);
        for g in AGen::standard(3) {
            let x = a.gen(&g);
            for leg in 0..2 {
                let lhs = a.antipode_convolution(&x, leg);
                assert_eq!(lhs, a.one().scaled(&a.counit(&x)), "{g:?} leg {leg}");
            }
        }
    }

    #[test]
    fn literal_antipode_fails() {
        let a = AAlgebra::with_antipode(&context(3, 1).unwrap(), AntipodeReading::Literal);
        let x = a.gen(&AGen::EtaPlus);
        assert!(!a.antipode_convolution(&x, 0).is_zero());
        let z = a.gen(&AGen::ZPlus);
        assert!(!a.antipode_convolution(&z, 1).is_zero());
    }

    #[test]
    fn z_coassociative() {
        for p in [3, 5] {
            let a = alg(p);
            for g in [AGen::ZPlus, AGen::ZMinus] {
                let x = a.gen(&g);
                assert_eq!(a.coproduct_left_twice(&x), a.coproduct_right_twice(&x), "p={p} {g:?}");
            }
        }
    }

    #[test]
    fn suite_small() {
        let a = alg(3);
        let r = a_axiom_suite(&a, 2, 10, 1).unwrap();
        let bad: Vec<_> = r.failures().map(|c| c.check.clone()).collect();
        assert!(r.passed, "{bad:?}");
    }
}
