//! The fractional supersymmetry algebra generated by `p+, p-, k, P+, P-, H`.
//!
//! Normal order is `p+ < p- < k < P+ < P- < H`. Relations:
//! `[p+, p-] = 0`, `k p(+/-) = q^(+/-1) p(+/-) k`, `k^p = 1`, `p(+/-)^p = P(+/-)`,
//! `[k, H] = 0`, `[p(+/-), H] = (+/-) h (i/p) p(+/-)`, `[P(+/-), H] = (+/-) h i P(+/-)`
//! where `h = +1` is the orientation of the H-commutators as usually printed and
//! `h = -1` the orientation compatible with the pairing (see `duality`).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::{element_checks, pair_checks, HopfStructure, Memo, MonomialAlgebra, Tensor};
use crate::report::NumericReport;
use crate::linear::LinComb;
use crate::scalars::{FieldContext, FieldScalar};

/// PBW monomial `p+^n p-^m k^k P+^a P-^b H^l` with `n, m, k < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UMonomial {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub a: u32,
    pub b: u32,
    pub l: u32,
}

impl UMonomial {
    pub const ONE: UMonomial = UMonomial { n: 0, m: 0, k: 0, a: 0, b: 0, l: 0 };

    pub fn new(n: u32, m: u32, k: u32, a: u32, b: u32, l: u32) -> Self {
        UMonomial { n, m, k, a, b, l }
    }

    pub fn to_array(self) -> [u32; 6] {
        [self.n, self.m, self.k, self.a, self.b, self.l]
    }

    /// Total generator degree, `k` counted once per power.
    pub fn degree(&self) -> u32 {
        self.n + self.m + self.k + self.a + self.b + self.l
    }
}

impl fmt::Display for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks = Vec::new();
        for (name, e) in [("p+", self.n), ("p-", self.m), ("k", self.k), ("P+", self.a), ("P-", self.b), ("H", self.l)] {
            match e {
                0 => {}
                1 => toks.push(name.to_string()),
                _ => toks.push(format!("{name}^{e}")),
            }
        }
        if toks.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", toks.join(" "))
        }
    }
}

pub type UElement = LinComb<UMonomial>;
pub type UTensor = Tensor<UMonomial>;

/// Generators of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UGen {
    PPlus,
    PMinus,
    Kappa,
    KappaInv,
    TransPlus,
    TransMinus,
    H,
}

impl UGen {
    pub const ALL: [UGen; 7] =
        [UGen::PPlus, UGen::PMinus, UGen::Kappa, UGen::KappaInv, UGen::TransPlus, UGen::TransMinus, UGen::H];

    pub fn token(self) -> &'static str {
        match self {
            UGen::PPlus => "p+",
            UGen::PMinus => "p-",
            UGen::Kappa => "k",
            UGen::KappaInv => "k^-1",
            UGen::TransPlus => "P+",
            UGen::TransMinus => "P-",
            UGen::H => "H",
        }
    }
}

/// One factor of an input word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UFactor {
    pub gen: UGen,
    pub exp: i64,
}

/// Parses whitespace-separated tokens `p+ p- k k^-1 P+ P- H`, each with an
/// optional `^<int>`.
pub fn parse_u_word(text: &str) -> Result<Vec<UFactor>> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            Some((name, e)) => {
                let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                (name, e)
            }
            None => (tok, 1),
        };
        let gen = match name {
            "p+" => UGen::PPlus,
            "p-" => UGen::PMinus,
            "k" => UGen::Kappa,
            "P+" => UGen::TransPlus,
            "P-" => UGen::TransMinus,
            "H" => UGen::H,
            _ => return Err(Error::Parse(format!("unknown token `{tok}`"))),
        };
        out.push(UFactor { gen, exp });
    }
    Ok(out)
}

/// The algebra together with its structure constants.
pub struct UAlgebra {
    ctx: Arc<FieldContext>,
    h_sign: i8,
    coproduct_memo: Memo<UMonomial, UTensor>,
}

impl UAlgebra {
    /// `h_sign = +1` reproduces the printed H-commutators, `-1` flips them.
    pub fn new(ctx: &Arc<FieldContext>, h_sign: i8) -> Self {
        assert!(h_sign == 1 || h_sign == -1, "h_sign must be +1 or -1");
        UAlgebra { ctx: ctx.clone(), h_sign, coproduct_memo: Memo::new() }
    }

    pub fn h_sign(&self) -> i8 {
        self.h_sign
    }

    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    pub fn gen_mon(&self, g: UGen) -> UMonomial {
        match g {
            UGen::PPlus => UMonomial::new(1, 0, 0, 0, 0, 0),
            UGen::PMinus => UMonomial::new(0, 1, 0, 0, 0, 0),
            UGen::Kappa => UMonomial::new(0, 0, 1, 0, 0, 0),
            UGen::KappaInv => UMonomial::new(0, 0, self.p() - 1, 0, 0, 0),
            UGen::TransPlus => UMonomial::new(0, 0, 0, 1, 0, 0),
            UGen::TransMinus => UMonomial::new(0, 0, 0, 0, 1, 0),
            UGen::H => UMonomial::new(0, 0, 0, 0, 0, 1),
        }
    }

    pub fn gen(&self, g: UGen) -> UElement {
        UElement::basis(&self.ctx, self.gen_mon(g))
    }

    pub fn mon(&self, m: UMonomial) -> UElement {
        UElement::basis(&self.ctx, m)
    }

    /// The Casimir `C = p+ p-`.
    pub fn casimir(&self) -> UElement {
        self.mon(UMonomial::new(1, 1, 0, 0, 0, 0))
    }

    /// Monomial with exponents reduced into range (`p+^p -> P+`, `k^p -> 1`).
    pub fn reduced_mon(&self, n: u32, m: u32, k: i64, a: u32, b: u32, l: u32) -> UMonomial {
        let p = self.p();
        UMonomial {
            n: n % p,
            m: m % p,
            k: k.rem_euclid(p as i64) as u32,
            a: a + n / p,
            b: b + m / p,
            l,
        }
    }

    /// Shift `w` with `H Y = Y (H + w)` for a monomial `Y` free of `H`.
    fn h_weight(&self, y: &UMonomial) -> FieldScalar {
        let p = self.p() as i64;
        let charge = BigRational::new(BigInt::from(y.n as i64 - y.m as i64), BigInt::from(p))
            + BigRational::from_integer(BigInt::from(y.a as i64 - y.b as i64));
        let i = FieldScalar::i(&self.ctx);
        (&i * &FieldScalar::from_rational(&self.ctx, charge)).scale(&BigRational::from_integer(BigInt::from(-self.h_sign as i64)))
    }

    /// Normal-ordered product of the word with a leading coefficient.
    pub fn normalize(&self, word: &[UFactor], coeff: FieldScalar) -> Result<UElement> {
        let mut acc = UElement::term(&self.ctx, UMonomial::ONE, coeff);
        for f in word {
            let factor = self.factor(f)?;
            acc = self.mul(&acc, &factor);
        }
        Ok(acc)
    }

    /// Same product folded from the right.
    pub fn normalize_right(&self, word: &[UFactor], coeff: FieldScalar) -> Result<UElement> {
        let mut acc = self.one();
        for f in word.iter().rev() {
            let factor = self.factor(f)?;
            acc = self.mul(&factor, &acc);
        }
        Ok(acc.scaled(&coeff))
    }

    pub fn parse(&self, text: &str) -> Result<UElement> {
        self.normalize(&parse_u_word(text)?, FieldScalar::one(&self.ctx))
    }

    fn factor(&self, f: &UFactor) -> Result<UElement> {
        if f.exp < 0 && !matches!(f.gen, UGen::Kappa | UGen::KappaInv) {
            return Err(Error::NegativeExponent(f.gen.token().into()));
        }
        let mon = match f.gen {
            UGen::Kappa => self.reduced_mon(0, 0, f.exp, 0, 0, 0),
            UGen::KappaInv => self.reduced_mon(0, 0, -f.exp, 0, 0, 0),
            g => {
                let e = f.exp as u32;
                let base = self.gen_mon(g);
                self.reduced_mon(base.n * e, base.m * e, 0, base.a * e, base.b * e, base.l * e)
            }
        };
        Ok(self.mon(mon))
    }

    pub fn to_json(&self, x: &UElement) -> serde_json::Value {
        serde_json::Value::Array(
            x.iter()
                .map(|(m, c)| serde_json::json!({"monomial": m.to_array(), "coeff": c.canonical()}))
                .collect(),
        )
    }
}

/// Random element: a sum of up to three words of length at most `degree_bound`
/// with random cyclotomic coefficients.
pub fn random_u_element<R: rand::Rng>(u: &UAlgebra, rng: &mut R, degree_bound: usize) -> UElement {
    let mut out = UElement::zero(u.ctx());
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(1..=degree_bound);
        let word: Vec<UFactor> =
            (0..len).map(|_| UFactor { gen: UGen::ALL[rng.gen_range(0..UGen::ALL.len())], exp: 1 }).collect();
        let c = FieldScalar::random(u.ctx(), rng, 2);
        out = &out + &u.normalize(&word, c).expect("generated words are valid");
    }
    out
}

/// Exact Hopf axiom suite on generators and seeded random elements.
pub fn u_axiom_suite(u: &UAlgebra, degree_bound: usize, samples: usize, seed: u64) -> Result<NumericReport> {
    use rand::SeedableRng;
    if degree_bound < 1 {
        return Err(Error::OutOfRange("degree_bound must be at least 1".into()));
    }
    let ctx = u.ctx().clone();
    let mut report = NumericReport::new("u_axiom_suite")
        .with_config("p", ctx.p())
        .with_config("degree_bound", degree_bound)
        .with_config("samples", samples)
        .with_config("seed", seed);
    report.convention("h_sign", u.h_sign());
    let gens: Vec<(String, UElement)> = UGen::ALL.iter().map(|g| (g.token().to_string(), u.gen(*g))).collect();
    for (name, x) in &gens {
        element_checks(u, &mut report, name, x);
    }
    for (na, x) in &gens {
        for (nb, y) in &gens {
            pair_checks(u, &mut report, &format!("{na},{nb}"), x, y);
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let randoms: Vec<UElement> = (0..samples).map(|_| random_u_element(u, &mut rng, degree_bound)).collect();
    for (j, x) in randoms.iter().enumerate() {
        element_checks(u, &mut report, &format!("random{j}"), x);
        let y = &randoms[(j + 1) % randoms.len()];
        pair_checks(u, &mut report, &format!("random{j},random{}", (j + 1) % randoms.len()), x, y);
    }
    relation_checks(u, &mut report);
    Ok(report)
}

fn relation_checks(u: &UAlgebra, report: &mut NumericReport) {
    let ctx = u.ctx();
    let p = u.p();
    let dk = u.coproduct(&u.gen(UGen::Kappa));
    for (g, e) in [(UGen::PPlus, 1), (UGen::PMinus, -1)] {
        let dg = u.coproduct(&u.gen(g));
        let lhs = u.tensor_mul(&dk, &dg);
        let rhs = u.tensor_mul(&dg, &dk).scaled(&FieldScalar::q_pow(ctx, e));
        report.exact(format!("relation_kappa_{}", g.token()), lhs == rhs, || (u.display_tensor(&lhs), u.display_tensor(&rhs)));
        let big = if e == 1 { UGen::TransPlus } else { UGen::TransMinus };
        let lhs = u.tensor_pow(&dg, p, 2);
        let rhs = u.coproduct(&u.gen(big));
        report.exact(format!("relation_root_{}", g.token()), lhs == rhs, || (u.display_tensor(&lhs), u.display_tensor(&rhs)));
        let root = &u.pow(&u.gen(g), p) - &u.gen(big);
        report.exact(format!("root_normalizes_{}", g.token()), root.is_zero(), || (u.display(&root), "0".into()));
    }
    let c = u.casimir();
    for g in UGen::ALL {
        let x = u.gen(g);
        let (l, r) = (u.mul(&c, &x), u.mul(&x, &c));
        report.exact(format!("casimir_central[{}]", g.token()), l == r, || (u.display(&l), u.display(&r)));
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

impl MonomialAlgebra for UAlgebra {
    type Mon = UMonomial;

    fn ctx(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    fn unit_mon(&self) -> UMonomial {
        UMonomial::ONE
    }

    fn mon_label(&self, m: &UMonomial) -> String {
        m.to_string()
    }

    fn mul_mon(&self, x: &UMonomial, y: &UMonomial) -> UElement {
        let ctx = &self.ctx;
        // k^k moves through p+^n' p-^m'
        let phase = FieldScalar::q_pow(ctx, x.k as i64 * (y.n as i64 - y.m as i64));
        let mut out = UElement::zero(ctx);
        let w = self.h_weight(&UMonomial { l: 0, k: 0, ..*y });
        let mut w_pow = FieldScalar::one(ctx);
        // H^l Y = Y (H + w)^l = sum_j C(l, j) w^(l-j) Y H^j
        for j in (0..=x.l).rev() {
            let c = w_pow.scale(&BigRational::from_integer(binomial(x.l, j)));
            let mon = self.reduced_mon(x.n + y.n, x.m + y.m, (x.k + y.k) as i64, x.a + y.a, x.b + y.b, j + y.l);
            out.add_term(mon, &c * &phase);
            w_pow = &w_pow * &w;
        }
        out
    }
}

impl UAlgebra {
    fn gen_coproduct(&self, g: UGen) -> UTensor {
        let ctx = &self.ctx;
        let one = UMonomial::ONE;
        let mut t = UTensor::zero(ctx);
        let gm = self.gen_mon(g);
        match g {
            UGen::PPlus | UGen::PMinus => {
                t.add_term(vec![gm, self.gen_mon(UGen::Kappa)], FieldScalar::one(ctx));
                t.add_term(vec![self.gen_mon(UGen::KappaInv), gm], FieldScalar::one(ctx));
            }
            UGen::Kappa | UGen::KappaInv => t.add_term(vec![gm, gm], FieldScalar::one(ctx)),
            _ => {
                t.add_term(vec![gm, one], FieldScalar::one(ctx));
                t.add_term(vec![one, gm], FieldScalar::one(ctx));
            }
        }
        t
    }

    fn gen_antipode(&self, g: UGen) -> UElement {
        let ctx = &self.ctx;
        match g {
            UGen::PPlus => self.gen(g).scaled(&-FieldScalar::q_pow(ctx, 1)),
            UGen::PMinus => self.gen(g).scaled(&-FieldScalar::q_pow(ctx, -1)),
            UGen::Kappa => self.gen(UGen::KappaInv),
            UGen::KappaInv => self.gen(UGen::Kappa),
            _ => self.gen(g).scaled(&-FieldScalar::one(ctx)),
        }
    }

    fn factors(&self, m: &UMonomial) -> Vec<(UGen, u32)> {
        vec![
            (UGen::PPlus, m.n),
            (UGen::PMinus, m.m),
            (UGen::Kappa, m.k),
            (UGen::TransPlus, m.a),
            (UGen::TransMinus, m.b),
            (UGen::H, m.l),
        ]
    }
}

impl HopfStructure for UAlgebra {
    fn coproduct_mon(&self, m: &UMonomial) -> UTensor {
        self.coproduct_memo.get_or(m, || {
            let mut acc = self.tensor_one(2);
            for (g, e) in self.factors(m) {
                if e > 0 {
                    acc = self.tensor_mul(&acc, &self.tensor_pow(&self.gen_coproduct(g), e, 2));
                }
            }
            acc
        })
    }

    fn counit_mon(&self, m: &UMonomial) -> FieldScalar {
        if m.n == 0 && m.m == 0 && m.a == 0 && m.b == 0 && m.l == 0 {
            FieldScalar::one(&self.ctx)
        } else {
            FieldScalar::zero(&self.ctx)
        }
    }

    fn antipode_mon(&self, m: &UMonomial) -> UElement {
        let mut acc = self.one();
        for (g, e) in self.factors(m).into_iter().rev() {
            if e > 0 {
                acc = self.mul(&acc, &self.pow(&self.gen_antipode(g), e));
            }
        }
        acc
    }

    fn star_mon(&self, m: &UMonomial) -> UElement {
        let mut acc = self.one();
        for (g, e) in self.factors(m).into_iter().rev() {
            if e > 0 {
                acc = self.mul(&acc, &self.pow(&self.gen(g), e));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    fn alg(p: i64) -> UAlgebra {
        UAlgebra::new(&context(p, 1).unwrap(), 1)
    }

    #[test]
    fn kappa_moves_past_p_plus() {
        let u = alg(3);
        let x = u.parse("k p+").unwrap();
        let q = FieldScalar::q_pow(u.ctx(), 1);
        assert_eq!(x, u.mon(UMonomial::new(1, 0, 1, 0, 0, 0)).scaled(&q));
        assert_eq!(u.display(&x), "q * p+ k");
    }

    #[test]
    fn fractional_root_collapses() {
        let u = alg(3);
        assert_eq!(u.parse("p+^3").unwrap(), u.gen(UGen::TransPlus));
        assert_eq!(u.parse("p+ p+ p+").unwrap(), u.gen(UGen::TransPlus));
        assert!((&u.parse("p-^3").unwrap() - &u.gen(UGen::TransMinus)).is_zero());
    }

    #[test]
    fn h_past_p_plus() {
        let u = alg(3);
        let ctx = u.ctx().clone();
        let got = u.parse("H p+").unwrap();
        let i3 = &FieldScalar::i(&ctx) * &FieldScalar::from_ratio(&ctx, 1, 3);
        let mut want = u.mon(UMonomial::new(1, 0, 0, 0, 0, 1));
        want.add_term(UMonomial::new(1, 0, 0, 0, 0, 0), -i3);
        assert_eq!(got, want);
    }

    #[test]
    fn commutator_linearity() {
        for h in [1i8, -1] {
            let ctx = context(5, 1).unwrap();
            let u = UAlgebra::new(&ctx, h);
            let x = &u.gen(UGen::PPlus) + &u.gen(UGen::TransPlus);
            let hh = u.gen(UGen::H);
            let comm = &u.mul(&x, &hh) - &u.mul(&hh, &x);
            let i = FieldScalar::i(&ctx).scale(&BigRational::from_integer(BigInt::from(h as i64)));
            let mut want = u.gen(UGen::PPlus).scaled(&(&i * &FieldScalar::from_ratio(&ctx, 1, 5)));
            want.add_term(u.gen_mon(UGen::TransPlus), i);
            assert_eq!(comm, want);
        }
    }

    #[test]
    fn kappa_inverse_and_commuting_p() {
        let u = alg(5);
        assert_eq!(u.parse("k k^4").unwrap(), u.one());
        assert_eq!(u.parse("k^-1 k").unwrap(), u.one());
        assert_eq!(u.parse("p+ p-").unwrap(), u.parse("p- p+").unwrap());
    }

    #[test]
    fn parser_errors() {
        let u = alg(3);
        assert!(matches!(u.parse("p+ x"), Err(Error::Parse(_))));
        assert!(matches!(u.parse("H^-1"), Err(Error::NegativeExponent(_))));
        assert!(matches!(u.parse("p+^z"), Err(Error::Parse(_))));
    }

    #[test]
    fn hopf_maps_on_generators() {
        let u = alg(3);
        let ctx = u.ctx().clone();
        let k = u.gen_mon(UGen::Kappa);
        assert_eq!(u.coproduct(&u.gen(UGen::Kappa)), UTensor::basis(&ctx, vec![k, k]));
        for leg in 0..2 {
            assert!(u.antipode_convolution(&u.gen(UGen::PPlus), leg).is_zero());
        }
        // (p+ k)^* = k p+ = q p+ k
        let x = u.mon(UMonomial::new(1, 0, 1, 0, 0, 0));
        assert_eq!(u.star(&x), x.scaled(&FieldScalar::q_pow(&ctx, 1)));
        assert!(u.counit(&u.gen(UGen::KappaInv)).is_one());
    }

    #[test]
    fn coassociativity_on_p_plus() {
        let u = alg(3);
        let x = u.gen(UGen::PPlus);
        let left = u.coproduct_left_twice(&x);
        let (p, k, ki) = (u.gen_mon(UGen::PPlus), u.gen_mon(UGen::Kappa), u.gen_mon(UGen::KappaInv));
        let mut want = UTensor::zero(u.ctx());
        for key in [vec![p, k, k], vec![ki, p, k], vec![ki, ki, p]] {
            want.add_term(key, FieldScalar::one(u.ctx()));
        }
        assert_eq!(left, want);
        assert_eq!(u.coproduct_right_twice(&x), want);
    }

    #[test]
    fn coproduct_of_root_is_primitive() {
        for p in [3, 5] {
            let u = alg(p);
            let dp = u.coproduct(&u.gen(UGen::PPlus));
            let lhs = u.tensor_pow(&dp, p as u32, 2);
            assert_eq!(lhs, u.coproduct(&u.gen(UGen::TransPlus)));
        }
    }

    #[test]
    fn kappa_conjugation_of_powers() {
        let u = alg(5);
        let ctx = u.ctx().clone();
        for n in 0..5u32 {
            let pn = u.mon(UMonomial::new(n, 0, 0, 0, 0, 0));
            let lhs = u.product([&u.gen(UGen::Kappa), &pn, &u.gen(UGen::KappaInv)]);
            assert_eq!(lhs, pn.scaled(&FieldScalar::q_pow(&ctx, n as i64)));
        }
    }

    #[test]
    fn suite_passes_small() {
        let u = alg(3);
        let r = u_axiom_suite(&u, 2, 10, 1).unwrap();
        let bad: Vec<_> = r.failures().map(|c| c.check.clone()).collect();
        assert!(r.passed, "{bad:?}");
    }

    #[test]
    fn casimir_is_central() {
        for h in [1i8, -1] {
            let u = UAlgebra::new(&context(3, 1).unwrap(), h);
            let c = u.casimir();
            for g in UGen::ALL {
                let x = u.gen(g);
                assert_eq!(u.mul(&c, &x), u.mul(&x, &c), "{g:?}");
            }
        }
    }
}
