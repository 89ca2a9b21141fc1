//! The bilinear pairing between the two algebras, its verification as a Hopf
//! pairing, and the representations it induces on the dual side.
//!
//! On monomials
//! `<p+^n p-^m k^c P+^a P-^b H^L, e+^n e-^m d^j z+^a z-^b L^l exp(muL)>`
//! equals `i^(n+m+a+b+L) (q^1/2)^(n-m) q^(-nm) a! b! [n]! [m]! q^(j(c+n+m))
//! L!/(L-l)! mu^(L-l)` for `L >= l` and vanishes for mismatched exponents.

pub mod integral;
pub mod reo;

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::afalg::{random_a_element, AAlgebra, AElement, AMonomial, ATensor};
use crate::error::{Error, Result};
use crate::hopf::{HopfStructure, Memo, MonomialAlgebra};
use crate::report::NumericReport;
use crate::scalars::{q_factorial, FieldContext, FieldScalar};
use crate::ufalg::{random_u_element, UAlgebra, UElement, UMonomial, UTensor};

/// Which tensor leg pairs with the left factor of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// `<xy, a> = <x (x) y, Delta a>`.
    Direct,
    /// `<xy, a> = <y (x) x, Delta a>`.
    Opposite,
}

/// Global sign choices that the bare pairing formula leaves open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairingConvention {
    pub orientation: Orientation,
    /// `q^(1/2) = sqrt_q_sign * q^((p+1)/2)`.
    pub sqrt_q_sign: i8,
    /// Orientation of the `H`-commutators, see [`UAlgebra::new`].
    pub h_sign: i8,
}

impl PairingConvention {
    /// The choice the generator scan selects for every tested `p`.
    pub const FROZEN: PairingConvention = PairingConvention { orientation: Orientation::Direct, sqrt_q_sign: -1, h_sign: -1 };

    pub fn all() -> Vec<PairingConvention> {
        let mut out = Vec::new();
        for orientation in [Orientation::Direct, Orientation::Opposite] {
            for sqrt_q_sign in [1, -1] {
                for h_sign in [1, -1] {
                    out.push(PairingConvention { orientation, sqrt_q_sign, h_sign });
                }
            }
        }
        out
    }

    pub fn describe(&self, p: u32) -> Vec<(String, String)> {
        vec![
            ("orientation".into(), format!("{:?}", self.orientation)),
            (
                "sqrt_q".into(),
                if self.sqrt_q_sign == 1 {
                    format!("q^((p+1)/2) = zeta^{}", 2 * (p + 1))
                } else {
                    format!("-q^((p+1)/2) = exp(i pi/{p})")
                },
            ),
            ("h_sign".into(), self.h_sign.to_string()),
        ]
    }
}

/// One row of the convention scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub convention: PairingConvention,
    pub checks: usize,
    pub failures: usize,
}

pub struct Duality {
    u: UAlgebra,
    a: AAlgebra,
    conv: PairingConvention,
    scan: Vec<ScanRow>,
    base: Memo<(u32, u32, u32, u32), FieldScalar>,
}

type UKey = (u32, u32, u32, u32);

fn u_key(x: &UMonomial) -> UKey {
    (x.n, x.m, x.a, x.b)
}

fn a_key(a: &AMonomial) -> UKey {
    (a.n, a.m, a.t, a.s)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl Duality {
    /// Fixes the convention by scanning all sign choices on generator-level
    /// identities; exactly one choice must pass.
    pub fn new(ctx: &Arc<FieldContext>) -> Result<Self> {
        let mut scan = Vec::new();
        for conv in PairingConvention::all() {
            let d = Duality::with_convention(ctx, conv);
            let mut report = NumericReport::new("scan");
            d.scan_checks(&mut report);
            scan.push(ScanRow { convention: conv, checks: report.total, failures: report.failed });
        }
        let passing: Vec<&ScanRow> = scan.iter().filter(|r| r.failures == 0).collect();
        if passing.len() != 1 {
            return Err(Error::OutOfRange(format!(
                "{} conventions pass the generator scan, expected exactly one",
                passing.len()
            )));
        }
        let conv = passing[0].convention;
        let mut d = Duality::with_convention(ctx, conv);
        d.scan = scan;
        Ok(d)
    }

    pub fn with_convention(ctx: &Arc<FieldContext>, conv: PairingConvention) -> Self {
        Duality { u: UAlgebra::new(ctx, conv.h_sign), a: AAlgebra::new(ctx), conv, scan: Vec::new(), base: Memo::new() }
    }

    pub fn u(&self) -> &UAlgebra {
        &self.u
    }

    pub fn a(&self) -> &AAlgebra {
        &self.a
    }

    pub fn ctx(&self) -> &Arc<FieldContext> {
        self.u.ctx()
    }

    pub fn p(&self) -> u32 {
        self.u.p()
    }

    pub fn convention(&self) -> PairingConvention {
        self.conv
    }

    pub fn scan(&self) -> &[ScanRow] {
        &self.scan
    }

    /// Writes the convention ledger into a report.
    pub fn stamp(&self, report: &mut NumericReport) {
        for (k, v) in self.conv.describe(self.p()) {
            report.convention(&k, v);
        }
        report.convention("counit_lambda", "0");
        for row in &self.scan {
            report.note(format!(
                "scan {:?} sqrt_q_sign={} h_sign={}: {}/{} generator checks fail",
                row.convention.orientation, row.convention.sqrt_q_sign, row.convention.h_sign, row.failures, row.checks
            ));
        }
    }

    /// `(q^(1/2))^e`.
    pub fn sqrt_q_pow(&self, e: i64) -> FieldScalar {
        let p = self.p() as i64;
        let v = FieldScalar::q_pow(self.ctx(), e * ((p + 1) / 2));
        if self.conv.sqrt_q_sign == -1 && e.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    }

    fn base_value(&self, key: UKey) -> FieldScalar {
        self.base.get_or(&key, || {
            let ctx = self.ctx();
            let (n, m, t, s) = key;
            let i_pow = FieldScalar::i(ctx).pow((n + m + t + s) as u64);
            let phase = &self.sqrt_q_pow(n as i64 - m as i64) * &FieldScalar::q_pow(ctx, -(n as i64) * (m as i64));
            let facts = &q_factorial(n, ctx) * &q_factorial(m, ctx);
            let classical = BigRational::from_integer(factorial(t) * factorial(s));
            (&(&i_pow * &phase) * &facts).scale(&classical)
        })
    }

    /// Pairing of basis monomials.
    pub fn pair_mon(&self, x: &UMonomial, a: &AMonomial) -> FieldScalar {
        let ctx = self.ctx();
        if u_key(x) != a_key(a) || x.l < a.l {
            return FieldScalar::zero(ctx);
        }
        let gap = x.l - a.l;
        if gap > 0 && a.mu.is_zero() {
            return FieldScalar::zero(ctx);
        }
        let falling: BigInt = ((gap + 1)..=x.l).fold(BigInt::one(), |acc, k| acc * BigInt::from(k));
        let mu_pow = num_traits::pow(a.mu.clone(), gap as usize);
        let delta = FieldScalar::q_pow(ctx, a.k as i64 * (x.k + x.n + x.m) as i64);
        let ipow = FieldScalar::i(ctx).pow(x.l as u64);
        let v = &(&self.base_value(u_key(x)) * &delta) * &ipow;
        v.scale(&(BigRational::from_integer(falling) * mu_pow))
    }

    pub fn pair(&self, x: &UElement, a: &AElement) -> FieldScalar {
        let mut out = FieldScalar::zero(self.ctx());
        for (xm, xc) in x.iter() {
            for (am, ac) in a.iter() {
                let v = self.pair_mon(xm, am);
                if !v.is_zero() {
                    out = &out + &(&v * &(xc * ac));
                }
            }
        }
        out
    }

    /// Pairing of two-fold tensors with the leg assignment of the convention.
    pub fn pair_tensor(&self, x: &UTensor, t: &ATensor) -> FieldScalar {
        let mut out = FieldScalar::zero(self.ctx());
        for (xk, xc) in x.iter() {
            for (ak, ac) in t.iter() {
                let v = match self.conv.orientation {
                    Orientation::Direct => &self.pair_mon(&xk[0], &ak[0]) * &self.pair_mon(&xk[1], &ak[1]),
                    Orientation::Opposite => &self.pair_mon(&xk[0], &ak[1]) * &self.pair_mon(&xk[1], &ak[0]),
                };
                if !v.is_zero() {
                    out = &out + &(&v * &(xc * ac));
                }
            }
        }
        out
    }

    /// `R(phi) X = sum <phi, X1> X2`.
    pub fn right_act(&self, phi: &UElement, x: &AElement) -> AElement {
        let mut out = AElement::zero(self.ctx());
        for (am, ac) in x.iter() {
            for (key, c) in self.a.coproduct_mon(am).iter() {
                let v = self.pair(phi, &self.a.mon(key[0].clone()));
                if !v.is_zero() {
                    out.add_term(key[1].clone(), &(&v * c) * ac);
                }
            }
        }
        out
    }

    /// `L(phi) X = sum X1 <phi, X2>`.
    pub fn left_act(&self, phi: &UElement, x: &AElement) -> AElement {
        let mut out = AElement::zero(self.ctx());
        for (am, ac) in x.iter() {
            for (key, c) in self.a.coproduct_mon(am).iter() {
                let v = self.pair(phi, &self.a.mon(key[1].clone()));
                if !v.is_zero() {
                    out.add_term(key[0].clone(), &(&v * c) * ac);
                }
            }
        }
        out
    }

    fn u_grade(&self, x: &UMonomial) -> (u32, u32) {
        (x.n + self.p() * x.a, x.m + self.p() * x.b)
    }

    fn a_grade(&self, a: &AMonomial) -> (u32, u32) {
        (a.n + self.p() * a.t, a.m + self.p() * a.s)
    }

    /// `<xy, a> = <x (x) y, Delta a>` for all `x, y` in `xs` and `a` in `as_`.
    /// Triples with mismatched grading vanish on both sides by the pairing
    /// formula and are not enumerated. One record per `a`.
    pub fn check_coproduct_side(&self, report: &mut NumericReport, xs: &[UMonomial], as_: &[AMonomial]) -> usize {
        let mut by_grade: HashMap<(u32, u32), Vec<&UMonomial>> = HashMap::new();
        for x in xs {
            by_grade.entry(self.u_grade(x)).or_default().push(x);
        }
        let mut evaluated = 0;
        for a in as_ {
            let g = self.a_grade(a);
            let delta = self.a.coproduct_mon(a);
            let mut index: HashMap<(UKey, UKey), Vec<(&AMonomial, &AMonomial, &FieldScalar)>> = HashMap::new();
            for (k, c) in delta.iter() {
                let (fx, fy) = match self.conv.orientation {
                    Orientation::Direct => (&k[0], &k[1]),
                    Orientation::Opposite => (&k[1], &k[0]),
                };
                index.entry((a_key(fx), a_key(fy))).or_default().push((fx, fy, c));
            }
            let mut failure: Option<(String, String)> = None;
            let mut count = 0;
            for (gx, bucket_x) in &by_grade {
                if gx.0 > g.0 || gx.1 > g.1 {
                    continue;
                }
                let Some(bucket_y) = by_grade.get(&(g.0 - gx.0, g.1 - gx.1)) else { continue };
                for x in bucket_x {
                    for y in bucket_y {
                        if x.l + y.l < a.l {
                            continue;
                        }
                        count += 1;
                        let lhs = self.pair(&self.u.mul_mon(x, y), &self.a.mon(a.clone()));
                        let mut rhs = FieldScalar::zero(self.ctx());
                        if let Some(terms) = index.get(&(u_key(x), u_key(y))) {
                            for (fx, fy, c) in terms {
                                let v = self.pair_mon(x, fx);
                                if v.is_zero() {
                                    continue;
                                }
                                let w = self.pair_mon(y, fy);
                                if !w.is_zero() {
                                    rhs = &rhs + &(&(&v * &w) * c);
                                }
                            }
                        }
                        if lhs != rhs && failure.is_none() {
                            failure = Some((format!("x={x}, y={y}: {lhs}"), rhs.to_string()));
                        }
                    }
                }
            }
            evaluated += count;
            let ok = failure.is_none();
            report.exact(format!("coproduct_side[{a}]"), ok, || failure.unwrap());
        }
        evaluated
    }

    /// `<x, ab> = <Delta x, a (x) b>` for `x` in `xs` and `a, b` in `as_`.
    pub fn check_product_side(&self, report: &mut NumericReport, xs: &[UMonomial], as_: &[AMonomial]) -> usize {
        let mut by_grade: HashMap<(u32, u32), Vec<&AMonomial>> = HashMap::new();
        for a in as_ {
            by_grade.entry(self.a_grade(a)).or_default().push(a);
        }
        let mut evaluated = 0;
        for x in xs {
            let g = self.u_grade(x);
            let delta = self.u.coproduct_mon(x);
            let mut index: HashMap<(UKey, UKey), Vec<(&UMonomial, &UMonomial, &FieldScalar)>> = HashMap::new();
            for (k, c) in delta.iter() {
                let (fa, fb) = match self.conv.orientation {
                    Orientation::Direct => (&k[0], &k[1]),
                    Orientation::Opposite => (&k[1], &k[0]),
                };
                index.entry((u_key(fa), u_key(fb))).or_default().push((fa, fb, c));
            }
            let mut failure: Option<(String, String)> = None;
            let mut count = 0;
            for (ga, bucket_a) in &by_grade {
                if ga.0 > g.0 || ga.1 > g.1 {
                    continue;
                }
                let Some(bucket_b) = by_grade.get(&(g.0 - ga.0, g.1 - ga.1)) else { continue };
                for a in bucket_a {
                    for b in bucket_b {
                        if a.l + b.l > x.l {
                            continue;
                        }
                        count += 1;
                        let lhs = self.pair(&self.u.mon(*x), &self.a.mul_mon(a, b));
                        let mut rhs = FieldScalar::zero(self.ctx());
                        if let Some(terms) = index.get(&(a_key(a), a_key(b))) {
                            for (fa, fb, c) in terms {
                                let v = self.pair_mon(fa, a);
                                if v.is_zero() {
                                    continue;
                                }
                                let w = self.pair_mon(fb, b);
                                if !w.is_zero() {
                                    rhs = &rhs + &(&(&v * &w) * c);
                                }
                            }
                        }
                        if lhs != rhs && failure.is_none() {
                            failure = Some((format!("a={a}, b={b}: {lhs}"), rhs.to_string()));
                        }
                    }
                }
            }
            evaluated += count;
            let ok = failure.is_none();
            report.exact(format!("product_side[{x}]"), ok, || failure.unwrap());
        }
        evaluated
    }

    fn scan_checks(&self, report: &mut NumericReport) {
        let p = self.p();
        let mut xs = Vec::new();
        for n in 0..p {
            for m in 0..p {
                if n > 1 && m > 1 {
                    continue;
                }
                for k in 0..2 {
                    for a in 0..2 {
                        for b in 0..2 {
                            for l in 0..2 {
                                xs.push(UMonomial::new(n, m, k, a, b, l));
                            }
                        }
                    }
                }
            }
        }
        let small = a_window(p, 1, 2);
        self.check_coproduct_side(report, &xs, &small);
        let gens = u_window(p, 1, 2);
        self.check_product_side(report, &gens, &small);
    }
}

/// Monomials with `n, m, a, b, l <= bound` (and `n, m < p`), `k < kmax`.
pub fn u_window(p: u32, bound: u32, kmax: u32) -> Vec<UMonomial> {
    let e = bound.min(p - 1);
    let mut out = Vec::new();
    for n in 0..=e {
        for m in 0..=e {
            for k in 0..kmax.min(p) {
                for a in 0..=bound {
                    for b in 0..=bound {
                        for l in 0..=bound {
                            out.push(UMonomial::new(n, m, k, a, b, l));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Monomials with `n, m, t, s, l <= bound` (and `n, m < p`), `d`-power `< kmax`,
/// no exponential factor.
pub fn a_window(p: u32, bound: u32, kmax: u32) -> Vec<AMonomial> {
    let e = bound.min(p - 1);
    let mut out = Vec::new();
    for n in 0..=e {
        for m in 0..=e {
            for k in 0..kmax.min(p) {
                for t in 0..=bound {
                    for s in 0..=bound {
                        for l in 0..=bound {
                            out.push(AMonomial::new(n, m, k, t, s, l, BigRational::zero()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Exact verification that the pairing is a Hopf pairing.
pub fn duality_suite(d: &Duality, exponent_bound: u32, samples: usize, seed: u64) -> Result<NumericReport> {
    use rand::SeedableRng;
    if !(1..=3).contains(&exponent_bound) {
        return Err(Error::OutOfRange("exponent_bound must be in 1..=3".into()));
    }
    let p = d.p();
    let mut report = NumericReport::new("duality_suite")
        .with_config("p", p)
        .with_config("exponent_bound", exponent_bound)
        .with_config("samples", samples)
        .with_config("seed", seed);
    d.stamp(&mut report);
    let xs = u_window(p, exponent_bound, p);
    let as_ = a_window(p, exponent_bound, p);
    let n1 = d.check_coproduct_side(&mut report, &xs, &as_);
    let n2 = d.check_product_side(&mut report, &xs, &as_);
    report.note(format!("basis triples evaluated: {n1} coproduct side, {n2} product side"));

    let (u, a) = (d.u(), d.a());
    let one_u = u.one();
    let one_a = a.one();
    let mut s_cache: HashMap<UMonomial, UElement> = HashMap::new();
    let a_s: Vec<AElement> = as_.iter().map(|m| a.antipode_mon(m)).collect();
    let mut unit_fail = None;
    for am in &as_ {
        let ae = a.mon(am.clone());
        let (l, r) = (d.pair(&one_u, &ae), a.counit(&ae));
        if l != r && unit_fail.is_none() {
            unit_fail = Some((format!("a={am}: {l}"), r.to_string()));
        }
    }
    let ok = unit_fail.is_none();
    report.exact("unit_pairs_counit", ok, || unit_fail.unwrap());
    let mut counit_fail = None;
    for x in &xs {
        let xe = u.mon(*x);
        let (l, r) = (d.pair(&xe, &one_a), u.counit(&xe));
        if l != r && counit_fail.is_none() {
            counit_fail = Some((format!("x={x}: {l}"), r.to_string()));
        }
    }
    let ok = counit_fail.is_none();
    report.exact("counit_pairs_unit", ok, || counit_fail.unwrap());

    let mut antipode_fail = None;
    let mut star_variants = [0usize; 3];
    let mut star_total = 0usize;
    for (am, sa) in as_.iter().zip(&a_s) {
        let ae = a.mon(am.clone());
        let sa_star = a.star(sa);
        let s_astar = a.antipode(&a.star(&ae));
        let a_star = a.star(&ae);
        for x in xs.iter().filter(|x| u_key(x) == a_key(am) && x.l >= am.l) {
            let xe = u.mon(*x);
            let sx = s_cache.entry(*x).or_insert_with(|| u.antipode_mon(x)).clone();
            let (l, r) = (d.pair(&sx, &ae), d.pair(&xe, sa));
            if l != r && antipode_fail.is_none() {
                antipode_fail = Some((format!("x={x}, a={am}: {l}"), r.to_string()));
            }
            let xs_star = d.pair(&u.star(&xe), &ae);
            star_total += 1;
            for (slot, rhs) in [&sa_star, &s_astar, &a_star].into_iter().enumerate() {
                if xs_star == d.pair(&xe, rhs).conjugate() {
                    star_variants[slot] += 1;
                }
            }
        }
    }
    let ok = antipode_fail.is_none();
    report.exact("antipode_compatible", ok, || antipode_fail.unwrap());
    for (slot, name) in ["<x*,a> = conj<x,S(a)*>", "<x*,a> = conj<x,S(a*)>", "<x*,a> = conj<x,a*>"].iter().enumerate() {
        report.record(
            format!("star_variant[{name}]"),
            star_variants[slot] == star_total,
            format!("{}/{} basis pairs", star_variants[slot], star_total),
            String::new(),
        );
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for j in 0..samples {
        let x = random_u_element(u, &mut rng, 2);
        let y = random_u_element(u, &mut rng, 2);
        let s = random_a_element(a, &mut rng, 2);
        let t = random_a_element(a, &mut rng, 2);
        let l = d.pair(&u.mul(&x, &y), &s);
        let r = d.pair_tensor(&tensor2(&x, &y), &a.coproduct(&s));
        report.exact(format!("random_coproduct_side[{j}]"), l == r, || (l.to_string(), r.to_string()));
        let l = d.pair(&x, &a.mul(&s, &t));
        let r = d.pair_tensor(&u.coproduct(&x), &tensor2(&s, &t));
        report.exact(format!("random_product_side[{j}]"), l == r, || (l.to_string(), r.to_string()));
        let l = d.pair(&u.antipode(&x), &s);
        let r = d.pair(&x, &a.antipode(&s));
        report.exact(format!("random_antipode[{j}]"), l == r, || (l.to_string(), r.to_string()));
    }
    Ok(report)
}

/// `x (x) y` as a two-fold tensor.
pub fn tensor2<K: Ord + Clone>(x: &crate::linear::LinComb<K>, y: &crate::linear::LinComb<K>) -> crate::linear::LinComb<Vec<K>> {
    let mut out = crate::linear::LinComb::zero(x.context());
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term(vec![a.clone(), b.clone()], ca * cb);
        }
    }
    out
}
