//! Ladder relations of the matrix elements `D_n(nu) = Q_0n(nu, 0)`.
//!
//! An expression is a sum of `A_F · z+^a z-^b ∂+^c ∂-^d K_s` with `A_F` exact. The
//! right action uses the pairing on `A_F` and the first-order rules on functions
//! of `z±`, joined by the coproduct Leibniz rules. Derivatives of `K_s` are
//! central finite differences in `z±`.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;

use super::mp::{Cx, Prec};
use super::omega::OmegaReading;
use super::qkernel::q_kernel_terms;
use super::{kernel_eval_detailed, quadrant_decompose, EvalMode, KernelOptions, KernelParams, QuadrantPoint};
use crate::afalg::{AElement, AMonomial};
use crate::duality::Duality;
use crate::error::{Error, Result};
use crate::hopf::MonomialAlgebra;
use crate::report::NumericReport;
use crate::scalars::FieldScalar;
use crate::ufalg::UGen;

/// `z+^zp z-^zm ∂+^dp ∂-^dm K_s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct FKey {
    s: i64,
    dp: u32,
    dm: u32,
    zp: u32,
    zm: u32,
}

type DExpr = BTreeMap<FKey, AElement>;

fn push(e: &mut DExpr, key: FKey, a: AElement) {
    if a.is_zero() {
        return;
    }
    let slot = e.entry(key).or_insert_with(|| AElement::zero(a.context()));
    *slot = &*slot + &a;
    if slot.is_zero() {
        e.remove(&key);
    }
}

fn scaled(e: &DExpr, c: &FieldScalar) -> DExpr {
    let mut out = DExpr::new();
    for (k, a) in e {
        push(&mut out, *k, a.scaled(c));
    }
    out
}

fn same(x: &DExpr, y: &DExpr) -> bool {
    x == y
}

/// How `D_n` is continued outside `0 <= n < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Wrap {
    /// `D_(n+p)(nu) = D_n(nu + 1)`.
    Printed,
    /// `D_(n+p) = D_n`.
    Periodic,
}

/// `D_n(nu + shift/p)`.
fn d_state_wrapped(d: &Duality, n: i64, shift: i64, reading: OmegaReading, wrap: Wrap) -> Result<DExpr> {
    let p = i64::from(d.p());
    let wrap = if wrap == Wrap::Printed { n.div_euclid(p) } else { 0 };
    let mut out = DExpr::new();
    for (a, s) in q_kernel_terms(d, 0, n.rem_euclid(p) as u32, reading)? {
        push(&mut out, FKey { s: s + wrap * p + shift, dp: 0, dm: 0, zp: 0, zm: 0 }, a);
    }
    Ok(out)
}

fn d_state(d: &Duality, n: i64, shift: i64, reading: OmegaReading) -> Result<DExpr> {
    d_state_wrapped(d, n, shift, reading, Wrap::Printed)
}

fn d_periodic(d: &Duality, n: i64, shift: i64, reading: OmegaReading) -> Result<DExpr> {
    d_state_wrapped(d, n, shift, reading, Wrap::Periodic)
}

/// `∂±` of a key as integer combination of keys.
fn deriv(key: FKey, plus: bool) -> Vec<(FKey, i64)> {
    let mut out = Vec::new();
    if plus {
        if key.zp > 0 {
            out.push((FKey { zp: key.zp - 1, ..key }, i64::from(key.zp)));
        }
        out.push((FKey { dp: key.dp + 1, ..key }, 1));
    } else {
        if key.zm > 0 {
            out.push((FKey { zm: key.zm - 1, ..key }, i64::from(key.zm)));
        }
        out.push((FKey { dm: key.dm + 1, ..key }, 1));
    }
    out
}

fn act(d: &Duality, g: UGen, e: &DExpr) -> DExpr {
    let ctx = d.ctx();
    let a = d.a();
    let u = d.u();
    let i = FieldScalar::i(ctx);
    let ra = |g: UGen, x: &AElement| d.right_act(&u.gen(g), x);
    let mut out = DExpr::new();
    for (key, coeff) in e {
        match g {
            UGen::Kappa | UGen::KappaInv => push(&mut out, *key, ra(g, coeff)),
            UGen::H => {
                push(&mut out, *key, ra(g, coeff));
                for (plus, sign) in [(true, 1i64), (false, -1i64)] {
                    for (k, c) in deriv(*key, plus) {
                        let k = if plus { FKey { zp: k.zp + 1, ..k } } else { FKey { zm: k.zm + 1, ..k } };
                        push(&mut out, k, coeff.scaled(&i.scale(&num_rational::BigRational::from_integer((sign * c).into()))));
                    }
                }
            }
            UGen::TransPlus | UGen::TransMinus => {
                push(&mut out, *key, ra(g, coeff));
                for (k, c) in deriv(*key, g == UGen::TransPlus) {
                    push(&mut out, k, coeff.scaled(&(&i * &FieldScalar::from_int(ctx, c))));
                }
            }
            UGen::PPlus | UGen::PMinus => {
                let plus = g == UGen::PPlus;
                push(&mut out, *key, ra(g, coeff));
                let p = d.p();
                let top = a.mon(if plus { AMonomial::grassmann(p - 1, 0, 0) } else { AMonomial::grassmann(0, p - 1, 0) });
                let left = a.mul(&ra(UGen::KappaInv, coeff), &top).scaled(&d.function_supercharge_constant(plus));
                for (k, c) in deriv(*key, plus) {
                    push(&mut out, k, left.scaled(&FieldScalar::from_int(ctx, c)));
                }
            }
        }
    }
    out
}

fn stencil(order: u32) -> Result<Vec<(i32, f64)>> {
    match order {
        0 => Ok(vec![(0, 1.0)]),
        1 => Ok(vec![(-1, -0.5), (1, 0.5)]),
        2 => Ok(vec![(-1, 1.0), (0, -2.0), (1, 1.0)]),
        _ => Err(Error::FiniteDifference(format!("derivative order {order} not supported"))),
    }
}

struct Evaluator<'a> {
    p: u32,
    nu: f64,
    r: f64,
    h: f64,
    opts: &'a KernelOptions,
    cache: HashMap<(i64, i32, i32), Cx>,
}

impl Evaluator<'_> {
    fn kernel(&mut self, point: &QuadrantPoint, s: i64, i: i32, j: i32) -> Result<Cx> {
        if let Some(v) = self.cache.get(&(s, i, j)) {
            return Ok(v.clone());
        }
        let zp = point.z_plus + f64::from(i) * self.h;
        let zm = point.z_minus + f64::from(j) * self.h;
        let shifted = quadrant_decompose(zp, zm)?.with_lambda(point.lambda_val);
        if shifted.quadrant != point.quadrant {
            return Err(Error::FiniteDifference(format!("step {} crosses the light cone; use a smaller h", self.h)));
        }
        let params = KernelParams { p: self.p, s, nu: self.nu, mu: 0.0, r: self.r, precision: 1e-25 };
        let v = kernel_eval_detailed(&params, &shifted, EvalMode::Closed, self.opts)?.value.value;
        self.cache.insert((s, i, j), v.clone());
        Ok(v)
    }

    fn key(&mut self, point: &QuadrantPoint, key: FKey) -> Result<Complex64> {
        let prec = self.opts.prec;
        let mut acc = Cx::zero(prec);
        for (i, wi) in stencil(key.dp)? {
            for (j, wj) in stencil(key.dm)? {
                let v = self.kernel(point, key.s, i, j)?;
                acc = acc.add(&v.scale(&prec.float(wi * wj)));
            }
        }
        let hp = prec.float(self.h).pow_ref_u(key.dp + key.dm);
        let z = prec.float(point.z_plus).pow_ref_u(key.zp) * prec.float(point.z_minus).pow_ref_u(key.zm);
        Ok(acc.scale(&(z / hp)).to_c64())
    }

    fn eval(&mut self, point: &QuadrantPoint, e: &DExpr) -> Result<BTreeMap<AMonomial, Complex64>> {
        self.cache.clear();
        let mut out: BTreeMap<AMonomial, Complex64> = BTreeMap::new();
        for (key, coeff) in e {
            let v = self.key(point, *key)?;
            for (m, c) in coeff.iter() {
                *out.entry(m.clone()).or_default() += c.to_complex() * v;
            }
        }
        Ok(out)
    }
}

trait PowU {
    fn pow_ref_u(self, n: u32) -> rug::Float;
}

impl PowU for rug::Float {
    fn pow_ref_u(self, n: u32) -> rug::Float {
        use rug::ops::Pow;
        self.pow(n)
    }
}

fn norm(x: &BTreeMap<AMonomial, Complex64>) -> f64 {
    x.values().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

fn diff(x: &BTreeMap<AMonomial, Complex64>, y: &BTreeMap<AMonomial, Complex64>, c: Complex64) -> f64 {
    let mut keys: Vec<&AMonomial> = x.keys().chain(y.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.iter()
        .map(|k| {
            let a = x.get(*k).copied().unwrap_or_default();
            let b = y.get(*k).copied().unwrap_or_default();
            (a - c * b).norm_sqr()
        })
        .sum::<f64>()
        .sqrt()
}

#[derive(Clone, Debug)]
pub struct LadderOptions {
    pub reading: OmegaReading,
    pub h: f64,
    pub points: Vec<QuadrantPoint>,
    pub kernel: KernelOptions,
    pub fd_tolerance: f64,
    pub ladder_tolerance: f64,
}

impl LadderOptions {
    /// Quadrant 3 points `ρ ∈ {1, 2}`, `β ∈ {0, 0.5}`.
    pub fn new(prec: Prec) -> Self {
        let mut points = Vec::new();
        for rho in [1.0, 2.0] {
            for beta in [0.0, 0.5] {
                points.push(QuadrantPoint::new(3, rho, beta, 0.0).expect("valid point"));
            }
        }
        LadderOptions {
            reading: OmegaReading::SummationIndex,
            h: 1e-4,
            points,
            kernel: KernelOptions { prec, continuation: true, ..KernelOptions::default() },
            fd_tolerance: 1e-4,
            ladder_tolerance: 1e-3,
        }
    }
}

struct Relation {
    name: String,
    lhs: DExpr,
    rhs: DExpr,
    /// `None` fits the constant by least squares.
    constant: Option<Complex64>,
    tolerance: f64,
}

struct Outcome {
    residual: f64,
    constant: Complex64,
}

fn evaluate(ev: &mut Evaluator, points: &[QuadrantPoint], rel: &Relation, scale_by: &DExpr) -> Result<Outcome> {
    let mut samples = Vec::new();
    for pt in points {
        samples.push((ev.eval(pt, &rel.lhs)?, ev.eval(pt, &rel.rhs)?, ev.eval(pt, scale_by)?));
    }
    let constant = rel.constant.unwrap_or_else(|| {
        let mut num = Complex64::default();
        let mut den = 0.0;
        for (l, r, _) in &samples {
            for (k, rv) in r {
                num += rv.conj() * l.get(k).copied().unwrap_or_default();
                den += rv.norm_sqr();
            }
        }
        if den > 0.0 {
            num / den
        } else {
            Complex64::default()
        }
    });
    let mut residual: f64 = 0.0;
    for (l, r, d) in &samples {
        let scale = norm(d).max(norm(r) * constant.norm());
        let e = diff(l, r, constant);
        let r = if scale > 0.0 { e / scale } else { e };
        residual = if r.is_nan() { f64::INFINITY } else { residual.max(r) };
    }
    Ok(Outcome { residual, constant })
}

fn fmt_c(c: Complex64) -> String {
    format!("{:.12e}{:+.12e}i", c.re, c.im)
}

/// Residuals of the printed ladder relations and of the relations that follow
/// from Grassmann degree counting.
///
/// The counted relations are `R(H)D_n(nu) = -i nu D_n(nu)`,
/// `R(p+)D_n(nu) = -ĉ D_(n-1)(nu + 1/p)`, `R(p-)D_n(nu) = -ĉ D_(n+1)(nu - 1/p)`
/// and `R(C)D = ĉ² D`, with `D_(n+p) = D_n`.
pub fn d_ladder_suite(d: &Duality, n: u32, nu: f64, opts: &LadderOptions) -> Result<NumericReport> {
    let p = d.p();
    if n >= p {
        return Err(Error::OutOfRange(format!("n = {n} must lie below p = {p}")));
    }
    let h = opts.h;
    let prec = opts.kernel.prec;
    if !(h > 0.0) || h < 2f64.powi(-(prec.0 as i32) / 2) {
        return Err(Error::FiniteDifference(format!("step {h} underflows at {} bits; use a larger h or higher precision", prec.0)));
    }
    let ctx = d.ctx();
    let r = ctx.r().clone();
    let rf = num_traits::ToPrimitive::to_f64(&r).unwrap_or(f64::NAN);
    let mut rep = NumericReport::new("d_ladder")
        .with_config("p", p)
        .with_config("n", n)
        .with_config("nu", nu)
        .with_config("r", &r)
        .with_config("h", h)
        .with_config("bits", prec.0)
        .with_config("points", opts.points.len());
    rep.convention("omega_reading", format!("{:?}", opts.reading));
    rep.convention("derivatives", "central differences in z+, z-; second order in h");
    rep.convention("casimir", "C = p+ p-, R(C) = R(p-) R(p+)");
    let reading = opts.reading;
    let ni = i64::from(n);
    let pi = i64::from(p);
    let state = d_state(d, ni, 0, reading)?;
    let mut ev = Evaluator { p, nu, r: rf, h, opts: &opts.kernel, cache: HashMap::new() };
    let i = Complex64::new(0.0, 1.0);
    let chat = FieldScalar::chat(ctx).to_complex();
    let c = (&FieldScalar::chat(ctx) * &FieldScalar::q_pow(ctx, 1)).to_complex();

    let kappa = act(d, UGen::Kappa, &state);
    let expected = scaled(&state, &FieldScalar::q_pow(ctx, ni));
    rep.exact("ladder_kappa", same(&kappa, &expected), || ("R(kappa)D".into(), "q^n D".into()));

    let h_image = act(d, UGen::H, &state);
    let up = act(d, UGen::PPlus, &state);
    let down = act(d, UGen::PMinus, &state);
    let casimir = act(d, UGen::PMinus, &up);
    let fd = opts.fd_tolerance;
    let lt = opts.ladder_tolerance;
    let rel = |name: &str, lhs: &DExpr, rhs: DExpr, constant: Option<Complex64>, tolerance: f64| Relation {
        name: name.into(),
        lhs: lhs.clone(),
        rhs,
        constant,
        tolerance,
    };
    let relations = vec![
        rel("ladder_H", &h_image, state.clone(), Some(-i * (nu + f64::from(n) / f64::from(p))), fd),
        rel("ladder_P+", &act(d, UGen::TransPlus, &state), d_state(d, ni, pi, reading)?, Some((-rf).into()), fd),
        rel("ladder_P-", &act(d, UGen::TransMinus, &state), d_state(d, ni, -pi, reading)?, Some((-rf).into()), fd),
        rel("ladder_casimir", &casimir, state.clone(), Some(c * c), lt),
        rel("ladder_p+", &up, d_state(d, ni + 1, 0, reading)?, Some(c), lt),
        rel("ladder_p-", &down, d_state(d, ni - 1, 0, reading)?, Some(c), lt),
        rel("counted_H", &h_image, state.clone(), Some(-i * nu), fd),
        rel("counted_p+", &up, d_periodic(d, ni - 1, 1, reading)?, Some(-chat), lt),
        rel("counted_p-", &down, d_periodic(d, ni + 1, -1, reading)?, Some(-chat), lt),
        rel("counted_casimir", &casimir, state.clone(), Some(chat * chat), lt),
    ];
    for rel in &relations {
        let out = evaluate(&mut ev, &opts.points, rel, &state)?;
        rep.numeric(&rel.name, out.residual, rel.tolerance, format!("constant {}", fmt_c(out.constant)), String::new());
    }
    for (name, g, target) in [("fit_p+", UGen::PPlus, d_state(d, ni + 1, 0, reading)?), ("fit_p-", UGen::PMinus, d_state(d, ni - 1, 0, reading)?)] {
        let fit = Relation { name: name.into(), lhs: act(d, g, &state), rhs: target, constant: None, tolerance: lt };
        let out = evaluate(&mut ev, &opts.points, &fit, &state)?;
        rep.record(
            format!("{name}_printed_target"),
            out.residual < lt,
            format!("best constant {}", fmt_c(out.constant)),
            format!("residual {:e}", out.residual),
        );
    }
    Ok(rep)
}

/// Worst fitted residual of the counted `p±` ladder under each reading of `ω`.
pub fn discriminate_reading(d: &Duality, n: u32, nu: f64, opts: &LadderOptions) -> Result<Vec<(OmegaReading, f64)>> {
    let rf = num_traits::ToPrimitive::to_f64(d.ctx().r()).unwrap_or(f64::NAN);
    let ni = i64::from(n);
    let mut out = Vec::new();
    for reading in [OmegaReading::SummationIndex, OmegaReading::Literal] {
        let state = d_state(d, ni, 0, reading)?;
        let mut ev = Evaluator { p: d.p(), nu, r: rf, h: opts.h, opts: &opts.kernel, cache: HashMap::new() };
        let mut worst: f64 = 0.0;
        for (g, target) in [(UGen::PPlus, d_periodic(d, ni - 1, 1, reading)?), (UGen::PMinus, d_periodic(d, ni + 1, -1, reading)?)] {
            let rel = Relation { name: String::new(), lhs: act(d, g, &state), rhs: target, constant: None, tolerance: 0.0 };
            worst = worst.max(evaluate(&mut ev, &opts.points, &rel, &state)?.residual);
        }
        out.push((reading, worst));
    }
    Ok(out)
}
