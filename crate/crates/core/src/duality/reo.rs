//! Closed-form right action on `e+/-` and `f(z+, z-)` compared against the
//! action induced by the pairing, plus structural properties of that action.
//!
//! Closed form on single factors:
//! `R(p+/-) e+/-^k = i q^(+/-1/2) [k] e+/-^(k-1)`, `R(p+/-) e-/+^k = 0`,
//! `R(k) e+/-^k = q^(+/-k) e+/-^k`, `R(H) e+/-^n = +/-(in/p) e+/-^n`,
//! `R(p+/-) f = i q^(+/-1/2) (-1)^((p+1)/2) / [p-1]! e+/-^(p-1) df/dz+/-`,
//! `R(P+/-) f = i df/dz+/-`, `R(k) f = f`, `R(H) f = i z+ df/dz+ - i z- df/dz-`,
//! extended to products by the Leibniz rules
//! `R(p+/-)(XY) = R(p+/-)X R(k)Y + R(k^-1)X R(p+/-)Y`, `R(k)(XY) = R(k)X R(k)Y`,
//! `R(g)(XY) = R(g)X Y + X R(g)Y` for `g` in `{H, P+, P-}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Duality;
use crate::afalg::{random_a_element, AElement, AMonomial};
use crate::error::Result;
use crate::hopf::MonomialAlgebra;
use crate::report::NumericReport;
use crate::scalars::{q_factorial, q_number, FieldScalar};
use crate::ufalg::{UElement, UGen};

/// Polynomial monomials `e+^n e-^m z+^t z-^s` of total degree at most `max_degree`.
pub fn polynomial_monomials(p: u32, max_degree: u32) -> Vec<AMonomial> {
    let mut out = Vec::new();
    for n in 0..p.min(max_degree + 1) {
        for m in 0..p.min(max_degree + 1 - n) {
            for t in 0..=(max_degree - n - m) {
                for s in 0..=(max_degree - n - m - t) {
                    out.push(AMonomial { n, m, t, s, ..AMonomial::one() });
                }
            }
        }
    }
    out
}

/// Which printed form of the supercharges is used by [`Duality::closed_action`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// Single-factor rules extended by the Leibniz rules.
    Leibniz,
    /// `R(p+/-) = i q^(+/-1/2) D+/- + (-1)^((p+1)/2) / [p-1]! e+/-^(p-1) d/dz+/-` with
    /// `D+ (e+^n e-^m f) = q^(alpha m) [n] e+^(n-1) e-^m f` and `e^(p-1)` multiplied from the left.
    Superspace { alpha: i64 },
}

impl Duality {
    fn sign_half(&self, plus: bool) -> FieldScalar {
        let ctx = self.ctx();
        &FieldScalar::i(ctx) * &self.sqrt_q_pow(if plus { 1 } else { -1 })
    }

    fn top_constant(&self) -> FieldScalar {
        let p = self.p();
        let parity = if ((p + 1) / 2) % 2 == 0 { 1 } else { -1 };
        FieldScalar::from_int(self.ctx(), parity)
            .checked_div(&q_factorial(p - 1, self.ctx()))
            .expect("[p-1]! is invertible")
    }

    /// `c±` in `R(p±) f = c± e±^(p-1) df/dz±` for functions of `z±` alone.
    pub fn function_supercharge_constant(&self, plus: bool) -> FieldScalar {
        &self.sign_half(plus) * &self.top_constant()
    }

    fn derivative(&self, x: &AElement, plus: bool) -> AElement {
        let mut out = AElement::zero(self.ctx());
        for (m, c) in x.iter() {
            let e = if plus { m.t } else { m.s };
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            if plus {
                d.t -= 1;
            } else {
                d.s -= 1;
            }
            out.add_term(d, c.scale(&BigRational::from_integer(BigInt::from(e))));
        }
        out
    }

    fn closed_eta(&self, g: UGen, plus: bool, k: u32) -> AElement {
        let ctx = self.ctx();
        let a = self.a();
        let p = self.p() as i64;
        let mon = |k: u32| a.mon(if plus { AMonomial::grassmann(k, 0, 0) } else { AMonomial::grassmann(0, k, 0) });
        let sign: i64 = if plus { 1 } else { -1 };
        match g {
            UGen::PPlus | UGen::PMinus => {
                if (g == UGen::PPlus) != plus || k == 0 {
                    return AElement::zero(ctx);
                }
                mon(k - 1).scaled(&(&self.sign_half(plus) * &q_number(k as i64, ctx)))
            }
            UGen::Kappa => mon(k).scaled(&FieldScalar::q_pow(ctx, sign * k as i64)),
            UGen::KappaInv => mon(k).scaled(&FieldScalar::q_pow(ctx, -sign * k as i64)),
            UGen::H => mon(k).scaled(&(&FieldScalar::i(ctx) * &FieldScalar::from_ratio(ctx, sign * k as i64, p))),
            UGen::TransPlus | UGen::TransMinus => AElement::zero(ctx),
        }
    }

    fn closed_classical(&self, g: UGen, f: &AElement) -> AElement {
        let ctx = self.ctx();
        let a = self.a();
        let i = FieldScalar::i(ctx);
        let p = self.p();
        match g {
            UGen::Kappa | UGen::KappaInv => f.clone(),
            UGen::TransPlus => self.derivative(f, true).scaled(&i),
            UGen::TransMinus => self.derivative(f, false).scaled(&i),
            UGen::H => {
                let zp = a.mul(&a.mon(AMonomial { t: 1, ..AMonomial::one() }), &self.derivative(f, true));
                let zm = a.mul(&a.mon(AMonomial { s: 1, ..AMonomial::one() }), &self.derivative(f, false));
                (&zp - &zm).scaled(&i)
            }
            UGen::PPlus | UGen::PMinus => {
                let plus = g == UGen::PPlus;
                let top = if plus { AMonomial::grassmann(p - 1, 0, 0) } else { AMonomial::grassmann(0, p - 1, 0) };
                let c = &self.sign_half(plus) * &self.top_constant();
                a.mul(&a.mon(top), &self.derivative(f, plus)).scaled(&c)
            }
        }
    }

    fn leibniz(&self, g: UGen, x: &AElement, y: &AElement, act: &dyn Fn(UGen, &AElement) -> AElement) -> AElement {
        let a = self.a();
        match g {
            UGen::PPlus | UGen::PMinus => {
                &a.mul(&act(g, x), &act(UGen::Kappa, y)) + &a.mul(&act(UGen::KappaInv, x), &act(g, y))
            }
            UGen::Kappa | UGen::KappaInv => a.mul(&act(g, x), &act(g, y)),
            _ => &a.mul(&act(g, x), y) + &a.mul(x, &act(g, y)),
        }
    }

    /// Closed-form right action of a generator on a polynomial monomial.
    pub fn closed_action(&self, g: UGen, x: &AMonomial, form: ClosedForm) -> AElement {
        let a = self.a();
        let eta_plus = a.mon(AMonomial::grassmann(x.n, 0, 0));
        let eta_minus = a.mon(AMonomial::grassmann(0, x.m, 0));
        let f = a.mon(AMonomial { t: x.t, s: x.s, ..AMonomial::one() });
        match form {
            ClosedForm::Leibniz => {
                let single = |g: UGen, y: &AElement| -> AElement {
                    let mut out = AElement::zero(self.ctx());
                    for (m, c) in y.iter() {
                        let r = if m.n > 0 || m.m > 0 {
                            self.closed_eta(g, m.n > 0, m.n.max(m.m))
                        } else {
                            self.closed_classical(g, &a.mon(m.clone()))
                        };
                        out.add_scaled(&r, c);
                    }
                    out
                };
                let minus_f = |g: UGen, y: &AElement| -> AElement {
                    let mut out = AElement::zero(self.ctx());
                    for (m, c) in y.iter() {
                        let e = a.mon(AMonomial::grassmann(0, m.m, 0));
                        let rest = a.mon(AMonomial { n: 0, m: 0, ..m.clone() });
                        out.add_scaled(&self.leibniz(g, &e, &rest, &single), c);
                    }
                    out
                };
                let rest = a.mul(&eta_minus, &f);
                self.leibniz(g, &eta_plus, &rest, &|g, y| {
                    let mut out = AElement::zero(self.ctx());
                    for (m, c) in y.iter() {
                        let r = if m.n > 0 {
                            self.closed_eta(g, true, m.n)
                        } else {
                            minus_f(g, &a.mon(m.clone()))
                        };
                        out.add_scaled(&r, c);
                    }
                    out
                })
            }
            ClosedForm::Superspace { alpha } => match g {
                UGen::PPlus | UGen::PMinus => {
                    let ctx = self.ctx();
                    let plus = g == UGen::PPlus;
                    let (k, other) = if plus { (x.n, x.m) } else { (x.m, x.n) };
                    let mut out = AElement::zero(ctx);
                    if k > 0 {
                        let mut low = x.clone();
                        if plus {
                            low.n -= 1;
                        } else {
                            low.m -= 1;
                        }
                        let c = &(&self.sign_half(plus) * &q_number(k as i64, ctx)) * &FieldScalar::q_pow(ctx, alpha * other as i64);
                        out.add_term(low, c);
                    }
                    let p = self.p();
                    let top = if plus { AMonomial::grassmann(p - 1, 0, 0) } else { AMonomial::grassmann(0, p - 1, 0) };
                    let d = self.derivative(&a.mon(x.clone()), plus);
                    out = &out + &a.mul(&a.mon(top), &d).scaled(&self.top_constant());
                    out
                }
                _ => self.closed_action(g, x, ClosedForm::Leibniz),
            },
        }
    }
}

struct RatioScan {
    ratio: Option<FieldScalar>,
    consistent: bool,
    detail: String,
}

fn scan_ratio(d: &Duality, g: UGen, set: &[AMonomial], form: ClosedForm) -> RatioScan {
    let mut ratio: Option<FieldScalar> = None;
    for x in set {
        let oracle = d.right_act(&d.u().gen(g), &d.a().mon(x.clone()));
        let closed = d.closed_action(g, x, form);
        if oracle.is_zero() {
            if !closed.is_zero() {
                return RatioScan { ratio, consistent: false, detail: format!("{x}: oracle 0, closed {}", d.a().display(&closed)) };
            }
            continue;
        }
        let (key, oc) = oracle.iter().next().expect("nonzero");
        let c = closed.coeff(key).checked_div(oc).expect("oracle coefficient invertible");
        if closed != oracle.scaled(&c) {
            return RatioScan {
                ratio,
                consistent: false,
                detail: format!("{x}: closed {} not proportional to oracle {}", d.a().display(&closed), d.a().display(&oracle)),
            };
        }
        match &ratio {
            None => ratio = Some(c),
            Some(r) if *r == c => {}
            Some(r) => {
                return RatioScan { ratio: Some(r.clone()), consistent: false, detail: format!("{x}: ratio {c} differs from {r}") }
            }
        }
    }
    RatioScan { ratio, consistent: true, detail: String::new() }
}

/// Compares the closed-form action with the pairing-induced one on all
/// polynomial monomials of degree at most `max_degree`.
pub fn reo_conformance(d: &Duality, max_degree: u32) -> NumericReport {
    let p = d.p();
    let mut report = NumericReport::new("reo_conformance").with_config("p", p).with_config("max_degree", max_degree);
    d.stamp(&mut report);
    let set = polynomial_monomials(p, max_degree);
    for g in [UGen::TransPlus, UGen::TransMinus, UGen::H, UGen::Kappa, UGen::KappaInv] {
        let mut first = None;
        for x in &set {
            let oracle = d.right_act(&d.u().gen(g), &d.a().mon(x.clone()));
            let closed = d.closed_action(g, x, ClosedForm::Leibniz);
            if oracle != closed && first.is_none() {
                first = Some((format!("{x}: {}", d.a().display(&closed)), d.a().display(&oracle)));
            }
        }
        let ok = first.is_none();
        report.exact(format!("classical_exact[{}]", g.token()), ok, || first.unwrap());
    }
    for g in [UGen::PPlus, UGen::PMinus] {
        let scan = scan_ratio(d, g, &set, ClosedForm::Leibniz);
        let unit = scan.ratio.as_ref().map(|r| (r.to_complex().norm() - 1.0).abs() < 1e-12).unwrap_or(false);
        let rendered = scan.ratio.as_ref().map(|r| r.to_string()).unwrap_or_else(|| "none".into());
        report.convention(&format!("reo_ratio[{}]", g.token()), &rendered);
        let consistent = scan.consistent && unit;
        report.exact(format!("supercharge_ratio_constant[{}]", g.token()), consistent, || {
            (scan.detail.clone(), format!("ratio {rendered}"))
        });
        for alpha in -2..=2 {
            let s = scan_ratio(d, g, &set, ClosedForm::Superspace { alpha });
            report.record(
                format!("superspace_form[{}, alpha={alpha}]", g.token()),
                s.consistent,
                s.ratio.map(|r| format!("ratio {r}")).unwrap_or_default(),
                s.detail,
            );
        }
    }
    report
}

/// Fractional root, Leibniz rules, anti-multiplicativity, Casimir and the
/// left-action labels for the pairing-induced actions.
pub fn right_action_suite(d: &Duality, max_degree: u32, samples: usize, seed: u64) -> Result<NumericReport> {
    use rand::SeedableRng;
    let p = d.p();
    let ctx = d.ctx().clone();
    let (u, a) = (d.u(), d.a());
    let mut report = NumericReport::new("right_action_suite")
        .with_config("p", p)
        .with_config("max_degree", max_degree)
        .with_config("samples", samples)
        .with_config("seed", seed);
    d.stamp(&mut report);

    let mut symbolic = Vec::new();
    let third = BigRational::new(BigInt::from(1), BigInt::from(p));
    for base in polynomial_monomials(p, max_degree) {
        let deg = base.n + base.m + base.t + base.s;
        for l in 0..=(max_degree - deg) {
            for k in 0..p {
                for mu in [BigRational::zero(), third.clone()] {
                    symbolic.push(AMonomial { k, l, mu, ..base.clone() });
                }
            }
        }
    }
    report.note(format!("symbolic monomials: {}", symbolic.len()));
    for (small, big) in [(UGen::PPlus, UGen::TransPlus), (UGen::PMinus, UGen::TransMinus)] {
        let mut first = None;
        for x in &symbolic {
            let xe = a.mon(x.clone());
            let mut iter = xe.clone();
            for _ in 0..p {
                iter = d.right_act(&u.gen(small), &iter);
            }
            let direct = d.right_act(&u.gen(big), &xe);
            if iter != direct && first.is_none() {
                first = Some((format!("{x}: {}", a.display(&iter)), a.display(&direct)));
            }
        }
        let ok = first.is_none();
        report.exact(format!("fractional_root[{}]", small.token()), ok, || first.unwrap());
    }

    let casimir = u.casimir();
    let mut first = None;
    for x in symbolic.iter().filter(|x| x.n + x.m + x.t + x.s + x.l <= 3) {
        let xe = a.mon(x.clone());
        for g in UGen::ALL {
            let l = d.right_act(&casimir, &d.right_act(&u.gen(g), &xe));
            let r = d.right_act(&u.gen(g), &d.right_act(&casimir, &xe));
            if l != r && first.is_none() {
                first = Some((format!("{x}, {}: {}", g.token(), a.display(&l)), a.display(&r)));
            }
        }
    }
    let ok = first.is_none();
    report.exact("casimir_commutes", ok, || first.unwrap());

    let classical = polynomial_monomials(p, max_degree);
    for (g, want_identity) in [(UGen::H, false), (UGen::Kappa, true)] {
        let mut first = None;
        for x in &classical {
            let xe = a.mon(x.clone());
            let l = d.left_act(&u.gen(g), &xe);
            let want = if want_identity { xe.clone() } else { AElement::zero(&ctx) };
            if l != want && first.is_none() {
                first = Some((format!("{x}: {}", a.display(&l)), a.display(&want)));
            }
        }
        let ok = first.is_none();
        report.exact(format!("left_label[{}]", g.token()), ok, || first.unwrap());
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let act = |g: UGen, x: &AElement| d.right_act(&u.gen(g), x);
    for j in 0..samples {
        let x = random_a_element(a, &mut rng, 2);
        let y = random_a_element(a, &mut rng, 2);
        let xy = a.mul(&x, &y);
        for g in [UGen::PPlus, UGen::PMinus, UGen::Kappa, UGen::H, UGen::TransPlus] {
            let l = act(g, &xy);
            let r = d.leibniz(g, &x, &y, &act);
            report.exact(format!("leibniz[{}, {j}]", g.token()), l == r, || (a.display(&l), a.display(&r)));
        }
        let phi: UElement = u.gen(UGen::ALL[j % UGen::ALL.len()]);
        let psi: UElement = u.gen(UGen::ALL[(j / UGen::ALL.len() + 1) % UGen::ALL.len()]);
        let l = d.right_act(&u.mul(&phi, &psi), &x);
        let r = d.right_act(&psi, &d.right_act(&phi, &x));
        report.exact(format!("anti_homomorphism[{j}]"), l == r, || (a.display(&l), a.display(&r)));
    }
    Ok(report)
}
