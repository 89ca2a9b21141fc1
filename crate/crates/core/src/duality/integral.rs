//! Invariant integral on the Grassmann sector, the Gaussian test sector and
//! the hermitian form `(X, Y) = I_E(X Y^*)`.
//!
//! Gaussian-sector basis elements are `e+^n e-^m z+^t z-^s G` with the fixed
//! weight `G = exp(-z+^2 - z-^2)`; every operator below keeps exactly one
//! factor `G`, so products `X Y^*` carry `G^2` and integrate to rational
//! multiples of `pi`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Duality;
use crate::afalg::{AElement, AMonomial};
use crate::error::{Error, Result};
use crate::hopf::{HopfStructure, MonomialAlgebra};
use crate::linear::LinComb;
use crate::report::NumericReport;
use crate::scalars::FieldScalar;
use crate::ufalg::{UElement, UGen};

/// `(n, m, t, s)` for `e+^n e-^m z+^t z-^s G`.
pub type GaussKey = (u32, u32, u32, u32);
pub type GaussElement = LinComb<GaussKey>;

fn in_grassmann_sector(a: &AMonomial) -> bool {
    a.k == 0 && a.t == 0 && a.s == 0 && a.l == 0 && a.mu.is_zero()
}

impl Duality {
    /// `I(e+^n e-^m) = q^-1` for `n = m = p-1`, zero otherwise.
    pub fn grassmann_integral(&self, x: &AElement) -> Result<FieldScalar> {
        let p = self.p();
        let mut out = FieldScalar::zero(self.ctx());
        for (m, c) in x.iter() {
            if !in_grassmann_sector(m) {
                return Err(Error::OutsideSector(format!("{m} is not a pure Grassmann monomial")));
            }
            if m.n == p - 1 && m.m == p - 1 {
                out = &out + &(c * &FieldScalar::q_pow(self.ctx(), -1));
            }
        }
        Ok(out)
    }

    /// Applies the integral on one leg of `Delta(e+^n e-^m)`. `None` when that
    /// leg leaves the integrable sector.
    pub fn integral_on_leg(&self, n: u32, m: u32, leg: usize) -> Option<AElement> {
        let delta = self.a().coproduct_mon(&AMonomial::grassmann(n, m, 0));
        let mut out = AElement::zero(self.ctx());
        for (k, c) in delta.iter() {
            let v = self.grassmann_integral(&self.a().mon(k[leg].clone())).ok()?;
            out.add_term(k[1 - leg].clone(), c * &v);
        }
        Some(out)
    }

    /// Variant of [`Duality::integral_on_leg`] that integrates `d^j exp(muL)`
    /// factors against the counit instead of rejecting them.
    pub fn integral_on_leg_extended(&self, n: u32, m: u32, leg: usize) -> AElement {
        let delta = self.a().coproduct_mon(&AMonomial::grassmann(n, m, 0));
        let mut out = AElement::zero(self.ctx());
        for (k, c) in delta.iter() {
            let f = &k[leg];
            if f.t == 0 && f.s == 0 && f.l == 0 && f.n == self.p() - 1 && f.m == self.p() - 1 {
                out.add_term(k[1 - leg].clone(), c * &FieldScalar::q_pow(self.ctx(), -1));
            }
        }
        out
    }

    /// `I_C(z+^t z-^s G^w)` for `w` in `{1, 2}`.
    pub fn gaussian_integral(&self, t: u32, s: u32, w: u32) -> FieldScalar {
        let ctx = self.ctx();
        if t % 2 == 1 || s % 2 == 1 {
            return FieldScalar::zero(ctx);
        }
        // int x^(2j) exp(-w x^2) dx = (2j-1)!! / (2w)^j * sqrt(pi / w)
        let moment = |k: u32| -> BigRational {
            let j = k / 2;
            let dfact: BigInt = (0..j).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i + 1));
            BigRational::new(dfact, num_traits::pow(BigInt::from(2 * w), j as usize))
        };
        let r = moment(t) * moment(s) / BigRational::from_integer(BigInt::from(w));
        FieldScalar::pi(ctx).scale(&r)
    }

    pub fn gauss_star(&self, x: &GaussElement) -> GaussElement {
        let mut out = GaussElement::zero(self.ctx());
        for (&(n, m, t, s), c) in x.iter() {
            let phase = FieldScalar::q_pow(self.ctx(), 2 * n as i64 * m as i64);
            out.add_term((n, m, t, s), &c.conjugate() * &phase);
        }
        out
    }

    /// `(X, Y) = I_E(X Y^*)`.
    pub fn hermitian_form(&self, x: &GaussElement, y: &GaussElement) -> FieldScalar {
        let ys = self.gauss_star(y);
        let mut out = FieldScalar::zero(self.ctx());
        for (&(n, m, t, s), cx) in x.iter() {
            for (&(n2, m2, t2, s2), cy) in ys.iter() {
                let eta = self.a().mul_mon(&AMonomial::grassmann(n, m, 0), &AMonomial::grassmann(n2, m2, 0));
                let g = self.grassmann_integral(&eta).expect("pure Grassmann product");
                if g.is_zero() {
                    continue;
                }
                let z = self.gaussian_integral(t + t2, s + s2, 2);
                out = &out + &(&(&g * &z) * &(cx * cy));
            }
        }
        out
    }

    /// Coefficient `c` with `R(p+/-) z+/- = c e+/-^(p-1)`, read off the pairing.
    pub fn supercharge_constant(&self, plus: bool) -> FieldScalar {
        let p = self.p();
        let (g, z, eta) = if plus {
            (UGen::PPlus, AMonomial { t: 1, ..AMonomial::one() }, AMonomial::grassmann(p - 1, 0, 0))
        } else {
            (UGen::PMinus, AMonomial { s: 1, ..AMonomial::one() }, AMonomial::grassmann(0, p - 1, 0))
        };
        self.right_act(&self.u().gen(g), &self.a().mon(z)).coeff(&eta)
    }

    fn grassmann_part(&self, phi: &UElement, n: u32, m: u32) -> Result<AElement> {
        let out = self.right_act(phi, &self.a().mon(AMonomial::grassmann(n, m, 0)));
        if let Some(bad) = out.keys().find(|k| !in_grassmann_sector(k)) {
            return Err(Error::OutsideSector(format!("right action leaves the Grassmann sector: {bad}")));
        }
        Ok(out)
    }

    fn d_dz(&self, x: &GaussElement, plus: bool) -> GaussElement {
        let mut out = GaussElement::zero(self.ctx());
        for (&(n, m, t, s), c) in x.iter() {
            let e = if plus { t } else { s };
            let bump = |d: i64| if plus { (n, m, (t as i64 + d) as u32, s) } else { (n, m, t, (s as i64 + d) as u32) };
            if e > 0 {
                out.add_term(bump(-1), c.scale(&BigRational::from_integer(BigInt::from(e))));
            }
            out.add_term(bump(1), c.scale(&BigRational::from_integer(BigInt::from(-2))));
        }
        out
    }

    /// Right action of a generator on the Gaussian sector: the Grassmann factor
    /// moves by the pairing, the classical factor by the derivation rules of
    /// the classical generators, combined through the coproduct.
    pub fn gauss_act(&self, g: UGen, x: &GaussElement) -> Result<GaussElement> {
        let ctx = self.ctx().clone();
        let u = self.u();
        let i = FieldScalar::i(&ctx);
        let mut out = GaussElement::zero(&ctx);
        for (&(n, m, t, s), c) in x.iter() {
            let single = GaussElement::term(&ctx, (0, 0, t, s), FieldScalar::one(&ctx));
            let lift = |a: &AElement, f: &GaussElement, out: &mut GaussElement, scale: &FieldScalar| {
                for (am, ac) in a.iter() {
                    for (&(_, _, ft, fs), fc) in f.iter() {
                        out.add_term((am.n, am.m, ft, fs), &(ac * fc) * scale);
                    }
                }
            };
            let eta = AElement::basis(&ctx, AMonomial::grassmann(n, m, 0));
            match g {
                UGen::Kappa | UGen::KappaInv => {
                    lift(&self.grassmann_part(&u.gen(g), n, m)?, &single, &mut out, c);
                }
                UGen::TransPlus | UGen::TransMinus | UGen::H => {
                    lift(&self.grassmann_part(&u.gen(g), n, m)?, &single, &mut out, c);
                    let df = match g {
                        UGen::TransPlus => self.d_dz(&single, true).scaled(&i),
                        UGen::TransMinus => self.d_dz(&single, false).scaled(&i),
                        _ => {
                            let zp = z_times(&self.d_dz(&single, true), true);
                            let zm = z_times(&self.d_dz(&single, false), false);
                            (&zp - &zm).scaled(&i)
                        }
                    };
                    lift(&eta, &df, &mut out, c);
                }
                UGen::PPlus | UGen::PMinus => {
                    let plus = g == UGen::PPlus;
                    lift(&self.grassmann_part(&u.gen(g), n, m)?, &single, &mut out, c);
                    let k_inv = self.grassmann_part(&u.gen(UGen::KappaInv), n, m)?;
                    let top = if plus { AMonomial::grassmann(self.p() - 1, 0, 0) } else { AMonomial::grassmann(0, self.p() - 1, 0) };
                    let shifted = self.a().mul(&k_inv, &self.a().mon(top));
                    let df = self.d_dz(&single, plus).scaled(&self.supercharge_constant(plus));
                    lift(&shifted, &df, &mut out, c);
                }
            }
        }
        Ok(out)
    }
}

fn z_times(x: &GaussElement, plus: bool) -> GaussElement {
    let mut out = GaussElement::zero(x.context());
    for (&(n, m, t, s), c) in x.iter() {
        out.add_term(if plus { (n, m, t + 1, s) } else { (n, m, t, s + 1) }, c.clone());
    }
    out
}

/// Normalization and invariance of the integral plus the `*`-representation
/// property of the right action on the Gaussian sector.
pub fn integral_suite(d: &Duality, z_bound: u32) -> Result<NumericReport> {
    let p = d.p();
    let ctx = d.ctx().clone();
    let mut report = NumericReport::new("integral_suite").with_config("p", p).with_config("z_bound", z_bound);
    d.stamp(&mut report);
    let top = d.a().mon(AMonomial::grassmann(p - 1, p - 1, 0));
    let v = d.grassmann_integral(&top)?;
    let want = FieldScalar::q_pow(&ctx, -1);
    report.exact("integral_normalization", v == want, || (v.to_string(), want.to_string()));
    let g = d.gaussian_integral(0, 0, 1);
    report.exact("gaussian_normalization", g == FieldScalar::pi(&ctx), || (g.to_string(), "pi".into()));

    let mut holds = [true, true];
    let mut extended = [true, true];
    for n in 0..p {
        for m in 0..p {
            let target = d.a().one().scaled(&d.grassmann_integral(&d.a().mon(AMonomial::grassmann(n, m, 0)))?);
            for leg in 0..2 {
                match d.integral_on_leg(n, m, leg) {
                    Some(v) if v == target => {}
                    _ => holds[leg] = false,
                }
                if d.integral_on_leg_extended(n, m, leg) != target {
                    extended[leg] = false;
                }
            }
        }
    }
    report.convention(
        "invariant_integral",
        match holds {
            [false, true] => "(id (x) I) Delta(a) = I(a) 1",
            [true, false] => "(I (x) id) Delta(a) = I(a) 1",
            [true, true] => "both",
            [false, false] => "neither",
        },
    );
    report.exact("integral_invariance_exactly_one", holds[0] != holds[1], || {
        (format!("(I (x) id): {}, (id (x) I): {}", holds[0], holds[1]), "exactly one".into())
    });
    report.record(
        "integral_invariance_left_leg_extended_by_counit",
        extended[1 - usize::from(holds[1])],
        format!("(I (x) id): {}, (id (x) I): {}", extended[0], extended[1]),
        String::new(),
    );

    let mut basis = Vec::new();
    for n in 0..p {
        for m in 0..p {
            for t in 0..=z_bound {
                for s in 0..=z_bound {
                    basis.push(GaussElement::basis(&ctx, (n, m, t, s)));
                }
            }
        }
    }
    for g in [UGen::TransPlus, UGen::TransMinus, UGen::H, UGen::Kappa, UGen::PPlus, UGen::PMinus] {
        let star = d.u().star(&d.u().gen(g));
        let star_gen = UGen::ALL.into_iter().find(|h| d.u().gen(*h) == star).ok_or_else(|| {
            Error::OutOfRange(format!("star of {} is not a generator", g.token()))
        })?;
        let images: Vec<GaussElement> = basis.iter().map(|x| d.gauss_act(g, x)).collect::<Result<_>>()?;
        let star_images: Vec<GaussElement> = basis.iter().map(|y| d.gauss_act(star_gen, y)).collect::<Result<_>>()?;
        let mut failures = 0usize;
        let mut first = None;
        let mut evaluated = 0usize;
        for (x, rx) in basis.iter().zip(&images) {
            for (y, ry) in basis.iter().zip(&star_images) {
                evaluated += 1;
                let l = d.hermitian_form(rx, y);
                let r = d.hermitian_form(x, ry);
                if l != r {
                    failures += 1;
                    if first.is_none() {
                        first = Some((format!("{x:?} / {y:?}: {l}"), r.to_string()));
                    }
                }
            }
        }
        let name = format!("star_representation[{}]", g.token());
        if matches!(g, UGen::PPlus | UGen::PMinus) {
            report.record(
                name,
                failures == 0,
                format!("{} of {evaluated} pairs fail", failures),
                first.map(|f| format!("first: {} vs {}", f.0, f.1)).unwrap_or_default(),
            );
        } else {
            let ok = failures == 0;
            report.exact(name, ok, || first.unwrap());
        }
    }
    Ok(report)
}
