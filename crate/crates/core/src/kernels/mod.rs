//! Kernel functions `K_s^r` on the four quadrants of the `(z+, z-)` plane.
//!
//! `K_s(nu, mu; z) = e^(mu lambda)/(2πi) ∫ exp(i r (e^x z+ + e^-x z-) + a x) dx`
//! with `a = nu - mu + s/p` in the strip `|a| < 1`. Writing
//! `z± = ε± ρ e^(±β)/2` and `u = x + β` the phase becomes
//! `i(rρ/2)(ε+ e^u + ε- e^-u)`: a cosh in quadrants 1 and 3, a sinh in
//! quadrants 2 and 4.

pub mod bessel;
pub mod ladder;
pub mod mp;
pub mod omega;
pub mod qkernel;
pub mod quad;
pub mod suite;


use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use bessel::{bessel_eval, BesselKind};
use mp::{ComplexValue, Cx, Prec};
use quad::{cutoff, ln_gamma_tail, trapezoid};

pub use ladder::{d_ladder_suite, discriminate_reading, LadderOptions};
pub use omega::{omega_poly, OmegaPolynomial, OmegaReading};
pub use qkernel::{q_kernel, QKernel, QTerm};
pub use suite::{kernel_grid, kernel_grid_suite, rows_to_csv, GridRow, KernelGrid};


#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadrantPoint {
    pub quadrant: u8,
    pub rho: f64,
    pub beta: f64,
    pub lambda_val: f64,
    pub z_plus: f64,
    pub z_minus: f64,
}

fn signs(quadrant: u8) -> (f64, f64) {
    match quadrant {
        1 => (1.0, 1.0),
        2 => (1.0, -1.0),
        3 => (-1.0, -1.0),
        _ => (-1.0, 1.0),
    }
}

impl QuadrantPoint {
    pub fn new(quadrant: u8, rho: f64, beta: f64, lambda_val: f64) -> Result<Self> {
        if !(1..=4).contains(&quadrant) {
            return Err(Error::OutOfRange(format!("quadrant {quadrant}")));
        }
        if !(rho > 0.0) || !beta.is_finite() {
            return Err(Error::OutOfRange(format!("rho = {rho}, beta = {beta}")));
        }
        let (ep, em) = signs(quadrant);
        Ok(QuadrantPoint {
            quadrant,
            rho,
            beta,
            lambda_val,
            z_plus: ep * rho * beta.exp() / 2.0,
            z_minus: em * rho * (-beta).exp() / 2.0,
        })
    }

    pub fn with_lambda(mut self, lambda_val: f64) -> Self {
        self.lambda_val = lambda_val;
        self
    }

    pub fn signs(&self) -> (f64, f64) {
        signs(self.quadrant)
    }

    /// `(z+, z-)` recomputed from `(quadrant, ρ, β)`.
    pub fn reconstruct(&self) -> (f64, f64) {
        let (ep, em) = self.signs();
        (ep * self.rho * self.beta.exp() / 2.0, em * self.rho * (-self.beta).exp() / 2.0)
    }
}

pub fn quadrant_decompose(z_plus: f64, z_minus: f64) -> Result<QuadrantPoint> {
    if z_plus * z_minus == 0.0 || !z_plus.is_finite() || !z_minus.is_finite() {
        return Err(Error::LightCone);
    }
    let quadrant = match (z_plus > 0.0, z_minus > 0.0) {
        (true, true) => 1,
        (true, false) => 2,
        (false, false) => 3,
        (false, true) => 4,
    };
    let rho = 2.0 * (z_plus * z_minus).abs().sqrt();
    let beta = 0.5 * (z_plus / z_minus).abs().ln();
    Ok(QuadrantPoint { quadrant, rho, beta, lambda_val: 0.0, z_plus, z_minus })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelParams {
    pub p: u32,
    pub s: i64,
    pub nu: f64,
    pub mu: f64,
    pub r: f64,
    /// Target relative error.
    pub precision: f64,
}

impl KernelParams {
    pub fn new(p: u32, s: i64, nu: f64, mu: f64, r: f64) -> Self {
        KernelParams { p, s, nu, mu, r, precision: 1e-30 }
    }

    pub fn strip(&self) -> f64 {
        self.nu - self.mu + self.s as f64 / f64::from(self.p)
    }

    /// `a = nu - mu + s/p` in working precision, after the strip check.
    pub fn exponent(&self, prec: Prec) -> Result<Float> {
        self.exponent_within(prec, 1.0)
    }

    fn exponent_within(&self, prec: Prec, bound: f64) -> Result<Float> {
        let a = self.strip();
        if !(a > -bound && a < bound) {
            return Err(Error::StripCondition(a));
        }
        if !(self.r > 0.0) {
            return Err(Error::OutOfRange(format!("r must be positive, got {}", self.r)));
        }
        Ok(prec.float(self.nu) - prec.float(self.mu) + prec.ratio(self.s, i64::from(self.p)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EvalMode {
    Integral,
    Closed,
}

impl std::str::FromStr for EvalMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integral" => Ok(EvalMode::Integral),
            "closed" => Ok(EvalMode::Closed),
            _ => Err(Error::Parse(format!("unknown mode `{s}`"))),
        }
    }
}

/// Which quadrant table the closed mode uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosedTable {
    /// Cosh-type quadrants give Hankel functions, sinh-type quadrants give `K`.
    Derived,
    /// The table as printed, `H1, H2, K, K` for quadrants 1 to 4.
    Printed,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KernelOptions {
    pub prec: Prec,
    pub theta: f64,
    /// Forces the contour orientation; `None` picks the decaying one.
    pub tilt: Option<i8>,
    pub table: ClosedTable,
    /// Closed mode only: continue analytically to `|a| < 3`.
    pub continuation: bool,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { prec: Prec::default(), theta: std::f64::consts::FRAC_PI_4, tilt: None, table: ClosedTable::Derived, continuation: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelEvaluation {
    pub value: ComplexValue,
    pub mode: EvalMode,
    pub theta: f64,
    pub tilt: i8,
    pub tilt_retried: bool,
    pub cutoff: (f64, f64),
    pub points: usize,
}

fn cexp(re: Float, im: Float) -> Cx {
    Cx::new(re, im).exp()
}

/// `e^(mu lambda) / (2πi)`.
fn prefactor(prec: Prec, params: &KernelParams, point: &QuadrantPoint) -> Cx {
    let e = (prec.float(params.mu) * prec.float(point.lambda_val)).exp();
    let two_pi = prec.pi() * 2u32;
    Cx::new(prec.int(0), -(e / two_pi))
}

/// Contour `w(t) = t + i θ(t)`, with `θ(t)` interpolating between the decaying
/// directions at `-∞` and `+∞`.
struct Contour {
    theta: f64,
    ep: f64,
    em: f64,
}

impl Contour {
    fn angle(&self, t: f64) -> f64 {
        let th = t.tanh();
        self.theta * (self.ep * (1.0 + th) / 2.0 - self.em * (1.0 - th) / 2.0)
    }

    fn angle_mp(&self, prec: Prec, t: &Float) -> (Float, Float) {
        let th = t.clone().tanh();
        let one = prec.int(1);
        let c = prec.float(self.theta);
        let ang = c.clone() * ((one.clone() + &th) * self.ep - (one.clone() - &th) * self.em) / 2u32;
        let sech2 = one - th.clone() * &th;
        let slope = c * sech2 * (self.ep + self.em) / 2u32;
        (ang, slope)
    }

    /// Real part of the exponent at `t`, in double precision.
    fn log_magnitude(&self, big_r: f64, a: f64, t: f64) -> f64 {
        let s = self.angle(t).sin();
        -(big_r / 2.0) * (self.ep * t.exp() * s - self.em * (-t).exp() * s) + a * t
    }
}

fn integral_mode(
    params: &KernelParams,
    point: &QuadrantPoint,
    opts: &KernelOptions,
) -> Result<KernelEvaluation> {
    let prec = opts.prec;
    let a = params.exponent(prec)?;
    let af = a.to_f64();
    let big_r = params.r * point.rho;
    let (ep, em) = point.signs();
    let mut sigma = opts.tilt.unwrap_or(1).signum() as f64;
    if sigma == 0.0 {
        sigma = 1.0;
    }
    let mut retried = false;
    let probe = 3.0;
    let grows = |c: &Contour| {
        let m0 = c.log_magnitude(big_r, af, 0.0);
        c.log_magnitude(big_r, af, probe) > m0 + 1.0 || c.log_magnitude(big_r, af, -probe) > m0 + 1.0
    };
    let mut contour = Contour { theta: opts.theta * sigma, ep, em };
    if grows(&contour) {
        sigma = -sigma;
        retried = true;
        contour = Contour { theta: opts.theta * sigma, ep, em };
        if grows(&contour) {
            return Err(Error::Precision { requested: params.precision, achieved: f64::INFINITY });
        }
    }
    let rr = prec.float(params.r) * prec.float(point.rho) / 2u32;
    let av = a.clone();
    let ep_f = prec.float(ep);
    let em_f = prec.float(em);
    let f = |t: &Float| {
        let (ang, slope) = contour.angle_mp(prec, t);
        let ew = cexp(t.clone(), ang.clone());
        let emw = cexp(-t.clone(), -ang.clone());
        let inner = ew.scale(&ep_f).add(&emw.scale(&em_f)).scale(&rr);
        let mut expo = inner.mul_i();
        expo.re += av.clone() * t;
        expo.im += av.clone() * &ang;
        let jac = Cx::new(prec.int(1), slope);
        expo.exp().mul(&jac)
    };
    let th = opts.theta.abs();
    let ln_tail = |t: f64, upper: bool| {
        let s = if upper { ep * contour.angle(t).sin() } else { -em * contour.angle(-t).sin() };
        if s <= 0.0 {
            return f64::INFINITY;
        }
        let alpha = if upper { af - 1.0 } else { -af - 1.0 };
        (1.0 + th).ln() + big_r / 2.0 * (-t).exp() + ln_gamma_tail(alpha, big_r * s / 2.0, t)
    };
    let rough_target = (1e-12f64).ln();
    let hi0 = cutoff(|t| ln_tail(t, true), rough_target)?;
    let lo0 = cutoff(|t| ln_tail(t, false), rough_target)?;
    let rough = trapezoid(prec, &f, -lo0, hi0, 1e-10, 0.0)?;
    let magnitude = rough.value.abs().to_f64();
    let ln_target = (params.precision * 1e-2 * magnitude).ln();
    let hi = cutoff(|t| ln_tail(t, true), ln_target)?;
    let lo = cutoff(|t| ln_tail(t, false), ln_target)?;
    let tail = ln_tail(hi, true).exp() + ln_tail(lo, false).exp();
    let r = trapezoid(prec, &f, -lo, hi, params.precision * 0.1, tail)?;
    let shift = (-(a * prec.float(point.beta))).exp();
    let pre = prefactor(prec, params, point).scale(&shift);
    let value = r.value.mul(&pre);
    let err = r.err_estimate * pre.abs().to_f64();
    Ok(KernelEvaluation {
        value: ComplexValue { value, err_estimate: err },
        mode: EvalMode::Integral,
        theta: contour.theta,
        tilt: sigma as i8,
        tilt_retried: retried,
        cutoff: (-lo, hi),
        points: r.points,
    })
}

fn closed_mode(params: &KernelParams, point: &QuadrantPoint, opts: &KernelOptions) -> Result<KernelEvaluation> {
    let prec = opts.prec;
    let a = params.exponent_within(prec, if opts.continuation { 3.0 } else { 1.0 })?;
    let big_r = prec.float(params.r) * prec.float(point.rho);
    let beta = prec.float(point.beta);
    let half_pi = prec.pi() / 2u32;
    let lam = (prec.float(params.mu) * prec.float(point.lambda_val)).exp();
    let target = params.precision;
    let half = prec.ratio(1, 2);
    // 1/(πi) = -i/π
    let inv_pi_i = Cx::new(prec.int(0), -(prec.int(1) / prec.pi()));
    let (factor, kind, order, phase_re, phase_im) = match opts.table {
        ClosedTable::Derived => {
            let re = -(a.clone() * &beta);
            let im = a.clone() * &half_pi;
            match point.quadrant {
                1 => (Cx::real(half.clone()), BesselKind::H1, a.clone(), re, im),
                2 => (inv_pi_i, BesselKind::K, a.clone(), re, im),
                3 => (Cx::real(-half.clone()), BesselKind::H2, a.clone(), re, -im),
                _ => (inv_pi_i, BesselKind::K, a.clone(), re, -im),
            }
        }
        ClosedTable::Printed => {
            let w = -a.clone();
            let re = w.clone() * &beta;
            let im = w.clone() * &half_pi;
            match point.quadrant {
                1 => (Cx::real(half.clone()), BesselKind::H1, w, re, im),
                2 => (Cx::real(half.clone()), BesselKind::H2, w, re, -im),
                3 => (inv_pi_i, BesselKind::K, w, re, im),
                _ => (inv_pi_i, BesselKind::K, w, re, -im),
            }
        }
    };
    let b = bessel_eval(prec, kind, &order, &big_r, target * 0.1)?;
    let pre = cexp(phase_re, phase_im).mul(&factor).scale(&lam);
    let value = b.value.mul(&pre);
    let err = b.err_estimate * pre.abs().to_f64();
    Ok(KernelEvaluation {
        value: ComplexValue { value, err_estimate: err },
        mode: EvalMode::Closed,
        theta: 0.0,
        tilt: 0,
        tilt_retried: false,
        cutoff: (0.0, 0.0),
        points: 0,
    })
}

pub fn kernel_eval_detailed(
    params: &KernelParams,
    point: &QuadrantPoint,
    mode: EvalMode,
    opts: &KernelOptions,
) -> Result<KernelEvaluation> {
    if point.z_plus * point.z_minus == 0.0 {
        return Err(Error::LightCone);
    }
    match mode {
        EvalMode::Integral => integral_mode(params, point, opts),
        EvalMode::Closed => closed_mode(params, point, opts),
    }
}

pub fn kernel_eval(params: &KernelParams, point: &QuadrantPoint, mode: EvalMode) -> Result<ComplexValue> {
    kernel_eval_detailed(params, point, mode, &KernelOptions::default()).map(|e| e.value)
}
