//! Bessel functions of real order and positive argument.
//!
//! `K_nu` comes from trapezoidal quadrature of `½∫ e^(-x cosh t + nu t) dt`.
//! `H1`, `H2` come from the ascending series of `J` and `Y` (the integer-order
//! `Y_n` series with digamma terms, otherwise the reflection formula).

use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use super::mp::{ComplexValue, Cx, Prec};
use super::quad::{cutoff, ln_gamma_tail, trapezoid};
use crate::error::{Error, Result};
use crate::report::NumericReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BesselKind {
    K,
    H1,
    H2,
}

impl std::str::FromStr for BesselKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "K" => Ok(BesselKind::K),
            "H1" => Ok(BesselKind::H1),
            "H2" => Ok(BesselKind::H2),
            _ => Err(Error::Parse(format!("unknown Bessel kind `{s}`"))),
        }
    }
}

fn check_target(prec: Prec, target: f64) -> Result<()> {
    let floor = 64.0 * prec.epsilon();
    if !(target > floor) {
        return Err(Error::Precision { requested: target, achieved: floor });
    }
    Ok(())
}

fn check_accuracy(value: &Float, err: f64, target: f64) -> Result<()> {
    let scale = value.to_f64().abs();
    if scale > 0.0 && err > target * scale {
        return Err(Error::Precision { requested: target, achieved: err / scale });
    }
    Ok(())
}

/// `K_nu(x)` by quadrature, with absolute error bound.
pub fn k_quadrature(prec: Prec, nu: &Float, x: &Float, target: f64) -> Result<ComplexValue> {
    let xf = x.to_f64();
    let nf = nu.to_f64();
    // K_nu(x) >= e^{-x cosh 1}
    let ln_abs = (target * 1e-2).ln() - xf * 1f64.cosh();
    let hi = cutoff(|t| ln_gamma_tail(nf - 1.0, xf / 2.0, t), ln_abs)?;
    let lo = cutoff(|t| ln_gamma_tail(-nf - 1.0, xf / 2.0, t), ln_abs)?;
    let tail = 0.5 * (ln_gamma_tail(nf - 1.0, xf / 2.0, hi).exp() + ln_gamma_tail(-nf - 1.0, xf / 2.0, lo).exp());
    let half = prec.ratio(1, 2);
    let f = |t: &Float| {
        let e = nu.clone() * t - x.clone() * t.clone().cosh();
        Cx::real(e.exp() * &half)
    };
    let r = trapezoid(prec, f, -lo, hi, target * 0.1, tail)?;
    check_accuracy(&r.value.re, r.err_estimate, target)?;
    Ok(ComplexValue { value: Cx::real(r.value.re), err_estimate: r.err_estimate })
}

/// Ascending series `Σ s^k (x/2)^(2k+nu) / (k! Γ(k+nu+1))` with `s = -1` for `J`
/// and `s = +1` for `I`.
fn ascending(prec: Prec, nu: &Float, x: &Float, alternating: bool) -> (Float, f64) {
    if nu.is_integer() && *nu < 0 {
        let n = -nu.clone();
        let (v, e) = ascending(prec, &n, x, alternating);
        let odd = n.to_f64() as i64 % 2 != 0;
        return (if odd && alternating { -v } else { v }, e);
    }
    let eps = prec.epsilon();
    let half = x.clone() / 2u32;
    let h2 = half.clone() * &half;
    let mut term = half.clone().pow(nu) / (nu.clone() + 1u32).gamma();
    let mut sum = term.clone();
    let mut max_abs = term.to_f64().abs();
    let kmin = (h2.to_f64() + nu.to_f64().abs()) as u32 + 2;
    let mut k = 1u32;
    loop {
        let denom = (nu.clone() + k) * k;
        term = term * &h2 / denom;
        if alternating {
            term = -term;
        }
        sum += &term;
        max_abs = max_abs.max(term.to_f64().abs());
        if k > kmin && term.to_f64().abs() <= eps * sum.to_f64().abs() * 1e-3 {
            break;
        }
        k += 1;
        if k > 100_000 {
            break;
        }
    }
    let err = 2.0 * term.to_f64().abs() + max_abs * eps * f64::from(k + 2);
    (sum, err)
}

fn factorial(prec: Prec, n: u32) -> Float {
    let mut f = prec.int(1);
    for k in 2..=n {
        f *= k;
    }
    f
}

/// `Y_n(x)` for integer `n >= 0`.
fn y_integer(prec: Prec, n: u32, x: &Float) -> (Float, f64) {
    let eps = prec.epsilon();
    let pi = prec.pi();
    let half = x.clone() / 2u32;
    let h2 = half.clone() * &half;
    let mut s1 = prec.int(0);
    let mut max_abs: f64 = 0.0;
    for k in 0..n {
        let t = factorial(prec, n - k - 1) / factorial(prec, k) * h2.clone().pow(k);
        max_abs = max_abs.max(t.to_f64().abs());
        s1 += t;
    }
    let t1 = -(half.clone().pow(-(n as i32))) / &pi * s1;
    let (jn, ej) = ascending(prec, &prec.int(n as i64), x, true);
    let t2 = half.clone().ln() * 2u32 / &pi * &jn;
    let mut s3 = prec.int(0);
    let mut c = prec.int(1) / factorial(prec, n);
    let mut k = 0u32;
    let kmin = h2.to_f64() as u32 + 2;
    let mut last;
    loop {
        let psi = prec.int(k as i64 + 1).digamma() + prec.int((n + k) as i64 + 1).digamma();
        let t = c.clone() * psi;
        last = t.to_f64().abs();
        max_abs = max_abs.max(last);
        s3 += t;
        if k > kmin && last <= eps * s3.to_f64().abs() * 1e-3 {
            break;
        }
        k += 1;
        c = -(c * &h2) / (prec.int(k as i64) * prec.int((n + k) as i64));
        if k > 100_000 {
            break;
        }
    }
    let t3 = -(half.clone().pow(n)) / &pi * s3;
    let scale = (half.to_f64().powi(-(n as i32)) + half.to_f64().powi(n as i32)) / std::f64::consts::PI;
    let err = ej * half.to_f64().ln().abs() + scale * (2.0 * last + max_abs * eps * f64::from(k + n + 4));
    (t1 + t2 + t3, err)
}

/// `(J_nu, Y_nu)` with absolute error bounds.
fn j_and_y(prec: Prec, nu: &Float, x: &Float) -> ((Float, f64), (Float, f64)) {
    if nu.is_integer() {
        let n = nu.to_f64() as i64;
        let (y, ey) = y_integer(prec, n.unsigned_abs() as u32, x);
        let y = if n < 0 && n % 2 != 0 { -y } else { y };
        return (ascending(prec, nu, x, true), (y, ey));
    }
    let (jp, ep) = ascending(prec, nu, x, true);
    let (jm, em) = ascending(prec, &(-nu.clone()), x, true);
    let (s, c) = (nu.clone() * prec.pi()).sin_cos(prec.int(0));
    let y = (jp.clone() * &c - jm) / &s;
    let ey = (ep + em) / s.to_f64().abs();
    ((jp, ep), (y, ey))
}

/// `K_nu(x) = (π/2)(I_-nu(x) - I_nu(x)) / sin(nu π)` for non-integer `nu`.
pub fn k_series(prec: Prec, nu: &Float, x: &Float) -> Option<(Float, f64)> {
    if nu.is_integer() {
        return None;
    }
    let (ip, ep) = ascending(prec, nu, x, false);
    let (im, em) = ascending(prec, &(-nu.clone()), x, false);
    let s = (nu.clone() * prec.pi()).sin();
    let f = prec.pi() / 2u32 / &s;
    let err = (ep + em) * f.to_f64().abs();
    Some(((im - ip) * f, err))
}

pub fn bessel_eval(prec: Prec, kind: BesselKind, order: &Float, arg: &Float, target: f64) -> Result<ComplexValue> {
    check_target(prec, target)?;
    if !(*arg > 0) {
        return Err(Error::OutOfRange(format!("Bessel argument must be positive, got {}", arg.to_f64())));
    }
    match kind {
        BesselKind::K => k_quadrature(prec, order, arg, target),
        BesselKind::H1 | BesselKind::H2 => {
            let ((j, ej), (y, ey)) = j_and_y(prec, order, arg);
            let y = if kind == BesselKind::H1 { y } else { -y };
            let value = Cx::new(j, y);
            let err = ej + ey;
            let scale = value.abs().to_f64();
            if err > target * scale {
                return Err(Error::Precision { requested: target, achieved: err / scale });
            }
            Ok(ComplexValue { value, err_estimate: err })
        }
    }
}

/// Derivative in the argument: `K' = -K_(nu-1) - (nu/x)K_nu`, `H' = H_(nu-1) - (nu/x)H_nu`.
pub fn bessel_derivative(prec: Prec, kind: BesselKind, order: &Float, arg: &Float, target: f64) -> Result<ComplexValue> {
    let f = bessel_eval(prec, kind, order, arg, target)?;
    let g = bessel_eval(prec, kind, &(order.clone() - 1u32), arg, target)?;
    let ratio = order.clone() / arg;
    let scaled = f.value.scale(&ratio);
    let value = match kind {
        BesselKind::K => g.value.neg().sub(&scaled),
        _ => g.value.sub(&scaled),
    };
    let err = g.err_estimate + f.err_estimate * ratio.to_f64().abs();
    Ok(ComplexValue { value, err_estimate: err })
}

/// Closed-form and classical-identity checks on the in-repo special functions.
pub fn bessel_self_tests(prec: Prec, target: f64) -> Result<NumericReport> {
    let mut rep = NumericReport::new("bessel").with_config("bits", prec.0).with_config("target", target);
    rep.convention("K", "quadrature of ½∫exp(-x cosh t + nu t) dt, step halving, proven tail bound");
    rep.convention("H", "ascending J/Y series; integer order via the digamma Y_n series");
    let half = prec.ratio(1, 2);
    let one = prec.int(1);
    let k = bessel_eval(prec, BesselKind::K, &half, &one, target)?;
    let exact = (prec.pi() / 2u32).sqrt() * (-one.clone()).exp();
    let closed = ComplexValue::exact(Cx::real(exact));
    rep.numeric("K_half_closed_form", k.rel_diff(&closed), 1e-9, fmt(&k), fmt(&closed));

    let nu = prec.float(0.4);
    let x = prec.float(1.5);
    let kp = bessel_eval(prec, BesselKind::K, &(nu.clone() + 1u32), &x, target)?;
    let km = bessel_eval(prec, BesselKind::K, &(nu.clone() - 1u32), &x, target)?;
    let k0 = bessel_eval(prec, BesselKind::K, &nu, &x, target)?;
    let resid = kp.value.sub(&km.value).sub(&k0.value.scale(&(nu.clone() * 2u32 / &x)));
    let rel = (resid.abs() / kp.value.abs()).to_f64();
    rep.numeric("K_recurrence", rel, 1e-9, format!("{rel:e}"), "0".into());

    let nu = prec.float(0.3);
    let x = prec.int(2);
    let h1 = bessel_eval(prec, BesselKind::H1, &nu, &x, target)?;
    let h2 = bessel_eval(prec, BesselKind::H2, &nu, &x, target)?;
    let d1 = bessel_derivative(prec, BesselKind::H1, &nu, &x, target)?;
    let d2 = bessel_derivative(prec, BesselKind::H2, &nu, &x, target)?;
    let w = h1.value.mul(&d2.value).sub(&d1.value.mul(&h2.value));
    let expected = Cx::new(prec.int(0), -(prec.int(4) / (prec.pi() * &x)));
    let wr = (w.sub(&expected).abs() / expected.abs()).to_f64();
    rep.numeric("H_wronskian", wr, 1e-8, format!("{:?}", w.to_c64()), format!("{:?}", expected.to_c64()));

    for &o in &[0.3, 0.0, -0.3, 1.0, -1.5] {
        for &a in &[0.25, 1.0, 4.0] {
            let (o, a) = (prec.float(o), prec.float(a));
            let h1 = bessel_eval(prec, BesselKind::H1, &o, &a, target)?;
            let h2 = bessel_eval(prec, BesselKind::H2, &o, &a, target)?;
            let d = h1.value.sub(&h2.value.conj()).abs().to_f64() / h1.value.abs().to_f64();
            rep.numeric(format!("H1_conj_H2[{},{}]", o.to_f64(), a.to_f64()), d, 1e-12, fmt(&h1), fmt(&h2));
            if let Some((ks, _)) = k_series(prec, &o, &a) {
                let kq = bessel_eval(prec, BesselKind::K, &o, &a, target)?;
                let kc = ComplexValue::exact(Cx::real(ks));
                rep.numeric(format!("K_quadrature_vs_series[{},{}]", o.to_f64(), a.to_f64()), kq.rel_diff(&kc), 1e-12, fmt(&kq), fmt(&kc));
            }
        }
    }
    Ok(rep)
}

fn fmt(v: &ComplexValue) -> String {
    let c = v.to_c64();
    format!("{:.15e}{:+.15e}i", c.re, c.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_half_matches_closed_form() {
        let p = Prec::default();
        let k = bessel_eval(p, BesselKind::K, &p.ratio(1, 2), &p.int(1), 1e-30).unwrap();
        assert!((k.to_c64().re - 0.461068504447).abs() < 1e-11);
        assert!(k.err_estimate < 1e-30);
    }

    #[test]
    fn integer_order_hankel() {
        let p = Prec::default();
        let h = bessel_eval(p, BesselKind::H1, &p.int(0), &p.int(1), 1e-30).unwrap().to_c64();
        // J_0(1), Y_0(1)
        assert!((h.re - 0.7651976865579666).abs() < 1e-14);
        assert!((h.im - 0.08825696421567696).abs() < 1e-14);
        let h = bessel_eval(p, BesselKind::H1, &p.int(-1), &p.int(2), 1e-30).unwrap().to_c64();
        // J_-1 = -J_1, Y_-1 = -Y_1
        assert!((h.re + 0.5767248077568734).abs() < 1e-14);
        assert!((h.im + (-0.10703243154093755)).abs() < 1e-14);
    }

    #[test]
    fn self_tests_pass() {
        let rep = bessel_self_tests(Prec::default(), 1e-30).unwrap();
        let bad: Vec<_> = rep.failures().map(|c| c.check.clone()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn unreachable_precision_is_an_error() {
        let p = Prec(64);
        assert!(matches!(
            bessel_eval(p, BesselKind::K, &p.int(0), &p.int(1), 1e-30),
            Err(Error::Precision { .. })
        ));
    }
}
