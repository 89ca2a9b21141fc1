//! The Grassmann-valued kernels `Q_kl`: exact coefficients in `A`, numeric `K_s`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use super::mp::ComplexValue;
use super::omega::{omega_poly_with, OmegaReading};
use super::{kernel_eval_detailed, EvalMode, KernelOptions, KernelParams, QuadrantPoint};
use crate::afalg::{AElement, AMonomial};
use crate::duality::Duality;
use crate::error::{Error, Result};
use crate::hopf::MonomialAlgebra;

#[derive(Clone, Debug)]
pub struct QTerm {
    /// Exact.
    pub coefficient: AElement,
    pub s: i64,
    /// Numeric, `K_s` in closed mode.
    pub value: ComplexValue,
}

#[derive(Clone, Debug)]
pub struct QKernel {
    pub k: u32,
    pub l: u32,
    pub terms: Vec<QTerm>,
}

/// `(coefficient, s)` pairs of `Q_kl = Σ coefficient · K_s`.
pub fn q_kernel_terms(d: &Duality, k: u32, l: u32, reading: OmegaReading) -> Result<Vec<(AElement, i64)>> {
    let p = d.p();
    if k >= p || l >= p {
        return Err(Error::OutOfRange(format!("kernel indices ({k}, {l}) must lie below p = {p}")));
    }
    let a = d.a();
    let ctx = d.ctx();
    let eta = |plus: bool, e: u32| -> AElement {
        let m = if plus { AMonomial::grassmann(e, 0, 0) } else { AMonomial::grassmann(0, e, 0) };
        a.mon(m).scaled(&d.sqrt_q_pow(if plus { -i64::from(e) } else { i64::from(e) }))
    };
    let delta = a.mon(AMonomial::grassmann(0, 0, k));
    let omega = |s: u32| -> Result<AElement> { Ok(omega_poly_with(s, reading, ctx)?.to_element(a)) };
    let (up, down) = if l >= k { (l - k, p + k - l) } else { (p + l - k, k - l) };
    let s_up = i64::from(l) - i64::from(k) + if l >= k { 0 } else { i64::from(p) };
    let s_down = s_up - i64::from(p);
    let mut out = Vec::new();
    let first = a.product([&eta(true, up), &omega(up)?, &delta]);
    if !first.is_zero() {
        out.push((first, s_up));
    }
    if down < p {
        let second = a.product([&omega(down)?, &eta(false, down), &delta]);
        if !second.is_zero() {
            out.push((second, s_down));
        }
    }
    Ok(out)
}

/// Assembles `Q_kl(nu, mu)` at `point`; `params.s` is ignored.
pub fn q_kernel(
    d: &Duality,
    k: u32,
    l: u32,
    params: &KernelParams,
    point: &QuadrantPoint,
    reading: OmegaReading,
    opts: &KernelOptions,
) -> Result<QKernel> {
    let mut terms = Vec::new();
    for (coefficient, s) in q_kernel_terms(d, k, l, reading)? {
        let kp = KernelParams { s, p: d.p(), ..params.clone() };
        let value = kernel_eval_detailed(&kp, point, EvalMode::Closed, opts)?.value;
        terms.push(QTerm { coefficient, s, value });
    }
    Ok(QKernel { k, l, terms })
}

#[derive(Clone, Debug, Serialize)]
pub struct QCoefficient {
    pub monomial: String,
    pub re: f64,
    pub im: f64,
}

impl QKernel {
    /// Collapses to one complex number per monomial. The exact coefficients are
    /// rounded to double precision here.
    pub fn numeric(&self) -> BTreeMap<AMonomial, Complex64> {
        let mut out: BTreeMap<AMonomial, Complex64> = BTreeMap::new();
        for t in &self.terms {
            let v = t.value.to_c64();
            for (m, c) in t.coefficient.iter() {
                *out.entry(m.clone()).or_default() += c.to_complex() * v;
            }
        }
        out
    }

    pub fn summary(&self) -> Vec<QCoefficient> {
        self.numeric()
            .into_iter()
            .map(|(m, v)| QCoefficient { monomial: m.to_string(), re: v.re, im: v.im })
            .collect()
    }
}
