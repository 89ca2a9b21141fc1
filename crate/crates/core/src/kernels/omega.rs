//! The polynomials `ω_s(ξ) = Σ_m (iĉ)^(2m+s) (q^s ξ)^m / (F(m) [m+s]!)`, `m < p-s`.

use std::sync::Arc;

use serde::Serialize;

use crate::afalg::{AAlgebra, AElement, AMonomial};
use crate::error::{Error, Result};
use crate::hopf::MonomialAlgebra;
use crate::scalars::{q_factorial, q_number, FieldContext, FieldScalar};

/// The first factorial in the denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OmegaReading {
    /// `F(m) = [m]!`, the summation index.
    SummationIndex,
    /// `F(m) = [s]!`, the only other index in scope.
    Literal,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OmegaPolynomial {
    pub s: u32,
    pub reading: OmegaReading,
    /// Coefficient of `ξ^m`, including the `q^(s m)` from `(q^s ξ)^m`.
    pub coefficients: Vec<FieldScalar>,
}

fn check(s: u32, ctx: &Arc<FieldContext>) -> Result<()> {
    if s > ctx.p() {
        return Err(Error::OutOfRange(format!("omega index s = {s} exceeds p = {}", ctx.p())));
    }
    Ok(())
}

pub fn omega_poly(s: u32, ctx: &Arc<FieldContext>) -> Result<OmegaPolynomial> {
    omega_poly_with(s, OmegaReading::SummationIndex, ctx)
}

/// Closed coefficient formula.
pub fn omega_poly_with(s: u32, reading: OmegaReading, ctx: &Arc<FieldContext>) -> Result<OmegaPolynomial> {
    check(s, ctx)?;
    let ic = &FieldScalar::i(ctx) * &FieldScalar::chat(ctx);
    let coefficients = (0..ctx.p() - s)
        .map(|m| {
            let first = match reading {
                OmegaReading::SummationIndex => q_factorial(m, ctx),
                OmegaReading::Literal => q_factorial(s, ctx),
            };
            let num = &ic.pow(u64::from(2 * m + s)) * &FieldScalar::q_pow(ctx, i64::from(s * m));
            num.checked_div(&(&first * &q_factorial(m + s, ctx))).expect("[k]! is invertible below p")
        })
        .collect();
    Ok(OmegaPolynomial { s, reading, coefficients })
}

/// Term-ratio recursion of the same series, used as a second route.
pub fn omega_poly_direct(s: u32, reading: OmegaReading, ctx: &Arc<FieldContext>) -> Result<OmegaPolynomial> {
    check(s, ctx)?;
    let p = ctx.p();
    let ic = &FieldScalar::i(ctx) * &FieldScalar::chat(ctx);
    let step = &(&ic * &ic) * &FieldScalar::q_pow(ctx, i64::from(s));
    let mut coefficients = Vec::new();
    if s < p {
        let mut c = ic.pow(u64::from(s));
        for k in 1..=s {
            c = c.checked_div(&q_number(i64::from(k), ctx)).expect("nonzero below p");
            if reading == OmegaReading::Literal {
                c = c.checked_div(&q_number(i64::from(k), ctx)).expect("nonzero below p");
            }
        }
        coefficients.push(c.clone());
        for m in 1..p - s {
            c = &c * &step;
            c = c.checked_div(&q_number(i64::from(m + s), ctx)).expect("nonzero below p");
            if reading == OmegaReading::SummationIndex {
                c = c.checked_div(&q_number(i64::from(m), ctx)).expect("nonzero below p");
            }
            coefficients.push(c.clone());
        }
    }
    Ok(OmegaPolynomial { s, reading, coefficients })
}

impl OmegaPolynomial {
    pub fn degree_bound(&self, p: u32) -> u32 {
        p.saturating_sub(self.s + 1)
    }

    /// Substitutes `ξ = q e+ e-`.
    pub fn to_element(&self, a: &AAlgebra) -> AElement {
        let ctx = a.ctx();
        let xi = a.mon(AMonomial::grassmann(1, 1, 0)).scaled(&FieldScalar::q_pow(ctx, 1));
        let mut out = AElement::zero(ctx);
        let mut power = a.one();
        for c in &self.coefficients {
            out.add_scaled(&power, c);
            power = a.mul(&power, &xi);
        }
        out
    }

    pub fn canonical(&self) -> Vec<String> {
        self.coefficients.iter().map(|c| c.canonical()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    #[test]
    fn single_term_at_top_index() {
        let ctx = context(3, 1).unwrap();
        let w = omega_poly(2, &ctx).unwrap();
        let chat = FieldScalar::chat(&ctx);
        assert_eq!(w.coefficients, vec![&chat * &chat]);
    }

    #[test]
    fn coefficient_count_and_routes() {
        for p in [3, 5, 7] {
            let ctx = context(p, 2).unwrap();
            for s in 0..p as u32 {
                for reading in [OmegaReading::SummationIndex, OmegaReading::Literal] {
                    let a = omega_poly_with(s, reading, &ctx).unwrap();
                    assert_eq!(a.coefficients.len() as u32, p as u32 - s);
                    assert_eq!(a, omega_poly_direct(s, reading, &ctx).unwrap());
                }
            }
        }
    }

    #[test]
    fn readings_coincide_only_where_m_equals_s() {
        let ctx = context(5, 1).unwrap();
        let a = omega_poly_with(1, OmegaReading::SummationIndex, &ctx).unwrap();
        let b = omega_poly_with(1, OmegaReading::Literal, &ctx).unwrap();
        assert_eq!(a.coefficients[0], b.coefficients[0]);
        assert_eq!(a.coefficients[1], b.coefficients[1]);
        assert_ne!(a.coefficients[2], b.coefficients[2]);
    }
}
