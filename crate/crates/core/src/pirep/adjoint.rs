//! Formal adjoints of the generator images.
//!
//! An operator is a sum of terms `e^(alpha x) P(d/dx) (x) T` with `T` acting on
//! `P(t)`. The x-part uses `(e^(alpha x))^+ = e^(conj(alpha) x)` and
//! `(d/dx)^+ = -d/dx`; the t-part uses the indefinite form `(a1, a2) =
//! Phi(a1 a2^*)` with Gram matrix `G`, so `T^+ = G^-1 conj(T)^T G`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{gram_matrix, BasisVector, OperatorMatrix, PiRep, Window};
use crate::scalars::{FieldContext, FieldScalar};
use crate::ufalg::UGen;

#[derive(Clone, Debug)]
pub struct XtTerm {
    pub alpha: BigRational,
    /// Coefficients of `P` from the constant term upward.
    pub poly: Vec<FieldScalar>,
    /// `t[row][col]`, column `j` the image of `t^j`.
    pub t: Vec<Vec<FieldScalar>>,
}

#[derive(Clone, Debug)]
pub struct XtOperator {
    pub terms: Vec<XtTerm>,
}

fn t_matrix(ctx: &Arc<FieldContext>, f: impl Fn(usize) -> (usize, FieldScalar)) -> Vec<Vec<FieldScalar>> {
    let p = ctx.p() as usize;
    let mut m = vec![vec![FieldScalar::zero(ctx); p]; p];
    for j in 0..p {
        let (row, c) = f(j);
        m[row][j] = c;
    }
    m
}

impl XtOperator {
    /// The generator image of `rep` in split form.
    pub fn generator(rep: &PiRep, g: UGen) -> XtOperator {
        let ctx = rep.ctx();
        let p = ctx.p() as usize;
        let one = FieldScalar::one(ctx);
        let ident = t_matrix(ctx, |j| (j, one.clone()));
        let frac = BigRational::new(BigInt::one(), BigInt::from(p));
        let minus_chat = -FieldScalar::chat(ctx);
        let minus_r = FieldScalar::from_rational(ctx, -ctx.r().clone());
        let term = match g {
            UGen::PPlus => XtTerm { alpha: frac, poly: vec![minus_chat], t: t_matrix(ctx, |j| ((j + 1) % p, one.clone())) },
            UGen::PMinus => {
                XtTerm { alpha: -frac, poly: vec![minus_chat], t: t_matrix(ctx, |j| ((j + p - 1) % p, one.clone())) }
            }
            UGen::TransPlus => XtTerm { alpha: BigRational::one(), poly: vec![minus_r], t: ident },
            UGen::TransMinus => XtTerm { alpha: -BigRational::one(), poly: vec![minus_r], t: ident },
            UGen::H => {
                let c = FieldScalar::i(ctx).scale(&BigRational::from_integer(BigInt::from(-rep.h_sign() as i64)));
                XtTerm { alpha: BigRational::zero(), poly: vec![FieldScalar::zero(ctx), c], t: ident }
            }
            UGen::Kappa => XtTerm {
                alpha: BigRational::zero(),
                poly: vec![one.clone()],
                t: t_matrix(ctx, |j| (j, FieldScalar::q_pow(ctx, j as i64))),
            },
            UGen::KappaInv => XtTerm {
                alpha: BigRational::zero(),
                poly: vec![one.clone()],
                t: t_matrix(ctx, |j| (j, FieldScalar::q_pow(ctx, -(j as i64)))),
            },
        };
        XtOperator { terms: vec![term] }
    }

    /// Formal adjoint. `(e^(a x) P(D))^+ = conj(P)(-D) e^(a x) = e^(a x) conj(P)(-D - a)`
    /// for real `a`.
    pub fn adjoint(&self, ctx: &Arc<FieldContext>) -> XtOperator {
        let gram = gram_matrix(ctx.p());
        let g: Vec<Vec<FieldScalar>> =
            gram.iter().map(|row| row.iter().map(|v| FieldScalar::from_rational(ctx, v.clone())).collect()).collect();
        // G is a symmetric involution, so G^-1 = G
        let terms = self
            .terms
            .iter()
            .map(|term| {
                let conj: Vec<FieldScalar> = term.poly.iter().map(|c| c.conjugate()).collect();
                let shift = FieldScalar::from_rational(ctx, -term.alpha.clone());
                let poly = substitute_linear(ctx, &conj, &-FieldScalar::one(ctx), &shift);
                let p = ctx.p() as usize;
                let conj_t: Vec<Vec<FieldScalar>> =
                    (0..p).map(|r| (0..p).map(|c| term.t[c][r].conjugate()).collect()).collect();
                let t = mat_mul(ctx, &mat_mul(ctx, &g, &conj_t), &g);
                XtTerm { alpha: term.alpha.clone(), poly, t }
            })
            .collect();
        XtOperator { terms }
    }

    /// Matrix on a window, undefined where an image escapes.
    pub fn partial_matrix(&self, ctx: &Arc<FieldContext>, window: &Window) -> OperatorMatrix {
        let n = window.len();
        let p = ctx.p();
        let mut entries = vec![vec![FieldScalar::zero(ctx); n]; n];
        let mut defined = vec![true; n];
        'cols: for (c, v) in window.vectors().iter().enumerate() {
            let mut column: Vec<(usize, FieldScalar)> = Vec::new();
            for term in &self.terms {
                let value = eval_poly(ctx, &term.poly, &v.mu);
                if value.is_zero() {
                    continue;
                }
                for row in 0..p as usize {
                    let tc = &term.t[row][v.j as usize];
                    if tc.is_zero() {
                        continue;
                    }
                    let w = BasisVector { mu: &v.mu + &term.alpha, j: row as u32 };
                    match window.position(&w) {
                        Some(r) => column.push((r, &value * tc)),
                        None => {
                            defined[c] = false;
                            continue 'cols;
                        }
                    }
                }
            }
            for (r, value) in column {
                entries[r][c] = &entries[r][c] + &value;
            }
        }
        OperatorMatrix { window: window.vectors().to_vec(), entries, defined }
    }
}

fn eval_poly(ctx: &Arc<FieldContext>, poly: &[FieldScalar], x: &BigRational) -> FieldScalar {
    let mut acc = FieldScalar::zero(ctx);
    for c in poly.iter().rev() {
        acc = &acc.scale(x) + c;
    }
    acc
}

/// `P(a D + b)` as a polynomial in `D`.
fn substitute_linear(ctx: &Arc<FieldContext>, poly: &[FieldScalar], a: &FieldScalar, b: &FieldScalar) -> Vec<FieldScalar> {
    let mut out = vec![FieldScalar::zero(ctx); poly.len().max(1)];
    // power = (a D + b)^k
    let mut power = vec![FieldScalar::one(ctx)];
    for c in poly {
        for (k, pk) in power.iter().enumerate() {
            out[k] = &out[k] + &(c * pk);
        }
        let mut next = vec![FieldScalar::zero(ctx); power.len() + 1];
        for (k, pk) in power.iter().enumerate() {
            next[k] = &next[k] + &(pk * b);
            next[k + 1] = &next[k + 1] + &(pk * a);
        }
        power = next;
    }
    out
}

fn mat_mul(ctx: &Arc<FieldContext>, a: &[Vec<FieldScalar>], b: &[Vec<FieldScalar>]) -> Vec<Vec<FieldScalar>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = FieldScalar::zero(ctx);
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&a[i][k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    #[test]
    fn derivative_is_skew() {
        let ctx = context(3, 1).unwrap();
        let d = vec![FieldScalar::zero(&ctx), FieldScalar::one(&ctx)];
        let adj = substitute_linear(&ctx, &d, &-FieldScalar::one(&ctx), &FieldScalar::zero(&ctx));
        assert_eq!(adj[1], -FieldScalar::one(&ctx));
    }

    #[test]
    fn kappa_is_self_adjoint_for_the_indefinite_form() {
        let ctx = context(5, 1).unwrap();
        let rep = PiRep::printed(&ctx);
        let k = XtOperator::generator(&rep, UGen::Kappa);
        let adj = k.adjoint(&ctx);
        assert_eq!(adj.terms[0].t, k.terms[0].t);
    }
}
