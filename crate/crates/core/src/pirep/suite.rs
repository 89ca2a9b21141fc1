//! Relation, adjoint, signature and irreducibility checks for `pi_r`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::adjoint::XtOperator;
use super::linalg::{char_poly, multiplicity, nullity, real_root_signs, SparseRow};
use super::{BasisVector, OperatorMatrix, PiRep, Window};
use crate::error::Result;
use crate::hopf::{HopfStructure, MonomialAlgebra};
use crate::report::NumericReport;
use crate::scalars::{FieldContext, FieldScalar};
use crate::ufalg::{UAlgebra, UGen, UMonomial};

/// Inertia of the form `(a1, a2) = Phi(a1 a2^*)` on `P(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureResult {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    /// `det(x I - G)`, constant term first.
    pub char_poly: Vec<String>,
    pub mult_plus_one: usize,
    pub mult_minus_one: usize,
}

/// `G[j][k] = Phi(t^(j + k)) = 1` iff `j + k = 0 mod p`.
pub fn gram_matrix(p: u32) -> Vec<Vec<BigRational>> {
    (0..p)
        .map(|j| (0..p).map(|k| if (j + k) % p == 0 { BigRational::one() } else { BigRational::zero() }).collect())
        .collect()
}

pub fn gram_signature(ctx: &FieldContext) -> SignatureResult {
    let poly = char_poly(&gram_matrix(ctx.p()));
    let (n_plus, n_minus, n_zero) = real_root_signs(&poly);
    SignatureResult {
        n_plus,
        n_minus,
        n_zero,
        char_poly: poly.iter().map(|c| c.to_string()).collect(),
        mult_plus_one: multiplicity(&poly, &BigRational::one()),
        mult_minus_one: multiplicity(&poly, &-BigRational::one()),
    }
}

/// Dimension of `{X : X A = A X for all A}` on the common window.
pub fn commutant_dimension(ctx: &Arc<FieldContext>, mats: &[OperatorMatrix]) -> usize {
    let Some(first) = mats.first() else { return 0 };
    let n = first.dim();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for a in mats {
        for r in 0..n {
            for c in 0..n {
                let mut row = SparseRow::new();
                let mut add = |key: usize, v: FieldScalar| {
                    let cur = row.remove(&key).unwrap_or_else(|| FieldScalar::zero(ctx));
                    let next = &cur + &v;
                    if !next.is_zero() {
                        row.insert(key, next);
                    }
                };
                for k in 0..n {
                    if !a.entries[k][c].is_zero() {
                        add(var(r, k), a.entries[k][c].clone());
                    }
                    if !a.entries[r][k].is_zero() {
                        add(var(k, c), -a.entries[r][k].clone());
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    nullity(ctx, n * n, rows)
}

fn matrix_check(report: &mut NumericReport, name: &str, lhs: &OperatorMatrix, rhs: &OperatorMatrix, min_columns: usize) -> usize {
    let (checked, bad) = lhs.agrees_with(rhs);
    let ok = bad.is_none() && checked >= min_columns;
    report.exact(name, ok, || match bad {
        Some(c) => (lhs.column_text(c), rhs.column_text(c)),
        None => (format!("{checked} columns compared"), format!("at least {min_columns} required")),
    });
    checked
}

/// Relations, homomorphism, adjoints, signature and irreducibility of the
/// representation matching `u` on the given window.
pub fn pi_axiom_suite(u: &UAlgebra, window: &Window) -> Result<NumericReport> {
    let ctx = u.ctx().clone();
    let p = ctx.p();
    let rep = PiRep::for_algebra(u);
    let mut report = NumericReport::new("pi_axiom_suite")
        .with_config("p", p)
        .with_config("r", ctx.r())
        .with_config("window_size", window.len());
    report.convention("h_sign", u.h_sign());
    report.convention("pi(H)", if u.h_sign() == 1 { "-i d/dx" } else { "+i d/dx" });
    report.convention("(-r)^(1/p)", "-chat");
    let m = |g: UGen| rep.partial_matrix(&u.gen(g), window);
    let ident = OperatorMatrix::identity(&ctx, window);
    let h = FieldScalar::from_int(&ctx, u.h_sign() as i64);
    let i = FieldScalar::i(&ctx);
    let (pp, pm, k, kinv, tp, tm, hh) = (
        m(UGen::PPlus),
        m(UGen::PMinus),
        m(UGen::Kappa),
        m(UGen::KappaInv),
        m(UGen::TransPlus),
        m(UGen::TransMinus),
        m(UGen::H),
    );
    let scaled = |x: &OperatorMatrix, c: FieldScalar| {
        let zero = OperatorMatrix { entries: vec![vec![FieldScalar::zero(&ctx); x.dim()]; x.dim()], ..x.clone() };
        zero.add_scaled(x, &c)
    };
    let min = 1;
    matrix_check(&mut report, "pi_kappa_inverse", &k.compose(&kinv), &ident, window.len());
    matrix_check(&mut report, "pi_kappa_order", &k.pow(&ctx, p), &ident, window.len());
    for (name, x, e) in [("p+", &pp, 1i64), ("p-", &pm, -1)] {
        let lhs = k.compose(x).compose(&kinv);
        matrix_check(&mut report, &format!("pi_kappa_conjugation[{name}]"), &lhs, &scaled(x, FieldScalar::q_pow(&ctx, e)), min);
        let coeff = (&(&h * &i) * &FieldScalar::from_ratio(&ctx, e, p as i64)).clone();
        matrix_check(&mut report, &format!("pi_h_commutator[{name}]"), &x.commutator(&hh), &scaled(x, coeff), min);
    }
    for (name, x, e) in [("P+", &tp, 1i64), ("P-", &tm, -1)] {
        let coeff = &(&h * &i) * &FieldScalar::from_int(&ctx, e);
        matrix_check(&mut report, &format!("pi_h_commutator[{name}]"), &x.commutator(&hh), &scaled(x, coeff), min);
    }
    let zero = scaled(&ident, FieldScalar::zero(&ctx));
    for (name, x, y) in [
        ("p+,p-", &pp, &pm),
        ("k,H", &k, &hh),
        ("P+,P-", &tp, &tm),
        ("p+,P+", &pp, &tp),
        ("p+,P-", &pp, &tm),
        ("p-,P+", &pm, &tp),
        ("p-,P-", &pm, &tm),
    ] {
        matrix_check(&mut report, &format!("pi_commute[{name}]"), &x.commutator(y), &zero, min);
    }
    let mut collapse_columns = Vec::new();
    for (name, x, big) in [("p+", &pp, &tp), ("p-", &pm, &tm)] {
        let cols = matrix_check(&mut report, &format!("pi_root_collapse[{name}]"), &x.pow(&ctx, p), big, 3 * p as usize);
        collapse_columns.push(format!("{name}:{cols}"));
    }
    report.note(format!("root collapse compared on columns {}", collapse_columns.join(", ")));
    let cas = rep.partial_matrix(&u.casimir(), window);
    let chat2 = FieldScalar::chat(&ctx).pow(2);
    matrix_check(&mut report, "pi_casimir_scalar", &cas, &scaled(&ident, chat2), window.len());
    for g in UGen::ALL {
        matrix_check(&mut report, &format!("pi_casimir_commutes[{}]", g.token()), &cas.commutator(&m(g)), &zero, min);
    }
    homomorphism_checks(u, &rep, window, &mut report);
    let opposite = PiRep::new(&ctx, -u.h_sign());
    let (holds, detail) = homomorphism_holds(u, &opposite, window);
    report.record("pi_opposite_orientation_is_representation", holds, detail, String::new());
    adjoint_checks(u, &rep, window, &mut report);
    let sig = gram_signature(&ctx);
    let expected = ((p as usize + 1) / 2, (p as usize - 1) / 2, 0);
    report.exact("gram_signature", (sig.n_plus, sig.n_minus, sig.n_zero) == expected, || {
        (format!("{:?}", (sig.n_plus, sig.n_minus, sig.n_zero)), format!("{expected:?}"))
    });
    report.exact("gram_char_poly", sig.mult_plus_one == expected.0 && sig.mult_minus_one == expected.1, || {
        (sig.char_poly.join(" "), format!("(x-1)^{} (x+1)^{}", expected.0, expected.1))
    });
    let mu0 = window.vectors().first().map(|v| v.mu.clone()).unwrap_or_else(BigRational::zero);
    let chain = Window::chain(&mu0, 0, 3 * p as usize, p);
    let gens: Vec<OperatorMatrix> = UGen::ALL.iter().map(|g| rep.compressed_matrix(&u.gen(*g), &chain)).collect();
    let dim = commutant_dimension(&ctx, &gens);
    report.exact("pi_commutant_on_chain", dim == 1, || (format!("dimension {dim}"), "1".into()));
    let grid = Window::grid(&mu0, &(&mu0 + BigRational::new(BigInt::from(2), BigInt::from(p))), &BigRational::new(BigInt::one(), BigInt::from(p)), p)?;
    let gens: Vec<OperatorMatrix> = UGen::ALL.iter().map(|g| rep.compressed_matrix(&u.gen(*g), &grid)).collect();
    let dim = commutant_dimension(&ctx, &gens);
    report.record("pi_commutant_on_grid_counts_orbits", dim == p as usize, format!("dimension {dim}"), format!("{p}"));
    Ok(report)
}

fn homomorphism_monomials(p: u32) -> Vec<UMonomial> {
    let mut out = Vec::new();
    for n in 0..2 {
        for m in 0..2 {
            for k in [0, 1, p - 1] {
                for a in 0..2 {
                    for b in 0..2 {
                        for l in 0..3 {
                            out.push(UMonomial::new(n, m, k, a, b, l));
                        }
                    }
                }
            }
        }
    }
    out.push(UMonomial::new(p - 1, 0, 0, 0, 0, 0));
    out.push(UMonomial::new(0, p - 1, 0, 0, 0, 0));
    out
}

fn homomorphism_vectors(window: &Window) -> Vec<BasisVector> {
    let vs = window.vectors();
    let step = (vs.len() / 4).max(1);
    vs.iter().step_by(step).cloned().collect()
}

fn homomorphism_holds(u: &UAlgebra, rep: &PiRep, window: &Window) -> (bool, String) {
    let mons = homomorphism_monomials(u.p());
    let vectors = homomorphism_vectors(window);
    for x in &mons {
        for y in &mons {
            let xy = u.mul_mon(x, y);
            for v in &vectors {
                let lhs = rep.apply_vector(&u.mon(*x), &rep.apply(&u.mon(*y), v));
                let rhs = rep.apply(&xy, v);
                if lhs != rhs {
                    return (false, format!("pi({x}) pi({y}) != pi({x} * {y}) on {v}"));
                }
            }
        }
    }
    (true, format!("{} pairs on {} vectors", mons.len() * mons.len(), vectors.len()))
}

fn homomorphism_checks(u: &UAlgebra, rep: &PiRep, window: &Window, report: &mut NumericReport) {
    let (holds, detail) = homomorphism_holds(u, rep, window);
    report.exact("pi_homomorphism", holds, || (detail, "pi(x) pi(y) = pi(xy)".into()));
}

fn adjoint_checks(u: &UAlgebra, rep: &PiRep, window: &Window, report: &mut NumericReport) {
    let ctx = rep.ctx();
    for g in UGen::ALL {
        let star = rep.partial_matrix(&u.star(&u.gen(g)), window);
        let adj = XtOperator::generator(rep, g).adjoint(ctx).partial_matrix(ctx, window);
        matrix_check(report, &format!("pi_adjoint[{}]", g.token()), &star, &adj, 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    #[test]
    fn signatures() {
        for (p, plus, minus) in [(3, 2, 1), (5, 3, 2), (7, 4, 3)] {
            let sig = gram_signature(&context(p, 1).unwrap());
            assert_eq!((sig.n_plus, sig.n_minus, sig.n_zero), (plus, minus, 0));
            assert_eq!((sig.mult_plus_one, sig.mult_minus_one), (plus, minus));
        }
    }

    #[test]
    fn suite_passes_at_three() {
        let ctx = context(3, 2).unwrap();
        let u = UAlgebra::new(&ctx, -1);
        let window = Window::parse("-2:2:1/3,jall", 3).unwrap();
        let report = pi_axiom_suite(&u, &window).unwrap();
        let failures: Vec<_> = report.failures().map(|c| c.check.clone()).collect();
        assert!(report.passed, "{failures:?}");
    }

    #[test]
    fn printed_orientation_represents_printed_algebra() {
        let ctx = context(3, 1).unwrap();
        let u = UAlgebra::new(&ctx, 1);
        let window = Window::parse("-1:1:1/3,jall", 3).unwrap();
        let report = pi_axiom_suite(&u, &window).unwrap();
        assert!(report.passed);
    }
}
