//! Exact linear algebra over the scalar field and over the rationals.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalars::{FieldContext, FieldScalar};

/// Sparse row: column index to nonzero coefficient.
pub type SparseRow = BTreeMap<usize, FieldScalar>;

/// Dimension of the solution space of the homogeneous system `rows * x = 0`
/// in `unknowns` variables, by sparse Gaussian elimination.
pub fn nullity(ctx: &Arc<FieldContext>, unknowns: usize, rows: Vec<SparseRow>) -> usize {
    // pivots[c] = reduced row whose leading column is c, normalized to 1 there
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((&lead, lead_val)) = row.iter().next() else { break };
            match pivots.get(&lead) {
                Some(piv) => {
                    let factor = lead_val.clone();
                    for (c, v) in piv {
                        let cur = row.remove(c).unwrap_or_else(|| FieldScalar::zero(ctx));
                        let next = &cur - &(&factor * v);
                        if !next.is_zero() {
                            row.insert(*c, next);
                        }
                    }
                }
                None => {
                    let inv = lead_val.inverse().expect("nonzero pivot is invertible");
                    let normalized: SparseRow = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    unknowns - pivots.len()
}

/// Characteristic polynomial `det(x I - m)` of a rational square matrix,
/// coefficients from constant term upward, by the Faddeev-LeVerrier recursion.
pub fn char_poly(m: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = m.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut acc: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // acc = m * acc + c_{n-k+1} I
        let c_prev = coeffs[n - k + 1].clone();
        let mut next = mat_mul(m, &acc);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        acc = next;
        let trace: BigRational = (0..n).map(|i| mat_mul_entry(m, &acc, i, i)).sum();
        coeffs[n - k] = -trace / BigRational::from_integer(k.into());
    }
    coeffs
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| mat_mul_entry(a, b, i, j)).collect()).collect()
}

fn mat_mul_entry(a: &[Vec<BigRational>], b: &[Vec<BigRational>], i: usize, j: usize) -> BigRational {
    (0..a.len()).map(|k| &a[i][k] * &b[k][j]).sum()
}

/// Sign changes in a coefficient sequence, zeros skipped.
pub fn sign_changes(coeffs: &[BigRational]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Root counts `(positive, negative, zero)` of a polynomial with only real
/// roots. Descartes' rule of signs is exact in that case.
pub fn real_root_signs(coeffs: &[BigRational]) -> (usize, usize, usize) {
    let zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    let rest = &coeffs[zero..];
    let positive = sign_changes(rest);
    let mirrored: Vec<BigRational> =
        rest.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    (positive, sign_changes(&mirrored), zero)
}

/// Exact polynomial division by `x - root`; `None` unless `root` is a root.
pub fn deflate(coeffs: &[BigRational], root: &BigRational) -> Option<Vec<BigRational>> {
    let n = coeffs.len();
    if n < 2 {
        return None;
    }
    let mut quotient = vec![BigRational::zero(); n - 1];
    let mut carry = BigRational::zero();
    for k in (0..n).rev() {
        let value = &coeffs[k] + &carry * root;
        if k == 0 {
            return value.is_zero().then_some(quotient);
        }
        quotient[k - 1] = value.clone();
        carry = value;
    }
    unreachable!()
}

/// Multiplicity of `root` as a root of the polynomial.
pub fn multiplicity(coeffs: &[BigRational], root: &BigRational) -> usize {
    let mut poly = coeffs.to_vec();
    let mut count = 0;
    while let Some(q) = deflate(&poly, root) {
        poly = q;
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn char_poly_of_swap() {
        let m = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(char_poly(&m), vec![rat(-1), rat(0), rat(1)]);
        assert_eq!(real_root_signs(&char_poly(&m)), (1, 1, 0));
    }

    #[test]
    fn char_poly_of_triangular() {
        let m = vec![vec![rat(2), rat(5), rat(1)], vec![rat(0), rat(-3), rat(4)], vec![rat(0), rat(0), rat(0)]];
        // x (x - 2) (x + 3) = x^3 + x^2 - 6x
        assert_eq!(char_poly(&m), vec![rat(0), rat(-6), rat(1), rat(1)]);
        assert_eq!(real_root_signs(&char_poly(&m)), (1, 1, 1));
    }

    #[test]
    fn multiplicities() {
        // (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1
        let poly = vec![rat(1), rat(-1), rat(-1), rat(1)];
        assert_eq!(multiplicity(&poly, &rat(1)), 2);
        assert_eq!(multiplicity(&poly, &rat(-1)), 1);
        assert_eq!(multiplicity(&poly, &rat(2)), 0);
    }

    #[test]
    fn nullity_counts_free_variables() {
        let ctx = context(3, 1).unwrap();
        let one = FieldScalar::one(&ctx);
        let q = FieldScalar::q_pow(&ctx, 1);
        // x0 = q x1, x1 = x2 in four unknowns
        let rows = vec![
            SparseRow::from([(0, one.clone()), (1, -q.clone())]),
            SparseRow::from([(1, one.clone()), (2, -one.clone())]),
            SparseRow::from([(0, q.clone()), (1, -(&q * &q))]),
        ];
        assert_eq!(nullity(&ctx, 4, rows), 2);
    }
}
