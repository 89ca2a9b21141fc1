use std::sync::Arc;

use super::{FieldContext, FieldScalar};

/// Symmetric q-number `[n] = (q^n - q^-n) / (q - q^-1)`, evaluated as the
/// division-free sum `q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn q_number(n: i64, ctx: &Arc<FieldContext>) -> FieldScalar {
    let sign = if n < 0 { -1 } else { 1 };
    let n = n.abs();
    let mut acc = FieldScalar::zero(ctx);
    for j in 0..n {
        acc = &acc + &FieldScalar::q_pow(ctx, n - 1 - 2 * j);
    }
    if sign < 0 {
        -acc
    } else {
        acc
    }
}

/// `[n]! = [n][n-1]...[1]`, `[0]! = 1`. Vanishes for `n >= p`.
pub fn q_factorial(n: u32, ctx: &Arc<FieldContext>) -> FieldScalar {
    (1..=n as i64).fold(FieldScalar::one(ctx), |acc, k| &acc * &q_number(k, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::context;

    #[test]
    fn p3_values() {
        let ctx = context(3, 1).unwrap();
        assert_eq!(q_number(2, &ctx), FieldScalar::from_int(&ctx, -1));
        assert!(q_number(3, &ctx).is_zero());
        assert!(q_factorial(0, &ctx).is_one());
        assert!(q_factorial(3, &ctx).is_zero());
    }

    #[test]
    fn matches_quotient_definition() {
        for p in [3, 5, 7] {
            let ctx = context(p, 1).unwrap();
            let q = FieldScalar::q_pow(&ctx, 1);
            let qi = FieldScalar::q_pow(&ctx, -1);
            let den = &q - &qi;
            for n in 0..2 * p {
                let num = &FieldScalar::q_pow(&ctx, n) - &FieldScalar::q_pow(&ctx, -n);
                assert_eq!(num.checked_div(&den).unwrap(), q_number(n, &ctx));
            }
        }
    }

    #[test]
    fn nonzero_below_p() {
        for p in [3, 5, 7, 9] {
            let ctx = context(p, 1).unwrap();
            for n in 1..p as u32 {
                assert!(!q_number(n as i64, &ctx).is_zero());
                assert!(!q_factorial(n, &ctx).is_zero());
                assert_eq!(q_factorial(n, &ctx).conjugate(), q_factorial(n, &ctx));
            }
            assert!(q_number(p, &ctx).is_zero());
        }
    }

    #[test]
    fn clebsch_identity_p5() {
        let ctx = context(5, 1).unwrap();
        let two = q_number(2, &ctx);
        let lhs = &(&two * &two) - &(&q_number(1, &ctx) + &q_number(3, &ctx));
        assert!(lhs.is_zero());
    }
}
