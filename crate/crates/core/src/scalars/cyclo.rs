//! Dense elements of the cyclotomic field Q(zeta) stored as an integer
//! coefficient vector over a common positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in zeta of degree below `deg Phi`, `num[k] / den` being the
/// coefficient of `zeta^k`. Always normalized: `den > 0`, content coprime
/// with `den`, zero is `num = 0, den = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Cyclo {
    pub(crate) num: Vec<BigInt>,
    pub(crate) den: BigInt,
}

impl Cyclo {
    pub(crate) fn zero(degree: usize) -> Self {
        Cyclo { num: vec![BigInt::zero(); degree], den: BigInt::one() }
    }

    pub(crate) fn from_rational(degree: usize, value: &BigRational) -> Self {
        let mut c = Cyclo::zero(degree);
        c.num[0] = value.numer().clone();
        c.den = value.denom().clone();
        c.normalize();
        c
    }

    pub(crate) fn unit(degree: usize, k: usize) -> Self {
        let mut c = Cyclo::zero(degree);
        c.num[k] = BigInt::one();
        c
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub(crate) fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    /// Rational value when the element lies in Q.
    pub(crate) fn as_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub(crate) fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for n in &mut self.num {
                *n = -n.clone();
            }
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if !n.is_zero() {
                g = g.gcd(n);
                if g.is_one() {
                    return;
                }
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for n in &mut self.num {
                *n /= &g;
            }
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let mut out = if self.den == other.den {
            Cyclo {
                num: self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect(),
                den: self.den.clone(),
            }
        } else {
            Cyclo {
                num: self
                    .num
                    .iter()
                    .zip(&other.num)
                    .map(|(a, b)| a * &other.den + b * &self.den)
                    .collect(),
                den: &self.den * &other.den,
            }
        };
        out.normalize();
        out
    }

    pub(crate) fn neg(&self) -> Self {
        Cyclo { num: self.num.iter().map(|a| -a).collect(), den: self.den.clone() }
    }

    pub(crate) fn scale(&self, factor: &BigRational) -> Self {
        let mut out = Cyclo {
            num: self.num.iter().map(|a| a * factor.numer()).collect(),
            den: &self.den * factor.denom(),
        };
        out.normalize();
        out
    }

    /// Product reduced modulo the monic integer `modulus` (low degree first).
    pub(crate) fn mul(&self, other: &Self, modulus: &[BigInt]) -> Self {
        let d = self.num.len();
        let mut wide = vec![BigInt::zero(); 2 * d];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        reduce_wide(&mut wide, modulus);
        wide.truncate(d);
        let mut out = Cyclo { num: wide, den: &self.den * &other.den };
        out.normalize();
        out
    }
}

/// In-place reduction of a coefficient vector modulo a monic polynomial.
pub(crate) fn reduce_wide(wide: &mut [BigInt], modulus: &[BigInt]) {
    let d = modulus.len() - 1;
    for top in (d..wide.len()).rev() {
        if wide[top].is_zero() {
            continue;
        }
        let lead = std::mem::take(&mut wide[top]);
        for (k, m) in modulus.iter().enumerate().take(d) {
            if !m.is_zero() {
                wide[top - d + k] -= &lead * m;
            }
        }
    }
}

/// Integer polynomial `x^n - 1` divided by every `Phi_d`, `d | n`, `d < n`.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut cache: Vec<Option<Vec<BigInt>>> = vec![None; n as usize + 1];
    cyclotomic_rec(n, &mut cache)
}

fn cyclotomic_rec(n: u32, cache: &mut Vec<Option<Vec<BigInt>>>) -> Vec<BigInt> {
    if let Some(c) = &cache[n as usize] {
        return c.clone();
    }
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_rec(d, cache);
            poly = exact_divide(&poly, &phi_d);
        }
    }
    cache[n as usize] = Some(poly.clone());
    poly
}

fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(20), ints(&[1, 0, -1, 0, 1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(28).len(), 13);
    }

    #[test]
    fn reduction_wraps_powers() {
        let m = cyclotomic_polynomial(12);
        // zeta^4 = zeta^2 - 1 modulo x^4 - x^2 + 1
        let mut wide = ints(&[0, 0, 0, 0, 1, 0, 0, 0]);
        reduce_wide(&mut wide, &m);
        assert_eq!(&wide[..4], &ints(&[-1, 0, 1, 0])[..]);
    }
}
