//! Multiprecision complex numbers on top of MPFR floats.

use num_complex::Complex64;
use rug::float::Constant;
use rug::Float;
use serde::Serialize;

/// Working precision in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Prec(pub u32);

impl Default for Prec {
    fn default() -> Self {
        Prec(256)
    }
}

impl Prec {
    pub fn float(self, x: f64) -> Float {
        Float::with_val(self.0, x)
    }

    pub fn int(self, x: i64) -> Float {
        Float::with_val(self.0, x)
    }

    pub fn ratio(self, n: i64, d: i64) -> Float {
        Float::with_val(self.0, n) / Float::with_val(self.0, d)
    }

    pub fn pi(self) -> Float {
        Float::with_val(self.0, Constant::Pi)
    }

    /// Relative rounding unit `2^-bits`.
    pub fn epsilon(self) -> f64 {
        2f64.powi(-(self.0.min(1000) as i32))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cx {
    pub re: Float,
    pub im: Float,
}

impl Cx {
    pub fn new(re: Float, im: Float) -> Self {
        Cx { re, im }
    }

    pub fn real(re: Float) -> Self {
        let im = Float::new(re.prec());
        Cx { re, im }
    }

    pub fn zero(prec: Prec) -> Self {
        Cx::real(Float::new(prec.0))
    }

    pub fn one(prec: Prec) -> Self {
        Cx::real(prec.int(1))
    }

    pub fn i(prec: Prec) -> Self {
        Cx::new(Float::new(prec.0), prec.int(1))
    }

    pub fn from_c64(prec: Prec, z: Complex64) -> Self {
        Cx::new(prec.float(z.re), prec.float(z.im))
    }

    /// `e^(i theta)`.
    pub fn expi(theta: &Float) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(theta.prec()));
        Cx::new(c, s)
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx::new(self.re.clone() + &o.re, self.im.clone() + &o.im)
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx::new(self.re.clone() - &o.re, self.im.clone() - &o.im)
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        let re = self.re.clone() * &o.re - self.im.clone() * &o.im;
        let im = self.re.clone() * &o.im + self.im.clone() * &o.re;
        Cx::new(re, im)
    }

    pub fn div(&self, o: &Cx) -> Cx {
        let d = o.norm_sqr();
        let re = (self.re.clone() * &o.re + self.im.clone() * &o.im) / &d;
        let im = (self.im.clone() * &o.re - self.re.clone() * &o.im) / &d;
        Cx::new(re, im)
    }

    pub fn scale(&self, x: &Float) -> Cx {
        Cx::new(self.re.clone() * x, self.im.clone() * x)
    }

    pub fn neg(&self) -> Cx {
        Cx::new(-self.re.clone(), -self.im.clone())
    }

    pub fn conj(&self) -> Cx {
        Cx::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Cx {
        Cx::new(-self.im.clone(), self.re.clone())
    }

    pub fn norm_sqr(&self) -> Float {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    pub fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }

    pub fn exp(&self) -> Cx {
        Cx::expi(&self.im).scale(&self.re.clone().exp())
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// A computed value with an absolute error bound.
#[derive(Clone, Debug)]
pub struct ComplexValue {
    pub value: Cx,
    pub err_estimate: f64,
}

impl ComplexValue {
    pub fn exact(value: Cx) -> Self {
        ComplexValue { value, err_estimate: 0.0 }
    }

    pub fn to_c64(&self) -> Complex64 {
        self.value.to_c64()
    }

    /// `|self - other| / |other|` in working precision.
    pub fn rel_diff(&self, other: &ComplexValue) -> f64 {
        let d = self.value.sub(&other.value).abs();
        let n = other.value.abs();
        if n.is_zero() {
            d.to_f64()
        } else {
            (d / n).to_f64()
        }
    }

    pub fn mul(&self, c: &Cx) -> ComplexValue {
        ComplexValue { value: self.value.mul(c), err_estimate: self.err_estimate * c.abs().to_f64() }
    }
}

fn digits(x: &Float) -> String {
    x.to_string_radix(10, Some(40))
}

impl Serialize for ComplexValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ComplexValue", 3)?;
        st.serialize_field("re", &digits(&self.value.re))?;
        st.serialize_field("im", &digits(&self.value.im))?;
        st.serialize_field("err_estimate", &self.err_estimate)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_identity() {
        let p = Prec(200);
        let z = Cx::expi(&p.pi()).add(&Cx::one(p));
        assert!(z.abs().to_f64() < 1e-55);
    }

    #[test]
    fn division_inverts_multiplication() {
        let p = Prec(128);
        let a = Cx::new(p.float(1.5), p.float(-0.25));
        let b = Cx::new(p.float(-2.0), p.float(3.0));
        let back = a.mul(&b).div(&b);
        assert!(back.sub(&a).abs().to_f64() < 1e-35);
    }
}
