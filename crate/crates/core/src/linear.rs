//! Finite linear combinations over the exact scalar field.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalars::{FieldContext, FieldScalar};

/// Map from basis keys to nonzero coefficients.
#[derive(Clone)]
pub struct LinComb<K: Ord> {
    ctx: Arc<FieldContext>,
    terms: BTreeMap<K, FieldScalar>,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        LinComb { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn term(ctx: &Arc<FieldContext>, key: K, coeff: FieldScalar) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(key, coeff);
        out
    }

    pub fn basis(ctx: &Arc<FieldContext>, key: K) -> Self {
        Self::term(ctx, key, FieldScalar::one(ctx))
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &FieldScalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> FieldScalar {
        self.terms.get(key).cloned().unwrap_or_else(|| FieldScalar::zero(&self.ctx))
    }

    pub fn add_term(&mut self, key: K, coeff: FieldScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(prev) => {
                let sum = &prev + &coeff;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &FieldScalar) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn scaled(&self, factor: &FieldScalar) -> Self {
        let mut out = Self::zero(&self.ctx);
        out.add_scaled(self, factor);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&FieldScalar) -> FieldScalar) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Linear extension of a map on basis keys.
    pub fn map_linear<L: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero(&self.ctx);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a scalar-valued map on basis keys.
    pub fn eval_linear(&self, f: impl Fn(&K) -> FieldScalar) -> FieldScalar {
        let mut out = FieldScalar::zero(&self.ctx);
        for (k, c) in &self.terms {
            let v = f(k);
            if !v.is_zero() {
                out = &out + &(c * &v);
            }
        }
        out
    }
}

impl<K: Ord> PartialEq for LinComb<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<K: Ord> Eq for LinComb<K> {}

impl<K: Ord + Clone> std::ops::Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &FieldScalar::one(&self.ctx));
        out
    }
}

impl<K: Ord + Clone> std::ops::Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-FieldScalar::one(&self.ctx));
        out
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c} {k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Basis keys of tensor powers: one monomial per leg.
pub type TensorKey<M> = Vec<M>;
