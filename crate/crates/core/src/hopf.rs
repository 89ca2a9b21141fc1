//! Monomial-basis algebras with Hopf structure, and the generic machinery
//! (tensor products, leg maps, convolution) shared by both algebras.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::linear::{LinComb, TensorKey};
use crate::report::NumericReport;
use crate::scalars::{FieldContext, FieldScalar};

pub type Tensor<M> = LinComb<TensorKey<M>>;

/// An associative unital algebra given by a multiplication table on basis monomials.
pub trait MonomialAlgebra {
    type Mon: Ord + Clone + Debug + Hash;

    fn ctx(&self) -> &Arc<FieldContext>;
    fn unit_mon(&self) -> Self::Mon;
    fn mul_mon(&self, a: &Self::Mon, b: &Self::Mon) -> LinComb<Self::Mon>;

    /// Human-readable form of a basis monomial.
    fn mon_label(&self, m: &Self::Mon) -> String {
        format!("{m:?}")
    }

    fn display(&self, x: &LinComb<Self::Mon>) -> String {
        display_terms(x.iter().map(|(m, c)| (self.mon_label(m), c)))
    }

    fn display_tensor(&self, t: &Tensor<Self::Mon>) -> String {
        display_terms(t.iter().map(|(k, c)| {
            (k.iter().map(|m| self.mon_label(m)).collect::<Vec<_>>().join(" (x) "), c)
        }))
    }

    fn one(&self) -> LinComb<Self::Mon> {
        LinComb::basis(self.ctx(), self.unit_mon())
    }

    fn mul(&self, x: &LinComb<Self::Mon>, y: &LinComb<Self::Mon>) -> LinComb<Self::Mon> {
        let mut out = LinComb::zero(self.ctx());
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&self.mul_mon(a, b), &(ca * cb));
            }
        }
        out
    }

    fn product<'a, I>(&self, factors: I) -> LinComb<Self::Mon>
    where
        I: IntoIterator<Item = &'a LinComb<Self::Mon>>,
        Self::Mon: 'a,
    {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    fn pow(&self, x: &LinComb<Self::Mon>, n: u32) -> LinComb<Self::Mon> {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Componentwise product in a tensor power (no braiding).
    fn tensor_mul(&self, x: &Tensor<Self::Mon>, y: &Tensor<Self::Mon>) -> Tensor<Self::Mon> {
        let mut out = LinComb::zero(self.ctx());
        for (ka, ca) in x.iter() {
            for (kb, cb) in y.iter() {
                debug_assert_eq!(ka.len(), kb.len());
                let mut partial: Vec<(TensorKey<Self::Mon>, FieldScalar)> = vec![(Vec::new(), ca * cb)];
                for (ma, mb) in ka.iter().zip(kb) {
                    let leg = self.mul_mon(ma, mb);
                    let mut next = Vec::with_capacity(partial.len() * leg.len());
                    for (key, c) in &partial {
                        for (m, cm) in leg.iter() {
                            let mut k2 = key.clone();
                            k2.push(m.clone());
                            next.push((k2, c * cm));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        out
    }

    fn tensor_one(&self, arity: usize) -> Tensor<Self::Mon> {
        LinComb::basis(self.ctx(), vec![self.unit_mon(); arity])
    }

    fn tensor_pow(&self, x: &Tensor<Self::Mon>, n: u32, arity: usize) -> Tensor<Self::Mon> {
        let mut result = self.tensor_one(arity);
        let mut base = x.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = self.tensor_mul(&result, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.tensor_mul(&base, &base);
            }
        }
        result
    }

    /// Multiplication map `m: A (x) A -> A`.
    fn multiply_legs(&self, t: &Tensor<Self::Mon>) -> LinComb<Self::Mon> {
        let mut out = LinComb::zero(self.ctx());
        for (k, c) in t.iter() {
            let mut acc = LinComb::basis(self.ctx(), self.unit_mon());
            for m in k {
                acc = self.mul(&acc, &LinComb::basis(self.ctx(), m.clone()));
            }
            out.add_scaled(&acc, c);
        }
        out
    }
}

/// Hopf structure given on basis monomials.
pub trait HopfStructure: MonomialAlgebra {
    fn coproduct_mon(&self, m: &Self::Mon) -> Tensor<Self::Mon>;
    fn counit_mon(&self, m: &Self::Mon) -> FieldScalar;
    /// Antipode of a basis monomial (an anti-morphism extended from generators).
    fn antipode_mon(&self, m: &Self::Mon) -> LinComb<Self::Mon>;
    /// Star of a basis monomial with unit coefficient (antilinear anti-morphism).
    fn star_mon(&self, m: &Self::Mon) -> LinComb<Self::Mon>;

    fn coproduct(&self, x: &LinComb<Self::Mon>) -> Tensor<Self::Mon> {
        x.map_linear(|m| self.coproduct_mon(m))
    }

    fn counit(&self, x: &LinComb<Self::Mon>) -> FieldScalar {
        x.eval_linear(|m| self.counit_mon(m))
    }

    fn antipode(&self, x: &LinComb<Self::Mon>) -> LinComb<Self::Mon> {
        x.map_linear(|m| self.antipode_mon(m))
    }

    fn star(&self, x: &LinComb<Self::Mon>) -> LinComb<Self::Mon> {
        let mut out = LinComb::zero(self.ctx());
        for (m, c) in x.iter() {
            out.add_scaled(&self.star_mon(m), &c.conjugate());
        }
        out
    }

    /// Applies `f` on leg `leg` of every basis tensor (other legs untouched).
    fn on_leg(
        &self,
        t: &Tensor<Self::Mon>,
        leg: usize,
        f: &dyn Fn(&Self::Mon) -> Tensor<Self::Mon>,
    ) -> Tensor<Self::Mon> {
        let mut out = LinComb::zero(self.ctx());
        for (key, c) in t.iter() {
            let image = f(&key[leg]);
            for (sub, cs) in image.iter() {
                let mut k2: Vec<Self::Mon> = key[..leg].to_vec();
                k2.extend(sub.iter().cloned());
                k2.extend(key[leg + 1..].iter().cloned());
                out.add_term(k2, c * cs);
            }
        }
        out
    }

    /// `(Delta (x) id) Delta`.
    fn coproduct_left_twice(&self, x: &LinComb<Self::Mon>) -> Tensor<Self::Mon> {
        self.on_leg(&self.coproduct(x), 0, &|m| self.coproduct_mon(m))
    }

    /// `(id (x) Delta) Delta`.
    fn coproduct_right_twice(&self, x: &LinComb<Self::Mon>) -> Tensor<Self::Mon> {
        self.on_leg(&self.coproduct(x), 1, &|m| self.coproduct_mon(m))
    }

    /// `(eps (x) id) Delta` or `(id (x) eps) Delta` depending on `leg`.
    fn counit_on_leg(&self, x: &LinComb<Self::Mon>, leg: usize) -> LinComb<Self::Mon> {
        let mut out = LinComb::zero(self.ctx());
        for (key, c) in self.coproduct(x).iter() {
            let e = self.counit_mon(&key[leg]);
            if !e.is_zero() {
                out.add_term(key[1 - leg].clone(), c * &e);
            }
        }
        out
    }

    /// `m (S (x) id) Delta` or `m (id (x) S) Delta` depending on `leg`.
    fn antipode_convolution(&self, x: &LinComb<Self::Mon>, leg: usize) -> LinComb<Self::Mon> {
        let mut out = LinComb::zero(self.ctx());
        for (key, c) in self.coproduct(x).iter() {
            let (left, right) = if leg == 0 {
                (self.antipode_mon(&key[0]), LinComb::basis(self.ctx(), key[1].clone()))
            } else {
                (LinComb::basis(self.ctx(), key[0].clone()), self.antipode_mon(&key[1]))
            };
            out.add_scaled(&self.mul(&left, &right), c);
        }
        out
    }
}

pub(crate) fn display_terms<'a>(terms: impl Iterator<Item = (String, &'a FieldScalar)>) -> String {
    let parts: Vec<String> = terms
        .map(|(mon, c)| {
            if mon == "1" {
                c.to_string()
            } else if c.is_one() {
                mon
            } else {
                format!("{c} * {mon}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Exact Hopf axioms on a single element: coassociativity, both counit
/// identities, both antipode identities, involutivity of the star and
/// `S * S * = id`.
pub fn element_checks<A: HopfStructure>(alg: &A, report: &mut NumericReport, label: &str, x: &LinComb<A::Mon>) {
    let l = alg.coproduct_left_twice(x);
    let r = alg.coproduct_right_twice(x);
    report.exact(format!("coassociativity[{label}]"), l == r, || (alg.display_tensor(&l), alg.display_tensor(&r)));
    for (leg, name) in [(0, "left"), (1, "right")] {
        let c = alg.counit_on_leg(x, leg);
        report.exact(format!("counit_{name}[{label}]"), &c == x, || (alg.display(&c), alg.display(x)));
    }
    let eps_one = alg.one().scaled(&alg.counit(x));
    for (leg, name) in [(0, "S(x)id"), (1, "id(x)S")] {
        let c = alg.antipode_convolution(x, leg);
        report.exact(format!("antipode_{name}[{label}]"), c == eps_one, || (alg.display(&c), alg.display(&eps_one)));
    }
    let ss = alg.star(&alg.star(x));
    report.exact(format!("star_involution[{label}]"), &ss == x, || (alg.display(&ss), alg.display(x)));
    let sss = alg.star(&alg.antipode(&alg.star(&alg.antipode(x))));
    report.exact(format!("star_antipode[{label}]"), &sss == x, || (alg.display(&sss), alg.display(x)));
}

/// Morphism properties on a pair: `Delta`, `eps` multiplicative, `S` and `*`
/// anti-multiplicative.
pub fn pair_checks<A: HopfStructure>(
    alg: &A,
    report: &mut NumericReport,
    label: &str,
    x: &LinComb<A::Mon>,
    y: &LinComb<A::Mon>,
) {
    let xy = alg.mul(x, y);
    let d1 = alg.coproduct(&xy);
    let d2 = alg.tensor_mul(&alg.coproduct(x), &alg.coproduct(y));
    report.exact(format!("coproduct_morphism[{label}]"), d1 == d2, || (alg.display_tensor(&d1), alg.display_tensor(&d2)));
    let e1 = alg.counit(&xy);
    let e2 = &alg.counit(x) * &alg.counit(y);
    report.exact(format!("counit_morphism[{label}]"), e1 == e2, || (e1.to_string(), e2.to_string()));
    let s1 = alg.antipode(&xy);
    let s2 = alg.mul(&alg.antipode(y), &alg.antipode(x));
    report.exact(format!("antipode_antimorphism[{label}]"), s1 == s2, || (alg.display(&s1), alg.display(&s2)));
    let t1 = alg.star(&xy);
    let t2 = alg.mul(&alg.star(y), &alg.star(x));
    report.exact(format!("star_antimorphism[{label}]"), t1 == t2, || (alg.display(&t1), alg.display(&t2)));
}

/// Thread-safe memo table for monomial-level maps.
pub(crate) struct Memo<K, V> {
    table: Mutex<HashMap<K, V>>,
}

impl<K: Hash + Eq + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { table: Mutex::new(HashMap::new()) }
    }

    pub(crate) fn get_or(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.table.lock().unwrap().get(key) {
            return v.clone();
        }
        let v = compute();
        self.table.lock().unwrap().insert(key.clone(), v.clone());
        v
    }
}
