use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{accumulate, leibniz, shifted_sum};
use crate::exponent::{Exponent, HExponent};
use crate::scalar::Field;

/// Element of `A_n[t]`: `t` is central and `[D_i, x_j] = δ_ij t²`.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogOperator<K> {
    terms: BTreeMap<HExponent, K>,
}

impl<K: Field> HomogOperator<K> {
    pub fn zero() -> Self {
        HomogOperator {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: HExponent, coeff: K) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        HomogOperator { terms }
    }

    /// `t^k`.
    pub fn t_power(n: usize, k: u32, ctx: &K::Context) -> Self {
        Self::monomial(HExponent::new(k, Exponent::zero(n)), K::one(ctx))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (HExponent, K)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut out, e, c);
        }
        HomogOperator { terms: out }
    }

    pub fn terms(&self) -> &BTreeMap<HExponent, K> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<HExponent, K> {
        self.terms
    }

    pub fn coeff(&self, e: &HExponent) -> Option<&K> {
        self.terms.get(e)
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

    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(HExponent::nvars)
    }

    pub fn newton_diagram(&self) -> BTreeSet<HExponent> {
        self.terms.keys().cloned().collect()
    }

    /// True when every term has the same graded degree (the zero operator
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(HExponent::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Largest graded degree among the terms.
    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(HExponent::degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out, e.clone(), c.clone());
        }
        HomogOperator { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out, e.clone(), c.neg());
        }
        HomogOperator { terms: out }
    }

    pub fn neg(&self) -> Self {
        HomogOperator {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HomogOperator {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn mul_t(&self, k: u32) -> Self {
        HomogOperator {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (HExponent::new(e.k + k, e.base.clone()), c.clone()))
                .collect(),
        }
    }

    /// The normal-ordered product `self · other` in `A_n[t]`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let ab = a.mul(b);
                mul_term_into(&mut out, e1, &ab, e2);
            }
        }
        HomogOperator { terms: out }
    }

    /// `c · t^l x^γ D^δ · self`, the left multiple used by division and
    /// semisyzygies.
    pub fn left_mul_monomial(&self, mono: &HExponent, c: &K) -> Self {
        let mut out = BTreeMap::new();
        for (e, a) in &self.terms {
            mul_term_into(&mut out, mono, &c.mul(a), e);
        }
        HomogOperator { terms: out }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

/// Adds `coeff · (t^k1 x^α1 D^β1)(t^k2 x^α2 D^β2)` into `out`.
fn mul_term_into<K: Field>(
    out: &mut BTreeMap<HExponent, K>,
    e1: &HExponent,
    coeff: &K,
    e2: &HExponent,
) {
    for r in leibniz::reorder(&e1.base.beta, &e2.base.alpha) {
        let exp = HExponent::new(
            e1.k + e2.k + 2 * r.weight(),
            Exponent {
                alpha: shifted_sum(&e1.base.alpha, &e2.base.alpha, &r.nu),
                beta: shifted_sum(&e1.base.beta, &e2.base.beta, &r.nu),
            },
        );
        accumulate(out, exp, coeff.mul_natural(&r.coeff));
    }
}

impl<K: Field> fmt::Debug for HomogOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> fmt::Display for HomogOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| (Some(e.k), &e.base, c))
            .collect();
        crate::format::write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};

    fn mono(k: u32, a: u32, b: u32) -> HExponent {
        HExponent::new(k, Exponent::new(vec![a], vec![b]))
    }

    fn h(terms: &[(u32, u32, u32, i64)]) -> HomogOperator<Rational> {
        HomogOperator::from_terms(terms.iter().map(|&(k, a, b, c)| (mono(k, a, b), q(c))))
    }

    #[test]
    fn d_times_x_picks_up_t_squared() {
        let dx = h(&[(0, 0, 1, 1)]).mul(&h(&[(0, 1, 0, 1)]));
        assert_eq!(dx, h(&[(0, 1, 1, 1), (2, 0, 0, 1)]));
        assert!(dx.is_homogeneous());
    }

    #[test]
    fn t_is_central() {
        let p = h(&[(0, 2, 1, 3), (1, 0, 2, -1), (3, 0, 0, 2)]);
        let t = HomogOperator::t_power(1, 1, &());
        assert_eq!(t.mul(&p), p.mul(&t));
        assert_eq!(t.mul(&p), p.mul_t(1));
    }

    #[test]
    fn already_normal_ordered() {
        assert_eq!(
            h(&[(0, 1, 0, 1)]).mul(&h(&[(0, 0, 1, 1)])),
            h(&[(0, 1, 1, 1)])
        );
    }

    #[test]
    fn homogeneity_predicate() {
        assert!(h(&[(2, 0, 0, 1), (0, 1, 1, 1)]).is_homogeneous());
        assert!(!h(&[(1, 0, 0, 1), (0, 2, 0, 1)]).is_homogeneous());
        assert!(HomogOperator::<Rational>::zero().is_homogeneous());
    }

    #[test]
    fn left_monomial_multiple_matches_product() {
        let p = h(&[(0, 1, 1, 2), (2, 0, 0, 5)]);
        let m = mono(1, 0, 2);
        assert_eq!(
            p.left_mul_monomial(&m, &q(3)),
            HomogOperator::monomial(m, q(3)).mul(&p)
        );
    }
}
