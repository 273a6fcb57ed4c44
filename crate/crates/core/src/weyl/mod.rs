//! Sparse normal-ordered operators in the Weyl algebra `A_n(K)` and in its
//! homogenized counterpart `A_n[t]`.
//!
//! Every operator is stored as a map from exponents to nonzero coefficients,
//! with monomials written `x^α D^β` (all `x` to the left). That form is
//! unique, so structural equality is equality in the algebra.

mod action;
mod homog;
pub mod leibniz;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use action::Polynomial;
pub use homog::HomogOperator;

use crate::exponent::Exponent;
use crate::scalar::Field;

/// Element of `A_n(K)`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylOperator<K> {
    terms: BTreeMap<Exponent, K>,
}

impl<K: Field> WeylOperator<K> {
    pub fn zero() -> Self {
        WeylOperator {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exp: Exponent, coeff: K) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        WeylOperator { terms }
    }

    pub fn constant(n: usize, c: K) -> Self {
        Self::monomial(Exponent::zero(n), c)
    }

    pub fn one(n: usize, ctx: &K::Context) -> Self {
        Self::constant(n, K::one(ctx))
    }

    /// The generator `x_i` (0-based).
    pub fn x(n: usize, i: usize, ctx: &K::Context) -> Self {
        Self::monomial(Exponent::x(n, i), K::one(ctx))
    }

    /// The generator `D_i` (0-based).
    pub fn d(n: usize, i: usize, ctx: &K::Context) -> Self {
        Self::monomial(Exponent::d(n, i), K::one(ctx))
    }

    /// Sums the given terms, merging repeated exponents and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, K)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut out, e, c);
        }
        WeylOperator { terms: out }
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, K> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exponent, K> {
        self.terms
    }

    pub fn coeff(&self, e: &Exponent) -> Option<&K> {
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

    /// Number of variable pairs, if the operator is nonzero.
    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(Exponent::nvars)
    }

    /// The Newton diagram `N(P)`: exponents carrying a nonzero coefficient.
    pub fn newton_diagram(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// `ord^T(P) = max |α|+|β|`; `None` stands for `-∞` (zero operator).
    pub fn total_order(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::total_degree).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out, e.clone(), c.clone());
        }
        WeylOperator { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out, e.clone(), c.neg());
        }
        WeylOperator { terms: out }
    }

    pub fn neg(&self) -> Self {
        WeylOperator {
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
        WeylOperator {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// The normal-ordered product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let ab = a.mul(b);
                for r in leibniz::reorder(&e1.beta, &e2.alpha) {
                    let exp = Exponent {
                        alpha: shifted_sum(&e1.alpha, &e2.alpha, &r.nu),
                        beta: shifted_sum(&e1.beta, &e2.beta, &r.nu),
                    };
                    accumulate(&mut out, exp, ab.mul_natural(&r.coeff));
                }
            }
        }
        WeylOperator { terms: out }
    }

    pub fn pow(&self, n: usize, e: u32, ctx: &K::Context) -> Self {
        let mut acc = Self::one(n, ctx);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The commutator `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Exponent) -> bool) -> Self {
        WeylOperator {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

/// `a + b - nu` componentwise; `nu ≤ a` or `nu ≤ b` as required by the caller.
pub(crate) fn shifted_sum(a: &[u32], b: &[u32], nu: &[u32]) -> Vec<u32> {
    a.iter()
        .zip(b)
        .zip(nu)
        .map(|((&x, &y), &v)| x + y - v)
        .collect()
}

pub(crate) fn accumulate<E: Ord, K: Field>(map: &mut BTreeMap<E, K>, e: E, c: K) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<K: Field> fmt::Debug for WeylOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Plain display in descending storage order; the CLI printer sorts by a
/// filtration-aware order instead.
impl<K: Field> fmt::Display for WeylOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms.iter().rev().map(|(e, c)| (None, e, c)).collect();
        crate::format::write_terms(f, &terms)
    }
}
