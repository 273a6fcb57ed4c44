//! Action of `A_n(K)` on `K[x_1..x_n]`: `x_i` multiplies, `D_i` differentiates.
//! Used as an independent check of the normal-ordering arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::{accumulate, WeylOperator};
use crate::scalar::Field;

/// Commutative polynomial in `x_1..x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<K> {
    terms: BTreeMap<Vec<u32>, K>,
}

impl<K: Field> Polynomial<K> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, K)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut out, e, c);
        }
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, K> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Field> WeylOperator<K> {
    /// `P(f)` under the standard action.
    pub fn apply(&self, f: &Polynomial<K>) -> Polynomial<K> {
        let mut out = BTreeMap::new();
        for (e, c) in self.terms() {
            for (m, a) in &f.terms {
                // D^β x^m = Π m_i!/(m_i-β_i)! x^{m-β}
                if e.beta.iter().zip(m).any(|(b, mi)| b > mi) {
                    continue;
                }
                let mut falling = BigUint::from(1u32);
                for (&b, &mi) in e.beta.iter().zip(m) {
                    for j in 0..b {
                        falling *= BigUint::from(mi - j);
                    }
                }
                let exp: Vec<u32> = m
                    .iter()
                    .zip(&e.beta)
                    .zip(&e.alpha)
                    .map(|((&mi, &b), &al)| mi - b + al)
                    .collect();
                accumulate(&mut out, exp, c.mul(a).mul_natural(&falling));
            }
        }
        Polynomial { terms: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::scalar::{q, Rational};

    fn xm(m: u32) -> Polynomial<Rational> {
        Polynomial::from_terms([(vec![m], q(1))])
    }

    fn op(a: u32, b: u32) -> WeylOperator<Rational> {
        WeylOperator::monomial(Exponent::new(vec![a], vec![b]), q(1))
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(
            op(0, 1).apply(&xm(3)),
            Polynomial::from_terms([(vec![2], q(3))])
        );
    }

    #[test]
    fn euler_operator_eigenvalues() {
        for m in 0..6 {
            assert_eq!(
                op(1, 1).apply(&xm(m)),
                Polynomial::from_terms([(vec![m], q(m as i64))])
            );
        }
    }

    #[test]
    fn d2x2_on_constant() {
        let d2x2 = op(0, 2).mul(&op(2, 0));
        assert_eq!(
            d2x2.apply(&xm(0)),
            Polynomial::from_terms([(vec![0], q(2))])
        );
    }

    #[test]
    fn d2x2_normal_form_agrees_with_action_on_monomials() {
        let d2x2 = op(0, 2).mul(&op(2, 0));
        for m in 0..8 {
            let via_product = d2x2.apply(&xm(m));
            let via_composition = op(0, 2).apply(&op(2, 0).apply(&xm(m)));
            assert_eq!(via_product, via_composition);
        }
    }
}
