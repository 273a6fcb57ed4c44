//! Exponent vectors of normal-ordered monomials.
//!
//! [`Exponent`] is `(α, β) ∈ N^{2n}` for `x^α D^β`; [`HExponent`] adds the
//! power `k` of the homogenizing variable `t`.

use std::fmt;

/// Exponent `(α, β)` of the monomial `x^α D^β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl Exponent {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Self {
        assert_eq!(
            alpha.len(),
            beta.len(),
            "x and D exponent vectors differ in length"
        );
        Exponent { alpha, beta }
    }

    pub fn zero(n: usize) -> Self {
        Exponent {
            alpha: vec![0; n],
            beta: vec![0; n],
        }
    }

    /// `x_i` (0-based `i`).
    pub fn x(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.alpha[i] = 1;
        e
    }

    /// `D_i` (0-based `i`).
    pub fn d(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.beta[i] = 1;
        e
    }

    pub fn nvars(&self) -> usize {
        self.alpha.len()
    }

    /// `|α| + |β|`.
    pub fn total_degree(&self) -> u64 {
        self.alpha.iter().chain(&self.beta).map(|&a| a as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().chain(&self.beta).all(|&a| a == 0)
    }

    /// Components in the fixed variable order `x_1..x_n, D_1..D_n`.
    pub fn components(&self) -> impl Iterator<Item = u32> + '_ {
        self.alpha.iter().chain(&self.beta).copied()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent {
            alpha: zip_with(&self.alpha, &other.alpha, |a, b| a + b),
            beta: zip_with(&self.beta, &other.beta, |a, b| a + b),
        }
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        le(&self.alpha, &other.alpha) && le(&self.beta, &other.beta)
    }

    /// `other - self` when `self ≤ other` componentwise.
    pub fn complement_in(&self, other: &Exponent) -> Option<Exponent> {
        self.divides(other).then(|| Exponent {
            alpha: zip_with(&other.alpha, &self.alpha, |a, b| a - b),
            beta: zip_with(&other.beta, &self.beta, |a, b| a - b),
        })
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent {
            alpha: zip_with(&self.alpha, &other.alpha, u32::max),
            beta: zip_with(&self.beta, &other.beta, u32::max),
        }
    }
}

fn zip_with(a: &[u32], b: &[u32], f: impl Fn(u32, u32) -> u32) -> Vec<u32> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Exponent `(k, α, β)` of `t^k x^α D^β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HExponent {
    pub k: u32,
    pub base: Exponent,
}

impl HExponent {
    pub fn new(k: u32, base: Exponent) -> Self {
        HExponent { k, base }
    }

    pub fn zero(n: usize) -> Self {
        HExponent::new(0, Exponent::zero(n))
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    /// Graded degree `k + |α| + |β|`.
    pub fn degree(&self) -> u64 {
        self.k as u64 + self.base.total_degree()
    }

    /// The projection `N^{2n+1} → N^{2n}` forgetting `k`.
    pub fn project(&self) -> &Exponent {
        &self.base
    }

    pub fn add(&self, other: &HExponent) -> HExponent {
        HExponent::new(self.k + other.k, self.base.add(&other.base))
    }

    pub fn divides(&self, other: &HExponent) -> bool {
        self.k <= other.k && self.base.divides(&other.base)
    }

    pub fn complement_in(&self, other: &HExponent) -> Option<HExponent> {
        if self.k > other.k {
            return None;
        }
        let base = self.base.complement_in(&other.base)?;
        Some(HExponent::new(other.k - self.k, base))
    }

    pub fn lcm(&self, other: &HExponent) -> HExponent {
        HExponent::new(self.k.max(other.k), self.base.lcm(&other.base))
    }
}

impl fmt::Debug for HExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.k)?;
        for c in self.base.components() {
            write!(f, ",{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn componentwise_operations() {
        let a = Exponent::new(vec![1, 0], vec![2, 1]);
        let b = Exponent::new(vec![0, 3], vec![2, 0]);
        assert_eq!(a.lcm(&b), Exponent::new(vec![1, 3], vec![2, 1]));
        assert_eq!(a.add(&b), Exponent::new(vec![1, 3], vec![4, 1]));
        assert!(!a.divides(&b));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(
            a.complement_in(&a.lcm(&b)),
            Some(Exponent::new(vec![0, 3], vec![0, 0]))
        );
        assert_eq!(a.total_degree(), 4);
        assert_eq!(a.to_string(), "(1,0,2,1)");
    }

    #[test]
    fn homog_exponent_divisibility() {
        let a = HExponent::new(2, Exponent::new(vec![0], vec![0]));
        let b = HExponent::new(0, Exponent::new(vec![0], vec![1]));
        assert!(!a.divides(&b) && !b.divides(&a));
        assert_eq!(
            a.lcm(&b),
            HExponent::new(2, Exponent::new(vec![0], vec![1]))
        );
        assert_eq!(a.lcm(&b).degree(), 3);
        assert_eq!(a.to_string(), "(2,0,0)");
    }
}
