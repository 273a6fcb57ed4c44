//! Admissible filtrations and the monomial orders they induce.
//!
//! A [`LinearForm`] `Λ(α,β) = Σ p_i α_i + Σ q_i β_i` with `p_i + q_i ≥ 0`
//! defines the order function `δ(P) = max Λ(N(P))`. Together with a fixed
//! well monomial order ≺ (the [`TieBreak`]) it yields ≺_δ on `N^{2n}` and
//! the well order ≺^L on `N^{2n+1}` (graded degree first, then ≺_δ).
//!
//! Orders are realized through sort keys: vectors of integers whose
//! lexicographic order coincides with the monomial order. Keys are also
//! what the division engine uses for its leading-term queue.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exponent::{Exponent, HExponent};
use crate::scalar::Field;
use crate::weyl::{HomogOperator, WeylOperator};

/// Integer weights `(p_1..p_n, q_1..q_n)` on `x` and `D` exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    p: Vec<i64>,
    q: Vec<i64>,
}

impl LinearForm {
    pub fn new(p: Vec<i64>, q: Vec<i64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidLinearForm("n must be at least 1".into()));
        }
        if p.len() != q.len() {
            return Err(Error::InvalidLinearForm(format!(
                "p has {} entries but q has {}",
                p.len(),
                q.len()
            )));
        }
        if let Some(i) = (0..p.len()).find(|&i| p[i] as i128 + (q[i] as i128) < 0) {
            return Err(Error::InvalidLinearForm(format!(
                "p_{0} + q_{0} = {1} < 0",
                i + 1,
                p[i] as i128 + q[i] as i128
            )));
        }
        Ok(LinearForm { p, q })
    }

    /// `Λ(α,β) = |β|`: filtration by the order of differential operators.
    pub fn order(n: usize) -> Self {
        LinearForm {
            p: vec![0; n],
            q: vec![1; n],
        }
    }

    /// `Λ(α,β) = |α| + |β|`: the Bernstein filtration.
    pub fn bernstein(n: usize) -> Self {
        LinearForm {
            p: vec![1; n],
            q: vec![1; n],
        }
    }

    /// `Λ(α,β) = β_n − α_n`: the V-filtration along `x_n = 0`.
    pub fn v_filtration(n: usize) -> Self {
        let mut p = vec![0; n];
        let mut q = vec![0; n];
        p[n - 1] = -1;
        q[n - 1] = 1;
        LinearForm { p, q }
    }

    /// The L-filtration for `L(a,b) = ra + sb` (`r, s ≥ 0`):
    /// `Λ = −s α_n + r(β_1 + … + β_{n−1}) + (r+s) β_n`.
    pub fn l_filtration(n: usize, r: i64, s: i64) -> Result<Self> {
        if r < 0 || s < 0 {
            return Err(Error::InvalidLinearForm(format!(
                "L-filtration needs r, s >= 0 (got r = {r}, s = {s})"
            )));
        }
        let mut p = vec![0; n];
        let mut q = vec![r; n];
        p[n - 1] = -s;
        q[n - 1] = r + s;
        Self::new(p, q)
    }

    /// Multi-filtration weights: `−s_i α_i + (r + s_i) β_i` for `i ≤ k`
    /// (`k = s.len()`), `r β_i` beyond.
    pub fn multi_filtration(n: usize, r: i64, s: &[i64]) -> Result<Self> {
        if r < 0 || s.iter().any(|&v| v < 0) || s.len() > n || s.is_empty() {
            return Err(Error::InvalidLinearForm(
                "multi-filtration needs 1 <= k <= n and non-negative r, s_i".into(),
            ));
        }
        let mut p = vec![0; n];
        let mut q = vec![r; n];
        for (i, &si) in s.iter().enumerate() {
            p[i] = -si;
            q[i] = r + si;
        }
        Self::new(p, q)
    }

    pub fn nvars(&self) -> usize {
        self.p.len()
    }

    pub fn p(&self) -> &[i64] {
        &self.p
    }

    pub fn q(&self) -> &[i64] {
        &self.q
    }

    /// `Λ(α,β)`. Exponents are `u32` and weights `i64`, so the `i128`
    /// accumulator cannot overflow for any realistic `n`.
    pub fn value(&self, e: &Exponent) -> i128 {
        let x: i128 = self
            .p
            .iter()
            .zip(&e.alpha)
            .map(|(&w, &a)| w as i128 * a as i128)
            .sum();
        let d: i128 = self
            .q
            .iter()
            .zip(&e.beta)
            .map(|(&w, &b)| w as i128 * b as i128)
            .sum();
        x + d
    }

    /// `δ_Λ(P)`; `None` is `−∞` (zero operator).
    pub fn delta<K: Field>(&self, op: &WeylOperator<K>) -> Option<i128> {
        op.terms().keys().map(|e| self.value(e)).max()
    }

    /// Whether `gr_δ(A_n)` is commutative, i.e. `p_i + q_i > 0` for all `i`.
    pub fn is_graded_commutative(&self) -> bool {
        self.p
            .iter()
            .zip(&self.q)
            .all(|(&p, &q)| p as i128 + q as i128 > 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "deglex" | "grlex" => Ok(MonomialOrder::DegLex),
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(Error::InvalidOrdering(format!(
                "unknown ordering `{other}`"
            ))),
        }
    }
}

/// A well monomial order ≺ on `N^{2n}`.
///
/// Variables are indexed `0..2n` as `x_1..x_n, D_1..D_n`; `ascending` lists
/// them from smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TieBreak {
    order: MonomialOrder,
    ascending: Vec<usize>,
}

impl TieBreak {
    pub fn new(order: MonomialOrder, ascending: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ascending.len()];
        for &v in &ascending {
            if v >= ascending.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrdering(format!(
                    "{ascending:?} is not a permutation of the variables"
                )));
            }
        }
        if ascending.is_empty() || !ascending.len().is_multiple_of(2) {
            return Err(Error::InvalidOrdering(
                "variable list must cover x_1..x_n, D_1..D_n".into(),
            ));
        }
        Ok(TieBreak { order, ascending })
    }

    /// `order` with `x_1 < … < x_n < D_1 < … < D_n`.
    pub fn standard(order: MonomialOrder, n: usize) -> Self {
        TieBreak {
            order,
            ascending: (0..2 * n).collect(),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ascending(&self) -> &[usize] {
        &self.ascending
    }

    pub fn nvars(&self) -> usize {
        self.ascending.len() / 2
    }

    fn component(e: &Exponent, var: usize) -> i128 {
        let n = e.nvars();
        if var < n {
            e.alpha[var] as i128
        } else {
            e.beta[var - n] as i128
        }
    }

    fn push_key(&self, e: &Exponent, key: &mut Vec<i128>) {
        match self.order {
            MonomialOrder::Lex => {
                key.extend(self.ascending.iter().rev().map(|&v| Self::component(e, v)));
            }
            MonomialOrder::DegLex => {
                key.push(e.total_degree() as i128);
                key.extend(self.ascending.iter().rev().map(|&v| Self::component(e, v)));
            }
            MonomialOrder::DegRevLex => {
                key.push(e.total_degree() as i128);
                key.extend(self.ascending.iter().map(|&v| -Self::component(e, v)));
            }
        }
    }

    pub fn key(&self, e: &Exponent) -> SortKey {
        let mut key = Vec::with_capacity(2 * e.nvars() + 1);
        self.push_key(e, &mut key);
        SortKey(key)
    }

    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// Lexicographically ordered key realizing one of the monomial orders.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortKey(Vec<i128>);

/// Leading exponent and coefficient of a nonzero operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData<E, K> {
    pub exponent: E,
    pub coeff: K,
}

/// A filtration plus tie-break: everything needed to compare monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderContext {
    lambda: LinearForm,
    tiebreak: TieBreak,
}

impl OrderContext {
    pub fn new(lambda: LinearForm, tiebreak: TieBreak) -> Result<Self> {
        if lambda.nvars() != tiebreak.nvars() {
            return Err(Error::DimensionMismatch {
                expected: lambda.nvars(),
                found: tiebreak.nvars(),
            });
        }
        Ok(OrderContext { lambda, tiebreak })
    }

    /// `lambda` with the default degrevlex tie-break.
    pub fn with_default_tiebreak(lambda: LinearForm) -> Self {
        let n = lambda.nvars();
        OrderContext {
            lambda,
            tiebreak: TieBreak::standard(MonomialOrder::DegRevLex, n),
        }
    }

    pub fn lambda(&self) -> &LinearForm {
        &self.lambda
    }

    pub fn tiebreak(&self) -> &TieBreak {
        &self.tiebreak
    }

    pub fn nvars(&self) -> usize {
        self.lambda.nvars()
    }

    /// Key for ≺_δ.
    pub fn delta_key(&self, e: &Exponent) -> SortKey {
        let mut key = Vec::with_capacity(2 * e.nvars() + 2);
        key.push(self.lambda.value(e));
        self.tiebreak.push_key(e, &mut key);
        SortKey(key)
    }

    /// Key for ≺^L.
    pub fn homog_key(&self, e: &HExponent) -> SortKey {
        let mut key = Vec::with_capacity(2 * e.nvars() + 3);
        key.push(e.degree() as i128);
        key.push(self.lambda.value(&e.base));
        self.tiebreak.push_key(&e.base, &mut key);
        SortKey(key)
    }

    pub fn compare_delta(&self, a: &Exponent, b: &Exponent) -> Ordering {
        self.lambda
            .value(a)
            .cmp(&self.lambda.value(b))
            .then_with(|| self.tiebreak.compare(a, b))
    }

    pub fn compare_l(&self, a: &HExponent, b: &HExponent) -> Ordering {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| self.compare_delta(&a.base, &b.base))
    }

    /// `exp_δ(P)` and `c_δ(P)`.
    pub fn exp_delta<K: Field>(&self, op: &WeylOperator<K>) -> Result<LeadingData<Exponent, K>> {
        op.terms()
            .iter()
            .max_by(|a, b| self.compare_delta(a.0, b.0))
            .map(|(e, c)| LeadingData {
                exponent: e.clone(),
                coeff: c.clone(),
            })
            .ok_or(Error::NoExponentOfZero)
    }

    /// The ≺-leading term alone, ignoring the filtration.
    pub fn exp_tiebreak<K: Field>(&self, op: &WeylOperator<K>) -> Result<LeadingData<Exponent, K>> {
        op.terms()
            .iter()
            .max_by(|a, b| self.tiebreak.compare(a.0, b.0))
            .map(|(e, c)| LeadingData {
                exponent: e.clone(),
                coeff: c.clone(),
            })
            .ok_or(Error::NoExponentOfZero)
    }

    /// `exp(H)` and `c(H)` with respect to ≺^L.
    pub fn exp_homog<K: Field>(&self, op: &HomogOperator<K>) -> Result<LeadingData<HExponent, K>> {
        op.terms()
            .iter()
            .max_by(|a, b| self.compare_l(a.0, b.0))
            .map(|(e, c)| LeadingData {
                exponent: e.clone(),
                coeff: c.clone(),
            })
            .ok_or(Error::NoExponentOfZero)
    }

    /// The principal symbol `σ_δ(P)`, represented by the terms of `P` of
    /// maximal `Λ`-value.
    pub fn symbol<K: Field>(&self, op: &WeylOperator<K>) -> Result<WeylOperator<K>> {
        let top = self.lambda.delta(op).ok_or(Error::SymbolOfZero)?;
        Ok(op.filter_terms(|e| self.lambda.value(e) == top))
    }

    /// Terms of `op` sorted ≺_δ-descending.
    pub fn sorted_terms<'a, K: Field>(
        &self,
        op: &'a WeylOperator<K>,
    ) -> Vec<(&'a Exponent, &'a K)> {
        let mut terms: Vec<_> = op.terms().iter().collect();
        terms.sort_by(|a, b| self.compare_delta(b.0, a.0));
        terms
    }

    /// Terms of `op` sorted ≺^L-descending.
    pub fn sorted_homog_terms<'a, K: Field>(
        &self,
        op: &'a HomogOperator<K>,
    ) -> Vec<(&'a HExponent, &'a K)> {
        let mut terms: Vec<_> = op.terms().iter().collect();
        terms.sort_by(|a, b| self.compare_l(b.0, a.0));
        terms
    }

    /// Renders `op` with terms ≺_δ-descending.
    pub fn format_weyl<K: Field>(&self, op: &WeylOperator<K>) -> String {
        let terms: Vec<_> = self
            .sorted_terms(op)
            .into_iter()
            .map(|(e, c)| (None, e, c))
            .collect();
        crate::format::terms_to_string(&terms)
    }

    /// Renders `op` with terms ≺^L-descending.
    pub fn format_homog<K: Field>(&self, op: &HomogOperator<K>) -> String {
        let terms: Vec<_> = self
            .sorted_homog_terms(op)
            .into_iter()
            .map(|(e, c)| (Some(e.k), &e.base, c))
            .collect();
        crate::format::terms_to_string(&terms)
    }
}
