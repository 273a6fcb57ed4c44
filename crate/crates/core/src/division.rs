//! Division in `A_n[t]` with respect to ≺^L.
//!
//! Given divisors `P_1..P_r`, the leading exponents split `N^{2n+1}` into
//! regions `Δ_i = (exp(P_i) + N^{2n+1}) \ ∪_{j<i} Δ_j` and the complement
//! `Δ̄`. Every `H` has a unique expression `H = Σ Q_i P_i + R` with
//! `exp(P_i) + N(Q_i) ⊆ Δ_i` and `N(R) ⊆ Δ̄`; [`divide`] computes it.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exponent::HExponent;
use crate::order::{OrderContext, SortKey};
use crate::scalar::Field;
use crate::weyl::HomogOperator;

/// Where an exponent falls in the partition induced by the divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    /// `Δ_i` (0-based divisor index).
    Divisor(usize),
    /// `Δ̄`.
    Complement,
}

/// The partition of `N^{2n+1}` defined by an ordered list of leading exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPartition {
    leading: Vec<HExponent>,
}

impl DeltaPartition {
    pub fn new(leading: Vec<HExponent>) -> Self {
        DeltaPartition { leading }
    }

    pub fn from_divisors<K: Field>(
        ctx: &OrderContext,
        divisors: &[HomogOperator<K>],
    ) -> Result<Self> {
        let leading = divisors
            .iter()
            .enumerate()
            .map(|(i, p)| {
                ctx.exp_homog(p)
                    .map(|l| l.exponent)
                    .map_err(|_| Error::ZeroDivisor(i))
            })
            .collect::<Result<_>>()?;
        Ok(DeltaPartition { leading })
    }

    pub fn leading(&self) -> &[HExponent] {
        &self.leading
    }

    /// First `i` with `exp(P_i) ≤ e` componentwise.
    pub fn region(&self, e: &HExponent) -> Region {
        self.leading
            .iter()
            .position(|l| l.divides(e))
            .map_or(Region::Complement, Region::Divisor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult<K: Field> {
    pub quotients: Vec<HomogOperator<K>>,
    pub remainder: HomogOperator<K>,
}

impl<K: Field> DivisionResult<K> {
    /// `Σ Q_i P_i + R`.
    pub fn reconstruct(&self, divisors: &[HomogOperator<K>]) -> HomogOperator<K> {
        self.quotients
            .iter()
            .zip(divisors)
            .fold(self.remainder.clone(), |acc, (q, p)| acc.add(&q.mul(p)))
    }

    /// Checks the support conditions `exp(P_i) + N(Q_i) ⊆ Δ_i` and `N(R) ⊆ Δ̄`.
    pub fn satisfies_partition(&self, partition: &DeltaPartition) -> bool {
        let quotients_ok = self.quotients.iter().enumerate().all(|(i, q)| {
            let lead = &partition.leading()[i];
            q.terms()
                .keys()
                .all(|m| partition.region(&lead.add(m)) == Region::Divisor(i))
        });
        quotients_ok
            && self
                .remainder
                .terms()
                .keys()
                .all(|e| partition.region(e) == Region::Complement)
    }
}

/// Running operator ordered by ≺^L for leading-term extraction.
struct LeadQueue<'a, K> {
    ctx: &'a OrderContext,
    terms: BTreeMap<SortKey, (HExponent, K)>,
}

impl<'a, K: Field> LeadQueue<'a, K> {
    fn new(ctx: &'a OrderContext, op: &HomogOperator<K>) -> Self {
        let terms = op
            .terms()
            .iter()
            .map(|(e, c)| (ctx.homog_key(e), (e.clone(), c.clone())))
            .collect();
        LeadQueue { ctx, terms }
    }

    fn pop_leading(&mut self) -> Option<(HExponent, K)> {
        self.terms.pop_last().map(|(_, v)| v)
    }

    fn add(&mut self, e: &HExponent, c: K) {
        match self.terms.entry(self.ctx.homog_key(e)) {
            Entry::Vacant(v) => {
                v.insert((e.clone(), c));
            }
            Entry::Occupied(mut o) => {
                let s = o.get().1.add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    o.get_mut().1 = s;
                }
            }
        }
    }
}

struct PreparedDivisor<'a, K> {
    op: &'a HomogOperator<K>,
    lead: HExponent,
    lead_inv: K,
}

fn prepare<'a, K: Field>(
    ctx: &OrderContext,
    divisors: &'a [HomogOperator<K>],
) -> Result<Vec<PreparedDivisor<'a, K>>> {
    divisors
        .iter()
        .enumerate()
        .map(|(i, op)| {
            let lead = ctx.exp_homog(op).map_err(|_| Error::ZeroDivisor(i))?;
            Ok(PreparedDivisor {
                op,
                lead_inv: lead.coeff.inv().expect("leading coefficient is nonzero"),
                lead: lead.exponent,
            })
        })
        .collect()
}

/// What the reduction loop does with a term landing in `Δ̄`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Full,
    RemainderOnly,
    ZeroTest,
}

fn reduce<K: Field>(
    ctx: &OrderContext,
    h: &HomogOperator<K>,
    divisors: &[HomogOperator<K>],
    mode: Mode,
) -> Result<Option<DivisionResult<K>>> {
    let prepared = prepare(ctx, divisors)?;
    let mut quotient_terms: Vec<Vec<(HExponent, K)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut running = LeadQueue::new(ctx, h);

    while let Some((e, c)) = running.pop_leading() {
        let hit = prepared
            .iter()
            .enumerate()
            .find_map(|(i, d)| d.lead.complement_in(&e).map(|m| (i, m)));
        match hit {
            Some((i, offset)) => {
                let d = &prepared[i];
                let factor = c.mul(&d.lead_inv);
                let multiple = d.op.left_mul_monomial(&offset, &factor);
                for (e2, c2) in multiple.terms() {
                    if *e2 == e {
                        debug_assert_eq!(*c2, c, "leading terms must cancel");
                        continue;
                    }
                    running.add(e2, c2.neg());
                }
                if mode == Mode::Full {
                    quotient_terms[i].push((offset, factor));
                }
            }
            None => {
                if mode == Mode::ZeroTest {
                    return Ok(None);
                }
                remainder.push((e, c));
            }
        }
    }

    Ok(Some(DivisionResult {
        quotients: quotient_terms
            .into_iter()
            .map(HomogOperator::from_terms)
            .collect(),
        remainder: HomogOperator::from_terms(remainder),
    }))
}

/// The unique quotients and remainder of `h` by `divisors` (in that order).
pub fn divide<K: Field>(
    ctx: &OrderContext,
    h: &HomogOperator<K>,
    divisors: &[HomogOperator<K>],
) -> Result<DivisionResult<K>> {
    Ok(reduce(ctx, h, divisors, Mode::Full)?.expect("full division always completes"))
}

/// Only the remainder of [`divide`].
pub fn remainder<K: Field>(
    ctx: &OrderContext,
    h: &HomogOperator<K>,
    divisors: &[HomogOperator<K>],
) -> Result<HomogOperator<K>> {
    Ok(reduce(ctx, h, divisors, Mode::RemainderOnly)?
        .expect("remainder computation always completes")
        .remainder)
}

/// Whether the remainder of `h` by `divisors` vanishes. Stops at the first
/// term that would enter the remainder.
pub fn reduces_to_zero<K: Field>(
    ctx: &OrderContext,
    h: &HomogOperator<K>,
    divisors: &[HomogOperator<K>],
) -> Result<bool> {
    Ok(reduce(ctx, h, divisors, Mode::ZeroTest)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::Exponent;
    use crate::order::LinearForm;
    use crate::scalar::{q, Rational};

    fn he(k: u32, a: u32, b: u32) -> HExponent {
        HExponent::new(k, Exponent::new(vec![a], vec![b]))
    }

    fn h(terms: &[(u32, u32, u32, i64)]) -> HomogOperator<Rational> {
        HomogOperator::from_terms(terms.iter().map(|&(k, a, b, c)| (he(k, a, b), q(c))))
    }

    fn order_ctx() -> OrderContext {
        OrderContext::with_default_tiebreak(LinearForm::order(1))
    }

    #[test]
    fn divide_dx_by_d() {
        let ctx = order_ctx();
        let dx = h(&[(0, 1, 1, 1), (2, 0, 0, 1)]);
        let divisors = [h(&[(0, 0, 1, 1)])];
        let res = divide(&ctx, &dx, &divisors).unwrap();
        assert_eq!(res.quotients, vec![h(&[(0, 1, 0, 1)])]);
        assert_eq!(res.remainder, h(&[(2, 0, 0, 1)]));
        assert_eq!(res.reconstruct(&divisors), dx);
    }

    #[test]
    fn divide_by_itself() {
        let ctx = order_ctx();
        let p = h(&[(0, 1, 1, 3), (2, 0, 0, 1)]);
        let res = divide(&ctx, &p, std::slice::from_ref(&p)).unwrap();
        assert_eq!(res.quotients, vec![h(&[(0, 0, 0, 1)])]);
        assert!(res.remainder.is_zero());
    }

    #[test]
    fn t_squared_is_irreducible_by_x_and_d() {
        let ctx = order_ctx();
        let t2 = h(&[(2, 0, 0, 1)]);
        let divisors = [h(&[(0, 1, 0, 1)]), h(&[(0, 0, 1, 1)])];
        let res = divide(&ctx, &t2, &divisors).unwrap();
        assert!(res.quotients.iter().all(HomogOperator::is_zero));
        assert_eq!(res.remainder, t2);
        assert!(!reduces_to_zero(&ctx, &t2, &divisors).unwrap());
    }

    #[test]
    fn zero_tests() {
        let ctx = order_ctx();
        let p = h(&[(0, 1, 1, 1), (2, 0, 0, 1)]);
        let xp = h(&[(0, 1, 0, 1)]).mul(&p);
        assert!(reduces_to_zero(&ctx, &xp, std::slice::from_ref(&p)).unwrap());
        let divisors = [h(&[(0, 1, 0, 1)]), h(&[(0, 0, 1, 1)]), h(&[(2, 0, 0, 1)])];
        assert!(reduces_to_zero(&ctx, &h(&[(2, 0, 0, 1)]), &divisors).unwrap());
    }

    #[test]
    fn empty_and_zero_divisors() {
        let ctx = order_ctx();
        let p = h(&[(0, 1, 1, 1)]);
        let res = divide(&ctx, &p, &[]).unwrap();
        assert!(res.quotients.is_empty());
        assert_eq!(res.remainder, p);
        assert_eq!(
            divide(&ctx, &p, &[h(&[(0, 1, 0, 1)]), HomogOperator::zero()]),
            Err(Error::ZeroDivisor(1))
        );
    }

    #[test]
    fn partition_regions_follow_divisor_order() {
        let part = DeltaPartition::new(vec![he(0, 1, 0), he(0, 0, 1)]);
        assert_eq!(part.region(&he(0, 1, 1)), Region::Divisor(0));
        assert_eq!(part.region(&he(0, 0, 2)), Region::Divisor(1));
        assert_eq!(part.region(&he(3, 0, 0)), Region::Complement);
    }
}
