//! Buchberger completion in `A_n[t]` and the standard-basis pipeline for
//! left ideals of `A_n`.
//!
//! The pipeline homogenizes the generators, completes them to a standard
//! basis of the ideal they generate in `A_n[t]` (exponents taken with
//! respect to ≺^L), sets `t = 1`, and reads off symbols and the staircase.

use std::collections::BTreeMap;

use crate::division::{divide, reduces_to_zero, remainder};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, HExponent};
use crate::homogenize::{homogenize, restrict};
use crate::order::OrderContext;
use crate::scalar::Field;
use crate::weyl::{HomogOperator, WeylOperator};

/// `S(H1,H2) = c(H2) t^{l1} x^{γ1} D^{δ1} H1 − c(H1) t^{l2} x^{γ2} D^{δ2} H2`,
/// where the monomial cofactors lift both leading exponents to their lcm.
pub fn semisyzygy<K: Field>(
    ctx: &OrderContext,
    h1: &HomogOperator<K>,
    h2: &HomogOperator<K>,
) -> Result<HomogOperator<K>> {
    let l1 = ctx.exp_homog(h1).map_err(|_| Error::SemisyzygyOfZero)?;
    let l2 = ctx.exp_homog(h2).map_err(|_| Error::SemisyzygyOfZero)?;
    let (m1, m2) = lcm_cofactors(&l1.exponent, &l2.exponent);
    Ok(h1
        .left_mul_monomial(&m1, &l2.coeff)
        .sub(&h2.left_mul_monomial(&m2, &l1.coeff)))
}

fn lcm_cofactors(e1: &HExponent, e2: &HExponent) -> (HExponent, HExponent) {
    let lcm = e1.lcm(e2);
    (
        e1.complement_in(&lcm).expect("lcm dominates"),
        e2.complement_in(&lcm).expect("lcm dominates"),
    )
}

/// Minimal generators of the upper set `∪ (e + N^{2n})`, sorted.
pub fn minimal_staircase<'a>(exponents: impl IntoIterator<Item = &'a Exponent>) -> Vec<Exponent> {
    let mut all: Vec<Exponent> = exponents.into_iter().cloned().collect();
    all.sort();
    all.dedup();
    let mut out: Vec<Exponent> = all
        .iter()
        .filter(|e| !all.iter().any(|o| o != *e && o.divides(e)))
        .cloned()
        .collect();
    out.sort();
    out
}

/// Is `e` in the upper set generated by `staircase`?
pub fn in_staircase(staircase: &[Exponent], e: &Exponent) -> bool {
    staircase.iter().any(|s| s.divides(e))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs_processed: usize,
    pub reductions_to_zero: usize,
    pub max_degree: u64,
}

#[derive(Clone, Debug, Default)]
pub struct BuchbergerOptions {
    /// Pairs whose lcm has a larger graded degree abort the run.
    pub degree_cap: Option<u64>,
    /// Record each basis element as a combination of the generators.
    pub track_cofactors: bool,
}

#[derive(Clone, Debug)]
pub struct Completion<K: Field> {
    pub basis: Vec<HomogOperator<K>>,
    /// `cofactors[j][i]` with `basis[j] = Σ_i cofactors[j][i] · gens[i]`.
    pub cofactors: Option<Vec<Vec<HomogOperator<K>>>>,
    pub stats: Stats,
}

struct Element<K> {
    op: HomogOperator<K>,
    lead: HExponent,
    cofactors: Vec<HomogOperator<K>>,
}

struct Completer<'a, K: Field> {
    ctx: &'a OrderContext,
    opts: &'a BuchbergerOptions,
    ngens: usize,
    one: K,
    basis: Vec<Element<K>>,
    // (lcm degree, insertion sequence) -> pair; FIFO within a degree
    pairs: BTreeMap<(u64, u64), (usize, usize)>,
    seq: u64,
    stats: Stats,
}

impl<'a, K: Field> Completer<'a, K> {
    fn ops(&self) -> Vec<HomogOperator<K>> {
        self.basis.iter().map(|e| e.op.clone()).collect()
    }

    fn insert(&mut self, op: HomogOperator<K>, cofactors: Vec<HomogOperator<K>>) -> Result<()> {
        if !op.is_homogeneous() {
            return Err(Error::InvariantViolation(format!(
                "inhomogeneous basis element {op}"
            )));
        }
        let lead = self.ctx.exp_homog(&op)?;
        let inv = lead.coeff.inv().expect("nonzero leading coefficient");
        let op = op.scale(&inv);
        let cofactors = cofactors.iter().map(|c| c.scale(&inv)).collect();
        let new = self.basis.len();
        for (i, other) in self.basis.iter().enumerate() {
            let degree = other.lead.lcm(&lead.exponent).degree();
            self.pairs.insert((degree, self.seq), (i, new));
            self.seq += 1;
        }
        self.stats.max_degree = self.stats.max_degree.max(lead.exponent.degree());
        self.basis.push(Element {
            op,
            lead: lead.exponent,
            cofactors,
        });
        Ok(())
    }

    fn process_pair(&mut self, degree: u64, i: usize, j: usize) -> Result<()> {
        if let Some(cap) = self.opts.degree_cap {
            if degree > cap {
                return Err(Error::DegreeCapReached { cap, degree });
            }
        }
        self.stats.pairs_processed += 1;
        self.stats.max_degree = self.stats.max_degree.max(degree);
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let (m1, m2) = lcm_cofactors(&a.lead, &b.lead);
        let one = &self.one;
        // leading coefficients are normalized to 1
        let s =
            a.op.left_mul_monomial(&m1, one)
                .sub(&b.op.left_mul_monomial(&m2, one));
        let divisors = self.ops();

        if !self.opts.track_cofactors {
            let r = remainder(self.ctx, &s, &divisors)?;
            if r.is_zero() {
                self.stats.reductions_to_zero += 1;
                return Ok(());
            }
            return self.insert(r, Vec::new());
        }

        let mut cof: Vec<HomogOperator<K>> = (0..self.ngens)
            .map(|g| {
                a.cofactors[g]
                    .left_mul_monomial(&m1, one)
                    .sub(&b.cofactors[g].left_mul_monomial(&m2, one))
            })
            .collect();
        let div = divide(self.ctx, &s, &divisors)?;
        for (q, elem) in div.quotients.iter().zip(&self.basis) {
            if q.is_zero() {
                continue;
            }
            for (c, ec) in cof.iter_mut().zip(&elem.cofactors) {
                *c = c.sub(&q.mul(ec));
            }
        }
        if div.remainder.is_zero() {
            self.stats.reductions_to_zero += 1;
            return Ok(());
        }
        self.insert(div.remainder, cof)
    }

    /// Drops elements with redundant leading exponents, then reduces tails.
    fn interreduce(&mut self) -> Result<()> {
        let mut keep = vec![true; self.basis.len()];
        for i in 0..self.basis.len() {
            for j in 0..self.basis.len() {
                if i != j
                    && keep[j]
                    && self.basis[j].lead.divides(&self.basis[i].lead)
                    && (self.basis[j].lead != self.basis[i].lead || j < i)
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut kept: Vec<Element<K>> = std::mem::take(&mut self.basis)
            .into_iter()
            .zip(keep)
            .filter_map(|(e, k)| k.then_some(e))
            .collect();

        for i in 0..kept.len() {
            let others: Vec<HomogOperator<K>> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, e)| e.op.clone())
                .collect();
            let div = divide(self.ctx, &kept[i].op, &others)?;
            if div.quotients.iter().all(HomogOperator::is_zero) {
                continue;
            }
            if self.opts.track_cofactors {
                let mut cof = kept[i].cofactors.clone();
                let other_idx = (0..kept.len()).filter(|&j| j != i);
                for (q, j) in div.quotients.iter().zip(other_idx) {
                    if q.is_zero() {
                        continue;
                    }
                    for (c, ec) in cof.iter_mut().zip(&kept[j].cofactors) {
                        *c = c.sub(&q.mul(ec));
                    }
                }
                kept[i].cofactors = cof;
            }
            debug_assert_eq!(
                self.ctx.exp_homog(&div.remainder).map(|l| l.exponent).ok(),
                Some(kept[i].lead.clone())
            );
            kept[i].op = div.remainder;
        }
        self.basis = kept;
        Ok(())
    }
}

/// Buchberger completion with the given options.
pub fn complete<K: Field>(
    ctx: &OrderContext,
    gens: &[HomogOperator<K>],
    opts: &BuchbergerOptions,
) -> Result<Completion<K>> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Ok(Completion {
            basis: Vec::new(),
            cofactors: opts.track_cofactors.then(Vec::new),
            stats: Stats::default(),
        });
    };
    let field = first.terms().values().next().expect("nonzero").context();
    let n = first.nvars().expect("nonzero");
    let mut c = Completer {
        ctx,
        opts,
        ngens: gens.len(),
        one: K::one(&field),
        basis: Vec::new(),
        pairs: BTreeMap::new(),
        seq: 0,
        stats: Stats::default(),
    };
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cof = if opts.track_cofactors {
            (0..gens.len())
                .map(|j| {
                    if j == i {
                        HomogOperator::t_power(n, 0, &field)
                    } else {
                        HomogOperator::zero()
                    }
                })
                .collect()
        } else {
            Vec::new()
        };
        c.insert(g.clone(), cof)?;
    }
    while let Some(((degree, _), (i, j))) = c.pairs.pop_first() {
        c.process_pair(degree, i, j)?;
    }
    c.interreduce()?;

    let basis = c.ops();
    if !is_standard_basis(ctx, &basis)? {
        return Err(Error::InvariantViolation(
            "completed basis has a semisyzygy with nonzero remainder".into(),
        ));
    }
    let cofactors = opts
        .track_cofactors
        .then(|| c.basis.iter().map(|e| e.cofactors.clone()).collect());
    Ok(Completion {
        basis,
        cofactors,
        stats: c.stats,
    })
}

/// Buchberger completion with default options.
pub fn buchberger<K: Field>(
    ctx: &OrderContext,
    gens: &[HomogOperator<K>],
) -> Result<Vec<HomogOperator<K>>> {
    Ok(complete(ctx, gens, &BuchbergerOptions::default())?.basis)
}

/// The zero-remainder criterion: every semisyzygy of `basis` reduces to zero.
pub fn is_standard_basis<K: Field>(ctx: &OrderContext, basis: &[HomogOperator<K>]) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = semisyzygy(ctx, &basis[i], &basis[j])?;
            if !reduces_to_zero(ctx, &s, basis)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of [`std_basis_pipeline`].
#[derive(Clone, Debug)]
pub struct StandardBasisReport<K: Field> {
    /// Standard basis of the ideal generated by the homogenized generators.
    pub homog_basis: Vec<HomogOperator<K>>,
    /// `G|_{t=1}` for each element of `homog_basis`: a δ-standard basis of `I`.
    pub delta_basis: Vec<WeylOperator<K>>,
    /// `σ_δ` of each `delta_basis` element: generators of `gr_δ(I)`.
    pub symbols: Vec<WeylOperator<K>>,
    /// Minimal generators of `Exp_δ(I)`.
    pub staircase: Vec<Exponent>,
    /// `membership[j][i]` with `delta_basis[j] = Σ_i membership[j][i] · gens[i]`,
    /// when cofactor tracking was requested.
    pub membership: Option<Vec<Vec<WeylOperator<K>>>>,
    pub stats: Stats,
}

/// δ-standard basis, symbols and staircase of the left ideal generated by `gens`.
pub fn std_basis_pipeline<K: Field>(
    ctx: &OrderContext,
    gens: &[WeylOperator<K>],
    opts: &BuchbergerOptions,
) -> Result<StandardBasisReport<K>> {
    let n = ctx.nvars();
    if let Some(found) = gens
        .iter()
        .filter_map(WeylOperator::nvars)
        .find(|&m| m != n)
    {
        return Err(Error::DimensionMismatch { expected: n, found });
    }
    if gens.iter().all(WeylOperator::is_zero) {
        return Err(Error::ZeroIdeal);
    }
    let homog: Vec<HomogOperator<K>> = gens
        .iter()
        .map(|g| {
            if g.is_zero() {
                Ok(HomogOperator::zero())
            } else {
                homogenize(g)
            }
        })
        .collect::<Result<_>>()?;
    let completion = complete(ctx, &homog, opts)?;

    let delta_basis: Vec<WeylOperator<K>> = completion.basis.iter().map(restrict).collect();
    let symbols = delta_basis
        .iter()
        .map(|p| ctx.symbol(p))
        .collect::<Result<Vec<_>>>()?;
    let exps: Vec<Exponent> = completion
        .basis
        .iter()
        .map(|g| ctx.exp_homog(g).map(|l| l.exponent.base))
        .collect::<Result<_>>()?;
    let staircase = minimal_staircase(&exps);
    let membership = completion.cofactors.map(|rows| {
        rows.iter()
            .map(|row| row.iter().map(restrict).collect())
            .collect()
    });
    Ok(StandardBasisReport {
        homog_basis: completion.basis,
        delta_basis,
        symbols,
        staircase,
        membership,
        stats: completion.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::LinearForm;
    use crate::scalar::{q, Rational};

    fn he(k: u32, a: u32, b: u32) -> HExponent {
        HExponent::new(k, Exponent::new(vec![a], vec![b]))
    }

    fn h(terms: &[(u32, u32, u32, i64)]) -> HomogOperator<Rational> {
        HomogOperator::from_terms(terms.iter().map(|&(k, a, b, c)| (he(k, a, b), q(c))))
    }

    fn e(a: u32, b: u32) -> Exponent {
        Exponent::new(vec![a], vec![b])
    }

    fn order_ctx() -> OrderContext {
        OrderContext::with_default_tiebreak(LinearForm::order(1))
    }

    #[test]
    fn semisyzygy_of_x_and_d() {
        let ctx = order_ctx();
        let s = semisyzygy(&ctx, &h(&[(0, 1, 0, 1)]), &h(&[(0, 0, 1, 1)])).unwrap();
        // D·x − x·D = t²
        assert_eq!(s, h(&[(2, 0, 0, 1)]));
    }

    #[test]
    fn trivial_semisyzygies() {
        let ctx = order_ctx();
        let p = h(&[(0, 1, 1, 2), (2, 0, 0, 1)]);
        assert!(semisyzygy(&ctx, &p, &p).unwrap().is_zero());
        let s = semisyzygy(&ctx, &h(&[(0, 2, 0, 1)]), &h(&[(0, 1, 0, 1)])).unwrap();
        assert!(s.is_zero());
        assert_eq!(
            semisyzygy(&ctx, &p, &HomogOperator::zero()),
            Err(Error::SemisyzygyOfZero)
        );
    }

    #[test]
    fn staircase_minimization() {
        assert_eq!(minimal_staircase(&[e(0, 0), e(2, 1)]), vec![e(0, 0)]);
        let inc = [e(2, 0), e(0, 2), e(1, 1)];
        assert_eq!(minimal_staircase(&inc), vec![e(0, 2), e(1, 1), e(2, 0)]);
        assert!(minimal_staircase(&[]).is_empty());
        assert_eq!(minimal_staircase(&[e(1, 1), e(1, 1)]), vec![e(1, 1)]);
    }

    #[test]
    fn completion_of_x_and_d() {
        let ctx = order_ctx();
        let basis = buchberger(&ctx, &[h(&[(0, 1, 0, 1)]), h(&[(0, 0, 1, 1)])]).unwrap();
        assert!(basis.contains(&h(&[(2, 0, 0, 1)])));
        assert!(is_standard_basis(&ctx, &basis).unwrap());
    }

    #[test]
    fn single_generators_are_already_complete() {
        let ctx = OrderContext::with_default_tiebreak(LinearForm::v_filtration(1));
        let g = h(&[(3, 0, 0, 1), (0, 2, 1, 1)]);
        assert_eq!(buchberger(&ctx, std::slice::from_ref(&g)).unwrap(), vec![g]);
        let empty: Vec<HomogOperator<Rational>> = Vec::new();
        assert!(buchberger(&ctx, &empty).unwrap().is_empty());
    }

    #[test]
    fn degree_cap_is_reported() {
        let ctx = order_ctx();
        let opts = BuchbergerOptions {
            degree_cap: Some(1),
            track_cofactors: false,
        };
        let err = complete(&ctx, &[h(&[(0, 1, 0, 1)]), h(&[(0, 0, 1, 1)])], &opts).unwrap_err();
        assert_eq!(err, Error::DegreeCapReached { cap: 1, degree: 2 });
    }

    #[test]
    fn pipeline_rejects_zero_ideal() {
        let ctx = order_ctx();
        let gens = vec![WeylOperator::<Rational>::zero()];
        assert_eq!(
            std_basis_pipeline(&ctx, &gens, &BuchbergerOptions::default()).unwrap_err(),
            Error::ZeroIdeal
        );
    }
}
