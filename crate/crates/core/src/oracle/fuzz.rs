//! Reproducible randomized checks of the algebraic invariants.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::random;
use crate::division::{divide, DeltaPartition};
use crate::exponent::Exponent;
use crate::homogenize::{homogenize, restrict};
use crate::order::{LinearForm, OrderContext};
use crate::scalar::{Field, Rational};
use crate::weyl::{leibniz, WeylOperator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeParams {
    /// Instances per check; zero runs nothing.
    pub iterations: usize,
    pub max_vars: usize,
    pub max_degree: u32,
    pub max_terms: usize,
}

impl Default for SizeParams {
    fn default() -> Self {
        SizeParams {
            iterations: 50,
            max_vars: 2,
            max_degree: 3,
            max_terms: 3,
        }
    }
}

impl SizeParams {
    pub fn empty() -> Self {
        SizeParams {
            iterations: 0,
            ..Self::default()
        }
    }
}

/// Deliberate arithmetic faults for checking that the harness notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Negates every correction term of the normal-ordering formula.
    FlipCommutatorSign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzFailure {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub runs: BTreeMap<&'static str, usize>,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn is_empty(&self) -> bool {
        self.runs.is_empty() && self.failures.is_empty()
    }

    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    fn record(&mut self, check: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        *self.runs.entry(check).or_default() += 1;
        // only the first counterexample per check is kept verbatim
        if !ok && !self.failures.iter().any(|f| f.check == check) {
            self.failures.push(FuzzFailure {
                check,
                detail: detail(),
            });
        }
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (check, count) in &self.runs {
            let failed = self.failures.iter().any(|x| x.check == *check);
            writeln!(
                f,
                "{check}: {count} runs, {}",
                if failed { "FAILED" } else { "ok" }
            )?;
        }
        for fail in &self.failures {
            writeln!(f, "counterexample [{}]: {}", fail.check, fail.detail)?;
        }
        write!(f, "{} failures", self.failures.len())
    }
}

fn product(
    p: &WeylOperator<Rational>,
    q: &WeylOperator<Rational>,
    mutation: Option<Mutation>,
) -> WeylOperator<Rational> {
    let Some(Mutation::FlipCommutatorSign) = mutation else {
        return p.mul(q);
    };
    let mut terms = Vec::new();
    for (e1, a) in p.terms() {
        for (e2, b) in q.terms() {
            for r in leibniz::reorder(&e1.beta, &e2.alpha) {
                let mut c = a.mul(b).mul_natural(&r.coeff);
                if r.weight() > 0 {
                    c = c.neg();
                }
                let exp = Exponent::new(
                    e1.alpha
                        .iter()
                        .zip(&e2.alpha)
                        .zip(&r.nu)
                        .map(|((x, y), v)| x + y - v)
                        .collect(),
                    e1.beta
                        .iter()
                        .zip(&e2.beta)
                        .zip(&r.nu)
                        .map(|((x, y), v)| x + y - v)
                        .collect(),
                );
                terms.push((exp, c));
            }
        }
    }
    WeylOperator::from_terms(terms)
}

fn forms(n: usize) -> Vec<LinearForm> {
    vec![
        LinearForm::order(n),
        LinearForm::v_filtration(n),
        LinearForm::bernstein(n),
        LinearForm::l_filtration(n, 1, 1).expect("valid weights"),
    ]
}

/// Runs every invariant suite `size.iterations` times.
pub fn algebra_fuzz(seed: u64, size: &SizeParams) -> FuzzReport {
    algebra_fuzz_with(seed, size, None)
}

pub fn algebra_fuzz_with(seed: u64, size: &SizeParams, mutation: Option<Mutation>) -> FuzzReport {
    let mut report = FuzzReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (deg, terms) = (size.max_degree, size.max_terms);
    for _ in 0..size.iterations {
        let n = rng.gen_range(1..=size.max_vars.max(1));
        let p = random::weyl(&mut rng, n, deg, terms);
        let q = random::weyl(&mut rng, n, deg, terms);
        let r = random::weyl(&mut rng, n, deg, terms);

        let lhs = product(&product(&p, &q, mutation), &r, mutation);
        let rhs = product(&p, &product(&q, &r, mutation), mutation);
        report.record("weyl associativity", lhs == rhs, || {
            format!("P = {p}, Q = {q}, R = {r}: (PQ)R = {lhs}, P(QR) = {rhs}")
        });

        let f = random::polynomial(&mut rng, n, deg, terms);
        let composed = p.apply(&q.apply(&f));
        let direct = product(&p, &q, mutation).apply(&f);
        report.record("action homomorphism", composed == direct, || {
            format!("P = {p}, Q = {q}, f = {f:?}")
        });

        let (hp, hq) = (
            homogenize(&p).expect("nonzero"),
            homogenize(&q).expect("nonzero"),
        );
        let pq = product(&p, &q, mutation);
        let ok = !pq.is_zero() && homogenize(&pq).ok() == Some(hp.mul(&hq)) && restrict(&hp) == p;
        report.record("homogenization", ok, || format!("P = {p}, Q = {q}"));

        let hr = homogenize(&r).expect("nonzero");
        let hl = hp.mul(&hq).mul(&hr);
        let hr2 = hp.mul(&hq.mul(&hr));
        report.record("homog associativity", hl == hr2, || {
            format!("h(P) = {hp}, h(Q) = {hq}, h(R) = {hr}")
        });

        let form = forms(n).swap_remove(rng.gen_range(0..4));
        let ctx = OrderContext::with_default_tiebreak(form);
        let (lp, lq) = (
            ctx.exp_delta(&p).expect("nonzero"),
            ctx.exp_delta(&q).expect("nonzero"),
        );
        let ok = ctx.exp_delta(&pq).ok().is_some_and(|l| {
            l.exponent == lp.exponent.add(&lq.exponent) && l.coeff == lp.coeff.mul(&lq.coeff)
        });
        report.record("exponent of product", ok, || {
            format!("Λ = {:?}, P = {p}, Q = {q}", ctx.lambda())
        });

        let h = random::homogeneous(&mut rng, n, deg + 1, terms + 2);
        let divisors: Vec<_> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let dg = rng.gen_range(1..=deg.max(1));
                random::homogeneous(&mut rng, n, dg, terms)
            })
            .collect();
        let ok = match (
            divide(&ctx, &h, &divisors),
            DeltaPartition::from_divisors(&ctx, &divisors),
        ) {
            (Ok(res), Ok(part)) => {
                res.reconstruct(&divisors) == h && res.satisfies_partition(&part)
            }
            _ => false,
        };
        report.record("division certificates", ok, || {
            format!("H = {h}, divisors = {divisors:?}")
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_has_no_failures() {
        let report = algebra_fuzz(7, &SizeParams::default());
        assert_eq!(report.failure_count(), 0, "{report}");
        assert_eq!(report.runs.len(), 6);
    }

    #[test]
    fn sign_mutation_is_detected() {
        let report = algebra_fuzz_with(
            7,
            &SizeParams::default(),
            Some(Mutation::FlipCommutatorSign),
        );
        assert!(report.failure_count() > 0);
        assert!(report
            .failures
            .iter()
            .any(|f| f.check == "action homomorphism"));
    }

    #[test]
    fn empty_sizes_give_empty_report() {
        assert!(algebra_fuzz(1, &SizeParams::empty()).is_empty());
    }

    #[test]
    fn reproducible() {
        let size = SizeParams {
            iterations: 5,
            ..SizeParams::default()
        };
        let a = algebra_fuzz_with(3, &size, Some(Mutation::FlipCommutatorSign));
        let b = algebra_fuzz_with(3, &size, Some(Mutation::FlipCommutatorSign));
        assert_eq!(a, b);
    }
}
