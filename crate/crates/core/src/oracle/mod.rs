//! Brute-force verification of `Exp(Ĩ)` on small instances.
//!
//! The homogenized ideal `Ĩ` is graded, so its degree-`e` component is
//! spanned by the monomial multiples `t^l x^γ D^δ · h(P_i)` of degree `e`.
//! Exact Gaussian elimination of that finite spanning set, with columns in
//! ≺^L-descending order, yields the pivot exponents, which are exactly the
//! leading exponents of nonzero elements of `Ĩ` in degree `e`.

pub mod fuzz;
pub mod random;

use std::collections::{BTreeMap, BTreeSet};

use crate::basis::{in_staircase, StandardBasisReport};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, HExponent};
use crate::homogenize::homogenize;
use crate::order::OrderContext;
use crate::scalar::Field;
use crate::weyl::{HomogOperator, WeylOperator};

/// Default bound on `rows × columns` of a single degree slice.
pub const DEFAULT_MAX_MATRIX: usize = 4_000_000;

/// Leading exponents of `Ĩ` up to a graded degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationWitness {
    pub degree_bound: u64,
    pub leading_exponents: BTreeSet<HExponent>,
    /// Dimension of `Ĩ` restricted to degrees `≤ degree_bound`.
    pub matrix_rank: usize,
}

impl TruncationWitness {
    /// `π` of the leading exponents.
    pub fn projected(&self) -> BTreeSet<Exponent> {
        self.leading_exponents
            .iter()
            .map(|e| e.base.clone())
            .collect()
    }
}

/// All exponents `(k, α, β)` of graded degree exactly `degree` in `2n+1`
/// variables.
pub fn exponents_of_degree(n: usize, degree: u64) -> Vec<HExponent> {
    let mut out = Vec::new();
    let mut comps = vec![0u32; 2 * n + 1];
    fill(&mut comps, 0, degree as u32, &mut out, n);
    out
}

fn fill(comps: &mut [u32], at: usize, left: u32, out: &mut Vec<HExponent>, n: usize) {
    if at == comps.len() - 1 {
        comps[at] = left;
        let alpha = comps[1..=n].to_vec();
        let beta = comps[n + 1..].to_vec();
        out.push(HExponent::new(comps[0], Exponent::new(alpha, beta)));
        return;
    }
    for v in 0..=left {
        comps[at] = v;
        fill(comps, at + 1, left - v, out, n);
    }
}

/// Row echelon form over `K` with rows keyed by their pivot column.
struct Echelon<K> {
    pivots: BTreeMap<usize, Vec<(usize, K)>>,
}

impl<K: Field> Echelon<K> {
    fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    /// Reduces `row` (sorted by column, nonzero entries) and records its
    /// pivot if it survives.
    fn insert(&mut self, mut row: Vec<(usize, K)>) {
        while let Some((col, lead)) = row.first().cloned() {
            let Some(pivot_row) = self.pivots.get(&col) else {
                let inv = lead.inv().expect("nonzero entry");
                let row = row.into_iter().map(|(c, v)| (c, v.mul(&inv))).collect();
                self.pivots.insert(col, row);
                return;
            };
            // pivot rows are normalized to a leading 1
            row = axpy(&row, &lead.neg(), pivot_row);
        }
    }
}

/// `row + factor · other`, merging sorted sparse vectors.
fn axpy<K: Field>(row: &[(usize, K)], factor: &K, other: &[(usize, K)]) -> Vec<(usize, K)> {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_left = j == other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_right = i == row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_left {
            out.push(row[i].clone());
            i += 1;
        } else if take_right {
            out.push((other[j].0, other[j].1.mul(factor)));
            j += 1;
        } else {
            let v = row[i].1.add(&other[j].1.mul(factor));
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Leading exponents of `Ĩ = A_n[t]·(h(P_1), …, h(P_m))` in degrees
/// `≤ degree_bound`, by linear algebra.
pub fn staircase_oracle<K: Field>(
    ctx: &OrderContext,
    gens: &[WeylOperator<K>],
    degree_bound: u64,
    max_matrix: usize,
) -> Result<TruncationWitness> {
    let n = ctx.nvars();
    let homog: Vec<HomogOperator<K>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(homogenize)
        .collect::<Result<_>>()?;
    if homog.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let degrees: Vec<u64> = homog
        .iter()
        .map(|h| h.max_degree().expect("nonzero"))
        .collect();
    let needed = *degrees.iter().max().expect("nonempty");
    if degree_bound < needed {
        return Err(Error::OracleDegreeTooSmall {
            bound: degree_bound,
            needed,
        });
    }

    let mut leading = BTreeSet::new();
    let mut rank = 0;
    for e in 0..=degree_bound {
        let mut columns = exponents_of_degree(n, e);
        columns.sort_by(|a, b| ctx.compare_l(b, a));
        let index: BTreeMap<&HExponent, usize> =
            columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let rows: usize = degrees
            .iter()
            .filter(|&&g| g <= e)
            .map(|&g| exponents_of_degree(n, e - g).len())
            .sum();
        if rows.saturating_mul(columns.len()) > max_matrix {
            return Err(Error::OracleTooLarge {
                rows,
                cols: columns.len(),
                limit: max_matrix,
            });
        }
        let mut echelon = Echelon::new();
        for (h, &g) in homog.iter().zip(&degrees) {
            if g > e {
                continue;
            }
            for mono in exponents_of_degree(n, e - g) {
                let one = K::one(&h.terms().values().next().expect("nonzero").context());
                let multiple = h.left_mul_monomial(&mono, &one);
                let mut row: Vec<(usize, K)> = multiple
                    .terms()
                    .iter()
                    .map(|(exp, c)| (index[exp], c.clone()))
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                echelon.insert(row);
            }
        }
        rank += echelon.pivots.len();
        leading.extend(echelon.pivots.keys().map(|&c| columns[c].clone()));
    }
    Ok(TruncationWitness {
        degree_bound,
        leading_exponents: leading,
        matrix_rank: rank,
    })
}

/// Exponents of degree `≤ bound` in `∪ (l + N^{2n+1})`.
pub fn truncated_upper_set(leads: &[HExponent], n: usize, bound: u64) -> BTreeSet<HExponent> {
    (0..=bound)
        .flat_map(|e| exponents_of_degree(n, e))
        .filter(|e| leads.iter().any(|l| l.divides(e)))
        .collect()
}

/// Outcome of comparing the oracle with a pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComparison {
    /// Oracle leading exponents equal the truncated upper set of the
    /// pipeline's homogeneous basis exponents, in `N^{2n+1}`.
    pub lifted_equal: bool,
    /// Every projected oracle exponent lies in the pipeline staircase.
    pub projected_sound: bool,
    /// Every staircase generator whose basis witness has degree `≤ d`
    /// appears among the projected oracle exponents.
    pub generators_found: bool,
    /// For every `a` with `|a| ≤ d`: `a ∈ π(oracle)` exactly when the
    /// pipeline basis yields an element of `Ĩ` of degree `≤ d` with
    /// projected exponent `a`.
    pub window_equal: bool,
    /// The cruder window `|a| ≤ d − max ord^T(gens)`, compared against
    /// `Exp_δ(I)` directly. Informational: it fails whenever reaching `a`
    /// needs a high power of `t`.
    pub naive_window_equal: bool,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.lifted_equal && self.projected_sound && self.generators_found && self.window_equal
    }
}

/// Smallest graded degree of an exponent `(k, a)` in `∪ (l + N^{2n+1})`.
pub fn lifted_degree(leads: &[HExponent], a: &Exponent) -> Option<u64> {
    leads
        .iter()
        .filter(|l| l.base.divides(a))
        .map(|l| l.degree() + a.total_degree() - l.base.total_degree())
        .min()
}

/// Runs the comparison both ways on the truncation.
pub fn compare_with_pipeline<K: Field>(
    ctx: &OrderContext,
    gens: &[WeylOperator<K>],
    report: &StandardBasisReport<K>,
    witness: &TruncationWitness,
) -> Result<OracleComparison> {
    let n = ctx.nvars();
    let d = witness.degree_bound;
    let leads: Vec<HExponent> = report
        .homog_basis
        .iter()
        .map(|g| ctx.exp_homog(g).map(|l| l.exponent))
        .collect::<Result<_>>()?;
    let lifted_equal = truncated_upper_set(&leads, n, d) == witness.leading_exponents;

    let projected = witness.projected();
    let projected_sound = projected.iter().all(|a| in_staircase(&report.staircase, a));
    let generators_found = report
        .staircase
        .iter()
        .all(|s| match lifted_degree(&leads, s) {
            Some(deg) if deg <= d => projected.contains(s),
            _ => true,
        });

    // exponents with k = 0 enumerate N^{2n} by total degree
    let plain = |bound: u64| {
        (0..=bound)
            .flat_map(move |e| exponents_of_degree(n, e))
            .filter(|e| e.k == 0)
            .map(|e| e.base)
    };
    let window_equal = plain(d).all(|a| {
        let reachable = lifted_degree(&leads, &a).is_some_and(|deg| deg <= d);
        projected.contains(&a) == reachable
    });
    let max_gen = gens
        .iter()
        .filter_map(WeylOperator::total_order)
        .max()
        .unwrap_or(0);
    let naive_window_equal = match d.checked_sub(max_gen) {
        None => true,
        Some(w) => plain(w).all(|a| projected.contains(&a) == in_staircase(&report.staircase, &a)),
    };
    Ok(OracleComparison {
        lifted_equal,
        projected_sound,
        generators_found,
        window_equal,
        naive_window_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::LinearForm;
    use crate::parse::parse_operator;
    use crate::scalar::Rational;

    fn ops(texts: &[&str], n: usize) -> Vec<WeylOperator<Rational>> {
        texts
            .iter()
            .map(|t| parse_operator(t, n, &()).unwrap())
            .collect()
    }

    fn e(a: u32, b: u32) -> Exponent {
        Exponent::new(vec![a], vec![b])
    }

    #[test]
    fn enumerates_monomials() {
        assert_eq!(exponents_of_degree(1, 2).len(), 6);
        assert_eq!(exponents_of_degree(2, 3).len(), 35);
        assert_eq!(exponents_of_degree(1, 0), vec![HExponent::zero(1)]);
    }

    #[test]
    fn x_and_d_generate_a_unit() {
        let ctx = OrderContext::with_default_tiebreak(LinearForm::order(1));
        let w = staircase_oracle(&ctx, &ops(&["x1", "D1"], 1), 2, DEFAULT_MAX_MATRIX).unwrap();
        assert!(w.projected().contains(&e(0, 0)));
        assert!(w.leading_exponents.contains(&HExponent::new(2, e(0, 0))));
    }

    #[test]
    fn principal_commutative_ideal() {
        let ctx = OrderContext::with_default_tiebreak(LinearForm::order(1));
        let w = staircase_oracle(&ctx, &ops(&["x1^2"], 1), 4, DEFAULT_MAX_MATRIX).unwrap();
        let minimal = crate::basis::minimal_staircase(&w.projected());
        assert_eq!(minimal, vec![e(2, 0)]);
    }

    #[test]
    fn v_filtration_example_contains_origin() {
        let ctx = OrderContext::with_default_tiebreak(LinearForm::v_filtration(1));
        let w = staircase_oracle(&ctx, &ops(&["1 + x1^2*D1"], 1), 6, DEFAULT_MAX_MATRIX).unwrap();
        assert!(w.projected().contains(&e(0, 0)));
    }

    #[test]
    fn guards() {
        let ctx = OrderContext::with_default_tiebreak(LinearForm::order(1));
        assert_eq!(
            staircase_oracle(&ctx, &ops(&["x1^3"], 1), 2, DEFAULT_MAX_MATRIX),
            Err(Error::OracleDegreeTooSmall {
                bound: 2,
                needed: 3
            })
        );
        assert!(matches!(
            staircase_oracle(&ctx, &ops(&["x1"], 1), 6, 10),
            Err(Error::OracleTooLarge { .. })
        ));
        assert_eq!(
            staircase_oracle(&ctx, &[WeylOperator::<Rational>::zero()], 2, 10),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn sparse_axpy() {
        use crate::scalar::q;
        let a = vec![(0, q(1)), (2, q(3))];
        let b = vec![(0, q(1)), (1, q(1)), (2, q(3))];
        assert_eq!(axpy(&a, &q(-1), &b), vec![(1, q(-1))]);
    }
}
