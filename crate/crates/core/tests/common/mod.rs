#![allow(dead_code)]

use proptest::prelude::*;
use weylstd::division::{DeltaPartition, Region};
use weylstd::oracle::exponents_of_degree;
use weylstd::order::{LinearForm, MonomialOrder, OrderContext, TieBreak};
use weylstd::parse::parse_operator;
use weylstd::{Exponent, HExponent, HomogOperator, Polynomial, Rational, WeylOperator};

pub fn coeff() -> impl Strategy<Value = Rational> {
    (
        prop_oneof![-4i64..=-1, 1i64..=4],
        prop_oneof![3 => Just(1i64), 1 => 2i64..=3],
    )
        .prop_map(|(n, d)| Rational::new(n, d))
}

pub fn exponent(n: usize, max_degree: u32) -> impl Strategy<Value = Exponent> {
    proptest::collection::vec(0..=max_degree, 2 * n)
        .prop_filter("total degree", move |c| c.iter().sum::<u32>() <= max_degree)
        .prop_map(move |mut c| {
            let beta = c.split_off(n);
            Exponent::new(c, beta)
        })
}

pub fn hexponent(n: usize, max_degree: u32) -> impl Strategy<Value = HExponent> {
    (0..=max_degree, exponent(n, max_degree))
        .prop_filter("graded degree", move |(k, e)| {
            *k as u64 + e.total_degree() <= max_degree as u64
        })
        .prop_map(|(k, e)| HExponent::new(k, e))
}

pub fn weyl(
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> impl Strategy<Value = WeylOperator<Rational>> {
    proptest::collection::vec((exponent(n, max_degree), coeff()), 1..=max_terms)
        .prop_map(WeylOperator::from_terms)
}

pub fn nonzero_weyl(
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> impl Strategy<Value = WeylOperator<Rational>> {
    weyl(n, max_degree, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn homog(
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> impl Strategy<Value = HomogOperator<Rational>> {
    proptest::collection::vec((hexponent(n, max_degree), coeff()), 1..=max_terms)
        .prop_map(HomogOperator::from_terms)
}

/// Nonzero homogeneous element of graded degree `degree`.
pub fn homogeneous(
    n: usize,
    degree: u32,
    max_terms: usize,
) -> impl Strategy<Value = HomogOperator<Rational>> {
    let term = (exponent(n, degree), coeff())
        .prop_map(move |(e, c)| (HExponent::new(degree - e.total_degree() as u32, e), c));
    proptest::collection::vec(term, 1..=max_terms)
        .prop_map(HomogOperator::from_terms)
        .prop_filter("nonzero", |h| !h.is_zero())
}

pub fn polynomial(
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial<Rational>> {
    let mono = proptest::collection::vec(0..=max_degree, n);
    proptest::collection::vec((mono, coeff()), 1..=max_terms).prop_map(Polynomial::from_terms)
}

pub fn tiebreak(n: usize) -> impl Strategy<Value = TieBreak> {
    let order = prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::DegLex),
        Just(MonomialOrder::DegRevLex)
    ];
    let perm = Just((0..2 * n).collect::<Vec<_>>()).prop_shuffle();
    (order, perm).prop_map(|(o, p)| TieBreak::new(o, p).unwrap())
}

/// Linear forms with `p_i + q_i ≥ 0`.
pub fn linear_form(n: usize) -> impl Strategy<Value = LinearForm> {
    proptest::collection::vec((-3i64..=3, 0i64..=3), n).prop_map(|pairs| {
        let (p, slack): (Vec<i64>, Vec<i64>) = pairs.into_iter().unzip();
        let q = p.iter().zip(&slack).map(|(a, s)| s - a).collect();
        LinearForm::new(p, q).unwrap()
    })
}

pub fn context(n: usize) -> impl Strategy<Value = OrderContext> {
    (linear_form(n), tiebreak(n)).prop_map(|(l, t)| OrderContext::new(l, t).unwrap())
}

/// The three filtrations singled out for exponent checks.
pub fn named_forms(n: usize) -> Vec<(&'static str, LinearForm)> {
    vec![
        ("order", LinearForm::order(n)),
        ("v", LinearForm::v_filtration(n)),
        ("l(1,1)", LinearForm::l_filtration(n, 1, 1).unwrap()),
    ]
}

pub fn op(text: &str, n: usize) -> WeylOperator<Rational> {
    parse_operator(text, n, &()).unwrap()
}

pub fn ops(texts: &[&str], n: usize) -> Vec<WeylOperator<Rational>> {
    texts.iter().map(|t| op(t, n)).collect()
}

/// Random quotients and remainder of total degree `degree` satisfying the
/// partition conditions.
pub fn compliant_pair(
    ctx: &OrderContext,
    divisors: &[HomogOperator<Rational>],
    degree: u32,
    seed: u64,
) -> (Vec<HomogOperator<Rational>>, HomogOperator<Rational>) {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let partition = DeltaPartition::from_divisors(ctx, divisors).unwrap();
    let mut pick = |cands: Vec<HExponent>| {
        HomogOperator::from_terms(
            cands
                .into_iter()
                .filter_map(|e| {
                    rng.gen_bool(0.3)
                        .then(|| (e, Rational::new(rng.gen_range(1..=5), rng.gen_range(1..=2))))
                })
                .collect::<Vec<_>>(),
        )
    };
    let quotients = divisors
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let lead = &partition.leading()[i];
            let deg = p.max_degree().unwrap() as u32;
            if deg > degree {
                return HomogOperator::zero();
            }
            let cands = exponents_of_degree(2, (degree - deg) as u64)
                .into_iter()
                .filter(|m| partition.region(&lead.add(m)) == Region::Divisor(i))
                .collect();
            pick(cands)
        })
        .collect();
    let rem = exponents_of_degree(2, degree as u64)
        .into_iter()
        .filter(|e| partition.region(e) == Region::Complement)
        .collect();
    (quotients, pick(rem))
}
