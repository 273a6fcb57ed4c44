//! Seeded random operators for property checks.

use rand::Rng;

use crate::exponent::{Exponent, HExponent};
use crate::scalar::{Field, Rational};
use crate::weyl::{HomogOperator, Polynomial, WeylOperator};

fn coeff<R: Rng>(rng: &mut R) -> Rational {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-4..=4);
    }
    if rng.gen_bool(0.2) {
        Rational::new(c, rng.gen_range(2..=3))
    } else {
        Rational::integer(c)
    }
}

/// Random exponent of total degree at most `max_degree`.
pub fn exponent<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> Exponent {
    let target = rng.gen_range(0..=max_degree);
    exponent_of_degree(rng, n, target)
}

/// Random exponent of total degree exactly `degree`.
pub fn exponent_of_degree<R: Rng>(rng: &mut R, n: usize, degree: u32) -> Exponent {
    let mut comps = vec![0u32; 2 * n];
    for _ in 0..degree {
        comps[rng.gen_range(0..2 * n)] += 1;
    }
    let beta = comps.split_off(n);
    Exponent::new(comps, beta)
}

/// Random element of `A_n` with total order ≤ `max_degree` and at most
/// `max_terms` terms; may be zero only if `max_terms` is zero.
pub fn weyl<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> WeylOperator<Rational> {
    loop {
        let terms = rng.gen_range(1..=max_terms.max(1));
        let op = WeylOperator::from_terms(
            (0..terms).map(|_| (exponent(rng, n, max_degree), coeff(rng))),
        );
        if !op.is_zero() || max_terms == 0 {
            return op;
        }
    }
}

/// Random homogeneous nonzero element of `A_n[t]` of graded degree `degree`.
pub fn homogeneous<R: Rng>(
    rng: &mut R,
    n: usize,
    degree: u32,
    max_terms: usize,
) -> HomogOperator<Rational> {
    loop {
        let terms = rng.gen_range(1..=max_terms.max(1));
        let op = HomogOperator::from_terms((0..terms).map(|_| {
            let k = rng.gen_range(0..=degree);
            (
                HExponent::new(k, exponent_of_degree(rng, n, degree - k)),
                coeff(rng),
            )
        }));
        if !op.is_zero() {
            return op;
        }
    }
}

/// Random (generally inhomogeneous) element of `A_n[t]`.
pub fn homog<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> HomogOperator<Rational> {
    let terms = rng.gen_range(1..=max_terms.max(1));
    HomogOperator::from_terms((0..terms).map(|_| {
        let k = rng.gen_range(0..=max_degree);
        (
            HExponent::new(k, exponent(rng, n, max_degree - k)),
            coeff(rng),
        )
    }))
}

/// Random polynomial in `x_1..x_n`.
pub fn polynomial<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: u32,
    max_terms: usize,
) -> Polynomial<Rational> {
    let terms = rng.gen_range(1..=max_terms.max(1));
    Polynomial::from_terms((0..terms).map(|_| {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_degree) {
            e[rng.gen_range(0..n)] += 1;
        }
        (e, coeff(rng))
    }))
}

/// Random monomial `c · t^k x^α D^β` of graded degree ≤ `max_degree`.
pub fn homog_monomial<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> HomogOperator<Rational> {
    let k = rng.gen_range(0..=max_degree);
    HomogOperator::monomial(
        HExponent::new(k, exponent(rng, n, max_degree - k)),
        coeff(rng),
    )
}

/// Scalar helper so callers need not import the field trait.
pub fn nonzero_scalar<R: Rng>(rng: &mut R) -> Rational {
    let c = coeff(rng);
    debug_assert!(!c.is_zero());
    c
}
