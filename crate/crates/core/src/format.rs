//! Text rendering of operators, e.g. `t^2 + x1^2*D1 - 3/2*D2`.
//! The output is accepted back by [`crate::parse`].

use std::fmt;

use crate::exponent::Exponent;
use crate::scalar::{split_sign, Field};

/// Writes `terms` in the given order. `k` is the `t`-power, if any.
pub(crate) fn write_terms<K: Field>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(Option<u32>, &Exponent, &K)],
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (k, e, c)) in terms.iter().enumerate() {
        let (neg, mag) = split_sign(*c);
        match (i, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let factors = monomial_factors(k.unwrap_or(0), e);
        if factors.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{}", factors.join("*"))?;
        } else {
            write!(f, "{mag}*{}", factors.join("*"))?;
        }
    }
    Ok(())
}

fn monomial_factors(k: u32, e: &Exponent) -> Vec<String> {
    let mut out = Vec::new();
    push_power(&mut out, "t".to_owned(), k);
    for (i, &a) in e.alpha.iter().enumerate() {
        push_power(&mut out, format!("x{}", i + 1), a);
    }
    for (i, &b) in e.beta.iter().enumerate() {
        push_power(&mut out, format!("D{}", i + 1), b);
    }
    out
}

fn push_power(out: &mut Vec<String>, var: String, e: u32) {
    match e {
        0 => {}
        1 => out.push(var),
        _ => out.push(format!("{var}^{e}")),
    }
}

/// Formats a sequence of `(t-power, exponent, coefficient)` terms.
pub fn terms_to_string<K: Field>(terms: &[(Option<u32>, &Exponent, &K)]) -> String {
    struct Terms<'a, K>(&'a [(Option<u32>, &'a Exponent, &'a K)]);
    impl<K: Field> fmt::Display for Terms<'_, K> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(f, self.0)
        }
    }
    Terms(terms).to_string()
}
