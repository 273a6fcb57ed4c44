//! JSON interchange: operators are arrays of
//! `{"k": 2, "alpha": [..], "beta": [..], "coeff": "num/den"}` with `k`
//! present only for elements of `A_n[t]`. Coefficients are exact strings.

use serde::{Deserialize, Serialize};
use weylstd::{Exponent, Field, HExponent, HomogOperator, OrderContext, WeylOperator};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub coeff: String,
}

pub fn weyl_to_json<K: Field>(ctx: &OrderContext, op: &WeylOperator<K>) -> Vec<TermJson> {
    ctx.sorted_terms(op)
        .into_iter()
        .map(|(e, c)| TermJson {
            k: None,
            alpha: e.alpha.clone(),
            beta: e.beta.clone(),
            coeff: c.to_exact_string(),
        })
        .collect()
}

pub fn homog_to_json<K: Field>(ctx: &OrderContext, op: &HomogOperator<K>) -> Vec<TermJson> {
    ctx.sorted_homog_terms(op)
        .into_iter()
        .map(|(e, c)| TermJson {
            k: Some(e.k),
            alpha: e.base.alpha.clone(),
            beta: e.base.beta.clone(),
            coeff: c.to_exact_string(),
        })
        .collect()
}

fn exponent(term: &TermJson, n: usize) -> Result<Exponent, CliError> {
    if term.alpha.len() != n || term.beta.len() != n {
        return Err(CliError::Input(format!(
            "term exponents must have length {n} (got {} and {})",
            term.alpha.len(),
            term.beta.len()
        )));
    }
    Ok(Exponent::new(term.alpha.clone(), term.beta.clone()))
}

pub fn weyl_from_json<K: Field>(
    terms: &[TermJson],
    n: usize,
    field: &K::Context,
) -> Result<WeylOperator<K>, CliError> {
    let parsed = terms
        .iter()
        .map(|t| {
            if t.k.is_some_and(|k| k != 0) {
                return Err(CliError::Input("t-power in an element of A_n".into()));
            }
            let c = K::parse_exact(field, &t.coeff).map_err(|e| CliError::Input(e.to_string()))?;
            Ok::<_, CliError>((exponent(t, n)?, c))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WeylOperator::from_terms(parsed))
}

pub fn homog_from_json<K: Field>(
    terms: &[TermJson],
    n: usize,
    field: &K::Context,
) -> Result<HomogOperator<K>, CliError> {
    let parsed = terms
        .iter()
        .map(|t| {
            let c = K::parse_exact(field, &t.coeff).map_err(|e| CliError::Input(e.to_string()))?;
            Ok::<_, CliError>((HExponent::new(t.k.unwrap_or(0), exponent(t, n)?), c))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HomogOperator::from_terms(parsed))
}

pub fn exponent_json(e: &Exponent) -> serde_json::Value {
    serde_json::json!({ "alpha": e.alpha, "beta": e.beta })
}
