//! Homogenization `h: A_n → A_n[t]` and dehomogenization `H ↦ H|_{t=1}`.

use crate::error::{Error, Result};
use crate::exponent::HExponent;
use crate::scalar::Field;
use crate::weyl::{HomogOperator, WeylOperator};

/// `h(P) = Σ p_{α,β} t^{ord^T(P) − |α| − |β|} x^α D^β`.
pub fn homogenize<K: Field>(op: &WeylOperator<K>) -> Result<HomogOperator<K>> {
    let top = op.total_order().ok_or(Error::HomogenizeZero)?;
    Ok(HomogOperator::from_terms(op.terms().iter().map(
        |(e, c)| {
            let k = u32::try_from(top - e.total_degree()).expect("t-power fits in u32");
            (HExponent::new(k, e.clone()), c.clone())
        },
    )))
}

/// `H|_{t=1}`; total, also for inhomogeneous `H`.
pub fn restrict<K: Field>(op: &HomogOperator<K>) -> WeylOperator<K> {
    WeylOperator::from_terms(op.terms().iter().map(|(e, c)| (e.base.clone(), c.clone())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradedDegree {
    Homogeneous(u64),
    Mixed,
}

pub fn graded_degree<K: Field>(op: &HomogOperator<K>) -> Result<GradedDegree> {
    let d = op.max_degree().ok_or(Error::DegreeOfZero)?;
    Ok(if op.is_homogeneous() {
        GradedDegree::Homogeneous(d)
    } else {
        GradedDegree::Mixed
    })
}

/// Largest `k` with `t^k | H`, and the quotient.
pub fn strip_t<K: Field>(op: &HomogOperator<K>) -> (u32, HomogOperator<K>) {
    let k = op.terms().keys().map(|e| e.k).min().unwrap_or(0);
    let q = HomogOperator::from_terms(
        op.terms()
            .iter()
            .map(|(e, c)| (HExponent::new(e.k - k, e.base.clone()), c.clone())),
    );
    (k, q)
}
