//! Normal-ordering coefficients for `D^β x^γ`.
//!
//! `D^β x^γ = Σ_{ν ≤ min(β,γ)} C(β,ν) C(γ,ν) ν! x^{γ-ν} D^{β-ν}` with all
//! binomials and factorials taken componentwise. In `A_n[t]` each summand
//! also picks up `t^{2|ν|}`.

use num_bigint::BigUint;
use num_traits::One;

/// One summand of the reordering: the shift `ν` and its integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reorder {
    pub nu: Vec<u32>,
    pub coeff: BigUint,
}

impl Reorder {
    pub fn weight(&self) -> u32 {
        self.nu.iter().sum()
    }
}

/// `C(b,v) C(g,v) v!` for a single variable.
fn factor(b: u32, g: u32, v: u32) -> BigUint {
    // C(b,v) * g!/(g-v)!
    let mut acc = binomial(b, v);
    for j in 0..v {
        acc *= BigUint::from(g - j);
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= BigUint::from(n - j);
        acc /= BigUint::from(j + 1);
    }
    acc
}

/// All summands of `D^beta x^gamma`, `ν = 0` first.
pub fn reorder(beta: &[u32], gamma: &[u32]) -> Vec<Reorder> {
    debug_assert_eq!(beta.len(), gamma.len());
    let per_var: Vec<Vec<BigUint>> = beta
        .iter()
        .zip(gamma)
        .map(|(&b, &g)| (0..=b.min(g)).map(|v| factor(b, g, v)).collect())
        .collect();

    let mut out = vec![Reorder {
        nu: Vec::with_capacity(beta.len()),
        coeff: BigUint::one(),
    }];
    for choices in &per_var {
        if choices.len() == 1 {
            for r in &mut out {
                r.nu.push(0);
            }
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for r in &out {
            for (v, c) in choices.iter().enumerate() {
                let mut nu = r.nu.clone();
                nu.push(v as u32);
                next.push(Reorder {
                    nu,
                    coeff: &r.coeff * c,
                });
            }
        }
        out = next;
    }
    out
}
