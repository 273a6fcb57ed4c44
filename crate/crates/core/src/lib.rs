//! Standard bases of left ideals in the Weyl algebra `A_n(K)` for
//! admissible filtrations, computed by homogenization into `A_n[t]`.
//!
//! The main entry point is [`basis::std_basis_pipeline`]: it returns a
//! δ-standard basis of the ideal, the principal symbols that generate
//! `gr_δ(I)`, and the minimal generators of `Exp_δ(I)`.

pub mod basis;
pub mod division;
pub mod error;
pub mod exponent;
mod format;
pub mod homogenize;
pub mod oracle;
pub mod order;
pub mod parse;
pub mod scalar;
pub mod weyl;

pub use error::{Error, Result};
pub use exponent::{Exponent, HExponent};
pub use order::{LinearForm, MonomialOrder, OrderContext, TieBreak};
pub use scalar::{Field, Fp, Prime, Rational};
pub use weyl::{HomogOperator, Polynomial, WeylOperator};
