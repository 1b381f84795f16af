//! Special functions and arithmetic helpers.

mod arith;
mod logint;
mod residues;

pub use arith::{euler_phi, gcd, is_odd_prime, legendre, mobius};
pub use logint::logint;
pub use residues::{c_term, classify_residues, ResidueClassification};
