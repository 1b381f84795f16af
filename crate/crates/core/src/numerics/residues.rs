//! Quadratic-residue classification of reduced classes mod q.

use super::arith::gcd;
use crate::{Error, Result};

/// The reduced classes mod `q` split into squares (`residues`) and
/// non-squares (`nonresidues`), both sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClassification {
    pub q: u64,
    pub residues: Vec<u64>,
    pub nonresidues: Vec<u64>,
}

impl ResidueClassification {
    pub fn is_residue(&self, a: u64) -> bool {
        self.residues.binary_search(&(a % self.q)).is_ok()
    }
}

/// Classify the reduced classes mod `q` as quadratic residues or
/// non-residues by direct enumeration of `b^2 mod q`.
pub fn classify_residues(q: u64) -> Result<ResidueClassification> {
    if q < 3 {
        return Err(Error::ModulusTooSmall(q));
    }
    let mut square = vec![false; q as usize];
    for b in 1..=q {
        if gcd(b, q) == 1 {
            square[((b * b) % q) as usize] = true;
        }
    }
    let mut residues = Vec::new();
    let mut nonresidues = Vec::new();
    for a in 1..q {
        if gcd(a, q) == 1 {
            if square[a as usize] {
                residues.push(a);
            } else {
                nonresidues.push(a);
            }
        }
    }
    Ok(ResidueClassification {
        q,
        residues,
        nonresidues,
    })
}

/// `c(q, a) = -1 + #{1 <= b <= q : b^2 = a mod q}` for reduced `a`; for an
/// odd prime q this equals the Legendre symbol `(a/q)`.
pub fn c_term(q: u64, a: u64) -> Result<i64> {
    if q < 3 {
        return Err(Error::ModulusTooSmall(q));
    }
    let a = a % q;
    if gcd(a, q) != 1 {
        return Err(Error::NotReducedClass { a, q });
    }
    let mut count = 0i64;
    for b in 1..=q {
        if (b * b) % q == a {
            count += 1;
        }
    }
    Ok(count - 1)
}
