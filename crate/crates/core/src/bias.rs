//! The central bias quantities: `delta(x, q)`, Robin's B-function, the
//! regularized bias `delta'(x, q)`, the regularized counting function
//! `pi'(x; q, a)`, and the Mobius-corrected prime-counting approximation.
//!
//! `delta` and `delta'` are defined for q = 4 and odd prime moduli. Both
//! cases reduce to the quadratic character `c(q, a)` (+1 on square classes,
//! -1 on non-squares):
//!
//! * `delta(x, q) = -sum_a c(q, a) * pi(x; q, a)` — for q = 4 this is
//!   `pi(x; 4, 3) - pi(x; 4, 1)`.
//! * `delta'(x, q) = (1/|R|) * sum_a c(q, a) * B(x; q, a)` where |R| is the
//!   number of square classes (1 for q = 4, (p-1)/2 for an odd prime p).

use crate::numerics::{euler_phi, is_odd_prime, legendre, logint, mobius};
use crate::primes::{PrimePowerStream, ResidueTally};
use crate::{Error, KahanSum, Result};

/// Arguments of `li` this close to 1 are rejected; the principal value blows
/// up there and no quantity computed from a tally at x >= 2 can reach the
/// window (the first prime-power event already pushes phi * psi past 1.38).
pub(crate) const LI_SINGULAR_WINDOW: f64 = 1e-9;

/// One sampled point of a bias scan.
#[derive(Clone, Debug)]
pub struct BiasPoint {
    /// Sample location (a prime coprime to the modulus).
    pub x: u64,
    /// Chebyshev bias `delta(x, q)`, exact.
    pub delta: i64,
    /// Regularized bias `delta'(x, q)`.
    pub delta_reg: f64,
    /// `delta'(x, q) / sqrt(x)`.
    pub normalized: f64,
    /// Per-class Robin B values `(a, B(x; q, a))`, ascending in `a`; empty
    /// when the scan was asked not to materialize them.
    pub b_by_class: Vec<(u64, f64)>,
}

/// Quadratic character data for a supported modulus (4 or an odd prime).
#[derive(Clone, Debug)]
pub(crate) struct QuadChar {
    pub q: u64,
    pub phi: u64,
    pub r_count: u64,
    pub classes: Vec<u64>,
    /// c(q, a) per class slot, in `classes` order.
    pub weights: Vec<i8>,
}

impl QuadChar {
    pub fn new(q: u64) -> Result<Self> {
        if q == 4 {
            return Ok(QuadChar {
                q,
                phi: 2,
                r_count: 1,
                classes: vec![1, 3],
                weights: vec![1, -1],
            });
        }
        if q < 3 || q.is_multiple_of(2) || !is_odd_prime(q) {
            return Err(Error::UnsupportedModulus(q));
        }
        let classes: Vec<u64> = (1..q).collect();
        let weights: Vec<i8> = classes
            .iter()
            .map(|&a| legendre(a as i64, q).expect("odd prime") as i8)
            .collect();
        Ok(QuadChar {
            q,
            phi: q - 1,
            r_count: (q - 1) / 2,
            classes,
            weights,
        })
    }

    pub fn weight_of(&self, residue: u64) -> Option<i8> {
        self.slot_of(residue).map(|i| self.weights[i])
    }

    /// Slot of a reduced residue in `classes` order; `None` when the residue
    /// shares a factor with q.
    pub fn slot_of(&self, residue: u64) -> Option<usize> {
        if self.q == 4 {
            match residue % 4 {
                1 => Some(0),
                3 => Some(1),
                _ => None,
            }
        } else {
            let r = residue % self.q;
            if r == 0 {
                None
            } else {
                Some((r - 1) as usize)
            }
        }
    }
}

fn check_tally(x: u64, q: u64, tally: &ResidueTally) -> Result<()> {
    if tally.modulus() != q {
        return Err(Error::TallyModulusMismatch {
            got: tally.modulus(),
            want: q,
        });
    }
    if !tally.is_canonical() {
        return Err(Error::TallyNotCanonical(tally.start()));
    }
    if tally.frontier() != x {
        return Err(Error::FrontierMismatch {
            got: tally.frontier(),
            want: x,
        });
    }
    Ok(())
}

/// Chebyshev bias at `x`: `pi(x; 4, 3) - pi(x; 4, 1)` for q = 4, and the
/// Legendre-weighted count difference `-sum_a (a/p) pi(x; p, a)` for an odd
/// prime modulus. The tally must be a full tally with frontier exactly `x`.
pub fn delta(x: u64, q: u64, tally: &ResidueTally) -> Result<i64> {
    let ch = QuadChar::new(q)?;
    check_tally(x, q, tally)?;
    let mut d = 0i64;
    for (i, &a) in ch.classes.iter().enumerate() {
        d -= i64::from(ch.weights[i]) * tally.count(a)? as i64;
    }
    Ok(d)
}

pub(crate) fn robin_b_from_parts(phi: u64, psi: f64, count: u64) -> Result<f64> {
    let arg = phi as f64 * psi;
    if arg == 0.0 {
        return Ok(-((phi * count) as f64));
    }
    if (arg - 1.0).abs() <= LI_SINGULAR_WINDOW {
        return Err(Error::SingularArgument(arg));
    }
    Ok(logint(arg)? - (phi * count) as f64)
}

/// Robin's B-function `B(x; q, a) = li(phi(q) psi(x; q, a)) - phi(q) pi(x; q, a)`
/// for any modulus q >= 3 and reduced class `a`. `li(0)` is taken as 0 for
/// the empty class.
pub fn robin_b(x: u64, q: u64, a: u64, tally: &ResidueTally) -> Result<f64> {
    if q < 3 {
        return Err(Error::ModulusTooSmall(q));
    }
    check_tally(x, q, tally)?;
    robin_b_from_parts(euler_phi(q), tally.psi(a)?, tally.count(a)?)
}

/// Regularized bias: `B(x; 4, 1) - B(x; 4, 3)` for q = 4, and
/// `(1/floor(p/2)) sum_a (a/p) B(x; p, a)` for an odd prime modulus.
/// Strictly positive for all x (from the first prime onward) iff GRH holds
/// for the modulus.
pub fn delta_reg(x: u64, q: u64, tally: &ResidueTally) -> Result<f64> {
    let ch = QuadChar::new(q)?;
    check_tally(x, q, tally)?;
    let mut sum = 0.0f64;
    for (i, &a) in ch.classes.iter().enumerate() {
        let b = robin_b_from_parts(ch.phi, tally.psi(a)?, tally.count(a)?)?;
        sum += f64::from(ch.weights[i]) * b;
    }
    Ok(sum / ch.r_count as f64)
}

/// Regularized counting function `pi'(x; q, a) = pi(x; q, a) - psi(x; q, a) / log x`.
pub fn pi_reg(x: u64, q: u64, a: u64, tally: &ResidueTally) -> Result<f64> {
    if x < 2 {
        return Err(Error::LimitTooSmall { got: x, min: 2 });
    }
    if q < 3 {
        return Err(Error::ModulusTooSmall(q));
    }
    check_tally(x, q, tally)?;
    Ok(tally.count(a)? as f64 - tally.psi(a)? / (x as f64).ln())
}

/// Mobius-corrected prime-counting approximation
/// `sum_{n=1..3} (mu(n)/n) li(psi(x)^{1/n})`.
///
/// The n = 2, 3 terms strip the square and cube prime-power weight out of
/// `li(psi(x))`, leaving an approximation of pi(x) that is far closer than
/// `li(x)` at computable ranges. Arguments of `li` within 1e-9 of 1 are
/// rejected; psi jumps from log 2 = 0.69 to log 6 = 1.79, so no x >= 2
/// actually lands there.
pub fn pi_approx(x: u64) -> Result<f64> {
    if x < 2 {
        return Err(Error::LimitTooSmall { got: x, min: 2 });
    }
    let mut psi = KahanSum::default();
    for pp in PrimePowerStream::new(x)? {
        psi.add(pp.logp);
    }
    let psi = psi.value();
    let mut sum = 0.0f64;
    for n in 1u64..=3 {
        let root = match n {
            1 => psi,
            2 => psi.sqrt(),
            _ => psi.cbrt(),
        };
        if (root - 1.0).abs() <= LI_SINGULAR_WINDOW {
            return Err(Error::SingularArgument(root));
        }
        sum += mobius(n)? as f64 / n as f64 * logint(root)?;
    }
    Ok(sum)
}
