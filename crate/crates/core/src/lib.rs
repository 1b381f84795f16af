//! Prime races in arithmetic progressions.
//!
//! This crate computes the Chebyshev bias `delta(x, q)` between quadratic
//! residue and non-residue classes, Robin's B-function
//! `B(x; q, a) = li(phi(q) * psi(x; q, a)) - phi(q) * pi(x; q, a)`, and the
//! regularized bias `delta'(x, q)` whose strict positivity is equivalent to
//! GRH for the modulus. On top of those it enumerates bias champions and
//! sign-change zones, estimates logarithmic densities, and evaluates the
//! zero-table-driven explicit formula and variance.
//!
//! The layout mirrors the pipeline:
//!
//! * [`primes`] — segmented sieving, prime-power enumeration, and per-class
//!   tallies (`pi(x; q, a)`, `psi(x; q, a)`); the performance core.
//! * [`numerics`] — the logarithmic integral and small arithmetic helpers
//!   (Mobius, Euler phi, Legendre symbol, quadratic-residue classification).
//! * [`bias`] — the bias quantities built from a tally.
//! * [`analysis`] — scanning and aggregation: champions, zones, densities,
//!   the overall bias measure `b(q)`, and zero tables.

pub mod analysis;
pub mod bias;
mod error;
mod kahan;
pub mod numerics;
pub mod primes;

pub use analysis::{
    bias_sum, champions, explicit_delta, log_density, scan, variance, verify_positivity, zones,
    BiasScan, ChampionRecord, LogDensity, PositivityReport, SamplePolicy, ScanOptions, ZeroTable,
    Zone,
};
pub use bias::{delta, delta_reg, pi_approx, pi_reg, robin_b, BiasPoint};
pub use error::Error;
pub use primes::{
    iterate_prime_powers, pi, pi_many, sieve_segment, tally_to, PrimePower, PrimePowerStream,
    ResidueTally, SieveSegment,
};

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) use kahan::KahanSum;
