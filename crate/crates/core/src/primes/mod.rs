//! Segmented enumeration of primes and prime powers with per-class tallies.

mod powers;
mod sieve;
mod tally;

pub use powers::{iterate_prime_powers, PrimePower, PrimePowerStream};
pub use sieve::{pi, pi_many, sieve_segment, SieveSegment};
pub use tally::{tally_range, tally_to, tally_to_with, ResidueTally};

pub(crate) use sieve::SegmentStream;
#[cfg(test)]
pub(crate) use sieve::small_primes;

/// Default segment length in integers; keeps the odd-only flag block at
/// 64 KiB, comfortably cache resident.
pub const DEFAULT_SEGMENT_LEN: u64 = 1 << 20;

/// Hard cap on a single segment.
pub const MAX_SEGMENT_LEN: u64 = 1 << 26;

/// Scan limits are capped here; the interesting range (<= ~1e10) fits with
/// headroom and every intermediate product stays inside u64.
pub const MAX_LIMIT: u64 = 1 << 62;
