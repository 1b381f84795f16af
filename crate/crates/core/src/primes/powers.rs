//! Prime-power enumeration in increasing value order.
//!
//! Primes come from the segment stream; higher powers p^k (k >= 2) only
//! exist for p <= sqrt(limit), so they are precomputed, sorted, and merged
//! into the stream. Memory stays O(segment + pi(sqrt(limit))).

use super::sieve::{isqrt, small_primes, SegmentStream};
use super::DEFAULT_SEGMENT_LEN;
use crate::{Error, Result};

/// One term of `psi(x) = sum_{p^k <= x} log p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimePower {
    pub p: u64,
    pub k: u32,
    pub value: u64,
    pub logp: f64,
}

/// Iterator over all prime powers `p^k <= limit` in increasing value order.
pub struct PrimePowerStream {
    segments: SegmentStream,
    buf: Vec<u64>,
    buf_i: usize,
    higher: Vec<PrimePower>,
    hi_i: usize,
}

impl PrimePowerStream {
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_options(limit, DEFAULT_SEGMENT_LEN, 1)
    }

    pub fn with_options(limit: u64, seg_len: u64, threads: usize) -> Result<Self> {
        if limit < 2 {
            return Err(Error::LimitTooSmall { got: limit, min: 2 });
        }
        if limit > super::MAX_LIMIT {
            return Err(Error::InvalidRange { lo: 2, hi: limit });
        }
        let mut higher = Vec::new();
        for &p in small_primes(isqrt(limit)).iter() {
            let logp = (p as f64).ln();
            let mut value = p * p;
            let mut k = 2u32;
            loop {
                higher.push(PrimePower { p, k, value, logp });
                match value.checked_mul(p) {
                    Some(v) if v <= limit => value = v,
                    _ => break,
                }
                k += 1;
            }
        }
        higher.sort_unstable_by_key(|pp| pp.value);
        Ok(PrimePowerStream {
            segments: SegmentStream::new(limit, seg_len, threads),
            buf: Vec::new(),
            buf_i: 0,
            higher,
            hi_i: 0,
        })
    }
}

impl Iterator for PrimePowerStream {
    type Item = PrimePower;

    fn next(&mut self) -> Option<PrimePower> {
        loop {
            if self.buf_i < self.buf.len() {
                let pv = self.buf[self.buf_i];
                if self.hi_i < self.higher.len() && self.higher[self.hi_i].value < pv {
                    self.hi_i += 1;
                    return Some(self.higher[self.hi_i - 1]);
                }
                self.buf_i += 1;
                return Some(PrimePower {
                    p: pv,
                    k: 1,
                    value: pv,
                    logp: (pv as f64).ln(),
                });
            }
            match self.segments.next_segment() {
                Some(seg) => {
                    self.buf.clear();
                    seg.append_primes(&mut self.buf);
                    self.buf_i = 0;
                }
                None => {
                    if self.hi_i < self.higher.len() {
                        self.hi_i += 1;
                        return Some(self.higher[self.hi_i - 1]);
                    }
                    return None;
                }
            }
        }
    }
}

/// Invoke `visit` once per prime power `p^k <= limit`, in increasing value
/// order. Requires `limit >= 2`.
pub fn iterate_prime_powers(limit: u64, mut visit: impl FnMut(&PrimePower)) -> Result<()> {
    for pp in PrimePowerStream::new(limit)? {
        visit(&pp);
    }
    Ok(())
}
