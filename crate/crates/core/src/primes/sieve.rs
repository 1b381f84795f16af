//! Odd-only bitmask sieve over segments.

use super::{DEFAULT_SEGMENT_LEN, MAX_LIMIT, MAX_SEGMENT_LEN};
use crate::{Error, Result};

pub(crate) fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= n) {
        r += 1;
    }
    r
}

/// Simple in-memory sieve used for base primes (limit stays near sqrt of the
/// scan limit, so a flat byte array is fine).
pub(crate) fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n / 2 + 1]; // index i <-> odd 2i+1
    let mut primes = vec![2u64];
    let mut i = 1usize;
    while {
        let p = 2 * i + 1;
        p * p <= n
    } {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j <= n / 2 {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    primes.extend(
        composite
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(i, &c)| !c && 2 * i < n)
            .map(|(i, _)| (2 * i + 1) as u64),
    );
    primes
}

/// Primality flags for one segment `[lo, hi)`, one bit per odd integer.
#[derive(Clone, Debug)]
pub struct SieveSegment {
    lo: u64,
    hi: u64,
    first_odd: u64,
    words: Vec<u64>, // bit set <=> odd integer is prime
}

impl SieveSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// True iff `n` is prime; `n` must lie in `[lo, hi)`.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(
            n >= self.lo && n < self.hi,
            "{n} outside segment [{}, {})",
            self.lo,
            self.hi
        );
        if n == 2 {
            return true;
        }
        if n.is_multiple_of(2) {
            return false;
        }
        let bit = ((n - self.first_odd) / 2) as usize;
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    /// Append the primes of the segment, in order, to `out`.
    pub fn append_primes(&self, out: &mut Vec<u64>) {
        if self.lo <= 2 && self.hi > 2 {
            out.push(2);
        }
        let nbits = self.n_bits();
        for (w, &word) in self.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = w * 64 + bits.trailing_zeros() as usize;
                if b >= nbits {
                    break;
                }
                out.push(self.first_odd + 2 * b as u64);
                bits &= bits - 1;
            }
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut v = Vec::new();
        self.append_primes(&mut v);
        v
    }

    pub fn count(&self) -> u64 {
        let mut c: u64 = self.words.iter().map(|w| u64::from(w.count_ones())).sum();
        if self.lo <= 2 && self.hi > 2 {
            c += 1;
        }
        c
    }

    fn n_bits(&self) -> usize {
        if self.hi <= self.first_odd {
            0
        } else {
            (self.hi - self.first_odd).div_ceil(2) as usize
        }
    }
}

/// Sieve one segment `[lo, hi)` with its own base primes.
///
/// Requires `2 <= lo < hi` and `hi - lo` within the segment budget.
pub fn sieve_segment(lo: u64, hi: u64) -> Result<SieveSegment> {
    if lo < 2 || lo >= hi || hi > MAX_LIMIT {
        return Err(Error::InvalidRange { lo, hi });
    }
    if hi - lo > MAX_SEGMENT_LEN {
        return Err(Error::SegmentOverBudget {
            len: hi - lo,
            budget: MAX_SEGMENT_LEN,
        });
    }
    let base = small_primes(isqrt(hi - 1));
    Ok(sieve_with_base(lo, hi, &base))
}

/// Sieve `[lo, hi)` given base primes covering sqrt(hi - 1).
pub(crate) fn sieve_with_base(lo: u64, hi: u64, base: &[u64]) -> SieveSegment {
    debug_assert!(lo >= 2 && lo < hi);
    let first_odd = lo | 1;
    let nbits = if hi <= first_odd {
        0
    } else {
        (hi - first_odd).div_ceil(2) as usize
    };
    let mut words = vec![!0u64; nbits.div_ceil(64)];
    // 1 is never in range (lo >= 2); mark composites per odd base prime.
    for &p in base {
        if p == 2 {
            continue;
        }
        if p.saturating_mul(p) >= hi {
            break;
        }
        // first odd multiple of p in [max(p^2, lo), hi)
        let mut start = p * p;
        if start < lo {
            start = lo.div_ceil(p) * p;
            if start % 2 == 0 {
                start += p;
            }
        }
        let mut m = start;
        while m < hi {
            let bit = ((m - first_odd) / 2) as usize;
            words[bit / 64] &= !(1u64 << (bit % 64));
            m += 2 * p;
        }
    }
    // clear tail bits past hi
    if nbits % 64 != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << (nbits % 64)) - 1;
        }
    }
    SieveSegment {
        lo,
        hi,
        first_odd,
        words,
    }
}

/// Sequential source of sieved segments covering `[2, limit]`, with optional
/// look-ahead sieving on worker threads. Results are consumed in order, so
/// output is identical for any thread count.
pub(crate) struct SegmentStream {
    base: Vec<u64>,
    limit: u64,
    seg_len: u64,
    threads: usize,
    next_lo: u64,
    queue: std::collections::VecDeque<SieveSegment>,
}

impl SegmentStream {
    pub fn new(limit: u64, seg_len: u64, threads: usize) -> Self {
        let seg_len = seg_len.clamp(1 << 10, MAX_SEGMENT_LEN);
        SegmentStream {
            base: small_primes(isqrt(limit)),
            limit,
            seg_len,
            threads: threads.max(1),
            next_lo: 2,
            queue: std::collections::VecDeque::new(),
        }
    }

    fn plan(&mut self) -> Vec<(u64, u64)> {
        let mut ranges = Vec::new();
        for _ in 0..self.threads {
            if self.next_lo > self.limit {
                break;
            }
            let hi = self
                .next_lo
                .saturating_add(self.seg_len)
                .min(self.limit + 1);
            ranges.push((self.next_lo, hi));
            self.next_lo = hi;
        }
        ranges
    }

    pub fn next_segment(&mut self) -> Option<SieveSegment> {
        if self.queue.is_empty() {
            let ranges = self.plan();
            if ranges.is_empty() {
                return None;
            }
            if ranges.len() == 1 {
                let (lo, hi) = ranges[0];
                self.queue.push_back(sieve_with_base(lo, hi, &self.base));
            } else {
                let base = &self.base;
                let segs: Vec<SieveSegment> = std::thread::scope(|scope| {
                    let handles: Vec<_> = ranges
                        .iter()
                        .map(|&(lo, hi)| scope.spawn(move || sieve_with_base(lo, hi, base)))
                        .collect();
                    handles.into_iter().map(|h| h.join().unwrap()).collect()
                });
                self.queue.extend(segs);
            }
        }
        self.queue.pop_front()
    }
}

/// Exact prime count `pi(x)`.
pub fn pi(x: u64) -> u64 {
    if x < 2 {
        return 0;
    }
    let mut stream = SegmentStream::new(x, DEFAULT_SEGMENT_LEN, 1);
    let mut count = 0;
    while let Some(seg) = stream.next_segment() {
        count += seg.count();
    }
    count
}

/// `pi` at many points in one sieving pass. Returns counts in the order of
/// `xs` (which need not be sorted).
pub fn pi_many(xs: &[u64]) -> Vec<u64> {
    if xs.is_empty() {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by_key(|&i| xs[i]);
    let max = xs[*order.last().unwrap()];
    let mut out = vec![0u64; xs.len()];
    if max < 2 {
        return out;
    }
    let mut stream = SegmentStream::new(max, DEFAULT_SEGMENT_LEN, 1);
    let mut running = 0u64;
    let mut primes = Vec::new();
    let mut oi = 0;
    while let Some(seg) = stream.next_segment() {
        primes.clear();
        seg.append_primes(&mut primes);
        // resolve checkpoints that fall inside this segment
        while oi < order.len() && xs[order[oi]] < seg.hi() {
            let x = xs[order[oi]];
            let in_seg = primes.partition_point(|&p| p <= x) as u64;
            out[order[oi]] = running + in_seg;
            oi += 1;
        }
        running += primes.len() as u64;
    }
    while oi < order.len() {
        out[order[oi]] = running;
        oi += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_primes(lo: u64, hi: u64) -> Vec<u64> {
        (lo..hi)
            .filter(|&n| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect()
    }

    #[test]
    fn small_ranges_match_trial_division() {
        assert_eq!(sieve_segment(2, 12).unwrap().primes(), vec![2, 3, 5, 7, 11]);
        assert_eq!(sieve_segment(90, 100).unwrap().primes(), vec![97]);
        for &(lo, hi) in &[(2u64, 500u64), (97, 1000), (9900, 10100), (2, 3), (4, 5)] {
            assert_eq!(
                sieve_segment(lo, hi).unwrap().primes(),
                trial_primes(lo, hi),
                "[{lo},{hi})"
            );
        }
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(matches!(
            sieve_segment(100, 100),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            sieve_segment(10, 2),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            sieve_segment(1, 10),
            Err(Error::InvalidRange { .. })
        ));
        assert!(matches!(
            sieve_segment(2, 3 + MAX_SEGMENT_LEN),
            Err(Error::SegmentOverBudget { .. })
        ));
    }

    #[test]
    fn is_prime_flags() {
        let seg = sieve_segment(2, 50).unwrap();
        for n in 2..50 {
            assert_eq!(
                seg.is_prime(n),
                trial_primes(n, n + 1).len() == 1,
                "flag at {n}"
            );
        }
    }

    #[test]
    fn pi_values() {
        assert_eq!(pi(0), 0);
        assert_eq!(pi(1), 0);
        assert_eq!(pi(2), 1);
        assert_eq!(pi(100), 25);
        assert_eq!(pi(10_000), 1_229);
        assert_eq!(pi(1_000_000), 78_498);
    }

    #[test]
    fn pi_many_matches_pi() {
        let xs = [1u64, 2, 100, 97, 10_000, 65_536, 541];
        let got = pi_many(&xs);
        for (i, &x) in xs.iter().enumerate() {
            assert_eq!(got[i], pi(x), "pi({x})");
        }
    }

    #[test]
    fn segment_stream_covers_range_once() {
        for threads in [1usize, 4] {
            let mut stream = SegmentStream::new(100_000, 1 << 12, threads);
            let mut all = Vec::new();
            let mut prev_hi = 2;
            while let Some(seg) = stream.next_segment() {
                assert_eq!(seg.lo(), prev_hi);
                prev_hi = seg.hi();
                seg.append_primes(&mut all);
            }
            assert_eq!(prev_hi, 100_001);
            assert_eq!(all.len() as u64, pi(100_000));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn isqrt_edges() {
        for n in 0u64..2000 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "isqrt({n})");
        }
        assert_eq!(isqrt(u64::MAX), (1u64 << 32) - 1);
    }
}
