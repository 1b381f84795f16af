//! Maximal constant-sign intervals of the bias over `[2, limit]`.

use crate::bias::QuadChar;
use crate::primes::{SegmentStream, DEFAULT_SEGMENT_LEN};
use crate::{Error, Result};

/// One maximal interval `[start, end)` on which `delta(t, q)` keeps a single
/// sign; `length` counts integers, `primes` counts primes in the interval
/// (both units, since the natural size of a zone is ambiguous between the
/// two).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zone {
    pub start: u64,
    /// Exclusive.
    pub end: u64,
    pub sign: i8,
    pub length: u64,
    pub primes: u64,
}

/// Partition `[2, limit]` into maximal constant-sign zones of the bias.
/// Adjacent zones always differ in sign; signs take values -1, 0, +1.
pub fn zones(q: u64, limit: u64) -> Result<Vec<Zone>> {
    zones_with(q, limit, DEFAULT_SEGMENT_LEN, 1)
}

pub fn zones_with(q: u64, limit: u64, segment_len: u64, threads: usize) -> Result<Vec<Zone>> {
    let ch = QuadChar::new(q)?;
    if limit < 3 {
        return Err(Error::LimitTooSmall { got: limit, min: 3 });
    }
    let mut out = Vec::new();
    let mut stream = SegmentStream::new(limit, segment_len, threads);
    let mut primes = Vec::new();
    let mut delta = 0i64;
    let mut cur_sign = 0i8;
    let mut run_start = 2u64;
    let mut run_primes = 0u64;
    while let Some(seg) = stream.next_segment() {
        primes.clear();
        seg.append_primes(&mut primes);
        for &p in &primes {
            if let Some(w) = ch.weight_of(p % q) {
                delta -= i64::from(w);
            }
            let s = delta.signum() as i8;
            if p == 2 {
                // delta(2) fixes the sign of the leading zone
                cur_sign = s;
            } else if s != cur_sign {
                out.push(Zone {
                    start: run_start,
                    end: p,
                    sign: cur_sign,
                    length: p - run_start,
                    primes: run_primes,
                });
                run_start = p;
                cur_sign = s;
                run_primes = 0;
            }
            run_primes += 1;
        }
    }
    out.push(Zone {
        start: run_start,
        end: limit + 1,
        sign: cur_sign,
        length: limit + 1 - run_start,
        primes: run_primes,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q4_small_structure() {
        // delta(.,4) walk: 0 on [2,3), then 1, 0, 1, 2, ... with zero dips
        // at 5, 17, 41.
        let zs = zones(4, 100).unwrap();
        assert_eq!(zs[0], Zone { start: 2, end: 3, sign: 0, length: 1, primes: 1 });
        assert_eq!(zs[1].start, 3);
        assert_eq!(zs[1].sign, 1);
        assert_eq!(zs[1].end, 5);
        assert_eq!(zs[2], Zone { start: 5, end: 7, sign: 0, length: 2, primes: 1 });
        // covers the whole domain, contiguously, alternating signs
        for w in zs.windows(2) {
            assert_eq!(w[0].end, w[1].start);
            assert_ne!(w[0].sign, w[1].sign);
        }
        assert_eq!(zs.last().unwrap().end, 101);
        // no negative zone below the first crossing
        assert!(zs.iter().all(|z| z.sign >= 0));
    }

    #[test]
    fn q4_no_negative_zone_below_first_crossing() {
        let zs = zones(4, 10_000).unwrap();
        assert!(zs.iter().all(|z| z.sign >= 0));
        let total: u64 = zs.iter().map(|z| z.length).sum();
        assert_eq!(total, 10_000 - 1);
        let prime_total: u64 = zs.iter().map(|z| z.primes).sum();
        assert_eq!(prime_total, crate::primes::pi(10_000));
    }

    #[test]
    fn odd_modulus_first_zone_starts_at_two() {
        // 2 is a non-residue mod 13, so delta(2, 13) = +1.
        let zs = zones(13, 50).unwrap();
        assert_eq!(zs[0].start, 2);
        assert_eq!(zs[0].sign, 1);
    }

    #[test]
    fn q13_first_negative_zones() {
        // delta(x,13) < 0 exactly on [2083, 2087) and [2089, 2099) below 1e4,
        // separated by the zero plateau at the prime 2087.
        let zs = zones(13, 10_000).unwrap();
        let negs: Vec<(u64, u64)> = zs
            .iter()
            .filter(|z| z.sign == -1)
            .map(|z| (z.start, z.end))
            .collect();
        assert_eq!(negs[0], (2_083, 2_087));
        assert_eq!(negs[1], (2_089, 2_099));
    }

    #[test]
    fn length_is_end_minus_start() {
        for z in zones(13, 3000).unwrap() {
            assert_eq!(z.length, z.end - z.start);
        }
    }

    #[test]
    fn rejects_unsupported() {
        assert!(zones(9, 100).is_err());
        assert!(zones(4, 2).is_err());
    }
}
