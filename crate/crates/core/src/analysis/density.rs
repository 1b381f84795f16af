//! Logarithmic densities of the sign regions of the bias.
//!
//! `d(A) = (1/log x) * sum_{a in A, a <= x} 1/a` over integers, evaluated in
//! one pass: the bias is constant between consecutive primes, so each
//! constant-sign run contributes a closed-form partial harmonic sum.

use crate::bias::QuadChar;
use crate::primes::{SegmentStream, DEFAULT_SEGMENT_LEN};
use crate::{Error, KahanSum, Result};

/// Log-density split of `[1, limit]` by the sign of the bias. Integers with
/// `delta = 0` land in `d_zero`, so the three parts add up to
/// `H(limit) / log(limit)` exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogDensity {
    pub d_plus: f64,
    pub d_minus: f64,
    pub d_zero: f64,
}

impl LogDensity {
    pub fn total(&self) -> f64 {
        self.d_plus + self.d_minus + self.d_zero
    }
}

const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// Partial harmonic sum `H(n) = sum_{t=1..n} 1/t`; exact loop for small n,
/// asymptotic expansion beyond (error < 1e-19 for n > 100).
pub(crate) fn harmonic(n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if n <= 100 {
        let mut h = KahanSum::default();
        for t in (1..=n).rev() {
            h.add(1.0 / t as f64);
        }
        return h.value();
    }
    let x = n as f64;
    let x2 = x * x;
    x.ln() + EULER_MASCHERONI + 1.0 / (2.0 * x) - 1.0 / (12.0 * x2) + 1.0 / (120.0 * x2 * x2)
        - 1.0 / (252.0 * x2 * x2 * x2)
}

/// `sum_{t=a..=b} 1/t`.
fn harmonic_range(a: u64, b: u64) -> f64 {
    debug_assert!(a >= 1 && a <= b);
    harmonic(b) - harmonic(a - 1)
}

/// One-pass logarithmic density of the positive, negative, and zero regions
/// of `delta(., q)` over the integers `[1, limit]`.
pub fn log_density(q: u64, limit: u64) -> Result<LogDensity> {
    log_density_with(q, limit, DEFAULT_SEGMENT_LEN, 1)
}

pub fn log_density_with(
    q: u64,
    limit: u64,
    segment_len: u64,
    threads: usize,
) -> Result<LogDensity> {
    let ch = QuadChar::new(q)?;
    if limit < 3 {
        return Err(Error::LimitTooSmall { got: limit, min: 3 });
    }
    let mut mass = [KahanSum::default(); 3]; // -1, 0, +1 at index sign+1
    let mut stream = SegmentStream::new(limit, segment_len, threads);
    let mut primes = Vec::new();
    let mut delta = 0i64;
    let mut cur_sign = 0i8;
    let mut run_start = 1u64;
    while let Some(seg) = stream.next_segment() {
        primes.clear();
        seg.append_primes(&mut primes);
        for &p in &primes {
            let Some(w) = ch.weight_of(p % q) else {
                continue;
            };
            delta -= i64::from(w);
            let s = delta.signum() as i8;
            if s != cur_sign {
                if p > run_start {
                    mass[(cur_sign + 1) as usize].add(harmonic_range(run_start, p - 1));
                }
                run_start = p;
                cur_sign = s;
            }
        }
    }
    mass[(cur_sign + 1) as usize].add(harmonic_range(run_start, limit));
    let log_limit = (limit as f64).ln();
    Ok(LogDensity {
        d_plus: mass[2].value() / log_limit,
        d_minus: mass[0].value() / log_limit,
        d_zero: mass[1].value() / log_limit,
    })
}
