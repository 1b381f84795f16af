//! Single-pass bias scanning: streams `BiasPoint`s at primes, enumerates
//! champions, and folds the overall bias measure `b(q)`.
//!
//! The scan walks prime powers in value order and keeps per-class state
//! (`pi`, `psi`, cached Robin B). Only the touched class is recomputed per
//! event, so a full pass to 1e7 costs one `li` evaluation per prime power.

use crate::bias::{robin_b_from_parts, BiasPoint, QuadChar};
use crate::primes::{PrimePower, PrimePowerStream, DEFAULT_SEGMENT_LEN};
use crate::{Error, KahanSum, Result};

/// What a scan emits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplePolicy {
    /// A point at every prime coprime to the modulus.
    AllPrimes,
    /// Points only where the signed bias reaches a new record level.
    Champions,
}

/// Knobs for a scan pass.
#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    /// Sieve segment length in integers.
    pub segment_len: u64,
    /// Worker threads for look-ahead sieving (results are order-merged, so
    /// output does not depend on this).
    pub threads: usize,
    /// Materialize per-class B values on each emitted point.
    pub class_values: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            segment_len: DEFAULT_SEGMENT_LEN,
            threads: 1,
            class_values: true,
        }
    }
}

/// First prime at which the signed bias reaches the record level `epsilon * n`.
#[derive(Clone, Debug)]
pub struct ChampionRecord {
    pub n: u64,
    pub epsilon: i8,
    pub x: u64,
    pub delta_reg: f64,
    pub normalized: f64,
}

/// Streaming bias scan; see [`scan`].
pub struct BiasScan {
    ch: QuadChar,
    events: PrimePowerStream,
    policy: SamplePolicy,
    class_values: bool,
    counts: Vec<u64>,
    psi: Vec<KahanSum>,
    b: Vec<f64>,
    delta: i64,
    pos_level: i64,
    neg_level: i64,
}

impl BiasScan {
    fn new(q: u64, limit: u64, policy: SamplePolicy, opts: ScanOptions) -> Result<Self> {
        let ch = QuadChar::new(q)?;
        if limit < 3 {
            return Err(Error::LimitTooSmall { got: limit, min: 3 });
        }
        let events = PrimePowerStream::with_options(limit, opts.segment_len, opts.threads)?;
        let n = ch.classes.len();
        Ok(BiasScan {
            ch,
            events,
            policy,
            class_values: opts.class_values,
            counts: vec![0; n],
            psi: vec![KahanSum::default(); n],
            b: vec![0.0; n],
            delta: 0,
            pos_level: 0,
            neg_level: 0,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.ch.q
    }

    /// Number of quadratic-residue classes (the normalizer of `delta'`).
    pub fn residue_class_count(&self) -> u64 {
        self.ch.r_count
    }

    fn delta_reg_now(&self) -> f64 {
        let mut sum = 0.0;
        for (i, &w) in self.ch.weights.iter().enumerate() {
            sum += f64::from(w) * self.b[i];
        }
        sum / self.ch.r_count as f64
    }

    fn apply(&mut self, pp: &PrimePower) -> Option<usize> {
        if self.ch.q.is_multiple_of(pp.p) {
            return None;
        }
        let slot = self
            .ch
            .slot_of(pp.value % self.ch.q)
            .expect("power coprime to q lies in a reduced class");
        self.psi[slot].add(pp.logp);
        if pp.k == 1 {
            self.counts[slot] += 1;
            self.delta -= i64::from(self.ch.weights[slot]);
        }
        // Scan arguments of li jump from 0 straight past 1.38, clear of the
        // singular window, so this cannot fail for x >= 2.
        self.b[slot] = robin_b_from_parts(self.ch.phi, self.psi[slot].value(), self.counts[slot])
            .expect("li argument gap");
        Some(slot)
    }

    fn is_new_record(&mut self) -> bool {
        if self.delta > self.pos_level {
            assert_eq!(
                self.delta,
                self.pos_level + 1,
                "champion level skipped; bias steps must be +-1"
            );
            self.pos_level = self.delta;
            true
        } else if self.delta < self.neg_level {
            assert_eq!(
                self.delta,
                self.neg_level - 1,
                "champion level skipped; bias steps must be +-1"
            );
            self.neg_level = self.delta;
            true
        } else {
            false
        }
    }

    fn point_at(&self, x: u64) -> BiasPoint {
        let delta_reg = self.delta_reg_now();
        let b_by_class = if self.class_values {
            self.ch
                .classes
                .iter()
                .copied()
                .zip(self.b.iter().copied())
                .collect()
        } else {
            Vec::new()
        };
        BiasPoint {
            x,
            delta: self.delta,
            delta_reg,
            normalized: delta_reg / (x as f64).sqrt(),
            b_by_class,
        }
    }
}

impl Iterator for BiasScan {
    type Item = BiasPoint;

    fn next(&mut self) -> Option<BiasPoint> {
        while let Some(pp) = self.events.next() {
            let applied = self.apply(&pp);
            if pp.k != 1 || applied.is_none() {
                continue;
            }
            let emit = match self.policy {
                SamplePolicy::AllPrimes => true,
                SamplePolicy::Champions => self.is_new_record(),
            };
            if emit {
                return Some(self.point_at(pp.value));
            }
        }
        None
    }
}

/// Stream bias points for modulus `q` up to `limit` (inclusive) under the
/// given emission policy. Requires `limit >= 3` and q = 4 or an odd prime.
pub fn scan(q: u64, limit: u64, policy: SamplePolicy) -> Result<BiasScan> {
    BiasScan::new(q, limit, policy, ScanOptions::default())
}

/// [`scan`] with explicit options.
pub fn scan_with(q: u64, limit: u64, policy: SamplePolicy, opts: ScanOptions) -> Result<BiasScan> {
    BiasScan::new(q, limit, policy, opts)
}

/// All champion records `delta(x_n, q) = epsilon * n` with `x_n <= limit`,
/// in increasing n.
pub fn champions(q: u64, limit: u64, epsilon: i8) -> Result<Vec<ChampionRecord>> {
    champions_with(q, limit, epsilon, ScanOptions::default())
}

pub fn champions_with(
    q: u64,
    limit: u64,
    epsilon: i8,
    opts: ScanOptions,
) -> Result<Vec<ChampionRecord>> {
    if epsilon != 1 && epsilon != -1 {
        return Err(Error::BadEpsilon(epsilon));
    }
    let mut out = Vec::new();
    for pt in scan_with(q, limit, SamplePolicy::Champions, opts)? {
        let eps: i8 = if pt.delta > 0 { 1 } else { -1 };
        if eps == epsilon {
            out.push(ChampionRecord {
                n: pt.delta.unsigned_abs(),
                epsilon: eps,
                x: pt.x,
                delta_reg: pt.delta_reg,
                normalized: pt.normalized,
            });
        }
    }
    Ok(out)
}

/// Overall bias measure: the champion sum `sum_{n,eps} eps * n / x_n` over
/// both signs, divided by the number of quadratic-residue classes (1 for
/// q = 4, (p-1)/2 for an odd prime p). The per-class normalization makes the
/// measure comparable across moduli.
pub fn bias_sum(q: u64, limit: u64) -> Result<f64> {
    bias_sum_with(q, limit, ScanOptions::default())
}

pub fn bias_sum_with(q: u64, limit: u64, opts: ScanOptions) -> Result<f64> {
    let opts = ScanOptions {
        class_values: false,
        ..opts
    };
    let scan = scan_with(q, limit, SamplePolicy::Champions, opts)?;
    let r_count = scan.residue_class_count();
    let mut sum = KahanSum::default();
    for pt in scan {
        sum.add(pt.delta as f64 / pt.x as f64);
    }
    Ok(sum.value() / r_count as f64)
}

/// Outcome of a GRH positivity sweep; see [`verify_positivity`].
#[derive(Clone, Debug)]
pub struct PositivityReport {
    pub q: u64,
    pub limit: u64,
    /// First prime with both a residue-class and a non-residue-class prime
    /// seen; the check starts here (before it, one side is empty and
    /// `delta'` is degenerate).
    pub start_x: Option<u64>,
    /// Primes checked from `start_x` on.
    pub checked: u64,
    pub min_delta_reg: f64,
    pub min_at: u64,
    /// First prime with `delta' <= 0`, if any.
    pub violation: Option<(u64, f64)>,
    /// Observed range of `delta'/sqrt(x) * log x` over checked primes with
    /// x >= 1000; the asymptotic value of that ratio is 2.
    pub norm_ratio_range: Option<(f64, f64)>,
}

/// Scan to `limit` and check `delta'(x, q) > 0` at every prime from the
/// first prime where both class sides are populated. Stops at the first
/// violation.
pub fn verify_positivity(q: u64, limit: u64, opts: ScanOptions) -> Result<PositivityReport> {
    let opts = ScanOptions {
        class_values: false,
        ..opts
    };
    let ch = QuadChar::new(q)?;
    let mut report = PositivityReport {
        q,
        limit,
        start_x: None,
        checked: 0,
        min_delta_reg: f64::INFINITY,
        min_at: 0,
        violation: None,
        norm_ratio_range: None,
    };
    let (mut r_seen, mut n_seen) = (false, false);
    for pt in scan_with(q, limit, SamplePolicy::AllPrimes, opts)? {
        let w = ch.weight_of(pt.x % q).expect("emitted primes are coprime");
        if w > 0 {
            r_seen = true;
        } else {
            n_seen = true;
        }
        if report.start_x.is_none() {
            if !(r_seen && n_seen) {
                continue;
            }
            report.start_x = Some(pt.x);
        }
        report.checked += 1;
        if pt.delta_reg < report.min_delta_reg {
            report.min_delta_reg = pt.delta_reg;
            report.min_at = pt.x;
        }
        if pt.x >= 1000 {
            let ratio = pt.normalized * (pt.x as f64).ln();
            report.norm_ratio_range = Some(match report.norm_ratio_range {
                None => (ratio, ratio),
                Some((lo, hi)) => (lo.min(ratio), hi.max(ratio)),
            });
        }
        if pt.delta_reg <= 0.0 {
            report.violation = Some((pt.x, pt.delta_reg));
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_emits_all_coprime_primes() {
        let xs: Vec<u64> = scan(4, 10, SamplePolicy::AllPrimes)
            .unwrap()
            .map(|p| p.x)
            .collect();
        assert_eq!(xs, vec![3, 5, 7]);

        let xs: Vec<u64> = scan(11, 12, SamplePolicy::AllPrimes)
            .unwrap()
            .map(|p| p.x)
            .collect();
        assert_eq!(xs, vec![2, 3, 5, 7]); // 11 itself divides q
    }

    #[test]
    fn scan_rejects_bad_input() {
        assert!(matches!(
            scan(6, 100, SamplePolicy::AllPrimes),
            Err(Error::UnsupportedModulus(6))
        ));
        assert!(matches!(
            scan(4, 2, SamplePolicy::AllPrimes),
            Err(Error::LimitTooSmall { .. })
        ));
    }

    #[test]
    fn first_champions_q4() {
        let recs = champions(4, 1000, 1).unwrap();
        let pairs: Vec<(u64, u64)> = recs.iter().map(|r| (r.n, r.x)).collect();
        assert_eq!(
            pairs,
            vec![
                (1, 3),
                (2, 11),
                (3, 71),
                (4, 83),
                (5, 223),
                (6, 227),
                (7, 503),
                (8, 751)
            ]
        );
        assert!(champions(4, 1000, -1).unwrap().is_empty());
        assert!(matches!(champions(4, 1000, 0), Err(Error::BadEpsilon(0))));
    }

    #[test]
    fn champion_points_match_single_shot_delta_reg() {
        use crate::bias::delta_reg;
        use crate::primes::tally_to;
        for rec in champions(4, 2000, 1).unwrap() {
            let t = tally_to(rec.x, 4).unwrap();
            let want = delta_reg(rec.x, 4, &t).unwrap();
            assert!(
                (rec.delta_reg - want).abs() <= 1e-9 * want.abs().max(1.0),
                "x={}: scan {} vs direct {}",
                rec.x,
                rec.delta_reg,
                want
            );
        }
    }

    #[test]
    fn scan_points_carry_class_values() {
        let pt = scan(4, 100, SamplePolicy::AllPrimes)
            .unwrap()
            .last()
            .unwrap();
        assert_eq!(pt.x, 97);
        assert_eq!(pt.b_by_class.len(), 2);
        assert_eq!(pt.b_by_class[0].0, 1);
        assert_eq!(pt.b_by_class[1].0, 3);
        let opts = ScanOptions {
            class_values: false,
            ..Default::default()
        };
        let pt = scan_with(4, 100, SamplePolicy::AllPrimes, opts)
            .unwrap()
            .last()
            .unwrap();
        assert!(pt.b_by_class.is_empty());
    }

    #[test]
    fn bias_sum_single_champion() {
        let b = bias_sum(4, 3).unwrap();
        assert!((b - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn bias_sum_matches_champion_lists() {
        let limit = 50_000;
        let plus = champions(4, limit, 1).unwrap();
        let minus = champions(4, limit, -1).unwrap();
        let manual: f64 = plus
            .iter()
            .map(|r| r.n as f64 / r.x as f64)
            .chain(minus.iter().map(|r| -(r.n as f64) / r.x as f64))
            .sum();
        let got = bias_sum(4, limit).unwrap();
        assert!((got - manual).abs() < 1e-12, "{got} vs {manual}");
    }

    #[test]
    fn scan_deterministic_across_threads_and_segments() {
        let base: Vec<(u64, i64, u64)> = scan(13, 30_000, SamplePolicy::Champions)
            .unwrap()
            .map(|p| (p.x, p.delta, p.delta_reg.to_bits()))
            .collect();
        for (seg, threads) in [(1 << 12, 4), (1 << 15, 3), (1 << 20, 2)] {
            let opts = ScanOptions {
                segment_len: seg,
                threads,
                class_values: true,
            };
            let got: Vec<(u64, i64, u64)> = scan_with(13, 30_000, SamplePolicy::Champions, opts)
                .unwrap()
                .map(|p| (p.x, p.delta, p.delta_reg.to_bits()))
                .collect();
            assert_eq!(got, base, "seg={seg} threads={threads}");
        }
    }

    #[test]
    fn verify_small_ranges() {
        let rep = verify_positivity(4, 10_000, ScanOptions::default()).unwrap();
        assert_eq!(rep.start_x, Some(5));
        assert!(rep.violation.is_none());
        assert!(rep.min_delta_reg > 0.0);
        // q = 163: residue classes fill late; the first twelve primes are
        // all non-residues mod 163.
        let rep = verify_positivity(163, 10_000, ScanOptions::default()).unwrap();
        assert_eq!(rep.start_x, Some(41));
        assert!(rep.violation.is_none());
    }
}
