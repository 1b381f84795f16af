//! Per-residue-class counts pi(x; q, a) and weighted sums psi(x; q, a).

use super::powers::{PrimePower, PrimePowerStream};
use crate::numerics::gcd;
use crate::{Error, KahanSum, Result};

/// Running counts over a range of integers `[start, frontier]`:
/// `counts[a]` primes and `psi[a]` prime-power log-weight per reduced class
/// `a mod q`, classified by the value `p^k mod q`. Prime powers of primes
/// dividing q land in `offclass_psi` so that class sums plus the off-class
/// part reconstruct the full second Chebyshev function.
///
/// Tallies over adjacent ranges merge associatively; a "canonical" tally
/// starts at 2 and carries the usual `pi(x; q, a)` / `psi(x; q, a)`.
#[derive(Clone, Debug)]
pub struct ResidueTally {
    q: u64,
    start: u64,
    frontier: u64,
    classes: Vec<u64>,
    index: Vec<u32>, // residue -> class slot, u32::MAX when not reduced
    counts: Vec<u64>,
    psi: Vec<KahanSum>,
    offclass_psi: KahanSum,
}

impl ResidueTally {
    fn empty(q: u64, start: u64, frontier: u64) -> Result<Self> {
        if q < 3 {
            return Err(Error::ModulusTooSmall(q));
        }
        if start < 2 || start > frontier || frontier > super::MAX_LIMIT {
            return Err(Error::InvalidRange {
                lo: start,
                hi: frontier,
            });
        }
        let classes: Vec<u64> = (1..q).filter(|&a| gcd(a, q) == 1).collect();
        let mut index = vec![u32::MAX; q as usize];
        for (i, &a) in classes.iter().enumerate() {
            index[a as usize] = i as u32;
        }
        let n = classes.len();
        Ok(ResidueTally {
            q,
            start,
            frontier,
            classes,
            index,
            counts: vec![0; n],
            psi: vec![KahanSum::default(); n],
            offclass_psi: KahanSum::default(),
        })
    }

    pub(crate) fn apply(&mut self, pp: &PrimePower) {
        debug_assert!(pp.value >= self.start && pp.value <= self.frontier);
        if self.q.is_multiple_of(pp.p) {
            self.offclass_psi.add(pp.logp);
            return;
        }
        let slot = self.index[(pp.value % self.q) as usize];
        debug_assert!(slot != u32::MAX, "p coprime to q implies reduced class");
        self.psi[slot as usize].add(pp.logp);
        if pp.k == 1 {
            self.counts[slot as usize] += 1;
        }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// First integer covered (2 for canonical tallies).
    pub fn start(&self) -> u64 {
        self.start
    }

    /// Last integer covered, inclusive.
    pub fn frontier(&self) -> u64 {
        self.frontier
    }

    /// Reduced classes mod q, ascending.
    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    fn slot(&self, a: u64) -> Result<usize> {
        let a = a % self.q;
        let slot = self.index[a as usize];
        if slot == u32::MAX {
            return Err(Error::NotReducedClass { a, q: self.q });
        }
        Ok(slot as usize)
    }

    /// `pi(frontier; q, a)` for reduced `a` (count of primes in range).
    pub fn count(&self, a: u64) -> Result<u64> {
        Ok(self.counts[self.slot(a)?])
    }

    /// `psi(frontier; q, a)` for reduced `a`, in nats.
    pub fn psi(&self, a: u64) -> Result<f64> {
        Ok(self.psi[self.slot(a)?].value())
    }

    /// `sum log p` over prime powers in range whose prime divides q.
    pub fn offclass_psi(&self) -> f64 {
        self.offclass_psi.value()
    }

    /// Total prime count over all reduced classes.
    pub fn total_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Total psi over all classes plus the off-class part.
    pub fn psi_total(&self) -> f64 {
        let mut k = KahanSum::default();
        for s in &self.psi {
            k.add(s.value());
        }
        k.add(self.offclass_psi.value());
        k.value()
    }

    pub fn is_canonical(&self) -> bool {
        self.start == 2
    }

    /// Combine with the tally of the adjacent range `[frontier+1, ...]`.
    pub fn merge(&self, other: &ResidueTally) -> Result<ResidueTally> {
        if self.q != other.q {
            return Err(Error::TallyModulusMismatch {
                got: other.q,
                want: self.q,
            });
        }
        if other.start != self.frontier + 1 {
            return Err(Error::NotAdjacent {
                a_lo: self.start,
                a_hi: self.frontier,
                b_lo: other.start,
                b_hi: other.frontier,
            });
        }
        let mut out = self.clone();
        out.frontier = other.frontier;
        for i in 0..out.counts.len() {
            out.counts[i] += other.counts[i];
            out.psi[i].merge(&other.psi[i]);
        }
        out.offclass_psi.merge(&other.offclass_psi);
        Ok(out)
    }
}

/// Exact `pi(limit; q, a)` and `psi(limit; q, a)` for every reduced class.
///
/// Requires `limit >= 2` and `q >= 3`.
pub fn tally_to(limit: u64, q: u64) -> Result<ResidueTally> {
    tally_to_with(limit, q, super::DEFAULT_SEGMENT_LEN, 1)
}

/// [`tally_to`] with explicit sieving options; threads parallelize segment
/// look-ahead only, the tally itself is order-independent arithmetic.
pub fn tally_to_with(limit: u64, q: u64, segment_len: u64, threads: usize) -> Result<ResidueTally> {
    if limit < 2 {
        return Err(Error::LimitTooSmall { got: limit, min: 2 });
    }
    let mut tally = ResidueTally::empty(q, 2, limit)?;
    for pp in PrimePowerStream::with_options(limit, segment_len, threads)? {
        tally.apply(&pp);
    }
    Ok(tally)
}

/// Tally of the inclusive range `[lo, hi]` only (for segment-wise builds
/// that merge afterwards).
pub fn tally_range(q: u64, lo: u64, hi: u64) -> Result<ResidueTally> {
    let mut tally = ResidueTally::empty(q, lo, hi)?;
    for pp in PrimePowerStream::new(hi)? {
        if pp.value >= lo {
            tally.apply(&pp);
        }
    }
    Ok(tally)
}
