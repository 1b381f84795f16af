/// Kahan-compensated accumulator.
///
/// psi tallies add 10^7+ logarithms; plain summation would drift past the
/// 1e-12 relative error the tally contract promises.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn add(&mut self, v: f64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }

    /// Fold another accumulator in, keeping its pending correction.
    pub fn merge(&mut self, other: &KahanSum) {
        self.add(other.sum);
        self.add(-other.carry);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensates_small_terms() {
        let mut k = KahanSum::default();
        k.add(1e16);
        for _ in 0..10_000 {
            k.add(0.1);
        }
        k.add(-1e16);
        assert!((k.value() - 1000.0).abs() < 1e-6);
    }

    #[test]
    fn merge_matches_sequential() {
        let vals: Vec<f64> = (1..=1000).map(|i| (i as f64).ln()).collect();
        let mut whole = KahanSum::default();
        for &v in &vals {
            whole.add(v);
        }
        let (mut a, mut b) = (KahanSum::default(), KahanSum::default());
        for &v in &vals[..500] {
            a.add(v);
        }
        for &v in &vals[500..] {
            b.add(v);
        }
        a.merge(&b);
        assert!((a.value() - whole.value()).abs() <= 1e-12 * whole.value());
    }
}
