//! Principal-value logarithmic integral.
//!
//! `li(y) = PV integral_0^y dt / log t`, evaluated as `Ei(log y)`. The
//! exponential integral is computed by three forms with fixed switch-overs:
//!
//! * `|t| <= 1.3` and `0 < t <= 44`: the power series
//!   `Ei(t) = gamma + log|t| + sum_{k>=1} t^k / (k * k!)`. For t > 0 all
//!   terms are positive, so there is no cancellation and the series stays
//!   accurate up to the switch-over.
//! * `t < -1.3`: `Ei(t) = -E1(-t)` with E1 from the standard continued
//!   fraction (modified Lentz).
//! * `t > 44`: the asymptotic expansion `e^t/t * sum k!/t^k`, truncated at
//!   its smallest term; past t = 44 that truncation error is below f64
//!   resolution. Arguments y <= 1e18 (t <= 41.5) never reach this branch.

use crate::{Error, Result};

const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// Principal-value logarithmic integral `li(y)`.
///
/// Defined for `y > 0`, `y != 1`; relative accuracy is about 1e-13 away from
/// the Ramanujan–Soldner root near y = 1.4513692, where only absolute
/// accuracy is meaningful.
pub fn logint(y: f64) -> Result<f64> {
    if y.is_nan() || y <= 0.0 {
        return Err(Error::LogintDomain(y));
    }
    if y == 1.0 {
        return Err(Error::LogintDomain(y));
    }
    Ok(ei(y.ln()))
}

fn ei(t: f64) -> f64 {
    debug_assert!(t != 0.0);
    if t > 44.0 {
        ei_asymptotic(t)
    } else if t >= -1.3 {
        EULER_MASCHERONI + t.abs().ln() + power_series(t)
    } else {
        -e1_continued_fraction(-t)
    }
}

/// `sum_{k>=1} t^k / (k * k!)`; alternating for t < 0 (only used for |t| <= 1.3).
fn power_series(t: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    for k in 1..=400u32 {
        term *= t / f64::from(k);
        let add = term / f64::from(k);
        sum += add;
        if add.abs() < sum.abs() * 1e-17 + 1e-300 {
            break;
        }
    }
    sum
}

/// `E1(z)` for z > 1.3 by the continued fraction
/// `e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))`, evaluated with the
/// modified Lentz recurrence.
fn e1_continued_fraction(z: f64) -> f64 {
    if z > 700.0 {
        return 0.0; // e^{-z} underflows
    }
    let tiny = 1e-290;
    let mut b = z + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=200u32 {
        let a = -f64::from(i) * f64::from(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-z).exp()
}

/// Divergent asymptotic series truncated at its smallest term; only valid for
/// large t (used for t > 44 where the truncation error is below 1e-16
/// relative).
fn ei_asymptotic(t: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        let next = term * k / t;
        if next >= term || next < 1e-18 {
            break;
        }
        term = next;
        sum += term;
        k += 1.0;
    }
    t.exp() / t * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: adaptive Simpson quadrature of the entire
    /// integrand (e^s - 1)/s on [0, t], plus gamma + log|t|. Exercises the
    /// defining integral rather than the series/continued-fraction forms.
    fn li_oracle(y: f64) -> f64 {
        let t = y.ln();
        let f = |s: f64| if s == 0.0 { 1.0 } else { s.exp_m1() / s };
        let (lo, hi) = if t < 0.0 { (t, 0.0) } else { (0.0, t) };
        let integral = adaptive_simpson(&f, lo, hi, 1e-13 * (f(lo).abs() + f(hi).abs()), 60);
        let signed = if t < 0.0 { -integral } else { integral };
        EULER_MASCHERONI + t.abs().ln() + signed
    }

    fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, eps: f64, depth: u32) -> f64 {
        fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
            let m = 0.5 * (a + b);
            let fm = f(m);
            ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
        }
        #[allow(clippy::too_many_arguments)]
        fn rec(
            f: &dyn Fn(f64) -> f64,
            a: f64,
            fa: f64,
            b: f64,
            fb: f64,
            whole: f64,
            m: f64,
            fm: f64,
            eps: f64,
            depth: u32,
        ) -> f64 {
            let (left, lm, flm) = simpson(f, a, fa, m, fm);
            let (right, rm, frm) = simpson(f, m, fm, b, fb);
            if depth == 0 || (left + right - whole).abs() <= 15.0 * eps {
                left + right + (left + right - whole) / 15.0
            } else {
                rec(f, a, fa, m, fm, left, lm, flm, eps / 2.0, depth - 1)
                    + rec(f, m, fm, b, fb, right, rm, frm, eps / 2.0, depth - 1)
            }
        }
        let (fa, fb) = (f(a), f(b));
        let (whole, m, fm) = simpson(f, a, fa, b, fb);
        rec(f, a, fa, b, fb, whole, m, fm, eps.max(1e-300), depth)
    }

    // Frozen high-precision reference values.
    const REFS: &[(f64, f64)] = &[
        (0.01, -0.0018297434996255157),
        (0.5, -0.37867104306108798),
        (0.9, -1.7758006834235252),
        (1.1, -1.6757728303191997),
        (1.5, 0.12506498631529636),
        (2.0, 1.045_163_780_117_493),
        (3.0, 2.163_588_594_667_192),
        (5.0, 3.634_588_310_032_652),
        (10.0, 6.165_599_504_787_298),
        (100.0, 30.126_141_584_079_63),
        (1.0e4, 1246.1372158993885),
        (1.0e6, 78_627.549_159_462_19),
        (1.0e10, 455_055_614.586_623_1),
        (1.0e15, 29844571475287.581),
        (1.0e18, 24739954309690415.0),
    ];

    #[test]
    fn matches_reference_values() {
        for &(y, want) in REFS {
            let got = logint(y).unwrap();
            let rel = ((got - want) / want).abs();
            assert!(rel < 1e-12, "li({y}) = {got}, want {want}, rel {rel:.2e}");
        }
    }

    #[test]
    fn matches_quadrature_oracle() {
        for &(y, _) in REFS {
            let got = logint(y).unwrap();
            let want = li_oracle(y);
            let rel = ((got - want) / want).abs();
            assert!(rel < 5e-12, "li({y}) = {got}, oracle {want}, rel {rel:.2e}");
        }
    }

    #[test]
    fn vanishes_at_ramanujan_soldner_point() {
        let mu = 1.451_369_234_883_381;
        assert!(logint(mu).unwrap().abs() < 1e-10);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(logint(1.0), Err(Error::LogintDomain(_))));
        assert!(matches!(logint(0.0), Err(Error::LogintDomain(_))));
        assert!(matches!(logint(-3.0), Err(Error::LogintDomain(_))));
        assert!(matches!(logint(f64::NAN), Err(Error::LogintDomain(_))));
    }

    #[test]
    fn near_singularity_stays_finite() {
        // The PV value blows up like log|log y| toward 1 but is defined.
        let v = logint(1.0000001).unwrap();
        assert!((v - (-15.540_879_935_472_92)).abs() < 1e-9 * 15.5);
    }

    #[test]
    fn derivative_is_reciprocal_log() {
        for &y in &[3.0, 10.0, 1.0e4] {
            let h = y * 1e-5;
            let fd = (logint(y + h).unwrap() - logint(y - h).unwrap()) / (2.0 * h);
            let want = 1.0 / y.ln();
            assert!(
                ((fd - want) / want).abs() < 1e-6,
                "d/dy li at {y}: fd {fd}, want {want}"
            );
        }
    }

    #[test]
    fn strictly_increasing_above_one() {
        let mut prev = f64::NEG_INFINITY;
        let mut y = 1.001;
        while y < 1e12 {
            let v = logint(y).unwrap();
            assert!(v > prev, "li not increasing at {y}");
            prev = v;
            y *= 1.7;
        }
    }
}
