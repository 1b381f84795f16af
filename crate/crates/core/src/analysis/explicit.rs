//! Zero tables and the truncated explicit-formula machinery.

use crate::{Error, KahanSum, Result};
use std::path::Path;

/// Ordered positive imaginary parts of non-trivial zeros of zeta or a
/// Dirichlet L-function, loaded from a text table.
///
/// File format: one positive decimal per line, strictly increasing;
/// `#`-prefixed comment lines allowed anywhere; the first non-comment line
/// may be `label: <text>` naming the function the zeros belong to.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    label: Option<String>,
    gammas: Vec<f64>,
}

impl ZeroTable {
    /// Build a table from ordinates, enforcing positivity and strict order.
    pub fn new(label: Option<String>, gammas: Vec<f64>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::EmptyZeroTable);
        }
        let mut prev = 0.0f64;
        for (i, &g) in gammas.iter().enumerate() {
            if g.is_nan() || g <= 0.0 {
                return Err(Error::ZeroTable {
                    line: i + 1,
                    reason: format!("ordinate {g} is not positive"),
                });
            }
            if g <= prev {
                return Err(Error::ZeroTable {
                    line: i + 1,
                    reason: format!("ordinate {g} does not increase past {prev}"),
                });
            }
            prev = g;
        }
        Ok(ZeroTable { label, gammas })
    }

    /// Parse the text table format, reporting 1-based line numbers on error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut label = None;
        let mut gammas = Vec::new();
        let mut lines_with_numbers = Vec::new();
        let mut saw_value = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            if !saw_value && gammas.is_empty() && label.is_none() {
                if let Some(rest) = s.strip_prefix("label:") {
                    label = Some(rest.trim().to_string());
                    continue;
                }
            }
            saw_value = true;
            let v: f64 = s.parse().map_err(|_| Error::ZeroTable {
                line,
                reason: format!("expected a positive decimal, got {s:?}"),
            })?;
            if v.is_nan() || v <= 0.0 {
                return Err(Error::ZeroTable {
                    line,
                    reason: format!("ordinate {v} is not positive"),
                });
            }
            if let Some(&(prev, prev_line)) = lines_with_numbers.last() {
                if v <= prev {
                    return Err(Error::ZeroTable {
                        line,
                        reason: format!(
                            "ordinate {v} does not increase past {prev} (line {prev_line})"
                        ),
                    });
                }
            }
            lines_with_numbers.push((v, line));
            gammas.push(v);
        }
        if gammas.is_empty() {
            return Err(Error::EmptyZeroTable);
        }
        Ok(ZeroTable { label, gammas })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }
}

/// Truncated explicit-formula prediction of the bias `li(x) - pi(x)`:
///
/// `sqrt(x)/log x * (1 + 2 sum_gamma sin(gamma log x + alpha_gamma) /
/// sqrt(1/4 + gamma^2))` with `alpha_gamma = arccot(2 gamma)`, summed over
/// the table's ordinates.
pub fn explicit_delta(x: f64, zeros: &ZeroTable) -> Result<f64> {
    explicit_delta_truncated(x, zeros, zeros.len())
}

/// [`explicit_delta`] using only the first `terms` ordinates (`terms` is
/// clamped to the table length; 0 terms gives the smooth factor
/// `sqrt(x)/log x`).
pub fn explicit_delta_truncated(x: f64, zeros: &ZeroTable, terms: usize) -> Result<f64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::LimitTooSmall {
            got: x as u64,
            min: 2,
        });
    }
    if zeros.is_empty() {
        return Err(Error::EmptyZeroTable);
    }
    let log_x = x.ln();
    let mut osc = KahanSum::default();
    for &g in &zeros.gammas[..terms.min(zeros.len())] {
        let alpha = (1.0 / (2.0 * g)).atan();
        osc.add((g * log_x + alpha).sin() / (0.25 + g * g).sqrt());
    }
    Ok(x.sqrt() / log_x * (1.0 + 2.0 * osc.value()))
}

/// Truncated variance `V = sum_{gamma > 0} 2 / (1/4 + gamma^2)` over the
/// table.
pub fn variance(zeros: &ZeroTable) -> Result<f64> {
    variance_truncated(zeros, zeros.len())
}

pub fn variance_truncated(zeros: &ZeroTable, terms: usize) -> Result<f64> {
    if zeros.is_empty() {
        return Err(Error::EmptyZeroTable);
    }
    let mut v = KahanSum::default();
    for &g in &zeros.gammas[..terms.min(zeros.len())] {
        v.add(2.0 / (0.25 + g * g));
    }
    Ok(v.value())
}
