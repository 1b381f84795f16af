//! Scanning and aggregation over the bias: champions, the overall bias
//! measure, logarithmic densities, sign zones, and zero-table diagnostics.

mod density;
mod explicit;
mod scan;
mod zones;

pub use density::{log_density, log_density_with, LogDensity};
pub use explicit::{
    explicit_delta, explicit_delta_truncated, variance, variance_truncated, ZeroTable,
};
pub use scan::{
    bias_sum, bias_sum_with, champions, champions_with, scan, scan_with, verify_positivity,
    BiasScan, ChampionRecord, PositivityReport, SamplePolicy, ScanOptions,
};
pub use zones::{zones, zones_with, Zone};
