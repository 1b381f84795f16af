//! Zero-table resolution: explicit path, data directory override, or the
//! bundled zeta table.

use std::path::{Path, PathBuf};

use cheb_bias_core::{Error, ZeroTable};

use crate::Failure;

/// First 100 zeta zeros, compiled in. `CHEB_BIAS_DATA` points at a directory
/// holding a replacement `zeta_zeros_100.txt` when the bundled copy should
/// be overridden.
const BUNDLED_ZETA: &str = include_str!("../data/zeta_zeros_100.txt");
pub const BUNDLED_ZETA_NAME: &str = "zeta_zeros_100.txt";

fn load_file(path: &Path) -> Result<ZeroTable, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    ZeroTable::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn load_zeros(arg: &Option<PathBuf>) -> Result<ZeroTable, Failure> {
    if let Some(path) = arg {
        return load_file(path);
    }
    if let Ok(dir) = std::env::var("CHEB_BIAS_DATA") {
        return load_file(&PathBuf::from(dir).join(BUNDLED_ZETA_NAME));
    }
    ZeroTable::parse(BUNDLED_ZETA).map_err(|e| match e {
        Error::Io(io) => Failure::Io(io.to_string()),
        other => Failure::Usage(format!("bundled zero table: {other}")),
    })
}
