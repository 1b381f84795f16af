//! CSV emission helpers.

use std::io::Write;
use std::path::PathBuf;

use crate::Failure;

/// Fixed-precision scientific form: locale-independent, `.` decimal,
/// `precision` significant digits. Identical configs produce byte-identical
/// files.
pub fn fmt_real(v: f64, precision: u32) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{:.*e}", precision as usize - 1, v)
}

/// Line-buffered CSV sink: a file when `--out` is given, stdout otherwise.
pub struct Csv {
    out: Box<dyn Write>,
    pub precision: u32,
}

impl Csv {
    pub fn create(path: &Option<PathBuf>, precision: u32) -> Result<Csv, Failure> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(std::io::BufWriter::new(
                std::fs::File::create(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
            )),
            None => Box::new(std::io::BufWriter::new(std::io::stdout())),
        };
        Ok(Csv { out, precision })
    }

    pub fn line(&mut self, fields: &[String]) -> Result<(), Failure> {
        let row = fields.join(",");
        writeln!(self.out, "{row}").map_err(|e| Failure::Io(e.to_string()))
    }

    pub fn header(&mut self, header: &str) -> Result<(), Failure> {
        writeln!(self.out, "{header}").map_err(|e| Failure::Io(e.to_string()))
    }

    pub fn real(&self, v: f64) -> String {
        fmt_real(v, self.precision)
    }

    pub fn finish(mut self) -> Result<(), Failure> {
        self.out.flush().map_err(|e| Failure::Io(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::fmt_real;

    #[test]
    fn fixed_width_scientific() {
        assert_eq!(fmt_real(1246.137, 12), "1.24613700000e3");
        assert_eq!(fmt_real(0.0, 12), "0.00000000000e0");
        assert_eq!(fmt_real(-0.0, 6), "0.00000e0");
        assert_eq!(fmt_real(1.0 / 3.0, 6), "3.33333e-1");
    }
}
