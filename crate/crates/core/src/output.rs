//! Spectrum table output.
//!
//! Comma-separated, one header line, then one row per spectrum entry.
//! Numbers use 12 significant digits in scientific notation; failed solves
//! print `NaN` values and carry the `solver_error` flag.

use std::io::{self, Write};

use crate::sweep::{ILSpectrum, SpectrumEntry};

pub const HEADER: &str = "frequency_hz,il_db,p_total_re,p_total_im,p_ref_re,p_ref_im,flags";

fn number(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn format_row(entry: &SpectrumEntry) -> String {
    [
        number(entry.frequency_hz),
        number(entry.il_db),
        number(entry.p_total.re),
        number(entry.p_total.im),
        number(entry.p_reference.re),
        number(entry.p_reference.im),
        entry.flags.label(),
    ]
    .join(",")
}

pub fn write_spectrum<W: Write>(mut out: W, spectrum: &ILSpectrum) -> io::Result<()> {
    writeln!(out, "{HEADER}")?;
    for entry in &spectrum.entries {
        writeln!(out, "{}", format_row(entry))?;
    }
    out.flush()
}
