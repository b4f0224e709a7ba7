use std::io::{self, Write};

use serde::Serialize;
use subtuple_core::PValueReport;

use crate::args::FormatArg;

pub fn write_report(
    out: &mut dyn Write,
    report: &PValueReport,
    format: FormatArg,
) -> io::Result<()> {
    match format {
        FormatArg::Json => write_json_pretty(out, report),
        FormatArg::Rational => writeln!(out, "{}", report.p_rational),
        FormatArg::Decimal => writeln!(out, "{}", report.p_decimal),
    }
}

pub fn write_json_pretty<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

pub fn write_json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

/// Left-aligned columns separated by two spaces; no trailing whitespace.
pub fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let mut line = String::new();
        for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  "));
            }
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_table() {
        let mut buf = Vec::new();
        write_table(
            &mut buf,
            &["z", "p"],
            &[
                vec!["0".into(), "1/1".into()],
                vec!["10".into(), "4/15".into()],
            ],
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "z   p\n0   1/1\n10  4/15\n"
        );
    }
}
