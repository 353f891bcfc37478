use std::io::Write;

use serde::Serialize;

use crate::args::{Format, OutputArgs};
use crate::error::CliError;

/// Serializes `rows` as CSV (header from the field names) or a JSON array.
pub fn render<T: Serialize>(rows: &[T], format: Format) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, rows)?;
            buf.push(b'\n');
        }
    }
    Ok(buf)
}

pub fn emit<T: Serialize>(rows: &[T], output: &OutputArgs) -> Result<(), CliError> {
    let buf = render(rows, output.format)?;
    match &output.out {
        Some(path) => std::fs::write(path, &buf)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&buf)?;
            out.flush()?;
            Ok(())
        }
    }
}
