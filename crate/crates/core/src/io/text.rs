//! Dense CSV matrices and right-hand-side files, both of exact rational tokens.

use std::fs;
use std::io::Write;
use std::path::Path;

use super::IoError;
use crate::dense::DenseMatrix;
use crate::scalars::Rational;

pub fn write_dense_csv<W: Write>(m: &DenseMatrix<Rational>, out: W) -> Result<(), IoError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    for row in m.iter_rows() {
        w.write_record(row.iter().map(Rational::to_string)).map_err(IoError::Csv)?;
    }
    w.flush().map_err(|e| IoError::Io { path: "<output>".into(), source: e })
}

pub fn dense_to_csv_string(m: &DenseMatrix<Rational>) -> String {
    let mut buf = Vec::new();
    write_dense_csv(m, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

pub fn parse_dense_csv(text: &str) -> Result<DenseMatrix<Rational>, IoError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (r, record) in reader.records().enumerate() {
        let record = record.map_err(IoError::Csv)?;
        let row = record
            .iter()
            .enumerate()
            .map(|(c, tok)| {
                tok.parse::<Rational>().map_err(|e| IoError::Value {
                    field: format!("row {}", r + 1),
                    index: c + 1,
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    DenseMatrix::from_rows(rows).map_err(|e| IoError::Parse { line: 0, column: 0, message: format!("ragged csv: {e}") })
}

pub fn read_dense_csv(path: impl AsRef<Path>) -> Result<DenseMatrix<Rational>, IoError> {
    parse_dense_csv(&read(path.as_ref())?)
}

/// One rational per non-blank line.
pub fn parse_rhs(text: &str) -> Result<Vec<Rational>, IoError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.parse::<Rational>().map_err(|e| IoError::Parse { line: i + 1, column: 1, message: e.to_string() })
        })
        .collect()
}

pub fn read_rhs(path: impl AsRef<Path>) -> Result<Vec<Rational>, IoError> {
    parse_rhs(&read(path.as_ref())?)
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|e| IoError::Io { path: path.display().to_string(), source: e })
}
