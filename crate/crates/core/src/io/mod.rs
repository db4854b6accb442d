//! File formats, the instance generator, the oracle cross-check driver and
//! the benchmark harness.

pub mod band_file;
pub mod bench;
pub mod generate;
pub mod text;
pub mod verify;

pub use band_file::{load_band_file, save_band_file, BandFile, FORMAT_TAG};
pub use bench::{bench, BenchConfig, BenchError, BenchRecord, BenchReport, Mode, EXACT_CAP};
pub use generate::{generate_matrix, GenSpec, GenerateError};
pub use text::{dense_to_csv_string, parse_dense_csv, parse_rhs, read_dense_csv, read_rhs, write_dense_csv};
pub use verify::{verify, VerifyOptions, VerifyReport};

use crate::hepta::StructureError;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("field {field}, entry {index}: {message}")]
    Value { field: String, index: usize, message: String },
    #[error("unsupported format tag {0:?} (expected \"hepta-band-v1\")")]
    UnsupportedFormat(String),
    #[error("csv: {0}")]
    Csv(csv::Error),
    #[error(transparent)]
    Structure(#[from] StructureError),
}
