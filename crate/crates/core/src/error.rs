//! Error type shared by the parsing, validation, and metric entry points.

use std::fmt;

/// Everything that can go wrong at the library boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed PGM data: bad magic number or an unparseable header.
    Format(String),
    /// Structurally valid PGM that this crate does not handle (e.g. 16-bit).
    Unsupported(String),
    /// Raster data ended before `width * height` samples were read.
    Truncated { expected: usize, actual: usize },
    /// An argument fell outside its documented domain.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Format(msg) => write!(f, "format error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Truncated { expected, actual } => {
                write!(f, "truncated raster: expected {expected} bytes, got {actual}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
