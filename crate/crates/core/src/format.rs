//! The `MRN1` coloring file format.
//!
//! ```text
//! MRN1
//! j=<int> t=<int>[ m=<int> n=<int>]
//! colors=<E digits in {1,2}, canonical edge order>
//! ```
//!
//! UTF-8, LF line endings, no trailing whitespace, exactly one trailing
//! newline. Integers are plain decimal without sign or leading zeros.

use thiserror::Error;

use crate::coloring::{Color, TwoColoring};
use crate::shape::{MultipartiteShape, ShapeError};

pub const MAGIC: &str = "MRN1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("missing trailing newline")]
    MissingNewline,
    #[error("expected 3 lines, found {0}")]
    LineCount(usize),
    #[error("carriage return in input")]
    CarriageReturn,
    #[error("bad magic line {0:?}")]
    BadMagic(String),
    #[error("malformed parameter line: {0}")]
    BadParameters(String),
    #[error("payload line must start with `colors=`")]
    MissingPayload,
    #[error("invalid color {found:?} at edge {index}")]
    BadColor { index: usize, found: char },
    #[error("payload has {found} colors, shape needs {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// Parameters `(m, n)` of the target pair `(K_m, nK_2)` a coloring refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TargetParams {
    pub m: usize,
    pub n: usize,
}

/// A coloring together with its optional target parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringDocument {
    pub coloring: TwoColoring,
    pub target: Option<TargetParams>,
}

impl ColoringDocument {
    pub fn new(coloring: TwoColoring, target: Option<TargetParams>) -> Self {
        ColoringDocument { coloring, target }
    }

    pub fn serialize(&self) -> String {
        let shape = self.coloring.shape();
        let mut out = String::with_capacity(shape.edge_count() + 40);
        out.push_str(MAGIC);
        out.push('\n');
        out.push_str(&format!("j={} t={}", shape.parts(), shape.part_size()));
        if let Some(TargetParams { m, n }) = self.target {
            out.push_str(&format!(" m={m} n={n}"));
        }
        out.push_str("\ncolors=");
        out.push_str(&self.coloring.digits());
        out.push('\n');
        out
    }

    pub fn parse_bytes(bytes: &[u8]) -> Result<Self, FormatError> {
        let text = std::str::from_utf8(bytes).map_err(|_| FormatError::NotUtf8)?;
        Self::parse(text)
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        if text.contains('\r') {
            return Err(FormatError::CarriageReturn);
        }
        let body = text.strip_suffix('\n').ok_or(FormatError::MissingNewline)?;
        let lines: Vec<&str> = body.split('\n').collect();
        if lines.len() != 3 {
            return Err(FormatError::LineCount(lines.len()));
        }
        if lines[0] != MAGIC {
            return Err(FormatError::BadMagic(lines[0].to_string()));
        }
        let (shape, target) = parse_parameters(lines[1])?;
        let payload = lines[2]
            .strip_prefix("colors=")
            .ok_or(FormatError::MissingPayload)?;
        let colors = payload
            .chars()
            .enumerate()
            .map(|(index, c)| Color::from_digit(c).ok_or(FormatError::BadColor { index, found: c }))
            .collect::<Result<Vec<_>, _>>()?;
        if colors.len() != shape.edge_count() {
            return Err(FormatError::LengthMismatch {
                expected: shape.edge_count(),
                found: colors.len(),
            });
        }
        let coloring = TwoColoring::new(shape, colors).expect("length checked above");
        Ok(ColoringDocument { coloring, target })
    }
}

fn parse_parameters(line: &str) -> Result<(MultipartiteShape, Option<TargetParams>), FormatError> {
    let bad = || FormatError::BadParameters(line.to_string());
    let fields: Vec<&str> = line.split(' ').collect();
    let keys: &[&str] = match fields.len() {
        2 => &["j", "t"],
        4 => &["j", "t", "m", "n"],
        _ => return Err(bad()),
    };
    let mut values = Vec::with_capacity(keys.len());
    for (field, key) in fields.iter().zip(keys) {
        let value = field
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(bad)?;
        values.push(parse_canonical_uint(value).ok_or_else(bad)?);
    }
    let shape = MultipartiteShape::new(values[0], values[1])?;
    let target = (values.len() == 4).then(|| TargetParams {
        m: values[2],
        n: values[3],
    });
    Ok((shape, target))
}

fn parse_canonical_uint(s: &str) -> Option<usize> {
    let canonical = !s.is_empty()
        && s.bytes().all(|b| b.is_ascii_digit())
        && (s == "0" || !s.starts_with('0'));
    if canonical {
        s.parse().ok()
    } else {
        None
    }
}
