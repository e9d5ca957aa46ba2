//! The `.mat` text format.
//!
//! ```text
//! semiring <name> <rows> <cols>
//! <row 0: whitespace-separated scalars>
//! ...
//! ```
//!
//! Parse errors carry 1-based line and column numbers.

use std::str::FromStr;

use super::matrix::Matrix;
use crate::algebra::{Boolean, GaussianRational, Nat, NonNegRational, Semiring, SemiringTag, Tropical};
use crate::error::{Error, Result};

/// Writes a matrix in `.mat` format, newline-terminated.
pub fn render_mat<S: Semiring>(m: &Matrix<S>) -> String {
    let mut out = format!("semiring {} {} {}\n", S::name(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((k, byte)),
            (true, Some((col, b))) => {
                out.push((col + 1, &line[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((col, b)) = start {
        out.push((col + 1, &line[b..]));
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn end_column(line: &str) -> usize {
    line.chars().count() + 1
}

/// The header of a `.mat` file.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MatHeader {
    pub tag: SemiringTag,
    pub rows: usize,
    pub cols: usize,
}

/// Parses the header line.
pub fn parse_header(text: &str) -> Result<MatHeader> {
    let line = text.lines().next().unwrap_or("");
    let toks = tokens(line);
    match toks.first() {
        Some((_, "semiring")) => {}
        Some(&(col, other)) => return Err(parse_error(1, col, format!("expected `semiring`, found `{other}`"))),
        None => return Err(parse_error(1, 1, "missing header `semiring <name> <rows> <cols>`")),
    }
    let field = |k: usize, what: &str| {
        toks.get(k)
            .copied()
            .ok_or_else(|| parse_error(1, end_column(line), format!("missing {what}")))
    };
    let (col, name) = field(1, "semiring name")?;
    let tag: SemiringTag = name
        .parse()
        .map_err(|_| parse_error(1, col, format!("unknown semiring `{name}`")))?;
    let dim = |k: usize, what: &str| -> Result<usize> {
        let (col, t) = field(k, what)?;
        t.parse().map_err(|_| parse_error(1, col, format!("invalid {what} `{t}`")))
    };
    let rows = dim(2, "row count")?;
    let cols = dim(3, "column count")?;
    if let Some(&(col, extra)) = toks.get(4) {
        return Err(parse_error(1, col, format!("unexpected `{extra}` after header")));
    }
    Ok(MatHeader { tag, rows, cols })
}

/// Parses a `.mat` file whose header names the semiring `S`.
pub fn parse_mat<S>(text: &str) -> Result<Matrix<S>>
where
    S: Semiring + FromStr<Err = Error>,
{
    let header = parse_header(text)?;
    if header.tag.name() != S::name() {
        return Err(Error::TagMismatch { expected: S::name(), found: header.tag.name().into() });
    }
    let lines: Vec<&str> = text.lines().collect();
    let mut entries = Vec::with_capacity(header.rows * header.cols);
    for i in 0..header.rows {
        let lineno = i + 2;
        let Some(line) = lines.get(i + 1) else {
            return Err(parse_error(lineno, 1, format!("expected {} rows, found {i}", header.rows)));
        };
        let toks = tokens(line);
        if let Some(&(col, extra)) = toks.get(header.cols) {
            return Err(parse_error(lineno, col, format!("unexpected `{extra}`: row has {} columns", header.cols)));
        }
        if toks.len() < header.cols {
            return Err(parse_error(
                lineno,
                end_column(line),
                format!("expected {} scalars, found {}", header.cols, toks.len()),
            ));
        }
        for (col, t) in toks {
            let s = t.parse::<S>().map_err(|e| parse_error(lineno, col, e.to_string()))?;
            entries.push(s);
        }
    }
    if let Some((k, line)) = lines.iter().enumerate().skip(header.rows + 1).find(|(_, l)| !l.trim().is_empty()) {
        let col = tokens(line).first().map_or(1, |t| t.0);
        return Err(parse_error(k + 1, col, "unexpected content after the last row"));
    }
    Matrix::new(header.rows, header.cols, entries)
}

/// A matrix over one of the built-in semirings, chosen at run time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DynMatrix {
    Nat(Matrix<Nat>),
    Bool(Matrix<Boolean>),
    Tropical(Matrix<Tropical>),
    Rational(Matrix<NonNegRational>),
    Gaussian(Matrix<GaussianRational>),
}

macro_rules! dispatch {
    ($m:expr, $x:ident => $body:expr) => {
        match $m {
            DynMatrix::Nat($x) => $body,
            DynMatrix::Bool($x) => $body,
            DynMatrix::Tropical($x) => $body,
            DynMatrix::Rational($x) => $body,
            DynMatrix::Gaussian($x) => $body,
        }
    };
}

macro_rules! dispatch2 {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (DynMatrix::Nat($x), DynMatrix::Nat($y)) => DynMatrix::Nat($body),
            (DynMatrix::Bool($x), DynMatrix::Bool($y)) => DynMatrix::Bool($body),
            (DynMatrix::Tropical($x), DynMatrix::Tropical($y)) => DynMatrix::Tropical($body),
            (DynMatrix::Rational($x), DynMatrix::Rational($y)) => DynMatrix::Rational($body),
            (DynMatrix::Gaussian($x), DynMatrix::Gaussian($y)) => DynMatrix::Gaussian($body),
            (a, b) => {
                return Err(Error::TagMismatch { expected: a.tag().name().into(), found: b.tag().name().into() })
            }
        }
    };
}

impl DynMatrix {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(match parse_header(text)?.tag {
            SemiringTag::Nat => DynMatrix::Nat(parse_mat(text)?),
            SemiringTag::Bool => DynMatrix::Bool(parse_mat(text)?),
            SemiringTag::Tropical => DynMatrix::Tropical(parse_mat(text)?),
            SemiringTag::Rational => DynMatrix::Rational(parse_mat(text)?),
            SemiringTag::Gaussian => DynMatrix::Gaussian(parse_mat(text)?),
        })
    }

    pub fn tag(&self) -> SemiringTag {
        match self {
            DynMatrix::Nat(_) => SemiringTag::Nat,
            DynMatrix::Bool(_) => SemiringTag::Bool,
            DynMatrix::Tropical(_) => SemiringTag::Tropical,
            DynMatrix::Rational(_) => SemiringTag::Rational,
            DynMatrix::Gaussian(_) => SemiringTag::Gaussian,
        }
    }

    pub fn render(&self) -> String {
        dispatch!(self, m => render_mat(m))
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &DynMatrix) -> Result<DynMatrix> {
        Ok(dispatch2!(self, then, |a, b| a.compose(b)?))
    }

    pub fn tensor(&self, other: &DynMatrix) -> Result<DynMatrix> {
        Ok(dispatch2!(self, other, |a, b| Matrix::tensor(a, b)))
    }

    /// Conjugate transpose; only ℚ[i] carries an involution.
    pub fn dagger(&self) -> Result<DynMatrix> {
        match self {
            DynMatrix::Gaussian(m) => Ok(DynMatrix::Gaussian(m.dagger())),
            other => Err(Error::NoInvolution(other.tag().name().into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse_round_trip() {
        let text = "semiring nat 2 2\n1 2\n0 1\n";
        let m: Matrix<Nat> = parse_mat(text).unwrap();
        assert_eq!(render_mat(&m), text);
        let g = "semiring gaussian 1 3\ni -1/2+i 0\n";
        assert_eq!(DynMatrix::parse(g).unwrap().render(), g);
        let empty = "semiring tropical 2 0\n\n\n";
        assert_eq!(DynMatrix::parse(empty).unwrap().render(), empty);
    }

    #[test]
    fn tolerant_of_extra_spacing_but_not_content() {
        let m = DynMatrix::parse("semiring  nat 1 2\n  3\t 4  \n\n").unwrap();
        assert_eq!(m.render(), "semiring nat 1 2\n3 4\n");
        let err = DynMatrix::parse("semiring nat 1 1\n3\n4\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, column: 1, message: "unexpected content after the last row".into() });
    }

    #[test]
    fn errors_carry_positions() {
        let err = DynMatrix::parse("semiring nat 2 2\n1 2\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 3, .. }), "{err}");
        let err = DynMatrix::parse("semiring foo 1 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 10, .. }), "{err}");
        let err = DynMatrix::parse("semiring nat 2 2\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 1, .. }), "{err}");
        let err = DynMatrix::parse("semiring nat 1 2\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 5, .. }), "{err}");
        let err = DynMatrix::parse("semiring nat 1 3\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 4, .. }), "{err}");
        let err = DynMatrix::parse("matrix nat 1 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }), "{err}");
        let err = DynMatrix::parse("").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }), "{err}");
    }

    #[test]
    fn dynamic_operations_check_tags_and_shapes() {
        let a = DynMatrix::parse("semiring nat 2 2\n1 2\n0 1\n").unwrap();
        let b = DynMatrix::parse("semiring nat 2 1\n3\n4\n").unwrap();
        assert_eq!(a.compose(&b).unwrap().render(), "semiring nat 2 1\n11\n4\n");
        assert!(matches!(b.compose(&b), Err(Error::DimensionMismatch(_))));
        let t = DynMatrix::parse("semiring tropical 1 1\n0\n").unwrap();
        assert!(matches!(a.compose(&t), Err(Error::TagMismatch { .. })));
        assert_eq!(a.dagger(), Err(Error::NoInvolution("nat".into())));
    }
}
