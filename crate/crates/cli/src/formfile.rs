//! Text format for quadratic forms.
//!
//! ```text
//! # x1 x2 over GF(2)
//! field gf2^1
//! dim 2
//! term 1 2 1
//! ```
//!
//! `field` is `gf2^k` (1 <= k <= 8, literals are bit-strings of length `k`, lowest degree
//! first) or `rational` (literals `num/den` of ascending bit-strings in `t`). `term i j c`
//! adds `c x_i x_j` with 1-based `i <= j`. Blank lines and `#` comments are ignored.

use std::fmt::{self, Write as _};
use std::path::Path;

use orthochar2::quadform::QuadraticForm;
use orthochar2::scalars::{Field, Literal};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Gf2k(u8),
    Rational,
}

impl FieldSpec {
    pub fn parse(text: &str) -> Option<Self> {
        if text == "rational" {
            return Some(FieldSpec::Rational);
        }
        let k: u8 = text.strip_prefix("gf2^")?.parse().ok()?;
        (1..=8).contains(&k).then_some(FieldSpec::Gf2k(k))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Gf2k(k) => write!(f, "gf2^{k}"),
            FieldSpec::Rational => f.write_str("rational"),
        }
    }
}

/// Runs `$body` with `$F` bound to the scalar type named by a [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $F:ident => $body:expr) => {{
        use orthochar2::scalars::{Gf2k, RationalFunction};
        match $spec {
            $crate::formfile::FieldSpec::Gf2k(1) => { type $F = Gf2k<1>; $body }
            $crate::formfile::FieldSpec::Gf2k(2) => { type $F = Gf2k<2>; $body }
            $crate::formfile::FieldSpec::Gf2k(3) => { type $F = Gf2k<3>; $body }
            $crate::formfile::FieldSpec::Gf2k(4) => { type $F = Gf2k<4>; $body }
            $crate::formfile::FieldSpec::Gf2k(5) => { type $F = Gf2k<5>; $body }
            $crate::formfile::FieldSpec::Gf2k(6) => { type $F = Gf2k<6>; $body }
            $crate::formfile::FieldSpec::Gf2k(7) => { type $F = Gf2k<7>; $body }
            $crate::formfile::FieldSpec::Gf2k(8) => { type $F = Gf2k<8>; $body }
            $crate::formfile::FieldSpec::Gf2k(k) => unreachable!("unsupported degree {k}"),
            $crate::formfile::FieldSpec::Rational => { type $F = RationalFunction; $body }
        }
    }};
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` directive")]
    Missing(&'static str),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> FormFileError {
    FormFileError::Syntax { line, message: message.into() }
}

/// A parsed file whose coefficients are still text, so the scalar type can be chosen from
/// the `field` directive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormFile {
    pub field: FieldSpec,
    pub dim: usize,
    /// `(line, i, j, literal)` with 0-based `i <= j`.
    terms: Vec<(usize, usize, usize, String)>,
}

impl FormFile {
    pub fn parse(text: &str) -> Result<Self, FormFileError> {
        let mut field = None;
        let mut dim = None;
        let mut terms: Vec<(usize, usize, usize, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            match words[0] {
                "field" => {
                    if field.is_some() {
                        return Err(syntax(line, "repeated `field` directive"));
                    }
                    let [_, name] = words[..] else {
                        return Err(syntax(line, "expected `field gf2^k` or `field rational`"));
                    };
                    field = Some(FieldSpec::parse(name).ok_or_else(|| syntax(line, format!("unknown field `{name}`")))?);
                }
                "dim" => {
                    if dim.is_some() {
                        return Err(syntax(line, "repeated `dim` directive"));
                    }
                    let [_, n] = words[..] else {
                        return Err(syntax(line, "expected `dim n`"));
                    };
                    let n: usize = n.parse().map_err(|_| syntax(line, format!("invalid dimension `{n}`")))?;
                    if n == 0 {
                        return Err(syntax(line, "dimension must be positive"));
                    }
                    dim = Some(n);
                }
                "term" => {
                    let n = dim.ok_or_else(|| syntax(line, "`term` before `dim`"))?;
                    if field.is_none() {
                        return Err(syntax(line, "`term` before `field`"));
                    }
                    if words.len() < 4 {
                        return Err(syntax(line, "expected `term i j coefficient`"));
                    }
                    let index = |w: &str| -> Result<usize, FormFileError> {
                        let i: usize = w.parse().map_err(|_| syntax(line, format!("invalid index `{w}`")))?;
                        if i == 0 || i > n {
                            return Err(syntax(line, format!("index {i} outside 1..={n}")));
                        }
                        Ok(i - 1)
                    };
                    let (i, j) = (index(words[1])?, index(words[2])?);
                    if i > j {
                        return Err(syntax(line, format!("term indices must satisfy i <= j, got {} {}", i + 1, j + 1)));
                    }
                    if terms.iter().any(|t| t.1 == i && t.2 == j) {
                        return Err(syntax(line, format!("repeated term {} {}", i + 1, j + 1)));
                    }
                    terms.push((line, i, j, words[3..].join(" ")));
                }
                other => return Err(syntax(line, format!("unknown directive `{other}`"))),
            }
        }
        Ok(Self {
            field: field.ok_or(FormFileError::Missing("field"))?,
            dim: dim.ok_or(FormFileError::Missing("dim"))?,
            terms,
        })
    }

    pub fn read(path: &Path) -> Result<Self, FormFileError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| FormFileError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text)
    }

    /// Parses the coefficients as elements of `F`.
    pub fn form<F: Field + Literal>(&self) -> Result<QuadraticForm<F>, FormFileError> {
        let mut q = QuadraticForm::zero(self.dim);
        for (line, i, j, lit) in &self.terms {
            let c = F::parse_literal(lit).map_err(|e| syntax(*line, e.to_string()))?;
            q.add_term(*i, *j, c);
        }
        Ok(q)
    }
}

/// Prints `q` in the file format; nonzero terms only, in `(i, j)` order.
pub fn print_form<F: Field>(field: FieldSpec, q: &QuadraticForm<F>) -> String {
    let mut out = format!("field {field}\ndim {}\n", q.dim());
    for (i, j, c) in q.terms() {
        if !c.is_zero() {
            writeln!(out, "term {} {} {c}", i + 1, j + 1).expect("write to string");
        }
    }
    out
}
