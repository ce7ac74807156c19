//! The input document.
//!
//! ```toml
//! [field]
//! generator = "r"
//! min_poly = "r^2 - 5"      # or coefficients from the constant term up: [-5, 0, 1]
//!
//! [pencil]
//! F = "X^2 - r*Y*Z"
//! G = "Y^2"
//! ```
//!
//! Without a `[field]` section the coefficients are rational.

use std::ops::Range;
use std::path::Path;

use serde::Deserialize;
use toml::Spanned;

use super::parse::{parse_form, parse_polynomial};
use crate::base_points::Pencil;
use crate::error::{Error, ParseError, ParseErrorKind};
use crate::field::{parse_rational, NumberField, Q};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    field: Option<RawField>,
    pencil: RawPencil,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    generator: String,
    min_poly: Spanned<RawMinPoly>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawMinPoly {
    Expression(String),
    Coefficients(Vec<RawCoefficient>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoefficient {
    Integer(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPencil {
    #[serde(rename = "F")]
    f: Spanned<String>,
    #[serde(rename = "G")]
    g: Spanned<String>,
}

/// A parsed input: the field and the two generators as written.
#[derive(Clone, Debug)]
pub struct InputDocument {
    pub field: NumberField,
    pub f_text: String,
    pub g_text: String,
    pub pencil: Pencil,
}

/// Reads and parses an input file.
pub fn load_input(path: &Path) -> Result<InputDocument, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Parse(ParseError { line: 0, column: 0, kind: ParseErrorKind::Document(format!("{}: {e}", path.display())) })
    })?;
    parse_input(&text)
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn doc_error(text: &str, span: Option<Range<usize>>, msg: String) -> Error {
    let (line, column) = span.map_or((1, 1), |s| position(text, s.start));
    Error::Parse(ParseError { line, column, kind: ParseErrorKind::Document(msg) })
}

/// Re-anchors an error inside a string value at its place in the document.
/// Exact for values without escapes or line breaks.
fn anchor(text: &str, span: &Range<usize>, e: ParseError) -> Error {
    let (line, column) = position(text, span.start);
    let kind = e.kind;
    if e.line == 1 {
        Error::Parse(ParseError { line, column: column + e.column, kind })
    } else {
        Error::Parse(ParseError { line: line + e.line - 1, column: e.column, kind })
    }
}

/// Parses an input document from text.
pub fn parse_input(text: &str) -> Result<InputDocument, Error> {
    let raw: RawDocument = toml::from_str(text).map_err(|e| doc_error(text, e.span(), e.message().to_string()))?;
    let field = match raw.field {
        None => NumberField::rationals(),
        Some(f) => {
            let span = f.min_poly.span();
            let coeffs = match f.min_poly.into_inner() {
                RawMinPoly::Coefficients(cs) => cs
                    .into_iter()
                    .map(|c| match c {
                        RawCoefficient::Integer(i) => Ok(Q::from_integer(i.into())),
                        RawCoefficient::Text(s) => parse_rational(&s)
                            .ok_or_else(|| doc_error(text, Some(span.clone()), format!("`{s}` is not a rational number"))),
                    })
                    .collect::<Result<Vec<Q>, Error>>()?,
                RawMinPoly::Expression(s) => {
                    let k = NumberField::rationals();
                    let sym = f.generator.as_str();
                    let p = parse_polynomial(&s, &k, &[sym]).map_err(|e| anchor(text, &span, e))?;
                    let deg = p.total_degree().unwrap_or(0) as usize;
                    (0..=deg)
                        .map(|i| {
                            let m = crate::poly::Monomial([i as u32, 0, 0]);
                            p.coeff(&m).map_or_else(|| Q::from_integer(0.into()), |c| c.coords()[0].clone())
                        })
                        .collect()
                }
            };
            NumberField::new(&f.generator, coeffs)?
        }
    };
    let (fs, gs) = (raw.pencil.f, raw.pencil.g);
    let f = parse_form(fs.get_ref(), &field).map_err(|e| anchor(text, &fs.span(), e))?;
    let g = parse_form(gs.get_ref(), &field).map_err(|e| anchor(text, &gs.span(), e))?;
    let pencil = Pencil::new(f, g)?;
    Ok(InputDocument { field, f_text: fs.into_inner(), g_text: gs.into_inner(), pencil })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_min_poly_spellings() {
        let a = parse_input("[field]\ngenerator = \"r\"\nmin_poly = \"r^2-5\"\n[pencil]\nF = \"X\"\nG = \"r*Y\"\n").unwrap();
        let b = parse_input("[field]\ngenerator = \"r\"\nmin_poly = [-5, 0, \"1\"]\n[pencil]\nF = \"X\"\nG = \"r*Y\"\n").unwrap();
        assert_eq!(a.field, b.field);
        assert_eq!(a.field.degree(), 2);
        assert_eq!(a.pencil, b.pencil);
    }

    #[test]
    fn rational_default() {
        let d = parse_input("[pencil]\nF = \"X*Y\"\nG = \"Z^2\"\n").unwrap();
        assert_eq!(d.field.degree(), 1);
        assert_eq!(d.pencil.degree(), 2);
    }

    #[test]
    fn errors_point_into_the_document() {
        let e = parse_input("[pencil]\nF = \"X*Y\"\nG = \"Z^2 + W*Z\"\n").unwrap_err();
        let Error::Parse(p) = e else { panic!("{e:?}") };
        assert_eq!((p.line, p.column), (3, 12));
        assert_eq!(p.kind, ParseErrorKind::UnknownSymbol("W".into()));

        let e = parse_input("[pencil]\nF = \"X\"\n").unwrap_err();
        assert!(matches!(e, Error::Parse(ParseError { kind: ParseErrorKind::Document(_), .. })));

        let e = parse_input("[field]\ngenerator = \"r\"\nmin_poly = [-4, 0, 1]\n[pencil]\nF = \"X\"\nG = \"Y\"\n").unwrap_err();
        assert!(matches!(e, Error::ReducibleMinimalPolynomial(_)));
        let e = parse_input("[pencil]\nF = \"X\"\nG = \"Y^2\"\n").unwrap_err();
        assert!(matches!(e, Error::InvalidPencil(_)));
    }
}
