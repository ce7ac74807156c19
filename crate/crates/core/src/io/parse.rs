//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use crate::error::{ParseError, ParseErrorKind};
use crate::field::{Field, NumberField, Q};
use crate::poly::MultiPoly;

const MAX_EXPONENT: u32 = 10_000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                return Err(err(line, col + (i - start), ParseErrorKind::Syntax(
                    "decimal literals are not supported, write a fraction".into(),
                )));
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Num(s.parse().unwrap()), line: l0, column: c0 });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Ident(s), line: l0, column: c0 });
            continue;
        }
        let op = match c {
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => c,
            '\u{2212}' => '-',
            _ => return Err(err(line, col, ParseErrorKind::Syntax(format!("unexpected character `{c}`")))),
        };
        out.push(Token { tok: Tok::Op(op), line: l0, column: c0 });
        col += 1;
        i += 1;
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    k: &'a NumberField,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax(&self, t: &Token, msg: impl Into<String>) -> ParseError {
        err(t.line, t.column, ParseErrorKind::Syntax(msg.into()))
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Op('+') => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Op('-') => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Op('*') => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Op('/') => {
                    self.next();
                    let at = self.peek().clone();
                    let den = self.unary()?;
                    if !den.is_constant() {
                        return Err(self.syntax(&at, "division by a non-constant expression"));
                    }
                    if den.is_zero() {
                        return Err(self.syntax(&at, "division by zero"));
                    }
                    let c = den.terms().next().unwrap().1.clone();
                    acc = acc.scale(&self.k.inv(&c));
                }
                Tok::Ident(_) | Tok::Op('(') => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().tok {
            Tok::Op('-') => {
                self.next();
                Ok(self.unary()?.neg())
            }
            Tok::Op('+') => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Op('^') {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        let Tok::Num(n) = &t.tok else {
            return Err(self.syntax(&t, "expected a non-negative integer exponent"));
        };
        let exp: u32 = match u32::try_from(n) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return Err(self.syntax(&t, "exponent too large")),
        };
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let n = self.vars.len();
        let t = self.next();
        match &t.tok {
            Tok::Num(v) => {
                let c = self.k.from_rational(&Q::from_integer(v.clone()));
                Ok(MultiPoly::constant(self.k, n, c))
            }
            Tok::Ident(name) => {
                if let Some(i) = self.vars.iter().position(|v| v == name) {
                    Ok(MultiPoly::var(self.k, n, i))
                } else if self.k.degree() > 1 && name == self.k.symbol() {
                    Ok(MultiPoly::constant(self.k, n, self.k.generator()))
                } else {
                    Err(err(t.line, t.column, ParseErrorKind::UnknownSymbol(name.clone())))
                }
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::Op(')') {
                    return Err(self.syntax(&close, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(self.syntax(&t, "unexpected end of input")),
            Tok::Op(c) => Err(self.syntax(&t, format!("unexpected `{c}`"))),
        }
    }
}

/// Parses an expression in the given variables with coefficients in `k`.
pub fn parse_polynomial(text: &str, k: &NumberField, vars: &[&str]) -> Result<MultiPoly, ParseError> {
    assert!(vars.len() <= 3);
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, k, vars };
    let out = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return Err(p.syntax(&t, "unexpected input after expression"));
    }
    Ok(out)
}

/// Parses a nonzero homogeneous form in `X, Y, Z`.
pub fn parse_form(text: &str, k: &NumberField) -> Result<MultiPoly, ParseError> {
    let p = parse_polynomial(text, k, &["X", "Y", "Z"])?;
    if p.homogeneous_degree().is_none() {
        return Err(err(1, 1, ParseErrorKind::NonHomogeneous));
    }
    Ok(p)
}
