//! Octonion and polynomial literals.
//!
//! ```text
//! octonion   := sign? term (('+' | '-') term)*
//! term       := number ('/' number)? ('*' basis)? | basis
//! basis      := 1 | i | j | k | l | il | jl | kl
//! polynomial := sign? pterm (('+' | '-') pterm)*
//! pterm      := factor ('*' power)? | power
//! factor     := '(' octonion ')' | term
//! power      := z ('^' integer)?
//! ```
//!
//! `k` stands for `ij` and `kl` for `(ij)l`. `ℓ` and the minus sign `−` are
//! accepted as spellings of `l` and `-`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use octoroots::algebra::BASIS_LABELS;
use octoroots::{Octonion, Rational, Scalar, Side, StandardPolynomial};
use thiserror::Error;

pub const MAX_DEGREE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {message}", .column + 1)]
pub struct ParseError {
    /// Zero-based character offset into the input.
    pub column: usize,
    pub message: String,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        column,
        message: message.into(),
    })
}

/// Scalars that can be read from and written to literal text.
pub trait LiteralScalar: Scalar {
    /// Value of a decimal such as `0.25` or `1e-3`; `None` where decimals
    /// are not allowed.
    fn from_decimal(text: &str) -> Option<Self>;

    fn render(&self) -> String;
}

impl LiteralScalar for Rational {
    fn from_decimal(_: &str) -> Option<Self> {
        None
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl LiteralScalar for f64 {
    fn from_decimal(text: &str) -> Option<Self> {
        text.parse().ok()
    }

    fn render(&self) -> String {
        format!("{self:.16e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    /// Digits with optional fraction and exponent; `decimal` is false for
    /// plain integers.
    Num { text: String, decimal: bool },
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, start));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let mut s = String::new();
            let mut decimal = false;
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                decimal = true;
                s.push('.');
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    s.push(chars[i]);
                    i += 1;
                }
            }
            // an exponent needs a digit after the optional sign, so `2e` is
            // not swallowed
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    decimal = true;
                    s.extend(&chars[i..j]);
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        s.push(chars[i]);
                        i += 1;
                    }
                }
            }
            if s == "." || !s.chars().any(|c| c.is_ascii_digit()) {
                return err(start, "malformed number");
            }
            out.push((Tok::Num { text: s, decimal }, start));
        } else if c.is_alphabetic() || c == 'ℓ' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphabetic() || chars[i] == 'ℓ') {
                s.push(if chars[i] == 'ℓ' { 'l' } else { chars[i] });
                i += 1;
            }
            out.push((Tok::Ident(s), start));
        } else {
            return err(start, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

fn basis_index(name: &str) -> Option<usize> {
    BASIS_LABELS.iter().position(|l| *l == name)
}

struct Parser<'a, S> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    _mode: core::marker::PhantomData<&'a S>,
}

impl<S: LiteralScalar> Parser<'_, S> {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            end: text.chars().count(),
            _mode: core::marker::PhantomData,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn done(&self) -> Result<(), ParseError> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some((t, col)) => err(*col, format!("unexpected {}", describe(t))),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let col = self.column();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num { text, decimal: false }, _)) => {
                self.pos += 1;
                Ok(text.parse().expect("lexer yields digits"))
            }
            Some((Tok::Num { .. }, _)) => err(col, "expected an integer"),
            Some((t, _)) => err(col, format!("expected an integer, found {}", describe(&t))),
            None => err(col, "expected an integer, found end of input"),
        }
    }

    /// `number ('/' number)?` at the current token.
    fn number(&mut self) -> Result<S, ParseError> {
        let col = self.column();
        let Some((Tok::Num { text, decimal }, _)) = self.toks.get(self.pos).cloned() else {
            return err(col, "expected a number");
        };
        if decimal {
            self.pos += 1;
            let value = S::from_decimal(&text)
                .ok_or_else(|| ParseError {
                    column: col,
                    message: "decimal numbers are only accepted in float mode; write p/q".into(),
                })?;
            if self.peek() == Some(&Tok::Slash) {
                return err(self.column(), "a decimal cannot be the numerator of a rational");
            }
            return Ok(value);
        }
        let num = self.integer()?;
        let den = if self.eat(&Tok::Slash) {
            let dcol = self.column();
            let d = self.integer()?;
            if d.is_zero() {
                return err(dcol, "zero denominator");
            }
            d
        } else {
            BigInt::one()
        };
        Ok(S::from_rational(&Rational::new(num, den)))
    }

    fn basis(&mut self) -> Result<usize, ParseError> {
        let col = self.column();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Ident(name), _)) => match basis_index(&name) {
                Some(k) => {
                    self.pos += 1;
                    Ok(k)
                }
                None => err(col, format!("unknown basis symbol '{name}'")),
            },
            Some((Tok::Num { text, decimal: false }, _)) if text == "1" => {
                self.pos += 1;
                Ok(0)
            }
            Some((t, _)) => err(col, format!("expected a basis symbol, found {}", describe(&t))),
            None => err(col, "expected a basis symbol, found end of input"),
        }
    }

    fn at_z(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == "z")
    }

    /// One octonion term; `None` when the next token is `z` and
    /// `allow_z` is set.
    fn term(&mut self, allow_z: bool) -> Result<Option<Octonion<S>>, ParseError> {
        match self.peek() {
            Some(Tok::Num { .. }) => {
                let c = self.number()?;
                let save = self.pos;
                if self.eat(&Tok::Star) {
                    if allow_z && self.at_z() {
                        self.pos = save;
                    } else {
                        let k = self.basis()?;
                        return Ok(Some(Octonion::basis(k).scale(&c)));
                    }
                }
                Ok(Some(Octonion::scalar(c)))
            }
            Some(Tok::Ident(_)) if allow_z && self.at_z() => Ok(None),
            Some(Tok::Ident(_)) => Ok(Some(Octonion::basis(self.basis()?))),
            Some(t) => {
                let t = t.clone();
                err(self.column(), format!("expected a term, found {}", describe(&t)))
            }
            None => err(self.column(), "expected a term, found end of input"),
        }
    }

    fn octonion(&mut self) -> Result<Octonion<S>, ParseError> {
        if self.peek().is_none() {
            return err(self.column(), "empty octonion literal");
        }
        let mut negate = self.leading_sign();
        let mut acc = Octonion::zero();
        loop {
            let t = self.term(false)?.expect("z not allowed here");
            acc = if negate { acc - t } else { acc + t };
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn leading_sign(&mut self) -> bool {
        if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        }
    }

    /// `z ('^' integer)?`
    fn power(&mut self) -> Result<usize, ParseError> {
        debug_assert!(self.at_z());
        self.pos += 1;
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let col = self.column();
        let d = self.integer()?;
        match usize::try_from(&d) {
            Ok(d) if d <= MAX_DEGREE => Ok(d),
            _ => err(col, format!("degree {d} exceeds the maximum of {MAX_DEGREE}")),
        }
    }

    fn pterm(&mut self) -> Result<(Octonion<S>, usize), ParseError> {
        let coeff = if self.eat(&Tok::LParen) {
            let c = self.octonion()?;
            if !self.eat(&Tok::RParen) {
                return err(self.column(), "expected ')'");
            }
            Some(c)
        } else {
            self.term(true)?
        };
        let Some(coeff) = coeff else {
            return Ok((Octonion::one(), self.power()?));
        };
        if self.eat(&Tok::Star) {
            if !self.at_z() {
                return err(self.column(), "expected z: a term has at most one octonion factor, written before z");
            }
            return Ok((coeff, self.power()?));
        }
        if self.at_z() {
            return err(self.column(), "expected '*' before z");
        }
        Ok((coeff, 0))
    }

    fn polynomial(&mut self) -> Result<Vec<Octonion<S>>, ParseError> {
        if self.peek().is_none() {
            return err(self.column(), "empty polynomial");
        }
        let mut coeffs: Vec<Octonion<S>> = Vec::new();
        let mut negate = self.leading_sign();
        loop {
            let (c, d) = self.pterm()?;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Octonion::zero());
            }
            coeffs[d] = if negate { &coeffs[d] - &c } else { &coeffs[d] + &c };
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                return Ok(coeffs);
            }
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num { text, .. } => format!("number '{text}'"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
    }
}

pub fn parse_octonion<S: LiteralScalar>(text: &str) -> Result<Octonion<S>, ParseError> {
    let mut p = Parser::<S>::new(text)?;
    let x = p.octonion()?;
    p.done()?;
    Ok(x)
}

/// A single scalar such as `-1`, `3/4` or (float mode) `0.5`.
pub fn parse_scalar<S: LiteralScalar>(text: &str) -> Result<S, ParseError> {
    let mut p = Parser::<S>::new(text)?;
    if p.peek().is_none() {
        return err(0, "empty number");
    }
    let negate = p.leading_sign();
    let x = p.number()?;
    p.done()?;
    Ok(if negate { -x } else { x })
}

pub fn parse_polynomial<S: LiteralScalar>(text: &str, side: Side) -> Result<StandardPolynomial<S>, ParseError> {
    let mut p = Parser::<S>::new(text)?;
    let coeffs = p.polynomial()?;
    p.done()?;
    StandardPolynomial::new(coeffs, side).map_err(|_| ParseError {
        column: 0,
        message: "the polynomial is identically zero".into(),
    })
}

/// Canonical literal: nonzero coordinates in basis order, `"0"` for zero.
pub fn format_octonion<S: LiteralScalar>(x: &Octonion<S>) -> String {
    let mut out = String::new();
    for (k, c) in x.coords().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_neg();
        let mag = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let label = BASIS_LABELS[k];
        if k == 0 {
            out.push_str(&mag.render());
        } else if mag.is_one() {
            out.push_str(label);
        } else {
            out.push_str(&mag.render());
            out.push('*');
            out.push_str(label);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Coefficient list `c_0..c_n` of a polynomial as literals.
pub fn format_coefficients<S: LiteralScalar>(p: &StandardPolynomial<S>) -> Vec<String> {
    p.coeffs().iter().map(format_octonion).collect()
}
