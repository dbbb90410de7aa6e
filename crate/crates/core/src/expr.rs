// Copyright 2026 The Potentia Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Text form of algebra elements.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' unary) | ('/' NUMBER))*
//! unary   := '-' unary | power
//! power   := primary ('^' INTEGER)*
//! primary := NUMBER | SYMBOL | '(' sum ')'
//! ```
//!
//! Symbols are `e0` (the unit), `e1`, `e2`, `e3`, `e12`, `e23`, `e31`,
//! `e123` and its alias `i`. Multiplication is always explicit.

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::multivector::{Blade, Multivector};

/// Maximum nesting of parentheses and unary minus.
pub const MAX_DEPTH: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownSymbol,
    NestingTooDeep,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    fn syntax(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::Syntax,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Factor {
    Mul(Expr),
    Div { divisor: f64, offset: usize },
}

/// Parsed expression. Operator chains are kept flat and evaluated left to
/// right, so long inputs do not produce deep trees.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    Symbol(Blade),
    Neg(Box<Expr>),
    Sum(Vec<(Sign, Expr)>),
    Product(Vec<Factor>),
    Pow(Box<Expr>, Vec<u64>),
}

#[derive(Debug, Clone, PartialEq)]
enum Token<'a> {
    Number(&'a str),
    Ident(&'a str),
    Punct(u8),
    End,
}

impl fmt::Display for Token<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Number(s) => write!(f, "number `{s}`"),
            Token::Ident(s) => write!(f, "symbol `{s}`"),
            Token::Punct(c) => write!(f, "`{}`", *c as char),
            Token::End => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> std::result::Result<(usize, Token<'a>), ParseError> {
        self.skip_ws();
        let bytes = self.text.as_bytes();
        let start = self.pos;
        let Some(&c) = bytes.get(start) else {
            return Ok((start, Token::End));
        };
        if c.is_ascii_digit() || c == b'.' {
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end < bytes.len() && bytes[end] == b'.' {
                end += 1;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
            }
            // scientific notation only when digits follow the exponent marker
            if end < bytes.len() && (bytes[end] == b'e' || bytes[end] == b'E') {
                let mut exp = end + 1;
                if exp < bytes.len() && (bytes[exp] == b'+' || bytes[exp] == b'-') {
                    exp += 1;
                }
                if exp < bytes.len() && bytes[exp].is_ascii_digit() {
                    while exp < bytes.len() && bytes[exp].is_ascii_digit() {
                        exp += 1;
                    }
                    end = exp;
                }
            }
            let literal = &self.text[start..end];
            if literal == "." {
                return Err(ParseError::syntax(start, "expected digits around `.`"));
            }
            self.pos = end;
            return Ok((start, Token::Number(literal)));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let mut end = start;
            while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
                end += 1;
            }
            self.pos = end;
            return Ok((start, Token::Ident(&self.text[start..end])));
        }
        if b"+-*/^()".contains(&c) {
            self.pos += 1;
            return Ok((start, Token::Punct(c)));
        }
        let ch = self.text[start..].chars().next().unwrap_or('?');
        Err(ParseError::syntax(
            start,
            format!("unexpected character `{ch}`"),
        ))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: (usize, Token<'a>),
    depth: usize,
}

fn symbol(name: &str) -> Option<Blade> {
    Some(match name {
        "e0" => Blade::One,
        "e1" => Blade::E1,
        "e2" => Blade::E2,
        "e3" => Blade::E3,
        "e12" => Blade::E12,
        "e23" => Blade::E23,
        "e31" => Blade::E31,
        "e123" | "i" => Blade::E123,
        _ => return None,
    })
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> std::result::Result<Self, ParseError> {
        let mut lexer = Lexer { text, pos: 0 };
        let peeked = lexer.next()?;
        Ok(Parser {
            lexer,
            peeked,
            depth: 0,
        })
    }

    fn bump(&mut self) -> std::result::Result<(usize, Token<'a>), ParseError> {
        let next = self.lexer.next()?;
        Ok(std::mem::replace(&mut self.peeked, next))
    }

    fn is_punct(&self, c: u8) -> bool {
        self.peeked.1 == Token::Punct(c)
    }

    fn unexpected<T>(&self, expected: &str) -> std::result::Result<T, ParseError> {
        Err(ParseError::syntax(
            self.peeked.0,
            format!("expected {expected}, found {}", self.peeked.1),
        ))
    }

    fn enter(&mut self) -> std::result::Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError {
                offset: self.peeked.0,
                kind: ParseErrorKind::NestingTooDeep,
                message: format!("nesting deeper than {MAX_DEPTH}"),
            });
        }
        Ok(())
    }

    fn sum(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut terms = vec![(Sign::Plus, self.product()?)];
        loop {
            let sign = if self.is_punct(b'+') {
                Sign::Plus
            } else if self.is_punct(b'-') {
                Sign::Minus
            } else {
                break;
            };
            self.bump()?;
            terms.push((sign, self.product()?));
        }
        Ok(if terms.len() == 1 && terms[0].0 == Sign::Plus {
            terms.pop().map(|(_, e)| e).expect("one term")
        } else {
            Expr::Sum(terms)
        })
    }

    fn product(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut factors = vec![Factor::Mul(self.unary()?)];
        loop {
            if self.is_punct(b'*') {
                self.bump()?;
                factors.push(Factor::Mul(self.unary()?));
            } else if self.is_punct(b'/') {
                self.bump()?;
                match self.peeked.1 {
                    Token::Number(text) => {
                        let offset = self.peeked.0;
                        let divisor = parse_number(text, offset)?;
                        self.bump()?;
                        factors.push(Factor::Div { divisor, offset });
                    }
                    _ => return self.unexpected("numeric literal after `/`"),
                }
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            match factors.pop() {
                Some(Factor::Mul(e)) => e,
                _ => unreachable!("first factor is a product operand"),
            }
        } else {
            Expr::Product(factors)
        })
    }

    fn unary(&mut self) -> std::result::Result<Expr, ParseError> {
        if self.is_punct(b'-') {
            self.enter()?;
            self.bump()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> std::result::Result<Expr, ParseError> {
        let base = self.primary()?;
        let mut exponents = Vec::new();
        while self.is_punct(b'^') {
            self.bump()?;
            match self.peeked.1 {
                Token::Number(text) if text.bytes().all(|b| b.is_ascii_digit()) => {
                    let offset = self.peeked.0;
                    let n = text.parse::<u64>().map_err(|_| {
                        ParseError::syntax(offset, "exponent does not fit in 64 bits")
                    })?;
                    self.bump()?;
                    exponents.push(n);
                }
                _ => return self.unexpected("nonnegative integer exponent"),
            }
        }
        Ok(if exponents.is_empty() {
            base
        } else {
            Expr::Pow(Box::new(base), exponents)
        })
    }

    fn primary(&mut self) -> std::result::Result<Expr, ParseError> {
        let (offset, token) = self.peeked.clone();
        match token {
            Token::Number(text) => {
                let value = parse_number(text, offset)?;
                self.bump()?;
                Ok(Expr::Number(value))
            }
            Token::Ident(name) => match symbol(name) {
                Some(blade) => {
                    self.bump()?;
                    Ok(Expr::Symbol(blade))
                }
                None => Err(ParseError {
                    offset,
                    kind: ParseErrorKind::UnknownSymbol,
                    message: format!("unknown symbol `{name}`"),
                }),
            },
            Token::Punct(b'(') => {
                self.enter()?;
                self.bump()?;
                let inner = self.sum()?;
                if !self.is_punct(b')') {
                    return self.unexpected("`)`");
                }
                self.bump()?;
                self.depth -= 1;
                Ok(inner)
            }
            _ => self.unexpected("number, symbol or `(`"),
        }
    }
}

fn parse_number(text: &str, offset: usize) -> std::result::Result<f64, ParseError> {
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(ParseError::syntax(
            offset,
            format!("invalid numeric literal `{text}`"),
        )),
    }
}

/// Parses a full expression.
pub fn parse(text: &str) -> std::result::Result<Expr, ParseError> {
    let mut parser = Parser::new(text)?;
    let expr = parser.sum()?;
    if parser.peeked.1 != Token::End {
        return parser.unexpected("operator or end of input");
    }
    Ok(expr)
}

/// Evaluates an expression in the algebra; `i` is the pseudoscalar.
pub fn eval(expr: &Expr) -> Result<Multivector> {
    match expr {
        Expr::Number(v) => Multivector::scalar(*v),
        Expr::Symbol(b) => Ok(Multivector::blade(*b)),
        Expr::Neg(inner) => Ok(eval(inner)?.neg()),
        Expr::Sum(terms) => terms.iter().try_fold(Multivector::ZERO, |acc, (sign, e)| {
            let v = eval(e)?;
            match sign {
                Sign::Plus => acc.add(&v),
                Sign::Minus => acc.sub(&v),
            }
        }),
        Expr::Product(factors) => {
            let mut acc: Option<Multivector> = None;
            for f in factors {
                acc = Some(match (f, acc) {
                    (Factor::Mul(e), None) => eval(e)?,
                    (Factor::Mul(e), Some(a)) => a.mul(&eval(e)?)?,
                    (Factor::Div { divisor, offset }, a) => {
                        if *divisor == 0.0 {
                            return Err(Error::DivisionByZero { offset: *offset });
                        }
                        let a = a.unwrap_or(Multivector::ONE);
                        Multivector::new(a.coeffs().map(|c| c / divisor))
                            .map_err(|_| Error::ArithmeticOverflow)?
                    }
                });
            }
            Ok(acc.unwrap_or(Multivector::ONE))
        }
        Expr::Pow(base, exponents) => exponents.iter().try_fold(eval(base)?, |acc, &n| acc.pow(n)),
    }
}

/// Parses and evaluates in one go.
pub fn eval_str(text: &str) -> Result<Multivector> {
    eval(&parse(text)?)
}

/// Joins `(coefficient, symbol)` terms as `c0 + c1*s1 - c2*s2`; an empty
/// symbol marks the scalar term, zero terms are skipped.
pub fn join_terms(terms: &[(f64, String)]) -> String {
    let mut out = String::new();
    for (coeff, sym) in terms.iter().filter(|(c, _)| *c != 0.0) {
        let magnitude = coeff.abs();
        let sign = if *coeff < 0.0 { '-' } else { '+' };
        if out.is_empty() {
            if sign == '-' {
                out.push('-');
            }
        } else {
            out.push(' ');
            out.push(sign);
            out.push(' ');
        }
        match (sym.is_empty(), magnitude == 1.0) {
            (true, _) => out.push_str(&magnitude.to_string()),
            (false, true) => out.push_str(sym),
            (false, false) => {
                out.push_str(&magnitude.to_string());
                out.push('*');
                out.push_str(sym);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: terms in basis order, pseudoscalar written `i`, zero
/// written `0`.
pub fn print_canonical(x: &Multivector) -> String {
    let terms: Vec<(f64, String)> = Blade::ALL
        .iter()
        .map(|b| {
            let name = if *b == Blade::One { "" } else { b.name() };
            (x.coeff(*b), name.to_string())
        })
        .collect();
    join_terms(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::psi1;

    #[test]
    fn anchored_expressions() {
        assert!(eval_str("e1*e2 - i*e3").unwrap().is_zero());
        assert_eq!(eval_str("(1+e3)/2").unwrap(), psi1());
        assert_eq!(eval_str("e1*e1").unwrap(), Multivector::ONE);
        assert_eq!(eval_str("e1*e2*e3").unwrap(), Multivector::pseudoscalar());
        assert_eq!(eval_str("2^3").unwrap(), Multivector::scalar(8.0).unwrap());
    }

    #[test]
    fn unbalanced_parenthesis() {
        let err = parse("e1*(e2").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(err.kind, ParseErrorKind::Syntax);
        assert!(err.message.contains("`)`"), "{}", err.message);
    }

    #[test]
    fn unknown_symbol() {
        let err = parse("e1 + e4").unwrap_err();
        assert_eq!((err.offset, err.kind), (5, ParseErrorKind::UnknownSymbol));
    }

    #[test]
    fn juxtaposition_is_rejected() {
        assert!(parse("2e1 e2").is_err());
        assert!(parse("e1 e2").is_err());
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            eval_str("1 - 2 - 3").unwrap(),
            Multivector::scalar(-4.0).unwrap()
        );
        assert_eq!(
            eval_str("-e1^2").unwrap(),
            Multivector::scalar(-1.0).unwrap()
        );
        assert_eq!(
            eval_str("2*3^2").unwrap(),
            Multivector::scalar(18.0).unwrap()
        );
        assert_eq!(
            eval_str("8/2/2").unwrap(),
            Multivector::scalar(2.0).unwrap()
        );
        assert_eq!(eval_str("e0").unwrap(), Multivector::ONE);
        assert_eq!(eval_str("i^2").unwrap(), Multivector::ONE.neg());
    }

    #[test]
    fn division_errors() {
        assert_eq!(eval_str("e1/0"), Err(Error::DivisionByZero { offset: 3 }));
        assert!(parse("e1/e2").is_err());
    }

    #[test]
    fn exponent_must_be_integer() {
        assert!(parse("e1^1.5").is_err());
        assert!(parse("e1^-1").is_err());
        assert!(parse("e1^99999999999999999999999").is_err());
        assert_eq!(
            eval_str("e1^18446744073709551615").unwrap(),
            Multivector::e1()
        );
    }

    #[test]
    fn deep_nesting_is_an_error_not_a_crash() {
        let text = "(".repeat(100_000);
        assert_eq!(
            parse(&text).unwrap_err().kind,
            ParseErrorKind::NestingTooDeep
        );
        let text = "-".repeat(100_000) + "1";
        assert_eq!(
            parse(&text).unwrap_err().kind,
            ParseErrorKind::NestingTooDeep
        );
        let long = vec!["e1"; 50_000].join(" + ");
        assert_eq!(
            eval_str(&long).unwrap(),
            Multivector::e1().scale(50_000.0).unwrap()
        );
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(print_canonical(&psi1()), "0.5 + 0.5*e3");
        assert_eq!(print_canonical(&Multivector::ZERO), "0");
        assert_eq!(print_canonical(&Multivector::pseudoscalar()), "i");
        let x = Multivector::new([-1.0, 0.0, -2.5, 1.0, 0.0, 0.0, -1.0, 0.0]).unwrap();
        assert_eq!(print_canonical(&x), "-1 - 2.5*e2 + e3 - e31");
        assert_eq!(eval_str(&print_canonical(&x)).unwrap(), x);
    }

    #[test]
    fn scientific_literals_are_accepted() {
        assert_eq!(
            eval_str("1.5e2").unwrap(),
            Multivector::scalar(150.0).unwrap()
        );
        assert_eq!(
            eval_str("1e-1*e1").unwrap(),
            Multivector::e1().scale(0.1).unwrap()
        );
    }
}
