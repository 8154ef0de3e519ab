//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | <juxtaposition>)? factor)*
//! factor := '-'? atom ('^' uint)? ('/' uint)?
//! atom   := number | var | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant and every letter is a single-letter variable,
//! so `4t`, `u v^2`, `uv^2` and `(1+t^2)^5` all parse. Division is only by
//! nonzero integer literals. Numbers may carry a decimal point (`0.25`); they
//! are read exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Exponent, Poly1, Poly2, SparsePoly};
use crate::scalar::Ratio;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    U,
    V,
}

impl Var {
    fn name(self) -> char {
        match self {
            Var::T => 't',
            Var::U => 'u',
            Var::V => 'v',
        }
    }
}

/// Which variables a parse admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    /// `t` only.
    Univariate,
    /// `u` and `v`.
    Bivariate,
}

impl Arity {
    fn admits(self, v: Var) -> bool {
        match self {
            Arity::Univariate => v == Var::T,
            Arity::Bivariate => v != Var::T,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
    Var(Var),
    Const(Ratio),
    Neg(Box<Expr>),
}

impl Expr {
    /// Direct recursive evaluation.
    pub fn eval(&self, env: &impl Fn(Var) -> Ratio) -> Ratio {
        match self {
            Expr::Sum(xs) => xs.iter().map(|x| x.eval(env)).sum(),
            Expr::Product(xs) => xs.iter().map(|x| x.eval(env)).product(),
            Expr::Power(b, e) => b.eval(env).pow(*e),
            Expr::Var(v) => env(*v),
            Expr::Const(c) => c.clone(),
            Expr::Neg(x) => -x.eval(env),
        }
    }

    /// Expand to monomial form, mapping each variable to its exponent.
    pub fn expand<E: Exponent>(&self, var: &impl Fn(Var) -> E) -> SparsePoly<E> {
        match self {
            Expr::Sum(xs) => xs.iter().fold(SparsePoly::zero(), |acc, x| &acc + &x.expand(var)),
            Expr::Product(xs) => xs.iter().fold(SparsePoly::one(), |acc, x| &acc * &x.expand(var)),
            Expr::Power(b, e) => b.expand(var).pow(*e),
            Expr::Var(v) => SparsePoly::monomial(var(*v), Ratio::one()),
            Expr::Const(c) => SparsePoly::constant(c.clone()),
            Expr::Neg(x) => -&x.expand(var),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at column {}: {kind}", .pos + 1)]
pub struct ParseError {
    /// Byte offset into the source.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    NegativeExponent,
    FractionalExponent,
    ExponentTooLarge,
    UnknownVariable(char),
    WrongVariable { var: char, expected: &'static str },
    DivisionByNonConstant,
    DivisionByZero,
    Empty,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::NegativeExponent => f.write_str("exponent must be a nonnegative integer"),
            ParseErrorKind::FractionalExponent => f.write_str("exponent must be an integer"),
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent exceeds {MAX_EXPONENT}"),
            ParseErrorKind::UnknownVariable(c) => write!(f, "unknown variable {c:?}"),
            ParseErrorKind::WrongVariable { var, expected } => {
                write!(f, "variable {var:?} not allowed here (expected {expected})")
            }
            ParseErrorKind::DivisionByNonConstant => f.write_str("can only divide by an integer literal"),
            ParseErrorKind::DivisionByZero => f.write_str("division by zero"),
            ParseErrorKind::Empty => f.write_str("empty expression"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { text: String },
    Letter(char),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num { text } => format!("number {text}"),
            Tok::Letter(c) => format!("{c:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Num { .. } | Tok::Letter(_) | Tok::LParen)
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{b7}' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() || c == '.' => {
                let mut end = pos + 1;
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() || d == '.' {
                        chars.next();
                        end += 1;
                    } else {
                        break;
                    }
                }
                let text = &src[pos..end];
                if text.matches('.').count() > 1 || text == "." {
                    return Err(ParseError { pos, kind: ParseErrorKind::UnexpectedToken(format!("number {text}")) });
                }
                Tok::Num { text: text.to_string() }
            }
            c if c.is_alphabetic() => Tok::Letter(c),
            c => return Err(ParseError { pos, kind: ParseErrorKind::UnexpectedChar(c) }),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

fn number_value(text: &str) -> Ratio {
    match text.split_once('.') {
        None => Ratio::from_integer(text.parse::<BigInt>().expect("lexed digits")),
        Some((int, frac)) => {
            let digits = format!("{int}{frac}");
            let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().expect("lexed digits") };
            let d = num_traits::pow(BigInt::from(10), frac.len());
            Ratio::new(n, d).expect("nonzero power of ten")
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    arity: Arity,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), kind })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Some(t) if t.starts_atom() => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let mut node = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = self.exponent()?;
            node = Expr::Power(Box::new(node), e);
        }
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Num { text }) if !text.contains('.') => {
                    let d = number_value(&text);
                    if d.is_zero() {
                        return Err(ParseError { pos, kind: ParseErrorKind::DivisionByZero });
                    }
                    node = Expr::Product(vec![node, Expr::Const(d.recip().expect("nonzero"))]);
                }
                Some(_) => return Err(ParseError { pos, kind: ParseErrorKind::DivisionByNonConstant }),
                None => return Err(ParseError { pos, kind: ParseErrorKind::UnexpectedEnd }),
            }
        }
        Ok(if negate { Expr::Neg(Box::new(node)) } else { node })
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => self.err(ParseErrorKind::NegativeExponent),
            Some(Tok::Num { text }) => {
                if text.contains('.') {
                    return self.err(ParseErrorKind::FractionalExponent);
                }
                let big: BigInt = text.parse().expect("lexed digits");
                let e = match u32::try_from(big) {
                    Ok(e) if e <= MAX_EXPONENT => e,
                    _ => return self.err(ParseErrorKind::ExponentTooLarge),
                };
                self.bump();
                Ok(e)
            }
            _ => self.unexpected(),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num { text }) => {
                self.bump();
                Ok(Expr::Const(number_value(&text)))
            }
            Some(Tok::Letter(c)) => {
                let var = match c {
                    't' => Var::T,
                    'u' => Var::U,
                    'v' => Var::V,
                    _ => return self.err(ParseErrorKind::UnknownVariable(c)),
                };
                if !self.arity.admits(var) {
                    let expected = match self.arity {
                        Arity::Univariate => "t",
                        Arity::Bivariate => "u or v",
                    };
                    return self.err(ParseErrorKind::WrongVariable { var: var.name(), expected });
                }
                self.bump();
                Ok(Expr::Var(var))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => self.unexpected(),
                }
            }
            _ => self.unexpected(),
        }
    }
}

/// Parse to an expression tree without expanding.
pub fn parse_expr(src: &str, arity: Arity) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError { pos: 0, kind: ParseErrorKind::Empty });
    }
    let mut p = Parser { toks, at: 0, end: src.len(), arity };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.unexpected();
    }
    Ok(e)
}

pub fn parse_poly1(src: &str) -> Result<Poly1, ParseError> {
    Ok(parse_expr(src, Arity::Univariate)?.expand(&|_| 1u32))
}

pub fn parse_poly2(src: &str) -> Result<Poly2, ParseError> {
    Ok(parse_expr(src, Arity::Bivariate)?.expand(&|v| match v {
        Var::U => (1u32, 0u32),
        _ => (0, 1),
    }))
}
