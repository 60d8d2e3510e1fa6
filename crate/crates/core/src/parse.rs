//! Expression syntax for polynomials and series.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exponent)?
//! exponent := ['-'] integer | '(' ['-'] integer ')'
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Negative exponents are only accepted on invertible monomials of a
//! Laurent ring.

use std::fmt;

use crate::error::{Error, Result};
use crate::int::Integer;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::series::Series;

/// Reserved name of the series variable.
pub const SERIES_VARIABLE: &str = "t";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(Integer),
    Var(String, Position),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32, Position),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(c) => write!(f, "{c}"),
            Expr::Var(v, _) => write!(f, "{v}"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(a, b) => write!(f, "({a}+{b})"),
            Expr::Sub(a, b) => write!(f, "({a}-{b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Pow(a, k, _) => write!(f, "({a})^{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    tokens: Vec<(Token, Position)>,
}

fn syntax(pos: Position, message: impl Into<String>) -> Error {
    Error::Syntax { line: pos.line, column: pos.column, message: message.into() }
}

impl Lexer {
    fn new(src: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let (mut line, mut col) = (1, 1);
        let chars: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Position { line, column: col };
            if c == '\n' {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            if c.is_whitespace() {
                i += 1;
                col += 1;
                continue;
            }
            let start = i;
            let tok = if c.is_ascii_digit() {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                Token::Int(chars[start..i].iter().collect())
            } else if c.is_ascii_alphabetic() || c == '_' {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                Token::Ident(chars[start..i].iter().collect())
            } else {
                i += 1;
                match c {
                    '+' => Token::Plus,
                    '-' | '\u{2212}' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    other => return Err(syntax(pos, format!("unexpected character {other:?}"))),
                }
            };
            col += i - start;
            tokens.push((tok, pos));
        }
        tokens.push((Token::End, Position { line, column: col }));
        Ok(Lexer { tokens })
    }
}

struct Parser {
    tokens: Vec<(Token, Position)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Position {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> (Token, Position) {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {what}, found {}", describe(self.peek()))))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        let pos = self.pos();
        self.bump();
        let paren = *self.peek() == Token::LParen;
        if paren {
            self.bump();
        }
        let negative = *self.peek() == Token::Minus;
        if negative {
            self.bump();
        }
        let (tok, p) = self.bump();
        let Token::Int(digits) = tok else {
            return Err(syntax(p, format!("expected an integer exponent, found {}", describe(&tok))));
        };
        let k: i32 = digits.parse().map_err(|_| syntax(p, format!("exponent {digits} is too large")))?;
        if paren {
            self.expect(Token::RParen, "')'")?;
        }
        Ok(Expr::Pow(Box::new(base), if negative { -k } else { k }, pos))
    }

    fn atom(&mut self) -> Result<Expr> {
        let (tok, pos) = self.bump();
        match tok {
            Token::Int(d) => Ok(Expr::Int(d.parse().map_err(|_| syntax(pos, "bad integer"))?)),
            Token::Ident(name) => Ok(Expr::Var(name, pos)),
            Token::LParen => {
                let e = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(e)
            }
            other => Err(syntax(pos, format!("expected a number, variable or '(', found {}", describe(&other)))),
        }
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::Int(d) => d.clone(),
        Token::Ident(s) => s.clone(),
        Token::Plus => "'+'".into(),
        Token::Minus => "'-'".into(),
        Token::Star => "'*'".into(),
        Token::Caret => "'^'".into(),
        Token::LParen => "'('".into(),
        Token::RParen => "')'".into(),
        Token::End => "end of input".into(),
    }
}

/// Parses `src` into a syntax tree without resolving variables.
pub fn parse_ast(src: &str) -> Result<Expr> {
    let lexer = Lexer::new(src)?;
    let mut p = Parser { tokens: lexer.tokens, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Token::End {
        return Err(syntax(p.pos(), format!("unexpected {}", describe(p.peek()))));
    }
    Ok(e)
}

impl Expr {
    pub fn evaluate(&self, ring: &Ring) -> Result<Polynomial> {
        Ok(match self {
            Expr::Int(c) => Polynomial::constant(ring, c.clone()),
            Expr::Var(name, _) => Polynomial::variable(ring, name)?,
            Expr::Neg(e) => -&e.evaluate(ring)?,
            Expr::Add(a, b) => a.evaluate(ring)?.try_add(&b.evaluate(ring)?)?,
            Expr::Sub(a, b) => a.evaluate(ring)?.try_sub(&b.evaluate(ring)?)?,
            Expr::Mul(a, b) => a.evaluate(ring)?.try_mul(&b.evaluate(ring)?)?,
            Expr::Pow(a, k, pos) => {
                let base = a.evaluate(ring)?;
                if *k >= 0 {
                    base.pow(*k as u32)
                } else {
                    invert_monomial(&base, *pos)?.pow(k.unsigned_abs())
                }
            }
        })
    }
}

fn invert_monomial(p: &Polynomial, pos: Position) -> Result<Polynomial> {
    let ring = p.ring();
    let mut terms = p.terms();
    let (Some((e, c)), None) = (terms.next(), terms.next()) else {
        return Err(syntax(pos, format!("negative power of {p}, which is not a monomial")));
    };
    if !(c.is_one() || *c == Integer::from(-1)) {
        return Err(syntax(pos, format!("negative power of {p}, which is not invertible over the integers")));
    }
    if !ring.is_laurent() {
        if let Some(i) = e.iter().position(|&x| x != 0) {
            return Err(Error::NegativeExponent { var: ring.variables()[i].clone() });
        }
    }
    Polynomial::monomial(ring, e.iter().map(|x| -x).collect(), c.clone())
}

/// Parses a polynomial in `ring`.
pub fn parse_expression(src: &str, ring: &Ring) -> Result<Polynomial> {
    parse_ast(src)?.evaluate(ring)
}

/// Parses an expression in `ring` plus the series variable `t`, truncated at
/// `order`. Negative powers of `t` are rejected.
pub fn parse_series(src: &str, ring: &Ring, order: usize) -> Result<Series> {
    if ring.index_of(SERIES_VARIABLE).is_some() {
        return Err(Error::InvalidRing(format!("{SERIES_VARIABLE} is reserved for the series variable")));
    }
    let extended = ring.extended(SERIES_VARIABLE)?;
    let p = parse_expression(src, &extended)?;
    let r = ring.arity();
    let mut buckets: Vec<Vec<(Vec<i32>, Integer)>> = vec![Vec::new(); order + 1];
    for (e, c) in p.terms() {
        let k = e[r];
        if k < 0 {
            return Err(Error::NegativeExponent { var: SERIES_VARIABLE.into() });
        }
        if let Some(slot) = buckets.get_mut(k as usize) {
            slot.push((e[..r].to_vec(), c.clone()));
        }
    }
    let coeffs = buckets.into_iter().map(|b| Polynomial::from_terms(ring, b)).collect::<Result<Vec<_>>>()?;
    Series::new(ring, coeffs)
}

/// Comma-separated list of polynomials.
pub fn parse_list(src: &str, ring: &Ring) -> Result<Vec<Polynomial>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    src.split(',').map(|s| parse_expression(s, ring)).collect()
}
