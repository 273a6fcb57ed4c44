//! Operator expressions: rational literals, `x1..xn`, `D1..Dn` (alias `d1`),
//! optionally `t`, with `+ - *` (noncommutative), `^` (natural power),
//! unary minus and parentheses. `*` is left-associative and `^` binds
//! tighter than `*`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exponent::{Exponent, HExponent};
use crate::scalar::Field;
use crate::weyl::{HomogOperator, WeylOperator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownSymbol(String),
    IndexOutOfRange { symbol: String, n: usize },
    DivisionByZero,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            ParseErrorKind::IndexOutOfRange { symbol, n } => {
                write!(f, "index of `{symbol}` out of range (n = {n})")
            }
            ParseErrorKind::DivisionByZero => write!(f, "zero denominator in literal"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
}

/// A generator symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    X(usize),
    D(usize),
    T,
}

/// Abstract syntax of an operator expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorExpr {
    Literal { num: BigInt, den: BigInt },
    Symbol(Symbol),
    Neg(Box<OperatorExpr>),
    Add(Box<OperatorExpr>, Box<OperatorExpr>),
    Sub(Box<OperatorExpr>, Box<OperatorExpr>),
    Mul(Box<OperatorExpr>, Box<OperatorExpr>),
    Pow(Box<OperatorExpr>, u32),
}

impl OperatorExpr {
    /// Largest 1-based variable index mentioned, 0 if none.
    pub fn max_index(&self) -> usize {
        match self {
            OperatorExpr::Literal { .. } | OperatorExpr::Symbol(Symbol::T) => 0,
            OperatorExpr::Symbol(Symbol::X(i) | Symbol::D(i)) => i + 1,
            OperatorExpr::Neg(a) | OperatorExpr::Pow(a, _) => a.max_index(),
            OperatorExpr::Add(a, b) | OperatorExpr::Sub(a, b) | OperatorExpr::Mul(a, b) => {
                a.max_index().max(b.max_index())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&ch) = chars.peek() {
        let pos = Pos { line, column };
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                s.push(c);
                chars.next();
                column += 1;
            }
            out.push((Tok::Num(s.parse().expect("digits")), pos));
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&c) = chars
                .peek()
                .filter(|c| c.is_ascii_alphanumeric() || **c == '_')
            {
                s.push(c);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Syntax(format!("unexpected character `{other}`")),
                    line,
                    column,
                })
            }
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    n: usize,
    allow_t: bool,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err_at(&self, pos: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            line: pos.line,
            column: pos.column,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err_at(self.pos(), ParseErrorKind::Syntax(msg.into()))
    }

    fn expr(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = OperatorExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = OperatorExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<OperatorExpr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = OperatorExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<OperatorExpr, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(OperatorExpr::Neg(Box::new(self.unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<OperatorExpr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Num(e) => {
                let e = u32::try_from(&e).map_err(|_| {
                    self.err_at(pos, ParseErrorKind::Syntax("exponent too large".into()))
                })?;
                Ok(OperatorExpr::Pow(Box::new(base), e))
            }
            _ => Err(self.err_at(
                pos,
                ParseErrorKind::Syntax("expected a natural number after `^`".into()),
            )),
        }
    }

    fn atom(&mut self) -> Result<OperatorExpr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(num) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Num(den) if den == BigInt::default() => {
                            Err(self.err_at(dpos, ParseErrorKind::DivisionByZero))
                        }
                        Tok::Num(den) => Ok(OperatorExpr::Literal { num, den }),
                        _ => Err(self.err_at(
                            dpos,
                            ParseErrorKind::Syntax("expected a denominator after `/`".into()),
                        )),
                    }
                } else {
                    Ok(OperatorExpr::Literal {
                        num,
                        den: BigInt::from(1),
                    })
                }
            }
            Tok::Ident(name) => self.symbol(&name, pos).map(OperatorExpr::Symbol),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.syntax("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(self.err_at(
                pos,
                ParseErrorKind::Syntax("unexpected end of input".into()),
            )),
            other => Err(self.err_at(
                pos,
                ParseErrorKind::Syntax(format!("unexpected token {}", describe(&other))),
            )),
        }
    }

    fn symbol(&self, name: &str, pos: Pos) -> Result<Symbol, ParseError> {
        if name == "t" {
            return if self.allow_t {
                Ok(Symbol::T)
            } else {
                Err(self.err_at(pos, ParseErrorKind::UnknownSymbol(name.into())))
            };
        }
        let (head, digits) = name.split_at(1);
        let index: Option<usize> = (!digits.is_empty()
            && digits.bytes().all(|b| b.is_ascii_digit()))
        .then(|| digits.parse().ok())
        .flatten();
        let (Some(i), true) = (index, matches!(head, "x" | "D" | "d")) else {
            return Err(self.err_at(pos, ParseErrorKind::UnknownSymbol(name.into())));
        };
        if i == 0 || i > self.n {
            return Err(self.err_at(
                pos,
                ParseErrorKind::IndexOutOfRange {
                    symbol: name.into(),
                    n: self.n,
                },
            ));
        }
        Ok(if head == "x" {
            Symbol::X(i - 1)
        } else {
            Symbol::D(i - 1)
        })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn parse_expr(text: &str, n: usize, allow_t: bool) -> Result<OperatorExpr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        n,
        allow_t,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.syntax(format!("unexpected token {}", describe(p.peek()))));
    }
    Ok(e)
}

/// Parses an element of `A_n(K)` into normal form.
pub fn parse_operator<K: Field>(
    text: &str,
    n: usize,
    ctx: &K::Context,
) -> Result<WeylOperator<K>, ParseError> {
    let ast = parse_expr(text, n, false)?;
    eval_weyl(&ast, n, ctx)
}

/// Parses an element of `A_n[t]` into normal form.
pub fn parse_homog<K: Field>(
    text: &str,
    n: usize,
    ctx: &K::Context,
) -> Result<HomogOperator<K>, ParseError> {
    let ast = parse_expr(text, n, true)?;
    eval_homog(&ast, n, ctx)
}

/// Syntax tree only; `allow_t` admits the homogenizing variable.
pub fn parse_ast(text: &str, n: usize, allow_t: bool) -> Result<OperatorExpr, ParseError> {
    parse_expr(text, n, allow_t)
}

fn literal<K: Field>(num: &BigInt, den: &BigInt, ctx: &K::Context) -> Result<K, ParseError> {
    K::from_ratio(ctx, num, den).map_err(|_| ParseError {
        kind: ParseErrorKind::DivisionByZero,
        line: 0,
        column: 0,
    })
}

fn eval_weyl<K: Field>(
    e: &OperatorExpr,
    n: usize,
    ctx: &K::Context,
) -> Result<WeylOperator<K>, ParseError> {
    Ok(match e {
        OperatorExpr::Literal { num, den } => WeylOperator::constant(n, literal(num, den, ctx)?),
        OperatorExpr::Symbol(Symbol::X(i)) => WeylOperator::x(n, *i, ctx),
        OperatorExpr::Symbol(Symbol::D(i)) => WeylOperator::d(n, *i, ctx),
        OperatorExpr::Symbol(Symbol::T) => unreachable!("t rejected by the parser"),
        OperatorExpr::Neg(a) => eval_weyl(a, n, ctx)?.neg(),
        OperatorExpr::Add(a, b) => eval_weyl(a, n, ctx)?.add(&eval_weyl(b, n, ctx)?),
        OperatorExpr::Sub(a, b) => eval_weyl(a, n, ctx)?.sub(&eval_weyl(b, n, ctx)?),
        OperatorExpr::Mul(a, b) => eval_weyl(a, n, ctx)?.mul(&eval_weyl(b, n, ctx)?),
        OperatorExpr::Pow(a, k) => eval_weyl(a, n, ctx)?.pow(n, *k, ctx),
    })
}

fn eval_homog<K: Field>(
    e: &OperatorExpr,
    n: usize,
    ctx: &K::Context,
) -> Result<HomogOperator<K>, ParseError> {
    let gen = |exp: HExponent| HomogOperator::monomial(exp, K::one(ctx));
    Ok(match e {
        OperatorExpr::Literal { num, den } => {
            HomogOperator::monomial(HExponent::zero(n), literal(num, den, ctx)?)
        }
        OperatorExpr::Symbol(Symbol::X(i)) => gen(HExponent::new(0, Exponent::x(n, *i))),
        OperatorExpr::Symbol(Symbol::D(i)) => gen(HExponent::new(0, Exponent::d(n, *i))),
        OperatorExpr::Symbol(Symbol::T) => gen(HExponent::new(1, Exponent::zero(n))),
        OperatorExpr::Neg(a) => eval_homog(a, n, ctx)?.neg(),
        OperatorExpr::Add(a, b) => eval_homog(a, n, ctx)?.add(&eval_homog(b, n, ctx)?),
        OperatorExpr::Sub(a, b) => eval_homog(a, n, ctx)?.sub(&eval_homog(b, n, ctx)?),
        OperatorExpr::Mul(a, b) => eval_homog(a, n, ctx)?.mul(&eval_homog(b, n, ctx)?),
        OperatorExpr::Pow(a, k) => {
            let base = eval_homog(a, n, ctx)?;
            let mut acc = HomogOperator::t_power(n, 0, ctx);
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}
