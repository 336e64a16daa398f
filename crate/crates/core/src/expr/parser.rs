//! Lexer and recursive-descent parser.
//!
//! ```text
//! sum     := tensor (('+' | '-') tensor)*
//! tensor  := product (('@' | '⊗') product)*
//! product := unary ('*'? unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := number ('/' number)? | basis | 'x' | slot | '(' sum ')'
//! ```
//!
//! In a non-associative algebra `⊗` and `_` denote divisor slots (`⊗₁`, `_2`,
//! …) and `@` is rejected.

use num_bigint::BigInt;

use super::Expr;
use crate::algebra::{Algebra, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Basis(String),
    Var,
    Slot(usize),
    Plus,
    Minus,
    Star,
    Tensor(char),
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(message: impl Into<String>, line: usize, column: usize) -> Error {
    Error::Parse {
        message: message.into(),
        line,
        column,
    }
}

fn subscript_digit(c: char) -> Option<u32> {
    ('₀'..='₉').contains(&c).then(|| c as u32 - '₀' as u32)
}

fn lex(src: &str, algebra: &Algebra) -> Result<Vec<Token>> {
    let slots_mode = !algebra.is_associative();
    let mut names: Vec<&str> = algebra.basis()[1..].iter().map(String::as_str).collect();
    names.push("x");
    // longest names first for greedy matching
    names.sort_by_key(|n| std::cmp::Reverse(n.len()));

    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        let (l0, c0) = (line, column);
        let mut advance = |n: usize, pos: &mut usize| {
            for _ in 0..n {
                if chars[*pos] == '\n' {
                    line += 1;
                    column = 1;
                } else {
                    column += 1;
                }
                *pos += 1;
            }
        };
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '@' if slots_mode => {
                return Err(err(
                    "'@' is not available for non-associative algebras; write bracketed products with slots",
                    l0,
                    c0,
                ))
            }
            '@' => Some(Tok::Tensor('@')),
            '⊗' if !slots_mode => Some(Tok::Tensor('⊗')),
            _ => None,
        };
        if let Some(tok) = simple {
            advance(1, &mut pos);
            out.push(Token {
                tok,
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut pos);
            continue;
        }
        if c == '⊗' || c == '_' {
            if !slots_mode {
                return Err(err(
                    "slots are only available for non-associative algebras",
                    l0,
                    c0,
                ));
            }
            let mut n = 1;
            let mut index = 0u32;
            let mut seen = false;
            while let Some(&d) = chars.get(pos + n) {
                let digit = if c == '_' {
                    d.to_digit(10)
                } else {
                    subscript_digit(d)
                };
                match digit {
                    Some(v) => {
                        index = index * 10 + v;
                        seen = true;
                        n += 1;
                    }
                    None => break,
                }
            }
            if seen && index == 0 {
                return Err(err("slots are numbered from 1", l0, c0));
            }
            let slot = if seen { index as usize - 1 } else { 0 };
            advance(n, &mut pos);
            out.push(Token {
                tok: Tok::Slot(slot),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = pos;
            let mut n = 0;
            while chars.get(pos + n).is_some_and(char::is_ascii_digit) {
                n += 1;
            }
            let numer: String = chars[start..start + n].iter().collect();
            let mut value = Rational::from_integer(numer.parse::<BigInt>().expect("digits"));
            if chars.get(pos + n) == Some(&'/')
                && chars.get(pos + n + 1).is_some_and(char::is_ascii_digit)
            {
                let mut m = n + 1;
                while chars.get(pos + m).is_some_and(char::is_ascii_digit) {
                    m += 1;
                }
                let denom: String = chars[start + n + 1..start + m].iter().collect();
                let d = denom.parse::<BigInt>().expect("digits");
                if d == BigInt::from(0) {
                    return Err(err("zero denominator", l0, c0));
                }
                value /= Rational::from_integer(d);
                n = m;
            }
            advance(n, &mut pos);
            out.push(Token {
                tok: Tok::Num(value),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_alphabetic() {
            let start = pos;
            let mut n = 0;
            while chars.get(pos + n).is_some_and(|c| c.is_alphabetic()) {
                n += 1;
            }
            let word: String = chars[start..start + n].iter().collect();
            let mut rest = word.as_str();
            let mut col = c0;
            while !rest.is_empty() {
                let Some(name) = names.iter().find(|n| rest.starts_with(*n)) else {
                    let bad = rest.chars().next().expect("non-empty");
                    return Err(err(
                        format!(
                            "unknown basis symbol '{bad}' for algebra {}",
                            algebra.name()
                        ),
                        l0,
                        col,
                    ));
                };
                let tok = if *name == "x" {
                    Tok::Var
                } else {
                    Tok::Basis(name.to_string())
                };
                out.push(Token {
                    tok,
                    line: l0,
                    column: col,
                });
                col += name.chars().count();
                rest = &rest[name.len()..];
            }
            advance(n, &mut pos);
            continue;
        }
        return Err(err(format!("unexpected character '{c}'"), l0, c0));
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

pub(super) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    non_associative: bool,
    pub(super) warnings: Vec<String>,
}

impl Parser {
    pub(super) fn new(src: &str, algebra: &Algebra) -> Result<Self> {
        Ok(Parser {
            tokens: lex(src, algebra)?,
            pos: 0,
            non_associative: !algebra.is_associative(),
            warnings: Vec::new(),
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> Error {
        let t = self.peek();
        let found = match &t.tok {
            Tok::End => "end of input".to_string(),
            other => format!("{other:?}"),
        };
        err(
            format!("expected {expected}, found {found}"),
            t.line,
            t.column,
        )
    }

    pub(super) fn parse_all(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::End {
            return Err(self.unexpected("an expression"));
        }
        let e = self.sum()?;
        if self.peek().tok != Tok::End {
            return Err(self.unexpected("an operator or end of input"));
        }
        Ok(e)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut left = self.tensor()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    left = Expr::Add(Box::new(left), Box::new(self.tensor()?));
                }
                Tok::Minus => {
                    self.bump();
                    left = Expr::Sub(Box::new(left), Box::new(self.tensor()?));
                }
                _ => return Ok(left),
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut left = self.product()?;
        while let Tok::Tensor(_) = self.peek().tok {
            self.bump();
            left = Expr::Tensor(Box::new(left), Box::new(self.product()?));
        }
        Ok(left)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek().tok,
            Tok::Num(_) | Tok::Basis(_) | Tok::Var | Tok::Slot(_) | Tok::LParen
        )
    }

    fn product(&mut self) -> Result<Expr> {
        let start = self.peek().clone();
        let mut left = self.unary()?;
        let mut factors = 1;
        loop {
            if self.peek().tok == Tok::Star {
                self.bump();
            } else if !self.starts_atom() {
                break;
            }
            left = Expr::Mul(Box::new(left), Box::new(self.unary()?));
            factors += 1;
        }
        if self.non_associative && factors >= 3 {
            self.warnings.push(format!(
                "{}:{}: product of {factors} factors without brackets; associating to the left",
                start.line, start.column
            ));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let t = self.bump();
        let Tok::Num(n) = &t.tok else {
            return Err(err("expected an integer exponent", t.line, t.column));
        };
        let exp = (n.is_integer())
            .then(|| u32::try_from(n.to_integer()).ok())
            .flatten()
            .ok_or_else(|| {
                err(
                    "exponent must be a small non-negative integer",
                    t.line,
                    t.column,
                )
            })?;
        if self.non_associative && exp >= 3 {
            self.warnings.push(format!(
                "{}:{}: power {exp} without brackets; associating to the left",
                caret.line, caret.column
            ));
        }
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Num(v))
            }
            Tok::Basis(name) => {
                self.bump();
                Ok(Expr::Basis(name))
            }
            Tok::Var => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::Slot(i) => {
                self.bump();
                Ok(Expr::Slot(i))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(Expr::Paren(Box::new(inner)))
            }
            _ => Err(self.unexpected("a number, basis symbol, 'x' or '('")),
        }
    }
}
