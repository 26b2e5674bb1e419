//! Brace notation.
//!
//! ```text
//! expr   := atom (("+" | "-") atom)*
//! atom   := "-" atom | number | "*" | "^" | "v" | "{" list "|" list "}"
//! list   := (expr ("," expr)*)?
//! number := integer | integer "/" (power-of-two | "2^" integer)
//! ```
//!
//! Whitespace is ignored. Numbers elaborate to canonical dyadic forms, `*`,
//! `^` and `v` to `{0|0}`, `{0|*}` and `{*|0}`; a sum or difference is fully
//! unfolded, so `1/2+1/2` is a literal sum, not the number `1`.

use std::fmt;

use thiserror::Error;

use crate::dyadic::{canonical_dyadic_form, is_canonical_dyadic_member, parse_denominator, Dyadic};
use crate::forms::Game;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Parsed notation, before elaboration into a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Dyadic),
    Star,
    Up,
    Down,
    Braces(Vec<Expr>, Vec<Expr>),
    Neg(Box<Expr>),
    Chain(Box<Expr>, Vec<(Sign, Expr)>),
}

impl Expr {
    pub fn elaborate(&self) -> Game {
        match self {
            Expr::Number(x) => canonical_dyadic_form(*x),
            Expr::Star => Game::star(),
            Expr::Up => Game::up(),
            Expr::Down => Game::down(),
            Expr::Braces(l, r) => {
                Game::new(l.iter().map(Expr::elaborate), r.iter().map(Expr::elaborate))
            }
            Expr::Neg(e) => e.elaborate().conjugate(),
            Expr::Chain(first, rest) => rest.iter().fold(first.elaborate(), |acc, (sign, e)| {
                let g = e.elaborate();
                match sign {
                    Sign::Plus => acc + g,
                    Sign::Minus => acc - g,
                }
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected `{0}`")]
    Unexpected(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unbalanced braces")]
    Unbalanced,
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("denominator `{0}` is not a positive power of two")]
    BadDenominator(String),
}

/// A parse failure at a byte offset.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        trimmed.chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            kind,
        })
    }

    fn unexpected<T>(&mut self) -> Result<T, ParseError> {
        match self.peek() {
            Some('}') if self.depth == 0 => self.err(ParseErrorKind::Unbalanced),
            Some(c) => self.err(ParseErrorKind::Unexpected(c)),
            None if self.depth > 0 => self.err(ParseErrorKind::Unbalanced),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let first = self.atom()?;
        let mut rest = Vec::new();
        loop {
            let sign = match self.peek() {
                Some('+') => Sign::Plus,
                Some('-') => Sign::Minus,
                _ => break,
            };
            self.bump();
            rest.push((sign, self.atom()?));
        }
        Ok(if rest.is_empty() {
            first
        } else {
            Expr::Chain(Box::new(first), rest)
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(match self.atom()? {
                    Expr::Number(x) => Expr::Number(-x),
                    e => Expr::Neg(Box::new(e)),
                })
            }
            Some('*') => {
                self.bump();
                Ok(Expr::Star)
            }
            Some('^') => {
                self.bump();
                Ok(Expr::Up)
            }
            Some('v') => {
                self.bump();
                Ok(Expr::Down)
            }
            Some('{') => {
                self.bump();
                self.depth += 1;
                let left = self.list()?;
                if self.peek() != Some('|') {
                    return self.unexpected();
                }
                self.bump();
                let right = self.list()?;
                match self.peek() {
                    Some('}') => {
                        self.bump();
                    }
                    _ => return self.unexpected(),
                }
                self.depth -= 1;
                Ok(Expr::Braces(left, right))
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            _ => self.unexpected(),
        }
    }

    fn list(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut items = Vec::new();
        if matches!(self.peek(), Some('|') | Some('}')) {
            return Ok(items);
        }
        items.push(self.expr()?);
        while self.peek() == Some(',') {
            self.bump();
            items.push(self.expr()?);
        }
        Ok(items)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        &self.src[start..start + len]
    }

    fn number(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let int = self.digits();
        let num = match int.parse::<i64>() {
            Ok(n) => n,
            Err(_) => {
                return Err(ParseError {
                    pos: start,
                    kind: ParseErrorKind::BadNumber(int.into()),
                })
            }
        };
        // Only a '/' directly after the digits (modulo whitespace) starts a denominator.
        if self.peek() != Some('/') {
            return Ok(Expr::Number(Dyadic::integer(num)));
        }
        self.bump();
        self.peek();
        let den_start = self.pos;
        let base = self.digits();
        if base.is_empty() {
            return self.unexpected();
        }
        let mut den = base.to_string();
        if base == "2" && self.src[self.pos..].starts_with('^') {
            let after = &self.src[self.pos + 1..];
            if after.starts_with(|c: char| c.is_ascii_digit()) {
                self.pos += 1;
                den = format!("2^{}", self.digits());
            }
        }
        let exp = parse_denominator(&den).map_err(|_| ParseError {
            pos: den_start,
            kind: ParseErrorKind::BadDenominator(den.clone()),
        })?;
        Ok(Expr::Number(Dyadic::new(num, exp)))
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        depth: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some('}') => p.err(ParseErrorKind::Unbalanced),
        Some(c) => p.err(ParseErrorKind::Unexpected(c)),
    }
}

/// Parses and elaborates in one step.
pub fn parse_game(text: &str) -> Result<Game, ParseError> {
    parse(text).map(|e| e.elaborate())
}

/// Renders `g` in brace notation with options in structural order.
///
/// Raw mode expands everything and writes the zero game as `0`. Shorthand
/// mode additionally writes canonical dyadic forms as numbers and `*`,
/// `{0|*}`, `{*|0}` as `*`, `^`, `v`. Either output parses back to `g`.
pub fn print_form(g: Game, shorthand: bool) -> String {
    let mut out = String::new();
    write_form(&mut out, g, shorthand).expect("writing to a String");
    out
}

fn write_form(out: &mut String, g: Game, shorthand: bool) -> fmt::Result {
    use fmt::Write;
    if g.is_zero() {
        return out.write_char('0');
    }
    if shorthand {
        if let Some(x) = is_canonical_dyadic_member(g) {
            return write!(out, "{x}");
        }
        if g == Game::star() {
            return out.write_char('*');
        }
        if g == Game::up() {
            return out.write_char('^');
        }
        if g == Game::down() {
            return out.write_char('v');
        }
    }
    out.write_char('{')?;
    write_list(out, g.left(), shorthand)?;
    out.write_char('|')?;
    write_list(out, g.right(), shorthand)?;
    out.write_char('}')
}

fn write_list(out: &mut String, options: &[Game], shorthand: bool) -> fmt::Result {
    use fmt::Write;
    for (i, &x) in options.iter().enumerate() {
        if i > 0 {
            out.write_char(',')?;
        }
        write_form(out, x, shorthand)?;
    }
    Ok(())
}
