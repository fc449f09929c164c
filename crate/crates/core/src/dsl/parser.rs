//! Recursive-descent parser for class expressions.
//!
//! ```text
//! input  := expr [ '[' space ']' ]
//! expr   := term { '+' term }
//! term   := factor { ['*' | '/'] factor }
//! factor := atom [ '^' INT ]
//! atom   := SYMBOL | INT | '(' expr ')' | 'binom(' INT ',' INT ')' | '1/' atom
//! space  := 'P(' INT ',' INT ')' | 'RP(' INT ')' | 'RPnu'
//! ```
//!
//! `p/q` is read as `p * 1/q`.

use super::ast::{Expr, Space, Symbol};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    LBracket,
    RBracket,
    Semi,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
            Tok::Plus => "`+`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Semi => "`;`".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, column);
        let simple = match ch {
            '+' => Some(Tok::Plus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ';' => Some(Tok::Semi),
            _ => None,
        };
        if let Some(tok) = simple {
            chars.next();
            column += 1;
            out.push(Token {
                tok,
                line: l,
                column: c,
            });
        } else if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if ch.is_whitespace() {
            chars.next();
            column += 1;
        } else if ch.is_ascii_digit() {
            let mut value: u64 = 0;
            while let Some(&d) = chars.peek() {
                let Some(digit) = d.to_digit(10) else { break };
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(digit as u64))
                    .ok_or_else(|| parse_error(l, c, "integer literal too large"))?;
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Int(value),
                line: l,
                column: c,
            });
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut ident = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                ident.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token {
                tok: Tok::Ident(ident),
                line: l,
                column: c,
            });
        } else {
            return Err(parse_error(l, c, format!("unexpected character `{ch}`")));
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub(crate) struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.tokens[self.pos].tok.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> Error {
        let t = &self.tokens[self.pos];
        parse_error(t.line, t.column, message)
    }

    pub(crate) fn at(&self, tok: &Tok) -> bool {
        self.peek() == tok
    }

    pub(crate) fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().describe()
            )))
        }
    }

    pub(crate) fn expect_int(&mut self) -> Result<u64> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.next();
                Ok(n)
            }
            other => Err(self.error_here(format!("expected integer, found {}", other.describe()))),
        }
    }

    fn expect_u32(&mut self) -> Result<u32> {
        let n = self.expect_int()?;
        u32::try_from(n).map_err(|_| self.error_here("integer out of range"))
    }

    pub(crate) fn expect_ident(&mut self) -> Result<String> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            other => Err(self.error_here(format!("expected a name, found {}", other.describe()))),
        }
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.next();
            true
        } else {
            false
        }
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.at(&Tok::Eof) {
            Ok(())
        } else {
            Err(self.error_here(format!("unexpected {}", self.peek().describe())))
        }
    }

    pub(crate) fn parse_input(&mut self) -> Result<Expr> {
        let mut e = self.parse_sum()?;
        if self.eat(&Tok::LBracket) {
            let space = self.parse_space()?;
            self.expect(Tok::RBracket)?;
            e = Expr::Eval(Box::new(e), space);
        }
        self.finish()?;
        Ok(e)
    }

    fn parse_sum(&mut self) -> Result<Expr> {
        let mut e = self.parse_term()?;
        while self.eat(&Tok::Plus) {
            e = Expr::sum(e, self.parse_term()?);
        }
        Ok(e)
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut e = self.parse_factor()?;
        loop {
            if self.eat(&Tok::Star) {
                e = Expr::product(e, self.parse_factor()?);
            } else if self.eat(&Tok::Slash) {
                e = Expr::product(e, Expr::inv(self.parse_factor()?));
            } else if self.starts_atom() {
                e = Expr::product(e, self.parse_factor()?);
            } else {
                return Ok(e);
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr> {
        let a = self.parse_atom()?;
        if self.eat(&Tok::Caret) {
            let n = self.expect_u32()?;
            return Ok(Expr::pow(a, n));
        }
        Ok(a)
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(1) if *self.peek2() == Tok::Slash => {
                self.next();
                self.next();
                Ok(Expr::inv(self.parse_atom()?))
            }
            Tok::Int(n) => {
                self.next();
                Ok(Expr::Int(n))
            }
            Tok::LParen => {
                self.next();
                let e = self.parse_sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) if name == "binom" => {
                self.next();
                self.expect(Tok::LParen)?;
                let n = self.expect_int()?;
                self.expect(Tok::Comma)?;
                let r = self.expect_int()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Binom(n, r))
            }
            Tok::Ident(name) => match Symbol::from_name(&name) {
                Some(s) => {
                    self.next();
                    Ok(Expr::Sym(s))
                }
                None => Err(self.error_here(format!(
                    "unknown symbol `{name}` (expected c, d, alpha, e or binom)"
                ))),
            },
            other => {
                Err(self.error_here(format!("expected an operand, found {}", other.describe())))
            }
        }
    }

    pub(crate) fn parse_space(&mut self) -> Result<Space> {
        let name = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => {
                return Err(
                    self.error_here("malformed bracket target: expected P(h,i), RP(n) or RPnu")
                )
            }
        };
        match name.as_str() {
            "P" => {
                self.next();
                self.expect(Tok::LParen)?;
                let h = self.expect_u32()?;
                self.expect(Tok::Comma)?;
                let i = self.expect_u32()?;
                self.expect(Tok::RParen)?;
                Ok(Space::Dold { h, i })
            }
            "RP" => {
                self.next();
                self.expect(Tok::LParen)?;
                let n = self.expect_u32()?;
                self.expect(Tok::RParen)?;
                Ok(Space::Projective { n })
            }
            "RPnu" => {
                self.next();
                Ok(Space::ProjBundle)
            }
            other => Err(self.error_here(format!(
                "malformed bracket target `{other}`: expected P(h,i), RP(n) or RPnu"
            ))),
        }
    }
}

/// Parses one expression, optionally followed by a bracket evaluation.
pub fn parse(source: &str) -> Result<Expr> {
    Parser::new(source)?.parse_input()
}
