//! Exact evaluation of the small formula language used by the table
//! fixtures: integers, one-letter variables, `+ - * / ^`, parentheses and
//! implicit multiplication (`5k^2`, `2(2k+1)`, `g(l-1)`).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type Env = BTreeMap<char, Rational>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Var(char),
    Op(char),
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(v) = d.to_digit(10) else { break };
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(v as u64))
                        .ok_or_else(|| Error::Parse(format!("literal too large in {src:?}")))?;
                    chars.next();
                }
                out.push(Tok::Num(n));
            }
            'a'..='z' => {
                out.push(Tok::Var(c));
                chars.next();
            }
            '+' | '-' | '*' | '/' | '^' => {
                out.push(Tok::Op(c));
                chars.next();
            }
            '(' => {
                out.push(Tok::LParen);
                chars.next();
            }
            ')' => {
                out.push(Tok::RParen);
                chars.next();
            }
            other => return Err(Error::Parse(format!("unexpected {other:?} in {src:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    env: &'a Env,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} of {:?}", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<Rational> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Rational> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs)?;
                }
                Some(Tok::Var(_) | Tok::LParen | Tok::Num(_)) => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Rational> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Rational> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Rational> {
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Rational::from(n)),
            Tok::Var(v) => self
                .env
                .get(&v)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("unbound variable {v:?} in {:?}", self.src))),
            Tok::LParen => {
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

pub fn eval(src: &str, env: &Env) -> Result<Rational> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        env,
        src,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

pub fn env(pairs: &[(char, i64)]) -> Env {
    pairs.iter().map(|&(c, v)| (c, Rational::from(v))).collect()
}
