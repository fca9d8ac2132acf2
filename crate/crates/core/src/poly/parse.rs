//! Text grammar for polynomials.
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := (integer | variable) ('^' integer)?
//! variable := 'x' | 'y' | 'z' | 'x1' ... 'x9'
//! ```
//!
//! Whitespace is ignored and multiplication must be explicit. The two variable
//! styles cannot be mixed in one polynomial.

use std::collections::BTreeMap;

use super::{IntPoly, MAX_ARITY};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Var { index: usize, indexed: bool },
    Plus,
    Minus,
    Star,
    Caret,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '0'..='9' => {
                let mut value = c.to_digit(10).unwrap() as u64;
                while let Some(&(_, d)) = chars.get(i) {
                    let Some(digit) = d.to_digit(10) else { break };
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit as u64))
                        .ok_or_else(|| syntax(pos, "integer literal too large"))?;
                    i += 1;
                }
                Tok::Num(value)
            }
            'x' => match chars.get(i) {
                Some(&(_, d @ '1'..='9')) => {
                    i += 1;
                    Tok::Var {
                        index: d.to_digit(10).unwrap() as usize - 1,
                        indexed: true,
                    }
                }
                _ => Tok::Var {
                    index: 0,
                    indexed: false,
                },
            },
            'y' => Tok::Var {
                index: 1,
                indexed: false,
            },
            'z' => Tok::Var {
                index: 2,
                indexed: false,
            },
            other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    style: Option<bool>,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|&(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(Tok::Caret) {
            return Ok(1);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num(n)) if n <= MAX_EXPONENT as u64 => {
                self.at += 1;
                Ok(n as u32)
            }
            Some(Tok::Num(_)) => Err(syntax(pos, format!("exponent exceeds {MAX_EXPONENT}"))),
            _ => Err(syntax(pos, "expected a nonnegative integer exponent")),
        }
    }

    /// Parses one product of factors into (coefficient, exponents by variable).
    fn term(&mut self) -> Result<(i128, [u32; MAX_ARITY])> {
        let mut coeff: i128 = 1;
        let mut exps = [0u32; MAX_ARITY];
        loop {
            let pos = self.pos();
            match self.peek() {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    let e = self.exponent()?;
                    let value = (n as i128)
                        .checked_pow(e)
                        .and_then(|v| coeff.checked_mul(v))
                        .filter(|v| i64::try_from(*v).is_ok())
                        .ok_or_else(|| syntax(pos, "coefficient too large"))?;
                    coeff = value;
                }
                Some(Tok::Var { index, indexed }) => {
                    match self.style {
                        Some(s) if s != indexed => {
                            return Err(syntax(pos, "cannot mix x/y/z with x1..x9 variables"))
                        }
                        _ => self.style = Some(indexed),
                    }
                    self.at += 1;
                    let e = self.exponent()?;
                    exps[index] = exps[index]
                        .checked_add(e)
                        .filter(|&v| v <= MAX_EXPONENT)
                        .ok_or_else(|| syntax(pos, format!("exponent exceeds {MAX_EXPONENT}")))?;
                }
                _ => return Err(syntax(pos, "expected an integer or a variable")),
            }
            match self.peek() {
                Some(Tok::Star) => self.at += 1,
                Some(Tok::Plus | Tok::Minus) | None => return Ok((coeff, exps)),
                Some(_) => {
                    return Err(syntax(
                        self.pos(),
                        "expected an operator (implicit multiplication is not allowed)",
                    ))
                }
            }
        }
    }
}

/// Parses polynomial text into its canonical form.
pub fn parse_poly(text: &str) -> Result<IntPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        style: None,
    };
    if p.peek().is_none() {
        return Err(syntax(0, "empty polynomial"));
    }
    let mut merged: BTreeMap<[u32; MAX_ARITY], i128> = BTreeMap::new();
    let mut first = true;
    while p.peek().is_some() {
        let sign = match p.peek() {
            Some(Tok::Plus) => {
                p.at += 1;
                1
            }
            Some(Tok::Minus) => {
                p.at += 1;
                -1
            }
            _ if first => 1,
            _ => unreachable!("term() stops only at +, - or end of input"),
        };
        first = false;
        let pos = p.pos();
        let (coeff, exps) = p.term()?;
        let slot = merged.entry(exps).or_insert(0);
        *slot = slot
            .checked_add(sign * coeff)
            .filter(|v| i64::try_from(*v).is_ok())
            .ok_or_else(|| syntax(pos, "coefficient too large"))?;
    }
    let arity = merged
        .iter()
        .filter(|(_, &c)| c != 0)
        .flat_map(|(e, _)| {
            e.iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, _)| j + 1)
        })
        .max()
        .unwrap_or(1);
    IntPoly::new(
        arity,
        merged
            .into_iter()
            .map(|(e, c)| (e[..arity].to_vec(), c as i64)),
    )
}
