//! A small expression language for elements of `Z_n`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom postfix*
//! postfix:= '^' nat | "'"
//! atom   := 'z[' nat ']' | 'w[' nat ']' | 'Q[' nat ']' | 'q' | int | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and juxtaposition is not multiplication. The right
//! operand of `/` must evaluate to a nonzero scalar. The printed form of every
//! [`ZElement`] is accepted and evaluates back to the same element.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qfield::QRat;
use crate::zalgebra::ZElement;

/// Which generator family a leaf refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenLeaf {
    Z,
    W,
    Q,
}

/// Parsed expression tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Gen(GenLeaf, usize),
    Int(BigInt),
    QVar,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Star(Box<Expr>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(syntax(self.pos, format!("expected '{}', found '{}'", c as char, x as char))),
            None => Err(syntax(self.pos, format!("expected '{}', found end of input", c as char))),
        }
    }

    fn digits(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected a nonnegative integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok((start, text))
    }

    fn small_nat(&mut self) -> Result<(usize, u32)> {
        let (start, text) = self.digits()?;
        let v = text.parse().map_err(|_| syntax(start, format!("integer {text} is too large here")))?;
        Ok((start, v))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.atom()?;
        loop {
            match self.peek() {
                Some(b'^') => {
                    self.pos += 1;
                    let (_, e) = self.small_nat()?;
                    base = Expr::Pow(Box::new(base), e);
                }
                Some(b'\'') => {
                    self.pos += 1;
                    base = Expr::Star(Box::new(base));
                }
                _ => return Ok(base),
            }
        }
    }

    fn generator(&mut self, leaf: GenLeaf) -> Result<Expr> {
        self.pos += 1;
        self.expect(b'[')?;
        let (start, text) = self.digits()?;
        let index: usize = text.parse().map_err(|_| syntax(start, "generator index too large"))?;
        if index == 0 || index > self.rank {
            return Err(Error::IndexOutOfRange { index, rank: self.rank });
        }
        self.expect(b']')?;
        Ok(Expr::Gen(leaf, index))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'z') => self.generator(GenLeaf::Z),
            Some(b'w') => self.generator(GenLeaf::W),
            Some(b'Q') => self.generator(GenLeaf::Q),
            Some(b'q') => {
                self.pos += 1;
                Ok(Expr::QVar)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, text) = self.digits()?;
                Ok(Expr::Int(text.parse().expect("ascii digits")))
            }
            Some(c) => Err(syntax(self.pos, format!("unexpected '{}'", c as char))),
            None => Err(syntax(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses `src` against rank `n`; generator indices must lie in `1..=n`.
pub fn parse(src: &str, n: usize) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, rank: n };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(syntax(p.pos, format!("unexpected '{}'", c as char)));
    }
    Ok(e)
}

fn as_scalar(e: &ZElement) -> Option<QRat> {
    let c = e.constant_term();
    (e.len() == usize::from(!c.is_zero())).then_some(c)
}

/// Evaluates a parsed expression in `Z_n`.
pub fn eval(e: &Expr, n: usize) -> Result<ZElement> {
    Ok(match e {
        Expr::Gen(GenLeaf::Z, i) => ZElement::z(*i, n)?,
        Expr::Gen(GenLeaf::W, i) => ZElement::w(*i, n)?,
        Expr::Gen(GenLeaf::Q, i) => ZElement::q_element(*i, n)?,
        Expr::Int(v) => ZElement::scalar(n, QRat::from_int(v.clone())),
        Expr::QVar => ZElement::scalar(n, QRat::q_pow(1)),
        Expr::Add(a, b) => eval(a, n)?.try_add(&eval(b, n)?)?,
        Expr::Sub(a, b) => eval(a, n)?.try_sub(&eval(b, n)?)?,
        Expr::Mul(a, b) => eval(a, n)?.try_mul(&eval(b, n)?)?,
        Expr::Div(a, b) => {
            let d = eval(b, n)?;
            let d = as_scalar(&d)
                .ok_or_else(|| Error::InvalidParameter(format!("divisor must be a scalar, got {d}")))?;
            eval(a, n)?.scale(&d.inv()?)
        }
        Expr::Neg(a) => eval(a, n)?.scale(&QRat::from(-1)),
        Expr::Pow(a, k) => eval(a, n)?.pow(*k),
        Expr::Star(a) => eval(a, n)?.star(),
    })
}

/// [`parse`] followed by [`eval`].
pub fn parse_element(src: &str, n: usize) -> Result<ZElement> {
    eval(&parse(src, n)?, n)
}
