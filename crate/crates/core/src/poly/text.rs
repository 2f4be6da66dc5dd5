//! Text syntax: signed sums of terms `c*x1^a1*...*xn^an`.
//!
//! `c` is an integer or `p/q`; a coefficient of one may be omitted, as may an
//! exponent of one. Variables are `x1..xn` or `y1..yn`, one letter per
//! polynomial. Whitespace is ignored. The printer writes terms in decreasing
//! grlex order, so printing then parsing is the identity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

impl Polynomial {
    /// Render with variable letter `var` (normally `'x'` or `'y'`).
    pub fn to_text(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mono = monomial_text(m, var);
            if mono.is_empty() {
                out.push_str(&rational_text(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&rational_text(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Parse in `nvars` variables; returns the polynomial and the variable letter
    /// used (`None` for constants).
    pub fn parse_with_letter(s: &str, nvars: usize) -> Result<(Polynomial, Option<char>)> {
        Parser::new(s, nvars).polynomial()
    }

    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        Ok(Self::parse_with_letter(s, nvars)?.0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('x'))
    }
}

fn rational_text(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn monomial_text(m: &Monomial, var: char) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{var}{}", i + 1)),
            _ => parts.push(format!("{var}{}^{e}", i + 1)),
        }
    }
    parts.join("*")
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    nvars: usize,
    letter: Option<char>,
}

impl Parser {
    fn new(s: &str, nvars: usize) -> Self {
        Parser {
            chars: s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            nvars,
            letter: None,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn byte_pos(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or_else(|| self.chars.last().map_or(0, |&(i, c)| i + c.len_utf8()), |&(i, _)| i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.byte_pos(),
            msg: msg.into(),
        })
    }

    fn polynomial(mut self) -> Result<(Polynomial, Option<char>)> {
        let mut p = Polynomial::zero(self.nvars);
        if self.chars.is_empty() {
            return self.err("empty input");
        }
        let mut first = true;
        while self.peek().is_some() {
            let mut sign = BigRational::one();
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    self.pos += 1;
                    sign = -sign;
                }
                _ if first => {}
                _ => return self.err("expected '+' or '-'"),
            }
            first = false;
            let (m, c) = self.term()?;
            p.add_term(m, sign * c);
        }
        Ok((p, self.letter))
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; self.nvars];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.rational()?;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let (i, e) = self.power()?;
                    exps[i] += e;
                }
                _ => return self.err("expected a coefficient or a variable"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num: BigInt = self.digits()?.parse().expect("digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            let den: BigInt = self.digits()?.parse().expect("digits");
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn power(&mut self) -> Result<(usize, u32)> {
        let letter = self.peek().expect("caller checked");
        if letter != 'x' && letter != 'y' {
            return self.err(format!("unknown variable letter '{letter}'"));
        }
        match self.letter {
            Some(l) if l != letter => return self.err("mixed variable letters"),
            _ => self.letter = Some(letter),
        }
        self.pos += 1;
        let idx_pos = self.pos;
        let idx: usize = self.digits()?.parse().map_err(|_| Error::Parse {
            pos: self.byte_pos(),
            msg: "variable index too large".into(),
        })?;
        if idx == 0 || idx > self.nvars {
            self.pos = idx_pos;
            return self.err(format!("variable index {idx} outside 1..={}", self.nvars));
        }
        let mut e = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            e = self.digits()?.parse().map_err(|_| Error::Parse {
                pos: self.byte_pos(),
                msg: "exponent too large".into(),
            })?;
        }
        Ok((idx - 1, e))
    }
}
