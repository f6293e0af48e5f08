//! Text format: `c*x1^a*y2^b` terms joined by ` + ` / ` - `, highest term first.

use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::field::Field;

pub fn render<F: Field>(f: &Polynomial<F>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let field = f.field();
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let (neg, mag) = field.signed_repr(c);
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&m.render());
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&m.render());
        }
    }
    out
}

pub fn parse<F: Field>(ring: &PolyRing<F>, text: &str) -> Result<Polynomial<F>> {
    let mut p = Parser {
        ring,
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let f = p.sum()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(f)
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    chars: Vec<char>,
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Polynomial<F>> {
        let field = self.ring.field().clone();
        let mut terms = Vec::new();
        let mut neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { field.neg(&c) } else { c }));
            match self.peek() {
                Some('+') => neg = false,
                Some('-') => neg = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(self.ring.from_terms(terms))
    }

    fn term(&mut self) -> Result<(Monomial, F::Elem)> {
        let field = self.ring.field().clone();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut coeff = field.one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits()?;
                    let mut value = field.parse_elem(&num)?;
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        let den = field.parse_elem(&self.digits()?)?;
                        let inv = field.inv(&den).ok_or_else(|| self.error("zero denominator"))?;
                        value = field.mul(&value, &inv);
                    }
                    coeff = field.mul(&coeff, &value);
                }
                Some(c @ ('x' | 'y')) => {
                    self.pos += 1;
                    let idx: usize = self.digits()?.parse().map_err(|_| self.error("bad index"))?;
                    let n = self.ring.n();
                    if idx == 0 || idx > n {
                        return Err(self.error(&format!("variable {c}{idx} outside 1..={n}")));
                    }
                    let var = if c == 'x' { idx - 1 } else { n + idx - 1 };
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = self.digits()?.parse().map_err(|_| self.error("bad exponent"))?;
                    }
                    exps[var] += e;
                }
                _ => return Err(self.error("expected coefficient or variable")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}
