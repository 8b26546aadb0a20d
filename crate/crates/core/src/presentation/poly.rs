//! Integer polynomials in named generators.
//!
//! Grammar (whitespace ignored):
//! `expr := ['-'] term (('+' | '-') term)*`,
//! `term := factor ('*' factor)*`,
//! `factor := integer | generator ['^' integer]`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector, one entry per generator.
pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(vars: &[String]) -> Self {
        Poly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(vars: &[String], m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[u32]) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Weighted degree of every term, if they agree.
    pub fn degree(&self, weights: &[usize]) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| monomial_degree(m, weights));
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn is_homogeneous(&self, weights: &[usize]) -> bool {
        self.is_zero() || self.degree(weights).is_some()
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let m = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// Parses `text` over the generators `vars`; unknown names and stray
    /// characters are rejected.
    pub fn parse(text: &str, vars: &[String]) -> Result<Self> {
        Parser::new(text, vars).parse()
    }
}

pub fn monomial_degree(m: &[u32], weights: &[usize]) -> usize {
    m.iter().zip(weights).map(|(&e, &w)| e as usize * w).sum()
}

/// All exponent vectors of weighted degree `d`, in graded-lexicographic
/// order with the first generator smallest.
pub fn monomials_of_degree(weights: &[usize], d: usize) -> Vec<Monomial> {
    fn go(weights: &[usize], i: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        if i == weights.len() - 1 {
            if left.is_multiple_of(w) {
                cur[i] = (left / w) as u32;
                out.push(cur.clone());
                cur[i] = 0;
            }
            return;
        }
        for e in 0..=left / w {
            cur[i] = e as u32;
            go(weights, i + 1, left - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if weights.is_empty() {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(weights, 0, d, &mut vec![0; weights.len()], &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest powers of the last generator first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.iter().rev().cmp(a.0.iter().rev()));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let factors: Vec<String> = m
                .iter()
                .zip(&self.vars)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [String],
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a [String]) -> Self {
        Parser {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            vars,
            text,
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in `{}`", self.pos, self.text))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        if self.chars.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut out = Poly::zero(self.vars);
        let mut sign = BigInt::one();
        if self.peek() == Some('-') {
            sign = -sign;
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * &sign);
            match self.peek() {
                None => return Ok(out),
                Some('+') => sign = BigInt::one(),
                Some('-') => sign = -BigInt::one(),
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut m = vec![0u32; self.vars.len()];
        let mut c = BigInt::one();
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => c *= self.integer()?,
                Some(ch) if ch.is_alphabetic() => {
                    let start = self.pos;
                    while self.peek().is_some_and(|ch| ch.is_alphanumeric() || ch == '_') {
                        self.pos += 1;
                    }
                    let name: String = self.chars[start..self.pos].iter().collect();
                    let i = self
                        .vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| self.err(&format!("unknown generator `{name}`")))?;
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = u32::try_from(self.integer()?)
                            .map_err(|_| self.err("exponent too large"))?;
                    }
                    m[i] += e;
                }
                _ => return Err(self.err("expected an integer or a generator")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((m, c));
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }
}
