//! Text and JSON forms of polynomials.
//!
//! Text: one `c*m1^a*m2^b*x[e1,..,en]` per term in canonical order, e.g.
//! `1*x[1,1,0,0] + -1*m2^1*x[2,2,0,0]`. The parser reads that form and also ordinary
//! expressions such as `(x1 + x2)^2 - m1*x1*x2` (`mu1`/`mu2` are accepted too).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, MuExp, Polynomial, XExp};
use crate::error::{Error, Result};
use crate::scalar::Coeff;

impl<C: Coeff> fmt::Display for Polynomial<C> {
    /// Canonical order, one `c*m1^a*m2^b*x[e1,..,en]` per term, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if m.mu.a > 0 {
                write!(f, "*m1^{}", m.mu.a)?;
            }
            if m.mu.b > 0 {
                write!(f, "*m2^{}", m.mu.b)?;
            }
            let exps: Vec<String> = m.x.exps().iter().map(u32::to_string).collect();
            write!(f, "*x[{}]", exps.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
enum Ast {
    Int(String),
    X(usize),
    XVec(Vec<u32>),
    Mu1,
    Mu2,
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

impl Ast {
    fn max_var(&self) -> usize {
        match self {
            Ast::X(i) => *i,
            Ast::XVec(e) => e.len(),
            Ast::Int(_) | Ast::Mu1 | Ast::Mu2 => 0,
            Ast::Neg(a) | Ast::Pow(a, _) => a.max_var(),
            Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => a.max_var().max(b.max_var()),
        }
    }

    fn eval<C: Coeff>(&self, n: usize) -> Result<Polynomial<C>> {
        Ok(match self {
            Ast::Int(s) => {
                let c = C::from_str(s).map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
                Polynomial::constant(n, c)
            }
            Ast::X(i) => Polynomial::var(n, *i),
            Ast::XVec(e) => {
                let mut exps = e.clone();
                exps.resize(n, 0);
                Polynomial::term(exps, MuExp::ONE, C::one())
            }
            Ast::Mu1 => Polynomial::mu1(n),
            Ast::Mu2 => Polynomial::mu2(n),
            Ast::Neg(a) => -a.eval::<C>(n)?,
            Ast::Add(a, b) => &a.eval::<C>(n)? + &b.eval(n)?,
            Ast::Sub(a, b) => &a.eval::<C>(n)? - &b.eval(n)?,
            Ast::Mul(a, b) => &a.eval::<C>(n)? * &b.eval(n)?,
            Ast::Pow(a, e) => a.eval::<C>(n)?.pow(*e),
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
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

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Ast::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e: u32 = e.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(Ast::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent_vector(&mut self) -> Result<Ast> {
        let mut exps = Vec::new();
        loop {
            self.skip_ws();
            let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            exps.push(e.parse().map_err(|_| self.err("exponent too large"))?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(Ast::XVec(exps));
                }
                _ => return Err(self.err("expected `,` or `]`")),
            }
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ast::Int(self.digits().unwrap())),
            Some(b'x') => {
                self.pos += 1;
                if self.peek() == Some(b'[') {
                    self.pos += 1;
                    return self.exponent_vector();
                }
                let i = self.digits().ok_or_else(|| self.err("expected variable index"))?;
                let i: usize = i.parse().map_err(|_| self.err("variable index too large"))?;
                if i == 0 {
                    return Err(self.err("variables are numbered from 1"));
                }
                Ok(Ast::X(i))
            }
            Some(b'm') => {
                let rest = &self.src[self.pos..];
                for (name, ast) in [("mu1", Ast::Mu1), ("mu2", Ast::Mu2), ("m1", Ast::Mu1), ("m2", Ast::Mu2)] {
                    if rest.starts_with(name.as_bytes()) {
                        self.pos += name.len();
                        return Ok(ast);
                    }
                }
                Err(self.err("unknown symbol"))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl<C: Coeff> Polynomial<C> {
    /// Parses the text form. With `nvars = None` the variable count is the largest index used
    /// (at least 1).
    pub fn parse(s: &str, nvars: Option<usize>) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let ast = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        let used = ast.max_var();
        let n = match nvars {
            Some(n) if used > n => {
                return Err(Error::Parse(format!("x{used} used with only {n} variables")))
            }
            Some(n) => n,
            None => used.max(1),
        };
        ast.eval(n)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { x: m.x.exps().to_vec(), mu: [m.mu.a, m.mu.b], c: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let c = C::from_str(&t.c).map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.c)))?;
            terms.push((Monomial::new(XExp::new(t.x.clone()), MuExp::new(t.mu[0], t.mu[1])), c));
        }
        Self::from_terms(j.nvars, terms)
    }
}

impl<C: Coeff> FromStr for Polynomial<C> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// Serialized polynomial. Coefficients are decimal strings so big integers survive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: Vec<u32>,
    pub mu: [u32; 2],
    pub c: String,
}

impl<C: Coeff> Serialize for Polynomial<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Self::from_json(&j).map_err(serde::de::Error::custom)
    }
}
