//! Element expressions for the skew Laurent field.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-' term | factor ('*'? factor)*      -- '*' may be dropped before 't'
//! factor := atom ('^' signed-int)?
//! atom   := 'x' digits | 't' | rational | '(' expr ')'
//! ```

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use skewalg::scalars::RatFunc;
use skewalg::series::SkewSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Var(u32),
    T,
    /// Nonnegative literal; signs are carried by `Neg` and `Sub`.
    Rational(BigRational),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    Neg(Box<ExprAst>),
    Paren(Box<ExprAst>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: expected {}, found {}", fmt_expected(.expected), fmt_found(.found))]
pub struct ParseError {
    pub offset: usize,
    pub expected: BTreeSet<&'static str>,
    pub found: Option<char>,
}

fn fmt_expected(set: &BTreeSet<&'static str>) -> String {
    let items: Vec<_> = set.iter().copied().collect();
    match items.as_slice() {
        [one] => one.to_string(),
        many => format!("one of {}", many.join(", ")),
    }
}

fn fmt_found(found: &Option<char>) -> String {
    match found {
        Some(c) => format!("{c:?}"),
        None => "end of input".into(),
    }
}

/// Byte cursor shared with the quaternion literal parser.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn error(&mut self, expected: &[&'static str]) -> ParseError {
        let found = self.peek();
        ParseError {
            offset: self.pos,
            expected: expected.iter().copied().collect(),
            found,
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// ASCII digits directly at the cursor (no whitespace skipping).
    fn digits(&mut self) -> Option<&'a str> {
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        (len > 0).then(|| {
            self.pos += len;
            &rest[..len]
        })
    }

    /// `digits ('/' digits)?`, with a nonzero denominator.
    pub(crate) fn rational(&mut self) -> Result<BigRational, ParseError> {
        self.skip_ws();
        let num: BigInt = self.digits().ok_or_else(|| self.error(&["integer"]))?.parse().expect("digits");
        if !self.eat('/') {
            return Ok(BigRational::from_integer(num));
        }
        self.skip_ws();
        let den_at = self.pos;
        let den: BigInt = self.digits().ok_or_else(|| self.error(&["integer"]))?.parse().expect("digits");
        if den.is_zero() {
            self.pos = den_at;
            return Err(self.error(&["nonzero denominator"]));
        }
        Ok(BigRational::new(num, den))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat('-');
        self.skip_ws();
        let at = self.pos;
        let Some(d) = self.digits() else {
            let want: &[&'static str] = if negative { &["integer"] } else { &["integer", "'-'"] };
            return Err(self.error(want));
        };
        let magnitude: i64 = d.parse().map_err(|_| {
            self.pos = at;
            self.error(&["exponent that fits in 64 bits"])
        })?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

pub fn parse_expr(src: &str) -> Result<ExprAst, ParseError> {
    let mut c = Cursor::new(src);
    let e = expr(&mut c)?;
    if !c.at_end() {
        return Err(c.error(&["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(e)
}

fn expr(c: &mut Cursor) -> Result<ExprAst, ParseError> {
    let mut lhs = term(c)?;
    loop {
        if c.eat('+') {
            lhs = ExprAst::Add(Box::new(lhs), Box::new(term(c)?));
        } else if c.eat('-') {
            lhs = ExprAst::Sub(Box::new(lhs), Box::new(term(c)?));
        } else {
            return Ok(lhs);
        }
    }
}

fn term(c: &mut Cursor) -> Result<ExprAst, ParseError> {
    if c.eat('-') {
        return Ok(ExprAst::Neg(Box::new(term(c)?)));
    }
    let mut lhs = factor(c)?;
    loop {
        if c.eat('*') || c.peek() == Some('t') {
            lhs = ExprAst::Mul(Box::new(lhs), Box::new(factor(c)?));
        } else {
            return Ok(lhs);
        }
    }
}

fn factor(c: &mut Cursor) -> Result<ExprAst, ParseError> {
    let base = atom(c)?;
    if c.eat('^') {
        return Ok(ExprAst::Pow(Box::new(base), c.signed_int()?));
    }
    Ok(base)
}

const ATOM: &[&str] = &["variable x<n>", "'t'", "rational", "'('"];

fn atom(c: &mut Cursor) -> Result<ExprAst, ParseError> {
    match c.peek() {
        Some('x') => {
            c.pos += 1;
            let at = c.pos;
            let d = c.digits().ok_or_else(|| c.error(&["variable index"]))?;
            d.parse().map(ExprAst::Var).map_err(|_| {
                c.pos = at;
                c.error(&["variable index below 2^32"])
            })
        }
        Some('t') => {
            c.pos += 1;
            Ok(ExprAst::T)
        }
        Some('(') => {
            c.pos += 1;
            let inner = expr(c)?;
            if !c.eat(')') {
                return Err(c.error(&["')'", "'+'", "'-'", "'*'"]));
            }
            Ok(ExprAst::Paren(Box::new(inner)))
        }
        Some(ch) if ch.is_ascii_digit() => c.rational().map(ExprAst::Rational),
        _ => Err(c.error(ATOM)),
    }
}

fn fmt_literal(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl ExprAst {
    /// Source text that parses back to `self`. Parentheses appear only where
    /// the tree has `Paren` nodes.
    pub fn render(&self) -> String {
        match self {
            ExprAst::Var(i) => format!("x{i}"),
            ExprAst::T => "t".into(),
            ExprAst::Rational(r) => fmt_literal(r),
            ExprAst::Add(a, b) => format!("{} + {}", a.render(), b.render()),
            ExprAst::Sub(a, b) => format!("{} - {}", a.render(), b.render()),
            ExprAst::Mul(a, b) => format!("{}*{}", a.render(), b.render()),
            ExprAst::Pow(a, e) => format!("{}^{e}", a.render()),
            ExprAst::Neg(a) => format!("-{}", a.render()),
            ExprAst::Paren(a) => format!("({})", a.render()),
        }
    }

    /// Value in the skew Laurent field; inverses carry `precision` terms.
    pub fn eval(&self, precision: usize) -> skewalg::Result<SkewSeries> {
        Ok(match self {
            ExprAst::Var(i) => SkewSeries::constant(RatFunc::var(*i)),
            ExprAst::T => SkewSeries::t(),
            ExprAst::Rational(r) => SkewSeries::rational(r.clone()),
            ExprAst::Add(a, b) => a.eval(precision)?.add(&b.eval(precision)?),
            ExprAst::Sub(a, b) => a.eval(precision)?.sub(&b.eval(precision)?),
            ExprAst::Mul(a, b) => a.eval(precision)?.mul(&b.eval(precision)?)?,
            ExprAst::Neg(a) => a.eval(precision)?.neg(),
            ExprAst::Paren(a) => a.eval(precision)?,
            ExprAst::Pow(a, e) => {
                let base = a.eval(precision)?;
                let base = if *e < 0 { base.inv_with_precision(precision)? } else { base };
                let mut acc = SkewSeries::one();
                for _ in 0..e.unsigned_abs() {
                    acc = acc.mul(&base)?;
                }
                acc
            }
        })
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
