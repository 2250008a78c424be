//! Recursive-descent parser for scator expressions.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := atom ('*' atom)*
//! atom    := literal | '(' expr ')' | call
//! literal := '(' number ';' number ',' number [',' number] ')'
//! call    := name '(' args ')'
//! number  := ['-'] digits ['.' digits] | ['-'] digits '/' digits
//! ```
//!
//! Functions: `conj`, `dual`, `idual`, `edual`, `inv`, `norm2`, `classify`
//! take one expression; `dot` and `kappa` take two; `scale` takes a number
//! and an expression.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use scator::{DualityKind, Rational, Scator, Scator3};

use crate::expr::{Expr, Literal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: expected ", self.offset)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == self.expected.len() { " or " } else { ", " })?;
            }
            write!(f, "`{e}`")?;
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

const FUNCTIONS: [&str; 10] = [
    "conj", "dual", "idual", "edual", "inv", "norm2", "dot", "kappa", "classify", "scale",
];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Semi,
    Comma,
    Star,
    Plus,
    Num(Rational),
    Ident(String),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::End => "end of input".into(),
        }
    }
}

fn digits_to_int(s: &str) -> BigInt {
    s.parse().expect("ascii digits")
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_from = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b';' => Some(Tok::Semi),
            b',' => Some(Tok::Comma),
            b'*' => Some(Tok::Star),
            b'+' => Some(Tok::Plus),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((start, tok));
            i += 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(input[start..i].to_string())));
            continue;
        }
        if c.is_ascii_digit() || c == b'-' {
            let negative = c == b'-';
            let int_start = if negative { i + 1 } else { i };
            let int_end = digits_from(int_start);
            if int_end == int_start {
                return Err(ParseError {
                    offset: int_start,
                    expected: vec!["digit"],
                    found: describe_char(input, int_start),
                });
            }
            let mut value = Rational::from_integer(digits_to_int(&input[int_start..int_end]));
            i = int_end;
            if i < bytes.len() && bytes[i] == b'.' {
                let frac_end = digits_from(i + 1);
                if frac_end == i + 1 {
                    return Err(ParseError {
                        offset: i + 1,
                        expected: vec!["digit"],
                        found: describe_char(input, i + 1),
                    });
                }
                let frac = &input[i + 1..frac_end];
                let scale = num_traits::pow(BigInt::from(10), frac.len());
                value += Rational::new(digits_to_int(frac), scale);
                i = frac_end;
            } else if i < bytes.len() && bytes[i] == b'/' {
                let den_end = digits_from(i + 1);
                if den_end == i + 1 {
                    return Err(ParseError {
                        offset: i + 1,
                        expected: vec!["digit"],
                        found: describe_char(input, i + 1),
                    });
                }
                let den = digits_to_int(&input[i + 1..den_end]);
                if den.is_zero() {
                    return Err(ParseError {
                        offset: i + 1,
                        expected: vec!["nonzero denominator"],
                        found: "`0`".into(),
                    });
                }
                value /= Rational::from_integer(den);
                i = den_end;
            }
            if negative {
                value = -value;
            }
            out.push((start, Tok::Num(value)));
            continue;
        }
        return Err(ParseError {
            offset: start,
            expected: vec!["number", "(", "function name"],
            found: describe_char(input, start),
        });
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

fn describe_char(input: &str, offset: usize) -> String {
    match input[offset..].chars().next() {
        Some(c) => format!("`{c}`"),
        None => "end of input".into(),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].1.clone();
        if tok != Tok::End {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(vec![name]))
        }
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        match self.peek() {
            Tok::Num(n) => {
                let n = n.clone();
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(vec!["number"])),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::sum(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.atom()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.atom()?;
            lhs = Expr::product(lhs, rhs);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                if matches!(self.peek(), Tok::Num(_)) {
                    self.literal_rest()
                } else {
                    let inner = self.expr()?;
                    self.expect(Tok::RParen, ")")?;
                    Ok(inner)
                }
            }
            Tok::Ident(name) => self.call(&name),
            _ => Err(self.error(vec!["(", "function name"])),
        }
    }

    /// After the opening parenthesis of a literal.
    fn literal_rest(&mut self) -> Result<Expr, ParseError> {
        let a0 = self.number()?;
        self.expect(Tok::Semi, ";")?;
        let a1 = self.number()?;
        self.expect(Tok::Comma, ",")?;
        let a2 = self.number()?;
        match self.peek() {
            Tok::RParen => {
                self.bump();
                Ok(Expr::Lit(Literal::Scator(Scator::new(a0, a1, a2))))
            }
            Tok::Comma => {
                self.bump();
                let a3 = self.number()?;
                self.expect(Tok::RParen, ")")?;
                Ok(Expr::Lit(Literal::Scator3(Scator3::new(a0, a1, a2, a3))))
            }
            _ => Err(self.error(vec![",", ")"])),
        }
    }

    fn call(&mut self, name: &str) -> Result<Expr, ParseError> {
        if !FUNCTIONS.contains(&name) {
            return Err(self.error(FUNCTIONS.to_vec()));
        }
        self.bump();
        self.expect(Tok::LParen, "(")?;
        let unary = |e: Expr| Box::new(e);
        let expr = match name {
            "dot" | "kappa" => {
                let a = self.expr()?;
                self.expect(Tok::Comma, ",")?;
                let b = self.expr()?;
                if name == "dot" {
                    Expr::Dot(Box::new(a), Box::new(b))
                } else {
                    Expr::Kappa(Box::new(a), Box::new(b))
                }
            }
            "scale" => {
                let n = self.number()?;
                self.expect(Tok::Comma, ",")?;
                Expr::Scale(n, Box::new(self.expr()?))
            }
            _ => {
                let e = unary(self.expr()?);
                match name {
                    "conj" => Expr::Conj(e),
                    "dual" => Expr::Dual(e, DualityKind::Ordinary),
                    "idual" => Expr::Dual(e, DualityKind::Internal),
                    "edual" => Expr::Dual(e, DualityKind::External),
                    "inv" => Expr::Inv(e),
                    "norm2" => Expr::Norm2(e),
                    "classify" => Expr::Classify(e),
                    _ => unreachable!("checked against FUNCTIONS"),
                }
            }
        };
        self.expect(Tok::RParen, ")")?;
        Ok(expr)
    }
}

/// Parses a single expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(vec!["*", "+", "end of input"]));
    }
    Ok(e)
}

/// Parses a bare number (`-1.25`, `3/4`, `7`).
pub fn parse_number(text: &str) -> Result<Rational, ParseError> {
    let mut p = Parser {
        toks: lex(text.trim())?,
        pos: 0,
    };
    let n = p.number()?;
    if *p.peek() != Tok::End {
        return Err(p.error(vec!["end of input"]));
    }
    Ok(n)
}
