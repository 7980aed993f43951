//! Surface syntax for elements of `H_z`.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*'? factor)*
//! factor   := '-' factor | atom ('^' nat)?
//! atom     := 'e' | 'f' | 'h' | 'x' | 'y' | 'D' | rational | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! Multiplication is noncommutative and left-associative; `D` is `Δ`. A
//! leading `-` on a juxtaposed factor is read as subtraction, so `x -y`
//! means `x − y`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::HeckeAlgebra;
use crate::delta::DeltaPoly;
use crate::error::ParseError;
use crate::generator::Generator;
use crate::ncpoly::NcPoly;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Gen(Generator),
    Delta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A symbol and its byte offset in the source.
    Symbol(Symbol, usize),
    Number(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Sym(Symbol),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'D' => Tok::Sym(Symbol::Delta),
            '0'..='9' => {
                let mut end = pos + c.len_utf8();
                while let Some(&(p, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = p + d.len_utf8();
                    chars.next();
                }
                Tok::Int(text[pos..end].parse().expect("digits"))
            }
            c => match Generator::from_symbol(c) {
                Some(g) => Tok::Sym(Symbol::Gen(g)),
                None => return Err(ParseError::new(pos, format!("unexpected character '{c}'"))),
            },
        };
        out.push((tok, pos));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::End => "end of input".into(),
            Tok::Sym(Symbol::Delta) => "'D'".into(),
            Tok::Sym(Symbol::Gen(g)) => format!("'{g}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Sym(_) | Tok::Int(_) | Tok::LParen => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => {
                let n = n.to_u32().ok_or_else(|| ParseError::new(at, "exponent overflow"))?;
                Ok(Expr::Pow(Box::new(base), n))
            }
            _ => Err(ParseError::new(at, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Sym(s) => {
                self.bump();
                Ok(Expr::Symbol(s, at))
            }
            Tok::Int(n) => {
                self.bump();
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Number(Rational::from_integer(n)));
                }
                self.bump();
                let den_at = self.offset();
                match self.bump() {
                    Tok::Int(d) if !d.is_zero() => Ok(Expr::Number(Rational::new(n, d))),
                    _ => Err(ParseError::new(den_at, "expected a positive integer denominator")),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(ParseError::new(self.offset(), format!("expected ')', found {}", self.describe())));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(ParseError::new(at, format!("expected an atom, found {}", self.describe()))),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::new(p.offset(), format!("unexpected {}", p.describe())));
    }
    Ok(e)
}

/// Folds the tree through the algebra; `D` becomes `h² + 4fe + 2h`.
pub fn evaluate(expr: &Expr, alg: &HeckeAlgebra) -> NcPoly {
    match expr {
        Expr::Symbol(Symbol::Gen(g), _) => NcPoly::generator(*g),
        Expr::Symbol(Symbol::Delta, _) => HeckeAlgebra::delta(),
        Expr::Number(c) => NcPoly::constant(c.clone()),
        Expr::Neg(a) => -evaluate(a, alg),
        Expr::Add(a, b) => evaluate(a, alg) + evaluate(b, alg),
        Expr::Sub(a, b) => evaluate(a, alg) - evaluate(b, alg),
        Expr::Mul(a, b) => alg.multiply(&evaluate(a, alg), &evaluate(b, alg)),
        Expr::Pow(a, n) => alg.pow(&evaluate(a, alg), *n),
    }
}

/// Evaluates in `ℚ[Δ]`; only `D` and numbers may occur.
pub fn to_delta_poly(expr: &Expr) -> Result<DeltaPoly, ParseError> {
    Ok(match expr {
        Expr::Symbol(Symbol::Delta, _) => DeltaPoly::delta(),
        Expr::Symbol(Symbol::Gen(g), at) => {
            return Err(ParseError::new(*at, format!("'{g}' is not allowed in a polynomial in D")))
        }
        Expr::Number(c) => DeltaPoly::constant(c.clone()),
        Expr::Neg(a) => -to_delta_poly(a)?,
        Expr::Add(a, b) => to_delta_poly(a)? + to_delta_poly(b)?,
        Expr::Sub(a, b) => to_delta_poly(a)? - to_delta_poly(b)?,
        Expr::Mul(a, b) => to_delta_poly(a)? * to_delta_poly(b)?,
        Expr::Pow(a, n) => to_delta_poly(a)?.pow(*n),
    })
}

pub fn parse_element(text: &str, alg: &HeckeAlgebra) -> Result<NcPoly, ParseError> {
    Ok(evaluate(&parse(text)?, alg))
}

pub fn parse_delta_poly(text: &str) -> Result<DeltaPoly, ParseError> {
    to_delta_poly(&parse(text)?)
}
