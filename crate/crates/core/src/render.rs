//! Plain-text, LaTeX and JSON renderings.
//!
//! JSON lists terms in graded-lex order. The plain and LaTeX forms list
//! terms `x`-major: by descending power of `x`, then of `y`, then by
//! descending degree of the `sl2` factor, so `[Δ, x]` prints as
//! `2hx - 3x + 4ey`.

use std::cmp::Reverse;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::delta::DeltaPoly;
use crate::generator::Generator;
use crate::monomial::Monomial;
use crate::ncpoly::NcPoly;
use crate::Rational;

fn display_key(m: &Monomial) -> Reverse<(u32, u32, u32, u32, u32, u32)> {
    Reverse((m.x, m.y, m.f + m.h + m.e, m.h, m.e, m.f))
}

/// Terms in display order.
pub fn display_terms(p: &NcPoly) -> Vec<(Monomial, Rational)> {
    let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
    terms.sort_by_key(|(m, _)| display_key(m));
    terms
}

fn monomial_plain(m: &Monomial) -> String {
    let mut s = String::new();
    for g in Generator::ALL {
        match m.exponent(g) {
            0 => {}
            1 => s.push(g.symbol()),
            n => s.push_str(&format!("{}^{n}", g.symbol())),
        }
    }
    s
}

fn monomial_latex(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for g in Generator::ALL {
        match m.exponent(g) {
            0 => {}
            1 => parts.push(g.symbol().to_string()),
            n => parts.push(format!("{}^{{{n}}}", g.symbol())),
        }
    }
    parts.join(" ")
}

fn coeff_latex(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Joins signed terms; `body(|c|)` renders a term with positive coefficient.
fn join_terms<T>(terms: &[(T, Rational)], body: impl Fn(&T, &Rational) -> String) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (t, c)) in terms.iter().enumerate() {
        let s = body(t, &c.abs());
        match (i, c.is_negative()) {
            (0, false) => out.push_str(&s),
            (0, true) => {
                out.push('-');
                out.push_str(&s);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&s);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&s);
            }
        }
    }
    out
}

fn plain_term(symbol: &str, c: &Rational) -> String {
    if symbol.is_empty() {
        c.to_string()
    } else if c.is_one() {
        symbol.to_string()
    } else if c.is_integer() {
        format!("{c}{symbol}")
    } else {
        format!("{c} {symbol}")
    }
}

fn latex_term(symbol: &str, c: &Rational) -> String {
    if symbol.is_empty() {
        coeff_latex(c)
    } else if c.is_one() {
        symbol.to_string()
    } else {
        format!("{} {symbol}", coeff_latex(c))
    }
}

/// Re-parseable plain text, e.g. `2hx - 3x + 4ey` or `1/2 h`.
pub fn plain(p: &NcPoly) -> String {
    join_terms(&display_terms(p), |m, c| plain_term(&monomial_plain(m), c))
}

pub fn latex(p: &NcPoly) -> String {
    join_terms(&display_terms(p), |m, c| latex_term(&monomial_latex(m), c))
}

/// A signed sum of pre-rendered plain symbols; an empty symbol is a constant.
pub fn combination_plain(terms: &[(String, Rational)]) -> String {
    let terms: Vec<_> = terms.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
    join_terms(&terms, |s, c| plain_term(s, c))
}

pub fn combination_latex(terms: &[(String, Rational)]) -> String {
    let terms: Vec<_> = terms.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
    join_terms(&terms, |s, c| latex_term(s, c))
}

fn delta_terms(q: &DeltaPoly) -> Vec<(usize, Rational)> {
    let mut terms: Vec<(usize, Rational)> = q.terms().map(|(k, c)| (k, c.clone())).collect();
    terms.reverse();
    terms
}

/// Polynomial in `D`, highest degree first.
pub fn delta_plain(q: &DeltaPoly) -> String {
    join_terms(&delta_terms(q), |k, c| {
        let symbol = match k {
            0 => String::new(),
            1 => "D".into(),
            k => format!("D^{k}"),
        };
        plain_term(&symbol, c)
    })
}

pub fn delta_latex(q: &DeltaPoly) -> String {
    join_terms(&delta_terms(q), |k, c| {
        let symbol = match k {
            0 => String::new(),
            1 => "\\Delta".into(),
            k => format!("\\Delta^{{{k}}}"),
        };
        latex_term(&symbol, c)
    })
}

/// `{"z": …, "terms": [{"f":a,"h":b,"e":c,"y":d,"x":m,"coeff":"p/q"}, …]}`
/// with terms in graded-lex order.
pub fn json(p: &NcPoly, z: &DeltaPoly) -> Value {
    json!({ "z": delta_plain(z), "terms": json_terms(p) })
}

/// The bare term list used inside [`json`].
pub fn json_terms(p: &NcPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| {
                json!({
                    "f": m.f, "h": m.h, "e": m.e, "y": m.y, "x": m.x,
                    "coeff": c.to_string(),
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::HeckeAlgebra;
    use crate::expr::parse_element;

    #[test]
    fn golden_strings() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let dx = alg.commutator(&HeckeAlgebra::delta(), &NcPoly::generator(Generator::X));
        assert_eq!(plain(&dx), "2hx - 3x + 4ey");
        let dy = alg.commutator(&HeckeAlgebra::delta(), &NcPoly::generator(Generator::Y));
        assert_eq!(plain(&dy), "4fx - 2hy - 3y");
        assert_eq!(plain(&HeckeAlgebra::delta()), "h^2 + 4fe + 2h");
        assert_eq!(plain(&NcPoly::zero()), "0");
    }

    #[test]
    fn fractions_and_constants() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let p = parse_element("1/2 h - 3/4 + x^2", &alg).unwrap();
        assert_eq!(plain(&p), "x^2 + 1/2 h - 3/4");
        assert_eq!(latex(&p), "x^{2} + \\frac{1}{2} h - \\frac{3}{4}");
        let q = DeltaPoly::from_coeffs(vec![Rational::zero(), Rational::new(1.into(), 4.into()), Rational::new((-1).into(), 4.into())]);
        assert_eq!(delta_plain(&q), "-1/4 D^2 + 1/4 D");
        assert_eq!(delta_latex(&q), "-\\frac{1}{4} \\Delta^{2} + \\frac{1}{4} \\Delta");
        assert_eq!(delta_plain(&DeltaPoly::zero()), "0");
    }

    #[test]
    fn json_layout() {
        let p = NcPoly::monomial(Monomial::new(0, 1, 0, 0, 1)) - NcPoly::generator(Generator::X).scale_int(3);
        let v = json(&p, &DeltaPoly::delta());
        assert_eq!(
            v.to_string(),
            r#"{"z":"D","terms":[{"f":0,"h":0,"e":0,"y":0,"x":1,"coeff":"-3"},{"f":0,"h":1,"e":0,"y":0,"x":1,"coeff":"1"}]}"#
        );
    }
}
