use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::generator::Generator;
use crate::monomial::Monomial;
use crate::Rational;

/// An element of `H_z` in PBW normal form.
///
/// The map never stores a zero coefficient, so structural equality is
/// equality in the algebra. Products need the deformation parameter and
/// live on [`crate::HeckeAlgebra`]; everything linear lives here.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(Monomial::generator(g))
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, Rational> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &NcPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> NcPoly {
        self.scale(&Rational::from_integer(n.into()))
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    /// True for elements of `ℚ·1`.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Largest `deg_x + deg_y` over the support.
    pub fn filtration_degree(&self) -> Result<u32, AlgebraError> {
        self.terms
            .keys()
            .map(Monomial::filtration_degree)
            .max()
            .ok_or(AlgebraError::UndefinedDegree)
    }

    /// Largest total degree over the support; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Splits into `ad(h)` eigencomponents. Components sum to `self`.
    pub fn weight_decompose(&self) -> BTreeMap<i64, NcPoly> {
        let mut out: BTreeMap<i64, NcPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight()).or_default().terms.insert(*m, c.clone());
        }
        out
    }

    /// The common weight if every term has the same weight.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// True when only `e, f, h` occur.
    pub fn in_lie_part(&self) -> bool {
        self.terms.keys().all(Monomial::in_lie_part)
    }

    /// Groups the terms by their `y^d x^m` factor: `self = Σ coeff · y^d x^m`,
    /// with each coefficient in `U(sl2)`.
    pub fn module_blocks(&self) -> BTreeMap<(u32, u32), NcPoly> {
        let mut out: BTreeMap<(u32, u32), NcPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry((m.y, m.x)).or_default().terms.insert(m.lie_part(), c.clone());
        }
        out
    }
}

impl From<Monomial> for NcPoly {
    fn from(m: Monomial) -> Self {
        NcPoly::monomial(m)
    }
}

impl From<Generator> for NcPoly {
    fn from(g: Generator) -> Self {
        NcPoly::generator(g)
    }
}

impl FromIterator<(Monomial, Rational)> for NcPoly {
    fn from_iter<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = NcPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, rhs: &NcPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&NcPoly> for NcPoly {
    fn sub_assign(&mut self, rhs: &NcPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(mut self, rhs: NcPoly) -> NcPoly {
        self += &rhs;
        self
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(mut self, rhs: NcPoly) -> NcPoly {
        self -= &rhs;
        self
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> NcPoly {
        NcPoly::generator(Generator::X)
    }
    fn y() -> NcPoly {
        NcPoly::generator(Generator::Y)
    }
    fn e() -> NcPoly {
        NcPoly::generator(Generator::E)
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &x() - &x();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn weight_decomposition_of_sum() {
        let p = &e() + &y();
        let parts = p.weight_decompose();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&2], e());
        assert_eq!(parts[&-1], y());
        assert_eq!(x().weight_decompose()[&1], x());
    }

    #[test]
    fn zero_has_no_filtration_degree() {
        assert_eq!(NcPoly::zero().filtration_degree(), Err(AlgebraError::UndefinedDegree));
        assert_eq!(x().filtration_degree(), Ok(1));
        assert_eq!(e().filtration_degree(), Ok(0));
    }
}
