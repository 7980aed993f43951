use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// Polynomial in the Casimir multiple `Δ` with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `Δ^k`. Trailing zeros are never stored,
/// so the zero polynomial is the empty vector and has no degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeltaPoly {
    coeffs: Vec<Rational>,
}

impl DeltaPoly {
    pub fn zero() -> Self {
        DeltaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    /// `Δ` itself.
    pub fn delta() -> Self {
        Self::delta_power(1)
    }

    pub fn delta_power(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        DeltaPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DeltaPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for `−∞`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> DeltaPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Same polynomial with the constant term dropped.
    pub fn without_constant(&self) -> DeltaPoly {
        let mut coeffs = self.coeffs.clone();
        if let Some(c0) = coeffs.first_mut() {
            *c0 = Rational::zero();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, n: u32) -> DeltaPoly {
        (0..n).fold(DeltaPoly::one(), |acc, _| &acc * self)
    }

    /// Multiplication by `Δ`.
    pub fn shift(&self) -> DeltaPoly {
        if self.is_zero() {
            return DeltaPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        DeltaPoly { coeffs }
    }

    /// Nonzero `(k, coeff)` pairs in increasing `k`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn add(self, rhs: &DeltaPoly) -> DeltaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DeltaPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn sub(self, rhs: &DeltaPoly) -> DeltaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DeltaPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&DeltaPoly> for &DeltaPoly {
    type Output = DeltaPoly;
    fn mul(self, rhs: &DeltaPoly) -> DeltaPoly {
        if self.is_zero() || rhs.is_zero() {
            return DeltaPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DeltaPoly::from_coeffs(coeffs)
    }
}

impl Add for DeltaPoly {
    type Output = DeltaPoly;
    fn add(self, rhs: DeltaPoly) -> DeltaPoly {
        &self + &rhs
    }
}

impl Sub for DeltaPoly {
    type Output = DeltaPoly;
    fn sub(self, rhs: DeltaPoly) -> DeltaPoly {
        &self - &rhs
    }
}

impl Mul for DeltaPoly {
    type Output = DeltaPoly;
    fn mul(self, rhs: DeltaPoly) -> DeltaPoly {
        &self * &rhs
    }
}

impl Neg for DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        DeltaPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &DeltaPoly {
    type Output = DeltaPoly;
    fn neg(self) -> DeltaPoly {
        -self.clone()
    }
}
