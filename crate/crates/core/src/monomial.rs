use std::cmp::Ordering;

use crate::generator::Generator;

/// PBW basis element `f^f h^h e^e y^y x^x`.
///
/// Ordering is graded-lex: total degree first, then the exponent tuple
/// `(f, h, e, y, x)` lexicographically. This is the order of the oracle
/// basis and of every serialized term list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub f: u32,
    pub h: u32,
    pub e: u32,
    pub y: u32,
    pub x: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { f: 0, h: 0, e: 0, y: 0, x: 0 };

    pub const fn new(f: u32, h: u32, e: u32, y: u32, x: u32) -> Self {
        Monomial { f, h, e, y, x }
    }

    pub fn generator(g: Generator) -> Self {
        Self::generator_power(g, 1)
    }

    pub fn generator_power(g: Generator, n: u32) -> Self {
        let mut m = Monomial::ONE;
        *m.exponent_mut(g) = n;
        m
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        match g {
            Generator::F => self.f,
            Generator::H => self.h,
            Generator::E => self.e,
            Generator::Y => self.y,
            Generator::X => self.x,
        }
    }

    pub fn exponent_mut(&mut self, g: Generator) -> &mut u32 {
        match g {
            Generator::F => &mut self.f,
            Generator::H => &mut self.h,
            Generator::E => &mut self.e,
            Generator::Y => &mut self.y,
            Generator::X => &mut self.x,
        }
    }

    pub fn exponents(&self) -> [u32; 5] {
        [self.f, self.h, self.e, self.y, self.x]
    }

    pub fn weight(&self) -> i64 {
        -2 * self.f as i64 + 2 * self.e as i64 - self.y as i64 + self.x as i64
    }

    /// Degree with `x, y` counted once and `sl2` in degree zero.
    pub fn filtration_degree(&self) -> u32 {
        self.y + self.x
    }

    pub fn total_degree(&self) -> u32 {
        self.f + self.h + self.e + self.y + self.x
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    /// True when only `e, f, h` occur.
    pub fn in_lie_part(&self) -> bool {
        self.y == 0 && self.x == 0
    }

    /// True when only `x, y` occur.
    pub fn in_module_part(&self) -> bool {
        self.f == 0 && self.h == 0 && self.e == 0
    }

    /// The `f^a h^b e^c` factor.
    pub fn lie_part(&self) -> Monomial {
        Monomial::new(self.f, self.h, self.e, 0, 0)
    }

    /// The `y^d x^m` factor.
    pub fn module_part(&self) -> Monomial {
        Monomial::new(0, 0, 0, self.y, self.x)
    }

    /// Smallest generator occurring, if any.
    pub fn first_generator(&self) -> Option<Generator> {
        Generator::ALL.into_iter().find(|&g| self.exponent(g) > 0)
    }

    /// Largest generator occurring, if any.
    pub fn last_generator(&self) -> Option<Generator> {
        Generator::ALL.into_iter().rev().find(|&g| self.exponent(g) > 0)
    }

    /// Exponent-wise sum. Only a product in the algebra when
    /// `self.last_generator() <= other.first_generator()`.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.f + other.f,
            self.h + other.h,
            self.e + other.e,
            self.y + other.y,
            self.x + other.x,
        )
    }

    /// Whether `self · other` is already in normal order.
    pub fn concatenates_with(&self, other: &Monomial) -> bool {
        match (self.last_generator(), other.first_generator()) {
            (Some(l), Some(r)) => l <= r,
            _ => true,
        }
    }

    /// The monomial as a word of generators in normal order.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.total_degree() as usize);
        for g in Generator::ALL {
            w.extend(std::iter::repeat(g).take(self.exponent(g) as usize));
        }
        w
    }

    /// All monomials of the given total degree, in graded-lex order.
    pub fn all_of_degree(degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for f in (0..=degree).rev() {
            for h in (0..=degree - f).rev() {
                for e in (0..=degree - f - h).rev() {
                    for y in (0..=degree - f - h - e).rev() {
                        let x = degree - f - h - e - y;
                        out.push(Monomial::new(f, h, e, y, x));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents().cmp(&other.exponents()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
