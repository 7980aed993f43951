//! Multiplication in `H_z` by PBW normal ordering.
//!
//! Normal order is `f < h < e < y < x`. A product of two normal monomials is
//! computed by left-multiplying the right factor by the generators of the
//! left factor one at a time. Left multiplication of a normal monomial
//! `f^a h^b e^c y^d x^m` by a single generator has a closed form for every
//! generator:
//!
//! ```text
//! h·f^a       = f^a h − 2a f^a
//! e·f^a       = f^a e + a f^(a−1) h − a(a−1) f^(a−1),   e·h^b = (h−2)^b e
//! y·f^a h^b   = f^a (h+1)^b y,                           y·e^c = e^c y − c e^(c−1) x
//! x·f^a       = f^a x − a f^(a−1) y,   x·h^b = (h−1)^b x,   x·e = e x
//! x·y^d x^m   = y^d x^(m+1) + Σ_{i<d} y^i z y^(d−1−i) x^m
//! ```
//!
//! The only step that re-enters the engine is the last one: the terms
//! coming from `z` have module degree `d + m − 1`, strictly below the
//! `d + m + 1` of the leading term, so the recursion terminates on the
//! module degree. (This is the first component of the rewriting measure
//! `(x,y-degree, inversions in the x,y block, inversions in the sl2 block)`;
//! the closed forms above discharge the other two components directly.)

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::delta::DeltaPoly;
use crate::generator::Generator;
use crate::monomial::Monomial;
use crate::ncpoly::NcPoly;
use crate::Rational;

/// The deformation parameter: `[x, y] = z` with `z ∈ ℚ[Δ]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    pub z: DeltaPoly,
}

impl AlgebraParams {
    pub fn new(z: DeltaPoly) -> Self {
        AlgebraParams { z }
    }

    /// The undeformed algebra `H_0 = U(sl2 ⋉ V)`.
    pub fn graded() -> Self {
        AlgebraParams { z: DeltaPoly::zero() }
    }
}

#[derive(Default)]
struct Memo {
    left: HashMap<(Generator, Monomial), Arc<NcPoly>>,
    x_on_module: HashMap<(u32, u32), Arc<NcPoly>>,
    delta_powers: Vec<Arc<NcPoly>>,
}

/// The algebra `H_z` for a fixed `z`, with a product cache.
///
/// All methods take `&self`; the cache sits behind a mutex that is never
/// held while computing, so one instance can be shared across threads.
pub struct HeckeAlgebra {
    params: AlgebraParams,
    z_expanded: NcPoly,
    memo: Mutex<Memo>,
}

impl std::fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HeckeAlgebra").field("params", &self.params).finish()
    }
}

impl Clone for HeckeAlgebra {
    fn clone(&self) -> Self {
        HeckeAlgebra::new(self.params.clone())
    }
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k as usize] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Coefficients of `(h + shift)^n` as `(k, coeff of h^k)`.
fn shifted_power(n: u32, shift: i64) -> Vec<(u32, Rational)> {
    let row = binomial_row(n);
    let shift = BigInt::from(shift);
    (0..=n)
        .filter_map(|k| {
            let c = &row[k as usize] * num_traits::pow(shift.clone(), (n - k) as usize);
            (!c.is_zero()).then(|| (k, Rational::from_integer(c)))
        })
        .collect()
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl HeckeAlgebra {
    pub fn new(params: AlgebraParams) -> Self {
        let mut alg = HeckeAlgebra { params, z_expanded: NcPoly::zero(), memo: Mutex::new(Memo::default()) };
        alg.z_expanded = alg.expand_delta(&alg.params.z.clone());
        alg
    }

    pub fn with_z(z: DeltaPoly) -> Self {
        Self::new(AlgebraParams::new(z))
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn z(&self) -> &DeltaPoly {
        &self.params.z
    }

    /// `z` as an element of `U(sl2)` in normal form.
    pub fn z_expanded(&self) -> &NcPoly {
        &self.z_expanded
    }

    /// `Δ = h² + 4ef − 2h = h² + 4fe + 2h`.
    pub fn delta() -> NcPoly {
        [
            (Monomial::new(0, 2, 0, 0, 0), rat(1)),
            (Monomial::new(1, 0, 1, 0, 0), rat(4)),
            (Monomial::new(0, 1, 0, 0, 0), rat(2)),
        ]
        .into_iter()
        .collect()
    }

    /// Normal form of `Δ^k`.
    pub fn delta_power(&self, k: usize) -> Arc<NcPoly> {
        loop {
            let (have, last) = {
                let mut memo = self.memo.lock().unwrap();
                if memo.delta_powers.is_empty() {
                    memo.delta_powers.push(Arc::new(NcPoly::one()));
                }
                if let Some(p) = memo.delta_powers.get(k) {
                    return p.clone();
                }
                (memo.delta_powers.len(), memo.delta_powers.last().unwrap().clone())
            };
            let next = Arc::new(self.multiply(&HeckeAlgebra::delta(), &last));
            let mut memo = self.memo.lock().unwrap();
            if memo.delta_powers.len() == have {
                memo.delta_powers.push(next);
            }
        }
    }

    /// Substitutes `Δ = h² + 4ef − 2h` and normal-orders.
    pub fn expand_delta(&self, q: &DeltaPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (k, c) in q.terms() {
            out.add_scaled(&self.delta_power(k), c);
        }
        out
    }

    /// PBW normal form of `p · q`.
    pub fn multiply(&self, p: &NcPoly, q: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        if q.is_zero() {
            return out;
        }
        for (s, c) in p.terms() {
            let prod = self.left_monomial(s, q);
            out.add_scaled(&prod, c);
        }
        out
    }

    /// Product of a sequence of factors, left to right.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a NcPoly>) -> NcPoly {
        factors.into_iter().fold(NcPoly::one(), |acc, p| self.multiply(&acc, p))
    }

    pub fn pow(&self, p: &NcPoly, n: u32) -> NcPoly {
        let mut out = NcPoly::one();
        for _ in 0..n {
            out = self.multiply(&out, p);
        }
        out
    }

    /// `pq − qp`.
    pub fn commutator(&self, p: &NcPoly, q: &NcPoly) -> NcPoly {
        self.multiply(p, q) - self.multiply(q, p)
    }

    /// `[g, p]`.
    pub fn ad(&self, g: Generator, p: &NcPoly) -> NcPoly {
        self.commutator(&NcPoly::generator(g), p)
    }

    /// The anti-automorphism `x ↔ y, e ↦ −f, f ↦ −e, h ↦ h`.
    pub fn anti_j(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (m, c) in p.terms() {
            // j(f^a h^b e^c y^d x^m) = (−1)^(a+c) y^m x^d f^c h^b e^a
            let lie = NcPoly::monomial(Monomial::new(m.e, m.h, m.f, 0, 0));
            let image = self.left_monomial(&Monomial::new(0, 0, 0, m.x, m.y), &lie);
            let sign = if (m.f + m.e) % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_scaled(&image, &sign);
        }
        out
    }

    /// `s · q` for a normal monomial `s`.
    pub fn left_monomial(&self, s: &Monomial, q: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        let mut rest = NcPoly::zero();
        for (t, c) in q.terms() {
            if s.concatenates_with(t) {
                out.add_term(s.concat(t), c.clone());
            } else {
                rest.add_term(*t, c.clone());
            }
        }
        if rest.is_zero() {
            return out;
        }
        for g in [Generator::X, Generator::Y, Generator::E, Generator::H, Generator::F] {
            for _ in 0..s.exponent(g) {
                rest = self.left_generator_poly(g, &rest);
            }
        }
        out += &rest;
        out
    }

    /// `g · p`.
    pub fn left_generator_poly(&self, g: Generator, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (t, c) in p.terms() {
            if t.first_generator().is_none_or(|first| g <= first) {
                let mut m = *t;
                *m.exponent_mut(g) += 1;
                out.add_term(m, c.clone());
            } else {
                let prod = self.left_generator(g, t);
                out.add_scaled(&prod, c);
            }
        }
        out
    }

    /// `g · m` for a single normal monomial.
    pub fn left_generator(&self, g: Generator, m: &Monomial) -> Arc<NcPoly> {
        match g {
            Generator::F => {
                let mut r = *m;
                r.f += 1;
                return Arc::new(NcPoly::monomial(r));
            }
            Generator::H => {
                let mut r = *m;
                r.h += 1;
                let mut p = NcPoly::monomial(r);
                p.add_term(*m, rat(-2 * m.f as i64));
                return Arc::new(p);
            }
            _ => {}
        }
        if let Some(hit) = self.memo.lock().unwrap().left.get(&(g, *m)) {
            return hit.clone();
        }
        let value = Arc::new(match g {
            Generator::E => self.left_e(m),
            Generator::Y => self.left_y(m),
            Generator::X => self.left_x(m),
            Generator::F | Generator::H => unreachable!(),
        });
        self.memo.lock().unwrap().left.entry((g, *m)).or_insert(value).clone()
    }

    fn left_e(&self, m: &Monomial) -> NcPoly {
        let mut out = NcPoly::zero();
        // f^a (h−2)^b e^(c+1) y^d x^m
        for (k, c) in shifted_power(m.h, -2) {
            out.add_term(Monomial::new(m.f, k, m.e + 1, m.y, m.x), c);
        }
        // a f^(a−1) (h − (a−1)) h^b e^c y^d x^m
        if m.f > 0 {
            let a = m.f as i64;
            out.add_term(Monomial::new(m.f - 1, m.h + 1, m.e, m.y, m.x), rat(a));
            out.add_term(Monomial::new(m.f - 1, m.h, m.e, m.y, m.x), rat(-a * (a - 1)));
        }
        out
    }

    fn left_y(&self, m: &Monomial) -> NcPoly {
        let mut out = NcPoly::zero();
        let shifted = shifted_power(m.h, 1);
        // f^a (h+1)^b e^c y^(d+1) x^m
        for (k, c) in &shifted {
            out.add_term(Monomial::new(m.f, *k, m.e, m.y + 1, m.x), c.clone());
        }
        // − c f^a (h+1)^b e^(c−1) · x y^d x^m
        if m.e > 0 {
            let tail = self.x_on_module(m.y, m.x);
            let scale = rat(-(m.e as i64));
            for (k, c) in &shifted {
                let prod = self.left_monomial(&Monomial::new(m.f, *k, m.e - 1, 0, 0), &tail);
                out.add_scaled(&prod, &(c * &scale));
            }
        }
        out
    }

    fn left_x(&self, m: &Monomial) -> NcPoly {
        let mut out = NcPoly::zero();
        // f^a (h−1)^b e^c · x y^d x^m
        let tail = self.x_on_module(m.y, m.x);
        for (k, c) in shifted_power(m.h, -1) {
            let prod = self.left_monomial(&Monomial::new(m.f, k, m.e, 0, 0), &tail);
            out.add_scaled(&prod, &c);
        }
        // − a f^(a−1) · y h^b e^c y^d x^m
        if m.f > 0 {
            let inner = self.left_generator(Generator::Y, &Monomial::new(0, m.h, m.e, m.y, m.x));
            let scale = rat(-(m.f as i64));
            for (t, c) in inner.terms() {
                let mut r = *t;
                r.f += m.f - 1;
                out.add_term(r, c * &scale);
            }
        }
        out
    }

    /// `x · y^d x^m`.
    fn x_on_module(&self, d: u32, m: u32) -> Arc<NcPoly> {
        if let Some(hit) = self.memo.lock().unwrap().x_on_module.get(&(d, m)) {
            return hit.clone();
        }
        let mut out = NcPoly::monomial(Monomial::new(0, 0, 0, d, m + 1));
        for i in 0..d {
            // y^i · z y^(d−1−i) x^m
            let mut inner: NcPoly = self
                .z_expanded
                .terms()
                .map(|(u, c)| (u.concat(&Monomial::new(0, 0, 0, d - 1 - i, m)), c.clone()))
                .collect();
            debug_assert!(inner.monomials().all(|t| t.filtration_degree() < d + m + 1));
            for _ in 0..i {
                inner = self.left_generator_poly(Generator::Y, &inner);
            }
            out += &inner;
        }
        let value = Arc::new(out);
        self.memo.lock().unwrap().x_on_module.entry((d, m)).or_insert(value).clone()
    }
}
