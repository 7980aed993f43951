//! Derivations of `H_z` given by their values on the generators.
//!
//! A map on generators extends to a derivation exactly when it respects the
//! ten defining commutation relations, which is what [`check_derivation`]
//! tests.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::HeckeAlgebra;
use crate::casimir::{apply_f, apply_g};
use crate::center::{central_element, omega_z};
use crate::delta::DeltaPoly;
use crate::error::DerivationError;
use crate::generator::Generator;
use crate::linalg::{self, SparseVec};
use crate::monomial::Monomial;
use crate::ncpoly::NcPoly;
use crate::render;
use crate::Rational;

/// Generator images; a missing generator maps to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DerivationSpec {
    pub images: BTreeMap<Generator, NcPoly>,
}

impl DerivationSpec {
    pub fn new(images: impl IntoIterator<Item = (Generator, NcPoly)>) -> Self {
        DerivationSpec { images: images.into_iter().filter(|(_, p)| !p.is_zero()).collect() }
    }

    pub fn image(&self, g: Generator) -> NcPoly {
        self.images.get(&g).cloned().unwrap_or_default()
    }

    /// Extends to normal-form elements by the Leibniz rule.
    pub fn apply(&self, p: &NcPoly, alg: &HeckeAlgebra) -> NcPoly {
        let mut out = NcPoly::zero();
        for (m, c) in p.terms() {
            let word = m.word();
            for (i, g) in word.iter().enumerate() {
                let Some(img) = self.images.get(g) else {
                    continue;
                };
                let prefix = word_monomial(&word[..i]);
                let suffix = NcPoly::monomial(word_monomial(&word[i + 1..]));
                let left = alg.left_monomial(&prefix, img);
                out.add_scaled(&alg.multiply(&left, &suffix), c);
            }
        }
        out
    }
}

fn word_monomial(word: &[Generator]) -> Monomial {
    let mut m = Monomial::ONE;
    for g in word {
        *m.exponent_mut(*g) += 1;
    }
    m
}

/// `[u, v] = w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub left: Generator,
    pub right: Generator,
    pub value: NcPoly,
}

impl Relation {
    pub fn label(&self) -> String {
        format!("[{}, {}]", self.left, self.right)
    }
}

/// The ten defining relations of `H_z`.
pub fn defining_relations(alg: &HeckeAlgebra) -> Vec<Relation> {
    use Generator::*;
    let g = NcPoly::generator;
    let rel = |left, right, value| Relation { left, right, value };
    vec![
        rel(H, E, g(E).scale_int(2)),
        rel(H, F, g(F).scale_int(-2)),
        rel(E, F, g(H)),
        rel(E, X, NcPoly::zero()),
        rel(E, Y, g(X)),
        rel(H, X, g(X)),
        rel(H, Y, -g(Y)),
        rel(F, X, g(Y)),
        rel(F, Y, NcPoly::zero()),
        rel(X, Y, alg.z_expanded().clone()),
    ]
}

/// A relation on which the Leibniz rule fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: Relation,
    /// `[D u, v] + [u, D v] − D(w)`
    pub defect: NcPoly,
}

fn defect(d: &DerivationSpec, rel: &Relation, alg: &HeckeAlgebra) -> NcPoly {
    let u = NcPoly::generator(rel.left);
    let v = NcPoly::generator(rel.right);
    let mut out = alg.commutator(&d.image(rel.left), &v);
    out += &alg.commutator(&u, &d.image(rel.right));
    out -= &d.apply(&rel.value, alg);
    out
}

/// Relations violated by `d`; empty iff `d` defines a derivation.
pub fn check_derivation(d: &DerivationSpec, alg: &HeckeAlgebra) -> Vec<Violation> {
    defining_relations(alg)
        .into_iter()
        .filter_map(|relation| {
            let defect = defect(d, &relation, alg);
            (!defect.is_zero()).then_some(Violation { relation, defect })
        })
        .collect()
}

/// `g ↦ [p, g]`.
pub fn inner_derivation(p: &NcPoly, alg: &HeckeAlgebra) -> DerivationSpec {
    DerivationSpec::new(Generator::ALL.map(|g| (g, alg.commutator(p, &NcPoly::generator(g)))))
}

/// `x ↦ x, y ↦ y`, zero on `sl2`.
pub fn euler() -> DerivationSpec {
    DerivationSpec::new([(Generator::X, NcPoly::generator(Generator::X)), (Generator::Y, NcPoly::generator(Generator::Y))])
}

/// `x ↦ tⁱx, y ↦ tⁱy`, zero on `sl2`. Only a derivation when `z = 0`;
/// otherwise the `[x, y]` defect is reported.
pub fn euler_family(i: u32, alg: &HeckeAlgebra) -> Result<DerivationSpec, DerivationError> {
    let t_power = alg.pow(&crate::center::t_element(alg), i);
    let d = DerivationSpec::new([
        (Generator::X, alg.multiply(&t_power, &NcPoly::generator(Generator::X))),
        (Generator::Y, alg.multiply(&t_power, &NcPoly::generator(Generator::Y))),
    ]);
    if !alg.z().is_zero() {
        let xy = defining_relations(alg).pop().unwrap();
        return Err(DerivationError::EulerObstruction { defect: render::plain(&defect(&d, &xy, alg)) });
    }
    Ok(d)
}

/// `x ↦ Σ t_z^i α_i x, y ↦ Σ t_z^i α_i y`, zero on `sl2`; `alphas[i] = α_i`.
pub fn scaled_euler(alphas: &[DeltaPoly], alg: &HeckeAlgebra) -> DerivationSpec {
    let tz = central_element(alg).tz;
    let mut factor = NcPoly::zero();
    let mut t_power = NcPoly::one();
    for alpha in alphas {
        factor += &alg.multiply(&t_power, &alg.expand_delta(alpha));
        t_power = alg.multiply(&t_power, &tz);
    }
    let x = NcPoly::generator(Generator::X);
    let y = NcPoly::generator(Generator::Y);
    DerivationSpec::new([(Generator::X, alg.multiply(&factor, &x)), (Generator::Y, alg.multiply(&factor, &y))])
}

/// `Σ t_z^i (2α_i z − 2F(α_i)(t_z + ω_z) − G(α_i) z)`: the predicted `[x, y]`
/// defect of [`scaled_euler`].
pub fn predicted_obstruction(alphas: &[DeltaPoly], alg: &HeckeAlgebra) -> NcPoly {
    let tz = central_element(alg).tz;
    let t_plus_omega = &tz + &alg.expand_delta(&omega_z(alg.z()));
    let z = alg.z_expanded();
    let mut out = NcPoly::zero();
    let mut t_power = NcPoly::one();
    for alpha in alphas {
        let mut inner = alg.multiply(&alg.expand_delta(alpha), z).scale_int(2);
        inner -= &alg.multiply(&alg.expand_delta(&apply_f(alpha)), &t_plus_omega).scale_int(2);
        inner -= &alg.multiply(&alg.expand_delta(&apply_g(alpha)), z);
        out += &alg.multiply(&t_power, &inner);
        t_power = alg.multiply(&t_power, &tz);
    }
    out
}

/// Leading `Δ`-coefficients of the two sides of `2αz = 2F(α)ω_z + G(α)z`;
/// they have opposite signs whenever `α` is non-constant and `z ≠ 0`.
pub fn leading_obstruction(alpha: &DeltaPoly, z: &DeltaPoly) -> Option<(usize, Rational, Rational)> {
    let lhs = (alpha * z).scale(&Rational::from_integer(2.into()));
    let rhs = &(&apply_f(alpha) * &omega_z(z)).scale(&Rational::from_integer(2.into())) + &(&apply_g(alpha) * z);
    let deg = lhs.degree()?.max(rhs.degree().unwrap_or(0));
    Some((deg, lhs.coeff(deg), rhs.coeff(deg)))
}

/// Solutions of the bounded search for derivations of the form
/// [`scaled_euler`] with `i <= max_t_power` and `deg α_i <= max_alpha_degree`.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub max_t_power: u32,
    pub max_alpha_degree: usize,
    pub unknowns: usize,
    /// Basis of the solution space; each entry lists `α_0, α_1, …`.
    pub solutions: Vec<Vec<DeltaPoly>>,
}

impl SearchReport {
    /// True when every solution has constant `α_i`.
    pub fn only_constant_solutions(&self) -> bool {
        self.solutions.iter().all(|s| s.iter().all(DeltaPoly::is_constant))
    }
}

/// Exact linear solve for all `(α_i)` making [`scaled_euler`] a derivation.
pub fn bounded_search(max_t_power: u32, max_alpha_degree: usize, alg: &HeckeAlgebra) -> SearchReport {
    let slots = (max_t_power as usize + 1) * (max_alpha_degree + 1);
    let unit = |slot: usize| -> Vec<DeltaPoly> {
        let (i, k) = (slot / (max_alpha_degree + 1), slot % (max_alpha_degree + 1));
        let mut alphas = vec![DeltaPoly::zero(); max_t_power as usize + 1];
        alphas[i] = DeltaPoly::delta_power(k);
        alphas
    };
    let columns: Vec<SparseVec<(usize, Monomial)>> = (0..slots)
        .into_par_iter()
        .map(|slot| {
            let d = scaled_euler(&unit(slot), alg);
            defining_relations(alg)
                .iter()
                .enumerate()
                .flat_map(|(r, rel)| defect(&d, rel, alg).into_terms().into_iter().map(move |(m, c)| ((r, m), c)))
                .collect()
        })
        .collect();
    let solutions = linalg::kernel(&columns)
        .into_iter()
        .map(|v| {
            let mut alphas = vec![DeltaPoly::zero(); max_t_power as usize + 1];
            for (slot, c) in v {
                let (i, k) = (slot / (max_alpha_degree + 1), slot % (max_alpha_degree + 1));
                alphas[i] = &alphas[i] + &DeltaPoly::delta_power(k).scale(&c);
            }
            alphas
        })
        .collect();
    SearchReport { max_t_power, max_alpha_degree, unknowns: slots, solutions }
}
