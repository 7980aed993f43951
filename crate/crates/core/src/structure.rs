//! Maximal vectors for the adjoint `sl2`-action.

use crate::algebra::HeckeAlgebra;
use crate::casimir::{apply_f_inverse, apply_g, commutator_with_x};
use crate::delta::DeltaPoly;
use crate::error::StructureError;
use crate::generator::Generator;
use crate::linalg::{self, SparseVec};
use crate::monomial::Monomial;
use crate::ncpoly::NcPoly;
use crate::oracle::{self, OracleConfig, SpanRelation};
use crate::render;

/// A maximal vector of `U(sl2)` written as `γ(Δ) e^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalDecomposition {
    pub power: u32,
    pub gamma: DeltaPoly,
}

pub fn is_maximal(p: &NcPoly, alg: &HeckeAlgebra) -> bool {
    alg.ad(Generator::E, p).is_zero()
}

fn vector(p: &NcPoly) -> SparseVec<Monomial> {
    p.terms().map(|(m, c)| (*m, c.clone())).collect()
}

/// Solves `u = γ(Δ) e^power` for `u ∈ U(sl2)` against the basis
/// `{Δ^k e^power}`.
pub fn solve_delta_times_e_power(u: &NcPoly, power: u32, alg: &HeckeAlgebra) -> Option<DeltaPoly> {
    let Some(deg) = u.total_degree() else {
        return Some(DeltaPoly::zero());
    };
    if deg < power {
        return None;
    }
    let top = ((deg - power) / 2) as usize;
    let e_power = NcPoly::monomial(Monomial::generator_power(Generator::E, power));
    let basis: Vec<SparseVec<Monomial>> =
        (0..=top).map(|k| vector(&alg.multiply(&alg.delta_power(k), &e_power))).collect();
    let coeffs = linalg::solve_in_span(&vector(u), &basis)?;
    Some(DeltaPoly::from_coeffs(coeffs))
}

/// Writes a weight-homogeneous maximal vector of `U(sl2)` as `γ(Δ) e^m`.
pub fn decompose_maximal_ug(u: &NcPoly, alg: &HeckeAlgebra) -> Result<MaximalDecomposition, StructureError> {
    let outside = u.filter(|m| !m.in_lie_part());
    if !outside.is_zero() {
        return Err(StructureError::NotInLiePart { terms: render::plain(&outside) });
    }
    if u.is_zero() {
        return Ok(MaximalDecomposition { power: 0, gamma: DeltaPoly::zero() });
    }
    let Some(weight) = u.homogeneous_weight() else {
        return Err(StructureError::NotHomogeneous { weights: u.weight_decompose().into_keys().collect() });
    };
    if weight < 0 || weight % 2 != 0 {
        return Err(StructureError::BadWeight { weight });
    }
    let ec = alg.ad(Generator::E, u);
    if !ec.is_zero() {
        return Err(StructureError::NotMaximal { commutator: render::plain(&ec) });
    }
    let power = (weight / 2) as u32;
    let gamma = solve_delta_times_e_power(u, power, alg).ok_or_else(|| StructureError::Unsolvable {
        context: format!("{} is not in span{{Δ^k e^{power}}}", render::plain(u)),
    })?;
    Ok(MaximalDecomposition { power, gamma })
}

/// Solves `c = [z1, x] + z2 x` for `c = 2ψ e y + (hψ + ψ₁) x`.
///
/// `z1` carries no constant term. The `ey` block fixes `ψ`; the `x` block
/// minus `hψ` must then be a polynomial in `Δ`.
pub fn solve_z1_z2(c: &NcPoly, alg: &HeckeAlgebra) -> Result<(DeltaPoly, DeltaPoly), StructureError> {
    let blocks = c.module_blocks();
    let stray: NcPoly = c.filter(|m| !matches!((m.y, m.x), (1, 0) | (0, 1)));
    if !stray.is_zero() {
        return Err(StructureError::Shape { terms: render::plain(&stray) });
    }
    let zero = NcPoly::zero();
    let y_block = blocks.get(&(1, 0)).unwrap_or(&zero);
    let x_block = blocks.get(&(0, 1)).unwrap_or(&zero);

    let two_psi = solve_delta_times_e_power(y_block, 1, alg)
        .ok_or_else(|| StructureError::Shape { terms: format!("y-coefficient {} is not ψ(Δ)·e", render::plain(y_block)) })?;
    let psi = two_psi.scale(&crate::Rational::new(1.into(), 2.into()));
    let h_psi = alg.multiply(&NcPoly::generator(Generator::H), &alg.expand_delta(&psi));
    let rest = x_block - &h_psi;
    let psi1 = solve_delta_times_e_power(&rest, 0, alg).ok_or_else(|| StructureError::Shape {
        terms: format!("x-coefficient minus hψ is {}, not a polynomial in Δ", render::plain(&rest)),
    })?;

    let z1 = apply_f_inverse(&psi);
    let z2 = &psi1 - &apply_g(&z1);
    Ok((z1, z2))
}

/// `commutator_with_x(z1) + z2·x`.
pub fn reconstruct_z1_z2(z1: &DeltaPoly, z2: &DeltaPoly, alg: &HeckeAlgebra) -> NcPoly {
    let z2x: NcPoly = alg
        .expand_delta(z2)
        .terms()
        .map(|(m, c)| (m.concat(&Monomial::generator(Generator::X)), c.clone()))
        .collect();
    commutator_with_x(alg, z1) + z2x
}

/// Outcome of the weight-1 maximal-vector generation check.
#[derive(Clone, Debug)]
pub struct Weight1Report {
    pub max_degree: u32,
    /// Dimension of the weight-1 part of `ker ad(e)` in degree `<= max_degree`.
    pub oracle_dimension: usize,
    /// Dimension of the span of `t^i [Δ^k, x]` and `t^i Δ^k x` in the same
    /// degree range.
    pub generated_dimension: usize,
    pub verdict: SpanRelation,
    pub oracle_basis: Vec<NcPoly>,
    pub generators: Vec<NcPoly>,
}

/// Compares all weight-1 maximal vectors of total degree `<= max_degree`
/// in `H_0` with the span of `t^i [Δ^k, x]` and `t^i Δ^k x`.
pub fn weight1_maximal_basis(
    max_degree: u32,
    alg: &HeckeAlgebra,
    config: &OracleConfig,
) -> Result<Weight1Report, StructureError> {
    if !alg.z().is_zero() {
        return Err(StructureError::NonzeroParameter { z: render::delta_plain(alg.z()) });
    }
    let oracle_basis = oracle::maximal_vectors(1, max_degree, alg, config)?;

    let t = crate::center::t_element(alg);
    let x = NcPoly::generator(Generator::X);
    let mut generators = Vec::new();
    let mut t_power = NcPoly::one();
    // deg t = 3, deg Δ = 2; the top symbols of these products are
    // independent, so degree bounds on the products are exact.
    for i in 0..=max_degree / 3 {
        let budget = max_degree - 3 * i;
        for k in 0..=(budget / 2) as usize {
            let dk = alg.delta_power(k);
            if 2 * k as u32 + 1 <= budget {
                generators.push(alg.multiply(&t_power, &alg.multiply(&dk, &x)));
            }
            if k >= 1 {
                let bracket = commutator_with_x(alg, &DeltaPoly::delta_power(k));
                generators.push(alg.multiply(&t_power, &bracket));
            }
        }
        t_power = alg.multiply(&t_power, &t);
    }
    debug_assert!(generators.iter().all(|g| g.total_degree().is_some_and(|d| d <= max_degree)));
    let verdict = oracle::compare_span(&generators, &oracle_basis);
    Ok(Weight1Report {
        max_degree,
        oracle_dimension: oracle_basis.len(),
        generated_dimension: oracle::span_rank(&generators),
        verdict,
        oracle_basis,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(gen: Generator) -> NcPoly {
        NcPoly::generator(gen)
    }

    #[test]
    fn maximality_examples() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        assert!(is_maximal(&g(Generator::X), &alg));
        assert!(!is_maximal(&g(Generator::Y), &alg));
        let tz = crate::center::central_element(&alg).tz;
        assert!(is_maximal(&tz, &alg));
    }

    #[test]
    fn decompose_examples() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let d = decompose_maximal_ug(&g(Generator::E), &alg).unwrap();
        assert_eq!(d, MaximalDecomposition { power: 1, gamma: DeltaPoly::one() });

        let e3 = NcPoly::monomial(Monomial::generator_power(Generator::E, 3));
        let u = alg.multiply(&alg.expand_delta(&DeltaPoly::delta_power(2)), &e3);
        let d = decompose_maximal_ug(&u, &alg).unwrap();
        assert_eq!(d, MaximalDecomposition { power: 3, gamma: DeltaPoly::delta_power(2) });
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let he = alg.multiply(&g(Generator::H), &g(Generator::E));
        assert!(matches!(decompose_maximal_ug(&he, &alg), Err(StructureError::NotMaximal { .. })));
        assert!(matches!(decompose_maximal_ug(&g(Generator::F), &alg), Err(StructureError::BadWeight { weight: -2 })));
        assert!(matches!(decompose_maximal_ug(&g(Generator::X), &alg), Err(StructureError::NotInLiePart { .. })));
        let mixed = &g(Generator::E) + &NcPoly::one();
        assert!(matches!(decompose_maximal_ug(&mixed, &alg), Err(StructureError::NotHomogeneous { .. })));
    }

    #[test]
    fn solve_z1_z2_examples() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let c = commutator_with_x(&alg, &DeltaPoly::delta());
        assert_eq!(solve_z1_z2(&c, &alg).unwrap(), (DeltaPoly::delta(), DeltaPoly::zero()));

        let c2 = reconstruct_z1_z2(&DeltaPoly::delta(), &DeltaPoly::delta(), &alg);
        assert_eq!(solve_z1_z2(&c2, &alg).unwrap(), (DeltaPoly::delta(), DeltaPoly::delta()));
    }

    #[test]
    fn solve_z1_z2_shape_errors() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        assert!(matches!(solve_z1_z2(&g(Generator::Y), &alg), Err(StructureError::Shape { .. })));
        let yx = NcPoly::monomial(Monomial::new(0, 0, 0, 1, 1));
        assert!(matches!(solve_z1_z2(&yx, &alg), Err(StructureError::Shape { .. })));
        // x-block h·x without a matching ey-block
        let hx = NcPoly::monomial(Monomial::new(0, 1, 0, 0, 1));
        assert!(matches!(solve_z1_z2(&hx, &alg), Err(StructureError::Shape { .. })));
    }

    #[test]
    fn weight1_small_degrees() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let cfg = OracleConfig::default();
        let r1 = weight1_maximal_basis(1, &alg, &cfg).unwrap();
        assert_eq!(r1.oracle_dimension, 1);
        assert_eq!(r1.verdict, SpanRelation::Equal);
        assert_eq!(oracle::compare_span(&r1.oracle_basis, &[g(Generator::X)]), SpanRelation::Equal);
        let r3 = weight1_maximal_basis(3, &alg, &cfg).unwrap();
        assert_eq!(r3.verdict, SpanRelation::Equal);
        let dx = commutator_with_x(&alg, &DeltaPoly::delta());
        assert_eq!(oracle::compare_span(&[dx], &r3.oracle_basis), SpanRelation::ASubsetB);
    }

    #[test]
    fn weight1_requires_graded_case() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::one());
        assert!(matches!(
            weight1_maximal_basis(2, &alg, &OracleConfig::default()),
            Err(StructureError::NonzeroParameter { .. })
        ));
    }
}
