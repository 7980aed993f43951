//! Brute-force checks on truncated monomial bases.
//!
//! Every adjoint operator is materialized as an exact matrix whose columns
//! are computed independently by the rewriting engine; kernels, centralizers
//! and span comparisons are then plain exact linear algebra.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::algebra::HeckeAlgebra;
use crate::error::OracleError;
use crate::generator::Generator;
use crate::linalg::{self, SparseVec};
use crate::monomial::Monomial;
use crate::ncpoly::NcPoly;
use crate::Rational;

/// Resource limits for the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_degree: u32,
    pub max_basis_size: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_degree: 8, max_basis_size: 1287 }
    }
}

impl OracleConfig {
    fn check(&self, max_degree: u32) -> Result<(), OracleError> {
        let size = TruncatedBasis::pbw_size(max_degree);
        if max_degree > self.max_degree || size > self.max_basis_size {
            return Err(OracleError::BasisTooLarge {
                max_degree,
                size,
                limit: self.max_basis_size.min(TruncatedBasis::pbw_size(self.max_degree)),
            });
        }
        Ok(())
    }
}

/// All monomials of total degree `<= max_degree`, graded-lex ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedBasis {
    pub max_degree: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl TruncatedBasis {
    pub fn new(max_degree: u32) -> Self {
        let monomials: Vec<Monomial> = (0..=max_degree).flat_map(Monomial::all_of_degree).collect();
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        TruncatedBasis { max_degree, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `C(n + 5, 5)`.
    pub fn pbw_size(n: u32) -> usize {
        let n = n as usize;
        (1..=5).fold(1usize, |acc, k| acc * (n + k) / k)
    }

    /// Coordinates of `p`; `None` if `p` leaves the truncation.
    pub fn coordinates(&self, p: &NcPoly) -> Option<Vec<(usize, Rational)>> {
        p.terms().map(|(m, c)| self.index_of(m).map(|i| (i, c.clone()))).collect()
    }

    pub fn element(&self, coords: &SparseVec<usize>) -> NcPoly {
        coords.iter().map(|(i, c)| (self.monomials[*i], c.clone())).collect()
    }
}

/// Exact matrix of `ad(g)` from one truncated basis to another.
#[derive(Clone, Debug)]
pub struct AdMatrix {
    pub operator: Generator,
    pub domain: TruncatedBasis,
    pub codomain: TruncatedBasis,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl AdMatrix {
    pub fn rows(&self) -> usize {
        self.codomain.len()
    }

    pub fn cols(&self) -> usize {
        self.domain.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.columns[j]
            .iter()
            .find(|(r, _)| *r == i)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn rank(&self) -> usize {
        let cols: Vec<SparseVec<usize>> = self.columns.iter().map(|c| c.iter().cloned().collect()).collect();
        linalg::rank(&cols)
    }
}

/// Degree growth of `ad(g)` on the total-degree filtration predicted from
/// `[x, y] = z`.
pub fn predicted_growth(g: Generator, alg: &HeckeAlgebra) -> u32 {
    match g {
        Generator::X | Generator::Y => match alg.z().degree() {
            Some(d) if d >= 1 => (2 * d - 1) as u32,
            _ => 0,
        },
        _ => 0,
    }
}

fn ad_images(g: Generator, basis: &TruncatedBasis, alg: &HeckeAlgebra) -> Vec<NcPoly> {
    let gen = NcPoly::generator(g);
    basis
        .monomials
        .par_iter()
        .map(|m| alg.commutator(&gen, &NcPoly::monomial(*m)))
        .collect()
}

/// Matrix of `ad(g)` on the monomials of total degree `<= max_degree`.
///
/// The codomain is truncated at `max_degree + predicted_growth(g)`, or
/// higher if some image actually reaches further (possible once
/// `deg z >= 2`).
pub fn ad_matrix(
    g: Generator,
    max_degree: u32,
    alg: &HeckeAlgebra,
    config: &OracleConfig,
) -> Result<AdMatrix, OracleError> {
    config.check(max_degree)?;
    let domain = TruncatedBasis::new(max_degree);
    let images = ad_images(g, &domain, alg);
    let reach = images.iter().filter_map(NcPoly::total_degree).max().unwrap_or(0);
    let codomain = TruncatedBasis::new(reach.max(max_degree + predicted_growth(g, alg)));
    let columns = images
        .iter()
        .map(|p| codomain.coordinates(p).expect("codomain covers every image"))
        .collect();
    Ok(AdMatrix { operator: g, domain, codomain, columns })
}

/// Joint kernel of `ad(g)` for `g` in `gens`, restricted to the domain
/// monomials accepted by `keep`. Returned as a reduced echelon basis whose
/// pivots are the highest monomials, listed in increasing pivot order.
fn joint_kernel(
    gens: &[Generator],
    max_degree: u32,
    alg: &HeckeAlgebra,
    config: &OracleConfig,
    keep: impl Fn(&Monomial) -> bool,
) -> Result<Vec<NcPoly>, OracleError> {
    let matrices = gens
        .iter()
        .map(|g| ad_matrix(*g, max_degree, alg, config))
        .collect::<Result<Vec<_>, _>>()?;
    let domain = &matrices[0].domain;
    let selected: Vec<usize> = (0..domain.len()).filter(|&j| keep(&domain.monomials[j])).collect();
    let columns: Vec<SparseVec<(usize, usize)>> = selected
        .iter()
        .map(|&j| {
            matrices
                .iter()
                .enumerate()
                .flat_map(|(gi, mat)| mat.column(j).iter().map(move |(r, c)| ((gi, *r), c.clone())))
                .collect()
        })
        .collect();
    let kernel = linalg::kernel(&columns);
    let elements: Vec<NcPoly> = kernel
        .iter()
        .map(|k| k.iter().map(|(i, c)| (domain.monomials[selected[*i]], c.clone())).collect())
        .collect();
    Ok(canonical_basis(&elements))
}

/// Reduced echelon basis of a span, pivoting on the highest monomial of each
/// element, listed in increasing pivot order.
pub fn canonical_basis(elements: &[NcPoly]) -> Vec<NcPoly> {
    let vectors: Vec<SparseVec<Reverse<Monomial>>> =
        elements.iter().map(|p| p.terms().map(|(m, c)| (Reverse(*m), c.clone())).collect()).collect();
    let mut out: Vec<NcPoly> = linalg::reduced_basis(&vectors)
        .into_iter()
        .map(|v| v.into_iter().map(|(Reverse(m), c)| (m, c)).collect())
        .collect();
    out.reverse();
    out
}

/// Basis of the elements of total degree `<= max_degree` commuting with
/// `e, f, h`.
pub fn g_centralizer(max_degree: u32, alg: &HeckeAlgebra, config: &OracleConfig) -> Result<Vec<NcPoly>, OracleError> {
    joint_kernel(&[Generator::E, Generator::F, Generator::H], max_degree, alg, config, |_| true)
}

/// Basis of the central elements of total degree `<= max_degree`.
pub fn center_brute(max_degree: u32, alg: &HeckeAlgebra, config: &OracleConfig) -> Result<Vec<NcPoly>, OracleError> {
    joint_kernel(&Generator::ALL, max_degree, alg, config, |_| true)
}

/// Basis of the maximal vectors (killed by `ad(e)`) of the given weight and
/// total degree `<= max_degree`. `ad(h)` is diagonal on monomials, so the
/// weight condition is a restriction of the domain.
pub fn maximal_vectors(
    weight: i64,
    max_degree: u32,
    alg: &HeckeAlgebra,
    config: &OracleConfig,
) -> Result<Vec<NcPoly>, OracleError> {
    joint_kernel(&[Generator::E], max_degree, alg, config, |m| m.weight() == weight)
}

/// Number of PBW monomials of total degree exactly `n`.
pub fn homogeneous_dimension(n: u32) -> usize {
    Monomial::all_of_degree(n).len()
}

/// Relative position of two spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanRelation {
    Equal,
    /// `span A ⊊ span B`
    ASubsetB,
    /// `span B ⊊ span A`
    BSubsetA,
    Incomparable,
}

impl std::fmt::Display for SpanRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SpanRelation::Equal => "equal",
            SpanRelation::ASubsetB => "A⊂B",
            SpanRelation::BSubsetA => "B⊂A",
            SpanRelation::Incomparable => "incomparable",
        };
        f.write_str(s)
    }
}

fn as_vectors(ps: &[NcPoly]) -> Vec<SparseVec<Monomial>> {
    ps.iter().map(|p| p.terms().map(|(m, c)| (*m, c.clone())).collect()).collect()
}

pub fn span_rank(ps: &[NcPoly]) -> usize {
    linalg::rank(&as_vectors(ps))
}

pub fn compare_span(a: &[NcPoly], b: &[NcPoly]) -> SpanRelation {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let both: Vec<NcPoly> = a.iter().chain(b).cloned().collect();
    let rab = span_rank(&both);
    match (rab == ra, rab == rb) {
        (true, true) => SpanRelation::Equal,
        (false, true) => SpanRelation::ASubsetB,
        (true, false) => SpanRelation::BSubsetA,
        (false, false) => SpanRelation::Incomparable,
    }
}

/// Dimensions of the weight spaces of the kernel of `ad(e)`, keyed by weight.
pub fn maximal_weight_profile(
    max_degree: u32,
    alg: &HeckeAlgebra,
    config: &OracleConfig,
) -> Result<BTreeMap<i64, usize>, OracleError> {
    let all = joint_kernel(&[Generator::E], max_degree, alg, config, |_| true)?;
    // The kernel of ad(e) is spanned by weight-homogeneous vectors, so
    // splitting an echelon basis by weight gives the weight-space
    // dimensions after re-ranking each piece.
    let mut pieces: BTreeMap<i64, Vec<NcPoly>> = BTreeMap::new();
    for p in &all {
        for (w, part) in p.weight_decompose() {
            pieces.entry(w).or_default().push(part);
        }
    }
    Ok(pieces.into_iter().map(|(w, ps)| (w, span_rank(&ps))).filter(|(_, d)| *d > 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::DeltaPoly;

    fn x() -> NcPoly {
        NcPoly::generator(Generator::X)
    }
    fn y() -> NcPoly {
        NcPoly::generator(Generator::Y)
    }

    #[test]
    fn basis_sizes() {
        for n in 0..6 {
            assert_eq!(TruncatedBasis::new(n).len(), TruncatedBasis::pbw_size(n));
        }
        assert_eq!(TruncatedBasis::pbw_size(8), 1287);
    }

    #[test]
    fn ad_h_on_degree_one() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let m = ad_matrix(Generator::H, 1, &alg, &OracleConfig::default()).unwrap();
        let ix = m.domain.index_of(&Monomial::generator(Generator::X)).unwrap();
        let iy = m.domain.index_of(&Monomial::generator(Generator::Y)).unwrap();
        assert_eq!(m.entry(m.codomain.index_of(&Monomial::generator(Generator::X)).unwrap(), ix), Rational::from_integer(1.into()));
        assert_eq!(m.entry(m.codomain.index_of(&Monomial::generator(Generator::Y)).unwrap(), iy), Rational::from_integer((-1).into()));
    }

    #[test]
    fn ad_e_on_y_squared() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let m = ad_matrix(Generator::E, 2, &alg, &OracleConfig::default()).unwrap();
        let j = m.domain.index_of(&Monomial::new(0, 0, 0, 2, 0)).unwrap();
        let col: SparseVec<usize> = m.column(j).iter().cloned().collect();
        let expected = NcPoly::monomial(Monomial::new(0, 0, 0, 1, 1)).scale_int(2) + alg.z_expanded().clone();
        assert_eq!(m.codomain.element(&col), expected);
    }

    #[test]
    fn ad_e_on_constants_has_rank_zero() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        assert_eq!(ad_matrix(Generator::E, 0, &alg, &OracleConfig::default()).unwrap().rank(), 0);
    }

    #[test]
    fn resource_guard() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let tight = OracleConfig { max_degree: 3, max_basis_size: 56 };
        assert!(ad_matrix(Generator::E, 3, &alg, &tight).is_ok());
        assert!(matches!(ad_matrix(Generator::E, 4, &alg, &tight), Err(OracleError::BasisTooLarge { .. })));
    }

    #[test]
    fn span_comparisons() {
        assert_eq!(compare_span(&[x()], &[x().scale_int(2)]), SpanRelation::Equal);
        assert_eq!(compare_span(&[x()], &[x(), y()]), SpanRelation::ASubsetB);
        assert_eq!(compare_span(&[x(), y()], &[x()]), SpanRelation::BSubsetA);
        assert_eq!(compare_span(&[&x() + &y()], &[&x() - &y()]), SpanRelation::Incomparable);
    }

    #[test]
    fn small_centralizers() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let cfg = OracleConfig::default();
        assert_eq!(g_centralizer(0, &alg, &cfg).unwrap(), vec![NcPoly::one()]);
        let c2 = g_centralizer(2, &alg, &cfg).unwrap();
        assert_eq!(c2.len(), 2);
        assert_eq!(compare_span(&c2, &[NcPoly::one(), HeckeAlgebra::delta()]), SpanRelation::Equal);
    }
}
