//! The central generator `t_z = t − ½ h z − ω_z` with `t = ey² + hxy − fx²`.

use num_traits::Zero;

use crate::algebra::HeckeAlgebra;
use crate::casimir::{apply_f_inverse, apply_g, commutator_with_x};
use crate::delta::DeltaPoly;
use crate::error::CenterError;
use crate::generator::Generator;
use crate::ncpoly::NcPoly;
use crate::render;
use crate::structure::solve_delta_times_e_power;
use crate::Rational;

/// The central generator for one value of `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElementResult {
    pub tz: NcPoly,
    pub omega: DeltaPoly,
    pub z: DeltaPoly,
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `ey² + hxy − fx²` in normal form.
pub fn t_element(alg: &HeckeAlgebra) -> NcPoly {
    use Generator::*;
    let g = NcPoly::generator;
    let mut t = alg.product([&g(E), &g(Y), &g(Y)]);
    t += &alg.product([&g(H), &g(X), &g(Y)]);
    t -= &alg.product([&g(F), &g(X), &g(X)]);
    t
}

/// `t − ½ h z`; killed by `ad(e)`, `ad(f)` and `ad(h)`.
pub fn t_shifted(alg: &HeckeAlgebra) -> NcPoly {
    let hz = alg.multiply(&NcPoly::generator(Generator::H), alg.z_expanded());
    t_element(alg) - hz.scale(&half())
}

/// `ω_z = −F⁻¹(z) + ½ z + ½ F⁻¹(G(z))`, with `F⁻¹` normalized to have no
/// constant term.
pub fn omega_z(z: &DeltaPoly) -> DeltaPoly {
    let a = -apply_f_inverse(z);
    let b = z.scale(&half());
    let c = apply_f_inverse(&apply_g(z)).scale(&half());
    &(&a + &b) + &c
}

/// `q_z = [x, t − ½ h z]`.
pub fn q_z(alg: &HeckeAlgebra) -> NcPoly {
    alg.commutator(&NcPoly::generator(Generator::X), &t_shifted(alg))
}

pub fn central_element(alg: &HeckeAlgebra) -> CentralElementResult {
    let omega = omega_z(alg.z());
    let tz = t_shifted(alg) - alg.expand_delta(&omega);
    CentralElementResult { tz, omega, z: alg.z().clone() }
}

/// `ey² + hxy − fx² − ½h(aΔ + b) + ¼(aΔ² + (2b − a)Δ)`, the closed form for
/// linear `z = aΔ + b`. Agrees with [`central_element`] up to a constant.
pub fn linear_closed_form(alg: &HeckeAlgebra, a: &Rational, b: &Rational) -> NcPoly {
    let z = DeltaPoly::from_coeffs(vec![b.clone(), a.clone()]);
    let hz = alg.multiply(&NcPoly::generator(Generator::H), &alg.expand_delta(&z));
    let quarter = Rational::new(1.into(), 4.into());
    let two = Rational::from_integer(2.into());
    let correction = DeltaPoly::from_coeffs(vec![Rational::zero(), &two * b - a, a.clone()]).scale(&quarter);
    t_element(alg) - hz.scale(&half()) + alg.expand_delta(&correction)
}

/// Nonzero commutators `[g, p]` over the five generators; empty iff `p` is
/// central.
pub fn verify_central(p: &NcPoly, alg: &HeckeAlgebra) -> Vec<(Generator, NcPoly)> {
    [Generator::E, Generator::F, Generator::H, Generator::X, Generator::Y]
        .into_iter()
        .filter_map(|g| {
            let c = alg.ad(g, p);
            (!c.is_zero()).then_some((g, c))
        })
        .collect()
}

/// Writes an element commuting with `sl2` as `Σ γ_i(Δ) t_z^i`.
///
/// Peels the `x`-free block with the highest power of `y`: for a
/// `sl2`-invariant element that block is `γ(Δ) e^n y^{2n}`, and subtracting
/// `γ t_z^n` strictly lowers the top `y` power. Pairs come back in
/// decreasing `i`, zero coefficients omitted.
pub fn express_in_center(p: &NcPoly, alg: &HeckeAlgebra) -> Result<Vec<(u32, DeltaPoly)>, CenterError> {
    for g in Generator::LIE {
        let c = alg.ad(g, p);
        if !c.is_zero() {
            return Err(CenterError::NotInvariant { generator: g, commutator: render::plain(&c) });
        }
    }
    let tz = central_element(alg).tz;
    let mut powers = vec![NcPoly::one()];
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let blocks = rest.module_blocks();
        let Some((&(d, _), lead)) = blocks.iter().filter(|((_, m), _)| *m == 0).max_by_key(|((d, _), _)| *d)
        else {
            return Err(CenterError::DecompositionFailure {
                context: format!("no x-free terms left in {}", render::plain(&rest)),
            });
        };
        if d % 2 != 0 {
            return Err(CenterError::DecompositionFailure {
                context: format!("top x-free block has odd y-power {d}"),
            });
        }
        let n = d / 2;
        let gamma = solve_delta_times_e_power(lead, n, alg).ok_or_else(|| CenterError::DecompositionFailure {
            context: format!("coefficient {} of y^{d} is not γ(Δ)·e^{n}", render::plain(lead)),
        })?;
        while powers.len() <= n as usize {
            let next = alg.multiply(powers.last().unwrap(), &tz);
            powers.push(next);
        }
        let term = alg.multiply(&alg.expand_delta(&gamma), &powers[n as usize]);
        rest -= &term;
        out.push((n, gamma));
    }
    Ok(out)
}

/// Inverse of [`express_in_center`].
pub fn reconstruct_from_center(coeffs: &[(u32, DeltaPoly)], alg: &HeckeAlgebra) -> NcPoly {
    let tz = central_element(alg).tz;
    let mut out = NcPoly::zero();
    for (i, gamma) in coeffs {
        let term = alg.multiply(&alg.expand_delta(gamma), &alg.pow(&tz, *i));
        out += &term;
    }
    out
}

/// `¼(z[Δ,x] + [Δ,x]z − [z,x])`, assembled from the closed form of `[Δ^n, x]`
/// without touching `t`.
pub fn q_z_from_delta_commutators(alg: &HeckeAlgebra) -> NcPoly {
    let z = alg.z_expanded();
    let dx = commutator_with_x(alg, &DeltaPoly::delta());
    let zx = commutator_with_x(alg, alg.z());
    let mut out = alg.multiply(z, &dx);
    out += &alg.multiply(&dx, z);
    out -= &zx;
    out.scale(&Rational::new(1.into(), 4.into()))
}

#[cfg(test)]
fn monomial_poly(f: u32, h: u32, e: u32, y: u32, x: u32) -> NcPoly {
    NcPoly::monomial(crate::monomial::Monomial::new(f, h, e, y, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn t_at_z_zero() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        let expected = monomial_poly(0, 0, 1, 2, 0) + monomial_poly(0, 1, 0, 1, 1) - monomial_poly(1, 0, 0, 0, 2);
        assert_eq!(t_element(&alg), expected);
    }

    #[test]
    fn e_commutator_of_t() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let e = NcPoly::generator(Generator::E);
        let et = alg.commutator(&e, &t_element(&alg));
        assert_eq!(et, -alg.multiply(&e, alg.z_expanded()));
        assert!(alg.commutator(&e, &t_shifted(&alg)).is_zero());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_z(&DeltaPoly::zero()), DeltaPoly::zero());
        // −¼(aΔ² + (2b − a)Δ) + b/2 at a = 2, b = 3
        let got = omega_z(&DeltaPoly::from_integers(&[3, 2]));
        assert_eq!(got, DeltaPoly::from_coeffs(vec![rq(3, 2), rq(-1, 1), rq(-1, 2)]));
        assert_eq!(omega_z(&DeltaPoly::delta_power(2)).leading_coeff(), Some(&rq(-1, 6)));
    }

    #[test]
    fn central_for_delta() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let r = central_element(&alg);
        assert!(verify_central(&r.tz, &alg).is_empty());
        assert_eq!(r.tz.filtration_degree(), Ok(2));
    }

    #[test]
    fn central_for_one_differs_from_closed_form_by_constant() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::one());
        let r = central_element(&alg);
        let closed = linear_closed_form(&alg, &Rational::zero(), &Rational::one());
        let diff = &r.tz - &closed;
        assert_eq!(diff, NcPoly::constant(rq(-1, 2)));
    }

    #[test]
    fn verify_central_of_h() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let report = verify_central(&NcPoly::generator(Generator::H), &alg);
        assert!(report.contains(&(Generator::E, NcPoly::generator(Generator::E).scale_int(-2))));
        assert!(report.contains(&(Generator::F, NcPoly::generator(Generator::F).scale_int(2))));
    }

    #[test]
    fn verify_central_of_delta_flags_only_x_and_y() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let report = verify_central(&HeckeAlgebra::delta(), &alg);
        let gens: Vec<Generator> = report.iter().map(|(g, _)| *g).collect();
        assert_eq!(gens, vec![Generator::X, Generator::Y]);
    }

    #[test]
    fn q_z_small_cases() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::zero());
        assert!(q_z(&alg).is_zero());
        let alg = HeckeAlgebra::with_z(DeltaPoly::one());
        let expected = monomial_poly(0, 1, 0, 0, 1) - monomial_poly(0, 0, 0, 0, 1).scale(&rq(3, 2))
            + monomial_poly(0, 0, 1, 1, 0).scale_int(2);
        assert_eq!(q_z(&alg), expected);
    }

    #[test]
    fn express_in_center_examples() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let tz = central_element(&alg).tz;
        let d = HeckeAlgebra::delta();
        let p = alg.multiply(&tz, &tz) + alg.multiply(&d, &tz);
        let got = express_in_center(&p, &alg).unwrap();
        assert_eq!(got, vec![(2, DeltaPoly::one()), (1, DeltaPoly::delta())]);

        let d3 = alg.expand_delta(&DeltaPoly::delta_power(3));
        assert_eq!(express_in_center(&d3, &alg).unwrap(), vec![(0, DeltaPoly::delta_power(3))]);
        assert_eq!(express_in_center(&NcPoly::zero(), &alg).unwrap(), vec![]);
    }

    #[test]
    fn express_in_center_rejects_non_invariant() {
        let alg = HeckeAlgebra::with_z(DeltaPoly::delta());
        let err = express_in_center(&NcPoly::generator(Generator::Y), &alg).unwrap_err();
        assert!(matches!(err, CenterError::NotInvariant { generator: Generator::E, .. }));
    }
}
