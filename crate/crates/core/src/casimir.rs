//! Calculus in `ℚ[Δ]`: the sequences `f_n, g_n` with
//! `[Δ^n, x] = (f_n h + g_n) x + 2 f_n e y`, the operators `F, G` sending
//! `Δ^n` to `f_n, g_n`, and the normalized inverse of `F`.

use std::sync::{LazyLock, Mutex};

use num_traits::Zero;

use crate::algebra::HeckeAlgebra;
use crate::delta::DeltaPoly;
use crate::generator::Generator;
use crate::monomial::Monomial;
use crate::ncpoly::NcPoly;
use crate::Rational;

static TABLE: LazyLock<Mutex<Vec<(DeltaPoly, DeltaPoly)>>> =
    LazyLock::new(|| Mutex::new(vec![(DeltaPoly::zero(), DeltaPoly::zero())]));

/// `(f_n, g_n)`, starting from `f_0 = g_0 = 0` and
///
/// ```text
/// f_{n+1} = 2Δ^n + (Δ − 1) f_n − 2 g_n
/// g_{n+1} = −3Δ^n + (Δ + 3) g_n − 2Δ f_n
/// ```
pub fn fn_gn(n: usize) -> (DeltaPoly, DeltaPoly) {
    let mut table = TABLE.lock().unwrap();
    while table.len() <= n {
        let k = table.len() - 1;
        let (f, g) = table[k].clone();
        let delta_k = DeltaPoly::delta_power(k);
        let delta_minus_one = DeltaPoly::from_integers(&[-1, 1]);
        let delta_plus_three = DeltaPoly::from_integers(&[3, 1]);
        let two = Rational::from_integer(2.into());
        let f_next = &(&delta_k.scale(&two) + &(&delta_minus_one * &f)) - &g.scale(&two);
        let g_next = &(&delta_k.scale(&Rational::from_integer((-3).into())) + &(&delta_plus_three * &g))
            - &f.shift().scale(&two);
        table.push((f_next, g_next));
    }
    table[n].clone()
}

/// The rows `(f_k, g_k)` for `k = 0..=n`.
pub fn fn_gn_table(n: usize) -> Vec<(DeltaPoly, DeltaPoly)> {
    fn_gn(n);
    TABLE.lock().unwrap()[..=n].to_vec()
}

fn apply_linear(q: &DeltaPoly, pick: impl Fn(&(DeltaPoly, DeltaPoly)) -> &DeltaPoly) -> DeltaPoly {
    let Some(deg) = q.degree() else {
        return DeltaPoly::zero();
    };
    let table = fn_gn_table(deg);
    let mut out = DeltaPoly::zero();
    for (k, c) in q.terms() {
        out = &out + &pick(&table[k]).scale(c);
    }
    out
}

/// `F(Σ q_k Δ^k) = Σ q_k f_k`.
pub fn apply_f(q: &DeltaPoly) -> DeltaPoly {
    apply_linear(q, |row| &row.0)
}

/// `G(Σ q_k Δ^k) = Σ q_k g_k`.
pub fn apply_g(q: &DeltaPoly) -> DeltaPoly {
    apply_linear(q, |row| &row.1)
}

/// The unique `p` with zero constant term and `F(p) = q`.
///
/// `F` lowers degree by one and scales the leading coefficient of `Δ^k`
/// by `2k`, so the solve is a top-down peel.
pub fn apply_f_inverse(q: &DeltaPoly) -> DeltaPoly {
    let Some(deg) = q.degree() else {
        return DeltaPoly::zero();
    };
    let table = fn_gn_table(deg + 1);
    let mut rest = q.clone();
    let mut coeffs = vec![Rational::zero(); deg + 2];
    for k in (1..=deg + 1).rev() {
        let target = rest.coeff(k - 1);
        if target.is_zero() {
            continue;
        }
        let lead = table[k].0.coeff(k - 1);
        let c = target / lead;
        rest = &rest - &table[k].0.scale(&c);
        coeffs[k] = c;
    }
    debug_assert!(rest.is_zero());
    DeltaPoly::from_coeffs(coeffs)
}

/// `[q(Δ), x] = (F(q) h + G(q)) x + 2 F(q) e y`, assembled from the recursion.
pub fn commutator_with_x(alg: &HeckeAlgebra, q: &DeltaPoly) -> NcPoly {
    let f = alg.expand_delta(&apply_f(q));
    let g = alg.expand_delta(&apply_g(q));
    let h = NcPoly::generator(Generator::H);
    let e = NcPoly::generator(Generator::E);
    let mut coeff_x = alg.multiply(&f, &h);
    coeff_x += &g;
    let coeff_y = alg.multiply(&f, &e).scale_int(2);
    right_times(&coeff_x, Generator::X) + right_times(&coeff_y, Generator::Y)
}

/// `[q(Δ), y] = 2 F(q) f x + (−F(q) h + G(q)) y`.
pub fn commutator_with_y(alg: &HeckeAlgebra, q: &DeltaPoly) -> NcPoly {
    let f = alg.expand_delta(&apply_f(q));
    let g = alg.expand_delta(&apply_g(q));
    let coeff_x = alg.multiply(&f, &NcPoly::generator(Generator::F)).scale_int(2);
    let mut coeff_y = -alg.multiply(&f, &NcPoly::generator(Generator::H));
    coeff_y += &g;
    right_times(&coeff_x, Generator::X) + right_times(&coeff_y, Generator::Y)
}

/// `u · g` for `u ∈ U(sl2)` and `g ∈ {x, y}`; already in normal order.
fn right_times(u: &NcPoly, g: Generator) -> NcPoly {
    debug_assert!(u.in_lie_part());
    let tail = Monomial::generator(g);
    u.terms().map(|(m, c)| (m.concat(&tail), c.clone())).collect()
}
