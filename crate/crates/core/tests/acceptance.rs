//! Acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p infhecke-core --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use infhecke::casimir::{apply_f, apply_g, commutator_with_x, fn_gn};
use infhecke::center::{central_element, express_in_center, linear_closed_form, omega_z, reconstruct_from_center, t_element, verify_central};
use infhecke::derivations::{bounded_search, check_derivation, euler, inner_derivation};
use infhecke::expr::{parse_delta_poly, parse_element};
use infhecke::oracle::{center_brute, compare_span, g_centralizer, homogeneous_dimension, OracleConfig, SpanRelation, TruncatedBasis};
use infhecke::render;
use infhecke::{DeltaPoly, Generator, HeckeAlgebra, Monomial, NcPoly, Rational};
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn alg(z: &str) -> HeckeAlgebra {
    HeckeAlgebra::with_z(parse_delta_poly(z).unwrap())
}

fn gen(g: Generator) -> NcPoly {
    NcPoly::generator(g)
}

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn random_monomial(rng: &mut ChaCha8Rng, max_degree: u32) -> Monomial {
    let d = rng.gen_range(0..=max_degree);
    let mut m = Monomial::ONE;
    for _ in 0..d {
        *m.exponent_mut(Generator::ALL[rng.gen_range(0..5)]) += 1;
    }
    m
}

fn random_element(rng: &mut ChaCha8Rng, max_degree: u32, max_terms: usize) -> NcPoly {
    let n = rng.gen_range(1..=max_terms);
    (0..n).map(|_| (random_monomial(rng, max_degree), random_rational(rng))).collect()
}

fn random_delta_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> DeltaPoly {
    let d = rng.gen_range(0..=max_degree);
    DeltaPoly::from_coeffs((0..=d).map(|_| random_rational(rng)).collect())
}

fn criterion_1() -> Outcome {
    let a = alg("0");
    let delta = HeckeAlgebra::delta();
    let dx = a.commutator(&delta, &gen(Generator::X));
    let dy = a.commutator(&delta, &gen(Generator::Y));
    let want_x = parse_element("(2h-3)x+4ey", &a).unwrap();
    let want_y = parse_element("(-2h-3)y+4fx", &a).unwrap();
    ensure(dx == want_x, || format!("[Δ,x] = {}", render::plain(&dx)))?;
    ensure(dy == want_y, || format!("[Δ,y] = {}", render::plain(&dy)))?;
    ensure(render::plain(&dx) == "2hx - 3x + 4ey", || format!("rendered {}", render::plain(&dx)))
}

fn criterion_2() -> Outcome {
    for n in 1..=10usize {
        let (f, _) = fn_gn(n);
        ensure(f.degree() == Some(n - 1), || format!("deg f_{n} = {:?}", f.degree()))?;
        ensure(f.leading_coeff() == Some(&Rational::from_integer((2 * n).into())), || {
            format!("leading coefficient of f_{n} is {:?}", f.leading_coeff())
        })?;
    }
    let a = alg("D");
    for n in 0..=6usize {
        let closed = commutator_with_x(&a, &DeltaPoly::delta_power(n));
        let direct = a.commutator(&a.delta_power(n), &gen(Generator::X));
        ensure(closed == direct, || format!("[Δ^{n}, x] closed form disagrees"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for z in ["0", "1", "D", "D+5", "2D-3", "D^2", "D^3-D"] {
        let a = alg(z);
        let tz = central_element(&a).tz;
        let bad = verify_central(&tz, &a);
        ensure(bad.is_empty(), || format!("z = {z}: [{}, t_z] ≠ 0", bad[0].0))?;
        ensure(tz.filtration_degree() == Ok(2), || format!("z = {z}: filtration degree {:?}", tz.filtration_degree()))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..5 {
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let alg = HeckeAlgebra::with_z(DeltaPoly::from_coeffs(vec![b.clone(), a.clone()]));
        let diff = &central_element(&alg).tz - &linear_closed_form(&alg, &a, &b);
        ensure(diff.is_constant(), || format!("a = {a}, b = {b}: difference {}", render::plain(&diff)))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for n in 2..=4i64 {
        let omega = omega_z(&DeltaPoly::delta_power(n as usize - 1));
        ensure(omega.leading_coeff() == Some(&ratio(-1, 2 * n)), || {
            format!("n = {n}: leading coefficient {:?}", omega.leading_coeff())
        })?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let a = alg("D");
    let cfg = OracleConfig::default();
    let tz = central_element(&a).tz;

    let center = center_brute(6, &a, &cfg).map_err(|e| e.to_string())?;
    ensure(center.len() == 2, || format!("center dimension {}", center.len()))?;
    let rel = compare_span(&center, &[NcPoly::one(), tz.clone()]);
    ensure(rel == SpanRelation::Equal, || format!("center vs {{1, t_Δ}}: {rel}"))?;

    let mut expected = Vec::new();
    for j in 0..=1u32 {
        for i in 0..=(6 - 4 * j) / 2 {
            expected.push(a.multiply(&a.delta_power(i as usize), &a.pow(&tz, j)));
        }
    }
    let cent = g_centralizer(6, &a, &cfg).map_err(|e| e.to_string())?;
    ensure(cent.len() == 6, || format!("g-centralizer dimension {} (expected 6)", cent.len()))?;
    let rel = compare_span(&expected, &cent);
    ensure(rel == SpanRelation::Equal, || format!("{{Δ^i t_Δ^j}} vs g-centralizer: {rel}"))
}

fn criterion_7() -> Outcome {
    for n in 0..=6u32 {
        let hom = homogeneous_dimension(n);
        ensure(hom == binomial(n as usize + 4, 4), || format!("degree {n}: {hom} monomials"))?;
        let trunc = TruncatedBasis::new(n).len();
        ensure(trunc == binomial(n as usize + 5, 5), || format!("degree <= {n}: {trunc} monomials"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for z in ["1", "D", "D^2"] {
        let a = alg(z);
        let c = central_element(&a);
        let t_plus_omega = &c.tz + &a.expand_delta(&c.omega);
        let (x, y) = (gen(Generator::X), gen(Generator::Y));
        for _ in 0..10 {
            let alpha = random_delta_poly(&mut rng, 4);
            let al = a.expand_delta(&alpha);
            let lhs = a.multiply(&a.commutator(&al, &x), &y) - a.multiply(&a.commutator(&al, &y), &x);
            let rhs = a.multiply(&a.expand_delta(&apply_f(&alpha)), &t_plus_omega).scale_int(2)
                + a.multiply(&a.expand_delta(&apply_g(&alpha)), a.z_expanded());
            ensure(lhs == rhs, || format!("z = {z}, α = {}", render::delta_plain(&alpha)))?;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    ensure(check_derivation(&euler(), &alg("0")).is_empty(), || "Euler fails at z = 0".into())?;
    for z in ["1", "D"] {
        let a = alg(z);
        let v = check_derivation(&euler(), &a);
        ensure(v.len() == 1, || format!("z = {z}: {} violated relations", v.len()))?;
        let want = a.z_expanded().scale_int(2);
        ensure(v[0].defect == want, || format!("z = {z}: defect {}", render::plain(&v[0].defect)))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for z in ["0", "1", "D"] {
        let a = alg(z);
        for _ in 0..5 {
            let p = random_element(&mut rng, 3, 3);
            let v = check_derivation(&inner_derivation(&p, &a), &a);
            ensure(v.is_empty(), || format!("z = {z}: ad({}) is not a derivation", render::plain(&p)))?;
        }
    }
    for z in ["1", "D"] {
        let report = bounded_search(1, 2, &alg(z));
        ensure(report.solutions.is_empty(), || format!("z = {z}: {} solutions", report.solutions.len()))?;
    }
    Ok(())
}

const CASES: usize = 100;

fn criterion_10() -> Outcome {
    let zs = ["0", "1", "D", "D^2-3"];
    let mut rng = ChaCha8Rng::seed_from_u64(10);

    for case in 0..CASES {
        let a = alg(zs[case % zs.len()]);
        let p = random_element(&mut rng, 3, 3);
        let q = random_element(&mut rng, 3, 3);
        let r = random_element(&mut rng, 2, 3);
        let left = a.multiply(&a.multiply(&p, &q), &r);
        let right = a.multiply(&p, &a.multiply(&q, &r));
        ensure(left == right, || format!("associativity, case {case}"))?;
    }

    for case in 0..CASES {
        let a = alg(zs[case % zs.len()]);
        let p = random_element(&mut rng, 2, 3);
        let q = random_element(&mut rng, 2, 3);
        let r = random_element(&mut rng, 2, 3);
        let jac = a.commutator(&p, &a.commutator(&q, &r))
            + a.commutator(&q, &a.commutator(&r, &p))
            + a.commutator(&r, &a.commutator(&p, &q));
        ensure(jac.is_zero(), || format!("Jacobi, case {case}"))?;
    }

    for case in 0..CASES {
        let a = alg(zs[case % zs.len()]);
        let p = random_element(&mut rng, 3, 3);
        let q = random_element(&mut rng, 3, 3);
        ensure(a.anti_j(&a.anti_j(&p)) == p, || format!("j² = 1, case {case}"))?;
        let jpq = a.anti_j(&a.multiply(&p, &q));
        ensure(jpq == a.multiply(&a.anti_j(&q), &a.anti_j(&p)), || format!("j(pq) = j(q)j(p), case {case}"))?;
        let d = a.expand_delta(&random_delta_poly(&mut rng, 2));
        ensure(a.anti_j(&d) == d, || format!("j fixes ℚ[Δ], case {case}"))?;
    }
    for z in zs {
        let a = alg(z);
        let t = t_element(&a);
        ensure(a.anti_j(&t) == t, || format!("j(t) ≠ t at z = {z}"))?;
    }

    for case in 0..CASES {
        let a = alg(zs[case % zs.len()]);
        let m1 = random_monomial(&mut rng, 3);
        let m2 = random_monomial(&mut rng, 3);
        let prod = a.multiply(&NcPoly::monomial(m1), &NcPoly::monomial(m2));
        let w = m1.weight() + m2.weight();
        ensure(prod.terms().all(|(m, _)| m.weight() == w), || format!("weight additivity, case {case}"))?;
    }

    for case in 0..CASES {
        let a = alg(zs[case % zs.len()]);
        let top = rng.gen_range(0..=2u32);
        let mut coeffs = Vec::new();
        for i in (0..=top).rev() {
            let gamma = random_delta_poly(&mut rng, 2);
            if !gamma.is_zero() && (i == top || rng.gen_bool(0.7)) {
                coeffs.push((i, gamma));
            }
        }
        let p = reconstruct_from_center(&coeffs, &a);
        let back = express_in_center(&p, &a).map_err(|e| format!("case {case}: {e}"))?;
        ensure(back == coeffs, || format!("expressInCenter round trip, case {case}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("commutator goldens", criterion_1),
        ("f_n recursion and [Δ^n, x]", criterion_2),
        ("central element", criterion_3),
        ("linear closed form", criterion_4),
        ("ω leading coefficient", criterion_5),
        ("oracle center and g-centralizer", criterion_6),
        ("PBW counts", criterion_7),
        ("[α,x]y − [α,y]x identity", criterion_8),
        ("derivations", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
