//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N ... PASS|FAIL` line. All comparisons are exact.

mod common;

use common::*;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tvar_core::classify::{
    build_horizontal, build_horizontal_steps, check_horizontal, closure_oracle, surface_support_check,
    vertical_admissible_rays, vertical_roots, Condition, HorizontalOutcome,
};
use tvar_core::convexlat::{qr, Cone, LatVec, LatticeBox, SigmaPolyhedron, SupportValue};
use tvar_core::funcfield::{binomial_in_field, Curve, CurvePoint, Fe, PrimeField, RatFunc};
use tvar_core::graded::GradedElement;
use tvar_core::lfihd::{
    apply_horizontal, apply_toric, kernel_generators, ord_formula_check, verify_axioms, Algebra, HorizontalSpec,
    LfihdSpec, Renderer, Step, ToricSpec, VerticalSpec,
};
use tvar_core::pdiv::PolyDivisor;
use tvar_core::roots::is_root;

fn report(n: u32, title: &str, result: Result<String, String>) {
    match result {
        Ok(detail) => println!("criterion {n:>2} {title}: PASS ({detail})"),
        Err(why) => {
            println!("criterion {n:>2} {title}: FAIL ({why})");
            panic!("criterion {n} failed: {why}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_01_divisor_over_projective_line() {
    let run = || -> Result<String, String> {
        let f = PrimeField::rationals();
        let d = p1_quadrant(f);
        let deg = d.degree_polyhedron().map_err(|e| e.to_string())?;
        let expected = SigmaPolyhedron::new(vec![qv(&[(1, 1), (0, 1)]), qv(&[(1, 2), (1, 2)])], quadrant()).unwrap();
        ensure(deg.same_set(&expected), || format!("deg D = {deg}"))?;
        let (proper, why) = d.is_proper();
        ensure(proper, || format!("improper: {why}"))?;
        let u = p1_quadrant_generators(f);
        for (k, a) in u.iter().enumerate() {
            d.membership(a).map_err(|e| format!("u{} not in A: {e}", k + 1))?;
        }
        let rels = [
            &(&u[1] * &u[4]) - &(&u[2] * &u[3]),
            &(&(&u[2] * &u[4]) - &(&(&u[0] * &u[0]) * &u[1])) - &(&(&u[0] * &u[1]) * &u[3]),
            &(&(&u[4] * &u[4]) - &(&(&u[0] * &u[0]) * &u[3])) - &(&(&u[0] * &u[3]) * &u[3]),
        ];
        for (k, r) in rels.iter().enumerate() {
            ensure(r.is_zero(), || format!("relation {} evaluates to {r}", k + 1))?;
        }
        let piece = d.graded_piece(&lv(&[2, 0])).map_err(|e| e.to_string())?;
        ensure(piece.basis.dim() == Some(2), || format!("dim A_(2,0) = {:?}", piece.basis.dim()))?;
        Ok("deg D = conv{(1,0),(1/2,1/2)} + sigma, proper, 5 members, 3 relations vanish, dim A_(2,0) = 2".into())
    };
    report(1, "polyhedral divisor over P^1", run());
}

#[test]
fn criterion_02_toric_root_table() {
    let run = || -> Result<String, String> {
        let sigma = skew_cone();
        let root = is_root(&sigma, &lv(&[0, -1])).map_err(|e| e.to_string())?.ok_or("(0,-1) is not a root")?;
        ensure(root.ray == lv(&[0, 1]), || format!("distinguished ray {}", root.ray))?;
        let f = PrimeField::rationals();
        let spec = ToricSpec::from_root(root, f.one(), 0).map_err(|e| e.to_string())?;
        let ch = |m: &[i64]| GradedElement::character(f, lv(m));
        let (x, y, z) = (ch(&[1, 0]), ch(&[1, 1]), ch(&[1, 2]));
        let table: [(&str, &[i64], Vec<GradedElement>); 3] = [
            ("x", &[1, 0], vec![x.clone()]),
            ("y", &[1, 1], vec![y.clone(), x.clone()]),
            ("z", &[1, 2], vec![z.clone(), y.scale(&f.from_i64(2)), x.clone()]),
        ];
        for (name, m, want) in table {
            let s = apply_toric(&spec, &lv(m)).map_err(|e| e.to_string())?;
            ensure(s.is_complete(), || format!("series of {name} is not finite"))?;
            ensure(s.degree() == Some(want.len() - 1), || format!("deg of e^(xD)({name}) is {:?}", s.degree()))?;
            for (i, w) in want.iter().enumerate() {
                let got = s.coeff(i).unwrap();
                ensure(&got == w, || format!("D^({i})({name}) = {got}, expected {w}"))?;
            }
        }
        Ok("D(y) = x, D(z) = 2y, D^(2)(z) = x, all higher terms zero".into())
    };
    report(2, "toric LFIHD table", run());
}

#[test]
fn criterion_03_vertical_rays() {
    let run = || -> Result<String, String> {
        let d = p1_quadrant(PrimeField::rationals());
        let rays = vertical_admissible_rays(&d).map_err(|e| e.to_string())?;
        let adm: Vec<LatVec> = rays.iter().filter(|r| r.admissible).map(|r| r.ray.clone()).collect();
        ensure(adm == vec![lv(&[0, 1])], || format!("admissible rays {adm:?}"))?;
        ensure(rays.len() == 2, || format!("{} rays reported", rays.len()))?;
        Ok("admissible = {(0,1)}".into())
    };
    report(3, "vertical admissible rays", run());
}

#[test]
fn criterion_04_horizontal_over_p1() {
    let run = || -> Result<String, String> {
        let d = p1_quadrant(PrimeField::rationals());
        let omega = cone(2, &[&[0, 1], &[1, 1]]);
        let out = check_horizontal(&d, &lv(&[1, 2]), &omega, &[0], None).map_err(|e| e.to_string())?;
        let cert = match &out {
            HorizontalOutcome::Accepted(c) => c,
            HorizontalOutcome::Rejected(r) => {
                let data = r
                    .provisional
                    .as_ref()
                    .map(|c| format!("; v = {}, d = {}, tau^ = {}, root {}", c.v, c.d, c.tau_hat, c.root_hat.e))
                    .unwrap_or_default();
                return Err(format!("rejected at {}: {}{data}", r.condition, r.reason));
            }
        };
        ensure(cert.v == qv(&[(1, 2), (0, 1)]), || format!("v = {}", cert.v))?;
        ensure(cert.d == 2, || format!("d = {}", cert.d))?;
        let tau_hat = cone(3, &[&[1, 0, 2], &[-1, 1, 0], &[1, 0, -2]]);
        ensure(cert.tau_hat.same_set(&tau_hat), || format!("tau^ = {}", cert.tau_hat))?;
        ensure(cert.root_hat.e == lv(&[1, 2, -1]), || format!("root {}", cert.root_hat.e))?;
        Ok(format!("v = {}, d = 2, tau^ = {}, root (1,2,-1)", cert.v, cert.tau_hat))
    };
    report(4, "horizontal certificate over P^1", run());
}

#[test]
fn criterion_05_bertin_surface() {
    let run = || -> Result<String, String> {
        let d = bertin();
        let f = d.field();
        let (x, y, z) = bertin_xyz();
        let e = lv(&[1]);

        let out2 = check_horizontal(&d, &e, &half_line(), &[2], None).map_err(|e| e.to_string())?;
        let rej = out2.rejection().ok_or("s = 2 was accepted")?;
        ensure(rej.condition == Condition::Iv, || format!("s = 2 rejected at {}", rej.condition))?;
        let witness = rej.witness.clone().ok_or("no witness")?;
        let prov = rej.provisional.as_ref().ok_or("no provisional data")?;
        ensure(prov.verification.bound() > 0 && matches!(prov.verification, tvar_core::classify::Verification::Exact { .. }), || {
            format!("verification {}", prov.verification)
        })?;
        let forced = build_horizontal_steps(prov, &[(2, f.one())]).map_err(|e| e.to_string())?;
        let closure = closure_oracle(&forced, &prov.normalized, 6).map_err(|e| e.to_string())?;
        let t_chi = el(RatFunc::var(f), &[-1]);
        let hit = closure.failures.iter().find(|c| c.element == y && c.index == 4);
        let hit = hit.ok_or_else(|| format!("no closure failure at D^(4)(y); failures: {}", closure.failures.len()))?;
        ensure(hit.image == t_chi, || format!("D^(4)(y) = {}", hit.image))?;
        let direct = apply_horizontal(&forced, &y, Some(&d), 64).map_err(|e| e.to_string())?;
        ensure(matches!(direct.flags().get(&4), Some(Err(_))), || "membership flag of D^(4)(y) is not false".into())?;

        let out6 = check_horizontal(&d, &e, &half_line(), &[6], None).map_err(|e| e.to_string())?;
        let cert = out6.certificate().ok_or_else(|| format!("s = 6 rejected: {:?}", out6.rejection().map(|r| &r.reason)))?;
        ensure(matches!(cert.verification, tvar_core::classify::Verification::Exact { .. }), || {
            format!("verification {}", cert.verification)
        })?;
        let spec = build_horizontal(cert, &[f.one()]).map_err(|e| e.to_string())?;
        let r = Renderer::new(vec![("x".into(), x.clone()), ("y".into(), y.clone()), ("z".into(), z.clone())]);
        let want = [
            (&x, "x"),
            (&z, "z + α^64 x^13"),
            (&y, "y + α^64 x^11 z^4 + α^256 x^50 z + α^320 x^63"),
        ];
        for (a, w) in want {
            let s = apply_horizontal(&spec, a, Some(&d), 64).map_err(|e| e.to_string())?;
            ensure(s.all_members(), || format!("image of {a} leaves A"))?;
            let got = r.series(&s, "α");
            ensure(got == w, || format!("got {got}, expected {w}"))?;
        }
        let k = kernel_generators(&LfihdSpec::Horizontal(spec), &Algebra::Divisor(d.clone()), 12, None)
            .map_err(|e| e.to_string())?;
        ensure(k.elements == vec![x.clone()], || {
            format!("kernel generators {:?}", k.elements.iter().map(|a| a.to_string()).collect::<Vec<_>>())
        })?;
        Ok(format!("s = 2 rejected at (iv) with m = {witness}, D^(4)(y) = t*chi^-1 flagged; s = 6 reproduces all three images; kernel = k[x]"))
    };
    report(5, "Bertin surface in characteristic 2", run());
}

fn axiom_cases() -> Vec<(String, LfihdSpec, Algebra, usize, Vec<GradedElement>)> {
    let q = PrimeField::rationals();
    let f2 = PrimeField::fp(2).unwrap();
    let f3 = PrimeField::fp(3).unwrap();
    let mut cases = Vec::new();

    let toric = [
        (skew_cone(), lv(&[0, -1]), q, 0u32),
        (skew_cone(), lv(&[1, -1]), f2, 1),
        (quadrant(), lv(&[-1, 2]), f3, 1),
        (cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), lv(&[0, 1, -1]), f2, 0),
    ];
    for (sigma, e, f, r) in toric {
        let spec = ToricSpec::new(&sigma, &e, f.from_i64(1), r).unwrap();
        let p = spec.period() as usize;
        let alg = Algebra::Toric(sigma.clone());
        let given = vec![GradedElement::character(f, LatVec::zero(sigma.rank()))];
        cases.push((format!("toric {e} over {f}, r = {r}"), LfihdSpec::Toric(spec), alg, (2 * p).max(4), given));
    }

    for f in [q, f3] {
        let d = p1_quadrant(f);
        let fam = vertical_roots(&d, 2).unwrap();
        let spec = fam[0].specs[0].clone();
        cases.push((format!("vertical {} over {f}", spec.root().e), LfihdSpec::Vertical(spec), Algebra::Divisor(d.clone()), 4, p1_quadrant_generators(f)));
    }

    let d = bertin();
    let (x, y, z) = bertin_xyz();
    let spec = HorizontalSpec::new(lv(&[1]), qv(&[(1, 5)]), &[(6, f2.one())]).unwrap();
    cases.push(("horizontal Bertin s = 6".into(), LfihdSpec::Horizontal(spec), Algebra::Divisor(d), 128, vec![x, y, z]));

    let d = p1_quadrant(f2);
    let omega = cone(2, &[&[0, 1], &[1, 1]]);
    let out = check_horizontal(&d, &lv(&[1, 2]), &omega, &[0, 1], None).unwrap();
    let cert = out.certificate().expect("accepted in characteristic 2");
    let spec = build_horizontal(cert, &vec![f2.one(); cert.admissible_s.len()]).unwrap();
    let q1 = 2usize.pow(cert.s1);
    cases.push((
        format!("horizontal over P^1 in characteristic 2, s1 = {}", cert.s1),
        LfihdSpec::Horizontal(spec),
        Algebra::Divisor(cert.normalized.clone()),
        (2 * q1).max(4),
        p1_quadrant_generators(f2),
    ));
    cases
}

fn negative_controls() -> Vec<(String, LfihdSpec, Algebra, Vec<GradedElement>)> {
    let q = PrimeField::rationals();
    let f2 = PrimeField::fp(2).unwrap();
    let sigma = skew_cone();
    let good = ToricSpec::new(&sigma, &lv(&[0, -1]), q.one(), 0).unwrap();
    let d = bertin();
    let (x, y, z) = bertin_xyz();
    vec![
        (
            "toric with D^(1) doubled".into(),
            LfihdSpec::scaled(LfihdSpec::Toric(good), 1, q.from_i64(2)),
            Algebra::Toric(sigma.clone()),
            vec![],
        ),
        (
            "toric with a non-root degree".into(),
            LfihdSpec::Toric(ToricSpec::unchecked(lv(&[1, 1]), lv(&[0, 1]), q.one(), 0)),
            Algebra::Toric(sigma.clone()),
            vec![],
        ),
        (
            "vertical with phi outside the section space".into(),
            LfihdSpec::Vertical(VerticalSpec::unchecked(lv(&[2, -1]), lv(&[0, 1]), RatFunc::one(q))),
            Algebra::Divisor(p1_quadrant(q)),
            p1_quadrant_generators(q),
        ),
        (
            "horizontal with exponent 3".into(),
            LfihdSpec::Horizontal(HorizontalSpec::with_raw_exponents(
                lv(&[1]),
                qv(&[(1, 5)]),
                vec![Step { exponent: 3, lambda: f2.one() }],
            )),
            Algebra::Divisor(d),
            vec![x, y, z],
        ),
    ]
}

#[test]
fn criterion_06_axiom_suite() {
    let run = || -> Result<String, String> {
        let cases = axiom_cases();
        let count = |k: &str| cases.iter().filter(|c| c.1.kind() == k).count();
        ensure(count("toric") >= 3 && count("vertical") >= 2 && count("horizontal") >= 2, || "too few specs".into())?;
        for (name, spec, alg, max_i, given) in &cases {
            let s = samples(alg, given, 10);
            ensure(s.len() >= 10, || format!("{name}: only {} samples", s.len()))?;
            ensure(*max_i >= 2 * spec.period() as usize, || format!("{name}: max_i {max_i} too small"))?;
            let rep = verify_axioms(spec, alg, &s, *max_i).map_err(|e| format!("{name}: {e}"))?;
            ensure(rep.passed(), || format!("{name}: {rep}"))?;
        }
        let mut caught = Vec::new();
        for (name, spec, alg, given) in negative_controls() {
            let s = samples(&alg, &given, 10);
            let rep = verify_axioms(&spec, &alg, &s, 8).map_err(|e| format!("{name}: {e}"))?;
            ensure(!rep.passed(), || format!("negative control {name:?} passed every axiom"))?;
            caught.push(format!(
                "{name}: {}",
                rep.failed_axioms().iter().map(|a| a.name()).collect::<Vec<_>>().join("+")
            ));
        }
        Ok(format!("{} specs pass; negative controls fail [{}]", cases.len(), caught.join("; ")))
    };
    report(6, "LFIHD axioms", run());
}

#[test]
fn criterion_07_coefficient_identities_and_ord_formula() {
    let run = || -> Result<String, String> {
        let sigma = skew_cone();
        let dual = sigma.dual();
        let e = lv(&[0, -1]);
        let rho = lv(&[0, 1]);
        let mut checks = 0usize;
        for f in [PrimeField::rationals(), PrimeField::fp(2).unwrap(), PrimeField::fp(3).unwrap()] {
            let spec = ToricSpec::new(&sigma, &e, f.one(), 0).unwrap();
            let bx = LatticeBox::new(2, 6);
            let pts: Vec<LatVec> = (0..bx.len()).map(|i| bx.point(i)).filter(|m| dual.contains(m)).collect();
            let c = |i: usize, m: &LatVec| -> Fe {
                let s = apply_toric(&spec, m).unwrap();
                s.coeff(i).unwrap().component(&(m + &e.scale(i as i64))).num().coeff(0)
            };
            let max_i = 6usize;
            for m in &pts {
                for m2 in &pts {
                    let mm = m + m2;
                    for i in 0..=max_i {
                        let rhs = (0..=i).fold(f.zero(), |acc, j| &acc + &(&c(i - j, m) * &c(j, m2)));
                        ensure(c(i, &mm) == rhs, || format!("(ii) fails at i = {i}, m = {m}, m' = {m2} over {f}"))?;
                        checks += 1;
                        if m2.dot(&rho) == 0 {
                            ensure(c(i, &mm) == c(i, m), || format!("(v) fails at i = {i}, m = {m}, m' = {m2}"))?;
                            checks += 1;
                        }
                    }
                }
                for i in 0..=max_i {
                    for j in 0..=max_i {
                        let lhs = &binomial_in_field((i + j) as u64, i as u64, f) * &c(i + j, m);
                        let shifted = m + &e.scale(j as i64);
                        let rhs = if dual.contains(&shifted) { &c(i, &shifted) * &c(j, m) } else { f.zero() };
                        let cj = c(j, m);
                        ensure(dual.contains(&shifted) || cj.is_zero(), || format!("c_{j}({m}) != 0 outside"))?;
                        ensure(lhs == rhs, || format!("(iv) fails at i = {i}, j = {j}, m = {m} over {f}"))?;
                        checks += 1;
                    }
                }
            }
        }
        let mut formula_checks = 0usize;
        for p in [2u64, 3] {
            let f = PrimeField::fp(p).unwrap();
            let lam = |k: i64| f.from_i64(k);
            let families: Vec<Vec<(u32, Fe)>> = vec![
                vec![(0, lam(1))],
                vec![(0, lam(1)), (1, lam(1))],
                vec![(1, lam(p as i64 - 1)), (2, lam(1))],
                vec![(0, lam(1)), (2, lam(1)), (3, lam(p as i64 - 1))],
            ];
            for steps in &families {
                let q1 = p.pow(steps[0].0);
                for ell in 0..=64u64 {
                    for i in 0..=ell / q1 {
                        ord_formula_check(steps, i, ell).map_err(|e| e.to_string())?;
                        formula_checks += 1;
                    }
                }
            }
        }
        Ok(format!("{checks} coefficient identities, {formula_checks} formula checks against the multinomial expansion"))
    };
    report(7, "coefficient identities and order formula", run());
}

#[test]
fn criterion_08_degree_law() {
    let run = || -> Result<String, String> {
        let sigma = skew_cone();
        let dual = sigma.dual();
        let mut n = 0;
        for p in [2u64, 3, 5] {
            let f = PrimeField::fp(p).unwrap();
            for (e, rho) in [(lv(&[0, -1]), lv(&[0, 1])), (lv(&[1, -1]), lv(&[0, 1])), (lv(&[0, 1]), lv(&[2, -1]))] {
                for r in 0..=2u32 {
                    let spec = ToricSpec::new(&sigma, &e, f.one(), r).map_err(|e| e.to_string())?;
                    ensure(spec.root().ray == rho, || format!("ray of {e}"))?;
                    let bx = LatticeBox::new(2, 4);
                    for m in (0..bx.len()).map(|i| bx.point(i)).filter(|m| dual.contains(m)) {
                        let s = apply_toric(&spec, &m).map_err(|e| e.to_string())?;
                        let want = p.pow(r) as usize * m.dot(&rho) as usize;
                        ensure(s.degree() == Some(want), || format!("deg_x at m = {m}, r = {r}, p = {p}: {:?} != {want}", s.degree()))?;
                        n += 1;
                    }
                }
            }
        }
        Ok(format!("{n} exponentials"))
    };
    report(8, "degree law", run());
}

/// A random proper divisor over a line with tail `R>=0`.
fn random_surface(rng: &mut ChaCha8Rng) -> PolyDivisor {
    let fields = [0u64, 2, 3, 5];
    let f = PrimeField::new(fields[rng.gen_range(0..fields.len())]).unwrap();
    let curve = if rng.gen_bool(0.5) { Curve::Affine } else { Curve::Projective };
    let tail = half_line();
    let mut coeffs = Vec::new();
    let den = rng.gen_range(1..=6i64);
    let num = rng.gen_range(-6..=6i64);
    coeffs.push((at(f, 0), SigmaPolyhedron::new(vec![qv(&[(num, den)])], tail.clone()).unwrap()));
    let mut used = vec![f.zero()];
    for a in 1..=3i64 {
        let z = f.from_i64(a);
        if used.contains(&z) || rng.gen_bool(0.4) {
            continue;
        }
        used.push(z);
        let d2 = if rng.gen_bool(0.7) { 1 } else { rng.gen_range(2..=4) };
        let v = qv(&[(rng.gen_range(-3..=3), d2)]);
        coeffs.push((at(f, a), SigmaPolyhedron::new(vec![v], tail.clone()).unwrap()));
    }
    if curve == Curve::Projective {
        let total: tvar_core::convexlat::Q = coeffs.iter().map(|(_, p)| p.vertices()[0].coords()[0].clone()).sum();
        let need = qr(rng.gen_range(1..=3), rng.gen_range(1..=3)) - total;
        coeffs.push((CurvePoint::Infinity, SigmaPolyhedron::new(vec![tvar_core::convexlat::QVec::new(vec![need])], tail.clone()).unwrap()));
    }
    PolyDivisor::new(f, curve, tail, coeffs).unwrap()
}

#[test]
fn criterion_09_surface_support() {
    let run = || -> Result<String, String> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let (mut accepted, mut tried) = (0, 0);
        while accepted < 24 && tried < 400 {
            tried += 1;
            let d = random_surface(&mut rng);
            let e = lv(&[rng.gen_range(-3..=3)]);
            let out = check_horizontal(&d, &e, &half_line(), &[0, 1, 2, 3], None).map_err(|e| e.to_string())?;
            if !out.is_accepted() {
                continue;
            }
            accepted += 1;
            let rep = surface_support_check(&d).map_err(|e| e.to_string())?;
            ensure(rep.pass, || format!("{d}e = {e}: {}", rep.detail))?;
        }
        ensure(accepted >= 20, || format!("only {accepted} accepted instances out of {tried}"))?;
        Ok(format!("{accepted} accepted instances out of {tried} generated"))
    };
    report(9, "surface support property", run());
}

fn random_cone(rng: &mut ChaCha8Rng, rank: usize) -> Cone {
    loop {
        let k = rng.gen_range(1..=4);
        let gens: Vec<LatVec> =
            (0..k).map(|_| LatVec::new((0..rank).map(|_| rng.gen_range(-3..=3)).collect())).collect();
        if let Ok(c) = Cone::new(rank, &gens) {
            return c;
        }
    }
}

fn add_support(a: SupportValue, b: SupportValue) -> SupportValue {
    match (a, b) {
        (SupportValue::Finite(x), SupportValue::Finite(y)) => SupportValue::Finite(x + y),
        _ => SupportValue::NegInfinity,
    }
}

#[test]
fn criterion_10_binomials_and_convexity() {
    let run = || -> Result<String, String> {
        let mut row: Vec<BigUint> = vec![BigUint::from(1u32)];
        let fields: Vec<PrimeField> = [2u64, 3, 5].iter().map(|&p| PrimeField::fp(p).unwrap()).collect();
        let mut binoms = 0usize;
        for n in 0..=512u64 {
            if n > 0 {
                let mut next = vec![BigUint::from(1u32); n as usize + 1];
                for i in 1..n as usize {
                    next[i] = &row[i - 1] + &row[i];
                }
                row = next;
            }
            for f in &fields {
                for (i, c) in row.iter().enumerate() {
                    let want = f.from_bigint(&c.clone().into());
                    ensure(binomial_in_field(n, i as u64, *f) == want, || format!("C({n},{i}) over {f}"))?;
                    binoms += 1;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let mut cones = 0;
        let mut polys = 0;
        while cones < 60 {
            let rank = rng.gen_range(2..=3);
            let c = random_cone(&mut rng, rank);
            ensure(c.dual().dual().same_set(&c), || format!("dual of dual of {c} is {}", c.dual().dual()))?;
            cones += 1;
            if !c.is_strongly_convex() {
                continue;
            }
            let vert = |rng: &mut ChaCha8Rng| {
                let k = rng.gen_range(1..=3);
                (0..k)
                    .map(|_| tvar_core::convexlat::QVec::new((0..rank).map(|_| qr(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect()))
                    .collect::<Vec<_>>()
            };
            let p = SigmaPolyhedron::new(vert(&mut rng), c.clone()).map_err(|e| e.to_string())?;
            let q = SigmaPolyhedron::new(vert(&mut rng), c.clone()).map_err(|e| e.to_string())?;
            let s = p.minkowski_sum(&q).map_err(|e| e.to_string())?;
            let bx = LatticeBox::new(rank, 2);
            for m in (0..bx.len()).map(|i| bx.point(i)) {
                let lhs = s.support_value(&m).map_err(|e| e.to_string())?;
                let rhs = add_support(p.support_value(&m).unwrap(), q.support_value(&m).unwrap());
                ensure(lhs == rhs, || format!("h_(P+Q)({m}) = {lhs} but h_P + h_Q = {rhs}"))?;
            }
            polys += 1;
        }
        ensure(polys >= 50, || format!("only {polys} polyhedron pairs"))?;
        Ok(format!("{binoms} binomials, {cones} cones, {polys} Minkowski pairs"))
    };
    report(10, "binomials, duality and support additivity", run());
}
