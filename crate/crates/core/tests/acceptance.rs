//! Acceptance run: one PASS/FAIL line per criterion. All checks are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use axial_core::algebra::{certify_axis, tau_matrix};
use axial_core::jordan::{full_pipeline, solid3gen_check, PipelineOptions, Verdict};
use axial_core::linalg::Matrix;
use axial_core::lines::{
    baric_algebra, classify_line, flat_algebra, line_model, toric_algebra, AnyLineModel, LineKind,
    OrbitSize, RootChoice, Side, DEFAULT_ORBIT_BOUND,
};
use axial_core::matsuo::{build_matsuo, catalog_load, catalog_names};
use axial_core::solidity::{
    all_pairs, analyze_pairs, associator_map, derivation_test, dual_number_check, enumeration_test,
    is_derivation, line_idempotents, Methods, SAMPLE_PARAMETERS,
};
use axial_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn matsuo<F: Field>(name: &str, f: F) -> Result<CertifiedAlgebra<F>, String> {
    let h = f.half();
    let class = catalog_load(name).map_err(|e| e.to_string())?;
    build_matsuo(&class, f, h)
        .map_err(|e| e.to_string())?
        .prepare()
        .map_err(|e| format!("{name}: {e}"))
}

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn c1_matsuo_axioms() -> Outcome {
    fn run<F: Field>(field: F) -> Result<usize, String> {
        let mut axes = 0;
        for name in catalog_names() {
            let cert = matsuo(name, field.clone())?;
            ensure!(
                cert.axes.len() == cert.dim(),
                "{name}: not every basis vector is a generating axis"
            );
            for (i, a) in cert.axes.iter().enumerate() {
                ensure!(
                    a.element == cert.algebra.basis_vector(i),
                    "{name}: axis {i} is not e_{i}"
                );
                let rec = certify_axis(&cert.algebra, &a.element, &cert.eta)
                    .map_err(|e| format!("{name} axis {i}: {e}"))?;
                ensure!(
                    rec.fusion_ok,
                    "{name} axis {i}: fusion products not verified"
                );
            }
            axes += cert.axes.len();
        }
        Ok(axes)
    }
    let n = run(Rationals)? + run(f(5))? + run(f(7))?;
    Ok(format!("{n} axes certified over Q, F5, F7"))
}

fn c2_solid_off_quarter() -> Outcome {
    let quarter_or_not =
        |name: &str, pairs: Vec<(usize, usize)>| -> Result<(usize, usize), String> {
            let field = f(5);
            let cert = matsuo(name, field.clone())?;
            let quarter = field.from_ratio(1, 4).unwrap();
            let (mut covered, mut total) = (0, 0);
            for (i, j) in pairs {
                let line = classify_line(&cert, &cert.axes[i], &cert.axes[j])
                    .map_err(|e| e.to_string())?;
                total += 1;
                if line.gram_ab != quarter || line.dim() != 3 {
                    covered += 1;
                    let (solid, w) = derivation_test(&cert, &line).map_err(|e| e.to_string())?;
                    ensure!(
                        solid,
                        "{name} pair ({i},{j}): {} line not solid, Leibniz fails at {w:?}",
                        line.kind
                    );
                }
            }
            Ok((covered, total))
        };
    let mut covered = 0;
    let mut total = 0;
    for name in ["S4", "S5", "W(D4)"] {
        let n = catalog_load(name).unwrap().len();
        let (c, t) = quarter_or_not(name, all_pairs(n))?;
        covered += c;
        total += t;
    }
    Ok(format!(
        "{covered} of {total} pairs have gram != 1/4 or dim != 3; all solid"
    ))
}

fn c3_mixed_solidity() -> Outcome {
    let cert = matsuo("3^3:S4", Rationals)?;
    let pairs = all_pairs(cert.axes.len());
    let mut solid = 0;
    let mut non_solid = 0;
    for r in analyze_pairs(&cert, &pairs, Methods::derivation_only()) {
        let p = r.map_err(|e| e.to_string())?;
        if p.verdict.solid {
            solid += 1;
        } else {
            non_solid += 1;
        }
    }
    ensure!(
        solid > 0 && non_solid > 0,
        "solid {solid}, non-solid {non_solid}"
    );
    Ok(format!(
        "full scan of {} pairs: {solid} solid, {non_solid} non-solid",
        pairs.len()
    ))
}

fn c4_characteristic_three() -> Outcome {
    let field = f(3);
    let cert = matsuo("W(D4)", field.clone())?;
    let mut found = None;
    for (i, j) in all_pairs(cert.axes.len()) {
        let line = classify_line(&cert, &cert.axes[i], &cert.axes[j]).map_err(|e| e.to_string())?;
        let (solid, _) = derivation_test(&cert, &line).map_err(|e| e.to_string())?;
        if !solid && line.kind == LineKind::Baric3 {
            found = Some((i, j, line));
            break;
        }
    }
    let (i, j, line) = found.ok_or("no non-solid 3-dimensional baric line")?;
    let model = line_model(&cert, &line, RootChoice::First).map_err(|e| e.to_string())?;
    let en = enumeration_test(&model).map_err(|e| e.to_string())?;
    ensure!(
        !en.failures.is_empty(),
        "enumeration found no failing idempotent"
    );

    // independent recount: every primitive idempotent of the line over F9, certified in the ambient algebra
    let AnyLineModel::Base(m) = &model else {
        return Err("baric line should not need an extension".into());
    };
    let ext = QuadExt::of_finite(field.clone()).map_err(|e| e.to_string())?;
    let alg = m.algebra.lift(&ext);
    let span: Vec<_> = m
        .span
        .iter()
        .map(|v| Algebra::<PrimeField>::lift_vector(&ext, v))
        .collect();
    let eta = Extends::<PrimeField>::embed(&ext, &m.eta);
    let idems = line_idempotents(&alg, &span).map_err(|e| e.to_string())?;
    let bad = idems
        .iter()
        .filter(|c| certify_axis(&alg, c, &eta).is_err())
        .count();
    ensure!(
        bad == en.failures.len(),
        "recount found {bad} failing idempotents, enumeration {}",
        en.failures.len()
    );

    let report = full_pipeline(&cert, PipelineOptions::default()).map_err(|e| e.to_string())?;
    ensure!(
        report.verdict == Verdict::NotJordan,
        "pipeline verdict {}",
        report.verdict
    );
    Ok(format!(
        "pair ({i},{j}) baric J(1) not solid; {} of {} primitive idempotents over {} fail, e.g. [{}]: {}; verdict NotJordan",
        en.failures.len(),
        en.primitive,
        en.field,
        en.failures[0].element.join(", "),
        en.failures[0].failure
    ))
}

fn c5_oracle_equivalence() -> Outcome {
    let methods = Methods {
        dual_numbers: true,
        polynomial: true,
        enumeration: true,
        sampling: false,
    };
    let mut compared = 0;
    let mut lines = 0;
    for p in [5u64, 7] {
        for name in ["S4", "W(D4)"] {
            let cert = matsuo(name, f(p))?;
            for r in analyze_pairs(&cert, &all_pairs(cert.axes.len()), methods) {
                let pair = r.map_err(|e| format!("{name}/F{p}: {e}"))?;
                let v = &pair.verdict;
                let applicable = [v.by_polynomial, v.by_enumeration].iter().flatten().count();
                if pair.line.dim() == 3 {
                    ensure!(
                        applicable == 2,
                        "{name}/F{p} ({},{}): 3-dim line without both oracles",
                        pair.i,
                        pair.j
                    );
                }
                compared += applicable;
                lines += 1;
            }
        }
    }
    Ok(format!(
        "{lines} lines, {compared} oracle verdicts equal to the derivation test"
    ))
}

fn c6_miyamoto_closed_forms() -> Outcome {
    fn finite(p: u64) -> Result<usize, String> {
        let field = f(p);
        let mut algs = vec![
            flat_algebra(field.clone()).unwrap(),
            baric_algebra(field.clone(), false).unwrap(),
            baric_algebra(field.clone(), true).unwrap(),
        ];
        // mu = 1 gives a = b and mu = -1 a 2-dimensional line
        algs.extend(
            (2..p as i64 - 1).map(|mu| toric_algebra(field.clone(), &field.from_i64(mu)).unwrap()),
        );
        let mut checked = 0;
        for alg in algs {
            let cert = alg.prepare().map_err(|e| e.to_string())?;
            let line =
                classify_line(&cert, &cert.axes[0], &cert.axes[1]).map_err(|e| e.to_string())?;
            let model = line_model(&cert, &line, RootChoice::First).map_err(|e| e.to_string())?;
            let AnyLineModel::Base(m) = model else {
                return Err("split line needed an extension".into());
            };
            let params: Vec<_> = field
                .elements()
                .unwrap()
                .into_iter()
                .filter(|x| m.kind != LineKind::Toric || !field.is_zero(x))
                .collect();
            for fam in &m.families {
                for lambda in &params {
                    for mu in &params {
                        let ok = m
                            .miyamoto_matches(fam.side, lambda, mu)
                            .map_err(|e| e.to_string())?;
                        ensure!(
                            ok,
                            "{} over F{p}: side {:?}, lambda {lambda}, mu {mu}",
                            m.kind,
                            fam.side
                        );
                        checked += 1;
                    }
                }
            }
        }
        Ok(checked)
    }
    let q = Rationals;
    let pairs: Vec<_> = SAMPLE_PARAMETERS[1..11]
        .iter()
        .zip(SAMPLE_PARAMETERS[11..21].iter())
        .map(|(&(a, b), &(c, d))| (q.from_ratio(a, b).unwrap(), q.from_ratio(c, d).unwrap()))
        .collect();
    let mut rational = 0;
    let algs = [
        flat_algebra(q).unwrap(),
        baric_algebra(q, false).unwrap(),
        toric_algebra(q, &q.from_i64(3)).unwrap(),
    ];
    for alg in algs {
        let cert = alg.prepare().map_err(|e| e.to_string())?;
        let line = classify_line(&cert, &cert.axes[0], &cert.axes[1]).map_err(|e| e.to_string())?;
        let AnyLineModel::Base(m) =
            line_model(&cert, &line, RootChoice::First).map_err(|e| e.to_string())?
        else {
            return Err("rational toric line with mu = 3 needed an extension".into());
        };
        for fam in &m.families {
            for (lambda, mu) in &pairs {
                ensure!(
                    m.miyamoto_matches(fam.side, lambda, mu)
                        .map_err(|e| e.to_string())?,
                    "{} over Q",
                    m.kind
                );
                rational += 1;
            }
        }
    }
    let total = finite(5)? + finite(7)?;
    Ok(format!(
        "{total} parameter pairs over F5/F7 and {rational} over Q match"
    ))
}

fn c7_orbit_sizes() -> Outcome {
    let q = Rationals;
    let cert = matsuo("S3", q)?;
    let line = classify_line(&cert, &cert.axes[0], &cert.axes[1]).map_err(|e| e.to_string())?;
    ensure!(line.kind == LineKind::Toric, "S3 line is {}", line.kind);
    ensure!(
        line.gram_ab == q.from_ratio(1, 4).unwrap(),
        "S3 gram is {}",
        q.fmt_elem(&line.gram_ab)
    );
    let model = line_model(&cert, &line, RootChoice::First).map_err(|e| e.to_string())?;
    let s3 = axial_core::with_model!(&model, m => m.orbit_size(DEFAULT_ORBIT_BOUND))
        .map_err(|e| e.to_string())?;
    ensure!(s3 == OrbitSize::Finite(3), "S3 toric orbit {s3}");
    let mu = model.mu_string().unwrap_or_default();

    let orbit = |alg: AxialAlgebra<_>| -> Result<OrbitSize, String> {
        let cert = alg.prepare().map_err(|e| e.to_string())?;
        let line = classify_line(&cert, &cert.axes[0], &cert.axes[1]).map_err(|e| e.to_string())?;
        let m = line_model(&cert, &line, RootChoice::First).map_err(|e| e.to_string())?;
        axial_core::with_model!(&m, m => m.orbit_size(DEFAULT_ORBIT_BOUND))
            .map_err(|e| e.to_string())
    };
    let flat5 = orbit(flat_algebra(f(5)).unwrap())?;
    let baric5 = orbit(baric_algebra(f(5), false).unwrap())?;
    ensure!(
        flat5 == OrbitSize::Finite(5) && baric5 == OrbitSize::Finite(5),
        "F5 orbits {flat5}, {baric5}"
    );
    let cert = flat_algebra(q)
        .unwrap()
        .prepare()
        .map_err(|e| e.to_string())?;
    let line = classify_line(&cert, &cert.axes[0], &cert.axes[1]).map_err(|e| e.to_string())?;
    let AnyLineModel::Base(m) =
        line_model(&cert, &line, RootChoice::First).map_err(|e| e.to_string())?
    else {
        unreachable!()
    };
    let flat_q = m
        .orbit_size(DEFAULT_ORBIT_BOUND)
        .map_err(|e| e.to_string())?;
    ensure!(
        matches!(flat_q, OrbitSize::Infinite { .. }),
        "flat over Q: {flat_q}"
    );
    Ok(format!(
        "S3 toric: 3 axes, mu = {mu}; flat/baric over F5: {flat5}/{baric5}; flat over Q: {flat_q}"
    ))
}

fn c8_frobenius() -> Outcome {
    fn run<F: Field>(field: F) -> Result<usize, String> {
        let quarter = field.from_ratio(1, 4).unwrap();
        let mut checks = 0;
        for name in catalog_names() {
            let class = catalog_load(name).unwrap();
            let cert = matsuo(name, field.clone())?;
            let alg = &cert.algebra;
            let n = cert.dim();
            let g = &cert.form.gram;
            for i in 0..n {
                ensure!(field.is_one(g.get(i, i)), "{name}: (a_{i}, a_{i}) != 1");
                for j in 0..n {
                    ensure!(
                        g.get(i, j) == g.get(j, i),
                        "{name}: gram not symmetric at ({i},{j})"
                    );
                    let expected = match class.class_d[i].then(&class.class_d[j]).unwrap().order() {
                        1 => field.one(),
                        2 => field.zero(),
                        _ => quarter.clone(),
                    };
                    ensure!(
                        *g.get(i, j) == expected,
                        "{name}: gram ({i},{j}) off its collinearity value"
                    );
                    for k in 0..n {
                        let (ei, ek) = (alg.basis_vector(i), alg.basis_vector(k));
                        let left = cert.form.pair(&field, &ei, &alg.product(j, k));
                        let right = cert.form.pair(&field, &alg.product(i, j), &ek);
                        ensure!(
                            left == right,
                            "{name}: (e_{i}, e_{j} e_{k}) != (e_{i} e_{j}, e_{k})"
                        );
                        checks += 1;
                    }
                }
            }
            for axis in &cert.axes {
                let tau = tau_matrix(alg, axis);
                let moved = tau.transpose().mul(&field, &g.mul(&field, &tau));
                ensure!(
                    moved == *g,
                    "{name}: form not invariant under a Miyamoto map"
                );
            }
        }
        Ok(checks)
    }
    let n = run(Rationals)? + run(f(5))? + run(f(7))?;
    Ok(format!(
        "{n} associativity triples; symmetry, unit axes, invariance and values 1/0/1/4 hold"
    ))
}

fn c9_jordan_pipeline() -> Outcome {
    fn run<F: Field>(field: F, names: &[&str], out: &mut Vec<String>) -> Result<(), String> {
        for name in names {
            let cert = matsuo(name, field.clone())?;
            let r = full_pipeline(&cert, PipelineOptions::default())
                .map_err(|e| format!("{name}: {e}"))?;
            let spans = r.spans_by_axes == Some(true);
            ensure!(
                !(r.all_lines_solid && spans) || r.almost_jordan,
                "{name}: solid and spanned, not almost Jordan"
            );
            ensure!(
                !(r.almost_jordan && spans) || r.linearized_jordan,
                "{name}: almost Jordan, linearized fails"
            );
            ensure!(
                r.verdict != Verdict::Jordan || r.all_lines_solid,
                "{name}: Jordan with a non-solid line"
            );
            out.push(format!("{name}/{}={}", field.spec(), r.verdict));
        }
        Ok(())
    }
    let mut verdicts = Vec::new();
    run(
        Rationals,
        &["S3", "S4", "S5", "W(D4)", "3^3:S4"],
        &mut verdicts,
    )?;
    run(f(3), &["S3", "S4", "W(D4)"], &mut verdicts)?;
    run(f(5), &["S3", "S4", "S5", "W(D4)"], &mut verdicts)?;

    let q = Rationals;
    let cert = matsuo("S3", q)?;
    let r = full_pipeline(&cert, PipelineOptions::default()).map_err(|e| e.to_string())?;
    ensure!(r.verdict == Verdict::Jordan, "S3 over Q: {}", r.verdict);
    // 2-generated subalgebras of S3 through family members of its toric line
    let line = classify_line(&cert, &cert.axes[0], &cert.axes[1]).map_err(|e| e.to_string())?;
    let model = line_model(&cert, &line, RootChoice::First).map_err(|e| e.to_string())?;
    let AnyLineModel::Extended(m) = &model else {
        return Err("S3 toric line should need Q(w)".into());
    };
    let x = m.field();
    let members: Vec<_> = SAMPLE_PARAMETERS[1..9]
        .iter()
        .map(|&(a, b)| {
            m.member(
                Side::A,
                &Extends::<Rationals>::embed(x, &q.from_ratio(a, b).unwrap()),
            )
        })
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut sampled = 0;
    for (i, c) in members.iter().enumerate() {
        for d in &members[i + 1..] {
            ensure!(
                is_derivation(&m.algebra, &associator_map(&m.algebra, c, d)),
                "S3: non-solid sampled subalgebra"
            );
            sampled += 1;
        }
    }
    Ok(format!(
        "{}; S3 Jordan with {sampled} sampled subalgebras solid",
        verdicts.join(" ")
    ))
}

fn c10_dual_numbers() -> Outcome {
    fn run<F: Field>(field: F, seed: u64) -> Result<(usize, usize), String> {
        let cert = matsuo("S4", field.clone())?;
        let alg = &cert.algebra;
        let n = cert.dim();
        let assoc: Vec<_> = all_pairs(n)
            .into_iter()
            .map(|(i, j)| associator_map(alg, &cert.axes[i].element, &cert.axes[j].element))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut derivations = 0;
        for t in 0..100 {
            // even trials: random combinations of associators, odd trials: unstructured maps
            let d = if t % 2 == 0 {
                assoc.iter().fold(Matrix::zeros(&field, n, n), |acc, m| {
                    acc.add(&field, &m.scale(&field, &field.random(&mut rng)))
                })
            } else {
                Matrix::from_fn(n, n, |_, _| field.random(&mut rng))
            };
            let (a, b) = (is_derivation(alg, &d), dual_number_check(alg, &d));
            ensure!(
                a == b,
                "{}: Leibniz {a}, dual numbers {b} on trial {t}",
                field.spec()
            );
            derivations += a as usize;
        }
        for (k, d) in assoc.iter().enumerate() {
            let (a, b) = (is_derivation(alg, d), dual_number_check(alg, d));
            ensure!(
                a && b,
                "{}: associator {k} gives Leibniz {a}, dual numbers {b}",
                field.spec()
            );
        }
        Ok((derivations, assoc.len()))
    }
    let mut parts = Vec::new();
    for (label, (d, a)) in [
        ("Q", run(Rationals, 1)?),
        ("F3", run(f(3), 3)?),
        ("F5", run(f(5), 5)?),
        ("F7", run(f(7), 7)?),
    ] {
        ensure!(d > 0 && d < 100, "{label}: {d} derivations among 100 maps");
        parts.push(format!("{label}: {d}/100 derivations, {a} associators"));
    }
    Ok(parts.join("; "))
}

fn c11_solid3gen() -> Outcome {
    let cert = matsuo("3^3:S4", Rationals)?;
    let n = cert.axes.len();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut tested, mut attempts) = (0, 0);
    while tested < 50 {
        attempts += 1;
        ensure!(
            attempts <= 10_000,
            "only {tested} triples met the hypothesis"
        );
        let (a, b, c) = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        if a == b || a == c || b == c {
            continue;
        }
        match solid3gen_check(&cert, a, b, c) {
            None => {}
            Some(true) => tested += 1,
            Some(false) => return Err(format!("triple ({a},{b},{c}): <<a, c^tau_b>> not solid")),
        }
    }
    Ok(format!(
        "{tested} triples with both lines solid ({attempts} drawn); all images solid"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("matsuo axioms", c1_matsuo_axioms),
        ("solid away from gram 1/4", c2_solid_off_quarter),
        ("mixed solidity in 3^3:S4", c3_mixed_solidity),
        ("characteristic 3 counterexample", c4_characteristic_three),
        ("oracle equivalence", c5_oracle_equivalence),
        ("miyamoto closed forms", c6_miyamoto_closed_forms),
        ("orbit sizes", c7_orbit_sizes),
        ("frobenius form", c8_frobenius),
        ("jordan pipeline", c9_jordan_pipeline),
        ("dual-number oracle", c10_dual_numbers),
        ("three-generator solidity", c11_solid3gen),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
