use std::collections::BTreeMap;
use std::path::PathBuf;

use axial_core::algebra::{
    certify_axis, check_basiccomp, frobenius_form, orbit_closure, tau_matrix,
};
use axial_core::jordan::{full_pipeline, IdentityReport, PipelineOptions, Verdict};
use axial_core::lines::{classify_line, line_model, LineKind, OrbitSize, RootChoice};
use axial_core::solidity::{all_pairs, analyze_pairs, Methods, SolidityVerdict};
use axial_core::{with_model, AxialAlgebra, CertifiedAlgebra, Field, LineError};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::report::{
    emit, Failure, RunManifest, EXIT_INCONCLUSIVE, EXIT_NOT_JORDAN, EXIT_VERIFICATION,
};

/// Options shared by the analysis commands.
pub struct Run<'a> {
    pub manifest: RunManifest,
    pub out: Option<&'a PathBuf>,
}

/// Parses `a`, `-a`, `a/b` or anything the field's JSON reader accepts.
pub fn parse_scalar<F: Field>(field: &F, s: &str) -> Result<F::Elem, Failure> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("cannot parse scalar {s:?}")))?;
        let d: i64 = d
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("cannot parse scalar {s:?}")))?;
        return field
            .from_ratio(n, d)
            .ok_or_else(|| Failure::input(format!("{s} is not defined in {}", field.spec())));
    }
    field
        .from_json(&Value::String(s.to_string()))
        .map_err(Failure::input)
}

/// `all`, or pairs `i,j` separated by spaces or semicolons.
pub fn parse_pairs(spec: &str, n: usize) -> Result<Vec<(usize, usize)>, Failure> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(all_pairs(n));
    }
    let mut out = Vec::new();
    for item in spec.split([';', ' ']).filter(|s| !s.is_empty()) {
        let bad = || {
            Failure::input(format!(
                "bad pair {item:?}: expected i,j with distinct indices below {n}"
            ))
        };
        let (i, j) = item.split_once(',').ok_or_else(bad)?;
        let (i, j): (usize, usize) = (
            i.trim().parse().map_err(|_| bad())?,
            j.trim().parse().map_err(|_| bad())?,
        );
        if i == j || i >= n || j >= n {
            return Err(bad());
        }
        out.push((i.min(j), i.max(j)));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A seeded sample of `k` pairs, returned sorted.
pub fn sample_pairs(pairs: Vec<(usize, usize)>, k: usize, seed: u64) -> Vec<(usize, usize)> {
    if k >= pairs.len() {
        return pairs;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<_> = pairs.choose_multiple(&mut rng, k).copied().collect();
    picked.sort_unstable();
    picked
}

pub fn prepare<F: Field>(alg: &AxialAlgebra<F>) -> Result<CertifiedAlgebra<F>, Failure> {
    alg.prepare().map_err(Failure::verification)
}

fn orbit_json(o: Result<OrbitSize, LineError>) -> Value {
    match o {
        Ok(OrbitSize::Finite(k)) => Value::from(k),
        Ok(other) => Value::from(other.to_string()),
        Err(_) => Value::Null,
    }
}

#[derive(Serialize)]
struct AxisRow {
    index: usize,
    /// Dimensions of the 1-, 0- and 1/2-eigenspaces.
    dims: Option<[usize; 3]>,
    fusion_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    basiccomp: Option<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    dim: usize,
    axes: Vec<AxisRow>,
    frobenius: String,
    gram_values: Vec<String>,
    passed: bool,
}

pub fn verify<F: Field>(alg: &AxialAlgebra<F>, run: &Run) -> Result<u8, Failure> {
    let f = alg.field();
    let mut axes = Vec::new();
    let mut records = Vec::new();
    for (index, a) in alg.axes.iter().enumerate() {
        match certify_axis(&alg.algebra, a, &alg.eta) {
            Ok(rec) => {
                axes.push(AxisRow {
                    index,
                    dims: Some(rec.decomposition.dims()),
                    fusion_ok: rec.fusion_ok,
                    failure: None,
                    basiccomp: None,
                });
                records.push(rec);
            }
            Err(e) => axes.push(AxisRow {
                index,
                dims: None,
                fusion_ok: false,
                failure: Some(e.to_string()),
                basiccomp: None,
            }),
        }
    }
    let mut passed = records.len() == alg.axes.len();
    let mut gram_values = Vec::new();
    let frobenius = if !passed {
        "skipped: an axis failed certification".to_string()
    } else {
        match frobenius_form(&alg.algebra, &records) {
            Ok(form) => {
                let n = alg.algebra.dim();
                let mut seen: Vec<String> = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let v = f.fmt_elem(form.gram.get(i, j));
                        if !seen.contains(&v) {
                            seen.push(v);
                        }
                    }
                }
                seen.sort();
                gram_values = seen;
                if f.is_zero(&f.sub(&alg.eta, &f.half())) {
                    for (row, rec) in axes.iter_mut().zip(&records) {
                        if let Err(e) = check_basiccomp(&alg.algebra, rec, &form) {
                            row.basiccomp = Some(format!("fails at e{}: {}", e.index, e.identity));
                            passed = false;
                        } else {
                            row.basiccomp = Some("ok".into());
                        }
                    }
                }
                "ok".to_string()
            }
            Err(e) => {
                passed = false;
                e.to_string()
            }
        }
    };
    let report = VerifyReport {
        dim: alg.algebra.dim(),
        axes,
        frobenius,
        gram_values,
        passed,
    };
    emit(&run.manifest, &report, run.out)?;
    Ok(if passed { 0 } else { EXIT_VERIFICATION })
}

#[derive(Serialize)]
struct LineRow {
    i: usize,
    j: usize,
    kind: String,
    class: &'static str,
    dim: usize,
    gram_ab: String,
    mu: Option<String>,
    extended: bool,
    orbit_size: Value,
}

#[derive(Serialize)]
struct LinesReport {
    axes: usize,
    counts: BTreeMap<String, usize>,
    rows: Vec<LineRow>,
}

fn line_row<F: Field>(
    cert: &CertifiedAlgebra<F>,
    i: usize,
    j: usize,
    bound: usize,
) -> Result<LineRow, LineError> {
    let f = cert.field();
    let line = classify_line(cert, &cert.axes[i], &cert.axes[j])?;
    let (mu, extended, orbit) = if line.kind == LineKind::Baric1 {
        (None, false, Value::Null)
    } else {
        match line_model(cert, &line, RootChoice::First) {
            Ok(m) => {
                let orbit = with_model!(&m, x => x.orbit_size(bound));
                if let Err(e @ LineError::Inconsistent(_)) = &orbit {
                    return Err(e.clone());
                }
                (m.mu_string(), m.is_extended(), orbit_json(orbit))
            }
            Err(LineError::ExtensionInsufficient) => (None, false, Value::Null),
            Err(e) => return Err(e),
        }
    };
    Ok(LineRow {
        i,
        j,
        kind: line.kind.to_string(),
        class: line.kind.class_name(),
        dim: line.dim(),
        gram_ab: f.fmt_elem(&line.gram_ab),
        mu,
        extended,
        orbit_size: orbit,
    })
}

pub fn lines<F: Field>(
    cert: &CertifiedAlgebra<F>,
    pairs: &[(usize, usize)],
    bound: usize,
    run: &Run,
) -> Result<u8, Failure> {
    let rows = pairs
        .par_iter()
        .map(|&(i, j)| {
            line_row(cert, i, j, bound)
                .map_err(|e| Failure::verification(format!("pair ({i},{j}): {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut counts = BTreeMap::new();
    for r in &rows {
        *counts.entry(r.kind.clone()).or_insert(0) += 1;
    }
    emit(
        &run.manifest,
        &LinesReport {
            axes: cert.axes.len(),
            counts,
            rows,
        },
        run.out,
    )?;
    Ok(0)
}

#[derive(Serialize)]
struct SolidityRow {
    i: usize,
    j: usize,
    kind: String,
    dim: usize,
    gram_ab: String,
    mu: Option<String>,
    verdict: SolidityVerdict,
}

#[derive(Serialize)]
struct SolidityReport {
    pairs: usize,
    solid: usize,
    non_solid: usize,
    rows: Vec<SolidityRow>,
    errors: Vec<String>,
}

pub fn solidity<F: Field>(
    cert: &CertifiedAlgebra<F>,
    pairs: &[(usize, usize)],
    methods: Methods,
    run: &Run,
) -> Result<u8, Failure> {
    let f = cert.field();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for r in analyze_pairs(cert, pairs, methods) {
        match r {
            Ok(p) => rows.push(SolidityRow {
                i: p.i,
                j: p.j,
                kind: p.line.kind.to_string(),
                dim: p.line.dim(),
                gram_ab: f.fmt_elem(&p.line.gram_ab),
                mu: p.mu,
                verdict: p.verdict,
            }),
            Err(e) => errors.push(e.to_string()),
        }
    }
    let solid = rows.iter().filter(|r| r.verdict.solid).count();
    let report = SolidityReport {
        pairs: pairs.len(),
        solid,
        non_solid: rows.len() - solid,
        rows,
        errors,
    };
    emit(&run.manifest, &report, run.out)?;
    Ok(if report.errors.is_empty() {
        0
    } else {
        EXIT_VERIFICATION
    })
}

#[derive(Serialize)]
struct JordanReport {
    summary: String,
    #[serde(flatten)]
    identities: IdentityReport,
}

pub fn jordan<F: Field>(
    cert: &CertifiedAlgebra<F>,
    opts: PipelineOptions,
    run: &Run,
) -> Result<u8, Failure> {
    let r = full_pipeline(cert, opts).map_err(Failure::verification)?;
    let code = match r.verdict {
        Verdict::Jordan => 0,
        Verdict::NotJordan => EXIT_NOT_JORDAN,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let summary = match r.verdict {
        Verdict::Jordan => "Jordan",
        Verdict::NotJordan if !r.almost_jordan => "not Jordan (not almost-Jordan)",
        Verdict::NotJordan => "not Jordan",
        Verdict::Inconclusive => "inconclusive",
    };
    emit(
        &run.manifest,
        &JordanReport {
            summary: summary.into(),
            identities: r,
        },
        run.out,
    )?;
    Ok(code)
}

#[derive(Serialize)]
struct OrbitLine {
    i: usize,
    j: usize,
    kind: String,
    orbit_size: Value,
}

#[derive(Serialize)]
struct OrbitReport {
    /// Size of the closure of the generating axes under their Miyamoto maps; `null` past the cap.
    axes_orbit: Option<usize>,
    cap: usize,
    lines: Vec<OrbitLine>,
}

pub fn orbit<F: Field>(
    cert: &CertifiedAlgebra<F>,
    pairs: &[(usize, usize)],
    cap: usize,
    bound: usize,
    run: &Run,
) -> Result<u8, Failure> {
    let start: Vec<_> = cert.axes.iter().map(|a| a.element.clone()).collect();
    let taus: Vec<_> = cert
        .axes
        .iter()
        .map(|a| tau_matrix(&cert.algebra, a))
        .collect();
    let axes_orbit = orbit_closure(cert.field(), &start, &taus, cap)
        .ok()
        .map(|o| o.len());
    let lines = pairs
        .par_iter()
        .map(|&(i, j)| {
            let row = line_row(cert, i, j, bound)
                .map_err(|e| Failure::verification(format!("pair ({i},{j}): {e}")))?;
            Ok(OrbitLine {
                i,
                j,
                kind: row.kind,
                orbit_size: row.orbit_size,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    emit(
        &run.manifest,
        &OrbitReport {
            axes_orbit,
            cap,
            lines,
        },
        run.out,
    )?;
    Ok(0)
}
