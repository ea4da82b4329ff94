//! Almost-Jordan and Jordan identities, and the verdict pipeline: solid
//! generator lines plus spanning axes force a Jordan algebra.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{spanning_images, tau_matrix, Algebra, CertifiedAlgebra, EigenDecomposition};
use crate::error::{AlgebraError, JordanError};
use crate::linalg::{lincomb, vis_zero};
use crate::scalars::{Field, Ring};
use crate::solidity::{all_pairs, associator_map, is_derivation, leibniz_violation};

/// Largest number of elements `x` the Jordan identity check enumerates.
pub const EXHAUSTIVE_LIMIT: u64 = 100_000;

/// First `(i, j, k, l)` such that `D_{e_i,e_j}` breaks the Leibniz rule on `(e_k, e_l)`.
pub fn almost_jordan_witness<R: Ring>(alg: &Algebra<R>) -> Option<[usize; 4]> {
    let n = alg.dim();
    let pairs: Vec<(usize, usize)> = all_pairs(n);
    pairs.par_iter().find_map_first(|&(i, j)| {
        let d = associator_map(alg, &alg.basis_vector(i), &alg.basis_vector(j));
        leibniz_violation(alg, &d).map(|(k, l)| [i, j, k, l])
    })
}

/// `2((yx)x)x + y x^3 - 3(y x^2)x`
pub fn id4_defect<R: Ring>(alg: &Algebra<R>, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    let r = alg.ring();
    let x2 = alg.square(x);
    let x3 = alg.mul(&x2, x);
    let yxxx = alg.mul(&alg.mul(&alg.mul(y, x), x), x);
    let yx3 = alg.mul(y, &x3);
    let yx2x = alg.mul(&alg.mul(y, &x2), x);
    lincomb(
        r,
        alg.dim(),
        &[
            (r.from_i64(2), &yxxx),
            (r.one(), &yx3),
            (r.from_i64(-3), &yx2x),
        ],
    )
}

/// `(yz)(ax) + (xy)(az) + (xz)(ay) - ((yz)a)x - ((xy)a)z - ((xz)a)y`
pub fn linearized_jordan<R: Ring>(
    alg: &Algebra<R>,
    a: &[R::Elem],
    x: &[R::Elem],
    y: &[R::Elem],
    z: &[R::Elem],
) -> Vec<R::Elem> {
    let r = alg.ring();
    let m = |u: &[R::Elem], v: &[R::Elem]| alg.mul(u, v);
    let (yz, xy, xz) = (m(y, z), m(x, y), m(x, z));
    let terms = [
        m(&yz, &m(a, x)),
        m(&xy, &m(a, z)),
        m(&xz, &m(a, y)),
        m(&m(&yz, a), x),
        m(&m(&xy, a), z),
        m(&m(&xz, a), y),
    ];
    let (one, minus) = (r.one(), r.from_i64(-1));
    lincomb(
        r,
        alg.dim(),
        &[
            (one.clone(), &terms[0]),
            (one.clone(), &terms[1]),
            (one, &terms[2]),
            (minus.clone(), &terms[3]),
            (minus.clone(), &terms[4]),
            (minus, &terms[5]),
        ],
    )
}

/// First basis quadruple `(a, x, y, z)` with `x <= y <= z` where the
/// linearized Jordan identity fails; it is symmetric in `x, y, z`.
pub fn linearized_jordan_witness<R: Ring>(alg: &Algebra<R>) -> Option<[usize; 4]> {
    let n = alg.dim();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|x| (x..n).flat_map(move |y| (y..n).map(move |z| (x, y, z))))
        .collect();
    let basis: Vec<Vec<R::Elem>> = (0..n).map(|i| alg.basis_vector(i)).collect();
    triples.par_iter().find_map_first(|&(x, y, z)| {
        (0..n)
            .find(|&a| {
                !vis_zero(
                    alg.ring(),
                    &linearized_jordan(alg, &basis[a], &basis[x], &basis[y], &basis[z]),
                )
            })
            .map(|a| [a, x, y, z])
    })
}

/// `(x^2 y)x - x^2(yx)`
pub fn jordan_defect<R: Ring>(alg: &Algebra<R>, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    let r = alg.ring();
    let x2 = alg.square(x);
    let lhs = alg.mul(&alg.mul(&x2, y), x);
    let rhs = alg.mul(&x2, &alg.mul(y, x));
    lincomb(r, alg.dim(), &[(r.one(), &lhs), (r.from_i64(-1), &rhs)])
}

/// Outcome of checking `(x^2 y)x = x^2(yx)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JordanSample {
    pub holds: bool,
    pub checked: usize,
    /// Every `x` was tried (with `y` over a basis, which suffices by linearity in `y`).
    pub exhaustive: bool,
    pub witness: Option<(Vec<String>, Vec<String>)>,
}

/// Checks the Jordan identity exhaustively over small finite fields and on
/// `trials` seeded random pairs otherwise.
pub fn jordan_identity_sample<F: Field>(
    alg: &Algebra<F>,
    trials: usize,
    seed: u64,
) -> JordanSample {
    let f = alg.ring();
    let n = alg.dim();
    let fmt = |v: &[F::Elem]| v.iter().map(|c| f.fmt_elem(c)).collect::<Vec<_>>();
    let small = f
        .order()
        .and_then(|q| q.checked_pow(n as u32))
        .filter(|&t| t <= EXHAUSTIVE_LIMIT);
    if let (Some(total), Some(elems)) = (small, f.elements()) {
        let q = elems.len();
        let witness = (0..total as usize)
            .into_par_iter()
            .find_map_first(|mut idx| {
                let mut x = Vec::with_capacity(n);
                for _ in 0..n {
                    x.push(elems[idx % q].clone());
                    idx /= q;
                }
                (0..n)
                    .map(|j| alg.basis_vector(j))
                    .find(|y| !vis_zero(f, &jordan_defect(alg, &x, y)))
                    .map(|y| (fmt(&x), fmt(&y)))
            });
        return JordanSample {
            holds: witness.is_none(),
            checked: total as usize * n,
            exhaustive: true,
            witness,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Vec<F::Elem>, Vec<F::Elem>)> = (0..trials)
        .map(|_| {
            let x = (0..n).map(|_| f.random(&mut rng)).collect();
            let y = (0..n).map(|_| f.random(&mut rng)).collect();
            (x, y)
        })
        .collect();
    let witness = pairs.par_iter().find_map_first(|(x, y)| {
        (!vis_zero(f, &jordan_defect(alg, x, y))).then(|| (fmt(x), fmt(y)))
    });
    JordanSample {
        holds: witness.is_none(),
        checked: trials,
        exhaustive: false,
        witness,
    }
}

/// Number of seeded random pairs on which `id4` fails.
pub fn id4_failures<F: Field>(alg: &Algebra<F>, trials: usize, seed: u64) -> usize {
    let f = alg.ring();
    let n = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Vec<F::Elem>, Vec<F::Elem>)> = (0..trials)
        .map(|_| {
            (
                (0..n).map(|_| f.random(&mut rng)).collect(),
                (0..n).map(|_| f.random(&mut rng)).collect(),
            )
        })
        .collect();
    pairs
        .par_iter()
        .filter(|(x, y)| !vis_zero(f, &id4_defect(alg, x, y)))
        .count()
}

/// Whether Miyamoto images of the generating axes span the algebra.
pub fn spans_by_axes<F: Field>(
    cert: &CertifiedAlgebra<F>,
    cap: usize,
) -> Result<bool, AlgebraError> {
    let start: Vec<_> = cert.axes.iter().map(|a| a.element.clone()).collect();
    let taus: Vec<_> = cert
        .axes
        .iter()
        .map(|a| tau_matrix(&cert.algebra, a))
        .collect();
    let (_, rank) = spanning_images(cert.field(), cert.dim(), &start, &taus, cap)?;
    Ok(rank == cert.dim())
}

/// First generator pair whose line fails the derivation test.
pub fn first_non_solid_pair<F: Field>(cert: &CertifiedAlgebra<F>) -> Option<(usize, usize)> {
    let alg = &cert.algebra;
    all_pairs(cert.axes.len())
        .into_par_iter()
        .find_first(|&(i, j)| {
            !is_derivation(
                alg,
                &associator_map(alg, &cert.axes[i].element, &cert.axes[j].element),
            )
        })
}

/// For axes `a, b, c`: when `<<a, b>>` and `<<a, c>>` are solid, whether
/// `<<a, c^tau_b>>` is solid. `None` when the hypothesis fails.
pub fn solid3gen_check<F: Field>(
    cert: &CertifiedAlgebra<F>,
    a: usize,
    b: usize,
    c: usize,
) -> Option<bool> {
    let alg = &cert.algebra;
    let x = |i: usize| &cert.axes[i].element;
    let solid = |u: &[F::Elem], v: &[F::Elem]| is_derivation(alg, &associator_map(alg, u, v));
    if !solid(x(a), x(b)) || !solid(x(a), x(c)) {
        return None;
    }
    let image = tau_matrix(alg, &cert.axes[b]).mul_vec(cert.field(), x(c));
    Some(solid(x(a), &image))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Jordan,
    NotJordan,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Jordan => "Jordan",
            Verdict::NotJordan => "NotJordan",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub all_lines_solid: bool,
    pub non_solid_pair: Option<(usize, usize)>,
    /// `None` when the orbit cap was reached first.
    pub spans_by_axes: Option<bool>,
    pub almost_jordan: bool,
    pub almost_jordan_witness: Option<[usize; 4]>,
    pub id4_trials: usize,
    pub id4_failures: usize,
    pub linearized_jordan: bool,
    pub linearized_jordan_witness: Option<[usize; 4]>,
    pub jordan_sample: JordanSample,
    pub verdict: Verdict,
    /// External results the pipeline relies on without re-verifying them.
    pub assumptions: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub trials: usize,
    pub seed: u64,
    /// Cap for the Miyamoto orbit search in [`spans_by_axes`]; `0` means `10 * dim`.
    pub orbit_cap: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            trials: 500,
            seed: 0,
            orbit_cap: 0,
        }
    }
}

/// Runs every identity check and derives the verdict, asserting the
/// implications between them.
pub fn full_pipeline<F: Field>(
    cert: &CertifiedAlgebra<F>,
    opts: PipelineOptions,
) -> Result<IdentityReport, JordanError> {
    if !cert.eta_is_half() {
        return Err(JordanError::ImplicationViolated(
            "the pipeline needs eta = 1/2".into(),
        ));
    }
    let alg = &cert.algebra;
    let f = cert.field();
    let cap = if opts.orbit_cap == 0 {
        10 * cert.dim()
    } else {
        opts.orbit_cap
    };
    let non_solid_pair = first_non_solid_pair(cert);
    let all_lines_solid = non_solid_pair.is_none();
    let spans = match spans_by_axes(cert, cap) {
        Ok(s) => Some(s),
        Err(AlgebraError::OrbitCapExceeded(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let almost_jordan_witness = almost_jordan_witness(alg);
    let almost_jordan = almost_jordan_witness.is_none();
    let id4_trials = opts.trials.min(100);
    let id4_failures = id4_failures(alg, id4_trials, opts.seed);
    let linearized_jordan_witness = linearized_jordan_witness(alg);
    let linearized = linearized_jordan_witness.is_none();
    let jordan_sample = jordan_identity_sample(alg, opts.trials, opts.seed.wrapping_add(1));

    let violated = |what: &str| Err(JordanError::ImplicationViolated(what.into()));
    let spans_true = spans == Some(true);
    if all_lines_solid && spans_true && !almost_jordan {
        return violated("solid lines and spanning axes, yet not almost Jordan");
    }
    if almost_jordan && spans_true && !linearized {
        return violated(
            "almost Jordan and spanned by axes, yet the linearized Jordan identity fails",
        );
    }
    if !all_lines_solid && almost_jordan {
        return violated("a generator line is not solid, yet every associator is a derivation");
    }
    if almost_jordan && id4_failures > 0 {
        return violated("associators are derivations, yet id4 fails on a sample");
    }

    let verdict = if !linearized || !almost_jordan || !jordan_sample.holds {
        Verdict::NotJordan
    } else if f.characteristic() == 3 && !jordan_sample.exhaustive {
        Verdict::Inconclusive
    } else {
        Verdict::Jordan
    };
    if verdict == Verdict::Jordan && !all_lines_solid {
        return violated("Jordan verdict with a non-solid line");
    }
    let mut assumptions = vec![
        "an idempotent of an almost Jordan algebra has eigenvalues in {0, 1/2, 1}".to_string(),
        "an almost Jordan algebra satisfies (yz)x = (xy)z + (xz)y on eigenvectors for (1/2, 0, 0)"
            .to_string(),
    ];
    if f.characteristic() == 3 {
        assumptions.push(
            "in characteristic 3 the linearized identity alone does not give the Jordan identity"
                .into(),
        );
    }
    Ok(IdentityReport {
        all_lines_solid,
        non_solid_pair,
        spans_by_axes: spans,
        almost_jordan,
        almost_jordan_witness,
        id4_trials,
        id4_failures,
        linearized_jordan: linearized,
        linearized_jordan_witness,
        jordan_sample,
        verdict,
        assumptions,
    })
}

/// Eigenvalue pattern of an eigenvector for an axis: `One`, `Zero` or `Half`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Eig {
    One,
    Half,
    Zero,
}

/// The linearized identity evaluated with `a` an axis and `x, y, z`
/// eigenvectors of it, grouped by eigenvalue pattern (sorted, so the ten
/// patterns up to symmetry appear). Each entry counts checks and failures.
pub fn linearized_by_eigen_pattern<F: Field>(
    cert: &CertifiedAlgebra<F>,
) -> BTreeMap<[Eig; 3], (usize, usize)> {
    let alg = &cert.algebra;
    let f = cert.field();
    let mut out: BTreeMap<[Eig; 3], (usize, usize)> = BTreeMap::new();
    for axis in &cert.axes {
        let d: &EigenDecomposition<F::Elem> = &axis.decomposition;
        let vecs: Vec<(Eig, &Vec<F::Elem>)> = d
            .one
            .iter()
            .map(|v| (Eig::One, v))
            .chain(d.half.iter().map(|v| (Eig::Half, v)))
            .chain(d.zero.iter().map(|v| (Eig::Zero, v)))
            .collect();
        let m = vecs.len();
        for i in 0..m {
            for j in i..m {
                for k in j..m {
                    let mut key = [vecs[i].0, vecs[j].0, vecs[k].0];
                    key.sort();
                    let bad = !vis_zero(
                        f,
                        &linearized_jordan(alg, &axis.element, vecs[i].1, vecs[j].1, vecs[k].1),
                    );
                    let e = out.entry(key).or_default();
                    e.0 += 1;
                    e.1 += bad as usize;
                }
            }
        }
    }
    out
}
