use std::collections::HashSet;

use super::{Algebra, AxisRecord, FrobeniusForm, Projections};
use crate::error::AlgebraError;
use crate::linalg::{lincomb, Echelon, Matrix};
use crate::scalars::{Field, Ring};

/// The Miyamoto involution of an axis: identity on `A_1 + A_0`, minus one on `A_eta`.
pub fn tau_matrix<F: Field>(alg: &Algebra<F>, axis: &AxisRecord<F::Elem>) -> Matrix<F::Elem> {
    Projections::new(alg, &axis.element, &axis.eta).tau(alg.ring())
}

/// `start` followed by images of it under the group generated by `gens`,
/// explored breadth first and kept only when they raise the rank; stops once
/// the images span. Returns the points and their rank. Fails after visiting
/// more than `cap` distinct vectors without spanning.
pub fn spanning_images<F: Field>(
    field: &F,
    n: usize,
    start: &[Vec<F::Elem>],
    gens: &[Matrix<F::Elem>],
    cap: usize,
) -> Result<(Vec<Vec<F::Elem>>, usize), AlgebraError> {
    let mut points = start.to_vec();
    let mut ech = Echelon::new(n);
    for p in start {
        ech.insert(field, p);
    }
    let mut seen: HashSet<Vec<F::Elem>> = start.iter().cloned().collect();
    let mut queue = start.to_vec();
    let mut i = 0;
    while i < queue.len() && !ech.is_full() {
        for g in gens {
            let w = g.mul_vec(field, &queue[i]);
            if seen.insert(w.clone()) {
                if seen.len() > cap {
                    return Err(AlgebraError::OrbitCapExceeded(cap));
                }
                if ech.insert(field, &w) {
                    points.push(w.clone());
                }
                queue.push(w);
            }
        }
        i += 1;
    }
    Ok((points, ech.rank()))
}

/// Closure of `start` under the linear maps `gens`, breadth first and in
/// discovery order. Returns `Err(cap)` once more than `cap` vectors appear.
pub fn orbit_closure<R: Ring>(
    ring: &R,
    start: &[Vec<R::Elem>],
    gens: &[Matrix<R::Elem>],
    cap: usize,
) -> Result<Vec<Vec<R::Elem>>, usize> {
    let mut seen: HashSet<Vec<R::Elem>> = HashSet::new();
    let mut out = Vec::new();
    for v in start {
        if seen.insert(v.clone()) {
            out.push(v.clone());
        }
    }
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let w = g.mul_vec(ring, &out[i]);
            if seen.insert(w.clone()) {
                out.push(w);
                if out.len() > cap {
                    return Err(cap);
                }
            }
        }
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCompFailure {
    /// Basis index `x` where an identity fails.
    pub index: usize,
    pub identity: &'static str,
}

/// Checks, for every basis vector `x`, the three identities tying an axis of
/// Jordan type 1/2 to its Frobenius pairing:
/// `ax = 1/4 (x - x^tau) + (a,x) a`, `x^tau = x + 4(a,x) a - 4 ax` and
/// `a(ax) = 1/2 (ax + (a,x) a)`.
pub fn check_basiccomp<F: Field>(
    alg: &Algebra<F>,
    axis: &AxisRecord<F::Elem>,
    form: &FrobeniusForm<F::Elem>,
) -> Result<(), BasicCompFailure> {
    let f = alg.ring();
    let n = alg.dim();
    if axis.eta != f.half() {
        return Err(BasicCompFailure {
            index: 0,
            identity: "eta = 1/2",
        });
    }
    let a = &axis.element;
    let tau = tau_matrix(alg, axis);
    let quarter = f.from_ratio(1, 4).expect("char != 2");
    let four = f.from_i64(4);
    let half = f.half();
    for i in 0..n {
        let x = alg.basis_vector(i);
        let ax = alg.mul(a, &x);
        let ax_pair = form.pair(f, a, &x);
        let xt = tau.mul_vec(f, &x);
        let diff: Vec<F::Elem> = x.iter().zip(&xt).map(|(p, q)| f.sub(p, q)).collect();
        let lhs = lincomb(f, n, &[(quarter.clone(), &diff), (ax_pair.clone(), a)]);
        if lhs != ax {
            return Err(BasicCompFailure {
                index: i,
                identity: "ax = 1/4(x - x^tau) + (a,x)a",
            });
        }
        let t = lincomb(
            f,
            n,
            &[
                (f.one(), &x),
                (f.mul(&four, &ax_pair), a),
                (f.neg(&four), &ax),
            ],
        );
        if t != xt {
            return Err(BasicCompFailure {
                index: i,
                identity: "x^tau = x + 4(a,x)a - 4ax",
            });
        }
        let aax = alg.mul(a, &ax);
        let rhs = lincomb(f, n, &[(half.clone(), &ax), (f.mul(&half, &ax_pair), a)]);
        if aax != rhs {
            return Err(BasicCompFailure {
                index: i,
                identity: "a(ax) = 1/2(ax + (a,x)a)",
            });
        }
    }
    Ok(())
}
