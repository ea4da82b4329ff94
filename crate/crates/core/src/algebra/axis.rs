use std::fmt;

use super::Algebra;
use crate::linalg::{inverse, kernel, Matrix};
use crate::scalars::{Field, Ring};

/// The Jordan fusion law `J(eta)` on eigenvalues `{1, 0, eta}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionLaw<E> {
    pub eta: E,
}

impl<E: Clone> FusionLaw<E> {
    pub fn new(eta: E) -> Self {
        Self { eta }
    }

    pub fn eigenvalues<R: Ring<Elem = E>>(&self, ring: &R) -> [E; 3] {
        [ring.one(), ring.zero(), self.eta.clone()]
    }

    /// Allowed eigenvalue indices (into `eigenvalues`) for a product of
    /// eigenvectors with indices `l` and `m`.
    pub fn allowed(l: usize, m: usize) -> &'static [usize] {
        match (l.min(m), l.max(m)) {
            (0, 0) => &[0],
            (0, 1) => &[],
            (0, 2) => &[2],
            (1, 1) => &[1],
            (1, 2) => &[2],
            (2, 2) => &[0, 1],
            _ => unreachable!("three eigenvalues"),
        }
    }
}

/// Bases of the 1-, 0- and eta-eigenspaces of an axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenDecomposition<E> {
    pub one: Vec<Vec<E>>,
    pub zero: Vec<Vec<E>>,
    pub half: Vec<Vec<E>>,
}

impl<E> EigenDecomposition<E> {
    pub fn spaces(&self) -> [&Vec<Vec<E>>; 3] {
        [&self.one, &self.zero, &self.half]
    }

    pub fn dims(&self) -> [usize; 3] {
        [self.one.len(), self.zero.len(), self.half.len()]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisRecord<E> {
    pub element: Vec<E>,
    pub decomposition: EigenDecomposition<E>,
    pub eta: E,
    pub fusion_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxisFailure {
    NotIdempotent,
    NotSemisimple {
        dims: [usize; 3],
        dim: usize,
    },
    NotPrimitive {
        dim_one: usize,
    },
    /// Product of the `i`-th `lambda`-eigenvector and the `j`-th `mu`-eigenvector
    /// has a component in the `nu`-eigenspace.
    FusionViolation {
        lambda: String,
        mu: String,
        nu: String,
        witness: (usize, usize),
    },
}

impl fmt::Display for AxisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisFailure::NotIdempotent => write!(f, "NotIdempotent"),
            AxisFailure::NotSemisimple { dims, dim } => write!(
                f,
                "NotSemisimple: eigenspace dimensions {}+{}+{} < {dim}",
                dims[0], dims[1], dims[2]
            ),
            AxisFailure::NotPrimitive { dim_one } => {
                write!(f, "NotPrimitive: 1-eigenspace has dimension {dim_one}")
            }
            AxisFailure::FusionViolation { lambda, mu, nu, witness } => write!(
                f,
                "FusionViolation({lambda}, {mu}): product of eigenvectors {} and {} has a {nu}-component",
                witness.0, witness.1
            ),
        }
    }
}

/// Basis of `ker(ad(a) - lambda I)`.
pub fn eigenspace<F: Field>(
    alg: &Algebra<F>,
    a: &[F::Elem],
    lambda: &F::Elem,
) -> Vec<Vec<F::Elem>> {
    let f = alg.ring();
    let ad = alg.ad(a);
    let shifted = ad.sub(f, &Matrix::identity(f, alg.dim()).scale(f, lambda));
    kernel(f, &shifted)
}

/// Certifies `a` as a primitive axis of Jordan type `eta`.
///
/// Checks run in order: idempotence, semisimplicity on `{1, 0, eta}`,
/// primitivity, then every fusion product between eigenbasis vectors.
pub fn certify_axis<F: Field>(
    alg: &Algebra<F>,
    a: &[F::Elem],
    eta: &F::Elem,
) -> Result<AxisRecord<F::Elem>, AxisFailure> {
    let f = alg.ring();
    let n = alg.dim();
    if !alg.is_idempotent(a) {
        return Err(AxisFailure::NotIdempotent);
    }
    let law = FusionLaw::new(eta.clone());
    let evs = law.eigenvalues(f);
    let dec = EigenDecomposition {
        one: eigenspace(alg, a, &evs[0]),
        zero: eigenspace(alg, a, &evs[1]),
        half: eigenspace(alg, a, &evs[2]),
    };
    let dims = dec.dims();
    if dims.iter().sum::<usize>() != n {
        return Err(AxisFailure::NotSemisimple { dims, dim: n });
    }
    if dims[0] != 1 {
        return Err(AxisFailure::NotPrimitive { dim_one: dims[0] });
    }
    // coordinates in the concatenated eigenbasis
    let mut cols = Vec::with_capacity(n);
    let mut owner = Vec::with_capacity(n);
    for (s, space) in dec.spaces().iter().enumerate() {
        for v in space.iter() {
            cols.push(v.clone());
            owner.push(s);
        }
    }
    let to_eigen = inverse(f, &Matrix::from_columns(n, &cols)).expect("eigenbasis is a basis");
    let spaces = dec.spaces();
    for l in 0..3 {
        for m in l..3 {
            let allowed = FusionLaw::<F::Elem>::allowed(l, m);
            for (i, x) in spaces[l].iter().enumerate() {
                let start = if l == m { i } else { 0 };
                for (j, y) in spaces[m].iter().enumerate().skip(start) {
                    let c = to_eigen.mul_vec(f, &alg.mul(x, y));
                    if let Some(k) =
                        (0..n).find(|&k| !f.is_zero(&c[k]) && !allowed.contains(&owner[k]))
                    {
                        return Err(AxisFailure::FusionViolation {
                            lambda: f.fmt_elem(&evs[l]),
                            mu: f.fmt_elem(&evs[m]),
                            nu: f.fmt_elem(&evs[owner[k]]),
                            witness: (i, j),
                        });
                    }
                }
            }
        }
    }
    Ok(AxisRecord {
        element: a.to_vec(),
        decomposition: dec,
        eta: eta.clone(),
        fusion_ok: true,
    })
}

/// Eigenprojections of an axis, as polynomials in `ad(a)`.
#[derive(Debug, Clone)]
pub struct Projections<E> {
    pub one: Matrix<E>,
    pub zero: Matrix<E>,
    pub half: Matrix<E>,
}

impl<E: Clone + PartialEq> Projections<E> {
    /// Valid whenever `ad(a)` is semisimple with eigenvalues in `{1, 0, eta}`.
    pub fn new<F: Field<Elem = E>>(alg: &Algebra<F>, a: &[E], eta: &E) -> Self {
        let f = alg.ring();
        let n = alg.dim();
        let ad = alg.ad(a);
        let id = Matrix::identity(f, n);
        let ad_minus_eta = ad.sub(f, &id.scale(f, eta));
        let ad_minus_one = ad.sub(f, &id);
        let one_minus_eta = f.sub(&f.one(), eta);
        let one = ad
            .mul(f, &ad_minus_eta)
            .scale(f, &f.inv(&one_minus_eta).expect("eta != 1"));
        let half = ad.mul(f, &ad_minus_one).scale(
            f,
            &f.inv(&f.mul(eta, &f.neg(&one_minus_eta)))
                .expect("eta != 0, 1"),
        );
        let zero = ad_minus_one
            .mul(f, &ad_minus_eta)
            .scale(f, &f.inv(eta).expect("eta != 0"));
        Self { one, zero, half }
    }

    /// `x -> x_1 + x_0 - x_eta`.
    pub fn tau<F: Field<Elem = E>>(&self, f: &F) -> Matrix<E> {
        self.one.add(f, &self.zero).sub(f, &self.half)
    }
}
