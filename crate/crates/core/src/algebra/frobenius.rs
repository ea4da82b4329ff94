use super::{spanning_images, tau_matrix, Algebra, AxisRecord, Projections};
use crate::error::AlgebraError;
use crate::linalg::{independent_subset, inverse, Matrix};
use crate::scalars::{Extends, Field, Ring};

/// A symmetric associating bilinear form, as a Gram matrix on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusForm<E> {
    pub gram: Matrix<E>,
}

impl<E: Clone> FrobeniusForm<E> {
    pub fn pair<R: Ring<Elem = E>>(&self, ring: &R, x: &[E], y: &[E]) -> E {
        let gy = self.gram.mul_vec(ring, y);
        let mut acc = ring.zero();
        for (a, b) in x.iter().zip(&gy) {
            if !ring.is_zero(a) {
                ring.mul_add_assign(&mut acc, a, b);
            }
        }
        acc
    }

    /// The same Gram matrix over a larger ring.
    pub fn lift<R: Ring<Elem = E>, X: Extends<R>>(
        &self,
        _base: &R,
        ext: &X,
    ) -> FrobeniusForm<X::Elem> {
        FrobeniusForm {
            gram: self.gram.map(|c| ext.embed(c)),
        }
    }
}

/// `(a, e_j)` for every `j`: the coefficient of `a` in the 1-eigenprojection of `e_j`.
fn pairing_row<F: Field>(
    alg: &Algebra<F>,
    a: &[F::Elem],
    eta: &F::Elem,
) -> Result<Vec<F::Elem>, AlgebraError> {
    let f = alg.ring();
    let p1 = Projections::new(alg, a, eta).one;
    let k = a
        .iter()
        .position(|x| !f.is_zero(x))
        .ok_or_else(|| AlgebraError::InconsistentForm("zero axis".into()))?;
    let ak_inv = f.inv(&a[k])?;
    let mut row = Vec::with_capacity(alg.dim());
    for j in 0..alg.dim() {
        let col = p1.column(j);
        let c = f.mul(&col[k], &ak_inv);
        if col.iter().zip(a).any(|(x, y)| *x != f.mul(&c, y)) {
            return Err(AlgebraError::InconsistentForm(format!(
                "1-eigenprojection of e{j} is not a multiple of the axis"
            )));
        }
        row.push(c);
    }
    Ok(row)
}

/// Builds the Frobenius form from axis projections, closing the axes under
/// their Miyamoto involutions until they span (visiting at most `10 * dim` axes), then
/// verifies symmetry, associativity on all basis triples and `(a,a) = 1`.
pub fn frobenius_form<F: Field>(
    alg: &Algebra<F>,
    axes: &[AxisRecord<F::Elem>],
) -> Result<FrobeniusForm<F::Elem>, AlgebraError> {
    let f = alg.ring();
    let n = alg.dim();
    let eta = axes
        .first()
        .map(|a| a.eta.clone())
        .unwrap_or_else(|| f.half());
    let start: Vec<Vec<F::Elem>> = axes.iter().map(|a| a.element.clone()).collect();
    let taus: Vec<_> = axes.iter().map(|a| tau_matrix(alg, a)).collect();
    let (points, rank) = spanning_images(f, n, &start, &taus, 10 * n)?;
    if rank < n {
        return Err(AlgebraError::SpanFailure { rank, dim: n });
    }
    let rows: Vec<Vec<F::Elem>> = points
        .iter()
        .map(|p| pairing_row(alg, p, &eta))
        .collect::<Result<_, _>>()?;
    let pick = independent_subset(f, n, &points);
    let m = Matrix::from_rows(n, pick.iter().map(|&i| points[i].clone()).collect());
    let rhs = Matrix::from_rows(n, pick.iter().map(|&i| rows[i].clone()).collect());
    let gram = inverse(f, &m).expect("independent rows").mul(f, &rhs);
    let form = FrobeniusForm { gram };
    verify(alg, &form, &points, &rows, axes)?;
    Ok(form)
}

fn verify<F: Field>(
    alg: &Algebra<F>,
    form: &FrobeniusForm<F::Elem>,
    points: &[Vec<F::Elem>],
    rows: &[Vec<F::Elem>],
    axes: &[AxisRecord<F::Elem>],
) -> Result<(), AlgebraError> {
    let f = alg.ring();
    let n = alg.dim();
    let g = &form.gram;
    let gt = g.transpose();
    for (p, row) in points.iter().zip(rows) {
        let got = gt.mul_vec(f, p);
        if got != *row {
            return Err(AlgebraError::InconsistentForm(
                "axis pairings are not bilinear".into(),
            ));
        }
    }
    for i in 0..n {
        for j in 0..i {
            if g.get(i, j) != g.get(j, i) {
                return Err(AlgebraError::InconsistentForm(format!(
                    "not symmetric at ({i}, {j})"
                )));
            }
        }
    }
    // (e_i e_j, e_k) = (e_i, e_j e_k)
    let products: Vec<Vec<Vec<F::Elem>>> = alg.dense_table();
    for i in 0..n {
        for j in 0..n {
            let left = gt.mul_vec(f, &products[i][j]);
            for k in 0..n {
                let mut right = f.zero();
                for (gil, w) in g.row(i).iter().zip(&products[j][k]) {
                    if !f.is_zero(w) {
                        f.mul_add_assign(&mut right, gil, w);
                    }
                }
                if left[k] != right {
                    return Err(AlgebraError::InconsistentForm(format!(
                        "not associative at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    for (idx, a) in axes.iter().enumerate() {
        if !f.is_one(&form.pair(f, &a.element, &a.element)) {
            return Err(AlgebraError::InconsistentForm(format!(
                "axis {idx} has (a,a) != 1"
            )));
        }
    }
    Ok(())
}
