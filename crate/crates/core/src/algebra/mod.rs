//! Commutative algebras given by structure constants.

mod axis;
mod frobenius;
mod io;
mod miyamoto;

pub use axis::{
    certify_axis, eigenspace, AxisFailure, AxisRecord, EigenDecomposition, FusionLaw, Projections,
};
pub use frobenius::{frobenius_form, FrobeniusForm};
pub use io::{AlgebraFile, AnyAlgebra};
pub use miyamoto::{check_basiccomp, orbit_closure, spanning_images, tau_matrix, BasicCompFailure};

use crate::error::AlgebraError;
use crate::linalg::{unit_vector, Coordinates, Echelon, Matrix};
use crate::scalars::{Extends, Field, Ring};

/// A finite-dimensional commutative algebra over a ring context `R`.
///
/// `table[i * dim + j]` holds the nonzero coordinates of `e_i * e_j`.
#[derive(Debug, Clone)]
pub struct Algebra<R: Ring> {
    ring: R,
    dim: usize,
    table: Vec<Vec<(usize, R::Elem)>>,
    labels: Vec<String>,
}

impl<R: Ring> Algebra<R> {
    /// Builds an algebra from dense products `table[i][j] = e_i * e_j`.
    pub fn new(ring: R, table: Vec<Vec<Vec<R::Elem>>>) -> Result<Self, AlgebraError> {
        let dim = table.len();
        if dim == 0 {
            return Err(AlgebraError::Empty);
        }
        for row in &table {
            if row.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            for v in row {
                if v.len() != dim {
                    return Err(AlgebraError::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if table[i][j] != table[j][i] {
                    return Err(AlgebraError::NotCommutative(i, j));
                }
            }
        }
        let mut sparse = Vec::with_capacity(dim * dim);
        for row in table {
            for v in row {
                sparse.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, x)| !ring.is_zero(x))
                        .collect(),
                );
            }
        }
        let labels = (0..dim).map(|i| format!("e{i}")).collect();
        Ok(Self {
            ring,
            dim,
            table: sparse,
            labels,
        })
    }

    pub fn from_fn(
        ring: R,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<R::Elem>,
    ) -> Result<Self, AlgebraError> {
        let table = (0..dim)
            .map(|i| (0..dim).map(|j| f(i, j)).collect())
            .collect();
        Self::new(ring, table)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis_vector(&self, i: usize) -> Vec<R::Elem> {
        unit_vector(&self.ring, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vec<R::Elem> {
        vec![self.ring.zero(); self.dim]
    }

    /// `e_i * e_j` as a dense vector.
    pub fn product(&self, i: usize, j: usize) -> Vec<R::Elem> {
        let mut out = self.zero_vector();
        for (k, c) in &self.table[i * self.dim + j] {
            out[*k] = c.clone();
        }
        out
    }

    pub fn mul(&self, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let r = &self.ring;
        let mut out = self.zero_vector();
        let ys: Vec<usize> = (0..self.dim).filter(|&j| !r.is_zero(&y[j])).collect();
        for (i, xi) in x.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            for &j in &ys {
                let entry = &self.table[i * self.dim + j];
                if entry.is_empty() {
                    continue;
                }
                let c = r.mul(xi, &y[j]);
                for (k, t) in entry {
                    r.mul_add_assign(&mut out[*k], &c, t);
                }
            }
        }
        out
    }

    pub fn square(&self, x: &[R::Elem]) -> Vec<R::Elem> {
        self.mul(x, x)
    }

    /// Matrix of `y -> x * y`; column `j` holds `x * e_j`.
    pub fn ad(&self, x: &[R::Elem]) -> Matrix<R::Elem> {
        let r = &self.ring;
        let mut m = Matrix::zeros(r, self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if r.is_zero(xi) {
                continue;
            }
            for j in 0..self.dim {
                for (k, t) in &self.table[i * self.dim + j] {
                    let v = r.add(m.get(*k, j), &r.mul(xi, t));
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// The same structure constants over a larger ring.
    pub fn lift<X: Extends<R>>(&self, ext: &X) -> Algebra<X> {
        Algebra {
            ring: ext.clone(),
            dim: self.dim,
            table: self
                .table
                .iter()
                .map(|e| e.iter().map(|(k, c)| (*k, ext.embed(c))).collect())
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn lift_vector<X: Extends<R>>(ext: &X, v: &[R::Elem]) -> Vec<X::Elem> {
        v.iter().map(|c| ext.embed(c)).collect()
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim + other.dim;
        let mut table = vec![Vec::new(); n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                table[i * n + j] = self.table[i * self.dim + j].clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                table[(self.dim + i) * n + self.dim + j] = other.table[i * other.dim + j]
                    .iter()
                    .map(|(k, c)| (self.dim + k, c.clone()))
                    .collect();
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Self {
            ring: self.ring.clone(),
            dim: n,
            table,
            labels,
        }
    }

    /// Dense copy of the multiplication table.
    pub fn dense_table(&self) -> Vec<Vec<Vec<R::Elem>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.product(i, j)).collect())
            .collect()
    }

    pub fn is_idempotent(&self, x: &[R::Elem]) -> bool {
        self.square(x) == x
    }
}

impl<F: Field> Algebra<F> {
    /// Basis of the subalgebra generated by `gens`: the independent generators
    /// in order, then each new product `b_i * b_j` (`j <= i`) that enlarges the span.
    pub fn closure(&self, gens: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        let f = &self.ring;
        let mut ech = Echelon::new(self.dim);
        let mut basis: Vec<Vec<F::Elem>> = Vec::new();
        for g in gens {
            if ech.insert(f, g) {
                basis.push(g.clone());
            }
        }
        let mut i = 0;
        while i < basis.len() && !ech.is_full() {
            for j in 0..=i {
                let p = self.mul(&basis[i], &basis[j]);
                if ech.insert(f, &p) {
                    basis.push(p);
                }
            }
            i += 1;
        }
        basis
    }

    /// The algebra spanned by `basis` (which must be closed under products),
    /// with coordinates relative to that basis.
    pub fn subalgebra(
        &self,
        basis: Vec<Vec<F::Elem>>,
    ) -> Result<(Algebra<F>, Coordinates<F::Elem>), AlgebraError> {
        let f = &self.ring;
        let k = basis.len();
        let coords = Coordinates::new(f, self.dim, basis)
            .ok_or_else(|| AlgebraError::Format("subalgebra basis is dependent".into()))?;
        let b = coords.basis();
        let mut table = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in i..k {
                let p = self.mul(&b[i], &b[j]);
                let c = coords.coords(f, &p).ok_or_else(|| {
                    AlgebraError::Format(format!("span is not closed: b{i}*b{j} escapes"))
                })?;
                table[i][j] = c.clone();
                table[j][i] = c;
            }
        }
        Ok((Algebra::new(f.clone(), table)?, coords))
    }
}

/// An algebra together with its generating axes and fusion parameter.
#[derive(Debug, Clone)]
pub struct AxialAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    pub axes: Vec<Vec<F::Elem>>,
    pub eta: F::Elem,
}

impl<F: Field> AxialAlgebra<F> {
    pub fn new(algebra: Algebra<F>, axes: Vec<Vec<F::Elem>>, eta: F::Elem) -> Self {
        Self { algebra, axes, eta }
    }

    pub fn field(&self) -> &F {
        self.algebra.ring()
    }

    /// Certifies every generating axis; the first failure is reported with its index.
    pub fn certify(&self) -> Result<Vec<AxisRecord<F::Elem>>, AlgebraError> {
        self.axes
            .iter()
            .enumerate()
            .map(|(i, a)| {
                certify_axis(&self.algebra, a, &self.eta).map_err(|e| AlgebraError::Axis {
                    index: i,
                    failure: e.to_string(),
                })
            })
            .collect()
    }
}

/// An axial algebra whose generating axes are certified and whose Frobenius
/// form is known.
#[derive(Debug, Clone)]
pub struct CertifiedAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    pub axes: Vec<AxisRecord<F::Elem>>,
    pub form: FrobeniusForm<F::Elem>,
    pub eta: F::Elem,
}

impl<F: Field> AxialAlgebra<F> {
    /// Certifies the axes and builds the Frobenius form.
    pub fn prepare(&self) -> Result<CertifiedAlgebra<F>, AlgebraError> {
        let axes = self.certify()?;
        let form = frobenius_form(&self.algebra, &axes)?;
        Ok(CertifiedAlgebra {
            algebra: self.algebra.clone(),
            axes,
            form,
            eta: self.eta.clone(),
        })
    }
}

impl<F: Field> CertifiedAlgebra<F> {
    pub fn field(&self) -> &F {
        self.algebra.ring()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn eta_is_half(&self) -> bool {
        self.eta == self.field().half()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{PrimeField, Rationals};

    fn two_by_two() -> Algebra<PrimeField> {
        // F + F with idempotents e0, e1
        let f = PrimeField::new(5).unwrap();
        Algebra::from_fn(f, 2, |i, j| {
            if i == j {
                unit_vector(&f, 2, i)
            } else {
                vec![0, 0]
            }
        })
        .unwrap()
    }

    #[test]
    fn rejects_noncommutative_tables() {
        let f = PrimeField::new(5).unwrap();
        let t = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 0], vec![0, 1]]];
        assert_eq!(
            Algebra::new(f, t).unwrap_err(),
            AlgebraError::NotCommutative(0, 1)
        );
        assert!(matches!(
            Algebra::new(f, vec![vec![vec![1, 0]]]),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ad_of_zero_and_unit() {
        let a = two_by_two();
        let f = *a.ring();
        assert!(a.ad(&[0, 0]).is_zero(&f));
        assert_eq!(a.ad(&[1, 1]), Matrix::identity(&f, 2));
    }

    #[test]
    fn closure_of_orthogonal_idempotents() {
        let a = two_by_two();
        assert_eq!(a.closure(&[vec![1, 0]]).len(), 1);
        assert_eq!(a.closure(&[vec![1, 0], vec![0, 1]]).len(), 2);
        assert_eq!(a.closure(&[vec![1, 2]]).len(), 2);
    }

    #[test]
    fn lift_and_direct_sum() {
        let q = Rationals;
        let one = Algebra::from_fn(q, 1, |_, _| vec![q.one()]).unwrap();
        let sum = one.direct_sum(&one);
        assert_eq!(sum.dim(), 2);
        assert_eq!(sum.product(1, 1), vec![q.zero(), q.one()]);
        assert!(sum.product(0, 1).iter().all(|x| q.is_zero(x)));
        let dual = crate::scalars::DualNumbers::new(q);
        let lifted = sum.lift(&dual);
        let u = vec![dual.one(), dual.one()];
        assert_eq!(lifted.mul(&u, &u), u);
    }
}
