//! Dense exact linear algebra over a [`Field`] context.
//!
//! Vectors are `Vec<E>`; matrices are row-major [`Matrix`]. Elimination pivots
//! on the first nonzero entry of each column, so output bases are deterministic.

use crate::scalars::{Field, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, x: E) -> Self {
        Self {
            rows,
            cols,
            data: vec![x; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<E>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: E) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<E: Clone> Matrix<E> {
    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn zeros<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ring.zero())
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| ring.sub(a, b))
                .collect(),
        }
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        self.map(|x| ring.mul(c, x))
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !ring.is_zero(b) {
                        let idx = i * out.cols + j;
                        ring.mul_add_assign(&mut out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !ring.is_zero(a) && !ring.is_zero(x) {
                        ring.mul_add_assign(&mut acc, a, x);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !field.is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = field.inv(m.get(r, c)).expect("pivot is nonzero");
        for j in c..m.cols {
            let x = field.mul(m.get(r, j), &inv);
            m.set(r, j, x);
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for j in c..m.cols {
                let x = field.sub(m.get(i, j), &field.mul(&factor, m.get(r, j)));
                m.set(i, j, x);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut m = m.clone();
    rref(field, &mut m).len()
}

/// Rank of a list of vectors of length `n`.
pub fn rank_of<F: Field>(field: &F, n: usize, vs: &[Vec<F::Elem>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    rank(field, &Matrix::from_rows(n, vs.to_vec()))
}

/// Basis of the null space `{x : m x = 0}`, one vector per free column.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut r = m.clone();
    let pivots = rref(field, &mut r);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(r.get(row, free));
        }
        out.push(v);
    }
    out
}

/// Kernel of `m - lambda I`.
pub fn eigen_kernel<F: Field>(
    field: &F,
    m: &Matrix<F::Elem>,
    lambda: &F::Elem,
) -> Vec<Vec<F::Elem>> {
    let shifted = m.sub(
        field,
        &Matrix::identity(field, m.rows()).scale(field, lambda),
    );
    kernel(field, &shifted)
}

/// Some solution of `m x = b`, or `None` when inconsistent.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows, b.len());
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let mut r = aug;
    let pivots = rref(field, &mut r);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, m.cols).clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// Indices of a maximal linearly independent prefix-greedy subset of `vs`.
pub fn independent_subset<F: Field>(field: &F, n: usize, vs: &[Vec<F::Elem>]) -> Vec<usize> {
    if vs.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::from_columns(n, vs);
    rref(field, &mut m)
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Debug, Clone)]
pub struct Coordinates<E> {
    basis: Vec<Vec<E>>,
    left_inverse: Matrix<E>,
    complement: Matrix<E>,
}

impl<E: Clone + PartialEq> Coordinates<E> {
    /// Fails (`None`) if the vectors are linearly dependent.
    pub fn new<F: Field<Elem = E>>(field: &F, n: usize, basis: Vec<Vec<E>>) -> Option<Self> {
        let k = basis.len();
        let mut aug = Matrix::from_fn(n, k + n, |i, j| {
            if j < k {
                basis[j][i].clone()
            } else if j - k == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let pivots = rref(field, &mut aug);
        if pivots.len() < k || (k > 0 && pivots[k - 1] != k - 1) {
            return None;
        }
        // rows below k are zero on the basis block: they cut out the span
        let left_inverse = Matrix::from_fn(k, n, |i, j| aug.get(i, k + j).clone());
        let complement = Matrix::from_fn(n - k, n, |i, j| aug.get(k + i, k + j).clone());
        Some(Self {
            basis,
            left_inverse,
            complement,
        })
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        self.complement
            .mul_vec(field, v)
            .iter()
            .all(|x| field.is_zero(x))
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains(field, v) {
            return None;
        }
        Some(self.left_inverse.mul_vec(field, v))
    }

    /// The vector with the given coordinates.
    pub fn combine<F: Field<Elem = E>>(&self, field: &F, c: &[E]) -> Vec<E> {
        combine(field, &self.basis, c, self.left_inverse.cols())
    }
}

/// Incrementally built echelon form, for span membership and rank growth.
#[derive(Debug, Clone)]
pub struct Echelon<E> {
    n: usize,
    rows: Vec<(usize, Vec<E>)>,
}

impl<E: Clone> Echelon<E> {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if field.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !field.is_zero(r) {
                    *x = field.sub(x, &field.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, field: &F, v: &[E]) -> bool {
        let r = self.reduce(field, v);
        let Some(p) = r.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&r[p]).expect("nonzero pivot");
        let r: Vec<E> = r.iter().map(|x| field.mul(x, &inv)).collect();
        // keep earlier rows reduced at the new pivot so later reductions stay valid
        for (_, row) in self.rows.iter_mut() {
            if !field.is_zero(&row[p]) {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = field.sub(x, &field.mul(&c, y));
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}

pub fn combine<R: Ring>(ring: &R, basis: &[Vec<R::Elem>], c: &[R::Elem], n: usize) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); n];
    for (b, x) in basis.iter().zip(c) {
        if ring.is_zero(x) {
            continue;
        }
        for (o, bi) in out.iter_mut().zip(b) {
            if !ring.is_zero(bi) {
                ring.mul_add_assign(o, x, bi);
            }
        }
    }
    out
}

pub fn vadd<R: Ring>(ring: &R, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().zip(y).map(|(a, b)| ring.add(a, b)).collect()
}

pub fn vsub<R: Ring>(ring: &R, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().zip(y).map(|(a, b)| ring.sub(a, b)).collect()
}

pub fn vscale<R: Ring>(ring: &R, c: &R::Elem, x: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().map(|a| ring.mul(c, a)).collect()
}

pub fn vneg<R: Ring>(ring: &R, x: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().map(|a| ring.neg(a)).collect()
}

pub fn vis_zero<R: Ring>(ring: &R, x: &[R::Elem]) -> bool {
    x.iter().all(|a| ring.is_zero(a))
}

pub fn unit_vector<R: Ring>(ring: &R, n: usize, i: usize) -> Vec<R::Elem> {
    let mut v = vec![ring.zero(); n];
    v[i] = ring.one();
    v
}

/// Sum of `c_k * v_k`.
pub fn lincomb<R: Ring>(ring: &R, n: usize, terms: &[(R::Elem, &[R::Elem])]) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); n];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            ring.mul_add_assign(o, c, x);
        }
    }
    out
}
