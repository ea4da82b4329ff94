//! Univariate polynomials in a parameter `λ`, with scalar or vector coefficients.

use super::{Extends, Ring};

/// Scalar polynomial, coefficients by ascending degree, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> Poly<E> {
    pub fn new<R: Ring<Elem = E>>(ring: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant<R: Ring<Elem = E>>(ring: &R, c: E) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c λ^k`
    pub fn monomial<R: Ring<Elem = E>>(ring: &R, c: E, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = ring.zero();
        let coeffs = (0..n)
            .map(|k| {
                ring.add(
                    self.coeffs.get(k).unwrap_or(&z),
                    other.coeffs.get(k).unwrap_or(&z),
                )
            })
            .collect();
        Self::new(ring, coeffs)
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        Self::new(ring, self.coeffs.iter().map(|x| ring.mul(x, c)).collect())
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                ring.mul_add_assign(&mut out[i + j], x, y);
            }
        }
        Self::new(ring, out)
    }

    pub fn eval<R: Ring<Elem = E>>(&self, ring: &R, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    pub fn derivative<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| ring.mul(&ring.from_i64(k as i64), c))
            .collect();
        Self::new(ring, coeffs)
    }
}

/// Polynomial whose coefficients are coordinate vectors of a fixed length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VecPoly<E> {
    dim: usize,
    coeffs: Vec<Vec<E>>,
}

impl<E: Clone> VecPoly<E> {
    pub fn new<R: Ring<Elem = E>>(ring: &R, dim: usize, mut coeffs: Vec<Vec<E>>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.len() == dim),
            "coefficient length mismatch"
        );
        while coeffs
            .last()
            .is_some_and(|c| c.iter().all(|x| ring.is_zero(x)))
        {
            coeffs.pop();
        }
        Self { dim, coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            coeffs: Vec::new(),
        }
    }

    /// The constant polynomial `v`.
    pub fn constant<R: Ring<Elem = E>>(ring: &R, v: Vec<E>) -> Self {
        let dim = v.len();
        Self::new(ring, dim, vec![v])
    }

    /// `v λ^k`
    pub fn monomial<R: Ring<Elem = E>>(ring: &R, v: Vec<E>, k: usize) -> Self {
        let dim = v.len();
        let mut coeffs = vec![vec![ring.zero(); dim]; k];
        coeffs.push(v);
        Self::new(ring, dim, coeffs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Vec<E>] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// First nonzero coefficient as `(degree, vector)`.
    pub fn first_nonzero<R: Ring<Elem = E>>(&self, ring: &R) -> Option<(usize, &[E])> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| c.iter().any(|x| !ring.is_zero(x)))
            .map(|(k, c)| (k, c.as_slice()))
    }

    pub fn eval<R: Ring<Elem = E>>(&self, ring: &R, x: &E) -> Vec<E> {
        let mut acc = vec![ring.zero(); self.dim];
        for c in self.coeffs.iter().rev() {
            for (a, ci) in acc.iter_mut().zip(c) {
                *a = ring.add(&ring.mul(a, x), ci);
            }
        }
        acc
    }

    /// Evaluates at a point of an extension ring.
    pub fn eval_in<R: Ring<Elem = E>, X: Extends<R>>(&self, ext: &X, x: &X::Elem) -> Vec<X::Elem> {
        let mut acc = vec![ext.zero(); self.dim];
        for c in self.coeffs.iter().rev() {
            for (a, ci) in acc.iter_mut().zip(c) {
                *a = ext.add(&ext.mul(a, x), &ext.embed(ci));
            }
        }
        acc
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(ring, self.dim, coeffs)
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.scale(ring, &ring.from_i64(-1)))
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|v| v.iter().map(|x| ring.mul(x, c)).collect())
            .collect();
        Self::new(ring, self.dim, coeffs)
    }

    /// Product with a scalar polynomial.
    pub fn scale_poly<R: Ring<Elem = E>>(&self, ring: &R, p: &Poly<E>) -> Self {
        if self.is_zero() || p.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = vec![vec![ring.zero(); self.dim]; self.coeffs.len() + p.coeffs().len() - 1];
        for (i, v) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                if ring.is_zero(c) {
                    continue;
                }
                for (o, x) in out[i + j].iter_mut().zip(v) {
                    ring.mul_add_assign(o, x, c);
                }
            }
        }
        Self::new(ring, self.dim, out)
    }

    /// Multiplies by `λ^k`.
    pub fn shift<R: Ring<Elem = E>>(&self, ring: &R, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![vec![ring.zero(); self.dim]; k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(ring, self.dim, coeffs)
    }

    pub fn derivative<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, v)| {
                let kk = ring.from_i64(k as i64);
                v.iter().map(|x| ring.mul(x, &kk)).collect()
            })
            .collect();
        Self::new(ring, self.dim, coeffs)
    }

    /// Maps coefficients into an extension ring.
    pub fn lift<R: Ring<Elem = E>, X: Extends<R>>(&self, ext: &X) -> VecPoly<X::Elem> {
        VecPoly::new(
            ext,
            self.dim,
            self.coeffs
                .iter()
                .map(|v| v.iter().map(|x| ext.embed(x)).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Field, PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn zero_poly_evaluates_to_zero_vector() {
        let q = Rationals;
        let p: VecPoly<_> = VecPoly::new(&q, 3, vec![vec![q.zero(); 3]; 2]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p.eval(&q, &q.from_i64(17)), vec![q.zero(); 3]);
    }

    #[test]
    fn linear_poly_eval() {
        let q = Rationals;
        let p = VecPoly::new(
            &q,
            2,
            vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]],
        );
        assert_eq!(p.eval(&q, &q.from_i64(2)), vec![q.one(), q.from_i64(2)]);
        assert!(!p.is_zero());
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn eval_at_characteristic_gives_constant_term() {
        let f3 = PrimeField::new(3).unwrap();
        let p = VecPoly::new(&f3, 2, vec![vec![1, 2], vec![2, 2], vec![1, 0]]);
        assert_eq!(p.eval(&f3, &f3.from_i64(3)), vec![1, 2]);
    }

    #[test]
    fn single_nonzero_coefficient_is_nonzero() {
        let f5 = PrimeField::new(5).unwrap();
        let p = VecPoly::monomial(&f5, vec![0, 3], 4);
        assert!(!p.is_zero());
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.first_nonzero(&f5).unwrap().0, 4);
    }

    // Lagrange interpolation over Q, used as an independent reconstruction.
    fn interpolate(
        q: &Rationals,
        xs: &[i64],
        ys: &[Vec<num_rational::BigRational>],
    ) -> VecPoly<num_rational::BigRational> {
        let dim = ys[0].len();
        let mut acc = VecPoly::zero(dim);
        for (i, xi) in xs.iter().enumerate() {
            let mut basis = Poly::constant(q, q.one());
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    let lin = Poly::new(q, vec![q.from_i64(-xj), q.one()]);
                    let d = q.inv(&q.from_i64(xi - xj)).unwrap();
                    basis = basis.mul(q, &lin).scale(q, &d);
                }
            }
            acc = acc.add(
                q,
                &VecPoly::constant(q, ys[i].clone()).scale_poly(q, &basis),
            );
        }
        acc
    }

    proptest! {
        #[test]
        fn interpolation_round_trip(coeffs in proptest::collection::vec(proptest::collection::vec(-9i64..9, 3), 0..6)) {
            let q = Rationals;
            let p = VecPoly::new(&q, 3, coeffs.iter().map(|v| v.iter().map(|&x| q.from_i64(x)).collect()).collect());
            let d = p.degree().unwrap_or(0);
            let xs: Vec<i64> = (0..=d as i64).collect();
            let ys: Vec<_> = xs.iter().map(|&x| p.eval(&q, &q.from_i64(x))).collect();
            prop_assert_eq!(interpolate(&q, &xs, &ys), p);
        }

        #[test]
        fn derivative_matches_dual_evaluation(coeffs in proptest::collection::vec(proptest::collection::vec(0u64..7, 2), 0..6), x in 0u64..7) {
            use crate::scalars::DualNumbers;
            let f7 = PrimeField::new(7).unwrap();
            let p = VecPoly::new(&f7, 2, coeffs);
            let dual = DualNumbers::new(f7);
            let at = p.eval_in::<PrimeField, _>(&dual, &(x, 1));
            let real: Vec<u64> = at.iter().map(|z| z.0).collect();
            let eps: Vec<u64> = at.iter().map(|z| z.1).collect();
            prop_assert_eq!(real, p.eval(&f7, &x));
            prop_assert_eq!(eps, p.derivative(&f7).eval(&f7, &x));
        }
    }
}
