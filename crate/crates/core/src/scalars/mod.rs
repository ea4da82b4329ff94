//! Exact scalar arithmetic.
//!
//! Rings are represented by *context* values implementing [`Ring`]; elements
//! are plain data (`Ring::Elem`). A prime field element is just a `u64`, the
//! modulus lives in the [`PrimeField`] context. This keeps elements `Copy` or
//! cheap to clone and lets one algebra be lifted to an extension ring by
//! swapping the context.

mod dual;
mod poly;
mod prime;
mod quad;
mod rational;
mod spec;

use std::fmt;
use std::hash::Hash;

use rand::RngCore;
use serde_json::Value;

use crate::error::ScalarError;

pub use dual::DualNumbers;
pub use poly::{Poly, VecPoly};
pub use prime::PrimeField;
pub use quad::QuadExt;
pub use rational::Rationals;
pub use spec::FieldSpec;

/// Result of asking a field for a square root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sqrt<E> {
    Root(E),
    NonSquare,
    /// The field cannot decide (e.g. towers of extensions).
    Unknown,
}

/// A commutative unital ring, given as a context object.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Inverse of a unit, `None` for non-units.
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    /// `acc += x * y`
    fn mul_add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem, y: &Self::Elem) {
        let p = self.mul(x, y);
        self.add_assign(acc, &p);
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// `n / d` as a ring element, `None` when `d` is not a unit.
    fn from_ratio(&self, n: i64, d: i64) -> Option<Self::Elem> {
        let inv = self.try_inv(&self.from_i64(d))?;
        Some(self.mul(&self.from_i64(n), &inv))
    }

    /// The element 1/2. Panics in characteristic 2, which no routine here accepts.
    fn half(&self) -> Self::Elem {
        self.from_ratio(1, 2)
            .expect("characteristic 2 is not supported")
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ScalarError> {
        self.try_inv(a).ok_or(ScalarError::DivisionByZero)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn sqrt(&self, a: &Self::Elem) -> Sqrt<Self::Elem>;

    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;

    /// All elements in a fixed order, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn spec(&self) -> FieldSpec;

    fn to_json(&self, a: &Self::Elem) -> Value;
    fn from_json(&self, v: &Value) -> Result<Self::Elem, ScalarError>;
}

/// A ring containing a copy of `B`.
pub trait Extends<B: Ring>: Ring {
    fn embed(&self, x: &B::Elem) -> Self::Elem;
}

impl<R: Ring> Extends<R> for R {
    fn embed(&self, x: &R::Elem) -> R::Elem {
        x.clone()
    }
}

/// Smallest `n > 0` with `x^n = 1`, searching up to `bound`.
pub fn multiplicative_order<R: Ring>(ring: &R, x: &R::Elem, bound: u64) -> Option<u64> {
    if ring.is_zero(x) {
        return None;
    }
    let mut acc = x.clone();
    for n in 1..=bound {
        if ring.is_one(&acc) {
            return Some(n);
        }
        acc = ring.mul(&acc, x);
    }
    None
}
