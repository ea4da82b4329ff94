use super::{Extends, Ring};

/// Dual numbers `R[eps]` with `eps^2 = 0`. Elements are `(real, eps)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualNumbers<R: Ring> {
    base: R,
}

impl<R: Ring> DualNumbers<R> {
    pub fn new(base: R) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn eps(&self) -> (R::Elem, R::Elem) {
        (self.base.zero(), self.base.one())
    }

    pub fn make(&self, real: R::Elem, eps: R::Elem) -> (R::Elem, R::Elem) {
        (real, eps)
    }
}

impl<R: Ring> Ring for DualNumbers<R> {
    type Elem = (R::Elem, R::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.zero())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        (self.base.from_i64(n), self.base.zero())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.sub(&a.0, &b.0), self.base.sub(&a.1, &b.1))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        // the eps*eps term vanishes
        (
            r.mul(&a.0, &b.0),
            r.add(&r.mul(&a.0, &b.1), &r.mul(&a.1, &b.0)),
        )
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.0) && self.base.is_zero(&a.1)
    }

    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let r = &self.base;
        let inv = r.try_inv(&a.0)?;
        let e = r.neg(&r.mul(&a.1, &r.mul(&inv, &inv)));
        Some((inv, e))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        format!(
            "{} + ({})*eps",
            self.base.fmt_elem(&a.0),
            self.base.fmt_elem(&a.1)
        )
    }
}

impl<R: Ring> Extends<R> for DualNumbers<R> {
    fn embed(&self, x: &R::Elem) -> Self::Elem {
        (x.clone(), self.base.zero())
    }
}
