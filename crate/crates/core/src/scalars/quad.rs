use rand::RngCore;
use serde_json::Value;

use super::{Extends, Field, FieldSpec, Ring, Sqrt};
use crate::error::ScalarError;

/// The quadratic extension `B[t]/(t^2 + c1 t + c0)` of a field `B`.
///
/// Elements are pairs `(x, y)` meaning `x + y t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt<B: Field> {
    base: B,
    c0: B::Elem,
    c1: B::Elem,
}

impl<B: Field> QuadExt<B> {
    /// Builds the extension by `t^2 + c1 t + c0`, rejecting reducible polynomials.
    pub fn new(base: B, c0: B::Elem, c1: B::Elem) -> Result<Self, ScalarError> {
        if base.characteristic() == 2 {
            return Err(ScalarError::CharacteristicTwo);
        }
        let disc = base.sub(&base.mul(&c1, &c1), &base.mul(&base.from_i64(4), &c0));
        let reducible = match base.elements() {
            // small finite fields: look for a root directly
            Some(elems) if elems.len() <= 1 << 16 => elems.iter().any(|r| {
                let v = base.add(&base.mul(r, &base.add(r, &c1)), &c0);
                base.is_zero(&v)
            }),
            _ => match base.sqrt(&disc) {
                Sqrt::Root(_) => true,
                Sqrt::NonSquare => false,
                Sqrt::Unknown => return Err(ScalarError::CannotExtend),
            },
        };
        if reducible {
            return Err(ScalarError::Reducible(format!(
                "t^2 + ({})t + ({})",
                base.fmt_elem(&c1),
                base.fmt_elem(&c0)
            )));
        }
        Ok(Self { base, c0, c1 })
    }

    /// An extension containing a square root of the non-square `d`, together
    /// with that root. Prefers `t^2 + t + 1` when it also works, so cube roots
    /// of unity appear as `t`.
    pub fn adjoin_sqrt(base: B, d: &B::Elem) -> Result<(Self, (B::Elem, B::Elem)), ScalarError> {
        let minus3 = base.from_i64(-3);
        if let (Sqrt::NonSquare, Sqrt::Root(r)) = (
            base.sqrt(&minus3),
            base.sqrt(&base.div(d, &minus3).unwrap_or_else(|_| base.zero())),
        ) {
            if !base.is_zero(&r) {
                // sqrt(-3) = 2t + 1, so sqrt(d) = (2t + 1) r
                let one = base.one();
                let ext = Self::new(base.clone(), one.clone(), one)?;
                let root = (r.clone(), base.add(&r, &r));
                return Ok((ext, root));
            }
        }
        let ext = Self::new(base.clone(), base.neg(d), base.zero())?;
        Ok((ext, (base.zero(), base.one())))
    }

    /// The quadratic extension of a finite field, by its first non-square.
    pub fn of_finite(base: B) -> Result<Self, ScalarError> {
        let elems = base.elements().ok_or(ScalarError::CannotExtend)?;
        let d = elems
            .into_iter()
            .find(|x| base.sqrt(x) == Sqrt::NonSquare)
            .ok_or(ScalarError::CannotExtend)?;
        Ok(Self::adjoin_sqrt(base, &d)?.0)
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn minpoly(&self) -> (&B::Elem, &B::Elem) {
        (&self.c0, &self.c1)
    }

    /// The generator `t`.
    pub fn gen(&self) -> (B::Elem, B::Elem) {
        (self.base.zero(), self.base.one())
    }

    /// Whether the element lies in the base field.
    pub fn is_base(&self, a: &(B::Elem, B::Elem)) -> bool {
        self.base.is_zero(&a.1)
    }

    /// Image under the nontrivial automorphism `t -> -c1 - t`.
    pub fn conjugate(&self, a: &(B::Elem, B::Elem)) -> (B::Elem, B::Elem) {
        let b = &self.base;
        (b.sub(&a.0, &b.mul(&self.c1, &a.1)), b.neg(&a.1))
    }
}

impl<B: Field> Ring for QuadExt<B> {
    type Elem = (B::Elem, B::Elem);

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
        let f = &self.base;
        let x0 = f.mul(&a.0, &b.0);
        let x1 = f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0));
        let x2 = f.mul(&a.1, &b.1);
        // t^2 = -c1 t - c0
        (
            f.sub(&x0, &f.mul(&x2, &self.c0)),
            f.sub(&x1, &f.mul(&x2, &self.c1)),
        )
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.0) && self.base.is_zero(&a.1)
    }

    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let f = &self.base;
        // norm x^2 - c1 x y + c0 y^2
        let (x, y) = a;
        let norm = f.add(
            &f.sub(&f.mul(x, x), &f.mul(&self.c1, &f.mul(x, y))),
            &f.mul(&self.c0, &f.mul(y, y)),
        );
        let ninv = f.try_inv(&norm)?;
        let conj = self.conjugate(a);
        Some((f.mul(&conj.0, &ninv), f.mul(&conj.1, &ninv)))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        if self.base.is_zero(&a.1) {
            return self.base.fmt_elem(&a.0);
        }
        let term = match self.base.fmt_elem(&a.1).as_str() {
            "1" => "t".to_string(),
            "-1" => "-t".to_string(),
            s if s.contains('/') => format!("({s})t"),
            s => format!("{s}t"),
        };
        if self.base.is_zero(&a.0) {
            return term;
        }
        match term.strip_prefix('-') {
            Some(rest) => format!("{} - {rest}", self.base.fmt_elem(&a.0)),
            None => format!("{} + {term}", self.base.fmt_elem(&a.0)),
        }
    }
}

impl<B: Field> Field for QuadExt<B> {
    fn sqrt(&self, a: &Self::Elem) -> Sqrt<Self::Elem> {
        if self.is_zero(a) {
            return Sqrt::Root(self.zero());
        }
        match self.elements() {
            Some(elems) if elems.len() <= 1 << 16 => elems
                .into_iter()
                .find(|r| self.mul(r, r) == *a)
                .map_or(Sqrt::NonSquare, Sqrt::Root),
            _ => Sqrt::Unknown,
        }
    }

    fn order(&self) -> Option<u64> {
        self.base.order().and_then(|q| q.checked_mul(q))
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        let mut out = Vec::with_capacity(base.len() * base.len());
        for y in &base {
            for x in &base {
                out.push((x.clone(), y.clone()));
            }
        }
        Some(out)
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (self.base.random(rng), self.base.random(rng))
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Quad {
            base: Box::new(self.base.spec()),
            minpoly: [self.base.to_json(&self.c0), self.base.to_json(&self.c1)],
        }
    }

    fn to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(vec![self.base.to_json(&a.0), self.base.to_json(&a.1)])
    }

    fn from_json(&self, v: &Value) -> Result<Self::Elem, ScalarError> {
        match v {
            Value::Array(xs) if xs.len() == 2 => {
                Ok((self.base.from_json(&xs[0])?, self.base.from_json(&xs[1])?))
            }
            other => Ok((self.base.from_json(other)?, self.base.zero())),
        }
    }
}

impl<B: Field> Extends<B> for QuadExt<B> {
    fn embed(&self, x: &B::Elem) -> Self::Elem {
        (x.clone(), self.base.zero())
    }
}
