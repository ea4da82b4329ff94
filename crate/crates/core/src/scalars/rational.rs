use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};
use serde_json::Value;

use super::{Field, FieldSpec, Ring, Sqrt};
use crate::error::ScalarError;

/// The rational numbers, arbitrary precision, always in lowest terms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Rationals {
    pub fn parse(&self, s: &str) -> Result<BigRational, ScalarError> {
        let s = s.trim();
        let bad = || ScalarError::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

fn perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if b.is_zero() {
            return a.clone();
        }
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        if a.is_zero() || b.is_zero() {
            return BigRational::zero();
        }
        a * b
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn try_inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn fmt_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn add_assign(&self, acc: &mut BigRational, b: &BigRational) {
        if !b.is_zero() {
            *acc += b;
        }
    }

    fn mul_add_assign(&self, acc: &mut BigRational, x: &BigRational, y: &BigRational) {
        if !x.is_zero() && !y.is_zero() {
            *acc += x * y;
        }
    }
}

impl Field for Rationals {
    fn sqrt(&self, a: &BigRational) -> Sqrt<BigRational> {
        if a.is_negative() {
            return Sqrt::NonSquare;
        }
        match (perfect_square(a.numer()), perfect_square(a.denom())) {
            (Some(n), Some(d)) => Sqrt::Root(BigRational::new(n, d)),
            _ => Sqrt::NonSquare,
        }
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        let n: i64 = rng.gen_range(-6..=6);
        let d: i64 = rng.gen_range(1..=4);
        BigRational::new(n.into(), d.into())
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn to_json(&self, a: &BigRational) -> Value {
        Value::String(a.to_string())
    }

    fn from_json(&self, v: &Value) -> Result<BigRational, ScalarError> {
        match v {
            Value::String(s) => self.parse(s),
            Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(self.from_i64(i)),
                None => Err(ScalarError::Parse(n.to_string())),
            },
            other => Err(ScalarError::Parse(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves_sum_to_one() {
        let q = Rationals;
        let h = q.half();
        assert_eq!(q.add(&h, &h), q.one());
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let q = Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(q.fmt_elem(&x), "-3/2");
    }

    #[test]
    fn sqrt_of_fractions() {
        let q = Rationals;
        assert_eq!(
            q.sqrt(&q.parse("9/4").unwrap()),
            Sqrt::Root(q.parse("3/2").unwrap())
        );
        assert_eq!(q.sqrt(&q.parse("-1/3").unwrap()), Sqrt::NonSquare);
        assert_eq!(q.sqrt(&q.parse("2").unwrap()), Sqrt::NonSquare);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            Rationals.inv(&Rationals.zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(Rationals.parse("1/0"), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn json_forms() {
        let q = Rationals;
        assert_eq!(q.from_json(&Value::from(3)).unwrap(), q.from_i64(3));
        assert_eq!(
            q.from_json(&Value::from("1/4")).unwrap(),
            q.from_ratio(1, 4).unwrap()
        );
        assert_eq!(
            q.to_json(&q.from_ratio(-1, 4).unwrap()),
            Value::from("-1/4")
        );
        assert!(q.from_json(&Value::from(0.5)).is_err());
    }
}
