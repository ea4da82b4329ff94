use rand::{Rng, RngCore};
use serde_json::Value;

use super::{Field, FieldSpec, Ring, Sqrt};
use crate::error::ScalarError;

/// The field with `p` elements, `p` an odd prime below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

const MAX_MODULUS: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if p == 2 {
            return Err(ScalarError::CharacteristicTwo);
        }
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(ScalarError::InvalidModulus(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn legendre(&self, a: u64) -> u64 {
        self.pow(&a, (self.p - 1) / 2)
    }

    // Tonelli-Shanks.
    fn sqrt_residue(&self, a: u64) -> u64 {
        let p = self.p;
        if p % 4 == 3 {
            return self.pow(&a, (p + 1) / 4);
        }
        let mut q = p - 1;
        let mut s = 0;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p).find(|&z| self.legendre(z) == p - 1).unwrap();
        let mut m = s;
        let mut c = self.pow(&z, q);
        let mut t = self.pow(&a, q);
        let mut r = self.pow(&a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(&t2, &t2);
                i += 1;
            }
            let b = self.pow(&c, 1 << (m - i - 1));
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        r
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.elem(n)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn try_inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on signed integers
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(self.elem(t0))
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {
    fn sqrt(&self, a: &u64) -> Sqrt<u64> {
        if *a == 0 {
            return Sqrt::Root(0);
        }
        if self.legendre(*a) != 1 {
            return Sqrt::NonSquare;
        }
        let r = self.sqrt_residue(*a);
        // canonical choice: the smaller representative
        Sqrt::Root(r.min(self.p - r))
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::prime(self.p)
    }

    fn to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }

    fn from_json(&self, v: &Value) -> Result<u64, ScalarError> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(|i| self.elem(i))
                .ok_or_else(|| ScalarError::Parse(n.to_string())),
            Value::String(s) => s
                .trim()
                .parse::<i64>()
                .map(|i| self.elem(i))
                .map_err(|_| ScalarError::Parse(s.clone())),
            other => Err(ScalarError::Parse(other.to_string())),
        }
    }
}
