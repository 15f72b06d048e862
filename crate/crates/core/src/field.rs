//! Exact scalar fields: the rationals and prime fields.
//!
//! Every scalar in the crate is a [`Scalar`] (an arbitrary-precision rational
//! kept in lowest terms). Over a prime field the value is always a reduced
//! integer in `[0, p)`, so the same representation serves both fields and two
//! equal field elements are always bitwise equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
#[derive(Default)]
pub enum Field {
    #[default]
    Rationals,
    PrimeField {
        p: u64,
    },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::PrimeField { p })
        } else {
            Err(Error::Input(format!("{p} is not prime")))
        }
    }

    /// Parses `q` or `fp:<p>`.
    pub fn parse_flag(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" | "rationals" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Input(format!("unknown field `{s}` (expected q or fp:<p>)")))?;
                Field::prime(p)
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::PrimeField { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.reduce_int(BigInt::from(n))
    }

    fn reduce_int(&self, n: BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_integer(n),
            Field::PrimeField { p } => Scalar::from_integer(n.mod_floor(&BigInt::from(*p))),
        }
    }

    /// Brings an arbitrary rational into this field. Fails over `F_p` when the
    /// denominator is divisible by `p`.
    pub fn import(&self, x: &Scalar) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(x.clone()),
            Field::PrimeField { p } => {
                let num = self.reduce_int(x.numer().clone());
                let den = self.reduce_int(x.denom().clone());
                let inv = self.inv(&den).ok_or_else(|| Error::Input(format!("denominator of {x} vanishes mod {p}")))?;
                Ok(self.mul(&num, &inv))
            }
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        x.is_zero()
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        x.is_one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a + b,
            Field::PrimeField { p } => {
                let s = a.numer() + b.numer();
                let p = BigInt::from(*p);
                Scalar::from_integer(if s >= p { s - p } else { s })
            }
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => -a,
            Field::PrimeField { p } => {
                if a.is_zero() {
                    a.clone()
                } else {
                    Scalar::from_integer(BigInt::from(*p) - a.numer())
                }
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a - b,
            Field::PrimeField { .. } => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a * b,
            Field::PrimeField { p } => {
                if a.is_zero() || b.is_zero() {
                    return Scalar::zero();
                }
                Scalar::from_integer((a.numer() * b.numer()).mod_floor(&BigInt::from(*p)))
            }
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::PrimeField { p } => {
                let p = BigInt::from(*p);
                let eg = a.numer().extended_gcd(&p);
                debug_assert!(eg.gcd.is_one());
                Some(Scalar::from_integer(eg.x.mod_floor(&p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// `y += c * x`, elementwise.
    pub fn axpy(&self, y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
        debug_assert_eq!(y.len(), x.len());
        if c.is_zero() {
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            if !xi.is_zero() {
                *yi = self.add(yi, &self.mul(c, xi));
            }
        }
    }

    pub fn scale(&self, c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|xi| self.mul(c, xi)).collect()
    }

    pub fn add_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| self.sub(x, y)).collect()
    }

    pub fn dot(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                s = self.add(&s, &self.mul(x, y));
            }
        }
        s
    }

    pub fn zeros(&self, n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); n]
    }

    pub fn unit_vector(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zeros(n);
        v[i] = Scalar::one();
        v
    }

    /// Kronecker product of coordinate vectors, row-major in the factor indices.
    pub fn kron(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a {
            for y in b {
                out.push(if x.is_zero() || y.is_zero() { Scalar::zero() } else { self.mul(x, y) });
            }
        }
        out
    }

    /// Parses `"p/q"`, `"p"`, or a bare integer, then reduces into the field.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Input(format!("malformed scalar `{s}`"));
        let raw = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Scalar::new(n, d)
            }
            None => Scalar::from_integer(s.parse::<BigInt>().map_err(|_| bad())?),
        };
        self.import(&raw)
    }

    /// `"p/q"` (or `"p"` when `q = 1`) over the rationals; the reduced residue over `F_p`.
    pub fn format(&self, x: &Scalar) -> String {
        if x.denom().is_one() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }

    pub fn format_vec(&self, v: &[Scalar]) -> Vec<String> {
        v.iter().map(|x| self.format(x)).collect()
    }

    /// Whether a rational lies in the canonical range for this field.
    pub fn is_canonical(&self, x: &Scalar) -> bool {
        match self {
            Field::Rationals => x.denom().is_positive(),
            Field::PrimeField { p } => x.denom().is_one() && !x.numer().is_negative() && x.numer() < &BigInt::from(*p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::PrimeField { p } => write!(f, "fp:{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(p: u64) -> Vec<Scalar> {
        let f = Field::prime(p).unwrap();
        (0..p as i64).map(|i| f.from_i64(i)).collect()
    }

    #[test]
    fn prime_field_axioms_exhaustive() {
        for p in [2u64, 3, 5, 7] {
            let f = Field::prime(p).unwrap();
            let els = all(p);
            for a in &els {
                assert_eq!(f.add(a, &f.zero()), *a);
                assert_eq!(f.mul(a, &f.one()), *a);
                assert!(f.is_zero(&f.add(a, &f.neg(a))));
                if !a.is_zero() {
                    assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
                }
                for b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert!(f.is_canonical(&f.mul(a, b)));
                    for c in &els {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_format() {
        let q = Field::Rationals;
        assert_eq!(q.format(&q.parse("6/4").unwrap()), "3/2");
        assert_eq!(q.format(&q.parse("-2/-1").unwrap()), "2");
        assert_eq!(q.format(&q.parse("3/-6").unwrap()), "-1/2");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.format(&f5.parse("-1").unwrap()), "4");
        assert_eq!(f5.format(&f5.parse("1/2").unwrap()), "3");
        assert!(f5.parse("1/5").is_err());
        assert!(q.parse("1/0").is_err());
        assert!(Field::prime(4).is_err());
        assert_eq!(Field::parse_flag("fp:7").unwrap(), Field::PrimeField { p: 7 });
        assert!(Field::parse_flag("fp:9").is_err());
    }
}
