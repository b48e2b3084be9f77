//! Exact arithmetic over the base field: ℚ or a prime field 𝔽p.
//!
//! Every computation downstream is exact; there is no floating point anywhere
//! in this crate. Prime fields require p greater than the y-degree of the
//! analyzed polynomial (validated at pipeline entry, not here).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;

/// The coefficient field: the rationals, or 𝔽p for a prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

/// A scalar of the base field. Fp values are stored reduced in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

impl BaseField {
    pub fn zero(&self) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Q(BigRational::zero()),
            BaseField::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Q(BigRational::one()),
            BaseField::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Q(BigRational::from(BigInt::from(n))),
            BaseField::Prime(p) => {
                let r = (n as i128).rem_euclid(*p as i128);
                Scalar::Fp(r as u64)
            }
        }
    }

    /// Maps an exact rational a/b into the field (modular inverse of b over 𝔽p).
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar, Error> {
        match self {
            BaseField::Rationals => Ok(Scalar::Q(BigRational::new(num.clone(), den.clone()))),
            BaseField::Prime(p) => {
                let pn = BigInt::from(*p);
                let n = ((num % &pn) + &pn) % &pn;
                let d = ((den % &pn) + &pn) % &pn;
                let n: u64 = n.try_into().unwrap();
                let d: u64 = d.try_into().unwrap();
                if d == 0 {
                    return Err(Error::InvalidInput(
                        "denominator vanishes modulo p".into(),
                    ));
                }
                Ok(Scalar::Fp(mul_mod(n, inv_mod(d, *p), *p)))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Rationals, Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (BaseField::Prime(p), Scalar::Fp(a), Scalar::Fp(b)) => {
                Scalar::Fp((((*a as u128) + (*b as u128)) % (*p as u128)) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (BaseField::Rationals, Scalar::Q(a)) => Scalar::Q(-a),
            (BaseField::Prime(p), Scalar::Fp(a)) => Scalar::Fp(if *a == 0 { 0 } else { p - a }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Rationals, Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (BaseField::Prime(p), Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(mul_mod(*a, *b, *p)),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, Error> {
        if self.is_zero(a) {
            return Err(Error::ZeroElement);
        }
        Ok(match (self, a) {
            (BaseField::Rationals, Scalar::Q(a)) => Scalar::Q(a.recip()),
            (BaseField::Prime(p), Scalar::Fp(a)) => Scalar::Fp(inv_mod(*a, *p)),
            _ => panic!("scalar/field mismatch"),
        })
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(a) => a.is_zero(),
            Scalar::Fp(a) => *a == 0,
        }
    }

    /// Characteristic constraint of the theory: 0, or a prime exceeding `d`.
    pub fn characteristic_exceeds(&self, d: usize) -> bool {
        match self {
            BaseField::Rationals => true,
            BaseField::Prime(p) => *p > d as u64,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.is_negative() {
                    write!(f, "-{}/{}", q.numer().abs(), q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp(a) => write!(f, "{a}"),
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
