//! Exact field elements: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// Integers modulo a prime `p`.
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    /// Number of elements, `None` for infinite fields.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Maps an integer into the field.
    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    value: r.to_u64().unwrap_or(0),
                    modulus: p,
                }
            }
        }
    }

    /// Maps a rational number into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rational(q.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den.inv().ok_or_else(|| {
                    Error::InvalidInput(format!("denominator of {q} is zero in {self}"))
                })?;
                Ok(&num * &inv)
            }
        }
    }

    /// Parses `"a/b"`, `"a"`, or `"k mod p"`.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some((value, modulus)) = s.split_once("mod") {
            let modulus: u64 = modulus
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad modulus in {s:?}")))?;
            if self != Field::Prime(modulus) {
                return Err(Error::InvalidInput(format!(
                    "scalar {s:?} does not belong to {self}"
                )));
            }
            let v: BigInt = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad residue in {s:?}")))?;
            return Ok(self.from_bigint(&v));
        }
        let q = parse_rational(s)?;
        self.from_rational(&q)
    }

    /// Enumerates the field elements in a fixed order (finite fields only).
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(move |v| Scalar::Modular { value: v, modulus: p })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("cannot parse scalar {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A field element. Residues carry their modulus so arithmetic needs no context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, for `Q` scalars.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// Height used to order search candidates: |numerator| + denominator, or the residue.
    pub fn height(&self) -> BigInt {
        match self {
            Scalar::Rational(q) => q.numer().abs() + q.denom(),
            Scalar::Modular { value, .. } => BigInt::from(*value),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: ((*a as u128 + *b as u128) % m as u128) as u64,
                    modulus: m,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: ((*a as u128 + m as u128 - *b as u128) % m as u128) as u64,
                    modulus: m,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: ((*a as u128 * *b as u128) % m as u128) as u64,
                    modulus: m,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
