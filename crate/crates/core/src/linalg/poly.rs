//! Univariate polynomials over a [`Field`] and root extraction.
//!
//! Only the factorization needed for splitting semisimple algebras is provided:
//! linear factors over `Q` (rational root theorem on the square-free part) and
//! over `F_p` (enumeration for small `p`, otherwise `gcd(x^p - x, f)` followed by
//! Cantor–Zassenhaus splitting).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Coefficients are stored lowest degree first; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

/// Largest prime for which roots are found by plain enumeration.
const ENUMERATION_LIMIT: u64 = 1 << 16;
/// Trial division bound used to factor constant and leading coefficients over `Q`.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn constant(c: Scalar) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// The monic linear polynomial `x - r`.
    pub fn linear(r: &Scalar) -> Poly {
        let f = r.field();
        Poly::new(f, vec![-r, f.one()])
    }

    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(self.field), Poly::zero(self.field));
        };
        if nd < dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    /// `base^e mod modulus` by repeated squaring.
    pub fn pow_mod(&self, mut e: BigInt, modulus: &Poly) -> Poly {
        let mut acc = Poly::constant(self.field.one()).rem(modulus);
        let mut base = self.rem(modulus);
        let two = BigInt::from(2);
        while e.is_positive() {
            if e.is_odd() {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e /= &two;
        }
        acc
    }

    /// Largest square-free divisor (monic). Assumes the polynomial is nonzero.
    ///
    /// In characteristic `p` this is only correct when no factor is a `p`-th
    /// power, which holds whenever the degree is below `p`.
    pub fn squarefree_part(&self) -> Poly {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        self.div_rem(&self.gcd(&d)).0.monic()
    }

    /// True when the polynomial is a product of distinct linear factors.
    pub fn splits_into_distinct_linear(&self) -> Result<bool> {
        let Some(deg) = self.degree() else {
            return Ok(false);
        };
        Ok(roots(self)?.len() == deg)
    }
}

fn scalar_order(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
        (Scalar::Modular { value: x, .. }, Scalar::Modular { value: y, .. }) => x.cmp(y),
        _ => std::cmp::Ordering::Equal,
    }
}

/// Distinct roots in the base field, sorted deterministically.
pub fn roots(f: &Poly) -> Result<Vec<Scalar>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let mut found = match f.field() {
        Field::Rationals => rational_roots(f)?,
        Field::Prime(p) => prime_field_roots(f, p),
    };
    found.sort_by(scalar_order);
    found.dedup();
    Ok(found)
}

fn rational_roots(f: &Poly) -> Result<Vec<Scalar>> {
    let field = Field::Rationals;
    let sf = f.squarefree_part();
    // clear denominators
    let mut lcm = BigInt::one();
    for c in sf.coeffs() {
        lcm = lcm.lcm(c.as_rational().unwrap().denom());
    }
    let mut ints: Vec<BigInt> = sf
        .coeffs()
        .iter()
        .map(|c| (c.as_rational().unwrap() * &lcm).to_integer())
        .collect();
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(field.zero());
        let shift = ints.iter().position(|c| !c.is_zero()).unwrap();
        ints.drain(..shift);
    }
    if ints.len() <= 1 {
        return Ok(out);
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let num_divisors = divisors(&a0)?;
    let den_divisors = divisors(&an)?;
    for q in &den_divisors {
        for p in &num_divisors {
            if !p.gcd(q).is_one() {
                continue;
            }
            for sign in [1i32, -1] {
                let p = p * BigInt::from(sign);
                if eval_homogeneous(&ints, &p, q).is_zero() {
                    let r = num_rational::BigRational::new(p.clone(), q.clone());
                    out.push(Scalar::Rational(r));
                }
            }
        }
    }
    Ok(out)
}

/// `q^n f(p/q)` for integer coefficients `f`.
fn eval_homogeneous(coeffs: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for c in coeffs.iter().rev() {
        acc = acc * p + c * &qpow;
        qpow *= q;
    }
    acc
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return Err(Error::FactorizationFailed("zero has no divisor list".into()));
    }
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let limit = BigInt::from(TRIAL_DIVISION_LIMIT);
        if rest > &limit * &limit {
            return Err(Error::FactorizationFailed(format!(
                "cofactor {rest} exceeds the trial division range"
            )));
        }
        factors.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pw = d.clone();
            next.push(pw.clone());
            for _ in 0..e {
                pw *= &p;
                next.push(pw.clone());
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

fn prime_field_roots(f: &Poly, p: u64) -> Vec<Scalar> {
    let field = f.field();
    if p <= ENUMERATION_LIMIT {
        return field
            .elements()
            .expect("finite field")
            .filter(|x| f.eval(x).is_zero())
            .collect();
    }
    let f = f.monic();
    let x = Poly::x(field);
    let xp = x.pow_mod(BigInt::from(p), &f);
    let g = f.gcd(&xp.sub(&x));
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut out = Vec::new();
    split_linear(&g, p, &mut rng, &mut out);
    out
}

/// Splits a monic product of distinct linear factors (odd `p`).
fn split_linear(g: &Poly, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    use rand::Rng;
    let field = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-&g.coeffs()[0]),
        Some(_) => loop {
            let a = field.from_i64(rng.gen_range(0..p as i64));
            let shifted = Poly::new(field, vec![a, field.one()]);
            let h = shifted.pow_mod(BigInt::from((p - 1) / 2), g);
            let d = g.gcd(&h.sub(&Poly::constant(field.one())));
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && Some(dd) < g.degree() {
                let (q, _) = g.div_rem(&d);
                split_linear(&d, p, rng, out);
                split_linear(&q.monic(), p, rng, out);
                return;
            }
        },
    }
}

/// Exact integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(2)..=r + 2).find(|&s| s.checked_mul(s) == Some(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(field: Field, xs: &[i64]) -> Poly {
        Poly::new(field, xs.iter().map(|&x| field.from_i64(x)).collect())
    }

    fn product_of_linears(field: Field, rs: &[i64]) -> Poly {
        rs.iter().fold(Poly::constant(field.one()), |acc, &r| {
            acc.mul(&Poly::linear(&field.from_i64(r)))
        })
    }

    #[test]
    fn rational_roots_of_cubic() {
        let q = Field::Rationals;
        // 2x^3 - 3x^2 - 3x + 2 = (x - 2)(2x - 1)(x + 1)
        let f = poly(q, &[2, -3, -3, 2]);
        let r = roots(&f).unwrap();
        let expect: Vec<Scalar> = ["-1", "1/2", "2"].iter().map(|s| q.parse(s).unwrap()).collect();
        assert_eq!(r, expect);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_roots() {
        let q = Field::Rationals;
        assert!(roots(&poly(q, &[1, 0, 1])).unwrap().is_empty());
        assert!(!poly(q, &[1, 0, 1]).splits_into_distinct_linear().unwrap());
    }

    #[test]
    fn repeated_roots_are_reported_once() {
        let q = Field::Rationals;
        let f = product_of_linears(q, &[3, 3, 0]);
        assert_eq!(roots(&f).unwrap(), vec![q.zero(), q.from_i64(3)]);
    }

    #[test]
    fn large_prime_uses_cantor_zassenhaus() {
        let f = Field::prime(1_000_003).unwrap();
        let g = product_of_linears(f, &[5, 77, 123_456]).mul(&poly(f, &[2, 0, 1]));
        let mut r = roots(&g).unwrap();
        r.retain(|x| !(x * x + f.from_i64(2)).is_zero());
        let expect: Vec<Scalar> = [5, 77, 123_456].iter().map(|&v| f.from_i64(v)).collect();
        assert_eq!(r, expect);
    }

    #[test]
    fn small_prime_enumeration() {
        let f = Field::Prime(5);
        assert_eq!(roots(&poly(f, &[1, 0, 1])).unwrap(), vec![f.from_i64(2), f.from_i64(3)]);
    }

    proptest! {
        #[test]
        fn rational_roots_recovered(rs in proptest::collection::vec(-30i64..30, 1..5)) {
            let q = Field::Rationals;
            let f = product_of_linears(q, &rs);
            let found = roots(&f).unwrap();
            let mut expect: Vec<i64> = rs.clone();
            expect.sort();
            expect.dedup();
            prop_assert_eq!(found.len(), expect.len());
            for r in found {
                prop_assert!(f.eval(&r).is_zero());
            }
        }

        #[test]
        fn div_rem_reconstructs(a in proptest::collection::vec(-9i64..9, 0..6),
                                b in proptest::collection::vec(-9i64..9, 1..4)) {
            let q = Field::Rationals;
            let (a, b) = (poly(q, &a), poly(q, &b));
            prop_assume!(!b.is_zero());
            let (quo, rem) = a.div_rem(&b);
            prop_assert_eq!(quo.mul(&b).add(&rem), a);
            prop_assert!(rem.degree() < b.degree());
        }
    }
}
