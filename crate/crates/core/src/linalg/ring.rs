use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// A prime number, validated at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// The exact scalar domain of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientRing {
    Integers,
    Rationals,
    PrimeField(Prime),
}

impl CoefficientRing {
    pub fn fp(p: u64) -> Result<Self, LinalgError> {
        Ok(CoefficientRing::PrimeField(Prime::new(p)?))
    }

    pub fn f2() -> Self {
        CoefficientRing::PrimeField(Prime(2))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientRing::PrimeField(p) => p.0,
            _ => 0,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientRing::Integers)
    }

    /// Whether `n` is invertible.
    pub fn inverts(&self, n: i64) -> bool {
        match self {
            CoefficientRing::Integers => n == 1 || n == -1,
            CoefficientRing::Rationals => n != 0,
            CoefficientRing::PrimeField(p) => n.rem_euclid(p.0 as i64) != 0,
        }
    }

    /// Whether `n` is zero.
    pub fn kills(&self, n: i64) -> bool {
        match self {
            CoefficientRing::PrimeField(p) => n.rem_euclid(p.0 as i64) == 0,
            _ => n == 0,
        }
    }

    pub fn name(&self) -> String {
        match self {
            CoefficientRing::Integers => "Z".into(),
            CoefficientRing::Rationals => "Q".into(),
            CoefficientRing::PrimeField(p) => format!("F{}", p.0),
        }
    }

    pub fn parse(s: &str) -> Result<Self, LinalgError> {
        match s {
            "Z" | "z" => Ok(CoefficientRing::Integers),
            "Q" | "q" => Ok(CoefficientRing::Rationals),
            _ => {
                let digits = s
                    .strip_prefix('F')
                    .or_else(|| s.strip_prefix('f'))
                    .ok_or_else(|| LinalgError::UnknownRing(s.to_string()))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| LinalgError::UnknownRing(s.to_string()))?;
                CoefficientRing::fp(p)
            }
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A Euclidean domain with exact arithmetic. Fields are Euclidean with every
/// nonzero element a unit.
pub trait Euclidean: Clone + Send + Sync {
    type E: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_i64(&self, x: i64) -> Self::E;
    fn from_bigint(&self, x: &BigInt) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn is_unit(&self, a: &Self::E) -> bool;
    fn inv(&self, a: &Self::E) -> Self::E;
    /// Euclidean division `a = q b + r` with `r` smaller than `b`.
    fn div_rem(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E);
    /// Compares Euclidean sizes.
    fn cmp_size(&self, a: &Self::E, b: &Self::E) -> Ordering;
    /// Unit `u` such that `u a` is the canonical associate of `a`.
    fn normal_unit(&self, a: &Self::E) -> Self::E;
    /// Canonical representative of `a` modulo the ideal `(m)`.
    fn reduce_mod(&self, a: &Self::E, m: &Self::E) -> Self::E;
    fn to_rational(&self, a: &Self::E) -> BigRational;
    fn to_bigint(&self, a: &Self::E) -> BigInt;
    fn kind(&self) -> CoefficientRing;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: Prime) -> Self {
        PrimeField { p: p.0 }
    }
}

impl Euclidean for Integers {
    type E = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }
    fn from_bigint(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn inv(&self, a: &BigInt) -> BigInt {
        assert!(self.is_unit(a), "{a} is not a unit in Z");
        a.clone()
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // Rounded division keeps remainders small in absolute value.
        let (q, r) = a.div_mod_floor(b);
        let r2: BigInt = &r * 2;
        if r2.abs() > b.abs() {
            (q + 1, r - b)
        } else {
            (q, r)
        }
    }
    fn cmp_size(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.abs().cmp(&b.abs())
    }
    fn normal_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn reduce_mod(&self, a: &BigInt, m: &BigInt) -> BigInt {
        if m.is_zero() {
            a.clone()
        } else {
            a.mod_floor(&m.abs())
        }
    }
    fn to_rational(&self, a: &BigInt) -> BigRational {
        BigRational::from_integer(a.clone())
    }
    fn to_bigint(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn kind(&self) -> CoefficientRing {
        CoefficientRing::Integers
    }
}

impl Euclidean for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn from_bigint(&self, x: &BigInt) -> BigRational {
        BigRational::from_integer(x.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn cmp_size(&self, a: &BigRational, b: &BigRational) -> Ordering {
        // Prefer small heights so pivots keep entries short.
        let h = |x: &BigRational| x.numer().abs() + x.denom().abs();
        a.is_zero()
            .cmp(&b.is_zero())
            .reverse()
            .then_with(|| h(a).cmp(&h(b)))
    }
    fn normal_unit(&self, a: &BigRational) -> BigRational {
        if a.is_zero() {
            BigRational::one()
        } else {
            a.recip()
        }
    }
    fn reduce_mod(&self, a: &BigRational, m: &BigRational) -> BigRational {
        if m.is_zero() {
            a.clone()
        } else {
            BigRational::zero()
        }
    }
    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn to_bigint(&self, a: &BigRational) -> BigInt {
        a.to_integer()
    }
    fn kind(&self) -> CoefficientRing {
        CoefficientRing::Rationals
    }
}

impl PrimeField {
    fn inv_u64(&self, a: u64) -> u64 {
        // Fermat inverse.
        let mut result = 1u128;
        let mut base = a as u128 % self.p as u128;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.p as u128;
            }
            base = base * base % self.p as u128;
            e >>= 1;
        }
        result as u64
    }
}

impl Euclidean for PrimeField {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }
    fn from_bigint(&self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        (((x % &p) + &p) % &p).to_u64().expect("reduced residue fits")
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "zero is not invertible");
        self.inv_u64(*a)
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.mul(a, &self.inv_u64(*b)), 0)
    }
    fn cmp_size(&self, a: &u64, b: &u64) -> Ordering {
        (*a != 0).cmp(&(*b != 0))
    }
    fn normal_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            1
        } else {
            self.inv_u64(*a)
        }
    }
    fn reduce_mod(&self, a: &u64, m: &u64) -> u64 {
        if *m == 0 {
            *a
        } else {
            0
        }
    }
    fn to_rational(&self, a: &u64) -> BigRational {
        BigRational::from_integer(BigInt::from(*a))
    }
    fn to_bigint(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }
    fn kind(&self) -> CoefficientRing {
        CoefficientRing::PrimeField(Prime(self.p))
    }
}

/// Runs `$body` with `$r` bound to the concrete ring behind a [`CoefficientRing`].
#[macro_export]
macro_rules! with_ring {
    ($ring:expr, $r:ident => $body:expr) => {
        match $ring {
            $crate::linalg::CoefficientRing::Integers => {
                let $r = &$crate::linalg::Integers;
                $body
            }
            $crate::linalg::CoefficientRing::Rationals => {
                let $r = &$crate::linalg::Rationals;
                $body
            }
            $crate::linalg::CoefficientRing::PrimeField(p) => {
                let $r = &$crate::linalg::PrimeField::new(p);
                $body
            }
        }
    };
}

/// Converts a small integer coefficient, panicking on values that do not fit.
pub fn bigint_to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("coefficient exceeds i64")
}
