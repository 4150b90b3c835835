//! Exact scalar arithmetic over Q and over prime fields F_p.
//!
//! Rationals use arbitrary-precision integers, so iterated row reduction
//! cannot overflow.  Prime-field residues live in `[0, p)` on a `u64`.
//! Scalars are immutable values and always stored in canonical form:
//! lowest terms with positive denominator over Q, reduced residues mod p.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which exact field scalars live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    /// The rational numbers.
    Rationals,
    /// The prime field F_p.  The modulus is checked prime at construction.
    PrimeField(u64),
}

impl FieldDescriptor {
    /// The rationals.
    pub fn rationals() -> Self {
        FieldDescriptor::Rationals
    }

    /// The prime field F_p.  Primality is tested by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldDescriptor::PrimeField(p))
    }

    /// 0 for the rationals, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
        }
    }

    /// `None` means infinite.
    pub fn cardinality(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::PrimeField(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> FieldScalar {
        match self {
            FieldDescriptor::Rationals => FieldScalar::Rational(BigRational::zero()),
            FieldDescriptor::PrimeField(p) => FieldScalar::Modular(0, *p),
        }
    }

    pub fn one(&self) -> FieldScalar {
        match self {
            FieldDescriptor::Rationals => FieldScalar::Rational(BigRational::one()),
            FieldDescriptor::PrimeField(p) => FieldScalar::Modular(1 % *p, *p),
        }
    }

    /// Scalar from a signed integer.
    pub fn from_i64(&self, v: i64) -> FieldScalar {
        match self {
            FieldDescriptor::Rationals => FieldScalar::Rational(BigRational::from(BigInt::from(v))),
            FieldDescriptor::PrimeField(p) => {
                let p_i = *p as i128;
                let r = ((v as i128 % p_i) + p_i) % p_i;
                FieldScalar::Modular(r as u64, *p)
            }
        }
    }

    /// Rational n/d over Q, or the residue of n·d⁻¹ over F_p.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldScalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Canonical enumeration of the field.
    ///
    /// F_p yields 0, 1, …, p−1 exactly once.  Q yields the unbounded
    /// canonical sequence 0, 1, −1, 2, −2, 1/2, −1/2, … ordered by height
    /// max(|num|, den), then denominator, then |num|, positive first.
    pub fn enumerate(&self) -> FieldEnumeration {
        FieldEnumeration {
            descriptor: *self,
            state: match self {
                FieldDescriptor::Rationals => EnumState::Rational {
                    height: 1,
                    den: 1,
                    abs_num: 0,
                    negative: false,
                },
                FieldDescriptor::PrimeField(_) => EnumState::Prime { next: 0 },
            },
        }
    }

    /// The first `k` elements of the canonical enumeration.
    ///
    /// Errors with `FieldTooSmall` if the field has fewer than `k` elements.
    pub fn first_elements(&self, k: usize) -> Result<Vec<FieldScalar>> {
        if let Some(card) = self.cardinality() {
            if (card as u128) < k as u128 {
                return Err(Error::FieldTooSmall {
                    cardinality: card,
                    needed: k as u64,
                });
            }
        }
        Ok(self.enumerate().take(k).collect())
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "F{}", p),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element carrying its field.
///
/// Rationals are stored in lowest terms with positive denominator (the
/// `BigRational` canonical form); prime-field values as residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldScalar {
    Rational(BigRational),
    Modular(u64, u64),
}

impl FieldScalar {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldScalar::Rational(_) => FieldDescriptor::Rationals,
            FieldScalar::Modular(_, p) => FieldDescriptor::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Modular(r, _) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Modular(r, _) => *r == 1,
        }
    }

    fn binop(
        &self,
        other: &FieldScalar,
        q: impl Fn(&BigRational, &BigRational) -> BigRational,
        m: impl Fn(u64, u64, u64) -> u64,
    ) -> Result<FieldScalar> {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                Ok(FieldScalar::Rational(q(a, b)))
            }
            (FieldScalar::Modular(a, p), FieldScalar::Modular(b, p2)) if p == p2 => {
                Ok(FieldScalar::Modular(m(*a, *b, *p), *p))
            }
            _ => Err(Error::MixedFields(
                self.descriptor().to_string(),
                other.descriptor().to_string(),
            )),
        }
    }

    pub fn checked_add(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.binop(other, |a, b| a + b, |a, b, p| {
            let s = (a as u128 + b as u128) % p as u128;
            s as u64
        })
    }

    pub fn checked_sub(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.binop(other, |a, b| a - b, |a, b, p| {
            let s = (a as u128 + p as u128 - b as u128) % p as u128;
            s as u64
        })
    }

    pub fn checked_mul(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.binop(other, |a, b| a * b, |a, b, p| {
            (a as u128 * b as u128 % p as u128) as u64
        })
    }

    pub fn checked_div(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn checked_inv(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Modular(r, p) => FieldScalar::Modular(mod_inverse(*r, *p), *p),
        })
    }

    /// Infallible operations for contexts where both operands are known to
    /// share a field (all internal linear algebra).  Panics on mixed fields.
    pub fn add(&self, other: &FieldScalar) -> FieldScalar {
        self.checked_add(other).expect("mixed fields")
    }

    pub fn sub(&self, other: &FieldScalar) -> FieldScalar {
        self.checked_sub(other).expect("mixed fields")
    }

    pub fn mul(&self, other: &FieldScalar) -> FieldScalar {
        self.checked_mul(other).expect("mixed fields")
    }

    pub fn neg(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(-r),
            FieldScalar::Modular(r, p) => FieldScalar::Modular(if *r == 0 { 0 } else { p - r }, *p),
        }
    }

    /// Parse from the serialized string form: "num/den" or "num" over Q,
    /// a decimal residue over F_p.
    pub fn parse(s: &str, desc: &FieldDescriptor) -> Result<FieldScalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar {:?} over {}", s, desc));
        match desc {
            FieldDescriptor::Rationals => {
                let (num_s, den_s) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num_s.trim().parse().map_err(|_| bad())?;
                let den: BigInt = den_s.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldScalar::Rational(BigRational::new(num, den)))
            }
            FieldDescriptor::PrimeField(p) => {
                // Accept an optional sign and arbitrary magnitude; reduce mod p.
                let (neg, digits) = match s.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, s.strip_prefix('+').unwrap_or(s)),
                };
                let mut r: u64 = 0;
                if digits.is_empty() {
                    return Err(bad());
                }
                for ch in digits.chars() {
                    let d = ch.to_digit(10).ok_or_else(bad)? as u64;
                    r = ((r as u128 * 10 + d as u128) % *p as u128) as u64;
                }
                if neg && r != 0 {
                    r = p - r;
                }
                Ok(FieldScalar::Modular(r, *p))
            }
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldScalar::Modular(r, _) => write!(f, "{}", r),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p), p prime, a != 0 mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "modulus not coprime to operand");
    (((s0 % p as i128) + p as i128) % p as i128) as u64
}

/// Iterator over the canonical field enumeration, see
/// [`FieldDescriptor::enumerate`].
pub struct FieldEnumeration {
    descriptor: FieldDescriptor,
    state: EnumState,
}

#[derive(Clone, Copy)]
enum EnumState {
    Prime { next: u64 },
    Rational { height: u64, den: u64, abs_num: u64, negative: bool },
    Done,
}

impl Iterator for FieldEnumeration {
    type Item = FieldScalar;

    fn next(&mut self) -> Option<FieldScalar> {
        loop {
            match self.state {
                EnumState::Done => return None,
                EnumState::Prime { next } => {
                    let p = match self.descriptor {
                        FieldDescriptor::PrimeField(p) => p,
                        _ => unreachable!(),
                    };
                    if next >= p {
                        self.state = EnumState::Done;
                        return None;
                    }
                    self.state = EnumState::Prime { next: next + 1 };
                    return Some(FieldScalar::Modular(next, p));
                }
                EnumState::Rational { height, den, abs_num, negative } => {
                    self.state = rational_successor(height, den, abs_num, negative);
                    // The cursor walks every (den, |num|, sign) cell of each
                    // height block; only canonical representatives are emitted.
                    let canonical = abs_num.max(den) == height
                        && gcd(abs_num, den) == 1
                        && !(abs_num == 0 && negative);
                    if canonical {
                        let mut num = BigInt::from(abs_num);
                        if negative {
                            num = -num;
                        }
                        return Some(FieldScalar::Rational(BigRational::new(
                            num,
                            BigInt::from(den),
                        )));
                    }
                }
            }
        }
    }
}

fn rational_successor(height: u64, den: u64, abs_num: u64, negative: bool) -> EnumState {
    if !negative && abs_num != 0 {
        EnumState::Rational { height, den, abs_num, negative: true }
    } else if abs_num < height {
        EnumState::Rational { height, den, abs_num: abs_num + 1, negative: false }
    } else if den < height {
        EnumState::Rational { height, den: den + 1, abs_num: 0, negative: false }
    } else {
        EnumState::Rational { height: height + 1, den: 1, abs_num: 0, negative: false }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Deterministic pseudo-random scalar for sampled checks: small height over
/// Q, uniform residue over F_p.
pub fn random_scalar<R: rand::Rng>(rng: &mut R, desc: &FieldDescriptor) -> FieldScalar {
    match desc {
        FieldDescriptor::Rationals => {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=9);
            desc.from_ratio(num, den).expect("nonzero denominator")
        }
        FieldDescriptor::PrimeField(p) => FieldScalar::Modular(rng.gen_range(0..*p), *p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = FieldDescriptor::rationals();
        let half = q.from_ratio(1, 2).unwrap();
        let third = q.from_ratio(1, 3).unwrap();
        let sum = half.checked_add(&third).unwrap();
        assert_eq!(sum, q.from_ratio(5, 6).unwrap());
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn rational_constructed_in_lowest_terms() {
        let q = FieldDescriptor::rationals();
        assert_eq!(q.from_ratio(2, 4).unwrap(), q.from_ratio(1, 2).unwrap());
        assert_eq!(q.from_ratio(3, -6).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn inverse_in_f7() {
        let f7 = FieldDescriptor::prime(7).unwrap();
        let three = f7.from_i64(3);
        assert_eq!(three.checked_inv().unwrap(), f7.from_i64(5));
    }

    #[test]
    fn division_by_zero_reported() {
        let q = FieldDescriptor::rationals();
        assert_eq!(q.one().checked_div(&q.zero()), Err(Error::DivisionByZero));
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert_eq!(f5.one().checked_inv().is_ok(), true);
        assert_eq!(f5.zero().checked_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_reported() {
        let q = FieldDescriptor::rationals();
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert!(matches!(
            q.one().checked_add(&f5.one()),
            Err(Error::MixedFields(_, _))
        ));
    }

    #[test]
    fn primality_checked_at_construction() {
        assert!(FieldDescriptor::prime(2).is_ok());
        assert!(FieldDescriptor::prime(97).is_ok());
        assert_eq!(FieldDescriptor::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldDescriptor::prime(6), Err(Error::NotPrime(6)));
        assert_eq!(FieldDescriptor::prime(91), Err(Error::NotPrime(91)));
    }

    #[test]
    fn enumerate_f3_full_residue_set() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let all: Vec<_> = f3.enumerate().collect();
        assert_eq!(all, vec![f3.from_i64(0), f3.from_i64(1), f3.from_i64(2)]);
    }

    #[test]
    fn enumerate_f2() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let all: Vec<_> = f2.enumerate().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], f2.zero());
        assert_eq!(all[1], f2.one());
    }

    #[test]
    fn enumerate_rationals_canonical_prefix() {
        let q = FieldDescriptor::rationals();
        let first: Vec<String> = q.enumerate().take(9).map(|s| s.to_string()).collect();
        assert_eq!(
            first,
            vec!["0", "1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3"]
        );
    }

    #[test]
    fn enumerate_rationals_no_duplicates() {
        let q = FieldDescriptor::rationals();
        let first: Vec<_> = q.enumerate().take(200).collect();
        for (i, a) in first.iter().enumerate() {
            for b in &first[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn scalar_string_round_trip() {
        let q = FieldDescriptor::rationals();
        for s in ["0", "7", "-3", "5/6", "-22/7"] {
            let v = FieldScalar::parse(s, &q).unwrap();
            assert_eq!(v.to_string(), s);
        }
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert_eq!(FieldScalar::parse("7", &f5).unwrap(), f5.from_i64(2));
        assert_eq!(FieldScalar::parse("-1", &f5).unwrap(), f5.from_i64(4));
    }
}
