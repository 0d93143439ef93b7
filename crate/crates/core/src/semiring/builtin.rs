use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FieldObstruction, KnownClass, Semiring};
use crate::error::{Error, Result};

/// The prime field `Z/pZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GfP {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GfP {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Semiring for GfP {
    type Elem = u64;

    fn name(&self) -> String {
        format!("gf({})", self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.p
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> Option<u64> {
        text.parse().ok().filter(|a| self.contains(a))
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
}

/// `({0, 1}, or, and)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Boolean;

impl Semiring for Boolean {
    type Elem = bool;

    fn name(&self) -> String {
        "boolean".into()
    }

    fn zero(&self) -> bool {
        false
    }

    fn one(&self) -> bool {
        true
    }

    fn add(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }

    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }

    fn contains(&self, _: &bool) -> bool {
        true
    }

    fn format(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.into()
    }

    fn parse(&self, text: &str) -> Option<bool> {
        match text {
            "0" | "false" => Some(false),
            "1" | "true" => Some(true),
            _ => None,
        }
    }

    fn elements(&self) -> Option<Vec<bool>> {
        Some(vec![false, true])
    }
}

/// Exact number types usable as the carrier of [`Numeric`].
pub trait ExactNumber:
    Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Zero
    + One
    + std::ops::Add<Output = Self>
    + std::ops::Mul<Output = Self>
{
    const NAME: &'static str;

    fn known_class() -> KnownClass<Self>;

    fn sample() -> Vec<Self>;
}

impl ExactNumber for BigInt {
    const NAME: &'static str = "integers";

    fn known_class() -> KnownClass<Self> {
        KnownClass {
            no_additive_inverse: None,
            field_obstruction: Some(FieldObstruction::NoInverse { a: BigInt::from(2) }),
        }
    }

    fn sample() -> Vec<Self> {
        [-3, -2, -1, 0, 1, 2, 5]
            .into_iter()
            .map(BigInt::from)
            .collect()
    }
}

impl ExactNumber for BigUint {
    const NAME: &'static str = "naturals";

    fn known_class() -> KnownClass<Self> {
        KnownClass {
            no_additive_inverse: Some(BigUint::one()),
            field_obstruction: Some(FieldObstruction::NotRing),
        }
    }

    fn sample() -> Vec<Self> {
        [0u32, 1, 2, 3, 7].into_iter().map(BigUint::from).collect()
    }
}

impl ExactNumber for BigRational {
    const NAME: &'static str = "rationals";

    fn known_class() -> KnownClass<Self> {
        KnownClass {
            no_additive_inverse: None,
            field_obstruction: None,
        }
    }

    fn sample() -> Vec<Self> {
        [(-3, 2), (-1, 1), (0, 1), (1, 3), (1, 1), (2, 1), (5, 4)]
            .into_iter()
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect()
    }
}

/// The semiring carried by an exact number type with its usual `+` and `·`.
pub struct Numeric<T>(PhantomData<T>);

impl<T> Default for Numeric<T> {
    fn default() -> Self {
        Self(PhantomData)
    }
}

impl<T> Clone for Numeric<T> {
    fn clone(&self) -> Self {
        Self::default()
    }
}

impl<T> PartialEq for Numeric<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T: ExactNumber> fmt::Debug for Numeric<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(T::NAME)
    }
}

impl<T: ExactNumber> Semiring for Numeric<T> {
    type Elem = T;

    fn name(&self) -> String {
        T::NAME.into()
    }

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn contains(&self, _: &T) -> bool {
        true
    }

    fn format(&self, a: &T) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> Option<T> {
        text.parse().ok()
    }

    fn sample(&self) -> Vec<T> {
        T::sample()
    }

    fn known_class(&self) -> Option<KnownClass<T>> {
        Some(T::known_class())
    }
}

/// The non-negative part of an ordered exact number system.
pub struct NonNegative<T>(PhantomData<T>);

impl<T> Default for NonNegative<T> {
    fn default() -> Self {
        Self(PhantomData)
    }
}

impl<T> Clone for NonNegative<T> {
    fn clone(&self) -> Self {
        Self::default()
    }
}

impl<T> PartialEq for NonNegative<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T: ExactNumber> fmt::Debug for NonNegative<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nonneg-{}", T::NAME)
    }
}

impl<T: ExactNumber> Semiring for NonNegative<T> {
    type Elem = T;

    fn name(&self) -> String {
        format!("nonneg-{}", T::NAME)
    }

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn add(&self, a: &T, b: &T) -> T {
        a.clone() + b.clone()
    }

    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }

    fn contains(&self, a: &T) -> bool {
        *a >= T::zero()
    }

    fn format(&self, a: &T) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> Option<T> {
        text.parse().ok().filter(|a| self.contains(a))
    }

    fn sample(&self) -> Vec<T> {
        T::sample()
            .into_iter()
            .filter(|a| self.contains(a))
            .collect()
    }

    fn known_class(&self) -> Option<KnownClass<T>> {
        Some(KnownClass {
            no_additive_inverse: Some(T::one()),
            field_obstruction: Some(FieldObstruction::NotRing),
        })
    }
}

/// A number extended with `+inf`, ordered so that `inf` is the greatest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    Finite(T),
    Infinity,
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => v.fmt(f),
            Extended::Infinity => f.write_str("inf"),
        }
    }
}

fn parse_extended<T: FromStr>(text: &str) -> Option<Extended<T>> {
    match text {
        "inf" | "+inf" => Some(Extended::Infinity),
        _ => text.parse().ok().map(Extended::Finite),
    }
}

/// `(T ∪ {+inf}, min, +)` with zero `+inf` and one `0`.
pub struct TropicalMinPlus<T>(PhantomData<T>);

impl<T> Default for TropicalMinPlus<T> {
    fn default() -> Self {
        Self(PhantomData)
    }
}

impl<T> Clone for TropicalMinPlus<T> {
    fn clone(&self) -> Self {
        Self::default()
    }
}

impl<T> PartialEq for TropicalMinPlus<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> fmt::Debug for TropicalMinPlus<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("tropical-min-plus")
    }
}

impl<T: ExactNumber> Semiring for TropicalMinPlus<T> {
    type Elem = Extended<T>;

    fn name(&self) -> String {
        "tropical-min-plus".into()
    }

    fn zero(&self) -> Extended<T> {
        Extended::Infinity
    }

    fn one(&self) -> Extended<T> {
        Extended::Finite(T::zero())
    }

    fn add(&self, a: &Extended<T>, b: &Extended<T>) -> Extended<T> {
        a.clone().min(b.clone())
    }

    fn mul(&self, a: &Extended<T>, b: &Extended<T>) -> Extended<T> {
        match (a, b) {
            (Extended::Finite(x), Extended::Finite(y)) => Extended::Finite(x.clone() + y.clone()),
            _ => Extended::Infinity,
        }
    }

    fn contains(&self, _: &Extended<T>) -> bool {
        true
    }

    fn format(&self, a: &Extended<T>) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> Option<Extended<T>> {
        parse_extended(text)
    }

    fn sample(&self) -> Vec<Extended<T>> {
        let mut out: Vec<_> = T::sample().into_iter().map(Extended::Finite).collect();
        out.push(Extended::Infinity);
        out
    }

    fn known_class(&self) -> Option<KnownClass<Extended<T>>> {
        Some(KnownClass {
            no_additive_inverse: Some(self.one()),
            field_obstruction: Some(FieldObstruction::NotRing),
        })
    }
}

/// Min-plus on `{0, 1, ..., cap, inf}` where products above `cap` saturate to `inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncatedTropical {
    cap: u32,
}

impl TruncatedTropical {
    pub fn new(cap: u32) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }
}

impl Semiring for TruncatedTropical {
    type Elem = Extended<u32>;

    fn name(&self) -> String {
        format!("tropical-truncated({})", self.cap)
    }

    fn zero(&self) -> Extended<u32> {
        Extended::Infinity
    }

    fn one(&self) -> Extended<u32> {
        Extended::Finite(0)
    }

    fn add(&self, a: &Extended<u32>, b: &Extended<u32>) -> Extended<u32> {
        (*a).min(*b)
    }

    fn mul(&self, a: &Extended<u32>, b: &Extended<u32>) -> Extended<u32> {
        match (a, b) {
            (Extended::Finite(x), Extended::Finite(y)) if x + y <= self.cap => {
                Extended::Finite(x + y)
            }
            _ => Extended::Infinity,
        }
    }

    fn contains(&self, a: &Extended<u32>) -> bool {
        match a {
            Extended::Finite(x) => *x <= self.cap,
            Extended::Infinity => true,
        }
    }

    fn format(&self, a: &Extended<u32>) -> String {
        a.to_string()
    }

    fn parse(&self, text: &str) -> Option<Extended<u32>> {
        parse_extended(text).filter(|a| self.contains(a))
    }

    fn elements(&self) -> Option<Vec<Extended<u32>>> {
        let mut out: Vec<_> = (0..=self.cap).map(Extended::Finite).collect();
        out.push(Extended::Infinity);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_guard() {
        assert!(GfP::new(2).is_ok());
        assert!(GfP::new(7919).is_ok());
        for n in [0, 1, 4, 9, 91] {
            assert_eq!(GfP::new(n), Err(Error::NotPrime(n)));
        }
    }

    #[test]
    fn truncated_tropical_saturates() {
        let t = TruncatedTropical::new(3);
        assert_eq!(
            t.mul(&Extended::Finite(2), &Extended::Finite(2)),
            Extended::Infinity
        );
        assert_eq!(
            t.mul(&Extended::Finite(1), &Extended::Finite(2)),
            Extended::Finite(3)
        );
        assert_eq!(
            t.add(&Extended::Finite(1), &Extended::Infinity),
            Extended::Finite(1)
        );
        assert_eq!(t.elements().unwrap().len(), 5);
        assert_eq!(t.parse("4"), None);
    }

    #[test]
    fn nonneg_membership() {
        let r = NonNegative::<BigRational>::default();
        assert!(r.parse("3/2").is_some());
        assert!(r.parse("-3/2").is_none());
        assert!(r.sample().iter().all(|a| r.contains(a)));
    }
}
