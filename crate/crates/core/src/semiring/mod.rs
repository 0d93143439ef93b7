//! Scalar systems.
//!
//! A [`Semiring`] is a value (not just a type) so that runtime-parameterised
//! systems such as `gf(p)` or Cayley-table semirings share one interface with
//! the exact number types. Elements are plain values of [`Semiring::Elem`];
//! [`Scalar`] pairs an element with its owning semiring when operands may come
//! from different systems.

mod axioms;
mod builtin;
mod table;

use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

pub use axioms::{
    check_field, check_ring, check_semiring_axioms, FieldObstruction, FieldReport, Method,
    RingReport, SemiringAxiomReport, SemiringCondition, SemiringConditionOutcome,
};
pub use builtin::{
    Boolean, ExactNumber, Extended, GfP, NonNegative, Numeric, TropicalMinPlus, TruncatedTropical,
};
pub use table::TableSemiring;

/// A set with `0`, `1`, `+` and `·`.
///
/// Implementations promise nothing about the laws; [`check_semiring_axioms`]
/// is the place where those are verified. Built-in systems satisfy them,
/// table semirings may not.
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug;

    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;

    fn one(&self) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Whether `a` is a member of the carrier.
    fn contains(&self, a: &Self::Elem) -> bool;

    fn format(&self, a: &Self::Elem) -> String;

    fn parse(&self, text: &str) -> Option<Self::Elem>;

    /// Every element in canonical order, or `None` for infinite carriers.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Deterministic smoke-test sample. Finite semirings return the carrier.
    fn sample(&self) -> Vec<Self::Elem> {
        self.elements()
            .unwrap_or_else(|| vec![self.zero(), self.one()])
    }

    /// Ring/field classification known a priori for infinite carriers.
    fn known_class(&self) -> Option<KnownClass<Self::Elem>> {
        None
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn scalar(&self, value: Self::Elem) -> Result<Scalar<Self>> {
        Scalar::new(self.clone(), value)
    }

    fn parse_scalar(&self, text: &str) -> Result<Scalar<Self>> {
        let value = self.parse(text.trim()).ok_or_else(|| Error::NotInCarrier {
            value: text.to_string(),
            semiring: self.name(),
        })?;
        self.scalar(value)
    }
}

/// Classification of an infinite built-in, with the witness that refutes
/// each stronger structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownClass<E> {
    /// An element with no additive inverse, if the system is not a ring.
    pub no_additive_inverse: Option<E>,
    /// Why the system is not a field, if it is not.
    pub field_obstruction: Option<FieldObstruction<E>>,
}

pub(crate) fn ensure_same<S: Semiring>(left: &S, right: &S) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DomainMismatch {
            left: left.name(),
            right: right.name(),
        })
    }
}

/// An element tagged with the semiring it lives in.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar<S: Semiring> {
    ring: S,
    value: S::Elem,
}

impl<S: Semiring> Scalar<S> {
    pub fn new(ring: S, value: S::Elem) -> Result<Self> {
        if !ring.contains(&value) {
            return Err(Error::NotInCarrier {
                value: format!("{value:?}"),
                semiring: ring.name(),
            });
        }
        Ok(Self { ring, value })
    }

    pub fn zero(ring: &S) -> Self {
        Self {
            value: ring.zero(),
            ring: ring.clone(),
        }
    }

    pub fn one(ring: &S) -> Self {
        Self {
            value: ring.one(),
            ring: ring.clone(),
        }
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    pub fn value(&self) -> &S::Elem {
        &self.value
    }

    pub fn into_value(self) -> S::Elem {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.value)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.ring, &other.ring)?;
        Ok(Self {
            value: self.ring.add(&self.value, &other.value),
            ring: self.ring.clone(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.ring, &other.ring)?;
        Ok(Self {
            value: self.ring.mul(&self.value, &other.value),
            ring: self.ring.clone(),
        })
    }
}

impl<S: Semiring> fmt::Debug for Scalar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ring.name(), self.ring.format(&self.value))
    }
}

impl<S: Semiring> fmt::Display for Scalar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}

/// `a + b` in the common semiring of both operands.
pub fn scalar_add<S: Semiring>(a: &Scalar<S>, b: &Scalar<S>) -> Result<Scalar<S>> {
    a.add(b)
}

/// `a · b` in the common semiring of both operands.
pub fn scalar_mul<S: Semiring>(a: &Scalar<S>, b: &Scalar<S>) -> Result<Scalar<S>> {
    a.mul(b)
}
