use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{ensure_same, Scalar, Semiring};

use super::{FinSupp, Key};

/// A column vector in `R^N` with componentwise operations. `N = 0` is the
/// one-point space.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseVec<S: Semiring> {
    ring: S,
    entries: Vec<S::Elem>,
}

impl<S: Semiring> DenseVec<S> {
    pub fn new(ring: S, entries: Vec<S::Elem>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|e| !ring.contains(e)) {
            return Err(Error::NotInCarrier {
                value: format!("{bad:?}"),
                semiring: ring.name(),
            });
        }
        Ok(Self { ring, entries })
    }

    pub(crate) fn new_unchecked(ring: S, entries: Vec<S::Elem>) -> Self {
        Self { ring, entries }
    }

    pub fn from_scalars(ring: &S, scalars: &[Scalar<S>]) -> Result<Self> {
        for s in scalars {
            ensure_same(ring, s.ring())?;
        }
        Ok(Self {
            ring: ring.clone(),
            entries: scalars.iter().map(|s| s.value().clone()).collect(),
        })
    }

    pub fn zero(ring: &S, dim: usize) -> Self {
        Self {
            ring: ring.clone(),
            entries: vec![ring.zero(); dim],
        }
    }

    /// Parses `[a1,...,aN]`.
    pub fn parse(ring: &S, text: &str) -> Result<Self> {
        let body = super::strip_delims(text, '[', ']')?;
        let entries = super::split_items(body)
            .map(|item| {
                ring.parse(item).ok_or_else(|| Error::Literal {
                    input: text.to_string(),
                    reason: format!("`{item}` is not an element of {}", ring.name()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(ring.clone(), entries))
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[S::Elem] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S::Elem> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.ring, &other.ring)?;
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(s, t)| self.ring.add(s, t))
            .collect();
        Ok(Self::new_unchecked(self.ring.clone(), entries))
    }

    pub fn scale(&self, a: &Scalar<S>) -> Result<Self> {
        ensure_same(&self.ring, a.ring())?;
        Ok(self.scale_by(a.value()))
    }

    /// Scaling by a raw element already known to lie in this semiring.
    pub fn scale_by(&self, a: &S::Elem) -> Self {
        let entries = self.entries.iter().map(|s| self.ring.mul(a, s)).collect();
        Self::new_unchecked(self.ring.clone(), entries)
    }

    /// The map `[s_1..s_N] ↦ (n ↦ s_n)` onto `R^{1..N}`.
    pub fn to_finsupp(&self) -> FinSupp<S, Key> {
        FinSupp::from_canonical(
            self.ring.clone(),
            self.entries
                .iter()
                .enumerate()
                .filter(|(_, e)| !self.ring.is_zero(e))
                .map(|(i, e)| (Key::Int(i as i64 + 1), e.clone()))
                .collect(),
        )
    }
}

impl<S: Semiring> fmt::Display for DenseVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.ring.format(e))?;
        }
        f.write_str("]")
    }
}

impl<S: Semiring> fmt::Debug for DenseVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ring.name(), self)
    }
}

pub fn dense_add<S: Semiring>(s: &DenseVec<S>, t: &DenseVec<S>) -> Result<DenseVec<S>> {
    s.add(t)
}

pub fn dense_scale<S: Semiring>(a: &Scalar<S>, s: &DenseVec<S>) -> Result<DenseVec<S>> {
    s.scale(a)
}

pub fn dense_to_finsupp<S: Semiring>(s: &DenseVec<S>) -> FinSupp<S, Key> {
    s.to_finsupp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::GfP;
    use crate::{Integers, NonNegRationals};

    #[test]
    fn gf2_sum() {
        let gf2 = GfP::new(2).unwrap();
        let s = DenseVec::parse(&gf2, "[1,0]").unwrap();
        let t = DenseVec::parse(&gf2, "[1,1]").unwrap();
        assert_eq!(dense_add(&s, &t).unwrap().to_string(), "[0,1]");
    }

    #[test]
    fn zero_dimensional() {
        let gf2 = GfP::new(2).unwrap();
        let e = DenseVec::parse(&gf2, "[]").unwrap();
        assert_eq!(e.dim(), 0);
        assert_eq!(dense_add(&e, &e).unwrap(), e);
        assert_eq!(e.to_string(), "[]");
    }

    #[test]
    fn nonneg_sum() {
        let r = NonNegRationals::default();
        let s = DenseVec::parse(&r, "[1,2,0]").unwrap();
        let t = DenseVec::parse(&r, "[0,1,5]").unwrap();
        assert_eq!(dense_add(&s, &t).unwrap().to_string(), "[1,3,5]");
    }

    #[test]
    fn scaling() {
        let gf3 = GfP::new(3).unwrap();
        let s = DenseVec::parse(&gf3, "[1,2]").unwrap();
        assert_eq!(
            dense_scale(&gf3.scalar(2).unwrap(), &s)
                .unwrap()
                .to_string(),
            "[2,1]"
        );
        assert!(dense_scale(&gf3.scalar(0).unwrap(), &s).unwrap().is_zero());

        let z = Integers::default();
        let s = DenseVec::parse(&z, "[3,-4]").unwrap();
        assert_eq!(
            dense_scale(&z.parse_scalar("-1").unwrap(), &s)
                .unwrap()
                .to_string(),
            "[-3,4]"
        );
    }

    #[test]
    fn mismatches() {
        let gf2 = GfP::new(2).unwrap();
        let a = DenseVec::zero(&gf2, 2);
        let b = DenseVec::zero(&gf2, 3);
        assert_eq!(
            a.add(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        let c = DenseVec::zero(&GfP::new(3).unwrap(), 2);
        assert!(matches!(a.add(&c), Err(Error::DomainMismatch { .. })));
        assert!(matches!(
            a.scale(&GfP::new(3).unwrap().scalar(1).unwrap()),
            Err(Error::DomainMismatch { .. })
        ));
        assert!(DenseVec::parse(&gf2, "[0,2]").is_err());
        assert!(DenseVec::new(gf2, vec![0, 5]).is_err());
    }
}
