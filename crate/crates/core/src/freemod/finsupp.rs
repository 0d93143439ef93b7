use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{ensure_same, Scalar, Semiring};

use super::{DenseVec, Key};

/// A finitely supported map `J → R`, stored sparsely with zeros stripped.
///
/// Because no zero value is ever stored, structural equality is equality of
/// maps.
#[derive(Clone, PartialEq, Eq)]
pub struct FinSupp<S: Semiring, K: Ord = Key> {
    ring: S,
    support: BTreeMap<K, S::Elem>,
}

impl<S: Semiring, K: Ord + Clone + fmt::Display> FinSupp<S, K> {
    pub fn empty(ring: &S) -> Self {
        Self {
            ring: ring.clone(),
            support: BTreeMap::new(),
        }
    }

    pub(crate) fn from_canonical(ring: S, support: BTreeMap<K, S::Elem>) -> Self {
        Self { ring, support }
    }

    /// Builds a map from `(key, value)` pairs. Zero values are dropped,
    /// repeated keys are rejected.
    pub fn from_pairs<I>(ring: &S, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (K, S::Elem)>,
    {
        let mut support = BTreeMap::new();
        for (k, v) in pairs {
            if !ring.contains(&v) {
                return Err(Error::NotInCarrier {
                    value: format!("{v:?}"),
                    semiring: ring.name(),
                });
            }
            if support.contains_key(&k) {
                return Err(Error::DuplicateKey(k.to_string()));
            }
            // zeros stay until the end so repeated keys are still caught
            support.insert(k, v);
        }
        support.retain(|_, v| !ring.is_zero(v));
        Ok(Self {
            ring: ring.clone(),
            support,
        })
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    /// `s_j`, zero off the support.
    pub fn get(&self, key: &K) -> S::Elem {
        self.support
            .get(key)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Stored pairs in ascending key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &S::Elem)> {
        self.support.iter()
    }

    /// No stored value equals zero.
    pub fn is_canonical(&self) -> bool {
        self.support.values().all(|v| !self.ring.is_zero(v))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.ring, &other.ring)?;
        let mut support = self.support.clone();
        for (k, v) in &other.support {
            match support.get_mut(k) {
                Some(mine) => *mine = self.ring.add(mine, v),
                None => {
                    support.insert(k.clone(), v.clone());
                }
            }
        }
        support.retain(|_, v| !self.ring.is_zero(v));
        Ok(Self::from_canonical(self.ring.clone(), support))
    }

    pub fn scale(&self, a: &Scalar<S>) -> Result<Self> {
        ensure_same(&self.ring, a.ring())?;
        Ok(self.scale_by(a.value()))
    }

    pub fn scale_by(&self, a: &S::Elem) -> Self {
        // zero divisors can kill entries even when a != 0
        let support = self
            .support
            .iter()
            .map(|(k, v)| (k.clone(), self.ring.mul(a, v)))
            .filter(|(_, v)| !self.ring.is_zero(v))
            .collect();
        Self::from_canonical(self.ring.clone(), support)
    }
}

impl<S: Semiring> FinSupp<S, Key> {
    /// Parses `{key:value, ...}`. Keys that read as integers become
    /// [`Key::Int`].
    pub fn parse(ring: &S, text: &str) -> Result<Self> {
        let body = super::strip_delims(text, '{', '}')?;
        let bad = |reason: String| Error::Literal {
            input: text.to_string(),
            reason,
        };
        let pairs = super::split_items(body)
            .map(|item| {
                let (k, v) = item
                    .split_once(':')
                    .ok_or_else(|| bad(format!("`{item}` is not a key:value pair")))?;
                let value = ring.parse(v.trim()).ok_or_else(|| {
                    bad(format!(
                        "`{}` is not an element of {}",
                        v.trim(),
                        ring.name()
                    ))
                })?;
                Ok((Key::parse(k.trim()), value))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(ring, pairs)
    }

    /// Inverse of [`DenseVec::to_finsupp`]; keys must be integers in `1..=dim`.
    pub fn to_dense(&self, dim: usize) -> Result<DenseVec<S>> {
        let mut entries = vec![self.ring.zero(); dim];
        for (k, v) in &self.support {
            let slot = match k {
                Key::Int(i) if *i >= 1 && (*i as u64) <= dim as u64 => *i as usize - 1,
                _ => {
                    return Err(Error::KeyOutOfRange {
                        key: k.to_string(),
                        dim,
                    })
                }
            };
            entries[slot] = v.clone();
        }
        Ok(DenseVec::new_unchecked(self.ring.clone(), entries))
    }
}

impl<S: Semiring, K: Ord + fmt::Display> fmt::Display for FinSupp<S, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}:{}", self.ring.format(v))?;
        }
        f.write_str("}")
    }
}

impl<S: Semiring, K: Ord + fmt::Display> fmt::Debug for FinSupp<S, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ring.name(), self)
    }
}

pub fn finsupp_add<S: Semiring, K: Ord + Clone + fmt::Display>(
    s: &FinSupp<S, K>,
    t: &FinSupp<S, K>,
) -> Result<FinSupp<S, K>> {
    s.add(t)
}

pub fn finsupp_scale<S: Semiring, K: Ord + Clone + fmt::Display>(
    a: &Scalar<S>,
    s: &FinSupp<S, K>,
) -> Result<FinSupp<S, K>> {
    s.scale(a)
}

pub fn finsupp_to_dense<S: Semiring>(s: &FinSupp<S, Key>, dim: usize) -> Result<DenseVec<S>> {
    s.to_dense(dim)
}
