use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::Semiring;
use crate::error::{Error, Result};

#[derive(PartialEq, Eq)]
struct Tables {
    name: String,
    labels: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

/// A finite semiring given by Cayley tables over carrier indices.
///
/// Construction only checks closure; the laws are left to
/// [`check_semiring_axioms`](super::check_semiring_axioms).
#[derive(Clone)]
pub struct TableSemiring {
    inner: Arc<Tables>,
}

impl TableSemiring {
    /// Tables are row-major: `add[a * n + b] = a + b`.
    pub fn new(
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        Self::named("table", labels, add, mul, zero, one)
    }

    pub fn named(
        name: impl Into<String>,
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidTable(format!("duplicate label `{l}`")));
            }
        }
        for (what, t) in [("addition", &add), ("multiplication", &mul)] {
            if t.len() != n * n {
                return Err(Error::InvalidTable(format!(
                    "{what} table has {} entries, expected {}",
                    t.len(),
                    n * n
                )));
            }
            if let Some(pos) = t.iter().position(|&v| v >= n) {
                return Err(Error::InvalidTable(format!(
                    "{what} entry ({}, {}) = {} is outside the carrier",
                    pos / n,
                    pos % n,
                    t[pos]
                )));
            }
        }
        if zero >= n || one >= n {
            return Err(Error::InvalidTable(
                "zero/one index outside the carrier".into(),
            ));
        }
        Ok(Self {
            inner: Arc::new(Tables {
                name: name.into(),
                labels,
                add,
                mul,
                zero,
                one,
            }),
        })
    }

    /// Tabulates a finite semiring. Labels are the formatted elements.
    pub fn from_finite<S: Semiring>(ring: &S) -> Result<Self> {
        let elems = ring
            .elements()
            .ok_or_else(|| Error::NotFinite(ring.name()))?;
        let index: HashMap<&S::Elem, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elems.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                add.push(index[&ring.add(a, b)]);
                mul.push(index[&ring.mul(a, b)]);
            }
        }
        Self::named(
            ring.name(),
            elems.iter().map(|e| ring.format(e)).collect(),
            add,
            mul,
            index[&ring.zero()],
            index[&ring.one()],
        )
    }

    pub fn size(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.inner.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    pub fn add_table(&self) -> &[usize] {
        &self.inner.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.inner.mul
    }

    pub fn zero_index(&self) -> usize {
        self.inner.zero
    }

    pub fn one_index(&self) -> usize {
        self.inner.one
    }

    /// Additive inverse of `a`, if any (smallest index first).
    pub fn negate(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.add(&a, &b) == self.inner.zero)
    }
}

impl PartialEq for TableSemiring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for TableSemiring {}

impl fmt::Debug for TableSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.inner.name, self.inner.labels)
    }
}

impl Semiring for TableSemiring {
    type Elem = usize;

    fn name(&self) -> String {
        self.inner.name.clone()
    }

    fn zero(&self) -> usize {
        self.inner.zero
    }

    fn one(&self) -> usize {
        self.inner.one
    }

    #[inline]
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.inner.add[a * self.size() + b]
    }

    #[inline]
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.inner.mul[a * self.size() + b]
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.size()
    }

    fn format(&self, a: &usize) -> String {
        self.inner.labels[*a].clone()
    }

    fn parse(&self, text: &str) -> Option<usize> {
        self.index_of(text)
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.size()).collect())
    }
}
