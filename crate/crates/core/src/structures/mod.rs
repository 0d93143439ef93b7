//! Finite sets equipped with an addition table and a scalar-action table.
//!
//! No law is assumed of either table. [`check_axioms`] evaluates the module
//! conditions exhaustively, [`transport_axioms`] re-derives them along a
//! coordinatization, and the `lemma_*` functions verify the small
//! implications between the conditions.

mod axioms;
mod enumerate;
mod lemmas;
mod transport;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::freemod::DenseVec;
use crate::semiring::{Semiring, TableSemiring};

pub use axioms::{check_axioms, AxiomReport, CandidateReport, Condition, Outcome, Witness};
pub use enumerate::{enumerate_structures, structure_count, StructureIter};
pub use lemmas::{
    lemma_8_iff_1_and_9, lemma_a_zero, lemma_commutativity_derivable, LemmaOutcome, LemmaPart,
    LemmaReport,
};
pub use transport::{transport_axioms, TransportReport};

/// Largest carrier `power` will realize.
pub const MAX_REALIZED: usize = 1 << 16;

/// Where a structure came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// Arbitrary tables.
    Table,
    /// `R^N` realized from componentwise vector operations.
    Power(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteStructure {
    semiring: TableSemiring,
    labels: Vec<String>,
    add: Vec<usize>,
    action: Vec<usize>,
    origin: Origin,
}

impl FiniteStructure {
    /// `add` is row-major over the carrier (`add[x * n + y] = x + y`);
    /// `action` is scalar-major (`action[a * n + x] = a x`).
    pub fn new(
        semiring: TableSemiring,
        labels: Vec<String>,
        add: Vec<usize>,
        action: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        let r = semiring.size();
        if n == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        let mut seen = HashMap::new();
        for l in &labels {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::InvalidTable(format!("duplicate label `{l}`")));
            }
        }
        if add.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "addition table has {} entries, expected {}",
                add.len(),
                n * n
            )));
        }
        if action.len() != r * n {
            return Err(Error::InvalidTable(format!(
                "action table has {} entries, expected {}",
                action.len(),
                r * n
            )));
        }
        if add.iter().chain(&action).any(|&v| v >= n) {
            return Err(Error::InvalidTable(
                "table entry outside the carrier".into(),
            ));
        }
        Ok(Self {
            semiring,
            labels,
            add,
            action,
            origin: Origin::Table,
        })
    }

    /// `R^N` with componentwise operations. Elements are ordered
    /// lexicographically by coordinates; labels are vector literals.
    pub fn power(semiring: &TableSemiring, dim: usize) -> Result<Self> {
        let r = semiring.size();
        let size = u32::try_from(dim)
            .ok()
            .and_then(|d| r.checked_pow(d))
            .filter(|&s| s <= MAX_REALIZED)
            .ok_or_else(|| Error::BudgetExceeded {
                budget: MAX_REALIZED as u64,
                needed: format!("{r}^{dim}"),
            })?;
        let vectors: Vec<DenseVec<TableSemiring>> =
            (0..size).map(|i| Self::decode(semiring, dim, i)).collect();
        let index = |v: &DenseVec<TableSemiring>| Self::encode(r, v.entries());
        let mut add = Vec::with_capacity(size * size);
        for s in &vectors {
            for t in &vectors {
                add.push(index(&s.add(t)?));
            }
        }
        let mut action = Vec::with_capacity(r * size);
        for a in 0..r {
            for s in &vectors {
                action.push(index(&s.scale_by(&a)));
            }
        }
        Ok(Self {
            semiring: semiring.clone(),
            labels: vectors.iter().map(|v| v.to_string()).collect(),
            add,
            action,
            origin: Origin::Power(dim),
        })
    }

    fn decode(semiring: &TableSemiring, dim: usize, mut index: usize) -> DenseVec<TableSemiring> {
        let r = semiring.size();
        let mut entries = vec![0; dim];
        for slot in entries.iter_mut().rev() {
            *slot = index % r;
            index /= r;
        }
        DenseVec::new_unchecked(semiring.clone(), entries)
    }

    fn encode(r: usize, coords: &[usize]) -> usize {
        coords.iter().fold(0, |acc, &c| acc * r + c)
    }

    /// Coordinates of element `x` when this structure is a realized `R^N`.
    pub fn coordinates(&self, x: usize) -> Option<DenseVec<TableSemiring>> {
        match self.origin {
            Origin::Power(dim) => Some(Self::decode(&self.semiring, dim, x)),
            Origin::Table => None,
        }
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn index_of_vector(&self, v: &DenseVec<TableSemiring>) -> Option<usize> {
        match self.origin {
            Origin::Power(dim) if dim == v.dim() && *v.ring() == self.semiring => {
                Some(Self::encode(self.semiring.size(), v.entries()))
            }
            _ => None,
        }
    }

    /// Forgets that the tables came from `R^N`.
    pub fn as_table(&self) -> Self {
        Self {
            origin: Origin::Table,
            ..self.clone()
        }
    }

    /// Same tables, new labels.
    pub fn relabel(&self, labels: Vec<String>) -> Result<Self> {
        Self::new(
            self.semiring.clone(),
            labels,
            self.add.clone(),
            self.action.clone(),
        )
    }

    pub fn semiring(&self) -> &TableSemiring {
        &self.semiring
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn scalars(&self) -> usize {
        self.semiring.size()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size() + y]
    }

    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.action[a * self.size() + x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn action_table(&self) -> &[usize] {
        &self.action
    }

    /// Right identities: `z` with `x + z = x` for every `x`.
    pub fn right_identities(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&z| (0..self.size()).all(|x| self.add(x, z) == x))
            .collect()
    }

    /// Plain-text rendering of both tables.
    pub fn dump(&self) -> String {
        let n = self.size();
        let mut out = String::new();
        let _ = writeln!(out, "semiring {}", self.semiring.name());
        let _ = writeln!(out, "carrier {}", self.labels.join(" "));
        out.push_str("add\n");
        for x in 0..n {
            let row: Vec<&str> = (0..n).map(|y| self.label(self.add(x, y))).collect();
            let _ = writeln!(out, "  {}", row.join(" "));
        }
        out.push_str("action\n");
        for a in 0..self.scalars() {
            let row: Vec<&str> = (0..n).map(|x| self.label(self.act(a, x))).collect();
            let _ = writeln!(out, "  {}", row.join(" "));
        }
        out
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn power_tables_are_componentwise() {
        let g = gf(3);
        let s = FiniteStructure::power(&g, 2).unwrap();
        assert_eq!(s.size(), 9);
        assert_eq!(s.label(5), "[1,2]");
        let x = s.index_of("[1,2]").unwrap();
        let y = s.index_of("[2,2]").unwrap();
        assert_eq!(s.label(s.add(x, y)), "[0,1]");
        assert_eq!(s.label(s.act(2, x)), "[2,1]");
        let v = s.coordinates(x).unwrap();
        assert_eq!(s.index_of_vector(&v), Some(x));
    }

    #[test]
    fn zero_dimensional_power() {
        let s = FiniteStructure::power(&gf(2), 0).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.label(0), "[]");
        assert_eq!(s.right_identities(), vec![0]);
    }

    #[test]
    fn table_validation() {
        let b = boolean();
        let names = vec!["p".to_string(), "q".to_string()];
        assert!(FiniteStructure::new(b.clone(), names.clone(), vec![0, 0, 0], vec![0; 4]).is_err());
        assert!(
            FiniteStructure::new(b.clone(), names.clone(), vec![0, 0, 0, 2], vec![0; 4]).is_err()
        );
        assert!(FiniteStructure::new(b.clone(), names, vec![0; 4], vec![0; 3]).is_err());
        assert!(FiniteStructure::new(b, vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn oversized_power_refused() {
        assert!(matches!(
            FiniteStructure::power(&gf(3), 40),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dump_lists_tables() {
        let d = chain3().dump();
        assert!(d.contains("carrier 0 a 1"));
        assert!(d.contains("  1 1 1"));
    }
}
