//! Deciding freeness of finite structures.
//!
//! A structure is free of rank `k` when it satisfies (1)–(8) and some
//! `k`-element subset `Y` makes the evaluation map `R^k → X`,
//! `(c_y) ↦ Σ c_y·y`, a bijection. [`find_basis`] finds the
//! lexicographically least such `Y`; [`coordinatize`] turns it into the
//! isomorphism onto `R^k`; [`verify_free_iff_standard`] cross-checks the
//! verdict against a direct isomorphism search.

use crate::error::{Error, Result};
use crate::freemod::DenseVec;
use crate::linmap::{check_isomorphic, IsoVerdict, LinearMapTable};
use crate::semiring::TableSemiring;
use crate::structures::{check_axioms, AxiomReport, FiniteStructure};

/// Default cap on evaluation-map entries computed by [`find_basis`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// An ordered subset `Y` and the coordinates of every element against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    elements: Vec<usize>,
    coordinates: Vec<Vec<usize>>,
}

/// `Σ c_i·y_i`, summed left to right. The empty sum is `zero`.
pub fn evaluate(s: &FiniteStructure, zero: usize, elements: &[usize], coeffs: &[usize]) -> usize {
    let mut terms = coeffs.iter().zip(elements).map(|(&c, &y)| s.act(c, y));
    match terms.next() {
        None => zero,
        Some(first) => terms.fold(first, |acc, t| s.add(acc, t)),
    }
}

/// Coefficient tuples in lexicographic order; the `i`-th tuple is `i` in base `r`.
fn tuple(r: usize, k: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = index % r;
        index /= r;
    }
    out
}

fn zero_of(s: &FiniteStructure) -> Result<usize> {
    s.right_identities()
        .first()
        .copied()
        .ok_or_else(|| Error::Precondition("structure has no zero element".into()))
}

/// Representation counts for every element under the evaluation map.
fn representations(s: &FiniteStructure, zero: usize, elements: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let r = s.scalars();
    let k = elements.len();
    let mut reps = vec![Vec::new(); s.size()];
    for i in 0..r.pow(k as u32) {
        let c = tuple(r, k, i);
        reps[evaluate(s, zero, elements, &c)].push(c);
    }
    reps
}

impl Basis {
    /// Validates `elements` as a basis of `s`.
    pub fn from_elements(s: &FiniteStructure, elements: &[usize]) -> Result<Self> {
        if let Some(&bad) = elements.iter().find(|&&y| y >= s.size()) {
            return Err(Error::CarrierMismatch(format!(
                "index {bad} outside the carrier"
            )));
        }
        let zero = zero_of(s)?;
        let reps = representations(s, zero, elements);
        let mut coordinates = Vec::with_capacity(s.size());
        for (x, mut r) in reps.into_iter().enumerate() {
            if r.len() != 1 {
                return Err(Error::InvalidBasis {
                    element: s.label(x).to_string(),
                    representations: r.len(),
                });
            }
            coordinates.push(r.pop().unwrap());
        }
        Ok(Self {
            elements: elements.to_vec(),
            coordinates,
        })
    }

    pub fn from_labels(s: &FiniteStructure, labels: &[&str]) -> Result<Self> {
        let elements = labels
            .iter()
            .map(|l| {
                s.index_of(l)
                    .ok_or_else(|| Error::CarrierMismatch(format!("`{l}` is not in the carrier")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_elements(s, &elements)
    }

    pub fn rank(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Coefficients of `x`, one per basis element.
    pub fn coordinates(&self, x: usize) -> &[usize] {
        &self.coordinates[x]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreenessStatus {
    Free,
    NotFree,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// (1)–(8) fail; see the attached axiom report.
    Axioms,
    /// `|X|` is not a power of `|R|`.
    Cardinality { size: usize, scalars: usize },
    /// Every `k`-subset was tried.
    Exhausted { rank: usize, subsets: u64 },
    /// The evaluation budget ran out.
    Budget { evaluations: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessVerdict {
    pub status: FreenessStatus,
    pub basis: Option<Basis>,
    pub certificate: Option<Certificate>,
    pub axioms: AxiomReport,
}

impl FreenessVerdict {
    pub fn rank(&self) -> Option<usize> {
        self.basis.as_ref().map(Basis::rank)
    }
}

/// The least `k` with `r^k = n`.
pub fn feasible_rank(n: usize, r: usize) -> Option<usize> {
    let mut power = 1usize;
    for k in 0..=n {
        if power == n {
            return Some(k);
        }
        if r <= 1 {
            return None;
        }
        power = power.checked_mul(r)?;
        if power > n {
            return None;
        }
    }
    None
}

/// Next `k`-combination of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Axioms first, then the cardinality filter, then subsets of the feasible
/// rank in lexicographic order. Returns the least basis.
pub fn find_basis(s: &FiniteStructure, budget: u64) -> FreenessVerdict {
    let axioms = check_axioms(s);
    let verdict = |status, basis, certificate, axioms| FreenessVerdict {
        status,
        basis,
        certificate: Some(certificate),
        axioms,
    };
    if !axioms.is_standard() {
        return verdict(FreenessStatus::NotFree, None, Certificate::Axioms, axioms);
    }
    let (n, r) = (s.size(), s.scalars());
    let Some(k) = feasible_rank(n, r) else {
        return verdict(
            FreenessStatus::NotFree,
            None,
            Certificate::Cardinality {
                size: n,
                scalars: r,
            },
            axioms,
        );
    };
    let zero = axioms.zero.expect("standard structures have a zero");
    let tuples = n; // r^k == n
    let mut evaluations = 0u64;
    let mut subsets = 0u64;
    let mut subset: Vec<usize> = (0..k).collect();
    let mut hit = vec![false; n];
    loop {
        subsets += 1;
        evaluations += tuples as u64;
        if evaluations > budget {
            return verdict(
                FreenessStatus::Undecided,
                None,
                Certificate::Budget { evaluations },
                axioms,
            );
        }
        hit.iter_mut().for_each(|h| *h = false);
        let mut coordinates = vec![Vec::new(); n];
        let bijective = (0..tuples).all(|i| {
            let c = tuple(r, k, i);
            let x = evaluate(s, zero, &subset, &c);
            let fresh = !hit[x];
            hit[x] = true;
            coordinates[x] = c;
            fresh
        });
        if bijective {
            return FreenessVerdict {
                status: FreenessStatus::Free,
                basis: Some(Basis {
                    elements: subset,
                    coordinates,
                }),
                certificate: None,
                axioms,
            };
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    verdict(
        FreenessStatus::NotFree,
        None,
        Certificate::Exhausted { rank: k, subsets },
        axioms,
    )
}

/// `psi: X → R^k`, `x ↦ (coordinates of x)`, with both exhaustive checks run.
pub fn coordinatize(s: &FiniteStructure, basis: &Basis) -> Result<LinearMapTable> {
    if basis.coordinates.len() != s.size() {
        return Err(Error::Precondition(
            "basis belongs to another structure".into(),
        ));
    }
    let target = FiniteStructure::power(s.semiring(), basis.rank())?;
    let table = basis
        .coordinates
        .iter()
        .map(|c| {
            let v = DenseVec::<TableSemiring>::new(s.semiring().clone(), c.clone())?;
            Ok(target.index_of_vector(&v).expect("coordinates live in R^k"))
        })
        .collect::<Result<Vec<_>>>()?;
    LinearMapTable::new(s.clone(), target, table)?.verified()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideVerdict {
    Free { rank: usize },
    NotFree,
    Undecided,
}

/// The two independent routes to freeness and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Some `R^k` admits an isomorphism from the structure.
    pub isomorphism: SideVerdict,
    /// (1)–(8) hold and a basis exists.
    pub standard: SideVerdict,
}

impl EquivalenceReport {
    /// `None` when either side is undecided.
    pub fn agree(&self) -> Option<bool> {
        match (self.isomorphism, self.standard) {
            (SideVerdict::Undecided, _) | (_, SideVerdict::Undecided) => None,
            (a, b) => Some(a == b),
        }
    }
}

/// Decides freeness twice: by isomorphism search against realized `R^k`,
/// and by axioms plus basis search.
pub fn verify_free_iff_standard(s: &FiniteStructure, budget: u64) -> EquivalenceReport {
    let (n, r) = (s.size(), s.scalars());
    let isomorphism = match feasible_rank(n, r) {
        None => SideVerdict::NotFree,
        Some(k) => {
            match FiniteStructure::power(s.semiring(), k).map(|p| check_isomorphic(s, &p, budget)) {
                Ok(Ok(IsoVerdict::Isomorphic(_))) => SideVerdict::Free { rank: k },
                Ok(Ok(IsoVerdict::NotIsomorphic(_))) => SideVerdict::NotFree,
                _ => SideVerdict::Undecided,
            }
        }
    };
    let basis = find_basis(s, budget);
    let standard = match basis.status {
        FreenessStatus::Free => SideVerdict::Free {
            rank: basis.rank().unwrap(),
        },
        FreenessStatus::NotFree => SideVerdict::NotFree,
        FreenessStatus::Undecided => SideVerdict::Undecided,
    };
    EquivalenceReport {
        isomorphism,
        standard,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmap::Verification;
    use crate::structures::fixtures::*;

    #[test]
    fn diamond_has_basis_a_b() {
        let d = diamond();
        let v = find_basis(&d, DEFAULT_BUDGET);
        assert_eq!(v.status, FreenessStatus::Free);
        let b = v.basis.unwrap();
        let names: Vec<&str> = b.elements().iter().map(|&i| d.label(i)).collect();
        assert_eq!(names, ["a", "b"]);
        assert_eq!(b.coordinates(d.index_of("top").unwrap()), &[1, 1]);
        assert_eq!(b.coordinates(d.index_of("bot").unwrap()), &[0, 0]);
    }

    #[test]
    fn chain_fails_cardinality() {
        let v = find_basis(&chain3(), DEFAULT_BUDGET);
        assert_eq!(v.status, FreenessStatus::NotFree);
        assert_eq!(
            v.certificate,
            Some(Certificate::Cardinality {
                size: 3,
                scalars: 2
            })
        );
    }

    #[test]
    fn singleton_is_rank_zero() {
        let p = FiniteStructure::power(&gf(3), 0).unwrap();
        let v = find_basis(&p, DEFAULT_BUDGET);
        assert_eq!(v.status, FreenessStatus::Free);
        assert_eq!(v.rank(), Some(0));
    }

    #[test]
    fn axioms_checked_first() {
        let v = find_basis(&left_projection(), DEFAULT_BUDGET);
        assert_eq!(v.certificate, Some(Certificate::Axioms));
        assert!(!v.axioms.is_standard());
    }

    #[test]
    fn gf3_line_with_basis_two() {
        let line = FiniteStructure::power(&gf(3), 1).unwrap();
        let two = line.index_of("[2]").unwrap();
        let b = Basis::from_elements(&line, &[two]).unwrap();
        let psi = coordinatize(&line, &b).unwrap();
        assert!(psi.linear().is_yes());
        assert!(psi.invertible().is_yes());
        let one = line.index_of("[1]").unwrap();
        assert_eq!(psi.codomain().label(psi.apply(one)), "[2]");
    }

    #[test]
    fn invalid_basis_names_element() {
        let p = FiniteStructure::power(&gf(2), 2).unwrap();
        let e1 = p.index_of("[1,0]").unwrap();
        match Basis::from_elements(&p, &[e1]) {
            Err(Error::InvalidBasis {
                element,
                representations,
            }) => {
                assert_eq!(element, "[0,1]");
                assert_eq!(representations, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn standard_basis_gives_identity() {
        let p = FiniteStructure::power(&gf(2), 2).unwrap();
        let v = find_basis(&p, DEFAULT_BUDGET);
        let names: Vec<&str> = v
            .basis
            .as_ref()
            .unwrap()
            .elements()
            .iter()
            .map(|&i| p.label(i))
            .collect();
        assert_eq!(names, ["[0,1]", "[1,0]"]);
        let b = Basis::from_labels(&p, &["[1,0]", "[0,1]"]).unwrap();
        let psi = coordinatize(&p, &b).unwrap();
        assert_eq!(psi.table(), &[0, 1, 2, 3]);
        assert_eq!(*psi.linear(), Verification::Yes);
    }

    #[test]
    fn budget_exhaustion_is_undecided() {
        let p = FiniteStructure::power(&gf(3), 2).unwrap();
        assert_eq!(find_basis(&p, 5).status, FreenessStatus::Undecided);
    }

    #[test]
    fn ranks() {
        assert_eq!(feasible_rank(1, 2), Some(0));
        assert_eq!(feasible_rank(8, 2), Some(3));
        assert_eq!(feasible_rank(6, 2), None);
        assert_eq!(feasible_rank(1, 1), Some(0));
        assert_eq!(feasible_rank(3, 1), None);
    }

    #[test]
    fn both_routes_agree_on_fixtures() {
        for s in [
            diamond(),
            chain3(),
            left_projection(),
            FiniteStructure::power(&gf(2), 2).unwrap(),
        ] {
            let r = verify_free_iff_standard(&s, DEFAULT_BUDGET);
            assert_eq!(r.agree(), Some(true), "{}", s.dump());
        }
    }
}
