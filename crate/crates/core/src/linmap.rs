//! Maps between finite carriers, stored as tables.
//!
//! Linearity and invertibility are decided by exhaustion, and the verdicts
//! are cached on the map. [`check_isomorphic`] searches for a bijective
//! linear map by backtracking with propagation.

use crate::error::{Error, Result};
use crate::structures::FiniteStructure;

/// A cached verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification<W> {
    Unchecked,
    Yes,
    No(W),
}

impl<W> Verification<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verification::Yes)
    }
}

/// First failures of the two preservation laws, each lexicographically least.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearityReport {
    /// `(x, y)` with `f(x + y) ≠ f(x) + f(y)`.
    pub addition: Option<(usize, usize)>,
    /// `(a, x)` with `f(ax) ≠ a f(x)`.
    pub scaling: Option<(usize, usize)>,
}

impl LinearityReport {
    pub fn is_linear(&self) -> bool {
        self.addition.is_none() && self.scaling.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvertibilityFailure {
    /// Two distinct elements with the same image.
    NotInjective { x: usize, y: usize },
    /// A codomain element with no preimage.
    NotSurjective { y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertibilityReport {
    pub inverse: Option<Vec<usize>>,
    pub failure: Option<InvertibilityFailure>,
    /// Linearity of the inverse, when it exists. Bijective linear maps over
    /// these structures always have linear inverses; this is checked, not
    /// assumed.
    pub inverse_linearity: Option<LinearityReport>,
}

impl InvertibilityReport {
    pub fn is_invertible(&self) -> bool {
        self.inverse.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapTable {
    domain: FiniteStructure,
    codomain: FiniteStructure,
    table: Vec<usize>,
    linear: Verification<LinearityReport>,
    invertible: Verification<InvertibilityFailure>,
    inverse: Option<Vec<usize>>,
}

impl LinearMapTable {
    /// A total map given by `table[x] = f(x)`. Nothing is verified yet.
    pub fn new(
        domain: FiniteStructure,
        codomain: FiniteStructure,
        table: Vec<usize>,
    ) -> Result<Self> {
        if table.len() != domain.size() {
            return Err(Error::CarrierMismatch(format!(
                "map has {} entries for a domain of {}",
                table.len(),
                domain.size()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= codomain.size()) {
            return Err(Error::CarrierMismatch(format!(
                "image index {bad} outside a codomain of {}",
                codomain.size()
            )));
        }
        Ok(Self {
            domain,
            codomain,
            table,
            linear: Verification::Unchecked,
            invertible: Verification::Unchecked,
            inverse: None,
        })
    }

    /// Builds a map from `domain-label -> codomain-label` pairs.
    pub fn from_labels<'a>(
        domain: FiniteStructure,
        codomain: FiniteStructure,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut table = vec![None; domain.size()];
        for (from, to) in pairs {
            let x = domain
                .index_of(from)
                .ok_or_else(|| Error::CarrierMismatch(format!("`{from}` is not in the domain")))?;
            let y = codomain
                .index_of(to)
                .ok_or_else(|| Error::CarrierMismatch(format!("`{to}` is not in the codomain")))?;
            if table[x].replace(y).is_some() {
                return Err(Error::CarrierMismatch(format!("`{from}` is mapped twice")));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(x, y)| {
                y.ok_or_else(|| {
                    Error::CarrierMismatch(format!("`{}` has no image", domain.label(x)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(domain, codomain, table)
    }

    pub fn identity(s: &FiniteStructure) -> Self {
        Self::new(s.clone(), s.clone(), (0..s.size()).collect()).expect("identity is total")
    }

    /// Runs both exhaustive checks and caches the verdicts.
    pub fn verified(mut self) -> Result<Self> {
        let lin = check_linear(&self)?;
        self.linear = if lin.is_linear() {
            Verification::Yes
        } else {
            Verification::No(lin)
        };
        let inv = check_invertible(&self);
        match (inv.inverse, inv.failure) {
            (Some(t), _) => {
                self.invertible = Verification::Yes;
                self.inverse = Some(t);
            }
            (None, Some(f)) => self.invertible = Verification::No(f),
            (None, None) => unreachable!(),
        }
        Ok(self)
    }

    pub fn domain(&self) -> &FiniteStructure {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteStructure {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn linear(&self) -> &Verification<LinearityReport> {
        &self.linear
    }

    pub fn invertible(&self) -> &Verification<InvertibilityFailure> {
        &self.invertible
    }

    /// Present exactly when invertibility has been verified.
    pub fn inverse_table(&self) -> Option<&[usize]> {
        self.inverse.as_deref()
    }

    /// `(domain label, codomain label)` for each domain element.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.table
            .iter()
            .enumerate()
            .map(|(x, &y)| (self.domain.label(x), self.codomain.label(y)))
    }
}

/// Exhaustively checks `f(x + y) = f(x) + f(y)` and `f(ax) = a f(x)`.
pub fn check_linear(f: &LinearMapTable) -> Result<LinearityReport> {
    let (d, c) = (&f.domain, &f.codomain);
    if d.semiring() != c.semiring() {
        return Err(Error::DomainMismatch {
            left: format!("{:?}", d.semiring()),
            right: format!("{:?}", c.semiring()),
        });
    }
    let t = &f.table;
    let addition = (0..d.size())
        .flat_map(|x| (0..d.size()).map(move |y| (x, y)))
        .find(|&(x, y)| t[d.add(x, y)] != c.add(t[x], t[y]));
    let scaling = (0..d.scalars())
        .flat_map(|a| (0..d.size()).map(move |x| (a, x)))
        .find(|&(a, x)| t[d.act(a, x)] != c.act(a, t[x]));
    Ok(LinearityReport { addition, scaling })
}

/// Returns the inverse table iff `f` is a bijection.
pub fn check_invertible(f: &LinearMapTable) -> InvertibilityReport {
    let mut inverse: Vec<Option<usize>> = vec![None; f.codomain.size()];
    for (x, &y) in f.table.iter().enumerate() {
        if let Some(prev) = inverse[y] {
            return InvertibilityReport {
                inverse: None,
                failure: Some(InvertibilityFailure::NotInjective { x: prev, y: x }),
                inverse_linearity: None,
            };
        }
        inverse[y] = Some(x);
    }
    if let Some(y) = inverse.iter().position(Option::is_none) {
        return InvertibilityReport {
            inverse: None,
            failure: Some(InvertibilityFailure::NotSurjective { y }),
            inverse_linearity: None,
        };
    }
    let inverse: Vec<usize> = inverse.into_iter().flatten().collect();
    let back = LinearMapTable::new(f.codomain.clone(), f.domain.clone(), inverse.clone())
        .expect("inverse of a bijection is total");
    InvertibilityReport {
        inverse_linearity: check_linear(&back).ok(),
        inverse: Some(inverse),
        failure: None,
    }
}

/// `f ∘ g`. Cached verdicts are kept only when both factors are verified.
pub fn compose(f: &LinearMapTable, g: &LinearMapTable) -> Result<LinearMapTable> {
    if g.codomain != f.domain {
        return Err(Error::CarrierMismatch(
            "codomain of the inner map is not the domain of the outer map".into(),
        ));
    }
    let table = g.table.iter().map(|&y| f.table[y]).collect();
    let mut out = LinearMapTable::new(g.domain.clone(), f.codomain.clone(), table)?;
    if f.linear.is_yes() && g.linear.is_yes() {
        out.linear = Verification::Yes;
    }
    if let (Some(fi), Some(gi)) = (&f.inverse, &g.inverse) {
        out.invertible = Verification::Yes;
        out.inverse = Some(fi.iter().map(|&y| gi[y]).collect());
    }
    Ok(out)
}

/// `f⁻¹`, with its own linearity checked afresh.
pub fn inverse(f: &LinearMapTable) -> Result<LinearMapTable> {
    let table = match (&f.invertible, &f.inverse) {
        (Verification::Yes, Some(t)) => t.clone(),
        _ => return Err(Error::Precondition("map is not verified invertible".into())),
    };
    let mut out = LinearMapTable::new(f.codomain.clone(), f.domain.clone(), table)?;
    let lin = check_linear(&out)?;
    out.linear = if lin.is_linear() {
        Verification::Yes
    } else {
        Verification::No(lin)
    };
    out.invertible = Verification::Yes;
    out.inverse = Some(f.table.clone());
    Ok(out)
}

/// Why two carriers are not isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoObstruction {
    Cardinality {
        left: usize,
        right: usize,
    },
    /// Different numbers of elements with some isomorphism-invariant property.
    Invariant {
        property: &'static str,
        left: usize,
        right: usize,
    },
    /// The search ran to completion without finding a map.
    Exhausted {
        nodes: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    /// The lexicographically least isomorphism, verified.
    Isomorphic(Box<LinearMapTable>),
    NotIsomorphic(IsoObstruction),
    /// The node budget ran out first.
    Undecided {
        nodes: u64,
    },
}

impl IsoVerdict {
    pub fn witness(&self) -> Option<&LinearMapTable> {
        match self {
            IsoVerdict::Isomorphic(f) => Some(f),
            _ => None,
        }
    }
}

/// Properties preserved by every isomorphism, used to restrict candidate images.
fn signature(s: &FiniteStructure, x: usize) -> (bool, bool, usize, usize) {
    let right_identity = (0..s.size()).all(|y| s.add(y, x) == y);
    let idempotent = s.add(x, x) == x;
    let fixed_by = (0..s.scalars()).filter(|&a| s.act(a, x) == x).count();
    let absorbs = (0..s.size()).filter(|&y| s.add(x, y) == x).count();
    (right_identity, idempotent, fixed_by, absorbs)
}

struct Search<'a> {
    x: &'a FiniteStructure,
    y: &'a FiniteStructure,
    allowed: Vec<Vec<usize>>,
    budget: u64,
    nodes: u64,
}

enum Step {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    /// Assigns `from -> to` and everything it forces. `false` on conflict.
    fn assign(&self, map: &mut [Option<usize>], used: &mut [bool], from: usize, to: usize) -> bool {
        let mut queue = vec![(from, to)];
        while let Some((p, q)) = queue.pop() {
            match map[p] {
                Some(existing) if existing == q => continue,
                Some(_) => return false,
                None => {}
            }
            if used[q] || !self.allowed[p].contains(&q) {
                return false;
            }
            map[p] = Some(q);
            used[q] = true;
            let assigned: Vec<usize> = (0..map.len()).filter(|&i| map[i].is_some()).collect();
            for &u in &assigned {
                let fu = map[u].unwrap();
                for (sum, image) in [
                    (self.x.add(p, u), self.y.add(q, fu)),
                    (self.x.add(u, p), self.y.add(fu, q)),
                ] {
                    match map[sum] {
                        Some(v) if v != image => return false,
                        Some(_) => {}
                        None => queue.push((sum, image)),
                    }
                }
            }
            for a in 0..self.x.scalars() {
                let (prod, image) = (self.x.act(a, p), self.y.act(a, q));
                match map[prod] {
                    Some(v) if v != image => return false,
                    Some(_) => {}
                    None => queue.push((prod, image)),
                }
            }
        }
        true
    }

    fn run(&mut self, map: Vec<Option<usize>>, used: Vec<bool>) -> Step {
        let Some(next) = map.iter().position(Option::is_none) else {
            return Step::Found(map.into_iter().flatten().collect());
        };
        for cand in self.allowed[next].clone() {
            if used[cand] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let (mut m, mut u) = (map.clone(), used.clone());
            if !self.assign(&mut m, &mut u, next, cand) {
                continue;
            }
            match self.run(m, u) {
                Step::Exhausted => continue,
                other => return other,
            }
        }
        Step::Exhausted
    }
}

/// Searches for an isomorphism `x → y`, visiting at most `budget` nodes.
///
/// The search assigns images in index order and tries candidates in
/// ascending order, so the first map found is the lexicographically least.
pub fn check_isomorphic(
    x: &FiniteStructure,
    y: &FiniteStructure,
    budget: u64,
) -> Result<IsoVerdict> {
    if x.semiring() != y.semiring() {
        return Err(Error::DomainMismatch {
            left: format!("{:?}", x.semiring()),
            right: format!("{:?}", y.semiring()),
        });
    }
    if x.size() != y.size() {
        return Ok(IsoVerdict::NotIsomorphic(IsoObstruction::Cardinality {
            left: x.size(),
            right: y.size(),
        }));
    }
    let (zx, zy) = (x.right_identities().len(), y.right_identities().len());
    if zx != zy {
        return Ok(IsoVerdict::NotIsomorphic(IsoObstruction::Invariant {
            property: "right identities",
            left: zx,
            right: zy,
        }));
    }
    let sx: Vec<_> = (0..x.size()).map(|i| signature(x, i)).collect();
    let sy: Vec<_> = (0..y.size()).map(|i| signature(y, i)).collect();
    let allowed: Vec<Vec<usize>> = sx
        .iter()
        .map(|s| (0..y.size()).filter(|&j| sy[j] == *s).collect())
        .collect();
    let mut search = Search {
        x,
        y,
        allowed,
        budget,
        nodes: 0,
    };
    let n = x.size();
    match search.run(vec![None; n], vec![false; n]) {
        Step::Found(table) => {
            let f = LinearMapTable::new(x.clone(), y.clone(), table)?.verified()?;
            debug_assert!(f.linear.is_yes() && f.invertible.is_yes());
            Ok(IsoVerdict::Isomorphic(Box::new(f)))
        }
        Step::Exhausted => Ok(IsoVerdict::NotIsomorphic(IsoObstruction::Exhausted {
            nodes: search.nodes,
        })),
        Step::OutOfBudget => Ok(IsoVerdict::Undecided {
            nodes: search.nodes,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::fixtures::*;

    fn gf2_plane() -> FiniteStructure {
        FiniteStructure::power(&gf(2), 2).unwrap()
    }

    #[test]
    fn identity_is_linear_and_self_inverse() {
        let p = gf2_plane();
        let id = LinearMapTable::identity(&p).verified().unwrap();
        assert!(id.linear().is_yes());
        assert_eq!(id.inverse_table(), Some(&[0, 1, 2, 3][..]));
    }

    #[test]
    fn constant_zero_is_linear_not_invertible() {
        let p = gf2_plane();
        let z = LinearMapTable::new(p.clone(), p.clone(), vec![0; 4]).unwrap();
        assert!(check_linear(&z).unwrap().is_linear());
        assert_eq!(
            check_invertible(&z).failure,
            Some(InvertibilityFailure::NotInjective { x: 0, y: 1 })
        );
    }

    #[test]
    fn translation_breaks_scaling_at_origin() {
        let line = FiniteStructure::power(&gf(2), 1).unwrap();
        let shift = LinearMapTable::new(line.clone(), line, vec![1, 0]).unwrap();
        let r = check_linear(&shift).unwrap();
        assert_eq!(r.scaling, Some((0, 0)));
        assert_eq!(r.addition, Some((0, 0)));
    }

    #[test]
    fn swap_is_an_involution() {
        let p = gf2_plane();
        // [a,b] -> [b,a]; index = 2a + b
        let swap = LinearMapTable::new(p.clone(), p.clone(), vec![0, 2, 1, 3])
            .unwrap()
            .verified()
            .unwrap();
        assert!(swap.linear().is_yes());
        assert_eq!(swap.inverse_table(), Some(swap.table()));
        let twice = compose(&swap, &swap).unwrap();
        assert_eq!(twice.table(), LinearMapTable::identity(&p).table());
        assert!(twice.linear().is_yes());
        let back = inverse(&swap).unwrap();
        assert_eq!(compose(&swap, &back).unwrap().table(), &[0, 1, 2, 3]);
    }

    #[test]
    fn compose_requires_matching_carriers() {
        let p = gf2_plane();
        let line = FiniteStructure::power(&gf(2), 1).unwrap();
        let f = LinearMapTable::identity(&p);
        let g = LinearMapTable::identity(&line);
        assert!(matches!(compose(&f, &g), Err(Error::CarrierMismatch(_))));
        assert!(matches!(inverse(&f), Err(Error::Precondition(_))));
    }

    #[test]
    fn relabeled_plane_is_isomorphic() {
        let p = gf2_plane();
        let q = p
            .relabel(vec!["o".into(), "u".into(), "v".into(), "w".into()])
            .unwrap();
        let v = check_isomorphic(&q, &p, 10_000).unwrap();
        let f = v.witness().unwrap();
        assert_eq!(f.table(), &[0, 1, 2, 3]);
    }

    #[test]
    fn cardinality_obstruction() {
        let line = FiniteStructure::power(&gf(2), 1).unwrap();
        assert_eq!(
            check_isomorphic(&line, &gf2_plane(), 10).unwrap(),
            IsoVerdict::NotIsomorphic(IsoObstruction::Cardinality { left: 2, right: 4 })
        );
    }

    #[test]
    fn budget_is_reported() {
        let p = FiniteStructure::power(&gf(3), 2).unwrap();
        assert!(matches!(
            check_isomorphic(&p, &p, 0).unwrap(),
            IsoVerdict::Undecided { .. }
        ));
    }

    #[test]
    fn mismatched_scalars_rejected() {
        let a = FiniteStructure::power(&gf(2), 1).unwrap();
        let b = FiniteStructure::power(&boolean(), 1).unwrap();
        assert!(check_isomorphic(&a, &b, 10).is_err());
        let f = LinearMapTable::new(a, b, vec![0, 1]).unwrap();
        assert!(matches!(
            check_linear(&f),
            Err(Error::DomainMismatch { .. })
        ));
    }
}
