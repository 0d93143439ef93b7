use super::axioms::{for_each_assignment, Condition, Outcome, Witness};
use super::{FiniteStructure, Origin};
use crate::error::{Error, Result};
use crate::freemod::DenseVec;
use crate::linmap::{LinearMapTable, Verification};

/// Conditions (1)–(8) carried from `R^N` back to a structure along `psi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportReport {
    /// `psi⁻¹` of the zero vector.
    pub zero: usize,
    /// The primed conditions, evaluated in `R^N` on the images `psi(x)`.
    pub primed: Vec<Outcome>,
    /// The conditions in the structure, each side checked to be the
    /// preimage of the matching primed side.
    pub transported: Vec<Outcome>,
}

impl TransportReport {
    pub fn all_pass(&self) -> bool {
        self.primed
            .iter()
            .chain(&self.transported)
            .all(Outcome::passed)
    }
}

/// Re-derives (1)–(8) in `s` from their primed counterparts in `R^N`.
///
/// `psi` must be a verified linear bijection from `s` onto a realized `R^N`
/// over the same semiring. The zero of `s` is not searched for: it is
/// defined as `psi⁻¹(0')`.
pub fn transport_axioms(s: &FiniteStructure, psi: &LinearMapTable) -> Result<TransportReport> {
    if psi.domain() != s {
        return Err(Error::Precondition(
            "psi is not defined on this structure".into(),
        ));
    }
    let target = psi.codomain();
    if !matches!(target.origin(), Origin::Power(_)) {
        return Err(Error::Precondition(
            "psi must map into a realized R^N".into(),
        ));
    }
    if target.semiring() != s.semiring() {
        return Err(Error::DomainMismatch {
            left: format!("{:?}", s.semiring()),
            right: format!("{:?}", target.semiring()),
        });
    }
    if !matches!(psi.linear(), Verification::Yes) {
        return Err(Error::Precondition("psi is not verified linear".into()));
    }
    let inverse = match (psi.invertible(), psi.inverse_table()) {
        (Verification::Yes, Some(inv)) => inv,
        _ => return Err(Error::Precondition("psi is not verified invertible".into())),
    };
    let table = psi.table();
    let dim = match target.origin() {
        Origin::Power(d) => *d,
        Origin::Table => unreachable!(),
    };
    let zero_prime = target
        .index_of_vector(&DenseVec::zero(target.semiring(), dim))
        .expect("zero vector lies in R^N");
    let zero = inverse[zero_prime];

    let check = |cond: Condition, transported: bool| -> Outcome {
        let hit = for_each_assignment(s.scalars(), s.size(), cond.shape(), |a, x| {
            let images: Vec<usize> = x.iter().map(|&v| table[v]).collect();
            let (lp, rp) = cond.sides(target, zero_prime, a, &images);
            if !transported {
                return lp != rp;
            }
            let (l, r) = cond.sides(s, zero, a, x);
            table[l] != lp || table[r] != rp || inverse[lp] != inverse[rp] || l != r
        });
        Outcome {
            condition: cond,
            witness: hit.map(|(scalars, elements)| Witness::Tuple { scalars, elements }),
        }
    };
    Ok(TransportReport {
        zero,
        primed: Condition::STANDARD
            .iter()
            .map(|&c| check(c, false))
            .collect(),
        transported: Condition::STANDARD
            .iter()
            .map(|&c| check(c, true))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::fixtures::*;

    #[test]
    fn identity_coordinatization() {
        let p = FiniteStructure::power(&gf(2), 2).unwrap();
        let psi = LinearMapTable::identity(&p).verified().unwrap();
        let r = transport_axioms(&p, &psi).unwrap();
        assert!(r.all_pass());
        assert_eq!(p.label(r.zero), "[0,0]");
    }

    #[test]
    fn transported_zero_follows_psi() {
        // same tables as gf(2)^2, labels permuted so the zero is not first
        let p = FiniteStructure::power(&gf(2), 2).unwrap();
        let relabeled = p
            .relabel(vec!["w".into(), "x".into(), "y".into(), "z".into()])
            .unwrap();
        let psi = LinearMapTable::new(relabeled.clone(), p.clone(), vec![0, 1, 2, 3])
            .unwrap()
            .verified()
            .unwrap();
        let r = transport_axioms(&relabeled, &psi).unwrap();
        assert!(r.all_pass());
        assert_eq!(relabeled.label(r.zero), "w");
    }

    #[test]
    fn unverified_psi_rejected() {
        let p = FiniteStructure::power(&gf(2), 1).unwrap();
        let constant = LinearMapTable::new(p.clone(), p.clone(), vec![0, 0])
            .unwrap()
            .verified()
            .unwrap();
        assert!(matches!(
            transport_axioms(&p, &constant),
            Err(Error::Precondition(_))
        ));
        let unchecked = LinearMapTable::identity(&p);
        assert!(matches!(
            transport_axioms(&p, &unchecked),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn codomain_must_be_a_power() {
        let d = diamond();
        let psi = LinearMapTable::identity(&d).verified().unwrap();
        assert!(transport_axioms(&d, &psi).is_err());
    }
}
