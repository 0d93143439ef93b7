use std::fmt;

use super::axioms::{first_violation, Condition};
use super::FiniteStructure;
use crate::semiring::check_ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaOutcome {
    /// Premise and conclusion both hold.
    Holds,
    /// The premise is false, so nothing was asserted.
    PremiseNotMet(String),
    /// The argument needs structure the scalars do not have.
    NotApplicable(String),
    /// Premise holds, conclusion fails. The string is a dump of the structure.
    Counterexample(String),
}

impl LemmaOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            LemmaOutcome::Holds => "holds",
            LemmaOutcome::PremiseNotMet(_) => "premise not met",
            LemmaOutcome::NotApplicable(_) => "premise not applicable",
            LemmaOutcome::Counterexample(_) => "COUNTEREXAMPLE",
        }
    }
}

impl fmt::Display for LemmaOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LemmaOutcome::Holds => f.write_str("holds"),
            LemmaOutcome::PremiseNotMet(why) | LemmaOutcome::NotApplicable(why) => {
                write!(f, "{} ({why})", self.tag())
            }
            LemmaOutcome::Counterexample(_) => f.write_str("COUNTEREXAMPLE"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaPart {
    pub claim: &'static str,
    pub outcome: LemmaOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: &'static str,
    pub parts: Vec<LemmaPart>,
}

impl LemmaReport {
    pub fn counterexamples(&self) -> usize {
        self.parts
            .iter()
            .filter(|p| matches!(p.outcome, LemmaOutcome::Counterexample(_)))
            .count()
    }

    /// At least one part had its premise met and its conclusion confirmed.
    pub fn confirmed(&self) -> bool {
        self.parts.iter().any(|p| p.outcome == LemmaOutcome::Holds)
    }
}

fn failing(s: &FiniteStructure, conds: &[Condition]) -> Option<Condition> {
    conds
        .iter()
        .copied()
        .find(|&c| first_violation(s, c, 0).is_some())
}

fn has_inverses(s: &FiniteStructure, zero: usize) -> bool {
    (0..s.size()).all(|x| (0..s.size()).any(|y| s.add(x, y) == zero))
}

/// Right identities `z` that also satisfy (9) relative to `z`.
fn identities_with_inverses(s: &FiniteStructure) -> Vec<usize> {
    s.right_identities()
        .into_iter()
        .filter(|&z| has_inverses(s, z))
        .collect()
}

fn scalars_form_ring(s: &FiniteStructure) -> bool {
    check_ring(s.semiring()).is_ok_and(|r| r.is_ring())
}

/// Given (2)–(7): `0x = 0` for all `x` iff (1) and (9).
///
/// The two directions are reported separately. Deriving (9) from `0x = 0`
/// uses the scalar `-1`, so over a semiring without additive inverses that
/// direction is [`LemmaOutcome::NotApplicable`]. The other direction needs no
/// negative scalars and is checked over any semiring.
pub fn lemma_8_iff_1_and_9(s: &FiniteStructure) -> LemmaReport {
    const FORWARD: &str = "0x = 0 for all x implies (1) and (9)";
    const BACKWARD: &str = "(1) and (9) imply 0x = 0 for all x";
    let report = |forward, backward| LemmaReport {
        lemma: "(8a) iff (1) and (9)",
        parts: vec![
            LemmaPart {
                claim: FORWARD,
                outcome: forward,
            },
            LemmaPart {
                claim: BACKWARD,
                outcome: backward,
            },
        ],
    };
    if let Some(c) = failing(s, &Condition::ZERO_FREE) {
        let why = format!("{} fails", c.label());
        return report(
            LemmaOutcome::PremiseNotMet(why.clone()),
            LemmaOutcome::PremiseNotMet(why),
        );
    }
    let zero_scalar = s.semiring().zero_index();

    // 0x is the same element for every x
    let constant = s.act(zero_scalar, 0);
    let forward_premise = (0..s.size()).all(|x| s.act(zero_scalar, x) == constant);
    let forward = if !scalars_form_ring(s) {
        LemmaOutcome::NotApplicable("scalars have no -1".into())
    } else if !forward_premise {
        LemmaOutcome::PremiseNotMet("0x is not constant".into())
    } else if (0..s.size()).all(|x| s.add(x, constant) == x) && has_inverses(s, constant) {
        LemmaOutcome::Holds
    } else {
        LemmaOutcome::Counterexample(s.dump())
    };

    let zeros = identities_with_inverses(s);
    let backward = if zeros.is_empty() {
        LemmaOutcome::PremiseNotMet("no zero satisfies (1) and (9)".into())
    } else if zeros
        .iter()
        .all(|&z| (0..s.size()).all(|x| s.act(zero_scalar, x) == z))
    {
        LemmaOutcome::Holds
    } else {
        LemmaOutcome::Counterexample(s.dump())
    };
    report(forward, backward)
}

/// Given (1), (9) and (2)–(7): `a0 = 0` for every scalar `a`.
pub fn lemma_a_zero(s: &FiniteStructure) -> LemmaReport {
    let outcome = if let Some(c) = failing(s, &Condition::ZERO_FREE) {
        LemmaOutcome::PremiseNotMet(format!("{} fails", c.label()))
    } else {
        let zeros = identities_with_inverses(s);
        if zeros.is_empty() {
            LemmaOutcome::PremiseNotMet("no zero satisfies (1) and (9)".into())
        } else if zeros
            .iter()
            .all(|&z| (0..s.scalars()).all(|a| s.act(a, z) == z))
        {
            LemmaOutcome::Holds
        } else {
            LemmaOutcome::Counterexample(s.dump())
        }
    };
    LemmaReport {
        lemma: "a0 = 0",
        parts: vec![LemmaPart {
            claim: "(1), (9) and (2)-(7) imply a0 = 0",
            outcome,
        }],
    }
}

/// Over a ring: a two-sided zero with (2) and (4)–(9) forces (3).
pub fn lemma_commutativity_derivable(s: &FiniteStructure) -> LemmaReport {
    let outcome = (|| {
        if !scalars_form_ring(s) {
            return LemmaOutcome::NotApplicable("scalars are not a ring".into());
        }
        let others = [
            Condition::Associative,
            Condition::Unital,
            Condition::Compatible,
            Condition::DistributesOverVectors,
            Condition::DistributesOverScalars,
        ];
        if let Some(c) = failing(s, &others) {
            return LemmaOutcome::PremiseNotMet(format!("{} fails", c.label()));
        }
        let zeros: Vec<usize> = (0..s.size())
            .filter(|&z| (0..s.size()).all(|x| s.add(x, z) == x && s.add(z, x) == x))
            .filter(|&z| {
                [Condition::ZeroScalar, Condition::ScaledZero]
                    .iter()
                    .all(|&c| first_violation(s, c, z).is_none())
                    && has_inverses(s, z)
            })
            .collect();
        if zeros.is_empty() {
            return LemmaOutcome::PremiseNotMet("no two-sided zero satisfies (8) and (9)".into());
        }
        if first_violation(s, Condition::Commutative, 0).is_none() {
            LemmaOutcome::Holds
        } else {
            LemmaOutcome::Counterexample(s.dump())
        }
    })();
    LemmaReport {
        lemma: "(3) is derivable",
        parts: vec![LemmaPart {
            claim: "x + 0 = x = 0 + x, (2) and (4)-(9) imply (3)",
            outcome,
        }],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::fixtures::*;

    #[test]
    fn gf2_squared_satisfies_both_directions() {
        let p = FiniteStructure::power(&gf(2), 2).unwrap();
        let r = lemma_8_iff_1_and_9(&p);
        assert!(r.parts.iter().all(|p| p.outcome == LemmaOutcome::Holds));
        assert_eq!(lemma_a_zero(&p).parts[0].outcome, LemmaOutcome::Holds);
        assert_eq!(
            lemma_commutativity_derivable(&p).parts[0].outcome,
            LemmaOutcome::Holds
        );
    }

    #[test]
    fn left_projection_premise_not_met() {
        let r = lemma_8_iff_1_and_9(&left_projection());
        assert!(r
            .parts
            .iter()
            .all(|p| matches!(p.outcome, LemmaOutcome::PremiseNotMet(_))));
        assert_eq!(r.counterexamples(), 0);
    }

    #[test]
    fn gf3_line_scaled_zero() {
        let p = FiniteStructure::power(&gf(3), 1).unwrap();
        assert_eq!(lemma_a_zero(&p).parts[0].outcome, LemmaOutcome::Holds);
    }

    #[test]
    fn chain_fails_nine() {
        let r = lemma_a_zero(&chain3());
        assert!(matches!(r.parts[0].outcome, LemmaOutcome::PremiseNotMet(_)));
        // forward direction would need -1, which boolean lacks
        let r = lemma_8_iff_1_and_9(&chain3());
        assert!(matches!(r.parts[0].outcome, LemmaOutcome::NotApplicable(_)));
        assert!(matches!(r.parts[1].outcome, LemmaOutcome::PremiseNotMet(_)));
    }

    #[test]
    fn boolean_commutativity_not_applicable() {
        assert!(matches!(
            lemma_commutativity_derivable(&diamond()).parts[0].outcome,
            LemmaOutcome::NotApplicable(_)
        ));
    }
}
