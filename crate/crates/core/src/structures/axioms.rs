use std::fmt;

use super::FiniteStructure;

/// The module conditions. Condition (8) is split into its two equalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// (1) x + 0 = x
    Identity,
    /// (2) x + (y + z) = (x + y) + z
    Associative,
    /// (3) x + y = y + x
    Commutative,
    /// (4) 1x = x
    Unital,
    /// (5) a(bx) = (ab)x
    Compatible,
    /// (6) a(x + y) = ax + ay
    DistributesOverVectors,
    /// (7) (a + b)x = ax + bx
    DistributesOverScalars,
    /// (8a) 0x = 0
    ZeroScalar,
    /// (8b) a0 = 0
    ScaledZero,
    /// (9) every x has some y with x + y = 0
    Inverses,
}

impl Condition {
    pub const ALL: [Condition; 10] = [
        Condition::Identity,
        Condition::Associative,
        Condition::Commutative,
        Condition::Unital,
        Condition::Compatible,
        Condition::DistributesOverVectors,
        Condition::DistributesOverScalars,
        Condition::ZeroScalar,
        Condition::ScaledZero,
        Condition::Inverses,
    ];

    /// (1)–(8): what a semimodule must satisfy.
    pub const STANDARD: [Condition; 9] = [
        Condition::Identity,
        Condition::Associative,
        Condition::Commutative,
        Condition::Unital,
        Condition::Compatible,
        Condition::DistributesOverVectors,
        Condition::DistributesOverScalars,
        Condition::ZeroScalar,
        Condition::ScaledZero,
    ];

    /// (2)–(7): the conditions that do not mention the zero element.
    pub const ZERO_FREE: [Condition; 6] = [
        Condition::Associative,
        Condition::Commutative,
        Condition::Unital,
        Condition::Compatible,
        Condition::DistributesOverVectors,
        Condition::DistributesOverScalars,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Condition::Identity => "(1)",
            Condition::Associative => "(2)",
            Condition::Commutative => "(3)",
            Condition::Unital => "(4)",
            Condition::Compatible => "(5)",
            Condition::DistributesOverVectors => "(6)",
            Condition::DistributesOverScalars => "(7)",
            Condition::ZeroScalar => "(8a)",
            Condition::ScaledZero => "(8b)",
            Condition::Inverses => "(9)",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Condition::Identity => "x + 0 = x",
            Condition::Associative => "x + (y + z) = (x + y) + z",
            Condition::Commutative => "x + y = y + x",
            Condition::Unital => "1x = x",
            Condition::Compatible => "a(bx) = (ab)x",
            Condition::DistributesOverVectors => "a(x + y) = ax + ay",
            Condition::DistributesOverScalars => "(a + b)x = ax + bx",
            Condition::ZeroScalar => "0x = 0",
            Condition::ScaledZero => "a0 = 0",
            Condition::Inverses => "x + (-x) = 0",
        }
    }

    /// Number of scalar and element variables.
    pub(crate) fn shape(self) -> (usize, usize) {
        match self {
            Condition::Identity | Condition::Unital | Condition::ZeroScalar => (0, 1),
            Condition::Inverses => (0, 1),
            Condition::Associative => (0, 3),
            Condition::Commutative => (0, 2),
            Condition::Compatible | Condition::DistributesOverScalars => (2, 1),
            Condition::DistributesOverVectors => (1, 2),
            Condition::ScaledZero => (1, 0),
        }
    }

    pub(crate) fn uses_zero(self) -> bool {
        matches!(
            self,
            Condition::Identity
                | Condition::ZeroScalar
                | Condition::ScaledZero
                | Condition::Inverses
        )
    }

    /// Both sides of an equational condition. Not defined for (9).
    pub(crate) fn sides(
        self,
        s: &FiniteStructure,
        zero: usize,
        a: &[usize],
        x: &[usize],
    ) -> (usize, usize) {
        let ring = s.semiring();
        let (r0, r1) = (ring.zero_index(), ring.one_index());
        let radd = |p: usize, q: usize| ring.add_table()[p * ring.size() + q];
        let rmul = |p: usize, q: usize| ring.mul_table()[p * ring.size() + q];
        match self {
            Condition::Identity => (s.add(x[0], zero), x[0]),
            Condition::Associative => (
                s.add(x[0], s.add(x[1], x[2])),
                s.add(s.add(x[0], x[1]), x[2]),
            ),
            Condition::Commutative => (s.add(x[0], x[1]), s.add(x[1], x[0])),
            Condition::Unital => (s.act(r1, x[0]), x[0]),
            Condition::Compatible => (
                s.act(a[0], s.act(a[1], x[0])),
                s.act(rmul(a[0], a[1]), x[0]),
            ),
            Condition::DistributesOverVectors => (
                s.act(a[0], s.add(x[0], x[1])),
                s.add(s.act(a[0], x[0]), s.act(a[0], x[1])),
            ),
            Condition::DistributesOverScalars => (
                s.act(radd(a[0], a[1]), x[0]),
                s.add(s.act(a[0], x[0]), s.act(a[1], x[0])),
            ),
            Condition::ZeroScalar => (s.act(r0, x[0]), zero),
            Condition::ScaledZero => (s.act(a[0], zero), zero),
            Condition::Inverses => unreachable!("(9) is not an equation"),
        }
    }

    fn holds_at(self, s: &FiniteStructure, zero: usize, a: &[usize], x: &[usize]) -> bool {
        match self {
            Condition::Inverses => (0..s.size()).any(|y| s.add(x[0], y) == zero),
            _ => {
                let (l, r) = self.sides(s, zero, a, x);
                l == r
            }
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label(), self.statement())
    }
}

/// Every `(scalars, elements)` assignment in lexicographic order, scalars
/// first. Calls `visit` until it returns `true`.
pub(crate) fn for_each_assignment(
    scalars: usize,
    elements: usize,
    shape: (usize, usize),
    mut visit: impl FnMut(&[usize], &[usize]) -> bool,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let (ks, kx) = shape;
    if (ks > 0 && scalars == 0) || (kx > 0 && elements == 0) {
        return None;
    }
    let radix: Vec<usize> = std::iter::repeat_n(scalars, ks)
        .chain(std::iter::repeat_n(elements, kx))
        .collect();
    let mut digits = vec![0usize; ks + kx];
    loop {
        if visit(&digits[..ks], &digits[ks..]) {
            return Some((digits[..ks].to_vec(), digits[ks..].to_vec()));
        }
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < radix[pos] {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// A concrete refutation of one condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Scalar and element indices, in the order they appear in the statement.
    Tuple {
        scalars: Vec<usize>,
        elements: Vec<usize>,
    },
    /// No right identity exists: for each candidate `z`, an `x` with `x + z ≠ x`.
    NoIdentity { refutations: Vec<(usize, usize)> },
}

impl Witness {
    /// Re-evaluates the witness; `true` when it is a genuine violation.
    pub fn is_violation(&self, cond: Condition, s: &FiniteStructure, zero: Option<usize>) -> bool {
        match self {
            Witness::NoIdentity { refutations } => {
                refutations.len() == s.size()
                    && refutations
                        .iter()
                        .enumerate()
                        .all(|(i, &(z, x))| z == i && s.add(x, z) != x)
            }
            Witness::Tuple { scalars, elements } => {
                let (ks, kx) = cond.shape();
                if scalars.len() != ks || elements.len() != kx {
                    return false;
                }
                let z = match (cond.uses_zero(), zero) {
                    (true, Some(z)) => z,
                    (true, None) => return false,
                    (false, _) => 0,
                };
                !cond.holds_at(s, z, scalars, elements)
            }
        }
    }

    pub fn render(&self, s: &FiniteStructure) -> String {
        match self {
            Witness::Tuple { scalars, elements } => {
                let names: Vec<&str> = scalars
                    .iter()
                    .map(|&a| s.semiring().label(a))
                    .chain(elements.iter().map(|&x| s.label(x)))
                    .collect();
                format!("({})", names.join(", "))
            }
            Witness::NoIdentity { refutations } => {
                let parts: Vec<String> = refutations
                    .iter()
                    .map(|&(z, x)| format!("{}+{}", s.label(x), s.label(z)))
                    .collect();
                format!("no right identity [{}]", parts.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub condition: Condition,
    pub witness: Option<Witness>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Results of the zero-dependent conditions for one right identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    pub zero: usize,
    pub outcomes: Vec<Outcome>,
}

impl CandidateReport {
    pub fn passes(&self, cond: Condition) -> bool {
        self.outcomes
            .iter()
            .find(|o| o.condition == cond)
            .is_some_and(Outcome::passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// The element used for the zero-dependent conditions: the first right
    /// identity satisfying (8a), (8b) and (9), else the first satisfying
    /// (8a) and (8b), else the first right identity.
    pub zero: Option<usize>,
    /// Every `z` with `x + z = x` for all `x`.
    pub zero_candidates: Vec<usize>,
    pub candidates: Vec<CandidateReport>,
    /// All ten conditions, in order.
    pub outcomes: Vec<Outcome>,
}

impl AxiomReport {
    pub fn outcome(&self, cond: Condition) -> &Outcome {
        self.outcomes
            .iter()
            .find(|o| o.condition == cond)
            .expect("every condition is reported")
    }

    pub fn passes(&self, cond: Condition) -> bool {
        self.outcome(cond).passed()
    }

    pub fn passes_all(&self, conds: &[Condition]) -> bool {
        conds.iter().all(|&c| self.passes(c))
    }

    /// Conditions (1)–(8) hold for one common zero.
    pub fn is_standard(&self) -> bool {
        self.passes_all(&Condition::STANDARD)
    }

    pub fn passed_count(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed()).count()
    }

    /// Every failing entry re-evaluates to a violation.
    pub fn confirm(&self, s: &FiniteStructure) -> bool {
        self.outcomes.iter().all(|o| match &o.witness {
            None => true,
            Some(w) => w.is_violation(o.condition, s, self.zero),
        })
    }
}

pub(crate) fn first_violation(
    s: &FiniteStructure,
    cond: Condition,
    zero: usize,
) -> Option<Witness> {
    for_each_assignment(s.scalars(), s.size(), cond.shape(), |a, x| {
        !cond.holds_at(s, zero, a, x)
    })
    .map(|(scalars, elements)| Witness::Tuple { scalars, elements })
}

const ZERO_DEPENDENT: [Condition; 3] = [
    Condition::ZeroScalar,
    Condition::ScaledZero,
    Condition::Inverses,
];

/// Evaluates (1)–(9) exhaustively.
pub fn check_axioms(s: &FiniteStructure) -> AxiomReport {
    let zero_candidates = s.right_identities();
    let candidates: Vec<CandidateReport> = zero_candidates
        .iter()
        .map(|&z| CandidateReport {
            zero: z,
            outcomes: ZERO_DEPENDENT
                .iter()
                .map(|&c| Outcome {
                    condition: c,
                    witness: first_violation(s, c, z),
                })
                .collect(),
        })
        .collect();
    let pick = |conds: &[Condition]| {
        candidates
            .iter()
            .find(|c| conds.iter().all(|&k| c.passes(k)))
            .map(|c| c.zero)
    };
    let zero = pick(&ZERO_DEPENDENT)
        .or_else(|| pick(&ZERO_DEPENDENT[..2]))
        .or_else(|| zero_candidates.first().copied());

    let no_identity = || Witness::NoIdentity {
        refutations: (0..s.size())
            .map(|z| (z, (0..s.size()).find(|&x| s.add(x, z) != x).unwrap_or(0)))
            .collect(),
    };
    let outcomes = Condition::ALL
        .iter()
        .map(|&c| {
            let witness = match (c, zero) {
                (_, None) if c.uses_zero() => Some(no_identity()),
                (Condition::Identity, Some(_)) => None,
                (_, Some(z)) if c.uses_zero() => candidates
                    .iter()
                    .find(|k| k.zero == z)
                    .and_then(|k| k.outcomes.iter().find(|o| o.condition == c))
                    .and_then(|o| o.witness.clone()),
                _ => first_violation(s, c, 0),
            };
            Outcome {
                condition: c,
                witness,
            }
        })
        .collect();
    AxiomReport {
        zero,
        zero_candidates,
        candidates,
        outcomes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::Semiring;
    use crate::structures::fixtures::*;

    #[test]
    fn gf2_squared_passes_everything() {
        let s = FiniteStructure::power(&gf(2), 2).unwrap();
        let r = check_axioms(&s);
        assert_eq!(r.passed_count(), 10);
        assert_eq!(r.zero.map(|z| s.label(z)), Some("[0,0]"));
        assert_eq!(r.zero_candidates, vec![0]);
    }

    #[test]
    fn chain_lacks_inverses() {
        let s = chain3();
        let r = check_axioms(&s);
        assert!(r.is_standard());
        assert_eq!(
            r.outcome(Condition::Inverses).witness,
            Some(Witness::Tuple {
                scalars: vec![],
                elements: vec![1]
            })
        );
        assert_eq!(s.label(1), "a");
        assert!(r.confirm(&s));
    }

    #[test]
    fn left_projection_is_not_commutative() {
        let s = left_projection();
        let r = check_axioms(&s);
        let w = r.outcome(Condition::Commutative).witness.clone().unwrap();
        assert_eq!(w.render(&s), "(x0, x1)");
        // x + y = x makes every element a right identity
        assert_eq!(r.zero_candidates, vec![0, 1]);
        assert!(r.passes(Condition::Identity));
        assert!(r.confirm(&s));
    }

    #[test]
    fn missing_identity_is_witnessed() {
        // x + y = y: no right identity on two elements
        let s = FiniteStructure::new(
            boolean(),
            vec!["p".into(), "q".into()],
            vec![0, 1, 0, 1],
            vec![0, 0, 0, 1],
        )
        .unwrap();
        let r = check_axioms(&s);
        assert_eq!(r.zero, None);
        assert_eq!(
            r.outcome(Condition::Identity).witness,
            Some(Witness::NoIdentity {
                refutations: vec![(0, 1), (1, 0)]
            })
        );
        assert!(!r.passes(Condition::ZeroScalar));
        assert!(r.confirm(&s));
    }

    #[test]
    fn deterministic_reports() {
        let s = diamond();
        assert_eq!(check_axioms(&s), check_axioms(&s.clone()));
    }

    #[test]
    fn powers_satisfy_standard_notion() {
        for (ring, is_ring) in [(gf(2), true), (gf(3), true), (boolean(), false)] {
            for dim in 0..=2 {
                let s = FiniteStructure::power(&ring, dim).unwrap();
                let r = check_axioms(&s);
                assert!(r.is_standard(), "{}^{dim}", ring.name());
                assert_eq!(r.passes(Condition::Inverses), is_ring || dim == 0);
            }
        }
    }

    #[test]
    fn assignment_order_is_lexicographic() {
        let mut seen = vec![];
        for_each_assignment(2, 3, (1, 1), |a, x| {
            seen.push((a[0], x[0]));
            false
        });
        assert_eq!(seen, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]);
    }
}
