use std::fmt;

use super::Semiring;
use crate::error::{Error, Result};

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Every tuple of the finite carrier was evaluated.
    Exhaustive,
    /// Only a finite sample was evaluated; a pass is a smoke test, not a proof.
    Sampled,
    /// Answered from the known classification of a built-in system.
    Known,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::Sampled => "sampled",
            Method::Known => "known",
        })
    }
}

/// The eight semiring conditions, numbered as usual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemiringCondition(pub u8);

impl SemiringCondition {
    pub const ALL: [SemiringCondition; 8] = [
        Self(1),
        Self(2),
        Self(3),
        Self(4),
        Self(5),
        Self(6),
        Self(7),
        Self(8),
    ];

    pub fn statement(self) -> &'static str {
        match self.0 {
            1 => "a + 0 = a",
            2 => "a + (b + c) = (a + b) + c",
            3 => "a + b = b + a",
            4 => "1a = a = a1",
            5 => "a(bc) = (ab)c",
            6 => "a(b + c) = ab + ac",
            7 => "(a + b)c = ac + bc",
            8 => "0a = 0 = a0",
            _ => unreachable!("no such semiring condition"),
        }
    }

    fn arity(self) -> usize {
        match self.0 {
            1 | 4 | 8 => 1,
            3 => 2,
            _ => 3,
        }
    }

    fn holds<S: Semiring>(self, r: &S, v: &[&S::Elem]) -> bool {
        let (zero, one) = (r.zero(), r.one());
        match self.0 {
            1 => r.add(v[0], &zero) == *v[0],
            2 => r.add(v[0], &r.add(v[1], v[2])) == r.add(&r.add(v[0], v[1]), v[2]),
            3 => r.add(v[0], v[1]) == r.add(v[1], v[0]),
            4 => r.mul(&one, v[0]) == *v[0] && r.mul(v[0], &one) == *v[0],
            5 => r.mul(v[0], &r.mul(v[1], v[2])) == r.mul(&r.mul(v[0], v[1]), v[2]),
            6 => r.mul(v[0], &r.add(v[1], v[2])) == r.add(&r.mul(v[0], v[1]), &r.mul(v[0], v[2])),
            7 => r.mul(&r.add(v[0], v[1]), v[2]) == r.add(&r.mul(v[0], v[2]), &r.mul(v[1], v[2])),
            8 => r.mul(&zero, v[0]) == zero && r.mul(v[0], &zero) == zero,
            _ => unreachable!(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringConditionOutcome<E> {
    pub condition: SemiringCondition,
    /// The lexicographically least violating tuple, in the order the
    /// variables appear in the statement.
    pub witness: Option<Vec<E>>,
}

impl<E> SemiringConditionOutcome<E> {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringAxiomReport<E> {
    pub semiring: String,
    pub method: Method,
    pub conditions: Vec<SemiringConditionOutcome<E>>,
}

impl<E> SemiringAxiomReport<E> {
    pub fn passed(&self) -> usize {
        self.conditions.iter().filter(|c| c.passed()).count()
    }

    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.passed())
    }

    pub fn outcome(&self, n: u8) -> &SemiringConditionOutcome<E> {
        &self.conditions[n as usize - 1]
    }
}

fn first_violation<S: Semiring>(
    ring: &S,
    cond: SemiringCondition,
    carrier: &[S::Elem],
) -> Option<Vec<S::Elem>> {
    let k = cond.arity();
    let n = carrier.len();
    let mut idx = vec![0usize; k];
    if n == 0 {
        return None;
    }
    loop {
        let tuple: Vec<&S::Elem> = idx.iter().map(|&i| &carrier[i]).collect();
        if !cond.holds(ring, &tuple) {
            return Some(tuple.into_iter().cloned().collect());
        }
        // odometer, last variable fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Evaluates the semiring conditions (1)–(8).
///
/// Finite semirings are checked exhaustively and `sample` is ignored. Infinite
/// ones are evaluated on `sample` (or [`Semiring::sample`] when `None`) and the
/// report is marked [`Method::Sampled`].
pub fn check_semiring_axioms<S: Semiring>(
    ring: &S,
    sample: Option<&[S::Elem]>,
) -> Result<SemiringAxiomReport<S::Elem>> {
    let (carrier, method) = match ring.elements() {
        Some(all) => (all, Method::Exhaustive),
        None => {
            let s = match sample {
                Some(s) => s.to_vec(),
                None => ring.sample(),
            };
            if s.is_empty() {
                return Err(Error::Precondition(format!(
                    "{} is infinite and needs a non-empty sample",
                    ring.name()
                )));
            }
            if let Some(bad) = s.iter().find(|a| !ring.contains(a)) {
                return Err(Error::NotInCarrier {
                    value: format!("{bad:?}"),
                    semiring: ring.name(),
                });
            }
            (s, Method::Sampled)
        }
    };
    let conditions = SemiringCondition::ALL
        .iter()
        .map(|&c| SemiringConditionOutcome {
            condition: c,
            witness: first_violation(ring, c, &carrier),
        })
        .collect();
    Ok(SemiringAxiomReport {
        semiring: ring.name(),
        method,
        conditions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingReport<E> {
    pub method: Method,
    /// An element with no additive inverse; `None` means the system is a ring.
    pub witness: Option<E>,
}

impl<E> RingReport<E> {
    pub fn is_ring(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldObstruction<E> {
    NotRing,
    ZeroIsOne,
    NonCommutative { a: E, b: E },
    NoInverse { a: E },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldReport<E> {
    pub method: Method,
    pub obstruction: Option<FieldObstruction<E>>,
}

impl<E> FieldReport<E> {
    pub fn is_field(&self) -> bool {
        self.obstruction.is_none()
    }
}

fn known<S: Semiring>(ring: &S) -> Result<super::KnownClass<S::Elem>> {
    ring.known_class().ok_or_else(|| {
        Error::Precondition(format!("no classification available for {}", ring.name()))
    })
}

/// Existence of additive inverses: exhaustive for finite carriers, known
/// classification otherwise.
pub fn check_ring<S: Semiring>(ring: &S) -> Result<RingReport<S::Elem>> {
    match ring.elements() {
        Some(all) => {
            let zero = ring.zero();
            let witness = all
                .iter()
                .find(|a| !all.iter().any(|b| ring.add(a, b) == zero))
                .cloned();
            Ok(RingReport {
                method: Method::Exhaustive,
                witness,
            })
        }
        None => Ok(RingReport {
            method: Method::Known,
            witness: known(ring)?.no_additive_inverse,
        }),
    }
}

/// Ring, `0 ≠ 1`, commutative multiplication, inverses of nonzero elements.
pub fn check_field<S: Semiring>(ring: &S) -> Result<FieldReport<S::Elem>> {
    let Some(all) = ring.elements() else {
        return Ok(FieldReport {
            method: Method::Known,
            obstruction: known(ring)?.field_obstruction,
        });
    };
    let obstruction = (|| {
        if !check_ring(ring).ok()?.is_ring() {
            return Some(FieldObstruction::NotRing);
        }
        let (zero, one) = (ring.zero(), ring.one());
        if zero == one {
            return Some(FieldObstruction::ZeroIsOne);
        }
        for a in &all {
            for b in &all {
                if ring.mul(a, b) != ring.mul(b, a) {
                    return Some(FieldObstruction::NonCommutative {
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
            }
        }
        all.iter()
            .find(|a| **a != zero && !all.iter().any(|b| ring.mul(a, b) == one))
            .map(|a| FieldObstruction::NoInverse { a: a.clone() })
    })();
    Ok(FieldReport {
        method: Method::Exhaustive,
        obstruction,
    })
}
