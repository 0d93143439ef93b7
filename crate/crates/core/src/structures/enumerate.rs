use num_bigint::BigUint;

use super::FiniteStructure;
use crate::error::{Error, Result};
use crate::semiring::TableSemiring;

/// `n^(n²) · n^(|R|·n)`: every addition table times every action table.
pub fn structure_count(n: usize, semiring: &TableSemiring) -> BigUint {
    let exponent = (n * n + semiring.size() * n) as u32;
    BigUint::from(n).pow(exponent)
}

/// Every structure on an `n`-element carrier, addition table major, both
/// tables read row-major with the last entry varying fastest.
///
/// Refuses when the count exceeds `budget`.
pub fn enumerate_structures(
    n: usize,
    semiring: &TableSemiring,
    budget: u64,
) -> Result<StructureIter> {
    if n == 0 {
        return Err(Error::Precondition(
            "carrier size must be at least 1".into(),
        ));
    }
    let count = structure_count(n, semiring);
    if count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            budget,
            needed: count.to_string(),
        });
    }
    Ok(StructureIter {
        n,
        semiring: semiring.clone(),
        labels: (0..n).map(|i| format!("x{i}")).collect(),
        digits: Some(vec![0; n * n + semiring.size() * n]),
    })
}

pub struct StructureIter {
    n: usize,
    semiring: TableSemiring,
    labels: Vec<String>,
    digits: Option<Vec<usize>>,
}

impl Iterator for StructureIter {
    type Item = FiniteStructure;

    fn next(&mut self) -> Option<FiniteStructure> {
        let digits = self.digits.as_mut()?;
        let split = self.n * self.n;
        let item = FiniteStructure::new(
            self.semiring.clone(),
            self.labels.clone(),
            digits[..split].to_vec(),
            digits[split..].to_vec(),
        )
        .expect("enumerated tables are closed");
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.n {
                break;
            }
            digits[pos] = 0;
        }
        Some(item)
    }
}
