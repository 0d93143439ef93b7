//! Naive re-implementations over raw tables.

use freemod::semiring::TableSemiring;
use freemod::FiniteStructure;

/// Raw view of a structure: carrier size, scalar count and the four tables.
pub struct Raw<'a> {
    pub n: usize,
    pub r: usize,
    add: &'a [usize],
    act: &'a [usize],
    radd: &'a [usize],
    rmul: &'a [usize],
    pub r0: usize,
    pub r1: usize,
}

impl<'a> Raw<'a> {
    pub fn new(s: &'a FiniteStructure) -> Self {
        let t = s.semiring();
        Raw {
            n: s.size(),
            r: t.size(),
            add: s.add_table(),
            act: s.action_table(),
            radd: t.add_table(),
            rmul: t.mul_table(),
            r0: t.zero_index(),
            r1: t.one_index(),
        }
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y]
    }

    pub fn act(&self, a: usize, x: usize) -> usize {
        self.act[a * self.n + x]
    }

    fn sadd(&self, a: usize, b: usize) -> usize {
        self.radd[a * self.r + b]
    }

    fn smul(&self, a: usize, b: usize) -> usize {
        self.rmul[a * self.r + b]
    }

    pub fn associative(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n)
                .all(|y| (0..n).all(|z| self.add(x, self.add(y, z)) == self.add(self.add(x, y), z)))
        })
    }

    pub fn commutative(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.add(x, y) == self.add(y, x)))
    }

    pub fn unital(&self) -> bool {
        (0..self.n).all(|x| self.act(self.r1, x) == x)
    }

    pub fn compatible(&self) -> bool {
        (0..self.r).all(|a| {
            (0..self.r).all(|b| {
                (0..self.n).all(|x| self.act(a, self.act(b, x)) == self.act(self.smul(a, b), x))
            })
        })
    }

    pub fn distributes_over_vectors(&self) -> bool {
        (0..self.r).all(|a| {
            (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    self.act(a, self.add(x, y)) == self.add(self.act(a, x), self.act(a, y))
                })
            })
        })
    }

    pub fn distributes_over_scalars(&self) -> bool {
        (0..self.r).all(|a| {
            (0..self.r).all(|b| {
                (0..self.n).all(|x| {
                    self.act(self.sadd(a, b), x) == self.add(self.act(a, x), self.act(b, x))
                })
            })
        })
    }

    /// (2)–(7).
    pub fn zero_free(&self) -> bool {
        self.associative()
            && self.commutative()
            && self.unital()
            && self.compatible()
            && self.distributes_over_vectors()
            && self.distributes_over_scalars()
    }

    pub fn right_identity(&self, z: usize) -> bool {
        (0..self.n).all(|x| self.add(x, z) == x)
    }

    pub fn two_sided_identity(&self, z: usize) -> bool {
        (0..self.n).all(|x| self.add(x, z) == x && self.add(z, x) == x)
    }

    pub fn zero_scalar(&self, z: usize) -> bool {
        (0..self.n).all(|x| self.act(self.r0, x) == z)
    }

    pub fn scaled_zero(&self, z: usize) -> bool {
        (0..self.r).all(|a| self.act(a, z) == z)
    }

    pub fn inverses(&self, z: usize) -> bool {
        (0..self.n).all(|x| (0..self.n).any(|y| self.add(x, y) == z))
    }

    /// Some `z` for which (1)–(8) all hold.
    pub fn standard_zero(&self) -> Option<usize> {
        if !self.zero_free() {
            return None;
        }
        (0..self.n).find(|&z| self.right_identity(z) && self.zero_scalar(z) && self.scaled_zero(z))
    }

    pub fn scalars_form_ring(&self) -> bool {
        (0..self.r).all(|a| (0..self.r).any(|b| self.sadd(a, b) == self.r0))
    }
}

/// Smallest bijective evaluation subset, least in lexicographic order of its
/// sorted elements, found by trying every subset and every coefficient tuple.
/// `None` when the structure is not free.
pub fn free_basis(s: &FiniteStructure) -> Option<Vec<usize>> {
    let raw = Raw::new(s);
    let z = raw.standard_zero()?;
    let n = raw.n;
    let mut found: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let ys: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let total = raw.r.pow(ys.len() as u32);
        let mut hits = vec![0usize; n];
        for t in 0..total {
            let mut rest = t;
            let mut acc = z;
            for &y in &ys {
                let c = rest % raw.r;
                rest /= raw.r;
                acc = raw.add(acc, raw.act(c, y));
            }
            hits[acc] += 1;
        }
        if hits.iter().all(|&h| h == 1) {
            found.push(ys);
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found.into_iter().next()
}

/// Lexicographically least violation of each of the eight semiring
/// conditions, variables `a, b, c` with `a` most significant.
pub fn semiring_witnesses(t: &TableSemiring) -> Vec<Option<Vec<usize>>> {
    let r = t.size();
    let add = |a: usize, b: usize| t.add_table()[a * r + b];
    let mul = |a: usize, b: usize| t.mul_table()[a * r + b];
    let (zero, one) = (t.zero_index(), t.one_index());
    let first = |arity: usize, holds: &dyn Fn(&[usize]) -> bool| -> Option<Vec<usize>> {
        let total = r.pow(arity as u32);
        (0..total).find_map(|i| {
            let mut v = vec![0; arity];
            let mut rest = i;
            for slot in v.iter_mut().rev() {
                *slot = rest % r;
                rest /= r;
            }
            (!holds(&v)).then_some(v)
        })
    };
    vec![
        first(1, &|v| add(v[0], zero) == v[0]),
        first(3, &|v| {
            add(v[0], add(v[1], v[2])) == add(add(v[0], v[1]), v[2])
        }),
        first(2, &|v| add(v[0], v[1]) == add(v[1], v[0])),
        first(1, &|v| mul(one, v[0]) == v[0] && mul(v[0], one) == v[0]),
        first(3, &|v| {
            mul(v[0], mul(v[1], v[2])) == mul(mul(v[0], v[1]), v[2])
        }),
        first(3, &|v| {
            mul(v[0], add(v[1], v[2])) == add(mul(v[0], v[1]), mul(v[0], v[2]))
        }),
        first(3, &|v| {
            mul(add(v[0], v[1]), v[2]) == add(mul(v[0], v[2]), mul(v[1], v[2]))
        }),
        first(1, &|v| mul(zero, v[0]) == zero && mul(v[0], zero) == zero),
    ]
}
