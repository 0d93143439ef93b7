//! Free semimodules over semirings, decided and coordinatized on finite
//! carriers.
//!
//! * [`semiring`]: scalar systems and their axiom checks.
//! * [`freemod`]: `R^N` as [`DenseVec`] and `R^J` as [`FinSupp`].
//! * [`structures`]: finite sets with table-defined addition and scalar
//!   multiplication, the module axioms, and axiom transport.
//! * [`linmap`]: table maps between finite carriers: linearity,
//!   invertibility and isomorphism search.
//! * [`freeness`]: basis search and the coordinatization isomorphism.
//! * [`cli`]: file formats and reports behind the `freemod` binary.
//!
//! ```
//! use freemod::freeness::{find_basis, FreenessStatus, DEFAULT_BUDGET};
//! use freemod::{coordinatize, FiniteStructure, GfP, TableSemiring};
//!
//! let gf3 = TableSemiring::from_finite(&GfP::new(3).unwrap()).unwrap();
//! let plane = FiniteStructure::power(&gf3, 2).unwrap();
//! let verdict = find_basis(&plane, DEFAULT_BUDGET);
//! assert_eq!(verdict.status, FreenessStatus::Free);
//! let basis = verdict.basis.unwrap();
//! let labels: Vec<&str> = basis.elements().iter().map(|&y| plane.label(y)).collect();
//! assert_eq!(labels, ["[0,1]", "[1,0]"]);
//!
//! let psi = coordinatize(&plane, &basis).unwrap();
//! assert!(psi.linear().is_yes() && psi.invertible().is_yes());
//! ```

pub mod cli;
pub mod error;
pub mod freemod;
pub mod freeness;
pub mod linmap;
pub mod semiring;
pub mod structures;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

pub use error::{Error, Result};
pub use freemod::{DenseVec, FinSupp, Key};
pub use freeness::{coordinatize, find_basis, verify_free_iff_standard, Basis, FreenessVerdict};
pub use linmap::{check_isomorphic, LinearMapTable};
pub use semiring::{Boolean, GfP, Scalar, Semiring, TableSemiring, TruncatedTropical};
pub use structures::{check_axioms, transport_axioms, AxiomReport, FiniteStructure};

pub type Integers = semiring::Numeric<BigInt>;
pub type Naturals = semiring::Numeric<BigUint>;
pub type Rationals = semiring::Numeric<BigRational>;
pub type NonNegRationals = semiring::NonNegative<BigRational>;
pub type Tropical = semiring::TropicalMinPlus<BigInt>;

pub type IntegerVec = DenseVec<Integers>;
pub type RationalVec = DenseVec<Rationals>;
pub type NonNegRationalVec = DenseVec<NonNegRationals>;
pub type IntegerSupp = FinSupp<Integers>;
pub type RationalSupp = FinSupp<Rationals>;
pub type BooleanSupp = FinSupp<Boolean>;
pub type GfSupp = FinSupp<GfP>;
