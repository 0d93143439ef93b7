mod common;

use freemod::cli::parse_structure;
use freemod::semiring::{Extended, Semiring};
use freemod::structures::{check_axioms, Condition};
use freemod::{
    find_basis, Boolean, DenseVec, FinSupp, FiniteStructure, GfP, Integers, Key, NonNegRationals,
    Rationals, Tropical,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::{boolean, gf};

fn int() -> impl Strategy<Value = BigInt> {
    (-50i64..50).prop_map(BigInt::from)
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..20, 1i64..7).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn nonneg() -> impl Strategy<Value = BigRational> {
    (0i64..20, 1i64..7).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn tropical() -> impl Strategy<Value = Extended<BigInt>> {
    prop_oneof![
        4 => int().prop_map(Extended::Finite),
        1 => Just(Extended::Infinity),
    ]
}

/// The eight semiring laws at one triple.
fn semiring_laws<S: Semiring>(
    r: &S,
    a: &S::Elem,
    b: &S::Elem,
    c: &S::Elem,
) -> Result<(), TestCaseError> {
    let (z, o) = (r.zero(), r.one());
    prop_assert_eq!(r.add(a, &z), a.clone());
    prop_assert_eq!(r.add(a, &r.add(b, c)), r.add(&r.add(a, b), c));
    prop_assert_eq!(r.add(a, b), r.add(b, a));
    prop_assert_eq!(r.mul(&o, a), a.clone());
    prop_assert_eq!(r.mul(a, &o), a.clone());
    prop_assert_eq!(r.mul(a, &r.mul(b, c)), r.mul(&r.mul(a, b), c));
    prop_assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)));
    prop_assert_eq!(r.mul(&r.add(a, b), c), r.add(&r.mul(a, c), &r.mul(b, c)));
    prop_assert_eq!(r.mul(&z, a), z.clone());
    prop_assert_eq!(r.mul(a, &z), z);
    // formatting round-trips
    prop_assert_eq!(r.parse(&r.format(a)), Some(a.clone()));
    Ok(())
}

/// Module laws for dense vectors and their sparse images.
fn vector_laws<S: Semiring>(
    r: &S,
    a: &S::Elem,
    b: &S::Elem,
    x: Vec<S::Elem>,
    y: Vec<S::Elem>,
) -> Result<(), TestCaseError> {
    let dim = x.len().min(y.len());
    let x = DenseVec::new(r.clone(), x[..dim].to_vec()).unwrap();
    let y = DenseVec::new(r.clone(), y[..dim].to_vec()).unwrap();
    let xy = x.add(&y).unwrap();
    prop_assert_eq!(&xy, &y.add(&x).unwrap());
    prop_assert_eq!(xy.scale_by(a), x.scale_by(a).add(&y.scale_by(a)).unwrap());
    prop_assert_eq!(
        x.scale_by(&r.add(a, b)),
        x.scale_by(a).add(&x.scale_by(b)).unwrap()
    );
    prop_assert_eq!(x.scale_by(&r.mul(a, b)), x.scale_by(b).scale_by(a));
    prop_assert_eq!(&x.scale_by(&r.one()), &x);
    prop_assert!(x.scale_by(&r.zero()).is_zero());

    let (fx, fy) = (x.to_finsupp(), y.to_finsupp());
    prop_assert!(fx.is_canonical());
    prop_assert_eq!(xy.to_finsupp(), fx.add(&fy).unwrap());
    prop_assert_eq!(x.scale_by(a).to_finsupp(), fx.scale_by(a));
    prop_assert_eq!(fx.to_dense(dim).unwrap(), x.clone());
    prop_assert_eq!(DenseVec::parse(r, &x.to_string()).unwrap(), x);
    prop_assert_eq!(FinSupp::parse(r, &fx.to_string()).unwrap(), fx);
    Ok(())
}

proptest! {
    #[test]
    fn integers(a in int(), b in int(), c in int(), x in prop::collection::vec(int(), 0..5), y in prop::collection::vec(int(), 0..5)) {
        let r = Integers::default();
        semiring_laws(&r, &a, &b, &c)?;
        vector_laws(&r, &a, &b, x, y)?;
    }

    #[test]
    fn rationals(a in rational(), b in rational(), c in rational(), x in prop::collection::vec(rational(), 0..5), y in prop::collection::vec(rational(), 0..5)) {
        let r = Rationals::default();
        semiring_laws(&r, &a, &b, &c)?;
        vector_laws(&r, &a, &b, x, y)?;
    }

    #[test]
    fn nonneg_rationals(a in nonneg(), b in nonneg(), c in nonneg(), x in prop::collection::vec(nonneg(), 0..5), y in prop::collection::vec(nonneg(), 0..5)) {
        let r = NonNegRationals::default();
        semiring_laws(&r, &a, &b, &c)?;
        vector_laws(&r, &a, &b, x, y)?;
    }

    #[test]
    fn tropical_min_plus(a in tropical(), b in tropical(), c in tropical(), x in prop::collection::vec(tropical(), 0..5), y in prop::collection::vec(tropical(), 0..5)) {
        let r = Tropical::default();
        semiring_laws(&r, &a, &b, &c)?;
        vector_laws(&r, &a, &b, x, y)?;
    }

    #[test]
    fn gf7(a in 0u64..7, b in 0u64..7, c in 0u64..7, x in prop::collection::vec(0u64..7, 0..5), y in prop::collection::vec(0u64..7, 0..5)) {
        let r = GfP::new(7).unwrap();
        semiring_laws(&r, &a, &b, &c)?;
        vector_laws(&r, &a, &b, x, y)?;
        if a != 0 {
            prop_assert!((1..7).any(|i| r.mul(&a, &i) == 1));
        }
    }

    #[test]
    fn boolean_laws(a: bool, b: bool, c: bool, x in prop::collection::vec(any::<bool>(), 0..5), y in prop::collection::vec(any::<bool>(), 0..5)) {
        semiring_laws(&Boolean, &a, &b, &c)?;
        vector_laws(&Boolean, &a, &b, x, y)?;
    }

    #[test]
    fn sparse_keys_may_be_strings(keys in prop::collection::btree_set("[a-z]{1,4}", 0..6), vals in prop::collection::vec(0u64..5, 6)) {
        let r = GfP::new(5).unwrap();
        let pairs: Vec<(Key, u64)> = keys.iter().zip(&vals).map(|(k, v)| (Key::Str(k.clone()), *v)).collect();
        let s = FinSupp::from_pairs(&r, pairs).unwrap();
        prop_assert!(s.is_canonical());
        prop_assert_eq!(s.add(&s.scale_by(&4)).unwrap(), FinSupp::empty(&r));
        prop_assert_eq!(FinSupp::parse(&r, &s.to_string()).unwrap(), s);
    }
}

/// Random two- or three-element structure over gf(2) or boolean.
fn random_structure() -> impl Strategy<Value = FiniteStructure> {
    (2usize..=3, any::<bool>()).prop_flat_map(|(n, over_gf)| {
        let add = prop::collection::vec(0..n, n * n);
        let action = prop::collection::vec(0..n, 2 * n);
        (add, action).prop_map(move |(add, action)| {
            let ring = if over_gf { gf(2) } else { boolean() };
            let labels = (0..n).map(|i| format!("e{i}")).collect();
            FiniteStructure::new(ring, labels, add, action).unwrap()
        })
    })
}

/// Writes a structure in the `freemod/1` format.
fn to_file(s: &FiniteStructure) -> String {
    let n = s.size();
    let row = |t: &[usize], r: usize| -> String {
        let cells: Vec<&str> = t[r * n..(r + 1) * n].iter().map(|&x| s.label(x)).collect();
        format!("  {}\n", cells.join(" "))
    };
    let mut out = format!(
        "freemod/1\nkind structure\nsemiring {}\ncarrier {}\nadd\n",
        s.semiring().name(),
        s.labels().join(" ")
    );
    (0..n).for_each(|r| out.push_str(&row(s.add_table(), r)));
    out.push_str("action\n");
    (0..s.scalars()).for_each(|r| out.push_str(&row(s.action_table(), r)));
    out
}

proptest! {
    #[test]
    fn axiom_reports_are_sound(s in random_structure()) {
        let r = check_axioms(&s);
        prop_assert!(r.confirm(&s));
        prop_assert_eq!(&r, &check_axioms(&s));
        prop_assert_eq!(r.passes(Condition::Identity), !r.zero_candidates.is_empty());
        if let Some(z) = r.zero {
            prop_assert!(r.zero_candidates.contains(&z));
        }
    }

    #[test]
    fn find_basis_agrees_with_oracle(s in random_structure()) {
        let v = find_basis(&s, 1_000_000);
        let got = v.basis.map(|b| b.elements().to_vec());
        prop_assert_eq!(got, common::oracle::free_basis(&s));
    }

    #[test]
    fn structure_files_round_trip(s in random_structure()) {
        let back = parse_structure(&to_file(&s)).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn parser_never_panics(text in "freemod/1\nkind (structure|semiring|map)\n[ a-z0-9\\[\\],>#\n-]{0,80}") {
        let _ = freemod::cli::parse_structure(&text);
        let _ = freemod::cli::parse_semiring(&text);
        let _ = freemod::cli::parse_map(&text);
    }
}
