//! Property tests for the definition language and permutation algebra.

use proptest::prelude::*;

use pigraph::groupdef::{parse_group_definition, parse_permutation, GroupSpec};
use pigraph::perm::Permutation;

fn arb_permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(Permutation::from_images)
}

fn arb_leaf_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..=64).prop_map(GroupSpec::Cyclic),
        prop::collection::vec(1usize..=9, 1..=3).prop_map(GroupSpec::Abelian),
        (1usize..=6).prop_map(GroupSpec::Sym),
        (1usize..=6).prop_map(GroupSpec::Alt),
        (1usize..=24).prop_map(GroupSpec::Dihedral),
        Just(GroupSpec::Quaternion8),
        prop::sample::select(vec![2usize, 3, 5, 7, 11, 13]).prop_map(GroupSpec::Psl2),
        (2usize..=6).prop_flat_map(|degree| {
            prop::collection::vec(arb_permutation(degree), 1..=3)
                .prop_map(move |generators| GroupSpec::Perm { degree, generators })
        }),
    ]
}

fn arb_spec() -> impl Strategy<Value = GroupSpec> {
    arb_leaf_spec().prop_recursive(2, 6, 2, |inner| {
        (inner.clone(), inner)
            .prop_map(|(a, b)| GroupSpec::Product(Box::new(a), Box::new(b)))
    })
}

proptest! {
    /// parse ∘ print is the identity on specs.
    #[test]
    fn printer_parses_back(spec in arb_spec()) {
        let printed = spec.to_string();
        let reparsed = parse_group_definition(&printed);
        prop_assert_eq!(reparsed, Ok(spec));
    }

    /// A parsed permutation composed with its inverse is the identity.
    #[test]
    fn parsed_permutation_cancels_with_inverse(
        perm in (2usize..=10).prop_flat_map(arb_permutation)
    ) {
        let degree = perm.degree();
        let text = perm.to_string();
        let parsed = parse_permutation(&text, degree).unwrap();
        prop_assert_eq!(&parsed, &perm);
        prop_assert!(parsed.compose(&parsed.inverse()).is_identity());
        prop_assert!(parsed.inverse().compose(&parsed).is_identity());
    }

    /// Composition is associative.
    #[test]
    fn composition_is_associative(
        (a, b, c) in (3usize..=8).prop_flat_map(|d| {
            (arb_permutation(d), arb_permutation(d), arb_permutation(d))
        })
    ) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    /// The identity fixes every point and is neutral for composition.
    #[test]
    fn identity_is_neutral(p in (1usize..=10).prop_flat_map(arb_permutation)) {
        let id = Permutation::identity(p.degree());
        prop_assert_eq!(&id.compose(&p), &p);
        prop_assert_eq!(&p.compose(&id), &p);
    }
}
