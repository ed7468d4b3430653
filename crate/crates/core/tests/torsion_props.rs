mod common;

use common::{a3, d4};
use heart_core::lattice::{count_torsion_classes_by_subsets, enumerate_torsion_classes, torsion_classes};
use heart_core::torsion::{
    is_torsion_class, is_torsion_free_class, left_perp, right_perp, torsion_closure_iterative, torsion_closure_of_set,
    torsion_free_closure_of_set, TorsionPair,
};
use heart_core::universe::ClassSet;
use proptest::prelude::*;

fn subset() -> impl Strategy<Value = ClassSet> {
    (0u64..(1 << 12)).prop_map(ClassSet)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_agrees_with_iteration(gens in subset()) {
        let u = d4();
        prop_assert_eq!(torsion_closure_of_set(u, gens), torsion_closure_iterative(u, gens).unwrap());
    }

    #[test]
    fn closure_is_an_idempotent_extensive_torsion_class(gens in subset()) {
        let u = d4();
        let t = torsion_closure_of_set(u, gens);
        prop_assert!(gens.is_subset(t));
        prop_assert_eq!(torsion_closure_of_set(u, t), t);
        prop_assert!(is_torsion_class(u, t));
        let f = torsion_free_closure_of_set(u, gens);
        prop_assert!(gens.is_subset(f));
        prop_assert!(is_torsion_free_class(u, f));
    }

    #[test]
    fn closure_is_monotone(a in subset(), b in subset()) {
        let u = d4();
        let small = torsion_closure_of_set(u, a.intersection(b));
        prop_assert!(small.is_subset(torsion_closure_of_set(u, a)));
        prop_assert!(torsion_closure_of_set(u, a).is_subset(torsion_closure_of_set(u, a.union(b))));
    }

    #[test]
    fn pairs_are_orthogonal_and_maximal(gens in subset()) {
        let u = d4();
        let pair = TorsionPair::from_torsion_class(torsion_closure_of_set(u, gens), u).unwrap();
        pair.verify(u).unwrap();
        prop_assert!(pair.torsion.intersection(pair.torsion_free).is_empty());
        prop_assert_eq!(right_perp(u, pair.torsion), pair.torsion_free);
        prop_assert_eq!(left_perp(u, pair.torsion_free), pair.torsion);
        for t in pair.torsion.iter() {
            for f in pair.torsion_free.iter() {
                prop_assert_eq!(u.hom_dim(t, f), 0);
            }
        }
    }
}

#[test]
fn non_closed_sets_are_rejected() {
    let u = a3();
    // Over 1 -> 2 -> 3 the projective P(1) has every other module with top S(1) as a quotient.
    let p1 = (0..u.len()).find(|&i| u.name(i) == "P(1)").unwrap();
    let only = ClassSet::singleton(p1);
    assert!(!is_torsion_class(u, only));
    assert!(TorsionPair::from_torsion_class(only, u).is_err());
}

#[test]
fn d4_has_fifty_torsion_classes() {
    let u = d4();
    let classes = torsion_classes(u).unwrap();
    assert_eq!(classes.len(), 50);
    assert_eq!(count_torsion_classes_by_subsets(u).unwrap(), 50);
    let lat = enumerate_torsion_classes(u).unwrap();
    assert_eq!(lat.classes[0], ClassSet::empty());
    assert_eq!(lat.classes[lat.top()], u.all());
    // Every class covers, and is covered by, exactly as many classes as the
    // number of simples when counted together (the lattice is 4-regular).
    for i in 0..lat.classes.len() {
        let degree = lat.covers_from(i).count() + lat.covers_into(i).count();
        assert_eq!(degree, 4, "class {i}");
    }
}

#[test]
fn a3_lattice_matches_subset_count() {
    let u = a3();
    assert_eq!(torsion_classes(u).unwrap().len(), 14);
    assert_eq!(count_torsion_classes_by_subsets(u).unwrap(), 14);
}

#[test]
fn closure_operator_on_every_a2_subset() {
    let u = common::a2();
    for a in 0..8u64 {
        let t = torsion_closure_of_set(u, ClassSet(a));
        assert!(ClassSet(a).is_subset(t));
        assert_eq!(torsion_closure_of_set(u, t), t);
        assert_eq!(torsion_closure_iterative(u, ClassSet(a)).unwrap(), t);
        for b in 0..8u64 {
            if ClassSet(a).is_subset(ClassSet(b)) {
                assert!(t.is_subset(torsion_closure_of_set(u, ClassSet(b))));
            }
        }
    }
}
