mod common;

use common::{a2, a3, d4};
use heart_core::cotilting::{cotilting_from_pair, same_module, special_cover, special_envelope};
use heart_core::decompose::is_brick;
use heart_core::heart::{
    classify_neg_isolated, hereditary_cover_check, heart_simples, is_almost_torsion, is_almost_torsion_free,
    is_left_almost_split, is_strong_las_fast, left_almost_split_oracle, theorem_a_sequence, theorem_b_sequence,
    HeartSimpleKind, Mode,
};
use heart_core::lattice::torsion_classes;
use heart_core::module::Morphism;
use heart_core::torsion::{is_hereditary, torsion_closure_of_set, TorsionPair};
use heart_core::universe::{Caps, ClassSet, IndecUniverse};
use heart_core::Error;
use proptest::prelude::*;

fn idx(u: &IndecUniverse, name: &str) -> usize {
    (0..u.len()).find(|&i| u.name(i) == name).unwrap_or_else(|| panic!("no {name}"))
}

fn pair_generated_by(u: &IndecUniverse, names: &[&str]) -> TorsionPair {
    let gens = ClassSet::from_indices(names.iter().map(|n| idx(u, n)));
    TorsionPair::from_torsion_class(torsion_closure_of_set(u, gens), u).unwrap()
}

#[test]
fn atf_fails_when_the_extension_is_torsion() {
    let u = a2();
    let pair = pair_generated_by(u, &["P(1)"]);
    assert_eq!(pair.torsion_free, ClassSet::singleton(idx(u, "S(2)")));
    for mode in [Mode::Fast, Mode::Oracle] {
        assert!(!is_almost_torsion_free(u, &pair, idx(u, "S(1)"), mode).unwrap());
        assert!(is_almost_torsion_free(u, &pair, idx(u, "S(2)"), mode).unwrap());
    }
}

#[test]
fn extreme_pairs_give_the_simple_modules() {
    let u = a2();
    let simples = ClassSet::from_indices([idx(u, "S(1)"), idx(u, "S(2)")]);
    for (t, kind) in [
        (u.all(), HeartSimpleKind::TorsionAlmostTorsionFreeShifted),
        (ClassSet::empty(), HeartSimpleKind::TorsionFreeAlmostTorsion),
    ] {
        let pair = TorsionPair::from_torsion_class(t, u).unwrap();
        let found = heart_simples(u, &pair, Mode::Oracle).unwrap();
        assert!(found.iter().all(|s| s.kind == kind));
        assert_eq!(ClassSet::from_indices(found.iter().map(|s| s.index)), simples);
    }
}

#[test]
fn non_cotilting_pair_is_rejected() {
    let u = a2();
    let pair = pair_generated_by(u, &["S(2)"]);
    assert!(matches!(cotilting_from_pair(&pair, u), Err(Error::NotCotilting(_))));
}

#[test]
fn identity_and_zero_maps() {
    let u = a2();
    let pair = pair_generated_by(u, &["S(1)"]);
    let d = cotilting_from_pair(&pair, u).unwrap();
    let p1 = u.module(idx(u, "P(1)"));
    assert!(!is_left_almost_split(u, &Morphism::identity(p1), d.c_class).unwrap());
    let to_zero = Morphism::zero(p1, &heart_core::module::Module::zero(u.algebra()));
    assert_eq!(left_almost_split_oracle(u, &to_zero, d.c_class).unwrap(), (true, true));
    assert!(is_strong_las_fast(u, &to_zero, &d).unwrap());
}

#[test]
fn a3_sequences_agree_with_factorisation_scan() {
    let u = a3();
    let pair = pair_generated_by(u, &["S(1)"]);
    let d = cotilting_from_pair(&pair, u).unwrap();
    let simples = heart_simples(u, &pair, Mode::Oracle).unwrap();
    assert_eq!(simples, heart_simples(u, &pair, Mode::Fast).unwrap());
    let mut seen = [false; 2];
    for s in &simples {
        let seq = match s.kind {
            HeartSimpleKind::TorsionAlmostTorsionFreeShifted => {
                seen[0] = true;
                theorem_b_sequence(u, s.index, &d).unwrap()
            }
            HeartSimpleKind::TorsionFreeAlmostTorsion => {
                seen[1] = true;
                theorem_a_sequence(u, s.index, &d).unwrap()
            }
        };
        assert!(d.summands.contains(seq.n));
        assert_eq!(left_almost_split_oracle(u, &seq.las, d.c_class).unwrap(), (true, true));
        assert!(is_strong_las_fast(u, &seq.las, &d).unwrap());
    }
    assert_eq!(seen, [true, true]);
    assert!(matches!(
        theorem_b_sequence(u, idx(u, "S(3)"), &d),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn a3_envelope_of_a_radical() {
    let u = a3();
    let pair = pair_generated_by(u, &["S(1)"]);
    let d = cotilting_from_pair(&pair, u).unwrap();
    let p1 = u.module(idx(u, "P(1)"));
    let (rad, _) = heart_core::homology::radical(p1);
    let env = special_envelope(&rad, &d, u).unwrap();
    assert!(env.ses.inject.is_mono());
    assert!(env.ses.surject.is_epi());
    assert!(env.middle.iter().all(|&i| d.perp_class.contains(i)));
    assert!(env.right.iter().all(|&i| d.c_class.contains(i)));
}

#[test]
fn hereditary_check_rejects_other_pairs() {
    let mut rejected = 0;
    for u in [a3(), d4()] {
        for t in torsion_classes(u).unwrap() {
            let pair = TorsionPair::from_torsion_class(t, u).unwrap();
            let Ok(d) = cotilting_from_pair(&pair, u) else { continue };
            if is_hereditary(&pair, u).unwrap() {
                continue;
            }
            for q in t.iter().filter(|&q| u.module(q).total_dim() == 1) {
                assert!(matches!(hereditary_cover_check(u, q, &d), Err(Error::Precondition(_))));
                rejected += 1;
            }
        }
    }
    assert!(rejected > 0);
}

#[test]
fn covers_do_not_depend_on_member_order() {
    let u = d4();
    let n = u.len();
    let order: Vec<usize> = (0..n).rev().collect();
    let v = IndecUniverse::from_parts(
        u.algebra(),
        u.bound().to_vec(),
        Caps::default(),
        order.iter().map(|&i| u.module(i).clone()).collect(),
        None,
        None,
    )
    .unwrap();
    let moved = |s: ClassSet| ClassSet::from_indices(s.iter().map(|i| n - 1 - i));
    for t in torsion_classes(u).unwrap() {
        let pair = TorsionPair::from_torsion_class(t, u).unwrap();
        let Ok(d) = cotilting_from_pair(&pair, u) else { continue };
        let e = cotilting_from_pair(&TorsionPair::from_torsion_class(moved(t), &v).unwrap(), &v).unwrap();
        assert_eq!(moved(d.summands), e.summands);
        for q in t.iter() {
            let a = special_cover(u.module(q), &d, u).unwrap();
            let b = special_cover(v.module(n - 1 - q), &e, &v).unwrap();
            assert!(same_module(&a.ses.middle, &b.ses.middle).unwrap());
            assert!(same_module(&a.ses.left, &b.ses.left).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Every torsion pair of a representation-finite algebra is functorially
    // finite, so its heart is a module category with one simple per vertex.
    #[test]
    fn heart_simples_are_bricks_one_per_vertex(k in 0usize..50) {
        let u = d4();
        let t = torsion_classes(u).unwrap()[k];
        let pair = TorsionPair::from_torsion_class(t, u).unwrap();
        let simples = heart_simples(u, &pair, Mode::Fast).unwrap();
        prop_assert_eq!(simples.len(), 4);
        for s in &simples {
            prop_assert!(is_brick(u.module(s.index)).unwrap());
            let torsion = s.kind == HeartSimpleKind::TorsionAlmostTorsionFreeShifted;
            prop_assert_eq!(pair.torsion.contains(s.index), torsion);
            let passes = if torsion {
                is_almost_torsion_free(u, &pair, s.index, Mode::Oracle)
            } else {
                is_almost_torsion(u, &pair, s.index, Mode::Oracle)
            };
            prop_assert!(passes.unwrap());
        }
        if let Ok(d) = cotilting_from_pair(&pair, u) {
            let c = classify_neg_isolated(u, &d).unwrap();
            prop_assert!(c.critical.intersection(c.special).is_empty());
            prop_assert_eq!(c.critical.union(c.special), d.summands);
        }
    }
}
