//! The lattice of torsion classes over a complete universe, its Hasse
//! quiver, and brick labels of the covering relations.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::decompose::is_brick;
use crate::error::{Error, Result};
use crate::heart::{heart_simples, is_almost_torsion, is_almost_torsion_free, HeartSimpleKind, Mode};
use crate::torsion::{describe, left_perp, right_perp, torsion_closure_of_set, TorsionPair};
use crate::universe::{ClassSet, IndecUniverse};

/// Largest universe for which the lattice is enumerated.
pub const MAX_LATTICE_MEMBERS: usize = 24;

/// A covering relation `upper ⋗ lower`, both indices into `classes`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub upper: usize,
    pub lower: usize,
    /// Universe index of the brick labelling the arrow.
    pub label: usize,
}

#[derive(Clone, Debug)]
pub struct TorsLattice {
    /// Torsion classes ordered by size, then by bit pattern.
    pub classes: Vec<ClassSet>,
    pub covers: Vec<Cover>,
}

impl TorsLattice {
    pub fn position(&self, t: ClassSet) -> Option<usize> {
        self.classes.iter().position(|&c| c == t)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.classes[a].is_subset(self.classes[b])
    }

    /// Index of the class of all members.
    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn covers_from(&self, upper: usize) -> impl Iterator<Item = &Cover> {
        self.covers.iter().filter(move |c| c.upper == upper)
    }

    pub fn covers_into(&self, lower: usize) -> impl Iterator<Item = &Cover> {
        self.covers.iter().filter(move |c| c.lower == lower)
    }
}

/// All torsion classes, reached from the empty class by repeatedly adding
/// one member and closing. Every torsion class is the closure of its
/// members added one at a time, so the search is exhaustive.
pub fn torsion_classes(u: &IndecUniverse) -> Result<Vec<ClassSet>> {
    u.require_complete()?;
    if u.len() > MAX_LATTICE_MEMBERS {
        return Err(Error::Resource(format!(
            "{} indecomposables exceed the lattice limit of {}",
            u.len(),
            MAX_LATTICE_MEMBERS
        )));
    }
    let mut seen: HashSet<ClassSet> = HashSet::new();
    let mut queue = VecDeque::from([ClassSet::empty()]);
    seen.insert(ClassSet::empty());
    while let Some(t) = queue.pop_front() {
        for i in 0..u.len() {
            if t.contains(i) {
                continue;
            }
            let mut g = t;
            g.insert(i);
            let next = torsion_closure_of_set(u, g);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut classes: Vec<ClassSet> = seen.into_iter().collect();
    classes.sort_by_key(|c| (c.len(), c.0));
    Ok(classes)
}

/// Enumerates the lattice and labels every cover.
pub fn enumerate_torsion_classes(u: &IndecUniverse) -> Result<TorsLattice> {
    let classes = torsion_classes(u)?;
    let set: HashSet<ClassSet> = classes.iter().copied().collect();
    for &a in &classes {
        for &b in &classes {
            if !set.contains(&a.intersection(b)) {
                return Err(Error::Invariant(format!(
                    "meet of {} and {} is not a torsion class",
                    describe(u, a),
                    describe(u, b)
                )));
            }
        }
    }
    let mut covers = Vec::new();
    for (hi, &t) in classes.iter().enumerate() {
        for (lo, &s) in classes.iter().enumerate() {
            if s == t || !s.is_subset(t) {
                continue;
            }
            let between = classes
                .iter()
                .any(|&v| v != s && v != t && s.is_subset(v) && v.is_subset(t));
            if !between {
                covers.push(Cover {
                    upper: hi,
                    lower: lo,
                    label: cover_label(u, t, s)?,
                });
            }
        }
    }
    Ok(TorsLattice { classes, covers })
}

/// The unique torsion, almost torsion-free `S` for `(T, T^⊥)` with
/// `U = T ∩ ⊥S`.
pub fn cover_label(u: &IndecUniverse, t: ClassSet, lower: ClassSet) -> Result<usize> {
    let pair = TorsionPair {
        torsion: t,
        torsion_free: right_perp(u, t),
    };
    let mut found = Vec::new();
    for s in t.iter() {
        if t.intersection(left_perp(u, ClassSet::singleton(s))) == lower
            && is_almost_torsion_free(u, &pair, s, Mode::Fast)?
        {
            found.push(s);
        }
    }
    match found.as_slice() {
        [s] => Ok(*s),
        [] => Err(Error::Invariant(format!(
            "no label for the cover {} ⋗ {}",
            describe(u, t),
            describe(u, lower)
        ))),
        _ => Err(Error::Invariant(format!(
            "labels of the cover {} ⋗ {} are not unique: {}",
            describe(u, t),
            describe(u, lower),
            describe(u, ClassSet::from_indices(found))
        ))),
    }
}

/// Consistency checks on a labelled lattice. Returns one message per
/// violation.
pub fn check_labels(u: &IndecUniverse, lat: &TorsLattice) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for c in &lat.covers {
        let (t, s) = (lat.classes[c.upper], lat.classes[c.lower]);
        let arrow = format!("{} ⋗ {}", describe(u, t), describe(u, s));
        if !is_brick(u.module(c.label))? {
            bad.push(format!("label {} of {arrow} is not a brick", u.name(c.label)));
        }
        let bricks: Vec<usize> = t
            .intersection(right_perp(u, s))
            .iter()
            .filter(|&x| is_brick(u.module(x)).unwrap_or(false))
            .collect();
        if bricks != [c.label] {
            bad.push(format!(
                "bricks of T ∩ U^⊥ for {arrow} are {}, label is {}",
                describe(u, ClassSet::from_indices(bricks)),
                u.name(c.label)
            ));
        }
        let lower_pair = TorsionPair {
            torsion: s,
            torsion_free: right_perp(u, s),
        };
        if !lower_pair.torsion_free.contains(c.label) || !is_almost_torsion(u, &lower_pair, c.label, Mode::Fast)? {
            bad.push(format!(
                "label {} of {arrow} is not torsion-free and almost torsion below",
                u.name(c.label)
            ));
        }
    }
    let simples = u.modules().iter().filter(|m| m.total_dim() == 1).count();
    let down = lat.covers_from(lat.top()).count();
    if down != simples {
        bad.push(format!("{down} covers below the top class but {simples} simple modules"));
    }
    Ok(bad)
}

/// Labels of the arrows at a torsion class compared with the heart simples
/// of its pair.
#[derive(Clone, Debug)]
pub struct IncidentReport {
    /// Labels of covers `T ⋗ U`, sorted.
    pub down: Vec<usize>,
    /// Labels of covers `V ⋗ T`, sorted.
    pub up: Vec<usize>,
    /// Torsion, almost torsion-free heart simples, sorted.
    pub shifted: Vec<usize>,
    /// Torsion-free, almost torsion heart simples, sorted.
    pub unshifted: Vec<usize>,
}

impl IncidentReport {
    pub fn matches(&self) -> bool {
        self.down == self.shifted && self.up == self.unshifted
    }
}

pub fn incident_arrows_vs_heart(u: &IndecUniverse, pair: &TorsionPair, lat: &TorsLattice) -> Result<IncidentReport> {
    let at = lat.position(pair.torsion).ok_or_else(|| {
        Error::Precondition(format!("{} is not in the lattice", describe(u, pair.torsion)))
    })?;
    let mut down: Vec<usize> = lat.covers_from(at).map(|c| c.label).collect();
    let mut up: Vec<usize> = lat.covers_into(at).map(|c| c.label).collect();
    down.sort_unstable();
    up.sort_unstable();
    let mut shifted = Vec::new();
    let mut unshifted = Vec::new();
    for s in heart_simples(u, pair, Mode::Fast)? {
        match s.kind {
            HeartSimpleKind::TorsionAlmostTorsionFreeShifted => shifted.push(s.index),
            HeartSimpleKind::TorsionFreeAlmostTorsion => unshifted.push(s.index),
        }
    }
    Ok(IncidentReport {
        down,
        up,
        shifted,
        unshifted,
    })
}

/// Independent count of torsion classes: subsets closed under the
/// Hom-perpendicular double closure, over all subsets of members.
pub fn count_torsion_classes_by_subsets(u: &IndecUniverse) -> Result<usize> {
    if u.len() > 20 {
        return Err(Error::Resource("subset scan limited to 20 members".into()));
    }
    let mut found = BTreeSet::new();
    for bits in 0..(1u64 << u.len()) {
        let s = ClassSet(bits);
        if left_perp(u, right_perp(u, s)) == s {
            found.insert(bits);
        }
    }
    Ok(found.len())
}
