//! Torsion pairs over a complete universe of indecomposables.

use crate::error::{Error, Result};
use crate::homology::{hom_space, Ses};
use crate::matrix::{subspace, Matrix};
use crate::module::{Module, Morphism};
use crate::universe::{all_submodules, ClassSet, IndecUniverse};

/// A torsion pair, recorded by the indecomposables in each class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorsionPair {
    pub torsion: ClassSet,
    pub torsion_free: ClassSet,
}

/// Members `X` with `Hom(s, X) = 0` for all `s` in `set`.
pub fn right_perp(u: &IndecUniverse, set: ClassSet) -> ClassSet {
    ClassSet::from_indices((0..u.len()).filter(|&x| set.iter().all(|s| u.hom_dim(s, x) == 0)))
}

/// Members `X` with `Hom(X, s) = 0` for all `s` in `set`.
pub fn left_perp(u: &IndecUniverse, set: ClassSet) -> ClassSet {
    ClassSet::from_indices((0..u.len()).filter(|&x| set.iter().all(|s| u.hom_dim(x, s) == 0)))
}

/// Members `X` with `Ext¹(X, s) = 0` for all `s` in `set`.
pub fn left_ext_perp(u: &IndecUniverse, set: ClassSet) -> ClassSet {
    ClassSet::from_indices((0..u.len()).filter(|&x| set.iter().all(|s| u.ext_dim(x, s) == 0)))
}

/// Members `X` with `Ext¹(s, X) = 0` for all `s` in `set`.
pub fn right_ext_perp(u: &IndecUniverse, set: ClassSet) -> ClassSet {
    ClassSet::from_indices((0..u.len()).filter(|&x| set.iter().all(|s| u.ext_dim(s, x) == 0)))
}

/// Smallest torsion class containing `gens`: the left Hom-perpendicular of
/// their right Hom-perpendicular.
pub fn torsion_closure_of_set(u: &IndecUniverse, gens: ClassSet) -> ClassSet {
    left_perp(u, right_perp(u, gens))
}

/// Smallest torsion-free class containing `gens`.
pub fn torsion_free_closure_of_set(u: &IndecUniverse, gens: ClassSet) -> ClassSet {
    right_perp(u, left_perp(u, gens))
}

/// Torsion closure of arbitrary generator modules; requires a complete
/// universe.
pub fn torsion_closure(gens: &[Module], u: &IndecUniverse) -> Result<ClassSet> {
    u.require_complete()?;
    let mut set = ClassSet::empty();
    for g in gens {
        set = set.union(u.class_of(g)?);
    }
    Ok(torsion_closure_of_set(u, set))
}

/// Fixpoint of "summands of quotients of members" and "summands of middle
/// terms of extensions between sums of at most two members". Independent of
/// the perpendicular description and used to cross-check it.
pub fn torsion_closure_iterative(u: &IndecUniverse, gens: ClassSet) -> Result<ClassSet> {
    let mut cur = gens;
    loop {
        let mut next = cur;
        for x in 0..u.len() {
            if !next.contains(x) && generated_by(u, cur, u.module(x)) {
                next.insert(x);
            }
        }
        let members: Vec<usize> = next.iter().collect();
        let sums = sums_up_to_two(&members);
        for c in &sums {
            for n in &sums {
                for middle in u.ext_middles(c, n)?.iter() {
                    for &i in middle {
                        next.insert(i);
                    }
                }
            }
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Index lists of all sums of one or two members (with repetition).
pub fn sums_up_to_two(members: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = members.iter().map(|&i| vec![i]).collect();
    for (k, &i) in members.iter().enumerate() {
        for &j in &members[k..] {
            out.push(vec![i, j]);
        }
    }
    out
}

/// Trace of the members of `set` in `m`: the sum of the images of all maps
/// from members, as vertex subspaces.
pub fn trace_spaces(u: &IndecUniverse, set: ClassSet, m: &Module) -> Vec<Matrix> {
    let f = m.field();
    let mut spaces: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(f, 0, d)).collect();
    for t in set.iter() {
        for g in hom_space(u.module(t), m).basis() {
            for (v, s) in spaces.iter_mut().enumerate() {
                *s = subspace::sum(s, g.vertex_map(v));
            }
        }
    }
    spaces
}

/// `true` if `m` is a quotient of a sum of members of `set`.
pub fn generated_by(u: &IndecUniverse, set: ClassSet, m: &Module) -> bool {
    trace_spaces(u, set, m)
        .iter()
        .zip(m.dims())
        .all(|(s, &d)| s.rank() == d)
}

/// `true` if `m` embeds in a sum of members of `set`.
pub fn cogenerated_by(u: &IndecUniverse, set: ClassSet, m: &Module) -> bool {
    let f = m.field();
    let mut kernel: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
    for c in set.iter() {
        for g in hom_space(m, u.module(c)).basis() {
            for (v, k) in kernel.iter_mut().enumerate() {
                *k = subspace::intersect(k, &g.vertex_map(v).left_kernel());
            }
        }
    }
    kernel.iter().all(|k| k.rank() == 0)
}

/// `true` if every indecomposable summand of `m` lies in `set`.
pub fn in_class(u: &IndecUniverse, set: ClassSet, m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    Ok(u.class_of(m)?.is_subset(set))
}

/// `true` if `t` is closed under quotients and extensions (equivalently,
/// equal to its torsion closure).
pub fn is_torsion_class(u: &IndecUniverse, t: ClassSet) -> bool {
    torsion_closure_of_set(u, t) == t
}

pub fn is_torsion_free_class(u: &IndecUniverse, f: ClassSet) -> bool {
    torsion_free_closure_of_set(u, f) == f
}

impl TorsionPair {
    /// Pair with the given torsion class.
    pub fn from_torsion_class(t: ClassSet, u: &IndecUniverse) -> Result<TorsionPair> {
        u.require_complete()?;
        if !is_torsion_class(u, t) {
            return Err(Error::Precondition(format!(
                "{} is not a torsion class",
                describe(u, t)
            )));
        }
        let pair = TorsionPair {
            torsion: t,
            torsion_free: right_perp(u, t),
        };
        pair.verify(u)?;
        Ok(pair)
    }

    /// Pair with the given torsion-free class.
    pub fn from_torsion_free_class(f: ClassSet, u: &IndecUniverse) -> Result<TorsionPair> {
        if !is_torsion_free_class(u, f) {
            return Err(Error::Precondition(format!(
                "{} is not a torsion-free class",
                describe(u, f)
            )));
        }
        TorsionPair::from_torsion_class(left_perp(u, f), u)
    }

    /// Pair generated by the given modules.
    pub fn generated_by(gens: &[Module], u: &IndecUniverse) -> Result<TorsionPair> {
        TorsionPair::from_torsion_class(torsion_closure(gens, u)?, u)
    }

    /// Checks orthogonality and the maximality conditions against the tables.
    pub fn verify(&self, u: &IndecUniverse) -> Result<()> {
        for t in self.torsion.iter() {
            for f in self.torsion_free.iter() {
                if u.hom_dim(t, f) != 0 {
                    return Err(Error::Invariant(format!(
                        "Hom({}, {}) is nonzero",
                        u.name(t),
                        u.name(f)
                    )));
                }
            }
        }
        if right_perp(u, self.torsion) != self.torsion_free || left_perp(u, self.torsion_free) != self.torsion {
            return Err(Error::Invariant("classes are not mutually perpendicular".into()));
        }
        Ok(())
    }

    pub fn is_torsion(&self, u: &IndecUniverse, m: &Module) -> Result<bool> {
        in_class(u, self.torsion, m)
    }

    pub fn is_torsion_free(&self, u: &IndecUniverse, m: &Module) -> Result<bool> {
        in_class(u, self.torsion_free, m)
    }
}

/// Canonical sequence `0 -> t(X) -> X -> X/t(X) -> 0`.
#[derive(Clone, Debug)]
pub struct TorsionPart {
    pub torsion: Module,
    pub inclusion: Morphism,
    pub sequence: Ses,
}

/// Torsion submodule of `x` as the trace of the torsion members.
pub fn torsion_part(x: &Module, pair: &TorsionPair, u: &IndecUniverse) -> Result<TorsionPart> {
    let spaces = trace_spaces(u, pair.torsion, x);
    let (t, incl) = x.submodule(&spaces)?;
    let sequence = Ses::from_mono(&incl);
    if !pair.is_torsion(u, &t)? {
        return Err(Error::Invariant("trace of the torsion class is not torsion".into()));
    }
    if !pair.is_torsion_free(u, &sequence.right)? {
        return Err(Error::Invariant("quotient by the torsion part is not torsion-free".into()));
    }
    Ok(TorsionPart {
        torsion: t,
        inclusion: incl,
        sequence,
    })
}

/// Torsion class closed under submodules, decided by scanning every
/// submodule of every torsion member.
pub fn is_hereditary(pair: &TorsionPair, u: &IndecUniverse) -> Result<bool> {
    for t in pair.torsion.iter() {
        for (sub, _) in all_submodules(u.module(t), u.caps())? {
            if !pair.is_torsion(u, &sub)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Comma-separated member names.
pub fn describe(u: &IndecUniverse, set: ClassSet) -> String {
    let names: Vec<&str> = set.iter().map(|i| u.name(i)).collect();
    format!("{{{}}}", names.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::module::direct_sum;
    use crate::universe::Caps;
    use std::sync::Arc;

    fn a2() -> IndecUniverse {
        let a = Arc::new(parse_algebra("field 2\nvertices 1 2\narrow a: 1 -> 2\n").unwrap());
        IndecUniverse::enumerate(&a, &[2, 2], &Caps::default()).unwrap()
    }

    // universe order: S(1)=0, S(2)=1, P(1)=2

    #[test]
    fn closures() {
        let u = a2();
        assert_eq!(torsion_closure_of_set(&u, ClassSet::singleton(2)), ClassSet::from_indices([0, 2]));
        assert_eq!(torsion_closure_of_set(&u, ClassSet::empty()), ClassSet::empty());
        assert_eq!(torsion_closure_of_set(&u, ClassSet::singleton(0)), ClassSet::singleton(0));
        for bits in 0..8u64 {
            let s = ClassSet(bits);
            assert_eq!(torsion_closure_iterative(&u, s).unwrap(), torsion_closure_of_set(&u, s));
        }
    }

    #[test]
    fn pairs() {
        let u = a2();
        let p = TorsionPair::from_torsion_class(ClassSet::singleton(0), &u).unwrap();
        assert_eq!(p.torsion_free, ClassSet::from_indices([1, 2]));
        let all = TorsionPair::from_torsion_class(u.all(), &u).unwrap();
        assert!(all.torsion_free.is_empty());
        assert!(TorsionPair::from_torsion_class(ClassSet::singleton(2), &u).is_err());
    }

    #[test]
    fn torsion_parts() {
        let u = a2();
        let p = TorsionPair::from_torsion_class(ClassSet::singleton(0), &u).unwrap();
        let p1 = u.module(2).clone();
        assert!(torsion_part(&p1, &p, &u).unwrap().torsion.is_zero());
        let x = direct_sum(u.algebra(), &[&p1, u.module(0)]).module;
        let tp = torsion_part(&x, &p, &u).unwrap();
        assert_eq!(tp.torsion.dims(), &[1, 0]);
        assert!(is_hereditary(&p, &u).unwrap());
    }
}
