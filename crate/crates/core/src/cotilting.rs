//! Cotilting modules attached to torsion pairs, special covers and
//! envelopes for the cotorsion pair `(C, C^perp)`, and the modules `C0`,
//! `C1` coresolving the injective cogenerator.

use crate::decompose::isomorphic;
use crate::error::{Error, Result};
use crate::homology::{injective_dimension, minimal_left_approx, minimal_right_approx, Ses};
use crate::module::{direct_sum, standard_modules, Module};
use crate::torsion::{cogenerated_by, describe, left_ext_perp, right_ext_perp, TorsionPair};
use crate::universe::{ClassSet, IndecUniverse};

/// A cotilting torsion pair with its cotilting module and classes.
#[derive(Clone, Debug)]
pub struct CotiltingData {
    pub pair: TorsionPair,
    /// Indecomposable summands of the basic cotilting module `C`.
    pub summands: ClassSet,
    pub c: Module,
    /// The cotilting class `Cogen(C)`, equal to the torsion-free class.
    pub c_class: ClassSet,
    /// Members `X` with `Ext¹(C_class, X) = 0`.
    pub perp_class: ClassSet,
    /// `C0` and `C1` as lists of members with multiplicity.
    pub c0: Vec<usize>,
    pub c1: Vec<usize>,
}

/// Sum of members with multiplicity.
pub fn sum_module(u: &IndecUniverse, idx: &[usize]) -> Module {
    u.sum_of(idx)
}

/// The injective cogenerator `I(1) + ... + I(n)`.
pub fn injective_cogenerator(u: &IndecUniverse) -> Module {
    let st = standard_modules(u.algebra());
    let parts: Vec<&Module> = st.injectives.iter().collect();
    direct_sum(u.algebra(), &parts).module
}

/// Builds the Ext-injective objects of the torsion-free class and verifies
/// that their sum is cotilting with cotilting class equal to it.
pub fn cotilting_from_pair(pair: &TorsionPair, u: &IndecUniverse) -> Result<CotiltingData> {
    u.require_complete()?;
    let f = pair.torsion_free;
    let summands = ClassSet::from_indices(f.iter().filter(|&x| f.iter().all(|y| u.ext_dim(y, x) == 0)));
    let idx: Vec<usize> = summands.iter().collect();
    let c = u.sum_of(&idx);
    if summands.is_empty() {
        return Err(Error::NotCotilting("the torsion-free class has no Ext-injective objects".into()));
    }
    for i in summands.iter() {
        if injective_dimension(u.module(i), 1)? > 1 {
            return Err(Error::NotCotilting(format!(
                "injective dimension of {} exceeds 1",
                u.name(i)
            )));
        }
    }
    for i in summands.iter() {
        for j in summands.iter() {
            if u.ext_dim(i, j) != 0 {
                return Err(Error::NotCotilting(format!(
                    "Ext¹({}, {}) is nonzero",
                    u.name(i),
                    u.name(j)
                )));
            }
        }
    }
    let cogen = ClassSet::from_indices((0..u.len()).filter(|&x| cogenerated_by(u, summands, u.module(x))));
    let perp1 = left_ext_perp(u, summands);
    if cogen != perp1 {
        return Err(Error::NotCotilting(format!(
            "Cogen(C) = {} differs from the left Ext-perpendicular {} of C = {}",
            describe(u, cogen),
            describe(u, perp1),
            describe(u, summands)
        )));
    }
    if cogen != f {
        return Err(Error::NotCotilting(format!(
            "Cogen(C) = {} differs from the torsion-free class {}",
            describe(u, cogen),
            describe(u, f)
        )));
    }
    let perp_class = right_ext_perp(u, f);
    if f.intersection(perp_class) != summands {
        return Err(Error::Invariant(
            "add(C) differs from the intersection of the class and its perpendicular".into(),
        ));
    }
    let gens: Vec<Module> = idx.iter().map(|&i| u.module(i).clone()).collect();
    let inj = injective_cogenerator(u);
    let cover = minimal_right_approx(&inj, &gens);
    if !cover.map.is_epi() {
        return Err(Error::NotCotilting(
            "the injective cogenerator is not a quotient of a module in add(C)".into(),
        ));
    }
    let c0: Vec<usize> = {
        let mut v: Vec<usize> = cover.summands.iter().map(|&k| idx[k]).collect();
        v.sort_unstable();
        v
    };
    let kernel = cover.map.kernel().0;
    let c1 = u.summand_indices(&kernel)?;
    if !ClassSet::from_indices(c1.iter().copied()).is_subset(summands) {
        return Err(Error::NotCotilting(
            "the kernel of the add(C)-cover of the injective cogenerator is not in add(C)".into(),
        ));
    }
    Ok(CotiltingData {
        pair: *pair,
        summands,
        c,
        c_class: f,
        perp_class,
        c0,
        c1,
    })
}

impl CotiltingData {
    pub fn c0_module(&self, u: &IndecUniverse) -> Module {
        u.sum_of(&self.c0)
    }

    pub fn c1_module(&self, u: &IndecUniverse) -> Module {
        u.sum_of(&self.c1)
    }

    /// `(C0, C1)` as modules.
    pub fn c0_c1(&self, u: &IndecUniverse) -> (Module, Module) {
        (self.c0_module(u), self.c1_module(u))
    }
}

fn members(u: &IndecUniverse, set: ClassSet) -> Vec<Module> {
    set.iter().map(|i| u.module(i).clone()).collect()
}

/// A special cover or envelope together with the summand lists of its
/// outer terms.
#[derive(Clone, Debug)]
pub struct Approx {
    pub ses: Ses,
    /// Members (with multiplicity) making up the left term.
    pub left: Vec<usize>,
    /// Members making up the middle term.
    pub middle: Vec<usize>,
    /// Members making up the right term.
    pub right: Vec<usize>,
}

/// `0 -> X -> Y -> M -> 0` with `Y -> M` a minimal right approximation by
/// the cotilting class and `X` in its perpendicular class.
pub fn special_cover(m: &Module, d: &CotiltingData, u: &IndecUniverse) -> Result<Approx> {
    let gens_idx: Vec<usize> = d.c_class.iter().collect();
    let gens = members(u, d.c_class);
    let appr = minimal_right_approx(m, &gens);
    if !appr.map.is_epi() {
        return Err(Error::Invariant("cover by the cotilting class is not onto".into()));
    }
    let ses = Ses::from_epi(&appr.map);
    let left = u.summand_indices(&ses.left)?;
    if !ClassSet::from_indices(left.iter().copied()).is_subset(d.perp_class) {
        return Err(Error::Invariant("kernel of the cover is not Ext-orthogonal to the class".into()));
    }
    if !m.is_zero() && u.class_of(m)?.is_subset(d.pair.torsion) && !ClassSet::from_indices(left.iter().copied()).is_subset(d.summands) {
        return Err(Error::Invariant("kernel of the cover of a torsion module is not in add(C)".into()));
    }
    let mut middle: Vec<usize> = appr.summands.iter().map(|&k| gens_idx[k]).collect();
    middle.sort_unstable();
    let right = if m.is_zero() { Vec::new() } else { u.summand_indices(m)? };
    Ok(Approx { ses, left, middle, right })
}

/// `0 -> M -> X' -> Y' -> 0` with `M -> X'` a minimal left approximation by
/// the perpendicular class and `Y'` in the cotilting class.
pub fn special_envelope(m: &Module, d: &CotiltingData, u: &IndecUniverse) -> Result<Approx> {
    let gens_idx: Vec<usize> = d.perp_class.iter().collect();
    let gens = members(u, d.perp_class);
    let appr = minimal_left_approx(m, &gens);
    if !appr.map.is_mono() {
        return Err(Error::Invariant("envelope by the perpendicular class is not injective".into()));
    }
    let ses = Ses::from_mono(&appr.map);
    let right = u.summand_indices(&ses.right)?;
    if !ClassSet::from_indices(right.iter().copied()).is_subset(d.c_class) {
        return Err(Error::Invariant("cokernel of the envelope is not in the cotilting class".into()));
    }
    let mut middle: Vec<usize> = appr.summands.iter().map(|&k| gens_idx[k]).collect();
    middle.sort_unstable();
    if !m.is_zero()
        && u.class_of(m)?.is_subset(d.c_class)
        && !ClassSet::from_indices(middle.iter().copied()).is_subset(d.summands)
    {
        return Err(Error::Invariant("envelope of a module in the class is not in add(C)".into()));
    }
    let left = if m.is_zero() { Vec::new() } else { u.summand_indices(m)? };
    Ok(Approx { ses, left, middle, right })
}

/// Middle term of the special envelope of the sum of `n_c`, checked to be
/// cotilting with the same cotilting class as `d`.
pub fn minimal_cotilting(d: &CotiltingData, n_c: &[usize], u: &IndecUniverse) -> Result<Module> {
    let n = u.sum_of(n_c);
    let env = special_envelope(&n, d, u)?;
    let summands = ClassSet::from_indices(env.middle.iter().copied());
    let cogen = ClassSet::from_indices((0..u.len()).filter(|&x| cogenerated_by(u, summands, u.module(x))));
    let perp1 = left_ext_perp(u, summands);
    if cogen != d.c_class || perp1 != d.c_class {
        return Err(Error::Invariant(format!(
            "the module {} is not cotilting for the class {}",
            describe(u, summands),
            describe(u, d.c_class)
        )));
    }
    if !summands.is_subset(d.summands) {
        return Err(Error::Invariant("minimal cotilting module is not a summand of C".into()));
    }
    Ok(env.ses.middle)
}

/// `true` if the two modules have the same summands up to isomorphism.
pub fn same_module(a: &Module, b: &Module) -> Result<bool> {
    isomorphic(a, b)
}
