//! Property suites run by the `verify` command and the acceptance tests.

use std::time::Instant;

use heart_core::cotilting::{cotilting_from_pair, minimal_cotilting, same_module, CotiltingData};
use heart_core::decompose::{is_brick, is_indecomposable, isomorphic};
use heart_core::heart::{
    classify_neg_isolated, cogeneration_witness, heart_simples, hereditary_cover_check, is_almost_torsion,
    is_almost_torsion_free, is_split_injective, is_split_mono, is_strong_las_fast, left_almost_split,
    left_almost_split_oracle, non_split_mono_witness, split_injective_oracle, Classification, HeartSimpleKind,
    Mode,
};
use heart_core::homology::{ext1_dim, hom_dim, projective_points};
use heart_core::lattice::{
    check_labels, count_torsion_classes_by_subsets, enumerate_torsion_classes, incident_arrows_vs_heart,
    TorsLattice,
};
use heart_core::module::{Module, Morphism};
use heart_core::torsion::{describe, is_hereditary, torsion_closure_iterative, torsion_closure_of_set, TorsionPair};
use heart_core::universe::{ClassSet, IndecUniverse};
use heart_core::{Error, Result};
use serde::Serialize;

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub passed: bool,
    /// Number of individual facts examined.
    pub checked: usize,
    /// First counterexample, if any.
    pub witness: Option<String>,
    /// Error that stopped the suite early.
    #[serde(skip)]
    pub error: Option<Error>,
}

impl Check {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match &self.witness {
            Some(w) => format!("{status} {} ({} checks): {w}", self.suite, self.checked),
            None => format!("{status} {} ({} checks)", self.suite, self.checked),
        }
    }
}

/// Accumulates facts for one suite, keeping the first failure.
struct Tally {
    checked: usize,
    witness: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, witness: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self, suite: &str) -> Check {
        Check {
            suite: suite.to_string(),
            passed: self.witness.is_none(),
            checked: self.checked,
            witness: self.witness,
            error: None,
        }
    }
}

fn run_suite(suite: &str, body: impl FnOnce(&mut Tally) -> Result<()>) -> Check {
    let mut t = Tally::new();
    match body(&mut t) {
        Ok(()) => t.finish(suite),
        Err(e) => Check {
            suite: suite.to_string(),
            passed: false,
            checked: t.checked,
            witness: Some(format!("error: {e}")),
            error: Some(e),
        },
    }
}

/// A torsion pair of the lattice, with its cotilting data when it is
/// cotilting.
pub struct PairAnalysis {
    pub pair: TorsionPair,
    pub cotilting: Option<(CotiltingData, Classification)>,
    pub not_cotilting: Option<String>,
}

/// Everything the suites share: the universe, its lattice and every
/// torsion pair.
pub struct Analysis {
    pub universe: IndecUniverse,
    pub lattice: TorsLattice,
    pub pairs: Vec<PairAnalysis>,
}

impl Analysis {
    pub fn new(universe: IndecUniverse) -> Result<Analysis> {
        universe.require_complete()?;
        let lattice = enumerate_torsion_classes(&universe)?;
        let mut pairs = Vec::new();
        for &t in &lattice.classes {
            let pair = TorsionPair::from_torsion_class(t, &universe)?;
            match cotilting_from_pair(&pair, &universe) {
                Ok(d) => {
                    let c = classify_neg_isolated(&universe, &d)?;
                    pairs.push(PairAnalysis {
                        pair,
                        cotilting: Some((d, c)),
                        not_cotilting: None,
                    });
                }
                Err(Error::NotCotilting(reason)) => pairs.push(PairAnalysis {
                    pair,
                    cotilting: None,
                    not_cotilting: Some(reason),
                }),
                Err(e) => return Err(e),
            }
        }
        Ok(Analysis { universe, lattice, pairs })
    }

    pub fn cotilting_pairs(&self) -> impl Iterator<Item = (&TorsionPair, &CotiltingData, &Classification)> {
        self.pairs
            .iter()
            .filter_map(|p| p.cotilting.as_ref().map(|(d, c)| (&p.pair, d, c)))
    }

    fn pair_name(&self, pair: &TorsionPair) -> String {
        format!("torsion class {}", describe(&self.universe, pair.torsion))
    }
}

/// Hom and Ext¹ tables recomputed from scratch and compared with the
/// stored ones; members indecomposable and pairwise non-isomorphic; the
/// universe closed under the completeness test.
pub fn suite_universe(u: &IndecUniverse) -> Check {
    run_suite("universe", |t| {
        let report = u.completeness_check()?;
        t.check(report.complete, || report.witness.clone().unwrap_or_default());
        for i in 0..u.len() {
            t.check(is_indecomposable(u.module(i))?, || format!("{} is decomposable", u.name(i)));
            for j in 0..u.len() {
                let (a, b) = (u.module(i), u.module(j));
                let h = hom_dim(a, b);
                t.check(h == u.hom_dim(i, j), || {
                    format!(
                        "dim Hom({}, {}) is {h}, table says {}",
                        u.name(i),
                        u.name(j),
                        u.hom_dim(i, j)
                    )
                });
                let e = ext1_dim(a, b);
                t.check(e == u.ext_dim(i, j), || {
                    format!(
                        "dim Ext¹({}, {}) is {e}, table says {}",
                        u.name(i),
                        u.name(j),
                        u.ext_dim(i, j)
                    )
                });
                if i < j {
                    t.check(!isomorphic(a, b)?, || format!("{} ≅ {}", u.name(i), u.name(j)));
                }
            }
        }
        Ok(())
    })
}

/// Perpendicular torsion closure against the quotient-and-extension
/// fixpoint, and the lattice size against a scan of all subsets.
pub fn suite_torsion(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("torsion-closure", |t| {
        for i in 0..u.len() {
            let g = ClassSet::singleton(i);
            let fast = torsion_closure_of_set(u, g);
            let slow = torsion_closure_iterative(u, g)?;
            t.check(fast == slow, || {
                format!(
                    "closure of {}: {} by perpendiculars, {} by iteration",
                    u.name(i),
                    describe(u, fast),
                    describe(u, slow)
                )
            });
        }
        if u.len() <= 20 {
            let n = count_torsion_classes_by_subsets(u)?;
            t.check(n == a.lattice.classes.len(), || {
                format!("{} classes in the lattice, {n} by subset scan", a.lattice.classes.len())
            });
        }
        Ok(())
    })
}

/// Every cotilting module is recovered as the envelope of its neg-isolated
/// summands, and these are exactly its indecomposable summands.
pub fn suite_cotilting(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("cotilting", |t| {
        for (pair, d, c) in a.cotilting_pairs() {
            let nc = c.critical.union(c.special);
            t.check(nc == d.summands, || {
                format!(
                    "{}: E_C ∪ M_C = {} but C has summands {}",
                    a.pair_name(pair),
                    describe(u, nc),
                    describe(u, d.summands)
                )
            });
            let idx: Vec<usize> = nc.iter().collect();
            let tilde = minimal_cotilting(d, &idx, u)?;
            t.check(same_module(&tilde, &d.c)?, || {
                format!("{}: minimal cotilting module differs from C", a.pair_name(pair))
            });
        }
        Ok(())
    })
}

/// Fast almost torsion(-free) verdicts against the literal definitions, and
/// the strong left almost split criteria against a brute-force scan of
/// factorisations.
pub fn suite_oracle(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("oracle-equivalence", |t| {
        for (pair, d, c) in a.cotilting_pairs() {
            for i in 0..u.len() {
                let fast = is_almost_torsion_free(u, pair, i, Mode::Fast)?;
                let slow = is_almost_torsion_free(u, pair, i, Mode::Oracle)?;
                t.check(fast == slow, || {
                    format!("{}: ATF({}) fast {fast}, oracle {slow}", a.pair_name(pair), u.name(i))
                });
                let fast = is_almost_torsion(u, pair, i, Mode::Fast)?;
                let slow = is_almost_torsion(u, pair, i, Mode::Oracle)?;
                t.check(fast == slow, || {
                    format!("{}: AT({}) fast {fast}, oracle {slow}", a.pair_name(pair), u.name(i))
                });
            }
            let mut candidates: Vec<Morphism> = c.sequences.iter().map(|s| s.las.clone()).collect();
            let cap = u.caps().hom_scan_limit(u.field());
            for i in d.c_class.iter() {
                let zero = Module::zero(u.algebra());
                candidates.push(Morphism::zero(u.module(i), &zero));
                for j in d.c_class.iter() {
                    let hom = u.hom(i, j);
                    for v in projective_points(u.field(), hom.dim(), cap)? {
                        candidates.push(hom.element(&v));
                    }
                }
            }
            for f in &candidates {
                let (las, strong) = left_almost_split(u, f, d.c_class)?;
                let oracle = left_almost_split_oracle(u, f, d.c_class)?;
                let by_cokernel = is_strong_las_fast(u, f, d)?;
                t.check((las, strong) == oracle && by_cokernel == oracle.1, || {
                    format!(
                        "{}: map {} -> {}: (las, strong) = {:?}, cokernel test {by_cokernel}, oracle {:?}",
                        a.pair_name(pair),
                        f.source().short_description(),
                        f.target().short_description(),
                        (las, strong),
                        oracle
                    )
                });
            }
        }
        Ok(())
    })
}

/// Heart simples are bricks; nonzero maps between torsion, almost
/// torsion-free modules are isomorphisms.
pub fn suite_bricks(a: &Analysis) -> Check {
    let u = &a.universe;
    let cap = u.caps().hom_scan_limit(u.field());
    run_suite("bricks", |t| {
        for (pair, _, c) in a.cotilting_pairs() {
            for s in &c.simples {
                t.check(is_brick(u.module(s.index))?, || {
                    format!("{}: heart simple {} is not a brick", a.pair_name(pair), u.name(s.index))
                });
            }
            let shifted: Vec<usize> = c
                .simples
                .iter()
                .filter(|s| s.kind == HeartSimpleKind::TorsionAlmostTorsionFreeShifted)
                .map(|s| s.index)
                .collect();
            for &x in &shifted {
                for &y in &shifted {
                    let ok = u.hom(x, y).all_nonzero_up_to_scalar(cap, |g| g.is_iso())?;
                    t.check(ok, || {
                        format!(
                            "{}: a nonzero map {} -> {} is not an isomorphism",
                            a.pair_name(pair),
                            u.name(x),
                            u.name(y)
                        )
                    });
                }
            }
        }
        Ok(())
    })
}

/// Strong left almost split maps are monos or epis; critical and special
/// summands are disjoint; the cokernel of each strong las mono recovers
/// the simple it came from.
pub fn suite_dichotomy(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("dichotomy", |t| {
        for (pair, _, c) in a.cotilting_pairs() {
            t.check(c.critical.intersection(c.special).is_empty(), || {
                format!(
                    "{}: E_C and M_C share {}",
                    a.pair_name(pair),
                    describe(u, c.critical.intersection(c.special))
                )
            });
            for s in &c.sequences {
                let f = &s.las;
                t.check(f.is_mono() || f.is_epi(), || {
                    format!(
                        "{}: strong las map from {} is neither mono nor epi",
                        a.pair_name(pair),
                        u.name(s.n)
                    )
                });
                if f.is_mono() && !f.is_epi() {
                    let (coker, _) = f.cokernel();
                    let back = u.index_of(&coker);
                    let ok = match back {
                        Some(k) => {
                            isomorphic(&coker, u.module(s.simple))?
                                && pair.torsion.contains(k)
                                && is_almost_torsion_free(u, pair, k, Mode::Fast)?
                        }
                        None => false,
                    };
                    t.check(ok, || {
                        format!(
                            "{}: cokernel of the strong las mono from {} does not recover {}",
                            a.pair_name(pair),
                            u.name(s.n),
                            u.name(s.simple)
                        )
                    });
                }
            }
        }
        Ok(())
    })
}

/// Criticals are summands of `C0`, specials summands of `C1`.
pub fn suite_c0_c1(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("c0-c1-summands", |t| {
        for (pair, d, c) in a.cotilting_pairs() {
            let c0 = ClassSet::from_indices(d.c0.iter().copied());
            let c1 = ClassSet::from_indices(d.c1.iter().copied());
            for e in c.critical.iter() {
                t.check(c0.contains(e), || {
                    format!("{}: critical {} is not a summand of C0", a.pair_name(pair), u.name(e))
                });
            }
            for m in c.special.iter() {
                t.check(c1.contains(m), || {
                    format!("{}: special {} is not a summand of C1", a.pair_name(pair), u.name(m))
                });
            }
        }
        Ok(())
    })
}

/// `C0` is split injective in the cotilting class and `add(C0)` is the
/// additive closure of the criticals. Non-split monos found by the closed
/// form are checked explicitly; split verdicts are checked against a scan
/// of monos into sums of two members.
pub fn suite_split_injective(a: &Analysis, oracle: bool) -> Check {
    let u = &a.universe;
    run_suite("split-injectivity", |t| {
        for (pair, d, c) in a.cotilting_pairs() {
            let c0 = d.c0_module(u);
            t.check(is_split_injective(u, &c0, d.c_class)?, || {
                format!("{}: C0 is not split injective", a.pair_name(pair))
            });
            let set = ClassSet::from_indices(d.c0.iter().copied());
            t.check(set == c.critical, || {
                format!(
                    "{}: add(C0) has summands {}, criticals are {}",
                    a.pair_name(pair),
                    describe(u, set),
                    describe(u, c.critical)
                )
            });
            for i in d.c_class.iter() {
                match non_split_mono_witness(u, i, d.c_class)? {
                    Some(g) => t.check(g.is_mono() && !is_split_mono(&g), || {
                        format!("{}: witness for {} is not a non-split mono", a.pair_name(pair), u.name(i))
                    }),
                    None if oracle => t.check(split_injective_oracle(u, i, d.c_class)?, || {
                        format!(
                            "{}: {} judged split injective but a non-split mono exists",
                            a.pair_name(pair),
                            u.name(i)
                        )
                    }),
                    None => {}
                }
            }
        }
        Ok(())
    })
}

/// Each member of the cotilting class embeds in a sum of at most
/// `length(M)` criticals.
pub fn suite_cogeneration(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("cogeneration-by-criticals", |t| {
        for (pair, d, c) in a.cotilting_pairs() {
            for i in d.c_class.iter() {
                let w = cogeneration_witness(u, i, c.critical)?;
                let ok = match &w {
                    Some((used, g)) => {
                        g.is_mono()
                            && used.len() <= u.module(i).total_dim()
                            && used.iter().all(|&k| c.critical.contains(k))
                    }
                    None => false,
                };
                t.check(ok, || {
                    format!(
                        "{}: {} has no embedding into a sum of criticals {}",
                        a.pair_name(pair),
                        u.name(i),
                        describe(u, c.critical)
                    )
                });
            }
        }
        Ok(())
    })
}

/// For hereditary cotilting pairs and simple torsion `Q`, the cover of `Q`
/// is the pullback of the cover of its injective envelope.
pub fn suite_hereditary(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("hereditary-pullback", |t| {
        for (pair, d, _) in a.cotilting_pairs() {
            if !is_hereditary(pair, u)? {
                continue;
            }
            for q in pair.torsion.iter() {
                if u.module(q).total_dim() != 1 {
                    continue;
                }
                let r = hereditary_cover_check(u, q, d)?;
                t.check(r.passed(), || format!("{}: Q = {}: {r:?}", a.pair_name(pair), u.name(q)));
            }
        }
        Ok(())
    })
}

/// Lattice labels are bricks and consistent from both ends; at every
/// cotilting pair the incident labels are the heart simples.
pub fn suite_labels(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("brick-labels", |t| {
        for w in check_labels(u, &a.lattice)? {
            t.check(false, || w);
        }
        t.checked += a.lattice.covers.len();
        for (pair, _, _) in a.cotilting_pairs() {
            let r = incident_arrows_vs_heart(u, pair, &a.lattice)?;
            let names = |v: &[usize]| describe(u, ClassSet::from_indices(v.iter().copied()));
            t.check(r.matches(), || {
                format!(
                    "{}: labels down {} up {}, heart simples shifted {} unshifted {}",
                    a.pair_name(pair),
                    names(&r.down),
                    names(&r.up),
                    names(&r.shifted),
                    names(&r.unshifted)
                )
            });
        }
        Ok(())
    })
}

/// Heart simples in oracle mode against fast mode, for every torsion pair
/// (cotilting or not).
pub fn suite_heart_modes(a: &Analysis) -> Check {
    let u = &a.universe;
    run_suite("heart-simples-modes", |t| {
        for p in &a.pairs {
            let fast = heart_simples(u, &p.pair, Mode::Fast)?;
            let slow = heart_simples(u, &p.pair, Mode::Oracle)?;
            t.check(fast == slow, || format!("{}: heart simples differ between modes", a.pair_name(&p.pair)));
        }
        Ok(())
    })
}

/// Result of a full verification run.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub members: usize,
    pub torsion_classes: usize,
    pub cotilting_pairs: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs every suite. Oracle suites are included when `oracle` is set. A
/// failure to build the analysis is reported as a failed suite after the
/// universe suite.
pub fn verify(u: IndecUniverse, oracle: bool) -> Result<VerifyReport> {
    let universe_check = suite_universe(&u);
    let members = u.len();
    let a = match Analysis::new(u) {
        Ok(a) => a,
        Err(e @ Error::IncompleteUniverse(_)) | Err(e @ Error::Resource(_)) => return Err(e),
        Err(e) => {
            return Ok(VerifyReport {
                members,
                torsion_classes: 0,
                cotilting_pairs: 0,
                checks: vec![
                    universe_check,
                    Check {
                        suite: "analysis".into(),
                        passed: false,
                        checked: 0,
                        witness: Some(e.to_string()),
                        error: Some(e),
                    },
                ],
            })
        }
    };
    let mut checks = vec![
        universe_check,
        suite_torsion(&a),
        suite_cotilting(&a),
        suite_bricks(&a),
        suite_dichotomy(&a),
        suite_c0_c1(&a),
        suite_split_injective(&a, oracle),
        suite_cogeneration(&a),
        suite_hereditary(&a),
        suite_labels(&a),
    ];
    if oracle {
        checks.push(suite_oracle(&a));
        checks.push(suite_heart_modes(&a));
    }
    for c in &checks {
        if let Some(e @ (Error::Resource(_) | Error::Undetermined(_))) = &c.error {
            return Err(e.clone());
        }
    }
    Ok(VerifyReport {
        members,
        torsion_classes: a.lattice.classes.len(),
        cotilting_pairs: a.cotilting_pairs().count(),
        checks,
    })
}

/// Wall-clock time of a closure, for budget reporting.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, std::time::Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}
