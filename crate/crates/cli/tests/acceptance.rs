//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines are printed on every run; exits nonzero if any
//! criterion fails.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use heart_cli::verify::{
    suite_bricks, suite_c0_c1, suite_cogeneration, suite_cotilting, suite_dichotomy, suite_heart_modes,
    suite_hereditary, suite_labels, suite_oracle, suite_split_injective, Analysis, Check,
};
use heart_core::algebra::parse_algebra;
use heart_core::cotilting::{cotilting_from_pair, minimal_cotilting, same_module};
use heart_core::decompose::{decompose, isomorphic};
use heart_core::field::VectorIter;
use heart_core::heart::{classify_neg_isolated, heart_simples, HeartSimpleKind, Mode, NegIsolatedKind};
use heart_core::lattice::count_torsion_classes_by_subsets;
use heart_core::matrix::Matrix;
use heart_core::module::Module;
use heart_core::torsion::TorsionPair;
use heart_core::universe::{Caps, ClassSet, IndecUniverse};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(format!("{name}.quiver"))
}

fn universe(name: &str, vertices: usize) -> IndecUniverse {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    let a = Arc::new(parse_algebra(&text).unwrap());
    IndecUniverse::enumerate(&a, &vec![2; vertices], &Caps::default()).unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_checks(checks: &[Check], elapsed: Duration, budget: Option<Duration>) -> Outcome {
    let mut ok = checks.iter().all(|c| c.passed && c.checked > 0);
    let facts: usize = checks.iter().map(|c| c.checked).sum();
    let mut detail = format!("{facts} facts in {elapsed:.2?}");
    if let Some(b) = budget {
        if elapsed >= b {
            ok = false;
            detail.push_str(&format!(", over budget {b:?}"));
        }
    }
    for c in checks.iter().filter(|c| !c.passed || c.checked == 0) {
        detail.push_str(&format!("; {}", c.line()));
    }
    Outcome { ok, detail }
}

/// All representations of `1 -> 2` with dimensions at most `(2, 2)` over
/// F_2, split into indecomposables and sorted into isomorphism classes.
fn a2_indecomposables_by_brute_force(u: &IndecUniverse) -> usize {
    let alg = u.algebra();
    let f = u.field();
    let mut classes: Vec<Module> = Vec::new();
    for d1 in 0..=2 {
        for d2 in 0..=2 {
            for v in VectorIter::new(f, d1 * d2) {
                let rows: Vec<Vec<u32>> = v.chunks(d2.max(1)).take(d1).map(|r| r.to_vec()).collect();
                let m = if d2 == 0 { Matrix::zeros(f, d1, 0) } else { Matrix::from_rows(f, d2, &rows) };
                let module = Module::new(alg, vec![d1, d2], vec![m]).unwrap();
                for (piece, _) in decompose(&module).unwrap() {
                    let mut seen = false;
                    for c in &classes {
                        if isomorphic(c, &piece).unwrap() {
                            seen = true;
                            break;
                        }
                    }
                    if !seen {
                        classes.push(piece);
                    }
                }
            }
        }
    }
    classes.len()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let u = universe("a2", 2);
    let mut fails: Vec<String> = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            fails.push(what.to_string());
        }
    };
    let names: Vec<&str> = u.names().iter().map(|s| s.as_str()).collect();
    expect(names == ["S(1)", "S(2)", "P(1)"], "universe is S(1), S(2), P(1)");
    expect(u.completeness_check().unwrap().complete, "universe complete");
    let a = Analysis::new(u).unwrap();
    let u = &a.universe;
    expect(a.lattice.classes.len() == 5, "5 torsion classes");
    let cot: Vec<ClassSet> = a.cotilting_pairs().map(|(p, _, _)| p.torsion).collect();
    expect(cot == [ClassSet::empty(), ClassSet::singleton(0)], "cotilting pairs (0, all) and ({S(1)}, ...)");
    let pair = TorsionPair::from_torsion_class(ClassSet::singleton(0), u).unwrap();
    expect(pair.torsion_free == ClassSet::from_indices([1, 2]), "F = {S(2), P(1)}");
    let d = cotilting_from_pair(&pair, u).unwrap();
    expect(d.summands == ClassSet::from_indices([1, 2]), "C = S(2) + P(1)");
    let simples = heart_simples(u, &pair, Mode::Fast).unwrap();
    let simple_set: Vec<(usize, HeartSimpleKind)> = simples.iter().map(|s| (s.index, s.kind)).collect();
    expect(
        simple_set
            == [
                (0, HeartSimpleKind::TorsionAlmostTorsionFreeShifted),
                (2, HeartSimpleKind::TorsionFreeAlmostTorsion),
            ],
        "heart simples S(1)[-1], P(1)",
    );
    let c = classify_neg_isolated(u, &d).unwrap();
    let b = c.sequences.iter().find(|s| s.kind == NegIsolatedKind::Special).unwrap();
    expect(
        b.approx.left == [1] && b.approx.middle == [2] && b.approx.right == [0],
        "Theorem B: 0 -> S(2) -> P(1) -> S(1) -> 0",
    );
    let th_a = c.sequences.iter().find(|s| s.kind == NegIsolatedKind::Critical).unwrap();
    expect(
        th_a.approx.left == [2] && th_a.approx.middle == [2] && th_a.approx.right.is_empty(),
        "Theorem A: 0 -> P(1) -> P(1) -> 0 -> 0",
    );
    expect(c.critical == ClassSet::singleton(2), "E_C = {P(1)}");
    expect(c.special == ClassSet::singleton(1), "M_C = {S(2)}");
    expect(d.c0 == [2, 2], "C0 = P(1)^2");
    expect(d.c1 == [1], "C1 = S(2)");
    let tilde = minimal_cotilting(&d, &[1, 2], u).unwrap();
    expect(same_module(&tilde, &d.c).unwrap(), "minimal cotilting module isomorphic to C");
    let brute = a2_indecomposables_by_brute_force(u);
    expect(brute == 3, "brute force finds 3 indecomposables");
    expect(count_torsion_classes_by_subsets(u).unwrap() == 5, "subset scan finds 5 torsion classes");
    let elapsed = start.elapsed();
    expect(elapsed < Duration::from_secs(1), "runtime under 1 s");
    Outcome {
        ok: fails.is_empty(),
        detail: if fails.is_empty() {
            format!("all values exact in {elapsed:.2?}")
        } else {
            format!("failed: {}", fails.join("; "))
        },
    }
}

fn main() {
    let total = Instant::now();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    results.push((1, "A2 golden suite", criterion_1()));

    let build = Instant::now();
    let analyses: Vec<(&str, Analysis)> = [("a2", 2), ("a3", 3), ("d4", 4)]
        .into_iter()
        .map(|(n, v)| (n, Analysis::new(universe(n, v)).unwrap()))
        .collect();
    let build_time = build.elapsed();

    let per_algebra = |f: &dyn Fn(&Analysis) -> Check, only: &[&str], budget: Option<Duration>| {
        let start = Instant::now();
        let checks: Vec<Check> = analyses
            .iter()
            .filter(|(n, _)| only.contains(n))
            .map(|(n, a)| {
                let mut c = f(a);
                c.suite = format!("{} on {n}", c.suite);
                c
            })
            .collect();
        from_checks(&checks, start.elapsed(), budget)
    };
    let all = ["a2", "a3", "d4"];

    results.push((
        2,
        "oracle equivalence",
        per_algebra(
            &|a| {
                let mut c = suite_oracle(a);
                let m = suite_heart_modes(a);
                c.checked += m.checked;
                c.passed &= m.passed;
                c.witness = c.witness.or(m.witness);
                c
            },
            &all,
            Some(Duration::from_secs(60)),
        ),
    ));
    results.push((3, "brick property", per_algebra(&suite_bricks, &all, None)));
    results.push((
        4,
        "dichotomy",
        per_algebra(
            &|a| {
                let mut c = suite_dichotomy(a);
                let n = suite_cotilting(a);
                c.checked += n.checked;
                c.passed &= n.passed;
                c.witness = c.witness.or(n.witness);
                c
            },
            &all,
            None,
        ),
    ));
    results.push((5, "C0/C1 summands", per_algebra(&suite_c0_c1, &all, None)));
    results.push((6, "split injectivity", per_algebra(&|a| suite_split_injective(a, true), &all, None)));
    results.push((7, "cogeneration by criticals", per_algebra(&suite_cogeneration, &all, None)));
    results.push((
        8,
        "hereditary pullback",
        per_algebra(&suite_hereditary, &["a2", "a3"], Some(Duration::from_secs(30))),
    ));
    let mut labels = per_algebra(&suite_labels, &all, None);
    let a3_nodes = analyses[1].1.lattice.classes.len();
    if a3_nodes != 14 {
        labels.ok = false;
        labels.detail.push_str(&format!("; A3 lattice has {a3_nodes} nodes"));
    } else {
        labels.detail.push_str("; A3 lattice has 14 nodes");
    }
    results.push((9, "brick-label correspondence", labels));

    let start = Instant::now();
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, v) in [("a2", 2), ("a3", 3), ("d4", 4)] {
        let path = fixture(name);
        let path = path.to_str().unwrap();
        let bound = vec!["2"; v].join(",");
        for format in ["text", "json"] {
            let args = ["heart-simples", "verify", path, "--oracle", "--dim-bound", &bound, "--format", format];
            let first = heart_cli::main_with_args(args);
            let second = heart_cli::main_with_args(args);
            if first.code != 0 || first != second {
                ok = false;
                detail.push(format!("{name} {format}: exit {} / {}, identical {}", first.code, second.code, first == second));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(300) {
        ok = false;
    }
    detail.insert(0, format!("verify twice per fixture and format in {elapsed:.2?}, byte-identical"));
    results.push((10, "determinism and budget", Outcome { ok, detail: detail.join("; ") }));

    let mut failed = 0;
    for (n, name, o) in &results {
        println!("criterion {n:>2} {} {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed (universe and lattice setup {build_time:.2?}, total {:.2?})",
        results.len() - failed,
        results.len(),
        total.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
