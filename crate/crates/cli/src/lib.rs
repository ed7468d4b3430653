//! Command implementations behind the `heart-simples` binary. Each command
//! returns its output and exit code instead of printing, so the commands
//! can be driven from tests.

pub mod config;
pub mod report;
pub mod verify;

use std::path::Path;
use std::sync::Arc;

use heart_core::algebra::{parse_spec, BoundQuiverAlgebra, DEFAULT_LENGTH_CAP};
use heart_core::cotilting::{cotilting_from_pair, minimal_cotilting, same_module};
use heart_core::decompose::is_brick;
use heart_core::heart::{
    classify_neg_isolated, heart_simples, is_almost_torsion, is_almost_torsion_free, is_split_injective,
    left_almost_split_oracle, HeartSimpleKind, Mode, NegIsolatedKind,
};
use heart_core::lattice::{check_labels, enumerate_torsion_classes};
use heart_core::module::Module;
use heart_core::torsion::{torsion_closure_of_set, TorsionPair};
use heart_core::universe::{ClassSet, IndecUniverse};
use heart_core::Error;

use config::{Cli, Command, Format, Options};
use report::*;
use verify::Check;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;
pub const EXIT_FAILED: i32 = 4;

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
            code,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Admissibility(_) | Error::InvalidField(_) | Error::Precondition(_) => EXIT_INPUT,
        Error::Resource(_) | Error::Undetermined(_) => EXIT_RESOURCE,
        Error::IncompleteUniverse(_) => EXIT_INCOMPLETE,
        Error::NotCotilting(_) | Error::Invariant(_) => EXIT_FAILED,
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::fail(exit_code(&e), e.to_string())
    }
}

pub fn load_algebra(path: &Path, opts: &Options) -> Result<Arc<BoundQuiverAlgebra>, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    let spec = parse_spec(&text)?;
    Ok(Arc::new(BoundQuiverAlgebra::new(spec, opts.field, DEFAULT_LENGTH_CAP)?))
}

pub fn load_universe(path: &Path, opts: &Options) -> Result<IndecUniverse, Outcome> {
    let alg = load_algebra(path, opts)?;
    let bound = opts
        .bound(alg.vertex_count())
        .map_err(|m| Outcome::fail(EXIT_INPUT, m))?;
    Ok(IndecUniverse::enumerate(&alg, &bound, &opts.caps())?)
}

fn module_infos(u: &IndecUniverse) -> Result<Vec<ModuleInfo>, Error> {
    (0..u.len())
        .map(|i| {
            Ok(ModuleInfo {
                index: i,
                name: u.name(i).to_string(),
                dims: u.module(i).dims().to_vec(),
                brick: is_brick(u.module(i))?,
            })
        })
        .collect()
}

pub fn run(cli: &Cli) -> Outcome {
    let opts = &cli.options;
    let result = match &cli.command {
        Command::Indec { file } => cmd_indec(file, opts),
        Command::Heart { file, generators } => cmd_heart(file, generators, opts),
        Command::Tors { file } => cmd_tors(file, opts),
        Command::Verify { file } => cmd_verify(file, opts),
    };
    result.unwrap_or_else(|o| o)
}

fn render<T: serde::Serialize>(value: &T, text: impl FnOnce() -> String, format: Format) -> Result<String, Outcome> {
    match format {
        Format::Text => Ok(text()),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)
                .map_err(|e| Outcome::fail(EXIT_FAILED, format!("serialization failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        Format::Dot => Err(Outcome::fail(EXIT_INPUT, "dot output is only available for the tors command")),
    }
}

pub fn cmd_indec(file: &Path, opts: &Options) -> Result<Outcome, Outcome> {
    let u = load_universe(file, opts)?;
    let completeness = u.completeness_check()?;
    let rep = IndecReport {
        schema_version: SCHEMA_VERSION,
        algebra: AlgebraInfo::new(u.algebra()),
        bound: u.bound().to_vec(),
        universe: module_infos(&u)?,
        complete: completeness.complete,
        completeness_checks: completeness.checked,
        witness: completeness.witness.clone(),
        hom: u.hom_table().to_vec(),
        ext: u.ext_table().to_vec(),
    };
    let stdout = render(&rep, || rep.text(), opts.format)?;
    if completeness.complete {
        Ok(Outcome::ok(stdout))
    } else {
        Ok(Outcome {
            stdout,
            stderr: format!(
                "error: universe is incomplete: {}\n",
                completeness.witness.unwrap_or_default()
            ),
            code: EXIT_INCOMPLETE,
        })
    }
}

/// Resolves a generator given as an index, a name or a dimension vector.
pub fn resolve_generator(u: &IndecUniverse, spec: &str) -> Result<usize, Outcome> {
    let s = spec.trim();
    if let Ok(i) = s.parse::<usize>() {
        if i < u.len() {
            return Ok(i);
        }
        return Err(Outcome::fail(
            EXIT_INPUT,
            format!("index {i} is out of range for {} indecomposables", u.len()),
        ));
    }
    if let Some(i) = u.names().iter().position(|n| n == s) {
        return Ok(i);
    }
    let inner = s.trim_start_matches('(').trim_end_matches(')');
    let dims: Option<Vec<usize>> = inner.split(',').map(|x| x.trim().parse().ok()).collect();
    let Some(dims) = dims.filter(|d| d.len() == u.algebra().vertex_count()) else {
        return Err(Outcome::fail(EXIT_INPUT, format!("unknown module {s:?}")));
    };
    let hits: Vec<usize> = (0..u.len()).filter(|&i| u.module(i).dims() == dims.as_slice()).collect();
    match hits.as_slice() {
        [i] => Ok(*i),
        [] => Err(Outcome::fail(
            EXIT_INPUT,
            format!("no indecomposable has dimension vector {}", dims_text(&dims)),
        )),
        _ => Err(Outcome::fail(
            EXIT_INPUT,
            format!(
                "dimension vector {} is ambiguous: {}; give an index or name",
                dims_text(&dims),
                names(u, &hits).join(", ")
            ),
        )),
    }
}

fn check(suite: &str, ok: bool, witness: impl FnOnce() -> String) -> Check {
    Check {
        suite: suite.into(),
        passed: ok,
        checked: 1,
        witness: if ok { None } else { Some(witness()) },
        error: None,
    }
}

pub fn cmd_heart(file: &Path, generators: &[String], opts: &Options) -> Result<Outcome, Outcome> {
    let u = load_universe(file, opts)?;
    u.require_complete()?;
    let mut gens = ClassSet::empty();
    for g in generators {
        gens.insert(resolve_generator(&u, g)?);
    }
    let pair = TorsionPair::from_torsion_class(torsion_closure_of_set(&u, gens), &u)?;
    let mode = if opts.oracle { Mode::Oracle } else { Mode::Fast };
    let simples = heart_simples(&u, &pair, mode)?;
    let mut checks = Vec::new();
    if opts.oracle {
        let fast = heart_simples(&u, &pair, Mode::Fast)?;
        checks.push(check("heart-simples-modes", fast == simples, || "fast and oracle heart simples differ".into()));
        let mut agree = true;
        for i in 0..u.len() {
            agree &= is_almost_torsion_free(&u, &pair, i, Mode::Fast)? == is_almost_torsion_free(&u, &pair, i, Mode::Oracle)?;
            agree &= is_almost_torsion(&u, &pair, i, Mode::Fast)? == is_almost_torsion(&u, &pair, i, Mode::Oracle)?;
        }
        checks.push(check("almost-torsion-modes", agree, || "fast and oracle verdicts differ".into()));
    }
    let heart_infos: Vec<HeartSimpleInfo> = simples
        .iter()
        .map(|s| HeartSimpleInfo {
            module: match s.kind {
                HeartSimpleKind::TorsionAlmostTorsionFreeShifted => format!("{}[-1]", u.name(s.index)),
                HeartSimpleKind::TorsionFreeAlmostTorsion => u.name(s.index).to_string(),
            },
            dims: u.module(s.index).dims().to_vec(),
            kind: match s.kind {
                HeartSimpleKind::TorsionAlmostTorsionFreeShifted => "torsion, almost torsion-free".into(),
                HeartSimpleKind::TorsionFreeAlmostTorsion => "torsion-free, almost torsion".into(),
            },
        })
        .collect();
    let mut rep = HeartReport {
        schema_version: SCHEMA_VERSION,
        algebra: AlgebraInfo::new(u.algebra()),
        universe: module_infos(&u)?,
        generators: set_names(&u, gens),
        torsion_pair: PairInfo {
            torsion: set_names(&u, pair.torsion),
            torsion_free: set_names(&u, pair.torsion_free),
        },
        cotilting: None,
        not_cotilting: None,
        heart_simples: heart_infos,
        sequences: Vec::new(),
        classification: None,
        checks,
    };
    let d = match cotilting_from_pair(&pair, &u) {
        Ok(d) => d,
        Err(Error::NotCotilting(reason)) => {
            rep.not_cotilting = Some(reason.clone());
            let stdout = render(&rep, || rep.text(), opts.format)?;
            return Ok(Outcome {
                stdout,
                stderr: format!("error: not cotilting: {reason}\n"),
                code: EXIT_FAILED,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let c = classify_neg_isolated(&u, &d)?;
    let nc: Vec<usize> = c.critical.union(c.special).iter().collect();
    let tilde = minimal_cotilting(&d, &nc, &u)?;
    let tilde_iso = same_module(&tilde, &d.c)?;
    rep.cotilting = Some(CotiltingInfo {
        c: set_names(&u, d.summands),
        c0: names(&u, &d.c0),
        c1: names(&u, &d.c1),
        tilde_c: names(&u, &u.summand_indices(&tilde)?),
        tilde_c_isomorphic_to_c: tilde_iso,
        cotilting_class: set_names(&u, d.c_class),
        perpendicular_class: set_names(&u, d.perp_class),
    });
    for s in &c.sequences {
        rep.sequences.push(SequenceInfo {
            theorem: match s.kind {
                NegIsolatedKind::Special => "B".into(),
                NegIsolatedKind::Critical => "A".into(),
            },
            simple: u.name(s.simple).to_string(),
            left: names(&u, &s.approx.left),
            middle: names(&u, &s.approx.middle),
            right: names(&u, &s.approx.right),
            n: u.name(s.n).to_string(),
            neg_isolated: match s.kind {
                NegIsolatedKind::Special => "special".into(),
                NegIsolatedKind::Critical => "critical".into(),
            },
            las_is_mono: s.las.is_mono(),
            las_is_epi: s.las.is_epi(),
        });
    }
    rep.classification = Some(ClassificationInfo {
        critical: set_names(&u, c.critical),
        special: set_names(&u, c.special),
    });
    rep.checks.push(check("minimal-cotilting", tilde_iso, || "minimal cotilting module differs from C".into()));
    let bricks = c.simples.iter().map(|s| is_brick(u.module(s.index))).collect::<Result<Vec<_>, _>>()?;
    rep.checks.push(check("bricks", bricks.iter().all(|&b| b), || "a heart simple is not a brick".into()));
    rep.checks.push(check(
        "dichotomy",
        c.critical.intersection(c.special).is_empty() && c.sequences.iter().all(|s| s.las.is_mono() || s.las.is_epi()),
        || "critical and special overlap, or a strong las map is neither mono nor epi".into(),
    ));
    let c0 = ClassSet::from_indices(d.c0.iter().copied());
    let c1 = ClassSet::from_indices(d.c1.iter().copied());
    rep.checks.push(check(
        "c0-c1-summands",
        c.critical.is_subset(c0) && c.special.is_subset(c1),
        || "a critical is not in C0 or a special is not in C1".into(),
    ));
    rep.checks.push(check(
        "split-injectivity",
        is_split_injective(&u, &d.c0_module(&u), d.c_class)? && c0 == c.critical,
        || "C0 is not split injective or add(C0) differs from the criticals".into(),
    ));
    if opts.oracle {
        let mut ok = true;
        for s in &c.sequences {
            ok &= left_almost_split_oracle(&u, &s.las, d.c_class)? == (true, true);
        }
        rep.checks.push(check("strong-las-oracle", ok, || "a sequence map fails the factorisation scan".into()));
    }
    let passed = rep.checks.iter().all(|c| c.passed);
    let stdout = render(&rep, || rep.text(), opts.format)?;
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    })
}

pub fn cmd_tors(file: &Path, opts: &Options) -> Result<Outcome, Outcome> {
    let u = load_universe(file, opts)?;
    let lat = enumerate_torsion_classes(&u)?;
    let problems = check_labels(&u, &lat)?;
    let mut checks = vec![Check {
        suite: "brick-labels".into(),
        passed: problems.is_empty(),
        checked: lat.covers.len(),
        witness: problems.first().cloned(),
        error: None,
    }];
    if opts.oracle && u.len() <= 20 {
        let n = heart_core::lattice::count_torsion_classes_by_subsets(&u)?;
        checks.push(check("subset-count", n == lat.classes.len(), || {
            format!("{n} torsion classes by subset scan")
        }));
    }
    let rep = TorsReport {
        schema_version: SCHEMA_VERSION,
        algebra: AlgebraInfo::new(u.algebra()),
        universe: module_infos(&u)?,
        classes: lat
            .classes
            .iter()
            .enumerate()
            .map(|(i, &c)| ClassInfo { index: i, members: set_names(&u, c) })
            .collect(),
        covers: lat
            .covers
            .iter()
            .map(|c| CoverInfo {
                upper: c.upper,
                lower: c.lower,
                label: u.name(c.label).to_string(),
                label_dims: u.module(c.label).dims().to_vec(),
            })
            .collect(),
        checks,
    };
    let passed = rep.checks.iter().all(|c| c.passed);
    let stdout = match opts.format {
        Format::Dot => rep.dot(),
        f => render(&rep, || rep.text(), f)?,
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    })
}

pub fn cmd_verify(file: &Path, opts: &Options) -> Result<Outcome, Outcome> {
    let u = load_universe(file, opts)?;
    verify_universe(u, opts)
}

/// Runs the suites on an already built universe; used for fault injection.
pub fn verify_universe(u: IndecUniverse, opts: &Options) -> Result<Outcome, Outcome> {
    let algebra = AlgebraInfo::new(u.algebra());
    let r = verify::verify(u, opts.oracle)?;
    let out = VerifyOutput {
        schema_version: SCHEMA_VERSION,
        algebra,
        oracle: opts.oracle,
        members: r.members,
        torsion_classes: r.torsion_classes,
        cotilting_pairs: r.cotilting_pairs,
        passed: r.passed(),
        checks: r.checks,
    };
    let stdout = render(&out, || out.text(), opts.format)?;
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if out.passed { EXIT_OK } else { EXIT_FAILED },
    })
}

/// Parses arguments and runs; used by the binary.
pub fn main_with_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

/// Convenience for tests: a module's summands named by the universe.
pub fn describe_module(u: &IndecUniverse, m: &Module) -> Result<String, Error> {
    if m.is_zero() {
        return Ok("0".into());
    }
    Ok(sum_text(u, &u.summand_indices(m)?))
}
