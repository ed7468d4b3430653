//! Serializable reports and their text and DOT renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use heart_core::algebra::BoundQuiverAlgebra;
use heart_core::universe::{ClassSet, IndecUniverse};
use serde::Serialize;

use crate::verify::Check;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraInfo {
    pub field: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub dimension: usize,
}

impl AlgebraInfo {
    pub fn new(a: &BoundQuiverAlgebra) -> Self {
        let q = a.quiver();
        AlgebraInfo {
            field: a.field().characteristic(),
            vertices: q.vertices.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|x| format!("{}: {} -> {}", x.name, q.vertices[x.source], q.vertices[x.target]))
                .collect(),
            relations: a
                .relations()
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, p)| format!("{c}*{}", p.display(q)))
                        .collect::<Vec<_>>()
                        .join(" + ")
                })
                .collect(),
            dimension: a.dim(),
        }
    }

    fn text(&self) -> String {
        let mut s = format!(
            "algebra over F_{}: vertices {}, dimension {}\n",
            self.field,
            self.vertices.join(" "),
            self.dimension
        );
        for a in &self.arrows {
            let _ = writeln!(s, "  arrow {a}");
        }
        for r in &self.relations {
            let _ = writeln!(s, "  relation {r}");
        }
        s
    }
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct ModuleInfo {
    pub index: usize,
    pub name: String,
    pub dims: Vec<usize>,
    pub brick: bool,
}

pub fn dims_text(d: &[usize]) -> String {
    format!("({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// `P(1)^2 ⊕ S(2)` style sum of members, in index order; `0` when empty.
pub fn sum_text(u: &IndecUniverse, idx: &[usize]) -> String {
    if idx.is_empty() {
        return "0".into();
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in idx {
        *counts.entry(i).or_default() += 1;
    }
    counts
        .iter()
        .map(|(&i, &n)| if n == 1 { u.name(i).to_string() } else { format!("{}^{n}", u.name(i)) })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

pub fn names(u: &IndecUniverse, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| u.name(i).to_string()).collect()
}

pub fn set_names(u: &IndecUniverse, s: ClassSet) -> Vec<String> {
    s.iter().map(|i| u.name(i).to_string()).collect()
}

fn braces(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct IndecReport {
    pub schema_version: u32,
    pub algebra: AlgebraInfo,
    pub bound: Vec<usize>,
    pub universe: Vec<ModuleInfo>,
    pub complete: bool,
    pub completeness_checks: usize,
    pub witness: Option<String>,
    pub hom: Vec<Vec<usize>>,
    pub ext: Vec<Vec<usize>>,
}

fn table(s: &mut String, title: &str, names: &[String], rows: &[Vec<usize>]) {
    let w = names.iter().map(|n| n.chars().count()).max().unwrap_or(1).max(2);
    let _ = writeln!(s, "{title}");
    let _ = write!(s, "  {:w$}", "");
    for n in names {
        let _ = write!(s, " {n:>w$}");
    }
    s.push('\n');
    for (n, r) in names.iter().zip(rows) {
        let _ = write!(s, "  {n:w$}");
        for x in r {
            let _ = write!(s, " {x:>w$}");
        }
        s.push('\n');
    }
}

impl IndecReport {
    pub fn text(&self) -> String {
        let mut s = self.algebra.text();
        let _ = writeln!(
            s,
            "{} indecomposables within bound {}; {}",
            self.universe.len(),
            dims_text(&self.bound),
            if self.complete {
                format!("complete ({} modules checked)", self.completeness_checks)
            } else {
                "INCOMPLETE".to_string()
            }
        );
        for m in &self.universe {
            let _ = writeln!(
                s,
                "  {:>3}  {:8} {:12} {}",
                m.index,
                m.name,
                dims_text(&m.dims),
                if m.brick { "brick" } else { "" }
            );
        }
        let names: Vec<String> = self.universe.iter().map(|m| m.name.clone()).collect();
        table(&mut s, "dim Hom(row, column):", &names, &self.hom);
        table(&mut s, "dim Ext¹(row, column):", &names, &self.ext);
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {w}");
        }
        s
    }
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct PairInfo {
    pub torsion: Vec<String>,
    pub torsion_free: Vec<String>,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct CotiltingInfo {
    #[serde(rename = "C")]
    pub c: Vec<String>,
    #[serde(rename = "C0")]
    pub c0: Vec<String>,
    #[serde(rename = "C1")]
    pub c1: Vec<String>,
    #[serde(rename = "tildeC")]
    pub tilde_c: Vec<String>,
    pub tilde_c_isomorphic_to_c: bool,
    pub cotilting_class: Vec<String>,
    pub perpendicular_class: Vec<String>,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct HeartSimpleInfo {
    pub module: String,
    pub dims: Vec<usize>,
    pub kind: String,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct SequenceInfo {
    pub theorem: String,
    pub simple: String,
    pub left: Vec<String>,
    pub middle: Vec<String>,
    pub right: Vec<String>,
    pub n: String,
    pub neg_isolated: String,
    pub las_is_mono: bool,
    pub las_is_epi: bool,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationInfo {
    pub critical: Vec<String>,
    pub special: Vec<String>,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct HeartReport {
    pub schema_version: u32,
    pub algebra: AlgebraInfo,
    pub universe: Vec<ModuleInfo>,
    pub generators: Vec<String>,
    pub torsion_pair: PairInfo,
    pub cotilting: Option<CotiltingInfo>,
    pub not_cotilting: Option<String>,
    pub heart_simples: Vec<HeartSimpleInfo>,
    pub sequences: Vec<SequenceInfo>,
    pub classification: Option<ClassificationInfo>,
    pub checks: Vec<Check>,
}

/// Direct sum of named summands, collapsing repeats into powers.
fn joined(v: &[String]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<(String, usize)> = Vec::new();
    for n in v {
        match parts.iter_mut().find(|(m, _)| m == n) {
            Some((_, k)) => *k += 1,
            None => parts.push((n.clone(), 1)),
        }
    }
    parts
        .into_iter()
        .map(|(n, k)| if k == 1 { n } else { format!("{n}^{k}") })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

impl HeartReport {
    pub fn text(&self) -> String {
        let mut s = self.algebra.text();
        let _ = writeln!(s, "generators: {}", braces(&self.generators));
        let _ = writeln!(
            s,
            "torsion pair: T = {}, F = {}",
            braces(&self.torsion_pair.torsion),
            braces(&self.torsion_pair.torsion_free)
        );
        match (&self.cotilting, &self.not_cotilting) {
            (Some(c), _) => {
                let _ = writeln!(s, "cotilting module C = {}", joined(&c.c));
                let _ = writeln!(s, "C0 = {}, C1 = {}", joined(&c.c0), joined(&c.c1));
                let _ = writeln!(
                    s,
                    "minimal cotilting module = {}{}",
                    joined(&c.tilde_c),
                    if c.tilde_c_isomorphic_to_c { " (isomorphic to C)" } else { " (differs from C)" }
                );
            }
            (None, Some(reason)) => {
                let _ = writeln!(s, "not cotilting: {reason}");
            }
            _ => {}
        }
        let _ = writeln!(s, "heart simples:");
        for h in &self.heart_simples {
            let _ = writeln!(s, "  {:12} {:12} {}", h.module, dims_text(&h.dims), h.kind);
        }
        if !self.sequences.is_empty() {
            let _ = writeln!(s, "sequences:");
        }
        for q in &self.sequences {
            let _ = writeln!(
                s,
                "  {}  0 -> {} -> {} -> {} -> 0   {} is {} (strong left almost split {})",
                q.theorem,
                joined(&q.left),
                joined(&q.middle),
                joined(&q.right),
                q.n,
                q.neg_isolated,
                if q.las_is_mono { "mono" } else { "epi" }
            );
        }
        if let Some(c) = &self.classification {
            let _ = writeln!(s, "E_C = {}, M_C = {}", braces(&c.critical), braces(&c.special));
        }
        for c in &self.checks {
            let _ = writeln!(s, "{}", c.line());
        }
        s
    }
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct ClassInfo {
    pub index: usize,
    pub members: Vec<String>,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct CoverInfo {
    pub upper: usize,
    pub lower: usize,
    pub label: String,
    pub label_dims: Vec<usize>,
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct TorsReport {
    pub schema_version: u32,
    pub algebra: AlgebraInfo,
    pub universe: Vec<ModuleInfo>,
    pub classes: Vec<ClassInfo>,
    pub covers: Vec<CoverInfo>,
    pub checks: Vec<Check>,
}

impl TorsReport {
    pub fn text(&self) -> String {
        let mut s = self.algebra.text();
        let _ = writeln!(s, "{} torsion classes, {} covers", self.classes.len(), self.covers.len());
        for c in &self.classes {
            let _ = writeln!(s, "  T{} = {}", c.index, braces(&c.members));
        }
        let _ = writeln!(s, "covers (upper -> lower, label):");
        for c in &self.covers {
            let _ = writeln!(s, "  T{} -> T{}  {} {}", c.upper, c.lower, c.label, dims_text(&c.label_dims));
        }
        for c in &self.checks {
            let _ = writeln!(s, "{}", c.line());
        }
        s
    }

    pub fn dot(&self) -> String {
        let mut s = String::from("digraph tors {\n  rankdir=TB;\n  node [shape=box];\n");
        for c in &self.classes {
            let _ = writeln!(s, "  t{} [label=\"{}\"];", c.index, braces(&c.members));
        }
        for c in &self.covers {
            let _ = writeln!(
                s,
                "  t{} -> t{} [label=\"{} {}\"];",
                c.upper,
                c.lower,
                c.label,
                dims_text(&c.label_dims)
            );
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize, Debug)]
#[serde(rename_all = "camelCase")]
pub struct VerifyOutput {
    pub schema_version: u32,
    pub algebra: AlgebraInfo,
    pub oracle: bool,
    pub members: usize,
    pub torsion_classes: usize,
    pub cotilting_pairs: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyOutput {
    pub fn text(&self) -> String {
        let mut s = self.algebra.text();
        let _ = writeln!(
            s,
            "{} indecomposables, {} torsion classes, {} cotilting pairs{}",
            self.members,
            self.torsion_classes,
            self.cotilting_pairs,
            if self.oracle { ", oracles on" } else { "" }
        );
        for c in &self.checks {
            let _ = writeln!(s, "{}", c.line());
        }
        let _ = writeln!(s, "{}", if self.passed { "all suites passed" } else { "FAILED" });
        s
    }
}
