//! Bound quiver algebras `kQ/I` over a prime field.
//!
//! Paths compose left to right: `a*b` means traverse `a`, then `b`. Right
//! modules over `kQ/I` are covariant representations of `Q` (see
//! [`crate::module`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::Matrix;

/// Default bound on the path length searched when checking admissibility.
pub const DEFAULT_LENGTH_CAP: usize = 32;

/// Hard cap on the number of paths materialized while computing the basis.
const PATH_COUNT_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn arrows_out_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path of the quiver; the trivial path `e_v` has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self * other`, or `None` if the endpoints do not match.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    fn sort_key(&self) -> (usize, usize, usize, &[usize]) {
        (self.arrows.len(), self.source, self.target, &self.arrows)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_trivial() {
            format!("e{}", quiver.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(u32, Path)>,
}

impl Relation {
    fn endpoints(&self) -> (usize, usize) {
        let p = &self.terms[0].1;
        (p.source, p.target)
    }

    fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }

    fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }
}

/// Parsed quiver file, before the basis is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub field: Option<u32>,
    pub quiver: Quiver,
    pub relations: Vec<RawRelation>,
}

/// A relation as written in the file, with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawRelation {
    pub terms: Vec<(i64, Path)>,
}

#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    field: PrimeField,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    /// Every path of at least this length lies in the ideal.
    nilpotency: usize,
    /// Normal form of every path of length below `nilpotency`, keyed by
    /// `(source, arrows)`, as sparse coordinates in `basis`.
    normal_forms: HashMap<(usize, Vec<usize>), Vec<(usize, u32)>>,
    /// `between[s][t]` lists the basis paths from `s` to `t`.
    between: Vec<Vec<Vec<usize>>>,
    mult: Vec<Vec<Vec<(usize, u32)>>>,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relations == other.relations
    }
}

impl Eq for BoundQuiverAlgebra {}

/// Parses a quiver file and computes the algebra with default settings.
pub fn parse_algebra(text: &str) -> Result<BoundQuiverAlgebra> {
    let spec = parse_spec(text)?;
    BoundQuiverAlgebra::new(spec, None, DEFAULT_LENGTH_CAP)
}

/// Parses the quiver file grammar without building the algebra.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    let mut field = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut raw_relations: Vec<(usize, String)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let (keyword, rest) = match line.find(char::is_whitespace) {
            Some(i) => (&line[..i], line[i..].trim()),
            None => (line, ""),
        };
        match keyword {
            "field" => {
                let p: u32 = rest
                    .parse()
                    .map_err(|_| err(format!("invalid characteristic `{rest}`")))?;
                if field.replace(p).is_some() {
                    return Err(err("duplicate `field` line".into()));
                }
            }
            "vertices" => {
                for v in rest.split_whitespace() {
                    if vertices.iter().any(|w| w == v) {
                        return Err(err(format!("duplicate vertex `{v}`")));
                    }
                    vertices.push(v.to_string());
                }
            }
            "arrow" => {
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| err("expected `arrow <name>: <src> -> <tgt>`".into()))?;
                let name = name.trim();
                let (src, tgt) = ends
                    .split_once("->")
                    .ok_or_else(|| err("expected `->` in arrow".into()))?;
                let (src, tgt) = (src.trim(), tgt.trim());
                if !valid_name(name) || name.chars().all(|c| c.is_ascii_digit()) {
                    return Err(err(format!("invalid arrow name `{name}`")));
                }
                if arrows.iter().any(|a| a.name == name) {
                    return Err(err(format!("duplicate arrow `{name}`")));
                }
                let source = vertices
                    .iter()
                    .position(|v| v == src)
                    .ok_or_else(|| err(format!("unknown vertex `{src}`")))?;
                let target = vertices
                    .iter()
                    .position(|v| v == tgt)
                    .ok_or_else(|| err(format!("unknown vertex `{tgt}`")))?;
                arrows.push(Arrow {
                    name: name.to_string(),
                    source,
                    target,
                });
            }
            "relation" => raw_relations.push((line_no, rest.to_string())),
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    if vertices.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no vertices declared".into(),
        });
    }
    let quiver = Quiver { vertices, arrows };
    let relations = raw_relations
        .into_iter()
        .map(|(line, text)| parse_relation(&quiver, &text).map_err(|message| Error::Parse { line, message }))
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraSpec {
        field,
        quiver,
        relations,
    })
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn parse_relation(quiver: &Quiver, text: &str) -> std::result::Result<RawRelation, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty relation".into());
    }
    let mut terms: Vec<(i64, Vec<usize>)> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        if term.is_empty() {
            return Err("empty term".into());
        }
        let mut coeff = sign;
        let mut path = Vec::new();
        for (k, factor) in term.split('*').enumerate() {
            if k == 0 && !factor.is_empty() && factor.chars().all(|c| c.is_ascii_digit()) {
                coeff *= factor.parse::<i64>().map_err(|e| e.to_string())?;
                continue;
            }
            let a = quiver
                .arrow_index(factor)
                .ok_or_else(|| format!("unknown arrow `{factor}`"))?;
            path.push(a);
        }
        if path.is_empty() {
            return Err(format!("term `{term}` has no arrows"));
        }
        terms.push((coeff, path));
    }
    let mut out = Vec::new();
    for (coeff, arrows) in terms {
        for w in arrows.windows(2) {
            if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                return Err("term is not a path".to_string());
            }
        }
        let path = Path {
            source: quiver.arrows[arrows[0]].source,
            target: quiver.arrows[*arrows.last().unwrap()].target,
            arrows,
        };
        out.push((coeff, path));
    }
    let (s, t) = (out[0].1.source, out[0].1.target);
    if out.iter().any(|(_, p)| p.source != s || p.target != t) {
        return Err("terms are not parallel paths".into());
    }
    Ok(RawRelation { terms: out })
}

fn reduce_relation(field: PrimeField, rel: &RawRelation) -> Relation {
    let mut merged: BTreeMap<Path, u32> = BTreeMap::new();
    for (c, p) in &rel.terms {
        let v = field.reduce(*c);
        let slot = merged.entry(p.clone()).or_insert(0);
        *slot = field.add(*slot, v);
    }
    Relation {
        terms: merged
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(p, c)| (c, p))
            .collect(),
    }
}

impl BoundQuiverAlgebra {
    /// Builds the algebra, computing a basis of residue classes of paths.
    ///
    /// `field_override` takes precedence over the file's `field` line.
    pub fn new(spec: AlgebraSpec, field_override: Option<u32>, length_cap: usize) -> Result<Self> {
        let p = field_override.or(spec.field).ok_or(Error::Parse {
            line: 0,
            message: "no `field` line and no field override".into(),
        })?;
        let field = PrimeField::new(p)?;
        let relations: Vec<Relation> = spec
            .relations
            .iter()
            .map(|r| reduce_relation(field, r))
            .filter(|r| !r.terms.is_empty())
            .collect();
        Self::from_parts(field, spec.quiver, relations, length_cap)
    }

    /// Builds the algebra from relations whose coefficients already lie in `0..p`.
    pub fn from_parts(
        field: PrimeField,
        quiver: Quiver,
        relations: Vec<Relation>,
        length_cap: usize,
    ) -> Result<Self> {
        for r in &relations {
            if r.min_len() < 2 {
                return Err(Error::Admissibility(
                    "relation has a term of length < 2 (not in the square of the arrow ideal)"
                        .into(),
                ));
            }
        }
        let n = quiver.vertex_count();

        // paths_by_len[l] = all paths of length l
        let mut paths_by_len: Vec<Vec<Path>> = vec![(0..n).map(Path::trivial).collect()];
        let mut total = n;
        let mut nilpotency = None;
        for l in 1..=length_cap + 1 {
            let next = extend_paths(&quiver, &paths_by_len[l - 1]);
            total += next.len();
            if total > PATH_COUNT_CAP {
                return Err(Error::Resource(format!(
                    "more than {PATH_COUNT_CAP} paths of length <= {l}"
                )));
            }
            paths_by_len.push(next);
            if l < 2 {
                continue;
            }
            if paths_by_len[l].is_empty()
                || paths_in_ideal(field, &relations, &paths_by_len, l)
            {
                nilpotency = Some(l);
                break;
            }
            if l == length_cap {
                break;
            }
        }
        let nilpotency = nilpotency.ok_or_else(|| {
            Error::Admissibility(format!(
                "paths of length {length_cap} are not all in the ideal (path basis does not stabilize)"
            ))
        })?;

        // normal forms of paths of length < nilpotency, one vertex pair at a time
        let short: Vec<&Path> = paths_by_len[..nilpotency].iter().flatten().collect();
        let mut groups: BTreeMap<(usize, usize), Vec<&Path>> = BTreeMap::new();
        for p in &short {
            groups.entry((p.source, p.target)).or_default().push(p);
        }
        let ideal = ideal_elements(&relations, &paths_by_len, nilpotency - 1, true);

        let mut standard: Vec<Path> = Vec::new();
        // temporary normal forms in terms of standard paths (by Path)
        let mut pending: Vec<((usize, Vec<usize>), Vec<(Path, u32)>)> = Vec::new();
        for ((s, t), mut paths) in groups {
            // columns ordered largest first so pivots land on long paths
            paths.sort_by(|a, b| b.sort_key().cmp(&a.sort_key()));
            let col: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            let rows: Vec<Vec<u32>> = ideal
                .iter()
                .filter(|v| v.first().map(|(p, _)| (p.source, p.target)) == Some((s, t)))
                .map(|v| {
                    let mut row = vec![0u32; paths.len()];
                    for (p, c) in v {
                        row[col[p]] = field.add(row[col[p]], *c);
                    }
                    row
                })
                .collect();
            let m = Matrix::from_rows(field, paths.len(), &rows);
            let (r, pivots) = m.rref();
            for (j, p) in paths.iter().enumerate() {
                if let Some(row) = pivots.iter().position(|&c| c == j) {
                    let nf = (0..paths.len())
                        .filter(|c| !pivots.contains(c) && r.get(row, *c) != 0)
                        .map(|c| (paths[c].clone(), field.neg(r.get(row, c))))
                        .collect();
                    pending.push(((p.source, p.arrows.clone()), nf));
                } else {
                    standard.push((*p).clone());
                    pending.push(((p.source, p.arrows.clone()), vec![((*p).clone(), 1)]));
                }
            }
        }
        standard.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let index: HashMap<&Path, usize> = standard.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let normal_forms: HashMap<(usize, Vec<usize>), Vec<(usize, u32)>> = pending
            .into_iter()
            .map(|(k, nf)| {
                let mut v: Vec<(usize, u32)> = nf.iter().map(|(p, c)| (index[p], *c)).collect();
                v.sort();
                (k, v)
            })
            .collect();
        let mut between = vec![vec![Vec::new(); n]; n];
        for (i, p) in standard.iter().enumerate() {
            between[p.source][p.target].push(i);
        }
        let mut alg = BoundQuiverAlgebra {
            field,
            quiver,
            relations,
            basis: standard,
            nilpotency,
            normal_forms,
            between,
            mult: Vec::new(),
            opposite: OnceLock::new(),
        };
        let d = alg.basis.len();
        let mut mult = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                if let Some(c) = alg.basis[i].concat(&alg.basis[j]) {
                    mult[i][j] = alg.normal_form(&c);
                }
            }
        }
        alg.mult = mult;
        Ok(alg)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Length from which on all paths vanish.
    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    /// Basis indices of the standard paths from `s` to `t`.
    pub fn paths_between(&self, s: usize, t: usize) -> &[usize] {
        &self.between[s][t]
    }

    /// Coordinates of a path in the basis (sparse, sorted by index).
    pub fn normal_form(&self, path: &Path) -> Vec<(usize, u32)> {
        if path.len() >= self.nilpotency {
            return Vec::new();
        }
        self.normal_forms
            .get(&(path.source, path.arrows.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Structure constants: `b_i * b_j` in the basis.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.mult[i][j]
    }

    /// Product of two algebra elements in basis coordinates.
    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, b)| **b != 0) {
                let ab = f.mul(a, b);
                for &(k, c) in &self.mult[i][j] {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    pub fn identity_element(&self) -> Vec<u32> {
        let mut out = vec![0; self.dim()];
        for (i, p) in self.basis.iter().enumerate() {
            if p.is_trivial() {
                out[i] = 1;
            }
        }
        out
    }

    /// The opposite algebra: arrows and paths reversed.
    pub fn opposite(&self) -> Result<BoundQuiverAlgebra> {
        let quiver = self.quiver.reversed();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| {
                        (
                            *c,
                            Path {
                                source: p.target,
                                target: p.source,
                                arrows: p.arrows.iter().rev().copied().collect(),
                            },
                        )
                    })
                    .collect(),
            })
            .collect();
        BoundQuiverAlgebra::from_parts(self.field, quiver, relations, self.nilpotency.max(2))
    }

    /// The opposite algebra, computed once and shared.
    pub fn opposite_shared(&self) -> Arc<BoundQuiverAlgebra> {
        Arc::clone(self.opposite.get_or_init(|| {
            Arc::new(self.opposite().expect("opposite of an admissible algebra is admissible"))
        }))
    }

    /// True if the underlying graph of the quiver is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.quiver.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn extend_paths(quiver: &Quiver, paths: &[Path]) -> Vec<Path> {
    let mut out = Vec::new();
    for p in paths {
        for a in quiver.arrows_out_of(p.target) {
            let mut arrows = p.arrows.clone();
            arrows.push(a);
            out.push(Path {
                source: p.source,
                target: quiver.arrows[a].target,
                arrows,
            });
        }
    }
    out
}

/// Elements `u * r * v` of the ideal with every term of length `<= max_len`.
/// With `truncate`, terms of length `> max_len` are dropped instead (valid once
/// all paths of length `max_len + 1` are known to lie in the ideal).
fn ideal_elements(
    relations: &[Relation],
    paths_by_len: &[Vec<Path>],
    max_len: usize,
    truncate: bool,
) -> Vec<Vec<(Path, u32)>> {
    let mut out = Vec::new();
    for r in relations {
        let budget_len = if truncate { r.min_len() } else { r.max_len() };
        if budget_len > max_len {
            continue;
        }
        let budget = max_len - budget_len;
        let (s, t) = r.endpoints();
        for lu in 0..=budget {
            for u in paths_by_len[lu].iter().filter(|u| u.target == s) {
                for lv in 0..=budget - lu {
                    for v in paths_by_len[lv].iter().filter(|v| v.source == t) {
                        let mut elem: Vec<(Path, u32)> = Vec::new();
                        for (c, p) in &r.terms {
                            let full = u.concat(p).and_then(|x| x.concat(v)).expect("composable");
                            if full.len() > max_len {
                                continue;
                            }
                            elem.push((full, *c));
                        }
                        if !elem.is_empty() {
                            out.push(elem);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Do all paths of length exactly `l` lie in the span of the ideal elements
/// `u * r * v` whose terms all have length `<= l`?
fn paths_in_ideal(
    field: PrimeField,
    relations: &[Relation],
    paths_by_len: &[Vec<Path>],
    l: usize,
) -> bool {
    let elements = ideal_elements(relations, paths_by_len, l, false);
    let mut groups: BTreeMap<(usize, usize), Vec<&Path>> = BTreeMap::new();
    for p in paths_by_len[..=l].iter().flatten() {
        groups.entry((p.source, p.target)).or_default().push(p);
    }
    for ((s, t), paths) in groups {
        let targets: Vec<&&Path> = paths.iter().filter(|p| p.len() == l).collect();
        if targets.is_empty() {
            continue;
        }
        let col: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let rows: Vec<Vec<u32>> = elements
            .iter()
            .filter(|e| (e[0].0.source, e[0].0.target) == (s, t))
            .map(|e| {
                let mut row = vec![0; paths.len()];
                for (p, c) in e {
                    row[col[p]] = field.add(row[col[p]], *c);
                }
                row
            })
            .collect();
        let span = Matrix::from_rows(field, paths.len(), &rows);
        let want: Vec<Vec<u32>> = targets
            .iter()
            .map(|p| {
                let mut row = vec![0; paths.len()];
                row[col[**p]] = 1;
                row
            })
            .collect();
        let want = Matrix::from_rows(field, paths.len(), &want);
        if span.rows() == 0 || span.solve_left(&want).is_none() {
            return false;
        }
    }
    true
}

impl fmt::Display for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kQ/I over F_{}: {} vertices, {} arrows, {} relations, dim {}",
            self.field.characteristic(),
            self.vertex_count(),
            self.arrow_count(),
            self.relations.len(),
            self.dim()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = "field 2\nvertices 1 2\narrow a: 1 -> 2\n";

    #[test]
    fn a2_has_three_basis_paths() {
        let alg = parse_algebra(A2).unwrap();
        assert_eq!(alg.dim(), 3);
        let names: Vec<String> = alg.basis().iter().map(|p| p.display(alg.quiver())).collect();
        assert_eq!(names, vec!["e1", "e2", "a"]);
    }

    #[test]
    fn single_vertex_is_the_field() {
        let alg = parse_algebra("field 3\nvertices x\n").unwrap();
        assert_eq!(alg.dim(), 1);
    }

    #[test]
    fn truncated_loop() {
        let alg = parse_algebra("field 2\nvertices 1\narrow x: 1 -> 1\nrelation x*x\n").unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.nilpotency_index(), 2);
    }

    #[test]
    fn commutative_square() {
        let text = "field 3\nvertices 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\n\
                    arrow c: 1 -> 3\narrow d: 3 -> 4\nrelation a*b - c*d\n";
        let alg = parse_algebra(text).unwrap();
        // e1..e4, a, b, c, d and one class of length-two paths
        assert_eq!(alg.dim(), 9);
        let ab = Path { source: 0, target: 3, arrows: vec![0, 1] };
        let cd = Path { source: 0, target: 3, arrows: vec![2, 3] };
        assert_eq!(alg.normal_form(&ab), alg.normal_form(&cd));
    }

    #[test]
    fn free_loop_is_not_admissible() {
        let err = parse_algebra("field 2\nvertices 1\narrow x: 1 -> 1\n").unwrap_err();
        assert!(matches!(err, Error::Admissibility(_) | Error::Resource(_)));
    }

    #[test]
    fn non_homogeneous_infinite_quotient_is_rejected() {
        let err = parse_algebra("field 2\nvertices 1\narrow x: 1 -> 1\nrelation x*x - x*x*x\n");
        assert!(err.is_err());
        let ok = parse_algebra("field 2\nvertices 1\narrow x: 1 -> 1\nrelation x*x - x*x*x\nrelation x*x*x\n")
            .unwrap();
        assert_eq!(ok.dim(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_algebra("field 2\nvertices 1\narrow a 1 -> 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_algebra("field 2\nvertices 1 2\narrow a: 1 -> 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_algebra("field 2\nvertices 1 2\narrow a: 1 -> 2\nrelation a*a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
    }

    #[test]
    fn relation_of_length_one_is_rejected() {
        let err = parse_algebra("field 2\nvertices 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrelation a - b\n")
            .unwrap_err();
        assert!(matches!(err, Error::Admissibility(_)));
    }

    #[test]
    fn multiplication_is_associative() {
        let text = "field 3\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n\
                    relation a*b*c\nrelation b*c*a\nrelation c*a*b\n";
        let alg = parse_algebra(text).unwrap();
        let d = alg.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut ei = vec![0; d];
                    ei[i] = 1;
                    let mut ej = vec![0; d];
                    ej[j] = 1;
                    let mut ek = vec![0; d];
                    ek[k] = 1;
                    let left = alg.multiply(&alg.multiply(&ei, &ej), &ek);
                    let right = alg.multiply(&ei, &alg.multiply(&ej, &ek));
                    assert_eq!(left, right);
                }
            }
        }
        let one = alg.identity_element();
        for i in 0..d {
            let mut ei = vec![0; d];
            ei[i] = 1;
            assert_eq!(alg.multiply(&one, &ei), ei);
            assert_eq!(alg.multiply(&ei, &one), ei);
        }
    }

    #[test]
    fn whitespace_and_comments_are_ignored() {
        let text = "# A2\n  field   2  \nvertices 1   2 # two vertices\n\narrow   a :1->  2\n";
        assert_eq!(parse_algebra(text).unwrap().dim(), 3);
    }
}
