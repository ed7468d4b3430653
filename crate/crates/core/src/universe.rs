//! The finite list of indecomposable modules under a dimension bound, its
//! Hom and Ext tables, the completeness certificate, and brute-force
//! submodule and quotient enumeration.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::decompose::{decompose_full, find_isomorphism, is_indecomposable};
use crate::error::{Error, Result};
use crate::field::{PrimeField, VectorIter};
use crate::homology::{
    ar_translate, ar_translate_inverse, presentation, radical, socle, ExtSpace, HomSpace,
    Presentation,
};
use crate::matrix::Matrix;
use crate::module::{direct_sum, standard_modules, AlgebraRef, Module, Morphism};

/// Resource caps shared by the enumeration and the oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest per-vertex dimension bound accepted.
    pub max_bound: usize,
    /// Ext¹ spaces up to this dimension are scanned class by class.
    pub ext_dim: usize,
    /// Largest total dimension for submodule and quotient enumeration.
    pub submodule_dim: usize,
    /// Hom spaces up to this dimension are scanned element by element.
    pub hom_scan_dim: usize,
    /// Maximum number of raw representations examined during enumeration.
    pub candidates: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_bound: 8,
            ext_dim: 12,
            submodule_dim: 12,
            hom_scan_dim: 12,
            candidates: 2_000_000,
        }
    }
}

impl Caps {
    pub fn ext_scan_limit(&self, field: PrimeField) -> u64 {
        scan_limit(field, self.ext_dim)
    }

    pub fn hom_scan_limit(&self, field: PrimeField) -> u64 {
        scan_limit(field, self.hom_scan_dim)
    }
}

fn scan_limit(field: PrimeField, d: usize) -> u64 {
    field.count(d)
}

/// A set of universe members, as a bitset over indices `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSet(pub u64);

impl ClassSet {
    pub const MAX_MEMBERS: usize = 64;

    pub fn empty() -> Self {
        ClassSet(0)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ClassSet(u64::MAX)
        } else {
            ClassSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ClassSet(1 << i)
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ClassSet::empty();
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn union(self, o: ClassSet) -> ClassSet {
        ClassSet(self.0 | o.0)
    }

    pub fn intersection(self, o: ClassSet) -> ClassSet {
        ClassSet(self.0 & o.0)
    }

    pub fn difference(self, o: ClassSet) -> ClassSet {
        ClassSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: ClassSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

type MiddleKey = (Vec<usize>, Vec<usize>);

/// Indecomposable modules up to isomorphism under a dimension bound.
pub struct IndecUniverse {
    alg: AlgebraRef,
    bound: Vec<usize>,
    caps: Caps,
    indecs: Vec<Module>,
    names: Vec<String>,
    hom: Vec<Vec<HomSpace>>,
    hom_table: Vec<Vec<usize>>,
    ext_table: Vec<Vec<usize>>,
    presentations: Vec<Presentation>,
    ext: Vec<Vec<ExtSpace>>,
    middles: Mutex<HashMap<MiddleKey, Arc<Vec<Vec<usize>>>>>,
    all_maps: Mutex<HashMap<(usize, usize), (bool, bool)>>,
    completeness: OnceLock<Result<CompletenessReport>>,
}

impl fmt::Debug for IndecUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndecUniverse")
            .field("bound", &self.bound)
            .field("names", &self.names)
            .finish()
    }
}

/// All `rows x cols` matrices in reduced row echelon form, ordered by rank
/// and then pivot positions.
pub fn rref_matrices(field: PrimeField, rows: usize, cols: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for rank in 0..=rows.min(cols) {
        for pivots in subsets(cols, rank) {
            let mut free = Vec::new();
            for (r, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..cols {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            for vals in VectorIter::new(field, free.len()) {
                let mut m = Matrix::zeros(field, rows, cols);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, 1);
                }
                for (&(r, c), &x) in free.iter().zip(&vals) {
                    m.set(r, c, x);
                }
                out.push(m);
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn rank_form(field: PrimeField, rows: usize, cols: usize, r: usize) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..r {
        m.set(i, i, 1);
    }
    m
}

/// Dimension vectors bounded by `bound`, nonzero, ordered by total
/// dimension and then reverse-lexicographically.
fn dimension_vectors(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x > 0));
    out.sort_by(|a, b| {
        let sa: usize = a.iter().sum();
        let sb: usize = b.iter().sum();
        sa.cmp(&sb).then_with(|| b.cmp(a))
    });
    out
}

fn support_connected(alg: &AlgebraRef, dims: &[usize]) -> bool {
    let support: Vec<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
    let Some(&start) = support.first() else {
        return false;
    };
    let mut seen = vec![false; dims.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for a in &alg.quiver().arrows {
            for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                if x == v && dims[y] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    support.iter().all(|&v| seen[v])
}

/// Per-arrow candidate matrices, normalised by the base changes still free
/// at the endpoints.
fn arrow_choices(alg: &AlgebraRef, dims: &[usize]) -> Vec<Vec<Matrix>> {
    let f = alg.field();
    let mut used = vec![false; dims.len()];
    let mut out = Vec::new();
    for a in &alg.quiver().arrows {
        let (s, t) = (a.source, a.target);
        let (r, c) = (dims[s], dims[t]);
        let choices = if s == t {
            VectorIter::new(f, r * c)
                .map(|v| Matrix::from_fn(f, r, c, |i, j| v[i * c + j]))
                .collect()
        } else if !used[s] && !used[t] {
            used[s] = true;
            used[t] = true;
            (0..=r.min(c)).map(|k| rank_form(f, r, c, k)).collect()
        } else if !used[s] {
            used[s] = true;
            rref_matrices(f, r, c)
        } else if !used[t] {
            used[t] = true;
            rref_matrices(f, c, r).into_iter().map(|m| m.transpose()).collect()
        } else {
            VectorIter::new(f, r * c)
                .map(|v| Matrix::from_fn(f, r, c, |i, j| v[i * c + j]))
                .collect()
        };
        out.push(choices);
    }
    out
}

impl IndecUniverse {
    /// Enumerates the indecomposables with dimension vector at most `bound`.
    pub fn enumerate(alg: &AlgebraRef, bound: &[usize], caps: &Caps) -> Result<IndecUniverse> {
        if bound.len() != alg.vertex_count() {
            return Err(Error::Precondition("one bound per vertex expected".into()));
        }
        if bound.iter().any(|&b| b > caps.max_bound) {
            return Err(Error::Resource(format!(
                "dimension bound exceeds the cap {}",
                caps.max_bound
            )));
        }
        let mut indecs: Vec<Module> = Vec::new();
        let mut examined: u64 = 0;
        for dims in dimension_vectors(bound) {
            if !support_connected(alg, &dims) {
                continue;
            }
            let choices = arrow_choices(alg, &dims);
            let total: u64 = choices.iter().fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64));
            examined = examined.saturating_add(total);
            if examined > caps.candidates {
                return Err(Error::Resource(format!(
                    "more than {} candidate representations",
                    caps.candidates
                )));
            }
            let mut idx = vec![0usize; choices.len()];
            'outer: loop {
                let maps: Vec<Matrix> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
                let m = Module::from_parts(alg, dims.clone(), maps);
                if m.satisfies_relations()
                    && is_indecomposable(&m)?
                    && !indecs.iter().any(|x| find_isomorphism(x, &m).is_some())
                {
                    indecs.push(m);
                    if indecs.len() > ClassSet::MAX_MEMBERS {
                        return Err(Error::Resource(format!(
                            "more than {} indecomposables",
                            ClassSet::MAX_MEMBERS
                        )));
                    }
                }
                // odometer, last arrow fastest
                let mut k = idx.len();
                loop {
                    if k == 0 {
                        break 'outer;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < choices[k].len() {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        Ok(IndecUniverse::build(alg, bound.to_vec(), caps.clone(), indecs, None, None))
    }

    /// Builds a universe from given members; optional tables replace the
    /// computed ones (used to inject faults in tests).
    pub fn from_parts(
        alg: &AlgebraRef,
        bound: Vec<usize>,
        caps: Caps,
        indecs: Vec<Module>,
        hom_table: Option<Vec<Vec<usize>>>,
        ext_table: Option<Vec<Vec<usize>>>,
    ) -> Result<IndecUniverse> {
        if indecs.len() > ClassSet::MAX_MEMBERS {
            return Err(Error::Resource("too many universe members".into()));
        }
        Ok(IndecUniverse::build(alg, bound, caps, indecs, hom_table, ext_table))
    }

    fn build(
        alg: &AlgebraRef,
        bound: Vec<usize>,
        caps: Caps,
        indecs: Vec<Module>,
        hom_table: Option<Vec<Vec<usize>>>,
        ext_table: Option<Vec<Vec<usize>>>,
    ) -> IndecUniverse {
        let hom: Vec<Vec<HomSpace>> = indecs
            .iter()
            .map(|a| indecs.iter().map(|b| crate::homology::hom_space(a, b)).collect())
            .collect();
        let presentations: Vec<Presentation> = indecs.iter().map(presentation).collect();
        let ext: Vec<Vec<ExtSpace>> = presentations
            .iter()
            .map(|p| indecs.iter().map(|b| ExtSpace::new(p, b)).collect())
            .collect();
        let hom_table =
            hom_table.unwrap_or_else(|| hom.iter().map(|r| r.iter().map(|h| h.dim()).collect()).collect());
        let ext_table =
            ext_table.unwrap_or_else(|| ext.iter().map(|r| r.iter().map(|e| e.dim()).collect()).collect());
        let names = name_modules(alg, &indecs);
        IndecUniverse {
            alg: Arc::clone(alg),
            bound,
            caps,
            indecs,
            names,
            hom,
            hom_table,
            ext_table,
            presentations,
            ext,
            middles: Mutex::new(HashMap::new()),
            all_maps: Mutex::new(HashMap::new()),
            completeness: OnceLock::new(),
        }
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    pub fn bound(&self) -> &[usize] {
        &self.bound
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn all(&self) -> ClassSet {
        ClassSet::full(self.len())
    }

    pub fn module(&self, i: usize) -> &Module {
        &self.indecs[i]
    }

    pub fn modules(&self) -> &[Module] {
        &self.indecs
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.hom_table[i][j]
    }

    pub fn ext_dim(&self, i: usize, j: usize) -> usize {
        self.ext_table[i][j]
    }

    pub fn hom_table(&self) -> &[Vec<usize>] {
        &self.hom_table
    }

    pub fn ext_table(&self) -> &[Vec<usize>] {
        &self.ext_table
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.hom[i][j]
    }

    pub fn ext(&self, i: usize, j: usize) -> &ExtSpace {
        &self.ext[i][j]
    }

    pub fn presentation(&self, i: usize) -> &Presentation {
        &self.presentations[i]
    }

    /// Index of the member isomorphic to the indecomposable `m`.
    pub fn index_of(&self, m: &Module) -> Option<usize> {
        if m.is_zero() {
            return None;
        }
        self.indecs.iter().position(|x| find_isomorphism(x, m).is_some())
    }

    /// Members isomorphic to the indecomposable summands of `m`, with
    /// repetition, sorted.
    pub fn summand_indices(&self, m: &Module) -> Result<Vec<usize>> {
        let d = decompose_full(m)?;
        let mut out = Vec::new();
        for p in &d.pieces {
            match self.index_of(&p.module) {
                Some(i) => out.push(i),
                None => {
                    return Err(Error::IncompleteUniverse(format!(
                        "summand with dimension vector {:?} is not in the universe",
                        p.module.dims()
                    )))
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Direct sum of members (with repetition).
    pub fn sum_of(&self, idx: &[usize]) -> Module {
        let parts: Vec<&Module> = idx.iter().map(|&i| &self.indecs[i]).collect();
        direct_sum(&self.alg, &parts).module
    }

    /// Class set of the summands of `m`.
    pub fn class_of(&self, m: &Module) -> Result<ClassSet> {
        Ok(ClassSet::from_indices(self.summand_indices(m)?))
    }

    /// Summands of the middle terms of all nonzero Ext¹ classes (up to
    /// scalars) between the sums `c` and `n` of members.
    pub fn ext_middles(&self, c: &[usize], n: &[usize]) -> Result<Arc<Vec<Vec<usize>>>> {
        let key = (c.to_vec(), n.to_vec());
        if let Some(hit) = self.middles.lock().expect("cache lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let cm = self.sum_of(c);
        let nm = self.sum_of(n);
        let e = if c.len() == 1 {
            ExtSpace::new(&self.presentations[c[0]], &nm)
        } else {
            crate::homology::ext1(&cm, &nm)
        };
        let limit = self.caps.ext_scan_limit(self.field());
        let mut out = Vec::new();
        for cls in e.nonzero_classes_up_to_scalar(limit)? {
            let ses = e.realize(&cls);
            out.push(self.summand_indices(&ses.middle)?);
        }
        let out = Arc::new(out);
        self.middles
            .lock()
            .expect("cache lock")
            .insert(key, Arc::clone(&out));
        Ok(out)
    }

    /// For members `i`, `j`: whether every nonzero map `i -> j` is
    /// `(epi, mono)`, scanning maps up to scalars.
    pub fn nonzero_maps_are(&self, i: usize, j: usize) -> Result<(bool, bool)> {
        if let Some(hit) = self.all_maps.lock().expect("cache lock").get(&(i, j)) {
            return Ok(*hit);
        }
        let h = &self.hom[i][j];
        let limit = self.caps.hom_scan_limit(self.field());
        let mut epi = true;
        let mut mono = true;
        for c in crate::homology::projective_points(self.field(), h.dim(), limit)? {
            let g = h.element(&c);
            epi &= g.is_epi();
            mono &= g.is_mono();
            if !epi && !mono {
                break;
            }
        }
        self.all_maps
            .lock()
            .expect("cache lock")
            .insert((i, j), (epi, mono));
        Ok((epi, mono))
    }

    /// Closure certificate: standard modules, kernels, cokernels and images
    /// of maps between members, middle terms of extensions between members,
    /// AR translates, radicals and quotients by socles must all decompose
    /// into members. Computed once; the witness names the first escape.
    pub fn completeness_check(&self) -> Result<CompletenessReport> {
        self.completeness
            .get_or_init(|| self.compute_completeness())
            .clone()
    }

    fn compute_completeness(&self) -> Result<CompletenessReport> {
        let mut checked = 0usize;
        let mut escape: Option<String> = None;
        let mut probe = |what: String, m: &Module| -> Result<bool> {
            checked += 1;
            if m.is_zero() {
                return Ok(true);
            }
            let d = decompose_full(m)?;
            for p in &d.pieces {
                if self.index_of(&p.module).is_none() {
                    escape = Some(format!(
                        "{what} has a summand with dimension vector ({}) outside the universe",
                        p.module
                            .dims()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ));
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let report = |escape: Option<String>, checked: usize| CompletenessReport {
            complete: escape.is_none(),
            witness: escape,
            checked,
        };
        let st = standard_modules(&self.alg);
        let n = self.alg.vertex_count();
        for v in 0..n {
            let name = &self.alg.quiver().vertices[v];
            for (label, m) in [("S", &st.simples[v]), ("P", &st.projectives[v]), ("I", &st.injectives[v])] {
                if !probe(format!("{label}({name})"), m)? {
                    return Ok(report(escape, checked));
                }
            }
        }
        let limit = self.caps.hom_scan_limit(self.field()).min(256);
        for i in 0..self.len() {
            for j in 0..self.len() {
                let h = &self.hom[i][j];
                let maps: Vec<Morphism> = if self.field().count(h.dim()) <= limit {
                    h.all_elements(limit)?
                } else {
                    h.basis().to_vec()
                };
                for g in maps {
                    let tag = format!("a map {} -> {}", self.names[i], self.names[j]);
                    if !probe(format!("the kernel of {tag}"), &g.kernel().0)?
                        || !probe(format!("the cokernel of {tag}"), &g.cokernel().0)?
                        || !probe(format!("the image of {tag}"), &g.image().0)?
                    {
                        return Ok(report(escape, checked));
                    }
                }
                let e = &self.ext[i][j];
                let ext_limit = 1u64 << 12;
                let classes: Vec<Vec<u32>> = if self.field().count(e.dim()) <= ext_limit {
                    e.nonzero_classes_up_to_scalar(ext_limit)?
                } else {
                    (0..e.dim())
                        .map(|k| (0..e.dim()).map(|l| u32::from(k == l)).collect())
                        .collect()
                };
                for cls in classes {
                    let ses = e.realize(&cls);
                    let tag = format!(
                        "the middle term of an extension of {} by {}",
                        self.names[i], self.names[j]
                    );
                    if !probe(tag, &ses.middle)? {
                        return Ok(report(escape, checked));
                    }
                }
            }
        }
        for i in 0..self.len() {
            let m = &self.indecs[i];
            let name = &self.names[i];
            if let Ok(t) = ar_translate(m) {
                if !probe(format!("tau {name}"), &t)? {
                    return Ok(report(escape, checked));
                }
            }
            if let Ok(t) = ar_translate_inverse(m) {
                if !probe(format!("tau^- {name}"), &t)? {
                    return Ok(report(escape, checked));
                }
            }
            let (rad, _) = radical(m);
            let (_, soc_incl) = socle(m);
            if !probe(format!("the radical of {name}"), &rad)?
                || !probe(format!("{name} modulo its socle"), &soc_incl.cokernel().0)?
            {
                return Ok(report(escape, checked));
            }
        }
        Ok(report(escape, checked))
    }

    /// Errors unless the completeness certificate holds.
    pub fn require_complete(&self) -> Result<()> {
        let r = self.completeness_check()?;
        match r.witness {
            None => Ok(()),
            Some(w) => Err(Error::IncompleteUniverse(w)),
        }
    }
}

/// Outcome of the closure check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    pub complete: bool,
    pub witness: Option<String>,
    /// Number of modules tested.
    pub checked: usize,
}

/// Names `S(v)`, `P(v)`, `I(v)` for standard modules (in that order of
/// preference) and `M{i}` otherwise.
fn name_modules(alg: &AlgebraRef, indecs: &[Module]) -> Vec<String> {
    let st = standard_modules(alg);
    let vertices = &alg.quiver().vertices;
    indecs
        .iter()
        .enumerate()
        .map(|(i, m)| {
            for (label, list) in [("S", &st.simples), ("P", &st.projectives), ("I", &st.injectives)] {
                for (v, x) in list.iter().enumerate() {
                    if find_isomorphism(x, m).is_some() {
                        return format!("{label}({})", vertices[v]);
                    }
                }
            }
            format!("M{i}")
        })
        .collect()
}

/// All subspaces of `k^d`, as row bases in reduced echelon form.
pub fn all_subspaces(field: PrimeField, d: usize) -> Vec<Matrix> {
    (0..=d)
        .flat_map(|k| {
            rref_matrices(field, k, d)
                .into_iter()
                .filter(move |m| m.rank() == k)
        })
        .collect()
}

/// Every submodule of `m` exactly once, with its inclusion.
pub fn all_submodules(m: &Module, caps: &Caps) -> Result<Vec<(Module, Morphism)>> {
    if m.total_dim() > caps.submodule_dim {
        return Err(Error::Resource(format!(
            "submodule enumeration of a module of dimension {} (cap {})",
            m.total_dim(),
            caps.submodule_dim
        )));
    }
    let f = m.field();
    let n = m.dims().len();
    let spaces: Vec<Vec<Matrix>> = (0..n).map(|v| all_subspaces(f, m.dim_at(v))).collect();
    let arrows = &m.algebra().quiver().arrows;
    let mut out = Vec::new();
    let mut chosen: Vec<Matrix> = Vec::with_capacity(n);
    fn go(
        v: usize,
        m: &Module,
        spaces: &[Vec<Matrix>],
        arrows: &[crate::algebra::Arrow],
        chosen: &mut Vec<Matrix>,
        out: &mut Vec<(Module, Morphism)>,
    ) {
        if v == spaces.len() {
            out.push(m.submodule(chosen).expect("checked invariance"));
            return;
        }
        for u in &spaces[v] {
            chosen.push(u.clone());
            let ok = arrows.iter().enumerate().all(|(a, arrow)| {
                if arrow.source > v || arrow.target > v {
                    return true;
                }
                let moved = chosen[arrow.source].mul(m.arrow_map(a));
                crate::matrix::subspace::contains(&chosen[arrow.target], &moved)
            });
            if ok {
                go(v + 1, m, spaces, arrows, chosen, out);
            }
            chosen.pop();
        }
    }
    go(0, m, &spaces, arrows, &mut chosen, &mut out);
    Ok(out)
}

/// Every quotient of `m` exactly once, with its projection.
pub fn all_quotients(m: &Module, caps: &Caps) -> Result<Vec<(Module, Morphism)>> {
    Ok(all_submodules(m, caps)?
        .into_iter()
        .map(|(_, i)| i.cokernel())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn alg(text: &str) -> AlgebraRef {
        Arc::new(parse_algebra(text).unwrap())
    }

    #[test]
    fn a2_universe() {
        let a = alg("field 2\nvertices 1 2\narrow a: 1 -> 2\n");
        let u = IndecUniverse::enumerate(&a, &[2, 2], &Caps::default()).unwrap();
        assert_eq!(u.len(), 3);
        assert_eq!(u.names(), &["S(1)", "S(2)", "P(1)"]);
        assert!(u.completeness_check().unwrap().complete);
    }

    #[test]
    fn a2_small_bound_is_incomplete() {
        let a = alg("field 2\nvertices 1 2\narrow a: 1 -> 2\n");
        let u = IndecUniverse::enumerate(&a, &[1, 0], &Caps::default()).unwrap();
        assert_eq!(u.len(), 1);
        let r = u.completeness_check().unwrap();
        assert!(!r.complete);
        assert!(r.witness.is_some());
    }

    #[test]
    fn a3_universe() {
        let a = alg("field 2\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
        let u = IndecUniverse::enumerate(&a, &[2, 2, 2], &Caps::default()).unwrap();
        assert_eq!(u.len(), 6);
        assert!(u.completeness_check().unwrap().complete);
    }

    #[test]
    fn single_vertex() {
        let a = alg("field 2\nvertices 1\n");
        let u = IndecUniverse::enumerate(&a, &[2], &Caps::default()).unwrap();
        assert_eq!(u.len(), 1);
    }

    #[test]
    fn submodules_of_p1() {
        let a = alg("field 2\nvertices 1 2\narrow a: 1 -> 2\n");
        let p = crate::module::projective(&a, 0);
        let subs = all_submodules(&p, &Caps::default()).unwrap();
        let mut dims: Vec<Vec<usize>> = subs.iter().map(|s| s.0.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        let quots = all_quotients(&p, &Caps::default()).unwrap();
        let mut qd: Vec<Vec<usize>> = quots.iter().map(|s| s.0.dims().to_vec()).collect();
        qd.sort();
        assert_eq!(qd, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn class_set_ops() {
        let s = ClassSet::from_indices([0, 2]);
        assert!(s.contains(2) && !s.contains(1));
        assert_eq!(s.len(), 2);
        assert!(s.is_subset(ClassSet::full(3)));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
    }
}
