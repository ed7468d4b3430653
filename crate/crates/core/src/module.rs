//! Finite-dimensional right modules as quiver representations, and their
//! morphisms.
//!
//! A module `M` assigns a space `k^{d_v}` to each vertex and to each arrow
//! `a: v -> w` a `d_v x d_w` matrix. Elements are row vectors, so an element
//! `x` at `v` is moved along `a` to `x * M_a`, and along a path `a*b` to
//! `x * M_a * M_b`. A morphism `f: M -> N` is a family of `d_v(M) x d_v(N)`
//! matrices with `f_v * N_a = M_a * f_w` for every arrow `a: v -> w`.
//! Composition "`f` then `g`" multiplies the vertex matrices in that order.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::{subspace, Matrix};

pub type AlgebraRef = Arc<BoundQuiverAlgebra>;

#[derive(Clone)]
pub struct Module {
    alg: AlgebraRef,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg)
            && self.dims == other.dims
            && self.maps == other.maps
    }
}

impl Eq for Module {}

impl Module {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(alg: &AlgebraRef, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows.len() {
            return Err(Error::Precondition("dimension vector or arrow count mismatch".into()));
        }
        for (a, m) in q.arrows.iter().zip(&maps) {
            if m.shape() != (dims[a.source], dims[a.target]) {
                return Err(Error::Precondition(format!(
                    "arrow `{}` needs a {}x{} matrix",
                    a.name, dims[a.source], dims[a.target]
                )));
            }
        }
        let m = Module::from_parts(alg, dims, maps);
        if !m.satisfies_relations() {
            return Err(Error::Precondition("representation violates a relation".into()));
        }
        Ok(m)
    }

    pub(crate) fn from_parts(alg: &AlgebraRef, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Module {
            alg: Arc::clone(alg),
            dims,
            maps,
        }
    }

    pub fn zero(alg: &AlgebraRef) -> Self {
        let dims = vec![0; alg.vertex_count()];
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .map(|_| Matrix::zeros(alg.field(), 0, 0))
            .collect();
        Module::from_parts(alg, dims, maps)
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.alg
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Matrix of the action of a path.
    pub fn path_matrix(&self, path: &Path) -> Matrix {
        let f = self.field();
        let mut m = Matrix::identity(f, self.dims[path.source]);
        for &a in &path.arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    pub fn satisfies_relations(&self) -> bool {
        let f = self.field();
        self.alg.relations().iter().all(|r| {
            let (s, t) = (r.terms[0].1.source, r.terms[0].1.target);
            let mut acc = Matrix::zeros(f, self.dims[s], self.dims[t]);
            for (c, p) in &r.terms {
                acc = acc.add(&self.path_matrix(p).scale(*c));
            }
            acc.is_zero()
        })
    }

    /// Submodule spanned at each vertex by the rows of `spaces[v]`; fails if
    /// the family is not invariant under the arrows.
    pub fn submodule(&self, spaces: &[Matrix]) -> Result<(Module, Morphism)> {
        let q = self.alg.quiver();
        let bases: Vec<Matrix> = spaces.iter().map(|s| s.row_space()).collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (a, arrow) in q.arrows.iter().enumerate() {
            let moved = bases[arrow.source].mul(&self.maps[a]);
            let x = if moved.rows() == 0 {
                Matrix::zeros(self.field(), 0, bases[arrow.target].rows())
            } else {
                bases[arrow.target].solve_left(&moved).ok_or_else(|| {
                    Error::Precondition(format!("subspaces not invariant under `{}`", arrow.name))
                })?
            };
            maps.push(x);
        }
        let dims = bases.iter().map(|b| b.rows()).collect();
        let sub = Module::from_parts(&self.alg, dims, maps);
        let incl = Morphism::from_parts(sub.clone(), self.clone(), bases);
        Ok((sub, incl))
    }

    /// Quotient by an invariant family of subspaces, with the projection.
    pub fn quotient(&self, spaces: &[Matrix]) -> Result<(Module, Morphism)> {
        let f = self.field();
        let q = self.alg.quiver();
        let bases: Vec<Matrix> = spaces.iter().map(|s| s.row_space()).collect();
        // projection columns span the annihilator of each subspace
        let proj: Vec<Matrix> = bases
            .iter()
            .zip(&self.dims)
            .map(|(b, &d)| {
                if b.rows() == 0 {
                    Matrix::identity(f, d)
                } else {
                    b.null_space().transpose()
                }
            })
            .collect();
        let sections: Vec<Matrix> = proj
            .iter()
            .map(|p| {
                p.solve_left(&Matrix::identity(f, p.cols()))
                    .expect("projection has full column rank")
            })
            .collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (a, arrow) in q.arrows.iter().enumerate() {
            let moved = bases[arrow.source].mul(&self.maps[a]);
            if !subspace::contains(&bases[arrow.target], &moved) {
                return Err(Error::Precondition(format!(
                    "subspaces not invariant under `{}`",
                    arrow.name
                )));
            }
            maps.push(
                sections[arrow.source]
                    .mul(&self.maps[a])
                    .mul(&proj[arrow.target]),
            );
        }
        let dims = proj.iter().map(|p| p.cols()).collect();
        let quot = Module::from_parts(&self.alg, dims, maps);
        let pi = Morphism::from_parts(self.clone(), quot.clone(), proj);
        Ok((quot, pi))
    }

    /// `k`-dual representation over the opposite algebra `op`.
    pub fn dual(&self, op: &AlgebraRef) -> Module {
        let maps = self.maps.iter().map(|m| m.transpose()).collect();
        Module::from_parts(op, self.dims.clone(), maps)
    }

    pub fn short_description(&self) -> String {
        format!(
            "({})",
            self.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{}", self.short_description())?;
        let q = self.alg.quiver();
        for (a, m) in q.arrows.iter().zip(&self.maps) {
            write!(f, " {}={:?}", a.name, m)?;
        }
        Ok(())
    }
}

/// Direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub inclusions: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

/// Direct sum of `parts` (the zero module for an empty list).
pub fn direct_sum(alg: &AlgebraRef, parts: &[&Module]) -> DirectSum {
    let f = alg.field();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
    let maps = (0..alg.arrow_count())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.maps[a]).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let module = Module::from_parts(alg, dims.clone(), maps);
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut offset = vec![0; n];
    for m in parts {
        let mut inc = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let mut i = Matrix::zeros(f, m.dims[v], dims[v]);
            i.paste(0, offset[v], &Matrix::identity(f, m.dims[v]));
            proj.push(i.transpose());
            inc.push(i);
            offset[v] += m.dims[v];
        }
        inclusions.push(Morphism::from_parts((*m).clone(), module.clone(), inc));
        projections.push(Morphism::from_parts(module.clone(), (*m).clone(), proj));
    }
    DirectSum {
        module,
        inclusions,
        projections,
    }
}

/// `M^n` for a single module.
pub fn power(m: &Module, n: usize) -> Module {
    let parts: Vec<&Module> = std::iter::repeat(m).take(n).collect();
    direct_sum(m.algebra(), &parts).module
}

#[derive(Clone)]
pub struct Morphism {
    source: Module,
    target: Module,
    maps: Vec<Matrix>,
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.maps == other.maps
    }
}

impl Eq for Morphism {}

impl Morphism {
    /// Checks shapes and the intertwining condition.
    pub fn new(source: &Module, target: &Module, maps: Vec<Matrix>) -> Result<Self> {
        let n = source.alg.vertex_count();
        if maps.len() != n {
            return Err(Error::Precondition("one matrix per vertex expected".into()));
        }
        for v in 0..n {
            if maps[v].shape() != (source.dims[v], target.dims[v]) {
                return Err(Error::Precondition(format!("vertex {v}: wrong matrix shape")));
            }
        }
        let f = Morphism::from_parts(source.clone(), target.clone(), maps);
        if !f.intertwines() {
            return Err(Error::Precondition("family of matrices does not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(source: Module, target: Module, maps: Vec<Matrix>) -> Self {
        Morphism {
            source,
            target,
            maps,
        }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let f = source.field();
        let maps = (0..source.dims.len())
            .map(|v| Matrix::zeros(f, source.dims[v], target.dims[v]))
            .collect();
        Morphism::from_parts(source.clone(), target.clone(), maps)
    }

    pub fn identity(m: &Module) -> Self {
        let f = m.field();
        let maps = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism::from_parts(m.clone(), m.clone(), maps)
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn vertex_map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn vertex_maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn intertwines(&self) -> bool {
        let q = self.source.alg.quiver();
        q.arrows.iter().enumerate().all(|(a, arrow)| {
            self.maps[arrow.source].mul(&self.target.maps[a])
                == self.source.maps[a].mul(&self.maps[arrow.target])
        })
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        assert_eq!(self.target.dims, g.source.dims, "composing incompatible morphisms");
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.mul(b)).collect();
        Morphism::from_parts(self.source.clone(), g.target.clone(), maps)
    }

    pub fn add(&self, g: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&g.maps).map(|(a, b)| a.add(b)).collect();
        Morphism::from_parts(self.source.clone(), self.target.clone(), maps)
    }

    pub fn scale(&self, c: u32) -> Morphism {
        let maps = self.maps.iter().map(|a| a.scale(c)).collect();
        Morphism::from_parts(self.source.clone(), self.target.clone(), maps)
    }

    pub fn sub(&self, g: &Morphism) -> Morphism {
        self.add(&g.scale(self.source.field().neg(1)))
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// For endomorphisms: nilpotent as a linear map.
    pub fn is_nilpotent(&self) -> bool {
        self.maps.iter().all(|m| m.is_nilpotent())
    }

    /// Entries of all vertex matrices, concatenated.
    pub fn flatten(&self) -> Vec<u32> {
        self.maps.iter().flat_map(|m| m.flatten()).collect()
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Module, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(|m| m.left_kernel()).collect();
        self.source
            .submodule(&spaces)
            .expect("kernel is a submodule")
    }

    /// Image as a submodule of the target: `(image, source -> image, image -> target)`.
    pub fn image(&self) -> (Module, Morphism, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(|m| m.row_space()).collect();
        let (img, incl) = self.target.submodule(&spaces).expect("image is a submodule");
        let onto = factor_through_mono(&incl, self).expect("map lands in its image");
        (img, onto, incl)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Module, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(|m| m.row_space()).collect();
        self.target.quotient(&spaces).expect("image is a submodule")
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism {} -> {} {:?}",
            self.source.short_description(),
            self.target.short_description(),
            self.maps
        )
    }
}

/// Given a mono `i: W -> B` and `r: A -> B` with image inside `i`, returns
/// the unique `u: A -> W` with `u then i = r`.
pub fn factor_through_mono(i: &Morphism, r: &Morphism) -> Option<Morphism> {
    let f = r.source.field();
    let mut maps = Vec::new();
    for v in 0..i.maps.len() {
        let u = if r.maps[v].rows() == 0 {
            Matrix::zeros(f, 0, i.maps[v].rows())
        } else if i.maps[v].rows() == 0 {
            if !r.maps[v].is_zero() {
                return None;
            }
            Matrix::zeros(f, r.maps[v].rows(), 0)
        } else {
            i.maps[v].solve_left(&r.maps[v])?
        };
        maps.push(u);
    }
    Some(Morphism::from_parts(r.source.clone(), i.source.clone(), maps))
}

/// Given an epi `q: A -> W` and `r: A -> B` vanishing on the kernel of `q`,
/// returns the unique `u: W -> B` with `q then u = r`.
pub fn factor_through_epi(q: &Morphism, r: &Morphism) -> Option<Morphism> {
    let f = r.source.field();
    let mut maps = Vec::new();
    for v in 0..q.maps.len() {
        let qv = &q.maps[v];
        let u = if qv.cols() == 0 {
            if !r.maps[v].is_zero() {
                return None;
            }
            Matrix::zeros(f, 0, r.maps[v].cols())
        } else {
            qv.solve_right(&r.maps[v])?
        };
        if qv.mul(&u) != r.maps[v] {
            return None;
        }
        maps.push(u);
    }
    Some(Morphism::from_parts(q.target.clone(), r.target.clone(), maps))
}

/// The simple module at vertex `v`.
pub fn simple(alg: &AlgebraRef, v: usize) -> Module {
    let f = alg.field();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|w| usize::from(w == v)).collect();
    let maps = alg
        .quiver()
        .arrows
        .iter()
        .map(|a| Matrix::zeros(f, dims[a.source], dims[a.target]))
        .collect();
    Module::from_parts(alg, dims, maps)
}

/// The indecomposable projective `P(v) = e_v A`; at `w` its basis is the
/// standard paths from `v` to `w`, and arrows act by right multiplication.
pub fn projective(alg: &AlgebraRef, v: usize) -> Module {
    let f = alg.field();
    let q = alg.quiver();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|w| alg.paths_between(v, w).len()).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let rows = alg.paths_between(v, arrow.source);
            let cols = alg.paths_between(v, arrow.target);
            let arrow_path = Path {
                source: arrow.source,
                target: arrow.target,
                arrows: vec![a],
            };
            let mut m = Matrix::zeros(f, rows.len(), cols.len());
            for (i, &b) in rows.iter().enumerate() {
                let prod = alg.basis()[b].concat(&arrow_path).expect("composable");
                for (k, c) in alg.normal_form(&prod) {
                    let j = cols.iter().position(|&x| x == k).expect("parallel path");
                    m.set(i, j, c);
                }
            }
            m
        })
        .collect();
    Module::from_parts(alg, dims, maps)
}

/// The indecomposable injective `I(v) = D(A e_v)`; at `w` its basis is dual to
/// the standard paths from `w` to `v`.
pub fn injective(alg: &AlgebraRef, v: usize) -> Module {
    let f = alg.field();
    let q = alg.quiver();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|w| alg.paths_between(w, v).len()).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let rows = alg.paths_between(arrow.source, v);
            let cols = alg.paths_between(arrow.target, v);
            let arrow_path = Path {
                source: arrow.source,
                target: arrow.target,
                arrows: vec![a],
            };
            let mut m = Matrix::zeros(f, rows.len(), cols.len());
            for (j, &b) in cols.iter().enumerate() {
                let prod = arrow_path.concat(&alg.basis()[b]).expect("composable");
                for (k, c) in alg.normal_form(&prod) {
                    let i = rows.iter().position(|&x| x == k).expect("parallel path");
                    m.set(i, j, c);
                }
            }
            m
        })
        .collect();
    Module::from_parts(alg, dims, maps)
}

/// Simples, projectives and injectives, indexed by vertex.
#[derive(Clone, Debug)]
pub struct StandardModules {
    pub simples: Vec<Module>,
    pub projectives: Vec<Module>,
    pub injectives: Vec<Module>,
}

pub fn standard_modules(alg: &AlgebraRef) -> StandardModules {
    let n = alg.vertex_count();
    StandardModules {
        simples: (0..n).map(|v| simple(alg, v)).collect(),
        projectives: (0..n).map(|v| projective(alg, v)).collect(),
        injectives: (0..n).map(|v| injective(alg, v)).collect(),
    }
}

/// Morphism from `P(v_1) + ... + P(v_r)` determined by the images of the
/// idempotent generators: `images[j]` is a vector in `target` at `vertices[j]`.
pub fn morphism_from_generators(
    source: &Module,
    vertices: &[usize],
    target: &Module,
    images: &[Vec<u32>],
) -> Morphism {
    let alg = target.algebra();
    let f = alg.field();
    let n = alg.vertex_count();
    let mut maps = Vec::with_capacity(n);
    for w in 0..n {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (j, &v) in vertices.iter().enumerate() {
            let x = Matrix::row_vector(f, &images[j]);
            for &b in alg.paths_between(v, w) {
                let y = x.mul(&target.path_matrix(&alg.basis()[b]));
                rows.push(y.row(0));
            }
        }
        maps.push(Matrix::from_rows(f, target.dims[w], &rows));
    }
    Morphism::from_parts(source.clone(), target.clone(), maps)
}

/// `P(v_1) + ... + P(v_r)` for the listed vertices.
pub fn projective_sum(alg: &AlgebraRef, vertices: &[usize]) -> Module {
    let ps: Vec<Module> = vertices.iter().map(|&v| projective(alg, v)).collect();
    let refs: Vec<&Module> = ps.iter().collect();
    direct_sum(alg, &refs).module
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn a2() -> AlgebraRef {
        Arc::new(parse_algebra("field 2\nvertices 1 2\narrow a: 1 -> 2\n").unwrap())
    }

    #[test]
    fn a2_standard_modules() {
        let alg = a2();
        let st = standard_modules(&alg);
        assert_eq!(st.projectives[0].dims(), &[1, 1]);
        assert_eq!(st.projectives[0].arrow_map(0), &Matrix::identity(alg.field(), 1));
        assert_eq!(st.injectives[0].dims(), &[1, 0]);
        assert_eq!(st.injectives[1].dims(), &[1, 1]);
        assert_eq!(st.projectives[1].dims(), &[0, 1]);
        for v in 0..2 {
            let d: Vec<usize> = (0..2).map(|w| usize::from(v == w)).collect();
            assert_eq!(st.simples[v].dims(), &d[..]);
            assert!(st.projectives[v].satisfies_relations());
            assert!(st.injectives[v].satisfies_relations());
        }
    }

    #[test]
    fn kernel_of_projection_onto_top() {
        let alg = a2();
        let st = standard_modules(&alg);
        let p1 = &st.projectives[0];
        let s1 = &st.simples[0];
        let f = alg.field();
        let pi = Morphism::new(p1, s1, vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 0)]).unwrap();
        let (k, incl) = pi.kernel();
        assert_eq!(k.dims(), &[0, 1]);
        assert!(incl.then(&pi).is_zero());
        let (c, _) = pi.cokernel();
        assert!(c.is_zero());
    }

    #[test]
    fn identity_and_zero_maps() {
        let alg = a2();
        let p1 = projective(&alg, 0);
        let id = Morphism::identity(&p1);
        assert!(id.kernel().0.is_zero());
        assert!(id.cokernel().0.is_zero());
        let z = Morphism::zero(&p1, &p1);
        assert_eq!(z.kernel().0, p1);
        assert!(z.image().0.is_zero());
        assert_eq!(z.cokernel().0.dims(), p1.dims());
    }

    #[test]
    fn non_intertwining_family_is_rejected() {
        let alg = a2();
        let f = alg.field();
        let p1 = projective(&alg, 0);
        let s1 = simple(&alg, 0);
        // S(1) -> P(1) identity at vertex 1 fails to commute with `a`
        let bad = Morphism::new(&s1, &p1, vec![Matrix::identity(f, 1), Matrix::zeros(f, 0, 1)]);
        assert!(bad.is_err());
    }

    #[test]
    fn relations_are_checked() {
        let alg = Arc::new(parse_algebra("field 2\nvertices 1\narrow x: 1 -> 1\nrelation x*x\n").unwrap());
        let f = alg.field();
        let bad = Module::new(&alg, vec![1], vec![Matrix::identity(f, 1)]);
        assert!(bad.is_err());
        let good = Module::new(&alg, vec![2], vec![Matrix::from_rows(f, 2, &[vec![0, 1], vec![0, 0]])]);
        assert!(good.is_ok());
        assert_eq!(projective(&alg, 0).dims(), &[2]);
        assert_eq!(injective(&alg, 0).dims(), &[2]);
    }
}
