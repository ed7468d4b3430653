//! Hom spaces, Ext¹ through projective presentations, pushouts and
//! pullbacks, projective covers, injective envelopes, minimal
//! approximations and the Auslander–Reiten translate.

use crate::error::{Error, Result};
use crate::field::VectorIter;
use crate::matrix::{subspace, Matrix};
use crate::module::{
    direct_sum, factor_through_epi, factor_through_mono, injective, morphism_from_generators,
    projective, AlgebraRef, DirectSum, Module, Morphism,
};

/// All morphisms between two modules. The basis is in reduced echelon form
/// with respect to the flattened vertex matrices, so coordinates of a
/// morphism are its entries at the pivot positions.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    echelon: Matrix,
    pivots: Vec<usize>,
    basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    /// Coordinates of `f` in the basis.
    pub fn coordinates(&self, f: &Morphism) -> Vec<u32> {
        let v = f.flatten();
        self.pivots.iter().map(|&p| v[p]).collect()
    }

    pub fn element(&self, coeffs: &[u32]) -> Morphism {
        let row = Matrix::row_vector(self.source.field(), coeffs).mul(&self.echelon);
        morphism_from_flat(&self.source, &self.target, &row.row(0))
    }

    /// Every element, if there are at most `cap` of them.
    pub fn all_elements(&self, cap: u64) -> Result<Vec<Morphism>> {
        let f = self.source.field();
        let count = f.count(self.dim());
        if count > cap {
            return Err(Error::Resource(format!(
                "Hom space of dimension {} has {} elements (cap {})",
                self.dim(),
                count,
                cap
            )));
        }
        Ok(VectorIter::new(f, self.dim()).map(|c| self.element(&c)).collect())
    }

    /// `true` if every nonzero element satisfies `pred`, scanning all
    /// elements up to scalars.
    pub fn all_nonzero_up_to_scalar(&self, cap: u64, pred: impl Fn(&Morphism) -> bool) -> Result<bool> {
        for c in projective_points(self.source.field(), self.dim(), cap)? {
            if !pred(&self.element(&c)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Representatives of the nonzero vectors of `F_p^d` up to scalars: the
/// vectors whose first nonzero coordinate is 1.
pub fn projective_points(
    field: crate::field::PrimeField,
    d: usize,
    cap: u64,
) -> Result<Vec<Vec<u32>>> {
    let count = field.count(d);
    if count > cap {
        return Err(Error::Resource(format!(
            "{count} vectors in a space of dimension {d} exceed the scan cap {cap}"
        )));
    }
    Ok(VectorIter::new(field, d)
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect())
}

fn morphism_from_flat(source: &Module, target: &Module, v: &[u32]) -> Morphism {
    let f = source.field();
    let mut maps = Vec::new();
    let mut off = 0;
    for (a, b) in source.dims().iter().zip(target.dims()) {
        let mut m = Matrix::zeros(f, *a, *b);
        for i in 0..*a {
            for j in 0..*b {
                m.set(i, j, v[off + i * b + j]);
            }
        }
        off += a * b;
        maps.push(m);
    }
    Morphism::from_parts(source.clone(), target.clone(), maps)
}

/// Solves the intertwining system for all morphisms `m -> n`.
pub fn hom_space(m: &Module, n: &Module) -> HomSpace {
    let f = m.field();
    let alg = m.algebra();
    let q = alg.quiver();
    let nv = alg.vertex_count();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += m.dim_at(v) * n.dim_at(v);
    }
    let mut eq_offsets = Vec::new();
    let mut eqs = 0;
    for arrow in &q.arrows {
        eq_offsets.push(eqs);
        eqs += m.dim_at(arrow.source) * n.dim_at(arrow.target);
    }
    let mut sys = Matrix::zeros(f, unknowns, eqs);
    for (a, arrow) in q.arrows.iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (ms, ns, nt) = (m.dim_at(s), n.dim_at(s), n.dim_at(t));
        let na = n.arrow_map(a);
        let ma = m.arrow_map(a);
        for i in 0..ms {
            for k in 0..nt {
                let e = eq_offsets[a] + i * nt + k;
                // (f_s N_a)[i][k] = sum_j f_s[i][j] N_a[j][k]
                for j in 0..ns {
                    let c = na.get(j, k);
                    if c != 0 {
                        let u = offsets[s] + i * ns + j;
                        sys.set(u, e, f.add(sys.get(u, e), c));
                    }
                }
                // - (M_a f_t)[i][k] = - sum_l M_a[i][l] f_t[l][k]
                for l in 0..m.dim_at(t) {
                    let c = ma.get(i, l);
                    if c != 0 {
                        let u = offsets[t] + l * nt + k;
                        sys.set(u, e, f.sub(sys.get(u, e), c));
                    }
                }
            }
        }
    }
    let (echelon, pivots) = if eqs == 0 {
        (Matrix::identity(f, unknowns), (0..unknowns).collect())
    } else {
        let k = sys.left_kernel();
        let (r, p) = k.rref();
        (r.block(0, p.len(), 0, unknowns), p)
    };
    let basis = (0..echelon.rows())
        .map(|i| morphism_from_flat(m, n, &echelon.row(i)))
        .collect();
    HomSpace {
        source: m.clone(),
        target: n.clone(),
        echelon,
        pivots,
        basis,
    }
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_space(m, n).dim()
}

/// Morphism out of a direct sum given on each summand.
pub fn map_from_sum(sum: &DirectSum, target: &Module, parts: &[Morphism]) -> Morphism {
    let mut acc = Morphism::zero(&sum.module, target);
    for (p, g) in sum.projections.iter().zip(parts) {
        acc = acc.add(&p.then(g));
    }
    acc
}

/// Morphism into a direct sum given on each summand.
pub fn map_into_sum(source: &Module, sum: &DirectSum, parts: &[Morphism]) -> Morphism {
    let mut acc = Morphism::zero(source, &sum.module);
    for (i, g) in sum.inclusions.iter().zip(parts) {
        acc = acc.add(&g.then(i));
    }
    acc
}

/// A short exact sequence `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug)]
pub struct Ses {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub inject: Morphism,
    pub surject: Morphism,
}

impl Ses {
    /// `0 -> a -> a + c -> c -> 0`.
    pub fn split(a: &Module, c: &Module) -> Ses {
        let alg = a.algebra();
        let sum = direct_sum(alg, &[a, c]);
        Ses {
            left: a.clone(),
            middle: sum.module.clone(),
            right: c.clone(),
            inject: sum.inclusions[0].clone(),
            surject: sum.projections[1].clone(),
        }
    }

    /// Builds the sequence of a mono and its cokernel.
    pub fn from_mono(i: &Morphism) -> Ses {
        let (c, p) = i.cokernel();
        Ses {
            left: i.source().clone(),
            middle: i.target().clone(),
            right: c,
            inject: i.clone(),
            surject: p,
        }
    }

    /// Builds the sequence of an epi and its kernel.
    pub fn from_epi(p: &Morphism) -> Ses {
        let (k, i) = p.kernel();
        Ses {
            left: k,
            middle: p.source().clone(),
            right: p.target().clone(),
            inject: i,
            surject: p.clone(),
        }
    }

    pub fn is_exact(&self) -> bool {
        if !self.inject.is_mono() || !self.surject.is_epi() || !self.inject.then(&self.surject).is_zero() {
            return false;
        }
        let l = self.left.dims();
        let m = self.middle.dims();
        let r = self.right.dims();
        (0..m.len()).all(|v| m[v] == l[v] + r[v])
            && self.inject.intertwines()
            && self.surject.intertwines()
    }

    pub fn is_split(&self) -> bool {
        let h = hom_space(&self.right, &self.middle);
        // a section exists iff the composition map Hom(C,B) -> Hom(C,C) hits the identity
        let images: Vec<Vec<u32>> = h.basis().iter().map(|g| g.then(&self.surject).flatten()).collect();
        let id = Morphism::identity(&self.right).flatten();
        if id.is_empty() {
            return true;
        }
        let f = self.right.field();
        if images.is_empty() {
            return false;
        }
        let a = Matrix::from_rows(f, id.len(), &images);
        a.solve_left(&Matrix::row_vector(f, &id)).is_some()
    }
}

/// Projective cover data: `pi: P0 -> M` with kernel `K = Omega M`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub module: Module,
    /// Vertices of the indecomposable projective summands of `P0`.
    pub vertices: Vec<usize>,
    pub p0: Module,
    pub pi: Morphism,
    pub kernel: Module,
    pub iota: Morphism,
}

/// Radical: at each vertex, the sum of the images of the incoming arrows.
pub fn radical_spaces(m: &Module) -> Vec<Matrix> {
    let f = m.field();
    let alg = m.algebra();
    let q = alg.quiver();
    (0..alg.vertex_count())
        .map(|w| {
            let mut acc = Matrix::zeros(f, 0, m.dim_at(w));
            for a in q.arrows_into(w) {
                acc = subspace::sum(&acc, m.arrow_map(a));
            }
            acc
        })
        .collect()
}

/// Socle: at each vertex, the common kernel of the outgoing arrows.
pub fn socle_spaces(m: &Module) -> Vec<Matrix> {
    let f = m.field();
    let alg = m.algebra();
    let q = alg.quiver();
    (0..alg.vertex_count())
        .map(|v| {
            let mut acc = Matrix::identity(f, m.dim_at(v));
            for a in q.arrows_out_of(v) {
                acc = subspace::intersect(&acc, &m.arrow_map(a).left_kernel());
            }
            acc.row_space()
        })
        .collect()
}

pub fn radical(m: &Module) -> (Module, Morphism) {
    m.submodule(&radical_spaces(m)).expect("radical is a submodule")
}

pub fn socle(m: &Module) -> (Module, Morphism) {
    m.submodule(&socle_spaces(m)).expect("socle is a submodule")
}

pub fn top(m: &Module) -> (Module, Morphism) {
    m.quotient(&radical_spaces(m)).expect("radical is a submodule")
}

/// Generators of `m` lifting a basis of its top, as `(vertex, vector)`;
/// the vectors are unit vectors completing the radical.
pub fn top_generators(m: &Module) -> Vec<(usize, Vec<u32>)> {
    let mut gens = Vec::new();
    for (v, rad) in radical_spaces(m).iter().enumerate() {
        let (_, piv) = rad.rref();
        for j in 0..m.dim_at(v) {
            if !piv.contains(&j) {
                let mut e = vec![0; m.dim_at(v)];
                e[j] = 1;
                gens.push((v, e));
            }
        }
    }
    gens
}

/// Projective presentation built from arbitrary generators of `m`.
pub fn presentation_from_generators(m: &Module, gens: &[(usize, Vec<u32>)]) -> Result<Presentation> {
    let alg = m.algebra();
    let vertices: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let ps: Vec<Module> = vertices.iter().map(|&v| projective(alg, v)).collect();
    let refs: Vec<&Module> = ps.iter().collect();
    let p0 = direct_sum(alg, &refs).module;
    let images: Vec<Vec<u32>> = gens.iter().map(|g| g.1.clone()).collect();
    let pi = morphism_from_generators(&p0, &vertices, m, &images);
    if !pi.is_epi() {
        return Err(Error::Precondition("generators do not generate the module".into()));
    }
    let (kernel, iota) = pi.kernel();
    Ok(Presentation {
        module: m.clone(),
        vertices,
        p0,
        pi,
        kernel,
        iota,
    })
}

/// Minimal projective presentation (projective cover and its kernel).
pub fn presentation(m: &Module) -> Presentation {
    presentation_from_generators(m, &top_generators(m)).expect("top generators generate")
}

pub fn projective_cover(m: &Module) -> Morphism {
    presentation(m).pi
}

/// First syzygy `Omega M`.
pub fn syzygy(m: &Module) -> Module {
    presentation(m).kernel
}

/// Morphism from `m` to `I(v_1) + ... + I(v_r)` given by linear functionals
/// on `m` at the listed vertices (as coefficient vectors).
pub fn morphism_to_injectives(m: &Module, functionals: &[(usize, Vec<u32>)]) -> Morphism {
    let alg = m.algebra();
    let f = alg.field();
    let is: Vec<Module> = functionals.iter().map(|(v, _)| injective(alg, *v)).collect();
    let refs: Vec<&Module> = is.iter().collect();
    let target = direct_sum(alg, &refs).module;
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let mut cols: Vec<Vec<u32>> = Vec::new();
            for (v, phi) in functionals {
                let phi = Matrix::row_vector(f, phi).transpose();
                for &b in alg.paths_between(w, *v) {
                    let col = m.path_matrix(&alg.basis()[b]).mul(&phi);
                    cols.push((0..col.rows()).map(|i| col.get(i, 0)).collect());
                }
            }
            Matrix::from_rows(f, m.dim_at(w), &cols).transpose()
        })
        .collect();
    Morphism::from_parts(m.clone(), target, maps)
}

/// Injective envelope built from the socle: one copy of `I(v)` per socle
/// basis vector at `v`.
pub fn injective_envelope(m: &Module) -> Morphism {
    let mut functionals = Vec::new();
    for (v, soc) in socle_spaces(m).iter().enumerate() {
        let (_, piv) = soc.rref();
        for &p in &piv {
            let mut e = vec![0; m.dim_at(v)];
            e[p] = 1;
            functionals.push((v, e));
        }
    }
    morphism_to_injectives(m, &functionals)
}

/// Vertices of the indecomposable injective summands of the envelope.
pub fn socle_vertices(m: &Module) -> Vec<usize> {
    socle_spaces(m)
        .iter()
        .enumerate()
        .flat_map(|(v, s)| std::iter::repeat(v).take(s.rows()))
        .collect()
}

pub fn cosyzygy(m: &Module) -> Module {
    injective_envelope(m).cokernel().0
}

pub fn is_injective(m: &Module) -> bool {
    cosyzygy(m).is_zero()
}

pub fn is_projective(m: &Module) -> bool {
    syzygy(m).is_zero()
}

/// Length of the minimal injective coresolution; `cap` bounds the search.
pub fn injective_dimension(m: &Module, cap: usize) -> Result<usize> {
    let mut cur = m.clone();
    for n in 0..=cap {
        let next = cosyzygy(&cur);
        if next.is_zero() {
            return Ok(n);
        }
        cur = next;
    }
    Err(Error::Resource(format!("injective dimension exceeds {cap}")))
}

pub fn projective_dimension(m: &Module, cap: usize) -> Result<usize> {
    let mut cur = m.clone();
    for n in 0..=cap {
        let next = syzygy(&cur);
        if next.is_zero() {
            return Ok(n);
        }
        cur = next;
    }
    Err(Error::Resource(format!("projective dimension exceeds {cap}")))
}

/// `Ext¹(C, N)` as `Hom(Omega C, N)` modulo maps extending to `P0`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pres: Presentation,
    target: Module,
    hom_kn: HomSpace,
    boundary: Matrix,
    boundary_pivots: Vec<usize>,
    /// Positions in `hom_kn` coordinates whose unit vectors represent a basis
    /// of classes.
    free: Vec<usize>,
}

pub fn ext1(c: &Module, n: &Module) -> ExtSpace {
    ExtSpace::new(&presentation(c), n)
}

pub fn ext1_dim(c: &Module, n: &Module) -> usize {
    ext1(c, n).dim()
}

impl ExtSpace {
    pub fn new(pres: &Presentation, n: &Module) -> ExtSpace {
        let f = n.field();
        let hom_kn = hom_space(&pres.kernel, n);
        let hom_pn = hom_space(&pres.p0, n);
        let rows: Vec<Vec<u32>> = hom_pn
            .basis()
            .iter()
            .map(|h| hom_kn.coordinates(&pres.iota.then(h)))
            .collect();
        let b = Matrix::from_rows(f, hom_kn.dim(), &rows);
        let (r, piv) = b.rref();
        let boundary = r.block(0, piv.len(), 0, hom_kn.dim());
        let free = (0..hom_kn.dim()).filter(|j| !piv.contains(j)).collect();
        ExtSpace {
            pres: pres.clone(),
            target: n.clone(),
            hom_kn,
            boundary,
            boundary_pivots: piv,
            free,
        }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn source(&self) -> &Module {
        &self.pres.module
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    /// Cocycle `Omega C -> N` representing the class with these coordinates.
    pub fn cocycle(&self, coeffs: &[u32]) -> Morphism {
        let mut v = vec![0; self.hom_kn.dim()];
        for (c, &j) in coeffs.iter().zip(&self.free) {
            v[j] = *c;
        }
        self.hom_kn.element(&v)
    }

    /// Class coordinates of a cocycle.
    pub fn class_of_cocycle(&self, phi: &Morphism) -> Vec<u32> {
        let v = self.hom_kn.coordinates(phi);
        subspace::reduce_mod(&self.boundary, &self.boundary_pivots, &v)
    }

    /// Extension `0 -> N -> E -> C -> 0` with the given class, as the
    /// pushout of `Omega C -> P0` along the cocycle.
    pub fn realize(&self, coeffs: &[u32]) -> Ses {
        let phi = self.cocycle(coeffs);
        let (e, to_e_from_p0, inject) = pushout(&self.pres.iota, &phi);
        let alg = self.target.algebra();
        let sum = direct_sum(alg, &[&self.pres.p0, &self.target]);
        let q = map_from_sum(&sum, &e, &[to_e_from_p0, inject.clone()]);
        let r = map_from_sum(
            &sum,
            &self.pres.module,
            &[self.pres.pi.clone(), Morphism::zero(&self.target, &self.pres.module)],
        );
        let surject = factor_through_epi(&q, &r).expect("pushout maps onto the cokernel");
        Ses {
            left: self.target.clone(),
            middle: e,
            right: self.pres.module.clone(),
            inject,
            surject,
        }
    }

    /// Class of an extension of `C` by `N` (with `ses.left = N`, `ses.right = C`).
    pub fn classify(&self, ses: &Ses) -> Vec<u32> {
        let f = self.target.field();
        let gens = top_vectors(&self.pres);
        let mut images = Vec::new();
        for (v, x) in &gens {
            let lift = ses
                .surject
                .vertex_map(*v)
                .solve_left(&Matrix::row_vector(f, x))
                .expect("surjection");
            images.push(lift.row(0));
        }
        let lam = morphism_from_generators(&self.pres.p0, &self.pres.vertices, &ses.middle, &images);
        let restricted = self.pres.iota.then(&lam);
        let phi = factor_through_mono(&ses.inject, &restricted).expect("lands in the kernel");
        self.class_of_cocycle(&phi)
    }

    /// All class coordinate vectors, if there are at most `cap`.
    pub fn all_classes(&self, cap: u64) -> Result<Vec<Vec<u32>>> {
        let f = self.target.field();
        let count = f.count(self.dim());
        if count > cap {
            return Err(Error::Resource(format!(
                "Ext space of dimension {} too large to scan",
                self.dim()
            )));
        }
        Ok(VectorIter::new(f, self.dim()).collect())
    }

    /// Nonzero classes up to scalar multiples (scalar multiples have
    /// isomorphic middle terms).
    pub fn nonzero_classes_up_to_scalar(&self, cap: u64) -> Result<Vec<Vec<u32>>> {
        projective_points(self.target.field(), self.dim(), cap)
    }
}

/// Images of the generators of `P0` in the presented module.
fn top_vectors(pres: &Presentation) -> Vec<(usize, Vec<u32>)> {
    let alg = pres.module.algebra();
    let mut offset = vec![0usize; alg.vertex_count()];
    let mut out = Vec::new();
    for &v in &pres.vertices {
        // the idempotent e_v is the first basis path of P(v) at v
        let row = pres.pi.vertex_map(v).row(offset[v]);
        out.push((v, row));
        for (w, o) in offset.iter_mut().enumerate() {
            *o += alg.paths_between(v, w).len();
        }
    }
    out
}

/// Pushout of `f: A -> B` and `g: A -> C`: returns `(P, B -> P, C -> P)`.
pub fn pushout(f: &Morphism, g: &Morphism) -> (Module, Morphism, Morphism) {
    let alg = f.source().algebra();
    let sum = direct_sum(alg, &[f.target(), g.target()]);
    let d = map_into_sum(f.source(), &sum, &[f.clone(), g.scale(alg.field().neg(1))]);
    let (p, q) = d.cokernel();
    let b = sum.inclusions[0].then(&q);
    let c = sum.inclusions[1].then(&q);
    (p, b, c)
}

/// Pullback of `f: B -> D` and `g: C -> D`: returns `(P, P -> B, P -> C)`.
pub fn pullback(f: &Morphism, g: &Morphism) -> (Module, Morphism, Morphism) {
    let alg = f.source().algebra();
    let sum = direct_sum(alg, &[f.source(), g.source()]);
    let d = map_from_sum(&sum, f.target(), &[f.clone(), g.scale(alg.field().neg(1))]);
    let (p, i) = d.kernel();
    let b = i.then(&sum.projections[0]);
    let c = i.then(&sum.projections[1]);
    (p, b, c)
}

/// A minimal approximation together with the generator index of each
/// indecomposable summand of its domain (right) or codomain (left).
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: Morphism,
    pub summands: Vec<usize>,
}

/// Minimal right `add(gens)`-approximation `Y -> M`. The generators must be
/// indecomposable and pairwise non-isomorphic.
pub fn minimal_right_approx(m: &Module, gens: &[Module]) -> Approximation {
    let alg = m.algebra();
    let f = alg.field();
    // copies: (generator index, map G -> M)
    let homs: Vec<HomSpace> = gens.iter().map(|g| hom_space(g, m)).collect();
    let copies: Vec<(usize, Morphism)> = homs
        .iter()
        .enumerate()
        .flat_map(|(i, h)| h.basis().iter().map(move |b| (i, b.clone())))
        .collect();
    // contributions[c][i]: composites G_i -> G_c -> M for a basis of Hom(G_i, G_c)
    let between: Vec<Vec<HomSpace>> = gens
        .iter()
        .map(|gi| gens.iter().map(|gc| hom_space(gi, gc)).collect())
        .collect();
    let contributions: Vec<Vec<Vec<Vec<u32>>>> = copies
        .iter()
        .map(|(c, h)| {
            (0..gens.len())
                .map(|i| {
                    between[i][*c]
                        .basis()
                        .iter()
                        .map(|u| homs[i].coordinates(&u.then(h)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let keep = greedy_irredundant(f, &homs.iter().map(|h| h.dim()).collect::<Vec<_>>(), &contributions);
    let parts: Vec<&Module> = keep.iter().map(|&c| &gens[copies[c].0]).collect();
    let sum = direct_sum(alg, &parts);
    let maps: Vec<Morphism> = keep.iter().map(|&c| copies[c].1.clone()).collect();
    Approximation {
        map: map_from_sum(&sum, m, &maps),
        summands: keep.iter().map(|&c| copies[c].0).collect(),
    }
}

/// Minimal left `add(gens)`-approximation `M -> Y`, dual to
/// [`minimal_right_approx`].
pub fn minimal_left_approx(m: &Module, gens: &[Module]) -> Approximation {
    let alg = m.algebra();
    let f = alg.field();
    let homs: Vec<HomSpace> = gens.iter().map(|g| hom_space(m, g)).collect();
    let copies: Vec<(usize, Morphism)> = homs
        .iter()
        .enumerate()
        .flat_map(|(i, h)| h.basis().iter().map(move |b| (i, b.clone())))
        .collect();
    let between: Vec<Vec<HomSpace>> = gens
        .iter()
        .map(|gi| gens.iter().map(|gc| hom_space(gc, gi)).collect())
        .collect();
    let contributions: Vec<Vec<Vec<Vec<u32>>>> = copies
        .iter()
        .map(|(c, h)| {
            (0..gens.len())
                .map(|i| {
                    between[i][*c]
                        .basis()
                        .iter()
                        .map(|u| homs[i].coordinates(&h.then(u)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let keep = greedy_irredundant(f, &homs.iter().map(|h| h.dim()).collect::<Vec<_>>(), &contributions);
    let parts: Vec<&Module> = keep.iter().map(|&c| &gens[copies[c].0]).collect();
    let sum = direct_sum(alg, &parts);
    let maps: Vec<Morphism> = keep.iter().map(|&c| copies[c].1.clone()).collect();
    Approximation {
        map: map_into_sum(m, &sum, &maps),
        summands: keep.iter().map(|&c| copies[c].0).collect(),
    }
}

/// Drops copies one at a time (last first) while the kept copies still
/// span every `Hom` space; `contributions[c][i]` are the vectors copy `c`
/// contributes to space `i`.
fn greedy_irredundant(
    f: crate::field::PrimeField,
    dims: &[usize],
    contributions: &[Vec<Vec<Vec<u32>>>],
) -> Vec<usize> {
    let mut keep: Vec<bool> = vec![true; contributions.len()];
    let spans = |keep: &[bool]| {
        dims.iter().enumerate().all(|(i, &d)| {
            let rows: Vec<Vec<u32>> = contributions
                .iter()
                .enumerate()
                .filter(|(c, _)| keep[*c])
                .flat_map(|(_, v)| v[i].iter().cloned())
                .collect();
            Matrix::from_rows(f, d, &rows).rank() == d
        })
    };
    for c in (0..contributions.len()).rev() {
        keep[c] = false;
        if !spans(&keep) {
            keep[c] = true;
        }
    }
    (0..contributions.len()).filter(|&c| keep[c]).collect()
}

/// `true` if every map from a generator to `M` factors through `f`.
pub fn is_right_approximation(f: &Morphism, gens: &[Module]) -> bool {
    let fld = f.source().field();
    gens.iter().all(|g| {
        let target = hom_space(g, f.target());
        let rows: Vec<Vec<u32>> = hom_space(g, f.source())
            .basis()
            .iter()
            .map(|u| target.coordinates(&u.then(f)))
            .collect();
        Matrix::from_rows(fld, target.dim(), &rows).rank() == target.dim()
    })
}

/// `true` if every map from `M` to a generator factors through `f`.
pub fn is_left_approximation(f: &Morphism, gens: &[Module]) -> bool {
    let fld = f.source().field();
    gens.iter().all(|g| {
        let target = hom_space(f.source(), g);
        let rows: Vec<Vec<u32>> = hom_space(f.target(), g)
            .basis()
            .iter()
            .map(|u| target.coordinates(&f.then(u)))
            .collect();
        Matrix::from_rows(fld, target.dim(), &rows).rank() == target.dim()
    })
}

/// Right minimality by definition: every `h` with `h then f = f` is
/// invertible. Decided on the affine space of solutions, exhaustively up to
/// `cap` elements.
pub fn is_right_minimal(f: &Morphism, cap: u64) -> Result<bool> {
    let y = f.source();
    let end = hom_space(y, y);
    let fld = y.field();
    let target = hom_space(y, f.target());
    // h = id + k with k then f = 0
    let rows: Vec<Vec<u32>> = end.basis().iter().map(|k| target.coordinates(&k.then(f))).collect();
    let kernel = Matrix::from_rows(fld, target.dim(), &rows).left_kernel();
    if fld.count(kernel.rows()) > cap {
        return Err(Error::Resource("too many endomorphisms to scan".into()));
    }
    let id = Morphism::identity(y);
    for c in VectorIter::new(fld, kernel.rows()) {
        let coeffs = Matrix::row_vector(fld, &c).mul(&kernel);
        let k = end.element(&coeffs.row(0));
        if !id.add(&k).is_iso() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Left minimality: every `h` with `f then h = f` is invertible.
pub fn is_left_minimal(f: &Morphism, cap: u64) -> Result<bool> {
    let y = f.target();
    let end = hom_space(y, y);
    let fld = y.field();
    let target = hom_space(f.source(), y);
    let rows: Vec<Vec<u32>> = end.basis().iter().map(|k| target.coordinates(&f.then(k))).collect();
    let kernel = Matrix::from_rows(fld, target.dim(), &rows).left_kernel();
    if fld.count(kernel.rows()) > cap {
        return Err(Error::Resource("too many endomorphisms to scan".into()));
    }
    let id = Morphism::identity(y);
    for c in VectorIter::new(fld, kernel.rows()) {
        let coeffs = Matrix::row_vector(fld, &c).mul(&kernel);
        let k = end.element(&coeffs.row(0));
        if !id.add(&k).is_iso() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Auslander–Reiten translate `tau M = ker(nu P1 -> nu P0)` from the minimal
/// projective presentation.
pub fn ar_translate(m: &Module) -> Result<Module> {
    let pres = presentation(m);
    if pres.kernel.is_zero() {
        return Err(Error::Precondition("AR translate of a projective module".into()));
    }
    let alg = m.algebra();
    let p1 = presentation(&pres.kernel);
    let d1 = p1.pi.then(&pres.iota);
    Ok(nakayama_kernel(alg, &p1.vertices, &pres.vertices, &d1))
}

/// Inverse translate `tau^- M = D tau_{A^op} D M`.
pub fn ar_translate_inverse(m: &Module) -> Result<Module> {
    let alg = m.algebra();
    let op = alg.opposite_shared();
    let dual = m.dual(&op);
    let t = ar_translate(&dual).map_err(|_| Error::Precondition("inverse AR translate of an injective module".into()))?;
    Ok(t.dual(alg))
}

/// Kernel of `nu(d)` for `d: P(v_1)+... -> P(w_1)+...`.
fn nakayama_kernel(alg: &AlgebraRef, src: &[usize], tgt: &[usize], d: &Morphism) -> Module {
    let f = alg.field();
    let n = alg.vertex_count();
    let offsets = |vs: &[usize], at: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let mut o = 0;
        for &v in vs {
            out.push(o);
            o += alg.paths_between(v, at).len();
        }
        out
    };
    // block offsets of each summand of a sum of injectives at vertex `at`
    let injective_offsets = |vs: &[usize], at: usize| -> Vec<usize> {
        let mut out = Vec::new();
        let mut o = 0;
        for &v in vs {
            out.push(o);
            o += alg.paths_between(at, v).len();
        }
        out
    };
    // x[i][j]: element of e_{w_j} A e_{v_i} giving the component P(v_i) -> P(w_j)
    let mut comps: Vec<Vec<Vec<u32>>> = Vec::new();
    for (i, &v) in src.iter().enumerate() {
        let row_off = offsets(src, v)[i];
        let col_offs = offsets(tgt, v);
        let row = d.vertex_map(v).row(row_off);
        comps.push(
            tgt.iter()
                .enumerate()
                .map(|(j, &w)| {
                    let len = alg.paths_between(w, v).len();
                    row[col_offs[j]..col_offs[j] + len].to_vec()
                })
                .collect(),
        );
    }
    let is_src: Vec<Module> = src.iter().map(|&v| injective(alg, v)).collect();
    let is_tgt: Vec<Module> = tgt.iter().map(|&w| injective(alg, w)).collect();
    let source = direct_sum(alg, &is_src.iter().collect::<Vec<_>>()).module;
    let target = direct_sum(alg, &is_tgt.iter().collect::<Vec<_>>()).module;
    let mut maps = Vec::with_capacity(n);
    for u in 0..n {
        let mut m = Matrix::zeros(f, source.dim_at(u), target.dim_at(u));
        let ro = injective_offsets(src, u);
        let co = injective_offsets(tgt, u);
        for (i, &v) in src.iter().enumerate() {
            for (j, &w) in tgt.iter().enumerate() {
                let x = &comps[i][j];
                let cs = alg.paths_between(w, v);
                let rows_b = alg.paths_between(u, v);
                for (bp_idx, &bp) in alg.paths_between(u, w).iter().enumerate() {
                    for (k, &c) in cs.iter().enumerate() {
                        if x[k] == 0 {
                            continue;
                        }
                        let prod = alg.basis()[bp].concat(&alg.basis()[c]).expect("composable");
                        for (b, coeff) in alg.normal_form(&prod) {
                            let bi = rows_b.iter().position(|&r| r == b).expect("parallel");
                            let (r, cidx) = (ro[i] + bi, co[j] + bp_idx);
                            m.set(r, cidx, f.add(m.get(r, cidx), f.mul(x[k], coeff)));
                        }
                    }
                }
            }
        }
        maps.push(m);
    }
    let nu = Morphism::from_parts(source, target, maps);
    debug_assert!(nu.intertwines());
    nu.kernel().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::module::{simple, standard_modules};
    use std::sync::Arc;

    fn a2() -> AlgebraRef {
        Arc::new(parse_algebra("field 2\nvertices 1 2\narrow a: 1 -> 2\n").unwrap())
    }

    fn a3() -> AlgebraRef {
        Arc::new(parse_algebra("field 2\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n").unwrap())
    }

    #[test]
    fn a2_hom_dimensions() {
        let alg = a2();
        let st = standard_modules(&alg);
        assert_eq!(hom_dim(&st.projectives[0], &st.simples[0]), 1);
        assert_eq!(hom_dim(&st.projectives[0], &st.simples[1]), 0);
        assert_eq!(hom_dim(&st.simples[1], &st.projectives[0]), 1);
        assert_eq!(hom_dim(&st.simples[0], &st.projectives[0]), 0);
    }

    #[test]
    fn a2_ext_dimensions() {
        let alg = a2();
        let st = standard_modules(&alg);
        assert_eq!(ext1_dim(&st.simples[0], &st.simples[1]), 1);
        assert_eq!(ext1_dim(&st.simples[0], &st.simples[0]), 0);
        assert_eq!(ext1_dim(&st.simples[1], &st.simples[0]), 0);
        for p in &st.projectives {
            for n in st.simples.iter().chain(&st.injectives) {
                assert_eq!(ext1_dim(p, n), 0);
            }
        }
    }

    #[test]
    fn realize_nonsplit_extension() {
        let alg = a2();
        let st = standard_modules(&alg);
        let e = ext1(&st.simples[0], &st.simples[1]);
        let ses = e.realize(&[1]);
        assert!(ses.is_exact());
        assert!(!ses.is_split());
        assert_eq!(ses.middle.dims(), &[1, 1]);
        assert_eq!(e.classify(&ses), vec![1]);
        let split = e.realize(&[0]);
        assert!(split.is_split());
        assert_eq!(e.classify(&split), vec![0]);
    }

    #[test]
    fn envelopes_and_covers() {
        let alg = a2();
        let st = standard_modules(&alg);
        let env = injective_envelope(&st.simples[1]);
        assert_eq!(env.target().dims(), &[1, 1]);
        assert!(env.is_mono());
        assert_eq!(injective_dimension(&st.simples[1], 4).unwrap(), 1);
        assert_eq!(injective_dimension(&st.projectives[0], 4).unwrap(), 0);
        let cov = projective_cover(&st.simples[0]);
        assert_eq!(cov.source().dims(), &[1, 1]);
        assert!(cov.is_epi());
    }

    #[test]
    fn approximations() {
        let alg = a2();
        let st = standard_modules(&alg);
        let gens = vec![st.simples[1].clone(), st.projectives[0].clone()];
        let r = minimal_right_approx(&st.simples[0], &gens);
        assert_eq!(r.summands, vec![1]);
        assert!(r.map.is_epi());
        assert!(is_right_minimal(&r.map, 1 << 12).unwrap());
        let l = minimal_left_approx(&st.simples[1], &[st.projectives[0].clone()]);
        assert_eq!(l.summands, vec![0]);
        assert!(l.map.is_mono());
        let none = minimal_right_approx(&st.simples[0], &[]);
        assert!(none.map.source().is_zero());
    }

    #[test]
    fn pushout_along_zero() {
        let alg = a2();
        let st = standard_modules(&alg);
        let e = ext1(&st.simples[0], &st.simples[1]).realize(&[1]);
        let zero = crate::module::Module::zero(&alg);
        let to_zero = Morphism::zero(&st.simples[1], &zero);
        let (p, _, _) = pushout(&e.inject, &to_zero);
        assert_eq!(p.dims(), &[1, 0]);
    }

    #[test]
    fn translates() {
        let alg = a2();
        let st = standard_modules(&alg);
        assert_eq!(ar_translate(&st.simples[0]).unwrap(), st.simples[1]);
        assert!(ar_translate(&st.projectives[0]).is_err());
        assert_eq!(ar_translate_inverse(&st.simples[1]).unwrap(), st.simples[0]);
        let alg3 = a3();
        let t = ar_translate(&simple(&alg3, 0)).unwrap();
        assert_eq!(t.dims(), &[0, 1, 0]);
    }
}
