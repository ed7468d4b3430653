//! Krull–Schmidt decomposition, bricks and isomorphism tests, all driven by
//! the endomorphism algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::VectorIter;
use crate::homology::{hom_space, HomSpace};
use crate::matrix::Matrix;
use crate::module::{Module, Morphism};

/// Exhaustive scans of `End(M)` are attempted up to this many elements.
pub const EXHAUSTIVE_SCAN_CAP: u64 = 1 << 16;

const RANDOM_TRIES: usize = 64;
const SEED: u64 = 0x5eed_cafe;

/// Powers of an endomorphism stabilise after `total_dim` steps.
fn stable_power(f: &Morphism) -> Morphism {
    let n = f.source().total_dim().max(1);
    let maps = f.vertex_maps().iter().map(|m| m.pow(n)).collect();
    Morphism::from_parts(f.source().clone(), f.target().clone(), maps)
}

/// Result of searching `End(M)` for a witness of decomposability.
enum Locality {
    Local,
    /// A non-invertible, non-nilpotent endomorphism.
    Splitting(Morphism),
}

fn shifted(end: &HomSpace, phi: &Morphism, lambda: u32) -> Morphism {
    let id = Morphism::identity(end.source());
    phi.sub(&id.scale(lambda))
}

/// Finds an endomorphism that is neither invertible nor nilpotent, or
/// certifies that `End(M)` is local.
fn locality(end: &HomSpace) -> Result<Locality> {
    let m = end.source();
    let f = m.field();
    let basis = end.basis();
    if basis.len() <= 1 {
        return Ok(Locality::Local);
    }
    let candidate = |phi: &Morphism| -> Option<Morphism> {
        for lambda in f.elements() {
            let psi = shifted(end, phi, lambda);
            if !psi.is_iso() && !psi.is_nilpotent() {
                return Some(psi);
            }
        }
        None
    };
    for b in basis {
        if let Some(s) = candidate(b) {
            return Ok(Locality::Splitting(s));
        }
    }
    // certificate: every basis element is a scalar plus a nilpotent, and
    // the nilpotent parts span a nilpotent ideal
    let mut parts = Vec::new();
    let mut certified = true;
    for b in basis {
        match f.elements().map(|l| shifted(end, b, l)).find(|x| x.is_nilpotent()) {
            Some(n) => parts.push(n),
            None => {
                certified = false;
                break;
            }
        }
    }
    if certified && spans_nilpotent_ideal(end, &parts) {
        return Ok(Locality::Local);
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = candidate(&basis[i].add(&basis[j])) {
                return Ok(Locality::Splitting(s));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIES {
        let c: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..f.characteristic())).collect();
        if let Some(s) = candidate(&end.element(&c)) {
            return Ok(Locality::Splitting(s));
        }
    }
    if f.count(basis.len()) > EXHAUSTIVE_SCAN_CAP {
        return Err(Error::Undetermined(format!(
            "endomorphism algebra of dimension {} too large to certify locality",
            basis.len()
        )));
    }
    for c in VectorIter::new(f, basis.len()) {
        let x = end.element(&c);
        if !x.is_iso() && !x.is_nilpotent() {
            return Ok(Locality::Splitting(x));
        }
    }
    Ok(Locality::Local)
}

/// `true` if the span of `parts` is a two-sided ideal of `End` consisting of
/// a nilpotent subspace (some power of the span is zero).
fn spans_nilpotent_ideal(end: &HomSpace, parts: &[Morphism]) -> bool {
    let f = end.source().field();
    let d = end.dim();
    let coords = |xs: &[Morphism]| -> Matrix {
        let rows: Vec<Vec<u32>> = xs.iter().map(|x| end.coordinates(x)).collect();
        Matrix::from_rows(f, d, &rows)
    };
    let span = coords(parts).row_space();
    let span_elems: Vec<Morphism> = (0..span.rows()).map(|i| end.element(&span.row(i))).collect();
    // ideal
    let mut products = Vec::new();
    for x in &span_elems {
        for b in end.basis() {
            products.push(x.then(b));
            products.push(b.then(x));
        }
    }
    if !crate::matrix::subspace::contains(&span, &coords(&products)) {
        return false;
    }
    // nilpotent: J^k = 0 for some k <= dim
    let mut power = span_elems.clone();
    for _ in 0..=d {
        if power.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut next = Vec::new();
        for x in &power {
            for y in &span_elems {
                next.push(x.then(y));
            }
        }
        let sp = coords(&next).row_space();
        power = (0..sp.rows()).map(|i| end.element(&sp.row(i))).collect();
    }
    false
}

/// Jacobson radical of a local endomorphism algebra `end`, as row vectors
/// of coordinates: the nilpotent elements.
pub fn local_radical(end: &HomSpace) -> Result<Matrix> {
    let f = end.source().field();
    let d = end.dim();
    let mut parts = Vec::new();
    for b in end.basis() {
        match f.elements().map(|l| shifted(end, b, l)).find(|x| x.is_nilpotent()) {
            Some(n) => parts.push(n),
            None => break,
        }
    }
    if parts.len() == d && spans_nilpotent_ideal(end, &parts) {
        let rows: Vec<Vec<u32>> = parts.iter().map(|x| end.coordinates(x)).collect();
        return Ok(Matrix::from_rows(f, d, &rows).row_space());
    }
    if f.count(d) > EXHAUSTIVE_SCAN_CAP {
        return Err(Error::Undetermined("endomorphism algebra too large to scan".into()));
    }
    let mut rows = Vec::new();
    for c in VectorIter::new(f, d) {
        let x = end.element(&c);
        if x.is_nilpotent() {
            rows.push(c);
        } else if !x.is_iso() {
            return Err(Error::Precondition("endomorphism algebra is not local".into()));
        }
    }
    Ok(Matrix::from_rows(f, d, &rows).row_space())
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(matches!(locality(&hom_space(m, m))?, Locality::Local))
}

/// `true` if every nonzero endomorphism is invertible.
pub fn is_brick(m: &Module) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::Precondition("the zero module is not a brick".into()));
    }
    let end = hom_space(m, m);
    if end.dim() == 1 {
        return Ok(true);
    }
    let f = m.field();
    for b in end.basis() {
        for lambda in f.elements() {
            let x = shifted(&end, b, lambda);
            if !x.is_zero() && !x.is_iso() {
                return Ok(false);
            }
        }
    }
    if f.count(end.dim()) > EXHAUSTIVE_SCAN_CAP {
        return Err(Error::Undetermined("endomorphism algebra too large to scan".into()));
    }
    for c in VectorIter::new(f, end.dim()) {
        let x = end.element(&c);
        if !x.is_zero() && !x.is_iso() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An indecomposable summand with its structure maps.
#[derive(Clone, Debug)]
pub struct Piece {
    pub module: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

/// `M` as a direct sum of indecomposable pieces; the inclusions and
/// projections satisfy `sum projection_i then inclusion_i = id` and
/// `inclusion_i then projection_j = delta_ij`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub module: Module,
    pub pieces: Vec<Piece>,
}

impl Decomposition {
    /// Pieces grouped by isomorphism class, in order of first appearance:
    /// `(representative, indices of pieces)`.
    pub fn groups(&self) -> Result<Vec<(Module, Vec<usize>)>> {
        let mut groups: Vec<(Module, Vec<usize>)> = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            let mut placed = false;
            for g in groups.iter_mut() {
                if isomorphic_indecomposables(&g.0, &p.module) {
                    g.1.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                groups.push((p.module.clone(), vec![i]));
            }
        }
        Ok(groups)
    }
}

fn split_recursive(inclusion: Morphism, out: &mut Vec<Morphism>) -> Result<()> {
    let m = inclusion.source().clone();
    if m.is_zero() {
        return Ok(());
    }
    let end = hom_space(&m, &m);
    match locality(&end)? {
        Locality::Local => {
            out.push(inclusion);
            Ok(())
        }
        Locality::Splitting(psi) => {
            let p = stable_power(&psi);
            let (_, k) = p.kernel();
            let (_, _, i) = p.image();
            split_recursive(k.then(&inclusion), out)?;
            split_recursive(i.then(&inclusion), out)
        }
    }
}

pub fn decompose_full(m: &Module) -> Result<Decomposition> {
    let mut incs = Vec::new();
    split_recursive(Morphism::identity(m), &mut incs)?;
    let f = m.field();
    let n = m.dims().len();
    // invert the stacked inclusions to get projections
    let mut projections: Vec<Vec<Matrix>> = vec![Vec::new(); incs.len()];
    for v in 0..n {
        let blocks: Vec<&Matrix> = incs.iter().map(|i| i.vertex_map(v)).collect();
        let stacked = Matrix::vstack(f, m.dim_at(v), &blocks);
        let inv = stacked.inverse().ok_or_else(|| {
            Error::Invariant("decomposition pieces do not form a direct sum".into())
        })?;
        let mut off = 0;
        for (k, i) in incs.iter().enumerate() {
            let d = i.source().dim_at(v);
            projections[k].push(inv.block(0, m.dim_at(v), off, d));
            off += d;
        }
    }
    let pieces = incs
        .into_iter()
        .zip(projections)
        .map(|(inc, proj)| Piece {
            module: inc.source().clone(),
            projection: Morphism::from_parts(m.clone(), inc.source().clone(), proj),
            inclusion: inc,
        })
        .collect();
    Ok(Decomposition {
        module: m.clone(),
        pieces,
    })
}

/// Indecomposable summands with multiplicities.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    let d = decompose_full(m)?;
    Ok(d.groups()?
        .into_iter()
        .map(|(g, idx)| (g, idx.len()))
        .collect())
}

/// Isomorphism test for indecomposable `a`: `a` and `b` are isomorphic iff
/// they have the same dimension vector and some composite of basis maps
/// `a -> b -> a` is not nilpotent (the radical of a local ring is its set of
/// nilpotents, and is a subspace).
pub fn find_isomorphism(a: &Module, b: &Module) -> Option<Morphism> {
    if a.dims() != b.dims() {
        return None;
    }
    if a.is_zero() {
        return Some(Morphism::zero(a, b));
    }
    let ab = hom_space(a, b);
    if ab.dim() == 0 {
        return None;
    }
    let ba = hom_space(b, a);
    for f in ab.basis() {
        if f.is_iso() {
            return Some(f.clone());
        }
        for g in ba.basis() {
            if !f.then(g).is_nilpotent() {
                return Some(f.clone());
            }
        }
    }
    None
}

pub fn isomorphic_indecomposables(a: &Module, b: &Module) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Isomorphism of arbitrary modules, comparing decompositions.
pub fn isomorphic(a: &Module, b: &Module) -> Result<bool> {
    if a.dims() != b.dims() {
        return Ok(false);
    }
    let da = decompose(a)?;
    let db = decompose(b)?;
    if da.len() != db.len() {
        return Ok(false);
    }
    let mut used = vec![false; db.len()];
    for (x, k) in &da {
        let hit = db
            .iter()
            .enumerate()
            .position(|(j, (y, l))| !used[j] && l == k && isomorphic_indecomposables(x, y));
        match hit {
            Some(j) => used[j] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::module::{direct_sum, standard_modules, AlgebraRef};
    use std::sync::Arc;

    fn a2() -> AlgebraRef {
        Arc::new(parse_algebra("field 2\nvertices 1 2\narrow a: 1 -> 2\n").unwrap())
    }

    #[test]
    fn decompose_mixed_sum() {
        let alg = a2();
        let f = alg.field();
        // dims (2,1), arrow [1;1]: isomorphic to P(1) + S(1) in a twisted basis
        let m = Module::new(&alg, vec![2, 1], vec![Matrix::from_rows(f, 1, &[vec![1], vec![1]])]).unwrap();
        let d = decompose(&m).unwrap();
        let st = standard_modules(&alg);
        assert_eq!(d.len(), 2);
        let mut dims: Vec<Vec<usize>> = d.iter().map(|(x, _)| x.dims().to_vec()).collect();
        dims.sort();
        assert_eq!(dims, vec![vec![1, 0], vec![1, 1]]);
        assert!(d.iter().any(|(x, _)| isomorphic_indecomposables(x, &st.projectives[0])));
        let full = decompose_full(&m).unwrap();
        let mut sum = Morphism::zero(&m, &m);
        for p in &full.pieces {
            sum = sum.add(&p.projection.then(&p.inclusion));
            assert!(p.inclusion.then(&p.projection).is_iso());
        }
        assert_eq!(sum, Morphism::identity(&m));
    }

    #[test]
    fn bricks() {
        let alg = a2();
        let st = standard_modules(&alg);
        assert!(is_brick(&st.projectives[0]).unwrap());
        assert!(is_brick(&st.simples[1]).unwrap());
        let double = direct_sum(&alg, &[&st.simples[0], &st.simples[0]]).module;
        assert!(!is_brick(&double).unwrap());
        assert_eq!(decompose(&double).unwrap().len(), 1);
        assert_eq!(decompose(&double).unwrap()[0].1, 2);
        assert!(is_brick(&Module::zero(&alg)).is_err());
        assert!(decompose(&Module::zero(&alg)).unwrap().is_empty());
    }

    #[test]
    fn local_non_brick() {
        let alg = Arc::new(parse_algebra("field 3\nvertices 1\narrow x: 1 -> 1\nrelation x*x*x\n").unwrap());
        let p = crate::module::projective(&alg, 0);
        assert_eq!(p.total_dim(), 3);
        assert!(is_indecomposable(&p).unwrap());
        assert!(!is_brick(&p).unwrap());
    }
}
