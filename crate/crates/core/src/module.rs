//! Finite-dimensional right modules given as quiver representations.
//!
//! A path `a1*...*ak` acts on a module by `M_ak ∘ ... ∘ M_a1`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{complement_indices, Matrix};

struct ModuleData<F: Field> {
    alg: Arc<Algebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

/// A representation of the bound quiver. Cheap to clone.
#[derive(Clone)]
pub struct Module<F: Field> {
    inner: Arc<ModuleData<F>>,
}

impl<F: Field> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims())
    }
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.inner.alg, &o.inner.alg) || *self.inner.alg == *o.inner.alg)
            && self.inner.dims == o.inner.dims
            && self.inner.maps == o.inner.maps
    }
}

impl<F: Field> Module<F> {
    /// Checks shapes and relations.
    pub fn new(alg: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::Shape("wrong number of vertices or arrows".into()));
        }
        for (a, m) in q.arrows.iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let m = Self::new_unchecked(alg, dims, maps);
        for r in m.algebra().relations() {
            let (s, t) = (r.terms[0].1.source, r.terms[0].1.target);
            let mut acc = Matrix::zeros(m.dims()[t], m.dims()[s]);
            for (c, p) in &r.terms {
                acc.add_scaled(&m.path_matrix(p), *c);
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(r.display(m.algebra().quiver())));
            }
        }
        Ok(m)
    }

    pub fn new_unchecked(alg: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Module { inner: Arc::new(ModuleData { alg, dims, maps }) }
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        let nv = alg.num_vertices();
        let maps = (0..alg.num_arrows()).map(|_| Matrix::zeros(0, 0)).collect();
        Self::new_unchecked(alg.clone(), vec![0; nv], maps)
    }

    pub fn simple(alg: &Arc<Algebra<F>>, v: usize) -> Self {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Self::new_unchecked(alg.clone(), dims, maps)
    }

    /// The indecomposable projective `e_v A`.
    pub fn projective(alg: &Arc<Algebra<F>>, v: usize) -> Self {
        let d = &alg.projective_data()[v];
        Self::new_unchecked(alg.clone(), d.dims.clone(), d.arrow_maps.clone())
    }

    /// The indecomposable injective `D(A e_v)`.
    pub fn injective(alg: &Arc<Algebra<F>>, v: usize) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|j| alg.block(j, v).len()).collect();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let ab = alg.arrow_index_in_basis(ai);
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                for (row, &p) in alg.block(a.target, v).iter().enumerate() {
                    for &(k, c) in alg.mul_basis(ab, p) {
                        m[(row, alg.pos_in_block(k))] += c;
                    }
                }
                m
            })
            .collect();
        Self::new_unchecked(alg.clone(), dims, maps)
    }

    /// `P(v_1) ⊕ ... ⊕ P(v_r)`, summands in the given order.
    pub fn projective_sum(alg: &Arc<Algebra<F>>, vertices: &[usize]) -> Self {
        let parts: Vec<Module<F>> = vertices.iter().map(|&v| Self::projective(alg, v)).collect();
        Self::direct_sum_all(alg, &parts)
    }

    /// `A_A` as `P(1) ⊕ ... ⊕ P(n)`.
    pub fn regular(alg: &Arc<Algebra<F>>) -> Self {
        let vs: Vec<usize> = (0..alg.num_vertices()).collect();
        Self::projective_sum(alg, &vs)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.inner.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }

    pub fn dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.inner.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.inner.maps
    }

    /// Action of a path, from the source vertex space to the target one.
    pub fn path_matrix(&self, p: &Path) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims()[p.source]);
        for &a in &p.arrows {
            m = self.map(a).mul(&m);
        }
        m
    }

    /// Action of an algebra element restricted to `e_from A e_to`.
    pub fn elem_action(&self, x: &[F], from: usize, to: usize) -> Matrix<F> {
        let alg = self.algebra();
        let mut acc = Matrix::zeros(self.dims()[to], self.dims()[from]);
        for &b in alg.block(from, to) {
            if !x[b].is_zero() {
                acc.add_scaled(&self.path_matrix(&alg.basis()[b]), x[b]);
            }
        }
        acc
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        Self::direct_sum_all(self.algebra(), &[self.clone(), o.clone()])
    }

    pub fn direct_sum_all(alg: &Arc<Algebra<F>>, parts: &[Self]) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
        let maps = (0..alg.num_arrows())
            .map(|a| {
                let blocks: Vec<&Matrix<F>> = parts.iter().map(|p| p.map(a)).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Self::new_unchecked(alg.clone(), dims, maps)
    }

    pub fn power(&self, k: usize) -> Self {
        Self::direct_sum_all(self.algebra(), &vec![self.clone(); k])
    }

    /// Transport of structure along invertible vertex matrices `g`.
    pub fn transport(&self, g: &[Matrix<F>]) -> Self {
        let q = self.algebra().quiver();
        let maps = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| g[a.target].mul(self.map(i)).mul(&g[a.source].inverse().expect("invertible")))
            .collect();
        Self::new_unchecked(self.algebra().clone(), self.dims().to_vec(), maps)
    }

    /// Offset of each vertex block in the flattened vector space.
    pub fn vertex_offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims().len());
        let mut s = 0;
        for &d in self.dims() {
            off.push(s);
            s += d;
        }
        off
    }

    pub fn dim_vector_string(&self) -> String {
        format!("({})", self.dims().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
    }

    /// Radical `M·rad A` as per-vertex column spaces.
    pub fn radical_spaces(&self) -> Vec<Matrix<F>> {
        let q = self.algebra().quiver();
        (0..q.num_vertices())
            .map(|v| {
                let mut m = Matrix::zeros(self.dims()[v], 0);
                for (i, a) in q.arrows.iter().enumerate() {
                    if a.target == v {
                        m = m.hstack(self.map(i));
                    }
                }
                m.column_space()
            })
            .collect()
    }

    /// Dimension vector of `top M = M / M rad A`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces().iter().zip(self.dims()).map(|(r, d)| d - r.cols()).collect()
    }

    /// Dimension vector of the socle.
    pub fn socle_dims(&self) -> Vec<usize> {
        let q = self.algebra().quiver();
        (0..q.num_vertices())
            .map(|v| {
                let mut m = Matrix::zeros(0, self.dims()[v]);
                for (i, a) in q.arrows.iter().enumerate() {
                    if a.source == v {
                        m = m.vstack(self.map(i));
                    }
                }
                self.dims()[v] - m.rank()
            })
            .collect()
    }
}

/// A homomorphism of modules, one matrix per vertex.
#[derive(Clone, PartialEq)]
pub struct ModuleMap<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    comps: Vec<Matrix<F>>,
}

impl<F: Field> fmt::Debug for ModuleMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap{:?}->{:?} {:?}", self.source.dims(), self.target.dims(), self.comps)
    }
}

impl<F: Field> ModuleMap<F> {
    pub fn new(source: Module<F>, target: Module<F>, comps: Vec<Matrix<F>>) -> Result<Self> {
        let nv = source.dims().len();
        if comps.len() != nv {
            return Err(Error::Shape("wrong number of vertex components".into()));
        }
        for v in 0..nv {
            if comps[v].shape() != (target.dims()[v], source.dims()[v]) {
                return Err(Error::Shape(format!("component at vertex {v} has wrong shape")));
            }
        }
        let f = Self::new_unchecked(source, target, comps);
        if !f.is_homomorphism() {
            return Err(Error::NotHomomorphism);
        }
        Ok(f)
    }

    pub fn new_unchecked(source: Module<F>, target: Module<F>, comps: Vec<Matrix<F>>) -> Self {
        ModuleMap { source, target, comps }
    }

    pub fn is_homomorphism(&self) -> bool {
        let q = self.source.algebra().quiver();
        q.arrows.iter().enumerate().all(|(i, a)| {
            self.target.map(i).mul(&self.comps[a.source]) == self.comps[a.target].mul(self.source.map(i))
        })
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        let comps = (0..source.dims().len())
            .map(|v| Matrix::zeros(target.dims()[v], source.dims()[v]))
            .collect();
        Self::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn identity(m: &Module<F>) -> Self {
        let comps = m.dims().iter().map(|&d| Matrix::identity(d)).collect();
        Self::new_unchecked(m.clone(), m.clone(), comps)
    }

    pub fn comp(&self, v: usize) -> &Matrix<F> {
        &self.comps[v]
    }

    pub fn comps(&self) -> &[Matrix<F>] {
        &self.comps
    }

    /// `self ∘ g`.
    pub fn after(&self, g: &Self) -> Self {
        let comps = self.comps.iter().zip(&g.comps).map(|(a, b)| a.mul(b)).collect();
        Self::new_unchecked(g.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, o: &Self) -> Self {
        let comps = self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(b)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let comps = self.comps.iter().zip(&o.comps).map(|(a, b)| a.sub(b)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn scale(&self, c: F) -> Self {
        let comps = self.comps.iter().map(|a| a.scale(c)).collect();
        Self::new_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    /// Linear combination of parallel maps.
    pub fn combination(maps: &[Self], coeffs: &[F], source: &Module<F>, target: &Module<F>) -> Self {
        let mut comps: Vec<Matrix<F>> =
            (0..source.dims().len()).map(|v| Matrix::zeros(target.dims()[v], source.dims()[v])).collect();
        for (m, c) in maps.iter().zip(coeffs) {
            for (acc, x) in comps.iter_mut().zip(&m.comps) {
                acc.add_scaled(x, *c);
            }
        }
        Self::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn flatten(&self) -> Vec<F> {
        self.comps.iter().flat_map(|m| m.as_slice().iter().copied()).collect()
    }

    pub fn from_flat(source: &Module<F>, target: &Module<F>, v: &[F]) -> Self {
        let mut comps = Vec::new();
        let mut off = 0;
        for (s, t) in source.dims().iter().zip(target.dims()) {
            comps.push(Matrix::from_fn(*t, *s, |i, j| v[off + i * s + j]));
            off += s * t;
        }
        Self::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(|m| m.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_injective()
    }

    pub fn inverse(&self) -> Option<Self> {
        let comps: Option<Vec<Matrix<F>>> = self.comps.iter().map(|m| m.inverse()).collect();
        Some(Self::new_unchecked(self.target.clone(), self.source.clone(), comps?))
    }

    /// Inclusion of the kernel.
    pub fn kernel(&self) -> Self {
        let spaces: Vec<Matrix<F>> = self.comps.iter().map(|m| m.kernel_matrix()).collect();
        submodule(&self.source, &spaces)
    }

    /// Projection onto the cokernel.
    pub fn cokernel(&self) -> Self {
        let spaces: Vec<Matrix<F>> = self.comps.iter().map(|m| m.column_space()).collect();
        quotient(&self.target, &spaces)
    }

    /// Factorisation `source ->> image >-> target`.
    pub fn image(&self) -> (Self, Self) {
        let spaces: Vec<Matrix<F>> = self.comps.iter().map(|m| m.column_space()).collect();
        let incl = submodule(&self.target, &spaces);
        let epi = factor_through_mono(self, &incl).expect("image contains the image");
        (epi, incl)
    }

    /// `[f g] : X ⊕ Y -> Z`.
    pub fn hstack(maps: &[Self], target: &Module<F>) -> Self {
        let alg = target.algebra();
        let srcs: Vec<Module<F>> = maps.iter().map(|m| m.source.clone()).collect();
        let source = Module::direct_sum_all(alg, &srcs);
        let comps = (0..target.dims().len())
            .map(|v| {
                let mut m = Matrix::zeros(target.dims()[v], 0);
                for f in maps {
                    m = m.hstack(&f.comps[v]);
                }
                m
            })
            .collect();
        Self::new_unchecked(source, target.clone(), comps)
    }

    /// `[f; g] : X -> Y ⊕ Z`.
    pub fn vstack(maps: &[Self], source: &Module<F>) -> Self {
        let alg = source.algebra();
        let tgts: Vec<Module<F>> = maps.iter().map(|m| m.target.clone()).collect();
        let target = Module::direct_sum_all(alg, &tgts);
        let comps = (0..source.dims().len())
            .map(|v| {
                let mut m = Matrix::zeros(0, source.dims()[v]);
                for f in maps {
                    m = m.vstack(&f.comps[v]);
                }
                m
            })
            .collect();
        Self::new_unchecked(source.clone(), target, comps)
    }

    pub fn direct_sum(maps: &[Self]) -> Self {
        let alg = maps[0].source.algebra().clone();
        let s = Module::direct_sum_all(&alg, &maps.iter().map(|m| m.source.clone()).collect::<Vec<_>>());
        let t = Module::direct_sum_all(&alg, &maps.iter().map(|m| m.target.clone()).collect::<Vec<_>>());
        let comps = (0..s.dims().len())
            .map(|v| Matrix::block_diag(&maps.iter().map(|m| &m.comps[v]).collect::<Vec<_>>()))
            .collect();
        Self::new_unchecked(s, t, comps)
    }
}

/// Inclusion of the submodule spanned per vertex by independent columns.
/// The spaces must be closed under the arrows.
pub fn submodule<F: Field>(m: &Module<F>, spaces: &[Matrix<F>]) -> ModuleMap<F> {
    let alg = m.algebra();
    let dims: Vec<usize> = spaces.iter().map(|s| s.cols()).collect();
    let maps = alg
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let img = m.map(i).mul(&spaces[a.source]);
            spaces[a.target].solve_matrix(&img).expect("subspaces must form a submodule")
        })
        .collect();
    let sub = Module::new_unchecked(alg.clone(), dims, maps);
    ModuleMap::new_unchecked(sub, m.clone(), spaces.to_vec())
}

/// Projection onto `M / U` for a submodule given by spanning columns.
pub fn quotient<F: Field>(m: &Module<F>, spaces: &[Matrix<F>]) -> ModuleMap<F> {
    let alg = m.algebra();
    let nv = m.dims().len();
    let mut projs = Vec::with_capacity(nv);
    let mut lifts = Vec::with_capacity(nv);
    for v in 0..nv {
        let sub = spaces[v].column_space();
        let comp = complement_indices(&sub, m.dims()[v]);
        let lift = Matrix::identity(m.dims()[v]).select_cols(&comp);
        let full = sub.hstack(&lift);
        let inv = full.inverse().expect("basis");
        projs.push(inv.block(sub.cols(), 0, comp.len(), m.dims()[v]));
        lifts.push(lift);
    }
    let dims: Vec<usize> = lifts.iter().map(|l| l.cols()).collect();
    let maps = alg
        .quiver()
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| projs[a.target].mul(m.map(i)).mul(&lifts[a.source]))
        .collect();
    let q = Module::new_unchecked(alg.clone(), dims, maps);
    ModuleMap::new_unchecked(m.clone(), q, projs)
}

/// `g` with `mono ∘ g = f`, if it exists.
pub fn factor_through_mono<F: Field>(f: &ModuleMap<F>, mono: &ModuleMap<F>) -> Option<ModuleMap<F>> {
    let comps: Option<Vec<Matrix<F>>> =
        (0..f.comps.len()).map(|v| mono.comps[v].solve_matrix(&f.comps[v])).collect();
    Some(ModuleMap::new_unchecked(f.source.clone(), mono.source.clone(), comps?))
}

/// `g` with `g ∘ epi = f`, if it exists.
pub fn factor_through_epi<F: Field>(f: &ModuleMap<F>, epi: &ModuleMap<F>) -> Option<ModuleMap<F>> {
    let comps: Option<Vec<Matrix<F>>> = (0..f.comps.len())
        .map(|v| {
            epi.comps[v]
                .transpose()
                .solve_matrix(&f.comps[v].transpose())
                .map(|x| x.transpose())
        })
        .collect();
    let g = ModuleMap::new_unchecked(epi.target.clone(), f.target.clone(), comps?);
    Some(g)
}

/// Linear system whose nullspace is `Hom(M, N)` in flattened coordinates.
fn hom_system<F: Field>(m: &Module<F>, n: &Module<F>) -> (Matrix<F>, usize) {
    let q = m.algebra().quiver();
    let nv = q.num_vertices();
    let mut off = vec![0; nv];
    let mut total = 0;
    for v in 0..nv {
        off[v] = total;
        total += m.dims()[v] * n.dims()[v];
    }
    let neq: usize = q.arrows.iter().map(|a| n.dims()[a.target] * m.dims()[a.source]).sum();
    let mut sys = Matrix::zeros(neq, total);
    let mut row = 0;
    for (ai, a) in q.arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (na, ma) = (n.map(ai), m.map(ai));
        for r in 0..n.dims()[t] {
            for c in 0..m.dims()[s] {
                for k in 0..n.dims()[s] {
                    let x = na[(r, k)];
                    if !x.is_zero() {
                        sys[(row, off[s] + k * m.dims()[s] + c)] += x;
                    }
                }
                for k in 0..m.dims()[t] {
                    let x = ma[(k, c)];
                    if !x.is_zero() {
                        sys[(row, off[t] + r * m.dims()[t] + k)] -= x;
                    }
                }
                row += 1;
            }
        }
    }
    (sys, total)
}

/// A basis of `Hom_A(M, N)`.
pub fn hom_basis<F: Field>(m: &Module<F>, n: &Module<F>) -> Vec<ModuleMap<F>> {
    let (sys, total) = hom_system(m, n);
    if total == 0 {
        return Vec::new();
    }
    let ns = if sys.rows() == 0 {
        (0..total)
            .map(|i| {
                let mut v = vec![F::zero(); total];
                v[i] = F::one();
                v
            })
            .collect()
    } else {
        sys.nullspace()
    };
    ns.iter().map(|v| ModuleMap::from_flat(m, n, v)).collect()
}

pub fn hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> usize {
    let (sys, total) = hom_system(m, n);
    total - sys.rank()
}

/// Whether `M ∈ Gen(T)`, i.e. the trace of `T` in `M` is all of `M`.
pub fn in_gen<F: Field>(t: &Module<F>, m: &Module<F>) -> bool {
    trace_dims(t, m) == m.dims()
}

/// Inclusion of the trace of `T` in `M`.
pub fn trace<F: Field>(t: &Module<F>, m: &Module<F>) -> ModuleMap<F> {
    let hs = hom_basis(t, m);
    let spaces: Vec<Matrix<F>> = (0..m.dims().len())
        .map(|v| {
            let mut s = Matrix::zeros(m.dims()[v], 0);
            for h in &hs {
                s = s.hstack(h.comp(v));
            }
            s.column_space()
        })
        .collect();
    submodule(m, &spaces)
}

pub fn trace_dims<F: Field>(t: &Module<F>, m: &Module<F>) -> Vec<usize> {
    trace(t, m).source.dims().to_vec()
}

/// Whether `M ∈ Cogen(T)`.
pub fn in_cogen<F: Field>(t: &Module<F>, m: &Module<F>) -> bool {
    let hs = hom_basis(m, t);
    (0..m.dims().len()).all(|v| {
        let mut s = Matrix::zeros(0, m.dims()[v]);
        for h in &hs {
            s = s.vstack(h.comp(v));
        }
        s.rank() == m.dims()[v]
    })
}

/// Map `P(v_1) ⊕ ... ⊕ P(v_r) -> M` sending the `r`-th generator to `gens[r]`.
pub fn map_from_projectives<F: Field>(
    alg: &Arc<Algebra<F>>,
    vertices: &[usize],
    target: &Module<F>,
    gens: &[Vec<F>],
) -> ModuleMap<F> {
    let source = Module::projective_sum(alg, vertices);
    let nv = alg.num_vertices();
    let comps = (0..nv)
        .map(|j| {
            let mut m = Matrix::zeros(target.dims()[j], source.dims()[j]);
            let mut col = 0;
            for (r, &v) in vertices.iter().enumerate() {
                for &b in alg.block(v, j) {
                    let img = target.path_matrix(&alg.basis()[b]).mul_vec(&gens[r]);
                    for (i, x) in img.into_iter().enumerate() {
                        m[(i, col)] = x;
                    }
                    col += 1;
                }
            }
            m
        })
        .collect();
    ModuleMap::new_unchecked(source, target.clone(), comps)
}

/// Images of the generators of a projective sum under `f`.
pub fn generator_images<F: Field>(f: &ModuleMap<F>, vertices: &[usize]) -> Vec<Vec<F>> {
    let alg = f.source.algebra();
    let nv = alg.num_vertices();
    let mut off = vec![0; nv];
    let mut out = Vec::new();
    for &v in vertices {
        let pos = off[v] + alg.pos_in_block(alg.trivial_index(v));
        out.push(f.comp(v).col(pos));
        for j in 0..nv {
            off[j] += alg.block(v, j).len();
        }
    }
    out
}

/// Projective cover `P -> M` built from a top complement.
#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    pub vertices: Vec<usize>,
    pub map: ModuleMap<F>,
}

pub fn projective_cover<F: Field>(m: &Module<F>) -> Cover<F> {
    let alg = m.algebra();
    let rad = m.radical_spaces();
    let mut vertices = Vec::new();
    let mut gens = Vec::new();
    for v in 0..m.dims().len() {
        for c in complement_indices(&rad[v], m.dims()[v]) {
            let mut g = vec![F::zero(); m.dims()[v]];
            g[c] = F::one();
            vertices.push(v);
            gens.push(g);
        }
    }
    let map = map_from_projectives(alg, &vertices, m, &gens);
    Cover { vertices, map }
}

/// Whether the module is projective (its cover is an isomorphism).
pub fn is_projective<F: Field>(m: &Module<F>) -> bool {
    projective_cover(m).map.is_iso()
}
