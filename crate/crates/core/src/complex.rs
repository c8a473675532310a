//! Bounded complexes of projectives and the homotopy category.
//!
//! Degrees are cohomological: `d^k : C^k -> C^{k+1}`.

use std::sync::Arc;

use crate::algebra::{build_algebra, Algebra, Path, Quiver, Relation};
use crate::decompose::{decompose, iso_test};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homological::Presentation;
use crate::matrix::Matrix;
use crate::module::{factor_through_mono, projective_cover, Module, ModuleMap};
use crate::projective::PathMatrix;
use crate::verdict::Tri;

/// Default number of cones tried by [`generation_search`].
pub const DEFAULT_CONE_DEPTH: usize = 6;
/// Largest number of projective summands allowed in a cone of the search.
pub const CONE_SIZE_CAP: usize = 48;

#[derive(Clone, Debug)]
pub struct ProjComplex<F: Field> {
    alg: Arc<Algebra<F>>,
    lo: i64,
    terms: Vec<Vec<usize>>,
    /// `diffs[j] : C^{lo+j} -> C^{lo+j+1}`.
    diffs: Vec<PathMatrix<F>>,
}

impl<F: Field> ProjComplex<F> {
    /// Checks shapes and `d ∘ d = 0`.
    pub fn new(alg: &Arc<Algebra<F>>, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<PathMatrix<F>>) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) || (terms.is_empty() && !diffs.is_empty()) {
            return Err(Error::Shape("a complex with t terms needs t-1 differentials".into()));
        }
        for (j, d) in diffs.iter().enumerate() {
            if d.cols != terms[j] || d.rows != terms[j + 1] {
                return Err(Error::Shape(format!("differential {} does not match its terms", lo + j as i64)));
            }
            for (c, &w) in d.rows.iter().enumerate() {
                for (r, &v) in d.cols.iter().enumerate() {
                    let x = d.get(c, r);
                    if (0..alg.dim()).any(|b| !x[b].is_zero() && !alg.block(w, v).contains(&b)) {
                        return Err(Error::Shape("differential entry outside e_w A e_v".into()));
                    }
                }
            }
        }
        for j in 1..diffs.len() {
            if !diffs[j].mul(alg, &diffs[j - 1]).is_zero() {
                return Err(Error::Inconsistency(format!("d∘d ≠ 0 at degree {}", lo + j as i64 - 1)));
            }
        }
        Ok(Self::new_unchecked(alg, lo, terms, diffs))
    }

    pub fn new_unchecked(alg: &Arc<Algebra<F>>, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<PathMatrix<F>>) -> Self {
        ProjComplex { alg: alg.clone(), lo, terms, diffs }.trimmed()
    }

    pub fn zero(alg: &Arc<Algebra<F>>) -> Self {
        ProjComplex { alg: alg.clone(), lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `⊕ P(v)` concentrated in one degree.
    pub fn stalk(alg: &Arc<Algebra<F>>, vertices: &[usize], degree: i64) -> Self {
        Self::new_unchecked(alg, degree, vec![vertices.to_vec()], Vec::new())
    }

    /// Stalk complex of the regular module in degree 0.
    pub fn regular(alg: &Arc<Algebra<F>>) -> Self {
        Self::stalk(alg, &(0..alg.num_vertices()).collect::<Vec<_>>(), 0)
    }

    /// The brutal truncation `0 -> P_n -> ... -> P_0 -> 0` in degrees `-n..0`.
    pub fn truncated(sigma: &Presentation<F>) -> Self {
        let n = sigma.length();
        let terms: Vec<Vec<usize>> = (0..=n).rev().map(|i| sigma.terms[i].clone()).collect();
        let diffs: Vec<PathMatrix<F>> = (0..n).rev().map(|i| sigma.diffs[i].clone()).collect();
        Self::new_unchecked(sigma.algebra(), -(n as i64), terms, diffs)
    }

    fn trimmed(mut self) -> Self {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest nonzero degree.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest nonzero degree.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn width(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn term(&self, k: i64) -> &[usize] {
        if k < self.lo || k > self.hi() {
            &[]
        } else {
            &self.terms[(k - self.lo) as usize]
        }
    }

    /// `d^k : C^k -> C^{k+1}`.
    pub fn diff(&self, k: i64) -> PathMatrix<F> {
        if k >= self.lo && k < self.hi() {
            self.diffs[(k - self.lo) as usize].clone()
        } else {
            PathMatrix::zero(&self.alg, self.term(k + 1), self.term(k))
        }
    }

    pub fn term_module(&self, k: i64) -> Module<F> {
        Module::projective_sum(&self.alg, self.term(k))
    }

    pub fn num_summands(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// `C[j]`: `C[j]^k = C^{k+j}` with differential `(-1)^j d`.
    pub fn shift(&self, j: i64) -> Self {
        let sign = if j.rem_euclid(2) == 0 { F::one() } else { -F::one() };
        ProjComplex {
            alg: self.alg.clone(),
            lo: if self.is_zero() { 0 } else { self.lo - j },
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(sign)).collect(),
        }
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.hi().max(o.hi());
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|k| [self.term(k), o.term(k)].concat()).collect();
        let diffs = (lo..hi)
            .map(|k| PathMatrix::block_diag(&self.alg, &[&self.diff(k), &o.diff(k)]))
            .collect();
        Self::new_unchecked(&self.alg, lo, terms, diffs)
    }

    pub fn direct_sum_all(alg: &Arc<Algebra<F>>, parts: &[Self]) -> Self {
        parts.iter().fold(Self::zero(alg), |acc, p| acc.direct_sum(p))
    }

    pub fn power(&self, m: usize) -> Self {
        Self::direct_sum_all(&self.alg, &vec![self.clone(); m])
    }

    /// `H^k(C)`.
    pub fn homology(&self, k: i64) -> Module<F> {
        let out = self.diff(k).to_module_map(&self.alg);
        let inc = self.diff(k - 1).to_module_map(&self.alg);
        let ker = out.kernel();
        let into_ker = factor_through_mono(&inc, &ker).expect("d∘d = 0");
        into_ker.cokernel().target
    }

    /// Removes contractible summands `P --u--> P` with `u` a unit until the
    /// differentials land in the radical.
    pub fn strip(&self) -> Self {
        let alg = self.alg.clone();
        let mut terms = self.terms.clone();
        let mut diffs = self.diffs.clone();
        loop {
            let found = diffs.iter().enumerate().find_map(|(j, d)| d.unit_entry(&alg).map(|e| (j, e)));
            let Some((j, (c, r))) = found else {
                break;
            };
            let d = &diffs[j];
            let v = d.cols[r];
            let inv = alg.inverse_local(d.get(c, r), v).expect("unit entry is invertible");
            let rows: Vec<usize> = (0..d.num_rows()).filter(|&i| i != c).collect();
            let cols: Vec<usize> = (0..d.num_cols()).filter(|&i| i != r).collect();
            let delta = d.select(&rows, &cols);
            let gamma = d.select(&rows, &[r]);
            let beta = d.select(&[c], &cols);
            let mut ainv = PathMatrix::zero(&alg, &[v], &[v]);
            ainv.set(0, 0, inv);
            let newd = delta.sub(&gamma.mul(&alg, &ainv).mul(&alg, &beta));
            if j > 0 {
                let prev = &diffs[j - 1];
                let keep: Vec<usize> = (0..prev.num_cols()).collect();
                diffs[j - 1] = prev.select(&cols, &keep);
            }
            if j + 1 < diffs.len() {
                let next = &diffs[j + 1];
                let keep: Vec<usize> = (0..next.num_rows()).collect();
                diffs[j + 1] = next.select(&keep, &rows);
            }
            diffs[j] = newd;
            terms[j].remove(r);
            terms[j + 1].remove(c);
        }
        Self::new_unchecked(&alg, self.lo, terms, diffs)
    }

    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| d.unit_entry(&self.alg).is_none())
    }

    /// Alternating sum of term dimension vectors.
    pub fn euler_characteristic(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.alg.num_vertices()];
        for k in self.lo..=self.hi().max(self.lo) {
            let m = self.term_module(k);
            let s = if k.rem_euclid(2) == 0 { 1 } else { -1 };
            for (o, &d) in out.iter_mut().zip(m.dims()) {
                *o += s * d as i64;
            }
        }
        out
    }

    /// Vertex multiplicities of each term, lowest degree first.
    pub fn term_multiplicities(&self) -> Vec<Vec<usize>> {
        self.terms
            .iter()
            .map(|t| {
                let mut m = vec![0; self.alg.num_vertices()];
                for &v in t {
                    m[v] += 1;
                }
                m
            })
            .collect()
    }

    pub fn display(&self) -> String {
        let q = self.alg.quiver();
        let mut parts = Vec::new();
        for k in self.lo..=self.hi() {
            let t: Vec<String> = self.term(k).iter().map(|&v| format!("P({})", q.vertices[v])).collect();
            let t = if t.is_empty() { "0".to_string() } else { t.join("+") };
            parts.push(format!("[{}] {}", k, t));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" -> ")
        }
    }
}

/// A family of maps `f^k : C^k -> D^k`, stored over the degrees of `C`.
#[derive(Clone, Debug)]
pub struct ChainMap<F: Field> {
    pub source: ProjComplex<F>,
    pub target: ProjComplex<F>,
    comps: Vec<PathMatrix<F>>,
}

impl<F: Field> ChainMap<F> {
    pub fn comp(&self, k: i64) -> PathMatrix<F> {
        let s = &self.source;
        if s.is_zero() || k < s.lo() || k > s.hi() {
            PathMatrix::zero(s.algebra(), self.target.term(k), s.term(k))
        } else {
            self.comps[(k - s.lo()) as usize].clone()
        }
    }

    pub fn is_chain_map(&self) -> bool {
        let alg = self.source.algebra();
        let (s, t) = (&self.source, &self.target);
        if s.is_zero() {
            return true;
        }
        (s.lo() - 1..=s.hi()).all(|k| {
            self.comp(k + 1).mul(alg, &s.diff(k)).sub(&t.diff(k).mul(alg, &self.comp(k))).is_zero()
        })
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// `[f_1; ...; f_m] : C -> D_1 ⊕ ... ⊕ D_m`.
    pub fn vstack(source: &ProjComplex<F>, maps: &[ChainMap<F>]) -> ChainMap<F> {
        let alg = source.algebra();
        let targets: Vec<ProjComplex<F>> = maps.iter().map(|m| m.target.clone()).collect();
        let target = ProjComplex::direct_sum_all(alg, &targets);
        let comps = if source.is_zero() {
            Vec::new()
        } else {
            (source.lo()..=source.hi())
                .map(|k| {
                    let mut out = PathMatrix::zero(alg, target.term(k), source.term(k));
                    let mut ro = 0;
                    for m in maps {
                        let c = m.comp(k);
                        out.set_block(ro, 0, &c);
                        ro += c.num_rows();
                    }
                    out
                })
                .collect()
        };
        ChainMap { source: source.clone(), target, comps }
    }

    /// Mapping cone: `Cone^k = C^{k+1} ⊕ D^k`, `d = [[-d_C, 0], [f, d_D]]`.
    pub fn cone(&self) -> ProjComplex<F> {
        let (c, d) = (&self.source, &self.target);
        let alg = c.algebra();
        if c.is_zero() {
            return d.clone();
        }
        let lo = (c.lo() - 1).min(if d.is_zero() { c.lo() - 1 } else { d.lo() });
        let hi = (c.hi() - 1).max(if d.is_zero() { c.hi() - 1 } else { d.hi() });
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|k| [c.term(k + 1), d.term(k)].concat()).collect();
        let diffs = (lo..hi)
            .map(|k| {
                let mut m = PathMatrix::zero(alg, &terms[(k + 1 - lo) as usize], &terms[(k - lo) as usize]);
                let dc = c.diff(k + 1).scale(-F::one());
                let f = self.comp(k + 1);
                let dd = d.diff(k);
                m.set_block(0, 0, &dc);
                m.set_block(dc.num_rows(), 0, &f);
                m.set_block(dc.num_rows(), dc.num_cols(), &dd);
                m
            })
            .collect();
        ProjComplex::new_unchecked(alg, lo, terms, diffs)
    }
}

type Blocks = Vec<(Vec<usize>, Vec<usize>)>;

fn blocks_dim<F: Field>(alg: &Algebra<F>, blocks: &Blocks) -> usize {
    blocks.iter().map(|(r, c)| PathMatrix::<F>::hom_space_dim(alg, r, c)).sum()
}

fn from_vec<F: Field>(alg: &Algebra<F>, blocks: &Blocks, x: &[F]) -> Vec<PathMatrix<F>> {
    let mut pos = 0;
    blocks
        .iter()
        .map(|(r, c)| {
            let d = PathMatrix::<F>::hom_space_dim(alg, r, c);
            let m = PathMatrix::from_coords(alg, r, c, &x[pos..pos + d]);
            pos += d;
            m
        })
        .collect()
}

fn to_vec<F: Field>(alg: &Algebra<F>, ms: &[PathMatrix<F>]) -> Vec<F> {
    ms.iter().flat_map(|m| m.to_coords(alg)).collect()
}

/// Matrix of a linear map between spaces of path matrices.
fn linear_matrix<F: Field>(
    alg: &Algebra<F>,
    input: &Blocks,
    output: &Blocks,
    f: impl Fn(&[PathMatrix<F>]) -> Vec<PathMatrix<F>>,
) -> Matrix<F> {
    let n = blocks_dim(alg, input);
    let m = blocks_dim(alg, output);
    let mut out = Matrix::zeros(m, n);
    let mut e = vec![F::zero(); n];
    for t in 0..n {
        e[t] = F::one();
        let y = to_vec(alg, &f(&from_vec(alg, input, &e)));
        for (i, v) in y.into_iter().enumerate() {
            out[(i, t)] = v;
        }
        e[t] = F::zero();
    }
    out
}

/// Chain maps `C -> D` modulo null-homotopic ones.
#[derive(Clone, Debug)]
pub struct HomK<F: Field> {
    pub source: ProjComplex<F>,
    pub target: ProjComplex<F>,
    pub chain_dim: usize,
    pub null_dim: usize,
    /// Chain maps whose classes form a basis of the quotient.
    pub basis: Vec<ChainMap<F>>,
}

impl<F: Field> HomK<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn hom_k<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>) -> HomK<F> {
    let alg = c.algebra().clone();
    let empty = HomK { source: c.clone(), target: d.clone(), chain_dim: 0, null_dim: 0, basis: Vec::new() };
    if c.is_zero() || d.is_zero() || c.hi() < d.lo() - 1 || d.hi() < c.lo() {
        return empty;
    }
    let degs: Vec<i64> = (c.lo()..=c.hi()).collect();
    let maps: Blocks = degs.iter().map(|&k| (d.term(k).to_vec(), c.term(k).to_vec())).collect();
    let obstr: Blocks = degs.iter().map(|&k| (d.term(k + 1).to_vec(), c.term(k).to_vec())).collect();
    let homot: Blocks = degs.iter().map(|&k| (d.term(k - 1).to_vec(), c.term(k).to_vec())).collect();
    let n = blocks_dim(&alg, &maps);
    if n == 0 {
        return empty;
    }
    let nd = degs.len();
    let phi = linear_matrix(&alg, &maps, &obstr, |f| {
        (0..nd)
            .map(|j| {
                let k = degs[j];
                let right = if j + 1 < nd {
                    f[j + 1].mul(&alg, &c.diff(k))
                } else {
                    PathMatrix::zero(&alg, d.term(k + 1), c.term(k))
                };
                right.sub(&d.diff(k).mul(&alg, &f[j]))
            })
            .collect()
    });
    let psi = linear_matrix(&alg, &homot, &maps, |h| {
        (0..nd)
            .map(|j| {
                let k = degs[j];
                let left = if j + 1 < nd {
                    h[j + 1].mul(&alg, &c.diff(k))
                } else {
                    PathMatrix::zero(&alg, d.term(k), c.term(k))
                };
                left.add(&d.diff(k - 1).mul(&alg, &h[j]))
            })
            .collect()
    });
    let kernel = if phi.rows() == 0 {
        (0..n)
            .map(|i| {
                let mut v = vec![F::zero(); n];
                v[i] = F::one();
                v
            })
            .collect()
    } else {
        phi.nullspace()
    };
    let null_span = psi.column_space();
    let null_dim = null_span.cols();
    let mut all = null_span.clone();
    for v in &kernel {
        all = all.hstack(&Matrix::from_cols(n, std::slice::from_ref(v)));
    }
    let indep = all.independent_cols();
    let basis = indep
        .into_iter()
        .filter(|&i| i >= null_dim)
        .map(|i| {
            let v = &kernel[i - null_dim];
            ChainMap { source: c.clone(), target: d.clone(), comps: from_vec(&alg, &maps, v) }
        })
        .collect();
    HomK { source: c.clone(), target: d.clone(), chain_dim: kernel.len(), null_dim, basis }
}

/// `dim Hom_K(C, D[i])`.
pub fn hom_k_dim<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>, i: i64) -> usize {
    hom_k(c, &d.shift(i)).dim()
}

/// `Hom_K(C, C[i]) = 0` for `1 ≤ i ≤ width`.
pub fn is_presilting<F: Field>(c: &ProjComplex<F>) -> bool {
    let m = c.strip();
    (1..=m.width() as i64).all(|i| hom_k_dim(&m, &m, i) == 0)
}

/// Whether, after a shift, `C` lives in degrees `-n..0` with
/// `H^{-i}(C) = 0` for `0 < i < n`. Returns the shift that works.
pub fn generalized_two_term_shift<F: Field>(c: &ProjComplex<F>, n: usize) -> Option<i64> {
    if c.is_zero() {
        return Some(0);
    }
    let n = n as i64;
    if c.width() as i64 > n {
        return None;
    }
    (0..=n - c.width() as i64).find_map(|top| {
        let s = c.hi() + top;
        let sc = c.shift(s);
        let interior_ok = (1..n).all(|i| sc.homology(-i).is_zero());
        interior_ok.then_some(s)
    })
}

pub fn is_generalized_two_term<F: Field>(c: &ProjComplex<F>, n: usize) -> bool {
    generalized_two_term_shift(c, n).is_some()
}

/// Whether `C` itself (without shifting) lives in degrees `-n..0` with
/// vanishing interior homology.
pub fn is_generalized_two_term_in_place<F: Field>(c: &ProjComplex<F>, n: usize) -> bool {
    let n = n as i64;
    c.is_zero() || (c.lo() >= -n && c.hi() <= 0 && (1..n).all(|i| c.homology(-i).is_zero()))
}

/// Algebra whose modules are complexes of `A`-modules in `len` consecutive
/// degrees: vertex `(v, j)`, arrows `a@j` and `d_v@j : (v, j) -> (v, j+1)`.
pub fn aux_algebra<F: Field>(alg: &Arc<Algebra<F>>, len: usize) -> Result<Arc<Algebra<F>>> {
    let q = alg.quiver();
    let nv = q.num_vertices();
    let na = q.num_arrows();
    let vid = |v: usize, j: usize| j * nv + v;
    let aid = |a: usize, j: usize| j * na + a;
    let did = |v: usize, j: usize| len * na + j * nv + v;
    let mut vertices = Vec::new();
    for j in 0..len {
        for v in 0..nv {
            vertices.push(format!("{}@{}", q.vertices[v], j));
        }
    }
    let mut arrows = Vec::new();
    for j in 0..len {
        for a in &q.arrows {
            arrows.push(crate::algebra::Arrow {
                name: format!("{}@{}", a.name, j),
                source: vid(a.source, j),
                target: vid(a.target, j),
            });
        }
    }
    for j in 0..len.saturating_sub(1) {
        for v in 0..nv {
            arrows.push(crate::algebra::Arrow {
                name: format!("d{}@{}", q.vertices[v], j),
                source: vid(v, j),
                target: vid(v, j + 1),
            });
        }
    }
    let aux_q = Quiver::new(vertices, arrows)?;
    let mut rels = Vec::new();
    for j in 0..len {
        for r in alg.relations() {
            let terms = r
                .terms
                .iter()
                .map(|(c, p)| {
                    let arrows = p.arrows.iter().map(|&a| aid(a, j)).collect();
                    (*c, Path { source: vid(p.source, j), target: vid(p.target, j), arrows })
                })
                .collect();
            rels.push(Relation::new(terms));
        }
    }
    for j in 0..len.saturating_sub(1) {
        for (ai, a) in q.arrows.iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let p1 = Path { source: vid(s, j), target: vid(t, j + 1), arrows: vec![aid(ai, j), did(t, j)] };
            let p2 = Path { source: vid(s, j), target: vid(t, j + 1), arrows: vec![did(s, j), aid(ai, j + 1)] };
            rels.push(Relation::new(vec![(F::one(), p1), (-F::one(), p2)]));
        }
    }
    for j in 0..len.saturating_sub(2) {
        for v in 0..nv {
            let p = Path { source: vid(v, j), target: vid(v, j + 2), arrows: vec![did(v, j), did(v, j + 1)] };
            rels.push(Relation::new(vec![(F::one(), p)]));
        }
    }
    build_algebra(aux_q, rels)
}

/// The complex as a module over [`aux_algebra`] for degrees `w_lo..w_lo+len`.
pub fn aux_module<F: Field>(c: &ProjComplex<F>, aux: &Arc<Algebra<F>>, w_lo: i64, len: usize) -> Module<F> {
    let alg = c.algebra();
    let nv = alg.num_vertices();
    let na = alg.num_arrows();
    assert!(c.is_zero() || (c.lo() >= w_lo && c.hi() < w_lo + len as i64));
    let mods: Vec<Module<F>> = (0..len).map(|j| c.term_module(w_lo + j as i64)).collect();
    let diffs: Vec<ModuleMap<F>> =
        (0..len.saturating_sub(1)).map(|j| c.diff(w_lo + j as i64).to_module_map(alg)).collect();
    let mut dims = Vec::with_capacity(len * nv);
    for m in &mods {
        dims.extend_from_slice(m.dims());
    }
    let mut maps = Vec::new();
    for m in &mods {
        for a in 0..na {
            maps.push(m.map(a).clone());
        }
    }
    for d in &diffs {
        for v in 0..nv {
            maps.push(d.comp(v).clone());
        }
    }
    Module::new_unchecked(aux.clone(), dims, maps)
}

/// Converts an [`aux_module`] whose degree parts are projective back into a
/// complex of projectives.
fn complex_from_aux<F: Field>(alg: &Arc<Algebra<F>>, m: &Module<F>, w_lo: i64, len: usize) -> ProjComplex<F> {
    let nv = alg.num_vertices();
    let na = alg.num_arrows();
    let parts: Vec<Module<F>> = (0..len)
        .map(|j| {
            let dims = m.dims()[j * nv..(j + 1) * nv].to_vec();
            let maps = (0..na).map(|a| m.map(j * na + a).clone()).collect();
            Module::new_unchecked(alg.clone(), dims, maps)
        })
        .collect();
    let covers: Vec<_> = parts.iter().map(projective_cover).collect();
    let terms: Vec<Vec<usize>> = covers.iter().map(|c| c.vertices.clone()).collect();
    let diffs = (0..len.saturating_sub(1))
        .map(|j| {
            let comps = (0..nv).map(|v| m.map(len * na + j * nv + v).clone()).collect();
            let d = ModuleMap::new_unchecked(parts[j].clone(), parts[j + 1].clone(), comps);
            let inv = covers[j + 1].map.inverse().expect("degree parts are projective");
            let lifted = inv.after(&d.after(&covers[j].map));
            PathMatrix::from_module_map(&lifted, &terms[j], &terms[j + 1])
        })
        .collect();
    ProjComplex::new_unchecked(alg, w_lo, terms, diffs)
}

/// Indecomposable summands of the minimal version of `C` with multiplicities,
/// up to isomorphism of complexes.
pub fn decompose_complex<F: Field>(c: &ProjComplex<F>) -> Result<Vec<(ProjComplex<F>, usize)>> {
    let m = c.strip();
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let len = m.width() + 1;
    let aux = aux_algebra(m.algebra(), len)?;
    let am = aux_module(&m, &aux, m.lo(), len);
    let parts = decompose(&am).summands;
    let mut groups: Vec<(Module<F>, usize)> = Vec::new();
    for p in parts {
        match groups.iter_mut().find(|(q, _)| iso_test(q, &p)) {
            Some(g) => g.1 += 1,
            None => groups.push((p, 1)),
        }
    }
    Ok(groups.into_iter().map(|(p, k)| (complex_from_aux(m.algebra(), &p, m.lo(), len), k)).collect())
}

/// Number of pairwise non-isomorphic indecomposable summands in `K^b(proj)`.
pub fn num_distinct_summands<F: Field>(c: &ProjComplex<F>) -> Result<usize> {
    Ok(decompose_complex(c)?.len())
}

/// Distinct indecomposable summands equal the number of simple modules.
pub fn rank_condition<F: Field>(c: &ProjComplex<F>) -> Result<bool> {
    Ok(num_distinct_summands(c)? == c.algebra().num_vertices())
}

/// Homotopy equivalence, via isomorphism of minimal complexes.
pub fn homotopy_equivalent<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>) -> Result<bool> {
    let (a, b) = (c.strip(), d.strip());
    if a.is_zero() || b.is_zero() {
        return Ok(a.is_zero() && b.is_zero());
    }
    if a.lo() != b.lo() || a.hi() != b.hi() || a.term_multiplicities() != b.term_multiplicities() {
        return Ok(false);
    }
    let len = a.width() + 1;
    let aux = aux_algebra(a.algebra(), len)?;
    Ok(iso_test(&aux_module(&a, &aux, a.lo(), len), &aux_module(&b, &aux, a.lo(), len)))
}

/// `add(C) = add(D)` in `K^b(proj)`.
pub fn add_equivalent<F: Field>(c: &ProjComplex<F>, d: &ProjComplex<F>) -> Result<bool> {
    let xs = decompose_complex(c)?;
    let ys = decompose_complex(d)?;
    if xs.len() != ys.len() {
        return Ok(false);
    }
    for (x, _) in &xs {
        let mut found = false;
        for (y, _) in &ys {
            if homotopy_equivalent(x, y)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of [`generation_search`].
#[derive(Clone, Debug)]
pub struct GenerationResult<F: Field> {
    pub verdict: Tri,
    /// Cones `X_0 = A, X_1, ...` with `X_{i+1} = Cone(X_i -> C_i)`, `C_i ∈ add C`.
    pub tower: Vec<ProjComplex<F>>,
    pub reason: String,
}

fn in_add_of_shifts<F: Field>(x: &ProjComplex<F>, summands: &[ProjComplex<F>]) -> Result<bool> {
    for (y, _) in decompose_complex(x)? {
        let mut found = false;
        for s in summands {
            let j = s.hi() - y.hi();
            let sj = s.shift(j);
            if sj.lo() == y.lo() && homotopy_equivalent(&sj, &y)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for triangles `X_i -> C_i -> X_{i+1}` starting from `X_0 = A`
/// with `C_i` a left `add(C)`-approximation. Reaching `X_m ∈ add(C[*])`
/// certifies that `C` generates `K^b(proj)`; otherwise the answer is unknown.
pub fn generation_search<F: Field>(c: &ProjComplex<F>, depth: usize) -> Result<GenerationResult<F>> {
    let alg = c.algebra().clone();
    let m = c.strip();
    let mut tower = Vec::new();
    if m.is_zero() {
        let reason = "zero complex".to_string();
        return Ok(GenerationResult { verdict: Tri::Unknown, tower, reason });
    }
    let m = m.shift(m.hi());
    let summands: Vec<ProjComplex<F>> = decompose_complex(&m)?.into_iter().map(|(s, _)| s).collect();
    let mut x = ProjComplex::regular(&alg);
    for step in 0..=depth {
        x = x.strip();
        tower.push(x.clone());
        if x.is_zero() || in_add_of_shifts(&x, &summands)? {
            let reason = format!("cone tower reaches add(C[*]) after {} step(s)", step);
            return Ok(GenerationResult { verdict: Tri::Yes, tower, reason });
        }
        if step == depth {
            break;
        }
        if x.num_summands() > CONE_SIZE_CAP {
            let reason = format!("cone exceeded {} projective summands", CONE_SIZE_CAP);
            return Ok(GenerationResult { verdict: Tri::Unknown, tower, reason });
        }
        let mut maps = Vec::new();
        for s in &summands {
            maps.extend(hom_k(&x, s).basis);
        }
        if maps.is_empty() {
            let reason = "no nonzero maps into add(C)".to_string();
            return Ok(GenerationResult { verdict: Tri::Unknown, tower, reason });
        }
        x = ChainMap::vstack(&x, &maps).cone();
    }
    let reason = format!("no certificate within depth {}", depth);
    Ok(GenerationResult { verdict: Tri::Unknown, tower, reason })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linear_a;
    use crate::field::Fp;
    use crate::homological::min_presentation;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn arrow_map<F: Field>(alg: &Arc<Algebra<F>>, a: usize) -> PathMatrix<F> {
        let arr = &alg.quiver().arrows[a];
        let mut m = PathMatrix::zero(alg, &[arr.source], &[arr.target]);
        m.set(0, 0, alg.basis_elem(alg.arrow_index_in_basis(a)));
        m
    }

    #[test]
    fn stalk_homs() {
        let a = linear_a::<F3>(3);
        let c = ProjComplex::regular(&a);
        assert_eq!(hom_k_dim(&c, &c, 0), a.dim());
        assert_eq!(hom_k_dim(&c, &c, 1), 0);
        assert!(is_presilting(&c));
        assert!(rank_condition(&c).unwrap());
        assert_eq!(c.homology(0).dims(), Module::regular(&a).dims());
    }

    #[test]
    fn contractible_is_stripped() {
        let a = linear_a::<F2>(2);
        let id = PathMatrix::identity(&a, &[0]);
        let c = ProjComplex::new(&a, -1, vec![vec![0], vec![0]], vec![id]).unwrap();
        assert!(c.strip().is_zero());
        assert_eq!(hom_k_dim(&c, &c, 0), 0);
    }

    #[test]
    fn zero_differential_is_not_presilting() {
        let a = linear_a::<F2>(2);
        let z = PathMatrix::zero(&a, &[0], &[0]);
        let c = ProjComplex::new(&a, -1, vec![vec![0], vec![0]], vec![z]).unwrap();
        assert!(!is_presilting(&c));
    }

    #[test]
    fn a2_two_term_complex_generates() {
        let a = linear_a::<F2>(2);
        // P(2) -> P(1) resolving S1, plus P(1) in degree 0.
        let f = arrow_map(&a, 0);
        let s1 = ProjComplex::new(&a, -1, vec![vec![1], vec![0]], vec![f]).unwrap();
        assert_eq!(s1.homology(0).dims(), &[1, 0]);
        let c = s1.direct_sum(&ProjComplex::stalk(&a, &[0], 0));
        assert!(is_presilting(&c));
        assert!(rank_condition(&c).unwrap());
        let g = generation_search(&c, DEFAULT_CONE_DEPTH).unwrap();
        assert_eq!(g.verdict, Tri::Yes);
        let p1 = ProjComplex::stalk(&a, &[0], 0);
        let p2 = ProjComplex::stalk(&a, &[1], -1);
        assert_eq!(generation_search(&p1.direct_sum(&p2), 4).unwrap().verdict, Tri::Yes);
    }

    #[test]
    fn single_projective_does_not_certify() {
        let a = linear_a::<F2>(2);
        let c = ProjComplex::stalk(&a, &[0], 0);
        assert!(!rank_condition(&c).unwrap());
        assert_eq!(generation_search(&c, 3).unwrap().verdict, Tri::Unknown);
    }

    #[test]
    fn decomposition_counts() {
        let a = linear_a::<F2>(3);
        let c = ProjComplex::regular(&a);
        let d = decompose_complex(&c.direct_sum(&c)).unwrap();
        assert_eq!(d.len(), 3);
        assert!(d.iter().all(|(_, k)| *k == 2));
        assert!(add_equivalent(&c, &c.power(2)).unwrap());
    }

    #[test]
    fn cone_of_split_mono_is_cokernel() {
        let a = linear_a::<F3>(2);
        let c = ProjComplex::regular(&a);
        let h = hom_k(&c, &c);
        let id = h
            .basis
            .iter()
            .find(|m| {
                let m0 = m.comp(0);
                m0.unit_entry(&a).is_some()
            })
            .unwrap();
        assert!(id.is_chain_map());
        let s = ChainMap::vstack(&c, &h.basis);
        assert!(s.is_chain_map());
        let cone = s.cone();
        assert_eq!(cone.euler_characteristic(), vec![2, 4]);
        let m = cone.strip();
        assert_eq!((m.lo(), m.hi()), (0, 0));
        assert!(add_equivalent(&m, &c).unwrap());
    }

    #[test]
    fn truncated_resolution_and_euler() {
        let a = linear_a::<F2>(3);
        let s1 = Module::simple(&a, 0);
        let p = min_presentation(&s1, 2);
        let c = ProjComplex::truncated(&p);
        assert_eq!((c.lo(), c.hi()), (-1, 0));
        assert_eq!(c.homology(0).dims(), s1.dims());
        assert!(c.homology(-1).is_zero());
        let chi: Vec<i64> = s1.dims().iter().map(|&d| d as i64).collect();
        assert_eq!(c.euler_characteristic(), chi);
        let sh = c.shift(1);
        assert_eq!(hom_k_dim(&c, &c, 0), hom_k_dim(&sh, &sh, 0));
        assert!(homotopy_equivalent(&c, &c.direct_sum(&ProjComplex::zero(&a))).unwrap());
        assert!(!homotopy_equivalent(&c, &sh).unwrap());
    }
}
