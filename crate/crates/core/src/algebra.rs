//! Quivers, paths and bound quiver algebras `kQ/I`.
//!
//! Paths compose left to right: `a*b` means first `a`, then `b`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow {} has unknown endpoint", a.name)));
            }
        }
        let mut names: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
        names.extend(arrows.iter().map(|a| a.name.as_str()));
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::InvalidQuiver("duplicate vertex or arrow name".into()));
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Convenience constructor from `(name, source, target)` with 0-based vertices.
    pub fn from_spec(vertices: &[&str], arrows: &[(&str, usize, usize)]) -> Result<Self> {
        Self::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|&(n, s, t)| Arrow { name: n.to_string(), source: s, target: t })
                .collect(),
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// All paths of exactly the given length, grouped by source.
    fn paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut cur: Vec<Path> = (0..self.num_vertices()).map(Path::trivial).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &cur {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path { source: p.source, target: a.target, arrows });
                    }
                }
            }
            cur = next;
        }
        cur
    }
}

/// A path in a quiver; `arrows` is empty for the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path { source: q.arrows[a].source, target: q.arrows[a].target, arrows: vec![a] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `o`, if composable.
    pub fn concat(&self, o: &Path) -> Option<Path> {
        if self.target != o.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&o.arrows);
        Some(Path { source: self.source, target: o.target, arrows })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F, Path)>,
}

impl<F: Field> Relation<F> {
    pub fn new(terms: Vec<(F, Path)>) -> Self {
        Relation { terms }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let v = c.to_i64();
            if i > 0 {
                s.push_str(if v < 0 { " - " } else { " + " });
            } else if v < 0 {
                s.push('-');
            }
            if v.abs() != 1 {
                s.push_str(&format!("{}*", v.abs()));
            }
            s.push_str(&p.display(q));
        }
        s
    }

    fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.first().map(|(_, p)| (p.source, p.target))
    }
}

/// Algebra element as a coordinate vector in the path basis.
pub type Elem<F> = Vec<F>;

struct Tables<F: Field> {
    mult: Vec<Vec<Vec<(usize, F)>>>,
}

/// Representation data of the indecomposable projective `e_v A`.
#[derive(Clone, Debug)]
pub struct ProjectiveData<F: Field> {
    pub dims: Vec<usize>,
    pub arrow_maps: Vec<Matrix<F>>,
}

/// A finite-dimensional bound quiver algebra with a basis of paths.
pub struct Algebra<F: Field> {
    quiver: Quiver,
    relations: Vec<Relation<F>>,
    basis: Vec<Path>,
    block: Vec<Vec<Vec<usize>>>,
    pos_in_block: Vec<usize>,
    /// Normal forms of all paths of length below `max_len`.
    normal: HashMap<Path, Vec<(usize, F)>>,
    max_len: usize,
    tables: OnceLock<Tables<F>>,
    projectives: OnceLock<Vec<ProjectiveData<F>>>,
}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.iter().map(|a| &a.name).collect::<Vec<_>>())
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, o: &Self) -> bool {
        self.quiver == o.quiver && self.relations == o.relations
    }
}

pub const DEFAULT_LENGTH_CAP: usize = 30;
pub const DEFAULT_PATH_CAP: usize = 200_000;

/// Builds `kQ/I` with the default length cap.
pub fn build_algebra<F: Field>(quiver: Quiver, relations: Vec<Relation<F>>) -> Result<Arc<Algebra<F>>> {
    Algebra::build(quiver, relations, DEFAULT_LENGTH_CAP)
}

impl<F: Field> Algebra<F> {
    pub fn build(quiver: Quiver, relations: Vec<Relation<F>>, length_cap: usize) -> Result<Arc<Self>> {
        let relations: Vec<Relation<F>> = relations
            .into_iter()
            .map(|r| {
                let mut acc: HashMap<Path, F> = HashMap::new();
                for (c, p) in r.terms {
                    *acc.entry(p).or_insert(F::zero()) += c;
                }
                let mut terms: Vec<(F, Path)> =
                    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect();
                terms.sort_by(|a, b| (a.1.len(), &a.1).cmp(&(b.1.len(), &b.1)).reverse());
                Relation { terms }
            })
            .filter(|r| !r.terms.is_empty())
            .collect();
        for r in &relations {
            let (s, t) = r.endpoints().unwrap();
            for (_, p) in &r.terms {
                if p.source != s || p.target != t {
                    return Err(Error::NotAdmissible(format!(
                        "{} mixes paths with different endpoints",
                        r.display(&quiver)
                    )));
                }
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(format!(
                        "{} has a term of length below 2",
                        r.display(&quiver)
                    )));
                }
            }
        }

        let nv = quiver.num_vertices();
        let mut by_len: Vec<Vec<Path>> = vec![quiver.paths_of_length(0)];
        let mut total = nv;
        for n in 1..=length_cap {
            let next = quiver.paths_of_length(n);
            total += next.len();
            if total > DEFAULT_PATH_CAP {
                return Err(Error::NotFiniteDimensional(n));
            }
            by_len.push(next);
            if let Some(alg) = Self::try_truncation(&quiver, &relations, &by_len, n)? {
                return Ok(Arc::new(alg));
            }
        }
        Err(Error::NotFiniteDimensional(length_cap))
    }

    /// Attempts to present the algebra using paths of length at most `n`.
    fn try_truncation(
        quiver: &Quiver,
        relations: &[Relation<F>],
        by_len: &[Vec<Path>],
        n: usize,
    ) -> Result<Option<Self>> {
        let nv = quiver.num_vertices();
        // block paths longest first
        let mut blocks: Vec<Vec<Vec<Path>>> = vec![vec![Vec::new(); nv]; nv];
        for len in (0..=n).rev() {
            for p in &by_len[len] {
                blocks[p.source][p.target].push(p.clone());
            }
        }
        let mut normal: HashMap<Path, Vec<(usize, F)>> = HashMap::new();
        let mut basis_paths: Vec<Path> = Vec::new();
        for s in 0..nv {
            for t in 0..nv {
                let cols = &blocks[s][t];
                if cols.is_empty() {
                    continue;
                }
                let col_of: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
                let mut rows: Vec<Vec<F>> = Vec::new();
                for r in relations {
                    let (rs, rt) = r.endpoints().unwrap();
                    let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
                    if min_len > n {
                        continue;
                    }
                    let room = n - min_len;
                    for lu in 0..=room {
                        for u in by_len[lu].iter().filter(|u| u.source == s && u.target == rs) {
                            for lv in 0..=(room - lu) {
                                for v in by_len[lv].iter().filter(|v| v.source == rt && v.target == t) {
                                    let mut row = vec![F::zero(); cols.len()];
                                    let mut any = false;
                                    for (c, p) in &r.terms {
                                        let full = u.concat(p).unwrap().concat(v).unwrap();
                                        if full.len() <= n {
                                            row[col_of[&full]] += *c;
                                            any = true;
                                        }
                                    }
                                    if any {
                                        rows.push(row);
                                    }
                                }
                            }
                        }
                    }
                }
                let rref = if rows.is_empty() {
                    None
                } else {
                    Some(Matrix::from_rows(rows.len(), cols.len(), &rows).rref())
                };
                let mut is_pivot = vec![None; cols.len()];
                if let Some(r) = &rref {
                    for (ri, &p) in r.pivots.iter().enumerate() {
                        is_pivot[p] = Some(ri);
                    }
                }
                // length-n paths must reduce to zero
                for (ci, p) in cols.iter().enumerate() {
                    if p.len() == n && n > 0 {
                        match is_pivot[ci] {
                            None => return Ok(None),
                            Some(ri) => {
                                let m = &rref.as_ref().unwrap().matrix;
                                if (ci + 1..cols.len()).any(|c| is_pivot[c].is_none() && !m[(ri, c)].is_zero()) {
                                    return Ok(None);
                                }
                            }
                        }
                    }
                }
                let local_basis: Vec<usize> = (0..cols.len()).filter(|&c| is_pivot[c].is_none()).collect();
                // normal forms in block-local column indices, remapped below
                for (ci, p) in cols.iter().enumerate() {
                    let nf: Vec<(usize, F)> = match is_pivot[ci] {
                        None => vec![(ci, F::one())],
                        Some(ri) => {
                            let m = &rref.as_ref().unwrap().matrix;
                            local_basis
                                .iter()
                                .filter(|&&c| !m[(ri, c)].is_zero())
                                .map(|&c| (c, -m[(ri, c)]))
                                .collect()
                        }
                    };
                    normal.insert(p.clone(), nf);
                }
                for &c in &local_basis {
                    basis_paths.push(cols[c].clone());
                }
            }
        }

        // global basis ordering: (length, source, target, arrows)
        basis_paths.sort_by(|a, b| (a.len(), a.source, a.target, &a.arrows).cmp(&(b.len(), b.source, b.target, &b.arrows)));
        let index_of: HashMap<&Path, usize> = basis_paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut remapped: HashMap<Path, Vec<(usize, F)>> = HashMap::new();
        for s in 0..nv {
            for t in 0..nv {
                let cols = &blocks[s][t];
                for p in cols {
                    if let Some(nf) = normal.get(p) {
                        let mut v: Vec<(usize, F)> =
                            nf.iter().map(|&(c, f)| (index_of[&cols[c]], f)).collect();
                        v.sort_by_key(|x| x.0);
                        remapped.insert(p.clone(), v);
                    }
                }
            }
        }

        let mut block = vec![vec![Vec::new(); nv]; nv];
        let mut pos_in_block = vec![0; basis_paths.len()];
        for (i, p) in basis_paths.iter().enumerate() {
            pos_in_block[i] = block[p.source][p.target].len();
            block[p.source][p.target].push(i);
        }
        Ok(Some(Algebra {
            quiver: quiver.clone(),
            relations: relations.to_vec(),
            basis: basis_paths,
            block,
            pos_in_block,
            normal: remapped,
            max_len: n,
            tables: OnceLock::new(),
            projectives: OnceLock::new(),
        }))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.num_arrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Basis indices of paths from `i` to `j`, i.e. a basis of `e_i A e_j`.
    pub fn block(&self, i: usize, j: usize) -> &[usize] {
        &self.block[i][j]
    }

    pub fn pos_in_block(&self, b: usize) -> usize {
        self.pos_in_block[b]
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.basis.iter().map(|p| p.len()).max().unwrap_or(0) + 1
    }

    pub fn trivial_index(&self, v: usize) -> usize {
        self.basis.iter().position(|p| p.is_trivial() && p.source == v).expect("trivial path is in basis")
    }

    pub fn arrow_index_in_basis(&self, a: usize) -> usize {
        self.basis
            .iter()
            .position(|p| p.arrows.len() == 1 && p.arrows[0] == a)
            .expect("arrows are in basis")
    }

    /// Normal form of an arbitrary path.
    pub fn reduce_path(&self, p: &Path) -> Elem<F> {
        let mut v = vec![F::zero(); self.dim()];
        if p.len() >= self.max_len && self.max_len > 0 {
            return v;
        }
        if let Some(nf) = self.normal.get(p) {
            for &(i, c) in nf {
                v[i] += c;
            }
        }
        v
    }

    pub fn zero(&self) -> Elem<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn basis_elem(&self, b: usize) -> Elem<F> {
        let mut v = self.zero();
        v[b] = F::one();
        v
    }

    pub fn idempotent(&self, v: usize) -> Elem<F> {
        self.basis_elem(self.trivial_index(v))
    }

    fn tables(&self) -> &Tables<F> {
        self.tables.get_or_init(|| {
            let d = self.dim();
            let mut mult = vec![vec![Vec::new(); d]; d];
            for (i, p) in self.basis.iter().enumerate() {
                for (j, q) in self.basis.iter().enumerate() {
                    if let Some(pq) = p.concat(q) {
                        let v = self.reduce_path(&pq);
                        mult[i][j] = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, *c)).collect();
                    }
                }
            }
            Tables { mult }
        })
    }

    /// Product of basis elements `b1 * b2` as a sparse vector.
    pub fn mul_basis(&self, b1: usize, b2: usize) -> &[(usize, F)] {
        &self.tables().mult[b1][b2]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Elem<F> {
        let t = self.tables();
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = *a * *b;
                for &(k, c) in &t.mult[i][j] {
                    out[k] += ab * c;
                }
            }
        }
        out
    }

    /// Inverse in `e_v A e_v` of an element with nonzero `e_v` coefficient.
    pub fn inverse_local(&self, x: &[F], v: usize) -> Option<Elem<F>> {
        let ev = self.trivial_index(v);
        let c = x[ev].inverse()?;
        // x = c^{-1}(e_v + n), inverse = c (e_v - n + n^2 - ...)
        let mut n: Elem<F> = x.iter().map(|a| *a * c).collect();
        n[ev] -= F::one();
        let mut term = self.idempotent(v);
        let mut acc = self.idempotent(v);
        for _ in 0..self.loewy_length() {
            term = self.mul(&term, &n).into_iter().map(|a| -a).collect();
            if term.iter().all(|a| a.is_zero()) {
                break;
            }
            for (a, t) in acc.iter_mut().zip(&term) {
                *a += *t;
            }
        }
        Some(acc.into_iter().map(|a| a * c).collect())
    }

    /// Data of `e_v A` for every vertex `v`.
    pub fn projective_data(&self) -> &[ProjectiveData<F>] {
        self.projectives.get_or_init(|| {
            let nv = self.num_vertices();
            (0..nv)
                .map(|v| {
                    let dims: Vec<usize> = (0..nv).map(|j| self.block[v][j].len()).collect();
                    let arrow_maps = self
                        .quiver
                        .arrows
                        .iter()
                        .enumerate()
                        .map(|(ai, a)| {
                            let ab = self.arrow_index_in_basis(ai);
                            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                            for (col, &b) in self.block[v][a.source].iter().enumerate() {
                                for &(k, c) in self.mul_basis(b, ab) {
                                    m[(self.pos_in_block[k], col)] += c;
                                }
                            }
                            m
                        })
                        .collect();
                    ProjectiveData { dims, arrow_maps }
                })
                .collect()
        })
    }

    /// Human-readable form of an element.
    pub fn display_elem(&self, x: &[F]) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.basis[i].display(&self.quiver);
            let v = c.to_i64();
            parts.push(if v == 1 {
                p
            } else if v == -1 {
                format!("-{p}")
            } else {
                format!("{v}*{p}")
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    }
}

/// Path algebra of the linear quiver `1 -> 2 -> ... -> n` without relations.
pub fn linear_a<F: Field>(n: usize) -> Arc<Algebra<F>> {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (0..n.saturating_sub(1))
        .map(|i| Arrow { name: format!("a{}", i + 1), source: i, target: i + 1 })
        .collect();
    build_algebra(Quiver::new(names, arrows).unwrap(), Vec::new()).unwrap()
}
