//! Maps between sums of indecomposable projectives as matrices of algebra elements.
//!
//! A map `⊕_r P(v_r) -> ⊕_c P(w_c)` sends generator `r` to `Σ_c e_c · a_{cr}`
//! with `a_{cr} ∈ e_{w_c} A e_{v_r}`. Composition is `(g∘f)_{sr} = Σ_c b_{sc} a_{cr}`.

use std::sync::Arc;

use crate::algebra::{Algebra, Elem};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::{generator_images, map_from_projectives, Module, ModuleMap};

#[derive(Clone, Debug, PartialEq)]
pub struct PathMatrix<F: Field> {
    /// Vertices of the target summands.
    pub rows: Vec<usize>,
    /// Vertices of the source summands.
    pub cols: Vec<usize>,
    entries: Vec<Vec<Elem<F>>>,
}

impl<F: Field> PathMatrix<F> {
    pub fn zero(alg: &Algebra<F>, rows: &[usize], cols: &[usize]) -> Self {
        PathMatrix {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
            entries: vec![vec![alg.zero(); cols.len()]; rows.len()],
        }
    }

    pub fn identity(alg: &Algebra<F>, verts: &[usize]) -> Self {
        let mut m = Self::zero(alg, verts, verts);
        for (i, &v) in verts.iter().enumerate() {
            m.entries[i][i] = alg.idempotent(v);
        }
        m
    }

    pub fn get(&self, c: usize, r: usize) -> &Elem<F> {
        &self.entries[c][r]
    }

    pub fn set(&mut self, c: usize, r: usize, x: Elem<F>) {
        self.entries[c][r] = x;
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(|x| x.is_zero())
    }

    /// `self · a`, i.e. `self ∘ a` as maps.
    pub fn mul(&self, alg: &Algebra<F>, a: &Self) -> Self {
        assert_eq!(self.cols, a.rows, "path matrix composition mismatch");
        let mut out = Self::zero(alg, &self.rows, &a.cols);
        for s in 0..self.rows.len() {
            for r in 0..a.cols.len() {
                let mut acc = alg.zero();
                for c in 0..self.cols.len() {
                    let p = alg.mul(&self.entries[s][c], &a.entries[c][r]);
                    for (x, y) in acc.iter_mut().zip(p) {
                        *x += y;
                    }
                }
                out.entries[s][r] = acc;
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (row, orow) in out.entries.iter_mut().zip(&o.entries) {
            for (x, y) in row.iter_mut().zip(orow) {
                for (a, b) in x.iter_mut().zip(y) {
                    *a += *b;
                }
            }
        }
        out
    }

    pub fn scale(&self, c: F) -> Self {
        let mut out = self.clone();
        for x in out.entries.iter_mut().flatten().flatten() {
            *x *= c;
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-F::one()))
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        PathMatrix {
            rows: rows.iter().map(|&i| self.rows[i]).collect(),
            cols: cols.iter().map(|&j| self.cols[j]).collect(),
            entries: rows.iter().map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        }
    }

    pub fn block_diag(alg: &Algebra<F>, blocks: &[&Self]) -> Self {
        let rows: Vec<usize> = blocks.iter().flat_map(|b| b.rows.iter().copied()).collect();
        let cols: Vec<usize> = blocks.iter().flat_map(|b| b.cols.iter().copied()).collect();
        let mut out = Self::zero(alg, &rows, &cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            out.set_block(ro, co, b);
            ro += b.rows.len();
            co += b.cols.len();
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows.len() {
            for j in 0..b.cols.len() {
                self.entries[r0 + i][c0 + j] = b.entries[i][j].clone();
            }
        }
    }

    /// An entry with a nonzero coefficient on the trivial path, i.e. an
    /// isomorphism between a source and a target summand.
    pub fn unit_entry(&self, alg: &Algebra<F>) -> Option<(usize, usize)> {
        for (c, &w) in self.rows.iter().enumerate() {
            for (r, &v) in self.cols.iter().enumerate() {
                if v == w && !self.entries[c][r][alg.trivial_index(v)].is_zero() {
                    return Some((c, r));
                }
            }
        }
        None
    }

    pub fn to_module_map(&self, alg: &Arc<Algebra<F>>) -> ModuleMap<F> {
        let target = Module::projective_sum(alg, &self.rows);
        let gens: Vec<Vec<F>> = (0..self.cols.len())
            .map(|r| {
                let v = self.cols[r];
                let mut g = Vec::new();
                for (c, &w) in self.rows.iter().enumerate() {
                    for &b in alg.block(w, v) {
                        g.push(self.entries[c][r][b]);
                    }
                }
                g
            })
            .collect();
        map_from_projectives(alg, &self.cols, &target, &gens)
    }

    /// Inverse of [`PathMatrix::to_module_map`].
    pub fn from_module_map(f: &ModuleMap<F>, cols: &[usize], rows: &[usize]) -> Self {
        let alg = f.source.algebra();
        let gens = generator_images(f, cols);
        let mut out = Self::zero(alg, rows, cols);
        for (r, &v) in cols.iter().enumerate() {
            let mut pos = 0;
            for (c, &w) in rows.iter().enumerate() {
                for &b in alg.block(w, v) {
                    out.entries[c][r][b] = gens[r][pos];
                    pos += 1;
                }
            }
        }
        out
    }

    /// Matrix of `Hom(target, M) -> Hom(source, M)`, `g ↦ g ∘ self`, with
    /// `Hom(⊕ P(w_c), M) = ⊕ M_{w_c}`.
    pub fn hom_into(&self, m: &Module<F>) -> Matrix<F> {
        let d = m.dims();
        let nr: usize = self.cols.iter().map(|&v| d[v]).sum();
        let nc: usize = self.rows.iter().map(|&w| d[w]).sum();
        let mut out = Matrix::zeros(nr, nc);
        let mut ro = 0;
        for (r, &v) in self.cols.iter().enumerate() {
            let mut co = 0;
            for (c, &w) in self.rows.iter().enumerate() {
                let blk = m.elem_action(&self.entries[c][r], w, v);
                out.set_block(ro, co, &blk);
                co += d[w];
            }
            ro += d[v];
        }
        out
    }

    /// Dimension of `Hom(⊕ P(cols), ⊕ P(rows))`.
    pub fn hom_space_dim(alg: &Algebra<F>, rows: &[usize], cols: &[usize]) -> usize {
        rows.iter().map(|&w| cols.iter().map(|&v| alg.block(w, v).len()).sum::<usize>()).sum()
    }

    /// Coordinates in the path basis of every entry.
    pub fn to_coords(&self, alg: &Algebra<F>) -> Vec<F> {
        let mut out = Vec::new();
        for (c, &w) in self.rows.iter().enumerate() {
            for (r, &v) in self.cols.iter().enumerate() {
                for &b in alg.block(w, v) {
                    out.push(self.entries[c][r][b]);
                }
            }
        }
        out
    }

    pub fn from_coords(alg: &Algebra<F>, rows: &[usize], cols: &[usize], x: &[F]) -> Self {
        let mut out = Self::zero(alg, rows, cols);
        let mut pos = 0;
        for (c, &w) in rows.iter().enumerate() {
            for (r, &v) in cols.iter().enumerate() {
                for &b in alg.block(w, v) {
                    out.entries[c][r][b] = x[pos];
                    pos += 1;
                }
            }
        }
        out
    }

    pub fn display(&self, alg: &Algebra<F>) -> String {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| alg.display_elem(x)).collect::<Vec<_>>().join(", "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linear_a;
    use crate::field::Fp;
    use crate::module::hom_basis;

    type F3 = Fp<3>;

    #[test]
    fn module_map_roundtrip() {
        let a = linear_a::<F3>(3);
        let src = Module::projective_sum(&a, &[2, 1]);
        let tgt = Module::projective_sum(&a, &[0, 1]);
        for h in hom_basis(&src, &tgt) {
            let pm = PathMatrix::from_module_map(&h, &[2, 1], &[0, 1]);
            assert_eq!(pm.to_module_map(&a).comps(), h.comps());
        }
    }

    #[test]
    fn composition_matches_module_maps() {
        let a = linear_a::<F3>(3);
        let h1 = hom_basis(&Module::projective(&a, 2), &Module::projective(&a, 1));
        let h2 = hom_basis(&Module::projective(&a, 1), &Module::projective(&a, 0));
        let f = PathMatrix::from_module_map(&h1[0], &[2], &[1]);
        let g = PathMatrix::from_module_map(&h2[0], &[1], &[0]);
        let gf = g.mul(&a, &f);
        assert_eq!(gf.to_module_map(&a).comps(), h2[0].after(&h1[0]).comps());
    }

    #[test]
    fn hom_into_matches_composition() {
        let a = linear_a::<F3>(3);
        let h = hom_basis(&Module::projective(&a, 2), &Module::projective(&a, 0));
        let f = PathMatrix::from_module_map(&h[0], &[2], &[0]);
        let m = Module::regular(&a);
        let mat = f.hom_into(&m);
        assert_eq!(mat.shape(), (m.dims()[2], m.dims()[0]));
        for g in hom_basis(&Module::projective(&a, 0), &m) {
            let before = generator_images(&g, &[0]).concat();
            let after = generator_images(&g.after(&f.to_module_map(&a)), &[2]).concat();
            assert_eq!(mat.mul_vec(&before), after);
        }
        assert_eq!(PathMatrix::<F3>::hom_space_dim(&a, &[0], &[2]), 1);
    }
}
