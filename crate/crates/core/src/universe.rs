//! Bounded censuses of indecomposable modules and the counterexample hunter.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::decompose::{iso_test, is_indecomposable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::Module;
use crate::verdict::Tri;

/// Largest number of arrow-matrix tuples enumerated in one census.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 22;
/// Largest vertex-group order used for orbit marking; above it, orbit
/// representatives are deduplicated with `iso_test` instead.
pub const GROUP_ORBIT_CAP: u128 = 1 << 14;
pub const DEFAULT_BOUND_PER_VERTEX: usize = 2;

/// Indecomposable modules with dimension vector `≤ bound`, one per isoclass.
#[derive(Clone, Debug)]
pub struct Census<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub bound: Vec<usize>,
    pub modules: Vec<Module<F>>,
    pub method: String,
    pub seed: u64,
}

impl<F: Field> Census<F> {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// A census given by an explicit list, e.g. read back from a file.
    pub fn from_modules(alg: &Arc<Algebra<F>>, bound: Vec<usize>, modules: Vec<Module<F>>) -> Self {
        Census { algebra: alg.clone(), bound, modules, method: "imported".into(), seed: 0 }
    }
}

fn dim_vectors(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.retain(|d| d.iter().any(|&x| x > 0));
    out.sort_by_key(|d| (d.iter().sum::<usize>(), d.clone()));
    out
}

fn num_entries<F: Field>(alg: &Algebra<F>, d: &[usize]) -> usize {
    alg.quiver().arrows.iter().map(|a| d[a.source] * d[a.target]).sum()
}

fn gl_order(q: u128, d: usize) -> u128 {
    let qd = q.pow(d as u32);
    (0..d).map(|i| qd - q.pow(i as u32)).product()
}

/// Total number of arrow-matrix tuples a census with this bound visits.
pub fn enumeration_size<F: Field>(alg: &Algebra<F>, bound: &[usize]) -> u128 {
    let q = F::order() as u128;
    dim_vectors(bound)
        .iter()
        .map(|d| q.saturating_pow(num_entries(alg, d) as u32))
        .fold(0u128, |a, b| a.saturating_add(b))
}

pub fn census<F: Field>(alg: &Arc<Algebra<F>>, bound: &[usize]) -> Result<Census<F>> {
    census_with_cap(alg, bound, DEFAULT_ENUMERATION_CAP)
}

/// Enumerates every representation with dimension vector `≤ bound`
/// satisfying the relations and keeps one indecomposable per isoclass.
pub fn census_with_cap<F: Field>(alg: &Arc<Algebra<F>>, bound: &[usize], cap: u128) -> Result<Census<F>> {
    if bound.len() != alg.num_vertices() {
        return Err(Error::Shape(format!(
            "bound has {} entries, algebra has {} vertices",
            bound.len(),
            alg.num_vertices()
        )));
    }
    let estimate = enumeration_size(alg, bound);
    if estimate > cap {
        return Err(Error::CapExceeded { what: "census enumeration".into(), estimate, cap });
    }
    let parts: Vec<Vec<Module<F>>> = dim_vectors(bound).par_iter().map(|d| enumerate_dim(alg, d)).collect();
    Ok(Census {
        algebra: alg.clone(),
        bound: bound.to_vec(),
        modules: parts.into_iter().flatten().collect(),
        method: format!("orbit enumeration over F_{}", F::order()),
        seed: 0,
    })
}

fn invertible_matrices<F: Field>(d: usize) -> Vec<(Matrix<F>, Matrix<F>)> {
    let q = F::order();
    let total = q.pow((d * d) as u32);
    (0..total)
        .filter_map(|mut idx| {
            let m = Matrix::from_fn(d, d, |_, _| {
                let x = F::from_index(idx % q);
                idx /= q;
                x
            });
            m.inverse().map(|inv| (m, inv))
        })
        .collect()
}

struct Layout {
    /// `(arrow, rows, cols, offset)` for each arrow block of the tuple.
    blocks: Vec<(usize, usize, usize, usize)>,
    len: usize,
}

impl Layout {
    fn new<F: Field>(alg: &Algebra<F>, d: &[usize]) -> Self {
        let mut blocks = Vec::new();
        let mut off = 0;
        for (i, a) in alg.quiver().arrows.iter().enumerate() {
            let (r, c) = (d[a.target], d[a.source]);
            blocks.push((i, r, c, off));
            off += r * c;
        }
        Layout { blocks, len: off }
    }

    fn decode<F: Field>(&self, mut idx: u64) -> Vec<Matrix<F>> {
        let q = F::order();
        let mut digits = Vec::with_capacity(self.len);
        for _ in 0..self.len {
            digits.push(F::from_index(idx % q));
            idx /= q;
        }
        self.blocks
            .iter()
            .map(|&(_, r, c, off)| Matrix::from_fn(r, c, |i, j| digits[off + i * c + j]))
            .collect()
    }

    fn encode<F: Field>(&self, maps: &[Matrix<F>]) -> u64 {
        let q = F::order();
        let mut idx = 0u64;
        let mut mult = 1u64;
        for (&(_, r, c, _), m) in self.blocks.iter().zip(maps) {
            for i in 0..r {
                for j in 0..c {
                    idx += m[(i, j)].to_index() * mult;
                    mult *= q;
                }
            }
        }
        idx
    }
}

fn enumerate_dim<F: Field>(alg: &Arc<Algebra<F>>, d: &[usize]) -> Vec<Module<F>> {
    let layout = Layout::new(alg, d);
    let q = F::order() as u128;
    let total = q.pow(layout.len as u32) as u64;
    let group_order: u128 = d.iter().map(|&x| gl_order(q, x)).product();
    let arrows = &alg.quiver().arrows;
    let mut found: Vec<Module<F>> = Vec::new();
    if group_order <= GROUP_ORBIT_CAP {
        let groups: Vec<Vec<(Matrix<F>, Matrix<F>)>> = d.iter().map(|&x| invertible_matrices(x)).collect();
        let mut seen = vec![false; total as usize];
        for idx in 0..total {
            if seen[idx as usize] {
                continue;
            }
            let maps = layout.decode::<F>(idx);
            let mut g = vec![0usize; d.len()];
            loop {
                let moved: Vec<Matrix<F>> = arrows
                    .iter()
                    .zip(&maps)
                    .map(|(a, m)| groups[a.target][g[a.target]].0.mul(m).mul(&groups[a.source][g[a.source]].1))
                    .collect();
                seen[layout.encode(&moved) as usize] = true;
                let mut v = 0;
                while v < d.len() {
                    g[v] += 1;
                    if g[v] < groups[v].len() {
                        break;
                    }
                    g[v] = 0;
                    v += 1;
                }
                if v == d.len() {
                    break;
                }
            }
            if let Ok(m) = Module::new(alg.clone(), d.to_vec(), maps) {
                if is_indecomposable(&m) {
                    found.push(m);
                }
            }
        }
    } else {
        for idx in 0..total {
            let maps = layout.decode::<F>(idx);
            if let Ok(m) = Module::new(alg.clone(), d.to_vec(), maps) {
                if is_indecomposable(&m) && !found.iter().any(|x| iso_test(x, &m)) {
                    found.push(m);
                }
            }
        }
    }
    found
}

/// First census module satisfying `a` but not `b`.
pub fn check_inclusion<F: Field>(
    census: &Census<F>,
    a: impl Fn(&Module<F>) -> bool,
    b: impl Fn(&Module<F>) -> bool,
) -> (bool, Option<Module<F>>) {
    match census.modules.iter().find(|m| a(m) && !b(m)) {
        Some(m) => (false, Some(m.clone())),
        None => (true, None),
    }
}

/// Basic modules `⊕_{i ∈ S} M_i` for subsets `S` of the census with
/// `|S| ≤ max_summands`, including the zero module.
pub fn basic_modules<F: Field>(census: &Census<F>, max_summands: usize) -> Vec<Module<F>> {
    let n = census.modules.len();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((start, chosen)) = stack.pop() {
        let parts: Vec<Module<F>> = chosen.iter().map(|&i| census.modules[i].clone()).collect();
        out.push((chosen.clone(), Module::direct_sum_all(&census.algebra, &parts)));
        if chosen.len() < max_summands {
            for i in (start..n).rev() {
                let mut c = chosen.clone();
                c.push(i);
                stack.push((i + 1, c));
            }
        }
    }
    out.sort_by(|x, y| (x.0.len(), &x.0).cmp(&(y.0.len(), &y.0)));
    out.into_iter().map(|(_, m)| m).collect()
}

/// A candidate found by [`hunt_question1`].
#[derive(Clone, Debug, Serialize)]
pub struct HuntHit {
    pub dims: Vec<usize>,
    pub strongly: Tri,
    pub module: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct HuntReport {
    pub n: usize,
    pub universe_bound: Vec<usize>,
    pub candidates: usize,
    pub n_air: usize,
    /// `n`-AIR but not strongly `n`-AIR within the bound.
    pub separating: Vec<HuntHit>,
    /// `n`-AIR with the strong condition left undecided.
    pub undecided: Vec<HuntHit>,
}

/// Searches the basic modules assembled from the census for modules that are
/// `n`-AIR-tilting but not strongly so within the census bound.
pub fn hunt_question1<F: Field>(census: &Census<F>, n: usize, max_summands: usize) -> HuntReport {
    use crate::classifier::{is_n_air, is_strongly_n_air};
    use crate::format::print_module;
    let cands = basic_modules(census, max_summands);
    let results: Vec<(bool, Option<HuntHit>)> = cands
        .par_iter()
        .map(|t| {
            if !is_n_air(t, n) {
                return (false, None);
            }
            let s = is_strongly_n_air(t, n, census).verdict.value;
            let hit = (s != Tri::Yes).then(|| HuntHit { dims: t.dims().to_vec(), strongly: s, module: print_module(t) });
            (true, hit)
        })
        .collect();
    let mut report = HuntReport {
        n,
        universe_bound: census.bound.clone(),
        candidates: cands.len(),
        n_air: 0,
        separating: Vec::new(),
        undecided: Vec::new(),
    };
    for (air, hit) in results {
        report.n_air += air as usize;
        if let Some(h) = hit {
            if h.strongly == Tri::No {
                report.separating.push(h);
            } else {
                report.undecided.push(h);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linear_a;
    use crate::field::Fp;

    type F2 = Fp<2>;

    #[test]
    fn a2_census() {
        let a = linear_a::<F2>(2);
        let c = census(&a, &[1, 1]).unwrap();
        assert_eq!(c.len(), 3);
        let c = census(&a, &[2, 2]).unwrap();
        assert_eq!(c.len(), 3);
        assert!(census(&a, &[0, 0]).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let a = linear_a::<F2>(2);
        match census_with_cap(&a, &[3, 3], 100) {
            Err(Error::CapExceeded { estimate, .. }) => assert!(estimate > 100),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn basic_module_count() {
        let a = linear_a::<F2>(2);
        let c = census(&a, &[1, 1]).unwrap();
        assert_eq!(basic_modules(&c, 3).len(), 8);
        assert_eq!(basic_modules(&c, 1).len(), 4);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(2, 3), 168);
        assert_eq!(gl_order(3, 2), 48);
        assert_eq!(invertible_matrices::<F2>(2).len(), 6);
    }
}
