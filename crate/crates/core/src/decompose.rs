//! Krull-Schmidt decomposition and isomorphism tests.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::{hom_basis, submodule, Module, ModuleMap};

/// Exhaustive search over `End(M)` is used up to this many elements.
pub const EXHAUSTIVE_END_LIMIT: u64 = 4096;
pub const RANDOM_END_SAMPLES: usize = 512;
const DECOMPOSE_SEED: u64 = 0x5eed_dec0;

/// Summands with inclusions into the original module.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub summands: Vec<Module<F>>,
    pub inclusions: Vec<ModuleMap<F>>,
    /// False if some locality decision relied on random sampling.
    pub exact: bool,
}

fn power_rank<F: Field>(f: &ModuleMap<F>, n: u64) -> usize {
    f.comps().iter().map(|m| m.pow(n).rank()).sum()
}

/// Whether `f` is neither nilpotent nor invertible.
fn splits<F: Field>(f: &ModuleMap<F>, dim: usize) -> bool {
    let r = power_rank(f, dim as u64);
    r > 0 && r < dim
}

/// An endomorphism that is neither nilpotent nor invertible, if one is found.
/// The flag is false when the search fell back to random sampling.
pub fn find_splitting_endomorphism<F: Field>(m: &Module<F>) -> (Option<ModuleMap<F>>, bool) {
    let dim = m.dim();
    if dim <= 1 {
        return (None, true);
    }
    let basis = hom_basis(m, m);
    let d = basis.len();
    if d <= 1 {
        return (None, true);
    }
    let id = ModuleMap::identity(m);
    for b in &basis {
        if splits(b, dim) {
            return (Some(b.clone()), true);
        }
        for l in F::elements().into_iter().skip(1) {
            let c = b.sub(&id.scale(l));
            if splits(&c, dim) {
                return (Some(c), true);
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            if i < j {
                let s = basis[i].add(&basis[j]);
                if splits(&s, dim) {
                    return (Some(s), true);
                }
            }
            let p = basis[i].after(&basis[j]);
            if splits(&p, dim) {
                return (Some(p), true);
            }
        }
    }
    let q = F::order();
    let total = q.checked_pow(d as u32);
    match total {
        Some(t) if t <= EXHAUSTIVE_END_LIMIT => {
            let mut coeffs = vec![F::zero(); d];
            for code in 1..t {
                let mut c = code;
                for x in coeffs.iter_mut() {
                    *x = F::from_index(c % q);
                    c /= q;
                }
                let f = ModuleMap::combination(&basis, &coeffs, m, m);
                if splits(&f, dim) {
                    return (Some(f), true);
                }
            }
            (None, true)
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(DECOMPOSE_SEED ^ dim as u64);
            for _ in 0..RANDOM_END_SAMPLES {
                let coeffs: Vec<F> = (0..d).map(|_| F::random(&mut rng)).collect();
                let f = ModuleMap::combination(&basis, &coeffs, m, m);
                if splits(&f, dim) {
                    return (Some(f), false);
                }
            }
            (None, false)
        }
    }
}

/// Fitting decomposition `M = ker f^N ⊕ im f^N`.
fn fitting_split<F: Field>(m: &Module<F>, f: &ModuleMap<F>) -> (ModuleMap<F>, ModuleMap<F>) {
    let n = m.dim() as u64;
    let powers: Vec<Matrix<F>> = f.comps().iter().map(|c| c.pow(n)).collect();
    let kers: Vec<Matrix<F>> = powers.iter().map(|p| p.kernel_matrix()).collect();
    let ims: Vec<Matrix<F>> = powers.iter().map(|p| p.column_space()).collect();
    (submodule(m, &kers), submodule(m, &ims))
}

pub fn decompose<F: Field>(m: &Module<F>) -> Decomposition<F> {
    if m.is_zero() {
        return Decomposition { summands: Vec::new(), inclusions: Vec::new(), exact: true };
    }
    let (f, exact) = find_splitting_endomorphism(m);
    match f {
        None => Decomposition {
            summands: vec![m.clone()],
            inclusions: vec![ModuleMap::identity(m)],
            exact,
        },
        Some(f) => {
            let (a, b) = fitting_split(m, &f);
            let mut out = Decomposition { summands: Vec::new(), inclusions: Vec::new(), exact };
            for incl in [a, b] {
                let sub = decompose(&incl.source);
                out.exact &= sub.exact;
                for (s, i) in sub.summands.into_iter().zip(sub.inclusions) {
                    out.summands.push(s);
                    out.inclusions.push(incl.after(&i));
                }
            }
            out
        }
    }
}

pub fn is_indecomposable<F: Field>(m: &Module<F>) -> bool {
    !m.is_zero() && find_splitting_endomorphism(m).0.is_none()
}

/// An isomorphism between indecomposables, found by scanning a hom basis.
pub fn iso_indecomposable<F: Field>(x: &Module<F>, y: &Module<F>) -> Option<ModuleMap<F>> {
    if x.dims() != y.dims() {
        return None;
    }
    if x.is_zero() {
        return Some(ModuleMap::zero(x, y));
    }
    hom_basis(x, y).into_iter().find(|h| h.is_iso())
}

/// Isomorphism test via decompositions and multiset matching.
pub fn iso_test<F: Field>(m: &Module<F>, n: &Module<F>) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let a = decompose(m).summands;
    let mut b = decompose(n).summands;
    if a.len() != b.len() {
        return false;
    }
    for x in &a {
        match b.iter().position(|y| iso_indecomposable(x, y).is_some()) {
            Some(i) => {
                b.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Distinct indecomposable summands, each with its multiplicity.
pub fn basic_summands<F: Field>(m: &Module<F>) -> Vec<(Module<F>, usize)> {
    group_isoclasses(decompose(m).summands)
}

pub fn group_isoclasses<F: Field>(mods: Vec<Module<F>>) -> Vec<(Module<F>, usize)> {
    let mut out: Vec<(Module<F>, usize)> = Vec::new();
    for x in mods {
        match out.iter_mut().find(|(y, _)| iso_indecomposable(&x, y).is_some()) {
            Some(e) => e.1 += 1,
            None => out.push((x, 1)),
        }
    }
    out
}

/// Number of pairwise non-isomorphic indecomposable summands.
pub fn num_distinct_summands<F: Field>(m: &Module<F>) -> usize {
    basic_summands(m).len()
}

/// Position of the isoclass of an indecomposable in a list.
pub fn find_isoclass<F: Field>(list: &[Module<F>], x: &Module<F>) -> Option<usize> {
    list.iter().position(|y| iso_indecomposable(x, y).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, linear_a, Quiver, Relation};
    use crate::field::Fp;
    use std::sync::Arc;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    #[test]
    fn regular_module_splits_into_projectives() {
        let a = linear_a::<F2>(3);
        let d = decompose(&Module::regular(&a));
        assert_eq!(d.summands.len(), 3);
        assert!(d.exact);
        for (s, i) in d.summands.iter().zip(&d.inclusions) {
            assert!(i.is_injective());
            assert!(is_indecomposable(s));
        }
    }

    #[test]
    fn kronecker_regular_indecomposables() {
        let q = Quiver::from_spec(&["1", "2"], &[("x", 0, 1), ("y", 0, 1)]).unwrap();
        let a = build_algebra::<F3>(q, Vec::<Relation<F3>>::new()).unwrap();
        let one = Matrix::<F3>::identity(1);
        // regular module of the Kronecker with parameter 1: x=1, y=1
        let m = Module::new(a.clone(), vec![1, 1], vec![one.clone(), one.clone()]).unwrap();
        assert!(is_indecomposable(&m));
        let n = Module::new(a.clone(), vec![1, 1], vec![one.clone(), one.scale(F3::new(2))]).unwrap();
        assert!(!iso_test(&m, &n));
        assert!(iso_test(&m.direct_sum(&n), &n.direct_sum(&m)));
    }

    #[test]
    fn split_algebra_local_test_is_not_fooled() {
        // M = S ⊕ S for a one-vertex algebra: End = M_2(k), every basis element
        // of the chosen basis below is nilpotent or invertible.
        let q = Quiver::from_spec(&["1"], &[]).unwrap();
        let a: Arc<crate::algebra::Algebra<F2>> = build_algebra(q, Vec::new()).unwrap();
        let m = Module::simple(&a, 0).power(2);
        assert_eq!(decompose(&m).summands.len(), 2);
    }

    #[test]
    fn transported_modules_are_isomorphic() {
        let a = linear_a::<F3>(3);
        let m = Module::regular(&a);
        let g: Vec<Matrix<F3>> = m
            .dims()
            .iter()
            .map(|&d| {
                let mut x = Matrix::identity(d);
                if d > 1 {
                    x[(0, 1)] = F3::new(2);
                }
                x
            })
            .collect();
        let n = m.transport(&g);
        assert!(iso_test(&m, &n));
    }
}
