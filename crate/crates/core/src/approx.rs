//! Minimal add(T)-approximations.

use crate::decompose::{basic_summands, decompose, find_isoclass};
use crate::field::Field;
use crate::matrix::span_rank;
use crate::module::{hom_basis, Module, ModuleMap};

/// The additive closure of a module, with hom spaces between its
/// indecomposable summands precomputed.
#[derive(Clone, Debug)]
pub struct AddCategory<F: Field> {
    pub module: Module<F>,
    pub summands: Vec<Module<F>>,
    pub multiplicities: Vec<usize>,
    homs: Vec<Vec<Vec<ModuleMap<F>>>>,
}

/// An approximation map together with the summand index of each direct summand
/// of its `add(T)` end.
#[derive(Clone, Debug)]
pub struct Approximation<F: Field> {
    pub map: ModuleMap<F>,
    pub summands: Vec<usize>,
}

impl<F: Field> AddCategory<F> {
    pub fn new(t: &Module<F>) -> Self {
        let groups = basic_summands(t);
        let summands: Vec<Module<F>> = groups.iter().map(|(m, _)| m.clone()).collect();
        let multiplicities = groups.iter().map(|(_, k)| *k).collect();
        let homs = summands
            .iter()
            .map(|a| summands.iter().map(|b| hom_basis(a, b)).collect())
            .collect();
        AddCategory { module: t.clone(), summands, multiplicities, homs }
    }

    /// `⊕ T_j` over distinct indecomposable summands.
    pub fn basic(&self) -> Module<F> {
        Module::direct_sum_all(self.module.algebra(), &self.summands)
    }

    pub fn sum_of(&self, idx: &[usize]) -> Module<F> {
        let parts: Vec<Module<F>> = idx.iter().map(|&i| self.summands[i].clone()).collect();
        Module::direct_sum_all(self.module.algebra(), &parts)
    }

    pub fn contains(&self, m: &Module<F>) -> bool {
        decompose(m).summands.iter().all(|x| find_isoclass(&self.summands, x).is_some())
    }

    fn right_generates(&self, j: usize, chosen: &[(usize, ModuleMap<F>)], target_dim: usize) -> bool {
        let mut vecs = Vec::new();
        for (l, phi) in chosen {
            for b in &self.homs[j][*l] {
                vecs.push(phi.after(b).flatten());
            }
        }
        let n = vecs.first().map(|v| v.len()).unwrap_or(0);
        span_rank(n, &vecs) == target_dim
    }

    fn left_generates(&self, j: usize, chosen: &[(usize, ModuleMap<F>)], target_dim: usize) -> bool {
        let mut vecs = Vec::new();
        for (l, phi) in chosen {
            for b in &self.homs[*l][j] {
                vecs.push(b.after(phi).flatten());
            }
        }
        let n = vecs.first().map(|v| v.len()).unwrap_or(0);
        span_rank(n, &vecs) == target_dim
    }

    /// Minimal right `add(T)`-approximation `T' -> M`.
    pub fn right_approx(&self, m: &Module<F>) -> Approximation<F> {
        let hom: Vec<Vec<ModuleMap<F>>> = self.summands.iter().map(|t| hom_basis(t, m)).collect();
        let mut chosen: Vec<(usize, ModuleMap<F>)> = Vec::new();
        for (j, hs) in hom.iter().enumerate() {
            for h in hs {
                chosen.push((j, h.clone()));
            }
        }
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let removed = chosen.remove(i);
            let ok = (0..self.summands.len()).all(|j| self.right_generates(j, &chosen, hom[j].len()));
            if !ok {
                chosen.insert(i, removed);
            }
        }
        let summands: Vec<usize> = chosen.iter().map(|(j, _)| *j).collect();
        let maps: Vec<ModuleMap<F>> = chosen.into_iter().map(|(_, h)| h).collect();
        let map = if maps.is_empty() {
            ModuleMap::zero(&Module::zero(m.algebra()), m)
        } else {
            ModuleMap::hstack(&maps, m)
        };
        Approximation { map, summands }
    }

    /// Minimal left `add(T)`-approximation `M -> T'`.
    pub fn left_approx(&self, m: &Module<F>) -> Approximation<F> {
        let hom: Vec<Vec<ModuleMap<F>>> = self.summands.iter().map(|t| hom_basis(m, t)).collect();
        let mut chosen: Vec<(usize, ModuleMap<F>)> = Vec::new();
        for (j, hs) in hom.iter().enumerate() {
            for h in hs {
                chosen.push((j, h.clone()));
            }
        }
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let removed = chosen.remove(i);
            let ok = (0..self.summands.len()).all(|j| self.left_generates(j, &chosen, hom[j].len()));
            if !ok {
                chosen.insert(i, removed);
            }
        }
        let summands: Vec<usize> = chosen.iter().map(|(j, _)| *j).collect();
        let maps: Vec<ModuleMap<F>> = chosen.into_iter().map(|(_, h)| h).collect();
        let map = if maps.is_empty() {
            ModuleMap::zero(m, &Module::zero(m.algebra()))
        } else {
            ModuleMap::vstack(&maps, m)
        };
        Approximation { map, summands }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linear_a;
    use crate::field::Fp;
    use crate::module::in_gen;

    type F2 = Fp<2>;

    #[test]
    fn right_approx_of_gen_member_is_onto() {
        let a = linear_a::<F2>(2);
        let p1 = Module::projective(&a, 0);
        let t = p1.power(2);
        let cat = AddCategory::new(&t);
        assert_eq!(cat.summands.len(), 1);
        assert_eq!(cat.multiplicities, vec![2]);
        let s1 = Module::simple(&a, 0);
        let ap = cat.right_approx(&s1);
        assert_eq!(ap.summands, vec![0]);
        assert!(ap.map.is_surjective());
        assert!(in_gen(&t, &s1));
    }

    #[test]
    fn left_approx_of_projective() {
        let a = linear_a::<F2>(2);
        let s1 = Module::simple(&a, 0);
        let cat = AddCategory::new(&s1);
        let p1 = Module::projective(&a, 0);
        let ap = cat.left_approx(&p1);
        assert_eq!(ap.summands.len(), 1);
        assert!(ap.map.is_surjective());
        let ap2 = cat.left_approx(&Module::projective(&a, 1));
        assert!(ap2.summands.is_empty());
    }

    #[test]
    fn redundant_copies_dropped() {
        let a = linear_a::<F2>(2);
        let p1 = Module::projective(&a, 0);
        let cat = AddCategory::new(&p1.direct_sum(&Module::simple(&a, 1)));
        let m = Module::regular(&a);
        let ap = cat.right_approx(&m);
        assert_eq!(ap.summands.len(), 2);
        assert!(ap.map.is_iso());
    }
}
