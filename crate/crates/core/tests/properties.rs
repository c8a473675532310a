mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;

use common::{load, random_map, random_sum, rng};
use tilting::complex::{decompose_complex, hom_k_dim, homotopy_equivalent, ProjComplex};
use tilting::format::{parse_algebra, parse_complex, parse_module, print_algebra, print_complex, print_module, sorted_complex};
use tilting::homological::{d_sigma_t_membership, min_presentation, Presentation};
use tilting::projective::PathMatrix;
use tilting::universe::census;
use tilting::{build_algebra, Algebra, Field, Module, ModuleMap, Path, Quiver, Relation, F2, F3};

const CASES: [&str; 3] = ["kronecker_chain.case", "oriented_three_cycle.case", "a2_apr_tilt.case"];

struct Setting<F: Field> {
    alg: Arc<Algebra<F>>,
    pool: Vec<Module<F>>,
    t: Module<F>,
}

fn setting<F: Field>(i: usize) -> Setting<F> {
    let c = load::<F>(CASES[i % CASES.len()]);
    let pool = census(&c.alg, &vec![1; c.alg.num_vertices()]).unwrap().modules;
    Setting { alg: c.alg, pool, t: c.t }
}

/// A quotient of a sum of census modules.
fn random_module<F: Field>(s: &Setting<F>, seed: u64) -> Module<F> {
    let mut r = rng(seed);
    let c = random_sum(&s.alg, &s.pool, 3, &mut r);
    let z = random_sum(&s.alg, &s.pool, 1, &mut r);
    random_map(&z, &c, &mut r).cokernel().target
}

fn random_complex<F: Field>(s: &Setting<F>, seed: u64) -> ProjComplex<F> {
    let mut r = rng(seed ^ 0x9e37);
    let m = random_module(s, seed);
    let k = r.gen_range(0..=2);
    let c = ProjComplex::truncated(&min_presentation(&m, k));
    c.shift(r.gen_range(-1..=1))
}

fn contractible<F: Field>(alg: &Arc<Algebra<F>>, v: usize, degree: i64) -> ProjComplex<F> {
    ProjComplex::new(alg, degree, vec![vec![v], vec![v]], vec![PathMatrix::identity(alg, &[v])]).unwrap()
}

/// `σ` with `P(v) --1--> P(v)` added in positions `i + 1` and `i`.
fn pad_presentation<F: Field>(p: &Presentation<F>, i: usize, v: usize) -> Presentation<F> {
    let alg = p.algebra().clone();
    let mut q = p.clone();
    q.terms[i].push(v);
    q.terms[i + 1].push(v);
    q.diffs[i] = PathMatrix::block_diag(&alg, &[&p.diffs[i], &PathMatrix::identity(&alg, &[v])]);
    if i > 0 {
        q.diffs[i - 1] = PathMatrix::block_diag(&alg, &[&p.diffs[i - 1], &PathMatrix::zero(&alg, &[], &[v])]);
    } else {
        let zero = ModuleMap::zero(&Module::projective(&alg, v), &p.module);
        q.augmentation = ModuleMap::hstack(&[p.augmentation.clone(), zero], &p.module);
    }
    if i + 1 < p.diffs.len() {
        q.diffs[i + 1] = PathMatrix::block_diag(&alg, &[&p.diffs[i + 1], &PathMatrix::zero(&alg, &[v], &[])]);
    }
    q
}

/// A random acyclic quiver with random relations among parallel paths of length two.
fn random_algebra<F: Field>(seed: u64) -> Arc<Algebra<F>> {
    let mut r = rng(seed);
    let nv = r.gen_range(2..=4);
    let names: Vec<String> = (1..=nv).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    for k in 0..r.gen_range(1..=5) {
        let s = r.gen_range(0..nv - 1);
        let t = r.gen_range(s + 1..nv);
        arrows.push((format!("a{k}"), s, t));
    }
    let spec: Vec<(&str, usize, usize)> = arrows.iter().map(|(n, s, t)| (n.as_str(), *s, *t)).collect();
    let vs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let q = Quiver::from_spec(&vs, &spec).unwrap();
    let mut relations = Vec::new();
    for (i, a) in q.arrows.iter().enumerate() {
        for (j, b) in q.arrows.iter().enumerate() {
            if a.target == b.source && r.gen_bool(0.5) {
                let p = Path::arrow(&q, i).concat(&Path::arrow(&q, j)).unwrap();
                let mut terms = vec![(F::one(), p)];
                for (k, c) in q.arrows.iter().enumerate() {
                    for (l, d) in q.arrows.iter().enumerate() {
                        let parallel = c.source == a.source && d.target == b.target && c.target == d.source;
                        if parallel && (k, l) > (i, j) && r.gen_bool(0.3) {
                            let coeff = F::from_index(r.gen_range(1..F::order()));
                            terms.push((coeff, Path::arrow(&q, k).concat(&Path::arrow(&q, l)).unwrap()));
                        }
                    }
                }
                relations.push(Relation::new(terms));
            }
        }
    }
    build_algebra(q, relations).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn module_text_round_trip(i in 0usize..3, seed in any::<u64>()) {
        let s = setting::<F3>(i);
        let m = random_module(&s, seed);
        let back = parse_module(&print_module(&m), &s.alg).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn algebra_text_round_trip(seed in any::<u64>()) {
        let alg = random_algebra::<F3>(seed);
        let text = print_algebra(&alg);
        let back = parse_algebra::<F3>(&text).unwrap();
        prop_assert_eq!(back.dim(), alg.dim());
        prop_assert_eq!(print_algebra(&back), text);
    }

    #[test]
    fn complex_text_round_trip(i in 0usize..3, seed in any::<u64>()) {
        let s = setting::<F2>(i);
        let c = random_complex(&s, seed);
        let text = print_complex(&c);
        let back = parse_complex(&text, &s.alg).unwrap();
        let sorted = sorted_complex(&c);
        prop_assert_eq!(print_complex(&back), text);
        prop_assert_eq!(back.lo(), sorted.lo());
        for k in c.lo()..c.hi() {
            prop_assert_eq!(back.diff(k), sorted.diff(k));
        }
    }

    #[test]
    fn hom_in_homotopy_category_is_shift_equivariant(i in 0usize..3, a in any::<u64>(), b in any::<u64>(), j in -2i64..=2) {
        let s = setting::<F2>(i);
        let (c, d) = (random_complex(&s, a), random_complex(&s, b));
        for k in -1..=2 {
            prop_assert_eq!(hom_k_dim(&c, &d, k), hom_k_dim(&c.shift(j), &d.shift(j), k));
        }
    }

    #[test]
    fn euler_characteristic_equals_homology(i in 0usize..3, seed in any::<u64>()) {
        let s = setting::<F2>(i);
        let c = random_complex(&s, seed);
        let nv = s.alg.num_vertices();
        let mut chi = vec![0i64; nv];
        for k in c.lo()..=c.hi() {
            let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
            for (x, d) in chi.iter_mut().zip(c.homology(k).dims()) {
                *x += sign * *d as i64;
            }
        }
        prop_assert_eq!(c.euler_characteristic(), chi);
    }

    #[test]
    fn contractible_summands_change_nothing(i in 0usize..3, a in any::<u64>(), b in any::<u64>(), v in 0usize..3, deg in -2i64..=1) {
        let s = setting::<F2>(i);
        let v = v % s.alg.num_vertices();
        let (c, d) = (random_complex(&s, a), random_complex(&s, b));
        let padded = c.direct_sum(&contractible(&s.alg, v, deg));
        prop_assert!(homotopy_equivalent(&padded, &c).unwrap());
        prop_assert!(padded.strip().is_minimal());
        let mults = |x: &ProjComplex<F2>| {
            let mut m: Vec<(Vec<Vec<usize>>, usize)> =
                decompose_complex(x).unwrap().into_iter().map(|(y, k)| (y.term_multiplicities(), k)).collect();
            m.sort();
            m
        };
        prop_assert_eq!(mults(&padded), mults(&c));
        for k in -1..=2 {
            prop_assert_eq!(hom_k_dim(&padded, &d, k), hom_k_dim(&c, &d, k));
        }
    }

    #[test]
    fn d_classes_ignore_contractible_summands(i in 0usize..3, seed in any::<u64>(), v in 0usize..3, pos in 0usize..2) {
        let s = setting::<F2>(i);
        let v = v % s.alg.num_vertices();
        let n = 2;
        let sigma = min_presentation(&s.t, n);
        let padded = pad_presentation(&sigma, pos, v);
        let m = random_module(&s, seed);
        for k in 1..=n {
            prop_assert_eq!(d_sigma_t_membership(&padded, k, &m), d_sigma_t_membership(&sigma, k, &m));
        }
    }
}
