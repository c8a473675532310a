#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tilting::approx::AddCategory;
use tilting::complex::ProjComplex;
use tilting::corpus::builtin;
use tilting::format::{algebra_from_section, complex_from_section, module_from_section, sections};
use tilting::homological::{
    appres_membership, d_sigma_a_membership, d_sigma_t_membership, left_approx_tower, min_presentation, Presentation,
};
use tilting::module::{hom_basis, in_gen, projective_cover};
use tilting::universe::{census, Census};
use tilting::{Algebra, Field, Module, ModuleMap};

pub struct Case<F: Field> {
    pub name: String,
    pub alg: Arc<Algebra<F>>,
    pub t: Module<F>,
    pub n: usize,
    pub bound: Vec<usize>,
    pub complex: Option<ProjComplex<F>>,
}

/// A built-in corpus case read over the field `F`.
pub fn load<F: Field>(file: &str) -> Case<F> {
    let text = builtin().into_iter().find(|(n, _)| n == file).unwrap_or_else(|| panic!("no case {file}")).1;
    let text = text.replace("field 2", &format!("field {}", F::order()));
    let secs = sections(&text).unwrap();
    let sec = |name: &str| secs.iter().find(|s| s.name == name);
    let alg = algebra_from_section::<F>(sec("algebra").unwrap()).unwrap();
    let t = module_from_section(sec("module").unwrap(), &alg).unwrap();
    let complex = sec("complex").map(|s| complex_from_section(s, &alg).unwrap());
    let mut name = String::new();
    let mut n = 1;
    let mut bound = vec![2; alg.num_vertices()];
    for (_, l) in &sec("case").unwrap().lines {
        let (k, v) = l.trim().split_once(' ').unwrap();
        match k {
            "name" => name = v.into(),
            "n" => n = v.parse().unwrap(),
            "bound" => bound = v.split_whitespace().map(|x| x.parse().unwrap()).collect(),
            _ => panic!("unexpected key {k}"),
        }
    }
    Case { name, alg, t, n, bound, complex }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_map<F: Field>(x: &Module<F>, y: &Module<F>, rng: &mut ChaCha8Rng) -> ModuleMap<F> {
    let basis = hom_basis(x, y);
    let coeffs: Vec<F> = basis.iter().map(|_| F::random(rng)).collect();
    ModuleMap::combination(&basis, &coeffs, x, y)
}

/// A sum of one to `max` modules drawn from `pool`.
pub fn random_sum<F: Field>(alg: &Arc<Algebra<F>>, pool: &[Module<F>], max: usize, rng: &mut ChaCha8Rng) -> Module<F> {
    let k = rng.gen_range(1..=max);
    let parts: Vec<Module<F>> = (0..k).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    Module::direct_sum_all(alg, &parts)
}

/// A random extension `0 -> X -> E -> Y -> 0`, as the pushout of
/// `Ω Y -> P` along a random map `Ω Y -> X`. Returns `E` and whether the
/// chosen map was nonzero.
pub fn random_extension<F: Field>(x: &Module<F>, y: &Module<F>, rng: &mut ChaCha8Rng) -> (Module<F>, bool) {
    let cover = projective_cover(y);
    let incl = cover.map.kernel();
    let f = random_map(&incl.source, x, rng);
    let nonzero = !f.is_zero();
    let glue = ModuleMap::vstack(&[f, incl.scale(-F::one())], &incl.source);
    (glue.cokernel().target, nonzero)
}

#[derive(Default, Debug)]
pub struct Tally {
    pub trials: usize,
    pub nontrivial: usize,
    pub failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, nontrivial: bool, what: impl FnOnce() -> String) {
        self.trials += 1;
        if nontrivial {
            self.nontrivial += 1;
        }
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn absorb(&mut self, o: Tally) {
        self.trials += o.trials;
        self.nontrivial += o.nontrivial;
        self.failures.extend(o.failures);
    }
}

/// Results of the randomized closure properties of the classes `D_{σ,k}`.
#[derive(Default, Debug)]
pub struct ClosureReport {
    pub extensions: Tally,
    pub mono_cokernels: Tally,
    pub k_images: Tally,
    pub epi_kernels: Tally,
    pub appres: Tally,
}

impl ClosureReport {
    pub fn absorb(&mut self, o: ClosureReport) {
        self.extensions.absorb(o.extensions);
        self.mono_cokernels.absorb(o.mono_cokernels);
        self.k_images.absorb(o.k_images);
        self.epi_kernels.absorb(o.epi_kernels);
        self.appres.absorb(o.appres);
    }

    pub fn tallies(&self) -> [(&'static str, &Tally); 5] {
        [
            ("extensions", &self.extensions),
            ("cokernels of monomorphisms", &self.mono_cokernels),
            ("k-images", &self.k_images),
            ("kernels of Hom(T,-)-epic epimorphisms", &self.epi_kernels),
            ("D(σ_A,k) = Appres^k(T)", &self.appres),
        ]
    }
}

pub fn in_d<F: Field>(sigma: &Presentation<F>, k: usize, m: &Module<F>) -> bool {
    m.is_zero() || d_sigma_t_membership(sigma, k, m)
}

/// Runs `trials` seeded trials of each closure property for `T` at level `n`.
pub fn closure_suite<F: Field>(t: &Module<F>, n: usize, cen: &Census<F>, seed: u64, trials: usize) -> ClosureReport {
    let alg = t.algebra();
    let sigma = min_presentation(t, n);
    let mut rng = rng(seed);
    let mut rep = ClosureReport::default();
    let pool_k: Vec<Vec<Module<F>>> =
        (0..=n).map(|k| cen.modules.iter().filter(|m| k == 0 || in_d(&sigma, k, m)).cloned().collect()).collect();
    let pool = &pool_k[n];
    let dims = |m: &Module<F>| m.dim_vector_string();

    if !pool.is_empty() {
        for _ in 0..trials {
            let x = random_sum(alg, pool, 2, &mut rng);
            let y = random_sum(alg, pool, 2, &mut rng);
            let (e, nz) = random_extension(&x, &y, &mut rng);
            let ok = e.dim() == x.dim() + y.dim() && in_d(&sigma, n, &e);
            rep.extensions.record(ok, nz, || format!("extension {} of {} by {}", dims(&e), dims(&y), dims(&x)));
        }
        let mut attempts = 0;
        while rep.mono_cokernels.trials < trials && attempts < 200 * trials {
            attempts += 1;
            let x = pool[rng.gen_range(0..pool.len())].clone();
            let y = random_sum(alg, pool, 2, &mut rng);
            if x.dim() > y.dim() {
                continue;
            }
            let g = random_map(&x, &y, &mut rng);
            if !g.is_injective() {
                continue;
            }
            let c = g.cokernel().target;
            let ok = in_d(&sigma, n, &c);
            let nontrivial = !x.is_zero() && x.dim() < y.dim();
            rep.mono_cokernels.record(ok, nontrivial, || format!("cokernel {} of {} -> {}", dims(&c), dims(&x), dims(&y)));
        }
    }

    for i in 0..trials {
        let k = 1 + i % n.min(2);
        let pool = &pool_k[k];
        if pool.is_empty() {
            continue;
        }
        let c1 = random_sum(alg, pool, 2, &mut rng);
        // `k = 1`: any quotient of `C_1`; `k = 2`: the cokernel of `C_2 -> C_1`,
        // whose kernel is a quotient of `C_2`.
        let src_pool = if k == 1 { &cen.modules } else { pool };
        let c2 = random_sum(alg, src_pool, 2, &mut rng);
        let phi = random_map(&c2, &c1, &mut rng);
        let m = phi.cokernel().target;
        let ok = in_d(&sigma, k, &m);
        rep.k_images.record(ok, !phi.is_zero(), || format!("{k}-image {} of {}", dims(&m), dims(&c1)));
    }

    if in_d(&sigma, n, t) && !pool.is_empty() {
        let cat = AddCategory::new(t);
        let targets: Vec<&Module<F>> = pool.iter().filter(|m| in_gen(t, m)).collect();
        for _ in 0..trials {
            if targets.is_empty() {
                break;
            }
            let parts: Vec<Module<F>> =
                (0..rng.gen_range(1..=2)).map(|_| targets[rng.gen_range(0..targets.len())].clone()).collect();
            let y = Module::direct_sum_all(alg, &parts);
            let ap = cat.right_approx(&y);
            let z = random_sum(alg, pool, 2, &mut rng);
            let h = random_map(&z, &y, &mut rng);
            let g = ModuleMap::hstack(&[ap.map.clone(), h], &y);
            let kernel = g.kernel().source;
            let ok = g.is_surjective() && in_d(&sigma, n, &kernel);
            rep.epi_kernels.record(ok, !kernel.is_zero(), || {
                format!("kernel {} of {} -> {}", dims(&kernel), dims(&g.source), dims(&y))
            });
        }
    }

    let cat = AddCategory::new(t);
    let tower = left_approx_tower(&cat, &Module::regular(alg), n + 1);
    if d_sigma_a_membership(&tower, n + 1, t) {
        for _ in 0..trials {
            let k = rng.gen_range(1..=n + 1);
            let m = if rng.gen_bool(0.5) {
                random_sum(alg, &cen.modules, 3, &mut rng)
            } else {
                let c = random_sum(alg, &cen.modules, 2, &mut rng);
                let z = random_sum(alg, &cen.modules, 1, &mut rng);
                random_map(&z, &c, &mut rng).cokernel().target
            };
            let a = d_sigma_a_membership(&tower, k, &m);
            let b = appres_membership(&cat, &m, k);
            rep.appres.record(a == b, a, || format!("k = {k}, {}: D(σ_A,k) {a}, Appres^k {b}", dims(&m)));
        }
    }
    rep
}

/// The settings the closure suite runs over: every corpus module at its level,
/// plus the Kronecker chain at level one and over `F_3`.
pub fn closure_settings(seed: u64, trials: usize) -> ClosureReport {
    let mut total = ClosureReport::default();
    let mut run = |rep: ClosureReport| total.absorb(rep);
    for file in [
        "kronecker_chain.case",
        "oriented_three_cycle.case",
        "a2_regular.case",
        "a2_apr_tilt.case",
        "a2_simple_projective.case",
        "a2_simple_top.case",
    ] {
        let c = load::<tilting::F2>(file);
        let cen = census(&c.alg, &c.bound).unwrap();
        run(closure_suite(&c.t, c.n, &cen, seed, trials));
        if file == "kronecker_chain.case" {
            run(closure_suite(&c.t, 1, &cen, seed + 1, trials));
        }
    }
    let c = load::<tilting::F3>("kronecker_chain.case");
    let cen = census(&c.alg, &[1, 1, 1]).unwrap();
    run(closure_suite(&c.t, c.n, &cen, seed + 2, trials));
    total
}
