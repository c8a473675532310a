//! Decision procedures for tilting-type properties of a module, annihilator
//! quotients, and the maps between AIR-tilting modules and silting complexes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{build_algebra, Algebra, Arrow, Elem, Path, Quiver, Relation};
use crate::approx::AddCategory;
use crate::complex::{
    generation_search, is_generalized_two_term_in_place, is_presilting, rank_condition, ProjComplex,
    DEFAULT_CONE_DEPTH,
};
use crate::decompose::{basic_summands, find_isoclass};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format::print_module;
use crate::homological::{
    ann_faith_dim_at_least, build_sigma_a, d_sigma_a_membership, ext_dim_with, in_d_sigma_t, min_presentation,
    min_resolution, pres_membership, Presentation, Tower, DEFAULT_SURJ_CAP, RESOLUTION_CAP,
};
use crate::matrix::Matrix;
use crate::module::{hom_dim, in_cogen, in_gen, Module};
use crate::universe::Census;
use crate::verdict::Tri;

/// A two-sided ideal, stored as a row-reduced basis of coordinate vectors.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub basis: Vec<Elem<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Ideal<F> {
    /// The span of `elems`; fails unless it is closed under multiplication by
    /// the algebra on both sides.
    pub fn new(alg: &Arc<Algebra<F>>, elems: &[Elem<F>]) -> Result<Self> {
        let id = Self::span(alg, elems);
        for x in &id.basis {
            for b in 0..alg.dim() {
                let e = alg.basis_elem(b);
                if !id.contains(&alg.mul(x, &e)) || !id.contains(&alg.mul(&e, x)) {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
        Ok(id)
    }

    fn span(alg: &Arc<Algebra<F>>, elems: &[Elem<F>]) -> Self {
        let n = alg.dim();
        let rr = Matrix::from_rows(elems.len(), n, elems).rref();
        let basis = (0..rr.pivots.len()).map(|i| rr.matrix.row(i).to_vec()).collect();
        Ideal { algebra: alg.clone(), basis, pivots: rr.pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// `x` minus its component along the ideal's pivot coordinates.
    pub fn reduce(&self, x: &[F]) -> Elem<F> {
        let mut y = x.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = y[p];
            if !c.is_zero() {
                for (yi, ri) in y.iter_mut().zip(row) {
                    *yi -= c * *ri;
                }
            }
        }
        y
    }

    pub fn contains(&self, x: &[F]) -> bool {
        self.reduce(x).iter().all(|c| c.is_zero())
    }
}

/// `ann(T) = {x ∈ A : T·x = 0}`.
pub fn annihilator<F: Field>(t: &Module<F>) -> Ideal<F> {
    let alg = t.algebra();
    let nv = alg.num_vertices();
    let mut elems = Vec::new();
    for i in 0..nv {
        for j in 0..nv {
            let blk = alg.block(i, j);
            if blk.is_empty() {
                continue;
            }
            let (r, c) = (t.dims()[j], t.dims()[i]);
            let cols: Vec<Vec<F>> = blk
                .iter()
                .map(|&b| t.path_matrix(&alg.basis()[b]).as_slice().to_vec())
                .collect();
            let m = Matrix::from_cols(r * c, &cols);
            for v in m.nullspace() {
                let mut x = alg.zero();
                for (&b, c) in blk.iter().zip(v) {
                    x[b] = c;
                }
                elems.push(x);
            }
        }
    }
    Ideal::span(alg, &elems)
}

pub fn is_faithful<F: Field>(t: &Module<F>) -> bool {
    annihilator(t).is_zero()
}

/// `A/I` presented as a bound quiver algebra, with the correspondence of
/// vertices and arrows.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    /// Old vertex of each new vertex.
    pub vertices: Vec<usize>,
    /// Old arrow of each new arrow.
    pub arrows: Vec<usize>,
}

impl<F: Field> QuotientAlgebra<F> {
    /// A module annihilated by the ideal, viewed over the quotient.
    pub fn restrict(&self, m: &Module<F>) -> Result<Module<F>> {
        let dims = self.vertices.iter().map(|&v| m.dims()[v]).collect();
        let maps = self.arrows.iter().map(|&a| m.map(a).clone()).collect();
        Module::new(self.algebra.clone(), dims, maps)
    }
}

pub fn quotient_algebra<F: Field>(alg: &Arc<Algebra<F>>, ideal: &Ideal<F>) -> Result<QuotientAlgebra<F>> {
    let ideal = Ideal::new(alg, &ideal.basis)?;
    let q = alg.quiver();
    let n = alg.dim();
    let vertices: Vec<usize> = (0..alg.num_vertices()).filter(|&v| !ideal.contains(&alg.idempotent(v))).collect();
    let positive: Vec<usize> = (0..n).filter(|&b| !alg.basis()[b].is_trivial()).collect();
    let mut span: Vec<Elem<F>> = ideal.basis.clone();
    for &b1 in &positive {
        for &b2 in &positive {
            span.push(alg.mul(&alg.basis_elem(b1), &alg.basis_elem(b2)));
        }
    }
    let mut rank = Matrix::from_rows(span.len(), n, &span).rank();
    let mut arrows = Vec::new();
    for a in 0..q.num_arrows() {
        let x = alg.basis_elem(alg.arrow_index_in_basis(a));
        span.push(x);
        let r = Matrix::from_rows(span.len(), n, &span).rank();
        if r > rank {
            rank = r;
            arrows.push(a);
        } else {
            span.pop();
        }
    }
    let new_index = |v: usize| vertices.iter().position(|&w| w == v).expect("surviving vertex");
    let nq = Quiver::new(
        vertices.iter().map(|&v| q.vertices[v].clone()).collect(),
        arrows
            .iter()
            .map(|&a| Arrow {
                name: q.arrows[a].name.clone(),
                source: new_index(q.arrows[a].source),
                target: new_index(q.arrows[a].target),
            })
            .collect(),
    )?;
    let arrow_elems: Vec<Elem<F>> = arrows.iter().map(|&a| alg.basis_elem(alg.arrow_index_in_basis(a))).collect();
    let max_len = alg.loewy_length().max(1);
    let mut relations = Vec::new();
    for s in 0..vertices.len() {
        let mut layer: Vec<(Path, Elem<F>)> = vec![(Path::trivial(s), alg.idempotent(vertices[s]))];
        let mut by_target: Vec<Vec<(Path, Elem<F>)>> = vec![Vec::new(); vertices.len()];
        for len in 1..=max_len {
            let mut next = Vec::new();
            for (p, x) in &layer {
                for (na, arr) in nq.arrows.iter().enumerate() {
                    if arr.source == p.target {
                        let np = p.concat(&Path::arrow(&nq, na)).unwrap();
                        next.push((np, alg.mul(x, &arrow_elems[na])));
                    }
                }
            }
            if len >= 2 {
                for (p, x) in &next {
                    by_target[p.target].push((p.clone(), ideal.reduce(x)));
                }
            }
            layer = next;
        }
        for group in by_target.iter().filter(|g| !g.is_empty()) {
            let cols: Vec<Vec<F>> = group.iter().map(|(_, x)| x.clone()).collect();
            let m = Matrix::from_cols(n, &cols);
            for v in m.nullspace() {
                let terms: Vec<(F, Path)> = group
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((p, _), c)| (c, p.clone()))
                    .collect();
                relations.push(Relation::new(terms));
            }
        }
    }
    let qa = build_algebra(nq, relations)?;
    if qa.dim() + ideal.dim() != n {
        return Err(Error::Inconsistency(format!(
            "quotient has dimension {}, expected {}",
            qa.dim(),
            n - ideal.dim()
        )));
    }
    Ok(QuotientAlgebra { algebra: qa, vertices, arrows })
}

/// Search limits, echoed into every report.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    pub resolution: usize,
    pub surj: usize,
    pub cone_depth: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { resolution: RESOLUTION_CAP, surj: DEFAULT_SURJ_CAP, cone_depth: DEFAULT_CONE_DEPTH }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Exact,
    WithinBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: Tri,
    pub scope: Scope,
}

impl Verdict {
    pub fn exact(b: bool) -> Self {
        Verdict { value: Tri::from_bool(b), scope: Scope::Exact }
    }

    pub fn bounded(value: Tri) -> Self {
        Verdict { value, scope: Scope::WithinBound }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub dims: Vec<usize>,
    pub reason: String,
    pub module: String,
}

impl Witness {
    fn of<F: Field>(m: &Module<F>, reason: impl Into<String>) -> Self {
        Witness { dims: m.dims().to_vec(), reason: reason.into(), module: print_module(m) }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl Outcome {
    fn exact(b: bool) -> Self {
        Outcome { verdict: Verdict::exact(b), witness: None }
    }

    fn refuted(w: Witness) -> Self {
        Outcome { verdict: Verdict::exact(false), witness: Some(w) }
    }
}

/// Projective dimension at most `n` and `Ext^i(T, T) = 0` for `1 ≤ i ≤ pd T`.
pub fn is_pretilting<F: Field>(t: &Module<F>, n: usize) -> bool {
    match min_resolution(t, n) {
        None => false,
        Some(p) => (1..=p.length()).all(|i| p.hom_homology(i, t) == 0),
    }
}

/// Pretilting with an exact coresolution `0 -> A -> T_0 -> ... -> T_n -> 0`.
pub fn is_n_tilting<F: Field>(t: &Module<F>, n: usize) -> bool {
    if !is_pretilting(t, n) {
        return false;
    }
    let cat = AddCategory::new(t);
    match build_sigma_a(&cat, n) {
        Some(tower) => tower.maps[0].is_injective(),
        None => false,
    }
}

/// The truncated minimal `(n+1)`-presentation of `T` is presilting.
pub fn is_n_pre_air<F: Field>(t: &Module<F>, n: usize) -> bool {
    is_presilting(&ProjComplex::truncated(&min_presentation(t, n)))
}

pub fn is_n_air<F: Field>(t: &Module<F>, n: usize) -> bool {
    let sigma = min_presentation(t, n);
    in_d_sigma_t(&sigma, t) && build_sigma_a(&AddCategory::new(t), n).is_some()
}

/// The minimal presentation of `T` padded by `Q[n]`, where `Q` is the sum of
/// the `P(i)` with `T_i = 0`. Among the presentations `σ_T` with
/// `T ∈ D(σ_T)` this one has the smallest `D(σ_T)`.
#[derive(Clone, Debug)]
pub struct SigmaT<F: Field> {
    pub presentation: Presentation<F>,
    pub q_vertices: Vec<usize>,
}

impl<F: Field> SigmaT<F> {
    pub fn new(t: &Module<F>, n: usize) -> Self {
        let q_vertices = (0..t.dims().len()).filter(|&v| t.dims()[v] == 0).collect();
        SigmaT { presentation: min_presentation(t, n), q_vertices }
    }

    /// `M ∈ D(σ_T)`.
    pub fn contains(&self, m: &Module<F>) -> bool {
        self.q_vertices.iter().all(|&v| m.dims()[v] == 0) && in_d_sigma_t(&self.presentation, m)
    }
}

fn strongly_air_with<F: Field>(sigma: &SigmaT<F>, tower: Option<&Tower<F>>, n: usize, census: &Census<F>, t: &Module<F>) -> Outcome {
    let tower = match tower {
        Some(tw) if sigma.contains(t) => tw,
        _ => return Outcome::exact(false),
    };
    for m in &census.modules {
        let a = sigma.contains(m);
        let b = d_sigma_a_membership(tower, n + 1, m);
        if a != b {
            let reason = if a { "in D(σ_T) but not in D(σ_A)" } else { "in D(σ_A) but not in D(σ_T)" };
            return Outcome::refuted(Witness::of(m, reason));
        }
    }
    Outcome { verdict: Verdict::bounded(Tri::Yes), witness: None }
}

/// `n`-AIR with `D(σ_T) = D(σ_A)` over the census.
pub fn is_strongly_n_air<F: Field>(t: &Module<F>, n: usize, census: &Census<F>) -> Outcome {
    let tower = build_sigma_a(&AddCategory::new(t), n);
    strongly_air_with(&SigmaT::new(t, n), tower.as_ref(), n, census, t)
}

/// `Pres^k` memberships for `k = 1..=n+1` and `Ext^i(T, M)` for `i = 1..=n`
/// over a census.
struct PresTable<'a, F: Field> {
    census: &'a Census<F>,
    pres: Vec<Vec<Tri>>,
    ext: Vec<Vec<usize>>,
}

impl<'a, F: Field> PresTable<'a, F> {
    fn new(t: &Module<F>, n: usize, census: &'a Census<F>, surj_cap: usize) -> Self {
        use rayon::prelude::*;
        let cat = AddCategory::new(t);
        let p = min_presentation(t, n + 1);
        let rows: Vec<(Vec<Tri>, Vec<usize>)> = census
            .modules
            .par_iter()
            .map(|m| {
                let pres = (1..=n + 1).map(|k| pres_membership(&cat, m, k, surj_cap)).collect();
                let ext = (1..=n).map(|i| ext_dim_with(&p, m, i)).collect();
                (pres, ext)
            })
            .collect();
        let (pres, ext) = rows.into_iter().unzip();
        PresTable { census, pres, ext }
    }

    /// `Pres^k ⊆ KerExt^{lo..=hi}`, checked on the census.
    fn pres_in_kerext(&self, k: usize, lo: usize, hi: usize) -> Outcome {
        let mut unknown = false;
        for (j, m) in self.census.modules.iter().enumerate() {
            let bad = (lo..=hi).find(|&i| self.ext[j][i - 1] != 0);
            match (self.pres[j][k - 1], bad) {
                (Tri::Yes, Some(i)) => {
                    return Outcome::refuted(Witness::of(m, format!("in Pres^{k}(T) with Ext^{i}(T, M) ≠ 0")))
                }
                (Tri::Unknown, Some(_)) => unknown = true,
                _ => {}
            }
        }
        Outcome { verdict: Verdict::bounded(if unknown { Tri::Unknown } else { Tri::Yes }), witness: None }
    }

    /// `Pres^k = Pres^{k+1}` on the census.
    fn pres_stable(&self, k: usize) -> Outcome {
        let mut unknown = false;
        for (j, m) in self.census.modules.iter().enumerate() {
            match (self.pres[j][k - 1], self.pres[j][k]) {
                (Tri::Yes, Tri::No) => {
                    return Outcome::refuted(Witness::of(m, format!("in Pres^{k}(T) but not Pres^{}(T)", k + 1)))
                }
                (Tri::Yes, Tri::Yes) | (Tri::No, _) | (_, Tri::Yes) => {}
                _ => unknown = true,
            }
        }
        Outcome { verdict: Verdict::bounded(if unknown { Tri::Unknown } else { Tri::Yes }), witness: None }
    }

    fn quasi_tilting(&self, n: usize) -> Outcome {
        combine([self.pres_stable(n), self.pres_in_kerext(n, 1, n)])
    }

    fn strongly_quasi_tilting(&self, n: usize) -> Outcome {
        let mut parts = vec![self.pres_stable(n)];
        parts.extend((1..=n).map(|k| self.pres_in_kerext(k, n - k + 1, n)));
        combine(parts)
    }
}

/// First refutation, else the conjunction of the values.
fn combine(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    let parts: Vec<Outcome> = parts.into_iter().collect();
    if let Some(o) = parts.iter().find(|o| o.verdict.value == Tri::No) {
        return o.clone();
    }
    let value = Tri::all(parts.iter().map(|o| o.verdict.value));
    let scope = if parts.iter().all(|o| o.verdict.scope == Scope::Exact) { Scope::Exact } else { Scope::WithinBound };
    Outcome { verdict: Verdict { value, scope }, witness: None }
}

/// `Pres^n(T) = Pres^{n+1}(T) ⊆ KerExt^{1..n}(T, −)` over the census.
pub fn is_n_quasi_tilting<F: Field>(t: &Module<F>, n: usize, census: &Census<F>, surj_cap: usize) -> Outcome {
    PresTable::new(t, n, census, surj_cap).quasi_tilting(n)
}

/// Quasi-tilting with `Pres^k(T) ⊆ KerExt^{n-k+1..n}(T, −)` for `1 ≤ k ≤ n`.
pub fn is_strongly_n_quasi_tilting<F: Field>(t: &Module<F>, n: usize, census: &Census<F>, surj_cap: usize) -> Outcome {
    PresTable::new(t, n, census, surj_cap).strongly_quasi_tilting(n)
}

fn silting_with<F: Field>(t: &Module<F>, sigma: &SigmaT<F>, census: &Census<F>) -> Outcome {
    if !sigma.contains(t) {
        return Outcome::exact(false);
    }
    let bad: Vec<&Module<F>> = census.modules.iter().filter(|m| sigma.contains(m) && !in_gen(t, m)).collect();
    match bad.iter().find(|m| is_injective_module(m)).or(bad.first()) {
        Some(m) => {
            let inj = if is_injective_module(m) { "injective, " } else { "" };
            Outcome::refuted(Witness::of(m, format!("{inj}in D(σ_T) but not in Gen(T)")))
        }
        None => Outcome { verdict: Verdict::bounded(Tri::Yes), witness: None },
    }
}

/// `T ∈ D(σ_T)` and `D(σ_T) ⊆ Gen(T)` over the census.
pub fn is_n_silting<F: Field>(t: &Module<F>, n: usize, census: &Census<F>) -> Outcome {
    silting_with(t, &SigmaT::new(t, n), census)
}

/// Whether `M` is injective, via `M ≅ ⊕ I(v)^{soc_v}`.
pub fn is_injective_module<F: Field>(m: &Module<F>) -> bool {
    let alg = m.algebra();
    let soc = m.socle_dims();
    let parts: Vec<Module<F>> = soc
        .iter()
        .enumerate()
        .flat_map(|(v, &k)| std::iter::repeat_n(Module::injective(alg, v), k))
        .collect();
    let env = Module::direct_sum_all(alg, &parts);
    env.dims() == m.dims() && crate::decompose::iso_test(&env, m)
}

/// Whether `T` is `n`-tilting over `A/ann(T)`.
pub fn tilting_over_quotient<F: Field>(t: &Module<F>, n: usize) -> Result<bool> {
    let q = quotient_algebra(t.algebra(), &annihilator(t))?;
    Ok(is_n_tilting(&q.restrict(t)?, n))
}

/// Add-equivalence: the same indecomposable summands up to isomorphism.
pub fn modules_equivalent<F: Field>(a: &Module<F>, b: &Module<F>) -> bool {
    let sa: Vec<Module<F>> = basic_summands(a).into_iter().map(|(m, _)| m).collect();
    let sb: Vec<Module<F>> = basic_summands(b).into_iter().map(|(m, _)| m).collect();
    sa.len() == sb.len() && sa.iter().all(|x| find_isoclass(&sb, x).is_some())
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdicts {
    pub pretilting: Verdict,
    pub n_tilting: Verdict,
    pub n_pre_air: Verdict,
    pub n_air: Verdict,
    pub strongly_n_air: Verdict,
    pub n_quasi_tilting: Verdict,
    pub strongly_n_quasi_tilting: Verdict,
    pub n_silting: Verdict,
    pub ann_faith_dim_at_least_n: Verdict,
    pub faithful: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Details {
    pub projective_dimension: Option<usize>,
    pub presentation_terms: Vec<Vec<usize>>,
    pub in_d_sigma_t: bool,
    pub annihilator_dim: usize,
    pub d_sigma_t_in_d_sigma_a: Tri,
    pub a_in_cogen: bool,
    pub tilting_over_quotient: Tri,
}

#[derive(Clone, Debug, Serialize)]
pub struct Crosscheck {
    pub name: String,
    pub lhs: Tri,
    pub rhs: Tri,
    pub equivalence: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub schema: u32,
    pub module: String,
    pub dims: Vec<usize>,
    pub n: usize,
    pub verdicts: Verdicts,
    pub witnesses: BTreeMap<String, Witness>,
    pub universe_bound: Vec<usize>,
    pub universe_size: usize,
    pub caps: Caps,
    pub seed: u64,
    pub details: Details,
    pub crosschecks: Vec<Crosscheck>,
}

/// Implications and equivalences among the verdicts.
pub fn theorem_crosscheck(v: &Verdicts, d: &Details) -> Vec<Crosscheck> {
    let imp = |name: &str, a: Tri, b: Tri| Crosscheck {
        name: name.into(),
        lhs: a,
        rhs: b,
        equivalence: false,
        consistent: !a.contradicts_implication(b),
    };
    let eq = |name: &str, a: Tri, b: Tri| Crosscheck {
        name: name.into(),
        lhs: a,
        rhs: b,
        equivalence: true,
        consistent: !(a.is_decided() && b.is_decided() && a != b),
    };
    let ann = v.ann_faith_dim_at_least_n.value;
    vec![
        imp("n_tilting => strongly_n_air", v.n_tilting.value, v.strongly_n_air.value),
        imp("strongly_n_air => n_air", v.strongly_n_air.value, v.n_air.value),
        imp("strongly_n_air => n_silting", v.strongly_n_air.value, v.n_silting.value),
        imp("n_silting => n_quasi_tilting", v.n_silting.value, v.n_quasi_tilting.value),
        imp("n_air => n_quasi_tilting", v.n_air.value, v.n_quasi_tilting.value),
        imp("strongly_n_air => strongly_n_quasi_tilting", v.strongly_n_air.value, v.strongly_n_quasi_tilting.value),
        imp("n_air => n_pre_air", v.n_air.value, v.n_pre_air.value),
        imp("n_tilting => pretilting", v.n_tilting.value, v.pretilting.value),
        eq("n_pre_air <=> T in D(σ_T)", v.n_pre_air.value, Tri::from_bool(d.in_d_sigma_t)),
        eq(
            "n_air <=> strongly_n_quasi_tilting and ann_faith",
            v.n_air.value,
            v.strongly_n_quasi_tilting.value.and(ann),
        ),
        eq(
            "strongly_n_air <=> n_air and D(σ_T) ⊆ D(σ_A)",
            v.strongly_n_air.value,
            v.n_air.value.and(d.d_sigma_t_in_d_sigma_a),
        ),
        eq("strongly_n_air <=> n_silting and ann_faith", v.strongly_n_air.value, v.n_silting.value.and(ann)),
        imp(
            "n_air and A in Cogen(T) => n_tilting",
            v.n_air.value.and(Tri::from_bool(d.a_in_cogen)),
            v.n_tilting.value,
        ),
        imp("n_air => n_tilting over A/ann(T)", v.n_air.value, d.tilting_over_quotient),
    ]
}

impl ClassReport {
    pub fn inconsistencies(&self) -> Vec<&Crosscheck> {
        self.crosschecks.iter().filter(|c| !c.consistent).collect()
    }

    pub fn check_consistency(&self) -> Result<()> {
        match self.inconsistencies().first() {
            None => Ok(()),
            Some(c) => Err(Error::Inconsistency(format!("{}: {} vs {}", c.name, c.lhs, c.rhs))),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "module dims {:?}, n = {}", self.dims, self.n);
        let _ = writeln!(
            s,
            "universe bound {:?} ({} indecomposables), resolution cap {}, surjection cap {}, cone depth {}, seed {}",
            self.universe_bound, self.universe_size, self.caps.resolution, self.caps.surj, self.caps.cone_depth, self.seed
        );
        let v = &self.verdicts;
        let rows = [
            ("pretilting", v.pretilting),
            ("n-tilting", v.n_tilting),
            ("n-pre-AIR", v.n_pre_air),
            ("n-AIR", v.n_air),
            ("strongly n-AIR", v.strongly_n_air),
            ("n-quasi-tilting", v.n_quasi_tilting),
            ("strongly n-quasi-tilting", v.strongly_n_quasi_tilting),
            ("n-silting", v.n_silting),
            ("ann-faith.dim >= n", v.ann_faith_dim_at_least_n),
            ("faithful", v.faithful),
        ];
        for (name, verdict) in rows {
            let scope = match verdict.scope {
                Scope::Exact => "",
                Scope::WithinBound => " (within bound)",
            };
            let _ = writeln!(s, "  {name:<26} {}{scope}", verdict.value);
        }
        for (k, w) in &self.witnesses {
            let _ = writeln!(s, "  witness for {k}: dims {:?}, {}", w.dims, w.reason);
        }
        let bad = self.inconsistencies();
        if bad.is_empty() {
            let _ = writeln!(s, "  cross-checks: {} consistent", self.crosschecks.len());
        } else {
            for c in bad {
                let _ = writeln!(s, "  INCONSISTENT {}: {} vs {}", c.name, c.lhs, c.rhs);
            }
        }
        s
    }
}

/// Full classification of `T` at level `n` against a census.
pub fn classify<F: Field>(t: &Module<F>, n: usize, census: &Census<F>, caps: Caps, seed: u64) -> Result<ClassReport> {
    if n == 0 {
        return Err(Error::Usage("level n must be at least 1".into()));
    }
    let cat = AddCategory::new(t);
    let padded = SigmaT::new(t, n);
    let sigma = padded.presentation.clone();
    let tower = build_sigma_a(&cat, n);
    let t_in_d = in_d_sigma_t(&sigma, t);
    let n_air = t_in_d && tower.is_some();
    let pretilting = is_pretilting(t, n);
    let n_tilting = pretilting && tower.as_ref().is_some_and(|tw| tw.maps[0].is_injective());
    let n_pre_air = is_presilting(&ProjComplex::truncated(&sigma));
    let table = PresTable::new(t, n, census, caps.surj);
    let qt = table.quasi_tilting(n);
    let sqt = table.strongly_quasi_tilting(n);
    let strongly = strongly_air_with(&padded, tower.as_ref(), n, census, t);
    let silting = silting_with(t, &padded, census);
    let ann = annihilator(t);
    let ann_faith = ann_faith_dim_at_least(&cat, n);
    let inclusion = match &tower {
        Some(tw) => Tri::from_bool(
            census.modules.iter().all(|m| !padded.contains(m) || d_sigma_a_membership(tw, n + 1, m)),
        ),
        None => Tri::No,
    };
    let over_quotient = if n_air { Tri::from_bool(tilting_over_quotient(t, n)?) } else { Tri::Unknown };
    let verdicts = Verdicts {
        pretilting: Verdict::exact(pretilting),
        n_tilting: Verdict::exact(n_tilting),
        n_pre_air: Verdict::exact(n_pre_air),
        n_air: Verdict::exact(n_air),
        strongly_n_air: strongly.verdict,
        n_quasi_tilting: qt.verdict,
        strongly_n_quasi_tilting: sqt.verdict,
        n_silting: silting.verdict,
        ann_faith_dim_at_least_n: Verdict::exact(ann_faith),
        faithful: Verdict::exact(ann.is_zero()),
    };
    let mut witnesses = BTreeMap::new();
    for (k, o) in [
        ("strongly_n_air", &strongly),
        ("n_quasi_tilting", &qt),
        ("strongly_n_quasi_tilting", &sqt),
        ("n_silting", &silting),
    ] {
        if let Some(w) = &o.witness {
            witnesses.insert(k.to_string(), w.clone());
        }
    }
    let a = Module::regular(t.algebra());
    let details = Details {
        projective_dimension: min_resolution(t, caps.resolution).map(|p| p.length()),
        presentation_terms: sigma.terms.clone(),
        in_d_sigma_t: t_in_d,
        annihilator_dim: ann.dim(),
        d_sigma_t_in_d_sigma_a: inclusion,
        a_in_cogen: in_cogen(t, &a),
        tilting_over_quotient: over_quotient,
    };
    let crosschecks = theorem_crosscheck(&verdicts, &details);
    Ok(ClassReport {
        schema: 1,
        module: print_module(t),
        dims: t.dims().to_vec(),
        n,
        verdicts,
        witnesses,
        universe_bound: census.bound.clone(),
        universe_size: census.len(),
        caps,
        seed,
        details,
        crosschecks,
    })
}

/// Outcome of [`phi_map`].
#[derive(Clone, Debug)]
pub struct PhiResult<F: Field> {
    pub module: Module<F>,
    pub rank_condition: bool,
    pub generation: Tri,
}

/// `H^0(C)` for a generalized two-term silting complex in degrees `-n..0`.
/// Generation of `K^b(proj)` must be certified by the cone search unless
/// `assume_generates` is set.
pub fn phi_map<F: Field>(c: &ProjComplex<F>, n: usize, caps: Caps, assume_generates: bool) -> Result<PhiResult<F>> {
    let c = c.strip();
    if !is_generalized_two_term_in_place(&c, n) {
        return Err(Error::Refused(format!("complex is not generalized two-term in degrees -{n}..0")));
    }
    if !is_presilting(&c) {
        return Err(Error::Refused("complex is not presilting".into()));
    }
    let rank = rank_condition(&c)?;
    if !rank {
        return Err(Error::Refused(
            "silting gate: presilting yes, rank condition no (fewer distinct summands than vertices)".into(),
        ));
    }
    let generation = if assume_generates { Tri::Unknown } else { generation_search(&c, caps.cone_depth)?.verdict };
    if !assume_generates && generation != Tri::Yes {
        return Err(Error::Refused(format!(
            "silting gate: presilting yes, rank condition yes, generation {generation}"
        )));
    }
    Ok(PhiResult { module: c.homology(0), rank_condition: rank, generation })
}

/// Outcome of [`psi_map`], with the silting checks reported separately.
#[derive(Clone, Debug)]
pub struct PsiResult<F: Field> {
    pub complex: ProjComplex<F>,
    pub q_vertices: Vec<usize>,
    pub presilting: bool,
    pub rank_condition: bool,
    pub generation: Tri,
}

/// `σ_T ⊕ Q[n]` with `Q` the sum of the `P(i)` such that `Hom(P(i), T) = 0`.
pub fn psi_map<F: Field>(t: &Module<F>, n: usize, caps: Caps) -> Result<PsiResult<F>> {
    if !is_n_air(t, n) {
        return Err(Error::Refused(format!("module is not {n}-AIR-tilting")));
    }
    let alg = t.algebra();
    let padded = SigmaT::new(t, n);
    let q_vertices = padded.q_vertices.clone();
    debug_assert!(q_vertices.iter().all(|&v| hom_dim(&Module::projective(alg, v), t) == 0));
    let sigma = ProjComplex::truncated(&padded.presentation);
    let complex = sigma.direct_sum(&ProjComplex::stalk(alg, &q_vertices, -(n as i64)));
    Ok(PsiResult {
        presilting: is_presilting(&complex),
        rank_condition: rank_condition(&complex)?,
        generation: generation_search(&complex, caps.cone_depth)?.verdict,
        complex,
        q_vertices,
    })
}
