//! The shipped example corpus and the runner comparing it with pinned
//! expectations.
//!
//! A case file holds a `[case]` header (`name`, `n`, `bound`), the
//! `[algebra]`, `[module]` and optional `[complex]` sections, and an
//! `[expect]` section of `key value` lines.

use std::collections::BTreeMap;
use std::path::Path;

use crate::approx::AddCategory;
use crate::classifier::{classify, Caps, ClassReport};
use crate::complex::{generation_search, is_presilting, rank_condition};
use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::format::{algebra_from_section, complex_from_section, module_from_section, peek_field, sections};
use crate::homological::left_approx_tower;
use crate::module::{hom_dim, Module};
use crate::universe::census;

pub const BUILTIN: &[(&str, &str)] = &[
    ("kronecker_chain.case", include_str!("../../../corpus/kronecker_chain.case")),
    ("oriented_three_cycle.case", include_str!("../../../corpus/oriented_three_cycle.case")),
    ("a2_regular.case", include_str!("../../../corpus/a2_regular.case")),
    ("a2_apr_tilt.case", include_str!("../../../corpus/a2_apr_tilt.case")),
    ("a2_simple_projective.case", include_str!("../../../corpus/a2_simple_projective.case")),
    ("a2_simple_top.case", include_str!("../../../corpus/a2_simple_top.case")),
];

/// Reads every `*.case` file of a directory, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<(String, String)>> {
    let rd = std::fs::read_dir(dir).map_err(|e| Error::Usage(format!("cannot read {}: {e}", dir.display())))?;
    let mut out = Vec::new();
    for entry in rd.flatten() {
        let p = entry.path();
        if p.extension().and_then(|e| e.to_str()) == Some("case") {
            let text = std::fs::read_to_string(&p).map_err(|e| Error::Usage(format!("{}: {e}", p.display())))?;
            out.push((p.file_name().unwrap().to_string_lossy().into_owned(), text));
        }
    }
    if out.is_empty() {
        return Err(Error::Usage(format!("no corpus: {} contains no .case files", dir.display())));
    }
    out.sort();
    Ok(out)
}

pub fn builtin() -> Vec<(String, String)> {
    BUILTIN.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect()
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub field: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: String,
    pub observed: BTreeMap<String, String>,
    pub mismatches: Vec<Mismatch>,
    pub report: Option<ClassReport>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn tri_str(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn dims_str(d: &[usize]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Name, report, observed values keyed like `[expect]`, and the expectations.
type Observation = (String, ClassReport, BTreeMap<String, String>, Vec<(String, String)>);

fn observe<F: Field>(text: &str, caps: Caps) -> Result<Observation> {
    let secs = sections(text)?;
    let get = |name: &str| {
        secs.iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::Usage(format!("case is missing [{name}]")))
    };
    let mut name = String::new();
    let mut n = 1;
    let mut bound = None;
    for (_, l) in &get("case")?.lines {
        let (k, v) = l.trim().split_once(char::is_whitespace).unwrap_or((l.trim(), ""));
        match k {
            "name" => name = v.trim().to_string(),
            "n" => n = v.trim().parse().map_err(|_| Error::Usage(format!("bad level `{v}`")))?,
            "bound" => {
                bound = Some(
                    v.split_whitespace()
                        .map(|x| x.parse().map_err(|_| Error::Usage(format!("bad bound `{v}`"))))
                        .collect::<Result<Vec<usize>>>()?,
                )
            }
            _ => return Err(Error::Usage(format!("unknown key `{k}` in [case]"))),
        }
    }
    let alg = algebra_from_section::<F>(get("algebra")?)?;
    let t = module_from_section(get("module")?, &alg)?;
    let bound = bound.unwrap_or_else(|| vec![2; alg.num_vertices()]);
    let cen = census(&alg, &bound)?;
    let report = classify(&t, n, &cen, caps, 0)?;
    let mut obs = BTreeMap::new();
    let v = &report.verdicts;
    for (k, val) in [
        ("pretilting", v.pretilting),
        ("n_tilting", v.n_tilting),
        ("n_pre_air", v.n_pre_air),
        ("n_air", v.n_air),
        ("strongly_n_air", v.strongly_n_air),
        ("n_quasi_tilting", v.n_quasi_tilting),
        ("strongly_n_quasi_tilting", v.strongly_n_quasi_tilting),
        ("n_silting", v.n_silting),
        ("ann_faith_dim_at_least_n", v.ann_faith_dim_at_least_n),
        ("faithful", v.faithful),
    ] {
        obs.insert(k.to_string(), val.value.to_string());
    }
    for (k, w) in &report.witnesses {
        obs.insert(format!("witness.{k}"), dims_str(&w.dims));
        obs.insert(format!("witness.{k}.injective"), tri_str(w.reason.starts_with("injective")));
    }
    let d = &report.details;
    obs.insert("pd".into(), d.projective_dimension.map_or("none".into(), |p| p.to_string()));
    let terms: Vec<String> = d
        .presentation_terms
        .iter()
        .map(|t| dims_str(Module::projective_sum(&alg, t).dims()))
        .collect();
    obs.insert("presentation".into(), terms.join(" | "));
    obs.insert("annihilator_dim".into(), d.annihilator_dim.to_string());
    obs.insert("census_size".into(), cen.len().to_string());
    obs.insert("crosschecks".into(), if report.inconsistencies().is_empty() { "consistent" } else { "inconsistent" }.into());
    let cat = AddCategory::new(&t);
    let tower = left_approx_tower(&cat, &Module::regular(&alg), 1);
    obs.insert("first_cokernel".into(), dims_str(tower.cokernels[0].dims()));
    obs.insert("hom_first_cokernel_t".into(), hom_dim(&tower.cokernels[0], &t).to_string());
    if let Ok(s) = get("complex") {
        let c = complex_from_section(s, &alg)?;
        obs.insert("complex.presilting".into(), tri_str(is_presilting(&c)));
        obs.insert("complex.rank_condition".into(), tri_str(rank_condition(&c)?));
        obs.insert("complex.generation".into(), generation_search(&c, caps.cone_depth)?.verdict.to_string());
    }
    let expect = match secs.iter().find(|s| s.name == "expect") {
        Some(s) => s
            .lines
            .iter()
            .map(|(_, l)| {
                let (k, v) = l.trim().split_once(char::is_whitespace).unwrap_or((l.trim(), ""));
                (k.to_string(), v.trim().to_string())
            })
            .collect(),
        None => Vec::new(),
    };
    Ok((name, report, obs, expect))
}

fn compare(name: String, report: ClassReport, observed: BTreeMap<String, String>, expect: Vec<(String, String)>) -> CaseOutcome {
    let mismatches = expect
        .into_iter()
        .filter_map(|(k, v)| {
            let o = observed.get(&k).cloned().unwrap_or_else(|| "<missing>".into());
            (o != v).then_some(Mismatch { field: k, expected: v, observed: o })
        })
        .collect();
    CaseOutcome { name, observed, mismatches, report: Some(report) }
}

/// Runs one case over the field it declares.
pub fn run_case(text: &str, caps: Caps) -> Result<CaseOutcome> {
    macro_rules! go {
        ($p:literal) => {{
            let (name, r, o, e) = observe::<Fp<$p>>(text, caps)?;
            Ok(compare(name, r, o, e))
        }};
    }
    match peek_field(text)?.unwrap_or(2) {
        2 => go!(2),
        3 => go!(3),
        5 => go!(5),
        7 => go!(7),
        p => Err(Error::Usage(format!("unsupported field order {p}"))),
    }
}
