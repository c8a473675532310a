mod common;

use common::load;
use tilting::algebra::linear_a;
use tilting::classifier::{
    annihilator, classify, is_n_air, is_n_pre_air, is_pretilting, is_strongly_n_air, modules_equivalent, phi_map,
    psi_map, quotient_algebra, Caps, Scope,
};
use tilting::complex::{generation_search, homotopy_equivalent, ProjComplex};
use tilting::homological::min_presentation;
use tilting::universe::census;
use tilting::{Error, Module, Tri, F2, F3};

#[test]
fn annihilator_of_simple_projective_over_a2() {
    let alg = linear_a::<F2>(2);
    let s2 = Module::simple(&alg, 1);
    let ann = annihilator(&s2);
    assert_eq!(ann.dim(), 2);
    assert!(ann.contains(&alg.idempotent(0)));
    assert!(!ann.contains(&alg.idempotent(1)));
    let q = quotient_algebra(&alg, &ann).unwrap();
    assert_eq!(q.algebra.dim(), 1);
    assert_eq!(q.vertices, vec![1]);
}

#[test]
fn kronecker_chain_levels() {
    let c = load::<F2>("kronecker_chain.case");
    assert!(!is_n_pre_air(&c.t, 1));
    let cen = census(&c.alg, &[1, 1, 1]).unwrap();
    for n in 2..=3 {
        let r = classify(&c.t, n, &cen, Caps::default(), 0).unwrap();
        assert_eq!(r.verdicts.n_pre_air.value, Tri::Yes, "n = {n}");
        assert_eq!(r.verdicts.strongly_n_quasi_tilting.value, Tri::Yes, "n = {n}");
        assert_eq!(r.verdicts.n_air.value, Tri::No, "n = {n}");
        assert_eq!(r.verdicts.n_silting.value, Tri::No, "n = {n}");
        assert_eq!(r.verdicts.n_silting.scope, Scope::Exact);
        assert!(r.inconsistencies().is_empty());
    }
}

#[test]
fn kronecker_chain_over_f3_matches_f2() {
    let c = load::<F3>("kronecker_chain.case");
    let cen = census(&c.alg, &[1, 1, 1]).unwrap();
    let r = classify(&c.t, 2, &cen, Caps::default(), 0).unwrap();
    assert_eq!(r.verdicts.n_pre_air.value, Tri::Yes);
    assert_eq!(r.verdicts.n_air.value, Tri::No);
    assert_eq!(r.verdicts.n_silting.value, Tri::No);
}

#[test]
fn oriented_three_cycle_is_not_pretilting() {
    let c = load::<F2>("oriented_three_cycle.case");
    assert!(!is_pretilting(&c.t, 2));
    assert!(!is_n_air(&c.t, 2));
}

#[test]
fn pretilting_simples_are_strongly_air() {
    for file in ["kronecker_chain.case", "oriented_three_cycle.case", "a2_regular.case"] {
        let c = load::<F2>(file);
        let cen = census(&c.alg, &vec![1; c.alg.num_vertices()]).unwrap();
        for v in 0..c.alg.num_vertices() {
            let s = Module::simple(&c.alg, v);
            for n in 1..=2 {
                if is_pretilting(&s, n) {
                    let o = is_strongly_n_air(&s, n, &cen);
                    assert_eq!(o.verdict.value, Tri::Yes, "{file}: S{} at n = {n}", v + 1);
                }
            }
        }
    }
}

#[test]
fn psi_of_simple_top_over_a2() {
    let alg = linear_a::<F2>(2);
    let s1 = Module::simple(&alg, 0);
    let psi = psi_map(&s1, 1, Caps::default()).unwrap();
    assert_eq!(psi.q_vertices, vec![1]);
    assert!(psi.presilting && psi.rank_condition);
    assert_eq!(psi.generation, Tri::Yes);
    let sigma = ProjComplex::truncated(&min_presentation(&s1, 1));
    let expected = sigma.direct_sum(&ProjComplex::stalk(&alg, &[1], -1));
    assert!(homotopy_equivalent(&psi.complex, &expected).unwrap());
}

#[test]
fn phi_of_regular_stalk_is_regular() {
    let alg = linear_a::<F2>(3);
    let phi = phi_map(&ProjComplex::regular(&alg), 2, Caps::default(), false).unwrap();
    assert!(modules_equivalent(&phi.module, &Module::regular(&alg)));
    assert_eq!(phi.generation, Tri::Yes);
}

#[test]
fn maps_refuse_the_kronecker_chain() {
    let c = load::<F2>("kronecker_chain.case");
    let err = psi_map(&c.t, 2, Caps::default()).unwrap_err();
    assert!(matches!(err, Error::Refused(_)));
    let cx = c.complex.unwrap();
    match phi_map(&cx, 2, Caps::default(), false) {
        Err(Error::Refused(msg)) => assert!(msg.contains("silting gate"), "{msg}"),
        other => panic!("expected refusal, got {other:?}"),
    }
    match phi_map(&cx, 2, Caps::default(), true) {
        Err(Error::Refused(msg)) => assert!(msg.contains("rank condition no"), "{msg}"),
        other => panic!("expected refusal, got {other:?}"),
    }
}

#[test]
fn verdicts_are_invariant_under_multiplicity() {
    for file in ["kronecker_chain.case", "oriented_three_cycle.case", "a2_apr_tilt.case", "a2_simple_top.case"] {
        let c = load::<F2>(file);
        let cen = census(&c.alg, &vec![1; c.alg.num_vertices()]).unwrap();
        let a = classify(&c.t, c.n, &cen, Caps::default(), 0).unwrap();
        let b = classify(&c.t.power(2), c.n, &cen, Caps::default(), 0).unwrap();
        assert_eq!(serde_json::to_value(&a.verdicts).unwrap(), serde_json::to_value(&b.verdicts).unwrap(), "{file}");
    }
}

#[test]
fn adding_a_non_summand_can_change_verdicts() {
    let alg = linear_a::<F2>(2);
    let cen = census(&alg, &[1, 1]).unwrap();
    let s1 = Module::simple(&alg, 0);
    let s2 = Module::simple(&alg, 1);
    assert!(is_n_air(&s1, 1) && is_n_air(&s2, 1));
    assert!(!is_n_air(&s1.direct_sum(&s2), 1));
    assert_eq!(is_strongly_n_air(&s1.direct_sum(&s2), 1, &cen).verdict.value, Tri::No);
}

#[test]
fn level_zero_is_a_usage_error() {
    let alg = linear_a::<F2>(2);
    let cen = census(&alg, &[1, 1]).unwrap();
    assert!(matches!(classify(&Module::regular(&alg), 0, &cen, Caps::default(), 0), Err(Error::Usage(_))));
}

#[test]
fn two_term_complex_covering_both_projectives_generates() {
    let alg = linear_a::<F2>(2);
    let c = ProjComplex::stalk(&alg, &[0], -1).direct_sum(&ProjComplex::stalk(&alg, &[1], 0));
    let g = generation_search(&c, 4).unwrap();
    assert_eq!(g.verdict, Tri::Yes, "{}", g.reason);
    assert_eq!(generation_search(&ProjComplex::regular(&alg), 0).unwrap().verdict, Tri::Yes);
}
