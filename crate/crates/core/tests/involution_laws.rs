mod common;

use std::sync::Arc;

use common::{corpus, q, Case};
use morita_core::algebra::{jacobson_radical, quadratic_algebra, Algebra, AlgebraMap};
use morita_core::forms::{has_type, standard_involution};
use morita_core::involution::{
    anti_structure_m2_involution, find_anti_structure, hyperbolic_involution, reduce_to_standard,
    transfer_involution, transpose_gamma, AntiStructure, AntiStructureSearch,
};
use morita_core::linalg::Coordinates;
use morita_core::module::Module;
use morita_core::posets::{incidence_algebra, scharlau_poset, scharlau_rotation};
use morita_core::search::SearchConfig;
use morita_core::{Error, Field, Matrix};

fn anti_multiplicative(a: &Algebra, f: &AlgebraMap) -> bool {
    let d = a.dim();
    f.apply(a.unit()) == *a.unit()
        && (0..d).all(|i| {
            (0..d).all(|j| f.apply(&a.mul(&a.basis(i), &a.basis(j))) == a.mul(&f.apply(&a.basis(j)), &f.apply(&a.basis(i))))
        })
}

fn involutive(f: &AlgebraMap) -> bool {
    let m = f.matrix();
    m * m == Matrix::identity(m.field(), m.rows())
}

fn involution_cases() -> Vec<Case> {
    corpus().into_iter().filter(|c| c.gamma.is_involution()).collect()
}

#[test]
fn hyperbolic_involutions_satisfy_the_axioms() {
    for case in involution_cases() {
        let theta = standard_involution(&case.gamma).unwrap();
        for (p, generates) in [
            (Module::regular(case.algebra.clone()), true),
            (case.self_dual_ideal(), case.name != "UT3(Q)"),
        ] {
            let result = hyperbolic_involution(theta.double_module(), &theta, &p);
            if !generates {
                // e_11 A ⊕ (e_11 A)^[1] misses the other two indecomposable projectives
                assert!(matches!(result, Err(Error::NotGenerator)), "{}", case.name);
                continue;
            }
            let h = result.unwrap();
            assert!(anti_multiplicative(&h.endomorphisms.algebra, &h.involution), "{}", case.name);
            assert!(involutive(&h.involution), "{}", case.name);
            assert!(h.form.is_symmetric(&theta), "{}", case.name);
            assert!(has_type(&h.endomorphisms, &h.involution, &h.type_map), "{}", case.name);
        }
    }
}

#[test]
fn transfer_after_anti_structure_returns_an_involution() {
    let search = SearchConfig::default();
    for case in involution_cases() {
        if case.algebra.dim() > 4 {
            continue;
        }
        let s = AntiStructure::new(case.gamma.clone(), case.algebra.unit().clone()).unwrap();
        let alpha = anti_structure_m2_involution(&s).unwrap();
        assert!(involutive(&alpha));
        let t = transfer_involution(&case.algebra, 2, &alpha, &search).unwrap();
        assert!(anti_multiplicative(&case.algebra, &t.beta), "{}", case.name);
        assert!(involutive(&t.beta), "{}", case.name);
    }
}

fn check_standard(a: &Arc<Algebra>, gamma: &AlgebraMap, n: usize) {
    let alpha = transpose_gamma(gamma, n).unwrap();
    let s = reduce_to_standard(a, n, &alpha, &SearchConfig::default()).unwrap();
    let k = &s.k_alpha.double_module;
    let psi = &s.identification;
    for i in 0..a.dim() {
        let g = s.gamma.apply(&a.basis(i));
        for x in 0..a.dim() {
            let lhs = k.action(0)[i].mul_vec(&psi.mul_vec(&a.basis(x)));
            let rhs = psi.mul_vec(&a.mul(&g, &a.basis(x)));
            assert_eq!(lhs, rhs);
        }
    }
    let theta = s.theta.expect("transposes are involutions");
    let j = jacobson_radical(a).unwrap();
    if j.is_empty() {
        return;
    }
    let span = Coordinates::new(a.field(), a.dim(), &j).unwrap();
    for x in &j {
        assert!(span.contains(&theta.apply(x)), "θ(J) ⊄ J");
    }
}

#[test]
fn reduction_identifies_the_standard_double_module() {
    for case in involution_cases() {
        if case.algebra.dim() <= 4 {
            check_standard(&case.algebra, &case.gamma, 2);
        }
    }
}

#[test]
fn theta_preserves_the_radical() {
    // Q[x]/(x^2) with the identity, and UT3 with its flip
    let dual_numbers = Arc::new(quadratic_algebra(q(), 0));
    let id = AlgebraMap::identity_anti(dual_numbers.clone()).unwrap();
    check_standard(&dual_numbers, &id, 2);
    let ut3 = common::ut3();
    check_standard(&ut3.algebra, &ut3.gamma, 1);
}

#[test]
fn scharlau_rotation_has_no_anti_structure() {
    let p = scharlau_poset();
    let a = Arc::new(incidence_algebra(Field::Rationals, &p).unwrap());
    let gamma = morita_core::posets::incidence_anti_automorphism(a, &p, &scharlau_rotation()).unwrap();
    let found = find_anti_structure(&gamma, &SearchConfig::default()).unwrap();
    assert!(matches!(found, AntiStructureSearch::Impossible { .. }));
}
