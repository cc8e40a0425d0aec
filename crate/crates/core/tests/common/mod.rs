#![allow(dead_code)]

use std::sync::Arc;

use morita_core::algebra::{
    matrix_algebra, matrix_transpose, quaternion_algebra, quaternion_conjugation, right_ideal_module,
    scalar_algebra, Algebra, AlgebraMap,
};
use morita_core::linalg::unit_vector;
use morita_core::module::Module;
use morita_core::posets::{incidence_algebra, incidence_anti_automorphism, Poset};
use morita_core::Field;

pub fn q() -> Field {
    Field::Rationals
}

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

/// An algebra with an anti-automorphism, named for failure messages.
pub struct Case {
    pub name: &'static str,
    pub algebra: Arc<Algebra>,
    pub gamma: AlgebraMap,
    /// Basis index of an idempotent `e` with `eA` isomorphic to its dual.
    pub self_dual_idempotent: usize,
}

impl Case {
    pub fn self_dual_ideal(&self) -> Module {
        let a = &self.algebra;
        right_ideal_module(a, &unit_vector(a.field(), a.dim(), self.self_dual_idempotent)).unwrap()
    }
}

pub fn rationals() -> Case {
    let a = Arc::new(scalar_algebra(q()));
    Case {
        name: "Q",
        gamma: AlgebraMap::identity_anti(a.clone()).unwrap(),
        algebra: a,
        self_dual_idempotent: 0,
    }
}

pub fn m2(field: Field, name: &'static str) -> Case {
    let a = Arc::new(matrix_algebra(field, 2).unwrap());
    Case {
        name,
        gamma: matrix_transpose(a.clone(), 2).unwrap(),
        algebra: a,
        self_dual_idempotent: 0,
    }
}

/// Upper-triangular 3x3 matrices as the incidence algebra of a 3-chain, with
/// the flip `e_ij -> e_{2-j, 2-i}`.
pub fn ut3() -> Case {
    let p = Poset::chain(3);
    let a = Arc::new(incidence_algebra(q(), &p).unwrap());
    Case {
        name: "UT3(Q)",
        gamma: incidence_anti_automorphism(a.clone(), &p, &[2, 1, 0]).unwrap(),
        algebra: a,
        self_dual_idempotent: 3,
    }
}

pub fn quaternions() -> Case {
    let a = Arc::new(quaternion_algebra(q(), -1, -1).unwrap());
    Case {
        name: "H(-1,-1)",
        gamma: quaternion_conjugation(a.clone()).unwrap(),
        algebra: a,
        self_dual_idempotent: 0,
    }
}

pub fn corpus() -> Vec<Case> {
    vec![rationals(), m2(q(), "M2(Q)"), m2(f5(), "M2(F5)"), ut3(), quaternions()]
}

/// The right ideal generated by the first basis element, usually `e_11 A`.
pub fn first_ideal(a: &Arc<Algebra>) -> Module {
    right_ideal_module(a, &unit_vector(a.field(), a.dim(), 0)).unwrap()
}

/// The right ideal `e A` for the last diagonal idempotent of `UT3`.
pub fn last_ideal(a: &Arc<Algebra>) -> Module {
    right_ideal_module(a, &unit_vector(a.field(), a.dim(), a.dim() - 1)).unwrap()
}
