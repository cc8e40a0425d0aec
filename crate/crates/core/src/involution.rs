//! Constructions of involutions and anti-automorphisms: hyperbolic involutions,
//! the anti-structure involution on `M_2(A)`, reduction of anti-automorphisms of
//! `M_n(A)` to standard form, transfer of involutions from `M_n(A)` to `A`, and
//! anti-automorphisms built from duality orbits of projectives.

use std::sync::Arc;

use crate::algebra::{
    center, is_unit, jacobson_radical, matrix_algebra, tensor_product, Algebra, AlgebraMap,
    Variance,
};
use crate::error::{Error, Result};
use crate::forms::{
    adjoints, check_double_progenerator, corresponding_anti_automorphism, double_module_type,
    dual_module, form_from_anti_automorphism, form_from_right_adjoint, has_type, BilinearForm,
    DoubleModule, DoubleModuleInvolution, FormFromAnti,
};
use crate::linalg::{
    invert, kernel_basis, kronecker, vec_add, vec_sub, Coordinates, Field, Matrix,
    Scalar, Vector,
};
use crate::module::{
    decompose, endomorphism_algebra, is_generator, is_isomorphic, is_projective,
    EndomorphismAlgebra, Module,
};
use crate::search::{height_for_trial, random_vector, SearchConfig};

/// `(γ, v)` with `v^γ = v^{-1}` and `r^{γγ} = v r v^{-1}`.
#[derive(Clone, Debug)]
pub struct AntiStructure {
    algebra: Arc<Algebra>,
    gamma: AlgebraMap,
    v: Vector,
}

impl AntiStructure {
    pub fn new(gamma: AlgebraMap, v: Vector) -> Result<AntiStructure> {
        let a = anti_automorphism_source(&gamma)?;
        let vinv =
            is_unit(&a, &v).ok_or_else(|| Error::InvariantViolation("v is not a unit".into()))?;
        if gamma.apply(&v) != vinv {
            return Err(Error::InvariantViolation("v^γ != v^-1".into()));
        }
        for i in 0..a.dim() {
            let r = a.basis(i);
            if gamma.apply(&gamma.apply(&r)) != a.mul3(&v, &r, &vinv) {
                return Err(Error::InvariantViolation(format!(
                    "γ² is not conjugation by v on {}",
                    a.names()[i]
                )));
            }
        }
        Ok(AntiStructure {
            algebra: a,
            gamma,
            v,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn gamma(&self) -> &AlgebraMap {
        &self.gamma
    }

    pub fn v(&self) -> &Vector {
        &self.v
    }
}

fn anti_automorphism_source(gamma: &AlgebraMap) -> Result<Arc<Algebra>> {
    if gamma.variance() != Variance::AntiHomomorphism || gamma.source() != gamma.target() {
        return Err(Error::InvalidInput("expected an anti-automorphism".into()));
    }
    if !gamma.is_bijective() {
        return Err(Error::InvalidInput("anti-endomorphism is not bijective".into()));
    }
    Ok(gamma.source().clone())
}

/// `(γ, θ)` with `θ² = id` and `(a^γ b c)^θ = c^γ b^θ a`.
#[derive(Clone, Debug)]
pub struct ThetaPair {
    algebra: Arc<Algebra>,
    gamma: AlgebraMap,
    theta: Matrix,
}

impl ThetaPair {
    pub fn new(gamma: AlgebraMap, theta: Matrix) -> Result<ThetaPair> {
        let a = anti_automorphism_source(&gamma)?;
        let f = a.field();
        let d = a.dim();
        if theta.rows() != d || theta.cols() != d {
            return Err(Error::DimensionMismatch("theta has the wrong size".into()));
        }
        if &theta * &theta != Matrix::identity(f, d) {
            return Err(Error::InvariantViolation("theta^2 != id".into()));
        }
        let images: Vec<Vector> = (0..d).map(|i| gamma.apply(&a.basis(i))).collect();
        let thetas: Vec<Vector> = theta.columns();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = theta.mul_vec(&a.mul3(&images[i], &a.basis(j), &a.basis(k)));
                    let rhs = a.mul3(&images[k], &thetas[j], &a.basis(i));
                    if lhs != rhs {
                        return Err(Error::InvariantViolation(format!(
                            "(a^γ b c)^θ = c^γ b^θ a fails on ({}, {}, {})",
                            a.names()[i],
                            a.names()[j],
                            a.names()[k]
                        )));
                    }
                }
            }
        }
        Ok(ThetaPair {
            algebra: a,
            gamma,
            theta,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn gamma(&self) -> &AlgebraMap {
        &self.gamma
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.theta.mul_vec(x)
    }
}

/// The involution of `End_R(P ⊕ P^[1])` attached to `b(x ⊕ f, y ⊕ g) = g(x) + f(y)^θ`.
#[derive(Clone, Debug)]
pub struct Hyperbolic {
    pub module: Module,
    pub form: BilinearForm,
    pub endomorphisms: EndomorphismAlgebra,
    pub involution: AlgebraMap,
    pub type_map: AlgebraMap,
}

pub fn hyperbolic_involution(
    k: &DoubleModule,
    theta: &DoubleModuleInvolution,
    p: &Module,
) -> Result<Hyperbolic> {
    if theta.double_module() != k {
        return Err(Error::InvalidInput("θ is an involution of another double module".into()));
    }
    check_double_progenerator(k)?;
    if !is_projective(p)? {
        return Err(Error::NotProjective);
    }
    if !is_generator(p)? {
        return Err(Error::NotGenerator);
    }
    let dual = dual_module(p, k, 1)?;
    let module = p.direct_sum(&dual.module);
    let (pd, h) = (p.dim(), dual.dim());
    let mut tensor = Vec::with_capacity((pd + h) * (pd + h));
    let zero = crate::linalg::zero_vector(k.field(), k.dim());
    for x in 0..pd + h {
        for y in 0..pd + h {
            tensor.push(match (x < pd, y < pd) {
                (true, false) => dual.hom.basis[y - pd].column(x),
                (false, true) => theta.apply(&dual.hom.basis[x - pd].column(y)),
                _ => zero.clone(),
            });
        }
    }
    let form = BilinearForm::new(module.clone(), k.clone(), tensor)?;
    if !form.is_symmetric(theta) {
        return Err(Error::InvariantViolation("hyperbolic form is not θ-symmetric".into()));
    }
    let endomorphisms = endomorphism_algebra(&module)?;
    let involution = corresponding_anti_automorphism(&form, &endomorphisms)?;
    if !involution.is_involution() {
        return Err(Error::InvariantViolation("hyperbolic anti-automorphism is not an involution".into()));
    }
    let type_map = double_module_type(k)?;
    if !has_type(&endomorphisms, &involution, &type_map) {
        return Err(Error::WrongType("involution type differs from the type of K".into()));
    }
    Ok(Hyperbolic {
        module,
        form,
        endomorphisms,
        involution,
        type_map,
    })
}

/// `M_n(A)` realised as `M_n(F) ⊗ A`, basis `e_st ⊗ a_k` at index `(s n + t) dim A + k`.
pub fn matrix_ring_over(a: &Algebra, n: usize) -> Result<Algebra> {
    tensor_product(&matrix_algebra(a.field(), n)?, a)
}

fn entry_index(n: usize, d: usize, s: usize, t: usize, k: usize) -> usize {
    (s * n + t) * d + k
}

/// `[[a, b], [c, d]] -> [[d^γ, b^γ v], [v^{-1} c^γ, a^{γ^{-1}}]]` on `M_2(A)`.
pub fn anti_structure_m2_involution(s: &AntiStructure) -> Result<AlgebraMap> {
    let a = s.algebra();
    let f = a.field();
    let d = a.dim();
    let m2 = Arc::new(matrix_ring_over(a, 2)?);
    let gamma = s.gamma();
    let ginv = gamma.inverse()?;
    let vinv = is_unit(a, s.v()).expect("validated unit");
    let mut matrix = Matrix::zeros(f, 4 * d, 4 * d);
    for (st, (src_s, src_t)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        for k in 0..d {
            let x = a.basis(k);
            let (dst, image) = match st {
                0 => ((1, 1), ginv.apply(&x)),
                1 => ((0, 1), a.mul(&gamma.apply(&x), s.v())),
                2 => ((1, 0), a.mul(&vinv, &gamma.apply(&x))),
                _ => ((0, 0), gamma.apply(&x)),
            };
            let col = entry_index(2, d, src_s, src_t, k);
            for (kk, c) in image.into_iter().enumerate() {
                matrix.set(entry_index(2, d, dst.0, dst.1, kk), col, c);
            }
        }
    }
    let map = AlgebraMap::automorphism(m2, matrix, Variance::AntiHomomorphism)?;
    if !map.is_involution() {
        return Err(Error::InvariantViolation("anti-structure map is not an involution".into()));
    }
    Ok(map)
}

/// `(r_st) -> (r_ts^γ)` on `M_n(A)`.
pub fn transpose_gamma(gamma: &AlgebraMap, n: usize) -> Result<AlgebraMap> {
    let a = anti_automorphism_source(gamma)?;
    let f = a.field();
    let d = a.dim();
    let mn = Arc::new(matrix_ring_over(&a, n)?);
    let mut matrix = Matrix::zeros(f, n * n * d, n * n * d);
    for s in 0..n {
        for t in 0..n {
            for k in 0..d {
                let image = gamma.apply(&a.basis(k));
                for (kk, c) in image.into_iter().enumerate() {
                    matrix.set(entry_index(n, d, t, s, kk), entry_index(n, d, s, t, k), c);
                }
            }
        }
    }
    AlgebraMap::automorphism(mn, matrix, Variance::AntiHomomorphism)
}

fn same_structure(x: &Algebra, y: &Algebra) -> bool {
    x.field() == y.field() && x.dim() == y.dim() && x.constants() == y.constants() && x.unit() == y.unit()
}

/// `A^n` as a right `A`-module and `End_A(A^n) = M_n(A)` in the basis `E_st ⊗ L_{a_k}`.
fn free_module_endomorphisms(a: &Arc<Algebra>, n: usize) -> Result<EndomorphismAlgebra> {
    let f = a.field();
    let m = Module::free(a.clone(), n);
    let mut basis = Vec::with_capacity(n * n * a.dim());
    for s in 0..n {
        for t in 0..n {
            let e = Matrix::from_fn(f, n, n, |r, c| if r == s && c == t { f.one() } else { f.zero() });
            for k in 0..a.dim() {
                basis.push(kronecker(&e, &a.left_mul(&a.basis(k)))?);
            }
        }
    }
    EndomorphismAlgebra::from_basis(&m, basis)
}

/// Result of identifying `K_α` with the standard double module of `γ`.
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub gamma: AlgebraMap,
    pub theta: Option<ThetaPair>,
    /// `ψ: A_A -> (K_α)_1`, an isomorphism of right modules.
    pub identification: Matrix,
    pub k_alpha: FormFromAnti,
}

pub fn reduce_to_standard(
    a: &Arc<Algebra>,
    n: usize,
    alpha: &AlgebraMap,
    search: &SearchConfig,
) -> Result<StandardForm> {
    let mn = matrix_ring_over(a, n)?;
    if alpha.variance() != Variance::AntiHomomorphism
        || alpha.source() != alpha.target()
        || !same_structure(alpha.source(), &mn)
    {
        return Err(Error::InvalidInput(
            "expected an anti-automorphism of M_n(A) in the basis e_st ⊗ a_k".into(),
        ));
    }
    let end = free_module_endomorphisms(a, n)?;
    let alpha_end = AlgebraMap::automorphism(
        end.algebra.clone(),
        alpha.matrix().clone(),
        Variance::AntiHomomorphism,
    )?;
    let k_alpha = form_from_anti_automorphism(&end, &alpha_end)?;
    let k = &k_alpha.double_module;
    let psi = is_isomorphic(&Module::regular(a.clone()), &k.side(1)?, search)?.ok_or_else(|| {
        Error::InvariantViolation("K_1 is not isomorphic to A_A".into())
    })?;
    let psi_inv = invert(&psi)?.expect("isomorphism is invertible");
    let f = a.field();
    let k0 = psi.mul_vec(a.unit());
    let cols: Vec<Vector> = k
        .action(0)
        .iter()
        .map(|rho| psi_inv.mul_vec(&rho.mul_vec(&k0)))
        .collect();
    let gamma_matrix = Matrix::from_columns(f, a.dim(), &cols);
    let gamma = AlgebraMap::automorphism(a.clone(), gamma_matrix, Variance::AntiHomomorphism)?;
    for (i, rho) in k.action(0).iter().enumerate() {
        if &(&psi_inv * rho) * &psi != a.left_mul(&gamma.apply(&a.basis(i))) {
            return Err(Error::InvariantViolation(
                "k ⊙₀ r differs from r^γ k under the identification".into(),
            ));
        }
    }
    let theta = match &k_alpha.theta {
        Some(t) => Some(ThetaPair::new(
            gamma.clone(),
            &(&psi_inv * t.matrix()) * &psi,
        )?),
        None => None,
    };
    Ok(StandardForm {
        gamma,
        theta,
        identification: psi,
        k_alpha,
    })
}

/// Rewrites an anti-automorphism of `End_A(M)`, `M ≅ A^n`, as one of
/// `M_n(A) = M_n(F) ⊗ A` via an isomorphism `A^n -> M`.
pub fn transport_to_matrix_ring(
    end: &EndomorphismAlgebra,
    alpha: &AlgebraMap,
    search: &SearchConfig,
) -> Result<(usize, AlgebraMap)> {
    let m = &end.module;
    let a = m.algebra();
    if !m.dim().is_multiple_of(a.dim()) {
        return Err(Error::InvalidInput("module dimension is not a multiple of dim A".into()));
    }
    let n = m.dim() / a.dim();
    let free = free_module_endomorphisms(a, n)?;
    let phi = is_isomorphic(&free.module, m, search)?
        .ok_or_else(|| Error::InvalidInput("module is not free".into()))?;
    let phi_inv = invert(&phi)?.expect("isomorphism is invertible");
    let f = a.field();
    let cols = free
        .basis
        .iter()
        .map(|w| {
            end.from_matrix(&(&(&phi * w) * &phi_inv))
                .ok_or_else(|| Error::InvariantViolation("transported map is not an endomorphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let c = Matrix::from_columns(f, end.dim(), &cols);
    let c_inv = invert(&c)?.ok_or_else(|| Error::InvariantViolation("change of basis is singular".into()))?;
    let matrix = &(&c_inv * alpha.matrix()) * &c;
    let mn = Arc::new(matrix_ring_over(a, n)?);
    Ok((n, AlgebraMap::automorphism(mn, matrix, Variance::AntiHomomorphism)?))
}

/// An involution `β: r -> u^{-1} r^γ u` of `A` obtained from an involution of `M_n(A)`.
#[derive(Clone, Debug)]
pub struct Transfer {
    pub standard: StandardForm,
    pub unit: Vector,
    pub sign: i8,
    pub beta: AlgebraMap,
}

const TRANSFER_RANDOM_LIMIT: usize = 500;
const EXHAUSTIVE_LIMIT: u64 = 4096;

pub fn transfer_involution(
    a: &Arc<Algebra>,
    n: usize,
    alpha: &AlgebraMap,
    search: &SearchConfig,
) -> Result<Transfer> {
    if !alpha.is_involution() {
        return Err(Error::InvalidInput("α² != id".into()));
    }
    let standard = reduce_to_standard(a, n, alpha, search)?;
    let theta = standard
        .theta
        .clone()
        .ok_or_else(|| Error::InvariantViolation("involution without θ".into()))?;
    let f = a.field();
    let d = a.dim();
    let mut candidates: Vec<Vector> = (0..d).map(|i| a.basis(i)).collect();
    candidates.push(a.unit().clone());
    let mut rng = search.rng(0x7EA_0001);
    let trials = search.max_trials.min(TRANSFER_RANDOM_LIMIT);
    for t in 0..trials {
        candidates.push(random_vector(f, d, &mut rng, height_for_trial(t, trials)));
    }
    let try_candidate = |x: &Vector| -> Result<Option<Transfer>> {
        let tx = theta.apply(x);
        for (sign, u) in [(1i8, vec_add(x, &tx)), (-1i8, vec_sub(x, &tx))] {
            if let Some(beta) = conjugated_involution(a, &standard.gamma, &u)? {
                if transfer_type_matches(a, n, alpha, &beta) {
                    return Ok(Some(Transfer {
                        standard: standard.clone(),
                        unit: u,
                        sign,
                        beta,
                    }));
                }
            }
        }
        Ok(None)
    };
    for x in &candidates {
        if let Some(t) = try_candidate(x)? {
            return Ok(t);
        }
    }
    if let Some(size) = f.order().and_then(|p| p.checked_pow(d as u32)) {
        if size <= EXHAUSTIVE_LIMIT {
            for x in all_vectors(f, d) {
                if let Some(t) = try_candidate(&x)? {
                    return Ok(t);
                }
            }
        }
    }
    Err(Error::NoSymmetricUnit)
}

fn all_vectors(f: Field, d: usize) -> impl Iterator<Item = Vector> {
    let elems: Vec<Scalar> = f.elements().map(|e| e.collect()).unwrap_or_default();
    let q = elems.len();
    let total = q.pow(d as u32);
    (0..total).map(move |mut idx| {
        (0..d)
            .map(|_| {
                let e = elems[idx % q].clone();
                idx /= q;
                e
            })
            .collect()
    })
}

/// `r -> u^{-1} r^γ u` when `u` is a unit and this is an involution.
fn conjugated_involution(a: &Arc<Algebra>, gamma: &AlgebraMap, u: &Vector) -> Result<Option<AlgebraMap>> {
    let Some(uinv) = is_unit(a, u) else {
        return Ok(None);
    };
    let cols: Vec<Vector> = (0..a.dim())
        .map(|i| a.mul3(&uinv, &gamma.apply(&a.basis(i)), u))
        .collect();
    let m = Matrix::from_columns(a.field(), a.dim(), &cols);
    let beta = AlgebraMap::automorphism(a.clone(), m, Variance::AntiHomomorphism)?;
    Ok(beta.is_involution().then_some(beta))
}

/// `α(1 ⊗ c) = 1 ⊗ β(c)` for `c` in the centre of `A`.
fn transfer_type_matches(a: &Algebra, n: usize, alpha: &AlgebraMap, beta: &AlgebraMap) -> bool {
    let d = a.dim();
    let scalar = |c: &[Scalar]| -> Vector {
        let mut v = crate::linalg::zero_vector(a.field(), n * n * d);
        for s in 0..n {
            for (k, x) in c.iter().enumerate() {
                v[entry_index(n, d, s, s, k)] = x.clone();
            }
        }
        v
    };
    center(a)
        .basis
        .iter()
        .all(|c| alpha.apply(&scalar(c)) == scalar(&beta.apply(c)))
}

/// Outcome of searching for an anti-structure `(γ, v)` on a given `γ`.
#[derive(Clone, Debug)]
pub enum AntiStructureSearch {
    Found(AntiStructure),
    /// Every `v` with `r^{γγ} v = v r` lies in the radical, so none is a unit.
    Impossible { intertwiner_dim: usize },
}

pub fn find_anti_structure(
    gamma: &AlgebraMap,
    search: &SearchConfig,
) -> Result<AntiStructureSearch> {
    let a = anti_automorphism_source(gamma)?;
    let f = a.field();
    let d = a.dim();
    let g2 = gamma.compose(gamma)?;
    let mut system = Matrix::zeros(f, d * d, d);
    for i in 0..d {
        let block = &a.left_mul(&g2.apply(&a.basis(i))) - &a.right_mul(&a.basis(i));
        system.set_block(i * d, 0, &block);
    }
    let intertwiners = kernel_basis(&system);
    let radical = jacobson_radical(&a)?;
    let in_radical = if radical.is_empty() {
        intertwiners.is_empty()
    } else {
        let rad = Coordinates::new(f, d, &radical)?;
        intertwiners.iter().all(|v| rad.contains(v))
    };
    if in_radical {
        return Ok(AntiStructureSearch::Impossible {
            intertwiner_dim: intertwiners.len(),
        });
    }
    let mut rng = search.rng(0xA5_0001);
    let k = intertwiners.len();
    let mut candidates: Vec<Vector> = intertwiners.clone();
    for t in 0..search.max_trials {
        let c = random_vector(f, k, &mut rng, height_for_trial(t, search.max_trials));
        candidates.push(crate::linalg::combine(f, d, &c, &intertwiners));
    }
    for v in candidates {
        if let Some(vinv) = is_unit(&a, &v) {
            if gamma.apply(&v) == vinv {
                return Ok(AntiStructureSearch::Found(AntiStructure::new(gamma.clone(), v)?));
            }
        }
    }
    Err(Error::Inconclusive("no anti-structure unit found".into()))
}

/// The permutation induced by `P -> P^[1]` on indecomposable projectives.
#[derive(Clone, Debug)]
pub struct DualityOrbit {
    pub classes: Vec<Module>,
    pub multiplicities: Vec<usize>,
    pub permutation: Vec<usize>,
    /// Least `n >= 1` with `(R_R)^{[1]^n} ≅ R_R`.
    pub period: usize,
}

pub fn duality_orbit(a: &Arc<Algebra>, k: &DoubleModule, search: &SearchConfig) -> Result<DualityOrbit> {
    if k.algebra() != a {
        return Err(Error::InvalidInput("double module over another algebra".into()));
    }
    check_double_progenerator(k)?;
    let parts = decompose(&Module::regular(a.clone()), search)?;
    let mut classes: Vec<Module> = Vec::new();
    let mut multiplicities = Vec::new();
    'outer: for p in parts {
        for (c, rep) in classes.iter().enumerate() {
            if is_isomorphic(rep, &p, search)?.is_some() {
                multiplicities[c] += 1;
                continue 'outer;
            }
        }
        classes.push(p);
        multiplicities.push(1);
    }
    let mut permutation = Vec::with_capacity(classes.len());
    for rep in &classes {
        let dual = dual_module(rep, k, 1)?.module;
        let mut target = None;
        for (c, other) in classes.iter().enumerate() {
            if is_isomorphic(&dual, other, search)?.is_some() {
                target = Some(c);
                break;
            }
        }
        permutation.push(target.ok_or_else(|| {
            Error::InvariantViolation("dual of an indecomposable projective is not a summand of R".into())
        })?);
    }
    let mut seen = vec![false; classes.len()];
    for &p in &permutation {
        if std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvariantViolation("duality does not permute the classes".into()));
        }
    }
    let mut power: Vec<usize> = (0..classes.len()).collect();
    let mut period = 0;
    loop {
        period += 1;
        power = power.iter().map(|&c| permutation[c]).collect();
        if (0..classes.len()).all(|c| multiplicities[power[c]] == multiplicities[c]) {
            break;
        }
    }
    Ok(DualityOrbit {
        classes,
        multiplicities,
        permutation,
        period,
    })
}

/// `End_R(M)` for `M = ⊕_{m<n} R^{[1]^m}` with the anti-automorphism of the form
/// `b(x, y) = (f y)(x)`, `f: M -> M^[1]` an isomorphism.
#[derive(Clone, Debug)]
pub struct OrbitAntiAutomorphism {
    pub module: Module,
    pub form: BilinearForm,
    pub endomorphisms: EndomorphismAlgebra,
    pub anti_automorphism: AlgebraMap,
    pub type_map: AlgebraMap,
}

pub fn anti_automorphism_from_orbit(
    a: &Arc<Algebra>,
    k: &DoubleModule,
    n: usize,
    search: &SearchConfig,
) -> Result<OrbitAntiAutomorphism> {
    if n == 0 {
        return Err(Error::InvalidInput("orbit length must be positive".into()));
    }
    check_double_progenerator(k)?;
    let mut piece = Module::regular(a.clone());
    let mut module = piece.clone();
    for _ in 1..n {
        piece = dual_module(&piece, k, 1)?.module;
        module = module.direct_sum(&piece);
    }
    let dual = dual_module(&module, k, 1)?;
    let f = is_isomorphic(&module, &dual.module, search)?
        .ok_or_else(|| Error::InvalidInput(format!("M is not isomorphic to M^[1] for n = {n}")))?;
    let form = form_from_right_adjoint(&module, k, &dual, &f)?;
    let adj = adjoints(&form)?;
    if !adj.is_regular() {
        return Err(Error::NotRegular);
    }
    let endomorphisms = endomorphism_algebra(&module)?;
    let anti_automorphism = corresponding_anti_automorphism(&form, &endomorphisms)?;
    let type_map = double_module_type(k)?;
    if !has_type(&endomorphisms, &anti_automorphism, &type_map) {
        return Err(Error::WrongType("anti-automorphism type differs from the type of K".into()));
    }
    Ok(OrbitAntiAutomorphism {
        module,
        form,
        endomorphisms,
        anti_automorphism,
        type_map,
    })
}
