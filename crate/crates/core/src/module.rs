//! Finite-dimensional right modules, hom spaces, endomorphism algebras and
//! isomorphism testing.
//!
//! A module stores one matrix `rho(e_i)` per algebra basis element; the vector
//! `x·e_i` is `rho(e_i) * x`. Hence `rho(e_j) * rho(e_i) = rho(e_i e_j)`.

use std::sync::Arc;

use crate::algebra::{primitive_idempotents, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{
    kernel_basis, solve, solve_many, unit_vector, Coordinates, Field, IncrementalBasis, Matrix,
    Scalar, Vector,
};
use crate::search::{height_for_trial, random_vector, SearchConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl Module {
    /// Validates the action matrices against the structure constants.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        let m = Module::new_unchecked(algebra, dim, action)?;
        m.validate()?;
        Ok(m)
    }

    fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dim {}",
                action.len(),
                algebra.dim()
            )));
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix is {}x{}, module has dim {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Module {
            algebra,
            dim,
            action,
        })
    }

    pub fn validate(&self) -> Result<()> {
        validate_action(&self.algebra, self.dim, &self.action)
    }

    /// `R_R`: `rho(e_i)` is right multiplication by `e_i`.
    pub fn regular(algebra: Arc<Algebra>) -> Module {
        let action = (0..algebra.dim())
            .map(|i| algebra.right_mul(&algebra.basis(i)))
            .collect();
        Module {
            dim: algebra.dim(),
            algebra,
            action,
        }
    }

    /// The free module `R^n`.
    pub fn free(algebra: Arc<Algebra>, n: usize) -> Module {
        let r = Module::regular(algebra.clone());
        (0..n).fold(Module::zero(algebra), |acc, _| acc.direct_sum(&r))
    }

    pub fn zero(algebra: Arc<Algebra>) -> Module {
        let f = algebra.field();
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module {
            algebra,
            dim: 0,
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of `x -> x·a` for an algebra element `a`.
    pub fn action_of(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim, self.dim);
        for (c, r) in a.iter().zip(&self.action) {
            if !c.is_zero() {
                m = &m + &r.scale(c);
            }
        }
        m
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| Matrix::block_diagonal(self.field(), &[a, b]))
            .collect();
        Module {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            action,
        }
    }

    /// The submodule spanned by `basis`, which must be invariant and independent.
    pub fn submodule(&self, basis: &[Vector]) -> Result<Module> {
        let coords = Coordinates::new(self.field(), self.dim, basis)?;
        let k = basis.len();
        let action = self
            .action
            .iter()
            .map(|r| {
                let cols = basis
                    .iter()
                    .map(|b| {
                        coords.coords(&r.mul_vec(b)).ok_or_else(|| {
                            Error::InvariantViolation("subspace is not a submodule".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(self.field(), k, &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Module {
            algebra: self.algebra.clone(),
            dim: k,
            action,
        })
    }

    /// The same module written in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Module> {
        let inv = crate::linalg::invert(p)?
            .ok_or_else(|| Error::InvalidInput("change of basis is singular".into()))?;
        let action = self.action.iter().map(|r| &(&inv * r) * p).collect();
        Ok(Module {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action,
        })
    }

    /// True when `f: self -> other` commutes with every action matrix.
    pub fn is_homomorphism_to(&self, other: &Module, f: &Matrix) -> bool {
        f.rows() == other.dim
            && f.cols() == self.dim
            && self
                .action
                .iter()
                .zip(&other.action)
                .all(|(a, b)| (f * a) == (b * f))
    }

    /// A generating set found by spinning standard basis vectors.
    pub fn generators(&self) -> Vec<Vector> {
        let mut span = IncrementalBasis::new(self.field(), self.dim);
        let mut gens = Vec::new();
        for j in 0..self.dim {
            let v = unit_vector(self.field(), self.dim, j);
            if span.contains(&v) {
                continue;
            }
            for r in &self.action {
                let _ = span.insert(&r.mul_vec(&v));
            }
            gens.push(v);
            if span.dim() == self.dim {
                break;
            }
        }
        gens
    }
}

pub(crate) fn validate_action(alg: &Algebra, dim: usize, action: &[Matrix]) -> Result<()> {
    let f = alg.field();
    if action.len() != alg.dim() {
        return Err(Error::DimensionMismatch("wrong number of action matrices".into()));
    }
    let mut unit = Matrix::zeros(f, dim, dim);
    for (c, r) in alg.unit().iter().zip(action) {
        if !c.is_zero() {
            unit = &unit + &r.scale(c);
        }
    }
    if unit != Matrix::identity(f, dim) {
        return Err(Error::InvariantViolation("the unit does not act as the identity".into()));
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = &action[j] * &action[i];
            let mut rhs = Matrix::zeros(f, dim, dim);
            for (k, c) in alg.basis_product(i, j) {
                rhs = &rhs + &action[*k].scale(c);
            }
            if lhs != rhs {
                return Err(Error::InvariantViolation(format!(
                    "action is not compatible with the product ({}, {})",
                    alg.names()[i],
                    alg.names()[j]
                )));
            }
        }
    }
    Ok(())
}

/// A free presentation data `pi: R^s -> M` built from a generating set.
struct Presentation {
    /// `dim M x (s * dim A)`, column `t * d + i` is `g_t·e_i`.
    pi: Matrix,
    generators: usize,
    /// Basis of `ker pi`.
    relations: Vec<Vector>,
    /// `(s * dim A) x dim M` with `pi * section = I`.
    section: Matrix,
}

fn presentation(m: &Module) -> Presentation {
    let gens = m.generators();
    let d = m.algebra.dim();
    let f = m.field();
    let mut pi = Matrix::zeros(f, m.dim, gens.len() * d);
    for (t, g) in gens.iter().enumerate() {
        for (i, r) in m.action.iter().enumerate() {
            let v = r.mul_vec(g);
            for (row, x) in v.into_iter().enumerate() {
                pi.set(row, t * d + i, x);
            }
        }
    }
    let relations = kernel_basis(&pi);
    let section = solve_many(&pi, &Matrix::identity(f, m.dim))
        .expect("shapes agree")
        .expect("generators span the module");
    Presentation {
        pi,
        generators: gens.len(),
        relations,
        section,
    }
}

/// A basis of `Hom_R(M, N)`; each map is a `dim N x dim M` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
    coords: Coordinates,
}

impl HomSpace {
    /// Replaces the spanning maps by the reduced echelon basis of their span.
    fn new(field: Field, source_dim: usize, target_dim: usize, basis: Vec<Matrix>) -> HomSpace {
        let len = source_dim * target_dim;
        let vecs: Vec<Vector> = if basis.is_empty() {
            Vec::new()
        } else {
            let rows = basis.iter().map(Matrix::vectorize).collect();
            let (r, pivots) = Matrix::from_rows(field, len, rows)
                .expect("vectorized maps have equal length")
                .rref();
            (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
        };
        let basis = vecs
            .iter()
            .map(|v| Matrix::unvectorize(field, target_dim, source_dim, v))
            .collect();
        let coords = Coordinates::new(field, source_dim * target_dim, &vecs)
            .expect("hom basis is independent");
        HomSpace {
            source_dim,
            target_dim,
            basis,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a map in this basis, `None` if it is not a homomorphism.
    pub fn coords(&self, f: &Matrix) -> Option<Vector> {
        self.coords.coords(&f.vectorize())
    }

    pub fn combine(&self, field: Field, coeffs: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, self.target_dim, self.source_dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &b.scale(c);
            }
        }
        m
    }
}

/// `Hom_R(M, N)` by solving for the images of a generating set of `M`.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    if m.algebra != n.algebra {
        return Err(Error::InvalidInput("modules over different algebras".into()));
    }
    let f = m.field();
    if m.dim == 0 || n.dim == 0 {
        return Ok(HomSpace::new(f, m.dim, n.dim, Vec::new()));
    }
    let pres = presentation(m);
    let d = m.algebra.dim();
    let s = pres.generators;
    let nd = n.dim;
    // unknowns: images n_t of the generators, stacked
    let mut system = Matrix::zeros(f, pres.relations.len() * nd, s * nd);
    for (r, rel) in pres.relations.iter().enumerate() {
        for t in 0..s {
            let mut block = Matrix::zeros(f, nd, nd);
            for i in 0..d {
                let c = &rel[t * d + i];
                if !c.is_zero() {
                    block = &block + &n.action[i].scale(c);
                }
            }
            system.set_block(r * nd, t * nd, &block);
        }
    }
    let solutions = if pres.relations.is_empty() {
        (0..s * nd).map(|i| unit_vector(f, s * nd, i)).collect()
    } else {
        kernel_basis(&system)
    };
    let mut basis = Vec::with_capacity(solutions.len());
    for sol in &solutions {
        // image of generator t times e_i
        let mut y = Matrix::zeros(f, nd, s * d);
        for t in 0..s {
            let nt = &sol[t * nd..(t + 1) * nd];
            for i in 0..d {
                let v = n.action[i].mul_vec(nt);
                for (row, x) in v.into_iter().enumerate() {
                    y.set(row, t * d + i, x);
                }
            }
        }
        let map = &y * &pres.section;
        if !m.is_homomorphism_to(n, &map) {
            return Err(Error::InvariantViolation("computed map does not intertwine".into()));
        }
        basis.push(map);
    }
    Ok(HomSpace::new(f, m.dim, n.dim, basis))
}

/// Reference implementation of `Hom_R(M, N)` from the full Sylvester system
/// `f rho_M(e_i) = rho_N(e_i) f`; quadratic in the number of unknowns.
pub fn hom_space_naive(m: &Module, n: &Module) -> Result<HomSpace> {
    if m.algebra != n.algebra {
        return Err(Error::InvalidInput("modules over different algebras".into()));
    }
    let f = m.field();
    let (md, nd) = (m.dim, n.dim);
    if md == 0 || nd == 0 {
        return Ok(HomSpace::new(f, md, nd, Vec::new()));
    }
    let unknowns = md * nd;
    let mut system = Matrix::zeros(f, m.action.len() * unknowns, unknowns);
    for (blk, (a, b)) in m.action.iter().zip(&n.action).enumerate() {
        // vec(F A - B F) = (A^T ⊗ I - I ⊗ B) vec(F), column-major vec
        let left = crate::linalg::kronecker(&a.transpose(), &Matrix::identity(f, nd))?;
        let right = crate::linalg::kronecker(&Matrix::identity(f, md), b)?;
        system.set_block(blk * unknowns, 0, &(&left - &right));
    }
    let basis = kernel_basis(&system)
        .into_iter()
        .map(|v| Matrix::unvectorize(f, nd, md, &v))
        .collect();
    Ok(HomSpace::new(f, md, nd, basis))
}

/// `End_R(M)` with structure constants in a chosen basis of endomorphisms.
///
/// Endomorphisms act on the left of column vectors; the product `w_i w_j` is the
/// matrix product, i.e. apply `w_j` first.
#[derive(Clone, Debug)]
pub struct EndomorphismAlgebra {
    pub module: Module,
    pub algebra: Arc<Algebra>,
    pub basis: Vec<Matrix>,
    coords: Coordinates,
}

impl EndomorphismAlgebra {
    /// Builds the algebra structure on a given basis of `End_R(M)`.
    pub fn from_basis(module: &Module, basis: Vec<Matrix>) -> Result<EndomorphismAlgebra> {
        let f = module.field();
        let n = module.dim;
        for w in &basis {
            if !module.is_homomorphism_to(module, w) {
                return Err(Error::InvalidInput("basis element is not an endomorphism".into()));
            }
        }
        let vecs: Vec<Vector> = basis.iter().map(Matrix::vectorize).collect();
        let coords = Coordinates::new(f, n * n, &vecs)?;
        let k = basis.len();
        let mut products = Vec::with_capacity(k * k);
        for a in &basis {
            for b in &basis {
                products.push(coords.coords(&(a * b).vectorize()).ok_or_else(|| {
                    Error::InvariantViolation("endomorphisms are not closed under composition".into())
                })?);
            }
        }
        let unit = coords
            .coords(&Matrix::identity(f, n).vectorize())
            .ok_or_else(|| Error::InvalidInput("identity is not in the span".into()))?;
        let names = (0..k).map(|i| format!("w{i}")).collect();
        let algebra = Algebra::from_fn(f, names, unit, |i, j| products[i * k + j].clone());
        Ok(EndomorphismAlgebra {
            module: module.clone(),
            algebra: Arc::new(algebra),
            basis,
            coords,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_matrix(&self, x: &[Scalar]) -> Matrix {
        let f = self.module.field();
        let n = self.module.dim;
        let mut m = Matrix::zeros(f, n, n);
        for (c, w) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &w.scale(c);
            }
        }
        m
    }

    pub fn from_matrix(&self, m: &Matrix) -> Option<Vector> {
        self.coords.coords(&m.vectorize())
    }

    /// The element acting as right multiplication by a central element `c` of the base algebra.
    pub fn central_element(&self, c: &[Scalar]) -> Option<Vector> {
        self.from_matrix(&self.module.action_of(c))
    }
}

pub fn endomorphism_algebra(m: &Module) -> Result<EndomorphismAlgebra> {
    let h = hom_space(m, m)?;
    EndomorphismAlgebra::from_basis(m, h.basis)
}

/// Upper bound on grid points visited by the deterministic isomorphism certificate.
const GRID_POINT_LIMIT: u128 = 1_000_000;
/// Upper bound on `points * dim^3` for the same search.
const GRID_WORK_LIMIT: u128 = 200_000_000;

fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && m.rank() == m.rows()
}

/// Searches `Hom(M, N)` for an isomorphism.
///
/// Returns `Ok(None)` only when non-isomorphism is proven: by a dimension
/// obstruction, or by exhausting a grid of coefficient vectors large enough that
/// `det(sum l_k F_k)` (degree at most `dim M` in each `l_k`) would have to be
/// nonzero somewhere on it. Otherwise the search reports `Inconclusive`.
pub fn is_isomorphic(m: &Module, n: &Module, search: &SearchConfig) -> Result<Option<Matrix>> {
    if m.algebra != n.algebra {
        return Err(Error::InvalidInput("modules over different algebras".into()));
    }
    if m.dim != n.dim {
        return Ok(None);
    }
    let f = m.field();
    if m.dim == 0 {
        return Ok(Some(Matrix::zeros(f, 0, 0)));
    }
    let hmn = hom_space(m, n)?;
    let hnm = hom_space(n, m)?;
    let em = hom_space(m, m)?.dim();
    let en = hom_space(n, n)?.dim();
    if hmn.dim() != em || hnm.dim() != en || em != en || hmn.dim() == 0 {
        return Ok(None);
    }
    let check = |cand: &Matrix| -> Option<Matrix> {
        (is_invertible(cand) && m.is_homomorphism_to(n, cand)).then(|| cand.clone())
    };
    for b in &hmn.basis {
        if let Some(iso) = check(b) {
            return Ok(Some(iso));
        }
    }
    let k = hmn.dim();
    let mut rng = search.rng(0x150_0001);
    let trials = search.max_trials;
    for t in 0..trials {
        let coeffs = random_vector(f, k, &mut rng, height_for_trial(t, trials));
        if let Some(iso) = check(&hmn.combine(f, &coeffs)) {
            return Ok(Some(iso));
        }
    }
    grid_search(m, n, &hmn)
}

fn grid_search(m: &Module, n: &Module, hmn: &HomSpace) -> Result<Option<Matrix>> {
    let f = m.field();
    let k = hmn.dim();
    let dim = m.dim as u128;
    let side = match f {
        Field::Rationals => dim + 1,
        Field::Prime(p) => (dim + 1).min(p as u128),
    };
    let points = (side as f64).powi(k as i32);
    if points > GRID_POINT_LIMIT as f64 || points * (dim * dim * dim) as f64 > GRID_WORK_LIMIT as f64 {
        return Err(Error::Inconclusive(format!(
            "no isomorphism found; the exhaustive grid of {side}^{k} points exceeds the budget"
        )));
    }
    let values: Vec<Scalar> = (0..side as i64).map(|v| f.from_i64(v)).collect();
    let mut idx = vec![0usize; k];
    loop {
        let coeffs: Vec<Scalar> = idx.iter().map(|&i| values[i].clone()).collect();
        let cand = hmn.combine(f, &coeffs);
        if is_invertible(&cand) {
            if m.is_homomorphism_to(n, &cand) {
                return Ok(Some(cand));
            }
            return Err(Error::InvariantViolation("hom basis element fails to intertwine".into()));
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < side as usize {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// An indecomposable summand together with its inclusion into the module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    /// `dim M x dim summand`; columns span the summand inside `M`.
    pub inclusion: Matrix,
}

/// Splits `M` along a complete set of primitive idempotents of `End_R(M)`.
pub fn decompose_with_inclusions(m: &Module, search: &SearchConfig) -> Result<Vec<Summand>> {
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    let end = endomorphism_algebra(m)?;
    let idems = primitive_idempotents(&end.algebra, search)?;
    idems
        .iter()
        .map(|e| {
            let basis = end.to_matrix(e).column_space();
            let module = m.submodule(&basis)?;
            let inclusion = Matrix::from_columns(m.field(), m.dim, &basis);
            Ok(Summand { module, inclusion })
        })
        .collect()
}

pub fn decompose(m: &Module, search: &SearchConfig) -> Result<Vec<Module>> {
    Ok(decompose_with_inclusions(m, search)?
        .into_iter()
        .map(|s| s.module)
        .collect())
}

/// Whether the surjection `R^s -> M` from a generating set splits.
pub fn is_projective(m: &Module) -> Result<bool> {
    if m.dim == 0 {
        return Ok(true);
    }
    let pres = presentation(m);
    let free = Module::free(m.algebra.clone(), pres.generators);
    let h = hom_space(m, &free)?;
    let f = m.field();
    let n = m.dim;
    let cols: Vec<Vector> = h.basis.iter().map(|s| (&pres.pi * s).vectorize()).collect();
    if cols.is_empty() {
        return Ok(false);
    }
    let system = Matrix::from_columns(f, n * n, &cols);
    Ok(solve(&system, &Matrix::identity(f, n).vectorize())?.is_some())
}

/// Whether the trace ideal `sum f(M)`, `f in Hom(M, R_R)`, is all of `R`.
pub fn is_generator(m: &Module) -> Result<bool> {
    let a = m.algebra.clone();
    let r = Module::regular(a.clone());
    let h = hom_space(m, &r)?;
    let mut span = IncrementalBasis::new(m.field(), a.dim());
    for f in &h.basis {
        for c in f.columns() {
            let _ = span.insert(&c);
        }
    }
    Ok(span.dim() == a.dim())
}

pub fn is_progenerator(m: &Module) -> Result<bool> {
    Ok(is_projective(m)? && is_generator(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, matrix_algebra, scalar_algebra};

    fn q() -> Field {
        Field::Rationals
    }

    /// Column vectors `F^2` as a right `M_2(F)`-module: `x·a = a^T x`.
    pub(crate) fn column_module(a: Arc<Algebra>) -> Module {
        let f = a.field();
        let action = (0..4)
            .map(|idx| {
                let (i, j) = (idx / 2, idx % 2);
                // right action of e_ij on row vectors: e_i ↦ e_j
                Matrix::from_fn(f, 2, 2, |r, c| if r == j && c == i { f.one() } else { f.zero() })
            })
            .collect();
        Module::new(a, 2, action).unwrap()
    }

    #[test]
    fn regular_module_examples() {
        let qa = Arc::new(scalar_algebra(q()));
        assert_eq!(Module::regular(qa).dim(), 1);
        let m2 = Arc::new(matrix_algebra(q(), 2).unwrap());
        let r = Module::regular(m2.clone());
        r.validate().unwrap();
        assert_eq!(r.action_of(m2.unit()), Matrix::identity(q(), 4));
        let parts = decompose(&r, &SearchConfig::default()).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.dim() == 2));
        let col = column_module(m2);
        for p in &parts {
            assert!(is_isomorphic(p, &col, &SearchConfig::default()).unwrap().is_some());
        }
    }

    #[test]
    fn hom_space_examples() {
        let m2 = Arc::new(matrix_algebra(q(), 2).unwrap());
        let r = Module::regular(m2.clone());
        assert_eq!(hom_space(&r, &r).unwrap().dim(), 4);
        let col = column_module(m2.clone());
        assert_eq!(hom_space(&col, &col).unwrap().dim(), 1);
        let mq = Arc::new(direct_product(&matrix_algebra(q(), 2).unwrap(), &scalar_algebra(q())).unwrap());
        let parts = decompose(&Module::regular(mq), &SearchConfig::default()).unwrap();
        let small = parts.iter().find(|p| p.dim() == 1).unwrap();
        let big = parts.iter().find(|p| p.dim() == 2).unwrap();
        assert_eq!(hom_space(small, big).unwrap().dim(), 0);
    }

    #[test]
    fn presentation_agrees_with_naive() {
        let m2 = Arc::new(matrix_algebra(q(), 2).unwrap());
        let r = Module::regular(m2.clone());
        let col = column_module(m2);
        let sum = r.direct_sum(&col);
        for (a, b) in [(&r, &sum), (&sum, &col), (&sum, &sum)] {
            assert_eq!(hom_space(a, b).unwrap().dim(), hom_space_naive(a, b).unwrap().dim());
        }
    }

    #[test]
    fn endomorphism_examples() {
        let qa = Arc::new(scalar_algebra(q()));
        assert_eq!(endomorphism_algebra(&Module::regular(qa)).unwrap().dim(), 1);
        let m2 = Arc::new(matrix_algebra(q(), 2).unwrap());
        let col = column_module(m2);
        let e = endomorphism_algebra(&col.direct_sum(&col)).unwrap();
        assert_eq!(e.dim(), 4);
        assert_eq!(crate::algebra::center(&e.algebra).dim(), 1);
        assert!(crate::algebra::jacobson_radical(&e.algebra).unwrap().is_empty());
    }

    #[test]
    fn isomorphism_examples() {
        let m2 = Arc::new(matrix_algebra(q(), 2).unwrap());
        let r = Module::regular(m2.clone());
        let s = SearchConfig::default();
        assert!(is_isomorphic(&r, &r, &s).unwrap().is_some());
        let col = column_module(m2);
        assert!(is_isomorphic(&r, &col.direct_sum(&col), &s).unwrap().is_some());
        assert!(is_isomorphic(&r, &col, &s).unwrap().is_none());
    }

    #[test]
    fn projective_and_generator_tests() {
        let ut = Arc::new(crate::algebra::upper_triangular(q(), 2).unwrap());
        let r = Module::regular(ut.clone());
        assert!(is_projective(&r).unwrap());
        assert!(is_generator(&r).unwrap());
        let f = q();
        let simple = |k: usize| {
            let act = (0..3)
                .map(|i| Matrix::from_fn(f, 1, 1, |_, _| if i == k { f.one() } else { f.zero() }))
                .collect();
            Module::new(ut.clone(), 1, act).unwrap()
        };
        // e22 A is simple and projective but not a generator
        let top = simple(2);
        assert!(is_projective(&top).unwrap());
        assert!(!is_generator(&top).unwrap());
        // the top of e11 A is not projective
        let s1 = simple(0);
        assert!(!is_projective(&s1).unwrap());
        assert!(!is_generator(&s1).unwrap());
        assert!(is_progenerator(&r.direct_sum(&top)).unwrap());
    }
}
