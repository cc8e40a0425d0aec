//! Double modules, general bilinear forms and their correspondence with
//! anti-automorphisms of endomorphism rings.
//!
//! A double module `K` carries two commuting right actions `⊙₀`, `⊙₁`, stored as
//! matrices `rho0(e_i)`, `rho1(e_i)`. A bilinear form `b: M x M -> K` satisfies
//! `b(xr, y) = b(x, y) ⊙₀ r` and `b(x, yr) = b(x, y) ⊙₁ r`.

use std::sync::Arc;

use crate::algebra::{center, goldman_element, matrix_algebra, Algebra, AlgebraMap, Variance};
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, kronecker, zero_vector, Coordinates, Field, Matrix, QuotientSpace, Scalar, Vector,
};
use crate::module::{
    endomorphism_algebra, hom_space, is_generator, is_projective, EndomorphismAlgebra, HomSpace,
    Module,
};
use crate::search::{height_for_trial, random_vector, SearchConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action0: Vec<Matrix>,
    action1: Vec<Matrix>,
}

impl DoubleModule {
    /// Validates both actions and the commuting law on all basis pairs.
    pub fn new(
        algebra: Arc<Algebra>,
        dim: usize,
        action0: Vec<Matrix>,
        action1: Vec<Matrix>,
    ) -> Result<DoubleModule> {
        let k = DoubleModule {
            algebra,
            dim,
            action0,
            action1,
        };
        k.side(0)?;
        k.side(1)?;
        for (i, a) in k.action0.iter().enumerate() {
            for (j, b) in k.action1.iter().enumerate() {
                if (b * a) != (a * b) {
                    return Err(Error::InvariantViolation(format!(
                        "actions do not commute on ({}, {})",
                        k.algebra.names()[i],
                        k.algebra.names()[j]
                    )));
                }
            }
        }
        Ok(k)
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

    pub fn action(&self, i: usize) -> &[Matrix] {
        if i == 0 {
            &self.action0
        } else {
            &self.action1
        }
    }

    /// The right module `K_i`.
    pub fn side(&self, i: usize) -> Result<Module> {
        Module::new(self.algebra.clone(), self.dim, self.action(i).to_vec())
    }

    /// Matrix of `k -> k ⊙_i a`.
    pub fn action_of(&self, i: usize, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim, self.dim);
        for (c, r) in a.iter().zip(self.action(i)) {
            if !c.is_zero() {
                m = &m + &r.scale(c);
            }
        }
        m
    }
}

/// `K = A` with `k ⊙₀ r = r^γ k` and `k ⊙₁ r = k r`.
pub fn standard_double_module(gamma: &AlgebraMap) -> Result<DoubleModule> {
    let a = anti_endomorphism_algebra(gamma)?;
    let action0 = (0..a.dim())
        .map(|i| a.left_mul(&gamma.apply(&a.basis(i))))
        .collect();
    let action1 = (0..a.dim()).map(|i| a.right_mul(&a.basis(i))).collect();
    DoubleModule::new(a.clone(), a.dim(), action0, action1)
}

fn anti_endomorphism_algebra(gamma: &AlgebraMap) -> Result<Arc<Algebra>> {
    if gamma.variance() != Variance::AntiHomomorphism || gamma.source() != gamma.target() {
        return Err(Error::InvalidInput("expected an anti-automorphism".into()));
    }
    if !gamma.is_bijective() {
        return Err(Error::InvalidInput("anti-endomorphism is not bijective".into()));
    }
    Ok(gamma.source().clone())
}

/// A linear involution `θ` of a double module swapping the two actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleModuleInvolution {
    double_module: DoubleModule,
    matrix: Matrix,
}

impl DoubleModuleInvolution {
    pub fn new(double_module: DoubleModule, matrix: Matrix) -> Result<DoubleModuleInvolution> {
        let f = double_module.field();
        let n = double_module.dim;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch("involution has the wrong size".into()));
        }
        if &matrix * &matrix != Matrix::identity(f, n) {
            return Err(Error::InvariantViolation("theta^2 != id".into()));
        }
        for i in 0..2 {
            for (a, b) in double_module.action(i).iter().zip(double_module.action(1 - i)) {
                if &matrix * a != b * &matrix {
                    return Err(Error::InvariantViolation(format!(
                        "theta does not swap the actions (side {i})"
                    )));
                }
            }
        }
        Ok(DoubleModuleInvolution {
            double_module,
            matrix,
        })
    }

    pub fn double_module(&self) -> &DoubleModule {
        &self.double_module
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, k: &[Scalar]) -> Vector {
        self.matrix.mul_vec(k)
    }
}

/// For an involution `γ`, the map `k -> k^γ` on the standard double module.
pub fn standard_involution(gamma: &AlgebraMap) -> Result<DoubleModuleInvolution> {
    let k = standard_double_module(gamma)?;
    DoubleModuleInvolution::new(k, gamma.matrix().clone())
}

/// `b(x, y)` for basis vectors, stored row-major as `values[x * dim + y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    module: Module,
    values: DoubleModule,
    tensor: Vec<Vector>,
}

impl BilinearForm {
    /// Validates the balance laws on all basis triples.
    pub fn new(module: Module, values: DoubleModule, tensor: Vec<Vector>) -> Result<BilinearForm> {
        if module.algebra() != values.algebra() {
            return Err(Error::InvalidInput("form and values over different algebras".into()));
        }
        let n = module.dim();
        if tensor.len() != n * n || tensor.iter().any(|v| v.len() != values.dim) {
            return Err(Error::DimensionMismatch("form tensor has the wrong shape".into()));
        }
        let b = BilinearForm {
            module,
            values,
            tensor,
        };
        b.check_balance()?;
        Ok(b)
    }

    fn check_balance(&self) -> Result<()> {
        let n = self.module.dim();
        let f = self.field();
        for (r, rho) in self.module.action().iter().enumerate() {
            for x in 0..n {
                for y in 0..n {
                    let mut left = zero_vector(f, self.values.dim);
                    let mut right = zero_vector(f, self.values.dim);
                    for z in 0..n {
                        let c = rho.get(z, x);
                        if !c.is_zero() {
                            axpy(&mut left, c, self.value(z, y));
                        }
                        let c = rho.get(z, y);
                        if !c.is_zero() {
                            axpy(&mut right, c, self.value(x, z));
                        }
                    }
                    let b = self.value(x, y);
                    if left != self.values.action0[r].mul_vec(b)
                        || right != self.values.action1[r].mul_vec(b)
                    {
                        return Err(Error::InvariantViolation(format!(
                            "balance law fails at ({x}, {y}) for {}",
                            self.module.algebra().names()[r]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn values(&self) -> &DoubleModule {
        &self.values
    }

    pub fn field(&self) -> Field {
        self.module.field()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn tensor(&self) -> &[Vector] {
        &self.tensor
    }

    pub fn value(&self, x: usize, y: usize) -> &Vector {
        &self.tensor[x * self.dim() + y]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(self.field(), self.values.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), &self.tensor[i * n + j]);
                }
            }
        }
        out
    }

    /// `b(x, y) = b(y, x)^θ` on all basis pairs.
    pub fn is_symmetric(&self, theta: &DoubleModuleInvolution) -> bool {
        let n = self.dim();
        (0..n).all(|x| (0..n).all(|y| *self.value(x, y) == theta.apply(self.value(y, x))))
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.iter().all(|v| v.iter().all(Scalar::is_zero))
    }
}

/// `M^[i] = Hom_R(M, K_{1-i})` with `(f r)(m) = f(m) ⊙_i r`.
#[derive(Clone, Debug)]
pub struct DualModule {
    pub module: Module,
    pub hom: HomSpace,
    pub index: usize,
}

impl DualModule {
    pub fn dim(&self) -> usize {
        self.hom.dim()
    }

    /// The map `M -> K` with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        self.hom.combine(self.module.field(), coords)
    }
}

pub fn dual_module(m: &Module, k: &DoubleModule, i: usize) -> Result<DualModule> {
    if i > 1 {
        return Err(Error::InvalidInput("dual index must be 0 or 1".into()));
    }
    if m.algebra() != k.algebra() {
        return Err(Error::InvalidInput("module and values over different algebras".into()));
    }
    let target = k.side(1 - i)?;
    let hom = hom_space(m, &target)?;
    let f = m.field();
    let h = hom.dim();
    let action = k
        .action(i)
        .iter()
        .map(|rho| {
            let cols = hom
                .basis
                .iter()
                .map(|g| {
                    hom.coords(&(rho * g)).ok_or_else(|| {
                        Error::InvariantViolation("twisted action leaves the hom space".into())
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(f, h, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = Module::new(m.algebra().clone(), h, action)?;
    Ok(DualModule {
        module,
        hom,
        index: i,
    })
}

/// `f^[i]: Y^[i] -> X^[i]`, `g -> g ∘ f`, for `f: X -> Y`.
pub fn dual_map(f: &Matrix, target_dual: &DualModule, source_dual: &DualModule) -> Result<Matrix> {
    let cols = target_dual
        .hom
        .basis
        .iter()
        .map(|g| {
            source_dual
                .hom
                .coords(&(g * f))
                .ok_or_else(|| Error::InvariantViolation("composite is not a homomorphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(f.field(), source_dual.dim(), &cols))
}

/// The adjoint maps of a form, in the bases of the computed duals.
#[derive(Clone, Debug)]
pub struct Adjoints {
    /// `Ad_l b: M -> M^[0]`, `x -> b(x, -)`.
    pub left: Matrix,
    /// `Ad_r b: M -> M^[1]`, `x -> b(-, x)`.
    pub right: Matrix,
    pub left_dual: DualModule,
    pub right_dual: DualModule,
    pub left_regular: bool,
    pub right_regular: bool,
}

impl Adjoints {
    pub fn is_regular(&self) -> bool {
        self.left_regular && self.right_regular
    }
}

fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && m.rank() == m.rows()
}

pub fn adjoints(b: &BilinearForm) -> Result<Adjoints> {
    let m = b.module();
    let n = m.dim();
    let f = b.field();
    let kd = b.values.dim;
    let left_dual = dual_module(m, &b.values, 0)?;
    let right_dual = dual_module(m, &b.values, 1)?;
    let adjoint = |dual: &DualModule, left: bool| -> Result<Matrix> {
        let cols = (0..n)
            .map(|x| {
                let cols: Vec<Vector> = (0..n)
                    .map(|y| if left { b.value(x, y) } else { b.value(y, x) }.clone())
                    .collect();
                let map = Matrix::from_columns(f, kd, &cols);
                dual.hom.coords(&map).ok_or_else(|| {
                    Error::InvariantViolation("adjoint is not a homomorphism".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(f, dual.dim(), &cols))
    };
    let left = adjoint(&left_dual, true)?;
    let right = adjoint(&right_dual, false)?;
    Ok(Adjoints {
        left_regular: is_invertible(&left),
        right_regular: is_invertible(&right),
        left,
        right,
        left_dual,
        right_dual,
    })
}

/// The anti-automorphism `α` of `End_R(M)` with `b(wx, y) = b(x, w^α y)`.
pub fn corresponding_anti_automorphism(
    b: &BilinearForm,
    end: &EndomorphismAlgebra,
) -> Result<AlgebraMap> {
    if end.module != *b.module() {
        return Err(Error::InvalidInput("endomorphism algebra of another module".into()));
    }
    if !adjoints(b)?.is_regular() {
        return Err(Error::NotRegular);
    }
    let f = b.field();
    let n = b.dim();
    let kd = b.values.dim;
    // flattened table of b(x, w y) over all basis pairs
    let table = |w: &Matrix, on_right: bool| -> Vector {
        let mut out = Vec::with_capacity(n * n * kd);
        for x in 0..n {
            for y in 0..n {
                let mut v = zero_vector(f, kd);
                for z in 0..n {
                    if on_right {
                        let c = w.get(z, y);
                        if !c.is_zero() {
                            axpy(&mut v, c, b.value(x, z));
                        }
                    } else {
                        let c = w.get(z, x);
                        if !c.is_zero() {
                            axpy(&mut v, c, b.value(z, y));
                        }
                    }
                }
                out.extend(v);
            }
        }
        out
    };
    let columns: Vec<Vector> = end.basis.iter().map(|w| table(w, true)).collect();
    let coords = Coordinates::new(f, n * n * kd, &columns)
        .map_err(|_| Error::NotFaithful("w -> b(-, w -) is not injective".into()))?;
    let images = end
        .basis
        .iter()
        .map(|w| {
            coords
                .coords(&table(w, false))
                .ok_or_else(|| Error::NotFaithful("no adjoint endomorphism exists".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_columns(f, end.dim(), &images);
    AlgebraMap::automorphism(end.algebra.clone(), matrix, Variance::AntiHomomorphism)
}

/// `K_α = M ⊗_W M` with its form `b_α(x, y) = y ⊗ x` and, for an involution,
/// `θ_α(x ⊗ y) = y ⊗ x`.
#[derive(Clone, Debug)]
pub struct FormFromAnti {
    pub double_module: DoubleModule,
    pub form: BilinearForm,
    pub theta: Option<DoubleModuleInvolution>,
}

pub fn form_from_anti_automorphism(
    end: &EndomorphismAlgebra,
    alpha: &AlgebraMap,
) -> Result<FormFromAnti> {
    if alpha.variance() != Variance::AntiHomomorphism
        || alpha.source() != &end.algebra
        || alpha.target() != &end.algebra
    {
        return Err(Error::InvalidInput(
            "expected an anti-automorphism of the endomorphism algebra".into(),
        ));
    }
    let m = &end.module;
    if !is_generator(m)? {
        return Err(Error::NotGenerator);
    }
    let f = m.field();
    let n = m.dim();
    let id = Matrix::identity(f, n);
    let mut relations = Vec::new();
    for (k, w) in end.basis.iter().enumerate() {
        let wa = end.to_matrix(&alpha.apply(&end.algebra.basis(k)));
        let rel = &kronecker(&wa, &id)? - &kronecker(&id, w)?;
        relations.extend(rel.column_space());
    }
    let quotient = QuotientSpace::new(f, n * n, &relations)?;
    let induce = |tensor_with: &dyn Fn(&Matrix) -> Result<Matrix>| -> Result<Vec<Matrix>> {
        m.action()
            .iter()
            .map(|rho| Ok(quotient.induced(&tensor_with(rho)?)))
            .collect()
    };
    let action0 = induce(&|rho| kronecker(&id, rho))?;
    let action1 = induce(&|rho| kronecker(rho, &id))?;
    let k = DoubleModule::new(m.algebra().clone(), quotient.dim(), action0, action1)?;
    let tensor = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| quotient.projection.column(y * n + x))
        .collect();
    let form = BilinearForm::new(m.clone(), k.clone(), tensor)?;
    let theta = if alpha.is_involution() {
        let swap = Matrix::from_fn(f, n * n, n * n, |r, c| {
            if r == (c % n) * n + c / n {
                f.one()
            } else {
                f.zero()
            }
        });
        Some(DoubleModuleInvolution::new(
            k.clone(),
            quotient.induced(&swap),
        )?)
    } else {
        None
    };
    if corresponding_anti_automorphism(&form, end)? != *alpha {
        return Err(Error::InvariantViolation(
            "form does not recover the anti-automorphism".into(),
        ));
    }
    Ok(FormFromAnti {
        double_module: k,
        form,
        theta,
    })
}

/// `Φ_M: M -> M^[1][0]`, `(Φ x)(f) = f(x)`.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub matrix: Matrix,
    pub first: DualModule,
    pub second: DualModule,
}

pub fn phi_map(m: &Module, k: &DoubleModule) -> Result<PhiMap> {
    let first = dual_module(m, k, 1)?;
    let second = dual_module(&first.module, k, 0)?;
    let f = m.field();
    let cols = (0..m.dim())
        .map(|x| {
            let cols: Vec<Vector> = first.hom.basis.iter().map(|g| g.column(x)).collect();
            let eval = Matrix::from_columns(f, k.dim(), &cols);
            second
                .hom
                .coords(&eval)
                .ok_or_else(|| Error::InvariantViolation("evaluation is not a homomorphism".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PhiMap {
        matrix: Matrix::from_columns(f, second.dim(), &cols),
        first,
        second,
    })
}

/// Checks that `K_1` is a progenerator and `⊙₀` identifies `A^op` with `End(K_1)`.
pub fn check_double_progenerator(k: &DoubleModule) -> Result<()> {
    let k1 = k.side(1)?;
    if !is_projective(&k1)? {
        return Err(Error::NotProgenerator("K_1 is not projective".into()));
    }
    if !is_generator(&k1)? {
        return Err(Error::NotProgenerator("K_1 is not a generator".into()));
    }
    let f = k.field();
    let vecs: Vec<Vector> = k.action0.iter().map(Matrix::vectorize).collect();
    if Coordinates::new(f, k.dim * k.dim, &vecs).is_err() {
        return Err(Error::NotProgenerator("the ⊙₀ action is not faithful".into()));
    }
    if endomorphism_algebra(&k1)?.dim() != k.algebra.dim() {
        return Err(Error::NotProgenerator("End(K_1) is larger than A".into()));
    }
    Ok(())
}

pub fn is_double_progenerator(k: &DoubleModule) -> Result<bool> {
    match check_double_progenerator(k) {
        Ok(()) => Ok(true),
        Err(Error::NotProgenerator(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The automorphism `σ` of the centre with `k ⊙₀ c = k ⊙₁ σ(c)`.
pub fn double_module_type(k: &DoubleModule) -> Result<AlgebraMap> {
    let a = k.algebra();
    let z = center(a).as_subalgebra(a)?;
    let f = a.field();
    let centre: Vec<Vector> = z.embedding.columns();
    let acts1: Vec<Vector> = centre.iter().map(|c| k.action_of(1, c).vectorize()).collect();
    let coords = Coordinates::new(f, k.dim * k.dim, &acts1)
        .map_err(|_| Error::NotFaithful("the centre does not act faithfully".into()))?;
    let cols = centre
        .iter()
        .map(|c| {
            coords
                .coords(&k.action_of(0, c).vectorize())
                .ok_or_else(|| Error::InvalidInput("central actions are not related by a type".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let zalg = Arc::new(z.algebra.clone());
    let m = Matrix::from_columns(f, zalg.dim(), &cols);
    AlgebraMap::automorphism(zalg, m, Variance::Homomorphism)
}

/// Whether `α(x·c) = x·σ(c)` for all central `c`, viewing `x -> x·c` in `End(M)`.
pub fn has_type(end: &EndomorphismAlgebra, alpha: &AlgebraMap, sigma: &AlgebraMap) -> bool {
    let a = end.module.algebra();
    let Ok(z) = center(a).as_subalgebra(a) else {
        return false;
    };
    if sigma.source().as_ref() != &z.algebra {
        return false;
    }
    (0..z.algebra.dim()).all(|i| {
        let c = z.embed(&z.algebra.basis(i));
        let sc = z.embed(&sigma.apply(&z.algebra.basis(i)));
        match (end.central_element(&c), end.central_element(&sc)) {
            (Some(w), Some(ws)) => alpha.apply(&w) == ws,
            _ => false,
        }
    })
}

/// `θ(k) = k·g` for the Goldman element `g = sum e_ij ⊗ e_ji`, where
/// `k·(a ⊗ a') = k ⊙₀ a ⊙₁ a'`.
pub fn involution_from_goldman(k: &DoubleModule) -> Result<DoubleModuleInvolution> {
    let a = k.algebra();
    let f = a.field();
    let n = crate::linalg::poly::exact_sqrt(a.dim() as u64)
        .ok_or_else(|| Error::InvalidInput("algebra is not a full matrix algebra".into()))?
        as usize;
    let mn = matrix_algebra(f, n)?;
    if a.constants() != mn.constants() || a.unit() != mn.unit() {
        return Err(Error::InvalidInput("algebra is not a full matrix algebra".into()));
    }
    let sigma = double_module_type(k)?;
    if !sigma.matrix().is_square() || *sigma.matrix() != Matrix::identity(f, sigma.matrix().rows()) {
        return Err(Error::WrongType("the Goldman involution needs type id".into()));
    }
    let g = goldman_element(f, n)?;
    let d = a.dim();
    let mut theta = Matrix::zeros(f, k.dim, k.dim);
    for (idx, c) in g.element.iter().enumerate() {
        if !c.is_zero() {
            let (r, s) = (idx / d, idx % d);
            theta = &theta + &(&k.action1[s] * &k.action0[r]).scale(c);
        }
    }
    DoubleModuleInvolution::new(k.clone(), theta)
}

/// `(b ⊥ b')(x ⊕ x', y ⊕ y') = b(x, y) + b'(x', y')`.
pub fn orthogonal_sum(b: &BilinearForm, c: &BilinearForm) -> Result<BilinearForm> {
    if b.values != c.values {
        return Err(Error::InvalidInput("forms take values in different double modules".into()));
    }
    let (n, m) = (b.dim(), c.dim());
    let zero = zero_vector(b.field(), b.values.dim);
    let mut tensor = Vec::with_capacity((n + m) * (n + m));
    for x in 0..n + m {
        for y in 0..n + m {
            tensor.push(match (x < n, y < n) {
                (true, true) => b.value(x, y).clone(),
                (false, false) => c.value(x - n, y - n).clone(),
                _ => zero.clone(),
            });
        }
    }
    BilinearForm::new(b.module.direct_sum(&c.module), b.values.clone(), tensor)
}

/// The form with `b(x, y) = (g x)(y)` for `g: M -> M^[0]` in dual coordinates.
pub fn form_from_left_adjoint(
    m: &Module,
    k: &DoubleModule,
    left_dual: &DualModule,
    g: &Matrix,
) -> Result<BilinearForm> {
    let n = m.dim();
    let mut tensor = Vec::with_capacity(n * n);
    for x in 0..n {
        let map = left_dual.element(&g.column(x));
        for y in 0..n {
            tensor.push(map.column(y));
        }
    }
    BilinearForm::new(m.clone(), k.clone(), tensor)
}

/// The form with `b(x, y) = (f y)(x)` for `f: M -> M^[1]` in dual coordinates.
pub fn form_from_right_adjoint(
    m: &Module,
    k: &DoubleModule,
    right_dual: &DualModule,
    f: &Matrix,
) -> Result<BilinearForm> {
    let n = m.dim();
    let maps: Vec<Matrix> = (0..n).map(|y| right_dual.element(&f.column(y))).collect();
    let mut tensor = Vec::with_capacity(n * n);
    for x in 0..n {
        for map in &maps {
            tensor.push(map.column(x));
        }
    }
    BilinearForm::new(m.clone(), k.clone(), tensor)
}

/// All forms `M x M -> K`, identified with `Hom_R(M, M^[0])` through the left adjoint.
#[derive(Clone, Debug)]
pub struct FormSpace {
    pub module: Module,
    pub values: DoubleModule,
    pub left_dual: DualModule,
    pub adjoints: HomSpace,
}

impl FormSpace {
    pub fn new(m: &Module, k: &DoubleModule) -> Result<FormSpace> {
        let left_dual = dual_module(m, k, 0)?;
        let adjoints = hom_space(m, &left_dual.module)?;
        Ok(FormSpace {
            module: m.clone(),
            values: k.clone(),
            left_dual,
            adjoints,
        })
    }

    pub fn dim(&self) -> usize {
        self.adjoints.dim()
    }

    pub fn form(&self, coeffs: &[Scalar]) -> Result<BilinearForm> {
        let g = self.adjoints.combine(self.module.field(), coeffs);
        form_from_left_adjoint(&self.module, &self.values, &self.left_dual, &g)
    }

    pub fn random_form(&self, rng: &mut rand_chacha::ChaCha8Rng, height: i64) -> Result<BilinearForm> {
        let coeffs = random_vector(self.module.field(), self.dim(), rng, height);
        self.form(&coeffs)
    }

    /// A random form with invertible left and right adjoints.
    pub fn random_regular_form(&self, search: &SearchConfig, salt: u64) -> Result<BilinearForm> {
        let mut rng = search.rng(0xF0_0001 ^ salt);
        for t in 0..search.max_trials {
            let b = self.random_form(&mut rng, height_for_trial(t, search.max_trials))?;
            if adjoints(&b)?.is_regular() {
                return Ok(b);
            }
        }
        Err(Error::NotRegular)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_transpose, scalar_algebra};
    use crate::module::is_isomorphic;

    fn q() -> Field {
        Field::Rationals
    }

    fn scalar_k(f: Field) -> DoubleModule {
        let a = Arc::new(scalar_algebra(f));
        standard_double_module(&AlgebraMap::identity_anti(a).unwrap()).unwrap()
    }

    fn free_q(n: usize) -> Module {
        Module::free(Arc::new(scalar_algebra(q())), n)
    }

    fn form_from_matrix(m: &Module, k: &DoubleModule, g: &Matrix) -> BilinearForm {
        let n = m.dim();
        let tensor = (0..n * n).map(|i| vec![g.get(i / n, i % n).clone()]).collect();
        BilinearForm::new(m.clone(), k.clone(), tensor).unwrap()
    }

    fn m2_transpose() -> (Arc<Algebra>, AlgebraMap) {
        let a = Arc::new(matrix_algebra(q(), 2).unwrap());
        let t = matrix_transpose(a.clone(), 2).unwrap();
        (a, t)
    }

    #[test]
    fn standard_double_module_examples() {
        let k = scalar_k(q());
        assert_eq!(k.action(0), k.action(1));
        let (a, t) = m2_transpose();
        let k = standard_double_module(&t).unwrap();
        // e12 acting through ⊙₀ is left multiplication by e21
        assert_eq!(k.action(0)[1], a.left_mul(&a.basis(2)));
        let sigma = double_module_type(&k).unwrap();
        assert_eq!(sigma.matrix(), &Matrix::identity(q(), 1));
        check_double_progenerator(&k).unwrap();
    }

    #[test]
    fn dual_module_examples() {
        let (a, t) = m2_transpose();
        let k = standard_double_module(&t).unwrap();
        let r = Module::regular(a.clone());
        for i in 0..2 {
            let d = dual_module(&r, &k, i).unwrap();
            assert!(is_isomorphic(&d.module, &k.side(i).unwrap(), &SearchConfig::default())
                .unwrap()
                .is_some());
        }
        let zero = Module::zero(a.clone());
        assert_eq!(dual_module(&zero, &k, 0).unwrap().dim(), 0);
        let parts = crate::module::decompose(&r, &SearchConfig::default()).unwrap();
        assert_eq!(dual_module(&parts[0], &k, 1).unwrap().dim(), 2);
    }

    #[test]
    fn adjoint_examples() {
        let k = scalar_k(q());
        let m = free_q(2);
        let zero = form_from_matrix(&m, &k, &Matrix::zeros(q(), 2, 2));
        let adj = adjoints(&zero).unwrap();
        assert!(adj.left.is_zero() && adj.right.is_zero());
        assert!(!adj.left_regular && !adj.right_regular);
        let dot = form_from_matrix(&m, &k, &Matrix::identity(q(), 2));
        let adj = adjoints(&dot).unwrap();
        assert!(adj.is_regular());
        let dot3 = form_from_matrix(&free_q(3), &k, &Matrix::identity(q(), 3));
        let sum = orthogonal_sum(&dot, &dot3).unwrap();
        let a = adjoints(&sum).unwrap();
        assert!(a.is_regular());
        assert_eq!(sum, form_from_matrix(&free_q(5), &k, &Matrix::identity(q(), 5)));
    }

    #[test]
    fn dot_product_gives_transpose() {
        let k = scalar_k(q());
        for n in 1..=3 {
            let m = free_q(n);
            let dot = form_from_matrix(&m, &k, &Matrix::identity(q(), n));
            let end = endomorphism_algebra(&m).unwrap();
            let alpha = corresponding_anti_automorphism(&dot, &end).unwrap();
            for (i, w) in end.basis.iter().enumerate() {
                let image = end.to_matrix(&alpha.apply(&end.algebra.basis(i)));
                assert_eq!(image, w.transpose());
            }
            let back = form_from_anti_automorphism(&end, &alpha).unwrap();
            assert_eq!(corresponding_anti_automorphism(&back.form, &end).unwrap(), alpha);
            assert!(back.theta.is_some());
        }
    }

    #[test]
    fn skew_form_gives_adjugate() {
        let k = scalar_k(q());
        let m = free_q(2);
        let f = q();
        let j = Matrix::from_rows(f, 2, vec![vec![f.zero(), f.one()], vec![-f.one(), f.zero()]])
            .unwrap();
        let b = form_from_matrix(&m, &k, &j);
        let end = endomorphism_algebra(&m).unwrap();
        let alpha = corresponding_anti_automorphism(&b, &end).unwrap();
        for (i, w) in end.basis.iter().enumerate() {
            let image = end.to_matrix(&alpha.apply(&end.algebra.basis(i)));
            // adj [[a, b], [c, d]] = [[d, -b], [-c, a]]
            let adj = Matrix::from_rows(
                f,
                2,
                vec![
                    vec![w.get(1, 1).clone(), -w.get(0, 1).clone()],
                    vec![-w.get(1, 0).clone(), w.get(0, 0).clone()],
                ],
            )
            .unwrap();
            assert_eq!(image, adj);
        }
    }

    #[test]
    fn regular_module_form_has_algebra_sized_values() {
        let (a, t) = m2_transpose();
        let r = Module::regular(a.clone());
        let end = endomorphism_algebra(&r).unwrap();
        let k = standard_double_module(&t).unwrap();
        let space = FormSpace::new(&r, &k).unwrap();
        let b = space.random_regular_form(&SearchConfig::default(), 0).unwrap();
        let alpha = corresponding_anti_automorphism(&b, &end).unwrap();
        let back = form_from_anti_automorphism(&end, &alpha).unwrap();
        assert_eq!(back.double_module.dim(), a.dim());
    }

    #[test]
    fn phi_is_invertible_on_regular_module() {
        let (a, t) = m2_transpose();
        let k = standard_double_module(&t).unwrap();
        let r = Module::regular(a.clone());
        let phi = phi_map(&r, &k).unwrap();
        assert!(is_invertible(&phi.matrix));
        let zero = phi_map(&Module::zero(a), &k).unwrap();
        assert_eq!(zero.matrix.cols(), 0);
    }

    #[test]
    fn goldman_involutions() {
        let (_, t) = m2_transpose();
        let k = standard_double_module(&t).unwrap();
        let theta = involution_from_goldman(&k).unwrap();
        assert_eq!(theta.matrix(), t.matrix());
        let k1 = scalar_k(q());
        let theta = involution_from_goldman(&k1).unwrap();
        assert_eq!(theta.matrix(), &Matrix::identity(q(), 1));
    }

    #[test]
    fn orthogonal_sum_with_zero_module() {
        let k = scalar_k(q());
        let dot = form_from_matrix(&free_q(2), &k, &Matrix::identity(q(), 2));
        let empty = form_from_matrix(&free_q(0), &k, &Matrix::zeros(q(), 0, 0));
        assert_eq!(orthogonal_sum(&dot, &empty).unwrap(), dot);
    }
}
