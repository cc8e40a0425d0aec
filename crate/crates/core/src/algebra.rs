//! Finite-dimensional associative unital algebras given by structure constants.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, invert, is_zero_vector, kernel_basis, roots, solve, unit_vector, vec_scale, vec_sub,
    zero_vector, Coordinates, Field, IncrementalBasis, Matrix, Poly, Scalar, Vector,
};
use crate::module::{is_isomorphic, Module};
use crate::search::{height_for_trial, random_vector, SearchConfig};

/// An algebra with basis `e_0..e_{d-1}` and `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    names: Vec<String>,
    /// Sparse products, indexed by `i * dim + j`.
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Vector,
}

impl Algebra {
    /// Builds an algebra from a dense table `c[i][j][k]`, validating associativity and the unit.
    pub fn new(
        field: Field,
        names: Vec<String>,
        constants: Vec<Vec<Vector>>,
        unit: Vector,
    ) -> Result<Algebra> {
        let dim = names.len();
        if dim == 0 {
            return Err(Error::InvalidInput("algebra must have positive dimension".into()));
        }
        if constants.len() != dim
            || constants.iter().any(|row| row.len() != dim)
            || constants.iter().flatten().any(|v| v.len() != dim)
            || unit.len() != dim
        {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must be {dim}x{dim}x{dim}"
            )));
        }
        if constants.iter().flatten().flatten().chain(&unit).any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let alg = Algebra::from_fn(field, names, unit, |i, j| constants[i][j].clone());
        alg.validate()?;
        Ok(alg)
    }

    /// Builds the table from a product rule without validation.
    pub(crate) fn from_fn(
        field: Field,
        names: Vec<String>,
        unit: Vector,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Algebra {
        let dim = names.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                table.push(
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .collect(),
                );
            }
        }
        Algebra {
            field,
            dim,
            names,
            table,
            unit,
        }
    }

    /// Checks associativity on all basis triples and the two-sided unit law.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            let ei = unit_vector(self.field, d, i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                return Err(Error::InvariantViolation(format!(
                    "unit law fails on basis element {}",
                    self.names[i]
                )));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let mut left = zero_vector(self.field, d);
                    for (m, c) in ij {
                        for (n, c2) in self.basis_product(*m, k) {
                            left[*n] = &left[*n] + &(c * c2);
                        }
                    }
                    let mut right = zero_vector(self.field, d);
                    for (m, c) in self.basis_product(j, k) {
                        for (n, c2) in self.basis_product(i, *m) {
                            right[*n] = &right[*n] + &(c * c2);
                        }
                    }
                    if left != right {
                        return Err(Error::InvariantViolation(format!(
                            "associativity fails on ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.field, self.dim)
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim, i)
    }

    /// Nonzero entries of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j)
            .iter()
            .find(|(m, _)| *m == k)
            .map_or_else(|| self.field.zero(), |(_, c)| c.clone())
    }

    /// Dense table `c[i][j][k]`.
    pub fn constants(&self) -> Vec<Vec<Vector>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let mut v = self.zero();
                        for (k, c) in self.basis_product(i, j) {
                            v[*k] = c.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    pub fn mul3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.mul(&self.mul(x, y), z)
    }

    pub fn pow(&self, x: &[Scalar], k: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of `y -> x y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mul(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Human-readable form of an element, e.g. `2/1*e11 + -1/1*e22`.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*{}", self.names[i]))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algebra of dim {} over {}", self.dim, self.field)
    }
}

fn matrix_unit_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{},{}", i + 1, j + 1)
    }
}

/// The full matrix algebra `M_n(F)`, basis `e_ij` at index `i * n + j`.
pub fn matrix_algebra(field: Field, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix size must be positive".into()));
    }
    let names = (0..n)
        .flat_map(|i| (0..n).map(move |j| matrix_unit_name(n, i, j)))
        .collect();
    let mut unit = zero_vector(field, n * n);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    Ok(Algebra::from_fn(field, names, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            unit_vector(field, n * n, i * n + l)
        } else {
            zero_vector(field, n * n)
        }
    }))
}

/// The ground field as a one-dimensional algebra.
pub fn scalar_algebra(field: Field) -> Algebra {
    Algebra::from_fn(field, vec!["1".into()], vec![field.one()], |_, _| vec![field.one()])
}

/// Upper-triangular `n x n` matrices, basis `e_ij` (`i <= j`) in row-major order.
pub fn upper_triangular(field: Field, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidInput("matrix size must be positive".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let d = pairs.len();
    let names = pairs.iter().map(|&(i, j)| matrix_unit_name(n, i, j)).collect();
    let mut unit = zero_vector(field, d);
    for i in 0..n {
        unit[index(i, i)] = field.one();
    }
    Ok(Algebra::from_fn(field, names, unit, |a, b| {
        let (i, j) = pairs[a];
        let (k, l) = pairs[b];
        if j == k {
            unit_vector(field, d, index(i, l))
        } else {
            zero_vector(field, d)
        }
    }))
}

/// Quaternion algebra `(a, b)_F`: basis `1, i, j, k` with `i^2 = a`, `j^2 = b`, `ij = -ji = k`.
pub fn quaternion_algebra(field: Field, a: i64, b: i64) -> Result<Algebra> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported("quaternion algebras in characteristic 2".into()));
    }
    let (fa, fb) = (field.from_i64(a), field.from_i64(b));
    if fa.is_zero() || fb.is_zero() {
        return Err(Error::InvalidInput("quaternion parameters must be nonzero".into()));
    }
    let ab = &fa * &fb;
    let one = field.one();
    // (coefficient, index) of products e_r e_s
    let table = |r: usize, s: usize| -> (Scalar, usize) {
        match (r, s) {
            (0, s) => (one.clone(), s),
            (r, 0) => (one.clone(), r),
            (1, 1) => (fa.clone(), 0),
            (2, 2) => (fb.clone(), 0),
            (3, 3) => (-&ab, 0),
            (1, 2) => (one.clone(), 3),
            (2, 1) => (-&one, 3),
            (1, 3) => (fa.clone(), 2),
            (3, 1) => (-&fa, 2),
            (2, 3) => (-&fb, 1),
            (3, 2) => (fb.clone(), 1),
            _ => unreachable!(),
        }
    };
    let names = ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect();
    Ok(Algebra::from_fn(field, names, unit_vector(field, 4, 0), |r, s| {
        let (c, t) = table(r, s);
        vec_scale(&unit_vector(field, 4, t), &c)
    }))
}

/// Commutative algebra `F[t]/(t^2 - d)` with basis `1, t`.
pub fn quadratic_algebra(field: Field, d: i64) -> Algebra {
    let fd = field.from_i64(d);
    let names = vec!["1".to_string(), "t".to_string()];
    Algebra::from_fn(field, names, unit_vector(field, 2, 0), |r, s| match (r, s) {
        (1, 1) => vec![fd.clone(), field.zero()],
        _ => unit_vector(field, 2, r + s),
    })
}

/// `A^op`: `c_op[i][j][k] = c[j][i][k]`.
pub fn opposite(a: &Algebra) -> Algebra {
    Algebra {
        field: a.field,
        dim: a.dim,
        names: a.names.clone(),
        table: (0..a.dim)
            .flat_map(|i| (0..a.dim).map(move |j| (i, j)))
            .map(|(i, j)| a.basis_product(j, i).to_vec())
            .collect(),
        unit: a.unit.clone(),
    }
}

/// `A x B` with the basis of `A` followed by that of `B`.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let (da, db) = (a.dim, b.dim);
    let d = da + db;
    let names = a
        .names
        .iter()
        .map(|n| format!("({n},0)"))
        .chain(b.names.iter().map(|n| format!("(0,{n})")))
        .collect();
    let unit = a.unit.iter().chain(&b.unit).cloned().collect();
    Ok(Algebra::from_fn(a.field, names, unit, |i, j| {
        let mut v = zero_vector(a.field, d);
        if i < da && j < da {
            for (k, c) in a.basis_product(i, j) {
                v[*k] = c.clone();
            }
        } else if i >= da && j >= da {
            for (k, c) in b.basis_product(i - da, j - da) {
                v[da + *k] = c.clone();
            }
        }
        v
    }))
}

/// `A (x) B` with basis `a_i (x) b_j` at index `i * dim_B + j`.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    let db = b.dim;
    let d = a.dim * db;
    let names = a
        .names
        .iter()
        .flat_map(|x| b.names.iter().map(move |y| format!("{x}⊗{y}")))
        .collect();
    let mut unit = zero_vector(a.field, d);
    for (i, x) in a.unit.iter().enumerate() {
        for (j, y) in b.unit.iter().enumerate() {
            unit[i * db + j] = x * y;
        }
    }
    Ok(Algebra::from_fn(a.field, names, unit, |p, q| {
        let (i, j) = (p / db, p % db);
        let (k, l) = (q / db, q % db);
        let mut v = zero_vector(a.field, d);
        for (m, c) in a.basis_product(i, k) {
            for (n, c2) in b.basis_product(j, l) {
                v[m * db + n] = c * c2;
            }
        }
        v
    }))
}

/// A subalgebra (possibly with a different unit, e.g. a corner `eAe`) and its
/// embedding into the parent's coordinates.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: Algebra,
    /// Parent-dim x sub-dim matrix whose columns are the chosen basis.
    pub embedding: Matrix,
    coords: Coordinates,
}

impl Subalgebra {
    /// The span of `basis` (linearly independent, closed under multiplication) with
    /// identity element `unit`.
    pub fn from_basis(parent: &Algebra, basis: Vec<Vector>, unit: &[Scalar]) -> Result<Subalgebra> {
        let coords = Coordinates::new(parent.field, parent.dim, &basis)?;
        let not_closed = || Error::InvariantViolation("subspace is not closed under products".into());
        let unit_coords = coords.coords(unit).ok_or_else(not_closed)?;
        let k = basis.len();
        let names = (0..k).map(|i| format!("b{i}")).collect();
        let mut products = Vec::with_capacity(k * k);
        for x in &basis {
            for y in &basis {
                products.push(coords.coords(&parent.mul(x, y)).ok_or_else(not_closed)?);
            }
        }
        let algebra = Algebra::from_fn(parent.field, names, unit_coords, |i, j| {
            products[i * k + j].clone()
        });
        let embedding = Matrix::from_columns(parent.field, parent.dim, &basis);
        Ok(Subalgebra {
            algebra,
            embedding,
            coords,
        })
    }

    pub fn embed(&self, x: &[Scalar]) -> Vector {
        self.embedding.mul_vec(x)
    }

    /// Coordinates of a parent element lying in the subalgebra.
    pub fn restrict(&self, x: &[Scalar]) -> Option<Vector> {
        self.coords.coords(x)
    }
}

/// The corner algebra `eAe` for an idempotent `e`.
pub fn corner(a: &Algebra, e: &[Scalar]) -> Result<Subalgebra> {
    if a.mul(e, e) != e {
        return Err(Error::InvalidInput("corner requires an idempotent".into()));
    }
    let map = &a.left_mul(e) * &a.right_mul(e);
    Subalgebra::from_basis(a, map.column_space(), e)
}

/// `A / I` for a two-sided ideal with basis `ideal`, using an echelon-complement basis.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    /// `dim(A/I) x dim(A)` projection.
    pub projection: Matrix,
    /// `dim(A) x dim(A/I)` section sending quotient basis vectors to standard basis vectors.
    pub section: Matrix,
}

pub fn quotient(a: &Algebra, ideal: &[Vector]) -> Result<Quotient> {
    let field = a.field;
    let d = a.dim;
    let rows = Matrix::from_rows(field, d, ideal.to_vec())?;
    let (ech, pivots) = rows.rref();
    if pivots.len() != ideal.len() {
        return Err(Error::InvalidInput("ideal basis is linearly dependent".into()));
    }
    if pivots.len() == d {
        return Err(Error::InvalidInput("quotient by the whole algebra".into()));
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    let q = free.len();
    let reduce = |x: &[Scalar]| -> Vector {
        let mut v = x.to_vec();
        for (r, &p) in pivots.iter().enumerate() {
            let c = v[p].clone();
            if !c.is_zero() {
                axpy(&mut v, &-c, ech.row(r));
            }
        }
        free.iter().map(|&f| v[f].clone()).collect()
    };
    let projection = Matrix::from_columns(
        field,
        q,
        &(0..d).map(|i| reduce(&a.basis(i))).collect::<Vec<_>>(),
    );
    let section = Matrix::from_fn(field, d, q, |r, c| {
        if r == free[c] {
            field.one()
        } else {
            field.zero()
        }
    });
    let names = free.iter().map(|&f| format!("[{}]", a.names[f])).collect();
    let unit = projection.mul_vec(&a.unit);
    let algebra = Algebra::from_fn(field, names, unit, |i, j| {
        projection.mul_vec(&a.mul(&a.basis(free[i]), &a.basis(free[j])))
    });
    Ok(Quotient {
        algebra,
        projection,
        section,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Homomorphism,
    AntiHomomorphism,
}

/// A linear map between algebras that is multiplicative or anti-multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
    variance: Variance,
}

impl AlgebraMap {
    /// Validates unit preservation and (anti-)multiplicativity on all basis pairs.
    pub fn new(
        source: Arc<Algebra>,
        target: Arc<Algebra>,
        matrix: Matrix,
        variance: Variance,
    ) -> Result<AlgebraMap> {
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim,
                source.dim
            )));
        }
        if matrix.field() != source.field || target.field != source.field {
            return Err(Error::FieldMismatch);
        }
        let f = AlgebraMap {
            source,
            target,
            matrix,
            variance,
        };
        f.check()?;
        Ok(f)
    }

    pub fn automorphism(alg: Arc<Algebra>, matrix: Matrix, variance: Variance) -> Result<AlgebraMap> {
        AlgebraMap::new(alg.clone(), alg, matrix, variance)
    }

    pub fn identity(alg: Arc<Algebra>) -> AlgebraMap {
        let m = Matrix::identity(alg.field, alg.dim);
        AlgebraMap {
            source: alg.clone(),
            target: alg,
            matrix: m,
            variance: Variance::Homomorphism,
        }
    }

    /// The identity viewed as an anti-automorphism; requires a commutative algebra.
    pub fn identity_anti(alg: Arc<Algebra>) -> Result<AlgebraMap> {
        let m = Matrix::identity(alg.field, alg.dim);
        AlgebraMap::automorphism(alg, m, Variance::AntiHomomorphism)
    }

    fn check(&self) -> Result<()> {
        if self.apply(&self.source.unit) != self.target.unit {
            return Err(Error::InvariantViolation("map does not preserve the unit".into()));
        }
        let images: Vec<Vector> = self.matrix.columns();
        let d = self.source.dim;
        for i in 0..d {
            for j in 0..d {
                let mut lhs = self.target.zero();
                for (k, c) in self.source.basis_product(i, j) {
                    axpy(&mut lhs, c, &images[*k]);
                }
                let rhs = match self.variance {
                    Variance::Homomorphism => self.target.mul(&images[i], &images[j]),
                    Variance::AntiHomomorphism => self.target.mul(&images[j], &images[i]),
                };
                if lhs != rhs {
                    return Err(Error::InvariantViolation(format!(
                        "map is not {} on ({}, {})",
                        match self.variance {
                            Variance::Homomorphism => "multiplicative",
                            Variance::AntiHomomorphism => "anti-multiplicative",
                        },
                        self.source.names[i],
                        self.source.names[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AlgebraMap) -> Result<AlgebraMap> {
        if other.target != self.source {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        let variance = if self.variance == other.variance {
            Variance::Homomorphism
        } else {
            Variance::AntiHomomorphism
        };
        Ok(AlgebraMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &other.matrix,
            variance,
        })
    }

    pub fn inverse(&self) -> Result<AlgebraMap> {
        let inv = invert(&self.matrix)?
            .ok_or_else(|| Error::InvariantViolation("map is not bijective".into()))?;
        Ok(AlgebraMap {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: inv,
            variance: self.variance,
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.is_square() && self.matrix.rank() == self.matrix.rows()
    }

    /// True for an endomorphism whose square is the identity.
    pub fn is_involution(&self) -> bool {
        self.source == self.target
            && (&self.matrix * &self.matrix) == Matrix::identity(self.source.field, self.source.dim)
    }

    /// The same linear map with variance re-declared; validated again.
    pub fn with_variance(&self, variance: Variance) -> Result<AlgebraMap> {
        AlgebraMap::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.clone(),
            variance,
        )
    }
}

/// Transpose on `M_n(F)` as an anti-automorphism.
pub fn matrix_transpose(alg: Arc<Algebra>, n: usize) -> Result<AlgebraMap> {
    if alg.dim != n * n {
        return Err(Error::DimensionMismatch("algebra is not M_n".into()));
    }
    let field = alg.field;
    let m = Matrix::from_fn(field, n * n, n * n, |r, c| {
        let (i, j) = (c / n, c % n);
        if r == j * n + i {
            field.one()
        } else {
            field.zero()
        }
    });
    AlgebraMap::automorphism(alg, m, Variance::AntiHomomorphism)
}

/// Quaternion conjugation `a + bi + cj + dk -> a - bi - cj - dk`.
pub fn quaternion_conjugation(alg: Arc<Algebra>) -> Result<AlgebraMap> {
    let field = alg.field;
    let m = Matrix::from_fn(field, 4, 4, |r, c| match (r, c) {
        (0, 0) => field.one(),
        (r, c) if r == c => -field.one(),
        _ => field.zero(),
    });
    AlgebraMap::automorphism(alg, m, Variance::AntiHomomorphism)
}

/// The centre of an algebra.
#[derive(Clone, Debug)]
pub struct CenterData {
    pub basis: Vec<Vector>,
}

impl CenterData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn as_subalgebra(&self, a: &Algebra) -> Result<Subalgebra> {
        Subalgebra::from_basis(a, self.basis.clone(), a.unit())
    }
}

/// Basis of `{x : x e_i = e_i x for all i}`.
pub fn center(a: &Algebra) -> CenterData {
    let d = a.dim;
    let mut rows = Matrix::zeros(a.field, d * d, d);
    for i in 0..d {
        let commutator = &a.right_mul(&a.basis(i)) - &a.left_mul(&a.basis(i));
        rows.set_block(i * d, 0, &commutator);
    }
    CenterData {
        basis: kernel_basis(&rows),
    }
}

/// The automorphism of `Cent(A)` induced by an (anti-)automorphism of `A`.
///
/// Returned as an automorphism of the centre viewed as an algebra in its
/// computed basis.
pub fn restriction_to_center(f: &AlgebraMap) -> Result<AlgebraMap> {
    if f.source != f.target {
        return Err(Error::InvalidInput("type is defined for endomorphisms".into()));
    }
    let a = &f.source;
    let z = center(a).as_subalgebra(a)?;
    let cols = z
        .embedding
        .columns()
        .iter()
        .map(|c| {
            z.restrict(&f.apply(c))
                .ok_or_else(|| Error::InvariantViolation("map does not preserve the centre".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let zalg = Arc::new(z.algebra.clone());
    let m = Matrix::from_columns(a.field, zalg.dim, &cols);
    AlgebraMap::automorphism(zalg, m, Variance::Homomorphism)
}

/// Inverse of `x`, when it is a unit.
pub fn is_unit(a: &Algebra, x: &[Scalar]) -> Option<Vector> {
    let inv = invert(&a.left_mul(x)).ok()??;
    let y = inv.mul_vec(a.unit());
    (a.mul(&y, x) == *a.unit()).then_some(y)
}

/// Basis of the Jacobson radical via the trace form `(x, y) -> tr(L_{xy})`.
///
/// Valid in characteristic 0 and in characteristic `p > dim A`.
pub fn jacobson_radical(a: &Algebra) -> Result<Vec<Vector>> {
    let p = a.field.characteristic();
    if p != 0 && p <= a.dim as u64 {
        return Err(Error::CharTooSmall {
            characteristic: p,
            dim: a.dim,
        });
    }
    let d = a.dim;
    let traces: Vec<Scalar> = (0..d)
        .map(|k| {
            let mut t = a.field.zero();
            for j in 0..d {
                t = &t + &a.constant(k, j, j);
            }
            t
        })
        .collect();
    let form = Matrix::from_fn(a.field, d, d, |i, j| {
        let mut s = a.field.zero();
        for (k, c) in a.basis_product(i, j) {
            s = &s + &(c * &traces[*k]);
        }
        s
    });
    Ok(kernel_basis(&form))
}

/// Minimal polynomial of `x` inside an algebra whose identity is `unit`
/// (which may be a corner idempotent).
pub fn minimal_polynomial(a: &Algebra, x: &[Scalar], unit: &[Scalar]) -> Poly {
    let field = a.field;
    let mut basis = IncrementalBasis::new(field, a.dim);
    let mut power = unit.to_vec();
    loop {
        match basis.insert(&power) {
            Ok(()) => power = a.mul(&power, x),
            Err(coeffs) => {
                let mut c: Vec<Scalar> = coeffs.iter().map(|s| -s).collect();
                c.push(field.one());
                return Poly::new(field, c);
            }
        }
    }
}

fn eval_poly_at(a: &Algebra, p: &Poly, x: &[Scalar], unit: &[Scalar]) -> Vector {
    let mut acc = a.zero();
    for c in p.coeffs().iter().rev() {
        acc = a.mul(&acc, x);
        axpy(&mut acc, c, unit);
    }
    acc
}

/// Orthogonal idempotents `e_r` with `sum e_r = unit`, one per root of the
/// minimal polynomial of `y` in the algebra with identity `unit`.
fn lagrange_split(a: &Algebra, y: &[Scalar], unit: &[Scalar]) -> Result<Vec<Vector>> {
    let m = minimal_polynomial(a, y, unit);
    let deg = m.degree().unwrap_or(0);
    if deg <= 1 {
        return Ok(vec![unit.to_vec()]);
    }
    let rs = roots(&m)?;
    if rs.len() < deg {
        return Err(Error::Unsplit(format!(
            "central element with minimal polynomial of degree {deg} has {} roots",
            rs.len()
        )));
    }
    let mut out = Vec::with_capacity(rs.len());
    for r in &rs {
        let mut num = Poly::constant(a.field.one());
        let mut den = a.field.one();
        for s in rs.iter().filter(|s| *s != r) {
            num = num.mul(&Poly::linear(s));
            den = &den * &(r - s);
        }
        let e = eval_poly_at(a, &num, y, unit);
        out.push(vec_scale(&e, &den.inv().unwrap()));
    }
    Ok(out)
}

/// Complete set of primitive orthogonal idempotents of a split semisimple algebra.
fn split_semisimple(a: &Algebra, search: &SearchConfig) -> Result<Vec<Vector>> {
    let z = center(a);
    let mut central = vec![a.unit().clone()];
    for zb in &z.basis {
        let mut next = Vec::new();
        for e in &central {
            next.extend(lagrange_split(a, &a.mul(zb, e), e)?);
        }
        central = next;
    }
    let mut out = Vec::new();
    for e in &central {
        let block = corner(a, e)?;
        for f in split_central_simple(&block.algebra, search, 0)? {
            out.push(block.embed(&f));
        }
    }
    Ok(out)
}

/// Splits a central simple algebra that is a full matrix algebra over the ground field.
fn split_central_simple(b: &Algebra, search: &SearchConfig, depth: u64) -> Result<Vec<Vector>> {
    let d = b.dim();
    if d == 1 {
        return Ok(vec![b.unit().clone()]);
    }
    if crate::linalg::poly::exact_sqrt(d as u64).is_none() {
        return Err(Error::InvariantViolation(format!(
            "central simple block of non-square dimension {d}"
        )));
    }
    let y = find_zero_divisor(b, search, depth)?;
    let ideal = b.left_mul(&y).column_space();
    let f = left_identity_of_right_ideal(b, &ideal)?;
    let g = vec_sub(b.unit(), &f);
    let mut out = Vec::new();
    for idem in [f, g] {
        let sub = corner(b, &idem)?;
        for e in split_central_simple(&sub.algebra, search, depth + 1)? {
            out.push(sub.embed(&e));
        }
    }
    Ok(out)
}

fn is_zero_divisor(b: &Algebra, y: &[Scalar]) -> bool {
    !is_zero_vector(y) && b.left_mul(y).rank() < b.dim()
}

fn find_zero_divisor(b: &Algebra, search: &SearchConfig, depth: u64) -> Result<Vector> {
    let d = b.dim();
    for i in 0..d {
        let y = b.basis(i);
        if is_zero_divisor(b, &y) {
            return Ok(y);
        }
    }
    let mut rng = search.rng(0x5EED_0001 ^ depth);
    let trials = search.max_trials;
    let candidates = (0..d)
        .map(|i| b.basis(i))
        .chain((0..trials).map(|t| random_vector(b.field(), d, &mut rng, height_for_trial(t, trials))));
    for x in candidates {
        let m = minimal_polynomial(b, &x, b.unit());
        if m.degree().unwrap_or(0) <= 1 {
            continue;
        }
        if let Some(r) = roots(&m)?.first() {
            let y = vec_sub(&x, &vec_scale(b.unit(), r));
            if is_zero_divisor(b, &y) {
                return Ok(y);
            }
        }
    }
    Err(Error::Unsplit(format!(
        "no zero divisor found in a central simple block of dim {d} within {trials} trials"
    )))
}

/// An idempotent `f` of the right ideal `I` with `f v = v` for all `v` in `I`.
fn left_identity_of_right_ideal(b: &Algebra, ideal: &[Vector]) -> Result<Vector> {
    let d = b.dim();
    let k = ideal.len();
    let mut system = Matrix::zeros(b.field(), d * k, k);
    let mut rhs = Vec::with_capacity(d * k);
    for (l, v) in ideal.iter().enumerate() {
        for (c, u) in ideal.iter().enumerate() {
            let uv = b.mul(u, v);
            for r in 0..d {
                system.set(l * d + r, c, uv[r].clone());
            }
        }
        rhs.extend(v.iter().cloned());
    }
    let coeffs = solve(&system, &rhs)?
        .ok_or_else(|| Error::InvariantViolation("right ideal has no left identity".into()))?;
    let mut f = b.zero();
    for (c, u) in coeffs.iter().zip(ideal) {
        axpy(&mut f, c, u);
    }
    Ok(f)
}

/// A complete set of orthogonal primitive idempotents summing to 1.
///
/// Splits the semisimple quotient `A/J` and lifts with `e -> 3e^2 - 2e^3`.
pub fn primitive_idempotents(a: &Algebra, search: &SearchConfig) -> Result<Vec<Vector>> {
    let radical = jacobson_radical(a)?;
    let p = a.field.characteristic();
    if !radical.is_empty() && (p == 2 || p == 3) {
        return Err(Error::Unsupported(format!(
            "idempotent lifting in characteristic {p} with nonzero radical"
        )));
    }
    let reduced: Vec<Vector> = if radical.is_empty() {
        split_semisimple(a, search)?
    } else {
        let q = quotient(a, &radical)?;
        split_semisimple(&q.algebra, search)?
            .iter()
            .map(|e| q.section.mul_vec(e))
            .collect()
    };
    let mut lifted: Vec<Vector> = Vec::with_capacity(reduced.len());
    let mut used = a.zero();
    let count = reduced.len();
    for (n, approx) in reduced.into_iter().enumerate() {
        let complement = vec_sub(a.unit(), &used);
        let e = if n + 1 == count {
            complement
        } else {
            let x = a.mul3(&complement, &approx, &complement);
            lift_idempotent(a, x)?
        };
        used = crate::linalg::vec_add(&used, &e);
        lifted.push(e);
    }
    for (i, e) in lifted.iter().enumerate() {
        if a.mul(e, e) != *e || is_zero_vector(e) {
            return Err(Error::InvariantViolation("lifted element is not idempotent".into()));
        }
        for f in &lifted[..i] {
            if !is_zero_vector(&a.mul(e, f)) || !is_zero_vector(&a.mul(f, e)) {
                return Err(Error::InvariantViolation("lifted idempotents not orthogonal".into()));
            }
        }
    }
    Ok(lifted)
}

fn lift_idempotent(a: &Algebra, mut x: Vector) -> Result<Vector> {
    let three = a.field.from_i64(3);
    let two = a.field.from_i64(2);
    for _ in 0..=a.dim + 1 {
        let x2 = a.mul(&x, &x);
        if x2 == x {
            return Ok(x);
        }
        let x3 = a.mul(&x2, &x);
        x = vec_sub(&vec_scale(&x2, &three), &vec_scale(&x3, &two));
    }
    Err(Error::InvariantViolation("idempotent lifting did not converge".into()))
}

/// The right ideal `eA` as a right module over `A`.
pub fn right_ideal_module(a: &Arc<Algebra>, e: &[Scalar]) -> Result<Module> {
    let basis = a.left_mul(e).column_space();
    Module::regular(a.clone()).submodule(&basis)
}

/// Basic algebra `fAf` with `f` a sum of one primitive idempotent per isomorphism class.
#[derive(Clone, Debug)]
pub struct BasicAlgebra {
    pub corner: Subalgebra,
    pub idempotent: Vector,
    /// Indices into `idempotents`, grouped by isomorphism class of `eA`.
    pub classes: Vec<Vec<usize>>,
    pub idempotents: Vec<Vector>,
}

pub fn basic_algebra(a: &Arc<Algebra>, search: &SearchConfig) -> Result<BasicAlgebra> {
    let idempotents = primitive_idempotents(a, search)?;
    let classes = idempotent_classes(a, &idempotents, search)?;
    let mut f = a.zero();
    for class in &classes {
        f = crate::linalg::vec_add(&f, &idempotents[class[0]]);
    }
    let corner = corner(a, &f)?;
    Ok(BasicAlgebra {
        corner,
        idempotent: f,
        classes,
        idempotents,
    })
}

/// Groups primitive idempotents by isomorphism of the right ideals `eA`.
pub fn idempotent_classes(
    a: &Arc<Algebra>,
    idempotents: &[Vector],
    search: &SearchConfig,
) -> Result<Vec<Vec<usize>>> {
    let modules = idempotents
        .iter()
        .map(|e| right_ideal_module(a, e))
        .collect::<Result<Vec<_>>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, m) in modules.iter().enumerate() {
        for class in classes.iter_mut() {
            if is_isomorphic(&modules[class[0]], m, search)?.is_some() {
                class.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

/// `g = sum e_ij (x) e_ji` in `M_n(F) (x) M_n(F)`, after checking `g^2 = 1` and
/// `g (r (x) s) = (s (x) r) g` on basis elements.
#[derive(Clone, Debug)]
pub struct GoldmanElement {
    pub n: usize,
    pub algebra: Arc<Algebra>,
    pub element: Vector,
}

pub fn goldman_element(field: Field, n: usize) -> Result<GoldmanElement> {
    let mn = matrix_algebra(field, n)?;
    let t = Arc::new(tensor_product(&mn, &mn)?);
    let n2 = n * n;
    let mut g = t.zero();
    for i in 0..n {
        for j in 0..n {
            g[(i * n + j) * n2 + (j * n + i)] = field.one();
        }
    }
    let ge = GoldmanElement {
        n,
        algebra: t,
        element: g,
    };
    ge.verify()?;
    Ok(ge)
}

impl GoldmanElement {
    pub fn verify(&self) -> Result<()> {
        let t = &self.algebra;
        if t.mul(&self.element, &self.element) != *t.unit() {
            return Err(Error::InvariantViolation("g^2 != 1".into()));
        }
        let n2 = self.n * self.n;
        for r in 0..n2 {
            for s in 0..n2 {
                let lhs = t.mul(&self.element, &t.basis(r * n2 + s));
                let rhs = t.mul(&t.basis(s * n2 + r), &self.element);
                if lhs != rhs {
                    return Err(Error::InvariantViolation(format!(
                        "swap law fails on basis pair ({r}, {s})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of the experimental search for Goldman elements in `A (x) A`.
#[derive(Clone, Debug)]
pub struct GoldmanSearch {
    /// Dimension of the solution space of `g (r (x) s) = (s (x) r) g`.
    pub swap_solution_dim: usize,
    /// A Goldman element when the solution space is a line containing one.
    pub element: Option<Vector>,
}

/// Solves the linear swap condition on `A (x) A` and, when the solutions form a
/// line spanned by `g`, checks whether a scalar multiple squares to 1.
pub fn search_goldman_elements(a: &Algebra) -> Result<GoldmanSearch> {
    let t = tensor_product(a, a)?;
    let d = a.dim();
    let td = t.dim();
    let mut system = Matrix::zeros(a.field, d * d * td, td);
    let mut row = 0;
    for r in 0..d {
        for s in 0..d {
            let rs = t.right_mul(&t.basis(r * d + s));
            let sr = t.left_mul(&t.basis(s * d + r));
            system.set_block(row, 0, &(&rs - &sr));
            row += td;
        }
    }
    let sols = kernel_basis(&system);
    let mut element = None;
    if sols.len() == 1 {
        let g = &sols[0];
        let g2 = t.mul(g, g);
        if let Some(lambda) = (0..td).find(|&i| !t.unit()[i].is_zero()).map(|i| {
            &g2[i] * &t.unit()[i].inv().unwrap()
        }) {
            if vec_scale(t.unit(), &lambda) == g2 {
                element = scalar_sqrt(&lambda).and_then(|s| s.inv()).map(|c| vec_scale(g, &c));
            }
        }
    }
    Ok(GoldmanSearch {
        swap_solution_dim: sols.len(),
        element,
    })
}

fn scalar_sqrt(x: &Scalar) -> Option<Scalar> {
    match x {
        Scalar::Rational(q) => {
            use num_traits::Signed;
            if q.is_negative() {
                return None;
            }
            let n = q.numer().sqrt();
            let d = q.denom().sqrt();
            (&n * &n == *q.numer() && &d * &d == *q.denom())
                .then(|| Scalar::Rational(num_rational::BigRational::new(n, d)))
        }
        Scalar::Modular { modulus, .. } => Field::Prime(*modulus)
            .elements()
            .unwrap()
            .find(|s| &(s * s) == x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_add;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn matrix_algebra_examples() {
        let m1 = matrix_algebra(q(), 1).unwrap();
        assert_eq!(m1.dim(), 1);
        assert_eq!(m1.unit(), &vec![q().one()]);
        let f5 = Field::Prime(5);
        let m2 = matrix_algebra(f5, 2).unwrap();
        assert_eq!(m2.dim(), 4);
        assert_eq!(m2.mul(&m2.basis(1), &m2.basis(2)), m2.basis(0));
        matrix_algebra(q(), 3).unwrap().validate().unwrap();
    }

    #[test]
    fn opposite_examples() {
        let comm = direct_product(&scalar_algebra(q()), &scalar_algebra(q())).unwrap();
        assert_eq!(opposite(&comm), comm);
        let m2 = matrix_algebra(q(), 2).unwrap();
        assert_eq!(opposite(&opposite(&m2)), m2);
        let op = opposite(&m2);
        // e12 ∘ e21 = e21 e12 = e22
        assert_eq!(op.mul(&op.basis(1), &op.basis(2)), op.basis(3));
    }

    #[test]
    fn product_and_tensor_examples() {
        let qq = direct_product(&scalar_algebra(q()), &scalar_algebra(q())).unwrap();
        assert!(is_zero_vector(&qq.mul(&qq.basis(0), &qq.basis(1))));
        let m2 = matrix_algebra(q(), 2).unwrap();
        let t = tensor_product(&m2, &m2).unwrap();
        assert_eq!(t.dim(), 16);
        t.validate().unwrap();
        let af = tensor_product(&m2, &scalar_algebra(q())).unwrap();
        assert_eq!(af.constants(), m2.constants());
        assert!(direct_product(&m2, &scalar_algebra(Field::Prime(3))).is_err());
    }

    #[test]
    fn center_examples() {
        let m3 = matrix_algebra(q(), 3).unwrap();
        let z = center(&m3);
        assert_eq!(z.dim(), 1);
        assert_eq!(z.basis[0], *m3.unit());
        let qq = direct_product(&scalar_algebra(q()), &scalar_algebra(q())).unwrap();
        assert_eq!(center(&qq).dim(), 2);
    }

    #[test]
    fn radical_examples() {
        assert!(jacobson_radical(&matrix_algebra(q(), 2).unwrap()).unwrap().is_empty());
        let ut = upper_triangular(q(), 2).unwrap();
        // basis e11, e12, e22
        assert_eq!(jacobson_radical(&ut).unwrap(), vec![ut.basis(1)]);
        let err = jacobson_radical(&matrix_algebra(Field::Prime(3), 2).unwrap()).unwrap_err();
        assert!(err.to_string().contains("char too small for radical algorithm"));
    }

    #[test]
    fn unit_examples() {
        let ut = upper_triangular(q(), 2).unwrap();
        assert_eq!(is_unit(&ut, ut.unit()), Some(ut.unit().clone()));
        let m2 = matrix_algebra(q(), 2).unwrap();
        assert_eq!(is_unit(&m2, &m2.basis(1)), None);
        let x = vec_add(ut.unit(), &ut.basis(1));
        assert_eq!(is_unit(&ut, &x), Some(vec_sub(ut.unit(), &ut.basis(1))));
    }

    #[test]
    fn idempotents_of_small_algebras() {
        let s = SearchConfig::default();
        let m2 = matrix_algebra(q(), 2).unwrap();
        let es = primitive_idempotents(&m2, &s).unwrap();
        assert_eq!(es.len(), 2);
        let qq = direct_product(&scalar_algebra(q()), &scalar_algebra(q())).unwrap();
        let es = primitive_idempotents(&qq, &s).unwrap();
        assert_eq!(es.len(), 2);
        assert!(es.contains(&qq.basis(0)) && es.contains(&qq.basis(1)));
        let ut = upper_triangular(q(), 3).unwrap();
        assert_eq!(primitive_idempotents(&ut, &s).unwrap().len(), 3);
    }

    #[test]
    fn quaternions_are_unsplit() {
        let h = quaternion_algebra(q(), -1, -1).unwrap();
        let err = primitive_idempotents(&h, &SearchConfig::default()).unwrap_err();
        assert!(matches!(err, Error::Unsplit(_)));
        let gauss = quadratic_algebra(q(), -1);
        assert!(matches!(
            primitive_idempotents(&gauss, &SearchConfig::default()),
            Err(Error::Unsplit(_))
        ));
    }

    #[test]
    fn split_quaternions_split() {
        // (1, 1)_Q ≅ M_2(Q)
        let h = quaternion_algebra(q(), 1, 1).unwrap();
        assert_eq!(primitive_idempotents(&h, &SearchConfig::default()).unwrap().len(), 2);
    }

    #[test]
    fn basic_algebra_examples() {
        let s = SearchConfig::default();
        let m3 = Arc::new(matrix_algebra(q(), 3).unwrap());
        assert_eq!(basic_algebra(&m3, &s).unwrap().corner.algebra.dim(), 1);
        let mq = Arc::new(direct_product(&matrix_algebra(q(), 2).unwrap(), &scalar_algebra(q())).unwrap());
        let b = basic_algebra(&mq, &s).unwrap();
        assert_eq!(b.classes.len(), 2);
        assert_eq!(b.corner.algebra.dim(), 2);
        assert!(b.corner.algebra.is_commutative());
    }

    #[test]
    fn goldman_examples() {
        let g1 = goldman_element(q(), 1).unwrap();
        assert_eq!(g1.element, vec![q().one()]);
        let g2 = goldman_element(q(), 2).unwrap();
        assert_eq!(g2.element.iter().filter(|c| !c.is_zero()).count(), 4);
        // g (e12 ⊗ e22) = (e22 ⊗ e12) g
        let t = &g2.algebra;
        let lhs = t.mul(&g2.element, &t.basis(4 + 3));
        let rhs = t.mul(&t.basis(3 * 4 + 1), &g2.element);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn goldman_search_on_matrix_algebra() {
        let m2 = matrix_algebra(q(), 2).unwrap();
        let res = search_goldman_elements(&m2).unwrap();
        assert_eq!(res.swap_solution_dim, 1);
        assert!(res.element.is_some());
    }

    #[test]
    fn restriction_examples() {
        let m2 = Arc::new(matrix_algebra(q(), 2).unwrap());
        let t = matrix_transpose(m2.clone(), 2).unwrap();
        let r = restriction_to_center(&t).unwrap();
        assert_eq!(r.matrix(), &Matrix::identity(q(), 1));
        let qq = Arc::new(direct_product(&scalar_algebra(q()), &scalar_algebra(q())).unwrap());
        let swap = Matrix::from_fn(q(), 2, 2, |r, c| if r != c { q().one() } else { q().zero() });
        let f = AlgebraMap::automorphism(qq, swap.clone(), Variance::Homomorphism).unwrap();
        let r = restriction_to_center(&f).unwrap();
        assert_ne!(r.matrix(), &Matrix::identity(q(), 2));
        assert!(r.is_involution());
    }

    #[test]
    fn non_multiplicative_map_rejected() {
        let m2 = Arc::new(matrix_algebra(q(), 2).unwrap());
        let id = Matrix::identity(q(), 4);
        assert!(AlgebraMap::automorphism(m2, id, Variance::AntiHomomorphism).is_err());
    }

    #[test]
    fn quaternion_relations() {
        let h = quaternion_algebra(q(), -1, -1).unwrap();
        h.validate().unwrap();
        let conj = quaternion_conjugation(Arc::new(h)).unwrap();
        assert!(conj.is_involution());
    }
}
