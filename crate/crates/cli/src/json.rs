//! Reading and writing the JSON schemas for fields, algebras, modules, maps and posets.

use std::sync::Arc;

use morita_core::algebra::{
    matrix_algebra, matrix_transpose, quadratic_algebra, quaternion_algebra,
    quaternion_conjugation, scalar_algebra, upper_triangular, Algebra, AlgebraMap, Variance,
};
use morita_core::forms::DoubleModule;
use morita_core::involution::{matrix_ring_over, transpose_gamma};
use morita_core::linalg::poly::exact_sqrt;
use morita_core::module::Module;
use morita_core::posets::{incidence_algebra, Poset};
use morita_core::{Field, Matrix, Scalar, Vector};
use serde_json::{json, Value};

use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn field_of(v: &Value) -> Result<Field> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rationals),
        Value::String(s) => s
            .trim_start_matches("F_")
            .parse::<u64>()
            .map_err(|_| bad(format!("unknown field {s:?}")))
            .and_then(|p| Ok(Field::prime(p)?)),
        Value::Number(n) => Ok(Field::prime(n.as_u64().ok_or_else(|| bad("bad prime"))?)?),
        Value::Object(o) => {
            let p = o
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("field object needs an integer \"p\""))?;
            Ok(Field::prime(p)?)
        }
        _ => Err(bad("field must be \"Q\" or {\"p\": prime}")),
    }
}

/// Parses the `--field` flag: `Q` or a prime.
pub fn field_from_flag(s: &str) -> Result<Field> {
    if s == "Q" {
        return Ok(Field::Rationals);
    }
    field_of(&Value::String(s.to_string()))
}

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rationals => json!("Q"),
        Field::Prime(p) => json!({ "p": p }),
    }
}

pub fn scalar(f: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|k| f.from_i64(k))
            .ok_or_else(|| bad(format!("scalar {n} is not an integer; use \"a/b\""))),
        Value::String(s) => Ok(f.parse(s)?),
        _ => Err(bad("scalar must be an integer or a string")),
    }
}

pub fn vector(f: Field, v: &Value) -> Result<Vector> {
    array(v, "vector")?.iter().map(|x| scalar(f, x)).collect()
}

/// A matrix given as a list of rows.
pub fn matrix(f: Field, v: &Value) -> Result<Matrix> {
    let rows = array(v, "matrix")?
        .iter()
        .map(|r| vector(f, r))
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    Ok(Matrix::from_rows(f, cols, rows)?)
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn get_u64(v: &Value, key: &str) -> Result<u64> {
    get(v, key)?
        .as_u64()
        .ok_or_else(|| bad(format!("{key:?} must be a non-negative integer")))
}

fn get_i64(v: &Value, key: &str) -> Result<i64> {
    get(v, key)?
        .as_i64()
        .ok_or_else(|| bad(format!("{key:?} must be an integer")))
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_to_json(m.row(r))).collect())
}

/// An algebra, either from structure constants or one of the named families.
///
/// `field_override` replaces the declared field.
pub fn algebra(v: &Value, field_override: Option<Field>) -> Result<Algebra> {
    let declared = match v.get("field") {
        Some(f) => field_of(f)?,
        None => Field::Rationals,
    };
    let f = field_override.unwrap_or(declared);
    if let Some(name) = v.get("builtin") {
        let name = name.as_str().ok_or_else(|| bad("\"builtin\" must be a string"))?;
        return Ok(match name {
            "scalar" => scalar_algebra(f),
            "matrix" => matrix_algebra(f, get_u64(v, "n")? as usize)?,
            "upper_triangular" => upper_triangular(f, get_u64(v, "n")? as usize)?,
            "quaternion" => quaternion_algebra(f, get_i64(v, "a")?, get_i64(v, "b")?)?,
            "quadratic" => quadratic_algebra(f, get_i64(v, "d")?),
            "incidence" => incidence_algebra(f, &poset(get(v, "poset")?)?)?,
            "matrix_ring" => {
                let base = algebra(get(v, "over")?, field_override)?;
                matrix_ring_over(&base, get_u64(v, "n")? as usize)?
            }
            other => return Err(bad(format!("unknown builtin algebra {other:?}"))),
        });
    }
    let names: Vec<String> = array(get(v, "basis")?, "basis")?
        .iter()
        .map(|n| n.as_str().map(str::to_string).ok_or_else(|| bad("basis names must be strings")))
        .collect::<Result<_>>()?;
    let table = array(get(v, "table")?, "table")?
        .iter()
        .map(|row| {
            array(row, "table row")?
                .iter()
                .map(|x| vector(f, x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = vector(f, get(v, "unit")?)?;
    Ok(Algebra::new(f, names, table, unit)?)
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let d = a.dim();
    let table: Vec<Value> = (0..d)
        .map(|i| {
            Value::Array(
                (0..d)
                    .map(|j| vector_to_json(&a.mul(&a.basis(i), &a.basis(j))))
                    .collect(),
            )
        })
        .collect();
    json!({
        "field": field_to_json(a.field()),
        "basis": a.names(),
        "table": table,
        "unit": vector_to_json(a.unit()),
    })
}

/// The algebra in `v["algebra"]`, or `v` itself when it already describes one.
pub fn algebra_in(v: &Value, field_override: Option<Field>) -> Result<Algebra> {
    match v.get("algebra") {
        Some(a) => algebra(a, field_override),
        None => algebra(v, field_override),
    }
}

/// A linear (anti-)endomorphism of `alg` given by basis images or by name.
pub fn algebra_map(alg: &Arc<Algebra>, v: &Value, variance: Variance) -> Result<AlgebraMap> {
    let f = alg.field();
    if let Some(name) = v.get("builtin").or_else(|| v.as_str().map(|_| v)) {
        let name = name.as_str().ok_or_else(|| bad("map name must be a string"))?;
        return Ok(match name {
            "identity" => match variance {
                Variance::Homomorphism => AlgebraMap::identity(alg.clone()),
                Variance::AntiHomomorphism => AlgebraMap::identity_anti(alg.clone())?,
            },
            "transpose" => {
                let n = exact_sqrt(alg.dim() as u64).ok_or_else(|| bad("transpose needs M_n"))?;
                matrix_transpose(alg.clone(), n as usize)?
            }
            "conjugation" => quaternion_conjugation(alg.clone())?,
            other => return Err(bad(format!("unknown builtin map {other:?}"))),
        });
    }
    let images = array(get(v, "images")?, "images")?
        .iter()
        .map(|x| vector(f, x))
        .collect::<Result<Vec<_>>>()?;
    if images.len() != alg.dim() {
        return Err(bad(format!("{} images for an algebra of dim {}", images.len(), alg.dim())));
    }
    let m = Matrix::from_columns(f, alg.dim(), &images);
    Ok(AlgebraMap::automorphism(alg.clone(), m, variance)?)
}

/// An anti-automorphism of `M_n(A)`: basis images, `"transpose"`, or
/// `{"transpose_gamma": map on A}`.
pub fn matrix_ring_map(base: &Arc<Algebra>, n: usize, v: &Value) -> Result<AlgebraMap> {
    if let Some(g) = v.get("transpose_gamma") {
        let gamma = algebra_map(base, g, Variance::AntiHomomorphism)?;
        return Ok(transpose_gamma(&gamma, n)?);
    }
    if v.as_str() == Some("transpose") {
        let id = AlgebraMap::identity_anti(base.clone())?;
        return Ok(transpose_gamma(&id, n)?);
    }
    let mn = Arc::new(matrix_ring_over(base, n)?);
    algebra_map(&mn, v, Variance::AntiHomomorphism)
}

pub fn map_to_json(m: &AlgebraMap) -> Value {
    let a = m.source();
    Value::Array(
        (0..a.dim())
            .map(|i| vector_to_json(&m.apply(&a.basis(i))))
            .collect(),
    )
}

pub fn module(alg: &Arc<Algebra>, v: &Value) -> Result<Module> {
    if v.as_str() == Some("regular") {
        return Ok(Module::regular(alg.clone()));
    }
    let f = alg.field();
    let dim = get_u64(v, "dim")? as usize;
    let action = array(get(v, "action")?, "action")?
        .iter()
        .map(|m| matrix_of_size(f, m, dim))
        .collect::<Result<Vec<_>>>()?;
    Ok(Module::new(alg.clone(), dim, action)?)
}

fn matrix_of_size(f: Field, v: &Value, dim: usize) -> Result<Matrix> {
    if dim == 0 {
        return Ok(Matrix::zeros(f, 0, 0));
    }
    let m = matrix(f, v)?;
    if m.rows() != dim || m.cols() != dim {
        return Err(bad(format!("action matrix must be {dim}x{dim}")));
    }
    Ok(m)
}

pub fn double_module(alg: &Arc<Algebra>, v: &Value) -> Result<DoubleModule> {
    let f = alg.field();
    let dim = get_u64(v, "dim")? as usize;
    let side = |key: &str| -> Result<Vec<Matrix>> {
        array(get(v, key)?, key)?
            .iter()
            .map(|m| matrix_of_size(f, m, dim))
            .collect()
    };
    Ok(DoubleModule::new(alg.clone(), dim, side("action0")?, side("action1")?)?)
}

pub fn poset(v: &Value) -> Result<Poset> {
    let size = get_u64(v, "size")? as usize;
    let cover = match v.get("cover") {
        Some(c) => array(c, "cover")?
            .iter()
            .map(|pair| {
                let p = array(pair, "cover pair")?;
                match (p.first().and_then(Value::as_u64), p.get(1).and_then(Value::as_u64), p.len()) {
                    (Some(i), Some(j), 2) => Ok((i as usize, j as usize)),
                    _ => Err(bad("cover pairs must be [i, j]")),
                }
            })
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    Ok(Poset::from_cover(size, &cover)?)
}

pub fn poset_to_json(p: &Poset) -> Value {
    json!({
        "size": p.size(),
        "cover": p.covers().iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
    })
}
