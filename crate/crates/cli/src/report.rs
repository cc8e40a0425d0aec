//! The JSON report emitted by every command, and the independent checks that
//! fill its `checks` section.

use morita_core::algebra::Algebra;
use morita_core::{Matrix, Scalar};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub citation: String,
    pub result: Value,
    pub certificate: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, citation: &str) -> Report {
        Report {
            command: command.to_string(),
            citation: citation.to_string(),
            result: Value::Null,
            certificate: Value::Null,
            checks: Vec::new(),
        }
    }

    pub fn check(&mut self, name: &str, pass: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// A report together with its exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

impl Outcome {
    pub fn ok(report: Report) -> Outcome {
        Outcome { report, code: 0 }
    }

    pub fn negative(report: Report) -> Outcome {
        Outcome { report, code: 2 }
    }
}

fn product(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = a.dim();
    let mut out = vec![a.field().zero(); d];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            for (k, o) in out.iter_mut().enumerate() {
                let t = a.constant(i, j, k);
                if !t.is_zero() {
                    *o = &*o + &(&c * &t);
                }
            }
        }
    }
    out
}

/// `f(e_i e_j) = f(e_j) f(e_i)` on all basis pairs and `f(1) = 1`.
pub fn is_anti_multiplicative(a: &Algebra, f: &Matrix) -> bool {
    let d = a.dim();
    if f.rows() != d || f.cols() != d || f.mul_vec(a.unit()) != *a.unit() {
        return false;
    }
    let images = f.columns();
    (0..d).all(|i| {
        (0..d).all(|j| f.mul_vec(&product(a, &a.basis(i), &a.basis(j))) == product(a, &images[j], &images[i]))
    })
}

pub fn is_involutive(f: &Matrix) -> bool {
    f.is_square() && f * f == Matrix::identity(f.field(), f.rows())
}

pub fn is_idempotent(a: &Algebra, e: &[Scalar]) -> bool {
    product(a, e, e) == e
}

pub fn multiply(a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    product(a, x, y)
}
