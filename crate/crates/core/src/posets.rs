//! Finite posets, order-reversing bijections, incidence algebras and the poset of
//! primitive idempotent classes of an algebra.

use std::sync::Arc;

use crate::algebra::{idempotent_classes, primitive_idempotents, Algebra, AlgebraMap, Variance};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::search::SearchConfig;

/// A partial order on `0..size`; `leq[i][j]` means `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Poset> {
        let size = leq.len();
        if leq.iter().any(|row| row.len() != size) {
            return Err(Error::NotAPoset("relation matrix is not square".into()));
        }
        for i in 0..size {
            if !leq[i][i] {
                return Err(Error::NotAPoset(format!("{i} <= {i} fails")));
            }
            for j in 0..size {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::NotAPoset(format!("{i} and {j} are mutually below")));
                }
                for k in 0..size {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::NotAPoset(format!("{i} <= {j} <= {k} but not {i} <= {k}")));
                    }
                }
            }
        }
        Ok(Poset { size, leq })
    }

    /// Reflexive-transitive closure of the relations `i <= j` for `(i, j)` in `cover`.
    pub fn from_cover(size: usize, cover: &[(usize, usize)]) -> Result<Poset> {
        let mut leq = vec![vec![false; size]; size];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in cover {
            if i >= size || j >= size {
                return Err(Error::NotAPoset(format!("relation ({i}, {j}) out of range")));
            }
            leq[i][j] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if leq[i][k] {
                    for j in 0..size {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Poset::new(leq)
    }

    pub fn chain(n: usize) -> Poset {
        Poset {
            size: n,
            leq: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect(),
        }
    }

    pub fn antichain(n: usize) -> Poset {
        Poset {
            size: n,
            leq: (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Pairs `(i, j)` with `i <= j`, row-major.
    pub fn comparable_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|i| (0..self.size).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq[i][j])
            .collect()
    }

    /// Covering relations `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.comparable_pairs()
            .into_iter()
            .filter(|&(i, j)| {
                i != j && !(0..self.size).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j])
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.size == 0 {
            return true;
        }
        let mut seen = vec![false; self.size];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..self.size {
                if !seen[j] && (self.leq[i][j] || self.leq[j][i]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn opposite(&self) -> Poset {
        Poset {
            size: self.size,
            leq: (0..self.size)
                .map(|i| (0..self.size).map(|j| self.leq[j][i]).collect())
                .collect(),
        }
    }

    fn up_down_counts(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .map(|i| {
                let up = (0..self.size).filter(|&j| self.leq[i][j]).count();
                let down = (0..self.size).filter(|&j| self.leq[j][i]).count();
                (up, down)
            })
            .collect()
    }
}

/// Bijections `φ: P -> Q` with `i <= j` iff `φ(i) <= φ(j)`, found by backtracking.
fn order_isomorphisms(p: &Poset, q: &Poset, limit: Option<usize>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p.size != q.size {
        return out;
    }
    let (pc, qc) = (p.up_down_counts(), q.up_down_counts());
    let mut image = vec![usize::MAX; p.size];
    let mut used = vec![false; q.size];
    extend_isomorphism(p, q, &pc, &qc, 0, &mut image, &mut used, &mut out, limit);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_isomorphism(
    p: &Poset,
    q: &Poset,
    pc: &[(usize, usize)],
    qc: &[(usize, usize)],
    i: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    limit: Option<usize>,
) {
    if limit.is_some_and(|l| out.len() >= l) {
        return;
    }
    if i == p.size {
        out.push(image.clone());
        return;
    }
    for t in 0..q.size {
        if used[t] || pc[i] != qc[t] {
            continue;
        }
        let consistent = (0..i).all(|j| {
            p.leq[i][j] == q.leq[t][image[j]] && p.leq[j][i] == q.leq[image[j]][t]
        });
        if !consistent {
            continue;
        }
        image[i] = t;
        used[t] = true;
        extend_isomorphism(p, q, pc, qc, i + 1, image, used, out, limit);
        used[t] = false;
        image[i] = usize::MAX;
    }
}

pub fn poset_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    order_isomorphisms(p, q, Some(1)).pop()
}

fn permutation_order(perm: &[usize]) -> usize {
    let mut order = 1;
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

/// All bijections with `i <= j` iff `φ(j) <= φ(i)`, optionally restricted to
/// those with `φ^order = id`.
pub fn order_reversing_maps(p: &Poset, order: Option<usize>) -> Vec<Vec<usize>> {
    order_isomorphisms(p, &p.opposite(), None)
        .into_iter()
        .filter(|phi| order.is_none_or(|k| k > 0 && k % permutation_order(phi) == 0))
        .collect()
}

/// Order-reversing bijections of order exactly `k`.
pub fn order_reversing_maps_of_order(p: &Poset, k: usize) -> Vec<Vec<usize>> {
    order_reversing_maps(p, None)
        .into_iter()
        .filter(|phi| permutation_order(phi) == k)
        .collect()
}

/// Grid coordinates of the elements of the built-in 12-element poset.
pub const SCHARLAU_POINTS: [(i64, i64); 12] = [
    (0, 1),
    (0, 2),
    (1, 0),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 0),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 1),
    (3, 2),
];

/// Relations `a <= b` between grid points.
const SCHARLAU_RELATIONS: [((i64, i64), (i64, i64)); 12] = [
    ((0, 1), (0, 2)),
    ((1, 0), (0, 1)),
    ((1, 0), (2, 0)),
    ((1, 1), (0, 1)),
    ((1, 3), (0, 2)),
    ((1, 3), (1, 2)),
    ((2, 0), (3, 1)),
    ((2, 0), (2, 1)),
    ((2, 2), (3, 2)),
    ((2, 3), (1, 3)),
    ((2, 3), (3, 2)),
    ((3, 2), (3, 1)),
];

/// The quarter turn `(r, c) -> (c, 3 - r)` on the grid, as a permutation.
pub fn scharlau_rotation() -> Vec<usize> {
    let index = |pt: (i64, i64)| SCHARLAU_POINTS.iter().position(|&q| q == pt);
    SCHARLAU_POINTS
        .iter()
        .map(|&(r, c)| index((c, 3 - r)).expect("grid is closed under the rotation"))
        .collect()
}

/// Connected 12-element poset with an order-reversing bijection of order 4 and
/// none of order at most 2.
pub fn scharlau_poset() -> Poset {
    let index = |pt: (i64, i64)| SCHARLAU_POINTS.iter().position(|&q| q == pt).expect("grid point");
    let cover: Vec<(usize, usize)> = SCHARLAU_RELATIONS
        .iter()
        .map(|&(a, b)| (index(a), index(b)))
        .collect();
    Poset::from_cover(SCHARLAU_POINTS.len(), &cover).expect("transcription is a partial order")
}

/// Outcome of the checks that the built-in transcription must pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScharlauGate {
    pub connected: bool,
    pub order_four: Vec<Vec<usize>>,
    pub involutions: Vec<Vec<usize>>,
    pub rotation_reverses_order: bool,
}

impl ScharlauGate {
    pub fn passed(&self) -> bool {
        self.connected && !self.order_four.is_empty() && self.involutions.is_empty() && self.rotation_reverses_order
    }
}

pub fn scharlau_gate() -> ScharlauGate {
    let p = scharlau_poset();
    let all = order_reversing_maps(&p, None);
    let rotation = scharlau_rotation();
    ScharlauGate {
        connected: p.is_connected(),
        order_four: all.iter().filter(|phi| permutation_order(phi) == 4).cloned().collect(),
        involutions: all.iter().filter(|phi| permutation_order(phi) <= 2).cloned().collect(),
        rotation_reverses_order: all.contains(&rotation),
    }
}

pub fn incidence_basis_name(i: usize, j: usize) -> String {
    format!("e{i}_{j}")
}

/// `F(P)` with basis `e_ij` for `i <= j` (row-major) and `e_ij e_kl = δ_jk e_il`.
pub fn incidence_algebra(field: Field, p: &Poset) -> Result<Algebra> {
    let pairs = p.comparable_pairs();
    let index = |i: usize, j: usize| pairs.iter().position(|&x| x == (i, j));
    let d = pairs.len();
    let names = pairs.iter().map(|&(i, j)| incidence_basis_name(i, j)).collect();
    let mut table = vec![vec![vec![field.zero(); d]; d]; d];
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for (y, &(k, l)) in pairs.iter().enumerate() {
            if j == k {
                let z = index(i, l).expect("transitivity");
                table[x][y][z] = field.one();
            }
        }
    }
    let mut unit = vec![field.zero(); d];
    for i in 0..p.size {
        unit[index(i, i).expect("reflexivity")] = field.one();
    }
    Algebra::new(field, names, table, unit)
}

/// The anti-automorphism `e_ij -> e_{φ(j) φ(i)}` of `F(P)` for order-reversing `φ`.
pub fn incidence_anti_automorphism(a: Arc<Algebra>, p: &Poset, phi: &[usize]) -> Result<AlgebraMap> {
    let pairs = p.comparable_pairs();
    if pairs.len() != a.dim() || phi.len() != p.size {
        return Err(Error::DimensionMismatch("algebra is not the incidence algebra of P".into()));
    }
    let f = a.field();
    let mut m = Matrix::zeros(f, a.dim(), a.dim());
    for (x, &(i, j)) in pairs.iter().enumerate() {
        let y = pairs
            .iter()
            .position(|&pr| pr == (phi[j], phi[i]))
            .ok_or_else(|| Error::InvalidInput("φ does not reverse the order".into()))?;
        m.set(y, x, f.one());
    }
    AlgebraMap::automorphism(a, m, Variance::AntiHomomorphism)
}

/// Classes of primitive idempotents ordered by `[e] <= [f]` iff `eAf != 0`.
#[derive(Clone, Debug)]
pub struct AlgebraPoset {
    pub poset: Poset,
    pub representatives: Vec<Vec<Scalar>>,
    pub classes: Vec<Vec<usize>>,
}

pub fn poset_of_algebra(a: &Arc<Algebra>, search: &SearchConfig) -> Result<AlgebraPoset> {
    let idempotents = primitive_idempotents(a, search)?;
    let classes = idempotent_classes(a, &idempotents, search)?;
    let reps: Vec<Vec<Scalar>> = classes.iter().map(|c| idempotents[c[0]].clone()).collect();
    let leq = reps
        .iter()
        .map(|e| {
            reps.iter()
                .map(|f| (&a.left_mul(e) * &a.right_mul(f)).rank() > 0)
                .collect()
        })
        .collect();
    Ok(AlgebraPoset {
        poset: Poset::new(leq)?,
        representatives: reps,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{center, jacobson_radical, matrix_algebra};

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn chain_reversal() {
        let c = Poset::chain(3);
        let maps = order_reversing_maps(&c, None);
        assert_eq!(maps, vec![vec![2, 1, 0]]);
        assert_eq!(order_reversing_maps(&c, Some(2)), maps);
    }

    #[test]
    fn antichain_maps() {
        let a = Poset::antichain(2);
        assert_eq!(order_reversing_maps(&a, None).len(), 2);
        assert_eq!(order_reversing_maps(&a, Some(2)).len(), 2);
    }

    #[test]
    fn scharlau_gate_passes() {
        let gate = scharlau_gate();
        assert!(gate.connected);
        assert!(gate.rotation_reverses_order);
        assert!(!gate.order_four.is_empty());
        assert!(gate.involutions.is_empty());
        assert!(gate.passed());
        assert!(order_reversing_maps(&scharlau_poset(), Some(2)).is_empty());
    }

    #[test]
    fn incidence_examples() {
        let a = incidence_algebra(q(), &Poset::antichain(3)).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.is_commutative());
        let ut = incidence_algebra(q(), &Poset::chain(2)).unwrap();
        let expect = crate::algebra::upper_triangular(q(), 2).unwrap();
        assert_eq!(ut.constants(), expect.constants());
        let p = scharlau_poset();
        let f = incidence_algebra(q(), &p).unwrap();
        assert_eq!(f.dim(), p.comparable_pairs().len());
        assert_eq!(jacobson_radical(&f).unwrap().len(), f.dim() - p.size());
        assert_eq!(center(&f).dim(), 1);
    }

    #[test]
    fn poset_of_algebra_examples() {
        let s = SearchConfig::default();
        let m3 = Arc::new(matrix_algebra(q(), 3).unwrap());
        assert_eq!(poset_of_algebra(&m3, &s).unwrap().poset.size(), 1);
        let ut = Arc::new(incidence_algebra(q(), &Poset::chain(2)).unwrap());
        let p = poset_of_algebra(&ut, &s).unwrap().poset;
        assert!(poset_isomorphism(&p, &Poset::chain(2)).is_some());
    }

    #[test]
    fn rotation_gives_anti_automorphism() {
        let p = scharlau_poset();
        let a = Arc::new(incidence_algebra(q(), &p).unwrap());
        let g = incidence_anti_automorphism(a, &p, &scharlau_rotation()).unwrap();
        assert!(!g.is_involution());
    }

    #[test]
    fn non_poset_rejected() {
        assert!(matches!(
            Poset::from_cover(2, &[(0, 1), (1, 0)]),
            Err(Error::NotAPoset(_))
        ));
    }
}
