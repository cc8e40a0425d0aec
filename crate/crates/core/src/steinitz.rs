//! Steinitz classes of projective modules over a Dedekind domain with a given
//! finite class group, the anti-automorphism test for `End(P)`, rank formulas
//! and the dyadic rank map.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::poly::exact_sqrt;

/// The finite abelian group `⊕ Z/d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassGroup {
    invariant_factors: Vec<u64>,
}

impl ClassGroup {
    pub fn new(invariant_factors: Vec<u64>) -> Result<ClassGroup> {
        if invariant_factors.contains(&0) {
            return Err(Error::InvalidInput("invariant factors must be positive".into()));
        }
        Ok(ClassGroup { invariant_factors })
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u128 {
        self.invariant_factors.iter().map(|&d| d as u128).product()
    }

    pub fn zero(&self) -> ClassElement {
        ClassElement {
            group: self.clone(),
            coords: vec![0; self.invariant_factors.len()],
        }
    }

    pub fn element(&self, coords: &[i64]) -> Result<ClassElement> {
        if coords.len() != self.invariant_factors.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a group with {} factors",
                coords.len(),
                self.invariant_factors.len()
            )));
        }
        let coords = coords
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
            .collect();
        Ok(ClassElement {
            group: self.clone(),
            coords,
        })
    }

    /// Every element, in lexicographic order of coordinates.
    pub fn elements(&self) -> impl Iterator<Item = ClassElement> + '_ {
        let total = self.order();
        (0..total).map(move |mut idx| {
            let coords = self
                .invariant_factors
                .iter()
                .map(|&d| {
                    let c = (idx % d as u128) as u64;
                    idx /= d as u128;
                    c
                })
                .collect();
            ClassElement {
                group: self.clone(),
                coords,
            }
        })
    }
}

/// An element of a class group, coordinates reduced mod the invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassElement {
    group: ClassGroup,
    coords: Vec<u64>,
}

impl ClassElement {
    pub fn group(&self) -> &ClassGroup {
        &self.group
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_group(&self, other: &ClassElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassElement) -> Result<ClassElement> {
        self.check_group(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(&self.group.invariant_factors)
            .map(|((&a, &b), &d)| ((a as u128 + b as u128) % d as u128) as u64)
            .collect();
        Ok(ClassElement {
            group: self.group.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> ClassElement {
        let coords = self
            .coords
            .iter()
            .zip(&self.group.invariant_factors)
            .map(|(&a, &d)| (d - a) % d)
            .collect();
        ClassElement {
            group: self.group.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &ClassElement) -> Result<ClassElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> ClassElement {
        let coords = self
            .coords
            .iter()
            .zip(&self.group.invariant_factors)
            .map(|(&a, &d)| {
                let k = k.rem_euclid(d as i64) as u128;
                ((a as u128 * k) % d as u128) as u64
            })
            .collect();
        ClassElement {
            group: self.group.clone(),
            coords,
        }
    }

    pub fn order(&self) -> u64 {
        self.coords
            .iter()
            .zip(&self.group.invariant_factors)
            .map(|(&c, &d)| d / c.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Whether `self ∈ k · G`.
    pub fn is_multiple_of(&self, k: u64) -> bool {
        self.coords
            .iter()
            .zip(&self.group.invariant_factors)
            .all(|(&c, &d)| c % k.gcd(&d) == 0)
    }
}

/// A projective of rank `rank` with Steinitz class `class`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveSymbol {
    rank: u64,
    class: ClassElement,
}

impl ProjectiveSymbol {
    pub fn new(rank: u64, class: ClassElement) -> Result<ProjectiveSymbol> {
        if rank == 0 && !class.is_zero() {
            return Err(Error::InvalidInput("the zero module has trivial class".into()));
        }
        Ok(ProjectiveSymbol { rank, class })
    }

    pub fn free(group: &ClassGroup, rank: u64) -> ProjectiveSymbol {
        ProjectiveSymbol {
            rank,
            class: group.zero(),
        }
    }

    /// A rank-one projective (an invertible ideal) of the given class.
    pub fn line(class: ClassElement) -> ProjectiveSymbol {
        ProjectiveSymbol { rank: 1, class }
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn class(&self) -> &ClassElement {
        &self.class
    }

    pub fn direct_sum(&self, other: &ProjectiveSymbol) -> Result<ProjectiveSymbol> {
        ProjectiveSymbol::new(self.rank + other.rank, self.class.add(&other.class)?)
    }

    /// `(r1, c1) ⊗ (r2, c2) = (r1 r2, r2 c1 + r1 c2)`.
    pub fn tensor(&self, other: &ProjectiveSymbol) -> Result<ProjectiveSymbol> {
        let class = self
            .class
            .scale(other.rank as i64)
            .add(&other.class.scale(self.rank as i64))?;
        ProjectiveSymbol::new(self.rank * other.rank, class)
    }

    pub fn dual(&self) -> ProjectiveSymbol {
        ProjectiveSymbol {
            rank: self.rank,
            class: self.class.neg(),
        }
    }

    pub fn hom(&self, other: &ProjectiveSymbol) -> Result<ProjectiveSymbol> {
        self.dual().tensor(other)
    }
}

impl std::fmt::Display for ClassElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(&self.group.invariant_factors)
            .map(|(c, d)| format!("{c} mod {d}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn is_isomorphic_symbol(m: &ProjectiveSymbol, n: &ProjectiveSymbol) -> Result<bool> {
    m.class.check_group(&n.class)?;
    Ok(m.rank == n.rank && m.class == n.class)
}

/// Outcome of asking for `[I]` with `I ⊗ P ≅ P^[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntiAutomorphismTest {
    Exists { witness: ClassElement },
    /// `rank · x = delta_i` has no solution mod `d_i` because `gcd` does not divide `delta_i`.
    Impossible {
        factor: usize,
        modulus: u64,
        gcd: u64,
        delta: u64,
    },
    RankMismatch { rank: u64, dual_rank: u64 },
}

impl AntiAutomorphismTest {
    pub fn exists(&self) -> bool {
        matches!(self, AntiAutomorphismTest::Exists { .. })
    }
}

/// Solves `rank(P) · x = class(P^[1]) - class(P)` factor by factor.
pub fn anti_automorphism_test(
    p: &ProjectiveSymbol,
    p_dual: &ProjectiveSymbol,
) -> Result<AntiAutomorphismTest> {
    p.class.check_group(&p_dual.class)?;
    if p.rank == 0 {
        return Err(Error::ZeroRank);
    }
    if p.rank != p_dual.rank {
        return Ok(AntiAutomorphismTest::RankMismatch {
            rank: p.rank,
            dual_rank: p_dual.rank,
        });
    }
    let delta = p_dual.class.sub(&p.class)?;
    let group = &p.class.group;
    let mut witness = Vec::with_capacity(delta.coords.len());
    for (i, (&b, &d)) in delta.coords.iter().zip(&group.invariant_factors).enumerate() {
        let r = p.rank % d;
        let g = r.gcd(&d);
        if b % g != 0 {
            return Ok(AntiAutomorphismTest::Impossible {
                factor: i,
                modulus: d,
                gcd: g,
                delta: b,
            });
        }
        // (r/g) x = b/g mod d/g
        let m = d / g;
        let x = if m == 1 {
            0
        } else {
            let inv = mod_inverse((r / g) % m, m).expect("coprime after dividing by the gcd");
            ((b / g) as u128 * inv as u128 % m as u128) as u64
        };
        witness.push(x as i64);
    }
    Ok(AntiAutomorphismTest::Exists {
        witness: group.element(&witness)?,
    })
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

/// The construction with `P = (C^3 ⊕ L) ⊗ (C^3 ⊕ J)` and `P^[1] = (C^3 ⊕ L^{-1}) ⊗ (C^3 ⊕ J)`.
#[derive(Clone, Debug)]
pub struct EndomorphismExample {
    pub p: ProjectiveSymbol,
    pub p_dual: ProjectiveSymbol,
    pub test: AntiAutomorphismTest,
    pub order_of_l: u64,
    /// Whether `8 [L]` lies in `16 Pic`.
    pub eight_l_in_sixteen_pic: bool,
    /// Whether `16 [L] = 0`.
    pub sixteen_l_zero: bool,
}

pub fn example_12_check(
    pic: &ClassGroup,
    l: &ClassElement,
    j: &ClassElement,
) -> Result<EndomorphismExample> {
    let free3 = ProjectiveSymbol::free(pic, 3);
    let l_sym = ProjectiveSymbol::line(l.clone());
    let j_sym = ProjectiveSymbol::line(j.clone());
    let second = free3.direct_sum(&j_sym)?;
    let p = free3.direct_sum(&l_sym)?.tensor(&second)?;
    let p_dual = free3.direct_sum(&l_sym.dual())?.tensor(&second)?;
    let test = anti_automorphism_test(&p, &p_dual)?;
    Ok(EndomorphismExample {
        order_of_l: l.order(),
        eight_l_in_sixteen_pic: l.scale(8).is_multiple_of(16),
        sixteen_l_zero: l.scale(16).is_zero(),
        p,
        p_dual,
        test,
    })
}

/// `rank(Hom_A(M, N)) = rank(M) rank(N) / rank(A)`.
pub fn rank_hom(rm: u64, rn: u64, ra: u64) -> Result<BigRational> {
    if rm == 0 || rn == 0 || ra == 0 {
        return Err(Error::ZeroRank);
    }
    Ok(BigRational::new(
        BigInt::from(rm) * BigInt::from(rn),
        BigInt::from(ra),
    ))
}

fn sqrt_of_product(ra: u64, ras: u64) -> Result<u64> {
    if ra == 0 || ras == 0 {
        return Err(Error::ZeroRank);
    }
    let product = ra
        .checked_mul(ras)
        .ok_or_else(|| Error::InvalidInput("rank product overflows".into()))?;
    exact_sqrt(product).ok_or_else(|| {
        Error::NotPerfectSquare(format!("{ra} * {ras} = {product} is not a square"))
    })
}

/// Ranks of `K_0` and `K_1` for a double progenerator between `A` and `A^σ`.
pub fn rank_double_module(ra: u64, ras: u64) -> Result<(u64, u64)> {
    let s = sqrt_of_product(ra, ras)?;
    Ok((s, s))
}

/// `(1 + sqrt(rank A^σ / rank A))^2 rank A`, which is `4 rank A` for equal ranks.
pub fn saltman_rank_bound(ra: u64, ras: u64) -> Result<u64> {
    let s = sqrt_of_product(ra, ras)?;
    Ok(ra + ras + 2 * s)
}

/// `φ_1(x) = x / 2` on non-negative dyadic rationals.
pub fn dyadic_dual_rank(x: &BigRational) -> Result<BigRational> {
    if x.is_negative() {
        return Err(Error::InvalidInput("rank must be non-negative".into()));
    }
    let den = x.denom();
    let mut d = den.clone();
    let two = BigInt::from(2);
    while d.is_even() {
        d /= &two;
    }
    if !d.is_one() {
        return Err(Error::InvalidInput(format!("{x} is not dyadic")));
    }
    Ok(x / BigRational::from_integer(two))
}

pub fn is_dyadic(x: &BigRational) -> bool {
    let mut d = x.denom().clone();
    while d.is_even() && !d.is_zero() {
        d /= 2;
    }
    d.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z48() -> ClassGroup {
        ClassGroup::new(vec![48]).unwrap()
    }

    #[test]
    fn tensor_of_example_summands() {
        let g = z48();
        let l = g.element(&[3]).unwrap();
        let j = g.element(&[5]).unwrap();
        let a = ProjectiveSymbol::free(&g, 3).direct_sum(&ProjectiveSymbol::line(l.clone())).unwrap();
        let b = ProjectiveSymbol::free(&g, 3).direct_sum(&ProjectiveSymbol::line(j.clone())).unwrap();
        let p = a.tensor(&b).unwrap();
        assert_eq!(p.rank(), 16);
        assert_eq!(p.class(), &l.scale(4).add(&j.scale(4)).unwrap());
        assert_eq!(p.dual().dual(), p);
        assert_eq!(p.tensor(&ProjectiveSymbol::free(&g, 1)).unwrap(), p);
    }

    #[test]
    fn symbol_isomorphism() {
        let g = z48();
        let l = g.element(&[3]).unwrap();
        let two_l = ProjectiveSymbol::new(2, l.clone()).unwrap();
        assert!(is_isomorphic_symbol(&two_l, &two_l).unwrap());
        assert!(!is_isomorphic_symbol(&two_l, &ProjectiveSymbol::free(&g, 2)).unwrap());
        let x = g.element(&[-12 * 3 + 4 * 5]).unwrap();
        let y = g.element(&[12 * 3 + 4 * 5]).unwrap();
        assert_ne!(
            ProjectiveSymbol::new(16, x).unwrap(),
            ProjectiveSymbol::new(16, y).unwrap()
        );
    }

    #[test]
    fn anti_automorphism_test_examples() {
        let g = z48();
        let p = ProjectiveSymbol::new(16, g.zero()).unwrap();
        let test = anti_automorphism_test(&p, &ProjectiveSymbol::new(16, g.element(&[-24]).unwrap()).unwrap())
            .unwrap();
        assert_eq!(
            test,
            AntiAutomorphismTest::Impossible {
                factor: 0,
                modulus: 48,
                gcd: 16,
                delta: 24
            }
        );
        let test = anti_automorphism_test(&p, &p).unwrap();
        assert_eq!(test, AntiAutomorphismTest::Exists { witness: g.zero() });
        let test = anti_automorphism_test(&p, &ProjectiveSymbol::new(16, g.element(&[32]).unwrap()).unwrap())
            .unwrap();
        let AntiAutomorphismTest::Exists { witness } = test else {
            panic!("expected a witness");
        };
        assert_eq!(witness.scale(16), g.element(&[32]).unwrap());
    }

    #[test]
    fn worked_class_group_example() {
        let g = z48();
        let l = g.element(&[3]).unwrap();
        for j0 in [0, 1, 7, 47] {
            let j = g.element(&[j0]).unwrap();
            let ex = example_12_check(&g, &l, &j).unwrap();
            assert!(!ex.test.exists());
            assert_eq!(ex.order_of_l, 16);
            assert!(ex.sixteen_l_zero);
            assert!(!ex.eight_l_in_sixteen_pic);
            assert_eq!(ex.p_dual.class(), &l.scale(-4).add(&j.scale(4)).unwrap());
        }
    }

    #[test]
    fn rank_formulas() {
        assert_eq!(rank_hom(4, 4, 4).unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(rank_double_module(4, 4).unwrap(), (4, 4));
        assert_eq!(saltman_rank_bound(4, 4).unwrap(), 16);
        assert!(matches!(rank_double_module(2, 4), Err(Error::NotPerfectSquare(_))));
        assert_eq!(saltman_rank_bound(4, 16).unwrap(), 36);
    }

    #[test]
    fn dyadic_examples() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(dyadic_dual_rank(&two).unwrap(), BigRational::one());
        assert!(dyadic_dual_rank(&BigRational::zero()).unwrap().is_zero());
        let third = BigRational::new(1.into(), 3.into());
        assert!(dyadic_dual_rank(&third).is_err());
    }
}
