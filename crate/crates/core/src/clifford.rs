//! Exterior algebra on an orthonormal weighted basis, with the Clifford
//! action, Hodge star and the intertwiner `beta`.
//!
//! Basis blades `e_S` are bitmasks over the generators with the wedge taken in
//! increasing index order. Coefficients are exact rationals. Weights ride along
//! as labels on the generators and only enter the graded character bookkeeping.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::charring::CharacterPoly;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::WeylElement;

/// Largest number of generators accepted for blade bitmasks.
pub const MAX_GENERATORS: usize = 32;

/// Largest dimension for which all `2^l` subsets are enumerated.
pub const SUBSET_GATE: usize = 24;

/// A complex vector space with an orthonormal basis of weight vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSpace {
    pub basis_weights: Vec<Weight>,
}

impl WeightedSpace {
    pub fn new(basis_weights: Vec<Weight>) -> Self {
        WeightedSpace { basis_weights }
    }

    pub fn dim(&self) -> usize {
        self.basis_weights.len()
    }

    /// `n_2`: the root spaces of `Xi_w`.
    pub fn inversion_space(system: &RootSystem, w: &WeylElement) -> Self {
        Self::new(w.inversion_set(system))
    }

    /// The image under the Cartan involution: every weight negated.
    pub fn conjugate(&self) -> Self {
        Self::new(self.basis_weights.iter().map(|a| -a).collect())
    }

    /// Weight of the blade `e_S`: sum of the weights in `S`.
    pub fn blade_weight(&self, rank: usize, mask: u32) -> Weight {
        let mut acc = Weight::zero(rank);
        for (j, a) in self.basis_weights.iter().enumerate() {
            if mask >> j & 1 == 1 {
                acc += a;
            }
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Convention {
    /// `c(x) = lambda_x + lambda_x^*`
    Plus,
    /// `c(x) = lambda_x - lambda_x^*`
    Minus,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Plus, Convention::Minus];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Plus => "plus",
            Convention::Minus => "minus",
        }
    }
}

fn parity_sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn sign_rational(s: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(s))
}

/// Sign of `e_S ^ e_T` relative to `e_{S ∪ T}`: one transposition for each
/// pair `i in S`, `j in T` with `i > j`.
fn reorder_sign(s: u32, t: u32) -> i64 {
    let mut count = 0;
    let mut rest = t;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        count += (s >> j >> 1).count_ones();
    }
    parity_sign(count)
}

/// An element of the exterior algebra on `dim` generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<u32, BigRational>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, q: BigRational) -> Self {
        Self::blade(dim, 0, q)
    }

    pub fn blade(dim: usize, mask: u32, q: BigRational) -> Self {
        let mut m = Self::zero(dim);
        debug_assert!(dim == 32 || mask >> dim == 0);
        m.add_term(mask, q);
        m
    }

    /// The generator `e_j`, 0-based.
    pub fn generator(dim: usize, j: usize) -> Self {
        Self::blade(dim, 1 << j, BigRational::one())
    }

    pub fn from_vector(x: &[BigRational]) -> Self {
        let mut m = Self::zero(x.len());
        for (j, q) in x.iter().enumerate() {
            m.add_term(1 << j, q.clone());
        }
        m
    }

    /// All `2^dim` basis blades with coefficient one, ordered by degree then mask.
    pub fn basis(dim: usize) -> Vec<Multivector> {
        let mut masks: Vec<u32> = (0..(1u64 << dim)).map(|m| m as u32).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks
            .into_iter()
            .map(|m| Self::blade(dim, m, BigRational::one()))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mask: u32) -> BigRational {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> + '_ {
        self.terms.iter().map(|(&m, q)| (m, q))
    }

    /// Whether every term has degree `k`.
    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.count_ones() == k)
    }

    pub fn grade(&self, k: u32) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == k)
                .map(|(&m, q)| (m, q.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, mask: u32, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (&m, q) in &other.terms {
            out.add_term(m, q.clone());
        }
        out
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (&m, q) in &self.terms {
            out.add_term(m, q * k);
        }
        out
    }

    fn map_blades(&self, f: impl Fn(u32) -> Option<(u32, i64)>) -> Multivector {
        let mut out = Self::zero(self.dim);
        for (&m, q) in &self.terms {
            if let Some((target, s)) = f(m) {
                out.add_term(target, q * sign_rational(s));
            }
        }
        out
    }

    /// Full exterior product.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check_dim(other.dim)?;
        let mut out = Self::zero(self.dim);
        for (&a, qa) in &self.terms {
            for (&b, qb) in &other.terms {
                if a & b == 0 {
                    out.add_term(a | b, qa * qb * sign_rational(reorder_sign(a, b)));
                }
            }
        }
        Ok(out)
    }

    /// The induced inner product, with the blades `e_S` orthonormal.
    pub fn inner(&self, other: &Multivector) -> Result<BigRational> {
        self.check_dim(other.dim)?;
        Ok(self
            .terms
            .iter()
            .filter_map(|(m, q)| other.terms.get(m).map(|r| q * r))
            .sum())
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            })
        }
    }

    /// `e_j ^ omega`.
    pub fn wedge_generator(&self, j: usize) -> Multivector {
        let bit = 1u32 << j;
        self.map_blades(|m| {
            (m & bit == 0).then(|| (m | bit, parity_sign((m & (bit - 1)).count_ones())))
        })
    }

    /// Contraction by `e_j`, the adjoint of `wedge_generator`.
    pub fn contract_generator(&self, j: usize) -> Multivector {
        let bit = 1u32 << j;
        self.map_blades(|m| {
            (m & bit != 0).then(|| (m & !bit, parity_sign((m & (bit - 1)).count_ones())))
        })
    }

    /// `lambda_x omega = x ^ omega`.
    pub fn wedge_vector(&self, x: &[BigRational]) -> Result<Multivector> {
        self.check_dim(x.len())?;
        let mut out = Self::zero(self.dim);
        self.accumulate_vector(x, 1, true, &mut out);
        Ok(out)
    }

    /// `lambda_x^* omega`.
    pub fn contract_vector(&self, x: &[BigRational]) -> Result<Multivector> {
        self.check_dim(x.len())?;
        let mut out = Self::zero(self.dim);
        self.accumulate_vector(x, 1, false, &mut out);
        Ok(out)
    }

    /// Adds `sign * x ^ self` (or the contraction) into `out`, term by term.
    fn accumulate_vector(&self, x: &[BigRational], sign: i64, wedge: bool, out: &mut Multivector) {
        for (&m, q) in &self.terms {
            for (j, xj) in x.iter().enumerate() {
                let bit = 1u32 << j;
                if xj.is_zero() || (m & bit == 0) != wedge {
                    continue;
                }
                let s = sign * parity_sign((m & (bit - 1)).count_ones());
                let c = q * xj;
                out.add_term(m ^ bit, if s < 0 { -c } else { c });
            }
        }
    }

    /// Clifford action of `x` under the chosen sign convention.
    pub fn clifford(&self, x: &[BigRational], convention: Convention) -> Result<Multivector> {
        self.check_dim(x.len())?;
        let mut out = Self::zero(self.dim);
        self.accumulate_vector(x, 1, true, &mut out);
        let sign = match convention {
            Convention::Plus => 1,
            Convention::Minus => -1,
        };
        self.accumulate_vector(x, sign, false, &mut out);
        Ok(out)
    }

    /// `phi ^ *omega = <phi, omega> e_1 ^ ... ^ e_l`: on blades,
    /// `*e_S = sign(S, S^c) e_{S^c}`.
    pub fn hodge_star(&self) -> Multivector {
        let full = full_mask(self.dim);
        self.map_blades(|m| Some((full ^ m, reorder_sign(m, full ^ m))))
    }

    /// `omega -> (-1)^{k(k-1)/2} *omega` on degree `k`.
    pub fn beta(&self) -> Multivector {
        let full = full_mask(self.dim);
        self.map_blades(|m| {
            let k = m.count_ones();
            Some((
                full ^ m,
                reorder_sign(m, full ^ m) * parity_sign(k * k.saturating_sub(1) / 2),
            ))
        })
    }

    /// Inverse of [`Multivector::beta`]. On degree `k` it is
    /// `(-1)^{(l-k)(l-k-1)/2 + k(l-k)} *`.
    pub fn beta_inverse(&self) -> Multivector {
        let full = full_mask(self.dim);
        let l = self.dim as u32;
        self.map_blades(|m| {
            let k = m.count_ones();
            let r = l - k;
            let exp = r * r.saturating_sub(1) / 2 + k * r;
            Some((full ^ m, reorder_sign(m, full ^ m) * parity_sign(exp)))
        })
    }
}

fn full_mask(dim: usize) -> u32 {
    if dim == 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({q})e")?;
            if *m == 0 {
                f.write_str("0")?;
            }
            for j in 0..self.dim {
                if m >> j & 1 == 1 {
                    write!(f, "{}", j + 1)?;
                }
            }
        }
        Ok(())
    }
}

/// Outcome of conjugating `c(x)` by `beta` under one convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConventionOutcome {
    pub convention: Convention,
    /// `beta c(x) beta^{-1} = -c(x)` held for every sample.
    pub negates: bool,
    /// `beta c(x) beta^{-1} = +c(x)` held for every sample.
    pub commutes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntertwinerReport {
    pub dim: usize,
    /// Random vectors tried in addition to the basis vectors.
    pub trials: usize,
    pub seed: u64,
    pub outcomes: [ConventionOutcome; 2],
}

impl IntertwinerReport {
    /// Conventions under which `beta c beta^{-1} = -c`.
    pub fn negating_conventions(&self) -> Vec<Convention> {
        self.outcomes
            .iter()
            .filter(|o| o.negates)
            .map(|o| o.convention)
            .collect()
    }
}

/// A random rational with numerator in `[-20, 20]` and denominator in `[1, 12]`.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    let n: i64 = rng.gen_range(-20..=20);
    let d: i64 = rng.gen_range(1..=12);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_vector(rng: &mut impl Rng, dim: usize) -> Vec<BigRational> {
    (0..dim).map(|_| random_rational(rng)).collect()
}

/// Measure `beta c(x) beta^{-1}` against `-c(x)` and `+c(x)` under both
/// conventions, on every basis blade, for each basis vector and `trials`
/// seeded random rational vectors.
pub fn verify_intertwiner(dim: usize, trials: usize, seed: u64) -> Result<IntertwinerReport> {
    if dim > SUBSET_GATE {
        return Err(Error::DimensionGate {
            dim,
            gate: SUBSET_GATE,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<Vec<BigRational>> = (0..dim)
        .map(|j| {
            (0..dim)
                .map(|i| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    samples.extend((0..trials).map(|_| random_vector(&mut rng, dim)));
    let basis = Multivector::basis(dim);
    let outcomes = Convention::ALL.map(|convention| {
        let mut negates = true;
        let mut commutes = true;
        for x in &samples {
            for omega in &basis {
                let lhs = omega
                    .beta_inverse()
                    .clifford(x, convention)
                    .expect("dimension matches")
                    .beta();
                let c = omega.clifford(x, convention).expect("dimension matches");
                negates &= lhs.add(&c).is_zero();
                commutes &= lhs.sub(&c).is_zero();
            }
        }
        ConventionOutcome {
            convention,
            negates,
            commutes,
        }
    });
    Ok(IntertwinerReport {
        dim,
        trials,
        seed,
        outcomes,
    })
}

/// `sum_S (-1)^{|S|} e^{twist + sum_{j in S} alpha_j}`, by subset enumeration.
pub fn super_character(space: &WeightedSpace, twist: &Weight) -> Result<CharacterPoly> {
    let l = space.dim();
    if l > SUBSET_GATE {
        return Err(Error::DimensionGate {
            dim: l,
            gate: SUBSET_GATE,
        });
    }
    for a in &space.basis_weights {
        a.check_rank(twist.rank())?;
    }
    let mut out = CharacterPoly::zero();
    for mask in 0..(1u32 << l) {
        let w = &space.blade_weight(twist.rank(), mask) + twist;
        out.add_term(w, parity_sign(mask.count_ones()))?;
    }
    Ok(out)
}

/// `e^{twist} prod_j (1 - e^{alpha_j})`, by multiplying out the factors.
pub fn super_character_product(space: &WeightedSpace, twist: &Weight) -> Result<CharacterPoly> {
    let rank = twist.rank();
    let mut acc = CharacterPoly::monomial(twist.clone(), 1);
    for a in &space.basis_weights {
        a.check_rank(rank)?;
        let factor = CharacterPoly::from_terms([(Weight::zero(rank), 1), (a.clone(), -1)]);
        acc = acc.try_mul(&factor)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Certificate that `Lambda n_2 ≅ Lambda n_2' ⊗ C_{sigma_w}` as graded
/// weight modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCertificate {
    /// `e_S` and `e'_{Xi \ S} ⊗ 1` carry the same weight for every `S`.
    pub bijection_respects_weights: bool,
    /// `super(n_2, 0) = (-1)^{l(w)} super(n_2', sigma_w)`.
    pub super_characters_match: bool,
    pub parity: Parity,
}

impl IsoCertificate {
    pub fn holds(&self) -> bool {
        self.bijection_respects_weights && self.super_characters_match
    }
}

pub fn clifford_module_iso_check(system: &RootSystem, w: &WeylElement) -> Result<IsoCertificate> {
    let n2 = WeightedSpace::inversion_space(system, w);
    let n2c = n2.conjugate();
    let l = n2.dim();
    if l > SUBSET_GATE {
        return Err(Error::DimensionGate {
            dim: l,
            gate: SUBSET_GATE,
        });
    }
    let rank = system.rank();
    let sigma = w.sigma();
    let full = full_mask(l);
    let bijection_respects_weights = (0..(1u32 << l)).all(|s| {
        let lhs = n2.blade_weight(rank, s);
        let rhs = &n2c.blade_weight(rank, full ^ s) + &sigma;
        lhs == rhs
    });
    let lhs = super_character(&n2, &Weight::zero(rank))?;
    let rhs = super_character(&n2c, &sigma)?.scaled(w.sign())?;
    Ok(IsoCertificate {
        bijection_respects_weights,
        super_characters_match: lhs == rhs,
        parity: Parity::of(l),
    })
}

/// The identities exercised by [`hodge_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HodgeIdentity {
    /// `** = (-1)^{k(l-k)}` on degree `k`.
    StarSquare,
    /// `lambda_x^* = (-1)^{l+lk} * lambda_x *` on degree `k`.
    AdjointViaStar,
    /// `c(x)c(y) + c(y)c(x) = 2 s <x, y>`, with `s = +1` (plus) or `-1` (minus).
    Anticommutation,
}

impl HodgeIdentity {
    pub fn as_str(self) -> &'static str {
        match self {
            HodgeIdentity::StarSquare => "star_square",
            HodgeIdentity::AdjointViaStar => "adjoint_via_star",
            HodgeIdentity::Anticommutation => "anticommutation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HodgeOutcome {
    pub dim: usize,
    pub identity: HodgeIdentity,
    /// Individual equalities tested.
    pub samples: usize,
    pub failures: usize,
}

impl HodgeOutcome {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

fn tally(dim: usize, identity: HodgeIdentity, results: impl Iterator<Item = bool>) -> HodgeOutcome {
    let (mut samples, mut failures) = (0, 0);
    for ok in results {
        samples += 1;
        failures += usize::from(!ok);
    }
    HodgeOutcome {
        dim,
        identity,
        samples,
        failures,
    }
}

/// Every Hodge-star and Clifford identity on every basis blade, for the basis
/// vectors and `trials` seeded random rational vectors (and pairs of them).
pub fn hodge_suite(dim: usize, trials: usize, seed: u64) -> Result<Vec<HodgeOutcome>> {
    if dim > SUBSET_GATE {
        return Err(Error::DimensionGate {
            dim,
            gate: SUBSET_GATE,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = |j: usize| -> Vec<BigRational> {
        (0..dim)
            .map(|i| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect()
    };
    let mut vectors: Vec<Vec<BigRational>> = (0..dim).map(unit).collect();
    let mut pairs: Vec<(Vec<BigRational>, Vec<BigRational>)> = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            pairs.push((unit(i), unit(j)));
        }
    }
    for _ in 0..trials {
        let x = random_vector(&mut rng, dim);
        let y = random_vector(&mut rng, dim);
        pairs.push((x.clone(), y));
        vectors.push(x);
    }
    let basis = Multivector::basis(dim);
    let l = dim as u32;
    let degree = |m: &Multivector| m.terms().next().map_or(0, |(mask, _)| mask.count_ones());

    let star_square = tally(
        dim,
        HodgeIdentity::StarSquare,
        basis.iter().map(|omega| {
            let k = degree(omega);
            omega.hodge_star().hodge_star() == omega.scale(&sign_rational(parity_sign(k * (l - k))))
        }),
    );
    let adjoint = tally(
        dim,
        HodgeIdentity::AdjointViaStar,
        vectors.iter().flat_map(|x| {
            basis.iter().map(move |omega| {
                let k = degree(omega);
                let via = omega
                    .hodge_star()
                    .wedge_vector(x)
                    .expect("dimension matches")
                    .hodge_star();
                via.scale(&sign_rational(parity_sign(l + l * k)))
                    == omega.contract_vector(x).expect("dimension matches")
            })
        }),
    );
    let anticommutation = tally(
        dim,
        HodgeIdentity::Anticommutation,
        pairs.iter().flat_map(|(x, y)| {
            let xy: BigRational = x.iter().zip(y).map(|(a, b)| a * b).sum();
            basis.iter().flat_map(move |omega| {
                let xy = xy.clone();
                Convention::ALL.into_iter().map(move |conv| {
                    let c = |v: &[BigRational], m: &Multivector| {
                        m.clifford(v, conv).expect("dimension matches")
                    };
                    let lhs = c(x, &c(y, omega)).add(&c(y, &c(x, omega)));
                    let s = match conv {
                        Convention::Plus => 2,
                        Convention::Minus => -2,
                    };
                    lhs == omega.scale(&(&xy * sign_rational(s)))
                })
            })
        }),
    );
    Ok(alloc::vec![star_square, adjoint, anticommutation])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;
    use crate::weyl::WeylGroup;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn one(dim: usize) -> Multivector {
        Multivector::scalar(dim, q(1))
    }

    #[test]
    fn wedge_and_contract_in_dim_one() {
        let e1 = Multivector::generator(1, 0);
        assert_eq!(one(1).wedge_generator(0), e1);
        assert!(e1.wedge_generator(0).is_zero());
        assert_eq!(e1.contract_generator(0), one(1));
    }

    #[test]
    fn wedge_reorders_with_sign() {
        let e1 = Multivector::generator(2, 0);
        let e2 = Multivector::generator(2, 1);
        let e12 = Multivector::blade(2, 0b11, q(1));
        assert_eq!(e2.wedge_generator(0), e12);
        assert_eq!(e1.wedge_generator(1), e12.scale(&q(-1)));
        assert_eq!(e1.wedge(&e2).unwrap(), e12);
    }

    #[test]
    fn dimension_mismatch() {
        let e1 = Multivector::generator(2, 0);
        assert_eq!(
            e1.wedge_vector(&[q(1)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn clifford_plus_in_dim_one_swaps() {
        let x = [q(1)];
        assert_eq!(
            one(1).clifford(&x, Convention::Plus).unwrap(),
            Multivector::generator(1, 0)
        );
        assert_eq!(
            Multivector::generator(1, 0)
                .clifford(&x, Convention::Plus)
                .unwrap(),
            one(1)
        );
        let zero = [q(0), q(0), q(0)];
        for b in Multivector::basis(3) {
            assert!(b.clifford(&zero, Convention::Plus).unwrap().is_zero());
        }
    }

    #[test]
    fn hodge_examples() {
        let e1 = Multivector::generator(1, 0);
        assert_eq!(one(1).hodge_star(), e1);
        assert_eq!(e1.hodge_star(), one(1));
        let f1 = Multivector::generator(2, 0);
        let f2 = Multivector::generator(2, 1);
        assert_eq!(f1.hodge_star(), f2);
        assert_eq!(f2.hodge_star(), f1.scale(&q(-1)));
        assert_eq!(f1.hodge_star().hodge_star(), f1.scale(&q(-1)));
    }

    #[test]
    fn beta_examples() {
        let e1 = Multivector::generator(1, 0);
        assert_eq!(one(1).beta(), e1);
        assert_eq!(e1.beta(), one(1));
        let top = Multivector::blade(2, 0b11, q(1));
        assert_eq!(top.beta(), one(2).scale(&q(-1)));
        for l in 0..=6 {
            for b in Multivector::basis(l) {
                assert_eq!(b.beta().beta_inverse(), b);
                assert_eq!(b.beta_inverse().beta(), b);
            }
        }
    }

    #[test]
    fn intertwiner_dimension_one() {
        let r = verify_intertwiner(1, 3, 7).unwrap();
        let plus = r.outcomes[0];
        let minus = r.outcomes[1];
        assert!(plus.commutes && !plus.negates);
        assert!(minus.negates && !minus.commutes);
        assert_eq!(r.negating_conventions(), alloc::vec![Convention::Minus]);
    }

    #[test]
    fn intertwiner_dimension_zero_is_vacuous() {
        let r = verify_intertwiner(0, 4, 1).unwrap();
        assert!(r.outcomes.iter().all(|o| o.negates && o.commutes));
    }

    #[test]
    fn hodge_suite_small_dimensions() {
        for dim in 0..=3 {
            let out = hodge_suite(dim, 5, 3).unwrap();
            assert_eq!(out.len(), 3);
            assert!(out.iter().all(HodgeOutcome::pass), "{out:?}");
            assert_eq!(out[0].samples, 1 << dim);
        }
        assert!(hodge_suite(SUBSET_GATE + 1, 1, 0).is_err());
    }

    #[test]
    fn super_character_examples() {
        let z = Weight::from([0]);
        let empty = WeightedSpace::new(alloc::vec![]);
        assert_eq!(
            super_character(&empty, &Weight::from([5])).unwrap(),
            CharacterPoly::monomial(Weight::from([5]), 1)
        );
        let a1 = WeightedSpace::new(alloc::vec![Weight::from([2])]);
        let expected = CharacterPoly::from_terms([(z.clone(), 1), (Weight::from([2]), -1)]);
        assert_eq!(super_character(&a1, &z).unwrap(), expected);

        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let n2 = WeightedSpace::inversion_space(&rs, g.longest_element());
        assert_eq!(n2.dim(), 3);
        let twist = Weight::zero(2);
        assert_eq!(
            super_character(&n2, &twist).unwrap(),
            super_character_product(&n2, &twist).unwrap()
        );
    }

    #[test]
    fn iso_check_examples() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let id = WeylElement::identity(1);
        let c = clifford_module_iso_check(&rs, &id).unwrap();
        assert!(c.holds());
        assert_eq!(c.parity, Parity::Even);
        let s = WeylElement::simple_reflection(&rs, 1).unwrap();
        let c = clifford_module_iso_check(&rs, &s).unwrap();
        assert!(c.holds());
        assert_eq!(c.parity, Parity::Odd);
        // without the sign the super-characters disagree
        let n2 = WeightedSpace::inversion_space(&rs, &s);
        assert_ne!(
            super_character(&n2, &Weight::from([0])).unwrap(),
            super_character(&n2.conjugate(), &s.sigma()).unwrap()
        );

        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let c = clifford_module_iso_check(&rs, g.longest_element()).unwrap();
        assert!(c.holds());
        assert_eq!(c.parity, Parity::Odd);
    }
}
