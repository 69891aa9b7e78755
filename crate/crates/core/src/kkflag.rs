//! The weight-lattice model of `K_K(G/B)` and of the Borel-Bott-Weil
//! correspondences.
//!
//! `K_K(G/B)` and `K_K(G/(B ∩ B_w))` are both finite integer combinations of
//! weights: `[E_nu]` on the flag variety, `[F_nu] = [G x_{B∩B_w} C_nu]` on the
//! intersection. The Thom classes `tau`, `tau_w` of the two fibrations over
//! `G/B` are carried by the super-characters of `Lambda n_2` and
//! `Lambda n_2'` on the fibre. A `Lambda(w)` is modelled only by its action on
//! twisted fundamental classes `[G/B]_mu`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::charring::{CharacterPoly, CharacterRing, VirtualRep};
use crate::clifford::{clifford_module_iso_check, super_character, WeightedSpace};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::WeylElement;

/// Which homogeneous space a K-class lives on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceTag {
    /// `G/B`
    FlagVariety,
    /// `G/(B ∩ B_w)`, tagged by the canonical word of `w`.
    Intersection(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    pub terms: CharacterPoly,
    pub space: SpaceTag,
}

impl KClass {
    pub fn zero(space: SpaceTag) -> Self {
        KClass {
            terms: CharacterPoly::zero(),
            space,
        }
    }

    /// The class of the line bundle with weight `nu`.
    pub fn line_bundle(nu: Weight, space: SpaceTag) -> Self {
        KClass {
            terms: CharacterPoly::monomial(nu, 1),
            space,
        }
    }

    fn same_space(&self, other: &KClass) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn try_add(&self, other: &KClass) -> Result<KClass> {
        self.same_space(other)?;
        Ok(KClass {
            terms: self.terms.try_add(&other.terms)?,
            space: self.space.clone(),
        })
    }

    /// Tensor product; on line bundles `F_nu ⊗ F_nu' = F_{nu + nu'}`.
    pub fn tensor(&self, other: &KClass) -> Result<KClass> {
        self.same_space(other)?;
        Ok(KClass {
            terms: self.terms.try_mul(&other.terms)?,
            space: self.space.clone(),
        })
    }

    pub fn scaled(&self, k: i64) -> Result<KClass> {
        Ok(KClass {
            terms: self.terms.scaled(k)?,
            space: self.space.clone(),
        })
    }
}

/// `tau`: Thom class of `G/(B∩B_w) -> G/B`, fibre `n_2` with weights `Xi_w`.
pub fn thom_class(system: &RootSystem, w: &WeylElement) -> Result<KClass> {
    let n2 = WeightedSpace::inversion_space(system, w);
    Ok(KClass {
        terms: super_character(&n2, &Weight::zero(system.rank()))?,
        space: SpaceTag::Intersection(w.word().to_vec()),
    })
}

/// `tau_w`: Thom class of `G/(B∩B_w) -> G/B_w`, fibre `n_2'` with weights `-Xi_w`.
pub fn thom_class_w(system: &RootSystem, w: &WeylElement) -> Result<KClass> {
    let n2c = WeightedSpace::inversion_space(system, w).conjugate();
    Ok(KClass {
        terms: super_character(&n2c, &Weight::zero(system.rank()))?,
        space: SpaceTag::Intersection(w.word().to_vec()),
    })
}

/// `[G/B]_mu`, the fundamental class twisted by `E_mu`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FundamentalClass {
    pub mu: Weight,
}

pub fn twisted_fundamental_class(mu: Weight) -> FundamentalClass {
    FundamentalClass { mu }
}

impl FundamentalClass {
    /// The untwisted class `[G/B] = [G/B]_0`.
    pub fn untwisted(rank: usize) -> Self {
        FundamentalClass {
            mu: Weight::zero(rank),
        }
    }
}

/// `coefficient * [G/B]_mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedClass {
    pub coefficient: i64,
    pub class: FundamentalClass,
}

impl SignedClass {
    pub fn plus(class: FundamentalClass) -> Self {
        SignedClass {
            coefficient: 1,
            class,
        }
    }
}

impl fmt::Display for SignedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coefficient {
            1 => {}
            -1 => f.write_str("-")?,
            c => write!(f, "{c}")?,
        }
        write!(f, "[G/B]_{}", self.class.mu)
    }
}

/// A formal integer combination of twisted fundamental classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FundamentalSum {
    pub terms: BTreeMap<Weight, i64>,
}

impl FundamentalSum {
    pub fn push(&mut self, c: SignedClass) {
        let slot = self.terms.entry(c.class.mu.clone()).or_insert(0);
        *slot += c.coefficient;
        if *slot == 0 {
            self.terms.remove(&c.class.mu);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = SignedClass> + '_ {
        self.terms.iter().map(|(mu, &c)| SignedClass {
            coefficient: c,
            class: FundamentalClass { mu: mu.clone() },
        })
    }
}

/// `Lambda(w)`, acting on the span of the twisted fundamental classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BBWMorphism {
    pub w: WeylElement,
}

impl BBWMorphism {
    pub fn new(w: WeylElement) -> Self {
        BBWMorphism { w }
    }

    /// `(-1)^{l(w)}`.
    pub fn sign(&self) -> i64 {
        self.w.sign()
    }
}

/// The two K-classes on `G/(B∩B_w)` whose equality gives the product formula:
/// `tau_w [F_{w(mu)}]` (pull back `E_mu`, then Thom class) and
/// `(-1)^{l(w)} tau [F_{w.mu}]` (sign-and-shift).
pub fn product_formula_sides(
    system: &RootSystem,
    w: &WeylElement,
    mu: &Weight,
) -> Result<(KClass, KClass)> {
    let space = SpaceTag::Intersection(w.word().to_vec());
    let pulled_back = KClass::line_bundle(w.act(mu)?, space.clone());
    let lhs = thom_class_w(system, w)?.tensor(&pulled_back)?;
    let shifted = KClass::line_bundle(w.shifted_act(mu)?, space);
    let rhs = thom_class(system, w)?.tensor(&shifted)?.scaled(w.sign())?;
    Ok((lhs, rhs))
}

/// `Lambda(w) ⊗ [G/B]_mu`, evaluated along both routes and required to agree.
pub fn bbw_apply(
    system: &RootSystem,
    morphism: &BBWMorphism,
    f: &SignedClass,
) -> Result<SignedClass> {
    let w = &morphism.w;
    let mu = &f.class.mu;
    let (lhs, rhs) = product_formula_sides(system, w, mu)?;
    if lhs != rhs {
        return Err(Error::ProductFormulaMismatch {
            word: w.word_string(),
            mu: mu.clone(),
        });
    }
    let coefficient = f
        .coefficient
        .checked_mul(morphism.sign())
        .ok_or(Error::Overflow("class coefficient"))?;
    Ok(SignedClass {
        coefficient,
        class: FundamentalClass {
            mu: w.shifted_act(mu)?,
        },
    })
}

pub fn bbw_apply_sum(
    system: &RootSystem,
    morphism: &BBWMorphism,
    f: &FundamentalSum,
) -> Result<FundamentalSum> {
    let mut out = FundamentalSum::default();
    for c in f.iter() {
        out.push(bbw_apply(system, morphism, &c)?);
    }
    Ok(out)
}

/// `coefficient * chi(G/B, E_mu)`, both index routes required to agree.
pub fn index(ring: &CharacterRing<'_>, f: &SignedClass) -> Result<VirtualRep> {
    ring.euler_characteristic(&f.class.mu)?
        .scaled(f.coefficient)
}

pub fn index_sum(ring: &CharacterRing<'_>, f: &FundamentalSum) -> Result<VirtualRep> {
    let mut out = VirtualRep::zero();
    for c in f.iter() {
        out = out.try_add(&index(ring, &c)?)?;
    }
    Ok(out)
}

/// `(-1)^{l(w)} (G/B)_{w.mu} = (G/B)_mu`, with each side computed by both
/// index routes and all four values required to be consistent.
pub fn verify_dot_orbit_index(
    ring: &CharacterRing<'_>,
    mu: &Weight,
    w: &WeylElement,
) -> Result<bool> {
    let system = ring.system();
    let moved = w.shifted_act(mu)?;
    let a_mu = crate::charring::euler_characteristic_bbw(system, mu)?;
    let b_mu = ring.euler_characteristic_character(mu)?;
    let a_moved = crate::charring::euler_characteristic_bbw(system, &moved)?;
    let b_moved = ring.euler_characteristic_character(&moved)?;
    Ok(a_mu == b_mu && a_moved == b_moved && a_moved.scaled(w.sign())? == a_mu)
}

/// `super(n_2', 0) e^{w(mu)} = (-1)^{l(w)} super(n_2, 0) e^{w.mu}` together
/// with the graded Clifford-module certificate for `w`.
pub fn verify_product_formula(system: &RootSystem, mu: &Weight, w: &WeylElement) -> Result<bool> {
    let (lhs, rhs) = product_formula_sides(system, w, mu)?;
    Ok(lhs == rhs && clifford_module_iso_check(system, w)?.holds())
}

/// `p^* ⊗ Lambda(w) = p^*`, paired with every `[G/B]_mu` in the box.
pub fn verify_index_invariance(
    ring: &CharacterRing<'_>,
    w: &WeylElement,
    bound: i64,
) -> Result<bool> {
    let system = ring.system();
    let morphism = BBWMorphism::new(w.clone());
    for mu in weight_box(system.rank(), bound) {
        let f = SignedClass::plus(twisted_fundamental_class(mu));
        match bbw_apply(system, &morphism, &f) {
            Ok(image) => {
                if index(ring, &image)? != index(ring, &f)? {
                    return Ok(false);
                }
            }
            Err(Error::ProductFormulaMismatch { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Single-weight form of [`verify_index_invariance`].
pub fn verify_index_invariance_at(
    ring: &CharacterRing<'_>,
    w: &WeylElement,
    mu: &Weight,
) -> Result<bool> {
    let system = ring.system();
    let f = SignedClass::plus(twisted_fundamental_class(mu.clone()));
    match bbw_apply(system, &BBWMorphism::new(w.clone()), &f) {
        Ok(image) => Ok(index(ring, &image)? == index(ring, &f)?),
        Err(Error::ProductFormulaMismatch { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `rho - w(rho) = sum of Xi_w` and `|Xi_w| = l(w)`.
pub fn verify_sigma_identity(system: &RootSystem, w: &WeylElement) -> bool {
    let xi = w.inversion_set(system);
    let mut sum = Weight::zero(system.rank());
    for a in &xi {
        sum += a;
    }
    xi.len() == w.length() && sum == w.sigma()
}

/// `Lambda(w) Lambda(w') = (-1)^{l(w)+l(w')-l(ww')} Lambda(ww')` on `[G/B]_mu`.
pub fn verify_operator_law(
    system: &RootSystem,
    w: &WeylElement,
    w2: &WeylElement,
    mu: &Weight,
) -> Result<bool> {
    let f = SignedClass::plus(twisted_fundamental_class(mu.clone()));
    let inner = bbw_apply(system, &BBWMorphism::new(w2.clone()), &f)?;
    let composed = bbw_apply(system, &BBWMorphism::new(w.clone()), &inner)?;
    let product = w.compose(system, w2);
    let direct = bbw_apply(system, &BBWMorphism::new(product.clone()), &f)?;
    let exponent = w.length() + w2.length() - product.length();
    let sign = if exponent.is_multiple_of(2) { 1 } else { -1 };
    Ok(composed.class == direct.class
        && composed.coefficient == sign * direct.coefficient
        && composed.coefficient == w.sign() * w2.sign())
}

/// Every weight with all coordinates in `[-bound, bound]`, lexicographic.
pub fn weight_box(rank: usize, bound: i64) -> impl Iterator<Item = Weight> {
    let side = (2 * bound + 1).max(0) as u64;
    let total = side.pow(rank as u32);
    (0..if bound < 0 { 0 } else { total }).map(move |mut k| {
        let mut coords = alloc::vec![0i64; rank];
        for c in coords.iter_mut().rev() {
            *c = (k % side) as i64 - bound;
            k /= side;
        }
        Weight::from(coords)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    DotOrbitIndex,
    ProductFormula,
    IndexInvariance,
    SigmaIdentity,
    OperatorLaw,
}

impl CheckName {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::DotOrbitIndex => "dot_orbit_index",
            CheckName::ProductFormula => "product_formula",
            CheckName::IndexInvariance => "index_invariance",
            CheckName::SigmaIdentity => "sigma_identity",
            CheckName::OperatorLaw => "operator_law",
        }
    }
}

/// One verification outcome.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CheckRecord {
    pub type_letter: char,
    pub rank: usize,
    /// Canonical word; for the operator law, the two words joined by `|`.
    pub w_word: String,
    pub mu: Option<Weight>,
    pub check: CheckName,
    pub pass: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;
    use crate::weyl::WeylGroup;

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    #[test]
    fn untwisted_class_is_mu_zero() {
        assert_eq!(
            FundamentalClass::untwisted(2),
            twisted_fundamental_class(w([0, 0]))
        );
        assert_ne!(
            twisted_fundamental_class(w([1, 0])),
            twisted_fundamental_class(w([0, 1]))
        );
        assert_eq!(twisted_fundamental_class(w([1, 1])).mu.coords(), &[1, 1]);
    }

    #[test]
    fn identity_morphism_is_identity() {
        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let id = BBWMorphism::new(WeylElement::identity(2));
        for mu in weight_box(2, 2) {
            let f = SignedClass::plus(twisted_fundamental_class(mu));
            assert_eq!(bbw_apply(&rs, &id, &f).unwrap(), f);
        }
    }

    #[test]
    fn bbw_apply_examples() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let s = BBWMorphism::new(WeylElement::simple_reflection(&rs, 1).unwrap());
        let f = SignedClass::plus(FundamentalClass::untwisted(1));
        let out = bbw_apply(&rs, &s, &f).unwrap();
        assert_eq!(out.coefficient, -1);
        assert_eq!(out.class.mu, w([-2]));

        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let s1 = BBWMorphism::new(WeylElement::simple_reflection(&rs, 1).unwrap());
        let out = bbw_apply(
            &rs,
            &s1,
            &SignedClass::plus(twisted_fundamental_class(w([1, 1]))),
        )
        .unwrap();
        assert_eq!(out.coefficient, -1);
        assert_eq!(out.class.mu, w([-3, 3]));
    }

    #[test]
    fn index_examples() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        let trivial = VirtualRep::irreducible(w([0]), 1).unwrap();
        let f = SignedClass::plus(FundamentalClass::untwisted(1));
        assert_eq!(index(&ring, &f).unwrap(), trivial);
        let g2 = SignedClass {
            coefficient: -1,
            class: twisted_fundamental_class(w([-2])),
        };
        assert_eq!(index(&ring, &g2).unwrap(), trivial);
        assert!(index(
            &ring,
            &SignedClass::plus(twisted_fundamental_class(w([-1])))
        )
        .unwrap()
        .is_zero());
    }

    #[test]
    fn a1_checks() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        let s = WeylElement::simple_reflection(&rs, 1).unwrap();
        assert!(verify_dot_orbit_index(&ring, &w([0]), &s).unwrap());
        assert!(verify_product_formula(&rs, &w([0]), &s).unwrap());
        assert!(verify_index_invariance(&ring, &s, 6).unwrap());
        assert!(verify_index_invariance(&ring, &WeylElement::identity(1), 6).unwrap());
    }

    #[test]
    fn product_formula_a1_by_hand() {
        // tau_w F_0 = 1 - e^{-alpha}; -tau F_{-alpha} = -(1 - e^{alpha}) e^{-alpha}
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let s = WeylElement::simple_reflection(&rs, 1).unwrap();
        let (lhs, rhs) = product_formula_sides(&rs, &s, &w([0])).unwrap();
        let expected = CharacterPoly::from_terms([(w([0]), 1), (w([-2]), -1)]);
        assert_eq!(lhs.terms, expected);
        assert_eq!(rhs.terms, expected);
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let a = KClass::line_bundle(w([0]), SpaceTag::FlagVariety);
        let b = KClass::line_bundle(w([0]), SpaceTag::Intersection(alloc::vec![1]));
        assert_eq!(a.tensor(&b), Err(Error::SpaceMismatch));
        assert_eq!(a.try_add(&b), Err(Error::SpaceMismatch));
    }

    #[test]
    fn weight_box_enumeration() {
        let all: Vec<Weight> = weight_box(2, 1).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], w([-1, -1]));
        assert_eq!(all[8], w([1, 1]));
        assert_eq!(weight_box(1, 0).count(), 1);
    }
}
