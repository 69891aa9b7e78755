//! Characters as Laurent polynomials on the weight lattice, and virtual
//! representations.
//!
//! The Euler characteristic of `E_mu` on `G/B` is available along two
//! independent routes:
//!
//! - **BBW**: move `mu + rho` into the dominant chamber; a wall means the
//!   cohomology vanishes, otherwise it is one irreducible in degree `l(w)`.
//! - **Character**: divide the alternating sum `sum_w (-1)^{l(w)} e^{w(mu+rho)}`
//!   by the Weyl denominator and peel irreducibles off the quotient.
//!
//! Both alternating sums are written with the `e^rho` shift folded in, so no
//! half-integral exponent is ever formed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{dominant_representative, Chamber, WeylElement, WeylGroup};

/// Finite sum `sum c_lambda e^lambda` with nonzero integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterPoly {
    terms: BTreeMap<Weight, i64>,
}

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or(Error::Overflow("character coefficient"))
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .ok_or(Error::Overflow("character coefficient"))
}

impl CharacterPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(lambda: Weight, coeff: i64) -> Self {
        let mut p = Self::zero();
        if coeff != 0 {
            p.terms.insert(lambda, coeff);
        }
        p
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c).expect("coefficient overflow");
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Weight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in canonical (reverse-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.terms.iter().rev().map(|(w, &c)| (w, c))
    }

    /// Lexicographically largest exponent and its coefficient.
    pub fn leading_term(&self) -> Option<(&Weight, i64)> {
        self.terms.iter().next_back().map(|(w, &c)| (w, c))
    }

    /// Sum of all coefficients, i.e. the value at the identity.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, lambda: Weight, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(lambda) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let v = checked_add(*e.get(), coeff)?;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scaled(-1)?)
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for (w, &c) in &self.terms {
            out.terms.insert(w.clone(), checked_mul(c, k)?);
        }
        Ok(out)
    }

    /// Multiplication by `e^lambda`.
    pub fn shifted(&self, lambda: &Weight) -> Self {
        CharacterPoly {
            terms: self.terms.iter().map(|(w, &c)| (w + lambda, c)).collect(),
        }
    }

    /// Convolution product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a + b, checked_mul(ca, cb)?)?;
            }
        }
        Ok(out)
    }

    /// `w . chi`: exponents moved by the linear action.
    pub fn apply(&self, w: &WeylElement) -> Result<Self> {
        let mut out = Self::zero();
        for (lambda, &c) in &self.terms {
            out.add_term(w.act(lambda)?, c)?;
        }
        Ok(out)
    }

    /// Invariance under every simple reflection, checked term by term.
    pub fn is_weyl_invariant(&self, system: &RootSystem) -> bool {
        self.terms.iter().all(|(lambda, &c)| {
            (0..system.rank()).all(|i| {
                let k = lambda[i];
                let image = lambda - &system.simple_roots[i].scaled(k);
                self.coefficient(&image) == c
            })
        })
    }

    /// Whether every simple reflection negates the polynomial.
    pub fn is_alternating(&self, system: &RootSystem) -> bool {
        self.terms.iter().all(|(lambda, &c)| {
            (0..system.rank()).all(|i| {
                let k = lambda[i];
                let image = lambda - &system.simple_roots[i].scaled(k);
                self.coefficient(&image) == -c
            })
        })
    }

    fn coordinate_bounds(&self, j: usize) -> (i64, i64) {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for w in self.terms.keys() {
            lo = lo.min(w[j]);
            hi = hi.max(w[j]);
        }
        (lo, hi)
    }

    /// Exact Laurent division by iterated leading-term elimination.
    ///
    /// Lexicographic order on exponents is translation invariant, so the
    /// leading term of a quotient is the difference of leading terms. Every
    /// quotient exponent is confined to the box cut out by the coordinate-wise
    /// extremes of dividend and divisor, which bounds the loop when the division
    /// turns out not to be exact.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        let (lead_d, lead_c) = divisor
            .leading_term()
            .map(|(w, c)| (w.clone(), c))
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let rank = lead_d.rank();
        let bounds: Vec<(i64, i64)> = (0..rank)
            .map(|j| {
                let (nlo, nhi) = self.coordinate_bounds(j);
                let (dlo, dhi) = divisor.coordinate_bounds(j);
                (nlo - dlo, nhi - dhi)
            })
            .collect();
        let mut rem = self.terms.clone();
        let mut quotient = Self::zero();
        while let Some((lead, &c)) = rem.iter().next_back() {
            let exp = lead - &lead_d;
            let in_box = (0..rank).all(|j| bounds[j].0 <= exp[j] && exp[j] <= bounds[j].1);
            if !in_box || c % lead_c != 0 {
                return Err(Error::InexactDivision(format!(
                    "remainder term {c} e^{lead} not divisible by leading term {lead_c} e^{lead_d}"
                )));
            }
            let k = c / lead_c;
            for (w, &dc) in &divisor.terms {
                let key = w + &exp;
                let sub = checked_mul(k, dc)?;
                let v = checked_add(rem.get(&key).copied().unwrap_or(0), -sub)?;
                if v == 0 {
                    rem.remove(&key);
                } else {
                    rem.insert(key, v);
                }
            }
            quotient.add_term(exp, k)?;
        }
        Ok(quotient)
    }
}

impl fmt::Debug for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CharacterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                f.write_str(" ")?;
            }
            let a = c.abs();
            if a == 1 {
                write!(f, "{sign}e^{w}")?;
            } else {
                write!(f, "{sign}{a}e^{w}")?;
            }
        }
        Ok(())
    }
}

/// Formal integer combination of irreducibles, keyed by dominant highest weight.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VirtualRep {
    mults: BTreeMap<Weight, i64>,
}

impl VirtualRep {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * [V_lambda]`; `lambda` must be dominant.
    pub fn irreducible(lambda: Weight, coeff: i64) -> Result<Self> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda));
        }
        let mut v = Self::zero();
        v.add(lambda, coeff)?;
        Ok(v)
    }

    fn add(&mut self, lambda: Weight, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let v = checked_add(self.mults.get(&lambda).copied().unwrap_or(0), coeff)?;
        if v == 0 {
            self.mults.remove(&lambda);
        } else {
            self.mults.insert(lambda, v);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn multiplicity(&self, lambda: &Weight) -> i64 {
        self.mults.get(lambda).copied().unwrap_or(0)
    }

    /// Highest weights with multiplicities, reverse-lexicographic.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.mults.iter().rev().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (w, &c) in &other.mults {
            out.add(w.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (w, &c) in &self.mults {
            out.add(w.clone(), checked_mul(c, k)?)?;
        }
        Ok(out)
    }

    /// Virtual dimension.
    pub fn dimension(&self, system: &RootSystem) -> Result<i128> {
        let mut total: i128 = 0;
        for (w, &c) in &self.mults {
            let d = weyl_dimension(system, w)? as i128;
            total = total
                .checked_add(
                    d.checked_mul(c as i128)
                        .ok_or(Error::Overflow("virtual dimension"))?,
                )
                .ok_or(Error::Overflow("virtual dimension"))?;
        }
        Ok(total)
    }

    pub fn character(&self, ring: &CharacterRing<'_>) -> Result<CharacterPoly> {
        let mut out = CharacterPoly::zero();
        for (w, &c) in &self.mults {
            out = out.try_add(&ring.weyl_character(w)?.scaled(c)?)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "[V{w}]")?;
        }
        Ok(())
    }
}

/// `prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)`.
pub fn weyl_dimension(system: &RootSystem, lambda: &Weight) -> Result<u128> {
    lambda.check_rank(system.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let shifted = lambda + &system.rho;
    let mut acc = BigRational::one();
    for alpha in &system.positive_roots {
        acc *= system.pairing(&shifted, alpha)? / system.pairing(&system.rho, alpha)?;
    }
    if !acc.is_integer() || !acc.is_positive() {
        return Err(Error::InexactDivision(format!(
            "dimension product {acc} is not a positive integer"
        )));
    }
    let n: BigInt = acc.to_integer();
    n.to_u128().ok_or(Error::Overflow("Weyl dimension"))
}

/// Cohomology of `E_mu` on `G/B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cohomology {
    /// `mu + rho` is singular.
    Vanishes,
    /// One irreducible `V_{w . mu}` in degree `l(w)`.
    Concentrated {
        degree: usize,
        highest_weight: Weight,
        dimension: u128,
        w: WeylElement,
    },
}

/// BBW: the degree and highest weight of the only nonvanishing cohomology group.
pub fn cohomology(system: &RootSystem, mu: &Weight) -> Result<Cohomology> {
    mu.check_rank(system.rank())?;
    match dominant_representative(system, &(mu + &system.rho))? {
        Chamber::Singular => Ok(Cohomology::Vanishes),
        Chamber::Regular { w, dominant, .. } => {
            let highest_weight = &dominant - &system.rho;
            let dimension = weyl_dimension(system, &highest_weight)?;
            Ok(Cohomology::Concentrated {
                degree: w.length(),
                highest_weight,
                dimension,
                w,
            })
        }
    }
}

/// Euler characteristic via the BBW chamber walk.
pub fn euler_characteristic_bbw(system: &RootSystem, mu: &Weight) -> Result<VirtualRep> {
    mu.check_rank(system.rank())?;
    match dominant_representative(system, &(mu + &system.rho))? {
        Chamber::Singular => Ok(VirtualRep::zero()),
        Chamber::Regular { w, dominant, .. } => {
            VirtualRep::irreducible(&dominant - &system.rho, w.sign())
        }
    }
}

/// Character computations over an enumerated Weyl group, with memoized
/// characters. Not `Sync`: give each worker thread its own ring.
pub struct CharacterRing<'g> {
    group: &'g WeylGroup<'g>,
    denominator: CharacterPoly,
    characters: RefCell<BTreeMap<Weight, CharacterPoly>>,
    quotients: RefCell<BTreeMap<CharacterPoly, VirtualRep>>,
}

impl<'g> CharacterRing<'g> {
    pub fn new(group: &'g WeylGroup<'g>) -> Self {
        let rank = group.system().rank();
        let denominator = numerator_over(group, &Weight::zero(rank));
        CharacterRing {
            group,
            denominator,
            characters: RefCell::new(BTreeMap::new()),
            quotients: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn system(&self) -> &'g RootSystem {
        self.group.system()
    }

    pub fn group(&self) -> &'g WeylGroup<'g> {
        self.group
    }

    /// `sum_w (-1)^{l(w)} e^{w(rho)}`.
    pub fn denominator(&self) -> &CharacterPoly {
        &self.denominator
    }

    /// `sum_w (-1)^{l(w)} e^{w(lambda + rho)}`.
    pub fn weyl_numerator(&self, lambda: &Weight) -> Result<CharacterPoly> {
        lambda.check_rank(self.system().rank())?;
        Ok(numerator_over(self.group, lambda))
    }

    /// Character of the irreducible with highest weight `lambda`, with the
    /// `e^rho` shifts of numerator and denominator cancelled.
    pub fn weyl_character(&self, lambda: &Weight) -> Result<CharacterPoly> {
        lambda.check_rank(self.system().rank())?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        if let Some(c) = self.characters.borrow().get(lambda) {
            return Ok(c.clone());
        }
        let chi = self
            .weyl_numerator(lambda)?
            .divide_exact(&self.denominator)?;
        // numerator and denominator both carry e^rho; the quotient starts at e^lambda
        debug_assert_eq!(chi.leading_term().map(|(_, c)| c), Some(1));
        self.characters
            .borrow_mut()
            .insert(lambda.clone(), chi.clone());
        Ok(chi)
    }

    /// Peel irreducibles off a W-invariant polynomial, highest level first.
    pub fn decompose(&self, chi: &CharacterPoly) -> Result<VirtualRep> {
        let system = self.system();
        if !chi.is_weyl_invariant(system) {
            return Err(Error::NotWeylInvariant);
        }
        let mut rest = chi.clone();
        let mut out = VirtualRep::zero();
        while !rest.is_zero() {
            let (top, c) = rest
                .terms()
                .max_by(|(a, _), (b, _)| (system.level(a), *a).cmp(&(system.level(b), *b)))
                .map(|(w, c)| (w.clone(), c))
                .expect("nonzero");
            if !top.is_dominant() {
                return Err(Error::NotWeylInvariant);
            }
            let piece = self.weyl_character(&top)?.scaled(c)?;
            rest = rest.try_sub(&piece)?;
            out.add(top, c)?;
        }
        Ok(out)
    }

    /// Euler characteristic via Laurent division of alternating sums.
    pub fn euler_characteristic_character(&self, mu: &Weight) -> Result<VirtualRep> {
        let numerator = self.weyl_numerator(mu)?;
        if numerator.is_zero() {
            return Ok(VirtualRep::zero());
        }
        // numerators of weights in one dot-orbit agree up to sign
        let (key, sign) = match numerator.leading_term() {
            Some((_, c)) if c < 0 => (numerator.scaled(-1)?, -1),
            _ => (numerator, 1),
        };
        if let Some(v) = self.quotients.borrow().get(&key) {
            return v.scaled(sign);
        }
        let chi = key.divide_exact(&self.denominator)?;
        let v = self.decompose(&chi)?;
        self.quotients.borrow_mut().insert(key, v.clone());
        v.scaled(sign)
    }

    /// Both routes, required to agree.
    pub fn euler_characteristic(&self, mu: &Weight) -> Result<VirtualRep> {
        let a = euler_characteristic_bbw(self.system(), mu)?;
        let b = self.euler_characteristic_character(mu)?;
        if a != b {
            return Err(Error::RouteMismatch(mu.clone()));
        }
        Ok(a)
    }
}

fn numerator_over(group: &WeylGroup<'_>, lambda: &Weight) -> CharacterPoly {
    let shifted = lambda + &group.system().rho;
    let mut p = CharacterPoly::zero();
    for w in group.elements() {
        let image = w.act(&shifted).expect("rank checked");
        p.add_term(image, w.sign()).expect("unit coefficients");
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    #[test]
    fn a1_numerator() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        for n in 0..6 {
            let expected = CharacterPoly::from_terms([(w([n + 1]), 1), (w([-n - 1]), -1)]);
            assert_eq!(ring.weyl_numerator(&w([n])).unwrap(), expected);
        }
        assert!(ring.weyl_numerator(&w([-1])).unwrap().is_zero());
        assert_eq!(&ring.weyl_numerator(&w([0])).unwrap(), ring.denominator());
    }

    #[test]
    fn a1_characters_are_strings() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        for n in 0..8i64 {
            let chi = ring.weyl_character(&w([n])).unwrap();
            let expected = CharacterPoly::from_terms((0..=n).map(|k| (w([n - 2 * k]), 1)));
            assert_eq!(chi, expected);
        }
        assert_eq!(ring.weyl_character(&w([0])).unwrap(), CharacterPoly::one(1));
    }

    #[test]
    fn a2_adjoint_character() {
        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        let chi = ring.weyl_character(&w([1, 1])).unwrap();
        assert_eq!(chi.mass(), 8);
        assert_eq!(chi.coefficient(&w([0, 0])), 2);
        assert_eq!(chi.len(), 7);
        assert_eq!(weyl_dimension(&rs, &w([1, 1])).unwrap(), 8);
    }

    #[test]
    fn dimension_examples() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        for n in 0..10 {
            assert_eq!(weyl_dimension(&rs, &w([n])).unwrap(), n as u128 + 1);
        }
        let g2 = RootSystem::build(CartanType::G, 2).unwrap();
        assert_eq!(weyl_dimension(&g2, &w([0, 0])).unwrap(), 1);
        // 7-dimensional (short) and 14-dimensional (adjoint) representations
        assert_eq!(weyl_dimension(&g2, &w([1, 0])).unwrap(), 7);
        assert_eq!(weyl_dimension(&g2, &w([0, 1])).unwrap(), 14);
        let e6 = RootSystem::build(CartanType::E, 6).unwrap();
        assert_eq!(weyl_dimension(&e6, &w([1, 0, 0, 0, 0, 0])).unwrap(), 27);
        assert_eq!(weyl_dimension(&e6, &w([0, 1, 0, 0, 0, 0])).unwrap(), 78);
        assert!(matches!(
            weyl_dimension(&rs, &w([-1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn euler_characteristic_a1() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        for n in 0..6 {
            assert_eq!(
                ring.euler_characteristic(&w([n])).unwrap(),
                VirtualRep::irreducible(w([n]), 1).unwrap()
            );
        }
        assert!(ring.euler_characteristic(&w([-1])).unwrap().is_zero());
        let v = ring.euler_characteristic(&w([-3])).unwrap();
        assert_eq!(v, VirtualRep::irreducible(w([1]), -1).unwrap());
        assert_eq!(v.dimension(&rs).unwrap(), -2);
    }

    #[test]
    fn decompose_examples() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        let v1 = ring.weyl_character(&w([1])).unwrap();
        assert_eq!(
            ring.decompose(&v1).unwrap(),
            VirtualRep::irreducible(w([1]), 1).unwrap()
        );
        let sq = v1.try_mul(&v1).unwrap();
        let d = ring.decompose(&sq).unwrap();
        assert_eq!(d.multiplicity(&w([2])), 1);
        assert_eq!(d.multiplicity(&w([0])), 1);
        assert_eq!(d.len(), 2);
        assert!(ring.decompose(&CharacterPoly::zero()).unwrap().is_empty());
        let lopsided = CharacterPoly::monomial(w([1]), 1);
        assert_eq!(ring.decompose(&lopsided), Err(Error::NotWeylInvariant));
    }

    #[test]
    fn inexact_division_is_reported() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let ring = CharacterRing::new(&g);
        let p = CharacterPoly::from_terms([(w([3]), 1), (w([0]), 1)]);
        assert!(matches!(
            p.divide_exact(ring.denominator()),
            Err(Error::InexactDivision(_))
        ));
        let two = CharacterPoly::from_terms([(w([2]), 1), (w([-2]), -2)]);
        assert!(matches!(
            two.divide_exact(ring.denominator()),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn cohomology_a1() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        match cohomology(&rs, &w([-5])).unwrap() {
            Cohomology::Concentrated {
                degree,
                highest_weight,
                dimension,
                ..
            } => {
                assert_eq!(degree, 1);
                assert_eq!(highest_weight, w([3]));
                assert_eq!(dimension, 4);
            }
            Cohomology::Vanishes => panic!(),
        }
        assert_eq!(cohomology(&rs, &w([-1])).unwrap(), Cohomology::Vanishes);
    }

    #[test]
    fn display() {
        let p = CharacterPoly::from_terms([(w([1]), 1), (w([-1]), -2)]);
        assert_eq!(alloc::format!("{p}"), "e^(1) -2e^(-1)");
        let v = VirtualRep::irreducible(w([2]), 1)
            .unwrap()
            .try_add(&VirtualRep::irreducible(w([0]), -3).unwrap())
            .unwrap();
        assert_eq!(alloc::format!("{v}"), "[V(2)] - 3[V(0)]");
    }
}
