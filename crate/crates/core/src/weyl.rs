//! Weyl group elements acting on fundamental-weight coordinates.
//!
//! An element is identified by its integer matrix. Its reduced word is
//! recomputed from the matrix by walking `w(rho)` back to `rho`, stripping the
//! simple reflection of smallest index that shortens at each step, so words are
//! canonical.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Largest Weyl group the library will enumerate unless told otherwise (`|W(E6)|`).
pub const DEFAULT_SIZE_GATE: u128 = 51_840;

#[derive(Clone)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Length first, then the canonical word.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({})", self.word_string())
    }
}

fn mat_vec(m: &[Vec<i64>], v: &Weight) -> Weight {
    Weight::new(
        m.iter()
            .map(|row| row.iter().zip(v.coords()).map(|(a, b)| a * b).sum()),
    )
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn reflection_matrix(system: &RootSystem, idx: usize) -> Vec<Vec<i64>> {
    // s_i(lambda) = lambda - lambda_i alpha_i
    let mut m = identity_matrix(system.rank());
    let alpha = &system.simple_roots[idx];
    for (r, row) in m.iter_mut().enumerate() {
        row[idx] -= alpha[r];
    }
    m
}

/// Apply `s_idx` to a weight in place: `lambda - lambda_idx alpha_idx`.
fn reflect(system: &RootSystem, idx: usize, v: &mut Weight) {
    let k = v[idx];
    if k != 0 {
        *v -= &system.simple_roots[idx].scaled(k);
    }
}

fn smallest_negative(v: &Weight) -> Option<usize> {
    v.coords().iter().position(|&c| c < 0)
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            matrix: identity_matrix(rank),
            word: Vec::new(),
        }
    }

    fn from_matrix(system: &RootSystem, matrix: Vec<Vec<i64>>) -> Self {
        let mut v = mat_vec(&matrix, &system.rho);
        let mut word = Vec::new();
        while let Some(idx) = smallest_negative(&v) {
            reflect(system, idx, &mut v);
            word.push(idx + 1);
        }
        debug_assert_eq!(v, system.rho);
        WeylElement { matrix, word }
    }

    /// The simple reflection `s_i`, `1 <= i <= rank`.
    pub fn simple_reflection(system: &RootSystem, i: usize) -> Result<Self> {
        let rank = system.rank();
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        Ok(WeylElement {
            matrix: reflection_matrix(system, i - 1),
            word: vec![i],
        })
    }

    /// The product `s_{w[0]} s_{w[1]} ...` of simple reflections (1-based indices).
    pub fn from_word(system: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut m = identity_matrix(system.rank());
        for &i in word {
            let s = Self::simple_reflection(system, i)?;
            m = mat_mul(&m, &s.matrix);
        }
        Ok(Self::from_matrix(system, m))
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, system: &RootSystem, other: &WeylElement) -> WeylElement {
        Self::from_matrix(system, mat_mul(&self.matrix, &other.matrix))
    }

    pub fn inverse(&self, system: &RootSystem) -> WeylElement {
        let mut m = identity_matrix(system.rank());
        for &i in self.word.iter().rev() {
            m = mat_mul(&m, &reflection_matrix(system, i - 1));
        }
        Self::from_matrix(system, m)
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Canonical reduced word, 1-based simple-reflection indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `s1s2...`, or `id` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return String::from("id");
        }
        let mut s = String::new();
        for i in &self.word {
            let _ = write!(s, "s{i}");
        }
        s
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(-1)^{l(w)}`.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn act(&self, lambda: &Weight) -> Result<Weight> {
        lambda.check_rank(self.rank())?;
        Ok(mat_vec(&self.matrix, lambda))
    }

    /// The dot action `w(lambda + rho) - rho`.
    pub fn shifted_act(&self, lambda: &Weight) -> Result<Weight> {
        let rho = Weight::rho(self.rank());
        lambda.check_rank(self.rank())?;
        Ok(&mat_vec(&self.matrix, &(lambda + &rho)) - &rho)
    }

    /// `Xi_w = Delta+ ∩ w(Delta-)`, in the root system's order.
    pub fn inversion_set(&self, system: &RootSystem) -> Vec<Weight> {
        let inv = self.inverse(system);
        system
            .positive_roots
            .iter()
            .filter(|a| {
                let pre = mat_vec(&inv.matrix, a);
                system.is_positive_root(&-&pre)
            })
            .cloned()
            .collect()
    }

    /// `sigma_w = rho - w(rho)`.
    pub fn sigma(&self) -> Weight {
        let rho = Weight::rho(self.rank());
        &rho - &mat_vec(&self.matrix, &rho)
    }

    /// Whether the matrix maps the root set onto itself.
    pub fn permutes_roots(&self, system: &RootSystem) -> bool {
        system
            .positive_roots
            .iter()
            .all(|a| system.is_root(&mat_vec(&self.matrix, a)))
    }
}

/// Result of moving a weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chamber {
    /// `dominant = w(nu)` is strictly dominant; `steps` reflections were used.
    Regular {
        w: WeylElement,
        dominant: Weight,
        steps: usize,
    },
    /// `nu` lies on a wall: some coroot pairs to zero with it.
    Singular,
}

/// Walk `nu` into the dominant chamber, always reflecting in the smallest
/// index with a negative coordinate. A zero coordinate at any point means the
/// orbit meets a wall and the weight is singular.
pub fn dominant_representative(system: &RootSystem, nu: &Weight) -> Result<Chamber> {
    nu.check_rank(system.rank())?;
    let mut v = nu.clone();
    let mut m = identity_matrix(system.rank());
    let mut steps = 0;
    loop {
        if v.coords().contains(&0) {
            return Ok(Chamber::Singular);
        }
        match smallest_negative(&v) {
            Some(idx) => {
                reflect(system, idx, &mut v);
                m = mat_mul(&reflection_matrix(system, idx), &m);
                steps += 1;
            }
            None => break,
        }
    }
    Ok(Chamber::Regular {
        w: WeylElement::from_matrix(system, m),
        dominant: v,
        steps,
    })
}

/// The Weyl group of a root system, enumerated on first use.
pub struct WeylGroup<'a> {
    system: &'a RootSystem,
    elements: OnceBox<Vec<WeylElement>>,
}

impl<'a> WeylGroup<'a> {
    /// Refuses groups whose order exceeds `gate`.
    pub fn new(system: &'a RootSystem, gate: u128) -> Result<Self> {
        let order = system.weyl_order();
        if order > gate {
            return Err(Error::SizeGate { order, gate });
        }
        Ok(WeylGroup {
            system,
            elements: OnceBox::new(),
        })
    }

    pub fn with_default_gate(system: &'a RootSystem) -> Result<Self> {
        Self::new(system, DEFAULT_SIZE_GATE)
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn order(&self) -> u128 {
        self.system.weyl_order()
    }

    /// Every element once, ordered by length then canonical word.
    pub fn elements(&self) -> &[WeylElement] {
        self.elements.get_or_init(|| Box::new(self.generate()))
    }

    fn generate(&self) -> Vec<WeylElement> {
        let system = self.system;
        let n = system.rank();
        let reflections: Vec<Vec<Vec<i64>>> =
            (0..n).map(|i| reflection_matrix(system, i)).collect();
        // w is determined by w(rho), whose stabilizer is trivial.
        let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
        let mut frontier = vec![identity_matrix(n)];
        let mut all = Vec::new();
        seen.insert(system.rho.clone(), ());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in frontier {
                for s in &reflections {
                    let p = mat_mul(s, &m);
                    let key = mat_vec(&p, &system.rho);
                    if seen.insert(key, ()).is_none() {
                        next.push(p);
                    }
                }
                all.push(m);
            }
            frontier = next;
        }
        let mut elements: Vec<WeylElement> = all
            .into_iter()
            .map(|m| WeylElement::from_matrix(system, m))
            .collect();
        elements.sort();
        elements
    }

    pub fn longest_element(&self) -> &WeylElement {
        self.elements().last().expect("group is nonempty")
    }

    pub fn find_word(&self, word: &[usize]) -> Result<WeylElement> {
        WeylElement::from_word(self.system, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    fn a(n: usize) -> RootSystem {
        RootSystem::build(CartanType::A, n).unwrap()
    }

    #[test]
    fn a1_reflection_negates() {
        let rs = a(1);
        let s = WeylElement::simple_reflection(&rs, 1).unwrap();
        for n in -5..=5 {
            assert_eq!(s.act(&w([n])).unwrap(), w([-n]));
        }
    }

    #[test]
    fn a2_reflection_formulas() {
        let rs = a(2);
        let s1 = WeylElement::simple_reflection(&rs, 1).unwrap();
        let s2 = WeylElement::simple_reflection(&rs, 2).unwrap();
        assert_eq!(s1.act(&w([3, 5])).unwrap(), w([-3, 8]));
        assert_eq!(s2.act(&w([1, 1])).unwrap(), w([2, -1]));
        assert_eq!(s1.act(&rs.rho).unwrap(), w([-1, 2]));
    }

    #[test]
    fn reflection_index_out_of_range() {
        let rs = a(2);
        assert_eq!(
            WeylElement::simple_reflection(&rs, 3),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
        assert!(WeylElement::simple_reflection(&rs, 0).is_err());
    }

    #[test]
    fn act_rank_mismatch() {
        let rs = a(2);
        let s1 = WeylElement::simple_reflection(&rs, 1).unwrap();
        assert!(matches!(s1.act(&w([1])), Err(Error::RankMismatch { .. })));
        assert!(matches!(
            s1.shifted_act(&w([1, 2, 3])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn a1_dot_action() {
        let rs = a(1);
        let s = WeylElement::simple_reflection(&rs, 1).unwrap();
        for n in -6..=6 {
            assert_eq!(s.shifted_act(&w([n])).unwrap(), w([-n - 2]));
        }
        assert_eq!(s.shifted_act(&w([-1])).unwrap(), w([-1]));
    }

    #[test]
    fn inversion_sets_in_a2() {
        let rs = a(2);
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        assert!(WeylElement::identity(2).inversion_set(&rs).is_empty());
        let s1 = WeylElement::simple_reflection(&rs, 1).unwrap();
        assert_eq!(s1.inversion_set(&rs), vec![w([2, -1])]);
        let w0 = g.longest_element();
        assert_eq!(w0.inversion_set(&rs), rs.positive_roots);
        assert_eq!(w0.length(), 3);
    }

    #[test]
    fn sigma_examples() {
        let rs1 = a(1);
        assert_eq!(WeylElement::identity(1).sigma(), w([0]));
        assert_eq!(
            WeylElement::simple_reflection(&rs1, 1).unwrap().sigma(),
            w([2])
        );
        let rs2 = a(2);
        assert_eq!(
            WeylElement::simple_reflection(&rs2, 1).unwrap().sigma(),
            w([2, -1])
        );
    }

    #[test]
    fn dominant_representative_examples() {
        let rs = a(1);
        match dominant_representative(&rs, &w([3])).unwrap() {
            Chamber::Regular {
                w: el, dominant, ..
            } => {
                assert_eq!(el.length(), 0);
                assert_eq!(dominant, w([3]));
            }
            Chamber::Singular => panic!(),
        }
        match dominant_representative(&rs, &w([-3])).unwrap() {
            Chamber::Regular {
                w: el,
                dominant,
                steps,
            } => {
                assert_eq!(el.word(), &[1]);
                assert_eq!(dominant, w([3]));
                assert_eq!(steps, 1);
            }
            Chamber::Singular => panic!(),
        }
        assert_eq!(
            dominant_representative(&rs, &w([0])).unwrap(),
            Chamber::Singular
        );
        // A2: (1,-1) + ... lies on the wall of alpha_1 + alpha_2
        let rs2 = a(2);
        assert_eq!(
            dominant_representative(&rs2, &w([1, -1])).unwrap(),
            Chamber::Singular
        );
    }

    #[test]
    fn enumeration_sizes_and_lengths() {
        let rs = a(1);
        assert_eq!(
            WeylGroup::with_default_gate(&rs).unwrap().elements().len(),
            2
        );
        let rs = a(2);
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        let lengths: Vec<usize> = g.elements().iter().map(|e| e.length()).collect();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
        let rs = RootSystem::build(CartanType::B, 2).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        assert_eq!(g.elements().len(), 8);
        assert_eq!(g.longest_element().length(), 4);
    }

    #[test]
    fn size_gate_refuses_e7() {
        let rs = RootSystem::build(CartanType::E, 7).unwrap();
        assert_eq!(
            WeylGroup::with_default_gate(&rs).err(),
            Some(Error::SizeGate {
                order: 2_903_040,
                gate: DEFAULT_SIZE_GATE
            })
        );
        assert!(WeylGroup::new(&rs, 3_000_000).is_ok());
    }

    #[test]
    fn words_are_canonical() {
        let rs = a(2);
        // s1 s2 s1 = s2 s1 s2; the canonical form strips the smallest index first
        let x = WeylElement::from_word(&rs, &[1, 2, 1]).unwrap();
        let y = WeylElement::from_word(&rs, &[2, 1, 2]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.word(), y.word());
        let e = WeylElement::from_word(&rs, &[1, 1]).unwrap();
        assert_eq!(e, WeylElement::identity(2));
        assert_eq!(e.word_string(), "id");
    }
}
