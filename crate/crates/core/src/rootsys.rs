//! Root systems of the simple types A–G.
//!
//! Weights are integer vectors in the fundamental-weight basis. Simple roots are
//! the rows of the Cartan matrix `C[i][j] = <alpha_i, alpha_j^vee>` (Bourbaki
//! numbering), so `alpha_i = sum_j C[i][j] omega_j` and `rho = (1, ..., 1)`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::{Add, AddAssign, Index, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest rank accepted for the classical series A–D.
pub const MAX_CLASSICAL_RANK: usize = 8;

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(SmallVec<[i64; 8]>);

impl Weight {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Weight(coords.into_iter().collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(smallvec::smallvec![0; rank])
    }

    /// `(1, ..., 1)`, the half-sum of positive roots.
    pub fn rho(rank: usize) -> Self {
        Weight(smallvec::smallvec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All fundamental coordinates `> 0`.
    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    /// All fundamental coordinates `>= 0`.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: rank,
                found: self.rank(),
            })
        }
    }
}

impl Index<usize> for Weight {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        -&self
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v.into_iter().collect())
    }
}

impl From<&[i64]> for Weight {
    fn from(v: &[i64]) -> Self {
        Weight(v.iter().copied().collect())
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn from_letter(letter: char) -> Option<Self> {
        Some(match letter.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    fn validate(self, rank: usize) -> Result<()> {
        let reason = match self {
            CartanType::A if (1..=MAX_CLASSICAL_RANK).contains(&rank) => return Ok(()),
            CartanType::B | CartanType::C if (2..=MAX_CLASSICAL_RANK).contains(&rank) => {
                return Ok(())
            }
            CartanType::D if (3..=MAX_CLASSICAL_RANK).contains(&rank) => return Ok(()),
            CartanType::E if (6..=8).contains(&rank) => return Ok(()),
            CartanType::F if rank == 4 => return Ok(()),
            CartanType::G if rank == 2 => return Ok(()),
            CartanType::A => "type A needs rank 1..=8",
            CartanType::B => "type B needs rank 2..=8",
            CartanType::C => "type C needs rank 2..=8",
            CartanType::D => "type D needs rank 3..=8",
            CartanType::E => "type E needs rank 6, 7 or 8",
            CartanType::F => "type F exists only in rank 4",
            CartanType::G => "type G exists only in rank 2",
        };
        Err(Error::InvalidType {
            letter: self.letter(),
            rank,
            reason,
        })
    }

    /// Order of the Weyl group, from the classical formulas.
    pub fn weyl_order(self, rank: usize) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            CartanType::A => fact(rank + 1),
            CartanType::B | CartanType::C => (1u128 << rank) * fact(rank),
            CartanType::D => (1u128 << (rank - 1)) * fact(rank),
            CartanType::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanType::F => 1152,
            CartanType::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Cartan matrix together with its symmetrizer.
///
/// `symmetrizer[j]` is half the squared length of `alpha_j` in the smallest
/// integral normalization, so that `C[i][j] * symmetrizer[j]` is symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
}

impl CartanDatum {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        cartan_type.validate(rank)?;
        let matrix = cartan_matrix(cartan_type, rank);
        let symmetrizer = symmetrize(&matrix);
        let datum = CartanDatum {
            cartan_type,
            rank,
            matrix,
            symmetrizer,
        };
        debug_assert!(datum.check_invariants());
        Ok(datum)
    }

    /// The symmetric matrix `(alpha_i, alpha_j) = C[i][j] * d_j`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.matrix[i][j] * self.symmetrizer[j])
                    .collect()
            })
            .collect()
    }

    /// Diagonal 2, off-diagonal `<= 0`, symmetrizable and positive-definite.
    pub fn check_invariants(&self) -> bool {
        let n = self.rank;
        let m = &self.matrix;
        let shape = (0..n).all(|i| {
            m[i][i] == 2
                && (0..n).all(|j| i == j || (m[i][j] <= 0 && (m[i][j] == 0) == (m[j][i] == 0)))
        });
        let sym = self.symmetrized();
        let symmetric = (0..n).all(|i| (0..n).all(|j| sym[i][j] == sym[j][i]));
        let positive = (1..=n).all(|k| {
            let minor: Vec<Vec<BigRational>> = (0..k)
                .map(|i| (0..k).map(|j| rational(sym[i][j])).collect())
                .collect();
            determinant(minor).is_positive()
        });
        shape && symmetric && positive
    }
}

fn cartan_matrix(t: CartanType, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match t {
        CartanType::A | CartanType::B | CartanType::C | CartanType::F | CartanType::G => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        CartanType::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    // C[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j): the long root's
    // row carries the multiple bond.
    match t {
        // alpha_n short
        CartanType::B => m[n - 2][n - 1] = -2,
        // alpha_n long
        CartanType::C => m[n - 1][n - 2] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        CartanType::F => m[1][2] = -2,
        // alpha_1 short, alpha_2 long
        CartanType::G => m[1][0] = -3,
        _ => {}
    }
    m
}

/// Smallest positive integers `d` with `C[i][j] d_j = C[j][i] d_i`.
fn symmetrize(m: &[Vec<i64>]) -> Vec<i64> {
    let n = m.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && m[i][j] != 0 && d[j].is_none() {
                // d_j = d_i * C[j][i] / C[i][j]
                let di = d[i].clone().expect("visited");
                d[j] = Some(di * rational(m[j][i]) / rational(m[i][j]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<BigRational> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let lcm = d
        .iter()
        .fold(BigInt::one(), |acc, x| num_integer_lcm(&acc, x.denom()));
    let ints: Vec<BigInt> = d.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer_gcd(&acc, x));
    ints.iter()
        .map(|x| (x / &g).to_i64().expect("small symmetrizer"))
        .collect()
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b).abs() / num_integer_gcd(a, b)
}

pub(crate) fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

#[allow(clippy::needless_range_loop)]
fn inverse(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| rational(x))
                .chain((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(pivot, col);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// A root system with its positive roots enumerated.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub datum: CartanDatum,
    pub simple_roots: Vec<Weight>,
    /// Ordered by height, then by simple-root coefficients (descending lex).
    pub positive_roots: Vec<Weight>,
    /// Simple-root coefficients of each positive root, parallel to `positive_roots`.
    pub positive_root_coefficients: Vec<Vec<i64>>,
    pub rho: Weight,
    gram: Vec<Vec<BigRational>>,
    level_weights: Vec<i64>,
    positive_set: BTreeSet<Weight>,
    root_set: BTreeSet<Weight>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType, rank: usize) -> Result<Self> {
        let datum = CartanDatum::new(cartan_type, rank)?;
        Ok(Self::from_datum(datum))
    }

    /// Parses names like `A2`, `g2`, `E6`.
    pub fn from_name(name: &str) -> Result<Self> {
        let mut chars = name.trim().chars();
        let letter = chars.next().unwrap_or('?');
        let rest = chars.as_str();
        let rank: usize = rest.parse().map_err(|_| Error::InvalidType {
            letter,
            rank: 0,
            reason: "expected a type letter followed by a rank, e.g. A2",
        })?;
        let t = CartanType::from_letter(letter).ok_or(Error::InvalidType {
            letter,
            rank,
            reason: "type letter must be one of A-G",
        })?;
        Self::build(t, rank)
    }

    fn from_datum(datum: CartanDatum) -> Self {
        let n = datum.rank;
        let simple_roots: Vec<Weight> = datum
            .matrix
            .iter()
            .map(|row| Weight::from(row.as_slice()))
            .collect();

        // Close the simple roots under simple reflections; s_i permutes the
        // positive roots other than alpha_i.
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut found: Vec<(Weight, Vec<i64>)> = Vec::new();
        let mut queue: VecDeque<(Weight, Vec<i64>)> = VecDeque::new();
        for (i, a) in simple_roots.iter().enumerate() {
            let mut c = vec![0; n];
            c[i] = 1;
            seen.insert(a.clone());
            queue.push_back((a.clone(), c));
        }
        while let Some((beta, coeffs)) = queue.pop_front() {
            for i in 0..n {
                if beta == simple_roots[i] {
                    continue;
                }
                let k = beta[i];
                if k == 0 {
                    continue;
                }
                let image = &beta - &simple_roots[i].scaled(k);
                if seen.insert(image.clone()) {
                    let mut c = coeffs.clone();
                    c[i] -= k;
                    debug_assert!(c.iter().all(|&x| x >= 0));
                    queue.push_back((image, c));
                }
            }
            found.push((beta, coeffs));
        }
        found.sort_by(|(_, a), (_, b)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            (ha, Reverse(a)).cmp(&(hb, Reverse(b)))
        });
        let (positive_roots, positive_root_coefficients): (Vec<_>, Vec<_>) =
            found.into_iter().unzip();

        // (omega_i, omega_j) = (C^{-1})_{ij} d_j
        let inv = inverse(&datum.matrix);
        let gram: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &inv[i][j] * rational(datum.symmetrizer[j]))
                    .collect()
            })
            .collect();
        debug_assert!((0..n).all(|i| (0..n).all(|j| gram[i][j] == gram[j][i])));

        // height in simple-root coordinates is (C^{-1} 1) . lambda; scale to integers
        let row_sums: Vec<BigRational> = inv.iter().map(|row| row.iter().sum()).collect();
        let denom = row_sums
            .iter()
            .fold(BigInt::one(), |acc, x| num_integer_lcm(&acc, x.denom()));
        let level_weights: Vec<i64> = row_sums
            .iter()
            .map(|x| (x * &denom).to_integer().to_i64().expect("small level"))
            .collect();
        debug_assert!(level_weights.iter().all(|&h| h > 0));

        let positive_set: BTreeSet<Weight> = positive_roots.iter().cloned().collect();
        let mut root_set = positive_set.clone();
        root_set.extend(positive_roots.iter().map(|r| -r));

        RootSystem {
            datum,
            simple_roots,
            positive_roots,
            positive_root_coefficients,
            rho: Weight::rho(n),
            gram,
            level_weights,
            positive_set,
            root_set,
        }
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn cartan_type(&self) -> CartanType {
        self.datum.cartan_type
    }

    /// Display name such as `B2`.
    pub fn name(&self) -> alloc::string::String {
        alloc::format!("{}{}", self.datum.cartan_type.letter(), self.datum.rank)
    }

    pub fn weyl_order(&self) -> u128 {
        self.datum.cartan_type.weyl_order(self.datum.rank)
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_set.contains(w)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_set.contains(w)
    }

    /// The W-invariant inner product `lambda^T C^{-1} D mu`.
    pub fn pairing(&self, lambda: &Weight, mu: &Weight) -> Result<BigRational> {
        lambda.check_rank(self.rank())?;
        mu.check_rank(self.rank())?;
        let n = self.rank();
        let mut acc = BigRational::zero();
        for i in 0..n {
            if lambda[i] == 0 {
                continue;
            }
            for j in 0..n {
                if mu[j] != 0 {
                    acc += &self.gram[i][j] * rational(lambda[i] * mu[j]);
                }
            }
        }
        Ok(acc)
    }

    /// A positive multiple of the height `sum_i c_i` of `lambda = sum_i c_i alpha_i`.
    /// Every simple root has the same, positive, level.
    pub fn level(&self, lambda: &Weight) -> i64 {
        lambda
            .coords()
            .iter()
            .zip(&self.level_weights)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// The Gram matrix of the fundamental weights.
    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }
}
