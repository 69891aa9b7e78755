use flagcoh_core::clifford::{
    clifford_module_iso_check, random_vector, super_character, super_character_product,
    verify_intertwiner, Convention, Multivector, WeightedSpace,
};
use flagcoh_core::rootsys::{RootSystem, Weight};
use flagcoh_core::weyl::WeylGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Mat = Vec<Vec<i64>>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![0; ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

fn lin(terms: &[(i64, &Mat)]) -> Mat {
    let n = terms[0].1.len();
    let mut out = vec![vec![0; n]; n];
    for (c, m) in terms {
        for i in 0..n {
            for j in 0..n {
                out[i][j] += c * m[i][j];
            }
        }
    }
    out
}

fn ident(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Jordan-Wigner creation operators: factor `k` of the tensor product acts on
/// bit `k` of the blade mask, with `Z` strings on the lower bits.
fn jw_creation(l: usize) -> Vec<Mat> {
    let z: Mat = vec![vec![1, 0], vec![0, -1]];
    let up: Mat = vec![vec![0, 0], vec![1, 0]];
    let id: Mat = ident(2);
    (0..l)
        .map(|j| {
            let mut acc: Mat = vec![vec![1]];
            for k in (0..l).rev() {
                let f = if k < j {
                    &z
                } else if k == j {
                    &up
                } else {
                    &id
                };
                acc = kron(&acc, f);
            }
            acc
        })
        .collect()
}

/// Column `mask` of an operator given by its action on blades.
#[allow(clippy::needless_range_loop)]
fn matrix_of(l: usize, op: impl Fn(&Multivector) -> Multivector) -> Mat {
    let n = 1usize << l;
    let mut out = vec![vec![0; n]; n];
    for m in 0..n {
        let image = op(&Multivector::blade(l, m as u32, q(1)));
        for (row, c) in image.terms() {
            assert!(c.is_integer());
            out[row as usize][m] = c.to_integer().try_into().unwrap();
        }
    }
    out
}

fn deg(m: &Multivector) -> u32 {
    m.terms().next().map_or(0, |(mask, _)| mask.count_ones())
}

fn ivec(x: &[i64]) -> Vec<BigRational> {
    x.iter().map(|&v| q(v)).collect()
}

#[test]
fn wedge_and_contraction_match_jordan_wigner() {
    for l in 0..=6 {
        let ups = jw_creation(l);
        for (j, up) in ups.iter().enumerate() {
            assert_eq!(&matrix_of(l, |w| w.wedge_generator(j)), up, "l={l} j={j}");
            assert_eq!(matrix_of(l, |w| w.contract_generator(j)), transpose(up));
        }
        let n = 1usize << l;
        for j in 0..l {
            for k in 0..l {
                let anti = lin(&[
                    (1, &matmul(&ups[j], &ups[k])),
                    (1, &matmul(&ups[k], &ups[j])),
                ]);
                assert_eq!(anti, vec![vec![0; n]; n]);
                let dn = transpose(&ups[k]);
                let mixed = lin(&[(1, &matmul(&ups[j], &dn)), (1, &matmul(&dn, &ups[j]))]);
                let expected = if j == k {
                    ident(n)
                } else {
                    vec![vec![0; n]; n]
                };
                assert_eq!(mixed, expected);
            }
        }
    }
}

#[test]
fn clifford_relations_against_oracle_on_integer_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for l in 1..=6 {
        let ups = jw_creation(l);
        let n = 1usize << l;
        for _ in 0..6 {
            let x: Vec<i64> = (0..l)
                .map(|_| rand::Rng::gen_range(&mut rng, -5..=5))
                .collect();
            let y: Vec<i64> = (0..l)
                .map(|_| rand::Rng::gen_range(&mut rng, -5..=5))
                .collect();
            let xy: i64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
            let build = |v: &[i64], s: i64| {
                let downs: Vec<Mat> = ups.iter().map(transpose).collect();
                let mut acc = vec![vec![0; n]; n];
                for j in 0..l {
                    acc = lin(&[(1, &acc), (v[j], &ups[j]), (s * v[j], &downs[j])]);
                }
                acc
            };
            for (conv, s, sq) in [(Convention::Plus, 1, 1), (Convention::Minus, -1, -1)] {
                let cx = build(&x, s);
                let cy = build(&y, s);
                let xq = ivec(&x);
                assert_eq!(matrix_of(l, |w| w.clifford(&xq, conv).unwrap()), cx);
                let anti = lin(&[(1, &matmul(&cx, &cy)), (1, &matmul(&cy, &cx))]);
                assert_eq!(anti, lin(&[(2 * sq * xy, &ident(n))]));
            }
        }
    }
}

/// `phi ^ *omega = <phi, omega> e_1 ^ ... ^ e_l` on every pair of blades of
/// equal degree.
#[test]
fn hodge_star_defining_relation() {
    for l in 0..=6 {
        let top = Multivector::blade(l, ((1u64 << l) - 1) as u32, q(1));
        let basis = Multivector::basis(l);
        for phi in &basis {
            for omega in basis.iter().filter(|o| o.grade(deg(phi)) == **o) {
                let lhs = phi.wedge(&omega.hodge_star()).unwrap();
                let rhs = top.scale(&phi.inner(omega).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn hodge_square_and_adjoint_exhaustively() {
    for l in 0..=6usize {
        for omega in Multivector::basis(l) {
            let k = omega.terms().next().unwrap().0.count_ones() as usize;
            let sign = if (k * (l - k)).is_multiple_of(2) {
                1
            } else {
                -1
            };
            assert_eq!(omega.hodge_star().hodge_star(), omega.scale(&q(sign)));
            for j in 0..l {
                // lambda* = (-1)^{l + l k} * lambda *, on degree k
                let lk = if (l + l * k).is_multiple_of(2) { 1 } else { -1 };
                let via_star = omega
                    .hodge_star()
                    .wedge_generator(j)
                    .hodge_star()
                    .scale(&q(lk));
                assert_eq!(via_star, omega.contract_generator(j), "l={l} k={k} j={j}");
            }
            assert_eq!(omega.beta().beta_inverse(), omega);
            assert_eq!(omega.beta_inverse().beta(), omega);
        }
    }
}

/// Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
fn determinant(m: &Mat) -> BigRational {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&v| q(v)).collect())
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in (c + 1)..n {
            if !a[r][c].is_zero() {
                let f = &a[r][c] / &a[c][c];
                for k in c..n {
                    let t = &f * &a[c][k];
                    a[r][k] -= t;
                }
            }
        }
    }
    det
}

#[test]
fn beta_is_invertible() {
    for l in 0..=6 {
        let det = determinant(&matrix_of(l, Multivector::beta));
        assert!(det == q(1) || det == q(-1), "l={l} det={det}");
    }
}

#[test]
fn intertwiner_has_exactly_one_negating_convention() {
    for l in 1..=6 {
        let report = verify_intertwiner(l, 10, 7).unwrap();
        assert_eq!(
            report.negating_conventions(),
            vec![Convention::Minus],
            "l={l}"
        );
        assert_eq!(report, verify_intertwiner(l, 10, 7).unwrap());
    }
    let vacuous = verify_intertwiner(0, 3, 7).unwrap();
    assert_eq!(vacuous.negating_conventions().len(), 2);
}

#[test]
fn random_rational_vectors_square_to_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for l in 1..=5 {
        for _ in 0..5 {
            let x = random_vector(&mut rng, l);
            let norm: BigRational = x.iter().map(|v| v * v).sum();
            for omega in Multivector::basis(l) {
                let plus = omega
                    .clifford(&x, Convention::Plus)
                    .unwrap()
                    .clifford(&x, Convention::Plus)
                    .unwrap();
                assert_eq!(plus, omega.scale(&norm));
                let minus = omega
                    .clifford(&x, Convention::Minus)
                    .unwrap()
                    .clifford(&x, Convention::Minus)
                    .unwrap();
                assert_eq!(minus, omega.scale(&-norm.clone()));
            }
        }
    }
}

#[test]
fn iso_certificates_hold_on_small_groups() {
    for name in ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] {
        let rs = RootSystem::from_name(name).unwrap();
        let g = WeylGroup::with_default_gate(&rs).unwrap();
        for w in g.elements() {
            let cert = clifford_module_iso_check(&rs, w).unwrap();
            assert!(cert.holds(), "{name} {}", w.word_string());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_sum_equals_product(
        weights in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 0..7),
        twist in proptest::collection::vec(-3i64..=3, 2),
    ) {
        let space = WeightedSpace::new(weights.into_iter().map(Weight::from).collect());
        let twist = Weight::from(twist);
        prop_assert_eq!(
            super_character(&space, &twist).unwrap(),
            super_character_product(&space, &twist).unwrap()
        );
    }

    #[test]
    fn clifford_action_is_linear(
        x in proptest::collection::vec(-6i64..=6, 4),
        y in proptest::collection::vec(-6i64..=6, 4),
        mask in 0u32..16,
    ) {
        let omega = Multivector::blade(4, mask, q(1));
        let sum: Vec<BigRational> = x.iter().zip(&y).map(|(a, b)| q(a + b)).collect();
        for conv in Convention::ALL {
            let lhs = omega.clifford(&sum, conv).unwrap();
            let rhs = omega.clifford(&ivec(&x), conv).unwrap().add(&omega.clifford(&ivec(&y), conv).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
