mod common;

use common::{homology_oracle, matrix_rank_oracle, rational_rank, smith_oracle};
use khtwist::homology::{homology_table, homology_table_with_torsion};
use khtwist::linalg::{bareiss_rank, dense_smith, invariant_factors, rank};
use khtwist::state::build_complex;
use khtwist::{parse_pd, Matrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

proptest! {
    #[test]
    fn sparse_rank_matches_rational_elimination(rows in small_matrix(9)) {
        let m = Matrix::from_dense(&rows);
        prop_assert_eq!(rank(&m), rational_rank(&rows));
        prop_assert_eq!(bareiss_rank(rows.clone()).unwrap(), rational_rank(&rows));
    }

    #[test]
    fn low_rank_products(a in small_matrix(5), seed in prop::collection::vec(-2i64..=2, 25)) {
        let inner = a[0].len();
        let b: Vec<Vec<i64>> = (0..inner).map(|i| (0..5).map(|j| seed[(i * 5 + j) % 25]).collect()).collect();
        let m = Matrix::from_dense(&a).mul(&Matrix::from_dense(&b));
        prop_assert_eq!(rank(&m), matrix_rank_oracle(&m));
    }

    #[test]
    fn smith_matches_determinantal_divisors(rows in small_matrix(4)) {
        let m = Matrix::from_dense(&rows);
        let expected = smith_oracle(&rows);
        prop_assert_eq!(invariant_factors(&m), expected.clone());
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        prop_assert_eq!(dense_smith(big), expected);
    }
}

#[test]
fn smith_of_known_matrix() {
    let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    let expected: Vec<BigInt> = [2, 6, 12].into_iter().map(BigInt::from).collect();
    assert_eq!(smith_oracle(&rows), expected);
    assert_eq!(invariant_factors(&Matrix::from_dense(&rows)), expected);
}

const SMALL: [(&str, &str); 5] = [
    ("unknot", ""),
    ("hopf", "X 1 4 2 3\nX 3 2 4 1"),
    ("trefoil", "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2"),
    ("figure_eight", "X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8"),
    ("kink", "X 1 2 2 1"),
];

/// `(j, k, rank)` tables computed once with the rational oracle.
const FROZEN: [&[(i32, i32, usize)]; 5] = [
    &[(0, -2, 1), (0, 2, 1)],
    &[(-2, -6, 1), (-2, -2, 1), (2, 2, 1), (2, 6, 1)],
    &[(-3, -9, 1), (-1, -1, 1), (3, 3, 1), (3, 7, 1)],
    &[(-4, -10, 1), (-2, -2, 1), (0, -2, 1), (0, 2, 1), (2, 2, 1), (4, 10, 1)],
    &[(-1, -5, 1), (-1, -1, 1)],
];

#[test]
fn frozen_homology_tables() {
    for ((name, pd), frozen) in SMALL.iter().zip(FROZEN) {
        let c = build_complex(&parse_pd(pd).unwrap()).unwrap();
        let oracle: Vec<_> = homology_oracle(&c).into_iter().map(|((j, k), r)| (j, k, r)).collect();
        assert_eq!(oracle, frozen, "{name}: oracle drifted");
        let h = homology_table(&c);
        let got: Vec<_> = h.ranks.iter().map(|(&(j, k), &r)| (j, k, r)).collect();
        assert_eq!(got, frozen, "{name}");
    }
}

#[test]
fn corpus_differentials_against_oracle() {
    for d in khtwist::corpus::bundled().into_iter().filter(|d| d.len() <= 6) {
        let c = build_complex(&d).unwrap();
        assert_eq!(homology_oracle(&c), homology_table(&c).ranks, "{}", d.name().unwrap());
    }
}

/// Torsion `(j, k, factors)` frozen from the determinantal oracle applied to
/// each incoming differential.
const FROZEN_TORSION: [&[(i32, i32, i64)]; 5] = [&[], &[], &[(-3, -5, 2)], &[(-4, -6, 2), (2, 6, 2)], &[]];

#[test]
fn frozen_torsion() {
    for ((name, pd), frozen) in SMALL.iter().zip(FROZEN_TORSION) {
        let c = build_complex(&parse_pd(pd).unwrap()).unwrap();
        let mut oracle = vec![];
        for (&(j, k), m) in c.differentials() {
            for f in smith_oracle(&m.to_dense())
                .into_iter()
                .filter(|f| *f != BigInt::from(1))
            {
                oracle.push((j - 2, k, i64::try_from(f).unwrap()));
            }
        }
        assert_eq!(oracle, frozen, "{name}: oracle drifted");
        let got: Vec<_> = homology_table_with_torsion(&c)
            .torsion
            .unwrap()
            .into_iter()
            .flat_map(|((j, k), fs)| fs.into_iter().map(move |f| (j, k, i64::try_from(f).unwrap())))
            .collect();
        assert_eq!(got, frozen, "{name}");
    }
}
