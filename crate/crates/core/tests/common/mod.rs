#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use khtwist::state::ChainComplex;
use khtwist::Matrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank by textbook Gaussian elimination over the rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone() / pivot.clone();
                for c in col..ncols {
                    let v = a[rank][c].clone() * f.clone();
                    a[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn matrix_rank_oracle(m: &Matrix) -> usize {
    rational_rank(&m.to_dense())
}

/// `rank H_{j,k}` for every bucket, with ranks from the rational oracle.
pub fn homology_oracle(c: &ChainComplex) -> BTreeMap<(i32, i32), usize> {
    let rank_of = |key: (i32, i32)| c.differentials().get(&key).map_or(0, matrix_rank_oracle);
    c.generators()
        .iter()
        .map(|(&(j, k), g)| ((j, k), g.len() - rank_of((j, k)) - rank_of((j + 2, k))))
        .filter(|(_, r)| *r > 0)
        .collect()
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(i, _)| *i != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].clone() * det(&minor);
                if c % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with {
        s.push(n - 1);
    }
    with.extend(subsets(n - 1, k));
    with
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k x k` minors and the `k`-th factor is `d_k / d_{k-1}`.
pub fn smith_oracle(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=nrows.min(ncols) {
        let mut g = BigInt::zero();
        for rs in subsets(nrows, k) {
            for cs in subsets(ncols, k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| BigInt::from(rows[r][c])).collect())
                    .collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}
