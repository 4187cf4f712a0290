//! Smith normal form invariants, used for the optional torsion report.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SparseMatrix;
use crate::scalar::Scalar;

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix, all
/// positive. The number of factors is the rank.
pub fn invariant_factors<T: Scalar>(m: &SparseMatrix<T>) -> Vec<BigInt> {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = (0..m.nrows())
        .map(|r| m.row(r).iter().map(|(c, v)| (*c, v.clone().into())).collect())
        .collect();
    rows.retain(|r| !r.is_empty());

    // Unit pivots contribute a factor 1 and can be peeled off without
    // touching the rest of the normal form.
    let mut units = 0usize;
    while let Some((pr, pc)) = rows
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().find(|(_, v)| v.abs().is_one()).map(|(c, _)| (r, *c)))
    {
        let prow = rows.swap_remove(pr);
        let p = prow[&pc].clone();
        for row in rows.iter_mut() {
            let Some(v) = row.get(&pc).cloned() else { continue };
            let f = v * &p;
            for (c, x) in &prow {
                let e = row.entry(*c).or_insert_with(BigInt::zero);
                *e -= &f * x;
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
        rows.retain(|r| !r.is_empty());
        units += 1;
    }

    let mut col_ids: Vec<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    col_ids.sort_unstable();
    col_ids.dedup();
    let dense: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            col_ids
                .iter()
                .map(|c| r.get(c).cloned().unwrap_or_else(BigInt::zero))
                .collect()
        })
        .collect();

    let mut out = vec![BigInt::one(); units];
    out.extend(dense_smith(dense));
    out
}

/// Diagonal of the Smith normal form of a dense integer matrix, zeros
/// omitted.
pub fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..nrows.min(ncols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pr, pc)) = smallest_entry(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..nrows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                for c in t..ncols {
                    let x = &q * &a[t][c];
                    a[r][c] -= x;
                }
                if !a[r][t].is_zero() {
                    a.swap(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..ncols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let x = &q * &row[t];
                    row[c] -= x;
                }
                if !a[t][c].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row.
            let bad = (t + 1..nrows).find(|&r| (t + 1..ncols).any(|c| !(&a[r][c] % &a[t][t]).is_zero()));
            match bad {
                Some(r) => {
                    for c in t..ncols {
                        let x = a[r][c].clone();
                        a[t][c] += x;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let m = v.abs();
            if best.as_ref().is_none_or(|(b, _, _)| &m < b) {
                best = Some((m, r, c));
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}
