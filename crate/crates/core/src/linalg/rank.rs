//! Rank over the rationals by division-free elimination.
//!
//! Small matrices go through dense Bareiss elimination; larger ones through a
//! sparse elimination that prefers unit pivots on short rows and keeps rows
//! primitive by dividing out their content. Both paths use checked
//! arithmetic and report [`Overflow`] instead of wrapping; [`rank`] retries
//! on [`BigInt`] when that happens.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::SparseMatrix;
use crate::scalar::{self, Overflow, Scalar};

/// Matrices with both dimensions at most this size use the dense path.
pub const DENSE_CUTOFF: usize = 64;

/// Exact rank over the rationals.
pub fn rank<T: Scalar>(m: &SparseMatrix<T>) -> usize {
    match try_rank(m) {
        Ok(r) => r,
        Err(Overflow) => try_rank(&m.map(|v| -> BigInt { v.clone().into() }))
            .expect("arbitrary precision elimination cannot overflow"),
    }
}

/// Exact rank in the scalar type `T`, failing if an intermediate overflows.
pub fn try_rank<T: Scalar>(m: &SparseMatrix<T>) -> Result<usize, Overflow> {
    if m.nrows() == 0 || m.ncols() == 0 || m.is_zero() {
        return Ok(0);
    }
    if m.nrows() <= DENSE_CUTOFF && m.ncols() <= DENSE_CUTOFF {
        bareiss_rank(m.to_dense())
    } else {
        sparse_rank(m.clone())
    }
}

/// Fraction-free Gaussian elimination (Bareiss) on a dense matrix.
pub fn bareiss_rank<T: Scalar>(mut a: Vec<Vec<T>>) -> Result<usize, Overflow> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = a[r][col].clone();
            for c in col + 1..ncols {
                // (pivot * a[r][c] - factor * a[rank][c]) / prev, exact by Sylvester's identity.
                let lhs = scalar::mul(&pivot, &a[r][c])?;
                let rhs = scalar::mul(&factor, &a[rank][c])?;
                a[r][c] = scalar::sub(&lhs, &rhs)? / prev.clone();
            }
            a[r][col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}

fn content<T: Scalar>(row: &[(usize, T)]) -> T {
    row.iter().fold(T::zero(), |g, (_, v)| g.gcd(v))
}

/// `scale_a * a - scale_b * b` for sorted sparse rows.
fn combine<T: Scalar>(
    scale_a: &T,
    a: &[(usize, T)],
    scale_b: &T,
    b: &[(usize, T)],
) -> Result<Vec<(usize, T)>, Overflow> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ca < cb {
            i += 1;
            (ca, scalar::mul(scale_a, &a[i - 1].1)?)
        } else if cb < ca {
            j += 1;
            (cb, -scalar::mul(scale_b, &b[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            let x = scalar::mul(scale_a, &a[i - 1].1)?;
            let y = scalar::mul(scale_b, &b[j - 1].1)?;
            (ca, scalar::sub(&x, &y)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Ok(out)
}

fn sparse_rank<T: Scalar>(m: SparseMatrix<T>) -> Result<usize, Overflow> {
    let ncols = m.ncols();
    let mut rows: Vec<Option<Vec<(usize, T)>>> = m
        .into_rows()
        .into_iter()
        .map(|r| (!r.is_empty()).then_some(r))
        .collect();
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row.iter().flatten() {
            cols[*c].insert(r);
        }
    }

    let mut rank = 0;
    loop {
        // Pivot: shortest row holding a unit entry, else shortest row.
        let mut best: Option<(bool, usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            let Some(row) = row else { continue };
            let has_unit = row.iter().any(|(_, v)| v.is_unit());
            let key = (!has_unit, row.len());
            if best.is_none_or(|(u, l, _)| key < (u, l)) {
                best = Some((key.0, key.1, r));
                if key == (false, 1) {
                    break;
                }
            }
        }
        let Some((_, _, pr)) = best else { break };
        let prow = rows[pr].take().expect("active pivot row");
        let (pc, pval) = prow
            .iter()
            .filter(|(_, v)| v.is_unit() || !prow.iter().any(|(_, w)| w.is_unit()))
            .min_by_key(|(c, v)| (cols[*c].len(), v.abs().into()))
            .map(|(c, v)| (*c, v.clone()))
            .expect("nonempty pivot row");
        for (c, _) in &prow {
            cols[*c].remove(&pr);
        }
        rank += 1;

        let targets: Vec<usize> = cols[pc].iter().copied().collect();
        for r in targets {
            let row = rows[r].take().expect("indexed row is active");
            for (c, _) in &row {
                cols[*c].remove(&r);
            }
            let v = row
                .iter()
                .find(|(c, _)| *c == pc)
                .map(|(_, v)| v.clone())
                .expect("row indexed under pivot column");
            let mut new_row = if pval.is_unit() {
                let f = v * pval.clone();
                combine(&T::one(), &row, &f, &prow)?
            } else {
                let g = pval.gcd(&v);
                combine(&(pval.clone() / g.clone()), &row, &(v / g), &prow)?
            };
            let g = content(&new_row);
            if !g.is_zero() && !g.is_one() {
                for (_, x) in new_row.iter_mut() {
                    *x = x.clone() / g.clone();
                }
            }
            if !new_row.is_empty() {
                for (c, _) in &new_row {
                    cols[*c].insert(r);
                }
                rows[r] = Some(new_row);
            }
        }
    }
    Ok(rank)
}
