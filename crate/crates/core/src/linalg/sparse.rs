use std::collections::BTreeMap;

use serde::Serialize;

use crate::scalar::Scalar;

/// Row-major sparse matrix with exact integer entries.
///
/// Each row is kept sorted by column with no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, T)>>,
}

/// One nonzero entry, as exported in debug dumps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triplet<T> {
    pub row: usize,
    pub col: usize,
    pub value: T,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].push((i, T::one()));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions
    /// are summed; entries that cancel to zero are dropped.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); nrows];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "entry ({r}, {c}) outside {nrows}x{ncols}");
            let slot = acc[r].entry(c).or_insert_with(T::zero);
            *slot = slot.clone() + v;
        }
        let rows = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self { nrows, ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let trip = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(c, v)| (r, c, v.clone()))
        });
        Self::from_triplets(nrows, ncols, trip)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.rows[r].binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) => self.rows[r][i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = Triplet<T>> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().map(move |(c, v)| Triplet {
                row: r,
                col: *c,
                value: v.clone(),
            })
        })
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                out[r][*c] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                rows[*c].push((r, v.clone()));
            }
        }
        Self {
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(c, v)| (*c, f(v))).collect())
                .collect(),
        }
    }

    /// Matrix product `self * rhs`.
    ///
    /// # Panics
    /// If the inner dimensions disagree.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in product");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, T> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &rhs.rows[*k] {
                        let slot = acc.entry(*c).or_insert_with(T::zero);
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Self {
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        }
    }

    /// Entrywise difference `self - rhs`.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let trip = self
            .triplets()
            .map(|t| (t.row, t.col, t.value))
            .chain(rhs.triplets().map(|t| (t.row, t.col, -t.value)));
        Self::from_triplets(self.nrows, self.ncols, trip)
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<(usize, T)>> {
        self.rows
    }
}
