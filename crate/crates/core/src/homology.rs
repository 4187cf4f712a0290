//! Homology ranks, the bracket they categorify, and the state-sum oracle.
//!
//! The bracket is read off the homology table as
//! `a_k = sum_j i^j rank H_{j,k}` and independently summed over enhanced
//! states as `sum_S i^{sigma(S)} A^{J(S)}`. Both are exact Gaussian-integer
//! polynomials and must agree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::gaussian::{i_pow, GaussianInt};
use crate::linalg::{self, SparseMatrix};
use crate::poly::BracketPolynomial;
use crate::scalar::Scalar;
use crate::state::{resolve_state, Bidegree, ChainComplex, State};

/// Default largest crossing count for the state-sum bracket.
pub const DEFAULT_STATESUM_CAP: usize = 24;

/// Exact rank over the rationals.
pub fn matrix_rank(m: &SparseMatrix<i64>) -> usize {
    linalg::rank(m)
}

/// Ranks of `H_{j,k}`, with optional torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyTable {
    pub crossings: usize,
    /// Nonzero ranks only.
    pub ranks: BTreeMap<Bidegree, usize>,
    /// Invariant factors greater than one, when computed.
    pub torsion: Option<BTreeMap<Bidegree, Vec<BigInt>>>,
}

impl HomologyTable {
    pub fn rank(&self, j: i32, k: i32) -> usize {
        self.ranks.get(&(j, k)).copied().unwrap_or(0)
    }

    /// Highest polynomial degree with nonzero homology.
    pub fn k_max(&self) -> Option<i32> {
        self.ranks.keys().map(|k| k.1).max()
    }

    /// Lowest polynomial degree with nonzero homology.
    pub fn k_min(&self) -> Option<i32> {
        self.ranks.keys().map(|k| k.1).min()
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }
}

/// `rank H_{j,k} = dim C_{j,k} - rank d_{j,k} - rank d_{j+2,k}`.
pub fn homology_table(c: &ChainComplex) -> HomologyTable {
    let ranks_of_d: BTreeMap<Bidegree, usize> = c
        .differentials()
        .par_iter()
        .map(|(&key, m)| (key, matrix_rank(m)))
        .collect();
    let rank_d = |key: Bidegree| ranks_of_d.get(&key).copied().unwrap_or(0);
    let ranks = c
        .generators()
        .iter()
        .map(|(&(j, k), gens)| ((j, k), gens.len() - rank_d((j, k)) - rank_d((j + 2, k))))
        .filter(|(_, r)| *r > 0)
        .collect();
    HomologyTable {
        crossings: c.crossings(),
        ranks,
        torsion: None,
    }
}

/// Ranks plus the torsion of every group, from Smith normal forms of the
/// incoming differentials.
pub fn homology_table_with_torsion(c: &ChainComplex) -> HomologyTable {
    let mut table = homology_table(c);
    let torsion = c
        .generators()
        .keys()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|&(j, k)| {
            let incoming = c.differentials().get(&(j + 2, k))?;
            let factors: Vec<BigInt> = linalg::invariant_factors(incoming)
                .into_iter()
                .filter(|f| !f.is_one())
                .collect();
            (!factors.is_empty()).then_some(((j, k), factors))
        })
        .collect();
    table.torsion = Some(torsion);
    table
}

/// `a_k = sum_j i^j rank H_{j,k}`.
pub fn bracket_from_homology<T: Scalar>(h: &HomologyTable) -> BracketPolynomial<T> {
    let mut b = BracketPolynomial::zero();
    for (&(j, k), &r) in &h.ranks {
        let unit: GaussianInt<T> = i_pow(i64::from(j));
        b.add_term(k, unit.scale(T::from_i64(r as i64)));
    }
    b
}

/// `sum_S i^{sigma(S)} A^{J(S)}` over all enhanced states. Orientations are
/// counted rather than listed: a state with `c` circles has `binom(c, t)`
/// enhancements with `t` clockwise circles, each of degree
/// `sigma + 2(2t - c)`.
pub fn bracket_state_sum<T: Scalar>(d: &Diagram, cap: usize) -> Result<BracketPolynomial<T>> {
    let n = d.len();
    if n > cap || n > 63 {
        return Err(Error::CapExceeded {
            what: "state sum",
            crossings: n,
            cap: cap.min(63),
        });
    }
    let partial: BTreeMap<i32, (T, T)> = (0..1u64 << n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<i32, (T, T)>, bits| {
            let state = State::new(bits, n);
            let sigma = state.sigma();
            let circles = resolve_state(d, state).count;
            let unit: GaussianInt<T> = i_pow(i64::from(sigma));
            let mut binom = T::one();
            for t in 0..=circles {
                let k = sigma + 2 * (2 * t as i32 - circles as i32);
                let slot = acc.entry(k).or_insert_with(|| (T::zero(), T::zero()));
                slot.0 = slot.0.clone() + unit.re.clone() * binom.clone();
                slot.1 = slot.1.clone() + unit.im.clone() * binom.clone();
                binom = binom * T::from_i64((circles - t) as i64) / T::from_i64(t as i64 + 1);
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, (re, im)) in b {
                let slot = a.entry(k).or_insert_with(|| (T::zero(), T::zero()));
                slot.0 = slot.0.clone() + re;
                slot.1 = slot.1.clone() + im;
            }
            a
        });
    Ok(BracketPolynomial::from_terms(
        partial.into_iter().map(|(k, (re, im))| (k, Complex::new(re, im))),
    ))
}

/// `a_degree`, zero when absent.
pub fn coefficient<T: Scalar>(b: &BracketPolynomial<T>, degree: i32) -> GaussianInt<T> {
    b.coefficient(degree)
}

/// The global unit `i^n` by which every coefficient of an `n`-crossing
/// diagram's bracket is a real multiple.
pub fn bracket_phase<T: Scalar>(crossings: usize) -> GaussianInt<T> {
    i_pow(crossings as i64)
}

/// JSON form of a table: `{"ranks": [[j, k, rank], ...], "bracket": [[degree, re, im], ...]}`.
///
/// Ranks are listed by ascending `(j, k)`, bracket terms by descending degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableJson {
    pub ranks: Vec<[i64; 3]>,
    pub bracket: Vec<[i64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<(i32, i32, Vec<String>)>>,
}

impl TableJson {
    pub fn new(h: &HomologyTable, bracket: &BracketPolynomial<i64>) -> Self {
        Self {
            ranks: h
                .ranks
                .iter()
                .map(|(&(j, k), &r)| [i64::from(j), i64::from(k), r as i64])
                .collect(),
            bracket: bracket_triples(bracket),
            torsion: h.torsion.as_ref().map(|t| {
                t.iter()
                    .map(|(&(j, k), fs)| (j, k, fs.iter().map(ToString::to_string).collect()))
                    .collect()
            }),
        }
    }
}

/// `[degree, re, im]` triples by descending degree.
pub fn bracket_triples(b: &BracketPolynomial<i64>) -> Vec<[i64; 3]> {
    b.terms().rev().map(|(d, c)| [i64::from(d), c.re, c.im]).collect()
}
