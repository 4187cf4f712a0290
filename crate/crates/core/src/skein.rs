//! Skein triples `(D-, D, D+)` at one crossing and the short exact sequence
//! `0 -> C(D-) -> C(D) -> C(D+) -> 0` relating their complexes.
//!
//! The chosen crossing is moved to the end of the ordering, so the prefix
//! sign rule never sees it and `alpha`, `beta` need no signs. A state of `D`
//! is a state of one smoothing followed by the choice at the last crossing;
//! its circles are those of the smoothed diagram under the same choices.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex;
use serde::Serialize;

use crate::adequacy::check_adequacy;
use crate::diagram::{ArcImage, Diagram, Smoothing};
use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::homology::{bracket_state_sum, homology_table, HomologyTable, DEFAULT_STATESUM_CAP};
use crate::linalg::{self, SparseMatrix};
use crate::poly::BracketPolynomial;
use crate::state::{build_complex_with_cap, Bidegree, ChainComplex, StateCircles, DEFAULT_COMPLEX_CAP};

type Bracket = BracketPolynomial<i64>;

#[derive(Debug, Clone)]
pub struct SkeinTriple {
    pub d_minus: Diagram,
    /// The input with the chosen crossing moved last.
    pub d: Diagram,
    pub d_plus: Diagram,
    /// Index of the chosen crossing in the input ordering.
    pub crossing: usize,
    minus_images: Vec<ArcImage>,
    plus_images: Vec<ArcImage>,
}

pub fn skein_triple(d: &Diagram, c: usize) -> Result<SkeinTriple> {
    let reordered = d.with_crossing_last(c)?;
    let last = reordered.len() - 1;
    let minus = reordered.smooth(last, Smoothing::Negative)?;
    let plus = reordered.smooth(last, Smoothing::Positive)?;
    Ok(SkeinTriple {
        d_minus: minus.diagram,
        d: reordered,
        d_plus: plus.diagram,
        crossing: c,
        minus_images: minus.arc_images,
        plus_images: plus.arc_images,
    })
}

impl SkeinTriple {
    fn last(&self) -> usize {
        self.d.len() - 1
    }
}

/// The three complexes of a triple.
#[derive(Debug, Clone)]
pub struct TripleComplexes {
    pub minus: ChainComplex,
    pub d: ChainComplex,
    pub plus: ChainComplex,
}

pub fn build_triple_complexes(t: &SkeinTriple, cap: usize) -> Result<TripleComplexes> {
    let (d, (minus, plus)) = rayon::join(
        || build_complex_with_cap(&t.d, cap),
        || {
            rayon::join(
                || build_complex_with_cap(&t.d_minus, cap),
                || build_complex_with_cap(&t.d_plus, cap),
            )
        },
    );
    Ok(TripleComplexes {
        minus: minus?,
        d: d?,
        plus: plus?,
    })
}

/// A degree-homogeneous map of bigraded complexes, stored blockwise.
#[derive(Debug, Clone)]
pub struct ChainMap {
    pub shift: Bidegree,
    /// Keyed by source bidegree; rows index the target bucket at
    /// `source + shift`.
    pub blocks: BTreeMap<Bidegree, SparseMatrix<i64>>,
}

impl ChainMap {
    /// The block at `key`, or the zero map of the right shape.
    pub fn block(&self, key: Bidegree, source: &ChainComplex, target: &ChainComplex) -> SparseMatrix<i64> {
        self.blocks
            .get(&key)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(target.dim(offset(key, self.shift)), source.dim(key)))
    }

    /// Source keys whose square `d f = f d` fails.
    pub fn commutator_failures(&self, source: &ChainComplex, target: &ChainComplex) -> Vec<Bidegree> {
        source
            .generators()
            .keys()
            .copied()
            .filter(|&key| !self.commutes_at(key, source, target, 1))
            .collect()
    }

    /// Source keys where `d f + f d` fails to vanish.
    pub fn anticommutator_failures(&self, source: &ChainComplex, target: &ChainComplex) -> Vec<Bidegree> {
        source
            .generators()
            .keys()
            .copied()
            .filter(|&key| !self.commutes_at(key, source, target, -1))
            .collect()
    }

    fn commutes_at(&self, key: Bidegree, source: &ChainComplex, target: &ChainComplex, sign: i64) -> bool {
        let lhs = target
            .differential(offset(key, self.shift))
            .mul(&self.block(key, source, target));
        let rhs = self
            .block((key.0 - 2, key.1), source, target)
            .mul(&source.differential(key));
        let rhs = if sign < 0 { rhs.map(|v| -v) } else { rhs };
        lhs.sub(&rhs).is_zero()
    }

    /// Bidegree shifts actually realised by nonzero entries.
    pub fn realised_shifts(&self) -> BTreeSet<Bidegree> {
        self.blocks
            .values()
            .filter(|m| !m.is_zero())
            .map(|_| self.shift)
            .collect()
    }
}

fn offset(key: Bidegree, by: Bidegree) -> Bidegree {
    (key.0 + by.0, key.1 + by.1)
}

/// Sends every circle of a state of the big diagram to the circle of the
/// smoothed diagram containing the same arcs.
fn circle_correspondence(
    big: &Diagram,
    big_circles: &StateCircles,
    small: &Diagram,
    small_circles: &StateCircles,
    images: &[ArcImage],
) -> Result<Vec<usize>> {
    if big_circles.count != small_circles.count {
        return Err(Error::InternalInconsistency(format!(
            "circle counts {} and {} differ across a smoothing",
            big_circles.count, small_circles.count
        )));
    }
    let mut map = vec![usize::MAX; big_circles.count];
    let mut assign = |from: usize, to: usize| {
        if map[from] != usize::MAX && map[from] != to {
            return Err(Error::InternalInconsistency(format!(
                "circle {from} has two images across a smoothing"
            )));
        }
        map[from] = to;
        Ok(())
    };
    for a in 1..big_circles.circle_of_arc.len() {
        let to = match images[a] {
            ArcImage::Arc(b) => small_circles.circle_of_arc[b as usize] as usize,
            ArcImage::Loop(l) => small_circles.loop_circle(small.free_loops(), l),
        };
        assign(big_circles.circle_of_arc[a] as usize, to)?;
    }
    for l in 0..big.free_loops() {
        assign(
            big_circles.loop_circle(big.free_loops(), l),
            small_circles.loop_circle(small.free_loops(), l),
        )?;
    }
    let mut seen = vec![false; map.len()];
    for &to in &map {
        if to == usize::MAX || std::mem::replace(&mut seen[to], true) {
            return Err(Error::InternalInconsistency(
                "circle correspondence is not a bijection".into(),
            ));
        }
    }
    Ok(map)
}

fn translate(orientation: u64, map: &[usize]) -> u64 {
    map.iter()
        .enumerate()
        .filter(|(c, _)| orientation >> c & 1 == 1)
        .fold(0, |acc, (_, &to)| acc | 1 << to)
}

/// For each generator of `D` whose last choice is `bit`: its bucket and index
/// in `D`, and the bucket and index of the matching generator of `small`.
#[allow(clippy::type_complexity)]
fn matching_generators(
    t: &SkeinTriple,
    cx: &TripleComplexes,
    bit: bool,
) -> Result<Vec<((Bidegree, usize), (Bidegree, usize))>> {
    let last = t.last();
    let (small, small_cx, images) = if bit {
        (&t.d_minus, &cx.minus, &t.minus_images)
    } else {
        (&t.d_plus, &cx.plus, &t.plus_images)
    };
    let mut maps: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut out = Vec::new();
    for (&key, gens) in cx.d.generators() {
        for (idx, g) in gens.iter().enumerate().filter(|(_, g)| g.state.choice(last) == bit) {
            let bits = g.state.bits();
            let small_bits = bits & !(1u64 << last);
            let map = match maps.get(&bits) {
                Some(m) => m,
                None => {
                    let m =
                        circle_correspondence(&t.d, cx.d.circles(bits), small, small_cx.circles(small_bits), images)?;
                    maps.entry(bits).or_insert(m)
                }
            };
            let pos = small_cx
                .position(small_bits, translate(g.orientation, map))
                .ok_or_else(|| Error::InternalInconsistency("no matching generator".into()))?;
            out.push(((key, idx), pos));
        }
    }
    Ok(out)
}

fn assemble(
    shift: Bidegree,
    source: &ChainComplex,
    target: &ChainComplex,
    entries: Vec<(Bidegree, usize, Bidegree, usize)>,
) -> Result<ChainMap> {
    let mut grouped: BTreeMap<Bidegree, Vec<(usize, usize, i64)>> = BTreeMap::new();
    for (skey, col, tkey, row) in entries {
        if offset(skey, shift) != tkey {
            return Err(Error::InternalInconsistency(format!(
                "generator at {skey:?} maps to {tkey:?}, expected shift {shift:?}"
            )));
        }
        grouped.entry(skey).or_default().push((row, col, 1));
    }
    let blocks = source
        .generators()
        .keys()
        .map(|&key| {
            let trip = grouped.remove(&key).unwrap_or_default();
            (
                key,
                SparseMatrix::from_triplets(target.dim(offset(key, shift)), source.dim(key), trip),
            )
        })
        .collect();
    Ok(ChainMap { shift, blocks })
}

/// `alpha: C_{j,k}(D-) -> C_{j-1,k-1}(D)`, `s -> (s, 1)` with the same
/// circle orientations.
pub fn build_alpha(t: &SkeinTriple, cx: &TripleComplexes) -> Result<ChainMap> {
    let entries = matching_generators(t, cx, true)?
        .into_iter()
        .map(|((dk, di), (mk, mi))| (mk, mi, dk, di))
        .collect();
    assemble((-1, -1), &cx.minus, &cx.d, entries)
}

/// `beta: C_{j,k}(D) -> C_{j-1,k-1}(D+)`, `(s, 0) -> s` and `(s, 1) -> 0`.
pub fn build_beta(t: &SkeinTriple, cx: &TripleComplexes) -> Result<ChainMap> {
    let entries = matching_generators(t, cx, false)?
        .into_iter()
        .map(|((dk, di), (pk, pi))| (dk, di, pk, pi))
        .collect();
    assemble((-1, -1), &cx.d, &cx.plus, entries)
}

/// The part of the differential of `D` that changes the last crossing,
/// read as a map `C(D+) -> C(D-)` through the section of `beta` and the
/// inverse of `alpha`. It changes the polynomial degree by 2 and
/// anticommutes with the differentials.
pub fn crossing_change_map(t: &SkeinTriple, cx: &TripleComplexes) -> Result<ChainMap> {
    let last = t.last();
    let plus_of: BTreeMap<(Bidegree, usize), (Bidegree, usize)> =
        matching_generators(t, cx, false)?.into_iter().collect();
    let minus_of: BTreeMap<(Bidegree, usize), (Bidegree, usize)> =
        matching_generators(t, cx, true)?.into_iter().collect();
    let mut entries = Vec::new();
    for (&key, m) in cx.d.differentials() {
        let source = cx.d.bucket(key);
        let target = cx.d.bucket((key.0 - 2, key.1));
        for tr in m.triplets() {
            if source[tr.col].state.choice(last) || !target[tr.row].state.choice(last) {
                continue;
            }
            let (pk, pi) = plus_of[&(key, tr.col)];
            let (mk, mi) = minus_of[&((key.0 - 2, key.1), tr.row)];
            entries.push((pk, pi, mk, mi, tr.value));
        }
    }
    let shift = (0, 2);
    let mut grouped: BTreeMap<Bidegree, Vec<(usize, usize, i64)>> = BTreeMap::new();
    for (pk, pi, mk, mi, v) in entries {
        if offset(pk, shift) != mk {
            return Err(Error::InternalInconsistency(format!(
                "crossing change sends {pk:?} to {mk:?}"
            )));
        }
        grouped.entry(pk).or_default().push((mi, pi, v));
    }
    let blocks = cx
        .plus
        .generators()
        .keys()
        .map(|&key| {
            let trip = grouped.remove(&key).unwrap_or_default();
            (
                key,
                SparseMatrix::from_triplets(cx.minus.dim(offset(key, shift)), cx.plus.dim(key), trip),
            )
        })
        .collect();
    Ok(ChainMap { shift, blocks })
}

/// Exactness of `C_{j+1,k+1}(D-) -> C_{j,k}(D) -> C_{j-1,k-1}(D+)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BucketExactness {
    pub j: i32,
    pub k: i32,
    pub dim_minus: usize,
    pub dim: usize,
    pub dim_plus: usize,
    pub rank_alpha: usize,
    pub rank_beta: usize,
    pub alpha_injective: bool,
    pub beta_surjective: bool,
    pub image_is_kernel: bool,
}

impl BucketExactness {
    pub fn exact(&self) -> bool {
        self.alpha_injective
            && self.beta_surjective
            && self.image_is_kernel
            && self.dim == self.dim_minus + self.dim_plus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SesReport {
    pub crossing: usize,
    pub buckets: Vec<BucketExactness>,
    pub alpha_commutator_failures: Vec<Bidegree>,
    pub beta_commutator_failures: Vec<Bidegree>,
    /// Bidegree shifts of the nonzero blocks of `alpha` and `beta`.
    pub alpha_shifts: Vec<Bidegree>,
    pub beta_shifts: Vec<Bidegree>,
    /// Shifts of the crossing-change map and whether it anticommutes with
    /// the differentials.
    pub crossing_change_shifts: Vec<Bidegree>,
    pub crossing_change_anticommutes: bool,
}

impl SesReport {
    pub fn exact(&self) -> bool {
        self.buckets.iter().all(BucketExactness::exact)
            && self.alpha_commutator_failures.is_empty()
            && self.beta_commutator_failures.is_empty()
            && self.alpha_shifts.iter().all(|&s| s == (-1, -1))
            && self.beta_shifts.iter().all(|&s| s == (-1, -1))
            && self.crossing_change_shifts.iter().all(|&s| s == (0, 2))
            && self.crossing_change_anticommutes
    }
}

pub fn check_ses(t: &SkeinTriple, cx: &TripleComplexes) -> Result<SesReport> {
    let alpha = build_alpha(t, cx)?;
    let beta = build_beta(t, cx)?;
    let change = crossing_change_map(t, cx)?;

    let mut keys: BTreeSet<Bidegree> = cx.d.generators().keys().copied().collect();
    keys.extend(cx.minus.generators().keys().map(|&k| offset(k, (-1, -1))));
    keys.extend(cx.plus.generators().keys().map(|&k| offset(k, (1, 1))));

    let buckets = keys
        .into_iter()
        .map(|(j, k)| {
            let a = alpha.block((j + 1, k + 1), &cx.minus, &cx.d);
            let b = beta.block((j, k), &cx.d, &cx.plus);
            let rank_alpha = linalg::rank(&a);
            let rank_beta = linalg::rank(&b);
            let dim = cx.d.dim((j, k));
            BucketExactness {
                j,
                k,
                dim_minus: a.ncols(),
                dim,
                dim_plus: b.nrows(),
                rank_alpha,
                rank_beta,
                alpha_injective: rank_alpha == a.ncols(),
                beta_surjective: rank_beta == b.nrows(),
                image_is_kernel: b.mul(&a).is_zero() && rank_alpha + rank_beta == dim,
            }
        })
        .collect();

    Ok(SesReport {
        crossing: t.crossing,
        buckets,
        alpha_commutator_failures: alpha.commutator_failures(&cx.minus, &cx.d),
        beta_commutator_failures: beta.commutator_failures(&cx.d, &cx.plus),
        alpha_shifts: alpha.realised_shifts().into_iter().collect(),
        beta_shifts: beta.realised_shifts().into_iter().collect(),
        crossing_change_shifts: change.realised_shifts().into_iter().collect(),
        crossing_change_anticommutes: change.anticommutator_failures(&cx.plus, &cx.minus).is_empty(),
    })
}

/// One exact identity between Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: [i64; 2],
    pub rhs: [i64; 2],
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: impl Into<String>, lhs: GaussianInt<i64>, rhs: GaussianInt<i64>) -> Self {
        Self {
            name: name.into(),
            holds: lhs == rhs,
            lhs: [lhs.re, lhs.im],
            rhs: [rhs.re, rhs.im],
        }
    }
}

fn i_unit() -> GaussianInt<i64> {
    Complex::new(0, 1)
}

/// Rank bookkeeping for one polynomial degree `k` of `D`: the exact sequence
/// `H_{j+1,k+1}(D-) -> H_{j,k}(D) -> H_{j-1,k-1}(D+) -> H_{j-1,k+1}(D-) -> ...`
/// has vanishing alternating rank sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeClassSum {
    pub k: i32,
    pub alternating_sum: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LesReport {
    pub crossing: usize,
    pub degree_classes: Vec<DegreeClassSum>,
    /// `a_{m+1}(D-) + i a_m(D) - a_{m-1}(D+) = 0` at `m = k - 4`, as printed.
    pub coefficient_identity: IdentityCheck,
    /// `a_{m+1}(D-) - i a_m(D) - a_{m-1}(D+) = 0`, the form the rank sums
    /// give, at every degree `m` of `D`.
    pub coefficient_identity_corrected: Vec<IdentityCheck>,
}

impl LesReport {
    pub fn rank_sums_vanish(&self) -> bool {
        self.degree_classes.iter().all(|c| c.alternating_sum == 0)
    }

    pub fn corrected_holds(&self) -> bool {
        self.coefficient_identity_corrected.iter().all(|c| c.holds)
    }
}

/// Homology tables and brackets of a triple.
#[derive(Debug, Clone)]
pub struct TripleHomology {
    pub minus: HomologyTable,
    pub d: HomologyTable,
    pub plus: HomologyTable,
}

pub fn triple_homology(cx: &TripleComplexes) -> TripleHomology {
    let (d, (minus, plus)) = rayon::join(
        || homology_table(&cx.d),
        || rayon::join(|| homology_table(&cx.minus), || homology_table(&cx.plus)),
    );
    TripleHomology { minus, d, plus }
}

pub fn check_les_identities(t: &SkeinTriple, h: &TripleHomology) -> LesReport {
    use crate::homology::bracket_from_homology;
    let n = t.d.len() as i32;
    let mut ks: BTreeSet<i32> = h.d.ranks.keys().map(|x| x.1).collect();
    ks.extend(h.minus.ranks.keys().map(|x| x.1 - 1));
    ks.extend(h.plus.ranks.keys().map(|x| x.1 + 1));
    let degree_classes = ks
        .iter()
        .map(|&k| {
            let alternating_sum = (-n - 2..=n + 2)
                .filter(|j| (j - n).rem_euclid(2) == 0)
                .map(|j| {
                    let sign = if ((n - j) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
                    let term =
                        h.minus.rank(j + 1, k + 1) as i64 - h.d.rank(j, k) as i64 + h.plus.rank(j - 1, k - 1) as i64;
                    sign * term
                })
                .sum();
            DegreeClassSum { k, alternating_sum }
        })
        .collect();

    let b: Bracket = bracket_from_homology(&h.d);
    let bm: Bracket = bracket_from_homology(&h.minus);
    let bp: Bracket = bracket_from_homology(&h.plus);
    let i = i_unit();
    let printed = |m: i32| bm.coefficient(m + 1) + i * b.coefficient(m) - bp.coefficient(m - 1);
    let corrected = |m: i32| bm.coefficient(m + 1) - i * b.coefficient(m) - bp.coefficient(m - 1);
    let top = b.max_degree().unwrap_or(0);
    LesReport {
        crossing: t.crossing,
        degree_classes,
        coefficient_identity: IdentityCheck::new(
            format!("a_{{k-3}}(D-) + i a_{{k-4}}(D) - a_{{k-5}}(D+) = 0 at k = {top}"),
            printed(top - 4),
            Complex::new(0, 0),
        ),
        coefficient_identity_corrected: ks
            .iter()
            .map(|&m| {
                IdentityCheck::new(
                    format!("a_{}(D-) - i a_{m}(D) - a_{}(D+) = 0", m + 1, m - 1),
                    corrected(m),
                    Complex::new(0, 0),
                )
            })
            .collect(),
    }
}

/// The four extreme-coefficient identities at one crossing, as printed and
/// with the multiplier `-i` that the state sum produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub crossing: usize,
    pub k: i32,
    pub l: i32,
    pub printed: Vec<IdentityCheck>,
    pub corrected: Vec<IdentityCheck>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.printed.iter().all(|c| c.holds)
    }

    pub fn corrected_holds(&self) -> bool {
        self.corrected.iter().all(|c| c.holds)
    }
}

/// Brackets of a triple by the state sum.
pub fn triple_brackets(t: &SkeinTriple) -> Result<(Bracket, Bracket, Bracket)> {
    let b = bracket_state_sum(&t.d, DEFAULT_STATESUM_CAP)?;
    let bm = bracket_state_sum(&t.d_minus, DEFAULT_STATESUM_CAP)?;
    let bp = bracket_state_sum(&t.d_plus, DEFAULT_STATESUM_CAP)?;
    Ok((bm, b, bp))
}

pub fn check_lemma(d: &Diagram, c: usize) -> Result<LemmaReport> {
    require_reduced_alternating(d)?;
    let t = skein_triple(d, c)?;
    let (bm, b, bp) = triple_brackets(&t)?;
    Ok(lemma_from_brackets(c, &bm, &b, &bp))
}

pub(crate) fn require_reduced_alternating(d: &Diagram) -> Result<()> {
    if d.is_empty() {
        return Err(Error::PreconditionViolated("diagram has no crossings".into()));
    }
    if !d.is_alternating() {
        return Err(Error::PreconditionViolated("diagram is not alternating".into()));
    }
    if !d.is_reduced() {
        return Err(Error::PreconditionViolated(format!(
            "diagram has nugatory crossings {:?}",
            d.nugatory_crossings()
        )));
    }
    Ok(())
}

pub fn lemma_from_brackets(crossing: usize, bm: &Bracket, b: &Bracket, bp: &Bracket) -> LemmaReport {
    let k = b.max_degree().unwrap_or(0);
    let l = b.min_degree().unwrap_or(0);
    let a = |p: &Bracket, m: i32| p.coefficient(m);
    let i = i_unit();
    let rhs = [
        (format!("i a_{k}(D) = a_{}(D+)", k - 1), k, a(bp, k - 1)),
        (
            format!("i a_{}(D) = a_{}(D+) - a_{}(D-)", k - 4, k - 5, k - 3),
            k - 4,
            a(bp, k - 5) - a(bm, k - 3),
        ),
        (format!("i a_{l}(D) = -a_{}(D-)", l + 1), l, -a(bm, l + 1)),
        (
            format!("i a_{}(D) = a_{}(D+) - a_{}(D-)", l + 4, l + 3, l + 5),
            l + 4,
            a(bp, l + 3) - a(bm, l + 5),
        ),
    ];
    LemmaReport {
        crossing,
        k,
        l,
        printed: rhs
            .iter()
            .map(|(name, m, r)| IdentityCheck::new(name.clone(), i * a(b, *m), *r))
            .collect(),
        corrected: rhs
            .iter()
            .map(|(name, m, r)| IdentityCheck::new(name.replacen("i a", "-i a", 1), -i * a(b, *m), *r))
            .collect(),
    }
}

/// Where the supports of the three brackets sit relative to `k = k_max(D)`
/// and `l = k_min(D)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub crossing: usize,
    pub k: i32,
    pub l: i32,
    /// Support of `<D>` lies in `l, l+4, ..., k`. Interior gaps occur, e.g.
    /// the trefoil has `a_{l+4} = 0`.
    pub d_progression: bool,
    /// Supports of `<D->` and `<D+>` lie in `l+1 .. k-3` and `l+3 .. k-1`,
    /// stepping by 4.
    pub minus_window: bool,
    pub plus_window: bool,
    pub minus_top_attained: bool,
    pub minus_bottom_attained: bool,
    pub plus_top_attained: bool,
    pub plus_bottom_attained: bool,
    /// Endpoints that must be attained: top of a plus-adequate smoothing,
    /// bottom of a minus-adequate one.
    pub required_endpoints_attained: bool,
}

impl SpanReport {
    pub fn holds(&self) -> bool {
        self.d_progression && self.minus_window && self.plus_window && self.required_endpoints_attained
    }
}

fn in_window(b: &Bracket, lo: i32, hi: i32) -> bool {
    b.support().all(|m| m >= lo && m <= hi && (m - lo).rem_euclid(4) == 0)
}

pub fn check_spans(t: &SkeinTriple) -> Result<SpanReport> {
    let (bm, b, bp) = triple_brackets(t)?;
    let k = b.max_degree().unwrap_or(0);
    let l = b.min_degree().unwrap_or(0);
    let am = check_adequacy(&t.d_minus);
    let ap = check_adequacy(&t.d_plus);
    let nz = |p: &Bracket, m: i32| p.coefficient(m) != Complex::new(0, 0);
    let report = SpanReport {
        crossing: t.crossing,
        k,
        l,
        d_progression: in_window(&b, l, k),
        minus_window: in_window(&bm, l + 1, k - 3),
        plus_window: in_window(&bp, l + 3, k - 1),
        minus_top_attained: nz(&bm, k - 3),
        minus_bottom_attained: nz(&bm, l + 1),
        plus_top_attained: nz(&bp, k - 1),
        plus_bottom_attained: nz(&bp, l + 3),
        required_endpoints_attained: true,
    };
    let required = [
        (am.plus_adequate, report.minus_top_attained),
        (am.minus_adequate, report.minus_bottom_attained),
        (ap.plus_adequate, report.plus_top_attained),
        (ap.minus_adequate, report.plus_bottom_attained),
    ]
    .iter()
    .all(|&(needed, attained)| !needed || attained);
    Ok(SpanReport {
        required_endpoints_attained: required,
        ..report
    })
}

/// Everything checked at one crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeinReport {
    pub crossing: usize,
    pub ses: SesReport,
    pub les: LesReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma: Option<LemmaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_skipped: Option<String>,
}

/// SES, LES and (for reduced alternating input) Lemma checks at crossing `c`.
pub fn analyze_crossing(d: &Diagram, c: usize, cap: usize) -> Result<SkeinReport> {
    let t = skein_triple(d, c)?;
    let cx = build_triple_complexes(&t, cap)?;
    let ses = check_ses(&t, &cx)?;
    let les = check_les_identities(&t, &triple_homology(&cx));
    let (lemma, lemma_skipped) = match check_lemma(d, c) {
        Ok(r) => (Some(r), None),
        Err(Error::PreconditionViolated(why)) => (None, Some(why)),
        Err(e) => return Err(e),
    };
    Ok(SkeinReport {
        crossing: c,
        ses,
        les,
        lemma,
        lemma_skipped,
    })
}

/// [`analyze_crossing`] with the default complex cap.
pub fn analyze_crossing_default(d: &Diagram, c: usize) -> Result<SkeinReport> {
    analyze_crossing(d, c, DEFAULT_COMPLEX_CAP)
}
