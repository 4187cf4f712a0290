//! Kauffman states, enhanced states and the bigraded chain complex.
//!
//! A state assigns `0` (positive smoothing) or `1` (negative smoothing) to
//! every crossing. An enhanced state additionally labels every circle of the
//! smoothing clockwise or counterclockwise. Generators are graded by
//! `j = sigma` and `k = J = sigma + 2 tau`; the differential changes one `0`
//! to a `1`, so it lowers `j` by two and preserves `k`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{Diagram, Smoothing};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, Triplet};

/// Default largest crossing count for which full complexes are built.
pub const DEFAULT_COMPLEX_CAP: usize = 14;

/// Bidegree `(j, k)`: homological degree `sigma` and polynomial degree `J`.
pub type Bidegree = (i32, i32);

/// A Kauffman state: bit `i` set means crossing `i` is smoothed negatively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct State {
    bits: u64,
    len: usize,
}

impl State {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= 63, "at most 63 crossings fit in a state");
        debug_assert!(len == 63 || bits >> len == 0);
        Self { bits, len }
    }

    pub fn all_positive(len: usize) -> Self {
        Self::new(0, len)
    }

    pub fn all_negative(len: usize) -> Self {
        Self::new(if len == 0 { 0 } else { u64::MAX >> (64 - len) }, len)
    }

    /// From a tuple of `0`/`1` entries.
    pub fn from_choices(choices: &[u8]) -> Self {
        let bits = choices
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &c)| acc | (u64::from(c != 0) << i));
        Self::new(bits, choices.len())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry `i` of the tuple: `true` for a negative smoothing.
    pub fn choice(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn choices(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.choice(i))).collect()
    }

    pub fn toggled(&self, i: usize) -> Self {
        Self::new(self.bits ^ (1 << i), self.len)
    }

    pub fn negative_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Number of positive minus number of negative smoothings.
    pub fn sigma(&self) -> i32 {
        self.len as i32 - 2 * self.negative_count() as i32
    }

    /// Number of `1` entries strictly before position `i`.
    pub fn ones_before(&self, i: usize) -> u32 {
        (self.bits & ((1u64 << i) - 1)).count_ones()
    }

    /// Lexicographic comparison of the `0`/`1` tuples.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        lex_key(self.bits, self.len).cmp(&lex_key(other.bits, other.len))
    }
}

/// Bit-reversed key so that numeric order is tuple order with entry 0 first.
fn lex_key(bits: u64, len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        bits.reverse_bits() >> (64 - len)
    }
}

/// Inverse of [`lex_key`]: the `m`-th tuple of length `len` in
/// lexicographic order.
fn nth_lex(m: u64, len: usize) -> u64 {
    lex_key(m, len)
}

/// The circles of one state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateCircles {
    /// Circle index of every arc, indexed by arc label (entry 0 unused).
    /// Circles are numbered by their smallest arc; free loops come last.
    pub circle_of_arc: Vec<u8>,
    pub count: usize,
}

impl StateCircles {
    /// Index of the circle for free loop `l` of the diagram.
    pub fn loop_circle(&self, free_loops: usize, l: usize) -> usize {
        self.count - free_loops + l
    }

    /// Arc labels grouped by circle (free loops have none).
    pub fn arcs_by_circle(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.count];
        for (a, &c) in self.circle_of_arc.iter().enumerate().skip(1) {
            out[c as usize].push(a as u32);
        }
        out
    }
}

/// Smooths every crossing as `state` prescribes and groups arcs into circles
/// with a union-find over the joined arc ends.
pub fn resolve_state(d: &Diagram, state: State) -> StateCircles {
    assert_eq!(state.len(), d.len(), "state length must match crossing count");
    let m = d.arc_count();
    let mut uf = UnionFind::<usize>::new(m + 1);
    for (i, x) in d.crossings().iter().enumerate() {
        for (p, q) in Smoothing::from_bit(state.choice(i)).pairs() {
            uf.union(x.arcs[p] as usize, x.arcs[q] as usize);
        }
    }
    let mut label = vec![u8::MAX; m + 1];
    let mut circle_of_arc = vec![0u8; m + 1];
    let mut count = 0usize;
    for a in 1..=m {
        let r = uf.find(a);
        if label[r] == u8::MAX {
            label[r] = u8::try_from(count).expect("fewer than 255 circles");
            count += 1;
        }
        circle_of_arc[a] = label[r];
    }
    StateCircles {
        circle_of_arc,
        count: count + d.free_loops(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

/// A state with an orientation label per circle.
///
/// Bit `c` of `orientation` set means circle `c` is clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EnhancedState {
    pub state: State,
    pub orientation: u64,
    pub circles: usize,
}

impl EnhancedState {
    pub fn new(state: State, orientation: u64, circles: usize) -> Self {
        debug_assert!(circles == 64 || orientation >> circles == 0);
        Self {
            state,
            orientation,
            circles,
        }
    }

    pub fn orientation_of(&self, circle: usize) -> Orientation {
        if self.orientation >> circle & 1 == 1 {
            Orientation::Clockwise
        } else {
            Orientation::Counterclockwise
        }
    }

    pub fn sigma(&self) -> i32 {
        self.state.sigma()
    }

    /// Clockwise minus counterclockwise circles.
    pub fn tau(&self) -> i32 {
        2 * self.orientation.count_ones() as i32 - self.circles as i32
    }

    /// Polynomial degree `sigma + 2 tau`.
    pub fn j_degree(&self) -> i32 {
        self.sigma() + 2 * self.tau()
    }

    pub fn bidegree(&self) -> Bidegree {
        (self.sigma(), self.j_degree())
    }

    /// Generator order inside a bucket: state tuple, then orientation tuple
    /// (counterclockwise before clockwise).
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.state
            .lex_cmp(&other.state)
            .then_with(|| lex_key(self.orientation, self.circles).cmp(&lex_key(other.orientation, other.circles)))
    }
}

/// How the circles change when one crossing goes from `0` to `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Transition {
    /// Image in the target state of every source circle.
    image: Vec<usize>,
    kind: TransitionKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TransitionKind {
    /// Source circles `a` and `b` become target circle `into`.
    Merge { a: usize, b: usize, into: usize },
    /// Source circle `from` becomes target circles `x` and `y`.
    Split { from: usize, x: usize, y: usize },
}

pub(crate) fn transition(d: &Diagram, crossing: usize, source: &StateCircles, target: &StateCircles) -> Transition {
    let free = d.free_loops();
    let arcs = d.crossing(crossing).arcs;
    let mut image = vec![usize::MAX; source.count];
    for a in 1..source.circle_of_arc.len() {
        image[source.circle_of_arc[a] as usize] = target.circle_of_arc[a] as usize;
    }
    for l in 0..free {
        image[source.loop_circle(free, l)] = target.loop_circle(free, l);
    }
    let kind = if target.count + 1 == source.count {
        let a = source.circle_of_arc[arcs[0] as usize] as usize;
        let b = (0..4)
            .map(|p| source.circle_of_arc[arcs[p] as usize] as usize)
            .find(|&c| c != a)
            .expect("a merge involves two source circles");
        TransitionKind::Merge {
            a: a.min(b),
            b: a.max(b),
            into: image[a],
        }
    } else {
        assert_eq!(target.count, source.count + 1, "one crossing changes the count by one");
        let from = source.circle_of_arc[arcs[0] as usize] as usize;
        let x = target.circle_of_arc[arcs[0] as usize] as usize;
        let y = (0..4)
            .map(|p| target.circle_of_arc[arcs[p] as usize] as usize)
            .find(|&c| c != x)
            .expect("a split produces two target circles");
        TransitionKind::Split {
            from,
            x: x.min(y),
            y: x.max(y),
        }
    };
    Transition { image, kind }
}

/// Target orientations reached from `orientation` under rules 1-4; empty
/// when no rule applies.
pub(crate) fn apply_rules(t: &Transition, orientation: u64) -> Vec<u64> {
    let cw = |c: usize| orientation >> c & 1 == 1;
    let mut base = 0u64;
    let (skip_a, skip_b) = match t.kind {
        TransitionKind::Merge { a, b, .. } => (a, b),
        TransitionKind::Split { from, .. } => (from, from),
    };
    for (c, &img) in t.image.iter().enumerate() {
        if c != skip_a && c != skip_b && cw(c) {
            base |= 1 << img;
        }
    }
    match t.kind {
        TransitionKind::Merge { a, b, into } => match (cw(a), cw(b)) {
            // Rule 1: two counterclockwise circles merge counterclockwise.
            (false, false) => vec![base],
            // Rule 2: opposite orientations merge clockwise.
            (true, false) | (false, true) => vec![base | 1 << into],
            // No rule joins two clockwise circles.
            (true, true) => Vec::new(),
        },
        TransitionKind::Split { from, x, y } => {
            if cw(from) {
                // Rule 3: clockwise splits into two clockwise circles.
                vec![base | 1 << x | 1 << y]
            } else {
                // Rule 4: counterclockwise splits into opposite orientations.
                vec![base | 1 << x, base | 1 << y]
            }
        }
    }
}

/// Incidence number between two enhanced states of `d`.
pub fn incidence(d: &Diagram, s1: &EnhancedState, s2: &EnhancedState) -> i8 {
    let diff = s1.state.bits() ^ s2.state.bits();
    if diff.count_ones() != 1 || s1.state.bits() & diff != 0 {
        return 0;
    }
    let i = diff.trailing_zeros() as usize;
    let c1 = resolve_state(d, s1.state);
    let c2 = resolve_state(d, s2.state);
    let t = transition(d, i, &c1, &c2);
    if apply_rules(&t, s1.orientation).contains(&s2.orientation) {
        if s1.state.ones_before(i).is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

fn check_cap(d: &Diagram, cap: usize, what: &'static str) -> Result<()> {
    if d.len() > cap || d.len() > 63 {
        Err(Error::CapExceeded {
            what,
            crossings: d.len(),
            cap: cap.min(63),
        })
    } else {
        Ok(())
    }
}

/// Enhanced states bucketed by bidegree, each bucket in generator order.
pub fn enumerate_enhanced(d: &Diagram, cap: usize) -> Result<BTreeMap<Bidegree, Vec<EnhancedState>>> {
    check_cap(d, cap, "enhanced state enumeration")?;
    let n = d.len();
    let mut buckets: BTreeMap<Bidegree, Vec<EnhancedState>> = BTreeMap::new();
    for m in 0..1u64 << n {
        let state = State::new(nth_lex(m, n), n);
        let circles = resolve_state(d, state).count;
        for o in 0..1u64 << circles {
            let e = EnhancedState::new(state, nth_lex(o, circles), circles);
            buckets.entry(e.bidegree()).or_default().push(e);
        }
    }
    Ok(buckets)
}

/// The bigraded complex of a diagram.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    crossings: usize,
    free_loops: usize,
    generators: BTreeMap<Bidegree, Vec<EnhancedState>>,
    /// `d_{j,k}: C_{j,k} -> C_{j-2,k}`, keyed by source bidegree; rows index
    /// the target bucket, columns the source bucket.
    differentials: BTreeMap<Bidegree, SparseMatrix<i64>>,
    circles: Vec<StateCircles>,
    position: HashMap<(u64, u64), (Bidegree, usize)>,
}

impl ChainComplex {
    pub fn crossings(&self) -> usize {
        self.crossings
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn generators(&self) -> &BTreeMap<Bidegree, Vec<EnhancedState>> {
        &self.generators
    }

    pub fn bucket(&self, key: Bidegree) -> &[EnhancedState] {
        self.generators.get(&key).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, key: Bidegree) -> usize {
        self.bucket(key).len()
    }

    pub fn total_dim(&self) -> usize {
        self.generators.values().map(Vec::len).sum()
    }

    pub fn differentials(&self) -> &BTreeMap<Bidegree, SparseMatrix<i64>> {
        &self.differentials
    }

    /// `d_{j,k}`, or the zero map of the right shape when absent.
    pub fn differential(&self, key: Bidegree) -> SparseMatrix<i64> {
        self.differentials
            .get(&key)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(self.dim((key.0 - 2, key.1)), self.dim(key)))
    }

    /// Circles of the state with these bits.
    pub fn circles(&self, state_bits: u64) -> &StateCircles {
        &self.circles[state_bits as usize]
    }

    /// Bucket and index of an enhanced state.
    pub fn position(&self, state_bits: u64, orientation: u64) -> Option<(Bidegree, usize)> {
        self.position.get(&(state_bits, orientation)).copied()
    }

    /// Polynomial degrees carrying generators.
    pub fn polynomial_degrees(&self) -> Vec<i32> {
        let mut ks: Vec<i32> = self.generators.keys().map(|k| k.1).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }

    /// Verifies `d o d = 0` and that every entry is a unit.
    pub fn validate(&self) -> Result<()> {
        for (&(j, k), m) in &self.differentials {
            if m.triplets().any(|t| t.value.abs() != 1) {
                return Err(Error::InternalInconsistency(format!(
                    "differential at ({j}, {k}) has a non-unit entry"
                )));
            }
            if let Some(next) = self.differentials.get(&(j - 2, k)) {
                if !next.mul(m).is_zero() {
                    return Err(Error::InternalInconsistency(format!("d o d is nonzero at ({j}, {k})")));
                }
            }
        }
        Ok(())
    }

    /// Generators and differential triplets for cross-implementation diffs.
    pub fn dump(&self) -> ComplexDump {
        ComplexDump {
            crossings: self.crossings,
            buckets: self
                .generators
                .iter()
                .map(|(&(j, k), gens)| BucketDump {
                    j,
                    k,
                    generators: gens
                        .iter()
                        .map(|g| GeneratorDump {
                            state: g.state.choices(),
                            clockwise: (0..g.circles)
                                .map(|c| g.orientation_of(c) == Orientation::Clockwise)
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
            differentials: self
                .differentials
                .iter()
                .map(|(&(j, k), m)| DifferentialDump {
                    j,
                    k,
                    rows: m.nrows(),
                    cols: m.ncols(),
                    entries: m.triplets().collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexDump {
    pub crossings: usize,
    pub buckets: Vec<BucketDump>,
    pub differentials: Vec<DifferentialDump>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BucketDump {
    pub j: i32,
    pub k: i32,
    pub generators: Vec<GeneratorDump>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorDump {
    pub state: Vec<u8>,
    pub clockwise: Vec<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DifferentialDump {
    pub j: i32,
    pub k: i32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Triplet<i64>>,
}

/// Builds the complex with the default cap.
pub fn build_complex(d: &Diagram) -> Result<ChainComplex> {
    build_complex_with_cap(d, DEFAULT_COMPLEX_CAP)
}

pub fn build_complex_with_cap(d: &Diagram, cap: usize) -> Result<ChainComplex> {
    check_cap(d, cap, "chain complex")?;
    let n = d.len();
    let states = 1u64 << n;
    let circles: Vec<StateCircles> = (0..states)
        .into_par_iter()
        .map(|bits| resolve_state(d, State::new(bits, n)))
        .collect();

    let mut generators: BTreeMap<Bidegree, Vec<EnhancedState>> = BTreeMap::new();
    let mut position = HashMap::new();
    for m in 0..states {
        let state = State::new(nth_lex(m, n), n);
        let count = circles[state.bits() as usize].count;
        for o in 0..1u64 << count {
            let e = EnhancedState::new(state, nth_lex(o, count), count);
            let bucket = generators.entry(e.bidegree()).or_default();
            position.insert((state.bits(), e.orientation), (e.bidegree(), bucket.len()));
            bucket.push(e);
        }
    }

    let entries: Vec<(Bidegree, usize, usize, i64)> = (0..states)
        .into_par_iter()
        .flat_map_iter(|bits| {
            let state = State::new(bits, n);
            let source = &circles[bits as usize];
            let mut out = Vec::new();
            for i in (0..n).filter(|&i| !state.choice(i)) {
                let next = state.toggled(i);
                let t = transition(d, i, source, &circles[next.bits() as usize]);
                let sign = if state.ones_before(i).is_multiple_of(2) { 1 } else { -1 };
                for o in 0..1u64 << source.count {
                    let (key, col) = position[&(bits, o)];
                    for to in apply_rules(&t, o) {
                        let (tkey, row) = position[&(next.bits(), to)];
                        debug_assert_eq!(tkey, (key.0 - 2, key.1));
                        out.push((key, row, col, sign));
                    }
                }
            }
            out
        })
        .collect();

    let mut grouped: BTreeMap<Bidegree, Vec<(usize, usize, i64)>> = BTreeMap::new();
    for (key, r, c, v) in entries {
        grouped.entry(key).or_default().push((r, c, v));
    }
    let dims = |key: Bidegree| generators.get(&key).map_or(0, Vec::len);
    let differentials = grouped
        .into_iter()
        .map(|((j, k), trip)| {
            let m = SparseMatrix::from_triplets(dims((j - 2, k)), dims((j, k)), trip);
            ((j, k), m)
        })
        .collect();

    let complex = ChainComplex {
        crossings: n,
        free_loops: d.free_loops(),
        generators,
        differentials,
        circles,
        position,
    };
    complex.validate()?;
    Ok(complex)
}
