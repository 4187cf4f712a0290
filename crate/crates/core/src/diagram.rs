//! Planar knot and link diagrams given as PD codes.
//!
//! A crossing is a 4-tuple of arc labels listed counterclockwise starting at
//! the incoming under-strand, so positions 0 and 2 carry the under-strand and
//! positions 1 and 3 the over-strand. The cyclic order of the tuples is the
//! rotation system of the underlying 4-valent planar graph; faces are traced
//! from it and planarity is checked with Euler's formula.
//!
//! Crossing order matters downstream (sign rule, skein triples), so it is
//! kept exactly as given.

use std::collections::BTreeMap;
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};

/// Which way a crossing is resolved.
///
/// `Positive` is the A-smoothing, recorded as `0` in a state; it joins the
/// arc at position 0 with position 1 and position 2 with position 3.
/// `Negative` is the B-smoothing, recorded as `1`; it joins 0 with 3 and 1
/// with 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Smoothing {
    Positive,
    Negative,
}

impl Smoothing {
    /// Position pairs joined by this smoothing.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::Positive => [(0, 1), (2, 3)],
            Smoothing::Negative => [(0, 3), (1, 2)],
        }
    }

    /// The smoothing recorded by a state entry (`false` = 0, `true` = 1).
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Smoothing::Negative
        } else {
            Smoothing::Positive
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    /// Arc labels counterclockwise from the incoming under-strand.
    pub arcs: [u32; 4],
}

impl Crossing {
    pub fn new(arcs: [u32; 4]) -> Self {
        Self { arcs }
    }

    /// The same crossing seen after a half turn; PD codes of unoriented
    /// diagrams do not distinguish the two.
    pub fn half_turn(&self) -> Self {
        let [a, b, c, d] = self.arcs;
        Self::new([c, d, a, b])
    }

    /// The crossing with over and under exchanged.
    pub fn flipped(&self) -> Self {
        let [a, b, c, d] = self.arcs;
        Self::new([b, c, d, a])
    }

    fn same_crossing(&self, other: &Self) -> bool {
        self == other || self.half_turn() == *other
    }
}

/// A corner of a face: the quadrant at `crossing` between positions
/// `quadrant` and `quadrant + 1` (mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Corner {
    pub crossing: usize,
    pub quadrant: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub corners: Vec<Corner>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn is_bigon(&self) -> bool {
        self.corners.len() == 2
    }
}

/// The faces of a diagram, a partition of all `4n` corners.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    #[serde(skip)]
    face_of: Vec<[usize; 4]>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Index of the face containing `quadrant` of `crossing`.
    pub fn face_of(&self, crossing: usize, quadrant: usize) -> usize {
        self.face_of[crossing][quadrant % 4]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }
}

/// Partition of crossings into bigon-connected twist classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistClasses {
    /// Each class sorted ascending; classes sorted by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub twist_number: usize,
}

/// Where an arc of a diagram ends up after smoothing one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcImage {
    /// Part of the arc with this label in the smoothed diagram.
    Arc(u32),
    /// Part of the free loop with this index in the smoothed diagram.
    Loop(usize),
}

/// A smoothed diagram together with the fate of the original arcs.
#[derive(Debug, Clone)]
pub struct SmoothingResult {
    pub diagram: Diagram,
    /// Indexed by original arc label; entry 0 is unused.
    pub arc_images: Vec<ArcImage>,
}

/// A validated planar diagram.
///
/// `free_loops` counts crossingless circles, which PD records cannot express.
/// The crossingless unknot is the diagram with no crossings and one free loop;
/// smoothing can create more.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    name: Option<String>,
}

impl Diagram {
    /// Validates arc multiplicities and planarity.
    pub fn new(crossings: Vec<Crossing>, name: Option<String>) -> Result<Self> {
        let free_loops = usize::from(crossings.is_empty());
        let d = Self {
            crossings,
            free_loops,
            name,
        };
        d.check_arcs()?;
        d.check_planar()?;
        Ok(d)
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `loops` disjoint crossingless circles.
    pub fn unlink(loops: usize) -> Self {
        Self {
            crossings: Vec::new(),
            free_loops: loops,
            name: None,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, i: usize) -> &Crossing {
        &self.crossings[i]
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// The two `(crossing, position)` ends of every arc, indexed by label.
    pub fn arc_ends(&self) -> Vec<[(usize, usize); 2]> {
        let mut ends = vec![[(usize::MAX, 0); 2]; self.arc_count() + 1];
        let mut seen = vec![0usize; self.arc_count() + 1];
        for (c, x) in self.crossings.iter().enumerate() {
            for (p, &a) in x.arcs.iter().enumerate() {
                let a = a as usize;
                ends[a][seen[a]] = (c, p);
                seen[a] += 1;
            }
        }
        ends
    }

    fn check_arcs(&self) -> Result<()> {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for x in &self.crossings {
            for &a in &x.arcs {
                *counts.entry(a as i64).or_default() += 1;
            }
        }
        for label in 1..=self.arc_count() as i64 {
            counts.entry(label).or_default();
        }
        if let Some((&arc, &count)) = counts
            .iter()
            .find(|(&a, &n)| n != 2 || a < 1 || a > self.arc_count() as i64)
        {
            return Err(Error::BadArcMultiplicity { arc, count });
        }
        Ok(())
    }

    fn check_planar(&self) -> Result<()> {
        let faces = self.faces().len();
        let expected = self.len() + 2 * self.graph_components();
        if self.is_empty() || faces == expected {
            Ok(())
        } else {
            Err(Error::NonPlanar { faces, expected })
        }
    }

    /// Connected components of the underlying 4-valent graph (free loops
    /// excluded).
    pub fn graph_components(&self) -> usize {
        let n = self.len();
        if n == 0 {
            return 0;
        }
        let mut uf = UnionFind::<usize>::new(n);
        for [(c1, _), (c2, _)] in self.arc_ends().into_iter().skip(1) {
            uf.union(c1, c2);
        }
        (0..n).filter(|&c| uf.find(c) == c).count()
    }

    pub fn is_connected(&self) -> bool {
        (self.is_empty() && self.free_loops == 1) || (self.graph_components() == 1 && self.free_loops == 0)
    }

    /// Number of link components: strands go straight through each crossing.
    pub fn link_components(&self) -> usize {
        let m = self.arc_count();
        let mut uf = UnionFind::<usize>::new(m + 1);
        for x in &self.crossings {
            uf.union(x.arcs[0] as usize, x.arcs[2] as usize);
            uf.union(x.arcs[1] as usize, x.arcs[3] as usize);
        }
        (1..=m).filter(|&a| uf.find(a) == a).count() + self.free_loops
    }

    /// Traces faces with the rotation-system walk: from a corner, leave along
    /// the counterclockwise-next arc and enter the far crossing's corner on
    /// the same side.
    pub fn faces(&self) -> FaceSet {
        let n = self.len();
        let ends = self.arc_ends();
        let mut face_of = vec![[usize::MAX; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for q in 0..4 {
                if face_of[c][q] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut corners = Vec::new();
                let (mut cc, mut qq) = (c, q);
                while face_of[cc][qq] == usize::MAX {
                    face_of[cc][qq] = id;
                    corners.push(Corner {
                        crossing: cc,
                        quadrant: qq as u8,
                    });
                    let pos = (qq + 1) % 4;
                    let arc = self.crossings[cc].arcs[pos] as usize;
                    let [e0, e1] = ends[arc];
                    let (nc, np) = if e0 == (cc, pos) { e1 } else { e0 };
                    cc = nc;
                    qq = np;
                }
                faces.push(Face { corners });
            }
        }
        FaceSet { faces, face_of }
    }

    /// Along every arc the two ends alternate between under (even position)
    /// and over (odd position).
    pub fn is_alternating(&self) -> bool {
        self.arc_ends()
            .into_iter()
            .skip(1)
            .all(|[(_, p1), (_, p2)]| p1 % 2 != p2 % 2)
    }

    /// Crossings having two opposite quadrants on a common face.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let faces = self.faces();
        (0..self.len())
            .filter(|&c| faces.face_of(c, 0) == faces.face_of(c, 2) || faces.face_of(c, 1) == faces.face_of(c, 3))
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    /// Replaces crossing `c` by a smoothing. Remaining crossings keep their
    /// order; arcs are merged and relabelled `1..=2(n-1)` in order of their
    /// smallest original label. Circles left without crossings become free
    /// loops.
    pub fn smooth(&self, c: usize, how: Smoothing) -> Result<SmoothingResult> {
        self.check_index(c)?;
        let m = self.arc_count();
        let mut uf = UnionFind::<usize>::new(m + 1);
        let x = self.crossings[c];
        for (p, q) in how.pairs() {
            uf.union(x.arcs[p] as usize, x.arcs[q] as usize);
        }

        let rest: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != c)
            .map(|(_, x)| *x)
            .collect();
        let mut used = vec![false; m + 1];
        for x in &rest {
            for &a in &x.arcs {
                used[uf.find(a as usize)] = true;
            }
        }

        let mut relabel = vec![0u32; m + 1];
        let mut loop_of = vec![usize::MAX; m + 1];
        let mut next_label = 0u32;
        let mut next_loop = self.free_loops;
        let mut images = vec![ArcImage::Loop(usize::MAX); m + 1];
        for a in 1..=m {
            let r = uf.find(a);
            images[a] = if used[r] {
                if relabel[r] == 0 {
                    next_label += 1;
                    relabel[r] = next_label;
                }
                ArcImage::Arc(relabel[r])
            } else {
                if loop_of[r] == usize::MAX {
                    loop_of[r] = next_loop;
                    next_loop += 1;
                }
                ArcImage::Loop(loop_of[r])
            };
        }

        let crossings = rest
            .into_iter()
            .map(|x| Crossing::new(x.arcs.map(|a| relabel[uf.find(a as usize)])))
            .collect();
        let diagram = Diagram {
            crossings,
            free_loops: next_loop,
            name: self.name.as_ref().map(|n| {
                format!(
                    "{n}/{c}{}",
                    match how {
                        Smoothing::Positive => "+",
                        Smoothing::Negative => "-",
                    }
                )
            }),
        };
        debug_assert!(diagram.check_arcs().is_ok());
        Ok(SmoothingResult {
            diagram,
            arc_images: images,
        })
    }

    /// Every crossing with over and under exchanged.
    pub fn mirror(&self) -> Self {
        Self {
            crossings: self.crossings.iter().map(Crossing::flipped).collect(),
            free_loops: self.free_loops,
            name: self.name.clone(),
        }
    }

    /// Reorders crossings so that new crossing `i` is old crossing `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        for &i in order {
            self.check_index(i)?;
            seen[i] = true;
        }
        if order.len() != self.len() || seen.iter().any(|s| !s) {
            return Err(Error::PreconditionViolated(
                "crossing order is not a permutation".into(),
            ));
        }
        Ok(Self {
            crossings: order.iter().map(|&i| self.crossings[i]).collect(),
            free_loops: self.free_loops,
            name: self.name.clone(),
        })
    }

    /// Moves crossing `c` to the end of the ordering.
    pub fn with_crossing_last(&self, c: usize) -> Result<Self> {
        self.check_index(c)?;
        let order: Vec<usize> = (0..self.len()).filter(|&i| i != c).chain([c]).collect();
        self.permuted(&order)
    }

    /// Equality up to the half-turn symmetry of each crossing tuple.
    pub fn same_diagram(&self, other: &Self) -> bool {
        self.free_loops == other.free_loops
            && self.len() == other.len()
            && self
                .crossings
                .iter()
                .zip(&other.crossings)
                .all(|(a, b)| a.same_crossing(b))
    }

    /// Crossings joined by a chain of bigons share a class.
    pub fn twist_classes(&self) -> TwistClasses {
        let n = self.len();
        let mut uf = UnionFind::<usize>::new(n);
        for face in self.faces().iter().filter(|f| f.is_bigon()) {
            uf.union(face.corners[0].crossing, face.corners[1].crossing);
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            by_root.entry(uf.find(c)).or_default().push(c);
        }
        let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
        classes.sort();
        TwistClasses {
            twist_number: classes.len(),
            classes,
        }
    }

    fn check_index(&self, c: usize) -> Result<()> {
        if c < self.len() {
            Ok(())
        } else {
            Err(Error::CrossingOutOfRange {
                index: c,
                crossings: self.len(),
            })
        }
    }
}

impl fmt::Display for Diagram {
    /// PD text, one record per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        for x in &self.crossings {
            let [a, b, c, d] = x.arcs;
            writeln!(f, "X {a} {b} {c} {d}")?;
        }
        Ok(())
    }
}

/// Parses one diagram from PD text: `X a b c d` records separated by
/// newlines or `;`, with `#` comments. Empty input is the crossingless
/// unknot.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut crossings = Vec::new();
    let mut name = None;
    for (lineno, line) in text.lines().enumerate() {
        for record in strip_comment(line).split(';') {
            let record = record.trim();
            if record.is_empty() {
                continue;
            }
            if let Some(label) = record.strip_prefix("name:") {
                name = Some(label.trim().to_string());
                continue;
            }
            crossings.push(parse_record(record, lineno + 1)?);
        }
    }
    Diagram::new(crossings, name)
}

/// Parses a corpus: stanzas introduced by `name: <label>` lines, each
/// followed by its records. Text without any `name:` line is one diagram.
pub fn parse_corpus(text: &str) -> Result<Vec<Diagram>> {
    let mut out = Vec::new();
    let mut current: Option<(String, Vec<Crossing>)> = None;
    let mut unnamed = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        for record in strip_comment(line).split(';') {
            let record = record.trim();
            if record.is_empty() {
                continue;
            }
            if let Some(label) = record.strip_prefix("name:") {
                if let Some((n, xs)) = current.take() {
                    out.push(Diagram::new(xs, Some(n))?);
                }
                current = Some((label.trim().to_string(), Vec::new()));
                continue;
            }
            let x = parse_record(record, lineno + 1)?;
            match current.as_mut() {
                Some((_, xs)) => xs.push(x),
                None => unnamed.push(x),
            }
        }
    }
    if let Some((n, xs)) = current {
        out.push(Diagram::new(xs, Some(n))?);
    }
    if out.is_empty() || !unnamed.is_empty() {
        out.insert(0, Diagram::new(unnamed, None)?);
    }
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_record(record: &str, line: usize) -> Result<Crossing> {
    let malformed = || Error::MalformedRecord {
        line,
        text: record.to_string(),
    };
    let mut tokens = record.split_whitespace();
    if tokens.next() != Some("X") {
        return Err(malformed());
    }
    let mut arcs = [0u32; 4];
    for slot in arcs.iter_mut() {
        *slot = tokens
            .next()
            .and_then(|t| t.parse::<u32>().ok())
            .filter(|&a| a > 0)
            .ok_or_else(malformed)?;
    }
    if tokens.next().is_some() {
        return Err(malformed());
    }
    Ok(Crossing::new(arcs))
}

#[cfg(test)]
mod tests {
    use super::*;

    const HOPF: &str = "X 1 4 2 3\nX 3 2 4 1";
    const KINK: &str = "X 1 2 2 1";
    const TREFOIL: &str = "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2";
    const FIGURE_EIGHT: &str = "X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8";

    fn face_sizes(d: &Diagram) -> Vec<usize> {
        let mut s: Vec<usize> = d.faces().iter().map(Face::len).collect();
        s.sort_unstable();
        s
    }

    #[test]
    fn parses_hopf() {
        let d = parse_pd(HOPF).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.arc_count(), 4);
        assert_eq!(d.faces().len(), 4);
        assert_eq!(d.link_components(), 2);
    }

    #[test]
    fn parses_inline_and_comments() {
        let d = parse_pd("X 1 4 2 3; X 3 2 4 1 # hopf").unwrap();
        assert_eq!(d, parse_pd(HOPF).unwrap());
    }

    #[test]
    fn parses_kink() {
        let d = parse_pd(KINK).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert_eq!(d.link_components(), 1);
    }

    #[test]
    fn empty_text_is_unknot() {
        let d = parse_pd("  # nothing\n").unwrap();
        assert!(d.is_empty());
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.link_components(), 1);
    }

    #[test]
    fn rejects_bad_multiplicity() {
        let err = parse_pd("X 1 4 2 3\nX 3 2 4 2").unwrap_err();
        assert!(matches!(err, Error::BadArcMultiplicity { .. }));
        assert!(matches!(
            parse_pd("X 1 2 3 9\nX 1 2 3 4").unwrap_err(),
            Error::BadArcMultiplicity { .. }
        ));
    }

    #[test]
    fn rejects_malformed_records() {
        for bad in [
            "X 1 2 2",
            "Y 1 2 2 1",
            "X 1 2 2 1 5",
            "X 1 -2 2 1",
            "X 0 2 2 1",
            "X a b c d",
        ] {
            assert!(matches!(parse_pd(bad), Err(Error::MalformedRecord { .. })), "{bad}");
        }
    }

    #[test]
    fn rejects_non_planar_rotation() {
        // Hopf arcs with one crossing listed clockwise: a torus embedding.
        let err = parse_pd("X 1 4 2 3\nX 3 1 4 2").unwrap_err();
        assert!(matches!(err, Error::NonPlanar { .. }), "{err:?}");
    }

    #[test]
    fn face_counts() {
        assert_eq!(face_sizes(&parse_pd(HOPF).unwrap()), vec![2, 2, 2, 2]);
        assert_eq!(parse_pd(KINK).unwrap().faces().len(), 3);
        assert_eq!(face_sizes(&parse_pd(TREFOIL).unwrap()), vec![2, 2, 2, 3, 3]);
        assert_eq!(parse_pd(FIGURE_EIGHT).unwrap().faces().len(), 6);
    }

    #[test]
    fn faces_partition_corners() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let mut all: Vec<Corner> = d.faces().iter().flat_map(|f| f.corners.clone()).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 4 * d.len());
    }

    #[test]
    fn alternation() {
        assert!(parse_pd(TREFOIL).unwrap().is_alternating());
        assert!(parse_pd(KINK).unwrap().is_alternating());
        let t = parse_pd(TREFOIL).unwrap();
        let mut xs = t.crossings().to_vec();
        xs[0] = xs[0].flipped();
        let flipped = Diagram::new(xs, None).unwrap();
        assert!(!flipped.is_alternating());
    }

    #[test]
    fn reducedness() {
        assert!(!parse_pd(KINK).unwrap().is_reduced());
        assert!(parse_pd(HOPF).unwrap().is_reduced());
        assert!(parse_pd(TREFOIL).unwrap().is_reduced());
        assert!(parse_pd(FIGURE_EIGHT).unwrap().is_reduced());
    }

    #[test]
    fn smoothing_hopf_gives_kinks() {
        let d = parse_pd(HOPF).unwrap();
        let plus = d.smooth(1, Smoothing::Positive).unwrap().diagram;
        let minus = d.smooth(1, Smoothing::Negative).unwrap().diagram;
        assert_eq!(plus.crossings(), &[Crossing::new([1, 1, 2, 2])]);
        assert_eq!(minus.crossings(), &[Crossing::new([1, 2, 2, 1])]);
        for k in [&plus, &minus] {
            assert_eq!(k.len(), 1);
            assert_eq!(k.free_loops(), 0);
            assert!(!k.is_reduced());
            assert_eq!(k.link_components(), 1);
        }
        // Opposite handedness: the kinks are mirror images.
        assert!(plus.mirror().same_diagram(&minus) || plus.same_diagram(&minus.mirror()));
    }

    #[test]
    fn smoothing_trefoil_gives_hopf() {
        let t = parse_pd(TREFOIL).unwrap();
        let results: Vec<Diagram> = [Smoothing::Positive, Smoothing::Negative]
            .into_iter()
            .map(|s| t.smooth(1, s).unwrap().diagram)
            .collect();
        // One smoothing keeps the twist (a Hopf diagram), the other leaves two kinks.
        let hopf_like: Vec<&Diagram> = results
            .iter()
            .filter(|d| d.is_reduced() && d.link_components() == 2)
            .collect();
        assert_eq!(hopf_like.len(), 1);
        assert_eq!(face_sizes(hopf_like[0]), vec![2, 2, 2, 2]);
    }

    #[test]
    fn smoothing_kink_frees_loops() {
        let k = parse_pd(KINK).unwrap();
        let plus = k.smooth(0, Smoothing::Positive).unwrap();
        assert_eq!(plus.diagram.free_loops(), 1);
        assert_eq!(plus.arc_images[1], ArcImage::Loop(0));
        assert_eq!(plus.arc_images[2], ArcImage::Loop(0));
        let minus = k.smooth(0, Smoothing::Negative).unwrap();
        assert_eq!(minus.diagram.free_loops(), 2);
        assert_eq!(minus.diagram.link_components(), 2);
    }

    #[test]
    fn smooth_rejects_bad_index() {
        let d = parse_pd(HOPF).unwrap();
        assert!(matches!(
            d.smooth(2, Smoothing::Positive),
            Err(Error::CrossingOutOfRange { .. })
        ));
    }

    #[test]
    fn mirror_properties() {
        let t = parse_pd(TREFOIL).unwrap();
        assert!(t.mirror().mirror().same_diagram(&t));
        assert!(t.mirror().is_alternating());
        assert!(t.mirror().is_reduced());
        assert_eq!(face_sizes(&t.mirror()), face_sizes(&t));
    }

    #[test]
    fn twist_classes_examples() {
        let t = parse_pd(TREFOIL).unwrap().twist_classes();
        assert_eq!(t.classes, vec![vec![0, 1, 2]]);
        assert_eq!(t.twist_number, 1);
        assert_eq!(parse_pd(FIGURE_EIGHT).unwrap().twist_classes().twist_number, 2);
        let h = parse_pd(HOPF).unwrap().twist_classes();
        assert_eq!(h.classes, vec![vec![0, 1]]);
    }

    #[test]
    fn corpus_stanzas() {
        let text = "# two entries\nname: hopf\nX 1 4 2 3\nX 3 2 4 1\n\nname: kink\nX 1 2 2 1\n";
        let ds = parse_corpus(text).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[0].name(), Some("hopf"));
        assert_eq!(ds[1].len(), 1);
        let single = parse_corpus(HOPF).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].name(), None);
    }

    #[test]
    fn reorder_moves_crossing_last() {
        let t = parse_pd(TREFOIL).unwrap();
        let r = t.with_crossing_last(0).unwrap();
        assert_eq!(r.crossing(2), t.crossing(0));
        assert_eq!(r.crossing(0), t.crossing(1));
        assert!(t.permuted(&[0, 0, 1]).is_err());
    }
}
