//! Checkerboard colourings and Tait graphs.
//!
//! Black faces are the ones swept out when the over-strand is rotated
//! counterclockwise: at every crossing these are the quadrants following
//! the over-strand positions 1 and 3, i.e. quadrants 1 and 3. `G` has a
//! vertex per black face and `G*` one per white face; every crossing adds one
//! edge to each, joining its two opposite quadrants of that colour.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::diagram::{Diagram, FaceSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    /// Indexed like the diagram's face set.
    pub face_colors: Vec<Color>,
    /// Whether every crossing sees black on its quadrants 1 and 3.
    pub follows_convention: bool,
}

impl Coloring {
    pub fn flipped(&self) -> Self {
        Self {
            face_colors: self.face_colors.iter().map(|c| c.flip()).collect(),
            follows_convention: false,
        }
    }

    pub fn count(&self, color: Color) -> usize {
        self.face_colors.iter().filter(|&&c| c == color).count()
    }

    /// Faces on either side of every arc get different colours.
    pub fn is_proper(&self, d: &Diagram, faces: &FaceSet) -> bool {
        (0..d.len())
            .all(|c| (0..4).all(|q| self.face_colors[faces.face_of(c, q)] != self.face_colors[faces.face_of(c, q + 1)]))
    }
}

/// Colouring by the over-strand convention. Fails when two crossings
/// disagree about a face, which happens exactly for non-alternating diagrams.
pub fn checkerboard(d: &Diagram) -> Result<Coloring> {
    let faces = d.faces();
    let mut colors: Vec<Option<Color>> = vec![None; faces.len()];
    for c in 0..d.len() {
        for q in 0..4 {
            let want = if q % 2 == 1 { Color::Black } else { Color::White };
            let f = faces.face_of(c, q);
            match colors[f] {
                Some(have) if have != want => return Err(Error::InconsistentColoring { crossing: c }),
                _ => colors[f] = Some(want),
            }
        }
    }
    Ok(Coloring {
        face_colors: colors
            .into_iter()
            .map(|c| c.expect("every face has a corner"))
            .collect(),
        follows_convention: true,
    })
}

/// The convention colouring when it exists, otherwise a proper 2-colouring
/// by breadth-first search with `follows_convention` cleared.
pub fn checkerboard_or_fallback(d: &Diagram) -> Coloring {
    checkerboard(d).unwrap_or_else(|_| proper_coloring(d))
}

fn proper_coloring(d: &Diagram) -> Coloring {
    let faces = d.faces();
    let mut adj = vec![Vec::new(); faces.len()];
    for c in 0..d.len() {
        for q in 0..4 {
            let (a, b) = (faces.face_of(c, q), faces.face_of(c, q + 1));
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut colors: Vec<Option<Color>> = vec![None; faces.len()];
    for start in 0..faces.len() {
        if colors[start].is_some() {
            continue;
        }
        colors[start] = Some(Color::Black);
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let next = colors[f].expect("queued faces are coloured").flip();
            for &g in &adj[f] {
                if colors[g].is_none() {
                    colors[g] = Some(next);
                    queue.push_back(g);
                }
            }
        }
    }
    Coloring {
        face_colors: colors.into_iter().map(|c| c.expect("all faces visited")).collect(),
        follows_convention: false,
    }
}

/// One edge per crossing between the faces of its two opposite quadrants of
/// the graph's colour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaitEdge {
    pub a: usize,
    pub b: usize,
    pub crossing: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaitGraph {
    /// Face index of every vertex.
    pub faces: Vec<usize>,
    /// Endpoints are vertex indices with `a <= b`.
    pub edges: Vec<TaitEdge>,
}

/// Parallel edges collapsed into one edge per vertex pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedTaitGraph {
    pub faces: Vec<usize>,
    pub edges: Vec<ReducedEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedEdge {
    pub a: usize,
    pub b: usize,
    /// Crossings of the collapsed parallel class.
    pub crossings: Vec<usize>,
}

/// Vertex and edge counts plus connectivity, enough for the cycle rank.
pub trait GraphCounts {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn edge_endpoints(&self) -> Vec<(usize, usize)>;

    fn components(&self) -> usize {
        let n = self.vertex_count();
        let mut uf = UnionFind::<usize>::new(n);
        for (a, b) in self.edge_endpoints() {
            uf.union(a, b);
        }
        (0..n).filter(|&v| uf.find(v) == v).count()
    }
}

impl GraphCounts for TaitGraph {
    fn vertex_count(&self) -> usize {
        self.faces.len()
    }
    fn edge_count(&self) -> usize {
        self.edges.len()
    }
    fn edge_endpoints(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.a, e.b)).collect()
    }
}

impl GraphCounts for ReducedTaitGraph {
    fn vertex_count(&self) -> usize {
        self.faces.len()
    }
    fn edge_count(&self) -> usize {
        self.edges.len()
    }
    fn edge_endpoints(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.a, e.b)).collect()
    }
}

impl TaitGraph {
    /// `a b crossing` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for e in &self.edges {
            let _ = writeln!(s, "{} {} {}", e.a, e.b, e.crossing);
        }
        s
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for (v, f) in self.faces.iter().enumerate() {
            let _ = writeln!(s, "  {v} [label=\"face {f}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  {} -- {} [label=\"{}\"];", e.a, e.b, e.crossing);
        }
        s.push_str("}\n");
        s
    }
}

impl ReducedTaitGraph {
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for e in &self.edges {
            let xs: Vec<String> = e.crossings.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "{} {} {}", e.a, e.b, xs.join(","));
        }
        s
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph \"{name}\" {{\n");
        for (v, f) in self.faces.iter().enumerate() {
            let _ = writeln!(s, "  {v} [label=\"face {f}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  {} -- {} [label=\"x{}\"];", e.a, e.b, e.crossings.len());
        }
        s.push_str("}\n");
        s
    }
}

fn graph_of_color(d: &Diagram, faces: &FaceSet, coloring: &Coloring, color: Color) -> TaitGraph {
    let vertex_faces: Vec<usize> = (0..faces.len()).filter(|&f| coloring.face_colors[f] == color).collect();
    let index: BTreeMap<usize, usize> = vertex_faces.iter().enumerate().map(|(v, &f)| (f, v)).collect();
    let edges = (0..d.len())
        .map(|c| {
            let q = (0..4)
                .find(|&q| coloring.face_colors[faces.face_of(c, q)] == color)
                .expect("each crossing has quadrants of both colours");
            let a = index[&faces.face_of(c, q)];
            let b = index[&faces.face_of(c, q + 2)];
            TaitEdge {
                a: a.min(b),
                b: a.max(b),
                crossing: c,
            }
        })
        .collect();
    TaitGraph {
        faces: vertex_faces,
        edges,
    }
}

/// `(G, G*)` on the black and white faces of the given colouring.
pub fn tait_graphs_with(d: &Diagram, coloring: &Coloring) -> (TaitGraph, TaitGraph) {
    let faces = d.faces();
    (
        graph_of_color(d, &faces, coloring, Color::Black),
        graph_of_color(d, &faces, coloring, Color::White),
    )
}

/// `(G, G*)` for the convention colouring (or the fallback).
pub fn tait_graphs(d: &Diagram) -> (TaitGraph, TaitGraph) {
    tait_graphs_with(d, &checkerboard_or_fallback(d))
}

pub fn reduce(g: &TaitGraph) -> ReducedTaitGraph {
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in &g.edges {
        classes.entry((e.a, e.b)).or_default().push(e.crossing);
    }
    ReducedTaitGraph {
        faces: g.faces.clone(),
        edges: classes
            .into_iter()
            .map(|((a, b), crossings)| ReducedEdge { a, b, crossings })
            .collect(),
    }
}

/// Cycle rank `|E| - |V| + 1` of a connected graph.
pub fn psi<G: GraphCounts>(g: &G) -> Result<i64> {
    let components = g.components();
    if components != 1 {
        return Err(Error::DisconnectedGraph { components });
    }
    Ok(g.edge_count() as i64 - g.vertex_count() as i64 + 1)
}
