//! Finite directed graphs and their finite paths.
//!
//! Edges carry a range `r(e)` and a source `d(e)`. A path `x_1 x_2 ... x_n`
//! is composable when `d(x_i) = r(x_{i+1})`, so paths are read from their
//! range end: `r(x_1 ... x_n) = r(x_1)` and `d(x_1 ... x_n) = d(x_n)`.
//! Length-zero paths are vertices, with `r(x) = d(x) = x`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Dense vertex index into a [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub u32);

/// Dense edge index into a [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Edge {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Textual description of a graph, as it appears in an action file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub id: String,
    /// Range vertex `r(e)`.
    pub r: String,
    /// Source vertex `d(e)`.
    pub d: String,
}

/// A problem found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    DuplicateVertex(String),
    DuplicateEdge(String),
    /// An edge names a vertex that is not declared; `field` is `"r"` or `"d"`.
    UnknownVertex {
        edge: String,
        field: &'static str,
        vertex: String,
    },
    /// `r⁻¹(v)` is empty.
    Source(String),
    /// `d⁻¹(v)` is empty.
    Sink(String),
    SourceAndSink(String),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::DuplicateVertex(v) => write!(f, "vertex {v:?} declared twice"),
            Defect::DuplicateEdge(e) => write!(f, "edge {e:?} declared twice"),
            Defect::UnknownVertex {
                edge,
                field,
                vertex,
            } => {
                write!(
                    f,
                    "edge {edge:?}: field `{field}` names unknown vertex {vertex:?}"
                )
            }
            Defect::Source(v) => write!(f, "vertex {v:?} is a source"),
            Defect::Sink(v) => write!(f, "vertex {v:?} is a sink"),
            Defect::SourceAndSink(v) => write!(f, "vertex {v:?} is source and sink"),
        }
    }
}

/// Checks that the edge maps are total and, when `boundary_ready` is set,
/// that no vertex is a source or a sink. Every defect is reported.
pub fn validate(spec: &GraphSpec, boundary_ready: bool) -> Result<(), Vec<Defect>> {
    let mut defects = Vec::new();
    let mut vertices: HashMap<&str, usize> = HashMap::new();
    for (i, v) in spec.vertices.iter().enumerate() {
        if vertices.insert(v.as_str(), i).is_some() {
            defects.push(Defect::DuplicateVertex(v.clone()));
        }
    }
    let mut seen_edges: HashMap<&str, ()> = HashMap::new();
    let mut has_range = vec![false; spec.vertices.len()];
    let mut has_source = vec![false; spec.vertices.len()];
    for e in &spec.edges {
        if seen_edges.insert(e.id.as_str(), ()).is_some() {
            defects.push(Defect::DuplicateEdge(e.id.clone()));
        }
        for (field, name, marks) in [("r", &e.r, &mut has_range), ("d", &e.d, &mut has_source)] {
            match vertices.get(name.as_str()) {
                Some(&i) => marks[i] = true,
                None => defects.push(Defect::UnknownVertex {
                    edge: e.id.clone(),
                    field,
                    vertex: name.clone(),
                }),
            }
        }
    }
    if boundary_ready {
        for (i, v) in spec.vertices.iter().enumerate() {
            match (has_range[i], has_source[i]) {
                (false, false) => defects.push(Defect::SourceAndSink(v.clone())),
                (false, true) => defects.push(Defect::Source(v.clone())),
                (true, false) => defects.push(Defect::Sink(v.clone())),
                (true, true) => {}
            }
        }
    }
    if defects.is_empty() {
        Ok(())
    } else {
        Err(defects)
    }
}

/// A finite directed graph `(E⁰, E¹, r, d)` with dense internal numbering.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    range: Vec<Vertex>,
    source: Vec<Vertex>,
    /// `starting[v]` lists the edges `e` with `r(e) = v`, i.e. the edges a
    /// path anchored at `v` may begin with.
    starting: Vec<Vec<Edge>>,
    vertex_index: HashMap<String, Vertex>,
    edge_index: HashMap<String, Edge>,
}

impl Graph {
    /// Builds a graph, rejecting dangling or duplicate ids. Sources and sinks
    /// are allowed here; see [`Graph::is_boundary_ready`].
    pub fn from_spec(spec: &GraphSpec) -> Result<Graph, Vec<Defect>> {
        validate(spec, false)?;
        let vertex_index: HashMap<String, Vertex> = spec
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), Vertex(i as u32)))
            .collect();
        let edges = spec
            .edges
            .iter()
            .map(|e| (e.id.clone(), vertex_index[&e.r], vertex_index[&e.d]))
            .collect::<Vec<_>>();
        Ok(Self::assemble(spec.vertices.clone(), edges))
    }

    /// Builds a graph from names and `(edge, r, d)` triples given by index.
    ///
    /// # Panics
    /// Panics if an edge refers to a vertex index out of range.
    pub fn new<V: Into<String>, E: Into<String>>(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (E, usize, usize)>,
    ) -> Graph {
        let vertex_names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let edges = edges
            .into_iter()
            .map(|(name, r, d)| {
                assert!(
                    r < vertex_names.len() && d < vertex_names.len(),
                    "edge endpoint out of range"
                );
                (name.into(), Vertex(r as u32), Vertex(d as u32))
            })
            .collect();
        Self::assemble(vertex_names, edges)
    }

    /// The rose `R_n`: one vertex and `n` loops named `0 .. n-1`.
    pub fn rose(n: usize) -> Graph {
        Graph::new(["v"], (0..n).map(|i| (i.to_string(), 0, 0)))
    }

    fn assemble(vertex_names: Vec<String>, edges: Vec<(String, Vertex, Vertex)>) -> Graph {
        let mut starting = vec![Vec::new(); vertex_names.len()];
        let mut edge_names = Vec::with_capacity(edges.len());
        let mut range = Vec::with_capacity(edges.len());
        let mut source = Vec::with_capacity(edges.len());
        for (i, (name, r, d)) in edges.into_iter().enumerate() {
            starting[r.index()].push(Edge(i as u32));
            edge_names.push(name);
            range.push(r);
            source.push(d);
        }
        let vertex_index = vertex_names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), Vertex(i as u32)))
            .collect();
        let edge_index = edge_names
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), Edge(i as u32)))
            .collect();
        Graph {
            vertex_names,
            edge_names,
            range,
            source,
            starting,
            vertex_index,
            edge_index,
        }
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertex_names.clone(),
            edges: self
                .edges()
                .map(|e| EdgeSpec {
                    id: self.edge_name(e).to_owned(),
                    r: self.vertex_name(self.r(e)).to_owned(),
                    d: self.vertex_name(self.d(e)).to_owned(),
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_names.len() as u32).map(Vertex)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edge_names.len() as u32).map(Edge)
    }

    pub fn r(&self, e: Edge) -> Vertex {
        self.range[e.index()]
    }

    pub fn d(&self, e: Edge) -> Vertex {
        self.source[e.index()]
    }

    /// Edges `e` with `r(e) = v`.
    pub fn edges_with_range(&self, v: Vertex) -> &[Edge] {
        &self.starting[v.index()]
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn edge_name(&self, e: Edge) -> &str {
        &self.edge_names[e.index()]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_by_name(&self, name: &str) -> Option<Edge> {
        self.edge_index.get(name).copied()
    }

    /// True when every vertex receives and emits at least one edge.
    pub fn is_boundary_ready(&self) -> bool {
        validate(&self.to_spec(), true).is_ok()
    }

    pub fn is_single_vertex(&self) -> bool {
        self.vertex_count() == 1
    }

    /// The graph `Ẽ` with the same edges over a single vertex `∅`.
    pub fn collapse(&self) -> Graph {
        Graph::new(["∅"], self.edge_names.iter().map(|e| (e.clone(), 0, 0)))
    }

    /// Builds a path from edges, or `None` if they are not composable.
    /// The anchor is only consulted for empty edge lists.
    pub fn path(&self, anchor: Vertex, edges: &[Edge]) -> Option<Path> {
        match edges.first() {
            None => Some(Path::vertex(anchor)),
            Some(&first) => {
                for pair in edges.windows(2) {
                    if self.d(pair[0]) != self.r(pair[1]) {
                        return None;
                    }
                }
                Some(Path {
                    range: self.r(first),
                    source: self.d(*edges.last().unwrap()),
                    edges: SmallVec::from_slice(edges),
                })
            }
        }
    }

    /// Path through the named edges; a single vertex graph accepts `[]`.
    pub fn path_by_names(&self, names: &[&str]) -> Option<Path> {
        let edges = names
            .iter()
            .map(|n| self.edge_by_name(n))
            .collect::<Option<Vec<_>>>()?;
        if edges.is_empty() && !self.is_single_vertex() {
            return None;
        }
        self.path(Vertex(0), &edges)
    }

    /// All paths of length exactly `n`, ordered by anchor then edge sequence.
    pub fn paths_of_length(&self, n: usize) -> Vec<Path> {
        let mut layer: Vec<Path> = self.vertices().map(Path::vertex).collect();
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &layer {
                for &e in self.edges_with_range(p.d()) {
                    next.push(p.extend_unchecked(e, self.d(e)));
                }
            }
            layer = next;
        }
        if n > 0 {
            layer.sort();
        }
        layer
    }

    /// All paths of length at most `n`, by length then lexicographically.
    pub fn paths_up_to(&self, n: usize) -> Vec<Path> {
        (0..=n).flat_map(|k| self.paths_of_length(k)).collect()
    }

    /// Paths of length `n` that extend `prefix`.
    pub fn extensions(&self, prefix: &Path, n: usize) -> Vec<Path> {
        let mut layer = vec![prefix.clone()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(layer.len() * 2);
            for p in &layer {
                for &e in self.edges_with_range(p.d()) {
                    next.push(p.extend_unchecked(e, self.d(e)));
                }
            }
            layer = next;
        }
        layer
    }

    /// Renders edges as a word. Single-character edge names are juxtaposed,
    /// longer names are separated by dots.
    pub fn render_edges(&self, edges: &[Edge]) -> String {
        let short = self.edge_names.iter().all(|n| n.chars().count() == 1);
        let sep = if short { "" } else { "." };
        edges
            .iter()
            .map(|&e| self.edge_name(e))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn render_path(&self, p: &Path) -> String {
        if p.is_vertex() {
            if self.is_single_vertex() {
                "∅".to_owned()
            } else {
                format!("@{}", self.vertex_name(p.r()))
            }
        } else {
            self.render_edges(p.edges())
        }
    }

    /// Parses a word of edge names: juxtaposed single-character names, or
    /// names separated by `.` or whitespace. `∅` or the empty string is the
    /// empty path of a single-vertex graph and `@v` is the vertex `v`.
    pub fn parse_path(&self, text: &str) -> Option<Path> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix('@') {
            return self.vertex_by_name(v.trim()).map(Path::vertex);
        }
        if text.is_empty() || text == "∅" {
            return self.is_single_vertex().then(|| Path::vertex(Vertex(0)));
        }
        let edges = self.parse_edges(text)?;
        self.path(Vertex(0), &edges)
    }

    /// Parses a bare edge word without checking composability.
    pub fn parse_edges(&self, text: &str) -> Option<Vec<Edge>> {
        let text = text.trim();
        if text.is_empty() {
            return Some(Vec::new());
        }
        if text.contains(['.', ' ', '\t']) {
            text.split(['.', ' ', '\t'])
                .filter(|s| !s.is_empty())
                .map(|s| self.edge_by_name(s))
                .collect()
        } else if let Some(e) = self.edge_by_name(text) {
            Some(vec![e])
        } else {
            text.chars()
                .map(|c| self.edge_by_name(&c.to_string()))
                .collect()
        }
    }
}

/// A finite path, anchored at its range vertex so that distinct vertices
/// give distinct empty paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    range: Vertex,
    source: Vertex,
    edges: SmallVec<[Edge; 8]>,
}

impl Path {
    /// The length-zero path at `v`.
    pub fn vertex(v: Vertex) -> Path {
        Path {
            range: v,
            source: v,
            edges: SmallVec::new(),
        }
    }

    /// Assembles a path without checking composability. Used by the action
    /// machinery, whose outputs are checked separately by the axiom suite.
    pub(crate) fn from_parts(range: Vertex, source: Vertex, edges: SmallVec<[Edge; 8]>) -> Path {
        Path {
            range,
            source,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Range `r(α)`.
    pub fn r(&self) -> Vertex {
        self.range
    }

    /// Source `d(α)`.
    pub fn d(&self) -> Vertex {
        self.source
    }

    /// `αβ`, defined when `r(β) = d(α)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if other.range != self.source {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path {
            range: self.range,
            source: other.source,
            edges,
        })
    }

    pub(crate) fn extend_unchecked(&self, e: Edge, d: Vertex) -> Path {
        let mut edges = self.edges.clone();
        edges.push(e);
        Path {
            range: self.range,
            source: d,
            edges,
        }
    }

    /// True when `self` is a prefix of `other` (including equality). A vertex
    /// is a prefix of exactly the paths anchored at it.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.range == other.range && other.edges.starts_with(&self.edges)
    }

    /// True when one of the two paths is a prefix of the other.
    pub fn comparable(&self, other: &Path) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    /// For `other = self·rest`, returns `rest` (anchored at `d(self)`).
    pub fn remainder_of(&self, other: &Path) -> Option<Path> {
        if !self.is_prefix_of(other) {
            return None;
        }
        Some(Path {
            range: self.source,
            source: other.source,
            edges: SmallVec::from_slice(&other.edges[self.edges.len()..]),
        })
    }

    /// The first `k` edges (the range vertex when `k = 0`). Needs the graph
    /// to recover the source of the truncation.
    pub fn truncate(&self, graph: &Graph, k: usize) -> Path {
        if k >= self.edges.len() {
            return self.clone();
        }
        if k == 0 {
            return Path::vertex(self.range);
        }
        Path {
            range: self.range,
            source: graph.d(self.edges[k - 1]),
            edges: SmallVec::from_slice(&self.edges[..k]),
        }
    }
}

/// The same edge word on the collapsed graph; vertices become the empty
/// word `∅`.
pub fn collapse_path(p: &Path) -> Path {
    Path {
        range: Vertex(0),
        source: Vertex(0),
        edges: p.edges.clone(),
    }
}
