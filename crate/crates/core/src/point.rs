//! Eventually periodic infinite paths `head · cycle^∞`.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::graph::{Edge, Graph, Path, Vertex};

/// An eventually periodic point of the infinite-path space, kept in a
/// normal form so that `==` is equality of infinite paths: the cycle is
/// primitive, and the head never ends with the cycle's last letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPoint {
    head: Vec<Edge>,
    cycle: Vec<Edge>,
}

impl BoundaryPoint {
    /// Checks composability of `head · cycle · cycle` and normalizes.
    pub fn new(graph: &Graph, head: Vec<Edge>, cycle: Vec<Edge>) -> Option<BoundaryPoint> {
        if cycle.is_empty() {
            return None;
        }
        let mut probe = head.clone();
        probe.extend_from_slice(&cycle);
        probe.extend_from_slice(&cycle);
        graph.path(Vertex(0), &probe)?;
        Some(Self::normalized(head, cycle))
    }

    /// Normalizes without checking composability.
    pub(crate) fn normalized(mut head: Vec<Edge>, mut cycle: Vec<Edge>) -> BoundaryPoint {
        debug_assert!(!cycle.is_empty());
        let n = cycle.len();
        if let Some(p) = (1..n).find(|&p| n % p == 0 && (p..n).all(|i| cycle[i] == cycle[i - p])) {
            cycle.truncate(p);
        }
        while head.last().is_some_and(|l| l == cycle.last().unwrap()) {
            head.pop();
            cycle.rotate_right(1);
        }
        BoundaryPoint { head, cycle }
    }

    pub fn head(&self) -> &[Edge] {
        &self.head
    }

    pub fn cycle(&self) -> &[Edge] {
        &self.cycle
    }

    /// The `i`-th letter, counting from zero.
    pub fn letter(&self, i: usize) -> Edge {
        if i < self.head.len() {
            self.head[i]
        } else {
            self.cycle[(i - self.head.len()) % self.cycle.len()]
        }
    }

    /// The first `k` letters.
    pub fn prefix(&self, k: usize) -> Vec<Edge> {
        (0..k).map(|i| self.letter(i)).collect()
    }

    /// The first `k` letters as a path (the range vertex when `k = 0`).
    pub fn prefix_path(&self, graph: &Graph, k: usize) -> Path {
        let first = self.letter(0);
        if k == 0 {
            return Path::vertex(graph.r(first));
        }
        graph
            .path(graph.r(first), &self.prefix(k))
            .expect("points are composable")
    }

    /// `r(x)`.
    pub fn range(&self, graph: &Graph) -> Vertex {
        graph.r(self.letter(0))
    }

    pub fn starts_with(&self, edges: &[Edge]) -> bool {
        edges.iter().enumerate().all(|(i, &e)| self.letter(i) == e)
    }

    /// True when the point lies in the cylinder of `p`.
    pub fn in_cylinder(&self, graph: &Graph, p: &Path) -> bool {
        if p.is_vertex() {
            self.range(graph) == p.r()
        } else {
            self.starts_with(p.edges())
        }
    }

    /// Drops the first `k` letters.
    pub fn shift(&self, k: usize) -> BoundaryPoint {
        if k <= self.head.len() {
            return BoundaryPoint {
                head: self.head[k..].to_vec(),
                cycle: self.cycle.clone(),
            };
        }
        let mut cycle = self.cycle.clone();
        cycle.rotate_left((k - self.head.len()) % self.cycle.len());
        BoundaryPoint {
            head: Vec::new(),
            cycle,
        }
    }

    /// `αx`, unchecked.
    pub fn prepend(&self, edges: &[Edge]) -> BoundaryPoint {
        let mut head = edges.to_vec();
        head.extend_from_slice(&self.head);
        Self::normalized(head, self.cycle.clone())
    }

    /// Renders as `head(cycle)`, e.g. `01(1)` for `0111…`.
    pub fn render(&self, graph: &Graph) -> String {
        format!(
            "{}({})",
            graph.render_edges(&self.head),
            graph.render_edges(&self.cycle)
        )
    }

    /// Parses `head(cycle)`.
    pub fn parse(graph: &Graph, text: &str) -> Option<BoundaryPoint> {
        let text = text.trim();
        let open = text.find('(')?;
        let inner = text[open + 1..].strip_suffix(')')?;
        let head = graph.parse_edges(&text[..open])?;
        let cycle = graph.parse_edges(inner)?;
        BoundaryPoint::new(graph, head, cycle)
    }

    pub fn display<'a>(&'a self, graph: &'a Graph) -> impl fmt::Display + 'a {
        struct D<'a>(&'a BoundaryPoint, &'a Graph);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, graph)
    }
}

/// Closed paths of length `len` through vertex `v`, used as cycles.
fn cycles_at(graph: &Graph, v: Vertex, len: usize) -> Vec<Vec<Edge>> {
    graph
        .extensions(&Path::vertex(v), len)
        .into_iter()
        .filter(|p| p.d() == v)
        .map(|p| p.edges().to_vec())
        .collect()
}

/// Every point `p · c^∞` with `|p| = head_len` and `1 ≤ |c| ≤ max_cycle`,
/// deduplicated and sorted.
pub fn sample_points(graph: &Graph, head_len: usize, max_cycle: usize) -> Vec<BoundaryPoint> {
    let mut out = BTreeSet::new();
    for p in graph.paths_of_length(head_len) {
        for len in 1..=max_cycle {
            for c in cycles_at(graph, p.d(), len) {
                out.insert(BoundaryPoint::normalized(p.edges().to_vec(), c));
            }
        }
    }
    out.into_iter().collect()
}

/// Points `β · x` for each sample `x` starting at `d(β)`.
pub fn points_in_cylinder(
    graph: &Graph,
    beta: &Path,
    tail_len: usize,
    max_cycle: usize,
) -> Vec<BoundaryPoint> {
    let mut out = BTreeSet::new();
    for p in graph.extensions(&Path::vertex(beta.d()), tail_len) {
        for len in 1..=max_cycle {
            for c in cycles_at(graph, p.d(), len) {
                let mut head = beta.edges().to_vec();
                head.extend_from_slice(p.edges());
                out.insert(BoundaryPoint::normalized(head, c));
            }
        }
    }
    out.into_iter().collect()
}

/// A random point starting at `start` (any vertex when `None`) with the
/// given head and cycle lengths. Falls back to shorter cycles when the
/// requested length has no closed path.
pub fn random_point<R: Rng>(
    graph: &Graph,
    rng: &mut R,
    start: Option<Vertex>,
    head_len: usize,
    cycle_len: usize,
) -> BoundaryPoint {
    let mut v = start.unwrap_or_else(|| Vertex(rng.random_range(0..graph.vertex_count()) as u32));
    let mut head = Vec::with_capacity(head_len);
    for _ in 0..head_len {
        let out = graph.edges_with_range(v);
        let e = out[rng.random_range(0..out.len())];
        head.push(e);
        v = graph.d(e);
    }
    for len in (1..=cycle_len.max(1)).rev() {
        let cycles = cycles_at(graph, v, len);
        if !cycles.is_empty() {
            let c = cycles[rng.random_range(0..cycles.len())].clone();
            return BoundaryPoint::normalized(head, c);
        }
    }
    // No short closed path at `v`: walk until a vertex repeats.
    let mut seen = vec![usize::MAX; graph.vertex_count()];
    let mut walk = Vec::new();
    while seen[v.index()] == usize::MAX {
        seen[v.index()] = walk.len();
        let e = graph.edges_with_range(v)[0];
        walk.push(e);
        v = graph.d(e);
    }
    let split = seen[v.index()];
    let cycle = walk.split_off(split);
    head.extend(walk);
    BoundaryPoint::normalized(head, cycle)
}
