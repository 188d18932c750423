//! Self-similar graph actions `(G, E, φ)`.
//!
//! The input data is edge level: for each generator `g` its permutation
//! of vertices and edges and the restrictions `φ(g, e)`. Everything else
//! (inverse generators, arbitrary group elements, finite paths, boundary
//! points) is derived by the recursions
//! `φ(gh, e) = φ(g, he) φ(h, e)` and `g(eα) = (ge) φ(g, e)α`.
//! Whether the derived data is consistent is what [`checks`] decides.

pub mod checks;
pub mod finite;
pub mod group;
pub mod integers;

use std::collections::HashMap;

use smallvec::SmallVec;
use thiserror::Error;

use crate::graph::{Edge, Graph, Path, Vertex};
use crate::point::BoundaryPoint;

pub use finite::{FiniteGroup, FiniteGroupError};
pub use group::{Group, Letter, Relation, Word, WordError};
pub use integers::Integers;

/// Edge-level data for one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorTable<E> {
    /// `g · v`, indexed by vertex.
    pub vertex: Vec<Vertex>,
    /// `g · e`, indexed by edge.
    pub edge: Vec<Edge>,
    /// `φ(g, e)`, indexed by edge.
    pub cocycle: Vec<E>,
}

/// One entry of a generator table, used to build perturbed actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableEntry<E> {
    Vertex {
        generator: usize,
        vertex: Vertex,
        image: Vertex,
    },
    Edge {
        generator: usize,
        edge: Edge,
        image: Edge,
    },
    Cocycle {
        generator: usize,
        edge: Edge,
        value: E,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("expected {expected} generator tables, found {found}")]
    TableCount { expected: usize, found: usize },
    #[error("generator {generator}: {what} table has {found} entries, expected {expected}")]
    TableSize {
        generator: String,
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("generator {generator}: {what} image out of range")]
    OutOfRange {
        generator: String,
        what: &'static str,
    },
    #[error("generator {generator} does not permute the {what}")]
    NotBijective {
        generator: String,
        what: &'static str,
    },
}

#[derive(Clone, Debug)]
struct Tables<E> {
    vertex: Vec<Vertex>,
    edge: Vec<Edge>,
    cocycle: Vec<E>,
}

/// A group acting on a finite graph by automorphisms, with a cocycle.
///
/// Construction checks only that the tables have the right shape and that
/// each generator permutes vertices and edges; the axioms are checked by
/// [`SelfSimilarAction::axioms_report`].
#[derive(Clone, Debug)]
pub struct SelfSimilarAction<G: Group> {
    graph: Graph,
    group: G,
    tables: Vec<GeneratorTable<G::Elem>>,
    forward: Vec<Tables<G::Elem>>,
    backward: Vec<Tables<G::Elem>>,
}

fn inverse_permutation(perm: &[u32]) -> Option<Vec<u32>> {
    let mut inv = vec![u32::MAX; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        let slot = inv.get_mut(p as usize)?;
        if *slot != u32::MAX {
            return None;
        }
        *slot = i as u32;
    }
    Some(inv)
}

impl<G: Group> SelfSimilarAction<G> {
    pub fn new(
        graph: Graph,
        group: G,
        tables: Vec<GeneratorTable<G::Elem>>,
    ) -> Result<Self, ActionError> {
        if tables.len() != group.generator_count() {
            return Err(ActionError::TableCount {
                expected: group.generator_count(),
                found: tables.len(),
            });
        }
        let mut forward = Vec::with_capacity(tables.len());
        let mut backward = Vec::with_capacity(tables.len());
        for (i, t) in tables.iter().enumerate() {
            let name = || group.generator_name(i).to_owned();
            for (what, expected, found) in [
                ("vertex", graph.vertex_count(), t.vertex.len()),
                ("edge", graph.edge_count(), t.edge.len()),
                ("cocycle", graph.edge_count(), t.cocycle.len()),
            ] {
                if expected != found {
                    return Err(ActionError::TableSize {
                        generator: name(),
                        what,
                        expected,
                        found,
                    });
                }
            }
            let vperm: Vec<u32> = t.vertex.iter().map(|v| v.0).collect();
            let eperm: Vec<u32> = t.edge.iter().map(|e| e.0).collect();
            if vperm.iter().any(|&v| v as usize >= graph.vertex_count()) {
                return Err(ActionError::OutOfRange {
                    generator: name(),
                    what: "vertex",
                });
            }
            if eperm.iter().any(|&e| e as usize >= graph.edge_count()) {
                return Err(ActionError::OutOfRange {
                    generator: name(),
                    what: "edge",
                });
            }
            let vinv = inverse_permutation(&vperm).ok_or_else(|| ActionError::NotBijective {
                generator: name(),
                what: "vertices",
            })?;
            let einv = inverse_permutation(&eperm).ok_or_else(|| ActionError::NotBijective {
                generator: name(),
                what: "edges",
            })?;
            // g⁻¹e is the e' with ge' = e, and φ(g⁻¹, e) = φ(g, g⁻¹e)⁻¹.
            let inv_cocycle = einv
                .iter()
                .map(|&e| group.invert(&t.cocycle[e as usize]))
                .collect();
            forward.push(Tables {
                vertex: t.vertex.clone(),
                edge: t.edge.clone(),
                cocycle: t.cocycle.clone(),
            });
            backward.push(Tables {
                vertex: vinv.into_iter().map(Vertex).collect(),
                edge: einv.into_iter().map(Edge).collect(),
                cocycle: inv_cocycle,
            });
        }
        Ok(SelfSimilarAction {
            graph,
            group,
            tables,
            forward,
            backward,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn tables(&self) -> &[GeneratorTable<G::Elem>] {
        &self.tables
    }

    /// Every entry of every generator table.
    pub fn table_entries(&self) -> Vec<TableEntry<G::Elem>> {
        let mut out = Vec::new();
        for (generator, t) in self.tables.iter().enumerate() {
            for (i, &image) in t.vertex.iter().enumerate() {
                out.push(TableEntry::Vertex {
                    generator,
                    vertex: Vertex(i as u32),
                    image,
                });
            }
            for (i, &image) in t.edge.iter().enumerate() {
                out.push(TableEntry::Edge {
                    generator,
                    edge: Edge(i as u32),
                    image,
                });
            }
            for (i, value) in t.cocycle.iter().enumerate() {
                out.push(TableEntry::Cocycle {
                    generator,
                    edge: Edge(i as u32),
                    value: value.clone(),
                });
            }
        }
        out
    }

    /// A copy with one table entry overwritten.
    pub fn with_entry(&self, entry: &TableEntry<G::Elem>) -> Result<Self, ActionError>
    where
        G: Clone,
    {
        let mut tables = self.tables.clone();
        match entry {
            TableEntry::Vertex {
                generator,
                vertex,
                image,
            } => tables[*generator].vertex[vertex.index()] = *image,
            TableEntry::Edge {
                generator,
                edge,
                image,
            } => tables[*generator].edge[edge.index()] = *image,
            TableEntry::Cocycle {
                generator,
                edge,
                value,
            } => tables[*generator].cocycle[edge.index()] = value.clone(),
        }
        SelfSimilarAction::new(self.graph.clone(), self.group.clone(), tables)
    }

    /// The induced action on the collapsed graph with the same tables.
    pub fn collapse(&self) -> SelfSimilarAction<G>
    where
        G: Clone,
    {
        let graph = self.graph.collapse();
        let tables = self
            .tables
            .iter()
            .map(|t| GeneratorTable {
                vertex: vec![Vertex(0)],
                edge: t.edge.clone(),
                cocycle: t.cocycle.clone(),
            })
            .collect();
        SelfSimilarAction::new(graph, self.group.clone(), tables)
            .expect("collapse keeps permutations")
    }

    fn letter_tables(&self, l: Letter) -> &Tables<G::Elem> {
        if l.inverse {
            &self.backward[l.generator]
        } else {
            &self.forward[l.generator]
        }
    }

    pub fn act_vertex(&self, g: &G::Elem, v: Vertex) -> Vertex {
        self.group
            .factor(g)
            .iter()
            .rev()
            .fold(v, |v, &l| self.letter_tables(l).vertex[v.index()])
    }

    /// `(g e, φ(g, e))`.
    pub fn act_edge(&self, g: &G::Elem, e: Edge) -> (Edge, G::Elem) {
        let mut edge = e;
        let mut restriction = self.group.identity();
        for &l in self.group.factor(g).iter().rev() {
            let t = self.letter_tables(l);
            restriction = self.group.multiply(&t.cocycle[edge.index()], &restriction);
            edge = t.edge[edge.index()];
        }
        (edge, restriction)
    }

    /// Acts on a raw edge sequence, returning the image and the restriction.
    pub fn act_edges(&self, g: &G::Elem, edges: &[Edge]) -> (SmallVec<[Edge; 8]>, G::Elem) {
        let mut state = g.clone();
        let mut out = SmallVec::with_capacity(edges.len());
        for &e in edges {
            let (image, next) = self.act_edge(&state, e);
            out.push(image);
            state = next;
        }
        (out, state)
    }

    /// `(gα, φ(g, α))`. On vertices this is `(g·x, g)`.
    pub fn act_restrict(&self, g: &G::Elem, path: &Path) -> (Path, G::Elem) {
        if path.is_vertex() {
            return (Path::vertex(self.act_vertex(g, path.r())), g.clone());
        }
        let (edges, state) = self.act_edges(g, path.edges());
        let range = self.graph.r(edges[0]);
        let source = self.graph.d(*edges.last().unwrap());
        (Path::from_parts(range, source, edges), state)
    }

    pub fn act(&self, g: &G::Elem, path: &Path) -> Path {
        self.act_restrict(g, path).0
    }

    pub fn restrict(&self, g: &G::Elem, path: &Path) -> G::Elem {
        self.act_restrict(g, path).1
    }

    /// The first `k` letters of `g x`.
    pub fn act_prefix(&self, g: &G::Elem, x: &BoundaryPoint, k: usize) -> Vec<Edge> {
        self.act_edges(g, &x.prefix(k)).0.into_vec()
    }

    /// `g x` exactly, by following the restrictions of `g` around the
    /// cycle until one repeats. `None` if no repeat shows up within
    /// `max_passes` trips around the cycle.
    pub fn act_point_bounded(
        &self,
        g: &G::Elem,
        x: &BoundaryPoint,
        max_passes: usize,
    ) -> Option<BoundaryPoint> {
        let (head, mut state) = self.act_edges(g, x.head());
        let mut seen: HashMap<G::Elem, usize> = HashMap::new();
        seen.insert(state.clone(), 0);
        let mut passes: Vec<SmallVec<[Edge; 8]>> = Vec::new();
        for _ in 0..max_passes {
            let (out, next) = self.act_edges(&state, x.cycle());
            passes.push(out);
            if let Some(&i) = seen.get(&next) {
                let mut h = head.into_vec();
                passes[..i].iter().for_each(|p| h.extend_from_slice(p));
                let cycle = passes[i..].iter().flat_map(|p| p.iter().copied()).collect();
                return Some(BoundaryPoint::normalized(h, cycle));
            }
            seen.insert(next.clone(), passes.len());
            state = next;
        }
        None
    }

    pub fn act_point(&self, g: &G::Elem, x: &BoundaryPoint) -> Option<BoundaryPoint> {
        self.act_point_bounded(g, x, 4096)
    }

    pub fn render_path(&self, p: &Path) -> String {
        self.graph.render_path(p)
    }

    pub fn render_elem(&self, g: &G::Elem) -> String {
        self.group.render(g)
    }
}
