//! Finite unions of cylinder sets, kept as canonical antichains.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, Path};
use crate::point::BoundaryPoint;

/// `⋃ αΣ` over a finite antichain of paths. The antichain is canonical: no
/// member is a prefix of another, and no path has all of its one-edge
/// extensions present (those are collapsed into the path). Two sets are
/// equal as subsets of the boundary exactly when their antichains are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClopenSet {
    cylinders: BTreeSet<Path>,
}

impl ClopenSet {
    pub fn empty() -> ClopenSet {
        ClopenSet::default()
    }

    /// The whole boundary: one length-0 path per vertex.
    pub fn full(graph: &Graph) -> ClopenSet {
        ClopenSet {
            cylinders: graph.vertices().map(Path::vertex).collect(),
        }
    }

    pub fn cylinder(graph: &Graph, p: Path) -> ClopenSet {
        ClopenSet::from_paths(graph, [p])
    }

    pub fn from_paths(graph: &Graph, paths: impl IntoIterator<Item = Path>) -> ClopenSet {
        let mut set: BTreeSet<Path> = paths.into_iter().collect();
        let all: Vec<Path> = set.iter().cloned().collect();
        set.retain(|p| !all.iter().any(|q| q != p && q.is_prefix_of(p)));
        collapse_siblings(graph, &mut set);
        ClopenSet { cylinders: set }
    }

    pub fn cylinders(&self) -> impl Iterator<Item = &Path> {
        self.cylinders.iter()
    }

    pub fn len(&self) -> usize {
        self.cylinders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cylinders.is_empty()
    }

    pub fn is_full(&self, graph: &Graph) -> bool {
        *self == ClopenSet::full(graph)
    }

    pub fn contains(&self, graph: &Graph, x: &BoundaryPoint) -> bool {
        self.cylinders.iter().any(|p| x.in_cylinder(graph, p))
    }

    /// Whether the cylinder of `p` lies inside the set.
    pub fn covers(&self, p: &Path) -> bool {
        self.cylinders.iter().any(|q| q.is_prefix_of(p))
    }

    pub fn union(&self, graph: &Graph, other: &ClopenSet) -> ClopenSet {
        ClopenSet::from_paths(
            graph,
            self.cylinders.iter().chain(&other.cylinders).cloned(),
        )
    }

    pub fn intersection(&self, graph: &Graph, other: &ClopenSet) -> ClopenSet {
        let mut out = Vec::new();
        for a in &self.cylinders {
            for b in &other.cylinders {
                if a.is_prefix_of(b) {
                    out.push(b.clone());
                } else if b.is_prefix_of(a) {
                    out.push(a.clone());
                }
            }
        }
        ClopenSet::from_paths(graph, out)
    }

    pub fn complement(&self, graph: &Graph) -> ClopenSet {
        let mut out = Vec::new();
        let mut stack: Vec<Path> = graph.vertices().map(Path::vertex).collect();
        while let Some(p) = stack.pop() {
            if self.covers(&p) {
                continue;
            }
            if self.cylinders.iter().any(|q| p.is_prefix_of(q)) {
                stack.extend(graph.extensions(&p, 1));
            } else {
                out.push(p);
            }
        }
        ClopenSet::from_paths(graph, out)
    }

    pub fn difference(&self, graph: &Graph, other: &ClopenSet) -> ClopenSet {
        self.intersection(graph, &other.complement(graph))
    }

    pub fn is_subset(&self, graph: &Graph, other: &ClopenSet) -> bool {
        self.difference(graph, other).is_empty()
    }

    pub fn is_disjoint(&self, graph: &Graph, other: &ClopenSet) -> bool {
        self.intersection(graph, other).is_empty()
    }

    /// All length-`k` paths whose cylinders lie in the set, for `k` at
    /// least the longest member.
    pub fn paths_at_depth(&self, graph: &Graph, k: usize) -> Vec<Path> {
        let mut out = Vec::new();
        for p in &self.cylinders {
            if p.len() <= k {
                out.extend(graph.extensions(p, k - p.len()));
            }
        }
        out.sort();
        out
    }

    pub fn max_len(&self) -> usize {
        self.cylinders.iter().map(Path::len).max().unwrap_or(0)
    }

    /// Sorted prefix list, e.g. `{0, 10}`; `∅` marks a vertex cylinder.
    pub fn render(&self, graph: &Graph) -> String {
        let items: Vec<String> = self
            .cylinders
            .iter()
            .map(|p| graph.render_path(p))
            .collect();
        format!("{{{}}}", items.join(", "))
    }
}

fn collapse_siblings(graph: &Graph, set: &mut BTreeSet<Path>) {
    loop {
        let mut children: BTreeMap<Path, usize> = BTreeMap::new();
        for p in set.iter().filter(|p| !p.is_vertex()) {
            *children.entry(p.truncate(graph, p.len() - 1)).or_default() += 1;
        }
        let full: Vec<Path> = children
            .into_iter()
            .filter(|(parent, count)| *count == graph.edges_with_range(parent.d()).len())
            .map(|(parent, _)| parent)
            .collect();
        if full.is_empty() {
            return;
        }
        for parent in full {
            set.retain(|p| !(p.len() == parent.len() + 1 && parent.is_prefix_of(p)));
            set.insert(parent);
        }
    }
}
