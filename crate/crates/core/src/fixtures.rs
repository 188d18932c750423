//! Actions used throughout the tests, benches and examples.

use crate::action::{FiniteGroup, GeneratorTable, Integers, SelfSimilarAction};
use crate::graph::{Edge, Graph, Vertex};

/// The `n`-odometer: `z` adds one to the leading digit, carrying into the
/// rest: `z·i = i+1` with `φ(z, i) = 1` for `i < n-1`, and
/// `z·(n-1) = 0` with `φ(z, n-1) = z`.
pub fn odometer(n: usize) -> SelfSimilarAction<Integers> {
    assert!(n >= 2);
    let table = GeneratorTable {
        vertex: vec![Vertex(0)],
        edge: (0..n).map(|i| Edge(((i + 1) % n) as u32)).collect(),
        cocycle: (0..n).map(|i| if i == n - 1 { 1 } else { 0 }).collect(),
    };
    SelfSimilarAction::new(Graph::rose(n), Integers::new(), vec![table]).expect("odometer tables")
}

/// `Z` fixing every edge with `φ(z, e) = z`: every restriction is `z`, so
/// the action is not exhausting.
pub fn integers_fixed(n: usize) -> SelfSimilarAction<Integers> {
    let table = GeneratorTable {
        vertex: vec![Vertex(0)],
        edge: (0..n).map(|i| Edge(i as u32)).collect(),
        cocycle: vec![1; n],
    };
    SelfSimilarAction::new(Graph::rose(n), Integers::new(), vec![table]).expect("identity tables")
}

/// `Z/2` acting trivially on `R_2` with trivial cocycle. Not pseudo-free.
pub fn z2_trivial() -> SelfSimilarAction<FiniteGroup> {
    let group = FiniteGroup::cyclic(2, "t");
    let table = GeneratorTable {
        vertex: vec![Vertex(0)],
        edge: vec![Edge(0), Edge(1)],
        cocycle: vec![0, 0],
    };
    SelfSimilarAction::new(Graph::rose(2), group, vec![table]).expect("trivial tables")
}

/// Two vertices `v`, `w` with edges `a: w → v`, `b: v → w` and loops `c`
/// at `v`, `f` at `w`. The generator `t` of `Z/2` swaps the vertices,
/// swaps `a ↔ b` and `c ↔ f`, and restricts to itself on every edge.
pub fn two_vertex_swap() -> SelfSimilarAction<FiniteGroup> {
    let graph = Graph::new(
        ["v", "w"],
        [("a", 0, 1), ("b", 1, 0), ("c", 0, 0), ("f", 1, 1)],
    );
    let group = FiniteGroup::cyclic(2, "t");
    let table = GeneratorTable {
        vertex: vec![Vertex(1), Vertex(0)],
        edge: vec![Edge(1), Edge(0), Edge(3), Edge(2)],
        cocycle: vec![1; 4],
    };
    SelfSimilarAction::new(graph, group, vec![table]).expect("swap tables")
}

/// The trivial group on `R_n`: the semigroup is the Cuntz inverse semigroup.
pub fn trivial_group(n: usize) -> SelfSimilarAction<FiniteGroup> {
    SelfSimilarAction::new(Graph::rose(n), FiniteGroup::trivial(), Vec::new()).expect("no tables")
}
