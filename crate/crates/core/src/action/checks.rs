//! Decision procedures on a [`SelfSimilarAction`], all bounded explicitly.

use std::fmt;

use serde::Serialize;

use super::{Group, SelfSimilarAction};
use crate::exec::Exec;
use crate::graph::{Edge, Path};

/// The identities a self-similar graph action must satisfy on the graph
/// itself, then the `Collapse*` ones on its single-vertex collapse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    /// `(gh)α = g(hα)`.
    ActionProduct,
    /// `φ(gh, α) = φ(g, hα)φ(h, α)`.
    CocycleProduct,
    /// `φ(g, x) = g` on vertices.
    VertexRestriction,
    /// `r(gα) = g·r(α)`.
    RangeEquivariant,
    /// `d(gα) = g·d(α)`.
    SourceEquivariant,
    /// `φ(g, α)` moves vertices as `g` does.
    RestrictionOnVertices,
    /// `g(αβ) = (gα)φ(g, α)β`.
    PathAction,
    /// `φ(g, αβ) = φ(φ(g, α), β)`.
    PathCocycle,
    CollapseUnitAction,
    CollapseActionProduct,
    CollapseEmptyPath,
    CollapsePathAction,
    CollapseEmptyRestriction,
    CollapsePathCocycle,
    CollapseUnitRestriction,
    CollapseCocycleProduct,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Group elements range over the ball of this word length.
    pub radius: usize,
    /// Paths range over lengths up to this.
    pub path_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub bounds: Bounds,
    pub counterexample: Option<Counterexample>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoFree<E> {
    /// `g ≠ 1` fixes the edge and restricts to `1` on it.
    Violated {
        g: E,
        edge: Edge,
    },
    NoViolationUpTo {
        radius: usize,
    },
}

impl<E> PseudoFree<E> {
    pub fn is_violated(&self) -> bool {
        matches!(self, PseudoFree::Violated { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exhausting<E> {
    pub bounds: Bounds,
    /// `(g, α)` with `φ(g, α) = 1`, `α` the first such path found.
    pub witnesses: Vec<(E, Path)>,
    /// Elements with no witness within the path bound.
    pub unresolved: Vec<E>,
}

impl<E> Exhausting<E> {
    pub fn is_resolved(&self) -> bool {
        self.unresolved.is_empty()
    }
}

impl<G: Group> SelfSimilarAction<G> {
    /// Checks the identities on this graph, then on its collapse, for `g, h`
    /// in the ball of `radius` and all paths up to `path_len` (pairs `α, β`
    /// with `|α| + |β| ≤ path_len` for the composite laws). Reports the
    /// first failure, in axiom order.
    pub fn axioms_report(&self, radius: usize, path_len: usize, exec: Exec) -> AxiomReport
    where
        G: Clone,
    {
        let bounds = Bounds { radius, path_len };
        let counterexample = self
            .graph_axioms(radius, path_len, exec, false)
            .or_else(|| self.collapse().graph_axioms(radius, path_len, exec, true));
        AxiomReport {
            bounds,
            counterexample,
        }
    }

    fn graph_axioms(
        &self,
        radius: usize,
        path_len: usize,
        exec: Exec,
        collapsed: bool,
    ) -> Option<Counterexample> {
        let ball = self.group.ball(radius);
        let paths = self.graph.paths_up_to(path_len);
        let group = &self.group;
        let one = group.identity();
        let p = |a: &Path| self.render_path(a);
        let el = |g: &G::Elem| self.render_elem(g);
        let fail = |axiom, detail: String| Some(Counterexample { axiom, detail });
        let tag = |e: Axiom, s: Axiom| if collapsed { s } else { e };

        if collapsed {
            // unit laws and the empty path
            for a in &paths {
                if self.act(&one, a) != *a {
                    return fail(
                        Axiom::CollapseUnitAction,
                        format!("1·{} = {}", p(a), p(&self.act(&one, a))),
                    );
                }
                if !group.is_identity(&self.restrict(&one, a)) {
                    return fail(
                        Axiom::CollapseUnitRestriction,
                        format!("φ(1, {}) = {}", p(a), el(&self.restrict(&one, a))),
                    );
                }
            }
            let empty = &paths[0];
            for g in &ball {
                let (w, r) = self.act_restrict(g, empty);
                if w != *empty {
                    return fail(Axiom::CollapseEmptyPath, format!("{}·∅ = {}", el(g), p(&w)));
                }
                if r != *g {
                    return fail(
                        Axiom::CollapseEmptyRestriction,
                        format!("φ({}, ∅) = {}", el(g), el(&r)),
                    );
                }
            }
        }

        // products of group elements
        let pairs: Vec<(&G::Elem, &G::Elem)> = ball
            .iter()
            .flat_map(|g| ball.iter().map(move |h| (g, h)))
            .collect();
        let found = exec.find_map_first(&pairs, |&(g, h)| {
            let gh = group.multiply(g, h);
            for a in &paths {
                let (ha, rh) = self.act_restrict(h, a);
                let (gha, rg) = self.act_restrict(g, &ha);
                let (direct, rgh) = self.act_restrict(&gh, a);
                if direct != gha {
                    return Some(Counterexample {
                        axiom: tag(Axiom::ActionProduct, Axiom::CollapseActionProduct),
                        detail: format!(
                            "g = {}, h = {}, α = {}: (gh)α = {} but g(hα) = {}",
                            el(g),
                            el(h),
                            p(a),
                            p(&direct),
                            p(&gha)
                        ),
                    });
                }
                let composed = group.multiply(&rg, &rh);
                if rgh != composed {
                    return Some(Counterexample {
                        axiom: tag(Axiom::CocycleProduct, Axiom::CollapseCocycleProduct),
                        detail: format!(
                            "g = {}, h = {}, α = {}: φ(gh, α) = {} but φ(g, hα)φ(h, α) = {}",
                            el(g),
                            el(h),
                            p(a),
                            el(&rgh),
                            el(&composed)
                        ),
                    });
                }
            }
            None
        });
        if found.is_some() {
            return found;
        }

        if !collapsed {
            let vertices: Vec<_> = self.graph.vertices().collect();
            let found = exec.find_map_first(&ball, |g| {
                for &x in &vertices {
                    let r = self.restrict(g, &Path::vertex(x));
                    if r != *g {
                        return Some(Counterexample {
                            axiom: Axiom::VertexRestriction,
                            detail: format!(
                                "φ({}, {}) = {}",
                                el(g),
                                self.graph.vertex_name(x),
                                el(&r)
                            ),
                        });
                    }
                }
                for a in paths.iter().filter(|a| !a.is_vertex()) {
                    let (ga, r) = self.act_restrict(g, a);
                    if ga.r() != self.act_vertex(g, a.r()) {
                        return Some(Counterexample {
                            axiom: Axiom::RangeEquivariant,
                            detail: format!("g = {}, α = {}: r(gα) ≠ g·r(α)", el(g), p(a)),
                        });
                    }
                    if ga.d() != self.act_vertex(g, a.d()) {
                        return Some(Counterexample {
                            axiom: Axiom::SourceEquivariant,
                            detail: format!("g = {}, α = {}: d(gα) ≠ g·d(α)", el(g), p(a)),
                        });
                    }
                    for &x in &vertices {
                        if self.act_vertex(&r, x) != self.act_vertex(g, x) {
                            return Some(Counterexample {
                                axiom: Axiom::RestrictionOnVertices,
                                detail: format!(
                                    "g = {}, α = {}: φ(g, α) = {} moves {} differently from g",
                                    el(g),
                                    p(a),
                                    el(&r),
                                    self.graph.vertex_name(x)
                                ),
                            });
                        }
                    }
                }
                None
            });
            if found.is_some() {
                return found;
            }
        }

        // composable pairs of paths
        let splits: Vec<(&Path, &Path)> = paths
            .iter()
            .flat_map(|a| paths.iter().map(move |b| (a, b)))
            .filter(|(a, b)| a.len() + b.len() <= path_len && b.r() == a.d())
            .collect();
        exec.find_map_first(&ball, |g| {
            for &(a, b) in &splits {
                let ab = a.concat(b).expect("filtered composable");
                let (whole, r_whole) = self.act_restrict(g, &ab);
                let (ga, r) = self.act_restrict(g, a);
                let (rb, r_r) = self.act_restrict(&r, b);
                let split = ga.concat(&rb);
                if split.as_ref() != Some(&whole) {
                    let shown = split
                        .map(|s| p(&s))
                        .unwrap_or_else(|| format!("{}·{} (not composable)", p(&ga), p(&rb)));
                    return Some(Counterexample {
                        axiom: tag(Axiom::PathAction, Axiom::CollapsePathAction),
                        detail: format!(
                            "g = {}, α = {}, β = {}: g(αβ) = {} but (gα)φ(g, α)β = {}",
                            el(g),
                            p(a),
                            p(b),
                            p(&whole),
                            shown
                        ),
                    });
                }
                if r_whole != r_r {
                    return Some(Counterexample {
                        axiom: tag(Axiom::PathCocycle, Axiom::CollapsePathCocycle),
                        detail: format!(
                            "g = {}, α = {}, β = {}: φ(g, αβ) = {} but φ(φ(g, α), β) = {}",
                            el(g),
                            p(a),
                            p(b),
                            el(&r_whole),
                            el(&r_r)
                        ),
                    });
                }
            }
            None
        })
    }

    /// Searches the ball for `g ≠ 1` and an edge `e` with `ge = e` and
    /// `φ(g, e) = 1`. Witnesses come in ball order, then edge order.
    pub fn is_pseudo_free(&self, radius: usize, exec: Exec) -> PseudoFree<G::Elem> {
        let ball = self.group.ball(radius);
        let edges: Vec<Edge> = self.graph.edges().collect();
        exec.find_map_first(&ball, |g| {
            if self.group.is_identity(g) {
                return None;
            }
            edges.iter().find_map(|&e| {
                let (ge, r) = self.act_edge(g, e);
                (ge == e && self.group.is_identity(&r)).then(|| PseudoFree::Violated {
                    g: g.clone(),
                    edge: e,
                })
            })
        })
        .unwrap_or(PseudoFree::NoViolationUpTo { radius })
    }

    /// The path form: `g ≠ 1` and a path `w` with `gw = w`, `φ(g, w) = 1`.
    /// Vertices are excluded since `φ(g, x) = g`.
    pub fn pseudo_free_path_witness(
        &self,
        radius: usize,
        path_len: usize,
        exec: Exec,
    ) -> Option<(G::Elem, Path)> {
        let ball = self.group.ball(radius);
        let paths: Vec<Path> = self
            .graph
            .paths_up_to(path_len)
            .into_iter()
            .filter(|p| !p.is_vertex())
            .collect();
        exec.find_map_first(&ball, |g| {
            if self.group.is_identity(g) {
                return None;
            }
            paths.iter().find_map(|w| {
                let (gw, r) = self.act_restrict(g, w);
                (gw == *w && self.group.is_identity(&r)).then(|| (g.clone(), w.clone()))
            })
        })
    }

    /// For each `g` in the ball, the first path `α` (by length, then
    /// lexicographically) with `|α| ≤ path_len` and `φ(g, α) = 1`.
    pub fn is_exhausting(&self, radius: usize, path_len: usize, exec: Exec) -> Exhausting<G::Elem> {
        let ball = self.group.ball(radius);
        let paths = self.graph.paths_up_to(path_len);
        let found = exec.map(&ball, |g| {
            paths
                .iter()
                .find(|a| self.group.is_identity(&self.restrict(g, a)))
                .cloned()
        });
        let mut witnesses = Vec::new();
        let mut unresolved = Vec::new();
        for (g, w) in ball.into_iter().zip(found) {
            match w {
                Some(a) => witnesses.push((g, a)),
                None => unresolved.push(g),
            }
        }
        Exhausting {
            bounds: Bounds { radius, path_len },
            witnesses,
            unresolved,
        }
    }

    /// True when every `g` in the ball permutes the paths of each length
    /// up to `path_len`.
    pub fn is_bijective_on_paths(&self, radius: usize, path_len: usize) -> bool {
        let ball = self.group.ball(radius);
        (0..=path_len).all(|n| {
            let layer = self.graph.paths_of_length(n);
            ball.iter().all(|g| {
                let mut image: Vec<Path> = layer.iter().map(|a| self.act(g, a)).collect();
                image.sort();
                image.dedup();
                image.len() == layer.len()
            })
        })
    }
}
