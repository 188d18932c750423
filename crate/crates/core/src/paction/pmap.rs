//! Partial homeomorphisms of the boundary given by prefix rewriting.

use crate::action::{Group, SelfSimilarAction};
use crate::graph::{Edge, Graph, Path};
use crate::isg::Triple;
use crate::point::BoundaryPoint;

use super::clopen::ClopenSet;

/// `βx ↦ α(gx)` on the cylinder of `input = β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece<E> {
    pub input: Path,
    pub g: E,
    pub output: Path,
}

impl<E: Clone> Piece<E> {
    pub fn of_triple(t: &Triple<E>) -> Piece<E> {
        Piece {
            input: t.beta.clone(),
            g: t.g.clone(),
            output: t.alpha.clone(),
        }
    }

    pub fn to_triple(&self) -> Triple<E> {
        Triple {
            alpha: self.output.clone(),
            g: self.g.clone(),
            beta: self.input.clone(),
        }
    }
}

/// Restricts a piece to the cylinder of `input · γ`, with `γ` anchored at
/// `d(input)`: the result is `(input·γ, φ(g, γ), output·gγ)`.
pub fn refine<G: Group>(
    action: &SelfSimilarAction<G>,
    p: &Piece<G::Elem>,
    gamma: &Path,
) -> Piece<G::Elem> {
    let (moved, g) = action.act_restrict(&p.g, gamma);
    Piece {
        input: p
            .input
            .concat(gamma)
            .expect("extension starts at the piece source"),
        g,
        output: p
            .output
            .concat(&moved)
            .expect("valid pieces keep d(α) = g·d(β)"),
    }
}

/// Refines `p` to the longer input `target`, which must extend `p.input`.
pub fn refine_to<G: Group>(
    action: &SelfSimilarAction<G>,
    p: &Piece<G::Elem>,
    target: &Path,
) -> Piece<G::Elem> {
    let gamma = p
        .input
        .remainder_of(target)
        .expect("target extends the piece input");
    refine(action, p, &gamma)
}

/// A finite list of pieces with pairwise disjoint input cylinders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMap<E> {
    pieces: Vec<Piece<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapDefect<E> {
    /// `d(α) ≠ g·d(β)`.
    Invalid(Piece<E>),
    InputsOverlap(Piece<E>, Piece<E>),
    OutputsOverlap(Piece<E>, Piece<E>),
}

impl<E: Clone + Eq + Ord> PartialMap<E> {
    pub fn empty() -> PartialMap<E> {
        PartialMap { pieces: Vec::new() }
    }

    pub fn from_pieces(mut pieces: Vec<Piece<E>>) -> PartialMap<E> {
        pieces.sort();
        PartialMap { pieces }
    }

    pub fn identity<G: Group<Elem = E>>(action: &SelfSimilarAction<G>) -> PartialMap<E> {
        let one = action.group().identity();
        PartialMap::from_pieces(
            action
                .graph()
                .vertices()
                .map(|v| Piece {
                    input: Path::vertex(v),
                    g: one.clone(),
                    output: Path::vertex(v),
                })
                .collect(),
        )
    }

    /// The map `θ_s: βΣ → αΣ` of `s = (α, g, β)`.
    pub fn of_triple(t: &Triple<E>) -> PartialMap<E> {
        PartialMap {
            pieces: vec![Piece::of_triple(t)],
        }
    }

    pub fn pieces(&self) -> &[Piece<E>] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn domain(&self, graph: &Graph) -> ClopenSet {
        ClopenSet::from_paths(graph, self.pieces.iter().map(|p| p.input.clone()))
    }

    pub fn codomain(&self, graph: &Graph) -> ClopenSet {
        ClopenSet::from_paths(graph, self.pieces.iter().map(|p| p.output.clone()))
    }

    fn piece_at(&self, graph: &Graph, x: &BoundaryPoint) -> Option<&Piece<E>> {
        self.pieces.iter().find(|p| x.in_cylinder(graph, &p.input))
    }

    /// The first `k` letters of the image of `x`, or `None` off the domain.
    pub fn eval_prefix<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
        x: &BoundaryPoint,
        k: usize,
    ) -> Option<Vec<Edge>> {
        let p = self.piece_at(action.graph(), x)?;
        let mut out: Vec<Edge> = p.output.edges().iter().copied().take(k).collect();
        if out.len() < k {
            let rest = x.shift(p.input.len());
            out.extend(action.act_prefix(&p.g, &rest, k - out.len()));
        }
        Some(out)
    }

    /// The exact image of an eventually periodic point.
    pub fn eval<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
        x: &BoundaryPoint,
    ) -> Option<BoundaryPoint> {
        let p = self.piece_at(action.graph(), x)?;
        let moved = action.act_point(&p.g, &x.shift(p.input.len()))?;
        Some(moved.prepend(p.output.edges()))
    }

    pub fn inverse<G: Group<Elem = E>>(&self, action: &SelfSimilarAction<G>) -> PartialMap<E> {
        let group = action.group();
        PartialMap::from_pieces(
            self.pieces
                .iter()
                .map(|p| Piece {
                    input: p.output.clone(),
                    g: group.invert(&p.g),
                    output: p.input.clone(),
                })
                .collect(),
        )
    }

    /// `self ∘ first` on the largest domain where it makes sense.
    pub fn compose<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
        first: &PartialMap<E>,
    ) -> PartialMap<E> {
        let group = action.group();
        let mut out = Vec::new();
        for p in &first.pieces {
            for q in &self.pieces {
                if p.output.is_prefix_of(&q.input) {
                    // Pull q's input back through p.
                    let gamma = p.output.remainder_of(&q.input).expect("prefix");
                    let delta = action.act(&group.invert(&p.g), &gamma);
                    let p2 = refine(action, p, &delta);
                    debug_assert_eq!(p2.output, q.input);
                    out.push(Piece {
                        input: p2.input,
                        g: group.multiply(&q.g, &p2.g),
                        output: q.output.clone(),
                    });
                } else if q.input.is_prefix_of(&p.output) {
                    let q2 = refine_to(action, q, &p.output);
                    out.push(Piece {
                        input: p.input.clone(),
                        g: group.multiply(&q2.g, &p.g),
                        output: q2.output,
                    });
                }
            }
        }
        PartialMap::from_pieces(out)
    }

    /// Restricts the domain to `set`.
    pub fn restrict<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
        set: &ClopenSet,
    ) -> PartialMap<E> {
        let mut out = Vec::new();
        for p in &self.pieces {
            for c in set.cylinders() {
                if c.is_prefix_of(&p.input) {
                    out.push(p.clone());
                } else if p.input.is_prefix_of(c) {
                    out.push(refine_to(action, p, c));
                }
            }
        }
        PartialMap::from_pieces(out)
    }

    pub fn validate<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
    ) -> Result<(), MapDefect<E>> {
        for p in &self.pieces {
            if action.act_vertex(&p.g, p.input.d()) != p.output.d() {
                return Err(MapDefect::Invalid(p.clone()));
            }
        }
        for (i, p) in self.pieces.iter().enumerate() {
            for q in &self.pieces[i + 1..] {
                if p.input.comparable(&q.input) {
                    return Err(MapDefect::InputsOverlap(p.clone(), q.clone()));
                }
                if p.output.comparable(&q.output) {
                    return Err(MapDefect::OutputsOverlap(p.clone(), q.clone()));
                }
            }
        }
        Ok(())
    }

    /// First point of `points` where the two maps disagree at depth `k`,
    /// including one being defined and the other not.
    pub fn first_difference<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
        other: &PartialMap<E>,
        points: &[BoundaryPoint],
        k: usize,
    ) -> Option<BoundaryPoint> {
        points
            .iter()
            .find(|x| self.eval_prefix(action, x, k) != other.eval_prefix(action, x, k))
            .cloned()
    }

    /// Equal domains and equal values at depth `k` on `points`.
    pub fn agrees_with<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
        other: &PartialMap<E>,
        points: &[BoundaryPoint],
        k: usize,
    ) -> bool {
        let g = action.graph();
        self.domain(g) == other.domain(g)
            && self.first_difference(action, other, points, k).is_none()
    }

    /// Whether `self ⊆ other` as graphs of maps, at depth `k` on `points`.
    pub fn is_restriction_of<G: Group<Elem = E>>(
        &self,
        action: &SelfSimilarAction<G>,
        other: &PartialMap<E>,
        points: &[BoundaryPoint],
        k: usize,
    ) -> Option<BoundaryPoint> {
        let g = action.graph();
        points
            .iter()
            .filter(|x| self.domain(g).contains(g, x))
            .find(|x| {
                other.eval_prefix(action, x, k).is_none()
                    || self.eval_prefix(action, x, k) != other.eval_prefix(action, x, k)
            })
            .cloned()
    }

    /// One line per piece: `β -> α  [g]`.
    pub fn render<G: Group<Elem = E>>(&self, action: &SelfSimilarAction<G>) -> String {
        let g = action.graph();
        self.pieces
            .iter()
            .map(|p| {
                format!(
                    "{} -> {}  [{}]\n",
                    g.render_path(&p.input),
                    g.render_path(&p.output),
                    action.render_elem(&p.g)
                )
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::isg::InverseSemigroup;
    use crate::point::sample_points;

    #[test]
    fn triple_maps_prefix() {
        let odo = fixtures::odometer(2);
        let g = odo.graph();
        let s = InverseSemigroup::new(&odo);
        let t = s.parse("(0, z, 1)").unwrap();
        let m = PartialMap::of_triple(&t);
        let x = BoundaryPoint::parse(g, "1(1)").unwrap();
        // 1·111… ↦ 0·(z·111…) = 0·000…
        assert_eq!(m.eval(&odo, &x), BoundaryPoint::parse(g, "(0)"));
        assert_eq!(m.eval(&odo, &BoundaryPoint::parse(g, "(0)").unwrap()), None);
        assert!(m.validate(&odo).is_ok());
    }

    #[test]
    fn composition_matches_semigroup_product() {
        let odo = fixtures::odometer(2);
        let s = InverseSemigroup::new(&odo);
        let points = sample_points(odo.graph(), 6, 2);
        let elems = s.enumerate(crate::action::checks::Bounds {
            radius: 2,
            path_len: 2,
        });
        for a in &elems {
            for b in &elems {
                let composed = PartialMap::of_triple(a).compose(&odo, &PartialMap::of_triple(b));
                match s.multiply(a, b) {
                    Some(ab) => assert!(
                        composed.agrees_with(&odo, &PartialMap::of_triple(&ab), &points, 6),
                        "{a:?} {b:?}"
                    ),
                    None => assert!(composed.is_empty()),
                }
            }
        }
    }

    #[test]
    fn identity_and_inverse() {
        let swap = fixtures::two_vertex_swap();
        let s = InverseSemigroup::new(&swap);
        let points = sample_points(swap.graph(), 3, 2);
        let id = PartialMap::identity(&swap);
        assert!(id.domain(swap.graph()).is_full(swap.graph()));
        for t in s.enumerate(crate::action::checks::Bounds {
            radius: 1,
            path_len: 2,
        }) {
            let m = PartialMap::of_triple(&t);
            assert!(m.compose(&swap, &id).agrees_with(&swap, &m, &points, 5));
            let back = m.inverse(&swap).compose(&swap, &m);
            assert!(back.agrees_with(
                &swap,
                &PartialMap::of_triple(&s.idempotent(t.beta.clone())),
                &points,
                5
            ));
        }
    }

    #[test]
    fn restriction_and_shrinking() {
        let odo = fixtures::odometer(2);
        let g = odo.graph();
        let points = sample_points(g, 4, 2);
        let id = PartialMap::identity(&odo);
        let half = id.restrict(&odo, &ClopenSet::cylinder(g, g.parse_path("0").unwrap()));
        assert!(half.is_restriction_of(&odo, &id, &points, 6).is_none());
        assert!(id.is_restriction_of(&odo, &half, &points, 6).is_some());
    }
}
