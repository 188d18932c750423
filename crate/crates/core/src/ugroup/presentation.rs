//! Presentations of the universal group of `S_{G,E}`.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use super::sigma::Sigma;
use crate::action::group::{render_word_with, Group, Letter, Relation};
use crate::action::SelfSimilarAction;
use crate::graph::Path;
use crate::isg::InverseSemigroup;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("the group backend has no finite presentation")]
    NoPresentation,
    #[error("relation {0} does not hold in the semigroup")]
    Unverified(String),
}

/// Generators `s_e` (one per edge, in edge order) followed by `u_g` (one per
/// group generator); relations as words over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    edge_count: usize,
}

#[derive(Serialize)]
struct RelationView {
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct PresentationView<'a> {
    generators: &'a [String],
    relations: Vec<RelationView>,
}

impl Presentation {
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn render_word(&self, word: &[Letter]) -> String {
        render_word_with(word, |i| self.generators[i].clone())
    }

    /// Replaces the generator names, keeping their order.
    pub fn with_names(mut self, names: Vec<String>) -> Presentation {
        assert_eq!(names.len(), self.generators.len());
        self.generators = names;
        self
    }

    /// `< g1, g2 | l1 = r1, ... >`, one relation per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("< {} |", self.generators.join(", "));
        if self.relations.is_empty() {
            out.push_str(" >\n");
            return out;
        }
        let lines: Vec<String> = self
            .relations
            .iter()
            .map(|r| {
                format!(
                    "  {} = {}",
                    self.render_word(&r.lhs),
                    self.render_word(&r.rhs)
                )
            })
            .collect();
        out.push('\n');
        out.push_str(&lines.join(",\n"));
        out.push_str(" >\n");
        out
    }

    pub fn to_json_value(&self) -> impl Serialize + '_ {
        PresentationView {
            generators: &self.generators,
            relations: self
                .relations
                .iter()
                .map(|r| RelationView {
                    lhs: self.render_word(&r.lhs),
                    rhs: self.render_word(&r.rhs),
                })
                .collect(),
        }
    }

    /// Which relations hold when generator `i` is sent to `images[i]`.
    pub fn holds_in<H: Group>(&self, target: &H, images: &[H::Elem]) -> Vec<bool> {
        let eval = |w: &[Letter]| {
            w.iter().fold(target.identity(), |acc, l| {
                let x = &images[l.generator];
                let x = if l.inverse {
                    target.invert(x)
                } else {
                    x.clone()
                };
                target.multiply(&acc, &x)
            })
        };
        self.relations
            .iter()
            .map(|r| eval(&r.lhs) == eval(&r.rhs))
            .collect()
    }

    pub fn contains(&self, lhs: &str, rhs: &str) -> bool {
        self.relations
            .iter()
            .any(|r| self.render_word(&r.lhs) == lhs && self.render_word(&r.rhs) == rhs)
    }
}

/// Emits `u_g s_e = s_{ge} u_{φ(g,e)}` for every generator `g` and edge `e`,
/// followed by the relations of `G` on the `u` letters. Each edge relation
/// is first confirmed in `S_{G,E}`:
/// `(g·r(e), g, r(e))(e, 1, d(e)) = (ge, 1, d(ge))(d(ge), φ(g,e), d(e))`.
pub fn emit_presentation<G: Group>(
    action: &SelfSimilarAction<G>,
) -> Result<Presentation, PresentationError> {
    let graph = action.graph();
    let group = action.group();
    let group_relations = group.relations().ok_or(PresentationError::NoPresentation)?;
    let m = graph.edge_count();
    let mut generators: Vec<String> = graph
        .edges()
        .map(|e| format!("s_{}", graph.edge_name(e)))
        .collect();
    generators
        .extend((0..group.generator_count()).map(|i| format!("u_{}", group.generator_name(i))));
    let s = InverseSemigroup::new(action);
    let mut relations = Vec::new();
    for i in 0..group.generator_count() {
        let g = group.generator(i);
        for e in graph.edges() {
            let (ge, phi) = action.act_edge(&g, e);
            let lhs = vec![Letter::new(m + i), Letter::new(e.index())];
            let mut rhs = vec![Letter::new(ge.index())];
            rhs.extend(group.factor(&phi).into_iter().map(|l| Letter {
                generator: m + l.generator,
                ..l
            }));
            let edge_path = |x| graph.path(graph.r(x), &[x]).expect("edge");
            let u_left = s.triple(
                Path::vertex(action.act_vertex(&g, graph.r(e))),
                g.clone(),
                Path::vertex(graph.r(e)),
            );
            let s_left = s.triple(edge_path(e), group.identity(), Path::vertex(graph.d(e)));
            let s_right = s.triple(edge_path(ge), group.identity(), Path::vertex(graph.d(ge)));
            let u_right = s.triple(
                Path::vertex(graph.d(ge)),
                phi.clone(),
                Path::vertex(graph.d(e)),
            );
            let verified = match (u_left, s_left, s_right, u_right) {
                (Some(a), Some(b), Some(c), Some(d)) => {
                    let l = s.multiply(&a, &b);
                    l.is_some() && l == s.multiply(&c, &d)
                }
                _ => false,
            };
            let rendered = render_word_with(&lhs, |k| generators[k].clone())
                + " = "
                + &render_word_with(&rhs, |k| generators[k].clone());
            if !verified {
                return Err(PresentationError::Unverified(rendered));
            }
            relations.push(Relation { lhs, rhs });
        }
    }
    let shift = |w: &[Letter]| {
        w.iter()
            .map(|l| Letter {
                generator: m + l.generator,
                ..*l
            })
            .collect::<Vec<_>>()
    };
    for r in group_relations {
        if group.eval(&r.lhs) != group.eval(&r.rhs) {
            return Err(PresentationError::Unverified(format!(
                "{} = {}",
                group.render_word(&r.lhs),
                group.render_word(&r.rhs)
            )));
        }
        relations.push(Relation {
            lhs: shift(&r.lhs),
            rhs: shift(&r.rhs),
        });
    }
    Ok(Presentation {
        generators,
        relations,
        edge_count: m,
    })
}

/// Names `a_i` for the edges and `Z` for the generator, as for odometers.
pub fn odometer_names(p: &Presentation) -> Vec<String> {
    (0..p.edge_count())
        .map(|i| format!("a_{i}"))
        .chain(std::iter::once("Z".to_owned()))
        .collect()
}

/// Images of the presentation generators under `σ`: `s_e ↦ σ(e)`,
/// `u_g ↦ ψ(g)`.
pub fn generator_images<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
) -> Vec<H::Elem> {
    let group = action.group();
    let mut out: Vec<H::Elem> = sigma.edge_images().to_vec();
    out.extend((0..group.generator_count()).map(|i| sigma.group_image(&group.generator(i))));
    out
}

/// Whether every element of the target's own ball of `radius` is a word
/// of length at most `search_radius` in `images`.
pub fn generates<H: Group>(
    target: &H,
    images: &[H::Elem],
    radius: usize,
    search_radius: usize,
) -> bool {
    let mut seen: HashSet<H::Elem> = HashSet::from([target.identity()]);
    let mut frontier = vec![target.identity()];
    let steps: Vec<H::Elem> = images
        .iter()
        .flat_map(|x| [x.clone(), target.invert(x)])
        .collect();
    for _ in 0..search_radius {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &steps {
                let y = target.multiply(x, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    target.ball(radius).iter().all(|g| seen.contains(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ugroup::sigma::odometer_sigma;

    #[test]
    fn odometer_presentation() {
        let odo = fixtures::odometer(2);
        let p = emit_presentation(&odo).unwrap();
        let p = p.clone().with_names(odometer_names(&p));
        assert_eq!(p.generators, vec!["a_0", "a_1", "Z"]);
        assert!(p.contains("Z a_0", "a_1"));
        assert!(p.contains("Z a_1", "a_0 Z"));
        assert_eq!(p.relations.len(), 2);
        assert_eq!(
            p.to_text(),
            "< a_0, a_1, Z |\n  Z a_0 = a_1,\n  Z a_1 = a_0 Z >\n"
        );
        let sigma = odometer_sigma(&odo).unwrap();
        let images = generator_images(&odo, &sigma);
        assert!(p.holds_in(sigma.target(), &images).into_iter().all(|b| b));
        assert!(generates(sigma.target(), &images, 4, 4));
    }

    #[test]
    fn trivial_group_gives_a_free_group() {
        let p = emit_presentation(&fixtures::trivial_group(3)).unwrap();
        assert_eq!(p.generators, vec!["s_0", "s_1", "s_2"]);
        assert!(p.relations.is_empty());
        assert_eq!(p.to_text(), "< s_0, s_1, s_2 | >\n");
    }

    #[test]
    fn finite_group_relations_are_appended() {
        let swap = fixtures::two_vertex_swap();
        let p = emit_presentation(&swap).unwrap();
        // One generator times four edges, plus t^2 = 1.
        assert_eq!(p.relations.len(), 5);
        assert!(p.contains("u_t s_a", "s_b u_t"));
        assert!(p.contains("u_t^2", "1"));
    }

    #[test]
    fn json_view() {
        let p = emit_presentation(&fixtures::odometer(3)).unwrap();
        let v = serde_json::to_value(p.to_json_value()).unwrap();
        assert_eq!(v["generators"][3], "u_z");
        assert_eq!(v["relations"][2]["rhs"], "s_0 u_z");
    }
}
