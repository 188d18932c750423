//! The inverse semigroup `S_{G,E}` of a self-similar graph action.
//!
//! Nonzero elements are triples `(α, g, β)` with `d(α) = g·d(β)`; the
//! partial homeomorphism of a triple sends `βx` to `α(gx)`.

mod zs;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::action::checks::Bounds;
use crate::action::{Group, SelfSimilarAction};
use crate::exec::Exec;
use crate::graph::{collapse_path, Path};
use crate::point::BoundaryPoint;

pub use zs::ZsPair;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple<E> {
    pub alpha: Path,
    pub g: E,
    pub beta: Path,
}

/// An element of `S_{G,E}`: zero or a triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element<E> {
    Zero,
    Nonzero(Triple<E>),
}

impl<E> From<Option<Triple<E>>> for Element<E> {
    fn from(t: Option<Triple<E>>) -> Self {
        t.map_or(Element::Zero, Element::Nonzero)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsgError {
    #[error("the Zappa-Szép product needs a single-vertex graph; collapse the action first")]
    MultiVertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EStarUnitary<E> {
    /// `se` is a nonzero idempotent but `s` is not idempotent.
    Violated {
        s: Triple<E>,
        e: Triple<E>,
    },
    OkUpTo(Bounds),
}

impl<E> EStarUnitary<E> {
    pub fn is_violated(&self) -> bool {
        matches!(self, EStarUnitary::Violated { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cancellative<E> {
    /// `p c = q c` with `p ≠ q`.
    RightViolated {
        p: ZsPair<E>,
        q: ZsPair<E>,
        c: ZsPair<E>,
    },
    /// `c p = c q` with `p ≠ q`.
    LeftViolated {
        p: ZsPair<E>,
        q: ZsPair<E>,
        c: ZsPair<E>,
    },
    OkUpTo(Bounds),
}

impl<E> Cancellative<E> {
    pub fn is_violated(&self) -> bool {
        !matches!(self, Cancellative::OkUpTo(_))
    }
}

/// Summary of the filter check for one boundary point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterCheck {
    pub depth: usize,
    pub downward_directed: bool,
    pub upward_closed: bool,
    pub maximal: bool,
}

impl FilterCheck {
    pub fn is_ok(&self) -> bool {
        self.downward_directed && self.upward_closed && self.maximal
    }
}

/// Arithmetic in `S_{G,E}` for a fixed action.
pub struct InverseSemigroup<'a, G: Group> {
    action: &'a SelfSimilarAction<G>,
}

impl<'a, G: Group> InverseSemigroup<'a, G> {
    pub fn new(action: &'a SelfSimilarAction<G>) -> Self {
        InverseSemigroup { action }
    }

    pub fn action(&self) -> &'a SelfSimilarAction<G> {
        self.action
    }

    /// `(α, g, β)` if `d(α) = g·d(β)`.
    pub fn triple(&self, alpha: Path, g: G::Elem, beta: Path) -> Option<Triple<G::Elem>> {
        (alpha.d() == self.action.act_vertex(&g, beta.d())).then_some(Triple { alpha, g, beta })
    }

    /// The idempotent `(α, 1, α)`.
    pub fn idempotent(&self, alpha: Path) -> Triple<G::Elem> {
        Triple {
            beta: alpha.clone(),
            alpha,
            g: self.action.group().identity(),
        }
    }

    /// Product of two triples; `None` is the zero.
    pub fn multiply(&self, s: &Triple<G::Elem>, t: &Triple<G::Elem>) -> Option<Triple<G::Elem>> {
        let group = self.action.group();
        if let Some(rest) = s.beta.remainder_of(&t.alpha) {
            // t.alpha = s.beta · rest
            let (moved, restriction) = self.action.act_restrict(&s.g, &rest);
            let alpha = s.alpha.concat(&moved).expect("r(gγ') = g·d(β) = d(α)");
            return Some(Triple {
                alpha,
                g: group.multiply(&restriction, &t.g),
                beta: t.beta.clone(),
            });
        }
        if let Some(rest) = t.alpha.remainder_of(&s.beta) {
            // s.beta = t.alpha · rest
            let h_inv = group.invert(&t.g);
            let (moved, restriction) = self.action.act_restrict(&h_inv, &rest);
            let beta = t.beta.concat(&moved).expect("r(h⁻¹β') = h⁻¹·d(γ) = d(ν)");
            return Some(Triple {
                alpha: s.alpha.clone(),
                g: group.multiply(&s.g, &group.invert(&restriction)),
                beta,
            });
        }
        None
    }

    pub fn multiply_elements(
        &self,
        s: &Element<G::Elem>,
        t: &Element<G::Elem>,
    ) -> Element<G::Elem> {
        match (s, t) {
            (Element::Nonzero(s), Element::Nonzero(t)) => self.multiply(s, t).into(),
            _ => Element::Zero,
        }
    }

    /// `(α, g, β)* = (β, g⁻¹, α)`.
    pub fn star(&self, s: &Triple<G::Elem>) -> Triple<G::Elem> {
        Triple {
            alpha: s.beta.clone(),
            g: self.action.group().invert(&s.g),
            beta: s.alpha.clone(),
        }
    }

    /// `s s = s`, decided by multiplying.
    pub fn is_idempotent(&self, s: &Triple<G::Elem>) -> bool {
        self.multiply(s, s).as_ref() == Some(s)
    }

    /// The natural order: `s ≤ t` iff `s = s s* t`.
    pub fn leq(&self, s: &Triple<G::Elem>, t: &Triple<G::Elem>) -> bool {
        let ss = self.multiply(s, &self.star(s));
        ss.and_then(|e| self.multiply(&e, t)).as_ref() == Some(s)
    }

    /// Nonzero triples with `|α|, |β| ≤ path_len` and `g` in the ball,
    /// ordered by `α`, then `β`, then ball order.
    pub fn enumerate(&self, bounds: Bounds) -> Vec<Triple<G::Elem>> {
        let paths = self.action.graph().paths_up_to(bounds.path_len);
        let ball = self.action.group().ball(bounds.radius);
        self.enumerate_over(&paths, &ball)
    }

    pub fn enumerate_over(&self, paths: &[Path], ball: &[G::Elem]) -> Vec<Triple<G::Elem>> {
        let mut out = Vec::new();
        for a in paths {
            for b in paths {
                for g in ball {
                    if let Some(t) = self.triple(a.clone(), g.clone(), b.clone()) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    /// Searches `s` within bounds and idempotents `e = (γ, 1, γ)` with
    /// `|γ| ≤ path_len` for `se` a nonzero idempotent while `s` is not.
    pub fn is_estar_unitary(&self, bounds: Bounds, exec: Exec) -> EStarUnitary<G::Elem> {
        let elements = self.enumerate(bounds);
        let idempotents: Vec<_> = self
            .action
            .graph()
            .paths_up_to(bounds.path_len)
            .into_iter()
            .map(|a| self.idempotent(a))
            .collect();
        exec.find_map_first(&elements, |s| {
            if self.is_idempotent(s) {
                return None;
            }
            idempotents.iter().find_map(|e| match self.multiply(s, e) {
                Some(se) if self.is_idempotent(&se) => Some(EStarUnitary::Violated {
                    s: s.clone(),
                    e: e.clone(),
                }),
                _ => None,
            })
        })
        .unwrap_or(EStarUnitary::OkUpTo(bounds))
    }

    /// `(α, g, β)` with both paths collapsed, a triple over the collapsed graph.
    pub fn to_collapse(&self, s: &Triple<G::Elem>) -> Triple<G::Elem> {
        Triple {
            alpha: collapse_path(&s.alpha),
            g: s.g.clone(),
            beta: collapse_path(&s.beta),
        }
    }

    /// The idempotents `(x↾k, 1, x↾k)` for `k ≤ depth` against all
    /// idempotents of length at most `depth`: closed under products,
    /// upward closed, and meeting every idempotent outside it in zero.
    pub fn filter_of_point(&self, x: &BoundaryPoint, depth: usize) -> FilterCheck {
        let graph = self.action.graph();
        let members: Vec<_> = (0..=depth)
            .map(|k| self.idempotent(x.prefix_path(graph, k)))
            .collect();
        let all: Vec<_> = graph
            .paths_up_to(depth)
            .into_iter()
            .map(|a| self.idempotent(a))
            .collect();
        let contains = |e: &Triple<G::Elem>| members.contains(e);
        let downward_directed = members.iter().all(|e| {
            members.iter().all(|f| {
                self.multiply(e, f)
                    .is_some_and(|ef| contains(&ef) && self.leq(&ef, e) && self.leq(&ef, f))
            })
        });
        let upward_closed = all
            .iter()
            .filter(|f| members.iter().any(|e| self.leq(e, f)))
            .all(|f| contains(f));
        let maximal = all
            .iter()
            .filter(|f| !contains(f))
            .all(|f| members.iter().any(|e| self.multiply(e, f).is_none()));
        FilterCheck {
            depth,
            downward_directed,
            upward_closed,
            maximal,
        }
    }

    pub fn render(&self, s: &Triple<G::Elem>) -> String {
        format!(
            "({}, {}, {})",
            self.action.render_path(&s.alpha),
            self.action.render_elem(&s.g),
            self.action.render_path(&s.beta)
        )
    }

    pub fn render_element(&self, s: &Element<G::Elem>) -> String {
        match s {
            Element::Zero => "0".to_owned(),
            Element::Nonzero(t) => self.render(t),
        }
    }

    /// Parses `(alpha, g, beta)`.
    pub fn parse(&self, text: &str) -> Option<Triple<G::Elem>> {
        let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return None;
        }
        let graph = self.action.graph();
        let alpha = graph.parse_path(parts[0])?;
        let g = self.action.group().parse_elem(parts[1]).ok()?;
        let beta = graph.parse_path(parts[2])?;
        self.triple(alpha, g, beta)
    }
}

impl<G: Group> InverseSemigroup<'_, G> {
    /// Left and right cancellation in `E* ⋈ G` over pairs with
    /// `|α| ≤ path_len` and `g` in the ball. Right cancellation is tried
    /// first, multiplier by multiplier.
    pub fn is_cancellative(
        &self,
        bounds: Bounds,
        exec: Exec,
    ) -> Result<Cancellative<G::Elem>, IsgError> {
        let pairs = self.zs_enumerate(bounds)?;
        let collide = |left: bool| {
            exec.find_map_first(&pairs, |c| {
                let mut seen: HashMap<ZsPair<G::Elem>, &ZsPair<G::Elem>> =
                    HashMap::with_capacity(pairs.len());
                for p in &pairs {
                    let prod = if left {
                        self.zs_multiply(c, p)
                    } else {
                        self.zs_multiply(p, c)
                    }
                    .expect("single vertex");
                    if let Some(q) = seen.insert(prod, p) {
                        let (p, q, c) = (q.clone(), p.clone(), c.clone());
                        return Some(if left {
                            Cancellative::LeftViolated { p, q, c }
                        } else {
                            Cancellative::RightViolated { p, q, c }
                        });
                    }
                }
                None
            })
        };
        Ok(collide(false)
            .or_else(|| collide(true))
            .unwrap_or(Cancellative::OkUpTo(bounds)))
    }
}

#[cfg(test)]
mod tests;
