//! Germs `[s, x]` of semigroup elements at boundary points.

use crate::action::{Group, SelfSimilarAction};
use crate::isg::{InverseSemigroup, Triple};
use crate::paction::PartialMap;
use crate::point::BoundaryPoint;

/// `[s, x]` with `x` in the cylinder of `β_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SGerm<E> {
    pub s: Triple<E>,
    pub x: BoundaryPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GermEquality<E> {
    /// `se = te` for this idempotent `e` with `x` in its cylinder.
    Equal(Triple<E>),
    /// The two maps send the base point to different places.
    Distinct,
    UnknownAtDepth(usize),
}

impl<E> GermEquality<E> {
    pub fn is_equal(&self) -> bool {
        matches!(self, GermEquality::Equal(_))
    }
}

pub fn sgerm_range<G: Group>(
    action: &SelfSimilarAction<G>,
    p: &SGerm<G::Elem>,
) -> Option<BoundaryPoint> {
    PartialMap::of_triple(&p.s).eval(action, &p.x)
}

/// `[s, x][t, y] = [st, y]` when `θ_t(y) = x`.
pub fn sgerm_compose<G: Group>(
    action: &SelfSimilarAction<G>,
    p: &SGerm<G::Elem>,
    q: &SGerm<G::Elem>,
) -> Option<SGerm<G::Elem>> {
    if sgerm_range(action, q).as_ref() != Some(&p.x) {
        return None;
    }
    let st = InverseSemigroup::new(action).multiply(&p.s, &q.s)?;
    Some(SGerm {
        s: st,
        x: q.x.clone(),
    })
}

/// Decides `[s, x] = [t, y]` by searching the idempotents
/// `(x↾k, 1, x↾k)` for `k ≤ depth`.
pub fn sgerm_equal<G: Group>(
    action: &SelfSimilarAction<G>,
    p: &SGerm<G::Elem>,
    q: &SGerm<G::Elem>,
    depth: usize,
) -> GermEquality<G::Elem> {
    if p.x != q.x || sgerm_range(action, p) != sgerm_range(action, q) {
        return GermEquality::Distinct;
    }
    let s = InverseSemigroup::new(action);
    let graph = action.graph();
    for k in 0..=depth {
        let e = s.idempotent(p.x.prefix_path(graph, k));
        let (a, b) = (s.multiply(&p.s, &e), s.multiply(&q.s, &e));
        if a.is_some() && a == b {
            return GermEquality::Equal(e);
        }
    }
    GermEquality::UnknownAtDepth(depth)
}
