//! Finite tables of partial maps indexed by group elements, and the
//! partial-action axioms on them.

use std::collections::HashMap;
use std::hash::Hash;

use crate::action::{Group, SelfSimilarAction};
use crate::point::BoundaryPoint;

use super::pmap::PartialMap;

/// `h ↦ θ_h` for finitely many `h`; absent keys have empty domain.
pub struct PartialActionTable<K, E> {
    entries: Vec<(K, PartialMap<E>)>,
    index: HashMap<K, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartialActionVerdict<K> {
    Ok {
        pairs: usize,
    },
    IdentityNotTotal,
    /// `θ_{h⁻¹}` is not the inverse of `θ_h`.
    InverseMismatch {
        h: K,
        point: BoundaryPoint,
    },
    /// `θ_g ∘ θ_h` is defined at `point` but `θ_{gh}` disagrees there.
    NotContained {
        g: K,
        h: K,
        point: BoundaryPoint,
    },
}

impl<K> PartialActionVerdict<K> {
    pub fn is_ok(&self) -> bool {
        matches!(self, PartialActionVerdict::Ok { .. })
    }
}

impl<K: Clone + Eq + Hash, E: Clone + Eq + Ord> PartialActionTable<K, E> {
    pub fn new(entries: Vec<(K, PartialMap<E>)>) -> Self {
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, (k, _))| (k.clone(), i))
            .collect();
        PartialActionTable { entries, index }
    }

    /// Builds `θ_h` for each of `keys` with `build`.
    pub fn build(keys: impl IntoIterator<Item = K>, build: impl Fn(&K) -> PartialMap<E>) -> Self {
        let mut entries: Vec<(K, PartialMap<E>)> = Vec::new();
        for k in keys {
            if !entries.iter().any(|(x, _)| *x == k) {
                let m = build(&k);
                entries.push((k, m));
            }
        }
        Self::new(entries)
    }

    pub fn get(&self, h: &K) -> Option<&PartialMap<E>> {
        self.index.get(h).map(|&i| &self.entries[i].1)
    }

    pub fn entries(&self) -> &[(K, PartialMap<E>)] {
        &self.entries
    }

    pub fn replace(&mut self, h: &K, map: PartialMap<E>) {
        let i = self.index[h];
        self.entries[i].1 = map;
    }
}

/// Checks `θ_1 = id`, `θ_{h⁻¹} = θ_h⁻¹` and `θ_g ∘ θ_h ⊆ θ_{gh}` for the
/// given pairs, pointwise at depth `k` on `points`. A key missing from the
/// table stands for the empty map.
pub fn axioms_partial_action<H: Group, G: Group>(
    target: &H,
    action: &SelfSimilarAction<G>,
    table: &PartialActionTable<H::Elem, G::Elem>,
    pairs: &[(H::Elem, H::Elem)],
    points: &[BoundaryPoint],
    k: usize,
) -> PartialActionVerdict<H::Elem> {
    let empty = PartialMap::empty();
    let theta = |h: &H::Elem| table.get(h).unwrap_or(&empty);
    let graph = action.graph();
    let id = theta(&target.identity());
    if !id.domain(graph).is_full(graph)
        || id
            .first_difference(action, &PartialMap::identity(action), points, k)
            .is_some()
    {
        return PartialActionVerdict::IdentityNotTotal;
    }
    for (h, m) in table.entries() {
        let inv = m.inverse(action);
        if let Some(point) = inv.first_difference(action, theta(&target.invert(h)), points, k) {
            return PartialActionVerdict::InverseMismatch {
                h: h.clone(),
                point,
            };
        }
    }
    for (g, h) in pairs {
        let composed = theta(g).compose(action, theta(h));
        let whole = theta(&target.multiply(g, h));
        if let Some(point) = composed.is_restriction_of(action, whole, points, k) {
            return PartialActionVerdict::NotContained {
                g: g.clone(),
                h: h.clone(),
                point,
            };
        }
    }
    PartialActionVerdict::Ok { pairs: pairs.len() }
}
