//! The partial action of the universal group on the boundary: `θ_h` is
//! glued from the maps `θ_s` of all `s` with `σ(s) = h`.

use thiserror::Error;

use crate::action::checks::Bounds;
use crate::action::{Group, SelfSimilarAction};
use crate::graph::Path;
use crate::isg::Triple;
use crate::ugroup::sigma::{Preimages, Sigma};

use super::clopen::ClopenSet;
use super::pmap::{refine_to, PartialMap, Piece};

/// Two preimages whose maps disagree on a common cylinder.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("pieces {s:?} and {t:?} disagree on the cylinder {prefix:?}")]
pub struct Conflict<E: std::fmt::Debug> {
    pub s: Triple<E>,
    pub t: Triple<E>,
    pub prefix: Path,
}

/// Merges pieces in order. Overlapping pieces must coincide once refined
/// to the longer input; the coarser of two overlapping pieces is kept.
pub fn merge_pieces<G: Group>(
    action: &SelfSimilarAction<G>,
    pieces: impl IntoIterator<Item = Piece<G::Elem>>,
) -> Result<Vec<Piece<G::Elem>>, Conflict<G::Elem>> {
    let mut kept: Vec<Piece<G::Elem>> = Vec::new();
    for p in pieces {
        let mut covered = false;
        for q in &kept {
            let (fine, coarse) = if q.input.is_prefix_of(&p.input) {
                (&p, q)
            } else if p.input.is_prefix_of(&q.input) {
                (q, &p)
            } else {
                continue;
            };
            if refine_to(action, coarse, &fine.input) != *fine {
                return Err(Conflict {
                    s: q.to_triple(),
                    t: p.to_triple(),
                    prefix: fine.input.clone(),
                });
            }
            covered |= std::ptr::eq(coarse, q);
        }
        if !covered {
            kept.retain(|q| !p.input.is_prefix_of(&q.input));
            kept.push(p);
        }
    }
    Ok(kept)
}

/// `θ_h` with its domain `D_{h⁻¹}` and codomain `D_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedMap<E> {
    pub domain: ClopenSet,
    pub codomain: ClopenSet,
    pub map: PartialMap<E>,
}

impl<E: Clone + Eq + Ord> GluedMap<E> {
    pub fn from_map<G: Group<Elem = E>>(action: &SelfSimilarAction<G>, map: PartialMap<E>) -> Self {
        let g = action.graph();
        GluedMap {
            domain: map.domain(g),
            codomain: map.codomain(g),
            map,
        }
    }
}

/// `θ_h` glued from every `s` within `bounds` with `σ(s) = h`.
pub fn universal_action<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    h: &H::Elem,
    bounds: Bounds,
) -> Result<GluedMap<G::Elem>, Conflict<G::Elem>> {
    universal_action_with(action, &Preimages::new(action, sigma, bounds), h)
}

/// As [`universal_action`], reusing a preimage index across many `h`.
pub fn universal_action_with<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    index: &Preimages<'_, G, H>,
    h: &H::Elem,
) -> Result<GluedMap<G::Elem>, Conflict<G::Elem>> {
    let pieces = merge_pieces(action, index.find(h).iter().map(Piece::of_triple))?;
    Ok(GluedMap::from_map(action, PartialMap::from_pieces(pieces)))
}
