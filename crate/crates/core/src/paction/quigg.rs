//! The partial action of the free group on the edges by prefix
//! replacement, and the actions it induces through a group map.

use thiserror::Error;

use crate::action::{Group, SelfSimilarAction};
use crate::graph::{Graph, Path};
use crate::isg::InverseSemigroup;
use crate::ugroup::free::{alpha_beta_shape, FreeGroup, FreeWord};
use crate::ugroup::sigma::Sigma;

use super::clopen::ClopenSet;
use super::pmap::{PartialMap, Piece};
use super::universal::{merge_pieces, Conflict, GluedMap};

/// The path spelled by edge indices from the rose's only vertex, if
/// composable.
fn rose_path(graph: &Graph, letters: &[usize]) -> Option<Path> {
    let v = graph.vertices().next()?;
    let edges: Vec<_> = letters
        .iter()
        .map(|&i| crate::graph::Edge(i as u32))
        .collect();
    graph.path(v, &edges)
}

/// `θ_{αβ⁻¹}: βx ↦ αx` for a reduced word of that shape; the empty map for
/// any other word. Needs a single-vertex graph.
pub fn quigg_raeburn<G: Group>(action: &SelfSimilarAction<G>, word: &[i32]) -> GluedMap<G::Elem> {
    let graph = action.graph();
    assert!(
        graph.is_single_vertex(),
        "prefix replacement needs a single-vertex graph"
    );
    let map = match alpha_beta_shape(word) {
        Some((a, b)) => match (rose_path(graph, &a), rose_path(graph, &b)) {
            (Some(alpha), Some(beta)) => PartialMap::from_pieces(vec![Piece {
                input: beta,
                g: action.group().identity(),
                output: alpha,
            }]),
            _ => PartialMap::empty(),
        },
        None => PartialMap::empty(),
    };
    GluedMap::from_map(action, map)
}

/// Every reduced word `αβ⁻¹` with `|α| + |β| ≤ bound`, as `(α, β)`, ordered
/// by total length and then lexicographically.
pub fn reduced_alpha_beta(graph: &Graph, bound: usize) -> Vec<(Path, Path)> {
    let by_len: Vec<Vec<Path>> = (0..=bound).map(|k| graph.paths_of_length(k)).collect();
    let mut out = Vec::new();
    for total in 0..=bound {
        let mut level = Vec::new();
        for la in 0..=total {
            for a in &by_len[la] {
                for b in by_len[total - la].iter().filter(|b| b.d() == a.d()) {
                    let reduced = match (a.edges().last(), b.edges().last()) {
                        (Some(x), Some(y)) => x != y,
                        _ => true,
                    };
                    if reduced {
                        level.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        level.sort();
        out.extend(level);
    }
    out
}

/// `θ_h` of the induced action with the enumeration bound that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap<E> {
    pub glued: GluedMap<E>,
    pub bound: usize,
    /// The smallest bound at which the domain already filled the whole
    /// space; `None` when it never did, so larger bounds may still add to it.
    pub stabilized_at: Option<usize>,
    /// Domain after each bound `0..=bound`.
    pub history: Vec<ClopenSet>,
}

/// `θ_h = ⋃ θ_{αβ⁻¹}` over reduced `αβ⁻¹` with `φ(αβ⁻¹) = h`, where
/// `φ(e) = σ(e)` on edges.
pub fn induced_action<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    h: &H::Elem,
    bound: usize,
) -> Result<InducedMap<G::Elem>, Conflict<G::Elem>> {
    let graph = action.graph();
    let target = sigma.target();
    let one = action.group().identity();
    let words: Vec<(Path, Path)> = reduced_alpha_beta(graph, bound)
        .into_iter()
        .filter(|(a, b)| {
            target.multiply(&sigma.path_image(a), &target.invert(&sigma.path_image(b))) == *h
        })
        .collect();
    let mut history = Vec::with_capacity(bound + 1);
    let mut pieces = Vec::new();
    let mut stabilized_at = None;
    for level in 0..=bound {
        let fresh = words
            .iter()
            .filter(|(a, b)| a.len() + b.len() == level)
            .map(|(a, b)| Piece {
                input: b.clone(),
                g: one.clone(),
                output: a.clone(),
            });
        pieces = merge_pieces(action, pieces.into_iter().chain(fresh))?;
        let domain = ClopenSet::from_paths(graph, pieces.iter().map(|p| p.input.clone()));
        if stabilized_at.is_none() && domain.is_full(graph) {
            stabilized_at = Some(level);
        }
        history.push(domain);
    }
    let glued = GluedMap::from_map(action, PartialMap::from_pieces(pieces));
    Ok(InducedMap {
        glued,
        bound,
        stabilized_at,
        history,
    })
}

/// `θ_h` for every `h` hit by a reduced word within `bound`, in order of
/// first appearance. Fails on the first conflicting pair of pieces.
pub fn induced_table<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    bound: usize,
) -> Result<Vec<(H::Elem, GluedMap<G::Elem>)>, Conflict<G::Elem>> {
    let target = sigma.target();
    let one = action.group().identity();
    let mut order: Vec<H::Elem> = Vec::new();
    let mut buckets: std::collections::HashMap<H::Elem, Vec<Piece<G::Elem>>> =
        std::collections::HashMap::new();
    for (a, b) in reduced_alpha_beta(action.graph(), bound) {
        let h = target.multiply(&sigma.path_image(&a), &target.invert(&sigma.path_image(&b)));
        let bucket = buckets.entry(h.clone()).or_insert_with(|| {
            order.push(h);
            Vec::new()
        });
        bucket.push(Piece {
            input: b,
            g: one.clone(),
            output: a,
        });
    }
    order
        .into_iter()
        .map(|h| {
            let pieces = merge_pieces(action, buckets.remove(&h).expect("bucket"))?;
            Ok((
                h,
                GluedMap::from_map(action, PartialMap::from_pieces(pieces)),
            ))
        })
        .collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no path of length at most {0} has trivial restriction")]
pub struct NoWitness(pub usize);

/// For `g` with `φ(g, α) = 1`, the pair `(gα, α)` with `U_g S_α = S_{gα}`,
/// so that `σ(U_g) = σ(S_{gα}) σ(S_α)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectivityWitness {
    pub moved: Path,
    pub path: Path,
    /// `U_g S_α S*_{gα}` is the idempotent `S_{gα} S*_{gα}`.
    pub idempotent_verified: bool,
    /// `σ(U_g) = σ(gα) σ(α)⁻¹` in the target.
    pub image_verified: bool,
}

/// `U_g` is taken at the range vertex of the witness path.
pub fn exhausting_surjectivity_witness<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    g: &G::Elem,
    path_bound: usize,
) -> Result<SurjectivityWitness, NoWitness> {
    let graph = action.graph();
    let group = action.group();
    let s = InverseSemigroup::new(action);
    let path = graph
        .paths_up_to(path_bound)
        .into_iter()
        .find(|a| group.is_identity(&action.restrict(g, a)))
        .ok_or(NoWitness(path_bound))?;
    let moved = action.act(g, &path);
    let v = Path::vertex(path.r());
    let u = s.triple(Path::vertex(action.act_vertex(g, path.r())), g.clone(), v);
    let sa = s.triple(path.clone(), group.identity(), Path::vertex(path.d()));
    let sb_star = s.triple(Path::vertex(moved.d()), group.identity(), moved.clone());
    let idempotent_verified = match (u.clone(), sa, sb_star) {
        (Some(u), Some(sa), Some(sb)) => s
            .multiply(&u, &sa)
            .and_then(|x| s.multiply(&x, &sb))
            .is_some_and(|x| x == s.idempotent(moved.clone())),
        _ => false,
    };
    let target = sigma.target();
    let image_verified = u.is_some_and(|u| {
        sigma.apply(&u)
            == target.multiply(
                &sigma.path_image(&moved),
                &target.invert(&sigma.path_image(&path)),
            )
    });
    Ok(SurjectivityWitness {
        moved,
        path,
        idempotent_verified,
        image_verified,
    })
}

/// `φ(αβ⁻¹)` for a free word of that shape on the edges.
pub fn free_image<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    word: &FreeWord,
) -> Option<H::Elem> {
    let (a, b) = alpha_beta_shape(word)?;
    let graph = action.graph();
    let target = sigma.target();
    let alpha = rose_path(graph, &a)?;
    let beta = rose_path(graph, &b)?;
    Some(target.multiply(
        &sigma.path_image(&alpha),
        &target.invert(&sigma.path_image(&beta)),
    ))
}

/// The free word `αβ⁻¹` on the edge letters.
pub fn free_word(free: &FreeGroup, alpha: &Path, beta: &Path) -> FreeWord {
    let idx = |p: &Path| p.edges().iter().map(|e| e.index()).collect::<Vec<_>>();
    free.alpha_beta(&idx(alpha), &idx(beta))
}
