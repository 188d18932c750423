//! Maps `σ: S_{G,E} ∖ {0} → H` of the form
//! `σ(α, g, β) = σ(α) ψ(g) σ(β)⁻¹`, with `σ` on paths the product of edge
//! images and `ψ: G → H` a group map.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use super::bs::{BaumslagSolitar, BsElement};
use super::free::FreeGroup;
use crate::action::checks::Bounds;
use crate::action::{Group, Integers, SelfSimilarAction};
use crate::exec::Exec;
use crate::graph::{Edge, Path};
use crate::isg::{InverseSemigroup, Triple};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SigmaError {
    #[error("the action is not an odometer")]
    NotOdometer,
    #[error("expected {expected} edge images, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

type GroupMap<G, H> = Arc<dyn Fn(&<G as Group>::Elem) -> <H as Group>::Elem + Send + Sync>;

pub struct Sigma<G: Group, H: Group> {
    target: H,
    edge_images: Vec<H::Elem>,
    group_map: GroupMap<G, H>,
}

impl<G: Group, H: Group + Clone> Clone for Sigma<G, H> {
    fn clone(&self) -> Self {
        Sigma {
            target: self.target.clone(),
            edge_images: self.edge_images.clone(),
            group_map: self.group_map.clone(),
        }
    }
}

impl<G: Group, H: Group> Sigma<G, H> {
    pub fn new(
        target: H,
        edge_images: Vec<H::Elem>,
        group_map: impl Fn(&G::Elem) -> H::Elem + Send + Sync + 'static,
    ) -> Sigma<G, H> {
        Sigma {
            target,
            edge_images,
            group_map: Arc::new(group_map),
        }
    }

    pub fn target(&self) -> &H {
        &self.target
    }

    pub fn edge_image(&self, e: Edge) -> &H::Elem {
        &self.edge_images[e.index()]
    }

    pub fn edge_images(&self) -> &[H::Elem] {
        &self.edge_images
    }

    /// `ψ(g)`.
    pub fn group_image(&self, g: &G::Elem) -> H::Elem {
        (self.group_map)(g)
    }

    /// Product of edge images; the identity on vertices.
    pub fn path_image(&self, p: &Path) -> H::Elem {
        let h = &self.target;
        p.edges().iter().fold(h.identity(), |acc, &e| {
            h.multiply(&acc, &self.edge_images[e.index()])
        })
    }

    pub fn apply(&self, s: &Triple<G::Elem>) -> H::Elem {
        let h = &self.target;
        let left = h.multiply(&self.path_image(&s.alpha), &self.group_image(&s.g));
        h.multiply(&left, &h.invert(&self.path_image(&s.beta)))
    }
}

/// The map into `BS(1, n)` for the `n`-odometer: edge `i ↦ a_i = (i, 1)` and
/// `z^m ↦ Z^m = (m, 0)`.
pub fn odometer_sigma(
    action: &SelfSimilarAction<Integers>,
) -> Result<Sigma<Integers, BaumslagSolitar>, SigmaError> {
    let n = odometer_arity(action).ok_or(SigmaError::NotOdometer)?;
    let bs = BaumslagSolitar::new(n as u32);
    let images = (0..n as u32).map(|i| bs.digit(i)).collect();
    Ok(Sigma::new(bs, images, |&m| BaumslagSolitar::z_power(m)))
}

impl BaumslagSolitar {
    /// `Z^m = (m, 0)`; independent of `n`.
    pub fn z_power(m: i64) -> BsElement {
        BsElement {
            num: m as i128,
            exp: 0,
            k: 0,
        }
    }
}

/// `Some(n)` when the action is the `n`-odometer with edges named
/// `0 .. n-1` in order.
pub fn odometer_arity(action: &SelfSimilarAction<Integers>) -> Option<usize> {
    let graph = action.graph();
    let n = graph.edge_count();
    if !graph.is_single_vertex() || n < 2 || action.tables().len() != 1 {
        return None;
    }
    if (0..n).any(|i| graph.edge_name(Edge(i as u32)) != i.to_string()) {
        return None;
    }
    let t = &action.tables()[0];
    let ok = (0..n).all(|i| {
        let carry = i == n - 1;
        t.edge[i] == Edge(((i + 1) % n) as u32) && t.cocycle[i] == if carry { 1 } else { 0 }
    });
    ok.then_some(n)
}

/// Edges map to the free generators, the group to the identity. For the
/// trivial group this is the universal map into the free group on the
/// edges; otherwise it collapses the group.
pub fn free_sigma<G: Group>(action: &SelfSimilarAction<G>) -> Sigma<G, FreeGroup> {
    let graph = action.graph();
    let free = FreeGroup::new(graph.edges().map(|e| graph.edge_name(e).to_owned()));
    let images = graph.edges().map(|e| free.generator(e.index())).collect();
    Sigma::new(free, images, |_| Vec::new())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Purity<E> {
    Pure {
        checked: usize,
    },
    /// `σ(s) = 1` with `s` not idempotent, or `s` idempotent with `σ(s) ≠ 1`.
    Impure {
        s: Triple<E>,
        idempotent: bool,
    },
}

impl<E> Purity<E> {
    pub fn is_pure(&self) -> bool {
        matches!(self, Purity::Pure { .. })
    }
}

/// Checks `σ(s) = 1 ⟺ s idempotent` over all nonzero `s` within bounds.
pub fn check_idempotent_pure<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    bounds: Bounds,
    exec: Exec,
) -> Purity<G::Elem> {
    let s = InverseSemigroup::new(action);
    let elements = s.enumerate(bounds);
    let h = sigma.target();
    exec.find_map_first(&elements, |x| {
        let trivial = h.is_identity(&sigma.apply(x));
        let idempotent = s.is_idempotent(x);
        (trivial != idempotent).then(|| Purity::Impure {
            s: x.clone(),
            idempotent,
        })
    })
    .unwrap_or(Purity::Pure {
        checked: elements.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prehomomorphism<E> {
    Holds { pairs: u64 },
    Fails { s: Triple<E>, t: Triple<E> },
}

impl<E> Prehomomorphism<E> {
    pub fn holds(&self) -> bool {
        matches!(self, Prehomomorphism::Holds { .. })
    }
}

/// Checks `σ(st) = σ(s)σ(t)` for every pair from `left × right` with
/// `st ≠ 0`. Products are computed by the semigroup, images of the factors
/// are computed once.
pub fn check_prehomomorphism<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    left: &[Triple<G::Elem>],
    right: &[Triple<G::Elem>],
    exec: Exec,
) -> Prehomomorphism<G::Elem> {
    let s = InverseSemigroup::new(action);
    let h = sigma.target();
    // Paths of products are at most twice as long as those of the factors.
    let longest = left
        .iter()
        .chain(right)
        .map(|t| t.alpha.len().max(t.beta.len()))
        .max()
        .unwrap_or(0);
    let paths = action.graph().paths_up_to(2 * longest);
    let cache: HashMap<Path, H::Elem> = if paths.len() <= 1 << 18 {
        paths
            .into_iter()
            .map(|p| {
                let i = sigma.path_image(&p);
                (p, i)
            })
            .collect()
    } else {
        HashMap::new()
    };
    let path_image = |p: &Path| cache.get(p).cloned().unwrap_or_else(|| sigma.path_image(p));
    let apply = |x: &Triple<G::Elem>| {
        h.multiply(
            &h.multiply(&path_image(&x.alpha), &sigma.group_image(&x.g)),
            &h.invert(&path_image(&x.beta)),
        )
    };
    let left_images = exec.map(left, |x| sigma.apply(x));
    let right_images = exec.map(right, |x| sigma.apply(x));
    // Group the right factors by their α: st ≠ 0 needs α_t comparable to β_s.
    let mut by_alpha: Vec<(Path, Vec<usize>)> = Vec::new();
    let mut slot: HashMap<Path, usize> = HashMap::new();
    for (i, t) in right.iter().enumerate() {
        let k = *slot.entry(t.alpha.clone()).or_insert_with(|| {
            by_alpha.push((t.alpha.clone(), Vec::new()));
            by_alpha.len() - 1
        });
        by_alpha[k].1.push(i);
    }
    let indices: Vec<usize> = (0..left.len()).collect();
    let failure = exec.find_map_first(&indices, |&i| {
        let x = &left[i];
        for (alpha, members) in &by_alpha {
            if !alpha.comparable(&x.beta) {
                continue;
            }
            for &j in members {
                let y = &right[j];
                let xy = s
                    .multiply(x, y)
                    .expect("comparable middle gives a nonzero product");
                if apply(&xy) != h.multiply(&left_images[i], &right_images[j]) {
                    return Some(Prehomomorphism::Fails {
                        s: x.clone(),
                        t: y.clone(),
                    });
                }
            }
        }
        None
    });
    if let Some(f) = failure {
        return f;
    }
    let pairs = exec.sum(&indices, |&i| {
        by_alpha
            .iter()
            .filter(|(alpha, _)| alpha.comparable(&left[i].beta))
            .map(|(_, m)| m.len() as u64)
            .sum()
    });
    Prehomomorphism::Holds { pairs }
}

/// Finds the triples `s` with `σ(s) = h` by solving `ψ(g) = σ(α)⁻¹ h σ(β)`
/// over a fixed ball, for all `α, β` up to a length bound.
pub struct Preimages<'a, G: Group, H: Group> {
    action: &'a SelfSimilarAction<G>,
    sigma: &'a Sigma<G, H>,
    /// `(α, β, σ(α)⁻¹, σ(β))` ordered by `|α| + |β|`, then `α`, then `β`.
    pairs: Vec<(Path, Path, H::Elem, H::Elem)>,
    psi: HashMap<H::Elem, Vec<G::Elem>>,
}

impl<'a, G: Group, H: Group> Preimages<'a, G, H> {
    pub fn new(action: &'a SelfSimilarAction<G>, sigma: &'a Sigma<G, H>, bounds: Bounds) -> Self {
        let h = sigma.target();
        let paths = action.graph().paths_up_to(bounds.path_len);
        let mut pairs = Vec::with_capacity(paths.len() * paths.len());
        for a in &paths {
            for b in &paths {
                pairs.push((
                    a.clone(),
                    b.clone(),
                    h.invert(&sigma.path_image(a)),
                    sigma.path_image(b),
                ));
            }
        }
        pairs.sort_by(|x, y| {
            (x.0.len() + x.1.len(), &x.0, &x.1).cmp(&(y.0.len() + y.1.len(), &y.0, &y.1))
        });
        let mut psi: HashMap<H::Elem, Vec<G::Elem>> = HashMap::new();
        for g in action.group().ball(bounds.radius) {
            psi.entry(sigma.group_image(&g)).or_default().push(g);
        }
        Preimages {
            action,
            sigma,
            pairs,
            psi,
        }
    }

    /// All `s` within bounds with `σ(s) = target`, in enumeration order.
    pub fn find(&self, target: &H::Elem) -> Vec<Triple<G::Elem>> {
        let h = self.sigma.target();
        let s = InverseSemigroup::new(self.action);
        let mut out = Vec::new();
        for (a, b, a_inv, b_img) in &self.pairs {
            let needed = h.multiply(&h.multiply(a_inv, target), b_img);
            if let Some(gs) = self.psi.get(&needed) {
                for g in gs {
                    if let Some(t) = s.triple(a.clone(), g.clone(), b.clone()) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn bounds(radius: usize, path_len: usize) -> Bounds {
        Bounds { radius, path_len }
    }

    #[test]
    fn odometer_images() {
        let odo = fixtures::odometer(2);
        let sigma = odometer_sigma(&odo).unwrap();
        let s = InverseSemigroup::new(&odo);
        let bs = sigma.target();
        let u = s.parse("(∅, z, ∅)").unwrap();
        let ba = s.parse("(1, 1, 0)").unwrap();
        assert_eq!(sigma.apply(&u), bs.z());
        assert_eq!(sigma.apply(&ba), bs.integral(1, 0));
        for a in odo.graph().paths_up_to(3) {
            assert!(bs.is_identity(&sigma.apply(&s.idempotent(a))));
        }
        assert_eq!(
            odometer_sigma(&fixtures::integers_fixed(2)).err(),
            Some(SigmaError::NotOdometer)
        );
    }

    #[test]
    fn shifted_word_pairs_map_to_one() {
        // U^{n_β - n_α} S_α S_β* is the idempotent S_β S_β* when |α| = |β|.
        let odo = fixtures::odometer(2);
        let sigma = odometer_sigma(&odo).unwrap();
        let s = InverseSemigroup::new(&odo);
        let bs = sigma.target();
        let empty = odo.graph().parse_path("∅").unwrap();
        for a in odo.graph().paths_of_length(3) {
            for b in odo.graph().paths_of_length(3) {
                let value = |p: &Path| {
                    p.edges()
                        .iter()
                        .rev()
                        .fold(0i64, |acc, e| acc * 2 + e.0 as i64)
                };
                let shift = s
                    .triple(empty.clone(), value(&b) - value(&a), empty.clone())
                    .unwrap();
                let sa = s.triple(a.clone(), 0, empty.clone()).unwrap();
                let sb_star = s.triple(empty.clone(), 0, b.clone()).unwrap();
                let prod = s
                    .multiply(&s.multiply(&shift, &sa).unwrap(), &sb_star)
                    .unwrap();
                assert_eq!(prod, s.idempotent(b.clone()));
                let images = [&shift, &sa, &sb_star]
                    .iter()
                    .fold(bs.identity(), |acc, x| bs.multiply(&acc, &sigma.apply(x)));
                assert!(bs.is_identity(&images));
            }
        }
    }

    #[test]
    fn purity_and_its_failures() {
        let odo = fixtures::odometer(2);
        let sigma = odometer_sigma(&odo).unwrap();
        assert!(check_idempotent_pure(&odo, &sigma, bounds(6, 3), Exec::default()).is_pure());
        let bs = BaumslagSolitar::new(2);
        let wrong: Sigma<Integers, _> =
            Sigma::new(bs.clone(), vec![bs.digit(0), bs.digit(0)], |&m| {
                BaumslagSolitar::z_power(m)
            });
        let Purity::Impure { s, idempotent } =
            check_idempotent_pure(&odo, &wrong, bounds(2, 2), Exec::default())
        else {
            panic!("collapsed edge images must be impure");
        };
        assert!(!idempotent);
        assert!(bs.is_identity(&wrong.apply(&s)));
        let z2 = fixtures::z2_trivial();
        assert!(
            !check_idempotent_pure(&z2, &free_sigma(&z2), bounds(2, 2), Exec::default()).is_pure()
        );
        let triv = fixtures::trivial_group(2);
        assert!(
            check_idempotent_pure(&triv, &free_sigma(&triv), bounds(1, 3), Exec::default())
                .is_pure()
        );
    }

    #[test]
    fn prehomomorphism_on_small_bounds() {
        let odo = fixtures::odometer(3);
        let sigma = odometer_sigma(&odo).unwrap();
        let elems = InverseSemigroup::new(&odo).enumerate(bounds(3, 2));
        let verdict = check_prehomomorphism(&odo, &sigma, &elems, &elems, Exec::default());
        assert!(verdict.holds(), "{verdict:?}");
        // Sending t to 1 while a and b stay distinct breaks u_t s_a = s_b u_t.
        let swap = fixtures::two_vertex_swap();
        let collapsing = free_sigma(&swap);
        let elems = InverseSemigroup::new(&swap).enumerate(bounds(1, 2));
        assert!(
            !check_prehomomorphism(&swap, &collapsing, &elems, &elems, Exec::default()).holds()
        );
        let triv = fixtures::trivial_group(2);
        let elems = InverseSemigroup::new(&triv).enumerate(bounds(0, 2));
        assert!(
            check_prehomomorphism(&triv, &free_sigma(&triv), &elems, &elems, Exec::default())
                .holds()
        );
    }

    #[test]
    fn preimages_match_brute_force() {
        let odo = fixtures::odometer(2);
        let sigma = odometer_sigma(&odo).unwrap();
        let b = bounds(8, 2);
        let index = Preimages::new(&odo, &sigma, b);
        let all = InverseSemigroup::new(&odo).enumerate(b);
        let bs = sigma.target();
        for target in [bs.z(), bs.a0(), bs.identity(), bs.invert(&bs.digit(1))] {
            let mut found = index.find(&target);
            let mut brute: Vec<_> = all
                .iter()
                .filter(|x| sigma.apply(x) == target)
                .cloned()
                .collect();
            found.sort();
            brute.sort();
            assert_eq!(found, brute);
            assert!(!found.is_empty());
        }
    }
}
