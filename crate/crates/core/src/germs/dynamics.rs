//! Partial actions of groups on boundary points, and their transformation
//! groupoids `G ⋉ X = {(g, x) : x ∈ D_{g⁻¹}}`.

use std::fmt::Debug;
use std::hash::Hash;

use crate::action::{Group, SelfSimilarAction};
use crate::graph::Edge;
use crate::point::BoundaryPoint;
use crate::ugroup::free::{alpha_beta_shape, FreeGroup, FreeWord};
use crate::ugroup::{BaumslagSolitar, BsElement};

/// A group partially acting on eventually periodic points.
pub trait PartialDynamics: Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;
    /// `θ_g(x)`, or `None` when `x ∉ D_{g⁻¹}`.
    fn apply(&self, g: &Self::Elem, x: &BoundaryPoint) -> Option<BoundaryPoint>;
}

/// `BS(1, n)` on `n`-ary sequences, in closed form.
#[derive(Clone, Debug)]
pub struct OdometerDynamics {
    pub bs: BaumslagSolitar,
}

impl PartialDynamics for OdometerDynamics {
    type Elem = BsElement;

    fn identity(&self) -> BsElement {
        self.bs.identity()
    }

    fn multiply(&self, a: &BsElement, b: &BsElement) -> BsElement {
        self.bs.multiply(a, b)
    }

    fn invert(&self, a: &BsElement) -> BsElement {
        self.bs.invert(a)
    }

    fn apply(&self, g: &BsElement, x: &BoundaryPoint) -> Option<BoundaryPoint> {
        let m = crate::paction::odometer_action(&self.bs, g).ok()?;
        m.apply(x)
    }
}

/// The free group on the edges of a rose acting by prefix replacement,
/// `θ_{αβ⁻¹}(βx) = αx`.
#[derive(Clone, Debug)]
pub struct PrefixDynamics {
    pub free: FreeGroup,
}

impl PrefixDynamics {
    pub fn for_action<G: Group>(action: &SelfSimilarAction<G>) -> PrefixDynamics {
        let g = action.graph();
        PrefixDynamics {
            free: FreeGroup::new(g.edges().map(|e| g.edge_name(e).to_owned())),
        }
    }
}

impl PartialDynamics for PrefixDynamics {
    type Elem = FreeWord;

    fn identity(&self) -> FreeWord {
        Vec::new()
    }

    fn multiply(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        self.free.multiply(a, b)
    }

    fn invert(&self, a: &FreeWord) -> FreeWord {
        self.free.invert(a)
    }

    fn apply(&self, g: &FreeWord, x: &BoundaryPoint) -> Option<BoundaryPoint> {
        let (alpha, beta) = alpha_beta_shape(g)?;
        let beta: Vec<Edge> = beta.into_iter().map(|i| Edge(i as u32)).collect();
        let alpha: Vec<Edge> = alpha.into_iter().map(|i| Edge(i as u32)).collect();
        x.starts_with(&beta)
            .then(|| x.shift(beta.len()).prepend(&alpha))
    }
}

/// `(g, x)` with `x ∈ D_{g⁻¹}`: an arrow from `x` to `θ_g(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Germ<K> {
    pub g: K,
    pub x: BoundaryPoint,
}

impl<K: Clone> Germ<K> {
    pub fn source(&self) -> &BoundaryPoint {
        &self.x
    }
}

pub fn germ_range<D: PartialDynamics + ?Sized>(
    dynamics: &D,
    p: &Germ<D::Elem>,
) -> Option<BoundaryPoint> {
    dynamics.apply(&p.g, &p.x)
}

/// `(g, x)(h, y) = (gh, y)` when `θ_h(y) = x`.
pub fn germ_compose<D: PartialDynamics + ?Sized>(
    dynamics: &D,
    p: &Germ<D::Elem>,
    q: &Germ<D::Elem>,
) -> Option<Germ<D::Elem>> {
    (germ_range(dynamics, q).as_ref() == Some(&p.x)).then(|| Germ {
        g: dynamics.multiply(&p.g, &q.g),
        x: q.x.clone(),
    })
}

/// `(g, x)⁻¹ = (g⁻¹, θ_g(x))`.
pub fn germ_inverse<D: PartialDynamics + ?Sized>(
    dynamics: &D,
    p: &Germ<D::Elem>,
) -> Option<Germ<D::Elem>> {
    Some(Germ {
        g: dynamics.invert(&p.g),
        x: germ_range(dynamics, p)?,
    })
}

pub fn unit<D: PartialDynamics + ?Sized>(dynamics: &D, x: &BoundaryPoint) -> Germ<D::Elem> {
    Germ {
        g: dynamics.identity(),
        x: x.clone(),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupoidReport {
    pub triples: usize,
    pub failures: Vec<String>,
}

impl GroupoidReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the groupoid laws on composable chains `r ∘ p ∘ q`: associativity,
/// `r(pq) = r(p)`, `d(pq) = d(q)`, inverses and units.
pub fn groupoid_axioms<D: PartialDynamics + ?Sized>(
    dynamics: &D,
    chains: &[[Germ<D::Elem>; 3]],
) -> GroupoidReport {
    let mut report = GroupoidReport::default();
    for [r, p, q] in chains {
        report.triples += 1;
        let mut fail = |what: &str| {
            report
                .failures
                .push(format!("{what} at {r:?}, {p:?}, {q:?}"))
        };
        let (Some(pq), Some(rp)) = (germ_compose(dynamics, p, q), germ_compose(dynamics, r, p))
        else {
            fail("chain not composable");
            continue;
        };
        if germ_compose(dynamics, &rp, q) != germ_compose(dynamics, r, &pq) {
            fail("associativity");
        }
        if germ_range(dynamics, &pq) != germ_range(dynamics, p) || pq.x != q.x {
            fail("range or source of a product");
        }
        let Some(inv) = germ_inverse(dynamics, p) else {
            fail("inverse");
            continue;
        };
        let target = germ_range(dynamics, p).expect("p is a germ");
        if germ_compose(dynamics, p, &inv) != Some(unit(dynamics, &target))
            || germ_compose(dynamics, &inv, p) != Some(unit(dynamics, &p.x))
        {
            fail("inverse law");
        }
        if germ_compose(dynamics, &unit(dynamics, &target), p).as_ref() != Some(p)
            || germ_compose(dynamics, p, &unit(dynamics, &p.x)).as_ref() != Some(p)
        {
            fail("unit law");
        }
    }
    report
}
