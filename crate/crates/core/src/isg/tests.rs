use proptest::prelude::*;

use super::*;
use crate::action::Group;
use crate::fixtures;
use crate::point::sample_points;

fn bounds(radius: usize, path_len: usize) -> Bounds {
    Bounds { radius, path_len }
}

#[test]
fn product_examples_on_the_odometer() {
    let odo = fixtures::odometer(2);
    let s = InverseSemigroup::new(&odo);
    let t = |text: &str| s.parse(text).unwrap();
    assert_eq!(
        s.multiply(&t("(∅, z, 1)"), &t("(10, z, ∅)")),
        Some(t("(1, z, ∅)"))
    );
    assert_eq!(
        s.multiply(&t("(∅, z, ∅)"), &t("(1, 1, ∅)")),
        Some(t("(0, z, ∅)"))
    );
    assert_eq!(
        s.multiply(&t("(∅, z, ∅)"), &t("(0, 1, ∅)")),
        Some(t("(1, 1, ∅)"))
    );
    assert_eq!(s.multiply(&t("(0, 1, 0)"), &t("(1, 1, 1)")), None);
    assert_eq!(s.star(&t("(1, z, 0)")), t("(0, z^-1, 1)"));
    // Case two: the right factor's cylinder is the larger one.
    assert_eq!(
        s.multiply(&t("(∅, 1, 11)"), &t("(∅, z, ∅)")),
        Some(t("(∅, 1, 01)"))
    );
    assert_eq!(s.render(&t("(01, z^2, ∅)")), "(01, z^2, ∅)");
}

#[test]
fn matching_middle_multiplies_group_parts() {
    let odo = fixtures::odometer(3);
    let s = InverseSemigroup::new(&odo);
    let paths = odo.graph().paths_up_to(2);
    for a in &paths {
        for b in &paths {
            for nu in &paths {
                for (g, h) in [(2i64, -1i64), (-3, 5), (1, 1)] {
                    let x = s.triple(a.clone(), g, b.clone()).unwrap();
                    let y = s.triple(b.clone(), h, nu.clone()).unwrap();
                    assert_eq!(
                        s.multiply(&x, &y),
                        Some(Triple {
                            alpha: a.clone(),
                            g: g + h,
                            beta: nu.clone()
                        })
                    );
                }
            }
        }
    }
}

#[test]
fn single_vertex_shift_by_group_element() {
    for act in [fixtures::odometer(2), fixtures::odometer(3)] {
        let s = InverseSemigroup::new(&act);
        let empty = act.graph().parse_path("∅").unwrap();
        for g in act.group().ball(4) {
            for e in act.graph().paths_of_length(1) {
                let (ge, r) = act.act_restrict(&g, &e);
                let lhs = s.multiply(
                    &Triple {
                        alpha: empty.clone(),
                        g,
                        beta: empty.clone(),
                    },
                    &Triple {
                        alpha: e.clone(),
                        g: 0,
                        beta: empty.clone(),
                    },
                );
                assert_eq!(
                    lhs,
                    Some(Triple {
                        alpha: ge,
                        g: r,
                        beta: empty.clone()
                    })
                );
            }
        }
    }
}

/// Case two written out independently of `multiply`, for the overlap law.
fn case_two<G: Group>(
    s: &InverseSemigroup<G>,
    x: &Triple<G::Elem>,
    y: &Triple<G::Elem>,
) -> Option<Triple<G::Elem>> {
    let group = s.action().group();
    let rest = y.alpha.remainder_of(&x.beta)?;
    let h_inv = group.invert(&y.g);
    let moved = s.action().act(&h_inv, &rest);
    let r = s.action().restrict(&h_inv, &rest);
    Some(Triple {
        alpha: x.alpha.clone(),
        g: group.multiply(&x.g, &group.invert(&r)),
        beta: y.beta.concat(&moved)?,
    })
}

fn structural_laws<G: Group>(act: &SelfSimilarAction<G>, b: Bounds) {
    let s = InverseSemigroup::new(act);
    let elems = s.enumerate(b);
    assert!(!elems.is_empty());
    for x in &elems {
        let xs = s.star(x);
        assert_eq!(s.star(&xs), *x);
        let xxsx = s.multiply(x, &xs).and_then(|e| s.multiply(&e, x));
        assert_eq!(xxsx.as_ref(), Some(x));
        let xsxxs = s.multiply(&xs, x).and_then(|e| s.multiply(&e, &xs));
        assert_eq!(xsxxs.as_ref(), Some(&xs));
        let expected = x.alpha == x.beta && act.group().is_identity(&x.g);
        assert_eq!(s.is_idempotent(x), expected, "{}", s.render(x));
    }
    for x in &elems {
        for y in &elems {
            let xy = s.multiply(x, y);
            assert_eq!(
                xy.as_ref().map(|p| s.star(p)),
                s.multiply(&s.star(y), &s.star(x))
            );
            if x.beta == y.alpha {
                assert_eq!(
                    xy,
                    case_two(&s, x, y),
                    "overlap {} {}",
                    s.render(x),
                    s.render(y)
                );
            }
            for z in &elems {
                let left = xy.as_ref().and_then(|p| s.multiply(p, z));
                let right = s.multiply(y, z).and_then(|p| s.multiply(x, &p));
                assert_eq!(left, right);
            }
        }
    }
    let idempotents: Vec<_> = act
        .graph()
        .paths_up_to(b.path_len)
        .into_iter()
        .map(|a| s.idempotent(a))
        .collect();
    for e in &idempotents {
        for f in &idempotents {
            assert_eq!(s.multiply(e, f), s.multiply(f, e));
            let ef = s.multiply(e, f);
            assert_eq!(s.leq(e, f), ef.as_ref() == Some(e));
        }
    }
}

#[test]
fn inverse_semigroup_laws_on_fixtures() {
    structural_laws(&fixtures::odometer(2), bounds(2, 2));
    structural_laws(&fixtures::odometer(3), bounds(1, 2));
    structural_laws(&fixtures::two_vertex_swap(), bounds(2, 2));
    structural_laws(&fixtures::z2_trivial(), bounds(2, 2));
}

#[test]
fn cylinder_refinement_is_below() {
    let odo = fixtures::odometer(2);
    let s = InverseSemigroup::new(&odo);
    let p = |t: &str| odo.graph().parse_path(t).unwrap();
    assert!(s.leq(&s.idempotent(p("0110")), &s.idempotent(p("01"))));
    assert!(!s.leq(&s.idempotent(p("01")), &s.idempotent(p("0110"))));
    assert!(!s.is_idempotent(&s.parse("(∅, z, ∅)").unwrap()));
    // Restricting a triple to a smaller cylinder stays below it.
    let t = s.parse("(1, z, 0)").unwrap();
    let below = s.multiply(&t, &s.idempotent(p("01"))).unwrap();
    assert!(s.leq(&below, &t));
}

#[test]
fn zappa_szep_agrees_with_triples() {
    let odo = fixtures::odometer(2);
    let s = InverseSemigroup::new(&odo);
    let pairs = s.zs_enumerate(bounds(2, 2)).unwrap();
    let one = s.zs_identity().unwrap();
    let empty = one.alpha.clone();
    let lift = |p: &ZsPair<i64>| Triple {
        alpha: p.alpha.clone(),
        g: p.g,
        beta: empty.clone(),
    };
    for p in &pairs {
        assert_eq!(s.zs_multiply(&one, p).unwrap(), *p);
        assert_eq!(s.zs_multiply(p, &one).unwrap(), *p);
        for q in &pairs {
            let pq = s.zs_multiply(p, q).unwrap();
            assert_eq!(Some(lift(&pq)), s.multiply(&lift(p), &lift(q)));
            for r in &pairs {
                assert_eq!(
                    s.zs_multiply(&pq, r).unwrap(),
                    s.zs_multiply(p, &s.zs_multiply(q, r).unwrap()).unwrap()
                );
            }
        }
    }
    let z = ZsPair {
        alpha: empty.clone(),
        g: 1,
    };
    let b = ZsPair {
        alpha: odo.graph().parse_path("1").unwrap(),
        g: 0,
    };
    let expected = ZsPair {
        alpha: odo.graph().parse_path("0").unwrap(),
        g: 1,
    };
    assert_eq!(s.zs_multiply(&z, &b).unwrap(), expected);
    let swap = fixtures::two_vertex_swap();
    assert_eq!(
        InverseSemigroup::new(&swap).zs_identity().unwrap_err(),
        IsgError::MultiVertex
    );
}

#[test]
fn cancellation_matches_pseudo_freeness() {
    let b = bounds(4, 3);
    let odo = fixtures::odometer(2);
    assert_eq!(
        InverseSemigroup::new(&odo)
            .is_cancellative(b, Exec::default())
            .unwrap(),
        Cancellative::OkUpTo(b)
    );
    let z2 = fixtures::z2_trivial();
    let verdict = InverseSemigroup::new(&z2)
        .is_cancellative(b, Exec::default())
        .unwrap();
    let Cancellative::RightViolated { p, q, c } = verdict else {
        panic!("{verdict:?}")
    };
    assert_ne!(p, q);
    let s = InverseSemigroup::new(&z2);
    assert_eq!(s.zs_multiply(&p, &c), s.zs_multiply(&q, &c));
    let swap = fixtures::two_vertex_swap().collapse();
    assert!(!InverseSemigroup::new(&swap)
        .is_cancellative(b, Exec::default())
        .unwrap()
        .is_violated());
}

#[test]
fn left_cancellation_always_holds() {
    let b = bounds(3, 3);
    let z2 = fixtures::z2_trivial();
    let s = InverseSemigroup::new(&z2);
    let pairs = s.zs_enumerate(b).unwrap();
    for c in &pairs {
        let mut products: Vec<_> = pairs.iter().map(|p| s.zs_multiply(c, p).unwrap()).collect();
        products.sort();
        products.dedup();
        assert_eq!(products.len(), pairs.len());
    }
}

#[test]
fn estar_unitary_witness_on_trivial_z2() {
    let z2 = fixtures::z2_trivial();
    let s = InverseSemigroup::new(&z2);
    let verdict = s.is_estar_unitary(bounds(4, 4), Exec::default());
    assert_eq!(
        verdict,
        EStarUnitary::Violated {
            s: s.parse("(∅, t, ∅)").unwrap(),
            e: s.parse("(0, 1, 0)").unwrap()
        }
    );
    let odo = fixtures::odometer(2);
    let b = bounds(3, 3);
    assert_eq!(
        InverseSemigroup::new(&odo).is_estar_unitary(b, Exec::default()),
        EStarUnitary::OkUpTo(b)
    );
}

#[test]
fn collapse_is_a_prehomomorphism() {
    let swap = fixtures::two_vertex_swap();
    let collapsed = swap.collapse();
    let s = InverseSemigroup::new(&swap);
    let sc = InverseSemigroup::new(&collapsed);
    let elems = s.enumerate(bounds(2, 2));
    let mut checked = 0;
    for x in &elems {
        for y in &elems {
            if let Some(xy) = s.multiply(x, y) {
                assert_eq!(
                    Some(s.to_collapse(&xy)),
                    sc.multiply(&s.to_collapse(x), &s.to_collapse(y))
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
    let v = swap.graph().parse_path("@v").unwrap();
    let w = swap.graph().parse_path("@w").unwrap();
    let x = s.triple(w, 1, v).unwrap();
    assert_eq!(sc.render(&s.to_collapse(&x)), "(∅, t, ∅)");
}

#[test]
fn points_give_maximal_filters() {
    for act in [fixtures::odometer(2), fixtures::odometer(3)] {
        let s = InverseSemigroup::new(&act);
        for x in sample_points(act.graph(), 2, 2) {
            assert!(s.filter_of_point(&x, 4).is_ok());
        }
    }
    let swap = fixtures::two_vertex_swap();
    let s = InverseSemigroup::new(&swap);
    for x in sample_points(swap.graph(), 2, 2) {
        assert!(s.filter_of_point(&x, 4).is_ok());
    }
}

fn arb_triple() -> impl Strategy<Value = (Vec<u32>, i64, Vec<u32>)> {
    (
        prop::collection::vec(0u32..3, 0..6),
        -30i64..30,
        prop::collection::vec(0u32..3, 0..6),
    )
}

proptest! {
    #[test]
    fn star_is_an_involution((a, g, b) in arb_triple()) {
        let odo = fixtures::odometer(3);
        let s = InverseSemigroup::new(&odo);
        let graph = odo.graph();
        let path = |v: &[u32]| graph.path(crate::Vertex(0), &v.iter().map(|&i| crate::Edge(i)).collect::<Vec<_>>()).unwrap();
        let t = s.triple(path(&a), g, path(&b)).unwrap();
        prop_assert_eq!(s.star(&s.star(&t)), t.clone());
        let e = s.multiply(&t, &s.star(&t)).unwrap();
        prop_assert!(s.is_idempotent(&e));
    }

    #[test]
    fn products_associate_on_long_words(x in arb_triple(), y in arb_triple(), z in arb_triple()) {
        let odo = fixtures::odometer(3);
        let s = InverseSemigroup::new(&odo);
        let graph = odo.graph();
        let path = |v: &[u32]| graph.path(crate::Vertex(0), &v.iter().map(|&i| crate::Edge(i)).collect::<Vec<_>>()).unwrap();
        let mk = |(a, g, b): &(Vec<u32>, i64, Vec<u32>)| s.triple(path(a), *g, path(b)).unwrap();
        let (x, y, z) = (mk(&x), mk(&y), mk(&z));
        let left = s.multiply(&x, &y).and_then(|p| s.multiply(&p, &z));
        let right = s.multiply(&y, &z).and_then(|p| s.multiply(&x, &p));
        prop_assert_eq!(left, right);
    }
}
