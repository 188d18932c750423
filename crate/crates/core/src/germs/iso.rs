//! Sampled checks of the groupoid maps `[s, x] ↦ (σ(s), x)` and
//! `Φ(αβ⁻¹, βx) = (φ(αβ⁻¹), βx)`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action::checks::Bounds;
use crate::action::{Group, SelfSimilarAction};
use crate::graph::Path;
use crate::isg::{InverseSemigroup, Triple};
use crate::paction::quigg::{induced_action, reduced_alpha_beta};
use crate::paction::PartialMap;
use crate::point::{random_point, BoundaryPoint};
use crate::ugroup::sigma::Sigma;

use super::dynamics::PartialDynamics;
use super::sgerm::{sgerm_equal, sgerm_range, GermEquality, SGerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub samples: usize,
    pub depth: usize,
    pub seed: u64,
    pub bounds: Bounds,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: 500,
            depth: 8,
            seed: 0x5eed,
            bounds: Bounds {
                radius: 2,
                path_len: 2,
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub pairs: usize,
    pub homomorphism_failures: usize,
    pub inverse_failures: usize,
    pub unit_failures: usize,
    /// Germs mapped to the same arrow and compared.
    pub injectivity_comparisons: usize,
    pub injectivity_failures: usize,
    pub unknown: usize,
    /// Surjectivity probes (for `Φ` only).
    pub surjectivity_checked: usize,
    pub surjectivity_failures: usize,
    pub first_failure: Option<String>,
}

impl IsoReport {
    pub fn is_ok(&self) -> bool {
        self.homomorphism_failures
            + self.inverse_failures
            + self.unit_failures
            + self.injectivity_failures
            + self.surjectivity_failures
            == 0
    }

    fn note(&mut self, what: impl FnOnce() -> String) {
        if self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }
}

fn point_in<R: Rng, G: Group>(
    action: &SelfSimilarAction<G>,
    rng: &mut R,
    beta: &Path,
    depth: usize,
) -> BoundaryPoint {
    let graph = action.graph();
    let tail_len = depth.saturating_sub(beta.len());
    let head_len = rng.random_range(0..=tail_len);
    random_point(graph, rng, Some(beta.d()), head_len, 3).prepend(beta.edges())
}

/// Samples composable pairs `[s, x][t, y]` from the elements within
/// `config.bounds` and checks that `[s, x] ↦ (σ(s), x)` preserves products,
/// inverses and units. When `dynamics` is given, also checks that
/// `θ_{σ(s)}` extends `θ_s` at the sampled points. Injectivity: at each
/// sampled point, germs with equal `σ` must be equal germs.
pub fn germ_iso_check<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    dynamics: Option<&dyn PartialDynamics<Elem = H::Elem>>,
    config: SampleConfig,
) -> IsoReport {
    let s = InverseSemigroup::new(action);
    let target = sigma.target();
    let graph = action.graph();
    let elements = s.enumerate(config.bounds);
    let images: Vec<H::Elem> = elements.iter().map(|t| sigma.apply(t)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = IsoReport::default();
    for _ in 0..config.samples {
        let ti = rng.random_range(0..elements.len());
        let t = &elements[ti];
        let y = point_in(action, &mut rng, &t.beta, config.depth);
        let q = SGerm {
            s: t.clone(),
            x: y.clone(),
        };
        let x = sgerm_range(action, &q).expect("y lies in the domain of t");
        let candidates: Vec<usize> = (0..elements.len())
            .filter(|&i| x.in_cylinder(graph, &elements[i].beta))
            .collect();
        let si = candidates[rng.random_range(0..candidates.len())];
        let sv = &elements[si];
        report.pairs += 1;

        // Products.
        let st = s
            .multiply(sv, t)
            .expect("composable germs have nonzero product");
        if sigma.apply(&st) != target.multiply(&images[si], &images[ti]) {
            report.homomorphism_failures += 1;
            report.note(|| {
                format!(
                    "σ({}) ≠ σ({})σ({})",
                    s.render(&st),
                    s.render(sv),
                    s.render(t)
                )
            });
        }
        if let Some(d) = dynamics {
            let p = SGerm {
                s: sv.clone(),
                x: x.clone(),
            };
            if d.apply(&images[ti], &y).as_ref() != Some(&x)
                || d.apply(&images[si], &x) != sgerm_range(action, &p)
            {
                report.homomorphism_failures += 1;
                report.note(|| {
                    format!(
                        "θ_σ(s) does not extend θ_s for {} at {}",
                        s.render(sv),
                        x.render(graph)
                    )
                });
            }
        }
        // Inverses and units.
        if sigma.apply(&s.star(t)) != target.invert(&images[ti]) {
            report.inverse_failures += 1;
            report.note(|| format!("σ({}*) ≠ σ(…)⁻¹", s.render(t)));
        }
        let e = s.idempotent(y.prefix_path(graph, rng.random_range(0..=config.depth)));
        if !target.is_identity(&sigma.apply(&e)) {
            report.unit_failures += 1;
            report.note(|| format!("σ({}) ≠ 1", s.render(&e)));
        }

        // Injectivity at y.
        let mut buckets: HashMap<&H::Elem, usize> = HashMap::new();
        for (i, u) in elements.iter().enumerate() {
            if !y.in_cylinder(graph, &u.beta) {
                continue;
            }
            match buckets.get(&images[i]) {
                None => {
                    buckets.insert(&images[i], i);
                }
                Some(&first) => {
                    report.injectivity_comparisons += 1;
                    let a = SGerm {
                        s: elements[first].clone(),
                        x: y.clone(),
                    };
                    let b = SGerm {
                        s: u.clone(),
                        x: y.clone(),
                    };
                    match sgerm_equal(action, &a, &b, config.depth) {
                        GermEquality::Equal(_) => {}
                        GermEquality::Distinct => {
                            report.injectivity_failures += 1;
                            report.note(|| {
                                format!(
                                    "[{}, x] ≠ [{}, x] at x = {}",
                                    s.render(&a.s),
                                    s.render(&b.s),
                                    y.render(graph)
                                )
                            });
                        }
                        GermEquality::UnknownAtDepth(_) => report.unknown += 1,
                    }
                }
            }
        }
    }
    report
}

/// Checks `Φ` from the prefix-replacement groupoid of the free group on the
/// edges into the universal group's transformation groupoid (given by
/// `dynamics`): products, injectivity on sampled points, and that every
/// sampled arrow `(h, x)` of the target whose `x` lies in the induced
/// domain within `bound` agrees with the induced map there. `φ` sends an
/// edge `e` to `σ(e)`.
pub fn phi_iso_check<G: Group, H: Group>(
    action: &SelfSimilarAction<G>,
    sigma: &Sigma<G, H>,
    dynamics: &dyn PartialDynamics<Elem = H::Elem>,
    bound: usize,
    config: SampleConfig,
) -> IsoReport {
    let graph = action.graph();
    let target = sigma.target();
    let s = InverseSemigroup::new(action);
    let one = action.group().identity();
    let words = reduced_alpha_beta(graph, bound);
    let phi = |a: &Path, b: &Path| {
        target.multiply(&sigma.path_image(a), &target.invert(&sigma.path_image(b)))
    };
    let images: Vec<H::Elem> = words.iter().map(|(a, b)| phi(a, b)).collect();
    let qr = |(a, b): &(Path, Path), x: &BoundaryPoint| {
        PartialMap::of_triple(&Triple {
            alpha: a.clone(),
            g: one.clone(),
            beta: b.clone(),
        })
        .eval(action, x)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = IsoReport::default();
    let semigroup_elements = s.enumerate(config.bounds);
    let mut induced_cache: HashMap<H::Elem, Option<PartialMap<G::Elem>>> = HashMap::new();
    for _ in 0..config.samples {
        // A composable pair (w1, y1)(w2, y).
        let i2 = rng.random_range(0..words.len());
        let y = point_in(action, &mut rng, &words[i2].1, config.depth);
        let y1 = qr(&words[i2], &y).expect("y in the domain");
        let firsts: Vec<usize> = (0..words.len())
            .filter(|&i| y1.in_cylinder(graph, &words[i].1))
            .collect();
        let i1 = firsts[rng.random_range(0..firsts.len())];
        report.pairs += 1;
        let y2 = qr(&words[i1], &y1).expect("y1 in the domain");
        // Φ of each factor lands on an arrow of the target with the same ends.
        let ok = dynamics.apply(&images[i2], &y).as_ref() == Some(&y1)
            && dynamics.apply(&images[i1], &y1).as_ref() == Some(&y2)
            && dynamics
                .apply(&target.multiply(&images[i1], &images[i2]), &y)
                .as_ref()
                == Some(&y2);
        if !ok {
            report.homomorphism_failures += 1;
            report.note(|| format!("Φ does not respect the product at {}", y.render(graph)));
        }

        // Injectivity: reduced words defined at y have distinct images.
        let mut seen: HashMap<&H::Elem, usize> = HashMap::new();
        for (i, (_, b)) in words.iter().enumerate() {
            if y.in_cylinder(graph, b) {
                report.injectivity_comparisons += 1;
                if let Some(&j) = seen.get(&images[i]) {
                    report.injectivity_failures += 1;
                    report.note(|| {
                        let r = |k: usize| {
                            format!(
                                "{}·{}⁻¹",
                                graph.render_path(&words[k].0),
                                graph.render_path(&words[k].1)
                            )
                        };
                        format!(
                            "{} and {} both map to one arrow at {}",
                            r(j),
                            r(i),
                            y.render(graph)
                        )
                    });
                }
                seen.insert(&images[i], i);
            }
        }

        // Surjectivity onto the induced arrows within the bound.
        let t = &semigroup_elements[rng.random_range(0..semigroup_elements.len())];
        let h = sigma.apply(t);
        let x = point_in(action, &mut rng, &t.beta, config.depth);
        let induced = induced_cache
            .entry(h.clone())
            .or_insert_with(|| {
                induced_action(action, sigma, &h, bound)
                    .ok()
                    .map(|m| m.glued.map)
            })
            .clone();
        let Some(induced) = induced else {
            report.surjectivity_failures += 1;
            report.note(|| format!("induced action conflicts at {}", s.render(t)));
            continue;
        };
        if induced.domain(graph).contains(graph, &x) {
            report.surjectivity_checked += 1;
            let preimage = words
                .iter()
                .zip(&images)
                .any(|(w, img)| *img == h && x.in_cylinder(graph, &w.1));
            if !preimage || induced.eval(action, &x) != dynamics.apply(&h, &x) {
                report.surjectivity_failures += 1;
                report.note(|| {
                    format!(
                        "arrow ({}, {}) has no matching preimage",
                        s.render(t),
                        x.render(graph)
                    )
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::germs::dynamics::{OdometerDynamics, PrefixDynamics};
    use crate::ugroup::sigma::{free_sigma, odometer_sigma};
    use crate::ugroup::BaumslagSolitar;

    fn quick() -> SampleConfig {
        SampleConfig {
            samples: 60,
            ..SampleConfig::default()
        }
    }

    #[test]
    fn odometer_germ_map() {
        let odo = fixtures::odometer(2);
        let sigma = odometer_sigma(&odo).unwrap();
        let d = OdometerDynamics {
            bs: sigma.target().clone(),
        };
        let r = germ_iso_check(&odo, &sigma, Some(&d), quick());
        assert!(r.is_ok(), "{r:?}");
        assert!(r.injectivity_comparisons > 0);
    }

    #[test]
    fn wrong_sigma_breaks_injectivity() {
        let odo = fixtures::odometer(2);
        let bs = BaumslagSolitar::new(2);
        let wrong: Sigma<_, _> = Sigma::new(bs.clone(), vec![bs.digit(0), bs.digit(0)], |&m| {
            BaumslagSolitar::z_power(m)
        });
        let r = germ_iso_check(&odo, &wrong, None, quick());
        assert!(r.injectivity_failures > 0, "{r:?}");
    }

    #[test]
    fn phi_on_odometer_and_free_case() {
        let odo = fixtures::odometer(2);
        let sigma = odometer_sigma(&odo).unwrap();
        let d = OdometerDynamics {
            bs: sigma.target().clone(),
        };
        let r = phi_iso_check(&odo, &sigma, &d, 6, quick());
        assert!(r.is_ok(), "{r:?}");
        assert!(r.surjectivity_checked > 0);
        let triv = fixtures::trivial_group(2);
        let fs = free_sigma(&triv);
        let r = phi_iso_check(&triv, &fs, &PrefixDynamics::for_action(&triv), 4, quick());
        assert!(r.is_ok(), "{r:?}");
    }
}
