//! The `check` report, schema `v1`.

use serde::Serialize;

use selfsim::action::checks::Bounds;
use selfsim::exec::Exec;
use selfsim::germs::IsoReport;
use selfsim::isg::{Cancellative, EStarUnitary, InverseSemigroup};
use selfsim::ugroup::sigma::{
    check_idempotent_pure, check_prehomomorphism, free_sigma, Purity, Sigma,
};
use selfsim::{Group, SelfSimilarAction};

use crate::spec::Expectations;

pub const SCHEMA: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Violated,
    Unresolved,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    fn ok() -> Verdict {
        Verdict {
            status: Status::Ok,
            detail: None,
        }
    }

    fn with(status: Status, detail: impl Into<String>) -> Verdict {
        Verdict {
            status,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportBounds {
    pub radius: usize,
    pub path_len: usize,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub axioms: Verdict,
    pub pseudo_free: Verdict,
    pub exhausting: Verdict,
    pub estar_unitary: Verdict,
    pub cancellative: Verdict,
    pub idempotent_pure: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub verdict: &'static str,
    pub expected: bool,
    pub actual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub schema: &'static str,
    pub name: String,
    pub bounds: ReportBounds,
    pub verdicts: Verdicts,
    /// Pseudo-freeness, cancellation and E*-unitarity agree.
    pub consistent: bool,
    pub expectations: Vec<Expectation>,
    /// Sampled check of `[s, x] ↦ (σ(s), x)`, when `σ` is known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub germ_map: Option<IsoReport>,
    pub warnings: Vec<String>,
}

impl CheckReport {
    pub fn has_violation(&self) -> bool {
        let v = &self.verdicts;
        [
            &v.axioms,
            &v.pseudo_free,
            &v.exhausting,
            &v.estar_unitary,
            &v.cancellative,
            &v.idempotent_pure,
        ]
        .iter()
        .any(|x| x.status == Status::Violated)
            || self.germ_map.as_ref().is_some_and(|g| !g.is_ok())
    }

    pub fn render_text(&self) -> String {
        let v = &self.verdicts;
        let mut out = format!(
            "{} (radius {}, path length {}, depth {})\n",
            self.name, self.bounds.radius, self.bounds.path_len, self.bounds.depth
        );
        for (name, x) in [
            ("axioms", &v.axioms),
            ("pseudo-free", &v.pseudo_free),
            ("exhausting", &v.exhausting),
            ("E*-unitary", &v.estar_unitary),
            ("cancellative", &v.cancellative),
            ("idempotent pure", &v.idempotent_pure),
        ] {
            let status = match x.status {
                Status::Ok => "no violation",
                Status::Violated => "VIOLATED",
                Status::Unresolved => "unresolved",
                Status::Skipped => "skipped",
            };
            match &x.detail {
                Some(d) => out.push_str(&format!("  {name:<16} {status}: {d}\n")),
                None => out.push_str(&format!("  {name:<16} {status}\n")),
            }
        }
        if let Some(g) = &self.germ_map {
            let status = if g.is_ok() {
                "no violation"
            } else {
                "VIOLATED"
            };
            out.push_str(&format!(
                "  {:<16} {status}: {} pairs, {} injectivity comparisons\n",
                "germ map", g.pairs, g.injectivity_comparisons
            ));
        }
        if !self.consistent {
            out.push_str("  warning: pseudo-free, cancellative and E*-unitary verdicts disagree\n");
        }
        for e in self.expectations.iter().filter(|e| e.expected != e.actual) {
            out.push_str(&format!(
                "  warning: expected {} = {}, found {}\n",
                e.verdict, e.expected, e.actual
            ));
        }
        for w in &self.warnings {
            out.push_str(&format!("  warning: {w}\n"));
        }
        out
    }
}

/// Runs every check. `sigma` is the map into the universal group when the
/// backend provides one; otherwise the free map sending the group to `1` is
/// tried, and used only when it is multiplicative within bounds.
pub fn check_action<G: Group + Clone, H: Group>(
    name: &str,
    action: &SelfSimilarAction<G>,
    sigma: Option<&Sigma<G, H>>,
    bounds: ReportBounds,
    expect: Option<&Expectations>,
    exec: Exec,
) -> CheckReport {
    let b = Bounds {
        radius: bounds.radius,
        path_len: bounds.path_len,
    };
    let mut warnings = Vec::new();
    let s = InverseSemigroup::new(action);

    let axioms = match action
        .axioms_report(b.radius, b.path_len, exec)
        .counterexample
    {
        None => Verdict::ok(),
        Some(c) => Verdict::with(Status::Violated, format!("{}: {}", c.axiom, c.detail)),
    };
    let pseudo_free = match action.is_pseudo_free(b.radius, exec) {
        selfsim::action::checks::PseudoFree::Violated { g, edge } => Verdict::with(
            Status::Violated,
            format!(
                "{} fixes edge {} with trivial restriction",
                action.render_elem(&g),
                action.graph().edge_name(edge)
            ),
        ),
        _ => Verdict::ok(),
    };
    let ex = action.is_exhausting(b.radius, b.path_len, exec);
    let exhausting = if ex.is_resolved() {
        Verdict::ok()
    } else {
        let names: Vec<String> = ex
            .unresolved
            .iter()
            .take(4)
            .map(|g| action.render_elem(g))
            .collect();
        warnings.push(format!(
            "{} elements have no trivializing path within the bound",
            ex.unresolved.len()
        ));
        Verdict::with(
            Status::Unresolved,
            format!("no trivializing path for {}", names.join(", ")),
        )
    };
    let estar_unitary = match s.is_estar_unitary(b, exec) {
        EStarUnitary::Violated { s: x, e } => Verdict::with(
            Status::Violated,
            format!("{} · {} is idempotent", s.render(&x), s.render(&e)),
        ),
        EStarUnitary::OkUpTo(_) => Verdict::ok(),
    };
    let collapsed = action.collapse();
    let cs = InverseSemigroup::new(&collapsed);
    let cancellative = match cs.is_cancellative(b, exec) {
        Ok(Cancellative::OkUpTo(_)) => Verdict::ok(),
        Ok(Cancellative::RightViolated { p, q, c })
        | Ok(Cancellative::LeftViolated { p, q, c }) => {
            let r = |x: &selfsim::isg::ZsPair<G::Elem>| {
                format!(
                    "({}, {})",
                    collapsed.graph().render_path(&x.alpha),
                    collapsed.render_elem(&x.g)
                )
            };
            Verdict::with(
                Status::Violated,
                format!("{} and {} agree after {}", r(&p), r(&q), r(&c)),
            )
        }
        Err(e) => Verdict::with(Status::Skipped, e.to_string()),
    };
    let purity_detail = |p: Purity<G::Elem>, label: &str| match p {
        Purity::Pure { checked } => {
            Verdict::with(Status::Ok, format!("{label}, {checked} elements"))
        }
        Purity::Impure { s: x, idempotent } => Verdict::with(
            Status::Violated,
            if idempotent {
                format!("{label}: idempotent {} is not sent to 1", s.render(&x))
            } else {
                format!(
                    "{label}: {} is sent to 1 but is not idempotent",
                    s.render(&x)
                )
            },
        ),
    };
    let idempotent_pure = match sigma {
        Some(sigma) => purity_detail(
            check_idempotent_pure(action, sigma, b, exec),
            "σ into the universal group",
        ),
        None => {
            let free = free_sigma(action);
            let small = s.enumerate(Bounds {
                radius: b.radius.min(2),
                path_len: b.path_len.min(2),
            });
            if check_prehomomorphism(action, &free, &small, &small, exec).holds() {
                purity_detail(
                    check_idempotent_pure(action, &free, b, exec),
                    "σ into the free group on the edges",
                )
            } else {
                Verdict::with(
                    Status::Skipped,
                    "no prehomomorphism to a group is known for this backend",
                )
            }
        }
    };
    let triangle = [&pseudo_free, &cancellative, &estar_unitary];
    let mut decided = triangle
        .iter()
        .map(|v| v.status)
        .filter(|&x| x != Status::Skipped);
    let consistent = decided
        .next()
        .is_none_or(|first| decided.all(|x| x == first));
    let mut expectations = Vec::new();
    if let Some(e) = expect {
        for (verdict, expected, actual) in [
            ("pseudo_free", e.pseudo_free, &pseudo_free),
            ("exhausting", e.exhausting, &exhausting),
            ("estar_unitary", e.estar_unitary, &estar_unitary),
            ("cancellative", e.cancellative, &cancellative),
        ] {
            if let Some(expected) = expected {
                expectations.push(Expectation {
                    verdict,
                    expected,
                    actual: actual.status == Status::Ok,
                });
            }
        }
    }
    CheckReport {
        schema: SCHEMA,
        name: name.to_owned(),
        bounds,
        verdicts: Verdicts {
            axioms,
            pseudo_free,
            exhausting,
            estar_unitary,
            cancellative,
            idempotent_pure,
        },
        consistent,
        expectations,
        germ_map: None,
        warnings,
    }
}
