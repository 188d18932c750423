//! The subcommands, generic over the group backend.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use selfsim::action::checks::Bounds;
use selfsim::action::Integers;
use selfsim::isg::InverseSemigroup;
use selfsim::paction::universal_action;
use selfsim::paction::PartialMap;
use selfsim::ugroup::presentation::{emit_presentation, odometer_names};
use selfsim::ugroup::sigma::{odometer_arity, odometer_sigma};
use selfsim::{BoundaryPoint, Group, SelfSimilarAction};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Unsupported(String),
}

fn input(msg: impl Into<String>) -> CommandError {
    CommandError::Input(msg.into())
}

pub fn parse_point<G: Group>(
    action: &SelfSimilarAction<G>,
    text: &str,
) -> Result<BoundaryPoint, CommandError> {
    BoundaryPoint::parse(action.graph(), text).ok_or_else(|| {
        input(format!(
            "cannot read point {text:?}; write it as head(cycle), e.g. 01(1)"
        ))
    })
}

fn parse_elem<G: Group>(
    action: &SelfSimilarAction<G>,
    text: &str,
) -> Result<G::Elem, CommandError> {
    action
        .group()
        .parse_elem(text)
        .map_err(|e| input(format!("element {text:?}: {e}")))
}

/// Presentation text, or its JSON form. Odometers get the names `a_i`, `Z`.
pub fn present<G: Group>(
    action: &SelfSimilarAction<G>,
    odometer: bool,
    json: bool,
) -> Result<String, CommandError> {
    let p = emit_presentation(action).map_err(|e| CommandError::Unsupported(e.to_string()))?;
    let p = if odometer {
        p.clone().with_names(odometer_names(&p))
    } else {
        p
    };
    Ok(if json {
        let mut out = serde_json::to_string_pretty(&serde_json::json!({
            "schema": crate::report::SCHEMA,
            "presentation": p.to_json_value(),
        }))
        .expect("presentations serialize");
        out.push('\n');
        out
    } else {
        p.to_text()
    })
}

pub fn is_odometer(action: &SelfSimilarAction<Integers>) -> bool {
    odometer_arity(action).is_some()
}

/// What `act` applies to the point.
pub enum Actor<'a> {
    Element(&'a str),
    Triple(&'a str),
}

pub fn act<G: Group>(
    action: &SelfSimilarAction<G>,
    actor: Actor<'_>,
    point: &str,
    depth: usize,
) -> Result<String, CommandError> {
    let x = parse_point(action, point)?;
    let image = match actor {
        Actor::Element(w) => Some(action.act_prefix(&parse_elem(action, w)?, &x, depth)),
        Actor::Triple(t) => {
            let s = InverseSemigroup::new(action);
            let t = s
                .parse(t)
                .ok_or_else(|| input(format!("cannot read triple {t:?}; write it as (α, g, β)")))?;
            PartialMap::of_triple(&t).eval_prefix(action, &x, depth)
        }
    };
    Ok(render_image(action, image))
}

fn render_image<G: Group>(
    action: &SelfSimilarAction<G>,
    image: Option<Vec<selfsim::Edge>>,
) -> String {
    match image {
        Some(p) => format!("{}\n", action.graph().render_edges(&p)),
        None => "undefined\n".to_owned(),
    }
}

/// Applies `θ_h` of the universal group, glued from preimages within
/// `bounds`, to an odometer point.
pub fn act_universal(
    odo: &SelfSimilarAction<Integers>,
    h: &str,
    point: &str,
    depth: usize,
    bounds: Bounds,
) -> Result<String, CommandError> {
    let sigma = odometer_sigma(odo)
        .map_err(|_| CommandError::Unsupported("--universal needs an odometer action".into()))?;
    let x = parse_point(odo, point)?;
    let h = sigma
        .target()
        .parse_elem(h)
        .map_err(|e| input(format!("element {h:?}: {e}")))?;
    let glued = universal_action(odo, &sigma, &h, bounds).map_err(|e| input(e.to_string()))?;
    Ok(render_image(odo, glued.map.eval_prefix(odo, &x, depth)))
}

/// Breadth-first orbit of `point` under `generators` (all generators and
/// their inverses when empty), one line per new point: step, prefix.
pub fn orbit<G: Group>(
    action: &SelfSimilarAction<G>,
    point: &str,
    generators: &[String],
    depth: usize,
    steps: usize,
) -> Result<String, CommandError> {
    let graph = action.graph();
    let group = action.group();
    let gens: Vec<G::Elem> = if generators.is_empty() {
        (0..group.generator_count())
            .flat_map(|i| [group.generator(i), group.invert(&group.generator(i))])
            .collect()
    } else {
        generators
            .iter()
            .map(|w| parse_elem(action, w))
            .collect::<Result<_, _>>()?
    };
    let start = parse_point(action, point)?;
    let mut seen: HashSet<BoundaryPoint> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut out = String::new();
    while let Some((x, step)) = queue.pop_front() {
        writeln!(out, "{step}\t{}", graph.render_edges(&x.prefix(depth))).unwrap();
        if step == steps {
            continue;
        }
        for g in &gens {
            let y = action
                .act_point(g, &x)
                .ok_or_else(|| input("point action did not settle"))?;
            if seen.insert(y.clone()) {
                queue.push_back((y, step + 1));
            }
        }
    }
    Ok(out)
}

/// States are the restrictions reachable from the generators; an arrow
/// `g → φ(g, e)` is labelled `e/ge`.
pub fn export<G: Group>(
    action: &SelfSimilarAction<G>,
    name: &str,
    max_states: usize,
) -> (String, bool) {
    let graph = action.graph();
    let group = action.group();
    let mut order: Vec<G::Elem> = Vec::new();
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut queue: VecDeque<G::Elem> = (0..group.generator_count())
        .map(|i| group.generator(i))
        .collect();
    let mut arrows = BTreeSet::new();
    let mut truncated = false;
    while let Some(g) = queue.pop_front() {
        if !seen.insert(g.clone()) {
            continue;
        }
        if order.len() == max_states {
            truncated = true;
            break;
        }
        order.push(g.clone());
        for e in graph.edges() {
            let (image, phi) = action.act_edge(&g, e);
            arrows.insert((
                action.render_elem(&g),
                action.render_elem(&phi),
                format!("{}/{}", graph.edge_name(e), graph.edge_name(image)),
            ));
            if !seen.contains(&phi) {
                queue.push_back(phi);
            }
        }
    }
    let mut out = format!("digraph {name:?} {{\n  rankdir=LR;\n");
    let mut states: Vec<String> = order.iter().map(|g| action.render_elem(g)).collect();
    states.sort();
    for s in &states {
        writeln!(out, "  {s:?};").unwrap();
    }
    for (from, to, label) in arrows
        .iter()
        .filter(|(f, t, _)| states.contains(f) && states.contains(t))
    {
        writeln!(out, "  {from:?} -> {to:?} [label={label:?}];").unwrap();
    }
    out.push_str("}\n");
    (out, truncated)
}
