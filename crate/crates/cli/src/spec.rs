//! Action files: a TOML document with `graph`, `group` and `table`
//! sections.
//!
//! ```toml
//! name = "odometer-2"
//!
//! [graph]
//! vertices = ["v"]
//! edges = [{ id = "0", r = "v", d = "v" }, { id = "1", r = "v", d = "v" }]
//!
//! [group]
//! backend = "integers"
//! generator = "z"
//!
//! [[table]]
//! generator = "z"
//! vertices = { v = "v" }
//! edges = [
//!   { edge = "0", image = "1", cocycle = "1" },
//!   { edge = "1", image = "0", cocycle = "z" },
//! ]
//! ```
//!
//! Group words are whitespace-separated generator names, with `^k` for
//! powers (`z^-1`) and `1` for the identity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use selfsim::action::{FiniteGroup, GeneratorTable, Integers};
use selfsim::graph::{validate, Edge, GraphSpec, Vertex};
use selfsim::{Graph, Group, SelfSimilarAction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub graph: GraphSpec,
    pub group: GroupSpec,
    #[serde(default)]
    pub table: Vec<TableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expectations>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    /// `integers`, `cyclic` or `trivial`.
    pub backend: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    /// Order of a cyclic group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub generator: String,
    /// Vertex images; vertices left out are fixed.
    #[serde(default)]
    pub vertices: BTreeMap<String, String>,
    pub edges: Vec<EdgeRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRow {
    pub edge: String,
    pub image: String,
    pub cocycle: String,
}

/// Verdicts the author expects; compared against the computed ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseudo_free: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exhausting: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estar_unitary: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cancellative: Option<bool>,
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("{0}")]
    Syntax(String),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
}

fn field(field: impl Into<String>, message: impl Into<String>) -> SpecError {
    SpecError::Field {
        field: field.into(),
        message: message.into(),
    }
}

/// A parsed action over one of the supported group backends.
pub enum AnyAction {
    Integers(SelfSimilarAction<Integers>),
    Finite(SelfSimilarAction<FiniteGroup>),
}

impl ActionSpec {
    pub fn parse(text: &str) -> Result<ActionSpec, SpecError> {
        toml::from_str(text).map_err(|e| SpecError::Syntax(e.to_string()))
    }

    pub fn render(&self) -> String {
        toml::to_string(self).expect("action specs serialize")
    }

    pub fn build(&self) -> Result<AnyAction, SpecError> {
        if let Err(defects) = validate(&self.graph, true) {
            let msgs: Vec<String> = defects.iter().map(ToString::to_string).collect();
            return Err(field("graph", msgs.join("; ")));
        }
        let graph = Graph::from_spec(&self.graph).map_err(|d| field("graph", format!("{d:?}")))?;
        let g = &self.group;
        match g.backend.as_str() {
            "integers" => {
                let group = Integers::named(g.generator.clone().unwrap_or_else(|| "z".to_owned()));
                Ok(AnyAction::Integers(self.assemble(graph, group)?))
            }
            "cyclic" => {
                let order = g
                    .order
                    .ok_or_else(|| field("group.order", "required for the cyclic backend"))?;
                if order == 0 {
                    return Err(field("group.order", "must be positive"));
                }
                let name = g.generator.clone().unwrap_or_else(|| "t".to_owned());
                Ok(AnyAction::Finite(
                    self.assemble(graph, FiniteGroup::cyclic(order, &name))?,
                ))
            }
            "trivial" => Ok(AnyAction::Finite(
                self.assemble(graph, FiniteGroup::trivial())?,
            )),
            other => Err(field(
                "group.backend",
                format!("unknown backend {other:?} (expected integers, cyclic or trivial)"),
            )),
        }
    }

    fn assemble<G: Group>(
        &self,
        graph: Graph,
        group: G,
    ) -> Result<SelfSimilarAction<G>, SpecError> {
        let mut tables = Vec::with_capacity(group.generator_count());
        for i in 0..group.generator_count() {
            let name = group.generator_name(i);
            let matching: Vec<usize> = (0..self.table.len())
                .filter(|&k| self.table[k].generator == name)
                .collect();
            let k = match matching.as_slice() {
                [k] => *k,
                [] => return Err(field("table", format!("no table for generator {name:?}"))),
                _ => {
                    return Err(field(
                        "table",
                        format!("generator {name:?} has several tables"),
                    ))
                }
            };
            let t = &self.table[k];
            let at = |s: &str| format!("table[{k}].{s}");
            let mut vertex: Vec<Vertex> = graph.vertices().collect();
            for (v, image) in &t.vertices {
                let from = graph
                    .vertex_by_name(v)
                    .ok_or_else(|| field(at("vertices"), format!("unknown vertex {v:?}")))?;
                let to = graph.vertex_by_name(image).ok_or_else(|| {
                    field(
                        at(&format!("vertices.{v}")),
                        format!("unknown vertex {image:?}"),
                    )
                })?;
                vertex[from.index()] = to;
            }
            let mut edge: Vec<Option<Edge>> = vec![None; graph.edge_count()];
            let mut cocycle: Vec<Option<G::Elem>> = vec![None; graph.edge_count()];
            for (j, row) in t.edges.iter().enumerate() {
                let at_row = |s: &str| at(&format!("edges[{j}].{s}"));
                let e = graph
                    .edge_by_name(&row.edge)
                    .ok_or_else(|| field(at_row("edge"), format!("unknown edge {:?}", row.edge)))?;
                let image = graph.edge_by_name(&row.image).ok_or_else(|| {
                    field(at_row("image"), format!("unknown edge {:?}", row.image))
                })?;
                let value = group
                    .parse_elem(&row.cocycle)
                    .map_err(|err| field(at_row("cocycle"), err.to_string()))?;
                if edge[e.index()].is_some() {
                    return Err(field(
                        at_row("edge"),
                        format!("edge {:?} listed twice", row.edge),
                    ));
                }
                edge[e.index()] = Some(image);
                cocycle[e.index()] = Some(value);
            }
            let missing: Vec<&str> = graph
                .edges()
                .filter(|e| edge[e.index()].is_none())
                .map(|e| graph.edge_name(e))
                .collect();
            if !missing.is_empty() {
                return Err(field(
                    at("edges"),
                    format!("missing rows for edges {missing:?}"),
                ));
            }
            tables.push(GeneratorTable {
                vertex,
                edge: edge.into_iter().map(Option::unwrap).collect(),
                cocycle: cocycle.into_iter().map(Option::unwrap).collect(),
            });
        }
        for (k, t) in self.table.iter().enumerate() {
            if !(0..group.generator_count()).any(|i| group.generator_name(i) == t.generator) {
                return Err(field(
                    format!("table[{k}].generator"),
                    format!("unknown generator {:?}", t.generator),
                ));
            }
        }
        SelfSimilarAction::new(graph, group, tables).map_err(|e| field("table", e.to_string()))
    }

    /// The file contents describing an existing action.
    pub fn from_action<G: Group>(
        name: &str,
        action: &SelfSimilarAction<G>,
        group: GroupSpec,
    ) -> ActionSpec {
        let graph = action.graph();
        let grp = action.group();
        let table = (0..grp.generator_count())
            .map(|i| {
                let g = grp.generator(i);
                let vertices = graph
                    .vertices()
                    .filter(|&v| action.act_vertex(&g, v) != v)
                    .map(|v| {
                        (
                            graph.vertex_name(v).to_owned(),
                            graph.vertex_name(action.act_vertex(&g, v)).to_owned(),
                        )
                    })
                    .collect();
                let edges = graph
                    .edges()
                    .map(|e| {
                        let (image, phi) = action.act_edge(&g, e);
                        EdgeRow {
                            edge: graph.edge_name(e).to_owned(),
                            image: graph.edge_name(image).to_owned(),
                            cocycle: grp.render(&phi),
                        }
                    })
                    .collect();
                TableSpec {
                    generator: grp.generator_name(i).to_owned(),
                    vertices,
                    edges,
                }
            })
            .collect();
        ActionSpec {
            name: name.to_owned(),
            description: None,
            graph: graph.to_spec(),
            group,
            table,
            expect: None,
        }
    }
}
