//! Materialized views of `T_m^n` for external tools.
//!
//! Every undirected edge is written once, smaller endpoint first, edges in
//! ascending order, so identical instances always produce identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::routing::ParamsJson;
use crate::simplex::{self, GraphParams, Vertex};

/// All edges `(a, b)` with `a < b`, sorted.
pub fn edge_list(params: GraphParams) -> Vec<(Vertex, Vertex)> {
    let mut edges: Vec<(Vertex, Vertex)> = simplex::enumerate_vertices(params)
        .into_iter()
        .flat_map(|a| {
            simplex::neighbors(&a)
                .into_iter()
                .filter(|b| *b > a)
                .map(|b| (a.clone(), b))
                .collect::<Vec<_>>()
        })
        .collect();
    edges.sort();
    edges
}

/// `graph T { "a" -- "b"; ... }`
pub fn to_dot(params: GraphParams) -> String {
    let mut out = String::from("graph T {\n");
    for (a, b) in edge_list(params) {
        writeln!(out, "  \"{a}\" -- \"{b}\";").expect("write to String");
    }
    out.push_str("}\n");
    out
}

/// One edge per line, endpoints separated by a space.
pub fn to_edge_lines(params: GraphParams) -> String {
    edge_list(params).into_iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}

#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub params: ParamsJson,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
}

pub fn to_json(params: GraphParams) -> GraphJson {
    GraphJson {
        params: ParamsJson { n: params.n, m: params.m },
        vertices: simplex::enumerate_vertices(params),
        edges: edge_list(params),
    }
}
