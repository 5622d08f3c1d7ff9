//! JSON forms of graphs, graph pairs, vertex sets, edge vectors and boundary
//! reports.
//!
//! Graphs: `{"vertices": N, "edges": [[u,v],...], "labels": [[x1,...,xd],...]}`
//! with `labels` optional. Pairs: `{"g": <graph>, "extra_plus_edges": [[u,v],...]}`.
//! Vertices render as their coordinate tuple when labelled, else as the id.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::boundary::BoundaryReport;
use crate::cycle_space::EdgeVector;
use crate::error::{input, Error, Result};
use crate::graph::{Coord, Graph, GraphPair, VertexSet};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Coord>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub g: GraphJson,
    #[serde(default)]
    pub extra_plus_edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels_cloned(),
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        let g = Graph::new(self.vertices, self.edges.into_iter().map(|[u, v]| (u, v)))?;
        match self.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Input(format!("malformed JSON: {e}"))
}

pub fn graph_from_str(s: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(s)
        .map_err(parse_err)?
        .into_graph()
}

pub fn graph_to_string(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("graph serializes")
}

pub fn pair_from_str(s: &str) -> Result<GraphPair> {
    let raw: PairJson = serde_json::from_str(s).map_err(parse_err)?;
    let g = raw.g.into_graph()?;
    let plus = g.with_extra_edges(raw.extra_plus_edges.into_iter().map(|[u, v]| (u, v)))?;
    GraphPair::new(g, plus)
}

pub fn pair_to_string(pair: &GraphPair) -> String {
    let raw = PairJson {
        g: GraphJson::from_graph(pair.g()),
        extra_plus_edges: pair
            .extra_edges()
            .into_iter()
            .map(|(u, v)| [u, v])
            .collect(),
    };
    serde_json::to_string(&raw).expect("pair serializes")
}

pub fn vertex_value(g: &Graph, v: usize) -> Value {
    match g.label(v) {
        Some(c) => json!(c),
        None => json!(v),
    }
}

pub fn set_value(g: &Graph, s: &VertexSet) -> Value {
    Value::Array(s.iter().map(|v| vertex_value(g, v)).collect())
}

/// Accepts an id or a coordinate tuple.
pub fn parse_vertex(g: &Graph, v: &Value) -> Result<usize> {
    match v {
        Value::Number(n) => {
            let id = n
                .as_u64()
                .ok_or_else(|| Error::Input(format!("bad vertex id {n}")))?
                as usize;
            g.check_vertex(id)?;
            Ok(id)
        }
        Value::Array(items) => {
            let coord: Option<Coord> = items
                .iter()
                .map(|c| c.as_i64().and_then(|c| i32::try_from(c).ok()))
                .collect();
            let coord = coord.ok_or_else(|| Error::Input(format!("bad coordinate {v}")))?;
            g.vertex_at(&coord)
                .ok_or_else(|| Error::Input(format!("no vertex at {v}")))
        }
        other => input(format!("expected a vertex id or coordinate, got {other}")),
    }
}

pub fn parse_set(g: &Graph, v: &Value) -> Result<VertexSet> {
    let Value::Array(items) = v else {
        return input("expected a JSON array of vertices");
    };
    let ids = items
        .iter()
        .map(|item| parse_vertex(g, item))
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_ids(g.vertex_count(), ids)
}

pub fn parse_set_str(g: &Graph, s: &str) -> Result<VertexSet> {
    parse_set(g, &serde_json::from_str(s).map_err(parse_err)?)
}

/// Sorted list of `[u, v]` endpoint pairs.
pub fn edge_vector_value(e: &EdgeVector) -> Value {
    Value::Array(
        e.edge_pairs()
            .into_iter()
            .map(|(u, v)| json!([u, v]))
            .collect(),
    )
}

pub fn report_value(g: &Graph, r: &BoundaryReport) -> Value {
    let mut out = json!({
        "boundary": set_value(g, &r.boundary),
        "visible": set_value(g, &r.visible),
        "outer_visible": set_value(g, &r.outer_visible),
        "components": r.component_count,
    });
    if let Some((a, b)) = r.witness_disconnect {
        out["witness"] = json!([vertex_value(g, a), vertex_value(g, b)]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_box, BoxSpec};

    #[test]
    fn graph_round_trip() {
        let g = build_box(&"z2:3:plus".parse::<BoxSpec>().unwrap()).unwrap();
        let back = graph_from_str(&graph_to_string(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn pair_format() {
        let pair = pair_from_str(
            r#"{"g": {"vertices": 3, "edges": [[0,1],[1,2]]}, "extra_plus_edges": [[0,2]]}"#,
        )
        .unwrap();
        assert_eq!(pair.g().edge_count(), 2);
        assert_eq!(pair.g_plus().edge_count(), 3);
        let again = pair_from_str(&pair_to_string(&pair)).unwrap();
        assert_eq!(again.extra_edges(), vec![(0, 2)]);
    }

    #[test]
    fn malformed_inputs() {
        assert!(graph_from_str("{").is_err());
        assert!(graph_from_str(r#"{"vertices": 2, "edges": [[0,5]]}"#).is_err());
        assert!(graph_from_str(r#"{"vertices": 2, "edges": [], "colour": 1}"#).is_err());
        let g = build_box(&"z2:3".parse::<BoxSpec>().unwrap()).unwrap();
        assert!(parse_set_str(&g, "[[9,9]]").is_err());
        assert!(parse_set_str(&g, r#"["a"]"#).is_err());
        assert_eq!(
            parse_set_str(&g, "[[2,2], 0]").unwrap().to_vec(),
            vec![0, 4]
        );
    }
}
