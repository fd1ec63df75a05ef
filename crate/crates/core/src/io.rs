//! File formats: graph JSON, edge-list text, coloring JSON, grid JSON, DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::PatternGrid;
use crate::products::ProductKind;

/// Factor orders recorded on product outputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codec {
    pub kind: ProductKind,
    /// `[|V(G)|, |V(H)|]`.
    pub orders: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub codec: Option<Codec>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, codec: Option<Codec>) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            codec,
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &edges)
    }
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

pub fn graph_to_json(g: &Graph, codec: Option<Codec>) -> String {
    serde_json::to_string(&GraphDocument::from_graph(g, codec)).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphDocument>(text)
        .map_err(parse_err)?
        .to_graph()
}

#[derive(Serialize, Deserialize)]
struct ColoringDocument {
    colors: Vec<u32>,
}

pub fn coloring_to_json(c: &Coloring) -> String {
    serde_json::to_string(&ColoringDocument {
        colors: c.colors().to_vec(),
    })
    .expect("coloring serializes")
}

pub fn coloring_from_json(text: &str) -> Result<Coloring> {
    let doc: ColoringDocument = serde_json::from_str(text).map_err(parse_err)?;
    Coloring::new(doc.colors)
}

pub fn grid_to_json(grid: &PatternGrid) -> String {
    serde_json::to_string(grid).expect("grid serializes")
}

pub fn grid_from_json(text: &str) -> Result<PatternGrid> {
    let raw: PatternGrid = serde_json::from_str(text).map_err(parse_err)?;
    let grid = PatternGrid::new(raw.cells, raw.target)?;
    if (grid.rows, grid.cols) != (raw.rows, raw.cols) {
        return Err(Error::Parse(format!(
            "declared {}x{} but cells are {}x{}",
            raw.rows, raw.cols, grid.rows, grid.cols
        )));
    }
    Ok(grid)
}

/// First line `n m`, then `m` lines `u v`.
pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("write to string");
    }
    out
}

pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let pair = |line: &str| -> Result<(usize, usize)> {
        let mut it = line
            .split_whitespace()
            .map(|x| x.parse::<usize>().map_err(parse_err));
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => Ok((a?, b?)),
            _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
        }
    };
    let (n, m) = pair(
        lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?,
    )?;
    let edges = lines.map(pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

/// Undirected DOT; with a coloring, each node carries a `color` label and a
/// `colorscheme` fill for colors up to 12.
pub fn to_dot(g: &Graph, coloring: Option<&Coloring>) -> Result<String> {
    if let Some(c) = coloring {
        if c.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                actual: c.len(),
            });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match coloring {
            Some(c) => {
                let k = c.color(v);
                let fill = if k <= 12 {
                    format!(", style=filled, colorscheme=set312, fillcolor={k}")
                } else {
                    String::new()
                };
                writeln!(out, "  {v} [label=\"{v}:{k}\"{fill}];").expect("write to string");
            }
            None => writeln!(out, "  {v};").expect("write to string"),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("write to string");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::patterns::{builtin, BuiltinPattern};

    #[test]
    fn graph_json_round_trip() {
        let g = cycle(5);
        let text = graph_to_json(&g, None);
        assert_eq!(text, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        assert_eq!(graph_from_json(&text).unwrap(), g);
    }

    #[test]
    fn codec_is_embedded() {
        let codec = Codec {
            kind: ProductKind::Direct,
            orders: [2, 3],
        };
        let text = graph_to_json(&path(2), Some(codec.clone()));
        let doc: GraphDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(doc.codec, Some(codec));
    }

    #[test]
    fn parsers_reject_bad_graphs() {
        assert!(graph_from_json(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).is_err());
        assert!(graph_from_json(r#"{"n":3,"edges":[[1,1]]}"#).is_err());
        assert!(graph_from_json(r#"{"n":3,"edges":[[0,3]]}"#).is_err());
        assert!(graph_from_json("not json").is_err());
        assert!(graph_from_edge_list("3 1\n0 0\n").is_err());
        assert!(graph_from_edge_list("3 2\n0 1\n").is_err());
        assert!(graph_from_edge_list("3 2\n0 1\n0 1\n").is_err());
        assert!(graph_from_edge_list("2 1\n0 2\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(4);
        let text = graph_to_edge_list(&g);
        assert!(text.starts_with("4 4\n"));
        assert_eq!(graph_from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn coloring_json() {
        let c = coloring_from_json(r#"{"colors":[1,2,1]}"#).unwrap();
        assert_eq!(coloring_to_json(&c), r#"{"colors":[1,2,1]}"#);
        assert!(coloring_from_json(r#"{"colors":[0,1]}"#).is_err());
    }

    #[test]
    fn grid_json_round_trip() {
        let a = builtin(BuiltinPattern::A).unwrap();
        assert_eq!(grid_from_json(&grid_to_json(&a)).unwrap(), a);
        assert!(grid_from_json(r#"{"rows":2,"cols":1,"cells":[[1]]}"#).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&path(2), None).unwrap();
        assert!(dot.contains("0 -- 1;"));
        let c = Coloring::new(vec![1, 2]).unwrap();
        assert!(to_dot(&path(2), Some(&c))
            .unwrap()
            .contains("label=\"1:2\""));
        assert!(to_dot(&path(3), Some(&c)).is_err());
    }
}
