//! Graph file format.
//!
//! ```text
//! # comment
//! E e1 e2 e3
//! V v1 v2
//! + e1 v1        # positive edge, id = ordinal of the edge line
//! - e2 v1 7      # negative edge with explicit id 7
//! R v1: 1 7      # optional rotation (counterclockwise edge ids)
//! ```
//!
//! A JSON document with the same content is accepted as well.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Color, EdgeId, PlaneEmbedding, SignedBipartiteGraph, Sign};
use crate::error::{Error, ParseError, Result};

/// A parsed graph file: the graph plus an optional rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: SignedBipartiteGraph,
    pub embedding: Option<PlaneEmbedding>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: EdgeId,
    pub e: String,
    pub v: String,
    pub sign: i8,
}

/// JSON form of a graph file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default = "format_one")]
    pub format: u32,
    #[serde(rename = "E")]
    pub e: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
    pub edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<BTreeMap<String, Vec<EdgeId>>>,
}

fn format_one() -> u32 {
    1
}

impl GraphJson {
    pub fn from_graph(g: &SignedBipartiteGraph, emb: Option<&PlaneEmbedding>) -> Self {
        Self {
            format: 1,
            e: g.e_vertices().map(str::to_string).collect(),
            v: g.v_vertices().map(str::to_string).collect(),
            edges: g
                .edges()
                .map(|e| EdgeJson { id: e.id, e: e.e.clone(), v: e.v.clone(), sign: e.sign.as_i8() })
                .collect(),
            rotation: emb.map(|r| r.rotation.clone()),
        }
    }

    pub fn into_graph_file(self) -> Result<GraphFile> {
        let mut g = SignedBipartiteGraph::new();
        for l in &self.e {
            g.add_vertex(Color::E, l)?;
        }
        for l in &self.v {
            g.add_vertex(Color::V, l)?;
        }
        for e in &self.edges {
            let sign = match e.sign {
                1 => Sign::Positive,
                -1 => Sign::Negative,
                s => return Err(ParseError::new(0, 0, format!("edge {}: sign must be 1 or -1, got {s}", e.id)).into()),
            };
            g.add_edge(e.id, &e.e, &e.v, sign)?;
        }
        let embedding = self.rotation.map(PlaneEmbedding::new);
        if let Some(emb) = &embedding {
            emb.check_consistent(&g)?;
        }
        Ok(GraphFile { graph: g, embedding })
    }
}

/// Splits a line into `(1-based column, token)` pairs, dropping comments.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses the text or JSON graph format.
pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    if text.trim_start().starts_with('{') {
        let json: GraphJson = serde_json::from_str(text)
            .map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
        return json.into_graph_file();
    }

    let lines: Vec<(usize, Vec<(usize, &str)>)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, tokens(l))).filter(|(_, t)| !t.is_empty()).collect();

    let mut g = SignedBipartiteGraph::new();
    for (ln, toks) in &lines {
        let color = match toks[0].1 {
            "E" => Color::E,
            "V" => Color::V,
            "+" | "-" | "R" => continue,
            other => return Err(ParseError::new(*ln, toks[0].0, format!("unknown declaration `{other}`")).into()),
        };
        for &(col, label) in &toks[1..] {
            g.add_vertex(color, label)
                .map_err(|_| ParseError::new(*ln, col, format!("duplicate vertex label `{label}`")))?;
        }
    }

    let mut ordinal = 0u32;
    let mut rotation_lines = Vec::new();
    for (ln, toks) in &lines {
        let sign = match toks[0].1 {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            "R" => {
                rotation_lines.push((*ln, toks));
                continue;
            }
            _ => continue,
        };
        ordinal += 1;
        if toks.len() != 3 && toks.len() != 4 {
            return Err(ParseError::new(*ln, toks[0].0, "edge line needs two endpoints and an optional id").into());
        }
        for &(col, label) in &toks[1..3] {
            if !g.contains(label) {
                return Err(ParseError::new(*ln, col, format!("undeclared vertex `{label}`")).into());
            }
        }
        let id = match toks.get(3) {
            Some(&(col, raw)) => {
                EdgeId(raw.parse().map_err(|_| ParseError::new(*ln, col, format!("invalid edge id `{raw}`")))?)
            }
            None => EdgeId(ordinal),
        };
        g.add_edge(id, toks[1].1, toks[2].1, sign).map_err(|e| {
            let col = if matches!(e, Error::DuplicateEdge(_)) { toks.get(3).map_or(toks[0].0, |t| t.0) } else { toks[2].0 };
            ParseError::new(*ln, col, e.to_string())
        })?;
    }

    let embedding = if rotation_lines.is_empty() {
        None
    } else {
        let mut rotation = BTreeMap::new();
        for (ln, toks) in rotation_lines {
            let Some(&(col, raw_label)) = toks.get(1) else {
                return Err(ParseError::new(ln, toks[0].0, "rotation line needs a vertex label").into());
            };
            let label = raw_label.trim_end_matches(':');
            if !g.contains(label) {
                return Err(ParseError::new(ln, col, format!("rotation for undeclared vertex `{label}`")).into());
            }
            let mut ids = Vec::new();
            for &(col, raw) in &toks[2..] {
                let raw = raw.trim_start_matches(':');
                if raw.is_empty() {
                    continue;
                }
                let id = EdgeId(raw.parse().map_err(|_| ParseError::new(ln, col, format!("invalid edge id `{raw}`")))?);
                if !g.edge(id).is_some_and(|e| e.touches(label)) {
                    return Err(ParseError::new(ln, col, format!("edge {id} is not incident to `{label}`")).into());
                }
                ids.push(id);
            }
            let unique: BTreeSet<_> = ids.iter().collect();
            if unique.len() != ids.len() {
                return Err(ParseError::new(ln, col, format!("edge repeated in rotation at `{label}`")).into());
            }
            if rotation.insert(label.to_string(), ids).is_some() {
                return Err(ParseError::new(ln, col, format!("second rotation for `{label}`")).into());
            }
        }
        let emb = PlaneEmbedding::new(rotation);
        emb.check_consistent(&g).map_err(|e| ParseError::new(0, 0, e.to_string()))?;
        Some(emb)
    };

    Ok(GraphFile { graph: g, embedding })
}

impl SignedBipartiteGraph {
    /// Text form with explicit edge ids.
    pub fn to_text(&self, emb: Option<&PlaneEmbedding>) -> String {
        let mut out = String::new();
        let line = |tag: &str, labels: Vec<&str>| {
            if labels.is_empty() {
                String::new()
            } else {
                format!("{tag} {}\n", labels.join(" "))
            }
        };
        out += &line("E", self.e_vertices().collect());
        out += &line("V", self.v_vertices().collect());
        for e in self.edges() {
            out += &format!("{} {} {} {}\n", e.sign.symbol(), e.e, e.v, e.id);
        }
        if let Some(emb) = emb {
            for (label, ids) in &emb.rotation {
                let ids: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
                out += &format!("R {label}: {}\n", ids.join(" "));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const TABLE1: &str = "\
# hexagon with a negative hub
E e1 e2 e3 e4
V v1 v2 v3
+ e1 v1
+ e2 v1
+ e2 v2
+ e3 v2
+ e3 v3
+ e1 v3
- e4 v1
- e4 v2
- e4 v3
";

    #[test]
    fn parses_table_graph() {
        let f = parse_graph_file(TABLE1).unwrap();
        assert_eq!(f.graph, fixtures::table1());
        assert_eq!(f.embedding, None);
    }

    #[test]
    fn declarations_may_follow_edges() {
        let (decls, edges): (Vec<&str>, Vec<&str>) =
            TABLE1.lines().partition(|l| l.starts_with('E') || l.starts_with('V'));
        let moved = format!("{}\n{}\n", edges.join("\n"), decls.join("\n"));
        assert_eq!(parse_graph_file(&moved).unwrap().graph, fixtures::table1());
    }

    #[test]
    fn round_trips_text_and_json() {
        let (g, emb) = fixtures::table1_plane();
        let text = g.to_text(Some(&emb));
        let back = parse_graph_file(&text).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.embedding.as_ref(), Some(&emb));
        let json = serde_json::to_string(&GraphJson::from_graph(&g, Some(&emb))).unwrap();
        let back = parse_graph_file(&json).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.embedding, Some(emb));
    }

    fn err(text: &str) -> ParseError {
        match parse_graph_file(text) {
            Err(Error::Parse(p)) => p,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicate_labels_with_position() {
        let e = err("E a b\nV c a\n");
        assert_eq!((e.line, e.column), (2, 5));
    }

    #[test]
    fn rejects_dangling_endpoints_with_position() {
        let e = err("E a\nV b\n+ a b\n- a zz\n");
        assert_eq!((e.line, e.column), (4, 5));
        assert!(e.message.contains("zz"));
    }

    #[test]
    fn rejects_same_color_edge_and_bad_rotation() {
        let e = err("E a b\nV c\n+ a b\n");
        assert_eq!(e.line, 3);
        let e = err("E a\nV c\n+ a c\nR a: 2\n");
        assert_eq!((e.line, e.column), (4, 6));
        let e = err("E a\nV c\nQ a\n");
        assert_eq!((e.line, e.column), (3, 1));
    }
}
