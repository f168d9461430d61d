//! On-disk encodings.
//!
//! JSON: `{"n":<int>,"r":<int|null>,"edges":[[...],...]}` with sorted edges in
//! lexicographic order, no whitespace.
//!
//! Text: a header line `n r m` (with `-` for an absent uniformity tag)
//! followed by `m` lines of space-separated vertex ids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    n: usize,
    r: Option<usize>,
    edges: Vec<Vec<u32>>,
}

pub fn to_json(h: &Hypergraph) -> String {
    let wire = Wire { n: h.n(), r: h.r(), edges: h.edges().to_vec() };
    serde_json::to_string(&wire).expect("plain integers always serialize")
}

pub fn from_json(text: &str) -> Result<Hypergraph> {
    let wire: Wire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Hypergraph::build(wire.n, wire.r, wire.edges)
}

pub fn to_text(h: &Hypergraph) -> String {
    let r = h.r().map_or_else(|| "-".to_string(), |r| r.to_string());
    let mut out = format!("{} {} {}\n", h.n(), r, h.edge_count());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn from_text(text: &str) -> Result<Hypergraph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse(format!("header must be `n r m`, got `{header}`")));
    }
    let n: usize = parse_int(fields[0], "n")?;
    let r = match fields[1] {
        "-" => None,
        s => Some(parse_int(s, "r")?),
    };
    let m: usize = parse_int(fields[2], "m")?;
    let mut edges = Vec::with_capacity(m);
    for (index, line) in lines.enumerate() {
        let edge = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::InvalidEdge { index, reason: format!("`{tok}` is not a vertex id") })
            })
            .collect::<Result<Vec<u32>>>()?;
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Hypergraph::build(n, r, edges)
}

fn parse_int(s: &str, name: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("header field {name} = `{s}` is not an integer")))
}

/// Parses either encoding, picking JSON when the first non-blank byte is `{`.
pub fn parse_any(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triangle() -> Hypergraph {
        Hypergraph::uniform(3, 2, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    #[test]
    fn triangle_json_is_canonical() {
        assert_eq!(to_json(&triangle()), r#"{"n":3,"r":2,"edges":[[0,1],[0,2],[1,2]]}"#);
        let untagged = Hypergraph::new(2, vec![vec![1]]).unwrap();
        assert_eq!(to_json(&untagged), r#"{"n":2,"r":null,"edges":[[1]]}"#);
    }

    #[test]
    fn json_errors() {
        let dup = from_json(r#"{"n":3,"r":2,"edges":[[0,1],[0,1]]}"#);
        assert!(matches!(dup, Err(Error::DuplicateEdge { index: 1 })));
        let range = from_json(r#"{"n":3,"r":2,"edges":[[0,1],[0,3]]}"#);
        assert!(matches!(range, Err(Error::InvalidEdge { index: 1, .. })));
        assert!(matches!(from_json("{\"n\":3"), Err(Error::Parse(_))));
        assert!(matches!(from_json(r#"{"n":-1,"r":2,"edges":[]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn text_format() {
        let t = triangle();
        let text = to_text(&t);
        assert_eq!(text, "3 2 3\n0 1\n0 2\n1 2\n");
        assert_eq!(from_text(&text).unwrap(), t);
        assert_eq!(parse_any(&text).unwrap(), t);
        assert_eq!(parse_any(&to_json(&t)).unwrap(), t);
        let untagged = Hypergraph::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap();
        assert_eq!(from_text(&to_text(&untagged)).unwrap(), untagged);
        assert!(matches!(from_text("3 2 2\n0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(from_text("3 2 1\n0 x\n"), Err(Error::InvalidEdge { index: 0, .. })));
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..12)
            .prop_flat_map(|n| {
                let edge = proptest::collection::btree_set(0..n as u32, 1..=n)
                    .prop_map(|s| s.into_iter().collect::<Vec<u32>>());
                (Just(n), proptest::collection::btree_set(edge, 0..12))
            })
            .prop_map(|(n, edges)| Hypergraph::new(n, edges.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn json_and_text_round_trip(h in arb_hypergraph()) {
            prop_assert_eq!(from_json(&to_json(&h)).unwrap(), h.clone());
            prop_assert_eq!(from_text(&to_text(&h)).unwrap(), h);
        }
    }
}
