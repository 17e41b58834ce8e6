//! Poset file format and exporters.
//!
//! The on-disk form is a JSON object with keys `elements` (array of id
//! strings), `covers` (array of `[lower, upper]` pairs) and `rank` (object
//! id -> integer); bottom and top are inferred. The canonical serialization
//! sorts elements and covers, so export -> import -> export is
//! byte-identical.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::{Poset, PosetError, WeakRank};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed poset file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Serialize, Deserialize)]
struct PosetFile {
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    rank: BTreeMap<String, u64>,
}

pub fn parse_poset_json(text: &str) -> Result<(Poset, WeakRank), IoError> {
    let file: PosetFile = serde_json::from_str(text)?;
    let poset = Poset::build(file.elements, &file.covers)?;
    let map: HashMap<String, u64> = file.rank.into_iter().collect();
    let rank = WeakRank::from_id_map(&poset, &map)?;
    Ok((poset, rank))
}

/// Canonical JSON: elements sorted, covers sorted by id pair, rank keys
/// sorted, two-space indentation, trailing newline.
pub fn to_canonical_json(poset: &Poset, rank: &WeakRank) -> String {
    let mut elements: Vec<String> = poset.ids().to_vec();
    elements.sort();
    let mut covers: Vec<(String, String)> = poset
        .covers()
        .iter()
        .map(|&(l, h)| (poset.id(l).to_string(), poset.id(h).to_string()))
        .collect();
    covers.sort();
    let rank_map: BTreeMap<String, u64> = (0..poset.len())
        .map(|x| (poset.id(x).to_string(), rank.of(x)))
        .collect();
    let file = PosetFile {
        elements,
        covers,
        rank: rank_map,
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

/// DOT rendering of the Hasse diagram, one node per element labeled
/// `name:rank`, one edge per cover, drawn upward.
pub fn to_dot(poset: &Poset, rank: &WeakRank) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    let quote = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
    for x in 0..poset.len() {
        out.push_str(&format!(
            "  \"{}\" [label=\"{}:{}\"];\n",
            quote(poset.id(x)),
            quote(poset.id(x)),
            rank.of(x)
        ));
    }
    for &(l, h) in poset.covers() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            quote(poset.id(l)),
            quote(poset.id(h))
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIAMOND: &str = r#"{
        "elements": ["0", "a", "b", "1"],
        "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
        "rank": {"0": 0, "a": 1, "b": 1, "1": 2}
    }"#;

    #[test]
    fn parse_and_roundtrip() {
        let (p, r) = parse_poset_json(DIAMOND).unwrap();
        assert_eq!(p.len(), 4);
        assert!(r.validate(&p).is_valid());
        let canon = to_canonical_json(&p, &r);
        let (p2, r2) = parse_poset_json(&canon).unwrap();
        let canon2 = to_canonical_json(&p2, &r2);
        assert_eq!(canon, canon2);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_poset_json("{").is_err());
        let missing_rank = r#"{"elements": ["0", "1"], "covers": [["0", "1"]], "rank": {"0": 0}}"#;
        assert!(matches!(
            parse_poset_json(missing_rank),
            Err(IoError::Poset(PosetError::MissingRank(_)))
        ));
    }

    #[test]
    fn dot_contains_nodes_and_edges() {
        let (p, r) = parse_poset_json(DIAMOND).unwrap();
        let dot = to_dot(&p, &r);
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("\"a\" [label=\"a:1\"]"));
        assert!(dot.contains("\"0\" -> \"a\";"));
    }
}
