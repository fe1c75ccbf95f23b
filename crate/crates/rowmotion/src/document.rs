//! JSON documents describing posets.
//!
//! Schema:
//!
//! ```json
//! {
//!   "name": "tetrahedral_4",
//!   "dimension": 2,
//!   "elements": [{"id": "a", "coords": [1, 3]}, ...],
//!   "covers": [["a", "d"], ...],
//!   "notes": ["optional free text"]
//! }
//! ```
//!
//! Coordinates are 1-based. The listed relations may be any generating set of
//! the order; covers are recomputed as the transitive reduction on load, and
//! the projection is re-validated, since user files are untrusted.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{CoordVector, RankedPoset};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetDocument {
    pub name: String,
    pub dimension: usize,
    pub elements: Vec<ElementDocument>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ElementDocument {
    pub id: String,
    pub coords: Vec<i64>,
}

impl PosetDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn into_poset(self) -> Result<RankedPoset> {
        let mut labels = Vec::with_capacity(self.elements.len());
        let mut coords = Vec::with_capacity(self.elements.len());
        for el in &self.elements {
            if el.coords.len() != self.dimension {
                return Err(Error::Schema {
                    message: format!(
                        "coordinates have length {} but document dimension is {}",
                        el.coords.len(),
                        self.dimension
                    ),
                    offenders: vec![el.id.clone()],
                });
            }
            labels.push(el.id.clone());
            coords.push(CoordVector::new(el.coords.clone()).map_err(|e| Error::Schema {
                message: e.to_string(),
                offenders: vec![el.id.clone()],
            })?);
        }
        let mut relations = Vec::with_capacity(self.covers.len());
        for (lo, hi) in &self.covers {
            let lo_idx = labels.iter().position(|l| l == lo).ok_or_else(|| Error::Schema {
                message: "cover references unknown element".into(),
                offenders: vec![lo.clone()],
            })?;
            let hi_idx = labels.iter().position(|l| l == hi).ok_or_else(|| Error::Schema {
                message: "cover references unknown element".into(),
                offenders: vec![hi.clone()],
            })?;
            relations.push((lo_idx, hi_idx));
        }
        RankedPoset::from_parts(self.name, labels, coords, &relations, None)
    }
}

pub fn load_poset(text: &str) -> Result<RankedPoset> {
    PosetDocument::from_json(text)?.into_poset()
}

pub fn load_poset_file(path: impl AsRef<Path>) -> Result<RankedPoset> {
    let text = std::fs::read_to_string(path)?;
    load_poset(&text)
}

/// Serializes a poset back into document form (covers only).
pub fn to_document(p: &RankedPoset) -> PosetDocument {
    PosetDocument {
        name: p.name().to_string(),
        dimension: p.dimension(),
        elements: (0..p.len())
            .map(|e| ElementDocument {
                id: p.label(e).to_string(),
                coords: p.coords(e).entries().to_vec(),
            })
            .collect(),
        covers: p
            .covers()
            .iter()
            .map(|&(lo, hi)| {
                (
                    p.label(lo as usize).to_string(),
                    p.label(hi as usize).to_string(),
                )
            })
            .collect(),
        notes: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_two_cycle() {
        let doc = r#"{
            "name": "bad",
            "dimension": 1,
            "elements": [{"id": "x", "coords": [1]}, {"id": "y", "coords": [2]}],
            "covers": [["x", "y"], ["y", "x"]]
        }"#;
        match load_poset(doc) {
            Err(Error::Schema { message, .. }) => assert!(message.contains("cyclic")),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_rank_breaking_projection() {
        // A cover that jumps two ranks at once.
        let doc = r#"{
            "name": "bad",
            "dimension": 1,
            "elements": [{"id": "x", "coords": [1]}, {"id": "y", "coords": [3]}],
            "covers": [["x", "y"]]
        }"#;
        match load_poset(doc) {
            Err(Error::Schema { message, offenders }) => {
                assert!(message.contains("order and rank preserving"));
                assert_eq!(offenders, vec!["x".to_string(), "y".to_string()]);
            }
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn chain_document_matches_builder() {
        let doc = r#"{
            "name": "grid",
            "dimension": 2,
            "elements": [
                {"id": "a", "coords": [1, 1]},
                {"id": "b", "coords": [1, 2]},
                {"id": "c", "coords": [1, 3]},
                {"id": "d", "coords": [2, 1]},
                {"id": "e", "coords": [2, 2]},
                {"id": "f", "coords": [2, 3]}
            ],
            "covers": [
                ["a", "b"], ["b", "c"], ["d", "e"], ["e", "f"],
                ["a", "d"], ["b", "e"], ["c", "f"]
            ]
        }"#;
        let loaded = load_poset(doc).unwrap();
        let built = RankedPoset::chain_product(&[2, 3]).unwrap();
        assert_eq!(loaded.len(), built.len());
        // Order-isomorphic: coordinates identify elements here, so match on
        // projected covers.
        let describe = |p: &RankedPoset| {
            let mut v: Vec<(Vec<i64>, Vec<i64>)> = p
                .covers()
                .iter()
                .map(|&(lo, hi)| {
                    (
                        p.coords(lo as usize).entries().to_vec(),
                        p.coords(hi as usize).entries().to_vec(),
                    )
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(describe(&loaded), describe(&built));
    }

    #[test]
    fn redundant_relations_are_reduced() {
        let doc = r#"{
            "name": "chain3",
            "dimension": 1,
            "elements": [
                {"id": "a", "coords": [1]},
                {"id": "b", "coords": [2]},
                {"id": "c", "coords": [3]}
            ],
            "covers": [["a", "b"], ["b", "c"], ["a", "c"]]
        }"#;
        let p = load_poset(doc).unwrap();
        assert_eq!(p.covers().len(), 2);
    }

    #[test]
    fn round_trip_through_document() {
        let p = RankedPoset::type_b_minuscule(3).unwrap();
        let doc = to_document(&p);
        let again = doc.into_poset().unwrap();
        assert_eq!(p.covers(), again.covers());
        assert_eq!(p.len(), again.len());
    }
}
