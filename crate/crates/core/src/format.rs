//! JSON input format.
//!
//! ```json
//! {"alphabet": ["a","b"], "states": ["x","y"],
//!  "transitions": {"x": {"stop": "1/3", "moves": [{"letter":"a","to":"y","p":"1/6"}]}}}
//! ```
//!
//! Rationals are strings, `"p/q"` or integers. `"stop"` defaults to `"0"`
//! and `"moves"` to the empty list. A state missing from `"transitions"`
//! has no mass at all, which validation reports as a sum violation.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, IdentKind, Result};
use crate::pts::{Pts, PtsBuilder};
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    alphabet: Vec<String>,
    states: Vec<String>,
    transitions: Transitions,
}

#[derive(Debug, Default)]
struct Transitions(Vec<(String, Entry)>);

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    stop: Option<String>,
    #[serde(default)]
    moves: Vec<MoveDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveDoc {
    letter: String,
    to: String,
    p: String,
}

impl Serialize for Transitions {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.0.len()))?;
        for (state, entry) in &self.0 {
            map.serialize_entry(state, entry)?;
        }
        map.end()
    }
}

// Keeps document order and lets duplicate keys through to `to_builder`,
// which reports them as duplicate identifiers.
impl<'de> Deserialize<'de> for Transitions {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = Transitions;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping states to transition entries")
            }

            fn visit_map<M: MapAccess<'de>>(
                self,
                mut access: M,
            ) -> std::result::Result<Self::Value, M::Error> {
                let mut entries = Vec::new();
                while let Some(pair) = access.next_entry::<String, Entry>()? {
                    entries.push(pair);
                }
                Ok(Transitions(entries))
            }
        }

        de.deserialize_map(EntriesVisitor)
    }
}

impl Document {
    fn to_builder(&self) -> Result<PtsBuilder> {
        let mut builder = PtsBuilder::new(self.alphabet.clone(), self.states.clone());
        let mut seen = std::collections::HashSet::new();
        for (state, entry) in &self.transitions.0 {
            if !seen.insert(state.as_str()) {
                return Err(Error::DuplicateIdentifier {
                    kind: IdentKind::State,
                    name: state.clone(),
                });
            }
            if !self.states.contains(state) {
                return Err(Error::UnknownIdentifier {
                    kind: IdentKind::State,
                    name: state.clone(),
                });
            }
            let stop = entry.stop.as_deref().unwrap_or("0");
            builder.stop(state, parse_rational(stop)?);
            for m in &entry.moves {
                builder.edge(state, &m.letter, &m.to, parse_rational(&m.p)?);
            }
        }
        Ok(builder)
    }
}

/// Parses and validates a document. The first violated invariant is the error.
pub fn parse_pts(text: &str) -> Result<Pts> {
    let doc: Document = serde_json::from_str(text)?;
    doc.to_builder()?.build()
}

/// Parses a document with structural checks only, for callers that want
/// the full violation list from [`Pts::validate`].
pub fn parse_pts_unchecked(text: &str) -> Result<Pts> {
    let doc: Document = serde_json::from_str(text)?;
    doc.to_builder()?.build_unchecked()
}

pub fn to_json(pts: &Pts) -> String {
    let transitions = pts
        .state_ids()
        .map(|s| {
            let moves = pts
                .moves_from(s)
                .map(|(a, t, p)| MoveDoc {
                    letter: pts.alphabet().name(a).to_string(),
                    to: pts.state_name(t).to_string(),
                    p: format_rational(p),
                })
                .collect();
            let entry = Entry {
                stop: Some(format_rational(pts.term(s))),
                moves,
            };
            (pts.state_name(s).to_string(), entry)
        })
        .collect();
    let doc = Document {
        alphabet: pts.alphabet().letters().to_vec(),
        states: pts.states().to_vec(),
        transitions: Transitions(transitions),
    };
    serde_json::to_string_pretty(&doc).expect("document serialization cannot fail")
}
