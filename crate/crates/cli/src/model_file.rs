//! JSON model files:
//!
//! ```json
//! {"m": 3, "facets": [[1, 2], [3]], "T": [3], "states": {"1": 2, "2": 3}}
//! ```
//!
//! Vertices are 1-based. `states` maps every vertex outside `T` to its
//! number of states.

use std::collections::BTreeMap;
use std::path::Path;

use equivhilb::ModelSpec;
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum ModelFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {msg}")]
    Syntax {
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{field}: {msg}")]
    Field { field: String, msg: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    m: usize,
    facets: Vec<Vec<usize>>,
    #[serde(rename = "T")]
    varying: Vec<usize>,
    #[serde(default)]
    states: BTreeMap<String, u64>,
}

pub fn parse_model(text: &str) -> Result<ModelSpec, ModelFileError> {
    let raw: RawModel = serde_json::from_str(text).map_err(|e| ModelFileError::Syntax {
        line: e.line(),
        column: e.column(),
        msg: strip_position(&e.to_string()),
    })?;
    let in_range = |field: String, v: usize| {
        if (1..=raw.m).contains(&v) {
            Ok(v)
        } else {
            Err(ModelFileError::Field {
                field,
                msg: format!("vertex {v} is outside 1..={}", raw.m),
            })
        }
    };
    for (i, facet) in raw.facets.iter().enumerate() {
        for (k, &v) in facet.iter().enumerate() {
            in_range(format!("facets[{i}][{k}]"), v)?;
        }
    }
    let mut varying = std::collections::BTreeSet::new();
    for (i, &v) in raw.varying.iter().enumerate() {
        in_range(format!("T[{i}]"), v)?;
        if !varying.insert(v) {
            return Err(ModelFileError::Field {
                field: format!("T[{i}]"),
                msg: format!("vertex {v} is listed twice"),
            });
        }
    }
    let mut states = BTreeMap::new();
    for (key, &count) in &raw.states {
        let field = format!("states[{key:?}]");
        let v: usize = key.trim().parse().map_err(|_| ModelFileError::Field {
            field: field.clone(),
            msg: "key is not a vertex number".to_string(),
        })?;
        in_range(field, v)?;
        states.insert(v, count);
    }
    Ok(ModelSpec {
        m: raw.m,
        facets: raw.facets,
        varying,
        states,
    })
}

pub fn read_model(path: &Path) -> Result<ModelSpec, ModelFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| ModelFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_model(&text)
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(idx) => msg[..idx].to_string(),
        None => msg.to_string(),
    }
}
