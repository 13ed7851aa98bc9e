//! The polytope interchange format.
//!
//! A polytope file is a JSON object
//! `{"dim", "n_vertices", "vertex_labels"?, "facets", "realizability", "provenance"?}`
//! with the facet list and each facet's vertex list sorted ascending. Writers
//! always emit that normal form, and readers reject anything else, so the
//! format is a bit-exact interchange contract.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{IncidencePolytope, Realizability};

#[derive(Serialize, Deserialize)]
struct PolytopeFile {
    dim: usize,
    n_vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex_labels: Option<Vec<String>>,
    facets: Vec<Vec<usize>>,
    realizability: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

/// Serializes to the interchange JSON (pretty-printed, trailing newline).
pub fn to_json(p: &IncidencePolytope) -> String {
    let file = PolytopeFile {
        dim: p.dim(),
        n_vertices: p.n_vertices(),
        vertex_labels: p.vertex_labels.clone(),
        facets: p.facets().iter().map(|f| f.to_vec()).collect(),
        realizability: p.realizability.as_str().to_string(),
        provenance: p.provenance.clone(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Parses and validates a polytope from interchange JSON.
pub fn from_json(text: &str) -> Result<IncidencePolytope> {
    let file: PolytopeFile =
        serde_json::from_str(text).map_err(|e| Error::input(format!("invalid polytope file: {e}")))?;
    let realizability = match file.realizability.as_str() {
        "constructed" => Realizability::Constructed,
        "asserted" => Realizability::Asserted,
        other => {
            return Err(Error::input(format!(
                "realizability must be \"constructed\" or \"asserted\", got \"{other}\""
            )))
        }
    };
    for f in &file.facets {
        if f.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input(format!(
                "facet {f:?} is not strictly ascending"
            )));
        }
    }
    let sorted = file
        .facets
        .windows(2)
        .all(|w| w[0] <= w[1]);
    if !sorted {
        return Err(Error::input("facet list is not sorted"));
    }
    if let Some(labels) = &file.vertex_labels {
        if labels.len() != file.n_vertices {
            return Err(Error::input(format!(
                "{} vertex labels for {} vertices",
                labels.len(),
                file.n_vertices
            )));
        }
    }
    let mut p = IncidencePolytope::new(file.dim, file.n_vertices, file.facets, realizability)?;
    p.vertex_labels = file.vertex_labels;
    p.provenance = file.provenance;
    Ok(p)
}

pub fn read_file(path: &std::path::Path) -> Result<IncidencePolytope> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text).map_err(|e| match e {
        Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_file(path: &std::path::Path, p: &IncidencePolytope) -> Result<()> {
    std::fs::write(path, to_json(p))?;
    Ok(())
}
