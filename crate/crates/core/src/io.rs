//! The lattice interchange format and DOT emission.
//!
//! A lattice file is a JSON object `{"n": …, "covers": [[lo, hi], …]}`
//! with an optional `"names"` array; unknown keys are rejected.

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::lattice::FiniteLattice;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error("malformed lattice file: {0}")]
    Format(#[from] serde_json::Error),
    #[error("invalid lattice: {0}")]
    Lattice(#[from] LatticeError),
}

pub fn to_file(l: &FiniteLattice) -> LatticeFile {
    LatticeFile {
        n: l.size(),
        covers: l.covers().to_vec(),
        names: l.names().map(|ns| ns.to_vec()),
    }
}

pub fn write_json(l: &FiniteLattice) -> String {
    serde_json::to_string(&to_file(l)).expect("lattice serialization cannot fail")
}

pub fn read_json(text: &str) -> Result<FiniteLattice, ReadError> {
    let file: LatticeFile = serde_json::from_str(text)?;
    Ok(FiniteLattice::from_covers(file.n, &file.covers, file.names)?)
}

/// DOT rendering of the Hasse diagram: one edge per cover pair, elements
/// ranked by height.
pub fn to_dot(l: &FiniteLattice) -> String {
    let mut out = String::from("graph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..l.size() {
        out.push_str(&format!("  n{x} [label=\"{}\"];\n", escape(&l.label(x))));
    }
    let max_height = (0..l.size()).map(|x| l.height(x)).max().unwrap_or(0);
    for h in 0..=max_height {
        let layer: Vec<String> = (0..l.size())
            .filter(|&x| l.height(x) == h)
            .map(|x| format!("n{x};"))
            .collect();
        if !layer.is_empty() {
            out.push_str(&format!("  {{ rank=same; {} }}\n", layer.join(" ")));
        }
    }
    for &(lo, hi) in l.covers() {
        out.push_str(&format!("  n{lo} -- n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{catalog, pentagon};

    #[test]
    fn json_round_trip() {
        let n5 = pentagon();
        let text = write_json(&n5);
        let back = read_json(&text).unwrap();
        assert_eq!(back, n5);
        assert!(text.starts_with("{\"n\":5,\"covers\":"));
    }

    #[test]
    fn unknown_keys_and_bad_structures_are_rejected() {
        assert!(read_json(r#"{"n": 2, "covers": [[0,1]], "extra": 1}"#).is_err());
        assert!(read_json(r#"{"n": 2}"#).is_err());
        assert!(matches!(
            read_json(r#"{"n": 3, "covers": [[0,1]]}"#),
            Err(ReadError::Lattice(LatticeError::NotBounded))
        ));
        assert!(read_json(r#"{"n": 2, "covers": [[0,1]]}"#).is_ok());
    }

    #[test]
    fn dot_output_shape() {
        let l = catalog("s0").unwrap().lattice;
        let dot = to_dot(&l);
        assert_eq!(dot.matches(" -- ").count(), l.covers().len());
        assert!(dot.starts_with("graph lattice {"));
        assert!(dot.trim_end().ends_with('}'));
        assert!(dot.contains("rank=same"));
    }
}
