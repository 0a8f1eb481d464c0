//! Acyclic quivers, their path algebras over ℚ, bimodules, enveloping
//! algebras and the standard two-term bimodule resolution.

mod bimodule;
mod enveloping;
mod path_algebra;
mod resolution;

pub use bimodule::Bimodule;
pub use enveloping::{enveloping_algebra, EnvelopingAlgebra};
pub use path_algebra::{Path, PathAlgebra};
pub use resolution::{check_smooth_proper, k0_basis, projective_dims, standard_resolution, SmoothProperReport};

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// Finite quiver. Vertex and arrow order are the declaration order and fix
/// every basis built from it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    // (source, target) per arrow, as vertex indices
    ends: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(name: impl Into<String>, vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let name = name.into();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let index: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut names = HashSet::new();
        let mut ends = Vec::with_capacity(arrows.len());
        for a in &arrows {
            if !names.insert(a.name.as_str()) || seen.contains(a.name.as_str()) {
                return Err(Error::DuplicateLabel(a.name.clone()));
            }
            if a.name.is_empty() || a.name.contains(['*', ':', ' ']) {
                return Err(Error::Schema(format!("illegal arrow name `{}`", a.name)));
            }
            let s = *index
                .get(a.source.as_str())
                .ok_or_else(|| Error::UnknownVertex(a.source.clone()))?;
            let t = *index
                .get(a.target.as_str())
                .ok_or_else(|| Error::UnknownVertex(a.target.clone()))?;
            ends.push((s, t));
        }
        let q = Self {
            name,
            vertices,
            arrows,
            ends,
        };
        if !q.is_acyclic() {
            return Err(Error::CyclicQuiver(q.name.clone()));
        }
        Ok(q)
    }

    /// Convenience constructor from `(name, source, target)` triples.
    pub fn from_parts(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            name,
            vertices.iter().map(|v| v.to_string()).collect(),
            arrows
                .iter()
                .map(|&(n, s, t)| Arrow {
                    name: n.into(),
                    source: s.into(),
                    target: t.into(),
                })
                .collect(),
        )
    }

    fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for &(_, t) in &self.ends {
            indegree[t] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = ready.pop() {
            visited += 1;
            for &(s, t) in &self.ends {
                if s == v {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        visited == n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// `(source, target)` vertex indices of an arrow.
    pub fn ends(&self, arrow: usize) -> (usize, usize) {
        self.ends[arrow]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycles() {
        let err = Quiver::from_parts("loop", &["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]);
        assert_eq!(err.unwrap_err(), Error::CyclicQuiver("loop".into()));
        let err = Quiver::from_parts("self", &["1"], &[("a", "1", "1")]);
        assert!(matches!(err, Err(Error::CyclicQuiver(_))));
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(matches!(
            Quiver::from_parts("q", &["1", "1"], &[]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            Quiver::from_parts("q", &["1", "2"], &[("a", "1", "2"), ("a", "1", "2")]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            Quiver::from_parts("q", &["1"], &[("a", "1", "3")]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn parallel_arrows_allowed() {
        let q = Quiver::from_parts("kronecker", &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        assert_eq!(q.arrow_count(), 2);
    }
}
