//! The bundled corpus: its in-code definition, and loading documents from
//! a fixture directory with name references resolved.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use super::doc::*;
use super::synthetic;
use crate::category::{OrbitSpec, PresentedCategory};
use crate::error::{Error, Result};
use crate::motives::{Correspondence, MotiveAlgebra};
use crate::quiver::{standard_resolution, Arrow, Bimodule, PathAlgebra, Quiver};

/// Overrides the fixture directory.
pub const FIXTURE_DIR_ENV: &str = "NCNUM_FIXTURE_DIR";

pub fn default_fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")))
}

fn quiver(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> FixtureDoc {
    FixtureDoc {
        name: name.into(),
        payload: Payload::Quiver(QuiverDoc {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|&(n, s, t)| Arrow {
                    name: n.into(),
                    source: s.into(),
                    target: t.into(),
                })
                .collect(),
        }),
    }
}

fn category(c: &PresentedCategory) -> FixtureDoc {
    FixtureDoc {
        name: c.name.clone(),
        payload: Payload::Category(CategoryDoc::from_category(c)),
    }
}

fn shift(name: &str, category: &str, bound: usize) -> FixtureDoc {
    FixtureDoc {
        name: name.into(),
        payload: Payload::Orbitspec(OrbitSpecDoc {
            category: category.into(),
            object: "L1".into(),
            inverse: "L-1".into(),
            bound,
            objects: None,
        }),
    }
}

fn identity(name: &str, algebra: Option<&str>) -> FixtureDoc {
    FixtureDoc {
        name: name.into(),
        payload: Payload::Correspondence(CorrespondenceDoc {
            source: algebra.map(String::from),
            target: algebra.map(String::from),
            form: CorrespondenceForm::Identity,
        }),
    }
}

fn projective_class(name: &str, algebra: &str, v: &str, u: &str) -> FixtureDoc {
    FixtureDoc {
        name: name.into(),
        payload: Payload::Correspondence(CorrespondenceDoc {
            source: Some(algebra.into()),
            target: Some(algebra.into()),
            form: CorrespondenceForm::Class {
                entries: vec![ClassEntryDoc {
                    left: v.into(),
                    right: u.into(),
                    coefficient: "1".into(),
                }],
            },
        }),
    }
}

/// Every bundled document, in file order.
pub fn builtin_docs() -> Vec<FixtureDoc> {
    let mut docs = vec![
        quiver("point", &["*"], &[]),
        quiver("qq", &["1", "2"], &[]),
        quiver("a2", &["1", "2"], &[("alpha", "1", "2")]),
        quiver("a3", &["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3")]),
        quiver("fork", &["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "1", "3")]),
    ];
    let a2 = Arc::new(PathAlgebra::new(
        match &docs[2].payload {
            Payload::Quiver(q) => q.to_quiver("a2"),
            _ => unreachable!(),
        }
        .expect("a2 is acyclic"),
    ));
    docs.push(FixtureDoc {
        name: "a2-diagonal".into(),
        payload: Payload::Bimodule(BimoduleDoc::from_bimodule(&Bimodule::diagonal(a2.clone()))),
    });
    docs.push(FixtureDoc {
        name: "a2-resolution".into(),
        payload: Payload::Complex(ComplexDoc::from_complex(&standard_resolution(&a2), true)),
    });
    docs.extend([
        identity("id", None),
        identity("a2-id", Some("a2")),
        identity("qq-id", Some("qq")),
        projective_class("a2-p12", "a2", "1", "2"),
        projective_class("a2-p22", "a2", "2", "2"),
        projective_class("a3-p13", "a3", "1", "3"),
    ]);
    for c in [
        synthetic::dual_numbers(),
        synthetic::graded_lines(-2, 2),
        synthetic::nilpotent_ideal(1),
        synthetic::split_pair(),
    ] {
        docs.push(category(&c));
    }
    docs.push(shift("graded-lines-shift", "graded-lines", 4));
    docs.push(shift("nilpotent-ideal-shift", "nilpotent-ideal", 2));
    docs
}

pub fn read_doc(path: &Path) -> Result<FixtureDoc> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    FixtureDoc::parse(&text).map_err(|e| match e {
        Error::Schema(m) => Error::Schema(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Documents of a fixture directory keyed by name, with the references
/// between them (algebra names, category names) resolved on demand.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    docs: BTreeMap<String, FixtureDoc>,
}

impl Corpus {
    pub fn load(dir: &Path) -> Result<Self> {
        let entries = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut corpus = Self::default();
        for p in paths {
            corpus.insert(read_doc(&p)?)?;
        }
        Ok(corpus)
    }

    pub fn bundled() -> Result<Self> {
        Self::load(&default_fixture_dir())
    }

    pub fn from_docs(docs: impl IntoIterator<Item = FixtureDoc>) -> Result<Self> {
        let mut corpus = Self::default();
        for d in docs {
            corpus.insert(d)?;
        }
        Ok(corpus)
    }

    pub fn insert(&mut self, doc: FixtureDoc) -> Result<()> {
        if self.docs.contains_key(&doc.name) {
            return Err(Error::DuplicateLabel(doc.name));
        }
        self.docs.insert(doc.name.clone(), doc);
        Ok(())
    }

    /// Inserts or replaces; files named on a command line shadow the corpus.
    pub fn put(&mut self, doc: FixtureDoc) {
        self.docs.insert(doc.name.clone(), doc);
    }

    pub fn get(&self, name: &str) -> Result<&FixtureDoc> {
        self.docs
            .get(name)
            .ok_or_else(|| Error::Schema(format!("no fixture named `{name}`")))
    }

    pub fn docs(&self) -> impl Iterator<Item = &FixtureDoc> {
        self.docs.values()
    }

    fn names_of(&self, kind: &str) -> Vec<String> {
        self.docs
            .values()
            .filter(|d| d.payload.kind() == kind)
            .map(|d| d.name.clone())
            .collect()
    }

    pub fn quiver(&self, name: &str) -> Result<Quiver> {
        match &self.get(name)?.payload {
            Payload::Quiver(q) => q.to_quiver(name),
            p => Err(Error::Schema(format!("`{name}` is a {}, not a quiver", p.kind()))),
        }
    }

    pub fn path_algebra(&self, name: &str) -> Result<Arc<PathAlgebra>> {
        Ok(Arc::new(PathAlgebra::new(self.quiver(name)?)))
    }

    pub fn algebra(&self, name: &str) -> Result<Arc<MotiveAlgebra>> {
        Ok(Arc::new(MotiveAlgebra::from_quiver(self.quiver(name)?)))
    }

    /// All quiver algebras, by name.
    pub fn algebras(&self) -> Result<Vec<Arc<MotiveAlgebra>>> {
        self.names_of("quiver").iter().map(|n| self.algebra(n)).collect()
    }

    pub fn category(&self, name: &str) -> Result<PresentedCategory> {
        match &self.get(name)?.payload {
            Payload::Category(c) => c.to_category(name),
            p => Err(Error::Schema(format!("`{name}` is a {}, not a category", p.kind()))),
        }
    }

    pub fn categories(&self) -> Result<Vec<PresentedCategory>> {
        self.names_of("category").iter().map(|n| self.category(n)).collect()
    }

    /// An orbit spec with the category it refers to.
    pub fn orbit_spec(&self, name: &str) -> Result<(PresentedCategory, OrbitSpec)> {
        match &self.get(name)?.payload {
            Payload::Orbitspec(o) => {
                let c = self.category(&o.category)?;
                let spec = o.to_spec(&c)?;
                Ok((c, spec))
            }
            p => Err(Error::Schema(format!("`{name}` is a {}, not an orbit spec", p.kind()))),
        }
    }

    pub fn orbit_specs(&self) -> Result<Vec<(String, PresentedCategory, OrbitSpec)>> {
        self.names_of("orbitspec")
            .into_iter()
            .map(|n| self.orbit_spec(&n).map(|(c, s)| (n, c, s)))
            .collect()
    }

    pub fn bimodule(&self, name: &str) -> Result<Bimodule> {
        match &self.get(name)?.payload {
            Payload::Bimodule(b) => b.to_bimodule(self.path_algebra(&b.left)?, self.path_algebra(&b.right)?),
            p => Err(Error::Schema(format!("`{name}` is a {}, not a bimodule", p.kind()))),
        }
    }

    pub fn complex(&self, name: &str) -> Result<crate::complexes::ProjComplex> {
        match &self.get(name)?.payload {
            Payload::Complex(c) => {
                let (l, r) = match (&c.left, &c.right) {
                    (Some(l), Some(r)) => (l, r),
                    _ => return Err(Error::Schema(format!("complex `{name}` does not name its algebras"))),
                };
                c.to_complex(self.path_algebra(l)?, self.path_algebra(r)?)
            }
            p => Err(Error::Schema(format!("`{name}` is a {}, not a complex", p.kind()))),
        }
    }

    /// Resolves a correspondence document; `algebras` fills in a source or
    /// target the document leaves open.
    pub fn correspondence_from(
        &self,
        doc: &CorrespondenceDoc,
        algebras: (Option<Arc<MotiveAlgebra>>, Option<Arc<MotiveAlgebra>>),
    ) -> Result<Correspondence> {
        let pick = |named: &Option<String>, given: Option<Arc<MotiveAlgebra>>| -> Result<Arc<MotiveAlgebra>> {
            match (given, named) {
                (Some(a), _) => Ok(a),
                (None, Some(n)) => self.algebra(n),
                (None, None) => Err(Error::Schema("correspondence needs an algebra".into())),
            }
        };
        let source = pick(&doc.source, algebras.0)?;
        // an endomorphism document with one algebra given applies to it on both sides
        let target_given = algebras.1.or_else(|| (doc.target.is_none()).then(|| source.clone()));
        let target = pick(&doc.target, target_given)?;
        doc.to_correspondence(source, target)
    }

    pub fn correspondence(&self, name: &str) -> Result<Correspondence> {
        match &self.get(name)?.payload {
            Payload::Correspondence(c) => self.correspondence_from(c, (None, None)),
            p => Err(Error::Schema(format!("`{name}` is a {}, not a correspondence", p.kind()))),
        }
    }

    /// Builds and validates the object a document describes.
    pub fn check(&self, name: &str) -> Result<()> {
        match &self.get(name)?.payload {
            Payload::Quiver(_) => self.quiver(name).map(drop),
            Payload::Bimodule(_) => self.bimodule(name).map(drop),
            Payload::Complex(_) => self.complex(name).map(drop),
            Payload::Correspondence(c) => {
                if c.source.is_some() {
                    self.correspondence(name).map(drop)
                } else {
                    Ok(())
                }
            }
            Payload::Category(_) => self.category(name)?.validate(),
            Payload::Orbitspec(_) => {
                let (c, spec) = self.orbit_spec(name)?;
                crate::category::orbit_category(&c, &spec).map(drop)
            }
        }
    }
}
