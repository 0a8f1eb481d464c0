//! JSON documents. Every rational is a string (`"3"`, `"-1/2"`); vertices,
//! paths and objects are referred to by label.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::{OrbitSpec, PresentedCategory, TensorData};
use crate::complexes::{BiElement, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, RatMatrix, Rational};
use crate::motives::{Correspondence, MotiveAlgebra};
use crate::quiver::{Arrow, Bimodule, PathAlgebra, Quiver};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureDoc {
    pub name: String,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Payload {
    Quiver(QuiverDoc),
    Bimodule(BimoduleDoc),
    Complex(ComplexDoc),
    Correspondence(CorrespondenceDoc),
    Category(CategoryDoc),
    Orbitspec(OrbitSpecDoc),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Quiver(_) => "quiver",
            Payload::Bimodule(_) => "bimodule",
            Payload::Complex(_) => "complex",
            Payload::Correspondence(_) => "correspondence",
            Payload::Category(_) => "category",
            Payload::Orbitspec(_) => "orbitspec",
        }
    }
}

impl FixtureDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    /// Canonical text: two-space indentation and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl QuiverDoc {
    pub fn from_quiver(q: &Quiver) -> Self {
        Self {
            vertices: q.vertices().to_vec(),
            arrows: q.arrows().to_vec(),
        }
    }

    pub fn to_quiver(&self, name: &str) -> Result<Quiver> {
        Quiver::new(name, self.vertices.clone(), self.arrows.clone())
    }
}

pub type MatrixDoc = Vec<Vec<String>>;

pub fn matrix_doc(m: &RatMatrix) -> MatrixDoc {
    (0..m.rows()).map(|r| vector_doc(m.row(r))).collect()
}

pub fn vector_doc(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn parse_vector(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

pub fn parse_matrix(m: &MatrixDoc, rows: usize, cols: usize) -> Result<RatMatrix> {
    if m.len() != rows {
        return Err(Error::DimensionMismatch {
            expected: rows,
            found: m.len(),
        });
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in m {
        if row.len() != cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: row.len(),
            });
        }
        entries.extend(parse_vector(row)?);
    }
    Ok(RatMatrix::from_entries(rows, cols, entries))
}

/// Action of one generator (vertex idempotent `e:<v>` or arrow).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub generator: String,
    pub matrix: MatrixDoc,
}

/// Bimodule given by the actions of the generators; the actions of longer
/// paths are their products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    pub left: String,
    pub right: String,
    pub dim: usize,
    pub left_action: Vec<ActionDoc>,
    pub right_action: Vec<ActionDoc>,
}

fn generators(a: &PathAlgebra) -> Vec<usize> {
    (0..a.dim()).filter(|&i| a.path(i).len() <= 1).collect()
}

fn path_actions(a: &PathAlgebra, listed: &[ActionDoc], dim: usize, right: bool) -> Result<Vec<RatMatrix>> {
    let mut given: BTreeMap<usize, RatMatrix> = BTreeMap::new();
    for act in listed {
        let i = a.parse_path(&act.generator)?;
        if a.path(i).len() > 1 {
            return Err(Error::Schema(format!("`{}` is not a generator", act.generator)));
        }
        if given.insert(i, parse_matrix(&act.matrix, dim, dim)?).is_some() {
            return Err(Error::DuplicateLabel(act.generator.clone()));
        }
    }
    for g in generators(a) {
        if !given.contains_key(&g) {
            return Err(Error::Schema(format!("missing action of `{}`", a.path_name(g))));
        }
    }
    let arrow_matrix = |arrow: usize| {
        let i = a.paths().iter().position(|p| p.arrows == [arrow]).expect("arrows are paths");
        &given[&i]
    };
    Ok((0..a.dim())
        .map(|i| {
            let p = a.path(i);
            if p.len() <= 1 {
                return given[&i].clone();
            }
            // left: a_k ⋯ a_1 acts as L(a_k)⋯L(a_1); right reverses the order
            let mut order: Vec<usize> = p.arrows.clone();
            if !right {
                order.reverse();
            }
            order
                .iter()
                .skip(1)
                .fold(arrow_matrix(order[0]).clone(), |acc, &x| acc.mul(arrow_matrix(x)))
        })
        .collect())
}

impl BimoduleDoc {
    pub fn from_bimodule(m: &Bimodule) -> Self {
        let docs = |a: &PathAlgebra, acts: &[RatMatrix]| {
            generators(a)
                .into_iter()
                .map(|i| ActionDoc {
                    generator: a.path_name(i),
                    matrix: matrix_doc(&acts[i]),
                })
                .collect()
        };
        Self {
            left: m.left_algebra().name().to_string(),
            right: m.right_algebra().name().to_string(),
            dim: m.dim(),
            left_action: docs(m.left_algebra(), m.left_actions()),
            right_action: docs(m.right_algebra(), m.right_actions()),
        }
    }

    pub fn to_bimodule(&self, left: Arc<PathAlgebra>, right: Arc<PathAlgebra>) -> Result<Bimodule> {
        let l = path_actions(&left, &self.left_action, self.dim, false)?;
        let r = path_actions(&right, &self.right_action, self.dim, true)?;
        Bimodule::new(left, right, self.dim, l, r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub degree: i64,
    /// `[v, u]` for `P(v,u) = A e_v ⊗ e_u B`.
    pub summands: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementTermDoc {
    pub coefficient: String,
    pub left: String,
    pub right: String,
}

/// Entry `d_degree[row][col]`: the image of the generator of summand `col`
/// in summand `row` of the degree below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub degree: i64,
    pub row: usize,
    pub col: usize,
    pub element: Vec<ElementTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    pub terms: Vec<TermDoc>,
    pub differentials: Vec<EntryDoc>,
}

impl ComplexDoc {
    pub fn from_complex(c: &ProjComplex, with_algebras: bool) -> Self {
        let (a, b) = (c.left_algebra(), c.right_algebra());
        let terms = c
            .terms()
            .iter()
            .map(|(&degree, s)| TermDoc {
                degree,
                summands: s
                    .iter()
                    .map(|&(v, u)| [a.quiver().vertices()[v].clone(), b.quiver().vertices()[u].clone()])
                    .collect(),
            })
            .collect();
        let mut differentials = Vec::new();
        for &n in c.terms().keys() {
            for (row, entries) in c.differential(n).iter().enumerate() {
                for (col, x) in entries.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    differentials.push(EntryDoc {
                        degree: n,
                        row,
                        col,
                        element: x
                            .terms()
                            .map(|(coef, p, q)| ElementTermDoc {
                                coefficient: format_rational(coef),
                                left: a.path_name(p),
                                right: b.path_name(q),
                            })
                            .collect(),
                    });
                }
            }
        }
        Self {
            left: with_algebras.then(|| a.name().to_string()),
            right: with_algebras.then(|| b.name().to_string()),
            terms,
            differentials,
        }
    }

    pub fn to_complex(&self, left: Arc<PathAlgebra>, right: Arc<PathAlgebra>) -> Result<ProjComplex> {
        let mut terms: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
        for t in &self.terms {
            let mut s = Vec::with_capacity(t.summands.len());
            for [v, u] in &t.summands {
                s.push((left.quiver().vertex_index(v)?, right.quiver().vertex_index(u)?));
            }
            if terms.insert(t.degree, s).is_some() {
                return Err(Error::Schema(format!("degree {} listed twice", t.degree)));
            }
        }
        let mut differentials = BTreeMap::new();
        for e in &self.differentials {
            let (src, tgt) = (
                terms.get(&e.degree).map_or(0, Vec::len),
                terms.get(&(e.degree - 1)).map_or(0, Vec::len),
            );
            if e.col >= src || e.row >= tgt {
                return Err(Error::Schema(format!(
                    "differential entry ({}, {}) outside d_{}",
                    e.row, e.col, e.degree
                )));
            }
            let d = differentials
                .entry(e.degree)
                .or_insert_with(|| vec![vec![BiElement::zero(); src]; tgt]);
            for t in &e.element {
                d[e.row][e.col].add_term(
                    parse_rational(&t.coefficient)?,
                    left.parse_path(&t.left)?,
                    right.parse_path(&t.right)?,
                );
            }
        }
        ProjComplex::new(left, right, terms, differentials)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassEntryDoc {
    pub left: String,
    pub right: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorrespondenceTermDoc {
    pub coefficient: String,
    pub complex: ComplexDoc,
}

/// How a correspondence is given: the diagonal bimodule of its algebra,
/// a class on the projectives `[P(v,u)]`, or explicit complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum CorrespondenceForm {
    Identity,
    Class { entries: Vec<ClassEntryDoc> },
    Terms { terms: Vec<CorrespondenceTermDoc> },
}

/// `source`/`target` name quiver fixtures; when absent the algebras are
/// supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(flatten)]
    pub form: CorrespondenceForm,
}

impl CorrespondenceDoc {
    pub fn to_correspondence(&self, source: Arc<MotiveAlgebra>, target: Arc<MotiveAlgebra>) -> Result<Correspondence> {
        match &self.form {
            CorrespondenceForm::Identity => {
                if source != target {
                    return Err(Error::MiddleMismatch(source.name.clone(), target.name.clone()));
                }
                Ok(Correspondence::identity(source))
            }
            CorrespondenceForm::Class { entries } => {
                let mut class = vec![crate::linalg::zero(); source.k0_len(&target)];
                let index = |labels: &[String], v: &str| {
                    labels
                        .iter()
                        .position(|l| l == v)
                        .ok_or_else(|| Error::UnknownVertex(v.to_string()))
                };
                for e in entries {
                    let (v, u) = (index(&source.vertices, &e.left)?, index(&target.vertices, &e.right)?);
                    class[v * target.vertex_count() + u] += parse_rational(&e.coefficient)?;
                }
                Correspondence::from_class(source, target, class)
            }
            CorrespondenceForm::Terms { terms } => {
                let (a, b) = match (source.path_algebra(), target.path_algebra()) {
                    (Some(a), Some(b)) => (a.clone(), b.clone()),
                    _ => return Err(Error::Schema("explicit terms need path algebras".into())),
                };
                let mut out = Vec::with_capacity(terms.len());
                for t in terms {
                    out.push((parse_rational(&t.coefficient)?, t.complex.to_complex(a.clone(), b.clone())?));
                }
                Correspondence::from_terms(source, target, out)
            }
        }
    }

    /// Class form, labelled by vertex pairs, omitting zero coefficients.
    pub fn from_class(x: &Correspondence, with_algebras: bool) -> Self {
        let m = x.target.vertex_count();
        let entries = x
            .class
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| ClassEntryDoc {
                left: x.source.vertices[i / m].clone(),
                right: x.target.vertices[i % m].clone(),
                coefficient: format_rational(c),
            })
            .collect();
        Self {
            source: with_algebras.then(|| x.source.name.clone()),
            target: with_algebras.then(|| x.target.name.clone()),
            form: CorrespondenceForm::Class { entries },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionDoc {
    pub source: String,
    pub middle: String,
    pub target: String,
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDoc {
    pub left: String,
    pub right: String,
    pub product: String,
}

/// `f ⊗ g` for `f: source → target`, `g: source2 → target2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorMorphismDoc {
    pub source: String,
    pub target: String,
    pub source2: String,
    pub target2: String,
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub unit: String,
    pub products: Vec<ProductDoc>,
    pub morphisms: Vec<TensorMorphismDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub hom_dims: Vec<Vec<usize>>,
    pub compositions: Vec<CompositionDoc>,
    pub identities: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_unit_end_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<TensorDoc>,
}

impl CategoryDoc {
    pub fn from_category(c: &PresentedCategory) -> Self {
        let o = |x: usize| c.objects[x].clone();
        Self {
            objects: c.objects.clone(),
            hom_dims: c.hom_dims.clone(),
            compositions: c
                .comp
                .iter()
                .map(|(&(x, y, z), m)| CompositionDoc {
                    source: o(x),
                    middle: o(y),
                    target: o(z),
                    matrix: matrix_doc(m),
                })
                .collect(),
            identities: c.ids.iter().map(|v| vector_doc(v)).collect(),
            traces: c.traces.as_ref().map(|t| t.iter().map(|v| vector_doc(v)).collect()),
            unit: c.unit.map(o),
            ambient_unit_end_dim: c.ambient_unit_end_dim,
            tensor: c.tensor.as_ref().map(|t| TensorDoc {
                unit: o(t.unit),
                products: (0..c.len())
                    .flat_map(|x| (0..c.len()).map(move |y| (x, y)))
                    .filter_map(|(x, y)| {
                        t.products[x][y].map(|p| ProductDoc {
                            left: o(x),
                            right: o(y),
                            product: o(p),
                        })
                    })
                    .collect(),
                morphisms: t
                    .morphisms
                    .iter()
                    .map(|(&(x, y, x2, y2), m)| TensorMorphismDoc {
                        source: o(x),
                        target: o(y),
                        source2: o(x2),
                        target2: o(y2),
                        matrix: matrix_doc(m),
                    })
                    .collect(),
            }),
        }
    }

    /// Builds the presentation; consistency is left to
    /// [`PresentedCategory::validate`].
    pub fn to_category(&self, name: &str) -> Result<PresentedCategory> {
        let n = self.objects.len();
        let mut labels = BTreeMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if labels.insert(o.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(o.clone()));
            }
        }
        let idx = |o: &str| labels.get(o).copied().ok_or_else(|| Error::UnknownObject(o.to_string()));
        if self.hom_dims.len() != n || self.hom_dims.iter().any(|r| r.len() != n) {
            return Err(Error::Schema(format!("{name}: hom_dims must be {n}×{n}")));
        }
        let dims = &self.hom_dims;
        let mut comp = BTreeMap::new();
        for c in &self.compositions {
            let (x, y, z) = (idx(&c.source)?, idx(&c.middle)?, idx(&c.target)?);
            let m = parse_matrix(&c.matrix, dims[x][z], dims[x][y] * dims[y][z])?;
            if comp.insert((x, y, z), m).is_some() {
                return Err(Error::Schema(format!("{name}: composition {}→{}→{} listed twice", c.source, c.middle, c.target)));
            }
        }
        let ids = self.identities.iter().map(|v| parse_vector(v)).collect::<Result<Vec<_>>>()?;
        let traces = match &self.traces {
            Some(t) => Some(t.iter().map(|v| parse_vector(v)).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        let unit = self.unit.as_deref().map(idx).transpose()?;
        let tensor = match &self.tensor {
            None => None,
            Some(t) => {
                let mut products = vec![vec![None; n]; n];
                for p in &t.products {
                    products[idx(&p.left)?][idx(&p.right)?] = Some(idx(&p.product)?);
                }
                let mut morphisms = BTreeMap::new();
                for m in &t.morphisms {
                    let (x, y, x2, y2) = (idx(&m.source)?, idx(&m.target)?, idx(&m.source2)?, idx(&m.target2)?);
                    let (Some(s), Some(d)) = (products[x][x2], products[y][y2]) else {
                        return Err(Error::Schema(format!(
                            "{name}: tensor morphism on an unlisted product of {} and {}",
                            m.source, m.source2
                        )));
                    };
                    let mat = parse_matrix(&m.matrix, dims[s][d], dims[x][y] * dims[x2][y2])?;
                    morphisms.insert((x, y, x2, y2), mat);
                }
                Some(TensorData {
                    products,
                    unit: idx(&t.unit)?,
                    morphisms,
                })
            }
        };
        Ok(PresentedCategory {
            name: name.to_string(),
            objects: self.objects.clone(),
            hom_dims: self.hom_dims.clone(),
            comp,
            ids,
            traces,
            unit,
            ambient_unit_end_dim: self.ambient_unit_end_dim,
            tensor,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitSpecDoc {
    pub category: String,
    pub object: String,
    pub inverse: String,
    pub bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<Vec<String>>,
}

impl OrbitSpecDoc {
    pub fn to_spec(&self, c: &PresentedCategory) -> Result<OrbitSpec> {
        let idx = |o: &str| c.object_index(o);
        Ok(OrbitSpec {
            object: idx(&self.object)?,
            inverse: idx(&self.inverse)?,
            bound: self.bound,
            objects: match &self.objects {
                Some(os) => Some(os.iter().map(|o| idx(o)).collect::<Result<_>>()?),
                None => None,
            },
        })
    }
}
