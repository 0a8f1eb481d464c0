//! Finite F-linear categories given by hom bases and structure constants,
//! with cyclic trace functionals and optional strict tensor data.
//!
//! Morphisms are coordinate vectors in the chosen hom basis. The
//! composition table for a triple `(x, y, z)` is a matrix of shape
//! `dim(x,z) × dim(x,y)·dim(y,z)`; column `i·dim(y,z) + j` holds `g_j ∘ f_i`.

mod checks;
mod ideal;
mod karoubi;
mod orbit;
mod prop31;

pub use checks::{
    check_semisimple, conservativity_check, is_invertible, is_largest_ideal, nilpotent_trace_check,
    ConservativityReport, LargestIdealReport, NilpotentReport, ObjectRadical, PairDefect, SemisimpleReport,
};
pub use ideal::{numerical_ideal, quotient_by_ideal, validate_ideal, Quotient, TensorIdeal};
pub use karoubi::{karoubi_envelope, Karoubi};
pub use orbit::{orbit_category, Orbit, OrbitSpec};
pub use prop31::{verify_prop31, Prop31Report};

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, unit_vector, zero, RatMatrix, Rational};

/// Strict, skeletal tensor structure. `products[x][y]` is `x ⊗ y` when that
/// object is part of the presentation; `None` marks a product outside it,
/// whose hom spaces to and from every listed object are taken to be zero.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorData {
    pub products: Vec<Vec<Option<usize>>>,
    pub unit: usize,
    /// Keyed by `(x, y, x', y')`: the map `Hom(x,y) ⊗ Hom(x',y') → Hom(x⊗x', y⊗y')`,
    /// column `i·dim(x',y') + j` holding `f_i ⊗ g_j`. Absent keys are zero maps.
    pub morphisms: BTreeMap<(usize, usize, usize, usize), RatMatrix>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PresentedCategory {
    pub name: String,
    pub objects: Vec<String>,
    /// `hom_dims[x][y] = dim Hom(x, y)`.
    pub hom_dims: Vec<Vec<usize>>,
    /// Absent keys are zero maps.
    pub comp: BTreeMap<(usize, usize, usize), RatMatrix>,
    pub ids: Vec<Vec<Rational>>,
    pub traces: Option<Vec<Vec<Rational>>>,
    /// Index of the unit object when it belongs to the presentation.
    pub unit: Option<usize>,
    /// `dim End(1)` of an ambient monoidal category whose unit is not listed.
    pub ambient_unit_end_dim: Option<usize>,
    pub tensor: Option<TensorData>,
}

fn kron(f: &[Rational], g: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(f.len() * g.len());
    for a in f {
        for b in g {
            out.push(a * b);
        }
    }
    out
}

impl PresentedCategory {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn dim(&self, x: usize, y: usize) -> usize {
        self.hom_dims[x][y]
    }

    pub fn object_index(&self, label: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|o| o == label)
            .ok_or_else(|| Error::UnknownObject(label.to_string()))
    }

    pub fn basis(&self, x: usize, y: usize, i: usize) -> Vec<Rational> {
        unit_vector(self.dim(x, y), i)
    }

    pub fn zero_hom(&self, x: usize, y: usize) -> Vec<Rational> {
        vec![zero(); self.dim(x, y)]
    }

    pub fn identity(&self, x: usize) -> &[Rational] {
        &self.ids[x]
    }

    /// `g ∘ f` for `f: x → y`, `g: y → z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, f: &[Rational], g: &[Rational]) -> Vec<Rational> {
        match self.comp.get(&(x, y, z)) {
            Some(m) if !is_zero_vec(f) && !is_zero_vec(g) => m.mul_vec(&kron(f, g)),
            _ => self.zero_hom(x, z),
        }
    }

    pub fn has_trace(&self) -> bool {
        self.traces.is_some()
    }

    pub fn trace(&self, x: usize, f: &[Rational]) -> Result<Rational> {
        let t = self.traces.as_ref().ok_or_else(|| Error::TraceMissing(self.name.clone()))?;
        Ok(crate::linalg::dot(&t[x], f))
    }

    /// Gram matrix `(f_i, g_j) ↦ tr(g_j ∘ f_i)` on `Hom(x,y) × Hom(y,x)`.
    pub fn gram(&self, x: usize, y: usize) -> Result<RatMatrix> {
        let (dxy, dyx) = (self.dim(x, y), self.dim(y, x));
        let mut m = RatMatrix::zeros(dxy, dyx);
        for i in 0..dxy {
            for j in 0..dyx {
                let c = self.compose(x, y, x, &self.basis(x, y, i), &self.basis(y, x, j));
                m[(i, j)] = self.trace(x, &c)?;
            }
        }
        Ok(m)
    }

    /// Structure constants of `End(x)` with product `a·b = a ∘ b`.
    pub fn end_constants(&self, x: usize) -> Vec<Rational> {
        let n = self.dim(x, x);
        let mut c = vec![zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let p = self.compose(x, x, x, &self.basis(x, x, j), &self.basis(x, x, i));
                for (k, v) in p.into_iter().enumerate() {
                    c[(i * n + j) * n + k] = v;
                }
            }
        }
        c
    }

    pub fn tensor_object(&self, x: usize, y: usize) -> Option<usize> {
        self.tensor.as_ref().and_then(|t| t.products[x][y])
    }

    /// `f ⊗ g` for `f: x → y`, `g: x' → y'`, when both products are listed.
    pub fn tensor_morphism(
        &self,
        (x, y): (usize, usize),
        (x2, y2): (usize, usize),
        f: &[Rational],
        g: &[Rational],
    ) -> Option<Vec<Rational>> {
        let t = self.tensor.as_ref()?;
        let (s, d) = (t.products[x][x2]?, t.products[y][y2]?);
        Some(match t.morphisms.get(&(x, y, x2, y2)) {
            Some(m) => m.mul_vec(&kron(f, g)),
            None => self.zero_hom(s, d),
        })
    }

    pub fn validate(&self) -> Result<()> {
        self.validate_shapes()?;
        self.validate_composition()?;
        if self.traces.is_some() {
            self.validate_trace()?;
        }
        if self.tensor.is_some() {
            self.validate_tensor()?;
        }
        Ok(())
    }

    fn validate_shapes(&self) -> Result<()> {
        let n = self.len();
        let mismatch = |expected, found| Error::DimensionMismatch { expected, found };
        if self.hom_dims.len() != n || self.hom_dims.iter().any(|r| r.len() != n) {
            return Err(Error::Schema(format!("{}: hom table must be {n}×{n}", self.name)));
        }
        let mut seen = std::collections::BTreeSet::new();
        for o in &self.objects {
            if !seen.insert(o) {
                return Err(Error::DuplicateLabel(o.clone()));
            }
        }
        if self.ids.len() != n {
            return Err(mismatch(n, self.ids.len()));
        }
        for (x, id) in self.ids.iter().enumerate() {
            if id.len() != self.dim(x, x) {
                return Err(mismatch(self.dim(x, x), id.len()));
            }
        }
        for (&(x, y, z), m) in &self.comp {
            if x >= n || y >= n || z >= n {
                return Err(Error::Schema(format!("{}: composition key out of range", self.name)));
            }
            if m.rows() != self.dim(x, z) || m.cols() != self.dim(x, y) * self.dim(y, z) {
                return Err(mismatch(self.dim(x, y) * self.dim(y, z), m.cols()));
            }
        }
        if let Some(t) = &self.traces {
            if t.len() != n {
                return Err(mismatch(n, t.len()));
            }
            for (x, tx) in t.iter().enumerate() {
                if tx.len() != self.dim(x, x) {
                    return Err(mismatch(self.dim(x, x), tx.len()));
                }
            }
        }
        if let Some(u) = self.unit {
            if u >= n {
                return Err(Error::Schema(format!("{}: unit out of range", self.name)));
            }
        }
        if let Some(t) = &self.tensor {
            if t.products.len() != n || t.products.iter().any(|r| r.len() != n) {
                return Err(Error::Schema(format!("{}: product table must be {n}×{n}", self.name)));
            }
            if t.unit >= n || t.products.iter().flatten().flatten().any(|&p| p >= n) {
                return Err(Error::Schema(format!("{}: tensor object out of range", self.name)));
            }
            for (&(x, y, x2, y2), m) in &t.morphisms {
                let (s, d) = match (t.products[x][x2], t.products[y][y2]) {
                    (Some(s), Some(d)) => (s, d),
                    _ => {
                        return Err(Error::Schema(format!(
                            "{}: tensor of morphisms between unlisted products",
                            self.name
                        )))
                    }
                };
                if m.rows() != self.dim(s, d) || m.cols() != self.dim(x, y) * self.dim(x2, y2) {
                    return Err(mismatch(self.dim(x, y) * self.dim(x2, y2), m.cols()));
                }
            }
        }
        Ok(())
    }

    fn validate_composition(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for i in 0..self.dim(x, y) {
                    let f = self.basis(x, y, i);
                    if self.compose(x, x, y, &self.ids[x], &f) != f || self.compose(x, y, y, &f, &self.ids[y]) != f {
                        return Err(Error::CompositionViolation(format!(
                            "{}: identity law fails on basis {i} of Hom({}, {})",
                            self.name, self.objects[x], self.objects[y]
                        )));
                    }
                }
            }
        }
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let (a, b, c) = (self.dim(w, x), self.dim(x, y), self.dim(y, z));
                        if a * b * c == 0 {
                            continue;
                        }
                        for i in 0..a {
                            let f = self.basis(w, x, i);
                            for j in 0..b {
                                let g = self.basis(x, y, j);
                                let gf = self.compose(w, x, y, &f, &g);
                                for k in 0..c {
                                    let h = self.basis(y, z, k);
                                    let left = self.compose(w, y, z, &gf, &h);
                                    let hg = self.compose(x, y, z, &g, &h);
                                    if left != self.compose(w, x, z, &f, &hg) {
                                        return Err(Error::CompositionViolation(format!(
                                            "{}: composition not associative on {} → {} → {} → {}",
                                            self.name,
                                            self.objects[w],
                                            self.objects[x],
                                            self.objects[y],
                                            self.objects[z]
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_trace(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for i in 0..self.dim(x, y) {
                    let f = self.basis(x, y, i);
                    for j in 0..self.dim(y, x) {
                        let g = self.basis(y, x, j);
                        let gf = self.trace(x, &self.compose(x, y, x, &f, &g))?;
                        let fg = self.trace(y, &self.compose(y, x, y, &g, &f))?;
                        if gf != fg {
                            return Err(Error::TraceCyclicityViolation(format!(
                                "{}: basis {i} of Hom({}, {}) against basis {j} of Hom({}, {})",
                                self.name, self.objects[x], self.objects[y], self.objects[y], self.objects[x]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_tensor(&self) -> Result<()> {
        let t = self.tensor.as_ref().expect("checked by caller");
        let n = self.len();
        let err = |msg: String| Error::TensorViolation(format!("{}: {msg}", self.name));
        let u = t.unit;
        if self.dim(u, u) == 0 {
            return Err(err("unit object has zero endomorphisms".into()));
        }
        for x in 0..n {
            if t.products[u][x] != Some(x) || t.products[x][u] != Some(x) {
                return Err(err(format!("unit law fails on {}", self.objects[x])));
            }
            for y in 0..n {
                for z in 0..n {
                    let left = t.products[x][y].and_then(|xy| t.products[xy][z]);
                    let right = t.products[y][z].and_then(|yz| t.products[x][yz]);
                    if let (Some(l), Some(r)) = (left, right) {
                        if l != r {
                            return Err(err("object product is not associative".into()));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for x2 in 0..n {
                if let Some(p) = t.products[x][x2] {
                    let id = self.tensor_morphism((x, x), (x2, x2), &self.ids[x], &self.ids[x2]);
                    if id.as_deref() != Some(&self.ids[p][..]) {
                        return Err(err(format!("id ⊗ id ≠ id on {} ⊗ {}", self.objects[x], self.objects[x2])));
                    }
                }
            }
        }
        // id_1 ⊗ f = f = f ⊗ id_1
        for x in 0..n {
            for y in 0..n {
                for i in 0..self.dim(x, y) {
                    let f = self.basis(x, y, i);
                    let l = self.tensor_morphism((u, u), (x, y), &self.ids[u], &f);
                    let r = self.tensor_morphism((x, y), (u, u), &f, &self.ids[u]);
                    if l.as_ref() != Some(&f) || r.as_ref() != Some(&f) {
                        return Err(err(format!("unit law fails on morphisms {} → {}", self.objects[x], self.objects[y])));
                    }
                }
            }
        }
        // (g∘f) ⊗ (g'∘f') = (g⊗g') ∘ (f⊗f') on basis morphisms
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.dim(a, b) > 0)
            .collect();
        for &(x, y) in &pairs {
            for &(x2, y2) in &pairs {
                let (Some(s), Some(m)) = (t.products[x][x2], t.products[y][y2]) else {
                    continue;
                };
                for z in (0..n).filter(|&z| self.dim(y, z) > 0) {
                    for z2 in (0..n).filter(|&z2| self.dim(y2, z2) > 0) {
                        let Some(d) = t.products[z][z2] else {
                            continue;
                        };
                        for i in 0..self.dim(x, y) {
                            let f = self.basis(x, y, i);
                            for i2 in 0..self.dim(x2, y2) {
                                let f2 = self.basis(x2, y2, i2);
                                let ff = self.tensor_morphism((x, y), (x2, y2), &f, &f2).expect("listed");
                                for j in 0..self.dim(y, z) {
                                    let g = self.basis(y, z, j);
                                    let gf = self.compose(x, y, z, &f, &g);
                                    for j2 in 0..self.dim(y2, z2) {
                                        let g2 = self.basis(y2, z2, j2);
                                        let gf2 = self.compose(x2, y2, z2, &f2, &g2);
                                        let gg = self.tensor_morphism((y, z), (y2, z2), &g, &g2).expect("listed");
                                        let lhs = self.tensor_morphism((x, z), (x2, z2), &gf, &gf2).expect("listed");
                                        let rhs = self.compose(s, m, d, &ff, &gg);
                                        if lhs != rhs {
                                            return Err(err(format!(
                                                "tensor is not functorial on {} ⊗ {} → {} ⊗ {}",
                                                self.objects[x], self.objects[x2], self.objects[z], self.objects[z2]
                                            )));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `dim End(1)`, from the listed unit or the declared ambient value.
    pub fn unit_end_dim(&self) -> Option<usize> {
        match self.unit.or(self.tensor.as_ref().map(|t| t.unit)) {
            Some(u) => Some(self.dim(u, u)),
            None => self.ambient_unit_end_dim,
        }
    }

    /// Re-express the category in new hom bases: `changes[x][y]` has as
    /// columns the new basis vectors written in the old basis.
    pub fn change_basis(&self, changes: &[Vec<RatMatrix>]) -> Result<Self> {
        let n = self.len();
        let inv: Vec<Vec<RatMatrix>> = changes
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| m.inverse().ok_or_else(|| Error::Schema("basis change is singular".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut comp = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (a, b) = (self.dim(x, y), self.dim(y, z));
                    if a * b * self.dim(x, z) == 0 {
                        continue;
                    }
                    let m = RatMatrix::from_fn(self.dim(x, z), a * b, |r, c| {
                        let (i, j) = (c / b, c % b);
                        let f = changes[x][y].column(i);
                        let g = changes[y][z].column(j);
                        inv[x][z].mul_vec(&self.compose(x, y, z, &f, &g))[r].clone()
                    });
                    comp.insert((x, y, z), m);
                }
            }
        }
        let ids = (0..n).map(|x| inv[x][x].mul_vec(&self.ids[x])).collect();
        let traces = self.traces.as_ref().map(|t| {
            (0..n)
                .map(|x| changes[x][x].transpose().mul_vec(&t[x]))
                .collect()
        });
        let tensor = match &self.tensor {
            None => None,
            Some(t) => {
                let mut morphisms = BTreeMap::new();
                for &(x, y, x2, y2) in t.morphisms.keys() {
                    let (s, d) = (t.products[x][x2].unwrap(), t.products[y][y2].unwrap());
                    let b = self.dim(x2, y2);
                    let m = RatMatrix::from_fn(self.dim(s, d), self.dim(x, y) * b, |r, c| {
                        let f = changes[x][y].column(c / b);
                        let g = changes[x2][y2].column(c % b);
                        let fg = self.tensor_morphism((x, y), (x2, y2), &f, &g).unwrap();
                        inv[s][d].mul_vec(&fg)[r].clone()
                    });
                    morphisms.insert((x, y, x2, y2), m);
                }
                Some(TensorData {
                    products: t.products.clone(),
                    unit: t.unit,
                    morphisms,
                })
            }
        };
        Ok(Self {
            comp,
            ids,
            traces,
            tensor,
            ..self.clone()
        })
    }

    /// Rename objects through a permutation: new object `k` is old `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.len();
        let mut pos = vec![0; n];
        for (k, &old) in perm.iter().enumerate() {
            pos[old] = k;
        }
        let comp = self.comp.iter().map(|(&(x, y, z), m)| ((pos[x], pos[y], pos[z]), m.clone())).collect();
        let tensor = self.tensor.as_ref().map(|t| TensorData {
            products: (0..n)
                .map(|a| (0..n).map(|b| t.products[perm[a]][perm[b]].map(|p| pos[p])).collect())
                .collect(),
            unit: pos[t.unit],
            morphisms: t
                .morphisms
                .iter()
                .map(|(&(a, b, c, d), m)| ((pos[a], pos[b], pos[c], pos[d]), m.clone()))
                .collect(),
        });
        Self {
            name: self.name.clone(),
            objects: perm.iter().map(|&o| self.objects[o].clone()).collect(),
            hom_dims: (0..n).map(|a| (0..n).map(|b| self.hom_dims[perm[a]][perm[b]]).collect()).collect(),
            comp,
            ids: perm.iter().map(|&o| self.ids[o].clone()).collect(),
            traces: self.traces.as_ref().map(|t| perm.iter().map(|&o| t[o].clone()).collect()),
            unit: self.unit.map(|u| pos[u]),
            ambient_unit_end_dim: self.ambient_unit_end_dim,
            tensor,
        }
    }
}

/// Assemble a composition table from a closure computing `g ∘ f` on basis
/// indices. Used by every derived construction.
pub(crate) fn build_comp(
    dims: &[Vec<usize>],
    mut f: impl FnMut(usize, usize, usize, usize, usize) -> Vec<Rational>,
) -> BTreeMap<(usize, usize, usize), RatMatrix> {
    let n = dims.len();
    let mut comp = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, b, c) = (dims[x][y], dims[y][z], dims[x][z]);
                if a * b * c == 0 {
                    continue;
                }
                let mut m = RatMatrix::zeros(c, a * b);
                let mut nonzero = false;
                for i in 0..a {
                    for j in 0..b {
                        let v = f(x, y, z, i, j);
                        for (r, e) in v.into_iter().enumerate() {
                            if !e.is_zero() {
                                nonzero = true;
                                m[(r, i * b + j)] = e;
                            }
                        }
                    }
                }
                if nonzero {
                    comp.insert((x, y, z), m);
                }
            }
        }
    }
    comp
}

#[cfg(test)]
pub(crate) mod testing {
    //! Small presentations shared by the kernel tests.
    use super::*;
    use crate::linalg::{one, rat};

    /// One object with `End = ℚ[x]/x²`, basis `(1, x)`, `tr(a + bx) = a`.
    pub fn dual_numbers() -> PresentedCategory {
        let mut m = RatMatrix::zeros(2, 4);
        // columns (f_i, g_j): (1,1) (1,x) (x,1) (x,x)
        m[(0, 0)] = one();
        m[(1, 1)] = one();
        m[(1, 2)] = one();
        PresentedCategory {
            name: "qx2".into(),
            objects: vec!["X".into()],
            hom_dims: vec![vec![2]],
            comp: BTreeMap::from([((0, 0, 0), m)]),
            ids: vec![vec![rat(1), rat(0)]],
            traces: Some(vec![vec![rat(1), rat(0)]]),
            unit: None,
            ambient_unit_end_dim: Some(1),
            tensor: None,
        }
    }

    /// One object with `End = F`.
    pub fn point() -> PresentedCategory {
        PresentedCategory {
            name: "point".into(),
            objects: vec!["1".into()],
            hom_dims: vec![vec![1]],
            comp: BTreeMap::from([((0, 0, 0), RatMatrix::from_i64(&[&[1]]))]),
            ids: vec![vec![rat(1)]],
            traces: Some(vec![vec![rat(1)]]),
            unit: Some(0),
            ambient_unit_end_dim: None,
            tensor: Some(TensorData {
                products: vec![vec![Some(0)]],
                unit: 0,
                morphisms: BTreeMap::from([((0, 0, 0, 0), RatMatrix::from_i64(&[&[1]]))]),
            }),
        }
    }

    /// Lines `L_d` for `d` in `lo..=hi`, `Hom(L_a, L_b) = F` iff `a = b`,
    /// `L_a ⊗ L_b = L_{a+b}` inside the range.
    pub fn graded_lines(lo: i64, hi: i64) -> PresentedCategory {
        crate::fixtures::graded_lines(lo, hi)
    }
}
