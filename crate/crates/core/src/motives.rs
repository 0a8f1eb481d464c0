//! Correspondences between algebras as classes in `K₀(A^op ⊗ B)_ℚ`, their
//! composition by tensoring over the middle algebra, the categorical trace
//! and intersection pairing, and motives `(A, e)`.
//!
//! Everything is computed on classes. Explicit projective complexes ride
//! along when available so the Hochschild complex can be built from them
//! as an independent check.

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::category::{build_comp, PresentedCategory};
use crate::complexes::ProjComplex;
use crate::error::{Error, Result};
use crate::hochschild::{hh_class, Coefficients};
use crate::linalg::{axpy, is_zero_vec, pairing_radical, rat, unit_vector, zero, RatMatrix, Rational, Span};
use crate::quiver::{standard_resolution, PathAlgebra, Quiver};

/// What the class computations need from an algebra: its primitive
/// idempotents and `counts[v][u] = dim e_u A e_v`. Path algebras keep their
/// quiver presentation; tensor products of them only keep this data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveAlgebra {
    pub name: String,
    pub vertices: Vec<String>,
    pub counts: Vec<Vec<usize>>,
    path: Option<Arc<PathAlgebra>>,
}

impl MotiveAlgebra {
    pub fn from_path_algebra(a: Arc<PathAlgebra>) -> Self {
        let n = a.vertex_count();
        Self {
            name: a.name().to_string(),
            vertices: a.quiver().vertices().to_vec(),
            counts: (0..n).map(|v| (0..n).map(|u| a.path_count(v, u)).collect()).collect(),
            path: Some(a),
        }
    }

    pub fn from_quiver(q: Quiver) -> Self {
        Self::from_path_algebra(Arc::new(PathAlgebra::new(q)))
    }

    /// The ground field ℚ, the unit for the tensor product.
    pub fn ground() -> Self {
        Self::from_quiver(Quiver::from_parts("Q", &["*"], &[]).expect("one vertex"))
    }

    pub fn path_algebra(&self) -> Option<&Arc<PathAlgebra>> {
        self.path.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn dim(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn is_ground(&self) -> bool {
        self.counts == [[1]]
    }

    /// `A ⊗ A'` on vertex pairs `(i, j)`, indexed `i·|A'₀| + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let m = other.vertex_count();
        let n = self.vertex_count() * m;
        Self {
            name: format!("{}⊗{}", self.name, other.name),
            vertices: self
                .vertices
                .iter()
                .flat_map(|a| other.vertices.iter().map(move |b| format!("({a},{b})")))
                .collect(),
            counts: (0..n)
                .map(|p| (0..n).map(|q| self.counts[p / m][q / m] * other.counts[p % m][q % m]).collect())
                .collect(),
            path: None,
        }
    }

    /// Size of `K₀(self^op ⊗ other)`.
    pub fn k0_len(&self, other: &Self) -> usize {
        self.vertex_count() * other.vertex_count()
    }

    /// Class of the diagonal bimodule, solved from its corner dimensions
    /// `dim e_v' A e_u'` against the Cartan matrix of `A^op ⊗ A`.
    pub fn diagonal_class(&self) -> Vec<Rational> {
        let n = self.vertex_count();
        let cartan = RatMatrix::from_fn(n * n, n * n, |r, c| {
            let ((v2, u2), (v, u)) = ((r / n, r % n), (c / n, c % n));
            rat((self.counts[v][v2] * self.counts[u2][u]) as i64)
        });
        let dims: Vec<Rational> = (0..n * n).map(|r| rat(self.counts[r % n][r / n] as i64)).collect();
        cartan.solve(&dims).expect("Cartan matrices of acyclic quivers are unitriangular")
    }
}

/// A formal combination `Σ aᵢ Xᵢ` of bimodule complexes from `source` to
/// `target`, reduced to its class. `terms` is `None` for class-only data.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub source: Arc<MotiveAlgebra>,
    pub target: Arc<MotiveAlgebra>,
    pub terms: Option<Vec<(Rational, ProjComplex)>>,
    pub class: Vec<Rational>,
}

impl PartialEq for Correspondence {
    /// Equality in `K₀`; representatives are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.class == other.class
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn check_middle(left: &MotiveAlgebra, right: &MotiveAlgebra) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::MiddleMismatch(left.name.clone(), right.name.clone()))
    }
}

impl Correspondence {
    pub fn from_class(source: Arc<MotiveAlgebra>, target: Arc<MotiveAlgebra>, class: Vec<Rational>) -> Result<Self> {
        check_len(source.k0_len(&target), class.len())?;
        Ok(Self {
            source,
            target,
            terms: None,
            class,
        })
    }

    pub fn zero(source: Arc<MotiveAlgebra>, target: Arc<MotiveAlgebra>) -> Self {
        let class = vec![zero(); source.k0_len(&target)];
        Self {
            source,
            target,
            terms: Some(Vec::new()),
            class,
        }
    }

    /// `Σ aᵢ Xᵢ` with every `Xᵢ` an `A`-`B` complex.
    pub fn from_terms(
        source: Arc<MotiveAlgebra>,
        target: Arc<MotiveAlgebra>,
        terms: Vec<(Rational, ProjComplex)>,
    ) -> Result<Self> {
        let (a, b) = match (source.path_algebra(), target.path_algebra()) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            _ => return Err(Error::Schema("explicit terms need path algebras on both sides".into())),
        };
        let mut class = vec![zero(); source.k0_len(&target)];
        for (c, x) in &terms {
            check_middle(&MotiveAlgebra::from_path_algebra(x.left_algebra().clone()), &source)?;
            check_middle(&MotiveAlgebra::from_path_algebra(x.right_algebra().clone()), &target)?;
            debug_assert!(**x.left_algebra() == *a && **x.right_algebra() == *b);
            axpy(&mut class, c, &x.k0_class());
        }
        Ok(Self {
            source,
            target,
            terms: Some(terms),
            class,
        })
    }

    /// `[P(v,u)]`, with the projective itself as representative when possible.
    pub fn projective(source: Arc<MotiveAlgebra>, target: Arc<MotiveAlgebra>, v: usize, u: usize) -> Result<Self> {
        if v >= source.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v} in {}", source.name)));
        }
        if u >= target.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{u} in {}", target.name)));
        }
        match (source.path_algebra(), target.path_algebra()) {
            (Some(a), Some(b)) => {
                let p = ProjComplex::single(a.clone(), b.clone(), v, u, 0);
                Self::from_terms(source, target, vec![(rat(1), p)])
            }
            _ => {
                let class = unit_vector(source.k0_len(&target), v * target.vertex_count() + u);
                Self::from_class(source, target, class)
            }
        }
    }

    /// The diagonal bimodule, represented by the standard resolution.
    pub fn identity(a: Arc<MotiveAlgebra>) -> Self {
        match a.path_algebra() {
            Some(p) => {
                let res = standard_resolution(p);
                Self::from_terms(a.clone(), a.clone(), vec![(rat(1), res)]).expect("resolution lives over A")
            }
            None => {
                let class = a.diagonal_class();
                Self::from_class(a.clone(), a, class).expect("diagonal class has the right length")
            }
        }
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.class)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self
                .terms
                .as_ref()
                .map(|ts| ts.iter().map(|(c, x)| (c * s, x.clone())).collect()),
            class: self.class.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_middle(&self.source, &other.source)?;
        check_middle(&self.target, &other.target)?;
        let terms = match (&self.terms, &other.terms) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        Ok(Self {
            source: self.source.clone(),
            target: self.target.clone(),
            terms,
            class: self.class.iter().zip(&other.class).map(|(a, b)| a + b).collect(),
        })
    }

    /// Adds `coefficient · cone(id_X)`, which has class zero.
    pub fn with_cone_term(&self, coefficient: Rational, x: &ProjComplex) -> Result<Self> {
        let cone = Self::from_terms(
            self.source.clone(),
            self.target.clone(),
            vec![(coefficient, x.cone_of_identity())],
        )?;
        debug_assert!(cone.is_zero());
        match self.terms {
            Some(_) => self.add(&cone),
            None => Ok(self.clone()),
        }
    }
}

/// `X ⊗_B Y` for `X: A → B`, `Y: B → C`. On classes,
/// `[P(v,w)] ⊗ [P(w',u)] = dim(e_w B e_w') · [P(v,u)]`.
pub fn compose(x: &Correspondence, y: &Correspondence) -> Result<Correspondence> {
    check_middle(&x.target, &y.source)?;
    let (mb, mc) = (x.target.vertex_count(), y.target.vertex_count());
    let mid = &x.target.counts;
    let mut class = vec![zero(); x.source.k0_len(&y.target)];
    for (i, a) in x.class.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        let (v, w) = (i / mb, i % mb);
        for (j, b) in y.class.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let (w2, u) = (j / mc, j % mc);
            let paths = mid[w2][w];
            if paths > 0 {
                class[v * mc + u] += a * b * rat(paths as i64);
            }
        }
    }
    let terms = match (&x.terms, &y.terms) {
        (Some(xs), Some(ys)) => {
            let mut out = Vec::with_capacity(xs.len() * ys.len());
            for (a, xi) in xs {
                for (b, yj) in ys {
                    out.push((a * b, xi.tensor_over_middle(yj)?));
                }
            }
            Some(out)
        }
        _ => None,
    };
    Ok(Correspondence {
        source: x.source.clone(),
        target: y.target.clone(),
        terms,
        class,
    })
}

/// `tr(Z) = Σ cls(v,u) · dim(e_u A e_v)`, the Euler characteristic of
/// `HH(A; Z)`.
pub fn categorical_trace(z: &Correspondence) -> Result<Rational> {
    check_middle(&z.source, &z.target)?;
    let n = z.source.vertex_count();
    Ok(z
        .class
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(zero(), |acc, (i, c)| acc + c * rat(z.source.counts[i / n][i % n] as i64)))
}

/// `⟨X·Y⟩ = tr(X ⊗_B Y)` for `X: A → B`, `Y: B → A`.
pub fn intersection_number(x: &Correspondence, y: &Correspondence) -> Result<Rational> {
    check_middle(&y.target, &x.source)?;
    categorical_trace(&compose(x, y)?)
}

/// `Σ aᵢ bⱼ χ(HH(A; Xᵢ ⊗_B Yⱼ))` from the explicit Hochschild complexes.
/// Slow; used to cross-check [`intersection_number`].
pub fn explicit_intersection_number(x: &Correspondence, y: &Correspondence) -> Result<Rational> {
    check_middle(&y.target, &x.source)?;
    let z = compose(x, y)?;
    let (Some(terms), Some(a)) = (&z.terms, z.source.path_algebra()) else {
        return Err(Error::Schema(format!("{} → {}: class-only correspondence", x.source.name, x.target.name)));
    };
    let mut total = zero();
    for (c, w) in terms {
        if !c.is_zero() {
            total += c * hh_class(a, &Coefficients::Complex(w.clone()))?;
        }
    }
    Ok(total)
}

/// External product over the tensor algebras:
/// `[P(v,u)] ⊠ [P(v',u')] = [P((v,v'),(u,u'))]`.
pub fn external_tensor(x: &Correspondence, y: &Correspondence) -> Correspondence {
    let source = Arc::new(x.source.tensor(&y.source));
    let target = Arc::new(x.target.tensor(&y.target));
    let (nb, nb2) = (x.target.vertex_count(), y.target.vertex_count());
    let mut class = vec![zero(); source.k0_len(&target)];
    for (i, a) in x.class.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.class.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let (v, u, v2, u2) = (i / nb, i % nb, j / nb2, j % nb2);
            class[(v * y.source.vertex_count() + v2) * (nb * nb2) + u * nb2 + u2] = a * b;
        }
    }
    Correspondence {
        source,
        target,
        terms: None,
        class,
    }
}

/// An object `(A, e)` with `e ∘ e = e` in `K₀`.
#[derive(Clone, Debug, PartialEq)]
pub struct NcMotive {
    pub label: String,
    pub algebra: Arc<MotiveAlgebra>,
    pub idempotent: Correspondence,
}

impl NcMotive {
    pub fn new(label: impl Into<String>, idempotent: Correspondence) -> Result<Self> {
        let label = label.into();
        if !idempotent.is_endomorphism() {
            return Err(Error::IdempotentInvalid(format!("{label}: not an endomorphism")));
        }
        if compose(&idempotent, &idempotent)? != idempotent {
            return Err(Error::IdempotentInvalid(format!("{label}: e ∘ e ≠ e")));
        }
        Ok(Self {
            label,
            algebra: idempotent.source.clone(),
            idempotent,
        })
    }

    /// `(A, id)`.
    pub fn of_algebra(a: Arc<MotiveAlgebra>) -> Self {
        Self {
            label: a.name.clone(),
            idempotent: Correspondence::identity(a.clone()),
            algebra: a,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.algebra.is_ground() && self.idempotent.class == [rat(1)]
    }
}

/// `e ∘ K₀(A^op ⊗ B) ∘ e'` as a subspace of the class space.
pub fn hom_space(m: &NcMotive, n: &NcMotive) -> Result<Span> {
    let len = m.algebra.k0_len(&n.algebra);
    let mut images = Vec::with_capacity(len);
    for i in 0..len {
        let f = Correspondence::from_class(m.algebra.clone(), n.algebra.clone(), unit_vector(len, i))?;
        images.push(compress(m, n, &f)?.class);
    }
    Ok(Span::new(len, &images))
}

fn compress(m: &NcMotive, n: &NcMotive, f: &Correspondence) -> Result<Correspondence> {
    compose(&compose(&m.idempotent, f)?, &n.idempotent)
}

/// Gram matrix of `(f, g) ↦ tr(g ∘ f)`: rows run over the basis of
/// `Hom(m, n)`, columns over that of `Hom(n, m)`.
pub fn gram_matrix(m: &NcMotive, n: &NcMotive) -> Result<RatMatrix> {
    let (fs, gs) = (hom_space(m, n)?, hom_space(n, m)?);
    let mut gram = RatMatrix::zeros(fs.dim(), gs.dim());
    for (i, f) in fs.basis().iter().enumerate() {
        let f = Correspondence::from_class(m.algebra.clone(), n.algebra.clone(), f.clone())?;
        for (j, g) in gs.basis().iter().enumerate() {
            let g = Correspondence::from_class(n.algebra.clone(), m.algebra.clone(), g.clone())?;
            gram[(i, j)] = intersection_number(&f, &g)?;
        }
    }
    Ok(gram)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramReport {
    pub source: String,
    pub target: String,
    pub matrix: Vec<Vec<String>>,
    pub rank: usize,
    pub radical_dim: usize,
}

pub fn gram_report(m: &NcMotive, n: &NcMotive) -> Result<GramReport> {
    let g = gram_matrix(m, n)?;
    let rank = g.rank();
    Ok(GramReport {
        source: m.label.clone(),
        target: n.label.clone(),
        matrix: (0..g.rows())
            .map(|r| g.row(r).iter().map(crate::linalg::format_rational).collect())
            .collect(),
        rank,
        radical_dim: g.rows() - rank,
    })
}

/// Whether `⟨X·Y⟩ = 0` for every `Y: (B,e') → (A,e)` between the motives of
/// `context` over the source and target algebras of `x`. The pairing is
/// bilinear, so a basis of each hom space suffices.
pub fn is_numerically_trivial(x: &Correspondence, context: &[NcMotive]) -> Result<bool> {
    let sources: Vec<&NcMotive> = context.iter().filter(|m| *m.algebra == *x.source).collect();
    let targets: Vec<&NcMotive> = context.iter().filter(|m| *m.algebra == *x.target).collect();
    if sources.is_empty() || targets.is_empty() {
        return Err(Error::MotiveNotInContext(format!("{} → {}", x.source.name, x.target.name)));
    }
    for m in &sources {
        for n in &targets {
            let f = compress(m, n, x)?;
            for g in hom_space(n, m)?.basis() {
                let g = Correspondence::from_class(n.algebra.clone(), m.algebra.clone(), g.clone())?;
                if !intersection_number(&f, &g)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Classes in `Hom(m, n)` that pair to zero with all of `Hom(n, m)`.
pub fn numerical_radical(m: &NcMotive, n: &NcMotive) -> Result<Span> {
    let fs = hom_space(m, n)?;
    let coords = pairing_radical(&gram_matrix(m, n)?);
    let vectors: Vec<Vec<Rational>> = coords.iter().map(|c| fs.combine(c)).collect();
    Ok(Span::new(fs.ambient(), &vectors))
}

/// The full subcategory of NChow on `objects`: compressed class bases,
/// structure constants from [`compose`], traces from [`categorical_trace`].
pub fn export_presented_category(name: &str, objects: &[NcMotive]) -> Result<PresentedCategory> {
    if objects.is_empty() {
        return Err(Error::Schema("export needs at least one motive".into()));
    }
    for m in objects {
        if compose(&m.idempotent, &m.idempotent)? != m.idempotent {
            return Err(Error::IdempotentInvalid(m.label.clone()));
        }
    }
    let n = objects.len();
    let mut spans = Vec::with_capacity(n);
    for m in objects {
        let row: Result<Vec<Span>> = objects.iter().map(|o| hom_space(m, o)).collect();
        spans.push(row?);
    }
    let hom_dims: Vec<Vec<usize>> = spans.iter().map(|r| r.iter().map(Span::dim).collect()).collect();
    let corr = |x: usize, y: usize, v: &[Rational]| {
        Correspondence::from_class(objects[x].algebra.clone(), objects[y].algebra.clone(), v.to_vec())
            .expect("basis vectors have class length")
    };
    let mut failure = None;
    let comp = build_comp(&hom_dims, |x, y, z, i, j| {
        let f = corr(x, y, &spans[x][y].basis()[i]);
        let g = corr(y, z, &spans[y][z].basis()[j]);
        match compose(&f, &g) {
            Ok(gf) => spans[x][z].coordinates(&gf.class).expect("compressed homs compose"),
            Err(e) => {
                failure.get_or_insert(e);
                vec![zero(); hom_dims[x][z]]
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let ids = (0..n)
        .map(|x| spans[x][x].coordinates(&objects[x].idempotent.class).expect("e ∈ e∘End∘e"))
        .collect();
    let mut traces = Vec::with_capacity(n);
    for (x, m) in objects.iter().enumerate() {
        let row: Result<Vec<Rational>> = spans[x][x]
            .basis()
            .iter()
            .map(|v| categorical_trace(&corr(x, x, v)))
            .collect();
        traces.push(row?);
        debug_assert!(m.idempotent.is_endomorphism());
    }
    let unit = objects.iter().position(NcMotive::is_unit);
    Ok(PresentedCategory {
        name: name.to_string(),
        objects: objects.iter().map(|m| m.label.clone()).collect(),
        hom_dims,
        comp,
        ids,
        traces: Some(traces),
        unit,
        // End of the unit of NChow is K₀(ℚ)_ℚ = ℚ
        ambient_unit_end_dim: if unit.is_none() { Some(1) } else { None },
        tensor: None,
    })
}
