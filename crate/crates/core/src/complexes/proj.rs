use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use super::vect::{sign, VectComplex};
use crate::error::{Error, Result};
use crate::linalg::{one, rat, zero, RatMatrix, Rational};
use crate::quiver::{Bimodule, PathAlgebra};

/// Element of `A ⊗ B` on path pairs: a bimodule map
/// `P(v,u) → P(v',u')` is the image of the generator `e_v ⊗ e_u`, which
/// lies in `e_v A e_v' ⊗ e_u' B e_u`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiElement(BTreeMap<(usize, usize), Rational>);

impl BiElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(coeff: Rational, left_path: usize, right_path: usize) -> Self {
        let mut e = Self::zero();
        e.add_term(coeff, left_path, right_path);
        e
    }

    pub fn add_term(&mut self, coeff: Rational, left_path: usize, right_path: usize) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.0.entry((left_path, right_path)).or_insert_with(zero);
        *slot += coeff;
        if slot.is_zero() {
            self.0.remove(&(left_path, right_path));
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (&(p, q), c) in &other.0 {
            self.add_term(c.clone(), p, q);
        }
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(p, q), c) in &self.0 {
            out.add_term(c * s, p, q);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, usize, usize)> {
        self.0.iter().map(|(&(p, q), c)| (c, p, q))
    }

    /// Generator image of `second ∘ first`: `Σ (p p') ⊗ (q' q)`.
    pub fn then(&self, second: &Self, left: &PathAlgebra, right: &PathAlgebra) -> Self {
        let mut out = Self::zero();
        for (c, p, q) in self.terms() {
            for (c2, p2, q2) in second.terms() {
                if let (Some(pp), Some(qq)) = (left.mul_basis(p, p2), right.mul_basis(q2, q)) {
                    out.add_term(c * c2, pp, qq);
                }
            }
        }
        out
    }
}

type DiffMatrix = Vec<Vec<BiElement>>;

/// Bounded complex of finitely generated projective A-B-bimodules. Term `n`
/// is `⊕ P(v,u)` over its summand list; `d_n[i][j]` maps summand `j` of
/// degree `n` to summand `i` of degree `n-1`.
#[derive(Clone, Debug)]
pub struct ProjComplex {
    left: Arc<PathAlgebra>,
    right: Arc<PathAlgebra>,
    terms: BTreeMap<i64, Vec<(usize, usize)>>,
    differentials: BTreeMap<i64, DiffMatrix>,
}

impl ProjComplex {
    pub fn new(
        left: Arc<PathAlgebra>,
        right: Arc<PathAlgebra>,
        terms: BTreeMap<i64, Vec<(usize, usize)>>,
        differentials: BTreeMap<i64, DiffMatrix>,
    ) -> Result<Self> {
        let terms: BTreeMap<i64, Vec<(usize, usize)>> =
            terms.into_iter().filter(|(_, s)| !s.is_empty()).collect();
        for summands in terms.values() {
            for &(v, u) in summands {
                if v >= left.vertex_count() {
                    return Err(Error::UnknownVertex(format!("{v} in {}", left.name())));
                }
                if u >= right.vertex_count() {
                    return Err(Error::UnknownVertex(format!("{u} in {}", right.name())));
                }
            }
        }
        let c = Self {
            left,
            right,
            terms,
            differentials: BTreeMap::new(),
        };
        let mut checked = BTreeMap::new();
        for (n, d) in differentials {
            let (src, tgt) = (c.summands(n), c.summands(n - 1));
            if d.len() != tgt.len() || d.iter().any(|row| row.len() != src.len()) {
                return Err(Error::DimensionMismatch {
                    expected: tgt.len() * src.len(),
                    found: d.iter().map(Vec::len).sum(),
                });
            }
            for (i, row) in d.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    c.check_entry(src[j], tgt[i], x)?;
                }
            }
            if d.iter().flatten().any(|x| !x.is_zero()) {
                checked.insert(n, d);
            }
        }
        let c = Self {
            differentials: checked,
            ..c
        };
        for &n in c.differentials.keys() {
            if c.differentials.contains_key(&(n - 1)) && !c.compose_differentials(n).iter().flatten().all(BiElement::is_zero) {
                return Err(Error::NotAComplex(n));
            }
        }
        Ok(c)
    }

    fn check_entry(&self, src: (usize, usize), tgt: (usize, usize), x: &BiElement) -> Result<()> {
        let ((v, u), (v2, u2)) = (src, tgt);
        for (_, p, q) in x.terms() {
            let (pp, qq) = (self.left.path(p), self.right.path(q));
            if pp.target != v || pp.source != v2 || qq.source != u || qq.target != u2 {
                return Err(Error::Schema(format!(
                    "differential entry {}⊗{} does not map P({v},{u}) to P({v2},{u2})",
                    self.left.path_name(p),
                    self.right.path_name(q)
                )));
            }
        }
        Ok(())
    }

    fn compose_differentials(&self, n: i64) -> DiffMatrix {
        let (first, second) = (&self.differentials[&n], &self.differentials[&(n - 1)]);
        let (src, tgt) = (self.summands(n).len(), self.summands(n - 2).len());
        let mid = self.summands(n - 1).len();
        (0..tgt)
            .map(|k| {
                (0..src)
                    .map(|j| {
                        let mut acc = BiElement::zero();
                        for i in 0..mid {
                            acc.add(&first[i][j].then(&second[k][i], &self.left, &self.right));
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// `P(v,u)` placed in a single degree.
    pub fn single(left: Arc<PathAlgebra>, right: Arc<PathAlgebra>, v: usize, u: usize, degree: i64) -> Self {
        Self::new(left, right, BTreeMap::from([(degree, vec![(v, u)])]), BTreeMap::new())
            .expect("single projective")
    }

    pub fn zero(left: Arc<PathAlgebra>, right: Arc<PathAlgebra>) -> Self {
        Self {
            left,
            right,
            terms: BTreeMap::new(),
            differentials: BTreeMap::new(),
        }
    }

    pub fn left_algebra(&self) -> &Arc<PathAlgebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<PathAlgebra> {
        &self.right
    }

    pub fn terms(&self) -> &BTreeMap<i64, Vec<(usize, usize)>> {
        &self.terms
    }

    pub fn summands(&self, n: i64) -> &[(usize, usize)] {
        self.terms.get(&n).map_or(&[], Vec::as_slice)
    }

    /// `d_n` with explicit zero entries where none are stored.
    pub fn differential(&self, n: i64) -> DiffMatrix {
        self.differentials.get(&n).cloned().unwrap_or_else(|| {
            vec![vec![BiElement::zero(); self.summands(n).len()]; self.summands(n - 1).len()]
        })
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree shift `C[k]_n = C_{n-k}`, differential multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Self {
        let s = rat(sign(k));
        Self {
            left: self.left.clone(),
            right: self.right.clone(),
            terms: self.terms.iter().map(|(&n, t)| (n + k, t.clone())).collect(),
            differentials: self
                .differentials
                .iter()
                .map(|(&n, d)| (n + k, d.iter().map(|r| r.iter().map(|x| x.scaled(&s)).collect()).collect()))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::MiddleMismatch(
                format!("{}-{}", self.left.name(), self.right.name()),
                format!("{}-{}", other.left.name(), other.right.name()),
            ));
        }
        let mut terms = self.terms.clone();
        for (&n, t) in &other.terms {
            terms.entry(n).or_default().extend(t.iter().copied());
        }
        let mut differentials = BTreeMap::new();
        let degrees: Vec<i64> = self.differentials.keys().chain(other.differentials.keys()).copied().collect();
        for n in degrees {
            let (a, b) = (self.differential(n), other.differential(n));
            let (a_src, b_src) = (self.summands(n).len(), other.summands(n).len());
            let mut d = Vec::new();
            for row in a {
                let mut r = row;
                r.extend(vec![BiElement::zero(); b_src]);
                d.push(r);
            }
            for row in b {
                let mut r = vec![BiElement::zero(); a_src];
                r.extend(row);
                d.push(r);
            }
            differentials.insert(n, d);
        }
        Self::new(self.left.clone(), self.right.clone(), terms, differentials)
    }

    /// Mapping cone of the identity: `Cone_n = C_{n-1} ⊕ C_n`,
    /// `d(x, y) = (-dx, x + dy)`. Contractible.
    pub fn cone_of_identity(&self) -> Self {
        let mut terms = BTreeMap::new();
        let degrees: Vec<i64> = self.terms.keys().flat_map(|&n| [n, n + 1]).collect();
        for &n in &degrees {
            let mut t = self.summands(n - 1).to_vec();
            t.extend_from_slice(self.summands(n));
            terms.insert(n, t);
        }
        let mut differentials = BTreeMap::new();
        for &n in &degrees {
            let (prev, cur) = (self.summands(n - 1).len(), self.summands(n).len());
            let (prev2, _) = (self.summands(n - 2).len(), ());
            // source C_{n-1} ⊕ C_n, target C_{n-2} ⊕ C_{n-1}
            let d_prev = self.differential(n - 1);
            let d_cur = self.differential(n);
            let mut d = vec![vec![BiElement::zero(); prev + cur]; prev2 + prev];
            for i in 0..prev2 {
                for j in 0..prev {
                    d[i][j] = d_prev[i][j].scaled(&-one());
                }
            }
            for i in 0..prev {
                let (v, u) = self.summands(n - 1)[i];
                d[prev2 + i][i] = BiElement::term(one(), self.left.idempotent(v), self.right.idempotent(u));
                for j in 0..cur {
                    d[prev2 + i][prev + j] = d_cur[i][j].clone();
                }
            }
            differentials.insert(n, d);
        }
        Self::new(self.left.clone(), self.right.clone(), terms, differentials)
            .expect("cone of the identity is a complex")
    }

    /// Class in `K₀(A^op ⊗ B)`: alternating sum of summand multiplicities,
    /// indexed by `v · |B₀| + u`.
    pub fn k0_class(&self) -> Vec<Rational> {
        let nb = self.right.vertex_count();
        let mut class = vec![zero(); self.left.vertex_count() * nb];
        for (&n, summands) in &self.terms {
            for &(v, u) in summands {
                class[v * nb + u] += rat(sign(n));
            }
        }
        class
    }

    /// Matrix of the bimodule map `P(v,u) → P(v',u')` with generator image `x`,
    /// in the path-pair bases of [`Bimodule::projective`].
    pub fn map_matrix(&self, src: (usize, usize), tgt: (usize, usize), x: &BiElement) -> RatMatrix {
        let (la, ra) = (&self.left, &self.right);
        let (src_l, src_r) = (la.paths_from(src.0), ra.paths_to(src.1));
        let (tgt_l, tgt_r) = (la.paths_from(tgt.0), ra.paths_to(tgt.1));
        let tl: HashMap<usize, usize> = tgt_l.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let tr: HashMap<usize, usize> = tgt_r.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut m = RatMatrix::zeros(tgt_l.len() * tgt_r.len(), src_l.len() * src_r.len());
        for (ia, &a) in src_l.iter().enumerate() {
            for (ib, &b) in src_r.iter().enumerate() {
                let col = ia * src_r.len() + ib;
                for (c, p, q) in x.terms() {
                    if let (Some(ap), Some(qb)) = (la.mul_basis(a, p), ra.mul_basis(q, b)) {
                        m[(tl[&ap] * tgt_r.len() + tr[&qb], col)] += c;
                    }
                }
            }
        }
        m
    }

    /// Realizes every term as an explicit bimodule.
    pub fn expand(&self) -> BimoduleComplex {
        let mut terms = BTreeMap::new();
        let mut offsets: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (&n, summands) in &self.terms {
            let mut total = Bimodule::zero(self.left.clone(), self.right.clone());
            let mut offs = Vec::new();
            for &(v, u) in summands {
                offs.push(total.dim());
                total = total.direct_sum(&Bimodule::projective(self.left.clone(), self.right.clone(), v, u));
            }
            offsets.insert(n, offs);
            terms.insert(n, total);
        }
        let mut differentials = BTreeMap::new();
        for (&n, d) in &self.differentials {
            let (src, tgt) = (self.summands(n), self.summands(n - 1));
            let mut m = RatMatrix::zeros(terms[&(n - 1)].dim(), terms[&n].dim());
            for (i, row) in d.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        let block = self.map_matrix(src[j], tgt[i], x);
                        m.set_block(offsets[&(n - 1)][i], offsets[&n][j], &block);
                    }
                }
            }
            differentials.insert(n, m);
        }
        BimoduleComplex {
            left: self.left.clone(),
            right: self.right.clone(),
            terms,
            differentials,
        }
    }

    /// Underlying complex of vector spaces.
    pub fn to_vect(&self) -> VectComplex {
        self.expand().to_vect()
    }

    /// Total complex of the termwise tensor `X ⊗_B Y`. The summand
    /// `P(v,w) ⊗_B P(w',u)` splits as one `P(v,u)` per path of `e_w B e_w'`.
    pub fn tensor_over_middle(&self, other: &Self) -> Result<Self> {
        if self.right != other.left {
            return Err(Error::MiddleMismatch(
                self.right.name().to_string(),
                other.left.name().to_string(),
            ));
        }
        let mid = &self.right;
        // (x degree, x summand, y summand, middle path) per total degree
        type Key = (i64, usize, usize, usize);
        let mut layout: BTreeMap<i64, Vec<Key>> = BTreeMap::new();
        for (&p, xs) in &self.terms {
            for (&q, ys) in &other.terms {
                for (i, &(_, w)) in xs.iter().enumerate() {
                    for (j, &(w2, _)) in ys.iter().enumerate() {
                        for r in mid.paths_between(w2, w) {
                            layout.entry(p + q).or_default().push((p, i, j, r));
                        }
                    }
                }
            }
        }
        let index: HashMap<(i64, Key), usize> = layout
            .iter()
            .flat_map(|(&n, keys)| keys.iter().enumerate().map(move |(k, &key)| ((n, key), k)))
            .collect();
        let terms: BTreeMap<i64, Vec<(usize, usize)>> = layout
            .iter()
            .map(|(&n, keys)| {
                let s = keys
                    .iter()
                    .map(|&(p, i, j, _)| (self.summands(p)[i].0, other.summands(n - p)[j].1))
                    .collect();
                (n, s)
            })
            .collect();
        let mut differentials: BTreeMap<i64, DiffMatrix> = BTreeMap::new();
        for (&n, keys) in &layout {
            let Some(targets) = layout.get(&(n - 1)) else { continue };
            let mut d = vec![vec![BiElement::zero(); keys.len()]; targets.len()];
            for (col, &(p, i, j, r)) in keys.iter().enumerate() {
                let q = n - p;
                let (v, _) = self.summands(p)[i];
                let (_, u) = other.summands(q)[j];
                // d_X ⊗ 1
                if let Some(dx) = self.differentials.get(&p) {
                    for (i2, row) in dx.iter().enumerate() {
                        for (c, a, b) in row[i].terms() {
                            if let Some(br) = mid.mul_basis(b, r) {
                                let row_idx = index[&(n - 1, (p - 1, i2, j, br))];
                                d[row_idx][col].add_term(c.clone(), a, other.right.idempotent(u));
                            }
                        }
                    }
                }
                // (-1)^p 1 ⊗ d_Y
                if let Some(dy) = other.differentials.get(&q) {
                    let s = rat(sign(p));
                    for (j2, row) in dy.iter().enumerate() {
                        for (c, a, b) in row[j].terms() {
                            if let Some(ra) = mid.mul_basis(r, a) {
                                let row_idx = index[&(n - 1, (p, i, j2, ra))];
                                d[row_idx][col].add_term(c * &s, self.left.idempotent(v), b);
                            }
                        }
                    }
                }
            }
            differentials.insert(n, d);
        }
        Self::new(self.left.clone(), other.right.clone(), terms, differentials)
    }
}

/// Bounded complex of explicit bimodules with vector-space differentials.
#[derive(Clone, Debug)]
pub struct BimoduleComplex {
    pub left: Arc<PathAlgebra>,
    pub right: Arc<PathAlgebra>,
    pub terms: BTreeMap<i64, Bimodule>,
    pub differentials: BTreeMap<i64, RatMatrix>,
}

impl BimoduleComplex {
    pub fn concentrated(module: Bimodule) -> Self {
        Self {
            left: module.left_algebra().clone(),
            right: module.right_algebra().clone(),
            terms: BTreeMap::from([(0, module)]),
            differentials: BTreeMap::new(),
        }
    }

    pub fn term_dim(&self, n: i64) -> usize {
        self.terms.get(&n).map_or(0, Bimodule::dim)
    }

    pub fn differential(&self, n: i64) -> RatMatrix {
        self.differentials
            .get(&n)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zeros(self.term_dim(n - 1), self.term_dim(n)))
    }

    pub fn to_vect(&self) -> VectComplex {
        VectComplex::new(
            self.terms.iter().map(|(&n, m)| (n, m.dim())).collect(),
            self.differentials.clone(),
        )
        .expect("expanded projective complexes are complexes")
    }

    /// True when every differential commutes with both actions.
    pub fn differentials_are_bimodule_maps(&self) -> bool {
        self.differentials.iter().all(|(&n, d)| {
            let (src, tgt) = (&self.terms[&n], &self.terms[&(n - 1)]);
            (0..self.left.dim()).all(|a| d.mul(src.left_action(a)) == tgt.left_action(a).mul(d))
                && (0..self.right.dim()).all(|b| d.mul(src.right_action(b)) == tgt.right_action(b).mul(d))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn algebra(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Arc<PathAlgebra> {
        Arc::new(PathAlgebra::new(Quiver::from_parts(name, vertices, arrows).unwrap()))
    }

    fn a2() -> Arc<PathAlgebra> {
        algebra("a2", &["1", "2"], &[("alpha", "1", "2")])
    }

    #[test]
    fn unit_tensor() {
        let k = algebra("pt", &["*"], &[]);
        let p = ProjComplex::single(k.clone(), k.clone(), 0, 0, 0);
        let t = p.tensor_over_middle(&p).unwrap();
        assert_eq!(t.terms(), &BTreeMap::from([(0, vec![(0, 0)])]));
    }

    #[test]
    fn contraction_counts_middle_paths() {
        let a = a2();
        for u in 0..2 {
            let x = ProjComplex::single(a.clone(), a.clone(), 0, 1, 0);
            let y = ProjComplex::single(a.clone(), a.clone(), 1, u, 0);
            let t = x.tensor_over_middle(&y).unwrap();
            assert_eq!(t.summands(0), &[(0, u)]);
            let x = ProjComplex::single(a.clone(), a.clone(), 0, 0, 0);
            assert!(x.tensor_over_middle(&y).unwrap().is_zero());
        }
    }

    #[test]
    fn tensor_of_multi_degree_complexes() {
        let a = a2();
        let res = crate::quiver::standard_resolution(&a);
        let cone = res.cone_of_identity();
        // both factors spread over several degrees
        let t = cone.tensor_over_middle(&res).unwrap();
        assert!(t.k0_class().iter().all(|c| c.is_zero()));
        assert!(t.to_vect().is_acyclic());
        let rr = res.tensor_over_middle(&res).unwrap();
        assert_eq!(rr.k0_class(), res.k0_class());
        assert_eq!(rr.to_vect().homology_dims(), res.to_vect().homology_dims());
    }

    #[test]
    fn middle_mismatch() {
        let a = a2();
        let k = algebra("pt", &["*"], &[]);
        let x = ProjComplex::single(a.clone(), a.clone(), 0, 0, 0);
        let y = ProjComplex::single(k.clone(), k, 0, 0, 0);
        assert!(matches!(x.tensor_over_middle(&y), Err(Error::MiddleMismatch(..))));
    }

    #[test]
    fn cone_is_contractible() {
        let a = a2();
        let p = ProjComplex::single(a.clone(), a.clone(), 0, 0, 0);
        let cone = p.cone_of_identity();
        assert!(cone.k0_class().iter().all(Zero::is_zero));
        assert!(cone.to_vect().is_acyclic());
        assert!(cone.expand().differentials_are_bimodule_maps());
    }

    #[test]
    fn rejects_entries_outside_the_corner() {
        let a = a2();
        let alpha = a.parse_path("alpha").unwrap();
        let e1 = a.idempotent(0);
        // P(1,1) -> P(2,1): generator must go to e_1 A e_2 ⊗ ..., which is zero; alpha ∈ e_2 A e_1
        let d = vec![vec![BiElement::term(one(), alpha, e1)]];
        let err = ProjComplex::new(
            a.clone(),
            a.clone(),
            BTreeMap::from([(1, vec![(0, 0)]), (0, vec![(1, 0)])]),
            BTreeMap::from([(1, d)]),
        );
        assert!(matches!(err, Err(Error::Schema(_))));
    }

    #[test]
    fn rejects_nonzero_square() {
        let a = algebra("pt", &["*"], &[]);
        let e = BiElement::term(one(), 0, 0);
        let err = ProjComplex::new(
            a.clone(),
            a.clone(),
            BTreeMap::from([(2, vec![(0, 0)]), (1, vec![(0, 0)]), (0, vec![(0, 0)])]),
            BTreeMap::from([(2, vec![vec![e.clone()]]), (1, vec![vec![e]])]),
        );
        assert_eq!(err.unwrap_err(), Error::NotAComplex(2));
    }

    #[test]
    fn shift_negates_class() {
        let a = a2();
        let p = ProjComplex::single(a.clone(), a.clone(), 1, 0, 0);
        let s = p.shift(1);
        let neg: Vec<Rational> = p.k0_class().iter().map(|x| -x).collect();
        assert_eq!(s.k0_class(), neg);
    }
}
