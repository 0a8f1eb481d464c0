use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{Bimodule, PathAlgebra};
use crate::complexes::{BiElement, ProjComplex, VectComplex};
use crate::error::Result;
use crate::linalg::{one, RatMatrix};

/// Basis `[P(v,u)]` of `K₀(A^op ⊗ B)`, lexicographic in declared vertex order.
pub fn k0_basis(a: &PathAlgebra, b: &PathAlgebra) -> Vec<(usize, usize)> {
    (0..a.vertex_count())
        .flat_map(|v| (0..b.vertex_count()).map(move |u| (v, u)))
        .collect()
}

/// `dim P(v,u) = dim(A e_v) · dim(e_u B)`.
pub fn projective_dims(a: &PathAlgebra, b: &PathAlgebra, v: &str, u: &str) -> Result<usize> {
    let v = a.quiver().vertex_index(v)?;
    let u = b.quiver().vertex_index(u)?;
    Ok(a.paths_from(v).len() * b.paths_to(u).len())
}

/// `0 → ⊕_α P(t(α), s(α)) → ⊕_v P(v,v) → 0` in degrees 1 and 0, the
/// α-generator going to `α⊗e_s(α) − e_t(α)⊗α`.
pub fn standard_resolution(a: &Arc<PathAlgebra>) -> ProjComplex {
    let q = a.quiver();
    let degree0: Vec<(usize, usize)> = (0..q.vertex_count()).map(|v| (v, v)).collect();
    let degree1: Vec<(usize, usize)> = (0..q.arrow_count())
        .map(|i| {
            let (s, t) = q.ends(i);
            (t, s)
        })
        .collect();
    let mut d = vec![vec![BiElement::zero(); degree1.len()]; degree0.len()];
    for i in 0..q.arrow_count() {
        let (s, t) = q.ends(i);
        let arrow = a.paths().iter().position(|p| p.arrows == [i]).expect("arrows are paths");
        d[s][i] = BiElement::term(one(), arrow, a.idempotent(s));
        d[t][i] = BiElement::term(-one(), a.idempotent(t), arrow);
    }
    ProjComplex::new(
        a.clone(),
        a.clone(),
        BTreeMap::from([(0, degree0), (1, degree1)]),
        BTreeMap::from([(1, d)]),
    )
    .expect("the standard resolution is a complex")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothProperReport {
    pub algebra: String,
    pub dim: usize,
    pub proper: bool,
    pub smooth: bool,
    pub resolution_length: usize,
    /// Homology of the unaugmented resolution.
    pub homology: BTreeMap<i64, usize>,
    pub augmentation_is_bimodule_map: bool,
}

/// Multiplication `P(v,v) → A`, `a ⊗ b ↦ ab`, summed over the degree-0 term.
fn augmentation(a: &PathAlgebra, degree0: &[(usize, usize)], total: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(a.dim(), total);
    let mut offset = 0;
    for &(v, u) in degree0 {
        let (lp, rp) = (a.paths_from(v), a.paths_to(u));
        for (i, &p) in lp.iter().enumerate() {
            for (j, &q) in rp.iter().enumerate() {
                if let Some(k) = a.mul_basis(p, q) {
                    m[(k, offset + i * rp.len() + j)] = one();
                }
            }
        }
        offset += lp.len() * rp.len();
    }
    m
}

/// Properness is finite dimension; smoothness is certified by exactness of
/// the augmented standard resolution `P₁ → P₀ → A → 0`.
pub fn check_smooth_proper(a: &Arc<PathAlgebra>) -> SmoothProperReport {
    let res = standard_resolution(a);
    let expanded = res.expand();
    let unaugmented = expanded.to_vect();
    let p0 = expanded.term_dim(0);
    let eps = augmentation(a, res.summands(0), p0);

    let mut dims: BTreeMap<i64, usize> = unaugmented.dims().clone();
    dims.insert(-1, a.dim());
    let mut diffs: BTreeMap<i64, RatMatrix> = BTreeMap::new();
    diffs.insert(1, expanded.differential(1));
    diffs.insert(0, eps.clone());
    let exact = VectComplex::new(dims, diffs).map(|c| c.is_acyclic()).unwrap_or(false);

    let diagonal = Bimodule::diagonal(a.clone());
    let augmentation_is_bimodule_map = match expanded.terms.get(&0) {
        Some(p) => {
            (0..a.dim()).all(|x| eps.mul(p.left_action(x)) == diagonal.left_action(x).mul(&eps))
                && (0..a.dim()).all(|x| eps.mul(p.right_action(x)) == diagonal.right_action(x).mul(&eps))
        }
        None => a.dim() == 0,
    };

    SmoothProperReport {
        algebra: a.name().to_string(),
        dim: a.dim(),
        proper: true,
        smooth: exact && augmentation_is_bimodule_map,
        resolution_length: res.degrees().max().unwrap_or(0).max(0) as usize,
        homology: unaugmented.homology_dims(),
        augmentation_is_bimodule_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::quiver::Quiver;

    fn algebra(name: &str, vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Arc<PathAlgebra> {
        Arc::new(PathAlgebra::new(Quiver::from_parts(name, vertices, arrows).unwrap()))
    }

    #[test]
    fn resolution_terms() {
        let k = algebra("pt", &["*"], &[]);
        let r = standard_resolution(&k);
        assert_eq!(r.terms(), &BTreeMap::from([(0, vec![(0, 0)])]));

        let qq = algebra("qq", &["1", "2"], &[]);
        let r = standard_resolution(&qq);
        assert_eq!(r.terms(), &BTreeMap::from([(0, vec![(0, 0), (1, 1)])]));

        let a2 = algebra("a2", &["1", "2"], &[("alpha", "1", "2")]);
        let r = standard_resolution(&a2);
        assert_eq!(r.summands(0), &[(0, 0), (1, 1)]);
        assert_eq!(r.summands(1), &[(1, 0)]);
        assert_eq!(r.k0_class(), vec![rat(1), rat(0), rat(-1), rat(1)]);
        let h = r.to_vect().homology_dims();
        assert_eq!(h, BTreeMap::from([(0, 3), (1, 0)]));
    }

    #[test]
    fn smooth_and_proper() {
        for (a, len) in [
            (algebra("pt", &["*"], &[]), 0),
            (algebra("qq", &["1", "2"], &[]), 0),
            (algebra("a2", &["1", "2"], &[("alpha", "1", "2")]), 1),
            (algebra("kron", &["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]), 1),
        ] {
            let r = check_smooth_proper(&a);
            assert!(r.smooth && r.proper, "{}", a.name());
            assert_eq!(r.resolution_length, len);
            assert_eq!(r.homology.get(&0), Some(&a.dim()));
        }
    }

    #[test]
    fn projective_dimensions() {
        let k = algebra("pt", &["*"], &[]);
        assert_eq!(projective_dims(&k, &k, "*", "*").unwrap(), 1);
        let a2 = algebra("a2", &["1", "2"], &[("alpha", "1", "2")]);
        assert_eq!(projective_dims(&a2, &a2, "1", "1").unwrap(), 2);
        assert_eq!(projective_dims(&a2, &a2, "2", "1").unwrap(), 1);
        assert!(projective_dims(&a2, &a2, "3", "1").is_err());
        for v in 0..2 {
            for u in 0..2 {
                let explicit = Bimodule::projective(a2.clone(), a2.clone(), v, u).dim();
                let label = |i: usize| a2.quiver().vertices()[i].clone();
                assert_eq!(projective_dims(&a2, &a2, &label(v), &label(u)).unwrap(), explicit);
            }
        }
    }

    #[test]
    fn k0_basis_order() {
        let a2 = algebra("a2", &["1", "2"], &[("alpha", "1", "2")]);
        assert_eq!(k0_basis(&a2, &a2), vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        let qq = algebra("qq", &["1", "2"], &[]);
        let k = algebra("pt", &["*"], &[]);
        assert_eq!(k0_basis(&qq, &k), vec![(0, 0), (1, 0)]);
    }
}
