use std::sync::Arc;

use num_traits::Zero;

use super::PathAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{one, RatMatrix, Rational};

/// A-B-bimodule given by the matrices of the basis actions on a finite
/// basis: `left_action[a]` is `m ↦ a·m`, `right_action[b]` is `m ↦ m·b`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<PathAlgebra>,
    right: Arc<PathAlgebra>,
    dim: usize,
    left_action: Vec<RatMatrix>,
    right_action: Vec<RatMatrix>,
}

impl Bimodule {
    /// Validates unitality, associativity of both actions and their commutation.
    pub fn new(
        left: Arc<PathAlgebra>,
        right: Arc<PathAlgebra>,
        dim: usize,
        left_action: Vec<RatMatrix>,
        right_action: Vec<RatMatrix>,
    ) -> Result<Self> {
        if left_action.len() != left.dim() {
            return Err(Error::DimensionMismatch {
                expected: left.dim(),
                found: left_action.len(),
            });
        }
        if right_action.len() != right.dim() {
            return Err(Error::DimensionMismatch {
                expected: right.dim(),
                found: right_action.len(),
            });
        }
        for m in left_action.iter().chain(&right_action) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        let bm = Self {
            left,
            right,
            dim,
            left_action,
            right_action,
        };
        bm.validate()?;
        Ok(bm)
    }

    fn validate(&self) -> Result<()> {
        let id = RatMatrix::identity(self.dim);
        let unit_l = (0..self.left.vertex_count())
            .fold(RatMatrix::zeros(self.dim, self.dim), |acc, v| {
                acc.add(&self.left_action[self.left.idempotent(v)])
            });
        let unit_r = (0..self.right.vertex_count())
            .fold(RatMatrix::zeros(self.dim, self.dim), |acc, v| {
                acc.add(&self.right_action[self.right.idempotent(v)])
            });
        if unit_l != id || unit_r != id {
            return Err(Error::InvalidBimodule("action is not unital".into()));
        }
        let zero = RatMatrix::zeros(self.dim, self.dim);
        for i in 0..self.left.dim() {
            for j in 0..self.left.dim() {
                let expected = self.left.mul_basis(i, j).map_or(&zero, |k| &self.left_action[k]);
                if &self.left_action[i].mul(&self.left_action[j]) != expected {
                    return Err(Error::InvalidBimodule(format!(
                        "left action not associative at ({}, {})",
                        self.left.path_name(i),
                        self.left.path_name(j)
                    )));
                }
            }
        }
        for i in 0..self.right.dim() {
            for j in 0..self.right.dim() {
                // m(b_i b_j) = (m b_i) b_j
                let expected = self.right.mul_basis(i, j).map_or(&zero, |k| &self.right_action[k]);
                if &self.right_action[j].mul(&self.right_action[i]) != expected {
                    return Err(Error::InvalidBimodule(format!(
                        "right action not associative at ({}, {})",
                        self.right.path_name(i),
                        self.right.path_name(j)
                    )));
                }
            }
        }
        for l in &self.left_action {
            for r in &self.right_action {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::InvalidBimodule("actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// The diagonal bimodule A with left and right multiplication.
    pub fn diagonal(algebra: Arc<PathAlgebra>) -> Self {
        let n = algebra.dim();
        let left_action = (0..n)
            .map(|i| {
                let mut m = RatMatrix::zeros(n, n);
                for j in 0..n {
                    if let Some(k) = algebra.mul_basis(i, j) {
                        m[(k, j)] = one();
                    }
                }
                m
            })
            .collect();
        let right_action = (0..n)
            .map(|i| {
                let mut m = RatMatrix::zeros(n, n);
                for j in 0..n {
                    if let Some(k) = algebra.mul_basis(j, i) {
                        m[(k, j)] = one();
                    }
                }
                m
            })
            .collect();
        Self {
            left: algebra.clone(),
            right: algebra,
            dim: n,
            left_action,
            right_action,
        }
    }

    /// Explicit `P(v,u) = A e_v ⊗ e_u B` with basis pairs `(p, q)`, `p` running
    /// over paths out of `v` in A and `q` over paths into `u` in B.
    pub fn projective(left: Arc<PathAlgebra>, right: Arc<PathAlgebra>, v: usize, u: usize) -> Self {
        let lp = left.paths_from(v);
        let rp = right.paths_to(u);
        let dim = lp.len() * rp.len();
        let index = |i: usize, j: usize| i * rp.len() + j;
        let left_action = (0..left.dim())
            .map(|a| {
                let mut m = RatMatrix::zeros(dim, dim);
                for (i, &p) in lp.iter().enumerate() {
                    if let Some(ap) = left.mul_basis(a, p) {
                        let ii = lp.iter().position(|&x| x == ap).expect("A e_v is a left ideal");
                        for j in 0..rp.len() {
                            m[(index(ii, j), index(i, j))] = one();
                        }
                    }
                }
                m
            })
            .collect();
        let right_action = (0..right.dim())
            .map(|b| {
                let mut m = RatMatrix::zeros(dim, dim);
                for (j, &q) in rp.iter().enumerate() {
                    if let Some(qb) = right.mul_basis(q, b) {
                        let jj = rp.iter().position(|&x| x == qb).expect("e_u B is a right ideal");
                        for i in 0..lp.len() {
                            m[(index(i, jj), index(i, j))] = one();
                        }
                    }
                }
                m
            })
            .collect();
        Self {
            left,
            right,
            dim,
            left_action,
            right_action,
        }
    }

    pub fn zero(left: Arc<PathAlgebra>, right: Arc<PathAlgebra>) -> Self {
        let left_action = vec![RatMatrix::zeros(0, 0); left.dim()];
        let right_action = vec![RatMatrix::zeros(0, 0); right.dim()];
        Self {
            left,
            right,
            dim: 0,
            left_action,
            right_action,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert!(self.left == other.left && self.right == other.right);
        Self {
            left: self.left.clone(),
            right: self.right.clone(),
            dim: self.dim + other.dim,
            left_action: self
                .left_action
                .iter()
                .zip(&other.left_action)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
            right_action: self
                .right_action
                .iter()
                .zip(&other.right_action)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        }
    }

    pub fn left_algebra(&self) -> &Arc<PathAlgebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<PathAlgebra> {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self, a: usize) -> &RatMatrix {
        &self.left_action[a]
    }

    pub fn right_action(&self, b: usize) -> &RatMatrix {
        &self.right_action[b]
    }

    pub fn left_actions(&self) -> &[RatMatrix] {
        &self.left_action
    }

    pub fn right_actions(&self) -> &[RatMatrix] {
        &self.right_action
    }

    /// Action of an arbitrary algebra element on the left.
    pub fn act_left(&self, a: &[Rational], m: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            crate::linalg::axpy(&mut out, c, &self.left_action[i].mul_vec(m));
        }
        out
    }

    pub fn act_right(&self, m: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, c) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            crate::linalg::axpy(&mut out, c, &self.right_action[i].mul_vec(m));
        }
        out
    }

    /// Projector onto `e_u · M · e_v`.
    pub fn corner_projector(&self, u: usize, v: usize) -> RatMatrix {
        self.left_action[self.left.idempotent(u)].mul(&self.right_action[self.right.idempotent(v)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn a2() -> Arc<PathAlgebra> {
        Arc::new(PathAlgebra::new(
            Quiver::from_parts("a2", &["1", "2"], &[("alpha", "1", "2")]).unwrap(),
        ))
    }

    #[test]
    fn realizations_validate() {
        let a = a2();
        let d = Bimodule::diagonal(a.clone());
        Bimodule::new(a.clone(), a.clone(), d.dim, d.left_action.clone(), d.right_action.clone())
            .unwrap();
        for v in 0..2 {
            for u in 0..2 {
                let p = Bimodule::projective(a.clone(), a.clone(), v, u);
                let checked = Bimodule::new(
                    a.clone(),
                    a.clone(),
                    p.dim,
                    p.left_action.clone(),
                    p.right_action.clone(),
                );
                assert!(checked.is_ok(), "P({v},{u})");
            }
        }
        assert_eq!(Bimodule::projective(a.clone(), a.clone(), 0, 0).dim(), 2);
        assert_eq!(Bimodule::projective(a.clone(), a, 1, 0).dim(), 1);
    }

    #[test]
    fn rejects_noncommuting_actions() {
        let a = a2();
        let d = Bimodule::diagonal(a.clone());
        // use the left action on both sides: not a bimodule of kA2
        let err = Bimodule::new(a.clone(), a, 3, d.left_action.clone(), d.left_action.clone());
        assert!(matches!(err, Err(Error::InvalidBimodule(_))));
    }
}
