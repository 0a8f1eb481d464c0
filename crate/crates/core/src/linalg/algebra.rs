use num_traits::Zero;

use super::{axpy, zero, RatMatrix, Rational};
use crate::error::{Error, Result};

/// Finite-dimensional associative unital ℚ-algebra given by structure
/// constants: `b_i · b_j = Σ_k c[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdAlgebra {
    dim: usize,
    constants: Vec<Rational>,
    unit: Vec<Rational>,
}

impl FdAlgebra {
    /// Validates associativity on basis triples and solves for the unit.
    pub fn new(dim: usize, constants: Vec<Rational>) -> Result<Self> {
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        let mut alg = Self {
            dim,
            constants,
            unit: Vec::new(),
        };
        alg.check_associative()?;
        alg.unit = alg.solve_unit().ok_or(Error::NoUnit)?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        let start = (i * self.dim + j) * self.dim;
        self.constants[start..start + self.dim].to_vec()
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![zero(); self.dim];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                axpy(&mut out, &(x * y), &self.basis_product(i, j));
            }
        }
        out
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul(&ij, &super::unit_vector(n, k));
                    let jk = self.basis_product(j, k);
                    let right = self.mul(&super::unit_vector(n, i), &jk);
                    if left != right {
                        return Err(Error::NotAssociative(format!(
                            "(b{i}·b{j})·b{k} ≠ b{i}·(b{j}·b{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Unit `u` with `u·b_j = b_j = b_j·u` for all `j`, found as a linear system.
    fn solve_unit(&self) -> Option<Vec<Rational>> {
        let n = self.dim;
        if n == 0 {
            return Some(Vec::new());
        }
        // unknown u = Σ u_i b_i; equations indexed by (side, j, k)
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.constant(i, j, k).clone()).collect());
                rhs.push(if j == k { super::one() } else { zero() });
                rows.push((0..n).map(|i| self.constant(j, i, k).clone()).collect());
                rhs.push(if j == k { super::one() } else { zero() });
            }
        }
        RatMatrix::from_rows(rows, n).solve(&rhs)
    }

    /// Matrix of `x ↦ b_i · x` in the basis.
    pub fn left_multiplication(&self, i: usize) -> RatMatrix {
        RatMatrix::from_fn(self.dim, self.dim, |k, j| self.constant(i, j, k).clone())
    }

    /// Gram matrix of the trace form `(x, y) ↦ Tr(L_x L_y)`.
    pub fn trace_form(&self) -> RatMatrix {
        let lefts: Vec<RatMatrix> = (0..self.dim).map(|i| self.left_multiplication(i)).collect();
        RatMatrix::from_fn(self.dim, self.dim, |i, j| lefts[i].mul(&lefts[j]).trace())
    }

    /// Jacobson radical via Dickson's criterion: the radical of the trace
    /// form of the regular representation (valid in characteristic 0).
    pub fn jacobson_radical(&self) -> Vec<Vec<Rational>> {
        self.trace_form().kernel_basis()
    }
}

/// Validates the structure constants, then returns a basis of the Jacobson radical.
pub fn jacobson_radical(constants: Vec<Rational>, dim: usize) -> Result<Vec<Vec<Rational>>> {
    Ok(FdAlgebra::new(dim, constants)?.jacobson_radical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Span};

    fn dual_numbers() -> Vec<Rational> {
        // basis 1, x
        let mut c = vec![zero(); 8];
        let idx = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
        c[idx(0, 0, 0)] = rat(1);
        c[idx(0, 1, 1)] = rat(1);
        c[idx(1, 0, 1)] = rat(1);
        c
    }

    fn matrix_algebra(n: usize) -> Vec<Rational> {
        // basis E_ab, index a*n+b; E_ab E_cd = δ_bc E_ad
        let d = n * n;
        let mut c = vec![zero(); d * d * d];
        for a in 0..n {
            for b in 0..n {
                for dd in 0..n {
                    let i = a * n + b;
                    let j = b * n + dd;
                    let k = a * n + dd;
                    c[(i * d + j) * d + k] = rat(1);
                }
            }
        }
        c
    }

    #[test]
    fn radical_of_field_is_zero() {
        assert!(jacobson_radical(vec![rat(1)], 1).unwrap().is_empty());
    }

    #[test]
    fn radical_of_dual_numbers() {
        let rad = jacobson_radical(dual_numbers(), 2).unwrap();
        assert_eq!(rad, vec![vec![rat(0), rat(1)]]);
    }

    #[test]
    fn radical_of_matrix_algebra_is_zero() {
        let alg = FdAlgebra::new(4, matrix_algebra(2)).unwrap();
        assert!(alg.jacobson_radical().is_empty());
        assert_eq!(alg.unit(), &[rat(1), rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn upper_triangular_radical_is_ideal() {
        // 2x2 upper triangular: basis E11, E12, E22
        let basis = [(0, 0), (0, 1), (1, 1)];
        let mut c = vec![zero(); 27];
        for (i, &(a, b)) in basis.iter().enumerate() {
            for (j, &(cc, d)) in basis.iter().enumerate() {
                if b == cc {
                    let k = basis.iter().position(|&e| e == (a, d)).unwrap();
                    c[(i * 3 + j) * 3 + k] = rat(1);
                }
            }
        }
        let alg = FdAlgebra::new(3, c).unwrap();
        let rad = alg.jacobson_radical();
        assert_eq!(rad.len(), 1);
        let span = Span::new(3, &rad);
        for r in &rad {
            for b in 0..3 {
                let e = crate::linalg::unit_vector(3, b);
                assert!(span.contains(&alg.mul(r, &e)));
                assert!(span.contains(&alg.mul(&e, r)));
            }
        }
    }

    #[test]
    fn rejects_bad_constants() {
        // x·x = 1 without unit structure: basis {x}, x² = 2x has unit 1/2 x, fine;
        // zero algebra of dim 1 has no unit.
        assert_eq!(FdAlgebra::new(1, vec![rat(0)]).unwrap_err(), Error::NoUnit);
        // non-associative: dim 2, b0 unit, b1·b1 = b0 + b1 is associative; break it.
        let mut c = dual_numbers();
        c[(1 * 2 + 1) * 2] = rat(1); // x² = 1 is fine (group algebra of Z/2)
        assert!(FdAlgebra::new(2, c.clone()).is_ok());
        c[(0 * 2 + 1) * 2] = rat(1); // 1·x = 1 + x breaks unit/associativity
        assert!(FdAlgebra::new(2, c).is_err());
    }
}
