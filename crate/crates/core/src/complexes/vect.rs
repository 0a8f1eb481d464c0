use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;

/// Bounded complex of finite-dimensional ℚ-vector spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectComplex {
    dims: BTreeMap<i64, usize>,
    // d_n : C_n → C_{n-1}, shape dims[n-1] × dims[n]
    differentials: BTreeMap<i64, RatMatrix>,
}

impl VectComplex {
    /// Degrees absent from `dims` are zero. Differentials must have the
    /// right shape and square to zero.
    pub fn new(dims: BTreeMap<i64, usize>, differentials: BTreeMap<i64, RatMatrix>) -> Result<Self> {
        let dims: BTreeMap<i64, usize> = dims.into_iter().filter(|&(_, d)| d > 0).collect();
        let c = Self {
            dims,
            differentials: BTreeMap::new(),
        };
        let mut checked = BTreeMap::new();
        for (n, d) in differentials {
            let (rows, cols) = (c.dim(n - 1), c.dim(n));
            if d.rows() != rows || d.cols() != cols {
                return Err(Error::DimensionMismatch {
                    expected: rows * cols,
                    found: d.rows() * d.cols(),
                });
            }
            if rows > 0 && cols > 0 && !d.is_zero() {
                checked.insert(n, d);
            }
        }
        let c = Self {
            differentials: checked,
            ..c
        };
        for (&n, d) in &c.differentials {
            if let Some(next) = c.differentials.get(&(n - 1)) {
                if !next.mul(d).is_zero() {
                    return Err(Error::NotAComplex(n));
                }
            }
        }
        Ok(c)
    }

    /// A single space of dimension `dim` in degree `degree`.
    pub fn concentrated(degree: i64, dim: usize) -> Self {
        Self::new(BTreeMap::from([(degree, dim)]), BTreeMap::new()).expect("no differentials")
    }

    pub fn dim(&self, n: i64) -> usize {
        self.dims.get(&n).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    /// `d_n`, as an explicit (possibly zero) matrix.
    pub fn differential(&self, n: i64) -> RatMatrix {
        self.differentials
            .get(&n)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zeros(self.dim(n - 1), self.dim(n)))
    }

    fn rank_of(&self, n: i64) -> usize {
        self.differentials.get(&n).map_or(0, RatMatrix::rank)
    }

    /// `dim H_n = dim ker d_n − rank d_{n+1}` for every degree of the support.
    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        self.dims
            .iter()
            .map(|(&n, &d)| (n, d - self.rank_of(n) - self.rank_of(n + 1)))
            .collect()
    }

    /// Alternating sum of term dimensions.
    pub fn chain_euler_char(&self) -> i64 {
        self.dims.iter().map(|(&n, &d)| sign(n) * d as i64).sum()
    }

    /// Alternating sum of homology dimensions; equals [`Self::chain_euler_char`].
    pub fn homology_euler_char(&self) -> i64 {
        self.homology_dims().iter().map(|(&n, &h)| sign(n) * h as i64).sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology_dims().values().all(|&h| h == 0)
    }

    /// Drops degrees above `max_degree`.
    pub fn truncate_above(&self, max_degree: i64) -> Self {
        let dims = self.dims.iter().filter(|(&n, _)| n <= max_degree).map(|(&n, &d)| (n, d)).collect();
        let differentials = self
            .differentials
            .iter()
            .filter(|(&n, _)| n <= max_degree)
            .map(|(&n, d)| (n, d.clone()))
            .collect();
        Self {
            dims,
            differentials,
        }
    }
}

pub(crate) fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn homology_dims(c: &VectComplex) -> BTreeMap<i64, usize> {
    c.homology_dims()
}

/// Euler characteristic, computed both from the terms and from homology.
pub fn euler_char(c: &VectComplex) -> i64 {
    let chain = c.chain_euler_char();
    debug_assert_eq!(chain, c.homology_euler_char());
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn single_term() {
        let c = VectComplex::concentrated(0, 1);
        assert_eq!(c.homology_dims(), BTreeMap::from([(0, 1)]));
        assert_eq!(euler_char(&c), 1);
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = VectComplex::new(
            BTreeMap::from([(0, 1), (1, 1)]),
            BTreeMap::from([(1, RatMatrix::identity(1))]),
        )
        .unwrap();
        assert!(c.is_acyclic());
        assert_eq!(euler_char(&c), 0);
    }

    #[test]
    fn euler_char_is_representative_independent() {
        let d = RatMatrix::from_i64(&[&[1], &[2], &[0]]);
        let c = VectComplex::new(BTreeMap::from([(0, 3), (1, 1)]), BTreeMap::from([(1, d)])).unwrap();
        assert_eq!(c.homology_dims(), BTreeMap::from([(0, 2), (1, 0)]));
        assert_eq!(euler_char(&c), 2);
        assert_eq!(c.homology_euler_char(), 2);
    }

    #[test]
    fn rejects_non_complex() {
        let err = VectComplex::new(
            BTreeMap::from([(0, 1), (1, 1), (2, 1)]),
            BTreeMap::from([(1, RatMatrix::identity(1)), (2, RatMatrix::from_rows(vec![vec![rat(3)]], 1))]),
        );
        assert_eq!(err.unwrap_err(), Error::NotAComplex(2));
    }

    #[test]
    fn rejects_bad_shape() {
        let err = VectComplex::new(
            BTreeMap::from([(0, 2), (1, 1)]),
            BTreeMap::from([(1, RatMatrix::identity(1))]),
        );
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
