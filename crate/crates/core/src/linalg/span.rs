use num_traits::Zero;

use super::{axpy, unit_vector, zero, RatMatrix, Rational};

/// Subspace of ℚⁿ held in canonical (reduced row echelon) form, so two
/// spans are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let m = RatMatrix::from_rows(vectors.to_vec(), ambient);
        let ech = m.echelon();
        let basis = (0..ech.rank()).map(|i| ech.reduced().row(i).to_vec()).collect();
        Self {
            ambient,
            basis,
            pivots: ech.pivots().to_vec(),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut residual, &-c.clone(), b);
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Span) -> Span {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Span::new(self.ambient, &vs)
    }

    /// Indices of standard basis vectors completing this span, chosen
    /// greedily from the front.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut current = self.clone();
        let mut chosen = Vec::new();
        for i in 0..self.ambient {
            if current.is_full() {
                break;
            }
            let e = unit_vector(self.ambient, i);
            if !current.contains(&e) {
                chosen.push(i);
                current = current.sum(&Span::new(self.ambient, &[e]));
            }
        }
        chosen
    }

    /// Linear combination of the canonical basis.
    pub fn combine(&self, coords: &[Rational]) -> Vec<Rational> {
        let mut out = vec![zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut out, c, b);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn canonical_equality() {
        let a = Span::new(3, &[vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        let b = Span::new(3, &[vec![rat(1), rat(0), rat(0)], vec![rat(2), rat(3), rat(0)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[rat(5), rat(-1), rat(0)]));
        assert!(!a.contains(&[rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn greedy_complement() {
        let s = Span::new(2, &[vec![rat(1), rat(1)]]);
        assert_eq!(s.complement_indices(), vec![0]);
        let s = Span::new(3, &[vec![rat(1), rat(0), rat(0)]]);
        assert_eq!(s.complement_indices(), vec![1, 2]);
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Span::new(3, &[vec![rat(1), rat(2), rat(3)], vec![rat(0), rat(1), rat(1)]]);
        let v = vec![rat(2), rat(5), rat(7)];
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combine(&c), v);
    }
}
