use super::PathAlgebra;
use crate::linalg::{one, zero, FdAlgebra};

/// `A^op ⊗ B`, the algebra whose modules are A-B-bimodules.
#[derive(Clone, Debug)]
pub struct EnvelopingAlgebra {
    pub algebra: FdAlgebra,
    /// Basis element `k` is `a ⊗ b` with `(a, b) = pairs[k]`.
    pub pairs: Vec<(usize, usize)>,
    /// Primitive idempotents `e_v ⊗ e_u` with their basis index.
    pub idempotents: Vec<((usize, usize), usize)>,
}

/// Multiplication `(a⊗b)(a'⊗b') = (a'a)⊗(bb')`.
pub fn enveloping_algebra(a: &PathAlgebra, b: &PathAlgebra) -> EnvelopingAlgebra {
    let (da, db) = (a.dim(), b.dim());
    let n = da * db;
    let pairs: Vec<(usize, usize)> = (0..da).flat_map(|i| (0..db).map(move |j| (i, j))).collect();
    let mut c = vec![zero(); n * n * n];
    for (x, &(a1, b1)) in pairs.iter().enumerate() {
        for (y, &(a2, b2)) in pairs.iter().enumerate() {
            if let (Some(ap), Some(bp)) = (a.mul_basis(a2, a1), b.mul_basis(b1, b2)) {
                c[(x * n + y) * n + ap * db + bp] = one();
            }
        }
    }
    let algebra = FdAlgebra::new(n, c).expect("tensor products of path algebras are associative");
    let idempotents = (0..a.vertex_count())
        .flat_map(|v| (0..b.vertex_count()).map(move |u| (v, u)))
        .map(|(v, u)| ((v, u), a.idempotent(v) * db + b.idempotent(u)))
        .collect();
    EnvelopingAlgebra {
        algebra,
        pairs,
        idempotents,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    #[test]
    fn dimensions_and_idempotents() {
        let point = PathAlgebra::new(Quiver::from_parts("pt", &["*"], &[]).unwrap());
        let e = enveloping_algebra(&point, &point);
        assert_eq!(e.algebra.dim(), 1);

        let a2 = PathAlgebra::new(Quiver::from_parts("a2", &["1", "2"], &[("alpha", "1", "2")]).unwrap());
        let e = enveloping_algebra(&a2, &a2);
        assert_eq!(e.algebra.dim(), 9);
        assert_eq!(e.idempotents.len(), 4);
        for &(_, k) in &e.idempotents {
            let x = crate::linalg::unit_vector(9, k);
            assert_eq!(e.algebra.mul(&x, &x), x);
        }

        let qq = PathAlgebra::new(Quiver::from_parts("qq", &["1", "2"], &[]).unwrap());
        let e = enveloping_algebra(&qq, &point);
        assert_eq!(e.algebra.dim(), 2);
        assert!(e.algebra.jacobson_radical().is_empty());
    }

    #[test]
    fn opposite_order_on_first_factor() {
        let a2 = PathAlgebra::new(Quiver::from_parts("a2", &["1", "2"], &[("alpha", "1", "2")]).unwrap());
        let point = PathAlgebra::new(Quiver::from_parts("pt", &["*"], &[]).unwrap());
        let e = enveloping_algebra(&a2, &point);
        let alpha = a2.parse_path("alpha").unwrap();
        let e1 = a2.idempotent(0);
        // (alpha⊗1)(e1⊗1) = (e1·alpha)⊗1 = 0, (e1⊗1)(alpha⊗1) = (alpha·e1)⊗1 = alpha⊗1
        let x = crate::linalg::unit_vector(3, alpha);
        let y = crate::linalg::unit_vector(3, e1);
        assert!(crate::linalg::is_zero_vec(&e.algebra.mul(&x, &y)));
        assert_eq!(e.algebra.mul(&y, &x), x);
    }
}
