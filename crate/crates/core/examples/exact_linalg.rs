//! Exact rank, kernels and inverses over Q, and the Jacobson radical of a
//! small algebra.

use ncnum::linalg::{format_rational, jacobson_radical, rat, rat_frac, FdAlgebra, RatMatrix};

fn show(v: &[ncnum::linalg::Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

fn main() {
    let m = RatMatrix::from_fn(3, 4, |i, j| rat_frac((i * 4 + j) as i64, 2 + j as i64));
    println!("rank {} of a 3x4 matrix, kernel:", m.rank());
    for v in m.kernel_basis() {
        println!("  [{}]", show(&v));
    }

    let h = RatMatrix::from_fn(4, 4, |i, j| rat_frac(1, (i + j + 1) as i64));
    let inv = h.inverse().expect("Hilbert matrices are invertible");
    println!("inverse of the 4x4 Hilbert matrix, first row: [{}]", show(inv.row(0)));
    assert_eq!(h.mul(&inv), RatMatrix::identity(4));

    // upper triangular 2x2 matrices, basis e11, e12, e22
    let mut c = vec![rat(0); 27];
    let mut set = |i: usize, j: usize, k: usize| c[(i * 3 + j) * 3 + k] = rat(1);
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 2, 1);
    set(2, 2, 2);
    let alg = FdAlgebra::new(3, c.clone()).unwrap();
    println!("unit of T2: [{}]", show(alg.unit()));
    for r in jacobson_radical(c, 3).unwrap() {
        println!("radical of T2 contains [{}]", show(&r));
    }
}
