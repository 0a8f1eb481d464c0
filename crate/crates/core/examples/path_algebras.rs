//! Path algebras of the bundled quivers: bases, Cartan matrices and the
//! smooth/proper certificate.

use std::sync::Arc;

use ncnum::fixtures::Corpus;
use ncnum::quiver::{check_smooth_proper, Quiver, PathAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Corpus::bundled()?;
    for name in ["point", "qq", "a2", "a3", "fork"] {
        let a = corpus.path_algebra(name)?;
        let paths: Vec<String> = (0..a.dim()).map(|i| a.path_name(i)).collect();
        let r = check_smooth_proper(&a);
        println!("{name}: dim {} basis {{{}}}", a.dim(), paths.join(", "));
        println!("  cartan {:?}", a.cartan());
        println!("  smooth {} proper {} resolution length {}", r.smooth, r.proper, r.resolution_length);
    }

    // a Kronecker quiver built in code
    let q = Quiver::from_parts("kronecker", &["1", "2"], &[("x", "1", "2"), ("y", "1", "2")])?;
    let k = Arc::new(PathAlgebra::new(q));
    println!("kronecker: dim {}, cartan {:?}", k.dim(), k.cartan());

    // cycles are rejected at load
    let err = Quiver::from_parts("loop", &["1"], &[("t", "1", "1")]).unwrap_err();
    println!("{err}");
    Ok(())
}
