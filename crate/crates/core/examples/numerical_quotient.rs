//! The numerical ideal of Q[x]/x^2 with the constant-term trace, its
//! quotient, and the semisimplicity verdict before and after.

use ncnum::category::{check_semisimple, is_largest_ideal, nilpotent_trace_check, numerical_ideal, quotient_by_ideal};
use ncnum::fixtures::Corpus;
use ncnum::linalg::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = Corpus::bundled()?.category("qx2")?;
    let n = numerical_ideal(&c)?;
    println!("N has dimensions {:?}", n.dims());
    println!("N is the largest ideal: {}", is_largest_ideal(&c, &n)?.is_largest);

    let x = c.object_index("X")?;
    let nil = nilpotent_trace_check(&c, x, &[rat(0), rat(3)])?;
    println!("3x has index {} and traces {:?}", nil.nilpotency_index, nil.power_traces);

    let before = check_semisimple(&c)?;
    let q = quotient_by_ideal(&c, &n)?;
    let after = check_semisimple(&q.category)?;
    println!("semisimple before: {}, after: {}", before.semisimple, after.semisimple);
    println!("End(X): {} -> {}", c.dim(x, x), q.category.dim(x, x));
    Ok(())
}
