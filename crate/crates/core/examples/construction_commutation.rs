//! Quotient-then-orbit against orbit-then-quotient on the fixture with a
//! nonzero numerical ideal.

use ncnum::category::verify_prop31;
use ncnum::fixtures::Corpus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (d, spec) = Corpus::bundled()?.orbit_spec("nilpotent-ideal-shift")?;
    let m0 = d.object_index("M0")?;
    let r = verify_prop31(&d, &spec, &[(m0, d.zero_hom(m0, m0))])?;
    println!("hypothesis dims {:?}", r.hypothesis);
    println!("dim N in D and in D/O: {:?}", r.ideal_dims);
    println!("tables agree: {}", r.tables_agree);
    println!("ker alpha = N: {}", r.kernel_alpha_equals_n);
    println!("beta bijective {}, functorial {}", r.beta_bijective, r.beta_functorial);
    println!("gamma bijective {}, essentially surjective {}", r.gamma_bijective, r.gamma_essentially_surjective);
    println!("passed: {}", r.passed);
    Ok(())
}
