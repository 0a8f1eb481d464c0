//! Hochschild homology of kA3 with coefficients in the diagonal bimodule
//! and in a projective, along the standard and the bar routes.

use ncnum::fixtures::Corpus;
use ncnum::hochschild::{hh_complex, Coefficients, HhRequest, Method};
use ncnum::quiver::Bimodule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Corpus::bundled()?.path_algebra("a3")?;
    let coefficients = [
        ("diagonal", Bimodule::diagonal(a.clone())),
        ("P(1,3)", Bimodule::projective(a.clone(), a.clone(), 0, 2)),
        ("P(3,1)", Bimodule::projective(a.clone(), a.clone(), 2, 0)),
    ];
    for (label, m) in coefficients {
        for method in [Method::Standard, Method::Bar { cutoff: 4 }] {
            let hh = hh_complex(&HhRequest {
                algebra: a.clone(),
                coefficients: Coefficients::Bimodule(m.clone()),
                method,
            })?;
            println!(
                "HH(kA3; {label}) via {method:?}: homology {:?}, euler {}",
                hh.complex.homology_dims(),
                hh.euler_char()
            );
        }
    }
    Ok(())
}
