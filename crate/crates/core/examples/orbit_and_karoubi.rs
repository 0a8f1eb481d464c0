//! Orbit category of graded lines under the shift, and the Karoubi
//! envelope of a category with a split idempotent.

use ncnum::category::{karoubi_envelope, orbit_category};
use ncnum::fixtures::Corpus;
use ncnum::linalg::rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Corpus::bundled()?;
    let (c, spec) = corpus.orbit_spec("graded-lines-shift")?;
    let o = orbit_category(&c, &spec)?;
    println!("{} / - (x) {}:", c.name, c.objects[spec.object]);
    for (a, row) in o.category.hom_dims.iter().enumerate() {
        println!("  {:>4} {:?}", o.category.objects[a], row);
    }

    let split = corpus.category("split-pair")?;
    let k = karoubi_envelope(&split, &[(0, vec![rat(1), rat(0)]), (0, vec![rat(0), rat(1)])])?;
    println!("Karoubi envelope of {}:", split.name);
    for (a, row) in k.category.hom_dims.iter().enumerate() {
        println!("  {:>8} {:?}", k.category.objects[a], row);
    }
    Ok(())
}
