//! Categorical traces, intersection numbers and the Gram matrix of the
//! pairing on End(kA2) in noncommutative Chow motives.

use ncnum::fixtures::Corpus;
use ncnum::linalg::format_rational;
use ncnum::motives::{
    categorical_trace, compose, explicit_intersection_number, gram_report, intersection_number, Correspondence,
    NcMotive,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Corpus::bundled()?;
    let a = corpus.algebra("a2")?;
    let id = Correspondence::identity(a.clone());
    println!("tr(id_kA2) = {}", format_rational(&categorical_trace(&id)?));

    let p12 = corpus.correspondence("a2-p12")?;
    let p22 = corpus.correspondence("a2-p22")?;
    println!("[P(1,2)] o [P(2,2)] has class {:?}", compose(&p12, &p22)?.class.iter().map(format_rational).collect::<Vec<_>>());
    println!("<P(1,2) . P(2,2)> = {}", format_rational(&intersection_number(&p12, &p22)?));

    // the same number through the Hochschild complex of the tensored complexes
    let x = Correspondence::projective(a.clone(), a.clone(), 0, 1)?;
    let y = Correspondence::projective(a.clone(), a.clone(), 1, 1)?;
    println!("explicitly: {}", format_rational(&explicit_intersection_number(&x, &y)?));

    let m = NcMotive::of_algebra(a);
    let g = gram_report(&m, &m)?;
    println!("Gram matrix on End(kA2):");
    for row in &g.matrix {
        println!("  {}", row.join(" "));
    }
    println!("rank {}, radical {}", g.rank, g.radical_dim);
    Ok(())
}
