//! Runs every property suite once with a fixed seed.

use ncnum::fixtures::Corpus;
use ncnum::verify::{run, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Corpus::bundled()?;
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for suite in Suite::ALL {
        let r = run(&corpus, suite, seed)?;
        println!("{:<16} passed {} ({} assertions)", r.suite, r.passed, r.assertions);
    }
    Ok(())
}
