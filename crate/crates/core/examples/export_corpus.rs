//! Writes the bundled fixture corpus to a directory (default: the crate's
//! `fixtures/`), one canonical JSON document per file.
//!
//!     cargo run --example export_corpus -- [DIR]

use std::path::PathBuf;

use ncnum::fixtures::{builtin_docs, default_fixture_dir};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(default_fixture_dir);
    std::fs::create_dir_all(&dir)?;
    for doc in builtin_docs() {
        let path = dir.join(format!("{}.json", doc.name));
        std::fs::write(&path, doc.to_json())?;
        println!("{:<14} {}", doc.payload.kind(), path.display());
    }
    Ok(())
}
