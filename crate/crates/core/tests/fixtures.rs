use ncnum::fixtures::{builtin_docs, read_doc, Corpus, FixtureDoc};

fn dir() -> std::path::PathBuf {
    std::path::PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

#[test]
fn bundled_files_match_the_builtin_corpus() {
    let docs = builtin_docs();
    let on_disk = std::fs::read_dir(dir()).unwrap().count();
    assert_eq!(on_disk, docs.len(), "regenerate with `cargo run --example export_corpus`");
    for d in docs {
        let path = dir().join(format!("{}.json", d.name));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, d.to_json(), "{} differs from the builtin corpus", d.name);
    }
}

#[test]
fn every_bundled_file_reserializes_byte_identically() {
    for entry in std::fs::read_dir(dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = read_doc(&path).unwrap();
        assert_eq!(doc.to_json(), text, "{}", path.display());
        assert_eq!(FixtureDoc::parse(&doc.to_json()).unwrap(), doc);
    }
}

#[test]
fn bundled_corpus_validates() {
    let c = Corpus::bundled().unwrap();
    for d in c.docs() {
        c.check(&d.name).unwrap_or_else(|e| panic!("{}: {e}", d.name));
    }
}
