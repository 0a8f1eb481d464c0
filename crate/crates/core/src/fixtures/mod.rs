//! Bundled corpus: quivers, correspondences and synthetic categories, with
//! their JSON document format.

pub mod corpus;
pub mod doc;
pub mod synthetic;

pub use corpus::{builtin_docs, default_fixture_dir, read_doc, Corpus, FIXTURE_DIR_ENV};
pub use doc::{FixtureDoc, Payload};
pub use synthetic::graded_lines;
