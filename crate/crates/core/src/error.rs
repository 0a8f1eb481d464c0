use thiserror::Error;

/// Every failure the engine can report. Variant names double as the
/// invariant names printed by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("CyclicQuiver: quiver `{0}` contains a directed cycle")]
    CyclicQuiver(String),
    #[error("UnknownVertex: `{0}`")]
    UnknownVertex(String),
    #[error("UnknownArrow: `{0}`")]
    UnknownArrow(String),
    #[error("DuplicateLabel: `{0}`")]
    DuplicateLabel(String),
    #[error("UnknownPath: `{0}`")]
    UnknownPath(String),
    #[error("NotAssociative: {0}")]
    NotAssociative(String),
    #[error("NoUnit: structure constants admit no two-sided unit")]
    NoUnit,
    #[error("InvalidBimodule: {0}")]
    InvalidBimodule(String),
    #[error("NotAComplex: d∘d ≠ 0 at degree {0}")]
    NotAComplex(i64),
    #[error("MiddleMismatch: cannot contract `{0}` against `{1}`")]
    MiddleMismatch(String, String),
    #[error("DimensionMismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("UnstableTruncation: bar homology not stable at cutoff {0}")]
    UnstableTruncation(usize),
    #[error("IdempotentInvalid: {0}")]
    IdempotentInvalid(String),
    #[error("MotiveNotInContext: no context motive on `{0}`")]
    MotiveNotInContext(String),
    #[error("TraceMissing: category `{0}` carries no trace data")]
    TraceMissing(String),
    #[error("TraceCyclicityViolation: tr(g∘f) ≠ tr(f∘g) for {0}")]
    TraceCyclicityViolation(String),
    #[error("CompositionViolation: {0}")]
    CompositionViolation(String),
    #[error("TensorViolation: {0}")]
    TensorViolation(String),
    #[error("NotAnIdeal: {0}")]
    NotAnIdeal(String),
    #[error("NotIdempotent: {0}")]
    NotIdempotent(String),
    #[error("UnboundedSupport: {0}")]
    UnboundedSupport(String),
    #[error("UnitEndNotF: End of the unit has dimension {0}")]
    UnitEndNotF(usize),
    #[error("NotNilpotent: {0}")]
    NotNilpotent(String),
    #[error("HypothesisFailed: Hom(1, O^{n}) has dimension {dim}")]
    HypothesisFailed { n: i64, dim: usize },
    #[error("UnknownObject: `{0}`")]
    UnknownObject(String),
    #[error("Schema: {0}")]
    Schema(String),
    #[error("Io: {0}")]
    Io(String),
}

impl Error {
    /// Malformed or structurally impossible input, as opposed to a
    /// well-formed document that fails a mathematical check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::CyclicQuiver(_)
                | Error::UnknownVertex(_)
                | Error::UnknownArrow(_)
                | Error::DuplicateLabel(_)
                | Error::UnknownPath(_)
                | Error::UnknownObject(_)
                | Error::DimensionMismatch { .. }
                | Error::Schema(_)
                | Error::Io(_)
        )
    }

    /// Short invariant name (the text before the colon).
    pub fn invariant(&self) -> String {
        let text = self.to_string();
        text.split(':').next().unwrap_or_default().to_string()
    }
}

pub type Result<T> = std::result::Result<T, Error>;
