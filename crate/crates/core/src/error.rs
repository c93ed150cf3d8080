use thiserror::Error;

/// Errors raised by graph, subshift and symmetry operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("port conflict: port `{port}` of vertex `{vertex}` is used by more than one edge")]
    PortConflict { vertex: String, port: String },
    #[error("graph is disconnected: {reached} of {total} vertices reachable from the origin")]
    Disconnected { reached: usize, total: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown port symbol `{0}`")]
    UnknownPort(String),
    #[error("unknown label symbol `{0}`")]
    UnknownLabel(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("path `{0}` is not in the language of the graph")]
    PathNotInLanguage(String),
    #[error("malformed word `{0}`")]
    MalformedWord(String),
    #[error("language is not prefix-stable: missing prefix `{0}`")]
    NotPrefixStable(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("search cap exceeded: {what} (limit {limit}); raise it with GRAPHSHIFT_CAP")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("`{0}` is not a period of the graph")]
    NotAPeriod(String),
    #[error(
        "coset closure exceeded {0} cosets; the subgroup probably has infinite index \
         (this is a heuristic: a larger cap may still terminate)"
    )]
    InfiniteIndex(usize),
    #[error("unsupported source: {0}")]
    UnsupportedSource(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is not a member of the subshift: {0}")]
    NotAMember(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("malformed file: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
