use thiserror::Error;

/// Error type shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("vertices must be distinct")]
    EqualVertices,
    #[error("malformed LP: {0}")]
    MalformedLp(String),
    #[error("optimality certificate rejected: {0}")]
    CertificateFailure(String),
    #[error("graph is not vertex-transitive")]
    NotVertexTransitive,
    #[error("degenerate input: {0}")]
    DegenerateGraph(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("invalid graph JSON: {0}")]
    InvalidGraphJson(String),
}

impl Error {
    /// Stable machine-readable code, used verbatim in CLI error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DisconnectedGraph => "disconnected_graph",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::SizeLimit(_) => "size_limit",
            Error::EqualVertices => "equal_vertices",
            Error::MalformedLp(_) => "malformed_lp",
            Error::CertificateFailure(_) => "certificate_failure",
            Error::NotVertexTransitive => "not_vertex_transitive",
            Error::DegenerateGraph(_) => "degenerate_graph",
            Error::IndexOutOfRange(_) => "index_out_of_range",
            Error::HypothesisNotMet(_) => "hypothesis_not_met",
            Error::InvalidGraphJson(_) => "invalid_graph_json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
