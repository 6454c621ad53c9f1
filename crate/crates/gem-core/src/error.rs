//! Error type shared by all gem operations.

use thiserror::Error;

/// Every way a gem operation can fail.
///
/// Each variant carries a stable machine-readable code (see [`GemError::code`])
/// which the CLI prints alongside the human-readable message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GemError {
    #[error("dimension must be at least 1, got {0}")]
    InvalidDim(usize),
    #[error("vertex count must be even and positive, got {0}")]
    InvalidVertexCount(usize),
    #[error("expected {expected} color classes, got {got}")]
    WrongColorCount { expected: usize, got: usize },
    #[error("color {color} is not valid for dimension {dim}")]
    InvalidColor { color: usize, dim: usize },
    #[error("vertex {vertex} is out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("loop edge {vertex}-{vertex} in color {color}")]
    LoopEdge { vertex: usize, color: usize },
    #[error("vertex {vertex} appears in two edges of color {color}")]
    DuplicateVertexInColor { vertex: usize, color: usize },
    #[error("color {color} must be a perfect matching but leaves {uncovered} vertices uncovered")]
    NonPerfectMatching { color: usize, uncovered: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is closed (it has no boundary vertices)")]
    ClosedGraph,
    #[error("graph has boundary vertices")]
    BoundaryGraph,
    #[error("operation requires dimension {expected}, graph has dimension {actual}")]
    Dimension { expected: usize, actual: usize },
    #[error("permutation {0:?} does not fit the graph dimension")]
    PermutationMismatch(Vec<usize>),
    #[error("color {color} is present at exactly one of the two junction vertices")]
    ColorMismatch { color: usize },
    #[error("invalid 1-dipole site: {0}")]
    InvalidSite(String),
    #[error("boundary is already connected")]
    ConnectedBoundary,
    #[error("graph is not a crystallization: {0}")]
    NotACrystallization(String),
    #[error("boundary has {h} components, expected a connected boundary")]
    DisconnectedBoundary { h: usize },
    #[error("boundary component fails the surface census check: {0}")]
    SurfaceCheckFailed(String),
    #[error("not a closed connected contracted surface gem: {0}")]
    InvalidSurface(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    ParseInvariant {
        line: usize,
        #[source]
        source: Box<GemError>,
    },
}

impl GemError {
    /// Stable upper-case code for reports and CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            GemError::InvalidDim(_) => "INVALID_DIM",
            GemError::InvalidVertexCount(_) => "INVALID_VERTEX_COUNT",
            GemError::WrongColorCount { .. } => "WRONG_COLOR_COUNT",
            GemError::InvalidColor { .. } => "INVALID_COLOR",
            GemError::VertexOutOfRange { .. } => "VERTEX_OUT_OF_RANGE",
            GemError::LoopEdge { .. } => "LOOP_EDGE",
            GemError::DuplicateVertexInColor { .. } => "DUPLICATE_VERTEX_IN_COLOR",
            GemError::NonPerfectMatching { .. } => "NON_PERFECT_MATCHING",
            GemError::Disconnected => "DISCONNECTED",
            GemError::ClosedGraph => "CLOSED_GRAPH",
            GemError::BoundaryGraph => "BOUNDARY_GRAPH",
            GemError::Dimension { .. } => "DIMENSION",
            GemError::PermutationMismatch(_) => "PERMUTATION_MISMATCH",
            GemError::ColorMismatch { .. } => "COLOR_MISMATCH",
            GemError::InvalidSite(_) => "INVALID_SITE",
            GemError::ConnectedBoundary => "CONNECTED_BOUNDARY",
            GemError::NotACrystallization(_) => "NOT_A_CRYSTALLIZATION",
            GemError::DisconnectedBoundary { .. } => "DISCONNECTED_BOUNDARY",
            GemError::SurfaceCheckFailed(_) => "SURFACE_CHECK_FAILED",
            GemError::InvalidSurface(_) => "INVALID_SURFACE",
            GemError::Parse { .. } => "PARSE",
            GemError::ParseInvariant { source, .. } => source.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, GemError>;
