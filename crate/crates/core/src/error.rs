use thiserror::Error;

/// Crate-wide error type.
///
/// Errors report contract violations (bad parameters, malformed input,
/// unsupported regimes). Negative mathematical outcomes that a caller is
/// expected to branch on (an angulation not existing, a configuration not
/// matching a recognizer) are ordinary return values, not errors, with one
/// exception: a graph that provably admits no usable placement surfaces as
/// [`Error::NotPotentiallyAngulable`] so that the reason travels with it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `n` and `g` do not describe a polygon that can be cut into `g`-gons.
    #[error("parameters n={n}, g={g} are not admissible: {reason}")]
    BadParameters { n: u32, g: u32, reason: String },

    /// An edge endpoint is out of range, or the endpoints coincide.
    #[error("invalid edge ({a}, {b}): {reason}")]
    BadEdge { a: u32, b: u32, reason: String },

    /// The same edge was supplied twice where a set was expected.
    #[error("duplicate edge ({a}, {b})")]
    DuplicateEdge { a: u32, b: u32 },

    /// Text input could not be parsed. Line numbers are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The forbidden set contains a polygon boundary edge, which the caller's
    /// operation does not accept.
    #[error("forbidden set contains boundary edge ({a}, {b})")]
    BoundaryForbidden { a: u32, b: u32 },

    /// A documented precondition of the called function was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The supplied graph is not in the class the operation works on.
    #[error("graph is not {expected}: {reason}")]
    WrongGraphClass { expected: &'static str, reason: String },

    /// The graph admits no placement whose complement can be angulated.
    #[error("not potentially angulable: {0}")]
    NotPotentiallyAngulable(String),

    /// The parameter regime is outside what this crate implements.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Smoothing a cubic graph would identify the two stubs of one vertex.
    #[error("reduction would create a loop at vertex {0}")]
    LoopCreated(u32),

    /// The labeling search exhausted its strategies without success.
    #[error("no admissible labeling found: {0}")]
    LabelingNotFound(String),

    /// An internal invariant failed; indicates a bug in this crate.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
