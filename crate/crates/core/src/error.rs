use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: malformed crossing record `{text}`")]
    MalformedRecord { line: usize, text: String },

    #[error("arc {arc} appears {count} times (expected exactly 2)")]
    BadArcMultiplicity { arc: i64, count: usize },

    #[error("rotation system is not planar: traced {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },

    #[error("crossing index {index} out of range for a diagram with {crossings} crossings")]
    CrossingOutOfRange { index: usize, crossings: usize },

    #[error("{what}: {crossings} crossings exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        crossings: usize,
        cap: usize,
    },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("checkerboard convention conflicts at crossing {crossing}")]
    InconsistentColoring { crossing: usize },

    #[error("graph is disconnected ({components} components)")]
    DisconnectedGraph { components: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("diagram has {components} components; a knot is required")]
    NotAKnot { components: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
