use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("label {label} out of range for a {vertex_count}-vertex graph")]
    LabelOutOfRange { label: u32, vertex_count: u32 },

    #[error("self-loop on label {label}")]
    SelfLoop { label: u32 },

    #[error("F_k index {0} out of range (must be 0..=3)")]
    FkOutOfRange(u32),

    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("SAT solver failure: {0}")]
    Solver(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
