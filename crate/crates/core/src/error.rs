use std::path::PathBuf;

use crate::graph::Mode;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,

    #[error("unknown {mode} node '{label}'")]
    UnknownNode { label: String, mode: Mode },

    #[error("no projected edge between '{0}' and '{1}'")]
    NoSuchEdge(String, String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("eigenvector undefined: graph has no edges")]
    EigenvectorUndefined,

    #[error("need at least 2 nodes to compare measures, got {0}")]
    TooFewNodes(usize),

    #[error("score tables cover different node sets")]
    MismatchedTables,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code for the CLI: 1 for bad input, 2 for internal invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invariant(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
