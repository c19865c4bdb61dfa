use std::fmt;

use thiserror::Error;

/// Position of a diagnostic inside a specification text (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown atomic proposition `{0}`")]
    UnknownAtom(String),

    #[error("unknown action `{0}`")]
    UnknownAction(String),

    #[error("duplicate atomic proposition `{0}`")]
    DuplicateAtom(String),

    #[error("signature has {atoms} atoms, above the configured cap of {cap}")]
    AtomCap { atoms: usize, cap: usize },

    #[error("{what} of {size} exceeds the configured capacity of {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("{pos}: {msg}")]
    Parse { pos: Pos, msg: String },

    #[error("{pos}: unresolved name `{name}`")]
    Unresolved { pos: Pos, name: String },

    #[error("communication table: {0}")]
    Comm(#[from] crate::syntax::CommError),

    #[error("state table: {0}")]
    StateTable(String),

    #[error("recursive specification `{spec}`: unguarded occurrence of `{var}` in the equation for `{equation}`")]
    Unguarded {
        spec: String,
        equation: String,
        var: String,
    },

    #[error("recursive specification `{spec}`: cannot linearize `{equation}`: {reason}")]
    NotLinear {
        spec: String,
        equation: String,
        reason: String,
    },

    #[error("unbound recursion variable `{var}` in specification `{spec}`")]
    UnboundVariable { spec: String, var: String },

    #[error("unknown recursive specification `{0}`")]
    UnknownRecSpec(String),

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("term is not closed: free variable `{0}`")]
    OpenTerm(String),

    #[error("{what} budget of {limit} exhausted at `{frontier}`")]
    Budget {
        what: &'static str,
        limit: usize,
        frontier: String,
    },
}

impl Error {
    /// True for resource exhaustion (budgets and capacities), as opposed to
    /// malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::AtomCap { .. } | Error::Capacity { .. } | Error::Budget { .. }
        )
    }
}

impl Error {
    /// Source position, for diagnostics that have one.
    pub fn pos(&self) -> Option<Pos> {
        match self {
            Error::Parse { pos, .. } | Error::Unresolved { pos, .. } => Some(*pos),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
