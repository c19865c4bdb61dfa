use crate::logic::DEFAULT_ATOM_CAP;

/// Resource bounds shared by all analyses. Exceeding any of them is an
/// explicit error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of atomic propositions.
    pub atom_cap: usize,
    /// Maximum number of reachable states (and of fresh variables when
    /// linearizing a recursive specification).
    pub state_budget: usize,
    /// Maximum `valuations × states` of a valuation-expanded system.
    pub expansion_cap: usize,
}

pub const DEFAULT_STATE_BUDGET: usize = 1000;
pub const DEFAULT_EXPANSION_CAP: usize = 1_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            atom_cap: DEFAULT_ATOM_CAP,
            state_budget: DEFAULT_STATE_BUDGET,
            expansion_cap: DEFAULT_EXPANSION_CAP,
        }
    }
}
