//! Constructive b-colorings of regular graphs without 4-cycles.

mod coloring;
mod extend;
mod seed;
mod strategies;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matching::HallViolator;

pub use coloring::{verify_bcoloring, Certificate, Coloring, PartialColoring, VerificationReport};
pub use extend::{greedy_extend, reduce_unrealized, ReductionPass};
pub use seed::{
    plan_seed, seed_dominating_neighborhood, seed_into, ColorMap, SeedPlan, SeedTrace, StepTrace,
};
pub use strategies::{
    construct, construct_connectivity_bcoloring, construct_diameter_bcoloring,
    construct_lower_bound_bcoloring, construct_small_case_bcoloring,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    /// The graph does not satisfy the strategy's preconditions.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    /// Malformed arguments, such as a coloring of the wrong length.
    #[error("invalid input: {0}")]
    Input(String),
    #[error("no perfect matching at step {step}: vertices {:?} can only take colors {:?}", violator.lefts, violator.neighborhood)]
    NoMatching { step: usize, violator: HallViolator },
    /// Something the construction guarantees did not hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl ConstructionError {
    /// Whether the error signals a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            ConstructionError::NoMatching { .. } | ConstructionError::Invariant(_)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    LowerBound,
    Diameter,
    Connectivity,
    SmallCase,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::LowerBound => "lower-bound",
            Strategy::Diameter => "diameter",
            Strategy::Connectivity => "connectivity",
            Strategy::SmallCase => "small-case",
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub seeds: Vec<SeedTrace>,
    pub reduction: Vec<ReductionPass>,
    /// Set when the exact search supplied the coloring.
    pub oracle_fallback: bool,
}

/// A verified b-coloring with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub coloring: Coloring,
    pub strategy: Strategy,
    /// Number of colors the strategy promises.
    pub guaranteed: usize,
    pub trace: ConstructionTrace,
}
