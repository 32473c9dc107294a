//! Seeded random types, exact membership probabilities, the lemma checkers
//! and Monte Carlo aggregation.

mod lemma;
mod monte_carlo;
mod probability;
mod rng;
mod sample;

pub use lemma::{check_neighborhood_lemma, CheckMode, LemmaId, LemmaReport, Witness, EXHAUSTIVE_LIMIT};
pub use monte_carlo::{
    monte_carlo, run_trial, Experiment, LemmaMode, LemmaPart, McSummary, Property, RhoPattern, TrialOutcome,
};
pub use probability::{
    chernoff_exponent, chernoff_tail_bound, exact_membership_probability, parse_color, simulate_membership,
    ProbabilityResult, Scenario, MAX_SCENARIO_VERTICES,
};
pub use rng::{derive_seed, mix64, SplitMix64};
pub use sample::{plant_at_first, plant_subtype, sample_type, Model, RandomError, RandomSpec};
