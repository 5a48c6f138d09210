//! Random pairs and differential testing of the three engines.

mod campaign;
mod gen;
mod rng;

#[cfg(feature = "rayon")]
pub use campaign::fuzz_campaign_parallel;
pub use campaign::{
    check_pair, compare_engines, fuzz_campaign, fuzz_campaign_sequential, run_trial,
    CampaignSummary, Comparison, EngineOutcome, MismatchReport, PropertyFailures, MAX_REPORTS,
};
pub use gen::{gen_langlands, gen_near, gen_pair, GenConfig, GeneratedPair};
pub use rng::{mix, CounterRng};
