//! Three-way differential testing of the engines.

use serde::Serialize;

use super::gen::{gen_pair, GenConfig, GeneratedPair};
use super::rng::CounterRng;
use crate::crit::{is_exceptional, CritSet};
use crate::embedding::{crit_embedding, PipelineTrace};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::inequality::{bound_l0, crit_inequality, find_coincidence, witness_diagnostic};
use crate::param::LanglandsParam;
use crate::weil::crit_gamma;

/// Reports kept in full; later mismatches are only counted.
pub const MAX_REPORTS: usize = 20;

/// What one engine produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineOutcome {
    Set(CritSet),
    Error(String),
}

impl EngineOutcome {
    fn from_result(r: &Result<CritSet>) -> Self {
        match r {
            Ok(c) => EngineOutcome::Set(c.clone()),
            Err(e) => EngineOutcome::Error(e.to_string()),
        }
    }

    pub fn set(&self) -> Option<&CritSet> {
        match self {
            EngineOutcome::Set(c) => Some(c),
            EngineOutcome::Error(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MismatchReport {
    pub trial: Option<u64>,
    pub pi: LanglandsParam,
    pub sigma: LanglandsParam,
    pub gamma: EngineOutcome,
    pub inequality: EngineOutcome,
    pub embedding: EngineOutcome,
    /// Smallest number on which two computed sets disagree.
    pub first_difference: Option<HalfInt>,
    pub trace: Option<PipelineTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Agreement(CritSet),
    Mismatch(Box<MismatchReport>),
}

/// Run all three engines on a pair and compare their outputs.
pub fn compare_engines(pi: &LanglandsParam, sigma: &LanglandsParam) -> Comparison {
    let gamma = crit_gamma(pi, sigma);
    let inequality = crit_inequality(pi, sigma);
    let embedding = crit_embedding(pi, sigma);
    let (embedding_set, trace) = match embedding {
        Ok((c, t)) => (Ok(c), Some(t)),
        Err(e) => (Err(e), None),
    };
    if let (Ok(a), Ok(b), Ok(c)) = (&gamma, &inequality, &embedding_set) {
        if a == b && b == c {
            return Comparison::Agreement(a.clone());
        }
    }
    let sets: Vec<&CritSet> = [&gamma, &inequality, &embedding_set]
        .into_iter()
        .filter_map(|r| r.as_ref().ok())
        .collect();
    let first_difference = sets
        .iter()
        .flat_map(|a| sets.iter().filter_map(move |b| a.first_difference(b)))
        .min();
    Comparison::Mismatch(Box::new(MismatchReport {
        trial: None,
        pi: pi.clone(),
        sigma: sigma.clone(),
        gamma: EngineOutcome::from_result(&gamma),
        inequality: EngineOutcome::from_result(&inequality),
        embedding: EngineOutcome::from_result(&embedding_set),
        first_difference,
        trace,
    }))
}

/// Counts of structural properties that failed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PropertyFailures {
    /// Some engine's set is not closed under `t ↦ w + w′ + 1 − t`.
    pub reflection: u64,
    /// Some engine changed its answer when the pair was swapped.
    pub swap: u64,
    /// Coincident nonzero spectra with a nonempty set.
    pub coincidence_emptiness: u64,
    /// Non-exceptional pair with `L₀ ≠ 0` and an empty set.
    pub nonemptiness: u64,
    /// Internal pipeline invariants that fired.
    pub invariant: u64,
}

impl PropertyFailures {
    pub fn total(&self) -> u64 {
        self.reflection
            + self.swap
            + self.coincidence_emptiness
            + self.nonemptiness
            + self.invariant
    }

    fn merge(&mut self, o: &PropertyFailures) {
        self.reflection += o.reflection;
        self.swap += o.swap;
        self.coincidence_emptiness += o.coincidence_emptiness;
        self.nonemptiness += o.nonemptiness;
        self.invariant += o.invariant;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub trials: u64,
    pub agreements: u64,
    pub mismatches: u64,
    pub empties: u64,
    pub exceptional: u64,
    /// Exceptional trials emptied by the parity condition alone.
    pub parity_emptied: u64,
    pub biased: u64,
    pub property_failures: PropertyFailures,
    /// Trials where the proposed witness `t₀` was not a critical number.
    pub witness_diagnostic_fired: u64,
    /// The first [`MAX_REPORTS`] mismatches by trial index.
    pub reports: Vec<MismatchReport>,
}

impl CampaignSummary {
    pub fn is_clean(&self) -> bool {
        self.mismatches == 0 && self.property_failures.total() == 0
    }

    /// Order-independent combination of two partial summaries.
    pub fn merge(mut self, other: CampaignSummary) -> CampaignSummary {
        self.trials += other.trials;
        self.agreements += other.agreements;
        self.mismatches += other.mismatches;
        self.empties += other.empties;
        self.exceptional += other.exceptional;
        self.parity_emptied += other.parity_emptied;
        self.biased += other.biased;
        self.property_failures.merge(&other.property_failures);
        self.witness_diagnostic_fired += other.witness_diagnostic_fired;
        self.reports.extend(other.reports);
        self.reports.sort_by_key(|r| r.trial);
        self.reports.truncate(MAX_REPORTS);
        self
    }
}

fn engines(pi: &LanglandsParam, sigma: &LanglandsParam) -> [Result<CritSet>; 3] {
    [
        crit_gamma(pi, sigma),
        crit_inequality(pi, sigma),
        crit_embedding(pi, sigma).map(|(c, _)| c),
    ]
}

/// Draw and check trial `index` of the campaign rooted at `seed`.
pub fn run_trial(cfg: &GenConfig, index: u64) -> CampaignSummary {
    let mut rng = CounterRng::new(cfg.seed).split(index);
    let GeneratedPair { pi, sigma, biased } = gen_pair(cfg, &mut rng);
    check_pair(&pi, &sigma, biased, index)
}

/// Differential and structural checks on a single pair.
pub fn check_pair(
    pi: &LanglandsParam,
    sigma: &LanglandsParam,
    biased: bool,
    index: u64,
) -> CampaignSummary {
    let mut s = CampaignSummary {
        trials: 1,
        biased: u64::from(biased),
        ..Default::default()
    };
    let exceptional = is_exceptional(pi, sigma);
    s.exceptional = u64::from(exceptional);

    let forward = engines(pi, sigma);
    let backward = engines(sigma, pi);
    let f = &mut s.property_failures;
    for (a, b) in forward.iter().zip(&backward) {
        for r in [a, b] {
            if matches!(r, Err(Error::InvariantViolated { .. })) {
                f.invariant += 1;
            }
        }
        match (a, b) {
            (Ok(a), Ok(b)) if a != b => f.swap += 1,
            _ => {}
        }
        if let Ok(c) = a {
            if !c.is_reflection_closed(pi.w(), sigma.w()) {
                f.reflection += 1;
            }
        }
    }

    let crit = match compare_engines(pi, sigma) {
        Comparison::Agreement(c) => {
            s.agreements = 1;
            c
        }
        Comparison::Mismatch(mut report) => {
            s.mismatches = 1;
            report.trial = Some(index);
            s.reports.push(*report);
            return s;
        }
    };

    let coincidence = find_coincidence(pi, sigma).is_some();
    if crit.is_empty() {
        s.empties = 1;
        if exceptional && !coincidence {
            s.parity_emptied = 1;
        }
    }
    if coincidence && !crit.is_empty() {
        s.property_failures.coincidence_emptiness += 1;
    }
    if !exceptional && bound_l0(pi, sigma) != 0 && crit.is_empty() {
        s.property_failures.nonemptiness += 1;
    }
    if witness_diagnostic(pi, sigma, &crit).is_some_and(|d| d.fires()) {
        s.witness_diagnostic_fired = 1;
    }
    s
}

pub fn fuzz_campaign_sequential(cfg: &GenConfig) -> CampaignSummary {
    (0..cfg.trials)
        .map(|i| run_trial(cfg, i))
        .fold(CampaignSummary::default(), CampaignSummary::merge)
}

#[cfg(feature = "rayon")]
pub fn fuzz_campaign_parallel(cfg: &GenConfig) -> CampaignSummary {
    use rayon::prelude::*;
    (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .reduce(CampaignSummary::default, CampaignSummary::merge)
}

/// Run the campaign, in parallel when the `rayon` feature is enabled.
pub fn fuzz_campaign(cfg: &GenConfig) -> CampaignSummary {
    #[cfg(feature = "rayon")]
    {
        fuzz_campaign_parallel(cfg)
    }
    #[cfg(not(feature = "rayon"))]
    {
        fuzz_campaign_sequential(cfg)
    }
}
