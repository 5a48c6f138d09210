//! Documents and command implementations behind the `critnum` binary.
//!
//! Every command produces one JSON document and an exit status:
//! 0 on success or agreement, 1 on invalid input, 2 when engines disagree.
//! Usage errors (exit 64) are handled by the argument parser in `main`.

use std::collections::BTreeMap;

use critnum::branching::{branch_enumerate, tate_decomposition, DEFAULT_BRANCH_CAP};
use critnum::crosscheck::{fuzz_campaign, GenConfig};
use critnum::embedding::emb_interval;
use critnum::weight::dual_entries;
use critnum::{
    crit_embedding, crit_gamma, crit_inequality, validate_langlands, weight_to_langlands, CritSet,
    Error, LanglandsParam, PureWeight, Violation,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

/// A side given as a Langlands parameter; `n` defaults to the length of `l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanglandsInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub w: i64,
    pub l: Vec<i64>,
    #[serde(default)]
    pub delta: i64,
}

/// A side given as a pure highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightInput {
    pub mu: Vec<i64>,
    #[serde(default)]
    pub delta: i64,
}

/// One side of a pair, in exactly one of the two forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamInput {
    Langlands(LanglandsInput),
    Weight(WeightInput),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairInputDocument {
    pub pi: ParamInput,
    pub sigma: ParamInput,
}

/// A violated rule located in the input document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldViolation {
    pub field: String,
    pub rule: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub message: String,
}

impl FieldViolation {
    fn new(side: &str, v: &Violation) -> Self {
        let field = match v {
            Violation::BadDelta { .. } => "delta",
            Violation::NotDominant { .. } | Violation::NotPure { .. } => "mu",
            _ => "l",
        };
        FieldViolation {
            field: format!("{side}.{field}"),
            rule: v.rule(),
            index: v.index(),
            message: v.to_string(),
        }
    }

    fn other(field: &str, rule: &'static str, message: impl Into<String>) -> Self {
        FieldViolation {
            field: field.into(),
            rule,
            index: None,
            message: message.into(),
        }
    }
}

/// The result of a command: a JSON document and an exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: Value,
    pub status: u8,
}

impl Outcome {
    fn ok(document: Value) -> Self {
        Outcome {
            document,
            status: EXIT_OK,
        }
    }

    pub fn invalid(violations: Vec<FieldViolation>) -> Self {
        let first = violations.first().cloned();
        Outcome {
            document: json!({ "error": first, "violations": violations }),
            status: EXIT_INVALID,
        }
    }

    fn engine_error(e: &Error) -> Self {
        let rule = match e {
            Error::RankPairExcluded => "RankPairExcluded",
            Error::InvariantViolated { .. } => "InvariantViolated",
            _ => "EngineError",
        };
        Outcome::invalid(vec![FieldViolation::other("pair", rule, e.to_string())])
    }
}

impl ParamInput {
    /// Validate and convert, reporting violations against `side`.
    pub fn to_param(&self, side: &str) -> Result<LanglandsParam, Vec<FieldViolation>> {
        let located =
            |vs: Vec<Violation>| vs.iter().map(|v| FieldViolation::new(side, v)).collect();
        match self {
            ParamInput::Langlands(LanglandsInput { n, w, l, delta }) => {
                validate_langlands(n.unwrap_or(l.len()), *w, l, *delta).map_err(located)
            }
            ParamInput::Weight(WeightInput { mu, delta }) => {
                let mut errs = Vec::new();
                if !(0..=1).contains(delta) {
                    errs.push(Violation::BadDelta { value: *delta });
                }
                let mu = PureWeight::new(mu.clone()).map_err(|v| {
                    errs.push(v);
                    located(errs.clone())
                })?;
                if !errs.is_empty() {
                    return Err(located(errs));
                }
                let (w, l) = weight_to_langlands(&mu);
                validate_langlands(l.len(), w, &l, *delta).map_err(located)
            }
        }
    }
}

/// Parse a pair document, returning the located problems on failure.
pub fn parse_pair(text: &str) -> Result<(LanglandsParam, LanglandsParam), Vec<FieldViolation>> {
    let doc: PairInputDocument = serde_json::from_str(text)
        .map_err(|e| vec![FieldViolation::other("document", "Parse", e.to_string())])?;
    let pi = doc.pi.to_param("pi");
    let sigma = doc.sigma.to_param("sigma");
    match (pi, sigma) {
        (Ok(pi), Ok(sigma)) => Ok((pi, sigma)),
        (pi, sigma) => Err(pi.err().into_iter().chain(sigma.err()).flatten().collect()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Gamma,
    Inequality,
    Embedding,
    All,
}

pub fn cmd_crit(pi: &LanglandsParam, sigma: &LanglandsParam, engine: Engine) -> Outcome {
    let run = |f: fn(&LanglandsParam, &LanglandsParam) -> critnum::Result<CritSet>| f(pi, sigma);
    let embedding =
        |pi: &LanglandsParam, sigma: &LanglandsParam| crit_embedding(pi, sigma).map(|(c, _)| c);
    let single = match engine {
        Engine::Gamma => Some(run(crit_gamma)),
        Engine::Inequality => Some(run(crit_inequality)),
        Engine::Embedding => Some(embedding(pi, sigma)),
        Engine::All => None,
    };
    if let Some(result) = single {
        return match result {
            Ok(c) => Outcome::ok(json!({ "crit": c, "agreement": true })),
            Err(e) => Outcome::engine_error(&e),
        };
    }

    let results = [
        ("gamma", run(crit_gamma)),
        ("inequality", run(crit_inequality)),
        ("embedding", embedding(pi, sigma)),
    ];
    let mut engines = BTreeMap::new();
    for (name, r) in &results {
        match r {
            Ok(c) => engines.insert(*name, c.clone()),
            Err(e) => return Outcome::engine_error(e),
        };
    }
    let first = &engines["gamma"];
    let agreement = engines.values().all(|c| c == first);
    Outcome {
        document: json!({ "crit": first, "engines": engines, "agreement": agreement }),
        status: if agreement { EXIT_OK } else { EXIT_MISMATCH },
    }
}

pub fn cmd_trace(pi: &LanglandsParam, sigma: &LanglandsParam) -> Outcome {
    match crit_embedding(pi, sigma) {
        Ok((_, trace)) => Outcome::ok(serde_json::to_value(trace).expect("trace serializes")),
        Err(e) => Outcome::engine_error(&e),
    }
}

pub fn cmd_fuzz(cfg: &GenConfig) -> Outcome {
    if let Err(msg) = cfg.check() {
        let mut out = Outcome::invalid(vec![FieldViolation::other("config", "BadConfig", msg)]);
        out.status = EXIT_USAGE;
        return out;
    }
    let summary = fuzz_campaign(cfg);
    let status = if summary.is_clean() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    let mut document = serde_json::to_value(&summary).expect("summary serializes");
    document["seed"] = json!(cfg.seed);
    Outcome { document, status }
}

/// Weight to parameter when `mu` is given, parameter to weight otherwise.
pub fn cmd_convert(mu: Option<Vec<i64>>, w: Option<i64>, l: Option<Vec<i64>>) -> Outcome {
    let input = match (mu, w, l) {
        (Some(mu), None, None) => ParamInput::Weight(WeightInput { mu, delta: 0 }),
        (None, Some(w), Some(l)) => ParamInput::Langlands(LanglandsInput {
            n: None,
            w,
            l,
            delta: 0,
        }),
        _ => {
            return Outcome::invalid(vec![FieldViolation::other(
                "arguments",
                "Usage",
                "give either --mu or both --w and --l",
            )])
        }
    };
    match (&input, input.to_param("input")) {
        (_, Err(v)) => Outcome::invalid(v),
        (ParamInput::Weight(_), Ok(p)) => Outcome::ok(json!({ "w": p.w(), "l": p.l() })),
        (ParamInput::Langlands(_), Ok(p)) => Outcome::ok(json!({ "mu": p.weight().entries() })),
    }
}

/// Branches of `alpha`, or `Emb(beta, alpha)` (with the Tate decomposition if asked).
pub fn cmd_branch(alpha: &[i64], beta: Option<&[i64]>, tate: bool) -> Outcome {
    let fail = |e: Error| {
        let v = match &e {
            Error::Invalid(vs) => vs.iter().map(|v| FieldViolation::new("alpha", v)).collect(),
            _ => vec![FieldViolation::other("alpha", "BranchError", e.to_string())],
        };
        Outcome::invalid(v)
    };
    let Some(beta) = beta else {
        return match branch_enumerate(alpha, DEFAULT_BRANCH_CAP) {
            Ok(iter) => {
                let branches: Vec<Vec<i64>> = iter.collect();
                Outcome::ok(json!({ "count": branches.len(), "branches": branches }))
            }
            Err(e) => fail(e),
        };
    };
    let emb = match emb_interval(beta, alpha) {
        Ok(i) => i,
        Err(e) => return fail(e),
    };
    let mut document = json!({ "emb": emb });
    if tate {
        // det^s ⊂ M_β ⊗ M_{α̌} exactly for s ∈ Emb(β, α)
        match tate_decomposition(beta, &dual_entries(alpha), None) {
            Ok(dec) => document["tate"] = serde_json::to_value(dec.multiplicities).unwrap(),
            Err(e) => return fail(e),
        }
    }
    Outcome::ok(document)
}
