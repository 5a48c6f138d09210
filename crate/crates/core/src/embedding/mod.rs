//! Critical numbers from highest weights.
//!
//! The pair is normalized, screened for coincident spectra, and turned into
//! two weights `u`, `v(s) = v0 − s·𝟙` of rank `2r`. After equalizing defects
//! the critical twists `s` are the common points of two embedding intervals
//! `Emb(θ′_i(λ̃), θ_i(û))`, filtered by parity in the exceptional case, and
//! `t = s − (n − m)/2 + 1`.

mod position;
mod split;
mod weights;

use serde::Serialize;

pub use position::{normalize_pair, position_tuple, Normalized, PositionData};
pub use split::{
    defect, emb_interval, hat_modify, split_embeddings_hold, split_theta, split_theta_prime,
    system_holds, Hat, IntInterval,
};
pub use weights::{build_uv, lambda_from, LambdaData, UvCase, UvData};

use crate::crit::{check_rank_pair, coset_offset, s_to_t, CritSet, ParityFilter};
use crate::error::{invariant, Result};
use crate::inequality::{find_coincidence, Coincidence};
use crate::param::LanglandsParam;
use crate::weight::{dual_entries, purity_weight};

/// `μ̃ = û̌` and `λ̃ = v̂0`.
///
/// When `wt(û) = d − w` the dual is also the translate `û + (w − d)·𝟙`,
/// which is checked here.
pub fn mu_tilde_lambda_tilde(
    u_hat: &[i64],
    v0_hat: &[i64],
    w: i64,
    d: i64,
) -> Result<(Vec<i64>, Vec<i64>)> {
    let mu_tilde = dual_entries(u_hat);
    if purity_weight(u_hat) == Some(d - w) {
        let translate: Vec<i64> = u_hat.iter().map(|x| x + w - d).collect();
        invariant(translate == mu_tilde, "mu-tilde-translate", || {
            format!("dual {mu_tilde:?} != û + w − d = {translate:?}")
        })?;
    }
    for (name, y) in [
        ("mu-tilde-pure", &mu_tilde),
        ("lambda-tilde-pure", &v0_hat.to_vec()),
    ] {
        invariant(purity_weight(y).is_some(), name, || format!("{y:?}"))?;
    }
    Ok((mu_tilde, v0_hat.to_vec()))
}

/// `θ_i(û)` and `θ′_i(λ̃)` for `i = 1, 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaImages {
    pub theta: [Vec<i64>; 2],
    pub theta_prime: [Vec<i64>; 2],
}

/// Intermediate objects of a pipeline run that got past screening.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineStages {
    pub a: Vec<usize>,
    pub jumps: Vec<usize>,
    pub r: usize,
    pub exceptional: bool,
    pub lambda: Vec<i64>,
    pub lambda_mod: Option<Vec<i64>>,
    pub lambda_tr: Option<Vec<i64>>,
    pub case: UvCase,
    pub u: Vec<i64>,
    pub v0: Vec<i64>,
    pub d_u: i64,
    pub d_v: i64,
    pub d: i64,
    pub u_hat: Vec<i64>,
    pub v0_hat: Vec<i64>,
    pub mu_tilde: Vec<i64>,
    pub lambda_tilde: Vec<i64>,
    /// The side whose defect must vanish for the splitting does.
    pub admissible: bool,
    pub theta_images: Option<ThetaImages>,
    pub emb_intervals: Option<[IntInterval; 2]>,
    /// `ε` of the parity filter, exceptional case only.
    pub parity_filter: Option<u8>,
    /// Critical twists `s` before translating back to `t`.
    pub s_values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineTrace {
    /// The pair was swapped to achieve `l_1 > l′_1`.
    pub normalized: bool,
    pub n: usize,
    pub m: usize,
    /// Coincident nonzero spectra, which certify emptiness.
    pub certificate: Option<Coincidence>,
    #[serde(flatten)]
    pub stages: Option<PipelineStages>,
    pub crit: CritSet,
}

pub fn crit_embedding(
    pi: &LanglandsParam,
    sigma: &LanglandsParam,
) -> Result<(CritSet, PipelineTrace)> {
    check_rank_pair(pi, sigma)?;
    let empty = CritSet::empty_for(pi.n(), sigma.n());
    let certified = |swapped: bool, n: usize, m: usize, c: Coincidence| {
        let trace = PipelineTrace {
            normalized: swapped,
            n,
            m,
            certificate: Some(c),
            stages: None,
            crit: empty.clone(),
        };
        Ok((empty.clone(), trace))
    };

    let (pi, sigma, swapped) = match normalize_pair(pi, sigma)? {
        Normalized::Pair { pi, sigma, swapped } => (pi, sigma, swapped),
        Normalized::Empty(c) => return certified(false, pi.n(), sigma.n(), c),
    };
    let (n, m) = (pi.n(), sigma.n());
    if let Some(c) = find_coincidence(&pi, &sigma) {
        return certified(swapped, n, m, c);
    }

    let pos = position_tuple(&pi, &sigma)?;
    let lam = lambda_from(&sigma.weight(), &pos)?;
    let uv = build_uv(&pi.weight().dual(), &lam.lambda, &pos, sigma.w())?;
    let (d_u, d_v) = (defect(&uv.u)?, defect(&uv.v0)?);
    let hat = hat_modify(&uv.u, &uv.v0)?;
    let (mu_tilde, lambda_tilde) = mu_tilde_lambda_tilde(&hat.u_hat, &hat.v0_hat, pi.w(), hat.d)?;

    let r = pos.r;
    let admissible = if r % 2 == 0 {
        defect(&hat.u_hat)? == 0
    } else {
        defect(&lambda_tilde)? == 0
    };
    let filter = ParityFilter::for_pair(&pi, &sigma);

    let mut theta_images = None;
    let mut emb_intervals = None;
    let mut s_values = Vec::new();
    if admissible {
        let theta = [split_theta(&hat.u_hat, 1)?, split_theta(&hat.u_hat, 2)?];
        let theta_prime = [
            split_theta_prime(&lambda_tilde, 1)?,
            split_theta_prime(&lambda_tilde, 2)?,
        ];
        let intervals = [
            emb_interval(&theta_prime[0], &theta[0])?,
            emb_interval(&theta_prime[1], &theta[1])?,
        ];
        s_values = intervals[0]
            .intersect(&intervals[1])
            .iter()
            .filter(|&s| filter.is_none_or(|f| f.admits(s)))
            .collect();
        theta_images = Some(ThetaImages { theta, theta_prime });
        emb_intervals = Some(intervals);
    }

    let crit = CritSet::from_values(
        coset_offset(n, m),
        s_values.iter().map(|&s| s_to_t(s, n, m)),
    );
    let stages = PipelineStages {
        a: pos.a,
        jumps: pos.jumps,
        r,
        exceptional: pos.exceptional,
        lambda: lam.lambda,
        lambda_mod: lam.lambda_mod,
        lambda_tr: lam.lambda_tr,
        case: uv.case,
        u: uv.u,
        v0: uv.v0,
        d_u,
        d_v,
        d: hat.d,
        u_hat: hat.u_hat,
        v0_hat: hat.v0_hat,
        mu_tilde,
        lambda_tilde,
        admissible,
        theta_images,
        emb_intervals,
        parity_filter: filter.map(|f| f.eps),
        s_values,
    };
    let trace = PipelineTrace {
        normalized: swapped,
        n,
        m,
        certificate: None,
        stages: Some(stages),
        crit: crit.clone(),
    };
    Ok((crit, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::HalfInt;

    fn p(w: i64, l: &[i64], delta: u8) -> LanglandsParam {
        LanglandsParam::new(w, l.to_vec(), delta).unwrap()
    }

    fn halves(v: &[i64]) -> Vec<HalfInt> {
        v.iter().map(|&x| HalfInt::from_times2(x)).collect()
    }

    #[test]
    fn shimura_pair() {
        let (crit, trace) = crit_embedding(&p(4, &[3, -3], 0), &p(0, &[0], 0)).unwrap();
        assert_eq!(crit.to_vec(), halves(&[3, 5, 7]));
        let st = trace.stages.unwrap();
        assert_eq!(st.u, vec![-1, -3]);
        assert_eq!(st.emb_intervals.unwrap(), [IntInterval::new(1, 3); 2]);
        assert_eq!(st.s_values, vec![1, 2, 3]);
    }

    #[test]
    fn rankin_pair() {
        let (crit, trace) = crit_embedding(&p(6, &[5, -5], 0), &p(4, &[3, -3], 0)).unwrap();
        assert_eq!(crit.to_vec(), halves(&[10, 12]));
        let st = trace.stages.unwrap();
        assert_eq!(
            (st.d, st.mu_tilde, st.lambda_tilde),
            (3, vec![2, 1], vec![3, 3])
        );
        assert_eq!(st.emb_intervals.unwrap()[0], IntInterval::new(4, 5));
    }

    #[test]
    fn gelbart_jacquet_pairs() {
        let (crit, trace) = crit_embedding(&p(0, &[6, 0, -6], 1), &p(0, &[0], 0)).unwrap();
        assert_eq!(crit.to_vec(), halves(&[-4, 0, 2, 6]));
        let st = trace.stages.unwrap();
        assert_eq!(st.emb_intervals.unwrap()[0], IntInterval::new(-2, 3));
        assert_eq!((st.mu_tilde, st.lambda_tilde), (vec![3, -2], vec![0, 0]));
        assert_eq!(st.parity_filter, Some(1));

        let (crit, _) = crit_embedding(&p(0, &[6, 0, -6], 1), &p(-2, &[0], 1)).unwrap();
        assert_eq!(crit.to_vec(), halves(&[-4, 2]));
    }

    #[test]
    fn rank_four_by_two_pair() {
        let (crit, trace) = crit_embedding(&p(0, &[5, 1, -1, -5], 0), &p(1, &[2, -2], 0)).unwrap();
        assert_eq!(crit.to_vec(), halves(&[2]));
        let st = trace.stages.unwrap();
        assert_eq!(st.emb_intervals.unwrap(), [IntInterval::new(1, 1); 2]);
    }

    #[test]
    fn swap_is_recorded_and_harmless() {
        let (a, b) = (p(4, &[3, -3], 0), p(0, &[5, 1, -1, -5], 0));
        let (c1, t1) = crit_embedding(&a, &b).unwrap();
        let (c2, t2) = crit_embedding(&b, &a).unwrap();
        assert_eq!(c1, c2);
        assert!(t1.normalized);
        assert!(!t2.normalized);
    }

    #[test]
    fn coincidence_is_certified_empty() {
        let (crit, trace) = crit_embedding(&p(6, &[5, -5], 0), &p(4, &[5, -5], 0)).unwrap();
        assert!(crit.is_empty());
        assert!(trace.certificate.is_some());
        assert!(trace.stages.is_none());
    }

    #[test]
    fn trace_json_is_flat() {
        let (_, trace) = crit_embedding(&p(6, &[5, -5], 0), &p(4, &[3, -3], 0)).unwrap();
        let v = serde_json::to_value(&trace).unwrap();
        assert_eq!(v["d"], 3);
        assert_eq!(v["mu_tilde"], serde_json::json!([2, 1]));
        assert_eq!(v["crit"], serde_json::json!(["5", "6"]));
    }
}
