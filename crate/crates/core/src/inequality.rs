//! Critical numbers from a closed-form criterion.
//!
//! `t ∈ (m + n)/2 + Z` is critical iff `|t − κ| < L + 1/2`, and in the
//! exceptional case additionally `t − κ′ ∈ Z_ε` with `ε ≡ δ + δ′ (mod 2)`.

use serde::Serialize;

use crate::crit::{
    check_rank_pair, coset_offset, epsilon, in_parity_class_half, is_exceptional, kappa,
    kappa_prime, CritSet,
};
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::param::LanglandsParam;

/// `L₀ = min |l_i − l′_j|`, skipping the pair of middle indices when both ranks are odd.
pub fn bound_l0(pi: &LanglandsParam, sigma: &LanglandsParam) -> i64 {
    let (n, m) = (pi.n(), sigma.n());
    let exceptional = is_exceptional(pi, sigma);
    let (mid_i, mid_j) = (n.div_ceil(2), m.div_ceil(2));
    let mut best = i64::MAX;
    for i in 1..=n {
        for j in 1..=m {
            if exceptional && i == mid_i && j == mid_j {
                continue;
            }
            best = best.min((pi.l_at(i) - sigma.l_at(j)).abs());
        }
    }
    best
}

/// `L = L₀ / 2`.
#[allow(non_snake_case)]
pub fn bound_L(pi: &LanglandsParam, sigma: &LanglandsParam) -> HalfInt {
    HalfInt::half(bound_l0(pi, sigma))
}

pub fn crit_inequality(pi: &LanglandsParam, sigma: &LanglandsParam) -> Result<CritSet> {
    check_rank_pair(pi, sigma)?;
    let k = kappa(pi, sigma);
    let kp = kappa_prime(pi, sigma);
    let radius = bound_L(pi, sigma) + HalfInt::HALF;
    let offset = coset_offset(pi.n(), sigma.n());
    let parity = is_exceptional(pi, sigma).then(|| epsilon(pi, sigma));

    // strict inequality: enumerate the open window (κ − radius, κ + radius)
    let mut t = offset + (k - radius - offset).floor() + 1;
    let mut crit = Vec::new();
    while t < k + radius {
        if (t - k).abs() < radius && parity.is_none_or(|eps| in_parity_class_half(t - kp, eps)) {
            crit.push(t);
        }
        t = t + 1;
    }
    Ok(CritSet::from_values(offset, crit))
}

/// Reason attached to a certified-empty verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Coincidence {
    pub i: usize,
    pub j: usize,
    pub value: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Emptiness {
    /// Some `l_i = l′_j` with not both zero.
    Empty(Coincidence),
    /// Exceptional case with `L₀ ≠ 0`: the parity condition may still empty the window.
    PossiblyNonEmpty,
    /// Non-exceptional case with `L₀ ≠ 0`.
    NonEmpty,
}

/// First coincidence `l_i = l′_j ≠ 0`, which forces an empty set.
pub fn find_coincidence(pi: &LanglandsParam, sigma: &LanglandsParam) -> Option<Coincidence> {
    for i in 1..=pi.n() {
        for j in 1..=sigma.n() {
            let value = pi.l_at(i);
            if value == sigma.l_at(j) && value != 0 {
                return Some(Coincidence { i, j, value });
            }
        }
    }
    None
}

pub fn is_empty_quick(pi: &LanglandsParam, sigma: &LanglandsParam) -> Emptiness {
    if let Some(c) = find_coincidence(pi, sigma) {
        return Emptiness::Empty(c);
    }
    if is_exceptional(pi, sigma) {
        Emptiness::PossiblyNonEmpty
    } else {
        Emptiness::NonEmpty
    }
}

/// Outcome of evaluating the proposed witness `t₀ = L − 1 + (w + w′ + 1)/2`.
///
/// The formula does not always land in the coset `(m + n)/2 + Z`; this
/// records what happens without correcting it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessDiagnostic {
    pub t0: HalfInt,
    pub reflected: HalfInt,
    /// `t₀` is not in `(m + n)/2 + Z`.
    pub off_coset: bool,
    pub t0_critical: bool,
    pub reflected_critical: bool,
}

impl WitnessDiagnostic {
    /// True when the formula fails to produce a critical number.
    pub fn fires(&self) -> bool {
        self.off_coset || !self.t0_critical || !self.reflected_critical
    }
}

/// Evaluate `t₀` for non-exceptional pairs with `L₀ ≠ 0`; `None` otherwise.
pub fn witness_diagnostic(
    pi: &LanglandsParam,
    sigma: &LanglandsParam,
    crit: &CritSet,
) -> Option<WitnessDiagnostic> {
    if is_exceptional(pi, sigma) || bound_l0(pi, sigma) == 0 {
        return None;
    }
    let t0 = bound_L(pi, sigma) - 1 + kappa(pi, sigma);
    let reflected = crate::crit::reflect(t0, pi.w(), sigma.w());
    Some(WitnessDiagnostic {
        t0,
        reflected,
        off_coset: !t0.same_coset(coset_offset(pi.n(), sigma.n())),
        t0_critical: crit.contains(t0),
        reflected_critical: crit.contains(reflected),
    })
}
