//! One-step branching from `GL_{r+1}` to `GL_r` on highest weights.
//!
//! `β ≺ α` means `α_ρ ≥ β_ρ ≥ α_{ρ+1}` for all `ρ`; the irreducible
//! constituents of the restriction of `M_α` are the `M_β` with `β ≺ α`,
//! each once. A one-dimensional `det^s` occurs in `M_α ⊗ M_β` exactly when
//! `α − s ≺ β̌`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::crit::ParityFilter;
use crate::embedding::{emb_interval, IntInterval};
use crate::error::{invariant, Error, Result, Violation};
use crate::weight::{dual_entries, first_ascent, shifted};

/// Default bound on the number of branches [`branch_enumerate`] will produce.
pub const DEFAULT_BRANCH_CAP: u128 = 1_000_000;

pub fn interlaces(beta: &[i64], alpha: &[i64]) -> Result<bool> {
    if alpha.len() != beta.len() + 1 {
        return Err(Error::RankMismatch {
            expected: beta.len() + 1,
            found: alpha.len(),
        });
    }
    Ok(beta
        .iter()
        .enumerate()
        .all(|(i, &b)| alpha[i] >= b && b >= alpha[i + 1]))
}

fn require_dominant(alpha: &[i64]) -> Result<()> {
    match first_ascent(alpha) {
        Some(index) => Err(Error::Invalid(vec![Violation::NotDominant { index }])),
        None => Ok(()),
    }
}

/// `Π (α_ρ − α_{ρ+1} + 1)`, saturating.
pub fn branch_count(alpha: &[i64]) -> u128 {
    alpha
        .windows(2)
        .map(|w| (w[0] - w[1] + 1).max(0) as u128)
        .fold(1u128, |acc, x| acc.saturating_mul(x))
}

/// Streams every `β ≺ α`, largest first in lexicographic order.
#[derive(Debug, Clone)]
pub struct BranchIter {
    alpha: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl Iterator for BranchIter {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut step = current.clone();
        // odometer: lower the last coordinate that can still go down, reset the rest
        let mut pos = step.len();
        while pos > 0 {
            pos -= 1;
            if step[pos] > self.alpha[pos + 1] {
                step[pos] -= 1;
                for (i, x) in step.iter_mut().enumerate().skip(pos + 1) {
                    *x = self.alpha[i];
                }
                self.next = Some(step);
                break;
            }
        }
        Some(current)
    }
}

pub fn branch_enumerate(alpha: &[i64], cap: u128) -> Result<BranchIter> {
    if alpha.is_empty() {
        return Err(Error::RankMismatch {
            expected: 1,
            found: 0,
        });
    }
    require_dominant(alpha)?;
    let count = branch_count(alpha);
    if count > cap {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    Ok(BranchIter {
        alpha: alpha.to_vec(),
        next: Some(alpha[..alpha.len() - 1].to_vec()),
    })
}

/// `Π_{i<j} (μ_i − μ_j + j − i)/(j − i)` in exact arithmetic.
pub fn weyl_dim(mu: &[i64]) -> Result<BigUint> {
    require_dominant(mu)?;
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let gap = (j - i) as u64;
            num *= (mu[i] - mu[j]) as u64 + gap;
            den *= gap;
        }
    }
    Ok(num / den)
}

/// A multiplicity together with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub value: u8,
    /// The branch enumeration was too large and only the interlacing test ran.
    pub fallback: bool,
}

/// Multiplicity of `det^s` in `M_α ⊗ M_β` for `α` of rank `r`, `β` of rank `r + 1`.
///
/// Counts the `γ ≺ β` equal to `α̌ + s·𝟙` and checks the count against the
/// interlacing `α − s ≺ β̌`.
pub fn tate_multiplicity(alpha: &[i64], beta: &[i64], s: i64) -> Result<Multiplicity> {
    let beta_check = dual_entries(beta);
    let direct = interlaces(&shifted(alpha, s), &beta_check)?;
    let target = shifted(&dual_entries(alpha), -s);
    match branch_enumerate(beta, DEFAULT_BRANCH_CAP) {
        Ok(iter) => {
            let hits = iter.filter(|gamma| *gamma == target).count();
            invariant(hits == usize::from(direct), "tate-principle", || {
                format!(
                    "α = {alpha:?}, β = {beta:?}, s = {s}: {hits} branches vs interlacing {direct}"
                )
            })?;
            Ok(Multiplicity {
                value: hits as u8,
                fallback: false,
            })
        }
        Err(Error::EnumerationTooLarge { .. }) => Ok(Multiplicity {
            value: u8::from(direct),
            fallback: true,
        }),
        Err(e) => Err(e),
    }
}

/// Multiplicities of `det^s` in `M_α ⊗ M_β`, zero entries omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TateDecomposition {
    pub multiplicities: BTreeMap<i64, u8>,
    /// Some multiplicity came from the interlacing route alone.
    pub fallback: bool,
}

impl TateDecomposition {
    pub fn support(&self) -> Vec<i64> {
        self.multiplicities.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Multiplicities of the intersection of the two invariant spaces.
    pub fn intersect(&self, other: &TateDecomposition) -> TateDecomposition {
        let multiplicities = self
            .multiplicities
            .iter()
            .filter_map(|(&s, &a)| other.multiplicities.get(&s).map(|&b| (s, a.min(b))))
            .collect();
        TateDecomposition {
            multiplicities,
            fallback: self.fallback || other.fallback,
        }
    }
}

/// All `s` with `det^s ⊂ M_α ⊗ M_β`, optionally restricted by a parity filter.
///
/// Enumerates the branches of `β` once and reads off which ones are
/// translates of `α̌`; the resulting support must be `Emb(α, β̌)`.
pub fn tate_decomposition(
    alpha: &[i64],
    beta: &[i64],
    parity: Option<ParityFilter>,
) -> Result<TateDecomposition> {
    if alpha.is_empty() {
        return Err(Error::RankMismatch {
            expected: 1,
            found: 0,
        });
    }
    let beta_check = dual_entries(beta);
    let emb: IntInterval = emb_interval(alpha, &beta_check)?;
    let alpha_check = dual_entries(alpha);

    let mut multiplicities = BTreeMap::new();
    let fallback = match branch_enumerate(beta, DEFAULT_BRANCH_CAP) {
        Ok(iter) => {
            for gamma in iter {
                let diffs: Vec<i64> = gamma.iter().zip(&alpha_check).map(|(g, a)| g - a).collect();
                let s = diffs[0];
                if diffs.iter().all(|&x| x == s) {
                    *multiplicities.entry(s).or_insert(0u8) += 1;
                }
            }
            false
        }
        Err(Error::EnumerationTooLarge { .. }) => {
            multiplicities.extend(emb.iter().map(|s| (s, 1u8)));
            true
        }
        Err(e) => return Err(e),
    };

    invariant(
        multiplicities.values().all(|&m| m == 1),
        "multiplicity-one",
        || format!("{multiplicities:?}"),
    )?;
    let support: Vec<i64> = multiplicities.keys().copied().collect();
    let expected: Vec<i64> = emb.iter().collect();
    invariant(support == expected, "tate-principle", || {
        format!(
            "support {support:?} but Emb(α, β̌) = [{}, {}]",
            emb.lo, emb.hi
        )
    })?;

    if let Some(f) = parity {
        multiplicities.retain(|&s, _| f.admits(s));
    }
    Ok(TateDecomposition {
        multiplicities,
        fallback,
    })
}
