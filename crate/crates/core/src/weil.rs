//! Critical numbers by scanning Γ-factor poles.
//!
//! The Rankin–Selberg factor is the L-function of the Weil-group
//! representation `τ = π^W ⊗ σ^W`. Each irreducible constituent contributes
//! one Gamma factor:
//!
//! * `(l, t)` (two-dimensional, `l ≥ 1`): `Γ_C(s + t + l/2)`,
//! * `(sgn^ε, t)` (one-dimensional): `Γ_R(s + t + ε)`.
//!
//! A candidate `t` is critical when neither `L(s, τ)` at `s = t` nor
//! `L(s, τ̌)` at `s = 1 − t` has a pole. Only pole locations of `Γ` are used;
//! nothing here depends on the closed-form bound of the inequality engine
//! except the (deliberately generous) size of the scan window.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::crit::{check_rank_pair, coset_offset, kappa, CritSet};
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::param::LanglandsParam;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum WeilKind {
    /// `(l, t)` with `l ≥ 1`.
    TwoDim(i64),
    /// `(sgn^ε, t)`.
    OneDim(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeilIrrep {
    pub kind: WeilKind,
    pub shift: HalfInt,
}

impl WeilIrrep {
    pub fn two_dim(l: i64, shift: HalfInt) -> Self {
        assert!(l >= 1, "two-dimensional constituents need l >= 1");
        WeilIrrep {
            kind: WeilKind::TwoDim(l),
            shift,
        }
    }

    pub fn one_dim(eps: u8, shift: HalfInt) -> Self {
        WeilIrrep {
            kind: WeilKind::OneDim(eps & 1),
            shift,
        }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            WeilKind::TwoDim(_) => 2,
            WeilKind::OneDim(_) => 1,
        }
    }

    /// Largest pole of the attached Gamma factor; the rest lie below it
    /// with spacing 1 (`Γ_C`) or 2 (`Γ_R`).
    fn top_pole_and_step(&self) -> (HalfInt, i64) {
        match self.kind {
            WeilKind::TwoDim(l) => (-self.shift - HalfInt::half(l), 1),
            WeilKind::OneDim(eps) => (-self.shift - i64::from(eps), 2),
        }
    }

    fn has_pole_at(&self, s: HalfInt) -> bool {
        let (top, step) = self.top_pole_and_step();
        let gap = top - s;
        gap.times2() >= 0 && gap.times2() % (2 * step) == 0
    }
}

impl fmt::Display for WeilIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WeilKind::TwoDim(l) => write!(f, "({l}, {})", self.shift),
            WeilKind::OneDim(e) => write!(f, "(sgn^{e}, {})", self.shift),
        }
    }
}

/// A semisimple Weil-group representation as a sorted multiset of irreducibles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct WeilRep {
    constituents: Vec<WeilIrrep>,
}

impl WeilRep {
    pub fn from_constituents(mut constituents: Vec<WeilIrrep>) -> Self {
        constituents.sort_unstable();
        WeilRep { constituents }
    }

    pub fn constituents(&self) -> &[WeilIrrep] {
        &self.constituents
    }

    pub fn dim(&self) -> usize {
        self.constituents.iter().map(WeilIrrep::dim).sum()
    }

    pub fn has_pole_at(&self, s: HalfInt) -> bool {
        self.constituents.iter().any(|c| c.has_pole_at(s))
    }
}

/// `π^W`: `⌊n/2⌋` copies of `(l_i, −w/2)` plus `(sgn^δ, −w/2)` for odd `n`.
pub fn to_weil(p: &LanglandsParam) -> WeilRep {
    let shift = HalfInt::half(-p.w());
    let mut parts: Vec<WeilIrrep> = p.l()[..p.n() / 2]
        .iter()
        .map(|&l| WeilIrrep::two_dim(l, shift))
        .collect();
    if p.is_odd() {
        parts.push(WeilIrrep::one_dim(p.delta(), shift));
    }
    WeilRep::from_constituents(parts)
}

fn tensor_irreps(a: &WeilIrrep, b: &WeilIrrep, out: &mut Vec<WeilIrrep>) {
    let t = a.shift + b.shift;
    match (a.kind, b.kind) {
        (WeilKind::TwoDim(l), WeilKind::TwoDim(lp)) => {
            out.push(WeilIrrep::two_dim(l + lp, t));
            let diff = (l - lp).abs();
            if diff == 0 {
                // (0, t) is reducible: (+, t) ⊕ (−, t)
                out.push(WeilIrrep::one_dim(0, t));
                out.push(WeilIrrep::one_dim(1, t));
            } else {
                out.push(WeilIrrep::two_dim(diff, t));
            }
        }
        (WeilKind::TwoDim(l), WeilKind::OneDim(_)) | (WeilKind::OneDim(_), WeilKind::TwoDim(l)) => {
            out.push(WeilIrrep::two_dim(l, t));
        }
        (WeilKind::OneDim(e), WeilKind::OneDim(ep)) => {
            out.push(WeilIrrep::one_dim((e + ep) % 2, t));
        }
    }
}

pub fn tensor(a: &WeilRep, b: &WeilRep) -> WeilRep {
    let mut out = Vec::with_capacity(2 * a.constituents.len() * b.constituents.len());
    for x in &a.constituents {
        for y in &b.constituents {
            tensor_irreps(x, y, &mut out);
        }
    }
    WeilRep::from_constituents(out)
}

/// Contragredient: negate every shift.
pub fn dual(r: &WeilRep) -> WeilRep {
    WeilRep::from_constituents(
        r.constituents
            .iter()
            .map(|c| WeilIrrep {
                kind: c.kind,
                shift: -c.shift,
            })
            .collect(),
    )
}

/// Poles of `L(s, r)` in the closed window `[lo, hi]`.
pub fn pole_set(r: &WeilRep, lo: HalfInt, hi: HalfInt) -> BTreeSet<HalfInt> {
    let mut poles = BTreeSet::new();
    for c in &r.constituents {
        let (top, step) = c.top_pole_and_step();
        let mut p = top;
        if p > hi {
            // jump down to the first pole not above hi
            let excess = (p - hi).times2();
            p = p - (excess + 2 * step - 1).div_euclid(2 * step) * step;
        }
        while p >= lo {
            poles.insert(p);
            p = p - step;
        }
    }
    poles
}

/// The scan window `|t − κ| ≤ (l_1 + l′_1)/2 + 2`, as closed endpoints.
pub fn scan_window(pi: &LanglandsParam, sigma: &LanglandsParam) -> (HalfInt, HalfInt) {
    let radius = HalfInt::half(pi.l_at(1) + sigma.l_at(1)) + 2;
    let k = kappa(pi, sigma);
    (k - radius, k + radius)
}

/// Critical numbers by direct pole scanning over `(m + n)/2 + Z`.
pub fn crit_gamma(pi: &LanglandsParam, sigma: &LanglandsParam) -> Result<CritSet> {
    check_rank_pair(pi, sigma)?;
    let tau = tensor(&to_weil(pi), &to_weil(sigma));
    let tau_dual = dual(&tau);
    let (lo, hi) = scan_window(pi, sigma);
    let offset = coset_offset(pi.n(), sigma.n());

    let poles = pole_set(&tau, lo, hi);
    // t is excluded when 1 − t is a pole of L(s, τ̌); 1 − t ranges over [1 − hi, 1 − lo]
    let dual_poles = pole_set(&tau_dual, HalfInt::ONE - hi, HalfInt::ONE - lo);

    let mut t = offset + (lo - offset).ceil();
    let mut crit = Vec::new();
    while t <= hi {
        if !poles.contains(&t) && !dual_poles.contains(&(HalfInt::ONE - t)) {
            crit.push(t);
        }
        t = t + 1;
    }
    Ok(CritSet::from_values(offset, crit))
}
