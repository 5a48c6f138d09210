//! Sets of critical numbers and the helpers shared by all three engines.

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::param::LanglandsParam;

/// A finite set of critical numbers, all in one coset of `Z` inside `(1/2)·Z`.
///
/// Serialized as a sorted list of `HalfInt` strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CritSet {
    values: BTreeSet<HalfInt>,
    coset_offset: HalfInt,
}

impl CritSet {
    /// An empty set in the coset `(m + n)/2 + Z`.
    pub fn empty_for(n: usize, m: usize) -> Self {
        CritSet {
            values: BTreeSet::new(),
            coset_offset: coset_offset(n, m),
        }
    }

    /// Collect values; every value must lie in the coset of `offset`.
    pub fn from_values(offset: HalfInt, values: impl IntoIterator<Item = HalfInt>) -> Self {
        let offset = HalfInt::from_times2(offset.times2().rem_euclid(2));
        let values: BTreeSet<HalfInt> = values.into_iter().collect();
        debug_assert!(values.iter().all(|t| t.same_coset(offset)));
        CritSet {
            values,
            coset_offset: offset,
        }
    }

    pub fn coset_offset(&self) -> HalfInt {
        self.coset_offset
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, t: HalfInt) -> bool {
        self.values.contains(&t)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = HalfInt> + '_ {
        self.values.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<HalfInt> {
        self.iter().collect()
    }

    /// Image under `t ↦ w + w′ + 1 − t`.
    pub fn reflected(&self, w: i64, w_prime: i64) -> CritSet {
        CritSet {
            values: self
                .values
                .iter()
                .map(|&t| reflect(t, w, w_prime))
                .collect(),
            coset_offset: self.coset_offset,
        }
    }

    pub fn is_reflection_closed(&self, w: i64, w_prime: i64) -> bool {
        self.reflected(w, w_prime) == *self
    }

    /// Smallest element of the symmetric difference, if the sets differ.
    pub fn first_difference(&self, other: &CritSet) -> Option<HalfInt> {
        self.values
            .symmetric_difference(&other.values)
            .next()
            .copied()
    }
}

impl Serialize for CritSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.values.iter())
    }
}

impl<'de> Deserialize<'de> for CritSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<HalfInt>::deserialize(deserializer)?;
        let offset = values.first().copied().unwrap_or(HalfInt::ZERO);
        if values.iter().any(|t| !t.same_coset(offset)) {
            return Err(serde::de::Error::custom("critical numbers span two cosets"));
        }
        Ok(CritSet::from_values(offset, values))
    }
}

/// The reflection `t ↦ w + w′ + 1 − t` about `κ = (w + w′ + 1)/2`.
pub fn reflect(t: HalfInt, w: i64, w_prime: i64) -> HalfInt {
    HalfInt::from_int(w + w_prime + 1) - t
}

/// Representative in `{0, 1/2}` of `(m + n)/2 mod 1`.
pub fn coset_offset(n: usize, m: usize) -> HalfInt {
    HalfInt::half(((n + m) % 2) as i64)
}

/// `κ = (w + w′ + 1)/2`.
pub fn kappa(pi: &LanglandsParam, sigma: &LanglandsParam) -> HalfInt {
    HalfInt::half(pi.w() + sigma.w() + 1)
}

/// `κ′ = κ − 1/2 = (w + w′)/2`.
pub fn kappa_prime(pi: &LanglandsParam, sigma: &LanglandsParam) -> HalfInt {
    HalfInt::half(pi.w() + sigma.w())
}

/// Both ranks odd: the case carrying the parity condition.
pub fn is_exceptional(pi: &LanglandsParam, sigma: &LanglandsParam) -> bool {
    pi.is_odd() && sigma.is_odd()
}

/// `ε ≡ δ + δ′ (mod 2)`.
pub fn epsilon(pi: &LanglandsParam, sigma: &LanglandsParam) -> u8 {
    (pi.delta() + sigma.delta()) % 2
}

pub(crate) fn check_rank_pair(pi: &LanglandsParam, sigma: &LanglandsParam) -> Result<()> {
    if pi.n() == 1 && sigma.n() == 1 {
        Err(Error::RankPairExcluded)
    } else {
        Ok(())
    }
}

/// Membership in `Z_ε = (2N − ε) ∪ −(2N − 1 − ε)` with `N = {1, 2, 3, …}`.
///
/// `Z₁ = {1, 3, 5, …} ∪ {0, −2, −4, …}` and `Z₀ = {2, 4, 6, …} ∪ {−1, −3, …}`.
pub fn in_parity_class(x: i64, eps: u8) -> bool {
    let eps = i64::from(eps & 1);
    if x >= 1 {
        (x + eps) % 2 == 0
    } else {
        (1 - x + eps) % 2 == 0
    }
}

/// Half-integral variant: non-integers are never in `Z_ε`.
pub fn in_parity_class_half(x: HalfInt, eps: u8) -> bool {
    x.to_integer().is_some_and(|x| in_parity_class(x, eps))
}

/// `t ↦ s = t + (n − m)/2 − 1`, integral for `t` in the coset `(m + n)/2 + Z`.
pub fn t_to_s(t: HalfInt, n: usize, m: usize) -> Option<i64> {
    (t + HalfInt::half(n as i64 - m as i64) - 1).to_integer()
}

/// Inverse of [`t_to_s`].
pub fn s_to_t(s: i64, n: usize, m: usize) -> HalfInt {
    HalfInt::from_int(s + 1) - HalfInt::half(n as i64 - m as i64)
}

/// The condition `s − (n − m + w + w′)/2 + 1 ∈ Z_ε` on the twist `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityFilter {
    pub eps: u8,
    pub n: usize,
    pub m: usize,
    pub w: i64,
    pub w_prime: i64,
}

impl ParityFilter {
    /// The filter for a pair in the exceptional case, `None` otherwise.
    pub fn for_pair(pi: &LanglandsParam, sigma: &LanglandsParam) -> Option<Self> {
        is_exceptional(pi, sigma).then(|| ParityFilter {
            eps: epsilon(pi, sigma),
            n: pi.n(),
            m: sigma.n(),
            w: pi.w(),
            w_prime: sigma.w(),
        })
    }

    pub fn admits(&self, s: i64) -> bool {
        let shift = HalfInt::half(self.n as i64 - self.m as i64 + self.w + self.w_prime);
        in_parity_class_half(HalfInt::from_int(s + 1) - shift, self.eps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_classes_match_listed_sets() {
        let z1: Vec<i64> = (-6..=6).filter(|&x| in_parity_class(x, 1)).collect();
        assert_eq!(z1, vec![-6, -4, -2, 0, 1, 3, 5]);
        let z0: Vec<i64> = (-6..=6).filter(|&x| in_parity_class(x, 0)).collect();
        assert_eq!(z0, vec![-5, -3, -1, 2, 4, 6]);
    }

    #[test]
    fn parity_classes_partition_the_integers() {
        for x in -500..=500 {
            assert!(in_parity_class(x, 0) ^ in_parity_class(x, 1), "x = {x}");
        }
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(reflect(HalfInt::from_int(5), 6, 4), HalfInt::from_int(6));
        let k = HalfInt::half(11);
        let x = HalfInt::half(3);
        assert_eq!(reflect(k + x, 6, 4), k - x);
        let gj = CritSet::from_values(HalfInt::ZERO, [-2, 0, 1, 3].map(HalfInt::from_int));
        assert_eq!(
            gj.reflected(0, 0).to_vec(),
            [-2, 0, 1, 3].map(HalfInt::from_int).to_vec()
        );
        assert!(gj.is_reflection_closed(0, 0));
    }

    #[test]
    fn s_and_t_maps() {
        assert_eq!(t_to_s(HalfInt::half(3), 2, 1), Some(1));
        assert_eq!(s_to_t(1, 2, 1), HalfInt::half(3));
        assert_eq!(t_to_s(HalfInt::from_int(5), 2, 2), Some(4));
        assert_eq!(t_to_s(HalfInt::half(3), 2, 2), None);
        for s in -5..=5 {
            assert_eq!(t_to_s(s_to_t(s, 5, 2), 5, 2), Some(s));
        }
    }

    #[test]
    fn parity_filter_on_gelbart_jacquet() {
        let f = ParityFilter {
            eps: 1,
            n: 3,
            m: 1,
            w: 0,
            w_prime: 0,
        };
        let kept: Vec<i64> = (-2..=3).filter(|&s| f.admits(s)).collect();
        assert_eq!(kept, vec![-2, 0, 1, 3]);
        let f = ParityFilter {
            eps: 0,
            n: 3,
            m: 1,
            w: 0,
            w_prime: -2,
        };
        let kept: Vec<i64> = (-3..=2).filter(|&s| f.admits(s)).collect();
        assert_eq!(kept, vec![-2, 1]);
    }

    #[test]
    fn serializes_as_strings() {
        let c = CritSet::from_values(HalfInt::HALF, [3, 5, 7].map(HalfInt::half));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"["3/2","5/2","7/2"]"#);
        let back: CritSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<CritSet>(r#"["1","3/2"]"#).is_err());
    }

    #[test]
    fn first_difference_is_smallest() {
        let a = CritSet::from_values(HalfInt::ZERO, [1, 2, 5].map(HalfInt::from_int));
        let b = CritSet::from_values(HalfInt::ZERO, [1, 3, 5].map(HalfInt::from_int));
        assert_eq!(a.first_difference(&b), Some(HalfInt::from_int(2)));
        assert_eq!(a.first_difference(&a), None);
    }
}
