//! Dominant and pure highest weights of `GL_n`.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Result, Violation};

/// Index (1-based) of the first ascent, if any.
pub(crate) fn first_ascent(entries: &[i64]) -> Option<usize> {
    entries.windows(2).position(|p| p[0] < p[1]).map(|i| i + 1)
}

pub fn is_dominant(entries: &[i64]) -> bool {
    first_ascent(entries).is_none()
}

/// The common value of `y_i + y_{n+1-i}` when it exists.
pub fn purity_weight(entries: &[i64]) -> Option<i64> {
    let n = entries.len();
    let wt = entries.first()? + entries.last()?;
    (0..n)
        .all(|i| entries[i] + entries[n - 1 - i] == wt)
        .then_some(wt)
}

/// `(−y_n, …, −y_1)`.
pub fn dual_entries(entries: &[i64]) -> Vec<i64> {
    entries.iter().rev().map(|x| -x).collect()
}

/// `y − s·(1, …, 1)`.
pub fn shifted(entries: &[i64], s: i64) -> Vec<i64> {
    entries.iter().map(|x| x - s).collect()
}

/// An element of `X⁺(n)`: integer entries, non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self, Violation> {
        if entries.is_empty() {
            return Err(Violation::ZeroRank);
        }
        match first_ascent(&entries) {
            Some(index) => Err(Violation::NotDominant { index }),
            None => Ok(DominantWeight(entries)),
        }
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl Deref for DominantWeight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Violation;
    fn try_from(v: Vec<i64>) -> Result<Self, Violation> {
        DominantWeight::new(v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Vec<i64> {
        w.0
    }
}

/// An element of `X₀⁺(n)`: dominant with `μ_i + μ_{n+1−i} = wt(μ)` for all `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct PureWeight {
    entries: Vec<i64>,
    wt: i64,
}

impl PureWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self, Violation> {
        let dominant = DominantWeight::new(entries)?;
        let entries = dominant.into_vec();
        let n = entries.len();
        let wt = entries[0] + entries[n - 1];
        if let Some(i) = (0..n).find(|&i| entries[i] + entries[n - 1 - i] != wt) {
            return Err(Violation::NotPure { index: i + 1 });
        }
        Ok(PureWeight { entries, wt })
    }

    pub fn zero(rank: usize) -> Self {
        PureWeight {
            entries: vec![0; rank],
            wt: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn wt(&self) -> i64 {
        self.wt
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// 1-based coordinate access.
    pub fn at(&self, index: usize) -> i64 {
        self.entries[index - 1]
    }

    /// The contragredient weight `μ̌_j = −μ_{n+1−j}`; an involution with `wt(μ̌) = −wt(μ)`.
    pub fn dual(&self) -> PureWeight {
        PureWeight {
            entries: dual_entries(&self.entries),
            wt: -self.wt,
        }
    }

    /// `μ + c·(1, …, 1)`, which stays pure with weight `wt + 2c`.
    pub fn twist(&self, c: i64) -> PureWeight {
        PureWeight {
            entries: self.entries.iter().map(|x| x + c).collect(),
            wt: self.wt + 2 * c,
        }
    }
}

impl Deref for PureWeight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.entries
    }
}

impl TryFrom<Vec<i64>> for PureWeight {
    type Error = Violation;
    fn try_from(v: Vec<i64>) -> Result<Self, Violation> {
        PureWeight::new(v)
    }
}

impl From<PureWeight> for Vec<i64> {
    fn from(w: PureWeight) -> Vec<i64> {
        w.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_examples() {
        let mu = PureWeight::new(vec![3, 1]).unwrap();
        assert_eq!(mu.dual().entries(), &[-1, -3]);
        assert_eq!(mu.dual().wt(), -mu.wt());
        assert_eq!(PureWeight::zero(4).dual(), PureWeight::zero(4));
        let sd = PureWeight::new(vec![1, 0, 0, -1]).unwrap();
        assert_eq!(sd.dual(), sd);
    }

    #[test]
    fn rejects_non_dominant_and_impure() {
        assert_eq!(
            PureWeight::new(vec![1, 2]),
            Err(Violation::NotDominant { index: 1 })
        );
        assert_eq!(
            PureWeight::new(vec![3, 1, 0]),
            Err(Violation::NotPure { index: 2 })
        );
        assert_eq!(PureWeight::new(vec![]), Err(Violation::ZeroRank));
    }

    #[test]
    fn rank_one_weight_is_twice_the_entry() {
        assert_eq!(PureWeight::new(vec![-1]).unwrap().wt(), -2);
    }

    #[test]
    fn purity_helper() {
        assert_eq!(purity_weight(&[2, 1, 0, -1]), Some(1));
        assert_eq!(purity_weight(&[2, 1, 1, -1]), None);
    }
}
