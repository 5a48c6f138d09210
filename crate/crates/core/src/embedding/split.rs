//! Defects, the splitting maps `θ`, `θ′`, and embedding intervals.
//!
//! For a pair of rank-`2r` weights the inequality system
//!
//! ```text
//! u_{2ρ−1} ≥ v_{2ρ−1} ≥ v_{2ρ} ≥ u_{2ρ}    (ρ = 1, …, r)
//! ```
//!
//! splits into two interlacing conditions `θ′_i(v) ≺ θ_i(u)`, provided the
//! side whose defect must vanish (the `u` side for even `r`, the `v` side for
//! odd `r`) has zero defect.

use serde::{Serialize, Serializer};

use crate::branching::interlaces;
use crate::error::{Error, Result};

/// `d(y) = y_r − y_{r+1}` for `y` of length `2r`.
pub fn defect(y: &[i64]) -> Result<i64> {
    if y.is_empty() || !y.len().is_multiple_of(2) {
        return Err(Error::OddLength(y.len()));
    }
    let r = y.len() / 2;
    Ok(y[r - 1] - y[r])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hat {
    pub u_hat: Vec<i64>,
    pub v0_hat: Vec<i64>,
    pub d: i64,
}

/// Add `d = min(d(u), d(v))` to the last `r` entries of both weights.
pub fn hat_modify(u: &[i64], v0: &[i64]) -> Result<Hat> {
    if u.len() != v0.len() {
        return Err(Error::RankMismatch {
            expected: u.len(),
            found: v0.len(),
        });
    }
    let d = defect(u)?.min(defect(v0)?);
    let r = u.len() / 2;
    let bump = |y: &[i64]| -> Vec<i64> {
        y.iter()
            .enumerate()
            .map(|(i, &x)| if i >= r { x + d } else { x })
            .collect()
    };
    Ok(Hat {
        u_hat: bump(u),
        v0_hat: bump(v0),
        d,
    })
}

/// 1-based coordinate lists selected by `θ_which` (length `r + 1`).
fn theta_indices(r: usize, which: u8) -> Vec<usize> {
    if r == 1 {
        return vec![1, 2];
    }
    let mut idx = Vec::with_capacity(r + 1);
    match (r.is_multiple_of(2), which) {
        (true, 1) => {
            idx.push(1);
            idx.extend((2..=r).step_by(2));
            idx.extend((r + 3..2 * r).step_by(2));
            idx.push(2 * r);
        }
        (true, _) => {
            idx.extend((1..r).step_by(2));
            idx.push(r + 1);
            idx.extend((r + 2..=2 * r).step_by(2));
        }
        (false, 1) => {
            idx.push(1);
            idx.extend((2..r).step_by(2));
            idx.extend((r + 2..2 * r).step_by(2));
            idx.push(2 * r);
        }
        (false, _) => {
            idx.extend((1..=r).step_by(2));
            idx.extend((r + 1..=2 * r).step_by(2));
        }
    }
    idx
}

/// 1-based coordinate lists selected by `θ′_which` (length `r`).
fn theta_prime_indices(r: usize, which: u8) -> Vec<usize> {
    if r == 1 {
        return vec![1];
    }
    let mut idx = Vec::with_capacity(r);
    match (r.is_multiple_of(2), which) {
        (true, 1) => {
            idx.extend((2..=r).step_by(2));
            idx.extend((r + 1..2 * r).step_by(2));
        }
        (true, _) => {
            idx.extend((1..r).step_by(2));
            idx.extend((r + 2..=2 * r).step_by(2));
        }
        (false, 1) => {
            idx.extend((2..=r + 1).step_by(2));
            idx.extend((r + 2..2 * r).step_by(2));
        }
        (false, _) => {
            idx.extend((1..=r).step_by(2));
            idx.extend((r + 3..=2 * r).step_by(2));
        }
    }
    idx
}

fn select(y: &[i64], idx: &[usize]) -> Vec<i64> {
    idx.iter().map(|&i| y[i - 1]).collect()
}

fn check_which(which: u8) -> Result<()> {
    match which {
        1 | 2 => Ok(()),
        _ => Err(Error::InvariantViolated {
            rule: "theta-index",
            detail: format!("θ_{which}"),
        }),
    }
}

/// `θ_which(y)`, rank `r + 1`. For even `r` the argument must have zero defect.
pub fn split_theta(y: &[i64], which: u8) -> Result<Vec<i64>> {
    check_which(which)?;
    let d = defect(y)?;
    let r = y.len() / 2;
    if r.is_multiple_of(2) && d != 0 {
        return Err(Error::DefectNonzero { defect: d });
    }
    Ok(select(y, &theta_indices(r, which)))
}

/// `θ′_which(z)`, rank `r`. For odd `r` the argument must have zero defect.
pub fn split_theta_prime(z: &[i64], which: u8) -> Result<Vec<i64>> {
    check_which(which)?;
    let d = defect(z)?;
    let r = z.len() / 2;
    if r % 2 == 1 && d != 0 {
        return Err(Error::DefectNonzero { defect: d });
    }
    Ok(select(z, &theta_prime_indices(r, which)))
}

/// A closed integer interval; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntInterval {
    pub lo: i64,
    pub hi: i64,
}

impl IntInterval {
    pub const fn new(lo: i64, hi: i64) -> Self {
        IntInterval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, s: i64) -> bool {
        self.lo <= s && s <= self.hi
    }

    pub fn intersect(&self, other: &IntInterval) -> IntInterval {
        IntInterval {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }
}

impl Serialize for IntInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(serializer)
    }
}

/// `Emb(β, α) = {s ∈ Z : β − s ≺ α}` for `β` of rank `r` and `α` of rank `r + 1`.
pub fn emb_interval(beta: &[i64], alpha: &[i64]) -> Result<IntInterval> {
    if alpha.len() != beta.len() + 1 {
        return Err(Error::RankMismatch {
            expected: beta.len() + 1,
            found: alpha.len(),
        });
    }
    // α_ρ ≥ β_ρ − s ≥ α_{ρ+1}  ⇔  β_ρ − α_ρ ≤ s ≤ β_ρ − α_{ρ+1}
    let lo = beta
        .iter()
        .zip(alpha)
        .map(|(b, a)| b - a)
        .max()
        .unwrap_or(i64::MIN);
    let hi = beta
        .iter()
        .zip(&alpha[1..])
        .map(|(b, a)| b - a)
        .min()
        .unwrap_or(i64::MAX);
    Ok(IntInterval { lo, hi })
}

/// The `4r`-term system `u_{2ρ−1} ≥ v_{2ρ−1} ≥ v_{2ρ} ≥ u_{2ρ}`.
pub fn system_holds(u: &[i64], v: &[i64]) -> bool {
    u.len() == v.len()
        && u.len().is_multiple_of(2)
        && u.chunks_exact(2)
            .zip(v.chunks_exact(2))
            .all(|(ub, vb)| ub[0] >= vb[0] && vb[0] >= vb[1] && vb[1] >= ub[1])
}

/// The split form of the system for `y` of zero defect and arbitrary `z`:
/// `θ′_i(z) ≺ θ_i(y)` for even `r`, `θ′_i(y) ≺ θ_i(z)` for odd `r`.
pub fn split_embeddings_hold(y: &[i64], z: &[i64]) -> Result<bool> {
    let r = y.len() / 2;
    let (upper, lower) = if r.is_multiple_of(2) { (y, z) } else { (z, y) };
    for which in [1, 2] {
        let top = split_theta(upper, which)?;
        let bottom = split_theta_prime(lower, which)?;
        if !interlaces(&bottom, &top)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defect_examples() {
        assert_eq!(defect(&[3, 1, 1, -1]).unwrap(), 0);
        assert_eq!(defect(&[-1, -5]).unwrap(), 4);
        assert_eq!(defect(&[3, 0]).unwrap(), 3);
        assert!(defect(&[1, 2, 3]).is_err());
    }

    #[test]
    fn hat_examples() {
        let h = hat_modify(&[-1, -5], &[3, 0]).unwrap();
        assert_eq!(
            (h.d, h.u_hat.clone(), h.v0_hat.clone()),
            (3, vec![-1, -2], vec![3, 3])
        );
        let h = hat_modify(&[1, 0, 0, -1], &[1, 1, 1, 1]).unwrap();
        assert_eq!(
            (h.d, h.u_hat, h.v0_hat),
            (0, vec![1, 0, 0, -1], vec![1, 1, 1, 1])
        );
    }

    #[test]
    fn theta_rank_two() {
        let y = [4, 3, 3, 1];
        assert_eq!(split_theta(&y, 1).unwrap(), vec![4, 3, 1]);
        assert_eq!(split_theta(&y, 2).unwrap(), vec![4, 3, 1]);
        let y = [10, 7, 7, 2];
        assert_eq!(split_theta(&y, 1).unwrap(), vec![10, 7, 2]);
        let z = [9, 8, 6, 5];
        assert_eq!(split_theta_prime(&z, 1).unwrap(), vec![8, 6]);
        assert_eq!(split_theta_prime(&z, 2).unwrap(), vec![9, 5]);
        assert_eq!(split_theta(&z, 1), Err(Error::DefectNonzero { defect: 2 }));
    }

    #[test]
    fn theta_rank_one() {
        assert_eq!(split_theta(&[3, -2], 1).unwrap(), vec![3, -2]);
        assert_eq!(split_theta_prime(&[5, 5], 2).unwrap(), vec![5]);
        assert!(split_theta_prime(&[5, 4], 2).is_err());
    }

    #[test]
    fn theta_on_self_dual_weight() {
        assert_eq!(split_theta(&[1, 0, 0, -1], 1).unwrap(), vec![1, 0, -1]);
        assert_eq!(split_theta(&[1, 0, 0, -1], 2).unwrap(), vec![1, 0, -1]);
    }

    #[test]
    fn theta_lengths() {
        for r in 1..=6 {
            for which in [1, 2] {
                assert_eq!(theta_indices(r, which).len(), r + 1);
                assert_eq!(theta_prime_indices(r, which).len(), r);
            }
        }
    }

    #[test]
    fn emb_examples() {
        assert_eq!(
            emb_interval(&[0], &[-1, -3]).unwrap(),
            IntInterval::new(1, 3)
        );
        assert_eq!(
            emb_interval(&[3], &[-1, -2]).unwrap(),
            IntInterval::new(4, 5)
        );
        assert_eq!(
            emb_interval(&[1, 1], &[1, 0, -1]).unwrap(),
            IntInterval::new(1, 1)
        );
        assert!(emb_interval(&[1, 1], &[1, 0]).is_err());
    }

    #[test]
    fn interval_ops() {
        let a = IntInterval::new(-2, 3);
        let b = IntInterval::new(1, 7);
        assert_eq!(a.intersect(&b), IntInterval::new(1, 3));
        assert!(IntInterval::new(4, 3).is_empty());
        assert_eq!(IntInterval::new(4, 3).len(), 0);
        assert_eq!(a.len(), 6);
    }
}
