use serde::Serialize;

use crate::crit::check_rank_pair;
use crate::error::{invariant, Error, Result};
use crate::inequality::{find_coincidence, Coincidence};
use crate::param::LanglandsParam;

/// Relative interleaving of two spectra `l` (rank `n`) and `l′` (rank `m`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionData {
    #[serde(skip)]
    pub n: usize,
    #[serde(skip)]
    pub m: usize,
    /// `a_j` with `l_{a_j} > l′_j ≥ l_{1+a_j}`, 1-based.
    pub a: Vec<usize>,
    /// Indices `j < m` with `a_j < a_{j+1}`, increasing.
    pub jumps: Vec<usize>,
    pub r: usize,
    pub exceptional: bool,
}

impl PositionData {
    /// 1-based `a_j`.
    pub fn a_at(&self, j: usize) -> usize {
        self.a[j - 1]
    }

    /// `j_x` with the conventions `j_0 = 0` and `j_{k+1} = m`.
    pub fn jump(&self, x: usize) -> usize {
        if x == 0 {
            0
        } else if x == self.jumps.len() + 1 {
            self.m
        } else {
            self.jumps[x - 1]
        }
    }

    pub fn k(&self) -> usize {
        self.jumps.len()
    }
}

/// Pair arranged so that `l_1 > l′_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Pair {
        pi: LanglandsParam,
        sigma: LanglandsParam,
        swapped: bool,
    },
    /// `l_1 = l′_1 ≠ 0`: the set of critical numbers is empty.
    Empty(Coincidence),
}

pub fn normalize_pair(pi: &LanglandsParam, sigma: &LanglandsParam) -> Result<Normalized> {
    check_rank_pair(pi, sigma)?;
    let (l1, lp1) = (pi.l_at(1), sigma.l_at(1));
    Ok(if l1 > lp1 {
        Normalized::Pair {
            pi: pi.clone(),
            sigma: sigma.clone(),
            swapped: false,
        }
    } else if l1 < lp1 {
        Normalized::Pair {
            pi: sigma.clone(),
            sigma: pi.clone(),
            swapped: true,
        }
    } else {
        // l_1 = l′_1 = 0 would need n = m = 1
        Normalized::Empty(Coincidence {
            i: 1,
            j: 1,
            value: l1,
        })
    })
}

/// Compute `a`, the jump indices and `r = k + 1`, checking the position
/// and jump symmetries on the way.
pub fn position_tuple(pi: &LanglandsParam, sigma: &LanglandsParam) -> Result<PositionData> {
    let (l, lp) = (pi.l(), sigma.l());
    let (n, m) = (l.len(), lp.len());
    if l[0] <= lp[0] {
        return Err(Error::HypothesisViolated);
    }
    if let Some(c) = find_coincidence(pi, sigma) {
        return Err(Error::Coincidence {
            i: c.i,
            j: c.j,
            value: c.value,
        });
    }
    let exceptional = n % 2 == 1 && m % 2 == 1;

    // l is strictly decreasing, so a_j counts the entries of l above l′_j
    let a: Vec<usize> = lp
        .iter()
        .map(|&x| l.partition_point(|&li| li > x))
        .collect();
    invariant(
        a.iter().all(|&aj| (1..n).contains(&aj)),
        "position-range",
        || format!("a = {a:?} outside 1..={}", n - 1),
    )?;

    let jumps: Vec<usize> = (1..m).filter(|&j| a[j - 1] < a[j]).collect();
    let pos = PositionData {
        n,
        m,
        r: jumps.len() + 1,
        a,
        jumps,
        exceptional,
    };
    check_symmetries(&pos)?;
    Ok(pos)
}

fn check_symmetries(pos: &PositionData) -> Result<()> {
    let (n, m) = (pos.n, pos.m);
    for j in 1..=m {
        if pos.exceptional && j == m.div_ceil(2) {
            invariant(pos.a_at(j) == (n - 1) / 2, "position-middle", || {
                format!("a_{j} = {} but (n-1)/2 = {}", pos.a_at(j), (n - 1) / 2)
            })?;
        } else {
            invariant(
                pos.a_at(j) + pos.a_at(m + 1 - j) == n,
                "position-symmetry",
                || format!("a_{j} + a_{} != {n} in {:?}", m + 1 - j, pos.a),
            )?;
        }
    }
    let k = pos.k();
    for x in 1..=k {
        if pos.exceptional && k % 2 == 1 && x == k.div_ceil(2) {
            invariant(pos.jump(x) == m.div_ceil(2), "jump-middle", || {
                format!("middle jump {} != (m+1)/2 in {:?}", pos.jump(x), pos.jumps)
            })?;
        } else {
            invariant(
                pos.jump(x) + pos.jump(k + 1 - x) == m,
                "jump-symmetry",
                || format!("jumps {:?} not symmetric about m/2", pos.jumps),
            )?;
        }
    }
    if pos.exceptional && m > 1 {
        invariant(pos.jumps.contains(&m.div_ceil(2)), "middle-jump", || {
            format!("(m+1)/2 is not a jump index in {:?}", pos.jumps)
        })?;
    }
    Ok(())
}
