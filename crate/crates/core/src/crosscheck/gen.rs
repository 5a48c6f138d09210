//! Random valid parameters and pairs.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::rng::CounterRng;
use crate::param::LanglandsParam;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub n_range: RangeInclusive<usize>,
    pub m_range: RangeInclusive<usize>,
    pub l_bound: i64,
    pub trials: u64,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            n_range: 1..=4,
            m_range: 1..=4,
            l_bound: 20,
            trials: 1000,
            seed: 42,
        }
    }
}

impl GenConfig {
    /// Problems that make the configuration unusable, if any.
    pub fn check(&self) -> Result<(), String> {
        let (n_lo, n_hi) = (*self.n_range.start(), *self.n_range.end());
        let (m_lo, m_hi) = (*self.m_range.start(), *self.m_range.end());
        if n_lo == 0 || m_lo == 0 || n_lo > n_hi || m_lo > m_hi {
            return Err(format!(
                "bad rank ranges {:?}, {:?}",
                self.n_range, self.m_range
            ));
        }
        if n_hi == 1 && m_hi == 1 {
            return Err("the only rank pair is n = m = 1, which is excluded".into());
        }
        if self.l_bound < n_hi.max(m_hi) as i64 {
            return Err(format!(
                "l_bound {} is below the largest rank",
                self.l_bound
            ));
        }
        Ok(())
    }
}

/// Positive spectrum values of one parity class, at most `l_bound`.
fn pool(parity: i64, l_bound: i64) -> Vec<i64> {
    let start = if parity == 0 { 2 } else { 1 };
    (start..=l_bound).step_by(2).collect()
}

fn assemble(n: usize, mut top: Vec<i64>, l_bound: i64, rng: &mut CounterRng) -> LanglandsParam {
    top.sort_unstable_by(|a, b| b.cmp(a));
    let mut l = top.clone();
    if n % 2 == 1 {
        l.push(0);
    }
    l.extend(top.iter().rev().map(|x| -x));

    // w + l_i ≡ n + 1 (mod 2)
    let parity = (n as i64 + 1 - l[0]).rem_euclid(2);
    let lo = -l_bound + (-l_bound - parity).rem_euclid(2);
    let steps = (l_bound - lo) / 2;
    let w = lo + 2 * rng.range(0, steps);
    let delta = if n % 2 == 1 { u8::from(rng.bit()) } else { 0 };
    LanglandsParam::new(w, l, delta).expect("generator emits valid parameters")
}

/// A uniformly drawn parameter of rank `n` with `|l_1| ≤ l_bound`.
pub fn gen_langlands(n: usize, l_bound: i64, rng: &mut CounterRng) -> LanglandsParam {
    assert!(n >= 1 && l_bound >= n as i64, "need n ≥ 1 and l_bound ≥ n");
    let parity = if n % 2 == 1 { 0 } else { rng.range(0, 1) };
    let top = rng.sample(&pool(parity, l_bound), n / 2);
    assemble(n, top, l_bound, rng)
}

/// A parameter of rank `n` one of whose positive entries lies within 2 of
/// some non-negative anchor. `None` when no such value is available.
pub fn gen_near(
    n: usize,
    l_bound: i64,
    anchors: &[i64],
    rng: &mut CounterRng,
) -> Option<LanglandsParam> {
    if n < 2 {
        return None;
    }
    let mut targets: Vec<i64> = anchors
        .iter()
        .filter(|&&a| a >= 0)
        .flat_map(|&a| [a - 2, a - 1, a, a + 1, a + 2])
        .filter(|&x| 1 <= x && x <= l_bound && (n.is_multiple_of(2) || x % 2 == 0))
        .collect();
    targets.sort_unstable();
    targets.dedup();
    if targets.is_empty() {
        return None;
    }
    let forced = targets[rng.below(targets.len() as u64) as usize];
    let others: Vec<i64> = pool(forced.rem_euclid(2), l_bound)
        .into_iter()
        .filter(|&x| x != forced)
        .collect();
    let mut top = rng.sample(&others, n / 2 - 1);
    top.push(forced);
    Some(assemble(n, top, l_bound, rng))
}

/// One trial's input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratedPair {
    pub pi: LanglandsParam,
    pub sigma: LanglandsParam,
    /// Drawn with a near-coincidence between the spectra.
    pub biased: bool,
}

/// Draw ranks (never `n = m = 1`), then a pair; one draw in five is biased
/// toward spectra within distance 2 of each other.
pub fn gen_pair(cfg: &GenConfig, rng: &mut CounterRng) -> GeneratedPair {
    let (n, m) = loop {
        let n = rng.range(*cfg.n_range.start() as i64, *cfg.n_range.end() as i64) as usize;
        let m = rng.range(*cfg.m_range.start() as i64, *cfg.m_range.end() as i64) as usize;
        if n != 1 || m != 1 {
            break (n, m);
        }
    };
    let l_bound = cfg.l_bound;
    if rng.below(5) == 0 {
        let pi = gen_langlands(n, l_bound, rng);
        if let Some(sigma) = gen_near(m, l_bound, pi.l(), rng) {
            return GeneratedPair {
                pi,
                sigma,
                biased: true,
            };
        }
        let sigma = gen_langlands(m, l_bound, rng);
        if let Some(pi) = gen_near(n, l_bound, sigma.l(), rng) {
            return GeneratedPair {
                pi,
                sigma,
                biased: true,
            };
        }
        return GeneratedPair {
            pi,
            sigma,
            biased: false,
        };
    }
    let pi = gen_langlands(n, l_bound, rng);
    let sigma = gen_langlands(m, l_bound, rng);
    GeneratedPair {
        pi,
        sigma,
        biased: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::validate_langlands;

    #[test]
    fn rank_one_shape() {
        let mut rng = CounterRng::new(5);
        for _ in 0..50 {
            let p = gen_langlands(1, 10, &mut rng);
            assert_eq!(p.l(), &[0]);
            assert_eq!(p.w() % 2, 0);
        }
    }

    #[test]
    fn every_draw_is_valid() {
        let mut rng = CounterRng::new(11);
        for n in 1..=8 {
            for _ in 0..200 {
                let p = gen_langlands(n, 12, &mut rng);
                assert!(validate_langlands(n, p.w(), p.l(), i64::from(p.delta())).is_ok());
                assert!(p.l_at(1) <= 12);
            }
        }
    }

    #[test]
    fn biased_draws_are_close() {
        let mut rng = CounterRng::new(3);
        for _ in 0..200 {
            let pi = gen_langlands(4, 20, &mut rng);
            let sigma = gen_near(3, 20, pi.l(), &mut rng).unwrap();
            let close = pi
                .l()
                .iter()
                .any(|a| sigma.l().iter().any(|b| *b > 0 && (a - b).abs() <= 2));
            assert!(close, "{pi:?} {sigma:?}");
        }
        assert!(gen_near(1, 20, &[5], &mut rng).is_none());
    }

    #[test]
    fn config_checks() {
        assert!(GenConfig::default().check().is_ok());
        let bad = GenConfig {
            n_range: 1..=1,
            m_range: 1..=1,
            ..GenConfig::default()
        };
        assert!(bad.check().is_err());
        let bad = GenConfig {
            l_bound: 3,
            n_range: 1..=6,
            ..GenConfig::default()
        };
        assert!(bad.check().is_err());
    }

    #[test]
    fn golden_draw_seed_one() {
        let mut rng = CounterRng::new(1);
        let p = gen_langlands(4, 9, &mut rng);
        assert_eq!(
            (p.w(), p.l().to_vec(), p.delta()),
            (-4, vec![9, 7, -7, -9], 0)
        );
    }
}
