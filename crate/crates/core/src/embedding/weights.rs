//! The modified weight `λ` and the auxiliary weights `u`, `v` of rank `2r`.

use serde::Serialize;

use super::position::PositionData;
use crate::error::{invariant, Result};
use crate::weight::{is_dominant, purity_weight, PureWeight};

/// `λ_j = ν_j + a_j − j`, and in the exceptional case its two repaired forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaData {
    pub lambda: Vec<i64>,
    /// `(λ_1, …, λ_{(m+1)/2}, λ_{(m+3)/2} − 1, …, λ_m − 1)`; exceptional `m > 1` only.
    pub lambda_mod: Option<Vec<i64>>,
    /// `λ` with the middle entry removed; exceptional `m > 1` only.
    pub lambda_tr: Option<Vec<i64>>,
}

pub fn lambda_from(nu: &PureWeight, pos: &PositionData) -> Result<LambdaData> {
    let (n, m) = (pos.n as i64, pos.m);
    let lambda: Vec<i64> = (1..=m)
        .map(|j| nu.at(j) + pos.a_at(j) as i64 - j as i64)
        .collect();

    invariant(is_dominant(&lambda), "lambda-dominant", || {
        format!("λ = {lambda:?}")
    })?;
    let target = nu.wt() + n - m as i64 - 1;
    let mid = m.div_ceil(2);
    for j in 1..=m {
        if pos.exceptional && j == mid {
            invariant(2 * lambda[j - 1] == target - 1, "lambda-middle", || {
                format!(
                    "2λ_{j} = {} but w'+n-m-2 = {}",
                    2 * lambda[j - 1],
                    target - 1
                )
            })?;
        } else {
            invariant(
                lambda[j - 1] + lambda[m - j] == target,
                "lambda-purity",
                || format!("λ = {lambda:?} not pure of weight {target}"),
            )?;
        }
    }

    let (lambda_mod, lambda_tr) = if pos.exceptional && m > 1 {
        let modified: Vec<i64> = lambda
            .iter()
            .enumerate()
            .map(|(i, &x)| if i + 1 > mid { x - 1 } else { x })
            .collect();
        let truncated: Vec<i64> = lambda
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != mid)
            .map(|(_, &x)| x)
            .collect();
        for (name, w) in [("lambda-mod", &modified), ("lambda-tr", &truncated)] {
            invariant(is_dominant(w) && purity_weight(w).is_some(), name, || {
                format!("{w:?}")
            })?;
        }
        (Some(modified), Some(truncated))
    } else {
        (None, None)
    };

    Ok(LambdaData {
        lambda,
        lambda_mod,
        lambda_tr,
    })
}

/// Which of the three `u`/`v` recipes applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UvCase {
    NonExceptional,
    ExceptionalOddR,
    ExceptionalEvenR,
}

/// `u` and `v0`, where `v(s) = v0 − s·(1, …, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UvData {
    pub u: Vec<i64>,
    pub v0: Vec<i64>,
    pub case: UvCase,
}

/// Build `u` from `μ̌` and `v0` from `λ`, block by block (`ρ = 1, …, r`).
///
/// Non-exceptional blocks are `(μ̌_{a_{j_ρ}}, μ̌_{1+a_{j_ρ}})` and
/// `(λ_{1+j_{ρ−1}}, λ_{j_ρ})`. In the exceptional case with odd `r` the middle
/// block becomes `(μ̌_{(n−1)/2}, μ̌_{(n+3)/2} − 1)` / `(λ_{(m+1)/2}, λ_{(m+1)/2})`
/// and the blocks above it are lowered by one; with even `r` only the `v`
/// block `ρ = r/2` changes, to `(λ_{1+j_{r/2−1}}, λ_{j_{r/2}−1})`.
pub fn build_uv(
    mu_check: &PureWeight,
    lambda: &[i64],
    pos: &PositionData,
    w_prime: i64,
) -> Result<UvData> {
    let r = pos.r;
    let (n, m) = (pos.n, pos.m);
    let lam = |j: usize| lambda[j - 1];
    let case = match (pos.exceptional, r % 2) {
        (false, _) => UvCase::NonExceptional,
        (true, 1) => UvCase::ExceptionalOddR,
        (true, _) => UvCase::ExceptionalEvenR,
    };

    let mut u = Vec::with_capacity(2 * r);
    let mut v0 = Vec::with_capacity(2 * r);
    for rho in 1..=r {
        let a = pos.a_at(pos.jump(rho));
        let mut ub = [mu_check.at(a), mu_check.at(a + 1)];
        let mut vb = [lam(1 + pos.jump(rho - 1)), lam(pos.jump(rho))];
        match case {
            UvCase::NonExceptional => {}
            UvCase::ExceptionalOddR => {
                let middle = r.div_ceil(2);
                if rho == middle {
                    ub = [mu_check.at((n - 1) / 2), mu_check.at((n + 3) / 2) - 1];
                    vb = [lam(m.div_ceil(2)); 2];
                } else if rho > middle {
                    ub = ub.map(|x| x - 1);
                    vb = vb.map(|x| x - 1);
                }
            }
            UvCase::ExceptionalEvenR => {
                if rho == r / 2 {
                    vb[1] = lam(pos.jump(r / 2) - 1);
                }
            }
        }
        u.extend(ub);
        v0.extend(vb);
    }

    let w = -mu_check.wt();
    let (u_wt, v_wt) = match case {
        UvCase::NonExceptional | UvCase::ExceptionalEvenR => {
            (-w, w_prime + n as i64 - m as i64 - 1)
        }
        UvCase::ExceptionalOddR => (-w - 1, w_prime + n as i64 - m as i64 - 2),
    };
    for (name, y, target) in [("u-weight", &u, u_wt), ("v-weight", &v0, v_wt)] {
        invariant(is_dominant(y), name, || format!("{y:?} not dominant"))?;
        invariant(purity_weight(y) == Some(target), name, || {
            format!("{y:?} not pure of weight {target}")
        })?;
    }
    match case {
        UvCase::ExceptionalOddR => invariant(v0[r - 1] == v0[r], "v-defect", || {
            format!("d(v) != 0 for {v0:?}")
        })?,
        UvCase::ExceptionalEvenR => invariant(u[r - 1] == u[r], "u-defect", || {
            format!("d(u) != 0 for {u:?}")
        })?,
        UvCase::NonExceptional => {}
    }
    Ok(UvData { u, v0, case })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::position::position_tuple;
    use crate::param::LanglandsParam;

    fn p(w: i64, l: &[i64], delta: u8) -> LanglandsParam {
        LanglandsParam::new(w, l.to_vec(), delta).unwrap()
    }

    fn pipeline(pi: &LanglandsParam, sigma: &LanglandsParam) -> (LambdaData, UvData) {
        let pos = position_tuple(pi, sigma).unwrap();
        let lam = lambda_from(&sigma.weight(), &pos).unwrap();
        let uv = build_uv(&pi.weight().dual(), &lam.lambda, &pos, sigma.w()).unwrap();
        (lam, uv)
    }

    #[test]
    fn rankin_pair() {
        let (lam, uv) = pipeline(&p(6, &[5, -5], 0), &p(4, &[3, -3], 0));
        assert_eq!(lam.lambda, vec![3, 0]);
        assert_eq!(uv.u, vec![-1, -5]);
        assert_eq!(uv.v0, vec![3, 0]);
        assert_eq!(uv.case, UvCase::NonExceptional);
    }

    #[test]
    fn rank_four_by_two_pair() {
        let (lam, uv) = pipeline(&p(0, &[5, 1, -1, -5], 0), &p(1, &[2, -2], 0));
        assert_eq!(lam.lambda, vec![1, 1]);
        assert_eq!(uv.u, vec![1, 0, 0, -1]);
        assert_eq!(uv.v0, vec![1, 1, 1, 1]);
    }

    #[test]
    fn gelbart_jacquet_pair() {
        let (lam, uv) = pipeline(&p(0, &[6, 0, -6], 1), &p(0, &[0], 0));
        assert_eq!(lam.lambda, vec![0]);
        assert_eq!(lam.lambda_mod, None);
        assert_eq!(uv.u, vec![2, -3]);
        assert_eq!(uv.v0, vec![0, 0]);
        assert_eq!(uv.case, UvCase::ExceptionalOddR);
    }

    #[test]
    fn exceptional_with_modified_lambda() {
        // n = 5, m = 3: l = (8, 6, 0, −6, −8), l′ = (4, 0, −4) gives a = (2, 2, 4), one jump
        let (lam, uv) = pipeline(&p(0, &[8, 6, 0, -6, -8], 0), &p(0, &[4, 0, -4], 0));
        let lm = lam.lambda_mod.unwrap();
        assert_eq!(purity_weight(&lm).map(|_| lm.len()), Some(3));
        assert_eq!(lam.lambda_tr.unwrap().len(), 2);
        assert_eq!(uv.case, UvCase::ExceptionalEvenR);
    }
}
