//! Langlands parameters `(w, l, δ)` with `(w, l) ∈ L₀⁺(n)`, and their
//! bijection with pure highest weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::weight::PureWeight;

/// `(w, l) ∈ L₀⁺(n)` together with the sign bit `δ`.
///
/// `l` is strictly decreasing, antisymmetric (`l_i + l_{n+1−i} = 0`) and
/// satisfies `w + l_i ≡ n + 1 (mod 2)` for every `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParam")]
pub struct LanglandsParam {
    n: usize,
    w: i64,
    l: Vec<i64>,
    delta: u8,
}

#[derive(Deserialize)]
struct RawParam {
    n: usize,
    w: i64,
    l: Vec<i64>,
    #[serde(default)]
    delta: i64,
}

impl TryFrom<RawParam> for LanglandsParam {
    type Error = Error;
    fn try_from(raw: RawParam) -> Result<Self> {
        validate_langlands(raw.n, raw.w, &raw.l, raw.delta).map_err(Error::Invalid)
    }
}

/// Check every invariant of `L₀⁺(n)` and the sign bit, collecting all violations.
pub fn validate_langlands(
    n: usize,
    w: i64,
    l: &[i64],
    delta: i64,
) -> Result<LanglandsParam, Vec<Violation>> {
    let mut errs = Vec::new();
    if n == 0 {
        errs.push(Violation::ZeroRank);
    }
    if l.len() != n {
        errs.push(Violation::LengthMismatch {
            expected: n,
            found: l.len(),
        });
    }
    if !(0..=1).contains(&delta) {
        errs.push(Violation::BadDelta { value: delta });
    }
    if !errs.is_empty() {
        return Err(errs);
    }
    for i in 0..n - 1 {
        if l[i] <= l[i + 1] {
            errs.push(Violation::NotDecreasing { index: i + 1 });
        }
    }
    for i in 0..n.div_ceil(2) {
        if l[i] + l[n - 1 - i] != 0 {
            errs.push(Violation::NotAntisymmetric { index: i + 1 });
        }
    }
    let target = (n as i64 + 1).rem_euclid(2);
    for (i, li) in l.iter().enumerate() {
        if (w + li).rem_euclid(2) != target {
            errs.push(Violation::ParityViolation { index: i + 1 });
        }
    }
    if errs.is_empty() {
        Ok(LanglandsParam {
            n,
            w,
            l: l.to_vec(),
            delta: delta as u8,
        })
    } else {
        Err(errs)
    }
}

impl LanglandsParam {
    pub fn new(w: i64, l: Vec<i64>, delta: u8) -> Result<Self> {
        validate_langlands(l.len(), w, &l, delta as i64).map_err(Error::Invalid)
    }

    /// The parameter attached to a pure weight, with the given sign bit.
    pub fn from_weight(mu: &PureWeight, delta: u8) -> Result<Self> {
        let (w, l) = weight_to_langlands(mu);
        LanglandsParam::new(w, l, delta)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    pub fn l(&self) -> &[i64] {
        &self.l
    }

    /// 1-based access `l_i`.
    pub fn l_at(&self, i: usize) -> i64 {
        self.l[i - 1]
    }

    pub fn delta(&self) -> u8 {
        self.delta
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn weight(&self) -> PureWeight {
        // Valid parameters always map to valid weights.
        langlands_to_weight(self.w, &self.l).expect("validated parameter")
    }

    pub fn dual(&self) -> LanglandsParam {
        LanglandsParam {
            w: -self.w,
            ..self.clone()
        }
    }
}

/// `μ ↦ (w, l)` with `w = μ_1 + μ_n` and `l_i = 2μ_i + n + 1 − w − 2i`.
pub fn weight_to_langlands(mu: &PureWeight) -> (i64, Vec<i64>) {
    let n = mu.rank() as i64;
    let w = mu.wt();
    let l = mu
        .entries()
        .iter()
        .zip(1..)
        .map(|(m, i)| 2 * m + n + 1 - w - 2 * i)
        .collect();
    (w, l)
}

/// `(w, l) ↦ μ` with `μ_i = (w + l_i + 2i − 1 − n) / 2`.
pub fn langlands_to_weight(w: i64, l: &[i64]) -> Result<PureWeight> {
    let n = l.len() as i64;
    let mut errs = Vec::new();
    let mut mu = Vec::with_capacity(l.len());
    for (li, i) in l.iter().zip(1..) {
        let num = w + li + 2 * i - 1 - n;
        if num % 2 != 0 {
            errs.push(Violation::ParityViolation { index: i as usize });
        }
        mu.push(num.div_euclid(2));
    }
    if !errs.is_empty() {
        return Err(Error::Invalid(errs));
    }
    PureWeight::new(mu).map_err(|v| Error::Invalid(vec![v]))
}
