//! Exact elements of `(1/2)·Z`.
//!
//! Every quantity in the critical-number computations that can fail to be an
//! integer (shifts of Weil-group constituents, the centre `κ`, the bound `L`,
//! critical numbers themselves) lives in `(1/2)·Z`, so a doubled integer is
//! enough to keep everything exact.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A number of the form `times2 / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    times2: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { times2: 0 };
    pub const HALF: HalfInt = HalfInt { times2: 1 };
    pub const ONE: HalfInt = HalfInt { times2: 2 };

    pub const fn from_times2(times2: i64) -> Self {
        HalfInt { times2 }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { times2: 2 * value }
    }

    /// `num / 2`.
    pub const fn half(num: i64) -> Self {
        HalfInt { times2: num }
    }

    pub const fn times2(self) -> i64 {
        self.times2
    }

    pub const fn is_integer(self) -> bool {
        self.times2 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.times2 / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt {
            times2: self.times2.abs(),
        }
    }

    /// Largest integer not above `self`.
    pub fn floor(self) -> i64 {
        self.times2.div_euclid(2)
    }

    /// Smallest integer not below `self`.
    pub fn ceil(self) -> i64 {
        -(-self.times2).div_euclid(2)
    }

    /// True when `self - other` is an integer.
    pub fn same_coset(self, other: HalfInt) -> bool {
        (self.times2 - other.times2) % 2 == 0
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> Self {
        HalfInt::from_int(value)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            times2: self.times2 + rhs.times2,
        }
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt {
            times2: self.times2 + 2 * rhs,
        }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.times2 += rhs.times2;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            times2: self.times2 - rhs.times2,
        }
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt {
            times2: self.times2 - 2 * rhs,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            times2: -self.times2,
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.times2 / 2)
        } else {
            write!(f, "{}/2", self.times2)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {0:?} as a half-integer")]
pub struct ParseHalfIntError(String);

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseHalfIntError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let v: i64 = s.parse().map_err(|_| err())?;
                v.checked_mul(2).map(HalfInt::from_times2).ok_or_else(err)
            }
            Some((num, "2")) => num
                .trim()
                .parse()
                .map(HalfInt::from_times2)
                .map_err(|_| err()),
            Some(_) => Err(err()),
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
