//! Integers extended by formal multiples of infinity.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// The value `inf·∞ + fin`. Infinite and finite parts are tracked separately,
/// so `(+∞ + 3) - (+∞)` is exactly `3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExtendedInt {
    pub inf: i64,
    pub fin: i64,
}

impl ExtendedInt {
    pub const ZERO: ExtendedInt = ExtendedInt { inf: 0, fin: 0 };
    pub const POS_INF: ExtendedInt = ExtendedInt { inf: 1, fin: 0 };
    pub const NEG_INF: ExtendedInt = ExtendedInt { inf: -1, fin: 0 };

    pub const fn finite(n: i64) -> Self {
        ExtendedInt { inf: 0, fin: n }
    }

    pub fn is_finite(self) -> bool {
        self.inf == 0
    }

    pub fn as_finite(self) -> Option<i64> {
        self.is_finite().then_some(self.fin)
    }

    /// `|a∞ + b|` is `a∞ + b` for `a > 0` and `-a∞ - b` for `a < 0`.
    pub fn abs(self) -> Self {
        match self.inf.signum() {
            1 => self,
            -1 => -self,
            _ => ExtendedInt::finite(self.fin.abs()),
        }
    }

    /// Clamps into `[-bound, bound]`, treating `±∞` as beyond either end.
    pub fn clamp_finite(self, bound: i64) -> i64 {
        match self.inf.signum() {
            1 => bound,
            -1 => -bound,
            _ => self.fin.clamp(-bound, bound),
        }
    }

    /// A coordinate is a plain integer or exactly `±∞`.
    pub fn is_coordinate(self) -> bool {
        self.inf == 0 || (self.inf.abs() == 1 && self.fin == 0)
    }
}

impl From<i64> for ExtendedInt {
    fn from(n: i64) -> Self {
        ExtendedInt::finite(n)
    }
}

impl Add for ExtendedInt {
    type Output = ExtendedInt;

    fn add(self, rhs: Self) -> Self {
        ExtendedInt { inf: self.inf + rhs.inf, fin: self.fin + rhs.fin }
    }
}

impl Sub for ExtendedInt {
    type Output = ExtendedInt;

    fn sub(self, rhs: Self) -> Self {
        ExtendedInt { inf: self.inf - rhs.inf, fin: self.fin - rhs.fin }
    }
}

impl Neg for ExtendedInt {
    type Output = ExtendedInt;

    fn neg(self) -> Self {
        ExtendedInt { inf: -self.inf, fin: -self.fin }
    }
}

impl std::iter::Sum for ExtendedInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExtendedInt::ZERO, Add::add)
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.inf, self.fin) {
            (0, b) => write!(f, "{b}"),
            (1, 0) => f.write_str("inf"),
            (-1, 0) => f.write_str("-inf"),
            (a, 0) => write!(f, "{a}inf"),
            (a, b) => write!(f, "{a}inf{b:+}"),
        }
    }
}

impl FromStr for ExtendedInt {
    type Err = String;

    /// Accepts an integer, `inf`, `+inf` or `-inf`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtendedInt::POS_INF),
            "-inf" => Ok(ExtendedInt::NEG_INF),
            t => t
                .parse::<i64>()
                .map(ExtendedInt::finite)
                .map_err(|_| format!("`{t}` is neither an integer nor ±inf")),
        }
    }
}

/// Parses a comma-separated list of coordinates, e.g. `-inf,0,3`.
pub fn parse_coordinates(s: &str) -> Result<Vec<ExtendedInt>, String> {
    s.split(',').map(str::parse).collect()
}
