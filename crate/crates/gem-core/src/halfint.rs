//! Exact half-integer arithmetic for genus values.
//!
//! Regular genus of a non-orientable surface is half of its (crosscap) genus,
//! so genus computations need values in (1/2)Z. `HalfInteger` stores twice the
//! represented value and never touches floating point.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };

    /// Value `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub fn from_integer(n: i64) -> Self {
        HalfInteger { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.twice / 2)
        } else {
            None
        }
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl From<i64> for HalfInteger {
    fn from(n: i64) -> Self {
        HalfInteger::from_integer(n)
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: Self) -> Self {
        HalfInteger { twice: self.twice + rhs.twice }
    }
}

impl AddAssign for HalfInteger {
    fn add_assign(&mut self, rhs: Self) {
        self.twice += rhs.twice;
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: Self) -> Self {
        HalfInteger { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> Self {
        HalfInteger { twice: -self.twice }
    }
}

impl Mul<i64> for HalfInteger {
    type Output = HalfInteger;
    fn mul(self, rhs: i64) -> Self {
        HalfInteger { twice: self.twice * rhs }
    }
}

impl Sum for HalfInteger {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(HalfInteger::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HalfInteger", 2)?;
        s.serialize_field("twice", &self.twice)?;
        s.serialize_field("text", &self.to_string())?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInteger::from_twice(3); // 3/2
        let b = HalfInteger::from_integer(2);
        assert_eq!((a + b).twice(), 7);
        assert_eq!((b - a).twice(), 1);
        assert_eq!((a * 3).twice(), 9);
        assert_eq!((-a).twice(), -3);
        assert!(!a.is_integer());
        assert_eq!(b.as_integer(), Some(2));
        assert_eq!(a.as_integer(), None);
    }

    #[test]
    fn display_renders_halves() {
        assert_eq!(HalfInteger::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInteger::from_twice(-1).to_string(), "-1/2");
        assert_eq!(HalfInteger::from_integer(4).to_string(), "4");
    }

    #[test]
    fn ordering_follows_value() {
        let vals: Vec<HalfInteger> = [-3, 0, 1, 2, 5].iter().map(|&t| HalfInteger::from_twice(t)).collect();
        let mut sorted = vals.clone();
        sorted.sort();
        assert_eq!(vals, sorted);
        assert_eq!(vals.iter().copied().sum::<HalfInteger>().twice(), 5);
    }
}
