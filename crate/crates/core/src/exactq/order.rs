use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// Order of vanishing at `q = √−1`; negative values are pole orders.
///
/// Variant order makes every finite order compare below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(i64),
    /// The order of the zero function.
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinite
    }

    /// `self ≥ bound` for a half-integer bound.
    pub fn at_least(self, bound: HalfInt) -> bool {
        match self {
            Order::Infinite => true,
            Order::Finite(k) => 2 * k >= bound.twice(),
        }
    }

    /// `self − bound`, as a half-integer; `None` for the infinite order.
    pub fn slack(self, bound: HalfInt) -> Option<HalfInt> {
        self.finite().map(|k| HalfInt::from_twice(2 * k - bound.twice()))
    }
}

impl Add for Order {
    type Output = Order;
    fn add(self, rhs: Order) -> Order {
        match (self, rhs) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a + b),
            _ => Order::Infinite,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => write!(f, "+inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(k) => s.serialize_i64(*k),
            Order::Infinite => s.serialize_str("+inf"),
        }
    }
}

/// A number in `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_twice(t: i64) -> Self {
        HalfInt(t)
    }

    pub fn from_int(k: i64) -> Self {
        HalfInt(2 * k)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Smallest integer `≥ self`.
    pub fn ceil(self) -> i64 {
        (self.0 + 1).div_euclid(2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_dominates() {
        assert!(Order::Finite(i64::MAX) < Order::Infinite);
        assert_eq!(Order::Finite(2) + Order::Infinite, Order::Infinite);
        assert!(Order::Infinite.at_least(HalfInt::from_int(100)));
    }

    #[test]
    fn half_integers() {
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::from_twice(3).ceil(), 2);
        assert_eq!(HalfInt::from_twice(-3).ceil(), -1);
        assert_eq!(HalfInt::from_int(-2).to_string(), "-2");
        assert!(Order::Finite(-1).at_least(HalfInt::from_twice(-2)));
        assert!(!Order::Finite(-2).at_least(HalfInt::from_twice(-3)));
        assert_eq!(Order::Finite(0).slack(HalfInt::from_twice(-1)), Some(HalfInt::from_twice(1)));
    }
}
