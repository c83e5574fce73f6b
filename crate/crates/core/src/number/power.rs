use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::GrossError;

/// Exponent of grossone in a term: an exact rational in lowest terms.
///
/// Powers are compared, added and sorted exactly, so term alignment never
/// depends on floating-point rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrossPower(Ratio<i64>);

impl GrossPower {
    pub const ZERO: GrossPower = GrossPower(Ratio::new_raw(0, 1));

    /// `numer / denom`, reduced. Fails when `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Result<Self, GrossError> {
        if denom == 0 {
            return Err(GrossError::InvalidPower(format!("{numer}/{denom}")));
        }
        Ok(GrossPower(Ratio::new(numer, denom)))
    }

    pub const fn integer(p: i64) -> Self {
        GrossPower(Ratio::new_raw(p, 1))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The power as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Largest integer not above this power.
    pub fn floor_integer(&self) -> i64 {
        self.0.floor().to_integer()
    }
}

impl From<i64> for GrossPower {
    fn from(p: i64) -> Self {
        GrossPower::integer(p)
    }
}

impl From<i32> for GrossPower {
    fn from(p: i32) -> Self {
        GrossPower::integer(p as i64)
    }
}

impl Add for GrossPower {
    type Output = GrossPower;
    fn add(self, rhs: GrossPower) -> GrossPower {
        GrossPower(self.0 + rhs.0)
    }
}

impl Sub for GrossPower {
    type Output = GrossPower;
    fn sub(self, rhs: GrossPower) -> GrossPower {
        GrossPower(self.0 - rhs.0)
    }
}

impl Neg for GrossPower {
    type Output = GrossPower;
    fn neg(self) -> GrossPower {
        GrossPower(-self.0)
    }
}

impl fmt::Display for GrossPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for GrossPower {
    type Err = GrossError;

    /// Accepts `p` or `num/den`, with an optional sign on either part.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GrossError::InvalidPower(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                GrossPower::new(n, d).map_err(|_| bad())
            }
            None => t.parse::<i64>().map(GrossPower::integer).map_err(|_| bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = GrossPower::new(-6, 4).unwrap();
        assert_eq!((p.numer(), p.denom()), (-3, 2));
        assert_eq!(
            GrossPower::new(3, -6).unwrap(),
            GrossPower::new(-1, 2).unwrap()
        );
        assert!(GrossPower::new(1, 0).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "-1", "14", "-47/10", "71/5"] {
            assert_eq!(s.parse::<GrossPower>().unwrap().to_string(), s);
        }
        assert_eq!("4/2".parse::<GrossPower>().unwrap().to_string(), "2");
        assert!("x".parse::<GrossPower>().is_err());
        assert!("1/0".parse::<GrossPower>().is_err());
    }

    #[test]
    fn floor_integer_rounds_down() {
        assert_eq!(GrossPower::new(-5, 2).unwrap().floor_integer(), -3);
        assert_eq!(GrossPower::new(5, 2).unwrap().floor_integer(), 2);
        assert_eq!(GrossPower::integer(-4).floor_integer(), -4);
    }
}
