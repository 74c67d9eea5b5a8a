//! Exact rational vertex positions and their extension by ±∞.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::error::GraphError;

/// A vertex position on the real line, stored as an exact reduced fraction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position(BigRational);

impl Position {
    /// Builds `numer/denom`; `None` when the denominator is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Option<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return None;
        }
        Some(Position(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(value: i64) -> Self {
        Position(BigRational::from_integer(BigInt::from(value)))
    }

    /// The fraction 1/2.
    pub fn half() -> Self {
        Position(BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn plus(&self, other: &Position) -> Position {
        Position(&self.0 + &other.0)
    }

    pub fn minus(&self, other: &Position) -> Position {
        Position(&self.0 - &other.0)
    }

    pub fn plus_int(&self, k: i64) -> Position {
        Position(&self.0 + BigRational::from_integer(BigInt::from(k)))
    }

    pub fn negated(&self) -> Position {
        Position(-&self.0)
    }
}

impl From<i64> for Position {
    fn from(value: i64) -> Self {
        Position::from_int(value)
    }
}

impl From<BigRational> for Position {
    fn from(value: BigRational) -> Self {
        Position(value)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Position {
    type Err = GraphError;

    /// Accepts `int` or `int/int` with a positive denominator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadPosition(s.to_string());
        match s.split_once('/') {
            None => Ok(Position(BigRational::from_integer(parse_int(s).ok_or_else(bad)?))),
            Some((n, d)) => {
                let n = parse_int(n).ok_or_else(bad)?;
                let d = parse_int(d).ok_or_else(bad)?;
                if !d.is_positive() {
                    return Err(bad());
                }
                Ok(Position(BigRational::new(n, d)))
            }
        }
    }
}

/// A position or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedPosition {
    NegInf,
    Finite(Position),
    PosInf,
}

impl ExtendedPosition {
    fn rank(&self) -> u8 {
        match self {
            ExtendedPosition::NegInf => 0,
            ExtendedPosition::Finite(_) => 1,
            ExtendedPosition::PosInf => 2,
        }
    }

    fn cmp_finite(&self, p: &Position) -> Ordering {
        match self {
            ExtendedPosition::NegInf => Ordering::Less,
            ExtendedPosition::Finite(q) => q.cmp(p),
            ExtendedPosition::PosInf => Ordering::Greater,
        }
    }
}

impl PartialOrd for ExtendedPosition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedPosition {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedPosition::Finite(a), ExtendedPosition::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl From<Position> for ExtendedPosition {
    fn from(p: Position) -> Self {
        ExtendedPosition::Finite(p)
    }
}

/// A real interval with independently open or closed ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: ExtendedPosition,
    pub hi: ExtendedPosition,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: ExtendedPosition, hi: ExtendedPosition, lo_closed: bool, hi_closed: bool) -> Self {
        Interval { lo, hi, lo_closed, hi_closed }
    }

    /// The whole line.
    pub fn all() -> Self {
        Interval::new(ExtendedPosition::NegInf, ExtendedPosition::PosInf, false, false)
    }

    /// `[lo:hi]`
    pub fn closed(lo: Position, hi: Position) -> Self {
        Interval::new(lo.into(), hi.into(), true, true)
    }

    /// `(lo:hi)`
    pub fn open(lo: ExtendedPosition, hi: ExtendedPosition) -> Self {
        Interval::new(lo, hi, false, false)
    }

    pub fn contains(&self, p: &Position) -> bool {
        let lo_ok = match self.lo.cmp_finite(p) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Greater => false,
        };
        let hi_ok = match self.hi.cmp_finite(p) {
            Ordering::Greater => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Less => false,
        };
        lo_ok && hi_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: Position = "7/2".parse().unwrap();
        assert_eq!(p.to_string(), "7/2");
        assert_eq!("-3".parse::<Position>().unwrap(), Position::from_int(-3));
        assert_eq!("4/2".parse::<Position>().unwrap().to_string(), "2");
        assert!("1/0".parse::<Position>().is_err());
        assert!("1/-2".parse::<Position>().is_err());
        assert!("x".parse::<Position>().is_err());
        assert!("+1".parse::<Position>().is_err());
        assert!("".parse::<Position>().is_err());
    }

    #[test]
    fn half_offsets_are_exact() {
        let a = Position::from_int(3).plus(&Position::half());
        let b = Position::new(7, 2).unwrap();
        assert_eq!(a, b);
        assert!(Position::from_int(3) < a && a < Position::from_int(4));
    }

    #[test]
    fn infinities_bracket_everything() {
        let p = ExtendedPosition::Finite(Position::from_int(-1_000_000));
        assert!(ExtendedPosition::NegInf < p && p < ExtendedPosition::PosInf);
    }

    #[test]
    fn interval_membership() {
        let one = Position::from_int(1);
        let three = Position::from_int(3);
        let half_open = Interval::new(one.clone().into(), three.clone().into(), false, true);
        assert!(!half_open.contains(&one));
        assert!(half_open.contains(&three));
        assert!(Interval::all().contains(&one));
        let point = Interval::closed(three.clone(), three.clone());
        assert!(point.contains(&three));
    }
}
