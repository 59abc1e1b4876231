use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{is_integer, parse_rational, qi, to_i64, Rational};

/// A weight in the fundamental-weight basis with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(#[serde(with = "crate::rational::pair_vec")] Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| qi(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![qi(0); rank])
    }

    /// `omega_i` with a 1-based index.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![qi(0); rank];
        v[i - 1] = qi(1);
        Self(v)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_integer)
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.is_dominant() && self.is_integral()
    }

    /// Integer coordinates, if every coordinate is an integer fitting in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(to_i64).collect()
    }

    pub fn require_dominant_integral(&self) -> Result<Vec<i64>> {
        match self.to_ints() {
            Some(v) if v.iter().all(|&x| x >= 0) => Ok(v),
            _ => Err(Error::NotDominantIntegral(self.to_string())),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated coordinates, each an integer or `p/q`; optional parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        t.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        self.scale(&qi(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn parse_and_display() {
        let w: Weight = "1, -1/2,0".parse().unwrap();
        assert_eq!(w.coords(), &[qi(1), q(-1, 2), qi(0)]);
        assert_eq!(w.to_string(), "(1,-1/2,0)");
        assert_eq!("(2,3)".parse::<Weight>().unwrap(), Weight::from_ints(&[2, 3]));
        assert!("".parse::<Weight>().is_err());
        assert!("1,,2".parse::<Weight>().is_err());
    }

    #[test]
    fn predicates() {
        assert!(Weight::from_ints(&[0, 2]).is_dominant_integral());
        assert!(!Weight::from_ints(&[1, -1]).is_dominant());
        assert!(!Weight::new(vec![q(1, 2)]).is_integral());
        assert!(Weight::new(vec![q(1, 2)]).require_dominant_integral().is_err());
    }

    #[test]
    fn json_pairs() {
        let w = Weight::new(vec![q(3, 2), qi(-1)]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[[3,2],[-1,1]]");
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), w);
        assert!(serde_json::from_str::<Weight>("[[2,4]]").is_err());
        assert!(serde_json::from_str::<Weight>("[[1,0]]").is_err());
    }
}
