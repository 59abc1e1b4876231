//! Exact rational helpers on top of `num-rational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Arbitrary-precision rational used for every exact quantity in the crate.
pub type Rational = BigRational;

pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Integer value of `x` if it is integral and fits in an `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Parses `n` or `p/q` (optionally signed) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

/// Least common multiple of the denominators of `xs`.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}

/// Serde adapter encoding a rational as a reduced `[numerator, denominator]` pair.
pub mod pair {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        let n = x
            .numer()
            .to_i128()
            .ok_or_else(|| serde::ser::Error::custom("numerator exceeds i128"))?;
        let d = x
            .denom()
            .to_i128()
            .ok_or_else(|| serde::ser::Error::custom("denominator exceeds i128"))?;
        [n, d].serialize(s)
    }

    /// Integer accepted through any of the visitor entry points, so the pair
    /// also decodes from buffered content (internally tagged enums).
    struct Int(i128);

    impl<'de> Deserialize<'de> for Int {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
            struct V;
            impl serde::de::Visitor<'_> for V {
                type Value = Int;
                fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                    f.write_str("an integer")
                }
                fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Int, E> {
                    Ok(Int(v as i128))
                }
                fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Int, E> {
                    Ok(Int(v as i128))
                }
                fn visit_i128<E: serde::de::Error>(self, v: i128) -> Result<Int, E> {
                    Ok(Int(v))
                }
                fn visit_u128<E: serde::de::Error>(self, v: u128) -> Result<Int, E> {
                    i128::try_from(v).map(Int).map_err(|_| E::custom("integer exceeds i128"))
                }
            }
            d.deserialize_any(V)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let [Int(n), Int(den)] = <[Int; 2]>::deserialize(d)?;
        if den <= 0 {
            return Err(serde::de::Error::custom("denominator must be positive"));
        }
        let r = Rational::new(BigInt::from(n), BigInt::from(den));
        if r.numer() != &BigInt::from(n) {
            return Err(serde::de::Error::custom("rational pair is not reduced"));
        }
        Ok(r)
    }
}

/// Serde adapter for `Vec<Rational>` as a list of pairs.
pub mod pair_vec {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct P(#[serde(with = "super::pair")] Rational);

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<P> = xs.iter().cloned().map(P).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<P>::deserialize(d)?;
        Ok(v.into_iter().map(|p| p.0).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), qi(3));
        assert_eq!(parse_rational("-2/4").unwrap(), q(-1, 2));
        assert_eq!(parse_rational(" 5/ 10 ").unwrap(), q(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn common_den() {
        let xs = [q(1, 2), q(1, 3), qi(4)];
        assert_eq!(common_denominator(&xs), BigInt::from(6));
    }
}
