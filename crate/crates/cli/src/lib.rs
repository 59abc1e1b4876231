//! Command implementations behind the `smflab` binary.
//!
//! Every command returns a plain data value that serializes to JSON and
//! renders to text; `main.rs` only parses arguments and picks the format.

pub mod commands;
pub mod theorem;

use std::fmt;

use serde::{Deserialize, Serialize};
use smflab::{Error, LieType, Rational, Weight};

pub use commands::*;
pub use theorem::{theorem_entries, verify_theorem, Criteria, Report, ReportEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// An exact rational that serializes as `[numerator, denominator]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Q(#[serde(with = "smflab::rational::pair")] pub Rational);

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Rational> for Q {
    fn from(x: Rational) -> Self {
        Q(x)
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::SearchSpace { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

/// Reads a type from the front of `args`: either one token (`A3`) or a
/// letter followed by a rank (`A 3`). Returns the type and the rest.
pub fn parse_type(args: &[String]) -> Result<(LieType, &[String]), Error> {
    let first = args
        .first()
        .ok_or_else(|| Error::Parse("missing Lie type".into()))?;
    if let Ok(t) = first.parse::<LieType>() {
        return Ok((t, &args[1..]));
    }
    let rank = args
        .get(1)
        .and_then(|r| r.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::UnknownType(first.clone()))?;
    Ok((LieType::from_parts(first.trim(), rank)?, &args[2..]))
}

/// Comma-separated fundamental coordinates; entries may be `p/q`.
pub fn parse_weight(t: LieType, s: &str) -> Result<Weight, Error> {
    let w: Weight = s.parse()?;
    if w.len() != t.rank() {
        return Err(Error::DimensionMismatch {
            expected: t.rank(),
            got: w.len(),
        });
    }
    Ok(w)
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: `{p}`")))
        })
        .collect()
}

/// Output of any command, in the two supported formats.
pub trait Render: Serialize {
    fn text(&self) -> String;

    fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable output")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn type_tokens() {
        let a = args("A3 0,1,0");
        let (t, rest) = parse_type(&a).unwrap();
        assert_eq!(t, LieType::a(3));
        assert_eq!(rest, &a[1..]);
        let a = args("A 1 2");
        let (t, rest) = parse_type(&a).unwrap();
        assert_eq!(t, LieType::a(1));
        assert_eq!(rest, &a[2..]);
        assert_eq!(parse_type(&args("C 3")).unwrap().0, LieType::c(3));
        assert!(parse_type(&args("Q 3")).is_err());
        assert!(parse_type(&args("C 2")).is_err());
        assert!(parse_type(&[]).is_err());
    }

    #[test]
    fn weights() {
        let w = parse_weight(LieType::a(2), "1/2,3").unwrap();
        assert_eq!(w.coords()[0], smflab::rational::q(1, 2));
        assert!(parse_weight(LieType::a(2), "1,2,3").is_err());
        assert_eq!(parse_ints("3, -1,0").unwrap(), vec![3, -1, 0]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::CapExceeded { dim: 2, cap: 1 }), EXIT_CAP);
        assert_eq!(exit_code(&Error::UnknownType("X".into())), EXIT_USAGE);
    }
}
