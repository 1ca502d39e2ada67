//! Reachability radii, including the unbounded case.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A reachability radius: a nonnegative integer or `Infinity`.
///
/// Radius 0 is degenerate (every reach set collapses to `{v}`) but admitted.
/// Any finite radius at least `n - 1` acts on an `n`-vertex graph exactly like
/// `Infinity`; [`Radius::effective`] performs that normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Radius {
    Finite(usize),
    Infinity,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("radius must be a nonnegative integer or \"inf\", got {0:?}")]
pub struct RadiusParseError(String);

impl Radius {
    /// The depth limit to use on an `n`-vertex graph: `None` means unbounded.
    pub fn effective(self, n: usize) -> Option<usize> {
        match self {
            Radius::Finite(r) if r < n.saturating_sub(1) => Some(r),
            _ => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Radius::Infinity)
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Finite(r) => write!(f, "{r}"),
            Radius::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Radius {
    type Err = RadiusParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Radius::Infinity);
        }
        s.parse::<usize>().map(Radius::Finite).map_err(|_| RadiusParseError(s.to_string()))
    }
}

impl From<usize> for Radius {
    fn from(r: usize) -> Self {
        Radius::Finite(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("3".parse::<Radius>(), Ok(Radius::Finite(3)));
        assert_eq!("inf".parse::<Radius>(), Ok(Radius::Infinity));
        assert_eq!("INF".parse::<Radius>(), Ok(Radius::Infinity));
        assert!("-1".parse::<Radius>().is_err());
        assert_eq!(Radius::Finite(7).to_string(), "7");
        assert_eq!(Radius::Infinity.to_string(), "inf");
    }

    #[test]
    fn effective_normalizes_large_radii() {
        assert_eq!(Radius::Finite(2).effective(10), Some(2));
        assert_eq!(Radius::Finite(9).effective(10), None);
        assert_eq!(Radius::Finite(100).effective(10), None);
        assert_eq!(Radius::Infinity.effective(10), None);
        assert_eq!(Radius::Finite(0).effective(10), Some(0));
        // On tiny graphs every radius is unbounded-equivalent.
        assert_eq!(Radius::Finite(0).effective(1), None);
    }
}
