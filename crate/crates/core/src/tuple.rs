//! Band tuples encoding 4-plat fronts.
//!
//! A front is written `[b1,(b2u,b2l),b3,...,bn]`: odd positions are center
//! bands (crossings between the two middle strands), even positions are side
//! bands split into an upper and a lower sub-band. Canonical tuples have odd
//! length, every center band nonempty and every side band with at least one
//! crossing in total.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// One entry of a band tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    /// Crossings between the two center strands.
    Center(u32),
    /// Side band, split into upper and lower sub-bands acting on disjoint
    /// strand pairs.
    Side { upper: u32, lower: u32 },
}

impl Band {
    pub fn crossings(&self) -> u32 {
        match *self {
            Band::Center(n) => n,
            Band::Side { upper, lower } => upper + lower,
        }
    }

    pub fn is_center(&self) -> bool {
        matches!(self, Band::Center(_))
    }

    /// Both sub-bands of a side band nonempty.
    pub fn is_split(&self) -> bool {
        matches!(*self, Band::Side { upper, lower } if upper > 0 && lower > 0)
    }

    /// Largest sub-band. A center band is its own sub-band.
    pub fn max_sub_band(&self) -> u32 {
        match *self {
            Band::Center(n) => n,
            Band::Side { upper, lower } => upper.max(lower),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TupleError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid tuple: {0}")]
    Validity(String),
}

/// A validated band tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlatTuple {
    bands: Vec<Band>,
}

impl PlatTuple {
    pub fn new(bands: Vec<Band>) -> Result<Self, TupleError> {
        if bands.is_empty() || bands.len() % 2 == 0 {
            return Err(TupleError::Validity(format!(
                "band list must have odd length, got {}",
                bands.len()
            )));
        }
        for (i, band) in bands.iter().enumerate() {
            let center_position = i % 2 == 0;
            match band {
                Band::Center(n) => {
                    if !center_position {
                        return Err(TupleError::Validity(format!(
                            "position {} must be a side band pair",
                            i + 1
                        )));
                    }
                    if *n == 0 {
                        return Err(TupleError::Validity(format!(
                            "center band {} has no crossings",
                            i + 1
                        )));
                    }
                }
                Band::Side { upper, lower } => {
                    if center_position {
                        return Err(TupleError::Validity(format!(
                            "position {} must be a center band",
                            i + 1
                        )));
                    }
                    if upper + lower == 0 {
                        return Err(TupleError::Validity(format!(
                            "side band {} has no crossings",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(PlatTuple { bands })
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn len(&self) -> usize {
        self.bands.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn total_crossings(&self) -> u32 {
        self.bands.iter().map(Band::crossings).sum()
    }

    /// Top-bottom mirror: swaps the upper and lower sub-band of every side
    /// band. A symmetry of every invariant computed here.
    pub fn reflected(&self) -> PlatTuple {
        let bands = self
            .bands
            .iter()
            .map(|b| match *b {
                Band::Center(n) => Band::Center(n),
                Band::Side { upper, lower } => Band::Side { upper: lower, lower: upper },
            })
            .collect();
        PlatTuple { bands }
    }
}

impl fmt::Display for PlatTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, band) in self.bands.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match *band {
                Band::Center(n) => write!(f, "{n}")?,
                Band::Side { upper, lower } => write!(f, "({upper},{lower})")?,
            }
        }
        write!(f, "]")
    }
}

impl FromStr for PlatTuple {
    type Err = TupleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| TupleError::Syntax("tuple must be enclosed in [ ]".into()))?;
        if inner.is_empty() {
            return Err(TupleError::Validity("tuple has no bands".into()));
        }

        let mut bands = Vec::new();
        let mut rest = inner;
        loop {
            if let Some(tail) = rest.strip_prefix('(') {
                let end = tail
                    .find(')')
                    .ok_or_else(|| TupleError::Syntax("unclosed ( in side band".into()))?;
                let (pair, after) = tail.split_at(end);
                let mut parts = pair.split(',');
                let upper = parse_count(parts.next().unwrap_or(""))?;
                let lower =
                    parse_count(parts.next().ok_or_else(|| {
                        TupleError::Syntax("side band needs two entries".into())
                    })?)?;
                if parts.next().is_some() {
                    return Err(TupleError::Syntax("side band has too many entries".into()));
                }
                bands.push(Band::Side { upper, lower });
                rest = &after[1..];
            } else {
                let end = rest.find(',').unwrap_or(rest.len());
                bands.push(Band::Center(parse_count(&rest[..end])?));
                rest = &rest[end..];
            }
            if rest.is_empty() {
                break;
            }
            rest = rest
                .strip_prefix(',')
                .ok_or_else(|| TupleError::Syntax("expected , between bands".into()))?;
            if rest.is_empty() {
                return Err(TupleError::Syntax("trailing , in tuple".into()));
            }
        }
        PlatTuple::new(bands)
    }
}

fn parse_count(s: &str) -> Result<u32, TupleError> {
    if s.is_empty() {
        return Err(TupleError::Syntax("missing number".into()));
    }
    s.parse::<u32>()
        .map_err(|_| TupleError::Syntax(format!("not a number: {s:?}")))
}

impl Serialize for PlatTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PlatTuple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// All canonical tuples with at most `max_crossings` crossings, each exactly
/// once, ordered by total crossing count, then tuple length, then the
/// per-band order used by `band_candidates`.
pub fn enumerate_tuples(max_crossings: u32) -> Vec<PlatTuple> {
    let mut out = Vec::new();
    for total in 1..=max_crossings {
        let mut len = 1usize;
        // A length-n tuple needs at least one crossing per band.
        while len as u32 <= total {
            let mut prefix = Vec::with_capacity(len);
            extend(&mut prefix, len, total, &mut out);
            len += 2;
        }
    }
    out
}

fn extend(prefix: &mut Vec<Band>, len: usize, remaining: u32, out: &mut Vec<PlatTuple>) {
    let position = prefix.len();
    if position == len {
        if remaining == 0 {
            out.push(PlatTuple { bands: prefix.clone() });
        }
        return;
    }
    let bands_after = (len - position - 1) as u32;
    if remaining < bands_after + 1 {
        return;
    }
    let budget = remaining - bands_after;
    for band in band_candidates(position % 2 == 0, budget) {
        prefix.push(band);
        extend(prefix, len, remaining - band.crossings(), out);
        prefix.pop();
    }
}

/// Candidate bands of each size up to `budget`, smallest first; side bands of
/// equal size ordered by their upper count.
fn band_candidates(center: bool, budget: u32) -> Vec<Band> {
    let mut v = Vec::new();
    for size in 1..=budget {
        if center {
            v.push(Band::Center(size));
        } else {
            for upper in 0..=size {
                v.push(Band::Side { upper, lower: size - upper });
            }
        }
    }
    v
}

/// Tuples from `enumerate_tuples` whose closure is a knot.
pub fn enumerate_knot_tuples(max_crossings: u32) -> Vec<PlatTuple> {
    enumerate_tuples(max_crossings)
        .into_iter()
        .filter(|t| crate::front::build_front(t).component_count() == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> PlatTuple {
        s.parse().unwrap()
    }

    #[test]
    fn parses_figure_tuple() {
        let t = parse("[3,(6,2),2,(2,0),4]");
        assert_eq!(t.len(), 5);
        assert_eq!(t.total_crossings(), 19);
        assert_eq!(t.to_string(), "[3,(6,2),2,(2,0),4]");
    }

    #[test]
    fn parses_minimal_tuple() {
        let t = parse("[3]");
        assert_eq!(t.len(), 1);
        assert_eq!(t.total_crossings(), 3);
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(parse(" [ 3 , ( 6 , 2 ) , 2 , (2,0), 4 ] "), parse("[3,(6,2),2,(2,0),4]"));
    }

    #[test]
    fn rejects_zero_side_band() {
        let err = "[3,(0,0),3]".parse::<PlatTuple>().unwrap_err();
        assert!(matches!(err, TupleError::Validity(_)));
    }

    #[test]
    fn rejects_zero_center_band() {
        assert!(matches!("[0]".parse::<PlatTuple>(), Err(TupleError::Validity(_))));
        assert!(matches!("[1,(1,0),0]".parse::<PlatTuple>(), Err(TupleError::Validity(_))));
    }

    #[test]
    fn rejects_even_length_and_misplaced_bands() {
        assert!(matches!("[1,(1,0)]".parse::<PlatTuple>(), Err(TupleError::Validity(_))));
        assert!(matches!("[(1,0)]".parse::<PlatTuple>(), Err(TupleError::Validity(_))));
        assert!(matches!("[1,2,3]".parse::<PlatTuple>(), Err(TupleError::Validity(_))));
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "3", "[3", "3]", "[3,]", "[,3]", "[3,(1,2]", "[a]", "[1,(1;2),1]"] {
            assert!(matches!(bad.parse::<PlatTuple>(), Err(TupleError::Syntax(_))), "{bad}");
        }
    }

    #[test]
    fn enumeration_small_bounds() {
        let one: Vec<String> = enumerate_tuples(1).iter().map(|t| t.to_string()).collect();
        assert_eq!(one, ["[1]"]);

        let two: Vec<String> = enumerate_tuples(2).iter().map(|t| t.to_string()).collect();
        assert_eq!(two, ["[1]", "[2]"]);

        let three: Vec<String> = enumerate_tuples(3).iter().map(|t| t.to_string()).collect();
        assert!(three.contains(&"[3]".to_string()));
        assert!(three.contains(&"[1,(1,0),1]".to_string()));
        assert!(three.contains(&"[1,(0,1),1]".to_string()));
        assert_eq!(three.len(), 5);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all = enumerate_tuples(8);
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|t| t.total_crossings() <= 8));
    }
}
