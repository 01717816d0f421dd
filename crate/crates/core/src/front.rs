//! Front diagrams of 4-plat links: the ordered crossing sequence between the
//! two cusp columns, strand tracing, orientations, crossing signs, the band
//! taxonomy and the classical invariants.
//!
//! Strand positions are numbered 0 (top) to 3 (bottom) internally; crossing
//! slots 0..=2 sit between adjacent positions. Serialized forms are 1-based.

use serde::Serialize;
use thiserror::Error;

use crate::tuple::{Band, PlatTuple};

/// A crossing of the front, in x-order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// Slot between strand positions `slot` and `slot + 1` (0-based, 0 = top).
    pub slot: usize,
    /// Index of the band the crossing belongs to (0-based).
    pub band: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrontError {
    #[error("not a knot: the front closes into {components} components")]
    NotAKnot { components: usize },
}

/// Event sequence of a plat-form front. The two left cusps (joining positions
/// 0,1 and 2,3) are an implicit prefix and the two right cusps an implicit
/// suffix; crossings have strictly increasing x given by their index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontDiagram {
    tuple: PlatTuple,
    crossings: Vec<Crossing>,
}

/// Canonical event order: bands left to right; a side band emits its upper
/// sub-band before its lower one. The two sub-bands act on disjoint strand
/// pairs, so the choice only fixes determinism.
pub fn build_front(tuple: &PlatTuple) -> FrontDiagram {
    let mut crossings = Vec::with_capacity(tuple.total_crossings() as usize);
    for (band, b) in tuple.bands().iter().enumerate() {
        match *b {
            Band::Center(n) => {
                crossings.extend((0..n).map(|_| Crossing { slot: 1, band }));
            }
            Band::Side { upper, lower } => {
                crossings.extend((0..upper).map(|_| Crossing { slot: 0, band }));
                crossings.extend((0..lower).map(|_| Crossing { slot: 2, band }));
            }
        }
    }
    FrontDiagram { tuple: tuple.clone(), crossings }
}

/// Direction a spanning arc is traversed: toward the right cusps or the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dir {
    L,
    R,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::L => Dir::R,
            Dir::R => Dir::L,
        }
    }
}

/// Sign of a crossing under a fixed orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// Word of arc directions at a slice, top to bottom.
pub type Word = [Dir; 4];

/// The three classes of orientation words; words in one class give the same
/// crossing signs at corresponding slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WordClass {
    O1,
    O2,
    O3,
}

pub fn word_class(w: Word) -> WordClass {
    use Dir::*;
    match w {
        [L, L, R, R] | [R, R, L, L] => WordClass::O1,
        [L, R, R, L] | [R, L, L, R] => WordClass::O2,
        [L, R, L, R] | [R, L, R, L] => WordClass::O3,
        _ => unreachable!("orientation words carry two letters of each kind"),
    }
}

/// An orientation of the closed-up front: the traversal direction of each of
/// the four spanning arcs, indexed by the arc's left endpoint position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    arc_dirs: [Dir; 4],
}

impl Orientation {
    pub fn arc_dirs(&self) -> [Dir; 4] {
        self.arc_dirs
    }

    pub fn reversed(&self) -> Orientation {
        Orientation { arc_dirs: self.arc_dirs.map(Dir::flip) }
    }
}

impl FrontDiagram {
    pub fn tuple(&self) -> &PlatTuple {
        &self.tuple
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Where each left-cusp strand position arrives at the right cusps.
    pub fn strand_permutation(&self) -> [usize; 4] {
        let mut perm = [0, 1, 2, 3];
        for c in &self.crossings {
            // perm maps start position -> current position; the crossing swaps
            // whichever strands currently sit at slot, slot+1.
            for p in perm.iter_mut() {
                if *p == c.slot {
                    *p = c.slot + 1;
                } else if *p == c.slot + 1 {
                    *p = c.slot;
                }
            }
        }
        perm
    }

    /// Component id of each spanning arc (arcs indexed by left endpoint), and
    /// the number of components of the closed-up front.
    pub fn arc_components(&self) -> ([usize; 4], usize) {
        let perm = self.strand_permutation();
        let mut comp = [usize::MAX; 4];
        let mut count = 0;
        for start in 0..4 {
            if comp[start] != usize::MAX {
                continue;
            }
            // Walk the closure: arc forward, right cusp, arc backward, left
            // cusp, ... until the cycle closes.
            let mut arc = start;
            loop {
                comp[arc] = count;
                let right_partner = perm[arc] ^ 1;
                let backward = (0..4).find(|&a| perm[a] == right_partner).unwrap();
                comp[backward] = count;
                let next = backward ^ 1;
                if next == start {
                    break;
                }
                arc = next;
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.arc_components().1
    }

    /// All orientations with the arc leaving the upper-left cusp at position 0
    /// directed rightward; other components take both directions. A knot has
    /// exactly one.
    pub fn orientations(&self) -> Vec<Orientation> {
        let (comp, count) = self.arc_components();
        let perm = self.strand_permutation();
        let mut out = Vec::with_capacity(1 << (count - 1));
        for choice in 0..(1u32 << (count - 1)) {
            let mut dirs = [None::<Dir>; 4];
            for c in 0..count {
                let rep = (0..4).find(|&a| comp[a] == c).unwrap();
                let dir = if c == 0 {
                    Dir::R
                } else if choice >> (c - 1) & 1 == 0 {
                    Dir::R
                } else {
                    Dir::L
                };
                // Propagate around the component: the traversal turns at each
                // cusp, so arcs alternate between dir and its flip.
                let mut arc = rep;
                loop {
                    dirs[arc] = Some(dir);
                    let right_partner = perm[arc] ^ 1;
                    let backward = (0..4).find(|&a| perm[a] == right_partner).unwrap();
                    if dirs[backward].is_some() {
                        break;
                    }
                    dirs[backward] = Some(dir.flip());
                    let next = backward ^ 1;
                    if dirs[next].is_some() {
                        break;
                    }
                    arc = next;
                }
            }
            out.push(Orientation { arc_dirs: dirs.map(Option::unwrap) });
        }
        out
    }

    /// The orientation of a knot, fixed by directing the arc leaving the
    /// upper-left cusp rightward.
    pub fn knot_orientation(&self) -> Result<Orientation, FrontError> {
        let components = self.component_count();
        if components != 1 {
            return Err(FrontError::NotAKnot { components });
        }
        Ok(self.orientations().pop().unwrap())
    }

    /// Orientation words at every slice: entry `i` is the word left of
    /// crossing `i`; the final entry is the word at the right cusps.
    pub fn slice_words(&self, orientation: &Orientation) -> Vec<Word> {
        let mut word = orientation.arc_dirs;
        let mut words = Vec::with_capacity(self.crossings.len() + 1);
        words.push(word);
        for c in &self.crossings {
            word.swap(c.slot, c.slot + 1);
            words.push(word);
        }
        let last = words.last().unwrap();
        debug_assert!(last[0] != last[1] && last[2] != last[3], "closure word mismatch");
        words
    }

    /// Sign of every crossing: positive when the two letters at its slot agree.
    pub fn crossing_signs(&self, orientation: &Orientation) -> Vec<Sign> {
        let words = self.slice_words(orientation);
        self.crossings
            .iter()
            .zip(&words)
            .map(|(c, w)| {
                if w[c.slot] == w[c.slot + 1] {
                    Sign::Positive
                } else {
                    Sign::Negative
                }
            })
            .collect()
    }

    /// Thurston-Bennequin and rotation numbers of a knot front; the rotation
    /// sign follows the fixed orientation convention.
    pub fn classical_invariants(&self) -> Result<(i64, i64), FrontError> {
        let orientation = self.knot_orientation()?;
        let signs = self.crossing_signs(&orientation);
        let writhe: i64 = signs
            .iter()
            .map(|s| match s {
                Sign::Positive => 1,
                Sign::Negative => -1,
            })
            .sum();
        let tb = writhe - 2;

        let words = self.slice_words(&orientation);
        let left = words[0];
        let right = *words.last().unwrap();
        // A cusp is traversed downward or upward depending on which of its two
        // arcs carries the traversal into it.
        let mut down = 0i64;
        let mut up = 0i64;
        for (upper, lower, left_side) in
            [(left[0], left[1], true), (left[2], left[3], true), (right[0], right[1], false), (right[2], right[3], false)]
        {
            let entering_on_upper = if left_side { upper == Dir::L } else { upper == Dir::R };
            if entering_on_upper {
                down += 1;
            } else {
                debug_assert!(if left_side { lower == Dir::L } else { lower == Dir::R });
                up += 1;
            }
        }
        let rotation = (down - up) / 2;
        Ok((tb, rotation))
    }

    /// Rebuild the canonical tuple from the crossing sequence; inverse of
    /// `build_front` on canonical inputs.
    pub fn reconstruct_tuple(&self) -> PlatTuple {
        let mut bands: Vec<Band> = Vec::new();
        for c in &self.crossings {
            let same_band = c.band + 1 == bands.len();
            match (bands.last_mut(), c.slot, same_band) {
                (Some(Band::Center(n)), 1, true) => *n += 1,
                (Some(Band::Side { upper, .. }), 0, true) => *upper += 1,
                (Some(Band::Side { lower, .. }), 2, true) => *lower += 1,
                (_, 1, _) => bands.push(Band::Center(1)),
                (_, 0, _) => bands.push(Band::Side { upper: 1, lower: 0 }),
                (_, 2, _) => bands.push(Band::Side { upper: 0, lower: 1 }),
                _ => unreachable!(),
            }
        }
        PlatTuple::new(bands).expect("front came from a canonical tuple")
    }
}

/// Taxonomy of bands by crossing count and distribution over sub-bands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BandClass {
    Single,
    Double,
    SplitDouble,
    SplitTriple,
    SplitQuadruple,
    Long,
    Other,
}

/// Per-band data under a fixed orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BandInfo {
    /// 1-based band index.
    pub index: usize,
    pub sign: Sign,
    pub center: bool,
    /// Strictly between the first and last band.
    pub internal: bool,
    pub class: BandClass,
    pub crossings: u32,
    pub upper: u32,
    pub lower: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BandReport {
    pub bands: Vec<BandInfo>,
}

impl BandReport {
    pub fn signs(&self) -> Vec<Sign> {
        self.bands.iter().map(|b| b.sign).collect()
    }
}

pub fn classify_band(band: &Band) -> BandClass {
    let total = band.crossings();
    if band.max_sub_band() >= 3 {
        BandClass::Long
    } else if total == 1 {
        BandClass::Single
    } else if total == 2 {
        if band.is_split() {
            BandClass::SplitDouble
        } else {
            BandClass::Double
        }
    } else if total == 3 && band.is_split() {
        BandClass::SplitTriple
    } else if total == 4 && band.is_split() {
        BandClass::SplitQuadruple
    } else {
        BandClass::Other
    }
}

impl FrontDiagram {
    /// Classify every band under the given orientation. All crossings of a
    /// band share a sign; this is asserted.
    pub fn band_report(&self, orientation: &Orientation) -> BandReport {
        let signs = self.crossing_signs(orientation);
        let n = self.tuple.len();
        let bands = self
            .tuple
            .bands()
            .iter()
            .enumerate()
            .map(|(i, band)| {
                let band_signs: Vec<Sign> = self
                    .crossings
                    .iter()
                    .zip(&signs)
                    .filter(|(c, _)| c.band == i)
                    .map(|(_, s)| *s)
                    .collect();
                let sign = band_signs[0];
                assert!(
                    band_signs.iter().all(|s| *s == sign),
                    "crossings within band {} disagree in sign",
                    i + 1
                );
                let (upper, lower) = match *band {
                    Band::Center(c) => (c, 0),
                    Band::Side { upper, lower } => (upper, lower),
                };
                BandInfo {
                    index: i + 1,
                    sign,
                    center: band.is_center(),
                    internal: i > 0 && i < n - 1,
                    class: classify_band(band),
                    crossings: band.crossings(),
                    upper,
                    lower,
                }
            })
            .collect();
        let report = BandReport { bands };
        if self.component_count() == 1 {
            // Two adjacent positive bands force three spanning arcs with one
            // direction, impossible in a 4-plat.
            debug_assert!(
                report.bands.windows(2).all(|w| !(w[0].sign == Sign::Positive && w[1].sign == Sign::Positive)),
                "adjacent positive bands in a knot front"
            );
        }
        report
    }
}
