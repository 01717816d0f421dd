//! The Chekanov-Eliashberg differential of a plat-form 4-plat front over Z/2.
//!
//! Generators are the crossings and the two right cusps, graded mod 2 by 0
//! for positive crossings and 1 for negative crossings and right cusps. The
//! differential counts embedded admissible disks: one positive corner at the
//! originating crossing or right cusp (the rightmost point), negative corners
//! at crossings, terminating at a left cusp.
//!
//! Disks are enumerated by a right-to-left sweep tracking the pair of strand
//! positions carrying the upper and lower boundary. At each crossing touching
//! a boundary position the search either passes through along the strand or
//! records a negative corner; a corner is possible only where the disk sits
//! in the wedge below (upper boundary) or above (lower boundary) the crossing
//! point. The disk closes when the boundary pair reaches a left-cusp pair.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::front::{FrontDiagram, Orientation, Sign};

/// Which right cusp, by the strand pair it closes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Cusp {
    /// Positions 0,1.
    Upper,
    /// Positions 2,3.
    Lower,
}

/// Identifier of a DGA generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenId {
    /// Crossing by 0-based x-order index.
    Crossing(usize),
    RightCusp(Cusp),
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenId::Crossing(i) => write!(f, "a{}", i + 1),
            GenId::RightCusp(Cusp::Upper) => write!(f, "c1"),
            GenId::RightCusp(Cusp::Lower) => write!(f, "c2"),
        }
    }
}

impl Serialize for GenId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A graded generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub id: GenId,
    /// Mod-2 degree.
    pub degree: u8,
}

/// One generator per crossing (in x-order) and per right cusp.
pub fn generators(front: &FrontDiagram, orientation: &Orientation) -> Vec<Generator> {
    let signs = front.crossing_signs(orientation);
    let mut gens: Vec<Generator> = signs
        .iter()
        .enumerate()
        .map(|(i, s)| Generator {
            id: GenId::Crossing(i),
            degree: if *s == Sign::Positive { 0 } else { 1 },
        })
        .collect();
    gens.push(Generator { id: GenId::RightCusp(Cusp::Upper), degree: 1 });
    gens.push(Generator { id: GenId::RightCusp(Cusp::Lower), degree: 1 });
    gens
}

/// An admissible disk, recorded by its corner word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiskWord {
    pub origin: GenId,
    /// Negative corners, counterclockwise from the origin: upper boundary
    /// right to left, then lower boundary left to right.
    pub corners: Vec<usize>,
    /// Left cusp the disk terminates at; `None` for the formal cusp disk
    /// carrying the constant term of a right cusp.
    pub closes_at: Option<Cusp>,
}

/// All admissible disks originating at `origin`. Right cusps additionally
/// yield the formal corner-free disk for their constant term. Duplicate words
/// from distinct disks are kept; the differential cancels them mod 2.
pub fn enumerate_disks(front: &FrontDiagram, origin: GenId) -> Vec<DiskWord> {
    let mut disks = Vec::new();
    let (start_index, upper, lower) = match origin {
        GenId::Crossing(i) => {
            let slot = front.crossings()[i].slot;
            (i, slot, slot + 1)
        }
        GenId::RightCusp(Cusp::Upper) => {
            disks.push(DiskWord { origin, corners: Vec::new(), closes_at: None });
            (front.crossing_count(), 0, 1)
        }
        GenId::RightCusp(Cusp::Lower) => {
            disks.push(DiskWord { origin, corners: Vec::new(), closes_at: None });
            (front.crossing_count(), 2, 3)
        }
    };
    let mut upper_corners = Vec::new();
    let mut lower_corners = Vec::new();
    search(front, origin, start_index, upper, lower, &mut upper_corners, &mut lower_corners, &mut disks);
    disks
}

#[allow(clippy::too_many_arguments)]
fn search(
    front: &FrontDiagram,
    origin: GenId,
    index: usize,
    upper: usize,
    lower: usize,
    upper_corners: &mut Vec<usize>,
    lower_corners: &mut Vec<usize>,
    disks: &mut Vec<DiskWord>,
) {
    debug_assert!(upper < lower);
    if index == 0 {
        let closes_at = match (upper, lower) {
            (0, 1) => Some(Cusp::Upper),
            (2, 3) => Some(Cusp::Lower),
            _ => None,
        };
        if let Some(cusp) = closes_at {
            let mut corners = upper_corners.clone();
            corners.extend(lower_corners.iter().rev());
            disks.push(DiskWord { origin, corners, closes_at: Some(cusp) });
        }
        return;
    }
    let i = index - 1;
    let k = front.crossings()[i].slot;
    if upper == k && lower == k + 1 {
        // Both boundary paths would meet at the crossing.
        return;
    }
    if upper == k {
        // Pass through: the boundary strand descends.
        search(front, origin, i, k + 1, lower, upper_corners, lower_corners, disks);
    } else if upper == k + 1 {
        search(front, origin, i, k, lower, upper_corners, lower_corners, disks);
        upper_corners.push(i);
        search(front, origin, i, upper, lower, upper_corners, lower_corners, disks);
        upper_corners.pop();
    } else if lower == k {
        search(front, origin, i, upper, k + 1, upper_corners, lower_corners, disks);
        lower_corners.push(i);
        search(front, origin, i, upper, lower, upper_corners, lower_corners, disks);
        lower_corners.pop();
    } else if lower == k + 1 {
        search(front, origin, i, upper, k, upper_corners, lower_corners, disks);
    } else {
        // Crossing disjoint from the boundary or interior to the disk.
        search(front, origin, i, upper, lower, upper_corners, lower_corners, disks);
    }
}

/// A word in the crossing generators.
pub type DiffWord = Vec<usize>;

/// Image of one generator under the differential.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    /// Coefficient of the empty word 1.
    pub constant: bool,
    /// Nonempty words, mod 2 (duplicates cancelled), canonically ordered.
    pub words: Vec<DiffWord>,
}

/// The differential of the front's DGA together with generator grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Differential {
    pub generators: Vec<Generator>,
    pub entries: BTreeMap<GenId, DiffEntry>,
}

impl Differential {
    pub fn degree(&self, id: GenId) -> u8 {
        self.generators.iter().find(|g| g.id == id).expect("unknown generator").degree
    }

    pub fn crossing_degree(&self, index: usize) -> u8 {
        self.degree(GenId::Crossing(index))
    }

    pub fn word_degree(&self, word: &[usize]) -> u8 {
        word.iter().map(|&i| self.crossing_degree(i)).sum::<u8>() % 2
    }

    pub fn entry(&self, id: GenId) -> &DiffEntry {
        &self.entries[&id]
    }

    /// Stable JSON form: generator id to words of generator ids, plus the
    /// explicit constant-term flag.
    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<serde_json::Value> = self
            .generators
            .iter()
            .map(|g| serde_json::json!({ "id": g.id.to_string(), "degree": g.degree }))
            .collect();
        let mut entries = serde_json::Map::new();
        for (id, entry) in &self.entries {
            let words: Vec<Vec<String>> = entry
                .words
                .iter()
                .map(|w| w.iter().map(|&i| GenId::Crossing(i).to_string()).collect())
                .collect();
            entries.insert(
                id.to_string(),
                serde_json::json!({ "constant": entry.constant, "words": words }),
            );
        }
        serde_json::json!({ "generators": gens, "differential": entries })
    }
}

/// Differential from exhaustive disk enumeration: crossings sum their disks,
/// right cusps additionally carry the constant term via the formal disk.
pub fn differential(front: &FrontDiagram, orientation: &Orientation) -> Differential {
    let gens = generators(front, orientation);
    let mut entries = BTreeMap::new();
    for g in &gens {
        let mut constant = false;
        let mut words: BTreeMap<DiffWord, bool> = BTreeMap::new();
        for disk in enumerate_disks(front, g.id) {
            if disk.corners.is_empty() {
                constant ^= true;
            } else {
                *words.entry(disk.corners).or_default() ^= true;
            }
        }
        let words = words.into_iter().filter(|(_, odd)| *odd).map(|(w, _)| w).collect();
        entries.insert(g.id, DiffEntry { constant, words });
    }
    Differential { generators: gens, entries }
}

/// Words of the squared differential that fail to cancel; empty iff d^2 = 0.
pub fn d_squared_violations(d: &Differential) -> Vec<(GenId, DiffWord)> {
    let mut out = Vec::new();
    for (id, entry) in &d.entries {
        let mut acc: BTreeMap<DiffWord, bool> = BTreeMap::new();
        for word in &entry.words {
            for (pos, &letter) in word.iter().enumerate() {
                let sub = &d.entries[&GenId::Crossing(letter)];
                let prefix = &word[..pos];
                let suffix = &word[pos + 1..];
                if sub.constant {
                    let mut s = prefix.to_vec();
                    s.extend_from_slice(suffix);
                    *acc.entry(s).or_default() ^= true;
                }
                for sub_word in &sub.words {
                    let mut s = prefix.to_vec();
                    s.extend_from_slice(sub_word);
                    s.extend_from_slice(suffix);
                    *acc.entry(s).or_default() ^= true;
                }
            }
        }
        out.extend(acc.into_iter().filter(|(_, odd)| *odd).map(|(w, _)| (*id, w)));
    }
    out
}

/// Degree-drop violations: words of `d a` whose degree is not `|a| - 1` mod 2.
pub fn degree_violations(d: &Differential) -> Vec<(GenId, DiffWord)> {
    let mut out = Vec::new();
    for (id, entry) in &d.entries {
        let expected = (d.degree(*id) + 1) % 2;
        if entry.constant && expected != 0 {
            out.push((*id, Vec::new()));
        }
        for word in &entry.words {
            if d.word_degree(word) != expected {
                out.push((*id, word.clone()));
            }
        }
    }
    out
}
