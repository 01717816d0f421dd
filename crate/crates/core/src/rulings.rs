//! Normal rulings of 4-plat fronts by exhaustive sweep.
//!
//! A ruling pairs the four strand positions into two disks at every slice,
//! starting and ending with the cusp pairing 01|23. Sweeping left to right,
//! a crossing between partner positions kills the branch; otherwise the
//! matching either follows the strands (transverse) or stays put (switch).
//! A switch is normal exactly when the two disks' position intervals are
//! disjoint or nested.

use serde::Serialize;

use crate::front::FrontDiagram;

/// Involution on strand positions 0..4: `matching[p]` is p's disk partner.
pub type Matching = [usize; 4];

/// The cusp pairing at both ends of the front.
pub const CUSP_MATCHING: Matching = [1, 0, 3, 2];

/// A normal ruling, recorded as its switched crossings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ruling {
    /// 0-based indices of switched crossings, ascending.
    pub switches: Vec<usize>,
}

impl Ruling {
    /// Serialized form: sorted 1-based crossing indices.
    pub fn switch_indices_1based(&self) -> Vec<usize> {
        self.switches.iter().map(|i| i + 1).collect()
    }
}

/// Whether a switch at the crossing between `a = slot` and `b = slot + 1` is
/// normal for the current matching: the intervals spanned by the two disks at
/// this slice must be disjoint or nested.
pub fn switch_is_normal(matching: &Matching, slot: usize) -> bool {
    let (a, b) = (slot, slot + 1);
    let i1 = (a.min(matching[a]), a.max(matching[a]));
    let i2 = (b.min(matching[b]), b.max(matching[b]));
    let disjoint = i1.1 < i2.0 || i2.1 < i1.0;
    let nested = (i1.0 < i2.0 && i2.1 < i1.1) || (i2.0 < i1.0 && i1.1 < i2.1);
    disjoint || nested
}

fn conjugate(matching: &Matching, slot: usize) -> Matching {
    let swap = |p: usize| {
        if p == slot {
            slot + 1
        } else if p == slot + 1 {
            slot
        } else {
            p
        }
    };
    let mut out = [0; 4];
    for p in 0..4 {
        out[swap(p)] = swap(matching[p]);
    }
    out
}

/// All normal rulings of the front, in lexicographic order of their switch
/// sets under the sweep (transverse explored before switch).
pub fn enumerate_rulings(front: &FrontDiagram) -> Vec<Ruling> {
    let mut out = Vec::new();
    let mut switches = Vec::new();
    sweep(front, 0, CUSP_MATCHING, &mut switches, &mut |sw| {
        out.push(Ruling { switches: sw.to_vec() })
    });
    out
}

pub fn has_normal_ruling(front: &FrontDiagram) -> bool {
    let mut found = false;
    let mut switches = Vec::new();
    sweep(front, 0, CUSP_MATCHING, &mut switches, &mut |_| found = true);
    found
}

fn sweep(
    front: &FrontDiagram,
    index: usize,
    matching: Matching,
    switches: &mut Vec<usize>,
    accept: &mut impl FnMut(&[usize]),
) {
    let Some(crossing) = front.crossings().get(index) else {
        if matching == CUSP_MATCHING {
            accept(switches);
        }
        return;
    };
    let slot = crossing.slot;
    if matching[slot] == slot + 1 {
        // A crossing between the two paths of one disk is never allowed.
        return;
    }
    sweep(front, index + 1, conjugate(&matching, slot), switches, accept);
    if switch_is_normal(&matching, slot) {
        switches.push(index);
        sweep(front, index + 1, matching, switches, accept);
        switches.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::build_front;
    use crate::tuple::{enumerate_tuples, PlatTuple};

    fn front(s: &str) -> FrontDiagram {
        build_front(&s.parse::<PlatTuple>().unwrap())
    }

    #[test]
    fn normality_table_for_four_strands() {
        // Matchings named by their pairs; crossings by slot.
        let m_01_23: Matching = [1, 0, 3, 2];
        let m_02_13: Matching = [2, 3, 0, 1];
        let m_03_12: Matching = [3, 2, 1, 0];

        // slot 1 (center): 01|23 disjoint, 02|13 interleaved.
        assert!(switch_is_normal(&m_01_23, 1));
        assert!(!switch_is_normal(&m_02_13, 1));
        // slot 0: 02|13 interleaved, 03|12 nested.
        assert!(!switch_is_normal(&m_02_13, 0));
        assert!(switch_is_normal(&m_03_12, 0));
        // slot 2: same by symmetry.
        assert!(!switch_is_normal(&m_02_13, 2));
        assert!(switch_is_normal(&m_03_12, 2));
    }

    #[test]
    fn trefoil_rulings() {
        let rulings = enumerate_rulings(&front("[3]"));
        let mut sets: Vec<Vec<usize>> =
            rulings.iter().map(|r| r.switch_indices_1based()).collect();
        sets.sort();
        assert_eq!(sets, vec![vec![1], vec![1, 2, 3], vec![3]]);
    }

    #[test]
    fn single_crossing_unknot() {
        let rulings = enumerate_rulings(&front("[1]"));
        assert_eq!(rulings.len(), 1);
        assert_eq!(rulings[0].switch_indices_1based(), vec![1]);
    }

    #[test]
    fn internal_single_band_has_no_ruling() {
        assert!(enumerate_rulings(&front("[1,(1,0),1]")).is_empty());
        assert!(!has_normal_ruling(&front("[1,(1,0),1]")));
    }

    #[test]
    fn reflection_preserves_ruling_count() {
        for t in enumerate_tuples(7) {
            let count = enumerate_rulings(&build_front(&t)).len();
            let reflected = enumerate_rulings(&build_front(&t.reflected())).len();
            assert_eq!(count, reflected, "{t}");
        }
    }

    #[test]
    fn sweep_agrees_with_naive_subset_oracle() {
        for t in enumerate_tuples(7) {
            let f = build_front(&t);
            let mut swept: Vec<Vec<usize>> =
                enumerate_rulings(&f).into_iter().map(|r| r.switches).collect();
            swept.sort();
            let mut naive = naive_rulings(&f);
            naive.sort();
            assert_eq!(swept, naive, "{t}");
        }
    }

    /// Oracle: try every subset of crossings as switches and validate the
    /// ruling path conditions directly on the four traced paths.
    fn naive_rulings(f: &FrontDiagram) -> Vec<Vec<usize>> {
        let n = f.crossing_count();
        let mut valid = Vec::new();
        'subsets: for mask in 0u32..1 << n {
            // paths[p] = current position of the path that started at p; the
            // disk of a path is fixed by its starting cusp.
            let mut position: [usize; 4] = [0, 1, 2, 3];
            let disk = |path: usize| path / 2;
            for (i, c) in f.crossings().iter().enumerate() {
                let here = (0..4).find(|&p| position[p] == c.slot).unwrap();
                let there = (0..4).find(|&p| position[p] == c.slot + 1).unwrap();
                if disk(here) == disk(there) {
                    // The two paths of one disk may meet only at cusps.
                    continue 'subsets;
                }
                if mask >> i & 1 == 1 {
                    // Switch: both paths stay at their positions; the two
                    // disks must be disjoint or nested at this slice.
                    let partner = |p: usize| p ^ 1;
                    let span = |p: usize| {
                        let a = position[p];
                        let b = position[partner(p)];
                        (a.min(b), a.max(b))
                    };
                    let i1 = span(here);
                    let i2 = span(there);
                    let disjoint = i1.1 < i2.0 || i2.1 < i1.0;
                    let nested = (i1.0 < i2.0 && i2.1 < i1.1) || (i2.0 < i1.0 && i1.1 < i2.1);
                    if !(disjoint || nested) {
                        continue 'subsets;
                    }
                } else {
                    position.swap(here, there);
                }
            }
            // Each disk's two paths must close on a right cusp together.
            for pair in [[0, 1], [2, 3]] {
                let mut ends = [position[pair[0]], position[pair[1]]];
                ends.sort_unstable();
                if ends != [0, 1] && ends != [2, 3] {
                    continue 'subsets;
                }
            }
            valid.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
        valid
    }
}
