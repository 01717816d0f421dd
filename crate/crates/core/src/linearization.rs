//! Augmentations and linearized contact homology over GF(2).
//!
//! An augmentation sends every degree-1 generator to 0, some degree-0
//! crossings to 1, and annihilates the differential (the right-cusp equations
//! include their constant term). Twisting by an augmentation linearizes the
//! differential to a map of graded GF(2) vector spaces whose homology
//! dimensions feed the obstruction battery.

use serde::Serialize;
use thiserror::Error;

use crate::dga::{Differential, GenId};
use crate::gf2::Gf2Matrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinearizationError {
    #[error("assignment is not an augmentation: eps(d {0}) = 1")]
    NotAnAugmentation(String),
}

/// A graded augmentation: the set of crossings sent to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Augmentation {
    /// 0-based indices of crossings with value 1; all have degree 0.
    pub ones: Vec<usize>,
}

impl Augmentation {
    pub fn value(&self, id: GenId) -> bool {
        matches!(id, GenId::Crossing(i) if self.ones.contains(&i))
    }

    /// Bitstring over all generators in x-order (crossings then cusps); the
    /// degree-1 entries are always 0.
    pub fn bitstring(&self, d: &Differential) -> String {
        d.generators
            .iter()
            .map(|g| if self.value(g.id) { '1' } else { '0' })
            .collect()
    }
}

fn eval_entry(d: &Differential, id: GenId, values: u64) -> bool {
    let entry = d.entry(id);
    let mut acc = entry.constant;
    for word in &entry.words {
        acc ^= word.iter().all(|&i| values >> i & 1 == 1);
    }
    acc
}

/// All graded augmentations, by brute force over the degree-0 crossings.
pub fn enumerate_augmentations(d: &Differential) -> Vec<Augmentation> {
    let degree_zero: Vec<usize> = d
        .generators
        .iter()
        .filter_map(|g| match g.id {
            GenId::Crossing(i) if g.degree == 0 => Some(i),
            _ => None,
        })
        .collect();
    assert!(degree_zero.len() <= 24, "augmentation search limited to 24 degree-0 generators");
    let ids: Vec<GenId> = d.generators.iter().map(|g| g.id).collect();

    let mut out = Vec::new();
    for mask in 0u32..1 << degree_zero.len() {
        let mut values = 0u64;
        for (bit, &crossing) in degree_zero.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                values |= 1 << crossing;
            }
        }
        if ids.iter().all(|&id| !eval_entry(d, id, values)) {
            let ones = degree_zero
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            out.push(Augmentation { ones });
        }
    }
    out
}

/// Whether any assignment on all generators, ignoring the grading, kills the
/// differential. Pairs with the existence of an ungraded normal ruling;
/// graded augmentations form a strictly smaller class.
pub fn ungraded_augmentation_exists(d: &Differential) -> bool {
    let ids: Vec<GenId> = d.generators.iter().map(|g| g.id).collect();
    let crossings: Vec<usize> = ids
        .iter()
        .filter_map(|id| match id {
            GenId::Crossing(i) => Some(*i),
            GenId::RightCusp(_) => None,
        })
        .collect();
    assert!(crossings.len() <= 24, "ungraded search limited to 24 crossings");
    // Right cusps never occur as letters, so their values are irrelevant to
    // every equation and may be taken to be zero.
    (0u32..1 << crossings.len()).any(|mask| {
        let mut values = 0u64;
        for (bit, &crossing) in crossings.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                values |= 1 << crossing;
            }
        }
        ids.iter().all(|&id| !eval_entry(d, id, values))
    })
}

/// The linearized complex of one augmentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearizedComplex {
    /// Degree-0 generators in x-order (crossings only).
    pub degree0: Vec<GenId>,
    /// Degree-1 generators in x-order (crossings then right cusps).
    pub degree1: Vec<GenId>,
    /// Rows indexed by degree-0 basis, columns by degree-1 basis.
    pub d_one_to_zero: Gf2Matrix,
    /// Rows indexed by degree-1 basis, columns by degree-0 basis.
    pub d_zero_to_one: Gf2Matrix,
    /// (dim LCH_0, dim LCH_1).
    pub dims: (usize, usize),
}

/// Linearize the differential by the augmentation: a word contributes its
/// letter at position i exactly when every other letter is augmented to 1.
pub fn linearize(
    d: &Differential,
    eps: &Augmentation,
) -> Result<LinearizedComplex, LinearizationError> {
    let mut values = 0u64;
    for &i in &eps.ones {
        values |= 1 << i;
    }
    for g in &d.generators {
        if eval_entry(d, g.id, values) {
            return Err(LinearizationError::NotAnAugmentation(g.id.to_string()));
        }
        if d.degree(g.id) == 1 && eps.value(g.id) {
            return Err(LinearizationError::NotAnAugmentation(g.id.to_string()));
        }
    }

    let degree0: Vec<GenId> =
        d.generators.iter().filter(|g| g.degree == 0).map(|g| g.id).collect();
    let degree1: Vec<GenId> =
        d.generators.iter().filter(|g| g.degree == 1).map(|g| g.id).collect();
    let index0 = |id: GenId| degree0.iter().position(|&g| g == id).unwrap();
    let index1 = |id: GenId| degree1.iter().position(|&g| g == id).unwrap();

    let mut d_one_to_zero = Gf2Matrix::zero(degree0.len(), degree1.len());
    let mut d_zero_to_one = Gf2Matrix::zero(degree1.len(), degree0.len());
    for g in &d.generators {
        for word in &d.entry(g.id).words {
            for (pos, &letter) in word.iter().enumerate() {
                let augmented_rest = word
                    .iter()
                    .enumerate()
                    .all(|(j, &l)| j == pos || values >> l & 1 == 1);
                if !augmented_rest {
                    continue;
                }
                let target = GenId::Crossing(letter);
                match (d.degree(g.id), d.degree(target)) {
                    (1, 0) => d_one_to_zero.flip(index0(target), index1(g.id)),
                    (0, 1) => d_zero_to_one.flip(index1(target), index0(g.id)),
                    other => unreachable!("degree drop violated: {other:?}"),
                }
            }
        }
    }

    let rank_into_zero = d_one_to_zero.rank();
    let rank_into_one = d_zero_to_one.rank();
    let null_zero = degree0.len() - rank_into_one;
    let null_one = degree1.len() - rank_into_zero;
    let dims = (null_zero - rank_into_zero, null_one - rank_into_one);

    let complex = LinearizedComplex { degree0, degree1, d_one_to_zero, d_zero_to_one, dims };
    debug_assert!(complex.d_one_to_zero.multiply(&complex.d_zero_to_one).is_zero());
    debug_assert!(complex.d_zero_to_one.multiply(&complex.d_one_to_zero).is_zero());
    Ok(complex)
}

/// The dimension consequence of a filling: dim LCH_1 = 1 and dim LCH_0 is the
/// even number tb + 1 fixed by the filling genus.
pub fn seidel_dimension_check(complex: &LinearizedComplex, tb: i64) -> bool {
    let (dim0, dim1) = complex.dims;
    dim1 == 1 && dim0 % 2 == 0 && dim0 as i64 == tb + 1
}

/// Fundamental-class obstruction: fires when every augmentation leaves some
/// negative crossing that is a cycle but not a boundary. Vacuously fires when
/// no augmentation exists.
pub fn fundamental_class_obstruction(d: &Differential, augmentations: &[Augmentation]) -> bool {
    augmentations.iter().all(|eps| {
        let complex = linearize(d, eps).expect("enumerated augmentation must linearize");
        complex
            .degree1
            .iter()
            .enumerate()
            .filter(|(_, id)| matches!(id, GenId::Crossing(_)))
            .any(|(row, _)| {
                let image_of = complex.d_one_to_zero.columns()[row];
                let is_cycle = image_of == 0;
                let basis_vector = 1u64 << row;
                is_cycle && !complex.d_zero_to_one.column_space_contains(basis_vector)
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::differential;
    use crate::front::build_front;
    use crate::tuple::PlatTuple;

    fn diff(s: &str) -> Differential {
        let f = build_front(&s.parse::<PlatTuple>().unwrap());
        let o = f.knot_orientation().unwrap();
        differential(&f, &o)
    }

    #[test]
    fn trefoil_augmentations() {
        let d = diff("[3]");
        let augs = enumerate_augmentations(&d);
        let mut patterns: Vec<String> =
            augs.iter().map(|a| a.bitstring(&d)[..3].to_string()).collect();
        patterns.sort();
        assert_eq!(patterns, ["001", "011", "100", "110", "111"]);
    }

    #[test]
    fn trefoil_linearization_dims() {
        let d = diff("[3]");
        let eps = Augmentation { ones: vec![0, 1] }; // 110
        let complex = linearize(&d, &eps).unwrap();
        // d1 c1 = a1 and d1 c2 = a1.
        let col_c1 = complex.d_one_to_zero.columns()[0];
        let col_c2 = complex.d_one_to_zero.columns()[1];
        assert_eq!(col_c1, 0b001);
        assert_eq!(col_c2, 0b001);
        assert_eq!(complex.dims, (2, 1));
        assert!(seidel_dimension_check(&complex, 1));

        for eps in enumerate_augmentations(&d) {
            assert_eq!(linearize(&d, &eps).unwrap().dims, (2, 1));
        }
    }

    #[test]
    fn invalid_augmentation_rejected() {
        let d = diff("[3]");
        assert!(linearize(&d, &Augmentation { ones: vec![] }).is_err());
        assert!(linearize(&d, &Augmentation { ones: vec![1] }).is_err());
    }

    #[test]
    fn seidel_check_rejects_bad_dims() {
        let d = diff("[3]");
        let complex = linearize(&d, &Augmentation { ones: vec![0] }).unwrap();
        assert!(seidel_dimension_check(&complex, 1));
        assert!(!seidel_dimension_check(&complex, 2));
        assert!(!seidel_dimension_check(&complex, 3));
    }

    #[test]
    fn no_augmentation_for_internal_single_band() {
        // d c1 = 1 has no solution.
        let d = diff("[1,(1,0),1]");
        assert!(enumerate_augmentations(&d).is_empty());
        assert!(fundamental_class_obstruction(&d, &[]));
    }

    #[test]
    fn twist_knot_has_augmentations() {
        let d = diff("[1,(2,1),1]");
        let augs = enumerate_augmentations(&d);
        assert!(!augs.is_empty());
        assert!(!fundamental_class_obstruction(&d, &augs));
    }

    #[test]
    fn trefoil_fundamental_class_clear() {
        let d = diff("[3]");
        let augs = enumerate_augmentations(&d);
        assert!(!fundamental_class_obstruction(&d, &augs));
    }

    #[test]
    fn augmentations_agree_with_naive_oracle() {
        for s in ["[3]", "[1,(2,1),1]", "[1,(1,0),1]", "[5]", "[2,(1,1),1]"] {
            let d = diff(s);
            let mut brute = naive_augmentations(&d);
            brute.sort();
            let mut fast: Vec<String> =
                enumerate_augmentations(&d).iter().map(|a| a.bitstring(&d)).collect();
            fast.sort();
            assert_eq!(fast, brute, "{s}");
        }
    }

    /// Oracle: every assignment on all generators, filtered for gradedness
    /// and the augmentation equations.
    fn naive_augmentations(d: &Differential) -> Vec<String> {
        let n = d.generators.len();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            let graded = d
                .generators
                .iter()
                .enumerate()
                .all(|(pos, g)| g.degree == 0 || mask >> pos & 1 == 0);
            if !graded {
                continue;
            }
            let eval = |id: GenId| -> bool {
                let entry = d.entry(id);
                let mut acc = entry.constant;
                let value_of = |cross: usize| {
                    let pos = d
                        .generators
                        .iter()
                        .position(|g| g.id == GenId::Crossing(cross))
                        .unwrap();
                    mask >> pos & 1 == 1
                };
                for word in &entry.words {
                    acc ^= word.iter().all(|&i| value_of(i));
                }
                acc
            };
            if d.generators.iter().all(|g| !eval(g.id)) {
                out.push(
                    (0..n).map(|p| if mask >> p & 1 == 1 { '1' } else { '0' }).collect::<String>(),
                );
            }
        }
        out
    }
}
