//! The band criterion for exact orientable fillability and the obstruction
//! battery, with a consistency check between the two.
//!
//! The criterion: a 4-plat knot is fillable iff every negative band has at
//! most two crossings and every internal band has at least two. Each battery
//! obstruction firing certifies non-fillability on its own; none firing
//! certifies nothing by itself. At desk scale the two decisions must agree;
//! a mismatch is flagged `INCONSISTENT` and means an implementation bug.

use serde::Serialize;
use thiserror::Error;

use crate::dga::differential;
use crate::front::{build_front, BandReport, FrontDiagram, Sign};
use crate::linearization::{
    enumerate_augmentations, fundamental_class_obstruction, linearize, seidel_dimension_check,
};
use crate::rulings::has_normal_ruling;
use crate::tuple::PlatTuple;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FillabilityError {
    #[error("not a knot: the front closes into {components} components")]
    NotAKnot { components: usize },
}

/// Why a band violates the criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationRule {
    NegativeBandTooLong,
    InternalBandTooShort,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// 1-based band index.
    pub band: usize,
    pub rule: ViolationRule,
}

/// Verdict of the band criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Verdict {
    pub fillable: bool,
    pub violations: Vec<Violation>,
}

/// Structural facts that hold for every fillable knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureChecks {
    /// Consecutive bands strictly alternate in sign.
    pub alternating_signs: bool,
    /// Any negative first/last band has exactly one crossing.
    pub external_negative_singles: bool,
}

/// Per-obstruction outcomes; `true` means the obstruction fires and the knot
/// cannot be fillable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Battery {
    #[serde(rename = "not-a-knot")]
    pub not_a_knot: bool,
    #[serde(rename = "rotation-nonzero")]
    pub rotation_nonzero: bool,
    #[serde(rename = "no-normal-ruling")]
    pub no_normal_ruling: bool,
    #[serde(rename = "no-augmentation")]
    pub no_augmentation: bool,
    #[serde(rename = "seidel-dimension-fails-for-all-augmentations")]
    pub seidel_fails_for_all: bool,
    #[serde(rename = "fundamental-class-fires")]
    pub fundamental_class_fires: bool,
}

impl Battery {
    pub fn any_fires(&self) -> bool {
        self.not_a_knot
            || self.rotation_nonzero
            || self.no_normal_ruling
            || self.no_augmentation
            || self.seidel_fails_for_all
            || self.fundamental_class_fires
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Consistency {
    Consistent,
    /// The criterion and the battery disagree; an implementation bug.
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FillabilityReport {
    pub theorem1: Theorem1Verdict,
    pub battery: Battery,
    pub structure: StructureChecks,
    pub consistency: Consistency,
}

fn verdict_from_report(report: &BandReport) -> Theorem1Verdict {
    let n = report.bands.len();
    let mut violations = Vec::new();
    for b in &report.bands {
        if b.sign == Sign::Negative && b.crossings > 2 {
            violations.push(Violation { band: b.index, rule: ViolationRule::NegativeBandTooLong });
        }
        if b.index > 1 && b.index < n && b.crossings < 2 {
            violations.push(Violation { band: b.index, rule: ViolationRule::InternalBandTooShort });
        }
    }
    Theorem1Verdict { fillable: violations.is_empty(), violations }
}

/// The band criterion: fillable iff every negative band has at most two
/// crossings and every internal band at least two. Knots only.
pub fn theorem1_verdict(tuple: &PlatTuple) -> Result<Theorem1Verdict, FillabilityError> {
    let front = build_front(tuple);
    let orientation = front
        .knot_orientation()
        .map_err(|_| FillabilityError::NotAKnot { components: front.component_count() })?;
    Ok(verdict_from_report(&front.band_report(&orientation)))
}

pub fn structural_checks(tuple: &PlatTuple) -> Result<StructureChecks, FillabilityError> {
    let front = build_front(tuple);
    let orientation = front
        .knot_orientation()
        .map_err(|_| FillabilityError::NotAKnot { components: front.component_count() })?;
    let report = front.band_report(&orientation);
    Ok(structure_from_report(&report))
}

fn structure_from_report(report: &BandReport) -> StructureChecks {
    let signs = report.signs();
    let alternating_signs = signs.windows(2).all(|w| w[0] != w[1]);
    let external_ok = |b: &crate::front::BandInfo| b.sign == Sign::Positive || b.crossings == 1;
    let external_negative_singles =
        external_ok(report.bands.first().unwrap()) && external_ok(report.bands.last().unwrap());
    StructureChecks { alternating_signs, external_negative_singles }
}

/// Run all six obstructions on a knot front.
fn battery_for_knot(front: &FrontDiagram) -> Battery {
    let orientation = front.knot_orientation().expect("battery_for_knot needs a knot");
    let (tb, rotation) = front.classical_invariants().unwrap();
    let d = differential(front, &orientation);
    let augmentations = enumerate_augmentations(&d);
    let seidel_fails_for_all = augmentations.iter().all(|eps| {
        let complex = linearize(&d, eps).expect("enumerated augmentation must linearize");
        !seidel_dimension_check(&complex, tb)
    });
    Battery {
        not_a_knot: false,
        rotation_nonzero: rotation != 0,
        no_normal_ruling: !has_normal_ruling(front),
        no_augmentation: augmentations.is_empty(),
        seidel_fails_for_all,
        fundamental_class_fires: fundamental_class_obstruction(&d, &augmentations),
    }
}

/// The partial battery that is still computable for links.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkBattery {
    #[serde(rename = "not-a-knot")]
    pub not_a_knot: bool,
    #[serde(rename = "no-normal-ruling")]
    pub no_normal_ruling: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("not a knot: the front closes into {components} components")]
    NotAKnot { components: usize, battery: LinkBattery },
}

pub fn obstruction_battery(tuple: &PlatTuple) -> Result<Battery, FillabilityError> {
    let front = build_front(tuple);
    if front.component_count() != 1 {
        return Err(FillabilityError::NotAKnot { components: front.component_count() });
    }
    Ok(battery_for_knot(&front))
}

/// Full report: criterion, battery, structural checks and their consistency.
/// Links get the orientation-free part of the battery in the error.
pub fn classify(tuple: &PlatTuple) -> Result<FillabilityReport, ClassifyError> {
    let front = build_front(tuple);
    if front.component_count() != 1 {
        return Err(ClassifyError::NotAKnot {
            components: front.component_count(),
            battery: LinkBattery { not_a_knot: true, no_normal_ruling: !has_normal_ruling(&front) },
        });
    }
    let orientation = front.knot_orientation().unwrap();
    let report = front.band_report(&orientation);
    let theorem1 = verdict_from_report(&report);
    let battery = battery_for_knot(&front);
    let structure = structure_from_report(&report);
    let consistency = if theorem1.fillable == !battery.any_fires() {
        Consistency::Consistent
    } else {
        Consistency::Inconsistent
    };
    Ok(FillabilityReport { theorem1, battery, structure, consistency })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(s: &str) -> PlatTuple {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_is_fillable() {
        let v = theorem1_verdict(&tuple("[3]")).unwrap();
        assert!(v.fillable && v.violations.is_empty());
        let s = structural_checks(&tuple("[3]")).unwrap();
        assert!(s.alternating_signs && s.external_negative_singles);
    }

    #[test]
    fn internal_single_band_not_fillable() {
        let v = theorem1_verdict(&tuple("[1,(1,0),1]")).unwrap();
        assert!(!v.fillable);
        assert_eq!(
            v.violations,
            [Violation { band: 2, rule: ViolationRule::InternalBandTooShort }]
        );
    }

    #[test]
    fn twist_knot_fillable() {
        let v = theorem1_verdict(&tuple("[1,(2,1),1]")).unwrap();
        assert!(v.fillable);
        let s = structural_checks(&tuple("[1,(2,1),1]")).unwrap();
        assert!(s.alternating_signs && s.external_negative_singles);
    }

    #[test]
    fn links_are_rejected() {
        assert_eq!(
            theorem1_verdict(&tuple("[2]")).unwrap_err(),
            FillabilityError::NotAKnot { components: 2 }
        );
        let err = classify(&tuple("[2]")).unwrap_err();
        let ClassifyError::NotAKnot { components, battery } = err;
        assert_eq!(components, 2);
        assert!(battery.not_a_knot);
        // The positive clasp link does carry a normal ruling.
        assert!(!battery.no_normal_ruling);
    }

    #[test]
    fn ruling_obstruction_fires_alone() {
        let b = obstruction_battery(&tuple("[1,(1,0),1]")).unwrap();
        assert!(b.no_normal_ruling);
        assert!(!b.rotation_nonzero);
    }

    #[test]
    fn trefoil_battery_clear() {
        let b = obstruction_battery(&tuple("[3]")).unwrap();
        assert!(!b.any_fires());
    }

    #[test]
    fn rotation_obstruction_example() {
        let b = obstruction_battery(&tuple("[2,(1,0),1]")).unwrap();
        assert!(b.rotation_nonzero);
    }

    #[test]
    fn negative_long_band_fires_fundamental_class() {
        let b = obstruction_battery(&tuple("[1,(1,0),3]")).unwrap();
        assert!(b.fundamental_class_fires);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&tuple("[3]")).unwrap();
        assert!(r.theorem1.fillable);
        assert_eq!(r.consistency, Consistency::Consistent);

        let r = classify(&tuple("[1,(1,0),1]")).unwrap();
        assert!(!r.theorem1.fillable);
        assert!(r.battery.no_normal_ruling);
        assert_eq!(r.consistency, Consistency::Consistent);

        // Negative band with more than two crossings in the figure tuple.
        let r = classify(&tuple("[3,(6,2),2,(2,0),4]")).unwrap();
        assert!(!r.theorem1.fillable);
        assert_eq!(
            r.theorem1.violations,
            [Violation { band: 2, rule: ViolationRule::NegativeBandTooLong }]
        );
        assert_eq!(r.consistency, Consistency::Consistent);
    }
}
