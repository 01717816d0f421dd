//! Reduction of fillable knot diagrams to positive diagrams.
//!
//! A fillable knot's negative crossings come in external single bands and
//! internal double bands. The transcript removes a leading or trailing
//! negative single by sliding it off the cusps, then eliminates each internal
//! negative double left to right by the applicable planar-isotopy case. Each
//! step records its before/after crossing counts; the validator checks only
//! that arithmetic, so the negative count decreases strictly to zero.

use serde::Serialize;

use crate::front::{build_front, Sign};
use crate::tuple::{Band, PlatTuple};

use super::CobordismError;

/// Which local picture eliminates an internal negative double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PositivityCase {
    /// Non-split side double.
    SideDouble,
    /// Split side double, one crossing per sub-band.
    SplitDouble,
    /// Center double whose neighbouring crossings sit on the same side.
    CenterSameSide,
    /// Center double whose neighbouring crossings sit on opposite sides.
    CenterOppositeSide,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum PositivityStepKind {
    /// Slide off the single crossing of a negative external band.
    ClaspRemoval { leading: bool },
    /// Eliminate the two crossings of an internal negative double.
    DoubleElimination { band: usize, case: PositivityCase },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityStep {
    pub kind: PositivityStepKind,
    pub positives_before: u32,
    pub negatives_before: u32,
    pub positives_after: u32,
    pub negatives_after: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityTranscript {
    pub tuple: PlatTuple,
    pub steps: Vec<PositivityStep>,
    /// Crossings of the final all-positive diagram.
    pub final_positive_crossings: u32,
}

/// Side a sub-band crossing sits on, for classifying center-double cases:
/// true for upper. Canonical order emits upper crossings before lower ones.
fn adjacent_side(band: &Band, first: bool) -> bool {
    match *band {
        Band::Center(_) => unreachable!("neighbours of a center band are side bands"),
        Band::Side { upper, lower } => {
            if first {
                upper > 0
            } else {
                lower == 0
            }
        }
    }
}

/// Reduce a fillable knot to an all-positive diagram, case by case.
pub fn reduce_to_positive(tuple: &PlatTuple) -> Result<PositivityTranscript, CobordismError> {
    let front = build_front(tuple);
    let orientation = front
        .knot_orientation()
        .map_err(|e| CobordismError::NotFillable(e.to_string()))?;
    let report = front.band_report(&orientation);
    let verdict_ok = report.bands.iter().enumerate().all(|(i, b)| {
        let negative_ok = b.sign == Sign::Positive || b.crossings <= 2;
        let internal_ok = i == 0 || i == tuple.len() - 1 || b.crossings >= 2;
        negative_ok && internal_ok
    });
    if !verdict_ok {
        return Err(CobordismError::NotFillable(format!(
            "{tuple} violates the band criterion"
        )));
    }

    let mut positives = 0u32;
    let mut negatives = 0u32;
    for b in &report.bands {
        match b.sign {
            Sign::Positive => positives += b.crossings,
            Sign::Negative => negatives += b.crossings,
        }
    }

    let mut steps = Vec::new();
    let mut record = |kind: PositivityStepKind, positives: &mut u32, negatives: &mut u32, dn: u32| {
        let step = PositivityStep {
            kind,
            positives_before: *positives,
            negatives_before: *negatives,
            positives_after: *positives,
            negatives_after: *negatives - dn,
        };
        *negatives -= dn;
        steps.push(step);
    };

    let n = report.bands.len();
    let first = &report.bands[0];
    if first.sign == Sign::Negative {
        debug_assert_eq!(first.crossings, 1, "external negative bands of fillable knots are single");
        record(PositivityStepKind::ClaspRemoval { leading: true }, &mut positives, &mut negatives, 1);
    }
    let last = &report.bands[n - 1];
    if n > 1 && last.sign == Sign::Negative {
        debug_assert_eq!(last.crossings, 1);
        record(PositivityStepKind::ClaspRemoval { leading: false }, &mut positives, &mut negatives, 1);
    }

    for (i, b) in report.bands.iter().enumerate() {
        if i == 0 || i == n - 1 || b.sign == Sign::Positive {
            continue;
        }
        debug_assert_eq!(b.crossings, 2, "internal negative bands of fillable knots are double");
        let band = &tuple.bands()[i];
        let case = if band.is_center() {
            let before = adjacent_side(&tuple.bands()[i - 1], false);
            let after = adjacent_side(&tuple.bands()[i + 1], true);
            if before == after {
                PositivityCase::CenterSameSide
            } else {
                PositivityCase::CenterOppositeSide
            }
        } else if band.is_split() {
            PositivityCase::SplitDouble
        } else {
            PositivityCase::SideDouble
        };
        record(
            PositivityStepKind::DoubleElimination { band: i + 1, case },
            &mut positives,
            &mut negatives,
            2,
        );
    }

    assert_eq!(negatives, 0, "reduction must end positive");
    Ok(PositivityTranscript { tuple: tuple.clone(), steps, final_positive_crossings: positives })
}

/// Check the multiset arithmetic of a transcript: counters chain, negatives
/// decrease strictly by the declared amount per step, and the final diagram
/// has no negative crossings.
pub fn validate_positivity(transcript: &PositivityTranscript) -> Result<(), String> {
    let mut previous: Option<&PositivityStep> = None;
    for (i, step) in transcript.steps.iter().enumerate() {
        let expected_drop = match step.kind {
            PositivityStepKind::ClaspRemoval { .. } => 1,
            PositivityStepKind::DoubleElimination { .. } => 2,
        };
        if step.negatives_before - step.negatives_after != expected_drop {
            return Err(format!("step {i} removes the wrong number of negative crossings"));
        }
        if step.positives_after != step.positives_before {
            return Err(format!("step {i} changes the positive crossing count"));
        }
        if let Some(prev) = previous {
            if step.negatives_before != prev.negatives_after
                || step.positives_before != prev.positives_after
            {
                return Err(format!("step {i} does not chain from the previous counters"));
            }
        }
        previous = Some(step);
    }
    if let Some(last) = previous {
        if last.negatives_after != 0 {
            return Err("reduction ends with negative crossings".into());
        }
        if last.positives_after != transcript.final_positive_crossings {
            return Err("final positive count disagrees with the last step".into());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(s: &str) -> PlatTuple {
        s.parse().unwrap()
    }

    #[test]
    fn already_positive_trefoil() {
        let tr = reduce_to_positive(&tuple("[3]")).unwrap();
        assert!(tr.steps.is_empty());
        assert_eq!(tr.final_positive_crossings, 3);
        validate_positivity(&tr).unwrap();
    }

    #[test]
    fn twist_knot_two_clasp_removals() {
        let tr = reduce_to_positive(&tuple("[1,(2,1),1]")).unwrap();
        assert_eq!(tr.steps.len(), 2);
        assert!(matches!(tr.steps[0].kind, PositivityStepKind::ClaspRemoval { leading: true }));
        assert!(matches!(tr.steps[1].kind, PositivityStepKind::ClaspRemoval { leading: false }));
        assert_eq!(tr.final_positive_crossings, 3);
        validate_positivity(&tr).unwrap();
    }

    #[test]
    fn internal_double_cases() {
        let tr = reduce_to_positive(&tuple("[3,(1,1),2]")).unwrap();
        assert_eq!(tr.steps.len(), 1);
        assert!(matches!(
            tr.steps[0].kind,
            PositivityStepKind::DoubleElimination { band: 2, case: PositivityCase::SplitDouble }
        ));
        validate_positivity(&tr).unwrap();

        let tr = reduce_to_positive(&tuple("[3,(2,0),2]")).unwrap();
        assert!(matches!(
            tr.steps[0].kind,
            PositivityStepKind::DoubleElimination { band: 2, case: PositivityCase::SideDouble }
        ));
        validate_positivity(&tr).unwrap();
    }

    #[test]
    fn center_double_side_cases() {
        let center_case = |s: &str| {
            let tr = reduce_to_positive(&tuple(s)).unwrap();
            validate_positivity(&tr).unwrap();
            tr.steps
                .iter()
                .find_map(|step| match step.kind {
                    PositivityStepKind::DoubleElimination { band: 3, case } => Some(case),
                    _ => None,
                })
                .unwrap()
        };
        // Both neighbours put their adjacent crossing on the upper sub-band.
        assert_eq!(center_case("[1,(3,0),2,(2,0),1]"), PositivityCase::CenterSameSide);
        assert_eq!(center_case("[1,(3,0),2,(0,2),1]"), PositivityCase::CenterOppositeSide);
    }

    #[test]
    fn rejects_non_fillable_and_links() {
        assert!(reduce_to_positive(&tuple("[1,(1,0),1]")).is_err());
        assert!(reduce_to_positive(&tuple("[2]")).is_err());
    }
}
