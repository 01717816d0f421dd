//! Batch enumeration with every cross-module claim asserted per knot tuple.

use plat4::cobordism::{build_filling, reduce_to_positive, validate_transcript};
use plat4::dga::differential;
use plat4::fillability::{classify, Consistency};
use plat4::front::build_front;
use plat4::linearization::{enumerate_augmentations, linearize, ungraded_augmentation_exists};
use plat4::rulings::has_normal_ruling;
use plat4::tuple::{enumerate_tuples, PlatTuple};

pub struct Outcome {
    pub tuple: String,
    pub is_knot: bool,
    pub fillable: bool,
    pub issues: Vec<String>,
}

pub struct Summary {
    pub tuples: usize,
    pub knots: usize,
    pub links: usize,
    pub fillable: usize,
    pub unfillable: usize,
    pub outcomes_with_issues: Vec<Outcome>,
}

pub fn check_tuple(tuple: &PlatTuple) -> Outcome {
    let front = build_front(tuple);
    if front.component_count() != 1 {
        return Outcome {
            tuple: tuple.to_string(),
            is_knot: false,
            fillable: false,
            issues: Vec::new(),
        };
    }
    let mut issues = Vec::new();

    let report = classify(tuple).expect("knot classifies");
    if report.consistency != Consistency::Consistent {
        issues.push("criterion and battery disagree".into());
    }
    let fillable = report.theorem1.fillable;

    match build_filling(tuple) {
        Ok(transcript) => {
            if !fillable {
                issues.push("builder filled a tuple the criterion rejects".into());
            }
            if let Err(e) = validate_transcript(&transcript, tuple) {
                issues.push(format!("transcript invalid: {e}"));
            }
        }
        Err(_) if fillable => issues.push("builder failed on a fillable tuple".into()),
        Err(_) => {}
    }

    if fillable {
        if !report.structure.alternating_signs {
            issues.push("fillable knot without alternating band signs".into());
        }
        if !report.structure.external_negative_singles {
            issues.push("fillable knot with a non-single external negative band".into());
        }
        match reduce_to_positive(tuple) {
            Ok(tr) => {
                if tr.steps.last().is_some_and(|s| s.negatives_after != 0) {
                    issues.push("positivity reduction left negative crossings".into());
                }
            }
            Err(e) => issues.push(format!("positivity reduction failed: {e}")),
        }
    }

    let orientation = front.knot_orientation().unwrap();
    let d = differential(&front, &orientation);
    let augmentations = enumerate_augmentations(&d);
    let mut dims: Vec<(usize, usize)> = augmentations
        .iter()
        .map(|eps| linearize(&d, eps).expect("augmentation linearizes").dims)
        .collect();
    dims.sort();
    dims.dedup();
    if dims.len() > 1 {
        issues.push(format!("multiple linearized homology profiles: {dims:?}"));
    }

    if has_normal_ruling(&front) != ungraded_augmentation_exists(&d) {
        issues.push("normal ruling and ungraded augmentation existence disagree".into());
    }

    Outcome { tuple: tuple.to_string(), is_knot: true, fillable, issues }
}

pub fn run(max_crossings: u32, workers: usize) -> Summary {
    let tuples = enumerate_tuples(max_crossings);
    let outcomes: Vec<Outcome> = if workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool");
        pool.install(|| {
            use rayon::prelude::*;
            tuples.par_iter().map(check_tuple).collect()
        })
    } else {
        tuples.iter().map(check_tuple).collect()
    };

    let mut summary = Summary {
        tuples: outcomes.len(),
        knots: 0,
        links: 0,
        fillable: 0,
        unfillable: 0,
        outcomes_with_issues: Vec::new(),
    };
    for outcome in outcomes {
        if outcome.is_knot {
            summary.knots += 1;
            if outcome.fillable {
                summary.fillable += 1;
            } else {
                summary.unfillable += 1;
            }
        } else {
            summary.links += 1;
        }
        if !outcome.issues.is_empty() {
            summary.outcomes_with_issues.push(outcome);
        }
    }
    summary
}
