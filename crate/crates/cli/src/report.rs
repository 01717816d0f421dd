//! The per-tuple analysis report: every invariant the library computes,
//! assembled into one stable JSON document (or a lossy text view).

use anyhow::{bail, Result};
use serde::Serialize;

use plat4::cobordism::{build_filling, reduce_to_positive, PositivityTranscript, Transcript};
use plat4::dga::{differential, Generator};
use plat4::fillability::{classify, ClassifyError, Consistency, FillabilityReport, LinkBattery};
use plat4::front::{build_front, BandInfo};
use plat4::linearization::{enumerate_augmentations, linearize};
use plat4::rulings::enumerate_rulings;
use plat4::tuple::PlatTuple;

/// Keep exact analysis to desk scale; the augmentation search is exponential
/// in the positive crossing count.
const MAX_ANALYZE_CROSSINGS: u32 = 24;

#[derive(Serialize)]
pub struct Totals {
    pub crossings: u32,
    pub components: usize,
}

#[derive(Serialize)]
pub struct Classical {
    pub tb: i64,
    pub rotation: i64,
}

#[derive(Serialize)]
pub struct RulingSummary {
    pub exists: bool,
    pub count: usize,
    /// Sorted 1-based switch indices per ruling; omitted above 100 rulings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub switch_sets: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
pub struct DgaSummary {
    pub generators: Vec<Generator>,
    pub differential: serde_json::Value,
}

#[derive(Serialize)]
pub struct AugmentationSummary {
    pub count: usize,
    /// Bitstrings over all generators in x-order.
    pub augmentations: Vec<String>,
    /// (dim LCH_0, dim LCH_1) per augmentation, in the same order.
    pub dims: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct Transcripts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filling: Option<Transcript>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positivity: Option<PositivityTranscript>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub tuple: String,
    pub totals: Totals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classical: Option<Classical>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bands: Option<Vec<BandInfo>>,
    pub rulings: RulingSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dga: Option<DgaSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmentations: Option<AugmentationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fillability: Option<FillabilityReport>,
    /// The orientation-free battery entries, reported for links.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub link_battery: Option<LinkBattery>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transcripts: Option<Transcripts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub consistency: Option<Consistency>,
}

pub fn analyze(tuple: &PlatTuple, with_transcripts: bool) -> Result<AnalysisReport> {
    if tuple.total_crossings() > MAX_ANALYZE_CROSSINGS {
        bail!(
            "tuple has {} crossings; exact analysis is limited to {MAX_ANALYZE_CROSSINGS}",
            tuple.total_crossings()
        );
    }
    let front = build_front(tuple);
    let rulings = enumerate_rulings(&front);
    let ruling_summary = RulingSummary {
        exists: !rulings.is_empty(),
        count: rulings.len(),
        switch_sets: (rulings.len() <= 100)
            .then(|| rulings.iter().map(|r| r.switch_indices_1based()).collect()),
    };

    let mut report = AnalysisReport {
        tuple: tuple.to_string(),
        totals: Totals {
            crossings: tuple.total_crossings(),
            components: front.component_count(),
        },
        classical: None,
        bands: None,
        rulings: ruling_summary,
        dga: None,
        augmentations: None,
        fillability: None,
        link_battery: None,
        transcripts: None,
        consistency: None,
    };

    match classify(tuple) {
        Err(ClassifyError::NotAKnot { battery, .. }) => {
            report.link_battery = Some(battery);
            return Ok(report);
        }
        Ok(fillability) => {
            let orientation = front.knot_orientation().unwrap();
            let (tb, rotation) = front.classical_invariants().unwrap();
            report.classical = Some(Classical { tb, rotation });
            report.bands = Some(front.band_report(&orientation).bands);

            let d = differential(&front, &orientation);
            let augmentations = enumerate_augmentations(&d);
            let dims = augmentations
                .iter()
                .map(|eps| linearize(&d, eps).expect("enumerated augmentation").dims)
                .collect();
            report.augmentations = Some(AugmentationSummary {
                count: augmentations.len(),
                augmentations: augmentations.iter().map(|a| a.bitstring(&d)).collect(),
                dims,
            });
            report.dga = Some(DgaSummary {
                generators: plat4::dga::generators(&front, &orientation),
                differential: d.to_json(),
            });

            if with_transcripts && fillability.theorem1.fillable {
                report.transcripts = Some(Transcripts {
                    filling: build_filling(tuple).ok(),
                    positivity: reduce_to_positive(tuple).ok(),
                });
            }
            report.consistency = Some(fillability.consistency);
            report.fillability = Some(fillability);
        }
    }
    Ok(report)
}

pub fn to_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn to_text(report: &AnalysisReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "tuple       {}", report.tuple);
    let _ = writeln!(
        out,
        "totals      {} crossings, {} component(s)",
        report.totals.crossings, report.totals.components
    );
    if let Some(c) = &report.classical {
        let _ = writeln!(out, "classical   tb = {}, rotation = {}", c.tb, c.rotation);
    }
    if let Some(bands) = &report.bands {
        let _ = writeln!(out, "bands       idx  sign  kind    class           crossings");
        for b in bands {
            let _ = writeln!(
                out,
                "            {:>3}  {:>4}  {:<6}  {:<14}  {}{}",
                b.index,
                match b.sign {
                    plat4::front::Sign::Positive => "+",
                    plat4::front::Sign::Negative => "-",
                },
                if b.center { "center" } else { "side" },
                format!("{:?}", b.class),
                b.crossings,
                if b.internal { "  (internal)" } else { "" },
            );
        }
    }
    let _ = writeln!(
        out,
        "rulings     {} normal ruling(s){}",
        report.rulings.count,
        match &report.rulings.switch_sets {
            Some(sets) if !sets.is_empty() => format!(
                ", switches {}",
                sets.iter()
                    .map(|s| format!("{s:?}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            _ => String::new(),
        }
    );
    if let Some(a) = &report.augmentations {
        let mut dims = a.dims.clone();
        dims.sort();
        dims.dedup();
        let _ = writeln!(
            out,
            "dga         {} graded augmentation(s), LCH dims {:?}",
            a.count, dims
        );
    }
    if let Some(f) = &report.fillability {
        let _ = writeln!(
            out,
            "fillable    {}{}",
            f.theorem1.fillable,
            if f.theorem1.violations.is_empty() {
                String::new()
            } else {
                format!(
                    "  (violations: {})",
                    f.theorem1
                        .violations
                        .iter()
                        .map(|v| format!("band {} {:?}", v.band, v.rule))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            }
        );
        let b = &f.battery;
        let fired: Vec<&str> = [
            (b.not_a_knot, "not-a-knot"),
            (b.rotation_nonzero, "rotation-nonzero"),
            (b.no_normal_ruling, "no-normal-ruling"),
            (b.no_augmentation, "no-augmentation"),
            (b.seidel_fails_for_all, "seidel-dimension"),
            (b.fundamental_class_fires, "fundamental-class"),
        ]
        .iter()
        .filter(|(fires, _)| *fires)
        .map(|(_, name)| *name)
        .collect();
        let _ = writeln!(
            out,
            "battery     {}",
            if fired.is_empty() { "all clear".to_string() } else { fired.join(", ") }
        );
    }
    if let Some(t) = &report.transcripts {
        if let Some(filling) = &t.filling {
            let a = filling.accounting;
            let _ = writeln!(
                out,
                "filling     {} moves: {} zero-handle(s), {} one-handle(s), euler characteristic {}",
                filling.moves.len(),
                a.zero_handles,
                a.one_handles,
                a.euler_characteristic
            );
        }
        if let Some(p) = &t.positivity {
            let _ = writeln!(
                out,
                "positivity  {} step(s) down to {} positive crossings",
                p.steps.len(),
                p.final_positive_crossings
            );
        }
    }
    if let Some(c) = report.consistency {
        let _ = writeln!(out, "consistency {c:?}");
        if c == Consistency::Inconsistent {
            let _ = writeln!(out, "warning: criterion and battery disagree; this is a bug");
        }
    }
    out
}
