//! Cross-module properties over the enumerated sweep, plus randomized
//! round-trip checks.

use proptest::prelude::*;

use plat4::cobordism::reduce_to_positive;
use plat4::dga::{differential, GenId};
use plat4::fillability::theorem1_verdict;
use plat4::front::{build_front, Sign};
use plat4::linearization::{enumerate_augmentations, linearize, ungraded_augmentation_exists};
use plat4::rulings::has_normal_ruling;
use plat4::tuple::{enumerate_knot_tuples, enumerate_tuples, Band, PlatTuple};

#[test]
fn ruling_exists_iff_ungraded_augmentation_exists() {
    for t in enumerate_knot_tuples(10) {
        let f = build_front(&t);
        let o = f.knot_orientation().unwrap();
        let d = differential(&f, &o);
        assert_eq!(has_normal_ruling(&f), ungraded_augmentation_exists(&d), "{t}");
    }
}

#[test]
fn graded_augmentations_imply_rulings_but_not_conversely() {
    let mut witness = false;
    for t in enumerate_knot_tuples(8) {
        let f = build_front(&t);
        let o = f.knot_orientation().unwrap();
        let d = differential(&f, &o);
        let graded = !enumerate_augmentations(&d).is_empty();
        let ruling = has_normal_ruling(&f);
        assert!(!graded || ruling, "graded augmentation without a ruling on {t}");
        witness |= ruling && !graded;
    }
    // A negative long band can carry a ruling whose switches sit at odd
    // degree, leaving no graded augmentation.
    assert!(witness, "expected a ruling-without-graded-augmentation witness");
    let t: PlatTuple = "[1,(0,3),2]".parse().unwrap();
    let f = build_front(&t);
    let d = differential(&f, &f.knot_orientation().unwrap());
    assert!(has_normal_ruling(&f));
    assert!(enumerate_augmentations(&d).is_empty());
    assert!(ungraded_augmentation_exists(&d));
}

#[test]
fn right_cusps_are_never_boundaries() {
    for t in enumerate_knot_tuples(8) {
        let f = build_front(&t);
        let o = f.knot_orientation().unwrap();
        let d = differential(&f, &o);
        for eps in enumerate_augmentations(&d) {
            let complex = linearize(&d, &eps).unwrap();
            for (row, id) in complex.degree1.iter().enumerate() {
                if matches!(id, GenId::RightCusp(_)) {
                    assert!(
                        !complex.d_zero_to_one.column_space_contains(1 << row),
                        "right cusp in the image on {t}"
                    );
                }
            }
        }
    }
}

#[test]
fn no_adjacent_positive_bands_in_knots() {
    for t in enumerate_knot_tuples(9) {
        let f = build_front(&t);
        let o = f.knot_orientation().unwrap();
        let signs = f.band_report(&o).signs();
        assert!(
            signs.windows(2).all(|w| w != [Sign::Positive, Sign::Positive]),
            "{t}"
        );
    }
}

#[test]
fn sign_propagation_parity_rule() {
    // Across an internal negative band, the neighbouring bands share a sign
    // exactly when the negative band has an even crossing count.
    for t in enumerate_knot_tuples(9) {
        let f = build_front(&t);
        let o = f.knot_orientation().unwrap();
        let report = f.band_report(&o);
        let bands = &report.bands;
        for i in 1..bands.len() - 1 {
            if bands[i].sign != Sign::Negative {
                continue;
            }
            let same = bands[i - 1].sign == bands[i + 1].sign;
            assert_eq!(same, bands[i].crossings % 2 == 0, "{t} at band {}", i + 1);
        }
    }
}

#[test]
fn positivity_reduction_is_monotone_and_bounded() {
    for t in enumerate_knot_tuples(9) {
        if !theorem1_verdict(&t).unwrap().fillable {
            continue;
        }
        let tr = reduce_to_positive(&t).unwrap();
        assert!(tr.steps.len() <= t.total_crossings() as usize, "{t}");
        let mut last = u32::MAX;
        for step in &tr.steps {
            assert!(step.negatives_after < step.negatives_before, "{t}");
            assert!(step.negatives_before <= last, "{t}");
            last = step.negatives_after;
        }
        assert_eq!(tr.steps.last().map_or(0, |s| s.negatives_after), 0, "{t}");
    }
}

#[test]
fn linearized_differential_squares_to_zero() {
    for t in enumerate_knot_tuples(8) {
        let f = build_front(&t);
        let o = f.knot_orientation().unwrap();
        let d = differential(&f, &o);
        for eps in enumerate_augmentations(&d) {
            let c = linearize(&d, &eps).unwrap();
            assert!(c.d_one_to_zero.multiply(&c.d_zero_to_one).is_zero(), "{t}");
            assert!(c.d_zero_to_one.multiply(&c.d_one_to_zero).is_zero(), "{t}");
        }
    }
}

#[test]
fn enumeration_streams_are_canonical() {
    // Enumeration respects the bound, contains no duplicates and is ordered
    // by total crossing count.
    let all = enumerate_tuples(9);
    let mut seen = std::collections::HashSet::new();
    let mut last_total = 0;
    for t in &all {
        assert!(t.total_crossings() <= 9);
        assert!(seen.insert(t.clone()), "duplicate {t}");
        assert!(t.total_crossings() >= last_total, "ordering broken at {t}");
        last_total = t.total_crossings();
    }
}

// ---- randomized round-trips ----

fn band_strategy(center: bool) -> BoxedStrategy<Band> {
    if center {
        (1u32..=5).prop_map(Band::Center).boxed()
    } else {
        (0u32..=4, 0u32..=4)
            .prop_filter("side bands need a crossing", |(u, l)| u + l > 0)
            .prop_map(|(upper, lower)| Band::Side { upper, lower })
            .boxed()
    }
}

fn tuple_strategy() -> impl Strategy<Value = PlatTuple> {
    (0usize..=3).prop_flat_map(|half| {
        let len = 2 * half + 1;
        let bands: Vec<BoxedStrategy<Band>> =
            (0..len).map(|i| band_strategy(i % 2 == 0)).collect();
        bands.prop_map(|b| PlatTuple::new(b).expect("generated bands are canonical"))
    })
}

proptest! {
    #[test]
    fn parse_render_round_trip(t in tuple_strategy()) {
        let text = t.to_string();
        let parsed: PlatTuple = text.parse().unwrap();
        prop_assert_eq!(&parsed, &t);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn front_rebuilds_its_tuple(t in tuple_strategy()) {
        prop_assert_eq!(build_front(&t).reconstruct_tuple(), t);
    }

    #[test]
    fn crossing_signs_are_orientation_symmetric(t in tuple_strategy()) {
        let f = build_front(&t);
        for o in f.orientations() {
            prop_assert_eq!(f.crossing_signs(&o), f.crossing_signs(&o.reversed()));
        }
    }

    #[test]
    fn reflection_preserves_component_count_and_signs(t in tuple_strategy()) {
        let f = build_front(&t);
        let r = build_front(&t.reflected());
        prop_assert_eq!(f.component_count(), r.component_count());
        if f.component_count() == 1 {
            let signs: Vec<Sign> = f.band_report(&f.knot_orientation().unwrap()).signs();
            let reflected: Vec<Sign> = r.band_report(&r.knot_orientation().unwrap()).signs();
            prop_assert_eq!(signs, reflected);
        }
    }
}
