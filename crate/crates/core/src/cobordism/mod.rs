//! Filling transcripts: validated move sequences from the empty link to a
//! target front, and the reduction of fillable knots to positive diagrams.
//!
//! A transcript is a list of 0-handle, 1-handle and isotopy moves replayed
//! over a multiset of diagram descriptors. Handle moves carry sites whose
//! local validity is arithmetic over tuples (a resolved crossing must be
//! positive, a pinch must decompose the target, writhe and cusp counts must
//! balance); isotopy moves rewrite descriptors and are checked at the
//! bookkeeping level only. The accounting identity `euler_characteristic =
//! zero_handles - one_handles`, equal to `-tb` for knots, is enforced on
//! every transcript.
//!
//! The construction peels two bands and one crossing at a time: a target
//! `[b1,b2,b3,...,bn]` splits into the base link `[b1,b2,1]` and the remnant
//! `[b3-1,b4,...,bn]`, rejoined by an isotopy and two saddle handles. Base
//! links are filled from the two-component unlink by resolving positive
//! crossings one at a time; single-band remnants resolve down to the two
//! standard unknots born from 0-handles.

mod positivity;

pub use positivity::{
    reduce_to_positive, validate_positivity, PositivityCase, PositivityStep, PositivityStepKind,
    PositivityTranscript,
};

use serde::Serialize;
use thiserror::Error;

use crate::front::{build_front, Sign};
use crate::tuple::{Band, PlatTuple};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CobordismError {
    #[error("not fillable: {0}")]
    NotFillable(String),
}

/// A diagram descriptor in the replay state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Piece {
    /// The standard unknot (tb = -1).
    Unknot,
    /// The front whose crossings are the first `built` crossings of `target`,
    /// closed off by cusps.
    Partial { target: PlatTuple, built: usize },
    /// A complete plat front.
    Plat { tuple: PlatTuple },
    /// Base and remnant positioned for the two unpinch saddles.
    JoinReady { base: PlatTuple, rest: PlatTuple, target: PlatTuple, case: JoinCase },
    /// After the first of the two unpinch saddles.
    HalfJoined { target: PlatTuple },
    /// A generic front, tracked by its isotopy-invariant bookkeeping.
    Sketch(SketchInfo),
}

/// Bookkeeping data for a generic front descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SketchInfo {
    pub components: u32,
    pub right_cusps: u32,
    pub writhe: i64,
}

impl SketchInfo {
    /// Writhe minus right cusps; invariant under Legendrian isotopy and
    /// raised by exactly one by every 1-handle.
    pub fn tb_total(&self) -> i64 {
        self.writhe - self.right_cusps as i64
    }
}

impl Piece {
    fn sketch_info(&self) -> Option<SketchInfo> {
        match self {
            Piece::Unknot => Some(SketchInfo { components: 1, right_cusps: 1, writhe: 0 }),
            Piece::Sketch(info) => Some(*info),
            _ => None,
        }
    }
}

/// Which inductive-step figure a join follows, by the sign of the target's
/// first band and whether its second band is split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinCase {
    PositiveFirstSplit,
    PositiveFirstPlain,
    NegativeFirstSplit,
    NegativeFirstPlain,
}

impl JoinCase {
    fn of(first_positive: bool, split: bool) -> JoinCase {
        match (first_positive, split) {
            (true, true) => JoinCase::PositiveFirstSplit,
            (true, false) => JoinCase::PositiveFirstPlain,
            (false, true) => JoinCase::NegativeFirstSplit,
            (false, false) => JoinCase::NegativeFirstPlain,
        }
    }

    fn first_positive(self) -> bool {
        matches!(self, JoinCase::PositiveFirstSplit | JoinCase::PositiveFirstPlain)
    }

    fn split(self) -> bool {
        matches!(self, JoinCase::PositiveFirstSplit | JoinCase::NegativeFirstSplit)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PinchStage {
    First,
    Second,
}

/// Site of a 1-handle attachment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "site", rename_all = "kebab-case")]
pub enum HandleSite {
    /// Oriented resolution creating crossing `built_before + 1` of `target`.
    /// At `built_before = 0` the handle joins the two unknots.
    Resolve { target: PlatTuple, built_before: usize },
    /// Oriented resolution adding one crossing to a positive sub-band.
    Grow { before: PlatTuple, after: PlatTuple, band: usize, upper: bool },
    /// One of the two saddles rejoining a pinched base and remnant.
    PinchJoin { target: PlatTuple, stage: PinchStage },
    /// A declared saddle between generic descriptors.
    Saddle { before: SketchInfo, after: SaddleOutcome },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SaddleOutcome {
    Sketch(SketchInfo),
    Plat(PlatTuple),
}

/// A declared Legendrian isotopy, validated at the bookkeeping level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "isotopy", rename_all = "kebab-case")]
pub enum IsotopyMove {
    /// The two standard unknots arranged as a crossed three-band front whose
    /// components are crossingless and have linking number zero.
    UnlinkToCore { core: PlatTuple },
    /// Position the filled base and remnant for the two unpinch saddles.
    ArrangeForJoin { base: PlatTuple, rest: PlatTuple, target: PlatTuple, case: JoinCase },
    /// A declared deformation of a generic front.
    Deform { before: SketchInfo, after: SketchInfo, tag: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "kebab-case")]
pub enum Move {
    ZeroHandle,
    OneHandle { site: HandleSite },
    Isotopy { motion: IsotopyMove },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Accounting {
    pub zero_handles: usize,
    pub one_handles: usize,
    pub euler_characteristic: i64,
}

/// A validated move list from the empty link to the target front, with a
/// state snapshot after every move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transcript {
    pub target: PlatTuple,
    pub moves: Vec<Move>,
    pub snapshots: Vec<Vec<Piece>>,
    pub accounting: Accounting,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid transcript at move {move_index:?}: {reason}")]
pub struct ValidationError {
    /// Index of the first invalid move; `None` for end-state failures.
    pub move_index: Option<usize>,
    pub reason: String,
}

// ---- orientation bookkeeping over tuples ----

/// Band-sign vectors over all orientations of the closed-up front.
fn signatures(tuple: &PlatTuple) -> Vec<Vec<Sign>> {
    let front = build_front(tuple);
    front.orientations().iter().map(|o| front.band_report(o).signs()).collect()
}

fn signed_counts(tuple: &PlatTuple, signs: &[Sign]) -> (i64, i64) {
    let mut pos = 0i64;
    let mut neg = 0i64;
    for (band, sign) in tuple.bands().iter().zip(signs) {
        match sign {
            Sign::Positive => pos += band.crossings() as i64,
            Sign::Negative => neg += band.crossings() as i64,
        }
    }
    (pos, neg)
}

fn count_profiles(tuple: &PlatTuple) -> Vec<(i64, i64)> {
    signatures(tuple).iter().map(|s| signed_counts(tuple, s)).collect()
}

fn has_all_positive_orientation(tuple: &PlatTuple) -> bool {
    signatures(tuple).iter().any(|s| s.iter().all(|x| *x == Sign::Positive))
}

/// A band-sign vector satisfying the fillability form: negative bands with at
/// most two crossings, internal bands with at least two.
fn theorem_form_signature(tuple: &PlatTuple) -> Option<Vec<Sign>> {
    let n = tuple.len();
    signatures(tuple).into_iter().find(|signs| {
        tuple.bands().iter().zip(signs).enumerate().all(|(i, (band, sign))| {
            let negative_ok = *sign == Sign::Positive || band.crossings() <= 2;
            let internal_ok = i == 0 || i == n - 1 || band.crossings() >= 2;
            negative_ok && internal_ok
        })
    })
}

/// Bookkeeping facts certifying the core isotopy: two components, neither
/// crossing itself, with linking number zero.
fn unlink_bookkeeping(core: &PlatTuple) -> Result<(), String> {
    let front = build_front(core);
    let (arc_comp, components) = front.arc_components();
    if components != 2 {
        return Err(format!("core {core} has {components} components, expected 2"));
    }
    let mut occupant = [0usize, 1, 2, 3];
    for c in front.crossings() {
        let (a, b) = (occupant[c.slot], occupant[c.slot + 1]);
        if arc_comp[a] == arc_comp[b] {
            return Err(format!("core {core} has a self-crossing"));
        }
        occupant.swap(c.slot, c.slot + 1);
    }
    let orientation = &front.orientations()[0];
    let signed: i64 = front
        .crossing_signs(orientation)
        .iter()
        .map(|s| if *s == Sign::Positive { 1 } else { -1 })
        .sum();
    if signed != 0 {
        return Err(format!("core {core} has linking number {}", signed / 2));
    }
    Ok(())
}

fn pinch_decomposition(target: &PlatTuple) -> Option<(PlatTuple, PlatTuple)> {
    let bands = target.bands();
    if bands.len() < 3 {
        return None;
    }
    let Band::Center(b3) = bands[2] else { return None };
    if b3 < 2 {
        return None;
    }
    let base = PlatTuple::new(vec![bands[0], bands[1], Band::Center(1)]).ok()?;
    let mut rest_bands = vec![Band::Center(b3 - 1)];
    rest_bands.extend_from_slice(&bands[3..]);
    let rest = PlatTuple::new(rest_bands).ok()?;
    Some((base, rest))
}

// ---- replay ----

fn take(state: &mut Vec<Piece>, what: &str, pred: impl Fn(&Piece) -> bool) -> Result<Piece, String> {
    let index = state
        .iter()
        .position(pred)
        .ok_or_else(|| format!("no {what} available in the current state"))?;
    Ok(state.remove(index))
}

fn apply(state: &mut Vec<Piece>, mv: &Move) -> Result<(), String> {
    match mv {
        Move::ZeroHandle => {
            state.push(Piece::Unknot);
            Ok(())
        }
        Move::OneHandle { site } => apply_handle(state, site),
        Move::Isotopy { motion } => apply_isotopy(state, motion),
    }
}

fn apply_handle(state: &mut Vec<Piece>, site: &HandleSite) -> Result<(), String> {
    match site {
        HandleSite::Resolve { target, built_before } => {
            if !has_all_positive_orientation(target) {
                return Err(format!(
                    "resolution handle on {target}, which has no all-positive orientation"
                ));
            }
            let total = target.total_crossings() as usize;
            if *built_before >= total {
                return Err(format!("{target} has only {total} crossings"));
            }
            if *built_before == 0 {
                take(state, "unknot", |p| *p == Piece::Unknot)?;
                take(state, "unknot", |p| *p == Piece::Unknot)?;
            } else {
                take(state, "partial front", |p| {
                    matches!(p, Piece::Partial { target: t, built } if t == target && *built == *built_before)
                })?;
            }
            let built = built_before + 1;
            state.push(if built == total {
                Piece::Plat { tuple: target.clone() }
            } else {
                Piece::Partial { target: target.clone(), built }
            });
            Ok(())
        }
        HandleSite::Grow { before, after, band, upper } => {
            let expected = grow_tuple(before, *band, *upper)
                .ok_or_else(|| format!("cannot grow band {} of {before}", band + 1))?;
            if expected != *after {
                return Err(format!("grow site mismatch: {before} grows to {expected}, not {after}"));
            }
            let before_sigs = signatures(before);
            let grown_positive = signatures(after)
                .into_iter()
                .any(|s| s[*band] == Sign::Positive && before_sigs.contains(&s));
            if !grown_positive {
                return Err(format!(
                    "grow handle on band {} of {after} is not an oriented resolution",
                    band + 1
                ));
            }
            take(state, "plat front", |p| matches!(p, Piece::Plat { tuple } if tuple == before))?;
            state.push(Piece::Plat { tuple: after.clone() });
            Ok(())
        }
        HandleSite::PinchJoin { target, stage: PinchStage::First } => {
            take(state, "arranged join", |p| {
                matches!(p, Piece::JoinReady { target: t, .. } if t == target)
            })?;
            state.push(Piece::HalfJoined { target: target.clone() });
            Ok(())
        }
        HandleSite::PinchJoin { target, stage: PinchStage::Second } => {
            take(state, "half-joined front", |p| {
                matches!(p, Piece::HalfJoined { target: t } if t == target)
            })?;
            state.push(Piece::Plat { tuple: target.clone() });
            Ok(())
        }
        HandleSite::Saddle { before, after } => {
            take(state, "sketch", |p| p.sketch_info() == Some(*before))?;
            let (outcomes, piece): (Vec<(i64, u32)>, Piece) = match after {
                SaddleOutcome::Sketch(info) => {
                    (vec![(info.tb_total(), info.components)], Piece::Sketch(*info))
                }
                SaddleOutcome::Plat(tuple) => {
                    let components = build_front(tuple).component_count() as u32;
                    let profiles = count_profiles(tuple)
                        .into_iter()
                        .map(|(p, m)| (p - m - 2, components))
                        .collect();
                    (profiles, Piece::Plat { tuple: tuple.clone() })
                }
            };
            let valid = outcomes.iter().any(|(tb_total, components)| {
                *tb_total == before.tb_total() + 1 && components.abs_diff(before.components) == 1
            });
            if !valid {
                return Err("saddle bookkeeping mismatch: needs tb sum +1 and components +-1".into());
            }
            state.push(piece);
            Ok(())
        }
    }
}

fn apply_isotopy(state: &mut Vec<Piece>, motion: &IsotopyMove) -> Result<(), String> {
    match motion {
        IsotopyMove::UnlinkToCore { core } => {
            unlink_bookkeeping(core)?;
            take(state, "unknot", |p| *p == Piece::Unknot)?;
            take(state, "unknot", |p| *p == Piece::Unknot)?;
            state.push(Piece::Plat { tuple: core.clone() });
            Ok(())
        }
        IsotopyMove::ArrangeForJoin { base, rest, target, case } => {
            let (expected_base, expected_rest) = pinch_decomposition(target)
                .ok_or_else(|| format!("{target} does not pinch into a base and remnant"))?;
            if *base != expected_base || *rest != expected_rest {
                return Err(format!(
                    "pinch mismatch: {target} splits into {expected_base} and {expected_rest}"
                ));
            }
            let signs = theorem_form_signature(target).ok_or_else(|| {
                format!("{target} admits no orientation of the fillable form")
            })?;
            let first_positive = signs[0] == Sign::Positive;
            if case.first_positive() != first_positive || case.split() != target.bands()[1].is_split()
            {
                return Err(format!("join case {case:?} does not match {target}"));
            }
            let target_profiles = count_profiles(target);
            let base_profiles = count_profiles(base);
            let rest_profiles = count_profiles(rest);
            let additive = base_profiles.iter().any(|(pb, mb)| {
                rest_profiles.iter().any(|(pr, mr)| {
                    target_profiles.contains(&(pb + pr, mb + mr))
                })
            });
            if !additive {
                return Err(format!(
                    "crossing signs of {base} and {rest} cannot add up to {target}"
                ));
            }
            take(state, "base", |p| matches!(p, Piece::Plat { tuple } if tuple == base))?;
            take(state, "remnant", |p| matches!(p, Piece::Plat { tuple } if tuple == rest))?;
            state.push(Piece::JoinReady {
                base: base.clone(),
                rest: rest.clone(),
                target: target.clone(),
                case: *case,
            });
            Ok(())
        }
        IsotopyMove::Deform { before, after, tag } => {
            take(state, "sketch", |p| p.sketch_info() == Some(*before))?;
            if after.components != before.components || after.tb_total() != before.tb_total() {
                return Err(format!(
                    "isotopy {tag:?} changes invariants: components or writhe minus cusps"
                ));
            }
            state.push(Piece::Sketch(*after));
            Ok(())
        }
    }
}

/// Replay a move list from the empty link, returning the state after every
/// move.
pub fn replay(moves: &[Move]) -> Result<Vec<Vec<Piece>>, ValidationError> {
    let mut state = Vec::new();
    let mut snapshots = Vec::with_capacity(moves.len());
    for (index, mv) in moves.iter().enumerate() {
        apply(&mut state, mv)
            .map_err(|reason| ValidationError { move_index: Some(index), reason })?;
        snapshots.push(state.clone());
    }
    Ok(snapshots)
}

fn accounting_of(moves: &[Move]) -> Accounting {
    let zero_handles = moves.iter().filter(|m| matches!(m, Move::ZeroHandle)).count();
    let one_handles = moves.iter().filter(|m| matches!(m, Move::OneHandle { .. })).count();
    Accounting {
        zero_handles,
        one_handles,
        euler_characteristic: zero_handles as i64 - one_handles as i64,
    }
}

/// Replay the transcript from the empty link and check every move, the final
/// front, the stored snapshots and the accounting identity (tb = one-handles
/// minus zero-handles for knots).
pub fn validate_transcript(transcript: &Transcript, target: &PlatTuple) -> Result<(), ValidationError> {
    let end_error = |reason: String| ValidationError { move_index: None, reason };
    if transcript.target != *target {
        return Err(end_error(format!(
            "transcript targets {}, not {target}",
            transcript.target
        )));
    }
    let snapshots = replay(&transcript.moves)?;
    if !transcript.snapshots.is_empty() && transcript.snapshots != snapshots {
        return Err(end_error("stored snapshots disagree with replay".into()));
    }
    let final_state = snapshots.last().ok_or_else(|| end_error("empty transcript".into()))?;
    let reaches_target = matches!(final_state.as_slice(),
        [Piece::Plat { tuple }] if tuple == target);
    if !reaches_target {
        return Err(end_error(format!("transcript does not end at {target}")));
    }
    let accounting = accounting_of(&transcript.moves);
    if accounting != transcript.accounting {
        return Err(end_error("stored accounting disagrees with the move list".into()));
    }
    let front = build_front(target);
    if front.component_count() == 1 {
        let (tb, _) = front.classical_invariants().unwrap();
        let from_handles = accounting.one_handles as i64 - accounting.zero_handles as i64;
        if tb != from_handles {
            return Err(end_error(format!(
                "genus accounting fails: tb = {tb} but handles give {from_handles}"
            )));
        }
    }
    Ok(())
}

// ---- construction ----

fn grow_tuple(tuple: &PlatTuple, band: usize, upper: bool) -> Option<PlatTuple> {
    let mut bands = tuple.bands().to_vec();
    match bands.get_mut(band)? {
        Band::Center(n) => *n += 1,
        Band::Side { upper: u, lower: l } => {
            if upper {
                *u += 1;
            } else {
                *l += 1;
            }
        }
    }
    PlatTuple::new(bands).ok()
}

/// Minimal positive form of a side band and the sub-band growth steps back
/// up to it (true grows the upper sub-band).
fn shrunk_band(band: &Band) -> (Band, Vec<bool>) {
    match *band {
        Band::Center(_) => unreachable!("only side bands shrink"),
        Band::Side { upper, lower } => {
            if upper > 0 && lower > 0 {
                let steps =
                    (1..upper).map(|_| true).chain((1..lower).map(|_| false)).collect();
                (Band::Side { upper: 1, lower: 1 }, steps)
            } else if upper > 0 {
                let steps = (2..upper).map(|_| true).collect();
                (Band::Side { upper: 2.min(upper), lower: 0 }, steps)
            } else {
                let steps = (2..lower).map(|_| false).collect();
                (Band::Side { upper: 0, lower: 2.min(lower) }, steps)
            }
        }
    }
}

/// Fill a three-band tuple `[b1,b2,1]` from the two-component unlink: the
/// declared core isotopy followed by oriented resolutions growing the
/// positive bands back to size.
fn fill_base(tuple: &PlatTuple, signs: &[Sign]) -> Result<Vec<Move>, CobordismError> {
    let bands = tuple.bands();
    let Band::Center(b1) = bands[0] else { unreachable!() };
    let side = bands[1];

    let mut moves = vec![Move::ZeroHandle, Move::ZeroHandle];
    let mut grows: Vec<(usize, bool)> = Vec::new();
    let core_bands;
    if signs[1] == Sign::Negative {
        // Negative double side band: only the first band grows.
        if side.crossings() != 2 {
            return Err(CobordismError::NotFillable(format!(
                "negative band 2 of {tuple} has {} crossings",
                side.crossings()
            )));
        }
        core_bands = vec![Band::Center(1), side, Band::Center(1)];
        grows.extend((1..b1).map(|_| (0, true)));
    } else {
        // Negative external singles around a positive side band.
        if b1 != 1 {
            return Err(CobordismError::NotFillable(format!(
                "negative first band of {tuple} has {b1} crossings"
            )));
        }
        let (core_side, steps) = shrunk_band(&side);
        if core_side.crossings() < 2 {
            return Err(CobordismError::NotFillable(format!(
                "internal band 2 of {tuple} has one crossing"
            )));
        }
        core_bands = vec![Band::Center(1), core_side, Band::Center(1)];
        grows.extend(steps.into_iter().map(|upper| (1, upper)));
    }
    let core = PlatTuple::new(core_bands).expect("core tuples are canonical");
    unlink_bookkeeping(&core).map_err(CobordismError::NotFillable)?;
    moves.push(Move::Isotopy { motion: IsotopyMove::UnlinkToCore { core: core.clone() } });

    let mut current = core;
    for (band, upper) in grows {
        let next = grow_tuple(&current, band, upper).expect("growth stays canonical");
        moves.push(Move::OneHandle {
            site: HandleSite::Grow { before: current, after: next.clone(), band, upper },
        });
        current = next;
    }
    debug_assert_eq!(current, *tuple);
    Ok(moves)
}

fn fill_piece(tuple: &PlatTuple) -> Result<Vec<Move>, CobordismError> {
    if has_all_positive_orientation(tuple) {
        let total = tuple.total_crossings() as usize;
        let mut moves = vec![Move::ZeroHandle, Move::ZeroHandle];
        moves.extend((0..total).map(|built_before| Move::OneHandle {
            site: HandleSite::Resolve { target: tuple.clone(), built_before },
        }));
        return Ok(moves);
    }
    let signs = theorem_form_signature(tuple).ok_or_else(|| {
        CobordismError::NotFillable(format!(
            "{tuple} violates the band criterion under every orientation"
        ))
    })?;
    let bands = tuple.bands();
    if bands.len() == 1 {
        return Err(CobordismError::NotFillable(format!(
            "single negative band {tuple} admits no resolution filling"
        )));
    }
    if bands.len() == 3 && bands[2] == Band::Center(1) {
        return fill_base(tuple, &signs);
    }
    let (base, rest) = pinch_decomposition(tuple).ok_or_else(|| {
        CobordismError::NotFillable(format!("{tuple} does not pinch into a base and remnant"))
    })?;
    let case = JoinCase::of(signs[0] == Sign::Positive, bands[1].is_split());

    let mut moves = fill_piece(&base)?;
    moves.extend(fill_piece(&rest)?);
    moves.push(Move::Isotopy {
        motion: IsotopyMove::ArrangeForJoin {
            base: base.clone(),
            rest: rest.clone(),
            target: tuple.clone(),
            case,
        },
    });
    moves.push(Move::OneHandle {
        site: HandleSite::PinchJoin { target: tuple.clone(), stage: PinchStage::First },
    });
    moves.push(Move::OneHandle {
        site: HandleSite::PinchJoin { target: tuple.clone(), stage: PinchStage::Second },
    });
    Ok(moves)
}

/// Build a filling transcript for a tuple of the fillable form (knots or
/// links). The result is replay-validated before it is returned.
pub fn build_filling(tuple: &PlatTuple) -> Result<Transcript, CobordismError> {
    let moves = fill_piece(tuple)?;
    let snapshots = replay(&moves)
        .map_err(|e| CobordismError::NotFillable(format!("internal replay failure: {e}")))?;
    let transcript = Transcript {
        target: tuple.clone(),
        moves,
        snapshots,
        accounting: Accounting::default(),
    };
    let transcript = Transcript {
        accounting: accounting_of(&transcript.moves),
        ..transcript
    };
    validate_transcript(&transcript, tuple)
        .map_err(|e| CobordismError::NotFillable(format!("internal validation failure: {e}")))?;
    Ok(transcript)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::build_front;

    fn tuple(s: &str) -> PlatTuple {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_resolution_filling() {
        let tr = build_filling(&tuple("[3]")).unwrap();
        assert_eq!(tr.accounting.zero_handles, 2);
        assert_eq!(tr.accounting.one_handles, 3);
        assert_eq!(tr.accounting.euler_characteristic, -1);
        assert_eq!(tr.moves.len(), 5);
        validate_transcript(&tr, &tuple("[3]")).unwrap();
    }

    #[test]
    fn twist_knot_base_filling() {
        // tb = -1, so the filling has euler characteristic 1 (genus 0).
        let tr = build_filling(&tuple("[1,(2,1),1]")).unwrap();
        assert_eq!(tr.accounting.euler_characteristic, 1);
        assert_eq!(tr.accounting.zero_handles, 2);
        assert_eq!(tr.accounting.one_handles, 1);
        validate_transcript(&tr, &tuple("[1,(2,1),1]")).unwrap();
    }

    #[test]
    fn pinch_recursion_filling() {
        let t = tuple("[3,(1,1),2]");
        let (tb, _) = build_front(&t).classical_invariants().unwrap();
        assert_eq!(tb, 1);
        let tr = build_filling(&t).unwrap();
        assert_eq!(tr.accounting.euler_characteristic, -1);
        validate_transcript(&tr, &t).unwrap();
        assert!(tr.moves.iter().any(|m| matches!(
            m,
            Move::OneHandle { site: HandleSite::PinchJoin { .. } }
        )));
    }

    #[test]
    fn non_fillable_inputs_rejected() {
        assert!(build_filling(&tuple("[1,(1,0),1]")).is_err());
        assert!(build_filling(&tuple("[3,(6,2),2,(2,0),4]")).is_err());
        assert!(build_filling(&tuple("[1,(1,0),3]")).is_err());
    }

    #[test]
    fn orientation_incompatible_handle_is_invalid() {
        // [1,(1,0),1] has negative crossings under its knot orientation, so a
        // resolution handle on it is not an oriented resolution.
        let bad = Move::OneHandle {
            site: HandleSite::Resolve { target: tuple("[1,(1,0),1]"), built_before: 0 },
        };
        let err = replay(&[Move::ZeroHandle, Move::ZeroHandle, bad]).unwrap_err();
        assert_eq!(err.move_index, Some(2));
        assert!(err.reason.contains("all-positive"));
    }

    #[test]
    fn accounting_mismatch_is_invalid() {
        let t = tuple("[3]");
        let mut tr = build_filling(&t).unwrap();
        tr.moves.push(Move::ZeroHandle);
        tr.snapshots.clear();
        assert!(validate_transcript(&tr, &t).is_err());
    }

    #[test]
    fn sketch_transcript_with_one_zero_handle() {
        // A transcript in the shape of the paper-style handle pictures: one
        // 0-handle, declared isotopies, then two saddles into a plat front.
        let t = tuple("[3,(1,1),2]");
        let kinked = SketchInfo { components: 1, right_cusps: 4, writhe: 3 };
        let slid = SketchInfo { components: 1, right_cusps: 4, writhe: 3 };
        let split = SketchInfo { components: 2, right_cusps: 3, writhe: 3 };
        let moves = vec![
            Move::ZeroHandle,
            Move::Isotopy {
                motion: IsotopyMove::Deform {
                    before: SketchInfo { components: 1, right_cusps: 1, writhe: 0 },
                    after: kinked,
                    tag: "stabilizing zigzags".into(),
                },
            },
            Move::Isotopy {
                motion: IsotopyMove::Deform {
                    before: kinked,
                    after: slid,
                    tag: "slide strands across cusps".into(),
                },
            },
            Move::OneHandle {
                site: HandleSite::Saddle { before: slid, after: SaddleOutcome::Sketch(split) },
            },
            Move::OneHandle {
                site: HandleSite::Saddle { before: split, after: SaddleOutcome::Plat(t.clone()) },
            },
        ];
        let snapshots = replay(&moves).unwrap();
        let transcript = Transcript {
            target: t.clone(),
            moves,
            snapshots,
            accounting: Accounting { zero_handles: 1, one_handles: 2, euler_characteristic: -1 },
        };
        validate_transcript(&transcript, &t).unwrap();
    }

    #[test]
    fn core_isotopy_bookkeeping() {
        assert!(unlink_bookkeeping(&tuple("[1,(1,1),1]")).is_ok());
        assert!(unlink_bookkeeping(&tuple("[1,(2,0),1]")).is_ok());
        assert!(unlink_bookkeeping(&tuple("[1,(0,2),1]")).is_ok());
        // A knot is not the two-component unlink.
        assert!(unlink_bookkeeping(&tuple("[3]")).is_err());
        // The clasp link has linking number +-1.
        assert!(unlink_bookkeeping(&tuple("[2]")).is_err());
    }
}
