//! SVG rendering of fronts and of filling transcripts, frame by frame.
//! Uniform event spacing; the drawing carries no semantics beyond the
//! combinatorics.

use std::fmt::Write;

use plat4::cobordism::{Piece, Transcript};
use plat4::front::build_front;
use plat4::tuple::PlatTuple;

const DX: f64 = 44.0;
const STRAND_GAP: f64 = 36.0;
const CUSP_DEPTH: f64 = 26.0;
const MARGIN: f64 = 16.0;

fn strand_y(position: usize) -> f64 {
    MARGIN + 10.0 + position as f64 * STRAND_GAP
}

fn front_height() -> f64 {
    strand_y(3) + 10.0 + MARGIN
}

fn front_width(crossings: usize) -> f64 {
    2.0 * (MARGIN + CUSP_DEPTH) + (crossings + 1) as f64 * DX
}

/// Draw a plat-closed front with the given crossing slots into `out`,
/// translated by (x0, y0); returns the width used.
fn draw_front(out: &mut String, slots: &[usize], x0: f64, y0: f64, dashed: bool) -> f64 {
    let left = x0 + MARGIN + CUSP_DEPTH;
    let style = if dashed {
        r##"fill="none" stroke="#444" stroke-dasharray="5,4" stroke-width="2""##
    } else {
        r##"fill="none" stroke="#153a66" stroke-width="2""##
    };

    // Track every strand's position through the crossing sequence.
    let mut tracks: Vec<Vec<usize>> = (0..4).map(|p| vec![p]).collect();
    let mut occupant = [0usize, 1, 2, 3];
    for &slot in slots {
        occupant.swap(slot, slot + 1);
        for (strand, track) in tracks.iter_mut().enumerate() {
            let here = occupant.iter().position(|&s| s == strand).unwrap();
            track.push(here);
        }
    }

    let right = left + (slots.len() + 1) as f64 * DX;
    for (strand, track) in tracks.iter().enumerate() {
        let start_pair = strand / 2;
        let end = *track.last().unwrap();
        let left_tip_y = y0 + (strand_y(2 * start_pair) + strand_y(2 * start_pair + 1)) / 2.0;
        let right_tip_y = y0 + (strand_y(2 * (end / 2)) + strand_y(2 * (end / 2) + 1)) / 2.0;
        let mut path = String::new();
        let _ = write!(
            path,
            "M {:.1} {:.1} Q {:.1} {:.1} {:.1} {:.1}",
            left - CUSP_DEPTH,
            left_tip_y,
            left - CUSP_DEPTH / 2.0,
            y0 + strand_y(track[0]),
            left,
            y0 + strand_y(track[0]),
        );
        for (i, &pos) in track.iter().enumerate().skip(1) {
            let _ = write!(path, " L {:.1} {:.1}", left + i as f64 * DX, y0 + strand_y(pos));
        }
        let _ = write!(path, " L {right:.1} {:.1}", y0 + strand_y(end));
        let _ = write!(
            path,
            " Q {:.1} {:.1} {:.1} {right_tip_y:.1}",
            right + CUSP_DEPTH / 2.0,
            y0 + strand_y(end),
            right + CUSP_DEPTH,
        );
        let _ = writeln!(out, r#"  <path d="{path}" {style}/>"#);
    }
    front_width(slots.len())
}

fn draw_unknot(out: &mut String, x0: f64, y0: f64) -> f64 {
    let cy = y0 + front_height() / 2.0;
    let _ = writeln!(
        out,
        r##"  <ellipse cx="{:.1}" cy="{cy:.1}" rx="30" ry="18" fill="none" stroke="#153a66" stroke-width="2"/>"##,
        x0 + MARGIN + 30.0
    );
    2.0 * MARGIN + 60.0
}

fn draw_label(out: &mut String, x: f64, y: f64, text: &str) {
    let _ = writeln!(
        out,
        r##"  <text x="{x:.1}" y="{y:.1}" font-family="monospace" font-size="12" fill="#333">{text}</text>"##
    );
}

fn draw_piece(out: &mut String, piece: &Piece, x0: f64, y0: f64) -> f64 {
    match piece {
        Piece::Unknot => draw_unknot(out, x0, y0),
        Piece::Partial { target, built } => {
            let slots: Vec<usize> =
                build_front(target).crossings()[..*built].iter().map(|c| c.slot).collect();
            draw_front(out, &slots, x0, y0, false)
        }
        Piece::Plat { tuple } => {
            let slots: Vec<usize> = build_front(tuple).crossings().iter().map(|c| c.slot).collect();
            draw_front(out, &slots, x0, y0, false)
        }
        Piece::JoinReady { base, rest, .. } => {
            let slots: Vec<usize> = build_front(base).crossings().iter().map(|c| c.slot).collect();
            let w1 = draw_front(out, &slots, x0, y0, false);
            let slots: Vec<usize> = build_front(rest).crossings().iter().map(|c| c.slot).collect();
            w1 + draw_front(out, &slots, x0 + w1, y0, false)
        }
        Piece::HalfJoined { target } => {
            let slots: Vec<usize> =
                build_front(target).crossings().iter().map(|c| c.slot).collect();
            let w = draw_front(out, &slots, x0, y0, true);
            draw_label(out, x0 + MARGIN, y0 + front_height() - 4.0, "joining");
            w
        }
        Piece::Sketch(info) => {
            let _ = writeln!(
                out,
                r##"  <rect x="{:.1}" y="{:.1}" width="130" height="{:.1}" fill="none" stroke="#888" stroke-dasharray="3,3"/>"##,
                x0 + MARGIN,
                y0 + MARGIN,
                front_height() - 2.0 * MARGIN
            );
            draw_label(out, x0 + MARGIN + 8.0, y0 + front_height() / 2.0 - 8.0, "sketch");
            draw_label(
                out,
                x0 + MARGIN + 8.0,
                y0 + front_height() / 2.0 + 10.0,
                &format!("w={} rc={} c={}", info.writhe, info.right_cusps, info.components),
            );
            130.0 + 2.0 * MARGIN
        }
    }
}

fn document(body: &str, width: f64, height: f64) -> String {
    format!(
        concat!(
            r#"<?xml version="1.0" encoding="UTF-8"?>"#,
            "\n",
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#,
            "\n{body}</svg>\n"
        ),
        w = width,
        h = height,
        body = body
    )
}

/// A single front as a standalone SVG document.
pub fn front_svg(tuple: &PlatTuple) -> String {
    let slots: Vec<usize> = build_front(tuple).crossings().iter().map(|c| c.slot).collect();
    let mut body = String::new();
    let _ = writeln!(body, r#"  <g id="front">"#);
    let width = draw_front(&mut body, &slots, 0.0, 6.0, false);
    draw_label(&mut body, MARGIN, front_height() + 2.0, &tuple.to_string());
    let _ = writeln!(body, "  </g>");
    document(&body, width, front_height() + 18.0)
}

/// One frame per transcript move, stacked vertically, starting from the
/// empty diagram.
pub fn transcript_svg(transcript: &Transcript) -> String {
    let frame_h = front_height() + 26.0;
    let mut body = String::new();
    let mut max_width: f64 = 240.0;

    let mut frames: Vec<(String, Vec<Piece>)> = vec![("(empty)".into(), Vec::new())];
    for (mv, state) in transcript.moves.iter().zip(&transcript.snapshots) {
        let label = match mv {
            plat4::cobordism::Move::ZeroHandle => "0-handle".to_string(),
            plat4::cobordism::Move::OneHandle { .. } => "1-handle".to_string(),
            plat4::cobordism::Move::Isotopy { .. } => "isotopy".to_string(),
        };
        frames.push((label, state.clone()));
    }

    for (i, (label, state)) in frames.iter().enumerate() {
        let y0 = i as f64 * frame_h;
        let _ = writeln!(body, r#"  <g id="frame-{i}">"#);
        draw_label(&mut body, MARGIN, y0 + 14.0, &format!("{i}: {label}"));
        let mut x = 0.0;
        for piece in state {
            x += draw_piece(&mut body, piece, x, y0 + 16.0);
        }
        max_width = max_width.max(x);
        let _ = writeln!(body, "  </g>");
    }
    document(&body, max_width, frames.len() as f64 * frame_h)
}
